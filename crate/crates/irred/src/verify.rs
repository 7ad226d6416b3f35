//! Named verification sweeps over the whole toolkit.
//!
//! Each suite replays one desk-scale check: a self-consistency law of the
//! crystal operators, a closed-form criterion against a brute enumeration, or
//! a certificate sweep against known exception lists. A suite returns a
//! [`SuiteReport`] with the number of items checked, the number of exceptions
//! consumed from those lists, and the failures (expected: none).
//!
//! Reports are deterministic: sweeps iterate partitions in the sorted order
//! produced by the enumerators, and parallel fan-out preserves that order on
//! aggregation, so output is independent of the degree of parallelism.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::branching::{
    half_restriction_exception_lists, half_restriction_exceptional_forms, js3_family,
    js3_family_tags, js_restriction_exceptional, js_truncation, l1_conclusion,
    l1_conclusion_details, l1_exceptions, l200818_pair, reachable, JS3_CASE_IV,
};
use crate::error::Error;
use crate::mullineux::{is_mullineux_fixed, mullineux_crystal, mullineux_map};
use crate::nodes::{
    conormal_nodes, e_tilde, epsilon, f_tilde, is_js, normal_nodes, phi, residue, Node,
};
use crate::partitions::{
    beta, enumerate_p_regular, enumerate_splitting, in_splitting_class, Composition, Partition,
};
use crate::permmod::{invariant_dim, orbit_count, ModuleKind, ModuleSpec, SubgroupDescriptor};
use crate::verdicts::{
    basic_spin_dim, classify, classify_basic_spin_intransitive, classify_point_stabilizer,
    classify_two_point, spin_multiplicity_intransitive, Outcome, RestrictionQuery,
};

/// Outcome of one verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items_checked: usize,
    /// Shortfalls absorbed by a known exception list rather than counted.
    pub exceptions: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            items_checked: 0,
            exceptions: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Optional overrides for a suite's default sweep bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Replaces the suite's default size ceiling where one applies.
    pub max_n: Option<u32>,
    /// Restricts a multi-characteristic sweep to a single p.
    pub p: Option<u32>,
}

impl SuiteOptions {
    fn bound(&self, default: u32) -> u32 {
        self.max_n.unwrap_or(default)
    }

    fn primes(&self, defaults: &[u32]) -> Vec<u32> {
        match self.p {
            Some(p) => vec![p],
            None => defaults.to_vec(),
        }
    }
}

/// A registry entry: stable suite name plus what the sweep establishes.
#[derive(Clone, Copy, Debug)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "crystal-roundtrip",
        description: "f̃ᵢẽᵢ and ẽᵢf̃ᵢ round trips, ε/φ versus reduced-signature counts, \
                      and p-regularity of ẽᵢ outputs over all p-regular partitions",
    },
    SuiteInfo {
        name: "js-parity",
        description: "at p = 2, a 2-regular partition has exactly one normal node if and \
                      only if all its parts share one parity",
    },
    SuiteInfo {
        name: "mullineux-involution",
        description: "the Mullineux map is a size-preserving involution, is the identity \
                      at p = 2, and the symbol and crystal computations agree",
    },
    SuiteInfo {
        name: "mullineux-fixed-points",
        description: "the eleven listed partitions are Mullineux fixed points with exactly \
                      one normal node at p = 3",
    },
    SuiteInfo {
        name: "splitting-enum",
        description: "splitting-class enumeration: the frozen n = 8 class, membership of \
                      the two-row staircase exactly when n ≢ 2 (mod 4), and at least three \
                      rows for every non-spin member",
    },
    SuiteInfo {
        name: "ljs-properties",
        description: "the eight structural properties of the JS truncation λ ↦ λ^JS over \
                      all 2-regular partitions, including reachability of λ^JS from λ",
    },
    SuiteInfo {
        name: "l1",
        description: "size bound |λ^JS| ≥ n/2 + 5 and odd/even row gap ≤ 2 for splitting \
                      partitions at p = 2, even n, against the known exception list",
    },
    SuiteInfo {
        name: "reach-js",
        description: "λ^JS is reachable from λ by normal-node removals and the recorded \
                      witness sequence re-validates step by step",
    },
    SuiteInfo {
        name: "reach-pairs",
        description: "the closed-form partition pair at every admissible (n, k) is \
                      reachable from (n/4+2, n/4+1, n/4−1, n/4−2) with validating witnesses",
    },
    SuiteInfo {
        name: "half-factors",
        description: "at least 3 (p = 2) or 5 (p = 3) distinct factors survive restriction \
                      to half size for splitting partitions, outside the known exceptional \
                      forms and exception lists; exempt shortfalls are reported, not counted",
    },
    SuiteInfo {
        name: "js-factors",
        description: "at least 3 distinct factors k levels down from 2-regular partitions \
                      with a single normal node, 5 ≤ k ≤ n/2, outside the exceptional shape \
                      families; recorded shortfalls are reported, not counted",
    },
    SuiteInfo {
        name: "js3-families",
        description: "every Mullineux-fixed partition with one normal node at p = 3 matches \
                      exactly one of the four shape families",
    },
    SuiteInfo {
        name: "invariants-young",
        description: "fixed-space dimensions of the quotient-of-points and pair modules \
                      under two-block alternating subgroups, with the two known n = 5, \
                      p = 3 deviations disclosed",
    },
    SuiteInfo {
        name: "invariants-wreath",
        description: "the quotient-of-points module has no invariants under wreath \
                      subgroups except when p = 2 and the block count is 2, and the pair \
                      module has a one-dimensional fixed space for blocks of size ≥ 3",
    },
    SuiteInfo {
        name: "orbit-counts",
        description: "two-block subgroups have 2, 3, and 3-or-4 orbits on points, pairs \
                      and triples, and each orbit count equals the fixed-space dimension \
                      of the matching permutation module",
    },
    SuiteInfo {
        name: "spin-dim",
        description: "the power-of-two dimension identity for the basic spin module \
                      across all part decompositions of n",
    },
    SuiteInfo {
        name: "verdict-forms",
        description: "the residue form and the row form of the one-point criterion agree \
                      at p = 2, and the two-point criterion is equivalent to having one \
                      normal node, with the predicted restriction labels",
    },
    SuiteInfo {
        name: "spin-table",
        description: "the two-part spin conditions match the symmetrized irreducibility \
                      predicate and the end-to-end classifier on every (n, k)",
    },
    SuiteInfo {
        name: "small-table",
        description: "the frozen verdict table for every maximal subgroup family at \
                      5 ≤ n ≤ 8 is reproduced by the end-to-end classifier",
    },
];

/// All registered suites in a fixed order.
pub fn suites() -> &'static [SuiteInfo] {
    SUITES
}

/// Runs one named suite with optional bound overrides.
pub fn run_suite(name: &str, opts: SuiteOptions) -> Result<SuiteReport, Error> {
    match name {
        "crystal-roundtrip" => Ok(s_crystal_roundtrip(&opts)),
        "js-parity" => Ok(s_js_parity(&opts)),
        "mullineux-involution" => Ok(s_mullineux_involution(&opts)),
        "mullineux-fixed-points" => Ok(s_mullineux_fixed_points(&opts)),
        "splitting-enum" => Ok(s_splitting_enum(&opts)),
        "ljs-properties" => Ok(s_ljs_properties(&opts)),
        "l1" => Ok(s_l1(&opts)),
        "reach-js" => Ok(s_reach_js(&opts)),
        "reach-pairs" => Ok(s_reach_pairs(&opts)),
        "half-factors" => Ok(s_half_factors(&opts)),
        "js-factors" => Ok(s_js_factors(&opts)),
        "js3-families" => Ok(s_js3_families(&opts)),
        "invariants-young" => Ok(s_invariants_young(&opts)),
        "invariants-wreath" => Ok(s_invariants_wreath(&opts)),
        "orbit-counts" => Ok(s_orbit_counts(&opts)),
        "spin-dim" => Ok(s_spin_dim(&opts)),
        "verdict-forms" => Ok(s_verdict_forms(&opts)),
        "spin-table" => Ok(s_spin_table(&opts)),
        "small-table" => Ok(s_small_table(&opts)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn s_crystal_roundtrip(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("crystal-roundtrip");
    let max_n = opts.bound(25);
    let ps = opts.primes(&[2, 3, 5]);
    rep.notes.push(format!("p ∈ {ps:?}, n ≤ {max_n}"));
    for &p in &ps {
        for n in 1..=max_n {
            for lam in enumerate_p_regular(n, p) {
                rep.items_checked += 1;
                for i in 0..p {
                    let eps = epsilon(&lam, i, p);
                    let ph = phi(&lam, i, p);
                    if eps != normal_nodes(&lam, i, p).len() {
                        rep.failures.push(format!("p={p} {lam:?} i={i}: ε ≠ #normal nodes"));
                    }
                    if ph != conormal_nodes(&lam, i, p).len() {
                        rep.failures.push(format!("p={p} {lam:?} i={i}: φ ≠ #conormal nodes"));
                    }
                    let down = e_tilde(&lam, i, p);
                    if down.is_some() != (eps > 0) {
                        rep.failures.push(format!("p={p} {lam:?} i={i}: ẽ defined iff ε > 0"));
                    }
                    if let Some(mu) = down {
                        if !mu.is_p_regular(p) {
                            rep.failures
                                .push(format!("p={p} {lam:?} i={i}: ẽ output {mu:?} irregular"));
                        }
                        if f_tilde(&mu, i, p).as_ref() != Some(&lam) {
                            rep.failures.push(format!("p={p} {lam:?} i={i}: f̃ᵢẽᵢ ≠ id"));
                        }
                    }
                    let up = f_tilde(&lam, i, p);
                    if up.is_some() != (ph > 0) {
                        rep.failures.push(format!("p={p} {lam:?} i={i}: f̃ defined iff φ > 0"));
                    }
                    if let Some(nu) = up {
                        if !nu.is_p_regular(p) {
                            rep.failures
                                .push(format!("p={p} {lam:?} i={i}: f̃ output {nu:?} irregular"));
                        }
                        if e_tilde(&nu, i, p).as_ref() != Some(&lam) {
                            rep.failures.push(format!("p={p} {lam:?} i={i}: ẽᵢf̃ᵢ ≠ id"));
                        }
                    }
                }
            }
        }
    }
    rep
}

fn s_js_parity(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("js-parity");
    let max_n = opts.bound(30);
    if matches!(opts.p, Some(p) if p != 2) {
        rep.notes.push("p option ignored: the parity criterion is specific to p = 2".into());
    }
    rep.notes.push(format!("2-regular partitions, n ≤ {max_n}"));
    for n in 1..=max_n {
        for lam in enumerate_p_regular(n, 2) {
            rep.items_checked += 1;
            let same_parity = lam.parts().windows(2).all(|w| w[0] % 2 == w[1] % 2);
            if is_js(&lam, 2) != same_parity {
                rep.failures.push(format!(
                    "{lam:?}: single normal node = {}, same parity = {same_parity}",
                    is_js(&lam, 2)
                ));
            }
        }
    }
    rep
}

fn s_mullineux_involution(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("mullineux-involution");
    let max_n = opts.bound(20);
    let ps = opts.primes(&[2, 3, 5]);
    rep.notes.push(format!("p ∈ {ps:?}, n ≤ {max_n}"));
    for &p in &ps {
        for n in 1..=max_n {
            for lam in enumerate_p_regular(n, p) {
                rep.items_checked += 1;
                let m = mullineux_map(&lam, p);
                if m.size() != n {
                    rep.failures.push(format!("p={p} {lam:?}: image size {} ≠ {n}", m.size()));
                }
                if mullineux_map(&m, p) != lam {
                    rep.failures.push(format!("p={p} {lam:?}: map applied twice ≠ id"));
                }
                if p == 2 && m != lam {
                    rep.failures.push(format!("{lam:?}: p = 2 map must be the identity"));
                }
                if mullineux_crystal(&lam, p) != m {
                    rep.failures.push(format!("p={p} {lam:?}: symbol and crystal disagree"));
                }
            }
        }
    }
    rep
}

fn s_mullineux_fixed_points(_opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("mullineux-fixed-points");
    rep.notes.push("the eleven listed partitions, p = 3".into());
    for entry in JS3_CASE_IV {
        let lam = Partition::new(entry.to_vec()).expect("list entries are valid partitions");
        rep.items_checked += 1;
        if !is_mullineux_fixed(&lam, 3) {
            rep.failures.push(format!("{lam:?}: not a Mullineux fixed point at p = 3"));
        }
        if !is_js(&lam, 3) {
            rep.failures.push(format!("{lam:?}: more than one normal node at p = 3"));
        }
    }
    rep
}

fn s_splitting_enum(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("splitting-enum");
    let max_n = opts.bound(40);
    let h_max = max_n.min(30);
    rep.notes.push(format!("two-row membership n ≤ {max_n}; row-count sweep 5 ≤ n ≤ {h_max}"));

    let got: BTreeSet<Partition> = enumerate_splitting(8, 2).into_iter().collect();
    let want: BTreeSet<Partition> = [vec![5, 3], vec![4, 3, 1]]
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect();
    rep.items_checked += 1;
    if got != want {
        rep.failures.push(format!("splitting class at n = 8, p = 2: got {got:?}"));
    }

    for n in 1..=max_n {
        rep.items_checked += 1;
        let member = in_splitting_class(&beta(n), 2);
        if member != (n % 4 != 2) {
            rep.failures
                .push(format!("β_{n} = {:?}: membership {member}, n mod 4 = {}", beta(n), n % 4));
        }
    }

    for p in [2u32, 3] {
        for n in 5..=h_max {
            for lam in enumerate_splitting(n, p) {
                rep.items_checked += 1;
                if p == 2 && n % 4 != 2 && lam == beta(n) {
                    continue;
                }
                if lam.h() < 3 {
                    rep.failures.push(format!("p={p} n={n} {lam:?}: fewer than three rows"));
                }
            }
        }
    }
    rep
}

/// One partition's worth of JS-truncation property checks; returns failure
/// messages. `h` below always denotes the row count of λ^JS.
fn ljs_check(lam: &Partition) -> Vec<String> {
    let mut fails = Vec::new();
    let n = lam.size();
    let t = js_truncation(lam);
    let h_lam = lam.h();
    let h = t.h();

    if (t == *lam) != is_js(lam, 2) {
        fails.push(format!("{lam:?}: fixed point iff single normal node violated"));
    }
    if !reachable(lam, 2, t.size()).contains(&t) {
        fails.push(format!("{lam:?}: λ^JS = {t:?} not reachable"));
    }
    for j in 1..=h_lam {
        let d_lam = lam.part(j) - lam.part(j + 1);
        let d_t = t.part(j).saturating_sub(t.part(j + 1));
        if d_t > 2 * d_lam.div_ceil(2) {
            fails.push(format!("{lam:?} j={j}: step {d_t} exceeds 2⌈{d_lam}/2⌉"));
        }
        if t.part(j) > lam.part(j) || lam.part(j) - t.part(j) > (j as u32) - 1 {
            fails.push(format!("{lam:?} j={j}: row loss outside [0, j−1]"));
        }
    }
    if lam.part(h + 1) > h as u32 {
        fails.push(format!("{lam:?}: λ_{{h+1}} = {} exceeds h = {h}", lam.part(h + 1)));
    }
    let k = (h_lam as u32).div_ceil(2);
    if 2 * t.size() < n + k {
        fails.push(format!("{lam:?}: 2|λ^JS| = {} below n + k = {}", 2 * t.size(), n + k));
    }
    if h >= 1 && t.part(h) >= 3 {
        if lam.part(h + 1) > 1 {
            fails.push(format!("{lam:?}: last row ≥ 3 but λ_{{h+1}} > 1"));
        } else if lam.part(h + 1) == 1 && lam.part(1) % 2 != 0 {
            fails.push(format!("{lam:?}: last row ≥ 3, λ_{{h+1}} = 1, but λ_1 odd"));
        }
    }
    if h >= 2 && t.part(h) == 2 && t.part(h - 1) >= 6 && lam.part(h) > 3 {
        fails.push(format!("{lam:?}: last row 2 under a row ≥ 6 but λ_h > 3"));
    }
    if h >= 2 && t.part(h) == 1 && t.part(h - 1) >= 5 && lam.part(h) > 2 {
        fails.push(format!("{lam:?}: last row 1 under a row ≥ 5 but λ_h > 2"));
    }
    fails
}

fn s_ljs_properties(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("ljs-properties");
    let max_n = opts.bound(26);
    rep.notes.push(format!("all 2-regular partitions, n ≤ {max_n}"));
    for n in 1..=max_n {
        let lams = enumerate_p_regular(n, 2);
        rep.items_checked += lams.len();
        let fails: Vec<Vec<String>> = lams.par_iter().map(ljs_check).collect();
        rep.failures.extend(fails.into_iter().flatten());
    }
    rep
}

fn s_l1(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("l1");
    let max_n = opts.bound(30);
    rep.notes.push(format!("splitting partitions at p = 2, even 12 ≤ n ≤ {max_n}"));
    let exempt: BTreeSet<Partition> = l1_exceptions().into_iter().collect();
    for n in (12..=max_n).filter(|n| n % 2 == 0) {
        for lam in enumerate_splitting(n, 2) {
            rep.items_checked += 1;
            let holds = l1_conclusion(&lam);
            let listed = exempt.contains(&lam);
            match (holds, listed) {
                (true, false) => {}
                (false, true) => {
                    let (size_ok, gap_ok) = l1_conclusion_details(&lam);
                    rep.exceptions += 1;
                    rep.notes.push(format!(
                        "n={n} exception {lam:?}: size bound {size_ok}, gap bound {gap_ok}"
                    ));
                }
                (false, false) => {
                    rep.failures.push(format!("n={n} {lam:?}: bounds fail and not exempt"));
                }
                (true, true) => {
                    rep.failures
                        .push(format!("n={n} {lam:?}: listed exception satisfies the bounds"));
                }
            }
        }
    }
    rep
}

fn s_reach_js(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("reach-js");
    let max_n = opts.bound(24);
    rep.notes.push(format!("all 2-regular partitions, n ≤ {max_n}, with witness replay"));
    for n in 1..=max_n {
        let lams = enumerate_p_regular(n, 2);
        rep.items_checked += lams.len();
        let fails: Vec<Vec<String>> = lams
            .par_iter()
            .map(|lam| {
                let mut out = Vec::new();
                let t = js_truncation(lam);
                let reach = reachable(lam, 2, t.size());
                match reach.witness(&t) {
                    None => out.push(format!("{lam:?}: λ^JS = {t:?} not reachable")),
                    Some(seq) => {
                        if seq.steps.len() as u32 != n - t.size() {
                            out.push(format!("{lam:?}: witness length mismatch"));
                        }
                        if !seq.validates_from(lam, 2) {
                            out.push(format!("{lam:?}: witness fails re-validation"));
                        }
                    }
                }
                out
            })
            .collect();
        rep.failures.extend(fails.into_iter().flatten());
    }
    rep
}

fn s_reach_pairs(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("reach-pairs");
    let max_n = opts.bound(32);
    rep.notes.push(format!("n ∈ {{12, 16, …, {max_n}}}, 2 ≤ k ≤ min(12, n−9)"));
    for n in (12..=max_n).filter(|n| n % 4 == 0) {
        let q = n / 4;
        let origin = Partition::new(vec![q + 2, q + 1, q - 1, q - 2])
            .expect("the four-row origin is strictly decreasing for n ≥ 12");
        for k in 2..=12.min(n - 9) {
            rep.items_checked += 1;
            let (mu, nu) = l200818_pair(n, k);
            if mu == nu || mu.size() != n - k || nu.size() != n - k {
                rep.failures.push(format!("n={n} k={k}: malformed pair {mu:?}, {nu:?}"));
                continue;
            }
            let reach = reachable(&origin, 2, n - k);
            for target in [&mu, &nu] {
                match reach.witness(target) {
                    None => rep.failures.push(format!("n={n} k={k}: {target:?} unreachable")),
                    Some(seq) => {
                        if !seq.validates_from(&origin, 2) {
                            rep.failures
                                .push(format!("n={n} k={k}: witness for {target:?} invalid"));
                        }
                    }
                }
            }
        }
    }
    rep
}

fn s_half_factors(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("half-factors");
    let max_n = opts.bound(20);
    rep.notes.push(format!(
        "restriction to size n/2, even n ≤ {max_n}: ≥ 3 distinct factors at p = 2, \
         ≥ 5 at p = 3 for single-normal-node members"
    ));
    let (e1, e2, e3) = half_restriction_exception_lists();
    let elist: BTreeSet<Partition> = e1.into_iter().chain(e2).chain(e3).collect();
    let case_iv: BTreeSet<Partition> =
        JS3_CASE_IV.iter().map(|v| Partition::new(v.to_vec()).unwrap()).collect();

    for n in (6..=max_n).filter(|n| n % 2 == 0) {
        for lam in enumerate_splitting(n, 2) {
            rep.items_checked += 1;
            let cnt = reachable(&lam, 2, n / 2).len();
            if cnt >= 3 {
                continue;
            }
            let forms = half_restriction_exceptional_forms(&lam, n);
            let exempt = !forms.is_empty()
                || elist.contains(&lam)
                || elist.contains(&js_truncation(&lam));
            if exempt {
                rep.exceptions += 1;
                rep.notes.push(format!(
                    "p=2 n={n} {lam:?}: {cnt} certified factor(s); exempt (forms {forms:?}, \
                     listed {}, truncation listed {})",
                    elist.contains(&lam),
                    elist.contains(&js_truncation(&lam))
                ));
            } else {
                rep.failures.push(format!("p=2 n={n} {lam:?}: only {cnt} certified factors"));
            }
        }
        let excluded = Partition::new(vec![4, 1, 1]).unwrap();
        for lam in enumerate_splitting(n, 3) {
            if !is_js(&lam, 3) || lam == excluded {
                continue;
            }
            rep.items_checked += 1;
            let cnt = reachable(&lam, 3, n / 2).len();
            if cnt >= 5 {
                continue;
            }
            if case_iv.contains(&lam) {
                // the shape-family list members are settled by explicit module
                // tables, beyond the lower-bound certificate
                rep.exceptions += 1;
                rep.notes.push(format!("p=3 n={n} {lam:?}: {cnt} certified factor(s); exempt"));
            } else {
                rep.failures.push(format!("p=3 n={n} {lam:?}: only {cnt} certified factors"));
            }
        }
    }
    rep
}

/// Shortfalls of the depth-k certificate that are settled by explicit module
/// tables instead: (n, λ, k) triples, frozen.
const JS_FACTOR_SKIPS: &[(u32, &[u32], u32)] = &[
    (16, &[8, 6, 2], 8),
    (16, &[7, 5, 3, 1], 6),
    (16, &[7, 5, 3, 1], 7),
    (16, &[7, 5, 3, 1], 8),
];

fn s_js_factors(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("js-factors");
    let max_n = opts.bound(20);
    rep.notes.push(format!(
        "single-normal-node 2-regular partitions, 10 ≤ n ≤ {max_n}, 5 ≤ k ≤ n/2"
    ));
    for n in 10..=max_n {
        let lams: Vec<Partition> =
            enumerate_p_regular(n, 2).into_iter().filter(|lam| is_js(lam, 2)).collect();
        let results: Vec<(usize, usize, Vec<String>, Vec<String>)> = lams
            .par_iter()
            .map(|lam| {
                let mut items = 0;
                let mut exceptions = 0;
                let mut notes = Vec::new();
                let mut fails = Vec::new();
                for k in 5..=n / 2 {
                    items += 1;
                    let cnt = reachable(lam, 2, n - k).len();
                    if cnt >= 3 {
                        continue;
                    }
                    if js_restriction_exceptional(lam, n, k) {
                        exceptions += 1;
                    } else if JS_FACTOR_SKIPS
                        .iter()
                        .any(|(sn, sl, sk)| *sn == n && *sk == k && lam.parts() == *sl)
                    {
                        exceptions += 1;
                        notes.push(format!(
                            "n={n} {lam:?} k={k}: {cnt} certified factor(s); recorded shortfall \
                             outside the certificate's reach"
                        ));
                    } else {
                        fails.push(format!("n={n} {lam:?} k={k}: only {cnt} certified factors"));
                    }
                }
                (items, exceptions, notes, fails)
            })
            .collect();
        for (items, exceptions, notes, fails) in results {
            rep.items_checked += items;
            rep.exceptions += exceptions;
            rep.notes.extend(notes);
            rep.failures.extend(fails);
        }
    }
    rep
}

fn s_js3_families(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("js3-families");
    let max_n = opts.bound(45);
    rep.notes.push(format!("Mullineux-fixed single-normal-node partitions at p = 3, n ≤ {max_n}"));
    for n in 1..=max_n {
        let lams: Vec<Partition> = enumerate_p_regular(n, 3)
            .into_par_iter()
            .filter(|lam| is_mullineux_fixed(lam, 3) && is_js(lam, 3))
            .collect();
        rep.items_checked += lams.len();
        for lam in lams {
            let tags = js3_family_tags(&lam);
            if tags.len() != 1 {
                rep.failures.push(format!("n={n} {lam:?}: matches families {tags:?}"));
                continue;
            }
            match js3_family(&lam) {
                Ok(f) if f == tags[0] => {}
                other => rep
                    .failures
                    .push(format!("n={n} {lam:?}: resolver gave {other:?}, tags {tags:?}")),
            }
        }
    }
    rep
}

fn s_invariants_young(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("invariants-young");
    let max_n = opts.bound(14).min(14);
    let ps = opts.primes(&[2, 3]);
    rep.notes.push(format!("two-block subgroups, 5 ≤ n ≤ {max_n}, all k, p ∈ {ps:?}"));
    for n in 5..=max_n {
        for k in 1..=n / 2 {
            let d = SubgroupDescriptor::MaxIntransitive(n - k, k);
            for &p in &ps {
                rep.items_checked += 1;
                let s1 = invariant_dim(&ModuleSpec { kind: ModuleKind::S1Star, n, p }, &d)
                    .expect("quotient-of-points module is defined for n >= 2");
                if s1 != 1 {
                    rep.failures.push(format!("n={n} k={k} p={p}: points quotient dim {s1} ≠ 1"));
                }
                let s2 = invariant_dim(&ModuleSpec { kind: ModuleKind::S2Star, n, p }, &d)
                    .expect("pair module is defined for n >= 5");
                let expected = if k == 1 { 0 } else { 1 };
                if s2 == expected {
                    continue;
                }
                // the two known deviations sit at n = 5, p = 3 where the pair
                // module degenerates; disclosed, with the observed values pinned
                let frozen = if n == 5 && p == 3 && k == 1 {
                    Some(1)
                } else if n == 5 && p == 3 && k == 2 {
                    Some(2)
                } else {
                    None
                };
                match frozen {
                    Some(v) if v == s2 => {
                        rep.exceptions += 1;
                        rep.notes.push(format!(
                            "n={n} k={k} p={p}: pair-module dim {s2} (generic value {expected}); \
                             known deviation"
                        ));
                    }
                    _ => rep
                        .failures
                        .push(format!("n={n} k={k} p={p}: pair-module dim {s2} ≠ {expected}")),
                }
            }
        }
    }
    rep
}

fn s_invariants_wreath(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("invariants-wreath");
    let ps = opts.primes(&[2, 3]);
    rep.notes.push(format!(
        "points quotient over block shapes with 6 ≤ ab ≤ 18; pair module over \
         blocks of size ≥ 3 with ab ≤ 18; p ∈ {ps:?}"
    ));
    for a in 2..=9u32 {
        for b in 2..=9u32 {
            let n = a * b;
            if !(6..=18).contains(&n) {
                continue;
            }
            let d = SubgroupDescriptor::WreathAlternating(a, b);
            for &p in &ps {
                rep.items_checked += 1;
                let s1 = invariant_dim(&ModuleSpec { kind: ModuleKind::S1Star, n, p }, &d)
                    .expect("quotient-of-points module is defined for n >= 2");
                let expect_zero = !(p == 2 && b == 2);
                if expect_zero && s1 != 0 {
                    rep.failures.push(format!("blocks {a}x{b} p={p}: points quotient dim {s1}"));
                }
                if !expect_zero && s1 == 0 {
                    rep.failures.push(format!(
                        "blocks {a}x{b} p=2: expected invariants in the points quotient"
                    ));
                }
            }
        }
    }
    for (a, b) in [(3u32, 3u32), (3, 4), (4, 3), (3, 5), (5, 3), (4, 4), (3, 6), (6, 3)] {
        let n = a * b;
        let d = SubgroupDescriptor::WreathAlternating(a, b);
        for &p in &ps {
            rep.items_checked += 1;
            let s2 = invariant_dim(&ModuleSpec { kind: ModuleKind::S2Star, n, p }, &d)
                .expect("pair module is defined for n >= 5");
            if s2 != 1 {
                rep.failures.push(format!("blocks {a}x{b} p={p}: pair-module dim {s2} ≠ 1"));
            }
        }
    }
    rep
}

fn s_orbit_counts(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("orbit-counts");
    let max_n = opts.bound(14).min(14);
    rep.notes.push(format!(
        "two-block subgroups 6 ≤ n ≤ {max_n}: orbits on points, pairs, triples; \
         dimension cross-check on subgroup families with n ≤ 10"
    ));
    for n in 6..=max_n {
        for k in 2..=n / 2 {
            rep.items_checked += 1;
            let d = SubgroupDescriptor::MaxIntransitive(n - k, k);
            let i1 = orbit_count(&d, n, 1).expect("orbit count on points");
            let i2 = orbit_count(&d, n, 2).expect("orbit count on pairs");
            let i3 = orbit_count(&d, n, 3).expect("orbit count on triples");
            let want3 = if k == 2 { 3 } else { 4 };
            if i1 != 2 || i2 != 3 || i3 != want3 {
                rep.failures.push(format!(
                    "n={n} k={k}: orbit counts ({i1}, {i2}, {i3}) ≠ (2, 3, {want3})"
                ));
            }
        }
    }
    for n in 5..=max_n.min(10) {
        let mut descriptors: Vec<SubgroupDescriptor> = Vec::new();
        for k in 1..=n / 2 {
            descriptors.push(SubgroupDescriptor::MaxIntransitive(n - k, k));
        }
        for a in 2..=n / 2 {
            if n % a == 0 && n / a >= 2 {
                descriptors.push(SubgroupDescriptor::WreathAlternating(a, n / a));
            }
        }
        for d in &descriptors {
            for k in 1..=3.min(n / 2) {
                for p in [2u32, 3] {
                    rep.items_checked += 1;
                    let oc = orbit_count(d, n, k).expect("orbit count");
                    let md = invariant_dim(&ModuleSpec { kind: ModuleKind::M(k), n, p }, d)
                        .expect("k-subset permutation module");
                    if oc != md {
                        rep.failures.push(format!(
                            "{d} n={n} k={k} p={p}: {oc} orbits vs fixed-space dim {md}"
                        ));
                    }
                }
            }
        }
    }
    rep
}

fn s_spin_dim(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("spin-dim");
    let max_n = opts.bound(40);
    rep.notes.push(format!(
        "all partitions of n ≤ {max_n}; compositions reduce to partitions since every \
         factor depends only on the multiset of parts"
    ));
    for (n, want) in [(2u32, 1u64), (8, 8), (9, 16), (12, 32)] {
        rep.items_checked += 1;
        if basic_spin_dim(n) != want {
            rep.failures.push(format!("dim at n = {n}: {} ≠ {want}", basic_spin_dim(n)));
        }
    }
    for n in 2..=max_n {
        let dn = basic_spin_dim(n);
        for nu in enumerate_p_regular(n, u32::MAX) {
            rep.items_checked += 1;
            let comp = Composition::new(nu.parts().to_vec()).expect("partition parts are positive");
            let expo = spin_multiplicity_intransitive(n, &comp);
            let prod: u64 = nu.parts().iter().map(|&x| basic_spin_dim(x)).product();
            if (1u64 << expo) * prod != dn {
                rep.failures.push(format!(
                    "n={n} parts {nu:?}: 2^{expo}·{prod} ≠ {dn}"
                ));
            }
        }
    }
    rep
}

fn s_verdict_forms(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("verdict-forms");
    let max_n = opts.bound(30);
    rep.notes.push(format!(
        "splitting partitions, 5 ≤ n ≤ {max_n}: one-point residue form vs row form at \
         p = 2; two-point criterion vs single normal node with labels at p ∈ {{2, 3}}"
    ));
    for n in 5..=max_n {
        for lam in enumerate_splitting(n, 2) {
            rep.items_checked += 1;
            let norms: Vec<Node> =
                (0..2).flat_map(|i| normal_nodes(&lam, i, 2)).collect();
            let js = is_js(&lam, 2);
            let res_form =
                js || (norms.len() == 2 && norms.iter().all(|&a| residue(a, 2) != 0));
            let row_form = js
                || (norms.len() == 2 && lam.part(1) == lam.part(2) + 1 && lam.part(1) % 2 == 0);
            if res_form != row_form {
                rep.failures.push(format!("n={n} {lam:?}: residue form ≠ row form"));
            }
            if classify_point_stabilizer(&lam, 2).is_irreducible() != res_form {
                rep.failures.push(format!("n={n} {lam:?}: one-point verdict ≠ residue form"));
            }
        }
        for p in [2u32, 3] {
            for lam in enumerate_splitting(n, p) {
                if p == 2 && lam == beta(n) && n % 4 != 0 {
                    continue;
                }
                rep.items_checked += 1;
                let v = classify_two_point(&lam, p);
                let js = is_js(&lam, p);
                if v.is_irreducible() != js {
                    rep.failures
                        .push(format!("p={p} n={n} {lam:?}: two-point verdict ≠ single normal"));
                    continue;
                }
                if p != 2 || !js {
                    continue;
                }
                let i = residue(Node::new(1, lam.part(1)), 2);
                let label = e_tilde(&lam, i, 2)
                    .and_then(|mu| e_tilde(&mu, 1 - i, 2))
                    .expect("a single-normal-node partition admits the two-step removal");
                if v.evidence.restriction_label.as_ref() != Some(&label) {
                    rep.failures.push(format!(
                        "n={n} {lam:?}: label {:?} ≠ recomputed {label:?}",
                        v.evidence.restriction_label
                    ));
                }
                let reach = reachable(&lam, 2, n - 2);
                if reach.len() != 1 || !reach.contains(&label) {
                    rep.failures.push(format!(
                        "n={n} {lam:?}: two-step reachable set {:?} not exactly {{{label:?}}}",
                        reach.members()
                    ));
                }
            }
        }
    }
    rep
}

fn s_spin_table(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("spin-table");
    let max_n = opts.bound(40);
    rep.notes.push(format!("two-part spin rows, 5 ≤ n ≤ {max_n}, 1 ≤ k ≤ n/2"));
    for n in 5..=max_n {
        for k in 1..=n / 2 {
            rep.items_checked += 1;
            let (a, b) = (n - k, k);
            let c2 = n % 4 == 0 && a % 2 == 1 && b % 2 == 1;
            let c3 = a % 4 == 2 || b % 4 == 2;
            let spin_irr = n % 4 != 2 && (c2 || c3);
            let pred =
                n % 4 != 2 && ((n % 4 == 0 && k % 2 == 1) || k % 4 == 2 || (n - k) % 4 == 2);
            if spin_irr != pred {
                rep.failures.push(format!("n={n} k={k}: conditions {spin_irr} ≠ predicate {pred}"));
            }
            let nu = Composition::new(vec![a, b]).unwrap();
            let direct = classify_basic_spin_intransitive(n, &nu);
            if direct.is_irreducible() != spin_irr {
                rep.failures.push(format!("n={n} k={k}: spin classifier ≠ conditions"));
            }
            let want_expo = (n - 1) / 2 - (a - 1) / 2 - (b - 1) / 2;
            if direct.evidence.multiplicity_exponent != Some(want_expo) {
                rep.failures.push(format!(
                    "n={n} k={k}: exponent {:?} ≠ {want_expo}",
                    direct.evidence.multiplicity_exponent
                ));
            }
            let q = RestrictionQuery {
                p: 2,
                lambda: beta(n),
                subgroup: SubgroupDescriptor::MaxIntransitive(a, b),
            };
            match classify(&q) {
                Ok(v) => {
                    if v.is_irreducible() != spin_irr {
                        rep.failures.push(format!("n={n} k={k}: end-to-end verdict disagrees"));
                    }
                    let want_clause = if spin_irr { "Theorem D(ii)" } else { "Theorem D" };
                    if v.clause.as_deref() != Some(want_clause) {
                        rep.failures
                            .push(format!("n={n} k={k}: clause {:?} ≠ {want_clause}", v.clause));
                    }
                }
                Err(e) => rep.failures.push(format!("n={n} k={k}: classify error {e}")),
            }
        }
    }
    rep
}

/// Frozen verdict rows for every maximal subgroup family at 5 ≤ n ≤ 8:
/// (p, λ, descriptor, outcome, clause).
const SMALL_TABLE: &[(u32, &[u32], &str, Outcome, &str)] = &[
    (2, &[3, 2], "point-stabilizer", Outcome::Reducible, "spin intransitive"),
    (2, &[3, 2], "intransitive:3,2", Outcome::Irreducible, "Theorem D(ii)"),
    (3, &[3, 1, 1], "point-stabilizer", Outcome::Irreducible, "Theorem B(b)"),
    (3, &[3, 1, 1], "intransitive:3,2", Outcome::Reducible, "Theorem C"),
    (2, &[3, 2, 1], "point-stabilizer", Outcome::Reducible, "Theorem B"),
    (2, &[3, 2, 1], "intransitive:4,2", Outcome::Reducible, "Theorem C"),
    (2, &[3, 2, 1], "wreath:2x3", Outcome::Reducible, "Theorem A"),
    (2, &[3, 2, 1], "wreath:3x2", Outcome::Reducible, "Theorem A"),
    (2, &[4, 2], "point-stabilizer", Outcome::Reducible, "spin intransitive"),
    (2, &[4, 2], "intransitive:4,2", Outcome::Reducible, "Theorem D"),
    (2, &[4, 2], "wreath:3x2", Outcome::Irreducible, "spin wreath"),
    (2, &[4, 2], "wreath:2x3", Outcome::Reducible, "spin wreath"),
    (3, &[4, 1, 1], "point-stabilizer", Outcome::Irreducible, "Theorem B(a)"),
    (3, &[4, 1, 1], "intransitive:4,2", Outcome::Irreducible, "Theorem C"),
    (3, &[4, 1, 1], "wreath:2x3", Outcome::Reducible, "Theorem A"),
    (3, &[4, 1, 1], "wreath:3x2", Outcome::Reducible, "Theorem A"),
    (2, &[4, 3], "point-stabilizer", Outcome::Irreducible, "spin intransitive (3)"),
    (2, &[4, 3], "intransitive:5,2", Outcome::Irreducible, "Theorem D(ii)"),
    (2, &[4, 3], "intransitive:4,3", Outcome::Reducible, "Theorem D"),
    (3, &[4, 2, 1], "point-stabilizer", Outcome::Reducible, "Theorem B"),
    (3, &[4, 2, 1], "intransitive:5,2", Outcome::Reducible, "Theorem C"),
    (3, &[4, 2, 1], "intransitive:4,3", Outcome::Reducible, "Theorem A"),
    (2, &[5, 3], "point-stabilizer", Outcome::Irreducible, "spin intransitive (2)"),
    (2, &[5, 3], "intransitive:6,2", Outcome::Irreducible, "Theorem D(ii)"),
    (2, &[5, 3], "intransitive:5,3", Outcome::Irreducible, "Theorem D(ii)"),
    (2, &[5, 3], "intransitive:4,4", Outcome::Reducible, "Theorem D"),
    (2, &[5, 3], "wreath:2x4", Outcome::Reducible, "spin wreath"),
    (2, &[5, 3], "wreath:4x2", Outcome::Reducible, "spin wreath"),
    (2, &[4, 3, 1], "point-stabilizer", Outcome::Irreducible, "Theorem B(b)"),
    (2, &[4, 3, 1], "intransitive:6,2", Outcome::Reducible, "Theorem C"),
    (2, &[4, 3, 1], "intransitive:5,3", Outcome::Reducible, "Theorem A"),
    (2, &[4, 3, 1], "intransitive:4,4", Outcome::Reducible, "Theorem A"),
    (2, &[4, 3, 1], "wreath:2x4", Outcome::Reducible, "Theorem A"),
    (2, &[4, 3, 1], "wreath:4x2", Outcome::Reducible, "Theorem A"),
    (3, &[4, 2, 1, 1], "point-stabilizer", Outcome::Reducible, "Theorem B"),
    (3, &[4, 2, 1, 1], "intransitive:6,2", Outcome::Reducible, "Theorem C"),
    (3, &[4, 2, 1, 1], "intransitive:5,3", Outcome::Reducible, "Theorem A"),
    (3, &[4, 2, 1, 1], "intransitive:4,4", Outcome::Reducible, "Theorem A"),
    (3, &[4, 2, 1, 1], "wreath:2x4", Outcome::Reducible, "Theorem A"),
    (3, &[4, 2, 1, 1], "wreath:4x2", Outcome::Reducible, "Theorem A"),
];

fn s_small_table(_opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("small-table");
    rep.notes.push("every splitting partition and maximal family at 5 ≤ n ≤ 8".into());
    for &(p, parts, subgroup, outcome, clause) in SMALL_TABLE {
        rep.items_checked += 1;
        let lam = Partition::new(parts.to_vec()).expect("table rows hold valid partitions");
        let q = RestrictionQuery {
            p,
            lambda: lam.clone(),
            subgroup: subgroup.parse().expect("table rows hold valid descriptors"),
        };
        match classify(&q) {
            Ok(v) => {
                if v.outcome != outcome {
                    rep.failures.push(format!(
                        "p={p} {lam:?} {subgroup}: outcome {:?} ≠ {outcome:?}",
                        v.outcome
                    ));
                } else if v.clause.as_deref() != Some(clause) {
                    rep.failures.push(format!(
                        "p={p} {lam:?} {subgroup}: clause {:?} ≠ {clause:?}",
                        v.clause
                    ));
                }
            }
            Err(e) => rep.failures.push(format!("p={p} {lam:?} {subgroup}: classify error {e}")),
        }
    }
    rep
}
