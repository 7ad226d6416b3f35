//! Certified composition factors of restrictions to smaller symmetric
//! groups: the JS truncation λ^JS, breadth-first reachability by normal-node
//! removals, removal-sequence certificates, explicit factor pairs for the
//! staircase-like four-row family, the p = 3 JS family classifier, and the
//! exceptional shape lists used by the verification sweeps.
//!
//! The central device is the branching fact that removing a normal node of
//! λ yields a composition factor of the restriction one level down whenever
//! the result is p-regular. Chaining removals therefore certifies factors
//! of D^λ restricted to any lower symmetric group; everything here is a
//! lower-bound oracle (absence of a certificate disproves nothing).

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;
use crate::nodes::{is_js, normal_nodes, remove_node, residue, Node};
use crate::partitions::{beta, double, Partition};

/// A step-by-step certificate: each node is normal in the partition before
/// its removal and every intermediate stays p-regular.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RemovalSequence {
    /// (removed node, partition after the removal), in removal order.
    pub steps: Vec<(Node, Partition)>,
}

impl RemovalSequence {
    /// Re-validates the certificate from scratch against the node calculus.
    pub fn validates_from(&self, origin: &Partition, p: u32) -> bool {
        let mut cur = origin.clone();
        for (node, after) in &self.steps {
            let i = residue(*node, p);
            if !normal_nodes(&cur, i, p).contains(node) {
                return false;
            }
            let red = remove_node(&cur, *node);
            if red != *after || !red.is_p_regular(p) {
                return false;
            }
            cur = red;
        }
        true
    }
}

/// All partitions of a target size reachable from an origin by normal-node
/// removals with p-regular intermediates, each with a reconstructible
/// witness sequence.
#[derive(Clone, Debug)]
pub struct ReachableSet {
    origin: Partition,
    p: u32,
    target: u32,
    members: BTreeSet<Partition>,
    /// First-discovered BFS predecessor of every partition seen below the
    /// origin; enough to rebuild one witness per member.
    parents: HashMap<Partition, (Partition, Node)>,
}

impl ReachableSet {
    pub fn origin(&self) -> &Partition {
        &self.origin
    }

    pub fn target_size(&self) -> u32 {
        self.target
    }

    /// The characteristic the set was computed in.
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn members(&self) -> &BTreeSet<Partition> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        self.members.contains(mu)
    }

    /// One witness sequence from the origin down to a member.
    pub fn witness(&self, mu: &Partition) -> Option<RemovalSequence> {
        if !self.members.contains(mu) {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = mu.clone();
        while cur != self.origin {
            let (parent, node) = self
                .parents
                .get(&cur)
                .expect("every reachable member must have a recorded predecessor")
                .clone();
            steps.push((node, cur));
            cur = parent;
        }
        steps.reverse();
        Some(RemovalSequence { steps })
    }
}

/// Breadth-first closure of normal-node removals from λ down to size m,
/// keeping only p-regular partitions. The result is never empty: every
/// nonempty p-regular partition has a normal node whose good removal stays
/// p-regular.
pub fn reachable(lam: &Partition, p: u32, m: u32) -> ReachableSet {
    assert!(
        lam.is_p_regular(p),
        "reachable expects a {p}-regular origin, got {lam:?}"
    );
    assert!(m <= lam.size(), "target size {m} exceeds |{lam:?}| = {}", lam.size());
    let mut parents: HashMap<Partition, (Partition, Node)> = HashMap::new();
    let mut level: BTreeSet<Partition> = BTreeSet::new();
    level.insert(lam.clone());
    let mut size = lam.size();
    while size > m {
        let mut next: BTreeSet<Partition> = BTreeSet::new();
        for cur in &level {
            for i in 0..p {
                for node in normal_nodes(cur, i, p) {
                    let red = remove_node(cur, node);
                    if red.is_p_regular(p) && next.insert(red.clone()) {
                        parents.insert(red, (cur.clone(), node));
                    }
                }
            }
        }
        level = next;
        size -= 1;
    }
    ReachableSet { origin: lam.clone(), p, target: m, members: level, parents }
}

/// Returns every member of reachable(λ, p, m) when at least `target` many
/// exist, else absent. Absence is not a disproof; this is a lower-bound
/// certificate only.
pub fn distinct_factor_certificate(
    lam: &Partition,
    p: u32,
    m: u32,
    target: usize,
) -> Option<Vec<Partition>> {
    let reach = reachable(lam, p, m);
    if reach.len() >= target {
        Some(reach.members().iter().cloned().collect())
    } else {
        None
    }
}

/// The JS truncation of a 2-regular partition: repeatedly repair the first
/// parity break from the top by shaving one node from each row of the
/// staircase block below it. The result is the largest well-behaved JS
/// partition certified inside λ; fixed points are exactly JS partitions.
pub fn js_truncation(lam: &Partition) -> Partition {
    assert!(
        lam.is_p_regular(2),
        "js_truncation is defined on 2-regular partitions, got {lam:?}"
    );
    let mut cur = lam.parts().to_vec();
    let mut r = 1usize;
    while r < cur.len() {
        if cur[r] % 2 == cur[r - 1] % 2 {
            r += 1;
            continue;
        }
        // l minimal with the next part zero or dropping by at least 2:
        // the end of the consecutive staircase block starting at row r+1
        let mut l = r + 1;
        loop {
            let next = if l < cur.len() { cur[l] } else { 0 };
            if next == 0 || next < cur[l - 1] - 1 {
                break;
            }
            l += 1;
        }
        for part in cur.iter_mut().take(l).skip(r) {
            *part -= 1;
        }
        while cur.last() == Some(&0) {
            cur.pop();
        }
        r += 1;
    }
    let out = Partition::from_padded(cur)
        .unwrap_or_else(|_| panic!("truncation of {lam:?} broke the partition shape"));
    assert!(
        out.is_p_regular(2) && is_js(&out, 2),
        "truncation of {lam:?} gave non-JS {out:?}"
    );
    out
}

/// Both conclusions of the halfway-size bound evaluated on js_truncation(λ):
/// |λ^JS| ≥ n/2 + 5 and every odd-to-even row gap of λ^JS is at most 2.
/// See `l1_exceptions` for the finite list exempted from the bound.
pub fn l1_conclusion(lam: &Partition) -> bool {
    let (size_ok, gap_ok) = l1_conclusion_details(lam);
    size_ok && gap_ok
}

/// The two halves of `l1_conclusion`, separately.
pub fn l1_conclusion_details(lam: &Partition) -> (bool, bool) {
    let js = js_truncation(lam);
    let size_ok = js.size() >= lam.size() / 2 + 5;
    let hh = js.h();
    let gap_ok = (0..(hh + 1) / 2).all(|j| js.part(2 * j + 1) - js.part(2 * j + 2) <= 2);
    (size_ok, gap_ok)
}

const L1_EXCEPTION_MUS: [&[u32]; 21] = [
    &[11, 1],
    &[9, 3],
    &[9, 5],
    &[11, 5],
    &[11, 7],
    &[13, 8, 3],
    &[13, 9, 4],
    &[13, 9, 5, 1],
    &[15, 11, 5, 1],
    &[15, 11, 7, 1],
    &[15, 11, 7, 3],
    &[17, 13, 9, 3],
    &[17, 13, 9, 5],
    &[19, 15, 11, 7],
    &[21, 17, 13, 9, 4],
    &[21, 17, 13, 9, 5, 1],
    &[23, 19, 15, 11, 7, 1],
    &[23, 19, 15, 11, 7, 3],
    &[25, 21, 17, 13, 9, 5],
    &[29, 25, 21, 17, 13, 9, 5, 1],
    &[31, 27, 23, 19, 15, 11, 7, 3],
];

fn double_of_parts(parts: &[u32]) -> Partition {
    let mu = Partition::new(parts.to_vec()).expect("exception tables hold valid partitions");
    double(&mu)
        .as_partition()
        .expect("doubles of the exception tables are partitions")
}

/// The finite exception list for `l1_conclusion`: doubles of twenty-one
/// explicitly listed partitions.
pub fn l1_exceptions() -> Vec<Partition> {
    L1_EXCEPTION_MUS.iter().map(|mu| double_of_parts(mu)).collect()
}

/// The eleven splitting JS partitions for p = 3 matched literally by the
/// fourth family of `js3_family`.
pub const JS3_CASE_IV: [&[u32]; 11] = [
    &[1],
    &[4, 1, 1],
    &[7, 3, 2],
    &[10, 4, 4],
    &[13, 6, 5],
    &[7, 3, 2, 1],
    &[10, 4, 4, 1],
    &[13, 6, 5, 1],
    &[10, 6, 3, 3, 1, 1],
    &[13, 6, 5, 4, 1, 1],
    &[13, 9, 5, 4, 3, 2, 1],
];

/// The four shape families covering every splitting JS partition at p = 3.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum JsFamily {
    I,
    II,
    III,
    IvList,
}

impl std::fmt::Display for JsFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JsFamily::I => write!(f, "I"),
            JsFamily::II => write!(f, "II"),
            JsFamily::III => write!(f, "III"),
            JsFamily::IvList => write!(f, "IV"),
        }
    }
}

/// Every family tag matching λ; used to detect overlap between families.
pub fn js3_family_tags(lam: &Partition) -> Vec<JsFamily> {
    let n = lam.size();
    let hh = lam.h() as u32;
    let e = |r: usize| lam.part(r);
    let mut tags = Vec::new();
    if e(1) >= e(2) + 9 && e(3) >= 7 && 2 * e(1) <= n + 2 && n >= 4 * hh {
        tags.push(JsFamily::I);
    }
    if e(1) >= e(2) + 7
        && e(2) + 7 >= e(3) + 10
        && e(4) >= 6
        && 2 * (e(1) + e(2)) <= n + 8
        && hh >= 6
        && n >= 6 * hh
    {
        tags.push(JsFamily::II);
    }
    if e(1) >= e(2) + 4
        && e(2) + 4 >= e(3) + 8
        && e(4) >= 4
        && 2 * (e(1) + e(2)) <= n + 8
        && hh >= 6
        && n >= 6 * hh
    {
        tags.push(JsFamily::III);
    }
    if JS3_CASE_IV.contains(&lam.parts()) {
        tags.push(JsFamily::IvList);
    }
    tags
}

/// Classifies a splitting JS partition at p = 3 into its unique family.
/// Rejects inputs outside the domain; zero or several matches are reported
/// as errors since either would contradict the classification.
pub fn js3_family(lam: &Partition) -> Result<JsFamily, Error> {
    if !lam.is_p_regular(3)
        || !crate::mullineux::is_mullineux_fixed(lam, 3)
        || !is_js(lam, 3)
    {
        return Err(Error::OutOfRange(format!(
            "family classification needs a JS Mullineux fixed point at p=3, got {lam:?}"
        )));
    }
    let tags = js3_family_tags(lam);
    match tags.len() {
        1 => Ok(tags[0]),
        0 => Err(Error::NoFamily(lam.parts().to_vec())),
        _ => Err(Error::AmbiguousFamily(
            lam.parts().to_vec(),
            tags.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","),
        )),
    }
}

/// The outcome of `removal_sequence_check`: hypothesis failures are the
/// caller's problem, validation failures would falsify the underlying
/// removal lemma.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RemovalCheck {
    Valid(RemovalSequence),
    /// The (λ, ν, j) triple does not satisfy the lemma's hypotheses.
    HypothesisViolated(String),
    /// Hypotheses hold but the prescribed witness breaks down; the node and
    /// partition pinpoint the failing step.
    ValidationFailed { node: Node, at: Partition, reason: String },
}

fn block_structure(lam: &Partition) -> (Vec<u32>, Vec<usize>) {
    // run lengths of equal parts, plus cumulative row counts (h_0 = 0)
    let mut bs: Vec<u32> = Vec::new();
    let mut prev: Option<u32> = None;
    for &x in lam.parts() {
        if Some(x) == prev {
            *bs.last_mut().unwrap() += 1;
        } else {
            bs.push(1);
            prev = Some(x);
        }
    }
    let mut hs = vec![0usize];
    for &b in &bs {
        hs.push(hs.last().unwrap() + b as usize);
    }
    (bs, hs)
}

/// Checks the removal-sequence lemma on (λ, ν, j): if μ = λ − ν is
/// p-regular, the first j blocks of λ form a JS partition, and the ν values
/// satisfy the block-ordering chain and bounds, then removing the ν nodes
/// row-end by row-end in the prescribed round-robin order must succeed with
/// every removed node normal and every intermediate p-regular. Entries of ν
/// may be zero; ν has one entry per row of the first j blocks.
pub fn removal_sequence_check(lam: &Partition, nu: &[u32], j: usize, p: u32) -> RemovalCheck {
    let (bs, hs) = block_structure(lam);
    if j == 0 || j > bs.len() {
        return RemovalCheck::HypothesisViolated(format!(
            "block index {j} out of range for {lam:?} ({} blocks)",
            bs.len()
        ));
    }
    let hj = hs[j];
    if nu.len() != hj {
        return RemovalCheck::HypothesisViolated(format!(
            "need one entry per row of the first {j} blocks ({hj}), got {}",
            nu.len()
        ));
    }
    // remainder must be a p-regular partition
    let mut mu: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
    for (row, &v) in nu.iter().enumerate() {
        mu[row] -= v as i64;
    }
    if mu.iter().any(|&x| x < 0) {
        return RemovalCheck::HypothesisViolated("removal exceeds a row".into());
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return RemovalCheck::HypothesisViolated("remainder is not weakly decreasing".into());
    }
    let mu_parts: Vec<u32> = mu.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    let mu_part = Partition::new(mu_parts).expect("filtered weakly decreasing parts");
    if !mu_part.is_p_regular(p) {
        return RemovalCheck::HypothesisViolated(format!("remainder {mu_part:?} not {p}-regular"));
    }
    let prefix = Partition::new(lam.parts()[..hj].to_vec()).expect("prefix of a partition");
    if !is_js(&prefix, p) {
        return RemovalCheck::HypothesisViolated(format!("prefix {prefix:?} is not JS"));
    }
    // within-block bottom-up chain of ν values must be non-increasing
    let order = removal_row_order(&bs, j);
    let chain: Vec<u32> = order.iter().map(|&row| nu[row - 1]).collect();
    if chain.windows(2).any(|w| w[0] < w[1]) {
        return RemovalCheck::HypothesisViolated("ordering chain violated".into());
    }
    for r in 1..=j {
        let bound = nu[hs[r - 1]] as i64 + p as i64 - bs[r - 1] as i64;
        if nu[hs[r] - 1] as i64 > bound {
            return RemovalCheck::HypothesisViolated(format!(
                "block {r} bound violated: {} > {bound}",
                nu[hs[r] - 1]
            ));
        }
    }
    // run the prescribed witness and validate every step
    let mut cur: Vec<u32> = lam.parts().to_vec();
    let mut left: Vec<u32> = nu.to_vec();
    left.resize(cur.len(), 0);
    let mut shape = lam.clone();
    let mut steps = Vec::new();
    while left.iter().any(|&x| x > 0) {
        for &row in &order {
            if left[row - 1] == 0 {
                continue;
            }
            let node = Node::new(row as u32, cur[row - 1]);
            let normal = (0..p).any(|i| normal_nodes(&shape, i, p).contains(&node));
            if !normal {
                return RemovalCheck::ValidationFailed {
                    node,
                    at: shape,
                    reason: "removed node is not normal".into(),
                };
            }
            cur[row - 1] -= 1;
            left[row - 1] -= 1;
            let after = match Partition::from_padded(cur.clone()) {
                Ok(s) => s,
                Err(_) => {
                    return RemovalCheck::ValidationFailed {
                        node,
                        at: shape,
                        reason: "removal broke the shape".into(),
                    }
                }
            };
            if !after.is_p_regular(p) {
                return RemovalCheck::ValidationFailed {
                    node,
                    at: shape,
                    reason: format!("intermediate not {p}-regular"),
                };
            }
            steps.push((node, after.clone()));
            shape = after;
        }
    }
    debug_assert_eq!(shape, mu_part, "witness must land on the remainder");
    RemovalCheck::Valid(RemovalSequence { steps })
}

/// Round-robin row order of the removal witness: within each block, bottom
/// row first, blocks in order.
fn removal_row_order(bs: &[u32], j: usize) -> Vec<usize> {
    let mut hs = vec![0usize];
    for &b in bs {
        hs.push(hs.last().unwrap() + b as usize);
    }
    let mut order = Vec::new();
    for r in 1..=j {
        order.extend((hs[r - 1] + 1..=hs[r]).rev());
    }
    order
}

/// The certified factor pair for the four-row shape
/// (n/4+2, n/4+1, n/4-1, n/4-2) restricted k levels down, split into four
/// congruence cases by k mod 4. Zero parts are stripped.
pub fn l200818_pair(n: u32, k: u32) -> (Partition, Partition) {
    assert!(n % 4 == 0 && n >= 12, "the four-row shape needs 4 | n and n >= 12, got n={n}");
    assert!(2 <= k && k <= n - 9, "k={k} out of range 2..={} for n={n}", n - 9);
    let q = (n / 4) as i64;
    let m = (k / 4) as i64;
    let (mu, nu): ([i64; 4], [i64; 4]) = match k % 4 {
        0 => (
            [q - m + 2, q - m + 1, q - m - 1, q - m - 2],
            [q - m + 3, q - m + 1, q - m - 1, q - m - 3],
        ),
        1 => (
            [q - m + 2, q - m, q - m - 1, q - m - 2],
            [q - m + 2, q - m + 1, q - m - 1, q - m - 3],
        ),
        2 => (
            [q - m + 2, q - m, q - m - 1, q - m - 3],
            [q - m + 1, q - m, q - m - 1, q - m - 2],
        ),
        _ => (
            [q - m + 1, q - m, q - m - 1, q - m - 3],
            [q - m + 2, q - m, q - m - 2, q - m - 3],
        ),
    };
    let strip = |v: [i64; 4]| {
        Partition::new(v.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect())
            .expect("pair formulas produce partitions in range")
    };
    (strip(mu), strip(nu))
}

/// Shape tags (i)-(vi) matched by λ among the exceptional forms of the
/// at-least-three-factors bound at the halfway level (p = 2, n even).
pub fn half_restriction_exceptional_forms(lam: &Partition, n: u32) -> Vec<&'static str> {
    let mut forms = Vec::new();
    if n % 4 == 0 && *lam == beta(n) {
        forms.push("i");
    }
    let mut bm1 = beta(n - 1).parts().to_vec();
    bm1.push(1);
    if lam.parts() == &bm1[..] {
        forms.push("ii");
    }
    let quarter = |shifts: [i64; 4]| -> Vec<u32> {
        shifts
            .iter()
            .map(|&s| (n as i64 + s) / 4)
            .filter(|&x| x > 0)
            .map(|x| x as u32)
            .collect()
    };
    if n >= 24 && n % 8 == 0 && lam.parts() == quarter([12, 4, -4, -12]) {
        forms.push("iii");
    }
    if n >= 10 && n % 4 == 2 && lam.parts() == quarter([6, 2, -2, -6]) {
        forms.push("iv");
    }
    if n >= 24 && n % 4 == 0 && lam.parts() == quarter([8, 4, -4, -8]) {
        forms.push("v");
    }
    if n >= 14 && n % 4 == 2 && lam.parts() == quarter([10, 6, -6, -10]) {
        forms.push("vi");
    }
    forms
}

const E1_EXCLUDED: [&[u32]; 3] = [&[11, 1], &[9, 5], &[11, 7]];

const E2: [&[u32]; 9] = [
    &[7, 5, 4, 3, 2, 1],
    &[7, 6, 5, 3, 1],
    &[8, 7, 5, 3, 2, 1],
    &[8, 7, 5, 4, 3, 1],
    &[8, 7, 5, 4, 3, 2, 1],
    &[8, 7, 6, 5, 3, 1],
    &[8, 7, 6, 5, 3, 2, 1],
    &[8, 7, 6, 5, 4, 3, 1],
    &[8, 7, 6, 5, 4, 3, 2, 1],
];

const E3: [&[u32]; 5] = [
    &[7, 5, 3, 1],
    &[7, 5, 3, 2, 1],
    &[7, 6, 2, 1],
    &[8, 7, 5, 3, 1],
    &[9, 7, 3, 2, 1],
];

/// The three finite exception lists accompanying the halfway-level factor
/// bound: doubles of most `l1_exceptions` sources, plus two literal lists.
pub fn half_restriction_exception_lists() -> (Vec<Partition>, Vec<Partition>, Vec<Partition>) {
    let e1 = L1_EXCEPTION_MUS
        .iter()
        .filter(|mu| !E1_EXCLUDED.contains(mu))
        .map(|mu| double_of_parts(mu))
        .collect();
    let lit = |table: &[&[u32]]| {
        table
            .iter()
            .map(|s| Partition::new(s.to_vec()).expect("exception tables hold valid partitions"))
            .collect()
    };
    (e1, lit(&E2), lit(&E3))
}

/// Whether (λ, n, k) falls in an exceptional shape family of the deeper
/// restriction bound for JS partitions at p = 2 (at least three distinct
/// factors k levels down, 5 ≤ k ≤ n/2).
pub fn js_restriction_exceptional(lam: &Partition, n: u32, k: u32) -> bool {
    let hh = lam.h();
    let e = |r: usize| lam.part(r);
    let eq = |v: &[i64]| -> bool {
        let pos: Vec<u32> = v.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        lam.parts() == &pos[..]
    };
    let ni = n as i64;
    if eq(&[ni]) {
        return true;
    }
    if n % 2 == 0 && eq(&[ni - 1, 1]) {
        return true;
    }
    if n % 2 == 0 && eq(&[ni / 2 + 2, ni / 2 - 2]) {
        return true;
    }
    if n % 2 == 0 && *lam == beta(n) {
        return true;
    }
    if n % 2 == 1 && eq(&[(ni + 1) / 2, (ni - 3) / 2, 1]) {
        return true;
    }
    if n % 3 == 0 && eq(&[ni / 3 + 2, ni / 3, ni / 3 - 2]) {
        return true;
    }
    if n >= 14 && n % 3 == 2 {
        let b = (ni - 2) / 3;
        if eq(&[b + 4, b, b - 2]) && k % 3 == 1 {
            return true;
        }
    }
    if n >= 19 && n % 3 == 1 {
        let b = (ni + 2) / 3;
        if eq(&[b + 2, b, b - 4]) && k % 3 == 2 {
            return true;
        }
    }
    if hh == 3 && e(1) == e(2) + 2 && e(2) >= e(3) + 4 && k == 5 {
        return true;
    }
    if n >= 22 && n % 6 == 4 {
        let b = (ni - 1) / 3;
        if eq(&[b + 2, b, b - 2, 1]) && k % 3 != 0 {
            return true;
        }
    }
    if hh == 4 && e(1) == e(2) + 2 && e(2) == e(3) + 2 && k == 5 {
        return true;
    }
    if n >= 20 && n % 4 == 0 && eq(&[ni / 4 + 3, ni / 4 + 1, ni / 4 - 1, ni / 4 - 3]) {
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodes::e_tilde;
    use crate::partitions::{enumerate_p_regular, enumerate_splitting};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn truncation_goldens() {
        assert_eq!(js_truncation(&pt(&[4, 2])), pt(&[4, 2]));
        assert_eq!(js_truncation(&pt(&[4, 3, 1])), pt(&[4, 2]));
        assert_eq!(js_truncation(&pt(&[5, 3, 1])), pt(&[5, 3, 1]));
        assert_eq!(js_truncation(&pt(&[5, 4, 2, 1])), pt(&[5, 3, 1]));
    }

    #[test]
    fn truncation_fixed_points_are_js() {
        for n in 1..=16 {
            for lam in enumerate_p_regular(n, 2) {
                let js = js_truncation(&lam);
                assert_eq!(js == lam, is_js(&lam, 2), "fixed point test at {lam:?}");
            }
        }
    }

    #[test]
    fn reachable_basics() {
        let lam = pt(&[4, 3, 1]);
        let whole = reachable(&lam, 2, 8);
        assert_eq!(whole.members().len(), 1);
        assert!(whole.contains(&lam));
        assert!(whole.witness(&lam).unwrap().steps.is_empty());

        let down = reachable(&lam, 2, 7);
        let expect: BTreeSet<Partition> = [pt(&[4, 2, 1])].into_iter().collect();
        assert_eq!(
            down.members(),
            &expect,
            "only the good-node removal keeps 2-regularity here"
        );
        assert_eq!(
            distinct_factor_certificate(&lam, 2, 7, 2),
            None,
            "a single certified factor cannot meet a target of two"
        );
    }

    #[test]
    fn reachable_witnesses_validate() {
        for n in 4..=12 {
            for lam in enumerate_p_regular(n, 2) {
                let reach = reachable(&lam, 2, n.saturating_sub(3));
                assert!(!reach.is_empty(), "reachable sets are never empty, failed at {lam:?}");
                for mu in reach.members() {
                    let w = reach.witness(mu).unwrap();
                    assert!(
                        w.validates_from(&lam, 2),
                        "witness for {mu:?} from {lam:?} must re-validate"
                    );
                    assert_eq!(w.steps.last().unwrap().1, *mu);
                }
            }
        }
    }

    #[test]
    fn good_node_paths_are_reachable() {
        // removing good nodes only is one particular normal-node strategy
        for lam in enumerate_p_regular(9, 3) {
            let reach = reachable(&lam, 3, 6);
            let mut frontier = vec![lam.clone()];
            for _ in 0..3 {
                let mut next = Vec::new();
                for cur in &frontier {
                    for i in 0..3 {
                        if let Some(red) = e_tilde(cur, i, 3) {
                            next.push(red);
                        }
                    }
                }
                frontier = next;
            }
            for mu in frontier {
                assert!(reach.contains(&mu), "good-node path output {mu:?} must be reachable");
            }
        }
    }

    #[test]
    fn factor_certificate_contains_staircase() {
        let cert = distinct_factor_certificate(&pt(&[9, 7, 5, 3, 1]), 2, 15, 1).unwrap();
        assert!(
            cert.contains(&pt(&[5, 4, 3, 2, 1])),
            "the staircase must be certified ten levels down"
        );
    }

    #[test]
    fn l1_examples() {
        assert!(l1_conclusion(&pt(&[7, 5, 4, 3, 2, 1])));
        let exceptions = l1_exceptions();
        assert_eq!(exceptions.len(), 21);
        assert!(exceptions.contains(&pt(&[7, 6, 5, 3, 2, 1])), "double of (13,8,3)");
        assert!(!exceptions.contains(&pt(&[7, 5])), "beta_12 is not exempt");
        assert!(l1_conclusion(&pt(&[7, 5])), "(7,5) is its own JS truncation and passes both bounds");
    }

    #[test]
    fn js3_family_goldens() {
        assert_eq!(js3_family(&pt(&[4, 1, 1])).unwrap(), JsFamily::IvList);
        assert_eq!(js3_family(&pt(&[13, 9, 5, 4, 3, 2, 1])).unwrap(), JsFamily::IvList);
        assert_eq!(js3_family(&pt(&[1])).unwrap(), JsFamily::IvList);
        assert!(
            js3_family(&pt(&[3])).is_err(),
            "(3) is not a Mullineux fixed point, so it is out of domain"
        );
    }

    #[test]
    fn pair_goldens() {
        assert_eq!(l200818_pair(16, 4), (pt(&[5, 4, 2, 1]), pt(&[6, 4, 2])));
        assert_eq!(l200818_pair(12, 2), (pt(&[5, 3, 2]), pt(&[4, 3, 2, 1])));
        let (mu, nu) = l200818_pair(16, 5);
        assert_eq!(mu.size(), 11);
        assert_eq!(nu.size(), 11);
        assert_ne!(mu, nu);
    }

    #[test]
    fn pairs_certified_small() {
        for n in [12u32, 16] {
            let lam = pt(&[n / 4 + 2, n / 4 + 1, n / 4 - 1, n / 4 - 2]);
            for k in 2..=(12.min(n - 9)) {
                let (mu, nu) = l200818_pair(n, k);
                let reach = reachable(&lam, 2, n - k);
                assert!(reach.contains(&mu), "mu of (n={n}, k={k}) must be certified");
                assert!(reach.contains(&nu), "nu of (n={n}, k={k}) must be certified");
            }
        }
    }

    #[test]
    fn removal_check_examples() {
        let r = removal_sequence_check(&pt(&[4, 2]), &[1, 1], 2, 2);
        match r {
            RemovalCheck::Valid(seq) => {
                assert_eq!(seq.steps.last().unwrap().1, pt(&[3, 1]));
                assert!(seq.validates_from(&pt(&[4, 2]), 2));
            }
            other => panic!("expected a valid sequence, got {other:?}"),
        }

        let r = removal_sequence_check(&pt(&[4, 2]), &[0, 0], 2, 2);
        assert!(
            matches!(&r, RemovalCheck::Valid(seq) if seq.steps.is_empty()),
            "zero removals validate trivially, got {r:?}"
        );

        let r = removal_sequence_check(&pt(&[4, 2]), &[0, 1], 2, 2);
        assert!(
            matches!(r, RemovalCheck::HypothesisViolated(_)),
            "bottom-heavier chain within the ordering is required"
        );

        let r = removal_sequence_check(&pt(&[4, 3]), &[1], 1, 2);
        assert!(
            matches!(r, RemovalCheck::HypothesisViolated(_)),
            "prefix (4) alone is JS but remainder (3,3) is 2-irregular"
        );
    }

    #[test]
    fn removal_check_sweep_small() {
        // every hypothesis-satisfying triple must produce a valid witness
        let mut tried = 0;
        for p in [2u32, 3] {
            for n in 3..=10 {
                for lam in enumerate_p_regular(n, p) {
                    let (bs, hs) = block_structure(&lam);
                    for j in 1..=bs.len() {
                        let hj = hs[j];
                        let mut stack = vec![Vec::new()];
                        while let Some(prefix) = stack.pop() {
                            if prefix.len() == hj {
                                let total: u32 = prefix.iter().sum();
                                if total == 0 || total >= n {
                                    continue;
                                }
                                match removal_sequence_check(&lam, &prefix, j, p) {
                                    RemovalCheck::Valid(_) => tried += 1,
                                    RemovalCheck::HypothesisViolated(_) => {}
                                    RemovalCheck::ValidationFailed { node, at, reason } => panic!(
                                        "witness failed for {lam:?} nu={prefix:?} j={j} p={p}: \
                                         {reason} at {node:?} in {at:?}"
                                    ),
                                }
                                continue;
                            }
                            for v in 0..4u32 {
                                let mut next = prefix.clone();
                                next.push(v);
                                stack.push(next);
                            }
                        }
                    }
                }
            }
        }
        assert!(tried > 100, "sweep should exercise many valid triples, got {tried}");
    }

    #[test]
    fn exceptional_forms_spot_checks() {
        assert_eq!(half_restriction_exceptional_forms(&beta(12), 12), vec!["i"]);
        assert_eq!(half_restriction_exceptional_forms(&pt(&[6, 5, 1]), 12), vec!["ii"]);
        assert_eq!(
            half_restriction_exceptional_forms(&pt(&[9, 7, 5, 3]), 24),
            vec!["iii"],
            "quarter-shifted four-row shape at n=24"
        );
        assert_eq!(half_restriction_exceptional_forms(&pt(&[8, 7, 5, 4]), 24), vec!["v"]);
        assert!(half_restriction_exceptional_forms(&pt(&[7, 5, 3, 1]), 16).is_empty());
        let (e1, e2, e3) = half_restriction_exception_lists();
        assert_eq!(e1.len(), 18, "three of the twenty-one doubles are excluded");
        assert_eq!(e2.len(), 9);
        assert_eq!(e3.len(), 5);
        assert!(e3.contains(&pt(&[7, 5, 3, 1])));
    }

    #[test]
    fn js_restriction_exception_spot_checks() {
        assert!(js_restriction_exceptional(&pt(&[16]), 16, 5));
        assert!(js_restriction_exceptional(&beta(16), 16, 6));
        assert!(js_restriction_exceptional(&pt(&[10, 6]), 16, 7), "n/2+2, n/2-2 shape");
        assert!(js_restriction_exceptional(&pt(&[8, 6, 4]), 18, 8), "thirds shape at 3 | n");
        assert!(!js_restriction_exceptional(&pt(&[7, 5, 3, 1]), 16, 6));
    }

    #[test]
    fn exception_lists_are_wellformed() {
        let (e1, e2, e3) = half_restriction_exception_lists();
        for lam in e1.iter().chain(&e2).chain(&e3) {
            assert!(lam.is_p_regular(2), "exception list member {lam:?} must be 2-regular");
            assert_eq!(lam.size() % 2, 0, "exception lists live at even sizes, got {lam:?}");
        }
        for (n, p) in [(8u32, 2u32), (12, 2)] {
            for lam in enumerate_splitting(n, p) {
                // every splitting member can be queried without panicking
                let _ = half_restriction_exceptional_forms(&lam, n);
            }
        }
    }
}
