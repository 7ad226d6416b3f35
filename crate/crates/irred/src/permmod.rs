//! Permutation modules on k-subsets, the dual Specht quotients S_1* and
//! S_2* with explicit bases, generator sets for the maximal imprimitive
//! subgroups of A_n, invariant dimensions, and orbit counts.
//!
//! Permutations are stored as image vectors on {0,…,n−1}; composition is
//! (a·b)(x) = a(b(x)). Action matrices follow the column convention: the
//! column of a basis element holds the coordinates of its image, matching
//! `gfp_linalg::fixed_subspace` acting on column vectors.
//!
//! S_1* has basis v̄_1,…,v̄_{n−1} with g·v̄_i = v̄_{g(i)} and v̄_n = −Σ v̄_i.
//! S_2* (dimension n(n−3)/2, n ≥ 5) is the quotient M_2/K with basis the
//! pairs inside {1,…,n−2} together with the pairs {i, n−1} for i ≤ n−3;
//! the images of the remaining pairs are expanded by four rewriting rules
//! validated against the honest quotient in the tests.

use itertools::Itertools;
use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::Error;
use crate::gfp_linalg::{fixed_subspace, GFpMatrix};
use crate::partitions::Composition;

/// A permutation of {0,…,n−1} as its image vector.
pub type Perm = Vec<u32>;

/// Composition of permutations, (a·b)(x) = a(b(x)).
pub fn perm_compose(a: &Perm, b: &Perm) -> Perm {
    assert_eq!(a.len(), b.len(), "cannot compose permutations of different degree");
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Builds a permutation of degree n from 1-based cycles.
pub fn perm_from_cycles(n: u32, cycles: &[Vec<u32>]) -> Perm {
    let mut img: Perm = (0..n).collect();
    for cyc in cycles {
        for (i, &x) in cyc.iter().enumerate() {
            let next = cyc[(i + 1) % cyc.len()];
            assert!(x >= 1 && x <= n, "cycle entry {x} out of range 1..={n}");
            img[x as usize - 1] = next - 1;
        }
    }
    img
}

/// Parity of a permutation: 0 for even, 1 for odd.
pub fn perm_parity(perm: &Perm) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut parity = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut j = start;
        let mut len = 0usize;
        while !seen[j] {
            seen[j] = true;
            j = perm[j] as usize;
            len += 1;
        }
        parity ^= (len - 1) as u32 & 1;
    }
    parity
}

/// The subgroups of A_n the classification speaks about.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubgroupDescriptor {
    /// A_{n−1}, the stabilizer of the last point.
    PointStabilizer,
    /// A_{(a,b)} with a + b = n, the maximal intransitive stabilizer of a
    /// b-element subset.
    MaxIntransitive(u32, u32),
    /// A_ν = S_ν ∩ A_n for an arbitrary composition ν of n.
    YoungAlternating(Composition),
    /// G_{a,b} = (S_a ≀ S_b) ∩ A_n, the maximal imprimitive subgroup.
    WreathAlternating(u32, u32),
    /// A_n itself.
    FullAlternating,
    /// A primitive subgroup; carries no generator model here.
    Primitive,
}

impl std::fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubgroupDescriptor::PointStabilizer => write!(f, "point-stabilizer"),
            SubgroupDescriptor::MaxIntransitive(a, b) => write!(f, "intransitive:{a},{b}"),
            SubgroupDescriptor::YoungAlternating(nu) => {
                write!(f, "young:")?;
                for (i, x) in nu.parts().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            SubgroupDescriptor::WreathAlternating(a, b) => write!(f, "wreath:{a}x{b}"),
            SubgroupDescriptor::FullAlternating => write!(f, "full"),
            SubgroupDescriptor::Primitive => write!(f, "primitive"),
        }
    }
}

impl serde::Serialize for SubgroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::str::FromStr for SubgroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadDescriptor(s.to_string());
        match s {
            "point-stabilizer" => return Ok(SubgroupDescriptor::PointStabilizer),
            "full" => return Ok(SubgroupDescriptor::FullAlternating),
            "primitive" => return Ok(SubgroupDescriptor::Primitive),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("intransitive:") {
            let parts: Vec<u32> = rest
                .split(',')
                .map(|t| t.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            if parts.len() != 2 {
                return Err(bad());
            }
            return Ok(SubgroupDescriptor::MaxIntransitive(parts[0], parts[1]));
        }
        if let Some(rest) = s.strip_prefix("young:") {
            let parts: Vec<u32> = rest
                .split(',')
                .map(|t| t.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            let nu = Composition::new(parts).map_err(|_| bad())?;
            return Ok(SubgroupDescriptor::YoungAlternating(nu));
        }
        if let Some(rest) = s.strip_prefix("wreath:") {
            let (a, b) = rest.split_once('x').ok_or_else(bad)?;
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            return Ok(SubgroupDescriptor::WreathAlternating(a, b));
        }
        Err(bad())
    }
}

/// Generators of A_ν: consecutive 3-cycles inside each block, plus a
/// double transposition joining each consecutive pair of blocks of size at
/// least 2. All generators are even.
pub fn young_alternating_gens(nu: &[u32], n: u32) -> Vec<Perm> {
    assert_eq!(nu.iter().sum::<u32>(), n, "composition {nu:?} must sum to {n}");
    let mut gens = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut start = 1u32;
    for &b in nu {
        blocks.push((start..start + b).collect());
        start += b;
    }
    for blk in &blocks {
        for w in blk.windows(3) {
            gens.push(perm_from_cycles(n, &[w.to_vec()]));
        }
    }
    let big: Vec<&Vec<u32>> = blocks.iter().filter(|b| b.len() >= 2).collect();
    for pair in big.windows(2) {
        gens.push(perm_from_cycles(
            n,
            &[vec![pair[0][0], pair[0][1]], vec![pair[1][0], pair[1][1]]],
        ));
    }
    debug_assert!(gens.iter().all(|g| perm_parity(g) == 0), "A_nu generators must be even");
    gens
}

/// Generators of G_{a,b} = (S_a ≀ S_b) ∩ A_n, n = ab: base generators of
/// A_{(a,…,a)} plus adjacent block swaps, each swap corrected into A_n by
/// an in-block transposition when odd.
pub fn wreath_alternating_gens(a: u32, b: u32) -> Vec<Perm> {
    assert!(a >= 2 && b >= 2, "wreath parameters need a,b >= 2, got ({a},{b})");
    let n = a * b;
    let base: Vec<u32> = vec![a; b as usize];
    let mut gens = young_alternating_gens(&base, n);
    for r in 0..b - 1 {
        let cycles: Vec<Vec<u32>> = (0..a)
            .map(|i| vec![r * a + i + 1, (r + 1) * a + i + 1])
            .collect();
        let mut pm = perm_from_cycles(n, &cycles);
        if perm_parity(&pm) == 1 {
            pm = perm_compose(&pm, &perm_from_cycles(n, &[vec![1, 2]]));
        }
        gens.push(pm);
    }
    debug_assert!(gens.iter().all(|g| perm_parity(g) == 0), "G_{{a,b}} generators must be even");
    gens
}

/// A generating set of the subgroup described by `d` inside A_n.
pub fn generators(d: &SubgroupDescriptor, n: u32) -> Result<Vec<Perm>, Error> {
    match d {
        SubgroupDescriptor::PointStabilizer => {
            if n < 2 {
                return Err(Error::BadDescriptor(format!("point stabilizer needs n >= 2, got {n}")));
            }
            Ok(young_alternating_gens(&[n - 1, 1], n))
        }
        SubgroupDescriptor::MaxIntransitive(a, b) => {
            if a + b != n || *a < *b || *b < 1 {
                return Err(Error::BadDescriptor(format!(
                    "intransitive:{a},{b} must satisfy a+b={n}, a >= b >= 1"
                )));
            }
            Ok(young_alternating_gens(&[*a, *b], n))
        }
        SubgroupDescriptor::YoungAlternating(nu) => {
            if nu.size() != n {
                return Err(Error::BadDescriptor(format!(
                    "young composition {nu:?} does not sum to {n}"
                )));
            }
            Ok(young_alternating_gens(nu.parts(), n))
        }
        SubgroupDescriptor::WreathAlternating(a, b) => {
            if *a < 2 || *b < 2 || a * b != n {
                return Err(Error::BadDescriptor(format!(
                    "wreath:{a}x{b} needs a,b >= 2 and ab = {n}"
                )));
            }
            Ok(wreath_alternating_gens(*a, *b))
        }
        SubgroupDescriptor::FullAlternating => {
            let mut gens = Vec::new();
            for i in 1..=n.saturating_sub(2) {
                gens.push(perm_from_cycles(n, &[vec![i, i + 1, i + 2]]));
            }
            Ok(gens)
        }
        SubgroupDescriptor::Primitive => Err(Error::BadDescriptor(
            "primitive subgroups carry no distinguished generator model".into(),
        )),
    }
}

/// Order of the group generated by `gens`, by breadth-first closure.
/// Panics beyond the safety cap; intended for small verification groups.
pub fn group_order(gens: &[Perm], n: u32) -> u64 {
    const CAP: usize = 10_000_000;
    let ident: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(ident.clone());
    let mut queue = VecDeque::from([ident]);
    while let Some(g) = queue.pop_front() {
        for x in gens {
            let ng = perm_compose(x, &g);
            if !seen.contains(&ng) {
                assert!(seen.len() < CAP, "group closure exceeded the safety cap");
                seen.insert(ng.clone());
                queue.push_back(ng);
            }
        }
    }
    seen.len() as u64
}

/// All k-subsets of {1,…,n} in lexicographic order.
pub fn omega_k(n: u32, k: u32) -> Vec<Vec<u32>> {
    assert!(k <= n, "omega_k needs k <= n, got k={k}, n={n}");
    (1..=n).combinations(k as usize).collect()
}

fn subsets0(n: u32, k: u32) -> Vec<Vec<u32>> {
    (0..n).combinations(k as usize).collect()
}

/// Number of orbits of the generated group on k-subsets, via union-find.
pub fn orbit_count_gens(gens: &[Perm], n: u32, k: u32) -> usize {
    let subsets = subsets0(n, k);
    let index: HashMap<&[u32], usize> =
        subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..subsets.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (i, s) in subsets.iter().enumerate() {
            let mut t: Vec<u32> = s.iter().map(|&x| g[x as usize]).collect();
            t.sort_unstable();
            let j = index[t.as_slice()];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let roots: HashSet<usize> = (0..subsets.len()).map(|i| find(&mut parent, i)).collect();
    roots.len()
}

/// i_k of the described subgroup: the number of its orbits on k-subsets.
pub fn orbit_count(d: &SubgroupDescriptor, n: u32, k: u32) -> Result<usize, Error> {
    Ok(orbit_count_gens(&generators(d, n)?, n, k))
}

/// Which module to build: the permutation module M_k on k-subsets or one
/// of the two dual Specht quotients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleKind {
    M(u32),
    S1Star,
    S2Star,
}

/// A module request: kind, ambient n, and the field characteristic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModuleSpec {
    pub kind: ModuleKind,
    pub n: u32,
    pub p: u32,
}

impl ModuleSpec {
    /// Dimension of the carrier space.
    pub fn dim(&self) -> usize {
        match self.kind {
            ModuleKind::M(k) => subsets0(self.n, k).len(),
            ModuleKind::S1Star => self.n as usize - 1,
            ModuleKind::S2Star => (self.n * (self.n - 3) / 2) as usize,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        match self.kind {
            ModuleKind::M(k) => {
                if k > self.n / 2 {
                    return Err(Error::OutOfRange(format!(
                        "M_k needs k <= n/2, got k={k}, n={}",
                        self.n
                    )));
                }
            }
            ModuleKind::S1Star => {
                if self.n < 2 {
                    return Err(Error::OutOfRange("S1* needs n >= 2".into()));
                }
            }
            ModuleKind::S2Star => {
                if self.n < 5 {
                    return Err(Error::OutOfRange("S2* needs n >= 5".into()));
                }
            }
        }
        Ok(())
    }
}

/// Action matrices of g on the basis of k-subsets (column convention).
pub fn m_k_matrices(gens: &[Perm], n: u32, k: u32, p: u32) -> Vec<GFpMatrix> {
    let subsets = subsets0(n, k);
    let index: HashMap<&[u32], usize> =
        subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    gens.iter()
        .map(|g| {
            let mut mat = GFpMatrix::zero(p, subsets.len(), subsets.len());
            for (i, s) in subsets.iter().enumerate() {
                let mut t: Vec<u32> = s.iter().map(|&x| g[x as usize]).collect();
                t.sort_unstable();
                mat.set(index[t.as_slice()], i, 1);
            }
            mat
        })
        .collect()
}

/// Action matrices on S_1* in the basis v̄_1,…,v̄_{n−1}: g·v̄_i = v̄_{g(i)},
/// with v̄_n rewritten as −(v̄_1 + … + v̄_{n−1}).
pub fn s1star_matrices(gens: &[Perm], n: u32, p: u32) -> Vec<GFpMatrix> {
    let dim = n as usize - 1;
    gens.iter()
        .map(|g| {
            let mut mat = GFpMatrix::zero(p, dim, dim);
            for i in 0..dim {
                let j = g[i] as usize;
                if j < dim {
                    mat.set(j, i, 1);
                } else {
                    for t in 0..dim {
                        mat.set(t, i, -1);
                    }
                }
            }
            mat
        })
        .collect()
}

/// The S_2* basis in 0-based pairs: all pairs inside {0,…,n−3}, then
/// (i, n−2) for i ≤ n−4. (1-based this is the pairs inside {1,…,n−2} and
/// {i, n−1} for i ≤ n−3.)
pub fn s2star_basis(n: u32) -> Vec<(u32, u32)> {
    let mut basis: Vec<(u32, u32)> = (0..n - 2)
        .combinations(2)
        .map(|v| (v[0], v[1]))
        .collect();
    basis.extend((0..n - 3).map(|i| (i, n - 2)));
    basis
}

/// Expansion of every 0-based pair over the S_2* basis, as signed integer
/// vectors. Basis pairs map to unit vectors; the four rewriting rules
/// expand the pairs touching the last two points.
fn s2star_rewrite(n: u32) -> (Vec<(u32, u32)>, HashMap<(u32, u32), Vec<i64>>) {
    let basis = s2star_basis(n);
    let index: HashMap<(u32, u32), usize> =
        basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let dim = basis.len();
    let mut table: HashMap<(u32, u32), Vec<i64>> = HashMap::new();
    for &b in &basis {
        let mut v = vec![0i64; dim];
        v[index[&b]] = 1;
        table.insert(b, v);
    }
    // pair of the two last points: plus the sum over all deep pairs
    let mut v = vec![0i64; dim];
    for c in (0..n - 2).combinations(2) {
        v[index[&(c[0], c[1])]] += 1;
    }
    table.insert((n - 2, n - 1), v);
    // (n-3, n-2): minus the deep pairs, minus the whole second basis family
    let mut v = vec![0i64; dim];
    for c in (0..n - 2).combinations(2) {
        v[index[&(c[0], c[1])]] -= 1;
    }
    for i in 0..n - 3 {
        v[index[&(i, n - 2)]] -= 1;
    }
    table.insert((n - 3, n - 2), v);
    // (n-3, n-1): plus the pairs avoiding the three last points, plus the
    // second basis family
    let mut v = vec![0i64; dim];
    for c in (0..n - 3).combinations(2) {
        v[index[&(c[0], c[1])]] += 1;
    }
    for i in 0..n - 3 {
        v[index[&(i, n - 2)]] += 1;
    }
    table.insert((n - 3, n - 1), v);
    // (i, n-1) for deep i: minus the sum of all pairs (i, j), j != i, j < n-1
    for i in 0..n - 3 {
        let mut v = vec![0i64; dim];
        for j in 0..n - 1 {
            if j == i {
                continue;
            }
            let pair = (i.min(j), i.max(j));
            let unit = &table[&pair];
            for (acc, x) in v.iter_mut().zip(unit) {
                *acc -= x;
            }
        }
        table.insert((i, n - 1), v);
    }
    (basis, table)
}

/// Action matrices on S_2* (column convention), n ≥ 5.
pub fn s2star_matrices(gens: &[Perm], n: u32, p: u32) -> Vec<GFpMatrix> {
    assert!(n >= 5, "S2* needs n >= 5, got {n}");
    let (basis, table) = s2star_rewrite(n);
    let index: HashMap<(u32, u32), usize> =
        basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let dim = basis.len();
    gens.iter()
        .map(|g| {
            let mut mat = GFpMatrix::zero(p, dim, dim);
            for &b in &basis {
                let (x, y) = (g[b.0 as usize], g[b.1 as usize]);
                let img = (x.min(y), x.max(y));
                let vec = &table[&img];
                let col = index[&b];
                for (r, &v) in vec.iter().enumerate() {
                    mat.set(r, col, v);
                }
            }
            mat
        })
        .collect()
}

/// Action matrices of the described subgroup on the requested module.
pub fn module_matrices(spec: &ModuleSpec, d: &SubgroupDescriptor) -> Result<Vec<GFpMatrix>, Error> {
    spec.validate()?;
    let gens = generators(d, spec.n)?;
    Ok(match spec.kind {
        ModuleKind::M(k) => m_k_matrices(&gens, spec.n, k, spec.p),
        ModuleKind::S1Star => s1star_matrices(&gens, spec.n, spec.p),
        ModuleKind::S2Star => s2star_matrices(&gens, spec.n, spec.p),
    })
}

/// Dimension of the subspace of vectors fixed by every generator, which is
/// the space of G-invariants of the module.
pub fn invariant_dim(spec: &ModuleSpec, d: &SubgroupDescriptor) -> Result<usize, Error> {
    let mats = module_matrices(spec, d)?;
    if mats.is_empty() {
        // the described group is trivial; everything is fixed
        return Ok(spec.dim());
    }
    Ok(fixed_subspace(&mats).len())
}
