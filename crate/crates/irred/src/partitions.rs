//! Partitions, compositions, p-regularity, the basic spin partition β_n,
//! doubles, and membership in the splitting class.
//!
//! A partition is stored in canonical form: strictly positive parts, weakly
//! decreasing, no trailing zeros. Rows and columns are 1-based throughout
//! the crate; `part(r)` returns 0 for rows below the diagram, which keeps
//! boundary cases in the combinatorics uniform.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A partition of a nonnegative integer, weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.iter().any(|&x| x == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that may contain trailing zeros.
    /// Interior zeros (a zero followed by a positive part) are rejected.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The size |λ|, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The number of rows h(λ).
    pub fn h(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The r-th part for 1-based r, or 0 when r exceeds h(λ).
    pub fn part(&self, r: usize) -> u32 {
        if r >= 1 && r <= self.0.len() {
            self.0[r - 1]
        } else {
            0
        }
    }

    /// True iff no part value occurs p or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        let mut run = 1u32;
        for w in self.0.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= p {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "5,3,1"; the empty string denotes the empty partition.
    /// Parsing is strict: whitespace, zeros and non-decreasing sequences
    /// are rejected.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v).map_err(|_| Error::ParsePartition(s.to_string())),
            Err(_) => Err(Error::ParsePartition(s.to_string())),
        }
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A composition: ordered positive parts with no monotonicity requirement.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.iter().any(|&x| x == 0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn h(&self) -> usize {
        self.0.len()
    }

    /// The composition reinterpreted as a partition, if already sorted.
    pub fn as_partition(&self) -> Result<Partition, Error> {
        Partition::new(self.0.clone())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The basic spin partition: (n/2+1, n/2-1) for even n with the zero part
/// dropped, ((n+1)/2, (n-1)/2) for odd n. `beta(0)` is the empty partition.
pub fn beta(n: u32) -> Partition {
    let (a, b) = if n == 0 {
        (0, 0)
    } else if n % 2 == 0 {
        (n / 2 + 1, n / 2 - 1)
    } else {
        ((n + 1) / 2, (n - 1) / 2)
    };
    let parts: Vec<u32> = [a, b].into_iter().filter(|&x| x > 0).collect();
    Partition(parts)
}

/// The double of λ: the concatenation (β_{λ_1}, ..., β_{λ_h}).
///
/// The result need not be weakly decreasing, hence a composition. When it
/// is a 2-regular partition and every λ_r avoids 2 mod 4, the double lands
/// in the splitting class for p = 2.
pub fn double(lam: &Partition) -> Composition {
    let mut out = Vec::with_capacity(2 * lam.h());
    for &part in lam.parts() {
        out.extend_from_slice(beta(part).parts());
    }
    Composition(out)
}

/// For 2-regular λ, the unique μ with double(μ) = λ whose parts avoid
/// 2 mod 4, if one exists. The block decomposition is forced: every block
/// of the double is (β_m) for some m, read off two consecutive parts at a
/// time (difference 1 or 2) with a single trailing 1 allowed.
pub fn splitting_double_preimage(lam: &Partition) -> Option<Partition> {
    let parts = lam.parts();
    let mut mu = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if i + 1 < parts.len() {
            let (a, b) = (parts[i], parts[i + 1]);
            let m = a + b;
            if a - b <= 2 && beta(m).parts() == [a, b] && m % 4 != 2 {
                mu.push(m);
                i += 2;
                continue;
            }
        }
        if parts[i] == 1 {
            // beta(1) = (1); beta(2) = (2) is excluded since 2 = 2 mod 4
            mu.push(1);
            i += 1;
            continue;
        }
        return None;
    }
    let mu = Partition::new(mu).ok()?;
    if !mu.is_p_regular(2) {
        return None;
    }
    debug_assert_eq!(
        double(&mu).parts(),
        lam.parts(),
        "double of the reconstructed preimage must give back the input"
    );
    Some(mu)
}

/// Membership in the splitting class: the p-regular partitions whose
/// irreducible splits into a pair E^λ_± over the alternating group.
///
/// For p = 2 these are the 2-regular doubles of 2-regular partitions with
/// no part congruent to 2 mod 4; for odd p the Mullineux fixed points.
/// Panics if λ is not p-regular.
pub fn in_splitting_class(lam: &Partition, p: u32) -> bool {
    assert!(
        lam.is_p_regular(p),
        "in_splitting_class requires a {p}-regular partition, got {lam:?}"
    );
    if p == 2 {
        splitting_double_preimage(lam).is_some()
    } else {
        crate::mullineux::is_mullineux_fixed(lam, p)
    }
}

/// All p-regular partitions of n in descending lexicographic order.
pub fn enumerate_p_regular(n: u32, p: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, p, &mut prefix, &mut out);
    out
}

fn descend(left: u32, max_part: u32, p: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for first in (1..=left.min(max_part)).rev() {
        // reject a run of p equal parts as early as possible
        let run = 1 + prefix.iter().rev().take_while(|&&x| x == first).count();
        if run as u32 >= p {
            continue;
        }
        prefix.push(first);
        descend(left - first, first, p, prefix, out);
        prefix.pop();
    }
}

/// All members of the splitting class of size n, descending lexicographic.
pub fn enumerate_splitting(n: u32, p: u32) -> Vec<Partition> {
    enumerate_p_regular(n, p)
        .into_iter()
        .filter(|lam| in_splitting_class(lam, p))
        .collect()
}
