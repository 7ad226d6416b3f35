//! Exact dense linear algebra over GF(p): rank, reduced row echelon form,
//! nullspace bases, and common fixed subspaces of a family of operators.
//!
//! Two storage layouts share one interface: for p = 2 rows are packed into
//! machine words and elimination is word-parallel XOR; for odd p entries are
//! bytes with arithmetic in u32. Pivoting is deterministic (first nonzero),
//! so computed bases are reproducible across runs and platforms.

use crate::error::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    /// p = 2: each row occupies `words_per_row` u64 words, bit c of a row
    /// lives at word c/64, bit c%64.
    Bits { words_per_row: usize, data: Vec<u64> },
    /// Odd p: row-major bytes, always reduced mod p.
    Bytes(Vec<u8>),
}

/// A dense matrix over the prime field with p elements, p < 256.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    storage: Storage,
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64 % p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0, "zero has no inverse mod {p}");
    pow_mod(a, p - 2, p)
}

impl GFpMatrix {
    /// A zero matrix. Panics unless p is a prime below 256.
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        assert!(is_prime(p) && p < 256, "entries are residues mod a prime p < 256, got {p}");
        let storage = if p == 2 {
            let wpr = cols.div_ceil(64);
            Storage::Bits { words_per_row: wpr, data: vec![0; wpr * rows] }
        } else {
            Storage::Bytes(vec![0; rows * cols])
        };
        GFpMatrix { p, rows, cols, storage }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed entries, reducing them mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must share a length, got ragged input"
        );
        let mut m = Self::zero(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        match &self.storage {
            Storage::Bits { words_per_row, data } => {
                ((data[r * words_per_row + c / 64] >> (c % 64)) & 1) as u8
            }
            Storage::Bytes(data) => data[r * self.cols + c],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        let v = v.rem_euclid(self.p as i64) as u8;
        match &mut self.storage {
            Storage::Bits { words_per_row, data } => {
                let w = &mut data[r * *words_per_row + c / 64];
                let bit = 1u64 << (c % 64);
                if v == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Storage::Bytes(data) => data[r * self.cols + c] = v,
        }
    }

    /// In-place reduced row echelon form; returns (rank, pivot columns).
    fn rref(&mut self) -> (usize, Vec<usize>) {
        match &mut self.storage {
            Storage::Bits { words_per_row, data } => {
                rref_bits(self.rows, self.cols, *words_per_row, data)
            }
            Storage::Bytes(data) => rref_bytes(self.p, self.rows, self.cols, data),
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().0
    }

    /// A basis of {x : Mx = 0}, each vector as residues mod p. The basis is
    /// the standard one read off the reduced echelon form: one vector per
    /// free column, deterministic.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let mut work = self.clone();
        let (rank, pivots) = work.rref();
        let is_pivot = {
            let mut mark = vec![false; self.cols];
            for &c in &pivots {
                mark[c] = true;
            }
            mark
        };
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = vec![0u8; self.cols];
            x[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let coeff = work.get(i, free) as u32;
                x[pc] = ((self.p - coeff) % self.p) as u8;
            }
            basis.push(x);
        }
        basis
    }

    /// Matrix-vector product over GF(p).
    pub fn mul_vec(&self, x: &[u8]) -> Vec<u8> {
        assert_eq!(x.len(), self.cols, "vector length must match column count");
        let mut out = vec![0u8; self.rows];
        for (r, entry) in out.iter_mut().enumerate() {
            let mut acc = 0u64;
            for c in 0..self.cols {
                acc += self.get(r, c) as u64 * x[c] as u64;
            }
            *entry = (acc % self.p as u64) as u8;
        }
        out
    }
}

fn rref_bits(rows: usize, cols: usize, wpr: usize, data: &mut [u64]) -> (usize, Vec<usize>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let (w, b) = (c / 64, c % 64);
        let Some(piv) = (rank..rows).find(|&r| (data[r * wpr + w] >> b) & 1 == 1) else {
            continue;
        };
        if piv != rank {
            for j in 0..wpr {
                data.swap(piv * wpr + j, rank * wpr + j);
            }
        }
        for r in 0..rows {
            if r != rank && (data[r * wpr + w] >> b) & 1 == 1 {
                for j in 0..wpr {
                    data[r * wpr + j] ^= data[rank * wpr + j];
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, pivots)
}

fn rref_bytes(p: u32, rows: usize, cols: usize, data: &mut [u8]) -> (usize, Vec<usize>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(data[rank * cols + c] as u32, p);
        if inv != 1 {
            for j in c..cols {
                let v = data[rank * cols + j] as u32 * inv % p;
                data[rank * cols + j] = v as u8;
            }
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = data[r * cols + c] as u32;
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for j in c..cols {
                let v = (data[r * cols + j] as u32 + neg * data[rank * cols + j] as u32) % p;
                data[r * cols + j] = v as u8;
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, pivots)
}

/// A basis of the common fixed space ∩ ker(A - id) of a family of square
/// operators over the same field. With generators of a group action this is
/// the space of invariant vectors. Panics on dimension or field mismatch;
/// an empty family fixes everything, but has no dimension to read off, so
/// it is rejected.
pub fn fixed_subspace(actions: &[GFpMatrix]) -> Vec<Vec<u8>> {
    assert!(!actions.is_empty(), "fixed_subspace of no operators is the whole space of unknown dimension");
    let p = actions[0].p();
    let n = actions[0].rows();
    for a in actions {
        assert_eq!(a.p(), p, "operators live over different fields");
        assert!(
            a.rows() == n && a.cols() == n,
            "operators must be square of matching dimension, got {}x{}",
            a.rows(),
            a.cols()
        );
    }
    let mut stacked = GFpMatrix::zero(p, actions.len() * n, n);
    for (k, a) in actions.iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                let sub = if r == c { 1 } else { 0 };
                stacked.set(k * n + r, c, a.get(r, c) as i64 - sub);
            }
        }
    }
    stacked.nullspace()
}
