//! Combinatorics and exact linear algebra behind the classification of
//! irreducible restrictions of modular representations of alternating groups.
//!
//! In characteristic p the irreducible representations of the symmetric group
//! S_n are indexed by p-regular partitions of n. Over the alternating group
//! A_n some of them split into two halves E^λ_±, and the question "for which
//! subgroups G < A_n does E^λ_± stay irreducible on restriction to G?" has a
//! complete combinatorial answer for the imprimitive maximal families
//! (intransitive Young-type stabilizers and wreath-product groups) in
//! characteristics 2 and 3. This crate implements the combinatorics that
//! answer feeds on, the decision procedures themselves, and a `verify`
//! harness that replays the desk-scale enumerations supporting them:
//!
//! * [`partitions`]: p-regular partitions, the basic spin partition β_n,
//!   doubles, and the splitting class (partitions whose S_n-irreducible
//!   splits over A_n).
//! * [`nodes`]: residues, i-signatures, normal and conormal nodes, the
//!   crystal operators ẽ_i and f̃_i, and the Jantzen-Seitz test.
//! * [`mullineux`]: p-rims, Mullineux symbols, and the Mullineux bijection
//!   computed by two independent algorithms.
//! * [`branching`]: JS truncations, reachability certificates for
//!   composition factors of restrictions to smaller symmetric groups, and
//!   the exceptional-shape bookkeeping the classification depends on.
//! * [`gfp_linalg`]: dense row-reduction, nullspaces, and common fixed
//!   subspaces over GF(p).
//! * [`permmod`]: permutation modules on k-subsets, the dual Specht
//!   quotients S_1* and S_2*, subgroup generator sets, invariant dimensions,
//!   and orbit counting.
//! * [`verdicts`]: clause-level decision procedures (Theorems A through D
//!   of the classification plus the basic spin propositions).
//! * [`verify`]: named, reproducible check suites over all of the above.

pub mod branching;
pub mod error;
pub mod gfp_linalg;
pub mod mullineux;
pub mod nodes;
pub mod partitions;
pub mod permmod;
pub mod verdicts;
pub mod verify;

pub use error::Error;
pub use partitions::{Composition, Partition};
