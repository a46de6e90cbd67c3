//! Exact calculator for the orientation signs that real line-bundle
//! automorphisms induce on determinant lines over real curves.
//!
//! Everything is finite combinatorics over the two-element field: a curve is
//! a topological type `(genus, ovals, separating?)`, real Spin structures are
//! quadratic refinements of the mod-2 intersection form, and the sign of an
//! automorphism acting on determinant-line orientations reduces to a handful
//! of F2 functionals (`beta0`, `s_top`, `s_N`, the Arf shift, Pin swap
//! parities). The [`oracle`] module re-derives the same answers by brute
//! force at small genus so the formula layer never has to be taken on faith.

pub mod autgroup;
pub mod curve;
pub mod f2;
pub mod oracle;
pub mod signs;
pub mod spin;
