//! Triangular decompositions, parabolic sets of roots and their trichotomy, and the cone `Φ_P`.
//!
//! The triangular decomposition with minimal `Δ⁰` for a flag `(φ1, φ2)` is realized by the
//! lexicographic order `(φ1, φ2, ψ)`, where `ψ` is the height of the finite part; `ψ` is
//! nonzero on every real root of a finite Levi, so the order is total on real roots there.

mod cone;
mod flag;
mod parabolic;

pub use cone::{
    compute_ng, finite_roots, lex_decomposition, phi_p, simple_roots_of_positive_system, ConeData,
    MAX_BASE_WINDOW,
};
pub use flag::{eval, triangular_decomposition, FunctionalFlag, TriDecomp};
pub use parabolic::{
    assemble_parabolic, check_parabolic_axioms, classify_flag, classify_membership,
    classify_parabolic, explicit, ParabolicSet, ParabolicTag,
};

use crate::finlie::FinLieError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootparError {
    #[error("functional must have {0} coordinates (finite part then δ)")]
    FlagShape(usize),
    #[error("φ1 is the zero functional")]
    ZeroFunctional,
    #[error("φ2 vanishes on every root of Δ⁰")]
    DegenerateRefinement,
    #[error("a Borel refinement was requested but {0} roots remain in P ∩ -P; supply φ2")]
    MissingRefinement(usize),
    #[error("P = Δ on the window; the trichotomy applies to proper subsets")]
    Improper,
    #[error("decomposition is not of Borel type: {0} roots in Δ⁰")]
    NotBorel(usize),
    #[error("window too small to contain a base ({0} indecomposable roots found)")]
    WindowTooSmall(usize),
    #[error("cone data needs a flag-defined parabolic set")]
    NeedsFlag,
    #[error("cone data needs a standard parabolic, got {0}")]
    NotStandard(ParabolicTag),
    #[error("δ must lie in P (φ1(δ) > 0)")]
    DeltaNegative,
    #[error(transparent)]
    Fin(#[from] FinLieError),
}

#[cfg(test)]
mod tests;
