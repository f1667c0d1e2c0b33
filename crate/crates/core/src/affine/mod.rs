//! Untwisted and twisted affine Lie algebras over a simple base, with roots on degree windows.

mod algebra;
mod elt;
mod weight;

pub use algebra::{heisenberg_check, AffineAlgebra, Sl2Triple};
pub use elt::{AffElt, AffGen};
pub use weight::{AffRoot, AffWeight, DegreeWindow, RootKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AffineError {
    #[error("unknown affine algebra `{0}` (expected A1x1, A2x1, A3x1, C2x1 or A2x2)")]
    UnknownAlgebra(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("{0} is imaginary; sl2-triples exist only for real roots")]
    ImaginaryRoot(String),
    #[error("root vectors of {0} do not generate an sl2")]
    Degenerate(String),
}
