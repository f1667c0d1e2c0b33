//! Finite-dimensional simple Lie algebras of types A1, A2, A3 and C2.

mod algebra;
mod diagram;
mod elt;
pub mod weyl;

pub use algebra::{build_simple, weight_form_with, PositiveRoot, SimpleLieAlgebra, SimpleType};
pub use diagram::{eigenspace, sigma_a2, DiagramAut};
pub use elt::{FinWeight, LieElt};

use std::collections::BTreeSet;

use crate::exact::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinLieError {
    #[error("unsupported simple type `{0}` (expected A1, A2, A3 or C2)")]
    UnsupportedType(String),
    #[error("operation requires type {expected}, got {found}")]
    WrongType {
        expected: SimpleType,
        found: SimpleType,
    },
    #[error("automorphism does not act on basis vector {0} by a signed permutation")]
    NotSignedPermutation(String),
    #[error("reflection group exceeded {0} elements; the reflection set is not of finite type")]
    InfiniteGroup(usize),
}

impl SimpleLieAlgebra {
    /// Simple reflections as matrices on fundamental-weight coordinates.
    pub fn simple_reflections(&self) -> Vec<Matrix> {
        self.simple_roots()
            .iter()
            .map(|r| weyl::reflection_matrix(self.weight_gram(), &r.0))
            .collect()
    }

    pub fn weyl_group(&self) -> Result<Vec<Matrix>, FinLieError> {
        weyl::generate_group(&self.simple_reflections(), self.rank())
    }

    /// Orbit of `v` under the subgroup generated by reflections in `roots`.
    pub fn weyl_orbit(
        &self,
        roots: &[FinWeight],
        v: &FinWeight,
    ) -> Result<BTreeSet<FinWeight>, FinLieError> {
        let gens: Vec<Matrix> = roots
            .iter()
            .map(|r| weyl::reflection_matrix(self.weight_gram(), &r.0))
            .collect();
        let group = weyl::generate_group(&gens, self.rank())?;
        Ok(weyl::orbit(&group, v))
    }
}
