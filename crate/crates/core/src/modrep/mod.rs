//! Weight modules materialized on degree windows.
//!
//! Every module here is infinite-dimensional in principle and is realized lazily: basis vectors
//! are labels, generators act on labels, and an action that would leave the materialized window
//! returns [`ModError::Boundary`]. Identities are asserted only on interior vectors, i.e. those
//! for which every action involved stays inside the window.

mod exppoly;
mod fin;
mod induced;
mod loopmod;
mod prop42;
mod shadow;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::affine::{AffElt, AffGen, AffWeight, AffineAlgebra};
use crate::exact::Rat;

pub use exppoly::{exp_poly_eval, is_purely_exponential, ExpPolynomial, ExpTerm};
pub use fin::{
    adjoint_rep, finite_dim_sl2, natural_rep, tensor_product, DenseSl2, FinModule, MatrixModule,
    TensorModule,
};
pub use induced::{
    imaginary_verma, induced_truncated, standard_verma_a1, CharacterModule, Induced, LeviDenseSl2,
    Part, Truncation, WordLabel, simple_coords,
};
pub use loopmod::{
    boundedness_probe, twisted_loop_fixed_points, FixedLabel, FixedLoopModule, GrowthReport,
    LoopLabel, LoopModule,
};
pub use prop42::{prop42_block, prop42_case, prop42_entry, prop42_entry_literal, prop42_matrix};
pub use shadow::{
    build_pm, find_extreme_weight, shadow_detect, shadow_table, ShadowOutcome, ShadowReport,
    ShadowTable,
};

/// Sparse vector keyed by basis labels.
pub type SparseVec<L> = BTreeMap<L, Rat>;

pub fn sv_add<L: Ord>(acc: &mut SparseVec<L>, l: L, c: Rat) {
    if c.is_zero() {
        return;
    }
    match acc.entry(l) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn sv_axpy<L: Ord + Clone>(acc: &mut SparseVec<L>, c: &Rat, other: &SparseVec<L>) {
    if c.is_zero() {
        return;
    }
    for (l, v) in other {
        sv_add(acc, l.clone(), c * v);
    }
}

pub fn sv_scale<L: Ord + Clone>(v: &SparseVec<L>, c: &Rat) -> SparseVec<L> {
    let mut out = SparseVec::new();
    sv_axpy(&mut out, c, v);
    out
}

pub fn sv_single<L: Ord>(l: L) -> SparseVec<L> {
    let mut out = SparseVec::new();
    out.insert(l, Rat::one());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("action leaves the materialized window: {0}")]
    Boundary(String),
    #[error("element is not invertible on this module: {0}")]
    NotInvertible(String),
    #[error("element does not belong to the acting algebra: {0}")]
    NotInAlgebra(String),
    #[error("invalid module data: {0}")]
    Input(String),
}

impl ModError {
    pub fn is_boundary(&self) -> bool {
        matches!(self, ModError::Boundary(_))
    }
}

/// A weight module over an affine algebra, realized on a finite window of labels.
pub trait WeightModule {
    type Label: Clone + Ord + Debug;

    fn algebra(&self) -> &AffineAlgebra;

    fn weight(&self, l: &Self::Label) -> AffWeight;

    /// Action of a basis generator of the ambient loop algebra.
    fn act_gen(&self, g: AffGen, l: &Self::Label) -> Result<SparseVec<Self::Label>, ModError>;

    fn act(&self, x: &AffElt, l: &Self::Label) -> Result<SparseVec<Self::Label>, ModError> {
        let mut out = SparseVec::new();
        for (g, c) in x.terms() {
            let v = self.act_gen(g, l)?;
            sv_axpy(&mut out, &c, &v);
        }
        Ok(out)
    }

    fn act_vec(
        &self,
        x: &AffElt,
        v: &SparseVec<Self::Label>,
    ) -> Result<SparseVec<Self::Label>, ModError> {
        let mut out = SparseVec::new();
        for (l, c) in v {
            let w = self.act(x, l)?;
            sv_axpy(&mut out, c, &w);
        }
        Ok(out)
    }

    /// The materialized basis.
    fn basis(&self) -> Vec<Self::Label>;

    /// Scalar by which `K` acts.
    fn level(&self) -> Rat {
        Rat::zero()
    }

    /// `f⁻¹ · l` for an element `f` acting bijectively; most modules do not support it.
    fn f_inverse(&self, f: &AffElt, _l: &Self::Label) -> Result<SparseVec<Self::Label>, ModError> {
        Err(ModError::NotInvertible(format!("{f:?}")))
    }

    fn f_inverse_vec(
        &self,
        f: &AffElt,
        v: &SparseVec<Self::Label>,
    ) -> Result<SparseVec<Self::Label>, ModError> {
        let mut out = SparseVec::new();
        for (l, c) in v {
            let w = self.f_inverse(f, l)?;
            sv_axpy(&mut out, c, &w);
        }
        Ok(out)
    }

    /// `dim M^w`, or `None` when `w` lies outside the materialized window.
    fn multiplicity(&self, w: &AffWeight) -> Option<usize> {
        let b = self.basis();
        let n = b.iter().filter(|l| self.weight(l) == *w).count();
        (n > 0).then_some(n)
    }
}

/// `[x, y]·v = x·(y·v) − y·(x·v)` on one basis vector. `Ok(None)` when `v` is not interior
/// for this pair.
pub fn check_bracket<M: WeightModule>(
    m: &M,
    x: &AffElt,
    y: &AffElt,
    v: &M::Label,
) -> Result<Option<bool>, ModError> {
    let run = || -> Result<bool, ModError> {
        let xy = m.algebra().bracket(x, y);
        let lhs = m.act(&xy, v)?;
        let yv = m.act(y, v)?;
        let xv = m.act(x, v)?;
        let mut rhs = m.act_vec(x, &yv)?;
        let yxv = m.act_vec(y, &xv)?;
        sv_axpy(&mut rhs, &Rat::int(-1), &yxv);
        Ok(lhs == rhs)
    };
    skip_boundary(run())
}

/// Every term of `g·v` has weight `wt(v) + wt(g)`. `Ok(None)` at the window edge.
pub fn check_weight_additivity<M: WeightModule>(
    m: &M,
    g: AffGen,
    v: &M::Label,
) -> Result<Option<bool>, ModError> {
    let target = &m.weight(v) + &m.algebra().gen_weight(g);
    let run = || -> Result<bool, ModError> {
        let out = m.act_gen(g, v)?;
        Ok(out.keys().all(|l| m.weight(l) == target))
    };
    skip_boundary(run())
}

/// `K` acts by the level and `D` by the δ-coordinate of the weight.
pub fn check_central<M: WeightModule>(m: &M, v: &M::Label) -> Result<bool, ModError> {
    let k = m.act_gen(AffGen::K, v)?;
    let d = m.act_gen(AffGen::D, v)?;
    let w = m.weight(v);
    Ok(k == sv_scale(&sv_single(v.clone()), &m.level())
        && d == sv_scale(&sv_single(v.clone()), &w.d))
}

/// Maps a window-edge error to `Ok(None)`.
pub fn skip_boundary<T>(r: Result<T, ModError>) -> Result<Option<T>, ModError> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(e) if e.is_boundary() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Multiplicity table of a module's materialized basis, keyed by weight.
pub fn multiplicity_table<M: WeightModule>(m: &M) -> BTreeMap<AffWeight, usize> {
    let mut out = BTreeMap::new();
    for l in m.basis() {
        *out.entry(m.weight(&l)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests;
