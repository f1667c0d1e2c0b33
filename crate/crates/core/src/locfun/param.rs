use serde::Serialize;

use super::{f_power, twist_module, LocalizedVerma, TwistSpec};
use crate::affine::AffRoot;
use crate::exact::{Poly, Rat};
use crate::finlie::FinWeight;
use crate::modrep::{sv_scale, sv_single, ModError, SparseVec, WeightModule};

use super::localize_imaginary_verma;

/// Roots of the annihilation polynomial `p` with `e·(f^x·v) = p(x) f^{x−1}·v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistSolution {
    #[serde(serialize_with = "ser_poly")]
    pub poly: Poly,
    /// Rational roots, each verified by evaluating `e·(f^x·v)` directly.
    pub roots: Vec<Rat>,
    /// Set when the roots are irrational.
    pub discriminant: Option<Rat>,
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// `binom(−x, i)` as a polynomial in `x`.
fn binom_neg(i: u32) -> Poly {
    let mut acc = Poly::constant(Rat::one());
    for j in 0..i {
        let fac = Poly::new(vec![Rat::int(-(j as i64)), Rat::int(-1)]);
        acc = (&acc * &fac).scale(&Rat::new(1, j as i64 + 1));
    }
    acc
}

/// The scalar `s` with `a = s·b`, if `a` is a multiple of the nonzero vector `b`.
fn ratio<L: Ord + Clone>(a: &SparseVec<L>, b: &SparseVec<L>) -> Option<Rat> {
    let (l, c) = b.iter().next()?;
    let s = a.get(l).cloned().unwrap_or_else(Rat::zero) / c;
    (sv_scale(b, &s) == *a).then_some(s)
}

/// `p(x) = Σ_i s_i binom(−x, i)`, where `(ad f)^i(e)·f^{−i}·v = s_i f^{−1}·v`.
///
/// Since `e·(f^x·v) = f^x·(Θ_{−x}(e)·v)`, `p(x)` is the coefficient in
/// `e·(f^x·v) = p(x) f^{x−1}·v`.
pub fn derive_twist_poly<M: WeightModule>(
    m: &M,
    spec: &TwistSpec,
    v: &M::Label,
) -> Result<Poly, ModError> {
    let a = m.algebra();
    let v = sv_single(v.clone());
    let target = m.f_inverse_vec(&spec.f, &v)?;
    let mut p = Poly::zero();
    let mut y = spec.e.clone();
    let mut finv = v;
    let mut i = 0u32;
    while !y.is_zero() {
        if i > 0 {
            finv = m.f_inverse_vec(&spec.f, &finv)?;
        }
        let w = m.act_vec(&y, &finv)?;
        let s = if w.is_empty() {
            Rat::zero()
        } else {
            ratio(&w, &target).ok_or_else(|| {
                ModError::Input("v is not an eigenvector of f e on its f-string".into())
            })?
        };
        p = &p + &binom_neg(i).scale(&s);
        y = a.bracket(&spec.f, &y);
        i += 1;
    }
    Ok(p)
}

/// Rational `x` with `e·(f^x·v) = 0`, for `v` an eigenvector of `f e`.
pub fn find_twist_parameter<M: WeightModule + Clone>(
    m: &M,
    spec: &TwistSpec,
    v: &M::Label,
) -> Result<TwistSolution, ModError> {
    let poly = derive_twist_poly(m, spec, v)?;
    let (roots, discriminant) = match poly.rational_roots_upto_quadratic() {
        Ok(r) => (r, None),
        Err(d) => (Vec::new(), Some(d)),
    };
    for x in &roots {
        // f^x·v is the label v of Φ^{−x}M.
        let tw = twist_module(m.clone(), spec.with_x(-x));
        let out = tw.act(&spec.e, v)?;
        if !out.is_empty() {
            return Err(ModError::Input(format!("root {x} fails direct evaluation")));
        }
    }
    Ok(TwistSolution {
        poly,
        roots,
        discriminant,
    })
}

fn verma_spec(m: &LocalizedVerma) -> Result<TwistSpec, ModError> {
    let alpha = AffRoot::real(FinWeight::from_ints(&[2]), 0);
    TwistSpec::new(m.algebra(), &alpha, Rat::zero())
}

fn small_verma(lambda: &Rat, k: u32) -> LocalizedVerma {
    localize_imaginary_verma(lambda.clone(), (-(k as i64) - 2, 2), 0, 0, 0)
}

/// `p_λ` for the highest weight vector of the localized imaginary Verma module.
pub fn imaginary_verma_poly(lambda: &Rat) -> Result<Poly, ModError> {
    let m = small_verma(lambda, 0);
    derive_twist_poly(&m, &verma_spec(&m)?, &m.top())
}

/// `c_{k,x} = Π_{j<k} p_λ(x − j)`.
pub fn efloc_product(lambda: &Rat, x: &Rat, k: u32) -> Result<Rat, ModError> {
    let p = imaginary_verma_poly(lambda)?;
    Ok((0..k).map(|j| p.eval(&(x - Rat::int(j as i64)))).product())
}

/// `e^k·(f^x·v)` evaluated directly in `Φ^{−x} 𝒟_α M(λ)`, returned as the scalar `c` with
/// `e^k·(f^x·v) = c f^{x−k}·v` (an error if the result is not of that form).
pub fn efloc_direct(lambda: &Rat, x: &Rat, k: u32) -> Result<Rat, ModError> {
    let m = small_verma(lambda, k);
    let spec = verma_spec(&m)?.with_x(-x);
    let top = sv_single(m.top());
    // f^{x−k}·v = f^x·(f^{−k}·v), the vector f^{−k}·v of M read in Φ^{−x}M.
    let target = f_power(&m, &spec.f, -(k as i64), &top)?;
    let tw = twist_module(m, spec.clone());
    let mut cur = top;
    for _ in 0..k {
        cur = tw.act_vec(&spec.e, &cur)?;
    }
    if cur.is_empty() {
        return Ok(Rat::zero());
    }
    ratio(&cur, &target).ok_or_else(|| ModError::Input("e^k f^x v is not a multiple of f^{x−k} v".into()))
}

/// `x ∉ (x_1 + ℤ) ∪ (x_2 + ℤ)` for the rational roots of `p_λ`.
pub fn admissible(lambda: &Rat, x: &Rat) -> Result<bool, ModError> {
    let p = imaginary_verma_poly(lambda)?;
    match p.rational_roots_upto_quadratic() {
        Ok(roots) => Ok(roots.iter().all(|r| !(x - r).is_integer())),
        Err(_) => Ok(true),
    }
}
