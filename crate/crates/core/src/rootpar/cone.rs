use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::flag::{eval, TriDecomp};
use super::parabolic::{ParabolicSet, ParabolicTag};
use super::RootparError;
use crate::affine::{AffRoot, AffineAlgebra, DegreeWindow};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Rat;
use crate::finlie::{weyl, FinWeight};

/// Largest symmetric window tried when searching for a base.
pub const MAX_BASE_WINDOW: i64 = 64;

fn coords(r: &AffRoot) -> Vec<Rat> {
    let mut v = r.fin.0.clone();
    v.push(Rat::int(r.n));
    v
}

fn from_coords(v: &[Rat]) -> AffRoot {
    let n = v.len() - 1;
    AffRoot::from_parts(
        FinWeight(v[..n].to_vec()),
        v[n].to_i64().expect("integral δ-coordinate"),
    )
}

/// Coefficients of `v` in the basis `base` (columns).
fn base_coords(base: &[AffRoot], v: &[Rat]) -> Vec<Rat> {
    let dim = v.len();
    let m: Matrix = (0..dim)
        .map(|i| base.iter().map(|b| coords(b)[i].clone()).collect())
        .collect();
    linalg::solve(&m, v).expect("base spans V")
}

/// Indecomposable elements of `Δ⁺` for a decomposition with `Δ⁰ = ∅`.
pub fn simple_roots_of_positive_system(
    a: &AffineAlgebra,
    t: &TriDecomp,
) -> Result<Vec<AffRoot>, RootparError> {
    if !t.zero.is_empty() {
        return Err(RootparError::NotBorel(t.zero.len()));
    }
    base_of(a, &t.plus)
}

fn base_of(a: &AffineAlgebra, plus: &[AffRoot]) -> Result<Vec<AffRoot>, RootparError> {
    let set: HashSet<&AffRoot> = plus.iter().collect();
    let mut base: Vec<AffRoot> = plus
        .iter()
        .filter(|b| {
            !plus.iter().any(|g| {
                let fin = &b.fin - &g.fin;
                let n = b.n - g.n;
                (n != 0 || !fin.is_zero()) && set.contains(&AffRoot::from_parts(fin, n))
            })
        })
        .cloned()
        .collect();
    if base.len() != a.fin_rank() + 1 {
        return Err(RootparError::WindowTooSmall(base.len()));
    }
    base.sort_by_key(|r| (r.n, r.fin.clone()));
    // Every windowed positive root must be a non-negative integer combination.
    for r in plus {
        let c = base_coords(&base, &coords(r));
        if c.iter().any(|x| !x.is_integer() || x.is_negative()) {
            return Err(RootparError::WindowTooSmall(base.len()));
        }
    }
    Ok(base)
}

/// Cone data for a standard parabolic set.
#[derive(Debug, Clone, Serialize)]
pub struct ConeData {
    pub base: Vec<AffRoot>,
    /// Indices into `base` of the Levi simple roots.
    pub levi: Vec<usize>,
    pub non_levi: Vec<usize>,
    /// `δ = Σ c_i α_i`.
    pub c: Vec<Rat>,
    pub phi_p: Vec<AffRoot>,
    /// Certificate coefficients, aligned with `phi_p`.
    pub d: Vec<Rat>,
    pub weyl_order: usize,
    pub ng: Rat,
}

impl ConeData {
    /// Checks `|W_L| δ = Σ d_β β` with all `d_β > 0`.
    pub fn certificate_holds(&self) -> bool {
        let dim = self.base[0].fin.rank() + 1;
        let mut sum = vec![Rat::zero(); dim];
        for (b, d) in self.phi_p.iter().zip(&self.d) {
            for (s, x) in sum.iter_mut().zip(coords(b)) {
                *s += d * &x;
            }
        }
        let mut expect = vec![Rat::zero(); dim];
        expect[dim - 1] = Rat::int(self.weyl_order as i64);
        sum == expect && self.d.iter().all(Rat::is_positive)
    }

    fn lattice_gens(&self) -> Vec<Vec<BigInt>> {
        self.phi_p
            .iter()
            .map(|b| {
                base_coords(&self.base, &coords(b))
                    .iter()
                    .map(|x| x.to_bigint().expect("integral root coordinates"))
                    .collect()
            })
            .collect()
    }

    /// Whether `ν`, in coordinates relative to the base, lies in `Q_P = ZΦ_P`.
    pub fn in_qp(&self, nu: &[BigInt]) -> bool {
        linalg::in_integer_span(&self.lattice_gens(), nu)
    }

    /// Rank of `Q_P`; full rank means finite index in `Q`.
    pub fn qp_rank(&self) -> usize {
        linalg::hermite_rows(&self.lattice_gens()).len()
    }
}

/// Lexicographic sign of `(φ1, φ2, ψ)` with `ψ` the height on finite parts.
fn lex_positive(a: &AffineAlgebra, p: &ParabolicSet, r: &AffRoot) -> bool {
    let f = p.flag().expect("flag-defined parabolic");
    let v1 = eval(&f.phi1, r);
    if !v1.is_zero() {
        return v1.is_positive();
    }
    if let Some(p2) = &f.phi2 {
        let v2 = eval(p2, r);
        if !v2.is_zero() {
            return v2.is_positive();
        }
    }
    a.fin_height(&r.fin).is_positive()
}

/// The set `Φ_P`, the coefficients of `δ` and the certificate for a standard parabolic `P`.
pub fn phi_p(a: &AffineAlgebra, p: &ParabolicSet) -> Result<ConeData, RootparError> {
    let flag = p.flag().ok_or(RootparError::NeedsFlag)?;
    if p.tag() != ParabolicTag::Standard {
        return Err(RootparError::NotStandard(p.tag()));
    }
    let delta = AffRoot::imaginary(a.fin_rank(), 1);
    if !super::parabolic::flag_contains(flag, &delta) {
        return Err(RootparError::DeltaNegative);
    }
    let mut n = 2;
    let base = loop {
        let t = lex_decomposition(a, p, DegreeWindow::symmetric(n));
        match base_of(a, &t.plus) {
            Ok(b) => break b,
            Err(_) if n < MAX_BASE_WINDOW => n *= 2,
            Err(e) => return Err(e),
        }
    };
    let (levi, non_levi): (Vec<usize>, Vec<usize>) =
        (0..base.len()).partition(|&i| p.contains(&base[i].neg()));

    // Reflections on V: the finite form extended by a null δ-direction.
    let dim = a.fin_rank() + 1;
    let mut form: Matrix = vec![vec![Rat::zero(); dim]; dim];
    for (i, row) in a.weight_gram().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            form[i][j] = x.clone();
        }
    }
    let gens: Vec<Matrix> = levi
        .iter()
        .map(|&i| weyl::reflection_matrix(&form, &coords(&base[i])))
        .collect();
    let group = weyl::generate_group(&gens, dim)?;

    let mut dvec = vec![Rat::zero(); dim];
    dvec[dim - 1] = Rat::one();
    let c = base_coords(&base, &dvec);

    let mut d: BTreeMap<AffRoot, Rat> = BTreeMap::new();
    for w in &group {
        for &j in &non_levi {
            let img = from_coords(&linalg::mat_vec(w, &coords(&base[j])));
            *d.entry(img).or_insert_with(Rat::zero) += &c[j];
        }
    }
    let (phi_p, d): (Vec<AffRoot>, Vec<Rat>) = d.into_iter().unzip();
    Ok(ConeData {
        base,
        levi,
        non_levi,
        c,
        phi_p,
        d,
        weyl_order: group.len(),
        ng: Rat::from_bigint(compute_ng(a)),
    })
}

/// Finite roots `Δ̊` of the algebra (all `Δ̊_j̄` in the twisted case).
pub fn finite_roots(a: &AffineAlgebra) -> Vec<FinWeight> {
    let mut out = a.fin_roots_at(0);
    if a.is_twisted() {
        out.extend(a.fin_roots_at(1));
        out.sort();
        out.dedup();
    }
    out
}

/// `lcm` of the denominators of `(α,α) / 2(α,β)` over pairs of finite roots with `(α,β) ≠ 0`.
pub fn compute_ng(a: &AffineAlgebra) -> BigInt {
    let roots = finite_roots(a);
    let mut l = BigInt::one();
    for x in &roots {
        for y in &roots {
            let xy = a.fin_form(x, y);
            if xy.is_zero() {
                continue;
            }
            let q = a.fin_form(x, x) / (Rat::int(2) * xy);
            l = l.lcm(q.denom());
        }
    }
    l
}

/// Triangular decomposition for the lexicographic order of a flag; used for Borel refinements.
pub fn lex_decomposition(a: &AffineAlgebra, p: &ParabolicSet, w: DegreeWindow) -> TriDecomp {
    let mut t = TriDecomp {
        window: w,
        plus: Vec::new(),
        zero: Vec::new(),
        minus: Vec::new(),
    };
    for r in a.roots_window(w) {
        if !r.is_real() {
            if r.n > 0 {
                t.plus.push(r);
            } else {
                t.minus.push(r);
            }
        } else if lex_positive(a, p, &r) {
            t.plus.push(r);
        } else {
            t.minus.push(r);
        }
    }
    t
}
