use std::fmt;

use super::{AffElt, AffGen, AffRoot, AffWeight, AffineError, DegreeWindow, RootKind};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Rat;
use crate::finlie::{eigenspace, DiagramAut, FinWeight, LieElt, SimpleLieAlgebra, SimpleType};

/// `(e_α, h_α, f_α)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: AffElt,
    pub h: AffElt,
    pub f: AffElt,
}

/// The affine algebra `A(g)` or the twisted algebra `A(g, σ)` for a diagram automorphism of order ≤ 2.
#[derive(Clone)]
pub struct AffineAlgebra {
    base: SimpleLieAlgebra,
    twist: DiagramAut,
    /// Basis of the Cartan of the fixed-point algebra; weights are values on these.
    hbasis: Vec<LieElt>,
    weight_gram: Matrix,
    /// Coordinates of `ρ∨` in `hbasis`, used to split finite roots into positive and negative.
    rho: Vec<Rat>,
    /// Weight-vector bases of `g_0̄` and `g_1̄`.
    graded: [Vec<LieElt>; 2],
    label: String,
}

impl fmt::Debug for AffineAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineAlgebra({})", self.label)
    }
}

impl AffineAlgebra {
    pub fn untwisted(base: SimpleLieAlgebra) -> Self {
        let twist = DiagramAut::identity(base.dim());
        let label = format!("{}x1", base.kind());
        Self::assemble(base, twist, label)
    }

    /// `A(sl3, σ)`, of type `A_2^(2)`.
    pub fn twisted_a2() -> Self {
        let base = SimpleLieAlgebra::build(SimpleType::A2);
        let twist = DiagramAut::a2_outer(&base).expect("A2 has an outer automorphism");
        Self::assemble(base, twist, "A2x2".to_string())
    }

    /// Parses labels such as `A1x1`, `C2x1` or `A2x2`.
    pub fn from_label(label: &str) -> Result<Self, AffineError> {
        let bad = || AffineError::UnknownAlgebra(label.to_string());
        let (kind, order) = label.split_once(['x', 'X']).ok_or_else(bad)?;
        let kind: SimpleType = kind.parse().map_err(|_| bad())?;
        match (kind, order) {
            (_, "1") => Ok(Self::untwisted(SimpleLieAlgebra::build(kind))),
            (SimpleType::A2, "2") => Ok(Self::twisted_a2()),
            _ => Err(bad()),
        }
    }

    fn assemble(base: SimpleLieAlgebra, twist: DiagramAut, label: String) -> Self {
        let dim = base.dim();
        let is_cartan = |x: &LieElt| x.terms().all(|(i, _)| base.cartan_indices().contains(&i));
        let (graded, hbasis) = if twist.is_identity() {
            let all: Vec<LieElt> = (0..dim).map(LieElt::basis).collect();
            let h: Vec<LieElt> = base.cartan_indices().iter().map(|&i| LieElt::basis(i)).collect();
            ([all, Vec::new()], h)
        } else {
            let even = eigenspace(&twist, dim, 1);
            let odd = eigenspace(&twist, dim, -1);
            let h: Vec<LieElt> = even.iter().filter(|x| is_cartan(x)).cloned().collect();
            ([even, odd], h)
        };
        let gram = base.gram(&hbasis);
        let weight_gram = linalg::inverse(&gram).expect("form is nondegenerate on the fixed Cartan");
        // ρ∨ = Σ x_i h_i with α_j(ρ∨) = 1 for every simple root; it is σ-invariant.
        let simple = base.simple_roots();
        let a: Matrix = simple.iter().map(|r| r.0.clone()).collect();
        let ones = vec![Rat::one(); simple.len()];
        let x = linalg::solve(&a, &ones).expect("Cartan matrix is invertible");
        let mut rho_elt = LieElt::zero();
        for (c, &i) in x.iter().zip(base.cartan_indices()) {
            rho_elt.add_term(i, c.clone());
        }
        // Express ρ∨ in hbasis coordinates.
        let cols: Matrix = base
            .cartan_indices()
            .iter()
            .map(|&i| hbasis.iter().map(|h| h.coeff(i)).collect())
            .collect();
        let rhs: Vec<Rat> = base.cartan_indices().iter().map(|&i| rho_elt.coeff(i)).collect();
        let rho = linalg::solve(&cols, &rhs).expect("ρ∨ lies in the fixed Cartan");
        AffineAlgebra {
            base,
            twist,
            hbasis,
            weight_gram,
            rho,
            graded,
            label,
        }
    }

    pub fn base(&self) -> &SimpleLieAlgebra {
        &self.base
    }

    pub fn twist(&self) -> &DiagramAut {
        &self.twist
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> u32 {
        self.twist.order()
    }

    pub fn is_twisted(&self) -> bool {
        !self.twist.is_identity()
    }

    /// `ζ^m` with `ζ = -1` for the order-two twist.
    pub fn zeta_pow(&self, m: i64) -> Rat {
        if self.is_twisted() && m.rem_euclid(2) == 1 {
            Rat::int(-1)
        } else {
            Rat::one()
        }
    }

    /// Rank of the finite part of the Cartan (`dim h` or `dim h^σ`).
    pub fn fin_rank(&self) -> usize {
        self.hbasis.len()
    }

    pub fn cartan_basis(&self) -> &[LieElt] {
        &self.hbasis
    }

    /// Gram matrix of the form on finite weights in `hbasis`-dual coordinates.
    pub fn weight_gram(&self) -> &Matrix {
        &self.weight_gram
    }

    /// Basis of `g_{m̄}` made of weight vectors.
    pub fn graded_basis(&self, m: i64) -> &[LieElt] {
        if self.is_twisted() {
            &self.graded[m.rem_euclid(2) as usize]
        } else {
            &self.graded[0]
        }
    }

    /// Weight of a finite weight vector, restricted to the fixed Cartan.
    pub fn fin_weight_of(&self, x: &LieElt) -> FinWeight {
        let (i, _) = x.terms().next().expect("nonzero weight vector");
        self.restrict(self.base.basis_weight(i))
    }

    /// Restricts a weight of `h` (fundamental coordinates) to `hbasis`.
    pub fn restrict(&self, w: &FinWeight) -> FinWeight {
        let cartan = self.base.cartan_indices();
        FinWeight(
            self.hbasis
                .iter()
                .map(|h| {
                    cartan
                        .iter()
                        .zip(&w.0)
                        .map(|(&i, v)| h.coeff(i) * v)
                        .sum()
                })
                .collect(),
        )
    }

    /// Value of a weight on `ρ∨`; positive finite roots have positive height.
    pub fn fin_height(&self, w: &FinWeight) -> Rat {
        w.0.iter().zip(&self.rho).map(|(a, b)| a * b).sum()
    }

    pub fn fin_form(&self, a: &FinWeight, b: &FinWeight) -> Rat {
        let gb = linalg::mat_vec(&self.weight_gram, &b.0);
        a.0.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// Form on `H*`: `(λ, μ) = (λ̄, μ̄) + λ(K)μ(D) + λ(D)μ(K)`.
    pub fn weight_form(&self, a: &AffWeight, b: &AffWeight) -> Rat {
        self.fin_form(&a.fin, &b.fin) + &a.k * &b.d + &a.d * &b.k
    }

    /// Weight of a basis generator of the ambient algebra.
    pub fn gen_weight(&self, g: AffGen) -> AffWeight {
        match g {
            AffGen::Loop(i, m) => AffWeight::level0(
                self.restrict(self.base.basis_weight(i)),
                Rat::int(m),
            ),
            AffGen::D | AffGen::K => AffWeight::zero(self.fin_rank()),
        }
    }

    /// The weight of a homogeneous element; `None` for zero or inhomogeneous input.
    pub fn weight_of(&self, x: &AffElt) -> Option<AffWeight> {
        let mut w: Option<AffWeight> = None;
        for (g, _) in x.terms() {
            let gw = self.gen_weight(g);
            match &w {
                None => w = Some(gw),
                Some(prev) if *prev == gw => {}
                Some(_) => return None,
            }
        }
        w
    }

    pub fn bracket(&self, x: &AffElt, y: &AffElt) -> AffElt {
        let mut out = AffElt::zero();
        for (i, m, a) in x.loop_terms() {
            for (j, n, b) in y.loop_terms() {
                let ab = a * b;
                for (k, c) in self.base.bracket_basis(i, j).terms() {
                    out.add_gen(AffGen::Loop(k, m + n), &ab * c);
                }
                if m == -n {
                    let f = self.base.form_basis(i, j);
                    if !f.is_zero() {
                        out.add_gen(AffGen::K, &ab * f * Rat::int(m));
                    }
                }
            }
        }
        // [D, y ⊗ t^n] = n y ⊗ t^n
        if !x.d_coeff().is_zero() {
            for (j, n, b) in y.loop_terms() {
                out.add_gen(AffGen::Loop(j, n), x.d_coeff() * b * Rat::int(n));
            }
        }
        if !y.d_coeff().is_zero() {
            for (i, m, a) in x.loop_terms() {
                out.add_gen(AffGen::Loop(i, m), -(y.d_coeff() * a * Rat::int(m)));
            }
        }
        out
    }

    pub fn form(&self, x: &AffElt, y: &AffElt) -> Rat {
        let mut acc = x.d_coeff() * y.k_coeff() + x.k_coeff() * y.d_coeff();
        for (i, m, a) in x.loop_terms() {
            for (j, n, b) in y.loop_terms() {
                if m == -n {
                    let f = self.base.form_basis(i, j);
                    if !f.is_zero() {
                        acc += a * b * f;
                    }
                }
            }
        }
        acc
    }

    /// The automorphism `x ⊗ t^m ↦ ζ^m σ(x) ⊗ t^m`, fixing `D` and `K`.
    pub fn sigma(&self, x: &AffElt) -> AffElt {
        let mut out = AffElt::zero();
        for (g, c) in x.terms() {
            match g {
                AffGen::Loop(i, m) => {
                    let (j, s) = self.twist.image_of_basis(i);
                    out.add_gen(AffGen::Loop(j, m), c * Rat::int(s) * self.zeta_pow(m));
                }
                other => out.add_gen(other, c),
            }
        }
        out
    }

    /// Membership in the fixed-point algebra.
    pub fn contains(&self, x: &AffElt) -> bool {
        self.sigma(x) == *x
    }

    /// Basis of the fixed-point algebra restricted to `t`-powers in the window, plus `D` and `K`.
    pub fn window_basis(&self, w: DegreeWindow) -> Vec<AffElt> {
        let mut out = Vec::new();
        for m in w.grades() {
            for x in self.graded_basis(m) {
                out.push(AffElt::loop_elt(x, m));
            }
        }
        out.push(AffElt::d());
        out.push(AffElt::k());
        out
    }

    /// All roots with δ-coefficient in the window, real roots first, ordered by grade.
    pub fn roots_window(&self, w: DegreeWindow) -> Vec<AffRoot> {
        let mut real = Vec::new();
        let mut imag = Vec::new();
        for n in w.grades() {
            let mut seen = std::collections::BTreeSet::new();
            let mut has_zero = false;
            for x in self.graded_basis(n) {
                let mu = self.fin_weight_of(x);
                if mu.is_zero() {
                    has_zero = true;
                } else if seen.insert(mu.clone()) {
                    real.push(AffRoot::real(mu, n));
                }
            }
            if has_zero && n != 0 {
                imag.push(AffRoot::imaginary(self.fin_rank(), n));
            }
        }
        real.extend(imag);
        real
    }

    /// Finite parts of the real roots at grade `n` (the set `Δ̊_{n̄}`).
    pub fn fin_roots_at(&self, n: i64) -> Vec<FinWeight> {
        let mut out: Vec<FinWeight> = self
            .graded_basis(n)
            .iter()
            .map(|x| self.fin_weight_of(x))
            .filter(|w| !w.is_zero())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_root(&self, r: &AffRoot) -> bool {
        if r.fin.is_zero() {
            r.n != 0
                && self
                    .graded_basis(r.n)
                    .iter()
                    .any(|x| self.fin_weight_of(x).is_zero())
        } else {
            self.graded_basis(r.n)
                .iter()
                .any(|x| self.fin_weight_of(x) == r.fin)
        }
    }

    /// Basis of the root space `G^r`.
    pub fn root_space(&self, r: &AffRoot) -> Result<Vec<AffElt>, AffineError> {
        if r.fin.rank() != self.fin_rank() || (r.fin.is_zero() && r.n == 0) {
            return Err(AffineError::NotARoot(r.to_string()));
        }
        let out: Vec<AffElt> = self
            .graded_basis(r.n)
            .iter()
            .filter(|x| self.fin_weight_of(x) == r.fin)
            .map(|x| AffElt::loop_elt(x, r.n))
            .collect();
        if out.is_empty() {
            return Err(AffineError::NotARoot(r.to_string()));
        }
        Ok(out)
    }

    /// Whether a real root lies in the standard positive system (`n > 0`, or `n = 0` and `μ > 0`).
    pub fn is_standard_positive(&self, r: &AffRoot) -> bool {
        r.n > 0 || (r.n == 0 && self.fin_height(&r.fin).is_positive())
    }

    /// The fixed sl₂-triple of a real root. For roots outside the standard positive system
    /// the triple is `(-f, -h, -e)` of the opposite root.
    pub fn sl2_triple(&self, r: &AffRoot) -> Result<Sl2Triple, AffineError> {
        if r.kind == RootKind::Imaginary || r.fin.is_zero() {
            return Err(AffineError::ImaginaryRoot(r.to_string()));
        }
        if !self.is_standard_positive(r) {
            let t = self.sl2_triple(&r.neg())?;
            return Ok(Sl2Triple {
                e: -&t.f,
                h: -&t.h,
                f: -&t.e,
            });
        }
        let e = self.root_space(r)?.swap_remove(0);
        let f0 = self.root_space(&r.neg())?.swap_remove(0);
        let h0 = self.bracket(&e, &f0);
        let he = self.bracket(&h0, &e);
        let (g, a) = e.terms()[0].clone();
        let c = he.coeff(g) / a;
        if c.is_zero() {
            return Err(AffineError::Degenerate(r.to_string()));
        }
        let s = Rat::int(2) / c;
        Ok(Sl2Triple {
            e,
            h: h0.scale(&s),
            f: f0.scale(&s),
        })
    }

    /// `ad(x)^k (y)`.
    pub fn ad_pow(&self, x: &AffElt, k: u32, y: &AffElt) -> AffElt {
        let mut out = y.clone();
        for _ in 0..k {
            if out.is_zero() {
                break;
            }
            out = self.bracket(x, &out);
        }
        out
    }
}

/// Checks the Heisenberg relations for `X_n = h ⊗ t^n` in `A(sl2)` over `|m|, |n| ≤ bound`,
/// with `X_n` normalized so that `(X_1, X_{-1}) = 1`.
pub fn heisenberg_check(bound: i64) -> bool {
    let a = AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A1));
    let h = a.base().cartan_element(0);
    let hh = a.base().form(&h, &h);
    let x = |n: i64| AffElt::loop_elt(&h, n);
    for m in -bound..=bound {
        for n in -bound..=bound {
            let mut expect = AffElt::zero();
            if m == -n {
                expect.add_gen(AffGen::K, &hh * Rat::int(m));
            }
            if a.bracket(&x(m), &x(n)) != expect {
                return false;
            }
        }
        if a.bracket(&AffElt::d(), &x(m)) != x(m).scale(&Rat::int(m)) {
            return false;
        }
        if !a.bracket(&AffElt::k(), &x(m)).is_zero() {
            return false;
        }
    }
    true
}
