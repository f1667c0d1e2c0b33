use std::sync::Arc;

use serde::Serialize;

use crate::affine::{AffElt, DegreeWindow};
use crate::exact::{gen_binom, gen_multinom, Rat};
use crate::finlie::{LieElt, SimpleLieAlgebra, SimpleType};
use crate::modrep::{
    sv_add, sv_axpy, sv_single, DenseSl2, FinModule, LoopLabel, LoopModule, ModError, SparseVec,
    WeightModule,
};
use crate::affine::AffineAlgebra;

/// `F^{−n}·w` in `𝒟_{α+rδ} ℒ(L_0 ⊗ F_1 ⊗ … ⊗ F_k)`, with `F = f_α ⊗ t^r` and `w` in the
/// unlocalized loop module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LocLabel {
    pub n: i64,
    pub w: LoopLabel,
}

/// The isomorphism `g: 𝒟_{α+rδ} ℒ(L_0 ⊗ F_1 ⊗ … ⊗ F_k) → ℒ(𝒟_α L_0 ⊗ F_1 ⊗ … ⊗ F_k)` and its
/// inverse, for `L_0` the Verma part `{w_j : j ≤ j0}` of a dense `sl₂`-module with `μ_{j0} = 0`
/// (so `𝒟_α L_0` is the dense module) and finite-dimensional `F_i`.
#[derive(Debug, Clone)]
pub struct LoopLocalization {
    target: LoopModule,
    f: LieElt,
    r: i64,
    j0: i64,
}

impl LoopLocalization {
    /// `b` and `j0` fix the dense module (`c = (b+2j0)(b+2j0+2)`); its labels run over
    /// `dense_window`, which must extend past `j0`.
    pub fn new(
        b: Rat,
        j0: i64,
        dense_window: (i64, i64),
        finite: Vec<Arc<dyn FinModule>>,
        scalars: Vec<Rat>,
        r: i64,
        window: DegreeWindow,
    ) -> Result<Self, ModError> {
        if !(dense_window.0 <= j0 && j0 < dense_window.1) {
            return Err(ModError::Input("the dense window must contain j0 and j0 + 1".into()));
        }
        if finite.iter().any(|f| f.dim().is_none()) {
            return Err(ModError::Input("only the first factor may be infinite-dimensional".into()));
        }
        let h = &b + Rat::int(2 * j0);
        let c = &h * &(&h + Rat::int(2));
        let dense = DenseSl2::new(b, c, dense_window.0, dense_window.1)?;
        let mut factors: Vec<Arc<dyn FinModule>> = vec![Arc::new(dense)];
        factors.extend(finite);
        let g = SimpleLieAlgebra::build(SimpleType::A1);
        let alg = AffineAlgebra::untwisted(g.clone());
        let f = LieElt::basis(g.index_of("f1").expect("sl2 basis"));
        let target = LoopModule::new(alg, factors, scalars, window)?;
        Ok(LoopLocalization { target, f, r, j0 })
    }

    pub fn target(&self) -> &LoopModule {
        &self.target
    }

    pub fn big_f(&self) -> AffElt {
        AffElt::loop_elt(&self.f, self.r)
    }

    /// Whether a target label lies in `ℒ(L_0 ⊗ …)`.
    pub fn in_source(&self, l: &LoopLabel) -> bool {
        l.parts[0] <= self.j0
    }

    fn nil_bounds(&self) -> Vec<u32> {
        self.target.factors()[1..]
            .iter()
            .map(|f| f.dim().expect("finite factor") as u32)
            .collect()
    }

    /// `f^p` on one factor; negative powers only on the dense factor.
    fn fin_power(&self, k: usize, p: i64, l: i64) -> Result<SparseVec<i64>, ModError> {
        let fm = &self.target.factors()[k];
        let mut cur = sv_single(l);
        for _ in 0..p.unsigned_abs() {
            let mut next = SparseVec::new();
            for (x, c) in &cur {
                let v = if p > 0 { fm.act_elt(&self.f, *x)? } else { fm.invert(&self.f, *x)? };
                sv_axpy(&mut next, c, &v);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// `Σ binom(n; i_1, …, i_k) Π_t a_t^{i_t r} f^{i_t} v_t ⊗ t^{s+nr}` with `i_0 = n − Σ i_t`.
    fn expand(
        &self,
        n: i64,
        shift0: i64,
        l: &LoopLabel,
    ) -> Result<SparseVec<LoopLabel>, ModError> {
        let bounds = self.nil_bounds();
        let scalars = self.target.scalars();
        let mut out = SparseVec::new();
        let mut tuple = vec![0u32; bounds.len()];
        loop {
            let coef = gen_multinom(n, &tuple);
            if !coef.is_zero() {
                let i0 = n - tuple.iter().map(|&i| i as i64).sum::<i64>();
                let mut scal = coef * scalars[0].pow(i0 * self.r);
                let mut vecs: Vec<SparseVec<i64>> = vec![self.fin_power(0, i0 + shift0, l.parts[0])?];
                for (t, &i) in tuple.iter().enumerate() {
                    scal = scal * scalars[t + 1].pow(i as i64 * self.r);
                    vecs.push(self.fin_power(t + 1, i as i64, l.parts[t + 1])?);
                }
                let mut partial: Vec<(Vec<i64>, Rat)> = vec![(Vec::new(), scal)];
                for v in &vecs {
                    partial = partial
                        .into_iter()
                        .flat_map(|(p, c)| {
                            v.iter().map(move |(x, d)| {
                                let mut q = p.clone();
                                q.push(*x);
                                (q, &c * d)
                            })
                        })
                        .collect();
                }
                for (parts, c) in partial {
                    sv_add(&mut out, LoopLabel { parts, s: l.s + n * self.r }, c);
                }
            }
            // Next tuple below the nilpotency bounds.
            let mut k = 0;
            loop {
                if k == tuple.len() {
                    return Ok(out);
                }
                tuple[k] += 1;
                if tuple[k] < bounds[k] {
                    break;
                }
                tuple[k] = 0;
                k += 1;
            }
        }
    }

    /// `g(F^{−n}·w)` by the multinomial expansion of `(a_0 + … + a_k)^{−n}`.
    pub fn g(&self, v: &SparseVec<LocLabel>) -> Result<SparseVec<LoopLabel>, ModError> {
        let mut out = SparseVec::new();
        for (l, c) in v {
            let e = self.expand(-l.n, 0, &l.w)?;
            sv_axpy(&mut out, c, &e);
        }
        Ok(out)
    }

    /// `g̃(f^{−n} v_0 ⊗ v_1 ⊗ … ⊗ t^s) = F^{−N}(Σ binom(N; i) a^{ir} f^{i_0−n} v_0 ⊗ … ⊗ t^{s+Nr})`
    /// with `N = n + Σ dim F_t`, so that `i_0 − n ≥ 0`.
    pub fn g_tilde(&self, v: &SparseVec<LoopLabel>) -> Result<SparseVec<LocLabel>, ModError> {
        let m: i64 = self.nil_bounds().iter().map(|&b| b as i64).sum();
        let mut out = SparseVec::new();
        for (l, c) in v {
            let n = (l.parts[0] - self.j0).max(0);
            let mut base = l.clone();
            base.parts[0] -= n;
            let big_n = m + n;
            for (w, d) in self.expand(big_n, -n, &base)? {
                debug_assert!(self.in_source(&w));
                sv_add(&mut out, LocLabel { n: big_n, w }, c * &d);
            }
        }
        Ok(out)
    }

    /// The formal action `X·F^{−n}w = Σ_i binom(n+i−1, i) F^{−n−i} ((ad F)^i X)·w`.
    pub fn source_act(
        &self,
        x: &AffElt,
        v: &SparseVec<LocLabel>,
    ) -> Result<SparseVec<LocLabel>, ModError> {
        let a = self.target.algebra();
        let big_f = self.big_f();
        let mut out = SparseVec::new();
        for (l, c) in v {
            let mut y = x.clone();
            let mut i = 0i64;
            while !y.is_zero() {
                let coef = gen_binom(&Rat::int(l.n + i - 1), i as u32) * c;
                if !coef.is_zero() {
                    for (w, d) in self.target.act(&y, &l.w)? {
                        sv_add(&mut out, LocLabel { n: l.n + i, w }, &coef * &d);
                    }
                }
                y = a.bracket(&big_f, &y);
                i += 1;
            }
        }
        Ok(out)
    }

    /// `F^{K−n} w` summed, for `K` at least every `n` in `v`.
    fn common(&self, v: &SparseVec<LocLabel>, k: i64) -> Result<SparseVec<LoopLabel>, ModError> {
        let big_f = self.big_f();
        let mut out = SparseVec::new();
        for (l, c) in v {
            let mut cur = sv_single(l.w.clone());
            for _ in 0..(k - l.n) {
                cur = self.target.act_vec(&big_f, &cur)?;
            }
            sv_axpy(&mut out, c, &cur);
        }
        Ok(out)
    }

    /// Equality in the localization: `F^{−n}w = F^{−m}u` iff `F^{K−n}w = F^{K−m}u`.
    pub fn source_eq(
        &self,
        a: &SparseVec<LocLabel>,
        b: &SparseVec<LocLabel>,
    ) -> Result<bool, ModError> {
        let k = a.keys().chain(b.keys()).map(|l| l.n).max().unwrap_or(0).max(0);
        Ok(self.common(a, k)? == self.common(b, k)?)
    }
}
