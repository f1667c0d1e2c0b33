use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{multiplicity_table, sv_add, sv_axpy, FinModule, ModError, SparseVec, WeightModule};
use crate::affine::{AffElt, AffGen, AffWeight, AffineAlgebra, DegreeWindow};
use crate::exact::Rat;
use crate::finlie::{DiagramAut, FinWeight, LieElt};

/// `v_1 ⊗ … ⊗ v_k ⊗ t^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LoopLabel {
    pub parts: Vec<i64>,
    pub s: i64,
}

/// The loop module `L_{a_1,…,a_k}(V_1 ⊗ … ⊗ V_k)` on an `s`-window:
/// `(x ⊗ t^n)·(v ⊗ t^s) = Σ_i a_i^n (v_1 ⊗ … ⊗ x v_i ⊗ … ⊗ v_k) ⊗ t^{s+n}`, `D` acts as `t d/dt`
/// and `K` by zero.
#[derive(Debug, Clone)]
pub struct LoopModule {
    alg: AffineAlgebra,
    factors: Vec<Arc<dyn FinModule>>,
    scalars: Vec<Rat>,
    window: DegreeWindow,
}

impl LoopModule {
    pub fn new(
        alg: AffineAlgebra,
        factors: Vec<Arc<dyn FinModule>>,
        scalars: Vec<Rat>,
        window: DegreeWindow,
    ) -> Result<Self, ModError> {
        if factors.is_empty() || factors.len() != scalars.len() {
            return Err(ModError::Input("one nonzero scalar per factor is required".into()));
        }
        if scalars.iter().any(Rat::is_zero) {
            return Err(ModError::Input("loop scalars must be nonzero".into()));
        }
        Ok(LoopModule {
            alg,
            factors,
            scalars,
            window,
        })
    }

    pub fn factors(&self) -> &[Arc<dyn FinModule>] {
        &self.factors
    }

    pub fn scalars(&self) -> &[Rat] {
        &self.scalars
    }

    pub fn window(&self) -> DegreeWindow {
        self.window
    }

    fn grade(&self, s: i64) -> Result<(), ModError> {
        if self.window.contains(s) {
            Ok(())
        } else {
            Err(ModError::Boundary(format!(
                "grade {s} outside {}:{}",
                self.window.n_min(),
                self.window.n_max()
            )))
        }
    }

    pub fn fin_weight(&self, parts: &[i64]) -> FinWeight {
        let mut w = self.factors[0].weight(parts[0]);
        for (f, &x) in self.factors.iter().zip(parts).skip(1) {
            w = &w + &f.weight(x);
        }
        self.alg.restrict(&w)
    }

    /// `Σ_i a_i^n (x on factor i)`, without changing the grade.
    pub fn apply_fin(
        &self,
        x: &LieElt,
        n: i64,
        v: &SparseVec<LoopLabel>,
    ) -> Result<SparseVec<LoopLabel>, ModError> {
        let mut out = SparseVec::new();
        for (l, c) in v {
            for (k, f) in self.factors.iter().enumerate() {
                let a = self.scalars[k].pow(n) * c;
                for (m, v) in f.act_elt(x, l.parts[k])? {
                    let mut q = l.parts.clone();
                    q[k] = m;
                    sv_add(&mut out, LoopLabel { parts: q, s: l.s }, &a * &v);
                }
            }
        }
        Ok(out)
    }

    fn shift(v: SparseVec<LoopLabel>, n: i64) -> SparseVec<LoopLabel> {
        v.into_iter()
            .map(|(l, c)| {
                (
                    LoopLabel {
                        parts: l.parts,
                        s: l.s + n,
                    },
                    c,
                )
            })
            .collect()
    }

    /// Index of the unique dense factor on which `y` is invertible.
    fn invertible_factor(&self, y: &LieElt) -> Option<usize> {
        let probe: Vec<usize> = (0..self.factors.len())
            .filter(|&k| {
                let f = &self.factors[k];
                f.is_dense() && f.labels().first().is_some_and(|&l| {
                    !matches!(f.invert(y, l), Err(ModError::NotInvertible(_)))
                })
            })
            .collect();
        (probe.len() == 1).then(|| probe[0])
    }
}

impl WeightModule for LoopModule {
    type Label = LoopLabel;

    fn algebra(&self) -> &AffineAlgebra {
        &self.alg
    }

    fn weight(&self, l: &LoopLabel) -> AffWeight {
        AffWeight::level0(self.fin_weight(&l.parts), Rat::int(l.s))
    }

    fn act_gen(&self, g: AffGen, l: &LoopLabel) -> Result<SparseVec<LoopLabel>, ModError> {
        let mut out = SparseVec::new();
        match g {
            AffGen::D => sv_add(&mut out, l.clone(), Rat::int(l.s)),
            AffGen::K => {}
            AffGen::Loop(i, n) => {
                self.grade(l.s + n)?;
                let v = self.apply_fin(&LieElt::basis(i), n, &super::sv_single(l.clone()))?;
                out = Self::shift(v, n);
            }
        }
        Ok(out)
    }

    fn basis(&self) -> Vec<LoopLabel> {
        let mut tuples = vec![Vec::new()];
        for f in &self.factors {
            let ls = f.labels();
            tuples = tuples
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    ls.iter().map(move |&x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for s in self.window.grades() {
            for p in &tuples {
                out.push(LoopLabel {
                    parts: p.clone(),
                    s,
                });
            }
        }
        out
    }

    /// For `f = y ⊗ t^r` with `y` bijective on exactly one dense factor and nilpotent on the
    /// others: `F = A + B` with commuting `A` invertible and `B` nilpotent, so
    /// `F⁻¹ = Σ_m (−1)^m A^{−1−m} B^m`.
    fn f_inverse(&self, f: &AffElt, l: &LoopLabel) -> Result<SparseVec<LoopLabel>, ModError> {
        let degs = f.degrees();
        if degs.len() != 1 || !f.d_coeff().is_zero() || !f.k_coeff().is_zero() {
            return Err(ModError::NotInvertible(format!("{f:?}")));
        }
        let r = degs[0];
        let y = f.component(r);
        let k0 = self
            .invertible_factor(&y)
            .ok_or_else(|| ModError::NotInvertible(format!("{f:?}")))?;
        self.grade(l.s - r)?;
        let a_inv = self.scalars[k0].pow(r).recip();
        let apply_a_inv = |v: &SparseVec<LoopLabel>| -> Result<SparseVec<LoopLabel>, ModError> {
            let mut out = SparseVec::new();
            for (l, c) in v {
                for (m, x) in self.factors[k0].invert(&y, l.parts[k0])? {
                    let mut q = l.parts.clone();
                    q[k0] = m;
                    sv_add(&mut out, LoopLabel { parts: q, s: l.s }, &a_inv * c * x);
                }
            }
            Ok(out)
        };
        let apply_b = |v: &SparseVec<LoopLabel>| -> Result<SparseVec<LoopLabel>, ModError> {
            let mut out = SparseVec::new();
            for (l, c) in v {
                for (k, fk) in self.factors.iter().enumerate() {
                    if k == k0 {
                        continue;
                    }
                    let a = self.scalars[k].pow(r) * c;
                    for (m, x) in fk.act_elt(&y, l.parts[k])? {
                        let mut q = l.parts.clone();
                        q[k] = m;
                        sv_add(&mut out, LoopLabel { parts: q, s: l.s }, &a * &x);
                    }
                }
            }
            Ok(out)
        };
        let nil_bound: usize = self
            .factors
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != k0)
            .map(|(_, f)| f.dim().unwrap_or(0))
            .sum::<usize>()
            + 1;
        let mut out = SparseVec::new();
        let mut bm = super::sv_single(l.clone());
        let mut m = 0usize;
        while !bm.is_empty() {
            if m > nil_bound {
                return Err(ModError::NotInvertible(format!("{f:?} is not nilpotent off the dense factor")));
            }
            let mut t = bm.clone();
            for _ in 0..=m {
                t = apply_a_inv(&t)?;
            }
            let sign = if m % 2 == 0 { Rat::one() } else { Rat::int(-1) };
            sv_axpy(&mut out, &sign, &t);
            bm = apply_b(&bm)?;
            m += 1;
        }
        Ok(Self::shift(out, -r))
    }

    fn multiplicity(&self, w: &AffWeight) -> Option<usize> {
        if !w.k.is_zero() || !w.d.is_integer() {
            return Some(0);
        }
        let s = w.d.to_i64()?;
        if !self.window.contains(s) {
            return None;
        }
        // Enumerate the finite factors; the dense factor (at most one, handled first) is
        // determined by the remaining weight.
        let dense: Vec<usize> = (0..self.factors.len()).filter(|&k| self.factors[k].is_dense()).collect();
        if dense.len() > 1 {
            let n = self.basis().iter().filter(|l| l.s == s && self.weight(l) == *w).count();
            return Some(n);
        }
        let target = &w.fin;
        let fin_idx: Vec<usize> = (0..self.factors.len()).filter(|k| !dense.contains(k)).collect();
        let mut count = 0usize;
        let mut stack: Vec<(usize, FinWeight)> = vec![(0, FinWeight::zero(self.alg.base().rank()))];
        while let Some((depth, acc)) = stack.pop() {
            if depth == fin_idx.len() {
                match dense.first() {
                    None => {
                        if self.alg.restrict(&acc) == *target {
                            count += 1;
                        }
                    }
                    Some(&k) => {
                        // Untwisted only: the restriction is the identity on fundamental coordinates.
                        let rest = FinWeight(
                            target.0.iter().zip(&acc.0).map(|(a, b)| a - b).collect(),
                        );
                        count += self.factors[k].labels_of_weight(&rest)?.len();
                    }
                }
                continue;
            }
            let f = &self.factors[fin_idx[depth]];
            for x in f.labels() {
                stack.push((depth + 1, &acc + &f.weight(x)));
            }
        }
        Some(count)
    }
}

/// Fixed points of the involution `Σ(v_1 ⊗ v_2 ⊗ t^s) = τv_2 ⊗ τv_1 ⊗ t^s` on
/// `L_{a,−a}(V ⊗ V)` with `V` the adjoint `A₂`-module and `τ = σ`.
///
/// Since `τ(x·v) = σ(x)·τ(v)` on the adjoint module, `Σ` commutes with `x ⊗ t^m` exactly when
/// `σ(x) = (−1)^m x`, so the fixed points form a module over the twisted algebra.
#[derive(Debug, Clone)]
pub struct FixedLoopModule {
    twisted: AffineAlgebra,
    ambient: LoopModule,
    tau: DiagramAut,
}

/// A fixed basis vector `l + Σ(l)` (or `l` when `Σ(l) = l`), named by its smaller label.
pub type FixedLabel = LoopLabel;

pub fn twisted_loop_fixed_points(a: Rat, window: DegreeWindow) -> Result<FixedLoopModule, ModError> {
    if a.is_zero() {
        return Err(ModError::Input("loop scalar must be nonzero".into()));
    }
    let twisted = AffineAlgebra::twisted_a2();
    let base = twisted.base().clone();
    let tau = twisted.twist().clone();
    let v: Arc<dyn FinModule> = Arc::new(super::adjoint_rep(&base));
    let ambient = LoopModule::new(
        AffineAlgebra::untwisted(base),
        vec![v.clone(), v],
        vec![a.clone(), -a],
        window,
    )?;
    Ok(FixedLoopModule {
        twisted,
        ambient,
        tau,
    })
}

impl FixedLoopModule {
    pub fn ambient(&self) -> &LoopModule {
        &self.ambient
    }

    /// `Σ(l) = sign · l'`.
    pub fn involution(&self, l: &LoopLabel) -> (LoopLabel, i64) {
        let (p, sp) = self.tau.image_of_basis(l.parts[0] as usize);
        let (q, sq) = self.tau.image_of_basis(l.parts[1] as usize);
        (
            LoopLabel {
                parts: vec![q as i64, p as i64],
                s: l.s,
            },
            sp * sq,
        )
    }

    pub fn apply_involution(&self, v: &SparseVec<LoopLabel>) -> SparseVec<LoopLabel> {
        let mut out = SparseVec::new();
        for (l, c) in v {
            let (m, s) = self.involution(l);
            sv_add(&mut out, m, c * &Rat::int(s));
        }
        out
    }

    /// Labels `l` with `l ≤ Σ(l)` spanning the `±1`-eigenspaces, per grade.
    fn eigen_labels(&self, sign: i64) -> Vec<LoopLabel> {
        self.ambient
            .basis()
            .into_iter()
            .filter(|l| {
                let (m, s) = self.involution(l);
                if m == *l {
                    s == sign
                } else {
                    *l < m
                }
            })
            .collect()
    }

    pub fn anti_fixed_basis(&self) -> Vec<LoopLabel> {
        self.eigen_labels(-1)
    }

    fn embed(&self, l: &FixedLabel) -> SparseVec<LoopLabel> {
        let mut v = super::sv_single(l.clone());
        let (m, s) = self.involution(l);
        if m != *l {
            sv_add(&mut v, m, Rat::int(s));
        }
        v
    }

    fn project(&self, v: &SparseVec<LoopLabel>) -> Result<SparseVec<FixedLabel>, ModError> {
        if self.apply_involution(v) != *v {
            return Err(ModError::NotInAlgebra("result is not Σ-fixed".into()));
        }
        let mut out = SparseVec::new();
        for (l, c) in v {
            let (m, _) = self.involution(l);
            if *l <= m {
                sv_add(&mut out, l.clone(), c.clone());
            }
        }
        Ok(out)
    }
}

impl WeightModule for FixedLoopModule {
    type Label = FixedLabel;

    fn algebra(&self) -> &AffineAlgebra {
        &self.twisted
    }

    fn weight(&self, l: &FixedLabel) -> AffWeight {
        let w = self.ambient.weight(l);
        AffWeight::level0(self.twisted.restrict(&w.fin), w.d)
    }

    fn act_gen(&self, g: AffGen, l: &FixedLabel) -> Result<SparseVec<FixedLabel>, ModError> {
        self.act(&AffElt::gen(g), l)
    }

    fn act(&self, x: &AffElt, l: &FixedLabel) -> Result<SparseVec<FixedLabel>, ModError> {
        if !self.twisted.contains(x) {
            return Err(ModError::NotInAlgebra(format!("{x:?}")));
        }
        let v = self.embed(l);
        let out = self.ambient.act_vec(x, &v)?;
        self.project(&out)
    }

    fn basis(&self) -> Vec<FixedLabel> {
        self.eigen_labels(1)
    }
}

/// Maximal weight multiplicity of a loop-module family, per window size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub windows: Vec<i64>,
    pub max_multiplicity: Vec<usize>,
    /// Multiplicities are constant across the windows.
    pub bounded: bool,
    /// Multiplicities strictly increase with the window.
    pub strictly_increasing: bool,
}

/// Builds the family member for window `N` with `make(N)` (the window bounds both the grades and
/// the dense labels) and records the largest multiplicity among the materialized weights.
pub fn boundedness_probe(
    make: &dyn Fn(i64) -> Result<LoopModule, ModError>,
    windows: &[i64],
) -> Result<GrowthReport, ModError> {
    let mut max_multiplicity = Vec::with_capacity(windows.len());
    for &n in windows {
        let m = make(n)?;
        let table: BTreeMap<AffWeight, usize> = multiplicity_table(&m);
        max_multiplicity.push(table.values().copied().max().unwrap_or(0));
    }
    let bounded = max_multiplicity.windows(2).all(|w| w[0] == w[1]);
    let strictly_increasing = max_multiplicity.windows(2).all(|w| w[0] < w[1]);
    Ok(GrowthReport {
        windows: windows.to_vec(),
        max_multiplicity,
        bounded,
        strictly_increasing,
    })
}
