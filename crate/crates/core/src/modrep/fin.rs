use std::fmt::Debug;
use std::sync::Arc;

use super::{sv_add, ModError, SparseVec};
use crate::exact::linalg::Matrix;
use crate::exact::Rat;
use crate::finlie::{FinWeight, LieElt, SimpleLieAlgebra, SimpleType};

/// A weight module over a finite-dimensional simple Lie algebra with integer basis labels.
/// Dense modules are materialized on a label window.
pub trait FinModule: Debug + Send + Sync {
    /// `None` for infinite-dimensional (dense) modules.
    fn dim(&self) -> Option<usize>;

    fn labels(&self) -> Vec<i64>;

    fn contains(&self, l: i64) -> bool;

    /// Weight in fundamental-weight coordinates of the base algebra.
    fn weight(&self, l: i64) -> FinWeight;

    /// Action of the basis element `b_i` of the base algebra.
    fn act(&self, i: usize, l: i64) -> Result<SparseVec<i64>, ModError>;

    fn act_elt(&self, x: &LieElt, l: i64) -> Result<SparseVec<i64>, ModError> {
        let mut out = SparseVec::new();
        for (i, c) in x.terms() {
            for (m, v) in self.act(i, l)? {
                sv_add(&mut out, m, c * &v);
            }
        }
        Ok(out)
    }

    /// `y⁻¹ · l` when `y` acts bijectively.
    fn invert(&self, y: &LieElt, _l: i64) -> Result<SparseVec<i64>, ModError> {
        Err(ModError::NotInvertible(format!("{y:?}")))
    }

    /// Labels of weight `w`; `None` if the answer depends on labels outside the window.
    fn labels_of_weight(&self, w: &FinWeight) -> Option<Vec<i64>> {
        Some(self.labels().into_iter().filter(|&l| self.weight(l) == *w).collect())
    }

    fn is_dense(&self) -> bool {
        self.dim().is_none()
    }
}

/// Finite-dimensional module given by one matrix per basis element of the base algebra.
#[derive(Debug, Clone)]
pub struct MatrixModule {
    mats: Vec<Matrix>,
    weights: Vec<FinWeight>,
}

impl MatrixModule {
    pub fn new(mats: Vec<Matrix>, weights: Vec<FinWeight>) -> Result<Self, ModError> {
        let n = weights.len();
        if mats.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(ModError::Input("matrix size does not match the weight list".into()));
        }
        Ok(MatrixModule { mats, weights })
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }
}

impl FinModule for MatrixModule {
    fn dim(&self) -> Option<usize> {
        Some(self.weights.len())
    }

    fn labels(&self) -> Vec<i64> {
        (0..self.weights.len() as i64).collect()
    }

    fn contains(&self, l: i64) -> bool {
        l >= 0 && (l as usize) < self.weights.len()
    }

    fn weight(&self, l: i64) -> FinWeight {
        self.weights[l as usize].clone()
    }

    fn act(&self, i: usize, l: i64) -> Result<SparseVec<i64>, ModError> {
        if !self.contains(l) {
            return Err(ModError::Input(format!("label {l} out of range")));
        }
        let col = l as usize;
        let mut out = SparseVec::new();
        for (r, row) in self.mats[i].iter().enumerate() {
            sv_add(&mut out, r as i64, row[col].clone());
        }
        Ok(out)
    }
}

/// The defining representation; weights are read off the diagonal Cartan matrices.
pub fn natural_rep(g: &SimpleLieAlgebra) -> MatrixModule {
    let n = g.natural_dim();
    let weights = (0..n)
        .map(|r| FinWeight(g.cartan_indices().iter().map(|&h| g.matrix(h)[r][r].clone()).collect()))
        .collect();
    let mats = (0..g.dim()).map(|i| g.matrix(i).clone()).collect();
    MatrixModule { mats, weights }
}

pub fn adjoint_rep(g: &SimpleLieAlgebra) -> MatrixModule {
    let n = g.dim();
    let mats = (0..n)
        .map(|i| {
            (0..n)
                .map(|r| (0..n).map(|c| g.bracket_basis(i, c).coeff(r)).collect())
                .collect()
        })
        .collect();
    let weights = (0..n).map(|i| g.basis_weight(i).clone()).collect();
    MatrixModule { mats, weights }
}

/// The `(m+1)`-dimensional simple `sl₂`-module: `h v_k = (m−2k) v_k`, `f v_k = (k+1) v_{k+1}`,
/// `e v_k = (m−k+1) v_{k−1}`.
pub fn finite_dim_sl2(m: usize) -> MatrixModule {
    let g = SimpleLieAlgebra::build(SimpleType::A1);
    let (e, f, h) = sl2_indices(&g);
    let n = m + 1;
    let mut mats = vec![vec![vec![Rat::zero(); n]; n]; 3];
    for k in 0..n {
        let mi = m as i64;
        let ki = k as i64;
        mats[h][k][k] = Rat::int(mi - 2 * ki);
        if k + 1 < n {
            mats[f][k + 1][k] = Rat::int(ki + 1);
        }
        if k > 0 {
            mats[e][k - 1][k] = Rat::int(mi - ki + 1);
        }
    }
    let weights = (0..n).map(|k| FinWeight::from_ints(&[m as i64 - 2 * k as i64])).collect();
    MatrixModule { mats, weights }
}

/// Basis indices of `e`, `f`, `h` in the base algebra `sl₂`.
pub(crate) fn sl2_indices(g: &SimpleLieAlgebra) -> (usize, usize, usize) {
    (
        g.index_of("e1").expect("sl2 basis"),
        g.index_of("f1").expect("sl2 basis"),
        g.index_of("h1").expect("sl2 basis"),
    )
}

/// Dense `sl₂`-module on `{w_j}`: `h w_j = (b+2j) w_j`, `f w_j = w_{j−1}`, `e w_j = μ_j w_{j+1}`.
///
/// The element `h² + 2h + 4fe` is central in `U(sl₂)`; requiring it to act by `c` forces
/// `μ_j = (c − (b+2j)(b+2j+2))/4`, and then `[e,f] = h` holds since `μ_{j−1} − μ_j = b+2j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSl2 {
    pub b: Rat,
    pub c: Rat,
    jmin: i64,
    jmax: i64,
    idx: (usize, usize, usize),
}

impl DenseSl2 {
    pub fn new(b: Rat, c: Rat, jmin: i64, jmax: i64) -> Result<Self, ModError> {
        if jmin > jmax {
            return Err(ModError::Input(format!("empty window {jmin}:{jmax}")));
        }
        let g = SimpleLieAlgebra::build(SimpleType::A1);
        Ok(DenseSl2 {
            b,
            c,
            jmin,
            jmax,
            idx: sl2_indices(&g),
        })
    }

    pub fn window(&self) -> (i64, i64) {
        (self.jmin, self.jmax)
    }

    pub fn h_value(&self, j: i64) -> Rat {
        &self.b + Rat::int(2 * j)
    }

    pub fn mu(&self, j: i64) -> Rat {
        let h = self.h_value(j);
        (&self.c - &h * (&h + Rat::int(2))) / Rat::int(4)
    }

    /// `e` and `f` are injective on the window iff no `μ_j` vanishes there.
    pub fn is_injective_on_window(&self) -> bool {
        (self.jmin..self.jmax).all(|j| !self.mu(j).is_zero())
    }

    /// Integer `j` with `μ_j = 0`, if any: roots of `(b+2j)(b+2j+2) = c`.
    pub fn vanishing_indices(&self) -> Vec<i64> {
        // (b+2j+1)² = c + 1
        let Some(r) = (&self.c + Rat::one()).sqrt_exact() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for s in [r.clone(), -r] {
            let j = (s - Rat::one() - &self.b) / Rat::int(2);
            if let Some(j) = j.to_i64().filter(|_| j.is_integer()) {
                if !out.contains(&j) {
                    out.push(j);
                }
            }
        }
        out.sort();
        out
    }

    fn edge(&self, j: i64) -> Result<(), ModError> {
        if j < self.jmin || j > self.jmax {
            Err(ModError::Boundary(format!(
                "dense sl2 label {j} outside {}:{}",
                self.jmin, self.jmax
            )))
        } else {
            Ok(())
        }
    }
}

impl FinModule for DenseSl2 {
    fn dim(&self) -> Option<usize> {
        None
    }

    fn labels(&self) -> Vec<i64> {
        (self.jmin..=self.jmax).collect()
    }

    fn contains(&self, l: i64) -> bool {
        (self.jmin..=self.jmax).contains(&l)
    }

    fn weight(&self, l: i64) -> FinWeight {
        FinWeight(vec![self.h_value(l)])
    }

    fn act(&self, i: usize, j: i64) -> Result<SparseVec<i64>, ModError> {
        self.edge(j)?;
        let (e, f, h) = self.idx;
        let mut out = SparseVec::new();
        if i == e {
            self.edge(j + 1)?;
            sv_add(&mut out, j + 1, self.mu(j));
        } else if i == f {
            self.edge(j - 1)?;
            sv_add(&mut out, j - 1, Rat::one());
        } else if i == h {
            sv_add(&mut out, j, self.h_value(j));
        } else {
            return Err(ModError::Input(format!("no sl2 basis element {i}")));
        }
        Ok(out)
    }

    fn invert(&self, y: &LieElt, j: i64) -> Result<SparseVec<i64>, ModError> {
        let (_, f, _) = self.idx;
        let c = y.coeff(f);
        if c.is_zero() || y.terms().count() != 1 {
            return Err(ModError::NotInvertible(format!("{y:?}")));
        }
        self.edge(j)?;
        self.edge(j + 1)?;
        let mut out = SparseVec::new();
        out.insert(j + 1, c.recip());
        Ok(out)
    }

    fn labels_of_weight(&self, w: &FinWeight) -> Option<Vec<i64>> {
        let j = (&w.0[0] - &self.b) / Rat::int(2);
        if !j.is_integer() {
            return Some(Vec::new());
        }
        let j = j.to_i64()?;
        self.contains(j).then(|| vec![j])
    }
}

/// Tensor product of finite-dimensional modules, optionally with one dense factor in front.
/// A label is `j·P + r`, with `j` the dense label, `P` the product of the finite dimensions and
/// `r` the mixed-radix index of the finite labels.
#[derive(Debug, Clone)]
pub struct TensorModule {
    factors: Vec<Arc<dyn FinModule>>,
    dims: Vec<usize>,
    dense: bool,
}

pub fn tensor_product(factors: Vec<Arc<dyn FinModule>>) -> Result<TensorModule, ModError> {
    let dense = factors.first().is_some_and(|f| f.is_dense());
    if factors.iter().skip(1).any(|f| f.is_dense()) {
        return Err(ModError::Input("only the first tensor factor may be dense".into()));
    }
    let dims = factors
        .iter()
        .skip(dense as usize)
        .map(|f| f.dim().expect("finite factor"))
        .collect();
    Ok(TensorModule {
        factors,
        dims,
        dense,
    })
}

impl TensorModule {
    fn period(&self) -> i64 {
        self.dims.iter().product::<usize>() as i64
    }

    fn split(&self, l: i64) -> Vec<i64> {
        let p = self.period();
        let mut out = Vec::with_capacity(self.factors.len());
        let mut r = l.rem_euclid(p);
        if self.dense {
            out.push(l.div_euclid(p));
        }
        let mut tail = Vec::with_capacity(self.dims.len());
        for &d in self.dims.iter().rev() {
            tail.push(r % d as i64);
            r /= d as i64;
        }
        out.extend(tail.into_iter().rev());
        out
    }

    fn join(&self, parts: &[i64]) -> i64 {
        let fin = &parts[self.dense as usize..];
        let mut r = 0;
        for (&x, &d) in fin.iter().zip(&self.dims) {
            r = r * d as i64 + x;
        }
        if self.dense {
            parts[0] * self.period() + r
        } else {
            r
        }
    }
}

impl FinModule for TensorModule {
    fn dim(&self) -> Option<usize> {
        (!self.dense).then(|| self.period() as usize)
    }

    fn labels(&self) -> Vec<i64> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            let ls = f.labels();
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    ls.iter().map(move |&l| {
                        let mut q = p.clone();
                        q.push(l);
                        q
                    })
                })
                .collect();
        }
        out.iter().map(|p| self.join(p)).collect()
    }

    fn contains(&self, l: i64) -> bool {
        self.split(l)
            .iter()
            .zip(&self.factors)
            .all(|(&x, f)| f.contains(x))
    }

    fn weight(&self, l: i64) -> FinWeight {
        let parts = self.split(l);
        let mut w = self.factors[0].weight(parts[0]);
        for (f, &x) in self.factors.iter().zip(&parts).skip(1) {
            w = &w + &f.weight(x);
        }
        w
    }

    fn act(&self, i: usize, l: i64) -> Result<SparseVec<i64>, ModError> {
        let parts = self.split(l);
        let mut out = SparseVec::new();
        for (k, f) in self.factors.iter().enumerate() {
            for (m, c) in f.act(i, parts[k])? {
                let mut q = parts.clone();
                q[k] = m;
                sv_add(&mut out, self.join(&q), c);
            }
        }
        Ok(out)
    }
}
