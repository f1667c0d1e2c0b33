use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FinLieError, FinWeight, LieElt};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Rat;

/// Supported simple types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleType {
    A1,
    A2,
    A3,
    C2,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A1 => 1,
            SimpleType::A2 | SimpleType::C2 => 2,
            SimpleType::A3 => 3,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SimpleType::A1 => "A1",
            SimpleType::A2 => "A2",
            SimpleType::A3 => "A3",
            SimpleType::C2 => "C2",
        };
        f.write_str(s)
    }
}

impl FromStr for SimpleType {
    type Err = FinLieError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A1" => Ok(SimpleType::A1),
            "A2" => Ok(SimpleType::A2),
            "A3" => Ok(SimpleType::A3),
            "C2" => Ok(SimpleType::C2),
            other => Err(FinLieError::UnsupportedType(other.to_string())),
        }
    }
}

/// A positive root together with the indices of its Chevalley generators.
#[derive(Debug, Clone)]
pub struct PositiveRoot {
    pub weight: FinWeight,
    pub e: usize,
    pub f: usize,
}

/// A simple Lie algebra realized by matrices, with structure constants in a Chevalley-type basis.
///
/// Basis layout: `e_β` for each positive root, then `f_β`, then the simple coroots `h_i`.
#[derive(Clone)]
pub struct SimpleLieAlgebra {
    kind: SimpleType,
    labels: Vec<String>,
    matrices: Vec<Matrix>,
    brackets: Vec<Vec<LieElt>>,
    form: Vec<Vec<Rat>>,
    weights: Vec<FinWeight>,
    positive: Vec<PositiveRoot>,
    cartan: Vec<usize>,
    simple: Vec<usize>,
    cartan_matrix: Vec<Vec<i64>>,
    coroot_gram: Matrix,
    weight_gram: Matrix,
    coords: Coordinatizer,
}

impl fmt::Debug for SimpleLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleLieAlgebra({}, dim {})", self.kind, self.dim())
    }
}

/// Expresses matrices in the algebra basis through a fixed set of pivot entries.
#[derive(Clone)]
struct Coordinatizer {
    n: usize,
    pivots: Vec<(usize, usize)>,
    inverse: Matrix,
}

impl Coordinatizer {
    fn new(n: usize, basis: &[Matrix]) -> Self {
        // Columns = basis elements, rows = matrix entries.
        let rows: Matrix = (0..n * n)
            .map(|k| basis.iter().map(|b| b[k / n][k % n].clone()).collect())
            .collect();
        let mut t: Matrix = (0..basis.len())
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        let piv = linalg::rref(&mut t);
        assert_eq!(piv.len(), basis.len(), "basis matrices must be independent");
        let sub: Matrix = piv.iter().map(|&k| rows[k].clone()).collect();
        let inverse = linalg::inverse(&sub).expect("pivot block invertible");
        Coordinatizer {
            n,
            pivots: piv.iter().map(|&k| (k / n, k % n)).collect(),
            inverse,
        }
    }

    fn coords(&self, m: &Matrix) -> LieElt {
        let v: Vec<Rat> = self.pivots.iter().map(|&(i, j)| m[i][j].clone()).collect();
        let c = linalg::mat_vec(&self.inverse, &v);
        let mut e = LieElt::zero();
        for (i, x) in c.into_iter().enumerate() {
            e.add_term(i, x);
        }
        debug_assert_eq!(self.n, m.len());
        e
    }
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rat::zero(); n]; n];
    m[i][j] = Rat::one();
    m
}

fn mat_add(a: &Matrix, b: &Matrix, s: i64) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, t)| r.iter().zip(t).map(|(x, y)| x + &(y * &Rat::int(s))).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    mat_add(&mat_mul(a, b), &mat_mul(b, a), -1)
}

fn trace(a: &Matrix) -> Rat {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// (e, f) matrix pairs for the positive roots, plus the simple coroot matrices.
fn chevalley_matrices(kind: SimpleType) -> (usize, Vec<(Matrix, Matrix)>, Vec<Matrix>) {
    match kind {
        SimpleType::A1 | SimpleType::A2 | SimpleType::A3 => {
            let n = kind.rank() + 1;
            let mut pairs = Vec::new();
            // Order by height so the simple roots come first.
            for h in 1..n {
                for i in 0..n - h {
                    let j = i + h;
                    pairs.push((unit(n, i, j), unit(n, j, i)));
                }
            }
            let cartan = (0..n - 1)
                .map(|i| mat_add(&unit(n, i, i), &unit(n, i + 1, i + 1), -1))
                .collect();
            (n, pairs, cartan)
        }
        SimpleType::C2 => {
            // sp(4) preserving the form with J = [[0, I], [-I, 0]].
            let n = 4;
            let l = 2;
            let e = |i, j| unit(n, i, j);
            // alpha1 = eps1 - eps2 (short), alpha2 = 2 eps2 (long),
            // alpha1 + alpha2 = eps1 + eps2, 2 alpha1 + alpha2 = 2 eps1.
            let short_diff = (
                mat_add(&e(0, 1), &e(l + 1, l), -1),
                mat_add(&e(1, 0), &e(l, l + 1), -1),
            );
            let long2 = (e(1, l + 1), e(l + 1, 1));
            let short_sum = (
                mat_add(&e(0, l + 1), &e(1, l), 1),
                mat_add(&e(l + 1, 0), &e(l, 1), 1),
            );
            let long1 = (e(0, l), e(l, 0));
            let pairs = vec![short_diff, long2, short_sum, long1];
            let h1 = mat_add(
                &mat_add(&e(0, 0), &e(1, 1), -1),
                &mat_add(&e(l, l), &e(l + 1, l + 1), -1),
                -1,
            );
            let h2 = mat_add(&e(1, 1), &e(l + 1, l + 1), -1);
            (n, pairs, vec![h1, h2])
        }
    }
}

impl SimpleLieAlgebra {
    pub fn build(kind: SimpleType) -> SimpleLieAlgebra {
        let (n, pairs, cartan_mats) = chevalley_matrices(kind);
        let rank = cartan_mats.len();
        let np = pairs.len();
        let mut matrices = Vec::new();
        let mut labels = Vec::new();
        for (k, (e, _)) in pairs.iter().enumerate() {
            matrices.push(e.clone());
            labels.push(format!("e{}", k + 1));
        }
        for (k, (_, f)) in pairs.iter().enumerate() {
            matrices.push(f.clone());
            labels.push(format!("f{}", k + 1));
        }
        for (k, h) in cartan_mats.iter().enumerate() {
            matrices.push(h.clone());
            labels.push(format!("h{}", k + 1));
        }
        let dim = matrices.len();
        let coords = Coordinatizer::new(n, &matrices);
        let brackets: Vec<Vec<LieElt>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| coords.coords(&commutator(&matrices[i], &matrices[j])))
                    .collect()
            })
            .collect();
        let form: Vec<Vec<Rat>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| trace(&mat_mul(&matrices[i], &matrices[j])))
                    .collect()
            })
            .collect();
        let cartan: Vec<usize> = (2 * np..dim).collect();
        // Weight of each basis vector: eigenvalues of ad(h_i).
        let weights: Vec<FinWeight> = (0..dim)
            .map(|b| {
                FinWeight(
                    cartan
                        .iter()
                        .map(|&h| brackets[h][b].coeff(b))
                        .collect(),
                )
            })
            .collect();
        let positive: Vec<PositiveRoot> = (0..np)
            .map(|k| PositiveRoot {
                weight: weights[k].clone(),
                e: k,
                f: np + k,
            })
            .collect();
        let simple: Vec<usize> = (0..np)
            .filter(|&k| {
                !(0..np).any(|a| {
                    (0..np).any(|b| &positive[a].weight + &positive[b].weight == positive[k].weight)
                })
            })
            .collect();
        assert_eq!(simple.len(), rank);
        let cartan_matrix = simple
            .iter()
            .map(|&i| {
                positive[i]
                    .weight
                    .0
                    .iter()
                    .map(|x| x.to_i64().expect("integral Cartan entry"))
                    .collect()
            })
            .collect();
        let coroot_gram: Matrix = cartan
            .iter()
            .map(|&i| cartan.iter().map(|&j| form[i][j].clone()).collect())
            .collect();
        let weight_gram = linalg::inverse(&coroot_gram).expect("nondegenerate Cartan form");
        SimpleLieAlgebra {
            kind,
            labels,
            matrices,
            brackets,
            form,
            weights,
            positive,
            cartan,
            simple,
            cartan_matrix,
            coroot_gram,
            weight_gram,
            coords,
        }
    }

    pub fn kind(&self) -> SimpleType {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// Size of the defining matrices.
    pub fn natural_dim(&self) -> usize {
        self.matrices[0].len()
    }

    /// Matrix of an arbitrary element in the defining representation.
    pub fn to_matrix(&self, x: &LieElt) -> Matrix {
        let n = self.natural_dim();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (i, c) in x.terms() {
            for (r, row) in self.matrices[i].iter().enumerate() {
                for (s, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        m[r][s] += c * v;
                    }
                }
            }
        }
        m
    }

    pub fn from_matrix(&self, m: &Matrix) -> LieElt {
        self.coords.coords(m)
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    /// Indices of the simple roots within [`Self::positive_roots`].
    pub fn simple_root_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<FinWeight> {
        self.simple.iter().map(|&i| self.positive[i].weight.clone()).collect()
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// All finite roots, positive first then their negatives.
    pub fn roots(&self) -> Vec<FinWeight> {
        let mut out: Vec<FinWeight> = self.positive.iter().map(|p| p.weight.clone()).collect();
        out.extend(self.positive.iter().map(|p| -&p.weight));
        out
    }

    pub fn basis_weight(&self, i: usize) -> &FinWeight {
        &self.weights[i]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &LieElt {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, x: &LieElt, y: &LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out.axpy(&(a * b), &self.brackets[i][j]);
            }
        }
        out
    }

    pub fn form_basis(&self, i: usize, j: usize) -> &Rat {
        &self.form[i][j]
    }

    pub fn form(&self, x: &LieElt, y: &LieElt) -> Rat {
        let mut acc = Rat::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                if !self.form[i][j].is_zero() {
                    acc += a * b * &self.form[i][j];
                }
            }
        }
        acc
    }

    /// Gram matrix of the simple coroots.
    pub fn coroot_gram(&self) -> &Matrix {
        &self.coroot_gram
    }

    /// Gram matrix of the invariant form on weights in fundamental-weight coordinates.
    pub fn weight_gram(&self) -> &Matrix {
        &self.weight_gram
    }

    /// Gram matrix of a list of Cartan elements under the invariant form.
    pub fn gram(&self, cartan_basis: &[LieElt]) -> Matrix {
        cartan_basis
            .iter()
            .map(|a| cartan_basis.iter().map(|b| self.form(a, b)).collect())
            .collect()
    }

    /// Form on weights expressed as values on the simple coroots.
    pub fn weight_form(&self, a: &FinWeight, b: &FinWeight) -> Rat {
        let gb = linalg::mat_vec(&self.weight_gram, &b.0);
        a.0.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// Element `h` of the Cartan with `(h, x) = λ(x)` for all Cartan `x`, given `λ` on the coroots.
    pub fn coroot_of(&self, root: &FinWeight) -> LieElt {
        let c = linalg::mat_vec(&self.weight_gram, &root.0);
        let t: LieElt = c
            .iter()
            .zip(&self.cartan)
            .fold(LieElt::zero(), |mut acc, (x, &i)| {
                acc.add_term(i, x.clone());
                acc
            });
        let norm = self.weight_form(root, root);
        t.scale(&(Rat::int(2) / norm))
    }

    /// Elements of the Cartan realized as matrices in the adjoint action coordinates of `h_i`.
    pub fn cartan_element(&self, i: usize) -> LieElt {
        LieElt::basis(self.cartan[i])
    }
}

/// `(a, b) = aᵀ G⁻¹ b` for weights given by their values on a Cartan basis with Gram matrix `G`.
pub fn weight_form_with(gram: &Matrix, a: &FinWeight, b: &FinWeight) -> Rat {
    let inv = linalg::inverse(gram).expect("nondegenerate Cartan form");
    let gb = linalg::mat_vec(&inv, &b.0);
    a.0.iter().zip(&gb).map(|(x, y)| x * y).sum()
}

pub fn build_simple(label: &str) -> Result<SimpleLieAlgebra, FinLieError> {
    Ok(SimpleLieAlgebra::build(label.parse()?))
}
