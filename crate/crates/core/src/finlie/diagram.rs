use super::{FinLieError, LieElt, SimpleLieAlgebra, SimpleType};
use crate::exact::linalg::Matrix;
use crate::exact::Rat;

/// A diagram automorphism given as a signed permutation of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAut {
    order: u32,
    /// `image[i] = (j, sign)` means `σ(b_i) = sign · b_j`.
    image: Vec<(usize, i64)>,
}

impl DiagramAut {
    pub fn identity(dim: usize) -> Self {
        DiagramAut {
            order: 1,
            image: (0..dim).map(|i| (i, 1)).collect(),
        }
    }

    /// The order-two outer automorphism `X ↦ -w Xᵀ w⁻¹` of `sl(3)`, `w = antidiag(1, -1, 1)`.
    pub fn a2_outer(g: &SimpleLieAlgebra) -> Result<Self, FinLieError> {
        if g.kind() != SimpleType::A2 {
            return Err(FinLieError::WrongType {
                expected: SimpleType::A2,
                found: g.kind(),
            });
        }
        let n = 3;
        let mut w: Matrix = vec![vec![Rat::zero(); n]; n];
        w[0][2] = Rat::int(1);
        w[1][1] = Rat::int(-1);
        w[2][0] = Rat::int(1);
        let mut image = Vec::with_capacity(g.dim());
        for i in 0..g.dim() {
            let m = g.matrix(i);
            let mt: Matrix = (0..n).map(|r| (0..n).map(|c| m[c][r].clone()).collect()).collect();
            // w is its own inverse.
            let conj = super::algebra::mat_mul(&super::algebra::mat_mul(&w, &mt), &w);
            let neg: Matrix = conj
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect();
            let e = g.from_matrix(&neg);
            let terms: Vec<(usize, Rat)> = e.terms().map(|(j, c)| (j, c.clone())).collect();
            match terms.as_slice() {
                [(j, c)] if c.abs().is_one() => image.push((*j, c.signum() as i64)),
                _ => {
                    // The Cartan part is not a signed permutation in the coroot basis
                    // unless h1 <-> h2, which holds for this w.
                    return Err(FinLieError::NotSignedPermutation(g.label(i).to_string()));
                }
            }
        }
        Ok(DiagramAut { order: 2, image })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn image_of_basis(&self, i: usize) -> (usize, i64) {
        self.image[i]
    }

    pub fn apply(&self, x: &LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (i, c) in x.terms() {
            let (j, s) = self.image[i];
            out.add_term(j, c * &Rat::int(s));
        }
        out
    }
}

/// Applies the order-two automorphism of `A2`.
pub fn sigma_a2(g: &SimpleLieAlgebra, x: &LieElt) -> Result<LieElt, FinLieError> {
    Ok(DiagramAut::a2_outer(g)?.apply(x))
}

/// Basis of the `sign`-eigenspace of an involutive signed permutation.
pub fn eigenspace(aut: &DiagramAut, dim: usize, sign: i64) -> Vec<LieElt> {
    let mut seen = vec![false; dim];
    let mut out = Vec::new();
    for i in 0..dim {
        if seen[i] {
            continue;
        }
        let (j, s) = aut.image_of_basis(i);
        seen[i] = true;
        seen[j] = true;
        if j == i {
            if s == sign {
                out.push(LieElt::basis(i));
            }
        } else {
            // b_i + sign·σ(b_i) is a sign-eigenvector.
            let mut v = LieElt::basis(i);
            v.add_term(j, Rat::int(sign * s));
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_is_an_involutive_automorphism() {
        let g = SimpleLieAlgebra::build(SimpleType::A2);
        let s = DiagramAut::a2_outer(&g).unwrap();
        for i in 0..g.dim() {
            let x = LieElt::basis(i);
            assert_eq!(s.apply(&s.apply(&x)), x);
            for j in 0..g.dim() {
                let y = LieElt::basis(j);
                assert_eq!(
                    s.apply(&g.bracket(&x, &y)),
                    g.bracket(&s.apply(&x), &s.apply(&y))
                );
                assert_eq!(g.form(&s.apply(&x), &s.apply(&y)), g.form(&x, &y));
            }
        }
    }

    #[test]
    fn fixed_subalgebra_dimensions() {
        let g = SimpleLieAlgebra::build(SimpleType::A2);
        let s = DiagramAut::a2_outer(&g).unwrap();
        assert_eq!(eigenspace(&s, g.dim(), 1).len(), 3);
        assert_eq!(eigenspace(&s, g.dim(), -1).len(), 5);
    }

    #[test]
    fn rejects_other_types() {
        let g = SimpleLieAlgebra::build(SimpleType::A1);
        assert!(sigma_a2(&g, &LieElt::basis(0)).is_err());
    }
}
