use std::collections::{BTreeSet, VecDeque};

use super::{FinLieError, FinWeight};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Rat;

/// Hard cap on generated group orders; finite Weyl groups in scope stay far below it.
pub const WEYL_ORDER_CAP: usize = 20_000;

/// Reflection `v ↦ v - 2(v,γ)/(γ,γ) γ` as a matrix on coordinate vectors, for a form given by
/// its Gram matrix in those coordinates.
pub fn reflection_matrix(form: &Matrix, root: &[Rat]) -> Matrix {
    let n = root.len();
    let fr = linalg::mat_vec(form, root);
    let norm: Rat = root.iter().zip(&fr).map(|(a, b)| a * b).sum();
    assert!(!norm.is_zero(), "reflection in an isotropic vector");
    let scale = Rat::int(2) / norm;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { Rat::one() } else { Rat::zero() };
                    id - &root[i] * &fr[j] * &scale
                })
                .collect()
        })
        .collect()
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    super::algebra::mat_mul(a, b)
}

/// All elements of the group generated by `gens`, identity first.
pub fn generate_group(gens: &[Matrix], dim: usize) -> Result<Vec<Matrix>, FinLieError> {
    generate_group_capped(gens, dim, WEYL_ORDER_CAP)
}

pub fn generate_group_capped(
    gens: &[Matrix],
    dim: usize,
    cap: usize,
) -> Result<Vec<Matrix>, FinLieError> {
    let id: Matrix = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut seen: BTreeSet<Matrix> = BTreeSet::new();
    let mut out = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = mul(g, &w);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(FinLieError::InfiniteGroup(cap));
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

pub fn apply(m: &Matrix, v: &FinWeight) -> FinWeight {
    FinWeight(linalg::mat_vec(m, &v.0))
}

/// Orbit of `v` under a list of group elements.
pub fn orbit(group: &[Matrix], v: &FinWeight) -> BTreeSet<FinWeight> {
    group.iter().map(|m| apply(m, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finlie::{SimpleLieAlgebra, SimpleType};

    #[test]
    fn reflections_are_involutions() {
        let g = SimpleLieAlgebra::build(SimpleType::C2);
        let w = g.weyl_group().unwrap();
        assert_eq!(w.len(), 8);
        for r in g.roots() {
            let s = reflection_matrix(&g.weight_gram(), &r.0);
            assert_eq!(apply(&s, &apply(&s, &r)), r);
            assert_eq!(apply(&s, &r), -&r);
        }
    }

    #[test]
    fn non_finite_generation_is_reported() {
        // Two reflections in the hyperbolic plane generate an infinite group.
        let form: Matrix = vec![
            vec![Rat::int(2), Rat::int(-3)],
            vec![Rat::int(-3), Rat::int(2)],
        ];
        let a = reflection_matrix(&form, &[Rat::one(), Rat::zero()]);
        let b = reflection_matrix(&form, &[Rat::zero(), Rat::one()]);
        assert!(matches!(
            generate_group_capped(&[a, b], 2, 100),
            Err(FinLieError::InfiniteGroup(_))
        ));
    }
}
