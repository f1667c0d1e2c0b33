use serde::{Deserialize, Serialize};

use crate::affine::{AffRoot, AffineAlgebra, DegreeWindow};
use crate::exact::Rat;

/// A covector on `V = (finite coordinates) ⊕ Fδ`, optionally refined by a second covector on `Δ⁰`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalFlag {
    pub phi1: Vec<Rat>,
    #[serde(default)]
    pub phi2: Option<Vec<Rat>>,
}

impl FunctionalFlag {
    pub fn principal(phi1: Vec<Rat>) -> Self {
        FunctionalFlag { phi1, phi2: None }
    }

    pub fn refined(phi1: Vec<Rat>, phi2: Vec<Rat>) -> Self {
        FunctionalFlag {
            phi1,
            phi2: Some(phi2),
        }
    }

    /// The projection onto the δ-coordinate.
    pub fn delta_projection(fin_rank: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); fin_rank + 1];
        v[fin_rank] = Rat::one();
        v
    }
}

pub fn eval(phi: &[Rat], r: &AffRoot) -> Rat {
    let n = phi.len() - 1;
    let fin: Rat = phi[..n].iter().zip(&r.fin.0).map(|(a, b)| a * b).sum();
    fin + &phi[n] * Rat::int(r.n)
}

/// `Δ = Δ⁺ ⊔ Δ⁰ ⊔ Δ⁻` on a window, by the sign of a covector.
#[derive(Debug, Clone)]
pub struct TriDecomp {
    pub window: DegreeWindow,
    pub plus: Vec<AffRoot>,
    pub zero: Vec<AffRoot>,
    pub minus: Vec<AffRoot>,
}

pub fn triangular_decomposition(a: &AffineAlgebra, phi1: &[Rat], w: DegreeWindow) -> TriDecomp {
    decompose(a.roots_window(w), phi1, w)
}

pub(crate) fn decompose(roots: Vec<AffRoot>, phi: &[Rat], w: DegreeWindow) -> TriDecomp {
    let mut t = TriDecomp {
        window: w,
        plus: Vec::new(),
        zero: Vec::new(),
        minus: Vec::new(),
    };
    for r in roots {
        let v = eval(phi, &r);
        if v.is_positive() {
            t.plus.push(r);
        } else if v.is_zero() {
            t.zero.push(r);
        } else {
            t.minus.push(r);
        }
    }
    t
}
