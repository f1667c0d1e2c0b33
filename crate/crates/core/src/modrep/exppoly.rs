use serde::Serialize;

use super::ModError;
use crate::exact::{Poly, Rat};

/// `λ^n · (p_h(n))_h`: one exponential with a polynomial coefficient per Cartan index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpTerm {
    pub lambda: Rat,
    #[serde(skip)]
    pub polys: Vec<Poly>,
}

/// `Λ(h)(n) = Σ_i p_{i,h}(n) λ_i^n` with distinct nonzero `λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpPolynomial {
    terms: Vec<ExpTerm>,
}

impl ExpPolynomial {
    pub fn new(terms: Vec<ExpTerm>) -> Result<Self, ModError> {
        let width = terms.first().map_or(0, |t| t.polys.len());
        for (i, t) in terms.iter().enumerate() {
            if t.lambda.is_zero() {
                return Err(ModError::Input("exponential bases must be nonzero".into()));
            }
            if t.polys.len() != width {
                return Err(ModError::Input("every term needs one polynomial per Cartan index".into()));
            }
            if terms[..i].iter().any(|s| s.lambda == t.lambda) {
                return Err(ModError::Input(format!("repeated base {}", t.lambda)));
            }
        }
        Ok(ExpPolynomial { terms })
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn width(&self) -> usize {
        self.terms.first().map_or(0, |t| t.polys.len())
    }
}

pub fn exp_poly_eval(f: &ExpPolynomial, h: usize, n: i64) -> Rat {
    let x = Rat::int(n);
    f.terms
        .iter()
        .map(|t| t.polys[h].eval(&x) * t.lambda.pow(n))
        .sum()
}

pub fn is_purely_exponential(f: &ExpPolynomial) -> bool {
    f.terms.iter().all(|t| t.polys.iter().all(Poly::is_constant))
}
