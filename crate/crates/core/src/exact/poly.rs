use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rat;

/// Univariate polynomial over the rationals, dense, lowest degree first.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &Rat) -> Poly {
        let lin = Poly::new(vec![c.clone(), Rat::one()]);
        let mut acc = Poly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(a.clone());
        }
        acc
    }

    /// `binom(x, i)` as a polynomial in `x`.
    pub fn binomial(i: u32) -> Poly {
        let mut acc = Poly::constant(Rat::one());
        for j in 0..i {
            let fac = Poly::new(vec![Rat::int(-(j as i64)), Rat::one()]);
            acc = (&acc * &fac).scale(&Rat::new(1, j as i64 + 1));
        }
        acc
    }

    /// Rational roots of a polynomial of degree at most two, with multiplicity collapsed.
    ///
    /// Returns `Err(discriminant)` when a quadratic has no rational roots.
    pub fn rational_roots_upto_quadratic(&self) -> Result<Vec<Rat>, Rat> {
        match self.degree() {
            None | Some(0) => Ok(Vec::new()),
            Some(1) => Ok(vec![-(self.coeff(0) / self.coeff(1))]),
            Some(2) => {
                let (c, b, a) = (self.coeff(0), self.coeff(1), self.coeff(2));
                let disc = &b * &b - Rat::int(4) * &a * &c;
                match disc.sqrt_exact() {
                    Some(r) => {
                        let two_a = Rat::int(2) * &a;
                        let x1 = (-&b - &r) / &two_a;
                        let x2 = (-&b + &r) / &two_a;
                        let mut out = vec![x1, x2];
                        out.sort();
                        out.dedup();
                        Ok(out)
                    }
                    None => Err(disc),
                }
            }
            Some(d) => panic!("rational_roots_upto_quadratic called on degree {d}"),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gen_binom, q};

    #[test]
    fn binomial_poly_matches_gen_binom() {
        for i in 0..6 {
            let p = Poly::binomial(i);
            for x in [q(1, 2), q(-7, 3), Rat::int(4)] {
                assert_eq!(p.eval(&x), gen_binom(&x, i));
            }
        }
    }

    #[test]
    fn shift_and_roots() {
        // (x - 1)(x - 3)
        let p = Poly::new(vec![Rat::int(3), Rat::int(-4), Rat::int(1)]);
        assert_eq!(p.rational_roots_upto_quadratic().unwrap(), vec![Rat::int(1), Rat::int(3)]);
        let s = p.shift(&Rat::int(1));
        assert_eq!(s.rational_roots_upto_quadratic().unwrap(), vec![Rat::int(0), Rat::int(2)]);
        let irr = Poly::new(vec![Rat::int(-2), Rat::zero(), Rat::one()]);
        assert_eq!(irr.rational_roots_upto_quadratic(), Err(Rat::int(8)));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::new(vec![Rat::one(), Rat::zero(), Rat::zero()]);
        assert!(p.is_constant());
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::zero().degree(), None);
    }
}
