use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exact::Rat;

/// Sparse element of a finite-dimensional Lie algebra, keyed by basis index.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LieElt {
    terms: BTreeMap<usize, Rat>,
}

impl LieElt {
    pub fn zero() -> Self {
        LieElt::default()
    }

    pub fn basis(i: usize) -> Self {
        LieElt::term(i, Rat::one())
    }

    pub fn term(i: usize, c: Rat) -> Self {
        let mut e = LieElt::zero();
        e.add_term(i, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.terms.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &Rat) -> LieElt {
        if c.is_zero() {
            return LieElt::zero();
        }
        LieElt {
            terms: self.terms.iter().map(|(i, a)| (*i, a * c)).collect(),
        }
    }

    pub fn axpy(&mut self, c: &Rat, other: &LieElt) {
        for (i, a) in other.terms() {
            self.add_term(i, c * a);
        }
    }
}

impl Add for &LieElt {
    type Output = LieElt;
    fn add(self, rhs: &LieElt) -> LieElt {
        let mut out = self.clone();
        out.axpy(&Rat::one(), rhs);
        out
    }
}

impl Sub for &LieElt {
    type Output = LieElt;
    fn sub(self, rhs: &LieElt) -> LieElt {
        let mut out = self.clone();
        out.axpy(&Rat::int(-1), rhs);
        out
    }
}

impl Neg for &LieElt {
    type Output = LieElt;
    fn neg(self) -> LieElt {
        self.scale(&Rat::int(-1))
    }
}

impl fmt::Debug for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(i, c)| format!("{c}*b{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weight of a Cartan subalgebra, given by its values on a fixed Cartan basis.
///
/// For the untwisted algebras the Cartan basis is the simple coroots, so these are
/// fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinWeight(pub Vec<Rat>);

impl FinWeight {
    pub fn zero(rank: usize) -> Self {
        FinWeight(vec![Rat::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        FinWeight(v.iter().map(|&x| Rat::int(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> FinWeight {
        FinWeight(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &FinWeight {
    type Output = FinWeight;
    fn add(self, rhs: &FinWeight) -> FinWeight {
        FinWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &FinWeight {
    type Output = FinWeight;
    fn sub(self, rhs: &FinWeight) -> FinWeight {
        FinWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &FinWeight {
    type Output = FinWeight;
    fn neg(self) -> FinWeight {
        FinWeight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for FinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for FinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
