use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exact::Rat;
use crate::finlie::LieElt;

/// A basis element of the ambient affine algebra: `b_i ⊗ t^m`, `D` or `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum AffGen {
    Loop(usize, i64),
    D,
    K,
}

/// Sparse element of `A(g)`: loop part keyed by (finite basis index, power of t), plus `D` and `K`.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct AffElt {
    loops: BTreeMap<(usize, i64), Rat>,
    d: Rat,
    k: Rat,
}

impl AffElt {
    pub fn zero() -> Self {
        AffElt::default()
    }

    pub fn gen(g: AffGen) -> Self {
        let mut out = AffElt::zero();
        out.add_gen(g, Rat::one());
        out
    }

    pub fn d() -> Self {
        AffElt::gen(AffGen::D)
    }

    pub fn k() -> Self {
        AffElt::gen(AffGen::K)
    }

    /// `x ⊗ t^m`.
    pub fn loop_elt(x: &LieElt, m: i64) -> Self {
        let mut out = AffElt::zero();
        for (i, c) in x.terms() {
            out.add_gen(AffGen::Loop(i, m), c.clone());
        }
        out
    }

    pub fn add_gen(&mut self, g: AffGen, c: Rat) {
        if c.is_zero() {
            return;
        }
        match g {
            AffGen::D => self.d += c,
            AffGen::K => self.k += c,
            AffGen::Loop(i, m) => {
                let slot = self.loops.entry((i, m)).or_insert_with(Rat::zero);
                *slot += c;
                if slot.is_zero() {
                    self.loops.remove(&(i, m));
                }
            }
        }
    }

    pub fn coeff(&self, g: AffGen) -> Rat {
        match g {
            AffGen::D => self.d.clone(),
            AffGen::K => self.k.clone(),
            AffGen::Loop(i, m) => self.loops.get(&(i, m)).cloned().unwrap_or_else(Rat::zero),
        }
    }

    pub fn d_coeff(&self) -> &Rat {
        &self.d
    }

    pub fn k_coeff(&self) -> &Rat {
        &self.k
    }

    pub fn is_zero(&self) -> bool {
        self.loops.is_empty() && self.d.is_zero() && self.k.is_zero()
    }

    /// All nonzero terms, loop terms first.
    pub fn terms(&self) -> Vec<(AffGen, Rat)> {
        let mut out: Vec<(AffGen, Rat)> = self
            .loops
            .iter()
            .map(|(&(i, m), c)| (AffGen::Loop(i, m), c.clone()))
            .collect();
        if !self.d.is_zero() {
            out.push((AffGen::D, self.d.clone()));
        }
        if !self.k.is_zero() {
            out.push((AffGen::K, self.k.clone()));
        }
        out
    }

    pub fn loop_terms(&self) -> impl Iterator<Item = (usize, i64, &Rat)> {
        self.loops.iter().map(|(&(i, m), c)| (i, m, c))
    }

    /// Finite part at `t^m`.
    pub fn component(&self, m: i64) -> LieElt {
        let mut out = LieElt::zero();
        for (i, n, c) in self.loop_terms() {
            if n == m {
                out.add_term(i, c.clone());
            }
        }
        out
    }

    /// Powers of `t` occurring in the loop part.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.loops.keys().map(|&(_, m)| m).collect();
        out.dedup();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rat) -> AffElt {
        let mut out = AffElt::zero();
        out.axpy(c, self);
        out
    }

    pub fn axpy(&mut self, c: &Rat, other: &AffElt) {
        if c.is_zero() {
            return;
        }
        for (g, a) in other.terms() {
            self.add_gen(g, c * &a);
        }
    }
}

impl Add for &AffElt {
    type Output = AffElt;
    fn add(self, rhs: &AffElt) -> AffElt {
        let mut out = self.clone();
        out.axpy(&Rat::one(), rhs);
        out
    }
}

impl Sub for &AffElt {
    type Output = AffElt;
    fn sub(self, rhs: &AffElt) -> AffElt {
        let mut out = self.clone();
        out.axpy(&Rat::int(-1), rhs);
        out
    }
}

impl Neg for &AffElt {
    type Output = AffElt;
    fn neg(self) -> AffElt {
        self.scale(&Rat::int(-1))
    }
}

impl fmt::Debug for AffElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(g, c)| match g {
                AffGen::Loop(i, m) => format!("{c}*b{i}t^{m}"),
                AffGen::D => format!("{c}*D"),
                AffGen::K => format!("{c}*K"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
