use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exact::Rat;
use crate::finlie::FinWeight;

/// Weight of the affine Cartan `h ⊕ FD ⊕ FK`: values on the finite Cartan basis, on `D` and on `K`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffWeight {
    pub fin: FinWeight,
    pub d: Rat,
    pub k: Rat,
}

impl AffWeight {
    pub fn new(fin: FinWeight, d: Rat, k: Rat) -> Self {
        AffWeight { fin, d, k }
    }

    pub fn zero(rank: usize) -> Self {
        AffWeight::new(FinWeight::zero(rank), Rat::zero(), Rat::zero())
    }

    /// `n δ`.
    pub fn delta(rank: usize, n: i64) -> Self {
        AffWeight::new(FinWeight::zero(rank), Rat::int(n), Rat::zero())
    }

    pub fn level0(fin: FinWeight, d: Rat) -> Self {
        AffWeight::new(fin, d, Rat::zero())
    }

    pub fn scale(&self, c: &Rat) -> AffWeight {
        AffWeight::new(self.fin.scale(c), &self.d * c, &self.k * c)
    }
}

impl Add for &AffWeight {
    type Output = AffWeight;
    fn add(self, rhs: &AffWeight) -> AffWeight {
        AffWeight::new(&self.fin + &rhs.fin, &self.d + &rhs.d, &self.k + &rhs.k)
    }
}

impl Sub for &AffWeight {
    type Output = AffWeight;
    fn sub(self, rhs: &AffWeight) -> AffWeight {
        AffWeight::new(&self.fin - &rhs.fin, &self.d - &rhs.d, &self.k - &rhs.k)
    }
}

impl Neg for &AffWeight {
    type Output = AffWeight;
    fn neg(self) -> AffWeight {
        AffWeight::new(-&self.fin, -&self.d, -&self.k)
    }
}

impl fmt::Debug for AffWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}d", self.fin, self.d)?;
        if !self.k.is_zero() {
            write!(f, "@{}", self.k)?;
        }
        Ok(())
    }
}

impl fmt::Display for AffWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Real or imaginary root `μ + nδ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffRoot {
    pub kind: RootKind,
    pub fin: FinWeight,
    pub n: i64,
}

impl AffRoot {
    pub fn real(fin: FinWeight, n: i64) -> Self {
        debug_assert!(!fin.is_zero());
        AffRoot {
            kind: RootKind::Real,
            fin,
            n,
        }
    }

    pub fn imaginary(rank: usize, n: i64) -> Self {
        debug_assert!(n != 0);
        AffRoot {
            kind: RootKind::Imaginary,
            fin: FinWeight::zero(rank),
            n,
        }
    }

    /// Classifies `μ + nδ` by whether `μ` vanishes. Does not check membership in `Δ`.
    pub fn from_parts(fin: FinWeight, n: i64) -> Self {
        if fin.is_zero() {
            AffRoot::imaginary(fin.rank(), n)
        } else {
            AffRoot::real(fin, n)
        }
    }

    pub fn is_real(&self) -> bool {
        self.kind == RootKind::Real
    }

    pub fn weight(&self) -> AffWeight {
        AffWeight::level0(self.fin.clone(), Rat::int(self.n))
    }

    pub fn neg(&self) -> AffRoot {
        AffRoot {
            kind: self.kind,
            fin: -&self.fin,
            n: -self.n,
        }
    }

    /// Sum as a weight; `None` when it is zero.
    pub fn plus(&self, other: &AffRoot) -> Option<AffRoot> {
        let fin = &self.fin + &other.fin;
        let n = self.n + other.n;
        if fin.is_zero() && n == 0 {
            None
        } else {
            Some(AffRoot::from_parts(fin, n))
        }
    }

    pub fn scaled(&self, c: i64) -> Option<AffRoot> {
        if c == 0 {
            return None;
        }
        Some(AffRoot::from_parts(self.fin.scale(&Rat::int(c)), self.n * c))
    }
}

impl fmt::Debug for AffRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::Real => write!(f, "{}{:+}δ", self.fin, self.n),
            RootKind::Imaginary => write!(f, "{}δ", self.n),
        }
    }
}

impl fmt::Display for AffRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Finite band `[n_min, n_max]` of δ-grades.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeWindow {
    n_min: i64,
    n_max: i64,
}

impl DegreeWindow {
    pub fn new(n_min: i64, n_max: i64) -> Option<Self> {
        (n_min <= n_max).then_some(DegreeWindow { n_min, n_max })
    }

    /// `[-n, n]`.
    pub fn symmetric(n: i64) -> Self {
        DegreeWindow {
            n_min: -n.abs(),
            n_max: n.abs(),
        }
    }

    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn contains(&self, n: i64) -> bool {
        self.n_min <= n && n <= self.n_max
    }

    pub fn grades(&self) -> impl Iterator<Item = i64> {
        self.n_min..=self.n_max
    }

    pub fn doubled(&self) -> Self {
        DegreeWindow {
            n_min: 2 * self.n_min,
            n_max: 2 * self.n_max,
        }
    }
}

impl std::str::FromStr for DegreeWindow {
    type Err = String;

    /// Parses `a:b`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("window `{s}` is not of the form min:max"))?;
        let a: i64 = a.trim().parse().map_err(|_| format!("bad window bound `{a}`"))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad window bound `{b}`"))?;
        DegreeWindow::new(a, b).ok_or_else(|| format!("empty window {a}:{b}"))
    }
}
