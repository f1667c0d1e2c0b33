use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::flag::{eval, FunctionalFlag};
use super::RootparError;
use crate::affine::{AffRoot, AffineAlgebra, DegreeWindow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParabolicTag {
    Standard,
    Imaginary,
    Mixed,
    All,
}

impl fmt::Display for ParabolicTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParabolicTag::Standard => "standard",
            ParabolicTag::Imaginary => "imaginary",
            ParabolicTag::Mixed => "mixed",
            ParabolicTag::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
enum Source {
    Flag(FunctionalFlag),
    /// Only roots inside the window are known.
    Explicit(BTreeSet<AffRoot>),
}

/// A parabolic set of roots, given by a flag (membership known everywhere) or explicitly on a window.
#[derive(Debug, Clone)]
pub struct ParabolicSet {
    source: Source,
    window: DegreeWindow,
    members: Vec<AffRoot>,
    tag: ParabolicTag,
}

impl ParabolicSet {
    pub fn window(&self) -> DegreeWindow {
        self.window
    }

    pub fn flag(&self) -> Option<&FunctionalFlag> {
        match &self.source {
            Source::Flag(f) => Some(f),
            Source::Explicit(_) => None,
        }
    }

    pub fn tag(&self) -> ParabolicTag {
        self.tag
    }

    /// Members inside the window.
    pub fn members(&self) -> &[AffRoot] {
        &self.members
    }

    /// Membership; for explicit sets, roots outside the window are reported absent.
    pub fn contains(&self, r: &AffRoot) -> bool {
        match &self.source {
            Source::Flag(f) => flag_contains(f, r),
            Source::Explicit(s) => s.contains(r),
        }
    }

    /// Levi roots `P ∩ -P` inside the window.
    pub fn levi_roots(&self) -> Vec<AffRoot> {
        self.members
            .iter()
            .filter(|r| self.contains(&r.neg()))
            .cloned()
            .collect()
    }

    /// Nilradical roots `P \ -P` inside the window.
    pub fn nilradical_roots(&self) -> Vec<AffRoot> {
        self.members
            .iter()
            .filter(|r| !self.contains(&r.neg()))
            .cloned()
            .collect()
    }

    pub fn with_window(&self, a: &AffineAlgebra, w: DegreeWindow) -> ParabolicSet {
        match &self.source {
            Source::Flag(f) => from_flag_unchecked(a, f, w),
            Source::Explicit(s) => explicit(a, s.iter().filter(|r| w.contains(r.n)).cloned(), w),
        }
    }
}

pub(crate) fn flag_contains(f: &FunctionalFlag, r: &AffRoot) -> bool {
    let v = eval(&f.phi1, r);
    if v.is_positive() {
        return true;
    }
    if v.is_negative() {
        return false;
    }
    match &f.phi2 {
        None => true,
        Some(p2) => !eval(p2, r).is_negative(),
    }
}

fn from_flag_unchecked(a: &AffineAlgebra, f: &FunctionalFlag, w: DegreeWindow) -> ParabolicSet {
    let members: Vec<AffRoot> = a
        .roots_window(w)
        .into_iter()
        .filter(|r| flag_contains(f, r))
        .collect();
    ParabolicSet {
        tag: classify_flag(f),
        source: Source::Flag(f.clone()),
        window: w,
        members,
    }
}

/// `P = Δ⁺ ⊔ (Δ⁰)⁰ ⊔ (Δ⁰)⁺` for the flag. With `require_borel`, fails unless `P ∩ -P = ∅` on the window.
pub fn assemble_parabolic(
    a: &AffineAlgebra,
    flag: &FunctionalFlag,
    w: DegreeWindow,
    require_borel: bool,
) -> Result<ParabolicSet, RootparError> {
    let dim = a.fin_rank() + 1;
    if flag.phi1.len() != dim || flag.phi2.as_ref().is_some_and(|p| p.len() != dim) {
        return Err(RootparError::FlagShape(dim));
    }
    if flag.phi1.iter().all(|x| x.is_zero()) {
        return Err(RootparError::ZeroFunctional);
    }
    let zero: Vec<AffRoot> = a
        .roots_window(w)
        .into_iter()
        .filter(|r| eval(&flag.phi1, r).is_zero())
        .collect();
    if let Some(p2) = &flag.phi2 {
        if !zero.is_empty() && zero.iter().all(|r| eval(p2, r).is_zero()) {
            return Err(RootparError::DegenerateRefinement);
        }
    }
    let p = from_flag_unchecked(a, flag, w);
    if require_borel && !p.levi_roots().is_empty() {
        return Err(RootparError::MissingRefinement(p.levi_roots().len()));
    }
    Ok(p)
}

/// A parabolic set given by its members on a window.
pub fn explicit(
    a: &AffineAlgebra,
    members: impl IntoIterator<Item = AffRoot>,
    w: DegreeWindow,
) -> ParabolicSet {
    let set: BTreeSet<AffRoot> = members.into_iter().collect();
    let members: Vec<AffRoot> = a
        .roots_window(w)
        .into_iter()
        .filter(|r| set.contains(r))
        .collect();
    let mut p = ParabolicSet {
        source: Source::Explicit(set),
        window: w,
        members,
        tag: ParabolicTag::All,
    };
    p.tag = classify_membership(a, &p);
    p
}

type Key = (Vec<i64>, i64);

fn key(r: &AffRoot) -> Key {
    (
        r.fin.0.iter().map(|x| x.to_i64().expect("integral root")).collect(),
        r.n,
    )
}

/// Axioms (i) `Δ = P ∪ -P` and (ii) closure, over all windowed roots whose sums stay in the window.
pub fn check_parabolic_axioms(a: &AffineAlgebra, p: &ParabolicSet, w: DegreeWindow) -> bool {
    let roots = a.roots_window(w);
    let all: HashSet<Key> = roots.iter().map(key).collect();
    let inside: Vec<(&AffRoot, Key)> = roots
        .iter()
        .filter(|r| p.contains(r))
        .map(|r| (r, key(r)))
        .collect();
    let member: HashSet<Key> = inside.iter().map(|(_, k)| k.clone()).collect();
    for r in &roots {
        if !member.contains(&key(r)) && !member.contains(&key(&r.neg())) {
            return false;
        }
    }
    for (_, x) in &inside {
        for (_, y) in &inside {
            let s: Key = (x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect(), x.1 + y.1);
            if all.contains(&s) && !member.contains(&s) {
                return false;
            }
        }
    }
    true
}

/// Tag from the flag data alone: `φ1(δ) ≠ 0` is standard; otherwise imaginary when the
/// refinement leaves `δ` in the Levi, mixed when it splits `±δ`.
pub fn classify_flag(f: &FunctionalFlag) -> ParabolicTag {
    let d1 = f.phi1.last().expect("nonempty functional");
    if !d1.is_zero() {
        return ParabolicTag::Standard;
    }
    match &f.phi2 {
        Some(p2) if !p2.last().expect("nonempty functional").is_zero() => ParabolicTag::Mixed,
        _ => ParabolicTag::Imaginary,
    }
}

/// Tag from membership on the window: all roots present is `All`; both `±δ` present is imaginary;
/// otherwise standard when every real δ-string meets both `P` and its complement, mixed if some
/// string lies on one side. Standard sets whose strings split only outside the window read as mixed.
pub fn classify_membership(a: &AffineAlgebra, p: &ParabolicSet) -> ParabolicTag {
    let w = p.window();
    let roots = a.roots_window(w);
    if roots.iter().all(|r| p.contains(r)) {
        return ParabolicTag::All;
    }
    let rank = a.fin_rank();
    let imag_in = |sign: i64| {
        (1..=w.n_max().max(-w.n_min()))
            .map(|n| AffRoot::imaginary(rank, sign * n))
            .filter(|r| w.contains(r.n) && a.is_root(r))
            .all(|r| p.contains(&r))
    };
    if imag_in(1) && imag_in(-1) {
        return ParabolicTag::Imaginary;
    }
    let mut strings: std::collections::BTreeMap<_, (bool, bool)> = Default::default();
    for r in roots.iter().filter(|r| r.is_real()) {
        let e = strings.entry(r.fin.clone()).or_insert((false, false));
        if p.contains(r) {
            e.0 = true;
        } else {
            e.1 = true;
        }
    }
    if strings.values().all(|&(i, o)| i && o) {
        ParabolicTag::Standard
    } else {
        ParabolicTag::Mixed
    }
}

/// Trichotomy tag of a proper parabolic set.
pub fn classify_parabolic(a: &AffineAlgebra, p: &ParabolicSet) -> Result<ParabolicTag, RootparError> {
    let tag = match p.flag() {
        Some(f) => {
            if a.roots_window(p.window()).iter().all(|r| p.contains(r)) {
                ParabolicTag::All
            } else {
                classify_flag(f)
            }
        }
        None => p.tag,
    };
    if tag == ParabolicTag::All {
        return Err(RootparError::Improper);
    }
    Ok(tag)
}
