use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{ModError, WeightModule};
use crate::affine::{AffRoot, AffWeight, AffineAlgebra, DegreeWindow};
use crate::finlie::FinWeight;
use crate::rootpar::{check_parabolic_axioms, explicit, ParabolicSet, TriDecomp};

/// How a real root direction meets the support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShadowOutcome {
    /// The ray `λ₀ + nα` leaves the support inside the window.
    Finite,
    /// The ray reaches the window edge with nonzero weight spaces.
    Infinite,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShadowReport {
    pub root: AffRoot,
    pub outcome: ShadowOutcome,
    /// Set for [`ShadowOutcome::Infinite`]: a finite window cannot certify an infinite ray.
    pub heuristic: bool,
    /// `(n, dim M^{λ₀ + nα})` along the ray, `None` once outside the window.
    pub ray: Vec<(i64, Option<usize>)>,
}

pub type ShadowTable = BTreeMap<AffRoot, ShadowOutcome>;

/// Walks `start + nα` for `n = 0, 1, …, steps`.
pub fn shadow_detect<M: WeightModule>(
    m: &M,
    alpha: &AffRoot,
    start: &AffWeight,
    steps: usize,
) -> ShadowReport {
    let step = alpha.weight();
    let mut ray = Vec::new();
    let mut cur = start.clone();
    let mut outcome = ShadowOutcome::Infinite;
    for n in 0..=steps as i64 {
        let dim = m.multiplicity(&cur);
        ray.push((n, dim));
        match dim {
            Some(0) if n == 0 => {
                outcome = ShadowOutcome::Inconclusive;
                break;
            }
            None if n == 0 => {
                outcome = ShadowOutcome::Inconclusive;
                break;
            }
            Some(0) => {
                outcome = ShadowOutcome::Finite;
                break;
            }
            None => break,
            Some(_) => {}
        }
        cur = &cur + &step;
    }
    ShadowReport {
        root: alpha.clone(),
        heuristic: outcome == ShadowOutcome::Infinite,
        outcome,
        ray,
    }
}

/// Shadow outcome of every real root on the window, from one support weight.
pub fn shadow_table<M: WeightModule>(
    m: &M,
    start: &AffWeight,
    w: DegreeWindow,
    steps: usize,
) -> ShadowTable {
    m.algebra()
        .roots_window(w)
        .into_iter()
        .filter(AffRoot::is_real)
        .map(|r| {
            let o = shadow_detect(m, &r, start, steps).outcome;
            (r, o)
        })
        .collect()
}

/// `P_M` from a shadow table total on the real roots of the window.
///
/// If every string `β + ℤδ` meets both types, `P_M = Δ^f ∪ (−Δ^i) ∪ ℤ₊δ` when the finite type
/// sits at the top of the strings (with `ℤ₋δ` in the mirrored case). Otherwise
/// `P_M = ((P̊ + ℤδ) ∩ Δ) ∪ ℤδ` with `P̊ = Δ̊^f ∪ (−Δ̊^i) ∪ Δ̊^m`.
pub fn build_pm(
    a: &AffineAlgebra,
    table: &ShadowTable,
    w: DegreeWindow,
) -> Result<ParabolicSet, ModError> {
    let roots = a.roots_window(w);
    let real: Vec<&AffRoot> = roots.iter().filter(|r| r.is_real()).collect();
    let mut finite = BTreeSet::new();
    for r in &real {
        match table.get(r) {
            Some(ShadowOutcome::Finite) => {
                finite.insert((*r).clone());
            }
            Some(ShadowOutcome::Infinite) => {}
            _ => return Err(ModError::Input(format!("shadow table has no verdict for {r}"))),
        }
    }
    let is_f = |r: &AffRoot| finite.contains(r);
    let mut strings: BTreeMap<FinWeight, Vec<&AffRoot>> = BTreeMap::new();
    for r in &real {
        strings.entry(r.fin.clone()).or_default().push(r);
    }
    for s in strings.values_mut() {
        s.sort_by_key(|r| r.n);
    }
    let mixed = |s: &Vec<&AffRoot>| s.iter().any(|r| is_f(r)) && s.iter().any(|r| !is_f(r));
    let members: Vec<AffRoot> = if strings.values().all(mixed) {
        let top_f = strings.values().all(|s| is_f(s.last().expect("nonempty")));
        let bottom_f = strings.values().all(|s| is_f(s.first().expect("nonempty")));
        let sign = match (top_f, bottom_f) {
            (true, false) => 1,
            (false, true) => -1,
            _ => return Err(ModError::Input("inconsistent shadow table".into())),
        };
        roots
            .iter()
            .filter(|r| {
                if r.is_real() {
                    is_f(r) || !is_f(&r.neg())
                } else {
                    r.n * sign > 0
                }
            })
            .cloned()
            .collect()
    } else {
        let all_f = |s: &Vec<&AffRoot>| s.iter().all(|r| is_f(r));
        let all_i = |s: &Vec<&AffRoot>| s.iter().all(|r| !is_f(r));
        let in_pring = |beta: &FinWeight| -> bool {
            let neg = -beta;
            let s = &strings[beta];
            let t = &strings[&neg];
            all_f(s) || all_i(t) || (!all_f(s) && !all_i(s))
        };
        roots
            .iter()
            .filter(|r| !r.is_real() || in_pring(&r.fin))
            .cloned()
            .collect()
    };
    let p = explicit(a, members, w);
    if !check_parabolic_axioms(a, &p, w) {
        return Err(ModError::Input("inconsistent shadow table".into()));
    }
    Ok(p)
}

/// The first support weight `λ` (in weight order) with `λ + β ∉ Supp M` for every `β` in the
/// positive part, judged only where the module can answer.
pub fn find_extreme_weight<M: WeightModule>(m: &M, tri: &TriDecomp) -> Option<AffWeight> {
    let support: BTreeSet<AffWeight> = m.basis().iter().map(|l| m.weight(l)).collect();
    support.into_iter().find(|lam| {
        tri.plus
            .iter()
            .all(|b| m.multiplicity(&(lam + &b.weight())) == Some(0))
    })
}
