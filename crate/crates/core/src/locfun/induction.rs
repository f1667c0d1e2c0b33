use serde::Serialize;

use super::{theta_action, twist_module, TwistSpec, Twisted};
use crate::affine::{AffElt, AffGen};
use crate::exact::Rat;
use crate::modrep::{
    multiplicity_table, skip_boundary, sv_axpy, sv_single, Induced, ModError, SparseVec,
    WeightModule, WordLabel,
};

/// Result of comparing `Φ^x M_P(S)` with `M_P(Φ^x S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub x: Rat,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
    pub multiplicities_match: bool,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0 && self.multiplicities_match
    }
}

/// `ψ((u ⊗ s)^x) = Θ_{−x}(u)·(1 ⊗ s^x)`, letter by letter from the right.
pub fn psi<N: WeightModule>(
    rhs: &Induced<Twisted<N>>,
    spec: &TwistSpec,
    l: &WordLabel<N::Label>,
) -> Result<SparseVec<WordLabel<N::Label>>, ModError> {
    let neg = -&spec.x;
    let mut cur = rhs.top(&sv_single(l.base.clone()));
    for &g in l.word.iter().rev() {
        cur = theta_action(rhs, &spec.f, &neg, &AffElt::gen(g), &cur)?;
    }
    Ok(cur)
}

fn psi_vec<N: WeightModule>(
    rhs: &Induced<Twisted<N>>,
    spec: &TwistSpec,
    v: &SparseVec<WordLabel<N::Label>>,
) -> Result<SparseVec<WordLabel<N::Label>>, ModError> {
    let mut out = SparseVec::new();
    for (l, c) in v {
        sv_axpy(&mut out, c, &psi(rhs, spec, l)?);
    }
    Ok(out)
}

/// Checks `ψ(X·l) = X·ψ(l)` for every basis label `l` of the truncated `M_P(S)` and every
/// generator in `gens`, and compares the weight multiplicities of both sides. `spec.f` must be
/// the `f` of the Levi `sl₂` acting bijectively on `S`.
pub fn induction_commutes_probe<N: WeightModule + Clone>(
    m: &Induced<N>,
    spec: &TwistSpec,
    gens: &[AffGen],
) -> Result<ProbeReport, ModError> {
    let lhs = twist_module(m.clone(), spec.clone());
    let rhs = m.with_levi(twist_module(m.levi().clone(), spec.clone()));
    let mut report = ProbeReport {
        x: spec.x.clone(),
        checked: 0,
        skipped: 0,
        failures: 0,
        multiplicities_match: multiplicity_table(&lhs) == multiplicity_table(&rhs),
    };
    for l in lhs.basis() {
        for &g in gens {
            let run = || -> Result<bool, ModError> {
                let left = psi_vec(&rhs, spec, &lhs.act_gen(g, &l)?)?;
                let right = rhs.act_vec(&AffElt::gen(g), &psi(&rhs, spec, &l)?)?;
                Ok(left == right)
            };
            match skip_boundary(run())? {
                Some(true) => report.checked += 1,
                Some(false) => {
                    report.checked += 1;
                    report.failures += 1;
                }
                None => report.skipped += 1,
            }
        }
    }
    Ok(report)
}
