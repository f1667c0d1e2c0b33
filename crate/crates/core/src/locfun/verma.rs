use serde::Serialize;

use crate::affine::{AffElt, AffGen, AffWeight, AffineAlgebra};
use crate::exact::{gen_binom, Rat};
use crate::finlie::FinWeight;
use crate::modrep::{
    imaginary_verma, sv_add, sv_single, CharacterModule, Induced, ModError, SparseVec,
    WeightModule, WordLabel,
};

/// `f_0^{n0} f_{k_1} ⋯ f_{k_r}·v` with `k_i ≠ 0` sorted and `n0 ∈ ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VermaLabel {
    pub n0: i64,
    pub modes: Vec<i64>,
}

/// `𝒟_α M(λ)` for the imaginary Verma module of `sl₂`-hat and `α` the finite root.
///
/// The `f_k` commute, so the localization is spanned by the monomials of [`VermaLabel`]. A
/// generator acts through
/// `X f_0^{n} = Σ_i binom(n,i) (−1)^i f_0^{n−i} (ad f_0)^i(X)`, valid for every integer `n`,
/// followed by the action on `M(λ)` itself.
#[derive(Debug, Clone)]
pub struct LocalizedVerma {
    verma: Induced<CharacterModule>,
    lambda: Rat,
    f: usize,
    n0_window: (i64, i64),
}

/// The localized module, materialized on `n0 ∈ [n0_min, n0_max]` times the monomials in the
/// other `f_k` with `|k| ≤ mode_cap`, at most `length_cap` letters and `|Σ k| ≤ depth`.
pub fn localize_imaginary_verma(
    lambda: Rat,
    n0_window: (i64, i64),
    depth: i64,
    length_cap: u32,
    mode_cap: i64,
) -> LocalizedVerma {
    let verma = imaginary_verma(lambda.clone(), depth, length_cap, mode_cap);
    let f = verma.algebra().base().index_of("f1").expect("sl2 basis");
    LocalizedVerma {
        verma,
        lambda,
        f,
        n0_window,
    }
}

impl LocalizedVerma {
    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn f0(&self) -> AffElt {
        AffElt::gen(AffGen::Loop(self.f, 0))
    }

    /// The highest weight vector `v`.
    pub fn top(&self) -> VermaLabel {
        VermaLabel {
            n0: 0,
            modes: Vec::new(),
        }
    }

    fn to_word(&self, l: &VermaLabel) -> WordLabel<()> {
        WordLabel::new(l.modes.iter().map(|&k| AffGen::Loop(self.f, k)).collect(), ())
    }

    fn from_word(&self, n0: i64, w: &WordLabel<()>) -> VermaLabel {
        let mut extra = 0;
        let mut modes = Vec::new();
        for g in &w.word {
            match g {
                AffGen::Loop(i, 0) if *i == self.f => extra += 1,
                AffGen::Loop(i, k) if *i == self.f => modes.push(*k),
                _ => unreachable!("imaginary Verma words only contain f"),
            }
        }
        modes.sort();
        VermaLabel {
            n0: n0 + extra,
            modes,
        }
    }
}

impl WeightModule for LocalizedVerma {
    type Label = VermaLabel;

    fn algebra(&self) -> &AffineAlgebra {
        self.verma.algebra()
    }

    fn weight(&self, l: &VermaLabel) -> AffWeight {
        let len = l.n0 + l.modes.len() as i64;
        AffWeight::level0(
            FinWeight(vec![&self.lambda - Rat::int(2 * len)]),
            Rat::int(l.modes.iter().sum()),
        )
    }

    fn act_gen(&self, g: AffGen, l: &VermaLabel) -> Result<SparseVec<VermaLabel>, ModError> {
        let a = self.algebra();
        let f0 = self.f0();
        let base = sv_single(self.to_word(l));
        let n = Rat::int(l.n0);
        let mut out = SparseVec::new();
        let mut y = AffElt::gen(g);
        let mut i = 0u32;
        while !y.is_zero() {
            let sign = if i % 2 == 0 { Rat::one() } else { Rat::int(-1) };
            let c = gen_binom(&n, i) * sign;
            if !c.is_zero() {
                for (w, d) in self.verma.act_vec(&y, &base)? {
                    sv_add(&mut out, self.from_word(l.n0 - i as i64, &w), &c * &d);
                }
            }
            y = a.bracket(&f0, &y);
            i += 1;
        }
        Ok(out)
    }

    fn basis(&self) -> Vec<VermaLabel> {
        let mut out = Vec::new();
        for w in self.verma.words() {
            let l = self.from_word(0, &WordLabel::new(w.clone(), ()));
            if l.n0 != 0 {
                continue;
            }
            for n0 in self.n0_window.0..=self.n0_window.1 {
                out.push(VermaLabel {
                    n0,
                    modes: l.modes.clone(),
                });
            }
        }
        out.sort();
        out
    }

    fn f_inverse(&self, f: &AffElt, l: &VermaLabel) -> Result<SparseVec<VermaLabel>, ModError> {
        match f.terms().as_slice() {
            [(AffGen::Loop(i, 0), c)] if *i == self.f => {
                let mut out = SparseVec::new();
                sv_add(
                    &mut out,
                    VermaLabel {
                        n0: l.n0 - 1,
                        modes: l.modes.clone(),
                    },
                    c.recip(),
                );
                Ok(out)
            }
            _ => Err(ModError::NotInvertible(format!("{f:?}"))),
        }
    }

    /// Every weight space is infinite-dimensional (`f_0^{n−2} f_{−k} f_k·v` for all `k`); only
    /// windowed counts are available, through the basis.
    fn multiplicity(&self, _: &AffWeight) -> Option<usize> {
        None
    }
}
