use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::fin::sl2_indices;
use super::{sv_add, sv_axpy, sv_single, DenseSl2, FinModule, ModError, SparseVec, WeightModule};
use crate::affine::{AffElt, AffGen, AffRoot, AffWeight, AffineAlgebra};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Rat;
use crate::finlie::{FinWeight, LieElt, SimpleLieAlgebra, SimpleType};
use crate::rootpar::ParabolicSet;

/// Where a generator sits relative to `g = n⁻ ⊕ l ⊕ n⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    Neg,
    Levi,
    Pos,
}

/// `y_1 y_2 ⋯ y_r ⊗ n` with `y_1 ≤ … ≤ y_r` in `n⁻`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WordLabel<L> {
    pub word: Vec<AffGen>,
    pub base: L,
}

impl<L> WordLabel<L> {
    pub fn new(word: Vec<AffGen>, base: L) -> Self {
        WordLabel { word, base }
    }
}

/// Which PBW monomials are materialized: multisets from `pool` (each letter with a positive
/// cost) of total cost at most `max_cost`, optionally with `|Σ t-degree| ≤ grade_bound`.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub pool: Vec<(AffGen, u32)>,
    pub max_cost: u32,
    pub grade_bound: Option<i64>,
}

impl Truncation {
    pub fn words(&self) -> Vec<Vec<AffGen>> {
        let mut pool = self.pool.clone();
        pool.sort();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            pool: &[(AffGen, u32)],
            start: usize,
            left: u32,
            cur: &mut Vec<AffGen>,
            out: &mut Vec<Vec<AffGen>>,
        ) {
            out.push(cur.clone());
            for i in start..pool.len() {
                let (g, c) = pool[i];
                if c <= left {
                    cur.push(g);
                    rec(pool, i, left - c, cur, out);
                    cur.pop();
                }
            }
        }
        rec(&pool, 0, self.max_cost, &mut cur, &mut out);
        if let Some(b) = self.grade_bound {
            out.retain(|w| {
                let s: i64 = w.iter().map(grade_of).sum();
                s.abs() <= b
            });
        }
        out
    }
}

fn grade_of(g: &AffGen) -> i64 {
    match g {
        AffGen::Loop(_, m) => *m,
        _ => 0,
    }
}

type Classifier = Arc<dyn Fn(AffGen) -> Part + Send + Sync>;
type Coverage = Arc<dyn Fn(&AffWeight) -> bool + Send + Sync>;

/// The induced module `U(g) ⊗_{U(p)} N ≅ U(n⁻) ⊗ N`, with `n⁺` acting by zero on `N`.
///
/// Actions are computed by commuting the generator past the PBW word:
/// `x·(y_1 R) = y_1 (x·R) + [x, y_1]·R`, with `x·(1 ⊗ n)` equal to `0`, `x·n` or `x ⊗ n`
/// according to the part of `x`.
#[derive(Clone)]
pub struct Induced<N: WeightModule> {
    levi: N,
    classify: Classifier,
    truncation: Truncation,
    covers: Coverage,
    words: OnceLock<Vec<Vec<AffGen>>>,
}

impl<N: WeightModule + fmt::Debug> fmt::Debug for Induced<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Induced")
            .field("levi", &self.levi)
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl<N: WeightModule> Induced<N> {
    /// `covers(μ)` must be true exactly when every PBW word contributing to weight `μ` is
    /// materialized by the truncation.
    pub fn new(
        levi: N,
        classify: impl Fn(AffGen) -> Part + Send + Sync + 'static,
        truncation: Truncation,
        covers: impl Fn(&AffWeight) -> bool + Send + Sync + 'static,
    ) -> Self {
        Induced {
            levi,
            classify: Arc::new(classify),
            truncation,
            covers: Arc::new(covers),
            words: OnceLock::new(),
        }
    }

    pub fn levi(&self) -> &N {
        &self.levi
    }

    pub fn part(&self, g: AffGen) -> Part {
        (self.classify)(g)
    }

    /// The materialized PBW words, enumerated on first use.
    pub fn words(&self) -> &[Vec<AffGen>] {
        self.words.get_or_init(|| self.truncation.words())
    }

    /// The same induction data over another Levi module.
    pub fn with_levi<M: WeightModule>(&self, levi: M) -> Induced<M> {
        Induced {
            levi,
            classify: self.classify.clone(),
            truncation: self.truncation.clone(),
            covers: self.covers.clone(),
            words: self.words.clone(),
        }
    }

    pub fn word_weight(&self, word: &[AffGen]) -> AffWeight {
        let a = self.levi.algebra();
        let mut w = AffWeight::zero(a.fin_rank());
        for &g in word {
            w = &w + &a.gen_weight(g);
        }
        w
    }

    /// `1 ⊗ v` for a vector of the Levi module.
    pub fn top(&self, v: &SparseVec<N::Label>) -> SparseVec<WordLabel<N::Label>> {
        v.iter()
            .map(|(l, c)| (WordLabel::new(Vec::new(), l.clone()), c.clone()))
            .collect()
    }

    fn act_word(
        &self,
        x: AffGen,
        word: &[AffGen],
        base: &N::Label,
    ) -> Result<SparseVec<WordLabel<N::Label>>, ModError> {
        let part = self.part(x);
        let Some((&y1, rest)) = word.split_first() else {
            return match part {
                Part::Pos => Ok(SparseVec::new()),
                Part::Neg => Ok(sv_single(WordLabel::new(vec![x], base.clone()))),
                Part::Levi => Ok(self
                    .levi
                    .act_gen(x, base)?
                    .into_iter()
                    .map(|(l, c)| (WordLabel::new(Vec::new(), l), c))
                    .collect()),
            };
        };
        if part == Part::Neg && x <= y1 {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(x);
            w.extend_from_slice(word);
            return Ok(sv_single(WordLabel::new(w, base.clone())));
        }
        let mut out = SparseVec::new();
        for (lab, c) in self.act_word(x, rest, base)? {
            let v = self.act_word(y1, &lab.word, &lab.base)?;
            sv_axpy(&mut out, &c, &v);
        }
        let br = self
            .levi
            .algebra()
            .bracket(&AffElt::gen(x), &AffElt::gen(y1));
        for (g, c) in br.terms() {
            let v = self.act_word(g, rest, base)?;
            sv_axpy(&mut out, &c, &v);
        }
        Ok(out)
    }

    /// `y_1 ⋯ y_r · v` for arbitrary elements `y_i`, applied right to left.
    pub fn apply_word(
        &self,
        word: &[AffElt],
        v: &SparseVec<WordLabel<N::Label>>,
    ) -> Result<SparseVec<WordLabel<N::Label>>, ModError> {
        let mut cur = v.clone();
        for y in word.iter().rev() {
            cur = self.act_vec(y, &cur)?;
        }
        Ok(cur)
    }
}

impl<N: WeightModule> WeightModule for Induced<N> {
    type Label = WordLabel<N::Label>;

    fn algebra(&self) -> &AffineAlgebra {
        self.levi.algebra()
    }

    fn weight(&self, l: &Self::Label) -> AffWeight {
        &self.word_weight(&l.word) + &self.levi.weight(&l.base)
    }

    fn act_gen(&self, g: AffGen, l: &Self::Label) -> Result<SparseVec<Self::Label>, ModError> {
        self.act_word(g, &l.word, &l.base)
    }

    fn basis(&self) -> Vec<Self::Label> {
        let base = self.levi.basis();
        let mut out = Vec::with_capacity(self.words().len() * base.len());
        for w in self.words() {
            for b in &base {
                out.push(WordLabel::new(w.clone(), b.clone()));
            }
        }
        out
    }

    fn level(&self) -> Rat {
        self.levi.level()
    }

    /// For `f` in the Levi: `f⁻¹ u ⊗ n = Σ_i (−1)^i (ad f)^i(u) ⊗ f^{−1−i} n`, the sum ending at
    /// the nilpotency of `ad f` on the word.
    fn f_inverse(&self, f: &AffElt, l: &Self::Label) -> Result<SparseVec<Self::Label>, ModError> {
        for (g, _) in f.terms() {
            if self.part(g) != Part::Levi {
                return Err(ModError::NotInvertible(format!("{f:?} is not in the Levi")));
            }
        }
        let a = self.levi.algebra();
        let mut words: Vec<(Vec<AffElt>, Rat)> =
            vec![(l.word.iter().map(|&g| AffElt::gen(g)).collect(), Rat::one())];
        let mut base = sv_single(l.base.clone());
        let mut out = SparseVec::new();
        let mut sign = Rat::one();
        while !words.is_empty() {
            base = self.levi.f_inverse_vec(f, &base)?;
            let top = self.top(&base);
            for (w, c) in &words {
                let v = self.apply_word(w, &top)?;
                sv_axpy(&mut out, &(&sign * c), &v);
            }
            let mut next = Vec::new();
            for (w, c) in &words {
                for j in 0..w.len() {
                    let y = a.bracket(f, &w[j]);
                    if !y.is_zero() {
                        let mut w2 = w.clone();
                        w2[j] = y;
                        next.push((w2, c.clone()));
                    }
                }
            }
            words = next;
            sign = -sign;
        }
        Ok(out)
    }

    fn multiplicity(&self, w: &AffWeight) -> Option<usize> {
        if !(self.covers)(w) {
            return None;
        }
        let mut n = 0;
        for word in self.words() {
            let rest = w - &self.word_weight(word);
            n += self.levi.multiplicity(&rest)?;
        }
        Some(n)
    }
}

/// One-dimensional module of a Levi containing the loop Cartan: `h_i ⊗ t^n` acts by
/// `values[(i, n)]` (default `0` for `n ≠ 0`, the weight for `n = 0`), `D` and `K` by the weight.
#[derive(Debug, Clone)]
pub struct CharacterModule {
    alg: AffineAlgebra,
    top: AffWeight,
    values: BTreeMap<(usize, i64), Rat>,
}

impl CharacterModule {
    pub fn new(alg: AffineAlgebra, top: AffWeight) -> Self {
        CharacterModule {
            alg,
            top,
            values: BTreeMap::new(),
        }
    }

    /// Sets the scalar of `h_i ⊗ t^n` for `n ≠ 0`.
    pub fn with_value(mut self, i: usize, n: i64, v: Rat) -> Self {
        self.values.insert((i, n), v);
        self
    }

    fn scalar(&self, g: AffGen) -> Result<Rat, ModError> {
        match g {
            AffGen::D => Ok(self.top.d.clone()),
            AffGen::K => Ok(self.top.k.clone()),
            AffGen::Loop(i, n) => {
                let base = self.alg.base();
                let Some(pos) = base.cartan_indices().iter().position(|&h| h == i) else {
                    return Err(ModError::NotInAlgebra(format!("{g:?} is not in the Cartan")));
                };
                if n == 0 {
                    Ok(self.top.fin.0[pos].clone())
                } else {
                    Ok(self.values.get(&(i, n)).cloned().unwrap_or_else(Rat::zero))
                }
            }
        }
    }
}

impl WeightModule for CharacterModule {
    type Label = ();

    fn algebra(&self) -> &AffineAlgebra {
        &self.alg
    }

    fn weight(&self, _: &()) -> AffWeight {
        self.top.clone()
    }

    fn act_gen(&self, g: AffGen, _: &()) -> Result<SparseVec<()>, ModError> {
        let mut out = SparseVec::new();
        sv_add(&mut out, (), self.scalar(g)?);
        Ok(out)
    }

    fn basis(&self) -> Vec<()> {
        vec![()]
    }

    fn level(&self) -> Rat {
        self.top.k.clone()
    }

    fn multiplicity(&self, w: &AffWeight) -> Option<usize> {
        Some((*w == self.top) as usize)
    }
}

/// A dense `sl₂`-module for the Levi `sl₂(α_i) ⊕ h ⊕ FD ⊕ FK` of an untwisted algebra: label `j`
/// has weight `λ₀ + jα_i`, with `λ₀(h_i)` equal to the dense offset `b`.
#[derive(Debug, Clone)]
pub struct LeviDenseSl2 {
    alg: AffineAlgebra,
    dense: DenseSl2,
    simple: usize,
    top: AffWeight,
    e: usize,
    f: usize,
}

impl LeviDenseSl2 {
    /// `simple` indexes the simple roots of the base; `top` is the weight of `w_0`.
    pub fn new(
        alg: AffineAlgebra,
        simple: usize,
        dense: DenseSl2,
        top: AffWeight,
    ) -> Result<Self, ModError> {
        if alg.is_twisted() {
            return Err(ModError::Input("dense Levi modules are built for untwisted algebras".into()));
        }
        let base = alg.base();
        let Some(&ri) = base.simple_root_indices().get(simple) else {
            return Err(ModError::Input(format!("no simple root {simple}")));
        };
        if top.fin.0[simple] != dense.b {
            return Err(ModError::Input("top weight disagrees with the dense offset".into()));
        }
        let pr = &base.positive_roots()[ri];
        Ok(LeviDenseSl2 {
            e: pr.e,
            f: pr.f,
            alg,
            dense,
            simple,
            top,
        })
    }

    pub fn dense(&self) -> &DenseSl2 {
        &self.dense
    }

    pub fn f_elt(&self) -> AffElt {
        AffElt::gen(AffGen::Loop(self.f, 0))
    }

    pub fn e_elt(&self) -> AffElt {
        AffElt::gen(AffGen::Loop(self.e, 0))
    }

    fn alpha(&self) -> FinWeight {
        self.alg.base().simple_roots()[self.simple].clone()
    }

    fn lift(v: SparseVec<i64>) -> SparseVec<i64> {
        v
    }
}

impl WeightModule for LeviDenseSl2 {
    type Label = i64;

    fn algebra(&self) -> &AffineAlgebra {
        &self.alg
    }

    fn weight(&self, j: &i64) -> AffWeight {
        let fin = &self.top.fin + &self.alpha().scale(&Rat::int(*j));
        AffWeight::new(fin, self.top.d.clone(), self.top.k.clone())
    }

    fn act_gen(&self, g: AffGen, j: &i64) -> Result<SparseVec<i64>, ModError> {
        let (de, df, _) = sl2_indices(&SimpleLieAlgebra::build(SimpleType::A1));
        let mut out = SparseVec::new();
        match g {
            AffGen::D => sv_add(&mut out, *j, self.top.d.clone()),
            AffGen::K => sv_add(&mut out, *j, self.top.k.clone()),
            AffGen::Loop(i, 0) if i == self.e => out = Self::lift(self.dense.act(de, *j)?),
            AffGen::Loop(i, 0) if i == self.f => out = Self::lift(self.dense.act(df, *j)?),
            AffGen::Loop(i, 0) => {
                let base = self.alg.base();
                let Some(pos) = base.cartan_indices().iter().position(|&h| h == i) else {
                    return Err(ModError::NotInAlgebra(format!("{g:?}")));
                };
                if !self.dense.contains(*j) {
                    return Err(ModError::Boundary(format!("dense label {j}")));
                }
                sv_add(&mut out, *j, self.weight(j).fin.0[pos].clone());
            }
            _ => return Err(ModError::NotInAlgebra(format!("{g:?}"))),
        }
        Ok(out)
    }

    fn basis(&self) -> Vec<i64> {
        self.dense.labels()
    }

    fn level(&self) -> Rat {
        self.top.k.clone()
    }

    fn f_inverse(&self, f: &AffElt, j: &i64) -> Result<SparseVec<i64>, ModError> {
        let terms = f.terms();
        match terms.as_slice() {
            [(AffGen::Loop(i, 0), c)] if *i == self.f => {
                let (_, df, _) = sl2_indices(&SimpleLieAlgebra::build(SimpleType::A1));
                self.dense.invert(&LieElt::term(df, c.clone()), *j)
            }
            _ => Err(ModError::NotInvertible(format!("{f:?}"))),
        }
    }

    fn multiplicity(&self, w: &AffWeight) -> Option<usize> {
        if w.d != self.top.d || w.k != self.top.k {
            return Some(0);
        }
        let diff = &w.fin - &self.top.fin;
        let alpha = self.alpha();
        // diff must be a multiple of α.
        let pos = alpha.0.iter().position(|x| !x.is_zero())?;
        let j = &diff.0[pos] / &alpha.0[pos];
        if diff != alpha.scale(&j) || !j.is_integer() {
            return Some(0);
        }
        let j = j.to_i64()?;
        self.dense.contains(j).then_some(1)
    }
}

/// Coefficients of a weight in the simple roots `α_0, α_1, …, α_l` of an untwisted algebra,
/// using `α_0 = δ − θ`.
pub fn simple_coords(a: &AffineAlgebra, w: &AffWeight) -> Option<Vec<Rat>> {
    let base = a.base();
    let simple = base.simple_roots();
    let l = simple.len();
    let theta = base
        .positive_roots()
        .iter()
        .max_by_key(|p| a.fin_height(&p.weight))
        .expect("nonempty root system")
        .weight
        .clone();
    let target = &w.fin + &theta.scale(&w.d);
    let m: Matrix = (0..l).map(|r| simple.iter().map(|s| s.0[r].clone()).collect()).collect();
    let c = linalg::solve(&m, &target.0)?;
    let mut out = Vec::with_capacity(l + 1);
    out.push(w.d.clone());
    out.extend(c);
    Some(out)
}

fn root_of(a: &AffineAlgebra, g: AffGen) -> Option<AffRoot> {
    let w = a.gen_weight(g);
    let n = w.d.to_i64()?;
    if w.fin.is_zero() && n == 0 {
        None
    } else {
        Some(AffRoot::from_parts(w.fin, n))
    }
}

/// Classifier of generators by a parabolic set: Levi for `P ∩ −P` and the degree-zero Cartan,
/// positive for `P ∖ −P`, negative otherwise.
fn parabolic_classifier(a: AffineAlgebra, p: ParabolicSet) -> impl Fn(AffGen) -> Part {
    move |g| match root_of(&a, g) {
        None => Part::Levi,
        Some(r) => match (p.contains(&r), p.contains(&r.neg())) {
            (true, true) => Part::Levi,
            (true, false) => Part::Pos,
            _ => Part::Neg,
        },
    }
}

/// `M_P(N)` up to cone depth `depth`, for a standard parabolic set of an untwisted algebra.
/// Depth is the sum of the simple-root coefficients outside the Levi, which vanishes on the
/// Levi roots and is positive on the nilradical.
pub fn induced_truncated<N: WeightModule>(
    p: &ParabolicSet,
    levi: N,
    top: AffWeight,
    depth: u32,
) -> Result<Induced<N>, ModError> {
    let a = levi.algebra().clone();
    if a.is_twisted() {
        return Err(ModError::Input("induced modules are built for untwisted algebras".into()));
    }
    let d = depth as i64;
    let classify = parabolic_classifier(a.clone(), p.clone());
    // Simple roots of the standard base lying in the Levi.
    let rank = a.fin_rank();
    let mut simple_roots: Vec<AffRoot> = vec![AffRoot::real(
        -&a.base()
            .positive_roots()
            .iter()
            .max_by_key(|r| a.fin_height(&r.weight))
            .expect("nonempty")
            .weight,
        1,
    )];
    simple_roots.extend(a.base().simple_roots().into_iter().map(|s| AffRoot::real(s, 0)));
    let outside: Vec<bool> = simple_roots
        .iter()
        .map(|r| !(p.contains(r) && p.contains(&r.neg())))
        .collect();
    if p.contains(&AffRoot::imaginary(rank, 1)) == p.contains(&AffRoot::imaginary(rank, -1)) {
        return Err(ModError::Input("parabolic set is not standard".into()));
    }
    let phi = {
        let a = a.clone();
        let outside = outside.clone();
        move |w: &AffWeight| -> Option<Rat> {
            let c = simple_coords(&a, w)?;
            Some(c.iter().zip(&outside).filter(|(_, o)| **o).map(|(x, _)| x.clone()).sum())
        }
    };
    let mut pool = Vec::new();
    for m in -d..=d {
        for x in a.graded_basis(m) {
            let (i, _) = x.terms().next().expect("basis vector");
            let g = AffGen::Loop(i, m);
            if classify(g) != Part::Neg {
                continue;
            }
            let cost = phi(&(-&a.gen_weight(g))).ok_or_else(|| ModError::Input("bad root".into()))?;
            if !cost.is_integer() || !cost.is_positive() {
                return Err(ModError::Input(format!("{g:?} has nonpositive depth {cost}")));
            }
            if cost <= Rat::int(d) {
                pool.push((g, cost.to_i64().expect("small") as u32));
            }
        }
    }
    let truncation = Truncation {
        pool,
        max_cost: depth,
        grade_bound: None,
    };
    let covers = move |w: &AffWeight| match phi(&(&top - w)) {
        Some(c) => c <= Rat::int(d),
        None => false,
    };
    Ok(Induced::new(levi, classify, truncation, covers))
}

/// The imaginary Verma module `M(λ)` of `sl₂`-hat at level zero: `e ⊗ t^n` kills `v`,
/// `h ⊗ t^n` acts by `λ δ_{n,0}`. Materialized on monomials `f_{k_1} ⋯ f_{k_r}·v` with
/// `|k_i| ≤ mode_cap`, `r ≤ length_cap` and `|Σ k_i| ≤ depth`. Multiplicities are reported only
/// for weights with at most one letter.
pub fn imaginary_verma(
    lambda: Rat,
    depth: i64,
    length_cap: u32,
    mode_cap: i64,
) -> Induced<CharacterModule> {
    let a = AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A1));
    let (e, f, _) = sl2_indices(a.base());
    let top = AffWeight::level0(FinWeight(vec![lambda.clone()]), Rat::zero());
    let levi = CharacterModule::new(a, top);
    let classify = move |g: AffGen| match g {
        AffGen::Loop(i, _) if i == f => Part::Neg,
        AffGen::Loop(i, _) if i == e => Part::Pos,
        _ => Part::Levi,
    };
    let pool = (-mode_cap..=mode_cap).map(|k| (AffGen::Loop(f, k), 1)).collect();
    let truncation = Truncation {
        pool,
        max_cost: length_cap,
        grade_bound: Some(depth),
    };
    // Weight spaces with two or more letters are infinite-dimensional.
    let reach = depth.min(mode_cap);
    let covers = move |w: &AffWeight| {
        let len = (&lambda - &w.fin.0[0]) / Rat::int(2);
        if len.is_zero() {
            w.d.is_zero()
        } else {
            len.is_one() && length_cap >= 1 && w.d.is_integer() && w.d.abs() <= Rat::int(reach)
        }
    };
    Induced::new(levi, classify, truncation, covers)
}

/// The Verma module of `sl₂`-hat for the standard Borel, level zero, highest weight `λ` on `h`:
/// `e_m` (`m ≥ 0`), `f_m` (`m > 0`) and `h_m` (`m > 0`) kill `v`. Truncated by height
/// (`ht δ = 2`).
pub fn standard_verma_a1(lambda: Rat, depth: u32) -> Induced<CharacterModule> {
    let a = AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A1));
    let (e, f, h) = sl2_indices(a.base());
    let top = AffWeight::level0(FinWeight(vec![lambda]), Rat::zero());
    let levi = CharacterModule::new(a, top.clone());
    let classify = move |g: AffGen| match g {
        AffGen::Loop(i, m) if i == f => {
            if m <= 0 {
                Part::Neg
            } else {
                Part::Pos
            }
        }
        AffGen::Loop(i, m) if i == e => {
            if m < 0 {
                Part::Neg
            } else {
                Part::Pos
            }
        }
        AffGen::Loop(i, m) if i == h => match m.signum() {
            -1 => Part::Neg,
            0 => Part::Levi,
            _ => Part::Pos,
        },
        _ => Part::Levi,
    };
    let d = depth as i64;
    let mut pool = Vec::new();
    for k in 0..=d {
        // f_{-k}: root −α − kδ, height 1 + 2k.
        if 1 + 2 * k <= d {
            pool.push((AffGen::Loop(f, -k), (1 + 2 * k) as u32));
        }
        if k >= 1 {
            // e_{-k}: root α − kδ, height 2k − 1; h_{-k}: height 2k.
            if 2 * k - 1 <= d {
                pool.push((AffGen::Loop(e, -k), (2 * k - 1) as u32));
            }
            if 2 * k <= d {
                pool.push((AffGen::Loop(h, -k), (2 * k) as u32));
            }
        }
    }
    let truncation = Truncation {
        pool,
        max_cost: depth,
        grade_bound: None,
    };
    let covers = move |w: &AffWeight| {
        let diff = &top - w;
        // height = (α-coefficient) + 2·(δ-coefficient) with α-coefficient = h-value/2.
        let ht = &diff.fin.0[0] / Rat::int(2) + Rat::int(2) * &diff.d;
        ht <= Rat::int(d)
    };
    Induced::new(levi, classify, truncation, covers)
}
