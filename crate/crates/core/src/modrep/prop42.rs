use super::induced::{standard_verma_a1, WordLabel};
use super::ModError;
use crate::affine::{AffElt, AffGen};
use crate::exact::Rat;
use crate::finlie::{SimpleLieAlgebra, SimpleType};

use super::fin::sl2_indices;

/// Coefficient of `v` in `X_k·v_l`, where `v` is the highest weight vector of the level-zero
/// Verma module of `sl₂`-hat with `h_0 v = λv`, `X_k = h_k h_{n−k}` and `v_l = e_{−l} f_{l−n}·v`.
///
/// The loop index of `e` is negative: with `e_l` the vector `v_l` has `D`-degree `2l − n`, while
/// `X_k` raises degree by `n`, so the pairing with `v` would vanish identically.
pub fn prop42_entry(n: i64, lambda: &Rat, k: i64, l: i64) -> Result<Rat, ModError> {
    pairing(n, lambda, k, -l, l - n)
}

/// The same pairing with `v_l = e_l f_{l−n}·v` taken literally.
pub fn prop42_entry_literal(n: i64, lambda: &Rat, k: i64, l: i64) -> Result<Rat, ModError> {
    pairing(n, lambda, k, l, l - n)
}

fn pairing(n: i64, lambda: &Rat, k: i64, e_mode: i64, f_mode: i64) -> Result<Rat, ModError> {
    if n < 2 || !(1..n).contains(&k) {
        return Err(ModError::Input(format!("need n ≥ 2 and 1 ≤ k ≤ n−1, got n={n}, k={k}")));
    }
    let m = standard_verma_a1(lambda.clone(), (2 * n) as u32);
    let (e, f, h) = sl2_indices(&SimpleLieAlgebra::build(SimpleType::A1));
    let top = m.top(&super::sv_single(()));
    let word = [
        AffElt::gen(AffGen::Loop(h, k)),
        AffElt::gen(AffGen::Loop(h, n - k)),
        AffElt::gen(AffGen::Loop(e, e_mode)),
        AffElt::gen(AffGen::Loop(f, f_mode)),
    ];
    let out = m.apply_word(&word, &top)?;
    Ok(out
        .get(&WordLabel::new(Vec::new(), ()))
        .cloned()
        .unwrap_or_else(Rat::zero))
}

/// The printed case split: `4λ` if `l > k` and `n < k + l`, `−4λ` if `l ≤ k` and `n ≥ k + l`,
/// `0` otherwise.
pub fn prop42_case(n: i64, lambda: &Rat, k: i64, l: i64) -> Rat {
    let four = Rat::int(4) * lambda;
    if l > k && n < k + l {
        four
    } else if l <= k && n >= k + l {
        -four
    } else {
        Rat::zero()
    }
}

/// `(n−1) × (n−1)` matrix of [`prop42_entry`], rows `k`, columns `l`, both from `1`.
pub fn prop42_matrix(n: i64, lambda: &Rat) -> Result<Vec<Vec<Rat>>, ModError> {
    (1..n)
        .map(|k| (1..n).map(|l| prop42_entry(n, lambda, k, l)).collect())
        .collect()
}

/// The block `1 ≤ k, l < n/2`.
pub fn prop42_block(matrix: &[Vec<Rat>], n: i64) -> Vec<Vec<Rat>> {
    let b = ((n - 1) / 2) as usize;
    matrix.iter().take(b).map(|r| r[..b].to_vec()).collect()
}
