//! Dense exact linear algebra over the rationals and integer lattice membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rat;

pub type Matrix = Vec<Vec<Rat>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Some solution `x` of `A x = b`, or `None` when inconsistent.
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : A x = 0}`.
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&m[i][f];
            }
            v
        })
        .collect()
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(a: &Matrix) -> Rat {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let d = &f * &m[c][j];
                    m[i][j] -= &d;
                }
            }
        }
    }
    det
}

pub fn mat_vec(a: &Matrix, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Row-style Hermite normal form of the lattice spanned by `gens`; zero rows dropped.
pub fn hermite_rows(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for c in 0..cols {
        // Euclid on column c among remaining rows.
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            for &i in &nz {
                if i == piv {
                    continue;
                }
                let qt = rows[i][c].div_floor(&rows[piv][c]);
                let sub: Vec<BigInt> = rows[piv].iter().map(|x| x * &qt).collect();
                for (x, s) in rows[i].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut r = rows.remove(i);
            if r[c].is_negative() {
                r.iter_mut().for_each(|x| *x = -x.clone());
            }
            out.push(r);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    out
}

/// Whether `target` lies in the integer span of `gens`.
pub fn in_integer_span(gens: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    let h = hermite_rows(gens);
    let mut t = target.to_vec();
    for row in &h {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        if t[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (qt, rem) = t[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (x, r) in t.iter_mut().zip(row) {
            *x -= &qt * r;
        }
    }
    t.iter().all(Zero::is_zero)
}

/// Converts a rational vector to integers, if every entry is integral.
pub fn to_integers(v: &[Rat]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.numer().clone()))
        .collect()
}
