use super::Rat;

/// Generalized binomial coefficient `x(x-1)...(x-i+1)/i!` for arbitrary rational `x`.
pub fn gen_binom(x: &Rat, i: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..i {
        acc = acc * (x - Rat::int(j as i64)) / Rat::int(j as i64 + 1);
    }
    acc
}

/// Chained binomial `binom(n, k1) binom(n-k1, k2) ...`: the coefficient of
/// `a0^(n-k1-...-kj) a1^k1 ... aj^kj` in `(a0 + ... + aj)^n`, also for negative `n`.
pub fn gen_multinom(n: i64, ks: &[u32]) -> Rat {
    let mut acc = Rat::one();
    let mut top = n;
    for &k in ks {
        acc = acc * gen_binom(&Rat::int(top), k);
        if acc.is_zero() {
            return acc;
        }
        top -= k as i64;
    }
    acc
}

/// Checks the convolution identity behind `(a0+...+ak)^(-N) (a0+...+ak)^(N+K) = (a0+...+ak)^K`
/// coefficientwise, for every tuple `l` of length `k` with `|l| <= N + K`.
pub fn multinom_convolution_check(n: u32, big_k: u32, k: usize) -> bool {
    let bound = n + big_k;
    let mut ok = true;
    for_each_tuple(k, bound, &mut |l| {
        if !ok {
            return;
        }
        let mut lhs = Rat::zero();
        for_each_split(l, &mut |i, j| {
            lhs += gen_multinom(-(n as i64), i) * gen_multinom((n + big_k) as i64, j);
        });
        if lhs != gen_multinom(big_k as i64, l) {
            ok = false;
        }
    });
    ok
}

/// Number of tuples visited by [`multinom_convolution_check`].
pub fn convolution_tuple_count(n: u32, big_k: u32, k: usize) -> usize {
    let mut count = 0;
    for_each_tuple(k, n + big_k, &mut |_| count += 1);
    count
}

/// Visits every tuple of `len` non-negative integers with sum at most `bound`.
pub fn for_each_tuple(len: usize, bound: u32, f: &mut dyn FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, len: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for v in 0..=left {
            buf.push(v);
            rec(buf, len, left - v, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(len);
    rec(&mut buf, len, bound, f);
}

fn for_each_split(l: &[u32], f: &mut dyn FnMut(&[u32], &[u32])) {
    fn rec(l: &[u32], i: &mut Vec<u32>, j: &mut Vec<u32>, f: &mut dyn FnMut(&[u32], &[u32])) {
        let t = i.len();
        if t == l.len() {
            f(i, j);
            return;
        }
        for a in 0..=l[t] {
            i.push(a);
            j.push(l[t] - a);
            rec(l, i, j, f);
            i.pop();
            j.pop();
        }
    }
    rec(l, &mut Vec::new(), &mut Vec::new(), f);
}
