//! Small combinatorial helpers shared by the models.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient `C(n, k)` for arbitrary integer arguments, zero when
/// `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// `binom` as an `i64`; panics on overflow, which never happens at the sizes
/// used here.
pub fn binom_i64(n: i64, k: i64) -> i64 {
    i64::try_from(binom(n, k)).expect("binomial overflows i64")
}

/// Multinomial `n! / (k_1! ... k_r!)`; zero unless all parts are non-negative
/// and sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    let mut rest = n;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binom(rest, p);
        rest -= p;
    }
    acc
}

/// All permutations of `0..n` in lexicographic order together with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push((perm.clone(), perm_sign(&perm)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Sign of a permutation of `0..n` given in one-line notation.
pub fn perm_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn int_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// `C(i+j-1, 2j-i-1)` for `1 <= i, j <= n`: the matrix whose determinant counts
/// the symmetric tilings.
pub fn unrefined_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| binom(i + j - 1, 2 * j - i - 1)).collect())
        .collect()
}

/// Exact halving, `None` when the value is odd.
pub fn halve(x: &BigInt) -> Option<BigInt> {
    let two = BigInt::from(2);
    if (x % &two).is_zero() {
        Some(x / two)
    } else {
        None
    }
}

/// `(-1)^e` as an `i32`.
pub fn neg_one_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Absolute value helper that keeps call sites short.
pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(multinomial(4, &[1, 1, 2]), BigInt::from(12));
        assert_eq!(multinomial(4, &[1, -1, 4]), BigInt::zero());
    }

    #[test]
    fn permutation_signs() {
        let all = permutations_with_sign(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().map(|p| p.1).sum::<i32>(), 0);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
        assert_eq!(permutations_with_sign(0).len(), 1);
    }

    #[test]
    fn unrefined_values() {
        let vals: Vec<BigInt> = (1..=5).map(|n| int_det(&unrefined_matrix(n))).collect();
        let want: Vec<BigInt> = [1, 3, 26, 646, 45885].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(vals, want);
    }
}
