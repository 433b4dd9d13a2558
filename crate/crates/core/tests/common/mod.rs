//! Strategies and property checks shared by the property suite and the
//! acceptance run.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use vsasm_core::matrix::{DetMethod, PolyMatrix};
use vsasm_core::poly::{antisymmetrize, exact_div, h_neg_law, homogeneous, vandermonde, Alphabet, LaurentPoly};

pub const VARS: [&str; 4] = ["a", "b", "c", "d"];

pub fn alphabet() -> Alphabet {
    Alphabet::new(VARS)
}

pub fn poly(max_terms: usize, max_exp: i32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-max_exp..=max_exp, VARS.len()), -9i64..=9), 0..=max_terms)
        .prop_map(|terms| LaurentPoly::from_terms(&alphabet(), terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

pub fn triple() -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    (poly(5, 3), poly(5, 3), poly(5, 3))
}

pub fn matrix() -> impl Strategy<Value = (usize, Vec<LaurentPoly>)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(poly(3, 2), n * n)))
}

/// `(k, m)` with `k` reaching well into the negative range.
pub fn h_params() -> impl Strategy<Value = (i64, usize)> {
    (-10i64..=5, 1usize..=4)
}

pub fn ring_axioms(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), String> {
    let alpha = a.alphabet().clone();
    let zero = LaurentPoly::zero(&alpha);
    let one = LaurentPoly::one(&alpha);
    let checks = [
        ("additive associativity", &(a + b) + c == a + &(b + c)),
        ("additive commutativity", a + b == b + a),
        ("additive identity", a + &zero == *a),
        ("additive inverse", (a - &a.clone()).is_zero() && (a + &(-a)).is_zero()),
        ("multiplicative associativity", &(a * b) * c == a * &(b * c)),
        ("multiplicative commutativity", a * b == b * a),
        ("multiplicative identity", a * &one == *a),
        ("distributivity", a * &(b + c) == &(a * b) + &(a * c)),
        ("zero product", (a * &zero).is_zero()),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} fails for {a}, {b}, {c}")),
        None => Ok(()),
    }
}

/// The antisymmetrizer changes sign under a transposition of its variables
/// and is divisible by the Vandermonde product.
pub fn antisymmetry(f: &LaurentPoly, swap: (usize, usize)) -> Result<(), String> {
    let vars = [0, 1, 2];
    let a = antisymmetrize(f, &vars);
    let mut perm: Vec<usize> = (0..VARS.len()).collect();
    perm.swap(swap.0, swap.1);
    if a.permute_vars(&perm) != -&a {
        return Err(format!("antisymmetrizer of {f} is not alternating"));
    }
    // clear the negative powers first so the quotient is a polynomial
    let shift: Vec<i32> = a.min_exps().iter().map(|&m| (-m).max(0)).collect();
    let shifted = a.shift(&shift);
    let v = vandermonde(a.alphabet(), &vars);
    match exact_div(&shifted, &v) {
        Ok(q) if &q * &v == shifted => Ok(()),
        _ => Err(format!("antisymmetrizer of {f} is not divisible by the Vandermonde product")),
    }
}

pub fn leibniz_bareiss(n: usize, entries: &[LaurentPoly]) -> Result<(), String> {
    let m = PolyMatrix::from_entries(n, &alphabet(), entries.to_vec()).map_err(|e| e.to_string())?;
    let l = m.det(DetMethod::Leibniz);
    let b = m.det(DetMethod::Bareiss);
    if l == b {
        Ok(())
    } else {
        Err(format!("{n}x{n}: Leibniz {l} vs Bareiss {b}"))
    }
}

/// For distinct variables `x_1..x_m` and every integer `k`,
/// `h_k * prod_{i<j} (x_i - x_j) = sum_i (-1)^{i-1} x_i^{k+m-1} prod_{j<l; j,l != i} (x_j - x_l)`,
/// which is checked together with the closed form for negative degrees and
/// the recurrence in the last variable.
pub fn negative_h(k: i64, m: usize) -> Result<(), String> {
    let alpha = alphabet();
    let xs: Vec<LaurentPoly> = VARS[..m].iter().map(|v| LaurentPoly::var(&alpha, v)).collect();
    let h = homogeneous(k, &xs, &alpha).map_err(|e| e.to_string())?;
    let diff_product = |skip: Option<usize>| {
        let mut p = LaurentPoly::one(&alpha);
        for j in 0..m {
            for l in j + 1..m {
                if skip != Some(j) && skip != Some(l) {
                    p = &p * &(&xs[j] - &xs[l]);
                }
            }
        }
        p
    };
    let lhs = &h * &diff_product(None);
    let mut rhs = LaurentPoly::zero(&alpha);
    for (i, x) in xs.iter().enumerate() {
        let term = &x.pow_i((k + m as i64 - 1) as i32).map_err(|e| e.to_string())? * &diff_product(Some(i));
        rhs = if i % 2 == 0 { &rhs + &term } else { &rhs - &term };
    }
    if lhs != rhs {
        return Err(format!("h_{k} in {m} variables fails the interpolation identity"));
    }
    if k < 0 && h != h_neg_law(k, &xs, &alpha).map_err(|e| e.to_string())? {
        return Err(format!("h_{k} in {m} variables differs from the closed form"));
    }
    let prev = homogeneous(k, &xs[..m - 1], &alpha).map_err(|e| e.to_string())?;
    let lower = homogeneous(k - 1, &xs, &alpha).map_err(|e| e.to_string())?;
    if m > 1 && h != &prev + &(&xs[m - 1] * &lower) {
        return Err(format!("h_{k} in {m} variables breaks the recurrence"));
    }
    Ok(())
}
