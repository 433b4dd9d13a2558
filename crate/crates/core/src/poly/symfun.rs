use std::collections::HashMap;

use num_bigint::BigInt;

use super::{exact_div, Alphabet, Exps, LaurentPoly};
use crate::error::{Error, Result};
use crate::util::permutations_with_sign;

/// Complete homogeneous symmetric function `h_k(args)`, for every integer `k`.
///
/// Non-negative degrees are evaluated by substitution through the recurrence
/// `h_d(a_1..a_m) = h_d(a_1..a_{m-1}) + a_m h_{d-1}(a_1..a_m)`. For `-m < k < 0`
/// the value is zero, and for `k <= -m` it is
/// `(-1)^{m+1} (a_1...a_m)^{-1} h_{-k-m}(a_1^{-1}, ..., a_m^{-1})`, which needs
/// every argument to be a unit of the Laurent ring.
pub fn homogeneous(k: i64, args: &[LaurentPoly], alpha: &Alphabet) -> Result<LaurentPoly> {
    let m = args.len() as i64;
    if k >= 0 {
        return Ok(h_table(k as usize, args, alpha).pop().unwrap());
    }
    if m == 0 || k > -m {
        return Ok(LaurentPoly::zero(alpha));
    }
    let inv: Vec<LaurentPoly> = args
        .iter()
        .map(|a| a.inverse_monomial())
        .collect::<Result<_>>()
        .map_err(|_| Error::Unsupported(format!("h_{k} needs invertible arguments")))?;
    let prod_inv = LaurentPoly::product(alpha, inv.iter());
    let inner = homogeneous(-k - m, &inv, alpha)?;
    let sign = if (m + 1) % 2 == 0 { 1 } else { -1 };
    Ok((&prod_inv * &inner).scale(sign))
}

/// `[h_0, h_1, ..., h_k]` of the given arguments.
pub fn h_table(k: usize, args: &[LaurentPoly], alpha: &Alphabet) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(alpha); k + 1];
    h[0] = LaurentPoly::one(alpha);
    for a in args {
        for d in 1..=k {
            let next = &h[d] + &(a * &h[d - 1]);
            h[d] = next;
        }
    }
    h
}

/// Elementary symmetric function `e_k(args)`; zero outside `0..=args.len()`.
pub fn elementary(k: i64, args: &[LaurentPoly], alpha: &Alphabet) -> LaurentPoly {
    if k < 0 || k > args.len() as i64 {
        return LaurentPoly::zero(alpha);
    }
    let k = k as usize;
    let mut e = vec![LaurentPoly::zero(alpha); k + 1];
    e[0] = LaurentPoly::one(alpha);
    for a in args {
        for d in (1..=k).rev() {
            let next = &e[d] + &(a * &e[d - 1]);
            e[d] = next;
        }
    }
    e.pop().unwrap()
}

/// Right-hand side of the negative degree law for variable arguments:
/// `(-1)^{m+1} (x_1...x_m)^{-1} h_{-k-m}(x_1^{-1}, ..., x_m^{-1})`, with the
/// inner `h` taken as zero when its degree is negative.
pub fn h_neg_law(k: i64, args: &[LaurentPoly], alpha: &Alphabet) -> Result<LaurentPoly> {
    let m = args.len() as i64;
    let inv: Vec<LaurentPoly> = args.iter().map(|a| a.inverse_monomial()).collect::<Result<_>>()?;
    let d = -k - m;
    if d < 0 {
        return Ok(LaurentPoly::zero(alpha));
    }
    let prod_inv = LaurentPoly::product(alpha, inv.iter());
    let inner = h_table(d as usize, &inv, alpha).pop().unwrap();
    let sign = if (m + 1) % 2 == 0 { 1 } else { -1 };
    Ok((&prod_inv * &inner).scale(sign))
}

/// `sum_sigma sgn(sigma) f(x_{sigma(1)}, ..., x_{sigma(m)})` over the listed
/// variable indices; the other variables are untouched.
pub fn antisymmetrize(f: &LaurentPoly, vars: &[usize]) -> LaurentPoly {
    let alpha = f.alphabet();
    let mut acc: HashMap<Exps, BigInt> = HashMap::new();
    for (sigma, sign) in permutations_with_sign(vars.len()) {
        for (e, c) in f.terms() {
            let mut ne = e.to_vec();
            for (i, &s) in sigma.iter().enumerate() {
                ne[vars[s]] = e[vars[i]];
            }
            let entry = acc.entry(ne.into()).or_default();
            if sign > 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
    }
    LaurentPoly::from_map(alpha, acc)
}

/// `prod_{i<j} (x_j - x_i)` over the listed variable indices.
pub fn vandermonde(alpha: &Alphabet, vars: &[usize]) -> LaurentPoly {
    let mut acc = LaurentPoly::one(alpha);
    let unit = |t: usize| {
        let mut e = vec![0; alpha.len()];
        e[t] = 1;
        LaurentPoly::monomial(alpha, 1, &e)
    };
    for j in 0..vars.len() {
        for i in 0..j {
            acc = &acc * &(&unit(vars[j]) - &unit(vars[i]));
        }
    }
    acc
}

/// `det(x_i^{k_j + j - 1}) / prod_{i<j}(x_j - x_i)`, for any integer vector `k`.
pub fn schur_extended(k: &[i64], vars: &[usize], alpha: &Alphabet) -> Result<LaurentPoly> {
    if k.len() != vars.len() {
        return Err(Error::Structure(format!("{} exponents for {} variables", k.len(), vars.len())));
    }
    let mut e = vec![0i32; alpha.len()];
    for (j, &kj) in k.iter().enumerate() {
        e[vars[j]] = (kj + j as i64) as i32;
    }
    let alt = antisymmetrize(&LaurentPoly::monomial(alpha, 1, &e), vars);
    exact_div(&alt, &vandermonde(alpha, vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Std;

    fn xs(s: &Std) -> Vec<LaurentPoly> {
        (1..=s.n).map(|i| s.x(i, 1)).collect()
    }

    #[test]
    fn negative_degrees() {
        let s = Std::new(2);
        assert!(homogeneous(-1, &xs(&s), &s.alpha).unwrap().is_zero());
        let h = homogeneous(-2, &xs(&s), &s.alpha).unwrap();
        assert_eq!(h, -(&s.x(1, -1) * &s.x(2, -1)));
    }

    #[test]
    fn h_at_equal_arguments() {
        let s = Std::new(1);
        let x = s.x(1, 1);
        let h = homogeneous(2, &[x.clone(), x.clone(), x.clone()], &s.alpha).unwrap();
        assert_eq!(h, s.x(1, 2).scale(6));
    }

    #[test]
    fn e2_of_pair() {
        let s = Std::new(1);
        let args = [&s.u() * &s.x(1, 1), &s.v() * &s.x(1, -1)];
        assert_eq!(elementary(2, &args, &s.alpha), &s.u() * &s.v());
        assert!(elementary(3, &args, &s.alpha).is_zero());
    }

    #[test]
    fn composite_arguments_in_zero_band() {
        let s = Std::new(2);
        let args = [s.uv_pair(1), s.uv_pair(2)];
        assert!(homogeneous(-1, &args, &s.alpha).unwrap().is_zero());
        assert!(homogeneous(-2, &args, &s.alpha).is_err());
        assert_eq!(homogeneous(1, &args, &s.alpha).unwrap(), &args[0] + &args[1]);
    }

    #[test]
    fn antisymmetrizer_basics() {
        let s = Std::new(3);
        let v = [s.xi(1), s.xi(2)];
        let f = &s.x(1, 2) * &s.x(2, 1);
        let want = &f - &(&s.x(2, 2) * &s.x(1, 1));
        assert_eq!(antisymmetrize(&f, &v), want);
        let sym = &s.x(1, 1) + &s.x(2, 1);
        assert!(antisymmetrize(&sym, &v).is_zero());
        let all = [s.xi(1), s.xi(2), s.xi(3)];
        let g = &s.x(2, 1) * &s.x(3, 2);
        assert_eq!(antisymmetrize(&g, &all), vandermonde(&s.alpha, &all));
    }

    #[test]
    fn schur_small() {
        let s = Std::new(2);
        let v = [s.xi(1), s.xi(2)];
        assert_eq!(schur_extended(&[0, 1], &v, &s.alpha).unwrap(), &s.x(1, 1) + &s.x(2, 1));
        assert_eq!(schur_extended(&[0], &v[..1], &s.alpha).unwrap(), s.one());
        assert_eq!(schur_extended(&[-1], &v[..1], &s.alpha).unwrap(), s.x(1, -1));
        assert!(schur_extended(&[1, 0], &v, &s.alpha).unwrap().is_zero());
    }
}
