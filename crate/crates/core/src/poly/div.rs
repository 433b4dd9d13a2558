use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{term_order, Exps, LaurentPoly};
use crate::error::{Error, Result};

/// Key wrapper so a `BTreeMap` iterates in the polynomial term order.
#[derive(PartialEq, Eq, Clone)]
struct Key(Exps);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // ascending in the map means smallest first; `last` is the leading term
        term_order(&other.0, &self.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact quotient `num / den` in the Laurent ring.
///
/// Both sides are first multiplied by monomials so that all exponents are
/// non-negative and `den` has no monomial factor; the quotient is then a
/// genuine polynomial and is found by repeatedly cancelling leading terms.
/// Any leftover is reported as [`Error::Divisibility`].
pub fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    num.check(den)?;
    if den.is_zero() {
        return Err(Error::Divisibility("division by zero".into()));
    }
    let alpha = num.alphabet().clone();
    if num.is_zero() {
        return Ok(LaurentPoly::zero(&alpha));
    }
    if den.is_monomial() {
        let (de, dc) = &den.terms()[0];
        let mut terms = Vec::with_capacity(num.len());
        for (e, c) in num.terms() {
            let (q, r) = c.div_rem(dc);
            if !r.is_zero() {
                return Err(Error::Divisibility(format!("coefficient {c} not divisible by {dc}")));
            }
            let ne: Exps = e.iter().zip(de.iter()).map(|(a, b)| a - b).collect();
            terms.push((ne, q));
        }
        return Ok(LaurentPoly::from_sorted(&alpha, terms));
    }

    let lo_n = num.min_exps();
    let lo_d = den.min_exps();
    let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let n0 = num.shift(&neg(&lo_n));
    let d0 = den.shift(&neg(&lo_d));

    let (lead_e, lead_c) = d0.terms()[0].clone();
    let k = alpha.len();
    let mut rem: BTreeMap<Key, BigInt> = n0.terms().iter().map(|(e, c)| (Key(e.clone()), c.clone())).collect();
    let mut quot: Vec<(Exps, BigInt)> = Vec::new();
    while let Some((key, c)) = rem.pop_last() {
        let qe: Exps = key.0.iter().zip(lead_e.iter()).map(|(a, b)| a - b).collect();
        if qe.iter().any(|&x| x < 0) {
            return Err(Error::Divisibility(format!(
                "leading term does not divide remainder ({} terms left)",
                rem.len() + 1
            )));
        }
        let (qc, r) = c.div_rem(&lead_c);
        if !r.is_zero() {
            return Err(Error::Divisibility(format!("coefficient {c} not divisible by {lead_c}")));
        }
        for (de, dc) in d0.terms().iter().skip(1) {
            let mut e = vec![0i32; k];
            for t in 0..k {
                e[t] = qe[t] + de[t];
            }
            let key = Key(e.into());
            let delta = &qc * dc;
            match rem.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quot.push((qe, qc));
    }
    // quotient terms were produced in descending order
    let q = LaurentPoly::from_sorted(&alpha, quot);
    let mut back = lo_n.clone();
    for t in 0..k {
        back[t] -= lo_d[t];
    }
    Ok(q.shift(&back))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Alphabet, Std};

    fn x1() -> (Alphabet, LaurentPoly) {
        let a = Alphabet::new(["X"]);
        let x = LaurentPoly::var(&a, "X");
        (a, x)
    }

    #[test]
    fn univariate() {
        let (a, x) = x1();
        let one = LaurentPoly::one(&a);
        let q = exact_div(&(&x.pow(2) - &one), &(&x - &one)).unwrap();
        assert_eq!(q, &x + &one);
    }

    #[test]
    fn vandermonde_two() {
        let s = Std::new(2);
        let num = &(&s.x(1, 2) * &s.x(2, 1)) - &(&s.x(1, 1) * &s.x(2, 2));
        let den = &s.x(2, 1) - &s.x(1, 1);
        let q = exact_div(&num, &den).unwrap();
        assert_eq!(q, -(&s.x(1, 1) * &s.x(2, 1)));
    }

    #[test]
    fn laurent_quotient() {
        let s = Std::new(1);
        let num = &(&s.u().pow(2) * &s.x(1, 2)) - &(&s.v().pow(2) * &s.x(1, -2));
        let den = &(&s.u() * &s.x(1, 1)) - &(&s.v() * &s.x(1, -1));
        let q = exact_div(&num, &den).unwrap();
        assert_eq!(q, s.uv_pair(1));
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn non_divisible() {
        let (a, x) = x1();
        let one = LaurentPoly::one(&a);
        let r = exact_div(&(&x.pow(2) + &one), &(&x - &one));
        assert!(matches!(r, Err(Error::Divisibility(_))));
        let r = exact_div(&x, &LaurentPoly::constant(&a, 2));
        assert!(matches!(r, Err(Error::Divisibility(_))));
        assert!(exact_div(&x, &LaurentPoly::zero(&a)).is_err());
    }
}
