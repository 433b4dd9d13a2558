//! Sparse multivariate Laurent polynomials over the integers.
//!
//! A polynomial lives over a fixed [`Alphabet`]; combining polynomials over
//! different alphabets is an error. Terms are kept sorted in descending
//! graded-lexicographic order of their exponent vectors, so two equal
//! polynomials always have identical term lists and serializations.

mod div;
mod json;
mod symfun;

pub use div::exact_div;
pub use json::{PolyJson, TermJson};
pub use symfun::{antisymmetrize, elementary, h_neg_law, h_table, homogeneous, schur_extended, vandermonde};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exps = Box<[i32]>;

/// Ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Alphabet(names.into())
    }

    /// `u, v, w, X1, ..., Xn`.
    pub fn standard(n: usize) -> Self {
        let mut names = vec!["u".to_string(), "v".to_string(), "w".to_string()];
        names.extend((1..=n).map(|i| format!("X{i}")));
        Alphabet::new(names)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|s| s == name)
    }

    /// Index of a variable that must exist; panics otherwise.
    pub fn idx(&self, name: &str) -> usize {
        self.index_of(name)
            .unwrap_or_else(|| panic!("variable {name} not in alphabet {:?}", self.0))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Descending graded-lex comparison: larger total degree first, then
/// lexicographically larger exponent vectors first.
pub fn term_order(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    alpha: Alphabet,
    terms: Vec<(Exps, BigInt)>,
}

impl LaurentPoly {
    pub fn zero(alpha: &Alphabet) -> Self {
        LaurentPoly { alpha: alpha.clone(), terms: Vec::new() }
    }

    pub fn one(alpha: &Alphabet) -> Self {
        Self::constant(alpha, BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(alpha: &Alphabet, c: C) -> Self {
        Self::monomial(alpha, c, &vec![0; alpha.len()])
    }

    pub fn monomial<C: Into<BigInt>>(alpha: &Alphabet, c: C, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), alpha.len(), "exponent vector length");
        let c = c.into();
        if c.is_zero() {
            return Self::zero(alpha);
        }
        LaurentPoly { alpha: alpha.clone(), terms: vec![(exps.into(), c)] }
    }

    /// The variable `name` raised to the power `e`.
    pub fn var_pow(alpha: &Alphabet, name: &str, e: i32) -> Self {
        let mut exps = vec![0; alpha.len()];
        exps[alpha.idx(name)] = e;
        Self::monomial(alpha, 1, &exps)
    }

    pub fn var(alpha: &Alphabet, name: &str) -> Self {
        Self::var_pow(alpha, name, 1)
    }

    /// Builds a polynomial from unsorted, possibly repeated terms.
    pub fn from_terms<I>(alpha: &Alphabet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut acc: HashMap<Exps, BigInt> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), alpha.len(), "exponent vector length");
            *acc.entry(e.into()).or_default() += c;
        }
        Self::from_map(alpha, acc)
    }

    pub(crate) fn from_map(alpha: &Alphabet, acc: HashMap<Exps, BigInt>) -> Self {
        let mut terms: Vec<(Exps, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| term_order(&a.0, &b.0));
        LaurentPoly { alpha: alpha.clone(), terms }
    }

    /// Trusts the caller that `terms` is sorted, duplicate free and nonzero.
    pub(crate) fn from_sorted(alpha: &Alphabet, terms: Vec<(Exps, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| term_order(&w[0].0, &w[1].0) == Ordering::Less));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        LaurentPoly { alpha: alpha.clone(), terms }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alpha
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`LaurentPoly::is_zero`]: no terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms
            .binary_search_by(|t| term_order(&t.0, exps))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.alpha.len()])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alpha == other.alpha {
            Ok(())
        } else {
            Err(Error::Alphabet(format!("{:?} vs {:?}", self.alpha, other.alpha)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match term_order(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        LaurentPoly::from_sorted(&self.alpha, out)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.alpha);
        }
        if other.is_monomial() {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.is_monomial() {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let k = self.alpha.len();
        // products collide heavily, so size for the inputs rather than their product
        let cap = (small.len() * big.len()).min(4 * (small.len() + big.len()));
        let mut acc: HashMap<Exps, BigInt> = HashMap::with_capacity(cap);
        let mut buf = vec![0i32; k];
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                for t in 0..k {
                    buf[t] = ea[t] + eb[t];
                }
                let prod = ca * cb;
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(buf.clone().into_boxed_slice(), prod);
                    }
                }
            }
        }
        Self::from_map(&self.alpha, acc)
    }

    /// Multiplies by the single term `c * x^exps`; the order of terms is preserved.
    pub fn mul_term(&self, exps: &[i32], c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alpha);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, d)| {
                let ne: Exps = e.iter().zip(exps).map(|(a, b)| a + b).collect();
                (ne, d * c)
            })
            .collect();
        LaurentPoly::from_sorted(&self.alpha, terms)
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn shift(&self, exps: &[i32]) -> Self {
        self.mul_term(exps, &BigInt::one())
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        self.mul_term(&vec![0; self.alpha.len()], &c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.alpha);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Power with a possibly negative exponent; negative powers need an
    /// invertible monomial (coefficient `1` or `-1`).
    pub fn pow_i(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        Ok(self.inverse_monomial()?.pow((-e) as u32))
    }

    /// Inverse of a unit of the Laurent ring, i.e. `±x^a`.
    pub fn inverse_monomial(&self) -> Result<Self> {
        if !self.is_monomial() || !self.terms[0].1.abs().is_one() {
            return Err(Error::Divisibility(format!("{self} is not a unit")));
        }
        let (e, c) = &self.terms[0];
        let ne: Vec<i32> = e.iter().map(|x| -x).collect();
        Ok(Self::monomial(&self.alpha, c.clone(), &ne))
    }

    /// Componentwise minimum of all exponent vectors (zero for the zero polynomial).
    pub fn min_exps(&self) -> Vec<i32> {
        let mut m = vec![0; self.alpha.len()];
        for (i, (e, _)) in self.terms.iter().enumerate() {
            for t in 0..m.len() {
                m[t] = if i == 0 { e[t] } else { m[t].min(e[t]) };
            }
        }
        m
    }

    /// Componentwise maximum of all exponent vectors.
    pub fn max_exps(&self) -> Vec<i32> {
        let mut m = vec![0; self.alpha.len()];
        for (i, (e, _)) in self.terms.iter().enumerate() {
            for t in 0..m.len() {
                m[t] = if i == 0 { e[t] } else { m[t].max(e[t]) };
            }
        }
        m
    }

    /// Renames variables: the exponent of variable `i` moves to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let acc = self.terms.iter().map(|(e, c)| {
            let mut ne = e.to_vec();
            for (i, &p) in perm.iter().enumerate() {
                ne[p] = e[i];
            }
            (ne, c.clone())
        });
        Self::from_terms(&self.alpha, acc)
    }

    /// Replaces the variable with index `var` by `value`. Negative powers of
    /// the variable need `value` to be a unit.
    pub fn substitute(&self, var: usize, value: &LaurentPoly) -> Result<Self> {
        self.check(value)?;
        let mut groups: HashMap<i32, Vec<(Vec<i32>, BigInt)>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.to_vec();
            let k = rest[var];
            rest[var] = 0;
            groups.entry(k).or_default().push((rest, c.clone()));
        }
        let mut keys: Vec<i32> = groups.keys().copied().collect();
        keys.sort_unstable();
        let mut total = Self::zero(&self.alpha);
        for k in keys {
            let part = Self::from_terms(&self.alpha, groups.remove(&k).unwrap());
            total = &total + &(&part * &value.pow_i(k)?);
        }
        Ok(total)
    }

    /// Substitutes several variables at once (simultaneously).
    pub fn substitute_all(&self, subs: &[(usize, LaurentPoly)]) -> Result<Self> {
        let mut total = Self::zero(&self.alpha);
        let mut cache: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.to_vec();
            let mut factor = Self::one(&self.alpha);
            for (var, val) in subs {
                self.check(val)?;
                let k = rest[*var];
                rest[*var] = 0;
                if k != 0 {
                    let p = match cache.get(&(*var, k)) {
                        Some(p) => p.clone(),
                        None => {
                            let p = val.pow_i(k)?;
                            cache.insert((*var, k), p.clone());
                            p
                        }
                    };
                    factor = &factor * &p;
                }
            }
            total = &total + &factor.mul_term(&rest, c);
        }
        Ok(total)
    }

    /// Evaluates at integer values for every variable. Negative powers of a
    /// variable set to zero are rejected, as is a non-integral result.
    pub fn eval(&self, values: &[BigInt]) -> Result<BigInt> {
        if values.len() != self.alpha.len() {
            return Err(Error::Evaluation(format!(
                "expected {} values, got {}",
                self.alpha.len(),
                values.len()
            )));
        }
        let lo = self.min_exps();
        for (t, &m) in lo.iter().enumerate() {
            if m < 0 && values[t].is_zero() {
                return Err(Error::Evaluation(format!(
                    "variable {} set to 0 but occurs with exponent {m}",
                    self.alpha.names()[t]
                )));
            }
        }
        // clear denominators: evaluate x^(-lo) * self, then divide by prod v^(-lo)
        let mut num = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for t in 0..e.len() {
                let k = e[t] - lo[t].min(0);
                if k > 0 {
                    term *= values[t].pow(k as u32);
                }
            }
            num += term;
        }
        let mut den = BigInt::one();
        for t in 0..lo.len() {
            if lo[t] < 0 {
                den *= values[t].pow((-lo[t]) as u32);
            }
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Evaluation(format!("value {num}/{den} is not an integer")));
        }
        Ok(q)
    }

    /// Evaluates from `name=value` pairs; every variable must be assigned.
    pub fn eval_named(&self, assignment: &HashMap<String, BigInt>) -> Result<BigInt> {
        let vals = self
            .alpha
            .names()
            .iter()
            .map(|n| {
                assignment
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::Evaluation(format!("no value for {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.eval(&vals)
    }

    /// Moves the polynomial into another alphabet, matching variables by name.
    pub fn embed(&self, target: &Alphabet) -> Result<Self> {
        let map: Vec<Option<usize>> = self.alpha.names().iter().map(|n| target.index_of(n)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] = x,
                    None => {
                        return Err(Error::Alphabet(format!(
                            "{} not in {:?}",
                            self.alpha.names()[i],
                            target
                        )))
                    }
                }
            }
            terms.push((ne, c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: Fn(&BigInt) -> BigInt>(&self, f: F) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly::from_sorted(&self.alpha, terms)
    }

    /// Sum of coefficients, i.e. the value at all variables equal to one.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.iter().map(|t| &t.1).sum()
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a LaurentPoly>>(alpha: &Alphabet, items: I) -> Self {
        let mut acc: HashMap<Exps, BigInt> = HashMap::new();
        for p in items {
            assert_eq!(&p.alpha, alpha, "alphabet mismatch in sum");
            for (e, c) in &p.terms {
                *acc.entry(e.clone()).or_default() += c;
            }
        }
        Self::from_map(alpha, acc)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(alpha: &Alphabet, items: I) -> Self {
        items.into_iter().fold(Self::one(alpha), |acc, p| &acc * p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (t, &x) in e.iter().enumerate() {
                let name = &self.alpha.names()[t];
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$imp(rhs).expect("alphabet mismatch")
            }
        }
        impl std::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$imp(&rhs).expect("alphabet mismatch")
            }
        }
        impl std::ops::$trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$imp(rhs).expect("alphabet mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Shorthand for building polynomials over the standard alphabet in tests
/// and formulas.
pub struct Std {
    pub alpha: Alphabet,
    pub n: usize,
}

impl Std {
    pub fn new(n: usize) -> Self {
        Std { alpha: Alphabet::standard(n), n }
    }
    pub fn u(&self) -> LaurentPoly {
        LaurentPoly::var(&self.alpha, "u")
    }
    pub fn v(&self) -> LaurentPoly {
        LaurentPoly::var(&self.alpha, "v")
    }
    pub fn w(&self) -> LaurentPoly {
        LaurentPoly::var(&self.alpha, "w")
    }
    /// `X_i^e`, 1-based.
    pub fn x(&self, i: usize, e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(&self.alpha, &format!("X{i}"), e)
    }
    pub fn c(&self, c: i64) -> LaurentPoly {
        LaurentPoly::constant(&self.alpha, c)
    }
    pub fn one(&self) -> LaurentPoly {
        LaurentPoly::one(&self.alpha)
    }
    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(&self.alpha)
    }
    /// `u X_i + v X_i^{-1} + w`, the weight of a free entry in row `i`.
    pub fn free(&self, i: usize) -> LaurentPoly {
        &(&(&self.u() * &self.x(i, 1)) + &(&self.v() * &self.x(i, -1))) + &self.w()
    }
    /// `u X_i + v X_i^{-1}`.
    pub fn uv_pair(&self, i: usize) -> LaurentPoly {
        &(&self.u() * &self.x(i, 1)) + &(&self.v() * &self.x(i, -1))
    }
    /// `prod_i X_i^e`.
    pub fn x_all(&self, e: i32) -> LaurentPoly {
        let mut exps = vec![e; self.alpha.len()];
        exps[..3].fill(0);
        LaurentPoly::monomial(&self.alpha, 1, &exps)
    }
    /// Index of `X_i` in the alphabet.
    pub fn xi(&self, i: usize) -> usize {
        2 + i
    }
    /// `u = v = 1, w = -1, X_i = 1`, the specialization that counts
    /// undecorated objects.
    pub fn count_point(&self) -> Vec<BigInt> {
        let mut vals = vec![BigInt::one(); self.alpha.len()];
        vals[2] = -BigInt::one();
        vals
    }
}

/// `vX_2(f1)(f2) + X_1X_2 f1 f2^2 + uX_1^2X_2 f1 f2` with `f_i = uX_i + vX_i^{-1} + w`,
/// the generating function for bottom row `(0, 2)`.
pub fn case2() -> LaurentPoly {
    let s = Std::new(2);
    let (f1, f2) = (s.free(1), s.free(2));
    let a = &(&s.v() * &s.x(2, 1)) * &(&f1 * &f2);
    let b = &(&s.x(1, 1) * &s.x(2, 1)) * &(&f1 * &(&f2 * &f2));
    let c = &(&(&s.u() * &s.x(1, 2)) * &s.x(2, 1)) * &(&f1 * &f2);
    &(&a + &b) + &c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_cancellation() {
        let s = Std::new(1);
        let p = &(&s.x(1, 1) + &s.one()) + &s.c(-1);
        assert_eq!(p, s.x(1, 1));
    }

    #[test]
    fn difference_of_squares() {
        let s = Std::new(1);
        let a = &(&s.u() * &s.x(1, 1)) - &(&s.v() * &s.x(1, -1));
        let b = s.uv_pair(1);
        let want = &(&s.u().pow(2) * &s.x(1, 2)) - &(&s.v().pow(2) * &s.x(1, -2));
        assert_eq!(&a * &b, want);
    }

    #[test]
    fn square_of_free_factor() {
        let s = Std::new(1);
        let sq = s.free(1).pow(2);
        let mut coeffs: Vec<i64> = sq.terms().iter().map(|t| i64::try_from(&t.1).unwrap()).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = LaurentPoly::one(&Alphabet::standard(1));
        let b = LaurentPoly::one(&Alphabet::standard(2));
        assert!(matches!(a.try_add(&b), Err(Error::Alphabet(_))));
    }

    #[test]
    fn case2_counts() {
        let p = case2();
        let s = Std::new(2);
        assert_eq!(p.coeff_sum(), BigInt::from(45));
        assert_eq!(p.eval(&s.count_point()).unwrap(), BigInt::from(3));
    }

    #[test]
    fn eval_rejects_zero_on_negative_power() {
        let s = Std::new(1);
        let mut vals = s.count_point();
        vals[3] = BigInt::zero();
        assert!(s.free(1).eval(&vals).is_err());
    }

    #[test]
    fn substitute_unit_and_composite() {
        let s = Std::new(2);
        let p = &s.x(1, 2) + &s.x(2, -1);
        let q = p.substitute(s.xi(1), &(&s.u() + &s.v())).unwrap();
        let want = &(&s.u() + &s.v()).pow(2) + &s.x(2, -1);
        assert_eq!(q, want);
        assert!(p.substitute(s.xi(2), &(&s.u() + &s.v())).is_err());
    }

    #[test]
    fn display_is_readable() {
        let s = Std::new(1);
        assert_eq!(s.free(1).to_string(), "u*X1 + w + v*X1^-1");
    }
}
