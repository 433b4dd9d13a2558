//! Instance checks of the algebraic lemmas behind the determinant formulas.
//!
//! Every case builds both sides independently as exact Laurent polynomials.
//! Identities with non-monomial denominators are compared after multiplying
//! both sides by the product of those denominators.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{DetMethod, PolyMatrix};
use crate::poly::{elementary, exact_div, homogeneous, Alphabet, LaurentPoly, PolyJson, Std};
use crate::util::{binom, permutations_with_sign};

pub const CATALOGUE: [&str; 14] = [
    "lemma_general",
    "lemma_det",
    "lemma_basis",
    "lemma_prefactor",
    "eh_lemma",
    "jt3lem_1",
    "jt3lem_2",
    "cor_1",
    "cor_2",
    "cor_3",
    "id_sum1",
    "id_sum2",
    "neg_h",
    "hspecial",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub name: String,
    pub params: Vec<i64>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Serialize)]
struct CaseJson<'a> {
    name: &'a str,
    params: &'a [i64],
    lhs: PolyJson,
    rhs: PolyJson,
    status: &'static str,
}

impl IdentityCase {
    fn new(name: &str, params: &[i64], lhs: LaurentPoly, rhs: LaurentPoly) -> Self {
        IdentityCase { name: name.into(), params: params.to_vec(), lhs, rhs }
    }

    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self) -> String {
        let j = CaseJson {
            name: &self.name,
            params: &self.params,
            lhs: self.lhs.to_json_value(),
            rhs: self.rhs.to_json_value(),
            status: self.status(),
        };
        serde_json::to_string(&j).expect("case serializes")
    }
}

fn arity(name: &str) -> Option<usize> {
    Some(match name {
        "lemma_general" | "lemma_basis" | "jt3lem_1" | "jt3lem_2" | "cor_1" | "cor_2" | "cor_3" => 1,
        "lemma_det" | "lemma_prefactor" | "id_sum1" | "id_sum2" | "neg_h" | "hspecial" => 2,
        "eh_lemma" => 3,
        _ => return None,
    })
}

fn in_range(name: &str, p: &[i64]) -> bool {
    match name {
        "lemma_general" => (1..=4).contains(&p[0]),
        "lemma_det" => (1..=3).contains(&p[0]) && p[1] >= 0,
        "lemma_basis" => (0..=14).contains(&p[0]),
        "lemma_prefactor" => (1..=4).contains(&p[0]) && (0..p[0]).contains(&p[1]),
        "eh_lemma" => (1..=3).contains(&p[0]) && p[0] + p[1] >= 0 && p[1] <= 6 && (1..=p[0]).contains(&p[2]),
        "jt3lem_1" | "jt3lem_2" | "cor_1" | "cor_2" | "cor_3" => (1..=3).contains(&p[0]),
        "id_sum1" => (1..=40).contains(&p[0]) && (1..=20).contains(&p[1]),
        "id_sum2" => (1..=20).contains(&p[0]) && (1..=20).contains(&p[1]),
        "neg_h" => (1..=4).contains(&p[0]) && p[1].abs() <= 8,
        "hspecial" => (1..=6).contains(&p[0]) && (0..=8).contains(&p[1]),
        _ => false,
    }
}

/// Checks one instance. Parameters: `lemma_det` takes `(n, seed)`,
/// `lemma_prefactor` `(n, m)`, `eh_lemma` `(n, m, i)`, the integer sums
/// `(p, j)` and `(i, j)`, `neg_h` and `hspecial` `(n, k)`; the rest take `n`
/// (or `l` for `lemma_basis`).
pub fn verify_identity(name: &str, params: &[i64]) -> Result<IdentityCase> {
    let want = arity(name).ok_or_else(|| Error::Parse(format!("unknown identity '{name}'")))?;
    if params.len() != want {
        return Err(Error::Parse(format!("{name} takes {want} parameter(s), got {}", params.len())));
    }
    if !in_range(name, params) {
        return Err(Error::Unsupported(format!("{name}{params:?} is outside the supported range")));
    }
    let p = params;
    let n = p[0] as usize;
    let (lhs, rhs) = match name {
        "lemma_general" => lemma_general(n),
        "lemma_det" => lemma_det(n, p[1] as u64)?,
        "lemma_basis" => lemma_basis(p[0] as u32)?,
        "lemma_prefactor" => lemma_prefactor(n, p[1] as u32)?,
        "eh_lemma" => eh_lemma(n, p[1], p[2] as usize)?,
        "jt3lem_1" => jt3lem(n, true)?,
        "jt3lem_2" => jt3lem(n, false)?,
        "cor_1" => cor_1(n)?,
        "cor_2" => cor_2(n)?,
        "cor_3" => cor_3(n)?,
        "id_sum1" => integer_pair(sum1_lhs(p[0], p[1]), binom(p[0] + p[1] - 1, p[0] - p[1])),
        "id_sum2" => integer_pair(sum2_lhs(p[0], p[1]), binom(p[0] + p[1] - 1, 2 * p[1] - p[0] - 1)),
        "neg_h" => neg_h(n, p[1])?,
        "hspecial" => hspecial(n, p[1])?,
        _ => unreachable!("arity covers every name"),
    };
    Ok(IdentityCase::new(name, params, lhs, rhs))
}

/// Every instance in the standard ranges, in catalogue order.
pub fn catalogue_cases() -> Vec<(&'static str, Vec<i64>)> {
    let mut out: Vec<(&'static str, Vec<i64>)> = Vec::new();
    for n in 1..=4 {
        out.push(("lemma_general", vec![n]));
    }
    for seed in 0..20 {
        out.push(("lemma_det", vec![seed % 3 + 1, seed]));
    }
    for l in 0..=10 {
        out.push(("lemma_basis", vec![l]));
    }
    for n in 1..=4 {
        for m in 0..n {
            out.push(("lemma_prefactor", vec![n, m]));
        }
    }
    for n in 1..=3 {
        for m in -n..=4 {
            for i in 1..=n {
                out.push(("eh_lemma", vec![n, m, i]));
            }
        }
    }
    for name in ["jt3lem_1", "jt3lem_2", "cor_1", "cor_2", "cor_3"] {
        for n in 1..=3 {
            out.push((name, vec![n]));
        }
    }
    for j in 1..=6 {
        for p in 1..=12 {
            out.push(("id_sum1", vec![p, j]));
        }
    }
    for i in 1..=6 {
        for j in 1..=6 {
            out.push(("id_sum2", vec![i, j]));
        }
    }
    for n in 1..=4 {
        for k in -6..=6 {
            out.push(("neg_h", vec![n, k]));
        }
    }
    for n in 1..=4 {
        for k in 0..=6 {
            out.push(("hspecial", vec![n, k]));
        }
    }
    out
}

/// Runs the standard instances, optionally restricted to one identity. The
/// result is in catalogue order.
pub fn verify_catalogue(only: Option<&str>) -> Result<Vec<IdentityCase>> {
    if let Some(name) = only {
        if arity(name).is_none() {
            return Err(Error::Parse(format!("unknown identity '{name}'")));
        }
    }
    let cases: Vec<_> = catalogue_cases().into_iter().filter(|(n, _)| only.is_none_or(|o| o == *n)).collect();
    cases.into_par_iter().map(|(name, p)| verify_identity(name, &p)).collect()
}

fn integer_pair(l: BigInt, r: BigInt) -> (LaurentPoly, LaurentPoly) {
    let alpha = Alphabet::new(Vec::<String>::new());
    (LaurentPoly::constant(&alpha, l), LaurentPoly::constant(&alpha, r))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn sum1_lhs(p: i64, j: i64) -> BigInt {
    let mut acc = BigInt::from(0);
    let mut q = if p % 2 == 0 { 2 } else { 1 };
    while q <= p {
        if q >= j {
            let t = (p - q) / 2;
            acc += BigInt::from(sign(t)) * (BigInt::from(1) << (q - j) as usize) * binom((p + q) / 2 - 1, t) * binom(q - 1, j - 1);
        }
        q += 2;
    }
    acc
}

pub fn sum2_lhs(i: i64, j: i64) -> BigInt {
    (1..=2 * i).map(|p| BigInt::from(sign(2 * i - p)) * binom(i, 2 * i - p) * binom(p + j - 1, p - j)).sum()
}

fn unit(alpha: &Alphabet, k: usize, e: i32) -> LaurentPoly {
    let mut v = vec![0; alpha.len()];
    v[k] = e;
    LaurentPoly::monomial(alpha, 1, &v)
}

fn det(n: usize, alpha: &Alphabet, f: impl Fn(usize, usize) -> Result<LaurentPoly> + Sync + Send) -> Result<LaurentPoly> {
    Ok(PolyMatrix::from_fn(n, alpha, f)?.det(DetMethod::Auto))
}

fn lemma_general(n: usize) -> (LaurentPoly, LaurentPoly) {
    let names: Vec<String> = (1..=n).map(|i| format!("Y{i}")).chain((1..=n).map(|i| format!("Z{i}"))).collect();
    let alpha = Alphabet::new(names);
    let y = |i: usize| unit(&alpha, i, 1);
    let z = |i: usize| unit(&alpha, n + i, 1);
    let lhs = det(n, &alpha, |i, j| Ok(&y(i).pow(j as u32 + 1) - &z(i).pow(j as u32 + 1))).expect("square");
    let mut rhs = LaurentPoly::zero(&alpha);
    for (sigma, sg) in permutations_with_sign(n) {
        let mut prod = LaurentPoly::one(&alpha);
        for j in 0..n {
            for i in 0..=j {
                prod = &prod * &(&y(sigma[j]) - &z(sigma[i]));
            }
        }
        rhs = &rhs + &prod.scale(sg);
    }
    (lhs, rhs)
}

/// Random polynomials `f_1..f_n` in one variable with small integer
/// coefficients, evaluated at `Y_i` (left side over the Vandermonde, cleared)
/// and through complete homogeneous functions (right side).
fn lemma_det(n: usize, seed: u64) -> Result<(LaurentPoly, LaurentPoly)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let coeffs: Vec<Vec<i64>> = (0..n).map(|_| (0..=n + 4).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    const LOW: i64 = -2;
    let alpha = Alphabet::new((1..=n).map(|i| format!("Y{i}")));
    let y = |i: usize| unit(&alpha, i, 1);
    let lhs = det(n, &alpha, |i, j| {
        Ok(LaurentPoly::sum(&alpha, coeffs[j].iter().enumerate().map(|(k, &c)| y(i).pow_i(k as i32 + LOW as i32).unwrap().scale(c)).collect::<Vec<_>>().iter()))
    })?;
    let vars: Vec<usize> = (0..n).collect();
    let vdm = crate::poly::vandermonde(&alpha, &vars);
    let ys: Vec<LaurentPoly> = (0..n).map(y).collect();
    let bracket = det(n, &alpha, |i, j| {
        let mut acc = LaurentPoly::zero(&alpha);
        for (k, &c) in coeffs[j].iter().enumerate() {
            let h = homogeneous(k as i64 + LOW - i as i64, &ys[..=i], &alpha)?;
            acc = &acc + &h.scale(c);
        }
        Ok(acc)
    })?;
    Ok((lhs, &vdm * &bracket))
}

fn lemma_basis(l: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    let s = Std::new(1);
    let ux = &s.u() * &s.x(1, 1);
    let vx = &s.v() * &s.x(1, -1);
    let lhs = exact_div(&(&ux.pow(l) - &vx.pow(l)), &(&ux - &vx))?;
    let minus_uv = -(&s.u() * &s.v());
    let y = s.uv_pair(1);
    let mut rhs = s.zero();
    let mut r = 0;
    while 2 * r < l {
        let c = binom((l - r - 1) as i64, r as i64);
        rhs = rhs + minus_uv.pow(r).scale(c) * y.pow(l - 2 * r - 1);
        r += 1;
    }
    Ok((lhs, rhs))
}

/// `(X_j - X_l)(u - v X_l^{-1} X_j^{-1})`.
fn pair_factor(s: &Std, j: usize, l: usize) -> LaurentPoly {
    let a = &s.x(j, 1) - &s.x(l, 1);
    let b = &s.u() - &(&s.v() * &(&s.x(l, -1) * &s.x(j, -1)));
    &a * &b
}

/// Left side summed over a common denominator and divided out exactly; the
/// division fails unless the sum is a Laurent polynomial.
fn lemma_prefactor(n: usize, m: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    let s = Std::new(n);
    let mut common = s.one();
    for j in 1..=n {
        for i in 1..j {
            common = &common * &pair_factor(&s, j, i);
        }
    }
    let mut num = s.zero();
    for l in 1..=n {
        let mut den = s.one();
        for j in (1..=n).filter(|&j| j != l) {
            den = &den * &pair_factor(&s, j, l);
        }
        let top = (-s.uv_pair(l)).pow(m);
        num = num + top * exact_div(&common, &den)?;
    }
    let lhs = exact_div(&num, &common)?;
    let rhs = if m as usize + 1 == n { s.one() } else { s.zero() };
    Ok((lhs, rhs))
}

/// `uX_a, vX_a^{-1}` for `a` in `from..=to`, interleaved.
fn uv_args(s: &Std, from: usize, to: usize) -> Vec<LaurentPoly> {
    (from..=to).flat_map(|a| [&s.u() * &s.x(a, 1), &s.v() * &s.x(a, -1)]).collect()
}

/// Both sides doubled to absorb the `1/(1 + [l = 1])` factor.
fn eh_lemma(n: usize, m: i64, i: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    let s = Std::new(n);
    let all = uv_args(&s, 1, n);
    let tail = uv_args(&s, n - i + 2, n);
    let uv = &s.u() * &s.v();
    let mut lhs = s.zero();
    for l in 1..=n as i64 {
        let e = elementary(i as i64 - l, &tail, &s.alpha);
        if e.is_zero() {
            continue;
        }
        let h1 = homogeneous(m + l - 1, &all, &s.alpha)?;
        let h2 = homogeneous(m - l + 1, &all, &s.alpha)?;
        let bracket = h1 + uv.pow((l - 1) as u32) * h2;
        let weight = if l == 1 { 1 } else { 2 };
        lhs = lhs + (e * bracket).scale(sign(i as i64 + l) * weight);
    }
    let rhs = homogeneous(m + i as i64 - 1, &uv_args(&s, 1, n - i + 1), &s.alpha)?.scale(2);
    Ok((lhs, rhs))
}

struct Jt3 {
    s: Std,
    /// `u^2 X_i^2 + u w X_i` and `v^2 X_i^{-2} + v w X_i^{-1}`, 1-based.
    p: Vec<LaurentPoly>,
    m: Vec<LaurentPoly>,
    /// `h_k` of `uX_1..uX_n, vX_1^{-1}..vX_n^{-1}` for `k` in `lo..=hi`.
    h: HashMap<i64, LaurentPoly>,
}

impl Jt3 {
    fn new(n: usize) -> Result<Self> {
        let s = Std::new(n);
        let mut p = vec![s.zero()];
        let mut m = vec![s.zero()];
        for i in 1..=n {
            let ux = &s.u() * &s.x(i, 1);
            let vx = &s.v() * &s.x(i, -1);
            p.push(&ux.pow(2) + &(&ux * &s.w()));
            m.push(&vx.pow(2) + &(&vx * &s.w()));
        }
        let args: Vec<LaurentPoly> =
            (1..=n).map(|a| &s.u() * &s.x(a, 1)).chain((1..=n).map(|a| &s.v() * &s.x(a, -1))).collect();
        let hi = 3 * n as i64 + 1;
        let mut h = HashMap::new();
        for k in -(4 * n as i64)..=hi {
            h.insert(k, homogeneous(k, &args, &s.alpha)?);
        }
        Ok(Jt3 { s, p, m, h })
    }

    fn h(&self, k: i64) -> &LaurentPoly {
        self.h.get(&k).unwrap_or_else(|| panic!("h_{k} outside the cached range"))
    }

    fn n(&self) -> usize {
        self.p.len() - 1
    }

    /// `det(P_i^{j - shift} + sgn M_i^{j - shift})`.
    fn power_det(&self, plus: bool, shift: u32) -> Result<LaurentPoly> {
        let n = self.n();
        det(n, &self.s.alpha, |i, j| {
            let e = j as u32 + 1 - shift;
            let (a, b) = (self.p[i + 1].pow(e), self.m[i + 1].pow(e));
            Ok(if plus { a + b } else { a - b })
        })
    }

    fn uv_pow(&self, e: i64) -> LaurentPoly {
        let s = &self.s;
        let mut ex = vec![0; s.alpha.len()];
        ex[0] = e as i32;
        ex[1] = e as i32;
        LaurentPoly::monomial(&s.alpha, 1, &ex)
    }

    /// `det_{i,j <= size} sum_{k=j}^{2j} C(j, k-j) w^{2j-k} entry(i, k)` with 1-based `i, j`.
    fn jt_det(&self, size: usize, entry: impl Fn(i64, i64) -> LaurentPoly + Sync + Send) -> Result<LaurentPoly> {
        det(size, &self.s.alpha, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let mut acc = self.s.zero();
            for k in j..=2 * j {
                acc = acc + (self.s.w().pow((2 * j - k) as u32) * entry(i, k)).scale(binom(j, k - j));
            }
            Ok(acc)
        })
    }

    fn first_det(&self) -> Result<LaurentPoly> {
        let n = self.n() as i64;
        self.jt_det(n as usize, |i, k| self.h(k - i + 1) - &(&self.uv_pow(n + 1 - i) * self.h(k + i - 2 * n - 1)))
    }

    fn second_det(&self) -> Result<LaurentPoly> {
        let n = self.n() as i64;
        self.jt_det(n as usize, |i, k| self.h(k + i - n - 1) + &(&self.uv_pow(i - 1) * self.h(k - i - n + 1)))
    }

    fn third_det(&self) -> Result<LaurentPoly> {
        let n = self.n() as i64;
        self.jt_det(n as usize - 1, |i, k| self.h(k - i) - &(&self.uv_pow(n - i) * self.h(k + i - 2 * n)))
    }

    /// `prod_{i<j} (X_j - X_i)(u - v X_i^{-1} X_j^{-1})`.
    fn pair_product(&self) -> LaurentPoly {
        let n = self.n();
        let mut acc = self.s.one();
        for j in 1..=n {
            for i in 1..j {
                acc = &acc * &pair_factor(&self.s, j, i);
            }
        }
        acc
    }
}

/// Both sides of the two-determinant identities, multiplied by the denominator
/// and by 2 where a half appears.
fn jt3lem(n: usize, first: bool) -> Result<(LaurentPoly, LaurentPoly)> {
    let t = Jt3::new(n)?;
    let s = &t.s;
    let c2 = (n * (n - 1) / 2) as i32;
    let mut ex = vec![0; s.alpha.len()];
    ex[0] = (n * n) as i32 + c2;
    ex[1] = -c2;
    let pre = LaurentPoly::monomial(&s.alpha, if n.is_multiple_of(2) { 1 } else { -1 }, &ex);
    let r = &s.v() * &s.u().pow_i(-1)?;
    let mut den = s.one();
    for j in 1..=n {
        for i in 1..j {
            let a = &s.x(j, 1) - &s.x(i, 1);
            let b = &(&r * &s.x(j, -1)) - &(&r * &s.x(i, -1));
            den = &den * &(&a * &b);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            den = &den * &(&(&r * &s.x(j, -1)) - &s.x(i, 1));
        }
    }
    let minus = t.power_det(false, 0)?;
    if first {
        let lhs = (&t.power_det(true, 0)? * &minus).scale(2);
        let rhs = &(&pre * &den) * &(&t.first_det()? * &t.second_det()?);
        Ok((lhs, rhs))
    } else {
        let lhs = &t.power_det(true, 1)? * &minus;
        let rhs = &(&pre * &den) * &(&t.third_det()? * &t.second_det()?);
        Ok((lhs, rhs))
    }
}

fn cor_1(n: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    let t = Jt3::new(n)?;
    let s = &t.s;
    let mut den = (-t.pair_product()).scale(if (n * (n - 1) / 2).is_multiple_of(2) { -1 } else { 1 });
    for i in 1..=n {
        den = &den * &(&(&s.u() * &s.x(i, 1)) - &(&s.v() * &s.x(i, -1)));
    }
    Ok((t.power_det(false, 0)?.scale(2), &den * &t.second_det()?))
}

fn cor_2(n: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    let t = Jt3::new(n)?;
    Ok((t.power_det(true, 0)?, &t.pair_product() * &t.first_det()?))
}

fn cor_3(n: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    let t = Jt3::new(n)?;
    Ok((t.power_det(true, 1)?, (&t.pair_product() * &t.third_det()?).scale(2)))
}

/// Left side from the defining sum over compositions (all parts negative for
/// `k < 0`), right side from the inversion law with the extended `h`.
fn neg_h(n: usize, k: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let alpha = Alphabet::new((1..=n).map(|i| format!("X{i}")));
    let mut lhs = LaurentPoly::zero(&alpha);
    let mut parts = vec![0i32; n];
    fn compositions(pos: usize, left: i64, neg: bool, parts: &mut Vec<i32>, alpha: &Alphabet, acc: &mut LaurentPoly) {
        let n = parts.len();
        if pos + 1 == n {
            if (neg && left < 0) || (!neg && left >= 0) {
                parts[pos] = left as i32;
                *acc = &*acc + &LaurentPoly::monomial(alpha, 1, parts);
            }
            return;
        }
        let range: Vec<i64> = if neg { (left + 1 - (n - pos - 1) as i64..=-1).collect() } else { (0..=left).collect() };
        for x in range {
            parts[pos] = x as i32;
            compositions(pos + 1, left - x, neg, parts, alpha, acc);
        }
    }
    if k >= 0 {
        compositions(0, k, false, &mut parts, &alpha, &mut lhs);
    } else if k <= -(n as i64) {
        compositions(0, k, true, &mut parts, &alpha, &mut lhs);
        lhs = lhs.scale(sign(n as i64 + 1));
    }
    let inv: Vec<LaurentPoly> = (0..n).map(|i| unit(&alpha, i, -1)).collect();
    let prod_inv = LaurentPoly::product(&alpha, inv.iter());
    let rhs = (&prod_inv * &homogeneous(-k - n as i64, &inv, &alpha)?).scale(sign(n as i64 + 1));
    Ok((lhs, rhs))
}

fn hspecial(n: usize, k: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let alpha = Alphabet::new(["X"]);
    let x = unit(&alpha, 0, 1);
    let lhs = homogeneous(k, &vec![x.clone(); n], &alpha)?;
    let rhs = x.pow(k as u32).scale(binom(n as i64 + k - 1, k));
    Ok((lhs, rhs))
}
