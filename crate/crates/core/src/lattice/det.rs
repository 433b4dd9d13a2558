//! Determinant formulas for the path models.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Interpretation;
use crate::error::{Error, Result};
use crate::matrix::{DetMethod, PolyMatrix};
use crate::poly::{elementary, h_table, homogeneous, Alphabet, LaurentPoly, Std};
use crate::util::{binom, halve, int_det, multinomial, neg_one_pow, unrefined_matrix};

/// The values of `u, v, w, X_i, X_i^{-1}` that formulas are built from:
/// either the variables themselves or integer constants.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub alpha: Alphabet,
    pub n: usize,
    pub u: LaurentPoly,
    pub v: LaurentPoly,
    pub w: LaurentPoly,
    x: Vec<LaurentPoly>,
    xinv: Vec<LaurentPoly>,
}

impl Ctx {
    pub fn symbolic(n: usize) -> Self {
        let s = Std::new(n);
        Ctx {
            alpha: s.alpha.clone(),
            n,
            u: s.u(),
            v: s.v(),
            w: s.w(),
            x: (1..=n).map(|i| s.x(i, 1)).collect(),
            xinv: (1..=n).map(|i| s.x(i, -1)).collect(),
        }
    }

    /// Integer specialization in the order `u, v, w, X_1..X_n`; every `X_i`
    /// must be a unit.
    pub fn numeric(n: usize, values: &[BigInt]) -> Result<Self> {
        if values.len() != n + 3 {
            return Err(Error::Evaluation(format!("{} values for {} variables", values.len(), n + 3)));
        }
        let alpha = Alphabet::new(Vec::<String>::new());
        let c = |v: &BigInt| LaurentPoly::constant(&alpha, v.clone());
        let mut xinv = Vec::with_capacity(n);
        for xv in &values[3..] {
            if xv.is_one() || *xv == -BigInt::one() {
                xinv.push(c(xv));
            } else {
                return Err(Error::Evaluation(format!("X = {xv} has no integer inverse")));
            }
        }
        Ok(Ctx {
            u: c(&values[0]),
            v: c(&values[1]),
            w: c(&values[2]),
            x: values[3..].iter().map(c).collect(),
            xinv,
            alpha,
            n,
        })
    }

    pub fn x(&self, i: usize) -> &LaurentPoly {
        &self.x[i - 1]
    }

    pub fn xinv(&self, i: usize) -> &LaurentPoly {
        &self.xinv[i - 1]
    }

    pub fn c(&self, c: impl Into<BigInt>) -> LaurentPoly {
        LaurentPoly::constant(&self.alpha, c)
    }

    fn muv(&self) -> LaurentPoly {
        -(&self.u * &self.v)
    }

    fn ux(&self, i: usize) -> LaurentPoly {
        &self.u * self.x(i)
    }

    fn vxinv(&self, i: usize) -> LaurentPoly {
        &self.v * self.xinv(i)
    }

    /// `prod X_i^{n-1}`.
    pub fn overall(&self) -> LaurentPoly {
        let mut acc = self.c(1);
        for i in 1..=self.n {
            acc = &acc * &self.x(i).pow(self.n as u32 - 1);
        }
        acc
    }
}

fn pow_of(p: &LaurentPoly, e: i64) -> LaurentPoly {
    p.pow(e as u32)
}

/// `c_{t,j}` in closed form.
pub fn c_tj(t: i64, j: i64, ctx: &Ctx) -> LaurentPoly {
    let mut acc = ctx.c(0);
    let mw = -&ctx.w;
    for r in 0..=j.max(0) {
        let a = 2 * j - 2 * r - t;
        let m = multinomial(j - r - 1, &[r, a, t - j - 1]);
        if m.is_zero() {
            continue;
        }
        let term = (&pow_of(&ctx.muv(), r) * &pow_of(&mw, a)).scale(m);
        acc = &acc + &term;
    }
    acc
}

/// `c_{t,j}` as the weighted count of paths from `(0,0)` to `(t-2, j-1)` with
/// steps `(1,1)`, `(2,2)`, `(2,1)` of weights `-w`, `-uv`, `1`.
pub fn c_tj_paths(t: i64, j: i64, ctx: &Ctx) -> LaurentPoly {
    fn go(x: i64, y: i64, tx: i64, ty: i64, wt: &LaurentPoly, steps: &[(i64, i64, LaurentPoly)], acc: &mut LaurentPoly) {
        if (x, y) == (tx, ty) {
            *acc = &*acc + wt;
            return;
        }
        for (dx, dy, sw) in steps {
            if x + dx <= tx && y + dy <= ty {
                go(x + dx, y + dy, tx, ty, &(wt * sw), steps, acc);
            }
        }
    }
    let steps = [(1, 1, -&ctx.w), (2, 2, ctx.muv()), (2, 1, ctx.c(1))];
    let mut acc = ctx.c(0);
    if t - 2 >= 0 && j > 0 {
        go(0, 0, t - 2, j - 1, &ctx.c(1), &steps, &mut acc);
    }
    acc
}

/// Single path generating function of the first model, from `(-i, i)` to
/// `(j-1, 2-j)`, assembled from its three regions.
pub fn a_ij(i: i64, j: i64, ctx: &Ctx) -> Result<LaurentPoly> {
    let args: Vec<LaurentPoly> = (1..=j as usize).map(|d| &ctx.ux(d) + &ctx.vxinv(d)).collect();
    let h = h_table((2 * i - j).max(0) as usize, &args, &ctx.alpha);
    let mut acc = ctx.c(0);
    for p in i..=2 * i {
        let outer = pow_of(&ctx.w, 2 * i - p).scale(binom(i, 2 * i - p));
        let mut inner = ctx.c(0);
        let mut q = p;
        while q >= 1 {
            if q >= j {
                let r = (p - q) / 2;
                let coef = binom((p + q) / 2 - 1, r);
                let t = &pow_of(&ctx.muv(), r).scale(coef) * &h[(q - j) as usize];
                inner = &inner + &t;
            }
            q -= 2;
        }
        acc = &acc + &(&outer * &inner);
    }
    Ok(acc)
}

fn h_over(k: i64, args: &[LaurentPoly], ctx: &Ctx) -> Result<LaurentPoly> {
    homogeneous(k, args, &ctx.alpha)
}

/// The matrix whose determinant gives the model's generating function, up to
/// the prefactor applied in [`det_gf`].
pub fn det_matrix(kind: Interpretation, n: usize, ctx: &Ctx) -> Result<PolyMatrix> {
    let ni = n as i64;
    match kind {
        Interpretation::I1 => PolyMatrix::from_fn(n, &ctx.alpha, |i, j| a_ij(i as i64 + 1, j as i64 + 1, ctx)),
        Interpretation::I2 => PolyMatrix::from_fn(n, &ctx.alpha, |i, j| {
            let (i, j) = (i + 1, j as i64 + 1);
            let args: Vec<LaurentPoly> = (1..=i).map(|d| &(&ctx.ux(d) + &ctx.w) + &ctx.vxinv(d)).collect();
            let mut acc = ctx.c(0);
            for t in j + 1..=2 * j {
                let c = c_tj(t, j, ctx);
                if !c.is_zero() {
                    acc = &acc + &(&c * &h_over(t - i as i64, &args, ctx)?);
                }
            }
            Ok(acc)
        }),
        Interpretation::I3 => {
            let args: Vec<LaurentPoly> =
                (1..=n).map(|d| ctx.ux(d)).chain((1..=n).map(|d| ctx.vxinv(d))).collect();
            let uv = &ctx.u * &ctx.v;
            PolyMatrix::from_fn(n, &ctx.alpha, |i, j| {
                let (i, j) = (i as i64 + 1, j as i64 + 1);
                let mut acc = ctx.c(0);
                for k in j..=2 * j {
                    let pre = pow_of(&ctx.w, 2 * j - k).scale(binom(j, k - j));
                    let a = h_over(k + i - ni - 1, &args, ctx)?;
                    let b = &pow_of(&uv, i - 1) * &h_over(k - i - ni + 1, &args, ctx)?;
                    acc = &acc + &(&pre * &(&a + &b));
                }
                Ok(acc)
            })
        }
        Interpretation::Jt4 => PolyMatrix::from_fn(n, &ctx.alpha, |i, j| {
            let (i, j) = (i + 1, j as i64 + 1);
            let args: Vec<LaurentPoly> = (1..=i).flat_map(|d| [ctx.ux(d), ctx.vxinv(d)]).collect();
            let mut acc = ctx.c(0);
            for k in j..=2 * j {
                let pre = pow_of(&ctx.w, 2 * j - k).scale(binom(j, k - j));
                acc = &acc + &(&pre * &h_over(k - i as i64, &args, ctx)?);
            }
            Ok(acc)
        }),
    }
}

/// Determinant route for any model. The third model's determinant equals
/// twice the generating function; its coefficients are halved exactly.
pub fn det_gf(kind: Interpretation, n: usize, ctx: &Ctx) -> Result<LaurentPoly> {
    let d = det_matrix(kind, n, ctx)?.det(DetMethod::Auto);
    let d = &d * &ctx.overall();
    if kind != Interpretation::I3 {
        return Ok(d);
    }
    let sign = neg_one_pow((n * n.saturating_sub(1) / 2) as i64);
    Ok(halve_poly(&d)?.scale(sign))
}

pub fn det_gf_interp1(n: usize) -> Result<LaurentPoly> {
    det_gf(Interpretation::I1, n, &Ctx::symbolic(n))
}

pub fn det_gf_interp2(n: usize) -> Result<LaurentPoly> {
    det_gf(Interpretation::I2, n, &Ctx::symbolic(n))
}

pub fn det_gf_interp3(n: usize) -> Result<LaurentPoly> {
    det_gf(Interpretation::I3, n, &Ctx::symbolic(n))
}

pub fn det_gf_jt4(n: usize) -> Result<LaurentPoly> {
    det_gf(Interpretation::Jt4, n, &Ctx::symbolic(n))
}

/// The determinant route evaluated at integer values `u, v, w, X_1..X_n`,
/// computed entirely over the integers.
pub fn specialized_det(kind: Interpretation, n: usize, values: &[BigInt]) -> Result<BigInt> {
    let ctx = Ctx::numeric(n, values)?;
    let m = det_matrix(kind, n, &ctx)?;
    let rows: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| m.get(i, j).constant_term()).collect()).collect();
    let mut d = int_det(&rows) * ctx.overall().constant_term();
    if kind == Interpretation::I3 {
        d = halve(&d).ok_or_else(|| Error::Consistency(format!("odd value {d} before halving")))?;
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            d = -d;
        }
    }
    Ok(d)
}

/// Twice the matrix `((-1)^{i+j} e_{i-j}(uX_{n-i+2}, vX_{n-i+2}^{-1}, ..., uX_n, vX_n^{-1}) / (1 + [j = 1]))`,
/// so that all entries are polynomials; the undoubled matrix has determinant 1/2.
pub fn onehalf_matrix(n: usize, ctx: &Ctx) -> Result<PolyMatrix> {
    PolyMatrix::from_fn(n, &ctx.alpha, |i, l| {
        let (i, l) = (i + 1, l + 1);
        let e = elementary(i as i64 - l as i64, &tail_args(n, i, ctx), &ctx.alpha);
        let f = if l == 1 { 1 } else { 2 };
        Ok(e.scale(neg_one_pow((i + l) as i64) * f))
    })
}

fn tail_args(n: usize, i: usize, ctx: &Ctx) -> Vec<LaurentPoly> {
    (n + 2 - i..=n).flat_map(|d| [ctx.ux(d), ctx.vxinv(d)]).collect()
}

/// The third model's matrix multiplied from the left by the determinant-1/2
/// matrix, with the rows reversed; the result should be the signless model's
/// matrix. The reversal accounts for the sign `(-1)^{C(n,2)}`.
pub fn jt4_matrix_via_onehalf(n: usize, ctx: &Ctx) -> Result<PolyMatrix> {
    let m3 = det_matrix(Interpretation::I3, n, ctx)?;
    let e2 = onehalf_matrix(n, ctx)?;
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = ctx.c(0);
            for l in 0..n {
                acc = &acc + &(e2.get(i, l) * m3.get(l, j));
            }
            let half = halve_poly(&acc)?;
            row.push(half);
        }
        rows.push(row);
    }
    rows.reverse();
    PolyMatrix::from_entries(n, &ctx.alpha, rows.into_iter().flatten().collect())
}

/// Exact halving of every coefficient.
pub(crate) fn halve_poly(p: &LaurentPoly) -> Result<LaurentPoly> {
    if let Some((_, c)) = p.terms().iter().find(|(_, c)| halve(c).is_none()) {
        return Err(Error::Consistency(format!("odd coefficient {c} before halving")));
    }
    Ok(p.map_coeffs(|c| halve(c).expect("checked even")))
}

/// `det C(i+j-1, 2j-i-1)`.
pub fn unrefined_det(n: usize) -> BigInt {
    int_det(&unrefined_matrix(n))
}

/// Non-intersecting families from `A_i = (2i-1, i-1)` to `E_i = (i-1, 2i-2)`
/// with unit steps left and up, by direct search. Returns the number of
/// families and their signed sum.
pub fn tiling_count(n: usize) -> (u64, i64) {
    type P = (i64, i64);
    // per start: (end index, points) of every walk
    type Walks = [Vec<(usize, Vec<P>)>];
    let ends: Vec<P> = (1..=n as i64).map(|i| (i - 1, 2 * i - 2)).collect();
    let mut paths: Vec<Vec<(usize, Vec<P>)>> = vec![Vec::new(); n];
    for i in 1..=n as i64 {
        let start = (2 * i - 1, i - 1);
        for (j, &e) in ends.iter().enumerate() {
            if e.0 > start.0 || e.1 < start.1 {
                continue;
            }
            let mut all = Vec::new();
            lattice_walks(start, e, &mut vec![start], &mut all);
            paths[(i - 1) as usize].extend(all.into_iter().map(|p| (j, p)));
        }
    }
    fn search(
        level: usize,
        paths: &Walks,
        used: &mut Vec<bool>,
        occ: &mut HashSet<(i64, i64)>,
        sigma: &mut Vec<usize>,
        out: &mut (u64, i64),
    ) {
        if level == paths.len() {
            out.0 += 1;
            out.1 += crate::util::perm_sign(sigma) as i64;
            return;
        }
        for (end, p) in &paths[level] {
            if used[*end] || p.iter().any(|q| occ.contains(q)) {
                continue;
            }
            used[*end] = true;
            occ.extend(p.iter().copied());
            sigma.push(*end);
            search(level + 1, paths, used, occ, sigma, out);
            sigma.pop();
            for q in p {
                occ.remove(q);
            }
            used[*end] = false;
        }
    }
    let mut out = (0, 0);
    search(0, &paths, &mut vec![false; n], &mut HashSet::new(), &mut Vec::new(), &mut out);
    out
}

fn lattice_walks(at: (i64, i64), end: (i64, i64), cur: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
    if at == end {
        out.push(cur.clone());
        return;
    }
    for next in [(at.0 - 1, at.1), (at.0, at.1 + 1)] {
        if next.0 >= end.0 && next.1 <= end.1 {
            cur.push(next);
            lattice_walks(next, end, cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::case2;

    #[test]
    fn c_tj_examples() {
        let ctx = Ctx::symbolic(1);
        assert_eq!(c_tj(2, 1, &ctx), ctx.c(1));
        assert_eq!(c_tj(3, 2, &ctx), -&ctx.w);
        assert!(c_tj(2, 2, &ctx).is_zero());
    }

    #[test]
    fn c_tj_formula_matches_paths() {
        let ctx = Ctx::symbolic(1);
        for j in 1..=8 {
            for t in 0..=2 * j + 2 {
                assert_eq!(c_tj(t, j, &ctx), c_tj_paths(t, j, &ctx), "t={t} j={j}");
            }
        }
    }

    #[test]
    fn a11() {
        let ctx = Ctx::symbolic(1);
        let s = Std::new(1);
        assert_eq!(a_ij(1, 1, &ctx).unwrap(), s.free(1));
    }

    #[test]
    fn order_one_and_two() {
        let s = Std::new(1);
        for kind in [Interpretation::I1, Interpretation::I2, Interpretation::I3, Interpretation::Jt4] {
            assert_eq!(det_gf(kind, 1, &Ctx::symbolic(1)).unwrap(), s.free(1), "{kind:?}");
            assert_eq!(det_gf(kind, 2, &Ctx::symbolic(2)).unwrap(), case2(), "{kind:?}");
        }
    }

    #[test]
    fn unrefined_sequence() {
        let want = [1, 3, 26, 646, 45885];
        for (n, &w) in (1..=5).zip(want.iter()) {
            assert_eq!(unrefined_det(n), BigInt::from(w));
        }
        assert_eq!(int_det(&unrefined_matrix(2)), BigInt::from(3));
    }

    #[test]
    fn tilings_match_determinant() {
        for n in 1..=4 {
            let (count, signed) = tiling_count(n);
            assert_eq!(BigInt::from(count), unrefined_det(n));
            assert_eq!(count as i64, signed);
        }
    }

    #[test]
    fn specialized_routes() {
        let s = Std::new(3);
        let pt = s.count_point();
        for kind in [Interpretation::I1, Interpretation::I2, Interpretation::I3, Interpretation::Jt4] {
            assert_eq!(specialized_det(kind, 3, &pt).unwrap(), BigInt::from(26), "{kind:?}");
        }
    }

    #[test]
    fn onehalf_transform() {
        for n in 1..=3 {
            let ctx = Ctx::symbolic(n);
            let via = jt4_matrix_via_onehalf(n, &ctx).unwrap();
            let direct = det_matrix(Interpretation::Jt4, n, &ctx).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(via.get(i, j), direct.get(i, j), "n={n} ({i},{j})");
                }
            }
            let d = onehalf_matrix(n, &ctx).unwrap().det(DetMethod::Auto);
            assert_eq!(d, ctx.c(1i64 << (n - 1)));
        }
    }
}
