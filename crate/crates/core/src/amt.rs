//! Monotone triangles, arrowed monotone triangles and the algebraic formulas
//! for their generating function.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{DetMethod, PolyMatrix};
use crate::poly::{antisymmetrize, exact_div, schur_extended, vandermonde, Alphabet, LaurentPoly, Std};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decoration {
    /// `↖`
    NW,
    /// `↗`
    NE,
    /// `↖↗`
    Both,
}

const ALL: [Decoration; 3] = [Decoration::NW, Decoration::NE, Decoration::Both];
const ONLY_NE: [Decoration; 1] = [Decoration::NE];
const ONLY_NW: [Decoration; 1] = [Decoration::NW];

/// Triangular array with `i` entries in row `i` (rows from the top), strictly
/// increasing rows and weakly increasing diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<i64>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Structure(format!("row {} has length {}", i + 1, row.len())));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Structure(format!("row {} is not strictly increasing", i + 1)));
            }
            if i > 0 {
                let above = &rows[i - 1];
                for (j, &a) in above.iter().enumerate() {
                    if !(row[j] <= a && a <= row[j + 1]) {
                        return Err(Error::Structure(format!("entry ({i}, {}) breaks interlacing", j + 1)));
                    }
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn bottom(&self) -> &[i64] {
        self.rows.last().map(|r| r.as_slice()).unwrap_or(&[])
    }

    /// Decorations allowed at row `i`, position `j` (both 0-based).
    pub fn allowed(&self, i: usize, j: usize) -> &'static [Decoration] {
        let e = self.rows[i][j];
        if i > 0 {
            if j > 0 && self.rows[i - 1][j - 1] == e {
                return &ONLY_NE;
            }
            if j < i && self.rows[i - 1][j] == e {
                return &ONLY_NW;
            }
        }
        &ALL
    }

    pub fn is_free(&self, i: usize, j: usize) -> bool {
        self.allowed(i, j).len() == 3
    }

    pub fn free_count(&self) -> usize {
        (0..self.n()).map(|i| (0..=i).filter(|&j| self.is_free(i, j)).count()).sum()
    }

    /// Number of valid decorations, `3^f`.
    pub fn decoration_count(&self) -> BigInt {
        BigInt::from(3).pow(self.free_count() as u32)
    }

    /// `rowsum_i - rowsum_{i-1}` for every row.
    pub fn row_sum_steps(&self) -> Vec<i64> {
        let mut prev = 0;
        self.rows
            .iter()
            .map(|r| {
                let s: i64 = r.iter().sum();
                let d = s - prev;
                prev = s;
                d
            })
            .collect()
    }

    /// All decorated versions of this triangle.
    pub fn decorations(&self) -> DecorationIter<'_> {
        let slots: Vec<&'static [Decoration]> =
            (0..self.n()).flat_map(|i| (0..=i).map(move |j| (i, j))).map(|(i, j)| self.allowed(i, j)).collect();
        DecorationIter { base: self, idx: vec![0; slots.len()], slots, done: false }
    }

    /// Weight summed over all decorations, as a product of per-entry factors.
    pub fn gf(&self, s: &Std) -> LaurentPoly {
        let steps = self.row_sum_steps();
        let mut acc = s.one();
        for (i, &step) in steps.iter().enumerate() {
            acc = &acc * &s.x(i + 1, step as i32);
            for j in 0..=i {
                let f = match self.allowed(i, j) {
                    [Decoration::NE] => &s.u() * &s.x(i + 1, 1),
                    [Decoration::NW] => &s.v() * &s.x(i + 1, -1),
                    _ => s.free(i + 1),
                };
                acc = &acc * &f;
            }
        }
        acc
    }
}

/// Odometer over the decoration choices of one triangle.
pub struct DecorationIter<'a> {
    base: &'a MonotoneTriangle,
    slots: Vec<&'static [Decoration]>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for DecorationIter<'_> {
    type Item = ArrowedMonotoneTriangle;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut flat = self.idx.iter().zip(&self.slots).map(|(&k, s)| s[k]);
        let decorations: Vec<Vec<Decoration>> =
            (0..self.base.n()).map(|i| (0..=i).map(|_| flat.next().unwrap()).collect()).collect();
        let item = ArrowedMonotoneTriangle { base: self.base.clone(), decorations };
        let mut t = self.idx.len();
        loop {
            if t == 0 {
                self.done = true;
                break;
            }
            t -= 1;
            self.idx[t] += 1;
            if self.idx[t] < self.slots[t].len() {
                break;
            }
            self.idx[t] = 0;
        }
        Some(item)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArrowedMonotoneTriangle {
    base: MonotoneTriangle,
    decorations: Vec<Vec<Decoration>>,
}

impl ArrowedMonotoneTriangle {
    pub fn new(base: MonotoneTriangle, decorations: Vec<Vec<Decoration>>) -> Result<Self> {
        if decorations.len() != base.n() {
            return Err(Error::Structure("decoration rows do not match".into()));
        }
        for (i, row) in decorations.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Structure(format!("decoration row {} has length {}", i + 1, row.len())));
            }
            for (j, d) in row.iter().enumerate() {
                let left = i > 0 && j > 0 && base.rows[i - 1][j - 1] == base.rows[i][j];
                let right = i > 0 && j < i && base.rows[i - 1][j] == base.rows[i][j];
                assert!(!(left && right), "entry equal to both neighbours contradicts row strictness");
                if !base.allowed(i, j).contains(d) {
                    return Err(Error::Structure(format!("decoration {d:?} not allowed at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(ArrowedMonotoneTriangle { base, decorations })
    }

    pub fn base(&self) -> &MonotoneTriangle {
        &self.base
    }

    pub fn decorations(&self) -> &[Vec<Decoration>] {
        &self.decorations
    }

    /// Exponent vector of the weight over `u, v, w, X1..Xn`.
    pub fn weight_exps(&self) -> Vec<i32> {
        let n = self.base.n();
        let mut e = vec![0i32; 3 + n];
        for (i, d) in self.base.row_sum_steps().into_iter().enumerate() {
            e[3 + i] = d as i32;
        }
        for (i, row) in self.decorations.iter().enumerate() {
            for d in row {
                match d {
                    Decoration::NE => {
                        e[0] += 1;
                        e[3 + i] += 1;
                    }
                    Decoration::NW => {
                        e[1] += 1;
                        e[3 + i] -= 1;
                    }
                    Decoration::Both => e[2] += 1,
                }
            }
        }
        e
    }

    pub fn weight(&self, alpha: &Alphabet) -> LaurentPoly {
        LaurentPoly::monomial(alpha, 1, &self.weight_exps())
    }
}

/// Validates a strictly increasing bottom row.
pub fn check_bottom(bottom: &[i64]) -> Result<()> {
    if bottom.is_empty() {
        return Err(Error::Structure("empty bottom row".into()));
    }
    if bottom.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Structure(format!("bottom row {bottom:?} is not strictly increasing")));
    }
    Ok(())
}

/// `0, 2, ..., 2n-2`.
pub fn vsasm_bottom(n: usize) -> Vec<i64> {
    (0..n as i64).map(|i| 2 * i).collect()
}

/// Every monotone triangle with the given bottom row, rows built upwards by
/// choosing each entry between its two lower neighbours.
pub fn enumerate_triangles(bottom: &[i64]) -> Result<Vec<MonotoneTriangle>> {
    check_bottom(bottom)?;
    let n = bottom.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); n];
    rows[n - 1] = bottom.to_vec();
    fill_row(&mut rows, n - 1, 0, &mut out);
    Ok(out)
}

fn fill_row(rows: &mut Vec<Vec<i64>>, below: usize, j: usize, out: &mut Vec<MonotoneTriangle>) {
    if below == 0 {
        out.push(MonotoneTriangle { rows: rows.clone() });
        return;
    }
    let target = below - 1;
    if j == below {
        fill_row(rows, target, 0, out);
        return;
    }
    let lo = rows[below][j];
    let hi = rows[below][j + 1];
    let lo = match rows[target].last() {
        Some(&prev) if j > 0 => lo.max(prev + 1),
        _ => lo,
    };
    for a in lo..=hi {
        rows[target].push(a);
        fill_row(rows, below, j + 1, out);
        rows[target].pop();
    }
}

/// All arrowed monotone triangles with the given bottom row.
pub fn enumerate_amt(bottom: &[i64]) -> Result<impl Iterator<Item = ArrowedMonotoneTriangle>> {
    let tris = enumerate_triangles(bottom)?;
    Ok(tris.into_iter().flat_map(|t| t.decorations().collect::<Vec<_>>()))
}

/// Sum of weights over every arrowed monotone triangle, enumerated one by one.
pub fn gf_brute(bottom: &[i64]) -> Result<LaurentPoly> {
    let tris = enumerate_triangles(bottom)?;
    let alpha = Alphabet::standard(bottom.len());
    let acc = tris
        .par_iter()
        .fold(HashMap::<Vec<i32>, u64>::new, |mut acc, t| {
            for a in t.decorations() {
                *acc.entry(a.weight_exps()).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(LaurentPoly::from_terms(&alpha, acc.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Same sum, grouped by underlying triangle: each triangle contributes a
/// product of per-entry factors.
pub fn gf_factored(bottom: &[i64]) -> Result<LaurentPoly> {
    let tris = enumerate_triangles(bottom)?;
    let s = Std::new(bottom.len());
    let parts: Vec<LaurentPoly> = tris.par_iter().map(|t| t.gf(&s)).collect();
    Ok(LaurentPoly::sum(&s.alpha, parts.iter()))
}

/// Number of arrowed monotone triangles with the given bottom row.
pub fn amt_count(bottom: &[i64]) -> Result<BigInt> {
    Ok(enumerate_triangles(bottom)?.iter().map(|t| t.decoration_count()).sum())
}

/// The brute force generating function evaluated at integer values for
/// `u, v, w, X1..Xn`, without expanding it symbolically.
pub fn count_specialized(bottom: &[i64], values: &[BigInt]) -> Result<BigInt> {
    let n = bottom.len();
    if values.len() != 3 + n {
        return Err(Error::Evaluation(format!("expected {} values", 3 + n)));
    }
    let tris = enumerate_triangles(bottom)?;
    let (u, v, w) = (&values[0], &values[1], &values[2]);
    // each triangle gives c * prod x_i^{e_i}; collect, then clear denominators
    let parts: Vec<(BigInt, Vec<i64>)> = tris
        .par_iter()
        .map(|t| {
            let steps = t.row_sum_steps();
            let mut c = BigInt::one();
            let mut e = vec![0i64; n];
            for i in 0..n {
                e[i] += steps[i];
                let x = &values[3 + i];
                for j in 0..=i {
                    match t.allowed(i, j) {
                        [Decoration::NE] => {
                            c *= u;
                            e[i] += 1;
                        }
                        [Decoration::NW] => {
                            c *= v;
                            e[i] -= 1;
                        }
                        _ => {
                            // u x + v/x + w = (u x^2 + w x + v) / x
                            c *= u * x * x + w * x + v;
                            e[i] -= 1;
                        }
                    }
                }
            }
            (c, e)
        })
        .collect();
    let mut lo = vec![0i64; n];
    for (_, e) in &parts {
        for i in 0..n {
            lo[i] = lo[i].min(e[i]);
        }
    }
    for i in 0..n {
        if lo[i] < 0 && values[3 + i].is_zero() {
            return Err(Error::Evaluation(format!("X{} = 0 with a negative power", i + 1)));
        }
    }
    let mut num = BigInt::zero();
    for (c, e) in parts {
        let mut term = c;
        for i in 0..n {
            term *= values[3 + i].pow((e[i] - lo[i]) as u32);
        }
        num += term;
    }
    let den: BigInt = (0..n).map(|i| values[3 + i].pow((-lo[i]) as u32)).product();
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Evaluation("value is not an integer".into()));
    }
    Ok(q)
}

/// Exact value of a generating function under an assignment of every variable.
pub fn specialize_count(gf: &LaurentPoly, assignment: &HashMap<String, BigInt>) -> Result<BigInt> {
    gf.eval_named(assignment)
}

/// The shift operator formula: expand the product over pairs into shifted
/// bottom rows, evaluate extended Schur polynomials, multiply by the free
/// entry factors.
pub fn gf_operator(bottom: &[i64]) -> Result<LaurentPoly> {
    check_bottom(bottom)?;
    let n = bottom.len();
    let s = Std::new(n);
    let xs: Vec<usize> = (1..=n).map(|i| s.xi(i)).collect();
    // (shift vector, [a, b, c]) -> multiplicity of u^a v^b w^c
    let mut terms: HashMap<(Vec<i64>, [i32; 3]), u64> = HashMap::new();
    terms.insert((vec![0; n], [0; 3]), 1);
    for j in 0..n {
        for i in 0..j {
            let mut next: HashMap<(Vec<i64>, [i32; 3]), u64> = HashMap::new();
            for ((shift, uvw), mult) in &terms {
                for choice in 0..3 {
                    let mut sh = shift.clone();
                    let mut m = *uvw;
                    match choice {
                        0 => sh[i] += 1,
                        1 => sh[j] -= 1,
                        _ => {
                            sh[i] += 1;
                            sh[j] -= 1;
                        }
                    }
                    m[choice] += 1;
                    *next.entry((sh, m)).or_default() += mult;
                }
            }
            terms = next;
        }
    }
    let mut by_shift: HashMap<Vec<i64>, Vec<([i32; 3], u64)>> = HashMap::new();
    for ((sh, m), c) in terms {
        by_shift.entry(sh).or_default().push((m, c));
    }
    let mut keys: Vec<Vec<i64>> = by_shift.keys().cloned().collect();
    keys.sort();
    let parts: Vec<LaurentPoly> = keys
        .par_iter()
        .map(|sh| {
            let k: Vec<i64> = bottom.iter().zip(sh).map(|(a, b)| a + b).collect();
            let schur = schur_extended(&k, &xs, &s.alpha)?;
            if schur.is_zero() {
                return Ok(schur);
            }
            let coeff = LaurentPoly::from_terms(
                &s.alpha,
                by_shift[sh].iter().map(|(m, c)| {
                    let mut e = vec![0; s.alpha.len()];
                    e[..3].copy_from_slice(m);
                    (e, BigInt::from(*c))
                }),
            );
            Ok(&coeff * &schur)
        })
        .collect::<Result<_>>()?;
    let total = LaurentPoly::sum(&s.alpha, parts.iter());
    let free = LaurentPoly::product(&s.alpha, (1..=n).map(|i| s.free(i)).collect::<Vec<_>>().iter());
    Ok(&free * &total)
}

/// `ASym[prod_{i<=j}(u X_j + v X_i^{-1} + w) prod_i X_i^{k_i+n-i}] / prod_{i<j}(X_j - X_i)`.
pub fn gf_antisym(bottom: &[i64]) -> Result<LaurentPoly> {
    check_bottom(bottom)?;
    let n = bottom.len();
    let s = Std::new(n);
    let xs: Vec<usize> = (1..=n).map(|i| s.xi(i)).collect();
    let mut f = s.one();
    for j in 1..=n {
        for i in 1..=j {
            let fac = &(&(&s.u() * &s.x(j, 1)) + &(&s.v() * &s.x(i, -1))) + &s.w();
            f = &f * &fac;
        }
    }
    for i in 1..=n {
        f = &f * &s.x(i, (bottom[i - 1] + n as i64 - i as i64) as i32);
    }
    exact_div(&antisymmetrize(&f, &xs), &vandermonde(&s.alpha, &xs))
}

/// The bialternant formula for bottom row `0, 2, ..., 2n-2`: a determinant of
/// differences of powers, divided by the Vandermonde product and the factors
/// `u - v X_i^{-1} X_j^{-1}` for `i <= j`.
pub fn gf_bialternant(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::Structure("n must be positive".into()));
    }
    let s = Std::new(n);
    let xs: Vec<usize> = (1..=n).map(|i| s.xi(i)).collect();
    let m = PolyMatrix::from_fn(n, &s.alpha, |i, j| {
        let i = i + 1;
        let p = (j + 1) as u32;
        let y = &(&s.u().pow(2) * &s.x(i, 2)) + &(&(&s.u() * &s.w()) * &s.x(i, 1));
        let z = &(&s.v().pow(2) * &s.x(i, -2)) + &(&(&s.v() * &s.w()) * &s.x(i, -1));
        Ok(&y.pow(p) - &z.pow(p))
    })?;
    let mut g = m.det(DetMethod::Auto);
    g = exact_div(&g, &vandermonde(&s.alpha, &xs))?;
    for j in 1..=n {
        for i in 1..=j {
            let fac = &s.u() - &(&s.v() * &(&s.x(i, -1) * &s.x(j, -1)));
            g = exact_div(&g, &fac)?;
        }
    }
    Ok(&g * &s.x_all(n as i32 - 2))
}

/// Column partial sums of an ASM read off as a monotone triangle.
pub fn asm_to_triangle(asm: &[Vec<i64>]) -> Result<MonotoneTriangle> {
    let n = asm.len();
    let mut partial = vec![0i64; n];
    let mut rows = Vec::with_capacity(n);
    for row in asm {
        if row.len() != n {
            return Err(Error::Structure("matrix is not square".into()));
        }
        for (j, &a) in row.iter().enumerate() {
            partial[j] += a;
        }
        if partial.iter().any(|&p| p != 0 && p != 1) {
            return Err(Error::Structure("not an alternating sign matrix".into()));
        }
        rows.push((1..=n as i64).filter(|&j| partial[j as usize - 1] == 1).collect::<Vec<_>>());
    }
    MonotoneTriangle::new(rows)
}

/// Inverse of [`asm_to_triangle`] for triangles with bottom row `1..=n`.
pub fn triangle_to_asm(t: &MonotoneTriangle) -> Result<Vec<Vec<i64>>> {
    let n = t.n();
    if t.bottom() != (1..=n as i64).collect::<Vec<_>>().as_slice() {
        return Err(Error::Structure("bottom row must be 1..n".into()));
    }
    let mut prev = vec![0i64; n];
    let mut out = Vec::with_capacity(n);
    for row in t.rows() {
        let mut cur = vec![0i64; n];
        for &c in row {
            cur[c as usize - 1] = 1;
        }
        out.push(cur.iter().zip(&prev).map(|(a, b)| a - b).collect());
        prev = cur;
    }
    Ok(out)
}

/// The top `n` rows of the triangle of a `(2n+1) x (2n+1)` VSASM (given in
/// the orientation whose middle row is `1, -1, ..., 1`), shifted down by 2 so
/// the bottom row is `0, 2, ..., 2n-2`.
pub fn vsasm_to_triangle(asm: &[Vec<i64>]) -> Result<MonotoneTriangle> {
    if asm.len().is_multiple_of(2) {
        return Err(Error::Structure("VSASM must have odd order".into()));
    }
    let n = asm.len() / 2;
    let full = asm_to_triangle(asm)?;
    let rows: Vec<Vec<i64>> = full.rows()[..n].iter().map(|r| r.iter().map(|x| x - 2).collect()).collect();
    let t = MonotoneTriangle::new(rows)?;
    if t.bottom() != vsasm_bottom(n).as_slice() {
        return Err(Error::Structure("matrix is not vertically symmetric".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::case2;

    fn paper_example() -> ArrowedMonotoneTriangle {
        use Decoration::*;
        let rows = vec![
            vec![4],
            vec![4, 5],
            vec![3, 4, 6],
            vec![2, 3, 6, 8],
            vec![1, 2, 5, 6, 9],
            vec![0, 2, 4, 6, 8, 10],
        ];
        let dec = vec![
            vec![Both],
            vec![NW, NW],
            vec![Both, NE, NE],
            vec![NE, NE, NW, Both],
            vec![NW, NE, Both, NE, NW],
            vec![NW, NW, Both, NW, Both, NE],
        ];
        ArrowedMonotoneTriangle::new(MonotoneTriangle::new(rows).unwrap(), dec).unwrap()
    }

    #[test]
    fn six_row_weight() {
        let a = paper_example();
        assert_eq!(a.weight_exps(), vec![7, 8, 6, 4, 3, 6, 7, 4, 5]);
    }

    #[test]
    fn single_entry() {
        let t = MonotoneTriangle::new(vec![vec![0]]).unwrap();
        let ws: Vec<Vec<i32>> = t.decorations().map(|a| a.weight_exps()).collect();
        assert_eq!(ws.len(), 3);
        assert!(ws.contains(&vec![1, 0, 0, 1]));
        assert!(ws.contains(&vec![0, 0, 1, 0]));
        assert!(ws.contains(&vec![0, 1, 0, -1]));
    }

    #[test]
    fn forced_decorations_are_rejected() {
        let t = MonotoneTriangle::new(vec![vec![0], vec![0, 2]]).unwrap();
        let bad = vec![vec![Decoration::NE], vec![Decoration::NE, Decoration::NE]];
        assert!(ArrowedMonotoneTriangle::new(t, bad).is_err());
    }

    #[test]
    fn counts_for_small_bottoms() {
        assert_eq!(enumerate_triangles(&[0]).unwrap().len(), 1);
        assert_eq!(amt_count(&[0]).unwrap(), BigInt::from(3));
        assert_eq!(enumerate_triangles(&[0, 2]).unwrap().len(), 3);
        assert_eq!(amt_count(&[0, 2]).unwrap(), BigInt::from(45));
        assert_eq!(enumerate_amt(&[0, 2]).unwrap().count(), 45);
        assert!(enumerate_triangles(&[2, 1]).is_err());
    }

    #[test]
    fn case2_from_every_route() {
        let want = case2();
        assert_eq!(gf_brute(&[0, 2]).unwrap(), want);
        assert_eq!(gf_factored(&[0, 2]).unwrap(), want);
        assert_eq!(gf_operator(&[0, 2]).unwrap(), want);
        assert_eq!(gf_antisym(&[0, 2]).unwrap(), want);
        assert_eq!(gf_bialternant(2).unwrap(), want);
    }

    #[test]
    fn n1_routes() {
        let s = Std::new(1);
        assert_eq!(gf_brute(&[0]).unwrap(), s.free(1));
        assert_eq!(gf_operator(&[0]).unwrap(), s.free(1));
        assert_eq!(gf_antisym(&[0]).unwrap(), s.free(1));
        assert_eq!(gf_bialternant(1).unwrap(), s.free(1));
    }

    #[test]
    fn specialized_counts_match() {
        let s = Std::new(3);
        let g = gf_brute(&[0, 2, 4]).unwrap();
        assert_eq!(g.eval(&s.count_point()).unwrap(), BigInt::from(26));
        assert_eq!(count_specialized(&[0, 2, 4], &s.count_point()).unwrap(), BigInt::from(26));
        let ones = vec![BigInt::one(); 6];
        assert_eq!(g.eval(&ones).unwrap(), amt_count(&[0, 2, 4]).unwrap());
        assert_eq!(count_specialized(&[0, 2, 4], &ones).unwrap(), amt_count(&[0, 2, 4]).unwrap());
    }

    #[test]
    fn asm_round_trip_and_vsasm() {
        let m = vec![
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 1, 0, -1, 1, 0],
            vec![0, 1, -1, 1, 0, 0, 0],
            vec![1, -1, 1, -1, 1, -1, 1],
            vec![0, 1, -1, 1, 0, 0, 0],
            vec![0, 0, 1, 0, -1, 1, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
        ];
        let t = asm_to_triangle(&m).unwrap();
        assert_eq!(t.rows()[3], vec![1, 3, 5, 7]);
        assert_eq!(t.rows()[6], vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(triangle_to_asm(&t).unwrap(), m);
        let v = vsasm_to_triangle(&m).unwrap();
        assert_eq!(v.rows(), &[vec![3], vec![1, 4], vec![0, 2, 4]]);
    }
}
