//! Pairs of plane partitions of the same shape, their correspondence with
//! the signless path families, and the Magog triangles reached from the
//! row-strict member.
//!
//! Rows are stored top to bottom, always `n` of them (trailing rows may be
//! empty). "Row `i` from the bottom" is `rows[n - i]`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{path_from_steps, weigh_family, Interpretation, PathFamily, Pt};
use crate::poly::{Exps, LaurentPoly, Std};

pub type Rows = Vec<Vec<u32>>;

fn shape_of(rows: &Rows) -> Vec<usize> {
    rows.iter().map(|r| r.len()).collect()
}

fn check_shape(rows: &Rows) -> Result<()> {
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::Structure(format!("row lengths {:?} are not weakly decreasing", shape_of(rows))));
    }
    Ok(())
}

/// Column-strict plane partition; row `i` from the bottom is bounded by `2i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cspp {
    pub rows: Rows,
}

/// Row-strict plane partition; row `i` from the bottom is bounded by `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rspp {
    pub rows: Rows,
}

impl Cspp {
    pub fn new(rows: Rows) -> Result<Self> {
        check_shape(&rows)?;
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            let bound = 2 * (n - r) as u32;
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > bound {
                    return Err(Error::Structure(format!("entry {x} in row {} from the bottom exceeds {bound}", n - r)));
                }
                if c > 0 && row[c - 1] < x {
                    return Err(Error::Structure("row not weakly decreasing".into()));
                }
                if r + 1 < n && c < rows[r + 1].len() && rows[r + 1][c] >= x {
                    return Err(Error::Structure("column not strictly decreasing".into()));
                }
            }
        }
        Ok(Cspp { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        shape_of(&self.rows)
    }
}

impl Rspp {
    pub fn new(rows: Rows) -> Result<Self> {
        check_shape(&rows)?;
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            let bound = (n - r) as u32;
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > bound {
                    return Err(Error::Structure(format!("entry {x} in row {} from the bottom exceeds {bound}", n - r)));
                }
                if c > 0 && row[c - 1] <= x {
                    return Err(Error::Structure("row not strictly decreasing".into()));
                }
                if r + 1 < n && c < rows[r + 1].len() && rows[r + 1][c] > x {
                    return Err(Error::Structure("column not weakly decreasing".into()));
                }
            }
        }
        Ok(Rspp { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        shape_of(&self.rows)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PpPair {
    pub p: Cspp,
    pub q: Rspp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(rename = "P")]
    pub p: Rows,
    #[serde(rename = "Q")]
    pub q: Rows,
}

impl PpPair {
    pub fn new(p: Cspp, q: Rspp) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::Structure(format!("shapes {:?} and {:?} differ", p.shape(), q.shape())));
        }
        Ok(PpPair { p, q })
    }

    pub fn from_rows(p: Rows, q: Rows) -> Result<Self> {
        Self::new(Cspp::new(p)?, Rspp::new(q)?)
    }

    pub fn n(&self) -> usize {
        self.p.n()
    }

    /// `w^{C(n+1,2) - |Q|} prod X_i^{n-1} (uX_i)^{#(2i-1) in P} (vX_i^{-1})^{#(2i) in P}`.
    pub fn weight(&self) -> LaurentPoly {
        let s = Std::new(self.n());
        LaurentPoly::monomial(&s.alpha, 1, &self.weight_exps())
    }

    pub fn weight_exps(&self) -> Vec<i32> {
        let n = self.n();
        let mut e = vec![0i32; n + 3];
        e[2] = (n * (n + 1) / 2 - self.q.size()) as i32;
        for x in e.iter_mut().skip(3) {
            *x = n as i32 - 1;
        }
        add_p_exps(&self.p.rows, &mut e);
        e
    }

    pub fn to_json_value(&self) -> PairJson {
        PairJson { p: self.p.rows.clone(), q: self.q.rows.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("pair serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PairJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_rows(j.p, j.q)
    }
}

fn add_p_exps(rows: &Rows, e: &mut [i32]) {
    for &x in rows.iter().flatten() {
        let d = x.div_ceil(2) as usize;
        if x % 2 == 1 {
            e[0] += 1;
            e[2 + d] += 1;
        } else {
            e[1] += 1;
            e[2 + d] -= 1;
        }
    }
}

/// Shapes (top to bottom) whose row `i` from the bottom has at most `i` cells.
pub fn shapes(n: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, n: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == n {
            out.push(cur.clone());
            return;
        }
        let cap = prev.min(n - r);
        for len in 0..=cap {
            cur.push(len);
            go(r + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, n, &mut Vec::new(), &mut out);
    out
}

/// Fills the shape bottom row first, left to right, with `allowed(r, c, left, below)`
/// giving the admissible range for each cell.
fn fill<F>(shape: &[usize], range: &F, visit: &mut dyn FnMut(&Rows))
where
    F: Fn(usize, Option<u32>, Option<u32>) -> (u32, u32),
{
    let n = shape.len();
    let mut rows: Rows = shape.iter().map(|&l| vec![0; l]).collect();
    let cells: Vec<(usize, usize)> = (0..n).rev().flat_map(|r| (0..shape[r]).map(move |c| (r, c))).collect();
    fn go<F: Fn(usize, Option<u32>, Option<u32>) -> (u32, u32)>(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Rows,
        range: &F,
        visit: &mut dyn FnMut(&Rows),
    ) {
        if k == cells.len() {
            visit(rows);
            return;
        }
        let (r, c) = cells[k];
        let n = rows.len();
        let left = (c > 0).then(|| rows[r][c - 1]);
        let below = (r + 1 < n && c < rows[r + 1].len()).then(|| rows[r + 1][c]);
        let (lo, hi) = range(n - r, left, below);
        for x in lo..=hi {
            rows[r][c] = x;
            go(k + 1, cells, rows, range, visit);
        }
        rows[r][c] = 0;
    }
    go(0, &cells, &mut rows, range, visit);
}

fn cspp_range(i: usize, left: Option<u32>, below: Option<u32>) -> (u32, u32) {
    let hi = left.unwrap_or(u32::MAX).min(2 * i as u32);
    let lo = below.map_or(1, |b| b + 1);
    (lo, hi)
}

fn rspp_range(i: usize, left: Option<u32>, below: Option<u32>) -> (u32, u32) {
    let hi = left.map_or(i as u32, |l| l.saturating_sub(1)).min(i as u32);
    let lo = below.unwrap_or(1).max(1);
    (lo, hi)
}

pub fn cspps_of_shape(shape: &[usize]) -> Vec<Cspp> {
    let mut out = Vec::new();
    fill(shape, &cspp_range, &mut |rows| out.push(Cspp { rows: rows.clone() }));
    out
}

pub fn rspps_of_shape(shape: &[usize]) -> Vec<Rspp> {
    let mut out = Vec::new();
    fill(shape, &rspp_range, &mut |rows| out.push(Rspp { rows: rows.clone() }));
    out
}

/// All row-strict partitions allowed for order `n`.
pub fn all_rspps(n: usize) -> Vec<Rspp> {
    shapes(n).iter().flat_map(|sh| rspps_of_shape(sh)).collect()
}

/// Every pair for order `n`; grows quickly, meant for `n <= 3`.
pub fn enumerate_pairs(n: usize) -> Vec<PpPair> {
    let mut out = Vec::new();
    for sh in shapes(n) {
        let ps = cspps_of_shape(&sh);
        let qs = rspps_of_shape(&sh);
        for p in &ps {
            for q in &qs {
                out.push(PpPair { p: p.clone(), q: q.clone() });
            }
        }
    }
    out
}

/// Generating function of all pairs. Within one shape the weight of a pair
/// factors into a part from `P` and a power of `w` fixed by the shape, so the
/// pairs are summed as (sum over `P`) times (number of `Q`).
pub fn enum_gf_pairs(n: usize) -> LaurentPoly {
    let s = Std::new(n);
    let total_cells = n * (n + 1) / 2;
    let mut acc: HashMap<Exps, BigInt> = HashMap::new();
    for sh in shapes(n) {
        let q_count = BigInt::from(rspps_of_shape(&sh).len());
        let size: usize = sh.iter().sum();
        let mut p_sum: HashMap<Vec<i32>, u64> = HashMap::new();
        fill(&sh, &cspp_range, &mut |rows| {
            let mut e = vec![0i32; n + 3];
            add_p_exps(rows, &mut e);
            *p_sum.entry(e).or_default() += 1;
        });
        for (mut e, c) in p_sum {
            e[2] += (total_cells - size) as i32;
            for x in e.iter_mut().skip(3) {
                *x += n as i32 - 1;
            }
            *acc.entry(e.into()).or_default() += &q_count * c;
        }
    }
    LaurentPoly::from_map(&s.alpha, acc)
}

/// Reads a family of the signless model (starts `(i, 2i)`, ends `(j, 1-j)`)
/// as a pair: horizontal step heights give `P`, the values `x - y` along the
/// diagonal steps give `Q'`, and `Q` is `Q'` shifted down by row and column.
pub fn paths3_to_pair(f: &PathFamily) -> Result<PpPair> {
    if f.interpretation != Interpretation::Jt4 {
        return Err(Error::Structure(format!("expected a signless-model family, got {}", f.interpretation.name())));
    }
    let n = f.n;
    if f.sigma.iter().enumerate().any(|(i, &s)| i != s) {
        return Err(Error::Structure("connection is not the identity".into()));
    }
    let mut p_rows: Rows = vec![Vec::new(); n];
    let mut q_rows: Rows = vec![Vec::new(); n];
    for (idx, path) in f.paths.iter().enumerate() {
        let i = idx + 1;
        let mut heights = Vec::new();
        let mut diag = Vec::new();
        for w in path.windows(2) {
            let ((x, y), (x2, y2)) = (w[0], w[1]);
            match (x2 - x, y2 - y) {
                (1, 0) => heights.push(y as u32),
                (-1, -1) => diag.push((x - y) as u32),
                (0, -1) => {}
                d => return Err(Error::Structure(format!("unexpected step {d:?}"))),
            }
        }
        if heights.len() != diag.len() {
            return Err(Error::Structure(format!("path {i} has unequal horizontal and diagonal counts")));
        }
        diag.reverse();
        let q: Vec<u32> = diag
            .iter()
            .enumerate()
            .map(|(c, &e)| e.checked_sub((i - 1 + c) as u32).ok_or_else(|| Error::Structure("Q' entry too small".into())))
            .collect::<Result<_>>()?;
        p_rows[n - i] = heights;
        q_rows[n - i] = q;
    }
    PpPair::from_rows(p_rows, q_rows)
}

/// Inverse of [`paths3_to_pair`].
pub fn pair_to_paths3(pair: &PpPair) -> Result<PathFamily> {
    let n = pair.n();
    let mut paths: Vec<Vec<Pt>> = Vec::with_capacity(n);
    for i in 1..=n {
        let prow = &pair.p.rows[n - i];
        let qrow = &pair.q.rows[n - i];
        let (ii, mut y) = (i as i32, 2 * i as i32);
        let mut steps: Vec<Pt> = Vec::new();
        for &h in prow {
            let h = h as i32;
            while y > h {
                steps.push((0, -1));
                y -= 1;
            }
            steps.push((1, 0));
        }
        while y > 1 {
            steps.push((0, -1));
            y -= 1;
        }
        let mut x = ii + prow.len() as i32;
        let mut targets: Vec<i32> =
            qrow.iter().enumerate().map(|(c, &e)| e as i32 + (i - 1 + c) as i32).collect();
        targets.reverse();
        for t in targets {
            while x - y < t {
                steps.push((0, -1));
                y -= 1;
            }
            if x - y != t {
                return Err(Error::Structure(format!("diagonal value {t} unreachable in row {i}")));
            }
            steps.push((-1, -1));
            x -= 1;
            y -= 1;
        }
        while y > 1 - ii {
            steps.push((0, -1));
            y -= 1;
        }
        paths.push(path_from_steps((ii, 2 * ii), &steps));
    }
    weigh_family(Interpretation::Jt4, n, &paths)
}

/// Triangular array with `n + 1` rows, row `r` holding `r` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MagogTriangle {
    pub rows: Vec<Vec<u32>>,
}

impl MagogTriangle {
    /// Entries satisfy `1 <= M[r][j] <= j` (1-based) and consecutive rows interlace.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::Structure(format!("row {} has {} entries", r + 1, row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                if x < 1 || x as usize > j + 1 {
                    return Err(Error::Structure(format!("entry {x} at ({}, {}) out of range", r + 1, j + 1)));
                }
            }
            if r > 0 {
                let prev = &rows[r - 1];
                for j in 0..prev.len() {
                    if !(row[j] <= prev[j] && prev[j] <= row[j + 1]) {
                        return Err(Error::Structure(format!("rows {} and {} do not interlace", r, r + 1)));
                    }
                }
            }
        }
        Ok(MagogTriangle { rows })
    }
}

/// All Magog triangles with `rows` rows.
pub fn magog_triangles(rows: usize) -> Vec<MagogTriangle> {
    fn extend(cur: &mut Vec<Vec<u32>>, rows: usize, out: &mut Vec<MagogTriangle>) {
        if cur.len() == rows {
            out.push(MagogTriangle { rows: cur.clone() });
            return;
        }
        let prev = cur.last().cloned().unwrap_or_default();
        let len = prev.len() + 1;
        let mut row = vec![0u32; len];
        fn fill_row(j: usize, prev: &[u32], row: &mut Vec<u32>, cur: &mut Vec<Vec<u32>>, rows: usize, out: &mut Vec<MagogTriangle>) {
            if j == row.len() {
                cur.push(row.clone());
                extend(cur, rows, out);
                cur.pop();
                return;
            }
            let lo = if j > 0 { prev[j - 1].max(row[j - 1]) } else { 1 };
            let hi = if j < prev.len() { prev[j] } else { j as u32 + 1 }.min(j as u32 + 1);
            for x in lo.max(1)..=hi {
                row[j] = x;
                fill_row(j + 1, prev, row, cur, rows, out);
            }
        }
        fill_row(0, &prev, &mut row, cur, rows, out);
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), rows, &mut out);
    out
}

/// `p -> n + 1 - p` followed by conjugation; the result is a semistandard
/// tableau with entries up to `n`, listed by rows.
pub fn rspp_to_ssyt(q: &Rspp) -> Vec<Vec<u32>> {
    let n = q.n() as u32;
    let cols = q.rows.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|c| q.rows.iter().filter(|r| r.len() > c).map(|r| n + 1 - r[c]).collect())
        .collect()
}

/// Row `i` is the shape of the entries `<= i`, padded with zeros to length
/// `i` and listed in increasing order.
pub fn ssyt_to_gt(t: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32)
        .map(|i| {
            let mut parts: Vec<u32> = t.iter().map(|r| r.iter().filter(|&&x| x <= i).count() as u32).collect();
            parts.retain(|&p| p > 0);
            parts.resize(i as usize, 0);
            parts.reverse();
            parts
        })
        .collect()
}

pub fn gt_to_magog(gt: &[Vec<u32>]) -> Result<MagogTriangle> {
    let mut rows = vec![vec![1]];
    for r in gt {
        let mut row = vec![1];
        row.extend(r.iter().map(|x| x + 1));
        rows.push(row);
    }
    MagogTriangle::new(rows)
}

pub fn rspp_to_magog(q: &Rspp) -> Result<MagogTriangle> {
    let q = Rspp::new(q.rows.clone())?;
    gt_to_magog(&ssyt_to_gt(&rspp_to_ssyt(&q), q.n()))
}

/// Inverse of [`rspp_to_magog`].
pub fn magog_to_rspp(m: &MagogTriangle) -> Result<Rspp> {
    let m = MagogTriangle::new(m.rows.clone())?;
    let n = m.rows.len() - 1;
    // GT rows give, for each i, the row lengths of the entries <= i
    let shape_at = |i: usize| -> Vec<u32> {
        if i == 0 {
            return Vec::new();
        }
        let mut parts: Vec<u32> = m.rows[i][1..].iter().map(|x| x - 1).collect();
        parts.reverse();
        parts
    };
    let full = shape_at(n);
    let mut tableau: Vec<Vec<u32>> = full.iter().filter(|&&l| l > 0).map(|&l| vec![0; l as usize]).collect();
    for i in 1..=n {
        let (now, before) = (shape_at(i), shape_at(i - 1));
        for (r, row) in tableau.iter_mut().enumerate() {
            let b = before.get(r).copied().unwrap_or(0) as usize;
            let a = now.get(r).copied().unwrap_or(0) as usize;
            for cell in row.iter_mut().take(a).skip(b) {
                *cell = i as u32;
            }
        }
    }
    let cols = tableau.first().map_or(0, |r| r.len());
    let mut rows: Rows = (0..cols)
        .map(|c| tableau.iter().filter(|r| r.len() > c).map(|r| n as u32 + 1 - r[c]).collect())
        .collect();
    rows.resize(n, Vec::new());
    Rspp::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amt::{gf_brute, vsasm_bottom};
    use crate::lattice::families;
    use crate::poly::case2;

    fn example() -> PpPair {
        PpPair::from_rows(
            vec![vec![9, 7, 7, 5], vec![8, 6, 6, 4], vec![6, 5, 3], vec![4, 4], vec![3, 2], vec![2]],
            vec![vec![6, 5, 4, 2], vec![5, 4, 3, 1], vec![4, 2, 1], vec![3, 1], vec![2, 1], vec![1]],
        )
        .unwrap()
    }

    #[test]
    fn example_weight() {
        let e = example().weight_exps();
        assert_eq!(e, vec![7, 9, 5, 3, 4, 4, 6, 6, 5]);
    }

    #[test]
    fn order_one_pairs() {
        let s = Std::new(1);
        let pairs = enumerate_pairs(1);
        let weights: Vec<LaurentPoly> = pairs.iter().map(|p| p.weight()).collect();
        assert_eq!(weights.len(), 3);
        assert!(weights.contains(&s.w()));
        assert!(weights.contains(&(&s.u() * &s.x(1, 1))));
        assert!(weights.contains(&(&s.v() * &s.x(1, -1))));
    }

    #[test]
    fn order_two_pairs() {
        let pairs = enumerate_pairs(2);
        assert_eq!(pairs.len(), 45);
        let alpha = Std::new(2).alpha;
        let sum = LaurentPoly::sum(&alpha, pairs.iter().map(|p| p.weight()).collect::<Vec<_>>().iter());
        assert_eq!(sum, case2());
        assert_eq!(enum_gf_pairs(2), case2());
    }

    #[test]
    fn pairs_match_brute_force() {
        for n in 1..=3 {
            assert_eq!(enum_gf_pairs(n), gf_brute(&vsasm_bottom(n)).unwrap(), "n={n}");
        }
    }

    #[test]
    fn w_degree_counts_missing_cells() {
        for pair in enumerate_pairs(3) {
            assert_eq!(pair.weight_exps()[2] as usize, 6 - pair.q.size());
        }
    }

    #[test]
    fn validation() {
        assert!(Cspp::new(vec![vec![3], vec![2]]).is_ok());
        assert!(Cspp::new(vec![vec![2], vec![2]]).is_err());
        assert!(Cspp::new(vec![vec![], vec![3]]).is_err());
        assert!(Rspp::new(vec![vec![2, 2], vec![1]]).is_err());
        assert!(Rspp::new(vec![vec![2, 1], vec![1]]).is_ok());
        assert!(PpPair::from_rows(vec![vec![1], vec![]], vec![vec![1, 1], vec![]]).is_err());
    }

    #[test]
    fn figure_family_is_the_example_pair() {
        let starts: [Pt; 6] = [(1, 2), (2, 4), (3, 6), (4, 8), (5, 10), (6, 12)];
        // D = down, R = right, L = diagonal down-left
        let words = [
            "RDL",
            "DRDRDLL",
            "DDRRDDDLDL",
            "DDRDRDDRDDLLDL",
            "DDRDDRRDDRDDDLDLLL",
            "DDDRDDRRDDRDDDDDLDLLL",
        ];
        let paths: Vec<Vec<Pt>> = starts
            .iter()
            .zip(words)
            .map(|(&s, w)| {
                let steps: Vec<Pt> = w
                    .chars()
                    .map(|c| match c {
                        'D' => (0, -1),
                        'R' => (1, 0),
                        _ => (-1, -1),
                    })
                    .collect();
                path_from_steps(s, &steps)
            })
            .collect();
        let f = weigh_family(Interpretation::Jt4, 6, &paths).unwrap();
        let s = Std::new(6);
        let caption = LaurentPoly::monomial(&s.alpha, 1, &[7, 9, 5, -2, -1, -1, 1, 1, 0]);
        assert_eq!(f.weight, &caption * &s.x_all(5));
        let pair = paths3_to_pair(&f).unwrap();
        assert_eq!(pair, example());
        assert_eq!(pair.weight(), f.weight);
        assert_eq!(pair_to_paths3(&pair).unwrap(), f);
    }

    #[test]
    fn paths_and_pairs_round_trip() {
        for n in 1..=3 {
            let fams = families(Interpretation::Jt4, n);
            assert_eq!(fams.len(), enumerate_pairs(n).len());
            let mut seen = std::collections::HashSet::new();
            for f in fams {
                let pair = paths3_to_pair(&f).unwrap();
                assert_eq!(pair.weight(), f.weight);
                assert_eq!(pair_to_paths3(&pair).unwrap(), f);
                assert!(seen.insert(pair));
            }
        }
    }

    #[test]
    fn magog_example() {
        let q = example().q;
        let t = rspp_to_ssyt(&q);
        assert_eq!(t, vec![vec![1, 2, 3, 4, 5, 6], vec![2, 3, 5, 6, 6], vec![3, 4, 6], vec![5, 6]]);
        let gt = ssyt_to_gt(&t, 6);
        assert_eq!(
            gt,
            vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![0, 2, 2, 4], vec![0, 1, 2, 3, 5], vec![0, 0, 2, 3, 5, 6]]
        );
        let m = rspp_to_magog(&q).unwrap();
        assert_eq!(
            m.rows,
            vec![
                vec![1],
                vec![1, 2],
                vec![1, 2, 3],
                vec![1, 2, 3, 4],
                vec![1, 1, 3, 3, 5],
                vec![1, 1, 2, 3, 4, 6],
                vec![1, 1, 1, 3, 4, 6, 7]
            ]
        );
        assert_eq!(magog_to_rspp(&m).unwrap(), q);
    }

    #[test]
    fn empty_rspp() {
        let q = Rspp::new(vec![vec![]]).unwrap();
        assert_eq!(rspp_to_magog(&q).unwrap().rows, vec![vec![1], vec![1, 1]]);
    }

    #[test]
    fn magog_bijection() {
        let want = [2, 7, 42, 429];
        for n in 1..=4 {
            let qs = all_rspps(n);
            assert_eq!(qs.len(), want[n - 1]);
            let all = magog_triangles(n + 1);
            assert_eq!(all.len(), want[n - 1]);
            let mut seen = std::collections::HashSet::new();
            for q in qs {
                let m = rspp_to_magog(&q).unwrap();
                assert_eq!(magog_to_rspp(&m).unwrap(), q);
                assert!(seen.insert(m));
            }
        }
    }

    #[test]
    fn pair_json_round_trip() {
        let p = example();
        let j = p.to_json();
        assert!(j.starts_with(r#"{"P":[[9,7,7,5]"#));
        assert_eq!(PpPair::from_json(&j).unwrap(), p);
    }
}
