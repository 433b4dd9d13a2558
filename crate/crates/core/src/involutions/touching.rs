//! Families of the first path model after the per-path cancellation: path `i`
//! starts at `(-i,i)`, moves with `(1,1)` and green `(1,0)` steps (weight `w`)
//! to `(0,p_i)`, descends diagonally to `(p_i - 1, 1)` and finishes with
//! `(0,-1)` steps and horizontal `(-1,0)` steps, where each maximal horizontal
//! run consists of red steps (`uX_d`) followed by blue ones (`vX_d^{-1}`), `d`
//! being the distance from `y = 2`. The family is non-intersecting for
//! `x <= 0`; below `y = 1` paths may cross. The sign is that of the
//! connection permutation.
//!
//! The point of a run between its red and blue parts is its center. Two paths
//! intersect strongly when they share a vertical step or when a common part
//! of their runs at some height contains a center. The involution swaps the
//! tails of the first strongly intersecting pair; families without such a
//! pair are connected by the identity and correspond to pairs of plane
//! partitions.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::{Color, ColoredPath, Report, Step, System};
use crate::error::{Error, Result};
use crate::lattice::Pt;
use crate::poly::{Exps, LaurentPoly, Std};
use crate::pp::{enum_gf_pairs, enumerate_pairs, PpPair, Rows};
use crate::util::perm_sign;

pub const UP: Pt = (1, 1);
pub const FLAT: Pt = (1, 0);
pub const DIAG: Pt = (1, -1);
pub const LEFT: Pt = (-1, 0);
pub const DOWN: Pt = (0, -1);

fn plain(d: Pt) -> Step {
    Step::new(d, Color::Plain)
}

/// Path `i` (1-based) is `paths[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    pub paths: Vec<ColoredPath>,
}

/// Horizontal run at height `y`: entered at `x = s`, centered at `c`, left at
/// `e`. `last` marks the height where the path ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Section {
    y: i32,
    s: i32,
    c: i32,
    e: i32,
    last: bool,
}

/// Index of the point `(p - 1, 1)` where the lowest region begins.
fn lower_start(path: &ColoredPath) -> Option<usize> {
    let pts = path.points();
    let axis = pts.iter().position(|q| q.0 == 0)?;
    (axis..pts.len()).find(|&k| pts[k].1 == 1)
}

fn sections(path: &ColoredPath) -> Vec<Section> {
    let Some(m) = lower_start(path) else { return Vec::new() };
    let pts = path.points();
    let mut out = Vec::new();
    let (mut x, mut y) = pts[m];
    let mut cur = Section { y, s: x, c: x, e: x, last: false };
    for st in &path.steps[m..] {
        match st.d {
            LEFT => {
                x -= 1;
                if st.color == Color::Red {
                    cur.c = x;
                }
                cur.e = x;
            }
            _ => {
                out.push(cur);
                y -= 1;
                cur = Section { y, s: x, c: x, e: x, last: false };
            }
        }
    }
    cur.last = true;
    out.push(cur);
    out
}

impl Family {
    pub fn n(&self) -> usize {
        self.paths.len()
    }

    /// `sigma[i]` is the 0-based index of the end point reached by path `i`.
    pub fn sigma(&self) -> Vec<usize> {
        self.paths.iter().map(|p| (p.end().0) as usize).collect()
    }

    pub fn sign(&self) -> i32 {
        perm_sign(&self.sigma())
    }

    /// Sign and exponents over `u, v, w, X1..Xn`, including `prod X_i^{n-1}`.
    pub fn weight_exps(&self) -> (i32, Vec<i32>) {
        let n = self.n();
        let mut e = vec![0i32; 3 + n];
        for x in e.iter_mut().skip(3) {
            *x = n as i32 - 1;
        }
        for path in &self.paths {
            let mut y = path.start.1;
            for st in &path.steps {
                match (st.d, st.color) {
                    (FLAT, _) => e[2] += 1,
                    (LEFT, Color::Red) => {
                        e[0] += 1;
                        e[(4 - y) as usize] += 1;
                    }
                    (LEFT, _) => {
                        e[1] += 1;
                        e[(4 - y) as usize] -= 1;
                    }
                    _ => {}
                }
                y += st.d.1;
            }
        }
        (self.sign(), e)
    }

    pub fn weight(&self) -> LaurentPoly {
        let (sign, e) = self.weight_exps();
        LaurentPoly::monomial(&Std::new(self.n()).alpha, sign, &e)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n() as i32;
        let bad = |msg: String| Err(Error::Structure(msg));
        let mut ends = vec![false; n as usize];
        let mut left_pts: HashSet<Pt> = HashSet::new();
        for (idx, path) in self.paths.iter().enumerate() {
            let i = idx as i32 + 1;
            if path.start != (-i, i) {
                return bad(format!("path {i} starts at {:?}", path.start));
            }
            let pts = path.points();
            let Some(m) = lower_start(path) else { return bad(format!("path {i} never reaches y = 1 right of the axis")) };
            let axis = pts.iter().position(|q| q.0 == 0).expect("found above");
            for (k, st) in path.steps.iter().enumerate() {
                let ok = if k < axis {
                    (st.d == UP && st.color == Color::Plain) || (st.d == FLAT && st.color == Color::Green)
                } else if k < m {
                    *st == plain(DIAG)
                } else {
                    (st.d == LEFT && matches!(st.color, Color::Red | Color::Blue)) || *st == plain(DOWN)
                };
                if !ok {
                    return bad(format!("path {i} has an illegal step {st:?} at position {k}"));
                }
            }
            if pts[m..].iter().any(|q| q.0 < 0) {
                return bad(format!("path {i} crosses the axis below y = 1"));
            }
            for q in &pts[..=axis] {
                if !left_pts.insert(*q) {
                    return bad(format!("paths meet at {q:?} left of the axis"));
                }
            }
            let end = path.end();
            let j = end.0 + 1;
            if j < 1 || j > n || end.1 != 2 - j || std::mem::replace(&mut ends[(j - 1) as usize], true) {
                return bad(format!("path {i} ends at {end:?}"));
            }
            let mut seen_blue = false;
            for st in &path.steps[m..] {
                match st.color {
                    Color::Blue => seen_blue = true,
                    Color::Red if seen_blue => return bad(format!("path {i} has a red step after a blue one in a run")),
                    _ if st.d == DOWN => seen_blue = false,
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        self.paths.iter().map(|p| p.describe()).collect::<Vec<_>>().join(" | ")
    }
}

fn shared_verticals(a: &[Section], b: &[Section]) -> Vec<Pt> {
    a.iter()
        .filter(|sa| !sa.last)
        .filter_map(|sa| b.iter().find(|sb| sb.y == sa.y && !sb.last && sb.e == sa.e).map(|_| (sa.e, sa.y)))
        .collect()
}

/// Heights where the runs of both paths overlap in a set containing a center.
fn strong_heights(a: &[Section], b: &[Section]) -> Vec<(Section, Section)> {
    a.iter()
        .filter_map(|sa| {
            let sb = b.iter().find(|sb| sb.y == sa.y)?;
            let lo = sa.e.max(sb.e);
            let hi = sa.s.min(sb.s);
            let inside = |c: i32| lo <= c && c <= hi;
            (lo <= hi && (inside(sa.c) || inside(sb.c))).then_some((*sa, *sb))
        })
        .collect()
}

fn strongly_intersect(a: &[Section], b: &[Section]) -> bool {
    !shared_verticals(a, b).is_empty() || !strong_heights(a, b).is_empty()
}

/// The first pair `(i, k)`, `i < k`, in lexicographic order that intersects strongly.
fn canonical_pair(f: &Family) -> Option<(usize, usize)> {
    let secs: Vec<Vec<Section>> = f.paths.iter().map(sections).collect();
    let n = f.n();
    (0..n).flat_map(|i| (i + 1..n).map(move |k| (i, k))).find(|&(i, k)| strongly_intersect(&secs[i], &secs[k]))
}

/// Exchanges the parts of paths `i` and `k` after their common point `q`.
fn swap_tails(f: &Family, i: usize, k: usize, q: Pt) -> Result<Family> {
    let at = |path: &ColoredPath| {
        let m = lower_start(path).unwrap_or(0);
        path.points().iter().skip(m).position(|p| *p == q).map(|t| t + m)
    };
    let (a, b) = (&f.paths[i], &f.paths[k]);
    let (Some(ia), Some(ib)) = (at(a), at(b)) else {
        return Err(Error::Consistency(format!("{q:?} is not a common point of paths {} and {}", i + 1, k + 1)));
    };
    let mut paths = f.paths.clone();
    paths[i] = ColoredPath::new(a.start, a.steps[..ia].iter().chain(&b.steps[ib..]).copied().collect());
    paths[k] = ColoredPath::new(b.start, b.steps[..ib].iter().chain(&a.steps[ia..]).copied().collect());
    Ok(Family { paths })
}

/// Swap point inside the lowest strongly intersecting pair of runs. `a` is the
/// run entered further right.
fn run_swap_point(a: Section, b: Section) -> Pt {
    let x = if a.e > b.e {
        let overlap = b.e.max(a.e)..=a.s.min(b.s);
        if overlap.contains(&a.c) && b.c < a.e {
            b.s
        } else {
            a.e
        }
    } else if a.c < b.e {
        b.s
    } else {
        b.e
    };
    (x, a.y)
}

/// `None` for families without a strongly intersecting pair.
pub fn touching_involution(f: &Family) -> Result<Option<Family>> {
    f.validate()?;
    let Some((i, k)) = canonical_pair(f) else { return Ok(None) };
    let (si, sk) = (sections(&f.paths[i]), sections(&f.paths[k]));
    let q = if let Some(&(x, y)) = shared_verticals(&si, &sk).iter().min_by_key(|p| p.1) {
        (x, y - 1)
    } else {
        let (s1, s2) = *strong_heights(&si, &sk).iter().min_by_key(|p| p.0.y).expect("strong pair");
        if s1.s == s2.s {
            return Err(Error::Consistency("runs share their entry without a shared vertical".into()));
        }
        if s1.s > s2.s {
            run_swap_point(s1, s2)
        } else {
            run_swap_point(s2, s1)
        }
    };
    swap_tails(f, i, k, q).map(Some)
}

/// Reads a family connected by the identity as a pair: the horizontal steps
/// of path `i` below `y = 1` give row `i` of `P` (red `2d - 1`, blue `2d`),
/// the values `y - x - 1` at the start of its `(1,1)` steps give `Q'`, and
/// `Q` is `Q'` shifted down by row and column.
pub fn to_pair(f: &Family) -> Result<PpPair> {
    let n = f.n();
    if f.sigma().iter().enumerate().any(|(i, &s)| i != s) {
        return Err(Error::Structure("connection is not the identity".into()));
    }
    let mut p_rows: Rows = vec![Vec::new(); n];
    let mut q_rows: Rows = vec![Vec::new(); n];
    for (idx, path) in f.paths.iter().enumerate() {
        let i = idx + 1;
        let pts = path.points();
        let mut row = Vec::new();
        let mut q = Vec::new();
        for (st, &(x, y)) in path.steps.iter().zip(&pts) {
            match (st.d, st.color) {
                (UP, _) => {
                    let c = q.len();
                    let v = (y - x - 1) - (i - 1 + c) as i32;
                    q.push(u32::try_from(v).map_err(|_| Error::Structure(format!("Q entry {v} in row {i}")))?);
                }
                (LEFT, Color::Red) => row.push((2 * (2 - y) - 1) as u32),
                (LEFT, _) => row.push((2 * (2 - y)) as u32),
                _ => {}
            }
        }
        row.sort_unstable_by(|a, b| b.cmp(a));
        p_rows[n - i] = row;
        q_rows[n - i] = q;
    }
    PpPair::from_rows(p_rows, q_rows)
}

/// Inverse of [`to_pair`].
pub fn from_pair(pair: &PpPair) -> Result<Family> {
    let n = pair.n();
    let mut paths = Vec::with_capacity(n);
    for i in 1..=n {
        let (prow, qrow) = (&pair.p.rows[n - i], &pair.q.rows[n - i]);
        let ii = i as i32;
        let (mut x, mut y) = (-ii, ii);
        let mut steps = Vec::new();
        for (c, &qv) in qrow.iter().enumerate() {
            let target = qv as i32 + ii - 1 + c as i32 + 1;
            while y - x > target && x < 0 {
                steps.push(Step::new(FLAT, Color::Green));
                x += 1;
            }
            if y - x != target || x >= 0 {
                return Err(Error::Structure(format!("Q entry {qv} unreachable in row {i}")));
            }
            steps.push(plain(UP));
            x += 1;
            y += 1;
        }
        while x < 0 {
            steps.push(Step::new(FLAT, Color::Green));
            x += 1;
        }
        while y > 1 {
            steps.push(plain(DIAG));
            y -= 1;
        }
        for d in 1..=ii {
            let reds = prow.iter().filter(|&&e| e == 2 * d as u32 - 1).count();
            let blues = prow.iter().filter(|&&e| e == 2 * d as u32).count();
            steps.extend(std::iter::repeat_n(Step::new(LEFT, Color::Red), reds));
            steps.extend(std::iter::repeat_n(Step::new(LEFT, Color::Blue), blues));
            if d < ii {
                steps.push(plain(DOWN));
            }
        }
        paths.push(ColoredPath::new((-ii, ii), steps));
    }
    let f = Family { paths };
    f.validate()?;
    Ok(f)
}

/// Upper parts `(-i,i) -> (0,p)` as step words.
fn upper_words(i: i32) -> Vec<Vec<Step>> {
    (0..1u32 << i)
        .map(|mask| {
            (0..i)
                .map(|b| if mask >> b & 1 == 1 { plain(UP) } else { Step::new(FLAT, Color::Green) })
                .collect()
        })
        .collect()
}

/// Colored lower parts from `(a, 1)` down `h - 1` rows ending at `x = b`.
fn lower_words(a: i32, b: i32, h: i32) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    fn go(x: i32, b: i32, rows_left: i32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        for len in 0..=(x - b) {
            if rows_left == 0 && len != x - b {
                continue;
            }
            for reds in 0..=len {
                let mark = cur.len();
                cur.extend(std::iter::repeat_n(Step::new(LEFT, Color::Red), reds as usize));
                cur.extend(std::iter::repeat_n(Step::new(LEFT, Color::Blue), (len - reds) as usize));
                if rows_left == 0 {
                    out.push(cur.clone());
                } else {
                    cur.push(plain(DOWN));
                    go(x - len, b, rows_left - 1, cur, out);
                }
                cur.truncate(mark);
            }
        }
    }
    go(a, b, h - 1, &mut Vec::new(), &mut out);
    out
}

/// Non-intersecting choices of the parts left of the axis, as words together
/// with the heights `p_i` where they reach it.
fn upper_families(n: usize) -> Vec<Vec<(Vec<Step>, i32)>> {
    let mut out = Vec::new();
    fn go(i: i32, n: i32, used: &mut HashSet<Pt>, cur: &mut Vec<(Vec<Step>, i32)>, out: &mut Vec<Vec<(Vec<Step>, i32)>>) {
        if i > n {
            out.push(cur.clone());
            return;
        }
        for w in upper_words(i) {
            let path = ColoredPath::new((-i, i), w.clone());
            let pts = path.points();
            if pts.iter().any(|q| used.contains(q)) {
                continue;
            }
            used.extend(pts.iter().copied());
            cur.push((w, path.end().1));
            go(i + 1, n, used, cur, out);
            cur.pop();
            for q in &pts {
                used.remove(q);
            }
        }
    }
    go(1, n as i32, &mut HashSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Every family of order `n`, grouped by the choice of upper parts and connection.
fn family_groups(n: usize) -> Vec<Vec<Vec<ColoredPath>>> {
    let mut groups = Vec::new();
    for ups in upper_families(n) {
        for (sigma, _) in crate::util::permutations_with_sign(n) {
            if ups.iter().zip(&sigma).any(|((_, p), &s)| *p - 1 < s as i32) {
                continue;
            }
            let per_path: Vec<Vec<ColoredPath>> = ups
                .iter()
                .zip(&sigma)
                .enumerate()
                .map(|(idx, ((w, p), &s))| {
                    let i = idx as i32 + 1;
                    let mut head = w.clone();
                    head.extend(std::iter::repeat_n(plain(DIAG), (*p - 1) as usize));
                    lower_words(p - 1, s as i32, s as i32 + 1)
                        .into_iter()
                        .map(|lo| {
                            let mut steps = head.clone();
                            steps.extend(lo);
                            ColoredPath::new((-i, i), steps)
                        })
                        .collect()
                })
                .collect();
            groups.push(per_path);
        }
    }
    groups
}

fn for_each_in_product(choices: &[Vec<ColoredPath>], mut visit: impl FnMut(Family)) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        visit(Family { paths: idx.iter().zip(choices).map(|(&k, c)| c[k].clone()).collect() });
        let mut t = choices.len();
        loop {
            if t == 0 {
                return;
            }
            t -= 1;
            idx[t] += 1;
            if idx[t] < choices[t].len() {
                break;
            }
            idx[t] = 0;
        }
    }
}

/// Every family of order `n`; meant for `n <= 3`.
pub fn families(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for g in family_groups(n) {
        for_each_in_product(&g, |f| out.push(f));
    }
    out
}

#[derive(Default)]
struct Tally {
    checked: u64,
    fixed: u64,
    signed: HashMap<Exps, BigInt>,
    on_fixed: HashMap<Exps, BigInt>,
    pairs: Vec<PpPair>,
    failures: Vec<String>,
}

impl Tally {
    fn fail(&mut self, msg: String) {
        if self.failures.len() < 10 {
            self.failures.push(msg);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.fixed += other.fixed;
        for (k, v) in other.signed {
            *self.signed.entry(k).or_default() += v;
        }
        for (k, v) in other.on_fixed {
            *self.on_fixed.entry(k).or_default() += v;
        }
        self.pairs.extend(other.pairs);
        for m in other.failures {
            self.fail(m);
        }
        self
    }

    fn visit(&mut self, f: Family) {
        self.checked += 1;
        let (sign, e) = f.weight_exps();
        *self.signed.entry(e.clone().into()).or_default() += sign;
        match touching_involution(&f) {
            Ok(None) => {
                self.fixed += 1;
                *self.on_fixed.entry(e.clone().into()).or_default() += sign;
                match to_pair(&f) {
                    Ok(pair) => {
                        if pair.weight_exps() != e || sign != 1 {
                            self.fail(format!("pair weight differs for {}", f.describe()));
                        }
                        if from_pair(&pair).as_ref().ok() != Some(&f) {
                            self.fail(format!("pair does not lead back to {}", f.describe()));
                        }
                        self.pairs.push(pair);
                    }
                    Err(err) => self.fail(format!("{}: {err}", f.describe())),
                }
            }
            Ok(Some(g)) => {
                if g == f || g.validate().is_err() {
                    self.fail(format!("bad image of {}", f.describe()));
                }
                let (sg, eg) = g.weight_exps();
                if sg != -sign || eg != e {
                    self.fail(format!("weight not negated at {}", f.describe()));
                }
                if !matches!(touching_involution(&g), Ok(Some(ref h)) if *h == f) {
                    self.fail(format!("not an involution at {}", f.describe()));
                }
            }
            Err(err) => self.fail(format!("{}: {err}", f.describe())),
        }
    }
}

pub fn verify(n: usize) -> Report {
    let mut rep = Report::new(System::Touching, json!({"n": n}));
    let tally = family_groups(n)
        .into_par_iter()
        .map(|g| {
            let mut t = Tally::default();
            for_each_in_product(&g, |f| t.visit(f));
            t
        })
        .reduce(Tally::default, Tally::merge);
    for m in &tally.failures {
        rep.fail(m.clone());
    }
    let alpha = Std::new(n).alpha;
    let signed = LaurentPoly::from_map(&alpha, tally.signed);
    let on_fixed = LaurentPoly::from_map(&alpha, tally.on_fixed);
    let want = enum_gf_pairs(n);
    rep.check(signed == want && on_fixed == want, || format!("signed {signed}, fixed {on_fixed}, pairs {want}"));
    let got: HashSet<PpPair> = tally.pairs.iter().cloned().collect();
    let all = enumerate_pairs(n);
    rep.check(got.len() == tally.pairs.len() && got == all.into_iter().collect(), || {
        "fixed families are not in bijection with the pairs".into()
    });
    rep.inputs_checked = tally.checked;
    rep.fixed_points = tally.fixed;
    rep.signed_sum = serde_json::to_value(signed.to_json_value()).expect("poly json");
    rep
}

pub fn verify_all(max_n: usize) -> Vec<Report> {
    (1..=max_n).map(verify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_pair() -> PpPair {
        PpPair::from_rows(
            vec![vec![9, 7, 7, 5], vec![8, 6, 6, 4], vec![6, 5, 3], vec![4, 4], vec![3, 2], vec![2]],
            vec![vec![6, 5, 4, 2], vec![5, 4, 3, 1], vec![4, 2, 1], vec![3, 1], vec![2, 1], vec![1]],
        )
        .unwrap()
    }

    #[test]
    fn order_one() {
        assert_eq!(families(1).len(), 3);
        let r = verify(1);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.fixed_points, 3);
    }

    #[test]
    fn order_two() {
        let r = verify(2);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.fixed_points as usize, enumerate_pairs(2).len());
    }

    #[test]
    fn order_three() {
        let r = verify(3);
        assert!(r.passed(), "{:#?}", r.failures);
    }

    #[test]
    fn example_family_round_trip() {
        let pair = example_pair();
        let f = from_pair(&pair).unwrap();
        assert_eq!(touching_involution(&f).unwrap(), None);
        assert_eq!(to_pair(&f).unwrap(), pair);
        assert_eq!(f.weight(), pair.weight());
        // upper parts as drawn
        let ups: Vec<i32> = f.paths.iter().map(|p| p.points().iter().find(|q| q.0 == 0).unwrap().1).collect();
        assert_eq!(ups, vec![2, 4, 5, 7, 9, 10]);
    }

    #[test]
    fn shared_vertical_swap() {
        let red = Step::new(LEFT, Color::Red);
        let p1 = ColoredPath::new((-1, 1), vec![plain(UP), plain(DIAG), red]);
        let mut s2 = vec![plain(UP), plain(UP)];
        s2.extend([plain(DIAG); 3]);
        s2.extend([red, plain(DOWN), plain(DOWN)]);
        let mut s3 = vec![plain(UP); 3];
        s3.extend([plain(DIAG); 5]);
        s3.extend([red, red, red, plain(DOWN), Step::new(LEFT, Color::Blue)]);
        let f = Family { paths: vec![p1, ColoredPath::new((-2, 2), s2), ColoredPath::new((-3, 3), s3)] };
        f.validate().unwrap();
        assert_eq!(f.sigma(), vec![0, 2, 1]);
        let g = touching_involution(&f).unwrap().unwrap();
        assert_eq!(g.sigma(), vec![0, 1, 2]);
        assert_eq!(g.weight(), -f.weight());
        assert_eq!(touching_involution(&g).unwrap(), Some(f));
    }
}

