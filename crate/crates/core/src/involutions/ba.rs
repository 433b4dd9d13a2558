//! Rewriting between `B`-paths, plain paths `(0,p) -> (2j-1, 1-j)` with steps
//! `(1,-1)` and `(0,-1)`, and colored `A`-paths `(0,p) -> (j-1, 2-j)`.
//!
//! An `A`-path first uses green `(1,-1)` and `(0,-2)` steps down to its first
//! point on `y = 1`, then green `(0,-1)` steps and `(-1,0)` steps colored red
//! or blue. Its sign is `(-1)^{#(0,-2)}`. Expanding every `B`-path produces
//! every `A`-path exactly once, with its sign, so the signed count of
//! `A(j,p)` equals `|B(j,p)| = C(p+j-1, p-j)`.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde_json::json;

use super::{Color, ColoredPath, Report, Step, System};
use crate::error::{Error, Result};
use crate::lattice::Pt;
use crate::util::binom;

pub const DIAG: Pt = (1, -1);
pub const DOWN: Pt = (0, -1);
pub const DOUBLE: Pt = (0, -2);
pub const LEFT: Pt = (-1, 0);

fn green(d: Pt) -> Step {
    Step::new(d, Color::Green)
}

fn plain(d: Pt) -> Step {
    Step::new(d, Color::Plain)
}

pub fn b_end(j: i32) -> Pt {
    (2 * j - 1, 1 - j)
}

pub fn a_end(j: i32) -> Pt {
    (j - 1, 2 - j)
}

pub fn b_paths(p: i32, j: i32) -> Vec<ColoredPath> {
    let (diag, down) = (2 * j - 1, p - j);
    if p < 1 || j < 1 || down < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(d: i32, v: i32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if d == 0 && v == 0 {
            out.push(cur.clone());
            return;
        }
        if d > 0 {
            cur.push(plain(DIAG));
            go(d - 1, v, cur, out);
            cur.pop();
        }
        if v > 0 {
            cur.push(plain(DOWN));
            go(d, v - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(diag, down, &mut cur, &mut raw);
    for steps in raw {
        out.push(ColoredPath::new((0, p), steps));
    }
    out
}

/// Arrangements of `h` colored horizontals and `v` green verticals below `y = 1`.
fn lower_parts(h: i32, v: i32, colors: &[Color]) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    fn go(h: i32, v: i32, colors: &[Color], cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if h == 0 && v == 0 {
            out.push(cur.clone());
            return;
        }
        if h > 0 {
            for &c in colors {
                cur.push(Step::new(LEFT, c));
                go(h - 1, v, colors, cur, out);
                cur.pop();
            }
        }
        if v > 0 {
            cur.push(green(DOWN));
            go(h, v - 1, colors, cur, out);
            cur.pop();
        }
    }
    go(h, v, colors, &mut Vec::new(), &mut out);
    out
}

/// Green prefixes from `(0,p)` to `(q-1, 1)` with `t` double steps.
pub(crate) fn upper_parts(p: i32, t: i32) -> Vec<Vec<Step>> {
    let d = p - 1 - 2 * t;
    if d < 0 || t < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    fn go(d: i32, t: i32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if d == 0 && t == 0 {
            out.push(cur.clone());
            return;
        }
        if d > 0 {
            cur.push(green(DIAG));
            go(d - 1, t, cur, out);
            cur.pop();
        }
        if t > 0 {
            cur.push(green(DOUBLE));
            go(d, t - 1, cur, out);
            cur.pop();
        }
    }
    go(d, t, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn a_paths_colored(p: i32, j: i32, colors: &[Color]) -> Vec<ColoredPath> {
    let mut out = Vec::new();
    if p < 1 || j < 1 {
        return out;
    }
    let mut t = 0;
    while p - 2 * t >= 1 {
        let q = p - 2 * t;
        if q >= j {
            let lowers = lower_parts(q - j, j - 1, colors);
            for up in upper_parts(p, t) {
                for low in &lowers {
                    let mut steps = up.clone();
                    steps.extend_from_slice(low);
                    out.push(ColoredPath::new((0, p), steps));
                }
            }
        }
        t += 1;
    }
    out
}

pub fn a_paths(p: i32, j: i32) -> Vec<ColoredPath> {
    a_paths_colored(p, j, &[Color::Red, Color::Blue])
}

pub fn a_sign(a: &ColoredPath) -> i32 {
    if a.steps.iter().filter(|s| s.d == DOUBLE).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of steps before the first point on `y = 1`.
pub(crate) fn upper_len(a: &ColoredPath) -> Option<usize> {
    let mut y = a.start.1;
    if y == 1 {
        return Some(0);
    }
    for (k, s) in a.steps.iter().enumerate() {
        y += s.d.1;
        if y == 1 {
            return Some(k + 1);
        }
        if y < 1 {
            return None;
        }
    }
    None
}

pub fn validate_a(a: &ColoredPath, p: i32, j: i32) -> Result<()> {
    if a.start != (0, p) {
        return Err(Error::Structure(format!("A-path must start at (0,{p})")));
    }
    let k = upper_len(a).ok_or_else(|| Error::Structure("A-path misses the line y = 1".into()))?;
    for s in &a.steps[..k] {
        if s.color != Color::Green || (s.d != DIAG && s.d != DOUBLE) {
            return Err(Error::Structure(format!("bad step {s:?} above y = 1")));
        }
    }
    for s in &a.steps[k..] {
        let ok = (s.d == DOWN && s.color == Color::Green) || (s.d == LEFT && matches!(s.color, Color::Red | Color::Blue));
        if !ok {
            return Err(Error::Structure(format!("bad step {s:?} below y = 1")));
        }
    }
    if a.end() != a_end(j) {
        return Err(Error::Structure(format!("A-path ends at {:?}, expected {:?}", a.end(), a_end(j))));
    }
    Ok(())
}

pub fn validate_b(b: &ColoredPath, p: i32, j: i32) -> Result<()> {
    if b.start != (0, p) {
        return Err(Error::Structure(format!("B-path must start at (0,{p})")));
    }
    if b.steps.iter().any(|s| s.color != Color::Plain || (s.d != DIAG && s.d != DOWN)) {
        return Err(Error::Structure("B-paths use plain (1,-1) and (0,-1) steps".into()));
    }
    if b.end() != b_end(j) {
        return Err(Error::Structure(format!("B-path ends at {:?}, expected {:?}", b.end(), b_end(j))));
    }
    Ok(())
}

struct State {
    prefix: Vec<Step>,
    middle: VecDeque<Pt>,
    tail: Vec<Step>,
    sign: i32,
}

/// Rewrites a `B`-path into its signed list of `A`-paths.
pub fn b_to_a_expand(b: &ColoredPath, p: i32, j: i32) -> Result<Vec<(i32, ColoredPath)>> {
    validate_b(b, p, j)?;
    let mut out = Vec::new();
    let init = State {
        prefix: Vec::new(),
        middle: b.steps.iter().map(|s| s.d).collect(),
        tail: Vec::new(),
        sign: 1,
    };
    let mut stack = vec![init];
    while let Some(mut st) = stack.pop() {
        if st.middle.len() < 2 {
            let last = st.middle.pop_front();
            if last != Some(DIAG) {
                return Err(Error::Consistency(format!("leftover step {last:?} is not (1,-1)")));
            }
            let mut steps = st.prefix;
            steps.extend(st.tail);
            out.push((st.sign, ColoredPath::new(b.start, steps)));
            continue;
        }
        let s1 = st.middle.pop_front().unwrap();
        let s2 = st.middle[0];
        match (s1, s2) {
            (DIAG, DIAG) => {
                st.middle.pop_front();
                st.prefix.push(green(DIAG));
                st.tail.push(green(DOWN));
                stack.push(st);
            }
            (DIAG, _) => {
                st.middle[0] = DIAG;
                st.prefix.push(green(DIAG));
                st.tail.push(Step::new(LEFT, Color::Blue));
                stack.push(st);
            }
            (_, DIAG) => {
                st.prefix.push(green(DIAG));
                st.tail.push(Step::new(LEFT, Color::Red));
                stack.push(st);
            }
            _ => {
                let mut merged = State {
                    prefix: st.prefix.clone(),
                    middle: st.middle.iter().skip(1).copied().collect(),
                    tail: st.tail.clone(),
                    sign: -st.sign,
                };
                merged.prefix.push(green(DOUBLE));
                for c in [Color::Red, Color::Blue] {
                    let mut copy = State {
                        prefix: st.prefix.clone(),
                        middle: st.middle.clone(),
                        tail: st.tail.clone(),
                        sign: st.sign,
                    };
                    copy.prefix.push(green(DIAG));
                    copy.tail.push(Step::new(LEFT, c));
                    stack.push(copy);
                }
                stack.push(merged);
            }
        }
    }
    out.reverse();
    Ok(out)
}

/// Undoes the expansion: the unique `B`-path whose expansion contains `a`.
pub fn a_to_b(a: &ColoredPath, p: i32, j: i32) -> Result<ColoredPath> {
    validate_a(a, p, j)?;
    let k = upper_len(a).expect("validated");
    let mut begin: Vec<Pt> = a.steps[..k].iter().map(|s| s.d).collect();
    let mut tail: Vec<Step> = a.steps[k..].to_vec();
    let mut middle: VecDeque<Pt> = VecDeque::from([DIAG]);
    while let Some(&last) = begin.last() {
        begin.pop();
        if last == DOUBLE {
            middle.push_front(DOWN);
            middle.push_front(DOWN);
            continue;
        }
        let end = tail.pop().ok_or_else(|| Error::Consistency("ending section exhausted".into()))?;
        if end.d == DOWN {
            middle.push_front(DIAG);
            middle.push_front(DIAG);
        } else if middle[0] == DOWN || end.color == Color::Red {
            middle.push_front(DOWN);
        } else {
            middle[0] = DOWN;
            middle.push_front(DIAG);
        }
    }
    if !tail.is_empty() {
        return Err(Error::Consistency("ending section left over".into()));
    }
    let b = ColoredPath::new(a.start, middle.into_iter().map(plain).collect());
    if b.end() != b_end(j) {
        return Err(Error::Consistency(format!("B-path ends at {:?}", b.end())));
    }
    Ok(b)
}

pub fn verify(p: i32, j: i32) -> Report {
    let mut rep = Report::new(System::Ba, json!({"p": p, "j": j}));
    let bs = b_paths(p, j);
    let as_ = a_paths(p, j);
    let a_set: HashSet<&ColoredPath> = as_.iter().collect();
    // each A-path with the index of the B-path whose expansion produced it
    let mut produced: HashMap<ColoredPath, usize> = HashMap::new();
    for (bi, b) in bs.iter().enumerate() {
        match b_to_a_expand(b, p, j) {
            Ok(list) => {
                for (sign, a) in list {
                    rep.check(a_set.contains(&a), || format!("expansion produced a non-A-path {}", a.describe()));
                    rep.check(sign == a_sign(&a), || format!("sign mismatch for {}", a.describe()));
                    if produced.insert(a.clone(), bi).is_some() {
                        rep.fail(format!("A-path produced twice: {}", a.describe()));
                    }
                }
            }
            Err(e) => rep.fail(e.to_string()),
        }
    }
    rep.check(produced.len() == as_.len(), || format!("expansions cover {} of {} A-paths", produced.len(), as_.len()));
    let back_failures: Vec<String> = as_
        .par_iter()
        .filter_map(|a| match a_to_b(a, p, j) {
            Ok(b) => {
                let ok = validate_b(&b, p, j).is_ok() && produced.get(a).is_some_and(|&bi| bs[bi] == b);
                (!ok).then(|| format!("round trip failed for {}", a.describe()))
            }
            Err(e) => Some(format!("{}: {e}", a.describe())),
        })
        .collect();
    for f in back_failures {
        rep.fail(f);
    }
    let signed: i64 = as_.iter().map(|a| a_sign(a) as i64).sum();
    let want = binom((p + j - 1) as i64, (p - j) as i64);
    rep.check(want == signed.into() && bs.len() as i64 == signed, || {
        format!("signed count {signed}, |B| = {}, binomial {want}", bs.len())
    });
    rep.inputs_checked = (bs.len() + as_.len()) as u64;
    rep.fixed_points = bs.len() as u64;
    rep.signed_sum = json!(signed);
    rep
}

pub fn verify_all(max_p: usize, max_j: usize) -> Vec<Report> {
    let params: Vec<(i32, i32)> =
        (1..=max_j as i32).flat_map(|j| (1..=max_p as i32).map(move |p| (p, j))).collect();
    params.into_par_iter().map(|(p, j)| verify(p, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(start: Pt, steps: &[(Pt, Color)]) -> ColoredPath {
        ColoredPath::new(start, steps.iter().map(|&(d, c)| Step::new(d, c)).collect())
    }

    const G: Color = Color::Green;
    const R: Color = Color::Red;
    const B: Color = Color::Blue;

    #[test]
    fn smallest_case() {
        let bs = b_paths(1, 1);
        assert_eq!(bs.len(), 1);
        let out = b_to_a_expand(&bs[0], 1, 1).unwrap();
        assert_eq!(out, vec![(1, ColoredPath::new((0, 1), vec![]))]);
        assert_eq!(a_to_b(&out[0].1, 1, 1).unwrap(), bs[0]);
    }

    #[test]
    fn worked_expansion() {
        let p = |d| (d, Color::Plain);
        let b = path((0, 5), &[p(DIAG), p(DOWN), p(DIAG), p(DOWN), p(DOWN), p(DIAG)]);
        let out = b_to_a_expand(&b, 5, 2).unwrap();
        let first = path((0, 5), &[(DIAG, G), (DIAG, G), (DIAG, G), (DIAG, G), (LEFT, B), (DOWN, G), (LEFT, B), (LEFT, R)]);
        let second = path((0, 5), &[(DIAG, G), (DIAG, G), (DIAG, G), (DIAG, G), (LEFT, B), (DOWN, G), (LEFT, R), (LEFT, R)]);
        let third = path((0, 5), &[(DIAG, G), (DIAG, G), (DOUBLE, G), (LEFT, B), (DOWN, G)]);
        assert_eq!(out.len(), 3);
        assert!(out.contains(&(1, first)));
        assert!(out.contains(&(1, second)));
        assert!(out.contains(&(-1, third)));
        for (_, a) in &out {
            assert_eq!(a.end(), (1, 0));
            assert_eq!(a_to_b(a, 5, 2).unwrap(), b);
        }
    }

    #[test]
    fn worked_reduction() {
        let a = path(
            (0, 7),
            &[(DIAG, G), (DOUBLE, G), (DIAG, G), (DIAG, G), (DIAG, G), (LEFT, B), (DOWN, G), (LEFT, R), (LEFT, B)],
        );
        let p = |d| (d, Color::Plain);
        let b = path((0, 7), &[p(DOWN), p(DOWN), p(DOWN), p(DIAG), p(DIAG), p(DOWN), p(DIAG), p(DOWN)]);
        assert_eq!(a_to_b(&a, 7, 2).unwrap(), b);
        assert_eq!(a_sign(&a), -1);
    }

    #[test]
    fn signed_count_five_two() {
        let signed: i32 = a_paths(5, 2).iter().map(a_sign).sum();
        assert_eq!(signed, 20);
        assert_eq!(b_paths(5, 2).len(), 20);
    }

    #[test]
    fn exhaustive_small() {
        for j in 1..=3 {
            for p in 1..=6 {
                let r = verify(p, j);
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        let bad = path((0, 3), &[(DOWN, Color::Plain)]);
        assert!(b_to_a_expand(&bad, 3, 1).is_err());
        let bad_a = path((0, 3), &[(DOUBLE, G), (LEFT, B)]);
        assert!(a_to_b(&bad_a, 3, 1).is_err());
    }
}
