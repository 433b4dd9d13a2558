//! Reflected paths from `(2j-1, 1-j)` to `(i, i)`.
//!
//! The lower part climbs with `(-1,1)` and `(0,1)` steps up to the last point
//! `(0,p)` it visits on the `y`-axis; the upper part then moves with `(1,-1)`
//! and `(1,0)` steps, each `(1,0)` carrying a sign. Both parts may share a run
//! of diagonal steps ending in `(0,p)`; the involution moves the far end `P`
//! of that run up or down by one unit. Paths whose shared run reaches
//! `(i,i)` are fixed and number `C(i+j-1, 2j-i-1)`.

use rayon::prelude::*;
use serde_json::json;

use super::{Color, ColoredPath, Report, Step, System};
use crate::error::{Error, Result};
use crate::lattice::Pt;
use crate::util::binom;

pub const UP_LEFT: Pt = (-1, 1);
pub const UP: Pt = (0, 1);
pub const DIAG: Pt = (1, -1);
pub const RIGHT: Pt = (1, 0);

fn plain(d: Pt) -> Step {
    Step::new(d, Color::Plain)
}

fn words(a: usize, b: usize, x: Pt, y: Pt) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    fn go(a: usize, b: usize, x: Pt, y: Pt, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if a == 0 && b == 0 {
            out.push(cur.clone());
            return;
        }
        if a > 0 {
            cur.push(plain(x));
            go(a - 1, b, x, y, cur, out);
            cur.pop();
        }
        if b > 0 {
            cur.push(plain(y));
            go(a, b - 1, x, y, cur, out);
            cur.pop();
        }
    }
    go(a, b, x, y, &mut Vec::new(), &mut out);
    out
}

pub fn start(j: i32) -> Pt {
    (2 * j - 1, 1 - j)
}

/// All paths for `(i, j)`, over every admissible touching height `p`.
pub fn paths(i: i32, j: i32) -> Vec<ColoredPath> {
    let mut out = Vec::new();
    for p in i.max(j)..=2 * i {
        let lowers = words((2 * j - 1) as usize, (p - j) as usize, UP_LEFT, UP);
        let uppers = words((p - i) as usize, (2 * i - p) as usize, DIAG, RIGHT);
        for lo in &lowers {
            for up in &uppers {
                let mut steps = lo.clone();
                steps.extend_from_slice(up);
                out.push(ColoredPath::new(start(j), steps));
            }
        }
    }
    out
}

pub fn sign(path: &ColoredPath) -> i32 {
    if path.steps.iter().filter(|s| s.d == RIGHT).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Index of the step that leaves the `y`-axis, i.e. the length of the lower part.
pub fn split(path: &ColoredPath) -> Result<usize> {
    let pts = path.points();
    pts.iter().rposition(|q| q.0 == 0).ok_or_else(|| Error::Structure("path never reaches the y-axis".into()))
}

pub fn validate(path: &ColoredPath, i: i32, j: i32) -> Result<()> {
    if path.start != start(j) || path.end() != (i, i) {
        return Err(Error::Structure(format!("path must run from {:?} to ({i},{i})", start(j))));
    }
    let m = split(path)?;
    let pts = path.points();
    if pts[..m].iter().any(|q| q.0 < 0) {
        return Err(Error::Structure("lower part crosses the y-axis".into()));
    }
    if path.steps[..m].iter().any(|s| s.d != UP_LEFT && s.d != UP) || path.steps[m..].iter().any(|s| s.d != DIAG && s.d != RIGHT)
    {
        return Err(Error::Structure("illegal step".into()));
    }
    Ok(())
}

/// Length `k` of the shared diagonal run starting at `(0,p)`.
fn shared_run(path: &ColoredPath, m: usize) -> usize {
    let lead = path.steps[m..].iter().take_while(|s| s.d == DIAG).count();
    let trail = path.steps[..m].iter().rev().take_while(|s| s.d == UP_LEFT).count();
    lead.min(trail)
}

/// `None` for fixed points.
pub fn sum2_involution(path: &ColoredPath, i: i32, j: i32) -> Result<Option<ColoredPath>> {
    validate(path, i, j)?;
    let m = split(path)?;
    let k = shared_run(path, m);
    if k == i as usize {
        return Ok(None);
    }
    let mut steps = path.steps.clone();
    if steps[m + k].d == DIAG {
        let below = m.checked_sub(k + 1).ok_or_else(|| Error::Consistency("lower part too short".into()))?;
        if steps[below].d != UP {
            return Err(Error::Consistency("expected a vertical step below P".into()));
        }
        steps[m + k] = plain(RIGHT);
        steps.remove(below);
    } else {
        steps[m + k] = plain(DIAG);
        steps.insert(m - k, plain(UP));
    }
    Ok(Some(ColoredPath::new(path.start, steps)))
}

/// Left-hand side of the alternating sum, computed from binomials.
pub fn alternating_sum(i: i64, j: i64) -> i64 {
    (1..=2 * i)
        .map(|p| {
            let s = if (2 * i - p) % 2 == 0 { 1 } else { -1 };
            let t = binom(i, 2 * i - p) * binom(p + j - 1, p - j);
            s * i64::try_from(t).expect("small")
        })
        .sum()
}

pub fn verify(i: i32, j: i32) -> Report {
    let mut rep = Report::new(System::Sum2, json!({"i": i, "j": j}));
    let all = paths(i, j);
    let mut fixed = 0u64;
    let mut signed = 0i64;
    for x in &all {
        signed += sign(x) as i64;
        match sum2_involution(x, i, j) {
            Ok(None) => {
                fixed += 1;
                let m = split(x).unwrap();
                let p = x.points()[m].1;
                rep.check(p == 2 * i && shared_run(x, m) == i as usize, || format!("unexpected fixed point {}", x.describe()));
            }
            Ok(Some(y)) => {
                rep.check(&y != x && validate(&y, i, j).is_ok(), || format!("bad image of {}", x.describe()));
                rep.check(sign(&y) == -sign(x), || format!("sign kept on {}", x.describe()));
                let back = sum2_involution(&y, i, j);
                rep.check(matches!(back, Ok(Some(ref z)) if z == x), || format!("not an involution at {}", x.describe()));
            }
            Err(e) => rep.fail(format!("{}: {e}", x.describe())),
        }
    }
    let unrefined = binom((i + j - 1) as i64, (2 * j - i - 1) as i64);
    rep.check(unrefined == fixed.into() && signed == fixed as i64, || {
        format!("fixed {fixed}, signed {signed}, expected {unrefined}")
    });
    rep.check(alternating_sum(i as i64, j as i64) == signed, || "alternating sum disagrees".into());
    rep.inputs_checked = all.len() as u64;
    rep.fixed_points = fixed;
    rep.signed_sum = json!(signed);
    rep
}

pub fn verify_all(max_i: usize, max_j: usize) -> Vec<Report> {
    let params: Vec<(i32, i32)> =
        (1..=max_i as i32).flat_map(|i| (1..=max_j as i32).map(move |j| (i, j))).collect();
    params.into_par_iter().map(|(i, j)| verify(i, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(j: i32, ds: &[Pt]) -> ColoredPath {
        ColoredPath::new(start(j), ds.iter().map(|&d| plain(d)).collect())
    }

    #[test]
    fn figure_pair() {
        let left = path(3, &[UP, UP_LEFT, UP_LEFT, UP, UP, UP_LEFT, UP, UP_LEFT, UP_LEFT, DIAG, DIAG, DIAG, RIGHT]);
        let right = path(3, &[UP, UP_LEFT, UP_LEFT, UP, UP, UP_LEFT, UP_LEFT, UP_LEFT, DIAG, DIAG, RIGHT, RIGHT]);
        assert_eq!(left.points()[split(&left).unwrap()], (0, 7));
        assert_eq!(right.points()[split(&right).unwrap()], (0, 6));
        assert_eq!(sum2_involution(&left, 4, 3).unwrap(), Some(right.clone()));
        assert_eq!(sum2_involution(&right, 4, 3).unwrap(), Some(left));
    }

    #[test]
    fn example_path_weight() {
        let x = path(3, &[UP_LEFT, UP, UP, UP_LEFT, UP_LEFT, UP_LEFT, UP, UP_LEFT, RIGHT, RIGHT, DIAG, RIGHT, RIGHT]);
        assert_eq!(x.end(), (5, 5));
        assert_eq!(x.points()[split(&x).unwrap()], (0, 6));
        assert_eq!(sign(&x), 1);
        assert!(validate(&x, 5, 3).is_ok());
    }

    #[test]
    fn fixed_points_share_the_diagonal() {
        for x in paths(3, 3) {
            if sum2_involution(&x, 3, 3).unwrap().is_none() {
                let pts = x.points();
                let m = split(&x).unwrap();
                assert_eq!(&pts[m..], &[(0, 6), (1, 5), (2, 4), (3, 3)]);
            }
        }
    }

    #[test]
    fn two_two_nets_three() {
        let r = verify(2, 2);
        assert!(r.passed());
        assert_eq!(r.signed_sum, json!(3));
    }

    #[test]
    fn all_small() {
        for r in verify_all(5, 5) {
            assert!(r.passed(), "{r:?}");
        }
    }
}
