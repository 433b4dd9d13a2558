//! Single paths `(i,i) -> (2, 2-j)` of the second model. Above the line
//! `y = 1` they use `(0,-1)` and `(1,0)` steps, the latter colored red
//! (`uX_y`), blue (`vX_y^{-1}`) or green (`w`); from the last point `(t,1)` on
//! that line they finish with `(-1,-1)`, `(-2,-2)` and `(-2,-1)` steps of
//! weights `-w`, `-uv` and `1`.
//!
//! If `r` is the number of `(-2,-1)` steps right after `(t,1)`, the involution
//! looks at the last `r` steps before `(t,1)` and trades the occurrence of a
//! green step or a blue-then-red pair closest to `(t,1)` against a
//! `(-1,-1)` or `(-2,-2)` step below.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::{Color, ColoredPath, Report, Step, System};
use crate::error::{Error, Result};
use crate::lattice::{c_tj, Ctx, Pt};
use crate::poly::{homogeneous, Exps, LaurentPoly, Std};

pub const RIGHT: Pt = (1, 0);
pub const DOWN: Pt = (0, -1);
pub const SHORT: Pt = (-1, -1);
pub const DOUBLE: Pt = (-2, -2);
pub const KNIGHT: Pt = (-2, -1);

const LOWER: [Pt; 3] = [SHORT, DOUBLE, KNIGHT];

fn plain(d: Pt) -> Step {
    Step::new(d, Color::Plain)
}

/// Number of steps up to and including the last point on `y = 1`.
fn upper_len(path: &ColoredPath) -> usize {
    path.steps.iter().take_while(|s| !LOWER.contains(&s.d)).count()
}

pub fn validate(path: &ColoredPath, i: i32, j: i32) -> Result<()> {
    if path.start != (i, i) || path.end() != (2, 2 - j) {
        return Err(Error::Structure(format!("path must run from ({i},{i}) to (2,{})", 2 - j)));
    }
    let m = upper_len(path);
    let pts = path.points();
    if pts[m].1 != 1 || pts[..=m].iter().any(|q| q.1 < 1) {
        return Err(Error::Structure("upper part must stay on or above y = 1 and end there".into()));
    }
    for s in &path.steps[..m] {
        let ok = (s.d == RIGHT && s.color != Color::Plain) || (s.d == DOWN && s.color == Color::Plain);
        if !ok {
            return Err(Error::Structure(format!("bad upper step {s:?}")));
        }
    }
    if path.steps[m..].iter().any(|s| !LOWER.contains(&s.d) || s.color != Color::Plain) {
        return Err(Error::Structure("bad lower step".into()));
    }
    Ok(())
}

pub fn paths(i: i32, j: i32) -> Vec<ColoredPath> {
    let mut out = Vec::new();
    for t in (j + 1).max(i)..=2 * j {
        let uppers = upper_words(t - i, i - 1);
        let lowers = lower_words(t - 2, j - 1);
        for up in &uppers {
            for lo in &lowers {
                let mut steps = up.clone();
                steps.extend_from_slice(lo);
                out.push(ColoredPath::new((i, i), steps));
            }
        }
    }
    out
}

fn upper_words(h: i32, v: i32) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    fn go(h: i32, v: i32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if h == 0 && v == 0 {
            out.push(cur.clone());
            return;
        }
        if h > 0 {
            for c in [Color::Red, Color::Blue, Color::Green] {
                cur.push(Step::new(RIGHT, c));
                go(h - 1, v, cur, out);
                cur.pop();
            }
        }
        if v > 0 {
            cur.push(plain(DOWN));
            go(h, v - 1, cur, out);
            cur.pop();
        }
    }
    go(h, v, &mut Vec::new(), &mut out);
    out
}

/// Words in the three lower steps moving `dx` left and `dy` down.
fn lower_words(dx: i32, dy: i32) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    fn go(dx: i32, dy: i32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if dx == 0 && dy == 0 {
            out.push(cur.clone());
            return;
        }
        for d in LOWER {
            if dx + d.0 >= 0 && dy + d.1 >= 0 {
                cur.push(plain(d));
                go(dx + d.0, dy + d.1, cur, out);
                cur.pop();
            }
        }
    }
    go(dx, dy, &mut Vec::new(), &mut out);
    out
}

/// Sign and exponents over `u, v, w, X1..Xi`.
pub fn weight_exps(path: &ColoredPath, i: usize) -> (i32, Vec<i32>) {
    let mut e = vec![0i32; 3 + i];
    let mut sign = 1;
    let mut y = path.start.1;
    for s in &path.steps {
        match (s.d, s.color) {
            (RIGHT, Color::Red) => {
                e[0] += 1;
                e[2 + y as usize] += 1;
            }
            (RIGHT, Color::Blue) => {
                e[1] += 1;
                e[2 + y as usize] -= 1;
            }
            (RIGHT, _) => e[2] += 1,
            (SHORT, _) => {
                sign = -sign;
                e[2] += 1;
            }
            (DOUBLE, _) => {
                sign = -sign;
                e[0] += 1;
                e[1] += 1;
            }
            _ => {}
        }
        y += s.d.1;
    }
    (sign, e)
}

pub fn weight(path: &ColoredPath, i: usize) -> LaurentPoly {
    let (sign, e) = weight_exps(path, i);
    LaurentPoly::monomial(&Std::new(i).alpha, sign, &e)
}

enum Occurrence {
    Green(usize),
    Pair(usize),
}

/// Occurrence closest to `(t,1)` among the last `r` upper steps; `s` counts
/// positions backwards from `(t,1)` starting at 1.
fn closest(upper: &[Step], r: usize) -> Option<Occurrence> {
    let m = upper.len();
    let at = |s: usize| upper[m - s];
    (1..=r).find_map(|s| {
        if at(s).d == RIGHT && at(s).color == Color::Green {
            Some(Occurrence::Green(s))
        } else if s < r && at(s).d == RIGHT && at(s).color == Color::Red && at(s + 1).d == RIGHT && at(s + 1).color == Color::Blue {
            Some(Occurrence::Pair(s))
        } else {
            None
        }
    })
}

/// `None` for fixed points.
pub fn counterpart_involution(path: &ColoredPath, i: i32, j: i32) -> Result<Option<ColoredPath>> {
    validate(path, i, j)?;
    let m = upper_len(path);
    let mut upper = path.steps[..m].to_vec();
    let mut lower = path.steps[m..].to_vec();
    let r = lower.iter().take_while(|s| s.d == KNIGHT).count();
    if r > m {
        return Err(Error::Consistency("more knight steps than upper steps".into()));
    }
    match closest(&upper, r) {
        Some(Occurrence::Green(s)) => {
            upper.remove(m - s);
            lower[s - 1] = plain(SHORT);
        }
        Some(Occurrence::Pair(s)) => {
            upper.drain(m - s - 1..=m - s);
            lower.splice(s - 1..=s, [plain(DOUBLE)]);
        }
        None => match lower.get(r).map(|s| s.d) {
            Some(SHORT) => {
                lower[r] = plain(KNIGHT);
                upper.insert(m - r, Step::new(RIGHT, Color::Green));
            }
            Some(DOUBLE) => {
                lower.splice(r..=r, [plain(KNIGHT), plain(KNIGHT)]);
                upper.splice(m - r..m - r, [Step::new(RIGHT, Color::Blue), Step::new(RIGHT, Color::Red)]);
            }
            _ => return Ok(None),
        },
    }
    upper.extend(lower);
    Ok(Some(ColoredPath::new(path.start, upper)))
}

/// Fixed-point class: only `(-2,-1)` steps below `y = 1`, and no green step or
/// blue-then-red pair among the steps starting on or right of `y = x - j`.
pub fn is_fixed_class(path: &ColoredPath, j: i32) -> bool {
    let m = upper_len(path);
    if path.steps[m..].iter().any(|s| s.d != KNIGHT) {
        return false;
    }
    let pts = path.points();
    let right = |k: usize| pts[k].0 - pts[k].1 >= j;
    let steps = &path.steps[..m];
    let green = (0..m).any(|k| right(k) && steps[k].d == RIGHT && steps[k].color == Color::Green);
    let pair = (0..m.saturating_sub(1)).any(|k| {
        right(k)
            && steps[k].d == RIGHT
            && steps[k].color == Color::Blue
            && steps[k + 1].d == RIGHT
            && steps[k + 1].color == Color::Red
    });
    !green && !pair
}

/// `sum_t c_{t,j} h_{t-i}(F_1, ..., F_i)` with `F_d = uX_d + w + vX_d^{-1}`.
pub fn lemma_gf(i: i32, j: i32) -> LaurentPoly {
    let iu = i as usize;
    let s = Std::new(iu);
    let ctx = Ctx::symbolic(iu);
    let args: Vec<LaurentPoly> = (1..=iu).map(|d| s.free(d)).collect();
    let mut acc = s.zero();
    for t in (j + 1) as i64..=(2 * j) as i64 {
        let h = homogeneous(t - i as i64, &args, &s.alpha).expect("symmetric function");
        acc = acc + c_tj(t, j as i64, &ctx) * h;
    }
    acc
}

fn sum_weights<'a>(it: impl Iterator<Item = &'a ColoredPath>, i: usize) -> LaurentPoly {
    let mut acc: HashMap<Exps, BigInt> = HashMap::new();
    for x in it {
        let (sign, e) = weight_exps(x, i);
        *acc.entry(e.into()).or_default() += sign;
    }
    LaurentPoly::from_map(&Std::new(i).alpha, acc)
}

pub fn verify(i: i32, j: i32) -> Report {
    let mut rep = Report::new(System::Counterpart, json!({"i": i, "j": j}));
    let iu = i as usize;
    let all = paths(i, j);
    let mut fixed = Vec::new();
    for x in &all {
        match counterpart_involution(x, i, j) {
            Ok(None) => {
                rep.check(is_fixed_class(x, j), || format!("unexpected fixed point {}", x.describe()));
                fixed.push(x);
            }
            Ok(Some(y)) => {
                rep.check(!is_fixed_class(x, j), || format!("fixed-class path moved: {}", x.describe()));
                rep.check(validate(&y, i, j).is_ok() && &y != x, || format!("bad image of {}", x.describe()));
                let (sx, ex) = weight_exps(x, iu);
                let (sy, ey) = weight_exps(&y, iu);
                rep.check(sx == -sy && ex == ey, || format!("weight not negated at {}", x.describe()));
                let back = counterpart_involution(&y, i, j);
                rep.check(matches!(back, Ok(Some(ref z)) if z == x), || format!("not an involution at {}", x.describe()));
            }
            Err(e) => rep.fail(format!("{}: {e}", x.describe())),
        }
    }
    let signed = sum_weights(all.iter(), iu);
    let on_fixed = sum_weights(fixed.iter().copied(), iu);
    let lemma = lemma_gf(i, j);
    rep.check(signed == on_fixed && signed == lemma, || format!("signed {signed}, fixed {on_fixed}, lemma {lemma}"));
    rep.inputs_checked = all.len() as u64;
    rep.fixed_points = fixed.len() as u64;
    rep.signed_sum = serde_json::to_value(signed.to_json_value()).expect("poly json");
    rep
}

pub fn verify_all(max_i: usize, max_j: usize) -> Vec<Report> {
    let params: Vec<(i32, i32)> =
        (1..=max_i as i32).flat_map(|i| (1..=max_j as i32).map(move |j| (i, j))).collect();
    params.into_par_iter().map(|(i, j)| verify(i, j)).collect()
}
