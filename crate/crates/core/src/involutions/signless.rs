//! Weighted `A`-paths `(0,p) -> (j-1, 2-j)`: green `(0,-2)` steps weigh
//! `-uv`, a red `(-1,0)` step at distance `d` below `y = 2` weighs `uX_d` and
//! a blue one `vX_d^{-1}`.
//!
//! The involution trades a `(0,-2)` step against a blue step immediately
//! followed by a red one, looking only at the first `r` steps below `y = 1`
//! where `r` is the length of the initial diagonal run. Fixed points have no
//! `(0,-2)` step and no blue-then-red pair.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::ba::{a_paths, a_to_b, upper_len, validate_a, DIAG, DOUBLE, LEFT};
use super::{Color, ColoredPath, Report, Step, System};
use crate::error::{Error, Result};
use crate::poly::{homogeneous, Exps, LaurentPoly, Std};
use crate::util::binom;

/// Sign and exponent vector over `u, v, w, X1..Xj`.
pub fn weight_exps(a: &ColoredPath, j: usize) -> (i32, Vec<i32>) {
    let mut e = vec![0i32; 3 + j];
    let mut sign = 1;
    let mut y = a.start.1;
    for s in &a.steps {
        if s.d == DOUBLE {
            sign = -sign;
            e[0] += 1;
            e[1] += 1;
        } else if s.d == LEFT {
            let d = (2 - y) as usize;
            match s.color {
                Color::Blue => {
                    e[0] += 1;
                    e[2 + d] += 1;
                }
                _ => {
                    e[1] += 1;
                    e[2 + d] -= 1;
                }
            }
        }
        y += s.d.1;
    }
    (sign, e)
}

pub fn weight(a: &ColoredPath, j: usize) -> LaurentPoly {
    let (sign, e) = weight_exps(a, j);
    LaurentPoly::monomial(&Std::new(j).alpha, sign, &e)
}

fn blue_red_at(lower: &[Step], s: usize) -> bool {
    lower[s].d == LEFT && lower[s].color == Color::Blue && lower[s + 1].d == LEFT && lower[s + 1].color == Color::Red
}

/// Paths in the signless class: no `(0,-2)` step, no blue step followed by a red one.
pub fn is_signless(a: &ColoredPath) -> bool {
    let k = upper_len(a).unwrap_or(0);
    let lower = &a.steps[k..];
    a.steps.iter().all(|s| s.d != DOUBLE) && (0..lower.len().saturating_sub(1)).all(|s| !blue_red_at(lower, s))
}

/// `None` for fixed points.
pub fn signlessfirst_involution(a: &ColoredPath, p: i32, j: i32) -> Result<Option<ColoredPath>> {
    validate_a(a, p, j)?;
    let k = upper_len(a).expect("validated");
    let r = a.steps[..k].iter().take_while(|s| s.d == DIAG).count();
    let mut upper = a.steps[..k].to_vec();
    let mut lower = a.steps[k..].to_vec();
    if lower.len() < r {
        return Err(Error::Consistency("fewer steps below y = 1 than leading diagonals".into()));
    }
    if let Some(s) = (0..r.saturating_sub(1)).find(|&s| blue_red_at(&lower, s)) {
        lower.drain(s..s + 2);
        upper.splice(s..s + 2, [Step::new(DOUBLE, Color::Green)]);
    } else if r < k {
        upper.splice(r..r + 1, [Step::new(DIAG, Color::Green), Step::new(DIAG, Color::Green)]);
        lower.splice(r..r, [Step::new(LEFT, Color::Blue), Step::new(LEFT, Color::Red)]);
    } else {
        return Ok(None);
    }
    upper.extend(lower);
    Ok(Some(ColoredPath::new(a.start, upper)))
}

/// `sum_q (-uv)^{(p-q)/2} C((p+q)/2 - 1, (p-q)/2) h_{q-j}(uX_1 + vX_1^{-1}, ..., uX_j + vX_j^{-1})`.
pub fn lemma_gf(p: i32, j: i32) -> LaurentPoly {
    let s = Std::new(j as usize);
    let args: Vec<LaurentPoly> = (1..=j as usize).map(|d| s.uv_pair(d)).collect();
    let minus_uv = -(&s.u() * &s.v());
    let mut acc = s.zero();
    let mut q = p;
    while q >= 1 {
        let t = (p - q) / 2;
        let c = binom(((p + q) / 2 - 1) as i64, t as i64);
        let h = homogeneous((q - j) as i64, &args, &s.alpha).expect("symmetric function");
        acc = acc + minus_uv.pow(t as u32).scale(c) * h;
        q -= 2;
    }
    acc
}

fn sum_weights<'a>(it: impl Iterator<Item = &'a ColoredPath>, j: usize) -> LaurentPoly {
    let mut acc: HashMap<Exps, BigInt> = HashMap::new();
    for a in it {
        let (sign, e) = weight_exps(a, j);
        *acc.entry(e.into()).or_default() += sign;
    }
    LaurentPoly::from_map(&Std::new(j).alpha, acc)
}

pub fn verify(p: i32, j: i32) -> Report {
    let mut rep = Report::new(System::Signless, json!({"p": p, "j": j}));
    let all = a_paths(p, j);
    let ju = j as usize;
    let mut fixed = Vec::new();
    for a in &all {
        match signlessfirst_involution(a, p, j) {
            Ok(None) => {
                rep.check(is_signless(a), || format!("fixed point outside the signless class: {}", a.describe()));
                fixed.push(a);
            }
            Ok(Some(b)) => {
                rep.check(!is_signless(a), || format!("signless path moved: {}", a.describe()));
                rep.check(validate_a(&b, p, j).is_ok() && &b != a, || format!("bad image of {}", a.describe()));
                let (sa, ea) = weight_exps(a, ju);
                let (sb, eb) = weight_exps(&b, ju);
                rep.check(sa == -sb && ea == eb, || format!("weight not negated at {}", a.describe()));
                let back = signlessfirst_involution(&b, p, j);
                rep.check(matches!(back, Ok(Some(ref c)) if c == a), || format!("not an involution at {}", a.describe()));
                let same_b = matches!((a_to_b(a, p, j), a_to_b(&b, p, j)), (Ok(x), Ok(y)) if x == y);
                rep.check(same_b, || format!("paired paths reduce to different B-paths at {}", a.describe()));
            }
            Err(e) => rep.fail(format!("{}: {e}", a.describe())),
        }
    }
    let signed = sum_weights(all.iter(), ju);
    let on_fixed = sum_weights(fixed.iter().copied(), ju);
    let lemma = lemma_gf(p, j);
    rep.check(signed == on_fixed && signed == lemma, || format!("signed {signed}, fixed {on_fixed}, lemma {lemma}"));
    rep.inputs_checked = all.len() as u64;
    rep.fixed_points = fixed.len() as u64;
    rep.signed_sum = serde_json::to_value(signed.to_json_value()).expect("poly json");
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

    fn path(start_y: i32, steps: &[(crate::lattice::Pt, Color)]) -> ColoredPath {
        ColoredPath::new((0, start_y), steps.iter().map(|&(d, c)| Step::new(d, c)).collect())
    }

    #[test]
    fn one_double_step() {
        let g = Color::Green;
        let a = path(3, &[(DOUBLE, g)]);
        let b = signlessfirst_involution(&a, 3, 1).unwrap().unwrap();
        let want = path(3, &[(DIAG, g), (DIAG, g), (LEFT, Color::Blue), (LEFT, Color::Red)]);
        assert_eq!(b, want);
        assert_eq!(weight(&a, 1), -weight(&b, 1));
        assert_eq!(signlessfirst_involution(&b, 3, 1).unwrap(), Some(a));
    }

    #[test]
    fn three_one_signed_equals_signless() {
        let all = a_paths(3, 1);
        let signed = sum_weights(all.iter(), 1);
        let fixed: Vec<&ColoredPath> = all.iter().filter(|a| is_signless(a)).collect();
        assert_eq!(signed, sum_weights(fixed.into_iter(), 1));
        assert_eq!(signed, lemma_gf(3, 1));
    }

    #[test]
    fn exhaustive() {
        for r in verify_all(6, 3) {
            assert!(r.passed(), "{r:?}");
        }
    }
}
