//! Lattice path models for the generating function with bottom row
//! `0, 2, ..., 2n-2`, enumerated directly and through determinants.
//!
//! Every model is a small state machine: a path is a walk from a start point
//! whose legal steps depend on the current point and on the region the walk
//! is in. Families are tuples of such walks with pairwise distinct lattice
//! points.

mod det;
mod family;

pub use det::{
    a_ij, c_tj, c_tj_paths, det_gf, det_gf_interp1, det_gf_interp2, det_gf_interp3, det_gf_jt4, det_matrix,
    jt4_matrix_via_onehalf, onehalf_matrix, specialized_det, tiling_count, unrefined_det, Ctx,
};
pub use family::{
    enum_gf, families, path_from_steps, single_path_gf, single_paths, weigh_family, FamilyJson, PathFamily, SinglePath,
};

use serde::{Deserialize, Serialize};

use crate::poly::{LaurentPoly, Std};

pub type Pt = (i32, i32);

/// The path models. `Jt4` is the signless model with starts `(i, 2i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Interpretation {
    I1,
    I2,
    I3,
    Jt4,
}

impl Interpretation {
    pub fn name(self) -> &'static str {
        match self {
            Interpretation::I1 => "I1",
            Interpretation::I2 => "I2",
            Interpretation::I3 => "I3",
            Interpretation::Jt4 => "JT4",
        }
    }

    /// Whether families carry the sign of their connection permutation.
    pub fn signed(self) -> bool {
        !matches!(self, Interpretation::I3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Phase {
    /// I1: x < 0. Otherwise the region on and above `y = 1`.
    Upper,
    /// I1 only: x >= 0, y >= 1.
    Middle,
    Lower,
}

/// A start point together with the extra factor it contributes.
#[derive(Debug, Clone)]
pub(crate) struct Start {
    pub index: usize,
    pub right: bool,
    pub point: Pt,
    pub factor: LaurentPoly,
}

pub(crate) struct Model {
    pub kind: Interpretation,
    pub n: usize,
    pub s: Std,
}

impl Model {
    pub fn new(kind: Interpretation, n: usize) -> Self {
        Model { kind, n, s: Std::new(n) }
    }

    pub fn starts(&self) -> Vec<Start> {
        let n = self.n as i32;
        let s = &self.s;
        let plain = |index: usize, point: Pt| Start { index, right: false, point, factor: s.one() };
        let mut out = Vec::new();
        for i in 1..=n {
            let idx = (i - 1) as usize;
            match self.kind {
                Interpretation::I1 => out.push(plain(idx, (-i, i))),
                Interpretation::I2 => out.push(plain(idx, (i, i))),
                Interpretation::Jt4 => out.push(plain(idx, (i, 2 * i))),
                Interpretation::I3 => {
                    out.push(plain(idx, (n - i + 1, 2 * n)));
                    if i > 1 {
                        let muv = -(&s.u() * &s.v());
                        out.push(Start { index: idx, right: true, point: (n + i - 1, 2 * n), factor: muv.pow((i - 1) as u32) });
                    }
                }
            }
        }
        out
    }

    pub fn ends(&self) -> Vec<Pt> {
        let n = self.n as i32;
        (1..=n)
            .map(|j| match self.kind {
                Interpretation::I1 => (j - 1, 2 - j),
                Interpretation::I2 => (2, 2 - j),
                Interpretation::I3 | Interpretation::Jt4 => (j, 1 - j),
            })
            .collect()
    }

    pub fn initial_phase(&self, p: Pt) -> Phase {
        self.settle(p, Phase::Upper)
    }

    /// I1 changes region at the first point on `x = 0` and at the first
    /// point on `y = 1`.
    fn settle(&self, p: Pt, ph: Phase) -> Phase {
        if self.kind != Interpretation::I1 {
            return ph;
        }
        let mut ph = ph;
        if ph == Phase::Upper && p.0 == 0 {
            ph = Phase::Middle;
        }
        if ph == Phase::Middle && p.1 == 1 {
            ph = Phase::Lower;
        }
        ph
    }

    pub fn can_end(&self, ph: Phase) -> bool {
        match self.kind {
            Interpretation::I1 | Interpretation::I3 | Interpretation::Jt4 => ph == Phase::Lower,
            Interpretation::I2 => true,
        }
    }

    /// Horizontal weight at height `h` in the alternating ladder
    /// `uX_1, vX_1^{-1}, uX_2, ...`.
    fn ladder(&self, h: i32) -> LaurentPoly {
        let s = &self.s;
        if h % 2 == 1 {
            &s.u() * &s.x(((h + 1) / 2) as usize, 1)
        } else {
            &s.v() * &s.x((h / 2) as usize, -1)
        }
    }

    /// Legal steps out of `p` in phase `ph`, with bounds that no completed
    /// path can cross.
    pub fn moves(&self, p: Pt, ph: Phase) -> Vec<(Pt, Phase, LaurentPoly)> {
        let n = self.n as i32;
        let s = &self.s;
        let (x, y) = p;
        let mut out = Vec::with_capacity(3);
        let mut push = |q: Pt, ph: Phase, wt: LaurentPoly| {
            let ph = self.settle(q, ph);
            out.push((q, ph, wt));
        };
        match (self.kind, ph) {
            (Interpretation::I1, Phase::Upper) => {
                push((x + 1, y + 1), ph, s.one());
                push((x + 1, y), ph, s.w());
            }
            (Interpretation::I1, Phase::Middle) => {
                push((x + 1, y - 1), ph, s.one());
                if y - 2 >= 1 {
                    push((x, y - 2), ph, -(&s.u() * &s.v()));
                }
            }
            (Interpretation::I1, Phase::Lower) => {
                let d = 2 - y;
                if x >= 1 && d <= n {
                    push((x - 1, y), ph, s.uv_pair(d as usize));
                }
                if y > 2 - n {
                    push((x, y - 1), ph, s.one());
                }
            }
            (Interpretation::I2, Phase::Upper) => {
                if x < 2 * n {
                    push((x + 1, y), ph, s.free(y as usize));
                }
                if y > 1 {
                    push((x, y - 1), ph, s.one());
                } else {
                    self.i2_lower(p, &mut push);
                }
            }
            (Interpretation::I2, _) => self.i2_lower(p, &mut push),
            (Interpretation::I3 | Interpretation::Jt4, Phase::Upper) => {
                if x < 2 * n {
                    push((x + 1, y), ph, self.ladder(y));
                }
                if y > 1 {
                    push((x, y - 1), ph, s.one());
                } else {
                    self.i3_lower(p, &mut push);
                }
            }
            (Interpretation::I3 | Interpretation::Jt4, _) => self.i3_lower(p, &mut push),
        }
        out
    }

    fn i2_lower(&self, (x, y): Pt, push: &mut impl FnMut(Pt, Phase, LaurentPoly)) {
        let s = &self.s;
        let floor = 2 - self.n as i32;
        for (dx, dy, wt) in [(1, 1, -s.w()), (2, 2, -(&s.u() * &s.v())), (2, 1, s.one())] {
            if x - dx >= 2 && y - dy >= floor {
                push((x - dx, y - dy), Phase::Lower, wt);
            }
        }
    }

    fn i3_lower(&self, (x, y): Pt, push: &mut impl FnMut(Pt, Phase, LaurentPoly)) {
        let s = &self.s;
        let floor = 1 - self.n as i32;
        if y > floor {
            if x > 1 {
                push((x - 1, y - 1), Phase::Lower, s.one());
            }
            push((x, y - 1), Phase::Lower, s.w());
        }
    }

    /// `prod X_i^{n-1}`.
    pub fn overall(&self) -> LaurentPoly {
        self.s.x_all(self.n as i32 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amt::{gf_brute, vsasm_bottom};
    use crate::poly::case2;

    const ALL: [Interpretation; 4] = [Interpretation::I1, Interpretation::I2, Interpretation::I3, Interpretation::Jt4];

    #[test]
    fn order_one() {
        let s = Std::new(1);
        for kind in ALL {
            assert_eq!(enum_gf(kind, 1), s.free(1), "{kind:?}");
        }
        let fams = families(Interpretation::I1, 1);
        assert_eq!(fams.len(), 2);
    }

    #[test]
    fn order_two() {
        for kind in ALL {
            assert_eq!(enum_gf(kind, 2), case2(), "{kind:?}");
        }
        assert_eq!(families(Interpretation::I1, 2).len(), 16);
        assert_eq!(families(Interpretation::I2, 2).len(), 3);
        assert_eq!(families(Interpretation::I3, 2).len(), 57);
    }

    #[test]
    fn order_three_all_routes() {
        let want = gf_brute(&vsasm_bottom(3)).unwrap();
        for kind in ALL {
            assert_eq!(enum_gf(kind, 3), want, "enum {kind:?}");
            assert_eq!(det_gf(kind, 3, &Ctx::symbolic(3)).unwrap(), want, "det {kind:?}");
        }
    }

    #[test]
    fn single_paths_match_a_ij() {
        for n in 1..=4usize {
            let ctx = Ctx::symbolic(n);
            for i in 1..=n {
                for j in 1..=n {
                    let direct = single_path_gf(Interpretation::I1, n, i - 1, j - 1);
                    assert_eq!(direct, a_ij(i as i64, j as i64, &ctx).unwrap(), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn i3_connections_are_forced() {
        for n in 1..=3 {
            for f in families(Interpretation::I3, n) {
                let mut lefts: Vec<usize> = (0..n).filter(|&i| !f.right_starts[i]).collect();
                lefts.reverse();
                let rights: Vec<usize> = (0..n).filter(|&i| f.right_starts[i]).collect();
                // ends are reached left to right in the order of the start points
                let order: Vec<usize> = lefts.into_iter().chain(rights).collect();
                for (e, &i) in order.iter().enumerate() {
                    assert_eq!(f.sigma[i], e);
                }
            }
        }
    }

    #[test]
    fn jt4_connections_are_identity() {
        for f in families(Interpretation::Jt4, 3) {
            assert_eq!(f.sigma, vec![0, 1, 2]);
        }
    }

    fn steps(spec: &[(i32, i32, usize)]) -> Vec<Pt> {
        spec.iter().flat_map(|&(dx, dy, k)| std::iter::repeat_n((dx, dy), k)).collect()
    }

    #[test]
    fn figure_first_model() {
        let s = Std::new(6);
        let p = |start: Pt, spec: &[(i32, i32, usize)]| path_from_steps(start, &steps(spec));
        let paths = vec![
            p((-1, 1), &[(1, 0, 1)]),
            p((-2, 2), &[(1, 0, 2), (1, -1, 1), (0, -1, 1)]),
            p((-3, 3), &[(1, 1, 1), (1, 0, 1), (1, 1, 1), (0, -2, 1), (1, -1, 2), (0, -1, 2)]),
            p((-4, 4), &[(1, 1, 2), (1, 0, 1), (1, 1, 1), (1, -1, 6), (0, -1, 5), (-1, 0, 1)]),
            p((-5, 5), &[(1, 0, 1), (1, 1, 3), (1, 0, 1), (1, -1, 1), (0, -2, 2), (1, -1, 2), (0, -1, 3)]),
            p(
                (-6, 6),
                &[
                    (1, 1, 3),
                    (1, 0, 1),
                    (1, 1, 1),
                    (1, 0, 1),
                    (1, -1, 3),
                    (0, -2, 1),
                    (1, -1, 1),
                    (0, -2, 1),
                    (1, -1, 1),
                    (0, -1, 2),
                    (-1, 0, 1),
                    (0, -1, 2),
                ],
            ),
        ];
        let f = weigh_family(Interpretation::I1, 6, &paths).unwrap();
        assert_eq!(f.sigma, vec![0, 1, 2, 5, 3, 4]);
        let muv = -(&s.u() * &s.v());
        let want = &(&(&muv.pow(5) * &s.w().pow(9)) * &s.x_all(5)) * &(&s.uv_pair(3) * &s.uv_pair(6));
        assert_eq!(f.weight, want.scale(f.sign));
        assert_eq!(f.sign, 1);
    }

    #[test]
    fn figure_second_model() {
        let s = Std::new(6);
        let pts = |v: &[Pt]| v.to_vec();
        let paths = vec![
            pts(&[(1, 1), (2, 1)]),
            pts(&[(2, 2), (3, 2), (3, 1), (2, 0)]),
            pts(&[(3, 3), (4, 3), (4, 2), (5, 2), (5, 1), (3, -1), (2, -2)]),
            pts(&[(4, 4), (5, 4), (5, 3), (6, 3), (6, 2), (6, 1), (4, 0), (2, -1)]),
            pts(&[(5, 5), (6, 5), (7, 5), (7, 4), (7, 3), (7, 2), (7, 1), (6, 0), (4, -2), (2, -3)]),
            pts(&[(6, 6), (7, 6), (8, 6), (8, 5), (8, 4), (8, 3), (8, 2), (8, 1), (7, 0), (5, -1), (3, -3), (2, -4)]),
        ];
        let f = weigh_family(Interpretation::I2, 6, &paths).unwrap();
        assert_eq!(f.sigma, vec![0, 1, 3, 2, 4, 5]);
        assert_eq!(f.sign, -1);
        let muv = -(&s.u() * &s.v());
        let mw = -s.w();
        let mut want = &(&muv.pow(3) * &mw.pow(5)) * &s.x_all(5);
        for (d, m) in [(1, 1), (2, 2), (3, 2), (4, 1), (5, 2), (6, 2)] {
            want = &want * &s.free(d).pow(m);
        }
        assert_eq!(f.weight, -want);
    }

    #[test]
    fn figure_third_model() {
        let s = Std::new(4);
        let p = |start: Pt, spec: &[(i32, i32, usize)]| path_from_steps(start, &steps(spec));
        let paths = vec![
            p((1, 8), &[(0, -1, 2), (1, 0, 1), (0, -1, 5), (-1, -1, 1)]),
            p((3, 8), &[(0, -1, 5), (1, 0, 1), (0, -1, 2), (-1, -1, 2)]),
            p((4, 8), &[(0, -1, 3), (1, 0, 1), (0, -1, 4), (-1, -1, 1), (0, -1, 1), (-1, -1, 1)]),
            p((6, 8), &[(0, -1, 7), (1, 0, 1), (-1, -1, 3), (0, -1, 1)]),
        ];
        let f = weigh_family(Interpretation::I3, 4, &paths).unwrap();
        let want = LaurentPoly::monomial(&s.alpha, 1, &[5, 3, 2, 4, 4, 3, 3]);
        assert_eq!(f.weight, want);
        assert_eq!(f.right_starts, vec![false, false, true, false]);
    }

    #[test]
    fn illegal_families_are_rejected() {
        let bad_step = vec![vec![(-1, 1), (0, 2), (0, 1)]];
        assert!(weigh_family(Interpretation::I1, 1, &bad_step).is_err());
        let shared = vec![vec![(1, 1), (2, 1)], vec![(2, 2), (2, 1), (3, 1), (2, 0)]];
        assert!(weigh_family(Interpretation::I2, 2, &shared).is_err());
    }

    #[test]
    fn family_json_shape() {
        let f = &families(Interpretation::I2, 1)[0];
        let j: serde_json::Value = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(j["interpretation"], "I2");
        assert_eq!(j["sigma"], serde_json::json!([1]));
        assert!(j["paths"][0][0].is_array());
        assert!(j.get("right_starts").is_none());
    }
}
