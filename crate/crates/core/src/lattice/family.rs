use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Interpretation, Model, Phase, Pt};
use crate::error::{Error, Result};
use crate::poly::{Exps, LaurentPoly, PolyJson};
use crate::util::perm_sign;

/// One walk from a start point to an end point, with the product of its step
/// weights and its start factor.
#[derive(Debug, Clone)]
pub struct SinglePath {
    pub start: usize,
    pub right: bool,
    pub end: usize,
    pub points: Vec<Pt>,
    pub weight: LaurentPoly,
}

/// A family of paths, one per start, with its signed weight (overall factor
/// included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub interpretation: Interpretation,
    pub n: usize,
    /// Indexed by start.
    pub paths: Vec<Vec<Pt>>,
    /// `sigma[i]` is the end reached from start `i`, 0-based.
    pub sigma: Vec<usize>,
    /// I3 only: which starts use the right point of their pair.
    pub right_starts: Vec<bool>,
    pub sign: i32,
    pub weight: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub interpretation: String,
    /// One-line notation, 1-based.
    pub sigma: Vec<usize>,
    pub paths: Vec<Vec<[i32; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right_starts: Option<Vec<bool>>,
    pub weight: PolyJson,
}

impl PathFamily {
    pub fn to_json_value(&self) -> FamilyJson {
        FamilyJson {
            interpretation: self.interpretation.name().to_string(),
            sigma: self.sigma.iter().map(|s| s + 1).collect(),
            paths: self.paths.iter().map(|p| p.iter().map(|&(x, y)| [x, y]).collect()).collect(),
            right_starts: (self.interpretation == Interpretation::I3).then(|| self.right_starts.clone()),
            weight: self.weight.to_json_value(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("family serializes")
    }
}

/// All single paths of the model, from every start to every end.
pub fn single_paths(kind: Interpretation, n: usize) -> Vec<SinglePath> {
    let model = Model::new(kind, n);
    paths_of(&model)
}

pub(crate) fn paths_of(model: &Model) -> Vec<SinglePath> {
    let ends = model.ends();
    let mut out = Vec::new();
    for st in model.starts() {
        let mut pts = vec![st.point];
        let ph = model.initial_phase(st.point);
        walk(model, &ends, &st, ph, &mut pts, st.factor.clone(), &mut out);
    }
    out
}

fn walk(
    model: &Model,
    ends: &[Pt],
    st: &super::Start,
    ph: Phase,
    pts: &mut Vec<Pt>,
    weight: LaurentPoly,
    out: &mut Vec<SinglePath>,
) {
    let here = *pts.last().unwrap();
    if model.can_end(ph) {
        if let Some(end) = ends.iter().position(|&e| e == here) {
            out.push(SinglePath { start: st.index, right: st.right, end, points: pts.clone(), weight: weight.clone() });
        }
    }
    for (q, nph, wt) in model.moves(here, ph) {
        pts.push(q);
        walk(model, ends, st, nph, pts, &weight * &wt, out);
        pts.pop();
    }
}

/// Sum of the weights of all single paths from start `i` to end `j`
/// (0-based), start factors included.
pub fn single_path_gf(kind: Interpretation, n: usize, i: usize, j: usize) -> LaurentPoly {
    let model = Model::new(kind, n);
    let paths = paths_of(&model);
    let picked: Vec<&LaurentPoly> = paths.iter().filter(|p| p.start == i && p.end == j).map(|p| &p.weight).collect();
    LaurentPoly::sum(&model.s.alpha, picked)
}

/// Paths with their lattice points mapped to dense cell indices.
struct Indexed {
    paths: Vec<SinglePath>,
    cells: Vec<Vec<u32>>,
    grid: usize,
    /// Start indices in search order, each with its candidate paths.
    order: Vec<(usize, Vec<usize>)>,
}

fn index_paths(model: &Model) -> Indexed {
    let paths = paths_of(model);
    let (mut x0, mut y0, mut x1, mut y1) = (i32::MAX, i32::MAX, i32::MIN, i32::MIN);
    for p in &paths {
        for &(x, y) in &p.points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
    }
    let width = (x1 - x0 + 1).max(0) as usize;
    let height = (y1 - y0 + 1).max(0) as usize;
    let cells = paths
        .iter()
        .map(|p| p.points.iter().map(|&(x, y)| ((y - y0) as usize * width + (x - x0) as usize) as u32).collect())
        .collect();
    let mut by_start: Vec<Vec<usize>> = vec![Vec::new(); model.n];
    for (k, p) in paths.iter().enumerate() {
        by_start[p.start].push(k);
    }
    // the start with most candidates goes first so parallel work splits well
    let mut order: Vec<(usize, Vec<usize>)> = by_start.into_iter().enumerate().collect();
    order.sort_by_key(|(_, v)| std::cmp::Reverse(v.len()));
    Indexed { paths, cells, grid: width * height, order }
}

struct Search<'a> {
    ix: &'a Indexed,
    occupied: Vec<bool>,
    used_ends: Vec<bool>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn fits(&self, k: usize) -> bool {
        !self.used_ends[self.ix.paths[k].end] && self.ix.cells[k].iter().all(|&c| !self.occupied[c as usize])
    }

    fn place(&mut self, k: usize, on: bool) {
        self.used_ends[self.ix.paths[k].end] = on;
        for &c in &self.ix.cells[k] {
            self.occupied[c as usize] = on;
        }
        if on {
            self.chosen.push(k);
        } else {
            self.chosen.pop();
        }
    }

    fn run(&mut self, level: usize, partial: &LaurentPoly, visit: &mut dyn FnMut(&[usize], &LaurentPoly)) {
        if level == self.ix.order.len() {
            visit(&self.chosen, partial);
            return;
        }
        let cands = &self.ix.order[level].1;
        for &k in cands {
            if self.fits(k) {
                self.place(k, true);
                let next = partial * &self.ix.paths[k].weight;
                self.run(level + 1, &next, visit);
                self.place(k, false);
            }
        }
    }
}

/// Folds over every admissible family. Work is split over the candidates of
/// the first searched start; each worker folds into its own accumulator.
fn fold_families<A, I, F>(model: &Model, init: I, visit: F) -> (Indexed, Vec<A>)
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Indexed, &[usize], &LaurentPoly) + Sync,
{
    let ix = index_paths(model);
    let n = model.n;
    let accs = ix.order[0]
        .1
        .par_iter()
        .map(|&k| {
            let mut acc = init();
            let mut s = Search { ix: &ix, occupied: vec![false; ix.grid], used_ends: vec![false; n], chosen: Vec::new() };
            s.place(k, true);
            s.run(1, &ix.paths[k].weight, &mut |chosen: &[usize], w: &LaurentPoly| visit(&mut acc, &ix, chosen, w));
            acc
        })
        .collect();
    (ix, accs)
}

fn sigma_of(ix: &Indexed, chosen: &[usize], n: usize) -> (Vec<usize>, Vec<bool>) {
    let mut sigma = vec![0; n];
    let mut right = vec![false; n];
    for &k in chosen {
        let p = &ix.paths[k];
        sigma[p.start] = p.end;
        right[p.start] = p.right;
    }
    (sigma, right)
}

/// Generating function of the model by direct enumeration of families,
/// signed by the connection permutation where the model asks for it.
pub fn enum_gf(kind: Interpretation, n: usize) -> LaurentPoly {
    let model = Model::new(kind, n);
    if n == 0 {
        return LaurentPoly::one(&model.s.alpha);
    }
    let signed = kind.signed();
    let (_, maps) = fold_families(&model, HashMap::<Exps, BigInt>::new, |acc, ix, chosen, w| {
        let sg = if signed { perm_sign(&sigma_of(ix, chosen, n).0) } else { 1 };
        for (e, c) in w.terms() {
            let slot = acc.entry(e.clone()).or_default();
            if sg > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
    });
    let mut total: HashMap<Exps, BigInt> = HashMap::new();
    for m in maps {
        for (e, c) in m {
            *total.entry(e).or_default() += c;
        }
    }
    &LaurentPoly::from_map(&model.s.alpha, total) * &model.overall()
}

/// Every family of the model, in a deterministic order.
pub fn families(kind: Interpretation, n: usize) -> Vec<PathFamily> {
    let model = Model::new(kind, n);
    if n == 0 {
        return Vec::new();
    }
    let overall = model.overall();
    let (_, lists) = fold_families(&model, Vec::new, |acc: &mut Vec<PathFamily>, ix, chosen, w| {
        let (sigma, right_starts) = sigma_of(ix, chosen, n);
        let sign = if kind.signed() { perm_sign(&sigma) } else { 1 };
        let mut paths = vec![Vec::new(); n];
        for &k in chosen {
            paths[ix.paths[k].start] = ix.paths[k].points.clone();
        }
        let weight = (w * &overall).scale(sign);
        acc.push(PathFamily { interpretation: kind, n, paths, sigma, right_starts, sign, weight });
    });
    lists.into_iter().flatten().collect()
}

/// Validates a hand-made family against the model's step rules and computes
/// its permutation and weight.
pub fn weigh_family(kind: Interpretation, n: usize, paths: &[Vec<Pt>]) -> Result<PathFamily> {
    let model = Model::new(kind, n);
    if paths.len() != n {
        return Err(Error::Structure(format!("{} paths for order {n}", paths.len())));
    }
    let starts = model.starts();
    let ends = model.ends();
    let mut sigma = vec![usize::MAX; n];
    let mut right_starts = vec![false; n];
    let mut by_start: Vec<Vec<Pt>> = vec![Vec::new(); n];
    let mut seen: HashMap<Pt, usize> = HashMap::new();
    let mut weight = model.overall();
    for (k, path) in paths.iter().enumerate() {
        let first = *path.first().ok_or_else(|| Error::Structure("empty path".into()))?;
        let st = starts
            .iter()
            .find(|s| s.point == first)
            .ok_or_else(|| Error::Structure(format!("path {k} starts at {first:?}, not a start point")))?;
        if !by_start[st.index].is_empty() {
            return Err(Error::Structure(format!("start {} used twice", st.index + 1)));
        }
        let mut ph = model.initial_phase(first);
        let mut wt = st.factor.clone();
        for pair in path.windows(2) {
            let (q, nph, sw) = model
                .moves(pair[0], ph)
                .into_iter()
                .find(|(q, _, _)| *q == pair[1])
                .ok_or_else(|| Error::Structure(format!("illegal step {:?} -> {:?} in path {k}", pair[0], pair[1])))?;
            debug_assert_eq!(q, pair[1]);
            ph = nph;
            wt = &wt * &sw;
        }
        let last = *path.last().unwrap();
        let end = ends
            .iter()
            .position(|&e| e == last)
            .filter(|_| model.can_end(ph))
            .ok_or_else(|| Error::Structure(format!("path {k} ends at {last:?}, not an end point")))?;
        if sigma.contains(&end) {
            return Err(Error::Structure(format!("end {} reached twice", end + 1)));
        }
        for &p in path {
            if let Some(other) = seen.insert(p, k) {
                return Err(Error::Structure(format!("paths {other} and {k} share {p:?}")));
            }
        }
        sigma[st.index] = end;
        right_starts[st.index] = st.right;
        by_start[st.index] = path.clone();
        weight = &weight * &wt;
    }
    let sign = if kind.signed() { perm_sign(&sigma) } else { 1 };
    Ok(PathFamily { interpretation: kind, n, paths: by_start, sigma, right_starts, sign, weight: weight.scale(sign) })
}

/// Builds a path from a start point and a list of steps.
pub fn path_from_steps(start: Pt, steps: &[Pt]) -> Vec<Pt> {
    let mut pts = vec![start];
    for &(dx, dy) in steps {
        let (x, y) = *pts.last().unwrap();
        pts.push((x + dx, y + dy));
    }
    pts
}
