//! Points and lines of the Fermat quartic x₀⁴ + x₁⁴ + x₂⁴ + x₃⁴ = 0 over GF(9).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, Level};

pub type Vec4 = [FieldElem; 4];

/// A point of P³(GF(9)) with first nonzero coordinate equal to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint3(Vec4);

impl ProjPoint3 {
    pub fn new(v: Vec4) -> Option<ProjPoint3> {
        let lead = v.iter().find(|c| !c.is_zero())?;
        let inv = lead.inv().unwrap();
        Some(ProjPoint3(v.map(|c| c * inv)))
    }

    pub fn coords(&self) -> Vec4 {
        self.0
    }

    pub fn to_strings(&self) -> [String; 4] {
        self.0.map(|c| c.to_string())
    }
}

pub fn quartic(v: &Vec4) -> FieldElem {
    v.iter().fold(FieldElem::ZERO, |acc, c| acc + c.pow(4))
}

fn gf9() -> Vec<FieldElem> {
    Field::new(Level::F9).elements().collect()
}

/// All 820 points of P³(GF(9)).
pub fn projective_points() -> Vec<ProjPoint3> {
    let f = gf9();
    let mut out = Vec::new();
    for lead in 0..4 {
        let free = 3 - lead;
        let n = f.len().pow(free as u32);
        for code in 0..n {
            let mut v = [FieldElem::ZERO; 4];
            v[lead] = FieldElem::ONE;
            let mut c = code;
            for k in lead + 1..4 {
                v[k] = f[c % 9];
                c /= 9;
            }
            out.push(ProjPoint3(v));
        }
    }
    out.sort();
    out
}

pub fn surface_points() -> Result<Vec<ProjPoint3>> {
    let pts: Vec<ProjPoint3> = projective_points().into_iter().filter(|p| quartic(&p.0).is_zero()).collect();
    if pts.len() != 280 {
        return Err(Error::CountMismatch { what: "surface points".into(), expected: 280, found: pts.len() });
    }
    Ok(pts)
}

/// Row echelon reduction in place; returns the pivot columns.
fn rref(rows: &mut Vec<Vec4>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..4 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        rows[r] = rows[r].map(|x| x * inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pr = rows[r];
                for k in 0..4 {
                    rows[i][k] -= f * pr[k];
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec4]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A line of P³(GF(9)) in reduced row echelon form, with its ten points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line3 {
    rows: [Vec4; 2],
    points: Vec<ProjPoint3>,
}

impl Line3 {
    /// Canonical line through two independent vectors.
    pub fn through(a: Vec4, b: Vec4) -> Result<Line3> {
        let mut m = vec![a, b];
        if rref(&mut m).len() != 2 {
            return Err(Error::SingularSystem("points do not span a line".into()));
        }
        let rows = [m[0], m[1]];
        let f = gf9();
        let mut points: Vec<ProjPoint3> = Vec::with_capacity(10);
        points.push(ProjPoint3::new(rows[1]).unwrap());
        for &t in &f {
            let v: Vec4 = std::array::from_fn(|k| rows[0][k] + t * rows[1][k]);
            points.push(ProjPoint3::new(v).unwrap());
        }
        points.sort();
        Ok(Line3 { rows, points })
    }

    pub fn rows(&self) -> [Vec4; 2] {
        self.rows
    }

    pub fn points(&self) -> &[ProjPoint3] {
        &self.points
    }

    /// Coefficients of the quartic restricted to s·r₀ + t·r₁, by powers of t.
    pub fn restricted_quartic(&self) -> [FieldElem; 5] {
        let [a, b] = self.rows;
        let binom = [1, 4, 6, 4, 1];
        std::array::from_fn(|m| {
            let s = (0..4).fold(FieldElem::ZERO, |acc, k| acc + a[k].pow(4 - m as u64) * b[k].pow(m as u64));
            FieldElem::from_int(binom[m]) * s
        })
    }

    pub fn on_surface(&self) -> bool {
        self.restricted_quartic().iter().all(|c| c.is_zero())
    }

    pub fn meets(&self, other: &Line3) -> bool {
        rank(&[self.rows[0], self.rows[1], other.rows[0], other.rows[1]]) <= 3
    }

    pub fn common_point(&self, other: &Line3) -> Option<ProjPoint3> {
        self.points.iter().find(|p| other.points.binary_search(p).is_ok()).copied()
    }
}

const PIVOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Every line of P³(GF(9)), one per echelon form.
pub fn all_lines() -> Vec<Line3> {
    let f = gf9();
    PIVOTS
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let free: Vec<(usize, usize)> = ((i + 1)..4)
                .filter(|&c| c != j)
                .map(|c| (0, c))
                .chain(((j + 1)..4).map(|c| (1, c)))
                .collect();
            let n = 9usize.pow(free.len() as u32);
            let f = f.clone();
            (0..n).map(move |code| {
                let mut rows = [[FieldElem::ZERO; 4]; 2];
                rows[0][i] = FieldElem::ONE;
                rows[1][j] = FieldElem::ONE;
                let mut c = code;
                for &(r, col) in &free {
                    rows[r][col] = f[c % 9];
                    c /= 9;
                }
                Line3::through(rows[0], rows[1]).unwrap()
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct LineScan {
    pub scanned: usize,
    pub lines: Vec<Line3>,
}

/// Lines contained in the surface, decided by vanishing of the restricted
/// binary quartic.
pub fn surface_lines() -> Result<LineScan> {
    let all = all_lines();
    let scanned = all.len();
    let mut lines: Vec<Line3> = all.into_par_iter().filter(|l| l.on_surface()).collect();
    lines.sort();
    if lines.len() != 112 {
        return Err(Error::CountMismatch { what: "lines on the surface".into(), expected: 112, found: lines.len() });
    }
    Ok(LineScan { scanned, lines })
}

#[derive(Clone, Debug)]
pub struct Configuration {
    /// Indices into the point list, per line.
    pub line_points: Vec<Vec<usize>>,
    /// Indices into the line list, per point.
    pub point_lines: Vec<Vec<usize>>,
}

impl Configuration {
    pub fn incidences(&self) -> usize {
        self.line_points.iter().map(Vec::len).sum()
    }
}

pub fn configuration(points: &[ProjPoint3], lines: &[Line3]) -> Result<Configuration> {
    let index: BTreeMap<ProjPoint3, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut line_points = Vec::with_capacity(lines.len());
    let mut point_lines = vec![Vec::new(); points.len()];
    for (li, l) in lines.iter().enumerate() {
        let mut on = Vec::new();
        for p in l.points() {
            let pi = *index
                .get(p)
                .ok_or_else(|| Error::DegreeViolation(format!("line {li} has a point off the surface")))?;
            on.push(pi);
            point_lines[pi].push(li);
        }
        if on.len() != 10 {
            return Err(Error::DegreeViolation(format!("line {li} has {} points", on.len())));
        }
        line_points.push(on);
    }
    if let Some((pi, pl)) = point_lines.iter().enumerate().find(|(_, pl)| pl.len() != 4) {
        return Err(Error::DegreeViolation(format!("point {pi} lies on {} lines", pl.len())));
    }
    Ok(Configuration { line_points, point_lines })
}

/// Adjacency lists of the graph of meeting lines.
pub fn line_graph(lines: &[Line3]) -> Vec<Vec<usize>> {
    (0..lines.len())
        .into_par_iter()
        .map(|i| (0..lines.len()).filter(|&j| j != i && lines[i].meets(&lines[j])).collect())
        .collect()
}

#[derive(Clone, Debug)]
pub struct Fibration {
    /// Triples of lines meeting `l` at a common point, with that point.
    pub triples: Vec<([usize; 3], ProjPoint3)>,
    pub sections: Vec<usize>,
}

/// The ten concurrent triples of lines meeting `l`, and the 81 lines meeting
/// exactly one line of every triple.
pub fn fibration(lines: &[Line3], adjacency: &[Vec<usize>], l: usize) -> Result<Fibration> {
    let fail = |m: String| Error::PartitionNotFound(format!("line {l}: {m}"));
    let mut groups: BTreeMap<ProjPoint3, Vec<usize>> = BTreeMap::new();
    for &n in &adjacency[l] {
        let p = lines[l].common_point(&lines[n]).ok_or_else(|| fail(format!("no common point with {n}")))?;
        groups.entry(p).or_default().push(n);
    }
    let mut triples = Vec::new();
    for (p, g) in groups {
        if g.len() != 3 {
            return Err(fail(format!("{} lines through one point of l", g.len())));
        }
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            if !lines[g[a]].meets(&lines[g[b]]) || lines[g[a]].common_point(&lines[g[b]]) != Some(p) {
                return Err(fail(format!("triple {g:?} is not concurrent")));
            }
        }
        triples.push(([g[0], g[1], g[2]], p));
    }
    if triples.len() != 10 {
        return Err(fail(format!("{} triples", triples.len())));
    }
    let sections: Vec<usize> = (0..lines.len()).filter(|&i| i != l && !adjacency[l].contains(&i)).collect();
    for &s in &sections {
        for (t, _) in &triples {
            let hits = t.iter().filter(|&&k| adjacency[s].contains(&k)).count();
            if hits != 1 {
                return Err(fail(format!("section {s} meets {hits} lines of a triple")));
            }
        }
    }
    if sections.len() != 81 {
        return Err(fail(format!("{} sections", sections.len())));
    }
    Ok(Fibration { triples, sections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;
    use std::sync::OnceLock;

    struct Data {
        points: Vec<ProjPoint3>,
        scan: LineScan,
        adj: Vec<Vec<usize>>,
    }

    fn data() -> &'static Data {
        static D: OnceLock<Data> = OnceLock::new();
        D.get_or_init(|| {
            let points = surface_points().unwrap();
            let scan = surface_lines().unwrap();
            let adj = line_graph(&scan.lines);
            Data { points, scan, adj }
        })
    }

    fn z() -> FieldElem {
        FieldElem::zeta()
    }

    #[test]
    fn point_counts() {
        assert_eq!(projective_points().len(), 820);
        assert_eq!(data().points.len(), 280);
        let o = FieldElem::ZERO;
        let i = FieldElem::ONE;
        assert!(quartic(&[i, z(), o, o]).is_zero());
        assert!(!quartic(&[i, o, o, o]).is_zero());
    }

    #[test]
    fn line_scan() {
        let d = data();
        assert_eq!(d.scan.scanned, 7462);
        assert_eq!(d.scan.lines.len(), 112);
        let o = FieldElem::ZERO;
        let i = FieldElem::ONE;
        let l = Line3::through([i, o, z(), o], [o, i, o, z()]).unwrap();
        assert!(l.on_surface());
        assert!(d.scan.lines.contains(&l));
    }

    #[test]
    fn canonical_form_is_idempotent_and_injective() {
        let all = all_lines();
        let distinct: BTreeSet<&Line3> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for l in all.iter().step_by(37) {
            let [a, b] = l.rows();
            let mixed: Vec4 = std::array::from_fn(|k| a[k] + z() * b[k]);
            assert_eq!(&Line3::through(mixed, b).unwrap(), l);
            assert_eq!(&Line3::through(a, b).unwrap(), l);
        }
    }

    #[test]
    fn configuration_degrees() {
        let d = data();
        let c = configuration(&d.points, &d.scan.lines).unwrap();
        assert_eq!(c.incidences(), 1120);
        let covered: BTreeSet<usize> = c.line_points.iter().flatten().copied().collect();
        assert_eq!(covered.len(), 280);
    }

    #[test]
    fn line_graph_is_30_regular() {
        let d = data();
        assert!(d.adj.iter().all(|n| n.len() == 30));
        assert_eq!(d.adj.iter().map(Vec::len).sum::<usize>() / 2, 1680);
    }

    #[test]
    fn fibration_for_every_line() {
        let d = data();
        for l in 0..d.scan.lines.len() {
            let f = fibration(&d.scan.lines, &d.adj, l).unwrap();
            assert_eq!(f.triples.len(), 10);
            assert_eq!(f.sections.len(), 81);
            for (_, p) in &f.triples {
                assert!(d.scan.lines[l].points().contains(p));
            }
        }
    }
}
