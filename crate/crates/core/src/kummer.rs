//! Rational curves and points on the Kummer surface of A = E × E, assembled
//! from the 2-torsion, the genus-4 translates and the elliptic translates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::abelian::{family_d, family_e, is_two_torsion, ker2, ker4, APoint, EllipticOnA, Genus4OnA};
use crate::error::{Error, Result};
use crate::quadric::P1;
use crate::quaternion::{ns_to_herm, pairing, rank1, solve_genus4, HermMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KummerCurve {
    /// Image of the exceptional curve over a 2-torsion point (index into `ker2()`).
    Exceptional(usize),
    /// Image of a genus-4 translate (index into `family_d()`).
    GenusImage(usize),
    /// Image of an elliptic translate (index into `family_e()`).
    EllipticImage(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KummerPoint {
    /// A tangent direction at a 2-torsion point (index into `ker2()`).
    Directional { a: usize, dir: P1 },
    /// The image of b and −b for b in Ker[4] ∖ Ker[2] (indices into `ker4()`, b < −b).
    PairedFour { b: usize, neg: usize },
}

#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    pub curves: Vec<KummerCurve>,
    pub points: Vec<KummerPoint>,
    pub curve_points: Vec<Vec<usize>>,
    pub point_curves: Vec<Vec<usize>>,
    pub curve_names: Vec<String>,
    pub point_names: Vec<String>,
    pub classes: Vec<Option<HermMat>>,
    pub two_torsion_on: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn incidences(&self) -> usize {
        self.curve_points.iter().map(Vec::len).sum()
    }

    /// Indices of the sixteen exceptional curves.
    pub fn exceptional(&self) -> Vec<usize> {
        self.indices(|c| matches!(c, KummerCurve::Exceptional(_)))
    }

    /// Indices of the sixteen genus-4 images.
    pub fn genus_images(&self) -> Vec<usize> {
        self.indices(|c| matches!(c, KummerCurve::GenusImage(_)))
    }

    fn indices(&self, f: impl Fn(&KummerCurve) -> bool) -> Vec<usize> {
        (0..self.curves.len()).filter(|&i| f(&self.curves[i])).collect()
    }

    pub fn shared_points(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.curve_points[i], &self.curve_points[j]);
        a.iter().filter(|p| b.contains(p)).count()
    }
}

fn dir_name(d: &P1) -> String {
    crate::quaternion::class_name(*d)
}

/// Assembles the 112 curves and 280 points from precomputed families.
pub fn build_structure_from(d: &[Genus4OnA], e: &[EllipticOnA]) -> Result<IncidenceStructure> {
    let k2 = ker2();
    let k4 = ker4();
    let idx2 = |p: &APoint| k2.iter().position(|q| q == p).expect("2-torsion point");
    let idx4 = |p: &APoint| k4.iter().position(|q| q == p).expect("4-torsion point");

    let mut points = Vec::new();
    let mut point_names = Vec::new();
    for (a, pa) in k2.iter().enumerate() {
        for dir in P1::all_gf9() {
            points.push(KummerPoint::Directional { a, dir });
            point_names.push(format!("{}@{}", pa.name(), dir_name(&dir)));
        }
    }
    for (b, pb) in k4.iter().enumerate() {
        if is_two_torsion(pb) {
            continue;
        }
        let neg = idx4(&pb.neg());
        if b < neg {
            points.push(KummerPoint::PairedFour { b, neg });
            point_names.push(format!("±{}", pb.name()));
        }
    }
    let point_index: BTreeMap<KummerPoint, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let pair_of = |p: &APoint| {
        let (i, j) = (idx4(p), idx4(&p.neg()));
        point_index[&KummerPoint::PairedFour { b: i.min(j), neg: i.max(j) }]
    };
    let directional = |a: usize, dir: P1| point_index[&KummerPoint::Directional { a, dir }];

    let j_c = ns_to_herm(&solve_genus4()?);
    let mut curves = Vec::new();
    let mut curve_names = Vec::new();
    let mut curve_points = Vec::new();
    let mut classes = Vec::new();
    let mut two_torsion_on = Vec::new();
    for (a, pa) in k2.iter().enumerate() {
        curves.push(KummerCurve::Exceptional(a));
        curve_names.push(format!("E{}", pa.name()));
        curve_points.push(P1::all_gf9().into_iter().map(|d| directional(a, d)).collect::<Vec<_>>());
        classes.push(None);
        two_torsion_on.push(vec![a]);
    }
    for (i, g) in d.iter().enumerate() {
        curves.push(KummerCurve::GenusImage(i));
        curve_names.push(format!("C+{}", g.translation.name()));
        curve_points.push(g.points.iter().map(|(p, dir)| directional(idx2(p), *dir)).collect());
        classes.push(Some(j_c));
        two_torsion_on.push(g.points.iter().map(|(p, _)| idx2(p)).collect());
    }
    for (i, g) in e.iter().enumerate() {
        curves.push(KummerCurve::EllipticImage(i));
        curve_names.push(g.name());
        let mut pts = Vec::new();
        let mut tors = Vec::new();
        for (a, pa) in k2.iter().enumerate() {
            if g.contains(pa) {
                pts.push(directional(a, g.direction));
                tors.push(a);
            }
        }
        for p in k4.iter().filter(|p| !is_two_torsion(p) && g.contains(p)) {
            let k = pair_of(p);
            if !pts.contains(&k) {
                pts.push(k);
            }
        }
        curve_points.push(pts);
        classes.push(Some(rank1(g.a, g.b)?));
        two_torsion_on.push(tors);
    }
    for pts in curve_points.iter_mut() {
        pts.sort_unstable();
    }

    let mut point_curves = vec![Vec::new(); points.len()];
    for (ci, pts) in curve_points.iter().enumerate() {
        for &p in pts {
            point_curves[p].push(ci);
        }
    }
    for (ci, pts) in curve_points.iter().enumerate() {
        if pts.len() != 10 {
            return Err(Error::DegreeViolation(format!("{} has {} points", curve_names[ci], pts.len())));
        }
    }
    for (pi, cs) in point_curves.iter().enumerate() {
        if cs.len() != 4 {
            return Err(Error::DegreeViolation(format!("{} is on {} curves", point_names[pi], cs.len())));
        }
    }
    Ok(IncidenceStructure { curves, points, curve_points, point_curves, curve_names, point_names, classes, two_torsion_on })
}

pub fn build_structure() -> Result<IncidenceStructure> {
    build_structure_from(&family_d()?, &family_e()?)
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveGraph {
    pub adjacency: Vec<Vec<usize>>,
    pub edges: usize,
    pub max_shared: usize,
    pub exceptional_internal_edges: usize,
    pub genus_internal_edges: usize,
    pub cross_degrees: Vec<usize>,
}

impl CurveGraph {
    pub fn holds(&self) -> bool {
        self.adjacency.len() == 112
            && self.adjacency.iter().all(|n| n.len() == 30)
            && self.max_shared == 1
            && self.exceptional_internal_edges == 0
            && self.genus_internal_edges == 0
            && self.cross_degrees.iter().all(|&d| d == 10)
    }
}

/// Curves are adjacent when they share a point.
pub fn curve_graph(s: &IncidenceStructure) -> Result<CurveGraph> {
    let n = s.curves.len();
    let mut adjacency = vec![Vec::new(); n];
    let mut max_shared = 0;
    for i in 0..n {
        for j in i + 1..n {
            let k = s.shared_points(i, j);
            max_shared = max_shared.max(k);
            if k > 0 {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    if max_shared > 1 {
        return Err(Error::DegreeViolation(format!("two curves share {max_shared} points")));
    }
    let (ex, ge) = (s.exceptional(), s.genus_images());
    let internal = |set: &[usize]| set.iter().map(|&i| adjacency[i].iter().filter(|j| set.contains(j)).count()).sum::<usize>() / 2;
    let mut cross_degrees: Vec<usize> = ex.iter().map(|&i| adjacency[i].iter().filter(|j| ge.contains(j)).count()).collect();
    cross_degrees.extend(ge.iter().map(|&i| adjacency[i].iter().filter(|j| ex.contains(j)).count()));
    Ok(CurveGraph {
        edges: adjacency.iter().map(Vec::len).sum::<usize>() / 2,
        exceptional_internal_edges: internal(&ex),
        genus_internal_edges: internal(&ge),
        cross_degrees,
        adjacency,
        max_shared,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub curve: String,
    pub self_on_a: i64,
    pub two_torsion: usize,
    pub after_blowup: i64,
    pub on_kummer: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Ledger {
    pub entries: Vec<LedgerEntry>,
    /// Pairs of non-exceptional curves whose intersection on the Kummer
    /// surface, predicted from A, differs from their number of common points.
    pub pair_mismatches: Vec<(String, String, i64, usize)>,
    pub pairs_checked: usize,
}

impl Ledger {
    pub fn holds(&self) -> bool {
        self.entries.len() == 112 && self.entries.iter().all(|e| e.on_kummer == -2) && self.pair_mismatches.is_empty()
    }
}

/// Self-intersections through blow-up and quotient, and the predicted
/// intersection of every pair against the assembled incidences.
pub fn intersection_ledger(s: &IncidenceStructure) -> Ledger {
    let mut entries = Vec::new();
    for (i, c) in s.curves.iter().enumerate() {
        let t = s.two_torsion_on[i].len();
        let entry = match (c, &s.classes[i]) {
            (KummerCurve::Exceptional(_), _) => LedgerEntry {
                curve: s.curve_names[i].clone(),
                self_on_a: 0,
                two_torsion: t,
                after_blowup: -1,
                // the preimage of its image is twice the exceptional curve
                on_kummer: -(2 * 2) / 2,
            },
            (_, Some(m)) => {
                let self_on_a = pairing(m, m);
                let after = self_on_a - t as i64;
                LedgerEntry { curve: s.curve_names[i].clone(), self_on_a, two_torsion: t, after_blowup: after, on_kummer: after / 2 }
            }
            (_, None) => unreachable!("non-exceptional curves carry a class"),
        };
        entries.push(entry);
    }
    let mut pair_mismatches = Vec::new();
    let mut pairs_checked = 0;
    let n = s.curves.len();
    for i in 0..n {
        for j in i + 1..n {
            let shared = s.shared_points(i, j);
            let predicted = match (&s.classes[i], &s.classes[j]) {
                (Some(a), Some(b)) => {
                    let common = s.two_torsion_on[i].iter().filter(|x| s.two_torsion_on[j].contains(x)).count() as i64;
                    let v = pairing(a, b) - common;
                    if v % 2 != 0 {
                        i64::MIN
                    } else {
                        v / 2
                    }
                }
                (None, None) => 0,
                _ => {
                    let ex = if s.classes[i].is_none() { i } else { j };
                    let other = i + j - ex;
                    i64::from(s.two_torsion_on[other].contains(&s.two_torsion_on[ex][0]))
                }
            };
            pairs_checked += 1;
            if predicted != shared as i64 {
                pair_mismatches.push((s.curve_names[i].clone(), s.curve_names[j].clone(), predicted, shared));
            }
        }
    }
    Ledger { entries, pair_mismatches, pairs_checked }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointProfile {
    pub directional_ok: bool,
    pub paired_ok: bool,
}

/// Each directional point lies on one exceptional, one genus and two elliptic
/// images, and each point at each 2-torsion point has a distinct direction;
/// paired points lie on four elliptic images only.
pub fn point_profile(s: &IncidenceStructure) -> PointProfile {
    let mut directional_ok = true;
    let mut paired_ok = true;
    for (p, cs) in s.points.iter().zip(&s.point_curves) {
        let count = |f: fn(&KummerCurve) -> bool| cs.iter().filter(|&&c| f(&s.curves[c])).count();
        let ex = count(|c| matches!(c, KummerCurve::Exceptional(_)));
        let ge = count(|c| matches!(c, KummerCurve::GenusImage(_)));
        let el = count(|c| matches!(c, KummerCurve::EllipticImage(_)));
        match p {
            KummerPoint::Directional { .. } => directional_ok &= (ex, ge, el) == (1, 1, 2),
            KummerPoint::PairedFour { .. } => paired_ok &= (ex, ge, el) == (0, 0, 4),
        }
    }
    PointProfile { directional_ok, paired_ok }
}
