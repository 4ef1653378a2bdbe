//! The Leech lattice Λ (coordinates scaled so that ⟨x,y⟩ = −x·y/8), the even
//! unimodular Lorentzian lattice U ⊕ Λ, and the Leech roots orthogonal to the
//! A₂ ⊕ A₂ root lattice spanned by x, z, p, q.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::golay::{coord, SteinerSystem, INF};
use crate::snf::{smith_invariants, IntMatrix};

pub type LeechVector = [i32; 24];
pub type Rational = Ratio<i64>;

pub fn dot(a: &LeechVector, b: &LeechVector) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()
}

/// ⟨a,b⟩ = −a·b/8, or `None` if the product is not divisible by 8.
pub fn leech_pairing(a: &LeechVector, b: &LeechVector) -> Option<i64> {
    let d = dot(a, b);
    (d % 8 == 0).then_some(-d / 8)
}

/// ν_A: the indicator vector of a set of labels.
pub fn nu(labels: &[i32]) -> LeechVector {
    let mut v = [0; 24];
    for &l in labels {
        v[coord(l)] += 1;
    }
    v
}

pub fn nu_omega() -> LeechVector {
    [1; 24]
}

pub fn vadd(a: &LeechVector, b: &LeechVector) -> LeechVector {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn vsub(a: &LeechVector, b: &LeechVector) -> LeechVector {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn vscale(k: i32, a: &LeechVector) -> LeechVector {
    std::array::from_fn(|i| k * a[i])
}

pub fn is_in_lattice(code: &SteinerSystem, v: &LeechVector) -> bool {
    let m = v[0].rem_euclid(2);
    if v.iter().any(|&c| (c - m).rem_euclid(2) != 0) {
        return false;
    }
    let support = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| ((c - m) / 2).rem_euclid(2) == 1)
        .fold(0u32, |acc, (i, _)| acc | 1 << i);
    let sum: i64 = v.iter().map(|&c| c as i64).sum();
    code.is_codeword(support) && (sum - 4 * m as i64).rem_euclid(8) == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Shape {
    /// (±4², 0²²)
    Four,
    /// (±2⁸, 0¹⁶) on an octad
    Two,
    /// (∓3, ±1²³)
    Three,
}

pub fn shape(v: &LeechVector) -> Option<Shape> {
    let max = v.iter().map(|c| c.abs()).max().unwrap_or(0);
    match max {
        4 if v.iter().filter(|c| c.abs() == 4).count() == 2 => Some(Shape::Four),
        2 if v.iter().filter(|c| c.abs() == 2).count() == 8 => Some(Shape::Two),
        3 if v.iter().filter(|c| c.abs() == 3).count() == 1
            && v.iter().filter(|c| c.abs() == 1).count() == 23 =>
        {
            Some(Shape::Three)
        }
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct Shell {
    vectors: Vec<LeechVector>,
    census: BTreeMap<Shape, usize>,
}

impl Shell {
    pub fn vectors(&self) -> &[LeechVector] {
        &self.vectors
    }

    pub fn census(&self) -> &BTreeMap<Shape, usize> {
        &self.census
    }

    pub fn contains(&self, v: &LeechVector) -> bool {
        self.vectors.binary_search(v).is_ok()
    }
}

fn shape_four() -> Vec<LeechVector> {
    let mut out = Vec::new();
    for i in 0..24 {
        for j in i + 1..24 {
            for (si, sj) in [(4, 4), (4, -4), (-4, 4), (-4, -4)] {
                let mut v = [0; 24];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

fn shape_two(code: &SteinerSystem) -> Vec<LeechVector> {
    code.octads()
        .par_iter()
        .flat_map_iter(|&o| {
            let pos: Vec<usize> = (0..24).filter(|&c| o >> c & 1 == 1).collect();
            (0u32..256).filter(|s| s.count_ones() % 2 == 0).map(move |signs| {
                let mut v = [0; 24];
                for (k, &p) in pos.iter().enumerate() {
                    v[p] = if signs >> k & 1 == 1 { -2 } else { 2 };
                }
                v
            })
        })
        .collect()
}

fn shape_three(code: &SteinerSystem) -> Vec<LeechVector> {
    let words: Vec<u32> = code.codewords().collect();
    words
        .par_iter()
        .flat_map_iter(|&c| {
            (0..24).map(move |i| {
                let mut v: LeechVector = std::array::from_fn(|j| if c >> j & 1 == 1 { -1 } else { 1 });
                v[i] *= -3;
                v
            })
        })
        .collect()
}

/// All 196560 vectors with ⟨v,v⟩ = −4, sorted lexicographically.
pub fn minimal_shell(code: &SteinerSystem) -> Result<Shell> {
    let families = [
        (Shape::Four, shape_four(), 1104),
        (Shape::Two, shape_two(code), 97152),
        (Shape::Three, shape_three(code), 98304),
    ];
    let mut census = BTreeMap::new();
    let mut vectors = Vec::with_capacity(196560);
    for (s, vs, expected) in families {
        if vs.len() != expected {
            return Err(Error::CountMismatch { what: format!("shell shape {s:?}"), expected, found: vs.len() });
        }
        census.insert(s, vs.len());
        vectors.extend(vs);
    }
    vectors.par_sort_unstable();
    vectors.dedup();
    if vectors.len() != 196560 {
        return Err(Error::CountMismatch { what: "minimal shell".into(), expected: 196560, found: vectors.len() });
    }
    Ok(Shell { vectors, census })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LorentzVector {
    pub m: i64,
    pub n: i64,
    pub lambda: LeechVector,
}

impl LorentzVector {
    pub fn new(m: i64, n: i64, lambda: LeechVector) -> LorentzVector {
        LorentzVector { m, n, lambda }
    }

    /// The Weyl vector ρ = (1, 0, 0).
    pub fn rho() -> LorentzVector {
        LorentzVector::new(1, 0, [0; 24])
    }

    pub fn zero() -> LorentzVector {
        LorentzVector::new(0, 0, [0; 24])
    }

    pub fn pairing(&self, other: &LorentzVector) -> i64 {
        let l = leech_pairing(&self.lambda, &other.lambda).expect("lattice vectors pair integrally");
        self.m * other.n + other.m * self.n + l
    }

    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    pub fn add(&self, other: &LorentzVector) -> LorentzVector {
        LorentzVector::new(self.m + other.m, self.n + other.n, vadd(&self.lambda, &other.lambda))
    }

    pub fn sub(&self, other: &LorentzVector) -> LorentzVector {
        LorentzVector::new(self.m - other.m, self.n - other.n, vsub(&self.lambda, &other.lambda))
    }

    pub fn scale(&self, k: i64) -> LorentzVector {
        LorentzVector::new(k * self.m, k * self.n, vscale(k as i32, &self.lambda))
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0 && self.lambda.iter().all(|&c| c == 0)
    }
}

/// The Leech root (−1 − ⟨λ,λ⟩/2, 1, λ) attached to a lattice vector λ.
pub fn root_from(lambda: &LeechVector) -> Result<LorentzVector> {
    let ll = leech_pairing(lambda, lambda)
        .filter(|l| l % 2 == 0)
        .ok_or_else(|| Error::NotInLattice(format!("{lambda:?}")))?;
    Ok(LorentzVector::new(-1 - ll / 2, 1, *lambda))
}

#[derive(Clone, Debug)]
pub struct RootQuadruple {
    pub x: LorentzVector,
    pub z: LorentzVector,
    pub p: LorentzVector,
    pub q: LorentzVector,
}

impl RootQuadruple {
    pub fn as_array(&self) -> [&LorentzVector; 4] {
        [&self.x, &self.z, &self.p, &self.q]
    }

    pub fn gram(&self) -> [[i64; 4]; 4] {
        let r = self.as_array();
        std::array::from_fn(|i| std::array::from_fn(|j| r[i].pairing(r[j])))
    }

    /// ⟨r,x⟩, ⟨r,z⟩, ⟨r,p⟩, ⟨r,q⟩.
    pub fn pairings(&self, r: &LorentzVector) -> [i64; 4] {
        self.as_array().map(|s| s.pairing(r))
    }
}

pub const A2_A2: [[i64; 4]; 4] = [[-2, 1, 0, 0], [1, -2, 0, 0], [0, 0, -2, 1], [0, 0, 1, -2]];

/// x, z, p, q from X = 4ν_∞ + ν_Ω, Z = 0, P = 4ν_∞ + 4ν₀, Q = ν_Ω − 4ν₁.
pub fn base_roots() -> RootQuadruple {
    let big_x = vadd(&vscale(4, &nu(&[INF])), &nu_omega());
    let big_p = vadd(&vscale(4, &nu(&[INF])), &vscale(4, &nu(&[0])));
    let big_q = vsub(&nu_omega(), &vscale(4, &nu(&[1])));
    let quad = RootQuadruple {
        x: root_from(&big_x).unwrap(),
        z: root_from(&[0; 24]).unwrap(),
        p: root_from(&big_p).unwrap(),
        q: root_from(&big_q).unwrap(),
    };
    debug_assert_eq!(quad.gram(), A2_A2);
    quad
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootType {
    /// 2ν_K with K ∋ ∞, 0 and K ∌ 1
    I,
    /// 3 at ∞, −1 on the rest of an octad K ∋ ∞, 1 with K ∌ 0, 1 elsewhere
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthRoot {
    pub root: LorentzVector,
    pub kind: RootType,
    pub octad: u32,
}

fn classify(lambda: &LeechVector) -> Option<(RootType, u32)> {
    let mask = |pred: &dyn Fn(i32) -> bool| {
        lambda.iter().enumerate().filter(|(_, &c)| pred(c)).fold(0u32, |m, (i, _)| m | 1 << i)
    };
    if lambda.iter().all(|&c| c == 0 || c == 2) {
        Some((RootType::I, mask(&|c| c == 2)))
    } else if lambda[0] == 3 && lambda[1..].iter().all(|&c| c == 1 || c == -1) {
        Some((RootType::II, mask(&|c| c == -1) | 1))
    } else {
        None
    }
}

/// The 112 Leech roots orthogonal to x, z, p, q, in lexicographic order of λ.
pub fn orthogonal_roots(shell: &Shell) -> Result<Vec<OrthRoot>> {
    let quad = base_roots();
    // ⟨r, z⟩ = 0 forces m = 1, i.e. λ in the minimal shell
    let mut roots: Vec<OrthRoot> = shell
        .vectors()
        .par_iter()
        .filter_map(|v| {
            let r = root_from(v).ok()?;
            (quad.pairings(&r) == [0; 4]).then_some(r)
        })
        .map(|r| {
            let (kind, octad) = classify(&r.lambda).expect("orthogonal root of unexpected shape");
            OrthRoot { root: r, kind, octad }
        })
        .collect();
    roots.sort_by_key(|a| a.root.lambda);
    if roots.len() != 112 {
        return Err(Error::CountMismatch { what: "roots orthogonal to R".into(), expected: 112, found: roots.len() });
    }
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainKind {
    A5,
    A3A2,
}

#[derive(Clone, Debug, Serialize)]
pub struct Attachment {
    /// Required values of ⟨r,x⟩, ⟨r,z⟩, ⟨r,p⟩, ⟨r,q⟩.
    pub pattern: [i64; 4],
    pub count: usize,
    /// |det| of the Gram matrix of x, z, p, q, r.
    pub gram_det: i64,
    pub projection_norm: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainRoots {
    pub kind: ChainKind,
    pub attachments: Vec<Attachment>,
    pub total: usize,
    pub projection_norms: BTreeSet<String>,
}

pub fn attachment_patterns(kind: ChainKind) -> Vec<[i64; 4]> {
    match kind {
        ChainKind::A5 => vec![[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]],
        ChainKind::A3A2 => vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    }
}

fn solve_rational(g: [[i64; 4]; 4], b: [i64; 4]) -> Result<[Rational; 4]> {
    let mut a: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            let mut row: Vec<Rational> = g[i].iter().map(|&v| Rational::from_integer(v)).collect();
            row.push(Rational::from_integer(b[i]));
            row
        })
        .collect();
    for c in 0..4 {
        let p = (c..4)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::SingularSystem("R Gram matrix".into()))?;
        a.swap(c, p);
        let piv = a[c][c];
        for k in c..5 {
            a[c][k] /= piv;
        }
        for r in 0..4 {
            if r != c {
                let f = a[r][c];
                for k in c..5 {
                    let v = a[c][k];
                    a[r][k] -= f * v;
                }
            }
        }
    }
    Ok(std::array::from_fn(|i| a[i][4]))
}

/// Norm of the projection of a root r into the orthogonal complement of R,
/// given b = (⟨r,s⟩)ₛ: −2 − bᵀG⁻¹b.
pub fn projection_norm(b: [i64; 4]) -> Result<Rational> {
    let c = solve_rational(A2_A2, b)?;
    let along_r: Rational = c.iter().zip(b).map(|(&ci, bi)| ci * Rational::from_integer(bi)).sum();
    Ok(Rational::from_integer(-2) - along_r)
}

/// Leech roots r with R + r of the requested type, enumerated separately for
/// each of the four attachments to the Dynkin diagram of R.
pub fn chain_roots(shell: &Shell, kind: ChainKind) -> Result<ChainRoots> {
    let quad = base_roots();
    let basis = quad.as_array();
    let mut attachments = Vec::new();
    let mut norms = BTreeSet::new();
    for pattern in attachment_patterns(kind) {
        // translate the shell by a root s with ⟨r,s⟩ = 0: (λ − λ_s)² = −4
        let s = basis[pattern.iter().position(|&t| t == 0).unwrap()];
        let found: Vec<LorentzVector> = shell
            .vectors()
            .par_iter()
            .filter_map(|v| {
                let r = root_from(&vadd(v, &s.lambda)).ok()?;
                (quad.pairings(&r) == pattern).then_some(r)
            })
            .collect();
        let mut rows: Vec<Vec<i64>> = A2_A2.iter().map(|r| r.to_vec()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(pattern[i]);
        }
        let mut last = pattern.to_vec();
        last.push(-2);
        rows.push(last);
        let det = IntMatrix::from_rows(&rows).determinant().abs().to_i64().unwrap();
        let norm = projection_norm(pattern)?;
        norms.insert(norm.to_string());
        attachments.push(Attachment { pattern, count: found.len(), gram_det: det, projection_norm: norm.to_string() });
    }
    let total = attachments.iter().map(|a| a.count).sum();
    let expected = match kind {
        ChainKind::A5 => 5184,
        ChainKind::A3A2 => 648,
    };
    if total != expected {
        return Err(Error::CountMismatch { what: format!("{kind:?} roots"), expected, found: total });
    }
    Ok(ChainRoots { kind, attachments, total, projection_norms: norms })
}

/// w = ρ + x + z + p + q, the projection of ρ orthogonal to R.
pub fn weyl_projection() -> LorentzVector {
    let q = base_roots();
    LorentzVector::rho().add(&q.x).add(&q.z).add(&q.p).add(&q.q)
}

#[derive(Clone, Debug)]
pub struct RootIncidence {
    pub gram: Vec<Vec<i64>>,
    pub adjacency: Vec<Vec<usize>>,
}

impl RootIncidence {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for (i, nb) in self.adjacency.iter().enumerate() {
            e.extend(nb.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        e
    }
}

pub fn root_incidence(roots: &[OrthRoot]) -> Result<RootIncidence> {
    let n = roots.len();
    let gram: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| roots.iter().map(|b| a.root.pairing(&b.root)).collect())
        .collect();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match gram[i][j] {
                0 => {}
                1 => adjacency[i].push(j),
                v => {
                    return Err(Error::PairingOutOfRange(format!("roots {i} and {j} pair to {v}")));
                }
            }
        }
    }
    Ok(RootIncidence { gram, adjacency })
}

/// The pairing predicted by the octad rule: same type pair to 1 iff the
/// octads meet in 2 points, different types iff they meet in 4.
pub fn octad_rule(a: &OrthRoot, b: &OrthRoot) -> i64 {
    let meet = (a.octad & b.octad).count_ones();
    match (a.kind == b.kind, meet) {
        (true, 2) | (false, 4) => 1,
        _ => 0,
    }
}

#[derive(Clone, Debug)]
pub struct FiberClasses {
    pub triples: Vec<[usize; 3]>,
    pub fiber: LorentzVector,
    pub sections: Vec<usize>,
}

/// Splits the 30 neighbours of a root into ten A₂ triples with a common sum
/// F of norm 0, and checks that each of the other 81 roots meets F once.
pub fn fiber_classes(roots: &[OrthRoot], inc: &RootIncidence, root: usize) -> Result<FiberClasses> {
    let nb = &inc.adjacency[root];
    let fail = |msg: String| Error::PartitionNotFound(format!("root {root}: {msg}"));
    let mut seen = BTreeSet::new();
    let mut triples = Vec::new();
    for &a in nb {
        if seen.contains(&a) {
            continue;
        }
        let inner: Vec<usize> = nb.iter().copied().filter(|&b| inc.gram[a][b] == 1).collect();
        if inner.len() != 2 || inc.gram[inner[0]][inner[1]] != 1 {
            return Err(fail(format!("neighbour {a} is not in a triangle")));
        }
        let mut t = [a, inner[0], inner[1]];
        t.sort_unstable();
        for &v in &t {
            seen.insert(v);
        }
        triples.push(t);
    }
    if triples.len() != 10 {
        return Err(fail(format!("{} triples", triples.len())));
    }
    let sums: Vec<LorentzVector> = triples
        .iter()
        .map(|t| roots[t[0]].root.add(&roots[t[1]].root).add(&roots[t[2]].root))
        .collect();
    if sums.iter().any(|s| *s != sums[0]) {
        return Err(fail("triple sums differ".into()));
    }
    let fiber = sums[0].clone();
    if fiber.norm() != 0 {
        return Err(fail(format!("fiber norm {}", fiber.norm())));
    }
    let sections: Vec<usize> = (0..roots.len()).filter(|&i| i != root && !nb.contains(&i)).collect();
    for &f in &sections {
        let meets = nb.iter().filter(|&&k| inc.gram[f][k] == 1).count();
        if roots[f].root.pairing(&fiber) != 1 || meets != 10 {
            return Err(fail(format!("section {f} meets {meets} neighbours")));
        }
    }
    Ok(FiberClasses { triples, fiber, sections })
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub rank: usize,
    pub nonunit_factors: Vec<String>,
    pub discriminant: String,
    /// Index of the lattice spanned by the 30 neighbours of a root and one
    /// further root inside the lattice spanned by all 112.
    pub sublattice_index: Option<u64>,
}

pub fn generation_check(roots: &[OrthRoot], inc: &RootIncidence) -> GenerationReport {
    let g = IntMatrix::from_rows(&inc.gram);
    let inv = smith_invariants(&g);
    let nonzero: Vec<&BigInt> = inv.iter().filter(|d| !d.is_zero()).collect();
    let disc: BigInt = nonzero.iter().copied().product();
    let nonunit = nonzero.iter().filter(|d| **d != &BigInt::from(1)).map(|d| d.to_string()).collect();
    let sub = (|| {
        let fc = fiber_classes(roots, inc, 0).ok()?;
        // basis f, F and two roots from each triple; the third is F minus the other two
        let mut basis = vec![roots[fc.sections[0]].root.clone(), fc.fiber.clone()];
        for t in &fc.triples {
            basis.push(roots[t[0]].root.clone());
            basis.push(roots[t[1]].root.clone());
        }
        let rows: Vec<Vec<i64>> = basis.iter().map(|a| basis.iter().map(|b| a.pairing(b)).collect()).collect();
        let det = IntMatrix::from_rows(&rows).determinant().abs();
        if disc.is_zero() || !(&det % &disc).is_zero() {
            return None;
        }
        let sq = (&det / &disc).to_u64()?;
        let r = (sq as f64).sqrt().round() as u64;
        (r * r == sq).then_some(r)
    })();
    GenerationReport { rank: nonzero.len(), nonunit_factors: nonunit, discriminant: disc.to_string(), sublattice_index: sub }
}

#[derive(Clone, Debug)]
pub struct SixteenTen {
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
}

/// 𝒜: type-(i) roots whose octad contains 2; ℬ: type-(ii) roots whose octad
/// contains 2.
pub fn sixteen_ten_roots(roots: &[OrthRoot], inc: &RootIncidence) -> Result<SixteenTen> {
    let two = 1u32 << coord(2);
    let side = |t: RootType| -> Vec<usize> {
        (0..roots.len()).filter(|&i| roots[i].kind == t && roots[i].octad & two != 0).collect()
    };
    let (a_side, b_side) = (side(RootType::I), side(RootType::II));
    if a_side.len() != 16 || b_side.len() != 16 {
        return Err(Error::CountMismatch { what: "(16)_10 sides".into(), expected: 16, found: a_side.len().min(b_side.len()) });
    }
    for (side, other) in [(&a_side, &b_side), (&b_side, &a_side)] {
        for &i in side.iter() {
            if side.iter().any(|&j| j != i && inc.gram[i][j] != 0) {
                return Err(Error::PairingOutOfRange(format!("root {i} meets its own side")));
            }
            let cross = other.iter().filter(|&&j| inc.gram[i][j] == 1).count();
            if cross != 10 {
                return Err(Error::DegreeViolation(format!("root {i} meets {cross} roots across")));
            }
        }
    }
    Ok(SixteenTen { a_side, b_side })
}
