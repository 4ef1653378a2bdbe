//! The supersingular curve E: y² = x³ − x in characteristic 3, the abelian
//! surface A = E × E, the genus-4 curve Y² = X⁹ − X mapped into A, and the
//! families of genus-4 and elliptic curves through its 2-torsion points.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, Level};
use crate::poly::{FieldOps, Poly, RatFun};
use crate::quadric::P1;
use crate::quaternion::{
    class_name, decompositions, ns_to_herm, origin_curves, pairing, rank1, solve_genus4, tangent_class, QuatO,
};

/// A point on a Weierstrass curve with coordinates in `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pt<T> {
    Infinity,
    Affine(T, T),
}

pub type EPoint = Pt<FieldElem>;

/// Chord-and-tangent addition on y² = x³ − x in characteristic 3.
pub fn chord_add<T: FieldOps>(p: &Pt<T>, q: &Pt<T>) -> Pt<T> {
    let (x1, y1, x2, y2) = match (p, q) {
        (Pt::Infinity, _) => return q.clone(),
        (_, Pt::Infinity) => return p.clone(),
        (Pt::Affine(x1, y1), Pt::Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let lambda = if x1 == x2 {
        if (y1.clone() + y2.clone()).is_zero() {
            return Pt::Infinity;
        }
        // (3x² − 1)/(2y) = 1/y
        y1.try_inv().expect("nonzero y")
    } else {
        (y2.clone() - y1.clone()) * (x2.clone() - x1.clone()).try_inv().expect("distinct x")
    };
    let x3 = lambda.clone() * lambda.clone() - x1.clone() - x2.clone();
    let y3 = lambda * (x1.clone() - x3.clone()) - y1.clone();
    Pt::Affine(x3, y3)
}

fn c(k: i64) -> FieldElem {
    FieldElem::from_int(k)
}

fn z(k: i64) -> FieldElem {
    FieldElem::zeta_pow(k)
}

impl EPoint {
    pub fn on_curve(&self) -> bool {
        match self {
            Pt::Infinity => true,
            Pt::Affine(x, y) => *y * *y == *x * *x * *x - *x,
        }
    }

    pub fn neg(&self) -> EPoint {
        match self {
            Pt::Infinity => Pt::Infinity,
            Pt::Affine(x, y) => Pt::Affine(*x, -*y),
        }
    }

    pub fn add(&self, q: &EPoint) -> EPoint {
        chord_add(self, q)
    }

    pub fn sub(&self, q: &EPoint) -> EPoint {
        self.add(&q.neg())
    }

    pub fn double(&self) -> EPoint {
        self.add(self)
    }

    pub fn mul(&self, n: i64) -> EPoint {
        let mut base = if n < 0 { self.neg() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Pt::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.double();
            k >>= 1;
        }
        acc
    }

    /// σ: (x, y) ↦ (x + 1, y).
    pub fn sigma(&self) -> EPoint {
        match self {
            Pt::Infinity => Pt::Infinity,
            Pt::Affine(x, y) => Pt::Affine(*x + FieldElem::ONE, *y),
        }
    }

    /// τ: (x, y) ↦ (−x, ζ²y).
    pub fn tau(&self) -> EPoint {
        match self {
            Pt::Infinity => Pt::Infinity,
            Pt::Affine(x, y) => Pt::Affine(-*x, z(2) * *y),
        }
    }

    /// Frobenius: cube both coordinates.
    pub fn frobenius(&self) -> EPoint {
        match self {
            Pt::Infinity => Pt::Infinity,
            Pt::Affine(x, y) => Pt::Affine(x.pow(3), y.pow(3)),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Pt::Infinity)
    }
}

impl std::fmt::Display for EPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pt::Infinity => write!(f, "O"),
            Pt::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// Evaluates a + bτ + cσ + dτσ at P.
pub fn endo_eval(x: QuatO, p: &EPoint) -> EPoint {
    let [a, b, cc, d] = x.0;
    let s = p.sigma();
    p.mul(a).add(&p.tau().mul(b)).add(&s.mul(cc)).add(&s.tau().mul(d))
}

/// The quotient by ⟨P₀⟩ in closed form: x = ζ²(1/x₁ − x₁), y = −ζ(y₁/x₁² + y₁).
pub fn pi_formula(p: &EPoint) -> EPoint {
    match p {
        Pt::Infinity => Pt::Infinity,
        Pt::Affine(x1, y1) => match x1.inv() {
            // x₁ = 0 is the kernel point; in projective form the image is O
            None => Pt::Infinity,
            Some(xi) => Pt::Affine(z(2) * (xi - *x1), -z(1) * (*y1 * xi * xi + *y1)),
        },
    }
}

/// Whether y₁ + y₂ − λ³ agrees with the chord value λ(x₁ − x₃) − y₁.
pub fn chord_forms_agree(p: &EPoint, q: &EPoint) -> bool {
    match (p, q) {
        (Pt::Affine(x1, y1), Pt::Affine(x2, y2)) if x1 != x2 => {
            let l = (*y2 - *y1) * (*x2 - *x1).inv().unwrap();
            let x3 = l * l - *x1 - *x2;
            let y_chord = l * (*x1 - x3) - *y1;
            let y_alt = *y1 + *y2 - l * l * l;
            y_chord == y_alt
        }
        (Pt::Affine(x1, y1), Pt::Affine(_, y2)) if y1 == y2 && !y1.is_zero() => {
            let yi = y1.inv().unwrap();
            let doubled = p.double();
            doubled == Pt::Affine(*x1 + yi * yi, -*y1 - yi * yi * yi)
        }
        _ => true,
    }
}

/// All points of E over the given level, sorted.
pub fn e_points(level: Level) -> Vec<EPoint> {
    let field = Field::new(level);
    let mut out = vec![Pt::Infinity];
    for x in field.elements() {
        let rhs = x * x * x - x;
        for y in field.elements() {
            if y * y == rhs {
                out.push(Pt::Affine(x, y));
            }
        }
    }
    out.sort();
    out
}

/// The sixteen 4-torsion points, named, 2-torsion first.
pub fn named_points() -> Vec<(String, EPoint)> {
    let q = [
        (z(1), z(3)),
        (z(2), z(1)),
        (z(3), z(1)),
        (-z(1), z(1)),
        (-z(2), z(3)),
        (-z(3), z(3)),
    ];
    let mut out = vec![
        ("P_inf".to_string(), Pt::Infinity),
        ("P_0".to_string(), Pt::Affine(c(0), c(0))),
        ("P_1".to_string(), Pt::Affine(c(1), c(0))),
        ("P_-1".to_string(), Pt::Affine(c(-1), c(0))),
    ];
    for (i, &(x, y)) in q.iter().enumerate() {
        out.push((format!("Q{}", i + 1), Pt::Affine(x, y)));
    }
    for (i, &(x, y)) in q.iter().enumerate() {
        out.push((format!("-Q{}", i + 1), Pt::Affine(x, -y)));
    }
    out
}

pub fn point_name(p: &EPoint) -> Option<String> {
    named_points().into_iter().find(|(_, q)| q == p).map(|(n, _)| n)
}

pub fn two_torsion() -> Vec<EPoint> {
    named_points().into_iter().take(4).map(|(_, p)| p).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    pub counts: [usize; 3],
    pub f9_is_four_torsion: bool,
    pub f3_is_two_torsion: bool,
    pub named_points_match: bool,
}

impl TorsionReport {
    pub fn holds(&self) -> bool {
        self.counts == [4, 16, 64] && self.f9_is_four_torsion && self.f3_is_two_torsion && self.named_points_match
    }
}

pub fn torsion() -> TorsionReport {
    let (f3, f9, f81) = (e_points(Level::F3), e_points(Level::F9), e_points(Level::F81));
    let mut named: Vec<EPoint> = named_points().into_iter().map(|(_, p)| p).collect();
    named.sort();
    TorsionReport {
        counts: [f3.len(), f9.len(), f81.len()],
        f9_is_four_torsion: f9.iter().all(|p| p.mul(4).is_infinity())
            && f81.iter().filter(|p| p.mul(4).is_infinity()).count() == 16,
        f3_is_two_torsion: f3.iter().all(|p| p.double().is_infinity()),
        named_points_match: named == f9,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The same relation evaluated in the order O, where it makes sense.
    pub holds_in_order: Option<bool>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    /// Fails pointwise and is independently false in O.
    pub fn refuted(&self) -> bool {
        self.failures > 0 && self.holds_in_order == Some(false)
    }
}

fn pointwise(name: &str, pts: &[EPoint], in_order: bool, f: impl Fn(&EPoint) -> bool) -> IdentityCheck {
    IdentityCheck {
        name: name.into(),
        checked: pts.len(),
        failures: pts.iter().filter(|p| !f(p)).count(),
        holds_in_order: Some(in_order),
    }
}

/// The endomorphism relations, checked at every point of E(GF(81)) with π
/// given by its closed form and F by cubing.
pub fn endo_identities() -> Vec<IdentityCheck> {
    let pts = e_points(Level::F81);
    let pi = pi_formula;
    let fr = |p: &EPoint| p.frobenius();
    let (one, t, s) = (QuatO::ONE, QuatO::TAU, QuatO::SIGMA);
    let (qp, qf, two) = (QuatO::pi(), QuatO::frobenius(), QuatO::int(2));
    vec![
        pointwise("sigma^3 = id", &pts, s.pow(3) == one, |p| p.sigma().sigma().sigma() == *p),
        pointwise("tau^2 = -id", &pts, t * t == -one, |p| p.tau().tau() == p.neg()),
        pointwise("tau sigma = sigma^2 tau", &pts, t * s == s * s * t, |p| p.sigma().tau() == p.tau().sigma().sigma()),
        pointwise("pi = id - tau", &pts, qp == one - t, |p| pi(p) == p.sub(&p.tau())),
        pointwise("tau pi = pi tau = id + tau", &pts, t * qp == one + t && qp * t == one + t, |p| {
            let sum = p.add(&p.tau());
            pi(p).tau() == sum && pi(&p.tau()) == sum
        }),
        pointwise("sigma pi = pi sigma", &pts, s * qp == qp * s, |p| pi(p).sigma() == pi(&p.sigma())),
        pointwise("pi pi tau = tau pi pi = [2]", &pts, qp * qp * t == two && t * qp * qp == two, |p| {
            let d = p.double();
            pi(&pi(&p.tau())) == d && pi(&pi(p)).tau() == d
        }),
        pointwise("F sigma = sigma F", &pts, qf * s == s * qf, |p| fr(&p.sigma()) == fr(p).sigma()),
        pointwise("F tau = -tau F", &pts, qf * t == -(t * qf), |p| fr(&p.tau()) == fr(p).tau().neg()),
        pointwise("id + F = -[2] sigma", &pts, one + qf == -(two * s), |p| {
            p.add(&fr(p)) == p.sigma().double().neg()
        }),
        pointwise("F = -1 - 2 sigma", &pts, true, |p| fr(p) == endo_eval(qf, p)),
        pointwise("pi = 1 - tau in O", &pts, true, |p| pi(p) == endo_eval(qp, p)),
    ]
}

/// Associativity on all triples of E(GF(9)) and both y-formulas on all pairs.
pub fn group_law_checks() -> Vec<IdentityCheck> {
    let pts = e_points(Level::F9);
    let mut assoc = IdentityCheck { name: "associativity on E(F9)".into(), checked: 0, failures: 0, holds_in_order: None };
    for p in &pts {
        for q in &pts {
            for r in &pts {
                assoc.checked += 1;
                if p.add(q).add(r) != p.add(&q.add(r)) {
                    assoc.failures += 1;
                }
            }
        }
    }
    let big = e_points(Level::F81);
    let mut forms = IdentityCheck { name: "printed addition formulas".into(), checked: 0, failures: 0, holds_in_order: None };
    for p in &big {
        for q in &big {
            forms.checked += 1;
            if !chord_forms_agree(p, q) {
                forms.failures += 1;
            }
        }
    }
    vec![assoc, forms]
}

// ---------------------------------------------------------------------------
// Abelian surface

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct APoint(pub EPoint, pub EPoint);

impl APoint {
    pub fn origin() -> APoint {
        APoint(Pt::Infinity, Pt::Infinity)
    }

    pub fn add(&self, o: &APoint) -> APoint {
        APoint(self.0.add(&o.0), self.1.add(&o.1))
    }

    pub fn neg(&self) -> APoint {
        APoint(self.0.neg(), self.1.neg())
    }

    pub fn name(&self) -> String {
        let n = |p: &EPoint| point_name(p).unwrap_or_else(|| p.to_string());
        format!("({},{})", n(&self.0), n(&self.1))
    }
}

/// Ker[2] of A, ordered by the names of the two factors.
pub fn ker2() -> Vec<APoint> {
    let t = two_torsion();
    t.iter().flat_map(|p| t.iter().map(move |q| APoint(p.clone(), q.clone()))).collect()
}

/// Ker[4] of A (= A(GF(9))), in the same ordering.
pub fn ker4() -> Vec<APoint> {
    let t: Vec<EPoint> = named_points().into_iter().map(|(_, p)| p).collect();
    t.iter().flat_map(|p| t.iter().map(move |q| APoint(p.clone(), q.clone()))).collect()
}

pub fn is_two_torsion(p: &APoint) -> bool {
    p.0.double().is_infinity() && p.1.double().is_infinity()
}

// ---------------------------------------------------------------------------
// Genus-4 curve

pub type CPoint = Pt<FieldElem>;

/// X⁹ − X.
pub fn genus4_relation() -> Poly {
    Poly::monomial(FieldElem::ONE, 9) - Poly::x()
}

pub fn genus4_points(level: Level) -> Vec<CPoint> {
    let field = Field::new(level);
    let mut out = vec![Pt::Infinity];
    for x in field.elements() {
        let rhs = x.pow(9) - x;
        for y in field.elements() {
            if y * y == rhs {
                out.push(Pt::Affine(x, y));
            }
        }
    }
    out
}

/// φ = (X³ + X, Y).
pub fn phi(p: &CPoint) -> EPoint {
    match p {
        Pt::Infinity => Pt::Infinity,
        Pt::Affine(x, y) => Pt::Affine(x.pow(3) + *x, *y),
    }
}

/// φ′ = (ζ²X³/(X² − 1), −ζ³XY/(X² − 1)²).
pub fn phi_prime(p: &CPoint) -> EPoint {
    match p {
        Pt::Infinity => Pt::Infinity,
        Pt::Affine(x, y) => match (*x * *x - FieldElem::ONE).inv() {
            None => Pt::Infinity,
            Some(d) => Pt::Affine(z(2) * x.pow(3) * d, -z(3) * *x * *y * d * d),
        },
    }
}

pub fn psi(p: &CPoint) -> APoint {
    APoint(phi(p), phi_prime(p))
}

struct Genus4Functions {
    x: RatFun,
    y: RatFun,
    phi: (RatFun, RatFun),
    phi_prime: (RatFun, RatFun),
}

impl Genus4Functions {
    fn new() -> Result<Genus4Functions> {
        let rel = genus4_relation();
        let x = RatFun::curve_x(&rel);
        let y = RatFun::curve_y(&rel);
        let k = |e: FieldElem| RatFun::constant_elem(e);
        let x2m1 = x.clone() * x.clone() - k(FieldElem::ONE);
        let inv = x2m1.inv().ok_or(Error::ZeroDenominator)?;
        let phi = (x.clone() * x.clone() * x.clone() + x.clone(), y.clone());
        let phi_prime = (
            k(z(2)) * x.clone() * x.clone() * x.clone() * inv.clone(),
            -(k(z(3)) * x.clone() * y.clone() * inv.clone() * inv),
        );
        Ok(Genus4Functions { x, y, phi, phi_prime })
    }
}

fn on_e(p: &(RatFun, RatFun)) -> bool {
    let (x, y) = p;
    y.clone() * y.clone() == x.clone() * x.clone() * x.clone() - x.clone()
}

/// Symbolic identities for φ and φ′, and the pushforward multipliers.
pub fn phi_checks() -> Result<Vec<IdentityCheck>> {
    let g = Genus4Functions::new()?;
    let k = |e: FieldElem| RatFun::constant_elem(e);
    let one = |name: &str, ok: bool| IdentityCheck { name: name.into(), checked: 1, failures: usize::from(!ok), holds_in_order: None };
    let mut out = vec![one("phi lands on E", on_e(&g.phi)), one("phi' lands on E", on_e(&g.phi_prime))];

    // η: X ↦ (X − ζ²)/X, Y ↦ ζY/X⁵
    let xinv = g.x.inv().ok_or(Error::ZeroDenominator)?;
    let ex = (g.x.clone() - k(z(2))) * xinv.clone();
    let x5 = (0..5).fold(k(FieldElem::ONE), |acc, _| acc * xinv.clone());
    let ey = k(z(1)) * g.y.clone() * x5;
    let ex9 = (0..9).fold(k(FieldElem::ONE), |acc, _| acc * ex.clone());
    out.push(one("eta preserves the genus-4 curve", ey.clone() * ey.clone() == ex9 - ex.clone()));

    // φ∘η, then translation by P₋₁, then η′: (x, y) ↦ (−x − 1, ζ²y)
    let pe = Pt::Affine(ex.clone() * ex.clone() * ex.clone() + ex, ey);
    let shifted = chord_add(&pe, &Pt::Affine(k(c(-1)), k(c(0))));
    let composed = match shifted {
        Pt::Affine(x, y) => Some((-x - k(FieldElem::ONE), k(z(2)) * y)),
        Pt::Infinity => None,
    };
    let composition_ok = composed.is_some_and(|(x, y)| x == g.phi_prime.0 && y == g.phi_prime.1);
    out.push(one("phi' = eta' T_{P_-1} phi eta", composition_ok));

    let eta_prime_on_e = {
        let rel = Poly::from_ints(&[0, -1, 0, 1]);
        let (x, y) = (RatFun::curve_x(&rel), RatFun::curve_y(&rel));
        on_e(&(-x - k(FieldElem::ONE), k(z(2)) * y))
    };
    out.push(one("eta' is an automorphism of E", eta_prime_on_e));

    let m = g.phi.1.d_dy()?;
    out.push(one("phi_* d/dY = d/dy", m == k(FieldElem::ONE)));
    let m2 = g.phi_prime.1.d_dy()?;
    let expected = k(z(3)) * g.x.clone() * g.x.clone() * g.x.clone();
    out.push(one("phi'_* d/dY = z^3 X^3 d/dy", m2 == expected));

    let mut at_points = IdentityCheck {
        name: "phi' multiplier at (z^i,0) is z^(3i+3)".into(),
        checked: 0,
        failures: 0,
        holds_in_order: None,
    };
    for i in 0..8 {
        at_points.checked += 1;
        if z(3) * z(i).pow(3) != z(3 * i + 3) {
            at_points.failures += 1;
        }
    }
    out.push(at_points);
    Ok(out)
}

/// Tangent direction of ψ(C) at ψ(c) for c ∈ C(GF(9)).
pub fn psi_direction(p: &CPoint) -> Result<P1> {
    let g = Genus4Functions::new()?;
    let m1 = g.phi.1.d_dy()?;
    let m2 = g.phi_prime.1.d_dy()?;
    match p {
        Pt::Infinity => {
            let ratio = m1 * m2.inv().ok_or(Error::ZeroDenominator)?;
            match ratio.valuation_at_infinity() {
                Some(v) if v > 0 => Ok(P1::infinity()),
                Some(v) if v < 0 => Ok(P1::affine(FieldElem::ZERO)),
                _ => Err(Error::IdentityFailure("direction at infinity".into())),
            }
        }
        Pt::Affine(x, y) => {
            let a = m1.eval(*x, *y).ok_or(Error::ZeroDenominator)?;
            let b = m2.eval(*x, *y).ok_or(Error::ZeroDenominator)?;
            P1::new(a, b).ok_or(Error::InseparablePair)
        }
    }
}

/// The ten 2-torsion points on ψ(C), as listed.
pub fn base_ten() -> Vec<APoint> {
    let t = two_torsion();
    let (pi, p0, p1, pm) = (&t[0], &t[1], &t[2], &t[3]);
    let a = |p: &EPoint, q: &EPoint| APoint(p.clone(), q.clone());
    vec![
        a(pi, pi),
        a(p0, p0),
        a(pm, pi),
        a(pm, p1),
        a(p0, p1),
        a(pm, pm),
        a(p1, pi),
        a(p1, pm),
        a(p0, pm),
        a(p1, p1),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Genus4Report {
    pub rational_points: usize,
    pub images_match_listed: bool,
    pub f81_points: usize,
    pub injective_on_f81: bool,
    pub identities: Vec<IdentityCheck>,
}

impl Genus4Report {
    pub fn holds(&self) -> bool {
        self.rational_points == 10
            && self.images_match_listed
            && self.injective_on_f81
            && self.identities.iter().all(IdentityCheck::holds)
    }
}

pub fn genus4_report() -> Result<Genus4Report> {
    let pts9 = genus4_points(Level::F9);
    let mut imgs: Vec<APoint> = pts9.iter().map(psi).collect();
    imgs.sort();
    let mut listed = base_ten();
    listed.sort();
    let pts81 = genus4_points(Level::F81);
    let distinct: BTreeSet<APoint> = pts81.iter().map(psi).collect();
    Ok(Genus4Report {
        rational_points: pts9.len(),
        images_match_listed: imgs == listed,
        f81_points: pts81.len(),
        injective_on_f81: distinct.len() == pts81.len(),
        identities: phi_checks()?,
    })
}

/// A translate of ψ(C) by a 2-torsion point, with its 2-torsion points and
/// the tangent direction at each.
#[derive(Clone, Debug)]
pub struct Genus4OnA {
    pub translation: APoint,
    pub points: Vec<(APoint, P1)>,
}

impl Genus4OnA {
    pub fn contains(&self, p: &APoint) -> bool {
        self.points.iter().any(|(q, _)| q == p)
    }

    pub fn direction_at(&self, p: &APoint) -> Option<P1> {
        self.points.iter().find(|(q, _)| q == p).map(|(_, d)| *d)
    }
}

/// The base curve's 2-torsion points with tangent directions.
pub fn base_directions() -> Result<Vec<(APoint, P1)>> {
    genus4_points(Level::F9).iter().map(|c| Ok((psi(c), psi_direction(c)?))).collect()
}

/// The sixteen 2-torsion translates of ψ(C).
pub fn family_d() -> Result<Vec<Genus4OnA>> {
    let base = base_directions()?;
    let fam: Vec<Genus4OnA> = ker2()
        .into_iter()
        .map(|t| Genus4OnA {
            points: base.iter().map(|(p, d)| (p.add(&t), *d)).collect(),
            translation: t,
        })
        .collect();
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i + 1..] {
            let overlap = a.points.iter().filter(|(p, _)| b.contains(p)).count();
            if overlap != 6 {
                return Err(Error::CountMismatch { what: "genus-4 overlap".into(), expected: 6, found: overlap });
            }
        }
    }
    for p in ker2() {
        let n = fam.iter().filter(|g| g.contains(&p)).count();
        if n != 10 {
            return Err(Error::CountMismatch { what: format!("genus-4 curves through {}", p.name()), expected: 10, found: n });
        }
    }
    Ok(fam)
}

/// The translation taking ψ(C) to the curve of class α through the origin.
pub fn genus4_class_translations() -> Result<BTreeMap<String, APoint>> {
    Ok(base_directions()?.into_iter().map(|(p, d)| (class_name(d), p)).collect())
}

/// A 2-torsion translate of Δ_{a,b} = {(P, Q) : a(P) + b(Q) = 0}.
#[derive(Clone, Debug)]
pub struct EllipticOnA {
    pub label: String,
    pub a: QuatO,
    pub b: QuatO,
    pub translation: APoint,
    pub direction: P1,
}

impl EllipticOnA {
    pub fn contains(&self, p: &APoint) -> bool {
        let (u, v) = (p.0.sub(&self.translation.0), p.1.sub(&self.translation.1));
        endo_eval(self.a, &u).add(&endo_eval(self.b, &v)).is_infinity()
    }

    pub fn name(&self) -> String {
        if self.translation == APoint::origin() {
            self.label.clone()
        } else {
            format!("{}+{}", self.label, self.translation.name())
        }
    }
}

/// The twenty curves through the origin with their tangent directions.
pub fn family_e0() -> Result<Vec<EllipticOnA>> {
    origin_curves()
        .into_iter()
        .map(|l| {
            Ok(EllipticOnA { direction: tangent_class(l.a, l.b)?, label: l.name, a: l.a, b: l.b, translation: APoint::origin() })
        })
        .collect()
}

/// Distinct 2-torsion translates of the twenty, deduplicated by their
/// 4-torsion points and tangent direction.
pub fn family_e() -> Result<Vec<EllipticOnA>> {
    let k4 = ker4();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in family_e0()? {
        for t in ker2() {
            let cand = EllipticOnA { translation: t, ..g.clone() };
            let sig: Vec<usize> = (0..k4.len()).filter(|&i| cand.contains(&k4[i])).collect();
            if sig.len() != 16 {
                return Err(Error::CountMismatch { what: format!("4-torsion on {}", cand.name()), expected: 16, found: sig.len() });
            }
            if seen.insert((sig, cand.direction)) {
                out.push(cand);
            }
        }
    }
    if out.len() != 80 {
        return Err(Error::CountMismatch { what: "elliptic translates".into(), expected: 80, found: out.len() });
    }
    let k2 = ker2();
    for g in &out {
        let n = k2.iter().filter(|p| g.contains(p)).count();
        if n != 4 {
            return Err(Error::CountMismatch { what: format!("2-torsion on {}", g.name()), expected: 4, found: n });
        }
    }
    for p in &k2 {
        let through: Vec<&EllipticOnA> = out.iter().filter(|g| g.contains(p)).collect();
        if through.len() != 20 {
            return Err(Error::CountMismatch { what: format!("elliptic curves through {}", p.name()), expected: 20, found: through.len() });
        }
        let mut dirs: BTreeMap<P1, usize> = BTreeMap::new();
        for g in through {
            *dirs.entry(g.direction).or_default() += 1;
        }
        if dirs.len() != 10 || dirs.values().any(|&v| v != 2) {
            return Err(Error::CountMismatch { what: format!("directions at {}", p.name()), expected: 10, found: dirs.len() });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// 4-torsion tables

pub const LEFT_FIXTURE: &str = include_str!("../data/four_torsion_left.csv");
pub const RIGHT_FIXTURE: &str = include_str!("../data/four_torsion_right.csv");

/// (row, column, entry) cells of a table transcription; blank cells are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<(String, String, String)>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines.next().ok_or_else(|| Error::Fixture("empty table".into()))?.split(',').collect();
    let names: BTreeSet<String> = named_points().into_iter().map(|(n, _)| n).collect();
    for col in &header[1..] {
        if !names.contains(col.trim()) {
            return Err(Error::Fixture(format!("unknown column {col}")));
        }
    }
    let mut out = Vec::new();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != header.len() {
            return Err(Error::Fixture(format!("row has {} cells, expected {}", cells.len(), header.len())));
        }
        let row = cells[0].trim();
        if !names.contains(row) {
            return Err(Error::Fixture(format!("unknown row {row}")));
        }
        for (col, cell) in header[1..].iter().zip(&cells[1..]) {
            if !cell.trim().is_empty() {
                out.push((row.to_string(), col.trim().to_string(), cell.trim().to_string()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    /// Coordinate on the second factor.
    pub row: String,
    /// Coordinate on the first factor.
    pub col: String,
    pub computed: Vec<String>,
    pub fixture: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FourTorsionTable {
    pub cells: Vec<TableCell>,
    /// Cells where the point is not on exactly one curve through the origin.
    pub uniqueness_failures: Vec<TableCell>,
    /// Cells where a unique computed label disagrees with the fixture.
    pub fixture_mismatches: Vec<TableCell>,
    pub fixture_cells: usize,
}

impl FourTorsionTable {
    pub fn holds(&self) -> bool {
        self.cells.len() == 240
            && self.fixture_cells == 240
            && self.uniqueness_failures.is_empty()
            && self.fixture_mismatches.is_empty()
    }
}

/// Labels the 240 points of Ker[4] ∖ Ker[2] by the curve through the origin
/// containing them and diffs the result against the given transcriptions.
pub fn four_torsion_table(fixtures: &[&str]) -> Result<FourTorsionTable> {
    let e0 = family_e0()?;
    let mut expected: BTreeMap<(String, String), String> = BTreeMap::new();
    for text in fixtures {
        for (row, col, entry) in parse_fixture(text)? {
            if expected.insert((row.clone(), col.clone()), entry).is_some() {
                return Err(Error::Fixture(format!("cell ({row}, {col}) appears twice")));
            }
        }
    }
    let names = named_points();
    let mut cells = Vec::new();
    for (rname, q) in &names {
        for (cname, p) in &names {
            let pt = APoint(p.clone(), q.clone());
            if is_two_torsion(&pt) {
                continue;
            }
            let computed: Vec<String> = e0.iter().filter(|g| g.contains(&pt)).map(|g| g.label.clone()).collect();
            let fixture = expected.get(&(rname.clone(), cname.clone())).cloned();
            cells.push(TableCell { row: rname.clone(), col: cname.clone(), computed, fixture });
        }
    }
    let uniqueness_failures = cells.iter().filter(|c| c.computed.len() != 1).cloned().collect();
    let fixture_mismatches = cells
        .iter()
        .filter(|c| c.computed.len() == 1 && c.fixture.as_deref() != Some(c.computed[0].as_str()))
        .cloned()
        .collect();
    Ok(FourTorsionTable { cells, uniqueness_failures, fixture_mismatches, fixture_cells: expected.len() })
}

#[derive(Clone, Debug, Serialize)]
pub struct FourTorsionIncidence {
    /// Indices into `family_e()` per point of Ker[4] ∖ Ker[2], in `ker4()` order.
    pub curves_through: Vec<(String, Vec<usize>)>,
    pub degree_failures: usize,
    pub antipodal_failures: usize,
}

impl FourTorsionIncidence {
    pub fn holds(&self) -> bool {
        self.curves_through.len() == 240 && self.degree_failures == 0 && self.antipodal_failures == 0
    }
}

pub fn full_4tors_incidence(family: &[EllipticOnA]) -> FourTorsionIncidence {
    let mut curves_through = Vec::new();
    let mut degree_failures = 0;
    let mut antipodal_failures = 0;
    for p in ker4().into_iter().filter(|p| !is_two_torsion(p)) {
        let on: Vec<usize> = (0..family.len()).filter(|&i| family[i].contains(&p)).collect();
        if on.len() != 4 {
            degree_failures += 1;
        }
        let q = p.neg();
        if on.iter().any(|&i| !family[i].contains(&q)) {
            antipodal_failures += 1;
        }
        curves_through.push((p.name(), on));
    }
    FourTorsionIncidence { curves_through, degree_failures, antipodal_failures }
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslateReport {
    pub translates_checked: usize,
    pub rational_hits: usize,
    pub f81_points: usize,
    pub f81_hits_outside_two_torsion: usize,
    pub argument: String,
}

impl TranslateReport {
    pub fn holds(&self) -> bool {
        self.translates_checked == 16 && self.rational_hits == 0 && self.f81_hits_outside_two_torsion == 0
    }
}

pub fn translate_check(fam: &[Genus4OnA]) -> TranslateReport {
    let rational_hits = fam.iter().flat_map(|g| &g.points).filter(|(p, _)| !is_two_torsion(p)).count();
    let pts = genus4_points(Level::F81);
    let k4: BTreeSet<APoint> = ker4().into_iter().collect();
    let mut hits = 0;
    for g in fam {
        for c in &pts {
            let p = psi(c).add(&g.translation);
            if k4.contains(&p) && !is_two_torsion(&p) {
                hits += 1;
            }
        }
    }
    TranslateReport {
        translates_checked: fam.len(),
        rational_hits,
        f81_points: pts.len(),
        f81_hits_outside_two_torsion: hits,
        argument: "psi is injective and defined over F9, so a preimage of an F9-point of A is an F9-point of C; \
                   C(F9) maps into Ker[2], and Ker[4] = A(F9)"
            .into(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleCheck {
    pub class: String,
    pub translation: String,
    pub members: [String; 2],
    pub ns_identity: bool,
    pub pairings: [i64; 3],
    pub directions_agree: bool,
    pub nonzero_two_torsion_once: bool,
}

impl TripleCheck {
    pub fn holds(&self) -> bool {
        self.ns_identity && self.pairings == [3, 3, 3] && self.directions_agree && self.nonzero_two_torsion_once
    }
}

/// For each class α: C_α ≡ Δ_α + Δ′_α, pairwise intersections 3, a common
/// tangent direction at the origin, and every nonzero 2-torsion point on
/// exactly one of the three.
pub fn triple_check() -> Result<Vec<TripleCheck>> {
    let dec = decompositions()?;
    let j_c = ns_to_herm(&solve_genus4()?);
    let trans = genus4_class_translations()?;
    let base = base_directions()?;
    let mut out = Vec::new();
    for d in &dec.pairs {
        let t = trans.get(&d.class).ok_or_else(|| Error::PartitionNotFound(format!("class {}", d.class)))?;
        let genus = Genus4OnA { translation: t.clone(), points: base.iter().map(|(p, dir)| (p.add(t), *dir)).collect() };
        let (m1, m2) = (rank1(d.first.a, d.first.b)?, rank1(d.second.a, d.second.b)?);
        let mk = |l: &crate::quaternion::EllipticLabel| -> Result<EllipticOnA> {
            Ok(EllipticOnA {
                label: l.name.clone(),
                a: l.a,
                b: l.b,
                translation: APoint::origin(),
                direction: tangent_class(l.a, l.b)?,
            })
        };
        let (e1, e2) = (mk(&d.first)?, mk(&d.second)?);
        let dir0 = genus.direction_at(&APoint::origin());
        let once = ker2().iter().filter(|p| **p != APoint::origin()).all(|p| {
            usize::from(genus.contains(p)) + usize::from(e1.contains(p)) + usize::from(e2.contains(p)) == 1
        });
        out.push(TripleCheck {
            class: d.class.clone(),
            translation: t.name(),
            members: [d.first.name.clone(), d.second.name.clone()],
            ns_identity: m1 + m2 == j_c,
            pairings: [pairing(&j_c, &m1), pairing(&j_c, &m2), pairing(&m1, &m2)],
            directions_agree: dir0 == Some(e1.direction)
                && dir0 == Some(e2.direction)
                && dir0.map(class_name).as_deref() == Some(d.class.as_str()),
            nonzero_two_torsion_once: once,
        });
    }
    Ok(out)
}
