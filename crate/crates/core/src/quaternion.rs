//! The maximal order O = End(E) inside the definite quaternion algebra of
//! discriminant 3, hermitian 2×2 matrices over O, and the Neron-Severi
//! model of the superspecial abelian surface E × E.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::quadric::P1;

/// a + bσ in Z[σ], σ² = −1 − σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Eis(i64, i64);

impl Eis {
    fn mul(self, o: Eis) -> Eis {
        Eis(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0 - self.1 * o.1)
    }
    fn conj(self) -> Eis {
        Eis(self.0 - self.1, -self.1)
    }
    fn add(self, o: Eis) -> Eis {
        Eis(self.0 + o.0, self.1 + o.1)
    }
    fn neg(self) -> Eis {
        Eis(-self.0, -self.1)
    }
}

/// a + bτ + cσ + dτσ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct QuatO(pub [i64; 4]);

impl QuatO {
    pub const ZERO: QuatO = QuatO([0, 0, 0, 0]);
    pub const ONE: QuatO = QuatO([1, 0, 0, 0]);
    pub const TAU: QuatO = QuatO([0, 1, 0, 0]);
    pub const SIGMA: QuatO = QuatO([0, 0, 1, 0]);
    pub const TAU_SIGMA: QuatO = QuatO([0, 0, 0, 1]);

    pub fn int(n: i64) -> QuatO {
        QuatO([n, 0, 0, 0])
    }

    // x = u + τv with u, v ∈ Z[σ]
    fn split(self) -> (Eis, Eis) {
        let [a, b, c, d] = self.0;
        (Eis(a, c), Eis(b, d))
    }

    fn join(u: Eis, v: Eis) -> QuatO {
        QuatO([u.0, v.0, u.1, v.1])
    }

    pub fn conj(self) -> QuatO {
        let (u, v) = self.split();
        QuatO::join(u.conj(), v.neg())
    }

    pub fn norm(self) -> i64 {
        let p = self * self.conj();
        debug_assert_eq!(&p.0[1..], &[0, 0, 0]);
        p.0[0]
    }

    pub fn trace(self) -> i64 {
        let t = self + self.conj();
        debug_assert_eq!(&t.0[1..], &[0, 0, 0]);
        t.0[0]
    }

    pub fn is_zero(self) -> bool {
        self == QuatO::ZERO
    }

    pub fn pow(self, n: u32) -> QuatO {
        (0..n).fold(QuatO::ONE, |acc, _| acc * self)
    }

    /// Frobenius F = −1 − 2σ.
    pub fn frobenius() -> QuatO {
        QuatO([-1, 0, -2, 0])
    }

    /// Verschiebung V = F̄.
    pub fn verschiebung() -> QuatO {
        QuatO::frobenius().conj()
    }

    /// π = 1 − τ.
    pub fn pi() -> QuatO {
        QuatO([1, -1, 0, 0])
    }

    pub fn sigma2() -> QuatO {
        QuatO::SIGMA * QuatO::SIGMA
    }
}

impl Mul for QuatO {
    type Output = QuatO;
    fn mul(self, o: QuatO) -> QuatO {
        // τu = ūτ for u ∈ Z[σ], τ² = −1
        let (u1, v1) = self.split();
        let (u2, v2) = o.split();
        QuatO::join(u1.mul(u2).add(v1.conj().mul(v2).neg()), u1.conj().mul(v2).add(v1.mul(u2)))
    }
}

impl Add for QuatO {
    type Output = QuatO;
    fn add(self, o: QuatO) -> QuatO {
        QuatO(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for QuatO {
    type Output = QuatO;
    fn sub(self, o: QuatO) -> QuatO {
        QuatO(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for QuatO {
    type Output = QuatO;
    fn neg(self) -> QuatO {
        QuatO(self.0.map(|x| -x))
    }
}

impl std::fmt::Display for QuatO {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = ["", "τ", "σ", "τσ"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if name.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The relations α² = −3, β² = −1, αβ = −βα for α = F, β = τ, together with
/// τσ = σ²τ and the order generator −σ = (1 + α)/2.
pub fn structure_check() -> Result<()> {
    let (alpha, beta) = (QuatO::frobenius(), QuatO::TAU);
    let checks = [
        ("α² = −3", alpha * alpha == QuatO::int(-3)),
        ("β² = −1", beta * beta == QuatO::int(-1)),
        ("αβ = −βα", alpha * beta == -(beta * alpha)),
        ("τσ = σ²τ", QuatO::TAU * QuatO::SIGMA == QuatO::sigma2() * QuatO::TAU),
        ("(1 + α) = −2σ", QuatO::ONE + alpha == QuatO::int(-2) * QuatO::SIGMA),
    ];
    for (name, ok) in checks {
        if !ok {
            return Err(Error::IdentityFailure(name.into()));
        }
    }
    Ok(())
}

/// (a b; b̄ d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct HermMat {
    pub a: i64,
    pub b: QuatO,
    pub d: i64,
}

impl HermMat {
    pub fn new(a: i64, b: QuatO, d: i64) -> HermMat {
        HermMat { a, b, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b.norm()
    }

    pub fn scale(&self, k: i64) -> HermMat {
        HermMat { a: k * self.a, b: QuatO::int(k) * self.b, d: k * self.d }
    }
}

impl Add for HermMat {
    type Output = HermMat;
    fn add(self, o: HermMat) -> HermMat {
        HermMat { a: self.a + o.a, b: self.b + o.b, d: self.d + o.d }
    }
}

impl std::fmt::Display for HermMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.b.conj(), self.d)
    }
}

pub fn pairing(l1: &HermMat, l2: &HermMat) -> i64 {
    l2.a * l1.d + l1.a * l2.d - (l1.b.conj() * l2.b).trace()
}

/// j(Δ_{a,b}) = (āa āb; b̄a b̄b).
pub fn rank1(a: QuatO, b: QuatO) -> Result<HermMat> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPair);
    }
    Ok(HermMat { a: a.norm(), b: a.conj() * b, d: b.norm() })
}

/// Coordinates over E₁, E₂, Δ, Δ_{1,τ}, Δ_{1,−σ}, Δ_{1,−τσ}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct NSClass(pub [i64; 6]);

pub const BASIS_NAMES: [&str; 6] = ["E1", "E2", "Delta", "Delta_{1,t}", "Delta_{1,-s}", "Delta_{1,-ts}"];

/// Pairs (a, b) with basis element i equal to Δ_{a,b}.
pub fn basis_pairs() -> [(QuatO, QuatO); 6] {
    [
        (QuatO::ZERO, QuatO::ONE),
        (QuatO::ONE, QuatO::ZERO),
        (QuatO::ONE, QuatO::ONE),
        (QuatO::ONE, QuatO::TAU),
        (QuatO::ONE, -QuatO::SIGMA),
        (QuatO::ONE, -QuatO::TAU_SIGMA),
    ]
}

pub fn basis_matrices() -> [HermMat; 6] {
    basis_pairs().map(|(a, b)| rank1(a, b).expect("nonzero pair"))
}

/// Intersection numbers of the basis, as tabulated.
pub const NS_TABLE: [[i64; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 1, 1, 1],
    [1, 1, 0, 2, 1, 2],
    [1, 1, 2, 0, 2, 1],
    [1, 1, 1, 2, 0, 2],
    [1, 1, 2, 1, 2, 0],
];

pub fn ns_to_herm(c: &NSClass) -> HermMat {
    basis_matrices().iter().zip(c.0).fold(HermMat::default(), |acc, (m, k)| acc + m.scale(k))
}

/// Intersection numbers of the genus-4 curve with C itself and the basis.
pub const GENUS4_SELF: i64 = 6;
pub const GENUS4_WITH_BASIS: [i64; 6] = [3, 3, 6, 6, 3, 3];

/// Solves Σⱼ xⱼ (bⱼ, bᵢ) = rhsᵢ over Q and requires an integral solution.
pub fn solve_gram(gram: &[[i64; 6]; 6], rhs: &[i64; 6]) -> Result<NSClass> {
    type Q = Ratio<i64>;
    let mut m: Vec<Vec<Q>> = (0..6)
        .map(|i| (0..6).map(|j| Q::from(gram[j][i])).chain([Q::from(rhs[i])]).collect())
        .collect();
    for col in 0..6 {
        let piv = (col..6)
            .find(|&r| m[r][col] != Q::from(0))
            .ok_or_else(|| Error::SingularSystem(format!("no pivot in column {col}")))?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..6 {
            if r != col && m[r][col] != Q::from(0) {
                let f = m[r][col];
                for k in 0..7 {
                    let v = m[col][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    let mut out = [0i64; 6];
    for i in 0..6 {
        let v = m[i][6];
        if !v.is_integer() {
            return Err(Error::SingularSystem(format!("non-integral coordinate {v}")));
        }
        out[i] = v.to_integer();
    }
    Ok(NSClass(out))
}

pub fn solve_genus4() -> Result<NSClass> {
    let c = solve_gram(&NS_TABLE, &GENUS4_WITH_BASIS)?;
    let j = ns_to_herm(&c);
    let back: Vec<i64> = basis_matrices().iter().map(|m| pairing(&j, m)).collect();
    if back != GENUS4_WITH_BASIS || pairing(&j, &j) != GENUS4_SELF {
        return Err(Error::IdentityFailure("solved class does not reproduce its intersections".into()));
    }
    Ok(c)
}

/// The printed off-diagonal entry of j(C), −(1 + τ)(1 + 2σ).
pub fn genus4_off_diagonal() -> QuatO {
    -((QuatO::ONE + QuatO::TAU) * (QuatO::ONE + QuatO::int(2) * QuatO::SIGMA))
}

/// The ring map O → GF(9) given by the action on the invariant differential.
pub fn differential(x: QuatO) -> FieldElem {
    let [a, b, c, d] = x.0;
    let z2 = FieldElem::zeta_pow(2);
    FieldElem::from_int(a + c) + FieldElem::from_int(b + d) * z2
}

/// Tangent direction of Δ_{a,b} at the origin: the line d(a)u + d(b)v = 0.
pub fn tangent_class(a: QuatO, b: QuatO) -> Result<P1> {
    let (da, db) = (differential(a), differential(b));
    P1::new(db, -da).ok_or(Error::InseparablePair)
}

/// Name of the class whose tangent direction is (1 : α), or ∞ for (0 : 1).
pub fn class_name(p: P1) -> String {
    if p.0.is_zero() {
        return "inf".into();
    }
    let x = p.1;
    if x.is_zero() {
        return "0".into();
    }
    let k = (0..8).find(|&k| FieldElem::zeta_pow(k) == x).expect("GF(9) element");
    ["1", "z", "z^2", "z^3", "-1", "-z", "-z^2", "-z^3"][k as usize].into()
}

/// The tangent direction carried by a class name.
pub fn class_direction(name: &str) -> Option<P1> {
    match name {
        "inf" => Some(P1::infinity()),
        "0" => Some(P1::affine(FieldElem::ZERO)),
        _ => {
            let k = ["1", "z", "z^2", "z^3", "-1", "-z", "-z^2", "-z^3"].iter().position(|n| *n == name)?;
            Some(P1::affine(FieldElem::zeta_pow(k as i64)))
        }
    }
}

/// The ten classes in the order they are listed.
pub const CLASS_ORDER: [&str; 10] = ["inf", "0", "1", "z", "z^2", "z^3", "-1", "-z", "-z^2", "-z^3"];

/// An elliptic curve Δ_{a,b} through the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticLabel {
    pub name: String,
    pub a: QuatO,
    pub b: QuatO,
}

/// The twenty curves through the origin, numbered (1)..(10) and (1)′..(10)′.
/// Entry k is curve (k+1), entry 10 + k is (k+1)′.
pub fn origin_curves() -> Vec<EllipticLabel> {
    let (one, t, s, ts) = (QuatO::ONE, QuatO::TAU, QuatO::SIGMA, QuatO::TAU_SIGMA);
    let s2 = QuatO::sigma2();
    let (f, v, p) = (QuatO::frobenius(), QuatO::verschiebung(), QuatO::pi());
    let pb = p.conj();
    let unprimed = [
        (v, p),
        (one, QuatO::ZERO),
        (s2 + t, s + t),
        (p, -s),
        (-s2 + t, one + t * s2),
        (one, s2 * p),
        (s + t, -s2 - t),
        (one, -(pb * s)),
        (one + s2 * t, t - s),
        (pb * s, one),
    ];
    let primed = [
        (QuatO::ZERO, one),
        (p, f),
        (one, s2),
        (one, pb * s2),
        (one, -ts),
        (-(pb * s2), one),
        (one, -s),
        (s * p, one),
        (one, t * s2),
        (one, -(s * p)),
    ];
    let mut out = Vec::with_capacity(20);
    for (k, (a, b)) in unprimed.into_iter().enumerate() {
        out.push(EllipticLabel { name: format!("({})", k + 1), a, b });
    }
    for (k, (a, b)) in primed.into_iter().enumerate() {
        out.push(EllipticLabel { name: format!("({})'", k + 1), a, b });
    }
    out
}

/// Curve (3) exactly as it appears in the numbered list, Δ_{σ²τ, σ+τ}.
pub fn printed_label_three() -> EllipticLabel {
    EllipticLabel { name: "(3)".into(), a: QuatO::sigma2() * QuatO::TAU, b: QuatO::SIGMA + QuatO::TAU }
}

/// Curve number (1..=10) in each class, following CLASS_ORDER.
pub const CLASS_CURVE: [usize; 10] = [2, 1, 7, 4, 9, 6, 3, 8, 5, 10];

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub class: String,
    pub first: EllipticLabel,
    pub second: EllipticLabel,
    pub sum_is_genus4: bool,
    pub mutual_pairing: i64,
    pub first_direction: Option<String>,
    pub second_direction: Option<String>,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        let dir = Some(self.class.clone());
        self.sum_is_genus4 && self.mutual_pairing == 3 && self.first_direction == dir && self.second_direction == dir
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelFailure {
    pub label: EllipticLabel,
    pub partner: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decompositions {
    pub genus4: HermMat,
    pub pairs: Vec<Decomposition>,
    pub label_failures: Vec<LabelFailure>,
    /// Pairings between curves of different classes, as (Δ_α, Δ_β) values.
    pub cross_pairings: Vec<i64>,
}

impl Decompositions {
    pub fn all_hold(&self) -> bool {
        self.pairs.len() == 10 && self.pairs.iter().all(Decomposition::holds)
    }
}

fn check_pair(j_c: &HermMat, x: &EllipticLabel, y: &EllipticLabel) -> Result<(bool, i64)> {
    let (mx, my) = (rank1(x.a, x.b)?, rank1(y.a, y.b)?);
    Ok((mx + my == *j_c, pairing(&mx, &my)))
}

pub fn decompositions() -> Result<Decompositions> {
    structure_check()?;
    let j_c = ns_to_herm(&solve_genus4()?);
    let curves = origin_curves();
    let mut pairs = Vec::with_capacity(10);
    for (class, &k) in CLASS_ORDER.iter().zip(&CLASS_CURVE) {
        let (x, y) = (&curves[k - 1], &curves[k + 9]);
        let (sum_is_genus4, mutual_pairing) = check_pair(&j_c, x, y)?;
        let dir = |l: &EllipticLabel| tangent_class(l.a, l.b).ok().map(class_name);
        pairs.push(Decomposition {
            class: class.to_string(),
            first: x.clone(),
            second: y.clone(),
            sum_is_genus4,
            mutual_pairing,
            first_direction: dir(x),
            second_direction: dir(y),
        });
    }
    let mut label_failures = Vec::new();
    let printed = printed_label_three();
    let (ok, m) = check_pair(&j_c, &printed, &curves[12])?;
    if !ok || m != 3 {
        label_failures.push(LabelFailure {
            label: printed,
            partner: curves[12].name.clone(),
            reason: format!("sum with {} is not j(C)", curves[12].name),
        });
    }
    let mut cross_pairings = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for q in &pairs[i + 1..] {
            for x in [&p.first, &p.second] {
                for y in [&q.first, &q.second] {
                    cross_pairings.push(pairing(&rank1(x.a, x.b)?, &rank1(y.a, y.b)?));
                }
            }
        }
    }
    Ok(Decompositions { genus4: j_c, pairs, label_failures, cross_pairings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_quat() -> impl Strategy<Value = QuatO> {
        prop::array::uniform4(-20i64..20).prop_map(QuatO)
    }

    #[test]
    fn relations_and_norms() {
        structure_check().unwrap();
        assert_eq!(QuatO::frobenius().norm(), 3);
        assert_eq!(QuatO::pi().norm(), 2);
        assert_eq!(QuatO::TAU * QuatO::SIGMA, QuatO::TAU_SIGMA);
        assert_eq!(QuatO::SIGMA.conj(), QuatO::sigma2());
        assert_eq!(QuatO::TAU.conj(), -QuatO::TAU);
    }

    #[test]
    fn ring_axioms_on_a_box() {
        let r = -2i64..=2;
        let mut elems = Vec::new();
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        elems.push(QuatO([a, b, c, d]));
                    }
                }
            }
        }
        let sample: Vec<QuatO> = elems.iter().step_by(7).copied().collect();
        for &x in &sample {
            assert_eq!(x.conj().conj(), x);
            for &y in &sample {
                assert_eq!((x * y).conj(), y.conj() * x.conj());
                for &z in sample.iter().step_by(5) {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                    assert_eq!((y + z) * x, y * x + z * x);
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let b = basis_matrices();
        assert_eq!(pairing(&b[0], &b[1]), 1);
        assert_eq!(pairing(&b[2], &b[3]), 2);
        assert_eq!(b[0], HermMat::new(0, QuatO::ZERO, 1));
        assert_eq!(b[1], HermMat::new(1, QuatO::ZERO, 0));
        assert_eq!(rank1(QuatO::ONE, QuatO::ONE).unwrap(), HermMat::new(1, QuatO::ONE, 1));
        assert_eq!(rank1(QuatO::ONE, QuatO::TAU).unwrap(), HermMat::new(1, QuatO::TAU, 1));
        assert_eq!(rank1(QuatO::ZERO, QuatO::ZERO), Err(Error::ZeroPair));
        assert_eq!(ns_to_herm(&NSClass::default()), HermMat::default());
    }

    #[test]
    fn table_is_reproduced() {
        let b = basis_matrices();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(pairing(&b[i], &b[j]), NS_TABLE[i][j], "({i},{j})");
            }
        }
    }

    #[test]
    fn genus4_solution() {
        let c = solve_genus4().unwrap();
        assert_eq!(c, NSClass([1, 1, -1, -1, 2, 2]));
        let j = ns_to_herm(&c);
        assert_eq!((j.a, j.d), (3, 3));
        assert_eq!(j.det(), 3);
        assert_eq!(j.b, genus4_off_diagonal());
        assert_eq!(j.b.norm(), 6);
    }

    #[test]
    fn singular_system_is_reported() {
        let mut g = NS_TABLE;
        g[5] = g[4];
        for row in g.iter_mut() {
            row[5] = row[4];
        }
        assert!(matches!(solve_gram(&g, &GENUS4_WITH_BASIS), Err(Error::SingularSystem(_))));
    }

    #[test]
    fn differential_values() {
        let z = FieldElem::zeta;
        assert_eq!(differential(QuatO::pi()), z());
        assert_eq!(differential(QuatO::frobenius()), FieldElem::ZERO);
        assert_eq!(differential(QuatO::SIGMA * QuatO::TAU), FieldElem::zeta_pow(2));
        let e2 = tangent_class(QuatO::ONE, QuatO::ZERO).unwrap();
        assert_eq!(class_name(e2), "inf");
        assert_eq!(class_name(tangent_class(QuatO::ONE, -QuatO::SIGMA).unwrap()), "1");
        let v = QuatO::verschiebung();
        assert_eq!(class_name(tangent_class(v, QuatO::pi()).unwrap()), "0");
        assert_eq!(
            tangent_class(QuatO::frobenius(), QuatO::frobenius()),
            Err(Error::InseparablePair)
        );
        for name in CLASS_ORDER {
            assert_eq!(class_name(class_direction(name).unwrap()), name);
        }
    }

    #[test]
    fn ten_decompositions() {
        let d = decompositions().unwrap();
        assert!(d.all_hold(), "{:#?}", d.pairs.iter().filter(|p| !p.holds()).collect::<Vec<_>>());
        let mut dirs: Vec<String> = d.pairs.iter().map(|p| p.class.clone()).collect();
        dirs.dedup();
        assert_eq!(dirs.len(), 10);
        assert!(d.cross_pairings.iter().all(|&x| x == 1 || x == 2));
        assert_eq!(d.cross_pairings.len(), 180);
        assert_eq!(d.label_failures.len(), 1);
        assert_eq!(d.label_failures[0].label.name, "(3)");
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(x in arb_quat(), y in arb_quat()) {
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert!(x.norm() >= 0);
        }

        #[test]
        fn differential_is_a_ring_map(x in arb_quat(), y in arb_quat()) {
            prop_assert_eq!(differential(x * y), differential(x) * differential(y));
            prop_assert_eq!(differential(x + y), differential(x) + differential(y));
        }

        #[test]
        fn pairing_polarizes_the_determinant(
            a1 in -9i64..9, d1 in -9i64..9, b1 in arb_quat(),
            a2 in -9i64..9, d2 in -9i64..9, b2 in arb_quat(),
        ) {
            let l1 = HermMat::new(a1, b1, d1);
            let l2 = HermMat::new(a2, b2, d2);
            prop_assert_eq!(pairing(&l1, &l2), (l1 + l2).det() - l1.det() - l2.det());
            prop_assert_eq!(pairing(&l1, &l1), 2 * l1.det());
            prop_assert_eq!(pairing(&l1, &l2), pairing(&l2, &l1));
        }

        #[test]
        fn rank_one_matrices_are_singular(a in arb_quat(), b in arb_quat()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let m = rank1(a, b).unwrap();
            prop_assert_eq!(m.det(), 0);
            prop_assert_eq!((m.a, m.d), (a.norm(), b.norm()));
        }
    }
}
