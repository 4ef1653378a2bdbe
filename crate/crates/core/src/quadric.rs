//! Curves on the quadric P¹ × P¹ over GF(9): the branch curves C and C′,
//! the rulings through their common points, and the thirty (1,1)-forms.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, Level};
use crate::poly::Poly;

/// A point of P¹, normalized to (1 : x) or (0 : 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct P1(pub FieldElem, pub FieldElem);

impl P1 {
    pub fn new(a: FieldElem, b: FieldElem) -> Option<P1> {
        if !a.is_zero() {
            Some(P1(FieldElem::ONE, b * a.inv().unwrap()))
        } else if !b.is_zero() {
            Some(P1(FieldElem::ZERO, FieldElem::ONE))
        } else {
            None
        }
    }

    pub fn affine(x: FieldElem) -> P1 {
        P1(FieldElem::ONE, x)
    }

    pub fn infinity() -> P1 {
        P1(FieldElem::ZERO, FieldElem::ONE)
    }

    /// All ten points of P¹(GF(9)).
    pub fn all_gf9() -> Vec<P1> {
        let mut v: Vec<P1> = Field::new(Level::F9).elements().map(P1::affine).collect();
        v.push(P1::infinity());
        v
    }
}

impl std::fmt::Display for P1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct BiPoint {
    pub u: P1,
    pub v: P1,
}

impl std::fmt::Display for BiPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A form of bidegree (a, b); `coeffs[i][j]` multiplies u₀^{a−i} u₁^i v₀^{b−j} v₁^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    pub a: usize,
    pub b: usize,
    pub coeffs: Vec<Vec<FieldElem>>,
}

impl BiForm {
    pub fn zero(a: usize, b: usize) -> BiForm {
        BiForm { a, b, coeffs: vec![vec![FieldElem::ZERO; b + 1]; a + 1] }
    }

    pub fn with(mut self, i: usize, j: usize, c: FieldElem) -> BiForm {
        self.coeffs[i][j] += c;
        self
    }

    /// (1,1)-form c₀₀u₀v₀ + c₀₁u₀v₁ + c₁₀u₁v₀ + c₁₁u₁v₁.
    pub fn bilinear(c00: FieldElem, c01: FieldElem, c10: FieldElem, c11: FieldElem) -> BiForm {
        BiForm { a: 1, b: 1, coeffs: vec![vec![c00, c01], vec![c10, c11]] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_zero())
    }

    pub fn eval(&self, p: &BiPoint) -> FieldElem {
        let mut s = FieldElem::ZERO;
        for i in 0..=self.a {
            let ui = p.u.0.pow((self.a - i) as u64) * p.u.1.pow(i as u64);
            for j in 0..=self.b {
                s += self.coeffs[i][j] * ui * p.v.0.pow((self.b - j) as u64) * p.v.1.pow(j as u64);
            }
        }
        s
    }

    pub fn contains(&self, p: &BiPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// The same curve with the two factors exchanged.
    pub fn swapped(&self) -> BiForm {
        let coeffs = (0..=self.b).map(|j| (0..=self.a).map(|i| self.coeffs[i][j]).collect()).collect();
        BiForm { a: self.b, b: self.a, coeffs }
    }

    /// Restriction to u = (1 : u_p + T) or u = (T : 1): a binary form in v of
    /// degree b with coefficients in k[T].
    fn localize_u(&self, u: P1) -> Vec<Poly> {
        let (u0, u1) = if u.0.is_zero() {
            (Poly::x(), Poly::one())
        } else {
            (Poly::one(), Poly::from_coeffs(vec![u.1, FieldElem::ONE]))
        };
        (0..=self.b)
            .map(|j| {
                (0..=self.a).fold(Poly::zero(), |acc, i| {
                    let term = &(&u0.pow((self.a - i) as u32) * &u1.pow(i as u32)) * &Poly::constant(self.coeffs[i][j]);
                    &acc + &term
                })
            })
            .collect()
    }
}

fn poly_det(mut m: Vec<Vec<Poly>>) -> Poly {
    // Bareiss elimination over k[T]
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Resultant of two binary forms given by coefficient lists of v₀^{m−j}v₁^j.
fn binary_resultant(f: &[Poly], g: &[Poly]) -> Poly {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return Poly::one();
    }
    let mut rows = Vec::with_capacity(size);
    for s in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[s + j] = c.clone();
        }
        rows.push(row);
    }
    for s in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in g.iter().enumerate() {
            row[s + j] = c.clone();
        }
        rows.push(row);
    }
    poly_det(rows)
}

/// Whether the only common zero of two binary forms over k (coefficients of
/// v₀^{m−j}v₁^j) is `p`, counting zeros over the algebraic closure.
fn only_common_zero(f: &[FieldElem], g: &[FieldElem], p: P1) -> bool {
    let fa = Poly::from_coeffs(f.to_vec());
    let ga = Poly::from_coeffs(g.to_vec());
    let at_infinity = |a: &Poly, m: usize| a.degree().is_none_or(|d| d < m);
    let inf_common = at_infinity(&fa, f.len() - 1) && at_infinity(&ga, g.len() - 1);
    let mut h = fa.gcd(&ga);
    if h.is_zero() {
        return false;
    }
    if p.0.is_zero() {
        return h.degree() == Some(0);
    }
    if inf_common {
        return false;
    }
    let lin = Poly::from_coeffs(vec![-p.1, FieldElem::ONE]);
    while h.degree().unwrap_or(0) > 0 {
        let (q, r) = h.div_rem(&lin);
        if !r.is_zero() {
            return false;
        }
        h = q;
    }
    true
}

fn mult_eliminating_v(f: &BiForm, g: &BiForm, p: &BiPoint) -> Result<Option<usize>> {
    let lf = f.localize_u(p.u);
    let lg = g.localize_u(p.u);
    let f0: Vec<FieldElem> = lf.iter().map(|c| c.coeff(0)).collect();
    let g0: Vec<FieldElem> = lg.iter().map(|c| c.coeff(0)).collect();
    if !only_common_zero(&f0, &g0, p.v) {
        return Ok(None);
    }
    let res = binary_resultant(&lf, &lg);
    match res.order_at_zero() {
        Some(k) => Ok(Some(k)),
        None => Err(Error::CommonComponent),
    }
}

/// Local intersection multiplicity of two curves at a common point, read off
/// as the vanishing order of a resultant along a ruling on which the point
/// is the only common zero.
pub fn local_mult(f: &BiForm, g: &BiForm, p: &BiPoint) -> Result<usize> {
    for (name, c) in [("first", f), ("second", g)] {
        if !c.contains(p) {
            return Err(Error::PointOffCurve(format!("{p} is not on the {name} curve")));
        }
    }
    if let Some(k) = mult_eliminating_v(f, g, p)? {
        return Ok(k);
    }
    let q = BiPoint { u: p.v, v: p.u };
    if let Some(k) = mult_eliminating_v(&f.swapped(), &g.swapped(), &q)? {
        return Ok(k);
    }
    Err(Error::NotIsolated)
}

fn z(k: i64) -> FieldElem {
    FieldElem::zeta_pow(k)
}

/// C: u₀v₀³ = u₁v₁³.
pub fn curve_c() -> BiForm {
    BiForm::zero(1, 3).with(0, 0, FieldElem::ONE).with(1, 3, -FieldElem::ONE)
}

/// C′: u₀³v₀ = u₁³v₁.
pub fn curve_c_prime() -> BiForm {
    BiForm::zero(3, 1).with(0, 0, FieldElem::ONE).with(3, 1, -FieldElem::ONE)
}

/// Cᵢ: u₁ = ζⁱu₀ (1 ≤ i ≤ 8), C₉: u₁ = 0, C₁₀: u₀ = 0.
pub fn ruling_c(i: usize) -> BiForm {
    match i {
        1..=8 => BiForm::zero(1, 0).with(1, 0, FieldElem::ONE).with(0, 0, -z(i as i64)),
        9 => BiForm::zero(1, 0).with(1, 0, FieldElem::ONE),
        10 => BiForm::zero(1, 0).with(0, 0, FieldElem::ONE),
        _ => panic!("ruling index {i} out of range"),
    }
}

/// Dⱼ: the same lines in the second factor.
pub fn ruling_d(j: usize) -> BiForm {
    ruling_c(j).swapped()
}

/// The ten points of C ∩ C′ in the expected order.
pub fn expected_base_points() -> Vec<BiPoint> {
    let mut v = vec![
        BiPoint { u: P1::infinity(), v: P1::affine(FieldElem::ZERO) },
        BiPoint { u: P1::affine(FieldElem::ZERO), v: P1::infinity() },
    ];
    for i in 1..=8 {
        v.push(BiPoint { u: P1::affine(z(i)), v: P1::affine(z(5 * i)) });
    }
    v
}

#[derive(Clone, Debug)]
pub struct BasePoints {
    pub points: Vec<BiPoint>,
    pub multiplicities: Vec<usize>,
}

impl BasePoints {
    /// C·C′ for bidegrees (1,3) and (3,1).
    pub const BEZOUT: usize = 1 + 3 * 3;
}

/// Rational points of C ∩ C′; their multiplicities must exhaust C·C′ so that
/// no further intersection exists over the closure.
pub fn base_points() -> Result<BasePoints> {
    let (c, cp) = (curve_c(), curve_c_prime());
    let mut points = Vec::new();
    for u in P1::all_gf9() {
        for v in P1::all_gf9() {
            let p = BiPoint { u, v };
            if c.contains(&p) && cp.contains(&p) {
                points.push(p);
            }
        }
    }
    let multiplicities = points.iter().map(|p| local_mult(&c, &cp, p)).collect::<Result<Vec<_>>>()?;
    let total: usize = multiplicities.iter().sum();
    if points.len() != 10 || total != BasePoints::BEZOUT {
        return Err(Error::CountMismatch { what: "C ∩ C′ multiplicity".into(), expected: 10, found: total });
    }
    Ok(BasePoints { points, multiplicities })
}

/// The thirty (1,1)-forms through four base points each.
pub fn thirty_forms() -> Vec<BiForm> {
    forms_with_family_sign(|k| z(4 * k))
}

/// The thirty forms with the family u₀v₀ + ζ^{2k}(u₀v₁ − u₁v₀) − u₁v₁ taken
/// literally; two members (k = 0, 2) meet only two base points.
pub fn printed_thirty_forms() -> Vec<BiForm> {
    forms_with_family_sign(|_| -FieldElem::ONE)
}

fn forms_with_family_sign(last: impl Fn(i64) -> FieldElem) -> Vec<BiForm> {
    let o = FieldElem::ZERO;
    let one = FieldElem::ONE;
    let b = BiForm::bilinear;
    let mut f = Vec::with_capacity(30);
    for k in 0..4 {
        f.push(b(one, o, o, -z(2 * k)));
    }
    for s in [one, -one] {
        f.push(b(o, one, s, o));
    }
    // u₀v₀ ± c·u₀v₁ + d·u₁v₁ and the same with u₁v₀
    let pairs = [(one, one), (z(1), -z(2)), (z(3), z(2)), (z(2), -one)];
    for mixed_in_u1 in [false, true] {
        for &(c, d) in &pairs {
            for s in [one, -one] {
                if mixed_in_u1 {
                    f.push(b(one, o, s * c, d));
                } else {
                    f.push(b(one, s * c, o, d));
                }
            }
        }
    }
    for k in 0..4 {
        f.push(b(one, z(2 * k), -z(2 * k), last(k)));
    }
    for &(c, d) in &[(z(1), -z(2)), (z(3), z(2))] {
        for s in [one, -one] {
            f.push(b(one, s * c, s * c, d));
        }
    }
    f
}

/// 30 × 10 incidence between the forms and the base points.
pub fn form_incidence(forms: &[BiForm], points: &[BiPoint]) -> Vec<Vec<bool>> {
    forms.iter().map(|f| points.iter().map(|p| f.contains(p)).collect()).collect()
}

/// Every nondegenerate (1,1)-form over GF(9), up to scaling, through exactly
/// four base points.
pub fn four_point_forms() -> Vec<BiForm> {
    let bps = expected_base_points();
    let f9: Vec<FieldElem> = Field::new(Level::F9).elements().collect();
    let mut found = Vec::new();
    for &c00 in &[FieldElem::ZERO, FieldElem::ONE] {
        for &a in &f9 {
            for &b in &f9 {
                for &c in &f9 {
                    if c00.is_zero() && a != FieldElem::ONE {
                        continue;
                    }
                    let f = BiForm::bilinear(c00, a, b, c);
                    if !(c00 * c - a * b).is_zero() && bps.iter().filter(|p| f.contains(p)).count() == 4 {
                        found.push(f);
                    }
                }
            }
        }
    }
    found
}

/// Local multiplicities at shared base points → number of pairs of forms.
pub fn pair_tally(forms: &[BiForm]) -> Result<BTreeMap<Vec<usize>, usize>> {
    let bps = expected_base_points();
    let mut tally = BTreeMap::new();
    for (i, f) in forms.iter().enumerate() {
        for g in &forms[i + 1..] {
            let ms = bps
                .iter()
                .filter(|p| f.contains(p) && g.contains(p))
                .map(|p| local_mult(f, g, p))
                .collect::<Result<Vec<usize>>>()?;
            *tally.entry(ms).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_points_match_the_list() {
        let bp = base_points().unwrap();
        let mut expected = expected_base_points();
        expected.sort();
        let mut got = bp.points.clone();
        got.sort();
        assert_eq!(got, expected);
        assert!(bp.multiplicities.iter().all(|&m| m == 1));
    }

    #[test]
    fn rulings_are_tangent() {
        let (c, cp) = (curve_c(), curve_c_prime());
        let bps = expected_base_points();
        let mut hit_c = Vec::new();
        let mut hit_d = Vec::new();
        for i in 1..=10 {
            let on: Vec<&BiPoint> = bps.iter().filter(|p| ruling_c(i).contains(p)).collect();
            assert_eq!(on.len(), 1);
            assert_eq!(local_mult(&ruling_c(i), &c, on[0]).unwrap(), 3);
            hit_c.push(*on[0]);
            let on: Vec<&BiPoint> = bps.iter().filter(|p| ruling_d(i).contains(p)).collect();
            assert_eq!(on.len(), 1);
            assert_eq!(local_mult(&ruling_d(i), &cp, on[0]).unwrap(), 3);
            hit_d.push(*on[0]);
        }
        hit_c.sort();
        hit_c.dedup();
        hit_d.sort();
        hit_d.dedup();
        assert_eq!(hit_c.len(), 10);
        assert_eq!(hit_d.len(), 10);
    }

    #[test]
    fn c9_meets_c_at_the_second_listed_point() {
        let p = BiPoint { u: P1::affine(FieldElem::ZERO), v: P1::infinity() };
        assert_eq!(local_mult(&ruling_c(9), &curve_c(), &p).unwrap(), 3);
        let q = BiPoint { u: P1::infinity(), v: P1::affine(FieldElem::ZERO) };
        assert!(matches!(local_mult(&ruling_c(9), &curve_c(), &q), Err(Error::PointOffCurve(_))));
        assert_eq!(local_mult(&ruling_c(10), &curve_c(), &q).unwrap(), 3);
    }

    #[test]
    fn thirty_forms_through_four_points() {
        let forms = thirty_forms();
        assert_eq!(forms.len(), 30);
        let inc = form_incidence(&forms, &expected_base_points());
        assert!(inc.iter().all(|row| row.iter().filter(|&&b| b).count() == 4));
        for j in 0..10 {
            assert_eq!(inc.iter().filter(|row| row[j]).count(), 12);
        }
        let first = &forms[0];
        assert_eq!(first, &BiForm::bilinear(FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO, -FieldElem::ONE));
    }

    #[test]
    fn printed_family_differs_in_two_forms() {
        let bps = expected_base_points();
        let printed = printed_thirty_forms();
        let bad: Vec<usize> = (0..30).filter(|&i| bps.iter().filter(|p| printed[i].contains(p)).count() != 4).collect();
        assert_eq!(bad, vec![22, 24]);
        assert_eq!(thirty_forms().iter().zip(&printed).filter(|(a, b)| a != b).count(), 2);
    }

    #[test]
    fn no_other_form_meets_four_points() {
        let forms = thirty_forms();
        let found = four_point_forms();
        assert_eq!(found.len(), 30);
        assert!(found.iter().all(|f| forms.contains(f)));
    }

    #[test]
    fn pairs_of_forms_at_base_points() {
        let tally = pair_tally(&thirty_forms()).unwrap();
        assert!(tally.keys().all(|ms| ms.iter().sum::<usize>() <= 2));
        let expected: BTreeMap<Vec<usize>, usize> = [(vec![], 45), (vec![1, 1], 270), (vec![2], 120)].into_iter().collect();
        assert_eq!(tally, expected);
    }

    #[test]
    fn common_component_and_off_curve() {
        let c = curve_c();
        let p = expected_base_points()[2];
        assert_eq!(local_mult(&c, &c, &p).unwrap_err(), Error::CommonComponent);
        let off = BiPoint { u: P1::affine(FieldElem::ONE), v: P1::affine(FieldElem::ZERO) };
        assert!(matches!(local_mult(&c, &curve_c_prime(), &off), Err(Error::PointOffCurve(_))));
    }
}
