//! Univariate polynomials over the tower and rational functions on plane
//! curves of the form Y² = f(X).
//!
//! A [`RatFun`] is stored as (a(X) + b(X)·Y) / d(X). Without a curve relation
//! the Y-part is always zero and the value is an ordinary rational function in
//! X. With a relation every product is reduced with Y² = f(X), and division
//! multiplies through by the conjugate a − bY so that denominators stay
//! univariate. Since {1, Y} is a basis of the function field over k(X), two
//! such functions are equal iff both cross-multiplied components vanish.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::FieldElem;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})X^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElem::ONE)
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Poly {
        Poly::monomial(FieldElem::ONE, 1)
    }

    pub fn monomial(c: FieldElem, deg: usize) -> Poly {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Coefficients listed from the constant term upwards.
    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| FieldElem::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * FieldElem::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Order of vanishing at X = 0; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Substitutes X ↦ X + c.
    pub fn shift(&self, c: FieldElem) -> Poly {
        let lin = Poly::from_coeffs(vec![c, FieldElem::ONE]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &k| &(&acc * &lin) + &Poly::constant(k))
    }

    pub fn monic(&self) -> Poly {
        match self.leading().inv() {
            Some(inv) => self.scale(inv),
            None => Poly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElem::ZERO; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = *rem.last().unwrap() * lead_inv;
            quot[k] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Poly, Add, add);
forward_owned!(Poly, Sub, sub);
forward_owned!(Poly, Mul, mul);

/// Arithmetic needed by the elliptic-curve chord construction, shared by
/// field elements and function-field elements.
pub trait FieldOps:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(c: FieldElem) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Option<Self>;
}

impl FieldOps for FieldElem {
    fn constant(c: FieldElem) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(*self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

/// (a(X) + b(X)·Y) / den(X), optionally on the curve Y² = relation(X).
#[derive(Clone, Debug)]
pub struct RatFun {
    a: Poly,
    b: Poly,
    den: Poly,
    relation: Option<Poly>,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<RatFun> {
        RatFun::with_y(num, Poly::zero(), den, None)
    }

    /// (a + bY)/den on the curve Y² = relation. A Y-part requires a relation.
    pub fn with_y(a: Poly, b: Poly, den: Poly, relation: Option<Poly>) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if relation.is_none() && !b.is_zero() {
            return Err(Error::RelationMismatch);
        }
        Ok(RatFun { a, b, den, relation }.reduced())
    }

    pub fn poly(p: Poly) -> RatFun {
        RatFun { a: p, b: Poly::zero(), den: Poly::one(), relation: None }
    }

    pub fn constant_elem(c: FieldElem) -> RatFun {
        RatFun::poly(Poly::constant(c))
    }

    /// The coordinate function X on the curve Y² = relation.
    pub fn curve_x(relation: &Poly) -> RatFun {
        RatFun {
            a: Poly::x(),
            b: Poly::zero(),
            den: Poly::one(),
            relation: Some(relation.clone()),
        }
    }

    /// The coordinate function Y on the curve Y² = relation.
    pub fn curve_y(relation: &Poly) -> RatFun {
        RatFun {
            a: Poly::zero(),
            b: Poly::one(),
            den: Poly::one(),
            relation: Some(relation.clone()),
        }
    }

    pub fn relation(&self) -> Option<&Poly> {
        self.relation.as_ref()
    }

    pub fn numerator(&self) -> (&Poly, &Poly) {
        (&self.a, &self.b)
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    fn reduced(self) -> RatFun {
        let g = self.a.gcd(&self.b).gcd(&self.den);
        let (mut a, mut b, mut den) = (self.a, self.b, self.den);
        if g.degree().unwrap_or(0) > 0 {
            a = a.div_rem(&g).0;
            b = b.div_rem(&g).0;
            den = den.div_rem(&g).0;
        }
        let lc = den.leading().inv().expect("nonzero denominator");
        RatFun {
            a: a.scale(lc),
            b: b.scale(lc),
            den: den.scale(lc),
            relation: self.relation,
        }
    }

    fn join(&self, other: &RatFun) -> Option<Poly> {
        match (&self.relation, &other.relation) {
            (Some(f), Some(g)) => {
                assert_eq!(f, g, "rational functions on different curves");
                Some(f.clone())
            }
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (None, None) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            return None;
        }
        // 1/((a+bY)/d) = d(a − bY) / (a² − b²f)
        let f = self.relation.clone().unwrap_or_default();
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &f);
        Some(
            RatFun {
                a: &self.den * &self.a,
                b: -&(&self.den * &self.b),
                den: norm,
                relation: self.relation.clone(),
            }
            .reduced(),
        )
    }

    /// Value at an affine point; `None` where the stored denominator vanishes.
    pub fn eval(&self, x: FieldElem, y: FieldElem) -> Option<FieldElem> {
        let d = self.den.eval(x);
        d.inv().map(|di| (self.a.eval(x) + self.b.eval(x) * y) * di)
    }

    /// Derivative along the curve with respect to Y, using 2Y dY = f′(X) dX.
    pub fn d_dy(&self) -> Result<RatFun> {
        let f = self.relation.as_ref().ok_or(Error::RelationMismatch)?;
        let two = FieldElem::from_int(2);
        let dx = (RatFun::curve_y(f) * RatFun::constant_elem(two))
            * RatFun::poly(f.derivative()).inv().ok_or(Error::ZeroDenominator)?;
        let y = RatFun::curve_y(f);
        let d_poly = |p: &Poly| RatFun::poly(p.derivative()) * dx.clone();
        let num = RatFun::poly(self.a.clone()) + RatFun::poly(self.b.clone()) * y.clone();
        let d_num = d_poly(&self.a) + d_poly(&self.b) * y + RatFun::poly(self.b.clone());
        let den = RatFun::poly(self.den.clone());
        let d_den = d_poly(&self.den);
        let out = (d_num * den.clone() - num * d_den) * (den.clone() * den).inv().unwrap();
        Ok(out.on_curve(f))
    }

    fn on_curve(mut self, f: &Poly) -> RatFun {
        self.relation = Some(f.clone());
        self
    }

    /// Valuation at the unique point at infinity of Y² = f(X) with deg f odd:
    /// v(X) = −2 and v(Y) = −deg f, so the two parts never cancel.
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        let n = self.relation.as_ref()?.degree()? as i64;
        if n % 2 == 0 || self.is_zero() {
            return None;
        }
        let va = self.a.degree().map(|d| -2 * d as i64);
        let vb = self.b.degree().map(|d| -2 * d as i64 - n);
        let v_num = match (va, vb) {
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => unreachable!(),
        };
        Some(v_num + 2 * self.den.degree().unwrap() as i64)
    }
}

/// Exact equality of two rational functions by cross-multiplication.
pub fn ratfun_identity(lhs: &RatFun, rhs: &RatFun) -> Result<bool> {
    if lhs.den.is_zero() || rhs.den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if let (Some(f), Some(g)) = (&lhs.relation, &rhs.relation) {
        if f != g {
            return Err(Error::RelationMismatch);
        }
    }
    let a = &(&lhs.a * &rhs.den) - &(&rhs.a * &lhs.den);
    let b = &(&lhs.b * &rhs.den) - &(&rhs.b * &lhs.den);
    Ok(a.is_zero() && b.is_zero())
}

impl PartialEq for RatFun {
    fn eq(&self, other: &RatFun) -> bool {
        ratfun_identity(self, other).unwrap_or(false)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        let relation = self.join(&rhs);
        RatFun {
            a: &(&self.a * &rhs.den) + &(&rhs.a * &self.den),
            b: &(&self.b * &rhs.den) + &(&rhs.b * &self.den),
            den: &self.den * &rhs.den,
            relation,
        }
        .reduced()
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { a: -&self.a, b: -&self.b, ..self }
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        let relation = self.join(&rhs);
        let f = relation.clone().unwrap_or_default();
        let yy = &self.b * &rhs.b;
        RatFun {
            a: &(&self.a * &rhs.a) + &(&yy * &f),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
            den: &self.den * &rhs.den,
            relation,
        }
        .reduced()
    }
}

impl FieldOps for RatFun {
    fn constant(c: FieldElem) -> Self {
        RatFun::constant_elem(c)
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}
