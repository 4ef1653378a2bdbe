//! The finite-field tower GF(3) ⊂ GF(9) ⊂ GF(81).
//!
//! GF(9) is GF(3)[t]/(t² + t − 1) and ζ := t, so ζ² + ζ = 1 and ζ⁴ = −1 hold by
//! construction. GF(81) is GF(9)[s]/(s² − ζ). Every element is stored as its
//! four base-3 coordinates (c₀ + c₁ζ) + (c₂ + c₃ζ)s packed into a single byte
//! index; the subfields are exactly the elements whose higher coordinates vanish,
//! so the tower embedding is the identity on the packed index.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ORDER: usize = 81;

/// A level of the tower, named by its extension degree over GF(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    F3,
    F9,
    F81,
}

impl Level {
    pub fn degree(self) -> u32 {
        match self {
            Level::F3 => 1,
            Level::F9 => 2,
            Level::F81 => 4,
        }
    }

    pub fn order(self) -> usize {
        3usize.pow(self.degree())
    }

    pub fn from_degree(k: u32) -> Result<Level> {
        match k {
            1 => Ok(Level::F3),
            2 => Ok(Level::F9),
            4 => Ok(Level::F81),
            _ => Err(Error::UnsupportedTowerIndex(k)),
        }
    }
}

/// An element of GF(81) (and hence of every smaller field of the tower).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct FieldElem(u8);

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: [u8; ORDER],
    inv: [u8; ORDER],
}

fn pack(c: [u8; 4]) -> u8 {
    c[0] + 3 * c[1] + 9 * c[2] + 27 * c[3]
}

fn unpack(i: u8) -> [u8; 4] {
    [i % 3, (i / 3) % 3, (i / 9) % 3, i / 27]
}

// (a0 + a1 t)(b0 + b1 t) with t² = 1 − t
fn gf9_mul(a: [u8; 2], b: [u8; 2]) -> [u8; 2] {
    let hi = a[1] * b[1];
    [
        (a[0] * b[0] + hi) % 3,
        (a[0] * b[1] + a[1] * b[0] + 2 * hi) % 3,
    ]
}

fn gf9_add(a: [u8; 2], b: [u8; 2]) -> [u8; 2] {
    [(a[0] + b[0]) % 3, (a[1] + b[1]) % 3]
}

// (a + b s)(c + d s) with s² = ζ
fn gf81_mul(x: [u8; 4], y: [u8; 4]) -> [u8; 4] {
    let (a, b) = ([x[0], x[1]], [x[2], x[3]]);
    let (c, d) = ([y[0], y[1]], [y[2], y[3]]);
    let lo = gf9_add(gf9_mul(a, c), gf9_mul(gf9_mul(b, d), [0, 1]));
    let hi = gf9_add(gf9_mul(a, d), gf9_mul(b, c));
    [lo[0], lo[1], hi[0], hi[1]]
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut add = vec![0u8; ORDER * ORDER];
        let mut mul = vec![0u8; ORDER * ORDER];
        let mut neg = [0u8; ORDER];
        let mut inv = [0u8; ORDER];
        for i in 0..ORDER as u8 {
            let x = unpack(i);
            neg[i as usize] = pack(x.map(|c| (3 - c) % 3));
            for j in 0..ORDER as u8 {
                let y = unpack(j);
                let s = [0, 1, 2, 3].map(|k| (x[k] + y[k]) % 3);
                add[i as usize * ORDER + j as usize] = pack(s);
                mul[i as usize * ORDER + j as usize] = pack(gf81_mul(x, y));
            }
        }
        for i in 1..ORDER {
            inv[i] = (1..ORDER as u8)
                .find(|&j| mul[i * ORDER + j as usize] == 1)
                .expect("GF(81) is a field");
        }
        Tables { add, mul, neg, inv }
    })
}

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Builds an element from its base-3 coordinates over (1, ζ, s, ζs).
    pub fn from_coords(c: [u8; 4]) -> FieldElem {
        FieldElem(pack(c.map(|v| v % 3)))
    }

    pub fn coords(self) -> [u8; 4] {
        unpack(self.0)
    }

    pub fn from_int(n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(3) as u8)
    }

    /// ζ, the primitive eighth root of unity with ζ² + ζ = 1.
    pub fn zeta() -> FieldElem {
        FieldElem::from_coords([0, 1, 0, 0])
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> FieldElem {
        FieldElem::zeta().pow(k.rem_euclid(8) as u64)
    }

    /// The generator s of GF(81) over GF(9), with s² = ζ.
    pub fn s() -> FieldElem {
        FieldElem::from_coords([0, 0, 1, 0])
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Smallest tower level containing this element.
    pub fn level(self) -> Level {
        let c = self.coords();
        if c[2] != 0 || c[3] != 0 {
            Level::F81
        } else if c[1] != 0 {
            Level::F9
        } else {
            Level::F3
        }
    }

    pub fn inv(self) -> Option<FieldElem> {
        (!self.is_zero()).then(|| FieldElem(tables().inv[self.0 as usize]))
    }

    pub fn pow(self, mut e: u64) -> FieldElem {
        let mut base = self;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(self) -> FieldElem {
        self * self * self
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self;
        let mut n = 1;
        while acc != FieldElem::ONE {
            acc *= self;
            n += 1;
        }
        Some(n)
    }

    /// Square root inside GF(81), if one exists there.
    pub fn sqrt(self) -> Option<FieldElem> {
        Field::new(Level::F81).elements().find(|&r| r * r == self)
    }

    pub fn is_in(self, level: Level) -> bool {
        self.level() <= level
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(tables().add[self.0 as usize * ORDER + rhs.0 as usize])
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self + (-rhs)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem(tables().neg[self.0 as usize])
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        FieldElem(tables().mul[self.0 as usize * ORDER + rhs.0 as usize])
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero.
    fn div(self, rhs: FieldElem) -> FieldElem {
        self * rhs.inv().expect("division by zero in GF(81)")
    }
}

impl AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElem {
    fn sub_assign(&mut self, rhs: FieldElem) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElem {
    fn mul_assign(&mut self, rhs: FieldElem) {
        *self = *self * rhs;
    }
}

impl fmt::Display for FieldElem {
    /// GF(9) elements print as `a+b*z`; GF(81) elements append `+(c+d*z)*s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords();
        if c[2] == 0 && c[3] == 0 {
            write!(f, "{}+{}*z", c[0], c[1])
        } else {
            write!(f, "{}+{}*z+({}+{}*z)*s", c[0], c[1], c[2], c[3])
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Descriptor for one level of the tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    level: Level,
}

impl Field {
    pub fn new(level: Level) -> Field {
        Field { level }
    }

    pub fn level(self) -> Level {
        self.level
    }

    pub fn order(self) -> usize {
        self.level.order()
    }

    /// All elements, in increasing packed order (zero first).
    pub fn elements(self) -> impl Iterator<Item = FieldElem> + Clone {
        let level = self.level;
        (0..ORDER as u8)
            .map(FieldElem)
            .filter(move |e| e.is_in(level))
    }

    pub fn nonzero(self) -> impl Iterator<Item = FieldElem> + Clone {
        self.elements().filter(|e| !e.is_zero())
    }

    pub fn zeta(self) -> Option<FieldElem> {
        (self.level >= Level::F9).then(FieldElem::zeta)
    }
}

/// The field GF(3^k) for k ∈ {1, 2, 4}.
pub fn field_tower(k: u32) -> Result<Field> {
    Level::from_degree(k).map(Field::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_three() {
        let one = FieldElem::ONE;
        assert_eq!(one + one + one, FieldElem::ZERO);
    }

    #[test]
    fn zeta_relations() {
        let z = FieldElem::zeta();
        assert_eq!(z * z + z, FieldElem::ONE);
        assert_eq!(z.pow(4), -FieldElem::ONE);
        assert_eq!(z.order(), Some(8));
        assert_eq!(FieldElem::s() * FieldElem::s(), z);
    }

    #[test]
    fn zeta_order_by_repeated_multiplication() {
        let z = FieldElem::zeta();
        let mut acc = z;
        let mut n = 1;
        while acc != FieldElem::ONE {
            acc *= z;
            n += 1;
        }
        assert_eq!(n, 8);
    }

    #[test]
    fn tower_sizes() {
        for (k, n) in [(1, 3), (2, 9), (4, 81)] {
            assert_eq!(field_tower(k).unwrap().elements().count(), n);
        }
        assert!(matches!(field_tower(3), Err(Error::UnsupportedTowerIndex(3))));
        assert!(field_tower(1).unwrap().zeta().is_none());
    }

    #[test]
    fn inverses_exhaustive() {
        for level in [Level::F3, Level::F9, Level::F81] {
            for a in Field::new(level).nonzero() {
                let b = a.inv().unwrap();
                assert_eq!(a * b, FieldElem::ONE);
                assert!(b.is_in(level));
            }
        }
        assert!(FieldElem::ZERO.inv().is_none());
    }

    #[test]
    fn frobenius_is_a_ring_map() {
        let f = Field::new(Level::F81);
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
                assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
            }
        }
    }

    #[test]
    fn gf9_embeds_in_gf81() {
        // arithmetic computed in GF(9) coordinates agrees with GF(81) arithmetic
        let f9 = Field::new(Level::F9);
        for a in f9.elements() {
            for b in f9.elements() {
                let (ca, cb) = (a.coords(), b.coords());
                let prod = gf9_mul([ca[0], ca[1]], [cb[0], cb[1]]);
                assert_eq!(a * b, FieldElem::from_coords([prod[0], prod[1], 0, 0]));
                assert!((a * b).is_in(Level::F9));
                assert!((a + b).is_in(Level::F9));
            }
        }
    }

    #[test]
    fn zeta_is_a_nonsquare_in_gf9() {
        let f9 = Field::new(Level::F9);
        assert!(f9.elements().all(|r| r * r != FieldElem::zeta()));
    }

    #[test]
    fn display_uses_zeta_notation() {
        assert_eq!(FieldElem::zeta().to_string(), "0+1*z");
        assert_eq!((-FieldElem::ONE).to_string(), "2+0*z");
    }
}
