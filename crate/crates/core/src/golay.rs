//! The extended binary Golay code on Ω = {∞, 0, 1, …, 22} and its Steiner
//! system S(5,8,24).
//!
//! Coordinates are packed into the low 24 bits of a `u32`: bit 0 is ∞ and bit
//! `j + 1` is the finite point `j`.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Label of the point at infinity in [`mask_of`].
pub const INF: i32 = -1;
pub const FULL: u32 = (1 << 24) - 1;

pub type OctadMask = u32;

/// Bit position of a label (`INF` or 0..=22).
pub fn coord(label: i32) -> usize {
    if label == INF {
        0
    } else {
        assert!((0..23).contains(&label), "label out of range: {label}");
        label as usize + 1
    }
}

pub fn label(coord: usize) -> i32 {
    if coord == 0 {
        INF
    } else {
        coord as i32 - 1
    }
}

pub fn mask_of(labels: &[i32]) -> u32 {
    labels.iter().fold(0, |m, &l| m | (1 << coord(l)))
}

pub fn labels_of(mask: u32) -> Vec<i32> {
    (0..24).filter(|&c| mask >> c & 1 == 1).map(label).collect()
}

pub fn format_mask(mask: u32) -> String {
    let parts: Vec<String> = labels_of(mask)
        .into_iter()
        .map(|l| if l == INF { "inf".to_string() } else { l.to_string() })
        .collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueSet {
    Quadratic,
    NonResidue,
}

/// Generator family: translates of the residue set, optionally with 0
/// adjoined, extended by ∞ to even weight, plus the all-ones word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Variant {
    pub residues: ResidueSet,
    pub include_zero: bool,
}

pub const VARIANTS: [Variant; 4] = [
    Variant { residues: ResidueSet::Quadratic, include_zero: true },
    Variant { residues: ResidueSet::NonResidue, include_zero: false },
    Variant { residues: ResidueSet::NonResidue, include_zero: true },
    Variant { residues: ResidueSet::Quadratic, include_zero: false },
];

/// Octads written out explicitly in the construction of the 112 roots: the
/// octad K and its thirty neighbours. The list contains one repeat.
pub const REFERENCE_OCTADS: [(&str, [i32; 8]); 31] = [
    ("K", [INF, 0, 2, 3, 4, 8, 9, 21]),
    ("K1", [INF, 0, 5, 6, 7, 13, 16, 17]),
    ("K2", [INF, 0, 5, 7, 11, 14, 18, 19]),
    ("K3", [INF, 0, 5, 10, 13, 14, 15, 22]),
    ("K4", [INF, 0, 5, 11, 12, 15, 17, 20]),
    ("K5", [INF, 0, 6, 7, 10, 12, 15, 18]),
    ("K6", [INF, 0, 6, 10, 14, 17, 19, 20]),
    ("K7", [INF, 0, 6, 11, 12, 13, 19, 22]),
    ("K8", [INF, 0, 7, 15, 16, 19, 20, 22]),
    ("K9", [INF, 0, 10, 11, 13, 16, 18, 20]),
    ("K10", [INF, 0, 12, 14, 16, 17, 18, 22]),
    ("K1'", [INF, 1, 2, 5, 6, 8, 9, 16]),
    ("K2'", [INF, 1, 2, 4, 7, 9, 11, 14]),
    ("K3'", [INF, 1, 2, 8, 13, 14, 15, 21]),
    ("K4'", [INF, 1, 2, 4, 5, 12, 20, 21]),
    ("K5'", [INF, 1, 2, 3, 4, 6, 15, 18]),
    ("K6'", [INF, 1, 2, 4, 8, 10, 17, 19]),
    ("K7'", [INF, 1, 2, 3, 9, 12, 13, 19]),
    ("K8'", [INF, 1, 2, 3, 7, 8, 20, 22]),
    ("K9'", [INF, 1, 2, 3, 10, 11, 16, 21]),
    ("K10'", [INF, 1, 2, 9, 17, 18, 21, 22]),
    ("K1''", [INF, 1, 3, 4, 5, 9, 10, 22]),
    ("K2''", [INF, 1, 3, 5, 8, 18, 19, 21]),
    ("K3''", [INF, 1, 3, 4, 5, 9, 10, 22]),
    ("K4''", [INF, 1, 3, 8, 9, 11, 15, 17]),
    ("K5''", [INF, 1, 7, 8, 9, 10, 12, 21]),
    ("K6''", [INF, 1, 3, 6, 9, 14, 20, 21]),
    ("K7''", [INF, 1, 4, 6, 8, 11, 21, 22]),
    ("K8''", [INF, 1, 4, 9, 15, 16, 19, 21]),
    ("K9''", [INF, 1, 4, 8, 9, 13, 18, 20]),
    ("K10''", [INF, 1, 3, 4, 8, 12, 14, 16]),
];

#[derive(Clone, Debug)]
pub struct SteinerSystem {
    variant: Variant,
    basis: Vec<(u32, u32)>, // (pivot bit, reduced generator)
    octads: Vec<OctadMask>,
    five_index: HashMap<u32, u16>,
    five_collisions: usize,
}

/// Facts recomputed from a (possibly corrupted) system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolayAudit {
    pub octad_count: usize,
    pub non_codeword_octads: Vec<OctadMask>,
    pub five_subsets_covered: usize,
    pub five_subset_collisions: usize,
    pub weight_enumerator: Vec<(u32, usize)>,
    pub bad_intersections: usize,
    pub missing_reference: Vec<&'static str>,
    pub reference_duplicates: Vec<(&'static str, &'static str)>,
}

impl GolayAudit {
    pub fn is_valid(&self) -> bool {
        self.octad_count == 759
            && self.non_codeword_octads.is_empty()
            && self.five_subsets_covered == 42504
            && self.five_subset_collisions == 0
            && self.weight_enumerator == expected_weight_enumerator()
            && self.bad_intersections == 0
            && self.missing_reference.is_empty()
    }
}

pub fn expected_weight_enumerator() -> Vec<(u32, usize)> {
    vec![(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]
}

fn residues(kind: ResidueSet) -> Vec<u32> {
    let q: Vec<u32> = (1..23u32).map(|i| i * i % 23).collect();
    match kind {
        ResidueSet::Quadratic => (1..23).filter(|r| q.contains(r)).collect(),
        ResidueSet::NonResidue => (1..23).filter(|r| !q.contains(r)).collect(),
    }
}

fn generators(v: Variant) -> Vec<u32> {
    let mut base = residues(v.residues);
    if v.include_zero {
        base.push(0);
    }
    let mut gens: Vec<u32> = (0..23)
        .map(|t| {
            let mut m = base.iter().fold(0u32, |m, &b| m | 1 << ((b + t) % 23 + 1));
            if m.count_ones() % 2 == 1 {
                m |= 1;
            }
            m
        })
        .collect();
    gens.push(FULL);
    gens
}

fn echelon(gens: &[u32]) -> Vec<(u32, u32)> {
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for &g in gens {
        let mut g = g;
        for &(p, b) in &basis {
            if g >> p & 1 == 1 {
                g ^= b;
            }
        }
        if g != 0 {
            let p = 31 - g.leading_zeros();
            for entry in basis.iter_mut() {
                if entry.1 >> p & 1 == 1 {
                    entry.1 ^= g;
                }
            }
            basis.push((p, g));
        }
    }
    basis
}

fn five_subsets(mask: u32) -> impl Iterator<Item = u32> {
    let bits: Vec<u32> = (0..24).filter(|&c| mask >> c & 1 == 1).collect();
    let n = bits.len();
    let mut out = Vec::new();
    if n >= 5 {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for e in d + 1..n {
                            out.push(
                                1 << bits[a] | 1 << bits[b] | 1 << bits[c] | 1 << bits[d] | 1 << bits[e],
                            );
                        }
                    }
                }
            }
        }
    }
    out.into_iter()
}

impl SteinerSystem {
    fn from_parts(variant: Variant, basis: Vec<(u32, u32)>, mut octads: Vec<OctadMask>) -> SteinerSystem {
        octads.sort_unstable();
        let mut five_index = HashMap::with_capacity(octads.len() * 56);
        let mut five_collisions = 0;
        for (i, &o) in octads.iter().enumerate() {
            for s in five_subsets(o) {
                if five_index.insert(s, i as u16).is_some() {
                    five_collisions += 1;
                }
            }
        }
        SteinerSystem { variant, basis, octads, five_index, five_collisions }
    }

    fn construct(variant: Variant) -> SteinerSystem {
        let basis = echelon(&generators(variant));
        let mut sys = SteinerSystem::from_parts(variant, basis, Vec::new());
        let octads = sys.codewords().filter(|c| c.count_ones() == 8).collect();
        sys = SteinerSystem::from_parts(variant, sys.basis, octads);
        sys
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn octads(&self) -> &[OctadMask] {
        &self.octads
    }

    pub fn codewords(&self) -> impl Iterator<Item = u32> + '_ {
        let k = self.basis.len();
        (0u32..1 << k).map(move |sel| {
            self.basis
                .iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .fold(0, |acc, (_, &(_, b))| acc ^ b)
        })
    }

    pub fn is_codeword(&self, mask: u32) -> bool {
        if mask & !FULL != 0 {
            return false;
        }
        let mut m = mask;
        for &(p, b) in &self.basis {
            if m >> p & 1 == 1 {
                m ^= b;
            }
        }
        m == 0
    }

    pub fn is_octad(&self, mask: u32) -> bool {
        self.octads.binary_search(&mask).is_ok()
    }

    /// The unique octad containing a 5-subset.
    pub fn octad_through(&self, five: u32) -> Result<OctadMask> {
        if five.count_ones() != 5 || five & !FULL != 0 {
            return Err(Error::InvalidSubset(format!(
                "{} has {} points",
                format_mask(five),
                five.count_ones()
            )));
        }
        self.five_index
            .get(&five)
            .map(|&i| self.octads[i as usize])
            .ok_or_else(|| Error::InvalidSubset(format!("{} lies on no octad", format_mask(five))))
    }

    pub fn weight_enumerator(&self) -> Vec<(u32, usize)> {
        let mut counts = [0usize; 25];
        for c in self.codewords() {
            counts[c.count_ones() as usize] += 1;
        }
        (0..25u32).filter(|&w| counts[w as usize] > 0).map(|w| (w, counts[w as usize])).collect()
    }

    /// Replaces the octad at `index` without any validation.
    pub fn with_octad_replaced(&self, index: usize, mask: OctadMask) -> SteinerSystem {
        let mut octads = self.octads.clone();
        octads[index] = mask;
        SteinerSystem::from_parts(self.variant, self.basis.clone(), octads)
    }

    pub fn audit(&self) -> GolayAudit {
        let non_codeword_octads = self
            .octads
            .iter()
            .copied()
            .filter(|&o| o.count_ones() != 8 || !self.is_codeword(o))
            .collect();
        let mut bad_intersections = 0;
        for (i, &a) in self.octads.iter().enumerate() {
            for &b in &self.octads[i + 1..] {
                if !matches!((a & b).count_ones(), 0 | 2 | 4) {
                    bad_intersections += 1;
                }
            }
        }
        let missing_reference = REFERENCE_OCTADS
            .iter()
            .filter(|(_, o)| !self.is_octad(mask_of(o)))
            .map(|(n, _)| *n)
            .collect();
        GolayAudit {
            octad_count: self.octads.len(),
            non_codeword_octads,
            five_subsets_covered: self.five_index.len(),
            five_subset_collisions: self.five_collisions,
            weight_enumerator: self.weight_enumerator(),
            bad_intersections,
            missing_reference,
            reference_duplicates: reference_duplicates(),
        }
    }
}

/// Pairs of reference octads with identical point sets.
pub fn reference_duplicates() -> Vec<(&'static str, &'static str)> {
    let mut out = Vec::new();
    for (i, (a, oa)) in REFERENCE_OCTADS.iter().enumerate() {
        for (b, ob) in &REFERENCE_OCTADS[i + 1..] {
            if mask_of(oa) == mask_of(ob) {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// Builds the code, trying each generator variant until the resulting system
/// validates against the reference octads.
pub fn build_golay() -> Result<SteinerSystem> {
    let mut reasons = Vec::new();
    for v in VARIANTS {
        let sys = SteinerSystem::construct(v);
        if sys.dimension() != 12 {
            reasons.push(format!("{v:?}: dimension {}", sys.dimension()));
            continue;
        }
        let audit = sys.audit();
        if audit.is_valid() {
            return Ok(sys);
        }
        reasons.push(format!("{v:?}: {audit:?}"));
    }
    Err(Error::GolayValidation(reasons.join("; ")))
}
