//! Exact arithmetic for a configuration of 112 smooth rational curves in
//! characteristic 3, built three ways: Leech roots, lines on the Fermat
//! quartic and curves on the Kummer surface of a superspecial abelian surface.

pub mod abelian;
pub mod error;
pub mod fermat;
pub mod field;
pub mod golay;
pub mod graph;
pub mod kummer;
pub mod leech;
pub mod poly;
pub mod quadric;
pub mod quaternion;
pub mod snf;

pub use error::{Error, Result};
pub use field::{field_tower, Field, FieldElem, Level};
