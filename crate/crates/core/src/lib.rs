//! Lattices of flats, Tutte constellations, order-complex homology and
//! foundations of matroids, computed exactly at small scale.

pub mod constellation;
pub mod error;
pub mod foundation;
pub mod homology;
pub mod matroid;
pub mod pasture;
pub mod set;

pub use error::{Error, Result};
pub use matroid::{catalog, Flat, FlatLattice, Matroid, MinorSpec};
pub use set::ElementSet;
