//! Integral homology of order complexes of subconstellation posets.

pub mod complex;
pub mod l3;
pub mod sigma;
pub mod smith;

pub use complex::{HomologyGroup, SimplicialComplex};
pub use l3::{search_l3, L3Class, L3Search, L3Summary, MAX_L3_ATOMS};
pub use sigma::{sigma_complex, sigma_complex_of_classes, ClassId, SigmaComplex, Subconstellation};
pub use smith::{smith_normal_form, IntegerMatrix};

use crate::error::Result;

/// `H_k(K, Z)`; fails when `k` exceeds the dimension of `K`.
pub fn homology_of_complex(k: &SimplicialComplex, degree: usize) -> Result<HomologyGroup> {
    k.homology(degree)
}
