//! Finitely presented pastures.

pub mod group;
pub mod hom;
pub mod named;
pub mod presentation;
pub mod recognize;

pub use group::UnitGroup;
pub use presentation::{CanonicalForm, PastureElement, PasturePresentation, Term};
pub use named::{by_name, finite_field, FiniteField};
pub use hom::{fingerprint, hom_count, hom_enumerate, hom_exists, is_morphism, PastureMorphism};
pub use recognize::{automorphisms, quotient_by, recognize, signature, Factor, Signature, Structure};
