//! Exact arithmetic workbench for heights, counting functions and Campana
//! integrality over the rational function field `k(t)`.
//!
//! The ground field is represented by exact rationals; geometric points of
//! `P^1` that are not rational appear as [`Place::ConjugacyClass`] places
//! weighted by their degree, so every count agrees with the algebraically
//! closed semantics.

pub mod error;
pub mod factor;
pub mod funfield;
pub mod mpoly;
pub mod parse;
pub mod place;
pub mod ratfun;
pub mod toric;
pub mod upoly;
pub mod verify;

pub use error::{Error, Result};
pub use factor::{factor, squarefree_decomposition, Factorization};
pub use funfield::{
    chi_plus, counting, enlarge_places, height, is_s_integer, is_s_unit, order_at, places_of,
    projective_height, CountMode, CountingReport, Truncation,
};
pub use mpoly::{DegreeProfile, ExponentVector, MPoly, SubsumReport};
pub use place::{Place, PlaceSet};
pub use ratfun::RatFun;
pub use upoly::UniPoly;

/// Exact rational number used for every ground-field coefficient.
pub type Rational = num_rational::BigRational;
