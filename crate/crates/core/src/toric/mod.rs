//! Smooth projective toric varieties: fans, charts, Weil functions, Campana
//! integrality and bigness of torus-invariant divisors.

mod campana;
mod divisor;
mod fan;
pub(crate) mod linalg;
mod polytope;

pub use campana::{is_campana_integral, multiplicity, CampanaVerdict, OrbifoldDatum, Violation};
pub use divisor::{
    admissible_cone, boundary_weil, chart_coordinates, divisor_counting, general_position_check,
    hypersurface_weil, hypersurface_weil_in, ray_by_vector, Component, DivisorCounting, DivisorSource,
    HypersurfaceDivisor, TorusPoint, WeilValue,
};
pub use fan::{Fan, FanVerdict};
pub use polytope::{
    boundary_coefficients, canonical, invariant_divisor_polytope, polytope_of, LatticePolytope,
};
