//! Exact computation of local tropical varieties in the formal power series
//! ring `Q[[x_1, ..., x_n]]`.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] holds exponents, polynomials, truncated series, local weights,
//!   strata and initial forms.
//! * [`staircase`] computes minimal staircases and the per-stratum surrogate
//!   polynomials used to describe tropical hypersurfaces of series.
//! * [`polyhedra`] implements exact rational cones in H-representation and fans.
//! * [`tropical`] covers min-plus evaluation, hypersurface fans, the principal
//!   local tropical variety and tropical prevarieties.
//! * [`localgb`] computes local standard bases, local Groebner fans, monomial
//!   verdicts, the local tropical variety of an ideal and tropical finite sets.
//! * [`oracles`] contains brute-force cross-checks.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod localgb;
pub mod mora;
pub mod oracles;
pub mod order;
pub mod polyhedra;
pub mod staircase;
pub mod tropical;

pub use algebra::{
    enumerate_strata, initial_form, stratum_of, support, weight_of, Exponent, InitialForm, Polynomial, Series, Stratum,
    Truncation, WeightVector, Q,
};
pub use error::{Error, Result};
pub use polyhedra::{Fan, RationalCone};
pub use staircase::{Soundness, Staircase, StratumClasses};
pub use tropical::{Certificate, OriginSemantics, TropicalPolynomial, TropicalVarietyResult};
