//! Linear Weingarten surfaces of revolution and their parallel families.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: Jacobi elliptic functions and elliptic integrals on all of ℝ.
//! * [`surface`]: point-wise differential geometry of parametrized surfaces.
//! * [`profiles`]: constant Gauss curvature profile curves, revolution, tubes.
//! * [`parallel`]: parallel surfaces and linear Weingarten coefficient algebra.
//! * [`hyperbolic`]: the complete immersed family of hyperbolic type.

pub mod error;
pub mod hyperbolic;
pub mod parallel;
pub mod profiles;
pub mod specfun;
pub mod surface;

pub use error::{Error, Result};
