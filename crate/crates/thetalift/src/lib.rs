//! Singular theta lifts for the signature (2,1) lattice of level 4N.
//!
//! The crate evaluates the lift Φ of a vector-valued harmonic Maass form
//! through its Fourier expansion, the Shimura lift of the shadow, and
//! Shintani coefficients as geodesic cycle integrals. The [`verify`] module
//! checks the underlying analytic identities numerically.

pub mod arith;
pub mod error;
pub mod hyperbolic;
pub mod lattice;
pub mod lifts;
pub mod quad;
pub mod theta;
pub mod verify;
pub mod weilrep;

pub use arith::{lift_constants, DiscriminantPair, LiftConstants, C64};
pub use error::{Error, Result};
pub use lattice::{GammaElement, LatticeVector};
pub use num_rational::Ratio;
