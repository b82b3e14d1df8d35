//! Numerical laboratory for minimal hypersurface doublings of the equatorial
//! three-sphere inside the round four-sphere, and for the spherical
//! self-shrinker analog in four-dimensional Gaussian space.
//!
//! The crate builds, at desk scale, every ingredient the doubling
//! construction rests on:
//!
//! * high-accuracy scalar special functions and the construction constants
//!   `F0` and `T3` ([`specfun`]),
//! * torus-chart geometry, symmetry groups, lattices, cutoffs and weighted
//!   norms on the equatorial three-sphere ([`geom`]),
//! * the rotationally invariant Jacobi ODE, its named solutions, and the
//!   symmetry-reduced slab / solid-torus / global linear solvers ([`rld`]),
//! * Green's functions, linearized-doubling solutions, their decomposition,
//!   mismatch and obstruction spaces, and the matching equations ([`ld`]),
//! * three-dimensional catenoids, bridge charts in the four-sphere, their
//!   fundamental forms and volumes ([`catenoid`]),
//! * assembled initial surfaces, exact graph mean curvature, the nonlinear
//!   graph correction, the discrete solve-modulo-obstructions, the parameter
//!   fixed point and volume reports ([`surface`]),
//! * the self-shrinker variant of all of the above ([`shrinker`]).
//!
//! Reports serialize to JSON via [`report`], and [`verify`] packages the
//! per-module invariant suites behind the `verify` CLI command.

pub mod catenoid;
pub mod error;
pub mod geom;
pub mod ld;
pub mod quad;
pub mod report;
pub mod rld;
pub mod shrinker;
pub mod specfun;
pub mod surface;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
