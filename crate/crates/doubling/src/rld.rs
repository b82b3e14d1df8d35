//! The rotationally invariant Jacobi ODE, its named solutions, the modal
//! field representation, and the symmetry-reduced linear solvers.

pub mod grid;
pub mod modal;
pub mod radial;
pub mod solve;

pub use grid::{Domain, RadialGrid};
pub use modal::{AngularQuad, FieldJet, ModalField, ModeIndex};
pub use radial::{RadialSolution, Side};
pub use solve::{global_solve, kernel_check, slab_solve, solid_torus_solve, SolveReport};
