//! Differential polynomials over the jet space.

pub mod euler;
pub mod linop;
pub mod poly;
pub mod symbol;
pub mod system;
pub mod text;

pub use euler::{euler_operator, is_null_lagrangian, variational_derivative};
pub use linop::{directional, frechet, DimensionError, LinearDiffOp, OpEntry};
pub use poly::{int, rat, rat_to_f64, JetPoly, Monomial, Rat};
pub use symbol::{Axis, Dep, JetVar, Param, Sym};
pub use system::{EvolutionSystem, Reducer, SolvedRule, SystemError};
pub use text::ParseError;

/// Total derivative along one axis.
pub fn total_derivative(p: &JetPoly, axis: Axis) -> JetPoly {
    p.total_derivative(axis)
}

/// Shorthand constructor for jet coordinates.
pub fn jv(dep: Dep, dx: u32, dt: u32) -> JetPoly {
    JetPoly::var(dep, dx, dt)
}
