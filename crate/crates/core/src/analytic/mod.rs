//! Closed-form expressions used as numeric oracles for exact solutions.

pub mod expr;
pub mod orbit;
pub mod residual;

pub use expr::{Binding, EvalError, Expr, Var};
pub use orbit::{group_orbit, transport, transport_printed};
pub use residual::{residual_max, sample_points, ResidualReport};
