//! Lie point symmetries, brackets, the optimal system and reductions.

pub mod bracket;
pub mod optimal;
pub mod point;
pub mod reduction;

pub use bracket::{char_bracket, char_structure_constants, structure_constants};
pub use optimal::{adjoint_transformations, optimal_reduce, Class, Reduction, Step};
pub use point::{lie_bracket, PointError, PointSymmetry};
