//! Symbolic and numerical laboratory for the (1+1)-dimensional dispersive
//! long-wave system
//!
//! ```text
//! u_t + u u_x + v_x = 0
//! v_t + u_x v + u v_x + u_xxx / 3 = 0
//! ```

pub mod adjoint;
pub mod analytic;
pub mod conslaw;
pub mod jet;
pub mod linalg;
pub mod model;
pub mod report;
pub mod sim;
pub mod symmetry;
pub mod waves;
