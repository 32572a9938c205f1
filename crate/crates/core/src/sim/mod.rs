//! Finite-difference simulation with conserved-density monitors.

pub mod config;
pub mod output;
pub mod solver;
pub mod study;

pub use config::{Boundary, ConfigError, Grid1D, Initial, SimConfig, BLOWUP, DEFAULT_CFL};
pub use output::{write_monitor_csv, write_run, write_snapshot_csv, RunSummary};
pub use solver::{
    initial_state, integrate, run, Blowup, l2_error, rhs, rk4_step, FieldState, Ghosts, Monitor, MonitorSample, MonitorSeries,
    Reference, RunOutcome, SimError,
};
pub use study::{convergence_study, ConvergenceRow, REFERENCE_TOL};
