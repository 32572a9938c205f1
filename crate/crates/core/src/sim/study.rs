//! Grid-refinement study against a closed-form solution.

use serde::Serialize;

use crate::analytic::Binding;
use crate::model;
use crate::waves::verify_family;

use super::config::{Grid1D, SimConfig};
use super::solver::{integrate, SimError};

/// Families whose residual exceeds this are refused as references.
pub const REFERENCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub l2_error: Option<f64>,
    /// `log2(e_prev / e)` against the previous row.
    pub order: Option<f64>,
    pub blowup_time: Option<f64>,
}

/// Runs the `family` benchmark on `[-20, 20]` for each `n` in parallel.
pub fn convergence_study(
    family: &str,
    binding: &Binding,
    n_list: &[usize],
    t_end: f64,
) -> Result<Vec<ConvergenceRow>, SimError> {
    let check = verify_family(&model::dlw(), family, binding, 64, 11)?;
    if !(check.max_residual < REFERENCE_TOL) {
        return Err(SimError::NotASolution { id: family.to_string(), residual: check.max_residual });
    }
    let configs = n_list
        .iter()
        .map(|&n| {
            let mut c = SimConfig::benchmark(n, 0.0, t_end).map_err(|e| SimError::Io(e.to_string()))?;
            c.grid = Grid1D::new(-20.0, 20.0, n).map_err(|e| SimError::Io(e.to_string()))?;
            c.boundary = super::config::Boundary::Exact { family: family.to_string() };
            c.initial = super::config::Initial::Family { id: family.to_string() };
            c.binding = binding.clone();
            c.monitors.clear();
            Ok(c)
        })
        .collect::<Result<Vec<_>, SimError>>()?;
    let outcomes = std::thread::scope(|s| {
        let handles: Vec<_> = configs.iter().map(|c| s.spawn(move || integrate(c))).collect();
        handles.into_iter().map(|h| h.join().expect("simulation thread panicked")).collect::<Vec<_>>()
    });
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    for (&n, out) in n_list.iter().zip(outcomes) {
        let out = out?;
        let blowup_time = out.blowup.map(|b| b.time);
        let order = match (rows.last().and_then(|r| r.l2_error), out.l2_error) {
            (Some(a), Some(b)) if b > 0.0 => Some((a / b).log2()),
            _ => None,
        };
        rows.push(ConvergenceRow { n, l2_error: out.l2_error, order, blowup_time });
    }
    Ok(rows)
}
