//! Numeric residual of closed-form candidates in a PDE system.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::jet::{EvolutionSystem, JetPoly, JetVar, Param, Sym};

use super::expr::{Binding, EvalError, Expr, Var};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_residual: f64,
    /// Maximum of each equation separately.
    pub per_equation: Vec<f64>,
    /// Signed value of each equation at the first usable sample.
    pub first_sample: Vec<f64>,
    pub samples_used: usize,
    pub samples_skipped: usize,
}

/// `n` points drawn uniformly from `[x0, x1] × [t0, t1]` with a fixed seed.
pub fn sample_points(n: usize, x: (f64, f64), t: (f64, f64), seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (rng.gen_range(x.0..=x.1), rng.gen_range(t.0..=t.1))).collect()
}

/// Jets of the candidate needed by `eqs`, differentiated symbolically.
fn jet_table(eqs: &[JetPoly], deps: &[crate::jet::Dep], cand: &[Expr]) -> HashMap<JetVar, Expr> {
    let mut table = HashMap::new();
    for e in eqs {
        for v in e.jet_vars() {
            if let Some(k) = deps.iter().position(|d| *d == v.dep) {
                table.entry(v).or_insert_with(|| cand[k].diff_n(Var::X, v.dx).diff_n(Var::T, v.dt));
            }
        }
    }
    table
}

/// Evaluates each equation of `sys` on the candidate at every sample.
/// Samples hitting a pole or domain error are skipped and counted; an
/// unbound parameter is an error.
pub fn residual_max(
    sys: &EvolutionSystem,
    candidate: &[Expr],
    binding: &Binding,
    samples: &[(f64, f64)],
) -> Result<ResidualReport, EvalError> {
    let deps = sys.deps();
    let eqs = sys.equations();
    for e in candidate {
        if let Some(p) = e.params().into_iter().find(|p| binding.get(p).is_none()) {
            return Err(EvalError::Unbound(p));
        }
    }
    let table = jet_table(&eqs, &deps, candidate);
    let mut per_equation = vec![0.0f64; eqs.len()];
    let mut first_sample = Vec::new();
    let (mut used, mut skipped) = (0, 0);
    'samples: for &(x, t) in samples {
        let mut vals: HashMap<JetVar, f64> = HashMap::new();
        for (v, e) in &table {
            match e.eval(x, t, binding) {
                Ok(y) => {
                    vals.insert(*v, y);
                }
                Err(EvalError::Unbound(p)) => return Err(EvalError::Unbound(p)),
                Err(_) => {
                    skipped += 1;
                    continue 'samples;
                }
            }
        }
        let mut row = Vec::with_capacity(eqs.len());
        for eq in &eqs {
            let mut missing = None;
            let r = eq.eval(|s| match s {
                Sym::Jet(v) => vals[v],
                Sym::X => x,
                Sym::T => t,
                Sym::Param(p) => param_value(*p, binding).unwrap_or_else(|| {
                    missing = Some(p.name().to_string());
                    f64::NAN
                }),
            });
            if let Some(m) = missing {
                return Err(EvalError::Unbound(m));
            }
            row.push(r);
        }
        for (m, r) in per_equation.iter_mut().zip(&row) {
            *m = m.max(r.abs());
        }
        if first_sample.is_empty() {
            first_sample = row;
        }
        used += 1;
    }
    let max_residual = per_equation.iter().copied().fold(0.0, f64::max);
    Ok(ResidualReport { max_residual, per_equation, first_sample, samples_used: used, samples_skipped: skipped })
}

fn param_value(p: Param, b: &Binding) -> Option<f64> {
    b.get(p.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;

    #[test]
    fn non_solution_control() {
        let cand = [Expr::x(), Expr::zero()];
        let r = residual_max(&model::dlw(), &cand, &Binding::new(), &[(1.0, 0.0)]).unwrap();
        assert_eq!(r.first_sample[0], 1.0);
    }

    #[test]
    fn scaling_invariant_solution() {
        let cand = [(Expr::x() + Expr::int(2)) / Expr::t(), Expr::param("c1") / Expr::t()];
        let b = Binding::new().with("c1", 2.0);
        let pts = sample_points(50, (-5.0, 5.0), (0.5, 2.0), 7);
        let r = residual_max(&model::dlw(), &cand, &b, &pts).unwrap();
        assert!(r.max_residual < 1e-12, "{r:?}");
        assert_eq!(r.samples_used, 50);
    }

    #[test]
    fn unbound_parameter_is_reported() {
        let cand = [Expr::param("k"), Expr::zero()];
        assert!(matches!(
            residual_max(&model::dlw(), &cand, &Binding::new(), &[(0.0, 0.0)]),
            Err(EvalError::Unbound(_))
        ));
    }
}
