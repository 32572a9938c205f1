//! Method-of-lines integration with central differences and classical RK4.

use std::collections::HashMap;

use serde::Serialize;

use crate::analytic::{Binding, EvalError, Expr, Var};
use crate::conslaw::ConservationLaw;
use crate::jet::{Dep, EvolutionSystem, JetPoly, JetVar, Sym};
use crate::model;
use crate::waves::{family, FamilyError};

use super::config::{Boundary, Grid1D, Initial, SimConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldState {
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub time: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("non-finite {field} at node {index}, t = {time}")]
    NonFinite { field: &'static str, index: usize, time: f64 },
    #[error("blow-up at t = {time}: |field| = {max:e}")]
    Blowup { time: f64, max: f64 },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("no conservation law {0}")]
    UnknownMonitor(String),
    #[error("density of {0} needs x-derivatives above second order")]
    MonitorOrder(String),
    #[error("{0} has no exact reference")]
    NoReference(String),
    #[error("family {id} is not a solution (residual {residual:e})")]
    NotASolution { id: String, residual: f64 },
    #[error("{0}")]
    Io(String),
}

/// A closed-form solution bound to parameter values.
#[derive(Debug, Clone)]
pub struct Reference {
    pub id: String,
    pub u: Expr,
    pub v: Expr,
    pub binding: Binding,
}

impl Reference {
    /// Family `id` with `overrides` on top of its default parameters.
    pub fn new(id: &str, overrides: &Binding) -> Result<Self, SimError> {
        let f = family(id)?;
        let mut binding = f.binding.clone();
        binding.0.extend(overrides.0.iter().map(|(k, v)| (k.clone(), *v)));
        Ok(Reference { id: id.to_string(), u: f.u, v: f.v, binding })
    }

    pub fn at(&self, x: f64, t: f64) -> Result<(f64, f64), SimError> {
        Ok((self.u.eval(x, t, &self.binding)?, self.v.eval(x, t, &self.binding)?))
    }

    pub fn sample(&self, grid: &Grid1D, t: f64) -> Result<FieldState, SimError> {
        let (mut u, mut v) = (Vec::with_capacity(grid.n), Vec::with_capacity(grid.n));
        for x in grid.nodes() {
            let (a, b) = self.at(x, t)?;
            u.push(a);
            v.push(b);
        }
        Ok(FieldState { u, v, time: t })
    }
}

/// Boundary mode resolved against its reference solution.
#[derive(Debug, Clone)]
pub enum Ghosts {
    Periodic,
    Exact(Reference),
}

const G: usize = 2;

/// Copies `f` into a buffer with two ghost cells per side.
fn pad(
    f: &[f64],
    grid: &Grid1D,
    ghosts: &Ghosts,
    t: f64,
    pick: fn((f64, f64)) -> f64,
) -> Result<Vec<f64>, SimError> {
    let n = f.len();
    let mut p = vec![0.0; n + 2 * G];
    p[G..G + n].copy_from_slice(f);
    match ghosts {
        Ghosts::Periodic => {
            for k in 0..G {
                p[k] = f[n - G + k];
                p[G + n + k] = f[k];
            }
        }
        Ghosts::Exact(r) => {
            for k in 0..G {
                p[k] = pick(r.at(grid.x(k as isize - G as isize), t)?);
                p[G + n + k] = pick(r.at(grid.x((n + k) as isize), t)?);
            }
        }
    }
    Ok(p)
}

fn check_finite(s: &FieldState) -> Result<(), SimError> {
    for (field, f) in [("u", &s.u), ("v", &s.v)] {
        if let Some(index) = f.iter().position(|x| !x.is_finite()) {
            return Err(SimError::NonFinite { field, index, time: s.time });
        }
    }
    Ok(())
}

/// Padded copies of `u` and `v`.
fn padded(s: &FieldState, grid: &Grid1D, ghosts: &Ghosts) -> Result<(Vec<f64>, Vec<f64>), SimError> {
    Ok((pad(&s.u, grid, ghosts, s.time, |p| p.0)?, pad(&s.v, grid, ghosts, s.time, |p| p.1)?))
}

/// Central derivative of order `k ≤ 4` at padded index `j`.
fn stencil(p: &[f64], j: usize, k: u32, dx: f64) -> f64 {
    match k {
        0 => p[j],
        1 => (p[j + 1] - p[j - 1]) / (2.0 * dx),
        2 => (p[j + 1] - 2.0 * p[j] + p[j - 1]) / (dx * dx),
        3 => (p[j + 2] - 2.0 * p[j + 1] + 2.0 * p[j - 1] - p[j - 2]) / (2.0 * dx.powi(3)),
        4 => (p[j + 2] - 4.0 * p[j + 1] + 6.0 * p[j] - 4.0 * p[j - 1] + p[j - 2]) / dx.powi(4),
        _ => unreachable!("stencil order {k}"),
    }
}

/// `(u_t, v_t)` from the semi-discrete system.
pub fn rhs(s: &FieldState, grid: &Grid1D, ghosts: &Ghosts) -> Result<(Vec<f64>, Vec<f64>), SimError> {
    check_finite(s)?;
    let (pu, pv) = padded(s, grid, ghosts)?;
    let dx = grid.dx();
    let n = s.u.len();
    let (mut du, mut dv) = (vec![0.0; n], vec![0.0; n]);
    for i in 0..n {
        let j = i + G;
        let (u, v) = (pu[j], pv[j]);
        let ux = stencil(&pu, j, 1, dx);
        let vx = stencil(&pv, j, 1, dx);
        let uxxx = stencil(&pu, j, 3, dx);
        du[i] = -(u * ux + vx);
        dv[i] = -(ux * v + u * vx + uxxx / 3.0);
    }
    Ok((du, dv))
}

fn axpy(s: &FieldState, k: &(Vec<f64>, Vec<f64>), h: f64) -> FieldState {
    FieldState {
        u: s.u.iter().zip(&k.0).map(|(a, b)| a + h * b).collect(),
        v: s.v.iter().zip(&k.1).map(|(a, b)| a + h * b).collect(),
        time: s.time + h,
    }
}

/// One classical RK4 step; ghost cells are refreshed at each stage time.
pub fn rk4_step(s: &FieldState, grid: &Grid1D, ghosts: &Ghosts, h: f64) -> Result<FieldState, SimError> {
    let k1 = rhs(s, grid, ghosts)?;
    let k2 = rhs(&axpy(s, &k1, h / 2.0), grid, ghosts)?;
    let k3 = rhs(&axpy(s, &k2, h / 2.0), grid, ghosts)?;
    let k4 = rhs(&axpy(s, &k3, h), grid, ghosts)?;
    let w = |a: &[f64], i: usize, k: fn(&(Vec<f64>, Vec<f64>)) -> &Vec<f64>| {
        a[i] + h / 6.0 * (k(&k1)[i] + 2.0 * k(&k2)[i] + 2.0 * k(&k3)[i] + k(&k4)[i])
    };
    let n = s.u.len();
    Ok(FieldState {
        u: (0..n).map(|i| w(&s.u, i, |k| &k.0)).collect(),
        v: (0..n).map(|i| w(&s.v, i, |k| &k.1)).collect(),
        time: s.time + h,
    })
}

fn jet_value(pu: &[f64], pv: &[f64], j: usize, var: &JetVar, dx: f64) -> f64 {
    let p = if var.dep == Dep::U { pu } else { pv };
    stencil(p, j, var.dx, dx)
}

/// A monitored density, reduced on shell so only `x`-derivatives remain.
#[derive(Debug, Clone)]
pub struct Monitor {
    pub label: String,
    density: JetPoly,
    /// Flux jets evaluated on the reference, for the boundary correction.
    flux: JetPoly,
    flux_jets: Vec<(JetVar, Expr, Expr)>,
}

impl Monitor {
    pub fn new(law: &ConservationLaw, sys: &EvolutionSystem) -> Result<Self, SimError> {
        let red = |p: &JetPoly| sys.reduce(p).map_err(|_| SimError::UnknownMonitor(law.label.clone()));
        let density = red(&law.density)?;
        let flux = red(&law.flux)?;
        if density.jet_vars().iter().any(|v| v.dx > 2 || v.dt > 0) {
            return Err(SimError::MonitorOrder(law.label.clone()));
        }
        Ok(Monitor { label: law.label.clone(), density, flux, flux_jets: Vec::new() })
    }

    fn bind_reference(&mut self, r: &Reference) {
        self.flux_jets = self
            .flux
            .jet_vars()
            .into_iter()
            .map(|v| {
                let (eu, ev) = (r.u.diff_n(Var::X, v.dx), r.v.diff_n(Var::X, v.dx));
                (v, eu, ev)
            })
            .collect();
    }

    fn eval_at(&self, poly: &JetPoly, x: f64, t: f64, jet: impl Fn(&JetVar) -> f64) -> f64 {
        poly.eval(|s| match s {
            Sym::Jet(v) => jet(v),
            Sym::X => x,
            Sym::T => t,
            Sym::Param(_) => f64::NAN,
        })
    }

    /// Trapezoid quadrature of the density over `[x_min, x_max]`.
    pub fn quadrature(&self, s: &FieldState, grid: &Grid1D, ghosts: &Ghosts) -> Result<f64, SimError> {
        let (pu, pv) = padded(s, grid, ghosts)?;
        let dx = grid.dx();
        let at = |i: usize| {
            let x = grid.x(i as isize);
            self.eval_at(&self.density, x, s.time, |v| jet_value(&pu, &pv, i + G, v, dx))
        };
        let n = grid.n;
        Ok(match ghosts {
            // the periodic trapezoid rule is the plain sum
            Ghosts::Periodic => dx * (0..n).map(at).sum::<f64>(),
            Ghosts::Exact(_) => dx * ((at(0) + at(n)) / 2.0 + (1..n).map(at).sum::<f64>()),
        })
    }

    /// `F(x_max, t) - F(x_min, t)` on the reference.
    fn boundary_flux(&self, r: &Reference, grid: &Grid1D, t: f64) -> Result<f64, SimError> {
        let mut out = 0.0;
        for (x, sign) in [(grid.x_max, 1.0), (grid.x_min, -1.0)] {
            let mut vals = HashMap::new();
            for (v, eu, ev) in &self.flux_jets {
                let e = if v.dep == Dep::U { eu } else { ev };
                vals.insert(*v, e.eval(x, t, &r.binding)?);
            }
            out += sign * self.eval_at(&self.flux, x, t, |v| vals[v]);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonitorSample {
    pub time: f64,
    pub value: f64,
    pub relative_drift: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonitorSeries {
    pub label: String,
    pub samples: Vec<MonitorSample>,
}

impl MonitorSeries {
    pub fn max_drift(&self) -> f64 {
        self.samples.iter().map(|s| s.relative_drift).fold(0.0, f64::max)
    }
}

/// Drift relative to `v0`, or absolute when `v0` vanishes.
fn drift(v: f64, v0: f64) -> f64 {
    if v0 == 0.0 {
        (v - v0).abs()
    } else {
        ((v - v0) / v0).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Blowup {
    pub time: f64,
    /// Largest magnitude in the state, NaN when a value went non-finite.
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunOutcome {
    pub state: FieldState,
    pub monitors: Vec<MonitorSeries>,
    /// Discrete L2 error against the reference at the final time.
    pub l2_error: Option<f64>,
    /// Set when the run stopped early.
    pub blowup: Option<Blowup>,
    pub steps: usize,
}

pub fn reference_for(cfg: &SimConfig) -> Result<Option<Reference>, SimError> {
    let id = match (&cfg.boundary, &cfg.initial) {
        (Boundary::Exact { family }, _) => Some(family.clone()),
        (_, Initial::Family { id }) => Some(id.clone()),
        _ => None,
    };
    id.map(|id| Reference::new(&id, &cfg.binding)).transpose()
}

pub fn initial_state(cfg: &SimConfig, reference: Option<&Reference>) -> Result<FieldState, SimError> {
    let n = cfg.grid.n;
    let xs = cfg.grid.nodes();
    Ok(match &cfg.initial {
        Initial::Zero => FieldState { u: vec![0.0; n], v: vec![0.0; n], time: 0.0 },
        Initial::Constant { u, v } => FieldState { u: vec![*u; n], v: vec![*v; n], time: 0.0 },
        Initial::Sine { amp, k } => {
            FieldState { u: xs.iter().map(|x| amp * (k * x).sin()).collect(), v: vec![0.0; n], time: 0.0 }
        }
        Initial::Family { id } => match reference {
            Some(r) if r.id == *id => r.sample(&cfg.grid, 0.0)?,
            _ => Reference::new(id, &cfg.binding)?.sample(&cfg.grid, 0.0)?,
        },
    })
}

pub fn l2_error(s: &FieldState, grid: &Grid1D, r: &Reference) -> Result<f64, SimError> {
    let e = r.sample(grid, s.time)?;
    let sq: f64 = s.u.iter().zip(&e.u).chain(s.v.iter().zip(&e.v)).map(|(a, b)| (a - b).powi(2)).sum();
    Ok((grid.dx() * sq).sqrt())
}

fn max_abs(s: &FieldState) -> f64 {
    s.u.iter().chain(&s.v).fold(0.0f64, |m, x| if x.is_nan() { f64::NAN } else { m.max(x.abs()) })
}

/// Integrates `cfg` to `t_end`. A blow-up ends the run early and is
/// reported in the outcome; [`run`] turns it into an error.
pub fn integrate(cfg: &SimConfig) -> Result<RunOutcome, SimError> {
    let sys = model::dlw();
    let reference = reference_for(cfg)?;
    let ghosts = match &cfg.boundary {
        Boundary::Periodic => Ghosts::Periodic,
        Boundary::Exact { .. } => Ghosts::Exact(reference.clone().expect("exact boundary has a reference")),
    };
    let laws = model::laws_printed();
    let mut monitors = Vec::new();
    for label in &cfg.monitors {
        let law = laws.iter().find(|l| l.label == *label).ok_or_else(|| SimError::UnknownMonitor(label.clone()))?;
        let mut m = Monitor::new(law, &sys)?;
        if let Ghosts::Exact(r) = &ghosts {
            m.bind_reference(r);
        }
        monitors.push(m);
    }
    let mut state = initial_state(cfg, reference.as_ref())?;
    check_finite(&state)?;
    let steps = (cfg.t_end / cfg.dt).ceil().max(0.0) as usize;
    let h = if steps == 0 { 0.0 } else { cfg.t_end / steps as f64 };
    // time-integrated boundary flux per monitor, advanced with RK4 weights
    let mut inflow = vec![0.0; monitors.len()];
    let mut series: Vec<MonitorSeries> =
        monitors.iter().map(|m| MonitorSeries { label: m.label.clone(), samples: Vec::new() }).collect();
    let mut base = vec![0.0; monitors.len()];
    let sample = |state: &FieldState, inflow: &[f64], base: &mut [f64], series: &mut [MonitorSeries], first: bool| {
        for (k, m) in monitors.iter().enumerate() {
            let value = m.quadrature(state, &cfg.grid, &ghosts)? + inflow[k];
            if first {
                base[k] = value;
            }
            series[k].samples.push(MonitorSample { time: state.time, value, relative_drift: drift(value, base[k]) });
        }
        Ok::<_, SimError>(())
    };
    sample(&state, &inflow, &mut base, &mut series, true)?;
    let mut blowup = None;
    let mut done = 0;
    for step in 1..=steps {
        let t0 = state.time;
        let next = match rk4_step(&state, &cfg.grid, &ghosts, h) {
            Ok(s) => s,
            Err(SimError::NonFinite { time, .. }) => {
                blowup = Some(Blowup { time, max: f64::NAN });
                break;
            }
            Err(e) => return Err(e),
        };
        let m = max_abs(&next);
        if !(m <= cfg.blowup) {
            blowup = Some(Blowup { time: next.time, max: m });
            break;
        }
        if let Ghosts::Exact(r) = &ghosts {
            for (k, mon) in monitors.iter().enumerate() {
                let f0 = mon.boundary_flux(r, &cfg.grid, t0)?;
                let fm = mon.boundary_flux(r, &cfg.grid, t0 + h / 2.0)?;
                let f1 = mon.boundary_flux(r, &cfg.grid, t0 + h)?;
                inflow[k] += h / 6.0 * (f0 + 4.0 * fm + f1);
            }
        }
        state = next;
        done = step;
        if step % cfg.stride == 0 || step == steps {
            sample(&state, &inflow, &mut base, &mut series, false)?;
        }
    }
    let l2_error = match (&reference, &blowup) {
        (Some(r), None) => Some(l2_error(&state, &cfg.grid, r)?),
        _ => None,
    };
    Ok(RunOutcome { state, monitors: series, l2_error, blowup, steps: done })
}

/// [`integrate`], failing with [`SimError::Blowup`] on early exit.
pub fn run(cfg: &SimConfig) -> Result<RunOutcome, SimError> {
    let out = integrate(cfg)?;
    match out.blowup {
        Some(b) => Err(SimError::Blowup { time: b.time, max: b.max }),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::Binding;

    fn periodic(n: usize, len: f64) -> Grid1D {
        Grid1D::new(0.0, len, n).unwrap()
    }

    #[test]
    fn constant_state_is_steady() {
        let g = periodic(32, 1.0);
        let s = FieldState { u: vec![1.5; 32], v: vec![-0.25; 32], time: 0.0 };
        let (du, dv) = rhs(&s, &g, &Ghosts::Periodic).unwrap();
        assert!(du.iter().chain(&dv).all(|x| *x == 0.0));
    }

    #[test]
    fn sine_rhs_second_order() {
        let k = 1.0;
        let err = |n: usize| {
            let g = periodic(n, 2.0 * std::f64::consts::PI);
            let xs = g.nodes();
            let s = FieldState { u: xs.iter().map(|x| (k * x).sin()).collect(), v: vec![0.0; n], time: 0.0 };
            let (du, dv) = rhs(&s, &g, &Ghosts::Periodic).unwrap();
            let mut e = 0.0f64;
            for (i, x) in xs.iter().enumerate() {
                e = e.max((du[i] + (k * x).sin() * k * (k * x).cos()).abs());
                e = e.max((dv[i] - k.powi(3) / 3.0 * (k * x).cos()).abs());
            }
            e
        };
        let (a, b) = (err(64), err(128));
        assert!(a < 1e-2 && (a / b).log2() > 1.9, "{a} {b}");
    }

    #[test]
    fn nan_aborts() {
        let g = periodic(16, 1.0);
        let mut s = FieldState { u: vec![0.0; 16], v: vec![0.0; 16], time: 0.5 };
        s.v[3] = f64::NAN;
        assert_eq!(rhs(&s, &g, &Ghosts::Periodic), Err(SimError::NonFinite { field: "v", index: 3, time: 0.5 }));
    }

    fn zero_config() -> SimConfig {
        SimConfig::parse("n = 32\nx_min = 0\nx_max = 8\nt_end = 0.05\nboundary = \"periodic\"\ninitial = \"zero\"\nmonitors = \"eq32,eq33,eq30\"\nstride = 10")
            .unwrap()
    }

    #[test]
    fn zero_data_stays_zero() {
        let out = integrate(&zero_config()).unwrap();
        assert!(out.blowup.is_none());
        assert!(out.state.u.iter().chain(&out.state.v).all(|x| *x == 0.0));
        for m in &out.monitors {
            assert!(m.samples.len() > 2);
            assert!(m.samples.iter().all(|s| s.value == 0.0 && s.relative_drift == 0.0));
        }
    }

    #[test]
    fn periodic_mass_telescopes() {
        let mut cfg = zero_config();
        cfg.initial = Initial::Sine { amp: 0.1, k: std::f64::consts::PI / 4.0 };
        cfg.monitors = vec!["eq33".into()];
        cfg.t_end = 0.02;
        let out = integrate(&cfg).unwrap();
        let s = &out.monitors[0].samples;
        let change = s.iter().map(|x| (x.value - s[0].value).abs()).fold(0.0, f64::max);
        assert!(change < 1e-13, "{change}");
    }

    #[test]
    fn halving_step_is_invisible() {
        let mut cfg = zero_config();
        cfg.initial = Initial::Sine { amp: 0.1, k: std::f64::consts::PI / 4.0 };
        cfg.monitors.clear();
        cfg.t_end = 0.02;
        let a = integrate(&cfg).unwrap();
        cfg.dt /= 2.0;
        let b = integrate(&cfg).unwrap();
        let d = a.state.u.iter().zip(&b.state.u).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        assert!(d < 1e-8, "{d}");
    }

    #[test]
    fn exact_ghosts_and_flux_bookkeeping() {
        // coarse kink run for a short time: small error, monitors nearly flat
        let mut cfg = SimConfig::benchmark(64, 1.0, 0.01).unwrap();
        cfg.stride = 1;
        let out = integrate(&cfg).unwrap();
        assert!(out.blowup.is_none());
        assert!(out.l2_error.unwrap() < 1e-2, "{:?}", out.l2_error);
        for m in &out.monitors {
            assert!(m.max_drift() < 1e-3, "{} {}", m.label, m.max_drift());
        }
    }

    #[test]
    fn unknown_monitor() {
        let mut cfg = zero_config();
        cfg.monitors = vec!["eq99".into()];
        assert_eq!(integrate(&cfg).unwrap_err(), SimError::UnknownMonitor("eq99".into()));
    }

    #[test]
    fn reference_samples_family() {
        let r = Reference::new("eq93", &Binding::new().with("mu", 1.0)).unwrap();
        let (u, v) = r.at(0.0, 0.0).unwrap();
        assert!((u - 1.0).abs() < 1e-15 && (v - 2.0 / 3.0).abs() < 1e-15);
    }
}
