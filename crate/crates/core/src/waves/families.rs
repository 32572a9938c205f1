//! Registry of closed-form solution families and their numeric check.

use crate::analytic::{residual_max, sample_points, Binding, EvalError, Expr, ResidualReport};
use crate::jet::EvolutionSystem;

#[derive(Debug, Clone)]
pub struct SolitonFamily {
    pub id: &'static str,
    pub u: Expr,
    pub v: Expr,
    pub free_params: Vec<&'static str>,
    pub constraints: Vec<&'static str>,
    /// Default binding for single checks.
    pub binding: Binding,
    pub x_range: (f64, f64),
    pub t_range: (f64, f64),
    /// Axes scanned by [`scan_family`] on top of `binding`.
    pub grid: Vec<(&'static str, Vec<f64>)>,
    /// Scan `c2 = ∓C1²/2` at every grid point.
    pub balance_c2: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FamilyError {
    #[error("no family {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn pm(name: &str) -> Expr {
    Expr::param(name)
}

fn sqrt3() -> Expr {
    Expr::int(3).sqrt()
}

fn eq19() -> SolitonFamily {
    let (x, t) = (Expr::x(), Expr::t());
    SolitonFamily {
        id: "eq19",
        u: t.clone() + pm("c1"),
        v: t.powi(2) / Expr::int(2) - x + pm("c2"),
        free_params: vec!["c1", "c2"],
        constraints: vec![],
        binding: Binding::new().with("c1", 1.0).with("c2", 0.5),
        x_range: (-5.0, 5.0),
        t_range: (0.0, 2.0),
        grid: vec![("c1", vec![-1.0, 0.0, 1.0, 2.0])],
        balance_c2: false,
    }
}

fn eq22() -> SolitonFamily {
    let (x, t) = (Expr::x(), Expr::t());
    SolitonFamily {
        id: "eq22",
        u: (x + Expr::int(2)) / t.clone(),
        v: pm("c1") / t,
        free_params: vec!["c1"],
        constraints: vec![],
        binding: Binding::new().with("c1", 2.0),
        x_range: (-5.0, 5.0),
        t_range: (0.5, 2.0),
        grid: vec![("c1", vec![-1.0, 0.0, 2.0])],
        balance_c2: false,
    }
}

/// `e^{C1 μ √3}` and `e^{μ ξ √3}` with `ξ = x - μt`.
fn line_exponentials() -> (Expr, Expr) {
    let mu = pm("mu");
    let xi = Expr::x() - mu.clone() * Expr::t();
    ((pm("C1") * mu.clone() * sqrt3()).exp(), (mu * xi * sqrt3()).exp())
}

fn line_v() -> Expr {
    let (ea, eb) = line_exponentials();
    let mu = pm("mu");
    -(Expr::int(2) * eb.clone() * mu.powi(2) * ea.clone()) / (ea - eb).powi(2)
}

fn line_common(id: &'static str, u: Expr) -> SolitonFamily {
    SolitonFamily {
        id,
        u,
        v: line_v(),
        free_params: vec!["mu", "C1"],
        constraints: vec![],
        binding: Binding::new().with("mu", 1.0).with("C1", 0.5),
        x_range: (-5.0, 5.0),
        t_range: (0.0, 1.0),
        grid: vec![("mu", vec![0.0, 0.5, 1.0, 2.0]), ("C1", vec![-1.0, 0.0, 1.0])],
        balance_c2: false,
    }
}

fn eq82() -> SolitonFamily {
    let (ea, eb) = line_exponentials();
    let mu = pm("mu");
    let u = Expr::int(2) * ea.clone() * mu / (eb.clone() * (Expr::int(-1) + ea / eb));
    line_common("eq82", u)
}

fn eq83() -> SolitonFamily {
    let (ea, eb) = line_exponentials();
    let mu = pm("mu");
    let u = Expr::int(2) * eb.clone() * mu / (ea.clone() * (Expr::int(-1) + eb / ea));
    line_common("eq83", u)
}

/// `u = μ - (2√3/3) tanh(μt - x)`, `v = 2/3 - (2/3) tanh²(μt - x)`.
pub fn eq93() -> SolitonFamily {
    let mu = pm("mu");
    let th = (mu.clone() * Expr::t() - Expr::x()).tanh();
    SolitonFamily {
        id: "eq93",
        u: mu - Expr::int(2) * sqrt3() * th.clone() / Expr::int(3),
        v: Expr::frac(2, 3) - Expr::int(2) * th.powi(2) / Expr::int(3),
        free_params: vec!["mu"],
        constraints: vec![],
        binding: Binding::new().with("mu", 1.0),
        x_range: (-5.0, 5.0),
        t_range: (0.0, 2.0),
        grid: vec![("mu", vec![0.5, 1.0, 2.0])],
        balance_c2: false,
    }
}

fn eq96() -> SolitonFamily {
    let a0 = pm("a0");
    let e = (Expr::x() - (a0.clone() + sqrt3() / Expr::int(3)) * Expr::t()).exp();
    let d = Expr::one() + e;
    SolitonFamily {
        id: "eq96",
        u: a0 + Expr::int(2) * sqrt3() / (Expr::int(3) * d.clone()),
        v: Expr::int(2) / (Expr::int(3) * d.clone()) - Expr::int(2) / (Expr::int(3) * d.powi(2)),
        free_params: vec!["a0"],
        constraints: vec!["mu = a0 + sqrt(3)/3"],
        binding: Binding::new().with("a0", 0.5),
        x_range: (-5.0, 5.0),
        t_range: (0.0, 2.0),
        grid: vec![("a0", vec![-1.0, 0.0, 0.5, 1.0])],
        balance_c2: false,
    }
}

/// `(R2 + R1 e^{R1 ξ + ξ0}) / R1` with `ξ = κ1 x + ω1 t`.
fn bernoulli() -> Expr {
    let xi = pm("kappa1") * Expr::x() + pm("omega1") * Expr::t();
    (pm("R2") + pm("R1") * (pm("R1") * xi + pm("xi0")).exp()) / pm("R1")
}

fn eta() -> Expr {
    pm("kappa2") * Expr::x() + pm("omega2") * Expr::t()
}

fn kudryashov_binding() -> Binding {
    [
        ("A0", 0.3),
        ("C1", 0.7),
        ("a0", 0.2),
        ("c1", 0.7),
        ("c2", -0.245),
        ("R1", 1.0),
        ("R2", 0.5),
        ("kappa1", 1.0),
        ("omega1", -1.0),
        ("kappa2", 1.0),
        ("omega2", -0.5),
        ("xi0", 0.0),
        ("eta0", 0.1),
        ("b1", 0.4),
        ("a01", 0.4),
        ("S2", 0.3),
        ("mu", 1.5),
    ]
    .into_iter()
    .fold(Binding::new(), |b, (k, v)| b.with(k, v))
}

fn kudryashov(id: &'static str, u: Expr, v: Expr, free: Vec<&'static str>) -> SolitonFamily {
    SolitonFamily {
        id,
        u,
        v,
        free_params: free,
        constraints: vec!["xi = kappa1 x + omega1 t", "eta = kappa2 x + omega2 t"],
        binding: kudryashov_binding(),
        x_range: (-2.0, 2.0),
        t_range: (0.0, 1.0),
        grid: vec![("R1", vec![1.0, -1.0]), ("R2", vec![0.5, -0.5]), ("omega1", vec![-1.0, 1.0])],
        balance_c2: true,
    }
}

fn eq86() -> SolitonFamily {
    let phi = bernoulli();
    let shift = pm("C1") * (pm("A0") * pm("kappa1") + pm("omega1")) / pm("kappa1");
    kudryashov(
        "eq86",
        pm("A0") + pm("C1") * phi.clone(),
        pm("a0") - shift * phi.clone() + pm("c2") * phi.powi(2),
        vec!["A0", "C1", "a0", "c2", "R1", "R2", "kappa1", "omega1", "xi0"],
    )
}

fn eq87() -> SolitonFamily {
    let phi = bernoulli();
    let lin = pm("R2") * pm("c1") * pm("kappa1") / (pm("b1") * pm("kappa2")) * eta() + pm("eta0");
    kudryashov(
        "eq87",
        pm("A0"),
        pm("a0") + pm("b1") * lin + pm("c1") * phi.clone() + pm("c2") * phi.powi(2),
        vec!["A0", "a0", "b1", "c1", "c2", "R1", "R2", "kappa1", "omega1", "kappa2", "omega2", "xi0", "eta0"],
    )
}

fn eq88() -> SolitonFamily {
    let phi = bernoulli();
    let rm = pm("mu").sqrt();
    let den = pm("C1") * pm("R2") * pm("kappa1") / pm("omega2")
        - rm.clone() * (rm / Expr::int(2) * eta() + pm("eta0")).tanh();
    let shift = pm("C1") * (pm("A0") * pm("kappa1") + pm("omega1")) / pm("kappa1");
    kudryashov(
        "eq88",
        pm("A0") + pm("C1") * phi.clone(),
        pm("a0") + pm("b1") * (Expr::int(2) * pm("S2") / den) - shift * phi.clone() + pm("c2") * phi.powi(2),
        vec!["A0", "C1", "a0", "b1", "c2", "S2", "mu", "R1", "R2", "kappa1", "omega1", "kappa2", "omega2", "xi0", "eta0"],
    )
}

fn eq89() -> SolitonFamily {
    let phi = bernoulli();
    let lin = pm("R2") * pm("C1") * pm("omega1") / (pm("b1") * pm("kappa2")) * eta() + pm("eta0");
    kudryashov(
        "eq89",
        pm("A0") + pm("C1") * phi.clone(),
        pm("a0") + pm("b1") * lin + pm("c1") * phi.clone() + pm("c2") * phi.powi(2),
        vec!["A0", "C1", "a0", "b1", "c1", "c2", "R1", "R2", "kappa1", "omega1", "kappa2", "omega2", "xi0", "eta0"],
    )
}

fn eq90() -> SolitonFamily {
    let phi = bernoulli();
    let lin = pm("R2") * pm("c1") * pm("kappa1") / (pm("a01") * pm("kappa2")) * eta() + pm("eta0");
    kudryashov(
        "eq90",
        pm("A0"),
        pm("a0") - pm("a01") / lin + pm("c1") * phi.clone() + pm("c2") * phi.powi(2),
        vec!["A0", "a0", "a01", "c1", "c2", "R1", "R2", "kappa1", "omega1", "kappa2", "omega2", "xi0", "eta0"],
    )
}

pub const FAMILY_IDS: [&str; 11] =
    ["eq19", "eq22", "eq82", "eq83", "eq86", "eq87", "eq88", "eq89", "eq90", "eq93", "eq96"];

pub fn family(id: &str) -> Result<SolitonFamily, FamilyError> {
    Ok(match id {
        "eq19" => eq19(),
        "eq22" => eq22(),
        "eq82" => eq82(),
        "eq83" => eq83(),
        "eq86" => eq86(),
        "eq87" => eq87(),
        "eq88" => eq88(),
        "eq89" => eq89(),
        "eq90" => eq90(),
        "eq93" => eq93(),
        "eq96" => eq96(),
        _ => return Err(FamilyError::UnknownFamily(id.to_string())),
    })
}

/// Residual of the family on `n` seeded samples; `binding` overrides the
/// family defaults.
pub fn verify_family(
    sys: &EvolutionSystem,
    id: &str,
    binding: &Binding,
    n: usize,
    seed: u64,
) -> Result<ResidualReport, FamilyError> {
    let f = family(id)?;
    let mut b = f.binding.clone();
    b.0.extend(binding.0.iter().map(|(k, v)| (k.clone(), *v)));
    let pts = sample_points(n, f.x_range, f.t_range, seed);
    Ok(residual_max(sys, &[f.u, f.v], &b, &pts)?)
}

/// Cartesian product of `axes` on top of `base`.
pub fn grid_bindings(base: &Binding, axes: &[(String, Vec<f64>)]) -> Vec<Binding> {
    axes.iter().fold(vec![base.clone()], |acc, (name, vals)| {
        acc.iter().flat_map(|b| vals.iter().map(move |v| b.clone().with(name, *v))).collect()
    })
}

/// Parses `name=v1,v2;name2=v3`.
pub fn parse_grid(spec: &str) -> Result<Vec<(String, Vec<f64>)>, String> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|axis| {
            let (name, vals) = axis.split_once('=').ok_or_else(|| format!("missing '=' in {axis:?}"))?;
            let vals = vals
                .split(',')
                .map(|v| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((name.trim().to_string(), vals))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub binding: Binding,
    pub report: Result<ResidualReport, EvalError>,
}

/// Runs the family over `axes` (or its default grid). For the Kudryashov
/// families each point is tried with `c2 = -C1²/2` and `c2 = +C1²/2`, the
/// value that balances `u u_x` against `v_x` and its opposite.
pub fn scan_family(
    sys: &EvolutionSystem,
    id: &str,
    axes: Option<&[(String, Vec<f64>)]>,
    n: usize,
    seed: u64,
) -> Result<Vec<ScanEntry>, FamilyError> {
    let f = family(id)?;
    let default: Vec<(String, Vec<f64>)> = f.grid.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    let axes = axes.unwrap_or(&default);
    let mut bindings = grid_bindings(&f.binding, axes);
    if f.balance_c2 {
        bindings = bindings
            .into_iter()
            .flat_map(|b| {
                let c = b.get("C1").or(b.get("c1")).unwrap_or(0.0);
                let h = c * c / 2.0;
                [b.clone().with("c2", -h), b.with("c2", h)]
            })
            .collect();
    }
    let pts = sample_points(n, f.x_range, f.t_range, seed);
    Ok(bindings
        .into_iter()
        .map(|b| {
            let report = residual_max(sys, &[f.u.clone(), f.v.clone()], &b, &pts);
            ScanEntry { binding: b, report }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;

    #[test]
    fn tanh_kink() {
        let sys = model::dlw();
        for mu in [0.5, 1.0, 2.0] {
            let r = verify_family(&sys, "eq93", &Binding::new().with("mu", mu), 50, 1).unwrap();
            assert!(r.max_residual < 1e-10, "{mu}: {r:?}");
        }
    }

    #[test]
    fn invariant_solutions() {
        let sys = model::dlw();
        let r = verify_family(&sys, "eq22", &Binding::new().with("c1", 2.0), 50, 1).unwrap();
        assert!(r.max_residual < 1e-12);
        let r = verify_family(&sys, "eq19", &Binding::new().with("c1", 1.0), 50, 1).unwrap();
        assert!(r.per_equation[0] < 1e-12);
        assert!((r.per_equation[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(family("eq7"), Err(FamilyError::UnknownFamily(_))));
    }

    #[test]
    fn grid_parsing() {
        let g = parse_grid("mu=0.5,1;C1=0").unwrap();
        assert_eq!(g, vec![("mu".to_string(), vec![0.5, 1.0]), ("C1".to_string(), vec![0.0])]);
        assert_eq!(grid_bindings(&Binding::new(), &g).len(), 2);
        assert!(parse_grid("mu").is_err());
    }
}
