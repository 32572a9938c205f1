//! Run configuration, read from a flat `key = value` file (TOML syntax).

use serde::Serialize;

use crate::analytic::Binding;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("grid needs n >= 16 and x_max > x_min (got n = {n}, [{x_min}, {x_max}])")]
    Grid { n: usize, x_min: f64, x_max: f64 },
    #[error("invalid value for {key}: {msg}")]
    Value { key: String, msg: String },
    #[error("cannot parse config: {0}")]
    Parse(String),
    #[error("time step {dt} exceeds cfl * dx^3 = {limit}")]
    Step { dt: f64, limit: f64 },
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self, ConfigError> {
        if n < 16 || !(x_max > x_min) {
            return Err(ConfigError::Grid { n, x_min, x_max });
        }
        Ok(Grid1D { x_min, x_max, n })
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n as f64
    }

    /// Node `i`, possibly outside `0..n` for ghost cells.
    pub fn x(&self, i: isize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n as isize).map(|i| self.x(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Boundary {
    Periodic,
    /// Ghost cells filled from a registered closed-form family.
    Exact { family: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Initial {
    Zero,
    Constant { u: f64, v: f64 },
    /// `u = amp sin(k x)`, `v = 0`.
    Sine { amp: f64, k: f64 },
    Family { id: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    pub grid: Grid1D,
    pub dt: f64,
    pub t_end: f64,
    pub boundary: Boundary,
    pub initial: Initial,
    /// Parameters of the family used for initial data, ghosts and errors.
    pub binding: Binding,
    /// Law labels whose densities are monitored.
    pub monitors: Vec<String>,
    /// Monitor sampling period in steps.
    pub stride: usize,
    pub blowup: f64,
}

pub const DEFAULT_CFL: f64 = 0.2;
pub const BLOWUP: f64 = 1e6;

impl SimConfig {
    /// Soliton benchmark on `[-20, 20]` with `dt = 0.2 dx³`.
    pub fn benchmark(n: usize, mu: f64, t_end: f64) -> Result<Self, ConfigError> {
        let grid = Grid1D::new(-20.0, 20.0, n)?;
        Ok(SimConfig {
            dt: DEFAULT_CFL * grid.dx().powi(3),
            grid,
            t_end,
            boundary: Boundary::Exact { family: "eq93".into() },
            initial: Initial::Family { id: "eq93".into() },
            binding: Binding::new().with("mu", mu),
            monitors: vec!["eq32".into(), "eq33".into()],
            stride: 100,
            blowup: BLOWUP,
        })
    }

    /// Parses a flat config. Unknown numeric keys become family parameters.
    ///
    /// ```text
    /// x_min = -20.0
    /// x_max = 20.0
    /// n = 512
    /// t_end = 1.0
    /// cfl = 0.2          # or dt = ...
    /// boundary = "exact" # or "periodic"
    /// initial = "eq93"   # or "zero", "sine", "constant"
    /// monitors = "eq32,eq33"
    /// stride = 100
    /// mu = 1.0
    /// ```
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| ConfigError::Parse(e.to_string()))?;
        let num = |k: &str, d: Option<f64>| -> Result<f64, ConfigError> {
            match table.get(k) {
                Some(toml::Value::Float(f)) => Ok(*f),
                Some(toml::Value::Integer(i)) => Ok(*i as f64),
                Some(v) => Err(ConfigError::Value { key: k.into(), msg: format!("expected a number, got {v}") }),
                None => d.ok_or_else(|| ConfigError::Value { key: k.into(), msg: "missing".into() }),
            }
        };
        let text_of = |k: &str, d: &str| -> Result<String, ConfigError> {
            match table.get(k) {
                Some(toml::Value::String(s)) => Ok(s.clone()),
                Some(v) => Err(ConfigError::Value { key: k.into(), msg: format!("expected a string, got {v}") }),
                None => Ok(d.to_string()),
            }
        };
        let n = num("n", None)?;
        if n.fract() != 0.0 || n < 0.0 {
            return Err(ConfigError::Value { key: "n".into(), msg: format!("{n} is not a count") });
        }
        let grid = Grid1D::new(num("x_min", Some(-20.0))?, num("x_max", Some(20.0))?, n as usize)?;
        let cfl = num("cfl", Some(DEFAULT_CFL))?;
        let limit = cfl * grid.dx().powi(3);
        let dt = num("dt", Some(limit))?;
        if !(dt > 0.0) || dt > limit * (1.0 + 1e-12) {
            return Err(ConfigError::Step { dt, limit });
        }
        let initial_name = text_of("initial", "eq93")?;
        let initial = match initial_name.as_str() {
            "zero" => Initial::Zero,
            "constant" => Initial::Constant { u: num("u0", Some(0.0))?, v: num("v0", Some(0.0))? },
            "sine" => Initial::Sine { amp: num("amp", Some(1.0))?, k: num("k", Some(1.0))? },
            id => Initial::Family { id: id.to_string() },
        };
        let boundary = match text_of("boundary", "exact")?.as_str() {
            "periodic" => Boundary::Periodic,
            "exact" => match &initial {
                Initial::Family { id } => Boundary::Exact { family: text_of("family", id)? },
                _ => Boundary::Exact { family: text_of("family", "eq93")? },
            },
            other => return Err(ConfigError::Value { key: "boundary".into(), msg: format!("unknown mode {other:?}") }),
        };
        // a comma list or a TOML array
        let monitors = match table.get("monitors") {
            Some(toml::Value::Array(a)) => a
                .iter()
                .map(|v| match v {
                    toml::Value::String(s) => Ok(s.clone()),
                    v => Err(ConfigError::Value { key: "monitors".into(), msg: format!("expected a string, got {v}") }),
                })
                .collect::<Result<Vec<_>, _>>()?,
            _ => text_of("monitors", "eq32,eq33")?
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect(),
        };
        let known = [
            "n", "x_min", "x_max", "cfl", "dt", "t_end", "initial", "boundary", "family", "monitors", "stride", "u0",
            "v0", "amp", "k", "blowup",
        ];
        let mut binding = Binding::new();
        for (k, v) in &table {
            if known.contains(&k.as_str()) {
                continue;
            }
            let x = match v {
                toml::Value::Float(f) => *f,
                toml::Value::Integer(i) => *i as f64,
                _ => return Err(ConfigError::Value { key: k.clone(), msg: "parameters must be numbers".into() }),
            };
            binding = binding.with(k, x);
        }
        let stride = num("stride", Some(100.0))?.max(1.0) as usize;
        Ok(SimConfig {
            grid,
            dt,
            t_end: num("t_end", Some(1.0))?,
            boundary,
            initial,
            binding,
            monitors,
            stride,
            blowup: num("blowup", Some(BLOWUP))?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_file() {
        let c = SimConfig::parse("n = 64\nt_end = 0.5\nboundary = \"periodic\"\ninitial = \"sine\"\nk = 2\nmu = 1.5\n").unwrap();
        assert_eq!(c.grid.n, 64);
        assert_eq!(c.boundary, Boundary::Periodic);
        assert_eq!(c.initial, Initial::Sine { amp: 1.0, k: 2.0 });
        assert_eq!(c.binding.get("mu"), Some(1.5));
        assert_eq!(c.monitors, vec!["eq32", "eq33"]);
        let c = SimConfig::parse("n = 32\nmonitors = [\"eq33\"]\n").unwrap();
        assert_eq!(c.monitors, vec!["eq33"]);
        assert!((c.dt - DEFAULT_CFL * c.grid.dx().powi(3)).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(matches!(SimConfig::parse("n = 8"), Err(ConfigError::Grid { .. })));
        assert!(matches!(SimConfig::parse("n = 64\ndt = 1.0"), Err(ConfigError::Step { .. })));
        assert!(matches!(SimConfig::parse("n = 64\nboundary = \"open\""), Err(ConfigError::Value { .. })));
        assert!(SimConfig::parse("n = = 3").is_err());
    }
}
