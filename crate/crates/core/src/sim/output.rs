//! CSV series, snapshots and the JSON run summary.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::{Grid1D, SimConfig};
use super::solver::{FieldState, MonitorSeries, RunOutcome, SimError};

fn io<E: std::fmt::Display>(e: E) -> SimError {
    SimError::Io(e.to_string())
}

pub fn write_monitor_csv(path: &Path, series: &MonitorSeries) -> Result<(), SimError> {
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    for s in &series.samples {
        w.serialize(s).map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn write_snapshot_csv(path: &Path, grid: &Grid1D, state: &FieldState) -> Result<(), SimError> {
    #[derive(Serialize)]
    struct Row {
        x: f64,
        u: f64,
        v: f64,
    }
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    for (i, x) in grid.nodes().into_iter().enumerate() {
        w.serialize(Row { x, u: state.u[i], v: state.v[i] }).map_err(io)?;
    }
    w.flush().map_err(io)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub config: SimConfig,
    pub steps: usize,
    pub final_time: f64,
    pub l2_error: Option<f64>,
    pub max_drift: BTreeMap<String, f64>,
    pub blowup_time: Option<f64>,
}

impl RunSummary {
    pub fn new(cfg: &SimConfig, out: &RunOutcome) -> Self {
        RunSummary {
            config: cfg.clone(),
            steps: out.steps,
            final_time: out.state.time,
            l2_error: out.l2_error,
            max_drift: out.monitors.iter().map(|m| (m.label.clone(), m.max_drift())).collect(),
            blowup_time: out.blowup.map(|b| b.time),
        }
    }
}

/// Writes `monitor_<label>.csv`, `snapshot.csv` and `summary.json` into
/// `dir`, returning the written paths.
pub fn write_run(dir: &Path, cfg: &SimConfig, out: &RunOutcome) -> Result<Vec<PathBuf>, SimError> {
    fs::create_dir_all(dir).map_err(io)?;
    let mut paths = Vec::new();
    for m in &out.monitors {
        let p = dir.join(format!("monitor_{}.csv", m.label));
        write_monitor_csv(&p, m)?;
        paths.push(p);
    }
    let p = dir.join("snapshot.csv");
    write_snapshot_csv(&p, &cfg.grid, &out.state)?;
    paths.push(p);
    let p = dir.join("summary.json");
    let json = serde_json::to_string_pretty(&RunSummary::new(cfg, out)).map_err(io)?;
    fs::write(&p, json).map_err(io)?;
    paths.push(p);
    Ok(paths)
}
