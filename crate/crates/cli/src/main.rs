//! `dlw`: command-line front end for the verification suites and the
//! simulator.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dispersive_lab::analytic::Binding;
use dispersive_lab::model;
use dispersive_lab::report::{self, combo_coords, Entry, Verdict, VerificationReport};
use dispersive_lab::sim::{self, SimConfig};
use dispersive_lab::waves::{self, traveling};

#[derive(Parser)]
#[command(name = "dlw", version, about = "Dispersive long-wave verification lab")]
struct Cli {
    /// Write the machine-readable result to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Omit timestamps so repeated runs are byte-identical.
    #[arg(long, global = true)]
    reproducible: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lie point symmetries and the optimal system.
    Symmetry {
        #[command(subcommand)]
        cmd: SymmetryCmd,
    },
    /// Adjoint symmetries, the action table and induced brackets.
    Adjoint {
        #[command(subcommand)]
        cmd: AdjointCmd,
    },
    /// Conservation laws and the Hamiltonian structure.
    Conslaw {
        #[command(subcommand)]
        cmd: ConslawCmd,
    },
    /// Closed-form solutions and traveling-wave first integrals.
    Waves {
        #[command(subcommand)]
        cmd: WavesCmd,
    },
    /// Finite-difference simulation.
    Sim {
        #[command(subcommand)]
        cmd: SimCmd,
    },
    /// Full verification report.
    Report {
        #[command(subcommand)]
        cmd: ReportCmd,
    },
}

#[derive(Subcommand)]
enum SymmetryCmd {
    /// Determining-equation residuals of X1..X4.
    Verify,
    /// Commutator tables of the fields and their characteristics.
    Brackets,
    /// Reduce random subalgebra vectors to optimal-system classes.
    Optimal {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AdjointCmd {
    /// Adjoint-symmetry residuals, multipliers and R_P operators.
    Verify,
    /// Action of P1..P4 on Q1..Q6.
    Table,
    /// The bracket `Q_fix[Q_a, Q_b]`, 1-based indices.
    Bracket {
        #[arg(long)]
        fix: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand)]
enum ConslawCmd {
    /// Check a family of conservation laws.
    Verify {
        #[arg(long, value_parser = ["direct", "noether", "ibragimov", "all"], default_value = "all")]
        set: String,
    },
    /// Hamiltonian gradient, flow, skew-adjointness and presymplectic pairs.
    Hamiltonian,
}

#[derive(Subcommand)]
enum WavesCmd {
    /// Residual of a closed-form family, optionally over a parameter grid
    /// such as `mu=0.5,1;C1=1,2`.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 17)]
        seed: u64,
    },
    /// First integrals of the traveling-wave system and their numeric drift
    /// along the kink.
    FirstIntegrals {
        #[arg(long)]
        mu: f64,
        /// Write the integrated kink profile `(xi, U, V)` here.
        #[arg(long, value_name = "CSV")]
        profile: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SimCmd {
    /// Integrate a configuration file and write series, snapshot and summary.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "sim_out")]
        out: PathBuf,
    },
    /// Grid-refinement study against a closed form.
    Converge(ConvergeArgs),
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, default_value = "eq93")]
    family: String,
    #[arg(long, value_delimiter = ',', default_values_t = [128usize, 256, 512])]
    n: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    #[arg(long, default_value_t = 1.0)]
    t_end: f64,
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Every suite.
    All,
    /// A single suite.
    Suite { name: String },
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Checks ran and something failed.
    Checks,
    /// Bad input.
    Usage(String),
    Io(String),
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), Failure> {
    if let Some(p) = path {
        let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
        fs::write(p, s + "\n").map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn print_entries(entries: &[Entry]) {
    for e in entries {
        let tag = match e.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Flagged => "FLAG",
        };
        println!("{tag:4}  {:<28} {:<7} {}", e.label, e.eq, e.detail);
    }
}

fn finish(cli: &Cli, suite: &str, entries: Vec<Entry>) -> Result<(), Failure> {
    let rep = VerificationReport {
        suite: suite.to_string(),
        entries,
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: if cli.reproducible { None } else { Some(now()) },
    };
    emit(cli, &rep)
}

fn now() -> u64 {
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

fn emit(cli: &Cli, rep: &VerificationReport) -> Result<(), Failure> {
    print_entries(&rep.entries);
    println!(
        "{}: {} pass, {} flagged, {} fail",
        rep.suite,
        rep.count(Verdict::Pass),
        rep.count(Verdict::Flagged),
        rep.count(Verdict::Fail)
    );
    write_json(cli.json.as_deref(), rep)?;
    if rep.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn select(entries: Vec<Entry>, eqs: &[&str]) -> Vec<Entry> {
    entries.into_iter().filter(|e| eqs.contains(&e.eq.as_str())).collect()
}

fn symmetry(cli: &Cli, cmd: &SymmetryCmd) -> Result<(), Failure> {
    match cmd {
        SymmetryCmd::Verify => finish(cli, "symmetry verify", select(report::symmetry_suite(), &["eq8", "eq18", "eq21", "thm1"])),
        SymmetryCmd::Brackets => finish(cli, "symmetry brackets", select(report::symmetry_suite(), &["eq12", "eq14", "eq41"])),
        SymmetryCmd::Optimal { samples, seed } => {
            let vs = report::random_subalgebra_vectors(*samples, *seed);
            let hist = report::optimal_histogram(&vs);
            let mut entries = vec![match &hist {
                Some(h) => Entry {
                    label: "optimal system closure".into(),
                    eq: "thm2".into(),
                    verdict: Verdict::Pass,
                    detail: format!("{samples} vectors, seed {seed}, classes {h:?}"),
                },
                None => Entry {
                    label: "optimal system closure".into(),
                    eq: "thm2".into(),
                    verdict: Verdict::Fail,
                    detail: "a reduction did not replay".into(),
                },
            }];
            entries.extend(select(report::symmetry_suite(), &["thm2"]).into_iter().filter(|e| e.verdict == Verdict::Flagged));
            finish(cli, "symmetry optimal", entries)
        }
    }
}

fn adjoint(cli: &Cli, cmd: &AdjointCmd) -> Result<(), Failure> {
    match cmd {
        AdjointCmd::Verify => finish(cli, "adjoint verify", select(report::adjoint_suite(), &["eq25", "eq28", "eq42", "eq43"])),
        AdjointCmd::Table => finish(cli, "adjoint table", select(report::adjoint_suite(), &["table1", "eq37"])),
        AdjointCmd::Bracket { fix, a, b } => {
            let qs = model::adjoint_symmetries();
            let ps = model::characteristics_printed();
            let idx = |k: usize| {
                (1..=qs.len()).contains(&k).then(|| k - 1).ok_or_else(|| Failure::Usage(format!("index {k} outside 1..={}", qs.len())))
            };
            let (f, i, j) = (idx(*fix)?, idx(*a)?, idx(*b)?);
            let label = format!("Q{fix}[Q{a},Q{b}]");
            let entry = match dispersive_lab::adjoint::sq_bracket(f, &qs[i], &qs[j], &ps, &qs, &model::dlw()) {
                Ok(r) => {
                    let printed = model::sq_brackets_printed()
                        .into_iter()
                        .find(|p| (p.fix, p.a, p.b) == (f, i, j))
                        .map(|p| combo_coords(&p.value, qs.len()));
                    let coords: Vec<String> = r.coords.iter().map(ToString::to_string).collect();
                    let verdict = match &printed {
                        Some(p) if *p != r.coords => Verdict::Flagged,
                        _ => Verdict::Pass,
                    };
                    Entry {
                        label,
                        eq: "eq43".into(),
                        verdict,
                        detail: format!("coordinates in Q1..Q6: [{}]; kernel dimension {}", coords.join(", "), r.kernel.len()),
                    }
                }
                // an undefined bracket is an answer, not a failure
                Err(e) => Entry { label, eq: "eq43".into(), verdict: Verdict::Flagged, detail: e.to_string() },
            };
            finish(cli, "adjoint bracket", vec![entry])
        }
    }
}

fn conslaw(cli: &Cli, cmd: &ConslawCmd) -> Result<(), Failure> {
    let all = report::conslaw_suite();
    match cmd {
        ConslawCmd::Verify { set } => {
            let direct = ["eq29", "eq30", "eq31", "eq32", "eq33"];
            let noether = ["eq54", "eq55", "eq56", "eq57", "eq45"];
            let ibragimov = ["eq66", "eq67", "eq68", "eq69", "eq70"];
            let eqs: Vec<&str> = match set.as_str() {
                "direct" => direct.to_vec(),
                "noether" => noether.to_vec(),
                "ibragimov" => ibragimov.to_vec(),
                _ => direct.iter().chain(&noether).chain(&ibragimov).copied().collect(),
            };
            finish(cli, &format!("conslaw verify {set}"), select(all, &eqs))
        }
        ConslawCmd::Hamiltonian => finish(cli, "conslaw hamiltonian", select(all, &["eq73", "eq75"])),
    }
}

fn waves_cmd(cli: &Cli, cmd: &WavesCmd) -> Result<(), Failure> {
    let sys = model::dlw();
    match cmd {
        WavesCmd::Verify { family, grid, samples, seed } => {
            let fam = waves::family(family).map_err(|e| Failure::Usage(e.to_string()))?;
            let axes = match grid {
                Some(g) => waves::families::parse_grid(g).map_err(Failure::Usage)?,
                None => Vec::new(),
            };
            let bindings = waves::families::grid_bindings(&Binding::new(), &axes);
            let mut entries = Vec::new();
            for b in bindings {
                let label = if b.0.is_empty() {
                    family.clone()
                } else {
                    let parts: Vec<String> = b.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    format!("{family} {}", parts.join(" "))
                };
                let (verdict, detail) = match waves::verify_family(&sys, family, &b, *samples, *seed) {
                    Ok(r) => (
                        if r.max_residual < report::SCAN_TOL { Verdict::Pass } else { Verdict::Fail },
                        format!(
                            "max residual {:.3e} per equation {:?}, {} samples, {} skipped",
                            r.max_residual, r.per_equation, r.samples_used, r.samples_skipped
                        ),
                    ),
                    Err(e) => (Verdict::Fail, e.to_string()),
                };
                entries.push(Entry { label, eq: fam.id.to_string(), verdict, detail });
            }
            finish(cli, "waves verify", entries)
        }
        WavesCmd::FirstIntegrals { mu, profile } => {
            let mut entries = select(report::waves_suite(), &["eq77", "eq78", "eq79", "eq80", "eq81"]);
            let ode = waves::reduce_traveling(&sys, &traveling::mu());
            let laws = model::laws_printed();
            let sources = [
                ("C1", model::law_eq29_corrected()),
                ("C2", laws[2].swapped("eq31s")),
                ("C3", laws[3].clone()),
                ("C4", laws[4].clone()),
            ];
            let exprs = sources
                .iter()
                .map(|(_, l)| waves::first_integral(l, &ode).map(|f| f.expr))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Io(e.to_string()))?;
            let (h, steps) = (1e-3, 20_000);
            let y0 = waves::kink_state(*mu, -10.0);
            let drift = waves::integral_drift(&ode, *mu, y0, h, steps, &exprs).map_err(|e| Failure::Io(e.to_string()))?;
            for ((label, _), d) in sources.iter().zip(&drift) {
                entries.push(Entry {
                    label: format!("{label} drift mu={mu}"),
                    eq: "eq77".into(),
                    verdict: if *d < 1e-8 { Verdict::Pass } else { Verdict::Fail },
                    detail: format!("max |change| {d:.2e} over xi in [-10, 10]"),
                });
            }
            if let Some(p) = profile {
                write_profile(p, &ode, *mu, y0, h, steps)?;
            }
            finish(cli, "waves first-integrals", entries)
        }
    }
}

fn write_profile(
    path: &Path,
    ode: &traveling::TravelingWaveOde,
    mu: f64,
    y0: waves::OdeState,
    h: f64,
    steps: usize,
) -> Result<(), Failure> {
    let rhs = waves::OdeRhs::new(ode, mu).map_err(|e| Failure::Io(e.to_string()))?;
    let mut text = String::from("xi,U,V\n");
    let mut y = y0;
    for k in 0..=steps {
        if k % 10 == 0 {
            text.push_str(&format!("{},{},{}\n", -10.0 + k as f64 * h, y[0], y[3]));
        }
        y = waves::rk4_step(&rhs, &y, h);
    }
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn sim_cmd(cli: &Cli, cmd: &SimCmd) -> Result<(), Failure> {
    match cmd {
        SimCmd::Run { config, out } => {
            let text = fs::read_to_string(config).map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let cfg = SimConfig::parse(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let res = sim::integrate(&cfg).map_err(|e| Failure::Usage(e.to_string()))?;
            let paths = sim::write_run(out, &cfg, &res).map_err(|e| Failure::Io(e.to_string()))?;
            let summary = sim::RunSummary::new(&cfg, &res);
            println!("steps {} final t {:.6}", summary.steps, summary.final_time);
            if let Some(e) = summary.l2_error {
                println!("L2 error {e:.3e}");
            }
            for (label, d) in &summary.max_drift {
                println!("monitor {label}: max relative drift {d:.3e}");
            }
            for p in &paths {
                println!("wrote {}", p.display());
            }
            write_json(cli.json.as_deref(), &summary)?;
            match res.blowup {
                Some(b) => {
                    println!("blow-up at t = {} (|field| = {:.3e})", b.time, b.max);
                    Err(Failure::Checks)
                }
                None => Ok(()),
            }
        }
        SimCmd::Converge(a) => {
            let b = Binding::new().with("mu", a.mu);
            let rows = sim::convergence_study(&a.family, &b, &a.n, a.t_end).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{:>6}  {:>12}  {:>8}  {:>10}", "n", "L2 error", "order", "blow-up t");
            let show = |x: Option<f64>, p: usize| x.map_or("-".to_string(), |v| format!("{v:.p$e}"));
            for r in &rows {
                println!("{:>6}  {:>12}  {:>8}  {:>10}", r.n, show(r.l2_error, 3), r.order.map_or("-".into(), |o| format!("{o:.2}")), show(r.blowup_time, 3));
            }
            write_json(cli.json.as_deref(), &rows)?;
            if rows.iter().all(|r| r.l2_error.is_some()) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Symmetry { cmd } => symmetry(cli, cmd),
        Cmd::Adjoint { cmd } => adjoint(cli, cmd),
        Cmd::Conslaw { cmd } => conslaw(cli, cmd),
        Cmd::Waves { cmd } => waves_cmd(cli, cmd),
        Cmd::Sim { cmd } => sim_cmd(cli, cmd),
        Cmd::Report { cmd } => {
            let name = match cmd {
                ReportCmd::All => "all",
                ReportCmd::Suite { name } => name.as_str(),
            };
            let rep = report::run_suite(name, cli.reproducible).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(cli, &rep)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
