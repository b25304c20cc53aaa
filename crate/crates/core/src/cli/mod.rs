//! Pipelines behind the `fraccoop` subcommands: reproduce the reference
//! systems, analyze a field file, fit an envelope, simulate.
//!
//! Each pipeline returns a [`Report`] whose lines are what the binary prints;
//! files are written into the output directory as a side effect.

pub mod svg;

use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::attractivity::{
    boundedness_check, default_tolerance, envelope_check, order_check, positivity_check,
    rate_summary, AttractivityError, EnvelopeParams,
};
use crate::field::{
    analyze, find_decay_direction, fmt_vec, parse_field, AnalyzeOptions, FieldError, VectorField,
    WeightVector, DEFAULT_SEED,
};
use crate::kolmogorov::{
    assemble, find_equilibrium, rate_check_trajectory, Equilibrium, KolmogorovError,
    EQUILIBRIUM_TOL, MIN_RATE_HORIZON,
};
use crate::report::Verdict;
use crate::solver::{integrate, write_csv, MultiOrder, SolveConfig, SolverError, Trajectory};
use crate::systems::{example, ReferenceSystem, SystemKind};
use svg::{Panel, Series};

pub const DEFAULT_T_FINAL: f64 = 50.0;
pub const DEFAULT_STEP: f64 = 1e-3;
/// Environment variable overriding the sampling seed.
pub const SEED_VAR: &str = "FRACCOOP_SEED";
/// Homogeneity residual below which a field counts as homogeneous.
pub const DEGREE_TOL: f64 = 1e-8;
/// Points kept per plotted curve.
const PLOT_POINTS: usize = 1500;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerdictFailure = 1,
    InputError = 2,
    Infeasible = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Input(_) => Status::InputError,
            CliError::Infeasible(_) => Status::Infeasible,
            CliError::Runtime(_) => Status::VerdictFailure,
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BlowUp { .. } => CliError::Runtime(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<AttractivityError> for CliError {
    fn from(e: AttractivityError) -> Self {
        match e {
            AttractivityError::Infeasible { .. } | AttractivityError::Premise(_) => {
                CliError::Infeasible(e.to_string())
            }
            AttractivityError::Solver(s) => s.into(),
            AttractivityError::Field(f) => f.into(),
            AttractivityError::SpecialFn(_) => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<KolmogorovError> for CliError {
    fn from(e: KolmogorovError) -> Self {
        match e {
            KolmogorovError::Solver(s) => s.into(),
            KolmogorovError::Hypothesis(_) | KolmogorovError::NonPositiveRate { .. } => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

/// Seed from `FRACCOOP_SEED`, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().unwrap_or_else(|_| {
            log::warn!("ignoring unparsable {SEED_VAR}={s:?}");
            DEFAULT_SEED
        }),
        Err(_) => DEFAULT_SEED,
    }
}

/// Printed lines plus the verdicts among them.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub verdicts: Vec<Verdict>,
    /// Set when a hypothesis failure should count as a failure.
    pub forced_failure: bool,
}

impl Report {
    fn info(&mut self, line: impl Into<String>) {
        let line = line.into();
        self.lines.extend(line.lines().map(str::to_string));
    }

    fn verdict(&mut self, v: Verdict) {
        self.lines.push(v.to_string());
        self.verdicts.push(v);
    }

    pub fn all_passed(&self) -> bool {
        !self.forced_failure && self.verdicts.iter().all(|v| v.passed)
    }

    pub fn status(&self) -> Status {
        if self.all_passed() {
            Status::Success
        } else {
            Status::VerdictFailure
        }
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

/// Reads `a,b,c` style lists.
pub fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("not a number: {x:?}")))
        })
        .collect()
}

pub fn load_field(path: &Path) -> Result<VectorField, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let spec = parse_field(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(spec.to_field())
}

fn prepare_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))
}

fn write_file(path: PathBuf, contents: &str) -> Result<(), CliError> {
    fs::write(&path, contents).map_err(|e| io_error(&path, e))
}

fn write_trajectory(dir: &Path, traj: &Trajectory) -> Result<(), CliError> {
    let path = dir.join("trajectory.csv");
    let file = fs::File::create(&path).map_err(|e| io_error(&path, e))?;
    write_csv(traj, BufWriter::new(file)).map_err(|e| io_error(&path, e))
}

fn component_series(traj: &Trajectory, i: usize, color: usize) -> Series {
    let pts: Vec<(f64, f64)> = traj.rows().enumerate().map(|(n, r)| (traj.time(n), r[i])).collect();
    Series::solid(format!("w{}", i + 1), color, svg::thin(&pts, PLOT_POINTS))
}

fn envelope_series(
    traj: &Trajectory,
    env: &EnvelopeParams,
    i: usize,
    color: usize,
) -> Result<Series, CliError> {
    let times = svg::thin(&traj.times(), PLOT_POINTS);
    let pts = times
        .into_iter()
        .map(|t| Ok((t, env.bound(i, t)?)))
        .collect::<Result<Vec<_>, AttractivityError>>()?;
    Ok(Series::dashed(format!("C{} E(-eta t^beta)", i + 1), color, pts))
}

/// Time series per component (with dashed envelopes when given), plus the
/// phase portrait for planar systems. Three-dimensional systems get one
/// panel per component.
fn orbit_svg(traj: &Trajectory, env: Option<&EnvelopeParams>, title: &str) -> Result<String, CliError> {
    let d = traj.dim();
    let mut panels = Vec::new();
    let envelope = |i: usize| -> Result<Option<Series>, CliError> {
        env.filter(|e| !e.is_zero()).map(|e| envelope_series(traj, e, i, i)).transpose()
    };
    if d == 3 {
        for i in 0..3 {
            let mut series = vec![component_series(traj, i, i)];
            series.extend(envelope(i)?);
            panels.push(Panel {
                title: format!("{title}: w{}", i + 1),
                x_label: "t".into(),
                y_label: format!("w{}", i + 1),
                series,
                log_log: false,
            });
        }
    } else {
        let mut series = Vec::new();
        for i in 0..d {
            series.push(component_series(traj, i, i));
            series.extend(envelope(i)?);
        }
        panels.push(Panel {
            title: title.into(),
            x_label: "t".into(),
            y_label: "w".into(),
            series,
            log_log: false,
        });
        if d == 2 {
            let pts: Vec<(f64, f64)> = traj.rows().map(|r| (r[0], r[1])).collect();
            panels.push(Panel {
                title: "phase portrait".into(),
                x_label: "w1".into(),
                y_label: "w2".into(),
                series: vec![Series::solid("orbit", 3, svg::thin(&pts, PLOT_POINTS))],
                log_log: false,
            });
        }
    }
    Ok(svg::render(&panels))
}

fn finish(dir: &Path, report: &Report, traj: &Trajectory, svg_name: &str, svg_text: String) -> Result<(), CliError> {
    write_trajectory(dir, traj)?;
    write_file(dir.join("verdicts.txt"), &report.text())?;
    write_file(dir.join(svg_name), &svg_text)
}

fn attractive_checks(
    sys: &ReferenceSystem,
    v: &WeightVector,
    degree: f64,
    cfg: &SolveConfig,
    report: &mut Report,
) -> Result<(Trajectory, EnvelopeParams), CliError> {
    // square roots in the fields need nonnegative arguments under undershoot
    let field = sys.field.clamped_to_orthant();
    let traj = integrate(&field, &sys.orders, &sys.omega, cfg)?;
    report.verdict(positivity_check(&traj));
    report.verdict(boundedness_check(&traj, v));
    let env = EnvelopeParams::for_initial(&sys.field, v, &sys.orders, degree, &sys.omega)?;
    report.info(env.to_string());
    report.verdict(envelope_check(&traj, &env));
    let half: Vec<f64> = sys.omega.iter().map(|x| 0.5 * x).collect();
    let lower = integrate(&field, &sys.orders, &half, cfg)?;
    report.verdict(order_check(&lower, &traj, default_tolerance(cfg.step)));
    report.info(rate_summary(&traj, env.beta, (cfg.t_final / 5.0).min(10.0)).to_string());
    Ok((traj, env))
}

fn kolmogorov_checks(
    sys: &ReferenceSystem,
    rates: &[f64],
    interaction: &VectorField,
    guess: &[f64],
    expected: &[f64],
    cfg: &SolveConfig,
    report: &mut Report,
) -> Result<(Trajectory, Equilibrium), CliError> {
    let kol = assemble(rates.to_vec(), interaction.clone())?;
    let eq = find_equilibrium(&kol, guess)?;
    report.info(eq.to_string());
    let offset = eq
        .point
        .iter()
        .zip(expected)
        .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));
    report.verdict(Verdict::from_margin(
        "equilibrium",
        0.0,
        -eq.residual.max(offset),
        EQUILIBRIUM_TOL,
        format!("b + f vanishes at {}", fmt_vec(expected)),
    ));
    let traj = integrate(kol.assembled(), &sys.orders, &sys.omega, cfg)?;
    report.verdict(positivity_check(&traj));

    let err = |n: usize| {
        traj.state(n)
            .iter()
            .zip(&eq.point)
            .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()))
    };
    let last = traj.len() - 1;
    report.verdict(Verdict::from_margin(
        "convergence",
        traj.time(last),
        err(last / 2) - err(last),
        0.0,
        "distance to the equilibrium shrinks over the second half",
    ));
    report.info(format!("INFO distance t={} e={:e}", traj.time(last), err(last)));

    // trajectories from below and above the equilibrium enclose it
    let lo: Vec<f64> = eq.point.iter().map(|x| 0.5 * x).collect();
    let hi: Vec<f64> = eq.point.iter().map(|x| x + 1.0).collect();
    let below = integrate(kol.assembled(), &sys.orders, &lo, cfg)?;
    let above = integrate(kol.assembled(), &sys.orders, &hi, cfg)?;
    let constant = Trajectory::from_rows(sys.orders.clone(), cfg.step, vec![eq.point.clone(); traj.len()])?;
    let tol = default_tolerance(cfg.step);
    let mut sandwich = order_check(&below, &constant, tol);
    let upper = order_check(&constant, &above, tol);
    if upper.worst_margin < sandwich.worst_margin {
        sandwich = upper;
    }
    sandwich.name = "sandwich".into();
    sandwich.description = "solutions from below and above stay on their side of the equilibrium".into();
    report.verdict(sandwich);

    if cfg.t_final >= MIN_RATE_HORIZON {
        let rate = rate_check_trajectory(&traj, &eq, sys.orders.min() / kol.degree())?;
        report.info(rate.to_string().lines().nth(1).unwrap_or_default().to_string());
        report.verdict(rate.verdict);
    }
    Ok((traj, eq))
}

fn error_svg(traj: &Trajectory, eq: &Equilibrium) -> String {
    let pts: Vec<(f64, f64)> = traj
        .rows()
        .enumerate()
        .skip(1)
        .map(|(n, r)| {
            let e = r.iter().zip(&eq.point).fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));
            (traj.time(n), e)
        })
        .collect();
    svg::render(&[Panel {
        title: "distance to equilibrium".into(),
        x_label: "t".into(),
        y_label: "max |w - w*|".into(),
        series: vec![Series::solid("e(t)", 0, svg::thin(&pts, PLOT_POINTS))],
        log_log: true,
    }])
}

/// Runs reference system `id` with every applicable check.
pub fn reproduce(id: u8, out: &Path, t_final: f64, step: f64) -> Result<Report, CliError> {
    let sys = example(id).ok_or_else(|| CliError::Input(format!("no reference system {id}")))?;
    let cfg = SolveConfig::new(t_final, step)?;
    prepare_dir(out)?;
    let mut report = Report::default();
    report.info(format!(
        "SYSTEM {id} {} orders={} omega={} t_final={t_final} h={step}",
        sys.title,
        fmt_vec(sys.orders.as_slice()),
        fmt_vec(&sys.omega)
    ));
    let title = format!("system {id}");
    match &sys.kind {
        SystemKind::Attractive { v, degree } => {
            let (traj, env) = attractive_checks(&sys, v, *degree, &cfg, &mut report)?;
            let svg_text = orbit_svg(&traj, Some(&env), &title)?;
            finish(out, &report, &traj, "orbit.svg", svg_text)?;
        }
        SystemKind::Kolmogorov {
            rates,
            interaction,
            guess,
            expected,
        } => {
            let (traj, eq) =
                kolmogorov_checks(&sys, rates, interaction, guess, expected, &cfg, &mut report)?;
            write_file(out.join("rate.svg"), &error_svg(&traj, &eq))?;
            let svg_text = orbit_svg(&traj, None, &title)?;
            finish(out, &report, &traj, "orbit.svg", svg_text)?;
        }
    }
    Ok(report)
}

/// Hypothesis report for a field file. With `strict`, a failed hypothesis
/// makes the report fail.
pub fn analyze_file(path: &Path, strict: bool) -> Result<Report, CliError> {
    let f = load_field(path)?;
    let opts = AnalyzeOptions {
        seed: seed_from_env(),
        ..AnalyzeOptions::default()
    };
    let hyp = analyze(&f, &opts)?;
    let mut report = Report::default();
    report.info(hyp.to_string());
    let holds = hyp.all_hold(DEGREE_TOL);
    report.info(format!("HYPOTHESES {}", if holds { "PASS" } else { "FAIL" }));
    report.forced_failure = strict && !holds;
    Ok(report)
}

fn check_dims(f: &VectorField, orders: &[f64], omega: &[f64]) -> Result<MultiOrder, CliError> {
    for (what, len) in [("orders", orders.len()), ("omega", omega.len())] {
        if len != f.dim() {
            return Err(CliError::Input(format!(
                "{what} has {len} entries, field has dimension {}",
                f.dim()
            )));
        }
    }
    Ok(MultiOrder::new(orders.to_vec())?)
}

/// Snaps a numerically estimated degree onto a nearby multiple of 1/1000.
fn snap_degree(p: f64) -> f64 {
    let snapped = (p * 1000.0).round() / 1000.0;
    if (p - snapped).abs() < 1e-6 {
        snapped
    } else {
        p
    }
}

/// Fits the decay envelope for `omega`, simulates, and overlays both.
#[allow(clippy::too_many_arguments)]
pub fn envelope_file(
    path: &Path,
    orders: &[f64],
    omega: &[f64],
    v: Option<&[f64]>,
    out: &Path,
    t_final: f64,
    step: f64,
) -> Result<Report, CliError> {
    let f = load_field(path)?;
    let orders = check_dims(&f, orders, omega)?;
    let cfg = SolveConfig::new(t_final, step)?;
    let seed = seed_from_env();
    let h = crate::field::estimate_homogeneity_degree(&f, AnalyzeOptions::default().probes, seed)
        .map_err(|e| CliError::Infeasible(e.to_string()))?;
    if h.residual > DEGREE_TOL {
        return Err(CliError::Infeasible(format!(
            "field is not homogeneous (residual {:e})",
            h.residual
        )));
    }
    let p = snap_degree(h.degree);
    let v = match v {
        Some(v) => WeightVector::new(v.to_vec())?,
        None => find_decay_direction(&f, AnalyzeOptions::default().budget, seed)
            .ok_or_else(|| CliError::Infeasible("no v with f(v) < 0 found".into()))?
            .v,
    };
    if v.dim() != f.dim() {
        return Err(CliError::Input("v and field dimensions differ".into()));
    }
    prepare_dir(out)?;
    let env = EnvelopeParams::for_initial(&f, &v, &orders, p, omega)?;
    let mut report = Report::default();
    report.info(format!("DEGREE p={p} v={}", fmt_vec(v.as_slice())));
    report.info(env.to_string());
    let traj = integrate(&f.clamped_to_orthant(), &orders, omega, &cfg)?;
    report.verdict(envelope_check(&traj, &env));
    let svg_text = orbit_svg(&traj, Some(&env), "envelope")?;
    finish(out, &report, &traj, "envelope.svg", svg_text)?;
    Ok(report)
}

/// Integrates a field file and writes the trajectory and its plot.
pub fn simulate_file(
    path: &Path,
    orders: &[f64],
    omega: &[f64],
    out: &Path,
    t_final: f64,
    step: f64,
) -> Result<Report, CliError> {
    let f = load_field(path)?;
    let orders = check_dims(&f, orders, omega)?;
    let cfg = SolveConfig::new(t_final, step)?;
    prepare_dir(out)?;
    let traj = integrate(&f.clamped_to_orthant(), &orders, omega, &cfg)?;
    let mut report = Report::default();
    report.info(format!(
        "FINAL t={} w={} floor_breaches={}",
        traj.time(traj.len() - 1),
        fmt_vec(traj.final_state()),
        traj.floor_breaches
    ));
    report.verdict(positivity_check(&traj));
    let svg_text = orbit_svg(&traj, None, "trajectory")?;
    finish(out, &report, &traj, "orbit.svg", svg_text)?;
    Ok(report)
}
