//! Command-line front end.
//!
//! Every command builds an [`Emission`]: a table written as CSV (header row,
//! 17 significant digits, `\n` line endings) or as one JSON object, plus
//! summary lines for standard error. A detected violation is a result and
//! exits with status 0.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::conditional::ConditionalProbability;
use crate::config::ParameterFile;
use crate::mesons::{
    f_function_at_z, mixing_from_params, static_equality_residual, violation_scan, EqualityVariant,
    MesonParams, HBAR_MEV_S, TABLE_ROWS,
};
use crate::scan::{scan_curve, uniform_grid, ScanResult, Violation};
use crate::spin::{spin_inequality_margin, static_pipeline, Direction, PrecessionPhase, SpinCase};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bayes-realism",
    version,
    about = "Bayes-theorem tests of realism for spin pairs and neutral mesons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Static equality for the singlet with axes a, b, c in the xz-plane.
    SpinStatic(SpinStaticArgs),
    /// Time-dependent inequality for a precessing singlet over a range of ωt.
    SpinScan(SpinScanArgs),
    /// Static equalities |1 ± p/q|² = 2 for a meson scenario.
    MesonStatic(ScenarioArgs),
    /// F_N(z) on a grid of lifetimes with violation intervals.
    MesonScan(MesonScanArgs),
    /// All event sets with their F_N value at one time.
    MesonTable(MesonTableArgs),
}

#[derive(Debug, Args)]
pub struct SpinStaticArgs {
    /// Polar angle of a, degrees.
    #[arg(long, default_value_t = 90.0)]
    pub theta_a: f64,
    /// Polar angle of b, degrees.
    #[arg(long, default_value_t = 0.0)]
    pub theta_b: f64,
    /// Polar angle of c, degrees.
    #[arg(long, default_value_t = 45.0)]
    pub theta_c: f64,
}

#[derive(Debug, Args)]
pub struct SpinScanArgs {
    /// Outcome signs of S₂(t): ++, --, +- or -+.
    #[arg(long, default_value = "++", allow_hyphen_values = true)]
    pub case: String,
    /// Angle between b and a, degrees.
    #[arg(long, default_value_t = 90.0)]
    pub theta_ba: f64,
    /// Start of the ωt range, degrees.
    #[arg(long, default_value_t = -45.0, allow_negative_numbers = true)]
    pub omega_t_min: f64,
    /// End of the ωt range, degrees.
    #[arg(long, default_value_t = 45.0, allow_negative_numbers = true)]
    pub omega_t_max: f64,
    #[arg(long, default_value_t = 181)]
    pub points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    /// Named scenario from the parameter file.
    #[arg(long, default_value = "Bs")]
    pub scenario: String,
    /// TOML parameter file; the shipped scenarios are used otherwise.
    #[arg(long)]
    pub params_file: Option<PathBuf>,
    /// Override |q/p|.
    #[arg(long)]
    pub r: Option<f64>,
    /// Override arg(q/p), degrees.
    #[arg(long, allow_negative_numbers = true)]
    pub zeta: Option<f64>,
    /// Override ΔΓ = Γ_H − Γ_L, MeV.
    #[arg(long, allow_negative_numbers = true)]
    pub dgamma: Option<f64>,
    /// Override ΔM = M_H − M_L, MeV.
    #[arg(long, allow_negative_numbers = true)]
    pub dm: Option<f64>,
    /// Override the mean width Γ, MeV.
    #[arg(long)]
    pub gamma: Option<f64>,
}

impl ScenarioArgs {
    pub fn resolve(&self) -> Result<MesonParams> {
        let file = match &self.params_file {
            Some(path) => ParameterFile::load(path)?,
            None => ParameterFile::builtin(),
        };
        let mut entry = file.entry(&self.scenario)?.clone();
        if let Some(r) = self.r {
            entry.r = r;
        }
        if let Some(zeta) = self.zeta {
            entry.zeta_deg = zeta;
        }
        if let Some(dg) = self.dgamma {
            entry.delta_gamma = dg;
        }
        if let Some(dm) = self.dm {
            entry.delta_m = dm;
        }
        if let Some(g) = self.gamma {
            entry.gamma_mean = g;
        }
        entry.to_params(&self.scenario)
    }
}

#[derive(Debug, Args)]
pub struct MesonScanArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Which F_N, 1 to 8.
    #[arg(long, default_value_t = 1)]
    pub index: u8,
    /// Scan range in lifetimes, z = Γt.
    #[arg(long, default_value_t = 30.0)]
    pub zmax: f64,
    #[arg(long, default_value_t = 3001)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct MesonTableArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Time in lifetimes at which every F_N is evaluated.
    #[arg(long, default_value_t = 20.0)]
    pub z_probe: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.16e}"),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Cell::Text(s) => s.clone(),
        }
    }
}

/// Result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Emission {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub json: Value,
    /// Human-readable lines for standard error.
    pub summary: Vec<String>,
}

impl Emission {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let emission = match execute(&cli.command) {
        Ok(emission) => emission,
        Err(e) => return report_error(&e, stderr),
    };
    let text = emission.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: cannot write output: {msg}");
        return EXIT_USAGE;
    }
    for line in &emission.summary {
        let _ = writeln!(stderr, "{line}");
    }
    EXIT_OK
}

fn report_error(e: &Error, stderr: &mut dyn Write) -> i32 {
    if e.is_internal() {
        let _ = writeln!(stderr, "internal error: {e}");
        EXIT_INTERNAL
    } else {
        let _ = writeln!(stderr, "error: {e}");
        EXIT_USAGE
    }
}

pub fn execute(command: &Command) -> Result<Emission> {
    match command {
        Command::SpinStatic(a) => spin_static(a),
        Command::SpinScan(a) => spin_scan(a),
        Command::MesonStatic(a) => meson_static(a),
        Command::MesonScan(a) => meson_scan(a),
        Command::MesonTable(a) => meson_table(a),
    }
}

fn finite(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::InvalidParameter(format!("{what} must be finite")))
    }
}

fn probability(x: f64, what: &'static str) -> Result<f64> {
    ConditionalProbability::new(x)
        .map(ConditionalProbability::value)
        .map_err(|_| Error::OutOfRange { what, value: x })
}

fn intervals_json(scan: &ScanResult) -> Value {
    json!(scan
        .violation_intervals
        .iter()
        .map(|&(a, b)| [a, b])
        .collect::<Vec<_>>())
}

fn interval_summary(axis_name: &str, scan: &ScanResult) -> Vec<String> {
    if scan.violation_intervals.is_empty() {
        return vec!["no violation on the scanned range".to_string()];
    }
    let mut lines = vec![format!(
        "{} violation interval(s) in {axis_name}:",
        scan.violation_intervals.len()
    )];
    let n = scan.violation_intervals.len();
    for (i, (a, b)) in scan.violation_intervals.iter().enumerate() {
        if n > 12 && i == 5 {
            lines.push(format!("  ... {} more ...", n - 10));
        }
        if n <= 12 || i < 5 || i >= n - 5 {
            lines.push(format!("  [{a:.6}, {b:.6}]"));
        }
    }
    if let Some(onset) = scan.sustained_onset() {
        lines.push(format!(
            "violated from {axis_name} = {onset:.6} to the end of the range"
        ));
    }
    lines
}

fn params_json(p: &MesonParams) -> Value {
    json!({
        "name": p.name,
        "delta_gamma_mev": p.delta_gamma * HBAR_MEV_S,
        "delta_m_mev": p.delta_m * HBAR_MEV_S,
        "gamma_mean_mev": p.gamma_mean * HBAR_MEV_S,
        "delta_gamma_per_s": p.delta_gamma,
        "delta_m_per_s": p.delta_m,
        "gamma_mean_per_s": p.gamma_mean,
        "r": p.r,
        "zeta_deg": p.zeta.to_degrees(),
    })
}

fn spin_static(a: &SpinStaticArgs) -> Result<Emission> {
    let dir = |deg: f64, what| Direction::in_xz_plane(finite(deg, what)?.to_radians());
    let report = static_pipeline(
        dir(a.theta_a, "theta-a")?,
        dir(a.theta_b, "theta-b")?,
        dir(a.theta_c, "theta-c")?,
    )?;
    let t = &report.terms;
    let quantities = [
        (
            "w_s1_given_s3",
            probability(t.w_s1_given_s3.value(), "w(S1|S3)")?,
        ),
        (
            "w_s2_given_s3",
            probability(t.w_s2_given_s3.value(), "w(S2|S3)")?,
        ),
        (
            "w_s2_given_s1s3",
            probability(t.w_s2_given_s1s3.value(), "w(S2|S1S3)")?,
        ),
        (
            "w_s1_given_s2s3",
            probability(t.w_s1_given_s2s3.value(), "w(S1|S2S3)")?,
        ),
        ("cross_term", probability(report.cross_term, "Tr(P1 P2)")?),
        ("lhs", probability(report.lhs, "lhs")?),
        ("rhs", probability(report.rhs, "rhs")?),
        ("residual", report.residual),
        ("equality_gap", report.equality_gap),
    ];
    let mut obj = Map::new();
    obj.insert("theta_a_deg".into(), json!(a.theta_a));
    obj.insert("theta_b_deg".into(), json!(a.theta_b));
    obj.insert("theta_c_deg".into(), json!(a.theta_c));
    for (name, value) in quantities {
        obj.insert(name.into(), json!(value));
    }
    Ok(Emission {
        columns: vec!["quantity".into(), "value".into()],
        rows: quantities
            .iter()
            .map(|(n, v)| vec![Cell::Text((*n).into()), Cell::Num(*v)])
            .collect(),
        json: Value::Object(obj),
        summary: vec![format!(
            "static equality residual {:.6e} ({})",
            report.residual,
            if report.residual.abs() > 1e-12 {
                "violated"
            } else {
                "holds"
            }
        )],
    })
}

fn spin_scan(a: &SpinScanArgs) -> Result<Emission> {
    let case: SpinCase = a.case.parse()?;
    let theta_ba = finite(a.theta_ba, "theta-ba")?.to_radians();
    let axis = uniform_grid(a.omega_t_min, a.omega_t_max, a.points)?;
    let margin_at = |deg: f64| {
        let phase = PrecessionPhase::new(deg.to_radians()).expect("finite grid point");
        spin_inequality_margin(case, theta_ba, phase)
    };
    let scan = scan_curve(axis, |deg| margin_at(deg).margin, Violation::Below(0.0))?;

    let mut rows = Vec::with_capacity(scan.axis.len());
    let (mut lhs_all, mut rhs_all) = (Vec::new(), Vec::new());
    for (&deg, &margin) in scan.axis.iter().zip(&scan.values) {
        let m = margin_at(deg);
        let lhs = probability(m.lhs, "lhs")?;
        let rhs = probability(m.rhs, "rhs")?;
        rows.push(vec![
            Cell::Num(deg),
            Cell::Num(lhs),
            Cell::Num(rhs),
            Cell::Num(margin),
            Cell::Int(i64::from(margin < 0.0)),
        ]);
        lhs_all.push(lhs);
        rhs_all.push(rhs);
    }
    let json = json!({
        "command": "spin-scan",
        "axis_name": "omega_t_deg",
        "axis": scan.axis,
        "values": scan.values,
        "lhs": lhs_all,
        "rhs": rhs_all,
        "violation_intervals": intervals_json(&scan),
        "params": { "case": case.to_string(), "theta_ba_deg": a.theta_ba },
    });
    Ok(Emission {
        columns: ["omega_t_deg", "lhs", "rhs", "margin", "violated"]
            .map(String::from)
            .to_vec(),
        rows,
        json,
        summary: interval_summary("ωt (deg)", &scan),
    })
}

fn meson_static(a: &ScenarioArgs) -> Result<Emission> {
    let params = a.resolve()?;
    let mix = mixing_from_params(&params)?;
    let mut rows = Vec::new();
    let mut obj = Map::new();
    let mut summary = Vec::new();
    for (variant, label) in [
        (EqualityVariant::Plus, "plus"),
        (EqualityVariant::Minus, "minus"),
    ] {
        let residual = static_equality_residual(variant, &mix);
        let value = residual + 2.0;
        if !(value >= 0.0) {
            return Err(Error::OutOfRange {
                what: "|1 ± p/q|²",
                value,
            });
        }
        rows.push(vec![
            Cell::Text(label.into()),
            Cell::Num(value),
            Cell::Num(residual),
        ]);
        obj.insert(
            label.into(),
            json!({ "value": value, "residual": residual }),
        );
        let sign = if label == "plus" { '+' } else { '-' };
        summary.push(format!(
            "|1 {sign} p/q|² = {value:.6} (realism requires 2; residual {residual:+.6})"
        ));
    }
    obj.insert("params".into(), params_json(&params));
    Ok(Emission {
        columns: ["variant", "value", "residual"].map(String::from).to_vec(),
        rows,
        json: Value::Object(obj),
        summary,
    })
}

fn meson_scan(a: &MesonScanArgs) -> Result<Emission> {
    let params = a.scenario.resolve()?;
    let scan = violation_scan(a.index, &params, a.zmax, a.points)?;
    let mut rows = Vec::with_capacity(scan.axis.len());
    let mut ct = Vec::with_capacity(scan.axis.len());
    for (&z, &f) in scan.axis.iter().zip(&scan.values) {
        if !(f >= 0.0) {
            return Err(Error::OutOfRange {
                what: "F_N",
                value: f,
            });
        }
        let ct_mm = params.ct_mm(z);
        rows.push(vec![
            Cell::Num(z),
            Cell::Num(ct_mm),
            Cell::Num(f),
            Cell::Int(i64::from(f > 1.0)),
        ]);
        ct.push(ct_mm);
    }
    let mut params_obj = params_json(&params);
    params_obj["index"] = json!(a.index);
    let json = json!({
        "command": "meson-scan",
        "axis_name": "z",
        "axis": scan.axis,
        "ct_mm": ct,
        "values": scan.values,
        "violation_intervals": intervals_json(&scan),
        "params": params_obj,
    });
    let mut summary = vec![format!("F{} for {}:", a.index, params.name)];
    summary.extend(interval_summary("z", &scan));
    Ok(Emission {
        columns: vec![
            "z".into(),
            "ct_mm".into(),
            format!("F{}", a.index),
            "violated".into(),
        ],
        rows,
        json,
        summary,
    })
}

fn meson_table(a: &MesonTableArgs) -> Result<Emission> {
    let params = a.scenario.resolve()?;
    let z = a.z_probe;
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "z-probe must be finite and non-negative, got {z}"
        )));
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut summary = vec![format!("{} at z = {z}:", params.name)];
    for row in TABLE_ROWS {
        let f = f_function_at_z(row.f_index, z, &params)?;
        if !(f >= 0.0) || !f.is_finite() {
            return Err(Error::OutOfRange {
                what: "F_N",
                value: f,
            });
        }
        let violated = f > 1.0;
        let expected = if row.violates_for.is_empty() {
            "never".to_string()
        } else {
            row.violates_for.join(" ")
        };
        let set = format!(
            "{}/{}",
            row.event.particle2.ascii(),
            row.event.particle1.ascii()
        );
        rows.push(vec![
            Cell::Text(set.clone()),
            Cell::Int(i64::from(row.f_index)),
            Cell::Num(f),
            Cell::Int(i64::from(violated)),
            Cell::Text(expected.clone()),
        ]);
        entries.push(json!({
            "set": set,
            "f_index": row.f_index,
            "value": f,
            "violated": violated,
            "violates_for": row.violates_for,
        }));
        let mut line = String::new();
        let _ = write!(
            line,
            "  {:<12} F{} = {f:.6}",
            row.event.to_string(),
            row.f_index
        );
        if violated {
            line.push_str("  VIOLATED");
        }
        summary.push(line);
    }
    Ok(Emission {
        columns: ["set", "f_index", "value", "violated", "violates_for"]
            .map(String::from)
            .to_vec(),
        rows,
        json: json!({
            "command": "meson-table",
            "z_probe": z,
            "rows": entries,
            "params": params_json(&params),
        }),
        summary,
    })
}
