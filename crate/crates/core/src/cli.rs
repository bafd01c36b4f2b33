//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and renders a
//! document as text, JSON or CSV. Exit codes: 0 success, 1 domain error,
//! 2 usage or parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::caratheodory::{HerglotzAtoms, LemmaPoint, MomentTriple};
use crate::checks;
use crate::error::Error;
use crate::hankel::{
    bound_profile, functional_moment_form, functional_param_form, hankel_det, phi, sharp_bound,
    HankelSpec,
};
use crate::search::{
    golden_section_max, search, sweep_alpha, sweep_to_csv, HerglotzConfig, Method, ParamGrid,
    SweepConfig, DEFAULT_ATOMS, DEFAULT_GRID_P, DEFAULT_GRID_T, DEFAULT_GRID_YARG,
    DEFAULT_GRID_YMOD, DEFAULT_GRID_ZARG, DEFAULT_LOCAL_STEPS, DEFAULT_RESTARTS, DEFAULT_SEED,
};
use crate::series::DEFAULT_ORDER;
use crate::starlike::{
    coeffs_from_atoms, extremal_coeffs, verify_membership, Alpha, CoefficientVector,
    DEFAULT_MEMBERSHIP_RADIUS, DEFAULT_MEMBERSHIP_SAMPLES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "h2star", version, about = "Second Hankel determinant of starlike functions of order alpha")]
pub struct Cli {
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Phi,
    Lemma,
    Herglotz,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Phi => Method::Phi,
            MethodArg::Lemma => Method::Lemma,
            MethodArg::Herglotz => Method::Herglotz,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients a_1..a_N generated by Herglotz atoms.
    Coeffs {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        /// `weight:angle,...` with angles in radians.
        #[arg(long, value_parser = parse_atoms, allow_hyphen_values = true)]
        atoms: HerglotzAtoms,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Coefficients of the extremal function z (1 - z^2)^(alpha - 1).
    Extremal {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Hankel determinant H_q(n) of a coefficient list starting with a_1 = 1.
    Hankel {
        /// `a1,a2,...`; complex entries as `re:im`.
        #[arg(long, value_parser = parse_coeff_list, allow_hyphen_values = true)]
        coeffs: CoeffList,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// a_2 a_4 - a_3^2 from moments p1, p2, p3.
    Functional {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        p1: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        p2: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        p3: Complex64,
    },
    /// The parameterized form at (p, y, zeta) and its majorant.
    Param {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        y: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
    },
    /// The majorant phi(p, t).
    Phi {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// The sharp bound (1 - alpha)^2 and the maximum of the |y| = 1 profile.
    Bound {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[arg(long, default_value_t = DEFAULT_GRID_P)]
        grid_p: usize,
    },
    /// One maximization run.
    Search {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Alpha,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Searches over a range of alpha and writes a CSV table.
    Sweep {
        #[arg(long)]
        alpha_start: f64,
        #[arg(long)]
        alpha_end: f64,
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        opts: SearchOpts,
        /// Destination file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the reproduction suite; exits 0 iff every criterion passes.
    Check,
}

#[derive(Debug, Args)]
struct SearchOpts {
    #[arg(long, value_enum, default_value_t = MethodArg::Phi)]
    method: MethodArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_GRID_P)]
    grid_p: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_T)]
    grid_t: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_YMOD)]
    grid_ymod: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_YARG)]
    grid_yarg: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_ZARG)]
    grid_zarg: usize,
    /// Number of Herglotz atoms (herglotz method).
    #[arg(long, default_value_t = DEFAULT_ATOMS)]
    atoms: usize,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: usize,
    #[arg(long, default_value_t = DEFAULT_LOCAL_STEPS)]
    local_steps: usize,
    /// Starting atoms for the herglotz method, `weight:angle,...`.
    #[arg(long, value_parser = parse_atoms, allow_hyphen_values = true)]
    initial: Option<HerglotzAtoms>,
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    threads: Option<usize>,
}

impl SearchOpts {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            grid_p: self.grid_p,
            grid_t: self.grid_t,
            param: ParamGrid {
                p: self.grid_p,
                ymod: self.grid_ymod,
                yarg: self.grid_yarg,
                zarg: self.grid_zarg,
            },
            herglotz: HerglotzConfig {
                atoms: self.atoms,
                restarts: self.restarts,
                local_steps: self.local_steps,
                seed: self.seed,
                initial: self.initial.clone(),
            },
        }
    }
}

#[derive(Debug, Clone)]
struct CoeffList(Vec<Complex64>);

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

/// `re` or `re,im`.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse_real(re)?, parse_real(im)?)),
        None => Ok(Complex64::new(parse_real(s)?, 0.0)),
    }
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    Alpha::new(parse_real(s)?).map_err(|e| e.to_string())
}

fn parse_atoms(s: &str) -> Result<HerglotzAtoms, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_coeff_list(s: &str) -> Result<CoeffList, String> {
    s.split(',')
        .map(|entry| match entry.split_once(':') {
            Some((re, im)) => Ok(Complex64::new(parse_real(re)?, parse_real(im)?)),
            None => Ok(Complex64::new(parse_real(entry)?, 0.0)),
        })
        .collect::<Result<Vec<_>, String>>()
        .map(CoeffList)
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn coeffs_json(f: &CoefficientVector) -> Value {
    Value::Array(f.as_slice().iter().map(|&z| complex_json(z)).collect())
}

/// Result of a command: the document plus an optional override of what is
/// written to standard output (CSV sweeps, check reports).
struct Outcome {
    doc: Value,
    raw: Option<String>,
    exit: i32,
}

impl Outcome {
    fn doc(doc: Value) -> Self {
        Self { doc, raw: None, exit: EXIT_OK }
    }
}

fn with_threads<T>(
    threads: Option<usize>,
    f: impl FnOnce() -> crate::Result<T> + Send,
) -> crate::Result<T>
where
    T: Send,
{
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Domain(e.to_string()))?
            .install(f),
    }
}

fn execute(command: Command, format: Format) -> crate::Result<Outcome> {
    match command {
        Command::Coeffs { alpha, atoms, order } => {
            let f = coeffs_from_atoms(alpha, &atoms, order);
            let membership = verify_membership(
                &atoms,
                alpha,
                DEFAULT_MEMBERSHIP_RADIUS,
                DEFAULT_MEMBERSHIP_SAMPLES,
            )?;
            let mut doc = Map::new();
            doc.insert("alpha".into(), json!(alpha.value()));
            doc.insert("order".into(), json!(order));
            doc.insert("coefficients".into(), coeffs_json(&f));
            if f.len() >= 4 {
                let det = hankel_det(&f, HankelSpec::second())?;
                doc.insert("hankel_det".into(), complex_json(det));
                doc.insert("h2_2".into(), json!(det.norm()));
            }
            doc.insert("membership_min_margin".into(), json!(membership.min_margin));
            doc.insert("membership_ok".into(), json!(membership.ok));
            Ok(Outcome::doc(Value::Object(doc)))
        }
        Command::Extremal { alpha, order } => {
            let f = extremal_coeffs(alpha, order)?;
            let det = hankel_det(&f, HankelSpec::second())?;
            let re = |n: usize| f.get(n).map(|z| z.re).unwrap_or_default();
            Ok(Outcome::doc(json!({
                "alpha": alpha.value(),
                "order": order,
                "coefficients": coeffs_json(&f),
                "a2": re(2),
                "a3": re(3),
                "a4": re(4),
                "hankel_det": complex_json(det),
                "h2_2": det.norm(),
            })))
        }
        Command::Hankel { coeffs, q, n } => {
            let f = CoefficientVector::new(coeffs.0)?;
            let det = hankel_det(&f, HankelSpec::new(q, n)?)?;
            Ok(Outcome::doc(json!({
                "q": q,
                "n": n,
                "determinant": complex_json(det),
                "abs_determinant": det.norm(),
            })))
        }
        Command::Functional { alpha, p1, p2, p3 } => {
            let lam = functional_moment_form(alpha, &MomentTriple::new(p1, p2, p3));
            Ok(Outcome::doc(json!({
                "alpha": alpha.value(),
                "lambda": complex_json(lam),
                "abs_lambda": lam.norm(),
            })))
        }
        Command::Param { alpha, p, y, zeta } => {
            let pt = LemmaPoint::new(p, y, zeta)?;
            let psi = functional_param_form(alpha, &pt);
            let majorant = phi(alpha, p, y.norm().min(1.0))?;
            Ok(Outcome::doc(json!({
                "alpha": alpha.value(),
                "psi": complex_json(psi),
                "abs_psi": psi.norm(),
                "phi": majorant,
            })))
        }
        Command::Phi { alpha, p, t } => Ok(Outcome::doc(json!({
            "alpha": alpha.value(),
            "p": p,
            "t": t,
            "phi": phi(alpha, p, t)?,
        }))),
        Command::Bound { alpha, grid_p } => {
            if grid_p < 2 {
                return Err(Error::Domain(format!("grid_p = {grid_p} must be at least 2")));
            }
            let profile = |p: f64| bound_profile(alpha, p).unwrap_or(f64::NEG_INFINITY);
            let (mut best_p, mut best) = (0.0, profile(0.0));
            for i in 1..grid_p {
                let p = 2.0 * i as f64 / (grid_p - 1) as f64;
                let v = profile(p);
                if v > best {
                    (best_p, best) = (p, v);
                }
            }
            let step = 2.0 / (grid_p - 1) as f64;
            let (gp, gv, _) = golden_section_max(
                profile,
                (best_p - step).max(0.0),
                (best_p + step).min(2.0),
                1e-12,
                200,
            );
            if gv > best {
                (best_p, best) = (gp, gv);
            }
            Ok(Outcome::doc(json!({
                "alpha": alpha.value(),
                "sharp_bound": sharp_bound(alpha),
                "profile_max": best,
                "profile_argmax_p": best_p,
            })))
        }
        Command::Search { alpha, opts } => {
            let config = opts.config();
            let method = opts.method.into();
            let out = with_threads(opts.threads, || search(alpha, method, &config))?;
            let mut doc = serde_json::to_value(&out).expect("outcome serializes");
            if let Value::Object(map) = &mut doc {
                map.insert("sharp_bound".into(), json!(sharp_bound(alpha)));
            }
            Ok(Outcome::doc(doc))
        }
        Command::Sweep { alpha_start, alpha_end, steps, opts, out } => {
            let config = opts.config();
            let method = opts.method.into();
            let rows = with_threads(opts.threads, || {
                sweep_alpha(alpha_start, alpha_end, steps, method, &config)
            })?;
            let csv = sweep_to_csv(&rows);
            let max_gap = rows.iter().map(|r| r.abs_gap).fold(0.0, f64::max);
            let doc = json!({
                "method": method.to_string(),
                "seed": opts.seed,
                "rows": rows,
                "max_abs_gap": max_gap,
            });
            let raw = match (&out, format) {
                (_, Format::Json) => None,
                (Some(path), _) => Some(format!(
                    "wrote {} rows to {}\nmax_abs_gap: {}\n",
                    rows.len(),
                    path.display(),
                    max_gap
                )),
                (None, _) => Some(csv.clone()),
            };
            if let Some(path) = &out {
                std::fs::write(path, &csv).map_err(|e| {
                    Error::Domain(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(Outcome { doc, raw, exit: EXIT_OK })
        }
        Command::Check => {
            let results = checks::run_all()?;
            let all = results.iter().all(|r| r.passed);
            let raw = match format {
                Format::Json => None,
                _ => Some(results.iter().map(|r| r.line() + "\n").collect::<String>()),
            };
            Ok(Outcome {
                doc: json!({ "passed": all, "criteria": results }),
                raw,
                exit: if all { EXIT_OK } else { EXIT_DOMAIN },
            })
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => match doc {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}: {}\n", scalar_text(v)))
                .collect(),
            other => format!("{}\n", scalar_text(other)),
        },
        Format::Csv => match doc {
            Value::Object(map) => {
                let cell = |v: &Value| {
                    let s = scalar_text(v);
                    if s.contains([',', '"', '\n']) {
                        format!("\"{}\"", s.replace('"', "\"\""))
                    } else {
                        s
                    }
                };
                let header: Vec<&str> = map.keys().map(String::as_str).collect();
                let row: Vec<String> = map.values().map(cell).collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
            other => format!("{}\n", scalar_text(other)),
        },
    }
}

/// Runs the CLI on `args` (including the program name), writing the
/// document to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty() && !l.starts_with("Usage:"))
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };
    let format = if cli.json {
        Format::Json
    } else {
        cli.format.unwrap_or(Format::Text)
    };
    match execute(cli.command, format) {
        Ok(outcome) => {
            let text = outcome.raw.unwrap_or_else(|| render(&outcome.doc, format));
            let _ = stdout.write_all(text.as_bytes());
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
