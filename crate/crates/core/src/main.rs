//! Command-line front end: polynomial file ingestion, bound analysis, root
//! listing, gap curves, fuzz orchestration, and regeneration of the worked
//! example numbers.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use polybounds::bounds::{
    best_lower_bound, cor24_bound, cor26_bound, govil_two_radius_bound, rivlin_bound,
};
use polybounds::harness::{run_suite, sharpness_scan, GenConfig, PropertyId};
use polybounds::roots::find_roots;
use polybounds::{BoundSummary, Error, Polynomial};

const EXIT_USAGE: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_VIOLATIONS: u8 = 3;

#[derive(Parser)]
#[command(
    name = "polybounds",
    version,
    about = "Circle extrema and Rivlin-type lower bounds for complex polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct PolyInput {
    /// Path to a polynomial file: {"coefficients": [[re, im], ...]} or a
    /// bare JSON array of real coefficients, ascending.
    #[arg(long, value_name = "PATH", conflicts_with = "poly")]
    input: Option<PathBuf>,
    /// Inline comma-separated real coefficients, ascending (a_0 first).
    #[arg(long, value_name = "C0,C1,...")]
    poly: Option<String>,
}

impl PolyInput {
    fn load(&self) -> Result<Polynomial, Error> {
        match (&self.input, &self.poly) {
            (Some(path), None) => {
                let text = fs::read_to_string(path)?;
                Polynomial::from_json_str(&text)
            }
            (None, Some(inline)) => {
                let coeffs: Result<Vec<f64>, _> = inline
                    .split(',')
                    .map(|s| s.trim().parse::<f64>())
                    .collect();
                let coeffs = coeffs.map_err(|e| Error::Parse(e.to_string()))?;
                Polynomial::from_reals(&coeffs)
            }
            _ => Err(Error::Parse(
                "provide exactly one of --input or --poly".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the full bound catalog at radius r and report the best bound
    /// and the gap against the measured maximum.
    Analyze {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(short, long)]
        r: f64,
        /// Outer comparison radius R (defaults to 1).
        #[arg(short = 'R', long = "big-r", value_name = "R")]
        big_r: Option<f64>,
        /// Zero-free disk radius K (defaults to the largest certified one).
        #[arg(short = 'K', long)]
        k: Option<f64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Locate all zeros and report the zero-free disk they certify.
    Roots {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the seeded property suite and write a replayable report.
    Fuzz {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(short = 'K', long, default_value_t = 1.0)]
        k: f64,
        /// Force lacunary structure with this gap index.
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long, default_value_t = 2)]
        degree_min: usize,
        #[arg(long, default_value_t = 10)]
        degree_max: usize,
        #[arg(long, default_value_t = 10.0)]
        root_modulus_max: f64,
        /// Pair conjugate roots so generated coefficients are real.
        #[arg(long)]
        conjugate_pairs: bool,
        /// Where to write the JSON report.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Emit (r, measured, per-bound value) rows over a radius grid.
    Curve {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, default_value_t = 0.05)]
        r_from: f64,
        #[arg(long, default_value_t = 0.95)]
        r_to: f64,
        #[arg(long, default_value_t = 19)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Recompute the four worked-example quantities for z^3 + 64 and show
    /// the differences against the published values.
    ReproducePaper {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NumericFailure { .. } | Error::GeneratorExhausted { .. } => EXIT_NUMERIC,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

/// Render with 9 significant digits.
fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => {
            let mut f = fs::File::create(p)?;
            f.write_all(content.as_bytes())?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze {
            poly,
            r,
            big_r,
            k,
            format,
            output,
        } => {
            let p = poly.load()?;
            let summary = best_lower_bound(&p, r, big_r, k)?;
            let rendered = render_summary(&summary, format);
            write_out(&output, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { poly, format } => {
            let p = poly.load()?;
            let roots = find_roots(&p)?;
            let min_modulus = roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
            let rendered = render_roots(&p, &roots, min_modulus, format);
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Fuzz {
            seed,
            trials,
            k,
            mu,
            degree_min,
            degree_max,
            root_modulus_max,
            conjugate_pairs,
            report,
        } => {
            let config = GenConfig {
                seed,
                trials,
                degree_min,
                degree_max,
                k,
                mu,
                root_modulus_max,
                conjugate_pairs,
                alpha_beta: None,
            };
            config.validate()?;
            let result = run_suite(&config, &PropertyId::ALL)?;
            if let Some(path) = &report {
                fs::write(path, serde_json::to_string_pretty(&result).unwrap())?;
            }
            println!(
                "checked {} properties over {} trials (seed {})",
                result.checked.len(),
                config.trials,
                config.seed
            );
            for (name, count) in &result.checked {
                println!("  {name}: {count} checks");
            }
            if !result.statement_findings.is_empty() {
                println!(
                    "statement-variant findings: {} (reported, not failures)",
                    result.statement_findings.len()
                );
            }
            if !result.incidents.is_empty() {
                println!("numeric incidents: {}", result.incidents.len());
            }
            if result.success() {
                println!("no violations");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("VIOLATIONS: {}", result.violations.len());
                for v in result.violations.iter().take(10) {
                    println!(
                        "  {} trial {}: bound {} > measured {} (deficit {:e})",
                        v.property.name(),
                        v.trial,
                        sig9(v.bound),
                        sig9(v.measured),
                        v.deficit
                    );
                }
                Ok(ExitCode::from(EXIT_VIOLATIONS))
            }
        }
        Command::Curve {
            poly,
            r_from,
            r_to,
            steps,
            format,
            output,
        } => {
            let p = poly.load()?;
            if !(r_from > 0.0 && r_from < r_to && r_to < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "need 0 < r_from < r_to < 1, got {r_from}..{r_to}"
                )));
            }
            if steps < 2 {
                return Err(Error::InvalidParameter(
                    "need at least 2 steps".into(),
                ));
            }
            let grid: Vec<f64> = (0..steps)
                .map(|i| r_from + (r_to - r_from) * i as f64 / (steps - 1) as f64)
                .collect();
            let rows = sharpness_scan(&p, &grid)?;
            let rendered = render_curve(&rows, format);
            write_out(&output, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproducePaper { format } => {
            print!("{}", reproduce_paper(format)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_summary(summary: &BoundSummary, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(summary).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("id,applicable,value,reasons\n");
            for b in &summary.bounds {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    b.bound_id.name(),
                    b.applicable,
                    b.value.map(|v| v.to_string()).unwrap_or_default(),
                    b.reasons.join("; ")
                ));
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            if let Some(m) = &summary.measured {
                out.push_str(&format!(
                    "measured M(p, {}) = {} (attained at angle {})\n\n",
                    m.radius,
                    sig9(m.value),
                    sig9(m.angle)
                ));
            }
            out.push_str(&format!("{:<18} {:>16}  notes\n", "bound", "value"));
            for b in &summary.bounds {
                match b.value {
                    Some(v) => {
                        let mut notes = String::new();
                        if let (Some(val), Some(m)) = (b.value, b.params.max_ref) {
                            if m > 0.0 {
                                notes = format!("factor {}", sig9(val / m));
                            }
                        }
                        if summary.best == Some(b.bound_id) {
                            notes.push_str("  <- best");
                        }
                        out.push_str(&format!(
                            "{:<18} {:>16}  {}\n",
                            b.bound_id.name(),
                            sig9(v),
                            notes
                        ));
                    }
                    None => {
                        out.push_str(&format!(
                            "{:<18} {:>16}  {}\n",
                            b.bound_id.name(),
                            "n/a",
                            b.reasons.join("; ")
                        ));
                    }
                }
            }
            if let (Some(best), Some(gap)) = (summary.best, summary.gap) {
                out.push_str(&format!(
                    "\nbest: {} (gap to measured: {})\n",
                    best.name(),
                    sig9(gap)
                ));
            }
            out
        }
    }
}

fn render_roots(p: &Polynomial, roots: &[Complex64], min_modulus: f64, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "degree": p.degree(),
                "roots": roots.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                "min_root_modulus": min_modulus,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        Format::Csv => {
            let mut out = String::from("re,im,modulus\n");
            for z in roots {
                out.push_str(&format!("{},{},{}\n", z.re, z.im, z.norm()));
            }
            out
        }
        Format::Table => {
            let mut out = format!("{} roots:\n", roots.len());
            for z in roots {
                out.push_str(&format!(
                    "  {} + {}i  (modulus {})\n",
                    sig9(z.re),
                    sig9(z.im),
                    sig9(z.norm())
                ));
            }
            out.push_str(&format!(
                "zero-free in |z| < {} (open disk)\n",
                sig9(min_modulus)
            ));
            out
        }
    }
}

fn render_curve(
    rows: &[(f64, f64, Vec<polybounds::BoundResult>)],
    format: Format,
) -> String {
    let bound_names: Vec<&str> = rows
        .first()
        .map(|(_, _, bs)| bs.iter().map(|b| b.bound_id.name()).collect())
        .unwrap_or_default();
    match format {
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|(r, measured, bs)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("r".into(), (*r).into());
                    obj.insert("measured".into(), (*measured).into());
                    for b in bs {
                        if let Some(v) = b.value {
                            obj.insert(b.bound_id.name().into(), v.into());
                        }
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&docs).unwrap())
        }
        Format::Table | Format::Csv => {
            let mut out = String::from("r,measured");
            for name in &bound_names {
                out.push(',');
                out.push_str(name);
            }
            out.push('\n');
            for (r, measured, bs) in rows {
                out.push_str(&format!("{r},{measured}"));
                for b in bs {
                    out.push(',');
                    if let Some(v) = b.value {
                        out.push_str(&v.to_string());
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}

/// The published example quantities for p(z) = z^3 + 64, regenerated.
fn reproduce_paper(format: Format) -> Result<String, Error> {
    let p = Polynomial::from_reals(&[64.0, 0.0, 0.0, 1.0])?;
    let (r, big_r) = (0.1, 0.5);

    let govil = govil_two_radius_bound(&p, r, big_r)?;
    let factor_a = govil.value.unwrap() / govil.params.max_ref.unwrap();
    let cor24 = cor24_bound(&p, r, big_r)?;
    let improvement_a = cor24.value.unwrap() - govil.value.unwrap();

    let rivlin = rivlin_bound(&p, r)?;
    let factor_b = rivlin.value.unwrap() / rivlin.params.max_ref.unwrap();
    let cor26 = cor26_bound(&p, r)?;
    let improvement_b = cor26.value.unwrap() - rivlin.value.unwrap();

    let rows = [
        ("example_a_factor", 0.3943704, factor_a),
        ("example_a_improvement", 23.117715, improvement_a),
        ("example_b_factor", 0.166375, factor_b),
        ("example_b_improvement", 18.79891, improvement_b),
    ];

    Ok(match format {
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, published, computed)| {
                    serde_json::json!({
                        "quantity": name,
                        "published": published,
                        "computed": computed,
                        "abs_diff": (computed - published).abs(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&docs).unwrap())
        }
        Format::Csv => {
            let mut out = String::from("quantity,published,computed,abs_diff\n");
            for (name, published, computed) in rows {
                out.push_str(&format!(
                    "{name},{published},{computed},{}\n",
                    (computed - published).abs()
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:<24} {:>12} {:>15} {:>12}\n",
                "quantity", "published", "computed", "abs diff"
            );
            for (name, published, computed) in rows {
                out.push_str(&format!(
                    "{:<24} {:>12} {:>15} {:>12.3e}\n",
                    name,
                    published,
                    sig9(computed),
                    (computed - published).abs()
                ));
            }
            out
        }
    })
}
