//! `sti` — strong-triangle-inequality toolkit.
//!
//! Every subcommand prints one JSON document on stdout with floats rounded to
//! 12 significant digits; diagnostics go to stderr. Exit codes: 0 success,
//! 1 usage/validation/I-O error, 2 verification failure. The STI_THREADS
//! environment variable caps the worker pool (0 or unset picks one worker per
//! core).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;
use std::process::ExitCode;
use sti_core::{criterion, integrate, montecarlo, raster, verify};

#[derive(Parser)]
#[command(
    name = "sti",
    version,
    about = "Probability that a random hyperbolic triangle satisfies a + b > c + h",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified enclosure of the success probability
    Prob {
        /// Outer γ-grid subintervals per regime
        #[arg(long, default_value_t = 2048)]
        outer: usize,
        /// Inner grid subintervals for each slice measure
        #[arg(long, default_value_t = 2048)]
        inner: usize,
    },
    /// Fast Gauss–Legendre estimate (no certification)
    Quad {
        /// Quadrature nodes per regime
        #[arg(long, default_value_t = 64)]
        nodes: usize,
    },
    /// Seeded Monte Carlo rejection-sampling estimate
    Mc {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Render a strength-field frame at fixed γ (binary PGM + JSON sidecar)
    Frame {
        /// Apex angle γ, radians unless --degrees
        #[arg(long)]
        gamma: f64,
        /// Grid resolution per axis
        #[arg(long, default_value_t = 1000)]
        points: usize,
        /// Output PGM path; the sidecar lands beside it with a .json extension
        #[arg(long)]
        out: PathBuf,
        /// Interpret --gamma in degrees
        #[arg(long)]
        degrees: bool,
    },
    /// Threshold constants Γ and B with the curve-endpoint table
    Constants,
    /// Run the identity/property suite
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random draws per check
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

/// Rounds to 12 significant decimal digits so the JSON stays stable and
/// readable; zero and non-finite values pass through.
fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - exp);
    (x * scale).round() / scale
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Prob { outer, inner } => {
            if outer < 2 || inner < 2 {
                return Err("--outer and --inner must be at least 2".into());
            }
            let p = integrate::probability(outer, inner);
            let bounds = p.bounds.expect("certified run carries bounds");
            emit(&json!({
                "estimate": sig12(p.estimate),
                "lower": sig12(bounds.lo),
                "upper": sig12(bounds.hi),
                "method": p.method.as_str(),
                "outer_resolution": p.outer_resolution,
                "inner_resolution": p.inner_resolution,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quad { nodes } => {
            if nodes < 4 {
                return Err("--nodes must be at least 4".into());
            }
            let p = integrate::probability_quadrature(nodes);
            emit(&json!({
                "estimate": sig12(p.estimate),
                "method": p.method.as_str(),
                "nodes": nodes,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Mc { samples, seed } => {
            if samples < 1 {
                return Err("--samples must be at least 1".into());
            }
            let m = montecarlo::estimate(samples, seed);
            emit(&json!({
                "p_hat": sig12(m.p_hat),
                "std_error": sig12(m.std_error),
                "conditional_p_hat": sig12(m.conditional_p_hat),
                "conditional_std_error": sig12(m.conditional_std_error),
                "obtuse_successes": m.obtuse_successes,
                "samples": m.samples,
                "seed": m.seed,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Frame {
            gamma,
            points,
            out,
            degrees,
        } => {
            let gamma = if degrees { gamma.to_radians() } else { gamma };
            if points < 16 {
                return Err("--points must be at least 16".into());
            }
            let frame = raster::render_frame(gamma, points).map_err(|e| e.to_string())?;
            raster::write_pgm(&frame, &out).map_err(|e| e.to_string())?;
            let sidecar = out.with_extension("json");
            raster::write_sidecar(&frame, &sidecar).map_err(|e| e.to_string())?;
            emit(&json!({
                "gamma": sig12(gamma),
                "points": points,
                "negative_fraction": sig12(raster::negative_fraction(&frame)),
                "pgm": out.display().to_string(),
                "sidecar": sidecar.display().to_string(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Constants => {
            let g_crit = criterion::gamma_crit();
            let b = criterion::bb_bound();
            let rows = 17;
            let table: Vec<Value> = (0..rows)
                .map(|k| {
                    let gamma = g_crit + (FRAC_PI_2 - g_crit) * k as f64 / rows as f64;
                    json!({
                        "gamma": sig12(gamma),
                        "i_gamma": sig12(criterion::i_of_gamma(gamma).expect("gamma in [Γ, π/2)")),
                        "e_gamma": sig12(criterion::e_of_gamma(gamma).expect("gamma in (0, π/2)")),
                    })
                })
                .collect();
            emit(&json!({
                "gamma_crit": sig12(g_crit),
                "gamma_crit_residual": sig12(criterion::gamma_crit_residual(g_crit)),
                "bb_bound": sig12(b),
                "table": table,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed, samples } => {
            if samples < 1 {
                return Err("--samples must be at least 1".into());
            }
            let report = verify::run_suite(seed, samples);
            for c in &report.checks {
                let status = if c.passed { "ok" } else { "FAIL" };
                eprintln!("check {}: {status} ({})", c.name, c.detail);
            }
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            emit(&json!({
                "seed": seed,
                "samples": samples,
                "passed": report.passed,
                "failed": report.failed,
                "all_passed": report.all_passed(),
                "checks": checks,
            }));
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::env::var("STI_THREADS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(threads) => sti_core::configure_threads(threads),
            Err(_) => {
                eprintln!("sti: STI_THREADS must be a non-negative integer, got {raw:?}");
                return ExitCode::from(1);
            }
        },
        Err(_) => sti_core::configure_threads(0),
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("sti: {message}");
            ExitCode::from(1)
        }
    }
}
