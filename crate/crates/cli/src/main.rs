//! `cubeset`: enumerate hom-sets, factor maps, build decomposition cubes, run
//! the invariant sweeps and emit or verify open-box-filling certificates.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 bad input.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use cubeset::anodyne::{certify, verify_json, CertifyRequest, SubcomplexSpec};
use cubeset::checks::{self, Bounds, SUITES};
use cubeset::cube_theory::{active_face_factor, enumerate_hom, CubeMap, Theory};
use cubeset::decomposition::{standard_decomposition, stats, Flavor};

#[derive(Parser)]
#[command(name = "cubeset", version, about = "Cube categories, cubical sets and open-box filling certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the maps ◻^m → ◻^n of a theory.
    Hom {
        #[arg(long)]
        theory: Theory,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Print the number of maps (the default).
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every map, one JSON object per line, in canonical order.
        #[arg(long)]
        list: bool,
    },
    /// Factor a map as a face composite after an active map.
    Factor {
        /// Map JSON file; stdin when absent or `-`.
        file: Option<PathBuf>,
    },
    /// Build the standard decomposition cube N_k of a map.
    Ndecomp {
        /// Map JSON file; stdin when absent or `-`.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value = "meet")]
        flavor: Flavor,
    },
    /// Run an invariant sweep.
    Check {
        /// Suite id, or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// List the suite ids.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        theory: Option<Theory>,
        #[arg(long, default_value = "meet")]
        flavor: Flavor,
    },
    /// Emit a filling certificate for an inclusion of subcomplexes of i^* ◻^n_B.
    Certify {
        /// Request JSON with the certificate's keys; overrides the flags.
        spec: Option<PathBuf>,
        #[arg(long = "A", default_value = "meet")]
        theory_a: Theory,
        #[arg(long = "B", default_value = "poset")]
        theory_b: Theory,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long = "D", default_value_t = 3)]
        truncation: usize,
        #[arg(long, default_value = "unit")]
        source: SubcomplexSpec,
        #[arg(long, default_value = "full")]
        target: SubcomplexSpec,
        #[arg(long, default_value = "meet")]
        flavor: Flavor,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate from scratch.
    Verify {
        /// Certificate JSON file; stdin when absent or `-`.
        file: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Exit(u8, String);

fn bad(msg: impl std::fmt::Display) -> Exit {
    Exit(2, msg.to_string())
}

fn read_input(file: &Option<PathBuf>) -> Result<String, Exit> {
    let mut text = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| bad(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text).map_err(bad)?;
        }
    }
    Ok(text)
}

fn read_map(file: &Option<PathBuf>) -> Result<CubeMap, Exit> {
    serde_json::from_str(&read_input(file)?).map_err(|e| bad(format!("malformed map: {e}")))
}

fn pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Factorization {
    kappa: Vec<(usize, u8)>,
    psi: CubeMap,
    base_dimension: usize,
    tail_length: usize,
}

fn run(cli: Cli) -> Result<u8, Exit> {
    match cli.command {
        Command::Hom { theory, m, n, count: _, list } => {
            let hom = enumerate_hom(theory, m, n).map_err(bad)?;
            if list {
                for f in hom.maps() {
                    println!("{}", serde_json::to_string(f).expect("maps serialize"));
                }
            } else {
                println!("{}", hom.len());
            }
            Ok(0)
        }
        Command::Factor { file } => {
            let f = read_map(&file)?;
            let (kappa, psi) = active_face_factor(&f);
            let st = stats(&f);
            let out = Factorization {
                kappa: kappa.entries().to_vec(),
                psi,
                base_dimension: st.base_dimension,
                tail_length: st.tail_length,
            };
            println!("{}", pretty(&out));
            Ok(0)
        }
        Command::Ndecomp { file, k, flavor } => {
            let f = read_map(&file)?;
            let nk = standard_decomposition(&f, k, flavor).map_err(bad)?;
            println!("{}", pretty(&nk));
            Ok(0)
        }
        Command::Check { suite, list, max_dim, max_k, theory, flavor } => {
            if list {
                for s in SUITES {
                    println!("{}\t{}", s.id, s.summary);
                }
                return Ok(0);
            }
            let suite = suite.expect("clap requires --suite without --list");
            let ids: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.id).collect() } else { vec![&suite] };
            let mut reports = Vec::new();
            for id in ids {
                let defaults = checks::default_bounds(id).map_err(bad)?;
                let bounds = Bounds {
                    max_dim: max_dim.unwrap_or(defaults.max_dim),
                    max_k: max_k.unwrap_or(defaults.max_k),
                    theory,
                    flavor,
                };
                let report = checks::run(id, &bounds).map_err(|e| Exit(1, format!("{id}: {e}")))?;
                eprintln!(
                    "{}: {} cases, {} failures",
                    report.suite, report.cases, report.failure_count
                );
                reports.push(report);
            }
            let code = u8::from(reports.iter().any(|r| !r.passed()));
            if reports.len() == 1 {
                println!("{}", pretty(&reports[0]));
            } else {
                println!("{}", pretty(&reports));
            }
            Ok(code)
        }
        Command::Certify { spec, theory_a, theory_b, n, truncation, source, target, flavor, out } => {
            let req = match spec {
                Some(p) => {
                    let text = read_input(&Some(p))?;
                    serde_json::from_str::<CertifyRequest>(&text).map_err(|e| bad(format!("malformed request: {e}")))?
                }
                None => CertifyRequest { theory_a, theory_b, n, truncation, source, target, flavor },
            };
            let c = certify(&req).map_err(|e| Exit(1, e.to_string()))?;
            if c.uncovered_top > 0 {
                eprintln!(
                    "note: {} target cubes of dimension {} need fillings above the truncation",
                    c.uncovered_top, req.truncation
                );
            }
            let text = pretty(&c.certificate);
            match out {
                Some(p) => std::fs::write(&p, text + "\n").map_err(|e| bad(format!("{}: {e}", p.display())))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { file } => {
            let report = verify_json(&read_input(&file)?);
            println!("{}", pretty(&report));
            Ok(report.outcome.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
