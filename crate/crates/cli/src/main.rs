use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lcdforge::campaigns::{self, CampaignOptions, CampaignReport, CampaignSelection};
use lcdforge::cyclotomic::factor_xp_minus1;
use lcdforge::decomposition::{decompose, SigmaPermutation};
use lcdforge::equivalence::{are_equivalent, automorphism_group_order};
use lcdforge::gf2::DEFAULT_ENUMERATION_CAP;
use lcdforge::lcd::verdict_for;
use lcdforge::{BinaryCode, Error};
use log::info;
use serde_json::{json, Value};

/// Binary LCD codes with a prime-order automorphism.
#[derive(Parser, Debug)]
#[command(name = "lcdforge", version, arg_required_else_help = true)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for candidate evaluation (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one search campaign and write its report and code files.
    Campaign {
        #[arg(long, value_parser = ["7", "11", "17"])]
        p: String,
        /// Number of fixed points (p = 7 only, 0..=6).
        #[arg(long)]
        f: Option<usize>,
        #[arg(long)]
        no_orbit_reduce: bool,
        #[arg(long, env = "LCDFORGE_OUT")]
        out: PathBuf,
    },
    /// Run every campaign (or one, with --campaign).
    RunAll {
        #[arg(long, value_parser = ["p7", "p11", "p17"])]
        campaign: Option<String>,
        #[arg(long)]
        no_orbit_reduce: bool,
        #[arg(long, env = "LCDFORGE_OUT")]
        out: PathBuf,
    },
    /// Distance, weight enumerator, hull dimension and |Aut| of a code file.
    Analyze {
        file: PathBuf,
        /// Largest dimension enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Factor x^p - 1 over GF(2) and list the primitive idempotents.
    Factor {
        #[arg(long)]
        p: u64,
    },
    /// Decompose a code under sigma = (p cycles: c, fixed points: f).
    Decompose {
        file: PathBuf,
        /// Normal-form cycle type "p,c,f".
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        sigma: Option<String>,
        /// Any permutation of prime order, in 1-based cycle notation.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Decide permutation equivalence of two codes.
    Equiv { a: PathBuf, b: PathBuf },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) | Error::NotOddPrime(_) | Error::PrimeTooLarge(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn init_logging() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format(|buf, record| {
            let line = json!({
                "level": record.level().to_string(),
                "target": record.target(),
                "msg": record.args().to_string(),
            });
            writeln!(buf, "{line}")
        })
        .init();
}

fn read_code(path: &Path) -> Result<BinaryCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    BinaryCode::from_text(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_sigma(s: &str) -> Result<SigmaPermutation, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("--sigma expects \"p,c,f\", got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let p = parts[0].parse().map_err(|_| bad())?;
    let c = parts[1].parse().map_err(|_| bad())?;
    let f = parts[2].parse().map_err(|_| bad())?;
    Ok(SigmaPermutation::new(p, c, f)?)
}

/// Parses "(1 2 3)(4 5 6)" into an image table of length `n`.
fn parse_cycles(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let mut perm: Vec<usize> = (0..n).collect();
    for chunk in s.split(')') {
        let body = chunk.trim().trim_start_matches('(');
        if body.trim().is_empty() {
            continue;
        }
        let points: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                _ => Err(Failure::Usage(format!("bad point {t:?} in --perm"))),
            })
            .collect::<Result<_, _>>()?;
        for (i, &x) in points.iter().enumerate() {
            perm[x] = points[(i + 1) % points.len()];
        }
    }
    Ok(perm)
}

fn emit(json_mode: bool, value: &Value, text: impl FnOnce() -> String) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

fn summarize(reports: &[CampaignReport], json_mode: bool) -> Result<(), Failure> {
    for r in reports {
        for s in &r.stages {
            let v = json!({
                "campaign": r.campaign,
                "stage": s.name,
                "candidates": s.candidate_count,
                "lcd": s.lcd_count,
                "survivors": s.survivor_count,
                "inequivalent": s.inequivalent_count,
                "max_lcd_distance": s.max_lcd_distance,
            });
            emit(json_mode, &v, || {
                format!(
                    "{:<16} candidates={:<6} lcd={:<6} survivors={:<5} classes={:<3} max_d={}",
                    s.name,
                    s.candidate_count,
                    s.lcd_count,
                    s.survivor_count,
                    s.inequivalent_count,
                    s.max_lcd_distance.map_or("-".into(), |d| d.to_string())
                )
            });
        }
    }
    if let Some(bad) = reports.iter().find(|r| !r.consistent()) {
        return Err(Failure::Compute(format!("{}: internal cross-checks failed", bad.campaign)));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Compute(e.to_string()))?;
    }
    let js = cli.json;
    match cli.command {
        Command::Campaign { p, f, no_orbit_reduce, out } => {
            let selection = match (p.as_str(), f) {
                ("7", Some(f)) if f > 6 => {
                    return Err(Failure::Usage("--f must be in 0..=6".into()));
                }
                ("7", f) => CampaignSelection::P7(f),
                (_, Some(_)) => return Err(Failure::Usage("--f applies to --p 7 only".into())),
                ("11", None) => CampaignSelection::P11,
                _ => CampaignSelection::P17,
            };
            let opts = CampaignOptions { orbit_reduce: !no_orbit_reduce };
            let start = Instant::now();
            let reports = campaigns::run_all(&out, selection, opts)?;
            info!("campaign p={p} finished in {:.2}s", start.elapsed().as_secs_f64());
            summarize(&reports, js)
        }
        Command::RunAll { campaign, no_orbit_reduce, out } => {
            let selection = match campaign.as_deref() {
                Some("p7") => CampaignSelection::P7(None),
                Some("p11") => CampaignSelection::P11,
                Some("p17") => CampaignSelection::P17,
                _ => CampaignSelection::All,
            };
            let opts = CampaignOptions { orbit_reduce: !no_orbit_reduce };
            let start = Instant::now();
            let reports = campaigns::run_all(&out, selection, opts)?;
            info!("run-all finished in {:.2}s", start.elapsed().as_secs_f64());
            summarize(&reports, js)
        }
        Command::Analyze { file, cap } => {
            let code = read_code(&file)?;
            let we = code.weight_enumerator_capped(cap)?;
            let hull = code.hull().k();
            let aut = automorphism_group_order(&code).ok();
            let v = json!({
                "n": code.n(),
                "k": code.k(),
                "d": we.min_distance(),
                "hull_dim": hull,
                "is_lcd": hull == 0,
                "weight_enumerator": we,
                "aut_order": aut.map(|a| a.to_string()),
            });
            emit(js, &v, || {
                format!(
                    "[{},{},{}] hull_dim={} lcd={}\nWE: {}\n|Aut|: {}",
                    code.n(),
                    code.k(),
                    we.min_distance().map_or("-".into(), |d| d.to_string()),
                    hull,
                    hull == 0,
                    we,
                    aut.map_or("unavailable".into(), |a| a.to_string())
                )
            });
            Ok(())
        }
        Command::Factor { p } => {
            let fact = factor_xp_minus1(p)?;
            let report = fact.report();
            let v = serde_json::to_value(&report).map_err(|e| Failure::Compute(e.to_string()))?;
            emit(js, &v, || fact.to_string());
            Ok(())
        }
        Command::Decompose { file, sigma, perm } => {
            let mut code = read_code(&file)?;
            let mut map = None;
            let sigma = match (sigma, perm) {
                (Some(s), _) => parse_sigma(&s)?,
                (None, Some(cycles)) => {
                    let table = parse_cycles(&cycles, code.n())?;
                    let (sigma, m) = SigmaPermutation::from_permutation(&table)?;
                    code = code.permuted(&m)?;
                    map = Some(m);
                    sigma
                }
                (None, None) => return Err(Failure::Usage("--sigma or --perm required".into())),
            };
            if sigma.n() != code.n() {
                return Err(Failure::Usage(format!(
                    "sigma acts on {} points but the code has length {}",
                    sigma.n(),
                    code.n()
                )));
            }
            let fact = factor_xp_minus1(sigma.p() as u64)?;
            let d = decompose(&code, &sigma, &fact)?;
            let verdict = verdict_for(&d, &fact);
            let v = json!({
                "decomposition": d.report(),
                "lcd": verdict,
                "relabelling": map,
            });
            emit(js, &v, || serde_json::to_string_pretty(&v).unwrap_or_default());
            Ok(())
        }
        Command::Equiv { a, b } => {
            let ca = read_code(&a)?;
            let cb = read_code(&b)?;
            let cert = are_equivalent(&ca, &cb)?;
            let v = serde_json::to_value(&cert).map_err(|e| Failure::Compute(e.to_string()))?;
            emit(js, &v, || match &v["permutation"] {
                Value::String(p) => format!("equivalent {p}"),
                _ => "inequivalent".to_string(),
            });
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_logging();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Usage(m) => (2, "usage", m),
                Failure::Compute(m) => (1, "computation", m),
            };
            eprintln!("{}", json!({ "error": kind, "message": msg }));
            ExitCode::from(code)
        }
    }
}
