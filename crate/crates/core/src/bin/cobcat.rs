use clap::{Parser, Subcommand, ValueEnum};
use cobcat::brauer::Certificate;
use cobcat::cli::{
    cmd_certify_replay, cmd_chartable, cmd_enc, cmd_gram, cmd_hom, cmd_nilwindow, cmd_semisimple,
    cmd_simples, Report,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "cobcat", about = "Exact computations in the linearized cobordism calculus")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Path for persisting/reusing certificates.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Force recomputation even when a cache file is present.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Seed echoed into the report for sampled runs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the basis of a hom space between sign words ("1" is the unit).
    Hom {
        source: String,
        target: String,
        #[arg(long)]
        pointed: bool,
    },
    /// Gram matrix and determinants for End(X^(i,j)).
    Gram { i: usize, j: usize },
    /// Build (or reuse) the semisimplicity certificate up to i+j <= max.
    Semisimple {
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Decompose X^(i,j) into simples with verified identities.
    Simples { i: usize, j: usize },
    /// Character table of the symmetric group.
    Chartable { n: usize },
    /// Non-nilpotence witnesses for tensor powers of the universal map.
    Enc {
        #[arg(default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        gen_bound: usize,
        /// Negative control: replace the split point by zero.
        #[arg(long)]
        corrupt_point: bool,
    },
    /// Exhaustive nilpotence-window search over small generators.
    Nilwindow { n: usize },
    /// Re-verify a stored certificate byte for byte.
    CertifyReplay { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {}", msg);
            return ExitCode::from(2);
        }
    };
    let mut report = report;
    if let Some(seed) = cli.seed {
        report.params.push(("seed".into(), seed.to_string()));
    }
    report.timing_ms = start.elapsed().as_millis();
    let rendered = match cli.format {
        Format::Plain => report.to_plain(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    print!("{}", rendered);
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    match &cli.command {
        Command::Hom {
            source,
            target,
            pointed,
        } => cmd_hom(source, target, *pointed).map_err(|e| e.to_string()),
        Command::Gram { i, j } => {
            if i + j < 1 || i + j > 5 {
                return Err("supported range: 1 <= i+j <= 5".into());
            }
            Ok(cmd_gram(*i, *j))
        }
        Command::Semisimple { max } => {
            if !(1..=4).contains(max) {
                return Err("supported range: 1 <= max <= 4".into());
            }
            let cached = load_cached(cli, *max);
            let was_cached = cached.is_some();
            let (report, cert) = cmd_semisimple(*max, cached);
            if let (Some(cert), Some(path), false) = (cert, cli.cache.as_ref(), was_cached) {
                let _ = std::fs::write(path, cert.to_text());
            }
            Ok(report)
        }
        Command::Simples { i, j } => {
            if i + j < 1 || i + j > 4 {
                return Err("supported range: 1 <= i+j <= 4".into());
            }
            Ok(cmd_simples(*i, *j))
        }
        Command::Chartable { n } => {
            if !(1..=6).contains(n) {
                return Err("supported range: 1 <= n <= 6".into());
            }
            Ok(cmd_chartable(*n))
        }
        Command::Enc {
            n,
            gen_bound,
            corrupt_point,
        } => {
            if *n < 1 || *gen_bound < 1 {
                return Err("bounds must be at least 1".into());
            }
            Ok(cmd_enc(*n, *gen_bound, *corrupt_point))
        }
        Command::Nilwindow { n } => {
            if !(1..=3).contains(n) {
                return Err("supported range: 1 <= n <= 3".into());
            }
            Ok(cmd_nilwindow(*n))
        }
        Command::CertifyReplay { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            Ok(cmd_certify_replay(&text))
        }
    }
}

fn load_cached(cli: &Cli, max: usize) -> Option<Certificate> {
    if cli.no_cache {
        return None;
    }
    let path = cli.cache.as_ref()?;
    let text = std::fs::read_to_string(path).ok()?;
    let cert = Certificate::parse(&text).ok()?;
    (cert.max_size == max).then_some(cert)
}
