//! Command-line driver. [`run`] never panics on user input and maps every failure
//! to a stable exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::format::{
    certificate_document, obstruction_document, parse_matrix_file, render_documents, replay_certificate,
    report_document, report_table, Document,
};
use crate::matrix::Matrix;
use crate::oracle::{sweep, DEFAULT_K_MAX};
use crate::ring::parse::parse_family;
use crate::ring::{RingDescriptor, DEFAULT_EXHAUSTION_BOUND};
use crate::twin::{twin_decompose, two_sum_decompose};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_TWIN_GOOD: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_BOUNDS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "twinring", version, about = "Twin-unit decompositions of matrices over finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a unit U with M+U and M-U invertible and print a certificate.
    Decompose(DecomposeArgs),
    /// Exhaustively check a single ring.
    Check(CheckArgs),
    /// Check every ring in a family such as `Z/2..60` or `GF(2),GF(3)`.
    Sweep(SweepArgs),
    /// Replay certificate documents.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Table,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Cap on the number of elements any exhaustive search may enumerate.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTION_BOUND)]
    pub bound: u128,
    /// Progress and timings on stderr.
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Matrix file with `ring:` and `rows:` fields.
    #[arg(long = "in", conflicts_with = "random")]
    pub input: Option<PathBuf>,
    /// Ring for random trials.
    #[arg(long, requires = "random")]
    pub ring: Option<String>,
    /// Decompose this many random matrices instead of reading a file.
    #[arg(long, requires_all = ["seed", "ring"])]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub size: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub ring: String,
    /// Largest k reported in the k-good table.
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    pub kmax: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Family specification.
    #[arg(conflicts_with = "ring")]
    pub family: Option<String>,
    /// Family specification, as an alternative to the positional argument.
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    pub kmax: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// File with one or more certificate documents.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotTwinGood { .. } | Error::NotTwoGood(_) | Error::QuotientUnsolvable { .. } => EXIT_NOT_TWIN_GOOD,
        Error::ExhaustionBoundExceeded { .. } => EXIT_BOUNDS,
        Error::ConstructionVerificationFailed(_) => EXIT_DISAGREEMENT,
        _ => EXIT_INPUT,
    }
}

struct Outcome {
    stdout: String,
    code: i32,
}

fn fail(err: Error) -> (i32, String) {
    (exit_code(&err), err.to_string())
}

fn read(path: &PathBuf) -> Result<String, (i32, String)> {
    std::fs::read_to_string(path).map_err(|e| (EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let common = match &cli.command {
        Command::Decompose(a) => &a.common,
        Command::Check(a) => &a.common,
        Command::Sweep(a) => &a.common,
        Command::Verify(a) => &a.common,
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Decompose(a) => decompose(a, stderr),
        Command::Check(a) => check(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Verify(a) => verify(a, stderr),
    };
    let code = match result {
        Ok(out) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &out.stdout)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(out.stdout.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => out.code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_INPUT
                }
            }
        }
        Err((code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    };
    if common.verbose > 0 {
        let _ = writeln!(stderr, "finished in {:.3}s with exit code {code}", start.elapsed().as_secs_f64());
    }
    code
}

fn decompose(a: &DecomposeArgs, stderr: &mut dyn Write) -> Result<Outcome, (i32, String)> {
    let matrices = match (&a.input, a.random) {
        (Some(path), _) => vec![parse_matrix_file(&read(path)?).map_err(fail)?],
        (None, Some(count)) => {
            let ring: RingDescriptor = a.ring.as_deref().unwrap_or_default().parse().map_err(fail)?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed.expect("clap enforces --seed"));
            (0..count)
                .map(|_| random_matrix(&ring, a.size, &mut rng))
                .collect::<crate::Result<Vec<_>>>()
                .map_err(fail)?
        }
        (None, None) => return Err((EXIT_INPUT, "decompose needs --in FILE or --random N".into())),
    };

    let mut docs = Vec::new();
    let mut rows = vec!["index\tring\tsize\tmethod\tverified".to_string()];
    let mut code = EXIT_OK;
    for (i, m) in matrices.iter().enumerate() {
        match twin_decompose(m) {
            Ok(cert) => {
                let doc = certificate_document(&cert);
                if doc.get("verified") != Some("true") {
                    code = code.max(EXIT_DISAGREEMENT);
                }
                rows.push(format!("{i}\t{}\t{}\t{}\t{}", m.ring(), m.rows(), cert.method, cert.verify()));
                docs.push(doc);
            }
            Err(err @ Error::NotTwinGood { .. }) => {
                let two = two_sum_decompose(m, a.common.bound).ok();
                let _ = writeln!(stderr, "error: {err}");
                rows.push(format!("{i}\t{}\t{}\t-\tnot-twin-good", m.ring(), m.rows()));
                docs.push(obstruction_document(m, &err, two.as_ref()));
                code = code.max(EXIT_NOT_TWIN_GOOD);
            }
            Err(err) => return Err(fail(err)),
        }
        if a.common.verbose > 1 {
            let _ = writeln!(stderr, "matrix {i} done");
        }
    }
    let stdout = match a.common.format {
        OutputFormat::Text => render_documents(&docs),
        OutputFormat::Table => rows.join("\n") + "\n",
    };
    Ok(Outcome { stdout, code })
}

fn random_matrix<R: rand::Rng>(ring: &RingDescriptor, n: usize, rng: &mut R) -> crate::Result<Matrix> {
    let data = (0..n * n).map(|_| ring.random_element(rng)).collect();
    Matrix::new(ring.clone(), n, n, data)
}

fn check(a: &CheckArgs) -> Result<Outcome, (i32, String)> {
    let ring: RingDescriptor = a.ring.parse().map_err(fail)?;
    let rows = [(ring.clone(), crate::oracle::check_ring(&ring, a.common.bound, a.kmax))];
    if let Err(e) = &rows[0].1 {
        return Err(fail(e.clone()));
    }
    let code = if rows[0].1.as_ref().is_ok_and(|r| r.agreement) { EXIT_OK } else { EXIT_DISAGREEMENT };
    Ok(Outcome { stdout: render_reports(&rows, a.common.format), code })
}

fn render_reports(rows: &[(RingDescriptor, crate::Result<crate::oracle::GoodnessReport>)], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            render_documents(&rows.iter().map(|(r, o)| report_document(r, o)).collect::<Vec<_>>())
        }
        OutputFormat::Table => report_table(rows),
    }
}

fn run_sweep(a: &SweepArgs) -> Result<Outcome, (i32, String)> {
    let spec = a.family.as_deref().or(a.ring.as_deref()).unwrap_or("");
    let rings = parse_family(spec).map_err(fail)?;
    let reports = sweep(&rings, a.common.bound, a.kmax);
    let disagreement = reports.iter().any(|r| r.as_ref().is_ok_and(|r| !r.agreement));
    let rows: Vec<_> = rings.into_iter().zip(reports).collect();
    let code = if disagreement { EXIT_DISAGREEMENT } else { EXIT_OK };
    Ok(Outcome { stdout: render_reports(&rows, a.common.format), code })
}

fn verify(a: &VerifyArgs, stderr: &mut dyn Write) -> Result<Outcome, (i32, String)> {
    let docs = Document::parse_many(&read(&a.input)?).map_err(fail)?;
    if docs.is_empty() {
        return Err((EXIT_INPUT, "no certificate documents found".into()));
    }
    let mut replays = Vec::new();
    let mut code = EXIT_OK;
    for (i, doc) in docs.iter().enumerate() {
        let replay = replay_certificate(doc).map_err(|e| (EXIT_INPUT, format!("document {i}: {e}")))?;
        if !replay.agrees() {
            let _ = writeln!(
                stderr,
                "document {i}: replay gives {} but the document claims {}",
                replay.recomputed, replay.claimed
            );
            code = code.max(EXIT_DISAGREEMENT);
        } else if !replay.recomputed {
            let _ = writeln!(stderr, "document {i}: not a valid certificate");
            code = code.max(EXIT_INPUT);
        }
        replays.push(replay);
    }
    let stdout = match a.common.format {
        OutputFormat::Table => {
            let mut out = String::from("index\trecomputed\tclaimed\tagreement\n");
            for (i, r) in replays.iter().enumerate() {
                out.push_str(&format!("{i}\t{}\t{}\t{}\n", r.recomputed, r.claimed, r.agrees()));
            }
            out
        }
        OutputFormat::Text => {
            let docs: Vec<Document> = replays
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut d = Document::new();
                    d.push("kind", "replay")
                        .push("index", i.to_string())
                        .push("recomputed", r.recomputed.to_string())
                        .push("claimed", r.claimed.to_string())
                        .push("agreement", r.agrees().to_string());
                    d
                })
                .collect();
            render_documents(&docs)
        }
    };
    Ok(Outcome { stdout, code })
}
