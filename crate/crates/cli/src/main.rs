//! `torusfold`: batch front end for the mapping torus pipeline.
//!
//! Exit status is 0 when every input succeeds, 1 when some input fails a
//! check, and 2 when some input cannot be read or parsed.

mod commands;
mod input;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use input::{Kind, Source};

#[derive(Debug, Parser)]
#[command(name = "torusfold", version, about = "Triangulate mapping tori of punctured-surface homeomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the subdivide-and-fold trace of a marked map.
    Decompose(Common),
    /// Triangulate the mapping torus of a marked map, as a T/G document.
    Triangulate(Common),
    /// Write a SnapPea triangulation file for a T/G document or marked map.
    Convert {
        #[command(flatten)]
        common: Common,
        /// Manifold name in the file header (defaults to the input's stem).
        #[arg(long)]
        name: Option<String>,
    },
    /// Check links, edges, orientability and homology of any input kind.
    Verify(Common),
    /// Print a presentation of the fundamental group, a simplified one and H1.
    Group(Common),
    /// Print counts, fold statistics and the tetrahedron bound.
    Info(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Input files; `-` reads standard input.
    #[arg(required = true, value_name = "INPUT")]
    inputs: Vec<String>,
    /// Output file for a single input; `-` is standard output.
    #[arg(short, long, value_name = "PATH", conflicts_with = "out_dir")]
    output: Option<String>,
    /// Write one file per input into this directory.
    #[arg(long, value_name = "DIR")]
    out_dir: Option<PathBuf>,
    /// Input format.
    #[arg(long, value_enum, default_value = "auto")]
    kind: Kind,
    /// Homotope marked maps to tight ones before running.
    #[arg(long)]
    tighten: bool,
    /// Number of inputs processed in parallel.
    #[arg(short, long, env = "TORUSFOLD_JOBS", default_value_t = 0, hide_env_values = true)]
    jobs: usize,
    /// Report each written file on standard error.
    #[arg(short, long)]
    verbose: bool,
}

/// Why an input failed; the display names the input.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("{path}: {msg}")]
    Validation { path: String, msg: String },
}

impl Failure {
    pub fn io(source: &Source, e: std::io::Error) -> Self {
        Failure::Io {
            path: source.to_string(),
            source: e,
        }
    }

    pub fn parse(source: &Source, msg: impl Into<String>) -> Self {
        Failure::Parse {
            path: source.to_string(),
            msg: msg.into(),
        }
    }

    pub fn validation(source: &Source, msg: impl Into<String>) -> Self {
        Failure::Validation {
            path: source.to_string(),
            msg: msg.into(),
        }
    }

    pub fn from_error(source: &Source, e: torusfold::Error) -> Self {
        if e.is_parse_error() {
            Self::parse(source, e.to_string())
        } else {
            Self::validation(source, e.to_string())
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation { .. } => 1,
            Failure::Io { .. } | Failure::Parse { .. } => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Decompose,
    Triangulate,
    Convert,
    Verify,
    Group,
    Info,
}

impl Op {
    fn extension(self) -> &'static str {
        match self {
            Op::Decompose => "trace",
            Op::Triangulate => "tg",
            Op::Convert => "tri",
            Op::Verify => "verify",
            Op::Group => "group",
            Op::Info => "info",
        }
    }
}

fn process(op: Op, common: &Common, name: Option<&str>, source: &Source) -> Result<String, Failure> {
    let text = source.read()?;
    let loaded = input::load(source, &text, common.kind, common.tighten)?;
    match op {
        Op::Decompose => commands::decompose_cmd(source, loaded),
        Op::Triangulate => commands::triangulate(source, loaded),
        Op::Convert => {
            let stem = source.stem();
            commands::convert(source, loaded, name.unwrap_or(&stem))
        }
        Op::Verify => commands::verify(source, loaded),
        Op::Group => commands::group(source, loaded),
        Op::Info => commands::info(source, loaded),
    }
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("torusfold: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    let (op, common, name) = match &cli.command {
        Command::Decompose(c) => (Op::Decompose, c, None),
        Command::Triangulate(c) => (Op::Triangulate, c, None),
        Command::Convert { common, name } => (Op::Convert, common, name.as_deref()),
        Command::Verify(c) => (Op::Verify, c, None),
        Command::Group(c) => (Op::Group, c, None),
        Command::Info(c) => (Op::Info, c, None),
    };
    let sources: Vec<Source> = common.inputs.iter().map(|s| Source::parse(s)).collect();
    if sources.iter().filter(|s| **s == Source::Stdin).count() > 1 {
        return usage_error("standard input can be read only once");
    }
    if common.output.is_some() && sources.len() > 1 {
        return usage_error("--output takes a single input; use --out-dir for several");
    }
    if let Some(dir) = &common.out_dir {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return usage_error(&format!("{}: {e}", dir.display()));
        }
    }

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.jobs).build() {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("cannot start worker threads: {e}")),
    };
    let results: Vec<Result<String, Failure>> =
        pool.install(|| sources.par_iter().map(|s| process(op, common, name, s)).collect());

    let mut status = 0u8;
    let multiple = sources.len() > 1;
    let mut stdout = std::io::stdout().lock();
    for (source, result) in sources.iter().zip(results) {
        let text = match result {
            Ok(t) => t,
            Err(f) => {
                eprintln!("torusfold: {f}");
                status = status.max(f.exit_code());
                continue;
            }
        };
        let target = match (&common.output, &common.out_dir) {
            (Some(o), _) if o != "-" => Some(PathBuf::from(o)),
            (_, Some(dir)) => Some(dir.join(format!("{}.{}", source.stem(), op.extension()))),
            _ => None,
        };
        let written = match &target {
            Some(path) => write_atomic(path, &text).map(|()| {
                if common.verbose {
                    eprintln!("torusfold: {source}: wrote {}", path.display());
                }
            }),
            None if multiple && op != Op::Verify => write!(stdout, "==> {source} <==\n{text}"),
            None => stdout.write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            let where_ = target.as_deref().map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string());
            eprintln!("torusfold: {where_}: {e}");
            status = 2;
        }
    }
    if let Err(e) = stdout.flush() {
        eprintln!("torusfold: <stdout>: {e}");
        status = 2;
    }
    ExitCode::from(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    run(cli)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        let s = Source::parse("x.map");
        assert_eq!(Failure::parse(&s, "bad").exit_code(), 2);
        assert_eq!(Failure::validation(&s, "bad").exit_code(), 1);
        assert_eq!(Failure::parse(&s, "bad").to_string(), "x.map: bad");
    }
}
