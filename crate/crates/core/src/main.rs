use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use frieze::criterion::is_embeddable;
use frieze::extend::{embed, enumerate_embeddings, Scripted};
use frieze::io::{self, DocumentError};
use frieze::oracle::{occurs_in_cc_capped, DEFAULT_ORACLE_CAP};
use frieze::render::{render_frieze, render_triangulation, Format};
use frieze::triangulation::{frieze_of, triangulation_of};
use frieze::Frieze;

/// Overrides the largest polygon size the oracle may enumerate.
const CAP_VAR: &str = "FRIEZE_ENUMERATION_CAP";

#[derive(Parser)]
#[command(name = "frieze", version, about = "Friezes with coefficients and their Conway-Coxeter embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a frieze, triangulation or embedding document.
    Validate { file: PathBuf },
    /// Run the embeddability criterion and print witnesses.
    Check { file: PathBuf },
    /// Extend a frieze to a Conway-Coxeter frieze.
    Embed {
        file: PathBuf,
        /// Enumerate embeddings over all choices instead of one.
        #[arg(long)]
        all: bool,
        /// Maximum number of embeddings with --all.
        #[arg(long, default_value_t = 10, requires = "all")]
        limit: usize,
        /// Explicit per-step choices (choices-v1 document).
        #[arg(long, conflicts_with = "all")]
        choices: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Restrict a frieze to a vertex subset.
    Restrict {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Conway-Coxeter frieze of a triangulation.
    FromTriangulation {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Triangulation of a Conway-Coxeter frieze.
    ToTriangulation {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search Conway-Coxeter friezes up to a size for an occurrence.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        max_n: usize,
    },
    /// Print rows of the infinite frieze pattern.
    Pattern {
        file: PathBuf,
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        first: i64,
    },
    /// Draw a frieze or triangulation.
    Render {
        file: PathBuf,
        #[arg(long)]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Failure with its exit code: 1 for a negative verdict or invalid input,
/// 2 for usage and I/O problems.
struct Failure {
    code: u8,
    message: String,
}

fn negative(message: impl ToString) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        negative(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn load_frieze(path: &Path) -> Result<Frieze, Failure> {
    Ok(io::parse_frieze(&read(path)?)?)
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| usage(format!("{CAP_VAR} must be a positive integer, got \"{v}\""))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn validate(path: &Path) -> Result<String, Failure> {
    let text = read(path)?;
    let tag = io::format_tag(&text)?;
    match tag.as_str() {
        io::FRIEZE_FORMAT => {
            let table = io::parse_frieze_table(&text)?;
            let report = table.verify_ptolemy();
            if report.ok() {
                Ok(format!("valid frieze on {} vertices", table.n()))
            } else {
                let lines: Vec<String> = report
                    .violations
                    .iter()
                    .map(|v| format!("Ptolemy relation fails on {:?}: {} != {}", v.quad, v.lhs, v.rhs))
                    .collect();
                Err(negative(lines.join("\n")))
            }
        }
        io::TRIANGULATION_FORMAT => {
            let t = io::parse_triangulation(&text)?;
            Ok(format!("valid triangulation of a {}-gon", t.n()))
        }
        io::EMBEDDING_FORMAT => {
            let e = io::parse_embedding(&text)?;
            Ok(format!(
                "valid embedding of a {}-gon into a {}-gon",
                e.input.n(),
                e.cc.n()
            ))
        }
        other => Err(negative(format!("unknown document format \"{other}\""))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            println!("{}", validate(&file)?);
        }
        Command::Check { file } => {
            let report = is_embeddable(&load_frieze(&file)?);
            println!("{report}");
            if !report.embeddable() {
                return Err(negative("criterion fails"));
            }
        }
        Command::Embed {
            file,
            all,
            limit,
            choices,
            output,
        } => {
            let f = load_frieze(&file)?;
            let text = if all {
                let found = enumerate_embeddings(&f, limit).map_err(negative)?;
                let docs: Vec<_> = found.iter().map(io::embedding_document).collect();
                io::to_canonical_json(&docs)
            } else {
                let steps = match choices {
                    Some(p) => io::parse_choices(&read(&p)?)?,
                    None => Vec::new(),
                };
                let e = embed(&f, &mut Scripted::new(steps)).map_err(negative)?;
                io::serialize_embedding(&e)
            };
            emit(&text, output.as_deref())?;
        }
        Command::Restrict { file, vertices, output } => {
            let f = load_frieze(&file)?;
            let sub = f.restrict(&vertices).map_err(negative)?;
            emit(&io::serialize_frieze(&sub), output.as_deref())?;
        }
        Command::FromTriangulation { file, output } => {
            let t = io::parse_triangulation(&read(&file)?)?;
            let f = frieze_of(&t).map_err(negative)?;
            emit(&io::serialize_frieze(&f), output.as_deref())?;
        }
        Command::ToTriangulation { file, output } => {
            let t = triangulation_of(&load_frieze(&file)?).map_err(negative)?;
            emit(&io::serialize_triangulation(&t), output.as_deref())?;
        }
        Command::Oracle { file, max_n } => {
            let f = load_frieze(&file)?;
            match occurs_in_cc_capped(&f, max_n, oracle_cap()?).map_err(usage)? {
                Some(w) => println!(
                    "found in the {}-gon frieze of {} at vertices {:?} (rotation {}, reflected {})",
                    w.n_cc, w.tri, w.vertex_subset, w.transform.rotation, w.transform.reflected
                ),
                None => return Err(negative(format!("no occurrence on at most {max_n} vertices"))),
            }
        }
        Command::Pattern { file, rows, first } => {
            let window = load_frieze(&file)?.pattern_rows(first, rows);
            for (r, row) in window.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{:>4}: {}", first + r as i64, cells.join(" "));
            }
        }
        Command::Render { file, format, output } => {
            let format: Format = format.parse().map_err(usage)?;
            let text = read(&file)?;
            let drawing = match io::format_tag(&text)?.as_str() {
                io::TRIANGULATION_FORMAT => render_triangulation(&io::parse_triangulation(&text)?, format),
                _ => render_frieze(&io::parse_frieze(&text)?, format),
            };
            match output {
                Some(p) => fs::write(&p, drawing).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => print!("{drawing}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
