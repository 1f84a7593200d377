//! `adams`: Adams operation matrices, eigenvectors, counts and invariant
//! sweeps from the command line.
//!
//! Exit codes: 0 success, 1 a `verify` property failed, 2 invalid
//! arguments, 3 internal cross-check failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use adams_core::counts::{mu_closed, mu_enumerate, MuArgs};
use adams_core::eigen::eigenbasis;
use adams_core::exactmath::format_rational;
use adams_core::ktheory::adams_matrix;
use adams_core::verify::{run_suite, Suite};
use adams_core::{AdamsMatrix, Error, Family, GroupSpec};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "adams", version, about = "Exact Adams operations on K-theory of compact Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix of psi^l on the primitive generators
    Compute {
        #[arg(long, value_parser = parse_family)]
        group: Family,
        /// Rank parameter; not needed for G2
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        l: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Rational eigenbasis of psi^l on U(rank)
    Eigen {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Attach numeric eigenvalues and the matrix for this l
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        l: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Number of tuples in [0, l-1]^n summing to l*k - p
    #[command(allow_negative_numbers = true)]
    Mu {
        n: i64,
        l: i64,
        k: i64,
        p: i64,
        /// Cross-check against direct enumeration
        #[arg(long)]
        check: bool,
    },
    /// Run invariant sweeps
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_rank: u32,
        #[arg(long, default_value_t = 4)]
        max_l: u32,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Serialize, Deserialize)]
struct EigenBlock {
    levels: Vec<u32>,
    exponents: Vec<u32>,
    eigenvalues: Vec<String>,
    vectors: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct OutputDocument {
    group: String,
    rank: u32,
    l: Option<u32>,
    basis: Vec<String>,
    matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigen: Option<EigenBlock>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PipelineMismatch { .. } | Error::NonIntegral { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn matrix_strings(m: &AdamsMatrix) -> Result<Vec<Vec<String>>, Failure> {
    Ok(m.integer_entries()?
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect())
}

fn render_table(header: &[String], rows: &[Vec<String>], row_labels: &[String]) -> String {
    let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].len())
                .chain([header[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:label_w$}", "");
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(out, "  {h:>w$}");
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(rows) {
        let _ = write!(out, "{label:label_w$}");
        for (x, w) in row.iter().zip(&widths) {
            let _ = write!(out, "  {x:>w$}");
        }
        out.push('\n');
    }
    out
}

fn csv_line(cells: &[String]) -> String {
    cells.join(",") + "\n"
}

fn emit(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("document serializes") + "\n",
        Format::Csv => {
            let mut out = String::new();
            if !doc.matrix.is_empty() {
                out += &csv_line(&doc.basis);
                for row in &doc.matrix {
                    out += &csv_line(row);
                }
            }
            if let Some(e) = &doc.eigen {
                if !out.is_empty() {
                    out.push('\n');
                }
                let mut header = vec!["k".to_string(), "eigenvalue".to_string()];
                header.extend(doc.basis.iter().cloned());
                out += &csv_line(&header);
                for ((k, ev), v) in e.levels.iter().zip(&e.eigenvalues).zip(&e.vectors) {
                    let mut row = vec![k.to_string(), ev.clone()];
                    row.extend(v.iter().cloned());
                    out += &csv_line(&row);
                }
            }
            out
        }
        Format::Pretty => {
            let mut out = match doc.l {
                Some(l) => format!("{}  psi^{}\n", doc.group, l),
                None => format!("{}\n", doc.group),
            };
            if !doc.matrix.is_empty() {
                out += &render_table(&doc.basis, &doc.matrix, &doc.basis);
            }
            if let Some(e) = &doc.eigen {
                out.push('\n');
                let labels: Vec<String> = e
                    .levels
                    .iter()
                    .zip(&e.eigenvalues)
                    .map(|(k, ev)| format!("k={k} ({ev})"))
                    .collect();
                out += &render_table(&doc.basis, &e.vectors, &labels);
            }
            out
        }
    }
}

fn compute(family: Family, rank: Option<u32>, l: u32, format: Format) -> Result<String, Failure> {
    let group = match (family, rank) {
        (Family::G2, None | Some(2)) => GroupSpec::g2(),
        (Family::G2, Some(r)) => {
            return Err(Failure {
                code: 2,
                message: format!("G2 has rank 2, not {r}"),
            })
        }
        (_, None) => {
            return Err(Failure {
                code: 2,
                message: format!("--rank is required for {family}"),
            })
        }
        (_, Some(r)) => GroupSpec::new(family, r)?,
    };
    let m = adams_matrix(group, l)?;
    let doc = OutputDocument {
        group: group.to_string(),
        rank: group.n(),
        l: Some(l),
        basis: group.basis().into_iter().map(|b| b.label).collect(),
        matrix: matrix_strings(&m)?,
        eigen: None,
    };
    Ok(emit(&doc, format))
}

fn eigen(rank: u32, l: Option<u32>, format: Format) -> Result<String, Failure> {
    let group = GroupSpec::new(Family::U, rank)?;
    let basis = eigenbasis(rank)?;
    let matrix = match l {
        Some(l) => matrix_strings(&adams_matrix(group, l)?)?,
        None => Vec::new(),
    };
    let block = EigenBlock {
        levels: basis.iter().map(|v| v.k).collect(),
        exponents: basis.iter().map(|v| v.exponent()).collect(),
        eigenvalues: basis
            .iter()
            .map(|v| match l {
                Some(l) => v.eigenvalue(l).to_string(),
                None => format!("l^{}", v.exponent()),
            })
            .collect(),
        vectors: basis
            .iter()
            .map(|v| v.vector.coords().iter().map(format_rational).collect())
            .collect(),
    };
    let doc = OutputDocument {
        group: group.to_string(),
        rank,
        l,
        basis: group.basis().into_iter().map(|b| b.label).collect(),
        matrix,
        eigen: Some(block),
    };
    Ok(emit(&doc, format))
}

fn mu(n: i64, l: i64, k: i64, p: i64, check: bool) -> Result<String, Failure> {
    let args = MuArgs::new(n, l, k, p)?;
    let value = mu_closed(args);
    if check {
        let direct = mu_enumerate(args);
        if direct != value {
            return Err(Failure {
                code: 3,
                message: format!("closed form gives {value}, enumeration gives {direct}"),
            });
        }
    }
    Ok(format!("{value}\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            group,
            rank,
            l,
            format,
        } => compute(group, rank, l, format),
        Command::Eigen { rank, l, format } => eigen(rank, l, format),
        Command::Mu { n, l, k, p, check } => mu(n, l, k, p, check),
        Command::Verify {
            suite,
            max_rank,
            max_l,
        } => {
            let report = run_suite(suite, max_rank, max_l);
            for o in &report.outcomes {
                println!("{o}");
            }
            if report.passed() {
                Ok(String::new())
            } else {
                Err(Failure {
                    code: 1,
                    message: "some properties failed".into(),
                })
            }
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
