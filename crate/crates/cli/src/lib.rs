//! Command-line front end for `redlime`.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! whatever would go to stdout and stderr, so the binary and the tests share
//! one code path.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 domain (including "no" answers
//! from `member`, `feasible`, and failed checks in `atlas` and `verify`).

mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use redlime::format::{parse_row, render_file, render_rows};
use redlime::oracle::{enumerate_subspaces, Budget};
use redlime::{
    complement, is_feasible, signature, synthesize, Error, Field, FieldSpec, Fp, Matrix,
    MatrixFile, Rational, Signature, Subspace, Vector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "redlime",
    version,
    about = "Exact subspace and matrix computations over Q and GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Red basis of the span of the rows
    RedBasis { file: PathBuf },
    /// Lime basis of the span of the rows
    LimeBasis { file: PathBuf },
    /// Reduced row echelon form
    Rref { file: PathBuf },
    /// Reduced column echelon form
    Rcef { file: PathBuf },
    /// Rank of the matrix
    Rank { file: PathBuf },
    /// Red basis of {X : A·X = 0}
    Nullspace { file: PathBuf },
    /// Red basis of the orthogonal complement of the span of the rows
    Complement { file: PathBuf },
    /// Membership of a vector in the span of the rows, with coordinates
    Member {
        file: PathBuf,
        /// Whitespace-separated entries, e.g. "1 0 1"
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// ρ/λ/β/ν signature of the span of the rows, written with r/l/b/n
    Signature { file: PathBuf },
    /// Whether a signature is realized by some subspace
    Feasible { signature: String },
    /// Generators of a subspace with the given signature
    Synthesize {
        signature: String,
        /// `q` or `gf <p>`
        #[arg(long, num_args = 1..=2, value_name = "FIELD")]
        field: Option<Vec<String>>,
    },
    /// Full rank, RCEF or RREF factorization
    Factor {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: FactorKind,
        /// Complete the square factor to an invertible matrix
        #[arg(long)]
        complete: bool,
    },
    /// Signature census of every subspace of GF(p)^n
    Atlas {
        n: usize,
        p: u64,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
    },
    /// Cross-check the library against brute-force oracles on a file
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FactorKind {
    Full,
    Rref,
    Rcef,
}

/// Text for stdout plus the exit code it should be reported with.
struct Reply {
    text: String,
    code: i32,
}

impl Reply {
    fn ok(text: String) -> Self {
        Reply {
            text,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Resource(_) => EXIT_USAGE,
        Error::Parse(_) => EXIT_PARSE,
        Error::Domain(_) => EXIT_DOMAIN,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(reply) => Outcome {
            code: reply.code,
            stdout: reply.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_file(path: &PathBuf) -> redlime::Result<MatrixFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    MatrixFile::parse(&text)
}

fn execute(command: Command) -> redlime::Result<Reply> {
    match command {
        Command::Feasible { signature } => {
            let sig: Signature = signature.parse()?;
            Ok(if is_feasible(&sig) {
                Reply::ok("yes\n".into())
            } else {
                Reply {
                    text: "no\n".into(),
                    code: EXIT_DOMAIN,
                }
            })
        }
        Command::Synthesize { signature, field } => {
            let sig: Signature = signature.parse()?;
            let spec = match field {
                None => FieldSpec::Prime(2),
                Some(words) => words.join(" ").parse()?,
            };
            match spec {
                FieldSpec::Rationals => synthesize_cmd::<Rational>(&sig, spec),
                FieldSpec::Prime(_) => synthesize_cmd::<Fp>(&sig, spec),
            }
            .map(Reply::ok)
        }
        Command::Atlas { n, p, budget } => atlas(n, p, Budget(budget)),
        Command::Verify { file, seed } => {
            let file = read_file(&file)?;
            let report = match file.spec {
                FieldSpec::Rationals => verify::common::<Rational>(&file, seed)?,
                FieldSpec::Prime(_) => {
                    let mut report = verify::common::<Fp>(&file, seed)?;
                    verify::finite(&file, &mut report)?;
                    report
                }
            };
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            };
            Ok(Reply {
                text: report.render(seed),
                code,
            })
        }
        other => {
            let file = read_file(other.file())?;
            match file.spec {
                FieldSpec::Rationals => on_file::<Rational>(&other, &file),
                FieldSpec::Prime(_) => on_file::<Fp>(&other, &file),
            }
        }
    }
}

impl Command {
    fn file(&self) -> &PathBuf {
        match self {
            Command::RedBasis { file }
            | Command::LimeBasis { file }
            | Command::Rref { file }
            | Command::Rcef { file }
            | Command::Rank { file }
            | Command::Nullspace { file }
            | Command::Complement { file }
            | Command::Member { file, .. }
            | Command::Signature { file }
            | Command::Factor { file, .. }
            | Command::Verify { file, .. } => file,
            Command::Feasible { .. } | Command::Synthesize { .. } | Command::Atlas { .. } => {
                unreachable!("command takes no file")
            }
        }
    }
}

fn index_list(indices: &[usize]) -> String {
    if indices.is_empty() {
        return "none".into();
    }
    indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// A basis as a re-parseable file, headed by a comment naming its indices.
/// The empty basis is written as one zero row so the file still parses and
/// spans the same (zero) subspace.
fn render_basis<F: Field>(
    kind: &str,
    indices: &[usize],
    spec: FieldSpec,
    n: usize,
    rows: &[Vector<F>],
) -> String {
    let zero = [Vector::zero(spec, n)];
    let rows = if rows.is_empty() { &zero[..] } else { rows };
    format!(
        "# {kind} indices: {}\n{}",
        index_list(indices),
        render_file(spec, rows)
    )
}

fn render_red<F: Field>(w: &Subspace<F>) -> String {
    render_basis("red", w.red_indices(), w.spec(), w.ambient(), w.red_basis())
}

fn render_matrix<F: Field>(label: &str, a: &Matrix<F>) -> String {
    format!(
        "# {label} ({}x{})\n{}",
        a.nrows(),
        a.ncols(),
        render_file(a.spec(), &a.rows())
    )
}

fn on_file<F: Field>(command: &Command, file: &MatrixFile) -> redlime::Result<Reply> {
    let a: Matrix<F> = file.to_matrix()?;
    let spec = file.spec;
    let text = match command {
        Command::RedBasis { .. } => render_red(&a.row_space()),
        Command::LimeBasis { .. } => {
            let lime = a.row_space().lime_basis();
            render_basis("lime", lime.indices(), spec, lime.ambient(), lime.vectors())
        }
        Command::Rref { .. } => render_file(spec, &a.rref().rows()),
        Command::Rcef { .. } => render_file(spec, &a.rcef().rows()),
        Command::Rank { .. } => format!("{}\n", a.rank()),
        Command::Nullspace { .. } => render_red(&a.nullspace()),
        Command::Complement { .. } => render_red(&complement(&a.row_space())),
        Command::Signature { .. } => format!("{}\n", signature(&a.row_space())),
        Command::Member { vector, .. } => {
            let w = a.row_space();
            let x: Vector<F> = parse_row(vector, spec)?;
            if !w.contains(&x)? {
                return Ok(Reply {
                    text: "no\n".into(),
                    code: EXIT_DOMAIN,
                });
            }
            let mut text = String::from("yes\ncoordinates:");
            for c in w.coordinates(&x)? {
                write!(text, " {c}").unwrap();
            }
            text.push('\n');
            text
        }
        Command::Factor { kind, complete, .. } => factor(&a, *kind, *complete)?,
        _ => unreachable!("handled in execute"),
    };
    Ok(Reply::ok(text))
}

fn factor<F: Field>(a: &Matrix<F>, kind: FactorKind, complete: bool) -> redlime::Result<String> {
    let blocks = match kind {
        FactorKind::Full => {
            if complete {
                return Err(Error::Usage(
                    "--complete applies to the rref and rcef factorizations only".into(),
                ));
            }
            let f = a.full_rank_factorization()?;
            [render_matrix("B", &f.b), render_matrix("G", &f.g)]
        }
        FactorKind::Rcef => {
            let (c, s) = a.rcef_factorization(complete)?;
            [render_matrix("RCEF", &c), render_matrix("S", &s)]
        }
        FactorKind::Rref => {
            let (t, r) = a.rref_factorization(complete)?;
            [render_matrix("T", &t), render_matrix("RREF", &r)]
        }
    };
    Ok(blocks.join("\n"))
}

fn synthesize_cmd<F: Field>(sig: &Signature, spec: FieldSpec) -> redlime::Result<String> {
    let w: Subspace<F> = synthesize(sig, spec)?;
    let rows = if w.is_zero() {
        vec![Vector::zero(spec, sig.len())]
    } else {
        w.red_basis().to_vec()
    };
    Ok(format!(
        "# signature: {sig}\nfield {spec}\n{}",
        render_rows(&rows)
    ))
}

fn atlas(n: usize, p: u64, budget: Budget) -> redlime::Result<Reply> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let spec = FieldSpec::prime(p).map_err(|e| Error::Usage(e.message().to_owned()))?;
    let mut census: BTreeMap<String, u64> = BTreeMap::new();
    for w in enumerate_subspaces::<Fp>(spec, n, budget)? {
        *census.entry(signature(&w).to_string()).or_default() += 1;
    }
    let realized: Vec<&String> = census.keys().collect();
    let mut feasible: Vec<String> = Signature::all_of_length(n)
        .filter(is_feasible)
        .map(|s| s.to_string())
        .collect();
    feasible.sort();
    let ok =
        realized.len() == feasible.len() && realized.iter().zip(&feasible).all(|(a, b)| *a == b);

    let mut text = String::new();
    for (sig, count) in &census {
        writeln!(text, "{sig} {count}").unwrap();
    }
    writeln!(
        text,
        "characterization: {}",
        if ok { "OK" } else { "FAILED" }
    )
    .unwrap();
    Ok(Reply {
        text,
        code: if ok { EXIT_OK } else { EXIT_DOMAIN },
    })
}
