use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hemiring::congruence::all_congruences;
use hemiring::constructions::{
    corner, enumerate_hemirings, enumerate_semilattices, is_full_idempotent, matrix_semiring,
    Catalog, HemiringConstraints,
};
use hemiring::hemiring::check_hemiring_axioms;
use hemiring::ideal::all_ideals;
use hemiring::lattice::{build_e_m, build_f_m, semilattice_violation, try_lattice};
use hemiring::{AlgebraError, FiniteHemiring, FiniteSemilattice, Side};
use hemiring_cli::catalog::{write_hemiring_catalog, write_semilattice_catalog};
use hemiring_cli::classify::classify;
use hemiring_cli::format::{parse, parse_tables, write_hemiring, AlgebraFile, ParseError};
use hemiring_cli::report::{Format, Verdict};
use hemiring_cli::suites::{run_suite, SuiteError, SuiteOptions, SUITES};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hemiring",
    version,
    about = "Finite hemiring and semiring workbench"
)]
struct Cli {
    /// Output format for reports and summaries.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a table file.
    Check { file: PathBuf },
    /// Print the structural predicates of a hemiring.
    Classify { file: PathBuf },
    /// Write E_M and F_M of a semilattice, with a distributivity report.
    Endo {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// List every congruence.
    Congruences { file: PathBuf },
    /// List every ideal of one side.
    Ideals {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
        side: SideArg,
    },
    /// Write a catalog of algebras up to isomorphism.
    Enumerate {
        kind: Kind,
        #[arg(long)]
        order: usize,
        /// Include every order from 1 up to `--order`.
        #[arg(long)]
        up_to: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        max_order: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corner semirings and matrix semirings.
    Morita {
        #[command(subcommand)]
        command: MoritaCommand,
    },
    /// Write M_n(R).
    Matrix {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MoritaCommand {
    /// Write the corner eRe of an idempotent.
    Corner {
        file: PathBuf,
        #[arg(long)]
        idempotent: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Semilattices,
    Hemirings,
    IdempotentHemirings,
    Semirings,
    IdempotentSemirings,
}

/// Exit code and message for a failed command.
struct Failure(u8, String);

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = if matches!(e, AlgebraError::SizeGuard { .. }) {
            EXIT_GUARD
        } else {
            EXIT_INPUT
        };
        Failure(code, e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Algebra(a) => a.into(),
            other => Failure(EXIT_INPUT, other.to_string()),
        }
    }
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Algebra(a) => a.into(),
            other => Failure(EXIT_INPUT, other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)
            .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_hemiring(path: &Path) -> Result<FiniteHemiring, Failure> {
    match parse(&read(path)?)? {
        AlgebraFile::Hemiring(r) => Ok(r),
        AlgebraFile::Semilattice(_) => Err(Failure(
            EXIT_INPUT,
            format!("{}: expected a hemiring file", path.display()),
        )),
    }
}

fn load_semilattice(path: &Path) -> Result<FiniteSemilattice, Failure> {
    match parse(&read(path)?)? {
        AlgebraFile::Semilattice(m) => Ok(m),
        AlgebraFile::Hemiring(_) => Err(Failure(
            EXIT_INPUT,
            format!("{}: expected `kind semilattice`", path.display()),
        )),
    }
}

fn check(path: &Path) -> Outcome {
    let t = parse_tables(&read(path)?)?;
    let mut out = String::new();
    let valid = match &t.mul {
        None => {
            let violation = semilattice_violation(&t.add, t.zero);
            let _ = writeln!(out, "kind: semilattice");
            let _ = writeln!(out, "order: {}", t.add.order());
            if let Some((axiom, w)) = violation {
                let _ = writeln!(out, "{}: fails at {w:?}", axiom.name());
            }
            violation.is_none()
        }
        Some(mul) => {
            let report = check_hemiring_axioms(&t.add, mul, t.zero, t.one)?;
            let _ = writeln!(
                out,
                "kind: {}",
                if t.one.is_some() {
                    "semiring"
                } else {
                    "hemiring"
                }
            );
            let _ = writeln!(out, "order: {}", t.add.order());
            for (axiom, w) in &report.checks {
                match w {
                    None => {
                        let _ = writeln!(out, "{}: ok", axiom.name());
                    }
                    Some(w) => {
                        let _ = writeln!(out, "{}: fails at {w:?}", axiom.name());
                    }
                }
            }
            report.is_ok()
        }
    };
    let _ = writeln!(out, "valid: {valid}");
    print!("{out}");
    Ok(if valid { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn endo(path: &Path, dir: &Path) -> Outcome {
    let m = load_semilattice(path)?;
    let e = build_e_m(&m);
    let f = build_f_m(&e);
    let lattice = try_lattice(&m);
    let witness = lattice.as_ref().and_then(|l| l.distributivity_witness());
    let mut report = String::new();
    let _ = writeln!(report, "m_order: {}", m.order());
    let _ = writeln!(report, "e_order: {}", e.as_hemiring().order());
    let _ = writeln!(report, "f_order: {}", f.as_hemiring().order());
    let _ = writeln!(report, "f_equals_e: {}", f.is_everything(&e));
    let _ = writeln!(report, "lattice: {}", lattice.is_some());
    let _ = writeln!(
        report,
        "distributive: {}",
        lattice.is_some() && witness.is_none()
    );
    if let Some(w) = witness {
        let _ = writeln!(report, "distributivity_witness: {w:?}");
    }
    write(
        &dir.join("E.txt"),
        &write_hemiring(e.as_hemiring(), &["E_M"]),
    )?;
    write(
        &dir.join("F.txt"),
        &write_hemiring(f.as_hemiring(), &["F_M"]),
    )?;
    write(&dir.join("report.txt"), &report)?;
    print!("{report}");
    Ok(0)
}

fn congruences(path: &Path) -> Outcome {
    let r = load_hemiring(path)?;
    let all = all_congruences(&r)?;
    let mut out = format!("congruences: {}\n", all.len());
    for c in &all {
        let classes: Vec<String> = c
            .classes()
            .iter()
            .map(|b| {
                format!(
                    "{{{}}}",
                    b.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        let _ = writeln!(out, "{}", classes.join(" "));
    }
    print!("{out}");
    Ok(0)
}

fn ideals(path: &Path, side: SideArg) -> Outcome {
    let r = load_hemiring(path)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
        SideArg::TwoSided => Side::TwoSided,
    };
    let all = all_ideals(&r, side)?;
    let mut out = format!("ideals: {}\n", all.len());
    for i in &all {
        let _ = writeln!(
            out,
            "{{{}}}",
            i.elements()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
    }
    print!("{out}");
    Ok(0)
}

fn select<T>(
    mut c: Catalog<T>,
    order: usize,
    up_to: bool,
    size: impl Fn(&T) -> usize,
) -> Catalog<T> {
    if !up_to {
        c.entries.retain(|e| size(&e.algebra) == order);
    }
    c
}

fn enumerate(kind: Kind, order: usize, up_to: bool, dir: &Path) -> Outcome {
    let io = |e: std::io::Error| Failure(EXIT_INPUT, format!("{}: {e}", dir.display()));
    let hemirings =
        |additively_idempotent, require_identity| -> Result<Catalog<FiniteHemiring>, Failure> {
            let c = enumerate_hemirings(
                order,
                HemiringConstraints {
                    additively_idempotent,
                    require_identity,
                },
            )?;
            Ok(select(c, order, up_to, FiniteHemiring::order))
        };
    let count = match kind {
        Kind::Semilattices => {
            let c = select(
                enumerate_semilattices(order)?,
                order,
                up_to,
                FiniteSemilattice::order,
            );
            write_semilattice_catalog(dir, &c).map_err(io)?
        }
        Kind::Hemirings => write_hemiring_catalog(dir, &hemirings(false, false)?).map_err(io)?,
        Kind::IdempotentHemirings => {
            write_hemiring_catalog(dir, &hemirings(true, false)?).map_err(io)?
        }
        Kind::Semirings => write_hemiring_catalog(dir, &hemirings(false, true)?).map_err(io)?,
        Kind::IdempotentSemirings => {
            write_hemiring_catalog(dir, &hemirings(true, true)?).map_err(io)?
        }
    };
    println!("entries: {count}");
    Ok(0)
}

fn verify(suite: &str, max_order: Option<usize>, format: Format, out: Option<&Path>) -> Outcome {
    let ids: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut text = String::new();
    let (mut counterexample, mut skipped) = (false, false);
    for id in ids {
        let report = run_suite(id, SuiteOptions { max_order })?;
        counterexample |= report.verdict == Verdict::Counterexample;
        skipped |= report.verdict == Verdict::Skipped;
        if !text.is_empty() && format == Format::Text {
            text.push('\n');
        }
        text.push_str(&report.render(format));
    }
    emit(out, &text)?;
    Ok(if counterexample {
        EXIT_COUNTEREXAMPLE
    } else if skipped {
        EXIT_GUARD
    } else {
        0
    })
}

fn morita_corner(path: &Path, e: usize, out: Option<&Path>) -> Outcome {
    let r = load_hemiring(path)?;
    let c = corner(&r, e)?;
    let full = is_full_idempotent(&r, e);
    let members = c
        .members()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let text = write_hemiring(
        c.as_hemiring(),
        &[
            &format!("corner of idempotent {e}"),
            &format!("full: {full}"),
            &format!("members: {members}"),
        ],
    );
    emit(out, &text)?;
    Ok(0)
}

fn matrix(path: &Path, n: usize, out: Option<&Path>) -> Outcome {
    let r = load_hemiring(path)?;
    let m = matrix_semiring(&r, n)?;
    emit(
        out,
        &write_hemiring(
            m.as_hemiring(),
            &[&format!("M_{n}(R), row-major entries base {}", r.order())],
        ),
    )?;
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Classify { file } => {
            print!("{}", classify(&load_hemiring(&file)?).render(cli.format));
            Ok(0)
        }
        Command::Endo { file, out } => endo(&file, &out),
        Command::Congruences { file } => congruences(&file),
        Command::Ideals { file, side } => ideals(&file, side),
        Command::Enumerate {
            kind,
            order,
            up_to,
            out,
        } => enumerate(kind, order, up_to, &out),
        Command::Verify {
            suite,
            max_order,
            out,
        } => verify(&suite, max_order, cli.format, out.as_deref()),
        Command::Morita {
            command:
                MoritaCommand::Corner {
                    file,
                    idempotent,
                    out,
                },
        } => morita_corner(&file, idempotent, out.as_deref()),
        Command::Matrix { file, n, out } => matrix(&file, n, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
