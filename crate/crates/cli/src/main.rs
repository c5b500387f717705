use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quasihom_cli::output::{count_json, profile_csv, profile_json, profile_records, CountRecord};
use quasihom_cli::verify::{errata_csv, run as run_verify, VerifyConfig};
use quasihom_core::bruteforce::count_by_class;
use quasihom_core::closed_form::{hom_by_family, partial_profile};
use quasihom_core::graph::{make_family, quasi_complete_graph};
use quasihom_core::poly::{gap_polynomial_rec, GapKind};
use quasihom_core::transfer::{cyclic_hom_count, hub_conditioned_count, linear_hom_count, RimKind};
use quasihom_core::{BigInt, Count, Family, FamilySpec, HomClass};

#[derive(Parser)]
#[command(
    name = "quasihom",
    about = "Exact homomorphism counts into complete graphs with one edge removed",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count homomorphisms from one source graph into a quasi-complete target.
    Count {
        /// Source family: complete, quasi-complete, path, cycle, broken-wheel, wheel.
        #[arg(long)]
        family: String,
        /// Size parameter of the source family.
        #[arg(long)]
        n: usize,
        /// Target size: the quasi-complete graph on m vertices.
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::Hom)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Emit the closed-form profile table for several families at once.
    Profile {
        #[arg(long)]
        m: usize,
        /// Comma-separated family names.
        #[arg(long)]
        families: String,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full equivalence sweep and write the reconciliation report.
    Verify {
        #[arg(long = "n-max", default_value_t = 7)]
        n_max: usize,
        #[arg(long = "m-max", default_value_t = 6)]
        m_max: usize,
        #[arg(long = "transfer-n-max", default_value_t = 18)]
        transfer_n_max: usize,
        /// Destination of the reconciliation CSV.
        #[arg(long, default_value = "errata.csv")]
        errata: PathBuf,
    },
    /// Print a gap polynomial, optionally evaluated at an integer.
    Poly {
        /// Series name: p (interior gaps) or q (boundary gaps).
        #[arg(long)]
        kind: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        eval: Option<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Hom,
    Inj,
    Sur,
    Bij,
}

impl ClassArg {
    fn hom_class(self) -> HomClass {
        match self {
            ClassArg::Hom => HomClass::All,
            ClassArg::Inj => HomClass::Injective,
            ClassArg::Sur => HomClass::Surjective,
            ClassArg::Bij => HomClass::Bijective,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ClassArg::Hom => "hom",
            ClassArg::Inj => "inj",
            ClassArg::Sur => "sur",
            ClassArg::Bij => "bij",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Bruteforce,
    Transfer,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Closed => "closed",
            MethodArg::Bruteforce => "bruteforce",
            MethodArg::Transfer => "transfer",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

/// Failure with its process exit code: 1 verification, 2 usage, 3 I/O.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<quasihom_core::Error> for Failure {
    fn from(err: quasihom_core::Error) -> Self {
        Failure::usage(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count {
            family,
            n,
            m,
            class,
            method,
            format,
        } => cmd_count(&family, n, m, class, method, format),
        Command::Profile {
            m,
            families,
            n_max,
            format,
            out,
        } => cmd_profile(m, &families, n_max, format, out.as_deref()),
        Command::Verify {
            n_max,
            m_max,
            transfer_n_max,
            errata,
        } => cmd_verify(
            VerifyConfig {
                n_max,
                m_max,
                transfer_n_max,
            },
            &errata,
        ),
        Command::Poly { kind, i, eval } => cmd_poly(&kind, i, eval),
    }
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    Family::parse(name).ok_or_else(|| {
        Failure::usage(format!(
            "unknown family {name:?}; expected one of complete, quasi-complete, path, cycle, broken-wheel, wheel"
        ))
    })
}

fn cmd_count(
    family: &str,
    n: usize,
    m: usize,
    class: ClassArg,
    method: MethodArg,
    format: TextFormat,
) -> Result<(), Failure> {
    let family = parse_family(family)?;
    let spec = FamilySpec::new(family, n);
    spec.validate()?;
    if m < 3 {
        return Err(quasihom_core::Error::TargetSize { m }.into());
    }
    let count: Count = match method {
        MethodArg::Closed => hom_by_family(&spec, m, class.hom_class())?,
        MethodArg::Bruteforce => {
            let source = make_family(&spec)?;
            let target = quasi_complete_graph(m)?;
            count_by_class(&source, &target, class.hom_class())
        }
        MethodArg::Transfer => {
            if matches!(family, Family::Complete | Family::QuasiComplete) {
                return Err(Failure::usage("method unsupported for family"));
            }
            if class != ClassArg::Hom {
                return Err(Failure::usage(
                    "method transfer computes total counts only; use --class hom",
                ));
            }
            let target = quasi_complete_graph(m)?;
            match family {
                Family::Path => linear_hom_count(&target, n),
                Family::Cycle => cyclic_hom_count(&target, n),
                Family::BrokenWheel => hub_conditioned_count(&target, n, RimKind::Path),
                Family::Wheel => hub_conditioned_count(&target, n, RimKind::Cycle),
                _ => unreachable!(),
            }
        }
    };
    match format {
        TextFormat::Text => println!("{count}"),
        TextFormat::Json => {
            let record = CountRecord {
                family: family.name().to_string(),
                n,
                m,
                class: class.name().to_string(),
                method: method.name().to_string(),
                count: count.to_string(),
            };
            print!("{}", count_json(&record));
        }
    }
    Ok(())
}

fn cmd_profile(
    m: usize,
    families: &str,
    n_max: usize,
    format: TableFormat,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let mut specs = Vec::new();
    for name in families.split(',') {
        let family = parse_family(name.trim())?;
        for n in family.min_size()..=n_max {
            specs.push(FamilySpec::new(family, n));
        }
    }
    let table = partial_profile(m, &specs)?;
    let records = profile_records(&table, "closed");
    let rendered = match format {
        TableFormat::Csv => profile_csv(&records),
        TableFormat::Json => profile_json(&records),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn cmd_verify(config: VerifyConfig, errata_path: &std::path::Path) -> Result<(), Failure> {
    let report = run_verify(&config);
    for property in &report.properties {
        match &property.failure {
            None => println!("{}: ok ({} checks)", property.name, property.checks),
            Some(tuple) => println!("{}: FAIL {}", property.name, tuple),
        }
    }
    std::fs::write(errata_path, errata_csv(&report.errata))
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", errata_path.display())))?;
    println!(
        "printed deltas documented: {} of {} reconciliation rows ({})",
        report.delta_count(),
        report.errata.len(),
        errata_path.display()
    );
    if let Some(first) = report.first_failure() {
        return Err(Failure::verification(format!(
            "{}: {}",
            first.name,
            first.failure.clone().unwrap_or_default()
        )));
    }
    Ok(())
}

fn cmd_poly(kind: &str, i: usize, eval: Option<i64>) -> Result<(), Failure> {
    let kind = GapKind::parse(kind)
        .ok_or_else(|| Failure::usage(format!("unknown series {kind:?}; expected p or q")))?;
    let poly = gap_polynomial_rec(kind, i);
    let mut line = String::new();
    write!(line, "{:?}  (= {})", poly.coefficient_list(), poly.render()).unwrap();
    println!("{line}");
    if let Some(at) = eval {
        let value = poly.eval(&BigInt::from(at));
        println!("{}_{}({}) = {}", kind.series_name(), i, at, value);
    }
    Ok(())
}
