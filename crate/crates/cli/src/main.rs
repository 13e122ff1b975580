use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfgc::discrete::FiniteGroup;
use hopfgc::double::{build_double, Form};
use hopfgc::hopf::{constant_family, kc2, sweedler, trivial_family, HopfGC};
use hopfgc::io::{emit, parse, Document, DoubleFile};
use hopfgc::suite::{check_document, check_forms, run_suite, Report, Suite, DEFAULT_SEED};
use hopfgc::{Error, Field};

#[derive(Parser)]
#[command(
    name = "hopfgc",
    version,
    about = "Exact checks and Drinfeld doubles for Hopf group-coalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed recorded in reports; every check is exhaustive.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Print every witness of a failed check instead of the first three.
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every validator that applies to the file's kind.
    Check {
        file: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Drinfeld double of a Hopf group-coalgebra file.
    Double {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormArg::Smash)]
        form: FormArg,
        /// Output file; with `--form both`, `NAME.smash.json` and
        /// `NAME.koppinen.json` are written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite on a double file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a demo Hopf group-coalgebra file.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
        #[arg(long, value_enum, default_value_t = GroupArg::E)]
        group: GroupArg,
        /// `rational` or `fp:P` for a prime P.
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Smash,
    Koppinen,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bialgebra,
    Hopf,
    Qt,
    Modules,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Trivial,
    Kc2,
    Sweedler4,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    E,
    C2,
    C3,
    S3,
}

/// Input problems (exit 2) versus failed checks (exit 1).
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::AntipodeMissing | Error::RMatrixMissing | Error::Validation(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Runs the command; `Ok(passed)` when a report was produced.
fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Check { file, out } => {
            let (bytes, doc) = load(file)?;
            let v = check_document(&doc);
            publish(cli, Report::new("check", doc.kind(), None, &bytes, &v), out.as_deref())
        }
        Command::Verify { file, suite, out } => {
            let (bytes, doc) = load(file)?;
            let suite = suite_of(*suite);
            let v = run_suite(&doc, suite)?;
            publish(
                cli,
                Report::new("verify", doc.kind(), Some(suite), &bytes, &v),
                out.as_deref(),
            )
        }
        Command::Double { file, form, out } => {
            let (bytes, doc) = load(file)?;
            let Document::HopfGC(h) = doc else {
                return Err(Failure::Input(format!(
                    "double needs a hopf_gc file, got {}",
                    doc.kind()
                )));
            };
            double(cli, &h, *form, &bytes, out.as_deref())
        }
        Command::Demo {
            name,
            group,
            field,
            out,
        } => {
            let field: Field = field.parse()?;
            let h = demo(*name, &group_of(*group), field)?;
            write_output(&emit(&Document::HopfGC(h)), out.as_deref())?;
            Ok(true)
        }
    }
}

fn load(path: &Path) -> Result<(Vec<u8>, Document), Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let doc = parse(text)?;
    Ok((bytes, doc))
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn publish(cli: &Cli, mut report: Report, out: Option<&Path>) -> Result<bool, Failure> {
    report.seed = cli.seed;
    let text = match cli.format {
        Format::Human => report.to_human(cli.full),
        Format::Json => report.to_json(),
    };
    write_output(&text, out)?;
    Ok(report.passed())
}

fn double(cli: &Cli, h: &HopfGC, form: FormArg, input: &[u8], out: Option<&Path>) -> Result<bool, Failure> {
    let single = match form {
        FormArg::Smash => Form::Smash,
        FormArg::Koppinen => Form::Koppinen,
        FormArg::Both => {
            let out = out.ok_or_else(|| Failure::Input("--form both needs --out".into()))?;
            let (smash, kop, v) = check_forms(h)?;
            for dd in [&smash, &kop] {
                let path = sibling(out, dd.form.name());
                write_output(
                    &emit(&Document::DrinfeldDouble(DoubleFile::from_double(dd))),
                    Some(&path),
                )?;
            }
            return publish(cli, Report::new("double", "hopf_gc", None, input, &v), None);
        }
    };
    let dd = build_double(h, single)?;
    write_output(&emit(&Document::DrinfeldDouble(DoubleFile::from_double(&dd))), out)?;
    Ok(true)
}

/// `dir/name.json` becomes `dir/name.<tag>.json`.
fn sibling(out: &Path, tag: &str) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "double".into());
    let ext = out
        .extension()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "json".into());
    out.with_file_name(format!("{stem}.{tag}.{ext}"))
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Bialgebra => Suite::Bialgebra,
        SuiteArg::Hopf => Suite::Hopf,
        SuiteArg::Qt => Suite::Qt,
        SuiteArg::Modules => Suite::Modules,
        SuiteArg::All => Suite::All,
    }
}

fn group_of(g: GroupArg) -> FiniteGroup {
    match g {
        GroupArg::E => FiniteGroup::trivial(),
        GroupArg::C2 => FiniteGroup::cyclic(2),
        GroupArg::C3 => FiniteGroup::cyclic(3),
        GroupArg::S3 => FiniteGroup::symmetric3(),
    }
}

fn demo(name: DemoName, group: &FiniteGroup, field: Field) -> Result<HopfGC, Error> {
    match name {
        DemoName::Trivial => Ok(trivial_family(field, group)),
        DemoName::Kc2 => constant_family(&kc2(field), group),
        DemoName::Sweedler4 => constant_family(&sweedler(field)?, group),
    }
}
