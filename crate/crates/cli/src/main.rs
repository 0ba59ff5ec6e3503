//! Command-line front end: category-file I/O, computations, enumeration,
//! verification, and report emission.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 unknown label, 4 resource budget exceeded. Identical invocations
//! produce byte-identical output; the seed only affects sampled sweeps and
//! is reported whenever sampling runs.

mod report;
mod schema;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fusion_atlas::atlas;
use fusion_atlas::codes::{
    admissible, enumerate_admissible, BinaryCode, DEFAULT_ENUMERATION_BOUND,
};
use fusion_atlas::deligne::{power, product};
use fusion_atlas::extension::{build_extension, current_family};
use fusion_atlas::validate::{ValidationOptions, DEFAULT_SEED};
use fusion_atlas::verify::{verify_category, verify_sf_plus, verify_w2};
use fusion_atlas::{CategoryData, Label};

/// Default cap on the label count a command may materialize.
const DEFAULT_MAX_LABELS: usize = 512;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN_LABEL: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "fusion-atlas",
    version,
    about = "Exact fusion-data computations: atlases, products, codes, extensions"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for sampled validation sweeps.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
    /// Largest label count a command may materialize.
    #[arg(long, global = true, value_name = "INT")]
    max_labels: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a shipped atlas entry as canonical category JSON.
    Atlas {
        /// Entry key: `w2`, `sf-plus`, or `power`.
        key: String,
        /// Dimension for `sf-plus` and `power`.
        #[arg(long, value_name = "INT")]
        d: Option<usize>,
    },
    /// Fuse two labels of a category file.
    Fuse { file: PathBuf, a: String, b: String },
    /// Product datum of two category files.
    Deligne { file_a: PathBuf, file_b: PathBuf },
    /// Iterated product of a category file with itself.
    Power {
        file: PathBuf,
        #[arg(long, value_name = "INT")]
        d: usize,
    },
    /// Binary linear code admissibility.
    Codes {
        #[command(subcommand)]
        command: CodesCommand,
    },
    /// Simple-current extension of a category file along a code.
    Extend {
        file: PathBuf,
        /// Code generator, comma-separated elements; repeatable.
        #[arg(long = "code", value_name = "SET")]
        code: Vec<String>,
    },
    /// Run a verification suite and print PASS/FAIL per clause.
    Verify {
        /// `w2`, `sf-plus`, or a category file path.
        target: String,
        /// Dimension for `sf-plus`.
        #[arg(long, value_name = "INT")]
        d: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CodesCommand {
    /// Enumerate all admissible codes for the given weights.
    Enumerate {
        #[arg(long, value_name = "INT")]
        d: usize,
        /// Comma-separated triplet parameters, e.g. `2,2`.
        #[arg(long, value_name = "LIST")]
        p: String,
    },
    /// Check one code against the admissibility conditions.
    Check {
        #[arg(long, value_name = "INT")]
        d: usize,
        #[arg(long, value_name = "LIST")]
        p: String,
        /// Code generator, comma-separated elements; repeatable.
        #[arg(long = "gen", value_name = "SET")]
        gen: Vec<String>,
    },
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn from_engine(e: fusion_atlas::Error) -> Failure {
        let code = match e {
            fusion_atlas::Error::UnknownLabel { .. } => EXIT_UNKNOWN_LABEL,
            fusion_atlas::Error::OverBound { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::usage(format!("{e:#}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn emit(cli: &Cli, text: String) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_category(cli: &Cli, cat: &CategoryData) -> Result<(), Failure> {
    let file = schema::export(cat)?;
    emit(cli, schema::to_json_string(&file)?)
}

fn parse_weights(p: &str) -> Result<Vec<i64>, Failure> {
    p.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Failure::usage(format!("bad weight `{tok}`")))
        })
        .collect()
}

fn parse_generators(gens: &[String]) -> Result<Vec<BTreeSet<usize>>, Failure> {
    gens.iter()
        .map(|g| {
            g.split(',')
                .filter(|tok| !tok.trim().is_empty())
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Failure::usage(format!("bad generator element `{tok}`")))
                })
                .collect()
        })
        .collect()
}

fn budget(cli: &Cli, labels: usize) -> Result<(), Failure> {
    let max = cli.max_labels.unwrap_or(DEFAULT_MAX_LABELS);
    if labels > max {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!(
                "{labels} labels exceed the budget of {max} (raise with --max-labels)"
            ),
        });
    }
    Ok(())
}

fn validation_options(cli: &Cli) -> ValidationOptions {
    ValidationOptions {
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        ..ValidationOptions::default()
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Atlas { key, d } => {
            let entry_key = match key.as_str() {
                "w2" => String::from("w2"),
                "sf-plus" => format!(
                    "sf_plus:{}",
                    d.ok_or_else(|| Failure::usage("sf-plus requires --d"))?
                ),
                "power" => format!(
                    "power:{}",
                    d.ok_or_else(|| Failure::usage("power requires --d"))?
                ),
                other => return Err(Failure::usage(format!("unknown atlas key `{other}`"))),
            };
            let entry = atlas::atlas_entry(&entry_key).map_err(Failure::from_engine)?;
            budget(cli, entry.category().len())?;
            // Atlas exports embed the entry's provenance in the facts array.
            let mut file = schema::export(entry.category())?;
            for p in &entry.provenance {
                if !file.facts.contains(p) {
                    file.facts.push(p.clone());
                }
            }
            emit(cli, schema::to_json_string(&file)?)?;
            Ok(0)
        }

        Command::Fuse { file, a, b } => {
            let cat = schema::load_category(file)?;
            let la = Label::parse(a).map_err(Failure::from_engine)?;
            let lb = Label::parse(b).map_err(Failure::from_engine)?;
            let sum = cat.fuse_labels(&la, &lb).map_err(Failure::from_engine)?;
            if cli.json {
                emit(cli, schema::to_json_string(&schema::sum_to_map(&sum))?)?;
            } else {
                emit(cli, format!("{sum}\n"))?;
            }
            Ok(0)
        }

        Command::Deligne { file_a, file_b } => {
            let a = schema::load_category(file_a)?;
            let b = schema::load_category(file_b)?;
            budget(cli, a.len().saturating_mul(b.len()))?;
            let prod = product(&a, &b).map_err(Failure::from_engine)?;
            emit_category(cli, &prod)?;
            Ok(0)
        }

        Command::Power { file, d } => {
            let cat = schema::load_category(file)?;
            let labels = cat
                .len()
                .checked_pow(u32::try_from(*d).unwrap_or(u32::MAX))
                .unwrap_or(usize::MAX);
            budget(cli, labels)?;
            let powered = power(&cat, *d).map_err(Failure::from_engine)?;
            emit_category(cli, &powered)?;
            Ok(0)
        }

        Command::Codes { command } => run_codes(cli, command),

        Command::Extend { file, code } => {
            let base = schema::load_category(file)?;
            let d = base.label_arity();
            let generators = parse_generators(code)?;
            let code = BinaryCode::span(d, &generators).map_err(Failure::from_engine)?;
            let family = current_family(&base, &code).map_err(Failure::from_engine)?;
            let ext = build_extension(family).map_err(Failure::from_engine)?;
            budget(cli, ext.category().len())?;
            let report = report::extension_report(&ext)?;
            if cli.json {
                emit(cli, schema::to_json_string(&report)?)?;
            } else {
                emit(cli, report::extension_text(&report))?;
            }
            Ok(if report.verification.passed {
                0
            } else {
                EXIT_VERIFICATION
            })
        }

        Command::Verify { target, d } => {
            let verify_report = match target.as_str() {
                "w2" => verify_w2(),
                "sf-plus" => {
                    let d = d.ok_or_else(|| Failure::usage("sf-plus requires --d"))?;
                    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
                    verify_sf_plus(d, seed).map_err(Failure::from_engine)?
                }
                path => {
                    let cat = schema::load_category(std::path::Path::new(path))?;
                    verify_category(&cat, &validation_options(cli))
                }
            };
            if cli.json {
                emit(
                    cli,
                    schema::to_json_string(&report::VerifyJson::from_report(&verify_report))?,
                )?;
            } else {
                emit(cli, report::verify_text(&verify_report))?;
            }
            Ok(if verify_report.passed() {
                0
            } else {
                EXIT_VERIFICATION
            })
        }
    }
}

fn run_codes(cli: &Cli, command: &CodesCommand) -> Result<u8, Failure> {
    match command {
        CodesCommand::Enumerate { d, p } => {
            let p = parse_weights(p)?;
            let found = enumerate_admissible(*d, &p, DEFAULT_ENUMERATION_BOUND)
                .map_err(Failure::from_engine)?;
            if cli.json {
                let codes: Vec<report::CodeJson> =
                    found.iter().map(report::CodeJson::from_code).collect();
                emit(cli, schema::to_json_string(&codes)?)?;
            } else {
                let mut text = format!("admissible codes for d={d}, p={p:?}: {}\n", found.len());
                for code in &found {
                    text.push_str(&format!(
                        "  rank={} codewords={:?}\n",
                        code.rank(),
                        code.codewords()
                    ));
                }
                emit(cli, text)?;
            }
            Ok(0)
        }
        CodesCommand::Check { d, p, gen } => {
            let p = parse_weights(p)?;
            let generators = parse_generators(gen)?;
            let code = BinaryCode::span(*d, &generators).map_err(Failure::from_engine)?;
            let verdict = admissible(&code, &p).map_err(Failure::from_engine)?;
            if cli.json {
                #[derive(serde::Serialize)]
                struct CheckJson {
                    code: report::CodeJson,
                    admissibility: report::AdmissibilityJson,
                }
                let out = CheckJson {
                    code: report::CodeJson::from_code(&code),
                    admissibility: report::AdmissibilityJson::from_report(&verdict),
                };
                emit(cli, schema::to_json_string(&out)?)?;
            } else {
                emit(cli, report::admissibility_text(&p, &code, &verdict))?;
            }
            Ok(0)
        }
    }
}
