//! Command-line front end for the identity suites and constructions.
//!
//! Exit codes: 0 means the suite passed or the construction succeeded,
//! 1 means a verification suite found counterexamples, 2 means a usage or
//! input error. Diagnostics go to stderr; documents and reports to stdout.

use std::error::Error;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use homly_cli::{
    emit_algebra, emit_candidates, parse_algebra, parse_candidates, parse_map, render_report_json,
    render_report_text,
};
use homly_core::algebra::{random_algebra, Algebra, RandomOptions, TernaryTable};
use homly_core::construct::{
    hom_jacobian, lie_to_ly, probe_hom_ly_from_hom_malcev, triple_system_from_product, twist_ly,
    twist_malcev, twisted_derived_ternary, yau_twist,
};
use homly_core::morphism::{filter_endomorphisms, permutation_candidates, scalar_candidates};
use homly_core::rational::Rational;
use homly_core::report::{CheckOptions, CheckReport};
use homly_core::suites::{run_suite, B6Mode};

#[derive(Parser)]
#[command(
    name = "homly",
    version,
    about = "Exact identity checking and twisting constructions for binary-ternary Hom-algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an identity suite on an algebra file and report per-axiom verdicts.
    Verify {
        /// Algebra document; "-" reads stdin.
        #[arg(default_value = "-")]
        algebra: String,
        /// Suite id: ly, hom-ly, hom-ly-printed-b6, hom-nambu, hom-triple,
        /// hom-lts, hom-akivis, hom-lie, hom-malcev, eq44, eq45,
        /// multiplicativity or all.
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value_t = B6Arg::Strict)]
        b6: B6Arg,
        #[arg(long, default_value_t = 5)]
        max_counterexamples: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Build a derived operation and emit the resulting algebra document.
    Derive {
        #[arg(default_value = "-")]
        algebra: String,
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist an algebra along an endomorphism.
    Twist {
        #[arg(default_value = "-")]
        algebra: String,
        /// Map document for the twisting endomorphism.
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long, value_enum, default_value_t = TwistMode::Thm31)]
        mode: TwistMode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Filter a candidate family down to the endomorphisms of an algebra.
    #[command(group(
        ArgGroup::new("source")
            .required(true)
            .args(["candidates", "permutations", "scalars"])
    ))]
    Endos {
        #[arg(default_value = "-")]
        algebra: String,
        /// Candidate-set document to filter.
        #[arg(long)]
        candidates: Option<PathBuf>,
        /// Generate all permutation matrices of the algebra's dimension.
        #[arg(long)]
        permutations: bool,
        /// With --permutations: signed permutations.
        #[arg(long, requires = "permutations")]
        signed: bool,
        /// Comma-separated rationals c, generating the maps c*id.
        #[arg(long, allow_hyphen_values = true)]
        scalars: Option<String>,
        /// Keep only maps commuting with the algebra's twisting map.
        #[arg(long)]
        commute: bool,
    },
    /// Attach the twisted derived ternary to a twisted-Malcev algebra and
    /// report which twisted Lie-Yamaguti axioms hold.
    Probe {
        #[arg(default_value = "-")]
        algebra: String,
    },
    /// Emit a seeded random algebra document.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        /// Force the binary table antisymmetric with zero diagonal.
        #[arg(long)]
        skew: bool,
        /// Also generate a ternary table.
        #[arg(long)]
        ternary: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum B6Arg {
    Strict,
    Printed,
}

impl From<B6Arg> for B6Mode {
    fn from(arg: B6Arg) -> B6Mode {
        match arg {
            B6Arg::Strict => B6Mode::Strict,
            B6Arg::Printed => B6Mode::Printed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Triple system from the commutator and twisted associator.
    Prop24,
    /// Classical derived ternary of a Malcev product (verified Malcev).
    Cor33,
    /// Twisted derived ternary attached alongside the binary operation.
    Eq41,
    /// Adjoint ternary {x,y,z} = [[x,y],z] of a Lie algebra.
    LieLy,
    /// Twisted Jacobian as a ternary-only algebra.
    JAlpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistMode {
    /// Yau twist of a twisted algebra along a commuting endomorphism.
    Thm31,
    /// Twist of a classical Lie-Yamaguti algebra (input verified).
    Cor32,
    /// Twist of a Malcev algebra, ternary derived from the binary.
    Cor33,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Box<dyn Error>> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?)
    }
}

fn load_algebra(path: &str) -> Result<Algebra, Box<dyn Error>> {
    Ok(parse_algebra(&read_input(path)?)?)
}

fn write_output(doc: String, output: Option<&PathBuf>) -> Result<(), Box<dyn Error>> {
    match output {
        Some(path) => fs::write(path, doc).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{doc}"),
    }
    Ok(())
}

fn suite_exit(report: &CheckReport) -> ExitCode {
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Box<dyn Error>> {
    match cmd {
        Cmd::Verify {
            algebra,
            suite,
            b6,
            max_counterexamples,
            format,
        } => {
            let a = load_algebra(&algebra)?;
            let opts = CheckOptions {
                max_counterexamples,
            };
            let report = run_suite(&a, &suite, b6.into(), &opts)?;
            let rendered = match format {
                FormatArg::Text => render_report_text(&report),
                FormatArg::Json => render_report_json(&report),
            };
            print!("{rendered}");
            Ok(suite_exit(&report))
        }

        Cmd::Derive {
            algebra,
            construction,
            output,
        } => {
            let a = load_algebra(&algebra)?;
            let derived = match construction {
                Construction::Prop24 => triple_system_from_product(&a)?,
                Construction::Cor33 => {
                    twist_malcev(&a, &homly_core::linalg::LinearMap::identity(a.dim()))?
                        .with_name(format!("{}-derived-ly", a.name()))
                }
                Construction::Eq41 => {
                    let ternary: TernaryTable = twisted_derived_ternary(&a)?;
                    Algebra::new(
                        format!("{}-derived-homly", a.name()),
                        a.dim(),
                        Some(a.require_binary("derive eq41")?.clone()),
                        Some(ternary),
                    )?
                    .with_basis(a.basis().to_vec())?
                    .with_alpha(a.alpha().clone())?
                }
                Construction::LieLy => lie_to_ly(&a)?,
                Construction::JAlpha => {
                    let ternary = hom_jacobian(&a)?;
                    Algebra::new(
                        format!("{}-jacobian", a.name()),
                        a.dim(),
                        None,
                        Some(ternary),
                    )?
                    .with_basis(a.basis().to_vec())?
                    .with_alpha(a.alpha().clone())?
                }
            };
            write_output(emit_algebra(&derived), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Twist {
            algebra,
            morphism,
            mode,
            output,
        } => {
            let a = load_algebra(&algebra)?;
            let beta = parse_map(
                &fs::read_to_string(&morphism)
                    .map_err(|e| format!("{}: {e}", morphism.display()))?,
            )?;
            let twisted = match mode {
                TwistMode::Thm31 => yau_twist(&a, &beta)?,
                TwistMode::Cor32 => twist_ly(&a, &beta)?,
                TwistMode::Cor33 => twist_malcev(&a, &beta)?,
            };
            write_output(emit_algebra(&twisted), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Endos {
            algebra,
            candidates,
            permutations,
            signed,
            scalars,
            commute,
        } => {
            let a = load_algebra(&algebra)?;
            let family = if let Some(path) = candidates {
                parse_candidates(
                    &fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?,
                )?
            } else if permutations {
                permutation_candidates(a.dim(), signed, None)?
            } else {
                let values = parse_scalar_list(&scalars.expect("clap group guarantees a source"))?;
                scalar_candidates(a.dim(), &values)
            };
            let total = family.len();
            let kept = filter_endomorphisms(&a, &family, commute)?;
            eprintln!("retained {} of {} candidates", kept.len(), total);
            print!("{}", emit_candidates(&kept));
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Probe { algebra } => {
            let a = load_algebra(&algebra)?;
            let report = probe_hom_ly_from_hom_malcev(&a, &CheckOptions::default())?;
            print!("{}", render_report_text(&report));
            Ok(suite_exit(&report))
        }

        Cmd::Random {
            dim,
            seed,
            skew,
            ternary,
            output,
        } => {
            let a = random_algebra(
                dim,
                seed,
                RandomOptions {
                    skew_binary: skew,
                    with_ternary: ternary,
                    random_alpha: false,
                },
            );
            write_output(emit_algebra(&a), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_scalar_list(text: &str) -> Result<Vec<Rational>, Box<dyn Error>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<Rational>()
                .map_err(|e| format!("scalar {s:?}: {e}").into())
        })
        .collect()
}
