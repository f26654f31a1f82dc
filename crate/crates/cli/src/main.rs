//! Command-line front end for spherical-space invariant data.

mod format;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sphera_core::datum::ValidateOptions;
use sphera_core::equiv::{self, Equivalence};
use sphera_core::linalg::Subspace;
use sphera_core::rootsys::RootId;
use sphera_core::subspace::{self, ColoredSubspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sphera", version, about = "Combinatorial invariants of spherical homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct DatumArg {
    /// Path to a datum JSON file.
    datum: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the datum axioms; exit 0 when valid, 2 otherwise.
    Validate {
        #[command(flatten)]
        datum: DatumArg,
        /// Also require every color functional to be nonzero.
        #[arg(long)]
        quasiaffine: bool,
    },
    /// Full report: lattice, roots, types, doubled roots, automorphisms.
    Info {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Root-type table, distinguished roots, and the doubled root system.
    Roots {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Does a wonderful embedding exist? Exit 0 yes, 2 no.
    Wonderful {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Structure of the equivariant automorphism group.
    Automorphisms {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Dimension of the homogeneous space.
    Dimension {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Is the weight in the weight monoid? Exit 0 yes, 2 no.
    MonoidCheck {
        #[command(flatten)]
        datum: DatumArg,
        /// Ambient coordinates, comma-separated (e.g. "2,0").
        #[arg(long)]
        weight: String,
    },
    /// Localize to the standard Levi of the given simple roots.
    Localize {
        #[command(flatten)]
        datum: DatumArg,
        /// Comma-separated simple roots (e.g. "c0.a1,c0.a2").
        #[arg(long, default_value = "")]
        roots: String,
    },
    /// Quotient by the finite automorphism subgroup annihilating a sublattice.
    Quotient {
        #[command(flatten)]
        datum: DatumArg,
        /// Auxiliary JSON file with the sublattice basis.
        #[arg(long)]
        sublattice: PathBuf,
    },
    /// The wonderful-embedding cover datum.
    Wonderfulize {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Enumerate color-spanned colored subspaces, or test a given pair.
    Subspaces {
        #[command(flatten)]
        datum: DatumArg,
        /// Auxiliary JSON file with a subspace and color subset to test.
        #[arg(long)]
        test: Option<PathBuf>,
        /// Auxiliary JSON file with a central subspace added to every span.
        #[arg(long)]
        central_subspace: Option<PathBuf>,
    },
    /// Decide equivalence of two data; exit 0 equivalent, 2 different.
    Equiv {
        /// First datum file.
        a: PathBuf,
        /// Second datum file.
        b: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Validate { datum, quasiaffine } => {
            let d = format::load_datum(&datum.datum)?;
            let report = d.validate(ValidateOptions { quasiaffine: *quasiaffine });
            report::print_validation(&report, json)?;
            Ok(exit_bool(report.is_valid()))
        }
        Command::Info { datum } => {
            let d = format::load_datum(&datum.datum)?;
            report::print_info(&d, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { datum } => {
            let d = format::load_datum(&datum.datum)?;
            report::print_roots(&d, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wonderful { datum } => {
            let d = format::load_datum(&datum.datum)?;
            let yes = d.is_wonderful();
            report::print_bool("wonderful", yes, json)?;
            Ok(exit_bool(yes))
        }
        Command::Automorphisms { datum } => {
            let d = format::load_datum(&datum.datum)?;
            let auto = d.automorphism_structure().map_err(|e| anyhow!("{e}"))?;
            report::print_automorphisms(&auto, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dimension { datum } => {
            let d = format::load_datum(&datum.datum)?;
            let dim = d.dimension().map_err(|e| anyhow!("{e}"))?;
            report::print_dimension(dim, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::MonoidCheck { datum, weight } => {
            let d = format::load_datum(&datum.datum)?;
            let coords: Vec<sphera_core::Int> = weight
                .split(',')
                .map(|s| s.trim().parse::<i64>().map(sphera_core::Int::from))
                .collect::<Result<_, _>>()
                .context("parsing --weight")?;
            let yes = d.weight_monoid_contains(&coords).map_err(|e| anyhow!("{e}"))?;
            report::print_bool("in_weight_monoid", yes, json)?;
            Ok(exit_bool(yes))
        }
        Command::Localize { datum, roots } => {
            let d = format::load_datum(&datum.datum)?;
            let subset: std::collections::BTreeSet<RootId> = roots
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| format::parse_root_id(s.trim()))
                .collect::<Result<_>>()?;
            let loc = d.localize(&subset).map_err(|e| anyhow!("{e}"))?;
            println!("{}", format::datum_to_json(&loc.datum)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { datum, sublattice } => {
            let d = format::load_datum(&datum.datum)?;
            let sub = format::load_sublattice(sublattice, d.system().rank())?;
            let q = d.quotient_finite(&sub).map_err(|e| anyhow!("{e}"))?;
            println!("{}", format::datum_to_json(&q)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wonderfulize { datum } => {
            let d = format::load_datum(&datum.datum)?;
            let w = d.wonderfulization().map_err(|e| anyhow!("{e}"))?;
            println!("{}", format::datum_to_json(&w)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Subspaces { datum, test, central_subspace } => {
            let d = format::load_datum(&datum.datum)?;
            let central = central_subspace
                .as_ref()
                .map(|p| load_subspace(p, d.weight_lattice().rank()))
                .transpose()?
                .map(|(s, _)| s);
            if let Some(test_path) = test {
                let (space, colors) = load_subspace(test_path, d.weight_lattice().rank())?;
                let cs = ColoredSubspace { subspace: space, colors: colors.into_iter().collect() };
                let ok = subspace::is_colored_subspace(&d, &cs).map_err(|e| anyhow!("{e}"))?;
                if ok {
                    let q = subspace::quotient_by(&d, &cs).map_err(|e| anyhow!("{e}"))?;
                    let parabolic = subspace::parabolic_of(&d, &cs).map_err(|e| anyhow!("{e}"))?;
                    report::print_subspace_test(&q, parabolic, json)?;
                    Ok(ExitCode::SUCCESS)
                } else {
                    report::print_bool("colored_subspace", false, json)?;
                    Ok(ExitCode::from(2))
                }
            } else {
                let enumerated = subspace::enumerate_color_spanned(&d, central.as_ref())
                    .map_err(|e| anyhow!("{e}"))?;
                report::print_enumeration(&d, &enumerated, json)?;
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Equiv { a, b } => {
            let da = format::load_datum(a)?;
            let db = format::load_datum(b)?;
            match equiv::equivalent(&da, &db) {
                Ok(Equivalence::Equivalent { witness }) => {
                    report::print_equivalent(&witness, json)?;
                    Ok(ExitCode::SUCCESS)
                }
                Ok(Equivalence::Different { difference }) => {
                    report::print_different(difference, json)?;
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(anyhow!("{e}")),
            }
        }
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn load_subspace(
    path: &std::path::Path,
    rank: usize,
) -> Result<(Subspace, Vec<String>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: format::SubspaceFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    let rows: Vec<Vec<sphera_core::Rat>> = file
        .subspace
        .iter()
        .map(|row| format::parse_rat_vec(row))
        .collect::<Result<_>>()?;
    let space = Subspace::span(rank, &rows)
        .map_err(|e| anyhow!("subspace rows must have length {rank}: {e}"))?;
    Ok((space, file.colors))
}
