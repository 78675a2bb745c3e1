//! Command-line driver: zeta functions, semimodule trees and semigroup
//! classification, in text, JSON, DOT and LaTeX.
//!
//! Exit codes: 0 success, 1 invalid input, 2 bound too small, 3 oracle
//! mismatch, 4 negative exponent underflow.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hilbert_zeta::motive::{compute_classes, latex_document, zeta, Applicability, ZetaDocument};
use hilbert_zeta::oracle;
use hilbert_zeta::semigroup::{MonomialForm, NumericalSemigroup};
use hilbert_zeta::tree::{build_tree, SemimoduleTree};
use hilbert_zeta::Error;

const EXIT_INVALID_INPUT: u8 = 1;
const EXIT_BOUND_TOO_SMALL: u8 = 2;
const EXIT_ORACLE_MISMATCH: u8 = 3;
const EXIT_NEGATIVE_EXPONENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "hilbert-zeta",
    version,
    about = "Motivic Hilbert zeta functions of unibranch curve singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the motivic Hilbert zeta function of the singularity
    Zeta(CommonArgs),
    /// Build and emit the semimodule tree
    Tree(CommonArgs),
    /// Classify the semigroup and report its invariants
    Check(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Comma-separated generators of the valuation semigroup, e.g. 4,5,6
    #[arg(long, value_name = "LIST")]
    gens: String,

    /// Membership table bound; must be at least the effective bound
    /// (c-1)(a_1+2) unless --allow-unsafe-bound is set
    #[arg(long, value_name = "N")]
    bound: Option<u64>,

    /// Accept a bound below the effective bound; results are marked
    /// uncertified and operations may fail with exit code 2
    #[arg(long)]
    allow_unsafe_bound: bool,

    /// Output format
    #[arg(long, env = "HILBERT_ZETA_FORMAT", default_value = "text", value_enum)]
    format: Format,

    /// Re-check every tree level and node against the brute-force oracle
    /// before emitting; mismatches exit with code 3
    #[arg(long)]
    oracle_verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Latex,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::OutOfBound { .. } | Error::BoundTooSmall { .. } => EXIT_BOUND_TOO_SMALL,
        Error::OracleMismatch { .. } => EXIT_ORACLE_MISMATCH,
        Error::NegativeExponentUnderflow { .. } => EXIT_NEGATIVE_EXPONENT,
        _ => EXIT_INVALID_INPUT,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: EXIT_INVALID_INPUT,
            message: format!("serialization failed: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: &Command) -> Result<String, Failure> {
    let args = match command {
        Command::Zeta(a) | Command::Tree(a) | Command::Check(a) => a,
    };
    let input = parse_generators(&args.gens)?;
    let semigroup = Arc::new(build_semigroup(&input, args)?);
    if args.oracle_verify && !semigroup.is_full() {
        let tree = build_tree(&semigroup)?;
        oracle::verify_tree(&tree)?;
    }
    let output = match command {
        Command::Zeta(_) => run_zeta(&semigroup, &input, args.format)?,
        Command::Tree(_) => run_tree(&semigroup, args.format)?,
        Command::Check(_) => run_check(&semigroup, &input, args.format)?,
    };
    Ok(versioned(args.format, output))
}

/// Every format carries a schema version; JSON as a field, the others as a
/// leading comment line.
fn versioned(format: Format, body: String) -> String {
    let prefix = match format {
        Format::Json => return body,
        Format::Text => "# schema_version: 1\n",
        Format::Dot => "// schema_version: 1\n",
        Format::Latex => "% schema_version: 1\n",
    };
    format!("{prefix}{body}")
}

fn parse_generators(raw: &str) -> Result<Vec<u64>, Failure> {
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Failure::invalid(format!("invalid generator list '{raw}'")))
        })
        .collect()
}

fn build_semigroup(gens: &[u64], args: &CommonArgs) -> Result<NumericalSemigroup, Failure> {
    match args.bound {
        None => Ok(NumericalSemigroup::from_generators(gens)?),
        Some(bound) => {
            let effective = NumericalSemigroup::from_generators(gens)?.effective_bound();
            if bound >= effective {
                Ok(NumericalSemigroup::from_generators_with_bound(gens, bound)?)
            } else if args.allow_unsafe_bound {
                Ok(NumericalSemigroup::from_generators_truncated(gens, bound)?)
            } else {
                Err(Failure {
                    code: EXIT_BOUND_TOO_SMALL,
                    message: format!(
                        "bound {bound} is below the effective bound {effective}; \
                         pass --allow-unsafe-bound to proceed with uncertified results"
                    ),
                })
            }
        }
    }
}

fn generator_line(semigroup: &NumericalSemigroup, input: &[u64]) -> String {
    let gens = join(semigroup.generators());
    let mut sorted = input.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted == semigroup.generators() {
        format!("Gamma = <{gens}>")
    } else {
        format!("Gamma = <{gens}>  (reduced from input {})", join(input))
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_zeta(
    semigroup: &Arc<NumericalSemigroup>,
    input: &[u64],
    format: Format,
) -> Result<String, Failure> {
    let z = zeta(semigroup)?;
    match format {
        Format::Json => {
            let doc = ZetaDocument::new(semigroup, &z);
            Ok(format!("{}\n", serde_json::to_string(&doc)?))
        }
        Format::Latex => Ok(latex_document(semigroup, &z)),
        Format::Dot => {
            let tree = build_tree(semigroup)?;
            let table = compute_classes(&tree)?;
            Ok(tree.export_dot_annotated(|ell, i| Some(table.cell_class(ell, i).to_string()))?)
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}", generator_line(semigroup, input)).unwrap();
            writeln!(
                out,
                "conductor: {}  delta: {}  gaps: {{{}}}",
                semigroup.conductor(),
                semigroup.delta(),
                join(semigroup.gaps())
            )
            .unwrap();
            writeln!(out, "classification: {}", semigroup.classify_monomial()).unwrap();
            writeln!(out, "applicability: {}", z.applicability()).unwrap();
            writeln!(
                out,
                "bound: {} (effective {}, {})",
                semigroup.bound(),
                semigroup.effective_bound(),
                if semigroup.certified() {
                    "certified"
                } else {
                    "UNCERTIFIED"
                }
            )
            .unwrap();
            if z.applicability() == Applicability::Smooth {
                writeln!(out, "Z(q) = 1/(1-q)").unwrap();
                return Ok(out);
            }
            let c = z.conductor();
            writeln!(out, "coefficients of Z(q):").unwrap();
            for (ell, coeff) in z.poly_coeffs().iter().enumerate() {
                writeln!(out, "  q^{ell}: {coeff}").unwrap();
            }
            writeln!(out, "  q^l, l >= {c}: {}", z.tail()).unwrap();
            writeln!(
                out,
                "Z(q) = sum_{{l=0}}^{{{}}} [C_l] q^l + [C_{c}] q^{c}/(1-q)",
                c - 1
            )
            .unwrap();
            Ok(out)
        }
    }
}

fn run_tree(semigroup: &Arc<NumericalSemigroup>, format: Format) -> Result<String, Failure> {
    let tree = build_tree(semigroup)?;
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string(&tree.document())?)),
        Format::Dot => Ok(tree.export_dot()?),
        Format::Latex => Err(Failure::invalid(
            "latex output is not available for 'tree'; use text, json or dot",
        )),
        Format::Text => Ok(render_tree_text(semigroup, &tree)?),
    }
}

fn render_tree_text(
    semigroup: &NumericalSemigroup,
    tree: &SemimoduleTree,
) -> Result<String, Failure> {
    let mut out = String::new();
    writeln!(
        out,
        "Gamma = <{}>  conductor {}  levels {}",
        join(semigroup.generators()),
        semigroup.conductor(),
        tree.depth()
    )
    .unwrap();
    for ell in 1..=tree.depth() {
        let level = tree.level(ell);
        let noun = if level.len() == 1 {
            "semimodule"
        } else {
            "semimodules"
        };
        writeln!(out, "D_{ell} ({} {noun}):", level.len()).unwrap();
        for (i, node) in level.iter().enumerate() {
            let label = node.label()?;
            match tree.parent_of(ell, i) {
                None => writeln!(out, "  {label}  gaps {{{}}}", join(node.gap_set())).unwrap(),
                Some(parent) => writeln!(
                    out,
                    "  {label}  gaps {{{}}}  <- {}",
                    join(node.gap_set()),
                    parent.label()?
                )
                .unwrap(),
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct CheckDocument {
    schema_version: u32,
    input_generators: Vec<u64>,
    generators: Vec<u64>,
    reduced: bool,
    conductor: u64,
    delta: u64,
    gaps: Vec<u64>,
    classification: MonomialForm,
    monomial_gap_condition: bool,
    gorenstein: bool,
    effective_bound: u64,
    bound: u64,
    certified: bool,
}

fn run_check(
    semigroup: &Arc<NumericalSemigroup>,
    input: &[u64],
    format: Format,
) -> Result<String, Failure> {
    let mut sorted = input.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let doc = CheckDocument {
        schema_version: 1,
        input_generators: input.to_vec(),
        generators: semigroup.generators().to_vec(),
        reduced: sorted != semigroup.generators(),
        conductor: semigroup.conductor(),
        delta: semigroup.delta(),
        gaps: semigroup.gaps().to_vec(),
        classification: semigroup.classify_monomial(),
        monomial_gap_condition: semigroup.satisfies_gap_condition(),
        gorenstein: semigroup.is_symmetric(),
        effective_bound: semigroup.effective_bound(),
        bound: semigroup.bound(),
        certified: semigroup.certified(),
    };
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string(&doc)?)),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}", generator_line(semigroup, input)).unwrap();
            writeln!(out, "conductor: {}", doc.conductor).unwrap();
            writeln!(out, "delta: {}", doc.delta).unwrap();
            writeln!(out, "gaps: {{{}}}", join(&doc.gaps)).unwrap();
            writeln!(out, "classification: {}", doc.classification).unwrap();
            writeln!(
                out,
                "monomial (gap-condition cross-check): {}",
                doc.monomial_gap_condition
            )
            .unwrap();
            writeln!(out, "gorenstein (c = 2*delta): {}", doc.gorenstein).unwrap();
            writeln!(out, "effective bound: {}", doc.effective_bound).unwrap();
            writeln!(
                out,
                "table bound: {} ({})",
                doc.bound,
                if doc.certified {
                    "certified"
                } else {
                    "UNCERTIFIED"
                }
            )
            .unwrap();
            Ok(out)
        }
        _ => Err(Failure::invalid(
            "check supports only text and json output",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_parsing() {
        assert_eq!(parse_generators("4,5,6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_generators(" 2, 3 ").unwrap(), vec![2, 3]);
        assert!(parse_generators("4;5").is_err());
        assert!(parse_generators("").is_err());
        assert!(parse_generators("4,x").is_err());
    }

    #[test]
    fn exit_codes_by_error() {
        assert_eq!(exit_code_for(&Error::GcdNotOne { gcd: 2 }), 1);
        assert_eq!(exit_code_for(&Error::EmptyGenerators), 1);
        assert_eq!(exit_code_for(&Error::DegenerateSemigroup), 1);
        assert_eq!(
            exit_code_for(&Error::BoundTooSmall {
                required: 10,
                bound: 5
            }),
            2
        );
        assert_eq!(exit_code_for(&Error::OutOfBound { n: 9, bound: 5 }), 2);
        assert_eq!(
            exit_code_for(&Error::OracleMismatch {
                detail: "x".into()
            }),
            3
        );
        assert_eq!(
            exit_code_for(&Error::NegativeExponentUnderflow {
                gaps: vec![0],
                exponent: -1
            }),
            4
        );
    }
}
