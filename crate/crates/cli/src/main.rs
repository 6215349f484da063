//! Command-line front end: build modules from builtins or files, run the
//! identity suite, decompose elements, compute homology, dump operator
//! matrices.
//!
//! Exit codes: 0 success, 2 malformed input, 3 relation/identity failure
//! (for `check`), 4 unsupported ring or degree request, 1 internal error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use duplicial::constructions::{builtins, duchain_to_duplicial};
use duplicial::dk::Dk;
use duplicial::error::Error;
use duplicial::homology::{
    mixed_complex_homology, normalized_vs_full_homology, ChainComplex, MixedFlavor,
};
use duplicial::io;
use duplicial::module::TruncatedDuplicialModule;
use duplicial::ops::Ops;
use duplicial::ring::CoefficientRing;
use duplicial::suite::{check_identity_suite, classify_module, validate_relations, Status};

#[derive(Parser)]
#[command(name = "duplicial", version, about = "Exact engine for truncated duplicial and paracyclic modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a module and serialize it
    Build(CommonArgs),
    /// Validate the structural relations and run the full identity suite
    Check(CommonArgs),
    /// Print the Dold-Kan components of an element
    Decompose(DecomposeArgs),
    /// Print homology groups
    Homology(HomologyArgs),
    /// Print one operator matrix at a degree
    Dump(DumpArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Built-in module name (ground-ring, simplex-0/1/2, dual-numbers,
    /// dual-numbers-twisted, scalar-twisted-u)
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    /// Module JSON file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Duchain JSON file; the module is its reconstruction
    #[arg(long, conflicts_with_all = ["builtin", "input"])]
    duchain: Option<PathBuf>,
    /// Coefficient ring for builtins: Z, Q, or Z/m
    #[arg(long, default_value = "Q")]
    ring: String,
    /// Truncation degree for builtins
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Twist unit u for scalar-twisted-u
    #[arg(long, default_value_t = 2)]
    twist: i64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Degree of the element
    #[arg(long)]
    degree: usize,
    /// Comma-separated coordinates of the element
    #[arg(long)]
    element: String,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which complex to take homology of
    #[arg(long, value_enum, default_value_t = Flavor::B)]
    flavor: Flavor,
    /// Weight cutoff W for the mixed complexes
    #[arg(long, default_value_t = 2)]
    weight: usize,
}

#[derive(Args)]
struct DumpArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Operator name: b, d, delta, sigma, kappa, pi, p, B, D, phi, t, T
    #[arg(long)]
    op: String,
    /// Degree at which to evaluate the operator
    #[arg(long)]
    degree: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavor {
    /// the chain complex (M, b)
    B,
    /// compare (M, b) with (N(M), b)
    Normalized,
    /// the truncated mixed complex (N[u], b + uB)
    #[value(name = "bB")]
    BB,
    /// the truncated mixed complex (N[v], d + vD)
    #[value(name = "dD")]
    DD,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::ShapeMismatch(_) | Error::InvalidMorphism(_) => 2,
        Error::RelationFailure { .. } => 3,
        Error::DegreeOutOfRange { .. }
        | Error::IndexOutOfRange { .. }
        | Error::UnsupportedRing(_)
        | Error::CompositeModulus { .. }
        | Error::TNotAvailable { .. } => 4,
        _ => 1,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

fn load_module(args: &CommonArgs) -> Result<TruncatedDuplicialModule, Failure> {
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let json: io::ModuleJson = serde_json::from_str(&text).map_err(|e| Failure {
            code: 2,
            message: format!("malformed module file: {e}"),
        })?;
        return Ok(io::module_from_json(&json)?);
    }
    if let Some(path) = &args.duchain {
        let text = fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let json: io::DuchainJson = serde_json::from_str(&text).map_err(|e| Failure {
            code: 2,
            message: format!("malformed duchain file: {e}"),
        })?;
        let v = io::duchain_from_json(&json)?;
        return Ok(duchain_to_duplicial(&v)?);
    }
    let name = args.builtin.as_deref().ok_or(Failure {
        code: 2,
        message: "one of --builtin, --input, --duchain is required".into(),
    })?;
    let ring = CoefficientRing::parse(&args.ring).map_err(|e| Failure {
        code: 4,
        message: e.to_string(),
    })?;
    builtins::by_name(name, ring, args.max_degree, args.twist).map_err(Failure::from)
}

fn emit(args: &CommonArgs, text: String) -> Result<(), Failure> {
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Structural relations gate every subcommand: derived results are never
/// emitted for invalid modules.
fn validated(args: &CommonArgs) -> Result<TruncatedDuplicialModule, Failure> {
    let module = load_module(args)?;
    let relations = validate_relations(&module);
    if !relations.passed() {
        let first = relations.failures().next().unwrap();
        return Err(Failure {
            code: 3,
            message: format!(
                "structural relation {:?} fails at degree {}",
                first.identity, first.degree
            ),
        });
    }
    Ok(module)
}

fn status_char(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
    }
}

fn run_build(args: &CommonArgs) -> Result<u8, Failure> {
    let module = validated(args)?;
    let json = io::module_to_json(&module);
    let text = serde_json::to_string_pretty(&json).expect("serializable");
    emit(args, text)?;
    Ok(0)
}

fn run_check(args: &CommonArgs) -> Result<u8, Failure> {
    let module = load_module(args)?;
    let report = check_identity_suite(&module);
    let classification = classify_module(&module);
    match args.format {
        Format::Structured => {
            let out = serde_json::json!({
                "report": io::report_to_json(&report),
                "classification": io::classification_to_json(&classification),
            });
            emit(args, serde_json::to_string_pretty(&out).expect("serializable"))?;
        }
        Format::Table => {
            let mut lines = Vec::new();
            for e in &report.entries {
                let class = match e.class {
                    duplicial::suite::EntryClass::Theorem => "",
                    duplicial::suite::EntryClass::Variant => " [variant]",
                };
                let note = e.note.as_deref().unwrap_or("");
                lines.push(format!(
                    "{:4}  {:40} degree {:2}{}  {}",
                    status_char(e.status),
                    e.identity,
                    e.degree,
                    class,
                    note
                ));
            }
            let passed = report
                .entries
                .iter()
                .filter(|e| e.status == Status::Pass)
                .count();
            let failed = report.failures().count();
            let skipped = report
                .entries
                .iter()
                .filter(|e| e.status == Status::Skipped)
                .count();
            lines.push(format!(
                "summary: {passed} passed, {failed} failed, {skipped} skipped; module is {:?}",
                classification.class
            ));
            emit(args, lines.join("\n"))?;
        }
    }
    Ok(if report.passed() { 0 } else { 3 })
}

fn run_decompose(args: &DecomposeArgs) -> Result<u8, Failure> {
    let module = validated(&args.common)?;
    let coords: Vec<String> = args
        .element
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    if args.degree > module.n_max || coords.len() != module.ranks[args.degree] {
        return Err(Failure {
            code: 4,
            message: format!(
                "element must have {} coordinates at degree {}",
                module.ranks.get(args.degree).copied().unwrap_or(0),
                args.degree
            ),
        });
    }
    let element = io::element_from_strings(module.ring, args.degree, &coords)?;
    let mut dk = Dk::new(Ops::new(&module));
    let decomposition = dk.decompose(&element)?;
    match args.common.format {
        Format::Structured => {
            let out = io::decomposition_to_json(module.ring, &decomposition);
            emit(&args.common, serde_json::to_string_pretty(&out).expect("serializable"))?;
        }
        Format::Table => {
            let mut lines = Vec::new();
            for (seq, comp) in &decomposition.components {
                let coords: Vec<String> =
                    comp.coords.iter().map(|c| module.ring.format(c)).collect();
                lines.push(format!(
                    "s{:?} (component in degree {}): [{}]",
                    seq,
                    comp.degree,
                    coords.join(", ")
                ));
            }
            emit(&args.common, lines.join("\n"))?;
        }
    }
    Ok(0)
}

fn run_homology(args: &HomologyArgs) -> Result<u8, Failure> {
    let module = validated(&args.common)?;
    let text = match args.flavor {
        Flavor::B => {
            let complex = ChainComplex::from_module(&module)?;
            let groups = complex.homology_range(module.n_max.saturating_sub(1))?;
            render_groups(&args.common, &groups)
        }
        Flavor::Normalized => {
            let cmp = normalized_vs_full_homology(&module)?;
            match args.common.format {
                Format::Structured => {
                    let full: Vec<_> = cmp.degrees.iter().map(|(a, _)| a.clone()).collect();
                    let normalized: Vec<_> = cmp.degrees.iter().map(|(_, b)| b.clone()).collect();
                    let out = serde_json::json!({
                        "full": io::homology_to_json(&full),
                        "normalized": io::homology_to_json(&normalized),
                        "agree": cmp.all_equal,
                        "homotopy_identity_holds": cmp.homotopy_identity_holds,
                    });
                    serde_json::to_string_pretty(&out).expect("serializable")
                }
                Format::Table => {
                    let mut lines = Vec::new();
                    for (a, b) in &cmp.degrees {
                        lines.push(format!(
                            "H_{}: full {} | normalized {}",
                            a.degree,
                            render_group(a),
                            render_group(b)
                        ));
                    }
                    lines.push(format!(
                        "agree: {}; homotopy identity holds: {}",
                        cmp.all_equal, cmp.homotopy_identity_holds
                    ));
                    lines.join("\n")
                }
            }
        }
        Flavor::BB | Flavor::DD => {
            let flavor = if args.flavor == Flavor::BB {
                MixedFlavor::BB
            } else {
                MixedFlavor::DD
            };
            let report = mixed_complex_homology(&module, flavor, args.weight)?;
            match args.common.format {
                Format::Structured => serde_json::to_string_pretty(&io::mixed_report_to_json(&report))
                    .expect("serializable"),
                Format::Table => {
                    let mut lines = vec![format!(
                        "mixed complex {:?}, weight cutoff {}",
                        report.flavor, report.weight_cutoff
                    )];
                    for e in &report.entries {
                        lines.push(format!(
                            "H_{}: {}{}",
                            e.group.degree,
                            render_group(&e.group),
                            if e.truncation_independent {
                                ""
                            } else {
                                "  (truncation-dependent)"
                            }
                        ));
                    }
                    lines.join("\n")
                }
            }
        }
    };
    emit(&args.common, text)?;
    Ok(0)
}

fn render_group(g: &duplicial::homology::HomologyGroup) -> String {
    let mut parts = Vec::new();
    if g.free_rank > 0 {
        parts.push(format!("free rank {}", g.free_rank));
    }
    for t in &g.torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn render_groups(args: &CommonArgs, groups: &[duplicial::homology::HomologyGroup]) -> String {
    match args.format {
        Format::Structured => {
            serde_json::to_string_pretty(&io::homology_to_json(groups)).expect("serializable")
        }
        Format::Table => groups
            .iter()
            .map(|g| format!("H_{}: {}", g.degree, render_group(g)))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn run_dump(args: &DumpArgs) -> Result<u8, Failure> {
    let module = validated(&args.common)?;
    let mut ops = Ops::new(&module);
    let n = args.degree;
    let matrix = match args.op.as_str() {
        "b" => ops.b(n)?,
        "d" => ops.d(n)?,
        "delta" => ops.delta(n)?,
        "sigma" => ops.sigma(n)?,
        "kappa" => ops.kappa(n)?,
        "pi" => ops.pi(n)?,
        "p" => ops.p(n)?,
        "B" => ops.connes_b(n)?,
        "D" => ops.gs_d(n)?,
        "phi" => ops.phi(n)?,
        "t" => ops.t(n)?,
        "T" => ops.big_t(n)?,
        other => {
            return Err(Failure {
                code: 4,
                message: format!("unknown operator {other:?}"),
            })
        }
    };
    let text = match args.common.format {
        Format::Structured => {
            serde_json::to_string_pretty(&io::matrix_to_json(&matrix)).expect("serializable")
        }
        Format::Table => format!("{matrix}"),
    };
    emit(&args.common, text)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(args) => run_build(args),
        Command::Check(args) => run_check(args),
        Command::Decompose(args) => run_decompose(args),
        Command::Homology(args) => run_homology(args),
        Command::Dump(args) => run_dump(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
