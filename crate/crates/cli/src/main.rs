//! `ltslab` — exact computations with Lie triple systems, Bol algebras
//! and their non-associative enveloping algebras.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check
//! fails (the report carries a witness), 2 on input or usage errors.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ideal_lab::{suite, Check, Report};
use lts_core::{catalog, check_axioms, lie_envelope, AxiomMode, Parity};
use nucleus_lab::{ln_alt, nuclei, theorem_decompose};
use serde_json::json;
use star_uea::EnvelopeSession;

#[derive(Parser)]
#[command(
    name = "ltslab",
    about = "Exact algebra of Lie triple systems and their enveloping algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SystemSource {
    /// Catalog name (S2, S2tilde, R2, so3, abelian:N, bilinear:N).
    #[arg(long, conflicts_with = "file")]
    system: Option<String>,
    /// Path to a JSON structure-constant file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct OutputOpts {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a system.
    Axioms {
        #[command(flatten)]
        source: SystemSource,
        /// Which axiom system to check.
        #[arg(long, default_value = "lts")]
        mode: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Compute the graded Lie envelope of a Lie triple system.
    Envelope {
        #[command(flatten)]
        source: SystemSource,
        /// Integer scale applied to the ternary bracket.
        #[arg(long, default_value_t = 1)]
        scale: i64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Multiply two elements of the enveloping algebra.
    Mul {
        #[command(flatten)]
        source: SystemSource,
        /// Left factor, e.g. '[[[0,1], 1, 2]]' for (e0 e1)/2.
        #[arg(long)]
        left: String,
        /// Right factor, same format.
        #[arg(long)]
        right: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Truncated centralizer of V in its enveloping algebra.
    Centralizer {
        #[command(flatten)]
        source: SystemSource,
        /// Filtration degree bound (at least 1).
        #[arg(long)]
        degree: usize,
        /// Include wall-clock timing (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Nuclei and the left generalized alternative nucleus of a
    /// multiplication table.
    Nuclei {
        /// Path to a JSON multiplication-table file.
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decompose an algebra generated by a commuting nucleus subsystem.
    Decompose {
        /// Path to a JSON multiplication-table file.
        #[arg(long)]
        file: PathBuf,
        /// Spanning vectors of the subsystem, e.g. '[[0,1,0]]'.
        #[arg(long)]
        subspace: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: commutator-s2, leftmult, bol-hopf, kloop-division,
        /// delta-bracket, so3-determinant, centralizer-conjecture,
        /// partial-derivative-leading, all.
        name: String,
        /// Exponent bound for the commutator rule.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Degree bound for the bounded-degree suites.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Sample count for the randomized identity checks.
        #[arg(long, default_value_t = 10)]
        pairs: usize,
        /// Include wall-clock timing (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// List the catalog, or print one system as JSON.
    Catalog {
        /// Catalog name; omit to list all names.
        name: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)`: all checks passed. `Ok(false)`: a mathematical check
/// failed and the report says which. `Err`: input or usage problem.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Axioms { source, mode, out } => {
            let (name, system) = input::load_system(&source)?;
            let mode = AxiomMode::parse(&mode)
                .ok_or_else(|| format!("unknown axiom mode `{mode}` (lts, bol, malcev)"))?;
            let report_data = check_axioms(&system, mode).map_err(|e| e.to_string())?;
            let mut report = Report::new("axioms", Some(name));
            for check in &report_data.checks {
                let witness = check.witness.as_ref().map(|w| {
                    format!(
                        "basis tuple {:?}, discrepancy [{}]",
                        w.indices,
                        w.discrepancy
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                });
                report.checks.push(Check {
                    name: check.axiom.to_string(),
                    pass: check.passed(),
                    witness,
                });
            }
            output::emit_report(&report, out.format == Format::Json, out.output.as_deref())?;
            Ok(report.passed())
        }
        Command::Envelope { source, scale, out } => {
            let (name, system) = input::load_system(&source)?;
            let axioms = check_axioms(&system, AxiomMode::Lts).map_err(|e| e.to_string())?;
            if !axioms.passed() {
                let mut report = Report::new("envelope", Some(name));
                for check in &axioms.checks {
                    report.checks.push(Check {
                        name: check.axiom.to_string(),
                        pass: check.passed(),
                        witness: check.witness.as_ref().map(|w| format!("{:?}", w.indices)),
                    });
                }
                output::emit_report(&report, out.format == Format::Json, out.output.as_deref())?;
                return Ok(false);
            }
            let envelope =
                lie_envelope(&system, &exact_linalg::int(scale)).map_err(|e| e.to_string())?;
            let rendered = match out.format {
                Format::Json => {
                    let dim = envelope.table.dim();
                    let mut brackets = Vec::new();
                    for i in 0..dim {
                        for j in (i + 1)..dim {
                            let v = envelope.table.bracket_basis(i, j);
                            for (l, c) in v.iter().enumerate() {
                                if !num_traits::Zero::is_zero(c) {
                                    brackets.push(json!([i, j, l, ideal_lab::scalar_to_json(c)]));
                                }
                            }
                        }
                    }
                    let grading: Vec<&str> = envelope
                        .table
                        .grading()
                        .unwrap()
                        .iter()
                        .map(|p| match p {
                            Parity::Even => "even",
                            Parity::Odd => "odd",
                        })
                        .collect();
                    json!({
                        "command": "envelope",
                        "system": name,
                        "dim": dim,
                        "operator_part_dim": envelope.d_dim,
                        "grading": grading,
                        "bracket": brackets,
                    })
                    .to_string()
                        + "\n"
                }
                Format::Text => {
                    let dim = envelope.table.dim();
                    let mut lines = vec![format!(
                        "envelope of {name}: dim {dim} = {} operators + {} odd generators",
                        envelope.d_dim, envelope.v_dim
                    )];
                    for i in 0..dim {
                        for j in (i + 1)..dim {
                            let v = envelope.table.bracket_basis(i, j);
                            if v.iter().all(num_traits::Zero::is_zero) {
                                continue;
                            }
                            let word = v
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                                .map(|(l, c)| format!("{c}·{}", envelope.table.name(l)))
                                .collect::<Vec<_>>()
                                .join(" + ");
                            lines.push(format!(
                                "[{}, {}] = {word}",
                                envelope.table.name(i),
                                envelope.table.name(j)
                            ));
                        }
                    }
                    lines.join("\n") + "\n"
                }
            };
            output::emit(&rendered, out.output.as_deref())?;
            Ok(true)
        }
        Command::Mul {
            source,
            left,
            right,
            out,
        } => {
            let (name, system) = input::load_system(&source)?;
            let session = EnvelopeSession::new(system).map_err(|e| e.to_string())?;
            let left = input::parse_element(&session, &left)?;
            let right = input::parse_element(&session, &right)?;
            let product = left
                .try_mul(&right)
                .map_err(|e| format!("product failed: {e}"))?;
            let rendered = match out.format {
                Format::Json => {
                    let terms: Vec<_> = product
                        .terms()
                        .iter()
                        .map(|(key, c)| json!([key, ideal_lab::scalar_to_json(c)]))
                        .collect();
                    json!({
                        "command": "mul",
                        "system": name,
                        "product": terms,
                    })
                    .to_string()
                        + "\n"
                }
                Format::Text => format!("{product}\n"),
            };
            output::emit(&rendered, out.output.as_deref())?;
            Ok(true)
        }
        Command::Centralizer {
            source,
            degree,
            timings,
            out,
        } => {
            if degree == 0 {
                return Err("degree bound must be at least 1".to_string());
            }
            let (name, system) = input::load_system(&source)?;
            let session = EnvelopeSession::new(system).map_err(|e| e.to_string())?;
            let report = ideal_lab::truncated_centralizer(&session, &name, degree, timings);
            let rendered = match out.format {
                Format::Json => report.to_json().to_string() + "\n",
                Format::Text => {
                    let mut lines = vec![
                        format!("truncated centralizer of V in U(V), degree <= {degree}"),
                        format!("system: {name}"),
                        format!("dim: {}", report.dim()),
                        format!(
                            "verdict (equals span(1) + V): {} [bounded-degree evidence, not a proof]",
                            report.verdict
                        ),
                    ];
                    for u in &report.basis {
                        lines.push(format!("  {u}"));
                    }
                    if let Some(ms) = report.timing_ms {
                        lines.push(format!("timing_ms: {ms}"));
                    }
                    lines.join("\n") + "\n"
                }
            };
            output::emit(&rendered, out.output.as_deref())?;
            Ok(true)
        }
        Command::Nuclei { file, out } => {
            let algebra = input::load_table(&file)?;
            let n = nuclei(&algebra);
            let (lnalt_space, induced) = ln_alt(&algebra).map_err(|e| e.to_string())?;
            let lts_report = check_axioms(&induced, AxiomMode::Lts).map_err(|e| e.to_string())?;
            let rendered = match out.format {
                Format::Json => {
                    json!({
                        "command": "nuclei",
                        "dim": algebra.dim(),
                        "left_nucleus_dim": n.left.dim(),
                        "middle_nucleus_dim": n.middle.dim(),
                        "right_nucleus_dim": n.right.dim(),
                        "center_dim": n.center.dim(),
                        "lnalt_dim": lnalt_space.dim(),
                        "induced_system_satisfies_lts_axioms": lts_report.passed(),
                    })
                    .to_string()
                        + "\n"
                }
                Format::Text => {
                    let lines = [
                        format!("algebra dimension: {}", algebra.dim()),
                        format!("left nucleus dim: {}", n.left.dim()),
                        format!("middle nucleus dim: {}", n.middle.dim()),
                        format!("right nucleus dim: {}", n.right.dim()),
                        format!("center dim: {}", n.center.dim()),
                        format!(
                            "left generalized alternative nucleus dim: {}",
                            lnalt_space.dim()
                        ),
                        format!(
                            "induced triple system satisfies the axioms: {}",
                            lts_report.passed()
                        ),
                    ];
                    lines.join("\n") + "\n"
                }
            };
            output::emit(&rendered, out.output.as_deref())?;
            Ok(lts_report.passed())
        }
        Command::Decompose {
            file,
            subspace,
            out,
        } => {
            let algebra = input::load_table(&file)?;
            let v = input::parse_subspace(&subspace, algebra.dim())?;
            let result = theorem_decompose(&algebra, &v);
            let mut report = Report::new("decompose", None);
            match result {
                Ok(decomposition) => {
                    for (name, pass) in decomposition.checks() {
                        report.checks.push(Check {
                            name: name.to_string(),
                            pass,
                            witness: (!pass).then(|| {
                                format!(
                                    "q dim {}, r dim {}",
                                    decomposition.q.dim(),
                                    decomposition.r.dim()
                                )
                            }),
                        });
                    }
                    output::emit_report(
                        &report,
                        out.format == Format::Json,
                        out.output.as_deref(),
                    )?;
                    Ok(report.passed())
                }
                Err(nucleus_lab::NucleusError::PreconditionViolated(which)) => {
                    report.checks.push(Check::fail("preconditions", which));
                    output::emit_report(
                        &report,
                        out.format == Format::Json,
                        out.output.as_deref(),
                    )?;
                    Ok(false)
                }
                Err(other) => Err(other.to_string()),
            }
        }
        Command::Verify {
            name,
            max_n,
            degree,
            pairs,
            timings,
            out,
        } => {
            let reports = run_verify(&name, max_n, degree, pairs, timings)?;
            let mut all_passed = true;
            let mut rendered = String::new();
            for report in &reports {
                all_passed &= report.passed();
                match out.format {
                    Format::Json => {
                        rendered.push_str(&report.to_json().to_string());
                        rendered.push('\n');
                    }
                    Format::Text => {
                        rendered.push_str(&report.render_text());
                        rendered.push('\n');
                    }
                }
            }
            output::emit(&rendered, out.output.as_deref())?;
            Ok(all_passed)
        }
        Command::Catalog { name, out } => match name {
            None => {
                let listing = match out.format {
                    Format::Json => {
                        json!({ "command": "catalog", "names": catalog::NAME_SUMMARY }).to_string()
                            + "\n"
                    }
                    Format::Text => format!("catalog systems: {}\n", catalog::NAME_SUMMARY),
                };
                output::emit(&listing, out.output.as_deref())?;
                Ok(true)
            }
            Some(name) => {
                let system = catalog::by_name(&name).map_err(|e| e.to_string())?;
                output::emit(&(system.to_json_string() + "\n"), out.output.as_deref())?;
                Ok(true)
            }
        },
    }
}

fn run_verify(
    name: &str,
    max_n: usize,
    degree: usize,
    pairs: usize,
    timings: bool,
) -> Result<Vec<Report>, String> {
    let one = |report: Report| Ok(vec![report]);
    match name {
        "commutator-s2" => one(suite::commutator_power_rule(max_n)),
        "leftmult" => one(suite::left_multiplication_suite(degree.min(6))),
        "bol-hopf" => one(suite::bol_hopf_suite(pairs)),
        "kloop-division" => one(suite::kloop_division_suite(pairs)),
        "delta-bracket" => one(suite::delta_bracket_suite()),
        "so3-determinant" => one(suite::so3_determinant_suite(max_n as u64)),
        "centralizer-conjecture" => one(suite::centralizer_conjecture_suite(degree, timings)),
        "partial-derivative-leading" => one(suite::partial_derivative_suite(degree)),
        "all" => Ok(vec![
            suite::commutator_power_rule(max_n),
            suite::left_multiplication_suite(degree.min(6)),
            suite::bol_hopf_suite(pairs),
            suite::kloop_division_suite(pairs),
            suite::delta_bracket_suite(),
            suite::so3_determinant_suite(max_n as u64),
            suite::centralizer_conjecture_suite(degree, timings),
            suite::partial_derivative_suite(degree),
        ]),
        other => Err(format!(
            "unknown verification suite `{other}`; see `ltslab verify --help`"
        )),
    }
}
