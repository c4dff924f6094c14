//! `ael`: batch front-end for the autoepistemic reasoning engine.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input (or bad usage),
//! 2 alphabet cap exceeded, 3 internal invariant violated or a cross-check
//! disagreed.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use ael_core::effective::{
    bel_with, eval_modal_atom_3fol, instance_bp, lfp_sder, sder, ThreeFolTheory,
};
use ael_core::lp::{projection, Embedding, ThreeValuedInterpretation};
use ael_core::operator::{der, enumerate_autoepistemic_models, lfp_der_with, skeptical_value_with};
use ael_core::prover::Prover;
use ael_core::semantics::eval_modal_atom;
use ael_core::syntax::{parse_modal, parse_program, parse_theory};
use ael_core::{Alphabet, Atom, Error, Formula, Limits, Theory, TruthValue};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use report::RunReport;

#[derive(Parser, Debug)]
#[command(
    name = "ael",
    version,
    about = "Three-valued fixpoint reasoning for autoepistemic theories"
)]
struct Cli {
    /// Print the report as a JSON document instead of key/value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to the report. Output is no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
    /// Largest alphabet for computations over explicit sets of worlds.
    #[arg(long, global = true, env = "AEL_ALPHABET_CAP", default_value_t = 16)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Explicit belief pairs; limited by the alphabet cap.
    Explicit,
    /// 3-FOL theories and entailment queries; no cap.
    Sder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EmbeddingArg {
    Ael1,
    Ael2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Least fixpoint of the derivation operator.
    Lfp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Sder)]
        engine: Engine,
        /// Include every iteration.
        #[arg(long)]
        trace: bool,
    },
    /// Verdict of the least fixpoint on K(formula).
    Query {
        file: PathBuf,
        formula: String,
        #[arg(long, value_enum, default_value_t = Engine::Sder)]
        engine: Engine,
    },
    /// Autoepistemic models, by exhaustive search (at most 4 atoms).
    Expansions { file: PathBuf },
    /// Embed a normal logic program and project the least fixpoint.
    Lp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = EmbeddingArg::Ael1)]
        embedding: EmbeddingArg,
        /// Compare with the reference program semantics.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Engine::Sder)]
        engine: Engine,
    },
    /// Cross-check the two engines along the fixpoint iteration.
    Check { file: PathBuf },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 2,
            Error::Invariant(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ael_core::ParseError> for Failure {
    fn from(e: ael_core::ParseError) -> Self {
        Error::from(e).into()
    }
}

/// The report plus whether a cross-check disagreed.
struct Outcome {
    report: RunReport,
    disagreement: bool,
}

impl From<RunReport> for Outcome {
    fn from(report: RunReport) -> Self {
        Outcome {
            report,
            disagreement: false,
        }
    }
}

fn read(path: &Path) -> Result<(String, Vec<u8>), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        code: 1,
        message: format!("{}: not valid UTF-8", path.display()),
    })?;
    Ok((text, bytes))
}

fn show(f: &Formula, alphabet: &Alphabet) -> String {
    f.display(alphabet).to_string()
}

fn value_map(literals: &[Formula], values: &[TruthValue], alphabet: &Alphabet) -> Value {
    let map: Map<String, Value> = literals
        .iter()
        .zip(values)
        .map(|(l, v)| (show(l, alphabet), json!(v.to_string())))
        .collect();
    Value::Object(map)
}

fn interpretation_map(interp: &ThreeValuedInterpretation, alphabet: &Alphabet) -> Value {
    let map: Map<String, Value> = alphabet
        .atoms()
        .map(|a| {
            (
                alphabet.name(a).to_string(),
                json!(interp.get(a).to_string()),
            )
        })
        .collect();
    Value::Object(map)
}

fn describe(theory: &Theory, report: &mut RunReport) {
    report.set("atoms", theory.alphabet().names().join(" "));
    report.set("formulas", theory.len());
    report.set("modal_literals", theory.top_level_modal_literals().len());
}

/// Whether `Bel(Y)` is complete, i.e. `oath(Y)` entails `uath(Y)`.
fn bel_is_complete(y: &ThreeFolTheory) -> Result<bool, Failure> {
    let prover = Prover::new();
    let upper = y.oath();
    for g in y.uath() {
        if !prover.entails(&upper, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_lfp(cli: &Cli, file: &Path, engine: Engine, with_trace: bool) -> Result<Outcome, Failure> {
    let (text, bytes) = read(file)?;
    let theory = parse_theory(&text)?;
    let alphabet = theory.alphabet();
    let mut report = RunReport::new("lfp", &file.display().to_string(), &bytes);
    report.set("engine", engine_name(engine));
    describe(&theory, &mut report);
    match engine {
        Engine::Explicit => {
            let trace = lfp_der_with(&theory, &Limits::new(cli.cap))?;
            let fix = trace.fixpoint();
            report.set("iterations", trace.iterations());
            report.set("fixpoint", fix.display(alphabet).to_string());
            report.set("complete", fix.is_complete());
            report.set(
                "values",
                value_map(&trace.literals, trace.values.last().unwrap(), alphabet),
            );
            if with_trace {
                report.trace = Some(
                    trace
                        .pairs
                        .iter()
                        .zip(&trace.values)
                        .enumerate()
                        .map(|(k, (pair, values))| {
                            step(
                                k,
                                pair.display(alphabet).to_string(),
                                &trace.literals,
                                values,
                                alphabet,
                            )
                        })
                        .collect(),
                );
            }
        }
        Engine::Sder => {
            let prover = Prover::new();
            let fix = lfp_sder(&prover, &theory)?;
            report.set("iterations", fix.iterations());
            report.set("fixpoint", fix.fixpoint().display(alphabet).to_string());
            report.set("complete", bel_is_complete(fix.fixpoint())?);
            report.set(
                "values",
                value_map(&fix.literals, fix.final_values(), alphabet),
            );
            report.entailment_calls = Some(fix.entailment_calls);
            if with_trace {
                report.trace = Some(
                    fix.steps
                        .iter()
                        .enumerate()
                        .map(|(k, s)| {
                            step(
                                k,
                                s.theory.display(alphabet).to_string(),
                                &fix.literals,
                                &s.values,
                                alphabet,
                            )
                        })
                        .collect(),
                );
            }
        }
    }
    Ok(report.into())
}

fn step(
    k: usize,
    state: String,
    literals: &[Formula],
    values: &[TruthValue],
    alphabet: &Alphabet,
) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("step".into(), json!(k));
    m.insert("state".into(), json!(state));
    m.insert("values".into(), value_map(literals, values, alphabet));
    m
}

fn engine_name(engine: Engine) -> &'static str {
    match engine {
        Engine::Explicit => "explicit",
        Engine::Sder => "sder",
    }
}

fn cmd_query(cli: &Cli, file: &Path, formula: &str, engine: Engine) -> Result<Outcome, Failure> {
    let (text, bytes) = read(file)?;
    let mut theory = parse_theory(&text)?;
    let mut alphabet = theory.alphabet().clone();
    let f = parse_modal(formula, &mut alphabet)?;
    if alphabet.len() > theory.num_atoms() {
        theory = theory.with_alphabet(alphabet.clone())?;
    }
    let mut report = RunReport::new("query", &file.display().to_string(), &bytes);
    report.set("engine", engine_name(engine));
    describe(&theory, &mut report);
    report.set("formula", show(&f, &alphabet));
    let value = match engine {
        Engine::Explicit => skeptical_value_with(&theory, &f, &Limits::new(cli.cap))?,
        Engine::Sder => {
            let prover = Prover::new();
            let fix = lfp_sder(&prover, &theory)?;
            let v = eval_modal_atom_3fol(&prover, fix.fixpoint(), &f)?;
            report.entailment_calls = Some(prover.calls());
            v
        }
    };
    report.set("value", value.to_string());
    Ok(report.into())
}

fn cmd_expansions(file: &Path) -> Result<Outcome, Failure> {
    let (text, bytes) = read(file)?;
    let theory = parse_theory(&text)?;
    let alphabet = theory.alphabet();
    let models = enumerate_autoepistemic_models(&theory)?;
    let mut report = RunReport::new("expansions", &file.display().to_string(), &bytes);
    describe(&theory, &mut report);
    report.set("models", models.len());
    report.set(
        "consistent",
        models.iter().filter(|m| !m.worlds.is_empty()).count(),
    );
    report.set(
        "expansions",
        models
            .iter()
            .map(|m| json!(m.worlds.display(alphabet).to_string()))
            .collect::<Vec<_>>(),
    );
    Ok(report.into())
}

fn cmd_lp(
    cli: &Cli,
    file: &Path,
    embedding: EmbeddingArg,
    oracle: bool,
    engine: Engine,
) -> Result<Outcome, Failure> {
    let (text, bytes) = read(file)?;
    let program = parse_program(&text)?;
    let embedding = match embedding {
        EmbeddingArg::Ael1 => Embedding::Ael1,
        EmbeddingArg::Ael2 => Embedding::Ael2,
    };
    let theory = embedding.translate(&program);
    let alphabet = theory.alphabet();
    let mut report = RunReport::new("lp", &file.display().to_string(), &bytes);
    report.set(
        "embedding",
        if embedding == Embedding::Ael1 {
            "ael1"
        } else {
            "ael2"
        },
    );
    report.set("engine", engine_name(engine));
    report.set("atoms", alphabet.names().join(" "));
    report.set(
        "theory",
        theory
            .formulas()
            .iter()
            .map(|f| json!(show(f, alphabet)))
            .collect::<Vec<_>>(),
    );
    let proj = match engine {
        Engine::Explicit => projection(lfp_der_with(&theory, &Limits::new(cli.cap))?.fixpoint()),
        Engine::Sder => {
            let prover = Prover::new();
            let fix = lfp_sder(&prover, &theory)?;
            let values = alphabet
                .atoms()
                .map(|a: Atom| eval_modal_atom_3fol(&prover, fix.fixpoint(), &Formula::atom(a)))
                .collect::<Result<Vec<_>, _>>()?;
            report.entailment_calls = Some(prover.calls());
            ThreeValuedInterpretation::new(values)
        }
    };
    report.set("projection", interpretation_map(&proj, alphabet));
    let mut disagreement = false;
    if oracle {
        let reference = embedding.reference_semantics(&program);
        let name = match embedding {
            Embedding::Ael1 => "well-founded",
            Embedding::Ael2 => "fitting-kunen",
        };
        report.set("oracle", name);
        report.set("oracle_result", interpretation_map(&reference, alphabet));
        disagreement = reference != proj;
        report.set("verdict", if disagreement { "DISAGREE" } else { "AGREE" });
    }
    Ok(Outcome {
        report,
        disagreement,
    })
}

fn cmd_check(cli: &Cli, file: &Path) -> Result<Outcome, Failure> {
    let (text, bytes) = read(file)?;
    let theory = parse_theory(&text)?;
    let n = theory.num_atoms();
    let limits = Limits::new(cli.cap);
    let explicit = lfp_der_with(&theory, &limits)?;
    let prover = Prover::new();
    let fix = lfp_sder(&prover, &theory)?;
    let sder_pairs = fix
        .steps
        .iter()
        .map(|s| bel_with(&s.theory, n, &limits))
        .collect::<Result<Vec<_>, _>>()?;
    let steps = explicit.pairs.len().max(sder_pairs.len());
    let at = |v: &[ael_core::BeliefPair], k: usize| v[k.min(v.len() - 1)].clone();

    let iteration_equality = (0..steps).all(|k| at(&explicit.pairs, k) == at(&sder_pairs, k));
    let mut operator_bridge = true;
    let mut modal_agreement = true;
    for (s, b) in fix.steps.iter().zip(&sder_pairs) {
        operator_bridge &=
            bel_with(&sder(&prover, &theory, &s.theory)?, n, &limits)? == der(&theory, b);
        for lit in &fix.literals {
            let Formula::Know(g) = lit else {
                unreachable!()
            };
            modal_agreement &=
                eval_modal_atom(b, g)? == eval_modal_atom_3fol(&prover, &s.theory, g)?;
        }
    }
    let mut representation = true;
    for b in &explicit.pairs {
        representation &= der(&theory, b) == bel_with(&instance_bp(&theory, b)?, n, &limits)?;
    }
    let y = instance_bp(&theory, explicit.fixpoint())?;
    let fixpoint_transfer = sder(&prover, &theory, &y)? == y
        && bel_with(fix.fixpoint(), n, &limits)? == *explicit.fixpoint();

    let checks = [
        ("iteration_equality", iteration_equality),
        ("operator_bridge", operator_bridge),
        ("representation", representation),
        ("modal_agreement", modal_agreement),
        ("fixpoint_transfer", fixpoint_transfer),
    ];
    let mut report = RunReport::new("check", &file.display().to_string(), &bytes);
    describe(&theory, &mut report);
    report.set("steps_checked", steps);
    report.set("explicit_iterations", explicit.iterations());
    report.set("sder_iterations", fix.iterations());
    let mut identities = Map::new();
    for (name, ok) in checks {
        identities.insert(name.into(), json!(if ok { "ok" } else { "FAIL" }));
    }
    report.set("identities", Value::Object(identities));
    let all = checks.iter().all(|(_, ok)| *ok);
    report.set("status", if all { "ok" } else { "FAIL" });
    Ok(Outcome {
        report,
        disagreement: !all,
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Lfp {
            file,
            engine,
            trace,
        } => cmd_lfp(cli, file, *engine, *trace),
        Command::Query {
            file,
            formula,
            engine,
        } => cmd_query(cli, file, formula, *engine),
        Command::Expansions { file } => cmd_expansions(file),
        Command::Lp {
            file,
            embedding,
            oracle,
            engine,
        } => cmd_lp(cli, file, *embedding, *oracle, *engine),
        Command::Check { file } => cmd_check(cli, file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    match run(&cli) {
        Ok(mut outcome) => {
            if cli.timing {
                outcome.report.wall_time_ms = Some(started.elapsed().as_secs_f64() * 1e3);
            }
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.report.to_text());
            }
            if outcome.disagreement {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
