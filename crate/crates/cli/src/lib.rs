//! The `frobx` command line: each subcommand loads one algebra file, runs a
//! construction, and reports named exact checks.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
//! and usage errors (unreadable or malformed file, degenerate form, bad word,
//! genus requested for a noncommutative algebra).

mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use frobx_core::adjunction::round_trip_report;
use frobx_core::em::{identity_one_cell, two_cell_basis};
use frobx_core::frobenius::gram_matrix;
use frobx_core::random::{random_two_cell, seeded};
use frobx_core::report::{Check, Report};
use frobx_core::tqft::{evaluate, parse_word, surface_invariant, surface_word};
use frobx_core::{
    build_ambijunction, build_frobenius, check_frobenius, compose_adjunctions, identity_adjunction, mate,
    mate_inv, monad_from_adjunction, self_adjunction_from_ambijunction, Algebra, AlgebraFile, Error,
    FrobeniusStructure, LinearMap, Rational,
};

pub use report::{CommandReport, Format};
use report::{combination, matrix_lines, matrix_value, vector_value};

/// Random 2-cells tried by `mate-demo`.
const MATE_SAMPLES: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "frobx", version, about = "Exact checks of Frobenius structures on finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Genus of the closed surface evaluated by `tqft`.
    #[arg(long, global = true)]
    genus: Option<usize>,
    /// Cobordism word evaluated by `tqft`, e.g. "u | d | m | c".
    #[arg(long, global = true)]
    word: Option<String>,
    /// Seed for the random 2-cells of `mate-demo`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct Input {
    /// Algebra file (JSON).
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the algebra axioms and that the counit gives a nondegenerate form.
    Validate(Input),
    /// Build the Frobenius structure and certify it.
    Frobenius(Input),
    /// The comultiplication derived from the counit.
    Delta(Input),
    /// Gram matrix of the pairing and the dual basis.
    Gram(Input),
    /// Induction and restriction as a two-sided adjunction.
    Ambijunction(Input),
    /// Recover the Frobenius structure from its ambijunction.
    Roundtrip(Input),
    /// Comultiplication and counit as mates of multiplication and unit.
    MateDemo(Input),
    /// Evaluate a cobordism word or a closed surface.
    Tqft(Input),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Frobenius(_) => "frobenius",
            Command::Delta(_) => "delta",
            Command::Gram(_) => "gram",
            Command::Ambijunction(_) => "ambijunction",
            Command::Roundtrip(_) => "roundtrip",
            Command::MateDemo(_) => "mate-demo",
            Command::Tqft(_) => "tqft",
        }
    }

    fn input(&self) -> &Path {
        match self {
            Command::Validate(i)
            | Command::Frobenius(i)
            | Command::Delta(i)
            | Command::Gram(i)
            | Command::Ambijunction(i)
            | Command::Roundtrip(i)
            | Command::MateDemo(i)
            | Command::Tqft(i) => &i.input,
        }
    }
}

/// What a process would print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Why a subcommand stopped before producing its own report.
enum Stop {
    /// Exit 2.
    Input(String),
    /// Exit 1: the data fails an axiom the construction needs.
    Failed(Report),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::AxiomFailure(_) | Error::ShapeMismatch(_) | Error::ObjectMismatch(_) | Error::Singular => {
                let mut r = Report::new();
                r.push("construction", false, Some(e.to_string()));
                Stop::Failed(r)
            }
            other => Stop::Input(other.to_string()),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let name = cli.command.name();
    match dispatch(&cli) {
        Ok(report) => Outcome {
            code: if report.passed { 0 } else { 1 },
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(Stop::Failed(r)) => {
            let mut report = CommandReport::new(name);
            report.absorb("", r);
            Outcome { code: 1, stdout: report.render(cli.format), stderr: String::new() }
        }
        Err(Stop::Input(msg)) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut report = CommandReport::new(name);
                    report.push(Check { name: "input".into(), passed: false, witness: Some(msg.clone()) });
                    report.render(Format::Json)
                }
                Format::Text => String::new(),
            };
            Outcome { code: 2, stdout, stderr: format!("error: {msg}\n") }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<CommandReport, Stop> {
    let (alg, counit) = load(cli.command.input())?;
    match &cli.command {
        Command::Validate(_) => validate(&alg, &counit),
        Command::Frobenius(_) => frobenius(&structure(&alg, &counit)?),
        Command::Delta(_) => delta(&structure(&alg, &counit)?),
        Command::Gram(_) => gram(&structure(&alg, &counit)?),
        Command::Ambijunction(_) => ambijunction(&structure(&alg, &counit)?),
        Command::Roundtrip(_) => roundtrip(&structure(&alg, &counit)?),
        Command::MateDemo(_) => mate_demo(&structure(&alg, &counit)?, cli.seed),
        Command::Tqft(_) => tqft(&structure(&alg, &counit)?, cli.genus, cli.word.as_deref()),
    }
}

fn load(path: &Path) -> Result<(Algebra, Vec<Rational>), Stop> {
    let text = std::fs::read_to_string(path).map_err(|e| Stop::Input(format!("cannot read {}: {e}", path.display())))?;
    let file = AlgebraFile::from_json(&text).map_err(|e| Stop::Input(format!("{}: {e}", path.display())))?;
    Ok(file.into_parts()?)
}

/// Algebra axioms first, so a broken table is reported with its witnesses.
fn structure(alg: &Algebra, counit: &[Rational]) -> Result<FrobeniusStructure, Stop> {
    let axioms = alg.validate();
    if !axioms.passed() {
        return Err(Stop::Failed(axioms));
    }
    Ok(build_frobenius(alg, counit)?)
}

fn validate(alg: &Algebra, counit: &[Rational]) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("validate");
    report.value("name", alg.name());
    report.value("dim", alg.dim());
    report.value("commutative", alg.is_commutative());
    report.line(format!("{} (dimension {})", alg.name(), alg.dim()));
    let axioms = alg.validate();
    let valid = axioms.passed();
    report.absorb("", axioms);
    if valid {
        let gram = gram_matrix(alg, counit);
        if gram.rank() < alg.dim() {
            return Err(Error::DegenerateForm.into());
        }
        report.line(format!("counit {} is nondegenerate", combination(alg.basis(), counit)));
    }
    Ok(report)
}

fn frobenius(fs: &FrobeniusStructure) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("frobenius");
    let names = fs.algebra().basis();
    report.line("gram:");
    for l in matrix_lines(fs.gram()) {
        report.line(l);
    }
    report.line("dual basis:");
    for (i, v) in fs.dual_basis().iter().enumerate() {
        report.line(format!("  {}^ = {}", names[i], combination(names, v)));
    }
    report.line("comultiplication:");
    for l in delta_lines(fs) {
        report.line(l);
    }
    report.value("gram", matrix_value(fs.gram()));
    report.value("dual_basis", dual_basis_value(fs));
    report.value("comultiplication", matrix_value(fs.comult()));
    report.absorb("", check_frobenius(fs)?);
    report.verdict("all Frobenius axioms hold");
    Ok(report)
}

fn delta(fs: &FrobeniusStructure) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("delta");
    for l in delta_lines(fs) {
        report.line(l);
    }
    report.value("comultiplication", matrix_value(fs.comult()));
    report.value("counit", vector_value(fs.counit_vec()));
    let checks = check_frobenius(fs)?;
    for name in ["coassociativity", "counit"] {
        if let Some(c) = checks.get(name) {
            report.push(c.clone());
        }
    }
    Ok(report)
}

fn gram(fs: &FrobeniusStructure) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("gram");
    let names = fs.algebra().basis();
    for l in matrix_lines(fs.gram()) {
        report.line(l);
    }
    for (i, v) in fs.dual_basis().iter().enumerate() {
        report.line(format!("  {}^ = {}", names[i], combination(names, v)));
    }
    report.value("gram", matrix_value(fs.gram()));
    report.value("dual_basis", dual_basis_value(fs));
    report.absorb("", fs.duality_report()?);
    Ok(report)
}

fn ambijunction(fs: &FrobeniusStructure) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("ambijunction");
    let amb = build_ambijunction(fs)?;
    let n = fs.dim();
    report.line(format!("induction Q -> {}: carrier dimension {n}", fs.algebra().name()));
    report.line(format!("restriction {} -> Q: carrier dimension 1", fs.algebra().name()));
    report.value("induction_carrier", n);
    report.value("restriction_carrier", 1);
    report.value("casimir", matrix_value(fs.casimir()));
    report.value("counit", vector_value(fs.counit_vec()));
    report.absorb("", amb.report()?);
    Ok(report)
}

fn roundtrip(fs: &FrobeniusStructure) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("roundtrip");
    let sa = self_adjunction_from_ambijunction(&build_ambijunction(fs)?)?;
    report.absorb("self-adjunction: ", sa.report().clone());
    report.absorb("recovered ", round_trip_report(fs)?);
    Ok(report)
}

fn mate_demo(fs: &FrobeniusStructure, seed: u64) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("mate-demo");
    let amb = build_ambijunction(fs)?;
    let sa = self_adjunction_from_ambijunction(&amb)?;
    let tt = sa.adjunction();
    let tttt = compose_adjunctions(tt, tt)?;
    let id = identity_adjunction(tt.lower());
    let one = identity_one_cell(tt.lower());
    let monad = monad_from_adjunction(amb.fwd())?;
    let comult = fs.comult().clone();
    let counit = fs.counit_map();

    let mut eq = |name: &str, lhs: &LinearMap, rhs: &LinearMap| -> Result<(), Stop> {
        let mut r = Report::new();
        r.equation(name, lhs, rhs)?;
        report.absorb("", r);
        Ok(())
    };
    eq("mate of multiplication is comultiplication", mate(&tttt, tt, &one, &one, &monad.mu)?.rho(), &comult)?;
    eq("mate of unit is counit", mate(&id, tt, &one, &one, &monad.eta)?.rho(), &counit)?;
    eq("inverse mate of multiplication is comultiplication", mate_inv(tt, &tttt, &one, &one, &monad.mu)?.rho(), &comult)?;
    eq("inverse mate of unit is counit", mate_inv(tt, &id, &one, &one, &monad.eta)?.rho(), &counit)?;

    let basis = two_cell_basis(tt.left(), tt.left())?;
    let mut rng = seeded(seed);
    let mut witness = None;
    for k in 0..MATE_SAMPLES {
        let xi = random_two_cell(&basis, &mut rng)?;
        let back = mate_inv(tt, tt, &one, &one, &mate(tt, tt, &one, &one, &xi)?)?;
        if !back.same_as(&xi) {
            witness = Some(format!("sample {k}"));
            break;
        }
    }
    report.push(Check { name: "mates are inverse".into(), passed: witness.is_none(), witness });
    report.value("seed", seed);
    report.value("samples", MATE_SAMPLES);
    report.value("comultiplication", matrix_value(&comult));
    report.value("counit", vector_value(fs.counit_vec()));
    Ok(report)
}

fn tqft(fs: &FrobeniusStructure, genus: Option<usize>, word: Option<&str>) -> Result<CommandReport, Stop> {
    let mut report = CommandReport::new("tqft");
    report.bare();
    match (genus, word) {
        (Some(g), None) => {
            let value = surface_invariant(fs, g)?;
            let text = surface_word(g);
            let mut r = Report::new();
            r.equation("surface word agrees", &evaluate(fs, &text)?, &LinearMap::scalar(value.clone()))?;
            report.absorb("", r);
            report.line(value.to_string());
            report.value("genus", g);
            report.value("word", text);
            report.value("value", value.to_string());
        }
        (None, Some(w)) => {
            let parsed = parse_word(w).map_err(Error::from)?;
            let map = evaluate(fs, w)?;
            for l in matrix_lines(&map) {
                report.line(l);
            }
            report.value("word", parsed.to_string());
            report.value("inputs", parsed.in_strands());
            report.value("outputs", parsed.out_strands());
            report.value("value", matrix_value(&map));
        }
        _ => return Err(Stop::Input("tqft needs exactly one of --genus or --word".into())),
    }
    Ok(report)
}

/// Lines `Δ(e_i) = Σ c e_p⊗e_q`.
fn delta_lines(fs: &FrobeniusStructure) -> Vec<String> {
    let names = fs.algebra().basis();
    let pairs: Vec<String> = names
        .iter()
        .flat_map(|p| names.iter().map(move |q| format!("{p}⊗{q}")))
        .collect();
    (0..fs.dim())
        .map(|i| format!("  Δ({}) = {}", names[i], combination(&pairs, &fs.comult().col_vec(i))))
        .collect()
}

fn dual_basis_value(fs: &FrobeniusStructure) -> serde_json::Value {
    serde_json::Value::Array(fs.dual_basis().iter().map(|v| vector_value(v)).collect())
}
