use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use duplex::binary::{self, TreeOps};
use duplex::cube::{self, CubeOps};
use duplex::decorated;
use duplex::laws::{self, Structure, Variety};
use duplex::morphisms;
use duplex::ops::DuplexOps;
use duplex::permutation::{self, PermOps};
use duplex::planar;
use duplex::series::{self, CountSource, IdentityName};
use duplex::{Alphabet, BinaryTree, CubeVertex, DuplexExpr, Error, IndecKind, Permutation, Symbol};

/// Duplexes of permutations, trees and cube vertices.
#[derive(Parser)]
#[command(name = "duplex", version)]
struct Cli {
    /// Print a JSON envelope {command, inputs, result} instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of degree N in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        structure: EnumStructure,
        #[arg(long)]
        n: usize,
        /// Keep only indecomposable permutations of the given kind.
        #[arg(long, value_enum)]
        filter: Option<Filter>,
    },
    /// Print "n value" for n = 1..=MAX.
    Count {
        #[arg(long, value_enum)]
        sequence: Sequence,
        #[arg(long)]
        max: usize,
    },
    /// Factor a permutation.
    Factor {
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Evaluate a duplex expression in a target structure.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        target: Target,
        /// Value of a generator, as NAME=VALUE; unassigned generators map to
        /// the target's generator.
        #[arg(long = "assign", value_name = "NAME=VALUE")]
        assign: Vec<String>,
    },
    /// Apply one of the canonical morphisms.
    Map {
        #[arg(long, value_enum)]
        morphism: Morphism,
        #[arg(long)]
        input: String,
    },
    /// Audit the identities of a variety up to a total degree.
    Laws {
        #[arg(long, value_enum)]
        structure: LawStructure,
        #[arg(long, value_enum)]
        variety: LawVariety,
        #[arg(long)]
        bound: usize,
    },
    /// Check a generating-function identity coefficient by coefficient.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(IdentityName::ALL.map(IdentityName::name)))]
        check: String,
        /// Highest power of T compared; defaults per identity.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumStructure {
    Perm,
    Tree,
    Decorated,
    Binary,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    #[value(name = "sharp-indec")]
    Sharp,
    #[value(name = "natural-indec")]
    Natural,
    #[value(name = "s2-indec")]
    S2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    U,
    D,
    #[value(name = "super-catalan")]
    SuperCatalan,
    Catalan,
    Decorated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sharp,
    Natural,
    Duplex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Perm,
    Binary,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum Morphism {
    Alpha,
    Rho,
    Phi,
    Leafsigns,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawStructure {
    Perm,
    Decorated,
    Binary,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawVariety {
    Duplex,
    Duplexes1,
    Duplexes2,
    Dimonoid,
}

impl From<LawStructure> for Structure {
    fn from(s: LawStructure) -> Self {
        match s {
            LawStructure::Perm => Structure::Perm,
            LawStructure::Decorated => Structure::Decorated,
            LawStructure::Binary => Structure::Binary,
            LawStructure::Cube => Structure::Cube,
        }
    }
}

impl From<LawVariety> for Variety {
    fn from(v: LawVariety) -> Self {
        match v {
            LawVariety::Duplex => Variety::Duplex,
            LawVariety::Duplexes1 => Variety::Duplexes1,
            LawVariety::Duplexes2 => Variety::Duplexes2,
            LawVariety::Dimonoid => Variety::Dimonoid,
        }
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped values").get_name().to_string()
}

/// Why a command did not succeed.
enum Failure {
    /// Bad input; the message names the offending flag.
    Usage(String),
    /// A requested size exceeds a configured bound.
    Bound(String),
}

impl Failure {
    /// Attributes a library error to `flag`.
    fn from_error(flag: &str, e: Error) -> Failure {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(format!("{flag}: {e}")),
            _ => Failure::Usage(format!("{flag}: {e}")),
        }
    }
}

/// Successful output: the text form, the JSON result, and whether the
/// command refuted something.
struct Output {
    text: String,
    result: Value,
    refuted: bool,
}

impl Output {
    fn ok(text: String, result: Value) -> Self {
        Output {
            text,
            result,
            refuted: false,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: BTreeMap<&'a str, Value>,
    result: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, inputs) = describe(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let env = Envelope {
                    command: name,
                    inputs,
                    result: out.result,
                };
                println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            ExitCode::from(if out.refuted { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn describe(cmd: &Command) -> (&'static str, BTreeMap<&'static str, Value>) {
    let mut m = BTreeMap::new();
    let name = match cmd {
        Command::Enumerate { structure, n, filter } => {
            m.insert("structure", json!(value_name(*structure)));
            m.insert("n", json!(n));
            m.insert("filter", json!(filter.map(value_name)));
            "enumerate"
        }
        Command::Count { sequence, max } => {
            m.insert("sequence", json!(value_name(*sequence)));
            m.insert("max", json!(max));
            "count"
        }
        Command::Factor { perm, mode } => {
            m.insert("perm", json!(perm));
            m.insert("mode", json!(value_name(*mode)));
            "factor"
        }
        Command::Eval { expr, target, assign } => {
            m.insert("expr", json!(expr));
            m.insert("target", json!(value_name(*target)));
            m.insert("assign", json!(assign));
            "eval"
        }
        Command::Map { morphism, input } => {
            m.insert("morphism", json!(value_name(*morphism)));
            m.insert("input", json!(input));
            "map"
        }
        Command::Laws { structure, variety, bound } => {
            m.insert("structure", json!(value_name(*structure)));
            m.insert("variety", json!(value_name(*variety)));
            m.insert("bound", json!(bound));
            "laws"
        }
        Command::Verify { check, order } => {
            m.insert("check", json!(check));
            m.insert("order", json!(order));
            "verify"
        }
    };
    (name, m)
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Enumerate { structure, n, filter } => enumerate(*structure, *n, *filter),
        Command::Count { sequence, max } => count(*sequence, *max),
        Command::Factor { perm, mode } => factor(perm, *mode),
        Command::Eval { expr, target, assign } => eval(expr, *target, assign),
        Command::Map { morphism, input } => map(*morphism, input),
        Command::Laws { structure, variety, bound } => audit(*structure, *variety, *bound),
        Command::Verify { check, order } => verify(check, *order),
    }
}

fn listing<T: ToString>(items: impl IntoIterator<Item = T>) -> Output {
    let lines: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    Output::ok(lines.join("\n"), json!(lines))
}

fn enumerate(structure: EnumStructure, n: usize, filter: Option<Filter>) -> Result<Output, Failure> {
    let err = |e| Failure::from_error("--n", e);
    if filter.is_some() && !matches!(structure, EnumStructure::Perm) {
        return Err(Failure::Usage("--filter: only valid with --structure perm".into()));
    }
    Ok(match structure {
        EnumStructure::Perm => match filter {
            None => listing(permutation::enumerate_all(n).map_err(err)?),
            Some(f) => {
                let kind = match f {
                    Filter::Sharp => IndecKind::Sharp,
                    Filter::Natural => IndecKind::Natural,
                    Filter::S2 => IndecKind::S2,
                };
                listing(permutation::enumerate_indecomposable(n, kind).map_err(err)?)
            }
        },
        EnumStructure::Tree => listing(planar::enumerate_trees(n).map_err(err)?),
        EnumStructure::Decorated => listing(decorated::enumerate_decorated(n).map_err(err)?),
        EnumStructure::Binary => listing(binary::enumerate_binary(n).map_err(err)?),
        EnumStructure::Cube => listing(cube::enumerate_cubes(n).map_err(err)?),
    })
}

fn count(sequence: Sequence, max: usize) -> Result<Output, Failure> {
    if max == 0 {
        return Err(Failure::Usage("--max: must be at least 1".into()));
    }
    let source = match sequence {
        Sequence::U => CountSource::SharpIndec,
        Sequence::D => CountSource::S2Indec,
        Sequence::SuperCatalan => CountSource::SuperCatalan,
        Sequence::Catalan => CountSource::Catalan,
        Sequence::Decorated => CountSource::DuplSize(1),
    };
    let s = match series::from_counts(source, max) {
        Ok(s) => s,
        // Two independent computations disagreeing refutes the formula.
        Err(e @ Error::CountMismatch { .. }) => {
            return Ok(Output {
                text: e.to_string(),
                result: json!({ "error": e.to_string() }),
                refuted: true,
            })
        }
        Err(e) => return Err(Failure::from_error("--max", e)),
    };
    let rows: Vec<(usize, String)> = (1..=max).map(|n| (n, s.coeff(n).to_string())).collect();
    let text = rows.iter().map(|(n, v)| format!("{n} {v}")).collect::<Vec<_>>().join("\n");
    let result = rows.iter().map(|(n, v)| json!({ "n": n, "value": v })).collect();
    Ok(Output::ok(text, Value::Array(result)))
}

fn expr_json<L: Clone + std::fmt::Display>(expr: &DuplexExpr<L>) -> Value {
    let (tree, tag, labels) = expr.to_machine();
    json!({
        "expression": expr.to_string(),
        "tree": tree,
        "tag": tag.to_string(),
        "labels": labels,
    })
}

fn factor(perm: &str, mode: Mode) -> Result<Output, Failure> {
    let f: Permutation = perm.parse().map_err(|e| Failure::from_error("--perm", e))?;
    Ok(match mode {
        Mode::Sharp | Mode::Natural => {
            let factors = if matches!(mode, Mode::Sharp) {
                permutation::sharp_factorize(&f)
            } else {
                permutation::natural_factorize(&f)
            };
            let strings: Vec<String> = factors.iter().map(Permutation::to_string).collect();
            Output::ok(strings.join(" "), json!(strings))
        }
        Mode::Duplex => {
            let nf = permutation::duplex_factorize(&f);
            Output::ok(nf.to_string(), expr_json(&nf))
        }
    })
}

/// Alphabet of the lowercase identifiers occurring in `text`.
fn alphabet_of(text: &str) -> Result<Alphabet, Error> {
    let mut names = Vec::new();
    let mut current = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_lowercase() || (!current.is_empty() && ch.is_ascii_digit()) {
            current.push(ch);
        } else if !current.is_empty() {
            names.push(std::mem::take(&mut current));
        }
    }
    if names.is_empty() {
        return Ok(Alphabet::single());
    }
    Alphabet::new(names)
}

fn eval_in<D>(
    expr: &DuplexExpr<Symbol>,
    ops: &D,
    generator: D::Carrier,
    assign: &[(String, String)],
) -> Result<D::Carrier, Failure>
where
    D: DuplexOps,
    D::Carrier: std::str::FromStr<Err = Error>,
{
    let mut values = BTreeMap::new();
    for (name, text) in assign {
        let v: D::Carrier = text.parse().map_err(|e| Failure::from_error("--assign", e))?;
        values.insert(name.as_str(), v);
    }
    expr.eval_hom(|s| Some(values.get(s.as_str()).cloned().unwrap_or_else(|| generator.clone())), ops)
        .map_err(|e| Failure::from_error("--expr", e))
}

fn eval(text: &str, target: Target, assign: &[String]) -> Result<Output, Failure> {
    let alphabet = alphabet_of(text).map_err(|e| Failure::from_error("--expr", e))?;
    let expr = alphabet.parse(text).map_err(|e| Failure::from_error("--expr", e))?;
    let mut pairs = Vec::new();
    for a in assign {
        let Some((name, value)) = a.split_once('=') else {
            return Err(Failure::Usage(format!("--assign: expected NAME=VALUE, got {a:?}")));
        };
        let name = name.trim();
        if !alphabet.contains(name) {
            return Err(Failure::Usage(format!(
                "--assign: generator {name:?} does not occur in the expression"
            )));
        }
        pairs.push((name.to_string(), value.to_string()));
    }
    let value = match target {
        Target::Perm => eval_in(&expr, &PermOps, Permutation::unit(), &pairs)?.to_string(),
        Target::Binary => eval_in(&expr, &TreeOps, BinaryTree::generator(), &pairs)?.to_string(),
        Target::Cube => eval_in(&expr, &CubeOps, CubeVertex::generator(), &pairs)?.to_string(),
    };
    Ok(Output::ok(value.clone(), json!(value)))
}

fn map(morphism: Morphism, input: &str) -> Result<Output, Failure> {
    let err = |e| Failure::from_error("--input", e);
    let decorated = || -> Result<_, Failure> {
        Ok(Alphabet::single().parse(input).map_err(err)?.forget_labels())
    };
    let value = match morphism {
        Morphism::Alpha => morphisms::alpha(&decorated()?).to_string(),
        Morphism::Rho => morphisms::rho(&decorated()?).to_string(),
        Morphism::Phi => {
            let u: BinaryTree = input.parse().map_err(err)?;
            morphisms::phi(&u).map_err(err)?.to_string()
        }
        Morphism::Leafsigns => morphisms::leaf_sign_vector(&decorated()?).map_err(err)?.to_string(),
    };
    Ok(Output::ok(value.clone(), json!(value)))
}

fn audit(structure: LawStructure, variety: LawVariety, bound: usize) -> Result<Output, Failure> {
    let r = laws::check_laws(structure.into(), variety.into(), bound)
        .map_err(|e| Failure::from_error("--bound", e))?;
    let result = json!({
        "satisfied": r.satisfied,
        "failing": r.failing.map(|id| id.text()),
        "witness": r.witness,
        "triples_checked": r.triples_checked,
    });
    Ok(Output {
        text: r.to_string(),
        result,
        refuted: !r.satisfied,
    })
}

fn verify(check: &str, order: Option<usize>) -> Result<Output, Failure> {
    let id = IdentityName::ALL
        .into_iter()
        .find(|i| i.name() == check)
        .expect("restricted by the parser");
    let order = order.unwrap_or(id.default_order());
    let report = series::verify_identity(id, order).map_err(|e| Failure::from_error("--order", e))?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "mismatch": c.mismatch.as_ref().map(|m| json!({
                    "degree": m.degree,
                    "left": m.left.to_string(),
                    "right": m.right.to_string(),
                })),
            })
        })
        .collect();
    Ok(Output {
        text: report.to_string(),
        result: json!({ "passed": report.passed(), "order": order, "checks": checks }),
        refuted: !report.passed(),
    })
}
