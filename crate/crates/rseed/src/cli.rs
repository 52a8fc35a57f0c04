//! Command-line front end: `compute`, `examples` and `verify`.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::deltavec::{delta_via_xi, initial_delta_tilde};
use crate::error::{Error, Result};
use crate::golden;
use crate::mutalg::{self, green_report, run, GreenLabel, MutationRecord, RunOptions, RunOutcome};
use crate::quiver::{bicolor, build_gamma, classify_sawteeth, to_dot};
use crate::rootsys::{cartan_of, DynkinType, WeylElement};
use crate::sample;
use crate::words::{left_complete, rightmost_subword, ComboNumbers, Order, Word};

pub const SCHEMA: u32 = 1;

pub mod exit {
    pub const OK: i32 = 0;
    /// Usage errors, golden mismatches, failed verification.
    pub const FAILURE: i32 = 1;
    pub const NOT_REDUCED: i32 = 2;
    pub const NOT_LESS_OR_EQUAL: i32 = 3;
    pub const INVARIANT: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "rseed", version, about = "Initial seeds for C_{v,w} in simply-laced types")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderArg {
    /// Leftmost letter acts last, as words are usually written.
    Paper,
    /// The k-th entry is the k-th letter applied.
    Indexed,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Paper => Order::Paper,
            OrderArg::Indexed => Order::Indexed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CheckName {
    Sawteeth,
    Induction,
    Equivalence,
    DeltaOracle,
    Green,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the seed for a pair v ≤ w.
    Compute {
        /// Type A_n, D_n (n ≥ 4) or E6..E8, written like A4 or D5.
        #[arg(long = "type")]
        kind: DynkinType,
        /// Reduced word of w, comma separated.
        #[arg(long)]
        w: String,
        /// Any reduced word of v, comma separated; empty for v = e.
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Paper)]
        order: OrderArg,
        /// Reduced word of w₀ ending with the rightmost subword for v.
        #[arg(long)]
        completion: Option<String>,
        /// JSON output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Graphviz output of the final quiver.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include every single mutation in the output.
        #[arg(long)]
        trace: bool,
    },
    /// Regenerate the worked examples and compare with the stored data.
    Examples {
        #[arg(value_parser = ["all", "a3-tables", "a4-quiver", "a5-run", "d5-quiver", "d5-notations"])]
        which: String,
    },
    /// Run the invariant suites, exhaustively or on random samples.
    Verify {
        /// Type A_n, D_n (n ≥ 4) or E6..E8, written like A4 or D5.
        #[arg(long = "type")]
        kind: DynkinType,
        /// Longest word considered; defaults to the length of w₀ (at most 12).
        #[arg(long)]
        max_len: Option<usize>,
        /// Number of random pairs; exhaustive enumeration when absent.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [CheckName::Sawteeth, CheckName::Induction, CheckName::Equivalence, CheckName::DeltaOracle, CheckName::Green])]
        checks: Vec<CheckName>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(rename = "type")]
    pub kind: String,
    /// Words are written in the order given by `order`.
    pub order: OrderArg,
    pub w: Vec<usize>,
    pub v: Vec<usize>,
    pub embedding: Vec<usize>,
    pub completion: Vec<usize>,
    pub lw: usize,
    pub lv: usize,
    pub schedule: Vec<Vec<usize>>,
    pub deleted: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub color: usize,
    pub delta: Vec<i64>,
    pub frozen: bool,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub src: usize,
    pub dst: usize,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedDocument {
    pub schema: u32,
    pub metadata: Metadata,
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<MutationRecord>>,
}

fn written(w: &Word, order: Order) -> Vec<usize> {
    match order {
        Order::Paper => w.display_letters(),
        Order::Indexed => w.letters().to_vec(),
    }
}

impl SeedDocument {
    pub fn from_outcome(out: &RunOutcome, order: Order, with_trace: bool) -> Self {
        let state = &out.state;
        let seed = &out.seed;
        let w = state.word();
        let kind = w.cartan().kind();
        let metadata = Metadata {
            kind: kind.to_string(),
            order: match order {
                Order::Paper => OrderArg::Paper,
                Order::Indexed => OrderArg::Indexed,
            },
            w: written(w, order),
            v: written(&state.embedding().subword(), order),
            embedding: state.embedding().positions().to_vec(),
            completion: written(state.reference(), order),
            lw: seed.lw,
            lv: seed.lv,
            schedule: state.batches().to_vec(),
            deleted: seed.deleted.iter().copied().collect(),
        };
        let vertices = seed
            .ids
            .iter()
            .zip(&seed.deltas)
            .map(|(&id, d)| {
                let v = seed.quiver.vertex(id).expect("survivor in quiver");
                VertexDoc { id, color: v.color, delta: d.0.clone(), frozen: v.frozen, line: v.color, column: v.column }
            })
            .collect();
        let arrows = seed.quiver.arrows().map(|(src, dst, mult)| ArrowDoc { src, dst, mult }).collect();
        SeedDocument { schema: SCHEMA, metadata, vertices, arrows, trace: with_trace.then(|| state.trace().to_vec()) }
    }
}

/// Parses a comma separated list of letters; the empty string is the empty word.
pub fn parse_letters(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad letter `{}`: {e}", t.trim()))).collect()
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotReduced { .. } => exit::NOT_REDUCED,
        Error::NotLessOrEqual => exit::NOT_LESS_OR_EQUAL,
        Error::InvariantViolation { .. } | Error::AmbiguousBranch { .. } | Error::NoValidBranch { .. } => {
            exit::INVARIANT
        }
        _ => exit::FAILURE,
    }
}

pub struct ComputeArgs {
    pub kind: DynkinType,
    pub w: String,
    pub v: String,
    pub order: Order,
    pub completion: Option<String>,
    pub trace: bool,
}

/// Runs the algorithm with all checks; errors carry their exit code.
pub fn compute(args: &ComputeArgs) -> std::result::Result<(SeedDocument, RunOutcome), (i32, String)> {
    let fail = |e: Error| (exit_code(&e), e.to_string());
    let c = cartan_of(args.kind).map_err(fail)?;
    let parse = |s: &str| -> std::result::Result<Word, (i32, String)> {
        let letters = parse_letters(s).map_err(|e| (exit::FAILURE, e))?;
        Word::new(&c, &letters, args.order).map_err(fail)
    };
    let w = parse(&args.w)?;
    let v = parse(&args.v)?.element();
    let reference = args.completion.as_deref().map(parse).transpose()?;
    let out = match run(&w, &v, &RunOptions { reference: reference.clone(), check: true }) {
        Ok(out) => out,
        Err(e @ Error::InvariantViolation { .. })
        | Err(e @ Error::AmbiguousBranch { .. })
        | Err(e @ Error::NoValidBranch { .. }) => {
            let mut msg = e.to_string();
            if let Ok(mut state) = mutalg::AlgState::new(&w, &v, reference.as_ref()) {
                while !state.is_done() && state.step_hat().is_ok() {}
                msg.push_str("\ntrace:");
                for r in state.trace() {
                    msg.push_str(&format!("\n  step {} at {}: {} -> {}", r.step, r.vertex, r.before, r.after));
                }
            }
            return Err((exit_code(&e), msg));
        }
        Err(e) => return Err(fail(e)),
    };
    Ok((SeedDocument::from_outcome(&out, args.order, args.trace), out))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    /// Observations that are reported but do not fail the check.
    pub findings: usize,
    pub first_finding: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, detail: String) {
        self.failures += 1;
        self.first_counterexample.get_or_insert(detail);
    }

    fn note(&mut self, detail: String) {
        self.findings += 1;
        self.first_finding.get_or_insert(detail);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Sawteeth => "sawteeth",
            CheckName::Induction => "induction",
            CheckName::Equivalence => "equivalence",
            CheckName::DeltaOracle => "delta-oracle",
            CheckName::Green => "green",
        }
    }
}

fn describe(w: &Word, v: &WeylElement) -> String {
    let c = w.cartan();
    let vw = Word::new(c, &v.reduced_word(c), Order::Indexed).expect("reduced");
    format!("w={w} v={vw}")
}

/// Checks a single pair, adding one case to each selected check.
pub fn verify_pair(w: &Word, v: &WeylElement, checks: &BTreeSet<CheckName>, report: &mut [CheckResult]) {
    let slot = |name: CheckName| checks.iter().position(|&c| c == name);
    let Ok(emb) = rightmost_subword(v, w) else { return };
    let case = describe(w, v);

    if let Some(i) = slot(CheckName::DeltaOracle) {
        let r = &mut report[i];
        r.cases += 1;
        let cn = ComboNumbers::new(w, &emb);
        let wdot = left_complete(w);
        let vdot = left_complete(&emb.subword());
        for k in 1..=w.len() {
            match delta_via_xi(&wdot, k, &vdot) {
                Ok(d) if d.truncated(cn.lv()) == initial_delta_tilde(&cn, k).as_slice() => {}
                Ok(d) => {
                    r.fail(format!("{case} k={k}: {:?} vs {:?}", d.truncated(cn.lv()), initial_delta_tilde(&cn, k)));
                    break;
                }
                Err(e) => {
                    r.fail(format!("{case} k={k}: {e}"));
                    break;
                }
            }
        }
    }
    if let Some(i) = slot(CheckName::Equivalence) {
        let r = &mut report[i];
        r.cases += 1;
        match mutalg::verify_equivalence(w, &emb) {
            Ok(rep) if rep.agree() => {}
            Ok(rep) => r.fail(format!("{case}: step {:?}, {:?} vs {:?}", rep.divergence, rep.tilde, rep.hat)),
            Err(e) => r.fail(format!("{case}: {e}")),
        }
    }
    if let Some(i) = slot(CheckName::Induction) {
        let r = &mut report[i];
        r.cases += 1;
        if let Err(e) = run(w, v, &RunOptions { reference: None, check: true }) {
            r.fail(format!("{case}: {e}"));
        }
    }
    if let Some(i) = slot(CheckName::Green) {
        let r = &mut report[i];
        r.cases += 1;
        match run(w, v, &RunOptions::default()) {
            Ok(out) => {
                let labels = green_report(w, out.state.trace());
                if let Some(t) = labels.iter().position(|&g| g != GreenLabel::Green) {
                    let rec = &out.state.trace()[t];
                    r.note(format!("{case}: {:?} mutation at {} in step {}", labels[t], rec.vertex, rec.step));
                }
            }
            Err(e) => r.fail(format!("{case}: {e}")),
        }
    }
}

fn verify_sawteeth(w: &Word, r: &mut CheckResult) {
    r.cases += 1;
    let q = build_gamma(w);
    for &(x, y) in w.cartan().adjacency() {
        for (a, b) in [(x, y), (y, x)] {
            let rep = classify_sawteeth(&bicolor(&q, a, b));
            if !rep.valid {
                r.fail(format!("w={w} ({a},{b}): {}", rep.violation.unwrap_or_default()));
                return;
            }
        }
    }
}

pub struct VerifyArgs {
    pub kind: DynkinType,
    pub max_len: Option<usize>,
    pub samples: Option<usize>,
    pub checks: Vec<CheckName>,
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyReport> {
    let c = cartan_of(args.kind)?;
    let checks: BTreeSet<CheckName> = args.checks.iter().copied().collect();
    let max_len = args.max_len.unwrap_or(c.num_positive_roots().min(12));
    let mut results: Vec<CheckResult> = checks.iter().map(|c| CheckResult::new(c.as_str())).collect();
    let pair_checks: BTreeSet<CheckName> = checks.iter().copied().filter(|&c| c != CheckName::Sawteeth).collect();
    let saw = checks.iter().position(|&c| c == CheckName::Sawteeth);
    let mut pair_results: Vec<CheckResult> = pair_checks.iter().map(|c| CheckResult::new(c.as_str())).collect();

    match args.samples {
        Some(n) => {
            let mut rng = sample::rng_from_env(sample::DEFAULT_SEED);
            for _ in 0..n {
                let (w, v) = sample::random_pair(&c, max_len, &mut rng);
                if let Some(i) = saw {
                    verify_sawteeth(&w, &mut results[i]);
                }
                verify_pair(&w, &v, &pair_checks, &mut pair_results);
            }
        }
        None => {
            let words = sample::all_reduced_words(&c, max_len);
            let elements = if pair_checks.is_empty() { Vec::new() } else { sample::all_elements(&c, max_len) };
            for w in &words {
                if let Some(i) = saw {
                    verify_sawteeth(w, &mut results[i]);
                }
                for v in &elements {
                    verify_pair(w, v, &pair_checks, &mut pair_results);
                }
            }
        }
    }
    for pr in pair_results {
        if let Some(slot) = results.iter_mut().find(|r| r.name == pr.name) {
            *slot = pr;
        }
    }
    Ok(VerifyReport { kind: args.kind.to_string(), checks: results })
}

fn write_or_print(path: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn main() -> i32 {
    run_with(std::env::args_os())
}

pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::FAILURE } else { exit::OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Compute { kind, w, v, order, completion, out, dot, trace } => {
            let args = ComputeArgs { kind, w, v, order: order.into(), completion, trace };
            match compute(&args) {
                Ok((doc, outcome)) => {
                    let json = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
                    if let Err(e) = write_or_print(out.as_ref(), &json) {
                        eprintln!("error: {e}");
                        return exit::FAILURE;
                    }
                    if let Some(p) = dot {
                        if let Err(e) = fs::write(&p, to_dot(&outcome.seed.quiver, &format!("{kind} seed"))) {
                            eprintln!("error: {e}");
                            return exit::FAILURE;
                        }
                    }
                    exit::OK
                }
                Err((code, msg)) => {
                    eprintln!("error: {msg}");
                    code
                }
            }
        }
        Command::Examples { which } => {
            let names: Vec<&str> = if which == "all" { golden::EXAMPLES.to_vec() } else { vec![which.as_str()] };
            let mut code = exit::OK;
            for name in names {
                match golden::example(name).expect("validated by clap") {
                    Ok(d) => {
                        println!("{d}");
                        if !d.is_clean() {
                            code = exit::FAILURE;
                        }
                    }
                    Err(e) => {
                        println!("{name}: error: {e}");
                        code = exit::FAILURE;
                    }
                }
            }
            code
        }
        Command::Verify { kind, max_len, samples, checks, json } => {
            match verify(&VerifyArgs { kind, max_len, samples, checks }) {
                Ok(report) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                    } else {
                        for r in &report.checks {
                            let status = if r.passed() { "pass" } else { "FAIL" };
                            println!(
                                "{status} {:<13} {} cases, {} failures, {} findings",
                                r.name, r.cases, r.failures, r.findings
                            );
                            if let Some(x) = &r.first_counterexample {
                                println!("     counterexample: {x}");
                            }
                            if let Some(x) = &r.first_finding {
                                println!("     finding: {x}");
                            }
                        }
                    }
                    if report.passed() {
                        exit::OK
                    } else {
                        exit::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
    }
}
