//! Reference data from the worked examples, embedded at build time, and
//! the comparisons that regenerate it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;

use crate::deltavec::{delta_via_xi, initial_delta_same, DeltaVector};
use crate::error::Result;
use crate::mutalg::{run, schedule_tilde, AlgState, RunOptions};
use crate::quiver::{bicolor, build_gamma, classify_sawteeth, Quiver};
use crate::rootsys::{cartan_of, DynkinType};
use crate::words::{rightmost_subword, ComboNumbers, Order, Word};

pub const A3_TABLES: &str = include_str!("../golden/a3_tables.json");
pub const A4_QUIVER: &str = include_str!("../golden/a4_quiver.json");
pub const D5_QUIVER: &str = include_str!("../golden/d5_quiver.json");
pub const D5_NOTATIONS: &str = include_str!("../golden/d5_notations.json");
pub const A5_RUN: &str = include_str!("../golden/a5_run.json");

pub const EXAMPLES: &[&str] = &["a3-tables", "a4-quiver", "a5-run", "d5-quiver", "d5-notations"];

/// Outcome of one comparison; empty `mismatches` means agreement.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diff {
    pub name: String,
    pub compared: usize,
    pub mismatches: Vec<String>,
}

impl Diff {
    fn new(name: &str) -> Self {
        Diff { name: name.to_string(), ..Default::default() }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, what: impl fmt::Display, got: T, want: T) {
        self.compared += 1;
        if got != want {
            self.mismatches.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "{}: {} values match", self.name, self.compared);
        }
        writeln!(f, "{}: {} of {} values differ", self.name, self.mismatches.len(), self.compared)?;
        for m in &self.mismatches {
            writeln!(f, "  {m}")?;
        }
        Ok(())
    }
}

fn word(kind: &str, letters: &[usize]) -> Result<Word> {
    let c = cartan_of(kind.parse::<DynkinType>()?)?;
    Word::new(&c, letters, Order::Paper)
}

fn vector(s: &str, len: usize) -> DeltaVector {
    s.parse::<DeltaVector>().expect("golden vectors parse").with_len(len)
}

fn arrow_set(arrows: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    arrows.iter().copied().collect()
}

pub fn example(name: &str) -> Option<Result<Diff>> {
    Some(match name {
        "a3-tables" => a3_tables(),
        "a4-quiver" => a4_quiver(),
        "a5-run" => a5_run(),
        "d5-quiver" => d5_quiver(),
        "d5-notations" => d5_notations(),
        _ => return None,
    })
}

#[derive(Deserialize)]
struct A3Row {
    k: usize,
    same_w: String,
    same_w0: String,
    w_in_w0: String,
    w0_in_w: String,
}

#[derive(Deserialize)]
struct A3Tables {
    #[serde(rename = "type")]
    kind: String,
    w_dot: Vec<usize>,
    w0_dot: Vec<usize>,
    rows: Vec<A3Row>,
}

/// Both tables of Δ-vectors for two reduced words of `w₀` in A3. The
/// diagonal columns are also computed from the line structure alone.
pub fn a3_tables() -> Result<Diff> {
    let g: A3Tables = serde_json::from_str(A3_TABLES).expect("embedded golden file");
    let w = word(&g.kind, &g.w_dot)?;
    let w0 = word(&g.kind, &g.w0_dot)?;
    let r = w.len();
    let mut d = Diff::new("a3-tables");
    for row in &g.rows {
        let k = row.k;
        d.expect(format!("Δ_ẇ(V_ẇ,{k})"), delta_via_xi(&w, k, &w)?, vector(&row.same_w, r));
        d.expect(format!("Δ_ẇ(V_ẇ,{k}) by lines"), initial_delta_same(&w, k)?, vector(&row.same_w, r));
        d.expect(format!("Δ_ẇ₀(V_ẇ₀,{k})"), delta_via_xi(&w0, k, &w0)?, vector(&row.same_w0, r));
        d.expect(format!("Δ_ẇ₀(V_ẇ₀,{k}) by lines"), initial_delta_same(&w0, k)?, vector(&row.same_w0, r));
        d.expect(format!("Δ_ẇ₀(V_ẇ,{k})"), delta_via_xi(&w, k, &w0)?, vector(&row.w_in_w0, r));
        d.expect(format!("Δ_ẇ(V_ẇ₀,{k})"), delta_via_xi(&w0, k, &w)?, vector(&row.w0_in_w, r));
    }
    Ok(d)
}

#[derive(Deserialize)]
struct QuiverGolden {
    #[serde(rename = "type")]
    kind: String,
    w: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    #[serde(default)]
    present: Vec<(usize, usize)>,
    #[serde(default)]
    absent: Vec<(usize, usize)>,
    #[serde(default)]
    bicolor: Option<BicolorGolden>,
}

#[derive(Deserialize)]
struct BicolorGolden {
    first: usize,
    second: usize,
    initial_barb: Option<(usize, usize)>,
    teeth: Vec<(usize, usize, usize)>,
    final_barb: Option<(usize, usize)>,
    pure: bool,
}

fn quiver_diff(name: &str, src: &str) -> Result<Diff> {
    let g: QuiverGolden = serde_json::from_str(src).expect("embedded golden file");
    let w = word(&g.kind, &g.w)?;
    let q = build_gamma(&w);
    let mut d = Diff::new(name);
    d.expect("vertex count", q.len(), g.w.len());
    d.expect("arrows", q.arrow_set(), arrow_set(&g.arrows));
    d.expect("all multiplicities 1", q.arrows().all(|a| a.2 == 1), true);
    for &(a, b) in &g.present {
        d.expect(format!("arrow {a}->{b}"), q.mult(a, b), 1);
    }
    for &(a, b) in &g.absent {
        d.expect(format!("arrow {a}->{b}"), q.mult(a, b), 0);
    }
    if let Some(b) = &g.bicolor {
        let r = classify_sawteeth(&bicolor(&q, b.first, b.second));
        let teeth: Vec<(usize, usize, usize)> = r.teeth.iter().map(|t| (t.left_end, t.summit, t.right_end)).collect();
        let tag = format!("({},{})", b.first, b.second);
        d.expect(format!("{tag} valid"), r.valid, true);
        d.expect(format!("{tag} initial barb"), r.initial_barb, b.initial_barb);
        d.expect(format!("{tag} teeth"), teeth, b.teeth.clone());
        d.expect(format!("{tag} final barb"), r.final_barb, b.final_barb);
        d.expect(format!("{tag} pure"), r.pure, b.pure);
    }
    Ok(d)
}

pub fn a4_quiver() -> Result<Diff> {
    quiver_diff("a4-quiver", A4_QUIVER)
}

pub fn d5_quiver() -> Result<Diff> {
    quiver_diff("d5-quiver", D5_QUIVER)
}

#[derive(Deserialize)]
struct NotationRow {
    k: usize,
    m: Option<usize>,
    color: usize,
    f_min: usize,
    f: usize,
    oplus: Option<usize>,
    beta: Option<usize>,
    gamma: Option<usize>,
}

#[derive(Deserialize)]
struct Notations {
    #[serde(rename = "type")]
    kind: String,
    w: Vec<usize>,
    v: Vec<usize>,
    positions: Vec<usize>,
    rows: Vec<NotationRow>,
}

pub fn d5_notations() -> Result<Diff> {
    let g: Notations = serde_json::from_str(D5_NOTATIONS).expect("embedded golden file");
    let w = word(&g.kind, &g.w)?;
    let v = word(&g.kind, &g.v)?;
    let emb = rightmost_subword(&v.element(), &w)?;
    let cn = ComboNumbers::new(&w, &emb);
    let mut d = Diff::new("d5-notations");
    d.expect("positions", emb.positions().to_vec(), g.positions.clone());
    d.expect("rows", g.rows.len(), w.len());
    for row in &g.rows {
        let k = row.k;
        let m = cn.m_of(k);
        d.expect(format!("m at k={k}"), m, row.m);
        d.expect(format!("i_k at k={k}"), w.color(k), row.color);
        d.expect(format!("f_min at k={k}"), cn.f_min(k), row.f_min);
        d.expect(format!("f at k={k}"), cn.f(k), row.f);
        d.expect(format!("m⊕ at k={k}"), m.map(|m| cn.oplus(m)), row.oplus);
        d.expect(format!("β at k={k}"), m.map(|m| cn.beta(m)), row.beta);
        d.expect(format!("γ at k={k}"), m.map(|m| cn.gamma(m)), row.gamma);
    }
    Ok(d)
}

#[derive(Deserialize)]
struct A5Run {
    #[serde(rename = "type")]
    kind: String,
    w: Vec<usize>,
    v: Vec<usize>,
    completion: Vec<usize>,
    schedule: Vec<Vec<usize>>,
    tables: BTreeMap<usize, Vec<String>>,
    gamma_arrows: Vec<(usize, usize)>,
    pre_deletion_arrows: Vec<(usize, usize)>,
    deleted: Vec<usize>,
    survivors: Vec<usize>,
    final_arrows: Vec<(usize, usize)>,
    isolated: Vec<usize>,
}

fn without_frozen_pairs(q: &Quiver, arrows: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    arrows.iter().copied().filter(|&(a, b)| !(q.is_frozen(a) && q.is_frozen(b))).collect()
}

/// The full worked run in A5: schedule, Δ-vector tables after each step
/// that changes something, quivers before and after deletion.
pub fn a5_run() -> Result<Diff> {
    let g: A5Run = serde_json::from_str(A5_RUN).expect("embedded golden file");
    let w = word(&g.kind, &g.w)?;
    let v = word(&g.kind, &g.v)?.element();
    let reference = word(&g.kind, &g.completion)?;
    let r = reference.len();
    let mut d = Diff::new("a5-run");

    let mut state = AlgState::new(&w, &v, Some(&reference))?;
    d.expect("schedule", schedule_tilde(state.combo()), g.schedule.clone());
    d.expect("Γ arrows", state.quiver().arrow_set(), arrow_set(&g.gamma_arrows));
    let check_table = |state: &AlgState, d: &mut Diff| {
        if let Some(t) = g.tables.get(&state.step()) {
            for (i, s) in t.iter().enumerate() {
                d.expect(format!("Δ(R_{},{})", i + 1, state.step()), state.delta(i + 1).clone(), vector(s, r));
            }
        }
    };
    check_table(&state, &mut d);
    while !state.is_done() {
        state.step_hat()?;
        check_table(&state, &mut d);
    }
    d.expect("Δ-driven batches", state.batches().to_vec(), g.schedule.clone());
    d.expect("pre-deletion arrows", state.quiver().arrow_set(), arrow_set(&g.pre_deletion_arrows));

    let out = run(&w, &v, &RunOptions { reference: Some(reference), check: true })?;
    let seed = &out.seed;
    d.expect("deleted", seed.deleted.iter().copied().collect::<Vec<_>>(), g.deleted.clone());
    d.expect("survivors", seed.ids.clone(), g.survivors.clone());
    d.expect("summand count", seed.ids.len(), w.len() - g.v.len());
    d.expect("survivor Δ̃ all zero", seed.deltas.iter().all(|x| x.truncated(seed.lv).iter().all(|&c| c == 0)), true);
    d.expect(
        "final arrows between non-frozen pairs",
        seed.quiver.arrow_set(),
        without_frozen_pairs(&seed.quiver, &g.final_arrows),
    );
    for &k in &g.isolated {
        d.expect(format!("{k} isolated"), seed.quiver.neighbours(k).is_empty(), true);
        d.expect(format!("{k} frozen"), seed.frozen.contains(&k), true);
    }
    Ok(d)
}
