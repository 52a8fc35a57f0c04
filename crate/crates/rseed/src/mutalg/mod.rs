//! The seed-computation algorithm.
//!
//! Step `m` mutates, in increasing order, every index `i ≤ b_m` whose
//! Δ-vector has a nonzero `m`-th coordinate, where `b_m` is the last index
//! of the line of `p_m` kept after the step. After the last step, the tail
//! of each line is deleted and the remaining summands span the seed.

mod checks;
mod green;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::deltavec::{delta_via_xi, DeltaVector};
use crate::error::{Error, Result};
use crate::quiver::{build_gamma, Quiver};
use crate::rootsys::WeylElement;
use crate::words::{left_complete, rightmost_subword, ComboNumbers, SubwordEmbedding, Word};

pub use checks::{check_cut, checked_step, expected_support, LabelRecord, StepAudit};
pub use green::{green_report, GreenLabel};

/// Which exchange relation produced the new Δ-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Sum over arrows into the mutated vertex.
    In,
    /// Sum over arrows out of the mutated vertex.
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationRecord {
    pub step: usize,
    pub vertex: usize,
    pub candidate_in: DeltaVector,
    pub candidate_out: DeltaVector,
    pub chosen: Branch,
    pub before: DeltaVector,
    pub after: DeltaVector,
    pub arrows_added: Vec<(usize, usize)>,
    pub arrows_removed: Vec<(usize, usize)>,
}

/// Full state of a run. Every index of `w̄` keeps its entry; deletion only
/// happens when the final seed is assembled.
#[derive(Clone, Debug)]
pub struct AlgState {
    combo: ComboNumbers,
    reference: Word,
    deltas: Vec<DeltaVector>,
    quiver: Quiver,
    step: usize,
    batches: Vec<Vec<usize>>,
    trace: Vec<MutationRecord>,
}

impl AlgState {
    /// Initial seed of `w̄` with Δ-vectors taken relative to `reference`,
    /// which must be a completion of the rightmost subword for `v`. When
    /// absent, the default left completion is used.
    pub fn new(word: &Word, v: &WeylElement, reference: Option<&Word>) -> Result<Self> {
        let emb = rightmost_subword(v, word)?;
        Self::from_embedding(word, &emb, reference)
    }

    pub fn from_embedding(word: &Word, emb: &SubwordEmbedding, reference: Option<&Word>) -> Result<Self> {
        let vbar = emb.subword();
        let reference = match reference {
            Some(r) if r.is_completion_of(&vbar) => r.clone(),
            Some(_) => return Err(Error::NotACompletion),
            None => left_complete(&vbar),
        };
        let wdot = left_complete(word);
        let deltas = (1..=word.len()).map(|k| delta_via_xi(&wdot, k, &reference)).collect::<Result<Vec<_>>>()?;
        Ok(AlgState {
            combo: ComboNumbers::new(word, emb),
            reference,
            deltas,
            quiver: build_gamma(word),
            step: 0,
            batches: Vec::new(),
            trace: Vec::new(),
        })
    }

    pub fn word(&self) -> &Word {
        self.combo.word()
    }

    pub fn combo(&self) -> &ComboNumbers {
        &self.combo
    }

    pub fn embedding(&self) -> &SubwordEmbedding {
        self.combo.embedding()
    }

    pub fn reference(&self) -> &Word {
        &self.reference
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn lv(&self) -> usize {
        self.combo.lv()
    }

    pub fn lw(&self) -> usize {
        self.combo.lw()
    }

    pub fn is_done(&self) -> bool {
        self.step == self.lv()
    }

    pub fn delta(&self, k: usize) -> &DeltaVector {
        &self.deltas[k - 1]
    }

    pub fn deltas(&self) -> &[DeltaVector] {
        &self.deltas
    }

    /// First `ℓ(v)` coordinates of the current Δ-vector of `k`.
    pub fn delta_tilde(&self, k: usize) -> &[i64] {
        self.deltas[k - 1].truncated(self.lv())
    }

    pub fn batches(&self) -> &[Vec<usize>] {
        &self.batches
    }

    pub fn trace(&self) -> &[MutationRecord] {
        &self.trace
    }

    /// `b_m = ((p_m)_max)^{γ_m-}` for the next step.
    pub fn next_bound(&self) -> usize {
        let m = self.step + 1;
        let w = self.word();
        w.pred_n(w.k_max(self.combo.p(m)), self.combo.gamma(m))
    }

    /// Vertices mutated by the next step, read off the current Δ-vectors.
    pub fn next_batch(&self) -> Vec<usize> {
        let m = self.step + 1;
        (1..=self.next_bound()).filter(|&i| self.deltas[i - 1].coord(m) != 0).collect()
    }

    /// Exchange candidates at `k`, and the one that is nonnegative.
    pub fn mutate_delta(&self, k: usize) -> Result<(DeltaVector, DeltaVector, Branch)> {
        let own = &self.deltas[k - 1];
        let mut cand_in = -own;
        let mut cand_out = -own;
        for (i, m) in self.quiver.in_arrows(k) {
            for _ in 0..m {
                cand_in = &cand_in + &self.deltas[i - 1];
            }
        }
        for (j, m) in self.quiver.out_arrows(k) {
            for _ in 0..m {
                cand_out = &cand_out + &self.deltas[j - 1];
            }
        }
        let branch = match (cand_in.is_nonnegative(), cand_out.is_nonnegative()) {
            (true, false) => Branch::In,
            (false, true) => Branch::Out,
            (true, true) if cand_in == cand_out => Branch::In,
            (true, true) => return Err(Error::AmbiguousBranch { vertex: k }),
            (false, false) => return Err(Error::NoValidBranch { vertex: k }),
        };
        Ok((cand_in, cand_out, branch))
    }

    /// Mutates the seed at `k`, both quiver and Δ-vector.
    pub fn mutate_vertex(&mut self, k: usize) -> Result<&MutationRecord> {
        let (cand_in, cand_out, chosen) = self.mutate_delta(k)?;
        let before_arrows = self.quiver.arrow_set();
        self.quiver.mutate_in_place(k)?;
        let after_arrows = self.quiver.arrow_set();
        let after = match chosen {
            Branch::In => cand_in.clone(),
            Branch::Out => cand_out.clone(),
        };
        let before = std::mem::replace(&mut self.deltas[k - 1], after.clone());
        self.trace.push(MutationRecord {
            step: self.step + 1,
            vertex: k,
            candidate_in: cand_in,
            candidate_out: cand_out,
            chosen,
            before,
            after,
            arrows_added: after_arrows.difference(&before_arrows).copied().collect(),
            arrows_removed: before_arrows.difference(&after_arrows).copied().collect(),
        });
        Ok(self.trace.last().unwrap())
    }

    pub(crate) fn finish_step(&mut self, batch: Vec<usize>) {
        self.batches.push(batch);
        self.step += 1;
    }

    /// One full step of the algorithm. Returns the mutated vertices.
    pub fn step_hat(&mut self) -> Result<Vec<usize>> {
        assert!(!self.is_done(), "all steps already applied");
        let batch = self.next_batch();
        for &k in &batch {
            self.mutate_vertex(k)?;
        }
        self.finish_step(batch.clone());
        Ok(batch)
    }

    /// Indices deleted when the seed is cut after step `m`.
    pub fn deleted_at(&self, m: usize) -> BTreeSet<usize> {
        (1..=self.lw()).filter(|&k| k > self.combo.line_bound(k, m)).collect()
    }

    /// Cut seed after the current step.
    pub fn cut_view(&self) -> CutSeedView {
        self.cut_at(self.step)
    }

    /// Cut seed using the deletion bound of step `m` and the current
    /// Δ-vectors. During a step this is the seed the local analysis uses.
    pub fn cut_at(&self, m: usize) -> CutSeedView {
        let deleted = self.deleted_at(m);
        let evicted: BTreeSet<usize> =
            (1..=self.lw()).filter(|k| !deleted.contains(k) && self.delta_tilde(*k).iter().all(|&c| c == 0)).collect();
        let members: BTreeSet<usize> =
            (1..=self.lw()).filter(|k| !deleted.contains(k) && !evicted.contains(k)).collect();
        CutSeedView { step: m, quiver: self.quiver.induced(&members), members, evicted, deleted }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSeedView {
    pub step: usize,
    pub members: BTreeSet<usize>,
    pub evicted: BTreeSet<usize>,
    pub deleted: BTreeSet<usize>,
    pub quiver: Quiver,
}

/// Batches of the purely combinatorial schedule: for each `m`, the indices
/// of the line of `p_m` from `(k_min)^{β_m+}` up to `(k_max)^{γ_m-}`.
pub fn schedule_tilde(cn: &ComboNumbers) -> Vec<Vec<usize>> {
    let w = cn.word();
    (1..=cn.lv())
        .map(|m| {
            let k = cn.p(m);
            let start = w.succ_n(w.k_min(k), cn.beta(m));
            let end = w.pred_n(w.k_max(k), cn.gamma(m));
            if start == 0 || end == 0 || start > w.len() || start > end {
                return Vec::new();
            }
            w.line(w.color(k)).into_iter().filter(|&i| start <= i && i <= end).collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalSeed {
    /// Surviving indices, ascending.
    pub ids: Vec<usize>,
    pub deltas: Vec<DeltaVector>,
    pub deleted: BTreeSet<usize>,
    pub frozen: BTreeSet<usize>,
    /// Quiver on the survivors, with frozen vertices marked.
    pub quiver: Quiver,
    pub lw: usize,
    pub lv: usize,
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub reference: Option<Word>,
    /// Check the induction statements after every step and every mutation.
    pub check: bool,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub seed: FinalSeed,
    /// State after the last step, before deletion.
    pub state: AlgState,
    pub audits: Vec<StepAudit>,
}

pub fn run(word: &Word, v: &WeylElement, opts: &RunOptions) -> Result<RunOutcome> {
    let mut state = AlgState::new(word, v, opts.reference.as_ref())?;
    let mut audits = Vec::new();
    if opts.check {
        check_cut(&state)?;
    }
    while !state.is_done() {
        if opts.check {
            audits.push(checked_step(&mut state)?);
        } else {
            state.step_hat()?;
        }
    }
    let seed = assemble(&state)?;
    Ok(RunOutcome { seed, state, audits })
}

/// Deletes the line tails and freezes the seed.
pub fn assemble(state: &AlgState) -> Result<FinalSeed> {
    let lv = state.lv();
    let lw = state.lw();
    let deleted = state.deleted_at(lv);
    let ids: Vec<usize> = (1..=lw).filter(|k| !deleted.contains(k)).collect();
    let violation = |detail: String| Error::InvariantViolation { step: lv, detail };
    if let Some(&k) = ids.iter().find(|&&k| !state.delta_tilde(k).iter().all(|&c| c == 0)) {
        return Err(violation(format!("survivor {k} has Δ̃ = {:?}", state.delta_tilde(k))));
    }
    if ids.len() != lw - lv {
        return Err(violation(format!("{} survivors, expected {}", ids.len(), lw - lv)));
    }
    let frozen = frozen_vertices(state, &deleted);
    let mut quiver = state.quiver.without(&deleted);
    quiver.freeze(&frozen);
    Ok(FinalSeed {
        deltas: ids.iter().map(|&k| state.delta(k).clone()).collect(),
        ids,
        deleted,
        frozen,
        quiver,
        lw,
        lv,
    })
}

/// Frozen vertices of the final seed: survivors adjacent to a deleted
/// vertex before deletion, survivors left without neighbours, and last
/// vertices of lines that lost nothing (these were never mutable).
pub fn frozen_vertices(state: &AlgState, deleted: &BTreeSet<usize>) -> BTreeSet<usize> {
    let pre = &state.quiver;
    let post = pre.without(deleted);
    let w = state.word();
    post.ids()
        .into_iter()
        .filter(|&k| {
            pre.neighbours(k).iter().any(|n| deleted.contains(n)) || post.neighbours(k).is_empty() || w.k_max(k) == k
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub tilde: Vec<Vec<usize>>,
    pub hat: Vec<Vec<usize>>,
    /// First step where the two schedules differ.
    pub divergence: Option<usize>,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Runs the Δ-driven schedule and compares it with the combinatorial one.
pub fn verify_equivalence(word: &Word, emb: &SubwordEmbedding) -> Result<EquivalenceReport> {
    let mut state = AlgState::from_embedding(word, emb, None)?;
    while !state.is_done() {
        state.step_hat()?;
    }
    let tilde = schedule_tilde(state.combo());
    let hat = state.batches().to_vec();
    let divergence = tilde.iter().zip(&hat).position(|(a, b)| a != b).map(|i| i + 1);
    Ok(EquivalenceReport { tilde, hat, divergence })
}
