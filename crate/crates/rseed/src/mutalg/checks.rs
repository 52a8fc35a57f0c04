//! Run-time checks of the shape statements the algorithm relies on.
//!
//! `check_cut` inspects the cut seed after a step. `checked_step` performs
//! one step while classifying the configuration around each mutated
//! vertex, comparing each new Δ-vector with the local formula and
//! predicting the saw-teeth shape after the pass.

use std::collections::BTreeSet;

use serde::Serialize;

use super::AlgState;
use crate::deltavec::DeltaVector;
use crate::error::{Error, Result};
use crate::quiver::{bicolor, classify_config, classify_sawteeth, ConfigLabel, SawTeethReport};

fn violation<T>(step: usize, detail: String) -> Result<T> {
    Err(Error::InvariantViolation { step, detail })
}

/// Expected support of `Δ̃` for a member `k` after step `m`.
pub fn expected_support(state: &AlgState, k: usize, m: usize) -> BTreeSet<usize> {
    let cn = state.combo();
    let w = state.word();
    let a = cn.alpha(k, m);
    let lo = cn.oplus_n(cn.f_min(k), a);
    let top = w.succ_n(k, a);
    let hi = if top >= 1 && top <= w.len() { cn.f(top) } else { 0 };
    (1..=cn.lv()).filter(|&j| lo >= 1 && lo <= j && j <= hi && cn.v_color(j) == w.color(k)).collect()
}

/// Shape of the cut seed after the current step.
pub fn check_cut(state: &AlgState) -> Result<()> {
    let m = state.step();
    let cut = state.cut_view();
    let w = state.word();
    let c = w.cartan();

    for &k in &cut.members {
        if state.delta(k).truncated(m).iter().any(|&x| x != 0) {
            return violation(m, format!("member {k} has Δ = {} with a nonzero coordinate ≤ {m}", state.delta(k)));
        }
        let support: BTreeSet<usize> =
            state.delta_tilde(k).iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i + 1).collect();
        let expected = expected_support(state, k, m);
        if support != expected {
            return violation(m, format!("member {k} has Δ̃ support {support:?}, expected {expected:?}"));
        }
    }

    for color in 1..=c.rank() {
        let kept: Vec<usize> = w.line(color).into_iter().filter(|k| !cut.deleted.contains(k)).collect();
        let split = kept.iter().position(|k| !cut.evicted.contains(k)).unwrap_or(kept.len());
        if let Some(k) = kept[split..].iter().find(|k| cut.evicted.contains(k)) {
            return violation(m, format!("evicted {k} follows a member on line {color}"));
        }
    }

    for &k in &cut.members {
        let s = w.succ(k);
        if cut.members.contains(&s) && cut.quiver.mult(k, s) != 1 {
            return violation(m, format!("missing horizontal arrow {k}->{s}"));
        }
    }
    for (a, b, mult) in cut.quiver.arrows() {
        let (ca, cb) = (w.color(a), w.color(b));
        if ca == cb {
            if w.succ(a) != b || mult != 1 {
                return violation(m, format!("arrow {a}->{b} inside line {ca} is not horizontal"));
            }
        } else if !c.adjacent(ca, cb) {
            return violation(m, format!("arrow {a}->{b} joins non-adjacent colors"));
        }
    }

    for &(x, y) in c.adjacency() {
        for (c1, c2) in [(x, y), (y, x)] {
            let r = classify_sawteeth(&bicolor(&cut.quiver, c1, c2));
            if !r.valid {
                return violation(m, format!("({c1},{c2}) is not saw-teeth: {}", r.violation.unwrap_or_default()));
            }
        }
    }

    if m < state.lv() {
        let c1 = state.combo().v_color(m + 1);
        for c2 in c.neighbours(c1) {
            let r = classify_sawteeth(&bicolor(&cut.quiver, c1, c2));
            if !r.pure {
                return violation(m, format!("line {c1} is not pure with respect to {c2}"));
            }
        }
    } else if !cut.members.is_empty() {
        return violation(m, format!("final cut seed is not empty: {:?}", cut.members));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelRecord {
    pub vertex: usize,
    pub other: usize,
    pub label: ConfigLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepAudit {
    pub step: usize,
    pub batch: Vec<usize>,
    pub labels: Vec<LabelRecord>,
}

/// One step of the algorithm with all local checks, followed by
/// `check_cut`.
pub fn checked_step(state: &mut AlgState) -> Result<StepAudit> {
    let m0 = state.step();
    let m = m0 + 1;
    let w = state.word().clone();
    let c = w.cartan().clone();
    let color = state.combo().v_color(m);
    let neighbours = c.neighbours(color);

    let before_cut = state.cut_at(m0);
    let before_shapes: Vec<(usize, SawTeethReport)> =
        neighbours.iter().map(|&c2| (c2, classify_sawteeth(&bicolor(&before_cut.quiver, color, c2)))).collect();
    let before_line: Vec<usize> = before_cut.quiver.line(color);

    let batch = state.next_batch();
    let mut labels = Vec::new();
    let mut prev: Option<(Vec<ConfigLabel>, bool)> = None;
    for &k in &batch {
        if w.color(k) != color {
            return violation(m, format!("mutated vertex {k} is not on line {color}"));
        }
        let live = state.cut_at(m0);
        let mut current = Vec::with_capacity(neighbours.len());
        for (t, &c2) in neighbours.iter().enumerate() {
            let label = classify_config(&live.quiver, k, c2, true)
                .or_else(|e| violation(m, format!("configuration at {k} against {c2}: {e}")))?;
            if let Some((pl, evicted)) = &prev {
                if !pl[t].next(*evicted).contains(&label) {
                    return violation(m, format!("{} then {label} at {k} against {c2} (evicted: {evicted})", pl[t]));
                }
            }
            labels.push(LabelRecord { vertex: k, other: c2, label });
            current.push(label);
        }

        let (jp, jm) = (w.succ(k), w.pred(k));
        let lv = state.lv();
        let plus = state.delta(jp).clone();
        let minus = if jm == 0 { DeltaVector::zero(plus.len()) } else { state.delta(jm).clone() };
        let predicted = &(&plus + &minus) - state.delta(k);
        let rec = state.mutate_vertex(k)?;
        if rec.after.truncated(lv) != predicted.truncated(lv) {
            return violation(m, format!("Δ̃ at {k} is {}, local formula gives {predicted}", rec.after));
        }
        let evicted = state.delta_tilde(k).iter().all(|&x| x == 0);
        prev = Some((current, evicted));
    }
    state.finish_step(batch.clone());

    let after_cut = state.cut_view();
    let after_line: Vec<usize> = after_cut.quiver.line(color);
    for (c2, before) in &before_shapes {
        let after = classify_sawteeth(&bicolor(&after_cut.quiver, color, *c2));
        let predicted = predict_shift(&w, before, &before_line, &after_line);
        let actual: Shape = (
            after.initial_barb,
            after.teeth.iter().map(|t| (t.left_end, t.summit, t.right_end)).collect(),
            after.final_barb,
        );
        if predicted.as_ref() != Some(&actual) {
            return violation(m, format!("teeth of ({color},{c2}) became {actual:?}, predicted {predicted:?}"));
        }
    }

    check_cut(state)?;
    Ok(StepAudit { step: m, batch, labels })
}

type Shape = (Option<(usize, usize)>, Vec<(usize, usize, usize)>, Option<(usize, usize)>);

/// Shape of a pure line after its pass: every tooth moves one step down the
/// line on both ends. If the new right end is gone the tooth leaves a barb;
/// if the new left end is gone too it disappears. A final barb into a
/// vertex that is not last on the line first closes into a tooth whose
/// left end is the new last vertex. Returns `None` if two barbs appear.
fn predict_shift(
    w: &crate::words::Word,
    before: &SawTeethReport,
    before_line: &[usize],
    after_line: &[usize],
) -> Option<Shape> {
    let present: BTreeSet<usize> = after_line.iter().copied().collect();
    let mut raw: Vec<(usize, usize, usize)> =
        before.teeth.iter().map(|t| (w.pred(t.left_end), t.summit, w.pred(t.right_end))).collect();
    if let Some((j, k)) = before.final_barb {
        if before_line.last() != Some(&k) {
            if let Some(&last) = after_line.last() {
                raw.push((last, j, w.pred(k)));
            }
        }
    }
    let mut barb = None;
    let mut teeth = Vec::new();
    for (l, j, r) in raw {
        match (present.contains(&l), present.contains(&r)) {
            (true, true) => teeth.push((l, j, r)),
            (true, false) if barb.replace((l, j)).is_some() => return None,
            _ => {}
        }
    }
    Some((barb, teeth, None))
}
