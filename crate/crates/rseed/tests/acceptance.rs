//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;

use rseed::deltavec::{delta_via_xi, initial_delta_tilde, DeltaVector};
use rseed::golden;
use rseed::mutalg::{green_report, run, verify_equivalence, AlgState, GreenLabel, RunOptions};
use rseed::quiver::{bicolor, build_gamma, classify_sawteeth};
use rseed::rootsys::{cartan, CartanData, Family, WeylElement};
use rseed::sample::{all_elements, all_reduced_words, random_pair, rng_from_env, DEFAULT_SEED};
use rseed::words::{left_complete, rightmost_subword, ComboNumbers, Order, Word};
use rseed::Error;

type Pair = (Word, WeylElement);
type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const SAMPLES: usize = 200;

fn a5_pair() -> Pair {
    let c = cartan(Family::A, 5).unwrap();
    let w = Word::new(&c, &[1, 3, 2, 4, 3, 2, 4, 5, 4, 3, 2, 1, 2], Order::Paper).unwrap();
    let v = Word::new(&c, &[2, 4, 5, 3, 1, 2], Order::Paper).unwrap().element();
    (w, v)
}

fn golden_clean(name: &str) -> Outcome {
    let d = golden::example(name).expect("known example").map_err(|e| e.to_string())?;
    if d.is_clean() {
        Ok(format!("{} values", d.compared))
    } else {
        Err(d.to_string())
    }
}

fn criterion_1() -> Outcome {
    let summary = golden_clean("a3-tables")?;
    let c = cartan(Family::A, 3).unwrap();
    let wdot = Word::new(&c, &[2, 1, 2, 3, 2, 1], Order::Paper).unwrap();
    let w0dot = Word::new(&c, &[1, 2, 3, 1, 2, 1], Order::Paper).unwrap();
    let d = delta_via_xi(&w0dot, 5, &wdot).map_err(|e| e.to_string())?;
    if d.0 != [0, 1, 0, 1, 0, 1] {
        return Err(format!("Δ of module 5 of the second word is {:?}", d.0));
    }
    Ok(summary)
}

fn criterion_2() -> Outcome {
    let summary = golden_clean("a4-quiver")?;
    let c = cartan(Family::A, 4).unwrap();
    let q = build_gamma(&Word::new(&c, &[3, 4, 2, 3, 1, 2, 4, 1], Order::Paper).unwrap());
    if q.mult(5, 2) != 1 || q.mult(6, 1) != 0 || q.mult(2, 1) != 0 {
        return Err("V5->V2 missing or V6->V1 / V2->V1 present".into());
    }
    Ok(summary)
}

fn criterion_3() -> Outcome {
    let summary = golden_clean("d5-quiver")?;
    let c = cartan(Family::D, 5).unwrap();
    let w = Word::new(&c, &[4, 3, 5, 2, 3, 4, 1, 2, 3, 5, 3, 4, 1, 2, 3, 1, 2], Order::Paper).unwrap();
    let q = build_gamma(&w);
    let r = classify_sawteeth(&bicolor(&q, 3, 2));
    if q.len() != 17 || !r.valid || r.pure || r.teeth.len() != 3 || r.initial_barb.is_none() {
        return Err(format!("(3,2) bicolor: {r:?}"));
    }
    Ok(summary)
}

fn criterion_4() -> Outcome {
    golden_clean("d5-notations")
}

fn criterion_5() -> Outcome {
    let summary = golden_clean("a5-run")?;
    let (w, v) = a5_pair();
    let out = run(&w, &v, &RunOptions { reference: None, check: true }).map_err(|e| e.to_string())?;
    let seed = &out.seed;
    let sched = out.state.batches().to_vec();
    if sched != vec![vec![1, 3, 8], vec![2], vec![4, 9], vec![], vec![7], vec![3]] {
        return Err(format!("schedule {sched:?}"));
    }
    if seed.deleted.iter().copied().collect::<Vec<_>>() != [6, 8, 10, 11, 12, 13] || seed.ids.len() != 7 {
        return Err(format!("deleted {:?}, survivors {:?}", seed.deleted, seed.ids));
    }
    if !seed.deltas.iter().all(|d| d.truncated(6).iter().all(|&x| x == 0)) {
        return Err("a survivor has nonzero Δ̃".into());
    }
    if !seed.quiver.neighbours(2).is_empty() || !seed.frozen.contains(&2) {
        return Err("R2 is not isolated and frozen".into());
    }
    Ok(summary)
}

fn a3_pairs() -> Vec<Pair> {
    let c = cartan(Family::A, 3).unwrap();
    let elements = all_elements(&c, 6);
    let mut out = Vec::new();
    for w in all_reduced_words(&c, 6) {
        for v in &elements {
            if rightmost_subword(v, &w).is_ok() {
                out.push((w.clone(), v.clone()));
            }
        }
    }
    out
}

fn criterion_6(pairs: &[Pair]) -> Outcome {
    for (w, v) in pairs {
        let emb = rightmost_subword(v, w).map_err(|e| e.to_string())?;
        let rep = verify_equivalence(w, &emb).map_err(|e| format!("w={w}: {e}"))?;
        if !rep.agree() {
            return Err(format!("w={w} v={}: {rep:?}", emb.subword()));
        }
    }
    Ok(format!("{} pairs, 0 mismatches", pairs.len()))
}

fn samples(c: &Arc<CartanData>) -> Vec<Pair> {
    let mut rng = rng_from_env(DEFAULT_SEED);
    (0..SAMPLES).map(|_| random_pair(c, c.num_positive_roots(), &mut rng)).collect()
}

fn criterion_7(pairs: &[Pair]) -> Outcome {
    let mut coords = 0;
    for (w, v) in pairs {
        let emb = rightmost_subword(v, w).map_err(|e| e.to_string())?;
        let cn = ComboNumbers::new(w, &emb);
        let wdot = left_complete(w);
        let vdot = left_complete(&emb.subword());
        for k in 1..=w.len() {
            let xi = delta_via_xi(&wdot, k, &vdot).map_err(|e| e.to_string())?;
            let tilde = initial_delta_tilde(&cn, k);
            if xi.truncated(cn.lv()) != &tilde[..] {
                return Err(format!("w={w} v={} k={k}: {:?} vs {tilde:?}", emb.subword(), xi.truncated(cn.lv())));
            }
            coords += tilde.len();
        }
    }
    Ok(format!("{} pairs, {coords} coordinates", pairs.len()))
}

fn criterion_8(pairs: &[Pair]) -> Outcome {
    let mut steps = 0;
    for (w, v) in pairs {
        let out = run(w, v, &RunOptions { reference: None, check: true })
            .map_err(|e| format!("w={w} v={:?}: {e}", v.reduced_word(w.cartan())))?;
        let cut = out.state.cut_view();
        if !cut.members.is_empty() {
            return Err(format!("w={w}: final cut seed {:?}", cut.members));
        }
        steps += out.audits.len();
    }
    Ok(format!("{} pairs, {steps} checked steps", pairs.len()))
}

fn criterion_9() -> Outcome {
    let mut words = 0;
    for n in [3, 4] {
        let c = cartan(Family::A, n).unwrap();
        for w in all_reduced_words(&c, 12) {
            let q = build_gamma(&w);
            for &(x, y) in c.adjacency() {
                for (c1, c2) in [(x, y), (y, x)] {
                    let r = classify_sawteeth(&bicolor(&q, c1, c2));
                    if !r.valid {
                        return Err(format!("w={w} ({c1},{c2}): {}", r.violation.unwrap_or_default()));
                    }
                }
            }
            words += 1;
        }
    }
    Ok(format!("{words} words"))
}

/// Replays every mutation of the run: the chosen candidate is the
/// nonnegative one and, on the first `ℓ(v)` coordinates, equals
/// `Δ(k⁺) + Δ(k⁻) − Δ(k)` computed from the Δ-vectors at that moment.
fn branch_rule_holds(w: &Word, v: &WeylElement) -> Result<usize, String> {
    let out = match run(w, v, &RunOptions::default()) {
        Ok(out) => out,
        Err(e @ (Error::AmbiguousBranch { .. } | Error::NoValidBranch { .. })) => return Err(format!("w={w}: {e}")),
        Err(e) => return Err(format!("w={w}: unexpected {e}")),
    };
    let lv = out.state.lv();
    let mut deltas: Vec<DeltaVector> = AlgState::new(w, v, None).map_err(|e| e.to_string())?.deltas().to_vec();
    for rec in out.state.trace() {
        let k = rec.vertex;
        let (kp, km) = (w.succ(k), w.pred(k));
        let minus = if km == 0 { DeltaVector::zero(rec.before.len()) } else { deltas[km - 1].clone() };
        let predicted = &(&deltas[kp - 1] + &minus) - &deltas[k - 1];
        if rec.before != deltas[k - 1] || !rec.after.is_nonnegative() {
            return Err(format!("w={w} vertex {k}: replay mismatch"));
        }
        if rec.after.truncated(lv) != predicted.truncated(lv) {
            return Err(format!("w={w} vertex {k}: chose {}, formula gives {predicted}", rec.after));
        }
        deltas[k - 1] = rec.after.clone();
    }
    Ok(out.state.trace().len())
}

fn criterion_10(groups: &[&[Pair]]) -> Outcome {
    let mut mutations = 0;
    let mut runs = 0;
    for pairs in groups {
        for (w, v) in *pairs {
            mutations += branch_rule_holds(w, v)?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, {mutations} mutations"))
}

fn criterion_11(groups: &[&[Pair]]) -> Outcome {
    let mut total = 0;
    let mut red = Vec::new();
    for pairs in groups {
        for (w, v) in *pairs {
            let out = run(w, v, &RunOptions::default()).map_err(|e| e.to_string())?;
            for (rec, label) in out.state.trace().iter().zip(green_report(w, out.state.trace())) {
                total += 1;
                if label != GreenLabel::Green {
                    red.push(format!("w={w} step {} vertex {}: {label:?}", rec.step, rec.vertex));
                }
            }
        }
    }
    for r in &red {
        println!("     finding: {r}");
    }
    Ok(format!("{total} mutations, {} not green", red.len()))
}

fn main() -> ExitCode {
    let a4 = samples(&cartan(Family::A, 4).unwrap());
    let d4 = samples(&cartan(Family::D, 4).unwrap());
    let sampled: Vec<Pair> = a4.iter().chain(&d4).cloned().collect();
    let a3 = a3_pairs();
    let a5 = vec![a5_pair()];

    let criteria: Vec<Criterion> = vec![
        ("A3 cross-word Δ-vector tables", Box::new(criterion_1)),
        ("A4 standard quiver arrows", Box::new(criterion_2)),
        ("D5 standard quiver and (3,2) saw teeth", Box::new(criterion_3)),
        ("D5 combinatorial numbers table", Box::new(criterion_4)),
        ("A5 full run", Box::new(criterion_5)),
        ("schedule equivalence, all A3 pairs", Box::new(|| criterion_6(&a3))),
        ("Δ-oracle agreement, A4 and D4 samples", Box::new(|| criterion_7(&sampled))),
        ("induction checkpoints, A4 and D4 samples", Box::new(|| criterion_8(&sampled))),
        ("saw teeth, all A3/A4 words", Box::new(criterion_9)),
        ("branch rule soundness", Box::new(|| criterion_10(&[&a5, &a3, &sampled]))),
        ("greenness (findings only)", Box::new(|| criterion_11(&[&a5, &sampled]))),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
