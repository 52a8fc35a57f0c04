//! Random and exhaustive generation of `(w̄, v)` pairs.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rootsys::{CartanData, WeylElement};
use crate::words::{Order, Word};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// RNG seeded from `RSEED_SEED` when set, otherwise from `default`.
pub fn rng_from_env(default: u64) -> ChaCha8Rng {
    let seed = std::env::var("RSEED_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(default);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Letters `i` such that appending `i` on the left keeps `letters` reduced.
fn extensions(c: &CartanData, x: &WeylElement) -> Vec<usize> {
    (1..=c.rank()).filter(|&i| !x.has_left_descent(c, i)).collect()
}

/// Random reduced word of length at most `max_len`, grown one letter at a
/// time among the letters keeping it reduced.
pub fn random_reduced_word<R: Rng>(c: &Arc<CartanData>, max_len: usize, rng: &mut R) -> Word {
    let target = rng.gen_range(0..=max_len.min(c.num_positive_roots()));
    let mut letters = Vec::with_capacity(target);
    let mut x = c.identity();
    while letters.len() < target {
        let ext = extensions(c, &x);
        if ext.is_empty() {
            break;
        }
        let i = ext[rng.gen_range(0..ext.len())];
        x = c.simple(i).compose(&x);
        letters.push(i);
    }
    Word::new(c, &letters, Order::Indexed).expect("grown reduced")
}

/// Product of a random subword of `w`; always below `w`.
pub fn random_below<R: Rng>(w: &Word, rng: &mut R) -> WeylElement {
    let c = w.cartan();
    let picked: Vec<usize> = w.letters().iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    c.element_of_word(&picked)
}

pub fn random_pair<R: Rng>(c: &Arc<CartanData>, max_len: usize, rng: &mut R) -> (Word, WeylElement) {
    let w = random_reduced_word(c, max_len, rng);
    let v = random_below(&w, rng);
    (w, v)
}

/// Every reduced word of length at most `max_len`.
pub fn all_reduced_words(c: &Arc<CartanData>, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), c.identity())];
    while let Some((letters, x)) = stack.pop() {
        out.push(Word::new(c, &letters, Order::Indexed).expect("grown reduced"));
        if letters.len() == max_len {
            continue;
        }
        for i in extensions(c, &x) {
            let mut l = letters.clone();
            l.push(i);
            stack.push((l, c.simple(i).compose(&x)));
        }
    }
    out.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    out
}

/// Every element of length at most `max_len`, keyed by its matrix.
pub fn all_elements(c: &Arc<CartanData>, max_len: usize) -> Vec<WeylElement> {
    let mut seen: BTreeMap<Vec<Vec<i64>>, WeylElement> = BTreeMap::new();
    for w in all_reduced_words(c, max_len) {
        let e = w.element();
        seen.entry(e.matrix()).or_insert(e);
    }
    seen.into_values().collect()
}
