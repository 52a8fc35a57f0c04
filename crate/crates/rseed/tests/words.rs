use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rseed::rootsys::{cartan, CartanData, Family, WeylElement};
use rseed::sample::{all_elements, all_reduced_words, random_below, random_reduced_word};
use rseed::words::{left_complete, leftmost_subword, rightmost_subword, ComboNumbers, Order, SubwordEmbedding, Word};
use rseed::Error;

fn a(n: usize) -> Arc<CartanData> {
    cartan(Family::A, n).unwrap()
}

fn a5_example() -> Word {
    Word::new(&a(5), &[2, 1, 3, 4, 2, 1, 3, 5, 2, 4, 3, 2, 1], Order::Paper).unwrap()
}

/// Calls `f` on every increasing `size`-subset of `1..=n`, in lexicographic order,
/// until it returns true.
fn subsets_until(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..=n {
            if n - i + 1 < size - cur.len() {
                break;
            }
            cur.push(i);
            if go(i + 1, n, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(1, n, size, &mut Vec::new(), f)
}

fn product_at(w: &Word, positions: &[usize]) -> WeylElement {
    let letters: Vec<usize> = positions.iter().map(|&p| w.color(p)).collect();
    w.cartan().element_of_word(&letters)
}

/// Lexicographically smallest position list spelling `v` with `ℓ(v)` letters.
fn brute_rightmost(v: &WeylElement, w: &Word) -> Option<Vec<usize>> {
    let lv = w.cartan().length(v);
    let mut found = None;
    subsets_until(w.len(), lv, &mut |s| {
        if product_at(w, s) == *v {
            found = Some(s.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Position list spelling `u` whose positions, read from the top, are as
/// large as possible.
fn brute_leftmost(u: &WeylElement, y: &Word) -> Option<Vec<usize>> {
    let lu = y.cartan().length(u);
    let mut best: Option<Vec<usize>> = None;
    subsets_until(y.len(), lu, &mut |s| {
        if product_at(y, s) == *u {
            let key: Vec<usize> = s.iter().rev().copied().collect();
            if best.as_ref().is_none_or(|b| key > b.iter().rev().copied().collect::<Vec<_>>()) {
                best = Some(s.to_vec());
            }
        }
        false
    });
    best
}

#[test]
fn colors_and_successors_of_the_a5_example() {
    let w = a5_example();
    assert_eq!((w.color(1), w.color(5), w.color(10)), (1, 2, 4));
    assert_eq!((w.succ(7), w.pred(7)), (11, 3));
    assert_eq!((w.succ(6), w.pred(6)), (14, 0));
    let rev: Vec<usize> = w.display_letters().into_iter().rev().collect();
    assert_eq!(Word::new(&a(5), &rev, Order::Indexed).unwrap(), w);
}

#[test]
fn non_reduced_and_trivial_words() {
    assert_eq!(Word::new(&a(3), &[1, 1], Order::Paper), Err(Error::NotReduced { prefix: 2 }));
    let one = Word::new(&a(3), &[1], Order::Paper).unwrap();
    assert_eq!((one.succ(1), one.pred(1)), (2, 0));
}

#[test]
fn left_completion_examples() {
    let w = Word::new(&a(3), &[2, 1, 2, 3, 2, 1], Order::Paper).unwrap();
    assert_eq!(left_complete(&w), w);
    let w = Word::new(&a(5), &[1, 3, 2, 4, 3, 2, 4, 5, 4, 3, 2, 1, 2], Order::Paper).unwrap();
    let dot = left_complete(&w);
    assert_eq!(dot.len(), 15);
    assert!(dot.is_completion_of(&w));
}

#[test]
fn rightmost_examples() {
    let c = a(5);
    let w = Word::new(&c, &[1, 3, 2, 4, 3, 2, 4, 5, 4, 3, 2, 1, 2], Order::Paper).unwrap();
    let v = Word::new(&c, &[2, 4, 5, 3, 1, 2], Order::Paper).unwrap().element();
    assert_eq!(rightmost_subword(&v, &w).unwrap().positions(), &[1, 2, 4, 6, 7, 8]);
    assert!(rightmost_subword(&c.identity(), &w).unwrap().is_empty());
    let cn = ComboNumbers::new(&w, &rightmost_subword(&v, &w).unwrap());
    assert_eq!((1..=6).map(|m| cn.beta(m)).collect::<Vec<_>>(), vec![0, 0, 0, 0, 1, 1]);
    assert_eq!((1..=6).map(|m| cn.gamma(m)).collect::<Vec<_>>(), vec![1, 1, 1, 1, 1, 2]);
}

#[test]
fn leftmost_examples() {
    let c = a(3);
    let y = Word::new(&c, &[1, 2, 3, 1, 2, 1], Order::Paper).unwrap();
    let u = Word::new(&c, &[2, 1], Order::Paper).unwrap().element();
    assert_eq!(leftmost_subword(&u, &y).unwrap(), vec![3, 5]);
    assert!(leftmost_subword(&c.identity(), &y).unwrap().is_empty());
    assert_eq!(leftmost_subword(&y.element(), &y).unwrap(), (1..=6).collect::<Vec<_>>());
}

/// All reduced words of A3, every element: representatives agree with brute
/// force, and `NotLessOrEqual` is raised exactly when nothing spells `v`.
#[test]
fn representatives_match_brute_force_in_a3() {
    let c = a(3);
    let elements = all_elements(&c, 6);
    for w in all_reduced_words(&c, 6) {
        for v in &elements {
            let brute = brute_rightmost(v, &w);
            match rightmost_subword(v, &w) {
                Ok(emb) => assert_eq!(Some(emb.positions().to_vec()), brute, "w={w}"),
                Err(e) => {
                    assert_eq!(e, Error::NotLessOrEqual);
                    assert_eq!(brute, None, "w={w}");
                }
            }
            match leftmost_subword(v, &w) {
                Ok(q) => assert_eq!(Some(q), brute_leftmost(v, &w), "w={w}"),
                Err(e) => assert_eq!(e, Error::NotLessOrEqual),
            }
        }
    }
}

/// Moving one position of the rightmost subword to a smaller unused index
/// never spells `v` again.
fn fixpoint_holds(w: &Word, emb: &SubwordEmbedding, v: &WeylElement) -> bool {
    let p = emb.positions();
    for j in 0..p.len() {
        for t in 1..p[j] {
            if p.contains(&t) {
                continue;
            }
            let mut moved = p.to_vec();
            moved[j] = t;
            moved.sort_unstable();
            if product_at(w, &moved) == *v {
                return false;
            }
        }
    }
    true
}

#[test]
fn rightmost_is_a_fixpoint_exhaustively() {
    for (c, max) in [(a(3), 6), (a(4), 7)] {
        let elements = all_elements(&c, max);
        for w in all_reduced_words(&c, max) {
            for v in &elements {
                if let Ok(emb) = rightmost_subword(v, &w) {
                    assert!(fixpoint_holds(&w, &emb, v), "w={w}");
                }
            }
        }
    }
}

fn reversed(w: &Word) -> Word {
    let mut l = w.letters().to_vec();
    l.reverse();
    Word::new(w.cartan(), &l, Order::Indexed).unwrap()
}

fn sample_pair(kind: (Family, usize), max: usize, seed: u64) -> (Word, WeylElement) {
    let c = cartan(kind.0, kind.1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_reduced_word(&c, max, &mut rng);
    let v = random_below(&w, &mut rng);
    (w, v)
}

fn kinds() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![Just((Family::A, 3)), Just((Family::A, 4)), Just((Family::D, 4)), Just((Family::A, 5))]
}

proptest! {
    #[test]
    fn rightmost_matches_brute_force_sampled(kind in kinds(), seed in any::<u64>()) {
        let (w, v) = sample_pair(kind, 10, seed);
        let emb = rightmost_subword(&v, &w).unwrap();
        prop_assert_eq!(Some(emb.positions().to_vec()), brute_rightmost(&v, &w));
        prop_assert!(fixpoint_holds(&w, &emb, &v));
        prop_assert_eq!(emb.subword().element(), v);
    }

    #[test]
    fn leftmost_and_rightmost_are_mirror_images(kind in kinds(), seed in any::<u64>()) {
        let (w, v) = sample_pair(kind, 12, seed);
        let c = w.cartan();
        let l = w.len();
        let left = leftmost_subword(&v, &w).unwrap();
        let right = rightmost_subword(&v.inverse(c), &reversed(&w)).unwrap();
        let mut mirrored: Vec<usize> = right.positions().iter().map(|&p| l + 1 - p).collect();
        mirrored.sort_unstable();
        prop_assert_eq!(left, mirrored);
    }

    #[test]
    fn combinatorial_numbers(kind in kinds(), seed in any::<u64>()) {
        let (w, v) = sample_pair(kind, 16, seed);
        let emb = rightmost_subword(&v, &w).unwrap();
        let cn = ComboNumbers::new(&w, &emb);
        let l = w.len();
        for k in 1..=l {
            let color = w.color(k);
            let below = (1..=cn.lv()).filter(|&m| cn.p(m) <= k && cn.v_color(m) == color).count();
            let all = (1..=cn.lv()).filter(|&m| cn.v_color(m) == color).collect::<Vec<_>>();
            prop_assert_eq!(cn.f(k) == 0, below == 0);
            prop_assert_eq!(cn.f(k) < cn.f_min(k) || cn.f(k) == 0, below == 0);
            if below > 0 {
                prop_assert_eq!(cn.v_color(cn.f(k)), color);
                prop_assert_eq!(cn.f(k), *all.iter().filter(|&&m| cn.p(m) <= k).max().unwrap());
                prop_assert_eq!(cn.f_min(k), all[0]);
            }
            prop_assert_eq!(cn.alpha(k, 0), 0);
            // Successor structure.
            let s = w.succ(k);
            prop_assert!(s > k && (s == l + 1 || w.color(s) == color));
            prop_assert!((k + 1..s.min(l + 1)).all(|j| w.color(j) != color));
            if s <= l {
                prop_assert_eq!(w.pred(s), k);
            }
            prop_assert_eq!(w.k_max(k), w.line(color).into_iter().max().unwrap());
            prop_assert_eq!(w.k_min(k), w.line(color).into_iter().min().unwrap());
        }
        for m in 1..=cn.lv() {
            let pm = cn.p(m);
            prop_assert_eq!(cn.gamma(m), cn.alpha(pm, m));
            let same = (1..=pm).filter(|&j| w.color(j) == w.color(pm)).count();
            prop_assert_eq!(cn.beta(m) + cn.gamma(m), same);
            for k in 1..=l {
                let x = cn.xi(k, m);
                prop_assert!((x > pm && x <= l) || x == l + 1);
            }
            let o = cn.oplus(m);
            prop_assert!(o > m);
            prop_assert!(o == l + 1 || cn.v_color(o) == cn.v_color(m));
        }
    }

    #[test]
    fn leftmost_indices_relation(kind in kinds(), seed in any::<u64>()) {
        let (w, v) = sample_pair(kind, 16, seed);
        let emb = rightmost_subword(&v, &w).unwrap();
        let lv = emb.len();
        let wdot = left_complete(&w);
        let vdot = left_complete(&emb.subword());
        let p = |m: usize| emb.p(m);
        for k in 1..=w.len() {
            let q = leftmost_subword(&wdot.left_factor_element(k), &vdot).unwrap();
            let q1 = q.first().copied().unwrap_or(usize::MAX);
            prop_assert_eq!(q1 > lv, lv == 0 || p(lv) < k + 1, "k={}", k);
            for t in 0..lv {
                let lhs = q1 == lv - t;
                let rhs = p(lv - t) > k && p(lv - t - 1) <= k;
                prop_assert_eq!(lhs, rhs, "k={} t={}", k, t);
                if lhs {
                    let want: Vec<usize> = (lv - t..=lv).collect();
                    prop_assert_eq!(&q[..=t], &want[..]);
                }
            }
        }
    }
}
