//! Reduced words and their index combinatorics.
//!
//! A word is written `[i_L, …, i_1]` and indexed from the right: index 1 is
//! the letter applied first. All indices in this crate are 1-based and
//! follow that convention; `0` and `L + 1` are the usual sentinels.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{beta_sequence, CartanData, RootVec, WeylElement};

/// How a list of letters is given.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Order {
    /// Display order, leftmost letter first (`[i_L, …, i_1]`).
    #[default]
    Paper,
    /// Application order (`i_1, …, i_L`).
    Indexed,
}

#[derive(Clone, Debug)]
pub struct Word {
    cartan: Arc<CartanData>,
    /// `letters[k - 1]` is `i_k`.
    letters: Vec<usize>,
    succ: Vec<usize>,
    pred: Vec<usize>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.cartan.kind() == other.cartan.kind() && self.letters == other.letters
    }
}

impl Eq for Word {}

/// Successor data of one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndexInfo {
    pub succ: usize,
    pub pred: usize,
    pub min: usize,
    pub max: usize,
}

pub fn make_word(c: &Arc<CartanData>, letters: &[usize], order: Order) -> Result<Word> {
    Word::new(c, letters, order)
}

impl Word {
    pub fn new(c: &Arc<CartanData>, letters: &[usize], order: Order) -> Result<Word> {
        let mut indexed = letters.to_vec();
        if order == Order::Paper {
            indexed.reverse();
        }
        beta_sequence(c, &indexed)?;
        Ok(Self::from_indexed_unchecked(c, indexed))
    }

    pub(crate) fn from_indexed_unchecked(c: &Arc<CartanData>, letters: Vec<usize>) -> Word {
        let len = letters.len();
        let mut succ = vec![len + 1; len];
        let mut pred = vec![0; len];
        let mut last = vec![0usize; c.rank() + 1];
        for k in 1..=len {
            let col = letters[k - 1];
            let p = last[col];
            pred[k - 1] = p;
            if p > 0 {
                succ[p - 1] = k;
            }
            last[col] = k;
        }
        Word { cartan: Arc::clone(c), letters, succ, pred }
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Color `i_k`.
    pub fn color(&self, k: usize) -> usize {
        self.letters[k - 1]
    }

    pub fn check_index(&self, k: usize) -> Result<()> {
        if (1..=self.len()).contains(&k) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: k, len: self.len() })
        }
    }

    /// Letters in application order.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letters in display order.
    pub fn display_letters(&self) -> Vec<usize> {
        self.letters.iter().rev().copied().collect()
    }

    pub fn element(&self) -> WeylElement {
        self.cartan.element_of_word(&self.letters)
    }

    pub fn betas(&self) -> Vec<RootVec> {
        beta_sequence(&self.cartan, &self.letters).expect("words are reduced by construction")
    }

    /// Whether this is a reduced word of the longest element.
    pub fn is_longest(&self) -> bool {
        self.len() == self.cartan.num_positive_roots()
    }

    /// `k⁺`, with `L + 1` past the end. Both sentinels map to themselves.
    pub fn succ(&self, k: usize) -> usize {
        if k == 0 || k > self.len() {
            return if k == 0 { 0 } else { self.len() + 1 };
        }
        self.succ[k - 1]
    }

    /// `k⁻`, with `0` before the start.
    pub fn pred(&self, k: usize) -> usize {
        if k == 0 || k > self.len() {
            return if k == 0 { 0 } else { self.len() + 1 };
        }
        self.pred[k - 1]
    }

    /// `k^{n+}`.
    pub fn succ_n(&self, k: usize, n: usize) -> usize {
        (0..n).fold(k, |x, _| self.succ(x))
    }

    /// `k^{n-}`.
    pub fn pred_n(&self, k: usize, n: usize) -> usize {
        (0..n).fold(k, |x, _| self.pred(x))
    }

    /// Indices of color `c`, ascending.
    pub fn line(&self, c: usize) -> Vec<usize> {
        (1..=self.len()).filter(|&k| self.color(k) == c).collect()
    }

    /// First index of color `c`, if any.
    pub fn line_min(&self, c: usize) -> Option<usize> {
        (1..=self.len()).find(|&k| self.color(k) == c)
    }

    /// Last index of color `c`, if any.
    pub fn line_max(&self, c: usize) -> Option<usize> {
        (1..=self.len()).rev().find(|&k| self.color(k) == c)
    }

    pub fn k_min(&self, k: usize) -> usize {
        self.line_min(self.color(k)).expect("k has its own color")
    }

    pub fn k_max(&self, k: usize) -> usize {
        self.line_max(self.color(k)).expect("k has its own color")
    }

    /// The first `k` letters `[i_k, …, i_1]`.
    pub fn prefix(&self, k: usize) -> Word {
        Word::from_indexed_unchecked(&self.cartan, self.letters[..k].to_vec())
    }

    /// Letters `k+1..=L` as a word (the left factor).
    pub fn left_factor_element(&self, k: usize) -> WeylElement {
        self.cartan.element_of_word(&self.letters[k..])
    }

    /// Whether `self` is a reduced word of `w₀` whose rightmost letters are `w`.
    pub fn is_completion_of(&self, w: &Word) -> bool {
        self.is_longest() && self.len() >= w.len() && self.letters[..w.len()] == w.letters[..]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.display_letters().iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

pub fn successor_structure(w: &Word) -> Vec<IndexInfo> {
    (1..=w.len()).map(|k| IndexInfo { succ: w.succ(k), pred: w.pred(k), min: w.k_min(k), max: w.k_max(k) }).collect()
}

/// A reduced word of `w₀` ending with `w`: letters are added on the left by
/// peeling right descents off `u = w₀ w⁻¹`, smallest color first.
pub fn left_complete(w: &Word) -> Word {
    let c = w.cartan();
    let mut u = c.longest_element().compose(&w.element().inverse(c));
    let mut letters = w.letters.clone();
    'peel: while !u.is_identity() {
        for i in 1..=c.rank() {
            if u.has_right_descent(i) {
                u = u.compose(&c.simple(i));
                letters.push(i);
                continue 'peel;
            }
        }
        unreachable!("non-identity element without right descent");
    }
    Word::from_indexed_unchecked(c, letters)
}

/// Positions of a reduced subword inside a parent word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubwordEmbedding {
    parent: Word,
    positions: Vec<usize>,
}

impl SubwordEmbedding {
    pub fn parent(&self) -> &Word {
        &self.parent
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `p_m`, with `p_0 = 0`.
    pub fn p(&self, m: usize) -> usize {
        if m == 0 {
            0
        } else {
            self.positions[m - 1]
        }
    }

    /// The subword itself.
    pub fn subword(&self) -> Word {
        let letters = self.positions.iter().map(|&p| self.parent.color(p)).collect();
        Word::from_indexed_unchecked(self.parent.cartan(), letters)
    }
}

/// Rightmost representative of `v` in `w`: scan indices upwards, keeping a
/// letter whenever it is a right descent of what is left of `v`.
pub fn rightmost_subword(v: &WeylElement, w: &Word) -> Result<SubwordEmbedding> {
    let c = w.cartan();
    let mut y = v.clone();
    let mut positions = Vec::new();
    for t in 1..=w.len() {
        if y.is_identity() {
            break;
        }
        let i = w.color(t);
        if y.has_right_descent(i) {
            y = y.compose(&c.simple(i));
            positions.push(t);
        }
    }
    if !y.is_identity() {
        return Err(Error::NotLessOrEqual);
    }
    Ok(SubwordEmbedding { parent: w.clone(), positions })
}

/// Leftmost representative of `u` in `y`: scan indices downwards, keeping a
/// letter whenever it is a left descent of what is left of `u`. Positions
/// are returned ascending.
pub fn leftmost_subword(u: &WeylElement, y: &Word) -> Result<Vec<usize>> {
    let c = y.cartan();
    // Track the inverse: s_i is a left descent of x iff x⁻¹(α_i) < 0.
    let mut inv = u.inverse(c);
    let mut positions = Vec::new();
    for t in (1..=y.len()).rev() {
        if inv.is_identity() {
            break;
        }
        let i = y.color(t);
        if inv.has_right_descent(i) {
            inv = inv.compose(&c.simple(i));
            positions.push(t);
        }
    }
    if !inv.is_identity() {
        return Err(Error::NotLessOrEqual);
    }
    positions.reverse();
    Ok(positions)
}

/// Bookkeeping numbers attached to a word `w̄` and the rightmost embedding
/// of `v̄` in it. `k` ranges over indices of `w̄`, `m` over letters of `v̄`.
#[derive(Clone, Debug)]
pub struct ComboNumbers {
    word: Word,
    emb: SubwordEmbedding,
    f_min: Vec<usize>,
    f: Vec<usize>,
    oplus: Vec<usize>,
    beta: Vec<usize>,
    gamma: Vec<usize>,
}

pub fn combo_numbers(w: &Word, emb: &SubwordEmbedding) -> ComboNumbers {
    ComboNumbers::new(w, emb)
}

impl ComboNumbers {
    pub fn new(w: &Word, emb: &SubwordEmbedding) -> Self {
        let lw = w.len();
        let lv = emb.len();
        let pc = |m: usize| w.color(emb.p(m));
        let f_min = (1..=lw).map(|k| (1..=lv).find(|&j| pc(j) == w.color(k)).unwrap_or(0)).collect();
        let f = (1..=lw).map(|k| (1..=lv).rev().find(|&j| emb.p(j) <= k && pc(j) == w.color(k)).unwrap_or(0)).collect();
        // Past-the-end value for m⊕ is ℓ(w)+1, which is what the worked
        // tables print; any value above ℓ(v) behaves the same.
        let oplus = (1..=lv).map(|m| (m + 1..=lv).find(|&j| pc(j) == pc(m)).unwrap_or(lw + 1)).collect();
        let beta = (1..=lv)
            .map(|m| {
                let chosen = &emb.positions()[..m];
                (1..=emb.p(m)).filter(|&j| w.color(j) == pc(m) && !chosen.contains(&j)).count()
            })
            .collect();
        let gamma = (1..=lv).map(|m| (1..=m).filter(|&j| pc(j) == pc(m)).count()).collect();
        ComboNumbers { word: w.clone(), emb: emb.clone(), f_min, f, oplus, beta, gamma }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn embedding(&self) -> &SubwordEmbedding {
        &self.emb
    }

    pub fn lw(&self) -> usize {
        self.word.len()
    }

    pub fn lv(&self) -> usize {
        self.emb.len()
    }

    pub fn p(&self, m: usize) -> usize {
        self.emb.p(m)
    }

    /// Color of the m-th letter of `v̄`.
    pub fn v_color(&self, m: usize) -> usize {
        self.word.color(self.emb.p(m))
    }

    /// Smallest `m` whose `v̄` letter has color `i_k`, or 0.
    pub fn f_min(&self, k: usize) -> usize {
        self.f_min[k - 1]
    }

    /// Largest `m` with `p_m ≤ k` and color `i_k`, or 0.
    pub fn f(&self, k: usize) -> usize {
        self.f[k - 1]
    }

    /// Next letter of `v̄` with the color of letter `m`. `0⊕ = 0` and the
    /// past-the-end value is fixed.
    pub fn oplus(&self, m: usize) -> usize {
        if m == 0 || m > self.lv() {
            return m;
        }
        self.oplus[m - 1]
    }

    pub fn oplus_n(&self, m: usize, n: usize) -> usize {
        (0..n).fold(m, |x, _| self.oplus(x))
    }

    /// Number of the first `m` letters of `v̄` having color `i_k`.
    pub fn alpha(&self, k: usize, m: usize) -> usize {
        let c = self.word.color(k);
        (1..=m).filter(|&j| self.v_color(j) == c).count()
    }

    pub fn beta(&self, m: usize) -> usize {
        self.beta[m - 1]
    }

    pub fn gamma(&self, m: usize) -> usize {
        self.gamma[m - 1]
    }

    /// First index after `p_m` that is a `v̄` position of color `i_k`, or `L + 1`.
    pub fn xi(&self, k: usize, m: usize) -> usize {
        let c = self.word.color(k);
        let pm = self.emb.p(m);
        self.emb.positions().iter().copied().find(|&j| j > pm && self.word.color(j) == c).unwrap_or(self.lw() + 1)
    }

    /// `m` such that `p_m = k`, if `k` is a position of `v̄`.
    pub fn m_of(&self, k: usize) -> Option<usize> {
        self.emb.positions().iter().position(|&p| p == k).map(|i| i + 1)
    }

    /// Last index of the line of `k` that is not deleted after step `m`:
    /// `(k_max)^{α(k,m)-}`.
    pub fn line_bound(&self, k: usize, m: usize) -> usize {
        self.word.pred_n(self.word.k_max(k), self.alpha(k, m))
    }
}
