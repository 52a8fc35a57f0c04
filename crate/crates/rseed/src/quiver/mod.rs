//! Seed quivers: the standard quiver of a reduced word, mutation and the
//! bicolor subquivers used to describe its shape.

mod config;
mod dot;
mod sawteeth;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Word;

pub use config::{classify_config, ConfigLabel};
pub use dot::to_dot;
pub use sawteeth::{classify_sawteeth, SawTeethReport, Tooth};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    /// Color, which is also the line the vertex is drawn on.
    pub color: usize,
    /// Column used for drawing; the index in the generating word.
    pub column: usize,
    pub frozen: bool,
}

/// Quiver whose arrows carry multiplicities. Between two vertices arrows
/// only go one way, there are no loops, and arrows between two frozen
/// vertices are not kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeMap<usize, Vertex>,
    arrows: BTreeMap<(usize, usize), u32>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.vertices.insert(v.id, v);
    }

    /// Adds `mult` arrows `src → dst`, cancelling against opposite arrows.
    pub fn add_arrows(&mut self, src: usize, dst: usize, mult: u32) {
        assert!(src != dst, "loop at {src}");
        assert!(self.vertices.contains_key(&src) && self.vertices.contains_key(&dst));
        if mult == 0 || (self.is_frozen(src) && self.is_frozen(dst)) {
            return;
        }
        let back = self.arrows.remove(&(dst, src)).unwrap_or(0);
        if back > mult {
            self.arrows.insert((dst, src), back - mult);
        } else if mult > back {
            *self.arrows.entry((src, dst)).or_insert(0) += mult - back;
        }
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.get(&id)
    }

    pub fn contains(&self, id: usize) -> bool {
        self.vertices.contains_key(&id)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn ids(&self) -> Vec<usize> {
        self.vertices.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn color(&self, id: usize) -> usize {
        self.vertices[&id].color
    }

    pub fn is_frozen(&self, id: usize) -> bool {
        self.vertices.get(&id).is_some_and(|v| v.frozen)
    }

    /// Arrows as `(src, dst, mult)`, sorted.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(s, d), &m)| (s, d, m))
    }

    pub fn arrow_set(&self) -> BTreeSet<(usize, usize)> {
        self.arrows.keys().copied().collect()
    }

    pub fn num_arrows(&self) -> u32 {
        self.arrows.values().sum()
    }

    pub fn mult(&self, src: usize, dst: usize) -> u32 {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// Signed count `#(i → j) − #(j → i)`.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        i64::from(self.mult(i, j)) - i64::from(self.mult(j, i))
    }

    pub fn in_arrows(&self, k: usize) -> Vec<(usize, u32)> {
        self.arrows.iter().filter(|(&(_, d), _)| d == k).map(|(&(s, _), &m)| (s, m)).collect()
    }

    pub fn out_arrows(&self, k: usize) -> Vec<(usize, u32)> {
        self.arrows.iter().filter(|(&(s, _), _)| s == k).map(|(&(_, d), &m)| (d, m)).collect()
    }

    pub fn neighbours(&self, k: usize) -> BTreeSet<usize> {
        self.arrows
            .keys()
            .filter_map(|&(s, d)| {
                if s == k {
                    Some(d)
                } else if d == k {
                    Some(s)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Marks vertices frozen and drops arrows that now join two frozen vertices.
    pub fn freeze(&mut self, ids: &BTreeSet<usize>) {
        for id in ids {
            if let Some(v) = self.vertices.get_mut(id) {
                v.frozen = true;
            }
        }
        let frozen: BTreeSet<usize> = self.vertices.values().filter(|v| v.frozen).map(|v| v.id).collect();
        self.arrows.retain(|(s, d), _| !(frozen.contains(s) && frozen.contains(d)));
    }

    /// Full subquiver on the given vertices.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Quiver {
        Quiver {
            vertices: self.vertices.iter().filter(|(id, _)| keep.contains(id)).map(|(&i, &v)| (i, v)).collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|((s, d), _)| keep.contains(s) && keep.contains(d))
                .map(|(&k, &m)| (k, m))
                .collect(),
        }
    }

    /// Removes the vertices and every arrow touching them.
    pub fn without(&self, drop: &BTreeSet<usize>) -> Quiver {
        let keep: BTreeSet<usize> = self.vertices.keys().filter(|id| !drop.contains(id)).copied().collect();
        self.induced(&keep)
    }

    /// Fomin–Zelevinsky mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        let mut q = self.clone();
        q.mutate_in_place(k)?;
        Ok(q)
    }

    pub fn mutate_in_place(&mut self, k: usize) -> Result<()> {
        if !self.contains(k) {
            return Err(Error::UnknownVertex(k));
        }
        if self.is_frozen(k) {
            return Err(Error::FrozenVertex(k));
        }
        let ins = self.in_arrows(k);
        let outs = self.out_arrows(k);
        for &(i, _) in &ins {
            self.arrows.remove(&(i, k));
        }
        for &(j, _) in &outs {
            self.arrows.remove(&(k, j));
        }
        for &(i, a) in &ins {
            for &(j, b) in &outs {
                self.add_arrows(i, j, a * b);
            }
        }
        for &(i, a) in &ins {
            self.arrows.insert((k, i), a);
        }
        for &(j, b) in &outs {
            self.arrows.insert((j, k), b);
        }
        Ok(())
    }

    /// Vertices of color `c`, ascending.
    pub fn line(&self, c: usize) -> Vec<usize> {
        self.vertices.values().filter(|v| v.color == c).map(|v| v.id).collect()
    }

    pub fn colors(&self) -> BTreeSet<usize> {
        self.vertices.values().map(|v| v.color).collect()
    }
}

/// Standard quiver `Γ_w̄` of a reduced word: one vertex per index, on line
/// `i_k` and column `k`; horizontal arrows `k → k⁺`; and ordinary arrows
/// `j → k` between adjacent colors when `j⁺ ≥ k⁺ > j > k`. No vertex is
/// marked frozen, so arrows between the last vertices of lines are kept.
pub fn build_gamma(w: &Word) -> Quiver {
    let c = w.cartan();
    let l = w.len();
    let mut q = Quiver::new();
    for k in 1..=l {
        q.add_vertex(Vertex { id: k, color: w.color(k), column: k, frozen: false });
    }
    for k in 1..=l {
        if w.succ(k) <= l {
            q.add_arrows(k, w.succ(k), 1);
        }
    }
    for j in 1..=l {
        for k in 1..j {
            let (cj, ck) = (w.color(j), w.color(k));
            if cj != ck && c.adjacent(cj, ck) && w.succ(j) >= w.succ(k) && w.succ(k) > j {
                q.add_arrows(j, k, (-c.entry(cj, ck)) as u32);
            }
        }
    }
    q
}

/// The `(first, second)` bicolor subquiver: vertices of both colors, arrows
/// inside the first line and arrows between the two lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolorQuiver {
    pub first: usize,
    pub second: usize,
    pub quiver: Quiver,
}

pub fn bicolor(q: &Quiver, first: usize, second: usize) -> BicolorQuiver {
    let keep: BTreeSet<usize> = q.vertices().filter(|v| v.color == first || v.color == second).map(|v| v.id).collect();
    let mut sub = q.induced(&keep);
    sub.arrows.retain(|&(s, d), _| !(q.color(s) == second && q.color(d) == second));
    BicolorQuiver { first, second, quiver: sub }
}
