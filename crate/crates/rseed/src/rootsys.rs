//! Simply-laced root systems.
//!
//! Roots are written in the basis of simple roots, weights in the basis of
//! fundamental weights. In simply-laced types the coroot β^∨ has the same
//! coordinates as β, so the pairing ⟨λ, β^∨⟩ is the dot product of the two
//! coordinate lists, and multiplying by the Cartan matrix turns a root into a
//! weight. Nothing else converts between the two bases.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

/// A Dynkin type such as `A5` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadTypeName(s.to_owned());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(DynkinType { family, rank })
    }
}

/// Cartan matrix of a simply-laced type together with its positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    kind: DynkinType,
    matrix: Vec<i64>,
    adjacency: Vec<(usize, usize)>,
    positive_roots: Vec<RootVec>,
}

/// Builds the Cartan data of type `family` and rank `rank`, numbered as in
/// the usual Dynkin pictures: `A_n` is the chain 1..n, `D_n` is the chain
/// 1..n-1 with n also attached to n-2, and `E_n` is 1-3-4-...-n with 2
/// attached to 4.
pub fn cartan(family: Family, rank: usize) -> Result<Arc<CartanData>> {
    let illegal = || Error::IllegalType { family: family.to_string(), rank: rank as i64 };
    let mut edges = Vec::new();
    match family {
        Family::A => {
            if rank == 0 {
                return Err(illegal());
            }
            edges.extend((1..rank).map(|i| (i, i + 1)));
        }
        Family::D => {
            if rank < 4 {
                return Err(illegal());
            }
            edges.extend((1..rank - 1).map(|i| (i, i + 1)));
            edges.push((rank - 2, rank));
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(illegal());
            }
            edges.push((1, 3));
            edges.push((2, 4));
            edges.extend((3..rank).map(|i| (i, i + 1)));
        }
    }
    edges.sort_unstable();
    let mut matrix = vec![0; rank * rank];
    for i in 0..rank {
        matrix[i * rank + i] = 2;
    }
    for &(i, j) in &edges {
        matrix[(i - 1) * rank + (j - 1)] = -1;
        matrix[(j - 1) * rank + (i - 1)] = -1;
    }
    let mut data =
        CartanData { kind: DynkinType { family, rank }, matrix, adjacency: edges, positive_roots: Vec::new() };
    data.positive_roots = data.compute_positive_roots();
    Ok(Arc::new(data))
}

pub fn cartan_of(kind: DynkinType) -> Result<Arc<CartanData>> {
    cartan(kind.family, kind.rank)
}

impl CartanData {
    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// Entry a_{ij}, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        let n = self.rank();
        self.matrix[(i - 1) * n + (j - 1)]
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        self.matrix.chunks(n).map(<[i64]>::to_vec).collect()
    }

    /// Unordered edges `(i, j)` with `i < j`.
    pub fn adjacency(&self) -> &[(usize, usize)] {
        &self.adjacency
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entry(i, j) != 0
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (1..=self.rank()).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn is_color(&self, c: usize) -> bool {
        (1..=self.rank()).contains(&c)
    }

    pub fn check_color(&self, c: usize) -> Result<()> {
        if self.is_color(c) {
            Ok(())
        } else {
            Err(Error::InvalidColor { color: c, rank: self.rank() })
        }
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    /// Number of positive roots, which is also the length of the longest element.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// ⟨β, α_i^∨⟩ for a root (or any vector) in simple-root coordinates.
    pub fn pair_with_simple_coroot(&self, beta: &RootVec, i: usize) -> i64 {
        (1..=self.rank()).map(|j| self.entry(i, j) * beta.0[j - 1]).sum()
    }

    pub fn simple_reflection_root(&self, i: usize, beta: &RootVec) -> RootVec {
        let c = self.pair_with_simple_coroot(beta, i);
        let mut out = beta.clone();
        out.0[i - 1] -= c;
        out
    }

    /// The weight with the same pairings as the root: Cartan matrix times β.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        WeightVec((1..=self.rank()).map(|i| self.pair_with_simple_coroot(beta, i)).collect())
    }

    fn compute_positive_roots(&self) -> Vec<RootVec> {
        let n = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<RootVec> = (1..=n).map(|i| RootVec::simple(n, i)).collect();
        for r in &frontier {
            seen.insert(r.0.clone());
        }
        while let Some(beta) = frontier.pop() {
            for i in 1..=n {
                let image = self.simple_reflection_root(i, &beta);
                if image.is_positive() && seen.insert(image.0.clone()) {
                    frontier.push(image);
                }
            }
        }
        let mut roots: Vec<RootVec> = seen.into_iter().map(RootVec).collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        roots
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for j in 1..=n {
            let col = self.simple_reflection_root(i, &RootVec::simple(n, j));
            for r in 0..n {
                m[r * n + (j - 1)] = col.0[r];
            }
        }
        WeylElement { rank: n, matrix: m }
    }

    /// Element `s_{i_k}⋯s_{i_1}` for letters given in application order
    /// `i_1, …, i_k`. Non-reduced words are accepted.
    pub fn element_of_word(&self, letters: &[usize]) -> WeylElement {
        let mut w = self.identity();
        for &i in letters {
            w = self.simple(i).compose(&w);
        }
        w
    }

    /// Longest element, obtained by right-multiplying the identity by any
    /// generator that is not yet a descent until none is left.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        'grow: loop {
            for i in 1..=self.rank() {
                if !w.has_right_descent(i) {
                    w = w.compose(&self.simple(i));
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Length of `w`: number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots.iter().filter(|b| w.apply(b).is_negative()).count()
    }

    /// s_β(λ) = λ - ⟨λ, β^∨⟩ β.
    pub fn reflect_weight(&self, lambda: &WeightVec, beta: &RootVec) -> WeightVec {
        let c = lambda.pair(beta);
        let bw = self.root_to_weight(beta);
        WeightVec(lambda.0.iter().zip(&bw.0).map(|(l, b)| l - c * b).collect())
    }
}

/// Root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        RootVec(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Self {
        RootVec(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, "a")
    }
}

/// Weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        WeightVec(v)
    }

    /// ⟨λ, β^∨⟩, using that β^∨ has the coordinates of β.
    pub fn pair(&self, beta: &RootVec) -> i64 {
        self.0.iter().zip(&beta.0).map(|(l, b)| l * b).sum()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, "w")
    }
}

fn write_combination(f: &mut fmt::Formatter<'_>, coords: &[i64], sym: &str) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "{}{}", sym, i + 1)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Weyl group element as its matrix on the simple-root lattice. Column j is
/// the image of α_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|t| self.matrix[r * n + t] * other.matrix[t * n + c]).sum();
            }
        }
        WeylElement { rank: n, matrix: m }
    }

    pub fn apply(&self, beta: &RootVec) -> RootVec {
        let n = self.rank;
        RootVec((0..n).map(|r| (0..n).map(|t| self.matrix[r * n + t] * beta.0[t]).sum()).collect())
    }

    /// Image of the simple root α_i (column i).
    pub fn image_of_simple(&self, i: usize) -> RootVec {
        let n = self.rank;
        RootVec((0..n).map(|r| self.matrix[r * n + (i - 1)]).collect())
    }

    /// `s_i` is a right descent iff `w(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.image_of_simple(i).is_negative()
    }

    /// Some reduced word, in application order, found by peeling right
    /// descents (smallest color first).
    pub fn reduced_word(&self, c: &CartanData) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::new();
        'peel: while !w.is_identity() {
            for i in 1..=self.rank {
                if w.has_right_descent(i) {
                    w = w.compose(&c.simple(i));
                    letters.push(i);
                    continue 'peel;
                }
            }
            unreachable!("non-identity Weyl element without right descent");
        }
        letters
    }

    pub fn inverse(&self, c: &CartanData) -> WeylElement {
        let mut word = self.reduced_word(c);
        word.reverse();
        c.element_of_word(&word)
    }

    /// `s_i` is a left descent iff `w^{-1}(α_i) < 0`.
    pub fn has_left_descent(&self, c: &CartanData, i: usize) -> bool {
        self.inverse(c).has_right_descent(i)
    }

    pub fn determinant(&self) -> i64 {
        // Bareiss elimination, exact over the integers.
        let n = self.rank;
        let mut a = self.matrix.clone();
        let mut sign = 1;
        let mut prev = 1;
        for k in 0..n {
            if a[k * n + k] == 0 {
                match (k + 1..n).find(|&r| a[r * n + k] != 0) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        sign * a[n * n - 1]
    }
}

/// Root sequence β_k = s_{i_1}⋯s_{i_{k-1}}(α_{i_k}) of letters given in
/// application order. Fails with `NotReduced` at the first negative root.
pub fn beta_sequence(c: &CartanData, letters: &[usize]) -> Result<Vec<RootVec>> {
    let n = c.rank();
    let mut prefix = c.identity();
    let mut out = Vec::with_capacity(letters.len());
    for (k, &i) in letters.iter().enumerate() {
        c.check_color(i)?;
        let beta = prefix.apply(&RootVec::simple(n, i));
        if !beta.is_positive() {
            return Err(Error::NotReduced { prefix: k + 1 });
        }
        out.push(beta);
        prefix = prefix.compose(&c.simple(i));
    }
    Ok(out)
}

pub fn reflect_weight(c: &CartanData, lambda: &WeightVec, beta: &RootVec) -> WeightVec {
    c.reflect_weight(lambda, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Arc<CartanData> {
        cartan(Family::A, n).unwrap()
    }

    #[test]
    fn cartan_shapes() {
        let a3 = a(3);
        assert_eq!(a3.entry(1, 2), -1);
        assert_eq!(a3.entry(2, 3), -1);
        assert_eq!(a3.entry(1, 3), 0);
        let d4 = cartan(Family::D, 4).unwrap();
        assert_eq!(d4.neighbours(2), vec![1, 3, 4]);
        let e6 = cartan(Family::E, 6).unwrap();
        assert_eq!(e6.neighbours(4), vec![2, 3, 5]);
        assert_eq!(e6.neighbours(2), vec![4]);
        assert_eq!(a(1).matrix(), vec![vec![2]]);
    }

    #[test]
    fn illegal_types() {
        assert!(matches!(cartan(Family::D, 3), Err(Error::IllegalType { .. })));
        assert!(matches!(cartan(Family::E, 9), Err(Error::IllegalType { .. })));
        assert!(matches!(cartan(Family::A, 0), Err(Error::IllegalType { .. })));
        assert!("B3".parse::<DynkinType>().is_err());
        assert_eq!("d5".parse::<DynkinType>().unwrap(), DynkinType { family: Family::D, rank: 5 });
    }

    #[test]
    fn root_counts() {
        assert_eq!(a(2).num_positive_roots(), 3);
        assert_eq!(a(3).num_positive_roots(), 6);
        assert_eq!(cartan(Family::D, 5).unwrap().num_positive_roots(), 20);
        assert_eq!(cartan(Family::E, 6).unwrap().num_positive_roots(), 36);
        assert_eq!(cartan(Family::E, 7).unwrap().num_positive_roots(), 63);
        assert_eq!(cartan(Family::E, 8).unwrap().num_positive_roots(), 120);
    }

    #[test]
    fn braid_and_longest() {
        let a2 = a(2);
        assert_eq!(a2.element_of_word(&[1, 2, 1]), a2.element_of_word(&[2, 1, 2]));
        assert!(a2.element_of_word(&[]).is_identity());
        let a3 = a(3);
        // s2 s1 s2 s3 s2 s1: application order is the reversed display.
        let w = a3.element_of_word(&[1, 2, 3, 2, 1, 2]);
        assert_eq!(a3.length(&w), 6);
        assert_eq!(w, a3.longest_element());
        let w0 = a3.longest_element();
        for b in a3.positive_roots() {
            assert!(w0.apply(b).is_negative());
        }
    }

    #[test]
    fn a3_beta_sequence() {
        let a3 = a(3);
        let betas = beta_sequence(&a3, &[1, 2, 3, 2, 1, 2]).unwrap();
        let expect = [[1, 0, 0], [1, 1, 0], [1, 1, 1], [0, 0, 1], [0, 1, 1], [0, 1, 0]];
        for (b, e) in betas.iter().zip(expect) {
            assert_eq!(b.0, e.to_vec());
        }
        assert_eq!(beta_sequence(&a3, &[1, 1]), Err(Error::NotReduced { prefix: 2 }));
    }

    #[test]
    fn weight_reflections() {
        let a3 = a(3);
        let w2 = WeightVec::fundamental(3, 2);
        let a1 = RootVec(vec![1, 0, 0]);
        let a12 = RootVec(vec![1, 1, 0]);
        assert_eq!(a3.reflect_weight(&w2, &a1), w2);
        // ϖ2 - α1 - α2 in weight coordinates is (1,0,1) - ... computed by hand:
        // α1 = (2,-1,0), α2 = (-1,2,-1), so ϖ2 - α1 - α2 = (-1,0,1).
        assert_eq!(a3.reflect_weight(&w2, &a12), WeightVec(vec![-1, 0, 1]));
    }

    #[test]
    fn inverse_and_determinant() {
        let a4 = a(4);
        let w = a4.element_of_word(&[1, 3, 2, 4, 3]);
        assert!(w.compose(&w.inverse(&a4)).is_identity());
        assert_eq!(w.determinant().abs(), 1);
        assert_eq!(a4.simple(2).determinant(), -1);
    }
}
