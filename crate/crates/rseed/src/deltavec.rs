//! Δ-vectors: coordinates of a rigid summand with respect to a reduced word
//! of the longest element.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::WeightVec;
use crate::words::{leftmost_subword, ComboNumbers, Word};

/// Coordinates relative to some fixed completed word. Coordinate `j` is
/// stored at `coords[j - 1]`. Intermediate values (exchange candidates) may
/// be negative; summands never are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaVector(pub Vec<i64>);

impl DeltaVector {
    pub fn zero(r: usize) -> Self {
        DeltaVector(vec![0; r])
    }

    pub fn unit(r: usize, j: usize) -> Self {
        let mut d = Self::zero(r);
        d.0[j - 1] = 1;
        d
    }

    pub fn from_support(r: usize, support: &[usize]) -> Self {
        let mut d = Self::zero(r);
        for &j in support {
            d.0[j - 1] += 1;
        }
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coord(&self, j: usize) -> i64 {
        self.0[j - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// First `n` coordinates.
    pub fn truncated(&self, n: usize) -> &[i64] {
        &self.0[..n]
    }

    /// Indices j with a nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1).collect()
    }

    pub fn with_len(&self, r: usize) -> Self {
        let mut d = self.clone();
        d.0.resize(r, 0);
        d
    }
}

impl Add for &DeltaVector {
    type Output = DeltaVector;
    fn add(self, rhs: &DeltaVector) -> DeltaVector {
        DeltaVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DeltaVector {
    type Output = DeltaVector;
    fn sub(self, rhs: &DeltaVector) -> DeltaVector {
        DeltaVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DeltaVector {
    type Output = DeltaVector;
    fn neg(self) -> DeltaVector {
        DeltaVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Written as a combination of basis vectors, e.g. `f1+f11` or `2f3-f4`.
impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
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
            write!(f, "f{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parses the sparse notation of [`fmt::Display`] without a length; use
/// [`DeltaVector::with_len`] to pad. Any single letter may name the basis.
impl FromStr for DeltaVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" || s.is_empty() {
            return Ok(DeltaVector(Vec::new()));
        }
        let mut terms: Vec<(i64, usize)> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                _ => 1,
            };
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let coef: i64 = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|e| format!("{e}"))? };
            rest = &rest[digits..];
            let letter = rest.chars().next().ok_or_else(|| format!("dangling coefficient in `{s}`"))?;
            if !letter.is_ascii_alphabetic() {
                return Err(format!("expected a basis letter in `{s}`"));
            }
            rest = &rest[1..];
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let idx: usize = rest[..digits].parse().map_err(|_| format!("missing index in `{s}`"))?;
            if idx == 0 {
                return Err(format!("indices start at 1 in `{s}`"));
            }
            rest = &rest[digits..];
            terms.push((sign * coef, idx));
        }
        let len = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut d = DeltaVector::zero(len);
        for (c, i) in terms {
            d.0[i - 1] += c;
        }
        Ok(d)
    }
}

/// `Δ_w̄(V_{w̄,k}) = Σ_{j ≤ k, i_j = i_k} e_j`.
pub fn initial_delta_same(w: &Word, k: usize) -> Result<DeltaVector> {
    w.check_index(k)?;
    let c = w.color(k);
    let support: Vec<usize> = (1..=k).filter(|&j| w.color(j) == c).collect();
    Ok(DeltaVector::from_support(w.len(), &support))
}

/// Δ-vector relative to `target` of the summand `V_k` built from
/// `module_word`; both words must be reduced words of `w₀`.
///
/// Let `u_k` be the left factor of `module_word` above `k` and `q` its
/// leftmost representative in `target`. Starting from `ϖ_{i_k}`, each index
/// outside `q` reflects the running weight by the corresponding root of
/// `target`; the coefficient of that root is the coordinate.
pub fn delta_via_xi(module_word: &Word, k: usize, target: &Word) -> Result<DeltaVector> {
    let c = target.cartan();
    for w in [module_word, target] {
        if !w.is_longest() {
            return Err(Error::NotLongest { len: w.len(), expected: c.num_positive_roots() });
        }
    }
    module_word.check_index(k)?;
    let r = target.len();
    let u = module_word.left_factor_element(k);
    let q = leftmost_subword(&u, target)?;
    let betas = target.betas();
    let mut xi = WeightVec::fundamental(c.rank(), module_word.color(k));
    let mut out = DeltaVector::zero(r);
    let mut skip = q.iter().peekable();
    for i in 1..=r {
        if skip.peek() == Some(&&i) {
            skip.next();
            continue;
        }
        let beta = &betas[i - 1];
        let n = xi.pair(beta);
        if n < 0 {
            return Err(Error::NegativeCoordinate { index: i, value: n });
        }
        if n != 0 {
            xi = c.reflect_weight(&xi, beta);
        }
        out.0[i - 1] = n;
    }
    Ok(out)
}

/// First `ℓ(v)` coordinates of `Δ_v̇(V_k)`, read off the embedding:
/// `Σ_{j ≤ f(k)} δ_{i_{p_j}, i_k} f_j`.
pub fn initial_delta_tilde(cn: &ComboNumbers, k: usize) -> Vec<i64> {
    let c = cn.word().color(k);
    (1..=cn.lv()).map(|j| i64::from(j <= cn.f(k) && cn.v_color(j) == c)).collect()
}

/// Membership in `C^v`: the first `ℓ(v)` coordinates relative to `v̇` vanish.
pub fn in_cv(d: &DeltaVector, lv: usize) -> bool {
    d.truncated(lv).iter().all(|&c| c == 0)
}

/// Membership in `C_w`: coordinates beyond `ℓ(w)` relative to `ẇ` vanish.
pub fn in_cw(d: &DeltaVector, lw: usize) -> bool {
    d.0.iter().skip(lw).all(|&c| c == 0)
}
