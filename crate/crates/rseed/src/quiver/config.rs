//! Local configuration around the next vertex to mutate on a line.
//!
//! `α` labels describe the first vertex of its line, `β` labels any later
//! vertex, whose predecessor on the line has just been mutated. In both
//! cases the vertex may receive at most one ordinary arrow from the other
//! color, from a vertex `j`; the label records whether the successor
//! (and for `β`, the predecessor) points to `j`.

use std::fmt;

use serde::Serialize;

use super::Quiver;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigLabel {
    Alpha0,
    Alpha1,
    Alpha2,
    Beta0,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    /// The other color is not adjacent to the line.
    None,
}

impl ConfigLabel {
    pub fn is_initial(self) -> bool {
        matches!(self, ConfigLabel::Alpha0 | ConfigLabel::Alpha1 | ConfigLabel::Alpha2)
    }

    /// Labels allowed at the next vertex of the line, depending on whether
    /// the vertex just mutated got evicted.
    pub fn next(self, evicted: bool) -> &'static [ConfigLabel] {
        use ConfigLabel::*;
        const BETA_012: &[ConfigLabel] = &[Beta0, Beta1, Beta2];
        const BETA_34: &[ConfigLabel] = &[Beta3, Beta4];
        const ALPHA_ALL: &[ConfigLabel] = &[Alpha0, Alpha1, Alpha2];
        match (self, evicted) {
            (Alpha0 | Alpha2, false) => BETA_012,
            (Alpha0 | Alpha2, true) => ALPHA_ALL,
            (Alpha1, false) => BETA_34,
            (Alpha1, true) => &[Alpha1, Alpha2],
            (Beta0 | Beta2 | Beta4, _) => BETA_012,
            (Beta1 | Beta3, _) => BETA_34,
            (None, _) => &[None],
        }
    }
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConfigLabel::Alpha0 => "α0",
            ConfigLabel::Alpha1 => "α1",
            ConfigLabel::Alpha2 => "α2",
            ConfigLabel::Beta0 => "β0",
            ConfigLabel::Beta1 => "β1",
            ConfigLabel::Beta2 => "β2",
            ConfigLabel::Beta3 => "β3",
            ConfigLabel::Beta4 => "β4",
            ConfigLabel::None => "none",
        };
        f.write_str(s)
    }
}

/// Label of vertex `k` with respect to `other`, read in `q`, which should be
/// the current cut seed's quiver. The line neighbours of `k` are the
/// previous and next vertices of the same color present in `q`.
pub fn classify_config(q: &Quiver, k: usize, other: usize, adjacent: bool) -> Result<ConfigLabel> {
    if !q.contains(k) {
        return Err(Error::UnknownVertex(k));
    }
    if !adjacent {
        return Ok(ConfigLabel::None);
    }
    let unclassifiable = |detail: String| Error::Unclassifiable { vertex: k, detail };
    let line = q.line(q.color(k));
    let pos = line.iter().position(|&x| x == k).unwrap();
    let prev = pos.checked_sub(1).map(|p| line[p]);
    let next = line.get(pos + 1).copied();
    let is_other = |x: usize| q.color(x) == other;

    if q.out_arrows(k).iter().any(|&(d, _)| is_other(d)) {
        return Err(unclassifiable(format!("{k} is the source of an ordinary arrow")));
    }
    let sources: Vec<usize> = q.in_arrows(k).iter().map(|a| a.0).filter(|&s| is_other(s)).collect();
    if sources.len() > 1 {
        return Err(unclassifiable(format!("{k} receives several ordinary arrows")));
    }
    let Some(&j) = sources.first() else {
        return Ok(if prev.is_none() { ConfigLabel::Alpha0 } else { ConfigLabel::Beta0 });
    };
    let points_to_j = |x: Option<usize>| -> Result<bool> {
        match x {
            Some(x) if q.mult(j, x) > 0 => Err(unclassifiable(format!("arrow {j}->{x} next to {k}"))),
            Some(x) => Ok(q.mult(x, j) > 0),
            None => Ok(false),
        }
    };
    let from_next = points_to_j(next)?;
    let from_prev = points_to_j(prev)?;
    Ok(match (prev.is_none(), from_next, from_prev) {
        (true, false, _) => ConfigLabel::Alpha1,
        (true, true, _) => ConfigLabel::Alpha2,
        (false, false, false) => ConfigLabel::Beta1,
        (false, true, false) => ConfigLabel::Beta2,
        (false, false, true) => ConfigLabel::Beta3,
        (false, true, true) => ConfigLabel::Beta4,
    })
}
