use serde::Serialize;

use super::MutationRecord;
use crate::quiver::{build_gamma, Quiver, Vertex};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GreenLabel {
    Green,
    Red,
    /// Frame arrows in both directions; never happens when sign coherence holds.
    Mixed,
}

/// Framed quiver of `Γ_w̄`: one frozen frame vertex `L + i` per vertex `i`,
/// with an arrow from the frame to `i`.
pub fn framed_gamma(w: &Word) -> Quiver {
    let mut q = build_gamma(w);
    let l = w.len();
    for i in 1..=l {
        q.add_vertex(Vertex { id: l + i, color: 0, column: i, frozen: true });
        q.add_arrows(l + i, i, 1);
    }
    q
}

/// Label of each mutation of the trace, taken just before it is applied.
/// A vertex is green when no arrow goes from it to a frame vertex.
pub fn green_report(w: &Word, trace: &[MutationRecord]) -> Vec<GreenLabel> {
    let mut q = framed_gamma(w);
    let l = w.len();
    trace
        .iter()
        .map(|rec| {
            let k = rec.vertex;
            let to_frame = q.out_arrows(k).iter().any(|&(d, _)| d > l);
            let from_frame = q.in_arrows(k).iter().any(|&(s, _)| s > l);
            q.mutate_in_place(k).expect("trace vertices are mutable");
            match (to_frame, from_frame) {
                (false, _) => GreenLabel::Green,
                (true, false) => GreenLabel::Red,
                (true, true) => GreenLabel::Mixed,
            }
        })
        .collect()
}
