//! Saw-teeth shape of a bicolor subquiver.
//!
//! Walking the first line in increasing index order, the ordinary arrows
//! must read: an optional initial barb (line → other), then teeth, each
//! made of an arrow `summit → right end` and an arrow `left end → summit`,
//! with the left end of one tooth being the right end of the next, then an
//! optional final barb (other → line) into the left end of the last tooth.

use std::collections::BTreeSet;

use serde::Serialize;

use super::BicolorQuiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tooth {
    pub left_end: usize,
    pub summit: usize,
    pub right_end: usize,
    /// Line vertices from the right end up to the left end.
    pub chain: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SawTeethReport {
    pub initial_run: Vec<usize>,
    pub initial_barb: Option<(usize, usize)>,
    pub teeth: Vec<Tooth>,
    pub final_barb: Option<(usize, usize)>,
    pub final_run: Vec<usize>,
    pub isolated: Vec<usize>,
    pub pure: bool,
    pub valid: bool,
    pub violation: Option<String>,
}

impl SawTeethReport {
    fn fail(msg: String) -> Self {
        SawTeethReport { valid: false, violation: Some(msg), ..Default::default() }
    }
}

pub fn classify_sawteeth(bq: &BicolorQuiver) -> SawTeethReport {
    let q = &bq.quiver;
    let line = q.line(bq.first);
    let others: BTreeSet<usize> = q.line(bq.second).into_iter().collect();
    let on_line: BTreeSet<usize> = line.iter().copied().collect();

    // The line itself must be a single horizontal chain.
    for (a, b, m) in q.arrows() {
        if on_line.contains(&a) && on_line.contains(&b) {
            let ia = line.iter().position(|&x| x == a).unwrap();
            if ia + 1 >= line.len() || line[ia + 1] != b || m != 1 {
                return SawTeethReport::fail(format!("arrow {a}->{b} is not a horizontal step of line {}", bq.first));
            }
        } else if m != 1 {
            return SawTeethReport::fail(format!("arrow {a}->{b} has multiplicity {m}"));
        }
    }
    for w in line.windows(2) {
        if q.mult(w[0], w[1]) != 1 {
            return SawTeethReport::fail(format!("missing horizontal arrow {}->{}", w[0], w[1]));
        }
    }

    let mut ins = Vec::with_capacity(line.len());
    let mut outs = Vec::with_capacity(line.len());
    for &v in &line {
        let i: Vec<usize> = q.in_arrows(v).into_iter().map(|a| a.0).filter(|s| others.contains(s)).collect();
        let o: Vec<usize> = q.out_arrows(v).into_iter().map(|a| a.0).filter(|d| others.contains(d)).collect();
        if i.len() > 1 || o.len() > 1 {
            return SawTeethReport::fail(format!("vertex {v} carries more than one ordinary arrow in one direction"));
        }
        ins.push(i.first().copied());
        outs.push(o.first().copied());
    }
    let busy: Vec<usize> = (0..line.len()).filter(|&t| ins[t].is_some() || outs[t].is_some()).collect();
    let isolated: Vec<usize> = others.iter().copied().filter(|&j| q.neighbours(j).is_empty()).collect();

    let Some(&first) = busy.first() else {
        return SawTeethReport { initial_run: line, isolated, pure: true, valid: true, ..Default::default() };
    };
    let last = *busy.last().unwrap();

    let mut report = SawTeethReport {
        initial_run: line[..first].to_vec(),
        final_run: line[last + 1..].to_vec(),
        isolated,
        ..Default::default()
    };
    // c2 vertices met along the way must increase.
    let mut order: Vec<usize> = Vec::new();

    if let Some(b) = outs[first] {
        report.initial_barb = Some((line[first], b));
        order.push(b);
    }
    let mut open = ins[first];
    let mut right = first;
    if let Some(s) = open {
        order.push(s);
    }
    for &t in &busy[1..] {
        let v = line[t];
        let Some(s) = open else {
            return SawTeethReport::fail(format!("ordinary arrow at {v} after the teeth ended at {}", line[right]));
        };
        if outs[t] != Some(s) {
            return SawTeethReport::fail(format!("vertex {v} should close the tooth with summit {s}"));
        }
        report.teeth.push(Tooth { left_end: v, summit: s, right_end: line[right], chain: line[right..=t].to_vec() });
        open = ins[t];
        right = t;
        if let Some(s2) = open {
            order.push(s2);
        }
    }
    if let Some(s) = open {
        report.final_barb = Some((s, line[right]));
    }
    if order.windows(2).any(|w| w[0] >= w[1]) {
        return SawTeethReport::fail(format!("vertices of line {} are met out of order: {order:?}", bq.second));
    }
    // Every vertex of the other line is either isolated or used above.
    let used: BTreeSet<usize> = order.iter().copied().collect();
    if let Some(j) = others.iter().find(|j| !used.contains(j) && !report.isolated.contains(j)) {
        return SawTeethReport::fail(format!("vertex {j} of line {} is attached twice", bq.second));
    }
    report.pure = report.initial_barb.is_none();
    report.valid = true;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{bicolor, build_gamma, Quiver, Vertex};
    use crate::rootsys::{cartan, Family};
    use crate::words::{Order, Word};

    #[test]
    fn d5_three_teeth() {
        let c = cartan(Family::D, 5).unwrap();
        let w = Word::new(&c, &[4, 3, 5, 2, 3, 4, 1, 2, 3, 5, 3, 4, 1, 2, 3, 1, 2], Order::Paper).unwrap();
        let q = build_gamma(&w);
        let r = classify_sawteeth(&bicolor(&q, 3, 2));
        assert!(r.valid, "{:?}", r.violation);
        assert_eq!(r.initial_barb, Some((3, 1)));
        assert!(!r.pure);
        let teeth: Vec<(usize, usize, usize)> = r.teeth.iter().map(|t| (t.left_end, t.summit, t.right_end)).collect();
        assert_eq!(teeth, vec![(9, 4, 3), (13, 10, 9), (16, 14, 13)]);
        assert_eq!(r.teeth[0].chain, vec![3, 7, 9]);
        let r53 = classify_sawteeth(&bicolor(&q, 5, 3));
        assert!(r53.valid && r53.initial_barb.is_some() && r53.final_barb.is_some());
        assert_eq!(r53.isolated, vec![3, 9]);
    }

    #[test]
    fn bare_line() {
        let mut q = Quiver::new();
        for id in 1..=3 {
            q.add_vertex(Vertex { id, color: 1, column: id, frozen: false });
        }
        q.add_arrows(1, 2, 1);
        q.add_arrows(2, 3, 1);
        let r = classify_sawteeth(&bicolor(&q, 1, 2));
        assert!(r.valid && r.pure && r.teeth.is_empty());
    }
}
