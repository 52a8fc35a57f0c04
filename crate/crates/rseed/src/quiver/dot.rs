use std::fmt::Write;

use super::Quiver;

/// Graphviz rendering: one `rank=same` subgraph per color line, columns
/// placed right to left by index, frozen vertices drawn as boxes. Each unit
/// of multiplicity is its own edge. `pos` hints are included for `neato -n`.
pub fn to_dot(q: &Quiver, name: &str) -> String {
    let max_col = q.vertices().map(|v| v.column).max().unwrap_or(0);
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", name.replace('"', "'")).unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for c in q.colors() {
        writeln!(s, "  subgraph line_{c} {{").unwrap();
        writeln!(s, "    rank=same;").unwrap();
        let mut line: Vec<_> = q.vertices().filter(|v| v.color == c).collect();
        line.sort_by_key(|v| std::cmp::Reverse(v.column));
        for v in line {
            let shape = if v.frozen { ", shape=box" } else { "" };
            let x = (max_col - v.column) * 72;
            let y = c * 72;
            writeln!(s, "    v{} [label=\"V{}\"{shape}, pos=\"{x},-{y}!\"];", v.id, v.id).unwrap();
        }
        writeln!(s, "  }}").unwrap();
    }
    for (a, b, m) in q.arrows() {
        for _ in 0..m {
            writeln!(s, "  v{a} -> v{b};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
