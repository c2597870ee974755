//! Graphviz output.

use std::fmt::Write;

use crate::space::{format_with, FinSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotMode {
    /// Hasse diagram of the specialization order of the T₀ quotient, edges
    /// pointing upward.
    Hasse,
    /// Cover graph of the lattice of open sets, edges pointing to the larger
    /// set.
    Lattice,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(space: &FinSpace, mode: DotMode) -> String {
    let mut out = String::new();
    match mode {
        DotMode::Hasse => {
            let q = space.kolmogorov_quotient();
            let classes = q.representatives.len();
            let ids: Vec<String> = (0..classes)
                .map(|c| format_with(space.labels(), q.members(c)))
                .collect();
            out.push_str("digraph hasse {\n");
            for c in 0..classes {
                let label = space.set_labels(q.members(c)).join(",");
                let _ = writeln!(
                    out,
                    "  \"{}\" [shape=ellipse, label=\"{}\"];",
                    escape(&ids[c]),
                    escape(&label)
                );
            }
            for (lo, hi) in q.space.specialization_preorder().covers() {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", escape(&ids[lo]), escape(&ids[hi]));
            }
        }
        DotMode::Lattice => {
            let family = space.open_family();
            out.push_str("digraph lattice {\n");
            for s in family.iter() {
                let id = space.format_set(s);
                let _ = writeln!(out, "  \"{}\" [shape=box, label=\"{}\"];", escape(&id), escape(&id));
            }
            for u in family.iter() {
                for v in space.open_covers(u) {
                    let _ = writeln!(
                        out,
                        "  \"{}\" -> \"{}\";",
                        escape(&space.format_set(u)),
                        escape(&space.format_set(v))
                    );
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
