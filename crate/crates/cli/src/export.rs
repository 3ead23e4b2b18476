//! Tree exports. Output depends only on the tree, never on timing or thread count.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use ordinarization::{NumericalSemigroup, OrdinarizationTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeExport {
    pub id: usize,
    pub gaps: Vec<usize>,
    pub parent: Option<usize>,
    pub depth: usize,
    pub h: usize,
    pub min_gens: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeExport {
    pub genus: usize,
    pub nodes: Vec<NodeExport>,
}

impl TreeExport {
    pub fn from_tree(tree: &OrdinarizationTree) -> Self {
        let nodes = tree
            .nodes
            .iter()
            .enumerate()
            .map(|(id, s)| {
                let gens = s.minimal_generators();
                NodeExport {
                    id,
                    gaps: s.gaps(),
                    parent: tree.parent[id],
                    depth: tree.depth[id],
                    h: gens.effectivity(),
                    min_gens: gens.minimal_generators,
                }
            })
            .collect();
        TreeExport { genus: tree.genus, nodes }
    }

    /// Rebuilds the semigroups from their gap lists.
    pub fn semigroups(&self) -> ordinarization::Result<Vec<NumericalSemigroup>> {
        self.nodes.iter().map(|n| NumericalSemigroup::from_gaps(n.gaps.iter().copied())).collect()
    }
}

pub fn to_json(tree: &OrdinarizationTree) -> String {
    let mut s = serde_json::to_string_pretty(&TreeExport::from_tree(tree)).expect("tree serializes");
    s.push('\n');
    s
}

fn gap_label(s: &NumericalSemigroup) -> String {
    let gaps: Vec<String> = s.gaps().iter().map(ToString::to_string).collect();
    format!("{{{}}}", gaps.join(","))
}

/// Graphviz digraph, root on the left, edges from child to parent.
pub fn to_dot(tree: &OrdinarizationTree) -> String {
    let mut out = format!("digraph ordinarization_tree_g{} {{\n", tree.genus);
    out.push_str("  rankdir=RL;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (id, s) in tree.nodes.iter().enumerate() {
        writeln!(out, "  n{id} [label=\"{}\"];", gap_label(s)).unwrap();
    }
    for (id, parent) in tree.parent.iter().enumerate() {
        if let Some(p) = parent {
            writeln!(out, "  n{id} -> n{p};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordinarization::{build_ordinarization_tree, EnumOptions};

    #[test]
    fn small_trees() {
        let t0 = build_ordinarization_tree(0, &EnumOptions::default()).unwrap();
        assert_eq!(to_dot(&t0), "digraph ordinarization_tree_g0 {\n  rankdir=RL;\n  node [shape=box, fontname=\"monospace\"];\n  n0 [label=\"{}\"];\n}\n");
        let t2 = build_ordinarization_tree(2, &EnumOptions::default()).unwrap();
        let dot = to_dot(&t2);
        assert!(dot.contains("n0 [label=\"{1,2}\"]"));
        assert!(dot.contains("n1 -> n0;"));
        let json: TreeExport = serde_json::from_str(&to_json(&t2)).unwrap();
        assert_eq!(json.nodes.len(), 2);
        assert_eq!(json.nodes[1].parent, Some(0));
        assert_eq!(json.nodes[1].min_gens, vec![2, 5]);
        assert_eq!(json.semigroups().unwrap(), t2.nodes);
    }
}
