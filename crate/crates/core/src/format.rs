//! Graphviz rendering. JSON comes from the `Serialize` impls.

use std::fmt::Write;

use crate::plane::PlaneNode;
use crate::AnyForest;

/// DOT digraph with parent -> child edges. Plane forests keep child order
/// (`ordering=out`) and draw anonymous leaves as `*`; colored forests put
/// the edge color in both `color` (a `paired12` scheme index) and `label`.
pub fn to_dot(forest: &AnyForest) -> String {
    let mut out = String::from("digraph forest {\n");
    match forest {
        AnyForest::Rooted(f) => {
            for v in 1..=f.n() {
                let _ = writeln!(out, "  {v};");
            }
            for (i, &p) in f.parents().iter().enumerate() {
                if p != 0 {
                    let _ = writeln!(out, "  {p} -> {};", i + 1);
                }
            }
        }
        AnyForest::Colored(f) => {
            out.push_str("  edge [colorscheme=paired12];\n");
            for v in 1..=f.n() {
                let _ = writeln!(out, "  {v};");
            }
            for (i, &p) in f.base().parents().iter().enumerate() {
                if p != 0 {
                    let c = f.color(i + 1);
                    let _ = writeln!(out, "  {p} -> {} [color={c}, label=\"{c}\"];", i + 1);
                }
            }
        }
        AnyForest::Plane(f) => {
            out.push_str("  ordering=out;\n");
            let mut leaves = 0;
            for t in f.trees() {
                plane_node(t, None, &mut leaves, &mut out);
            }
        }
    }
    out.push_str("}\n");
    out
}

fn plane_node(node: &PlaneNode, parent: Option<&str>, leaves: &mut usize, out: &mut String) {
    let id = match node.label {
        Some(l) => {
            let _ = writeln!(out, "  {l};");
            l.to_string()
        }
        None => {
            *leaves += 1;
            let id = format!("leaf{leaves}");
            let _ = writeln!(out, "  {id} [label=\"*\", shape=point];");
            id
        }
    };
    if let Some(p) = parent {
        let _ = writeln!(out, "  {p} -> {id};");
    }
    for c in &node.children {
        plane_node(c, Some(&id), leaves, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{EdgeColoredForest, PlaneForest, RootedForest};

    #[test]
    fn rooted_edges() {
        let f = AnyForest::Rooted(RootedForest::from_parents(vec![0, 1, 1]).unwrap());
        assert_eq!(
            to_dot(&f),
            "digraph forest {\n  1;\n  2;\n  3;\n  1 -> 2;\n  1 -> 3;\n}\n"
        );
    }

    #[test]
    fn colored_edges_carry_colors() {
        let base = RootedForest::from_parents(vec![0, 1, 2]).unwrap();
        let f = AnyForest::Colored(EdgeColoredForest::new(base, 2, vec![0, 1, 2]).unwrap());
        let dot = to_dot(&f);
        assert!(dot.contains("1 -> 2 [color=1, label=\"1\"];"));
        assert!(dot.contains("2 -> 3 [color=2, label=\"2\"];"));
    }

    #[test]
    fn plane_keeps_order_and_leaves() {
        let f = AnyForest::Plane(PlaneForest::parse_term("1(*,2(*))").unwrap());
        let dot = to_dot(&f);
        let a = dot.find("1 -> leaf1").unwrap();
        let b = dot.find("1 -> 2").unwrap();
        assert!(a < b);
        assert!(dot.contains("2 -> leaf2"));
    }
}
