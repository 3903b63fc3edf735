use std::fmt::Write as _;

use crate::star::StarShape;
use crate::Result;

/// Graphviz description of the star as an undirected graph.
///
/// Nodes are `arm{i}_{j}` (arm `i` from 1, position `j` from 1 at the leaf)
/// and `center`; each node is labelled with its diagonal weight. With
/// `with_labels`, each node also carries its Coxeter label as an `xlabel`,
/// which requires the star to be affine. Only the shape is read; the matrix
/// is never built.
pub fn emit_dot(shape: &StarShape, with_labels: bool) -> Result<String> {
    let labels = if with_labels { Some(shape.coxeter_labels()?) } else { None };
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", shape.notation());
    out.push_str("  node [shape=circle];\n");
    match &labels {
        Some(l) => {
            let _ = writeln!(out, "  center [label=\"{}\", xlabel=\"{}\"];", shape.k(), l.center);
        }
        None => {
            let _ = writeln!(out, "  center [label=\"{}\"];", shape.k());
        }
    }
    for (i, &r) in shape.arms().iter().enumerate() {
        let arm = labels.as_ref().map(|l| &l.arms[i]);
        for j in 1..=r {
            match arm {
                Some(a) => {
                    let c = a.get(j).expect("label index within arm");
                    let _ = writeln!(out, "  arm{}_{j} [label=\"2\", xlabel=\"{c}\"];", i + 1);
                }
                None => {
                    let _ = writeln!(out, "  arm{}_{j} [label=\"2\"];", i + 1);
                }
            }
        }
    }
    for (i, &r) in shape.arms().iter().enumerate() {
        for j in 1..r {
            let _ = writeln!(out, "  arm{0}_{1} -- arm{0}_{2};", i + 1, j, j + 1);
        }
        let _ = writeln!(out, "  arm{}_{r} -- center;", i + 1);
    }
    out.push_str("}\n");
    Ok(out)
}
