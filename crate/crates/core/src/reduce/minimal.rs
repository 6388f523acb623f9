use std::collections::{BTreeSet, VecDeque};

use crate::class::{class_membership, ClassSpec};
use crate::graph::{Edge, Graph, VertexId};
use crate::structure::find_leaves;

use super::ReduceError;

/// Deletes edges in lexicographic order, in repeated passes, as long as the
/// graph stays in the class. Returns the minimal spanning subgraph and the
/// deleted edges in deletion order.
pub fn minimalize(g: &Graph, spec: &ClassSpec) -> Result<(Graph, Vec<Edge>), ReduceError> {
    let report = class_membership(g, spec);
    if !report.is_member() {
        return Err(ReduceError::NotInClass(report));
    }
    let mut f = g.clone();
    let mut deleted = Vec::new();
    loop {
        let mut changed = false;
        for (u, w) in f.edges() {
            if f.degree(u) <= spec.min_degree || f.degree(w) <= spec.min_degree {
                continue;
            }
            f.remove_edge(u, w).expect("listed edge");
            if spec.forbid_five_vertex_components
                && (small_component_size(&f, u) == 5 || small_component_size(&f, w) == 5)
            {
                f.add_edge(u, w).expect("restoring edge");
                continue;
            }
            deleted.push((u, w));
            changed = true;
        }
        if !changed {
            break;
        }
    }
    if spec.forbid_five_vertex_components {
        if let Some(e) = minimality_witness(&f) {
            return Err(ReduceError::NotMinimal(e.0, e.1));
        }
    }
    Ok((f, deleted))
}

/// Size of the component of `v`, or 6 once it is known to exceed 5.
fn small_component_size(g: &Graph, v: VertexId) -> usize {
    let mut seen: BTreeSet<VertexId> = [v].into_iter().collect();
    let mut queue: VecDeque<VertexId> = [v].into_iter().collect();
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if seen.insert(y) {
                if seen.len() > 5 {
                    return 6;
                }
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// An edge touching neither a degree-2 vertex nor a vertex of a 5-leaf, if
/// any. Minimality in the subcubic no-5-component class is equivalent to
/// there being none.
pub fn minimality_witness(g: &Graph) -> Option<Edge> {
    let spec = ClassSpec::subcubic_no_five();
    let mut in_five_leaf: BTreeSet<VertexId> = BTreeSet::new();
    for comp in g.components() {
        if let Ok(leaves) = find_leaves(&comp, &spec) {
            for leaf in leaves.iter().filter(|l| l.is_five_leaf()) {
                in_five_leaf.extend(leaf.vertices.iter().copied());
            }
        }
    }
    g.edges().into_iter().find(|&(u, w)| {
        g.degree(u) != 2
            && g.degree(w) != 2
            && !in_five_leaf.contains(&u)
            && !in_five_leaf.contains(&w)
    })
}
