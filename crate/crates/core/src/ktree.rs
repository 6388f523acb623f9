//! `k`-edge tree packings meeting `(v - k)/(sk - k + 1)` per component, for
//! graphs with degrees in `[1, s]` and no `k`-vertex component.
//!
//! Each component is replaced by a search tree. A branch of at most
//! `(s-1)k + 1` vertices in which every `k`-edge subtree meets one cut vertex
//! is split off, one tree is taken from it, and the rest of the branch is
//! discarded. The remainder is again a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::class::{class_membership, ClassReport, ClassSpec};
use crate::graph::{Graph, VertexId};
use crate::packing::{BoundKind, Certificate, Packing, Tree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KtreeError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("maximum degree s must be at least 3, got {0}")]
    BadDegreeBound(usize),
    #[error("packers need a simple graph")]
    NotSimple,
    #[error("graph is out of class ({spec}): {report}")]
    OutOfClass { spec: ClassSpec, report: ClassReport },
    #[error("component of vertex {0} has exactly k = {1} vertices")]
    KVertexComponent(VertexId, usize),
    #[error("tree has {0} vertices, fewer than k + 1 = {1}")]
    TreeTooSmall(usize, usize),
    #[error("vertex {0} has degree {1} above s = {2}")]
    DegreeOverS(VertexId, usize, usize),
    #[error("input is not a tree")]
    NotATree,
}

/// A subtree `B` whose every `k`-edge subtree contains `cut`. `root` is the
/// vertex of `B` adjacent to the rest of the tree, absent when `B` is all of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub vertices: BTreeSet<VertexId>,
    pub root: Option<VertexId>,
    pub cut: VertexId,
}

struct Rooted {
    parent: BTreeMap<VertexId, VertexId>,
    children: BTreeMap<VertexId, Vec<VertexId>>,
    depth: BTreeMap<VertexId, usize>,
    size: BTreeMap<VertexId, usize>,
    order: Vec<VertexId>,
}

fn root_tree(t: &Graph, root: VertexId) -> Rooted {
    let mut parent = BTreeMap::new();
    let mut children: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut depth: BTreeMap<VertexId, usize> = [(root, 0)].into_iter().collect();
    let mut order = vec![root];
    let mut queue: VecDeque<VertexId> = [root].into_iter().collect();
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if !depth.contains_key(&w) {
                depth.insert(w, depth[&v] + 1);
                parent.insert(w, v);
                children.entry(v).or_default().push(w);
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    let mut size: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &v in order.iter().rev() {
        let s = 1 + children.get(&v).map_or(0, |cs| cs.iter().map(|c| size[c]).sum());
        size.insert(v, s);
    }
    Rooted {
        parent,
        children,
        depth,
        size,
        order,
    }
}

impl Rooted {
    fn subtree(&self, v: VertexId) -> BTreeSet<VertexId> {
        let mut out: BTreeSet<VertexId> = [v].into_iter().collect();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &c in self.children.get(&x).into_iter().flatten() {
                out.insert(c);
                stack.push(c);
            }
        }
        out
    }
}

/// A branch with at most `(s-1)k + 1` vertices whose `k`-edge subtrees all
/// meet its cut vertex. Rooted at the minimum id, the cut is the deepest
/// non-root vertex with at least `k+1` vertices below it; its subtree is the
/// branch. Without one, the root is the cut.
pub fn find_good_branch(t: &Graph, k: usize, s: usize) -> Result<Branch, KtreeError> {
    if k == 0 {
        return Err(KtreeError::ZeroK);
    }
    let n = t.vertex_count();
    if n < k + 1 {
        return Err(KtreeError::TreeTooSmall(n, k + 1));
    }
    if !t.is_connected() || t.edge_count() + 1 != n {
        return Err(KtreeError::NotATree);
    }
    if let Some(v) = t.vertices().find(|&v| t.degree(v) > s) {
        return Err(KtreeError::DegreeOverS(v, t.degree(v), s));
    }
    let root = t.min_vertex().expect("non-empty tree");
    let r = root_tree(t, root);
    let deepest = r
        .order
        .iter()
        .copied()
        .filter(|&v| v != root && r.size[&v] > k)
        .max_by_key(|&v| (r.depth[&v], std::cmp::Reverse(v)));
    let branch = match deepest {
        Some(u) => Branch {
            vertices: r.subtree(u),
            root: Some(u),
            cut: u,
        },
        None if n <= (s - 1) * k + 1 => Branch {
            vertices: t.vertex_set(),
            root: None,
            cut: root,
        },
        None => {
            // root has s children of at most k vertices each; drop the largest
            let largest = r.children[&root]
                .iter()
                .copied()
                .max_by_key(|&c| (r.size[&c], std::cmp::Reverse(c)))
                .expect("root has children");
            let rest = r.subtree(largest);
            Branch {
                vertices: t.vertex_set().difference(&rest).copied().collect(),
                root: Some(root),
                cut: root,
            }
        }
    };
    assert!(branch.vertices.len() > k && branch.vertices.len() <= (s - 1) * k + 1);
    let mut pieces = t.induced(&branch.vertices);
    pieces.remove_vertex(branch.cut).expect("cut lies in the branch");
    assert!(
        pieces.component_sets().iter().all(|c| c.len() <= k),
        "every k-edge subtree of the branch must meet its cut vertex"
    );
    if branch.root.is_some() {
        debug_assert!(t.without(&branch.vertices).is_connected());
    }
    Ok(branch)
}

/// The first `k+1` vertices reached by breadth-first search from the cut
/// vertex inside the branch, with their search-tree edges.
pub fn extract_ktree(t: &Graph, b: &Branch, k: usize) -> Tree {
    let mut seen: BTreeSet<VertexId> = [b.cut].into_iter().collect();
    let mut edges = Vec::with_capacity(k);
    let mut queue: VecDeque<VertexId> = [b.cut].into_iter().collect();
    'grow: while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if edges.len() == k {
                break 'grow;
            }
            if b.vertices.contains(&w) && seen.insert(w) {
                edges.push((v, w));
                queue.push_back(w);
            }
        }
    }
    assert_eq!(edges.len(), k, "branch holds at least k+1 vertices");
    Tree::new(edges)
}

/// Search tree of a connected graph from its minimum id.
fn spanning_tree(g: &Graph) -> Graph {
    let root = g.min_vertex().expect("non-empty component");
    let r = root_tree(g, root);
    let mut t = Graph::new(g.mode());
    for v in g.vertices() {
        t.insert_vertex(v).expect("fresh id");
    }
    for (&c, &p) in &r.parent {
        t.add_edge(p, c).expect("tree edge");
    }
    t
}

/// Packs `k`-edge trees into `g`, meeting `(v_i - k)/(sk - k + 1)` on every
/// component with more than `k` vertices.
pub fn pack_ktrees(g: &Graph, k: usize, s: usize) -> Result<(Packing, Certificate), KtreeError> {
    if k == 0 {
        return Err(KtreeError::ZeroK);
    }
    if s < 3 {
        return Err(KtreeError::BadDegreeBound(s));
    }
    if !g.is_simple_mode() {
        return Err(KtreeError::NotSimple);
    }
    let spec = ClassSpec::degrees(1, s).expect("1 <= s");
    let report = class_membership(g, &spec);
    if !report.is_member() {
        return Err(KtreeError::OutOfClass { spec, report });
    }
    let mut packing = Packing::new(k);
    for comp in g.components() {
        let n = comp.vertex_count();
        if n == k {
            return Err(KtreeError::KVertexComponent(comp.min_vertex().unwrap(), k));
        }
        let mut t = spanning_tree(&comp);
        while t.vertex_count() > k {
            let b = find_good_branch(&t, k, s)?;
            packing.push(extract_ktree(&t, &b, k));
            t = t.without(&b.vertices);
        }
    }
    let certificate = Certificate::new(BoundKind::Trees { s, k }, g, packing.size());
    Ok((packing, certificate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::gen_tsk;
    use crate::named;
    use crate::packing::verify_packing;

    #[test]
    fn branch_at_the_end_of_a_path() {
        let b = find_good_branch(&named::path(8), 2, 3).unwrap();
        assert_eq!(b.vertices.len(), 3);
        assert!(b.vertices.contains(&VertexId(8)));
    }

    #[test]
    fn star_is_its_own_branch() {
        let b = find_good_branch(&named::star(4), 2, 4).unwrap();
        assert_eq!(b.vertices.len(), 5);
        assert_eq!(b.root, None);
        let tree = extract_ktree(&named::star(4), &b, 2);
        assert_eq!(tree.edge_count(), 2);
        assert!(tree.vertices().contains(&b.cut));
    }

    #[test]
    fn exact_size_tree_is_whole_branch() {
        let b = find_good_branch(&named::path(3), 2, 3).unwrap();
        assert_eq!(b.vertices.len(), 3);
        assert!(matches!(find_good_branch(&named::path(2), 2, 3), Err(KtreeError::TreeTooSmall(2, 3))));
        assert!(matches!(find_good_branch(&named::star(4), 2, 3), Err(KtreeError::DegreeOverS(..))));
    }

    #[test]
    fn packs_extremal_trees_and_paths() {
        let (g, _) = gen_tsk(3, 2, 0).unwrap();
        let (p, c) = pack_ktrees(&g, 2, 3).unwrap();
        assert_eq!(p.size(), 1);
        assert!(c.satisfied);
        let (g, _) = gen_tsk(3, 2, 1).unwrap();
        let (p, c) = pack_ktrees(&g, 2, 3).unwrap();
        assert!(p.size() >= 2 && c.satisfied);
        assert!(verify_packing(&g, &p).is_ok());
        let (p, _) = pack_ktrees(&named::path(7), 2, 3).unwrap();
        assert_eq!(p.size(), 2);
    }

    #[test]
    fn rejects_k_vertex_components_and_accepts_k_one() {
        assert!(matches!(
            pack_ktrees(&named::path(2), 2, 3),
            Err(KtreeError::KVertexComponent(..))
        ));
        let (p, c) = pack_ktrees(&named::petersen(), 1, 3).unwrap();
        assert!(c.satisfied && p.size() >= 3);
        assert!(verify_packing(&named::petersen(), &p).is_ok());
    }
}
