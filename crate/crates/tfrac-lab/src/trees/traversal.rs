//! Consistent tree traversals and the level / croix / nid statistics.
//!
//! A traversal maps a tree to a total order on its vertices; all four
//! traversals here satisfy the consistency property (the order restricted to
//! a label prefix equals the order of the restricted tree), which tests
//! check rather than assume. The statistics refine the level of a vertex,
//!   lev(v) = #{w : p(w) < v < w},
//! into croix (v before w in traversal order) plus nid (w before v).

use std::collections::BTreeMap;

use super::binary::BinaryTree;
use super::irt::IrtTree;
use super::multilabeled::MultiLabeledBinaryTree;
use super::rt::RtTree;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Traversal {
    Preorder,
    Postorder,
    /// Left, root, right; binary trees only.
    Inorder,
    /// Left child, root, middle child, right child (the ternary analogue of
    /// inorder; coincides with inorder on binary trees).
    LeftRootMiddleRight,
}

impl Traversal {
    pub const ALL_TERNARY: [Traversal; 3] = [
        Traversal::Preorder,
        Traversal::Postorder,
        Traversal::LeftRootMiddleRight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Traversal::Preorder => "preorder",
            Traversal::Postorder => "postorder",
            Traversal::Inorder => "inorder",
            Traversal::LeftRootMiddleRight => "left-root-middle-right",
        }
    }

    pub fn parse(s: &str) -> Option<Traversal> {
        match s {
            "preorder" | "pre" => Some(Traversal::Preorder),
            "postorder" | "post" => Some(Traversal::Postorder),
            "inorder" | "in" => Some(Traversal::Inorder),
            "left-root-middle-right" | "lrmr" | "aprime" => Some(Traversal::LeftRootMiddleRight),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("traversal {traversal} is not defined for arity-{arity} trees")]
pub struct ArityMismatch {
    pub traversal: &'static str,
    pub arity: usize,
}

/// Rooted ordered trees on a totally ordered vertex set, with vertices
/// identified by their rank in that order (labels for unilabeled trees,
/// storage index for interval- and multi-labeled ones).
pub trait OrderedTree {
    /// 2 for binary, 3 for (restricted) ternary.
    fn arity(&self) -> usize;
    fn root(&self) -> Option<usize>;
    /// Vertex ids in the total order.
    fn vertex_ids(&self) -> Vec<usize>;
    /// (left, middle, right); middle is always None for binary trees.
    fn children(&self, v: usize) -> (Option<usize>, Option<usize>, Option<usize>);

    fn parent_map(&self) -> BTreeMap<usize, usize> {
        let mut p = BTreeMap::new();
        for v in self.vertex_ids() {
            let (l, m, r) = self.children(v);
            for c in [l, m, r].into_iter().flatten() {
                p.insert(c, v);
            }
        }
        p
    }
}

impl OrderedTree for BinaryTree {
    fn arity(&self) -> usize {
        2
    }
    fn root(&self) -> Option<usize> {
        (self.n() >= 1).then_some(1)
    }
    fn vertex_ids(&self) -> Vec<usize> {
        (1..=self.n()).collect()
    }
    fn children(&self, v: usize) -> (Option<usize>, Option<usize>, Option<usize>) {
        (self.left(v), None, self.right(v))
    }
}

impl OrderedTree for RtTree {
    fn arity(&self) -> usize {
        3
    }
    fn root(&self) -> Option<usize> {
        (self.n() >= 1).then_some(1)
    }
    fn vertex_ids(&self) -> Vec<usize> {
        (1..=self.n()).collect()
    }
    fn children(&self, v: usize) -> (Option<usize>, Option<usize>, Option<usize>) {
        (self.left(v), self.middle(v), self.right(v))
    }
}

impl OrderedTree for IrtTree {
    fn arity(&self) -> usize {
        3
    }
    fn root(&self) -> Option<usize> {
        Some(0)
    }
    fn vertex_ids(&self) -> Vec<usize> {
        (0..self.num_vertices()).collect()
    }
    fn children(&self, v: usize) -> (Option<usize>, Option<usize>, Option<usize>) {
        let vx = self.vertex(v);
        (vx.left, vx.middle, vx.right)
    }
}

impl OrderedTree for MultiLabeledBinaryTree {
    fn arity(&self) -> usize {
        2
    }
    fn root(&self) -> Option<usize> {
        Some(0)
    }
    fn vertex_ids(&self) -> Vec<usize> {
        (0..self.num_vertices()).collect()
    }
    fn children(&self, v: usize) -> (Option<usize>, Option<usize>, Option<usize>) {
        let vx = self.vertex(v);
        (vx.left, None, vx.right)
    }
}

/// The total order <_A on vertices, as the traversal sequence.
pub fn traversal_order<T: OrderedTree + ?Sized>(
    t: &T,
    a: Traversal,
) -> Result<Vec<usize>, ArityMismatch> {
    if a == Traversal::Inorder && t.arity() != 2 {
        return Err(ArityMismatch {
            traversal: a.name(),
            arity: t.arity(),
        });
    }
    let mut out = Vec::new();
    if let Some(root) = t.root() {
        walk(t, root, a, &mut out);
    }
    Ok(out)
}

fn walk<T: OrderedTree + ?Sized>(t: &T, v: usize, a: Traversal, out: &mut Vec<usize>) {
    let (l, m, r) = t.children(v);
    let go = |c: Option<usize>, out: &mut Vec<usize>| {
        if let Some(c) = c {
            walk(t, c, a, out);
        }
    };
    match a {
        Traversal::Preorder => {
            out.push(v);
            go(l, out);
            go(m, out);
            go(r, out);
        }
        Traversal::Postorder => {
            go(l, out);
            go(m, out);
            go(r, out);
            out.push(v);
        }
        Traversal::Inorder => {
            go(l, out);
            out.push(v);
            go(r, out);
        }
        Traversal::LeftRootMiddleRight => {
            go(l, out);
            out.push(v);
            go(m, out);
            go(r, out);
        }
    }
}

/// Node type of a vertex as a bitstring ("10", "010", ...), one bit per
/// child slot in the tree's arity.
pub fn node_type_string<T: OrderedTree + ?Sized>(t: &T, v: usize) -> String {
    let (l, m, r) = t.children(v);
    let bit = |o: Option<usize>| if o.is_some() { '1' } else { '0' };
    if t.arity() == 2 {
        [bit(l), bit(r)].iter().collect()
    } else {
        [bit(l), bit(m), bit(r)].iter().collect()
    }
}

/// Per-vertex statistics with respect to a traversal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexStats {
    pub node_type: String,
    pub lev: usize,
    pub croix: usize,
    pub nid: usize,
    /// |L_v| - 1 for multi-label families, 0 otherwise.
    pub label_surplus: usize,
}

/// Statistics of every vertex, keyed by vertex id, with respect to `a`.
pub fn all_vertex_stats<T: OrderedTree + ?Sized>(
    t: &T,
    a: Traversal,
) -> Result<BTreeMap<usize, VertexStats>, ArityMismatch> {
    let order = traversal_order(t, a)?;
    let mut pos = BTreeMap::new();
    for (i, &v) in order.iter().enumerate() {
        pos.insert(v, i);
    }
    let parents = t.parent_map();
    let ids = t.vertex_ids();
    let mut out = BTreeMap::new();
    for &v in &ids {
        let mut croix = 0;
        let mut nid = 0;
        for (&w, &pw) in &parents {
            if pw < v && v < w {
                if pos[&v] < pos[&w] {
                    croix += 1;
                } else {
                    nid += 1;
                }
            }
        }
        out.insert(
            v,
            VertexStats {
                node_type: node_type_string(t, v),
                lev: croix + nid,
                croix,
                nid,
                label_surplus: 0,
            },
        );
    }
    Ok(out)
}

/// Statistics of a single vertex.
pub fn vertex_stats<T: OrderedTree + ?Sized>(
    t: &T,
    v: usize,
    a: Traversal,
) -> Result<VertexStats, ArityMismatch> {
    Ok(all_vertex_stats(t, a)?.remove(&v).expect("vertex in tree"))
}

/// IRT statistics including the label surplus.
pub fn irt_vertex_stats(
    t: &IrtTree,
    a: Traversal,
) -> Result<BTreeMap<usize, VertexStats>, ArityMismatch> {
    let mut stats = all_vertex_stats(t, a)?;
    for (v, s) in stats.iter_mut() {
        s.label_surplus = t.vertex(*v).surplus();
    }
    Ok(stats)
}

/// Count vertices per node type, optionally excluding the root.
pub fn node_type_counts<T: OrderedTree + ?Sized>(
    t: &T,
    exclude_root: bool,
) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    let root = t.root();
    for v in t.vertex_ids() {
        if exclude_root && Some(v) == root {
            continue;
        }
        *out.entry(node_type_string(t, v)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::binary::enumerate_binary;
    use crate::trees::rt::enumerate_rt;
    use crate::trees::samples::{sample_binary_8, sample_irt_16};

    #[test]
    fn worked_binary_inorder() {
        let t = sample_binary_8();
        let order = traversal_order(&t, Traversal::Inorder).unwrap();
        assert_eq!(order, vec![5, 7, 3, 1, 6, 2, 8, 4]);
        // left-root-middle-right coincides with inorder on binary trees
        let order2 = traversal_order(&t, Traversal::LeftRootMiddleRight).unwrap();
        assert_eq!(order, order2);
    }

    #[test]
    fn worked_irt_preorder_and_lrmr() {
        let t = sample_irt_16();
        let lo = |i: usize| t.vertex(i).lo;
        let pre: Vec<usize> = traversal_order(&t, Traversal::Preorder)
            .unwrap()
            .into_iter()
            .map(lo)
            .collect();
        assert_eq!(pre, vec![0, 2, 4, 8, 9, 14, 5, 7, 10, 6, 11, 12, 16]);
        let lrmr: Vec<usize> = traversal_order(&t, Traversal::LeftRootMiddleRight)
            .unwrap()
            .into_iter()
            .map(lo)
            .collect();
        assert_eq!(lrmr, vec![8, 9, 14, 4, 2, 7, 10, 5, 6, 11, 12, 16, 0]);
    }

    #[test]
    fn single_vertex_order() {
        let t = BinaryTree::singleton();
        for a in [
            Traversal::Preorder,
            Traversal::Postorder,
            Traversal::Inorder,
            Traversal::LeftRootMiddleRight,
        ] {
            assert_eq!(traversal_order(&t, a).unwrap(), vec![1]);
        }
    }

    #[test]
    fn inorder_rejected_on_ternary() {
        let t = RtTree::singleton();
        assert!(traversal_order(&t, Traversal::Inorder).is_err());
    }

    #[test]
    fn worked_binary_stats_table() {
        let t = sample_binary_8();
        let stats = all_vertex_stats(&t, Traversal::Inorder).unwrap();
        // (vertex, node type, lev, nid, croix)
        let expected = [
            (1, "11", 0, 0, 0),
            (2, "11", 1, 1, 0),
            (3, "10", 2, 0, 2),
            (4, "10", 2, 2, 0),
            (5, "01", 2, 0, 2),
            (6, "00", 2, 1, 1),
            (7, "00", 1, 0, 1),
            (8, "00", 0, 0, 0),
        ];
        for (v, ty, lev, nid, croix) in expected {
            let s = &stats[&v];
            assert_eq!(
                (s.node_type.as_str(), s.lev, s.nid, s.croix),
                (ty, lev, nid, croix)
            );
        }
    }

    #[test]
    fn worked_irt_stats_table() {
        let t = sample_irt_16();
        // rows keyed by interval minimum: (lo, type, lev, nid_pre, croix_pre,
        // nid_lrmr, croix_lrmr)
        let expected = [
            (0, "100", 0, 0, 0, 0, 0),
            (2, "101", 0, 0, 0, 0, 0),
            (4, "100", 1, 0, 1, 0, 1),
            (5, "101", 1, 1, 0, 1, 0),
            (6, "010", 2, 2, 0, 2, 0),
            (7, "010", 2, 1, 1, 1, 1),
            (8, "001", 2, 0, 2, 0, 2),
            (9, "010", 2, 0, 2, 0, 2),
            (10, "000", 2, 1, 1, 1, 1),
            (11, "010", 1, 1, 0, 1, 0),
            (12, "001", 1, 1, 0, 1, 0),
            (14, "000", 1, 0, 1, 0, 1),
            (16, "000", 0, 0, 0, 0, 0),
        ];
        let pre = irt_vertex_stats(&t, Traversal::Preorder).unwrap();
        let lrmr = irt_vertex_stats(&t, Traversal::LeftRootMiddleRight).unwrap();
        let index_of_lo = |lo: usize| {
            (0..t.num_vertices())
                .find(|&i| t.vertex(i).lo == lo)
                .unwrap()
        };
        for (lo, ty, lev, nid_p, croix_p, nid_a, croix_a) in expected {
            let i = index_of_lo(lo);
            let sp = &pre[&i];
            assert_eq!(
                (sp.node_type.as_str(), sp.lev, sp.nid, sp.croix),
                (ty, lev, nid_p, croix_p),
                "preorder row {lo}"
            );
            let sa = &lrmr[&i];
            assert_eq!(
                (sa.node_type.as_str(), sa.lev, sa.nid, sa.croix),
                (ty, lev, nid_a, croix_a),
                "lrmr row {lo}"
            );
        }
    }

    #[test]
    fn root_and_last_vertex_have_level_zero() {
        for t in enumerate_rt(5) {
            if t.n() == 0 {
                continue;
            }
            let stats = all_vertex_stats(&t, Traversal::Preorder).unwrap();
            assert_eq!(stats[&1].lev, 0);
            assert_eq!(stats[&t.n()].lev, 0);
        }
    }

    #[test]
    fn worked_binary_node_type_counts() {
        let t = sample_binary_8();
        let counts = node_type_counts(&t, false);
        assert_eq!(counts["00"], 3);
        assert_eq!(counts["11"], 2);
        assert_eq!(counts["10"], 2);
        assert_eq!(counts["01"], 1);
    }

    #[test]
    fn worked_irt_node_type_counts() {
        let t = sample_irt_16();
        let counts = node_type_counts(&t, false);
        assert_eq!(counts["000"], 3);
        assert_eq!(counts["101"], 2);
        assert_eq!(counts["100"], 2);
        assert_eq!(counts["001"], 2);
        assert_eq!(counts["010"], 4);
        let non_root = node_type_counts(&t, true);
        assert_eq!(non_root["100"], 1);
    }

    #[test]
    fn empty_tree_counts_are_empty() {
        let t = BinaryTree::empty();
        assert!(node_type_counts(&t, false).is_empty());
    }

    #[test]
    fn lev_equals_croix_plus_nid_everywhere() {
        for t in enumerate_binary(6) {
            for a in [
                Traversal::Preorder,
                Traversal::Postorder,
                Traversal::Inorder,
            ] {
                for s in all_vertex_stats(&t, a).unwrap().values() {
                    assert_eq!(s.lev, s.croix + s.nid);
                }
            }
        }
        for t in enumerate_rt(5) {
            for a in Traversal::ALL_TERNARY {
                for s in all_vertex_stats(&t, a).unwrap().values() {
                    assert_eq!(s.lev, s.croix + s.nid);
                }
            }
        }
    }
}
