//! Binary multilabeled increasing trees on the label set \[n\], and the
//! bijection with restricted ternary trees: middle chains in an RT contract
//! to a single multilabeled vertex, and conversely a label set
//! {u_1 < ... < u_i} expands to the middle chain u_1 - u_2 - ... - u_i.

use std::fmt;

use super::rt::RtTree;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MlVertex {
    /// Sorted, nonempty label set.
    pub labels: Vec<usize>,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// Vertex 0 is the root; vertices are sorted by minimum label, which is a
/// total order since every child label exceeds every parent label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiLabeledBinaryTree {
    vertices: Vec<MlVertex>,
}

impl MultiLabeledBinaryTree {
    pub fn from_vertices(vertices: Vec<MlVertex>) -> Self {
        let t = MultiLabeledBinaryTree { vertices };
        debug_assert!(t.is_valid(), "invalid multilabeled tree");
        t
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &MlVertex {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[MlVertex] {
        &self.vertices
    }

    /// Total number of labels.
    pub fn n(&self) -> usize {
        self.vertices.iter().map(|v| v.labels.len()).sum()
    }

    pub fn is_valid(&self) -> bool {
        let m = self.vertices.len();
        if m == 0 {
            return false;
        }
        // labels form a partition of [n]
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for v in &self.vertices {
            if v.labels.is_empty() || v.labels.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &l in &v.labels {
                if l == 0 || l > n || seen[l] {
                    return false;
                }
                seen[l] = true;
            }
        }
        // storage sorted by min label, root first
        if self
            .vertices
            .windows(2)
            .any(|w| w[0].labels[0] >= w[1].labels[0])
        {
            return false;
        }
        if self.vertices[0].labels[0] != 1 {
            return false;
        }
        // increasing: every child label exceeds every parent label
        let mut parent = vec![None; m];
        for (i, v) in self.vertices.iter().enumerate() {
            for c in [v.left, v.right].into_iter().flatten() {
                if parent[c].is_some() {
                    return false;
                }
                parent[c] = Some(i);
                if self.vertices[c].labels[0] <= *v.labels.last().unwrap() {
                    return false;
                }
            }
        }
        parent[0].is_none() && parent.iter().skip(1).all(|p| p.is_some())
    }
}

impl fmt::Display for MultiLabeledBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(t: &MultiLabeledBinaryTree, i: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let v = t.vertex(i);
            let labels: Vec<String> = v.labels.iter().map(|l| l.to_string()).collect();
            write!(f, "({{{}}}", labels.join(","))?;
            if v.left.is_some() || v.right.is_some() {
                match v.left {
                    Some(c) => {
                        write!(f, " ")?;
                        rec(t, c, f)?;
                    }
                    None => write!(f, " -")?,
                }
                match v.right {
                    Some(c) => {
                        write!(f, " ")?;
                        rec(t, c, f)?;
                    }
                    None => write!(f, " -")?,
                }
            }
            write!(f, ")")
        }
        rec(self, 0, f)
    }
}

/// Contract the middle chains of an RT to multilabeled vertices.
///
/// Requires a nonempty tree: the multilabeled family has no empty tree.
pub fn rt_to_multilabeled(t: &RtTree) -> MultiLabeledBinaryTree {
    assert!(t.n() >= 1, "the empty RT has no multilabeled counterpart");
    // chain heads are the root and every vertex that is not a middle child
    let n = t.n();
    let mut is_middle_child = vec![false; n + 1];
    for v in 1..=n {
        if let Some(c) = t.middle(v) {
            is_middle_child[c] = true;
        }
    }
    let heads: Vec<usize> = (1..=n).filter(|&v| !is_middle_child[v]).collect();
    let index_of_head = |h: usize| heads.binary_search(&h).unwrap();
    let mut vertices = Vec::with_capacity(heads.len());
    for &h in &heads {
        let mut labels = vec![h];
        let mut tail = h;
        while let Some(c) = t.middle(tail) {
            labels.push(c);
            tail = c;
        }
        // left/right children of the chain's final vertex become children of
        // the contracted vertex
        let left = t.left(tail).map(index_of_head);
        let right = t.right(tail).map(index_of_head);
        vertices.push(MlVertex {
            labels,
            left,
            right,
        });
    }
    MultiLabeledBinaryTree { vertices }
}

/// Expand each multilabeled vertex back into a middle chain.
pub fn multilabeled_to_rt(t: &MultiLabeledBinaryTree) -> RtTree {
    let n = t.n();
    let mut children: Vec<(Option<usize>, Option<usize>, Option<usize>)> =
        vec![(None, None, None); n];
    for v in t.vertices() {
        for pair in v.labels.windows(2) {
            children[pair[0] - 1].1 = Some(pair[1]);
        }
        let tail = *v.labels.last().unwrap();
        children[tail - 1].0 = v.left.map(|c| t.vertex(c).labels[0]);
        children[tail - 1].2 = v.right.map(|c| t.vertex(c).labels[0]);
    }
    RtTree::from_children(&children)
}
