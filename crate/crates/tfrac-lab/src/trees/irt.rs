//! Increasing interval-labeled restricted ternary trees (IRTs) on the label
//! set \[0,n\].
//!
//! Vertices carry integer intervals that partition \[0,n\]; a vertex with a
//! middle child is single-labeled; max(parent interval) < min(child
//! interval); the root holds 0 and can only have a left child. Vertex
//! identity is the interval position: vertices are stored sorted by interval
//! minimum, so index order is the interval order.

use std::fmt;

use super::rt::{for_each_rt, RtTree};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IrtVertex {
    pub lo: usize,
    pub hi: usize,
    pub left: Option<usize>,
    pub middle: Option<usize>,
    pub right: Option<usize>,
}

impl IrtVertex {
    pub fn surplus(&self) -> usize {
        self.hi - self.lo
    }
}

/// Vertex 0 is the root; vertices are sorted by `lo`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IrtTree {
    vertices: Vec<IrtVertex>,
}

impl IrtTree {
    pub fn from_vertices(vertices: Vec<IrtVertex>) -> Self {
        let t = IrtTree { vertices };
        debug_assert!(t.is_valid(), "invalid interval-labeled tree");
        t
    }

    /// The tree consisting of a single root labeled \[0,n\].
    pub fn trivial(n: usize) -> Self {
        IrtTree {
            vertices: vec![IrtVertex {
                lo: 0,
                hi: n,
                left: None,
                middle: None,
                right: None,
            }],
        }
    }

    /// Total label count minus one: the tree lives on \[0,n\].
    pub fn n(&self) -> usize {
        self.vertices.last().unwrap().hi
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &IrtVertex {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[IrtVertex] {
        &self.vertices
    }

    pub fn node_type(&self, i: usize) -> (bool, bool, bool) {
        let v = &self.vertices[i];
        (v.left.is_some(), v.middle.is_some(), v.right.is_some())
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.vertices.len()];
        for (i, v) in self.vertices.iter().enumerate() {
            for c in [v.left, v.middle, v.right].into_iter().flatten() {
                p[c] = Some(i);
            }
        }
        p
    }

    pub fn is_valid(&self) -> bool {
        let m = self.vertices.len();
        if m == 0 {
            return false;
        }
        // intervals partition [0,n] in storage order
        let mut next = 0;
        for v in &self.vertices {
            if v.lo != next || v.hi < v.lo {
                return false;
            }
            next = v.hi + 1;
        }
        // root holds 0 and has only a left child
        let root = &self.vertices[0];
        if root.lo != 0 || root.middle.is_some() || root.right.is_some() {
            return false;
        }
        // restricted-ternary and interval constraints
        for (i, v) in self.vertices.iter().enumerate() {
            let (l, mid, r) = self.node_type(i);
            if mid && (l || r) {
                return false;
            }
            if mid && v.surplus() != 0 {
                return false;
            }
            for c in [v.left, v.middle, v.right].into_iter().flatten() {
                if self.vertices[c].lo <= v.hi {
                    return false;
                }
            }
        }
        // connectivity: every non-root vertex has exactly one parent
        let p = self.parents();
        if p[0].is_some() {
            return false;
        }
        p.iter().skip(1).all(|x| x.is_some())
    }
}

/// Stream all IRTs on \[0,n\].
///
/// Enumeration composes the RT enumerator with interval inflation: an IRT on
/// \[0,n\] is an RT on \[m\] hung as the left child of a fresh root, with the
/// n - m surplus labels distributed over the root and the non-middle-child
/// RT vertices.
pub fn for_each_irt(n: usize, f: &mut dyn FnMut(&IrtTree)) {
    for m in 0..=n {
        for_each_rt(m, &mut |rt| {
            let surplus = n - m;
            // inflatable positions: root (index 0) and RT vertices without a
            // middle child (index v for vertex v)
            let mut inflatable = vec![0usize];
            for v in 1..=m {
                if rt.middle(v).is_none() {
                    inflatable.push(v);
                }
            }
            let mut parts = vec![0usize; inflatable.len()];
            distribute(rt, &inflatable, &mut parts, 0, surplus, f);
        });
    }
}

fn distribute(
    rt: &RtTree,
    inflatable: &[usize],
    parts: &mut [usize],
    idx: usize,
    remaining: usize,
    f: &mut dyn FnMut(&IrtTree),
) {
    if idx == inflatable.len() - 1 {
        parts[idx] = remaining;
        f(&build_irt(rt, inflatable, parts));
        return;
    }
    for take in 0..=remaining {
        parts[idx] = take;
        distribute(rt, inflatable, parts, idx + 1, remaining - take, f);
    }
}

fn build_irt(rt: &RtTree, inflatable: &[usize], parts: &[usize]) -> IrtTree {
    let m = rt.n();
    let mut surplus = vec![0usize; m + 1];
    for (&pos, &take) in inflatable.iter().zip(parts) {
        surplus[pos] = take;
    }
    // vertex i of the IRT is RT vertex i (root = 0); intervals laid out in
    // label order
    let mut vertices = Vec::with_capacity(m + 1);
    let mut lo = 0usize;
    #[allow(clippy::needless_range_loop)]
    for v in 0..=m {
        let hi = lo + surplus[v];
        let (left, middle, right) = if v == 0 {
            ((m >= 1).then_some(1), None, None)
        } else {
            (rt.left(v), rt.middle(v), rt.right(v))
        };
        vertices.push(IrtVertex {
            lo,
            hi,
            left,
            middle,
            right,
        });
        lo = hi + 1;
    }
    IrtTree { vertices }
}

pub fn enumerate_irt(n: usize) -> Vec<IrtTree> {
    let mut out = Vec::new();
    for_each_irt(n, &mut |t| out.push(t.clone()));
    out
}

impl fmt::Display for IrtTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn label(v: &IrtVertex) -> String {
            if v.lo == v.hi {
                format!("{{{}}}", v.lo)
            } else {
                format!("{{{}..{}}}", v.lo, v.hi)
            }
        }
        fn slot(t: &IrtTree, c: Option<usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match c {
                Some(c) => {
                    write!(f, " ")?;
                    rec(t, c, f)
                }
                None => write!(f, " -"),
            }
        }
        fn rec(t: &IrtTree, i: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let v = t.vertex(i);
            write!(f, "({}", label(v))?;
            if t.node_type(i) != (false, false, false) {
                slot(t, v.left, f)?;
                slot(t, v.middle, f)?;
                slot(t, v.right, f)?;
            }
            write!(f, ")")
        }
        rec(self, 0, f)
    }
}
