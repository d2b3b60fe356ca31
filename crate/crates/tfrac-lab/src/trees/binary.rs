//! Increasing binary trees on the vertex set \[n\].
//!
//! Vertices are labeled 1..=n; the root (when n >= 1) is 1, and every child
//! label exceeds its parent label. n = 0 is the empty tree.

use std::fmt;

/// Child arrays indexed by vertex label (entry 0 unused).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BinaryTree {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl BinaryTree {
    pub fn empty() -> Self {
        BinaryTree {
            left: vec![None],
            right: vec![None],
        }
    }

    pub fn singleton() -> Self {
        BinaryTree {
            left: vec![None, None],
            right: vec![None, None],
        }
    }

    /// Build from (left, right) child pairs listed for vertices 1..=n.
    pub fn from_children(children: &[(Option<usize>, Option<usize>)]) -> Self {
        let mut left = vec![None];
        let mut right = vec![None];
        for &(l, r) in children {
            left.push(l);
            right.push(r);
        }
        let t = BinaryTree { left, right };
        debug_assert!(t.is_valid(), "invalid increasing binary tree");
        t
    }

    pub fn n(&self) -> usize {
        self.left.len() - 1
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.left[v]
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.right[v]
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n() + 1];
        for v in 1..=self.n() {
            if let Some(c) = self.left[v] {
                p[c] = Some(v);
            }
            if let Some(c) = self.right[v] {
                p[c] = Some(v);
            }
        }
        p
    }

    /// Structural invariants: labels increase, single root = 1, connected.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let p = self.parents();
        if p[1].is_some() {
            return false;
        }
        let mut seen = 1;
        #[allow(clippy::needless_range_loop)]
        for v in 2..=n {
            match p[v] {
                Some(parent) if parent < v => seen += 1,
                _ => return false,
            }
        }
        seen == n
    }

    fn push_vertex(&mut self) -> usize {
        self.left.push(None);
        self.right.push(None);
        self.n()
    }

    fn pop_vertex(&mut self) {
        self.left.pop();
        self.right.pop();
    }
}

/// Stream all increasing binary trees on \[n\] in a deterministic order
/// (insertion-position lexicographic: the new maximum is attached at each
/// free slot, slots ordered by (vertex, left-before-right)).
pub fn for_each_binary(n: usize, f: &mut dyn FnMut(&BinaryTree)) {
    if n == 0 {
        f(&BinaryTree::empty());
        return;
    }
    let mut t = BinaryTree::singleton();
    extend_binary(&mut t, n, f);
}

fn extend_binary(t: &mut BinaryTree, n: usize, f: &mut dyn FnMut(&BinaryTree)) {
    if t.n() == n {
        f(t);
        return;
    }
    for v in 1..=t.n() {
        if t.left[v].is_none() {
            let c = t.push_vertex();
            t.left[v] = Some(c);
            extend_binary(t, n, f);
            t.left[v] = None;
            t.pop_vertex();
        }
        if t.right[v].is_none() {
            let c = t.push_vertex();
            t.right[v] = Some(c);
            extend_binary(t, n, f);
            t.right[v] = None;
            t.pop_vertex();
        }
    }
}

/// Collect all increasing binary trees on \[n\]; intended for small n.
pub fn enumerate_binary(n: usize) -> Vec<BinaryTree> {
    let mut out = Vec::new();
    for_each_binary(n, &mut |t| out.push(t.clone()));
    out
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(t: &BinaryTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({}", v)?;
            if t.left(v).is_some() || t.right(v).is_some() {
                match t.left(v) {
                    Some(c) => {
                        write!(f, " ")?;
                        rec(t, c, f)?;
                    }
                    None => write!(f, " -")?,
                }
                match t.right(v) {
                    Some(c) => {
                        write!(f, " ")?;
                        rec(t, c, f)?;
                    }
                    None => write!(f, " -")?,
                }
            }
            write!(f, ")")
        }
        if self.n() == 0 {
            write!(f, "()")
        } else {
            rec(self, 1, f)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn empty_tree_is_counted() {
        assert_eq!(enumerate_binary(0).len(), 1);
    }

    #[test]
    fn counts_are_factorials() {
        let mut expect = 1usize;
        for n in 1..=7 {
            expect *= n;
            let mut count = 0usize;
            for_each_binary(n, &mut |_| count += 1);
            assert_eq!(count, expect, "n = {n}");
        }
    }

    #[test]
    fn trees_are_distinct_and_valid() {
        let trees = enumerate_binary(5);
        let set: HashSet<_> = trees.iter().cloned().collect();
        assert_eq!(set.len(), trees.len());
        assert!(trees.iter().all(|t| t.is_valid()));
    }

    #[test]
    fn n8_contains_the_worked_example() {
        let sample = crate::trees::samples::sample_binary_8();
        let mut found = false;
        for_each_binary(8, &mut |t| {
            if t == &sample {
                found = true;
            }
        });
        assert!(found);
    }
}
