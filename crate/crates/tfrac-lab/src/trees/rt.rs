//! Increasing restricted ternary trees (RTs) on the vertex set \[n\]:
//! increasing ternary trees in which a middle child has no siblings, so the
//! possible node types are 000, 100, 010, 001 and 101.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RtTree {
    left: Vec<Option<usize>>,
    middle: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl RtTree {
    pub fn empty() -> Self {
        RtTree {
            left: vec![None],
            middle: vec![None],
            right: vec![None],
        }
    }

    pub fn singleton() -> Self {
        let mut t = RtTree::empty();
        t.push_vertex();
        t
    }

    /// Build from (left, middle, right) triples listed for vertices 1..=n.
    pub fn from_children(children: &[(Option<usize>, Option<usize>, Option<usize>)]) -> Self {
        let mut t = RtTree::empty();
        for &(l, m, r) in children {
            t.left.push(l);
            t.middle.push(m);
            t.right.push(r);
        }
        debug_assert!(t.is_valid(), "invalid restricted ternary tree");
        t
    }

    pub fn n(&self) -> usize {
        self.left.len() - 1
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.left[v]
    }

    pub fn middle(&self, v: usize) -> Option<usize> {
        self.middle[v]
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.right[v]
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n() + 1];
        for v in 1..=self.n() {
            for c in [self.left[v], self.middle[v], self.right[v]]
                .into_iter()
                .flatten()
            {
                p[c] = Some(v);
            }
        }
        p
    }

    /// Node type as an (l, m, r) presence triple.
    pub fn node_type(&self, v: usize) -> (bool, bool, bool) {
        (
            self.left[v].is_some(),
            self.middle[v].is_some(),
            self.right[v].is_some(),
        )
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        for v in 1..=n {
            let (l, m, r) = self.node_type(v);
            if m && (l || r) {
                return false;
            }
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
        self.middle.push(None);
        self.right.push(None);
        self.n()
    }

    fn pop_vertex(&mut self) {
        self.left.pop();
        self.middle.pop();
        self.right.pop();
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Left,
    Middle,
    Right,
}

/// Stream all RTs on \[n\], attaching the new maximum at every legal slot
/// (middle only on childless vertices; left/right only where no middle).
pub fn for_each_rt(n: usize, f: &mut dyn FnMut(&RtTree)) {
    if n == 0 {
        f(&RtTree::empty());
        return;
    }
    let mut t = RtTree::singleton();
    extend_rt(&mut t, n, f);
}

fn extend_rt(t: &mut RtTree, n: usize, f: &mut dyn FnMut(&RtTree)) {
    if t.n() == n {
        f(t);
        return;
    }
    for v in 1..=t.n() {
        let (l, m, r) = t.node_type(v);
        let mut try_slot = |t: &mut RtTree, slot: Slot| {
            let c = t.push_vertex();
            match slot {
                Slot::Left => t.left[v] = Some(c),
                Slot::Middle => t.middle[v] = Some(c),
                Slot::Right => t.right[v] = Some(c),
            }
            extend_rt(t, n, f);
            match slot {
                Slot::Left => t.left[v] = None,
                Slot::Middle => t.middle[v] = None,
                Slot::Right => t.right[v] = None,
            }
            t.pop_vertex();
        };
        if m {
            continue;
        }
        if !l && !r {
            try_slot(t, Slot::Left);
            try_slot(t, Slot::Middle);
            try_slot(t, Slot::Right);
        } else if !l {
            try_slot(t, Slot::Left);
        } else if !r {
            try_slot(t, Slot::Right);
        }
    }
}

pub fn enumerate_rt(n: usize) -> Vec<RtTree> {
    let mut out = Vec::new();
    for_each_rt(n, &mut |t| out.push(t.clone()));
    out
}

impl fmt::Display for RtTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn slot(t: &RtTree, c: Option<usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match c {
                Some(c) => {
                    write!(f, " ")?;
                    rec(t, c, f)
                }
                None => write!(f, " -"),
            }
        }
        fn rec(t: &RtTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({}", v)?;
            if t.node_type(v) != (false, false, false) {
                slot(t, t.left(v), f)?;
                slot(t, t.middle(v), f)?;
                slot(t, t.right(v), f)?;
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
