//! Bijections between tree families and labeled lattice paths, with the
//! slotted-tree inverse constructions, plus the inorder bijection between
//! increasing binary trees and permutations.
//!
//! Restricted ternary trees on \[n+1\] map to labeled Motzkin paths of length
//! n: vertex i (i <= n) contributes a rise for node type 101, a fall for
//! 000, and a level step of type 1/2/3 for 100/010/001, labeled by
//! nid(i, T). Interval-labeled trees map to labeled Schroder paths of length
//! 2n by concatenating per-vertex segments. Inverses replay the history of
//! slotted trees: placeholder leaves mark where future vertices attach, and
//! the label selects which placeholder, counted in traversal order.

use crate::paths::{Label, LabeledPath, Path, PathKind, Step, StepWeightScheme};
use crate::perm::Permutation;
use crate::symbolic::Poly;
use crate::treepoly::{q_irt_tree_weight, MasterWeights};
use crate::trees::{
    all_vertex_stats, irt_vertex_stats, BinaryTree, IrtTree, IrtVertex, RtTree, Traversal,
};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectError {
    #[error("label {found} at step {step} exceeds the admissible bound {max}")]
    LabelOutOfRange {
        step: usize,
        found: usize,
        max: usize,
    },
    #[error("malformed labeled path: {0}")]
    MalformedPath(String),
}

/// A partially built tree with three child slots per vertex; `None` payloads
/// are placeholder leaves.
struct SlottedTree<P> {
    payload: Vec<Option<P>>,
    children: Vec<[Option<usize>; 3]>,
    root: usize,
}

impl<P> SlottedTree<P> {
    fn new_with_slot_root() -> Self {
        SlottedTree {
            payload: vec![None],
            children: vec![[None; 3]],
            root: 0,
        }
    }

    fn add_slot(&mut self, parent: usize, slot: usize) -> usize {
        self.payload.push(None);
        self.children.push([None; 3]);
        let id = self.payload.len() - 1;
        debug_assert!(self.children[parent][slot].is_none());
        self.children[parent][slot] = Some(id);
        id
    }

    /// Node ids in traversal order (structural walk, placeholders included).
    fn order(&self, a: Traversal) -> Vec<usize> {
        fn walk<P>(t: &SlottedTree<P>, v: usize, a: Traversal, out: &mut Vec<usize>) {
            let [l, m, r] = t.children[v];
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
        let mut out = Vec::with_capacity(self.payload.len());
        walk(self, self.root, a, &mut out);
        out
    }

    /// Placeholder ids in traversal order.
    fn slots_in_order(&self, a: Traversal) -> Vec<usize> {
        self.order(a)
            .into_iter()
            .filter(|&v| self.payload[v].is_none())
            .collect()
    }
}

/// Forward bijection: RT on \[n+1\] to a labeled Motzkin path of length n.
pub fn rt_to_labeled_motzkin(t: &RtTree, a: Traversal) -> LabeledPath {
    let n1 = t.n();
    assert!(n1 >= 1, "the bijection needs at least one vertex");
    let stats = all_vertex_stats(t, a).expect("ternary traversal");
    let mut steps = Vec::with_capacity(n1 - 1);
    let mut labels = Vec::with_capacity(n1 - 1);
    for i in 1..n1 {
        let s = &stats[&i];
        let (step, label) = match s.node_type.as_str() {
            "101" => (Step::Rise, Label::Int(s.nid)),
            "000" => (Step::Fall, Label::Int(s.nid)),
            "100" => (Step::Level, Label::Pair(1, s.nid)),
            "010" => (Step::Level, Label::Pair(2, s.nid)),
            "001" => (Step::Level, Label::Pair(3, s.nid)),
            _ => unreachable!(),
        };
        steps.push(step);
        labels.push(label);
    }
    LabeledPath {
        path: Path::new(PathKind::Motzkin, steps),
        labels,
    }
}

/// Inverse bijection: replay the slotted-tree history of a labeled Motzkin
/// path, producing an RT on \[n+1\].
pub fn labeled_motzkin_to_rt(lp: &LabeledPath, a: Traversal) -> Result<RtTree, BijectError> {
    let n = lp.path.steps.len();
    if lp.labels.len() != n {
        return Err(BijectError::MalformedPath(
            "label count differs from step count".into(),
        ));
    }
    let heights = lp.path.start_heights();
    let mut tree: SlottedTree<usize> = SlottedTree::new_with_slot_root();
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        let h = heights[i];
        let (xi, slots_to_add): (usize, &[usize]) = match (lp.path.steps[i], lp.labels[i]) {
            (Step::Rise, Label::Int(xi)) => (xi, &[0, 2]),
            (Step::Fall, Label::Int(xi)) => (xi, &[]),
            (Step::Level, Label::Pair(1, xi)) => (xi, &[0]),
            (Step::Level, Label::Pair(2, xi)) => (xi, &[1]),
            (Step::Level, Label::Pair(3, xi)) => (xi, &[2]),
            _ => {
                return Err(BijectError::MalformedPath(format!(
                    "step {} has an incompatible label",
                    i + 1
                )))
            }
        };
        if xi > h {
            return Err(BijectError::LabelOutOfRange {
                step: i + 1,
                found: xi,
                max: h,
            });
        }
        let slots = tree.slots_in_order(a);
        debug_assert_eq!(slots.len(), h + 1);
        let v = slots[xi];
        tree.payload[v] = Some(i + 1);
        for &slot in slots_to_add {
            tree.add_slot(v, slot);
        }
    }
    let slots = tree.slots_in_order(a);
    debug_assert_eq!(slots.len(), 1);
    tree.payload[slots[0]] = Some(n + 1);

    // read the slotted structure into child arrays indexed by label
    let mut children = vec![(None, None, None); n + 1];
    for id in 0..tree.payload.len() {
        let label = tree.payload[id].expect("all placeholders filled");
        let child_label = |c: Option<usize>| c.map(|c| tree.payload[c].unwrap());
        children[label - 1] = (
            child_label(tree.children[id][0]),
            child_label(tree.children[id][1]),
            child_label(tree.children[id][2]),
        );
    }
    Ok(RtTree::from_children(&children))
}

/// Forward bijection: IRT on \[0,n\] to a labeled Schroder path of length 2n.
pub fn irt_to_labeled_schroder(t: &IrtTree, a: Traversal) -> LabeledPath {
    let n = t.n();
    let m = t.num_vertices() - 1;
    let stats = irt_vertex_stats(t, a).expect("ternary traversal");
    let mut steps = Vec::new();
    let mut labels = Vec::new();
    let push = |step: Step, label: usize, steps: &mut Vec<Step>, labels: &mut Vec<Label>| {
        steps.push(step);
        labels.push(Label::Int(label));
    };
    for i in 0..=m {
        let vx = t.vertex(i);
        let j = vx.surplus();
        let xi = stats[&i].nid;
        if vx.lo == 0 && vx.hi == n {
            for _ in 0..n {
                push(Step::Level, 0, &mut steps, &mut labels);
            }
        } else if vx.lo == 0 {
            for _ in 0..j {
                push(Step::Level, 0, &mut steps, &mut labels);
            }
            push(Step::Rise, 0, &mut steps, &mut labels);
        } else if vx.hi == n {
            push(Step::Fall, xi, &mut steps, &mut labels);
            for _ in 0..j {
                push(Step::Level, 0, &mut steps, &mut labels);
            }
        } else {
            let (first, last) = match t.node_type(i) {
                (true, false, true) => (Step::Rise, Some(Step::Rise)),
                (false, false, false) => (Step::Fall, Some(Step::Fall)),
                (true, false, false) => (Step::Rise, Some(Step::Fall)),
                (false, false, true) => (Step::Fall, Some(Step::Rise)),
                (false, true, false) => (Step::Level, None),
                _ => unreachable!(),
            };
            push(first, xi, &mut steps, &mut labels);
            if let Some(last) = last {
                for _ in 0..j {
                    push(Step::Level, 0, &mut steps, &mut labels);
                }
                push(last, 0, &mut steps, &mut labels);
            } else {
                debug_assert_eq!(j, 0);
            }
        }
    }
    let lp = LabeledPath {
        path: Path::new(PathKind::Schroder, steps),
        labels,
    };
    debug_assert_eq!(lp.path.length(), 2 * n);
    lp
}

/// Inverse bijection: split a labeled Schroder path into per-vertex
/// segments and replay the slotted-tree history, producing an IRT on \[0,n\].
pub fn labeled_schroder_to_irt(lp: &LabeledPath, a: Traversal) -> Result<IrtTree, BijectError> {
    let steps = &lp.path.steps;
    if lp.labels.len() != steps.len() {
        return Err(BijectError::MalformedPath(
            "label count differs from step count".into(),
        ));
    }
    let n = lp.path.length() / 2;
    let heights = lp.path.start_heights();
    // trivial path: long level steps only
    if steps.iter().all(|&s| s == Step::Level) {
        return Ok(IrtTree::trivial(n));
    }

    // segment boundaries: the prefix through the first rise from height 0,
    // then cuts after every step landing on an odd height, then the suffix
    // from the last fall to height 0
    let first_rise = steps
        .iter()
        .zip(&heights)
        .position(|(&s, &h)| s == Step::Rise && h == 0)
        .ok_or_else(|| BijectError::MalformedPath("no rise from height 0".into()))?;
    let last_fall = steps
        .iter()
        .zip(&heights)
        .rposition(|(&s, &h)| s == Step::Fall && h == 1)
        .ok_or_else(|| BijectError::MalformedPath("no fall to height 0".into()))?;
    if steps[..first_rise].iter().any(|&s| s != Step::Level)
        || steps[last_fall + 1..].iter().any(|&s| s != Step::Level)
    {
        return Err(BijectError::MalformedPath(
            "prefix or suffix contains non-level steps".into(),
        ));
    }

    struct Segment {
        start: usize,
        end: usize, // inclusive
    }
    let mut segments = vec![Segment {
        start: 0,
        end: first_rise,
    }];
    let mut cursor = first_rise + 1;
    while cursor < last_fall {
        let start = cursor;
        // advance until a step lands on an odd height
        let mut end = start;
        loop {
            let landing = match steps[end] {
                Step::Rise => heights[end] + 1,
                Step::Fall => heights[end] - 1,
                Step::Level => heights[end],
            };
            if !landing.is_multiple_of(2) {
                break;
            }
            end += 1;
            if end >= last_fall {
                return Err(BijectError::MalformedPath(
                    "segmentation ran past the final fall".into(),
                ));
            }
        }
        segments.push(Segment { start, end });
        cursor = end + 1;
    }
    // the final segment is the last fall plus the trailing level steps
    segments.push(Segment {
        start: last_fall,
        end: steps.len() - 1,
    });

    let m = segments.len() - 1;
    // label sets: |l_i| = 1 + number of long level steps at even height
    let mut sizes = Vec::with_capacity(m + 1);
    for seg in &segments {
        let leven = (seg.start..=seg.end)
            .filter(|&k| steps[k] == Step::Level && heights[k].is_multiple_of(2))
            .count();
        sizes.push(leven + 1);
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), n + 1);
    let mut los = Vec::with_capacity(m + 1);
    let mut next = 0;
    for &size in &sizes {
        los.push(next);
        next += size;
    }

    // node types from segment shapes; segment labels from first steps
    let node_children = |i: usize| -> Result<&'static [usize], BijectError> {
        if i == m {
            return Ok(&[]);
        }
        let seg = &segments[i];
        let first = steps[seg.start];
        let last = steps[seg.end];
        Ok(match (first, last) {
            (Step::Level, Step::Level) if seg.start == seg.end => &[1],
            (Step::Rise, Step::Rise) => &[0, 2],
            (Step::Fall, Step::Fall) => &[],
            (Step::Rise, Step::Fall) => &[0],
            (Step::Fall, Step::Rise) => &[2],
            _ => {
                return Err(BijectError::MalformedPath(format!(
                    "segment {i} has an invalid shape"
                )))
            }
        })
    };

    let mut tree: SlottedTree<usize> = SlottedTree::new_with_slot_root();
    tree.payload[0] = Some(0);
    tree.add_slot(0, 0);
    #[allow(clippy::needless_range_loop)]
    for i in 1..=m {
        let seg = &segments[i];
        let h = heights[seg.start];
        let xi = match lp.labels[seg.start] {
            Label::Int(xi) => xi,
            Label::Pair(..) => {
                return Err(BijectError::MalformedPath(format!(
                    "segment {i} carries a pair label"
                )))
            }
        };
        if xi > h / 2 {
            return Err(BijectError::LabelOutOfRange {
                step: seg.start + 1,
                found: xi,
                max: h / 2,
            });
        }
        let slots = tree.slots_in_order(a);
        let v = slots[xi];
        tree.payload[v] = Some(i);
        for &slot in node_children(i)? {
            tree.add_slot(v, slot);
        }
    }

    // read out vertices in creation (= interval) order
    let mut id_of_vertex = vec![usize::MAX; m + 1];
    for id in 0..tree.payload.len() {
        if let Some(i) = tree.payload[id] {
            id_of_vertex[i] = id;
        }
    }
    let vertex_of_id = |c: Option<usize>| c.and_then(|c| tree.payload[c]);
    let mut vertices = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let id = id_of_vertex[i];
        vertices.push(IrtVertex {
            lo: los[i],
            hi: los[i] + sizes[i] - 1,
            left: vertex_of_id(tree.children[id][0]),
            middle: vertex_of_id(tree.children[id][1]),
            right: vertex_of_id(tree.children[id][2]),
        });
    }
    Ok(IrtTree::from_vertices(vertices))
}

/// Inorder word of an increasing binary tree, as a permutation of \[n\].
pub fn bt_to_permutation(t: &BinaryTree) -> Permutation {
    let order = crate::trees::traversal_order(t, Traversal::Inorder).expect("binary");
    Permutation::from_word(order)
}

/// Inverse: the increasing binary tree whose inorder word is sigma. The
/// minimum of each factor is the subtree root; letters before it form the
/// left subtree and letters after it the right subtree.
pub fn permutation_to_bt(sigma: &Permutation) -> BinaryTree {
    let n = sigma.n();
    let mut children: Vec<(Option<usize>, Option<usize>)> = vec![(None, None); n];
    fn build(word: &[usize], children: &mut [(Option<usize>, Option<usize>)]) -> Option<usize> {
        if word.is_empty() {
            return None;
        }
        let (pos, &root) = word.iter().enumerate().min_by_key(|&(_, &x)| x).unwrap();
        let left = build(&word[..pos], children);
        let right = build(&word[pos + 1..], children);
        children[root - 1] = (left, right);
        Some(root)
    }
    build(sigma.word(), &mut children);
    BinaryTree::from_children(&children)
}

/// Step weights of the Motzkin bijection: rises a_{h-xi,xi}, falls
/// b_{h-xi,xi}, level steps c / f / d for types 1 / 2 / 3.
pub fn motzkin_step_weights(w: &MasterWeights) -> StepWeightScheme {
    let (a, b) = (w.a.clone(), w.b.clone());
    let (c, d, f) = (w.c.clone(), w.d.clone(), w.f.clone());
    StepWeightScheme {
        rise: Arc::new(move |h, l| match l {
            Label::Int(xi) => a(h - xi, xi),
            _ => Poly::zero(),
        }),
        fall: Arc::new(move |h, l| match l {
            Label::Int(xi) => b(h - xi, xi),
            _ => Poly::zero(),
        }),
        level: Arc::new(move |h, l| match l {
            Label::Pair(1, xi) => c(h - xi, xi),
            Label::Pair(2, xi) => f(h - xi, xi),
            Label::Pair(3, xi) => d(h - xi, xi),
            _ => Poly::zero(),
        }),
    }
}

/// Step weights of the Schroder bijection: at odd heights 2k-1 the hatted
/// letters ah / bh / f with subscripts (k-1-xi, xi); at even heights 2k the
/// lev-indexed letters mu_k, nu_{k-1}, e_k.
pub fn schroder_step_weights(w: &MasterWeights) -> StepWeightScheme {
    let (ah, bh, f) = (w.ah.clone(), w.bh.clone(), w.f.clone());
    let (mu, nu, e) = (w.mu.clone(), w.nu.clone(), w.e.clone());
    let int_label = |l: Label| match l {
        Label::Int(xi) => Some(xi),
        Label::Pair(..) => None,
    };
    StepWeightScheme {
        rise: Arc::new(move |h, l| {
            let xi = int_label(l).unwrap();
            if h.is_multiple_of(2) {
                mu(h / 2)
            } else {
                let k = h.div_ceil(2);
                ah(k - 1 - xi, xi)
            }
        }),
        fall: Arc::new(move |h, l| {
            let xi = int_label(l).unwrap();
            if h.is_multiple_of(2) {
                nu(h / 2 - 1)
            } else {
                let k = h.div_ceil(2);
                bh(k - 1 - xi, xi)
            }
        }),
        level: Arc::new(move |h, l| {
            let xi = int_label(l).unwrap();
            if h.is_multiple_of(2) {
                e(h / 2)
            } else {
                let k = h.div_ceil(2);
                f(k - 1 - xi, xi)
            }
        }),
    }
}

/// Tree-side weight of an IRT under the master weight dictionary; equals the
/// path-side product of `schroder_step_weights` over the image path.
pub fn schroder_weight_of_tree(t: &IrtTree, w: &MasterWeights, a: Traversal) -> Poly {
    q_irt_tree_weight(t, w, a)
}
