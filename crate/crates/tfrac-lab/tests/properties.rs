//! Property-based checks of the structural invariants: ring laws, canonical
//! form, homomorphy of specialization, traversal consistency, truncation
//! stability, and the couple of equidistribution facts the tree statistics
//! promise.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use tfrac_lab::cfrac::{
    expand_j, expand_t, series_to_jfraction, CoeffSeq, JFractionSpec, TFractionSpec,
};
use tfrac_lab::paths::{flajolet_sum, LabelSets, PathKind, StepWeightScheme};
use tfrac_lab::symbolic::{IndexedSymbol, Poly, Series};
use tfrac_lab::trees::{
    all_vertex_stats, enumerate_irt, enumerate_rt, multilabeled_to_rt, rt_to_multilabeled,
    MlVertex, MultiLabeledBinaryTree, OrderedTree, RtTree, Traversal,
};

fn symbol_pool() -> Vec<IndexedSymbol> {
    vec![
        IndexedSymbol::plain("x1"),
        IndexedSymbol::plain("y1"),
        IndexedSymbol::plain("w"),
        IndexedSymbol::one("mu", 0),
        IndexedSymbol::two("a", 1, 0),
    ]
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    // up to 4 terms, each a product of up to 3 symbol powers
    prop::collection::vec(
        (prop::collection::vec((0usize..5, 1u32..3), 0..3), -5i64..=5),
        0..4,
    )
    .prop_map(|terms| {
        let pool = symbol_pool();
        let mut p = Poly::zero();
        for (factors, coeff) in terms {
            let mut term = Poly::constant(coeff);
            for (idx, exp) in factors {
                term = &term * &Poly::var(pool[idx]).pow(exp);
            }
            p = &p + &term;
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonical_text_roundtrip(a in arb_poly()) {
        let text = a.to_canonical_string();
        prop_assert_eq!(Poly::parse(&text).unwrap(), a);
    }

    #[test]
    fn specialize_is_a_homomorphism(a in arb_poly(), b in arb_poly(), v in arb_poly()) {
        let mut assignment = BTreeMap::new();
        assignment.insert(IndexedSymbol::plain("x1"), v.clone());
        assignment.insert(IndexedSymbol::one("mu", 0), Poly::constant(2));
        prop_assert_eq!(
            (&a + &b).specialize(&assignment),
            &a.specialize(&assignment) + &b.specialize(&assignment)
        );
        prop_assert_eq!(
            (&a * &b).specialize(&assignment),
            &a.specialize(&assignment) * &b.specialize(&assignment)
        );
    }

    #[test]
    fn series_mul_matches_poly_mul(a in arb_poly(), b in arb_poly()) {
        // multiply as order-4 series in t after substituting t for x1
        let order = 4;
        let to_series = |p: &Poly| {
            let mut coeffs = vec![Poly::zero(); order + 1];
            for (m, c) in p.terms() {
                let k = m.exponent_of(IndexedSymbol::plain("x1")) as usize;
                if k <= order {
                    let mut rest = Poly::zero();
                    let residual: Vec<_> = m
                        .iter()
                        .filter(|&(s, _)| s != IndexedSymbol::plain("x1"))
                        .collect();
                    let mut mono = Poly::constant(c.clone());
                    for (s, e) in residual {
                        mono = &mono * &Poly::var(s).pow(e);
                    }
                    rest = &rest + &mono;
                    coeffs[k] = &coeffs[k] + &rest;
                }
            }
            Series::from_coeffs(coeffs)
        };
        let sa = to_series(&a);
        let sb = to_series(&b);
        let product = to_series(&(&a * &b));
        prop_assert_eq!(&sa * &sb, product);
    }

    #[test]
    fn expand_t_depth_stability(
        alphas in prop::collection::vec(-3i64..=3, 10),
        deltas in prop::collection::vec(-3i64..=3, 10),
    ) {
        let n = 6;
        let spec = TFractionSpec {
            alpha: CoeffSeq::table(alphas.iter().map(|&v| Poly::constant(v)).collect()),
            delta: CoeffSeq::table(deltas.iter().map(|&v| Poly::constant(v)).collect()),
        };
        let shallow = expand_t(&spec, n);
        // re-expand with five extra levels
        let one = Series::one(n);
        let mut f = one.clone();
        for k in (1..=(n + 5)).rev() {
            let body = &(&one - &Series::monomial(spec.delta.at(k), 1, n))
                - &(&Series::monomial(spec.alpha.at(k), 1, n) * &f);
            f = body.inverse().unwrap();
        }
        prop_assert_eq!(shallow, f);
    }

    #[test]
    fn jfraction_recovery_roundtrip(
        gammas in prop::collection::vec(-4i64..=4, 4),
        betas in prop::collection::vec(1i64..=4, 4),
    ) {
        let spec = JFractionSpec::from_tables(
            gammas.iter().map(|&v| Poly::constant(v)).collect(),
            betas.iter().map(|&v| Poly::constant(v)).collect(),
        );
        let s = expand_j(&spec, 9);
        let table = series_to_jfraction(&s, 4).unwrap();
        for (n, g) in table.gammas.iter().enumerate().take(4) {
            prop_assert_eq!(g.to_string(), spec.gamma_at(n).to_canonical_string());
        }
        for (i, b) in table.betas.iter().enumerate().take(3) {
            prop_assert_eq!(b.to_string(), spec.beta_at(i + 1).to_canonical_string());
        }
    }
}

/// Restrict an RT to its first j vertices.
fn restrict_rt(t: &RtTree, j: usize) -> RtTree {
    let keep = |c: Option<usize>| c.filter(|&v| v <= j);
    let children: Vec<_> = (1..=j)
        .map(|v| (keep(t.left(v)), keep(t.middle(v)), keep(t.right(v))))
        .collect();
    RtTree::from_children(&children)
}

#[test]
fn traversal_consistency_under_restriction() {
    // the order restricted to a label prefix equals the order of the
    // restricted tree
    for n in 1..=6 {
        for t in enumerate_rt(n) {
            for alg in Traversal::ALL_TERNARY {
                let full = all_order(&t, alg);
                for j in 1..=n {
                    let restricted_tree = restrict_rt(&t, j);
                    let restricted_order = all_order(&restricted_tree, alg);
                    let filtered: Vec<usize> = full.iter().copied().filter(|&v| v <= j).collect();
                    assert_eq!(filtered, restricted_order, "n={n} j={j} {alg:?}");
                }
            }
        }
    }
}

fn all_order<T: OrderedTree>(t: &T, alg: Traversal) -> Vec<usize> {
    tfrac_lab::trees::traversal_order(t, alg).unwrap()
}

#[test]
fn croix_nid_equidistribution_across_traversals() {
    // the multiset of (node type, croix, nid) triples over the whole family
    // is the same for every consistent traversal
    for n in 0..=6 {
        let mut multisets: Vec<BTreeMap<(String, usize, usize), usize>> = Vec::new();
        for alg in Traversal::ALL_TERNARY {
            let mut multiset = BTreeMap::new();
            for t in enumerate_rt(n) {
                for s in all_vertex_stats(&t, alg).unwrap().values() {
                    *multiset
                        .entry((s.node_type.clone(), s.croix, s.nid))
                        .or_insert(0) += 1;
                }
            }
            multisets.push(multiset);
        }
        assert!(multisets.windows(2).all(|w| w[0] == w[1]), "rt n = {n}");
    }
    for n in 0..=6 {
        let mut multisets: Vec<BTreeMap<(String, usize, usize), usize>> = Vec::new();
        for alg in Traversal::ALL_TERNARY {
            let mut multiset = BTreeMap::new();
            for t in enumerate_irt(n) {
                for s in all_vertex_stats(&t, alg).unwrap().values() {
                    *multiset
                        .entry((s.node_type.clone(), s.croix, s.nid))
                        .or_insert(0) += 1;
                }
            }
            multisets.push(multiset);
        }
        assert!(multisets.windows(2).all(|w| w[0] == w[1]), "irt n = {n}");
    }
}

#[test]
fn multilabeled_bijection_is_surjective() {
    // independent enumeration: binary shapes, set partitions into that many
    // blocks, and all increasing block assignments
    for n in 1..=6 {
        let images: BTreeSet<MultiLabeledBinaryTree> =
            enumerate_rt(n).iter().map(rt_to_multilabeled).collect();
        let direct = enumerate_multilabeled(n);
        assert_eq!(images.len(), direct.len(), "n = {n}");
        for t in &direct {
            assert!(images.contains(t), "missing in image, n = {n}");
            assert_eq!(&rt_to_multilabeled(&multilabeled_to_rt(t)), t);
        }
    }
}

/// Brute-force enumeration of binary multilabeled increasing trees on [n]:
/// binary shapes times set partitions times order-respecting assignments.
fn enumerate_multilabeled(n: usize) -> BTreeSet<MultiLabeledBinaryTree> {
    let mut out = BTreeSet::new();
    for k in 1..=n {
        for shape in binary_shapes(k) {
            for partition in set_partitions(n, k) {
                // try every assignment of blocks to vertices
                let mut perm: Vec<usize> = (0..k).collect();
                loop {
                    if let Some(t) = assemble(&shape, &partition, &perm) {
                        out.insert(t);
                    }
                    if !next_perm(&mut perm) {
                        break;
                    }
                }
            }
        }
    }
    out
}

/// All binary tree shapes on k unlabeled vertices, as (left, right) index
/// pairs with vertex 0 the root.
fn binary_shapes(k: usize) -> Vec<Vec<(Option<usize>, Option<usize>)>> {
    fn build(size: usize, offset: usize) -> Vec<Vec<(Option<usize>, Option<usize>)>> {
        if size == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for left_size in 0..size {
            let right_size = size - 1 - left_size;
            for left in build(left_size, offset + 1) {
                for right in build(right_size, offset + 1 + left_size) {
                    let mut nodes = vec![(
                        (left_size > 0).then_some(offset + 1),
                        (right_size > 0).then_some(offset + 1 + left_size),
                    )];
                    nodes.extend(left.iter().cloned());
                    nodes.extend(right.iter().cloned());
                    out.push(nodes);
                }
            }
        }
        out
    }
    build(k, 0)
}

/// All partitions of [n] into exactly k nonempty blocks (blocks sorted).
fn set_partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        i: usize,
        n: usize,
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i > n {
            if blocks.len() == k {
                out.push(blocks.clone());
            }
            return;
        }
        let remaining = n - i + 1;
        if blocks.len() > k || blocks.len() + remaining < k {
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, k, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, k, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn next_perm(perm: &mut [usize]) -> bool {
    let len = perm.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Assign block `perm[v]` to shape vertex v; `None` if the increasing
/// condition fails.
fn assemble(
    shape: &[(Option<usize>, Option<usize>)],
    partition: &[Vec<usize>],
    perm: &[usize],
) -> Option<MultiLabeledBinaryTree> {
    let k = shape.len();
    let block = |v: usize| &partition[perm[v]];
    #[allow(clippy::needless_range_loop)]
    for v in 0..k {
        let max_parent = *block(v).last().unwrap();
        for child in [shape[v].0, shape[v].1].into_iter().flatten() {
            if block(child)[0] <= max_parent {
                return None;
            }
        }
    }
    // root must contain 1, and storage order must follow min labels
    if block(0)[0] != 1 {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| block(v)[0]);
    let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(r, &v)| (v, r)).collect();
    let vertices: Vec<MlVertex> = order
        .iter()
        .map(|&v| MlVertex {
            labels: block(v).clone(),
            left: shape[v].0.map(|c| rank[&c]),
            right: shape[v].1.map(|c| rank[&c]),
        })
        .collect();
    let t = MultiLabeledBinaryTree::from_vertices(vertices);
    t.is_valid().then_some(t)
}

#[test]
fn schroder_alternative_weight_placement() {
    // weight 1 on even-height rises and falls, alpha_{2k} on odd-height
    // rises, alpha_{2k-1} on odd-height falls gives the same path sum as
    // the standard fall-only placement
    let alphas: Vec<i64> = vec![2, 3, 1, 4, 2, 5, 1, 3, 2, 4];
    let deltas: Vec<i64> = vec![1, 2, 0, 3, 1, 0, 2, 1, 3, 0];
    let (a1, d1) = (alphas.clone(), deltas.clone());
    let standard = StepWeightScheme::from_heights(
        |_| Poly::one(),
        move |h| Poly::constant(a1[h - 1]),
        move |h| Poly::constant(d1[h]),
    );
    let (a2, d2) = (alphas.clone(), deltas.clone());
    let alternative = StepWeightScheme::from_heights(
        move |h| {
            if h % 2 == 1 {
                // rise starting at odd height 2k-1 gets alpha_{2k}
                Poly::constant(a2[h])
            } else {
                Poly::one()
            }
        },
        move |h| {
            if h % 2 == 1 {
                // fall starting at odd height 2k-1 gets alpha_{2k-1}
                Poly::constant(alphas[h - 1])
            } else {
                Poly::one()
            }
        },
        move |h| Poly::constant(d2[h]),
    );
    let ls = LabelSets::singleton();
    for n in 0..=6 {
        assert_eq!(
            flajolet_sum(PathKind::Schroder, n, &standard, &ls),
            flajolet_sum(PathKind::Schroder, n, &alternative, &ls),
            "n = {n}"
        );
    }
}

#[test]
fn pair_equidistribution_agrees_with_the_four_variable_polynomial() {
    // the bivariate equidistribution is the s = 1, p = 1 shadow of the
    // four-variable polynomial: P(1,q,1,s) = P(1,q,s,1) as polynomials
    use tfrac_lab::perm::p4;
    use tfrac_lab::symbolic::IndexedSymbol;
    for n in 0..=7 {
        let base = p4(n);
        let set_ones = |vars: &[&str]| {
            let mut assign = BTreeMap::new();
            for v in vars {
                assign.insert(IndexedSymbol::plain(v), tfrac_lab::symbolic::Poly::one());
            }
            base.specialize(&assign)
        };
        let lhs = set_ones(&["p", "s"]); // q^(31-2) r^(2-13)
        let swapped = {
            let mut assign = BTreeMap::new();
            assign.insert(IndexedSymbol::plain("r"), tfrac_lab::symbolic::Poly::v("s"));
            assign.insert(IndexedSymbol::plain("s"), tfrac_lab::symbolic::Poly::v("r"));
            base.specialize(&assign)
        };
        let rhs = {
            let mut assign = BTreeMap::new();
            for v in ["p", "s"] {
                assign.insert(IndexedSymbol::plain(v), tfrac_lab::symbolic::Poly::one());
            }
            swapped.specialize(&assign)
        };
        assert_eq!(lhs, rhs, "n = {n}");
    }
}
