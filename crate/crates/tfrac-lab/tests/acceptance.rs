//! Acceptance gate: every headline result checked end to end, one pass/fail
//! line per criterion. All equalities are exact; the runtime bounds are
//! asserted alongside the mathematics.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use tfrac_lab::biject::{
    bt_to_permutation, irt_to_labeled_schroder, labeled_motzkin_to_rt, labeled_schroder_to_irt,
    rt_to_labeled_motzkin,
};
use tfrac_lab::cfrac::{expand_t, quasi_affine, series_ints, QuasiAffineSpec};
use tfrac_lab::oeis::{fixture_matches, reproduce_table, sweep, OeisClient, SweepConfig};
use tfrac_lab::paths::Label;
use tfrac_lab::perm::{
    check_pair_equidistribution, check_trivariate_conjecture, check_z2z2_symmetry, pattern_count,
    pq_sfraction_check, PatternTag, Permutation,
};
use tfrac_lab::riordan::{
    check_exp_riordan_production, family_phi, lah_production, output_matrix, EgfPair, SimpleFamily,
};
use tfrac_lab::symbolic::Poly;
use tfrac_lab::treepoly::{p_rt, SimpleWeights};
use tfrac_lab::trees::{
    all_vertex_stats, enumerate_irt, enumerate_rt, for_each_binary, for_each_irt, for_each_rt,
    irt_vertex_stats, samples, Traversal,
};
use tfrac_lab::util::Lcg;
use tfrac_lab::verify::{verify, TheoremId, VerifySpec};

struct Criterion {
    number: usize,
    budget: Option<Duration>,
    start: Instant,
}

impl Criterion {
    fn begin(number: usize, budget_secs: Option<u64>) -> Self {
        Criterion {
            number,
            budget: budget_secs.map(Duration::from_secs),
            start: Instant::now(),
        }
    }

    fn finish(self, description: &str) {
        let elapsed = self.start.elapsed();
        println!(
            "criterion {}: PASS ({:.2?}) — {}",
            self.number, elapsed, description
        );
        if let Some(budget) = self.budget {
            assert!(
                elapsed <= budget,
                "criterion {} exceeded its {:?} budget: {:?}",
                self.number,
                budget,
                elapsed
            );
        }
    }
}

fn ints(vals: &[i64]) -> Vec<BigInt> {
    vals.iter().map(|&v| BigInt::from(v)).collect()
}

#[test]
fn criterion_1_sequence_reproduction() {
    let c = Criterion::begin(1, Some(1));
    let cases: [([i64; 8], [i64; 8]); 3] = [
        (
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 2, 6, 24, 124, 800, 6208, 56240],
        ),
        (
            [1, 1, 1, 1, 1, 1, 0, 1],
            [1, 2, 6, 23, 109, 632, 4390, 35621],
        ),
        (
            [1, 1, 1, 1, 0, 1, 0, 1],
            [1, 1, 3, 11, 51, 295, 2055, 16715],
        ),
    ];
    for (params, expect) in cases {
        let spec = quasi_affine(&QuasiAffineSpec::from_ints(params));
        let series = expand_t(&spec, 7);
        assert_eq!(series_ints(&series).unwrap(), ints(&expect), "{params:?}");
    }
    c.finish("quasi-affine T-fractions reproduce the three headline sequences to 8 terms");
}

#[test]
fn criterion_2_enumeration_counts() {
    let c = Criterion::begin(2, Some(60));
    let mut factorial = 1u64;
    for n in 1..=8 {
        factorial *= n as u64;
        let mut count = 0u64;
        for_each_binary(n, &mut |_| count += 1);
        assert_eq!(count, factorial, "binary n = {n}");
    }
    let rt_expect = [1u64, 1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255];
    for (n, &expect) in rt_expect.iter().enumerate() {
        let mut count = 0u64;
        for_each_rt(n, &mut |_| count += 1);
        assert_eq!(count, expect, "rt n = {n}");
    }
    let irt_expect = [1u64, 2, 6, 23, 109, 632, 4390, 35621, 330545];
    for (n, &expect) in irt_expect.iter().enumerate() {
        let mut count = 0u64;
        for_each_irt(n, &mut |_| count += 1);
        assert_eq!(count, expect, "irt n = {n}");
    }
    c.finish("binary, restricted ternary and interval-labeled counts match through n = 8/9/8");
}

#[test]
fn criterion_3_worked_examples() {
    let c = Criterion::begin(3, None);
    // statistic table of the 8-vertex binary tree under inorder
    let t = samples::sample_binary_8();
    let stats = all_vertex_stats(&t, Traversal::Inorder).unwrap();
    let table = [
        (1, "11", 0, 0, 0),
        (2, "11", 1, 1, 0),
        (3, "10", 2, 0, 2),
        (4, "10", 2, 2, 0),
        (5, "01", 2, 0, 2),
        (6, "00", 2, 1, 1),
        (7, "00", 1, 0, 1),
        (8, "00", 0, 0, 0),
    ];
    for (v, ty, lev, nid, croix) in table {
        let s = &stats[&v];
        assert_eq!(
            (s.node_type.as_str(), s.lev, s.nid, s.croix),
            (ty, lev, nid, croix),
            "binary row {v}"
        );
    }
    // statistic table of the 13-vertex interval-labeled tree, both orders
    let t = samples::sample_irt_16();
    let pre = irt_vertex_stats(&t, Traversal::Preorder).unwrap();
    let lrmr = irt_vertex_stats(&t, Traversal::LeftRootMiddleRight).unwrap();
    let table = [
        (0usize, "100", 0usize, 0usize, 0usize, 0usize, 0usize),
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
    for (lo, ty, lev, nid_p, croix_p, nid_a, croix_a) in table {
        let i = (0..t.num_vertices())
            .find(|&i| t.vertex(i).lo == lo)
            .unwrap();
        let sp = &pre[&i];
        assert_eq!(
            (sp.node_type.as_str(), sp.lev, sp.nid, sp.croix),
            (ty, lev, nid_p, croix_p),
            "interval row {lo} preorder"
        );
        let sa = &lrmr[&i];
        assert_eq!(
            (sa.nid, sa.croix),
            (nid_a, croix_a),
            "interval row {lo} lrmr"
        );
    }
    // the inorder word of the binary sample
    let sigma = bt_to_permutation(&samples::sample_binary_8());
    assert_eq!(sigma.word(), &[5, 7, 3, 1, 6, 2, 8, 4]);
    // the vincular pattern table of that word, all 8 letters
    let sigma = Permutation::from_word(vec![5, 7, 3, 1, 6, 2, 8, 4]);
    let vincular = [
        (1, 0, 0),
        (2, 1, 0),
        (3, 0, 2),
        (4, 2, 0),
        (5, 0, 2),
        (6, 1, 1),
        (7, 0, 1),
        (8, 0, 0),
    ];
    for (l, e312, e213) in vincular {
        assert_eq!(
            pattern_count(&sigma, l, PatternTag::ThreeOneDashTwo),
            e312,
            "31-2 at {l}"
        );
        assert_eq!(
            pattern_count(&sigma, l, PatternTag::TwoDashOneThree),
            e213,
            "2-13 at {l}"
        );
    }
    c.finish(
        "both statistic tables, the inorder word and the vincular table reproduce cell-for-cell",
    );
}

#[test]
fn criterion_4_bijection_roundtrips() {
    let c = Criterion::begin(4, Some(120));
    for alg in Traversal::ALL_TERNARY {
        for n1 in 1..=7 {
            for t in enumerate_rt(n1) {
                let lp = rt_to_labeled_motzkin(&t, alg);
                // height and label laws, vertex by vertex
                let stats = all_vertex_stats(&t, alg).unwrap();
                let heights = lp.path.start_heights();
                for i in 1..n1 {
                    assert_eq!(heights[i - 1], stats[&i].lev, "height law at {i}");
                    let xi = match lp.labels[i - 1] {
                        Label::Int(xi) => xi,
                        Label::Pair(_, xi) => xi,
                    };
                    assert_eq!(xi, stats[&i].nid, "label law at {i}");
                    assert_eq!(heights[i - 1] - xi, stats[&i].croix, "croix law at {i}");
                }
                assert_eq!(labeled_motzkin_to_rt(&lp, alg).unwrap(), t);
            }
        }
        for n in 0..=5 {
            for t in enumerate_irt(n) {
                let lp = irt_to_labeled_schroder(&t, alg);
                let stats = irt_vertex_stats(&t, alg).unwrap();
                let heights = lp.path.start_heights();
                // segment starting heights are 2 lev + 1 for non-root
                // vertices; labels are nid and floor(h/2) - xi = croix
                let mut cursor = 0usize;
                for i in 0..t.num_vertices() {
                    let vx = t.vertex(i);
                    let j = vx.hi - vx.lo;
                    let seg_len = if vx.lo == 0 && vx.hi == n {
                        n
                    } else if vx.lo == 0 || vx.hi == n {
                        j + 1
                    } else if t.node_type(i) == (false, true, false) {
                        1
                    } else {
                        j + 2
                    };
                    if i > 0 {
                        let h = heights[cursor];
                        assert_eq!(h, 2 * stats[&i].lev + 1, "segment height law");
                        let xi = match lp.labels[cursor] {
                            Label::Int(xi) => xi,
                            Label::Pair(..) => unreachable!(),
                        };
                        assert_eq!(xi, stats[&i].nid, "segment label law");
                        assert_eq!(h / 2 - xi, stats[&i].croix, "segment croix law");
                    }
                    cursor += seg_len;
                }
                assert_eq!(labeled_schroder_to_irt(&lp, alg).unwrap(), t);
            }
        }
    }
    c.finish("both path bijections are two-sided inverses with the height and label laws intact");
}

#[test]
fn criterion_5_master_fractions() {
    let c = Criterion::begin(5, Some(600));
    let masters = [
        TheoremId::ThmRtMasterJ,
        TheoremId::ThmRtMasterT,
        TheoremId::ThmRtMasterStar,
        TheoremId::ThmIrtMasterT,
        TheoremId::ThmPermMaster,
    ];
    for theorem in masters {
        let report = verify(&VerifySpec::new(theorem));
        assert!(report.pass, "{}: {:?}", report.id, report.detail);
        assert_eq!(report.orders_checked, vec![5, 7], "{}", report.id);
    }
    let simples = [
        TheoremId::ThmBtSimpleJ,
        TheoremId::ThmBtSimpleT,
        TheoremId::ThmRtSimpleJ,
        TheoremId::ThmRtSimpleT,
        TheoremId::ThmIrtSimpleT,
        TheoremId::ThmIrtSimpleNew,
    ];
    for theorem in simples {
        let report = verify(&VerifySpec {
            theorem,
            order: Some(7),
            traversal: None,
        });
        assert!(report.pass, "{}: {:?}", report.id, report.detail);
    }
    c.finish("master fractions symbolic at order 5 and prime-specialized at 7; simple fractions symbolic at 7");
}

#[test]
fn criterion_6_algebraic_identities() {
    let c = Criterion::begin(6, None);
    for theorem in [TheoremId::PropOddContraction, TheoremId::PropTransformation] {
        let report = verify(&VerifySpec {
            theorem,
            order: Some(8),
            traversal: None,
        });
        assert!(report.pass, "{}: {:?}", report.id, report.detail);
    }
    let report = verify(&VerifySpec {
        theorem: TheoremId::EqOgfRttIrtt,
        order: Some(7),
        traversal: None,
    });
    assert!(report.pass, "{}: {:?}", report.id, report.detail);
    c.finish("contraction and transformation hold on 100 random specs each; the ogf identity holds symbolically to order 7");
}

#[test]
fn criterion_7_riordan_route() {
    let c = Criterion::begin(7, None);
    let w = SimpleWeights::symbolic();
    let p = lah_production(&family_phi(SimpleFamily::RestrictedTernary, &w), 8);
    for n in 0..8 {
        assert_eq!(p.get(n, n + 1).as_integral().unwrap(), w.y1);
        let level = &(&w.x2 + &w.y2) + &w.w;
        assert_eq!(
            p.get(n, n).as_integral().unwrap(),
            level.scale(&BigInt::from(n as i64 + 1))
        );
        if n >= 1 {
            assert_eq!(
                p.get(n, n - 1).as_integral().unwrap(),
                w.x1.scale(&BigInt::from((n * (n + 1)) as i64))
            );
        }
        for k in 0..n.saturating_sub(1) {
            assert!(p.get(n, k).is_zero(), "entry ({n},{k}) must vanish");
        }
    }
    // column 0 of the output, times the leading weight y1, equals the
    // (n+1)-st tree polynomial
    let out = output_matrix(&p, 8);
    for n in 0..8 {
        let expect = p_rt(n + 1, &w);
        let got = &out.get(n, 0).as_integral().unwrap() * &w.y1;
        assert_eq!(got, expect, "column 0 row {n}");
    }
    // 20 random exponential Riordan pairs satisfy the production theorem
    let mut rng = Lcg::new(0xacce_97ed);
    for trial in 0..20 {
        let f: Vec<i64> = std::iter::once(1)
            .chain((1..=9).map(|_| rng.int_in(-4..=4)))
            .collect();
        let g: Vec<i64> = [0, rng.int_in(1..=3)]
            .into_iter()
            .chain((2..=9).map(|_| rng.int_in(-4..=4)))
            .collect();
        check_exp_riordan_production(&EgfPair::from_ints(f, g), 8)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
    }
    c.finish(
        "the production matrix route reproduces the tree polynomials and the functional equations",
    );
}

#[test]
fn criterion_8_permutation_results() {
    let c = Criterion::begin(8, Some(900));
    for n in 0..=9 {
        let report = check_pair_equidistribution(n);
        assert!(report.pass, "{}", report.detail);
    }
    for n in 0..=8 {
        let report = check_z2z2_symmetry(n);
        assert!(report.pass, "{}", report.detail);
    }
    // the negative part of the symmetry check runs inside
    // check_z2z2_symmetry for n >= 5; n = 5 and 6 are covered above
    let report = check_trivariate_conjecture(9);
    assert!(report.pass, "{}", report.detail);
    let report = pq_sfraction_check(7);
    assert!(report.pass, "{}", report.detail);
    c.finish("equidistribution, the four-variable symmetries and the trivariate relations hold through n = 9");
}

#[test]
fn criterion_9_grammar_operators() {
    let c = Criterion::begin(9, None);
    for theorem in [TheoremId::PropGrammarBt, TheoremId::PropGrammarRt] {
        let report = verify(&VerifySpec {
            theorem,
            order: Some(7),
            traversal: None,
        });
        assert!(report.pass, "{}: {:?}", report.id, report.detail);
        assert_eq!(report.orders_checked, vec![7, 9], "{}", report.id);
    }
    c.finish(
        "derivative-operator iterates match the tree polynomials to order 7 and counts to order 9",
    );
}

#[test]
fn criterion_10_oeis_reproduction() {
    let c = Criterion::begin(10, Some(30));
    assert_eq!(sweep(&SweepConfig::first_sweep()).len(), 48);
    assert_eq!(sweep(&SweepConfig::second_sweep()).len(), 2304);
    let client = OeisClient::new(None, true);
    let reports = reproduce_table(&client).unwrap();
    assert_eq!(reports.len(), fixture_matches().len());
    for r in &reports {
        assert!(r.terms_match, "{} terms mismatch", r.a_number);
        assert!(r.lookup_contains, "{} missing from lookup", r.a_number);
    }
    // the three 0/1-sweep hits are among the surviving tuples
    let first = sweep(&SweepConfig::first_sweep());
    for a in ["A187251", "A105072", "A230008"] {
        let m = fixture_matches()
            .into_iter()
            .find(|m| m.a_number == a)
            .unwrap();
        let (_, seq) = first
            .iter()
            .find(|(p, _)| p == &m.params)
            .unwrap_or_else(|| panic!("{a} tuple not in first sweep"));
        for (want, got) in m.terms.iter().zip(seq) {
            assert_eq!(&BigInt::from(*want), got, "{a} terms");
        }
    }
    c.finish("sweep sizes are 48 and 2304 and all sixteen published matches reproduce offline");
}

#[test]
fn criterion_3_stats_use_interval_order() {
    // supplementary: the IRT statistics compare vertices by interval, not by
    // storage index; spot-check one nesting pair from the worked tree
    let t = samples::sample_irt_16();
    let stats = irt_vertex_stats(&t, Traversal::Preorder).unwrap();
    let poly_map: BTreeMap<usize, usize> =
        (0..t.num_vertices()).map(|i| (t.vertex(i).lo, i)).collect();
    assert_eq!(stats[&poly_map[&6]].nid, 2);
    assert_eq!(stats[&poly_map[&8]].croix, 2);
    let _ = Poly::one();
}
