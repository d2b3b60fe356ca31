//! Motzkin, Dyck and Schroder paths with height-dependent labels, step
//! weights, and brute-force path sums against the continued fractions.
//!
//! Run with: cargo run --example lattice_paths

use tfrac_lab::cfrac::{expand_t, CoeffSeq, TFractionSpec};
use tfrac_lab::paths::{
    enumerate_labelings, enumerate_paths, flajolet_sum, LabelSets, Path, PathKind, Step,
    StepWeightScheme,
};
use tfrac_lab::symbolic::Poly;

fn main() {
    println!("== path counts ==");
    let motzkin: Vec<usize> = (0..=7)
        .map(|n| enumerate_paths(PathKind::Motzkin, n).len())
        .collect();
    let dyck: Vec<usize> = (0..=5)
        .map(|n| enumerate_paths(PathKind::Dyck, 2 * n).len())
        .collect();
    let schroder: Vec<usize> = (0..=5)
        .map(|n| enumerate_paths(PathKind::Schroder, 2 * n).len())
        .collect();
    println!("motzkin:  {motzkin:?}");
    println!("dyck:     {dyck:?}");
    println!("schroder: {schroder:?}");

    println!("\n== a Schroder path, rendered ==");
    let p = Path::new(
        PathKind::Schroder,
        vec![
            Step::Level,
            Step::Rise,
            Step::Rise,
            Step::Level,
            Step::Fall,
            Step::Fall,
        ],
    );
    print!("{}", p.render());

    println!("\n== labelings under the interval-labeled label sets ==");
    // at odd heights a step picks one of floor(h/2) + 1 labels
    let ls = LabelSets::schroder_irt();
    for path in enumerate_paths(PathKind::Schroder, 4) {
        let count = enumerate_labelings(&path, &ls).len();
        println!("{:?} -> {count} labelings", path.steps);
    }

    println!("\n== path sums equal continued-fraction coefficients ==");
    // unit weights count the paths themselves
    let unit = StepWeightScheme::unit();
    let singleton = LabelSets::singleton();
    let m4 = flajolet_sum(PathKind::Motzkin, 4, &unit, &singleton);
    println!("motzkin weight sum at length 4 = {m4}");

    // height-dependent weights match the T-fraction with alpha_i = b_i,
    // delta_{i+1} = c_i (rises weighted 1)
    let falls = [1i64, 2, 1, 3, 2, 1, 2, 3];
    let levels = [1i64, 0, 2, 1, 1, 2, 0, 1];
    let scheme = StepWeightScheme::from_heights(
        |_| Poly::one(),
        move |h| Poly::constant(falls[h]),
        move |h| Poly::constant(levels[h]),
    );
    let spec = TFractionSpec {
        alpha: CoeffSeq::rule(move |i| Poly::constant(falls[i])),
        delta: CoeffSeq::rule(move |i| Poly::constant(levels[i - 1])),
    };
    let series = expand_t(&spec, 6);
    for n in 0..=6 {
        let lhs = flajolet_sum(PathKind::Schroder, n, &scheme, &singleton);
        assert_eq!(&lhs, series.coeff(n));
    }
    println!("schroder path sums match the T-fraction to order 6: {series}");
}
