//! Exponential Riordan arrays, production matrices, and the algebraic route
//! from tree weights to the simple J-fraction.
//!
//! Run with: cargo run --example riordan_triangles

use tfrac_lab::cfrac::expand_j;
use tfrac_lab::riordan::{
    check_exp_riordan_production, family_phi, lah_production, output_matrix, production_matrix,
    riordan_matrix, simple_fraction_via_production, EgfPair, SimpleFamily,
};
use tfrac_lab::treepoly::{p_rt, SimpleWeights};

fn main() {
    // the triangle of the pair F = G' = 1/(1-t)^2, G = t/(1-t), whose
    // zeroth column is (n+1)!
    println!("== a shifted factorial triangle ==");
    let f: Vec<i64> = (0..7).map(|n| (1..=(n + 1) as i64).product()).collect();
    let g: Vec<i64> = (0..7)
        .map(|n| if n == 0 { 0 } else { (1..=n as i64).product() })
        .collect();
    let pair = EgfPair::from_ints(f, g);
    let l = riordan_matrix(&pair, 6);
    print!("{}", l.to_csv());
    let p = production_matrix(&l).unwrap();
    println!("production matrix:");
    print!("{}", p.to_csv());
    check_exp_riordan_production(&pair, 5).unwrap();
    println!("(production shape and functional equations verified)");

    // the tree triangle: phi_0 = y1, phi_1 = x2 + y2 + w, phi_2 = x1 gives
    // a tridiagonal production matrix
    println!("\n== the tree production matrix ==");
    let w = SimpleWeights::symbolic();
    let p = lah_production(&family_phi(SimpleFamily::RestrictedTernary, &w), 4);
    print!("{}", p.to_csv());

    // reading the J-fraction off the tridiagonal reproduces the tree
    // polynomials
    println!("\n== J-fraction via the production route ==");
    let (lead, spec) =
        simple_fraction_via_production(SimpleFamily::RestrictedTernary, &w, 6).unwrap();
    let series = expand_j(&spec, 4);
    for n in 0..=4 {
        let expect = p_rt(n + 1, &w);
        assert_eq!(&lead * series.coeff(n), expect);
    }
    println!("leading factor {lead}, gamma_1 = {}", spec.gamma_at(1));
    println!("matches the tree polynomials P_1..P_5");

    // output column 0 at unit weights counts the trees
    let ones = family_phi(SimpleFamily::RestrictedTernary, &SimpleWeights::all_ones());
    let out = output_matrix(&lah_production(&ones, 8), 9);
    let col: Vec<String> = (0..9).map(|n| out.get(n, 0).to_string()).collect();
    println!("\nunit-weight output column 0: {}", col.join(", "));
}
