//! Vincular pattern statistics on permutations: letter-refined counters,
//! the four-variable pattern polynomial, and its symmetry checks.
//!
//! Run with: cargo run --example permutation_patterns

use tfrac_lab::perm::{
    check_pair_equidistribution, check_trivariate_conjecture, check_z2z2_symmetry, linear_class,
    p4, pattern_count, pq_sfraction_check, PatternTag, Permutation,
};

fn main() {
    let sigma = Permutation::from_word(vec![5, 7, 3, 1, 6, 2, 8, 4]);
    println!("sigma = 57316284");
    println!("\n l | class           | 31-2 | 2-13 | 2-31 | 13-2");
    for l in 1..=8 {
        let i = sigma.position_of(l);
        println!(
            "{:>2} | {:<15} | {:>4} | {:>4} | {:>4} | {:>4}",
            l,
            format!("{:?}", linear_class(&sigma, i)),
            pattern_count(&sigma, l, PatternTag::ThreeOneDashTwo),
            pattern_count(&sigma, l, PatternTag::TwoDashOneThree),
            pattern_count(&sigma, l, PatternTag::TwoDashThreeOne),
            pattern_count(&sigma, l, PatternTag::OneThreeDashTwo),
        );
    }

    println!("\n== the four-variable pattern polynomial ==");
    for n in 0..=4 {
        println!("P_{n}(p,q,r,s) = {}", p4(n));
    }

    println!("\n== symmetries and equidistribution ==");
    let r = check_z2z2_symmetry(6);
    println!("{}", r.detail);
    let r = check_pair_equidistribution(7);
    println!("{}", r.detail);
    let r = check_trivariate_conjecture(7);
    println!("{}", r.detail);
    let r = pq_sfraction_check(6);
    println!("{}", r.detail);
}
