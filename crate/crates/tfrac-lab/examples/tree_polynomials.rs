//! The generating polynomials of the tree families: simple node-type
//! weights and the master (croix, nid)-indexed letters.
//!
//! Run with: cargo run --example tree_polynomials

use tfrac_lab::symbolic::Poly;
use tfrac_lab::treepoly::{
    p_bt, p_irt, p_perm_star, p_rt, q_bt, q_irt, MasterWeights, SimpleWeights,
};
use tfrac_lab::trees::Traversal;

fn main() {
    let w = SimpleWeights::symbolic();

    println!("== simple node-type polynomials ==");
    for n in 0..=3 {
        println!("binary    P_{n} = {}", p_bt(n, &w));
    }
    for n in 0..=3 {
        println!("ternary   P_{n} = {}", p_rt(n, &w));
    }
    for n in 0..=2 {
        println!("interval  P_{n} = {}", p_irt(n, &w));
    }

    // w = 0 removes middle children and recovers the binary polynomial
    let mut no_middle = SimpleWeights::symbolic();
    no_middle.w = Poly::zero();
    assert_eq!(p_rt(4, &no_middle), p_bt(4, &w));
    println!("\nw = 0 collapses the ternary polynomial onto the binary one");

    println!("\n== master polynomials ==");
    let mw = MasterWeights::symbolic();
    for n in 0..=2 {
        println!(
            "Q_{n} (binary, inorder) = {}",
            q_bt(n, &mw, Traversal::Inorder)
        );
    }
    for n in 0..=2 {
        println!(
            "Q_{n} (interval-labeled) = {}",
            q_irt(n, &mw, Traversal::Preorder)
        );
    }

    // the same master letters, summed over permutations by linear class,
    // give the identical polynomial
    println!("\n== permutations carry the same master polynomial ==");
    for n in 0..=4 {
        assert_eq!(p_perm_star(n, &mw), q_bt(n, &mw, Traversal::Inorder));
    }
    println!("P*_n = Q_n for n <= 4 (checked symbolically)");

    // prime specialization for fast large-n sanity checks
    let primes = MasterWeights::primes();
    println!(
        "\nprime-specialized Q_6 (interval-labeled) = {}",
        q_irt(6, &primes, Traversal::Preorder)
    );
}
