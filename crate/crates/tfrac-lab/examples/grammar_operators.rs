//! Derivative operators: substitution rules extended by linearity and the
//! Leibniz rule, generating the tree polynomials without enumerating trees.
//!
//! Run with: cargo run --example grammar_operators

use std::collections::BTreeMap;

use tfrac_lab::grammar::{binary_tree_operator, dumont_operator, rt_operator};
use tfrac_lab::symbolic::{IndexedSymbol, Poly};
use tfrac_lab::treepoly::{p_rt, SimpleWeights};

fn main() {
    let d = rt_operator();
    let y1 = Poly::v("y1");

    println!("== iterates of the restricted ternary operator ==");
    for n in 1..=4 {
        println!("D^{} y1 = {}", n - 1, d.iterate(&y1, n - 1));
    }

    // they agree with the enumerated tree polynomials
    let w = SimpleWeights::symbolic();
    for n in 1..=6 {
        assert_eq!(d.iterate(&y1, n - 1), p_rt(n, &w));
    }
    println!("(iterates equal the tree polynomials through n = 6)");

    println!("\n== all-ones evaluation counts the trees ==");
    let ones: BTreeMap<IndexedSymbol, Poly> = ["x1", "x2", "y1", "y2", "w"]
        .iter()
        .map(|v| (IndexedSymbol::plain(v), Poly::one()))
        .collect();
    let counts: Vec<String> = (1..=9)
        .map(|n| d.iterate(&y1, n - 1).specialize(&ones).to_string())
        .collect();
    println!("restricted ternary counts: {}", counts.join(", "));

    println!("\n== the two-variable specialization ==");
    // x1 = 1, y1 = x, x2 = y2 = y turns the binary operator into the rule
    // {x -> 2xy, y -> x}
    let dbt = binary_tree_operator();
    let dd = dumont_operator();
    let spec: BTreeMap<IndexedSymbol, Poly> = [
        (IndexedSymbol::plain("x1"), Poly::one()),
        (IndexedSymbol::plain("y1"), Poly::v("x")),
        (IndexedSymbol::plain("x2"), Poly::v("y")),
        (IndexedSymbol::plain("y2"), Poly::v("y")),
    ]
    .into_iter()
    .collect();
    let lifted = dbt
        .apply(&Poly::parse("y1^2*x2").unwrap())
        .specialize(&spec);
    let direct = dd.apply(&Poly::parse("x^2*y").unwrap());
    assert_eq!(lifted, direct);
    println!("D(x^2 y) = {direct} either way");
}
