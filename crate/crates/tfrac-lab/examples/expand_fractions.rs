//! Expanding S-, J- and T-fractions to exact series, and the identities
//! that move between them.
//!
//! Run with: cargo run --example expand_fractions

use tfrac_lab::cfrac::{
    expand_j, expand_s, expand_t, expand_transformed, insert_odd_delta, odd_contract, quasi_affine,
    series_to_jfraction, CoeffSeq, QuasiAffineSpec, SFractionSpec,
};
use tfrac_lab::symbolic::{Poly, Series};

fn main() {
    // The quasi-affine family of period 2: alpha_{2k-1} = x + (k-1)u,
    // alpha_{2k} = y + (k-1)v, delta_{2k-1} = a + (k-1)c,
    // delta_{2k} = b + (k-1)d.
    println!("== quasi-affine T-fractions ==");
    for (label, params) in [
        ("all parameters 1      ", [1i64; 8]),
        ("c = 0, others 1       ", [1, 1, 1, 1, 1, 1, 0, 1]),
        ("a = c = 0, others 1   ", [1, 1, 1, 1, 0, 1, 0, 1]),
    ] {
        let spec = quasi_affine(&QuasiAffineSpec::from_ints(params));
        let series = expand_t(&spec, 8);
        println!("{label} -> {series}");
    }

    // Euler's S-fraction with alphas 1,1,2,2,3,3,... generates n!.
    println!("\n== factorials from an S-fraction ==");
    let spec = SFractionSpec {
        alpha: CoeffSeq::rule(|k| Poly::constant(k.div_ceil(2) as i64)),
    };
    println!("alphas 1,1,2,2,3,3,... -> {}", expand_s(&spec, 7));

    // Odd contraction: a T-fraction with zero odd deltas equals
    // 1 + alpha_1 t J(t) for an explicit J-fraction.
    println!("\n== odd contraction ==");
    let spec = insert_odd_delta(
        CoeffSeq::rule(|k| Poly::constant(k.div_ceil(2) as i64)),
        CoeffSeq::rule(|k| Poly::constant(k as i64)),
        CoeffSeq::zero(),
    );
    let (alpha1, j) = odd_contract(&spec, 10).unwrap();
    println!(
        "gamma_0..3 = {:?}",
        (0..4)
            .map(|n| j.gamma_at(n).to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "beta_1..3  = {:?}",
        (1..4).map(|n| j.beta_at(n).to_string()).collect::<Vec<_>>()
    );
    let lhs = expand_t(&spec, 7);
    let rhs = &Series::one(7) + &(&Series::monomial(alpha1, 1, 7) * &expand_j(&j, 7));
    assert_eq!(lhs, rhs);
    println!("contraction identity holds to order 7");

    // The transformation identity: dividing the alphas by geometric factors
    // and prefixing 1/(1 - delta_1 t) inserts odd deltas.
    println!("\n== transformation identity ==");
    let full = insert_odd_delta(
        CoeffSeq::rule(|k| Poly::constant(k.div_ceil(2) as i64)),
        CoeffSeq::rule(|k| Poly::constant(k as i64)),
        CoeffSeq::constant(Poly::one()),
    );
    let direct = expand_t(&full, 8);
    assert_eq!(expand_transformed(&full, 8), direct);
    println!("substituted expansion equals the direct one: {direct}");

    // Recovering J-fraction coefficients from a series.
    println!("\n== series -> J-fraction ==");
    let table = series_to_jfraction(&direct, 3).unwrap();
    println!(
        "gammas = {:?}, betas = {:?}, terminated = {}",
        table
            .gammas
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>(),
        table
            .betas
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>(),
        table.terminated
    );
}
