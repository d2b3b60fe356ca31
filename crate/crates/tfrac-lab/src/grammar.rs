//! Derivative operators defined by substitution rules on variables,
//! extended to polynomials by linearity and the Leibniz rule. Iterating the
//! binary- and restricted-ternary-tree operators on y1 generates the
//! node-type polynomials directly, without enumerating trees.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::symbolic::{IndexedSymbol, Monomial, Poly};

/// One substitution rule: the variable maps to its image polynomial.
#[derive(Clone, Debug)]
pub struct DerivationRule {
    pub variable: IndexedSymbol,
    pub image: Poly,
}

/// A formal derivation; variables without a rule derive to zero.
#[derive(Clone, Debug, Default)]
pub struct DerivativeOperator {
    rules: BTreeMap<IndexedSymbol, Poly>,
}

impl DerivativeOperator {
    pub fn new(rules: Vec<DerivationRule>) -> Self {
        DerivativeOperator {
            rules: rules.into_iter().map(|r| (r.variable, r.image)).collect(),
        }
    }

    pub fn rule(&self, v: IndexedSymbol) -> Option<&Poly> {
        self.rules.get(&v)
    }

    /// Apply the operator once: monomial-wise Leibniz, deriving each symbol
    /// occurrence with multiplicity.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            for (s, e) in m.iter() {
                let Some(image) = self.rules.get(&s) else {
                    continue;
                };
                // c * e * m / s * image
                let mut rest = Monomial::unit();
                for (t, et) in m.iter() {
                    let et = if t == s { et - 1 } else { et };
                    for _ in 0..et {
                        rest = rest.mul(&Monomial::var(t));
                    }
                }
                let coeff = c * BigInt::from(e);
                for (mi, ci) in image.terms() {
                    out.add_term(rest.mul(mi), &coeff * ci);
                }
            }
        }
        out
    }

    /// The k-th iterate applied to a seed polynomial.
    pub fn iterate(&self, seed: &Poly, k: usize) -> Poly {
        let mut p = seed.clone();
        for _ in 0..k {
            p = self.apply(&p);
        }
        p
    }
}

/// The operator generating the binary-tree node-type polynomials:
/// y1 -> y1 (x2 + y2), x2 -> x1 y1, y2 -> x1 y1.
pub fn binary_tree_operator() -> DerivativeOperator {
    let (x1, x2) = (Poly::v("x1"), Poly::v("x2"));
    let (y1, y2) = (Poly::v("y1"), Poly::v("y2"));
    DerivativeOperator::new(vec![
        DerivationRule {
            variable: IndexedSymbol::plain("y1"),
            image: &y1 * &(&x2 + &y2),
        },
        DerivationRule {
            variable: IndexedSymbol::plain("x2"),
            image: &x1 * &y1,
        },
        DerivationRule {
            variable: IndexedSymbol::plain("y2"),
            image: &x1 * &y1,
        },
    ])
}

/// The restricted-ternary variant: y1 -> y1 (x2 + y2 + w), and the same
/// x2, y2 rules; w has no rule (middle-child vertices accept no further
/// children).
pub fn rt_operator() -> DerivativeOperator {
    let (x1, x2) = (Poly::v("x1"), Poly::v("x2"));
    let (y1, y2) = (Poly::v("y1"), Poly::v("y2"));
    let w = Poly::v("w");
    DerivativeOperator::new(vec![
        DerivationRule {
            variable: IndexedSymbol::plain("y1"),
            image: &y1 * &(&(&x2 + &y2) + &w),
        },
        DerivationRule {
            variable: IndexedSymbol::plain("x2"),
            image: &x1 * &y1,
        },
        DerivationRule {
            variable: IndexedSymbol::plain("y2"),
            image: &x1 * &y1,
        },
    ])
}

/// The two-variable rule {x -> 2xy, y -> x}.
pub fn dumont_operator() -> DerivativeOperator {
    let (x, y) = (Poly::v("x"), Poly::v("y"));
    DerivativeOperator::new(vec![
        DerivationRule {
            variable: IndexedSymbol::plain("x"),
            image: (&Poly::constant(2) * &x) * &y,
        },
        DerivationRule {
            variable: IndexedSymbol::plain("y"),
            image: x.clone(),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treepoly::{p_bt, p_rt, SimpleWeights};

    #[test]
    fn rule_images() {
        let d = binary_tree_operator();
        assert_eq!(
            d.apply(&Poly::v("y1")),
            Poly::parse("x2*y1 + y1*y2").unwrap()
        );
        let d = rt_operator();
        assert_eq!(
            d.apply(&Poly::v("y1")),
            Poly::parse("x2*y1 + y1*y2 + w*y1").unwrap()
        );
    }

    #[test]
    fn constants_derive_to_zero() {
        let d = binary_tree_operator();
        assert!(d.apply(&Poly::constant(5)).is_zero());
        assert!(d.apply(&Poly::zero()).is_zero());
    }

    #[test]
    fn leibniz_on_products() {
        let d = binary_tree_operator();
        let p = Poly::parse("x2*y1").unwrap();
        let expect = &(&d.apply(&Poly::v("x2")) * &Poly::v("y1"))
            + &(&Poly::v("x2") * &d.apply(&Poly::v("y1")));
        assert_eq!(d.apply(&p), expect);
        // powers: D(y1^3) = 3 y1^2 D(y1)
        let p3 = Poly::v("y1").pow(3);
        let expect3 = &Poly::constant(3) * &(&Poly::v("y1").pow(2) * &d.apply(&Poly::v("y1")));
        assert_eq!(d.apply(&p3), expect3);
    }

    #[test]
    fn linearity() {
        let d = rt_operator();
        let p = Poly::parse("2*y1 - x2").unwrap();
        let expect = &(&Poly::constant(2) * &d.apply(&Poly::v("y1"))) - &d.apply(&Poly::v("x2"));
        assert_eq!(d.apply(&p), expect);
    }

    #[test]
    fn iterates_match_tree_polynomials() {
        let w = SimpleWeights::symbolic();
        let y1 = Poly::v("y1");
        let dbt = binary_tree_operator();
        let drt = rt_operator();
        assert_eq!(drt.iterate(&y1, 0), p_rt(1, &w));
        for n in 1..=6 {
            assert_eq!(dbt.iterate(&y1, n - 1), p_bt(n, &w), "bt n = {n}");
            assert_eq!(drt.iterate(&y1, n - 1), p_rt(n, &w), "rt n = {n}");
        }
    }

    #[test]
    fn all_ones_iterates_count_trees() {
        let drt = rt_operator();
        let ones: BTreeMap<IndexedSymbol, Poly> = ["x1", "x2", "y1", "y2", "w"]
            .iter()
            .map(|v| (IndexedSymbol::plain(v), Poly::one()))
            .collect();
        let counts = [1i64, 1, 3, 11, 51, 295, 2055, 16715];
        for (n, &expect) in counts.iter().enumerate().skip(1) {
            let p = drt.iterate(&Poly::v("y1"), n - 1);
            assert_eq!(p.specialize(&ones), Poly::constant(expect), "n = {n}");
        }
    }

    #[test]
    fn dumont_specialization_commutes() {
        // the binary operator specialized by x1 -> 1, y1 -> x, x2 = y2 -> y
        // acts as {x -> 2xy, y -> x} on monomials in x, y
        let dbt = binary_tree_operator();
        let dd = dumont_operator();
        let lift = |a: u32, b: u32| -> Poly {
            // x^a y^b lifts to y1^a x2^b
            &Poly::v("y1").pow(a) * &Poly::v("x2").pow(b)
        };
        let spec: BTreeMap<IndexedSymbol, Poly> = [
            (IndexedSymbol::plain("x1"), Poly::one()),
            (IndexedSymbol::plain("y1"), Poly::v("x")),
            (IndexedSymbol::plain("x2"), Poly::v("y")),
            (IndexedSymbol::plain("y2"), Poly::v("y")),
        ]
        .into_iter()
        .collect();
        for a in 0..=6u32 {
            for b in 0..=(6 - a) {
                let lifted = dbt.apply(&lift(a, b)).specialize(&spec);
                let direct = dd.apply(&(&Poly::v("x").pow(a) * &Poly::v("y").pow(b)));
                assert_eq!(lifted, direct, "x^{a} y^{b}");
            }
        }
    }
}
