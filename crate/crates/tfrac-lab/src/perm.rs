//! Permutation statistics: the linear classification under the boundary
//! convention sigma_0 = sigma_{n+1} = 0, vincular pattern counters, the
//! four-variable pattern polynomial and its symmetry / equidistribution
//! checkers.
//!
//! Pattern counters are letter-refined: (31-2)(l, sigma) counts occurrences
//! of 31-2 in which l plays the role of the 2, and similarly for the other
//! three patterns. The paper-style counters are 31-2 (adjacent descent pair
//! before l) and 2-13 (adjacent ascent pair after l); their complement /
//! reverse images 2-31 and 13-2 use the same letter-as-2 convention, which
//! makes the four-variable symmetry group hold by construction (and tested).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cfrac::{expand_s, CoeffSeq, SFractionSpec};
use crate::symbolic::{IndexedSymbol, Monomial, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LinearClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PatternTag {
    /// 31-2: adjacent descent pair to the left of the letter.
    ThreeOneDashTwo,
    /// 2-13: adjacent ascent pair to the right of the letter.
    TwoDashOneThree,
    /// 2-31: adjacent descent pair to the right of the letter.
    TwoDashThreeOne,
    /// 13-2: adjacent ascent pair to the left of the letter.
    OneThreeDashTwo,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Self {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            assert!(x >= 1 && x <= n && !seen[x], "not a permutation of [n]");
            seen[x] = true;
        }
        Permutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// sigma_i with the boundary convention sigma_0 = sigma_{n+1} = 0.
    pub fn at(&self, i: usize) -> usize {
        if i == 0 || i > self.n() {
            0
        } else {
            self.word[i - 1]
        }
    }

    /// Position of letter l (1-based).
    pub fn position_of(&self, l: usize) -> usize {
        self.word.iter().position(|&x| x == l).unwrap() + 1
    }
}

/// Stream all permutations of \[n\] in lexicographic word order.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&Permutation)) {
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        f(&Permutation { word: word.clone() });
        if !next_permutation(&mut word) {
            break;
        }
    }
}

fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, &mut |p| out.push(p.clone()));
    out
}

/// Linear classification of index i (1-based) in sigma.
pub fn linear_class(sigma: &Permutation, i: usize) -> LinearClass {
    let (a, b, c) = (sigma.at(i - 1), sigma.at(i), sigma.at(i + 1));
    match (a < b, b < c) {
        (true, false) => LinearClass::Peak,
        (false, true) => LinearClass::Valley,
        (true, true) => LinearClass::DoubleAscent,
        (false, false) => LinearClass::DoubleDescent,
    }
}

/// Letter-refined vincular pattern count with `l` as the 2 of the pattern.
pub fn pattern_count(sigma: &Permutation, l: usize, tag: PatternTag) -> usize {
    let n = sigma.n();
    let pos = sigma.position_of(l);
    let mut count = 0;
    match tag {
        PatternTag::ThreeOneDashTwo => {
            // j with 1 < j < pos and sigma_j < l < sigma_{j-1}
            for j in 2..pos {
                if sigma.at(j) < l && l < sigma.at(j - 1) {
                    count += 1;
                }
            }
        }
        PatternTag::TwoDashOneThree => {
            // j with pos < j < n and sigma_j < l < sigma_{j+1}
            for j in (pos + 1)..n {
                if sigma.at(j) < l && l < sigma.at(j + 1) {
                    count += 1;
                }
            }
        }
        PatternTag::TwoDashThreeOne => {
            // j with pos < j < n and sigma_{j+1} < l < sigma_j
            for j in (pos + 1)..n {
                if sigma.at(j + 1) < l && l < sigma.at(j) {
                    count += 1;
                }
            }
        }
        PatternTag::OneThreeDashTwo => {
            // j with 1 <= j and j + 1 < pos and sigma_j < l < sigma_{j+1}
            for j in 1..pos.saturating_sub(1) {
                if sigma.at(j) < l && l < sigma.at(j + 1) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Total pattern count over all letters.
pub fn pattern_total(sigma: &Permutation, tag: PatternTag) -> usize {
    (1..=sigma.n()).map(|l| pattern_count(sigma, l, tag)).sum()
}

/// Exponent vector (13-2, 31-2, 2-13, 2-31) of a permutation.
fn p4_exponents(sigma: &Permutation) -> (usize, usize, usize, usize) {
    (
        pattern_total(sigma, PatternTag::OneThreeDashTwo),
        pattern_total(sigma, PatternTag::ThreeOneDashTwo),
        pattern_total(sigma, PatternTag::TwoDashOneThree),
        pattern_total(sigma, PatternTag::TwoDashThreeOne),
    )
}

fn poly_from_exponent_counts(counts: BTreeMap<(usize, usize, usize, usize), u64>) -> Poly {
    let p = IndexedSymbol::plain("p");
    let q = IndexedSymbol::plain("q");
    let r = IndexedSymbol::plain("r");
    let s = IndexedSymbol::plain("s");
    let mut out = Poly::zero();
    for ((ep, eq, er, es), c) in counts {
        let mut m = Monomial::unit();
        for (sym, e) in [(p, ep), (q, eq), (r, er), (s, es)] {
            if e > 0 {
                let mut pow = Monomial::var(sym);
                for _ in 1..e {
                    pow = pow.mul(&Monomial::var(sym));
                }
                m = m.mul(&pow);
            }
        }
        out.add_term(m, BigInt::from(c));
    }
    out
}

/// The four-variable pattern polynomial
/// sum over permutations of p^(13-2) q^(31-2) r^(2-13) s^(2-31),
/// accumulated with a parallel sweep partitioned by first letter.
pub fn p4(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let counts = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut local: BTreeMap<(usize, usize, usize, usize), u64> = BTreeMap::new();
            let rest: Vec<usize> = (1..=n).filter(|&x| x != first).collect();
            let mut word = Vec::with_capacity(n);
            word.push(first);
            sweep_rest(&mut word, &rest, &mut |word| {
                let sigma = Permutation {
                    word: word.to_vec(),
                };
                *local.entry(p4_exponents(&sigma)).or_insert(0) += 1;
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    poly_from_exponent_counts(counts)
}

fn sweep_rest(word: &mut Vec<usize>, remaining: &[usize], f: &mut dyn FnMut(&[usize])) {
    if remaining.is_empty() {
        f(word);
        return;
    }
    for (i, &x) in remaining.iter().enumerate() {
        word.push(x);
        let mut rest = remaining.to_vec();
        rest.remove(i);
        sweep_rest(word, &rest, f);
        word.pop();
    }
}

/// Substitute a permutation of the variables (p,q,r,s) into a polynomial.
fn permute_pqrs(poly: &Poly, images: [&str; 4]) -> Poly {
    let mut assign = BTreeMap::new();
    for (from, to) in ["p", "q", "r", "s"].iter().zip(images) {
        assign.insert(IndexedSymbol::plain(from), Poly::v(to));
    }
    poly.specialize(&assign)
}

fn set_var_to_one(poly: &Poly, var: &str) -> Poly {
    let mut assign = BTreeMap::new();
    assign.insert(IndexedSymbol::plain(var), Poly::one());
    poly.specialize(&assign)
}

/// Outcome of one of the checks below.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(detail: impl Into<String>) -> Self {
        CheckReport {
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CheckReport {
            pass: false,
            detail: detail.into(),
        }
    }
}

/// The Klein four-group of variable swaps fixing the pattern polynomial:
/// P(p,q,r,s) = P(q,p,s,r) = P(s,r,q,p) = P(r,s,p,q). For n >= 5 these are
/// also asserted to be the only variable permutations fixing it.
pub fn check_z2z2_symmetry(n: usize) -> CheckReport {
    let base = p4(n);
    let group = [
        ["p", "q", "r", "s"],
        ["q", "p", "s", "r"],
        ["s", "r", "q", "p"],
        ["r", "s", "p", "q"],
    ];
    for images in &group[1..] {
        if permute_pqrs(&base, *images) != base {
            return CheckReport::fail(format!("n={n}: image under {images:?} differs"));
        }
    }
    if n >= 5 {
        let vars = ["p", "q", "r", "s"];
        let mut fixing = 0;
        for perm in enumerate_permutations(4) {
            let images = [
                vars[perm.word()[0] - 1],
                vars[perm.word()[1] - 1],
                vars[perm.word()[2] - 1],
                vars[perm.word()[3] - 1],
            ];
            if permute_pqrs(&base, images) == base {
                fixing += 1;
            }
        }
        if fixing != 4 {
            return CheckReport::fail(format!(
                "n={n}: {fixing} variable permutations fix the polynomial, expected 4"
            ));
        }
    }
    CheckReport::pass(format!("n={n}: Klein four-group symmetry holds"))
}

/// The four conjectured trivariate relations, checked for every n <= n_max.
pub fn check_trivariate_conjecture(n_max: usize) -> CheckReport {
    for n in 0..=n_max {
        let base = p4(n);
        let cases: [(&str, [&str; 4]); 4] = [
            ("p", ["p", "q", "s", "r"]),
            ("q", ["p", "q", "s", "r"]),
            ("r", ["q", "p", "r", "s"]),
            ("s", ["q", "p", "r", "s"]),
        ];
        for (fixed_to_one, images) in cases {
            let lhs = set_var_to_one(&base, fixed_to_one);
            let rhs = set_var_to_one(&permute_pqrs(&base, images), fixed_to_one);
            if lhs != rhs {
                return CheckReport::fail(format!("n={n}: relation with {fixed_to_one}=1 fails"));
            }
        }
    }
    CheckReport::pass(format!("trivariate relations hold for all n <= {n_max}"))
}

/// Bivariate equidistribution of (2-13, 31-2) and (2-31, 31-2).
pub fn check_pair_equidistribution(n: usize) -> CheckReport {
    let mut lhs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut rhs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for_each_permutation(n, &mut |sigma| {
        let q = pattern_total(sigma, PatternTag::ThreeOneDashTwo);
        *lhs.entry((pattern_total(sigma, PatternTag::TwoDashOneThree), q))
            .or_insert(0) += 1;
        *rhs.entry((pattern_total(sigma, PatternTag::TwoDashThreeOne), q))
            .or_insert(0) += 1;
    });
    if lhs == rhs {
        CheckReport::pass(format!(
            "n={n}: (2-13, 31-2) and (2-31, 31-2) equidistributed"
        ))
    } else {
        CheckReport::fail(format!("n={n}: joint distributions differ"))
    }
}

/// The (p,q)-integer \[k\] = sum_{i=0}^{k-1} p^i q^{k-1-i}.
pub fn pq_integer(k: usize) -> Poly {
    let p = Poly::v("p");
    let q = Poly::v("q");
    let mut out = Poly::zero();
    for i in 0..k {
        out = &out + &(&p.pow(i as u32) * &q.pow((k - 1 - i) as u32));
    }
    out
}

/// S-fraction with alpha_{2k-1} = alpha_{2k} = \[k\]_{p,q}.
pub fn pq_sfraction_spec() -> SFractionSpec {
    SFractionSpec {
        alpha: CoeffSeq::Rule(Arc::new(|i| pq_integer(i.div_ceil(2)))),
    }
}

/// Joint generating polynomial of (2-13, 31-2) over permutations of \[n\],
/// in the variables p and q.
pub fn pq_pattern_polynomial(n: usize) -> Poly {
    let p = Poly::v("p");
    let q = Poly::v("q");
    let mut out = Poly::zero();
    for_each_permutation(n, &mut |sigma| {
        let ep = pattern_total(sigma, PatternTag::TwoDashOneThree);
        let eq = pattern_total(sigma, PatternTag::ThreeOneDashTwo);
        out = &out + &(&p.pow(ep as u32) * &q.pow(eq as u32));
    });
    out
}

/// Check sum over permutations of p^(2-13) q^(31-2) against the S-fraction
/// with alpha = \[k\]_{p,q}, for every n <= n_max.
pub fn pq_sfraction_check(n_max: usize) -> CheckReport {
    let series = expand_s(&pq_sfraction_spec(), n_max);
    for n in 0..=n_max {
        let brute = pq_pattern_polynomial(n);
        if &brute != series.coeff(n) {
            return CheckReport::fail(format!("n={n}: pattern polynomial differs from S-fraction"));
        }
    }
    CheckReport::pass(format!(
        "pq S-fraction matches brute force for n <= {n_max}"
    ))
}

/// Univariate equidistribution of all four vincular pattern totals.
pub fn claesson_equidistribution_check(n: usize) -> CheckReport {
    let mut dists: [BTreeMap<usize, u64>; 4] = Default::default();
    let tags = [
        PatternTag::TwoDashOneThree,
        PatternTag::TwoDashThreeOne,
        PatternTag::OneThreeDashTwo,
        PatternTag::ThreeOneDashTwo,
    ];
    for_each_permutation(n, &mut |sigma| {
        for (d, &tag) in dists.iter_mut().zip(&tags) {
            *d.entry(pattern_total(sigma, tag)).or_insert(0) += 1;
        }
    });
    if dists.iter().all(|d| d == &dists[0]) {
        CheckReport::pass(format!("n={n}: all four patterns equidistributed"))
    } else {
        CheckReport::fail(format!("n={n}: pattern distributions differ"))
    }
}
