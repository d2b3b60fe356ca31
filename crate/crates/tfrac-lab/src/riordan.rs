//! Exponential Riordan arrays, production matrices, and the algebraic route
//! from tree weights to the simple J-fractions.
//!
//! Matrices hold polynomial entries over exact rationals. Inversion happens
//! only in `production_matrix`, which divides by diagonal entries; those
//! must be nonzero rational constants (the symbolic matrices built here are
//! only ever run forward through `output_matrix`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cfrac::{CoeffSeq, JFractionSpec};
use crate::symbolic::{Poly, QPoly};
use crate::treepoly::SimpleWeights;

/// A rows x cols matrix; production matrices are lower-Hessenberg with
/// cols = rows + 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<QPoly>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RiordanError {
    #[error("diagonal entry {0} is zero")]
    SingularDiagonal(usize),
    #[error("diagonal entry {0} is not a rational constant")]
    NonConstantDiagonal(usize),
    #[error("corner entry must be 1, found {0}")]
    NonUnitCorner(String),
    #[error("matrix entry ({0},{1}) is not integral: {2}")]
    NonIntegralEntry(usize, usize, String),
}

impl TriMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        TriMatrix {
            rows,
            cols,
            data: vec![vec![QPoly::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QPoly) {
        self.data[i][j] = v;
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.data[i][j].is_zero()))
    }

    pub fn is_lower_hessenberg(&self) -> bool {
        (0..self.rows).all(|i| ((i + 2)..self.cols).all(|j| self.data[i][j].is_zero()))
    }

    /// Comma-separated rows, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Exponential generating functions F and G: `f\[n\]` and `g\[n\]` are the
/// coefficients of t^n/n!, stored explicitly in that convention; g_0 = 0.
#[derive(Clone, Debug)]
pub struct EgfPair {
    f: Vec<BigRational>,
    g: Vec<BigRational>,
}

impl EgfPair {
    pub fn new(f: Vec<BigRational>, g: Vec<BigRational>) -> Self {
        assert!(g.first().is_none_or(|g0| g0.is_zero()), "g_0 must be 0");
        EgfPair { f, g }
    }

    pub fn from_ints(f: Vec<i64>, g: Vec<i64>) -> Self {
        let conv = |v: Vec<i64>| {
            v.into_iter()
                .map(|x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        };
        EgfPair::new(conv(f), conv(g))
    }

    /// Ordinary coefficients of F: f_n / n!.
    fn f_ordinary(&self, order: usize) -> Vec<BigRational> {
        egf_to_ogf(&self.f, order)
    }

    fn g_ordinary(&self, order: usize) -> Vec<BigRational> {
        egf_to_ogf(&self.g, order)
    }
}

/// Convert EGF-convention coefficients (a_n meaning a_n t^n/n!) to ordinary
/// coefficients a_n/n!, zero-padded to the requested order.
pub fn egf_to_ogf(coeffs: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut fact = BigRational::one();
    (0..=order)
        .map(|n| {
            if n > 0 {
                fact *= BigRational::from_integer(BigInt::from(n));
            }
            match coeffs.get(n) {
                Some(c) => c / &fact,
                None => BigRational::zero(),
            }
        })
        .collect()
}

/// Convert ordinary coefficients to the EGF convention: a_n -> a_n * n!.
pub fn ogf_to_egf(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut fact = BigRational::one();
    coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact *= BigRational::from_integer(BigInt::from(n));
            }
            c * &fact
        })
        .collect()
}

fn series_mul(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn series_derivative(a: &[BigRational]) -> Vec<BigRational> {
    (1..a.len())
        .map(|n| &a[n] * BigRational::from_integer(BigInt::from(n)))
        .collect()
}

/// Compose A(G(t)) for a series G with G(0) = 0, truncated to `order`.
fn series_compose(a: &[BigRational], g: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    let mut g_pow = vec![BigRational::zero(); order + 1];
    g_pow[0] = BigRational::one();
    for (m, am) in a.iter().enumerate() {
        if m > 0 {
            g_pow = series_mul(&g_pow, g, order);
            if g_pow.iter().all(|c| c.is_zero()) {
                break;
            }
        }
        if !am.is_zero() {
            for (o, gp) in out.iter_mut().zip(&g_pow) {
                *o += am * gp;
            }
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

/// The N x N exponential Riordan array R\[F,G\]: entry (n,k) is
/// (n!/k!) \[t^n\] F G^k.
pub fn riordan_matrix(pair: &EgfPair, n: usize) -> TriMatrix {
    let order = n.saturating_sub(1);
    let f_ord = pair.f_ordinary(order);
    let g_ord = pair.g_ordinary(order);
    let mut m = TriMatrix::zero(n, n);
    let mut col = f_ord;
    for k in 0..n {
        if k > 0 {
            col = series_mul(&col, &g_ord, order);
        }
        #[allow(clippy::needless_range_loop)]
        for row in k..n {
            let val = &col[row] * BigRational::from_integer(factorial(row))
                / BigRational::from_integer(factorial(k));
            m.set(row, k, QPoly::from_rational(val));
        }
    }
    m
}

/// The production matrix P with L P = Delta L, solved by forward
/// substitution; L must be lower triangular with L_00 = 1 and invertible
/// rational diagonal. P has one row fewer than L (the last row would need
/// unavailable entries of L).
pub fn production_matrix(l: &TriMatrix) -> Result<TriMatrix, RiordanError> {
    assert!(
        l.is_lower_triangular(),
        "production input must be triangular"
    );
    let n = l.rows;
    if !l.get(0, 0).as_rational().is_some_and(|c| c.is_one()) {
        return Err(RiordanError::NonUnitCorner(l.get(0, 0).to_string()));
    }
    let mut diag_inv = Vec::with_capacity(n);
    for i in 0..n {
        let d = l
            .get(i, i)
            .as_rational()
            .ok_or(RiordanError::NonConstantDiagonal(i))?;
        if d.is_zero() {
            return Err(RiordanError::SingularDiagonal(i));
        }
        diag_inv.push(d.recip());
    }
    // solve L P = B where B_ik = L_{i+1,k}
    let rows = n - 1;
    let mut p = TriMatrix::zero(rows, n);
    #[allow(clippy::needless_range_loop)]
    for i in 0..rows {
        for k in 0..n {
            let mut acc = l.get(i + 1, k).clone();
            for j in 0..i {
                let lij = l.get(i, j);
                if !lij.is_zero() && !p.get(j, k).is_zero() {
                    acc = &acc - &(lij * p.get(j, k));
                }
            }
            p.set(i, k, acc.scale_rational(&diag_inv[i]));
        }
    }
    debug_assert!(p.is_lower_hessenberg());
    Ok(p)
}

/// Iterate a production matrix: row n of the output is e_0 P^n. P must have
/// at least n-1 rows and n columns for an n x n output.
pub fn output_matrix(p: &TriMatrix, n: usize) -> TriMatrix {
    assert!(
        p.rows + 1 >= n && p.cols >= n,
        "production matrix too small"
    );
    let mut out = TriMatrix::zero(n, n);
    let mut v = vec![QPoly::zero(); p.cols.max(n)];
    v[0] = QPoly::one();
    out.set(0, 0, QPoly::one());
    for row in 1..n {
        // v <- v P; after `row` products the support is within 0..=row
        let mut next = vec![QPoly::zero(); p.cols.max(n)];
        for (i, vi) in v.iter().enumerate().take(p.rows) {
            if vi.is_zero() {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for j in 0..p.cols {
                let pij = p.get(i, j);
                if !pij.is_zero() {
                    let add = vi * pij;
                    next[j] = &next[j] + &add;
                }
            }
        }
        v = next;
        for (k, vk) in v.iter().enumerate().take(row.min(n - 1) + 1) {
            out.set(row, k, vk.clone());
        }
    }
    out
}

/// Verify that L = R\[F,G\] has the exponential-Riordan production shape
/// p_nk = (n!/k!) (z_{n-k} + k a_{n-k+1}) and that the recovered A- and
/// Z-series satisfy G' = A(G) and F'/F = Z(G).
pub fn check_exp_riordan_production(pair: &EgfPair, order: usize) -> Result<(), String> {
    let n = order + 1;
    let l = riordan_matrix(pair, n + 1);
    let p = production_matrix(&l).map_err(|e| e.to_string())?;

    // recover z_m = p_{m,0}/m!, a_0 = p_{0,1}, a_m = p_{m,1}/m! - z_{m-1}
    let mut z: Vec<BigRational> = Vec::with_capacity(n);
    let mut a: Vec<BigRational> = Vec::with_capacity(n);
    for m in 0..n {
        let pm0 = p
            .get(m, 0)
            .as_rational()
            .ok_or("symbolic entry in rational production matrix")?;
        z.push(pm0 / BigRational::from_integer(factorial(m)));
    }
    a.push(
        p.get(0, 1)
            .as_rational()
            .ok_or("symbolic entry in rational production matrix")?,
    );
    for m in 1..n {
        let pm1 = p
            .get(m, 1)
            .as_rational()
            .ok_or("symbolic entry in rational production matrix")?;
        a.push(pm1 / BigRational::from_integer(factorial(m)) - &z[m - 1]);
    }

    // shape check over every available entry
    for row in 0..p.rows() {
        for k in 0..=(row + 1).min(p.cols() - 1) {
            let zz = if row >= k {
                z[row - k].clone()
            } else {
                BigRational::zero()
            };
            let a_idx = row as i64 - k as i64 + 1;
            let aa = if a_idx >= 0 {
                a.get(a_idx as usize)
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
            } else {
                BigRational::zero()
            };
            let expect = BigRational::from_integer(factorial(row))
                / BigRational::from_integer(factorial(k))
                * (zz + BigRational::from_integer(BigInt::from(k)) * aa);
            let got = p
                .get(row, k)
                .as_rational()
                .ok_or("symbolic entry in rational production matrix")?;
            if got != expect {
                return Err(format!(
                    "entry ({row},{k}) = {got} differs from shape {expect}"
                ));
            }
        }
    }

    // functional equations to order `order - 1`
    let sub_order = order.saturating_sub(1);
    let g_ord = pair.g_ordinary(order);
    let f_ord = pair.f_ordinary(order);
    let g_prime = series_derivative(&g_ord);
    let a_of_g = series_compose(&a, &g_ord, sub_order);
    for k in 0..=sub_order {
        if g_prime[k] != a_of_g[k] {
            return Err(format!("G' and A(G) differ at order {k}"));
        }
    }
    let f_prime = series_derivative(&f_ord);
    let z_of_g = series_compose(&z, &g_ord, sub_order);
    let rhs = series_mul(&f_ord, &z_of_g, sub_order);
    for k in 0..=sub_order {
        if f_prime[k] != rhs[k] {
            return Err(format!("F' and F Z(G) differ at order {k}"));
        }
    }
    Ok(())
}

/// The production matrix of the tree triangle R[G',G]:
/// p_nk = ((n+1)!/k!) phi_{n-k+1}, where `phi_at(i)` is phi_i. Returns a
/// `rows x (rows+1)` lower-Hessenberg matrix.
pub fn lah_production(phi: &CoeffSeq, rows: usize) -> TriMatrix {
    let phi_at = |i: usize| phi.at(i + 1); // CoeffSeq tables are 1-based
    let mut p = TriMatrix::zero(rows, rows + 1);
    for n in 0..rows {
        for k in 0..=(n + 1) {
            let idx = n + 1 - k;
            let c = phi_at(idx);
            if c.is_zero() {
                continue;
            }
            let scale = factorial(n + 1) / factorial(k);
            p.set(n, k, QPoly::from_poly(c.scale(&scale)));
        }
    }
    p
}

/// Which simple tree family a production-route fraction describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimpleFamily {
    Binary,
    RestrictedTernary,
}

/// The weight list phi_0 = y1, phi_1 = x2 + y2 (+ w), phi_2 = x1 for the
/// tree triangle of the given family.
pub fn family_phi(family: SimpleFamily, w: &SimpleWeights) -> CoeffSeq {
    let phi1 = match family {
        SimpleFamily::Binary => &w.x2 + &w.y2,
        SimpleFamily::RestrictedTernary => &(&w.x2 + &w.y2) + &w.w,
    };
    CoeffSeq::table(vec![w.y1.clone(), phi1, w.x1.clone()])
}

/// Read the simple J-fraction off the tridiagonal production matrix by
/// transferring rise weights onto falls: gamma_n = p_nn and
/// beta_n = p_{n-1,n} p_{n,n-1}. Returns the leading factor y1 together
/// with the coefficients: the generating function of the (n+1)-st tree
/// polynomials is y1 times the J-fraction.
pub fn simple_fraction_via_production(
    family: SimpleFamily,
    w: &SimpleWeights,
    depth: usize,
) -> Result<(Poly, JFractionSpec), RiordanError> {
    let p = lah_production(&family_phi(family, w), depth + 1);
    let integral = |i: usize, j: usize| -> Result<Poly, RiordanError> {
        p.get(i, j)
            .as_integral()
            .ok_or_else(|| RiordanError::NonIntegralEntry(i, j, p.get(i, j).to_string()))
    };
    let mut gammas = Vec::with_capacity(depth + 1);
    let mut betas = Vec::with_capacity(depth);
    for n in 0..=depth {
        gammas.push(integral(n, n)?);
        if n >= 1 {
            betas.push(&integral(n - 1, n)? * &integral(n, n - 1)?);
        }
    }
    Ok((w.y1.clone(), JFractionSpec::from_tables(gammas, betas)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::{expand_j, series_ints};
    use crate::symbolic::Series;
    use crate::treepoly::{p_bt, p_rt};
    use crate::util::Lcg;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn identity_riordan() {
        // F = 1, G = t
        let pair = EgfPair::from_ints(vec![1], vec![0, 1]);
        let m = riordan_matrix(&pair, 5);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { QPoly::one() } else { QPoly::zero() };
                assert_eq!(m.get(i, j), &expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn shifted_factorial_triangle() {
        // F = G' = 1/(1-t)^2, G = t/(1-t): f_n = (n+1)!, g_n = n!
        let f: Vec<i64> = (0..8).map(|n| factorial_i64(n + 1)).collect();
        let g: Vec<i64> = (0..8)
            .map(|n| if n == 0 { 0 } else { factorial_i64(n) })
            .collect();
        let pair = EgfPair::from_ints(f, g);
        let m = riordan_matrix(&pair, 8);
        for n in 0..8 {
            assert_eq!(
                m.get(n, 0).as_rational().unwrap(),
                rat(factorial_i64(n + 1)),
                "column 0 row {n}"
            );
        }
    }

    fn factorial_i64(n: usize) -> i64 {
        (1..=n as i64).product()
    }

    #[test]
    fn output_of_shift_matrix_is_identity() {
        // P = Delta (1 on the superdiagonal)
        let mut p = TriMatrix::zero(5, 6);
        for i in 0..5 {
            p.set(i, i + 1, QPoly::one());
        }
        let out = output_matrix(&p, 5);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { QPoly::one() } else { QPoly::zero() };
                assert_eq!(out.get(i, j), &expect);
            }
        }
    }

    #[test]
    fn tridiagonal_moments_are_shifted_factorials() {
        // p_{n,n+1} = 1, p_nn = 2(n+1), p_{n,n-1} = n(n+1): column 0 of the
        // output equals (n+1)!, matching the J-fraction expansion
        let n = 8;
        let mut p = TriMatrix::zero(n, n + 1);
        for i in 0..n {
            p.set(i, i + 1, QPoly::one());
            p.set(i, i, QPoly::from_ratio(2 * (i as i64 + 1), 1));
            if i >= 1 {
                p.set(i, i - 1, QPoly::from_ratio((i * (i + 1)) as i64, 1));
            }
        }
        let out = output_matrix(&p, n);
        let spec = JFractionSpec {
            gamma: CoeffSeq::rule(|i| Poly::constant(2 * i as i64)),
            beta: CoeffSeq::rule(|m| Poly::constant((m * (m + 1)) as i64)),
        };
        let series = expand_j(&spec, n - 1);
        for row in 0..n {
            assert_eq!(
                out.get(row, 0).as_integral().unwrap(),
                series.coeff(row).clone(),
                "row {row}"
            );
        }
    }

    #[test]
    fn production_output_roundtrip_random() {
        let mut rng = Lcg::new(0xfeed_beef);
        for _ in 0..10 {
            let n = 6;
            let mut p = TriMatrix::zero(n, n + 1);
            for i in 0..n {
                for j in 0..=(i + 1) {
                    p.set(i, j, QPoly::from_ratio(rng.int_in(-4..=4), 1));
                }
            }
            // make the triangle invertible: superdiagonal nonzero
            for i in 0..n {
                p.set(i, i + 1, QPoly::from_ratio(rng.int_in(1..=3), 1));
            }
            let out = output_matrix(&p, n + 1);
            let p2 = production_matrix(&out).unwrap();
            for i in 0..n {
                for j in 0..=n {
                    assert_eq!(p.get(i, j), p2.get(i, j), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn exp_riordan_production_on_fixed_pairs() {
        // binomial: F = 1, G = t; and the shifted factorial pair
        check_exp_riordan_production(&EgfPair::from_ints(vec![1], vec![0, 1]), 6).unwrap();
        let f: Vec<i64> = (0..10).map(|n| factorial_i64(n + 1)).collect();
        let g: Vec<i64> = (0..10)
            .map(|n| if n == 0 { 0 } else { factorial_i64(n) })
            .collect();
        check_exp_riordan_production(&EgfPair::from_ints(f, g), 7).unwrap();
    }

    #[test]
    fn lah_production_tridiagonal_for_tree_weights() {
        let w = SimpleWeights::symbolic();
        let p = lah_production(&family_phi(SimpleFamily::RestrictedTernary, &w), 5);
        assert!(p.is_lower_hessenberg());
        for n in 0..5 {
            assert_eq!(p.get(n, n + 1).as_integral().unwrap(), w.y1);
            let gamma = p.get(n, n).as_integral().unwrap();
            let expect = (&(&w.x2 + &w.y2) + &w.w).scale(&BigInt::from(n as i64 + 1));
            assert_eq!(gamma, expect);
            if n >= 1 {
                let sub = p.get(n, n - 1).as_integral().unwrap();
                assert_eq!(sub, w.x1.scale(&BigInt::from((n * (n + 1)) as i64)));
            }
        }
    }

    #[test]
    fn lah_output_counts_rts() {
        // the tree weights at all ones: phi = (1, 3, 1); column 0 = shifted
        // RT counts
        let phi = family_phi(SimpleFamily::RestrictedTernary, &SimpleWeights::all_ones());
        let p = lah_production(&phi, 7);
        let out = output_matrix(&p, 8);
        let col: Vec<BigInt> = (0..8)
            .map(|n| out.get(n, 0).as_integral().unwrap().constant_term())
            .collect();
        let expect: Vec<BigInt> = [1i64, 3, 11, 51, 295, 2055, 16715, 155355]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(col, expect);
    }

    #[test]
    fn lah_chain_with_only_phi0() {
        // leaves-only weight: the production matrix is the shift matrix and
        // the output is the identity
        let phi = CoeffSeq::table(vec![Poly::one()]);
        let p = lah_production(&phi, 6);
        for n in 0..6 {
            assert_eq!(p.get(n, n + 1), &QPoly::one());
            assert!(p.get(n, n).is_zero());
        }
        let out = output_matrix(&p, 6);
        for n in 0..6 {
            let expect = if n == 0 { Poly::one() } else { Poly::zero() };
            assert_eq!(out.get(n, 0).as_integral().unwrap(), expect);
        }
    }

    #[test]
    fn lah_chain_trees_have_unit_moments() {
        // chains: phi_0 = phi_1 = 1 gives the Stirling-style triangle whose
        // column 0 is all ones
        let phi = CoeffSeq::table(vec![Poly::one(), Poly::one()]);
        let p = lah_production(&phi, 6);
        assert!(p.is_lower_hessenberg());
        let out = output_matrix(&p, 6);
        for n in 0..6 {
            assert_eq!(out.get(n, 0).as_integral().unwrap(), Poly::one());
        }
    }

    #[test]
    fn simple_fraction_route_matches_tree_polynomials() {
        let w = SimpleWeights::symbolic();
        for (family, tree_poly) in [
            (
                SimpleFamily::Binary,
                p_bt as fn(usize, &SimpleWeights) -> Poly,
            ),
            (
                SimpleFamily::RestrictedTernary,
                p_rt as fn(usize, &SimpleWeights) -> Poly,
            ),
        ] {
            let (lead, spec) = simple_fraction_via_production(family, &w, 6).unwrap();
            let series = expand_j(&spec, 5);
            for n in 0..=5 {
                assert_eq!(
                    &lead * series.coeff(n),
                    tree_poly(n + 1, &w),
                    "{family:?} n = {n}"
                );
            }
        }
    }

    #[test]
    fn egf_ogf_roundtrip_on_factorials() {
        // EGF coefficients n! correspond to the ordinary geometric series
        let egf: Vec<BigRational> = (0..7).map(|n| rat(factorial_i64(n))).collect();
        let ogf = egf_to_ogf(&egf, 6);
        assert!(ogf.iter().all(|c| c == &rat(1)));
        assert_eq!(ogf_to_egf(&ogf), egf);
    }

    #[test]
    fn csv_emission() {
        let pair = EgfPair::from_ints(vec![1], vec![0, 1]);
        let m = riordan_matrix(&pair, 2);
        assert_eq!(m.to_csv(), "1,0\n0,1\n");
    }

    #[test]
    fn series_ints_sanity() {
        let s = Series::from_coeffs(vec![Poly::one(), Poly::constant(3)]);
        assert_eq!(
            series_ints(&s).unwrap(),
            vec![BigInt::from(1), BigInt::from(3)]
        );
    }
}
