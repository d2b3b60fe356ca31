//! S-, J- and T-type continued fractions: expansion to truncated series,
//! contraction and transformation identities, quasi-affine coefficient
//! families, and recovery of J-fraction coefficients from a series.
//!
//! Truncation-depth contract: the coefficient of t^n in any of these
//! fractions depends only on the first n levels, because every level
//! contributes at least one factor of t. Expanding with depth N+1 and tail 1
//! is therefore exact to order N; this is asserted by tests rather than
//! assumed silently.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::symbolic::{Poly, Series};

/// A total function index -> Poly, as a closed-form rule or a finite table
/// with explicit default.
#[derive(Clone)]
pub enum CoeffSeq {
    Table { entries: Vec<Poly>, default: Poly },
    Rule(Arc<dyn Fn(usize) -> Poly + Send + Sync>),
}

impl CoeffSeq {
    pub fn zero() -> Self {
        CoeffSeq::constant(Poly::zero())
    }

    pub fn constant(p: Poly) -> Self {
        CoeffSeq::Table {
            entries: Vec::new(),
            default: p,
        }
    }

    /// Table indexed from 1: `table(vec!\[p1, p2\])` yields p1 at index 1.
    pub fn table(entries: Vec<Poly>) -> Self {
        CoeffSeq::Table {
            entries,
            default: Poly::zero(),
        }
    }

    pub fn rule(f: impl Fn(usize) -> Poly + Send + Sync + 'static) -> Self {
        CoeffSeq::Rule(Arc::new(f))
    }

    /// The coefficient at 1-based index `i`.
    pub fn at(&self, i: usize) -> Poly {
        match self {
            CoeffSeq::Table { entries, default } => {
                if i >= 1 && i <= entries.len() {
                    entries[i - 1].clone()
                } else {
                    default.clone()
                }
            }
            CoeffSeq::Rule(f) => f(i),
        }
    }
}

impl std::fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let probe: Vec<String> = (1..=6).map(|i| self.at(i).to_canonical_string()).collect();
        write!(f, "CoeffSeq[{}, ...]", probe.join(", "))
    }
}

/// Thron-type fraction: alpha at 1-based index, delta at 1-based index.
#[derive(Clone, Debug)]
pub struct TFractionSpec {
    pub alpha: CoeffSeq,
    pub delta: CoeffSeq,
}

/// Jacobi-type fraction: `gamma.at(n)` is gamma_{n-1} shifted — we keep the
/// paper's indexing with gamma_0, gamma_1, ... so `gamma_at(n)` takes the
/// 0-based subscript; beta is 1-based.
#[derive(Clone, Debug)]
pub struct JFractionSpec {
    pub gamma: CoeffSeq,
    pub beta: CoeffSeq,
}

impl JFractionSpec {
    /// gamma_n for n >= 0 (stored internally at table position n+1).
    pub fn gamma_at(&self, n: usize) -> Poly {
        self.gamma.at(n + 1)
    }

    /// beta_n for n >= 1.
    pub fn beta_at(&self, n: usize) -> Poly {
        self.beta.at(n)
    }

    /// Build from the 0-based gamma subscripts: `gammas\[n\]` is gamma_n.
    pub fn from_tables(gammas: Vec<Poly>, betas: Vec<Poly>) -> Self {
        JFractionSpec {
            gamma: CoeffSeq::table(gammas),
            beta: CoeffSeq::table(betas),
        }
    }
}

/// Stieltjes-type fraction.
#[derive(Clone, Debug)]
pub struct SFractionSpec {
    pub alpha: CoeffSeq,
}

/// The eight parameters of a period-2 quasi-affine T-fraction:
/// alpha_{2k-1} = x + (k-1)u, alpha_{2k} = y + (k-1)v,
/// delta_{2k-1} = a + (k-1)c, delta_{2k} = b + (k-1)d.
#[derive(Clone, Debug)]
pub struct QuasiAffineSpec {
    pub x: Poly,
    pub y: Poly,
    pub u: Poly,
    pub v: Poly,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

impl QuasiAffineSpec {
    pub fn from_ints(vals: [i64; 8]) -> Self {
        let [x, y, u, v, a, b, c, d] = vals.map(Poly::constant);
        QuasiAffineSpec {
            x,
            y,
            u,
            v,
            a,
            b,
            c,
            d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CfError {
    #[error("delta at odd index {0} is nonzero: {1}")]
    OddDeltaNonzero(usize, String),
    #[error("series has non-unit constant term {0}")]
    NonUnitConstantTerm(String),
    #[error("beta_{0} vanishes but the residual series is nonzero")]
    TerminatingFraction(usize),
    #[error("series coefficient at t^{0} is not a rational constant")]
    SymbolicCoefficient(usize),
}

fn linear_term(c: &Poly, order: usize) -> Series {
    Series::monomial(c.clone(), 1, order)
}

/// Expand the T-fraction to a series of order `n`, bottom-up with tail 1.
pub fn expand_t(spec: &TFractionSpec, n: usize) -> Series {
    expand_t_series(
        |k, order| linear_term(&spec.alpha.at(k), order),
        |k, order| linear_term(&spec.delta.at(k), order),
        n,
    )
}

/// Generalized T-fraction expansion in which each level's alpha*t and
/// delta*t terms are arbitrary series (used by the transformation identity,
/// where alphas acquire geometric-series factors).
pub fn expand_t_series(
    alpha_t: impl Fn(usize, usize) -> Series,
    delta_t: impl Fn(usize, usize) -> Series,
    n: usize,
) -> Series {
    let depth = n + 1;
    let one = Series::one(n);
    let mut f = one.clone();
    for k in (1..=depth).rev() {
        let body = &(&one - &delta_t(k, n)) - &(&alpha_t(k, n) * &f);
        f = body
            .inverse()
            .expect("T-fraction level has unit constant term");
    }
    f
}

/// Expand the J-fraction to a series of order `n`.
pub fn expand_j(spec: &JFractionSpec, n: usize) -> Series {
    let depth = n + 1;
    let one = Series::one(n);
    let mut f = one.clone();
    for k in (1..=depth).rev() {
        let gamma_t = linear_term(&spec.gamma_at(k - 1), n);
        let beta_t2 = Series::monomial(spec.beta_at(k), 2, n);
        let body = &(&one - &gamma_t) - &(&beta_t2 * &f);
        f = body
            .inverse()
            .expect("J-fraction level has unit constant term");
    }
    f
}

/// Expand the S-fraction to a series of order `n`.
pub fn expand_s(spec: &SFractionSpec, n: usize) -> Series {
    let depth = n + 1;
    let one = Series::one(n);
    let mut f = one.clone();
    for k in (1..=depth).rev() {
        let body = &one - &(&linear_term(&spec.alpha.at(k), n) * &f);
        f = body
            .inverse()
            .expect("S-fraction level has unit constant term");
    }
    f
}

/// The period-2 quasi-affine coefficient rules.
pub fn quasi_affine(spec: &QuasiAffineSpec) -> TFractionSpec {
    let s = spec.clone();
    let alpha = CoeffSeq::rule(move |i| {
        let k = Poly::constant((i.div_ceil(2)) as i64 - 1);
        if i % 2 == 1 {
            &s.x + &(&k * &s.u)
        } else {
            &s.y + &(&k * &s.v)
        }
    });
    let s = spec.clone();
    let delta = CoeffSeq::rule(move |i| {
        let k = Poly::constant((i.div_ceil(2)) as i64 - 1);
        if i % 2 == 1 {
            &s.a + &(&k * &s.c)
        } else {
            &s.b + &(&k * &s.d)
        }
    });
    TFractionSpec { alpha, delta }
}

/// Odd contraction: a T-fraction with all odd deltas zero equals
/// 1 + alpha_1 t * J where J has gamma_n = alpha_{2n+1} + alpha_{2n+2} +
/// delta_{2n+2} and beta_n = alpha_{2n} alpha_{2n+1}.
///
/// The precondition delta_{2k-1} = 0 is checked for all odd indices up to
/// `probe_depth`.
pub fn odd_contract(
    spec: &TFractionSpec,
    probe_depth: usize,
) -> Result<(Poly, JFractionSpec), CfError> {
    for k in 1..=probe_depth {
        let i = 2 * k - 1;
        let d = spec.delta.at(i);
        if !d.is_zero() {
            return Err(CfError::OddDeltaNonzero(i, d.to_canonical_string()));
        }
    }
    let alpha1 = spec.alpha.at(1);
    let a = spec.alpha.clone();
    let d = spec.delta.clone();
    let gamma = CoeffSeq::rule(move |i| {
        // stored at table position n+1 for gamma_n
        let n = i - 1;
        &(&a.at(2 * n + 1) + &a.at(2 * n + 2)) + &d.at(2 * n + 2)
    });
    let a = spec.alpha.clone();
    let beta = CoeffSeq::rule(move |n| &a.at(2 * n) * &a.at(2 * n + 1));
    Ok((alpha1, JFractionSpec { gamma, beta }))
}

/// Assemble a full T-fraction from separately given alpha, even-delta and
/// odd-delta sequences. `delta_even.at(k)` is delta_{2k} and
/// `delta_odd.at(k)` is delta_{2k-1} (block index k >= 1).
pub fn insert_odd_delta(
    alpha: CoeffSeq,
    delta_even: CoeffSeq,
    delta_odd: CoeffSeq,
) -> TFractionSpec {
    let delta = CoeffSeq::rule(move |i| {
        if i % 2 == 0 {
            delta_even.at(i / 2)
        } else {
            delta_odd.at(i.div_ceil(2))
        }
    });
    TFractionSpec { alpha, delta }
}

/// Left-hand side of the transformation identity: the expansion of the
/// no-odd-delta T-fraction after substituting
/// alpha_{2k-1} -> alpha_{2k-1}/(1 - delta_{2k-1} t) and
/// alpha_{2k} -> alpha_{2k}/(1 - delta_{2k+1} t),
/// multiplied by the prefactor 1/(1 - delta_1 t). Equal to `expand_t` of the
/// full spec, to order `n`.
pub fn expand_transformed(spec: &TFractionSpec, n: usize) -> Series {
    let geom = |c: Poly, order: usize| -> Series {
        // 1/(1 - c t)
        let s = &Series::one(order) - &linear_term(&c, order);
        s.inverse()
            .expect("geometric factor has unit constant term")
    };
    let alpha = spec.alpha.clone();
    let delta = spec.delta.clone();
    let alpha_t = move |k: usize, order: usize| -> Series {
        let odd_index = if k % 2 == 1 { k } else { k + 1 };
        let factor = geom(delta.at(odd_index), order);
        &linear_term(&alpha.at(k), order) * &factor
    };
    let delta = spec.delta.clone();
    let delta_t = move |k: usize, order: usize| -> Series {
        if k.is_multiple_of(2) {
            linear_term(&delta.at(k), order)
        } else {
            Series::zero(order)
        }
    };
    let inner = expand_t_series(alpha_t, delta_t, n);
    &geom(spec.delta.at(1), n) * &inner
}

/// Tabulated J-fraction coefficients recovered from a series, as exact
/// rationals. `terminated` means a residual vanished identically, i.e. the
/// series is a finite fraction and all later betas are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFractionTable {
    pub gammas: Vec<BigRational>,
    pub betas: Vec<BigRational>,
    pub terminated: bool,
}

impl JFractionTable {
    /// Convert to a Poly-backed spec; `None` if any entry is non-integral.
    pub fn to_spec(&self) -> Option<JFractionSpec> {
        let to_poly = |r: &BigRational| -> Option<Poly> {
            r.denom()
                .is_one()
                .then(|| Poly::constant(r.numer().clone()))
        };
        let gammas = self
            .gammas
            .iter()
            .map(to_poly)
            .collect::<Option<Vec<_>>>()?;
        let betas = self.betas.iter().map(to_poly).collect::<Option<Vec<_>>>()?;
        Some(JFractionSpec::from_tables(gammas, betas))
    }
}

/// Recover J-fraction coefficients from a series with constant term 1 by
/// iterated inversion: strip gamma_{k-1} = \[t\] f_k, then peel
/// beta_k t^2 f_{k+1} = 1 - gamma_{k-1} t - 1/f_k.
///
/// The series coefficients must be rational constants. Each level consumes
/// two orders of precision, so `depth` is limited by the order of `s`.
pub fn series_to_jfraction(s: &Series, depth: usize) -> Result<JFractionTable, CfError> {
    let order = s.order();
    let mut f: Vec<BigRational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let c = s.coeff(k);
        match c.as_constant() {
            Some(v) => f.push(BigRational::from_integer(v)),
            None => return Err(CfError::SymbolicCoefficient(k)),
        }
    }
    if f[0] != BigRational::one() {
        return Err(CfError::NonUnitConstantTerm(f[0].to_string()));
    }

    let mut gammas = Vec::new();
    let mut betas = Vec::new();
    let mut avail = order; // valid orders 0..=avail of the current tail
    for k in 1..=depth {
        if avail < 1 {
            break;
        }
        let gamma = f[1].clone();
        gammas.push(gamma.clone());
        if avail < 2 {
            break;
        }
        // r = 1 - gamma t - 1/f, valid to order `avail`
        let inv = rational_series_inverse(&f, avail);
        let mut r: Vec<BigRational> = inv.iter().map(|c| -c).collect();
        r[0] += BigRational::one();
        r[1] -= gamma;
        if r.iter().all(|c| c.is_zero()) {
            return Ok(JFractionTable {
                gammas,
                betas,
                terminated: true,
            });
        }
        let beta = r[2].clone();
        if beta.is_zero() {
            return Err(CfError::TerminatingFraction(k));
        }
        betas.push(beta.clone());
        // f_{k+1} = r / (beta t^2), valid to order avail - 2
        avail -= 2;
        let mut next: Vec<BigRational> = Vec::with_capacity(avail + 1);
        for i in 0..=avail {
            next.push(&r[i + 2] / &beta);
        }
        f = next;
        debug_assert!(f[0].is_one());
    }
    Ok(JFractionTable {
        gammas,
        betas,
        terminated: false,
    })
}

fn rational_series_inverse(f: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut inv = vec![BigRational::zero(); order + 1];
    inv[0] = f[0].recip();
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if !f[k].is_zero() {
                acc += &f[k] * &inv[n - k];
            }
        }
        inv[n] = -acc / &f[0];
    }
    inv
}

/// Integer coefficients of a series, for count-style assertions.
pub fn series_ints(s: &Series) -> Option<Vec<BigInt>> {
    s.coeffs().iter().map(|c| c.as_constant()).collect()
}
