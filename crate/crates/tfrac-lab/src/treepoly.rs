//! Generating polynomials of the tree families, computed by summing vertex
//! weights over exhaustive enumeration.
//!
//! Simple polynomials use the six node-type / surplus variables
//! x1, x2, y1, y2, w, z; master polynomials use indexed letter families
//! subscripted by (croix, nid) — realized as closures so the same code runs
//! fully symbolic or specialized (e.g. to distinct primes for fast checks).

use std::sync::Arc;

use crate::perm::{for_each_permutation, linear_class, pattern_count, LinearClass, PatternTag};
use crate::symbolic::{IndexedSymbol, Poly};
use crate::trees::{
    all_vertex_stats, for_each_binary, for_each_irt, for_each_rt, irt_vertex_stats, IrtTree,
    Traversal,
};

/// Weights for the simple (finitely many variables) polynomials.
#[derive(Clone, Debug)]
pub struct SimpleWeights {
    pub x1: Poly,
    pub x2: Poly,
    pub y1: Poly,
    pub y2: Poly,
    pub w: Poly,
    pub z: Poly,
}

impl SimpleWeights {
    /// The six variables themselves.
    pub fn symbolic() -> Self {
        SimpleWeights {
            x1: Poly::v("x1"),
            x2: Poly::v("x2"),
            y1: Poly::v("y1"),
            y2: Poly::v("y2"),
            w: Poly::v("w"),
            z: Poly::v("z"),
        }
    }

    pub fn all_ones() -> Self {
        SimpleWeights {
            x1: Poly::one(),
            x2: Poly::one(),
            y1: Poly::one(),
            y2: Poly::one(),
            w: Poly::one(),
            z: Poly::one(),
        }
    }
}

pub type Family2 = Arc<dyn Fn(usize, usize) -> Poly + Send + Sync>;
pub type Family1 = Arc<dyn Fn(usize) -> Poly + Send + Sync>;

/// Weight families for the master polynomials, each indexed by
/// (croix, nid) or by lev.
#[derive(Clone)]
pub struct MasterWeights {
    pub a: Family2,
    pub b: Family2,
    pub c: Family2,
    pub d: Family2,
    pub f: Family2,
    pub ah: Family2,
    pub bh: Family2,
    pub mu: Family1,
    pub nu: Family1,
    pub e: Family1,
}

fn sym2(base: &'static str) -> Family2 {
    Arc::new(move |l, lp| Poly::var(IndexedSymbol::two(base, l, lp)))
}

fn sym1(base: &'static str) -> Family1 {
    Arc::new(move |l| Poly::var(IndexedSymbol::one(base, l)))
}

impl MasterWeights {
    /// The indexed symbol families themselves.
    pub fn symbolic() -> Self {
        MasterWeights {
            a: sym2("a"),
            b: sym2("b"),
            c: sym2("c"),
            d: sym2("d"),
            f: sym2("f"),
            ah: sym2("ah"),
            bh: sym2("bh"),
            mu: sym1("mu"),
            nu: sym1("nu"),
            e: sym1("e"),
        }
    }

    /// Distinct small primes per symbol occurrence, for fast large-n checks.
    /// The assignment is deterministic in (family, indices).
    pub fn primes() -> Self {
        let pick2 = |family: usize| -> Family2 {
            Arc::new(move |l, lp| {
                let pairing = (l + lp) * (l + lp + 1) / 2 + lp;
                Poly::constant(nth_prime(pairing * 10 + family))
            })
        };
        let pick1 = |family: usize| -> Family1 {
            Arc::new(move |l| Poly::constant(nth_prime(l * 10 + family)))
        };
        MasterWeights {
            a: pick2(0),
            b: pick2(1),
            c: pick2(2),
            d: pick2(3),
            f: pick2(4),
            ah: pick2(5),
            bh: pick2(6),
            mu: pick1(7),
            nu: pick1(8),
            e: pick1(9),
        }
    }

    /// All families identically one (counting specialization).
    pub fn all_ones() -> Self {
        let one2: Family2 = Arc::new(|_, _| Poly::one());
        let one1: Family1 = Arc::new(|_| Poly::one());
        MasterWeights {
            a: one2.clone(),
            b: one2.clone(),
            c: one2.clone(),
            d: one2.clone(),
            f: one2.clone(),
            ah: one2.clone(),
            bh: one2,
            mu: one1.clone(),
            nu: one1.clone(),
            e: one1,
        }
    }

    /// Simple-variable specialization a -> x1, b -> y1, c -> x2, d -> y2,
    /// f -> w (collapses the master letters to node-type weights).
    pub fn simple(sw: &SimpleWeights) -> Self {
        let constant2 = |p: Poly| -> Family2 { Arc::new(move |_, _| p.clone()) };
        let constant1 = |p: Poly| -> Family1 { Arc::new(move |_| p.clone()) };
        MasterWeights {
            a: constant2(sw.x1.clone()),
            b: constant2(sw.y1.clone()),
            c: constant2(sw.x2.clone()),
            d: constant2(sw.y2.clone()),
            f: constant2(sw.w.clone()),
            ah: constant2(sw.x1.clone()),
            bh: constant2(sw.y1.clone()),
            mu: constant1(Poly::one()),
            nu: constant1(Poly::one()),
            e: constant1(sw.z.clone()),
        }
    }

    pub fn with_e(mut self, e: Family1) -> Self {
        self.e = e;
        self
    }

    pub fn with_f(mut self, f: Family2) -> Self {
        self.f = f;
        self
    }
}

pub fn nth_prime(n: usize) -> i64 {
    // enough primes for index bounds used in checks; extend the sieve on
    // demand
    let mut primes = Vec::with_capacity(n + 1);
    let mut candidate: i64 = 2;
    while primes.len() <= n {
        if primes.iter().all(|&p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes[n]
}

/// Node-type polynomial of increasing binary trees:
/// x1 for 11, y1 for 00, x2 for 10, y2 for 01.
pub fn p_bt(n: usize, w: &SimpleWeights) -> Poly {
    let mut total = Poly::zero();
    for_each_binary(n, &mut |t| {
        let mut prod = Poly::one();
        for v in 1..=n {
            let weight = match (t.left(v).is_some(), t.right(v).is_some()) {
                (true, true) => &w.x1,
                (false, false) => &w.y1,
                (true, false) => &w.x2,
                (false, true) => &w.y2,
            };
            prod = &prod * weight;
        }
        total = &total + &prod;
    });
    total
}

/// Node-type polynomial of RTs: as `p_bt` plus w for the middle-child type.
pub fn p_rt(n: usize, w: &SimpleWeights) -> Poly {
    let mut total = Poly::zero();
    for_each_rt(n, &mut |t| {
        let mut prod = Poly::one();
        for v in 1..=n {
            let weight = match t.node_type(v) {
                (true, false, true) => &w.x1,
                (false, false, false) => &w.y1,
                (true, false, false) => &w.x2,
                (false, false, true) => &w.y2,
                (false, true, false) => &w.w,
                _ => unreachable!("restricted ternary node type"),
            };
            prod = &prod * weight;
        }
        total = &total + &prod;
    });
    total
}

/// Node-type and label-surplus polynomial of IRTs; node-type letters go to
/// non-root vertices only, and z carries the label surplus.
pub fn p_irt(n: usize, w: &SimpleWeights) -> Poly {
    let mut total = Poly::zero();
    for_each_irt(n, &mut |t| {
        total = &total + &p_irt_tree_weight(t, w);
    });
    total
}

/// The p-weight of one IRT.
pub fn p_irt_tree_weight(t: &IrtTree, w: &SimpleWeights) -> Poly {
    let mut prod = Poly::one();
    for i in 0..t.num_vertices() {
        if i > 0 {
            let weight = match t.node_type(i) {
                (true, false, true) => &w.x1,
                (false, false, false) => &w.y1,
                (true, false, false) => &w.x2,
                (false, false, true) => &w.y2,
                (false, true, false) => &w.w,
                _ => unreachable!("restricted ternary node type"),
            };
            prod = &prod * weight;
        }
        prod = &prod * &w.z.pow(t.vertex(i).surplus() as u32);
    }
    prod
}

/// Master polynomial of increasing binary trees: letters a, b, c, d for node
/// types 11, 00, 10, 01, subscripted by (croix, nid) under traversal `alg`.
pub fn q_bt(n: usize, w: &MasterWeights, alg: Traversal) -> Poly {
    let mut total = Poly::zero();
    for_each_binary(n, &mut |t| {
        let stats = all_vertex_stats(t, alg).expect("traversal valid for binary");
        let mut prod = Poly::one();
        for s in stats.values() {
            let letter = match s.node_type.as_str() {
                "11" => &w.a,
                "00" => &w.b,
                "10" => &w.c,
                "01" => &w.d,
                _ => unreachable!(),
            };
            prod = &prod * &letter(s.croix, s.nid);
        }
        total = &total + &prod;
    });
    total
}

/// Master polynomial of RTs: as `q_bt` plus the letter f for node type 010.
pub fn q_rt(n: usize, w: &MasterWeights, alg: Traversal) -> Poly {
    let mut total = Poly::zero();
    for_each_rt(n, &mut |t| {
        let stats = all_vertex_stats(t, alg).expect("traversal valid for ternary");
        let mut prod = Poly::one();
        for s in stats.values() {
            let letter = match s.node_type.as_str() {
                "101" => &w.a,
                "000" => &w.b,
                "100" => &w.c,
                "001" => &w.d,
                "010" => &w.f,
                _ => unreachable!(),
            };
            prod = &prod * &letter(s.croix, s.nid);
        }
        total = &total + &prod;
    });
    total
}

/// Master polynomial of RTs with hatted left-status letters and lev-indexed
/// right-status letters; vertex n carries no weight, replaced by the
/// prefactor mu_0 bh_00.
pub fn q_star_rt(n: usize, w: &MasterWeights, alg: Traversal) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let prefactor = &(w.mu)(0) * &(w.bh)(0, 0);
    let mut total = Poly::zero();
    for_each_rt(n, &mut |t| {
        let stats = all_vertex_stats(t, alg).expect("traversal valid for ternary");
        let mut prod = Poly::one();
        for v in 1..n {
            let s = &stats[&v];
            let weight = match s.node_type.as_str() {
                "101" => &(w.ah)(s.croix, s.nid) * &(w.mu)(s.lev + 1),
                "000" => &(w.bh)(s.croix, s.nid) * &(w.nu)(s.lev - 1),
                "100" => &(w.ah)(s.croix, s.nid) * &(w.nu)(s.lev),
                "001" => &(w.bh)(s.croix, s.nid) * &(w.mu)(s.lev),
                "010" => (w.f)(s.croix, s.nid),
                _ => unreachable!(),
            };
            prod = &prod * &weight;
        }
        total = &total + &prod;
    });
    &prefactor * &total
}

/// The q-weight of one IRT: the product over vertices of the four-case
/// vertex weight (trivial-tree root, nontrivial root, final vertex,
/// interior vertex).
pub fn q_irt_tree_weight(t: &IrtTree, w: &MasterWeights, alg: Traversal) -> Poly {
    let n = t.n();
    let stats = irt_vertex_stats(t, alg).expect("traversal valid for ternary");
    let m = t.num_vertices() - 1;
    let mut prod = Poly::one();
    for i in 0..=m {
        let vx = t.vertex(i);
        let j = vx.surplus() as u32;
        let weight = if vx.lo == 0 && vx.hi == n {
            (w.e)(0).pow(n as u32)
        } else if vx.lo == 0 {
            &(w.mu)(0) * &(w.e)(0).pow(j)
        } else if vx.hi == n {
            &(w.bh)(0, 0) * &(w.e)(0).pow(j)
        } else {
            let s = &stats[&i];
            match s.node_type.as_str() {
                "101" => &(&(w.ah)(s.croix, s.nid) * &(w.mu)(s.lev + 1)) * &(w.e)(s.lev + 1).pow(j),
                "000" => &(&(w.bh)(s.croix, s.nid) * &(w.nu)(s.lev - 1)) * &(w.e)(s.lev).pow(j),
                "100" => &(&(w.ah)(s.croix, s.nid) * &(w.nu)(s.lev)) * &(w.e)(s.lev + 1).pow(j),
                "001" => &(&(w.bh)(s.croix, s.nid) * &(w.mu)(s.lev)) * &(w.e)(s.lev).pow(j),
                "010" => (w.f)(s.croix, s.nid),
                _ => unreachable!(),
            }
        };
        prod = &prod * &weight;
    }
    prod
}

/// Master polynomial of IRTs.
pub fn q_irt(n: usize, w: &MasterWeights, alg: Traversal) -> Poly {
    let mut total = Poly::zero();
    for_each_irt(n, &mut |t| {
        total = &total + &q_irt_tree_weight(t, w, alg);
    });
    total
}

/// Master polynomial over permutations: letters a, b, c, d for valleys,
/// peaks, double descents and double ascents, subscripted by the
/// letter-refined pattern pair (2-13, 31-2).
pub fn p_perm_star(n: usize, w: &MasterWeights) -> Poly {
    let mut total = Poly::zero();
    for_each_permutation(n, &mut |sigma| {
        let mut prod = Poly::one();
        for l in 1..=n {
            let i = sigma.position_of(l);
            let letter = match linear_class(sigma, i) {
                LinearClass::Valley => &w.a,
                LinearClass::Peak => &w.b,
                LinearClass::DoubleDescent => &w.c,
                LinearClass::DoubleAscent => &w.d,
            };
            let croix = pattern_count(sigma, l, PatternTag::TwoDashOneThree);
            let nid = pattern_count(sigma, l, PatternTag::ThreeOneDashTwo);
            prod = &prod * &letter(croix, nid);
        }
        total = &total + &prod;
    });
    total
}
