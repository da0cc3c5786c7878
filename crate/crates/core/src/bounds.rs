//! Exact evaluation of the union-bound functional for random two-colourings
//! of non-commuting graphs, and the integer inequalities behind the large-order
//! regime.
//!
//! For a pair `x, y` with `τ = τ(x, y)` common neighbours, a uniform random
//! two-colouring leaves fewer than `k` internally disjoint rainbow paths of
//! length at most 2 with probability
//!
//! * `Σ_{i=0}^{k-2} C(τ, i) / 2^τ` if `x ~ y` (the edge itself is one path),
//! * `Σ_{i=0}^{k-1} C(τ, i) / 2^τ` otherwise.
//!
//! Summing over unordered pairs gives the failure bound. Fractional powers
//! `2^{n/6}` never get evaluated; comparisons raise both sides to the sixth
//! power in big integers.

use crate::group::Group;
use crate::ncgraph::{noncommuting_graph, NcGraphError};
use crate::scalar::{ExactRational, Scalar};
use crate::suite::NamedGroup;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(u32),
    #[error(transparent)]
    Graph(#[from] NcGraphError),
}

/// Failure bound for rainbow-k-connectivity of `Γ(G)` in an arbitrary exact
/// scalar type.
pub fn failure_bound_in<T: Scalar>(group: &Group, k: u32) -> Result<T, BoundError> {
    if k < 2 {
        return Err(BoundError::InvalidK(k));
    }
    let ncg = noncommuting_graph(group)?;
    let max_tau = group.order();
    // pair counts by τ, for adjacent and non-adjacent pairs
    let mut adjacent = vec![0u64; max_tau + 1];
    let mut apart = vec![0u64; max_tau + 1];
    for (x, y) in ncg.pairs() {
        let tau = ncg.tau(x, y);
        if ncg.graph().is_adjacent(x, y) {
            adjacent[tau] += 1;
        } else {
            apart[tau] += 1;
        }
    }
    let two = T::one() + T::one();
    let mut total = T::zero();
    for tau in 0..=max_tau {
        if adjacent[tau] == 0 && apart[tau] == 0 {
            continue;
        }
        let scale = num_traits::pow(two.clone(), tau);
        let partial = binomial_prefix_sums::<T>(tau, k as usize);
        let adj_term = T::from_u64(adjacent[tau]).unwrap() * partial[k as usize - 2].clone();
        let apart_term = T::from_u64(apart[tau]).unwrap() * partial[k as usize - 1].clone();
        total = total + (adj_term + apart_term) / scale;
    }
    Ok(total)
}

/// `[Σ_{i<=0} C(τ,i), Σ_{i<=1} C(τ,i), ..., Σ_{i<=k-1} C(τ,i)]`.
fn binomial_prefix_sums<T: Scalar>(tau: usize, k: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(k);
    let mut binom = T::one();
    let mut acc = T::zero();
    for i in 0..k {
        if i > 0 {
            binom = binom * T::from_usize(tau + 1 - i.min(tau + 1)).unwrap() / T::from_usize(i).unwrap();
        }
        acc = acc + binom.clone();
        out.push(acc.clone());
    }
    out
}

pub fn failure_bound(group: &Group, k: u32) -> Result<ExactRational, BoundError> {
    failure_bound_in::<ExactRational>(group, k)
}

/// The k = 2 functional by a second route: ordered
/// pairs of distinct non-central elements, `τ` from the union of centralizer
/// element sets, commuting pairs weighted `(1 + τ) / 2^τ`, the rest `1 / 2^τ`,
/// and the total halved.
pub fn failure_bound_ordered_pairs(group: &Group) -> ExactRational {
    let order = group.order();
    let elements: Vec<usize> = (0..order).collect();
    let centralizer = |g: usize| -> HashSet<usize> {
        elements.iter().copied().filter(|&x| group.mul(x, g) == group.mul(g, x)).collect()
    };
    let cents: Vec<HashSet<usize>> = elements.iter().map(|&g| centralizer(g)).collect();
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let pow_half = |t: usize| num_traits::pow(half.clone(), t);
    let mut k_sum = ExactRational::zero();
    let mut s_sum = ExactRational::zero();
    for i in 0..order {
        if cents[i].len() == order {
            continue;
        }
        for j in 0..order {
            if cents[j].len() == order || i == j {
                continue;
            }
            let t = order - cents[i].union(&cents[j]).count();
            let abelian = group.mul(i, j) == group.mul(j, i);
            if abelian {
                s_sum += pow_half(t) + ExactRational::from_integer(BigInt::from(t)) * pow_half(t);
            } else {
                k_sum += pow_half(t);
            }
        }
    }
    (s_sum + k_sum) / ExactRational::from_integer(BigInt::from(2))
}

/// Decides `n^3 < 2^{n/6 + 2}` exactly as `n^18 < 2^{n + 12}`.
pub fn coarse_bound_holds(n: u64) -> bool {
    let lhs = BigUint::from(n).pow(18);
    let rhs = BigUint::one() << (n as usize + 12);
    lhs < rhs
}

/// The bound `¼ (n - z)(n² - 2z - zn - 2) · (1/2)^{n/6}` for a group of order
/// `n` with centre of order `z`, kept as a polynomial prefactor and a dyadic
/// exponent `n/6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidBound {
    pub n: u64,
    pub z: u64,
    pub prefactor: ExactRational,
}

pub fn mid_bound(n: u64, z: u64) -> MidBound {
    assert!(z >= 1 && z <= n, "need 1 <= z <= n");
    let (nb, zb) = (BigInt::from(n), BigInt::from(z));
    let poly = (&nb - &zb) * (&nb * &nb - 2 * &zb - &zb * &nb - 2);
    MidBound { n, z, prefactor: ExactRational::new(poly, BigInt::from(4)) }
}

impl MidBound {
    /// The full value, when `n/6` is an integer.
    pub fn value(&self) -> Option<ExactRational> {
        self.n.is_multiple_of(6).then(|| {
            let denom = BigInt::one() << (self.n as usize / 6);
            &self.prefactor / ExactRational::from_integer(denom)
        })
    }

    /// Whether `prefactor · 2^{-n/6} < 1`.
    pub fn less_than_one(&self) -> bool {
        if !self.prefactor.is_positive() {
            return true;
        }
        let num = self.prefactor.numer().pow(6);
        let den = self.prefactor.denom().pow(6) << (self.n as usize);
        num < den
    }

    /// Compares with `n^3 · 2^{-n/6 - 2}`; the dyadic factors cancel, leaving
    /// `4 · prefactor` against `n^3`.
    pub fn cmp_coarse(&self) -> Ordering {
        let lhs = &self.prefactor * ExactRational::from_integer(BigInt::from(4));
        lhs.cmp(&ExactRational::from_integer(BigInt::from(self.n).pow(3)))
    }
}

/// Prefactor of `(1/2)^{n/6}` just before the simplification to
/// [`mid_bound`]: `C(n - z, 2) + n (C(n - z, 2) - ¼ (n - z) n)`.
pub fn union_chain_prefactor(n: u64, z: u64) -> ExactRational {
    let v = BigInt::from(n - z);
    let nb = BigInt::from(n);
    let pairs = ExactRational::new(&v * (&v - 1), BigInt::from(2));
    let edges_floor = ExactRational::new(&v * &nb, BigInt::from(4));
    pairs.clone() + ExactRational::from_integer(nb) * (pairs - edges_floor)
}

fn power_sum(n: u64, k: u32) -> BigUint {
    (2..=k + 1).map(|i| BigUint::from(n).pow(i)).sum()
}

/// Whether `Σ_{i=2}^{k+1} n^i < 2^{n/6}`, decided as `(Σ)^6 < 2^n`.
pub fn threshold_inequality_holds(n: u64, k: u32) -> bool {
    power_sum(n, k).pow(6) < (BigUint::one() << n as usize)
}

/// Smallest `n` beyond which `(n+1)^{6(k+1)} <= 2 n^{6(k+1)}`. From there on
/// `(Σ)^6` at most doubles per step while `2^n` doubles exactly, so the
/// inequality, once true, stays true.
pub fn monotonicity_horizon(k: u32) -> u64 {
    let e = 6 * (k + 1);
    (1u64..)
        .find(|&n| BigUint::from(n + 1).pow(e) <= BigUint::from(2u32) * BigUint::from(n).pow(e))
        .unwrap()
}

/// Smallest `n` such that `Σ_{i=2}^{k+1} m^i < 2^{m/6}` for every `m >= n`.
pub fn threshold_for_k(k: u32) -> u64 {
    assert!(k >= 2, "k must be at least 2");
    let horizon = monotonicity_horizon(k);
    let mut last_failure = 0;
    let mut n = 1;
    loop {
        if threshold_inequality_holds(n, k) {
            if n >= horizon {
                return last_failure + 1;
            }
        } else {
            last_failure = n;
        }
        n += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub id: String,
    pub order: usize,
    pub center_size: usize,
    pub value: ExactRational,
    /// `value >= 1`: the union bound does not certify a good colouring.
    pub flagged: bool,
}

#[derive(Serialize)]
struct BoundReportJson<'a> {
    id: &'a str,
    order: usize,
    center_size: usize,
    p_num: String,
    p_den: String,
    flagged: bool,
}

impl BoundReport {
    pub fn passes(&self) -> bool {
        !self.flagged
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BoundReportJson {
            id: &self.id,
            order: self.order,
            center_size: self.center_size,
            p_num: self.value.numer().to_string(),
            p_den: self.value.denom().to_string(),
            flagged: self.flagged,
        })
        .expect("plain struct serializes")
    }
}

pub fn bound_report(id: &str, group: &Group, k: u32) -> Result<BoundReport, BoundError> {
    let value = failure_bound(group, k)?;
    let flagged = value >= ExactRational::one();
    Ok(BoundReport {
        id: id.to_string(),
        order: group.order(),
        center_size: group.center().len(),
        value,
        flagged,
    })
}

/// k = 2 bound for every group, in input order.
pub fn scan_exception_report(groups: &[NamedGroup]) -> Vec<Result<BoundReport, BoundError>> {
    groups.par_iter().map(|g| bound_report(&g.id, &g.group, 2)).collect()
}
