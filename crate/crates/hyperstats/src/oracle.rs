//! Ground-truth oracles.
//!
//! * Brute-force expectations on tiny instances by enumerating every stub
//!   matching (all `S!` stub permutations; both sides independently in the
//!   directed case) and averaging the statistic counts exactly.
//! * Finite checks of the two combinatorial identities underlying the
//!   theorems: both sides are integers and must match exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combin::{
    enumerate_r, enumerate_r_hat, factorial, multiplicity_vectors, CombinError,
};
use crate::model::{
    DirectedDegreeSequence, DirectedHypergraph, Hypergraph, UndirectedDegreeSequence,
};
use crate::rational::ExactValue;

/// Largest stub total enumerable in the undirected oracle (8! matchings).
pub const MAX_UNDIRECTED_STUBS: u64 = 8;
/// Largest per-side stub total in the directed oracle (6!·6! matchings).
pub const MAX_DIRECTED_STUBS: u64 = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for exhaustive enumeration: {stubs} stubs > cap {cap}")]
    TooLarge { stubs: u64, cap: u64 },
    #[error(transparent)]
    Combin(#[from] CombinError),
}

/// Exact expectations from exhaustive matching enumeration (undirected).
#[derive(Debug, Clone)]
pub struct UndirectedTruth {
    pub degenerate: ExactValue,
    pub multi_pairs: ExactValue,
    pub matchings: u64,
}

/// Exact expectations from exhaustive matching enumeration (directed).
#[derive(Debug, Clone)]
pub struct DirectedTruth {
    pub degenerate: ExactValue,
    pub multi_pairs: ExactValue,
    pub self_loops: ExactValue,
    pub weak_self_loops: ExactValue,
    pub matchings: u64,
}

fn all_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut arr = items.to_vec();
    let mut out = Vec::new();
    heap(&mut arr, items.len(), &mut out);
    out
}

fn heap(arr: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

fn stub_list(degrees: &[u64]) -> Vec<usize> {
    let mut stubs = Vec::new();
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat(v).take(d as usize));
    }
    stubs
}

/// Averages the statistics over every one of the `S!` stub matchings.
pub fn brute_force_undirected(
    ds: &UndirectedDegreeSequence,
) -> Result<UndirectedTruth, OracleError> {
    let s = ds.total_stubs();
    if s > MAX_UNDIRECTED_STUBS {
        return Err(OracleError::TooLarge {
            stubs: s,
            cap: MAX_UNDIRECTED_STUBS,
        });
    }
    let stubs = stub_list(ds.vertex_degrees());
    let perms = all_permutations(&stubs);
    let matchings = perms.len() as u64;
    let (mut dh_sum, mut m_sum) = (0u64, 0u64);
    for seq in &perms {
        let mut edges = Vec::with_capacity(ds.num_edges());
        let mut pos = 0usize;
        for &d in ds.edge_degrees() {
            edges.push(seq[pos..pos + d as usize].to_vec());
            pos += d as usize;
        }
        let h = Hypergraph::new(ds.num_vertices(), edges);
        dh_sum += h.count_degenerate();
        m_sum += h.count_multi_pairs();
    }
    let denom = ExactValue::from(matchings);
    Ok(UndirectedTruth {
        degenerate: ExactValue::from(dh_sum) / denom.clone(),
        multi_pairs: ExactValue::from(m_sum) / denom,
        matchings,
    })
}

/// Averages the statistics over every pair of (out, in) stub matchings.
pub fn brute_force_directed(
    dds: &DirectedDegreeSequence,
) -> Result<DirectedTruth, OracleError> {
    let (s_out, s_in) = (dds.total_out_stubs(), dds.total_in_stubs());
    if s_out > MAX_DIRECTED_STUBS || s_in > MAX_DIRECTED_STUBS {
        return Err(OracleError::TooLarge {
            stubs: s_out.max(s_in),
            cap: MAX_DIRECTED_STUBS,
        });
    }
    let out_perms = all_permutations(&stub_list(dds.out_degrees()));
    let in_perms = all_permutations(&stub_list(dds.in_degrees()));
    let matchings = (out_perms.len() * in_perms.len()) as u64;
    let (mut dh_sum, mut m_sum, mut s_sum, mut ws_sum) = (0u64, 0u64, 0u64, 0u64);
    for seq_out in &out_perms {
        for seq_in in &in_perms {
            let mut edges = Vec::with_capacity(dds.num_edges());
            let (mut po, mut ph) = (0usize, 0usize);
            for (&dt, &dh) in dds.tail_degrees().iter().zip(dds.head_degrees()) {
                let tail = seq_out[po..po + dt as usize].to_vec();
                po += dt as usize;
                let head = seq_in[ph..ph + dh as usize].to_vec();
                ph += dh as usize;
                edges.push((tail, head));
            }
            let h = DirectedHypergraph::new(dds.num_vertices(), edges);
            dh_sum += h.count_degenerate();
            m_sum += h.count_multi_pairs();
            s_sum += h.count_self_loops();
            ws_sum += h.count_weak_self_loops();
        }
    }
    let denom = ExactValue::from(matchings);
    Ok(DirectedTruth {
        degenerate: ExactValue::from(dh_sum) / denom.clone(),
        multi_pairs: ExactValue::from(m_sum) / denom.clone(),
        self_loops: ExactValue::from(s_sum) / denom.clone(),
        weak_self_loops: ExactValue::from(ws_sum) / denom,
        matchings,
    })
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

/// A finite family of functions `f^(1), …, f^(max_order) : V → ℕ` given by
/// value tables.
#[derive(Debug, Clone)]
pub struct FunctionTable {
    /// `values[i][v]` is `f^(i+1)(v)`.
    values: Vec<Vec<u64>>,
}

impl FunctionTable {
    /// `values[i]` must all have the same length (one entry per vertex).
    pub fn new(values: Vec<Vec<u64>>) -> Option<Self> {
        let n = values.first()?.len();
        if n == 0 || values.iter().any(|row| row.len() != n) {
            return None;
        }
        Some(Self { values })
    }

    pub fn max_order(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn num_vertices(&self) -> usize {
        self.values[0].len()
    }

    /// `f^(order)(v)`; zero beyond the tabulated orders.
    pub fn eval(&self, order: u64, v: usize) -> u64 {
        self.values
            .get(order as usize - 1)
            .map_or(0, |row| row[v])
    }

    /// `Σ_v Π_i f^(i)(v)^{y_i}` — the exact population moment (this is
    /// `n·E[…]` for a uniform vertex `U`).
    fn moment(&self, exponents: &[(u64, u64)]) -> BigInt {
        (0..self.num_vertices())
            .map(|v| {
                let mut t = BigInt::one();
                for &(order, e) in exponents {
                    if e > 0 {
                        t *= BigInt::from(self.eval(order, v)).pow(e as u32);
                    }
                }
                t
            })
            .sum()
    }
}

/// Result of evaluating one identity: both sides must agree and be integer.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: ExactValue,
    pub holds: bool,
}

fn multiset_weight(tuple: &[usize], n: usize) -> (Vec<u64>, Vec<usize>) {
    // multiplicity per vertex and the distinct vertices present
    let mut mult = vec![0u64; n];
    for &v in tuple {
        mult[v] += 1;
    }
    let distinct = (0..n).filter(|&v| mult[v] > 0).collect();
    (mult, distinct)
}

fn d_weight(mult: &[u64], distinct: &[usize], delta: u64) -> BigInt {
    let mut denom = BigInt::one();
    for &v in distinct {
        denom *= factorial(mult[v]);
    }
    factorial(delta) / denom
}

fn tuples(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut cur = vec![0usize; len];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Finite check of the single-sequence summation identity: direct
/// enumeration over all `δ`-tuples of vertices against the multiplicity-
/// vector / vector-partition expansion.
pub fn check_corollary_identity(
    table: &FunctionTable,
    delta: u64,
    w: u64,
) -> Result<IdentityCheck, CombinError> {
    let n = table.num_vertices();
    // left-hand side: direct enumeration
    let mut lhs = BigInt::zero();
    tuples(n, delta as usize, |tuple| {
        let (mult, distinct) = multiset_weight(tuple, n);
        let d = d_weight(&mult, &distinct, delta);
        let mut term = d.pow(w as u32);
        for &v in &distinct {
            term *= table.eval(mult[v], v);
        }
        lhs += term;
    });
    // right-hand side: expansion over multiplicity vectors and partitions
    let mut rhs = ExactValue::zero();
    for a in multiplicity_vectors(delta)? {
        let mut pref = ExactValue::from(factorial(delta)).pow(1 + w as u32);
        for (k, &ak) in a.counts().iter().enumerate() {
            if ak > 0 {
                pref = pref
                    / ExactValue::from(factorial(k as u64 + 1)).pow((1 + w) as u32 * ak as u32);
            }
        }
        let mut inner = ExactValue::zero();
        for part in enumerate_r(&a)? {
            let mut term = ExactValue::one();
            for (y, c) in part.parts() {
                let sy: u64 = y.iter().sum();
                let exps: Vec<(u64, u64)> = y
                    .iter()
                    .enumerate()
                    .map(|(i, &yi)| (i as u64 + 1, yi))
                    .collect();
                let mut base = ExactValue::from(table.moment(&exps))
                    * ExactValue::from(factorial(sy - 1));
                for &yi in y {
                    if yi > 1 {
                        base = base / ExactValue::from(factorial(yi));
                    }
                }
                term = term * base.pow(*c as u32) / ExactValue::from(factorial(*c));
            }
            if part.sign_exponent() % 2 == 1 {
                term = -term;
            }
            inner += term;
        }
        rhs += pref * inner;
    }
    let holds = rhs.is_integer() && rhs == ExactValue::from(lhs.clone());
    Ok(IdentityCheck { lhs, rhs, holds })
}

/// Finite check of the two-sequence summation identity: the outer tuple
/// ranges over all `δ₁`-tuples, the inner tuple over `δ₂`-tuples avoiding
/// every vertex used by the outer one.
pub fn check_main_lemma_identity(
    table1: &FunctionTable,
    table2: &FunctionTable,
    delta1: u64,
    delta2: u64,
    w: u64,
) -> Result<IdentityCheck, CombinError> {
    assert_eq!(table1.num_vertices(), table2.num_vertices());
    let n = table1.num_vertices();
    // left-hand side
    let mut lhs = BigInt::zero();
    tuples(n, delta1 as usize, |vtuple| {
        let (vmult, vdistinct) = multiset_weight(vtuple, n);
        let dv = d_weight(&vmult, &vdistinct, delta1);
        let mut f1 = BigInt::one();
        for &v in &vdistinct {
            f1 *= table1.eval(vmult[v], v);
        }
        if f1.is_zero() {
            return;
        }
        let allowed: Vec<usize> = (0..n).filter(|&u| vmult[u] == 0).collect();
        if allowed.is_empty() && delta2 > 0 {
            return;
        }
        let mut inner = BigInt::zero();
        tuples(allowed.len(), delta2 as usize, |idx| {
            let wtuple: Vec<usize> = idx.iter().map(|&j| allowed[j]).collect();
            let (wmult, wdistinct) = multiset_weight(&wtuple, n);
            let dw = d_weight(&wmult, &wdistinct, delta2);
            let mut f2 = BigInt::one();
            for &u in &wdistinct {
                f2 *= table2.eval(wmult[u], u);
            }
            inner += dw.pow(w as u32) * f2;
        });
        lhs += dv.pow(w as u32) * f1 * inner;
    });
    // right-hand side
    let mut rhs = ExactValue::zero();
    for a in multiplicity_vectors(delta1)? {
        let mut pref_a = ExactValue::from(factorial(delta1)).pow(1 + w as u32);
        for (k, &ak) in a.counts().iter().enumerate() {
            if ak > 0 {
                pref_a = pref_a
                    / ExactValue::from(factorial(k as u64 + 1)).pow((1 + w) as u32 * ak as u32);
            }
        }
        for b in multiplicity_vectors(delta2)? {
            let mut pref_b = ExactValue::from(factorial(delta2)).pow(1 + w as u32);
            for (k, &bk) in b.counts().iter().enumerate() {
                if bk > 0 {
                    pref_b = pref_b / ExactValue::from(factorial(k as u64 + 1))
                        .pow((1 + w) as u32 * bk as u32);
                }
            }
            let mut inner = ExactValue::zero();
            for part in enumerate_r_hat(&a, &b)? {
                let mut term = ExactValue::one();
                for ((y, z), c) in part.parts() {
                    let weight: u64 = y.iter().sum::<u64>() + z.iter().sum::<u64>();
                    // joint moment over both function families
                    let moment: BigInt = (0..n)
                        .map(|v| {
                            let mut t = BigInt::one();
                            for (i, &yi) in y.iter().enumerate() {
                                if yi > 0 {
                                    t *= BigInt::from(table1.eval(i as u64 + 1, v))
                                        .pow(yi as u32);
                                }
                            }
                            for (j, &zj) in z.iter().enumerate() {
                                if zj > 0 {
                                    t *= BigInt::from(table2.eval(j as u64 + 1, v))
                                        .pow(zj as u32);
                                }
                            }
                            t
                        })
                        .sum();
                    let mut base = ExactValue::from(moment)
                        * ExactValue::from(factorial(weight - 1));
                    for &yi in y {
                        if yi > 1 {
                            base = base / ExactValue::from(factorial(yi));
                        }
                    }
                    for &zj in z {
                        if zj > 1 {
                            base = base / ExactValue::from(factorial(zj));
                        }
                    }
                    term = term * base.pow(*c as u32) / ExactValue::from(factorial(*c));
                }
                if part.sign_exponent() % 2 == 1 {
                    term = -term;
                }
                inner += term;
            }
            rhs += pref_a.clone() * pref_b * inner;
        }
    }
    let holds = rhs.is_integer() && rhs == ExactValue::from(lhs.clone());
    Ok(IdentityCheck { lhs, rhs, holds })
}

// ---------------------------------------------------------------------------
// Instance catalogs and randomized trial runners
// ---------------------------------------------------------------------------

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_composition(rng: &mut impl Rng, total: u64, parts: u64) -> Vec<u64> {
    // composition of `total` into `parts` positive parts
    let mut sizes = vec![1u64; parts as usize];
    for _ in 0..(total - parts) {
        let i = rng.random_range(0..parts as usize);
        sizes[i] += 1;
    }
    sizes
}

fn random_degrees(rng: &mut impl Rng, total: u64, n: usize) -> Vec<u64> {
    // `total` stubs thrown uniformly over `n` vertices (zeros allowed)
    let mut d = vec![0u64; n];
    for _ in 0..total {
        d[rng.random_range(0..n)] += 1;
    }
    d
}

/// Deterministic catalog of small undirected instances (stub total ≤ 8),
/// including all-size-1, single-vertex, degree-0 and mixed-size cases.
pub fn undirected_catalog() -> Vec<UndirectedDegreeSequence> {
    let mut out = vec![
        UndirectedDegreeSequence::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap(),
        UndirectedDegreeSequence::new(vec![4], vec![2, 2]).unwrap(),
        UndirectedDegreeSequence::new(vec![4, 2, 1, 1], vec![4, 2, 2]).unwrap(),
        UndirectedDegreeSequence::new(vec![2, 1, 1], vec![2, 2]).unwrap(),
        UndirectedDegreeSequence::new(vec![2, 2], vec![2, 2]).unwrap(),
        UndirectedDegreeSequence::new(vec![3, 3], vec![3, 3]).unwrap(),
        UndirectedDegreeSequence::new(vec![2, 2, 2], vec![3, 3]).unwrap(),
        UndirectedDegreeSequence::new(vec![8], vec![8]).unwrap(),
        UndirectedDegreeSequence::new(vec![1, 1, 1, 1, 1, 1], vec![6]).unwrap(),
        UndirectedDegreeSequence::new(vec![2, 0, 0], vec![1, 1]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dac1e);
    while out.len() < 55 {
        let s = rng.random_range(2..=8u64);
        let m = rng.random_range(1..=s.min(3));
        let deltas = random_composition(&mut rng, s, m);
        let n = rng.random_range(1..=4usize);
        let d = random_degrees(&mut rng, s, n);
        out.push(UndirectedDegreeSequence::new(d, deltas).unwrap());
    }
    out
}

/// Deterministic catalog of small directed instances (≤ 6 stubs per side).
pub fn directed_catalog() -> Vec<DirectedDegreeSequence> {
    let mut out = vec![
        DirectedDegreeSequence::new(vec![1, 1], vec![1, 1], vec![1, 1], vec![1, 1]).unwrap(),
        DirectedDegreeSequence::new(vec![2], vec![2], vec![2], vec![2]).unwrap(),
        DirectedDegreeSequence::new(vec![2, 2], vec![2, 2], vec![2, 2], vec![2, 2]).unwrap(),
        DirectedDegreeSequence::new(vec![3, 1], vec![2, 2], vec![2, 2], vec![2, 2]).unwrap(),
        DirectedDegreeSequence::new(vec![2, 1], vec![1, 2], vec![2, 1], vec![1, 2]).unwrap(),
        DirectedDegreeSequence::new(vec![1, 1, 1], vec![3, 0, 0], vec![3], vec![3]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xd14ec7);
    while out.len() < 34 {
        let m = rng.random_range(1..=3u64);
        let s_out = rng.random_range(m..=6u64);
        let s_in = rng.random_range(m..=6u64);
        let tails = random_composition(&mut rng, s_out, m);
        let heads = random_composition(&mut rng, s_in, m);
        let n = rng.random_range(1..=3usize);
        let dout = random_degrees(&mut rng, s_out, n);
        let din = random_degrees(&mut rng, s_in, n);
        out.push(DirectedDegreeSequence::new(dout, din, tails, heads).unwrap());
    }
    out
}

/// Outcome of a batch of randomized identity trials.
#[derive(Debug, Clone, Copy)]
pub struct IdentityTrialReport {
    pub trials: u64,
    pub failures: u64,
}

fn random_table(rng: &mut impl Rng, orders: u64, n: usize) -> FunctionTable {
    let values = (0..orders)
        .map(|_| (0..n).map(|_| rng.random_range(0..=3u64)).collect())
        .collect();
    FunctionTable::new(values).unwrap()
}

/// Runs `trials` seeded random instances of the single-sequence identity.
pub fn run_corollary_trials(
    trials: u64,
    seed: u64,
    max_delta: u64,
    max_w: u64,
) -> Result<IdentityTrialReport, CombinError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let delta = rng.random_range(1..=max_delta);
        let w = rng.random_range(0..=max_w);
        let n = rng.random_range(2..=4usize);
        let table = random_table(&mut rng, delta, n);
        if !check_corollary_identity(&table, delta, w)?.holds {
            failures += 1;
        }
    }
    Ok(IdentityTrialReport { trials, failures })
}

/// Runs `trials` seeded random instances of the two-sequence identity.
pub fn run_main_lemma_trials(
    trials: u64,
    seed: u64,
    max_delta: u64,
    max_w: u64,
) -> Result<IdentityTrialReport, CombinError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let d1 = rng.random_range(1..=max_delta.min(3));
        let d2 = rng.random_range(1..=max_delta.min(3));
        let w = rng.random_range(0..=max_w);
        let n = rng.random_range(2..=4usize);
        let t1 = random_table(&mut rng, d1, n);
        let t2 = random_table(&mut rng, d2, n);
        if !check_main_lemma_identity(&t1, &t2, d1, d2, w)?.holds {
            failures += 1;
        }
    }
    Ok(IdentityTrialReport { trials, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{
        expected_degenerate, expected_degenerate_directed, expected_multi_pairs,
        expected_multi_pairs_directed, expected_self_loops, expected_weak_self_loops,
    };

    #[test]
    fn undirected_oracle_matches_theorems() {
        let cases = vec![
            (vec![2u64, 1, 1], vec![2u64, 2]),
            (vec![2, 2], vec![2, 2]),
            (vec![3, 3], vec![3, 3]),
            (vec![2, 2, 2], vec![3, 3]),
            (vec![4, 2, 1, 1], vec![4, 2, 2]),
            (vec![1, 1, 1, 1, 1, 1], vec![6]),
        ];
        for (d, deltas) in cases {
            let ds = UndirectedDegreeSequence::new(d.clone(), deltas.clone()).unwrap();
            let truth = brute_force_undirected(&ds).unwrap();
            assert_eq!(
                truth.degenerate,
                expected_degenerate(&ds).unwrap().value,
                "DH mismatch for {d:?} {deltas:?}"
            );
            assert_eq!(
                truth.multi_pairs,
                expected_multi_pairs(&ds).unwrap().value,
                "M mismatch for {d:?} {deltas:?}"
            );
        }
    }

    #[test]
    fn undirected_oracle_frozen_pins() {
        let ds = UndirectedDegreeSequence::new(vec![2, 1, 1], vec![2, 2]).unwrap();
        let t = brute_force_undirected(&ds).unwrap();
        assert_eq!(t.degenerate, ExactValue::ratio(1, 3));
        let ds = UndirectedDegreeSequence::new(vec![2, 2], vec![2, 2]).unwrap();
        let t = brute_force_undirected(&ds).unwrap();
        assert_eq!(t.multi_pairs, ExactValue::ratio(2, 3));
    }

    #[test]
    fn directed_oracle_matches_theorems() {
        let cases = vec![
            (vec![1u64, 1], vec![1u64, 1], vec![1u64, 1], vec![1u64, 1]),
            (vec![2, 1], vec![1, 2], vec![2, 1], vec![2, 1]),
            (vec![2, 2], vec![2, 2], vec![2, 2], vec![2, 2]),
            (vec![3, 1], vec![2, 2], vec![2, 2], vec![2, 2]),
            (vec![2, 1, 1], vec![1, 1, 2], vec![2, 2], vec![2, 2]),
        ];
        for (out, inn, tails, heads) in cases {
            let dds = DirectedDegreeSequence::new(
                out.clone(),
                inn.clone(),
                tails.clone(),
                heads.clone(),
            )
            .unwrap();
            let truth = brute_force_directed(&dds).unwrap();
            assert_eq!(
                truth.degenerate,
                expected_degenerate_directed(&dds).unwrap().value,
                "DH mismatch for {out:?} {inn:?} {tails:?} {heads:?}"
            );
            assert_eq!(
                truth.multi_pairs,
                expected_multi_pairs_directed(&dds).unwrap().value,
                "M mismatch for {out:?} {inn:?} {tails:?} {heads:?}"
            );
            assert_eq!(
                truth.self_loops,
                expected_self_loops(&dds).unwrap().value,
                "S mismatch for {out:?} {inn:?} {tails:?} {heads:?}"
            );
            assert_eq!(
                truth.weak_self_loops,
                expected_weak_self_loops(&dds).unwrap().value,
                "WS mismatch for {out:?} {inn:?} {tails:?} {heads:?}"
            );
        }
    }

    #[test]
    fn oracle_rejects_large_instances() {
        let ds = UndirectedDegreeSequence::new(vec![3; 3], vec![3; 3]).unwrap();
        assert!(matches!(
            brute_force_undirected(&ds),
            Err(OracleError::TooLarge { stubs: 9, .. })
        ));
    }

    #[test]
    fn catalogs_fit_oracle_caps() {
        let u = undirected_catalog();
        assert!(u.len() >= 50);
        for ds in &u {
            assert!(ds.total_stubs() <= MAX_UNDIRECTED_STUBS);
        }
        let d = directed_catalog();
        assert!(d.len() >= 30);
        for dds in &d {
            assert!(dds.total_out_stubs() <= MAX_DIRECTED_STUBS);
            assert!(dds.total_in_stubs() <= MAX_DIRECTED_STUBS);
        }
    }

    #[test]
    fn trial_runners_pass() {
        let r = run_corollary_trials(10, 5, 4, 2).unwrap();
        assert_eq!(r.failures, 0);
        let r = run_main_lemma_trials(5, 5, 3, 1).unwrap();
        assert_eq!(r.failures, 0);
    }

    #[test]
    fn corollary_identity_holds() {
        // f^(1)(v) = v+1, f^(2)(v) = v²
        let table = FunctionTable::new(vec![vec![1, 2, 3], vec![0, 1, 4]]).unwrap();
        for delta in 1..=4u64 {
            for w in 0..=2u64 {
                let c = check_corollary_identity(&table, delta, w).unwrap();
                assert!(c.holds, "delta={delta} w={w}: {} vs {}", c.lhs, c.rhs);
            }
        }
    }

    #[test]
    fn main_lemma_identity_holds() {
        let t1 = FunctionTable::new(vec![vec![1, 2, 0], vec![2, 1, 1]]).unwrap();
        let t2 = FunctionTable::new(vec![vec![0, 1, 3], vec![1, 1, 2]]).unwrap();
        for (d1, d2) in [(1u64, 1u64), (2, 1), (1, 2), (2, 2)] {
            for w in 0..=1u64 {
                let c = check_main_lemma_identity(&t1, &t2, d1, d2, w).unwrap();
                assert!(
                    c.holds,
                    "d1={d1} d2={d2} w={w}: {} vs {}",
                    c.lhs, c.rhs
                );
            }
        }
    }
}
