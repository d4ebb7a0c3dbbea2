//! Exact expectations of the four statistics under uniform stub matching.
//!
//! Each theorem sums one inclusion–exclusion expression per hyperedge (or
//! per unordered edge pair). The expression depends on an edge only through
//! its size `δ_e` — or the pair `(δ_tail, δ_head)` in the directed case —
//! so edges are grouped into degree classes and each class term is computed
//! once. All arithmetic is exact rational.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::combin::{
    enumerate_r, enumerate_r_hat, factorial, ff_moment_double, ff_moment_paired,
    ff_moment_split, multiplicity_vectors, power_moment_sum, reciprocal_falling, CombinError,
    MultiplicityVector,
};
use crate::model::{DirectedDegreeSequence, UndirectedDegreeSequence};
use crate::rational::ExactValue;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error(transparent)]
    Combin(#[from] CombinError),
    #[error("closed form requires every edge to have size 2")]
    NotAGraph,
    #[error("closed form requires every tail and head to have size 1")]
    NotADigraph,
}

/// Which statistic an [`ExpectationReport`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Degenerate,
    MultiPairs,
    SelfLoops,
    WeakSelfLoops,
}

impl Statistic {
    pub fn label(&self) -> &'static str {
        match self {
            Statistic::Degenerate => "degenerate",
            Statistic::MultiPairs => "multi-pairs",
            Statistic::SelfLoops => "self-loops",
            Statistic::WeakSelfLoops => "weak-self-loops",
        }
    }
}

/// Per-degree-class contribution to an expectation.
#[derive(Debug, Clone)]
pub struct ClassTerm {
    /// Human-readable class key, e.g. `"delta=3"` or `"tail=2,head=1"`.
    pub label: String,
    /// Number of edges (or edge pairs) in the class.
    pub count: u64,
    /// Total contribution of the class to the expectation.
    pub value: ExactValue,
}

/// An exact expectation together with its per-class breakdown.
#[derive(Debug, Clone)]
pub struct ExpectationReport {
    pub statistic: Statistic,
    pub directed: bool,
    pub value: ExactValue,
    pub class_terms: Vec<ClassTerm>,
}

fn signed(term: ExactValue, exponent: u64) -> ExactValue {
    if exponent % 2 == 0 {
        term
    } else {
        -term
    }
}

/// Inclusion–exclusion sum over multiplicity vectors of one edge side:
/// `Σ_a (−1)^{Σ(i−1)a_i} Π_i (Σ_v d_v^i / i)^{a_i} / a_i!`.
fn degenerate_inner(delta: u64, degrees: &[u64]) -> Result<ExactValue, CombinError> {
    let mut total = ExactValue::zero();
    for a in multiplicity_vectors(delta)? {
        let mut term = ExactValue::one();
        for (i, &ai) in a.counts().iter().enumerate() {
            if ai > 0 {
                let k = i as u64 + 1;
                let base = ExactValue::from(power_moment_sum(degrees, k as u32))
                    / ExactValue::from(k);
                term = term * base.pow(ai as u32) / ExactValue::from(factorial(ai));
            }
        }
        total += signed(term, a.sign_exponent());
    }
    Ok(total)
}

/// Inner sum over `R(a)` shared by the multi-pair and self-loop theorems.
/// `moment(y)` is the exact population sum `Σ_v Π f(d_v)^{y_i}` for one
/// pattern vector.
fn r_sum<F>(a: &MultiplicityVector, moment: &F) -> Result<ExactValue, CombinError>
where
    F: Fn(&[u64]) -> Result<BigInt, CombinError>,
{
    let mut total = ExactValue::zero();
    for part in enumerate_r(a)? {
        let mut term = ExactValue::one();
        for (y, c) in part.parts() {
            let sy: u64 = y.iter().sum();
            let mut base =
                ExactValue::from(moment(y)?) * ExactValue::from(factorial(sy - 1));
            for &yi in y {
                if yi > 1 {
                    base = base / ExactValue::from(factorial(yi));
                }
            }
            term = term * base.pow(*c as u32) / ExactValue::from(factorial(*c));
        }
        total += signed(term, part.sign_exponent());
    }
    Ok(total)
}

/// `Σ_a δ!² / Π_k k!^{2 a_k} · Σ_{α ∈ R(a)} …` — the per-class factor of
/// the multi-pair and self-loop theorems for one edge side of size `delta`.
fn multi_class_sum<F>(delta: u64, moment: &F) -> Result<ExactValue, CombinError>
where
    F: Fn(&[u64]) -> Result<BigInt, CombinError>,
{
    let mut total = ExactValue::zero();
    let fact2 = ExactValue::from(factorial(delta)).pow(2);
    for a in multiplicity_vectors(delta)? {
        let mut pref = fact2.clone();
        for (k, &ak) in a.counts().iter().enumerate() {
            if ak > 0 {
                pref = pref / ExactValue::from(factorial(k as u64 + 1)).pow(2 * ak as u32);
            }
        }
        total += pref * r_sum(&a, moment)?;
    }
    Ok(total)
}

fn class_counts(sizes: &[u64]) -> BTreeMap<u64, u64> {
    let mut map = BTreeMap::new();
    for &d in sizes {
        *map.entry(d).or_insert(0) += 1;
    }
    map
}

fn class_counts_pairs(tails: &[u64], heads: &[u64]) -> BTreeMap<(u64, u64), u64> {
    let mut map = BTreeMap::new();
    for (&t, &h) in tails.iter().zip(heads) {
        *map.entry((t, h)).or_insert(0) += 1;
    }
    map
}

/// Expected number of degenerate hyperedges (undirected).
pub fn expected_degenerate(
    ds: &UndirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s = ds.total_stubs();
    let degrees = ds.vertex_degrees();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for (delta, count) in class_counts(ds.edge_degrees()) {
        let pref = ExactValue::from(factorial(delta)) * reciprocal_falling(s, delta)?;
        let non_degenerate = pref * degenerate_inner(delta, degrees)?;
        let per_edge = ExactValue::one() - non_degenerate;
        let class_value = ExactValue::from(count) * per_edge;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("delta={delta}"),
            count,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::Degenerate,
        directed: false,
        value,
        class_terms,
    })
}

/// Expected number of multi-hyperedge pairs (undirected).
pub fn expected_multi_pairs(
    ds: &UndirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s = ds.total_stubs();
    let degrees = ds.vertex_degrees();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for (delta, count) in class_counts(ds.edge_degrees()) {
        if count < 2 {
            continue;
        }
        let moment = |y: &[u64]| Ok(ff_moment_double(degrees, y));
        let pair_term =
            reciprocal_falling(s, 2 * delta)? * multi_class_sum(delta, &moment)?;
        let pairs = count * (count - 1) / 2;
        let class_value = ExactValue::from(pairs) * pair_term;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("delta={delta}"),
            count: pairs,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::MultiPairs,
        directed: false,
        value,
        class_terms,
    })
}

/// Expected number of degenerate hyperedges (directed): an edge is
/// degenerate when its tail or its head repeats a vertex.
pub fn expected_degenerate_directed(
    dds: &DirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s_out = dds.total_out_stubs();
    let s_in = dds.total_in_stubs();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for ((dt, dh), count) in class_counts_pairs(dds.tail_degrees(), dds.head_degrees()) {
        let pref = ExactValue::from(factorial(dt))
            * ExactValue::from(factorial(dh))
            * reciprocal_falling(s_out, dt)?
            * reciprocal_falling(s_in, dh)?;
        let non_degenerate = pref
            * degenerate_inner(dt, dds.out_degrees())?
            * degenerate_inner(dh, dds.in_degrees())?;
        let per_edge = ExactValue::one() - non_degenerate;
        let class_value = ExactValue::from(count) * per_edge;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("tail={dt},head={dh}"),
            count,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::Degenerate,
        directed: true,
        value,
        class_terms,
    })
}

/// Expected number of multi-hyperedge pairs (directed).
pub fn expected_multi_pairs_directed(
    dds: &DirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s_out = dds.total_out_stubs();
    let s_in = dds.total_in_stubs();
    let out = dds.out_degrees();
    let inn = dds.in_degrees();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for ((dt, dh), count) in class_counts_pairs(dds.tail_degrees(), dds.head_degrees()) {
        if count < 2 {
            continue;
        }
        let tail_moment = |y: &[u64]| Ok(ff_moment_double(out, y));
        let head_moment = |z: &[u64]| Ok(ff_moment_double(inn, z));
        let pair_term = reciprocal_falling(s_out, 2 * dt)?
            * reciprocal_falling(s_in, 2 * dh)?
            * multi_class_sum(dt, &tail_moment)?
            * multi_class_sum(dh, &head_moment)?;
        let pairs = count * (count - 1) / 2;
        let class_value = ExactValue::from(pairs) * pair_term;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("tail={dt},head={dh}"),
            count: pairs,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::MultiPairs,
        directed: true,
        value,
        class_terms,
    })
}

/// Expected number of self-loops (tail equals head as a multiset). Only
/// edges with `δ_tail == δ_head` can be self-loops.
pub fn expected_self_loops(
    dds: &DirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s_out = dds.total_out_stubs();
    let s_in = dds.total_in_stubs();
    let out = dds.out_degrees();
    let inn = dds.in_degrees();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for ((dt, dh), count) in class_counts_pairs(dds.tail_degrees(), dds.head_degrees()) {
        if dt != dh {
            continue;
        }
        let moment = |y: &[u64]| ff_moment_paired(out, inn, y);
        let per_edge = reciprocal_falling(s_out, dt)?
            * reciprocal_falling(s_in, dt)?
            * multi_class_sum(dt, &moment)?;
        let class_value = ExactValue::from(count) * per_edge;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("tail={dt},head={dh}"),
            count,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::SelfLoops,
        directed: true,
        value,
        class_terms,
    })
}

/// Joint inclusion–exclusion sum of the weak self-loop theorem for one
/// `(δ_tail, δ_head)` class: probability that tail and head of one edge
/// share no vertex.
fn weak_inner(
    dt: u64,
    dh: u64,
    out: &[u64],
    inn: &[u64],
) -> Result<ExactValue, CombinError> {
    let mut total = ExactValue::zero();
    for a in multiplicity_vectors(dt)? {
        let mut pa = ExactValue::from(factorial(dt));
        for (k, &ak) in a.counts().iter().enumerate() {
            if ak > 0 {
                pa = pa / ExactValue::from(factorial(k as u64 + 1)).pow(ak as u32);
            }
        }
        for b in multiplicity_vectors(dh)? {
            let mut pb = ExactValue::from(factorial(dh));
            for (k, &bk) in b.counts().iter().enumerate() {
                if bk > 0 {
                    pb = pb / ExactValue::from(factorial(k as u64 + 1)).pow(bk as u32);
                }
            }
            let mut gsum = ExactValue::zero();
            for part in enumerate_r_hat(&a, &b)? {
                let mut term = ExactValue::one();
                for ((y, z), c) in part.parts() {
                    let weight: u64 = y.iter().sum::<u64>() + z.iter().sum::<u64>();
                    let mut base = ExactValue::from(ff_moment_split(out, inn, y, z)?)
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
                gsum += signed(term, part.sign_exponent());
            }
            total += pa.clone() * pb * gsum;
        }
    }
    Ok(total)
}

/// Expected number of weak self-loops (tail and head share a vertex).
pub fn expected_weak_self_loops(
    dds: &DirectedDegreeSequence,
) -> Result<ExpectationReport, ExactError> {
    let s_out = dds.total_out_stubs();
    let s_in = dds.total_in_stubs();
    let out = dds.out_degrees();
    let inn = dds.in_degrees();
    let mut value = ExactValue::zero();
    let mut class_terms = Vec::new();
    for ((dt, dh), count) in class_counts_pairs(dds.tail_degrees(), dds.head_degrees()) {
        let disjoint = reciprocal_falling(s_out, dt)?
            * reciprocal_falling(s_in, dh)?
            * weak_inner(dt, dh, out, inn)?;
        let per_edge = ExactValue::one() - disjoint;
        let class_value = ExactValue::from(count) * per_edge;
        value += class_value.clone();
        class_terms.push(ClassTerm {
            label: format!("tail={dt},head={dh}"),
            count,
            value: class_value,
        });
    }
    Ok(ExpectationReport {
        statistic: Statistic::WeakSelfLoops,
        directed: true,
        value,
        class_terms,
    })
}

// ---------------------------------------------------------------------------
// Closed-form reductions for ordinary graphs (all edges of size 2) and
// digraphs (tails and heads of size 1). Used as independent cross-checks of
// the general theorems.
// ---------------------------------------------------------------------------

fn require_graph(ds: &UndirectedDegreeSequence) -> Result<(), ExactError> {
    if ds.edge_degrees().iter().all(|&d| d == 2) {
        Ok(())
    } else {
        Err(ExactError::NotAGraph)
    }
}

fn require_digraph(dds: &DirectedDegreeSequence) -> Result<(), ExactError> {
    if dds.tail_degrees().iter().all(|&d| d == 1)
        && dds.head_degrees().iter().all(|&d| d == 1)
    {
        Ok(())
    } else {
        Err(ExactError::NotADigraph)
    }
}

/// Graph reduction of the degenerate-edge theorem: expected self-loops of a
/// configuration-model graph, `Σ_v d_v(d_v−1) / (2(S−1))`.
pub fn graph_self_loop_closed_form(
    ds: &UndirectedDegreeSequence,
) -> Result<ExactValue, ExactError> {
    require_graph(ds)?;
    if ds.num_edges() == 0 {
        return Ok(ExactValue::zero());
    }
    let s = ds.total_stubs();
    let num: BigInt = ds
        .vertex_degrees()
        .iter()
        .map(|&d| BigInt::from(d) * BigInt::from(d.saturating_sub(1)))
        .sum();
    Ok(ExactValue::from(num) / ExactValue::from(2 * (s - 1)))
}

/// Graph reduction of the multi-pair theorem:
/// `[(Σ d(d−1))² − Σ (d(d−1))² + ½ Σ d(d−1)(d−2)(d−3)] / (4(S−1)(S−3))`.
pub fn graph_multi_pair_closed_form(
    ds: &UndirectedDegreeSequence,
) -> Result<ExactValue, ExactError> {
    require_graph(ds)?;
    if ds.num_edges() < 2 {
        return Ok(ExactValue::zero());
    }
    let s = ds.total_stubs();
    let d2: BigInt = ds
        .vertex_degrees()
        .iter()
        .map(|&d| crate::combin::falling(d, 2))
        .sum();
    let d2_sq: BigInt = ds
        .vertex_degrees()
        .iter()
        .map(|&d| crate::combin::falling(d, 2).pow(2))
        .sum();
    let d4: BigInt = ds
        .vertex_degrees()
        .iter()
        .map(|&d| crate::combin::falling(d, 4))
        .sum();
    let num = ExactValue::from(d2.clone() * d2 - d2_sq)
        + ExactValue::from(d4) / ExactValue::from(2u64);
    Ok(num / ExactValue::from(4 * (s - 1) * (s - 3)))
}

/// Digraph reduction of both self-loop theorems:
/// `Σ_v d_v^out d_v^in / S_in`.
pub fn digraph_self_loop_closed_form(
    dds: &DirectedDegreeSequence,
) -> Result<ExactValue, ExactError> {
    require_digraph(dds)?;
    if dds.num_edges() == 0 {
        return Ok(ExactValue::zero());
    }
    let num: BigInt = dds
        .out_degrees()
        .iter()
        .zip(dds.in_degrees())
        .map(|(&o, &i)| BigInt::from(o) * BigInt::from(i))
        .sum();
    Ok(ExactValue::from(num) / ExactValue::from(dds.total_in_stubs()))
}

/// Digraph reduction of the directed multi-pair theorem:
/// `Σ o(o−1) · Σ i(i−1) / (2 S_in (S_out − 1))`.
pub fn digraph_multi_pair_closed_form(
    dds: &DirectedDegreeSequence,
) -> Result<ExactValue, ExactError> {
    require_digraph(dds)?;
    if dds.num_edges() < 2 {
        return Ok(ExactValue::zero());
    }
    let o2: BigInt = dds
        .out_degrees()
        .iter()
        .map(|&d| crate::combin::falling(d, 2))
        .sum();
    let i2: BigInt = dds
        .in_degrees()
        .iter()
        .map(|&d| crate::combin::falling(d, 2))
        .sum();
    let s_out = dds.total_out_stubs();
    let s_in = dds.total_in_stubs();
    Ok(ExactValue::from(o2 * i2) / ExactValue::from(2 * s_in * (s_out - 1)))
}
