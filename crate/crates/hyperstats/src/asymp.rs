//! Leading-order asymptotics for uniform (regular-edge-size) hypergraphs.
//!
//! Each function evaluates the constant in front of the `(1 + o(1))` factor
//! of the corresponding asymptotic lemma, using empirical moments of the
//! supplied vertex-degree sequence. Two displays were corrected against the
//! exact theorems (the exact/asymptotic ratio provably converges to 1 for
//! the forms used here, and does not for the originally displayed ones):
//!
//! * degenerate hyperedges: `(δ−1)(E[d²]−E[d]) / (2E[d])` per edge side;
//! * weak self-loops: `δ_head · E[d_out d_in] / E[d_in]`.

use crate::model::{DirectedDegreeSequence, UndirectedDegreeSequence, ValidationError};

fn mean(degrees: &[u64]) -> f64 {
    degrees.iter().sum::<u64>() as f64 / degrees.len() as f64
}

fn second_moment(degrees: &[u64]) -> f64 {
    degrees.iter().map(|&d| (d * d) as f64).sum::<f64>() / degrees.len() as f64
}

fn cross_moment(out: &[u64], inn: &[u64]) -> f64 {
    out.iter()
        .zip(inn)
        .map(|(&o, &i)| (o * i) as f64)
        .sum::<f64>()
        / out.len() as f64
}

fn factorial_f64(k: u64) -> f64 {
    (1..=k).map(|j| j as f64).product()
}

/// One per-edge-side degenerate term: `(δ−1)(E[d²]−E[d]) / (2E[d])`.
fn degenerate_side(degrees: &[u64], delta: u64) -> f64 {
    if delta < 2 {
        return 0.0;
    }
    let m1 = mean(degrees);
    let m2 = second_moment(degrees);
    (delta as f64 - 1.0) * (m2 - m1) / (2.0 * m1)
}

/// Asymptotic expected degenerate hyperedges, all edges of size `delta`.
pub fn degenerate_asymptotic(degrees: &[u64], delta: u64) -> f64 {
    degenerate_side(degrees, delta)
}

/// Asymptotic expected multi-hyperedge pairs, all edges of size `delta`:
/// `(δ−1)!/(2δ) · (nE[d])² · ((E[d²]−E[d])/(nE[d]²))^δ`.
pub fn multi_pairs_asymptotic(degrees: &[u64], delta: u64) -> f64 {
    let n = degrees.len() as f64;
    let m1 = mean(degrees);
    let m2 = second_moment(degrees);
    factorial_f64(delta - 1) / (2.0 * delta as f64)
        * (n * m1).powi(2)
        * ((m2 - m1) / (n * m1 * m1)).powi(delta as i32)
}

/// Asymptotic expected degenerate directed hyperedges: sum of the tail-side
/// and head-side undirected terms.
pub fn degenerate_directed_asymptotic(
    out: &[u64],
    inn: &[u64],
    delta_tail: u64,
    delta_head: u64,
) -> f64 {
    degenerate_side(out, delta_tail) + degenerate_side(inn, delta_head)
}

/// Asymptotic expected directed multi-hyperedge pairs:
/// `(δt−1)!(δh−1)!/2 · n²E[o]E[i] · (…)^δt (…)^δh`.
pub fn multi_pairs_directed_asymptotic(
    out: &[u64],
    inn: &[u64],
    delta_tail: u64,
    delta_head: u64,
) -> f64 {
    let n = out.len() as f64;
    let (o1, o2) = (mean(out), second_moment(out));
    let (i1, i2) = (mean(inn), second_moment(inn));
    factorial_f64(delta_tail - 1) * factorial_f64(delta_head - 1) / 2.0
        * n
        * n
        * o1
        * i1
        * ((o2 - o1) / (n * o1 * o1)).powi(delta_tail as i32)
        * ((i2 - i1) / (n * i1 * i1)).powi(delta_head as i32)
}

/// Asymptotic expected self-loops, `δ_tail = δ_head = delta`:
/// `(δ−1)! · nE[i] · (E[oi]/(nE[i]²))^δ`.
pub fn self_loops_asymptotic(out: &[u64], inn: &[u64], delta: u64) -> f64 {
    let n = out.len() as f64;
    let i1 = mean(inn);
    let oi = cross_moment(out, inn);
    factorial_f64(delta - 1) * n * i1 * (oi / (n * i1 * i1)).powi(delta as i32)
}

/// Asymptotic expected weak self-loops: `δ_head · E[oi] / E[i]`.
/// Independent of the tail size at leading order.
pub fn weak_self_loops_asymptotic(out: &[u64], inn: &[u64], delta_head: u64) -> f64 {
    delta_head as f64 * cross_moment(out, inn) / mean(inn)
}

/// `exact / asymptotic`, with the convention `0/0 = 1` (both formulas agree
/// that the statistic is impossible).
pub fn convergence_ratio(exact: f64, asymptotic: f64) -> f64 {
    if exact == 0.0 && asymptotic == 0.0 {
        1.0
    } else {
        exact / asymptotic
    }
}

/// `n` vertices of degree `d`, all edges of size `delta`. Fails unless
/// `delta` divides `n·d`.
pub fn regular_undirected(
    n: u64,
    d: u64,
    delta: u64,
) -> Result<UndirectedDegreeSequence, ValidationError> {
    let stubs = n * d;
    let m = stubs / delta;
    UndirectedDegreeSequence::new(vec![d; n as usize], vec![delta; m as usize])
}

/// `n` vertices with out-degree `d_out` and in-degree `d_in`, all edges
/// with tail size `delta_tail` and head size `delta_head`. Fails unless the
/// two sides give the same edge count.
pub fn regular_directed(
    n: u64,
    d_out: u64,
    d_in: u64,
    delta_tail: u64,
    delta_head: u64,
) -> Result<DirectedDegreeSequence, ValidationError> {
    let m = n * d_out / delta_tail;
    DirectedDegreeSequence::new(
        vec![d_out; n as usize],
        vec![d_in; n as usize],
        vec![delta_tail; m as usize],
        vec![delta_head; m as usize],
    )
}
