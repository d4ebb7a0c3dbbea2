//! Multiplicity vectors, vector partitions and exact moment sums.
//!
//! A hyperedge of size `δ` realizes a multiplicity vector `a` with
//! `Σ i·a_i = δ`, where `a_i` counts distinct vertices of multiplicity `i`.
//! The inclusion–exclusion sums of the expectation formulas run over vector
//! partitions of `a`: multisets of nonzero pattern vectors whose weighted
//! sum reproduces `a`. Joint partitions treat a concatenated tail/head pair
//! of multiplicity vectors the same way.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::rational::ExactValue;

/// Largest edge size accepted by the enumerations.
pub const DEFAULT_DELTA_CAP: u64 = 12;

/// Abort threshold for partition enumeration.
pub const DEFAULT_PARTITION_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinError {
    #[error("edge size {0} exceeds the enumeration cap {1}")]
    CapExceeded(u64, u64),
    #[error("partition enumeration exceeded {0} partitions")]
    PartitionCapExceeded(u64),
    #[error("falling-factorial prefix length {k} exceeds total {s}")]
    KTooLarge { k: u64, s: u64 },
    #[error("degree sequences have different lengths")]
    LengthMismatch,
}

/// `a = (a_1, …, a_δ)` with `Σ i·a_i = δ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector {
    counts: Vec<u64>,
}

impl MultiplicityVector {
    /// Validates the defining constraint `Σ i·a_i == len(counts)`.
    pub fn new(counts: Vec<u64>) -> Option<Self> {
        let delta = counts.len() as u64;
        let weighted: u64 = counts
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * a)
            .sum();
        (weighted == delta).then_some(Self { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn delta(&self) -> u64 {
        self.counts.len() as u64
    }

    /// True iff some vertex appears with multiplicity at least two.
    pub fn is_degenerate(&self) -> bool {
        self.counts.iter().skip(1).any(|&a| a > 0)
    }

    /// `Σ_i (i-1)·a_i`, the inclusion–exclusion sign exponent of the
    /// degenerate-hyperedge formula.
    pub fn sign_exponent(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64) * a)
            .sum()
    }
}

/// All `a ∈ ℕ^δ` with `Σ i·a_i = δ`, lexicographically descending.
pub fn multiplicity_vectors(delta: u64) -> Result<Vec<MultiplicityVector>, CombinError> {
    if delta == 0 || delta > DEFAULT_DELTA_CAP {
        return Err(CombinError::CapExceeded(delta, DEFAULT_DELTA_CAP));
    }
    let d = delta as usize;
    let mut out = Vec::new();
    let mut cur = vec![0u64; d];
    fn rec(i: usize, rem: u64, d: usize, cur: &mut [u64], out: &mut Vec<MultiplicityVector>) {
        if i == d {
            if rem == 0 {
                out.push(MultiplicityVector {
                    counts: cur.to_vec(),
                });
            }
            return;
        }
        let step = i as u64 + 1;
        let max = rem / step;
        for a in (0..=max).rev() {
            cur[i] = a;
            rec(i + 1, rem - a * step, d, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, delta, d, &mut cur, &mut out);
    Ok(out)
}

/// A vector partition `α`: a multiset of nonzero pattern vectors with
/// positive counts, whose weighted sum is the target marginal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorPartition {
    parts: Vec<(Vec<u64>, u64)>,
}

impl VectorPartition {
    /// Parts with multiplicities, in lexicographically descending part
    /// order.
    pub fn parts(&self) -> &[(Vec<u64>, u64)] {
        &self.parts
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.parts.iter().map(|(_, c)| c).sum()
    }

    /// `Σ_x (Σ_i x_i − 1)·α(x)`, the sign exponent of the pair/self-loop
    /// formulas. Equals total pattern weight minus the number of parts.
    pub fn sign_exponent(&self) -> u64 {
        let weight: u64 = self
            .parts
            .iter()
            .map(|(x, c)| x.iter().sum::<u64>() * c)
            .sum();
        weight - self.num_parts()
    }

    /// Reconstructs the marginal vector `Σ_x x·α(x)`.
    pub fn marginal(&self, len: usize) -> Vec<u64> {
        let mut m = vec![0u64; len];
        for (x, c) in &self.parts {
            for (i, &xi) in x.iter().enumerate() {
                m[i] += xi * c;
            }
        }
        m
    }
}

/// A joint partition `γ` over (tail pattern, head pattern) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointVectorPartition {
    tail_len: usize,
    head_len: usize,
    parts: Vec<((Vec<u64>, Vec<u64>), u64)>,
}

impl JointVectorPartition {
    pub fn parts(&self) -> &[((Vec<u64>, Vec<u64>), u64)] {
        &self.parts
    }

    pub fn num_parts(&self) -> u64 {
        self.parts.iter().map(|(_, c)| c).sum()
    }

    /// `Σ_{(g,h)} (Σ g_i + Σ h_j − 1)·γ(g,h)`.
    pub fn sign_exponent(&self) -> u64 {
        let weight: u64 = self
            .parts
            .iter()
            .map(|((y, z), c)| (y.iter().sum::<u64>() + z.iter().sum::<u64>()) * c)
            .sum();
        weight - self.num_parts()
    }

    /// Tail and head marginals `(Σ y·γ, Σ z·γ)`.
    pub fn marginals(&self) -> (Vec<u64>, Vec<u64>) {
        let mut a = vec![0u64; self.tail_len];
        let mut b = vec![0u64; self.head_len];
        for ((y, z), c) in &self.parts {
            for (i, &yi) in y.iter().enumerate() {
                a[i] += yi * c;
            }
            for (j, &zj) in z.iter().enumerate() {
                b[j] += zj * c;
            }
        }
        (a, b)
    }
}

/// Canonical enumeration of all vector partitions of `target`: parts are
/// generated in lexicographically non-increasing order, so every partition
/// appears exactly once without dedup storage.
fn vector_partitions(target: &[u64], cap: u64) -> Result<Vec<Vec<Vec<u64>>>, CombinError> {
    fn parts_leq(bound: &[u64], out: &mut Vec<Vec<u64>>, cur: &mut Vec<u64>, i: usize) {
        if i == bound.len() {
            if cur.iter().any(|&x| x > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=bound[i]).rev() {
            cur.push(v);
            parts_leq(bound, out, cur, i + 1);
            cur.pop();
        }
    }

    fn rec(
        residual: &mut Vec<u64>,
        max_part: &[u64],
        acc: &mut Vec<Vec<u64>>,
        out: &mut Vec<Vec<Vec<u64>>>,
        cap: u64,
    ) -> Result<(), CombinError> {
        if residual.iter().all(|&r| r == 0) {
            if out.len() as u64 >= cap {
                return Err(CombinError::PartitionCapExceeded(cap));
            }
            out.push(acc.clone());
            return Ok(());
        }
        let mut candidates = Vec::new();
        let mut cur = Vec::with_capacity(residual.len());
        parts_leq(residual, &mut candidates, &mut cur, 0);
        for p in candidates {
            if p.as_slice() > max_part {
                continue;
            }
            for (r, &pi) in residual.iter_mut().zip(&p) {
                *r -= pi;
            }
            acc.push(p.clone());
            let res = rec(residual, &p, acc, out, cap);
            acc.pop();
            for (r, &pi) in residual.iter_mut().zip(&p) {
                *r += pi;
            }
            res?;
        }
        Ok(())
    }

    let mut out = Vec::new();
    if target.iter().all(|&t| t == 0) {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut residual = target.to_vec();
    let top = target.to_vec();
    let mut acc = Vec::new();
    rec(&mut residual, &top, &mut acc, &mut out, cap)?;
    Ok(out)
}

fn group_parts(parts: Vec<Vec<u64>>) -> Vec<(Vec<u64>, u64)> {
    // parts arrive in non-increasing order
    let mut grouped: Vec<(Vec<u64>, u64)> = Vec::new();
    for p in parts {
        match grouped.last_mut() {
            Some((q, c)) if *q == p => *c += 1,
            _ => grouped.push((p, 1)),
        }
    }
    grouped
}

/// All `α ∈ R(a)`: vector partitions of the multiplicity vector `a`.
pub fn enumerate_r(a: &MultiplicityVector) -> Result<Vec<VectorPartition>, CombinError> {
    let raw = vector_partitions(a.counts(), DEFAULT_PARTITION_CAP)?;
    Ok(raw
        .into_iter()
        .map(|parts| VectorPartition {
            parts: group_parts(parts),
        })
        .collect())
}

/// All `γ ∈ R̂(a, b)`: joint partitions of the concatenated tail/head
/// marginals, split back into `(y, z)` pattern pairs.
pub fn enumerate_r_hat(
    a: &MultiplicityVector,
    b: &MultiplicityVector,
) -> Result<Vec<JointVectorPartition>, CombinError> {
    let tail_len = a.counts().len();
    let head_len = b.counts().len();
    let mut joint = Vec::with_capacity(tail_len + head_len);
    joint.extend_from_slice(a.counts());
    joint.extend_from_slice(b.counts());
    let raw = vector_partitions(&joint, DEFAULT_PARTITION_CAP)?;
    Ok(raw
        .into_iter()
        .map(|parts| {
            let split = parts
                .into_iter()
                .map(|p| {
                    let (y, z) = p.split_at(tail_len);
                    (y.to_vec(), z.to_vec())
                })
                .collect();
            JointVectorPartition {
                tail_len,
                head_len,
                parts: group_parts_joint(split),
            }
        })
        .collect())
}

fn group_parts_joint(parts: Vec<(Vec<u64>, Vec<u64>)>) -> Vec<((Vec<u64>, Vec<u64>), u64)> {
    let mut grouped: Vec<((Vec<u64>, Vec<u64>), u64)> = Vec::new();
    for p in parts {
        match grouped.last_mut() {
            Some((q, c)) if *q == p => *c += 1,
            _ => grouped.push((p, 1)),
        }
    }
    grouped
}

/// Falling factorial `d·(d−1)·…·(d−k+1)`, zero when `d < k`.
pub fn falling(d: u64, k: u64) -> BigInt {
    if d < k {
        return BigInt::from(0);
    }
    let mut r = BigInt::one();
    for j in 0..k {
        r *= d - j;
    }
    r
}

pub fn factorial(k: u64) -> BigInt {
    falling(k.max(1), if k == 0 { 0 } else { k })
}

/// `Σ_v d_v^i`.
pub fn power_moment_sum(degrees: &[u64], i: u32) -> BigInt {
    degrees
        .iter()
        .map(|&d| BigInt::from(d).pow(i))
        .sum()
}

/// `Σ_v Π_i falling(d_v, 2i)^{y_i}`, the double falling moment of the
/// multi-pair formulas.
pub fn ff_moment_double(degrees: &[u64], y: &[u64]) -> BigInt {
    degrees
        .iter()
        .map(|&d| {
            let mut t = BigInt::one();
            for (i, &yi) in y.iter().enumerate() {
                if yi > 0 {
                    t *= falling(d, 2 * (i as u64 + 1)).pow(yi as u32);
                }
            }
            t
        })
        .sum()
}

/// `Σ_v Π_i (falling(d_v^out, i)·falling(d_v^in, i))^{y_i}` for the
/// self-loop formula.
pub fn ff_moment_paired(out: &[u64], inn: &[u64], y: &[u64]) -> Result<BigInt, CombinError> {
    if out.len() != inn.len() {
        return Err(CombinError::LengthMismatch);
    }
    Ok(out
        .iter()
        .zip(inn)
        .map(|(&o, &i_deg)| {
            let mut t = BigInt::one();
            for (i, &yi) in y.iter().enumerate() {
                if yi > 0 {
                    let k = i as u64 + 1;
                    t *= (falling(o, k) * falling(i_deg, k)).pow(yi as u32);
                }
            }
            t
        })
        .sum())
}

/// `Σ_v Π_i falling(d_v^out, i)^{y_i} · Π_j falling(d_v^in, j)^{z_j}` for
/// the weak self-loop formula.
pub fn ff_moment_split(
    out: &[u64],
    inn: &[u64],
    y: &[u64],
    z: &[u64],
) -> Result<BigInt, CombinError> {
    if out.len() != inn.len() {
        return Err(CombinError::LengthMismatch);
    }
    Ok(out
        .iter()
        .zip(inn)
        .map(|(&o, &i_deg)| {
            let mut t = BigInt::one();
            for (i, &yi) in y.iter().enumerate() {
                if yi > 0 {
                    t *= falling(o, i as u64 + 1).pow(yi as u32);
                }
            }
            for (j, &zj) in z.iter().enumerate() {
                if zj > 0 {
                    t *= falling(i_deg, j as u64 + 1).pow(zj as u32);
                }
            }
            t
        })
        .sum())
}

/// `1 / (S·(S−1)·…·(S−k+1))`, the exact factorial ratio `(S−k)!/S!`
/// without materializing factorials.
pub fn reciprocal_falling(s: u64, k: u64) -> Result<ExactValue, CombinError> {
    if k > s {
        return Err(CombinError::KTooLarge { k, s });
    }
    Ok(ExactValue::from(falling(s, k)).recip())
}
