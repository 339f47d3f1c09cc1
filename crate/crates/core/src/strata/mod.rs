//! The stratification of `Sym^h X` by coincidence patterns.
//!
//! A partition `λ = (i_1 ≥ … ≥ i_k)` of `h` indexes the closed locus
//! `W(λ)` of divisors `i_1 p_1 + … + i_k p_k` (points may coincide). It has
//! dimension `k`, and `W(λ) ⊆ W(μ)` exactly when `μ` refines `λ`.

pub mod classes;
pub mod mpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::betti::{kunneth, poincare_fixed_det, poincare_sym, BettiError, PoincarePolynomial};
use crate::cohom::{RingElement, RingError};

pub use classes::{delta_class, diagonal_class, DiagonalSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("weights must be positive and some multiplicity must be nonzero")]
    ZeroWeight,
    #[error("cannot parse partition '{0}': expected comma-separated positive integers")]
    BadPartition(String),
    #[error("total weights differ: {inner} vs {outer}")]
    TotalMismatch { inner: u32, outer: u32 },
    #[error("need 2 <= s <= h (got s = {s}, h = {h})")]
    DeltaOutOfRange { s: u32, h: u32 },
    #[error("N and I have different lengths ({n} vs {i})")]
    LengthMismatch { n: usize, i: usize },
    #[error("the exponent h - nu - 1 = {h} - {nu} - 1 is negative; need h >= nu + 1")]
    DiagonalExponent { h: u32, nu: u32 },
    #[error("repeated weight {0}: the product model needs distinct weights")]
    RepeatedWeight(u32),
    #[error("need h >= {min} (got h = {h})")]
    AmbientTooSmall { h: u32, min: u32 },
    #[error("need at least {needed} distinct sample points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("divisor has {divisor} points but the partition has total weight {total}")]
    SizeMismatch { divisor: usize, total: u32 },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Betti(#[from] BettiError),
}

/// A partition of `h`, stored sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightTuple(Vec<u32>);

impl WeightTuple {
    pub fn new(mut weights: Vec<u32>) -> Result<Self, StrataError> {
        if weights.is_empty() {
            return Err(StrataError::EmptyPartition);
        }
        if weights.contains(&0) {
            return Err(StrataError::ZeroWeight);
        }
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Ok(WeightTuple(weights))
    }

    /// `(s, 1^{h-s})`.
    pub fn standard(s: u32, h: u32) -> Result<Self, StrataError> {
        if s == 0 || s > h {
            return Err(StrataError::DeltaOutOfRange { s, h });
        }
        let mut w = vec![s];
        w.extend(std::iter::repeat_n(1, (h - s) as usize));
        Self::new(w)
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    /// Weight count `k`.
    pub fn count(&self) -> u32 {
        self.0.len() as u32
    }

    /// Total weight `h`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Shape `(s, 1, …, 1)`.
    pub fn is_standard(&self) -> bool {
        self.0[1..].iter().all(|&w| w == 1)
    }

    /// Distinct weights (descending) with their multiplicities.
    pub fn grouped(&self) -> (Vec<u32>, Vec<u32>) {
        let mut weights = Vec::new();
        let mut mults = Vec::new();
        for group in self.0.chunk_by(|a, b| a == b) {
            weights.push(group[0]);
            mults.push(group.len() as u32);
        }
        (weights, mults)
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightTuple {
    type Err = StrataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let weights = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| StrataError::BadPartition(s.to_string()))?;
        Self::new(weights).map_err(|_| StrataError::BadPartition(s.to_string()))
    }
}

impl Serialize for WeightTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// One locus `W(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub partition: WeightTuple,
    pub dim: u32,
    pub standard: bool,
    /// Known for `(s, 1^{h-s})` shapes; `1` for the whole space.
    pub class: Option<RingElement>,
    pub poincare: PoincarePolynomial,
}

impl Stratum {
    pub fn new(partition: WeightTuple) -> Self {
        let h = partition.total();
        let standard = partition.is_standard();
        let class = match partition.weights()[0] {
            1 => Some(RingElement::one(h)),
            s if standard => Some(delta_class(s, h).expect("2 <= s <= h")),
            _ => None,
        };
        let (_, mults) = partition.grouped();
        let poincare = mults
            .iter()
            .fold(PoincarePolynomial::point(), |acc, &n| kunneth(&acc, &poincare_sym(1, n)));
        Stratum {
            dim: partition.count(),
            standard,
            class,
            poincare,
            partition,
        }
    }
}

impl Serialize for Stratum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            partition: &'a WeightTuple,
            dim: u32,
            standard: bool,
            class: Option<String>,
            poincare: crate::betti::PoincareRecord,
        }
        Record {
            partition: &self.partition,
            dim: self.dim,
            standard: self.standard,
            class: self.class.as_ref().map(ToString::to_string),
            poincare: self.poincare.to_record(),
        }
        .serialize(s)
    }
}

/// All partitions of `h` in reverse lexicographic order.
pub fn partitions(h: u32) -> Vec<WeightTuple> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<WeightTuple>) {
        if rest == 0 {
            out.push(WeightTuple(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if h > 0 {
        go(h, h, &mut Vec::new(), &mut out);
    }
    out
}

/// One stratum per partition of `h`, coarsest first.
pub fn enumerate_strata(h: u32) -> Vec<Stratum> {
    partitions(h).into_iter().map(Stratum::new).collect()
}

/// The codimension-one locus `W(2, 1^{h-2})`.
pub fn wobbly_stratum(h: u32) -> Result<Stratum, StrataError> {
    if h < 2 {
        return Err(StrataError::AmbientTooSmall { h, min: 2 });
    }
    Ok(Stratum::new(WeightTuple::standard(2, h)?))
}

/// `W(inner) ⊆ W(outer)`: whether the parts of `outer` can be grouped so
/// that the group sums are exactly the parts of `inner`.
pub fn contains(inner: &WeightTuple, outer: &WeightTuple) -> Result<bool, StrataError> {
    if inner.total() != outer.total() {
        return Err(StrataError::TotalMismatch {
            inner: inner.total(),
            outer: outer.total(),
        });
    }
    if outer.count() < inner.count() {
        return Ok(false);
    }
    let mut room: Vec<u32> = inner.weights().to_vec();
    Ok(pack(outer.weights(), &mut room))
}

/// Place `items` (descending) into bins with remaining capacities `room`,
/// filling every bin exactly.
fn pack(items: &[u32], room: &mut [u32]) -> bool {
    let Some((&first, rest)) = items.split_first() else {
        return room.iter().all(|&r| r == 0);
    };
    for b in 0..room.len() {
        // Bins with equal remaining room are interchangeable.
        if room[b] < first || room[..b].contains(&room[b]) {
            continue;
        }
        room[b] -= first;
        if pack(rest, room) {
            room[b] += first;
            return true;
        }
        room[b] += first;
    }
    false
}

/// Whether the divisor `Σ p` lies in `W(λ)`.
pub fn membership<T: Ord>(divisor: &[T], lambda: &WeightTuple) -> Result<bool, StrataError> {
    if divisor.len() != lambda.total() as usize {
        return Err(StrataError::SizeMismatch {
            divisor: divisor.len(),
            total: lambda.total(),
        });
    }
    let mut counts: BTreeMap<&T, u32> = BTreeMap::new();
    for p in divisor {
        *counts.entry(p).or_default() += 1;
    }
    let profile = WeightTuple::new(counts.into_values().collect())?;
    contains(&profile, lambda)
}

/// `(h − 2)!`, the degree of `X^{h-1} → W(2, 1^{h-2})`.
pub fn covering_degree(h: u32) -> Result<BigUint, StrataError> {
    if h < 3 {
        return Err(StrataError::AmbientTooSmall { h, min: 3 });
    }
    Ok((2..=h - 2).map(BigUint::from).product())
}

/// Count ordered tuples `(E_1, …, E_{h-1})` of sample points with
/// `2E_1 + E_2 + … + E_{h-1} = 2p_1 + p_2 + … + p_{h-1}`, where `p_i` are the
/// first `h − 1` distinct samples.
pub fn fiber_count_oracle<T: Ord + Clone>(h: u32, samples: &[T]) -> Result<u64, StrataError> {
    if h < 3 {
        return Err(StrataError::AmbientTooSmall { h, min: 3 });
    }
    let mut distinct = samples.to_vec();
    distinct.sort();
    distinct.dedup();
    let len = (h - 1) as usize;
    if distinct.len() < len {
        return Err(StrataError::InsufficientPoints {
            needed: len,
            got: distinct.len(),
        });
    }
    fn image<'t, T: Ord>(tuple: &[&'t T]) -> Vec<&'t T> {
        let mut d: Vec<&T> = tuple.to_vec();
        d.push(tuple[0]);
        d.sort();
        d
    }
    let target_points: Vec<&T> = distinct.iter().take(len).collect();
    let target = image(&target_points);

    let mut count = 0;
    let mut idx = vec![0usize; len];
    loop {
        let tuple: Vec<&T> = idx.iter().map(|&i| &distinct[i]).collect();
        if image(&tuple) == target {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(count);
            }
            idx[pos] += 1;
            if idx[pos] < distinct.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// The locus of divisors `s·p + D` inside `Sym^h X` with fixed
/// `det = O(s p + D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedDetStratum {
    pub dim: u32,
    /// `h²` points when `s = h`.
    pub point_count: Option<u64>,
    #[serde(serialize_with = "poincare_record")]
    pub poincare: PoincarePolynomial,
}

fn poincare_record<S: Serializer>(p: &PoincarePolynomial, s: S) -> Result<S::Ok, S::Error> {
    p.to_record().serialize(s)
}

pub fn fixed_det_stratum(h: u32, s: u32) -> Result<FixedDetStratum, StrataError> {
    if s < 2 || s > h {
        return Err(StrataError::DeltaOutOfRange { s, h });
    }
    Ok(FixedDetStratum {
        dim: h - s,
        point_count: (s == h).then(|| u64::from(h) * u64::from(h)),
        poincare: poincare_fixed_det(h, s)?,
    })
}

/// `W(k, i_1, …, i_k) ≅ Sym^{n_1} X × … × Sym^{n_k} X` for distinct weights:
/// returns the symmetric powers `n_l`, dropping zero multiplicities.
pub fn stratum_product_model(weights: &[u32], mults: &[u32]) -> Result<Vec<u32>, StrataError> {
    if weights.len() != mults.len() {
        return Err(StrataError::LengthMismatch {
            n: mults.len(),
            i: weights.len(),
        });
    }
    if weights.is_empty() {
        return Err(StrataError::EmptyPartition);
    }
    if weights.contains(&0) {
        return Err(StrataError::ZeroWeight);
    }
    let mut seen = weights.to_vec();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(StrataError::RepeatedWeight(w[0]));
    }
    Ok(mults.iter().copied().filter(|&n| n > 0).collect())
}
