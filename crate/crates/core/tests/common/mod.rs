//! Reference implementations used as oracles by the integration tests.
//! They share no code paths with the library beyond reading descriptor data.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use wobbly::bundles::{EllipticBundle, Indecomposable, Outcome, PicPoint};

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

/// A point of `(Q/Z)²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Off(pub Q, pub Q);

impl Off {
    pub fn new(x: Q, y: Q) -> Self {
        Off(frac(x), frac(y))
    }

    fn plus(self, o: Off) -> Off {
        Off::new(self.0 + o.0, self.1 + o.1)
    }

    fn times(self, k: i64) -> Off {
        Off::new(self.0 * k, self.1 * k)
    }

    fn is_zero(self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    fn order(self) -> i64 {
        self.0.denom().lcm(self.1.denom())
    }

    pub fn to_pic(self, degree: i64) -> PicPoint {
        PicPoint::from_ratios(
            degree,
            (*self.0.numer(), *self.0.denom()),
            (*self.1.numer(), *self.1.denom()),
        )
    }
}

fn off_of(p: &PicPoint) -> Off {
    let (x, y) = p.offset();
    let conv = |r: &num_rational::BigRational| {
        Ratio::new(
            i64::try_from(r.numer()).unwrap(),
            i64::try_from(r.denom()).unwrap(),
        )
    };
    Off::new(conv(x), conv(y))
}

#[derive(Debug, Clone, Copy)]
pub struct Part {
    pub r: i64,
    pub d: i64,
    pub m: Off,
}

pub fn parts_of(e: &EllipticBundle) -> Vec<Part> {
    e.indecomposable_parts()
        .iter()
        .map(|p: &Indecomposable| Part {
            r: p.rank() as i64,
            d: p.degree(),
            m: off_of(p.twist()),
        })
        .collect()
}

/// The decision table, written directly against ranks, degrees and offsets.
pub fn reference_elliptic(parts: &[Part], l_deg: i64, l_off: &PicPoint) -> (Outcome, &'static str) {
    use Outcome::*;
    let lm = off_of(l_off);
    let rank: i64 = parts.iter().map(|p| p.r).sum();
    if rank == 1 {
        return (VeryStable, "line bundle");
    }
    let total: i64 = parts.iter().map(|p| p.d).sum();
    let k = total.div_euclid(rank);
    let parts: Vec<Part> = parts.iter().map(|p| Part { d: p.d - p.r * k, ..*p }).collect();
    let slopes: Vec<Q> = parts.iter().map(|p| q(p.d, p.r)).collect();
    let semistable = slopes.iter().all(|s| *s == slopes[0]);

    if l_deg < 0 {
        if semistable {
            return (VeryStable, "Lemma vst(1)");
        }
        let max = *slopes.iter().max().unwrap();
        let min = *slopes.iter().min().unwrap();
        return if max - min > Q::from(-l_deg) {
            (Wobbly, "Remark dec")
        } else {
            (Undetermined, "Remark dec — undetermined")
        };
    }
    if !semistable {
        return (Wobbly, "Lemma vst(2)");
    }
    if l_deg >= 2 {
        let stable_single = parts.len() == 1 && parts[0].r.gcd(&parts[0].d) == 1;
        return if stable_single {
            (Wobbly, "Theorem 3(3)")
        } else {
            (Wobbly, "Corollary 3(3)")
        };
    }
    if l_deg == 1 {
        if parts.len() >= 2 {
            return (Wobbly, "Lemma exact");
        }
        let p = parts[0];
        if p.r > p.d + 1 {
            return (Wobbly, "Lemma exact");
        }
        // E(d + 1, d) → Pic¹: A + r·M.
        let hits = p.m.times(p.r) == lm;
        return match (p.r, hits) {
            (2, true) => (Wobbly, "Theorem 3(2)"),
            (2, false) => (VeryStable, "Theorem 3(2)"),
            (_, true) => (Wobbly, "Lemma exact, det(E) = L"),
            (_, false) => (Undetermined, "Conjecture 1 — undetermined"),
        };
    }
    if lm.is_zero() {
        let mut points = Vec::new();
        for p in &parts {
            let g = p.r.gcd(&p.d);
            for _ in 0..g {
                points.push(p.m.times(p.r / g));
            }
        }
        let distinct: BTreeSet<Off> = points.iter().copied().collect();
        return if distinct.len() < points.len() {
            (Wobbly, "Theorem 3(1)")
        } else {
            (VeryStable, "Theorem 3(1)")
        };
    }
    if parts.iter().all(|p| p.r.gcd(&p.d) == 1) {
        let pts: Vec<Off> = parts.iter().map(|p| p.m.times(p.r)).collect();
        let shift = lm.times(parts[0].r);
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                if i != j && pts[i] == pts[j].plus(shift) {
                    return (Wobbly, "Remark dec");
                }
            }
        }
        return (VeryStable, "Remark dec");
    }
    if parts.len() == 1 && parts[0].d == 0 && lm.order() > parts[0].r {
        return (VeryStable, "Remark deg-0 twist");
    }
    (Undetermined, "Remark deg-0 twist — undetermined")
}

/// Genus 0, straight from the pairwise criterion.
pub fn reference_p1(degrees: &[i64], t: i64) -> Outcome {
    if degrees.len() == 1 {
        return Outcome::VeryStable;
    }
    if t >= 0 {
        return Outcome::Wobbly;
    }
    let ok = degrees
        .iter()
        .all(|a| degrees.iter().all(|b| (a - b).abs() < -t));
    if ok {
        Outcome::VeryStable
    } else {
        Outcome::Wobbly
    }
}

/// Every multiset of point multiplicities realisable as `Σ i_l p_l` with
/// points allowed to coincide: the sorted block sums over all set
/// partitions of the parts.
pub fn coarsenings(parts: &[u32]) -> BTreeSet<Vec<u32>> {
    fn go(parts: &[u32], idx: usize, blocks: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if idx == parts.len() {
            let mut v = blocks.clone();
            v.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(v);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += parts[idx];
            go(parts, idx + 1, blocks, out);
            blocks[b] -= parts[idx];
        }
        blocks.push(parts[idx]);
        go(parts, idx + 1, blocks, out);
        blocks.pop();
    }
    let mut out = BTreeSet::new();
    go(parts, 0, &mut Vec::new(), &mut out);
    out
}

/// `W(λ) ⊆ W(μ)` by comparing realisable multiplicity profiles.
pub fn expressibility_contains(lambda: &[u32], mu: &[u32]) -> bool {
    coarsenings(lambda).is_subset(&coarsenings(mu))
}

/// All partitions of `h`, built independently of the library.
pub fn partitions_of(h: u32) -> Vec<Vec<u32>> {
    if h == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut stack = vec![(h, h, Vec::new())];
    while let Some((rest, max, prefix)) = stack.pop() {
        if rest == 0 {
            out.push(prefix);
            continue;
        }
        for p in 1..=rest.min(max) {
            let mut next = prefix.clone();
            next.push(p);
            stack.push((rest - p, p, next));
        }
    }
    out
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(One::one())
}
