use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use super::pic::PicPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("a twist of E_A(r, d) must have degree 0, got degree {0}")]
    TwistDegree(i64),
    #[error("stable summand needs gcd(r, d) = 1, got r = {r}, d = {d}")]
    NotCoprime { r: u32, d: i64 },
    #[error("a bundle needs at least one summand")]
    Empty,
    #[error("h^0 is only tabulated for d >= 0 (got d = {0}); dualize first")]
    NegativeDegree(i64),
    #[error("tensor rule needs gcd(r, r') = 1, got r = {r}, r' = {r_prime}")]
    RanksNotCoprime { r: u32, r_prime: u32 },
    #[error("F_h needs h >= 1")]
    ZeroMultiplier,
    #[error("the bundle is not semistable, so it has no point in the moduli space")]
    NotSemistable,
}

/// A bundle `O(d_1) ⊕ … ⊕ O(d_r)` on `P¹`, stored with degrees sorted
/// descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GZeroBundle {
    degrees: Vec<i64>,
}

impl GZeroBundle {
    pub fn new(mut degrees: Vec<i64>) -> Result<Self, BundleError> {
        if degrees.is_empty() {
            return Err(BundleError::Empty);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GZeroBundle { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new(self.degree(), self.rank() as i64)
    }

    pub fn is_semistable(&self) -> bool {
        self.degrees.first() == self.degrees.last()
    }

    /// `max |d_i - d_j|`.
    pub fn spread(&self) -> i64 {
        self.degrees[0] - self.degrees[self.degrees.len() - 1]
    }

    /// `E ⊗ O(t)`.
    pub fn twist(&self, t: i64) -> GZeroBundle {
        GZeroBundle {
            degrees: self.degrees.iter().map(|d| d + t).collect(),
        }
    }
}

/// The indecomposable bundle `E_A(r, d) ⊗ M` with `M ∈ Pic⁰`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Indecomposable {
    rank: u32,
    degree: i64,
    twist: PicPoint,
}

impl Indecomposable {
    pub fn new(rank: u32, degree: i64, twist: PicPoint) -> Result<Self, BundleError> {
        if rank == 0 {
            return Err(BundleError::ZeroRank);
        }
        if twist.degree() != 0 {
            return Err(BundleError::TwistDegree(twist.degree()));
        }
        Ok(Indecomposable {
            rank,
            degree,
            twist,
        })
    }

    /// `E_A(r, d)` itself.
    pub fn atiyah(rank: u32, degree: i64) -> Result<Self, BundleError> {
        Self::new(rank, degree, PicPoint::trivial())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn twist(&self) -> &PicPoint {
        &self.twist
    }

    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new(self.degree, self.rank as i64)
    }

    /// `gcd(r, d)`.
    pub fn multiplicity(&self) -> u32 {
        (self.rank as i64).gcd(&self.degree) as u32
    }

    /// Stable exactly when `gcd(r, d) = 1`.
    pub fn is_stable(&self) -> bool {
        self.multiplicity() == 1
    }

    pub(crate) fn shifted(&self, shift: i64) -> Indecomposable {
        Indecomposable {
            rank: self.rank,
            degree: self.degree + self.rank as i64 * shift,
            twist: self.twist.clone(),
        }
    }
}

/// A bundle on the elliptic curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EllipticBundle {
    Indecomposable(Indecomposable),
    /// `⊕ E_A(r', d') ⊗ M_i`, each summand stable; stored sorted so the
    /// multiset has one representation.
    Polystable(Vec<Indecomposable>),
    /// A general direct sum; never nested and never a single part.
    DirectSum(Vec<EllipticBundle>),
}

impl EllipticBundle {
    pub fn indecomposable(rank: u32, degree: i64, twist: PicPoint) -> Result<Self, BundleError> {
        Indecomposable::new(rank, degree, twist).map(EllipticBundle::Indecomposable)
    }

    pub fn polystable(mut summands: Vec<Indecomposable>) -> Result<Self, BundleError> {
        if summands.is_empty() {
            return Err(BundleError::Empty);
        }
        if let Some(s) = summands.iter().find(|s| !s.is_stable()) {
            return Err(BundleError::NotCoprime {
                r: s.rank,
                d: s.degree,
            });
        }
        summands.sort();
        Ok(EllipticBundle::Polystable(summands))
    }

    /// Direct sum of the given parts, flattening nested sums.
    pub fn direct_sum(parts: Vec<EllipticBundle>) -> Result<Self, BundleError> {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                EllipticBundle::DirectSum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Err(BundleError::Empty),
            1 => Ok(flat.pop().unwrap()),
            _ => Ok(EllipticBundle::DirectSum(flat)),
        }
    }

    /// Every indecomposable summand, with repeats.
    pub fn indecomposable_parts(&self) -> Vec<Indecomposable> {
        match self {
            EllipticBundle::Indecomposable(e) => vec![e.clone()],
            EllipticBundle::Polystable(s) => s.clone(),
            EllipticBundle::DirectSum(parts) => {
                parts.iter().flat_map(|p| p.indecomposable_parts()).collect()
            }
        }
    }

    pub fn rank(&self) -> u32 {
        self.indecomposable_parts().iter().map(|p| p.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.indecomposable_parts().iter().map(|p| p.degree).sum()
    }

    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new(self.degree(), self.rank() as i64)
    }

    /// Indecomposable bundles are semistable; a sum is semistable exactly
    /// when all its indecomposable parts share one slope.
    pub fn is_semistable(&self) -> bool {
        let parts = self.indecomposable_parts();
        let mu = parts[0].slope();
        parts.iter().all(|p| p.slope() == mu)
    }

    /// Shift the total degree into `[0, rank)` by tensoring with
    /// `O(A)^shift`. Returns the shifted descriptor and `shift`.
    pub fn normalize_degree(&self) -> (EllipticBundle, i64) {
        let shift = -self.degree().div_euclid(self.rank() as i64);
        (self.shifted(shift), shift)
    }

    pub(crate) fn shifted(&self, shift: i64) -> EllipticBundle {
        match self {
            EllipticBundle::Indecomposable(e) => EllipticBundle::Indecomposable(e.shifted(shift)),
            EllipticBundle::Polystable(s) => {
                let mut s: Vec<_> = s.iter().map(|e| e.shifted(shift)).collect();
                s.sort();
                EllipticBundle::Polystable(s)
            }
            EllipticBundle::DirectSum(parts) => {
                EllipticBundle::DirectSum(parts.iter().map(|p| p.shifted(shift)).collect())
            }
        }
    }
}
