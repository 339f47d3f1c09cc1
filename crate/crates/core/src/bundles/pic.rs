use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduce a rational into `[0, 1)`.
fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// A line bundle `O(A)^degree ⊗ M` on the elliptic curve, where `A` is the
/// fixed base point and `M ∈ Pic⁰` is modelled as a point of `(Q/Z)²`.
///
/// Points of the curve itself are the degree-1 elements (Abel–Jacobi:
/// `x ↦ O(x)`), with `A` at offset `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PicPoint {
    degree: i64,
    x: BigRational,
    y: BigRational,
}

impl PicPoint {
    pub fn new(degree: i64, x: BigRational, y: BigRational) -> Self {
        PicPoint {
            degree,
            x: frac(&x),
            y: frac(&y),
        }
    }

    /// Convenience constructor from numerator/denominator pairs.
    ///
    /// Panics on a zero denominator.
    pub fn from_ratios(degree: i64, x: (i64, i64), y: (i64, i64)) -> Self {
        Self::new(
            degree,
            BigRational::new(x.0.into(), x.1.into()),
            BigRational::new(y.0.into(), y.1.into()),
        )
    }

    /// `O(A)^degree`.
    pub fn base(degree: i64) -> Self {
        Self::new(degree, BigRational::zero(), BigRational::zero())
    }

    /// The trivial bundle `O_X`.
    pub fn trivial() -> Self {
        Self::base(0)
    }

    /// The base point `A`, seen as `O(A) ∈ Pic¹`.
    pub fn base_point() -> Self {
        Self::base(1)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn offset(&self) -> (&BigRational, &BigRational) {
        (&self.x, &self.y)
    }

    /// The `Pic⁰` part, `self ⊗ O(A)^{-degree}`.
    pub fn offset_point(&self) -> PicPoint {
        PicPoint {
            degree: 0,
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }

    pub fn has_zero_offset(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.degree == 0 && self.has_zero_offset()
    }

    /// Tensor product of line bundles.
    pub fn add(&self, other: &PicPoint) -> PicPoint {
        PicPoint::new(
            self.degree + other.degree,
            &self.x + &other.x,
            &self.y + &other.y,
        )
    }

    pub fn neg(&self) -> PicPoint {
        PicPoint::new(-self.degree, -&self.x, -&self.y)
    }

    pub fn sub(&self, other: &PicPoint) -> PicPoint {
        self.add(&other.neg())
    }

    /// `k`-th tensor power.
    pub fn scale(&self, k: i64) -> PicPoint {
        let k_q = BigRational::from_integer(BigInt::from(k));
        PicPoint::new(self.degree * k, &self.x * &k_q, &self.y * &k_q)
    }

    /// Order of the offset in `(Q/Z)²`: the least `m ≥ 1` with `m·offset = 0`.
    pub fn torsion_order(&self) -> BigInt {
        self.x.denom().lcm(self.y.denom())
    }

    /// All `m²` solutions `p` of `m·p = self` with the same offset model,
    /// for a degree divisible by `m`. These are the `m`-th roots of a line
    /// bundle; there are exactly `m²` of them.
    pub fn roots(&self, m: u32) -> Option<Vec<PicPoint>> {
        if m == 0 || self.degree % m as i64 != 0 {
            return None;
        }
        let m_q = BigRational::from_integer(BigInt::from(m));
        let (x0, y0) = (&self.x / &m_q, &self.y / &m_q);
        let mut out = Vec::with_capacity((m * m) as usize);
        for i in 0..m {
            for j in 0..m {
                let dx = BigRational::new(BigInt::from(i), BigInt::from(m));
                let dy = BigRational::new(BigInt::from(j), BigInt::from(m));
                out.push(PicPoint::new(self.degree / m as i64, &x0 + dx, &y0 + dy));
            }
        }
        Some(out)
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for PicPoint {
    /// Twist syntax: `L deg @ x,y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L {} @ {},{}",
            self.degree,
            fmt_rational(&self.x),
            fmt_rational(&self.y)
        )
    }
}
