//! Poincaré polynomials and Betti numbers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("need h >= 2 (got h = {h})")]
    AmbientTooSmall { h: u32 },
    #[error("s = {s} is outside 2..={h}")]
    SublocusOutOfRange { h: u32, s: u32 },
    #[error("genus must be at least 2 (got {g})")]
    GenusTooSmall { g: u32 },
    #[error("lambda must be 0 or 1 (got {lambda})")]
    BadLambda { lambda: u32 },
    #[error("k = {k} is outside {lo}..={hi} for g = {g}, lambda = {lambda}")]
    IndexOutOfRange {
        g: u32,
        k: i64,
        lambda: u32,
        lo: i64,
        hi: i64,
    },
}

/// A Poincaré polynomial; coefficient `i` is the `i`-th Betti number.
/// Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial {
    coeffs: Vec<BigUint>,
}

impl PoincarePolynomial {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        let mut p = PoincarePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = u64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(BigUint::from).collect())
    }

    /// The Poincaré polynomial of a point.
    pub fn point() -> Self {
        Self::from_coeffs([1])
    }

    pub fn constant(c: BigUint) -> Self {
        Self::new(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Top degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Value at `z = 1`: the total rank of cohomology.
    pub fn total_rank(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Value at `z = -1`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c = BigInt::from(c.clone());
                if i % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    /// Coefficientwise product: the Poincaré polynomial of a product space.
    pub fn kunneth(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Comma-separated coefficient list, e.g. `1,2,2,2,1`.
    pub fn to_comma_list(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_record(&self) -> PoincareRecord {
        PoincareRecord {
            coefficients: self.coeffs.iter().map(ToString::to_string).collect(),
            list: self.to_comma_list(),
            polynomial: self.to_string(),
        }
    }
}

/// Serialisable form used in JSON output. Coefficients are decimal strings
/// so arbitrarily large Betti numbers survive a round trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareRecord {
    pub coefficients: Vec<String>,
    pub list: String,
    pub polynomial: String,
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coeff = if c.is_one() && i > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match i {
                    0 => coeff,
                    1 => format!("{coeff}z"),
                    _ => format!("{coeff}z^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Betti numbers of `Sym^n` of a genus-`g` curve: the coefficient of `t^n`
/// in `(1 + zt)^{2g} / ((1 - t)(1 - z²t))`.
///
/// The numerator contributes `C(2g, i) z^i t^i` and the denominator
/// `t^m (1 + z² + … + z^{2m})`, so the `t^n` coefficient is
/// `Σ_i C(2g, i) z^i (1 + z² + … + z^{2(n-i)})`.
pub fn poincare_sym(g: u32, n: u32) -> PoincarePolynomial {
    let mut coeffs = vec![BigUint::zero(); 2 * n as usize + 1];
    for i in 0..=n.min(2 * g) {
        let c = binomial(2 * g as u64, i as u64);
        for j in 0..=(n - i) {
            coeffs[(i + 2 * j) as usize] += &c;
        }
    }
    PoincarePolynomial::new(coeffs)
}

/// Betti numbers of a `P^{fiber_dim}`-bundle over a base:
/// `h^i = Σ_{t=0}^{fiber_dim} h^{i-2t}(base)`.
pub fn poincare_projective_bundle(base: &PoincarePolynomial, fiber_dim: u32) -> PoincarePolynomial {
    (0..=fiber_dim as usize).fold(PoincarePolynomial::new(Vec::new()), |acc, t| {
        acc.add(&base.shift(2 * t))
    })
}

pub fn kunneth(p: &PoincarePolynomial, q: &PoincarePolynomial) -> PoincarePolynomial {
    p.kunneth(q)
}

fn check_sublocus(h: u32, s: u32) -> Result<(), BettiError> {
    if h < 2 {
        return Err(BettiError::AmbientTooSmall { h });
    }
    if !(2..=h).contains(&s) {
        return Err(BettiError::SublocusOutOfRange { h, s });
    }
    Ok(())
}

/// Poincaré polynomial of the standard sublocus `X × Sym^{h-s}(X)` of
/// `Sym^h X`, for `2 ≤ s ≤ h`.
pub fn poincare_std_sublocus(h: u32, s: u32) -> Result<PoincarePolynomial, BettiError> {
    check_sublocus(h, s)?;
    Ok(kunneth(&poincare_sym(1, 1), &poincare_sym(1, h - s)))
}

/// Poincaré polynomial of the standard sublocus with fixed determinant:
/// `h²` points when `s = h`, otherwise a `P^{h-s-1}`-bundle over the curve.
pub fn poincare_fixed_det(h: u32, s: u32) -> Result<PoincarePolynomial, BettiError> {
    check_sublocus(h, s)?;
    if s == h {
        return Ok(PoincarePolynomial::constant(BigUint::from(h) * h));
    }
    Ok(poincare_projective_bundle(&poincare_sym(1, 1), h - s - 1))
}

/// Class of the wobbly component `W_k` of the rank-2 fixed-determinant
/// moduli space on a genus-`g` curve, as a multiple of the ample generator:
/// `2^{2k} · C(g, 2g - 2k - λ)` for `⌈(g-λ)/2⌉ ≤ k ≤ g - λ`.
pub fn cl_wk(g: u32, k: i64, lambda: u32) -> Result<BigUint, BettiError> {
    if g < 2 {
        return Err(BettiError::GenusTooSmall { g });
    }
    if lambda > 1 {
        return Err(BettiError::BadLambda { lambda });
    }
    let lo = Integer::div_ceil(&(g as i64 - lambda as i64), &2);
    let hi = g as i64 - lambda as i64;
    if k < lo || k > hi {
        return Err(BettiError::IndexOutOfRange {
            g,
            k,
            lambda,
            lo,
            hi,
        });
    }
    let bottom = (2 * g as i64 - 2 * k - lambda as i64)
        .to_u64()
        .expect("non-negative in range");
    Ok((BigUint::one() << (2 * k as usize)) * binomial(g as u64, bottom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u64]) -> PoincarePolynomial {
        PoincarePolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn symmetric_products() {
        assert_eq!(poincare_sym(0, 3), p(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(poincare_sym(1, 2), p(&[1, 2, 2, 2, 1]));
        assert_eq!(poincare_sym(1, 1), p(&[1, 2, 1]));
        assert_eq!(poincare_sym(1, 0), PoincarePolynomial::point());
        // Sym^1 of a genus-2 curve is the curve.
        assert_eq!(poincare_sym(2, 1), p(&[1, 4, 1]));
    }

    #[test]
    fn kunneth_products() {
        assert_eq!(
            kunneth(&p(&[1, 2, 1]), &p(&[1, 2, 2, 2, 1])),
            p(&[1, 4, 7, 8, 7, 4, 1])
        );
        let x = p(&[1, 4, 7, 8, 7, 4, 1]);
        assert_eq!(kunneth(&x, &PoincarePolynomial::point()), x);
        assert_eq!(kunneth(&p(&[1, 1]), &p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn standard_sublocus() {
        assert_eq!(poincare_std_sublocus(4, 2).unwrap(), p(&[1, 4, 7, 8, 7, 4, 1]));
        assert_eq!(poincare_std_sublocus(3, 3).unwrap(), p(&[1, 2, 1]));
        assert_eq!(
            poincare_std_sublocus(5, 2).unwrap(),
            p(&[1, 4, 7, 8, 8, 8, 7, 4, 1])
        );
        assert_eq!(
            poincare_std_sublocus(4, 1),
            Err(BettiError::SublocusOutOfRange { h: 4, s: 1 })
        );
        assert_eq!(
            poincare_std_sublocus(4, 5),
            Err(BettiError::SublocusOutOfRange { h: 4, s: 5 })
        );
    }

    #[test]
    fn fixed_determinant() {
        assert_eq!(poincare_fixed_det(4, 4).unwrap(), p(&[16]));
        assert_eq!(poincare_fixed_det(4, 2).unwrap(), p(&[1, 2, 2, 2, 1]));
        assert_eq!(poincare_fixed_det(3, 2).unwrap(), p(&[1, 2, 1]));
        assert!(poincare_fixed_det(1, 1).is_err());
    }

    #[test]
    fn wobbly_class_evaluator() {
        assert_eq!(cl_wk(2, 1, 1).unwrap(), BigUint::from(8u32));
        assert_eq!(cl_wk(2, 2, 0).unwrap(), BigUint::from(16u32));
        assert_eq!(cl_wk(3, 3, 0).unwrap(), BigUint::from(64u32));
        assert!(matches!(
            cl_wk(3, 1, 0),
            Err(BettiError::IndexOutOfRange { lo: 2, hi: 3, .. })
        ));
        assert!(cl_wk(1, 1, 0).is_err());
        assert!(cl_wk(3, 2, 2).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 4, 7]).to_string(), "1 + 4z + 7z^2");
        assert_eq!(p(&[1, 0, 1]).to_string(), "1 + z^2");
        assert_eq!(p(&[1, 2, 1]).to_comma_list(), "1,2,1");
        assert_eq!(PoincarePolynomial::new(vec![]).to_string(), "0");
    }

    #[test]
    fn euler_characteristic_and_palindromes() {
        let x = poincare_std_sublocus(6, 3).unwrap();
        assert!(x.is_palindromic());
        assert!(x.euler_characteristic().is_zero());
        assert_eq!(x.total_rank(), BigUint::from(48u32));
        assert!(!p(&[1, 2]).is_palindromic());
    }
}
