//! Sparse multivariate integer polynomials truncated at a fixed multidegree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// A polynomial in `y_1, …, y_k` in which every monomial whose exponent
/// exceeds `bound` in some variable is discarded. Truncation commutes with
/// multiplication, so products agree with the full product on every
/// monomial that survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    bound: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPoly {
    pub fn zero(bound: Vec<u32>) -> Self {
        TruncatedPoly {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: Vec<u32>) -> Self {
        let mut p = Self::zero(bound);
        let k = p.bound.len();
        p.insert(vec![0; k], BigInt::from(1));
        p
    }

    /// `Σ c_l y_l`.
    pub fn linear(bound: Vec<u32>, coeffs: &[BigInt]) -> Self {
        assert_eq!(bound.len(), coeffs.len());
        let mut p = Self::zero(bound);
        for (l, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[l] = 1;
            p.insert(e, c.clone());
        }
        p
    }

    fn insert(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() || exps.iter().zip(&self.bound).any(|(e, b)| e > b) {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound);
        let mut out = Self::zero(self.bound.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.bound.clone()), |acc, _| acc.mul(self))
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_row() {
        let p = TruncatedPoly::linear(vec![5, 5], &[BigInt::from(1), BigInt::from(1)]);
        let p5 = p.pow(5);
        let row: Vec<BigInt> = (0..=5).map(|i| p5.coefficient(&[i, 5 - i])).collect();
        let expected: Vec<BigInt> = [1, 5, 10, 10, 5, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn truncation_drops_high_terms() {
        let p = TruncatedPoly::linear(vec![1, 2], &[BigInt::from(2), BigInt::from(3)]);
        let p3 = p.pow(3);
        // (2a + 3b)^3 restricted to a^{≤1} b^{≤2}: only 3·2·9 a b².
        assert_eq!(p3.len(), 1);
        assert_eq!(p3.coefficient(&[1, 2]), BigInt::from(54));
    }
}
