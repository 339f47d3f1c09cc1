//! Fundamental classes of strata in `H*(Sym^h X)`.

use num_bigint::BigInt;
use serde::Serialize;

use super::mpoly::TruncatedPoly;
use super::StrataError;
use crate::cohom::{Generator, RingElement};

/// `δ_s = s·[h η^{s-1} − (s−1) η^{s-2} σ]`, the class of the diagonal
/// locus `Δ(s, 1^{h-s})`.
pub fn delta_class(s: u32, h: u32) -> Result<RingElement, StrataError> {
    if s < 2 || s > h {
        return Err(StrataError::DeltaOutOfRange { s, h });
    }
    let eta = RingElement::generator(h, Generator::Eta);
    let sigma = RingElement::generator(h, Generator::Sigma);
    let lead = eta.pow(s - 1).scale(&BigInt::from(h));
    let tail = eta
        .pow(s - 2)
        .mul(&sigma)?
        .scale(&BigInt::from(s - 1));
    Ok(lead.sub(&tail)?.scale(&BigInt::from(s)))
}

/// The diagonal morphism `X^{(n_1)} × … × X^{(n_k)} → X^{(h)}`,
/// `(D_1, …, D_k) ↦ Σ i_l D_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalSpec {
    n: Vec<u32>,
    i: Vec<u32>,
}

impl DiagonalSpec {
    pub fn new(n: Vec<u32>, i: Vec<u32>) -> Result<Self, StrataError> {
        if n.len() != i.len() {
            return Err(StrataError::LengthMismatch {
                n: n.len(),
                i: i.len(),
            });
        }
        // Zero multiplicities are allowed; ν = Σ n_l must still be positive.
        if i.contains(&0) || n.iter().all(|&x| x == 0) {
            return Err(StrataError::ZeroWeight);
        }
        Ok(DiagonalSpec { n, i })
    }

    /// `(1, h − s)` over `(s, 1)`, or `(1)` over `(h)` when `s = h`.
    pub fn standard(s: u32, h: u32) -> Result<Self, StrataError> {
        if s < 2 || s > h {
            return Err(StrataError::DeltaOutOfRange { s, h });
        }
        if s == h {
            Self::new(vec![1], vec![h])
        } else {
            Self::new(vec![1, h - s], vec![s, 1])
        }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.n
    }

    pub fn weights(&self) -> &[u32] {
        &self.i
    }

    /// `ν = Σ n_l`.
    pub fn nu(&self) -> u32 {
        self.n.iter().sum()
    }

    /// `h = Σ n_l i_l`.
    pub fn total_weight(&self) -> u32 {
        self.n.iter().zip(&self.i).map(|(n, i)| n * i).sum()
    }
}

/// The pushforward class of the diagonal morphism: the coefficient of
/// `y^N` in `P^{ν-1} η^{h-ν-1} (P η + Q (η − σ))` with
/// `P = Σ i_l y_l` and `Q = Σ (i_l² − i_l) y_l`, computed in `H*(Sym^h X)`.
pub fn diagonal_class(spec: &DiagonalSpec) -> Result<RingElement, StrataError> {
    let h = spec.total_weight();
    let nu = spec.nu();
    if h < nu + 1 {
        return Err(StrataError::DiagonalExponent { h, nu });
    }
    let bound = spec.n.clone();
    let p_coeffs: Vec<BigInt> = spec.i.iter().map(|&i| BigInt::from(i)).collect();
    let q_coeffs: Vec<BigInt> = spec
        .i
        .iter()
        .map(|&i| BigInt::from(i) * BigInt::from(i) - BigInt::from(i))
        .collect();
    let p = TruncatedPoly::linear(bound.clone(), &p_coeffs);
    let q = TruncatedPoly::linear(bound, &q_coeffs);
    let base = p.pow(nu - 1);
    let c_p = base.mul(&p).coefficient(&spec.n);
    let c_q = base.mul(&q).coefficient(&spec.n);

    let eta = RingElement::generator(h, Generator::Eta);
    let sigma = RingElement::generator(h, Generator::Sigma);
    let inner = eta.scale(&(c_p + &c_q)).sub(&sigma.scale(&c_q))?;
    Ok(eta.pow(h - nu - 1).mul(&inner)?)
}
