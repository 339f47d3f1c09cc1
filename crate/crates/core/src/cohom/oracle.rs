//! Brute-force check of the normal-form ring against `H*(X^n, Z)`.
//!
//! `H*(X)` has basis `1, α, α', β` with `αα' = -α'α = β` and every other
//! product of positive-degree classes zero. `H*(X^n)` is the graded tensor
//! product, and the symmetric classes
//! `ξ = Σ α_k`, `ξ' = Σ α'_k`, `η = Σ β_k` span the image of
//! `H*(Sym^n X)`. The check multiplies every pair of normal-form basis
//! monomials both ways and compares.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{basis, Monomial, RingElement};

/// One tensor factor of a basis element of `H*(X^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveClass {
    One,
    Alpha,
    AlphaPrime,
    Beta,
}

impl CurveClass {
    fn degree(self) -> u32 {
        match self {
            CurveClass::One => 0,
            CurveClass::Alpha | CurveClass::AlphaPrime => 1,
            CurveClass::Beta => 2,
        }
    }

    /// Product in `H*(X)`, as `(negative, class)`.
    fn mul(self, other: CurveClass) -> Option<(bool, CurveClass)> {
        use CurveClass::*;
        match (self, other) {
            (One, x) | (x, One) => Some((false, x)),
            (Alpha, AlphaPrime) => Some((false, Beta)),
            (AlphaPrime, Alpha) => Some((true, Beta)),
            _ => None,
        }
    }
}

/// An element of `H*(X^n, Z)` over the tensor basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRingElement {
    n: usize,
    terms: BTreeMap<Vec<CurveClass>, BigInt>,
}

impl ProductRingElement {
    pub fn zero(n: usize) -> Self {
        ProductRingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut out = Self::zero(n);
        out.add_term(vec![CurveClass::One; n], BigInt::one());
        out
    }

    /// `Σ_k c_k`, the class `c` placed in each factor in turn.
    pub fn symmetric_sum(n: usize, class: CurveClass) -> Self {
        let mut out = Self::zero(n);
        for k in 0..n {
            let mut word = vec![CurveClass::One; n];
            word[k] = class;
            out.add_term(word, BigInt::one());
        }
        out
    }

    fn add_term(&mut self, word: Vec<CurveClass>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// Product with the Koszul sign of the graded tensor product:
    /// `(x_1⊗…⊗x_n)(y_1⊗…⊗y_n) = (-1)^{Σ_{i>j} |x_i||y_j|} (x_1y_1⊗…⊗x_ny_n)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (wx, cx) in &self.terms {
            for (wy, cy) in &other.terms {
                let mut negative = false;
                let mut word = Vec::with_capacity(self.n);
                let mut dead = false;
                for j in 0..self.n {
                    let passed: u32 = wx[j + 1..].iter().map(|x| x.degree()).sum();
                    if (passed * wy[j].degree()) % 2 == 1 {
                        negative = !negative;
                    }
                    match wx[j].mul(wy[j]) {
                        Some((neg, c)) => {
                            negative ^= neg;
                            word.push(c);
                        }
                        None => {
                            dead = true;
                            break;
                        }
                    }
                }
                if dead {
                    continue;
                }
                let c = cx * cy;
                out.add_term(word, if negative { -c } else { c });
            }
        }
        out
    }

    /// Coefficient vector over all `4^n` tensor basis words.
    fn dense(&self) -> Vec<BigInt> {
        let classes = [
            CurveClass::One,
            CurveClass::Alpha,
            CurveClass::AlphaPrime,
            CurveClass::Beta,
        ];
        let mut out = vec![BigInt::zero(); 4usize.pow(self.n as u32)];
        for (w, c) in &self.terms {
            let idx = w.iter().fold(0usize, |acc, x| {
                acc * 4 + classes.iter().position(|y| y == x).unwrap()
            });
            out[idx] = c.clone();
        }
        out
    }
}

impl fmt::Display for ProductRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let factors: Vec<String> = w
                    .iter()
                    .enumerate()
                    .filter_map(|(k, x)| match x {
                        CurveClass::One => None,
                        CurveClass::Alpha => Some(format!("a{}", k + 1)),
                        CurveClass::AlphaPrime => Some(format!("a'{}", k + 1)),
                        CurveClass::Beta => Some(format!("b{}", k + 1)),
                    })
                    .collect();
                let word = if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                };
                format!("({c})*{word}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Images of the generators of `H*(Sym^n X)` inside `H*(X^n)`.
#[derive(Debug, Clone)]
pub struct SymmetrizationEmbedding {
    n: usize,
    xi: ProductRingElement,
    xi_prime: ProductRingElement,
    sigma: ProductRingElement,
    eta: ProductRingElement,
}

impl SymmetrizationEmbedding {
    pub fn new(n: usize) -> Self {
        let xi = ProductRingElement::symmetric_sum(n, CurveClass::Alpha);
        let xi_prime = ProductRingElement::symmetric_sum(n, CurveClass::AlphaPrime);
        let sigma = xi.mul(&xi_prime);
        let eta = ProductRingElement::symmetric_sum(n, CurveClass::Beta);
        SymmetrizationEmbedding {
            n,
            xi,
            xi_prime,
            sigma,
            eta,
        }
    }

    pub fn xi(&self) -> &ProductRingElement {
        &self.xi
    }

    pub fn xi_prime(&self) -> &ProductRingElement {
        &self.xi_prime
    }

    pub fn sigma(&self) -> &ProductRingElement {
        &self.sigma
    }

    pub fn eta(&self) -> &ProductRingElement {
        &self.eta
    }

    /// Image of `ξ^a ξ'^b σ^c η^q`, multiplied out in that order.
    pub fn monomial(&self, m: &Monomial) -> ProductRingElement {
        let mut acc = ProductRingElement::one(self.n);
        if m.a {
            acc = acc.mul(&self.xi);
        }
        if m.b {
            acc = acc.mul(&self.xi_prime);
        }
        if m.c {
            acc = acc.mul(&self.sigma);
        }
        for _ in 0..m.q {
            acc = acc.mul(&self.eta);
        }
        acc
    }

    pub fn element(&self, x: &RingElement) -> ProductRingElement {
        x.terms()
            .fold(ProductRingElement::zero(self.n), |acc, (m, c)| {
                acc.add(&self.monomial(m).scale(c))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMismatch {
    pub left: Monomial,
    pub right: Monomial,
    pub normal_form: String,
    pub product_ring: String,
}

/// Outcome of [`oracle_product_ring_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: u32,
    pub pairs_checked: usize,
    /// Rank over `Q` of the images of the normal-form basis.
    pub basis_rank: usize,
    pub basis_size: usize,
    pub mismatch: Option<OracleMismatch>,
}

impl OracleReport {
    pub fn is_success(&self) -> bool {
        self.mismatch.is_none() && self.basis_rank == self.basis_size
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "n = {}: {} basis products agree; image rank {}/{}",
                self.n, self.pairs_checked, self.basis_rank, self.basis_size
            ),
            Some(m) => write!(
                f,
                "n = {}: mismatch for ({})·({}): normal form gives {}, H*(X^n) gives {}",
                self.n, m.left, m.right, m.normal_form, m.product_ring
            ),
        }
    }
}

fn rank(rows: Vec<Vec<BigInt>>) -> usize {
    let mut rows: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pivot_row[col];
                for c in col..cols {
                    let delta = &factor * &pivot_row[c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Multiply every pair of normal-form basis monomials in `H*(Sym^n X)` and
/// in `H*(X^n)` and report the first disagreement. Intended for `n ≤ 3`.
pub fn oracle_product_ring_check(n: u32) -> OracleReport {
    let embed = SymmetrizationEmbedding::new(n as usize);
    let basis = basis(n);
    let images: Vec<ProductRingElement> = basis.iter().map(|m| embed.monomial(m)).collect();
    let basis_rank = rank(images.iter().map(|x| x.dense()).collect());
    let mut pairs_checked = 0;
    let mut mismatch = None;
    'outer: for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let lhs = RingElement::from_terms(n, [(*x, BigInt::one())])
                .and_then(|ex| ex.mul(&RingElement::from_terms(n, [(*y, BigInt::one())])?))
                .expect("basis monomials are normal");
            let via_normal_form = embed.element(&lhs);
            let direct = images[i].mul(&images[j]);
            pairs_checked += 1;
            if via_normal_form != direct {
                mismatch = Some(OracleMismatch {
                    left: *x,
                    right: *y,
                    normal_form: lhs.to_string(),
                    product_ring: direct.to_string(),
                });
                break 'outer;
            }
        }
    }
    OracleReport {
        n,
        pairs_checked,
        basis_rank,
        basis_size: basis.len(),
        mismatch,
    }
}
