//! The integral cohomology ring `H*(Sym^n X, Z)` of the `n`-th symmetric
//! product of a genus-1 curve.
//!
//! The ring is generated by two odd classes `ξ`, `ξ'` of degree 1 and an even
//! class `η` of degree 2. The odd generators anticommute with each other and
//! commute with `η`; `σ = ξξ'` and the single defining relation is
//! `(σ - η)·η^{n-1} = 0`.
//!
//! Elements are kept in a normal form over the monomials `ξ^a ξ'^b σ^c η^q`:
//!
//! - `ξξ'` is always written as `σ` (so `a` and `b` are never both 1),
//! - `ξσ = ξ'σ = σ² = ξ² = ξ'² = 0`,
//! - `η^n` is rewritten as `ση^{n-1}`, so `q ≤ n - 1`.
//!
//! With these rules the degree-`p` part of the basis has rank
//! `1, 2, 2, …, 2, 1` for `p = 0, …, 2n`.

pub mod oracle;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("incompatible ambient spaces: Sym^{left} and Sym^{right}")]
    AmbientMismatch { left: u32, right: u32 },
    #[error("monomial {monomial} is not in normal form for Sym^{n}")]
    InvalidMonomial { monomial: Monomial, n: u32 },
}

/// A normal-form monomial `ξ^a ξ'^b σ^c η^q`.
///
/// Monomials are ordered by `(degree, a, b, c, q)`, which is also the order
/// terms are printed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial::new(false, false, false, 0);

    pub const fn new(a: bool, b: bool, c: bool, q: u32) -> Self {
        Monomial { a, b, c, q }
    }

    /// Cohomological degree `a + b + 2c + 2q`.
    pub fn degree(&self) -> u32 {
        self.a as u32 + self.b as u32 + 2 * self.c as u32 + 2 * self.q
    }

    /// Whether this monomial is a normal-form basis element of `H*(Sym^n X)`.
    pub fn is_normal_for(&self, n: u32) -> bool {
        !(self.a && self.b)
            && !(self.c && (self.a || self.b))
            && n >= 1
            && self.q < n
            && self.degree() <= 2 * n
    }

    fn key(&self) -> (u32, bool, bool, bool, u32) {
        (self.degree(), self.a, self.b, self.c, self.q)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        if self.a {
            factors.push("xi".into());
        }
        if self.b {
            factors.push("xi'".into());
        }
        if self.c {
            factors.push("sigma".into());
        }
        match self.q {
            0 => {}
            1 => factors.push("eta".into()),
            q => factors.push(format!("eta^{q}")),
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Reduce the word `ξ^a ξ'^b σ^c η^q` (exponents unrestricted) to a signed
/// normal-form monomial, or `None` when it vanishes.
fn normalize_word(n: u32, a: u32, b: u32, c: u32, q: u32) -> Option<Monomial> {
    if a > 1 || b > 1 {
        return None;
    }
    let (mut a, mut b, mut c, mut q) = (a == 1, b == 1, c, q);
    if a && b {
        a = false;
        b = false;
        c += 1;
    }
    let vanishes = |a: bool, b: bool, c: u32| c > 1 || (c == 1 && (a || b));
    if vanishes(a, b, c) {
        return None;
    }
    while q >= n {
        // η^n = σ η^{n-1}
        q -= 1;
        c += 1;
        if vanishes(a, b, c) {
            return None;
        }
    }
    Some(Monomial::new(a, b, c == 1, q))
}

/// Product of two normal-form monomials, as a sign and a monomial.
fn mul_monomials(n: u32, x: &Monomial, y: &Monomial) -> Option<(bool, Monomial)> {
    // ξ^{a1} ξ'^{b1} · ξ^{a2}: moving ξ^{a2} left across ξ'^{b1}.
    let negative = x.b && y.a;
    normalize_word(
        n,
        x.a as u32 + y.a as u32,
        x.b as u32 + y.b as u32,
        x.c as u32 + y.c as u32,
        x.q + y.q,
    )
    .map(|m| (negative, m))
}

/// All normal-form basis monomials of `H*(Sym^n X)`, in print order.
pub fn basis(n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for q in 0..n {
        for (a, b, c) in [
            (false, false, false),
            (true, false, false),
            (false, true, false),
            (false, false, true),
        ] {
            let m = Monomial::new(a, b, c, q);
            if m.is_normal_for(n) {
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

/// Rank of each graded piece of the normal-form basis, indexed by degree.
pub fn basis_ranks(n: u32) -> Vec<u64> {
    let mut ranks = vec![0u64; 2 * n as usize + 1];
    for m in basis(n) {
        ranks[m.degree() as usize] += 1;
    }
    ranks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    One,
    Xi,
    XiPrime,
    Eta,
    Sigma,
}

/// An element of `H*(Sym^n X, Z)` in normal form.
///
/// Zero coefficients are never stored, so structural equality is equality
/// in the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    n: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl RingElement {
    /// The zero element of `H*(Sym^n X)`.
    ///
    /// Panics if `n == 0`.
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "the ambient symmetric power must be positive");
        RingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::generator(n, Generator::One)
    }

    /// The named generator in normal form. At `n = 1` the relation forces
    /// `η = σ`, and `eta` normalises accordingly.
    pub fn generator(n: u32, which: Generator) -> Self {
        let (a, b, c, q) = match which {
            Generator::One => (0, 0, 0, 0),
            Generator::Xi => (1, 0, 0, 0),
            Generator::XiPrime => (0, 1, 0, 0),
            Generator::Eta => (0, 0, 0, 1),
            Generator::Sigma => (0, 0, 1, 0),
        };
        Self::word(n, BigInt::one(), a, b, c, q)
    }

    /// `coeff · ξ^a ξ'^b σ^c η^q`, reduced to normal form.
    pub fn word(n: u32, coeff: BigInt, a: u32, b: u32, c: u32, q: u32) -> Self {
        let mut out = Self::zero(n);
        if let Some(m) = normalize_word(n, a, b, c, q) {
            out.add_term(m, coeff);
        }
        out
    }

    /// Build an element from explicit normal-form terms.
    pub fn from_terms<I>(n: u32, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut out = Self::zero(n);
        for (m, c) in terms {
            if !m.is_normal_for(n) {
                return Err(RingError::InvalidMonomial { monomial: m, n });
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn constant(n: u32, value: impl Into<BigInt>) -> Self {
        Self::one(n).scale(&value.into())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// The ambient symmetric power `n`.
    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), RingError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(RingError::AmbientMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RingElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(*m, c * k);
        }
        out
    }

    /// Graded-commutative product, reduced to normal form.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.n);
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                if let Some((negative, m)) = mul_monomials(self.n, mx, my) {
                    let c = cx * cy;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same ambient");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ambient");
            }
        }
        acc
    }

    /// Stored coefficient of `m`, zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> Result<BigInt, RingError> {
        if !m.is_normal_for(self.n) {
            return Err(RingError::InvalidMonomial {
                monomial: *m,
                n: self.n,
            });
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// The component of cohomological degree `p`.
    pub fn homogeneous_part(&self, p: u32) -> Self {
        RingElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == p)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `Some(p)` when every term has degree `p`; `None` for zero or mixed
    /// elements.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Sign of the Koszul rule for homogeneous elements of degrees `p`, `q`.
    pub fn koszul_sign(p: u32, q: u32) -> BigInt {
        if (p * q) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Total Chern class `(1 + η)^{n-1}·(1 + η - σ)` of `Sym^n X`.
pub fn chern_total(n: u32) -> RingElement {
    let one = RingElement::one(n);
    let eta = RingElement::generator(n, Generator::Eta);
    let sigma = RingElement::generator(n, Generator::Sigma);
    let one_plus_eta = one.add(&eta).expect("same ambient");
    let last = one_plus_eta.sub(&sigma).expect("same ambient");
    one_plus_eta
        .pow(n - 1)
        .mul(&last)
        .expect("same ambient")
}
