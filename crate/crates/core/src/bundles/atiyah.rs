//! Atiyah's algebra of indecomposable bundles on an elliptic curve.

use num_integer::Integer;

use super::descriptor::{BundleError, EllipticBundle, Indecomposable};
use super::pic::PicPoint;

/// `h⁰(E_A(r, d) ⊗ M)` for `d ≥ 0`: `d` when `d > 0`; for `d = 0` the bundle
/// is `F_r ⊗ M`, which has a section exactly when `M` is trivial.
pub fn h0_indecomposable(e: &Indecomposable) -> Result<u64, BundleError> {
    match e.degree() {
        d if d < 0 => Err(BundleError::NegativeDegree(d)),
        0 => Ok(u64::from(e.twist().is_trivial())),
        d => Ok(d as u64),
    }
}

/// `(E_A(r, d) ⊗ M)^* = E_A(r, -d) ⊗ M^{-1}`.
pub fn dual(e: &Indecomposable) -> Indecomposable {
    Indecomposable::new(e.rank(), -e.degree(), e.twist().neg()).expect("valid input stays valid")
}

/// `E_A(r, d) ⊗ F_h = E_A(rh, dh)` for coprime `(r, d)`.
pub fn tensor_fr(e: &Indecomposable, h: u32) -> Result<Indecomposable, BundleError> {
    if !e.is_stable() {
        return Err(BundleError::NotCoprime {
            r: e.rank(),
            d: e.degree(),
        });
    }
    if h == 0 {
        return Err(BundleError::ZeroMultiplier);
    }
    Indecomposable::new(e.rank() * h, e.degree() * h as i64, e.twist().clone())
}

/// `E_A(r, d) ⊗ E_A(r', d') = E_A(rr', rd' + r'd)` when `(r, d)`, `(r', d')`
/// and `(r, r')` are coprime pairs. Twists multiply: the result carries
/// `M ⊗ N`.
pub fn tensor_coprime(e: &Indecomposable, f: &Indecomposable) -> Result<Indecomposable, BundleError> {
    for x in [e, f] {
        if !x.is_stable() {
            return Err(BundleError::NotCoprime {
                r: x.rank(),
                d: x.degree(),
            });
        }
    }
    if e.rank().gcd(&f.rank()) != 1 {
        return Err(BundleError::RanksNotCoprime {
            r: e.rank(),
            r_prime: f.rank(),
        });
    }
    Indecomposable::new(
        e.rank() * f.rank(),
        e.rank() as i64 * f.degree() + f.rank() as i64 * e.degree(),
        e.twist().add(f.twist()),
    )
}

/// `det(E_A(r, d) ⊗ M) = O(A)^d ⊗ M^r`, additive over summands.
pub fn det(e: &EllipticBundle) -> PicPoint {
    e.indecomposable_parts()
        .iter()
        .fold(PicPoint::trivial(), |acc, p| {
            acc.add(&PicPoint::base(p.degree()).add(&p.twist().scale(p.rank() as i64)))
        })
}

/// The point of `M^ss(r, d) ≅ Sym^h X` of a semistable bundle, as a sorted
/// multiset of `h = gcd(r, d)` points of `X` (degree-1 Picard points).
///
/// A summand `E_A(r', d') ⊗ F_m ⊗ M` with `gcd(r', d') = 1` contributes `m`
/// copies of `A + r'·M`.
pub fn moduli_point(e: &EllipticBundle) -> Result<Vec<PicPoint>, BundleError> {
    if !e.is_semistable() {
        return Err(BundleError::NotSemistable);
    }
    let mut out = Vec::new();
    for p in e.indecomposable_parts() {
        let m = p.multiplicity();
        let reduced_rank = p.rank() / m;
        let point = PicPoint::base_point().add(&p.twist().scale(reduced_rank as i64));
        out.extend(std::iter::repeat_n(point, m as usize));
    }
    out.sort();
    Ok(out)
}

/// Whether a multiset of points (sorted or not) has a repeated element.
pub fn has_repeated_point(points: &[PicPoint]) -> bool {
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.windows(2).any(|w| w[0] == w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ind(r: u32, d: i64, x: (i64, i64)) -> Indecomposable {
        Indecomposable::new(r, d, PicPoint::from_ratios(0, x, (0, 1))).unwrap()
    }

    #[test]
    fn sections() {
        assert_eq!(h0_indecomposable(&ind(3, 2, (1, 3))).unwrap(), 2);
        assert_eq!(h0_indecomposable(&ind(3, 0, (0, 1))).unwrap(), 1);
        assert_eq!(h0_indecomposable(&ind(3, 0, (1, 2))).unwrap(), 0);
        assert_eq!(
            h0_indecomposable(&ind(3, -1, (0, 1))),
            Err(BundleError::NegativeDegree(-1))
        );
    }

    #[test]
    fn duals() {
        assert_eq!(dual(&ind(3, 2, (0, 1))), ind(3, -2, (0, 1)));
        assert_eq!(dual(&ind(2, 0, (1, 2))), ind(2, 0, (1, 2)));
        let e = ind(5, 3, (2, 7));
        assert_eq!(dual(&dual(&e)), e);
    }

    #[test]
    fn tensor_with_fr() {
        assert_eq!(tensor_fr(&ind(2, 1, (0, 1)), 3).unwrap(), ind(6, 3, (0, 1)));
        assert_eq!(tensor_fr(&ind(1, 0, (0, 1)), 1).unwrap(), ind(1, 0, (0, 1)));
        assert_eq!(tensor_fr(&ind(3, 1, (0, 1)), 2).unwrap(), ind(6, 2, (0, 1)));
        assert!(tensor_fr(&ind(4, 2, (0, 1)), 2).is_err());
    }

    #[test]
    fn tensor_of_coprime_bundles() {
        let a = ind(2, 1, (0, 1));
        assert_eq!(tensor_coprime(&a, &ind(3, 1, (0, 1))).unwrap(), ind(6, 5, (0, 1)));
        assert_eq!(tensor_coprime(&a, &ind(3, 2, (0, 1))).unwrap(), ind(6, 7, (0, 1)));
        let e = ind(5, 2, (1, 3));
        assert_eq!(tensor_coprime(&ind(1, 0, (0, 1)), &e).unwrap(), e);
        assert!(matches!(
            tensor_coprime(&a, &ind(4, 1, (0, 1))),
            Err(BundleError::RanksNotCoprime { .. })
        ));
    }

    #[test]
    fn tensor_product_determinant_is_consistent() {
        // det(E ⊗ F) = det(E)^{r'} ⊗ det(F)^{r}.
        let e = ind(2, 1, (1, 4));
        let f = ind(3, 2, (1, 5));
        let ef = tensor_coprime(&e, &f).unwrap();
        let det_e = det(&EllipticBundle::Indecomposable(e.clone()));
        let det_f = det(&EllipticBundle::Indecomposable(f.clone()));
        assert_eq!(
            det(&EllipticBundle::Indecomposable(ef)),
            det_e.scale(3).add(&det_f.scale(2))
        );
    }

    #[test]
    fn determinants() {
        let e = |r, d, x| EllipticBundle::Indecomposable(ind(r, d, x));
        assert_eq!(det(&e(2, 1, (0, 1))), PicPoint::base(1));
        assert_eq!(det(&e(2, 1, (1, 4))), PicPoint::from_ratios(1, (1, 2), (0, 1)));
        let x = PicPoint::from_ratios(0, (1, 3), (0, 1));
        let y = PicPoint::from_ratios(0, (1, 5), (1, 2));
        let poly = EllipticBundle::polystable(vec![
            Indecomposable::new(1, 0, x.clone()).unwrap(),
            Indecomposable::new(1, 0, y.clone()).unwrap(),
        ])
        .unwrap();
        assert_eq!(det(&poly), x.add(&y));
    }

    #[test]
    fn moduli_points() {
        let poly = EllipticBundle::polystable(vec![ind(1, 0, (0, 1)), ind(1, 0, (1, 3))]).unwrap();
        let pts = moduli_point(&poly).unwrap();
        assert_eq!(
            pts,
            vec![
                PicPoint::base_point(),
                PicPoint::from_ratios(1, (1, 3), (0, 1))
            ]
        );
        assert!(!has_repeated_point(&pts));

        let e = EllipticBundle::Indecomposable(ind(4, 2, (0, 1)));
        let pts = moduli_point(&e).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(has_repeated_point(&pts));

        let same = EllipticBundle::polystable(vec![ind(2, 1, (1, 6)); 3]).unwrap();
        let pts = moduli_point(&same).unwrap();
        assert_eq!(pts, vec![PicPoint::from_ratios(1, (1, 3), (0, 1)); 3]);

        let unstable = EllipticBundle::direct_sum(vec![
            EllipticBundle::Indecomposable(ind(1, 0, (0, 1))),
            EllipticBundle::Indecomposable(ind(1, 1, (0, 1))),
        ])
        .unwrap();
        assert_eq!(moduli_point(&unstable), Err(BundleError::NotSemistable));
    }
}
