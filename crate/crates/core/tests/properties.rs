mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use wobbly::bundles::atiyah::{dual, has_repeated_point, moduli_point, tensor_coprime};
use wobbly::bundles::{
    classify_elliptic, classify_p1, parse_elliptic, parse_twist, EllipticBundle, GZeroBundle,
    Indecomposable, Outcome, PicPoint,
};
use wobbly::cli::parse_ring_expr;
use wobbly::cohom::{basis, RingElement};
use wobbly::strata::{contains, delta_class, WeightTuple};

use num_integer::Integer;

fn ring_element(n: u32) -> impl Strategy<Value = RingElement> {
    let size = basis(n).len();
    prop::collection::vec(-5i64..=5, size).prop_map(move |coeffs| {
        let terms = basis(n)
            .into_iter()
            .zip(coeffs)
            .map(|(m, c)| (m, BigInt::from(c)));
        RingElement::from_terms(n, terms).unwrap()
    })
}

fn homogeneous(n: u32) -> impl Strategy<Value = (u32, RingElement)> {
    (0..=2 * n, ring_element(n)).prop_map(|(p, x)| (p, x.homogeneous_part(p)))
}

fn offset() -> impl Strategy<Value = PicPoint> {
    (1i64..=6, 0i64..6, 1i64..=6, 0i64..6).prop_map(|(dx, nx, dy, ny)| {
        PicPoint::from_ratios(0, (nx, dx), (ny, dy))
    })
}

fn indecomposable() -> impl Strategy<Value = Indecomposable> {
    (1u32..=6, -6i64..=6, offset()).prop_map(|(r, d, m)| Indecomposable::new(r, d, m).unwrap())
}

fn stable() -> impl Strategy<Value = Indecomposable> {
    indecomposable().prop_filter("coprime", Indecomposable::is_stable)
}

fn polystable() -> impl Strategy<Value = EllipticBundle> {
    (1u32..=3, -4i64..=4)
        .prop_filter("coprime", |(r, d)| (*r as i64).gcd(d) == 1)
        .prop_flat_map(|(r, d)| {
            prop::collection::vec(offset(), 1..=4).prop_map(move |ms| {
                EllipticBundle::polystable(
                    ms.into_iter()
                        .map(|m| Indecomposable::new(r, d, m).unwrap())
                        .collect(),
                )
                .unwrap()
            })
        })
}

fn bundle() -> impl Strategy<Value = EllipticBundle> {
    prop_oneof![
        indecomposable().prop_map(EllipticBundle::Indecomposable),
        polystable(),
        prop::collection::vec(indecomposable().prop_map(EllipticBundle::Indecomposable), 2..=3)
            .prop_map(|parts| EllipticBundle::direct_sum(parts).unwrap()),
    ]
}

fn twist() -> impl Strategy<Value = PicPoint> {
    (-3i64..=3, offset()).prop_map(|(d, m)| m.add(&PicPoint::base(d)))
}

fn partition() -> impl Strategy<Value = WeightTuple> {
    (1u32..=7).prop_flat_map(|h| {
        prop::collection::vec(1u32..=h, 1..=h as usize).prop_map(move |mut parts| {
            // Trim to total weight h, padding with ones.
            let mut total = 0;
            parts.retain(|&p| {
                let keep = total + p <= h;
                total += if keep { p } else { 0 };
                keep
            });
            parts.extend(std::iter::repeat_n(1, (h - total) as usize));
            WeightTuple::new(parts).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn ring_laws(x in ring_element(3), y in ring_element(3), z in ring_element(3)) {
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.mul(&RingElement::one(3)).unwrap(), x.clone());
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn graded_commutativity((p, x) in homogeneous(4), (q, y) in homogeneous(4)) {
        let sign = RingElement::koszul_sign(p, q);
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap().scale(&sign));
    }

    #[test]
    fn printed_elements_reparse(x in ring_element(4)) {
        let e = parse_ring_expr(&x.to_string()).unwrap().eval(4).unwrap();
        prop_assert_eq!(e, x);
    }

    #[test]
    fn verdict_is_shift_invariant(e in bundle(), l in twist(), k in -3i64..=3) {
        let parts: Vec<EllipticBundle> = e
            .indecomposable_parts()
            .into_iter()
            .map(|p| EllipticBundle::indecomposable(p.rank(), p.degree() + p.rank() as i64 * k, p.twist().clone()).unwrap())
            .collect();
        let shifted = match &e {
            EllipticBundle::Polystable(_) => EllipticBundle::polystable(
                parts.iter().flat_map(EllipticBundle::indecomposable_parts).collect()
            ).unwrap(),
            _ => EllipticBundle::direct_sum(parts).unwrap(),
        };
        prop_assert_eq!(classify_elliptic(&e, &l), classify_elliptic(&shifted, &l));
    }

    #[test]
    fn verdict_matches_table(e in bundle(), l in twist()) {
        let v = classify_elliptic(&e, &l);
        let (outcome, reason) = common::reference_elliptic(&common::parts_of(&e), l.degree(), &l.offset_point());
        prop_assert_eq!((v.outcome, v.reason.as_str()), (outcome, reason));
        if l.degree() >= 0 && v.outcome == Outcome::VeryStable {
            prop_assert!(e.is_semistable());
        }
    }

    #[test]
    fn canonical_twist_uses_moduli_point(e in polystable()) {
        let v = classify_elliptic(&e, &PicPoint::trivial());
        if e.rank() > 1 {
            let repeated = has_repeated_point(&moduli_point(&e).unwrap());
            prop_assert_eq!(v.outcome == Outcome::Wobbly, repeated);
        }
    }

    #[test]
    fn p1_rules(degrees in prop::collection::vec(-5i64..=5, 1..=4), t in -5i64..=2, c in -4i64..=4) {
        let e = GZeroBundle::new(degrees.clone()).unwrap();
        let v = classify_p1(&e, t);
        prop_assert_eq!(v, classify_p1(&e.twist(c), t));
        if degrees.len() == 1 {
            prop_assert_eq!(v.outcome, Outcome::VeryStable);
        }
        prop_assert_eq!(v.outcome, common::reference_p1(&degrees, t));
    }

    #[test]
    fn dual_is_involution(e in indecomposable()) {
        prop_assert_eq!(dual(&dual(&e)), e);
    }

    #[test]
    fn tensor_is_commutative(a in stable(), b in stable()) {
        match (tensor_coprime(&a, &b), tensor_coprime(&b, &a)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "tensor_coprime is not symmetric in its preconditions"),
        }
    }

    #[test]
    fn descriptors_round_trip(e in bundle(), l in twist()) {
        prop_assert_eq!(parse_elliptic(&e.to_string()).unwrap(), e);
        prop_assert_eq!(parse_twist(&l.to_string()).unwrap(), l);
    }

    #[test]
    fn containment_is_a_partial_order(a in partition(), b in partition(), c in partition()) {
        prop_assert!(contains(&a, &a).unwrap());
        if a.total() == b.total() {
            let ab = contains(&a, &b).unwrap();
            let ba = contains(&b, &a).unwrap();
            if ab && ba {
                prop_assert_eq!(&a, &b);
            }
            prop_assert_eq!(ab, common::expressibility_contains(a.weights(), b.weights()));
            if a.total() == c.total() && ab && contains(&b, &c).unwrap() {
                prop_assert!(contains(&a, &c).unwrap());
            }
        }
    }

    #[test]
    fn delta_shape(h in 2u32..=10, s in 2u32..=10) {
        prop_assume!(s <= h);
        let d = delta_class(s, h).unwrap();
        prop_assert_eq!(d.homogeneous_degree(), Some(2 * (s - 1)));
        let eta = wobbly::cohom::Monomial::new(false, false, false, s - 1);
        let sigma_eta = wobbly::cohom::Monomial::new(false, false, true, s - 2);
        prop_assert_eq!(d.coefficient_of(&eta).unwrap(), BigInt::from(s * h));
        prop_assert_eq!(d.coefficient_of(&sigma_eta).unwrap(), -BigInt::from(s * (s - 1)));
    }
}
