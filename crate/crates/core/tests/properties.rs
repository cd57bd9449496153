//! Randomized algebra-level checks for the exact arithmetic layer.

use cobcat::exactalg::{IntPoly, QPoly, RatFunc};
use num::BigRational;
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|cs| IntPoly::from_i64s(&cs))
}

fn rat_func() -> impl Strategy<Value = RatFunc> {
    (int_poly(), int_poly()).prop_map(|(n, d)| {
        let d = if d.is_zero() { IntPoly::one() } else { d };
        RatFunc::from_int_polys(&n, &d).unwrap()
    })
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntPoly::zero());
    }

    #[test]
    fn rational_function_field_axioms(x in rat_func(), y in rat_func(), z in rat_func()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, RatFunc::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn reduction_is_canonical(x in rat_func(), p in int_poly()) {
        // multiplying numerator and denominator by a common factor
        // reproduces the same reduced representative
        if !p.is_zero() {
            let scaled = RatFunc::reduce(
                &x.numer().clone() * &p.to_qpoly(),
                &x.denom().clone() * &p.to_qpoly(),
            ).unwrap();
            prop_assert_eq!(scaled, x);
        }
    }

    #[test]
    fn qpoly_gcd_divides(a in int_poly(), b in int_poly()) {
        let (qa, qb) = (a.to_qpoly(), b.to_qpoly());
        let g = qa.gcd(&qb);
        if !g.is_zero() {
            prop_assert!(qa.div_rem(&g).1.is_zero());
            prop_assert!(qb.div_rem(&g).1.is_zero());
        }
    }

    #[test]
    fn clear_denominators_round_trip(a in int_poly()) {
        let q = a.to_qpoly();
        let half = q.scale(&BigRational::new(1.into(), 2.into()));
        let (p, d) = half.clear_denominators();
        let back = p.to_qpoly().scale(&BigRational::new(1.into(), d));
        prop_assert_eq!(back, half);
    }

    #[test]
    fn display_parse_stability(a in int_poly()) {
        // canonical text form is stable under re-display
        let s1 = a.to_string();
        let s2 = a.clone().to_string();
        prop_assert_eq!(s1, s2);
    }
}

#[test]
fn qpoly_monic_and_leading() {
    let p = QPoly::t_pow(3);
    assert!(p.monic() == p);
}
