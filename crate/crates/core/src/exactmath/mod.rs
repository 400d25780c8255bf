//! Exact scalar and polynomial arithmetic.
//!
//! [`Rational`] wraps an arbitrary-precision rational; [`QPoly`] is an
//! integer polynomial in `q`; [`QRational`] is a quotient of two `QPoly`s.

mod qpoly;
mod qrational;
mod rational;

pub use qpoly::{grassmannian_poincare, projective_poincare, QPoly};
pub use qrational::QRational;
pub use rational::{rat, Rational};

#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn grassmannian_symmetric_and_palindromic(n in 0u32..=12, k_frac in 0.0f64..=1.0) {
            let k = ((n as f64) * k_frac).round() as u32;
            let g = grassmannian_poincare(k, n).unwrap();
            prop_assert_eq!(&g, &grassmannian_poincare(n - k, n).unwrap());
            prop_assert!(g.is_palindromic().unwrap());
        }

        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-9i64..9, 1..6),
                            b in prop::collection::vec(-9i64..9, 1..6),
                            f in prop::collection::vec(-3i64..3, 1..3)) {
            let (a, b, f) = (QPoly::from_i64s(&a), QPoly::from_i64s(&b), QPoly::from_i64s(&f));
            let (fa, fb) = (&a * &f, &b * &f);
            let g = fa.gcd(&fb);
            if !g.is_zero() {
                prop_assert!(fa.div_exact(&g).is_ok());
                prop_assert!(fb.div_exact(&g).is_ok());
                if !f.is_zero() {
                    prop_assert!(g.div_exact(&f.primitive_part()).is_ok());
                }
            }
        }
    }

    #[test]
    fn projective_value_at_one() {
        for n in 0..=30u32 {
            assert_eq!(projective_poincare(n).value_at_one(), BigInt::from(n + 1));
        }
    }
}
