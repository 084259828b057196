use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use proptest::prelude::*;
use symres_core::scalar::{gauss_int_norm, rat};
use symres_core::z2i::all_vectors;
use symres_core::{Field, GaussInt, GaussRational, Z2i};

fn gauss_rational() -> impl Strategy<Value = GaussRational> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(a, b, c, d)| Complex::new(rat(a, b), rat(c, d)))
}

fn gauss_int() -> impl Strategy<Value = GaussInt> {
    (-1000i64..=1000, -1000i64..=1000).prop_map(|(a, b)| Complex::new(BigInt::from(a), BigInt::from(b)))
}

proptest! {
    #[test]
    fn field_axioms(a in gauss_rational(), b in gauss_rational(), c in gauss_rational()) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.inv()).is_one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul_ref(&b).conj(), a.conj().mul_ref(&b.conj()));
    }

    #[test]
    fn gauss_norm_is_multiplicative(a in gauss_int(), b in gauss_int()) {
        let ab = &a * &b;
        prop_assert_eq!(gauss_int_norm(&ab), gauss_int_norm(&a) * gauss_int_norm(&b));
        prop_assert!(gauss_int_norm(&a) >= BigInt::zero());
    }

    #[test]
    fn reduction_mod_two_is_a_ring_map(a in gauss_int(), b in gauss_int()) {
        prop_assert_eq!(Z2i::from_gauss(&(&a + &b)), Z2i::from_gauss(&a) + Z2i::from_gauss(&b));
        prop_assert_eq!(Z2i::from_gauss(&(&a * &b)), Z2i::from_gauss(&a) * Z2i::from_gauss(&b));
    }
}

#[test]
fn z2i_module_sizes() {
    let m2: Vec<_> = all_vectors(2).collect();
    assert_eq!(m2.len(), 16);
    let m0: Vec<_> = m2
        .iter()
        .filter(|v| v.iter().all(|&x| x * Z2i::ONE_PLUS_I == Z2i::ZERO))
        .collect();
    assert_eq!(m0.len(), 4);
}
