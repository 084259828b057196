use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use symres_core::scalar::rat_int;
use symres_core::{smith_normal_form, IntMatrix, Matrix, Rational};

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

fn det(m: &IntMatrix) -> Rational {
    m.map(|x| Rational::from_integer(x.clone())).det()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_reconstructs(m in int_matrix()) {
        let s = smith_normal_form(&m);
        let prod = &(&s.left * &m) * &s.right;
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let expect = if r == c { s.diag[r].clone() } else { BigInt::zero() };
                prop_assert_eq!(prod.get(r, c), &expect);
            }
        }
        prop_assert_eq!(det(&s.left).abs(), rat_int(1));
        prop_assert_eq!(det(&s.right).abs(), rat_int(1));
        for w in s.diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        let rank = m.map(|x| Rational::from_integer(x.clone())).rank();
        prop_assert_eq!(s.rank(), rank);
        prop_assert!(s.diag.iter().take(rank).all(|d| d >= &BigInt::one()));
    }
}
