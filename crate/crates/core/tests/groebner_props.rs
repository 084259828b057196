use proptest::prelude::*;
use symres_core::matrix::Matrix;
use symres_core::poly::{
    buchberger, is_groebner_basis, laplace_along_row, minor_determinant, nonempty_in_face_torus,
    reduce, Ideal, Monomial, MonomialOrder, MultiPoly, Ring,
};
use symres_core::scalar::rat_int;
use symres_core::QPoly;

const NV: usize = 3;

fn poly(order: MonomialOrder) -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(((0u16..=2, 0u16..=2, 0u16..=2), -3i64..=3), 1..=3).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), rat_int(k)))
            .collect();
        MultiPoly::from_terms(terms, NV, order)
    })
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Block(1)),
    ]
}

fn ideal() -> impl Strategy<Value = Vec<QPoly>> {
    order().prop_flat_map(|o| proptest::collection::vec(poly(o), 1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn buchberger_is_idempotent_and_contains_generators(gens in ideal()) {
        let gb = buchberger(&gens);
        prop_assert!(is_groebner_basis(&gb));
        prop_assert_eq!(buchberger(&gb), gb.clone());
        for g in &gens {
            prop_assert!(reduce(g, &gb).is_zero());
        }
        for g in &gb {
            prop_assert!(g.leading_coeff().is_none_or(|c| *c == rat_int(1)));
        }
    }

    #[test]
    fn adding_generators_never_creates_points(gens in ideal(), extra in poly(MonomialOrder::Grevlex), face in 0u8..8) {
        let ring = Ring::new(["x", "y", "z"], MonomialOrder::Grevlex);
        let base: Vec<QPoly> = gens.iter().map(|g| g.with_order(MonomialOrder::Grevlex)).collect();
        let mut grown = base.clone();
        grown.push(extra);
        let face: Vec<usize> = (0..NV).filter(|v| face >> v & 1 == 1).collect();
        let small = nonempty_in_face_torus(&Ideal::new(ring.clone(), base), &face);
        let big = nonempty_in_face_torus(&Ideal::new(ring, grown), &face);
        prop_assert!(small || !big);
    }

    #[test]
    fn minor_matches_laplace(entries in proptest::collection::vec(poly(MonomialOrder::Grevlex), 16), row in 0usize..4) {
        let m = Matrix::new(4, 4, entries);
        let all = [0, 1, 2, 3];
        prop_assert_eq!(minor_determinant(&m, &all, &all), laplace_along_row(&m, row));
    }
}
