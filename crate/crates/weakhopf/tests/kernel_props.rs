//! Property-based checks of the exact-arithmetic kernel: field axioms,
//! rank-nullity, quotient contracts, and bilinearity of contraction.

use proptest::prelude::*;
use weakhopf::kernel::{
    image_of, kernel_of, quotient, vec, FieldSpec, LinMap, Scalar, Subspace,
};

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

fn residue_mod_7() -> impl Strategy<Value = Scalar> {
    (0i64..7).prop_map(|r| Scalar::from_i64(FieldSpec::prime(7).unwrap(), r))
}

fn field_axioms(x: &Scalar, y: &Scalar, z: &Scalar) {
    // Associativity and commutativity of both operations.
    assert_eq!(x.add(y).add(z), x.add(&y.add(z)));
    assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
    assert_eq!(x.add(y), y.add(x));
    assert_eq!(x.mul(y), y.mul(x));
    // Distributivity.
    assert_eq!(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)));
    // Units and negation.
    let field = x.field();
    assert_eq!(x.add(&Scalar::zero(field)), x.clone());
    assert_eq!(x.mul(&Scalar::one(field)), x.clone());
    assert!(x.add(&x.neg()).is_zero());
    // Inverses of nonzero elements.
    if !x.is_zero() {
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(x in rational(), y in rational(), z in rational()) {
        field_axioms(&x, &y, &z);
    }

    #[test]
    fn prime_field_axioms(x in residue_mod_7(), y in residue_mod_7(), z in residue_mod_7()) {
        field_axioms(&x, &y, &z);
    }
}

fn small_map() -> impl Strategy<Value = LinMap> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(-5i64..=5, rows * cols).prop_map(move |entries| {
            LinMap::from_fn(FieldSpec::Rationals, rows, cols, |i, j| {
                Scalar::from_i64(FieldSpec::Rationals, entries[i * cols + j])
            })
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(f in small_map()) {
        prop_assert_eq!(
            kernel_of(&f).dim() + image_of(&f).dim(),
            f.domain_dim()
        );
    }

    #[test]
    fn quotient_section_contracts(rows in proptest::collection::vec(
        proptest::collection::vec(-4i64..=4, 5), 0..4))
    {
        let q = FieldSpec::Rationals;
        let vectors: Vec<Vec<Scalar>> =
            rows.iter().map(|r| vec::from_i64s(q, r)).collect();
        let relations = Subspace::from_spanning(q, 5, vectors);
        let (proj, sect) = quotient(&relations);
        prop_assert_eq!(proj.codomain_dim(), 5 - relations.dim());
        prop_assert!(proj.compose(&sect).unwrap().is_identity());
        prop_assert_eq!(proj.kernel(), relations.clone());
        // σ∘π - id maps into the relation subspace.
        let defect = sect
            .compose(&proj)
            .unwrap()
            .sub(&LinMap::identity(q, 5))
            .unwrap();
        for col in defect.columns() {
            prop_assert!(relations.contains(&col));
        }
    }

    #[test]
    fn subspace_membership_closed_under_combination(
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 6), 1..4),
        c1 in -3i64..=3,
        c2 in -3i64..=3)
    {
        let q = FieldSpec::Rationals;
        let vectors: Vec<Vec<Scalar>> = rows.iter().map(|r| vec::from_i64s(q, r)).collect();
        let s = Subspace::from_spanning(q, 6, vectors.clone());
        let a = vec::scale(&Scalar::from_i64(q, c1), &vectors[0]);
        let b = vec::scale(&Scalar::from_i64(q, c2), vectors.last().unwrap());
        prop_assert!(s.contains(&vec::add(&a, &b)));
    }
}
