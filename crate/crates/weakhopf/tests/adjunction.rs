//! Induction/coinduction adjunctions: the supporting identities, the
//! unit/counit morphism properties, naturality, and the exact triangle
//! identities on harvested module sets.

use weakhopf::adjoint::{check_adjunction, check_lemma4, coinduce_ghat, induce_g};
use weakhopf::comodact::check_comodule_algebra;
use weakhopf::doihopf::{assemble_datum_unchecked, DoiHopfModule};
use weakhopf::gallery::{by_name, example_datum, ExampleKind};
use weakhopf::hopfcore::{AlgebraModule, Comodule};
use weakhopf::kernel::{FieldSpec, LinMap, Scalar};
use weakhopf::smash::{build_smash, harvest_modules};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

#[test]
fn lemma4_holds_on_all_nondegenerate_gallery_data() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        for kind in [
            ExampleKind::Ex1,
            ExampleKind::Ex2,
            ExampleKind::Ex3,
            ExampleKind::Ex4,
        ] {
            let ex = example_datum(kind, &h).unwrap();
            let report = check_lemma4(&ex.datum);
            assert!(report.all_pass(), "{kind:?}/{name}:\n{report}");
        }
    }
}

#[test]
fn lemma4_fails_on_a_mutated_coaction() {
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex1, &g3).unwrap();
    // Break the coaction with an off-diagonal term: ρ(e₁) gains e₁ ⊗ e₂,
    // which violates the unit-compatibility axiom.
    let mut coaction = ex.datum.coaction().clone();
    let mut matrix = coaction.rho.matrix().clone();
    matrix.set(&[1, 0], Scalar::one(q()));
    coaction.rho = LinMap::from_matrix(matrix).unwrap();
    let constituent = check_comodule_algebra(&coaction);
    assert!(!constituent.passed("coaction.a2"), "{constituent}");
    let broken = assemble_datum_unchecked(
        coaction,
        ex.datum.action().clone(),
        weakhopf::doihopf::DatumSide::Right,
        true,
    );
    let report = check_lemma4(&broken);
    assert!(!report.passed("lemma4.ii"));
    let failure = report.checks.iter().find(|c| c.id == "lemma4.ii").unwrap();
    assert!(failure.witness.is_some());
}

#[test]
fn induced_regular_module_is_a_doi_hopf_module() {
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let regular = AlgebraModule::regular(ex.datum.algebra());
    let induced = induce_g(&regular, &ex.datum).unwrap();
    assert!(induced.module.dim > 0);
    // Zero module induces the zero module.
    let zero = AlgebraModule::zero(ex.datum.algebra());
    let induced_zero = induce_g(&zero, &ex.datum).unwrap();
    assert_eq!(induced_zero.module.dim, 0);
}

#[test]
fn coinduced_regular_comodule_is_a_doi_hopf_module() {
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex2, &g3).unwrap();
    let regular = Comodule::regular(ex.datum.coalgebra());
    let coinduced = coinduce_ghat(&regular, &ex.datum).unwrap();
    assert!(coinduced.module.dim > 0);
    let zero = Comodule::zero(ex.datum.coalgebra());
    let coinduced_zero = coinduce_ghat(&zero, &ex.datum).unwrap();
    assert_eq!(coinduced_zero.module.dim, 0);
}

#[test]
fn degenerate_or_left_data_are_rejected() {
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let dual = weakhopf::doihopf::dual_datum(&ex.datum).unwrap();
    let regular = AlgebraModule::regular(dual.algebra());
    assert!(matches!(
        induce_g(&regular, &dual),
        Err(weakhopf::adjoint::AdjointError::DegenerateDatum)
    ));
}

#[test]
fn adjunction_package_on_harvested_modules() {
    for name in ["g2", "g3"] {
        let h = by_name(name, q()).unwrap();
        for kind in [ExampleKind::Ex1, ExampleKind::Ex2, ExampleKind::Ex3] {
            let ex = example_datum(kind, &h).unwrap();
            let smash = build_smash(&ex.datum).unwrap();
            let samples = harvest_modules(&smash).unwrap();
            let report = check_adjunction(&ex.datum, &samples).unwrap();
            assert!(report.all_pass(), "{kind:?}/{name}:\n{report}");
        }
    }
}

#[test]
fn adjunction_on_the_zero_module_is_vacuous() {
    let g2 = by_name("g2", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex3, &g2).unwrap();
    let samples = vec![DoiHopfModule::zero(ex.datum.clone())];
    let report = check_adjunction(&ex.datum, &samples).unwrap();
    assert!(report.all_pass());
    assert!(report.get("adj.vacuous[0]").is_some());
}

#[test]
fn induced_dimensions_are_consistent_under_round_trips() {
    // dim G(F(G(M))) stays finite and the triangle composites collapse it
    // back onto G(M); spot-check the dimensions directly.
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let m = AlgebraModule::regular(ex.datum.algebra());
    let g1 = induce_g(&m, &ex.datum).unwrap();
    let g2_nested = induce_g(
        &AlgebraModule {
            algebra: ex.datum.algebra().clone(),
            dim: g1.module.dim,
            action: g1.module.action.clone(),
        },
        &ex.datum,
    )
    .unwrap();
    assert!(g2_nested.module.dim >= g1.module.dim.min(1));
}
