//! Smash products, comparison isomorphisms, the category isomorphism
//! functors, the Drinfel'd double and the Yetter-Drinfel'd layer.

use weakhopf::double::{
    build_double, check_yd, check_yd_morphism, check_yd_single_relation, yd_from_double_module,
    yd_tensor, yd_unit_module, yd_unitors, yd_vs_double,
};
use weakhopf::doihopf::{check_module, check_morphism, dual_datum, DoiHopfMorphism};
use weakhopf::gallery::{by_name, example_datum, ExampleKind};
use weakhopf::hopfcore::{check_wha, AlgebraModule};
use weakhopf::kernel::{vec, FieldSpec, LinMap};
use weakhopf::smash::{build_smash, example_iso, functor_p, functor_p_inv, harvest_modules};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

#[test]
fn smash_carrier_dimensions() {
    // Example 1 over G3: the smash collapses onto H, so the carrier has
    // the dimension of H.
    let g3 = by_name("g3", q()).unwrap();
    let ex1 = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let s = build_smash(&ex1.datum).unwrap();
    assert_eq!(s.dim(), 2);

    // Example 3 over G3: carrier spanned by e_k ⊗ ê_k.
    let ex3 = example_datum(ExampleKind::Ex3, &g3).unwrap();
    let s3 = build_smash(&ex3.datum).unwrap();
    assert_eq!(s3.dim(), 2);
    for b in s3.carrier.basis() {
        // Supported on the diagonal pairs only.
        for (idx, c) in b.iter().enumerate() {
            let (a, cc) = (idx / 2, idx % 2);
            if a != cc {
                assert!(c.is_zero());
            }
        }
    }

    // Example 3 over G2 (an ordinary Hopf algebra): no truncation.
    let g2 = by_name("g2", q()).unwrap();
    let ex3g2 = example_datum(ExampleKind::Ex3, &g2).unwrap();
    let s4 = build_smash(&ex3g2.datum).unwrap();
    assert_eq!(s4.dim(), 4);
}

#[test]
fn smash_iso_example_1_onto_h() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let ex = example_datum(ExampleKind::Ex1, &h).unwrap();
        let s = build_smash(&ex.datum).unwrap();
        assert_eq!(s.dim(), h.dim(), "{name}: smash dim vs dim H");
        let iso = example_iso(&ex, &s).unwrap();
        assert!(iso.report.all_pass(), "{name}:\n{}", iso.report);
        assert_eq!(iso.target, *h.algebra());
    }
}

#[test]
fn smash_iso_example_2_onto_dual() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let ex = example_datum(ExampleKind::Ex2, &h).unwrap();
        let s = build_smash(&ex.datum).unwrap();
        let iso = example_iso(&ex, &s).unwrap();
        assert!(iso.report.all_pass(), "{name}:\n{}", iso.report);
        assert_eq!(iso.target, h.coalgebra().dual_algebra());
    }
}

#[test]
fn smash_iso_example_3_onto_weyl_algebra() {
    for name in ["g2", "g3"] {
        let h = by_name(name, q()).unwrap();
        let ex = example_datum(ExampleKind::Ex3, &h).unwrap();
        let s = build_smash(&ex.datum).unwrap();
        let iso = example_iso(&ex, &s).unwrap();
        assert!(iso.report.all_pass(), "{name}:\n{}", iso.report);
    }
    // For a group algebra the Heisenberg double is the full matrix
    // algebra, so the smash of G2 has dimension 4.
    let g2 = by_name("g2", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex3, &g2).unwrap();
    let s = build_smash(&ex.datum).unwrap();
    let iso = example_iso(&ex, &s).unwrap();
    assert_eq!(iso.target.dim(), 4);
}

#[test]
fn smash_iso_example_4_onto_twisted_double() {
    for name in ["g2", "g4"] {
        let k = by_name(name, q()).unwrap();
        let ex = example_datum(ExampleKind::Ex4, &k).unwrap();
        let s = build_smash(&ex.datum).unwrap();
        let iso = example_iso(&ex, &s).unwrap();
        assert!(iso.report.all_pass(), "{name}:\n{}", iso.report);
    }
}

#[test]
fn category_isomorphism_roundtrips() {
    for name in ["g2", "g3"] {
        let h = by_name(name, q()).unwrap();
        for kind in [ExampleKind::Ex1, ExampleKind::Ex2, ExampleKind::Ex3] {
            let ex = example_datum(kind, &h).unwrap();
            let s = build_smash(&ex.datum).unwrap();
            // Regular module and every cyclic submodule.
            let regular = s.regular_module();
            let mut mods = vec![regular.clone()];
            for i in 0..s.dim() {
                let (_, sub) = regular.cyclic_submodule(&vec::unit(q(), s.dim(), i));
                mods.push(sub);
            }
            for n in &mods {
                let dh = functor_p_inv(n, &s)
                    .unwrap_or_else(|e| panic!("{kind:?}/{name} p_inv: {e}"));
                assert!(check_module(&dh).all_pass());
                let back = functor_p(&dh, &s).unwrap();
                assert_eq!(back.action, n.action, "{kind:?}/{name}: P∘P' ≠ id");
                // And the other composition.
                let again = functor_p_inv(&back, &s).unwrap();
                assert_eq!(again.action, dh.action, "{kind:?}/{name}: P'∘P ≠ id");
                assert_eq!(again.coaction, dh.coaction, "{kind:?}/{name}: P'∘P ≠ id");
            }
        }
    }
}

#[test]
fn functor_p_action_is_unital_and_morphism_compatible() {
    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let s = build_smash(&ex.datum).unwrap();
    let mods = harvest_modules(&s).unwrap();
    for m in &mods {
        let p = functor_p(m, &s).unwrap();
        // Unitality is part of the checked module axioms.
        for i in 0..p.dim {
            let ei = vec::unit(q(), p.dim, i);
            assert_eq!(p.act(&ei, p.algebra.unit()), ei);
        }
    }
    // P and P' are the identity on morphisms: a Doi-Hopf morphism stays
    // an intertwiner of the transported modules and back.
    let m0 = &mods[0];
    let endos = weakhopf::doihopf::hom_space(m0, m0).unwrap();
    assert!(!endos.is_empty());
    let p0 = functor_p(m0, &s).unwrap();
    for t in &endos {
        let smash_homs = p0.hom_space(&p0);
        // t must lie in the span of the smash-module homs.
        let flat_t: Vec<_> = (0..t.codomain_dim())
            .flat_map(|i| (0..t.domain_dim()).map(move |j| (i, j)))
            .map(|(i, j)| t.entry(i, j).clone())
            .collect();
        let basis: Vec<Vec<_>> = smash_homs
            .iter()
            .map(|s| {
                (0..s.codomain_dim())
                    .flat_map(|i| (0..s.domain_dim()).map(move |j| (i, j)))
                    .map(|(i, j)| s.entry(i, j).clone())
                    .collect()
            })
            .collect();
        let span = weakhopf::kernel::Subspace::from_spanning(q(), flat_t.len(), basis);
        assert!(span.contains(&flat_t));
    }
}

#[test]
fn morphism_checks_on_regular_instances() {
    let g2 = by_name("g2", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex3, &g2).unwrap();
    let s = build_smash(&ex.datum).unwrap();
    let m = functor_p_inv(&s.regular_module(), &s).unwrap();
    // Identity and zero maps intertwine.
    let id = DoiHopfMorphism {
        source: m.clone(),
        target: m.clone(),
        map: LinMap::identity(q(), m.dim),
    };
    assert!(check_morphism(&id).unwrap().all_pass());
    let zero = DoiHopfMorphism {
        source: m.clone(),
        target: m.clone(),
        map: LinMap::zero(q(), m.dim, m.dim),
    };
    assert!(check_morphism(&zero).unwrap().all_pass());
    // A fixed non-intertwining map fails with a witness.
    let mut entries = vec![0i64; m.dim * m.dim];
    entries[1] = 1;
    let bad = DoiHopfMorphism {
        source: m.clone(),
        target: m.clone(),
        map: LinMap::from_fn(q(), m.dim, m.dim, |i, j| {
            weakhopf::kernel::Scalar::from_i64(q(), entries[i * m.dim + j])
        }),
    };
    let report = check_morphism(&bad).unwrap();
    assert!(!report.all_pass());
    assert!(report.failures().any(|c| c.witness.is_some()));
}

#[test]
fn dualize_module_is_involutive() {
    let g2 = by_name("g2", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex3, &g2).unwrap();
    let s = build_smash(&ex.datum).unwrap();
    let m = functor_p_inv(&s.regular_module(), &s).unwrap();
    let dual = weakhopf::doihopf::dualize_module(&m).unwrap();
    assert!(check_module(&dual).all_pass(), "{}", check_module(&dual));
    let back = weakhopf::doihopf::dualize_module(&dual).unwrap();
    assert_eq!(back.action, m.action);
    assert_eq!(back.coaction, m.coaction);
    assert_eq!(back.datum, m.datum);

    // Hom-set dimensions are preserved under dualization.
    let g3 = by_name("g3", q()).unwrap();
    let ex1 = example_datum(ExampleKind::Ex1, &g3).unwrap();
    let s1 = build_smash(&ex1.datum).unwrap();
    let m1 = functor_p_inv(&s1.regular_module(), &s1).unwrap();
    let endos = weakhopf::doihopf::hom_space(&m1, &m1).unwrap();
    let d1 = weakhopf::doihopf::dualize_module(&m1).unwrap();
    let endos_dual = weakhopf::doihopf::hom_space(&d1, &d1).unwrap();
    assert_eq!(endos.len(), endos_dual.len());
    // Identity is always a morphism and the span is closed under
    // composition (spot check on the first basis pair).
    let id_flat: Vec<_> = weakhopf::kernel::LinMap::identity(q(), m1.dim)
        .rows()
        .concat();
    let span = weakhopf::kernel::Subspace::from_spanning(
        q(),
        m1.dim * m1.dim,
        endos.iter().map(|t| t.rows().concat()).collect(),
    );
    assert!(span.contains(&id_flat));
    if endos.len() >= 2 {
        let comp = endos[0].compose(&endos[1]).unwrap();
        assert!(span.contains(&comp.rows().concat()));
    }
}

#[test]
fn datum_duality_is_involutive_with_flags() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        for kind in [
            ExampleKind::Ex1,
            ExampleKind::Ex2,
            ExampleKind::Ex3,
            ExampleKind::Ex4,
        ] {
            let ex = example_datum(kind, &h).unwrap();
            let dual = dual_datum(&ex.datum).unwrap();
            assert_eq!(
                dual.nondegenerate(),
                ex.datum.nondegenerate(),
                "{kind:?}/{name}: flag not transported"
            );
            let dd = dual_datum(&dual).unwrap();
            assert_eq!(&dd, &ex.datum, "{kind:?}/{name}: double dual differs");
        }
    }
}

#[test]
fn drinfeld_double_dimensions_and_wha_suite() {
    let g2 = by_name("g2", q()).unwrap();
    let d2 = build_double(&g2).unwrap();
    assert_eq!(d2.dim(), 4);
    assert!(check_wha(&d2.wha.constants()).all_pass());
    assert!(d2.counit_formulas_agree());

    let g3 = by_name("g3", q()).unwrap();
    let d3 = build_double(&g3).unwrap();
    assert_eq!(d3.dim(), 2);
    assert!(check_wha(&d3.wha.constants()).all_pass());
    assert!(d3.counit_formulas_agree());

    let g4 = by_name("g4", q()).unwrap();
    let d4 = build_double(&g4).unwrap();
    assert!(check_wha(&d4.wha.constants()).all_pass());
    assert!(d4.counit_formulas_agree());

    // Every gallery WHA of dimension at most four doubles cleanly.
    for name in ["zn(3)", "dual:g4"] {
        let h = by_name(name, q()).unwrap();
        let d = build_double(&h).unwrap();
        assert!(check_wha(&d.wha.constants()).all_pass(), "{name}");
        assert!(d.counit_formulas_agree(), "{name}");
    }
}

#[test]
fn double_well_definedness_on_random_representatives() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let g3 = by_name("g3", q()).unwrap();
    let d = build_double(&g3).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let ambient = d.ambient_dim();
    for _ in 0..100 {
        // Two representatives of the same class differ by a relation.
        let x: Vec<_> = (0..ambient)
            .map(|_| weakhopf::kernel::Scalar::from_i64(q(), rng.gen_range(-3..4)))
            .collect();
        let mut y = x.clone();
        for r in d.relations.basis() {
            let c = weakhopf::kernel::Scalar::from_i64(q(), rng.gen_range(-2..3));
            vec::axpy(&mut y, &c, r);
        }
        let t: Vec<_> = (0..ambient)
            .map(|_| weakhopf::kernel::Scalar::from_i64(q(), rng.gen_range(-3..4)))
            .collect();
        assert_eq!(
            d.class_of(&d.ambient_product(&x, &t)),
            d.class_of(&d.ambient_product(&y, &t))
        );
        assert_eq!(
            d.class_of(&d.ambient_product(&t, &x)),
            d.class_of(&d.ambient_product(&t, &y))
        );
    }
}

#[test]
fn yd_unit_module_passes_and_single_relation_agrees() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let u = yd_unit_module(h.wba()).unwrap();
        let report = check_yd(&u);
        assert!(report.all_pass(), "{name}:\n{report}");
        let single = check_yd_single_relation(&u, &h).unwrap();
        assert!(single.all_pass(), "{name}:\n{single}");
    }
}

#[test]
fn yd_tensor_products_pass() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let u = yd_unit_module(h.wba()).unwrap();
        let uu = yd_tensor(&u, &u).unwrap();
        assert!(check_yd(&uu.module).all_pass(), "{name}");
        // Carrier-level associativity: dims agree on both sides.
        let l = yd_tensor(&uu.module, &u).unwrap();
        let r = yd_tensor(&u, &uu.module).unwrap();
        assert_eq!(l.module.dim, r.module.dim, "{name}");
    }
}

#[test]
fn yd_unitors_are_invertible_intertwiners() {
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let u = yd_unit_module(h.wba()).unwrap();
        let unitors = yd_unitors(&u).unwrap();
        assert_eq!(unitors.u_left.rank(), u.dim, "{name}: u^L not injective");
        assert_eq!(unitors.u_right.rank(), u.dim, "{name}: u^R not injective");
        assert!(unitors.u_left.inverse().is_some(), "{name}");
        assert!(unitors.u_right.inverse().is_some(), "{name}");
        let rl = check_yd_morphism(&unitors.u_left, &u, &unitors.left_product.module);
        assert!(rl.all_pass(), "{name} u^L:\n{rl}");
        let rr = check_yd_morphism(&unitors.u_right, &u, &unitors.right_product.module);
        assert!(rr.all_pass(), "{name} u^R:\n{rr}");
    }
}

#[test]
fn yd_transport_to_double_roundtrips() {
    for name in ["g2", "g3"] {
        let h = by_name(name, q()).unwrap();
        let u = yd_unit_module(h.wba()).unwrap();
        let transport = yd_vs_double(&u, &h).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(transport.report.all_pass(), "{name}:\n{}", transport.report);

        // Zero module transports to the zero module.
        let z = weakhopf::double::YetterDrinfeldModule::zero(h.wba().clone());
        let tz = yd_vs_double(&z, &h).unwrap();
        assert_eq!(tz.module.dim, 0);
    }
}

#[test]
fn regular_double_module_gives_yd_and_transports_back() {
    for name in ["g2", "g3"] {
        let h = by_name(name, q()).unwrap();
        let d = build_double(&h).unwrap();
        let regular = AlgebraModule::regular(d.wha.algebra());
        let yd = yd_from_double_module(&regular, &d).unwrap();
        let report = check_yd(&yd);
        assert!(report.all_pass(), "{name}:\n{report}");
        let single = check_yd_single_relation(&yd, &h).unwrap();
        assert!(single.all_pass(), "{name}:\n{single}");
        let transport = yd_vs_double(&yd, &h).unwrap();
        assert!(transport.report.all_pass(), "{name}");
    }
}

#[test]
fn smash_is_basis_independent() {
    // Rebuild the third-example smash over g3 with the coalgebra basis
    // swapped; the ambient relabeling must carry one carrier onto the
    // other and transport the product.
    use weakhopf::comodact::{ActionSide, CoactionSide, WeakAction, WeakCoaction};
    use weakhopf::doihopf::build_datum;
    use weakhopf::hopfcore::CoalgebraData;
    use weakhopf::kernel::{Scalar, Tensor};

    let g3 = by_name("g3", q()).unwrap();
    let ex = example_datum(ExampleKind::Ex3, &g3).unwrap();
    let s = build_smash(&ex.datum).unwrap();

    let perm = [1usize, 0];
    let n = 2usize;
    let c_old = ex.datum.coalgebra();
    let comult = Tensor::from_fn(q(), &[n, n, n], |idx| {
        c_old
            .comult()
            .get(&[perm[idx[0]], perm[idx[1]], perm[idx[2]]])
            .clone()
    });
    let counit: Vec<Scalar> = (0..n).map(|i| c_old.counit()[perm[i]].clone()).collect();
    let coalgebra = CoalgebraData::new(q(), comult, counit).unwrap();
    let act_old = &ex.datum.action().act;
    let act = Tensor::from_fn(q(), &[n, n, n], |idx| {
        act_old.get(&[perm[idx[0]], idx[1], perm[idx[2]]]).clone()
    });
    let action = WeakAction::new(ActionSide::Right, g3.wba().clone(), coalgebra, act).unwrap();
    let coaction = WeakCoaction::new(
        CoactionSide::Left,
        g3.wba().clone(),
        g3.algebra().clone(),
        g3.coalgebra().comult_map(),
    )
    .unwrap();
    let permuted_datum = build_datum(coaction, action, weakhopf::doihopf::DatumSide::Right).unwrap();
    let s2 = build_smash(&permuted_datum).unwrap();
    assert_eq!(s.dim(), s2.dim());

    // Ambient relabeling a ⊗ γ^c ↦ a ⊗ γ^{perm(c)} (dual basis permutes
    // along the same permutation).
    let relabel = LinMap::from_fn(q(), 4, 4, |i, j| {
        let (ai, ci) = (i / 2, i % 2);
        let (aj, cj) = (j / 2, j % 2);
        if ai == aj && ci == perm[cj] {
            weakhopf::kernel::Scalar::one(q())
        } else {
            weakhopf::kernel::Scalar::zero(q())
        }
    });
    // Induced map on carriers.
    let mut images = Vec::new();
    for b in s2.carrier.basis() {
        let coords = s.carrier.coords(&relabel.apply(b)).expect("carrier maps onto carrier");
        images.push(coords);
    }
    let induced = LinMap::from_images(q(), s.dim(), &images);
    assert!(induced.inverse().is_some());
    // Multiplicativity of the transport.
    for i in 0..s2.dim() {
        let xi = induced.apply(&vec::unit(q(), s2.dim(), i));
        for j in 0..s2.dim() {
            let lhs = induced.apply(&s2.algebra.basis_product(i, j));
            let rhs = s
                .algebra
                .product(&xi, &induced.apply(&vec::unit(q(), s2.dim(), j)));
            assert_eq!(lhs, rhs);
        }
    }

    // The composite of the two functors is basis independent: transported
    // regular modules match after relabeling.
    let m1 = functor_p_inv(&s.regular_module(), &s).unwrap();
    let m2 = functor_p_inv(&s2.regular_module(), &s2).unwrap();
    assert_eq!(m1.dim, m2.dim);
}

#[test]
fn yd_triangle_identities_and_unitor_naturality() {
    use weakhopf::double::{check_triangle_identity, check_unitor_naturality, yd_hom_space};
    for name in ["g2", "g3", "g4"] {
        let h = by_name(name, q()).unwrap();
        let u = yd_unit_module(h.wba()).unwrap();
        let uu = yd_tensor(&u, &u).unwrap().module;
        // Triangle identities on the available pairs.
        for (m, n) in [(&u, &u), (&u, &uu), (&uu, &u)] {
            let report = check_triangle_identity(m, n).unwrap();
            assert!(report.all_pass(), "{name}:\n{report}");
        }
        // Naturality on every solver-generated morphism U → U×U.
        let homs = yd_hom_space(&u, &uu).unwrap();
        for t in &homs {
            let report = check_unitor_naturality(t, &u, &uu).unwrap();
            assert!(report.all_pass(), "{name}:\n{report}");
        }
        // And on the endomorphisms of U.
        for t in &yd_hom_space(&u, &u).unwrap() {
            let report = check_unitor_naturality(t, &u, &u).unwrap();
            assert!(report.all_pass(), "{name}:\n{report}");
        }
    }
}
