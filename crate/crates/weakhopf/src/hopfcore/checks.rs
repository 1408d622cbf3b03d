//! Axiom verifiers for algebras, coalgebras, weak bialgebras and weak
//! Hopf algebras.

use crate::kernel::{vec, Scalar, Tensor};
use crate::report::{Report, Witness};

use super::structures::{AlgebraData, CoalgebraData, StructureConstants};
use super::product_multi;

/// First nonzero entry of `diff`, split into the leading `arg_axes`
/// indices (the witness tuple) and a residual over the remaining axes.
fn witness_from_diff(diff: &Tensor, arg_axes: usize) -> Option<Witness> {
    let shape = diff.shape();
    let tail: usize = shape[arg_axes..].iter().product();
    let mut found: Option<Vec<usize>> = None;
    crate::kernel::each_index(shape, |idx| {
        if found.is_none() && !diff.get(idx).is_zero() {
            found = Some(idx[..arg_axes].to_vec());
        }
    });
    let indices = found?;
    let mut residual = Vec::with_capacity(tail);
    crate::kernel::each_index(&shape[arg_axes..], |rest| {
        let mut idx = indices.clone();
        idx.extend_from_slice(rest);
        residual.push(diff.get(&idx).clone());
    });
    Some(Witness::new(indices, residual))
}

fn witness_from_vec(indices: Vec<usize>, residual: Vec<Scalar>) -> Option<Witness> {
    if vec::is_zero(&residual) {
        None
    } else {
        Some(Witness::new(indices, residual))
    }
}

pub(crate) fn check_algebra(alg: &AlgebraData) -> Report {
    let mut report = Report::new();
    let mult = alg.mult();
    report.run("alg.assoc", "(xy)z = x(yz)", || {
        // Σ_m mult[i,j,m] mult[m,k,l] vs Σ_m mult[j,k,m] mult[i,m,l]
        let left = mult.contract(mult, &[(2, 0)]).expect("shape");
        let right = mult
            .contract(mult, &[(1, 2)])
            .expect("shape")
            .permute_axes(&[0, 2, 3, 1]);
        witness_from_diff(&left.sub(&right).expect("shape"), 3)
    });
    report.run("alg.unit", "1x = x = x1", || {
        let n = alg.dim();
        for i in 0..n {
            let e = vec::unit(alg.field(), n, i);
            let l = alg.product(alg.unit(), &e);
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&l, &e)) {
                return Some(w);
            }
            let r = alg.product(&e, alg.unit());
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&r, &e)) {
                return Some(w);
            }
        }
        None
    });
    report
}

pub(crate) fn check_coalgebra(coalg: &CoalgebraData) -> Report {
    let mut report = Report::new();
    let comult = coalg.comult();
    report.run("coalg.coassoc", "(Δ⊗id)Δ = (id⊗Δ)Δ", || {
        let left = comult
            .contract(comult, &[(1, 0)])
            .expect("shape")
            .permute_axes(&[0, 2, 3, 1]);
        let right = comult.contract(comult, &[(2, 0)]).expect("shape");
        witness_from_diff(&left.sub(&right).expect("shape"), 1)
    });
    report.run("coalg.counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", || {
        let n = coalg.dim();
        for i in 0..n {
            let e = vec::unit(coalg.field(), n, i);
            let d = coalg.comult_vec(&e);
            let mut left = vec::zeros(coalg.field(), n);
            let mut right = vec::zeros(coalg.field(), n);
            for jk in 0..n * n {
                let (j, k) = (jk / n, jk % n);
                if d[jk].is_zero() {
                    continue;
                }
                left[k] = left[k].add(&d[jk].mul(&coalg.counit()[j]));
                right[j] = right[j].add(&d[jk].mul(&coalg.counit()[k]));
            }
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&left, &e)) {
                return Some(w);
            }
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&right, &e)) {
                return Some(w);
            }
        }
        None
    });
    report
}

/// Verifies the weak-bialgebra axioms of a candidate bundle: algebra and
/// coalgebra laws, multiplicativity of `Δ`, the weak compatibility of the
/// unit and counit, and idempotency of the counital projections.
pub fn check_wba(sc: &StructureConstants) -> Report {
    let mut report = Report::new();
    let alg = match AlgebraData::unchecked(sc.field, sc.mult.clone(), sc.unit.clone()) {
        Ok(a) => a,
        Err(_) => {
            report.record("wba.shapes", "structure tensor shapes", false);
            return report;
        }
    };
    let coalg = match CoalgebraData::unchecked(sc.field, sc.comult.clone(), sc.counit.clone()) {
        Ok(c) => c,
        Err(_) => {
            report.record("wba.shapes", "structure tensor shapes", false);
            return report;
        }
    };
    report.merge("", check_algebra(&alg));
    report.merge("", check_coalgebra(&coalg));

    let n = sc.dim;
    let field = sc.field;
    report.run("wba.delta_mult", "Δ(gh) = Δ(g)Δ(h)", || {
        for i in 0..n {
            for j in 0..n {
                let prod = alg.basis_product(i, j);
                let lhs = coalg.comult_vec(&prod);
                let di = coalg.comult_vec(&vec::unit(field, n, i));
                let dj = coalg.comult_vec(&vec::unit(field, n, j));
                let rhs = product_multi(&[&alg, &alg], &di, &dj);
                if let Some(w) = witness_from_vec(vec![i, j], vec::sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });

    report.run(
        "wba.weak_unit",
        "(Δ⊗id)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)",
        || {
            let d2 = coalg.comult2_vec(&sc.unit);
            let d1 = coalg.comult_vec(&sc.unit);
            let d1_tensor_1 = vec::kron(&d1, &sc.unit);
            let one_tensor_d1 = vec::kron(&sc.unit, &d1);
            let algs: [&AlgebraData; 3] = [&alg, &alg, &alg];
            let r1 = product_multi(&algs, &d1_tensor_1, &one_tensor_d1);
            let r2 = product_multi(&algs, &one_tensor_d1, &d1_tensor_1);
            witness_from_vec(vec![], vec::sub(&d2, &r1))
                .or_else(|| witness_from_vec(vec![], vec::sub(&d2, &r2)))
        },
    );

    report.run(
        "wba.weak_counit",
        "ε(abc) = ε(ab₍₁₎)ε(b₍₂₎c) = ε(ab₍₂₎)ε(b₍₁₎c)",
        || {
            let eps = |v: &[Scalar]| coalg.counit_of(v);
            for a in 0..n {
                for b in 0..n {
                    let db = coalg.comult_vec(&vec::unit(field, n, b));
                    for c in 0..n {
                        let ec = vec::unit(field, n, c);
                        let abc = alg.product(&alg.basis_product(a, b), &ec);
                        let lhs = eps(&abc);
                        let mut mid = Scalar::zero(field);
                        let mut mid_swapped = Scalar::zero(field);
                        for jk in 0..n * n {
                            if db[jk].is_zero() {
                                continue;
                            }
                            let (j, k) = (jk / n, jk % n);
                            let ab1 = alg.basis_product(a, j);
                            let b2c = alg.basis_product(k, c);
                            mid = mid.add(&db[jk].mul(&eps(&ab1).mul(&eps(&b2c))));
                            let ab2 = alg.basis_product(a, k);
                            let b1c = alg.basis_product(j, c);
                            mid_swapped =
                                mid_swapped.add(&db[jk].mul(&eps(&ab2).mul(&eps(&b1c))));
                        }
                        let r1 = lhs.sub(&mid);
                        let r2 = lhs.sub(&mid_swapped);
                        if !r1.is_zero() || !r2.is_zero() {
                            return Some(Witness::new(vec![a, b, c], vec![r1, r2]));
                        }
                    }
                }
            }
            None
        },
    );

    let (pi_l, pi_r) = sc.pi_maps();
    report.run("wba.pi_l_idem", "Π^L∘Π^L = Π^L", || {
        let diff = pi_l.compose(&pi_l).expect("square").sub(&pi_l).expect("shape");
        witness_from_diff(diff.matrix(), 2)
    });
    report.run("wba.pi_r_idem", "Π^R∘Π^R = Π^R", || {
        let diff = pi_r.compose(&pi_r).expect("square").sub(&pi_r).expect("shape");
        witness_from_diff(diff.matrix(), 2)
    });
    report
}

/// Verifies the weak-Hopf-algebra axioms on top of [`check_wba`]: the
/// three antipode identities, the derived anti-homomorphism properties,
/// and invertibility of the antipode.
pub fn check_wha(sc: &StructureConstants) -> Report {
    let mut report = check_wba(sc);
    let Some(antipode) = sc.antipode.as_ref() else {
        report.record("wha.antipode_present", "antipode supplied", false);
        return report;
    };
    if antipode.domain_dim() != sc.dim || antipode.codomain_dim() != sc.dim {
        report.record("wha.antipode_present", "antipode supplied", false);
        return report;
    }
    let alg = AlgebraData::unchecked(sc.field, sc.mult.clone(), sc.unit.clone()).expect("checked");
    let coalg =
        CoalgebraData::unchecked(sc.field, sc.comult.clone(), sc.counit.clone()).expect("checked");
    let n = sc.dim;
    let field = sc.field;
    let (pi_l, pi_r) = sc.pi_maps();

    report.run("wha.antipode_l", "h₍₁₎S(h₍₂₎) = Π^L(h)", || {
        for i in 0..n {
            let d = coalg.comult_vec(&vec::unit(field, n, i));
            let mut acc = vec::zeros(field, n);
            for jk in 0..n * n {
                if d[jk].is_zero() {
                    continue;
                }
                let (j, k) = (jk / n, jk % n);
                let s_k = antipode.apply(&vec::unit(field, n, k));
                let term = alg.product(&vec::unit(field, n, j), &s_k);
                vec::axpy(&mut acc, &d[jk], &term);
            }
            let expected = pi_l.apply(&vec::unit(field, n, i));
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&acc, &expected)) {
                return Some(w);
            }
        }
        None
    });

    report.run("wha.antipode_r", "S(h₍₁₎)h₍₂₎ = Π^R(h)", || {
        for i in 0..n {
            let d = coalg.comult_vec(&vec::unit(field, n, i));
            let mut acc = vec::zeros(field, n);
            for jk in 0..n * n {
                if d[jk].is_zero() {
                    continue;
                }
                let (j, k) = (jk / n, jk % n);
                let s_j = antipode.apply(&vec::unit(field, n, j));
                let term = alg.product(&s_j, &vec::unit(field, n, k));
                vec::axpy(&mut acc, &d[jk], &term);
            }
            let expected = pi_r.apply(&vec::unit(field, n, i));
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&acc, &expected)) {
                return Some(w);
            }
        }
        None
    });

    report.run("wha.antipode_mid", "S(h₍₁₎)h₍₂₎S(h₍₃₎) = S(h)", || {
        for i in 0..n {
            let d2 = coalg.comult2_vec(&vec::unit(field, n, i));
            let mut acc = vec::zeros(field, n);
            for idx in 0..n * n * n {
                if d2[idx].is_zero() {
                    continue;
                }
                let (j, rest) = (idx / (n * n), idx % (n * n));
                let (k, l) = (rest / n, rest % n);
                let s_j = antipode.apply(&vec::unit(field, n, j));
                let s_l = antipode.apply(&vec::unit(field, n, l));
                let term = alg.product(&alg.product(&s_j, &vec::unit(field, n, k)), &s_l);
                vec::axpy(&mut acc, &d2[idx], &term);
            }
            let expected = antipode.apply(&vec::unit(field, n, i));
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&acc, &expected)) {
                return Some(w);
            }
        }
        None
    });

    report.run("wha.s_anti_alg", "S(gh) = S(h)S(g), S(1) = 1", || {
        let s1 = antipode.apply(&sc.unit);
        if let Some(w) = witness_from_vec(vec![], vec::sub(&s1, &sc.unit)) {
            return Some(w);
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = antipode.apply(&alg.basis_product(i, j));
                let rhs = alg.product(
                    &antipode.apply(&vec::unit(field, n, j)),
                    &antipode.apply(&vec::unit(field, n, i)),
                );
                if let Some(w) = witness_from_vec(vec![i, j], vec::sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });

    report.run("wha.s_anti_coalg", "Δ(S(h)) = (S⊗S)Δᵒᵖ(h), ε∘S = ε", || {
        for i in 0..n {
            let e = vec::unit(field, n, i);
            let lhs = coalg.comult_vec(&antipode.apply(&e));
            let d = coalg.comult_vec(&e);
            let mut rhs = vec::zeros(field, n * n);
            for jk in 0..n * n {
                if d[jk].is_zero() {
                    continue;
                }
                let (j, k) = (jk / n, jk % n);
                let s_k = antipode.apply(&vec::unit(field, n, k));
                let s_j = antipode.apply(&vec::unit(field, n, j));
                vec::axpy(&mut rhs, &d[jk], &vec::kron(&s_k, &s_j));
            }
            if let Some(w) = witness_from_vec(vec![i], vec::sub(&lhs, &rhs)) {
                return Some(w);
            }
            let eps_s = coalg.counit_of(&antipode.apply(&e));
            let r = eps_s.sub(&coalg.counit_of(&e));
            if !r.is_zero() {
                return Some(Witness::new(vec![i], vec![r]));
            }
        }
        None
    });

    report.run("wha.s_invertible", "S is bijective", || {
        if antipode.inverse().is_some() {
            None
        } else {
            Some(Witness::new(vec![], vec![]))
        }
    });
    report
}
