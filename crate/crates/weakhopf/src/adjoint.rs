//! The induction functor (left adjoint of the forgetful functor to
//! right `A`-modules) and the coinduction functor (right adjoint of the
//! forgetful functor to left `C`-comodules), with the unit/counit maps,
//! the two supporting identities on non-degenerate data, naturality
//! squares, and the exact triangle identities.

use thiserror::Error;

use crate::doihopf::{check_module, DatumSide, DoiHopfDatum, DoiHopfError, DoiHopfModule};
use crate::hopfcore::{AlgebraModule, Comodule};
use crate::kernel::{vec, KernelError, LinMap, Scalar, Subspace, Tensor};
use crate::report::{Report, Witness};

#[derive(Debug, Error)]
pub enum AdjointError {
    #[error("the construction needs a non-degenerate right datum")]
    DegenerateDatum,
    #[error("module does not live over the datum's algebra or coalgebra")]
    BaseMismatch,
    #[error("carrier is not closed under the structure maps")]
    CarrierNotClosed,
    #[error("functor output failed validation:\n{0}")]
    FunctorFailure(Report),
    #[error(transparent)]
    DoiHopf(#[from] DoiHopfError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

fn require_right_nondegenerate(d: &DoiHopfDatum) -> Result<(), AdjointError> {
    if d.side() != DatumSide::Right || !d.nondegenerate() {
        return Err(AdjointError::DegenerateDatum);
    }
    Ok(())
}

/// The induced Doi-Hopf module `G(M) = C·1₍₋₁₎ ⊗ M·1₍₀₎` of a right
/// `A`-module, carried inside `C ⊗ M` (C-major).
#[derive(Debug, Clone)]
pub struct InducedModule {
    pub module: DoiHopfModule,
    pub carrier: Subspace,
    pub base_dim: usize,
}

/// Columns of the coupled map `c ⊗ m ↦ c·1₍₋₁₎ ⊗ m·1₍₀₎`.
fn g_truncation(d: &DoiHopfDatum, m: &AlgebraModule) -> LinMap {
    let field = d.bialgebra().field();
    let (dc, dm, da, dh) = (
        d.coalgebra().dim(),
        m.dim,
        d.algebra().dim(),
        d.bialgebra().dim(),
    );
    let rho1 = d.coaction().rho.apply(d.algebra().unit());
    let mut columns = Vec::with_capacity(dc * dm);
    for c in 0..dc {
        for x in 0..dm {
            let mut out = vec::zeros(field, dc * dm);
            for (ha, coeff) in rho1.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (h, a) = (ha / da, ha % da);
                let c_part = d
                    .action()
                    .apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
                let m_part = m.act(&vec::unit(field, dm, x), &vec::unit(field, da, a));
                vec::axpy(&mut out, coeff, &vec::kron(&c_part, &m_part));
            }
            columns.push(out);
        }
    }
    LinMap::from_images(field, dc * dm, &columns)
}

/// Builds `G(M)` with the action `(c ⊗ m)·a = c·a₍₋₁₎ ⊗ m·a₍₀₎` and the
/// coaction `(Δ_C ⊗ id)` restricted to the carrier.
pub fn induce_g(m: &AlgebraModule, d: &DoiHopfDatum) -> Result<InducedModule, AdjointError> {
    require_right_nondegenerate(d)?;
    if &m.algebra != d.algebra() {
        return Err(AdjointError::BaseMismatch);
    }
    let field = d.bialgebra().field();
    let (dc, dm, da, dh) = (
        d.coalgebra().dim(),
        m.dim,
        d.algebra().dim(),
        d.bialgebra().dim(),
    );
    let carrier = g_truncation(d, m).image();
    let k = carrier.dim();

    let mut action = Tensor::zeros(field, &[k, da, k]);
    for i in 0..k {
        let w = &carrier.basis()[i];
        for a in 0..da {
            let rho_a = d.coaction().rho.apply(&vec::unit(field, da, a));
            let mut out = vec::zeros(field, dc * dm);
            for (cm, cw) in w.iter().enumerate() {
                if cw.is_zero() {
                    continue;
                }
                let (c, x) = (cm / dm, cm % dm);
                for (ha, coeff) in rho_a.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (h, a0) = (ha / da, ha % da);
                    let c_part = d
                        .action()
                        .apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
                    let m_part = m.act(&vec::unit(field, dm, x), &vec::unit(field, da, a0));
                    vec::axpy(&mut out, &cw.mul(coeff), &vec::kron(&c_part, &m_part));
                }
            }
            let coords = carrier.coords(&out).ok_or(AdjointError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                action.set(&[i, a, j], c);
            }
        }
    }

    let mut images = Vec::with_capacity(k);
    for i in 0..k {
        let w = &carrier.basis()[i];
        let mut big = vec::zeros(field, dc * dc * dm);
        for (cm, cw) in w.iter().enumerate() {
            if cw.is_zero() {
                continue;
            }
            let (c, x) = (cm / dm, cm % dm);
            let dlt = d.coalgebra().comult_vec(&vec::unit(field, dc, c));
            for (jk, coeff) in dlt.iter().enumerate() {
                if !coeff.is_zero() {
                    let idx = jk * dm + x;
                    big[idx] = big[idx].add(&cw.mul(coeff));
                }
            }
        }
        let mut image = vec::zeros(field, dc * k);
        for c1 in 0..dc {
            let block: Vec<Scalar> = (0..dc * dm)
                .map(|p| big[c1 * dc * dm + p].clone())
                .collect();
            let coords = carrier
                .coords(&block)
                .ok_or(AdjointError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                image[c1 * k + j] = c;
            }
        }
        images.push(image);
    }
    let coaction = LinMap::from_images(field, dc * k, &images);
    let module = DoiHopfModule::new(d.clone(), k, action, coaction)?;
    let report = check_module(&module);
    if !report.all_pass() {
        return Err(AdjointError::FunctorFailure(report));
    }
    Ok(InducedModule {
        module,
        carrier,
        base_dim: dm,
    })
}

/// `G(T) = (id_C ⊗ T)` restricted to the carriers, in carrier coordinates.
pub fn induce_g_morphism(
    t: &LinMap,
    source: &InducedModule,
    target: &InducedModule,
) -> Result<LinMap, AdjointError> {
    let field = t.field();
    let dc = source.module.datum.coalgebra().dim();
    let lift = LinMap::identity(field, dc).kron(t);
    let mut images = Vec::with_capacity(source.module.dim);
    for b in source.carrier.basis() {
        let coords = target
            .carrier
            .coords(&lift.apply(b))
            .ok_or(AdjointError::CarrierNotClosed)?;
        images.push(coords);
    }
    Ok(LinMap::from_images(field, target.module.dim, &images))
}

/// The coinduced Doi-Hopf module of a left `C`-comodule, carried inside
/// `M ⊗ A` (M-major) and spanned by `ε_C(m₍₋₁₎·a₍₋₁₎) m₍₀₎ ⊗ a₍₀₎`.
#[derive(Debug, Clone)]
pub struct CoinducedModule {
    pub module: DoiHopfModule,
    pub carrier: Subspace,
    pub base_dim: usize,
}

/// The coupled map `m ⊗ a ↦ ε_C(m₍₋₁₎·a₍₋₁₎) m₍₀₎ ⊗ a₍₀₎` applied to one
/// elementary tensor `e_x ⊗ v` with `v ∈ A`.
fn ghat_squash(d: &DoiHopfDatum, m: &Comodule, x: usize, v: &[Scalar]) -> Vec<Scalar> {
    let field = d.bialgebra().field();
    let (dc, dm, da, dh) = (
        d.coalgebra().dim(),
        m.dim,
        d.algebra().dim(),
        d.bialgebra().dim(),
    );
    let rho_m = m.coaction.apply(&vec::unit(field, dm, x));
    let mut out = vec::zeros(field, dm * da);
    for (av, cv) in v.iter().enumerate() {
        if cv.is_zero() {
            continue;
        }
        let rho_a = d.coaction().rho.apply(&vec::unit(field, da, av));
        for (cm, c1) in rho_m.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            let (c, m0) = (cm / dm, cm % dm);
            for (ha, c2) in rho_a.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let (h, a0) = (ha / da, ha % da);
                let acted = d
                    .action()
                    .apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
                let eps = d.coalgebra().counit_of(&acted);
                if !eps.is_zero() {
                    let idx = m0 * da + a0;
                    out[idx] = out[idx].add(&cv.mul(&c1.mul(&c2.mul(&eps))));
                }
            }
        }
    }
    out
}

/// Builds the coinduced module with the action
/// `(m ⊗ a)·b = ε_C(m₍₋₁₎·a₍₋₁₎b₍₋₁₎) m₍₀₎ ⊗ a₍₀₎b₍₀₎` and the coaction
/// `ρ(m ⊗ a) = m₍₋₁₎·a₍₋₁₎ ⊗ m₍₀₎ ⊗ a₍₀₎`.
pub fn coinduce_ghat(m: &Comodule, d: &DoiHopfDatum) -> Result<CoinducedModule, AdjointError> {
    require_right_nondegenerate(d)?;
    if &m.coalgebra != d.coalgebra() {
        return Err(AdjointError::BaseMismatch);
    }
    let field = d.bialgebra().field();
    let (dc, dm, da, dh) = (
        d.coalgebra().dim(),
        m.dim,
        d.algebra().dim(),
        d.bialgebra().dim(),
    );
    let mut columns = Vec::with_capacity(dm * da);
    for x in 0..dm {
        for a in 0..da {
            columns.push(ghat_squash(d, m, x, &vec::unit(field, da, a)));
        }
    }
    let truncation = LinMap::from_images(field, dm * da, &columns);
    let carrier = truncation.image();
    let k = carrier.dim();

    let mut action = Tensor::zeros(field, &[k, da, k]);
    for i in 0..k {
        let w = &carrier.basis()[i];
        for b in 0..da {
            let mut out = vec::zeros(field, dm * da);
            for (ma, cw) in w.iter().enumerate() {
                if cw.is_zero() {
                    continue;
                }
                let (x, a) = (ma / da, ma % da);
                let ab = d.algebra().basis_product(a, b);
                vec::axpy(&mut out, cw, &ghat_squash(d, m, x, &ab));
            }
            let coords = carrier.coords(&out).ok_or(AdjointError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                action.set(&[i, b, j], c);
            }
        }
    }

    let mut images = Vec::with_capacity(k);
    for i in 0..k {
        let w = &carrier.basis()[i];
        let mut big = vec::zeros(field, dc * dm * da);
        for (ma, cw) in w.iter().enumerate() {
            if cw.is_zero() {
                continue;
            }
            let (x, a) = (ma / da, ma % da);
            let rho_m = m.coaction.apply(&vec::unit(field, dm, x));
            let rho_a = d.coaction().rho.apply(&vec::unit(field, da, a));
            for (cm, c1) in rho_m.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                let (c, m0) = (cm / dm, cm % dm);
                for (ha, c2) in rho_a.iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let (h, a0) = (ha / da, ha % da);
                    let acted = d
                        .action()
                        .apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
                    for (cc, c3) in acted.iter().enumerate() {
                        if !c3.is_zero() {
                            let idx = cc * dm * da + m0 * da + a0;
                            big[idx] = big[idx].add(&cw.mul(&c1.mul(&c2.mul(c3))));
                        }
                    }
                }
            }
        }
        let mut image = vec::zeros(field, dc * k);
        for cc in 0..dc {
            let block: Vec<Scalar> = (0..dm * da)
                .map(|p| big[cc * dm * da + p].clone())
                .collect();
            let coords = carrier
                .coords(&block)
                .ok_or(AdjointError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                image[cc * k + j] = c;
            }
        }
        images.push(image);
    }
    let coaction = LinMap::from_images(field, dc * k, &images);
    let module = DoiHopfModule::new(d.clone(), k, action, coaction)?;
    let report = check_module(&module);
    if !report.all_pass() {
        return Err(AdjointError::FunctorFailure(report));
    }
    Ok(CoinducedModule {
        module,
        carrier,
        base_dim: dm,
    })
}

/// `Ĝ(T) = (T ⊗ id_A)` restricted to the carriers, in carrier coordinates.
pub fn coinduce_ghat_morphism(
    t: &LinMap,
    source: &CoinducedModule,
    target: &CoinducedModule,
) -> Result<LinMap, AdjointError> {
    let field = t.field();
    let da = source.module.datum.algebra().dim();
    let lift = t.kron(&LinMap::identity(field, da));
    let mut images = Vec::with_capacity(source.module.dim);
    for b in source.carrier.basis() {
        let coords = target
            .carrier
            .coords(&lift.apply(b))
            .ok_or(AdjointError::CarrierNotClosed)?;
        images.push(coords);
    }
    Ok(LinMap::from_images(field, target.module.dim, &images))
}

/// The two supporting identities behind the adjunctions, as exact tensor
/// identities over all basis elements:
/// (i) `Δ_C(c·1₍₋₁₎) ⊗ 1₍₀₎ = c₍₁₎ ⊗ c₍₂₎·1₍₋₁₎ ⊗ 1₍₀₎`;
/// (ii) `Π^L(a₍₋₁₎) ⊗ a₍₀₎ = Π^L(1₍₋₁₎) ⊗ 1₍₀₎ a`.
pub fn check_lemma4(d: &DoiHopfDatum) -> Report {
    let mut report = Report::new();
    let field = d.bialgebra().field();
    let (dc, da, dh) = (d.coalgebra().dim(), d.algebra().dim(), d.bialgebra().dim());
    let rho1 = d.coaction().rho.apply(d.algebra().unit());

    report.run(
        "lemma4.i",
        "Δ_C(c·1₍₋₁₎)⊗1₍₀₎ = c₍₁₎⊗c₍₂₎·1₍₋₁₎⊗1₍₀₎",
        || {
            for c in 0..dc {
                let mut lhs = vec::zeros(field, dc * dc * da);
                let mut rhs = vec::zeros(field, dc * dc * da);
                for (ha, coeff) in rho1.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (h, a) = (ha / da, ha % da);
                    let acted = d
                        .action()
                        .apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
                    let dlt = d.coalgebra().comult_vec(&acted);
                    for (jk, c2) in dlt.iter().enumerate() {
                        if !c2.is_zero() {
                            let idx = jk * da + a;
                            lhs[idx] = lhs[idx].add(&coeff.mul(c2));
                        }
                    }
                }
                let dlt_c = d.coalgebra().comult_vec(&vec::unit(field, dc, c));
                for (jk, c2) in dlt_c.iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let (c1, c2i) = (jk / dc, jk % dc);
                    for (ha, coeff) in rho1.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let (h, a) = (ha / da, ha % da);
                        let acted = d
                            .action()
                            .apply(&vec::unit(field, dc, c2i), &vec::unit(field, dh, h));
                        for (cc, c3) in acted.iter().enumerate() {
                            if !c3.is_zero() {
                                let idx = (c1 * dc + cc) * da + a;
                                rhs[idx] = rhs[idx].add(&c2.mul(&coeff.mul(c3)));
                            }
                        }
                    }
                }
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![c], r));
                }
            }
            None
        },
    );

    report.run("lemma4.ii", "Π^L(a₍₋₁₎)⊗a₍₀₎ = Π^L(1₍₋₁₎)⊗1₍₀₎a", || {
        let pi_l = d.bialgebra().pi_l();
        for a in 0..da {
            let rho_a = d.coaction().rho.apply(&vec::unit(field, da, a));
            let mut lhs = vec::zeros(field, dh * da);
            for (ha, coeff) in rho_a.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (h, a0) = (ha / da, ha % da);
                let pl = pi_l.apply(&vec::unit(field, dh, h));
                vec::axpy(&mut lhs, coeff, &vec::kron(&pl, &vec::unit(field, da, a0)));
            }
            let mut rhs = vec::zeros(field, dh * da);
            for (ha, coeff) in rho1.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (h, a0) = (ha / da, ha % da);
                let pl = pi_l.apply(&vec::unit(field, dh, h));
                let prod = d
                    .algebra()
                    .product(&vec::unit(field, da, a0), &vec::unit(field, da, a));
                vec::axpy(&mut rhs, coeff, &vec::kron(&pl, &prod));
            }
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![a], r));
            }
        }
        None
    });
    report
}

/// Verifies the full adjunction package on a set of sample modules: the
/// unit and counit are morphisms in their categories, both naturality
/// squares commute on solver-generated morphisms, both triangle
/// identities hold exactly, and the same mirrored for the coinduction
/// adjunction.
pub fn check_adjunction(
    d: &DoiHopfDatum,
    samples: &[DoiHopfModule],
) -> Result<Report, AdjointError> {
    require_right_nondegenerate(d)?;
    let field = d.bialgebra().field();
    let (dc, da) = (d.coalgebra().dim(), d.algebra().dim());
    let mut report = Report::new();

    let forget = |m: &DoiHopfModule| AlgebraModule {
        algebra: d.algebra().clone(),
        dim: m.dim,
        action: m.action.clone(),
    };
    let forget_hat = |m: &DoiHopfModule| Comodule {
        coalgebra: d.coalgebra().clone(),
        dim: m.dim,
        coaction: m.coaction.clone(),
    };
    // The unit of the induction adjunction at a Doi-Hopf module.
    let unit_at = |m: &DoiHopfModule, g: &InducedModule| -> Option<LinMap> {
        let mut images = Vec::with_capacity(m.dim);
        for i in 0..m.dim {
            let rho = m.coact(&vec::unit(field, m.dim, i));
            images.push(g.carrier.coords(&rho)?);
        }
        Some(LinMap::from_images(field, g.module.dim, &images))
    };
    // The counit: (ε_C ⊗ id_M) on carrier basis vectors.
    let counit_at = |g: &InducedModule| -> LinMap {
        let dm = g.base_dim;
        let mut images = Vec::with_capacity(g.module.dim);
        for w in g.carrier.basis() {
            let mut out = vec::zeros(field, dm);
            for (cm, c) in w.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (cc, x) = (cm / dm, cm % dm);
                out[x] = out[x].add(&c.mul(&d.coalgebra().counit()[cc]));
            }
            images.push(out);
        }
        LinMap::from_images(field, dm, &images)
    };
    // The unit of the coinduction adjunction at a comodule.
    let unit_hat_at = |n: &Comodule, g: &CoinducedModule| -> Option<LinMap> {
        let mut images = Vec::with_capacity(n.dim);
        for x in 0..n.dim {
            let amb = ghat_squash(d, n, x, d.algebra().unit());
            images.push(g.carrier.coords(&amb)?);
        }
        Some(LinMap::from_images(field, g.module.dim, &images))
    };

    for (s_idx, m) in samples.iter().enumerate() {
        if m.dim == 0 {
            report.record(&format!("adj.vacuous[{s_idx}]"), "zero module", true);
            continue;
        }
        let fm = forget(m);
        let gfm = induce_g(&fm, d)?;
        let Some(unit) = unit_at(m, &gfm) else {
            report.record(
                &format!("adj.unit_in_carrier[{s_idx}]"),
                "ρ_M lands in the induced carrier",
                false,
            );
            continue;
        };
        let unit_morphism = crate::doihopf::DoiHopfMorphism {
            source: m.clone(),
            target: gfm.module.clone(),
            map: unit.clone(),
        };
        report.record(
            &format!("adj.unit_morphism[{s_idx}]"),
            "ρ_M is a Doi-Hopf morphism into G(F(M))",
            crate::doihopf::check_morphism(&unit_morphism)?.all_pass(),
        );
        let counit = counit_at(&gfm);
        let mut delta_ok = true;
        'outer: for i in 0..gfm.module.dim {
            let ei = vec::unit(field, gfm.module.dim, i);
            for a in 0..da {
                let ea = vec::unit(field, da, a);
                let lhs = counit.apply(&gfm.module.act(&ei, &ea));
                let rhs = fm.act(&counit.apply(&ei), &ea);
                if lhs != rhs {
                    delta_ok = false;
                    break 'outer;
                }
            }
        }
        report.record(
            &format!("adj.counit_morphism[{s_idx}]"),
            "δ_M is an A-module morphism",
            delta_ok,
        );
        report.record(
            &format!("adj.triangle_f[{s_idx}]"),
            "(δF)(Fρ) = id_F",
            counit.compose(&unit)?.is_identity(),
        );
        // (Gδ)(ρG) = id_G at N = F(M).
        let gfgf = induce_g(&forget(&gfm.module), d)?;
        let Some(unit_g) = unit_at(&gfm.module, &gfgf) else {
            report.record(&format!("adj.triangle_g[{s_idx}]"), "(Gδ)(ρG) = id_G", false);
            continue;
        };
        let g_delta = induce_g_morphism(&counit, &gfgf, &gfm)?;
        report.record(
            &format!("adj.triangle_g[{s_idx}]"),
            "(Gδ)(ρG) = id_G",
            g_delta.compose(&unit_g)?.is_identity(),
        );

        // Mirrored adjunction.
        let fhm = forget_hat(m);
        let ghat = coinduce_ghat(&fhm, d)?;
        let Some(unit_hat) = unit_hat_at(&fhm, &ghat) else {
            report.record(
                &format!("adj.unit_hat_in_carrier[{s_idx}]"),
                "ρ̂ lands in the coinduced carrier",
                false,
            );
            continue;
        };
        let ghat_comodule = forget_hat(&ghat.module);
        let lift = LinMap::identity(field, dc).kron(&unit_hat);
        let mut unit_hat_morphism = true;
        for i in 0..m.dim {
            let ei = vec::unit(field, m.dim, i);
            if ghat_comodule.coaction.apply(&unit_hat.apply(&ei))
                != lift.apply(&fhm.coaction.apply(&ei))
            {
                unit_hat_morphism = false;
                break;
            }
        }
        report.record(
            &format!("adj.unit_hat_morphism[{s_idx}]"),
            "ρ̂ is a comodule morphism into F̂(Ĝ(M))",
            unit_hat_morphism,
        );
        // δ̂_M(m ⊗ a) = m·a.
        let mut delta_hat_images = Vec::with_capacity(ghat.module.dim);
        for w in ghat.carrier.basis() {
            let mut out = vec::zeros(field, m.dim);
            for (ma, c) in w.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (x, a) = (ma / da, ma % da);
                let acted = m.act(&vec::unit(field, m.dim, x), &vec::unit(field, da, a));
                vec::axpy(&mut out, c, &acted);
            }
            delta_hat_images.push(out);
        }
        let delta_hat = LinMap::from_images(field, m.dim, &delta_hat_images);
        let delta_hat_morphism = crate::doihopf::DoiHopfMorphism {
            source: ghat.module.clone(),
            target: m.clone(),
            map: delta_hat.clone(),
        };
        report.record(
            &format!("adj.counit_hat_morphism[{s_idx}]"),
            "δ̂_M is a Doi-Hopf morphism",
            crate::doihopf::check_morphism(&delta_hat_morphism)?.all_pass(),
        );
        report.record(
            &format!("adj.triangle_fhat[{s_idx}]"),
            "(F̂δ̂)(ρ̂F̂) = id_F̂",
            delta_hat.compose(&unit_hat)?.is_identity(),
        );
        // (δ̂Ĝ)(Ĝρ̂) = id_Ĝ at N = F̂(M).
        let ghat2 = coinduce_ghat(&forget_hat(&ghat.module), d)?;
        let ghat_rho = coinduce_ghat_morphism(&unit_hat, &ghat, &ghat2)?;
        let mut delta_hat2_images = Vec::with_capacity(ghat2.module.dim);
        for w in ghat2.carrier.basis() {
            let mut out = vec::zeros(field, ghat.module.dim);
            for (ma, c) in w.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (x, a) = (ma / da, ma % da);
                let acted = ghat.module.act(
                    &vec::unit(field, ghat.module.dim, x),
                    &vec::unit(field, da, a),
                );
                vec::axpy(&mut out, c, &acted);
            }
            delta_hat2_images.push(out);
        }
        let delta_hat2 = LinMap::from_images(field, ghat.module.dim, &delta_hat2_images);
        report.record(
            &format!("adj.triangle_ghat[{s_idx}]"),
            "(δ̂Ĝ)(Ĝρ̂) = id_Ĝ",
            delta_hat2.compose(&ghat_rho)?.is_identity(),
        );
    }

    // Naturality on solver-generated morphisms over every ordered pair.
    for (i, m) in samples.iter().enumerate() {
        for (j, m2) in samples.iter().enumerate() {
            if m.dim == 0 || m2.dim == 0 {
                continue;
            }
            let homs = crate::doihopf::hom_space(m, m2)?;
            if homs.is_empty() {
                continue;
            }
            let gfm = induce_g(&forget(m), d)?;
            let gfm2 = induce_g(&forget(m2), d)?;
            let unit_m = unit_at(m, &gfm).ok_or(AdjointError::CarrierNotClosed)?;
            let unit_m2 = unit_at(m2, &gfm2).ok_or(AdjointError::CarrierNotClosed)?;
            let mut natural_rho = true;
            for t in &homs {
                let gft = induce_g_morphism(t, &gfm, &gfm2)?;
                if gft.compose(&unit_m)? != unit_m2.compose(t)? {
                    natural_rho = false;
                }
            }
            report.record(
                &format!("adj.naturality_unit[{i},{j}]"),
                "G(F(T))∘ρ = ρ∘T",
                natural_rho,
            );
            let amod_homs = forget(m).hom_space(&forget(m2));
            let counit_m = counit_at(&gfm);
            let counit_m2 = counit_at(&gfm2);
            let mut natural_delta = true;
            for s in &amod_homs {
                let gs = induce_g_morphism(s, &gfm, &gfm2)?;
                if s.compose(&counit_m)? != counit_m2.compose(&gs)? {
                    natural_delta = false;
                }
            }
            report.record(
                &format!("adj.naturality_counit[{i},{j}]"),
                "S∘δ = δ∘F(G(S))",
                natural_delta,
            );
            let com_homs = forget_hat(m).hom_space(&forget_hat(m2));
            let ghat_m = coinduce_ghat(&forget_hat(m), d)?;
            let ghat_m2 = coinduce_ghat(&forget_hat(m2), d)?;
            let unit_hm =
                unit_hat_at(&forget_hat(m), &ghat_m).ok_or(AdjointError::CarrierNotClosed)?;
            let unit_hm2 =
                unit_hat_at(&forget_hat(m2), &ghat_m2).ok_or(AdjointError::CarrierNotClosed)?;
            let mut natural_rho_hat = true;
            for t in &com_homs {
                let ghat_t = coinduce_ghat_morphism(t, &ghat_m, &ghat_m2)?;
                if ghat_t.compose(&unit_hm)? != unit_hm2.compose(t)? {
                    natural_rho_hat = false;
                }
            }
            report.record(
                &format!("adj.naturality_unit_hat[{i},{j}]"),
                "Ĝ(T)∘ρ̂ = ρ̂∘T",
                natural_rho_hat,
            );
        }
    }
    Ok(report)
}
