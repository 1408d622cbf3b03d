//! Integral spaces of weak Hopf algebras, the concrete space of Doi-Hopf
//! integral transforms with its normalization condition, and the four
//! example realizations (center and commutants) with their comparison
//! maps.
//!
//! Definitions fixed here: a left integral satisfies `h ℓ = Π^L(h) ℓ`, a
//! right integral `r h = r Π^R(h)`; a right integral is non-degenerate
//! when `φ ↦ φ ⇀ r` is bijective. The dual right integral is pinned by
//! the convention `⟨ρ̂, r₍₁₎⟩ r₍₂₎ = 1`; the mirrored convention
//! `r₍₁₎ ⟨ρ̂, r₍₂₎⟩ = 1` is evaluated alongside and reported.

use thiserror::Error;

use crate::doihopf::{DatumSide, DoiHopfDatum, DoiHopfError};
use crate::double::{build_twisted_double, DoubleError, TwistedDouble};
use crate::gallery::{ExampleDatum, ExampleKind, GalleryError};
use crate::hopfcore::{arrows, dual_wha, AlgebraData, HopfError, WeakHopfAlgebra};
use crate::kernel::{
    solve_linear_system, vec, KernelError, LinMap, Scalar, Subspace,
};
use crate::report::Report;
use crate::smash::{flatten_operator, hit_operator, weyl_realization, OperatorAlgebra, SmashError};

#[derive(Debug, Error)]
pub enum IntegralError {
    #[error("no non-degenerate right integral available")]
    NoNondegenerateIntegral,
    #[error("the dual-integral convention system is inconsistent")]
    NoDualIntegral,
    #[error("the datum must be right-sided and non-degenerate with a WHA base")]
    WrongDatum,
    #[error("the realization needs the matching gallery example")]
    WrongExample,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    DoiHopf(#[from] DoiHopfError),
    #[error(transparent)]
    Double(#[from] Box<DoubleError>),
    #[error(transparent)]
    Smash(#[from] Box<SmashError>),
    #[error(transparent)]
    Gallery(#[from] Box<GalleryError>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralSide {
    Left,
    Right,
}

/// The solution space of the integral condition, with a per-basis-vector
/// non-degeneracy flag.
#[derive(Debug, Clone)]
pub struct IntegralSpace {
    pub side: IntegralSide,
    pub space: Subspace,
    pub nondegenerate: Vec<bool>,
}

/// The matrix of `φ ↦ φ ⇀ x` for fixed `x`.
fn hit_pairing_matrix(h: &WeakHopfAlgebra, x: &[Scalar]) -> LinMap {
    let field = h.field();
    let n = h.dim();
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|j| arrows::hit(h.wba(), &vec::unit(field, n, j), x))
        .collect();
    LinMap::from_images(field, n, &images)
}

/// The matrix of `φ ↦ x ↼ φ` for fixed `x`.
fn hit_rev_pairing_matrix(h: &WeakHopfAlgebra, x: &[Scalar]) -> LinMap {
    let field = h.field();
    let n = h.dim();
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|j| arrows::hit_rev(h.wba(), x, &vec::unit(field, n, j)))
        .collect();
    LinMap::from_images(field, n, &images)
}

/// Whether `x` is a non-degenerate integral on the given side.
pub fn is_nondegenerate_integral(h: &WeakHopfAlgebra, side: IntegralSide, x: &[Scalar]) -> bool {
    let m = match side {
        IntegralSide::Right => hit_pairing_matrix(h, x),
        IntegralSide::Left => hit_rev_pairing_matrix(h, x),
    };
    m.rank() == h.dim()
}

/// Solves the defining linear condition of the integral space and flags
/// non-degeneracy per basis vector. Every solution is re-verified by
/// substitution.
pub fn integral_space(h: &WeakHopfAlgebra, side: IntegralSide) -> IntegralSpace {
    let field = h.field();
    let n = h.dim();
    let mut constraints = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for i in 0..n {
        let e = vec::unit(field, n, i);
        let c = match side {
            IntegralSide::Right => {
                let mult_right = h.algebra().right_mult_map(&e);
                let pi_e = h.wba().pi_r().apply(&e);
                mult_right.sub(&h.algebra().right_mult_map(&pi_e)).expect("shape")
            }
            IntegralSide::Left => {
                let mult_left = h.algebra().left_mult_map(&e);
                let pi_e = h.wba().pi_l().apply(&e);
                mult_left.sub(&h.algebra().left_mult_map(&pi_e)).expect("shape")
            }
        };
        constraints.push(c);
        rhs.push(vec::zeros(field, n));
    }
    let space = solve_linear_system(&constraints, &rhs)
        .expect("homogeneous system")
        .homogeneous;
    // Substitution self-check on every basis solution.
    for b in space.basis() {
        for c in &constraints {
            assert!(vec::is_zero(&c.apply(b)), "integral failed re-substitution");
        }
    }
    let nondegenerate = space
        .basis()
        .iter()
        .map(|b| is_nondegenerate_integral(h, side, b))
        .collect();
    IntegralSpace {
        side,
        space,
        nondegenerate,
    }
}

/// Searches the integral space for a non-degenerate right integral: basis
/// vectors first, then all subset sums of the basis.
pub fn find_nondegenerate_right_integral(h: &WeakHopfAlgebra) -> Option<Vec<Scalar>> {
    let space = integral_space(h, IntegralSide::Right);
    for (b, flag) in space.space.basis().iter().zip(&space.nondegenerate) {
        if *flag {
            return Some(b.clone());
        }
    }
    let dim = space.space.dim();
    let field = h.field();
    for mask in 1u32..(1 << dim.min(16)) {
        let mut candidate = vec::zeros(field, h.dim());
        for (i, b) in space.space.basis().iter().enumerate() {
            if mask & (1 << i) != 0 {
                candidate = vec::add(&candidate, b);
            }
        }
        if is_nondegenerate_integral(h, IntegralSide::Right, &candidate) {
            return Some(candidate);
        }
    }
    None
}

/// Which pairing leg the dual integral is normalized against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualIntegralConvention {
    /// `⟨ρ̂, r₍₁₎⟩ r₍₂₎ = 1` (the pinned primary convention).
    PairFirstLeg,
    /// `r₍₁₎ ⟨ρ̂, r₍₂₎⟩ = 1` (evaluated for the report only).
    PairSecondLeg,
}

#[derive(Debug, Clone)]
pub struct DualIntegral {
    pub element: Vec<Scalar>,
    pub convention: DualIntegralConvention,
    /// Whether the mirrored convention is also solvable, and whether the
    /// returned element satisfies it too.
    pub mirrored_solvable: bool,
    pub mirrored_satisfied: bool,
    /// Whether the convention system pinned the element uniquely.
    pub unique: bool,
}

/// The dual right integral of a non-degenerate right integral `r`: the
/// right integral `ρ̂` of `Ĥ` with `⟨ρ̂, r₍₁₎⟩ r₍₂₎ = 1`.
pub fn dual_right_integral(
    h: &WeakHopfAlgebra,
    r: &[Scalar],
) -> Result<DualIntegral, IntegralError> {
    if !is_nondegenerate_integral(h, IntegralSide::Right, r) {
        return Err(IntegralError::NoNondegenerateIntegral);
    }
    let field = h.field();
    let n = h.dim();
    let dual = dual_wha(h)?;
    let dual_integrals = integral_space(&dual, IntegralSide::Right);
    let delta_r = h.coalgebra().comult_vec(r);
    // Primary: Σ_j ρ̂_j Σ_k Δ(r)[j,k] e_k = 1.
    let primary = LinMap::from_fn(field, n, n, |k, j| delta_r[j * n + k].clone());
    // Mirrored: Σ_k ρ̂_k Σ_j Δ(r)[j,k] e_j = 1.
    let mirrored = LinMap::from_fn(field, n, n, |j, k| delta_r[j * n + k].clone());
    // Membership in the dual integral space: exactly the fixed points of
    // the coordinate projector onto the space.
    let membership: Vec<LinMap> = {
        let basis = dual_integrals.space.basis();
        let onto = if basis.is_empty() {
            LinMap::zero(field, n, n)
        } else {
            let coords = LinMap::from_fn(field, basis.len(), n, |i, j| {
                if dual_integrals.space.pivots()[i] == j {
                    Scalar::one(field)
                } else {
                    Scalar::zero(field)
                }
            });
            let lift = LinMap::from_images(field, n, basis);
            lift.compose(&coords).expect("shape")
        };
        vec![onto.sub(&LinMap::identity(field, n)).expect("shape")]
    };
    let mut constraints = vec![primary.clone()];
    let mut rhs = vec![h.algebra().unit().to_vec()];
    constraints.extend(membership.clone());
    rhs.push(vec::zeros(field, n));
    let solution = match solve_linear_system(&constraints, &rhs) {
        Ok(s) => s,
        Err(KernelError::Inconsistent) => return Err(IntegralError::NoDualIntegral),
        Err(e) => return Err(IntegralError::Kernel(e)),
    };
    let element = solution.particular.clone();
    let unique = solution.homogeneous.is_zero();
    let mirrored_satisfied = mirrored.apply(&element) == h.algebra().unit();
    let mirrored_solvable = {
        let mut c2 = vec![mirrored];
        let mut r2 = vec![h.algebra().unit().to_vec()];
        c2.extend(membership);
        r2.push(vec::zeros(field, n));
        solve_linear_system(&c2, &r2).is_ok()
    };
    Ok(DualIntegral {
        element,
        convention: DualIntegralConvention::PairFirstLeg,
        mirrored_solvable,
        mirrored_satisfied,
        unique,
    })
}

/// The concrete space of Doi-Hopf integral transforms: maps
/// `γ: C → Lin(C, A)` stored as coefficient tensors `γ[c][d][a]` inside
/// `Ĉ ⊗ Ĉ ⊗ A`, cut out by the two defining linear conditions.
#[derive(Debug, Clone)]
pub struct DoiHopfIntegralSpace {
    pub datum: DoiHopfDatum,
    pub space: Subspace,
}

impl DoiHopfIntegralSpace {
    pub fn gamma_entry(&self, gamma: &[Scalar], c: usize, d: usize, a: usize) -> Scalar {
        let (dc, da) = (self.datum.coalgebra().dim(), self.datum.algebra().dim());
        let _ = dc;
        gamma[(c * self.datum.coalgebra().dim() + d) * da + a].clone()
    }

    /// `γ(x)(y)` as an element of `A`, for coefficient vectors `x, y ∈ C`.
    pub fn gamma_apply(&self, gamma: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.datum.bialgebra().field();
        let (dc, da) = (self.datum.coalgebra().dim(), self.datum.algebra().dim());
        let mut out = vec::zeros(field, da);
        for (c, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (d, cy) in y.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                for a in 0..da {
                    let g = &gamma[(c * dc + d) * da + a];
                    if !g.is_zero() {
                        out[a] = out[a].add(&cx.mul(&cy.mul(g)));
                    }
                }
            }
        }
        out
    }
}

/// Evaluates both defining conditions on a single transform; used by the
/// solver's independent re-substitution check.
pub fn verify_integral_transform(d: &DoiHopfDatum, gamma: &[Scalar]) -> bool {
    let space = DoiHopfIntegralSpace {
        datum: d.clone(),
        space: Subspace::zero(d.bialgebra().field(), gamma.len()),
    };
    let field = d.bialgebra().field();
    let (dc, da, dh) = (d.coalgebra().dim(), d.algebra().dim(), d.bialgebra().dim());
    // Condition 1: γ(c)(d) a = a₍₀₎ γ(c·a₍₋₂₎)(d·a₍₋₁₎).
    for c in 0..dc {
        let ec = vec::unit(field, dc, c);
        for dd in 0..dc {
            let ed = vec::unit(field, dc, dd);
            for x in 0..da {
                let lhs = d.algebra().product(
                    &space.gamma_apply(gamma, &ec, &ed),
                    &vec::unit(field, da, x),
                );
                // (Δ ⊗ id)ρ(e_x) with legs (h1, h2, a0).
                let rho_x = d.coaction().rho.apply(&vec::unit(field, da, x));
                let mut rhs = vec::zeros(field, da);
                for (ha, coeff) in rho_x.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (h, a0) = (ha / da, ha % da);
                    let dlt = d.bialgebra().coalgebra().comult_vec(&vec::unit(field, dh, h));
                    for (jk, c2) in dlt.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let (h1, h2) = (jk / dh, jk % dh);
                        let c_acted = d.action().apply(&ec, &vec::unit(field, dh, h1));
                        let d_acted = d.action().apply(&ed, &vec::unit(field, dh, h2));
                        let g = space.gamma_apply(gamma, &c_acted, &d_acted);
                        let term = d
                            .algebra()
                            .product(&vec::unit(field, da, a0), &g);
                        vec::axpy(&mut rhs, &coeff.mul(c2), &term);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // Condition 2: c₍₁₎ ⊗ γ(c₍₂₎)(d) = d₍₂₎·γ(c)(d₍₁₎)₍₋₁₎ ⊗ γ(c)(d₍₁₎)₍₀₎.
    for c in 0..dc {
        let ec = vec::unit(field, dc, c);
        let dlt_c = d.coalgebra().comult_vec(&ec);
        for dd in 0..dc {
            let ed = vec::unit(field, dc, dd);
            let mut lhs = vec::zeros(field, dc * da);
            for (jk, coeff) in dlt_c.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (c1, c2) = (jk / dc, jk % dc);
                let g = space.gamma_apply(gamma, &vec::unit(field, dc, c2), &ed);
                vec::axpy(&mut lhs, coeff, &vec::kron(&vec::unit(field, dc, c1), &g));
            }
            let dlt_d = d.coalgebra().comult_vec(&ed);
            let mut rhs = vec::zeros(field, dc * da);
            for (jk, coeff) in dlt_d.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (d1, d2) = (jk / dc, jk % dc);
                let g = space.gamma_apply(gamma, &ec, &vec::unit(field, dc, d1));
                for (a, ga) in g.iter().enumerate() {
                    if ga.is_zero() {
                        continue;
                    }
                    let rho_a = d.coaction().rho.apply(&vec::unit(field, da, a));
                    for (ha, c2) in rho_a.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let (h, a0) = (ha / da, ha % da);
                        let c_part =
                            d.action().apply(&vec::unit(field, dc, d2), &vec::unit(field, dh, h));
                        vec::axpy(
                            &mut rhs,
                            &coeff.mul(&ga.mul(c2)),
                            &vec::kron(&c_part, &vec::unit(field, da, a0)),
                        );
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Assembles both defining conditions as one homogeneous linear system
/// and returns its solution space; every basis solution is re-verified by
/// substitution through [`verify_integral_transform`].
pub fn compute_integral_transforms(
    d: &DoiHopfDatum,
) -> Result<DoiHopfIntegralSpace, IntegralError> {
    if d.side() != DatumSide::Right || !d.nondegenerate() {
        return Err(IntegralError::WrongDatum);
    }
    let field = d.bialgebra().field();
    let (dc, da, dh) = (d.coalgebra().dim(), d.algebra().dim(), d.bialgebra().dim());
    let unknowns = dc * dc * da;
    let idx = |c: usize, dd: usize, a: usize| (c * dc + dd) * da + a;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();

    // Condition 1, one row per (c, d, x, output index y).
    for c in 0..dc {
        for dd in 0..dc {
            for x in 0..da {
                let rho_x = d.coaction().rho.apply(&vec::unit(field, da, x));
                let mut row_block = vec![vec::zeros(field, unknowns); da];
                for a in 0..da {
                    // γ(c)(d) has coefficient gamma[c,d,a] on e_a; multiply
                    // by e_x on the right.
                    let prod = d.algebra().basis_product(a, x);
                    for (y, p) in prod.iter().enumerate() {
                        if !p.is_zero() {
                            row_block[y][idx(c, dd, a)] =
                                row_block[y][idx(c, dd, a)].add(p);
                        }
                    }
                }
                for (ha, coeff) in rho_x.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (h, a0) = (ha / da, ha % da);
                    let dlt = d.bialgebra().coalgebra().comult_vec(&vec::unit(field, dh, h));
                    for (jk, c2) in dlt.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let (h1, h2) = (jk / dh, jk % dh);
                        let c_acted =
                            d.action().apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h1));
                        let d_acted =
                            d.action().apply(&vec::unit(field, dc, dd), &vec::unit(field, dh, h2));
                        for (cp, ccp) in c_acted.iter().enumerate() {
                            if ccp.is_zero() {
                                continue;
                            }
                            for (dp, cdp) in d_acted.iter().enumerate() {
                                if cdp.is_zero() {
                                    continue;
                                }
                                let scale = coeff.mul(&c2.mul(&ccp.mul(cdp)));
                                for ap in 0..da {
                                    let prod = d.algebra().basis_product(a0, ap);
                                    for (y, p) in prod.iter().enumerate() {
                                        if !p.is_zero() {
                                            row_block[y][idx(cp, dp, ap)] = row_block[y]
                                                [idx(cp, dp, ap)]
                                            .sub(&scale.mul(p));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                rows.extend(row_block);
            }
        }
    }

    // Condition 2, one row per (c, d, output index (c', y)).
    for c in 0..dc {
        let dlt_c = d.coalgebra().comult_vec(&vec::unit(field, dc, c));
        for dd in 0..dc {
            let dlt_d = d.coalgebra().comult_vec(&vec::unit(field, dc, dd));
            let mut row_block = vec![vec::zeros(field, unknowns); dc * da];
            for (jk, coeff) in dlt_c.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (c1, c2) = (jk / dc, jk % dc);
                for a in 0..da {
                    let out = c1 * da + a;
                    row_block[out][idx(c2, dd, a)] = row_block[out][idx(c2, dd, a)].add(coeff);
                }
            }
            for (jk, coeff) in dlt_d.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (d1, d2) = (jk / dc, jk % dc);
                for a in 0..da {
                    let rho_a = d.coaction().rho.apply(&vec::unit(field, da, a));
                    for (ha, c2) in rho_a.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let (h, a0) = (ha / da, ha % da);
                        let c_part =
                            d.action().apply(&vec::unit(field, dc, d2), &vec::unit(field, dh, h));
                        for (cp, c3) in c_part.iter().enumerate() {
                            if c3.is_zero() {
                                continue;
                            }
                            let out = cp * da + a0;
                            let scale = coeff.mul(&c2.mul(c3));
                            row_block[out][idx(c, d1, a)] =
                                row_block[out][idx(c, d1, a)].sub(&scale);
                        }
                    }
                }
            }
            rows.extend(row_block);
        }
    }

    let constraint = LinMap::from_fn(field, rows.len(), unknowns, |r, c| rows[r][c].clone());
    let space = constraint.kernel();
    for b in space.basis() {
        assert!(
            verify_integral_transform(d, b),
            "integral transform failed independent re-substitution"
        );
    }
    Ok(DoiHopfIntegralSpace {
        datum: d.clone(),
        space,
    })
}

/// The normalization condition
/// `γ(c₍₁₎)(c₍₂₎) = ε_C(c·1₍₋₁₎) 1₍₀₎` for every basis `c`.
pub fn check_normalized(space: &DoiHopfIntegralSpace, gamma: &[Scalar]) -> bool {
    let d = &space.datum;
    let field = d.bialgebra().field();
    let (dc, da, dh) = (d.coalgebra().dim(), d.algebra().dim(), d.bialgebra().dim());
    let rho1 = d.coaction().rho.apply(d.algebra().unit());
    for c in 0..dc {
        let dlt = d.coalgebra().comult_vec(&vec::unit(field, dc, c));
        let mut lhs = vec::zeros(field, da);
        for (jk, coeff) in dlt.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (c1, c2) = (jk / dc, jk % dc);
            let g = space.gamma_apply(gamma, &vec::unit(field, dc, c1), &vec::unit(field, dc, c2));
            vec::axpy(&mut lhs, coeff, &g);
        }
        let mut rhs = vec::zeros(field, da);
        for (ha, coeff) in rho1.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (h, a0) = (ha / da, ha % da);
            let acted = d.action().apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
            let eps = d.coalgebra().counit_of(&acted);
            if !eps.is_zero() {
                rhs[a0] = rhs[a0].add(&coeff.mul(&eps));
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// The affine space of normalized transforms inside the integral space:
/// `(particular, homogeneous)` in integral-space coordinates, or `None`
/// when no normalized element exists.
pub fn normalized_transforms(
    space: &DoiHopfIntegralSpace,
) -> Option<crate::kernel::AffineSolution> {
    let d = &space.datum;
    let field = d.bialgebra().field();
    let (dc, da, dh) = (d.coalgebra().dim(), d.algebra().dim(), d.bialgebra().dim());
    let k = space.space.dim();
    if k == 0 {
        return None;
    }
    // Row per (c, output a): Σ_s t_s · [γ_s(c₍₁₎)(c₍₂₎)]_a = rhs.
    let mut rows = Vec::new();
    let mut rhs_all = Vec::new();
    let rho1 = d.coaction().rho.apply(d.algebra().unit());
    for c in 0..dc {
        let dlt = d.coalgebra().comult_vec(&vec::unit(field, dc, c));
        let mut lhs_per_sol = vec![vec::zeros(field, da); k];
        for (s, gamma) in space.space.basis().iter().enumerate() {
            for (jk, coeff) in dlt.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (c1, c2) = (jk / dc, jk % dc);
                let g = space.gamma_apply(
                    gamma,
                    &vec::unit(field, dc, c1),
                    &vec::unit(field, dc, c2),
                );
                vec::axpy(&mut lhs_per_sol[s], coeff, &g);
            }
        }
        let mut rhs = vec::zeros(field, da);
        for (ha, coeff) in rho1.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (h, a0) = (ha / da, ha % da);
            let acted = d.action().apply(&vec::unit(field, dc, c), &vec::unit(field, dh, h));
            let eps = d.coalgebra().counit_of(&acted);
            if !eps.is_zero() {
                rhs[a0] = rhs[a0].add(&coeff.mul(&eps));
            }
        }
        for a in 0..da {
            let row: Vec<Scalar> = (0..k).map(|s| lhs_per_sol[s][a].clone()).collect();
            rows.push(row);
            rhs_all.push(rhs[a].clone());
        }
    }
    let constraint = LinMap::from_fn(field, rows.len(), k, |r, c| rows[r][c].clone());
    solve_linear_system(&[constraint], &[rhs_all]).ok()
}

/// Where an example realization lives.
pub enum RealizationHost {
    /// Example 1: the base WHA itself; the target space is its center.
    Base(WeakHopfAlgebra),
    /// Example 2: the dual WHA; the target is the commutant of `Ĥ^R`.
    DualBase(WeakHopfAlgebra),
    /// Example 3: the Heisenberg double realization; the target is the
    /// commutant of the left multiplications.
    Weyl(OperatorAlgebra),
    /// Example 4: the twisted double; the target is the displayed
    /// commutation condition.
    Twisted(Box<TwistedDouble>),
}

impl RealizationHost {
    pub fn algebra(&self) -> &AlgebraData {
        match self {
            RealizationHost::Base(h) => h.algebra(),
            RealizationHost::DualBase(h) => h.algebra(),
            RealizationHost::Weyl(w) => &w.algebra,
            RealizationHost::Twisted(t) => &t.algebra,
        }
    }
}

/// An example realization: the target subspace, the comparison map from
/// the integral-transform space, and the verification report.
pub struct Realization {
    pub host: RealizationHost,
    /// The target space in host coordinates.
    pub space: Subspace,
    /// Integral-space coordinates to host coordinates.
    pub map: LinMap,
    /// The chosen non-degenerate right integral, when one is needed.
    pub integral: Option<Vec<Scalar>>,
    pub report: Report,
}

/// Computes the example's target space and comparison map, and verifies
/// that the map carries the transform space bijectively onto the target.
/// Bijectivity failures are surfaced in the report, not silently dropped.
pub fn example_realization(
    ex: &ExampleDatum,
    transforms: &DoiHopfIntegralSpace,
) -> Result<Realization, IntegralError> {
    if ex.datum != transforms.datum {
        return Err(IntegralError::WrongExample);
    }
    let field = ex.base.field();
    let n = ex.base.dim();
    let k = transforms.space.dim();
    let (host, space, map, integral): (RealizationHost, Subspace, LinMap, Option<Vec<Scalar>>) =
        match ex.kind {
            ExampleKind::Ex1 => {
                let center = ex.base.algebra().center();
                // f(γ) = γ(1)(1) with 1 expressed in C-coordinates.
                let c_embed = ex.c_embed.as_ref().expect("example 1 embeds C");
                let one_c = solve_linear_system(
                    std::slice::from_ref(c_embed),
                    &[ex.base.algebra().unit().to_vec()],
                )?
                .particular;
                let images: Vec<Vec<Scalar>> = transforms
                    .space
                    .basis()
                    .iter()
                    .map(|g| transforms.gamma_apply(g, &one_c, &one_c))
                    .collect();
                let map = LinMap::from_images(field, n, &images);
                (
                    RealizationHost::Base(ex.base.clone()),
                    center,
                    map,
                    None,
                )
            }
            ExampleKind::Ex2 => {
                let dual = dual_wha(&ex.base)?;
                // Commutant of Ĥ^R inside Ĥ.
                let commutant = dual
                    .algebra()
                    .commutant(dual.wba().base_right().basis());
                let r = find_nondegenerate_right_integral(&ex.base)
                    .ok_or(IntegralError::NoNondegenerateIntegral)?;
                // f(γ)(h) = ε(γ(r)(h)); A = H^L embeds through a_embed.
                let a_embed = ex.a_embed.as_ref().expect("example 2 embeds A");
                let images: Vec<Vec<Scalar>> = transforms
                    .space
                    .basis()
                    .iter()
                    .map(|g| {
                        (0..n)
                            .map(|hh| {
                                let val = transforms.gamma_apply(
                                    g,
                                    &r,
                                    &vec::unit(field, n, hh),
                                );
                                ex.base.coalgebra().counit_of(&a_embed.apply(&val))
                            })
                            .collect()
                    })
                    .collect();
                let map = LinMap::from_images(field, n, &images);
                (
                    RealizationHost::DualBase(dual),
                    commutant,
                    map,
                    Some(r),
                )
            }
            ExampleKind::Ex3 => {
                let weyl = weyl_realization(&ex.base).map_err(Box::new)?;
                // Commutant of the left multiplications inside the Weyl
                // realization.
                let l_coords: Vec<Vec<Scalar>> = (0..n)
                    .map(|i| {
                        weyl.coords_of(&ex.base.algebra().left_mult_map(&vec::unit(field, n, i)))
                            .expect("left multiplications generate the realization")
                    })
                    .collect();
                let commutant = weyl.algebra.commutant(&l_coords);
                let r = find_nondegenerate_right_integral(&ex.base)
                    .ok_or(IntegralError::NoNondegenerateIntegral)?;
                // f(γ) = Σ_i T_{β^i} ∘ L_{γ(r)(b_i)}.
                let images: Vec<Vec<Scalar>> = transforms
                    .space
                    .basis()
                    .iter()
                    .map(|g| {
                        let mut op = vec::zeros(field, n * n);
                        for i in 0..n {
                            let val =
                                transforms.gamma_apply(g, &r, &vec::unit(field, n, i));
                            let l_op = ex.base.algebra().left_mult_map(&val);
                            let t_op = hit_operator(&ex.base, &vec::unit(field, n, i));
                            let composed = t_op.compose(&l_op).expect("square");
                            op = vec::add(&op, &flatten_operator(&composed));
                        }
                        weyl.carrier
                            .coords(&op)
                            .expect("comparison lands in the realization")
                    })
                    .collect();
                let map = LinMap::from_images(field, weyl.algebra.dim(), &images);
                (RealizationHost::Weyl(weyl), commutant, map, Some(r))
            }
            ExampleKind::Ex4 => {
                let twisted = build_twisted_double(&ex.base).map_err(Box::new)?;
                let r = find_nondegenerate_right_integral(&ex.base)
                    .ok_or(IntegralError::NoNondegenerateIntegral)?;
                let rho_hat = dual_right_integral(&ex.base, &r)?;
                let s_inv = ex.base.antipode_inv()?.clone();
                let q = twisted.algebra.dim();
                // Commutation condition:
                // u D(b) = D(b₍₁₎) u D((S⁻¹(r) S⁻²(b₍₂₎)) ⇀ ρ̂) for all b.
                let mut constraints = Vec::with_capacity(n);
                let mut rhs = Vec::with_capacity(n);
                for b in 0..n {
                    let eb = vec::unit(field, n, b);
                    let d_b = twisted.double.d_algebra(&eb);
                    let right_mult = twisted.algebra.right_mult_map(&d_b);
                    let dlt = ex.base.coalgebra().comult_vec(&eb);
                    let mut other = LinMap::zero(field, q, q);
                    for (jk, coeff) in dlt.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let (b1, b2) = (jk / n, jk % n);
                        let d_b1 = twisted.double.d_algebra(&vec::unit(field, n, b1));
                        let arg = ex.base.algebra().product(
                            &s_inv.apply(&r),
                            &s_inv.apply(&s_inv.apply(&vec::unit(field, n, b2))),
                        );
                        let hooked = arrows::dual_hit(ex.base.wba(), &arg, &rho_hat.element);
                        let d_phi = twisted.double.d_dual(&hooked);
                        // u ↦ D(b₍₁₎) u D(...) in the twisted algebra.
                        let left = twisted.algebra.left_mult_map(&d_b1);
                        let right = twisted.algebra.right_mult_map(&d_phi);
                        other = other.add(&right.compose(&left)?.scale(coeff))?;
                    }
                    constraints.push(right_mult.sub(&other)?);
                    rhs.push(vec::zeros(field, q));
                }
                let space = solve_linear_system(&constraints, &rhs)?.homogeneous;
                // f(γ) = Σ_i D(β^i) D(γ(r)(b_i)) in the twisted double.
                let images: Vec<Vec<Scalar>> = transforms
                    .space
                    .basis()
                    .iter()
                    .map(|g| {
                        let mut out = vec::zeros(field, q);
                        for i in 0..n {
                            let val =
                                transforms.gamma_apply(g, &r, &vec::unit(field, n, i));
                            let term = twisted.algebra.product(
                                &twisted.double.d_dual(&vec::unit(field, n, i)),
                                &twisted.double.d_algebra(&val),
                            );
                            out = vec::add(&out, &term);
                        }
                        out
                    })
                    .collect();
                let map = LinMap::from_images(field, q, &images);
                (
                    RealizationHost::Twisted(Box::new(twisted)),
                    space,
                    map,
                    Some(r),
                )
            }
        };

    let mut report = Report::new();
    let mut into = true;
    for col in map.columns() {
        if !space.contains(&col) {
            into = false;
        }
    }
    report.record("v0.maps_into", "f maps the transform space into V₀", into);
    report.record("v0.injective", "f is injective", map.rank() == k);
    report.record(
        "v0.bijective",
        "f is bijective onto V₀",
        into && map.rank() == k && k == space.dim(),
    );
    Ok(Realization {
        host,
        space,
        map,
        integral,
        report,
    })
}

/// Evaluates the displayed normalization equation of an example on a
/// candidate element (in host coordinates):
/// `Ŝ⁻¹(ρ̂₍₂₎) ξ ρ̂₍₁₎ = 1` in `Ĥ`, in the Weyl realization, or in the
/// twisted double respectively. Example 1 has no displayed equation; the
/// normalized transform is characterized by `f(γ) = 1` instead.
pub fn check_normalization_equation(
    ex: &ExampleDatum,
    realization: &Realization,
    candidate: &[Scalar],
) -> Result<bool, IntegralError> {
    let field = ex.base.field();
    let n = ex.base.dim();
    let r = match &realization.integral {
        Some(r) => r.clone(),
        None => find_nondegenerate_right_integral(&ex.base)
            .ok_or(IntegralError::NoNondegenerateIntegral)?,
    };
    let rho_hat = dual_right_integral(&ex.base, &r)?;
    let dual = dual_wha(&ex.base)?;
    let s_hat_inv = dual
        .antipode_inv()
        .map_err(|_| IntegralError::NoDualIntegral)?;
    // Δ̂(ρ̂)[j,k] = Σ_m ρ̂_m mult[j,k,m].
    let mut dlt = vec![vec![Scalar::zero(field); n]; n];
    for j in 0..n {
        for kk in 0..n {
            let mut acc = Scalar::zero(field);
            for (m, c) in rho_hat.element.iter().enumerate() {
                if !c.is_zero() {
                    let t = ex.base.algebra().mult().get(&[j, kk, m]);
                    if !t.is_zero() {
                        acc = acc.add(&c.mul(t));
                    }
                }
            }
            dlt[j][kk] = acc;
        }
    }
    let host_alg = realization.host.algebra();
    let mut acc = vec::zeros(field, host_alg.dim());
    for j in 0..n {
        for kk in 0..n {
            if dlt[j][kk].is_zero() {
                continue;
            }
            let left_dual = s_hat_inv.apply(&vec::unit(field, n, kk));
            let (left_host, right_host): (Vec<Scalar>, Vec<Scalar>) = match &realization.host {
                RealizationHost::DualBase(_) => {
                    (left_dual.clone(), vec::unit(field, n, j))
                }
                RealizationHost::Weyl(w) => {
                    let lh = w
                        .coords_of(&hit_operator(&ex.base, &left_dual))
                        .expect("dual actions live in the realization");
                    let rh = w
                        .coords_of(&hit_operator(&ex.base, &vec::unit(field, n, j)))
                        .expect("dual actions live in the realization");
                    (lh, rh)
                }
                RealizationHost::Twisted(t) => (
                    t.double.d_dual(&left_dual),
                    t.double.d_dual(&vec::unit(field, n, j)),
                ),
                RealizationHost::Base(_) => return Err(IntegralError::WrongExample),
            };
            let term = host_alg.product(&host_alg.product(&left_host, candidate), &right_host);
            vec::axpy(&mut acc, &dlt[j][kk], &term);
        }
    }
    Ok(acc == host_alg.unit())
}

/// Example-2 side checks reported with evidence: the dimension comparison
/// between `V₀` and the left integrals of `Ĥ`, and the behaviour of the
/// comparison map `g(λ) = Ŝ(λ ↼ r)` from left dual integrals into `Ĥ^L`.
pub struct DualIntegralEvidence {
    pub dim_v0: usize,
    pub dim_left_integrals_dual: usize,
    pub dim_base_left_dual: usize,
    pub g_map_rank: usize,
    pub g_lands_in_base_left: bool,
    /// Whether the displayed normalization equation is solvable inside
    /// `V₀` (searched over small integer combinations of its basis).
    pub v0_normalized_solvable: bool,
}

pub fn example2_integral_evidence(
    ex: &ExampleDatum,
    realization: &Realization,
) -> Result<DualIntegralEvidence, IntegralError> {
    let field = ex.base.field();
    let n = ex.base.dim();
    let dual = dual_wha(&ex.base)?;
    let left = integral_space(&dual, IntegralSide::Left);
    let r = match &realization.integral {
        Some(r) => r.clone(),
        None => find_nondegenerate_right_integral(&ex.base)
            .ok_or(IntegralError::NoNondegenerateIntegral)?,
    };
    // g(λ) = Ŝ(λ ↼ r) with (λ ↼ r)(g) = λ(r g).
    let mut images = Vec::new();
    let mut lands = true;
    for lambda in left.space.basis() {
        let hooked: Vec<Scalar> = (0..n)
            .map(|g| {
                let rg = ex.base.algebra().product(&r, &vec::unit(field, n, g));
                vec::dot(lambda, &rg)
            })
            .collect();
        let out = dual.antipode().apply(&hooked);
        if !dual.wba().base_left().contains(&out) {
            lands = false;
        }
        images.push(out);
    }
    let g_map = LinMap::from_images(field, n, &images);
    // Solvability of the normalization equation inside V0, searched over
    // a small integer box of basis combinations.
    let dim_v0 = realization.space.dim();
    let mut v0_normalized_solvable = false;
    let mut stack = vec![Vec::<i64>::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == dim_v0 {
            let mut candidate = vec::zeros(field, realization.host.algebra().dim());
            for (c, b) in prefix.iter().zip(realization.space.basis()) {
                vec::axpy(&mut candidate, &Scalar::from_i64(field, *c), b);
            }
            if check_normalization_equation(ex, realization, &candidate).unwrap_or(false) {
                v0_normalized_solvable = true;
                break;
            }
            continue;
        }
        for c in -2..3 {
            let mut p = prefix.clone();
            p.push(c);
            stack.push(p);
        }
    }
    Ok(DualIntegralEvidence {
        dim_v0,
        dim_left_integrals_dual: left.space.dim(),
        dim_base_left_dual: dual.wba().base_left().dim(),
        g_map_rank: g_map.rank(),
        g_lands_in_base_left: lands,
        v0_normalized_solvable,
    })
}
