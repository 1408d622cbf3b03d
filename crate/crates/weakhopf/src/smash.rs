//! The weak smash product `A # Ĉ`, the comparison isomorphisms onto the
//! four classical targets, and the inverse functors realizing the
//! isomorphism between the Doi-Hopf module category and the category of
//! right modules over the smash product.

use thiserror::Error;

use crate::doihopf::{check_module, DatumSide, DoiHopfDatum, DoiHopfError, DoiHopfModule};
use crate::double::{build_twisted_double, DoubleError};
use crate::gallery::{ExampleDatum, ExampleKind};
use crate::hopfcore::{
    check_algebra_module, AlgebraData, AlgebraModule, HopfError, WeakHopfAlgebra,
};
use crate::kernel::{
    image_of, solve_linear_system, vec, FieldSpec, KernelError, LinMap, Scalar, Subspace, Tensor,
};
use crate::report::{Report, Witness};

#[derive(Debug, Error)]
pub enum SmashError {
    #[error("the smash product needs a right-sided datum")]
    WrongSide,
    #[error("the smash product needs a non-degenerate datum")]
    DegenerateDatum,
    #[error("smash multiplication failed validation (invalid datum):\n{0}")]
    AssociativityFailure(Report),
    #[error("functor output failed validation:\n{0}")]
    FunctorFailure(Report),
    #[error("comparison map is not an isomorphism:\n{0}")]
    NotAnIso(Report),
    #[error("module does not live over this smash product")]
    DatumMismatch,
    #[error(transparent)]
    DoiHopf(#[from] DoiHopfError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Double(#[from] Box<DoubleError>),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// `h ▷ ĉ` for a right action of `H` on `C`: `(h ▷ ĉ)(d) = ĉ(d·h)`.
fn dual_left_act(d: &DoiHopfDatum, h: &[Scalar], c_hat: &[Scalar]) -> Vec<Scalar> {
    let act = &d.action().act;
    let dc = d.coalgebra().dim();
    let field = d.bialgebra().field();
    let mut out = vec::zeros(field, dc);
    for (cd_idx, cd) in c_hat.iter().enumerate() {
        if cd.is_zero() {
            continue;
        }
        for (hh, ch) in h.iter().enumerate() {
            if ch.is_zero() {
                continue;
            }
            for x in 0..dc {
                let t = act.get(&[x, hh, cd_idx]);
                if !t.is_zero() {
                    out[x] = out[x].add(&cd.mul(&ch.mul(t)));
                }
            }
        }
    }
    out
}

/// The smash multiplication `(a # ĉ)(b # d̂) = a₍₀₎ b # ĉ (a₍₋₁₎ ▷ d̂)`
/// evaluated on ambient representatives in `A ⊗ Ĉ` (A-major).
fn ambient_product_raw(
    d: &DoiHopfDatum,
    dual_c: &AlgebraData,
    u: &[Scalar],
    v: &[Scalar],
) -> Vec<Scalar> {
    let field = d.bialgebra().field();
    let a = d.algebra();
    let (da, dc, dh) = (a.dim(), d.coalgebra().dim(), d.bialgebra().dim());
    let rho = &d.coaction().rho;
    let mut out = vec::zeros(field, da * dc);
    for (uc, cu) in u.iter().enumerate() {
        if cu.is_zero() {
            continue;
        }
        let (ua, ucb) = (uc / dc, uc % dc);
        let rho_a = rho.apply(&vec::unit(field, da, ua));
        for (vc, cv) in v.iter().enumerate() {
            if cv.is_zero() {
                continue;
            }
            let (vb, vd) = (vc / dc, vc % dc);
            let coeff = cu.mul(cv);
            for (ha, c) in rho_a.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (hh, a0) = (ha / da, ha % da);
                let left = a.basis_product(a0, vb);
                let arrow = dual_left_act(d, &vec::unit(field, dh, hh), &vec::unit(field, dc, vd));
                let right = dual_c.product(&vec::unit(field, dc, ucb), &arrow);
                vec::axpy(&mut out, &coeff.mul(c), &vec::kron(&left, &right));
            }
        }
    }
    out
}

/// The weak smash product algebra of a non-degenerate right datum.
///
/// The carrier is the image of `a ⊗ ĉ ↦ 1_{A₍₀₎} a ⊗ 1_{A₍₋₁₎} ▷ ĉ`
/// inside the ambient `A ⊗ Ĉ` (A-major Kronecker order); the unit is the
/// image of `1_A ⊗ 1_Ĉ`.
#[derive(Debug, Clone)]
pub struct SmashAlgebra {
    pub datum: DoiHopfDatum,
    /// `Ĉ`, the dual algebra of the module coalgebra.
    pub dual_c: AlgebraData,
    pub carrier: Subspace,
    /// The product rebased on the carrier basis.
    pub algebra: AlgebraData,
    /// Carrier basis vectors as ambient columns.
    pub embed: LinMap,
    /// Coordinate extraction at the carrier pivots; left inverse of `embed`.
    pub project: LinMap,
}

impl SmashAlgebra {
    pub fn ambient_dim(&self) -> usize {
        self.datum.algebra().dim() * self.datum.coalgebra().dim()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn dual_left_act(&self, h: &[Scalar], c_hat: &[Scalar]) -> Vec<Scalar> {
        dual_left_act(&self.datum, h, c_hat)
    }

    pub fn ambient_product(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        ambient_product_raw(&self.datum, &self.dual_c, u, v)
    }

    /// The truncation `E(a ⊗ ĉ) = 1_{A₍₀₎} a ⊗ 1_{A₍₋₁₎} ▷ ĉ`, which is
    /// left multiplication by `1_A ⊗ 1_Ĉ` under the ambient product.
    pub fn truncation_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        let one = vec::kron(self.datum.algebra().unit(), self.dual_c.unit());
        self.ambient_product(&one, v)
    }

    pub fn to_carrier(&self, ambient: &[Scalar]) -> Option<Vec<Scalar>> {
        self.carrier.coords(ambient)
    }

    pub fn from_carrier(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.carrier.lift(coords)
    }

    /// The smash product acting on itself from the right.
    pub fn regular_module(&self) -> AlgebraModule {
        AlgebraModule::regular(&self.algebra)
    }
}

/// Builds the weak smash product of a non-degenerate right datum; the
/// carrier, product tensor and unit are computed and validated.
pub fn build_smash(d: &DoiHopfDatum) -> Result<SmashAlgebra, SmashError> {
    if d.side() != DatumSide::Right {
        return Err(SmashError::WrongSide);
    }
    if !d.nondegenerate() {
        return Err(SmashError::DegenerateDatum);
    }
    let field = d.bialgebra().field();
    let (da, dc) = (d.algebra().dim(), d.coalgebra().dim());
    let ambient = da * dc;
    let dual_c = d.dual_c_algebra();

    let one = vec::kron(d.algebra().unit(), dual_c.unit());
    let truncation_cols: Vec<Vec<Scalar>> = (0..ambient)
        .map(|i| ambient_product_raw(d, &dual_c, &one, &vec::unit(field, ambient, i)))
        .collect();
    let truncation = LinMap::from_images(field, ambient, &truncation_cols);
    let carrier = image_of(&truncation);
    let k = carrier.dim();

    // Product tensor on the carrier basis; products must stay on the
    // carrier for the datum to be valid.
    let mut report = Report::new();
    let mut mult = Tensor::zeros(field, &[k, k, k]);
    for i in 0..k {
        for j in 0..k {
            let w = ambient_product_raw(d, &dual_c, &carrier.basis()[i], &carrier.basis()[j]);
            let Some(coords) = carrier.coords(&w) else {
                report.record("smash.closed", "products stay on the carrier", false);
                return Err(SmashError::AssociativityFailure(report));
            };
            for (l, c) in coords.into_iter().enumerate() {
                mult.set(&[i, j, l], c);
            }
        }
    }
    let unit_ambient = ambient_product_raw(d, &dual_c, &one, &one);
    let Some(unit) = carrier.coords(&unit_ambient) else {
        report.record("smash.unit_in_carrier", "unit lies on the carrier", false);
        return Err(SmashError::AssociativityFailure(report));
    };
    let algebra = match AlgebraData::new(field, mult, unit) {
        Ok(a) => a,
        Err(HopfError::Axioms(r)) => return Err(SmashError::AssociativityFailure(r)),
        Err(e) => return Err(SmashError::Hopf(e)),
    };
    let embed = LinMap::from_images(field, ambient, carrier.basis());
    let project = LinMap::from_fn(field, k, ambient, |r, c| {
        if carrier.pivots()[r] == c {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    Ok(SmashAlgebra {
        datum: d.clone(),
        dual_c,
        carrier,
        algebra,
        embed,
        project,
    })
}

/// The functor from Doi-Hopf modules to right smash modules:
/// `m · (a # ĉ) = ĉ(m₍₋₁₎) m₍₀₎ · a`; the identity on morphisms.
pub fn functor_p(m: &DoiHopfModule, s: &SmashAlgebra) -> Result<AlgebraModule, SmashError> {
    if m.datum != s.datum {
        return Err(SmashError::DatumMismatch);
    }
    let field = s.datum.bialgebra().field();
    let (dm, da, dc, k) = (
        m.dim,
        s.datum.algebra().dim(),
        s.datum.coalgebra().dim(),
        s.dim(),
    );
    let mut action = Tensor::zeros(field, &[dm, k, dm]);
    for i in 0..dm {
        let rho_m = m.coact(&vec::unit(field, dm, i));
        for kk in 0..k {
            let w = &s.carrier.basis()[kk];
            let mut out = vec::zeros(field, dm);
            for (wc, cw) in w.iter().enumerate() {
                if cw.is_zero() {
                    continue;
                }
                let (aa, cc) = (wc / dc, wc % dc);
                for mm in 0..dm {
                    let r = &rho_m[cc * dm + mm];
                    if r.is_zero() {
                        continue;
                    }
                    let acted = m.act(&vec::unit(field, dm, mm), &vec::unit(field, da, aa));
                    vec::axpy(&mut out, &cw.mul(r), &acted);
                }
            }
            for (j, c) in out.into_iter().enumerate() {
                action.set(&[i, kk, j], c);
            }
        }
    }
    let module = AlgebraModule::new(s.algebra.clone(), dm, action);
    let report = check_algebra_module(&module);
    if !report.all_pass() {
        return Err(SmashError::FunctorFailure(report));
    }
    Ok(module)
}

/// The inverse functor from right smash modules to Doi-Hopf modules:
/// `m · a = m · (1_{A₍₀₎} a # 1_{A₍₋₁₎} ▷ 1_Ĉ)` and
/// `ρ(m) = Σ_i c_i ⊗ m · (1_{A₍₀₎} # 1_{A₍₋₁₎} ▷ γ^i)`; the identity on
/// morphisms.
pub fn functor_p_inv(n: &AlgebraModule, s: &SmashAlgebra) -> Result<DoiHopfModule, SmashError> {
    if n.algebra != s.algebra {
        return Err(SmashError::DatumMismatch);
    }
    let field = s.datum.bialgebra().field();
    let (dm, da, dc) = (n.dim, s.datum.algebra().dim(), s.datum.coalgebra().dim());
    let mut act_elems = Vec::with_capacity(da);
    for a in 0..da {
        let amb = s.truncation_of(&vec::kron(&vec::unit(field, da, a), s.dual_c.unit()));
        act_elems.push(s.to_carrier(&amb).expect("truncation image"));
    }
    let mut coact_elems = Vec::with_capacity(dc);
    for c in 0..dc {
        let amb = s.truncation_of(&vec::kron(s.datum.algebra().unit(), &vec::unit(field, dc, c)));
        coact_elems.push(s.to_carrier(&amb).expect("truncation image"));
    }
    let action = Tensor::from_fn(field, &[dm, da, dm], |idx| {
        let (i, a, j) = (idx[0], idx[1], idx[2]);
        n.act(&vec::unit(field, dm, i), &act_elems[a])[j].clone()
    });
    let coaction = LinMap::from_fn(field, dc * dm, dm, |row, i| {
        let (c, j) = (row / dm, row % dm);
        n.act(&vec::unit(field, dm, i), &coact_elems[c])[j].clone()
    });
    let module = DoiHopfModule::new(s.datum.clone(), dm, action, coaction)?;
    let report = check_module(&module);
    if !report.all_pass() {
        return Err(SmashError::FunctorFailure(report));
    }
    Ok(module)
}

/// Doi-Hopf modules harvested from the regular smash module: its image
/// under the inverse functor, the images of its proper cyclic
/// submodules, and the zero module.
pub fn harvest_modules(s: &SmashAlgebra) -> Result<Vec<DoiHopfModule>, SmashError> {
    let field = s.datum.bialgebra().field();
    let regular = s.regular_module();
    let mut out = vec![functor_p_inv(&regular, s)?];
    for i in 0..s.dim() {
        let (_, sub) = regular.cyclic_submodule(&vec::unit(field, s.dim(), i));
        if sub.dim < s.dim() && sub.dim > 0 {
            out.push(functor_p_inv(&sub, s)?);
        }
    }
    out.push(DoiHopfModule::zero(s.datum.clone()));
    Ok(out)
}

/// An operator-algebra realization: a subalgebra of the endomorphisms of
/// a based space, stored as a carrier in the flattened matrix space with
/// the rebased product.
#[derive(Debug, Clone)]
pub struct OperatorAlgebra {
    /// Dimension of the space the operators act on.
    pub host_dim: usize,
    pub carrier: Subspace,
    pub algebra: AlgebraData,
}

impl OperatorAlgebra {
    pub fn coords_of(&self, operator: &LinMap) -> Option<Vec<Scalar>> {
        self.carrier.coords(&flatten_operator(operator))
    }
}

/// Flattens an operator matrix row-major into the matrix-space vector.
pub fn flatten_operator(m: &LinMap) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m.codomain_dim() * m.domain_dim());
    for i in 0..m.codomain_dim() {
        for j in 0..m.domain_dim() {
            out.push(m.entry(i, j).clone());
        }
    }
    out
}

pub(crate) fn matmul_flat(field: FieldSpec, n: usize, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec::zeros(field, n * n);
    for i in 0..n {
        for l in 0..n {
            let x = &a[i * n + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[l * n + j];
                if !y.is_zero() {
                    out[i * n + j] = out[i * n + j].add(&x.mul(y));
                }
            }
        }
    }
    out
}

/// The matrix of `T_φ : h ↦ φ ⇀ h = h₍₁₎ ⟨φ, h₍₂₎⟩`.
pub fn hit_operator(h: &WeakHopfAlgebra, phi: &[Scalar]) -> LinMap {
    let field = h.field();
    let n = h.dim();
    LinMap::from_fn(field, n, n, |r, c| {
        let mut acc = Scalar::zero(field);
        for (k, p) in phi.iter().enumerate() {
            if !p.is_zero() {
                let t = h.coalgebra().comult().get(&[c, r, k]);
                if !t.is_zero() {
                    acc = acc.add(&p.mul(t));
                }
            }
        }
        acc
    })
}

/// The Heisenberg-double realization of `Ĥ ⋉ H`: the subalgebra of
/// operators on `H` generated by the left multiplications `L_a` and the
/// arrow actions `T_φ : h ↦ φ ⇀ h`.
pub fn weyl_realization(h: &WeakHopfAlgebra) -> Result<OperatorAlgebra, SmashError> {
    let field = h.field();
    let n = h.dim();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        gens.push(flatten_operator(&h.algebra().left_mult_map(&vec::unit(field, n, i))));
        gens.push(flatten_operator(&hit_operator(h, &vec::unit(field, n, i))));
    }
    let mut carrier = Subspace::from_spanning(field, n * n, gens);
    loop {
        let mut grown = carrier.clone();
        let basis = carrier.basis().to_vec();
        for x in &basis {
            for y in &basis {
                let p = matmul_flat(field, n, x, y);
                if !grown.contains(&p) {
                    grown = grown.sum(&Subspace::from_spanning(field, n * n, vec![p]));
                }
            }
        }
        if grown.dim() == carrier.dim() {
            break;
        }
        carrier = grown;
    }
    let k = carrier.dim();
    let mut mult = Tensor::zeros(field, &[k, k, k]);
    for i in 0..k {
        for j in 0..k {
            let p = matmul_flat(field, n, &carrier.basis()[i], &carrier.basis()[j]);
            let coords = carrier.coords(&p).expect("closed by construction");
            for (l, c) in coords.into_iter().enumerate() {
                mult.set(&[i, j, l], c);
            }
        }
    }
    let id = flatten_operator(&LinMap::identity(field, n));
    let unit = carrier
        .coords(&id)
        .expect("identity operator generated by T_ε");
    let algebra = AlgebraData::new(field, mult, unit)?;
    Ok(OperatorAlgebra {
        host_dim: n,
        carrier,
        algebra,
    })
}

/// A verified comparison isomorphism from a smash product onto its
/// classical target algebra.
#[derive(Debug, Clone)]
pub struct ComparisonIso {
    pub target: AlgebraData,
    /// Carrier coordinates to target coordinates.
    pub map: LinMap,
    pub report: Report,
}

/// Builds and verifies the comparison isomorphism of a gallery example:
/// onto `H` (`ι = id ⊗ ε̂`), onto `Ĥ` (`ι = ε ⊗ id`), onto the Heisenberg
/// double (`ι(E(a ⊗ φ)) = T_φ ∘ L_a`), or onto the twisted Drinfel'd
/// double (`ι(E(a ⊗ φ)) = D(φ)D(a)`).
pub fn example_iso(ex: &ExampleDatum, s: &SmashAlgebra) -> Result<ComparisonIso, SmashError> {
    if ex.datum != s.datum {
        return Err(SmashError::DatumMismatch);
    }
    let field = s.datum.bialgebra().field();
    let (da, dc, k) = (
        s.datum.algebra().dim(),
        s.datum.coalgebra().dim(),
        s.dim(),
    );
    let (target, map): (AlgebraData, LinMap) = match ex.kind {
        ExampleKind::Ex1 => {
            let c_embed = ex.c_embed.as_ref().expect("example 1 embeds C");
            let one_c =
                solve_linear_system(std::slice::from_ref(c_embed), &[ex.base.algebra().unit().to_vec()])?
                    .particular;
            let n = ex.base.dim();
            let map = LinMap::from_fn(field, n, k, |r, col| {
                let w = &s.carrier.basis()[col];
                let mut acc = Scalar::zero(field);
                for (wc, cw) in w.iter().enumerate() {
                    if cw.is_zero() {
                        continue;
                    }
                    let (aa, cc) = (wc / dc, wc % dc);
                    if aa == r && !one_c[cc].is_zero() {
                        acc = acc.add(&cw.mul(&one_c[cc]));
                    }
                }
                acc
            });
            (ex.base.algebra().clone(), map)
        }
        ExampleKind::Ex2 => {
            let a_embed = ex.a_embed.as_ref().expect("example 2 embeds A");
            let eps_a: Vec<Scalar> = (0..da)
                .map(|i| {
                    ex.base
                        .coalgebra()
                        .counit_of(&a_embed.apply(&vec::unit(field, da, i)))
                })
                .collect();
            let n = ex.base.dim();
            let map = LinMap::from_fn(field, n, k, |r, col| {
                let w = &s.carrier.basis()[col];
                let mut acc = Scalar::zero(field);
                for (wc, cw) in w.iter().enumerate() {
                    if cw.is_zero() {
                        continue;
                    }
                    let (aa, cc) = (wc / dc, wc % dc);
                    if cc == r && !eps_a[aa].is_zero() {
                        acc = acc.add(&cw.mul(&eps_a[aa]));
                    }
                }
                acc
            });
            (ex.base.coalgebra().dual_algebra(), map)
        }
        ExampleKind::Ex3 => {
            let weyl = weyl_realization(&ex.base)?;
            let n = ex.base.dim();
            let base = ex.base.clone();
            let tilde = move |a: usize, phi: usize| -> Vec<Scalar> {
                let l_a = base.algebra().left_mult_map(&vec::unit(field, n, a));
                let t_phi = hit_operator(&base, &vec::unit(field, n, phi));
                flatten_operator(&t_phi.compose(&l_a).expect("square"))
            };
            let raw = factor_through_truncation(s, n * n, tilde)?;
            let mut columns = Vec::with_capacity(k);
            for col in raw.columns() {
                let Some(c) = weyl.carrier.coords(&col) else {
                    let mut report = Report::new();
                    report.record(
                        "iso.lands_in_target",
                        "ι lands in the operator realization",
                        false,
                    );
                    return Err(SmashError::NotAnIso(report));
                };
                columns.push(c);
            }
            let map = LinMap::from_images(field, weyl.carrier.dim(), &columns);
            (weyl.algebra, map)
        }
        ExampleKind::Ex4 => {
            let twisted = build_twisted_double(&ex.base).map_err(Box::new)?;
            let proj = twisted.double.projection.clone();
            let nk = ex.base.dim();
            let tilde = move |a: usize, phi: usize| -> Vec<Scalar> {
                proj.apply(&vec::unit(field, nk * nk, a * nk + phi))
            };
            let map = factor_through_truncation(s, twisted.double.dim(), tilde)?;
            (twisted.algebra.clone(), map)
        }
    };

    let mut report = Report::new();
    report.record(
        "iso.bijective",
        "ι is a linear bijection",
        map.domain_dim() == map.codomain_dim() && map.inverse().is_some(),
    );
    report.run("iso.unital", "ι(1) = 1", || {
        let r = vec::sub(&map.apply(s.algebra.unit()), target.unit());
        if vec::is_zero(&r) {
            None
        } else {
            Some(Witness::new(vec![], r))
        }
    });
    report.run("iso.multiplicative", "ι(xy) = ι(x)ι(y)", || {
        for i in 0..k {
            let xi = map.apply(&vec::unit(field, k, i));
            for j in 0..k {
                let lhs = map.apply(&s.algebra.basis_product(i, j));
                let rhs = target.product(&xi, &map.apply(&vec::unit(field, k, j)));
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![i, j], r));
                }
            }
        }
        None
    });
    if !report.all_pass() {
        return Err(SmashError::NotAnIso(report));
    }
    Ok(ComparisonIso {
        target,
        map,
        report,
    })
}

/// Factors an ambient-level map `ι̃ : A ⊗ Ĉ → k^t` through the
/// truncation: checks that `ι̃` kills the truncation kernel, then induces
/// the map on carrier coordinates by lifting each carrier basis vector.
fn factor_through_truncation(
    s: &SmashAlgebra,
    target_dim: usize,
    tilde: impl Fn(usize, usize) -> Vec<Scalar>,
) -> Result<LinMap, SmashError> {
    let field = s.datum.bialgebra().field();
    let (da, dc) = (s.datum.algebra().dim(), s.datum.coalgebra().dim());
    let ambient = da * dc;
    let columns: Vec<Vec<Scalar>> = (0..ambient).map(|i| tilde(i / dc, i % dc)).collect();
    let tilde_map = LinMap::from_images(field, target_dim, &columns);
    let trunc_cols: Vec<Vec<Scalar>> = (0..ambient)
        .map(|i| s.truncation_of(&vec::unit(field, ambient, i)))
        .collect();
    let trunc = LinMap::from_images(field, ambient, &trunc_cols);
    for kb in trunc.kernel().basis() {
        if !vec::is_zero(&tilde_map.apply(kb)) {
            let mut report = Report::new();
            report.record(
                "iso.well_defined",
                "ι̃ vanishes on the kernel of the truncation",
                false,
            );
            return Err(SmashError::NotAnIso(report));
        }
    }
    let mut images = Vec::with_capacity(s.dim());
    for b in s.carrier.basis() {
        let pre =
            solve_linear_system(std::slice::from_ref(&trunc), std::slice::from_ref(b))?.particular;
        images.push(tilde_map.apply(&pre));
    }
    Ok(LinMap::from_images(field, target_dim, &images))
}
