//! The Drinfel'd double of a finite-dimensional weak Hopf algebra as an
//! amalgamated tensor-product quotient, Yetter-Drinfel'd modules with
//! their monoidal structure, and the transport between Yetter-Drinfel'd
//! modules and right modules over the double.
//!
//! The ambient space of the double is `H ⊗ Ĥ` (H-major Kronecker order);
//! the class of `a ⊗ φ` is the normal form `D(a)D(φ)`. Mixed products are
//! straightened with
//! `D(φ)D(a) = D(a₍₂₎)D(φ₍₂₎) ⟨φ₍₁₎, a₍₃₎⟩ ⟨φ₍₃₎, S⁻¹(a₍₁₎)⟩`.

use thiserror::Error;

use crate::gallery::GalleryError;
use crate::hopfcore::{
    check_algebra_module, dual_wha, op_cop_variants, AlgebraData, AlgebraModule, HopfError,
    StructureConstants, WeakBialgebra, WeakHopfAlgebra,
};
use crate::kernel::{
    quotient, vec, KernelError, LinMap, Scalar, Subspace, Tensor, MAX_AMBIENT_DIM,
};
use crate::report::{Report, Witness};

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("the amalgamation product is not well defined:\n{0}")]
    WellDefinedness(Report),
    #[error("modules live over different hosts")]
    HostMismatch,
    #[error("tensor-product carrier is not closed under the structure maps")]
    CarrierNotClosed,
    #[error("transport to the double failed:\n{0}")]
    TransportFailure(Report),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Gallery(#[from] Box<GalleryError>),
    #[error(transparent)]
    Smash(#[from] Box<crate::smash::SmashError>),
    #[error(transparent)]
    DoiHopf(#[from] crate::doihopf::DoiHopfError),
}

/// The Drinfel'd double: quotient data over `H ⊗ Ĥ` plus the validated
/// weak Hopf algebra structure on the quotient basis.
#[derive(Debug, Clone)]
pub struct DrinfeldDouble {
    pub host: WeakHopfAlgebra,
    pub dual: WeakHopfAlgebra,
    /// The amalgamation relation subspace inside `H ⊗ Ĥ`.
    pub relations: Subspace,
    pub projection: LinMap,
    pub section: LinMap,
    /// The double as a validated weak Hopf algebra on the quotient basis.
    pub wha: WeakHopfAlgebra,
}

impl DrinfeldDouble {
    pub fn dim(&self) -> usize {
        self.wha.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.host.dim() * self.host.dim()
    }

    /// Class of an ambient element of `H ⊗ Ĥ`.
    pub fn class_of(&self, ambient: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(ambient)
    }

    /// `D(a)`, the class of `a ⊗ 1̂`.
    pub fn d_algebra(&self, a: &[Scalar]) -> Vec<Scalar> {
        let eps = self.host.coalgebra().counit();
        self.class_of(&vec::kron(a, eps))
    }

    /// `D(φ)`, the class of `1 ⊗ φ`.
    pub fn d_dual(&self, phi: &[Scalar]) -> Vec<Scalar> {
        self.class_of(&vec::kron(self.host.algebra().unit(), phi))
    }

    /// The straightened product on ambient representatives:
    /// `(a ⊗ φ)(b ⊗ ψ) = Σ ⟨φ₍₁₎, b₍₃₎⟩⟨φ₍₃₎, S⁻¹(b₍₁₎)⟩ (a b₍₂₎) ⊗ (φ₍₂₎ ψ)`.
    pub fn ambient_product(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let h = &self.host;
        let n = h.dim();
        let field = h.field();
        let s_inv = h.antipode_inv().expect("checked at construction");
        let dual_alg = self.dual.algebra();
        let mut out = vec::zeros(field, n * n);
        for (uc, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (a, phi) = (uc / n, uc % n);
            let d2phi = dual_comult2(h, phi);
            for (vc, cv) in v.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let (b, psi) = (vc / n, vc % n);
                let coeff = cu.mul(cv);
                let d2b = h.coalgebra().comult2_vec(&vec::unit(field, n, b));
                for (ib, cb) in d2b.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let (b1, rest) = (ib / (n * n), ib % (n * n));
                    let (b2, b3) = (rest / n, rest % n);
                    let s_b1 = s_inv.apply(&vec::unit(field, n, b1));
                    for (ip, cp) in d2phi.iter().enumerate() {
                        if cp.is_zero() {
                            continue;
                        }
                        let (f1, rest) = (ip / (n * n), ip % (n * n));
                        let (f2, f3) = (rest / n, rest % n);
                        // ⟨β^{f1}, b₍₃₎⟩ picks f1 == b3.
                        if f1 != b3 {
                            continue;
                        }
                        let pair2 = &s_b1[f3];
                        if pair2.is_zero() {
                            continue;
                        }
                        let scale = coeff.mul(&cb.mul(&cp.mul(pair2)));
                        let left = h.algebra().basis_product(a, b2);
                        let right = dual_alg.basis_product(f2, psi);
                        vec::axpy(&mut out, &scale, &vec::kron(&left, &right));
                    }
                }
            }
        }
        out
    }

    /// `Δ_D(D(a)D(φ)) = D(a₍₁₎)D(φ₍₂₎) ⊗ D(a₍₂₎)D(φ₍₁₎)` on an ambient
    /// representative; the output indexes `(H⊗Ĥ) ⊗ (H⊗Ĥ)`.
    fn ambient_comult(&self, u: &[Scalar]) -> Vec<Scalar> {
        let h = &self.host;
        let n = h.dim();
        let field = h.field();
        let amb = n * n;
        let mut out = vec::zeros(field, amb * amb);
        for (uc, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (a, phi) = (uc / n, uc % n);
            let da = h.coalgebra().comult_vec(&vec::unit(field, n, a));
            for (ia, ca) in da.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let (a1, a2) = (ia / n, ia % n);
                // Δ̂(β^phi)[f1, f2] = mult[f1, f2, phi].
                for f1 in 0..n {
                    for f2 in 0..n {
                        let t = h.algebra().mult().get(&[f1, f2, phi]);
                        if t.is_zero() {
                            continue;
                        }
                        let first = a1 * n + f2;
                        let second = a2 * n + f1;
                        let idx = first * amb + second;
                        out[idx] = out[idx].add(&cu.mul(&ca.mul(t)));
                    }
                }
            }
        }
        out
    }

    /// `ε_D(D(a)D(φ)) = ε(a (φ ⇀ 1))` on an ambient representative.
    fn ambient_counit(&self, u: &[Scalar]) -> Scalar {
        let h = &self.host;
        let n = h.dim();
        let field = h.field();
        let mut acc = Scalar::zero(field);
        for (uc, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (a, phi) = (uc / n, uc % n);
            let hit_one = crate::hopfcore::arrows::hit(
                h.wba(),
                &vec::unit(field, n, phi),
                h.algebra().unit(),
            );
            let prod = h.algebra().product(&vec::unit(field, n, a), &hit_one);
            acc = acc.add(&cu.mul(&h.coalgebra().counit_of(&prod)));
        }
        acc
    }

    /// The alternative counit formula `ε̂((1̂ ↼ a) φ)`.
    fn ambient_counit_alt(&self, u: &[Scalar]) -> Scalar {
        let h = &self.host;
        let n = h.dim();
        let field = h.field();
        let mut acc = Scalar::zero(field);
        for (uc, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (a, phi) = (uc / n, uc % n);
            // (1̂ ↼ a)(g) = ε(a g).
            let hooked: Vec<Scalar> = (0..n)
                .map(|g| {
                    h.coalgebra()
                        .counit_of(&h.algebra().basis_product(a, g))
                })
                .collect();
            let prod = self
                .dual
                .algebra()
                .product(&hooked, &vec::unit(field, n, phi));
            // ε̂(ψ) = ψ(1).
            acc = acc.add(&cu.mul(&vec::dot(&prod, h.algebra().unit())));
        }
        acc
    }

    /// `S_D(D(a)D(φ)) = D(Ŝ⁻¹(φ)) D(S(a))` on an ambient representative.
    fn ambient_antipode(&self, u: &[Scalar]) -> Vec<Scalar> {
        let h = &self.host;
        let n = h.dim();
        let field = h.field();
        let s = h.antipode();
        let s_hat_inv = self
            .dual
            .antipode_inv()
            .expect("dual antipode invertible with S");
        let eps = h.coalgebra().counit();
        let mut out = vec::zeros(field, n * n);
        for (uc, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (a, phi) = (uc / n, uc % n);
            let left = vec::kron(
                h.algebra().unit(),
                &s_hat_inv.apply(&vec::unit(field, n, phi)),
            );
            let right = vec::kron(&s.apply(&vec::unit(field, n, a)), eps);
            vec::axpy(&mut out, cu, &self.ambient_product(&left, &right));
        }
        out
    }

    /// Both counit formulas evaluated on every quotient basis class; the
    /// two alternatives must agree.
    pub fn counit_formulas_agree(&self) -> bool {
        (0..self.dim()).all(|i| {
            let rep = self.section.apply(&vec::unit(self.host.field(), self.dim(), i));
            self.ambient_counit(&rep)
                .sub(&self.ambient_counit_alt(&rep))
                .is_zero()
        })
    }
}

/// `Δ̂²(β^m)`: the coefficient of `β^i ⊗ β^j ⊗ β^k` is the coefficient of
/// `e_m` in `e_i e_j e_k`.
fn dual_comult2(h: &WeakHopfAlgebra, m: usize) -> Vec<Scalar> {
    let n = h.dim();
    let field = h.field();
    let mut out = vec::zeros(field, n * n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = h.algebra().basis_product(i, j);
            for (l, c) in ij.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let t = h.algebra().mult().get(&[l, k, m]);
                    if !t.is_zero() {
                        let idx = (i * n + j) * n + k;
                        out[idx] = out[idx].add(&c.mul(t));
                    }
                }
            }
        }
    }
    out
}

/// Builds the Drinfel'd double of `h`.
///
/// The amalgamation relations are generated by
/// `a^R ⊗ 1̂ − 1 ⊗ (1̂ ↼ a^R)` and `a^L ⊗ 1̂ − 1 ⊗ (a^L ⇀ 1̂)`, closed
/// under left multiplication by `H` and right multiplication by `Ĥ`.
/// All three structure levels are verified: well-definedness of the
/// product, coproduct, counit and antipode on representatives, then the
/// full weak Hopf algebra suite on the quotient.
pub fn build_double(h: &WeakHopfAlgebra) -> Result<DrinfeldDouble, DoubleError> {
    let field = h.field();
    let n = h.dim();
    let ambient = n * n;
    if ambient > MAX_AMBIENT_DIM {
        return Err(DoubleError::Kernel(KernelError::DimensionCap(
            ambient,
            MAX_AMBIENT_DIM,
        )));
    }
    if h.antipode_inv().is_err() {
        return Err(DoubleError::AntipodeNotInvertible);
    }
    let dual = dual_wha(h)?;
    let eps = h.coalgebra().counit().to_vec();
    let one = h.algebra().unit().to_vec();

    // Relation generators.
    let mut generators: Vec<Vec<Scalar>> = Vec::new();
    for r in h.wba().base_right().basis() {
        // (1̂ ↼ r)(g) = ε(r g).
        let hooked: Vec<Scalar> = (0..n)
            .map(|g| {
                h.coalgebra()
                    .counit_of(&h.algebra().product(r, &vec::unit(field, n, g)))
            })
            .collect();
        generators.push(vec::sub(&vec::kron(r, &eps), &vec::kron(&one, &hooked)));
    }
    for l in h.wba().base_left().basis() {
        // (l ⇀ 1̂)(g) = ε(g l).
        let hit: Vec<Scalar> = (0..n)
            .map(|g| {
                h.coalgebra()
                    .counit_of(&h.algebra().product(&vec::unit(field, n, g), l))
            })
            .collect();
        generators.push(vec::sub(&vec::kron(l, &eps), &vec::kron(&one, &hit)));
    }
    // Two-sided closure: x · r · ψ with x running over the basis of H
    // (acting on the left leg) and ψ over the basis of Ĥ (right leg).
    let dual_alg = dual.algebra().clone();
    let mut rows = Vec::new();
    for g in &generators {
        for x in 0..n {
            for psi in 0..n {
                let mut row = vec::zeros(field, ambient);
                for (gc, c) in g.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a, phi) = (gc / n, gc % n);
                    let left = h
                        .algebra()
                        .basis_product(x, a);
                    let right = dual_alg.basis_product(phi, psi);
                    vec::axpy(&mut row, c, &vec::kron(&left, &right));
                }
                rows.push(row);
            }
        }
    }
    let relations = Subspace::from_spanning(field, ambient, rows);
    let (projection, section) = quotient(&relations);
    let q = projection.codomain_dim();

    let mut double = DrinfeldDouble {
        host: h.clone(),
        dual,
        relations,
        projection,
        section,
        // Placeholder until the quotient structure is assembled.
        wha: h.clone(),
    };

    // Well-definedness of all structure maps modulo the relations.
    let mut report = Report::new();
    report.run("double.product_well_defined", "(dbalg) respects the amalgamation", || {
        for r in double.relations.basis() {
            for t in 0..ambient {
                let et = vec::unit(field, ambient, t);
                let left = double.class_of(&double.ambient_product(r, &et));
                if !vec::is_zero(&left) {
                    return Some(Witness::new(vec![t], left));
                }
                let right = double.class_of(&double.ambient_product(&et, r));
                if !vec::is_zero(&right) {
                    return Some(Witness::new(vec![t], right));
                }
            }
        }
        None
    });
    report.run("double.coproduct_well_defined", "(dbcoalg) respects the amalgamation", || {
        let amb = ambient;
        for r in double.relations.basis() {
            let w = double.ambient_comult(r);
            // Apply π ⊗ π.
            let mut out = vec::zeros(field, q * q);
            for (xy, c) in w.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (x, y) = (xy / amb, xy % amb);
                let px = double.class_of(&vec::unit(field, amb, x));
                let py = double.class_of(&vec::unit(field, amb, y));
                vec::axpy(&mut out, c, &vec::kron(&px, &py));
            }
            if !vec::is_zero(&out) {
                return Some(Witness::new(vec![], out));
            }
        }
        None
    });
    report.run("double.counit_well_defined", "ε_D respects the amalgamation", || {
        for r in double.relations.basis() {
            let e = double.ambient_counit(r);
            if !e.is_zero() {
                return Some(Witness::new(vec![], vec![e]));
            }
        }
        None
    });
    report.run("double.antipode_well_defined", "S_D respects the amalgamation", || {
        for r in double.relations.basis() {
            let s = double.class_of(&double.ambient_antipode(r));
            if !vec::is_zero(&s) {
                return Some(Witness::new(vec![], s));
            }
        }
        None
    });
    if !report.all_pass() {
        return Err(DoubleError::WellDefinedness(report));
    }

    // Quotient structure constants.
    let mut mult = Tensor::zeros(field, &[q, q, q]);
    for i in 0..q {
        let ri = double.section.apply(&vec::unit(field, q, i));
        for j in 0..q {
            let rj = double.section.apply(&vec::unit(field, q, j));
            let p = double.class_of(&double.ambient_product(&ri, &rj));
            for (k, c) in p.into_iter().enumerate() {
                mult.set(&[i, j, k], c);
            }
        }
    }
    let unit = double.class_of(&vec::kron(&one, &eps));
    let mut comult = Tensor::zeros(field, &[q, q, q]);
    for i in 0..q {
        let ri = double.section.apply(&vec::unit(field, q, i));
        let w = double.ambient_comult(&ri);
        for (xy, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, y) = (xy / ambient, xy % ambient);
            let px = double.class_of(&vec::unit(field, ambient, x));
            let py = double.class_of(&vec::unit(field, ambient, y));
            for (j, cj) in px.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (k, ck) in py.iter().enumerate() {
                    if !ck.is_zero() {
                        let cur = comult.get(&[i, j, k]).clone();
                        comult.set(&[i, j, k], cur.add(&c.mul(&cj.mul(ck))));
                    }
                }
            }
        }
    }
    let counit: Vec<Scalar> = (0..q)
        .map(|i| double.ambient_counit(&double.section.apply(&vec::unit(field, q, i))))
        .collect();
    let antipode = LinMap::from_images(
        field,
        q,
        &(0..q)
            .map(|i| {
                double.class_of(
                    &double.ambient_antipode(&double.section.apply(&vec::unit(field, q, i))),
                )
            })
            .collect::<Vec<_>>(),
    );
    double.wha = WeakHopfAlgebra::from_constants(&StructureConstants {
        field,
        dim: q,
        mult,
        unit,
        comult,
        counit,
        antipode: Some(antipode),
    })?;
    Ok(double)
}

/// The twisted double `D(K^op_cop)^op`: the comparison target of the
/// fourth smash-product example.
#[derive(Debug, Clone)]
pub struct TwistedDouble {
    /// The plain double of `K^op_cop`.
    pub double: DrinfeldDouble,
    /// Its opposite algebra.
    pub algebra: AlgebraData,
}

pub fn build_twisted_double(k: &WeakHopfAlgebra) -> Result<TwistedDouble, DoubleError> {
    if k.antipode_inv().is_err() {
        return Err(DoubleError::AntipodeNotInvertible);
    }
    let twisted_host = op_cop_variants(k)?.op_cop;
    let double = build_double(&twisted_host)?;
    let algebra = AlgebraData::new(
        k.field(),
        double.wha.algebra().mult().permute_axes(&[1, 0, 2]),
        double.wha.algebra().unit().to_vec(),
    )?;
    Ok(TwistedDouble { double, algebra })
}

/// A candidate right Yetter-Drinfel'd module: a right `H`-module that is
/// also a left `H`-comodule (`M → H ⊗ M`, H-major).
#[derive(Debug, Clone, PartialEq)]
pub struct YetterDrinfeldModule {
    pub host: WeakBialgebra,
    pub dim: usize,
    pub action: Tensor,
    pub coaction: LinMap,
}

impl YetterDrinfeldModule {
    pub fn new(host: WeakBialgebra, dim: usize, action: Tensor, coaction: LinMap) -> Self {
        assert_eq!(action.shape(), [dim, host.dim(), dim]);
        assert_eq!(coaction.domain_dim(), dim);
        assert_eq!(coaction.codomain_dim(), host.dim() * dim);
        YetterDrinfeldModule {
            host,
            dim,
            action,
            coaction,
        }
    }

    pub fn zero(host: WeakBialgebra) -> Self {
        let field = host.field();
        let dh = host.dim();
        YetterDrinfeldModule {
            host,
            dim: 0,
            action: Tensor::zeros(field, &[0, dh, 0]),
            coaction: LinMap::zero(field, 0, 0),
        }
    }

    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.bilinear(m, a)
    }

    pub fn coact(&self, m: &[Scalar]) -> Vec<Scalar> {
        self.coaction.apply(m)
    }
}

/// Verifies the module/comodule axioms, non-degeneracy on both sides, and
/// the two-condition Yetter-Drinfel'd compatibility.
pub fn check_yd(m: &YetterDrinfeldModule) -> Report {
    let mut report = Report::new();
    let h = &m.host;
    let field = h.field();
    let (dm, dh) = (m.dim, h.dim());

    report.run("yd.module", "(m·g)·h = m·(gh), m·1 = m", || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            let r = vec::sub(&m.act(&ei, h.algebra().unit()), &ei);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
            for g in 0..dh {
                let once = m.act(&ei, &vec::unit(field, dh, g));
                for x in 0..dh {
                    let lhs = m.act(&once, &vec::unit(field, dh, x));
                    let rhs = m.act(&ei, &h.algebra().basis_product(g, x));
                    let r = vec::sub(&lhs, &rhs);
                    if !vec::is_zero(&r) {
                        return Some(Witness::new(vec![i, g, x], r));
                    }
                }
            }
        }
        None
    });

    report.run("yd.comodule", "(Δ⊗id)ρ = (id⊗ρ)ρ, (ε⊗id)ρ = id", || {
        for i in 0..dm {
            let rho = m.coact(&vec::unit(field, dm, i));
            let mut counit_out = vec::zeros(field, dm);
            let mut lhs = vec::zeros(field, dh * dh * dm);
            let mut rhs = vec::zeros(field, dh * dh * dm);
            for (idx, c) in rho.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (hh, mm) = (idx / dm, idx % dm);
                vec::axpy(
                    &mut counit_out,
                    &c.mul(&h.coalgebra().counit()[hh]),
                    &vec::unit(field, dm, mm),
                );
                let d = h.coalgebra().comult_vec(&vec::unit(field, dh, hh));
                for (jk, c2) in d.iter().enumerate() {
                    if !c2.is_zero() {
                        let pos = jk * dm + mm;
                        lhs[pos] = lhs[pos].add(&c.mul(c2));
                    }
                }
                let rho2 = m.coact(&vec::unit(field, dm, mm));
                for (idx2, c2) in rho2.iter().enumerate() {
                    if !c2.is_zero() {
                        let (h2, m2) = (idx2 / dm, idx2 % dm);
                        let pos = (hh * dh + h2) * dm + m2;
                        rhs[pos] = rhs[pos].add(&c.mul(c2));
                    }
                }
            }
            let r = vec::sub(&counit_out, &vec::unit(field, dm, i));
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });

    report.run(
        "yd.main",
        "(YD) m₍₋₁₎a₍₁₎ ⊗ m₍₀₎·a₍₂₎ = a₍₂₎(m·a₍₁₎)₍₋₁₎ ⊗ (m·a₍₁₎)₍₀₎",
        || {
            for i in 0..dm {
                let rho = m.coact(&vec::unit(field, dm, i));
                for x in 0..dh {
                    let dx = h.coalgebra().comult_vec(&vec::unit(field, dh, x));
                    let mut lhs = vec::zeros(field, dh * dm);
                    let mut rhs = vec::zeros(field, dh * dm);
                    for (jk, c) in dx.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (x1, x2) = (jk / dh, jk % dh);
                        for (idx, cr) in rho.iter().enumerate() {
                            if cr.is_zero() {
                                continue;
                            }
                            let (hh, mm) = (idx / dm, idx % dm);
                            let left_h = h.algebra().basis_product(hh, x1);
                            let left_m =
                                m.act(&vec::unit(field, dm, mm), &vec::unit(field, dh, x2));
                            vec::axpy(&mut lhs, &c.mul(cr), &vec::kron(&left_h, &left_m));
                        }
                        let acted = m.act(&vec::unit(field, dm, i), &vec::unit(field, dh, x1));
                        for (mj, cm) in acted.iter().enumerate() {
                            if cm.is_zero() {
                                continue;
                            }
                            let rho_j = m.coact(&vec::unit(field, dm, mj));
                            for (idx, cr) in rho_j.iter().enumerate() {
                                if cr.is_zero() {
                                    continue;
                                }
                                let (hh, mm) = (idx / dm, idx % dm);
                                let right_h = h
                                    .algebra()
                                    .product(&vec::unit(field, dh, x2), &vec::unit(field, dh, hh));
                                vec::axpy(
                                    &mut rhs,
                                    &c.mul(&cm.mul(cr)),
                                    &vec::kron(&right_h, &vec::unit(field, dm, mm)),
                                );
                            }
                        }
                    }
                    let r = vec::sub(&lhs, &rhs);
                    if !vec::is_zero(&r) {
                        return Some(Witness::new(vec![i, x], r));
                    }
                }
            }
            None
        },
    );

    report.run("yd.unit", "(YD) m₍₋₁₎1₍₁₎ ⊗ m₍₀₎·1₍₂₎ = ρ(m)", || {
        let d1 = h.delta_one();
        for i in 0..dm {
            let rho = m.coact(&vec::unit(field, dm, i));
            let mut lhs = vec::zeros(field, dh * dm);
            for (idx, cr) in rho.iter().enumerate() {
                if cr.is_zero() {
                    continue;
                }
                let (hh, mm) = (idx / dm, idx % dm);
                for (jk, c) in d1.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (o1, o2) = (jk / dh, jk % dh);
                    let left = h.algebra().basis_product(hh, o1);
                    let right = m.act(&vec::unit(field, dm, mm), &vec::unit(field, dh, o2));
                    vec::axpy(&mut lhs, &cr.mul(c), &vec::kron(&left, &right));
                }
            }
            let r = vec::sub(&lhs, &rho);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });
    report
}

/// For a weak Hopf algebra host: verifies the single compatibility
/// relation with `S⁻¹` and records that it agrees with the two-condition
/// form on this instance.
pub fn check_yd_single_relation(
    m: &YetterDrinfeldModule,
    wha: &WeakHopfAlgebra,
) -> Result<Report, DoubleError> {
    if wha.wba() != &m.host {
        return Err(DoubleError::HostMismatch);
    }
    let s_inv = wha
        .antipode_inv()
        .map_err(|_| DoubleError::AntipodeNotInvertible)?;
    let field = m.host.field();
    let (dm, dh) = (m.dim, m.host.dim());
    let mut report = Report::new();
    report.run(
        "yd.single",
        "(m·a)₍₋₁₎ ⊗ (m·a)₍₀₎ = S⁻¹(a₍₃₎) m₍₋₁₎ a₍₁₎ ⊗ m₍₀₎·a₍₂₎",
        || {
            for i in 0..dm {
                let rho_i = m.coact(&vec::unit(field, dm, i));
                for x in 0..dh {
                    let lhs = m.coact(&m.act(&vec::unit(field, dm, i), &vec::unit(field, dh, x)));
                    let d2 = m.host.coalgebra().comult2_vec(&vec::unit(field, dh, x));
                    let mut rhs = vec::zeros(field, dh * dm);
                    for (idx, c) in d2.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (x1, rest) = (idx / (dh * dh), idx % (dh * dh));
                        let (x2, x3) = (rest / dh, rest % dh);
                        let s3 = s_inv.apply(&vec::unit(field, dh, x3));
                        for (ri, cr) in rho_i.iter().enumerate() {
                            if cr.is_zero() {
                                continue;
                            }
                            let (hh, mm) = (ri / dm, ri % dm);
                            let left = m.host.algebra().product(
                                &m.host.algebra().product(&s3, &vec::unit(field, dh, hh)),
                                &vec::unit(field, dh, x1),
                            );
                            let right =
                                m.act(&vec::unit(field, dm, mm), &vec::unit(field, dh, x2));
                            vec::axpy(&mut rhs, &c.mul(cr), &vec::kron(&left, &right));
                        }
                    }
                    let r = vec::sub(&lhs, &rhs);
                    if !vec::is_zero(&r) {
                        return Some(Witness::new(vec![i, x], r));
                    }
                }
            }
            None
        },
    );
    let two_form = check_yd(m).all_pass();
    let single = report.passed("yd.single");
    report.record(
        "yd.two_vs_single_agree",
        "the two-condition form and the single relation agree",
        two_form == single,
    );
    Ok(report)
}

/// The monoidal unit: `H^L` with the action `a·h = 1₍₂₎ ε(a h 1₍₁₎)` and
/// the restricted comultiplication as coaction.
pub fn yd_unit_module(h: &WeakBialgebra) -> Result<YetterDrinfeldModule, DoubleError> {
    let field = h.field();
    let n = h.dim();
    let hl = h.base_left().clone();
    let l = hl.dim();
    let d1 = h.delta_one();
    let mut action = Tensor::zeros(field, &[l, n, l]);
    for i in 0..l {
        for x in 0..n {
            let mut out = vec::zeros(field, n);
            for (jk, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = (jk / n, jk % n);
                let ax = h.algebra().product(&hl.basis()[i], &vec::unit(field, n, x));
                let ax1 = h.algebra().product(&ax, &vec::unit(field, n, j));
                let eps = h.coalgebra().counit_of(&ax1);
                vec::axpy(&mut out, &c.mul(&eps), &vec::unit(field, n, k));
            }
            let coords = hl.coords(&out).ok_or(DoubleError::CarrierNotClosed)?;
            for (k, c) in coords.into_iter().enumerate() {
                action.set(&[i, x, k], c);
            }
        }
    }
    let mut images = Vec::with_capacity(l);
    for i in 0..l {
        let d = h.coalgebra().comult_vec(&hl.basis()[i]);
        let mut image = vec::zeros(field, n * l);
        for hh in 0..n {
            let block: Vec<Scalar> = (0..n).map(|k| d[hh * n + k].clone()).collect();
            let coords = hl.coords(&block).ok_or(DoubleError::CarrierNotClosed)?;
            for (k, c) in coords.into_iter().enumerate() {
                image[hh * l + k] = c;
            }
        }
        images.push(image);
    }
    let coaction = LinMap::from_images(field, n * l, &images);
    Ok(YetterDrinfeldModule::new(h.clone(), l, action, coaction))
}

/// The monoidal product `M × N`: the image of `m ⊗ n ↦ m·1₍₁₎ ⊗ n·1₍₂₎`
/// with the diagonal action and the stated coaction.
pub struct YdTensor {
    pub module: YetterDrinfeldModule,
    /// Carrier inside `M ⊗ N` (M-major).
    pub carrier: Subspace,
}

pub fn yd_tensor(
    m: &YetterDrinfeldModule,
    n: &YetterDrinfeldModule,
) -> Result<YdTensor, DoubleError> {
    if m.host != n.host {
        return Err(DoubleError::HostMismatch);
    }
    let h = &m.host;
    let field = h.field();
    let (dm, dn, dh) = (m.dim, n.dim, h.dim());
    let d1 = h.delta_one();
    let d2 = h.delta2_one();
    let ambient = dm * dn;
    let project = |x: usize, y: usize| -> Vec<Scalar> {
        let mut out = vec::zeros(field, ambient);
        for (jk, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (o1, o2) = (jk / dh, jk % dh);
            let mx = m.act(&vec::unit(field, dm, x), &vec::unit(field, dh, o1));
            let ny = n.act(&vec::unit(field, dn, y), &vec::unit(field, dh, o2));
            vec::axpy(&mut out, c, &vec::kron(&mx, &ny));
        }
        out
    };
    let mut columns = Vec::with_capacity(ambient);
    for x in 0..dm {
        for y in 0..dn {
            columns.push(project(x, y));
        }
    }
    let truncation = LinMap::from_images(field, ambient, &columns);
    let carrier = truncation.image();
    let k = carrier.dim();

    // Diagonal action restricted to the carrier.
    let mut action = Tensor::zeros(field, &[k, dh, k]);
    for i in 0..k {
        let w = &carrier.basis()[i];
        for a in 0..dh {
            let da = h.coalgebra().comult_vec(&vec::unit(field, dh, a));
            let mut out = vec::zeros(field, ambient);
            for (xy, cw) in w.iter().enumerate() {
                if cw.is_zero() {
                    continue;
                }
                let (x, y) = (xy / dn, xy % dn);
                for (jk, c) in da.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a1, a2) = (jk / dh, jk % dh);
                    let mx = m.act(&vec::unit(field, dm, x), &vec::unit(field, dh, a1));
                    let ny = n.act(&vec::unit(field, dn, y), &vec::unit(field, dh, a2));
                    vec::axpy(&mut out, &cw.mul(c), &vec::kron(&mx, &ny));
                }
            }
            let coords = carrier.coords(&out).ok_or(DoubleError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                action.set(&[i, a, j], c);
            }
        }
    }

    // Coaction ρ(m⊗n) = n₍₋₁₎ m₍₋₁₎ 1₍₁₎ ⊗ m₍₀₎·1₍₂₎ ⊗ n₍₀₎·1₍₃₎.
    let mut images = Vec::with_capacity(k);
    for i in 0..k {
        let w = &carrier.basis()[i];
        let mut big = vec::zeros(field, dh * ambient);
        for (xy, cw) in w.iter().enumerate() {
            if cw.is_zero() {
                continue;
            }
            let (x, y) = (xy / dn, xy % dn);
            let rho_x = m.coact(&vec::unit(field, dm, x));
            let rho_y = n.coact(&vec::unit(field, dn, y));
            for (ix, cx) in rho_x.iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                let (hx, m0) = (ix / dm, ix % dm);
                for (iy, cy) in rho_y.iter().enumerate() {
                    if cy.is_zero() {
                        continue;
                    }
                    let (hy, n0) = (iy / dn, iy % dn);
                    for (idx, c1) in d2.iter().enumerate() {
                        if c1.is_zero() {
                            continue;
                        }
                        let (o1, rest) = (idx / (dh * dh), idx % (dh * dh));
                        let (o2, o3) = (rest / dh, rest % dh);
                        let head = h.algebra().product(
                            &h.algebra().basis_product(hy, hx),
                            &vec::unit(field, dh, o1),
                        );
                        let mid = m.act(&vec::unit(field, dm, m0), &vec::unit(field, dh, o2));
                        let tail = n.act(&vec::unit(field, dn, n0), &vec::unit(field, dh, o3));
                        let coeff = cw.mul(&cx.mul(&cy.mul(c1)));
                        vec::axpy(
                            &mut big,
                            &coeff,
                            &vec::kron(&head, &vec::kron(&mid, &tail)),
                        );
                    }
                }
            }
        }
        // Re-express each H-slice in carrier coordinates.
        let mut image = vec::zeros(field, dh * k);
        for hh in 0..dh {
            let block: Vec<Scalar> = (0..ambient).map(|p| big[hh * ambient + p].clone()).collect();
            let coords = carrier.coords(&block).ok_or(DoubleError::CarrierNotClosed)?;
            for (j, c) in coords.into_iter().enumerate() {
                image[hh * k + j] = c;
            }
        }
        images.push(image);
    }
    let coaction = LinMap::from_images(field, dh * k, &images);
    Ok(YdTensor {
        module: YetterDrinfeldModule::new(h.clone(), k, action, coaction),
        carrier,
    })
}

/// Checks that a linear map intertwines the actions and coactions of two
/// Yetter-Drinfel'd modules.
pub fn check_yd_morphism(
    map: &LinMap,
    src: &YetterDrinfeldModule,
    tgt: &YetterDrinfeldModule,
) -> Report {
    let mut report = Report::new();
    let field = src.host.field();
    let dh = src.host.dim();
    report.run("ydmor.action", "T(m·a) = T(m)·a", || {
        for i in 0..src.dim {
            let ei = vec::unit(field, src.dim, i);
            for a in 0..dh {
                let ea = vec::unit(field, dh, a);
                let lhs = map.apply(&src.act(&ei, &ea));
                let rhs = tgt.act(&map.apply(&ei), &ea);
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![i, a], r));
                }
            }
        }
        None
    });
    report.run("ydmor.coaction", "ρ∘T = (id⊗T)∘ρ", || {
        let lift = LinMap::identity(field, dh).kron(map);
        for i in 0..src.dim {
            let ei = vec::unit(field, src.dim, i);
            let lhs = tgt.coact(&map.apply(&ei));
            let rhs = lift.apply(&src.coact(&ei));
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });
    report
}

/// The two unit constraints of the monoidal structure:
/// `u^L(m) = 1₍₂₎ ⊗ m·Π^L(1₍₁₎)` into `U × M` and
/// `u^R(m) = m·1₍₁₎ ⊗ 1₍₂₎` into `M × U`, in carrier coordinates.
pub struct YdUnitors {
    pub unit_module: YetterDrinfeldModule,
    pub left_product: YdTensor,
    pub right_product: YdTensor,
    pub u_left: LinMap,
    pub u_right: LinMap,
}

pub fn yd_unitors(m: &YetterDrinfeldModule) -> Result<YdUnitors, DoubleError> {
    let h = &m.host;
    let field = h.field();
    let (dm, dh) = (m.dim, h.dim());
    let unit_module = yd_unit_module(h)?;
    let hl = h.base_left();
    let l = unit_module.dim;
    let left_product = yd_tensor(&unit_module, m)?;
    let right_product = yd_tensor(m, &unit_module)?;
    let d1 = h.delta_one();

    // u^L: m ↦ 1₍₂₎ ⊗ m·Π^L(1₍₁₎). The expression is assembled in the
    // full H ⊗ M first; only whole slices lie in H^L, the individual
    // standard basis legs of Δ(1) need not.
    let mut left_images = Vec::with_capacity(dm);
    for i in 0..dm {
        let mut big = vec::zeros(field, dh * dm);
        for (jk, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (o1, o2) = (jk / dh, jk % dh);
            let m_part = m.act(
                &vec::unit(field, dm, i),
                &h.pi_l().apply(&vec::unit(field, dh, o1)),
            );
            vec::axpy(&mut big, c, &vec::kron(&vec::unit(field, dh, o2), &m_part));
        }
        let mut amb = vec::zeros(field, l * dm);
        for x in 0..dm {
            let slice: Vec<Scalar> = (0..dh).map(|k| big[k * dm + x].clone()).collect();
            let coords = hl.coords(&slice).ok_or(DoubleError::CarrierNotClosed)?;
            for (u, c) in coords.into_iter().enumerate() {
                amb[u * dm + x] = c;
            }
        }
        left_images.push(
            left_product
                .carrier
                .coords(&amb)
                .ok_or(DoubleError::CarrierNotClosed)?,
        );
    }
    let u_left = LinMap::from_images(field, left_product.module.dim, &left_images);

    // u^R: m ↦ m·1₍₁₎ ⊗ 1₍₂₎, folded the same way.
    let mut right_images = Vec::with_capacity(dm);
    for i in 0..dm {
        let mut big = vec::zeros(field, dm * dh);
        for (jk, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (o1, o2) = (jk / dh, jk % dh);
            let m_part = m.act(&vec::unit(field, dm, i), &vec::unit(field, dh, o1));
            vec::axpy(&mut big, c, &vec::kron(&m_part, &vec::unit(field, dh, o2)));
        }
        let mut amb = vec::zeros(field, dm * l);
        for x in 0..dm {
            let slice: Vec<Scalar> = (0..dh).map(|k| big[x * dh + k].clone()).collect();
            let coords = hl.coords(&slice).ok_or(DoubleError::CarrierNotClosed)?;
            for (u, c) in coords.into_iter().enumerate() {
                amb[x * l + u] = c;
            }
        }
        right_images.push(
            right_product
                .carrier
                .coords(&amb)
                .ok_or(DoubleError::CarrierNotClosed)?,
        );
    }
    let u_right = LinMap::from_images(field, right_product.module.dim, &right_images);

    Ok(YdUnitors {
        unit_module,
        left_product,
        right_product,
        u_left,
        u_right,
    })
}

/// A Yetter-Drinfel'd module transported into a right module over the
/// Drinfel'd double, with the transport chain verification report.
pub struct DoubleTransport {
    pub double: DrinfeldDouble,
    pub module: AlgebraModule,
    pub report: Report,
}

/// The inverse transport: a right `D(H)`-module yields a Yetter-Drinfel'd
/// module with `m·a = m·D(a)` and `ρ(m) = Σ_j e_j ⊗ m·D(β^j)`.
pub fn yd_from_double_module(
    w: &AlgebraModule,
    d: &DrinfeldDouble,
) -> Result<YetterDrinfeldModule, DoubleError> {
    if &w.algebra != d.wha.algebra() {
        return Err(DoubleError::HostMismatch);
    }
    let field = d.host.field();
    let n = d.host.dim();
    let dm = w.dim;
    let action = Tensor::from_fn(field, &[dm, n, dm], |idx| {
        let (i, a, j) = (idx[0], idx[1], idx[2]);
        w.act(&vec::unit(field, dm, i), &d.d_algebra(&vec::unit(field, n, a)))[j].clone()
    });
    let coaction = LinMap::from_fn(field, n * dm, dm, |row, i| {
        let (j, mm) = (row / dm, row % dm);
        w.act(&vec::unit(field, dm, i), &d.d_dual(&vec::unit(field, n, j)))[mm].clone()
    });
    Ok(YetterDrinfeldModule::new(
        d.host.wba().clone(),
        dm,
        action,
        coaction,
    ))
}

/// Transports a Yetter-Drinfel'd module over a WHA `H` into a right
/// module over `D(H)` along the chain: Doi-Hopf module over the
/// fourth-example datum, then the smash-module functor, then the
/// comparison isomorphism onto the twisted double, then the verified
/// algebra isomorphism `D(H) ≅ D(H^op_cop)^op`. The report records every
/// link and the roundtrip identity.
pub fn yd_vs_double(
    m: &YetterDrinfeldModule,
    h: &WeakHopfAlgebra,
) -> Result<DoubleTransport, DoubleError> {
    if h.wba() != &m.host {
        return Err(DoubleError::HostMismatch);
    }
    let field = h.field();
    let mut report = Report::new();

    // Step 1: the Yetter-Drinfel'd data is a Doi-Hopf module over the
    // fourth-example datum on the nose.
    let ex4 = crate::gallery::example_datum(crate::gallery::ExampleKind::Ex4, h)
        .map_err(Box::new)?;
    let dh_module = crate::doihopf::DoiHopfModule::new(
        ex4.datum.clone(),
        m.dim,
        m.action.clone(),
        m.coaction.clone(),
    )?;
    let mod_report = crate::doihopf::check_module(&dh_module);
    report.record(
        "transport.doihopf",
        "YD data is a module over the fourth-example datum",
        mod_report.all_pass(),
    );

    // Step 2: into a right module over the smash product.
    let smash = crate::smash::build_smash(&ex4.datum).map_err(Box::new)?;
    let smash_module = crate::smash::functor_p(&dh_module, &smash).map_err(Box::new)?;

    // Step 3: along the comparison isomorphism onto the twisted double.
    let iso = crate::smash::example_iso(&ex4, &smash).map_err(Box::new)?;
    let iso_inv = iso.map.inverse().expect("verified bijection");
    let q = iso.target.dim();
    let twisted_action = Tensor::from_fn(field, &[m.dim, q, m.dim], |idx| {
        let (i, x, j) = (idx[0], idx[1], idx[2]);
        smash_module.act(&vec::unit(field, m.dim, i), &iso_inv.apply(&vec::unit(field, q, x)))[j]
            .clone()
    });
    let twisted_module = AlgebraModule::new(iso.target.clone(), m.dim, twisted_action);
    report.record(
        "transport.twisted_module",
        "module axioms over the twisted double",
        check_algebra_module(&twisted_module).all_pass(),
    );

    // Step 4: the dictionary D(H) ≅ D(H^op_cop)^op.
    let double = build_double(h)?;
    let twisted = build_twisted_double(h)?;
    let dict = double_opcop_dictionary(&double, &twisted)?;
    let action = Tensor::from_fn(field, &[m.dim, double.dim(), m.dim], |idx| {
        let (i, x, j) = (idx[0], idx[1], idx[2]);
        twisted_module.act(
            &vec::unit(field, m.dim, i),
            &dict.apply(&vec::unit(field, double.dim(), x)),
        )[j]
            .clone()
    });
    let module = AlgebraModule::new(double.wha.algebra().clone(), m.dim, action);
    report.record(
        "transport.double_module",
        "module axioms over the double",
        check_algebra_module(&module).all_pass(),
    );

    // Roundtrip: recovering the Yetter-Drinfel'd structure.
    let back = yd_from_double_module(&module, &double)?;
    report.record(
        "transport.roundtrip_action",
        "roundtrip returns the original action",
        back.action == m.action,
    );
    report.record(
        "transport.roundtrip_coaction",
        "roundtrip returns the original coaction",
        back.coaction == m.coaction,
    );
    if !report.all_pass() {
        return Err(DoubleError::TransportFailure(report));
    }
    Ok(DoubleTransport {
        double,
        module,
        report,
    })
}

/// The verified algebra isomorphism `D(H) → D(H^op_cop)^op` sending
/// `D(a)D(φ)` to the product `D'(φ)D'(a)` computed in `D(H^op_cop)`.
pub fn double_opcop_dictionary(
    double: &DrinfeldDouble,
    twisted: &TwistedDouble,
) -> Result<LinMap, DoubleError> {
    let h = &double.host;
    let field = h.field();
    let n = h.dim();
    let ambient = n * n;
    let d_prime = &twisted.double;
    let eps = h.coalgebra().counit().to_vec();
    let one = h.algebra().unit().to_vec();
    // Ambient-level map a ⊗ φ ↦ class'( (1 ⊗ φ)(a ⊗ 1̂) ) in D'.
    let columns: Vec<Vec<Scalar>> = (0..ambient)
        .map(|i| {
            let (a, phi) = (i / n, i % n);
            let left = vec::kron(&one, &vec::unit(field, n, phi));
            let right = vec::kron(&vec::unit(field, n, a), &eps);
            d_prime.class_of(&d_prime.ambient_product(&left, &right))
        })
        .collect();
    let tilde = LinMap::from_images(field, d_prime.dim(), &columns);
    let mut report = Report::new();
    for r in double.relations.basis() {
        if !vec::is_zero(&tilde.apply(r)) {
            report.record(
                "dict.well_defined",
                "the dictionary kills the amalgamation relations",
                false,
            );
            return Err(DoubleError::TransportFailure(report));
        }
    }
    let dict = tilde.compose(&double.section)?;
    report.record(
        "dict.bijective",
        "the dictionary is a linear bijection",
        dict.domain_dim() == dict.codomain_dim() && dict.inverse().is_some(),
    );
    // Multiplicative into the opposite algebra of D', which is the
    // twisted double.
    report.run("dict.multiplicative", "Ψ(xy) = Ψ(x)Ψ(y) in D(H^op_cop)^op", || {
        let q = double.dim();
        for i in 0..q {
            let xi = dict.apply(&vec::unit(field, q, i));
            for j in 0..q {
                let lhs = dict.apply(&double.wha.algebra().basis_product(i, j));
                let rhs = twisted
                    .algebra
                    .product(&xi, &dict.apply(&vec::unit(field, q, j)));
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![i, j], r));
                }
            }
        }
        None
    });
    report.run("dict.unital", "Ψ(1) = 1", || {
        let r = vec::sub(
            &dict.apply(double.wha.algebra().unit()),
            twisted.algebra.unit(),
        );
        if vec::is_zero(&r) {
            None
        } else {
            Some(Witness::new(vec![], r))
        }
    });
    if !report.all_pass() {
        return Err(DoubleError::TransportFailure(report));
    }
    Ok(dict)
}

/// Basis of the space of Yetter-Drinfel'd morphisms `m → n`, solved as
/// one linear system over the matrix entries.
pub fn yd_hom_space(
    m: &YetterDrinfeldModule,
    n: &YetterDrinfeldModule,
) -> Result<Vec<LinMap>, DoubleError> {
    if m.host != n.host {
        return Err(DoubleError::HostMismatch);
    }
    let field = m.host.field();
    let dh = m.host.dim();
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..dh {
        let ea = vec::unit(field, dh, a);
        for j in 0..dm {
            let mj = m.act(&vec::unit(field, dm, j), &ea);
            for i in 0..dn {
                let mut row = vec::zeros(field, dn * dm);
                for (k, c) in mj.iter().enumerate() {
                    if !c.is_zero() {
                        row[i * dm + k] = row[i * dm + k].add(c);
                    }
                }
                for k in 0..dn {
                    let c = n.action.get(&[k, a, i]);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].sub(c);
                    }
                }
                rows.push(row);
            }
        }
    }
    for j in 0..dm {
        let rho_j = m.coact(&vec::unit(field, dm, j));
        for hh in 0..dh {
            for i in 0..dn {
                let mut row = vec::zeros(field, dn * dm);
                for k in 0..dn {
                    let c = n.coaction.entry(hh * dn + i, k);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].add(c);
                    }
                }
                for l in 0..dm {
                    let c = &rho_j[hh * dm + l];
                    if !c.is_zero() {
                        row[i * dm + l] = row[i * dm + l].sub(c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let constraint = LinMap::from_fn(field, rows.len(), dn * dm, |r, c| rows[r][c].clone());
    Ok(constraint
        .kernel()
        .basis()
        .iter()
        .map(|v| LinMap::from_fn(field, dn, dm, |i, j| v[i * dm + j].clone()))
        .collect())
}

/// The monoidal product of morphisms: `(T ⊗ S)` conjugated by the source
/// and target carriers.
pub fn yd_morphism_product(
    t: &LinMap,
    s: &LinMap,
    source: &YdTensor,
    target: &YdTensor,
) -> Result<LinMap, DoubleError> {
    let field = t.field();
    let lift = t.kron(s);
    let mut images = Vec::with_capacity(source.module.dim);
    for b in source.carrier.basis() {
        let coords = target
            .carrier
            .coords(&lift.apply(b))
            .ok_or(DoubleError::CarrierNotClosed)?;
        images.push(coords);
    }
    Ok(LinMap::from_images(field, target.module.dim, &images))
}

/// The triangle identity at a pair `(M, N)`:
/// `u^R_M × id_N = id_M × u^L_N` as maps `M × N → M ⊗ U ⊗ N` after
/// embedding both triple carriers into the ambient space.
pub fn check_triangle_identity(
    m: &YetterDrinfeldModule,
    n: &YetterDrinfeldModule,
) -> Result<Report, DoubleError> {
    if m.host != n.host {
        return Err(DoubleError::HostMismatch);
    }
    let field = m.host.field();
    let mn = yd_tensor(m, n)?;
    let unitors_m = yd_unitors(m)?;
    let unitors_n = yd_unitors(n)?;
    let l = unitors_m.unit_module.dim;
    let (dm, dn) = (m.dim, n.dim);

    // Left composite through (M × U) × N.
    let mu_n = yd_tensor(&unitors_m.right_product.module, n)?;
    let lhs = yd_morphism_product(
        &unitors_m.u_right,
        &LinMap::identity(field, dn),
        &mn,
        &mu_n,
    )?;
    // Right composite through M × (U × N).
    let m_un = yd_tensor(m, &unitors_n.left_product.module)?;
    let rhs = yd_morphism_product(
        &LinMap::identity(field, dm),
        &unitors_n.u_left,
        &mn,
        &m_un,
    )?;

    // Embed both into M ⊗ U ⊗ N and compare columns.
    let embed_mu = LinMap::from_images(
        field,
        dm * l,
        unitors_m.right_product.carrier.basis(),
    );
    let embed_left = embed_mu.kron(&LinMap::identity(field, dn));
    let embed_un = LinMap::from_images(field, l * dn, unitors_n.left_product.carrier.basis());
    let embed_right = LinMap::identity(field, dm).kron(&embed_un);

    let mut report = Report::new();
    report.run("yd.triangle", "u^R × id = id × u^L on M × N", || {
        for (col_l, col_r) in lhs.columns().iter().zip(rhs.columns().iter()) {
            let amb_l = embed_left.apply(&mu_n.carrier.lift(col_l));
            let amb_r = embed_right.apply(&m_un.carrier.lift(col_r));
            let r = vec::sub(&amb_l, &amb_r);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![], r));
            }
        }
        None
    });
    Ok(report)
}

/// Naturality of the unit constraints on a morphism `T : M → M'`:
/// `u^L_{M'} ∘ T = (id_U × T) ∘ u^L_M` and mirrored for `u^R`.
pub fn check_unitor_naturality(
    t: &LinMap,
    m: &YetterDrinfeldModule,
    m2: &YetterDrinfeldModule,
) -> Result<Report, DoubleError> {
    let field = m.host.field();
    let um = yd_unitors(m)?;
    let um2 = yd_unitors(m2)?;
    let l = um.unit_module.dim;
    let left_lift = yd_morphism_product(
        &LinMap::identity(field, l),
        t,
        &um.left_product,
        &um2.left_product,
    )?;
    let right_lift = yd_morphism_product(
        t,
        &LinMap::identity(field, l),
        &um.right_product,
        &um2.right_product,
    )?;
    let mut report = Report::new();
    report.record(
        "yd.unitor_natural_left",
        "u^L∘T = (id×T)∘u^L",
        um2.u_left.compose(t)? == left_lift.compose(&um.u_left)?,
    );
    report.record(
        "yd.unitor_natural_right",
        "u^R∘T = (T×id)∘u^R",
        um2.u_right.compose(t)? == right_lift.compose(&um.u_right)?,
    );
    Ok(report)
}
