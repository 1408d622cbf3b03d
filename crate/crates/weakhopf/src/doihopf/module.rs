//! Weak Doi-Hopf modules, their morphisms, hom-space solving and the
//! duality functor on modules.

use crate::kernel::{vec, LinMap, Scalar, Tensor};
use crate::report::{Report, Witness};

use super::datum::{dual_datum, DatumSide, DoiHopfDatum};
use super::DoiHopfError;

/// A weak Doi-Hopf module over a datum.
///
/// Over a right datum this is a right `A`-module with a left `C`-coaction
/// `M → C ⊗ M` (C-major); over a left datum a left `A`-module (the tensor
/// still reads `action[m][a][m']`) with a right coaction `M → M ⊗ C`
/// (M-major).
#[derive(Debug, Clone, PartialEq)]
pub struct DoiHopfModule {
    pub datum: DoiHopfDatum,
    pub dim: usize,
    pub action: Tensor,
    pub coaction: LinMap,
}

impl DoiHopfModule {
    pub fn new(
        datum: DoiHopfDatum,
        dim: usize,
        action: Tensor,
        coaction: LinMap,
    ) -> Result<Self, DoiHopfError> {
        let (da, dc) = (datum.algebra().dim(), datum.coalgebra().dim());
        if action.shape() != [dim, da, dim]
            || coaction.domain_dim() != dim
            || coaction.codomain_dim() != dc * dim
        {
            return Err(DoiHopfError::SideMismatch(format!(
                "module tensors do not match dim {dim}"
            )));
        }
        Ok(DoiHopfModule {
            datum,
            dim,
            action,
            coaction,
        })
    }

    pub fn zero(datum: DoiHopfDatum) -> Self {
        let field = datum.bialgebra().field();
        let da = datum.algebra().dim();
        DoiHopfModule {
            datum,
            dim: 0,
            action: Tensor::zeros(field, &[0, da, 0]),
            coaction: LinMap::zero(field, 0, 0),
        }
    }

    /// The module action; for a right datum `m · a`, for a left `a · m`.
    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.bilinear(m, a)
    }

    pub fn coact(&self, m: &[Scalar]) -> Vec<Scalar> {
        self.coaction.apply(m)
    }
}

/// Verifies the module, comodule and compatibility axioms.
pub fn check_module(m: &DoiHopfModule) -> Report {
    let mut report = Report::new();
    let field = m.datum.bialgebra().field();
    let a = m.datum.algebra();
    let c = m.datum.coalgebra();
    let (dm, da, dc) = (m.dim, a.dim(), c.dim());

    let assoc_anchor = match m.datum.side() {
        DatumSide::Right => "(m·a)·b = m·(ab)",
        DatumSide::Left => "a·(b·m) = (ab)·m",
    };
    report.run("dhmod.assoc", assoc_anchor, || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            for x in 0..da {
                let ex = vec::unit(field, da, x);
                let once = m.act(&ei, &ex);
                for y in 0..da {
                    let ey = vec::unit(field, da, y);
                    let (lhs, rhs) = match m.datum.side() {
                        DatumSide::Right => {
                            (m.act(&once, &ey), m.act(&ei, &a.basis_product(x, y)))
                        }
                        DatumSide::Left => {
                            // once = x·m ; lhs = y? For a left module compute
                            // a·(b·m) with a = e_x applied second.
                            (m.act(&m.act(&ei, &ey), &ex), m.act(&ei, &a.basis_product(x, y)))
                        }
                    };
                    let r = vec::sub(&lhs, &rhs);
                    if !vec::is_zero(&r) {
                        return Some(Witness::new(vec![i, x, y], r));
                    }
                }
            }
        }
        None
    });

    report.run("dhmod.unital", "m·1_A = m", || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            let r = vec::sub(&m.act(&ei, a.unit()), &ei);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });

    report.run("dhmod.coassoc", "(Δ_C⊗id)ρ_M = (id⊗ρ_M)ρ_M", || {
        for i in 0..dm {
            let rho = m.coact(&vec::unit(field, dm, i));
            let (mut lhs, mut rhs) = (
                vec::zeros(field, dc * dc * dm),
                vec::zeros(field, dc * dc * dm),
            );
            for (idx, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (cc, mm) = match m.datum.side() {
                    DatumSide::Right => (idx / dm, idx % dm),
                    DatumSide::Left => (idx % dc, idx / dc),
                };
                let d = c.comult_vec(&vec::unit(field, dc, cc));
                for (jk, c2) in d.iter().enumerate() {
                    if !c2.is_zero() {
                        // Normalized layout C ⊗ C ⊗ M for both sides.
                        let pos = jk * dm + mm;
                        lhs[pos] = lhs[pos].add(&coeff.mul(c2));
                    }
                }
                let rho2 = m.coact(&vec::unit(field, dm, mm));
                for (idx2, c2) in rho2.iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let (cc2, mm2) = match m.datum.side() {
                        DatumSide::Right => (idx2 / dm, idx2 % dm),
                        DatumSide::Left => (idx2 % dc, idx2 / dc),
                    };
                    // (id⊗ρ)ρ puts the new coalgebra leg second for a left
                    // coaction and first for a right coaction.
                    let pos = match m.datum.side() {
                        DatumSide::Right => (cc * dc + cc2) * dm + mm2,
                        DatumSide::Left => (cc2 * dc + cc) * dm + mm2,
                    };
                    rhs[pos] = rhs[pos].add(&coeff.mul(c2));
                }
            }
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });

    report.run("dhmod.counit", "(ε_C⊗id_M)ρ_M = id_M", || {
        for i in 0..dm {
            let rho = m.coact(&vec::unit(field, dm, i));
            let mut out = vec::zeros(field, dm);
            for (idx, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (cc, mm) = match m.datum.side() {
                    DatumSide::Right => (idx / dm, idx % dm),
                    DatumSide::Left => (idx % dc, idx / dc),
                };
                out[mm] = out[mm].add(&coeff.mul(&c.counit()[cc]));
            }
            let r = vec::sub(&out, &vec::unit(field, dm, i));
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });

    let compat_anchor = match m.datum.side() {
        DatumSide::Right => "ρ_M(m·a) = m₍₋₁₎·a₍₋₁₎ ⊗ m₍₀₎·a₍₀₎",
        DatumSide::Left => "ρ_M(a·m) = a₍₀₎·m₍₀₎ ⊗ a₍₁₎·m₍₁₎",
    };
    report.run("dhmod.compat", compat_anchor, || {
        let act_c = &m.datum.action().act;
        let rho_a = &m.datum.coaction().rho;
        let dh = m.datum.bialgebra().dim();
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            let rho_m = m.coact(&ei);
            for x in 0..da {
                let ex = vec::unit(field, da, x);
                let lhs = m.coact(&m.act(&ei, &ex));
                let rho_x = rho_a.apply(&ex);
                let mut rhs = vec::zeros(field, lhs.len());
                for (idx_m, cm) in rho_m.iter().enumerate() {
                    if cm.is_zero() {
                        continue;
                    }
                    let (cc, mm) = match m.datum.side() {
                        DatumSide::Right => (idx_m / dm, idx_m % dm),
                        DatumSide::Left => (idx_m % dc, idx_m / dc),
                    };
                    for (idx_a, ca) in rho_x.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        let (hh, aa) = match m.datum.side() {
                            // Left coaction of H on A is H-major, right is A-major.
                            DatumSide::Right => (idx_a / da, idx_a % da),
                            DatumSide::Left => (idx_a % dh, idx_a / dh),
                        };
                        let coeff = cm.mul(ca);
                        let c_part = act_c.bilinear(
                            &vec::unit(field, dc, cc),
                            &vec::unit(field, dh, hh),
                        );
                        let m_part = m.act(&vec::unit(field, dm, mm), &vec::unit(field, da, aa));
                        let kron = match m.datum.side() {
                            DatumSide::Right => vec::kron(&c_part, &m_part),
                            DatumSide::Left => vec::kron(&m_part, &c_part),
                        };
                        vec::axpy(&mut rhs, &coeff, &kron);
                    }
                }
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![i, x], r));
                }
            }
        }
        None
    });
    report
}

/// A candidate morphism of weak Doi-Hopf modules.
#[derive(Debug, Clone)]
pub struct DoiHopfMorphism {
    pub source: DoiHopfModule,
    pub target: DoiHopfModule,
    pub map: LinMap,
}

/// Verifies that the map intertwines both the actions and the coactions.
pub fn check_morphism(t: &DoiHopfMorphism) -> Result<Report, DoiHopfError> {
    if t.source.datum != t.target.datum {
        return Err(DoiHopfError::DatumMismatch);
    }
    let mut report = Report::new();
    let field = t.source.datum.bialgebra().field();
    let da = t.source.datum.algebra().dim();
    let dc = t.source.datum.coalgebra().dim();
    let dm = t.source.dim;

    report.run("dhmor.action", "T(m·a) = T(m)·a", || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            for x in 0..da {
                let ex = vec::unit(field, da, x);
                let lhs = t.map.apply(&t.source.act(&ei, &ex));
                let rhs = t.target.act(&t.map.apply(&ei), &ex);
                let r = vec::sub(&lhs, &rhs);
                if !vec::is_zero(&r) {
                    return Some(Witness::new(vec![i, x], r));
                }
            }
        }
        None
    });

    report.run("dhmor.coaction", "ρ∘T = (id_C⊗T)∘ρ", || {
        let lift = match t.source.datum.side() {
            DatumSide::Right => LinMap::identity(field, dc).kron(&t.map),
            DatumSide::Left => t.map.kron(&LinMap::identity(field, dc)),
        };
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            let lhs = t.target.coact(&t.map.apply(&ei));
            let rhs = lift.apply(&t.source.coact(&ei));
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });
    Ok(report)
}

/// Basis of the space of Doi-Hopf morphisms `m → n`, solved as one linear
/// system over the matrix entries.
pub fn hom_space(m: &DoiHopfModule, n: &DoiHopfModule) -> Result<Vec<LinMap>, DoiHopfError> {
    if m.datum != n.datum {
        return Err(DoiHopfError::DatumMismatch);
    }
    let field = m.datum.bialgebra().field();
    let da = m.datum.algebra().dim();
    let dc = m.datum.coalgebra().dim();
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // Action intertwining rows.
    for x in 0..da {
        let ex = vec::unit(field, da, x);
        for j in 0..dm {
            let mj = m.act(&vec::unit(field, dm, j), &ex);
            for i in 0..dn {
                let mut row = vec::zeros(field, dn * dm);
                for (k, c) in mj.iter().enumerate() {
                    if !c.is_zero() {
                        row[i * dm + k] = row[i * dm + k].add(c);
                    }
                }
                for k in 0..dn {
                    let c = n.action.get(&[k, x, i]);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].sub(c);
                    }
                }
                rows.push(row);
            }
        }
    }
    // Coaction intertwining rows.
    for j in 0..dm {
        let rho_j = m.coact(&vec::unit(field, dm, j));
        for cc in 0..dc {
            for i in 0..dn {
                let mut row = vec::zeros(field, dn * dm);
                for k in 0..dn {
                    let pos = match n.datum.side() {
                        DatumSide::Right => cc * dn + i,
                        DatumSide::Left => i * dc + cc,
                    };
                    let c = n.coaction.entry(pos, k);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].add(c);
                    }
                }
                for l in 0..dm {
                    let pos = match m.datum.side() {
                        DatumSide::Right => cc * dm + l,
                        DatumSide::Left => l * dc + cc,
                    };
                    let c = &rho_j[pos];
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

/// The duality functor on modules: a module over a right datum becomes a
/// module over the dual left datum on the dual space, and vice versa.
/// Applying it twice returns the original module entrywise.
pub fn dualize_module(m: &DoiHopfModule) -> Result<DoiHopfModule, DoiHopfError> {
    let dual = dual_datum(&m.datum)?;
    let field = m.datum.bialgebra().field();
    let (dm, da, dc) = (m.dim, m.datum.algebra().dim(), m.datum.coalgebra().dim());
    match m.datum.side() {
        DatumSide::Right => {
            // Left action of Ĉ: (ĉ·μ)(x) = (ĉ⊗μ)(ρ_M(x)).
            let action = Tensor::from_fn(field, &[dm, dc, dm], |idx| {
                let (j, cc, x) = (idx[0], idx[1], idx[2]);
                m.coaction.entry(cc * dm + j, x).clone()
            });
            // Right coaction over Â: ρ̂(μ) = Σ_i (a_i ▷ μ) ⊗ α^i with
            // (a ▷ μ)(x) = μ(x·a); M-major layout.
            let coaction = LinMap::from_fn(field, dm * da, dm, |row, j| {
                let (x, i) = (row / da, row % da);
                m.action.get(&[x, i, j]).clone()
            });
            DoiHopfModule::new(dual, dm, action, coaction)
        }
        DatumSide::Left => {
            // Right action of Ĉ: (μ·ĉ)(x) = (μ⊗ĉ)(ρ_M(x)).
            let action = Tensor::from_fn(field, &[dm, dc, dm], |idx| {
                let (j, cc, x) = (idx[0], idx[1], idx[2]);
                m.coaction.entry(j * dc + cc, x).clone()
            });
            // Left coaction over Â: ρ̂(μ) = Σ_i α^i ⊗ (μ ◁ a_i) with
            // (μ ◁ a)(x) = μ(a·x); C-major layout.
            let coaction = LinMap::from_fn(field, da * dm, dm, |row, j| {
                let (i, x) = (row / dm, row % dm);
                m.action.get(&[x, i, j]).clone()
            });
            DoiHopfModule::new(dual, dm, action, coaction)
        }
    }
}

/// Morphisms dualize contravariantly by transposition.
pub fn dualize_morphism(t: &DoiHopfMorphism) -> Result<DoiHopfMorphism, DoiHopfError> {
    Ok(DoiHopfMorphism {
        source: dualize_module(&t.target)?,
        target: dualize_module(&t.source)?,
        map: t.map.transpose(),
    })
}
