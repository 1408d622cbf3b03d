//! Plain right modules over an algebra and left comodules over a
//! coalgebra, used as inputs and outputs of the adjoint and smash
//! constructions.

use crate::kernel::{vec, LinMap, Scalar, Subspace, Tensor};
use crate::report::{Report, Witness};

use super::structures::{AlgebraData, CoalgebraData};

/// A right module over an algebra: `action[m][a][m']` is the coefficient
/// of `e_{m'}` in `e_m · e_a`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraModule {
    pub algebra: AlgebraData,
    pub dim: usize,
    pub action: Tensor,
}

impl AlgebraModule {
    pub fn new(algebra: AlgebraData, dim: usize, action: Tensor) -> Self {
        assert_eq!(action.shape(), [dim, algebra.dim(), dim]);
        AlgebraModule {
            algebra,
            dim,
            action,
        }
    }

    /// The algebra acting on itself by right multiplication.
    pub fn regular(algebra: &AlgebraData) -> Self {
        AlgebraModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action: algebra.mult().clone(),
        }
    }

    pub fn zero(algebra: &AlgebraData) -> Self {
        AlgebraModule {
            algebra: algebra.clone(),
            dim: 0,
            action: Tensor::zeros(algebra.field(), &[0, algebra.dim(), 0]),
        }
    }

    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.bilinear(m, a)
    }

    /// The cyclic submodule generated by `seed`, rebased on its own
    /// canonical basis, together with the subspace it spans.
    pub fn cyclic_submodule(&self, seed: &[Scalar]) -> (Subspace, AlgebraModule) {
        let field = self.algebra.field();
        let mut span = Subspace::from_spanning(field, self.dim, vec![seed.to_vec()]);
        loop {
            let mut grown = span.clone();
            for b in span.basis() {
                for a in 0..self.algebra.dim() {
                    let v = self.act(b, &vec::unit(field, self.algebra.dim(), a));
                    if !grown.contains(&v) {
                        grown = grown.sum(&Subspace::from_spanning(field, self.dim, vec![v]));
                    }
                }
            }
            if grown.dim() == span.dim() {
                break;
            }
            span = grown;
        }
        let d = span.dim();
        let action = Tensor::from_fn(field, &[d, self.algebra.dim(), d], |idx| {
            let m = span.lift(&vec::unit(field, d, idx[0]));
            let out = self.act(&m, &vec::unit(field, self.algebra.dim(), idx[1]));
            span.coords(&out).expect("submodule closed under the action")[idx[2]].clone()
        });
        let module = AlgebraModule {
            algebra: self.algebra.clone(),
            dim: d,
            action,
        };
        (span, module)
    }

    /// Basis of the space of module maps `self → other`.
    pub fn hom_space(&self, other: &AlgebraModule) -> Vec<LinMap> {
        assert_eq!(self.algebra, other.algebra);
        let field = self.algebra.field();
        let (dm, dn) = (self.dim, other.dim);
        if dm == 0 || dn == 0 {
            return Vec::new();
        }
        // Unknown T as a dn x dm matrix, vec index i*dm + j.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for a in 0..self.algebra.dim() {
            let ea = vec::unit(field, self.algebra.dim(), a);
            for m in 0..dm {
                // T(e_m · a) - T(e_m) · a = 0, one row per output index i.
                let ma = self.act(&vec::unit(field, dm, m), &ea);
                for i in 0..dn {
                    let mut row = vec::zeros(field, dn * dm);
                    for (j, c) in ma.iter().enumerate() {
                        if !c.is_zero() {
                            row[i * dm + j] = row[i * dm + j].add(c);
                        }
                    }
                    for k in 0..dn {
                        let c = other.action.get(&[k, a, i]);
                        if !c.is_zero() {
                            row[k * dm + m] = row[k * dm + m].sub(c);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let constraint = LinMap::from_fn(field, rows.len(), dn * dm, |r, c| rows[r][c].clone());
        let sol = constraint.kernel();
        sol.basis()
            .iter()
            .map(|v| LinMap::from_fn(field, dn, dm, |i, j| v[i * dm + j].clone()))
            .collect()
    }
}

/// Checks the right-module axioms, including unitality `m · 1 = m`.
pub fn check_algebra_module(m: &AlgebraModule) -> Report {
    let mut report = Report::new();
    let field = m.algebra.field();
    let (dm, da) = (m.dim, m.algebra.dim());
    report.run("module.assoc", "(m·a)·b = m·(ab)", || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            for a in 0..da {
                let ea = vec::unit(field, da, a);
                let mi_a = m.act(&ei, &ea);
                for b in 0..da {
                    let eb = vec::unit(field, da, b);
                    let lhs = m.act(&mi_a, &eb);
                    let rhs = m.act(&ei, &m.algebra.basis_product(a, b));
                    let r = vec::sub(&lhs, &rhs);
                    if !vec::is_zero(&r) {
                        return Some(Witness::new(vec![i, a, b], r));
                    }
                }
            }
        }
        None
    });
    report.run("module.unital", "m·1 = m", || {
        for i in 0..dm {
            let ei = vec::unit(field, dm, i);
            let r = vec::sub(&m.act(&ei, m.algebra.unit()), &ei);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![i], r));
            }
        }
        None
    });
    report
}

/// A left comodule over a coalgebra: `coaction: M → C ⊗ M` with the
/// C-major Kronecker convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Comodule {
    pub coalgebra: CoalgebraData,
    pub dim: usize,
    pub coaction: LinMap,
}

impl Comodule {
    pub fn new(coalgebra: CoalgebraData, dim: usize, coaction: LinMap) -> Self {
        assert_eq!(coaction.domain_dim(), dim);
        assert_eq!(coaction.codomain_dim(), coalgebra.dim() * dim);
        Comodule {
            coalgebra,
            dim,
            coaction,
        }
    }

    /// The coalgebra coacting on itself by `Δ`.
    pub fn regular(coalgebra: &CoalgebraData) -> Self {
        let coaction = coalgebra.comult_map();
        Comodule {
            coalgebra: coalgebra.clone(),
            dim: coalgebra.dim(),
            coaction,
        }
    }

    pub fn zero(coalgebra: &CoalgebraData) -> Self {
        Comodule {
            coalgebra: coalgebra.clone(),
            dim: 0,
            coaction: LinMap::zero(coalgebra.field(), 0, 0),
        }
    }

    /// Basis of the space of comodule maps `self → other`.
    pub fn hom_space(&self, other: &Comodule) -> Vec<LinMap> {
        assert_eq!(self.coalgebra, other.coalgebra);
        let field = self.coalgebra.field();
        let (dm, dn, dc) = (self.dim, other.dim, self.coalgebra.dim());
        if dm == 0 || dn == 0 {
            return Vec::new();
        }
        // ρ_N ∘ T = (id_C ⊗ T) ∘ ρ_M, unknowns T[i][j], vec index i*dm + j.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..dm {
            for c in 0..dc {
                for i in 0..dn {
                    let mut row = vec::zeros(field, dn * dm);
                    for k in 0..dn {
                        let coeff = other.coaction.entry(c * dn + i, k);
                        if !coeff.is_zero() {
                            row[k * dm + j] = row[k * dm + j].add(coeff);
                        }
                    }
                    for l in 0..dm {
                        let coeff = self.coaction.entry(c * dm + l, j);
                        if !coeff.is_zero() {
                            row[i * dm + l] = row[i * dm + l].sub(coeff);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let constraint = LinMap::from_fn(field, rows.len(), dn * dm, |r, c| rows[r][c].clone());
        constraint
            .kernel()
            .basis()
            .iter()
            .map(|v| LinMap::from_fn(field, dn, dm, |i, j| v[i * dm + j].clone()))
            .collect()
    }
}

/// Checks the left-comodule axioms, including the counit law
/// `(ε ⊗ id) ∘ ρ = id`.
pub fn check_comodule(m: &Comodule) -> Report {
    let mut report = Report::new();
    let field = m.coalgebra.field();
    let (dm, dc) = (m.dim, m.coalgebra.dim());
    report.run("comodule.coassoc", "(Δ⊗id)ρ = (id⊗ρ)ρ", || {
        for j in 0..dm {
            let rho = m.coaction.apply(&vec::unit(field, dm, j));
            // Both sides in C ⊗ C ⊗ M.
            let mut lhs = vec::zeros(field, dc * dc * dm);
            let mut rhs = vec::zeros(field, dc * dc * dm);
            for (cm, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (c, mm) = (cm / dm, cm % dm);
                let dlt = m.coalgebra.comult_vec(&vec::unit(field, dc, c));
                for (ab, d) in dlt.iter().enumerate() {
                    if !d.is_zero() {
                        let idx = ab * dm + mm;
                        lhs[idx] = lhs[idx].add(&coeff.mul(d));
                    }
                }
                let rho2 = m.coaction.apply(&vec::unit(field, dm, mm));
                for (ck, d) in rho2.iter().enumerate() {
                    if !d.is_zero() {
                        let idx = (c * dc + ck / dm) * dm + ck % dm;
                        rhs[idx] = rhs[idx].add(&coeff.mul(d));
                    }
                }
            }
            let r = vec::sub(&lhs, &rhs);
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![j], r));
            }
        }
        None
    });
    report.run("comodule.counit", "(ε⊗id)ρ = id", || {
        for j in 0..dm {
            let rho = m.coaction.apply(&vec::unit(field, dm, j));
            let mut out = vec::zeros(field, dm);
            for (cm, coeff) in rho.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (c, mm) = (cm / dm, cm % dm);
                out[mm] = out[mm].add(&coeff.mul(&m.coalgebra.counit()[c]));
            }
            let r = vec::sub(&out, &vec::unit(field, dm, j));
            if !vec::is_zero(&r) {
                return Some(Witness::new(vec![j], r));
            }
        }
        None
    });
    report
}
