//! The structure-constant bundles and their validating constructors.

use crate::kernel::{vec, FieldSpec, LinMap, Scalar, Subspace, Tensor};
use crate::report::Report;

use super::{check_wba, check_wha, HopfError};

/// An associative unital algebra given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    field: FieldSpec,
    dim: usize,
    mult: Tensor,
    unit: Vec<Scalar>,
}

impl AlgebraData {
    /// Validates associativity and the unit laws eagerly.
    pub fn new(field: FieldSpec, mult: Tensor, unit: Vec<Scalar>) -> Result<Self, HopfError> {
        let alg = AlgebraData::unchecked(field, mult, unit)?;
        let report = alg.check();
        if !report.all_pass() {
            return Err(HopfError::Axioms(report));
        }
        Ok(alg)
    }

    pub(crate) fn unchecked(
        field: FieldSpec,
        mult: Tensor,
        unit: Vec<Scalar>,
    ) -> Result<Self, HopfError> {
        let dim = unit.len();
        if mult.shape() != [dim, dim, dim] {
            return Err(HopfError::DimMismatch(format!(
                "mult shape {:?} for dimension {dim}",
                mult.shape()
            )));
        }
        if mult.field() != field {
            return Err(HopfError::FieldMismatch);
        }
        Ok(AlgebraData {
            field,
            dim,
            mult,
            unit,
        })
    }

    /// Shape-checked but not axiom-checked; for candidates that are fed
    /// to [`AlgebraData::check`].
    pub fn candidate(
        field: FieldSpec,
        mult: Tensor,
        unit: Vec<Scalar>,
    ) -> Result<Self, HopfError> {
        AlgebraData::unchecked(field, mult, unit)
    }

    pub fn check(&self) -> Report {
        super::checks::check_algebra(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Tensor {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mult.bilinear(x, y)
    }

    /// The product `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.mult.get(&[i, j, k]).clone()).collect()
    }

    /// Left multiplication by `x` as a linear map.
    pub fn left_mult_map(&self, x: &[Scalar]) -> LinMap {
        let images: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.product(x, &vec::unit(self.field, self.dim, j)))
            .collect();
        LinMap::from_images(self.field, self.dim, &images)
    }

    /// The same algebra with reversed multiplication.
    pub fn opposite(&self) -> AlgebraData {
        AlgebraData {
            field: self.field,
            dim: self.dim,
            mult: self.mult.permute_axes(&[1, 0, 2]),
            unit: self.unit.clone(),
        }
    }

    /// The dual coalgebra on the dual basis.
    pub fn dual_coalgebra(&self) -> CoalgebraData {
        CoalgebraData {
            field: self.field,
            dim: self.dim,
            comult: self.mult.permute_axes(&[2, 0, 1]),
            counit: self.unit.clone(),
        }
    }

    /// Centralizer of a set of elements: `{x : x s = s x for all s}`.
    pub fn commutant(&self, of: &[Vec<Scalar>]) -> Subspace {
        if of.is_empty() {
            return Subspace::full(self.field, self.dim);
        }
        let mut constraints = Vec::new();
        let mut rhs = Vec::new();
        for s in of {
            let l = self.left_mult_map(s);
            let r = self.right_mult_map(s);
            constraints.push(l.sub(&r).expect("same shape"));
            rhs.push(vec::zeros(self.field, self.dim));
        }
        crate::kernel::solve_linear_system(&constraints, &rhs)
            .expect("homogeneous system")
            .homogeneous
    }

    /// Right multiplication by `x` as a linear map.
    pub fn right_mult_map(&self, x: &[Scalar]) -> LinMap {
        let images: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.product(&vec::unit(self.field, self.dim, j), x))
            .collect();
        LinMap::from_images(self.field, self.dim, &images)
    }

    /// The center of the algebra.
    pub fn center(&self) -> Subspace {
        let basis: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| vec::unit(self.field, self.dim, i))
            .collect();
        self.commutant(&basis)
    }
}

/// A coassociative counital coalgebra given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    field: FieldSpec,
    dim: usize,
    comult: Tensor,
    counit: Vec<Scalar>,
}

impl CoalgebraData {
    pub fn new(field: FieldSpec, comult: Tensor, counit: Vec<Scalar>) -> Result<Self, HopfError> {
        let coalg = CoalgebraData::unchecked(field, comult, counit)?;
        let report = coalg.check();
        if !report.all_pass() {
            return Err(HopfError::Axioms(report));
        }
        Ok(coalg)
    }

    pub(crate) fn unchecked(
        field: FieldSpec,
        comult: Tensor,
        counit: Vec<Scalar>,
    ) -> Result<Self, HopfError> {
        let dim = counit.len();
        if comult.shape() != [dim, dim, dim] {
            return Err(HopfError::DimMismatch(format!(
                "comult shape {:?} for dimension {dim}",
                comult.shape()
            )));
        }
        if comult.field() != field {
            return Err(HopfError::FieldMismatch);
        }
        Ok(CoalgebraData {
            field,
            dim,
            comult,
            counit,
        })
    }

    /// Shape-checked but not axiom-checked; for candidates that are fed
    /// to [`CoalgebraData::check`].
    pub fn candidate(
        field: FieldSpec,
        comult: Tensor,
        counit: Vec<Scalar>,
    ) -> Result<Self, HopfError> {
        CoalgebraData::unchecked(field, comult, counit)
    }

    pub fn check(&self) -> Report {
        super::checks::check_coalgebra(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &Tensor {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ(x)` as a Kronecker vector of length `dim²`.
    pub fn comult_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec::zeros(self.field, n * n);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let t = self.comult.get(&[i, j, k]);
                    if !t.is_zero() {
                        out[j * n + k] = out[j * n + k].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ id)Δ(x) = (id ⊗ Δ)Δ(x)` as a Kronecker vector of length `dim³`.
    pub fn comult2_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let d = self.comult_vec(x);
        let mut out = vec::zeros(self.field, n * n * n);
        for (jk, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for a in 0..n {
                for b in 0..n {
                    let t = self.comult.get(&[j, a, b]);
                    if !t.is_zero() {
                        let idx = (a * n + b) * n + k;
                        out[idx] = out[idx].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    /// `Δ` as a linear map into the Kronecker square.
    pub fn comult_map(&self) -> LinMap {
        let n = self.dim;
        LinMap::from_fn(self.field, n * n, n, |jk, i| {
            self.comult.get(&[i, jk / n, jk % n]).clone()
        })
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        vec::dot(&self.counit, x)
    }

    pub fn co_opposite(&self) -> CoalgebraData {
        CoalgebraData {
            field: self.field,
            dim: self.dim,
            comult: self.comult.permute_axes(&[0, 2, 1]),
            counit: self.counit.clone(),
        }
    }

    /// The dual algebra (convolution algebra) on the dual basis.
    pub fn dual_algebra(&self) -> AlgebraData {
        AlgebraData {
            field: self.field,
            dim: self.dim,
            mult: self.comult.permute_axes(&[1, 2, 0]),
            unit: self.counit.clone(),
        }
    }
}

/// Unvalidated structure constants, the input of [`check_wba`] and
/// [`check_wha`]. Valid bundles are promoted into [`WeakBialgebra`] or
/// [`WeakHopfAlgebra`] by the `from_constants` constructors.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Tensor,
    pub unit: Vec<Scalar>,
    pub comult: Tensor,
    pub counit: Vec<Scalar>,
    pub antipode: Option<LinMap>,
}

impl StructureConstants {
    pub fn pi_maps(&self) -> (LinMap, LinMap) {
        let n = self.dim;
        let field = self.field;
        // Δ(1) as an n×n coefficient table.
        let mut d1 = vec![vec![Scalar::zero(field); n]; n];
        for (i, c) in self.unit.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let t = self.comult.get(&[i, j, k]);
                    if !t.is_zero() {
                        d1[j][k] = d1[j][k].add(&c.mul(t));
                    }
                }
            }
        }
        let eps_of_product = |i: usize, j: usize| -> Scalar {
            let mut acc = Scalar::zero(field);
            for m in 0..n {
                let t = self.mult.get(&[i, j, m]);
                if !t.is_zero() && !self.counit[m].is_zero() {
                    acc = acc.add(&t.mul(&self.counit[m]));
                }
            }
            acc
        };
        // Π^L(e_i) = Σ_{j,k} Δ(1)[j,k] ε(e_j e_i) e_k
        let pi_l = LinMap::from_fn(field, n, n, |k, i| {
            let mut acc = Scalar::zero(field);
            for (j, row) in d1.iter().enumerate() {
                if !row[k].is_zero() {
                    acc = acc.add(&row[k].mul(&eps_of_product(j, i)));
                }
            }
            acc
        });
        // Π^R(e_i) = Σ_{j,k} Δ(1)[j,k] ε(e_i e_k) e_j
        let pi_r = LinMap::from_fn(field, n, n, |j, i| {
            let mut acc = Scalar::zero(field);
            for (k, djk) in d1[j].iter().enumerate() {
                if !djk.is_zero() {
                    acc = acc.add(&djk.mul(&eps_of_product(i, k)));
                }
            }
            acc
        });
        (pi_l, pi_r)
    }
}

/// A validated weak bialgebra with cached counital projections and base
/// subalgebras.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakBialgebra {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    pi_l: LinMap,
    pi_r: LinMap,
    base_l: Subspace,
    base_r: Subspace,
}

impl WeakBialgebra {
    pub fn from_constants(sc: &StructureConstants) -> Result<Self, HopfError> {
        let report = check_wba(sc);
        if !report.all_pass() {
            return Err(HopfError::Axioms(report));
        }
        let algebra = AlgebraData::unchecked(sc.field, sc.mult.clone(), sc.unit.clone())?;
        let coalgebra = CoalgebraData::unchecked(sc.field, sc.comult.clone(), sc.counit.clone())?;
        let (pi_l, pi_r) = sc.pi_maps();
        let base_l = pi_l.image();
        let base_r = pi_r.image();
        Ok(WeakBialgebra {
            algebra,
            coalgebra,
            pi_l,
            pi_r,
            base_l,
            base_r,
        })
    }

    pub fn from_parts(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self, HopfError> {
        WeakBialgebra::from_constants(&StructureConstants {
            field: algebra.field(),
            dim: algebra.dim(),
            mult: algebra.mult().clone(),
            unit: algebra.unit().to_vec(),
            comult: coalgebra.comult().clone(),
            counit: coalgebra.counit().to_vec(),
            antipode: None,
        })
    }

    pub fn constants(&self) -> StructureConstants {
        StructureConstants {
            field: self.field(),
            dim: self.dim(),
            mult: self.algebra.mult().clone(),
            unit: self.algebra.unit().to_vec(),
            comult: self.coalgebra.comult().clone(),
            counit: self.coalgebra.counit().to_vec(),
            antipode: None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    /// `Π^L(h) = ε(1₍₁₎ h) 1₍₂₎`.
    pub fn pi_l(&self) -> &LinMap {
        &self.pi_l
    }

    /// `Π^R(h) = 1₍₁₎ ε(h 1₍₂₎)`.
    pub fn pi_r(&self) -> &LinMap {
        &self.pi_r
    }

    /// `H^L`, the image of `Π^L`.
    pub fn base_left(&self) -> &Subspace {
        &self.base_l
    }

    /// `H^R`, the image of `Π^R`.
    pub fn base_right(&self) -> &Subspace {
        &self.base_r
    }

    /// `Δ(1)` as a Kronecker vector of length `dim²`.
    pub fn delta_one(&self) -> Vec<Scalar> {
        self.coalgebra.comult_vec(self.algebra.unit())
    }

    /// `(Δ ⊗ id)Δ(1)` as a Kronecker vector of length `dim³`.
    pub fn delta2_one(&self) -> Vec<Scalar> {
        self.coalgebra.comult2_vec(self.algebra.unit())
    }
}

/// A validated weak Hopf algebra: a weak bialgebra plus its antipode, with
/// the inverse antipode cached when it exists.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakHopfAlgebra {
    wba: WeakBialgebra,
    antipode: LinMap,
    antipode_inv: Option<LinMap>,
}

impl WeakHopfAlgebra {
    pub fn from_constants(sc: &StructureConstants) -> Result<Self, HopfError> {
        let report = check_wha(sc);
        if !report.all_pass() {
            return Err(HopfError::Axioms(report));
        }
        let antipode = sc
            .antipode
            .clone()
            .ok_or_else(|| HopfError::DimMismatch("missing antipode".into()))?;
        let mut wba_sc = sc.clone();
        wba_sc.antipode = None;
        let wba = WeakBialgebra::from_constants(&wba_sc)?;
        let antipode_inv = antipode.inverse();
        Ok(WeakHopfAlgebra {
            wba,
            antipode,
            antipode_inv,
        })
    }

    pub fn from_parts(wba: WeakBialgebra, antipode: LinMap) -> Result<Self, HopfError> {
        let mut sc = wba.constants();
        sc.antipode = Some(antipode);
        WeakHopfAlgebra::from_constants(&sc)
    }

    pub fn constants(&self) -> StructureConstants {
        let mut sc = self.wba.constants();
        sc.antipode = Some(self.antipode.clone());
        sc
    }

    pub fn wba(&self) -> &WeakBialgebra {
        &self.wba
    }

    pub fn field(&self) -> FieldSpec {
        self.wba.field()
    }

    pub fn dim(&self) -> usize {
        self.wba.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.wba.algebra()
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        self.wba.coalgebra()
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<&LinMap, HopfError> {
        self.antipode_inv
            .as_ref()
            .ok_or(HopfError::AntipodeNotInvertible)
    }
}
