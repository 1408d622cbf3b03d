//! Linear maps between based spaces, stored as dense matrices.

use super::{FieldSpec, KernelError, Scalar, Subspace, Tensor};

/// A linear map; the matrix has shape `[codomain_dim, domain_dim]` and the
/// image of the `j`-th domain basis vector is column `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    matrix: Tensor,
}

impl LinMap {
    pub fn from_matrix(matrix: Tensor) -> Result<Self, KernelError> {
        if matrix.shape().len() != 2 {
            return Err(KernelError::ShapeMismatch(format!(
                "linear map needs a rank-2 tensor, got shape {:?}",
                matrix.shape()
            )));
        }
        Ok(LinMap { matrix })
    }

    pub fn zero(field: FieldSpec, codomain_dim: usize, domain_dim: usize) -> Self {
        LinMap {
            matrix: Tensor::zeros(field, &[codomain_dim, domain_dim]),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinMap {
            matrix: Tensor::identity(field, n),
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        codomain_dim: usize,
        domain_dim: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        LinMap {
            matrix: Tensor::from_fn(field, &[codomain_dim, domain_dim], |idx| f(idx[0], idx[1])),
        }
    }

    /// Builds the map sending the `j`-th domain basis vector to `images[j]`.
    pub fn from_images(field: FieldSpec, codomain_dim: usize, images: &[Vec<Scalar>]) -> Self {
        for v in images {
            assert_eq!(v.len(), codomain_dim, "image vector of wrong length");
        }
        LinMap::from_fn(field, codomain_dim, images.len(), |i, j| {
            images[j][i].clone()
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.shape()[1]
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.shape()[0]
    }

    pub fn matrix(&self) -> &Tensor {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(&[i, j])
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.domain_dim(), "vector/domain mismatch");
        let mut out = vec![Scalar::zero(self.field()); self.codomain_dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let m = self.entry(i, j);
                if !m.is_zero() {
                    *o = o.add(&m.mul(x));
                }
            }
        }
        out
    }

    /// Composition `self ∘ first`.
    pub fn compose(&self, first: &LinMap) -> Result<LinMap, KernelError> {
        if self.domain_dim() != first.codomain_dim() {
            return Err(KernelError::ShapeMismatch(format!(
                "compose: domain {} vs codomain {}",
                self.domain_dim(),
                first.codomain_dim()
            )));
        }
        let m = self.matrix.contract(&first.matrix, &[(1, 0)])?;
        LinMap::from_matrix(m)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, KernelError> {
        Ok(LinMap {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, KernelError> {
        Ok(LinMap {
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            matrix: self.matrix.scale(c),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap {
            matrix: self.matrix.permute_axes(&[1, 0]),
        }
    }

    /// Kronecker product of maps, first factor major on both sides.
    pub fn kron(&self, other: &LinMap) -> LinMap {
        let field = self.field();
        let (c1, d1) = (self.codomain_dim(), self.domain_dim());
        let (c2, d2) = (other.codomain_dim(), other.domain_dim());
        LinMap::from_fn(field, c1 * c2, d1 * d2, |i, j| {
            let a = self.entry(i / c2, j / d2);
            if a.is_zero() {
                Scalar::zero(field)
            } else {
                a.mul(other.entry(i % c2, j % d2))
            }
        })
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.codomain_dim())
            .map(|i| {
                (0..self.domain_dim())
                    .map(|j| self.entry(i, j).clone())
                    .collect()
            })
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.domain_dim())
            .map(|j| {
                (0..self.codomain_dim())
                    .map(|i| self.entry(i, j).clone())
                    .collect()
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace {
        super::solve::kernel_of(self)
    }

    pub fn image(&self) -> Subspace {
        super::solve::image_of(self)
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn is_identity(&self) -> bool {
        self.domain_dim() == self.codomain_dim()
            && self.matrix == Tensor::identity(self.field(), self.domain_dim())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Two-sided inverse; `None` when the map is not bijective.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.domain_dim() != self.codomain_dim() {
            return None;
        }
        let n = self.domain_dim();
        let field = self.field();
        // Gauss-Jordan on [M | I].
        let mut aug: Vec<Vec<Scalar>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend(super::vec::unit(field, n, i));
                row
            })
            .collect();
        let pivots = super::subspace::rref(&mut aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(LinMap::from_fn(field, n, n, |i, j| aug[i][n + j].clone()))
    }
}
