//! Dense tensors of exact scalars in row-major order.

use super::{each_index, FieldSpec, KernelError, Scalar};

/// A dense tensor; all structure constants in the crate live here.
///
/// `entries.len()` always equals the product of `shape`. Equality is
/// entrywise, which is semantic equality because scalars are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    field: FieldSpec,
    shape: Vec<usize>,
    entries: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: FieldSpec, shape: &[usize]) -> Self {
        let n: usize = shape.iter().product();
        Tensor {
            field,
            shape: shape.to_vec(),
            entries: vec![Scalar::zero(field); n],
        }
    }

    pub fn from_entries(
        field: FieldSpec,
        shape: &[usize],
        entries: Vec<Scalar>,
    ) -> Result<Self, KernelError> {
        let n: usize = shape.iter().product();
        if entries.len() != n {
            return Err(KernelError::ShapeMismatch(format!(
                "{} entries for shape {:?}",
                entries.len(),
                shape
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.field() != field) {
            return Err(KernelError::FieldMismatch {
                lhs: field,
                rhs: e.field(),
            });
        }
        Ok(Tensor {
            field,
            shape: shape.to_vec(),
            entries,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        shape: &[usize],
        mut f: impl FnMut(&[usize]) -> Scalar,
    ) -> Self {
        let mut t = Tensor::zeros(field, shape);
        each_index(shape, |idx| {
            let off = t.offset(idx);
            t.entries[off] = f(idx);
        });
        t
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Tensor::from_fn(field, &[n, n], |idx| {
            if idx[0] == idx[1] {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut off = 0;
        for (i, (&x, &d)) in idx.iter().zip(&self.shape).enumerate() {
            debug_assert!(x < d, "index {x} out of bound {d} at axis {i}");
            off = off * d + x;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        assert_eq!(value.field(), self.field);
        let off = self.offset(idx);
        self.entries[off] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, KernelError> {
        self.zip_check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Tensor {
            field: self.field,
            shape: self.shape.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor, KernelError> {
        self.zip_check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Tensor {
            field: self.field,
            shape: self.shape.clone(),
            entries,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            field: self.field,
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|e| c.mul(e)).collect(),
        }
    }

    fn zip_check(&self, other: &Tensor) -> Result<(), KernelError> {
        if self.field != other.field {
            return Err(KernelError::FieldMismatch {
                lhs: self.field,
                rhs: other.field,
            });
        }
        if self.shape != other.shape {
            return Err(KernelError::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        Ok(())
    }

    /// Reorders axes: output axis `k` is input axis `perm[k]`.
    pub fn permute_axes(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.shape.len());
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut out = Tensor::zeros(self.field, &shape);
        each_index(&self.shape, |idx| {
            let target: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let off = out.offset(&target);
            out.entries[off] = self.get(idx).clone();
        });
        out
    }

    pub fn reshape(&self, shape: &[usize]) -> Result<Tensor, KernelError> {
        let n: usize = shape.iter().product();
        if n != self.entries.len() {
            return Err(KernelError::ShapeMismatch(format!(
                "cannot reshape {:?} to {:?}",
                self.shape, shape
            )));
        }
        Ok(Tensor {
            field: self.field,
            shape: shape.to_vec(),
            entries: self.entries.clone(),
        })
    }

    /// Tensor contraction over the paired axes `(axis of self, axis of
    /// other)`. The output shape is the uncontracted axes of `self`
    /// followed by those of `other`.
    pub fn contract(&self, other: &Tensor, axes: &[(usize, usize)]) -> Result<Tensor, KernelError> {
        if self.field != other.field {
            return Err(KernelError::FieldMismatch {
                lhs: self.field,
                rhs: other.field,
            });
        }
        for &(a, b) in axes {
            if a >= self.shape.len() || b >= other.shape.len() {
                return Err(KernelError::ShapeMismatch(format!(
                    "contraction axes ({a},{b}) out of range"
                )));
            }
            if self.shape[a] != other.shape[b] {
                return Err(KernelError::ShapeMismatch(format!(
                    "axis {a} (dim {}) paired with axis {b} (dim {})",
                    self.shape[a], other.shape[b]
                )));
            }
        }
        let left_keep: Vec<usize> = (0..self.shape.len())
            .filter(|i| !axes.iter().any(|&(a, _)| a == *i))
            .collect();
        let right_keep: Vec<usize> = (0..other.shape.len())
            .filter(|j| !axes.iter().any(|&(_, b)| b == *j))
            .collect();
        let mut shape: Vec<usize> = left_keep.iter().map(|&i| self.shape[i]).collect();
        shape.extend(right_keep.iter().map(|&j| other.shape[j]));
        let mut out = Tensor::zeros(self.field, &shape);

        // Iterate over nonzero entries of both operands; this is fast on
        // the sparse structure constants that dominate in practice.
        let mut lhs_nz: Vec<(Vec<usize>, &Scalar)> = Vec::new();
        each_index(&self.shape, |idx| {
            let e = self.get(idx);
            if !e.is_zero() {
                lhs_nz.push((idx.to_vec(), e));
            }
        });
        let mut rhs_nz: Vec<(Vec<usize>, &Scalar)> = Vec::new();
        each_index(&other.shape, |idx| {
            let e = other.get(idx);
            if !e.is_zero() {
                rhs_nz.push((idx.to_vec(), e));
            }
        });
        let mut target = vec![0usize; shape.len()];
        for (li, lv) in &lhs_nz {
            'rhs: for (ri, rv) in &rhs_nz {
                for &(a, b) in axes {
                    if li[a] != ri[b] {
                        continue 'rhs;
                    }
                }
                for (k, &i) in left_keep.iter().enumerate() {
                    target[k] = li[i];
                }
                for (k, &j) in right_keep.iter().enumerate() {
                    target[left_keep.len() + k] = ri[j];
                }
                let off = out.offset(&target);
                out.entries[off] = out.entries[off].add(&lv.mul(rv));
            }
        }
        Ok(out)
    }

    /// Applies a rank-3 tensor of shape `[a, b, c]` as a bilinear map:
    /// `out[k] = Σ_{i,j} t[i,j,k] x[i] y[j]`.
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.shape.len(), 3, "bilinear needs a rank-3 tensor");
        let (a, b, c) = (self.shape[0], self.shape[1], self.shape[2]);
        assert_eq!(x.len(), a);
        assert_eq!(y.len(), b);
        let mut out = vec![Scalar::zero(self.field); c];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.mul(yj);
                let base = (i * b + j) * c;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &self.entries[base + k];
                    if !t.is_zero() {
                        *o = o.add(&t.mul(&xy));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vec;

    #[test]
    fn identity_contract_acts_as_identity() {
        let q = FieldSpec::Rationals;
        let id2 = Tensor::identity(q, 2);
        let v = Tensor::from_entries(q, &[2], vec::from_i64s(q, &[3, -5])).unwrap();
        let out = id2.contract(&v, &[(1, 0)]).unwrap();
        assert_eq!(out, v);
    }

    #[test]
    fn contract_is_matrix_product() {
        let q = FieldSpec::Rationals;
        let a = Tensor::from_entries(q, &[2, 3], vec::from_i64s(q, &[1, 2, 3, 4, 5, 6])).unwrap();
        let b = Tensor::from_entries(
            q,
            &[3, 4],
            vec::from_i64s(q, &[1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0]),
        )
        .unwrap();
        let c = a.contract(&b, &[(1, 0)]).unwrap();
        assert_eq!(c.shape(), &[2, 4]);
        // Row 0: (1,2,3)·columns = (1+3, 2+3, 2, 1)
        assert_eq!(c.get(&[0, 0]), &Scalar::from_i64(q, 4));
        assert_eq!(c.get(&[0, 1]), &Scalar::from_i64(q, 5));
        assert_eq!(c.get(&[0, 2]), &Scalar::from_i64(q, 2));
        assert_eq!(c.get(&[0, 3]), &Scalar::from_i64(q, 1));
    }

    #[test]
    fn contract_rejects_bad_shapes_and_fields() {
        let q = FieldSpec::Rationals;
        let f7 = FieldSpec::prime(7).unwrap();
        let a = Tensor::zeros(q, &[2, 3]);
        let b = Tensor::zeros(q, &[4, 2]);
        assert!(matches!(
            a.contract(&b, &[(1, 0)]),
            Err(KernelError::ShapeMismatch(_))
        ));
        let c = Tensor::zeros(f7, &[3, 2]);
        assert!(matches!(
            a.contract(&c, &[(1, 0)]),
            Err(KernelError::FieldMismatch { .. })
        ));
    }

    #[test]
    fn permute_axes_transposes() {
        let q = FieldSpec::Rationals;
        let a = Tensor::from_entries(q, &[2, 3], vec::from_i64s(q, &[1, 2, 3, 4, 5, 6])).unwrap();
        let t = a.permute_axes(&[1, 0]);
        assert_eq!(t.shape(), &[3, 2]);
        assert_eq!(t.get(&[2, 1]), a.get(&[1, 2]));
    }
}
