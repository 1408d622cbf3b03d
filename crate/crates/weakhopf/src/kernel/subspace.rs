//! Canonical subspaces: basis matrices in reduced row-echelon form.

use super::{vec, FieldSpec, Scalar};

/// Brings `rows` into reduced row-echelon form in place and returns the
/// pivot columns in row order. Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.mul(&rows[rank][c]);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// A linear subspace of a based vector space, stored canonically.
///
/// Two subspaces are equal if and only if their basis matrices are
/// identical, because reduced row-echelon form is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| vec::unit(field, ambient_dim, i))
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of the given vectors, canonicalized.
    pub fn from_spanning(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
        }
        let mut rows = vectors;
        let pivots = rref(&mut rows);
        Subspace {
            field,
            ambient_dim,
            basis: rows,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Reduces `v` modulo the subspace; the result is zero exactly when
    /// `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (wi, ri) in w.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *wi = wi.sub(&c.mul(ri));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not
    /// a member.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The ambient vector with the given coordinates in the canonical basis.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec::zeros(self.field, self.ambient_dim);
        for (c, row) in coords.iter().zip(&self.basis) {
            vec::axpy(&mut out, c, row);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.field, self.ambient_dim, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_spanning(
            q(),
            3,
            vec![vec::from_i64s(q(), &[1, 1, 0]), vec::from_i64s(q(), &[0, 0, 1])],
        );
        let b = Subspace::from_spanning(
            q(),
            3,
            vec![vec::from_i64s(q(), &[2, 2, 2]), vec::from_i64s(q(), &[0, 0, 5])],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_coords() {
        let s = Subspace::from_spanning(
            q(),
            3,
            vec![vec::from_i64s(q(), &[1, 0, 2]), vec::from_i64s(q(), &[0, 1, -1])],
        );
        let v = vec::from_i64s(q(), &[3, 4, 2]);
        assert!(s.contains(&v));
        let c = s.coords(&v).unwrap();
        assert_eq!(s.lift(&c), v);
        assert!(!s.contains(&vec::from_i64s(q(), &[0, 0, 1])));
        assert!(s.coords(&vec::from_i64s(q(), &[0, 0, 1])).is_none());
    }

    #[test]
    fn zero_and_full() {
        assert_eq!(Subspace::zero(q(), 4).dim(), 0);
        let f = Subspace::full(q(), 4);
        assert_eq!(f.dim(), 4);
        assert!(f.contains(&vec::from_i64s(q(), &[1, 2, 3, 4])));
    }
}
