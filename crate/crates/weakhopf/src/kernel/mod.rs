//! Exact scalar arithmetic and dense linear and multilinear algebra over
//! the rationals or a prime field.
//!
//! Everything downstream (bialgebra axioms, smash products, doubles,
//! integral spaces) reduces to identities between structure-constant
//! tensors, so this module is deliberately small and exact: no floats,
//! canonical reduced-row-echelon subspaces, dense tensors only.
//!
//! Product-space convention used throughout the crate: the Kronecker index
//! of `x ⊗ y` with `x` in a space of dimension `dx` and `y` of dimension
//! `dy` is `x * dy + y` (first factor major).

mod field;
mod linmap;
mod solve;
mod subspace;
mod tensor;
pub mod vec;

pub use field::{FieldSpec, Scalar};
pub use linmap::LinMap;
pub use solve::{kernel_of, image_of, quotient, solve_linear_system, AffineSolution};
pub use subspace::{rref, Subspace};
pub use tensor::Tensor;

use thiserror::Error;

/// Cap on the dimension of ambient product spaces (for example `H ⊗ Ĥ`).
pub const MAX_AMBIENT_DIM: usize = 4096;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch: {lhs} vs {rhs}")]
    FieldMismatch { lhs: FieldSpec, rhs: FieldSpec },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a scalar")]
    Parse(String),
    #[error("ambient dimension {0} exceeds the cap {1}")]
    DimensionCap(usize, usize),
}

/// Iterates over all multi-indices of a dense shape in row-major order.
pub(crate) fn each_index(shape: &[usize], mut f: impl FnMut(&[usize])) {
    if shape.contains(&0) {
        return;
    }
    let mut idx = vec![0usize; shape.len()];
    loop {
        f(&idx);
        let mut axis = shape.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < shape[axis] {
                break;
            }
            idx[axis] = 0;
        }
    }
}
