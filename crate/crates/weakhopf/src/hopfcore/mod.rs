//! Finite-dimensional algebras, coalgebras, weak bialgebras and weak Hopf
//! algebras as structure-constant bundles.
//!
//! Conventions, fixed once for the whole crate:
//! * `mult[i][j][k]`: coefficient of `e_k` in `e_i e_j`;
//! * `comult[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`;
//! * dual bases pair by coordinates, so `⟨φ, h⟩` is the dot product;
//! * the counital projections are `Π^L(h) = ε(1₍₁₎h) 1₍₂₎` and
//!   `Π^R(h) = 1₍₁₎ ε(h 1₍₂₎)`, with images `H^L` and `H^R`.

mod checks;
mod module;
mod structures;
mod variants;

pub mod arrows;

pub use checks::{check_wba, check_wha};
pub use module::{check_algebra_module, check_comodule, AlgebraModule, Comodule};
pub use structures::{
    AlgebraData, CoalgebraData, StructureConstants, WeakBialgebra, WeakHopfAlgebra,
};
pub use variants::{
    dual_wba, dual_wha, is_isomorphic_by_relabeling, op_cop_variants, tensor_wba, tensor_wha,
    wba_opposite, OpCopVariants,
};

use thiserror::Error;

use crate::kernel::{KernelError, Scalar};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("axiom checks failed:\n{0}")]
    Axioms(Report),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Multiplies two vectors of a tensor-product algebra `A_1 ⊗ … ⊗ A_k`
/// componentwise, with the crate's first-factor-major index convention.
///
/// Works on sparse nonzero lists throughout; structure constants of the
/// gallery instances are overwhelmingly sparse and the dense Kronecker
/// expansion is far too expensive on triple products.
pub(crate) fn product_multi(
    factors: &[&AlgebraData],
    u: &[Scalar],
    v: &[Scalar],
) -> Vec<Scalar> {
    let field = factors[0].field();
    let total: usize = factors.iter().map(|a| a.dim()).product();
    assert_eq!(u.len(), total);
    assert_eq!(v.len(), total);
    let mut out = crate::kernel::vec::zeros(field, total);
    // Per-factor sparse product tables: table[slot][i*dim+j] lists the
    // nonzero (k, coefficient) entries of e_i e_j.
    let tables: Vec<Vec<Vec<(usize, Scalar)>>> = factors
        .iter()
        .map(|a| {
            let n = a.dim();
            let mut t = vec![Vec::new(); n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = a.mult().get(&[i, j, k]);
                        if !c.is_zero() {
                            t[i * n + j].push((k, c.clone()));
                        }
                    }
                }
            }
            t
        })
        .collect();
    let decompose = |mut idx: usize| -> Vec<usize> {
        let mut parts = vec![0usize; factors.len()];
        for (slot, a) in factors.iter().enumerate().rev() {
            parts[slot] = idx % a.dim();
            idx /= a.dim();
        }
        parts
    };
    let u_nz: Vec<(Vec<usize>, &Scalar)> = u
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (decompose(i), c))
        .collect();
    let v_nz: Vec<(Vec<usize>, &Scalar)> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (decompose(i), c))
        .collect();
    let mut terms: Vec<(usize, Scalar)> = Vec::new();
    let mut next: Vec<(usize, Scalar)> = Vec::new();
    for (pu, cu) in &u_nz {
        for (pv, cv) in &v_nz {
            terms.clear();
            terms.push((0, cu.mul(cv)));
            for (slot, a) in factors.iter().enumerate() {
                let n = a.dim();
                let entry = &tables[slot][pu[slot] * n + pv[slot]];
                if entry.is_empty() {
                    terms.clear();
                    break;
                }
                next.clear();
                for (idx, c) in terms.drain(..) {
                    for (k, w) in entry {
                        next.push((idx * n + k, c.mul(w)));
                    }
                }
                std::mem::swap(&mut terms, &mut next);
            }
            for (idx, c) in terms.drain(..) {
                out[idx] = out[idx].add(&c);
            }
        }
    }
    out
}
