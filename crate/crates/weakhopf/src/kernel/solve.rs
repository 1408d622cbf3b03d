//! Kernels, images, quotients and affine linear-system solving.

use super::subspace::rref;
use super::{vec, KernelError, LinMap, Scalar, Subspace};

/// The null space `{v : f(v) = 0}` as a canonical subspace.
pub fn kernel_of(f: &LinMap) -> Subspace {
    let field = f.field();
    let dom = f.domain_dim();
    let mut rows = f.rows();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..dom).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec::zeros(field, dom);
        v[fc] = Scalar::one(field);
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = row[fc].neg();
        }
        basis.push(v);
    }
    Subspace::from_spanning(field, dom, basis)
}

/// The column space of `f` as a canonical subspace of the codomain.
pub fn image_of(f: &LinMap) -> Subspace {
    Subspace::from_spanning(f.field(), f.codomain_dim(), f.columns())
}

/// Quotient of a based space by a subspace of relations.
///
/// Returns `(projection, section)` with `projection ∘ section = id` on the
/// quotient and `kernel(projection) = relations`. The quotient basis is
/// indexed by the non-pivot coordinates of the relation matrix.
pub fn quotient(relations: &Subspace) -> (LinMap, LinMap) {
    let field = relations.field();
    let n = relations.ambient_dim();
    let pivots = relations.pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let section = LinMap::from_images(
        field,
        n,
        &free.iter().map(|&c| vec::unit(field, n, c)).collect::<Vec<_>>(),
    );
    let projection = LinMap::from_fn(field, q, n, |k, j| {
        if j == free[k] {
            Scalar::one(field)
        } else if let Some(i) = pivots.iter().position(|&p| p == j) {
            relations.basis()[i][free[k]].neg()
        } else {
            Scalar::zero(field)
        }
    });
    (projection, section)
}

/// An affine solution set: one particular solution plus the homogeneous
/// kernel.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub homogeneous: Subspace,
}

/// Solves the stacked system `constraints[i] · x = rhs[i]` exactly.
///
/// Every returned solution is re-verified by substitution. Returns
/// [`KernelError::Inconsistent`] when no solution exists, which is
/// distinct from a solution set with zero homogeneous part.
pub fn solve_linear_system(
    constraints: &[LinMap],
    rhs: &[Vec<Scalar>],
) -> Result<AffineSolution, KernelError> {
    assert_eq!(constraints.len(), rhs.len(), "constraint/rhs count mismatch");
    assert!(!constraints.is_empty(), "empty system");
    let field = constraints[0].field();
    let dom = constraints[0].domain_dim();
    let mut aug: Vec<Vec<Scalar>> = Vec::new();
    for (c, b) in constraints.iter().zip(rhs) {
        if c.domain_dim() != dom {
            return Err(KernelError::ShapeMismatch(format!(
                "constraint domain {} vs {}",
                c.domain_dim(),
                dom
            )));
        }
        if b.len() != c.codomain_dim() {
            return Err(KernelError::ShapeMismatch(format!(
                "rhs length {} vs codomain {}",
                b.len(),
                c.codomain_dim()
            )));
        }
        for (mut row, bi) in c.rows().into_iter().zip(b.iter()) {
            row.push(bi.clone());
            aug.push(row);
        }
    }
    let pivots = rref(&mut aug);
    if pivots.contains(&dom) {
        return Err(KernelError::Inconsistent);
    }
    let mut particular = vec::zeros(field, dom);
    for (row, &p) in aug.iter().zip(&pivots) {
        particular[p] = row[dom].clone();
    }
    let free: Vec<usize> = (0..dom).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec::zeros(field, dom);
        v[fc] = Scalar::one(field);
        for (row, &p) in aug.iter().zip(&pivots) {
            v[p] = row[fc].neg();
        }
        basis.push(v);
    }
    let homogeneous = Subspace::from_spanning(field, dom, basis);
    // Solver self-check by substitution.
    for (c, b) in constraints.iter().zip(rhs) {
        assert_eq!(&c.apply(&particular), b, "particular solution failed substitution");
        for h in homogeneous.basis() {
            assert!(vec::is_zero(&c.apply(h)), "homogeneous solution failed substitution");
        }
    }
    Ok(AffineSolution {
        particular,
        homogeneous,
    })
}
