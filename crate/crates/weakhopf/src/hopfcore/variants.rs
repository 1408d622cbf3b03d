//! Duals, opposites, co-opposites and tensor products of weak bialgebras.

use crate::kernel::{KernelError, LinMap, Scalar, Tensor, MAX_AMBIENT_DIM};

use super::structures::{StructureConstants, WeakBialgebra, WeakHopfAlgebra};
use super::HopfError;

fn dual_constants(sc: &StructureConstants) -> StructureConstants {
    StructureConstants {
        field: sc.field,
        dim: sc.dim,
        // (φψ)(e_k) = (φ⊗ψ)(Δ e_k)
        mult: sc.comult.permute_axes(&[1, 2, 0]),
        unit: sc.counit.clone(),
        // Δ̂(φ)(x⊗y) = φ(xy)
        comult: sc.mult.permute_axes(&[2, 0, 1]),
        counit: sc.unit.clone(),
        antipode: sc.antipode.as_ref().map(LinMap::transpose),
    }
}

/// The dual weak bialgebra on the dual basis.
pub fn dual_wba(h: &WeakBialgebra) -> Result<WeakBialgebra, HopfError> {
    WeakBialgebra::from_constants(&dual_constants(&h.constants()))
}

/// The dual weak Hopf algebra; the dual antipode is the transpose.
pub fn dual_wha(h: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra, HopfError> {
    WeakHopfAlgebra::from_constants(&dual_constants(&h.constants()))
}

/// The opposite, co-opposite and opposite-co-opposite weak Hopf algebras.
///
/// The antipode of `H^op` and of `H_cop` is `S⁻¹`; the antipode of
/// `H^op_cop` is `S` itself.
pub struct OpCopVariants {
    pub op: WeakHopfAlgebra,
    pub cop: WeakHopfAlgebra,
    pub op_cop: WeakHopfAlgebra,
}

pub fn op_cop_variants(h: &WeakHopfAlgebra) -> Result<OpCopVariants, HopfError> {
    let s_inv = h.antipode_inv()?.clone();
    let sc = h.constants();
    let op = WeakHopfAlgebra::from_constants(&StructureConstants {
        mult: sc.mult.permute_axes(&[1, 0, 2]),
        antipode: Some(s_inv.clone()),
        ..sc.clone()
    })?;
    let cop = WeakHopfAlgebra::from_constants(&StructureConstants {
        comult: sc.comult.permute_axes(&[0, 2, 1]),
        antipode: Some(s_inv),
        ..sc.clone()
    })?;
    let op_cop = WeakHopfAlgebra::from_constants(&StructureConstants {
        mult: sc.mult.permute_axes(&[1, 0, 2]),
        comult: sc.comult.permute_axes(&[0, 2, 1]),
        ..sc
    })?;
    Ok(OpCopVariants { op, cop, op_cop })
}

/// Opposite weak bialgebra (no antipode needed).
pub fn wba_opposite(h: &WeakBialgebra) -> Result<WeakBialgebra, HopfError> {
    let sc = h.constants();
    WeakBialgebra::from_constants(&StructureConstants {
        mult: sc.mult.permute_axes(&[1, 0, 2]),
        ..sc
    })
}

fn tensor_constants(
    k1: &StructureConstants,
    k2: &StructureConstants,
) -> Result<StructureConstants, HopfError> {
    if k1.field != k2.field {
        return Err(HopfError::FieldMismatch);
    }
    let (n1, n2) = (k1.dim, k2.dim);
    let n = n1 * n2;
    if n > MAX_AMBIENT_DIM {
        return Err(HopfError::Kernel(KernelError::DimensionCap(
            n,
            MAX_AMBIENT_DIM,
        )));
    }
    let field = k1.field;
    let idx = |i: usize, j: usize| i * n2 + j;
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    let mut comult = Tensor::zeros(field, &[n, n, n]);
    for a1 in 0..n1 {
        for b1 in 0..n1 {
            for c1 in 0..n1 {
                let m1 = k1.mult.get(&[a1, b1, c1]);
                let d1 = k1.comult.get(&[a1, b1, c1]);
                if m1.is_zero() && d1.is_zero() {
                    continue;
                }
                for a2 in 0..n2 {
                    for b2 in 0..n2 {
                        for c2 in 0..n2 {
                            let m2 = k2.mult.get(&[a2, b2, c2]);
                            if !m1.is_zero() && !m2.is_zero() {
                                mult.set(
                                    &[idx(a1, a2), idx(b1, b2), idx(c1, c2)],
                                    m1.mul(m2),
                                );
                            }
                            let d2 = k2.comult.get(&[a2, b2, c2]);
                            if !d1.is_zero() && !d2.is_zero() {
                                comult.set(
                                    &[idx(a1, a2), idx(b1, b2), idx(c1, c2)],
                                    d1.mul(d2),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = crate::kernel::vec::kron(&k1.unit, &k2.unit);
    let counit = crate::kernel::vec::kron(&k1.counit, &k2.counit);
    let antipode = match (&k1.antipode, &k2.antipode) {
        (Some(s1), Some(s2)) => Some(s1.kron(s2)),
        _ => None,
    };
    Ok(StructureConstants {
        field,
        dim: n,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// Componentwise tensor product of weak bialgebras.
pub fn tensor_wba(k1: &WeakBialgebra, k2: &WeakBialgebra) -> Result<WeakBialgebra, HopfError> {
    WeakBialgebra::from_constants(&tensor_constants(&k1.constants(), &k2.constants())?)
}

/// Componentwise tensor product of weak Hopf algebras, `S = S₁ ⊗ S₂`.
pub fn tensor_wha(
    k1: &WeakHopfAlgebra,
    k2: &WeakHopfAlgebra,
) -> Result<WeakHopfAlgebra, HopfError> {
    WeakHopfAlgebra::from_constants(&tensor_constants(&k1.constants(), &k2.constants())?)
}

/// Relabels the structure constants along a basis permutation and compares
/// with `target`: returns true when `perm` carries `source` onto `target`
/// entrywise. `perm[i]` is the target index of source basis vector `i`.
pub fn is_isomorphic_by_relabeling(
    source: &StructureConstants,
    target: &StructureConstants,
    perm: &[usize],
) -> bool {
    if source.dim != target.dim || perm.len() != source.dim {
        return false;
    }
    let n = source.dim;
    let relabel3 = |t: &Tensor| {
        Tensor::from_fn(source.field, &[n, n, n], |idx| {
            t.get(&[perm_inv(perm, idx[0]), perm_inv(perm, idx[1]), perm_inv(perm, idx[2])])
                .clone()
        })
    };
    let relabel1 = |v: &[Scalar]| -> Vec<Scalar> {
        (0..n).map(|i| v[perm_inv(perm, i)].clone()).collect()
    };
    relabel3(&source.mult) == target.mult
        && relabel3(&source.comult) == target.comult
        && relabel1(&source.unit) == target.unit
        && relabel1(&source.counit) == target.counit
}

fn perm_inv(perm: &[usize], i: usize) -> usize {
    perm.iter().position(|&p| p == i).expect("permutation")
}
