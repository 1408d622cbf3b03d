//! Sweedler arrows: the canonical actions between a weak bialgebra and its
//! dual, evaluated on coordinate vectors.

use crate::kernel::{vec, Scalar};

use super::structures::WeakBialgebra;

/// `φ ⇀ h = h₍₁₎ ⟨φ, h₍₂₎⟩`, so `(φ ⇀ h)` pairs `φ` with the right leg.
pub fn hit(w: &WeakBialgebra, phi: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
    let n = w.dim();
    let d = w.coalgebra().comult_vec(h);
    let mut out = vec::zeros(w.field(), n);
    for jk in 0..n * n {
        if d[jk].is_zero() {
            continue;
        }
        let (j, k) = (jk / n, jk % n);
        if !phi[k].is_zero() {
            out[j] = out[j].add(&d[jk].mul(&phi[k]));
        }
    }
    out
}

/// `h ↼ φ = ⟨φ, h₍₁₎⟩ h₍₂₎`.
pub fn hit_rev(w: &WeakBialgebra, h: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
    let n = w.dim();
    let d = w.coalgebra().comult_vec(h);
    let mut out = vec::zeros(w.field(), n);
    for jk in 0..n * n {
        if d[jk].is_zero() {
            continue;
        }
        let (j, k) = (jk / n, jk % n);
        if !phi[j].is_zero() {
            out[k] = out[k].add(&d[jk].mul(&phi[j]));
        }
    }
    out
}

/// `h ▷ φ`, the transpose of right multiplication: `(h ▷ φ)(g) = φ(gh)`.
pub fn dual_hit(w: &WeakBialgebra, h: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
    let n = w.dim();
    let mult = w.algebra().mult();
    let mut out = vec::zeros(w.field(), n);
    for (m, pm) in phi.iter().enumerate() {
        if pm.is_zero() {
            continue;
        }
        for j in 0..n {
            for (k, hk) in h.iter().enumerate() {
                if hk.is_zero() {
                    continue;
                }
                let t = mult.get(&[j, k, m]);
                if !t.is_zero() {
                    out[j] = out[j].add(&pm.mul(&t.mul(hk)));
                }
            }
        }
    }
    out
}

/// `φ ◁ h`, the transpose of left multiplication: `(φ ◁ h)(g) = φ(hg)`.
pub fn dual_hit_rev(w: &WeakBialgebra, phi: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
    let n = w.dim();
    let mult = w.algebra().mult();
    let mut out = vec::zeros(w.field(), n);
    for (m, pm) in phi.iter().enumerate() {
        if pm.is_zero() {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            if hj.is_zero() {
                continue;
            }
            for k in 0..n {
                let t = mult.get(&[j, k, m]);
                if !t.is_zero() {
                    out[k] = out[k].add(&pm.mul(&t.mul(hj)));
                }
            }
        }
    }
    out
}
