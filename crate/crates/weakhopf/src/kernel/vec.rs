//! Helpers for dense coordinate vectors (`Vec<Scalar>`).

use super::{FieldSpec, Scalar};

pub fn zeros(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

/// The `i`-th standard basis vector.
pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn from_i64s(field: FieldSpec, entries: &[i64]) -> Vec<Scalar> {
    entries.iter().map(|&e| Scalar::from_i64(field, e)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(Scalar::neg).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c.mul(x)).collect()
}

/// `dst += c * src`, skipping work when `c` or an entry is zero.
pub fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.add(&c.mul(s));
        }
    }
}

/// Coordinate pairing `Σ a_i b_i`; this is the dual-basis evaluation
/// `⟨φ, h⟩` when one argument holds dual coordinates.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    assert!(!a.is_empty() || !b.is_empty() || true);
    let field = a
        .first()
        .map(Scalar::field)
        .unwrap_or(FieldSpec::Rationals);
    let mut acc = Scalar::zero(field);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

/// Kronecker product with the first factor major: index `i * b.len() + j`.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a
        .first()
        .or(b.first())
        .map(Scalar::field)
        .unwrap_or(FieldSpec::Rationals);
    let mut out = zeros(field, a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x.mul(y);
            }
        }
    }
    out
}
