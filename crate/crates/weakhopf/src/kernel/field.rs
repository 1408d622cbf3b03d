//! The base field: exact rationals or a prime field `F_p` with `p < 2^31`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::KernelError;

/// Which exact field scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The field of rational numbers.
    Rationals,
    /// The prime field of the given order.
    Prime(u32),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Prime field constructor; the order is checked by trial division.
    pub fn prime(p: u64) -> Result<Self, KernelError> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(KernelError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::from_i64(*self, v)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (enforced
/// by the representation), prime-field residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, r: u32 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { p, r: 0 },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { p, r: 1 % p },
        }
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let m = p as i64;
                Scalar::Fp {
                    p,
                    r: v.rem_euclid(m) as u32,
                }
            }
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Fp { p, r } => *r == 1 % *p,
        }
    }

    fn check_same(&self, other: &Scalar) -> (FieldSpec, FieldSpec) {
        let (a, b) = (self.field(), other.field());
        assert!(a == b, "scalar field mismatch: {a} vs {b}");
        (a, b)
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                p: *p,
                r: ((*a as u64 + *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, r } => Scalar::Fp {
                p: *p,
                r: if *r == 0 { 0 } else { p - r },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                p: *p,
                r: ((*a as u64 * *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, r } => Scalar::Fp {
                p: *p,
                r: mod_inverse(*r as i64, *p as i64) as u32,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Parses the canonical string form: `"n"` or `"n/d"` over the
    /// rationals, a decimal residue over a prime field (negatives and
    /// values above `p` are reduced).
    pub fn parse(field: FieldSpec, s: &str) -> Result<Scalar, KernelError> {
        let s = s.trim();
        let bad = || KernelError::Parse(s.to_string());
        match field {
            FieldSpec::Rationals => {
                if let Some((n, d)) = s.split_once('/') {
                    let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                    let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                    if den.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(num, den)))
                } else {
                    let num = BigInt::from_str(s).map_err(|_| bad())?;
                    Ok(Scalar::Rat(BigRational::from(num)))
                }
            }
            FieldSpec::Prime(p) => {
                let v = BigInt::from_str(s).map_err(|_| bad())?;
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                let digits = r.to_u32_digits().1;
                Ok(Scalar::Fp {
                    p,
                    r: digits.first().copied().unwrap_or(0),
                })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else if a.is_negative() && a.denom().is_negative() {
                    // BigRational keeps the denominator positive, so this
                    // branch never fires; it documents the invariant.
                    unreachable!()
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

/// Inverse of `a` modulo prime `m` by the extended Euclidean algorithm.
fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r.abs(), 1, "inverse of non-unit residue");
    (old_s * old_r.signum()).rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_constructor_rejects_composites() {
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
    }

    #[test]
    fn rational_display_lowest_terms() {
        let x = Scalar::from_ratio(2, 4);
        assert_eq!(x.to_string(), "1/2");
        let y = Scalar::from_ratio(-3, -6);
        assert_eq!(y.to_string(), "1/2");
        let z = Scalar::from_ratio(3, -6);
        assert_eq!(z.to_string(), "-1/2");
        assert_eq!(Scalar::from_i64(FieldSpec::Rationals, 5).to_string(), "5");
    }

    #[test]
    fn parse_round_trip() {
        let q = FieldSpec::Rationals;
        for s in ["0", "-7", "22/7", "-1/3"] {
            let x = Scalar::parse(q, s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse(f7, "-1").unwrap().to_string(), "6");
        assert_eq!(Scalar::parse(f7, "15").unwrap().to_string(), "1");
        assert!(Scalar::parse(q, "1/0").is_err());
        assert!(Scalar::parse(q, "x").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = Scalar::from_i64(f7, v);
            let i = x.inv().unwrap();
            assert!(x.mul(&i).is_one());
        }
        assert!(Scalar::zero(f7).inv().is_none());
    }
}
