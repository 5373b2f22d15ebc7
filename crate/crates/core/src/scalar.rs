//! Exact coefficient arithmetic: prime fields F_p and the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient field descriptor. Every ring fixes one of these; scalars are
/// only meaningful relative to a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Prime field of order `p`.
    Fp(u64),
    /// Exact rational numbers.
    Rational,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Fp(DEFAULT_PRIME)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Option<FieldSpec> {
        if is_prime(p) {
            Some(FieldSpec::Fp(p))
        } else {
            None
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Fp(_) => Scalar::Fp(0),
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Fp(_) => Scalar::Fp(1),
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Fp(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::from(BigInt::from(v)))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() - y.as_ref()))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rational, Scalar::Rat(x)) => Scalar::Rat(Box::new(-x.as_ref())),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Fp(p), Scalar::Fp(x)) => Some(Scalar::Fp(mod_inverse(*x, *p))),
            (FieldSpec::Rational, Scalar::Rat(x)) => {
                Some(Scalar::Rat(Box::new(x.as_ref().recip())))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// Extended Euclid, `a` nonzero mod prime `p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    t.rem_euclid(p as i128) as u64
}

/// Element of the active coefficient field in canonical form: `0 <= v < p`
/// for F_p, fully reduced fraction for the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Signed display form used when printing polynomials: F_p elements above
/// p/2 print as their negative lift.
pub fn display_signed(s: &Scalar, field: &FieldSpec) -> (bool, String) {
    match (s, field) {
        (Scalar::Fp(x), FieldSpec::Fp(p)) => {
            if *x > p / 2 {
                (true, format!("{}", p - x))
            } else {
                (false, format!("{x}"))
            }
        }
        (Scalar::Rat(x), _) => {
            if x.is_negative() {
                let a = -x.as_ref();
                if a.denom().is_one() {
                    (true, format!("{}", a.numer()))
                } else {
                    (true, format!("{}/{}", a.numer(), a.denom()))
                }
            } else if x.denom().is_one() {
                (false, format!("{}", x.numer()))
            } else {
                (false, format!("{}/{}", x.numer(), x.denom()))
            }
        }
        _ => (false, format!("{s}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_field_axioms_spot() {
        let f = FieldSpec::Fp(DEFAULT_PRIME);
        let a = f.from_i64(-7);
        assert_eq!(a, Scalar::Fp(DEFAULT_PRIME - 7));
        let b = f.from_i64(9);
        let ab = f.mul(&a, &b);
        assert_eq!(ab, f.from_i64(-63));
        let inv = f.inv(&b).unwrap();
        assert!(f.mul(&b, &inv).is_one());
    }

    #[test]
    fn rational_canonical() {
        let f = FieldSpec::Rational;
        let a = f.from_i64(4);
        let b = f.from_i64(6);
        let q = f.div(&a, &b).unwrap();
        match &q {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(2));
                assert_eq!(r.denom(), &BigInt::from(3));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn primality_guard() {
        assert!(FieldSpec::prime_field(32003).is_some());
        assert!(FieldSpec::prime_field(32001).is_none());
        assert!(FieldSpec::prime_field(2).is_some());
        assert!(FieldSpec::prime_field(1).is_none());
    }
}
