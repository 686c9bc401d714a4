//! Exact coefficients: arbitrary-precision rationals and prime-field residues.
//!
//! Rationals keep a machine-word fast path and fall back to big integers when
//! an operation would overflow. The representation is canonical: a value is
//! stored as `Small` exactly when numerator and denominator fit the small
//! range, so derived equality and hashing are value equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field with the given modulus (a prime below 2^32).
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not a prime below 2^32"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("qq") || t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("fp:"))
            .or_else(|| t.strip_prefix("ZZ/"))
            .ok_or_else(|| {
                Error::InvalidField(format!(
                    "unrecognised field `{s}` (expected QQ or Fp:<prime>)"
                ))
            })?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus in `{s}`")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

const SMALL_BOUND: i64 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    pub fn from_integer(n: i64) -> Rational {
        Rational::from_small(Ratio::from_integer(n))
    }

    fn from_small(r: Ratio<i64>) -> Rational {
        if r.numer().unsigned_abs() < SMALL_BOUND as u64 && *r.denom() < SMALL_BOUND {
            Rational::Small(r)
        } else {
            Rational::Big(BigRational::new_raw(
                BigInt::from(*r.numer()),
                BigInt::from(*r.denom()),
            ))
        }
    }

    fn from_big(r: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n.unsigned_abs() < SMALL_BOUND as u64 && d < SMALL_BOUND {
                return Rational::Small(Ratio::new_raw(n, d));
            }
        }
        Rational::Big(r)
    }

    pub fn from_bigint(n: BigInt) -> Rational {
        Rational::from_big(BigRational::from_integer(n))
    }

    pub fn new(numer: BigInt, denom: BigInt) -> Option<Rational> {
        if denom.is_zero() {
            return None;
        }
        Some(Rational::from_big(BigRational::new(numer, denom)))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => {
                BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
            }
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.numer()),
            Rational::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.denom()),
            Rational::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_one(),
            Rational::Big(_) => false,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_negative(),
            Rational::Big(r) => r.is_negative(),
        }
    }

    fn binop(
        &self,
        other: &Rational,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Rational {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(r) = small(a, b) {
                return Rational::from_small(r);
            }
        }
        Rational::from_big(big(self.to_big(), other.to_big()))
    }

    pub fn add(&self, other: &Rational) -> Rational {
        self.binop(other, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        self.binop(other, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        self.binop(other, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Rational) -> Rational {
        assert!(!other.is_zero(), "rational division by zero");
        self.binop(other, |a, b| a.checked_div(b), |a, b| a / b)
    }

    pub fn neg(&self) -> Rational {
        match self {
            Rational::Small(r) => Rational::Small(-r),
            Rational::Big(r) => Rational::from_big(-r),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) => write!(f, "{r}"),
            Rational::Big(r) => write!(f, "{r}"),
        }
    }
}

/// An exact field element.
///
/// Prime-field residues carry their modulus so arithmetic is self-contained;
/// mixing elements of different fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(0, field)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(1, field)
    }

    pub fn from_i64(n: i64, field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(Rational::from_integer(n)),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Maps an exact rational into `field`. Fails when the denominator vanishes mod p.
    pub fn from_rational(r: &Rational, field: Field) -> Option<Scalar> {
        match field {
            Field::Rational => Some(Scalar::Rational(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64()?;
                let d = r.denom().mod_floor(&pb).to_u64()?;
                if d == 0 {
                    return None;
                }
                let num = Scalar::Prime {
                    value: n,
                    modulus: p,
                };
                Some(num.div(&Scalar::Prime {
                    value: d,
                    modulus: p,
                }))
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Sign used for presentation only: rationals below zero are "negative";
    /// prime-field residues never are.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Prime {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Prime {
                    value: (a * b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(Rational::from_integer(1).div(a)),
            Scalar::Prime { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                let (g, x, _) = ext_gcd(*value as i128, *modulus as i128);
                debug_assert_eq!(g, 1);
                Scalar::Prime {
                    value: x.rem_euclid(*modulus as i128) as u64,
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.div(b)),
            _ => self.mul(&other.inv()),
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
