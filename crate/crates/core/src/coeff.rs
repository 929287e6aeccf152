//! Exact coefficient domains and their element arithmetic.
//!
//! Four domains are supported: the integers, the rationals, prime fields
//! `F_p` and truncations `Z/p^N`. Elements of the last three are kept in
//! canonical form (lowest terms, representative in `[0, p)` resp. `[0, p^N)`)
//! so equality is structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// One of the supported exact coefficient domains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    IntegerZ,
    RationalQ,
    PrimeField(u64),
    /// `Z/p^N` with representatives in `[0, p^N)`.
    TruncatedPadic(u64, u32),
}

impl CoefficientDomain {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(CoefficientDomain::PrimeField(p))
    }

    pub fn truncated_padic(p: u64, n: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Domain("truncation exponent must be >= 1".into()));
        }
        Ok(CoefficientDomain::TruncatedPadic(p, n))
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            CoefficientDomain::RationalQ | CoefficientDomain::PrimeField(_)
        )
    }

    pub fn characteristic_prime(&self) -> Option<u64> {
        match self {
            CoefficientDomain::PrimeField(p) | CoefficientDomain::TruncatedPadic(p, _) => Some(*p),
            _ => None,
        }
    }

    /// Modulus for the residue domains.
    fn modulus(&self) -> Option<BigInt> {
        match self {
            CoefficientDomain::PrimeField(p) => Some(BigInt::from(*p)),
            CoefficientDomain::TruncatedPadic(p, n) => Some(BigInt::from(*p).pow(*n)),
            _ => None,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientDomain::RationalQ => Coeff::Rat(BigRational::zero()),
            _ => Coeff::Int(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientDomain::RationalQ => Coeff::Rat(BigRational::one()),
            _ => Coeff::Int(BigInt::one()),
        }
    }

    pub fn from_int(&self, n: BigInt) -> Coeff {
        match self {
            CoefficientDomain::RationalQ => Coeff::Rat(BigRational::from_integer(n)),
            _ => self.canon(Coeff::Int(n)),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_int(BigInt::from(n))
    }

    /// Bring a raw element into canonical form for this domain.
    pub fn canon(&self, c: Coeff) -> Coeff {
        match (self.modulus(), c) {
            (Some(m), Coeff::Int(v)) => Coeff::Int(v.mod_floor(&m)),
            (_, c) => c,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => self.canon(Coeff::Int(x + y)),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("mixed coefficient representations"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Int(x) => self.canon(Coeff::Int(-x)),
            Coeff::Rat(x) => Coeff::Rat(-x),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => self.canon(Coeff::Int(x * y)),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("mixed coefficient representations"),
        }
    }

    /// Multiplicative inverse; only defined over fields.
    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        match (self, a) {
            (CoefficientDomain::RationalQ, Coeff::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::Domain("division by zero".into()))
                } else {
                    Ok(Coeff::Rat(x.recip()))
                }
            }
            (CoefficientDomain::PrimeField(p), Coeff::Int(x)) => {
                let m = BigInt::from(*p);
                let e = x.extended_gcd(&m);
                if !e.gcd.is_one() {
                    return Err(Error::Domain("division by zero in F_p".into()));
                }
                Ok(self.canon(Coeff::Int(e.x)))
            }
            _ => Err(Error::Domain(format!("no division in {self:?}"))),
        }
    }

    /// Exact division; fails over Z when the quotient is not integral.
    pub fn div_exact(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        match self {
            CoefficientDomain::IntegerZ => match (a, b) {
                (Coeff::Int(x), Coeff::Int(y)) => {
                    if y.is_zero() {
                        return Err(Error::Domain("division by zero".into()));
                    }
                    let (q, r) = x.div_rem(y);
                    if r.is_zero() {
                        Ok(Coeff::Int(q))
                    } else {
                        Err(Error::Domain(format!("{x} not divisible by {y}")))
                    }
                }
                _ => panic!("mixed coefficient representations"),
            },
            _ => {
                let inv = self.inv(b)?;
                Ok(self.mul(a, &inv))
            }
        }
    }

    /// True when `a` divides `b` inside this domain.
    pub fn divides(&self, a: &Coeff, b: &Coeff) -> bool {
        match self {
            CoefficientDomain::IntegerZ => match (a, b) {
                (Coeff::Int(x), Coeff::Int(y)) => !x.is_zero() && y.mod_floor(x).is_zero(),
                _ => false,
            },
            _ => !self.is_zero_el(a),
        }
    }

    pub fn is_zero_el(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one_el(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_one(),
            Coeff::Rat(x) => x.is_one(),
        }
    }

    /// Map an element of this domain into `target`, when the passage is exact.
    pub fn reduce_into(&self, a: &Coeff, target: &CoefficientDomain) -> Result<Coeff> {
        match (self, target, a) {
            (x, y, _) if x == y => Ok(a.clone()),
            (CoefficientDomain::IntegerZ, CoefficientDomain::RationalQ, Coeff::Int(v)) => {
                Ok(Coeff::Rat(BigRational::from_integer(v.clone())))
            }
            (CoefficientDomain::IntegerZ, t, Coeff::Int(v)) if t.modulus().is_some() => {
                Ok(t.canon(Coeff::Int(v.clone())))
            }
            (CoefficientDomain::RationalQ, t, Coeff::Rat(v)) if t.modulus().is_some() => {
                let m = t.modulus().unwrap();
                let denom = v.denom();
                if denom.gcd(&m).is_one() {
                    let e = denom.extended_gcd(&m);
                    Ok(t.canon(Coeff::Int(v.numer() * e.x)))
                } else {
                    Err(Error::Domain(format!(
                        "denominator {denom} is not invertible modulo {m}"
                    )))
                }
            }
            (CoefficientDomain::RationalQ, CoefficientDomain::IntegerZ, Coeff::Rat(v)) => {
                if v.denom().is_one() {
                    Ok(Coeff::Int(v.numer().clone()))
                } else {
                    Err(Error::Domain(format!("{v} is not an integer")))
                }
            }
            (CoefficientDomain::TruncatedPadic(p, n), CoefficientDomain::PrimeField(q), _)
                if p == q =>
            {
                let _ = n;
                Ok(target.canon(a.clone()))
            }
            _ => Err(Error::Domain(format!(
                "no coefficient reduction {self:?} -> {target:?}"
            ))),
        }
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::IntegerZ => write!(f, "ZZ"),
            CoefficientDomain::RationalQ => write!(f, "QQ"),
            CoefficientDomain::PrimeField(p) => write!(f, "F{p}"),
            CoefficientDomain::TruncatedPadic(p, n) => write!(f, "Z/{p}^{n}"),
        }
    }
}

/// An element of one of the coefficient domains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
}

impl Coeff {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Coeff::Int(v) => Some(v),
            Coeff::Rat(_) => None,
        }
    }

    pub fn as_rat(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(v) => Some(v),
            Coeff::Int(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_negative(),
            Coeff::Rat(v) => v.is_negative(),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(v) => write!(f, "{v}"),
            Coeff::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}
