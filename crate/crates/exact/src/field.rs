use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ExactError;

/// A scalar value. Rationals are stored in lowest terms (the `Ratio`
/// constructor normalizes); prime-field residues are stored as integer
/// ratios with denominator 1 and numerator in `[0, p)`.
pub type Rational = BigRational;

/// The ground field: the rationals, or the integers modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Builds a field from its characteristic: 0 for the rationals, a prime otherwise.
    pub fn from_characteristic(c: u64) -> Result<Self, ExactError> {
        if c == 0 {
            Ok(FieldSpec::Rationals)
        } else if is_prime(c) {
            Ok(FieldSpec::Prime(c))
        } else {
            Err(ExactError::BadCharacteristic(c))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Rational {
        Rational::zero()
    }

    pub fn one(&self) -> Rational {
        Rational::one()
    }

    pub fn integer(&self, n: i64) -> Rational {
        self.reduce(Rational::from(BigInt::from(n)))
    }

    /// Brings a raw rational into canonical form for this field.
    /// For the rationals this is a no-op (`Ratio` is always reduced);
    /// for a prime field the value must be integral and is reduced mod p.
    pub fn reduce(&self, x: Rational) -> Rational {
        match self {
            FieldSpec::Rationals => x,
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                debug_assert!(x.denom().is_one(), "prime-field scalar with denominator");
                let mut n = x.numer() % &p;
                if n.is_negative() {
                    n += &p;
                }
                Rational::from(n)
            }
        }
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        match self {
            FieldSpec::Rationals => a + b,
            FieldSpec::Prime(_) => self.reduce(a + b),
        }
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        match self {
            FieldSpec::Rationals => a - b,
            FieldSpec::Prime(_) => self.reduce(a - b),
        }
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        match self {
            FieldSpec::Rationals => a * b,
            FieldSpec::Prime(_) => self.reduce(a * b),
        }
    }

    pub fn neg(&self, a: &Rational) -> Rational {
        match self {
            FieldSpec::Rationals => -a,
            FieldSpec::Prime(_) => self.reduce(-a),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::Prime(p) => {
                // extended Euclid on the residue
                let p = BigInt::from(*p);
                let mut r0 = p.clone();
                let mut r1 = a.numer().clone();
                let mut t0 = BigInt::zero();
                let mut t1 = BigInt::one();
                while !r1.is_zero() {
                    let q = &r0 / &r1;
                    let r = &r0 - &q * &r1;
                    r0 = std::mem::replace(&mut r1, r);
                    let t = &t0 - &q * &t1;
                    t0 = std::mem::replace(&mut t1, t);
                }
                debug_assert!(r0.is_one());
                Some(self.reduce(Rational::from(t0)))
            }
        }
    }

    pub fn div(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// Canonical string form: lowest-terms `a/b` (plain `a` when `b = 1`) over the
/// rationals, decimal residues over a prime field.
pub fn format_scalar(field: &FieldSpec, x: &Rational) -> String {
    match field {
        FieldSpec::Rationals => {
            if x.denom().is_one() {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        }
        FieldSpec::Prime(_) => x.numer().to_string(),
    }
}

/// Parses a canonical scalar string, rejecting every non-canonical spelling
/// (unreduced fractions, negative or out-of-range residues, leading zeros,
/// explicit `/1` denominators, "-0").
pub fn parse_scalar(field: &FieldSpec, s: &str) -> Result<Rational, ExactError> {
    let bad = |why: &str| ExactError::NonCanonicalScalar(s.to_string(), why.to_string());
    let parse_int = |t: &str| -> Result<BigInt, ExactError> {
        let (neg, digits) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("not an integer"));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(bad("leading zeros"));
        }
        let mag: BigInt = digits.parse().expect("digits");
        if neg && mag.is_zero() {
            return Err(bad("negative zero"));
        }
        Ok(if neg { -mag } else { mag })
    };
    match field {
        FieldSpec::Rationals => {
            let value = match s.split_once('/') {
                None => Rational::from(parse_int(s)?),
                Some((n, d)) => {
                    let numer = parse_int(n)?;
                    let denom = parse_int(d)?;
                    if denom.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    if denom.is_negative() {
                        return Err(bad("negative denominator"));
                    }
                    if denom.is_one() {
                        return Err(bad("denominator 1 must be omitted"));
                    }
                    if !num_integer::Integer::gcd(&numer, &denom).is_one() {
                        return Err(bad("not in lowest terms"));
                    }
                    Rational::new_raw(numer, denom)
                }
            };
            Ok(value)
        }
        FieldSpec::Prime(p) => {
            let n = parse_int(s)?;
            if n.is_negative() {
                return Err(bad("negative residue"));
            }
            if n >= BigInt::from(*p) {
                return Err(bad("residue not reduced mod p"));
            }
            Ok(Rational::from(n))
        }
    }
}
