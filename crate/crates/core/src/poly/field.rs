//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element. Modular elements carry their prime so that arithmetic
/// needs no external context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular { value: u32, prime: u32 },
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Field {
    /// The default fast prime used for random constructions.
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn prime(p: u32) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Modular {
                value: n.rem_euclid(p as i64) as u32,
                prime: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n % BigInt::from(p);
                let r = if r.is_negative() {
                    r + BigInt::from(p)
                } else {
                    r
                };
                Coeff::Modular {
                    value: r.to_u32().expect("residue fits"),
                    prime: p,
                }
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.from_bigint(num).mul(&d.inv()))
    }

    /// A uniformly random element; over the rationals a small integer.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        match *self {
            Field::Rationals => self.from_i64(rng.gen_range(-9..=9)),
            Field::Prime(p) => Coeff::Modular {
                value: rng.gen_range(0..p),
                prime: p,
            },
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        loop {
            let c = self.random(rng);
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Field::Rationals => "QQ".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn parse_tag(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "QQ" {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime in {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!("unknown field tag {s:?}")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rationals,
            Coeff::Modular { prime, .. } => Field::Prime(*prime),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Modular { value: a, prime }, Coeff::Modular { value: b, .. }) => {
                let s = *a as u64 + *b as u64;
                Coeff::Modular {
                    value: (s % *prime as u64) as u32,
                    prime: *prime,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Modular { value, prime } => Coeff::Modular {
                value: if *value == 0 { 0 } else { prime - value },
                prime: *prime,
            },
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Modular { value: a, prime }, Coeff::Modular { value: b, .. }) => {
                Coeff::Modular {
                    value: (*a as u64 * *b as u64 % *prime as u64) as u32,
                    prime: *prime,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Rational(a) => Coeff::Rational(a.recip()),
            Coeff::Modular { value, prime } => Coeff::Modular {
                value: mod_pow(*value as u64, *prime as u64 - 2, *prime as u64) as u32,
                prime: *prime,
            },
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Sign used by the printer: modular values are shown in the symmetric
    /// range `(-p/2, p/2]`.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(a) => a.is_negative(),
            Coeff::Modular { value, prime } => *value > prime / 2,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Modular { value, prime } => {
                if *value > prime / 2 {
                    write!(f, "-{}", prime - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}
