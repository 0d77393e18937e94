//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! A computation runs over exactly one field. Mixing the two scalar kinds
//! in a single arithmetic operation is a programming error and panics;
//! the CLI layer guards against it when loading files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::Error;

/// The field a computation is carried out over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Arbitrary-precision rationals.
    Q,
    /// Integers modulo `p` (`p` prime).
    Fp(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { val: 1 % p, p: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from(BigInt::from(v))),
            FieldSpec::Fp(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: r, p: *p }
            }
        }
    }

    /// Field characteristic: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Q => 0,
            FieldSpec::Fp(p) => *p,
        }
    }

    /// Parse a scalar from its canonical string form: `a` or `a/b` over Q,
    /// a representative in `[0, p)` over Fp.
    pub fn parse(&self, s: &str) -> Result<Scalar, Error> {
        match self {
            FieldSpec::Q => {
                let r = if let Some((num, den)) = s.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadScalar(s.to_string()))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadScalar(s.to_string()))?;
                    if d.is_zero() {
                        return Err(Error::BadScalar(s.to_string()));
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = s
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadScalar(s.to_string()))?;
                    BigRational::from(n)
                };
                Ok(Scalar::Q(r))
            }
            FieldSpec::Fp(_) => {
                let v: i64 = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadScalar(s.to_string()))?;
                Ok(self.from_i64(v))
            }
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); prime-field values are kept in
/// `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { val: u64, p: u64 },
}

fn modinv(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "element not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % p,
        }
    }

    fn same_field(&self, other: &Scalar) -> FieldSpec {
        let f = self.field();
        assert_eq!(f, other.field(), "mixed scalar kinds in one computation");
        f
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: modinv(*val, *p),
                p: *p,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}
