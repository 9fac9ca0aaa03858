//! Exact arithmetic in a real quadratic field `Q(√D)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `a + b·√D` with rational `a`, `b` and a fixed nonnegative discriminant `D`.
///
/// When `D` is a perfect square the irrational part is folded into `a`, so
/// `b = 0` and structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: BigRational,
    b: BigRational,
    disc: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn exact_sqrt(d: &BigInt) -> Option<BigInt> {
    let s = d.sqrt();
    (&s * &s == *d).then_some(s)
}

impl QuadNum {
    /// Panics on a negative discriminant.
    pub fn new(a: BigRational, b: BigRational, disc: impl Into<BigInt>) -> QuadNum {
        let disc = disc.into();
        assert!(!disc.is_negative(), "discriminant must be nonnegative");
        let (a, b) = match exact_sqrt(&disc) {
            Some(root) => (a + b * BigRational::from_integer(root), BigRational::zero()),
            None => (a, b),
        };
        QuadNum { a, b, disc }
    }

    pub fn from_ints(a: i64, b: i64, disc: i64) -> QuadNum {
        QuadNum::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            disc,
        )
    }

    pub fn rational(a: BigRational, disc: impl Into<BigInt>) -> QuadNum {
        QuadNum::new(a, BigRational::zero(), disc)
    }

    pub fn integer(a: impl Into<BigInt>, disc: impl Into<BigInt>) -> QuadNum {
        QuadNum::rational(BigRational::from_integer(a.into()), disc)
    }

    pub fn zero(disc: impl Into<BigInt>) -> QuadNum {
        QuadNum::integer(0, disc)
    }

    pub fn one(disc: impl Into<BigInt>) -> QuadNum {
        QuadNum::integer(1, disc)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The integer value, if this number is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn conjugate(&self) -> QuadNum {
        QuadNum {
            a: self.a.clone(),
            b: -&self.b,
            disc: self.disc.clone(),
        }
    }

    /// `a² − b²D`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.disc.clone())
    }

    fn check(&self, other: &QuadNum) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::MixedDiscriminant(
                self.disc.to_string(),
                other.disc.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &QuadNum) -> Result<QuadNum> {
        self.check(other)?;
        Ok(QuadNum {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            disc: self.disc.clone(),
        })
    }

    pub fn sub(&self, other: &QuadNum) -> Result<QuadNum> {
        self.check(other)?;
        Ok(QuadNum {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            disc: self.disc.clone(),
        })
    }

    pub fn mul(&self, other: &QuadNum) -> Result<QuadNum> {
        self.check(other)?;
        let d = BigRational::from_integer(self.disc.clone());
        Ok(QuadNum {
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &self.b * &other.a,
            disc: self.disc.clone(),
        })
    }

    pub fn recip(&self) -> Result<QuadNum> {
        // nonzero elements have nonzero norm since √D is irrational or folded
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadNum {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            disc: self.disc.clone(),
        })
    }

    pub fn div(&self, other: &QuadNum) -> Result<QuadNum> {
        self.check(other)?;
        self.mul(&other.recip()?)
    }

    pub fn scale(&self, k: &BigRational) -> QuadNum {
        QuadNum {
            a: &self.a * k,
            b: &self.b * k,
            disc: self.disc.clone(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> QuadNum {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn neg(&self) -> QuadNum {
        self.scale_int(&BigInt::from(-1))
    }

    /// `self^k`; negative powers require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<QuadNum> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = QuadNum::one(self.disc.clone());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Exact sign using rational comparisons only.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of(&self.a);
        let sb = Sign::of(&self.b);
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.disc.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Sign::Zero,
        }
    }

    pub fn cmp_value(&self, other: &QuadNum) -> Result<Ordering> {
        Ok(match self.sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// Floating approximation for display and plotting only.
    pub(crate) fn approx_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.disc.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

pub fn quad_arith(x: &QuadNum, y: &QuadNum, op: QuadOp) -> Result<QuadNum> {
    match op {
        QuadOp::Add => x.add(y),
        QuadOp::Sub => x.sub(y),
        QuadOp::Mul => x.mul(y),
        QuadOp::Div => x.div(y),
    }
}

pub fn sign(x: &QuadNum) -> Sign {
    x.sign()
}

/// Discriminant `n² − 4n` of the characteristic polynomial `λ² − (n−2)λ + 1`.
pub fn discriminant(n: i64) -> BigInt {
    BigInt::from(n) * BigInt::from(n) - BigInt::from(4 * n)
}

/// Larger root `(n − 2 + √(n² − 4n)) / 2` of `λ² − (n−2)λ + 1`.
pub fn mu(n: i64) -> Result<QuadNum> {
    if n < 4 {
        return Err(Error::unsupported(n));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(QuadNum::new(
        BigRational::from_integer(BigInt::from(n - 2)) * &half,
        half,
        discriminant(n),
    ))
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sqrt = format!("√{}", self.disc);
        let b_abs = self.b.abs();
        let irr = if b_abs.is_one() {
            sqrt
        } else {
            format!("{}·{}", b_abs, sqrt)
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{irr}"),
            (true, true) => write!(f, "-{irr}"),
            (false, false) => write!(f, "{} + {irr}", self.a),
            (false, true) => write!(f, "{} - {irr}", self.a),
        }
    }
}
