//! Exact one-variable rational functions and the Hilbert and Poincaré
//! series built from them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::charge::Charge;
use crate::error::{Error, Result};
use crate::kbundle;
use crate::koszul;

/// Integer polynomial in `t`, coefficients in ascending powers, no trailing
/// zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Coefficients", into = "Coefficients")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct Coefficients(#[serde(with = "crate::json::bigint_vec")] Vec<BigInt>);

impl From<Coefficients> for IntPolynomial {
    fn from(c: Coefficients) -> Self {
        IntPolynomial::new(c.0)
    }
}

impl From<IntPolynomial> for Coefficients {
    fn from(p: IntPolynomial) -> Self {
        Coefficients(p.coeffs)
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c·t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, k: u32) -> IntPolynomial {
        (0..k).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(−t)`.
    pub fn reflect(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn divide_content(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let c = self.content();
        let p = self.divide_content(&c);
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Remainder of `lc(b)^k · self` by `b`, up to a nonzero constant.
    fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().clone();
        let mut a = self.clone();
        while let Some(da) = a.degree() {
            if da < db {
                break;
            }
            let la = a.leading().clone();
            let shifted = b.mul(&IntPolynomial::monomial(la, da - db));
            a = a.scale(&lb).sub(&shifted);
            a = a.primitive_keep_sign();
        }
        a
    }

    fn primitive_keep_sign(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        self.divide_content(&self.content())
    }

    /// Primitive gcd with positive leading coefficient.
    fn gcd_primitive(&self, other: &IntPolynomial) -> IntPolynomial {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient by `d`, which must divide `self` in `Z[t]`.
    fn exact_div(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return IntPolynomial::zero();
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(d.leading());
            assert!(r.is_zero(), "inexact polynomial division");
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPolynomial::new(quot)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, k: usize) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    match (first, c.is_negative()) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, _) => write!(f, " {sign} ")?,
    }
    let a = c.abs();
    let var = match k {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{k}"),
    };
    if k == 0 || !a.is_one() {
        write!(f, "{a}")?;
    }
    write!(f, "{var}")
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            fmt_term(f, first, c, k)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Quotient of integer polynomials in canonical form: no common factor,
/// coprime contents, lowest nonzero denominator coefficient positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFraction", into = "RawFraction")]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

#[derive(Serialize, Deserialize)]
struct RawFraction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl TryFrom<RawFraction> for RationalFunction {
    type Error = Error;

    fn try_from(raw: RawFraction) -> Result<Self> {
        RationalFunction::new(raw.numerator, raw.denominator)
    }
}

impl From<RationalFunction> for RawFraction {
    fn from(x: RationalFunction) -> Self {
        RawFraction {
            numerator: x.num,
            denominator: x.den,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd_primitive(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let c = num.content().gcd(&den.content());
        let (mut num, mut den) = (num.divide_content(&c), den.divide_content(&c));
        let low = den.order().expect("nonzero denominator");
        if den.coeffs[low].is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalFunction::new(p, IntPolynomial::one()).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// `x(−t)`.
    pub fn reflect(&self) -> RationalFunction {
        RationalFunction::new(self.num.reflect(), self.den.reflect()).expect("nonzero denominator")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

pub fn rf_arith(x: &RationalFunction, y: &RationalFunction, op: RfOp) -> Result<RationalFunction> {
    match op {
        RfOp::Add => Ok(x.add(y)),
        RfOp::Sub => Ok(x.sub(y)),
        RfOp::Mul => Ok(x.mul(y)),
        RfOp::Div => x.div(y),
    }
}

/// Taylor coefficients of `x` at `t = 0` up to `t^n_max`.
pub fn series_coeffs(x: &RationalFunction, n_max: usize) -> Result<Vec<BigInt>> {
    let d0 = x.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtZero);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let mut acc = x.num.coeff(k);
        for i in 1..=k.min(x.den.coeffs.len().saturating_sub(1)) {
            acc -= &x.den.coeffs[i] * &out[k - i];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NonIntegralCoefficient(k));
        }
        out.push(q);
    }
    Ok(out)
}

fn rf(num: IntPolynomial, den: IntPolynomial) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `1 − t^k`.
fn one_minus(k: usize) -> IntPolynomial {
    IntPolynomial::one().sub(&IntPolynomial::monomial(1, k))
}

/// Hilbert series of the coordinate ring.
pub fn hilbert_r(n: i64) -> Result<RationalFunction> {
    match n {
        1 => Ok(rf(
            one_minus(6),
            one_minus(1).mul(&one_minus(2)).mul(&one_minus(3)),
        )),
        2 => Ok(rf(one_minus(4), one_minus(1).pow(2).mul(&one_minus(2)))),
        n if n >= 4 => Ok(rf(
            IntPolynomial::from_i64s(&[1, n - 2, 1]),
            one_minus(1).pow(2),
        )),
        n => Err(Error::unsupported(n)),
    }
}

/// `(s_0, s_{−1})` of a charge whose generic bundle is Koszul.
fn koszul_seeds(n: i64, z: &Charge) -> Result<(BigInt, BigInt)> {
    let desc = koszul::koszul_descriptor(n, z)?;
    let seq = desc.sequence();
    Ok((kbundle::s_value(seq, 0), kbundle::s_value(seq, -1)))
}

/// `S(t) = Σ β_{i,i} t^i = −(s_0 + (s_{−1} − (n−2)s_0)t) / (t² − (n−2)t + 1)`.
pub fn poincare_koszul(n: i64, z: &Charge) -> Result<RationalFunction> {
    let (s0, sm1) = koszul_seeds(n, z)?;
    let lin = &sm1 - BigInt::from(n - 2) * &s0;
    Ok(rf(
        IntPolynomial::new(vec![-s0, -lin]),
        IntPolynomial::from_i64s(&[1, -(n - 2), 1]),
    ))
}

/// `H_M(t) = (q + (pn − q)t) / (1 − t)²`.
pub fn hilbert_koszul_module(n: i64, z: &Charge) -> Result<RationalFunction> {
    koszul_seeds(n, z)?;
    let q = z.degree.clone();
    let lin = &z.rank * BigInt::from(n) - &q;
    Ok(rf(IntPolynomial::new(vec![q, lin]), one_minus(1).pow(2)))
}

/// `B(t)·H_R(t) / (1 + t³)` for `n = 1`, `B(t)·H_R(t) / (1 + t²)` for `n = 2`.
pub fn hilbert_minell_module(n: i64, b: &IntPolynomial) -> Result<RationalFunction> {
    let period = match n {
        1 => 3,
        2 => 2,
        n => return Err(Error::unsupported(n)),
    };
    if b.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput(format!(
            "generator series {b} has a negative coefficient"
        )));
    }
    let divisor = IntPolynomial::one().add(&IntPolynomial::monomial(1, period));
    Ok(RationalFunction::polynomial(b.clone())
        .mul(&hilbert_r(n)?)
        .div(&RationalFunction::polynomial(divisor))
        .expect("nonzero divisor"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinellCounts {
    #[serde(with = "crate::json::bigint")]
    pub rank: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub multiplicity: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub generators: BigInt,
}

/// Rank, multiplicity and number of generators from the generator series
/// `B(t)`: `μ(M) = B(1)`, `rk M = B(1)/2`, `e(M) = 2·rk M`.
pub fn rank_multiplicity_minell(b: &IntPolynomial) -> Result<MinellCounts> {
    let generators = b.eval(&BigInt::one());
    if generators.is_odd() {
        return Err(Error::OddGeneratorCount(generators.to_string()));
    }
    let rank = &generators / 2;
    Ok(MinellCounts {
        multiplicity: &rank * 2,
        rank,
        generators,
    })
}

/// Serialized series: canonical fraction plus its first coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    #[serde(with = "crate::json::bigint_vec")]
    pub coefficients: Vec<BigInt>,
    /// The series is `t^offset` times the stored fraction.
    #[serde(default, skip_serializing_if = "is_zero_offset")]
    pub offset: i64,
}

fn is_zero_offset(k: &i64) -> bool {
    *k == 0
}

impl SeriesReport {
    pub fn new(x: &RationalFunction, n_max: usize, offset: i64) -> Result<Self> {
        Ok(SeriesReport {
            numerator: x.num.clone(),
            denominator: x.den.clone(),
            coefficients: series_coeffs(x, n_max)?,
            offset,
        })
    }

    pub fn function(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.numerator.clone(), self.denominator.clone())
    }
}
