//! Exact coefficient rings and the graded super-scalar ring R = Z[q, q^-1][t]/(t^2 - 1).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact commutative ring with explicit context (needed for runtime moduli).
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Multiplicative inverse, if it exists.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
    /// Characteristic of the ring (0 for Z and Q).
    fn characteristic(&self) -> u64;
}

/// Marker for rings in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Division; errors on a zero divisor instead of returning a silent value.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

impl Field for Rationals {}

/// The prime field F_p with a runtime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::Invalid(alloc::format!("modulus {p} too large")));
        }
        Ok(PrimeField { p })
    }
    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap_or(0)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        (*a).is_multiple_of(self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Choice of coefficient ring, as selected on the command line (`Q`, `Z`, `Fp:<p>`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientRing {
    Int,
    Rat,
    Prime(u64),
}

impl CoefficientRing {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientRing::Prime(p) => *p,
            _ => 0,
        }
    }
    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Int)
    }
}

impl FromStr for CoefficientRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Z" | "z" | "int" => Ok(CoefficientRing::Int),
            "Q" | "q" | "rat" => Ok(CoefficientRing::Rat),
            _ => {
                let rest = t
                    .strip_prefix("Fp:")
                    .or_else(|| t.strip_prefix("fp:"))
                    .or_else(|| t.strip_prefix("F"))
                    .ok_or_else(|| {
                        Error::Parse(alloc::format!("unknown coefficient ring `{t}`"))
                    })?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad prime `{rest}`")))?;
                PrimeField::new(p)?;
                Ok(CoefficientRing::Prime(p))
            }
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Int => f.write_str("Z"),
            CoefficientRing::Rat => f.write_str("Q"),
            CoefficientRing::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Parity in Z/2.
pub type Parity = u8;

/// Element of R = Z[q, q^-1][t]/(t^2 - 1), stored sparsely as (degree, parity) -> coefficient.
/// The variable `pi` stands for the image of t.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSuperScalar {
    terms: BTreeMap<(i64, Parity), BigInt>,
}

impl GradedSuperScalar {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }
    /// c * q^m * pi^eps.
    pub fn monomial(c: BigInt, m: i64, eps: Parity) -> Self {
        let mut s = Self::zero();
        s.add_term(m, eps, c);
        s
    }
    /// q^m * pi^eps.
    pub fn qpi(m: i64, eps: Parity) -> Self {
        Self::monomial(BigInt::one(), m, eps)
    }
    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }
    pub fn terms(&self) -> impl Iterator<Item = (i64, Parity, &BigInt)> {
        self.terms.iter().map(|(&(m, e), c)| (m, e, c))
    }
    pub fn coeff(&self, m: i64, eps: Parity) -> BigInt {
        self.terms.get(&(m, eps & 1)).cloned().unwrap_or_default()
    }
    pub fn add_term(&mut self, m: i64, eps: Parity, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (m, eps & 1);
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(m, e), c) in &other.terms {
            out.add_term(m, e, c.clone());
        }
        out
    }
    pub fn neg(&self) -> Self {
        GradedSuperScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(m, e), v) in &self.terms {
            out.add_term(m, e, v * c);
        }
        out
    }
    /// Ring product; pi^2 = 1.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(m1, e1), c1) in &self.terms {
            for (&(m2, e2), c2) in &other.terms {
                out.add_term(m1 + m2, (e1 + e2) & 1, c1 * c2);
            }
        }
        out
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    /// Multiply by q^m pi^eps.
    pub fn shift(&self, m: i64, eps: Parity) -> Self {
        GradedSuperScalar {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + m, (b + eps) & 1), c.clone()))
                .collect(),
        }
    }
    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
    /// Evaluate at q = q0, pi = sign in the ring `r`.
    /// Fails if a negative power of q is needed and q0 is not invertible in `r`.
    pub fn specialize<Rg: Ring>(&self, r: &Rg, q0: &Rg::Elem, sign: i8) -> Result<Rg::Elem> {
        if sign != 1 && sign != -1 {
            return Err(Error::Invalid(alloc::format!(
                "sign must be +1 or -1, got {sign}"
            )));
        }
        let need_inv = self.terms.keys().any(|&(m, _)| m < 0);
        let q_inv = if need_inv {
            Some(r.inv(q0).ok_or(Error::NotInvertible)?)
        } else {
            None
        };
        let mut acc = r.zero();
        for (&(m, e), c) in &self.terms {
            let qpow = if m >= 0 {
                r.pow(q0, m as u64)
            } else {
                r.pow(q_inv.as_ref().unwrap(), m.unsigned_abs())
            };
            let mut t = r.mul(&r.from_int(c), &qpow);
            if e == 1 && sign == -1 {
                t = r.neg(&t);
            }
            acc = r.add(&acc, &t);
        }
        Ok(acc)
    }
}

impl fmt::Debug for GradedSuperScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as e.g. `1 + 2qπ + q^2`; zero renders as `0`.
impl fmt::Display for GradedSuperScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(m, e), c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match (m, e) {
                (0, 0) => String::new(),
                (0, _) => "π".to_string(),
                (1, 0) => "q".to_string(),
                (1, _) => "qπ".to_string(),
                (m, 0) => alloc::format!("q^{m}"),
                (m, _) => alloc::format!("q^{m}π"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GradedSuperScalar {
    type Err = Error;
    /// Parses the format produced by `Display` (also accepts `pi` and `*`).
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .replace("pi", "π")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut out = GradedSuperScalar::zero();
        let chars: Vec<char> = cleaned.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                let digits: String = chars[start..i].iter().collect();
                BigInt::from_str(&digits).map_err(|_| Error::Parse(digits.clone()))?
            } else {
                BigInt::one()
            };
            let mut m = 0i64;
            let mut e = 0u8;
            let mut saw_symbol = i > start;
            if i < chars.len() && chars[i] == 'q' {
                saw_symbol = true;
                i += 1;
                m = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let st = i;
                    if i < chars.len() && chars[i] == '-' {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[st..i].iter().collect();
                    m = digits.parse().map_err(|_| Error::Parse(digits.clone()))?;
                }
            }
            if i < chars.len() && chars[i] == 'π' {
                saw_symbol = true;
                i += 1;
                e = 1;
            }
            if !saw_symbol {
                return Err(Error::Parse(alloc::format!("bad scalar `{s}`")));
            }
            out.add_term(m, e, sign * coeff);
            if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                return Err(Error::Parse(alloc::format!("bad scalar `{s}`")));
            }
        }
        Ok(out)
    }
}
