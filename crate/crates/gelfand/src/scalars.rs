//! Exact scalar arithmetic: arbitrary-precision rationals and
//! integer-coefficient polynomials in the formal parameter `q`.
//!
//! Everything in this crate is computed over these two rings; there is no
//! floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `numer / denom`, reduced. Errors on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        if denom == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    /// Accepts `"p"` or `"p/q"` with arbitrary-precision integers.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::ParseRational(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_bigint(n))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(ScalarError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(p, q)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A univariate polynomial in `q` with arbitrary-precision integer
/// coefficients, stored degree-ascending with the leading coefficient
/// nonzero (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        QPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// Builds from degree-ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation at a rational point; a ring homomorphism
    /// `Z[q] -> Q` for every choice of the point.
    pub fn specialize(&self, q0: &Rational) -> Rational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &q0.0 + BigRational::from_integer(c.clone());
        }
        Rational(acc)
    }
}

macro_rules! qpoly_addsub {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a QPoly> for &'a QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &'a QPoly) -> QPoly {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut coeffs = Vec::with_capacity(n);
                for k in 0..n {
                    coeffs.push(self.coeff(k) $op rhs.coeff(k));
                }
                QPoly::from_coeffs(coeffs)
            }
        }
        impl $trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

qpoly_addsub!(Add, add, +);
qpoly_addsub!(Sub, sub, -);

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &'a QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<QPoly> for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        (&self) * (&rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -(&self)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for QPoly {
    /// Degree-ascending list of coefficient strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(
                BigInt::from_str(s)
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))?,
            );
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPolyOp {
    Add,
    Sub,
    Mul,
}

/// Exact ring operation on polynomials; the result is in canonical
/// trimmed form.
pub fn qpoly_arith(a: &QPoly, b: &QPoly, op: QPolyOp) -> QPoly {
    match op {
        QPolyOp::Add => a + b,
        QPolyOp::Sub => a - b,
        QPolyOp::Mul => a * b,
    }
}

/// Exact evaluation of `p` at `q0`.
pub fn specialize(p: &QPoly, q0: &Rational) -> Rational {
    p.specialize(q0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> QPoly {
        QPoly::q()
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&q() - &QPoly::one()) * &(&q() + &QPoly::one());
        assert_eq!(lhs, QPoly::from_i64_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn quadratic_relation_vanishes_at_q() {
        // (x - q)(x + 1) with x := q
        let x = q();
        let value = &(&x - &q()) * &(&x + &QPoly::one());
        assert!(value.is_zero());
    }

    #[test]
    fn add_one_to_q_minus_one() {
        let lhs = &(&q() - &QPoly::one()) + &QPoly::one();
        assert_eq!(lhs, q());
    }

    #[test]
    fn specialization_examples() {
        let q2m1 = QPoly::from_i64_coeffs(&[-1, 0, 1]);
        assert_eq!(q2m1.specialize(&Rational::from_integer(2)), 3.into());
        assert_eq!(q().specialize(&Rational::one()), Rational::one());
        let qm1 = QPoly::from_i64_coeffs(&[-1, 1]);
        assert!(qm1.specialize(&Rational::one()).is_zero());
    }

    #[test]
    fn canonical_trimmed_form() {
        let p = QPoly::from_i64_coeffs(&[3, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(QPoly::from_i64_coeffs(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn rational_parse_and_display() {
        let r: Rational = "6/8".parse().unwrap();
        assert_eq!(r, Rational::new(3, 4).unwrap());
        assert_eq!(r.to_string(), "3/4");
        let n: Rational = "-12".parse().unwrap();
        assert_eq!(n.to_string(), "-12");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_normalization() {
        let r = Rational::new(2, -4).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom() > &num::BigInt::from(0));
    }

    #[test]
    fn json_round_trip() {
        let p = QPoly::from_i64_coeffs(&[-1, 0, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["-1","0","1"]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);

        let r = Rational::new(3, 4).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#""3/4""#);
        let i = Rational::from_integer(5);
        assert_eq!(serde_json::to_string(&i).unwrap(), r#""5""#);
    }

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|cs| QPoly::from_i64_coeffs(&cs))
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn specialization_is_multiplicative(p1 in arb_qpoly(), p2 in arb_qpoly(), q0 in arb_rational()) {
            let lhs = (&p1 * &p2).specialize(&q0);
            let rhs = &p1.specialize(&q0) * &p2.specialize(&q0);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn specialization_is_additive(p1 in arb_qpoly(), p2 in arb_qpoly(), q0 in arb_rational()) {
            let lhs = (&p1 + &p2).specialize(&q0);
            let rhs = &p1.specialize(&q0) + &p2.specialize(&q0);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rational_add_sub_round_trip(a in arb_rational(), b in arb_rational()) {
            let sum = &a + &b;
            prop_assert_eq!(&sum - &b, a);
        }
    }
}
