//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `a + b·i`.
//!
//! The literal syntax accepted by [`GaussianRational::from_str`] and produced by
//! its `Display` impl is `a/b`, `a/b+c/d*i`, `a/b-c/d*i`, with integers as
//! shorthand (`3` is `3/1`) and whitespace ignored. A bare `i`, `-i`, `2i` and
//! `c/d*i` are also accepted.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact complex scalar `re + im·i` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Denominators of the real and imaginary parts.
    pub fn denominators(&self) -> (&BigInt, &BigInt) {
        (self.re.denom(), self.im.denom())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(Rational::one())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() {
            return GaussianRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im };
        }
        if rhs.im.is_zero() {
            return GaussianRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re };
        }
        GaussianRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

/// Panics on a zero divisor; use [`GaussianRational::checked_div`] to get an error instead.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero GaussianRational")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_err(literal: &str, reason: &str) -> Error {
    Error::Parse { literal: literal.to_string(), reason: reason.to_string() }
}

/// Parses `[+-]a` or `[+-]a/b` with `b > 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (num, den) = match compact.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (compact.as_str(), None),
    };
    let int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(s, "expected an integer"));
        }
        BigInt::from_str(t.strip_prefix('+').unwrap_or(t)).map_err(|_| parse_err(s, "expected an integer"))
    };
    let n = int(num)?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(parse_err(s, "denominator must be an unsigned integer"));
            }
            let d = int(d)?;
            if d.is_zero() {
                return Err(parse_err(s, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(s, "empty literal"));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::from_real(parse_rational(&compact).map_err(|_| parse_err(s, "bad real literal"))?));
        };
        let starred = body.ends_with('*');
        let body = body.strip_suffix('*').unwrap_or(body);
        // Split at the last sign that is not the leading one.
        let split = body.char_indices().filter(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k).next_back();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_part).map_err(|_| parse_err(s, "bad real part"))?
        };
        if starred && matches!(im_part, "" | "+" | "-") {
            return Err(parse_err(s, "missing coefficient before `*i`"));
        }
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t).map_err(|_| parse_err(s, "bad imaginary part"))?,
        };
        Ok(Self { re, im })
    }
}
