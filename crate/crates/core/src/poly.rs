//! Univariate polynomials over the Gaussian rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Degree of a polynomial. The zero polynomial has degree [`Degree::NegInf`],
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial in one variable, coefficients indexed by power.
///
/// Canonical form: the highest stored coefficient is nonzero, or there are no
/// coefficients at all (the zero polynomial).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Formal derivative `d/dz`.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &GaussianRational::from_int(k as i64)).collect(),
        )
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs.iter().rev().fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Euclidean division: `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().finite().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient; fails with [`Error::InexactDivision`] on a nonzero remainder.
    pub fn divexact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Monic gcd of every nonzero polynomial in `polys`.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        let mut acc = Poly::zero();
        for p in polys {
            if acc.degree() == Degree::Finite(0) {
                break;
            }
            if !p.is_zero() {
                acc = acc.gcd(p)?;
            }
        }
        if acc.is_zero() {
            Err(Error::UndefinedGcd)
        } else {
            Ok(acc)
        }
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// `w^bound · self(1/w)`: the coefficient sequence reversed within length `bound + 1`.
    pub fn reverse(&self, bound: usize) -> Result<Poly> {
        if let Degree::Finite(d) = self.degree() {
            if bound < d {
                return Err(Error::BadReversalBound { bound, degree: d });
            }
        }
        let mut coeffs = vec![GaussianRational::zero(); bound + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[bound - k] = c.clone();
        }
        Ok(Poly::new(coeffs))
    }

    /// Order of vanishing at `z = 0`.
    pub fn valuation_at_zero(&self) -> Result<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).ok_or(Error::UndefinedValuation)
    }

    /// Divides by `z^valuation`.
    pub fn strip_zero_root(&self) -> Poly {
        match self.valuation_at_zero() {
            Ok(v) => Poly { coeffs: self.coeffs[v..].to_vec() },
            Err(_) => Poly::zero(),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

/// Renders in descending powers of `z`, e.g. `z^3 + (1/2+i)*z - 4`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) =
                if c.is_real() && c.re < num_rational::BigRational::zero() { (true, -c) } else { (false, c.clone()) };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let coeff_text = if mag.is_real() { alloc::format!("{mag}") } else { alloc::format!("({mag})") };
            match k {
                0 => f.write_str(&coeff_text)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff_text}*")?;
                    }
                    f.write_str("z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn gi(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn ring_ops() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[0, 0, 1]) + &p(&[0, 0, -1]), Poly::zero());
        assert_eq!(Poly::zero().degree(), Degree::NegInf);
        let iz = Poly::monomial(GaussianRational::i(), 1);
        assert_eq!(&iz * &iz, p(&[0, 0, -1]));
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
        assert_eq!(p(&[1, 2]).scale(&gi("1/2")), Poly::new(alloc::vec![gi("1/2"), gi("1")]));
    }

    #[test]
    fn degree_sentinel_orders_below_zero() {
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(Degree::NegInf.finite(), None);
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
        assert_eq!(p(&[0, 1, 0, 1]).derivative(), p(&[1, 0, 3]));
        assert_eq!(Poly::zero().derivative(), Poly::zero());
    }

    #[test]
    fn gcds() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        let z_minus_i = Poly::new(alloc::vec![-GaussianRational::i(), GaussianRational::one()]);
        assert_eq!(p(&[1, 0, 1]).gcd(&z_minus_i).unwrap(), z_minus_i);
        assert_eq!(p(&[1, 0, 3]).gcd(&p(&[0, 2])).unwrap(), Poly::one());
        assert_eq!(p(&[0, 3, 6]).gcd(&Poly::zero()).unwrap(), p(&[0, 1, 2]).monic());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::UndefinedGcd));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).divexact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 1]).divexact(&p(&[0, 0, 0, 1])), Err(Error::InexactDivision));
        assert_eq!(p(&[1]).divexact(&Poly::zero()), Err(Error::DivisionByZero));
        // k z^{3k-1} / z^{k-1} = k z^{2k}
        for k in 1..=6usize {
            let kk = GaussianRational::from_int(k as i64);
            let num = Poly::monomial(kk.clone(), 3 * k - 1);
            let den = Poly::monomial(GaussianRational::one(), k - 1);
            assert_eq!(num.divexact(&den).unwrap(), Poly::monomial(kk, 2 * k));
        }
    }

    #[test]
    fn composition() {
        for k in 1..=5 {
            let zk = Poly::monomial(GaussianRational::one(), k);
            assert_eq!(p(&[0, 0, 1]).compose(&zk), Poly::monomial(GaussianRational::one(), 2 * k));
        }
        let q = p(&[3, -1, 0, 2]);
        assert_eq!(q.compose(&Poly::z()), q);
        assert_eq!(p(&[0, 1, 0, 1]).compose(&p(&[0, 0, 1])), p(&[0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn reversal() {
        assert_eq!(p(&[1, 1, 1]).reverse(2).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[0, 0, 1]).reverse(2).unwrap(), p(&[1]));
        assert_eq!(p(&[1]).reverse(3).unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(Poly::zero().reverse(0).unwrap(), Poly::zero());
        assert_eq!(p(&[1, 1, 1]).reverse(1), Err(Error::BadReversalBound { bound: 1, degree: 2 }));
    }

    #[test]
    fn valuations() {
        assert_eq!(p(&[0, 0, 0, 1, 0, 1]).valuation_at_zero(), Ok(3));
        assert_eq!(p(&[1, 1]).valuation_at_zero(), Ok(0));
        // 2w(3 - w^2) = 6w - 2w^3
        assert_eq!(p(&[0, 6, 0, -2]).valuation_at_zero(), Ok(1));
        assert_eq!(Poly::zero().valuation_at_zero(), Err(Error::UndefinedValuation));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-4, 0, 0, 1]).to_string(), "z^3 - 4");
        assert_eq!(p(&[0, 1, 0, 1]).to_string(), "z^3 + z");
        assert_eq!(Poly::new(alloc::vec![gi("0"), gi("1/2+i")]).to_string(), "(1/2+1*i)*z");
        assert_eq!(p(&[2, -3]).to_string(), "-3*z + 2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
