//! Holomorphic maps `S² → CP^n` as normalized tuples of polynomials.
//!
//! A curve is stored in the affine chart `z`; the chart at infinity (`w = 1/z`)
//! is obtained by reversing every component within the curve degree.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{poly_det, scalar_rank};
use crate::poly::{Degree, Poly};
use crate::scalar::GaussianRational;

/// Homogeneous representative `[F_0 : … : F_n]` of a map into `CP^n` with
/// coprime components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveCurve {
    n: usize,
    components: Vec<Poly>,
    degree: usize,
}

impl ProjectiveCurve {
    /// Builds a curve, dividing out the monic gcd of the components.
    pub fn new(n: usize, raw: Vec<Poly>) -> Result<Self> {
        Self::normalize(n, raw).map(|(c, _)| c)
    }

    /// Like [`ProjectiveCurve::new`], also returning the common factor that was removed.
    pub fn normalize(n: usize, raw: Vec<Poly>) -> Result<(Self, Poly)> {
        if n == 0 {
            return Err(Error::InvalidInput("target dimension n must be at least 1".into()));
        }
        if raw.len() != n + 1 {
            return Err(Error::ArityMismatch { expected: n + 1, found: raw.len() });
        }
        if raw.iter().all(Poly::is_zero) {
            return Err(Error::DegenerateCurve);
        }
        let common = Poly::gcd_all(&raw)?;
        let components: Vec<Poly> =
            if common.is_constant() { raw } else { raw.iter().map(|c| c.divexact(&common)).collect::<Result<_>>()? };
        let degree =
            components.iter().filter_map(|c| c.degree().finite()).max().expect("at least one component is nonzero");
        Ok((Self { n, components, degree }, common))
    }

    /// Target dimension `n` of `CP^n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Algebraic degree: the largest component degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Rows `[F_i, F_i', …, F_i^{(cols-1)}]` for each component.
    pub fn derivative_table(&self, cols: usize) -> Vec<Vec<Poly>> {
        self.components
            .iter()
            .map(|f| {
                let mut row = Vec::with_capacity(cols);
                let mut cur = f.clone();
                for _ in 0..cols {
                    let next = cur.derivative();
                    row.push(cur);
                    cur = next;
                }
                row
            })
            .collect()
    }

    /// Full Wronskian `det[F, F', …, F^{(n)}]`.
    pub fn wronskian(&self) -> Poly {
        poly_det(self.derivative_table(self.n + 1)).expect("Bareiss divisions are exact")
    }

    /// True iff the curve lies in no proper projective subspace.
    pub fn is_full(&self) -> bool {
        !self.wronskian().is_zero()
    }

    /// Rank of the `(n+1) × (d+1)` coefficient matrix.
    pub fn coefficient_rank(&self) -> usize {
        let rows = self.components.iter().map(|f| (0..=self.degree).map(|k| f.coeff(k)).collect()).collect();
        scalar_rank(rows)
    }

    /// Fullness by both the Wronskian and the coefficient rank; errors if they disagree.
    pub fn checked_is_full(&self) -> Result<bool> {
        let by_wronskian = self.is_full();
        let by_rank = self.coefficient_rank() == self.n + 1;
        if by_wronskian != by_rank {
            return Err(Error::InternalInconsistency(alloc::format!(
                "Wronskian fullness {by_wronskian} disagrees with coefficient rank fullness {by_rank} for {self}"
            )));
        }
        Ok(by_wronskian)
    }

    /// The same map written in the chart `w = 1/z`.
    pub fn chart_flip(&self) -> Self {
        let flipped = self
            .components
            .iter()
            .map(|f| f.reverse(self.degree).expect("component degree is at most the curve degree"))
            .collect();
        Self::new(self.n, flipped).expect("flipping keeps a nonzero component")
    }

    /// `self ∘ map`, cleared of denominators and normalized.
    pub fn precompose(&self, map: &RationalSelfMap) -> Self {
        let d = self.degree;
        let num_pows = powers(&map.numerator, d);
        let den_pows = powers(&map.denominator, d);
        let composed = self
            .components
            .iter()
            .map(|f| {
                f.coeffs().iter().enumerate().fold(Poly::zero(), |acc, (j, c)| {
                    if c.is_zero() {
                        acc
                    } else {
                        &acc + &(&num_pows[j] * &den_pows[d - j]).scale(c)
                    }
                })
            })
            .collect();
        Self::new(self.n, composed).expect("a nonconstant map keeps the curve nondegenerate")
    }
}

fn powers(p: &Poly, up_to: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(Poly::one());
    for k in 1..=up_to {
        let next = &out[k - 1] * p;
        out.push(next);
    }
    out
}

impl fmt::Display for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectiveCurve(n={}, d={}, {self})", self.n, self.degree)
    }
}

/// Rational self-map `z ↦ p(z)/q(z)` of the sphere with coprime `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSelfMap {
    numerator: Poly,
    denominator: Poly,
}

impl RationalSelfMap {
    /// Reduces `num/den` to lowest terms; constant maps are rejected.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let common = num.gcd(&den).map_err(|_| Error::DegenerateMap)?;
        let (mut numerator, mut denominator) = (num.divexact(&common)?, den.divexact(&common)?);
        // Scale so the denominator is monic whenever it is nonzero.
        if let Some(lc) = denominator.leading_coeff().cloned() {
            let inv = lc.inv()?;
            numerator = numerator.scale(&inv);
            denominator = denominator.scale(&inv);
        }
        let map = Self { numerator, denominator };
        if map.degree() < 1 {
            return Err(Error::DegenerateMap);
        }
        Ok(map)
    }

    /// `z ↦ z^k`.
    pub fn power(k: usize) -> Result<Self> {
        Self::new(Poly::monomial(GaussianRational::one(), k), Poly::one())
    }

    pub fn identity() -> Self {
        Self::power(1).expect("identity is nondegenerate")
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// `max(deg p, deg q)`.
    pub fn degree(&self) -> usize {
        let deg = |p: &Poly| match p.degree() {
            Degree::NegInf => 0,
            Degree::Finite(d) => d,
        };
        deg(&self.numerator).max(deg(&self.denominator))
    }
}

impl fmt::Display for RationalSelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
