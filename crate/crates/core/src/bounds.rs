//! Lower bounds on the index of a complex isotropic harmonic map `φ` with
//! directrix `(f, ρ)`.
//!
//! Every bound is evaluated on exact integers. Two algebraically equivalent
//! routes exist for each identity (the `deg f` form and the `deg φ` form) and
//! both are computed; a disagreement is reported as
//! [`Error::InternalInconsistency`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::harmonic::SequenceInvariants;

/// Where directrix data came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Computed from an explicit genus-0 curve.
    Computed,
    /// Supplied by the user; fullness and isotropy are assumed, not checked.
    Abstract,
}

/// Directrix data `(f, ρ)`: the numbers the bound formulas consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectrixInvariants {
    pub n: usize,
    pub g: BigInt,
    pub deg_f: BigInt,
    pub rho: usize,
    /// `r_0..r_{ρ-1}`.
    pub r_prefix: Vec<BigInt>,
    /// `r_0..r_{n-1}`, when the whole sequence is known.
    pub r_full: Option<Vec<BigInt>>,
    pub origin: Origin,
}

impl DirectrixInvariants {
    /// Builds abstract directrix data. `r` holds either `n` entries (the full
    /// sequence, which must satisfy the ramification relation) or `ρ` entries
    /// (`r_0..r_{ρ-1}`); `n` entries win when `ρ = n`.
    pub fn new(n: usize, g: impl Into<BigInt>, deg_f: impl Into<BigInt>, rho: usize, r: Vec<BigInt>) -> Result<Self> {
        let (r_prefix, r_full) = if r.len() == n {
            (r[..rho.min(n)].to_vec(), Some(r))
        } else if r.len() == rho {
            (r, None)
        } else {
            return Err(Error::InvalidInput(format!(
                "expected {rho} (r_0..r_{{ρ-1}}) or {n} (r_0..r_{{n-1}}) ramification indices, got {}",
                r.len()
            )));
        };
        let inv = Self { n, g: g.into(), deg_f: deg_f.into(), rho, r_prefix, r_full, origin: Origin::Abstract };
        inv.validate()?;
        Ok(inv)
    }

    /// Directrix data of `f_ρ` for a computed curve.
    pub fn from_sequence(seq: &SequenceInvariants, rho: usize) -> Result<Self> {
        if rho > seq.n {
            return Err(Error::InvalidInput(format!("ρ = {rho} exceeds n = {}", seq.n)));
        }
        let r: Vec<BigInt> = seq.r.iter().map(|&x| BigInt::from(x)).collect();
        let inv = Self {
            n: seq.n,
            g: seq.g.into(),
            deg_f: seq.deg_f.into(),
            rho,
            r_prefix: r[..rho].to_vec(),
            r_full: Some(r),
            origin: Origin::Computed,
        };
        inv.validate()?;
        Ok(inv)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.rho > self.n {
            return bad(format!("ρ = {} must lie in 0..={}", self.rho, self.n));
        }
        if self.g.is_negative() {
            return bad(format!("genus {} is negative", self.g));
        }
        if self.r_prefix.len() != self.rho {
            return bad(format!("expected {} ramification indices below ρ, got {}", self.rho, self.r_prefix.len()));
        }
        let all_r = self.r_full.iter().flatten().chain(&self.r_prefix);
        if let Some(neg) = all_r.clone().find(|r| r.is_negative()) {
            return bad(format!("ramification index {neg} is negative"));
        }
        if let Some(full) = &self.r_full {
            if full.len() != self.n || full[..self.rho] != self.r_prefix[..] {
                return bad("full ramification sequence does not extend the prefix".into());
            }
            if !ramrelation_check(self.n, &self.g, &self.deg_f, full) {
                return bad(format!(
                    "r = {:?} violates Σ(n−α)r_α = (n+1)deg f + n(n+1)(g−1) for n = {}, g = {}, deg f = {}",
                    full.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    self.n,
                    self.g,
                    self.deg_f
                ));
            }
        }
        Ok(())
    }

    /// Bounds apply only to maps that are neither holomorphic nor antiholomorphic.
    pub fn is_applicable(&self) -> bool {
        0 < self.rho && self.rho < self.n
    }

    fn require_applicable(&self) -> Result<()> {
        if self.is_applicable() {
            Ok(())
        } else {
            Err(Error::NotApplicable(format!(
                "ρ = {} ∈ {{0, n}}: φ is ±-holomorphic, hence stable with Index 0",
                self.rho
            )))
        }
    }

    fn n_big(&self) -> BigInt {
        BigInt::from(self.n)
    }

    fn rho_big(&self) -> BigInt {
        BigInt::from(self.rho)
    }

    /// `Σ_{α<ρ} (α+1)·r_α`.
    fn weighted_prefix(&self) -> BigInt {
        self.r_prefix.iter().enumerate().map(|(a, r)| BigInt::from(a + 1) * r).sum()
    }
}

/// `deg φ = deg f − Σ_{α<ρ} r_α + ρ(2g−2)`.
pub fn deg_phi(inv: &DirectrixInvariants) -> BigInt {
    let sum: BigInt = inv.r_prefix.iter().sum();
    &inv.deg_f - sum + inv.rho_big() * (BigInt::from(2) * &inv.g - 2)
}

/// Earlier estimate `deg(φ)(n+1) + n(1−g)`.
pub fn baseline_bound(inv: &DirectrixInvariants) -> Result<BigInt> {
    inv.require_applicable()?;
    let n = inv.n_big();
    Ok(deg_phi(inv) * (&n + 1) + &n * (BigInt::from(1) - &inv.g))
}

/// `(n+1)deg f − Σ_{α<ρ}(n−α)r_α + (2nρ − ρ² + 2ρ − n)(g−1)`.
pub fn theorem_bound(inv: &DirectrixInvariants) -> Result<BigInt> {
    inv.require_applicable()?;
    let n = inv.n_big();
    let rho = inv.rho_big();
    let weighted: BigInt = inv.r_prefix.iter().enumerate().map(|(a, r)| (&n - a) * r).sum();
    let genus_coeff = BigInt::from(2) * &n * &rho - &rho * &rho + BigInt::from(2) * &rho - &n;
    Ok((&n + 1) * &inv.deg_f - weighted + genus_coeff * (&inv.g - 1))
}

/// `(n+1)deg φ + (n+ρ²)(1−g) + Σ_{α<ρ}(α+1)r_α`, checked against [`theorem_bound`].
pub fn corollary_bound(inv: &DirectrixInvariants) -> Result<BigInt> {
    let theorem = theorem_bound(inv)?;
    let n = inv.n_big();
    let rho = inv.rho_big();
    let corollary = (&n + 1) * deg_phi(inv) + (&n + &rho * &rho) * (BigInt::from(1) - &inv.g) + inv.weighted_prefix();
    if corollary != theorem {
        return Err(Error::InternalInconsistency(format!(
            "corollary bound {corollary} differs from theorem bound {theorem} for {inv:?}"
        )));
    }
    Ok(corollary)
}

/// `Σ_{α<ρ}(α+1)r_α − ρ²(g−1)` and whether it is positive; checked against
/// `theorem_bound − baseline_bound`.
pub fn improvement(inv: &DirectrixInvariants) -> Result<(BigInt, bool)> {
    let theorem = theorem_bound(inv)?;
    let baseline = baseline_bound(inv)?;
    let rho = inv.rho_big();
    let delta: BigInt = inv.weighted_prefix() - &rho * &rho * (&inv.g - 1);
    if delta != &theorem - &baseline {
        return Err(Error::InternalInconsistency(format!(
            "improvement {delta} differs from theorem − baseline = {} for {inv:?}",
            theorem - baseline
        )));
    }
    let improves = delta.is_positive();
    Ok((delta, improves))
}

/// `Σ(n−α)r_α = (n+1)deg f + n(n+1)(g−1)`. False when `r_full` does not have `n` entries.
pub fn ramrelation_check(n: usize, g: &BigInt, deg_f: &BigInt, r_full: &[BigInt]) -> bool {
    if r_full.len() != n {
        return false;
    }
    let nb = BigInt::from(n);
    let lhs: BigInt = r_full.iter().enumerate().map(|(a, r)| (&nb - a) * r).sum();
    lhs == (&nb + 1) * deg_f + &nb * (&nb + 1) * (g - 1)
}

/// The two closed forms of the `CP²`, `ρ = 1` bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cp2Forms {
    /// `3deg f − 2r_0 − 3` (sphere) or `3deg f − 2r_0` (torus).
    pub deg_f_form: BigInt,
    /// `3deg φ + r_0 + 3` (sphere) or `3deg φ + r_0` (torus).
    pub deg_phi_form: BigInt,
}

/// Everything known about the index bounds for one directrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub input: DirectrixInvariants,
    pub deg_phi: BigInt,
    pub applicable: bool,
    pub baseline: Option<BigInt>,
    pub theorem: Option<BigInt>,
    pub corollary: Option<BigInt>,
    pub improvement: Option<BigInt>,
    pub improves: bool,
    /// The theorem bound is `≤ 0` and says nothing beyond `Index ≥ 0`.
    pub vacuous: bool,
    pub cp2: Option<Cp2Forms>,
    pub notes: Vec<String>,
}

pub const NOTE_STABLE: &str = "±-holomorphic: stable, Index 0";
pub const NOTE_VACUOUS: &str = "vacuous: bound ≤ 0, Index ≥ 0 holds trivially";
pub const NOTE_ASSERTED: &str = "fullness and complex isotropy are user-asserted";
pub const NOTE_REALIZABILITY: &str =
    "genus ≥ 2: only arithmetic consistency is checked; existence of a directrix with this data is not certified";
pub const NOTE_RAMRELATION_UNCHECKED: &str = "only r_0..r_{ρ-1} given; the ramification relation was not checked";

/// Evaluates every bound that applies to `inv`.
pub fn bound_report(inv: &DirectrixInvariants) -> Result<BoundReport> {
    inv.validate()?;
    let mut notes = Vec::new();
    if inv.origin == Origin::Abstract {
        notes.push(NOTE_ASSERTED.to_string());
        if inv.g >= BigInt::from(2) {
            notes.push(NOTE_REALIZABILITY.to_string());
        }
        if inv.r_full.is_none() {
            notes.push(NOTE_RAMRELATION_UNCHECKED.to_string());
        }
    }
    let deg_phi = deg_phi(inv);
    if !inv.is_applicable() {
        notes.insert(0, NOTE_STABLE.to_string());
        return Ok(BoundReport {
            input: inv.clone(),
            deg_phi,
            applicable: false,
            baseline: None,
            theorem: None,
            corollary: None,
            improvement: None,
            improves: false,
            vacuous: false,
            cp2: None,
            notes,
        });
    }
    let baseline = baseline_bound(inv)?;
    let theorem = theorem_bound(inv)?;
    let corollary = corollary_bound(inv)?;
    let (delta, improves) = improvement(inv)?;
    let cp2 = if cp2_in_scope(inv) { Some(cp2_forms(inv, &theorem)?) } else { None };
    let vacuous = !theorem.is_positive();
    if vacuous {
        notes.push(NOTE_VACUOUS.to_string());
    }
    Ok(BoundReport {
        input: inv.clone(),
        deg_phi,
        applicable: true,
        baseline: Some(baseline),
        theorem: Some(theorem),
        corollary: Some(corollary),
        improvement: Some(delta),
        improves,
        vacuous,
        cp2,
        notes,
    })
}

fn cp2_in_scope(inv: &DirectrixInvariants) -> bool {
    inv.n == 2 && inv.rho == 1 && (inv.g.is_zero() || inv.g == BigInt::from(1))
}

fn cp2_forms(inv: &DirectrixInvariants, theorem: &BigInt) -> Result<Cp2Forms> {
    let r0 = &inv.r_prefix[0];
    let shift = if inv.g.is_zero() { BigInt::from(3) } else { BigInt::zero() };
    let deg_f_form = BigInt::from(3) * &inv.deg_f - BigInt::from(2) * r0 - &shift;
    let deg_phi_form = BigInt::from(3) * deg_phi(inv) + r0 + &shift;
    if &deg_f_form != theorem || &deg_phi_form != theorem {
        return Err(Error::InternalInconsistency(format!(
            "CP² closed forms {deg_f_form} / {deg_phi_form} differ from theorem bound {theorem} for {inv:?}"
        )));
    }
    Ok(Cp2Forms { deg_f_form, deg_phi_form })
}

/// The `CP²`, `ρ = 1` bounds for genus 0 or 1, with both closed forms populated.
pub fn cp2_bounds(inv: &DirectrixInvariants) -> Result<BoundReport> {
    if !cp2_in_scope(inv) {
        return Err(Error::NotApplicable(format!(
            "CP² closed forms need n = 2, ρ = 1, g ∈ {{0, 1}}; got n = {}, ρ = {}, g = {}",
            inv.n, inv.rho, inv.g
        )));
    }
    bound_report(inv)
}
