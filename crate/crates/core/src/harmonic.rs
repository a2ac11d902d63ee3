//! Numerical invariants of the harmonic sequence `f_0 → f_1 → … → f_n` generated
//! by a full holomorphic curve of genus 0.
//!
//! Level `k` of the sequence is represented by the `(k+1)×(k+1)` minors of the
//! matrix `[F, F', …, F^{(k)}]`. Their common zeros, counted on both charts,
//! give the totals `G_k`. At a point where the local ramification indices are
//! `r_j`, the level-`k` minors vanish to order `Σ_{j<k} (k−j)·r_j`, so the
//! total ramification indices are the second differences of `G_k`.

use alloc::format;
use alloc::vec::Vec;

use crate::curve::ProjectiveCurve;
use crate::error::{Error, Result};
use crate::linalg::leading_column_minors;
use crate::poly::Poly;

/// Degrees and ramification data of the harmonic sequence of a full curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceInvariants {
    pub n: usize,
    /// Genus of the domain; 0 for every computed curve.
    pub g: i64,
    pub deg_f: i64,
    /// Associated-curve degrees `d_0..=d_n`.
    pub d: Vec<i64>,
    /// Total common-zero degrees `G_0..=G_n` of the level minors, both charts.
    pub gcd_totals: Vec<i64>,
    /// Total ramification indices `r_0..r_{n-1}`.
    pub r: Vec<i64>,
    /// `map_deg[ρ]` is the degree of the harmonic map `f_ρ`.
    pub map_deg: Vec<i64>,
}

/// All `(k+1)×(k+1)` minors of `[F, F', …, F^{(k)}]`, rows chosen in lexicographic order.
pub fn level_minors(c: &ProjectiveCurve, k: usize) -> Result<Vec<Poly>> {
    check_level(c, k)?;
    require_full(c)?;
    Ok(all_minors(c, k + 1).pop().expect("level k is present"))
}

/// Minors of levels `0..levels`.
fn all_minors(c: &ProjectiveCurve, levels: usize) -> Vec<Vec<Poly>> {
    leading_column_minors(&c.derivative_table(levels), levels)
}

fn check_level(c: &ProjectiveCurve, k: usize) -> Result<()> {
    if k > c.n() {
        Err(Error::BadLevel { level: k, n: c.n() })
    } else {
        Ok(())
    }
}

fn require_full(c: &ProjectiveCurve) -> Result<()> {
    if c.checked_is_full()? {
        Ok(())
    } else {
        Err(Error::NotFull)
    }
}

/// Per-level data on one chart.
struct ChartLevel {
    gcd: Poly,
    reduced_degree: usize,
}

fn chart_level(c: &ProjectiveCurve, k: usize, minors: &[Poly]) -> Result<ChartLevel> {
    let gcd = Poly::gcd_all(minors)
        .map_err(|_| Error::InternalInconsistency(format!("all level-{k} minors vanish for the full curve {c}")))?;
    let mut reduced_degree = 0;
    for m in minors {
        if let Some(deg) = m.divexact(&gcd)?.degree().finite() {
            reduced_degree = reduced_degree.max(deg);
        }
    }
    Ok(ChartLevel { gcd, reduced_degree })
}

struct Level {
    gcd_total: usize,
    assoc_degree: usize,
}

/// Levels `0..levels` from both charts.
fn levels(c: &ProjectiveCurve, levels: usize) -> Result<Vec<Level>> {
    let flipped = c.chart_flip();
    let near_minors = all_minors(c, levels);
    let far_minors = all_minors(&flipped, levels);
    let mut out = Vec::with_capacity(levels);
    for k in 0..levels {
        let near = chart_level(c, k, &near_minors[k])?;
        let far = chart_level(&flipped, k, &far_minors[k])?;
        if near.reduced_degree != far.reduced_degree {
            return Err(Error::InternalInconsistency(format!(
                "level {k} associated degree is {} in the z chart but {} in the w chart for {c}",
                near.reduced_degree, far.reduced_degree
            )));
        }
        let finite = near.gcd.degree().finite().expect("gcd is nonzero");
        // Only the point w = 0 is new in the second chart.
        let at_infinity = far.gcd.valuation_at_zero()?;
        out.push(Level { gcd_total: finite + at_infinity, assoc_degree: near.reduced_degree });
    }
    Ok(out)
}

/// `G_k`: total degree of the common zeros of the level-`k` minors over the sphere.
pub fn common_zero_degree(c: &ProjectiveCurve, k: usize) -> Result<i64> {
    check_level(c, k)?;
    require_full(c)?;
    Ok(levels(c, k + 1)?[k].gcd_total as i64)
}

/// `d_k`: degree of the `k`-th associated curve, checked on both charts.
pub fn associated_degree(c: &ProjectiveCurve, k: usize) -> Result<i64> {
    check_level(c, k)?;
    require_full(c)?;
    Ok(levels(c, k + 1)?[k].assoc_degree as i64)
}

/// `r_0..r_{n-1}` as second differences of the common-zero totals.
pub fn ramification_indices(c: &ProjectiveCurve) -> Result<Vec<i64>> {
    Ok(invariants(c)?.r)
}

fn second_differences(totals: &[i64]) -> Vec<i64> {
    let at = |k: isize| if k < 0 { 0 } else { totals[k as usize] };
    (0..totals.len() - 1)
        .map(|k| {
            let k = k as isize;
            at(k + 1) - 2 * at(k) + at(k - 1)
        })
        .collect()
}

/// Map degree of `f_ρ` from the ramification data: `deg_f − Σ_{α<ρ} r_α + ρ(2g−2)`.
pub fn map_degree_from_ramification(deg_f: i64, g: i64, r: &[i64], rho: usize) -> i64 {
    deg_f - r[..rho].iter().sum::<i64>() + rho as i64 * (2 * g - 2)
}

/// Computes every invariant of the harmonic sequence and cross-checks them.
pub fn invariants(c: &ProjectiveCurve) -> Result<SequenceInvariants> {
    require_full(c)?;
    let n = c.n();
    let levels = levels(c, n + 1)?;

    let gcd_totals: Vec<i64> = levels.iter().map(|l| l.gcd_total as i64).collect();
    let d: Vec<i64> = levels.iter().map(|l| l.assoc_degree as i64).collect();
    let deg_f = c.degree() as i64;
    let g = 0;

    if gcd_totals[0] != 0 || d[0] != deg_f || d[n] != 0 {
        return Err(Error::InternalInconsistency(format!(
            "boundary levels wrong for {c}: G_0 = {}, d_0 = {} (deg f = {deg_f}), d_n = {}",
            gcd_totals[0], d[0], d[n]
        )));
    }

    let r = second_differences(&gcd_totals);
    if let Some((k, rk)) = r.iter().enumerate().find(|(_, &rk)| rk < 0) {
        return Err(Error::InternalInconsistency(format!("negative ramification r_{k} = {rk} for {c}")));
    }

    let map_deg: Vec<i64> = (0..=n).map(|rho| d[rho] - if rho == 0 { 0 } else { d[rho - 1] }).collect();
    for (rho, &md) in map_deg.iter().enumerate() {
        let via_r = map_degree_from_ramification(deg_f, g, &r, rho);
        if md != via_r {
            return Err(Error::InternalInconsistency(format!(
                "deg f_{rho} is {md} from associated degrees but {via_r} from ramification for {c}"
            )));
        }
    }

    Ok(SequenceInvariants { n, g, deg_f, d, gcd_totals, r, map_deg })
}

/// Residuals of the Plücker identities; all zero for consistent data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Per `k`: `(2d_k − d_{k−1} + (2g−2) − r_k) − d_{k+1}`.
    pub recursion_residuals: Vec<i64>,
    /// `Σ(n−α)r_α − (n+1)deg_f − n(n+1)(g−1)`.
    pub ramrelation_residual: i64,
    /// Per `ρ`: `map_deg[ρ] − (deg_f − Σ_{α<ρ} r_α + ρ(2g−2))`.
    pub degree_residuals: Vec<i64>,
    pub pass: bool,
}

pub fn verify_plucker(inv: &SequenceInvariants) -> VerificationReport {
    let n = inv.n;
    let g = inv.g;
    let d = |k: isize| if k < 0 { 0 } else { inv.d[k as usize] };
    let recursion_residuals: Vec<i64> = (0..n)
        .map(|k| {
            let k = k as isize;
            let predicted = 2 * d(k) - d(k - 1) + (2 * g - 2) - inv.r[k as usize];
            predicted - d(k + 1)
        })
        .collect();
    let n_i = n as i64;
    let weighted: i64 = inv.r.iter().enumerate().map(|(a, r)| (n_i - a as i64) * r).sum();
    let ramrelation_residual = weighted - (n_i + 1) * inv.deg_f - n_i * (n_i + 1) * (g - 1);
    let degree_residuals: Vec<i64> =
        (0..=n).map(|rho| inv.map_deg[rho] - map_degree_from_ramification(inv.deg_f, g, &inv.r, rho)).collect();
    let pass = ramrelation_residual == 0
        && recursion_residuals.iter().all(|&x| x == 0)
        && degree_residuals.iter().all(|&x| x == 0);
    VerificationReport { recursion_residuals, ramrelation_residual, degree_residuals, pass }
}
