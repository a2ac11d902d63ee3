#![allow(dead_code)]

use isoindex_core::harmonic::level_minors;
use isoindex_core::{GaussianRational, Poly, ProjectiveCurve, RationalSelfMap};
use rand::Rng;

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn veronese() -> ProjectiveCurve {
    ProjectiveCurve::new(2, vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]).unwrap()
}

pub fn cubic() -> ProjectiveCurve {
    ProjectiveCurve::new(2, vec![p(&[1]), p(&[0, 1, 0, 1]), p(&[0, 0, 1])]).unwrap()
}

/// `[1, z, …, z^n]`.
pub fn rational_normal_curve(n: usize) -> ProjectiveCurve {
    let comps = (0..=n).map(|k| Poly::monomial(GaussianRational::from_int(1), k)).collect();
    ProjectiveCurve::new(n, comps).unwrap()
}

pub fn eta(k: usize) -> RationalSelfMap {
    RationalSelfMap::power(k).unwrap()
}

/// Square-free decomposition by Yun's algorithm: `monic(f) = Π a_i^i`, returning
/// the nonconstant `(a_i, i)`.
pub fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df).unwrap();
    let mut b = f.divexact(&a0).unwrap();
    let c = df.divexact(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).unwrap();
        b = b.divexact(&a).unwrap();
        let c = d.divexact(&a).unwrap();
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn degree(p: &Poly) -> usize {
    p.degree().finite().unwrap()
}

fn level_gcds(c: &ProjectiveCurve) -> Vec<Poly> {
    (0..=c.n()).map(|k| Poly::gcd_all(&level_minors(c, k).unwrap()).unwrap()).collect()
}

/// Second differences of a vanishing-order profile `v_0..=v_n` (with `v_{-1} = 0`).
fn local_ramification(v: &[usize]) -> Vec<i64> {
    let at = |k: isize| if k < 0 { 0 } else { v[k as usize] as i64 };
    (0..v.len() - 1)
        .map(|k| {
            let k = k as isize;
            at(k + 1) - 2 * at(k) + at(k - 1)
        })
        .collect()
}

/// Total ramification indices obtained point by point: every finite zero of a
/// level gcd is grouped with the points sharing its multiplicity profile
/// across all levels, its local indices are read off that profile, and the
/// results are summed with the point at infinity (valuations in `w = 1/z`).
/// Panics if any local index is negative.
pub fn ramification_by_points(c: &ProjectiveCurve) -> Vec<i64> {
    let n = c.n();
    // Pairwise coprime square-free pieces, each with one multiplicity per level.
    let mut pieces: Vec<(Poly, Vec<usize>)> = Vec::new();
    for (k, g) in level_gcds(c).iter().enumerate() {
        for (factor, mult) in square_free(g) {
            let mut rest = factor;
            let mut next = Vec::new();
            for (piece, mults) in pieces.drain(..) {
                let h = piece.gcd(&rest).unwrap();
                if h.is_constant() {
                    next.push((piece, mults));
                    continue;
                }
                let outside = piece.divexact(&h).unwrap();
                rest = rest.divexact(&h).unwrap();
                let mut inside = mults.clone();
                inside[k] = mult;
                next.push((h, inside));
                if !outside.is_constant() {
                    next.push((outside, mults));
                }
            }
            if !rest.is_constant() {
                let mut mults = vec![0; n + 1];
                mults[k] = mult;
                next.push((rest, mults));
            }
            pieces = next;
        }
    }

    let mut totals = vec![0i64; n];
    let mut add_point = |profile: &[usize], weight: usize| {
        for (j, r) in local_ramification(profile).into_iter().enumerate() {
            assert!(r >= 0, "negative local ramification {r} at level {j} for {c}");
            totals[j] += weight as i64 * r;
        }
    };
    for (piece, mults) in &pieces {
        add_point(mults, degree(piece));
    }
    let at_infinity: Vec<usize> = level_gcds(&c.chart_flip()).iter().map(|g| g.valuation_at_zero().unwrap()).collect();
    add_point(&at_infinity, 1);
    totals
}

/// Random full curve: `n ≤ max_n`, component degrees `≤ max_deg`, integer
/// coefficients in `[-coeff, coeff]`.
pub fn random_full_curve<R: Rng>(rng: &mut R, max_n: usize, max_deg: usize, coeff: i64) -> ProjectiveCurve {
    loop {
        let n = rng.gen_range(1..=max_n);
        let comps: Vec<Poly> = (0..=n)
            .map(|_| {
                let deg = rng.gen_range(0..=max_deg);
                Poly::from_ints(&(0..=deg).map(|_| rng.gen_range(-coeff..=coeff)).collect::<Vec<_>>())
            })
            .collect();
        let Ok(c) = ProjectiveCurve::new(n, comps) else { continue };
        if c.checked_is_full().unwrap() {
            return c;
        }
    }
}
