//! Exact determinants and ranks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Result;
use crate::poly::Poly;
use crate::scalar::GaussianRational;

/// Determinant of a square polynomial matrix (row-major) by fraction-free
/// Bareiss elimination. Every intermediate division is exact in the
/// polynomial ring, so no rational functions appear.
pub fn poly_det(mut m: Vec<Vec<Poly>>) -> Result<Poly> {
    let size = m.len();
    debug_assert!(m.iter().all(|row| row.len() == size));
    if size == 0 {
        return Ok(Poly::one());
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..size - 1 {
        let Some(pivot) = (k..size).find(|&i| !m[i][k].is_zero()) else {
            return Ok(Poly::zero());
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.divexact(&prev)?;
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Minors of a polynomial table using its leading columns: entry `j` of the
/// result lists, for every lexicographic `(j+1)`-subset of rows, the
/// determinant of those rows against columns `0..=j`. Each minor is expanded
/// along its last column against the memoized minors one size smaller, so
/// only ring operations are used.
pub fn leading_column_minors(table: &[Vec<Poly>], cols: usize) -> Vec<Vec<Poly>> {
    let rows = table.len();
    debug_assert!(table.iter().all(|row| row.len() >= cols));
    let mut prev: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
    prev.insert(Vec::new(), Poly::one());
    let mut out = Vec::with_capacity(cols);
    for j in 0..cols.min(rows) {
        let column = table.iter().map(|row| &row[j]).collect::<Vec<_>>();
        let mut cur = BTreeMap::new();
        let mut level = Vec::new();
        for subset in combinations(rows, j + 1) {
            let mut acc = Poly::zero();
            for t in 0..subset.len() {
                let entry = column[subset[t]];
                if entry.is_zero() {
                    continue;
                }
                let mut rest = subset.clone();
                rest.remove(t);
                let term = entry * &prev[&rest];
                // Sign of the cofactor at (t, j) within the (j+1)×(j+1) minor.
                acc = if (t + j) % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            level.push(acc.clone());
            cur.insert(subset, acc);
        }
        out.push(level);
        prev = cur;
    }
    out
}

/// Rank of a scalar matrix by Gaussian elimination.
pub fn scalar_rank(mut m: Vec<Vec<GaussianRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(pivot, rank);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        for i in rank + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            let (upper, lower) = m.split_at_mut(i);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[rank][col..]) {
                *x -= &(&factor * p);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Lexicographic `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
