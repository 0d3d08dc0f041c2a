//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::lattice::Rational;

/// Reduced row echelon form of `rows` (each of length `cols`) together with
/// the pivot column of every nonzero row.
pub fn rref(rows: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// A basis of `{x : rows * x = 0}`, one vector per free column, in
/// increasing order of the free column.
pub fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some `lambda` with `sum_i lambda[i] * rows[i] == target`, if one exists.
pub fn solve_left(rows: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let p = rows.len();
    let n = target.len();
    // Columns of the transposed system are the rows; augment with the target.
    let system: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut eq: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
            eq.push(target[j].clone());
            eq
        })
        .collect();
    let (reduced, pivots) = rref(&system, p + 1);
    if pivots.last() == Some(&p) {
        return None;
    }
    let mut lambda = vec![Rational::zero(); p];
    for (row, &c) in reduced.iter().zip(&pivots) {
        lambda[c] = row[p].clone();
    }
    Some(lambda)
}
