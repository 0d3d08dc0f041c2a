//! Re-evaluation of engine answers from the raw instance data.
//!
//! Nothing here calls a decision procedure or a `verify` method of the
//! engine: products, sums, moduli and sign conditions are recomputed from
//! the parsed entries with plain rational arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use orthofarkas::complex::GaussianRational;
use orthofarkas::lattice::Rational;

pub type Matrix = [Vec<Rational>];

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn apply(a: &Matrix, x: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| dot(row, x)).collect()
}

fn shape_ok(a: &Matrix, rows: usize, cols: usize) -> bool {
    a.len() == rows && a.iter().all(|r| r.len() == cols)
}

/// `sum_k w_k[i] * a_k[i][j] == target[i][j]` for every entry.
fn row_scaled_sum_is(weights: &[&[Rational]], mats: &[&Matrix], target: &Matrix) -> bool {
    let rows = target.len();
    weights.len() == mats.len()
        && weights.iter().all(|w| w.len() == rows)
        && target.iter().enumerate().all(|(i, trow)| {
            mats.iter().all(|a| a.len() == rows && a[i].len() == trow.len())
                && trow.iter().enumerate().all(|(j, t)| {
                    let s = weights
                        .iter()
                        .zip(mats)
                        .fold(Rational::zero(), |acc, (w, a)| acc + &w[i] * &a[i][j]);
                    s == *t
                })
        })
}

fn nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|e| !e.is_negative())
}

fn weighted_point_sum(weights: &[&[Rational]], points: &[&[Rational]], m: usize) -> Vec<Rational> {
    (0..m)
        .map(|i| {
            weights
                .iter()
                .zip(points)
                .fold(Rational::zero(), |acc, (w, p)| acc + &w[i] * &p[i])
        })
        .collect()
}

/// `alphas >= 0` and `B = sum diag(alpha_k) A_k`.
pub fn dominance_certificate(a_list: &[&Matrix], b: &Matrix, alphas: &[Vec<Rational>]) -> bool {
    let weights: Vec<&[Rational]> = alphas.iter().map(Vec::as_slice).collect();
    alphas.iter().all(|a| nonnegative(a)) && row_scaled_sum_is(&weights, a_list, b)
}

/// `(A_k x)_i <= 0` on `band` for all `k`, and `(Bx)_i >= 0` on `sub_band`
/// with at least one strict entry.
pub fn dominance_witness(
    a_list: &[&Matrix],
    b: &Matrix,
    x: &[Rational],
    band: &[usize],
    sub_band: &[usize],
) -> bool {
    let m = b.len();
    if band.iter().chain(sub_band).any(|&i| i >= m) || !sub_band.iter().all(|i| band.contains(i)) {
        return false;
    }
    let premises = a_list.iter().all(|a| {
        let ax = apply(a, x);
        band.iter().all(|&i| !ax[i].is_positive())
    });
    let bx = apply(b, x);
    premises
        && sub_band.iter().all(|&i| !bx[i].is_negative())
        && sub_band.iter().any(|&i| bx[i].is_positive())
}

/// Dominance certificate plus `sum alpha_k u_k <= v`.
pub fn inhomogeneous_certificate(
    a_list: &[&Matrix],
    b: &Matrix,
    u_list: &[&[Rational]],
    v: &[Rational],
    alphas: &[Vec<Rational>],
) -> bool {
    let weights: Vec<&[Rational]> = alphas.iter().map(Vec::as_slice).collect();
    dominance_certificate(a_list, b, alphas)
        && u_list.len() == alphas.len()
        && weighted_point_sum(&weights, u_list, v.len())
            .iter()
            .zip(v)
            .all(|(s, vi)| s <= vi)
}

/// `(A_k x)_i <= u_k[i]` on `band` for all `k`, `(Bx)_i > v_i` somewhere on
/// `band`.
pub fn inhomogeneous_witness(
    a_list: &[&Matrix],
    b: &Matrix,
    u_list: &[&[Rational]],
    v: &[Rational],
    x: &[Rational],
    band: &[usize],
) -> bool {
    if band.iter().any(|&i| i >= v.len()) || band.is_empty() {
        return false;
    }
    let premises = a_list.iter().zip(u_list).all(|(a, u)| {
        let ax = apply(a, x);
        band.iter().all(|&i| ax[i] <= u[i])
    });
    let bx = apply(b, x);
    premises && band.iter().any(|&i| bx[i] > v[i])
}

/// Farkas refutation of `{a_k . x <= u_k}`: `y >= 0`, `sum y_k a_k = 0`
/// and `sum y_k u_k < 0`.
pub fn infeasible_rows(rows: &[&[Rational]], rhs: &[Rational], y: &[Rational]) -> bool {
    if rows.len() != y.len() || rhs.len() != y.len() || !nonnegative(y) {
        return false;
    }
    let n = rows.first().map_or(0, |r| r.len());
    let aggregate_zero = (0..n).all(|j| {
        rows.iter()
            .zip(y)
            .fold(Rational::zero(), |acc, (r, w)| acc + w * &r[j])
            .is_zero()
    });
    aggregate_zero && dot(y, rhs).is_negative()
}

/// `alpha A = B` row by row, with `alpha >= 0` exactly on `kappa`.
pub fn reconstruction(a: &Matrix, b: &Matrix, alpha: &[Rational], kappa: &[usize]) -> bool {
    alpha.len() == a.len()
        && row_scaled_sum_is(&[alpha], &[a], b)
        && alpha.iter().enumerate().all(|(i, e)| {
            if kappa.contains(&i) {
                !e.is_negative()
            } else {
                !e.is_positive()
            }
        })
}

/// Row `i` of `b` is not a multiple of row `i` of `a`: some 2x2 minor of
/// the stacked rows is nonzero, or `a_i = 0 != b_i`.
pub fn rows_not_proportional(a: &Matrix, b: &Matrix, i: usize) -> bool {
    let (Some(ra), Some(rb)) = (a.get(i), b.get(i)) else {
        return false;
    };
    if ra.iter().all(Zero::is_zero) {
        return rb.iter().any(|e| !e.is_zero());
    }
    (0..ra.len()).any(|j| (0..ra.len()).any(|l| &ra[j] * &rb[l] != &ra[l] * &rb[j]))
}

/// `X A = B`, optionally with `X >= 0`.
pub fn left_factor(a: &Matrix, b: &Matrix, x: &Matrix, nonneg: bool) -> bool {
    if !shape_ok(x, b.len(), a.len()) || (nonneg && !x.iter().all(|r| nonnegative(r))) {
        return false;
    }
    let cols = a.first().map_or(0, |r| r.len());
    b.iter().zip(x).all(|(brow, xrow)| {
        brow.len() == cols
            && (0..cols).all(|j| {
                xrow.iter()
                    .zip(a)
                    .fold(Rational::zero(), |acc, (c, arow)| acc + c * &arow[j])
                    == brow[j]
            })
    })
}

/// `Ax = 0` and `(Bx)_row != 0`.
pub fn kernel_escape(a: &Matrix, b: &Matrix, x: &[Rational], row: usize) -> bool {
    row < b.len() && apply(a, x).iter().all(Zero::is_zero) && !dot(&b[row], x).is_zero()
}

/// `Ax <= 0` and `(Bx)_row > 0`.
pub fn cone_escape(a: &Matrix, b: &Matrix, x: &[Rational], row: usize) -> bool {
    row < b.len() && apply(a, x).iter().all(|e| !e.is_positive()) && dot(&b[row], x).is_positive()
}

/// `c` is a nonnegative combination of the rows of `m` with the given
/// weights.
pub fn conic_combination(m: &Matrix, c: &[Rational], weights: &[Rational]) -> bool {
    weights.len() == m.len()
        && nonnegative(weights)
        && (0..c.len()).all(|j| {
            m.iter()
                .zip(weights)
                .fold(Rational::zero(), |acc, (r, w)| acc + w * &r[j])
                == c[j]
        })
}

/// `upper x+ - lower x-`.
pub fn support(lower: &Matrix, upper: &Matrix, x: &[Rational]) -> Vec<Rational> {
    let pos: Vec<Rational> = x.iter().map(|e| e.clone().max(Rational::zero())).collect();
    let neg: Vec<Rational> = x.iter().map(|e| (-e).max(Rational::zero())).collect();
    apply(upper, &pos)
        .into_iter()
        .zip(apply(lower, &neg))
        .map(|(a, b)| a - b)
        .collect()
}

fn within(lower: &Matrix, upper: &Matrix, t: &Matrix) -> bool {
    shape_ok(t, lower.len(), lower.first().map_or(0, |r| r.len()))
        && t.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| lower[i][j] <= *e && *e <= upper[i][j])
        })
}

pub struct IntervalData<'a> {
    pub lower: &'a Matrix,
    pub upper: &'a Matrix,
}

/// Selections lie in their intervals and `B_sel = sum diag(alpha_k) A_sel_k`.
pub fn weak_solution(
    a_list: &[IntervalData],
    b: &IntervalData,
    alphas: &[Vec<Rational>],
    a_selections: &[&Matrix],
    b_selection: &Matrix,
) -> bool {
    let weights: Vec<&[Rational]> = alphas.iter().map(Vec::as_slice).collect();
    a_list.len() == a_selections.len()
        && a_list
            .iter()
            .zip(a_selections)
            .all(|(iv, sel)| within(iv.lower, iv.upper, sel))
        && within(b.lower, b.upper, b_selection)
        && alphas.iter().all(|a| nonnegative(a))
        && row_scaled_sum_is(&weights, a_selections, b_selection)
}

/// `P_{A_k}(-x)_i <= 0` for all `k` and `P_B(x)_i < 0` at the atom `i`.
pub fn support_violation(a_list: &[IntervalData], b: &IntervalData, x: &[Rational], i: usize) -> bool {
    let minus: Vec<Rational> = x.iter().map(|e| -e).collect();
    i < b.lower.len()
        && a_list
            .iter()
            .all(|a| !support(a.lower, a.upper, &minus)[i].is_positive())
        && support(b.lower, b.upper, x)[i].is_negative()
}

pub type ComplexMatrix = [Vec<GaussianRational>];

fn cmul(a: &GaussianRational, b: &GaussianRational) -> (Rational, Rational) {
    (&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
}

/// `B = sum diag(c_k) A_k` in Gaussian-rational arithmetic.
pub fn complex_identity(a_list: &[&ComplexMatrix], b: &ComplexMatrix, c_list: &[Vec<GaussianRational>]) -> bool {
    a_list.len() == c_list.len()
        && c_list.iter().all(|c| c.len() == b.len())
        && b.iter().enumerate().all(|(i, brow)| {
            brow.iter().enumerate().all(|(j, target)| {
                let (mut re, mut im) = (Rational::zero(), Rational::zero());
                for (a, c) in a_list.iter().zip(c_list) {
                    let (r, s) = cmul(&c[i], &a[i][j]);
                    re += r;
                    im += s;
                }
                re == target.re && im == target.im
            })
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    AtMost,
    Exceeds,
    Unresolved,
}

/// Floor of `sqrt(q)` on the grid `1/scale`, or the exact root when `q` is a
/// rational square. Returns `(lower, upper)`.
fn root_bounds(q: &Rational, scale: &BigInt) -> (Rational, Rational) {
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &rn * &rn == *n && &rd * &rd == *d {
        let r = Rational::new(rn, rd);
        return (r.clone(), r);
    }
    let s = (q * Rational::from_integer(scale * scale)).floor().to_integer().sqrt();
    (Rational::new(s.clone(), scale.clone()), Rational::new(s + 1, scale.clone()))
}

/// Compares `sum_k |c_k| u_k` with `bound` using enclosures no wider than
/// `finest` per term.
pub fn modulus_sum(c: &[GaussianRational], u: &[Rational], bound: &Rational, finest: &Rational) -> Comparison {
    let mut scale = BigInt::one();
    while Rational::new(BigInt::one(), scale.clone()) > *finest {
        scale <<= 1;
    }
    let (mut lo, mut hi) = (Rational::zero(), Rational::zero());
    for (z, w) in c.iter().zip(u) {
        let (l, h) = root_bounds(&(&z.re * &z.re + &z.im * &z.im), &scale);
        lo += l * w;
        hi += h * w;
    }
    if hi <= *bound {
        Comparison::AtMost
    } else if lo > *bound {
        Comparison::Exceeds
    } else {
        Comparison::Unresolved
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn moduli_compare_exactly_on_squares() {
        let z = GaussianRational::new(r(3), r(4));
        let tiny = Rational::new(1.into(), 1000.into());
        assert_eq!(modulus_sum(&[z.clone()], &[r(1)], &r(5), &tiny), Comparison::AtMost);
        assert_eq!(
            modulus_sum(&[z], &[r(1)], &Rational::new(49.into(), 10.into()), &tiny),
            Comparison::Exceeds
        );
        let w = GaussianRational::new(r(1), r(1));
        assert_eq!(modulus_sum(&[w.clone()], &[r(1)], &r(1), &tiny), Comparison::Exceeds);
        assert_eq!(
            modulus_sum(&[w.clone()], &[r(1)], &Rational::new(141.into(), 100.into()), &tiny),
            Comparison::Exceeds
        );
        assert_eq!(modulus_sum(&[w.clone()], &[r(1)], &Rational::new(71.into(), 50.into()), &tiny), Comparison::AtMost);
        assert_eq!(modulus_sum(&[w], &[r(1)], &Rational::new(71.into(), 50.into()), &r(1)), Comparison::Unresolved);
    }

    #[test]
    fn support_of_degenerate_interval_is_linear() {
        let a = vec![vec![r(1), r(-2)]];
        assert_eq!(support(&a, &a, &[r(3), r(-1)]), vec![r(5)]);
    }

    #[test]
    fn proportional_rows() {
        let a = vec![vec![r(1), r(2)]];
        assert!(!rows_not_proportional(&a, &[vec![r(-2), r(-4)]], 0));
        assert!(rows_not_proportional(&a, &[vec![r(1), r(1)]], 0));
        assert!(rows_not_proportional(&[vec![r(0), r(0)]], &[vec![r(0), r(1)]], 0));
    }
}
