//! Interval operators `[lower, upper]`, their upper support maps
//! `P_T(x) = upper x+ - lower x-`, and weak solvability of
//! `B = sum_k alpha_k A_k` over interval data.
//!
//! In finite dimension every interval operator is adapted: the width
//! `upper - lower` is the sum of its single-entry matrices, which are pairwise
//! disjoint. [`adapted_decomposition`] produces that sum; nothing is gated on
//! it.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    diagonal_combination, pos_neg_parts, Band, DiagonalOrthomorphism, Operator, Point, Rational,
    Relation,
};
use crate::lp::{solve, LinearProgram, LpOutcome};
use crate::strata::{map_strata, Exec};

/// Default limit on `n` for orthant enumeration.
pub const DEFAULT_ORTHANT_BUDGET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalOperator {
    lower: Operator,
    upper: Operator,
}

impl IntervalOperator {
    pub fn new(lower: Operator, upper: Operator) -> Result<Self> {
        Error::dims("interval rows", lower.rows(), upper.rows())?;
        Error::dims("interval cols", lower.cols(), upper.cols())?;
        for i in 0..lower.rows() {
            for j in 0..lower.cols() {
                if lower.get(i, j) > upper.get(i, j) {
                    return Err(Error::InvertedInterval { row: i, col: j });
                }
            }
        }
        Ok(IntervalOperator { lower, upper })
    }

    /// The degenerate interval `[t, t]`.
    pub fn point(t: Operator) -> Self {
        IntervalOperator {
            lower: t.clone(),
            upper: t,
        }
    }

    pub fn lower(&self) -> &Operator {
        &self.lower
    }

    pub fn upper(&self) -> &Operator {
        &self.upper
    }

    pub fn rows(&self) -> usize {
        self.lower.rows()
    }

    pub fn cols(&self) -> usize {
        self.lower.cols()
    }

    pub fn contains(&self, t: &Operator) -> bool {
        self.lower.le(t) && t.le(&self.upper)
    }

    pub fn width(&self) -> Operator {
        self.upper.sub(&self.lower).expect("bounds share a shape")
    }
}

/// `P_T(x) = upper x+ - lower x-`.
pub fn sublinear_apply(t: &IntervalOperator, x: &[Rational]) -> Result<Point> {
    let (pos, neg) = pos_neg_parts(&Point::new(x.to_vec()));
    let up = t.upper.apply(pos.coords())?;
    let low = t.lower.apply(neg.coords())?;
    Ok(&up - &low)
}

/// Splits the width into disjoint single-entry addends, row-major.
pub fn adapted_decomposition(t: &IntervalOperator) -> Vec<Operator> {
    let width = t.width();
    let mut addends = Vec::new();
    for i in 0..width.rows() {
        for j in 0..width.cols() {
            let w = width.get(i, j);
            if w.is_zero() {
                continue;
            }
            let mut e = Operator::zeros(width.rows(), width.cols());
            e.set(i, j, w.clone());
            addends.push(e);
        }
    }
    addends
}

/// Multipliers with selections from each interval satisfying the equation
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSolution {
    pub alphas: Vec<DiagonalOrthomorphism>,
    pub a_selections: Vec<Operator>,
    pub b_selection: Operator,
}

impl WeakSolution {
    pub fn verify(&self, a_intervals: &[IntervalOperator], b_interval: &IntervalOperator) -> bool {
        let (m, n) = (b_interval.rows(), b_interval.cols());
        self.alphas.len() == a_intervals.len()
            && self.a_selections.len() == a_intervals.len()
            && self.alphas.iter().all(|a| a.dim() == m && a.is_positive())
            && a_intervals
                .iter()
                .zip(&self.a_selections)
                .all(|(iv, sel)| iv.contains(sel))
            && b_interval.contains(&self.b_selection)
            && diagonal_combination(&self.alphas, &self.a_selections, m, n)
                .is_ok_and(|sum| sum == self.b_selection)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakSolvability {
    Solution(WeakSolution),
    /// No weak solution; `stratum` is the first atom without one.
    NoSolution { stratum: usize },
}

fn check_family(a_intervals: &[IntervalOperator], b_interval: &IntervalOperator) -> Result<()> {
    for a in a_intervals {
        Error::dims("A_k interval rows", b_interval.rows(), a.rows())?;
        Error::dims("A_k interval cols", b_interval.cols(), a.cols())?;
    }
    Ok(())
}

/// Searches a weak interval solution with positive diagonal multipliers.
///
/// Per stratum `i`, the bilinear condition is linearized with
/// `c_k = alpha_k * (selected row of A_k)`: scaling the interval row by
/// `alpha_k >= 0` scales its bounds, so `alpha_k lower <= c_k <= alpha_k upper`
/// is exactly the set of reachable `c_k`.
pub fn find_weak_solution(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
) -> Result<WeakSolvability> {
    find_weak_solution_with(a_intervals, b_interval, Exec::Sequential)
}

pub fn find_weak_solution_with(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    exec: Exec,
) -> Result<WeakSolvability> {
    check_family(a_intervals, b_interval)?;
    let (m, n, count) = (b_interval.rows(), b_interval.cols(), a_intervals.len());
    let per_stratum = map_strata(exec, m, |i| weak_stratum(a_intervals, b_interval, i));

    let mut alphas = vec![Vec::with_capacity(m); count];
    let mut a_rows = vec![Vec::with_capacity(m); count];
    let mut b_rows = Vec::with_capacity(m);
    for (i, outcome) in per_stratum.into_iter().enumerate() {
        let Some((alpha, selections, b_row)) = outcome? else {
            return Ok(WeakSolvability::NoSolution { stratum: i });
        };
        for k in 0..count {
            alphas[k].push(alpha[k].clone());
            a_rows[k].push(selections[k].clone());
        }
        b_rows.push(b_row);
    }
    Ok(WeakSolvability::Solution(WeakSolution {
        alphas: alphas
            .into_iter()
            .map(|d| DiagonalOrthomorphism::new(Point::new(d)))
            .collect(),
        a_selections: a_rows
            .into_iter()
            .map(|rows| Operator::new(n, rows))
            .collect::<Result<_>>()?,
        b_selection: Operator::new(n, b_rows)?,
    }))
}

type StratumSelection = (Vec<Rational>, Vec<Vec<Rational>>, Vec<Rational>);

fn weak_stratum(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    i: usize,
) -> Result<Option<StratumSelection>> {
    let (n, count) = (b_interval.cols(), a_intervals.len());
    // Variables: alpha_0..alpha_{N-1} (>= 0), then c_k[j] for each k, j, then b[j].
    let c_var = |k: usize, j: usize| count + k * n + j;
    let b_var = |j: usize| count + count * n + j;
    let num_vars = count + count * n + n;
    let mut lp = LinearProgram::new(num_vars);
    for k in 0..count {
        lp.set_nonneg(k, true);
    }
    let unit = |entries: &[(usize, Rational)]| {
        let mut row = vec![Rational::zero(); num_vars];
        for (v, c) in entries {
            row[*v] = c.clone();
        }
        row
    };
    for (k, iv) in a_intervals.iter().enumerate() {
        for j in 0..n {
            let lower = iv.lower.get(i, j);
            let upper = iv.upper.get(i, j);
            lp.add_constraint(
                unit(&[(c_var(k, j), Rational::one()), (k, -lower.clone())]),
                Relation::Ge,
                Rational::zero(),
            );
            lp.add_constraint(
                unit(&[(c_var(k, j), Rational::one()), (k, -upper.clone())]),
                Relation::Le,
                Rational::zero(),
            );
        }
    }
    for j in 0..n {
        lp.add_constraint(
            unit(&[(b_var(j), Rational::one())]),
            Relation::Ge,
            b_interval.lower.get(i, j).clone(),
        );
        lp.add_constraint(
            unit(&[(b_var(j), Rational::one())]),
            Relation::Le,
            b_interval.upper.get(i, j).clone(),
        );
        let mut sum: Vec<(usize, Rational)> =
            (0..count).map(|k| (c_var(k, j), Rational::one())).collect();
        sum.push((b_var(j), -Rational::one()));
        lp.add_constraint(unit(&sum), Relation::Eq, Rational::zero());
    }
    if lp.constraints.is_empty() {
        // n == 0: every row is empty and trivially solvable.
        return Ok(Some((vec![Rational::zero(); count], vec![vec![]; count], vec![])));
    }
    let LpOutcome::Feasible(sol) = solve(&lp)? else {
        return Ok(None);
    };
    let alpha: Vec<Rational> = sol[..count].to_vec();
    let selections = (0..count)
        .map(|k| {
            if alpha[k].is_zero() {
                a_intervals[k].lower.row(i).to_vec()
            } else {
                (0..n).map(|j| &sol[c_var(k, j)] / &alpha[k]).collect()
            }
        })
        .collect();
    let b_row = (0..n).map(|j| sol[b_var(j)].clone()).collect();
    Ok(Some((alpha, selections, b_row)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalInclusion {
    Holds,
    /// `x` with `(P_{A_k}(-x))_i <= 0` for all `k` and `(P_B(x))_i < 0` for
    /// the atom `b = {i}`.
    Violation { x: Vec<Rational>, b: Band },
}

/// Checks a claimed violation by evaluating the support maps directly.
pub fn verify_violation(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    x: &[Rational],
    b: &Band,
) -> bool {
    if x.len() != b_interval.cols() || b.ambient_dim() != b_interval.rows() || b.is_empty() {
        return false;
    }
    let minus_x: Vec<Rational> = x.iter().map(|v| -v).collect();
    let premises = a_intervals.iter().all(|a| {
        sublinear_apply(a, &minus_x).is_ok_and(|p| b.members().all(|i| !p.get(i).is_positive()))
    });
    let Ok(pb) = sublinear_apply(b_interval, x) else {
        return false;
    };
    premises && b.members().any(|i| pb.get(i).is_negative())
}

/// Decides `{bP_B >= 0} ⊇ ∩_k {bP_{A_k}(-·) <= 0}` for every band `b`.
///
/// On each orthant the positive and negative parts are linear in `x`, so
/// every (stratum, sign pattern) pair is one LP feasibility problem; the
/// strict inequality is normalized to `<= -1` by homogeneity. Sign patterns
/// are visited in lexicographic order with `+` before `-`.
pub fn check_interval_inclusion(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    orthant_budget: usize,
) -> Result<IntervalInclusion> {
    check_interval_inclusion_with(a_intervals, b_interval, orthant_budget, Exec::Sequential)
}

pub fn check_interval_inclusion_with(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    orthant_budget: usize,
    exec: Exec,
) -> Result<IntervalInclusion> {
    check_family(a_intervals, b_interval)?;
    let (m, n) = (b_interval.rows(), b_interval.cols());
    if n > orthant_budget {
        return Err(Error::BudgetExceeded {
            what: "orthant enumeration dimension",
            actual: n,
            limit: orthant_budget,
        });
    }
    let per_stratum = map_strata(exec, m, |i| -> Result<Option<Vec<Rational>>> {
        for pattern in 0..(1usize << n) {
            if let Some(x) = orthant_violation(a_intervals, b_interval, i, pattern)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    });
    for (i, outcome) in per_stratum.into_iter().enumerate() {
        if let Some(x) = outcome? {
            return Ok(IntervalInclusion::Violation {
                x,
                b: Band::atom(m, i),
            });
        }
    }
    Ok(IntervalInclusion::Holds)
}

/// Bit `n - 1 - j` of `pattern` set means `x_j <= 0`, so patterns count up
/// lexicographically from all-`+`.
fn orthant_violation(
    a_intervals: &[IntervalOperator],
    b_interval: &IntervalOperator,
    i: usize,
    pattern: usize,
) -> Result<Option<Vec<Rational>>> {
    let n = b_interval.cols();
    let negative = |j: usize| pattern >> (n - 1 - j) & 1 == 1;
    // y_j = |x_j| >= 0; x+ = y on positive coordinates, x- = y on negative ones.
    let mut lp = LinearProgram::nonnegative(n);
    for a in a_intervals {
        // (P_A(-x))_i = upper . x- - lower . x+
        let row = (0..n)
            .map(|j| {
                if negative(j) {
                    a.upper.get(i, j).clone()
                } else {
                    -a.lower.get(i, j).clone()
                }
            })
            .collect();
        lp.add_constraint(row, Relation::Le, Rational::zero());
    }
    // (P_B(x))_i = upper . x+ - lower . x-
    let row = (0..n)
        .map(|j| {
            if negative(j) {
                -b_interval.lower.get(i, j).clone()
            } else {
                b_interval.upper.get(i, j).clone()
            }
        })
        .collect();
    lp.add_constraint(row, Relation::Le, -Rational::one());
    Ok(match solve(&lp)? {
        LpOutcome::Feasible(y) => Some(
            y.into_iter()
                .enumerate()
                .map(|(j, v)| if negative(j) { -v } else { v })
                .collect(),
        ),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, ints};

    fn scalar(lo: i64, hi: i64) -> IntervalOperator {
        IntervalOperator::new(Operator::from_ints(&[&[lo]]), Operator::from_ints(&[&[hi]])).unwrap()
    }

    #[test]
    fn support_map_examples() {
        let t = scalar(0, 1);
        assert_eq!(sublinear_apply(&t, &ints(&[5])).unwrap(), Point::from_ints(&[5]));
        assert_eq!(sublinear_apply(&t, &ints(&[-5])).unwrap(), Point::from_ints(&[0]));
        let d = IntervalOperator::point(Operator::from_ints(&[&[2, -1], &[0, 3]]));
        assert_eq!(
            sublinear_apply(&d, &ints(&[1, 4])).unwrap(),
            Point::from_ints(&[-2, 12])
        );
    }

    #[test]
    fn inverted_bounds_are_rejected() {
        assert!(matches!(
            IntervalOperator::new(Operator::from_ints(&[&[2]]), Operator::from_ints(&[&[1]])),
            Err(Error::InvertedInterval { row: 0, col: 0 })
        ));
    }

    #[test]
    fn decomposition_examples() {
        assert!(adapted_decomposition(&IntervalOperator::point(Operator::identity(2))).is_empty());
        let one = IntervalOperator::new(Operator::zeros(2, 2), Operator::from_ints(&[&[1, 0], &[0, 0]]))
            .unwrap();
        assert_eq!(adapted_decomposition(&one).len(), 1);
        let t = IntervalOperator::new(
            Operator::from_ints(&[&[0, -1], &[1, 1]]),
            Operator::from_ints(&[&[1, 1], &[4, 5]]),
        )
        .unwrap();
        let parts = adapted_decomposition(&t);
        assert_eq!(parts.len(), 4);
        let sum = parts
            .iter()
            .fold(Operator::zeros(2, 2), |acc, p| acc.add(p).unwrap());
        assert_eq!(sum, Operator::from_ints(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn weak_solution_examples() {
        let a = [scalar(1, 2)];
        let out = find_weak_solution(&a, &scalar(2, 4)).unwrap();
        let WeakSolvability::Solution(sol) = &out else {
            panic!("expected a weak solution");
        };
        assert!(sol.verify(&a, &scalar(2, 4)));
        assert_eq!(
            check_interval_inclusion(&a, &scalar(2, 4), DEFAULT_ORTHANT_BUDGET).unwrap(),
            IntervalInclusion::Holds
        );

        assert_eq!(
            find_weak_solution(&a, &scalar(-1, -1)).unwrap(),
            WeakSolvability::NoSolution { stratum: 0 }
        );
        let IntervalInclusion::Violation { x, b } =
            check_interval_inclusion(&a, &scalar(-1, -1), DEFAULT_ORTHANT_BUDGET).unwrap()
        else {
            panic!("expected a violation");
        };
        assert!(verify_violation(&a, &scalar(-1, -1), &x, &b));
    }

    #[test]
    fn zero_multiplier_selects_lower_row() {
        // B = [0, 0] is reached with alpha = 0, which leaves the selection free.
        let a = [scalar(3, 5)];
        let WeakSolvability::Solution(sol) = find_weak_solution(&a, &scalar(0, 0)).unwrap() else {
            panic!("expected a weak solution");
        };
        assert_eq!(sol.alphas[0].entry(0), &int(0));
        assert_eq!(sol.a_selections[0], Operator::from_ints(&[&[3]]));
    }

    #[test]
    fn budget_is_enforced() {
        let wide = IntervalOperator::point(Operator::zeros(1, 4));
        assert!(matches!(
            check_interval_inclusion(&[], &wide, 3),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(check_interval_inclusion(&[], &wide, 4).is_ok());
    }
}
