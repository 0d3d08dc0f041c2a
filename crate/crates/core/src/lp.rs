//! Exact rational linear programming.
//!
//! A dense two-phase simplex over [`Rational`] with Bland's rule for both the
//! entering and the leaving variable. Phase one starts from an all-artificial
//! basis; the artificial columns are kept in the tableau for the whole solve,
//! so they always hold the current basis inverse and dual vectors can be read
//! off directly. That gives the Farkas multipliers for infeasible systems and
//! a dual optimal solution for bounded ones.
//!
//! Every outcome can be re-checked with [`check_outcome`], which only uses
//! the original program data.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, is_zero_row, Rational, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
}

/// `optimize objective subject to constraints`, each variable either free or
/// sign-constrained to be nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Option<Objective>,
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    /// A program over `num_vars` free variables with no constraints yet.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
            objective: None,
            nonneg: vec![false; num_vars],
        }
    }

    /// A program over `num_vars` nonnegative variables.
    pub fn nonnegative(num_vars: usize) -> Self {
        LinearProgram {
            nonneg: vec![true; num_vars],
            ..LinearProgram::new(num_vars)
        }
    }

    pub fn set_nonneg(&mut self, var: usize, nonneg: bool) {
        self.nonneg[var] = nonneg;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, rel, rhs });
    }

    pub fn set_objective(&mut self, coeffs: Vec<Rational>, sense: Sense) {
        self.objective = Some(Objective { coeffs, sense });
    }

    pub fn validate(&self) -> Result<()> {
        Error::dims("nonneg flags", self.num_vars, self.nonneg.len())?;
        for c in &self.constraints {
            Error::dims("constraint row", self.num_vars, c.coeffs.len())?;
        }
        if let Some(obj) = &self.objective {
            Error::dims("objective row", self.num_vars, obj.coeffs.len())?;
        }
        if self.constraints.is_empty() && self.objective.is_none() {
            return Err(Error::EmptyProgram);
        }
        Ok(())
    }

    /// Whether `x` satisfies every constraint and sign restriction exactly.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && self
                .nonneg
                .iter()
                .zip(x)
                .all(|(&nn, v)| !nn || !v.is_negative())
            && self
                .constraints
                .iter()
                .all(|c| c.rel.holds(&dot(&c.coeffs, x), &c.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// No objective was given and the constraints are satisfiable.
    Feasible(Vec<Rational>),
    /// `duals` has one entry per constraint and certifies optimality, see
    /// [`check_outcome`] for the sign convention.
    Optimal {
        point: Vec<Rational>,
        value: Rational,
        duals: Vec<Rational>,
    },
    /// One multiplier per constraint: `>= 0` on `<=` rows, `<= 0` on `>=`
    /// rows, any sign on `=` rows. The aggregated row vanishes on free
    /// variables, is `>= 0` on nonnegative ones, and the aggregated
    /// right-hand side is negative.
    Infeasible(Vec<Rational>),
    /// `point` is feasible, `ray` is in the recession cone and strictly
    /// improves the objective.
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
}

/// Pivot counters for one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub phase_one_pivots: usize,
    pub phase_two_pivots: usize,
    pub tableau_rows: usize,
    pub tableau_cols: usize,
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    solve_with_stats(lp).map(|(outcome, _)| outcome)
}

pub fn solve_with_stats(lp: &LinearProgram) -> Result<(LpOutcome, SolveStats)> {
    lp.validate()?;
    let mut tab = Tableau::build(lp);
    let mut stats = SolveStats {
        tableau_rows: tab.rows.len(),
        tableau_cols: tab.num_cols,
        ..SolveStats::default()
    };

    let phase_one_cost: Vec<Rational> = (0..tab.num_cols)
        .map(|j| {
            if j >= tab.art_start {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match tab.run(&phase_one_cost, &mut stats.phase_one_pivots) {
        Phase::Optimal => {}
        Phase::Unbounded(_) => unreachable!("phase one objective is bounded below by zero"),
    }
    let infeasibility = tab.objective_value(&phase_one_cost);
    if infeasibility.is_positive() {
        // y^T A' <= 0 on every non-artificial column and y^T r' > 0, so -y is
        // the Farkas vector of the sign-normalized system.
        let y = tab.duals(&phase_one_cost);
        let multipliers = y
            .iter()
            .zip(&tab.row_sign)
            .map(|(yi, s)| -(yi * s))
            .collect();
        return Ok((LpOutcome::Infeasible(multipliers), stats));
    }
    tab.expel_artificials(&mut stats.phase_one_pivots);

    let Some(objective) = &lp.objective else {
        return Ok((LpOutcome::Feasible(tab.point()), stats));
    };
    let min_coeffs: Vec<Rational> = match objective.sense {
        Sense::Min => objective.coeffs.clone(),
        Sense::Max => objective.coeffs.iter().map(|c| -c).collect(),
    };
    let mut cost = vec![Rational::zero(); tab.num_cols];
    for (j, c) in min_coeffs.iter().enumerate() {
        let (pos, neg) = tab.var_cols[j];
        cost[pos] = c.clone();
        if let Some(neg) = neg {
            cost[neg] = -c;
        }
    }
    let outcome = match tab.run(&cost, &mut stats.phase_two_pivots) {
        Phase::Optimal => {
            let point = tab.point();
            let value = dot(&objective.coeffs, &point);
            let flip = match objective.sense {
                Sense::Min => Rational::one(),
                Sense::Max => -Rational::one(),
            };
            let duals = tab
                .duals(&cost)
                .iter()
                .zip(&tab.row_sign)
                .map(|(yi, s)| yi * s * &flip)
                .collect();
            LpOutcome::Optimal {
                point,
                value,
                duals,
            }
        }
        Phase::Unbounded(entering) => LpOutcome::Unbounded {
            point: tab.point(),
            ray: tab.ray(entering),
        },
    };
    Ok((outcome, stats))
}

/// Re-verifies an outcome against the program using only the program data.
///
/// For `Optimal`, the duals `y` must satisfy weak duality with equality: for
/// a minimization `y_i >= 0` on `>=` rows and `<= 0` on `<=` rows, `y^T A`
/// equals the cost on free variables and is at most the cost on nonnegative
/// ones, and `y^T r` equals the value. Maximization mirrors every inequality.
pub fn check_outcome(lp: &LinearProgram, outcome: &LpOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    let n = lp.num_vars;
    match outcome {
        LpOutcome::Feasible(x) => lp.objective.is_none() && lp.is_feasible(x),
        LpOutcome::Optimal {
            point,
            value,
            duals,
        } => {
            let Some(obj) = &lp.objective else {
                return false;
            };
            if !lp.is_feasible(point) || dot(&obj.coeffs, point) != *value {
                return false;
            }
            if duals.len() != lp.constraints.len() {
                return false;
            }
            // Work in minimization form.
            let sign = match obj.sense {
                Sense::Min => Rational::one(),
                Sense::Max => -Rational::one(),
            };
            let cost: Vec<Rational> = obj.coeffs.iter().map(|c| c * &sign).collect();
            let y: Vec<Rational> = duals.iter().map(|d| d * &sign).collect();
            let signs_ok = lp.constraints.iter().zip(&y).all(|(c, yi)| match c.rel {
                Relation::Le => !yi.is_positive(),
                Relation::Ge => !yi.is_negative(),
                Relation::Eq => true,
            });
            let agg = aggregate(lp, &y);
            let reduced_ok = (0..n).all(|j| {
                if lp.nonneg[j] {
                    agg[j] <= cost[j]
                } else {
                    agg[j] == cost[j]
                }
            });
            let rhs: Rational = lp
                .constraints
                .iter()
                .zip(&y)
                .fold(Rational::zero(), |acc, (c, yi)| acc + &c.rhs * yi);
            signs_ok && reduced_ok && rhs == value * &sign
        }
        LpOutcome::Infeasible(y) => is_farkas_certificate(lp, y),
        LpOutcome::Unbounded { point, ray } => {
            let Some(obj) = &lp.objective else {
                return false;
            };
            if !lp.is_feasible(point) || ray.len() != n {
                return false;
            }
            let cone_ok = lp.nonneg.iter().zip(ray).all(|(&nn, d)| !nn || !d.is_negative())
                && lp.constraints.iter().all(|c| {
                    c.rel.holds(&dot(&c.coeffs, ray), &Rational::zero())
                });
            let slope = dot(&obj.coeffs, ray);
            let improving = match obj.sense {
                Sense::Min => slope.is_negative(),
                Sense::Max => slope.is_positive(),
            };
            cone_ok && improving
        }
    }
}

/// Checks the infeasibility certificate contract documented on
/// [`LpOutcome::Infeasible`].
pub fn is_farkas_certificate(lp: &LinearProgram, y: &[Rational]) -> bool {
    if y.len() != lp.constraints.len() {
        return false;
    }
    let signs_ok = lp.constraints.iter().zip(y).all(|(c, yi)| match c.rel {
        Relation::Le => !yi.is_negative(),
        Relation::Ge => !yi.is_positive(),
        Relation::Eq => true,
    });
    let agg = aggregate(lp, y);
    let row_ok = (0..lp.num_vars).all(|j| {
        if lp.nonneg[j] {
            !agg[j].is_negative()
        } else {
            agg[j].is_zero()
        }
    });
    let rhs = lp
        .constraints
        .iter()
        .zip(y)
        .fold(Rational::zero(), |acc, (c, yi)| acc + &c.rhs * yi);
    signs_ok && row_ok && rhs.is_negative()
}

fn aggregate(lp: &LinearProgram, y: &[Rational]) -> Vec<Rational> {
    let mut agg = vec![Rational::zero(); lp.num_vars];
    for (c, yi) in lp.constraints.iter().zip(y) {
        if yi.is_zero() {
            continue;
        }
        for (a, coeff) in agg.iter_mut().zip(&c.coeffs) {
            *a += coeff * yi;
        }
    }
    agg
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

/// Dense simplex tableau for `A' x' = r'`, `x' >= 0`, `r' >= 0`.
///
/// Column layout: structural columns (one per nonnegative variable, two per
/// free variable), then slack/surplus columns, then one artificial column
/// per original row. The last entry of each row is the right-hand side.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// `+1` or `-1`: the factor applied to make the right-hand side nonnegative.
    row_sign: Vec<Rational>,
    var_cols: Vec<(usize, Option<usize>)>,
    art_start: usize,
    num_cols: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0;
        for &nn in &lp.nonneg {
            if nn {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let num_structural = next;
        let num_slacks = lp
            .constraints
            .iter()
            .filter(|c| c.rel != Relation::Eq)
            .count();
        let m = lp.constraints.len();
        let art_start = num_structural + num_slacks;
        let num_cols = art_start + m;

        let mut rows = Vec::with_capacity(m);
        let mut row_sign = Vec::with_capacity(m);
        let mut slack = num_structural;
        for (i, c) in lp.constraints.iter().enumerate() {
            let flip = c.rhs.is_negative();
            let s = if flip { -Rational::one() } else { Rational::one() };
            let rel = if flip { c.rel.flipped() } else { c.rel };
            let mut row = vec![Rational::zero(); num_cols + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                let (pos, neg) = var_cols[j];
                row[pos] = a * &s;
                if let Some(neg) = neg {
                    row[neg] = -(a * &s);
                }
            }
            match rel {
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[art_start + i] = Rational::one();
            row[num_cols] = &c.rhs * &s;
            rows.push(row);
            row_sign.push(s);
        }
        Tableau {
            rows,
            basis: (art_start..num_cols).collect(),
            row_sign,
            var_cols,
            art_start,
            num_cols,
        }
    }

    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.num_cols]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        debug_assert!(!p.is_zero());
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = e;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (dj, v) in d.iter_mut().zip(row) {
                if !v.is_zero() {
                    *dj -= cb * v;
                }
            }
        }
        d
    }

    /// Bland's rule simplex; artificial columns never enter.
    fn run(&mut self, cost: &[Rational], pivots: &mut usize) -> Phase {
        loop {
            let d = self.reduced_costs(cost);
            let Some(e) = (0..self.art_start).find(|&j| d[j].is_negative()) else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Phase::Unbounded(e);
            };
            self.pivot(r, e);
            *pivots += 1;
        }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (r, &b)| acc + &cost[b] * self.rhs(r))
    }

    /// `c_B B^{-1}` indexed by original row, read from the artificial columns.
    fn duals(&self, cost: &[Rational]) -> Vec<Rational> {
        let m = self.row_sign.len();
        (0..m)
            .map(|i| {
                let col = self.art_start + i;
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(Rational::zero(), |acc, (row, &b)| acc + &cost[b] * &row[col])
            })
            .collect()
    }

    /// After a zero-infeasibility phase one, pivots basic artificials out or
    /// drops their rows when they are linearly redundant.
    fn expel_artificials(&mut self, pivots: &mut usize) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.art_start {
                r += 1;
                continue;
            }
            match (0..self.art_start).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    *pivots += 1;
                    r += 1;
                }
                None => {
                    debug_assert!(is_zero_row(&self.rows[r][..self.art_start]));
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }

    fn structural_values(&self) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.art_start];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.art_start {
                values[b] = self.rhs(r).clone();
            }
        }
        values
    }

    fn to_original(&self, values: &[Rational]) -> Vec<Rational> {
        self.var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect()
    }

    fn point(&self) -> Vec<Rational> {
        self.to_original(&self.structural_values())
    }

    fn ray(&self, entering: usize) -> Vec<Rational> {
        let mut dir = vec![Rational::zero(); self.art_start];
        dir[entering] = Rational::one();
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.art_start {
                dir[b] = -self.rows[r][entering].clone();
            }
        }
        self.to_original(&dir)
    }
}

/// Outcome of [`conic_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeMembership {
    /// `alphas[k] >= 0` and `sum_k alphas[k] * generators[k] == target`.
    Multipliers(Vec<Rational>),
    /// `generators[k] . y <= 0` for all `k` and `target . y > 0`.
    SeparatingVector(Vec<Rational>),
}

/// Decides whether `target` lies in the convex cone spanned by `generators`.
///
/// This is the scalar Farkas lemma in both directions: membership is
/// equivalent to the inclusion `{target <= 0} ⊇ ∩_k {generators[k] <= 0}`,
/// and a separating vector is a point of the right-hand side that escapes
/// the left-hand side.
pub fn conic_membership(generators: &[Vec<Rational>], target: &[Rational]) -> Result<ConeMembership> {
    let n = target.len();
    for g in generators {
        Error::dims("conic generator", n, g.len())?;
    }
    if n == 0 {
        return Ok(ConeMembership::Multipliers(vec![Rational::zero(); generators.len()]));
    }
    let mut lp = LinearProgram::nonnegative(generators.len());
    for j in 0..n {
        lp.add_constraint(
            generators.iter().map(|g| g[j].clone()).collect(),
            Relation::Eq,
            target[j].clone(),
        );
    }
    Ok(match solve(&lp)? {
        LpOutcome::Feasible(alphas) => ConeMembership::Multipliers(alphas),
        LpOutcome::Infeasible(y) => {
            ConeMembership::SeparatingVector(y.into_iter().map(|v| -v).collect())
        }
        other => unreachable!("feasibility program returned {other:?}"),
    })
}

/// Re-checks a [`ConeMembership`] answer by direct multiplication.
pub fn check_membership(
    generators: &[Vec<Rational>],
    target: &[Rational],
    answer: &ConeMembership,
) -> bool {
    let n = target.len();
    if generators.iter().any(|g| g.len() != n) {
        return false;
    }
    match answer {
        ConeMembership::Multipliers(alphas) => {
            if alphas.len() != generators.len() || alphas.iter().any(Signed::is_negative) {
                return false;
            }
            (0..n).all(|j| {
                let s = generators
                    .iter()
                    .zip(alphas)
                    .fold(Rational::zero(), |acc, (g, a)| acc + a * &g[j]);
                s == target[j]
            })
        }
        ConeMembership::SeparatingVector(y) => {
            y.len() == n
                && generators.iter().all(|g| !dot(g, y).is_positive())
                && dot(target, y).is_positive()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, ints};

    #[test]
    fn single_equation_is_feasible() {
        let mut lp = LinearProgram::nonnegative(1);
        lp.add_constraint(ints(&[1]), Relation::Eq, int(2));
        let out = solve(&lp).unwrap();
        assert_eq!(out, LpOutcome::Feasible(ints(&[2])));
        assert!(check_outcome(&lp, &out));
    }

    #[test]
    fn negative_target_in_orthant_is_infeasible() {
        // alpha*(1,0) + beta*(0,1) = (-1,0), alpha, beta >= 0.
        let mut lp = LinearProgram::nonnegative(2);
        lp.add_constraint(ints(&[1, 0]), Relation::Eq, int(-1));
        lp.add_constraint(ints(&[0, 1]), Relation::Eq, int(0));
        let out = solve(&lp).unwrap();
        let LpOutcome::Infeasible(y) = &out else {
            panic!("expected infeasible, got {out:?}");
        };
        // By hand: the first row alone gives alpha = -1 < 0, so any valid
        // certificate weights the first row positively against a negative rhs.
        assert!(y[0].is_positive());
        assert!(is_farkas_certificate(&lp, y));
    }

    #[test]
    fn free_maximization_is_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(ints(&[1]), Sense::Max);
        let out = solve(&lp).unwrap();
        assert_eq!(
            out,
            LpOutcome::Unbounded {
                point: ints(&[0]),
                ray: ints(&[1])
            }
        );
        assert!(check_outcome(&lp, &out));
    }

    #[test]
    fn bounded_optimum_with_duals() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0: optimum at (8/5, 6/5).
        let mut lp = LinearProgram::nonnegative(2);
        lp.add_constraint(ints(&[1, 2]), Relation::Le, int(4));
        lp.add_constraint(ints(&[3, 1]), Relation::Le, int(6));
        lp.set_objective(ints(&[1, 1]), Sense::Max);
        let out = solve(&lp).unwrap();
        match &out {
            LpOutcome::Optimal { point, value, .. } => {
                assert_eq!(point, &vec![crate::lattice::rat(8, 5), crate::lattice::rat(6, 5)]);
                assert_eq!(value, &crate::lattice::rat(14, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_outcome(&lp, &out));
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut lp = LinearProgram::nonnegative(2);
        lp.add_constraint(ints(&[1, 1]), Relation::Eq, int(2));
        lp.add_constraint(ints(&[2, 2]), Relation::Eq, int(4));
        lp.set_objective(ints(&[1, 0]), Sense::Min);
        let out = solve(&lp).unwrap();
        assert!(check_outcome(&lp, &out));
        assert!(matches!(out, LpOutcome::Optimal { ref value, .. } if value.is_zero()));
    }

    #[test]
    fn malformed_programs_are_rejected() {
        let mut lp = LinearProgram::new(2);
        assert_eq!(solve(&lp), Err(Error::EmptyProgram));
        lp.add_constraint(ints(&[1]), Relation::Le, int(0));
        assert!(matches!(solve(&lp), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn membership_examples() {
        let gens = vec![ints(&[1, 0]), ints(&[0, 1])];
        assert_eq!(
            conic_membership(&gens, &ints(&[2, 3])).unwrap(),
            ConeMembership::Multipliers(ints(&[2, 3]))
        );

        let gens = vec![ints(&[1, 0])];
        let target = ints(&[0, 1]);
        let ans = conic_membership(&gens, &target).unwrap();
        assert!(matches!(ans, ConeMembership::SeparatingVector(_)));
        assert!(check_membership(&gens, &target, &ans));
        // The hand-computed separator (0,1) is itself a valid answer.
        assert!(check_membership(
            &gens,
            &target,
            &ConeMembership::SeparatingVector(ints(&[0, 1]))
        ));

        assert_eq!(
            conic_membership(&[], &ints(&[0, 0])).unwrap(),
            ConeMembership::Multipliers(vec![])
        );
        assert!(matches!(
            conic_membership(&[], &ints(&[0, 1])).unwrap(),
            ConeMembership::SeparatingVector(_)
        ));
    }
}
