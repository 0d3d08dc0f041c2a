//! Operator Farkas theorems over `Y = Q^m`, decided stratum by stratum.
//!
//! # Reduction to atoms
//!
//! The homogeneous condition quantifies over every band `b`:
//! `{bB <= 0} ⊇ ∩_k {bA_k <= 0}`. In `Q^m` the base is atomic, and the
//! condition for all bands is equivalent to the condition for the atoms
//! `{i}` alone. One direction is the special case `b = {i}`. For the other,
//! suppose the atomic inclusions hold and `bA_k x <= 0` for all `k`. For each
//! `i` in `b` that says `(A_k x)_i <= 0` for all `k`, which is the hypothesis
//! of the atomic inclusion at `i`, hence `(Bx)_i <= 0`; coordinates outside
//! `b` are zero on both sides. So `bBx <= 0`.
//!
//! The atomic inclusion at `i` only involves the `i`-th rows, so it is the
//! scalar Farkas lemma for the functionals `row_i(A_k)` and `row_i(B)`: it
//! holds iff `row_i(B)` is a nonnegative combination of the `row_i(A_k)`.
//! Collecting the combination weights over all `i` gives diagonal
//! multipliers `alpha_k` with `B = sum_k alpha_k A_k`. The inhomogeneous and
//! matrix variants decompose the same way, using the affine Farkas lemma per
//! stratum.
//!
//! Only inequality systems are accepted. Equality-constrained versions of
//! these statements are not theorems in general and have no entry point here.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    apply_band, diagonal_combination, diagonal_combination_points, dot, is_zero_row, Band,
    DiagonalOrthomorphism, Operator, Point, Rational, Relation,
};
use crate::linalg::{null_space, solve_left};
use crate::lp::{conic_membership, solve, ConeMembership, LinearProgram, LpOutcome, Sense};
use crate::strata::{map_strata, Exec};

/// Data of the homogeneous dominance problem: `A_1, .., A_N` and `B`, all
/// `m x n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousInstance {
    a_list: Vec<Operator>,
    b: Operator,
}

impl HomogeneousInstance {
    pub fn new(a_list: Vec<Operator>, b: Operator) -> Result<Self> {
        for a in &a_list {
            Error::dims("A_k rows", b.rows(), a.rows())?;
            Error::dims("A_k cols", b.cols(), a.cols())?;
        }
        Ok(HomogeneousInstance { a_list, b })
    }

    pub fn a_list(&self) -> &[Operator] {
        &self.a_list
    }

    pub fn b(&self) -> &Operator {
        &self.b
    }

    /// Dimension `m` of the target lattice.
    pub fn rows(&self) -> usize {
        self.b.rows()
    }

    /// Dimension `n` of the domain.
    pub fn cols(&self) -> usize {
        self.b.cols()
    }

    fn stratum_rows(&self, i: usize) -> Vec<Vec<Rational>> {
        self.a_list.iter().map(|a| a.row(i).to_vec()).collect()
    }
}

/// Positive diagonal multipliers with `B = sum_k alpha_k A_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceCertificate {
    pub alphas: Vec<DiagonalOrthomorphism>,
}

impl DominanceCertificate {
    pub fn verify(&self, inst: &HomogeneousInstance) -> bool {
        self.alphas.len() == inst.a_list.len()
            && self.alphas.iter().all(|a| a.dim() == inst.rows() && a.is_positive())
            && diagonal_combination(&self.alphas, &inst.a_list, inst.rows(), inst.cols())
                .is_ok_and(|sum| sum == inst.b)
    }
}

/// A point `x` and bands `b' <= b` with `bA_k x <= 0` for every `k` while
/// `b'Bx` is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeWitness {
    pub x: Vec<Rational>,
    pub b: Band,
    pub b_prime: Band,
}

impl AlternativeWitness {
    /// Checks the witness. "`b'Bx > 0`" is read in the lattice sense: `b'Bx`
    /// is nonnegative and nonzero.
    pub fn verify(&self, inst: &HomogeneousInstance) -> bool {
        let m = inst.rows();
        if self.x.len() != inst.cols() || self.b.ambient_dim() != m {
            return false;
        }
        if !self.b_prime.leq(&self.b).unwrap_or(false) {
            return false;
        }
        let zero = Point::zeros(m);
        let premises = inst.a_list.iter().all(|a| {
            a.apply(&self.x)
                .and_then(|ax| apply_band(&self.b, &ax))
                .is_ok_and(|p| p.le(&zero))
        });
        let Ok(bx) = inst.b.apply(&self.x).and_then(|bx| apply_band(&self.b_prime, &bx)) else {
            return false;
        };
        premises && zero.le(&bx) && !bx.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    Certificate(DominanceCertificate),
    Witness(AlternativeWitness),
}

impl Dominance {
    pub fn verify(&self, inst: &HomogeneousInstance) -> bool {
        match self {
            Dominance::Certificate(c) => c.verify(inst),
            Dominance::Witness(w) => w.verify(inst),
        }
    }
}

/// Decides `B ∈ cone(A_1, .., A_N)` over positive orthomorphisms, returning
/// either the multipliers or a point violating the implication on some atom.
///
/// Exactly one of the two exists. The witness is always the singleton form
/// `b = b' = {i}` with `(Bx)_i > 0` at the first failing stratum `i`.
pub fn decide_dominance(inst: &HomogeneousInstance) -> Result<Dominance> {
    decide_dominance_with(inst, Exec::Sequential)
}

pub fn decide_dominance_with(inst: &HomogeneousInstance, exec: Exec) -> Result<Dominance> {
    let m = inst.rows();
    let per_stratum = map_strata(exec, m, |i| {
        conic_membership(&inst.stratum_rows(i), inst.b.row(i))
    });
    let mut weights = Vec::with_capacity(m);
    for (i, answer) in per_stratum.into_iter().enumerate() {
        match answer? {
            ConeMembership::Multipliers(alpha) => weights.push(alpha),
            ConeMembership::SeparatingVector(x) => {
                let b = Band::atom(m, i);
                return Ok(Dominance::Witness(AlternativeWitness {
                    x,
                    b: b.clone(),
                    b_prime: b,
                }));
            }
        }
    }
    Ok(Dominance::Certificate(DominanceCertificate {
        alphas: transpose_weights(&weights, inst.a_list.len()),
    }))
}

/// Turns per-stratum weight vectors `weights[i][k]` into one diagonal per `k`.
fn transpose_weights(weights: &[Vec<Rational>], count: usize) -> Vec<DiagonalOrthomorphism> {
    (0..count)
        .map(|k| DiagonalOrthomorphism::new(Point::new(weights.iter().map(|w| w[k].clone()).collect())))
        .collect()
}

/// Data of the inhomogeneous problem: `A_k x <= u_k` (all `k`) should force
/// `Bx <= v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InhomogeneousInstance {
    homogeneous: HomogeneousInstance,
    u_list: Vec<Point>,
    v: Point,
}

impl InhomogeneousInstance {
    pub fn new(a_list: Vec<Operator>, b: Operator, u_list: Vec<Point>, v: Point) -> Result<Self> {
        let homogeneous = HomogeneousInstance::new(a_list, b)?;
        Error::dims("u_k count", homogeneous.a_list.len(), u_list.len())?;
        for u in &u_list {
            Error::dims("u_k", homogeneous.rows(), u.dim())?;
        }
        Error::dims("v", homogeneous.rows(), v.dim())?;
        Ok(InhomogeneousInstance {
            homogeneous,
            u_list,
            v,
        })
    }

    pub fn homogeneous(&self) -> &HomogeneousInstance {
        &self.homogeneous
    }

    pub fn u_list(&self) -> &[Point] {
        &self.u_list
    }

    pub fn v(&self) -> &Point {
        &self.v
    }

    pub fn with_v(&self, v: Point) -> Result<Self> {
        InhomogeneousInstance::new(
            self.homogeneous.a_list.clone(),
            self.homogeneous.b.clone(),
            self.u_list.clone(),
            v,
        )
    }
}

/// A point satisfying every premise `bA_k x <= bu_k` and violating
/// `bBx <= bv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InhomogeneousWitness {
    pub x: Vec<Rational>,
    pub b: Band,
}

impl InhomogeneousWitness {
    pub fn verify(&self, inst: &InhomogeneousInstance) -> bool {
        let h = &inst.homogeneous;
        if self.x.len() != h.cols() || self.b.ambient_dim() != h.rows() {
            return false;
        }
        let premises = h.a_list.iter().zip(&inst.u_list).all(|(a, u)| {
            a.apply(&self.x).is_ok_and(|ax| self.b.members().all(|i| ax.get(i) <= u.get(i)))
        });
        let Ok(bx) = h.b.apply(&self.x) else {
            return false;
        };
        premises && self.b.members().any(|i| bx.get(i) > inst.v.get(i))
    }
}

pub fn verify_inhomogeneous_certificate(
    cert: &DominanceCertificate,
    inst: &InhomogeneousInstance,
) -> bool {
    let h = &inst.homogeneous;
    cert.verify(h)
        && diagonal_combination_points(&cert.alphas, &inst.u_list, h.rows())
            .is_ok_and(|sum| sum.le(&inst.v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InhomogeneousDecision {
    /// `B = sum alpha_k A_k` and `v >= sum alpha_k u_k`.
    Certificate(DominanceCertificate),
    Witness(InhomogeneousWitness),
    /// The premises `A_k x <= u_k` have no common solution on this atom, and
    /// no certificate exists there.
    InconsistentStratum(Band),
}

impl InhomogeneousDecision {
    pub fn verify(&self, inst: &InhomogeneousInstance) -> bool {
        match self {
            InhomogeneousDecision::Certificate(c) => verify_inhomogeneous_certificate(c, inst),
            InhomogeneousDecision::Witness(w) => w.verify(inst),
            InhomogeneousDecision::InconsistentStratum(b) => {
                let h = &inst.homogeneous;
                b.len() == 1
                    && b.ambient_dim() == h.rows()
                    && b.members().all(|i| {
                        let rows = h.stratum_rows(i);
                        let u: Vec<Rational> = inst.u_list.iter().map(|u| u.get(i).clone()).collect();
                        stratum_is_inconsistent(&rows, &u)
                    })
            }
        }
    }
}

/// Outcome of one affine Farkas problem on a single atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum StratumOutcome {
    Multipliers(Vec<Rational>),
    Witness(Vec<Rational>),
    Inconsistent,
}

/// Decides on one atom whether `rows[k] . x <= u[k]` (all `k`) implies
/// `target . x <= bound`.
///
/// A certificate `alpha >= 0` with `sum alpha_k rows[k] = target` and
/// `sum alpha_k u[k] <= bound` is searched first; it proves the implication
/// whether or not the premises are consistent. Failing that, the premises
/// are maximized against `target`: infeasible premises are reported as
/// inconsistent, and otherwise the affine Farkas lemma guarantees that the
/// supremum exceeds `bound`, which yields a finite witness.
pub(crate) fn affine_stratum(
    rows: &[Vec<Rational>],
    u: &[Rational],
    target: &[Rational],
    bound: &Rational,
) -> Result<StratumOutcome> {
    let n = target.len();
    let count = rows.len();

    let mut cert = LinearProgram::nonnegative(count);
    for j in 0..n {
        cert.add_constraint(
            rows.iter().map(|r| r[j].clone()).collect(),
            Relation::Eq,
            target[j].clone(),
        );
    }
    cert.add_constraint(u.to_vec(), Relation::Le, bound.clone());
    if let LpOutcome::Feasible(alpha) = solve(&cert)? {
        return Ok(StratumOutcome::Multipliers(alpha));
    }

    let mut worst = LinearProgram::new(n);
    for (r, uk) in rows.iter().zip(u) {
        worst.add_constraint(r.clone(), Relation::Le, uk.clone());
    }
    worst.set_objective(target.to_vec(), Sense::Max);
    match solve(&worst)? {
        LpOutcome::Infeasible(_) => Ok(StratumOutcome::Inconsistent),
        LpOutcome::Optimal { point, value, .. } => {
            assert!(
                value > *bound,
                "affine Farkas violated: supremum {value} within bound {bound}"
            );
            Ok(StratumOutcome::Witness(point))
        }
        LpOutcome::Unbounded { point, ray } => {
            let at_point = dot(target, &point);
            if at_point > *bound {
                return Ok(StratumOutcome::Witness(point));
            }
            let slope = dot(target, &ray);
            debug_assert!(slope.is_positive());
            let step = (bound - &at_point) / slope + Rational::one();
            Ok(StratumOutcome::Witness(
                point.iter().zip(&ray).map(|(p, d)| p + &step * d).collect(),
            ))
        }
        LpOutcome::Feasible(_) => unreachable!("program has an objective"),
    }
}

fn stratum_is_inconsistent(rows: &[Vec<Rational>], u: &[Rational]) -> bool {
    let n = rows.first().map_or(0, Vec::len);
    if rows.is_empty() {
        return false;
    }
    let mut lp = LinearProgram::new(n);
    for (r, uk) in rows.iter().zip(u) {
        lp.add_constraint(r.clone(), Relation::Le, uk.clone());
    }
    matches!(solve(&lp), Ok(LpOutcome::Infeasible(_)))
}

/// Decides inhomogeneous dominance stratum by stratum.
///
/// Strata are examined in index order; the first one without a certificate
/// determines a `Witness` or `InconsistentStratum` outcome.
pub fn decide_inhomogeneous(inst: &InhomogeneousInstance) -> Result<InhomogeneousDecision> {
    decide_inhomogeneous_with(inst, Exec::Sequential)
}

pub fn decide_inhomogeneous_with(
    inst: &InhomogeneousInstance,
    exec: Exec,
) -> Result<InhomogeneousDecision> {
    let h = &inst.homogeneous;
    let m = h.rows();
    let per_stratum = map_strata(exec, m, |i| {
        let u: Vec<Rational> = inst.u_list.iter().map(|u| u.get(i).clone()).collect();
        affine_stratum(&h.stratum_rows(i), &u, h.b.row(i), inst.v.get(i))
    });
    let mut weights = Vec::with_capacity(m);
    for (i, outcome) in per_stratum.into_iter().enumerate() {
        match outcome? {
            StratumOutcome::Multipliers(alpha) => weights.push(alpha),
            StratumOutcome::Witness(x) => {
                return Ok(InhomogeneousDecision::Witness(InhomogeneousWitness {
                    x,
                    b: Band::atom(m, i),
                }))
            }
            StratumOutcome::Inconsistent => {
                return Ok(InhomogeneousDecision::InconsistentStratum(Band::atom(m, i)))
            }
        }
    }
    Ok(InhomogeneousDecision::Certificate(DominanceCertificate {
        alphas: transpose_weights(&weights, h.a_list.len()),
    }))
}

/// `diag(alpha) * A` for a signed multiplier, with the band `kappa` on which
/// it is nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub alpha: DiagonalOrthomorphism,
    pub kappa: Band,
}

impl ReconstructionResult {
    pub fn verify(&self, a: &Operator, b: &Operator) -> bool {
        let m = a.rows();
        self.alpha.dim() == m
            && self.kappa.ambient_dim() == m
            && self.alpha.compose(a).is_ok_and(|prod| prod == *b)
            && (0..m).all(|i| {
                let e = self.alpha.entry(i);
                if self.kappa.contains(i) {
                    !e.is_negative()
                } else {
                    !e.is_positive()
                }
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Solution(ReconstructionResult),
    /// Row `stratum` of `B` is not a multiple of row `stratum` of `A`.
    NoSolution { stratum: usize },
}

/// Finds a (signed) orthomorphism `alpha` with `B = alpha A`.
pub fn reconstruct(a: &Operator, b: &Operator) -> Result<Reconstruction> {
    Error::dims("reconstruct rows", a.rows(), b.rows())?;
    Error::dims("reconstruct cols", a.cols(), b.cols())?;
    let m = a.rows();
    let mut diag = Vec::with_capacity(m);
    for i in 0..m {
        let (ra, rb) = (a.row(i), b.row(i));
        let Some(j) = ra.iter().position(|e| !e.is_zero()) else {
            if is_zero_row(rb) {
                diag.push(Rational::zero());
                continue;
            }
            return Ok(Reconstruction::NoSolution { stratum: i });
        };
        let ratio = &rb[j] / &ra[j];
        if ra.iter().zip(rb).any(|(x, y)| &ratio * x != *y) {
            return Ok(Reconstruction::NoSolution { stratum: i });
        }
        diag.push(ratio);
    }
    let kappa = Band::new(m, (0..m).filter(|&i| !diag[i].is_negative()))?;
    Ok(Reconstruction::Solution(ReconstructionResult {
        alpha: DiagonalOrthomorphism::new(Point::new(diag)),
        kappa,
    }))
}

/// Data of the matrix form: `A` is split into `t` blocks `X -> Y`, `B` into
/// `s` blocks, `u ∈ Y^t` and `v ∈ Y^s`. The unknown is an `s x t` grid of
/// positive orthomorphisms acting `Y^t -> Y^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixInstance {
    a_blocks: Vec<Operator>,
    b_blocks: Vec<Operator>,
    u: Vec<Point>,
    v: Vec<Point>,
}

impl MatrixInstance {
    pub fn new(
        a_blocks: Vec<Operator>,
        b_blocks: Vec<Operator>,
        u: Vec<Point>,
        v: Vec<Point>,
    ) -> Result<Self> {
        if a_blocks.is_empty() || b_blocks.is_empty() {
            return Err(Error::InvalidParameter(
                "matrix instance needs s >= 1 and t >= 1 blocks".into(),
            ));
        }
        let (m, n) = (b_blocks[0].rows(), b_blocks[0].cols());
        for op in a_blocks.iter().chain(&b_blocks) {
            Error::dims("block rows", m, op.rows())?;
            Error::dims("block cols", n, op.cols())?;
        }
        Error::dims("u blocks", a_blocks.len(), u.len())?;
        Error::dims("v blocks", b_blocks.len(), v.len())?;
        for p in u.iter().chain(&v) {
            Error::dims("block point", m, p.dim())?;
        }
        Ok(MatrixInstance {
            a_blocks,
            b_blocks,
            u,
            v,
        })
    }

    pub fn s(&self) -> usize {
        self.b_blocks.len()
    }

    pub fn t(&self) -> usize {
        self.a_blocks.len()
    }

    pub fn rows(&self) -> usize {
        self.b_blocks[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.b_blocks[0].cols()
    }

    pub fn a_blocks(&self) -> &[Operator] {
        &self.a_blocks
    }

    pub fn b_blocks(&self) -> &[Operator] {
        &self.b_blocks
    }

    pub fn u(&self) -> &[Point] {
        &self.u
    }

    pub fn v(&self) -> &[Point] {
        &self.v
    }
}

/// `grid[j][l]` multiplies block `l` of `A` into block `j` of `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCertificate {
    pub grid: Vec<Vec<DiagonalOrthomorphism>>,
}

impl MatrixCertificate {
    pub fn verify(&self, inst: &MatrixInstance) -> bool {
        let (m, n) = (inst.rows(), inst.cols());
        self.grid.len() == inst.s()
            && self.grid.iter().enumerate().all(|(j, row)| {
                row.len() == inst.t()
                    && row.iter().all(|x| x.dim() == m && x.is_positive())
                    && diagonal_combination(row, &inst.a_blocks, m, n)
                        .is_ok_and(|sum| sum == inst.b_blocks[j])
                    && diagonal_combination_points(row, &inst.u, m)
                        .is_ok_and(|sum| sum.le(&inst.v[j]))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixWitness {
    pub x: Vec<Rational>,
    pub b: Band,
    pub block: usize,
}

impl MatrixWitness {
    pub fn verify(&self, inst: &MatrixInstance) -> bool {
        if self.x.len() != inst.cols() || self.block >= inst.s() || self.b.ambient_dim() != inst.rows() {
            return false;
        }
        let premises = inst.a_blocks.iter().zip(&inst.u).all(|(a, u)| {
            a.apply(&self.x).is_ok_and(|ax| self.b.members().all(|i| ax.get(i) <= u.get(i)))
        });
        let Ok(bx) = inst.b_blocks[self.block].apply(&self.x) else {
            return false;
        };
        let v = &inst.v[self.block];
        premises && self.b.members().any(|i| bx.get(i) > v.get(i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixDecision {
    Certificate(MatrixCertificate),
    Witness(MatrixWitness),
    InconsistentStratum(Band),
}

impl MatrixDecision {
    pub fn verify(&self, inst: &MatrixInstance) -> bool {
        match self {
            MatrixDecision::Certificate(c) => c.verify(inst),
            MatrixDecision::Witness(w) => w.verify(inst),
            MatrixDecision::InconsistentStratum(b) => {
                b.len() == 1
                    && b.ambient_dim() == inst.rows()
                    && b.members().all(|i| {
                        let rows: Vec<Vec<Rational>> =
                            inst.a_blocks.iter().map(|a| a.row(i).to_vec()).collect();
                        let u: Vec<Rational> = inst.u.iter().map(|u| u.get(i).clone()).collect();
                        stratum_is_inconsistent(&rows, &u)
                    })
            }
        }
    }
}

/// Decides `B = XA`, `Xu <= v` over `s x t` grids of positive orthomorphisms.
/// Problems are examined per stratum `i`, then per output block `j`.
pub fn decide_matrix_dominance(inst: &MatrixInstance) -> Result<MatrixDecision> {
    decide_matrix_dominance_with(inst, Exec::Sequential)
}

pub fn decide_matrix_dominance_with(inst: &MatrixInstance, exec: Exec) -> Result<MatrixDecision> {
    let (m, s, t) = (inst.rows(), inst.s(), inst.t());
    let per_stratum = map_strata(exec, m, |i| {
        let rows: Vec<Vec<Rational>> = inst.a_blocks.iter().map(|a| a.row(i).to_vec()).collect();
        let u: Vec<Rational> = inst.u.iter().map(|u| u.get(i).clone()).collect();
        (0..s)
            .map(|j| affine_stratum(&rows, &u, inst.b_blocks[j].row(i), inst.v[j].get(i)))
            .collect::<Vec<_>>()
    });
    // weights[j][i] holds the t multipliers of block row j on stratum i.
    let mut weights: Vec<Vec<Vec<Rational>>> = vec![Vec::with_capacity(m); s];
    for (i, blocks) in per_stratum.into_iter().enumerate() {
        for (j, outcome) in blocks.into_iter().enumerate() {
            match outcome? {
                StratumOutcome::Multipliers(chi) => weights[j].push(chi),
                StratumOutcome::Witness(x) => {
                    return Ok(MatrixDecision::Witness(MatrixWitness {
                        x,
                        b: Band::atom(m, i),
                        block: j,
                    }))
                }
                StratumOutcome::Inconsistent => {
                    return Ok(MatrixDecision::InconsistentStratum(Band::atom(m, i)))
                }
            }
        }
    }
    Ok(MatrixDecision::Certificate(MatrixCertificate {
        grid: weights.iter().map(|w| transpose_weights(w, t)).collect(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarSingle {
    /// `g = alpha f` with `alpha >= 0`.
    Multiplier(Rational),
    /// `f . x <= 0 < g . x`.
    Witness(Vec<Rational>),
}

/// The single-functional case: `{g <= 0} ⊇ {f <= 0}` iff `g = alpha f` for
/// some `alpha >= 0`. Decided directly, without linear programming.
pub fn scalar_single(f: &[Rational], g: &[Rational]) -> Result<ScalarSingle> {
    Error::dims("scalar_single", f.len(), g.len())?;
    let Some(j) = f.iter().position(|e| !e.is_zero()) else {
        return Ok(if is_zero_row(g) {
            ScalarSingle::Multiplier(Rational::zero())
        } else {
            ScalarSingle::Witness(g.to_vec())
        });
    };
    let alpha = &g[j] / &f[j];
    let parallel = f.iter().zip(g).all(|(a, b)| &alpha * a == *b);
    if parallel && !alpha.is_negative() {
        return Ok(ScalarSingle::Multiplier(alpha));
    }
    if parallel {
        return Ok(ScalarSingle::Witness(f.iter().map(|e| -e).collect()));
    }
    // Component of g orthogonal to f: f.x = 0 and g.x > 0 by Cauchy-Schwarz.
    let coef = dot(g, f) / dot(f, f);
    Ok(ScalarSingle::Witness(
        g.iter().zip(f).map(|(a, b)| a - &coef * b).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factorization {
    /// `X` with `X A = B`.
    Factor(Operator),
    /// `x ∈ ker A` with `(Bx)_row != 0`, so `ker A ⊄ ker B`.
    NoSolution { row: usize, kernel_witness: Vec<Rational> },
}

/// Solves `X A = B` exactly; solvable iff `ker A ⊆ ker B`.
pub fn factor_through(a: &Operator, b: &Operator) -> Result<Factorization> {
    Error::dims("factor_through cols", a.cols(), b.cols())?;
    let rows: Vec<Vec<Rational>> = a.entries().to_vec();
    let mut factor = Vec::with_capacity(b.rows());
    for j in 0..b.rows() {
        match solve_left(&rows, b.row(j)) {
            Some(lambda) => factor.push(lambda),
            None => {
                let kernel_witness = null_space(&rows, a.cols())
                    .into_iter()
                    .find(|v| !dot(b.row(j), v).is_zero())
                    .expect("row outside the row space is not orthogonal to the kernel");
                return Ok(Factorization::NoSolution {
                    row: j,
                    kernel_witness,
                });
            }
        }
    }
    Ok(Factorization::Factor(Operator::new(a.rows(), factor)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveFactorization {
    /// Entrywise nonnegative `X` with `X A = B`.
    Factor(Operator),
    /// `Ax <= 0` and `(Bx)_row > 0`.
    Witness { x: Vec<Rational>, row: usize },
}

/// Solves `X A = B` with `X >= 0`; solvable iff `{A <= 0} ⊆ {B <= 0}`.
pub fn factor_positive(a: &Operator, b: &Operator) -> Result<PositiveFactorization> {
    Error::dims("factor_positive cols", a.cols(), b.cols())?;
    let rows: Vec<Vec<Rational>> = a.entries().to_vec();
    let mut factor = Vec::with_capacity(b.rows());
    for j in 0..b.rows() {
        match conic_membership(&rows, b.row(j))? {
            ConeMembership::Multipliers(lambda) => factor.push(lambda),
            ConeMembership::SeparatingVector(x) => {
                return Ok(PositiveFactorization::Witness { x, row: j })
            }
        }
    }
    Ok(PositiveFactorization::Factor(Operator::new(a.rows(), factor)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, ints, rat};

    fn hom(a: Vec<Operator>, b: Operator) -> HomogeneousInstance {
        HomogeneousInstance::new(a, b).unwrap()
    }

    #[test]
    fn dominance_sum_of_generators() {
        let inst = hom(
            vec![Operator::from_ints(&[&[1, 0]]), Operator::from_ints(&[&[0, 1]])],
            Operator::from_ints(&[&[1, 1]]),
        );
        let Dominance::Certificate(c) = decide_dominance(&inst).unwrap() else {
            panic!("expected certificate");
        };
        assert_eq!(c.alphas[0].diag(), &Point::from_ints(&[1]));
        assert_eq!(c.alphas[1].diag(), &Point::from_ints(&[1]));
        assert!(c.verify(&inst));
    }

    #[test]
    fn dominance_scalar_scaling() {
        let inst = hom(vec![Operator::from_ints(&[&[1]])], Operator::from_ints(&[&[2]]));
        let Dominance::Certificate(c) = decide_dominance(&inst).unwrap() else {
            panic!("expected certificate");
        };
        assert_eq!(c.alphas[0].entry(0), &int(2));
    }

    #[test]
    fn dominance_witness_on_first_stratum() {
        let inst = hom(
            vec![Operator::identity(2)],
            Operator::from_ints(&[&[-1, 0], &[0, 1]]),
        );
        let out = decide_dominance(&inst).unwrap();
        let Dominance::Witness(w) = &out else {
            panic!("expected witness");
        };
        assert_eq!(w.b, Band::atom(2, 0));
        assert_eq!(w.b_prime, Band::atom(2, 0));
        assert!(out.verify(&inst));
        // The hand-derived witness x = (-1, 0) also verifies.
        let by_hand = AlternativeWitness {
            x: ints(&[-1, 0]),
            b: Band::atom(2, 0),
            b_prime: Band::atom(2, 0),
        };
        assert!(by_hand.verify(&inst));
    }

    #[test]
    fn empty_generator_list() {
        let zero = hom(vec![], Operator::zeros(2, 3));
        assert!(matches!(decide_dominance(&zero).unwrap(), Dominance::Certificate(c) if c.alphas.is_empty()));
        let nonzero = hom(vec![], Operator::from_ints(&[&[0, 0], &[0, 1]]));
        let out = decide_dominance(&nonzero).unwrap();
        assert!(matches!(&out, Dominance::Witness(w) if w.b == Band::atom(2, 1)));
        assert!(out.verify(&nonzero));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = HomogeneousInstance::new(vec![Operator::zeros(2, 2)], Operator::zeros(2, 3));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn equality_is_two_inequalities() {
        // {f = 0} encoded as f <= 0 and -f <= 0. The certificate for g = -2f
        // uses the second inequality only, with a nonnegative weight.
        let f = Operator::from_ints(&[&[1, 3]]);
        let inst = hom(vec![f.clone(), f.scale(&int(-1))], f.scale(&int(-2)));
        let out = decide_dominance(&inst).unwrap();
        assert!(out.verify(&inst));
        assert!(matches!(out, Dominance::Certificate(_)));
    }

    fn inh(a: &[&[i64]], u: i64, b: &[i64], v: Rational) -> InhomogeneousInstance {
        InhomogeneousInstance::new(
            vec![Operator::from_ints(&[a[0]])],
            Operator::from_ints(&[b]),
            vec![Point::from_ints(&[u])],
            Point::new(vec![v]),
        )
        .unwrap()
    }

    #[test]
    fn inhomogeneous_examples() {
        let inst = inh(&[&[1]], 1, &[1], int(1));
        let out = decide_inhomogeneous(&inst).unwrap();
        assert!(
            matches!(&out, InhomogeneousDecision::Certificate(c) if c.alphas[0].entry(0) == &int(1))
        );
        assert!(out.verify(&inst));

        let inst = inh(&[&[1]], 1, &[1], int(0));
        let out = decide_inhomogeneous(&inst).unwrap();
        assert!(matches!(out, InhomogeneousDecision::Witness(_)));
        assert!(out.verify(&inst));
        let by_hand = InhomogeneousWitness {
            x: vec![rat(1, 2)],
            b: Band::atom(1, 0),
        };
        assert!(by_hand.verify(&inst));

        let inst = inh(&[&[0]], -1, &[1], int(0));
        let out = decide_inhomogeneous(&inst).unwrap();
        assert_eq!(out, InhomogeneousDecision::InconsistentStratum(Band::atom(1, 0)));
        assert!(out.verify(&inst));
    }

    #[test]
    fn inconsistent_premises_with_certificate_still_certify() {
        // 0 <= -1 is impossible, but B = 0 with v = 0 is certified by alpha = 1.
        let inst = inh(&[&[0]], -1, &[0], int(0));
        let out = decide_inhomogeneous(&inst).unwrap();
        assert!(matches!(out, InhomogeneousDecision::Certificate(_)));
        assert!(out.verify(&inst));
    }

    #[test]
    fn unbounded_violation_gets_finite_witness() {
        // x1 <= 0 says nothing about x0; B = (1, 0), v = 7.
        let inst = InhomogeneousInstance::new(
            vec![Operator::from_ints(&[&[0, 1]])],
            Operator::from_ints(&[&[1, 0]]),
            vec![Point::from_ints(&[0])],
            Point::from_ints(&[7]),
        )
        .unwrap();
        let out = decide_inhomogeneous(&inst).unwrap();
        assert!(matches!(out, InhomogeneousDecision::Witness(_)));
        assert!(out.verify(&inst));
    }

    #[test]
    fn reconstruct_examples() {
        let a = Operator::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Operator::from_ints(&[&[2, 4], &[-3, -4]]);
        let Reconstruction::Solution(r) = reconstruct(&a, &b).unwrap() else {
            panic!("expected solution");
        };
        assert_eq!(r.alpha.diag(), &Point::from_ints(&[2, -1]));
        assert_eq!(r.kappa, Band::atom(2, 0));
        assert!(r.verify(&a, &b));

        let Reconstruction::Solution(r) = reconstruct(&a, &a).unwrap() else {
            panic!("expected solution");
        };
        assert_eq!(r.alpha, DiagonalOrthomorphism::identity(2));
        assert_eq!(r.kappa, Band::full(2));

        let a = Operator::from_ints(&[&[0, 0]]);
        let b = Operator::from_ints(&[&[1, 0]]);
        assert_eq!(reconstruct(&a, &b).unwrap(), Reconstruction::NoSolution { stratum: 0 });
        let Reconstruction::Solution(r) = reconstruct(&a, &a).unwrap() else {
            panic!("zero rows reconstruct");
        };
        assert!(r.alpha.entry(0).is_zero() && r.kappa.contains(0));
        let b = Operator::from_ints(&[&[1, 2], &[3, 5]]);
        assert_eq!(
            reconstruct(&Operator::from_ints(&[&[1, 2], &[3, 4]]), &b).unwrap(),
            Reconstruction::NoSolution { stratum: 1 }
        );
    }

    #[test]
    fn matrix_examples() {
        let inst = MatrixInstance::new(
            vec![Operator::from_ints(&[&[1]]), Operator::from_ints(&[&[-1]])],
            vec![Operator::from_ints(&[&[1]])],
            vec![Point::from_ints(&[1]), Point::from_ints(&[0])],
            vec![Point::from_ints(&[1])],
        )
        .unwrap();
        let out = decide_matrix_dominance(&inst).unwrap();
        assert!(out.verify(&inst));
        // By hand: chi = (1, 0) is a valid grid.
        let by_hand = MatrixCertificate {
            grid: vec![vec![
                DiagonalOrthomorphism::new(Point::from_ints(&[1])),
                DiagonalOrthomorphism::new(Point::from_ints(&[0])),
            ]],
        };
        assert!(by_hand.verify(&inst));

        let zero_b = MatrixInstance::new(
            vec![Operator::from_ints(&[&[1, 2]]), Operator::from_ints(&[&[3, -1]])],
            vec![Operator::zeros(1, 2), Operator::zeros(1, 2)],
            vec![Point::from_ints(&[5]), Point::from_ints(&[-4])],
            vec![Point::from_ints(&[0]), Point::from_ints(&[3])],
        )
        .unwrap();
        let MatrixDecision::Certificate(c) = decide_matrix_dominance(&zero_b).unwrap() else {
            panic!("expected certificate");
        };
        assert!(c.grid.iter().flatten().all(|x| x.diag().is_zero()));
    }

    #[test]
    fn scalar_single_examples() {
        assert_eq!(
            scalar_single(&ints(&[1, 0]), &ints(&[2, 0])).unwrap(),
            ScalarSingle::Multiplier(int(2))
        );
        assert_eq!(
            scalar_single(&ints(&[0, 0]), &ints(&[0, 0])).unwrap(),
            ScalarSingle::Multiplier(int(0))
        );
        assert_eq!(
            scalar_single(&ints(&[1, 0]), &ints(&[0, 1])).unwrap(),
            ScalarSingle::Witness(ints(&[0, 1]))
        );
        let f = ints(&[1, -2]);
        let ScalarSingle::Witness(x) = scalar_single(&f, &ints(&[-3, 6])).unwrap() else {
            panic!("negative multiple must fail");
        };
        assert!(!dot(&f, &x).is_positive() && dot(&ints(&[-3, 6]), &x).is_positive());
    }

    #[test]
    fn factor_through_examples() {
        let b = Operator::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(
            factor_through(&Operator::identity(2), &b).unwrap(),
            Factorization::Factor(b.clone())
        );
        assert_eq!(
            factor_through(&Operator::from_ints(&[&[1, 1]]), &Operator::from_ints(&[&[2, 2]]))
                .unwrap(),
            Factorization::Factor(Operator::from_ints(&[&[2]]))
        );
        assert_eq!(
            factor_through(&Operator::from_ints(&[&[1, 0]]), &Operator::from_ints(&[&[0, 1]]))
                .unwrap(),
            Factorization::NoSolution {
                row: 0,
                kernel_witness: ints(&[0, 1])
            }
        );
    }

    #[test]
    fn factor_positive_examples() {
        assert_eq!(
            factor_positive(&Operator::identity(2), &Operator::from_ints(&[&[1, 1]])).unwrap(),
            PositiveFactorization::Factor(Operator::from_ints(&[&[1, 1]]))
        );
        let PositiveFactorization::Factor(x) =
            factor_positive(&Operator::from_ints(&[&[1], &[-1]]), &Operator::from_ints(&[&[1]]))
                .unwrap()
        else {
            panic!("expected factor");
        };
        assert!(x.is_nonnegative());
        assert_eq!(
            x.compose(&Operator::from_ints(&[&[1], &[-1]])).unwrap(),
            Operator::from_ints(&[&[1]])
        );
        let a = Operator::from_ints(&[&[1, 0]]);
        let PositiveFactorization::Witness { x, row } =
            factor_positive(&a, &Operator::from_ints(&[&[1, 1]])).unwrap()
        else {
            panic!("expected witness");
        };
        assert_eq!(row, 0);
        assert!(a.apply(&x).unwrap().le(&Point::zeros(1)));
        assert!(dot(&ints(&[1, 1]), &x).is_positive());
    }
}
