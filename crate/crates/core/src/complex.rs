//! Complex multipliers over the complexification `Y_C = Q^m + iQ^m`.
//!
//! Certificates are diagonal Gaussian-rational multipliers `c_k` with
//! `B = sum_k c_k A_k` and `v >= sum_k |c_k| u_k`. The identity is checked in
//! exact arithmetic. The moduli are square roots of rationals, so the budget
//! inequality is decided through rational enclosures of `|c_k|` that are
//! refined until the comparison is certified.
//!
//! A sum `sum_k u_k sqrt(q_k)` with `u_k > 0` is rational only when every
//! `q_k` is a rational square, so refinement decides every instance in the
//! limit; [`ComplexVerdict::Undecided`] is returned only when the gap is
//! smaller than the configured finest precision.
//!
//! The search replaces `|c|` by polygonal gauges, which keeps it on the exact
//! LP kernel. It is sound but incomplete: every returned certificate has been
//! verified, while `NotFound` proves nothing.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Operator, Point, Rational, Relation};
use crate::lp::{solve, LinearProgram, LpOutcome, Sense};
use crate::strata::{map_strata, Exec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        GaussianRational::real(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// An `m x n` matrix of Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexOperator {
    cols: usize,
    entries: Vec<Vec<GaussianRational>>,
}

impl ComplexOperator {
    pub fn new(cols: usize, entries: Vec<Vec<GaussianRational>>) -> Result<Self> {
        for row in &entries {
            Error::dims("complex operator row length", cols, row.len())?;
        }
        Ok(ComplexOperator { cols, entries })
    }

    pub fn from_real(op: &Operator) -> Self {
        ComplexOperator {
            cols: op.cols(),
            entries: op
                .entries()
                .iter()
                .map(|r| r.iter().cloned().map(GaussianRational::real).collect())
                .collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexOperator {
            cols,
            entries: vec![vec![GaussianRational::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexDiagonalOrthomorphism {
    pub diag: Vec<GaussianRational>,
}

impl ComplexDiagonalOrthomorphism {
    pub fn new(diag: Vec<GaussianRational>) -> Self {
        ComplexDiagonalOrthomorphism { diag }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn compose(&self, op: &ComplexOperator) -> Result<ComplexOperator> {
        Error::dims("complex orthomorphism compose", self.dim(), op.rows())?;
        Ok(ComplexOperator {
            cols: op.cols,
            entries: op
                .entries
                .iter()
                .zip(&self.diag)
                .map(|(row, c)| row.iter().map(|e| c * e).collect())
                .collect(),
        })
    }
}

/// Rational bounds `lower <= |z| <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusEnclosure {
    pub lower: Rational,
    pub upper: Rational,
}

impl ModulusEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    /// Whether `lower^2 <= |z|^2 <= upper^2` and `0 <= lower <= upper`.
    pub fn encloses(&self, z: &GaussianRational) -> bool {
        let q = z.norm_sqr();
        !self.lower.is_negative()
            && self.lower <= self.upper
            && &self.lower * &self.lower <= q
            && q <= &self.upper * &self.upper
    }
}

fn exact_sqrt(q: &Rational) -> Option<Rational> {
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

/// Encloses `|z|` in an interval of width at most `precision`; the enclosure
/// is a single point whenever `|z|` is rational.
pub fn modulus_enclosure(z: &GaussianRational, precision: &Rational) -> Result<ModulusEnclosure> {
    if !precision.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "enclosure precision must be positive, got {precision}"
        )));
    }
    let q = z.norm_sqr();
    if let Some(r) = exact_sqrt(&q) {
        return Ok(ModulusEnclosure {
            lower: r.clone(),
            upper: r,
        });
    }
    // Dyadic grid 1/2^k no coarser than the precision.
    let mut scale = BigInt::one();
    while Rational::new(BigInt::one(), scale.clone()) > *precision {
        scale <<= 1;
    }
    let scaled = (q * Rational::from_integer(&scale * &scale)).floor().to_integer();
    let s = scaled.sqrt();
    Ok(ModulusEnclosure {
        lower: Rational::new(s.clone(), scale.clone()),
        upper: Rational::new(s + 1, scale),
    })
}

/// How far enclosures may be refined before giving up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementBudget {
    /// Finest enclosure width tried. Refinement starts at width 1 and shrinks
    /// by a factor 16 per round.
    pub finest: Rational,
}

impl Default for RefinementBudget {
    fn default() -> Self {
        RefinementBudget {
            finest: Rational::new(BigInt::one(), BigInt::one() << 128),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexVerdict {
    Valid,
    Invalid,
    Undecided,
}

/// Complex dominance data: `A_k, B : X -> Y_C`, `u_k, v ∈ Y`, `u_k >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInstance {
    a_list: Vec<ComplexOperator>,
    b: ComplexOperator,
    u_list: Vec<Point>,
    v: Point,
}

impl ComplexInstance {
    pub fn new(
        a_list: Vec<ComplexOperator>,
        b: ComplexOperator,
        u_list: Vec<Point>,
        v: Point,
    ) -> Result<Self> {
        let (m, n) = (b.rows(), b.cols());
        for a in &a_list {
            Error::dims("complex A_k rows", m, a.rows())?;
            Error::dims("complex A_k cols", n, a.cols())?;
        }
        Error::dims("u_k count", a_list.len(), u_list.len())?;
        for (k, u) in u_list.iter().enumerate() {
            Error::dims("u_k", m, u.dim())?;
            if let Some(i) = u.coords().iter().position(Signed::is_negative) {
                return Err(Error::NegativeBound { k, i });
            }
        }
        Error::dims("v", m, v.dim())?;
        Ok(ComplexInstance {
            a_list,
            b,
            u_list,
            v,
        })
    }

    pub fn a_list(&self) -> &[ComplexOperator] {
        &self.a_list
    }

    pub fn b(&self) -> &ComplexOperator {
        &self.b
    }

    pub fn u_list(&self) -> &[Point] {
        &self.u_list
    }

    pub fn v(&self) -> &Point {
        &self.v
    }

    pub fn rows(&self) -> usize {
        self.b.rows()
    }

    pub fn cols(&self) -> usize {
        self.b.cols()
    }
}

/// `sum_k c_k A_k` as an `m x n` operator.
pub fn complex_combination(
    c_list: &[ComplexDiagonalOrthomorphism],
    a_list: &[ComplexOperator],
    m: usize,
    n: usize,
) -> Result<ComplexOperator> {
    Error::dims("complex combination length", a_list.len(), c_list.len())?;
    let mut sum = ComplexOperator::zeros(m, n);
    for (c, a) in c_list.iter().zip(a_list) {
        Error::dims("complex combination cols", n, a.cols())?;
        let term = c.compose(a)?;
        Error::dims("complex combination rows", m, term.rows())?;
        for (srow, trow) in sum.entries.iter_mut().zip(&term.entries) {
            for (s, t) in srow.iter_mut().zip(trow) {
                *s = &*s + t;
            }
        }
    }
    Ok(sum)
}

/// Checks `B = sum c_k A_k` exactly and `v >= sum |c_k| u_k` by refinement.
pub fn verify_complex_certificate(
    c_list: &[ComplexDiagonalOrthomorphism],
    inst: &ComplexInstance,
    budget: &RefinementBudget,
) -> Result<ComplexVerdict> {
    let (m, n) = (inst.rows(), inst.cols());
    Error::dims("certificate length", inst.a_list.len(), c_list.len())?;
    for c in c_list {
        Error::dims("certificate dimension", m, c.dim())?;
    }
    if complex_combination(c_list, &inst.a_list, m, n)? != inst.b {
        return Ok(ComplexVerdict::Invalid);
    }
    let mut undecided = false;
    for i in 0..m {
        let coeffs: Vec<GaussianRational> = c_list.iter().map(|c| c.diag[i].clone()).collect();
        let u: Vec<Rational> = inst.u_list.iter().map(|u| u.get(i).clone()).collect();
        match modulus_budget_check(&coeffs, &u, inst.v.get(i), budget)? {
            ComplexVerdict::Valid => {}
            ComplexVerdict::Invalid => return Ok(ComplexVerdict::Invalid),
            ComplexVerdict::Undecided => undecided = true,
        }
    }
    Ok(if undecided {
        ComplexVerdict::Undecided
    } else {
        ComplexVerdict::Valid
    })
}

/// Decides `sum_k |c_k| u_k <= bound` for `u_k >= 0`.
fn modulus_budget_check(
    c: &[GaussianRational],
    u: &[Rational],
    bound: &Rational,
    budget: &RefinementBudget,
) -> Result<ComplexVerdict> {
    let sixteen = Rational::from_integer(BigInt::from(16));
    let mut precision = Rational::one();
    loop {
        let mut lower = Rational::zero();
        let mut upper = Rational::zero();
        for (ck, uk) in c.iter().zip(u) {
            if uk.is_zero() || ck.is_zero() {
                continue;
            }
            let enc = modulus_enclosure(ck, &precision)?;
            lower += &enc.lower * uk;
            upper += &enc.upper * uk;
        }
        if upper <= *bound {
            return Ok(ComplexVerdict::Valid);
        }
        if lower > *bound {
            return Ok(ComplexVerdict::Invalid);
        }
        precision /= &sixteen;
        if precision < budget.finest {
            return Ok(ComplexVerdict::Undecided);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexSearch {
    Found(Vec<ComplexDiagonalOrthomorphism>),
    /// No certificate was found; `stratum` is the first atom where the search
    /// failed. This does not refute the inclusion.
    NotFound { stratum: usize },
}

/// Searches complex multipliers with regular `sides`-gon approximations of
/// the modulus.
///
/// Per stratum, the linear identity is imposed exactly on the real and
/// imaginary parts, and `sum_k gauge(c_k) u_k` is minimized. The inscribed
/// polygon's gauge dominates `|c|`, so a candidate within budget there is
/// valid outright; otherwise the circumscribed polygon's gauge (a lower bound
/// on `|c|`) gives a relaxed candidate that is kept only if it verifies.
pub fn search_complex_certificate(
    inst: &ComplexInstance,
    sides: usize,
    budget: &RefinementBudget,
) -> Result<ComplexSearch> {
    search_complex_certificate_with(inst, sides, budget, Exec::Sequential)
}

pub fn search_complex_certificate_with(
    inst: &ComplexInstance,
    sides: usize,
    budget: &RefinementBudget,
    exec: Exec,
) -> Result<ComplexSearch> {
    if sides < 4 || sides % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "polygon sides must be even and at least 4, got {sides}"
        )));
    }
    let vertices = unit_polygon(sides);
    let inscribed = inscribed_normals(&vertices);
    let m = inst.rows();
    let per_stratum = map_strata(exec, m, |i| -> Result<Option<Vec<GaussianRational>>> {
        let u: Vec<Rational> = inst.u_list.iter().map(|u| u.get(i).clone()).collect();
        for normals in [&inscribed, &vertices] {
            let Some(candidate) = polygon_stratum(inst, i, normals)? else {
                continue;
            };
            if modulus_budget_check(&candidate, &u, inst.v.get(i), budget)? == ComplexVerdict::Valid {
                return Ok(Some(candidate));
            }
        }
        Ok(None)
    });
    let count = inst.a_list.len();
    let mut diags = vec![Vec::with_capacity(m); count];
    for (i, outcome) in per_stratum.into_iter().enumerate() {
        let Some(candidate) = outcome? else {
            return Ok(ComplexSearch::NotFound { stratum: i });
        };
        for (d, c) in diags.iter_mut().zip(candidate) {
            d.push(c);
        }
    }
    let certificate: Vec<ComplexDiagonalOrthomorphism> =
        diags.into_iter().map(ComplexDiagonalOrthomorphism::new).collect();
    match verify_complex_certificate(&certificate, inst, budget)? {
        ComplexVerdict::Valid => Ok(ComplexSearch::Found(certificate)),
        _ => Ok(ComplexSearch::NotFound { stratum: 0 }),
    }
}

/// Minimizes `sum_k gauge(c_k) u_k` subject to the exact identity on row `i`,
/// where `gauge(c) = max_j normals[j] . (re c, im c)`. Returns the minimizer
/// if its gauge sum is within `v_i`.
fn polygon_stratum(
    inst: &ComplexInstance,
    i: usize,
    normals: &[(Rational, Rational)],
) -> Result<Option<Vec<GaussianRational>>> {
    let (n, count) = (inst.cols(), inst.a_list.len());
    // Variables: re_k, im_k (free), then g_k >= 0.
    let re = |k: usize| 2 * k;
    let im = |k: usize| 2 * k + 1;
    let gauge = |k: usize| 2 * count + k;
    let num_vars = 3 * count;
    let mut lp = LinearProgram::new(num_vars);
    for k in 0..count {
        lp.set_nonneg(gauge(k), true);
    }
    let target = inst.b.row(i);
    for j in 0..n {
        // (re + i im)(a + i b) = (re a - im b) + i (re b + im a)
        let mut real_row = vec![Rational::zero(); num_vars];
        let mut imag_row = vec![Rational::zero(); num_vars];
        for (k, a) in inst.a_list.iter().enumerate() {
            let e = &a.row(i)[j];
            real_row[re(k)] = e.re.clone();
            real_row[im(k)] = -e.im.clone();
            imag_row[re(k)] = e.im.clone();
            imag_row[im(k)] = e.re.clone();
        }
        lp.add_constraint(real_row, Relation::Eq, target[j].re.clone());
        lp.add_constraint(imag_row, Relation::Eq, target[j].im.clone());
    }
    for k in 0..count {
        for (nx, ny) in normals {
            let mut row = vec![Rational::zero(); num_vars];
            row[re(k)] = nx.clone();
            row[im(k)] = ny.clone();
            row[gauge(k)] = -Rational::one();
            lp.add_constraint(row, Relation::Le, Rational::zero());
        }
    }
    let mut objective = vec![Rational::zero(); num_vars];
    for (k, u) in inst.u_list.iter().enumerate() {
        objective[gauge(k)] = u.get(i).clone();
    }
    lp.set_objective(objective, Sense::Min);
    match solve(&lp)? {
        LpOutcome::Optimal { point, value, .. } if value <= *inst.v.get(i) => Ok(Some(
            (0..count)
                .map(|k| GaussianRational::new(point[re(k)].clone(), point[im(k)].clone()))
                .collect(),
        )),
        _ => Ok(None),
    }
}

/// Normals of the edges of the polygon with the given vertices (in angular
/// order, all on the unit circle): `n . e_j = n . e_{j+1} = 1`.
fn inscribed_normals(vertices: &[(Rational, Rational)]) -> Vec<(Rational, Rational)> {
    (0..vertices.len())
        .map(|j| {
            let (a, b) = (&vertices[j], &vertices[(j + 1) % vertices.len()]);
            let denom = Rational::one() + &a.0 * &b.0 + &a.1 * &b.1;
            ((&a.0 + &b.0) / &denom, (&a.1 + &b.1) / &denom)
        })
        .collect()
}

/// `sides` rational points exactly on the unit circle, close to the angles
/// `2 pi j / sides`. Angle 0 and pi are hit exactly, as are pi/2 and 3pi/2
/// when `sides` is a multiple of 4.
fn unit_polygon(sides: usize) -> Vec<(Rational, Rational)> {
    let fixed = FixedPoint::new();
    // Small denominators keep the per-stratum programs cheap; the angular
    // error stays far below the spacing 2 pi / sides.
    let max_den = BigInt::from(16 * sides);
    (0..sides)
        .map(|j| {
            if 2 * j == sides {
                return (-Rational::one(), Rational::zero());
            }
            // Half-angle in (-pi/2, pi/2): phi = pi j / sides, shifted by -pi past the midpoint.
            let signed_j = if 2 * j < sides {
                j as i64
            } else {
                j as i64 - sides as i64
            };
            let t = small_approximation(&fixed.tan_pi_fraction(signed_j, sides as i64), &max_den);
            let t2 = &t * &t;
            let denom = Rational::one() + &t2;
            ((Rational::one() - &t2) / &denom, (&t + &t) / &denom)
        })
        .collect()
}

/// Binary fixed-point evaluation of `tan(pi p / q)` with 96 fractional bits.
struct FixedPoint {
    bits: u32,
    pi: BigInt,
}

const PI_DIGITS: &str = "314159265358979323846264338327950288419716939937510";

impl FixedPoint {
    fn new() -> Self {
        let bits = 96;
        let digits: BigInt = PI_DIGITS.parse().expect("valid digits");
        let ten_pow = num_traits::pow(BigInt::from(10), PI_DIGITS.len() - 1);
        FixedPoint {
            bits,
            pi: (digits << bits) / ten_pow,
        }
    }

    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    fn tan_pi_fraction(&self, p: i64, q: i64) -> Rational {
        if p == 0 {
            return Rational::zero();
        }
        let x = &self.pi * BigInt::from(p) / BigInt::from(q);
        let x2 = self.mul(&x, &x);
        // sin and cos by Taylor series; |x| < pi/2 so 40 terms is far beyond 96 bits.
        let (mut sin, mut cos) = (BigInt::zero(), BigInt::zero());
        let mut term_sin = x.clone();
        let mut term_cos = self.one();
        for k in 0..40i64 {
            sin += &term_sin;
            cos += &term_cos;
            term_sin = -self.mul(&term_sin, &x2) / BigInt::from((2 * k + 2) * (2 * k + 3));
            term_cos = -self.mul(&term_cos, &x2) / BigInt::from((2 * k + 1) * (2 * k + 2));
        }
        let tan_fixed = (sin << self.bits) / cos;
        Rational::new(tan_fixed, self.one())
    }
}

/// The last continued-fraction convergent of `x` whose denominator does not
/// exceed `max_den`.
fn small_approximation(x: &Rational, max_den: &BigInt) -> Rational {
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if k_next > *max_den {
            break;
        }
        (h_prev, h, k_prev, k) = (h, h_next, k, k_next);
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    Rational::new(h, k)
}
