//! The finite Kantorovich space `Q^m` and the structures living on it.
//!
//! * A [`Point`] is an element of `Y = Q^m` with the componentwise order.
//! * A [`Band`] is a set of coordinate indices. The band projections of `Q^m`
//!   are exactly the coordinate projections, so the Boolean base of `Y` is the
//!   powerset of `{0, .., m-1}` and its atoms are the singletons ("strata").
//! * A [`DiagonalOrthomorphism`] is a coordinatewise multiplier. Orthomorphisms
//!   of `Q^m` are the operators commuting with every band projection, which are
//!   exactly the diagonal matrices. The universal completion of a finite
//!   dimensional lattice is the lattice itself, so multipliers on the universal
//!   completion are diagonal matrices as well.
//! * An [`Operator`] is an `m x n` rational matrix. In finite dimension every
//!   linear operator is dominated, so no dominance bookkeeping is carried.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

/// Inner product of two rows of equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_row(row: &[Rational]) -> bool {
    row.iter().all(Zero::is_zero)
}

/// Order relations used by truth values and by linear constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    /// The relation obtained after multiplying both sides by `-1`.
    pub fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Eq => Relation::Eq,
            Relation::Ge => Relation::Le,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

/// An element of `Y = Q^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Point::new(ints(values))
    }

    pub fn zeros(dim: usize) -> Self {
        Point::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_row(&self.coords)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, lambda: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * lambda).collect())
    }

    pub fn abs(&self) -> Point {
        Point::new(self.coords.iter().map(Signed::abs).collect())
    }

    /// Componentwise infimum.
    pub fn inf(&self, other: &Point) -> Point {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    fn check_dim(&self, other: &Point, context: &'static str) -> Result<()> {
        Error::dims(context, self.dim(), other.dim())
    }
}

impl From<Vec<Rational>> for Point {
    fn from(coords: Vec<Rational>) -> Self {
        Point::new(coords)
    }
}

impl Add for &Point {
    type Output = Point;

    fn add(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "point dimensions differ");
        Point::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "point dimensions differ");
        Point::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;

    fn neg(self) -> Point {
        Point::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// Positive and negative parts `(y+, y-)` with `y = y+ - y-`.
pub fn pos_neg_parts(y: &Point) -> (Point, Point) {
    let zero = Rational::zero();
    let pos = y.coords.iter().map(|c| c.max(&zero).clone()).collect();
    let neg = y.coords.iter().map(|c| (-c).max(zero.clone())).collect();
    (Point::new(pos), Point::new(neg))
}

/// A band projection of `Q^m`, stored as the set of coordinates it keeps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Band {
    dim: usize,
    members: BTreeSet<usize>,
}

impl Band {
    pub fn new<I: IntoIterator<Item = usize>>(dim: usize, members: I) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&index) = members.iter().find(|&&i| i >= dim) {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        Ok(Band { dim, members })
    }

    pub fn empty(dim: usize) -> Self {
        Band {
            dim,
            members: BTreeSet::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Band {
            dim,
            members: (0..dim).collect(),
        }
    }

    /// The atom `{i}`. Panics if `i >= dim`.
    pub fn atom(dim: usize, i: usize) -> Self {
        assert!(i < dim, "atom index {i} out of range for dimension {dim}");
        Band {
            dim,
            members: std::iter::once(i).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.dim
    }

    fn check(&self, other: &Band) -> Result<()> {
        Error::dims("band algebra", self.dim, other.dim)
    }

    pub fn meet(&self, other: &Band) -> Result<Band> {
        self.check(other)?;
        Ok(Band {
            dim: self.dim,
            members: self.members.intersection(&other.members).copied().collect(),
        })
    }

    pub fn join(&self, other: &Band) -> Result<Band> {
        self.check(other)?;
        Ok(Band {
            dim: self.dim,
            members: self.members.union(&other.members).copied().collect(),
        })
    }

    pub fn complement(&self) -> Band {
        Band {
            dim: self.dim,
            members: (0..self.dim).filter(|i| !self.members.contains(i)).collect(),
        }
    }

    /// Order of the base: `self <= other` iff `self` is a sub-band of `other`.
    pub fn leq(&self, other: &Band) -> Result<bool> {
        self.check(other)?;
        Ok(self.members.is_subset(&other.members))
    }
}

/// Applies the band projection: keeps coordinates in `b`, zeroes the rest.
pub fn apply_band(b: &Band, y: &Point) -> Result<Point> {
    Error::dims("apply_band", b.dim, y.dim())?;
    Ok(Point::new(
        y.coords
            .iter()
            .enumerate()
            .map(|(i, c)| if b.contains(i) { c.clone() } else { Rational::zero() })
            .collect(),
    ))
}

/// The truth value `[[y rel z]]`: the largest band on which the relation holds.
pub fn truth_value(rel: Relation, y: &Point, z: &Point) -> Result<Band> {
    y.check_dim(z, "truth_value")?;
    Ok(Band {
        dim: y.dim(),
        members: y
            .coords
            .iter()
            .zip(&z.coords)
            .enumerate()
            .filter(|(_, (a, b))| rel.holds(a, b))
            .map(|(i, _)| i)
            .collect(),
    })
}

/// Pairwise disjoint bands whose join is the full band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOfUnity {
    dim: usize,
    parts: Vec<Band>,
}

impl PartitionOfUnity {
    pub fn new(dim: usize, parts: Vec<Band>) -> Result<Self> {
        let mut seen = vec![false; dim];
        for (j, part) in parts.iter().enumerate() {
            Error::dims("partition part", dim, part.dim)?;
            for i in part.members() {
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "coordinate {i} appears again in part {j}"
                    )));
                }
                seen[i] = true;
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "coordinate {i} is not covered"
            )));
        }
        Ok(PartitionOfUnity { dim, parts })
    }

    /// The partition into atoms `{0}, .., {m-1}`.
    pub fn atoms(dim: usize) -> Self {
        PartitionOfUnity {
            dim,
            parts: (0..dim).map(|i| Band::atom(dim, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn parts(&self) -> &[Band] {
        &self.parts
    }
}

/// Assembles the point equal to `ys[j]` on `p.parts()[j]` for every `j`.
pub fn mix(p: &PartitionOfUnity, ys: &[Point]) -> Result<Point> {
    Error::dims("mix: number of pieces", p.parts.len(), ys.len())?;
    let mut coords = vec![Rational::zero(); p.dim];
    for (part, y) in p.parts.iter().zip(ys) {
        Error::dims("mix", p.dim, y.dim())?;
        for i in part.members() {
            coords[i] = y.coords[i].clone();
        }
    }
    Ok(Point::new(coords))
}

/// A coordinatewise multiplier `y -> (d_i * y_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalOrthomorphism {
    diag: Point,
}

impl DiagonalOrthomorphism {
    pub fn new(diag: Point) -> Self {
        DiagonalOrthomorphism { diag }
    }

    pub fn identity(dim: usize) -> Self {
        DiagonalOrthomorphism::new(Point::new(vec![Rational::one(); dim]))
    }

    pub fn zero(dim: usize) -> Self {
        DiagonalOrthomorphism::new(Point::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.diag.dim()
    }

    pub fn diag(&self) -> &Point {
        &self.diag
    }

    pub fn entry(&self, i: usize) -> &Rational {
        self.diag.get(i)
    }

    pub fn is_positive(&self) -> bool {
        self.diag.is_nonnegative()
    }

    pub fn apply(&self, y: &Point) -> Result<Point> {
        Error::dims("orthomorphism apply", self.dim(), y.dim())?;
        Ok(Point::new(
            self.diag.coords.iter().zip(&y.coords).map(|(a, b)| a * b).collect(),
        ))
    }

    /// `diag(self) * op`: row `i` of `op` scaled by the `i`-th entry.
    pub fn compose(&self, op: &Operator) -> Result<Operator> {
        Error::dims("orthomorphism compose", self.dim(), op.rows())?;
        Ok(Operator {
            cols: op.cols,
            entries: op
                .entries
                .iter()
                .zip(self.diag.coords())
                .map(|(row, a)| row.iter().map(|e| e * a).collect())
                .collect(),
        })
    }
}

/// An `m x n` rational matrix, acting `Q^n -> Q^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Operator {
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

impl Operator {
    /// Builds an operator from rows, each of which must have length `cols`.
    pub fn new(cols: usize, entries: Vec<Vec<Rational>>) -> Result<Self> {
        for row in &entries {
            Error::dims("operator row length", cols, row.len())?;
        }
        Ok(Operator { cols, entries })
    }

    /// Builds an operator from a non-empty list of rows.
    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        Operator::new(cols, entries)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Operator::from_rows(rows.iter().map(|r| ints(r)).collect())
            .expect("rows of equal length")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Operator {
            cols,
            entries: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Operator::zeros(dim, dim);
        for i in 0..dim {
            op.entries[i][i] = Rational::one();
        }
        op
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i][j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| is_zero_row(r))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|e| !e.is_negative())
    }

    pub fn same_shape(&self, other: &Operator) -> bool {
        self.rows() == other.rows() && self.cols == other.cols
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Operator) -> bool {
        self.same_shape(other)
            && self
                .entries
                .iter()
                .flatten()
                .zip(other.entries.iter().flatten())
                .all(|(a, b)| a <= b)
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Point> {
        Error::dims("operator apply", self.cols, x.len())?;
        Ok(Point::new(self.entries.iter().map(|r| dot(r, x)).collect()))
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Operator) -> Result<Operator> {
        Error::dims("operator compose", self.cols, rhs.rows())?;
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..rhs.cols)
                    .map(|j| {
                        row.iter()
                            .zip(&rhs.entries)
                            .fold(Rational::zero(), |acc, (a, r)| acc + a * &r[j])
                    })
                    .collect()
            })
            .collect();
        Ok(Operator {
            cols: rhs.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Operator {
        Operator {
            cols: self.rows(),
            entries: (0..self.cols)
                .map(|j| self.entries.iter().map(|r| r[j].clone()).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Operator) -> Result<Operator> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Operator) -> Result<Operator> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, lambda: &Rational) -> Operator {
        Operator {
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e * lambda).collect())
                .collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Operator,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Operator> {
        Error::dims("operator rows", self.rows(), other.rows())?;
        Error::dims("operator cols", self.cols, other.cols)?;
        Ok(Operator {
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        })
    }
}

/// `sum_k diag(alphas[k]) * ops[k]`, or the zero operator of the given shape
/// when the lists are empty.
pub fn diagonal_combination(
    alphas: &[DiagonalOrthomorphism],
    ops: &[Operator],
    rows: usize,
    cols: usize,
) -> Result<Operator> {
    Error::dims("diagonal combination", ops.len(), alphas.len())?;
    let mut acc = Operator::zeros(rows, cols);
    for (alpha, op) in alphas.iter().zip(ops) {
        acc = acc.add(&alpha.compose(op)?)?;
    }
    Ok(acc)
}

/// `sum_k diag(alphas[k]) * us[k]` for points.
pub fn diagonal_combination_points(
    alphas: &[DiagonalOrthomorphism],
    us: &[Point],
    dim: usize,
) -> Result<Point> {
    Error::dims("diagonal combination", us.len(), alphas.len())?;
    let mut acc = Point::zeros(dim);
    for (alpha, u) in alphas.iter().zip(us) {
        Error::dims("diagonal combination", dim, u.dim())?;
        acc = &acc + &alpha.apply(u)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn band(dim: usize, members: &[usize]) -> Band {
        Band::new(dim, members.iter().copied()).unwrap()
    }

    #[test]
    fn pos_neg_examples() {
        assert_eq!(
            pos_neg_parts(&Point::from_ints(&[5])),
            (Point::from_ints(&[5]), Point::from_ints(&[0]))
        );
        assert_eq!(
            pos_neg_parts(&Point::from_ints(&[0, 0])),
            (Point::from_ints(&[0, 0]), Point::from_ints(&[0, 0]))
        );
        assert_eq!(
            pos_neg_parts(&Point::from_ints(&[3, -2])),
            (Point::from_ints(&[3, 0]), Point::from_ints(&[0, 2]))
        );
    }

    #[test]
    fn band_algebra_examples() {
        assert_eq!(band(3, &[0, 1]).meet(&band(3, &[1, 2])).unwrap(), band(3, &[1]));
        assert_eq!(Band::empty(3).complement(), band(3, &[0, 1, 2]));
        assert!(band(2, &[0]).leq(&band(2, &[0, 1])).unwrap());
        assert!(!band(2, &[0, 1]).leq(&band(2, &[0])).unwrap());
        assert!(band(2, &[0]).meet(&band(3, &[0])).is_err());
        assert!(Band::new(2, [2]).is_err());
    }

    #[test]
    fn apply_band_examples() {
        let y = Point::from_ints(&[3, 4]);
        assert_eq!(apply_band(&band(2, &[0]), &y).unwrap(), Point::from_ints(&[3, 0]));
        assert_eq!(apply_band(&Band::full(2), &y).unwrap(), y);
        assert_eq!(apply_band(&Band::empty(2), &y).unwrap(), Point::zeros(2));
        assert!(apply_band(&Band::full(3), &y).is_err());
    }

    #[test]
    fn truth_value_examples() {
        let tv = truth_value(Relation::Le, &Point::from_ints(&[1, -1]), &Point::zeros(2));
        assert_eq!(tv.unwrap(), band(2, &[1]));
        let y = Point::from_ints(&[7, -3, 0]);
        assert_eq!(truth_value(Relation::Eq, &y, &y).unwrap(), Band::full(3));
        let tv = truth_value(Relation::Le, &Point::from_ints(&[2]), &Point::from_ints(&[1]));
        assert_eq!(tv.unwrap(), Band::empty(1));
    }

    #[test]
    fn mix_examples() {
        let ys = [Point::from_ints(&[1, 1]), Point::from_ints(&[2, 2])];
        let p = PartitionOfUnity::new(2, vec![band(2, &[0]), band(2, &[1])]).unwrap();
        assert_eq!(mix(&p, &ys).unwrap(), Point::from_ints(&[1, 2]));
        let p = PartitionOfUnity::new(2, vec![band(2, &[1]), band(2, &[0])]).unwrap();
        assert_eq!(mix(&p, &ys).unwrap(), Point::from_ints(&[2, 1]));
        let p = PartitionOfUnity::new(2, vec![Band::full(2)]).unwrap();
        assert_eq!(mix(&p, &ys[..1]).unwrap(), ys[0]);
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionOfUnity::new(2, vec![band(2, &[0])]).is_err());
        assert!(PartitionOfUnity::new(2, vec![band(2, &[0, 1]), band(2, &[1])]).is_err());
        let p = PartitionOfUnity::atoms(2);
        assert!(mix(&p, &[Point::zeros(2)]).is_err());
    }

    #[test]
    fn orthomorphism_compose_scales_rows() {
        let a = Operator::from_ints(&[&[1, 2], &[3, 4]]);
        let alpha = DiagonalOrthomorphism::new(Point::from_ints(&[2, -1]));
        let b = alpha.compose(&a).unwrap();
        assert_eq!(b, Operator::from_ints(&[&[2, 4], &[-3, -4]]));
        assert!(!alpha.is_positive());
    }
}
