//! Seeded random instances for property tests, fuzzing and benchmarks.
//!
//! All draws come from a ChaCha stream, so a seed reproduces the same
//! instances on every platform.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{ComplexOperator, GaussianRational};
use crate::farkas::HomogeneousInstance;
use crate::interval::IntervalOperator;
use crate::lattice::{
    diagonal_combination, rat, DiagonalOrthomorphism, Operator, Point, Rational, Relation,
};
use crate::lp::{LinearProgram, Sense};

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Numerators are drawn from `-max_num..=max_num`.
    pub max_num: i64,
    /// Denominators are drawn from `1..=max_den`.
    pub max_den: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_num: 5,
            max_den: 3,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.max_num..=self.max_num);
        let d = self.rng.gen_range(1..=self.max_den);
        rat(n, d)
    }

    pub fn nonneg_rational(&mut self) -> Rational {
        let n = self.rng.gen_range(0..=self.max_num);
        let d = self.rng.gen_range(1..=self.max_den);
        rat(n, d)
    }

    /// A rational that is zero with probability `p_zero`.
    pub fn sparse_rational(&mut self, p_zero: f64) -> Rational {
        if self.rng.gen_bool(p_zero) {
            Rational::zero()
        } else {
            self.rational()
        }
    }

    pub fn row(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn point(&mut self, m: usize) -> Point {
        Point::new(self.row(m))
    }

    pub fn nonneg_point(&mut self, m: usize) -> Point {
        Point::new((0..m).map(|_| self.nonneg_rational()).collect())
    }

    pub fn operator(&mut self, m: usize, n: usize) -> Operator {
        Operator::new(n, (0..m).map(|_| self.row(n)).collect()).expect("consistent shape")
    }

    pub fn positive_diagonal(&mut self, m: usize) -> DiagonalOrthomorphism {
        DiagonalOrthomorphism::new(self.nonneg_point(m))
    }

    pub fn signed_diagonal(&mut self, m: usize) -> DiagonalOrthomorphism {
        DiagonalOrthomorphism::new(self.point(m))
    }

    /// A homogeneous instance with `1..=max_m` rows, `1..=max_n` columns and
    /// `0..=max_count` generators. Roughly half of the draws build `B` from
    /// random positive multipliers, so both outcomes are well represented.
    pub fn homogeneous(&mut self, max_m: usize, max_n: usize, max_count: usize) -> HomogeneousInstance {
        let m = self.range(1, max_m);
        let n = self.range(1, max_n);
        let count = self.range(0, max_count);
        let a_list: Vec<Operator> = (0..count).map(|_| self.operator(m, n)).collect();
        let b = if self.coin(0.5) {
            let alphas: Vec<DiagonalOrthomorphism> =
                (0..count).map(|_| self.positive_diagonal(m)).collect();
            diagonal_combination(&alphas, &a_list, m, n).expect("consistent shapes")
        } else {
            self.operator(m, n)
        };
        HomogeneousInstance::new(a_list, b).expect("consistent shapes")
    }

    /// An interval operator `[lower, lower + width]` with a nonnegative width
    /// that is zero in about a third of the entries.
    pub fn interval(&mut self, m: usize, n: usize) -> IntervalOperator {
        let lower = self.operator(m, n);
        let width = Operator::new(
            n,
            (0..m)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if self.coin(0.33) {
                                Rational::zero()
                            } else {
                                self.nonneg_rational()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .expect("consistent shape");
        let upper = lower.add(&width).expect("same shape");
        IntervalOperator::new(lower, upper).expect("lower <= upper")
    }

    pub fn gaussian(&mut self) -> GaussianRational {
        GaussianRational::new(self.rational(), self.rational())
    }

    /// A Gaussian rational with rational modulus, built from a scaled
    /// Pythagorean triple with random signs and orientation. Returns the value
    /// and its modulus.
    pub fn pythagorean(&mut self) -> (GaussianRational, Rational) {
        const TRIPLES: [(i64, i64, i64); 6] =
            [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (1, 0, 1)];
        let (mut a, mut b, c) = TRIPLES[self.range(0, TRIPLES.len() - 1)];
        if self.coin(0.5) {
            std::mem::swap(&mut a, &mut b);
        }
        if self.coin(0.5) {
            a = -a;
        }
        if self.coin(0.5) {
            b = -b;
        }
        let scale = self.nonneg_rational();
        let z = GaussianRational::new(rat(a, 1) * &scale, rat(b, 1) * &scale);
        (z, rat(c, 1) * scale)
    }

    pub fn complex_operator(&mut self, m: usize, n: usize) -> ComplexOperator {
        ComplexOperator::new(n, (0..m).map(|_| (0..n).map(|_| self.gaussian()).collect()).collect())
            .expect("consistent shape")
    }

    /// A random linear program with up to `max_vars` variables and
    /// `max_rows` constraints. Rows are sometimes duplicated, negated or
    /// made zero to exercise degenerate and infeasible cases.
    pub fn linear_program(&mut self, max_vars: usize, max_rows: usize) -> LinearProgram {
        let n = self.range(1, max_vars);
        let rows = self.range(0, max_rows);
        let mut lp = LinearProgram::new(n);
        for j in 0..n {
            let nonneg = self.coin(0.6);
            lp.set_nonneg(j, nonneg);
        }
        for _ in 0..rows {
            let rel = match self.range(0, 2) {
                0 => Relation::Le,
                1 => Relation::Ge,
                _ => Relation::Eq,
            };
            let roll = self.range(0, 9);
            let (coeffs, rhs) = match (roll, lp.constraints.last()) {
                (0, Some(prev)) => (prev.coeffs.clone(), prev.rhs.clone()),
                (1, Some(prev)) => (prev.coeffs.iter().map(|c| -c).collect(), self.rational()),
                (2, _) => (vec![Rational::zero(); n], self.rational()),
                _ => {
                    let coeffs = (0..n).map(|_| self.sparse_rational(0.3)).collect();
                    let rhs = if self.coin(0.3) { Rational::zero() } else { self.rational() };
                    (coeffs, rhs)
                }
            };
            lp.add_constraint(coeffs, rel, rhs);
        }
        if rows == 0 || self.coin(0.7) {
            let sense = if self.coin(0.5) { Sense::Min } else { Sense::Max };
            let coeffs = self.row(n);
            lp.set_objective(coeffs, sense);
        }
        lp
    }
}
