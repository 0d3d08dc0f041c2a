//! Brute-force cross-checks for cone inclusions `{c <= 0} ⊇ {Mx <= 0}` at
//! desk scale.
//!
//! Deliberately independent of the simplex code: the cone `{x : Mx <= 0}` is
//! described by its lineality space plus the extreme rays of its pointed
//! part, found by enumerating row subsets and solving with Gaussian
//! elimination.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{dot, rat, Rational};
use crate::linalg::null_space;

/// Largest ambient dimension the oracle accepts.
pub const MAX_ORACLE_DIM: usize = 4;

/// `{x : Mx <= 0} = cone(rays) + span(lineality_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    pub rays: Vec<Vec<Rational>>,
    pub lineality_basis: Vec<Vec<Rational>>,
}

fn check_budget(m: &[Vec<Rational>], n: usize) -> Result<()> {
    if n > MAX_ORACLE_DIM {
        return Err(Error::BudgetExceeded {
            what: "oracle dimension",
            actual: n,
            limit: MAX_ORACLE_DIM,
        });
    }
    for row in m {
        Error::dims("oracle row", n, row.len())?;
    }
    Ok(())
}

/// Scales `v` so its first nonzero entry has absolute value one.
fn normalize(v: Vec<Rational>) -> Vec<Rational> {
    match v.iter().find(|e| !e.is_zero()).map(Signed::abs) {
        Some(s) => v.into_iter().map(|e| e / &s).collect(),
        None => v,
    }
}

/// Lexicographic `k`-subsets of `0..m`.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Generators of `{x ∈ Q^n : Mx <= 0}` for `n <= 4`.
///
/// With `L = ker M` of dimension `l`, the pointed part lives in `L^⊥`, which
/// has dimension `r = n - l`. Each extreme ray spans the solution line of
/// `r - 1` independent tight rows together with `x ⊥ L`. Rays come out in
/// order of the first subset producing them.
pub fn extreme_rays(m: &[Vec<Rational>], n: usize) -> Result<ConeGenerators> {
    check_budget(m, n)?;
    let lineality_basis = null_space(m, n);
    let r = n - lineality_basis.len();
    let mut rays: Vec<Vec<Rational>> = Vec::new();
    if r > 0 {
        for subset in subsets(m.len(), r - 1) {
            let mut system: Vec<Vec<Rational>> = subset.iter().map(|&i| m[i].clone()).collect();
            system.extend(lineality_basis.iter().cloned());
            let line = null_space(&system, n);
            if line.len() != 1 {
                continue;
            }
            let d = &line[0];
            for candidate in [d.clone(), d.iter().map(|e| -e).collect()] {
                if m.iter().all(|row| !dot(row, &candidate).is_positive()) {
                    let ray = normalize(candidate);
                    if !rays.contains(&ray) {
                        rays.push(ray);
                    }
                }
            }
        }
    }
    Ok(ConeGenerators {
        rays,
        lineality_basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Holds,
    /// A direction `d` with `Md <= 0` and `c . d > 0`.
    CounterexampleDirection(Vec<Rational>),
}

/// Decides `{c <= 0} ⊇ {Mx <= 0}` by checking `c` on every generator.
pub fn inclusion_oracle(m: &[Vec<Rational>], c: &[Rational]) -> Result<OracleVerdict> {
    let n = c.len();
    let gens = extreme_rays(m, n)?;
    for ray in &gens.rays {
        if dot(c, ray).is_positive() {
            return Ok(OracleVerdict::CounterexampleDirection(ray.clone()));
        }
    }
    for d in &gens.lineality_basis {
        let s = dot(c, d);
        if s.is_positive() {
            return Ok(OracleVerdict::CounterexampleDirection(d.clone()));
        }
        if s.is_negative() {
            return Ok(OracleVerdict::CounterexampleDirection(d.iter().map(|e| -e).collect()));
        }
    }
    Ok(OracleVerdict::Holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SamplingVerdict {
    Counterexample(Vec<Rational>),
    NotFound,
}

/// Random search for `x` with `Mx <= 0` and `c . x > 0`. Points are drawn
/// from a seeded ChaCha stream, so results are reproducible across platforms.
/// `NotFound` proves nothing.
pub fn falsify_by_sampling(
    m: &[Vec<Rational>],
    c: &[Rational],
    trials: usize,
    seed: u64,
) -> Result<SamplingVerdict> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let n = c.len();
    for row in m {
        Error::dims("sampling row", n, row.len())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x: Vec<Rational> = (0..n)
            .map(|_| rat(rng.gen_range(-10..=10), rng.gen_range(1..=5)))
            .collect();
        if dot(c, &x).is_positive() && m.iter().all(|row| !dot(row, &x).is_positive()) {
            return Ok(SamplingVerdict::Counterexample(x));
        }
    }
    Ok(SamplingVerdict::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ints;

    fn sorted(mut v: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        v.sort();
        v
    }

    #[test]
    fn rays_of_negative_orthant() {
        let g = extreme_rays(&[ints(&[1, 0]), ints(&[0, 1])], 2).unwrap();
        assert_eq!(sorted(g.rays), sorted(vec![ints(&[-1, 0]), ints(&[0, -1])]));
        assert!(g.lineality_basis.is_empty());
    }

    #[test]
    fn rays_of_half_plane() {
        let g = extreme_rays(&[ints(&[1, 0])], 2).unwrap();
        assert_eq!(g.rays, vec![ints(&[-1, 0])]);
        assert_eq!(g.lineality_basis, vec![ints(&[0, 1])]);
    }

    #[test]
    fn whole_space_has_only_lineality() {
        let g = extreme_rays(&[], 3).unwrap();
        assert!(g.rays.is_empty());
        assert_eq!(g.lineality_basis, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn pointed_cone_in_three_dimensions() {
        // x0 <= 0, x1 <= 0, x0 + x1 + x2 <= 0, -x2 <= 0.
        let m = vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[1, 1, 1]), ints(&[0, 0, -1])];
        let g = extreme_rays(&m, 3).unwrap();
        for ray in &g.rays {
            assert!(m.iter().all(|row| !dot(row, ray).is_positive()));
        }
        assert_eq!(
            sorted(g.rays),
            sorted(vec![ints(&[-1, 0, 0]), ints(&[0, -1, 0]), ints(&[-1, 0, 1]), ints(&[0, -1, 1])])
        );
    }

    #[test]
    fn budget_exceeded() {
        assert!(matches!(
            extreme_rays(&[], 5),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(inclusion_oracle(&[ints(&[1, 0])], &ints(&[1, 0])).unwrap(), OracleVerdict::Holds);
        assert_eq!(
            inclusion_oracle(&[ints(&[1, 0])], &ints(&[0, 1])).unwrap(),
            OracleVerdict::CounterexampleDirection(ints(&[0, 1]))
        );
        let id = [ints(&[1, 0]), ints(&[0, 1])];
        assert_eq!(inclusion_oracle(&id, &ints(&[0, 0])).unwrap(), OracleVerdict::Holds);
    }

    #[test]
    fn sampling_examples() {
        let m = [ints(&[1, 0])];
        let SamplingVerdict::Counterexample(x) = falsify_by_sampling(&m, &ints(&[0, 1]), 200, 7).unwrap()
        else {
            panic!("a quarter of the samples violate");
        };
        assert!(!x[0].is_positive() && x[1].is_positive());
        assert_eq!(
            falsify_by_sampling(&m, &ints(&[0, 0]), 500, 1).unwrap(),
            SamplingVerdict::NotFound
        );
        let boxed = [ints(&[1, 0]), ints(&[-1, 0]), ints(&[0, 1]), ints(&[0, -1])];
        assert_eq!(
            falsify_by_sampling(&boxed, &ints(&[3, -2]), 500, 3).unwrap(),
            SamplingVerdict::NotFound
        );
        assert_eq!(
            falsify_by_sampling(&m, &ints(&[0, 1]), 50, 11).unwrap(),
            falsify_by_sampling(&m, &ints(&[0, 1]), 50, 11).unwrap()
        );
        assert!(falsify_by_sampling(&m, &ints(&[0, 1]), 0, 0).is_err());
    }
}
