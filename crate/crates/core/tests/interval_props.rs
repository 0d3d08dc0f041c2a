use num_traits::Zero;
use orthofarkas::farkas::{decide_dominance, AlternativeWitness, Dominance, HomogeneousInstance};
use orthofarkas::interval::{
    adapted_decomposition, check_interval_inclusion, find_weak_solution, sublinear_apply,
    verify_violation, IntervalInclusion, IntervalOperator, WeakSolvability,
};
use orthofarkas::lattice::{diagonal_combination, Operator, Point, Rational};
use orthofarkas::sample::Sampler;

/// Draws an interval family, about half of the time built around an exact
/// positive combination so that weak solutions exist.
fn family(s: &mut Sampler) -> (Vec<IntervalOperator>, IntervalOperator) {
    let m = s.range(1, 2);
    let n = s.range(1, 3);
    let count = s.range(1, 2);
    let a: Vec<IntervalOperator> = (0..count).map(|_| s.interval(m, n)).collect();
    if s.coin(0.5) {
        return (a, s.interval(m, n));
    }
    let picks: Vec<Operator> = a
        .iter()
        .map(|iv| if s.coin(0.5) { iv.lower().clone() } else { iv.upper().clone() })
        .collect();
    let alphas: Vec<_> = (0..count).map(|_| s.positive_diagonal(m)).collect();
    let centre = diagonal_combination(&alphas, &picks, m, n).unwrap();
    let spread = s.interval(m, n).width();
    let b = IntervalOperator::new(centre.sub(&spread).unwrap(), centre.add(&spread).unwrap()).unwrap();
    (a, b)
}

#[test]
fn weak_solutions_match_support_inclusion() {
    let mut s = Sampler::new(31);
    let mut seen = [0usize; 2];
    for _ in 0..200 {
        let (a, b) = family(&mut s);
        let weak = find_weak_solution(&a, &b).unwrap();
        let incl = check_interval_inclusion(&a, &b, 12).unwrap();
        match (&weak, &incl) {
            (WeakSolvability::Solution(sol), IntervalInclusion::Holds) => {
                assert!(sol.verify(&a, &b));
                seen[0] += 1;
            }
            (WeakSolvability::NoSolution { stratum }, IntervalInclusion::Violation { x, b: band }) => {
                assert!(verify_violation(&a, &b, x, band));
                assert!(band.contains(*stratum));
                seen[1] += 1;
            }
            _ => panic!("disagreement on {a:?} / {b:?}: {weak:?} vs {incl:?}"),
        }
    }
    assert!(seen.iter().all(|&c| c > 0), "outcome mix {seen:?}");
}

#[test]
fn degenerate_intervals_reduce_to_dominance() {
    let mut s = Sampler::new(37);
    for _ in 0..200 {
        let inst = s.homogeneous(2, 3, 2);
        let a: Vec<IntervalOperator> = inst.a_list().iter().cloned().map(IntervalOperator::point).collect();
        let b = IntervalOperator::point(inst.b().clone());
        let dom = decide_dominance(&inst).unwrap();
        let weak = find_weak_solution(&a, &b).unwrap();
        let incl = check_interval_inclusion(&a, &b, 12).unwrap();
        match (&dom, &weak, &incl) {
            (Dominance::Certificate(_), WeakSolvability::Solution(_), IntervalInclusion::Holds) => {}
            (Dominance::Witness(_), WeakSolvability::NoSolution { .. }, IntervalInclusion::Violation { x, b: band }) => {
                let flipped = AlternativeWitness {
                    x: x.iter().map(|v| -v).collect(),
                    b: band.clone(),
                    b_prime: band.clone(),
                };
                assert!(flipped.verify(&inst));
            }
            _ => panic!("disagreement on {inst:?}: {dom:?} / {weak:?} / {incl:?}"),
        }
    }
}

#[test]
fn empty_family_has_no_stray_solution() {
    let b = IntervalOperator::point(Operator::from_ints(&[&[1, 0]]));
    let inst = HomogeneousInstance::new(vec![], b.lower().clone()).unwrap();
    assert!(matches!(decide_dominance(&inst).unwrap(), Dominance::Witness(_)));
    assert!(matches!(find_weak_solution(&[], &b).unwrap(), WeakSolvability::NoSolution { stratum: 0 }));
}

#[test]
fn support_map_is_positively_homogeneous() {
    let mut s = Sampler::new(41);
    for _ in 0..1000 {
        let (m, n) = (s.range(1, 3), s.range(1, 4));
        let t = s.interval(m, n);
        let x = s.row(n);
        let lambda = s.nonneg_rational();
        let scaled: Vec<Rational> = x.iter().map(|v| v * &lambda).collect();
        assert_eq!(
            sublinear_apply(&t, &scaled).unwrap(),
            sublinear_apply(&t, &x).unwrap().scale(&lambda)
        );
    }
}

#[test]
fn support_map_is_subadditive_and_dominates_members() {
    let mut s = Sampler::new(43);
    for _ in 0..300 {
        let (m, n) = (s.range(1, 3), s.range(1, 4));
        let t = s.interval(m, n);
        let (x, y) = (s.row(n), s.row(n));
        let sum: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let lhs = sublinear_apply(&t, &sum).unwrap();
        let rhs = &sublinear_apply(&t, &x).unwrap() + &sublinear_apply(&t, &y).unwrap();
        assert!(lhs.le(&rhs));
        for member in [t.lower(), t.upper()] {
            assert!(member.apply(&x).unwrap().le(&sublinear_apply(&t, &x).unwrap()));
        }
    }
}

#[test]
fn degenerate_support_map_is_the_operator() {
    let mut s = Sampler::new(47);
    for _ in 0..300 {
        let (m, n) = (s.range(1, 3), s.range(1, 4));
        let op = s.operator(m, n);
        let x = s.row(n);
        assert_eq!(sublinear_apply(&IntervalOperator::point(op.clone()), &x).unwrap(), op.apply(&x).unwrap());
    }
}

#[test]
fn decomposition_resums_with_disjoint_addends() {
    let mut s = Sampler::new(53);
    for _ in 0..300 {
        let (m, n) = (s.range(1, 3), s.range(1, 4));
        let t = s.interval(m, n);
        let parts = adapted_decomposition(&t);
        let total = parts.iter().fold(Operator::zeros(m, n), |acc, p| acc.add(p).unwrap());
        assert_eq!(total, t.width());
        for (i, p) in parts.iter().enumerate() {
            assert!(p.is_nonnegative() && !p.is_zero());
            for q in &parts[i + 1..] {
                let overlap = (0..m).any(|r| (0..n).any(|c| !p.get(r, c).is_zero() && !q.get(r, c).is_zero()));
                assert!(!overlap);
            }
        }
        let zero = Point::zeros(m);
        assert!(parts.iter().all(|p| zero.le(&p.apply(&vec![Rational::from_integer(1.into()); n]).unwrap())));
    }
}
