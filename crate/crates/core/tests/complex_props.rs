use num_traits::{One, Signed, Zero};
use orthofarkas::complex::{
    complex_combination, modulus_enclosure, search_complex_certificate, verify_complex_certificate,
    ComplexDiagonalOrthomorphism, ComplexInstance, ComplexOperator, ComplexSearch, ComplexVerdict,
    GaussianRational, RefinementBudget,
};
use orthofarkas::farkas::{decide_inhomogeneous, InhomogeneousDecision, InhomogeneousInstance};
use orthofarkas::lattice::{rat, Point, Rational};
use orthofarkas::sample::Sampler;

struct Constructed {
    inst: ComplexInstance,
    certificate: Vec<ComplexDiagonalOrthomorphism>,
    /// `sum_k |c_k| u_k`, exact because every modulus is rational.
    certified: Point,
}

fn pythagorean_instance(s: &mut Sampler) -> Constructed {
    let (m, n, count) = (s.range(1, 3), s.range(1, 3), s.range(1, 3));
    let a_list: Vec<ComplexOperator> = (0..count).map(|_| s.complex_operator(m, n)).collect();
    let u_list: Vec<Point> = (0..count).map(|_| s.nonneg_point(m)).collect();
    let mut certificate = Vec::new();
    let mut certified = vec![Rational::zero(); m];
    for u in &u_list {
        let mut diag = Vec::new();
        for (i, total) in certified.iter_mut().enumerate() {
            let (z, modulus) = s.pythagorean();
            *total += modulus * u.get(i);
            diag.push(z);
        }
        certificate.push(ComplexDiagonalOrthomorphism::new(diag));
    }
    let b = complex_combination(&certificate, &a_list, m, n).unwrap();
    let certified = Point::new(certified);
    let v = &certified + &s.nonneg_point(m);
    Constructed {
        inst: ComplexInstance::new(a_list, b, u_list, v).unwrap(),
        certificate,
        certified,
    }
}

#[test]
fn pythagorean_certificates_verify_and_flip() {
    let mut s = Sampler::new(61);
    let budget = RefinementBudget::default();
    for _ in 0..100 {
        let c = pythagorean_instance(&mut s);
        assert_eq!(
            verify_complex_certificate(&c.certificate, &c.inst, &budget).unwrap(),
            ComplexVerdict::Valid
        );
        let i = s.range(0, c.inst.rows() - 1);
        let mut lowered = c.inst.v().coords().to_vec();
        lowered[i] = c.certified.get(i) - rat(1, 7);
        let perturbed = ComplexInstance::new(
            c.inst.a_list().to_vec(),
            c.inst.b().clone(),
            c.inst.u_list().to_vec(),
            Point::new(lowered),
        )
        .unwrap();
        assert_eq!(
            verify_complex_certificate(&c.certificate, &perturbed, &budget).unwrap(),
            ComplexVerdict::Invalid
        );
    }
}

#[test]
fn search_outputs_always_verify() {
    let mut s = Sampler::new(67);
    let budget = RefinementBudget::default();
    let mut found = 0;
    for _ in 0..60 {
        let c = pythagorean_instance(&mut s);
        for sides in [4, 8] {
            if let ComplexSearch::Found(cert) = search_complex_certificate(&c.inst, sides, &budget).unwrap() {
                assert_eq!(
                    verify_complex_certificate(&cert, &c.inst, &budget).unwrap(),
                    ComplexVerdict::Valid
                );
                found += 1;
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn enclosures_hold_their_invariants() {
    let mut s = Sampler::new(71);
    let precisions = [Rational::one(), rat(1, 10), rat(1, 1000)];
    for _ in 0..1000 {
        let z = s.gaussian();
        for p in &precisions {
            let enc = modulus_enclosure(&z, p).unwrap();
            assert!(enc.encloses(&z), "{z:?} at {p}: {enc:?}");
            assert!(enc.width() <= *p);
        }
    }
    for _ in 0..200 {
        let (z, modulus) = s.pythagorean();
        let enc = modulus_enclosure(&z, &rat(1, 10)).unwrap();
        assert!(enc.is_exact() && enc.lower == modulus);
    }
}

#[test]
fn real_certificates_are_complex_certificates() {
    let mut s = Sampler::new(73);
    let budget = RefinementBudget::default();
    let mut certified = 0;
    for _ in 0..150 {
        let (m, n, count) = (s.range(1, 2), s.range(1, 3), s.range(1, 2));
        let a_list: Vec<_> = (0..count).map(|_| s.operator(m, n)).collect();
        let u_list: Vec<Point> = (0..count).map(|_| s.nonneg_point(m)).collect();
        let alphas: Vec<_> = (0..count).map(|_| s.positive_diagonal(m)).collect();
        let b = orthofarkas::lattice::diagonal_combination(&alphas, &a_list, m, n).unwrap();
        let sum = orthofarkas::lattice::diagonal_combination_points(&alphas, &u_list, m).unwrap();
        let v = &sum + &s.nonneg_point(m);
        let real = InhomogeneousInstance::new(a_list.clone(), b.clone(), u_list.clone(), v.clone()).unwrap();
        let InhomogeneousDecision::Certificate(cert) = decide_inhomogeneous(&real).unwrap() else {
            panic!("constructed certificate exists");
        };
        let complex = ComplexInstance::new(
            a_list.iter().map(ComplexOperator::from_real).collect(),
            ComplexOperator::from_real(&b),
            u_list,
            v,
        )
        .unwrap();
        let as_complex: Vec<ComplexDiagonalOrthomorphism> = cert
            .alphas
            .iter()
            .map(|a| ComplexDiagonalOrthomorphism::new(a.diag().coords().iter().cloned().map(GaussianRational::real).collect()))
            .collect();
        assert_eq!(
            verify_complex_certificate(&as_complex, &complex, &budget).unwrap(),
            ComplexVerdict::Valid
        );
        let ComplexSearch::Found(found) = search_complex_certificate(&complex, 8, &budget).unwrap() else {
            panic!("search missed a real certificate on {complex:?}");
        };
        assert_eq!(verify_complex_certificate(&found, &complex, &budget).unwrap(), ComplexVerdict::Valid);
        certified += 1;
    }
    assert_eq!(certified, 150);
}

#[test]
fn zero_budget_forces_zero_multipliers() {
    let a = ComplexOperator::from_real(&orthofarkas::lattice::Operator::from_ints(&[&[1, 2]]));
    let b = ComplexOperator::new(2, vec![vec![GaussianRational::new(rat(1, 1), rat(1, 1)), GaussianRational::zero()]]).unwrap();
    let inst = ComplexInstance::new(vec![a], b, vec![Point::from_ints(&[1])], Point::from_ints(&[0])).unwrap();
    let out = search_complex_certificate(&inst, 8, &RefinementBudget::default()).unwrap();
    assert_eq!(out, ComplexSearch::NotFound { stratum: 0 });
    assert!(inst.v().coords().iter().all(|v| !v.is_positive()));
}
