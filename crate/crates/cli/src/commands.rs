//! One runner per subcommand: parse, decide, re-verify, render.

use orthofarkas::complex::{
    search_complex_certificate_with, verify_complex_certificate, ComplexDiagonalOrthomorphism,
    ComplexInstance, ComplexOperator, ComplexSearch, ComplexVerdict, GaussianRational,
    RefinementBudget,
};
use orthofarkas::farkas::{
    decide_dominance_with, decide_inhomogeneous_with, decide_matrix_dominance_with, factor_positive,
    factor_through, reconstruct, Dominance, Factorization, HomogeneousInstance,
    InhomogeneousDecision, InhomogeneousInstance, MatrixDecision, MatrixInstance,
    PositiveFactorization, Reconstruction,
};
use orthofarkas::interval::{
    check_interval_inclusion_with, find_weak_solution_with, IntervalInclusion, IntervalOperator,
    WeakSolvability,
};
use orthofarkas::lattice::{Band, DiagonalOrthomorphism, Operator, Point, Rational, Relation};
use orthofarkas::lp::{conic_membership, solve, ConeMembership, LinearProgram, LpOutcome};
use orthofarkas::oracle::{falsify_by_sampling, inclusion_oracle, OracleVerdict, SamplingVerdict};
use orthofarkas::{Error, Exec};
use serde_json::{json, Value};

use crate::input::{Instance, InputError};
use crate::render;
use crate::verify::{self, Comparison, IntervalData, Matrix};

pub struct Settings {
    pub seed: u64,
    pub sides: usize,
    pub budget: RefinementBudget,
    pub orthant_budget: usize,
    pub exec: Exec,
}

/// A decided instance before it is wrapped into a result document.
pub struct Outcome {
    pub result: &'static str,
    pub body: Value,
    pub verified: bool,
    pub exit: i32,
}

pub enum Failure {
    Input(String),
    Budget(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Run = std::result::Result<Outcome, Failure>;

fn outcome(result: &'static str, body: Value, verified: bool, exit: i32) -> Run {
    Ok(Outcome {
        result,
        body,
        verified,
        exit,
    })
}

fn refs(ops: &[Operator]) -> Vec<&Matrix> {
    ops.iter().map(|o| o.entries()).collect()
}

fn coords(points: &[Point]) -> Vec<&[Rational]> {
    points.iter().map(Point::coords).collect()
}

fn diags(alphas: &[DiagonalOrthomorphism]) -> Vec<Vec<Rational>> {
    alphas.iter().map(|a| a.diag().coords().to_vec()).collect()
}

fn members(b: &Band) -> Vec<usize> {
    b.members().collect()
}

/// Farkas multipliers proving `{a_k[i] . x <= u_k[i]}` infeasible, checked
/// independently.
fn stratum_refutation(a_list: &[Operator], u_list: &[Point], i: usize) -> (Value, bool) {
    let n = a_list.first().map_or(0, Operator::cols);
    let mut lp = LinearProgram::new(n);
    for (a, u) in a_list.iter().zip(u_list) {
        lp.add_constraint(a.row(i).to_vec(), Relation::Le, u.get(i).clone());
    }
    match solve(&lp) {
        Ok(LpOutcome::Infeasible(y)) => {
            let rows: Vec<&[Rational]> = a_list.iter().map(|a| a.row(i)).collect();
            let rhs: Vec<Rational> = u_list.iter().map(|u| u.get(i).clone()).collect();
            let ok = verify::infeasible_rows(&rows, &rhs, &y);
            (render::vector(&y), ok)
        }
        _ => (Value::Null, false),
    }
}

fn inconsistent(b: &Band, a_list: &[Operator], u_list: &[Point]) -> Run {
    let i = b.members().next().expect("stratum bands are atoms");
    let (y, ok) = stratum_refutation(a_list, u_list, i);
    outcome(
        "inconsistent-stratum",
        json!({ "band": render::band(b), "farkas_multipliers": y }),
        ok,
        1,
    )
}

pub fn dominance(doc: &Instance, s: &Settings) -> Run {
    let (m, n, count) = (doc.size("m")?, doc.size("n")?, doc.size("N")?);
    let a = doc.matrices("A", count, m, n)?;
    let b = doc.matrix("B", m, n)?;
    let inst = HomogeneousInstance::new(a.clone(), b.clone())?;
    match decide_dominance_with(&inst, s.exec)? {
        Dominance::Certificate(c) => {
            let alphas = diags(&c.alphas);
            let ok = verify::dominance_certificate(&refs(&a), b.entries(), &alphas);
            outcome("certificate", json!({ "alphas": render::matrix(&alphas) }), ok, 0)
        }
        Dominance::Witness(w) => {
            let ok = verify::dominance_witness(&refs(&a), b.entries(), &w.x, &members(&w.b), &members(&w.b_prime));
            let body = json!({
                "x": render::vector(&w.x),
                "band": render::band(&w.b),
                "band_prime": render::band(&w.b_prime),
            });
            outcome("witness", body, ok, 1)
        }
    }
}

pub fn inhomogeneous(doc: &Instance, s: &Settings) -> Run {
    let (m, n, count) = (doc.size("m")?, doc.size("n")?, doc.size("N")?);
    let a = doc.matrices("A", count, m, n)?;
    let b = doc.matrix("B", m, n)?;
    let u = doc.points("u", count, m)?;
    let v = doc.vector("v", m)?;
    let inst = InhomogeneousInstance::new(a.clone(), b.clone(), u.clone(), Point::new(v.clone()))?;
    match decide_inhomogeneous_with(&inst, s.exec)? {
        InhomogeneousDecision::Certificate(c) => {
            let alphas = diags(&c.alphas);
            let ok = verify::inhomogeneous_certificate(&refs(&a), b.entries(), &coords(&u), &v, &alphas);
            outcome("certificate", json!({ "alphas": render::matrix(&alphas) }), ok, 0)
        }
        InhomogeneousDecision::Witness(w) => {
            let ok = verify::inhomogeneous_witness(&refs(&a), b.entries(), &coords(&u), &v, &w.x, &members(&w.b));
            outcome("witness", json!({ "x": render::vector(&w.x), "band": render::band(&w.b) }), ok, 1)
        }
        InhomogeneousDecision::InconsistentStratum(band) => inconsistent(&band, &a, &u),
    }
}

pub fn matrix(doc: &Instance, s: &Settings) -> Run {
    let (m, n) = (doc.size("m")?, doc.size("n")?);
    let (s_blocks, t_blocks) = (doc.size("s")?, doc.size("t")?);
    let a = doc.matrices("A", t_blocks, m, n)?;
    let b = doc.matrices("B", s_blocks, m, n)?;
    let u = doc.points("u", t_blocks, m)?;
    let v = doc.points("v", s_blocks, m)?;
    let inst = MatrixInstance::new(a.clone(), b.clone(), u.clone(), v.clone())?;
    match decide_matrix_dominance_with(&inst, s.exec)? {
        MatrixDecision::Certificate(c) => {
            let grid: Vec<Vec<Vec<Rational>>> = c.grid.iter().map(|row| diags(row)).collect();
            let ok = grid.iter().zip(&b).zip(&v).all(|((row, bj), vj)| {
                verify::inhomogeneous_certificate(&refs(&a), bj.entries(), &coords(&u), vj.coords(), row)
            });
            let body = json!({ "grid": Value::Array(grid.iter().map(|r| render::matrix(r)).collect()) });
            outcome("certificate", body, ok, 0)
        }
        MatrixDecision::Witness(w) => {
            let ok = verify::inhomogeneous_witness(
                &refs(&a),
                b[w.block].entries(),
                &coords(&u),
                v[w.block].coords(),
                &w.x,
                &members(&w.b),
            );
            let body = json!({ "x": render::vector(&w.x), "band": render::band(&w.b), "block": w.block });
            outcome("witness", body, ok, 1)
        }
        MatrixDecision::InconsistentStratum(band) => inconsistent(&band, &a, &u),
    }
}

pub fn reconstruct_cmd(doc: &Instance, _: &Settings) -> Run {
    let (m, n) = (doc.size("m")?, doc.size("n")?);
    let a = doc.matrix("A", m, n)?;
    let b = doc.matrix("B", m, n)?;
    match reconstruct(&a, &b)? {
        Reconstruction::Solution(r) => {
            let alpha = r.alpha.diag().coords().to_vec();
            let ok = verify::reconstruction(a.entries(), b.entries(), &alpha, &members(&r.kappa));
            let body = json!({ "alpha": render::vector(&alpha), "kappa": render::band(&r.kappa) });
            outcome("certificate", body, ok, 0)
        }
        Reconstruction::NoSolution { stratum } => {
            let ok = verify::rows_not_proportional(a.entries(), b.entries(), stratum);
            outcome("no-solution", json!({ "stratum": stratum }), ok, 1)
        }
    }
}

fn interval_data(t: &IntervalOperator) -> IntervalData<'_> {
    IntervalData {
        lower: t.lower().entries(),
        upper: t.upper().entries(),
    }
}

pub fn interval(doc: &Instance, s: &Settings) -> Run {
    let (m, n, count) = (doc.size("m")?, doc.size("n")?, doc.size("N")?);
    let a = doc.intervals("A", count, m, n)?;
    let b = doc.interval("B", m, n)?;
    let inclusion = check_interval_inclusion_with(&a, &b, s.orthant_budget, s.exec)?;
    let weak = find_weak_solution_with(&a, &b, s.exec)?;
    let a_data: Vec<IntervalData> = a.iter().map(interval_data).collect();
    let b_data = interval_data(&b);
    match (inclusion, weak) {
        (IntervalInclusion::Holds, WeakSolvability::Solution(sol)) => {
            let alphas = diags(&sol.alphas);
            let ok = verify::weak_solution(&a_data, &b_data, &alphas, &refs(&sol.a_selections), sol.b_selection.entries());
            let body = json!({
                "alphas": render::matrix(&alphas),
                "a_selections": Value::Array(sol.a_selections.iter().map(render::operator).collect()),
                "b_selection": render::operator(&sol.b_selection),
            });
            outcome("holds", body, ok, 0)
        }
        (IntervalInclusion::Violation { x, b: band }, WeakSolvability::NoSolution { stratum }) => {
            let ok = band.contains(stratum)
                && band.members().all(|i| verify::support_violation(&a_data, &b_data, &x, i));
            outcome("violation", json!({ "x": render::vector(&x), "band": render::band(&band) }), ok, 1)
        }
        (inclusion, weak) => {
            eprintln!("warning: support inclusion and weak solvability disagree");
            let body = json!({ "inclusion": format!("{inclusion:?}"), "weak_solution": format!("{weak:?}") });
            outcome("error", body, false, 2)
        }
    }
}

struct ComplexData {
    inst: ComplexInstance,
    a: Vec<ComplexOperator>,
    b: ComplexOperator,
    u: Vec<Point>,
    v: Vec<Rational>,
    m: usize,
    count: usize,
}

fn complex_data(doc: &Instance) -> std::result::Result<ComplexData, Failure> {
    let (m, n, count) = (doc.size("m")?, doc.size("n")?, doc.size("N")?);
    let a = doc.complex_matrices("A", count, m, n)?;
    let b = doc.complex_matrix("B", m, n)?;
    let u = doc.points("u", count, m)?;
    let v = doc.vector("v", m)?;
    let inst = ComplexInstance::new(a.clone(), b.clone(), u.clone(), Point::new(v.clone()))?;
    Ok(ComplexData {
        inst,
        a,
        b,
        u,
        v,
        m,
        count,
    })
}

/// Independent verdict for `B = sum c_k A_k`, `v >= sum |c_k| u_k`.
fn complex_verdict(data: &ComplexData, c: &[Vec<GaussianRational>], finest: &Rational) -> ComplexVerdict {
    let a: Vec<&verify::ComplexMatrix> = data.a.iter().map(ComplexOperator::entries).collect();
    if !verify::complex_identity(&a, data.b.entries(), c) {
        return ComplexVerdict::Invalid;
    }
    let mut undecided = false;
    for i in 0..data.m {
        let ci: Vec<GaussianRational> = c.iter().map(|ck| ck[i].clone()).collect();
        let ui: Vec<Rational> = data.u.iter().map(|u| u.get(i).clone()).collect();
        match verify::modulus_sum(&ci, &ui, &data.v[i], finest) {
            Comparison::AtMost => {}
            Comparison::Exceeds => return ComplexVerdict::Invalid,
            Comparison::Unresolved => undecided = true,
        }
    }
    if undecided {
        ComplexVerdict::Undecided
    } else {
        ComplexVerdict::Valid
    }
}

pub fn complex_verify(doc: &Instance, s: &Settings) -> Run {
    let data = complex_data(doc)?;
    let c = doc.complex_vectors("c", data.count, data.m)?;
    let cert: Vec<ComplexDiagonalOrthomorphism> =
        c.iter().cloned().map(ComplexDiagonalOrthomorphism::new).collect();
    let verdict = verify_complex_certificate(&cert, &data.inst, &s.budget)?;
    let ok = complex_verdict(&data, &c, &s.budget.finest) == verdict;
    let body = json!({ "finest_precision": render::rational(&s.budget.finest) });
    match verdict {
        ComplexVerdict::Valid => outcome("valid", body, ok, 0),
        ComplexVerdict::Invalid => outcome("invalid", body, ok, 1),
        ComplexVerdict::Undecided => outcome("undecided", body, ok, 3),
    }
}

pub fn complex_search(doc: &Instance, s: &Settings) -> Run {
    let data = complex_data(doc)?;
    match search_complex_certificate_with(&data.inst, s.sides, &s.budget, s.exec)? {
        ComplexSearch::Found(cert) => {
            let c: Vec<Vec<GaussianRational>> = cert.iter().map(|d| d.diag.clone()).collect();
            let ok = complex_verdict(&data, &c, &s.budget.finest) == ComplexVerdict::Valid;
            let body = json!({
                "c": Value::Array(c.iter().map(|ck| render::complex_vector(ck)).collect()),
                "sides": s.sides,
            });
            outcome("certificate", body, ok, 0)
        }
        // The polygonal search is incomplete, so a miss refutes nothing.
        ComplexSearch::NotFound { stratum } => {
            outcome("undecided", json!({ "stratum": stratum, "sides": s.sides }), false, 3)
        }
    }
}

pub fn factor(doc: &Instance, _: &Settings) -> Run {
    let (m, n, p) = (doc.size("m")?, doc.size("n")?, doc.size("p")?);
    let a = doc.matrix("A", m, n)?;
    let b = doc.matrix("B", p, n)?;
    match factor_through(&a, &b)? {
        Factorization::Factor(x) => {
            let ok = verify::left_factor(a.entries(), b.entries(), x.entries(), false);
            outcome("certificate", json!({ "X": render::operator(&x) }), ok, 0)
        }
        Factorization::NoSolution { row, kernel_witness } => {
            let ok = verify::kernel_escape(a.entries(), b.entries(), &kernel_witness, row);
            let body = json!({ "row": row, "kernel_witness": render::vector(&kernel_witness) });
            outcome("no-solution", body, ok, 1)
        }
    }
}

pub fn factor_positive_cmd(doc: &Instance, _: &Settings) -> Run {
    let (m, n, p) = (doc.size("m")?, doc.size("n")?, doc.size("p")?);
    let a = doc.matrix("A", m, n)?;
    let b = doc.matrix("B", p, n)?;
    match factor_positive(&a, &b)? {
        PositiveFactorization::Factor(x) => {
            let ok = verify::left_factor(a.entries(), b.entries(), x.entries(), true);
            outcome("certificate", json!({ "X": render::operator(&x) }), ok, 0)
        }
        PositiveFactorization::Witness { x, row } => {
            let ok = verify::cone_escape(a.entries(), b.entries(), &x, row);
            outcome("witness", json!({ "x": render::vector(&x), "row": row }), ok, 1)
        }
    }
}

pub fn oracle(doc: &Instance, s: &Settings) -> Run {
    let (m, n) = (doc.size("m")?, doc.size("n")?);
    let trials = doc.optional_size("trials")?.unwrap_or(1000);
    let rows = doc.matrix("M", m, n)?;
    let c = doc.vector("c", n)?;
    let verdict = inclusion_oracle(rows.entries(), &c)?;
    let sampled = falsify_by_sampling(rows.entries(), &c, trials, s.seed)?;
    let c_row = [c.clone()];
    let (sample_value, sample_ok) = match &sampled {
        SamplingVerdict::Counterexample(x) => {
            (render::vector(x), verify::cone_escape(rows.entries(), &c_row, x, 0))
        }
        SamplingVerdict::NotFound => (Value::Null, true),
    };
    let sampling = json!({ "seed": s.seed, "trials": trials, "counterexample": sample_value });
    match verdict {
        OracleVerdict::Holds => {
            // The oracle never touches the simplex code; the cross-check does.
            let ok = match conic_membership(rows.entries(), &c)? {
                ConeMembership::Multipliers(w) => verify::conic_combination(rows.entries(), &c, &w),
                ConeMembership::SeparatingVector(_) => false,
            };
            let ok = ok && matches!(sampled, SamplingVerdict::NotFound);
            outcome("holds", json!({ "sampling": sampling }), ok, 0)
        }
        OracleVerdict::CounterexampleDirection(d) => {
            let ok = sample_ok && verify::cone_escape(rows.entries(), &c_row, &d, 0);
            outcome("violation", json!({ "direction": render::vector(&d), "sampling": sampling }), ok, 1)
        }
    }
}
