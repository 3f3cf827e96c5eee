//! Acceptance suite: one test per criterion, each printing a single
//! `criterion NN: PASS` line on success (run with `--nocapture` to see them;
//! the harness result line mirrors the same pass/fail status).

use std::time::Instant;

use harmonics_core::curvio::{
    a_contractions, harmonic_identity_suite, invariants, monte_carlo_average_t2,
    sphere_average_q0, sphere_average_t2, symmetrized_average_q0, symmetrized_average_t2,
};
use harmonics_core::jets::{
    ball_integrand_series, ledger_series, q_contract, r_s_norm_series, riccati_residual,
    series_trace, sigma_series, EndoWord, Gen, Monomial, ScalarPolynomial,
};
use harmonics_core::models::{space_form, SpaceSpec};
use harmonics_core::rational::{int, rat, Rat};
use harmonics_core::spectra::{
    a0_sphere_series, a1_sphere_series, distinguisher_ball, distinguisher_sphere,
    trace_sigma_series, Bindings, Boundary, RadialScalarSeries, ResidualPolicy, Verdict,
};

fn pass(criterion: u32, what: &str, started: Instant) {
    println!(
        "criterion {criterion:02}: PASS — {what} ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1.0_f64.max(a.abs()).max(b.abs())
}

fn build(spec: &str) -> harmonics_core::curvio::CurvaturePoint {
    SpaceSpec::parse(spec).unwrap().build().unwrap()
}

fn bindings(spec: &str) -> Bindings {
    Bindings::from_invariants(&invariants(&build(spec)), ResidualPolicy::Reject)
}

fn word(orders: &[u32]) -> EndoWord {
    EndoWord::from_jets(orders)
}

#[test]
fn criterion_01_shape_operator_series() {
    let t0 = Instant::now();
    let sigma = ledger_series(6);
    let expect: &[(i64, &[(&[u32], Rat)])] = &[
        (-1, &[(&[], int(1))]),
        (1, &[(&[0], rat(-1, 3))]),
        (2, &[(&[1], rat(-1, 4))]),
        (3, &[(&[2], rat(-1, 10)), (&[0, 0], rat(-1, 45))]),
        (4, &[
            (&[3], rat(-1, 36)),
            (&[0, 1], rat(-1, 72)),
            (&[1, 0], rat(-1, 72)),
        ]),
        (5, &[
            (&[4], rat(-1, 168)),
            (&[0, 2], rat(-1, 210)),
            (&[2, 0], rat(-1, 210)),
            (&[1, 1], rat(-1, 112)),
            (&[0, 0, 0], rat(-2, 945)),
        ]),
    ];
    let mut total = 0;
    for (power, terms) in expect {
        let coeff = sigma.coefficient(*power);
        for (orders, value) in *terms {
            let w = if orders.is_empty() { EndoWord::unit() } else { word(orders) };
            assert_eq!(coeff.coeff(&w), *value, "power {power}, word {orders:?}");
            total += 1;
        }
        assert_eq!(coeff.terms().count(), terms.len(), "extra terms at power {power}");
    }
    assert_eq!(total, 13);
    assert!(sigma.coefficient(0).is_zero());
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(1, "thirteen exact shape-operator coefficients through r^5", t0);
}

#[test]
fn criterion_02_derivative_series() {
    let t0 = Instant::now();
    let sp = ledger_series(7).derivative().truncate(4);
    let cases: &[(i64, &[u32], Rat)] = &[
        (-2, &[], int(-1)),
        (0, &[0], rat(-1, 3)),
        (1, &[1], rat(-1, 2)),
        (2, &[2], rat(-3, 10)),
        (2, &[0, 0], rat(-1, 15)),
        (3, &[3], rat(-1, 9)),
        (3, &[0, 1], rat(-1, 18)),
        (3, &[1, 0], rat(-1, 18)),
        (4, &[4], rat(-5, 168)),
        (4, &[0, 2], rat(-1, 42)),
        (4, &[2, 0], rat(-1, 42)),
        (4, &[1, 1], rat(-5, 112)),
        (4, &[0, 0, 0], rat(-2, 189)),
    ];
    for (power, orders, value) in cases {
        let w = if orders.is_empty() { EndoWord::unit() } else { word(orders) };
        assert_eq!(sp.coefficient(*power).coeff(&w), *value, "power {power}, {orders:?}");
    }
    pass(2, "derivative series matches the displayed expansion", t0);
}

#[test]
fn criterion_03_trace_coefficients() {
    let t0 = Instant::now();
    let n_minus_1 = ScalarPolynomial::gen(Gen::Dim).sub(&ScalarPolynomial::constant(int(1)));
    let sigma = sigma_series(6);

    let trs = series_trace(&sigma);
    assert_eq!(trs.coefficient(-1), n_minus_1);
    assert_eq!(trs.coefficient(1), ScalarPolynomial::gen(Gen::C).scale(&rat(-1, 3)));
    assert_eq!(trs.coefficient(3), ScalarPolynomial::gen(Gen::H).scale(&rat(-1, 45)));
    assert_eq!(trs.coefficient(5), ScalarPolynomial::gen(Gen::L).scale(&rat(-1, 15120)));
    assert!(trs.coefficient(0).is_zero());
    assert!(trs.coefficient(2).is_zero());
    assert!(trs.coefficient(4).is_zero());

    let trs2 = series_trace(&sigma.mul(&sigma)).truncate(4);
    assert_eq!(trs2.coefficient(-2), n_minus_1);
    assert_eq!(trs2.coefficient(0), ScalarPolynomial::gen(Gen::C).scale(&rat(-2, 3)));
    assert_eq!(trs2.coefficient(2), ScalarPolynomial::gen(Gen::H).scale(&rat(1, 15)));
    assert_eq!(trs2.coefficient(4), ScalarPolynomial::gen(Gen::L).scale(&rat(1, 3024)));

    let sp = sigma_series(6).derivative();
    let spsp = series_trace(&sp.mul(&sp)).truncate(2).coefficient(2);
    assert_eq!(spsp.coeff_of_gen(&Gen::L), rat(31, 15120));
    assert_eq!(spsp.coeff_of_gen(&Gen::T2), rat(1, 16));

    let s2 = sigma.mul(&sigma);
    let tr4 = series_trace(&s2.mul(&s2)).scale(&int(-2)).coefficient(2);
    assert_eq!(tr4.coeff_of_gen(&Gen::L), rat(4, 945));
    assert_eq!(tr4.coeff_of_gen(&Gen::T2), rat(1, 12));
    pass(3, "trace series coefficients exact", t0);
}

#[test]
fn criterion_04_q_contraction() {
    let t0 = Instant::now();
    let sigma = sigma_series(6);
    let q4 = q_contract(&sigma, &sigma).scale(&int(4)).truncate(2);

    // 4(n-2)C at r^{-2}
    let mut expect = ScalarPolynomial::zero();
    expect.add_term(
        Monomial::gen(Gen::Dim).mul(&Monomial::gen(Gen::C)),
        int(4),
    );
    expect.add_term(Monomial::gen(Gen::C), int(-8));
    assert_eq!(q4.coefficient(-2), expect);

    // -(8/3)(C² - H) at r^0
    let mut expect = ScalarPolynomial::zero();
    expect.add_term(Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::C)), rat(-8, 3));
    expect.add_term(Monomial::gen(Gen::H), rat(8, 3));
    assert_eq!(q4.coefficient(0), expect);

    // -(8/45)CH + L/180 - T2/12 + (4/9)Q0 at r^2
    let c2 = q4.coefficient(2);
    assert_eq!(c2.coeff_of(&Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::H))), rat(-8, 45));
    assert_eq!(c2.coeff_of_gen(&Gen::L), rat(1, 180));
    assert_eq!(c2.coeff_of_gen(&Gen::T2), rat(-1, 12));
    assert_eq!(c2.coeff_of_gen(&Gen::Q0), rat(4, 9));

    // T2 cancellation in |R^S|²: r² coefficient has no T2 and exactly (4/9)Q0
    let rs2 = r_s_norm_series(2).coefficient(2);
    assert_eq!(rs2.coeff_of_gen(&Gen::T2), int(0));
    assert_eq!(rs2.coeff_of_gen(&Gen::Q0), rat(4, 9));
    assert!(!rs2.has_residual());
    pass(4, "Q-contraction coefficients and T2 cancellation exact", t0);
}

#[test]
fn criterion_05_ball_integrands() {
    let t0 = Instant::now();
    let (rnu, s3, _) = ball_integrand_series(3);
    let a = rnu.coefficient(3);
    assert_eq!(a.coeff_of_gen(&Gen::L), rat(-1, 1440));
    assert_eq!(a.coeff_of_gen(&Gen::T2), rat(1, 96));
    let b = s3.coefficient(3);
    assert_eq!(b.coeff_of_gen(&Gen::L), rat(1, 30240));
    assert_eq!(b.coeff_of_gen(&Gen::T2), rat(-1, 96));

    let (rnu, s3, _) = ball_integrand_series(6);
    let lhs = rnu.add(&s3);
    let rhs = series_trace(&sigma_series(8))
        .derivative()
        .derivative()
        .scale(&rat(1, 2))
        .truncate(6);
    assert_eq!(lhs.truncate(6), rhs);
    pass(5, "ball boundary integrand coefficients and trace identity", t0);
}

#[test]
fn criterion_06_riccati_and_commutation() {
    let t0 = Instant::now();
    assert!(riccati_residual(8).is_zero());
    let sigma = sigma_series(7);
    assert_eq!(
        series_trace(&sigma.derivative()).truncate(6),
        series_trace(&sigma).derivative().truncate(6)
    );
    pass(6, "Riccati residual zero through order 8; trace/derivative commute", t0);
}

#[test]
fn criterion_07_space_form_evaluation() {
    let t0 = Instant::now();
    let inv = invariants(&build("form:n=6,k=-1"));
    assert!(close(inv.c, -5.0, 1e-12));
    assert!(close(inv.h, 5.0, 1e-12));
    assert!(close(inv.l, -160.0, 1e-12));
    let b = Bindings::from_invariants(&inv, ResidualPolicy::Reject);
    let trs = trace_sigma_series(&b, 6).unwrap();
    // 5·coth r = 5(1/r + r/3 - r³/45 + 2r⁵/945)
    assert!(close(trs.coefficient(-1), 5.0, 1e-12));
    assert!(close(trs.coefficient(1), 5.0 / 3.0, 1e-12));
    assert!(close(trs.coefficient(3), -5.0 / 45.0, 1e-12));
    assert!(close(trs.coefficient(5), 2.0 * 5.0 / 945.0, 1e-12));
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(7, "space-form invariants and coth-series evaluation", t0);
}

#[test]
fn criterion_08_degenerate_solvable_extension() {
    let t0 = Instant::now();
    let cp = build("dr:q=0,n=6");
    let reference = space_form(6, -0.25);
    for idx in 0..6usize.pow(4) {
        let got = cp.r_components()[idx];
        let want = reference.r_components()[idx];
        assert!((got - want).abs() <= 1e-12, "R index {idx}: {got} vs {want}");
    }
    let dr = cp.dr_components().unwrap();
    assert!(dr.iter().all(|&v| v.abs() <= 1e-12));
    pass(8, "degenerate solvable extension equals curvature -1/4 space form", t0);
}

#[test]
fn criterion_09_dim12_pair_invariants() {
    let t0 = Instant::now();
    let sym = invariants(&build("dr:q=3,p=2,m=0"));
    let non_cp = build("dr:q=3,p=1,m=1");
    let non = invariants(&non_cp);
    assert!(sym.norm_dr2 <= 1e-10, "symmetric case |∇R|² = {}", sym.norm_dr2);
    assert!(non.norm_dr2 >= 1e-6, "mixed case |∇R|² = {}", non.norm_dr2);
    // Independent oracle: |∇R|² from curvature-only contractions via the
    // divergence identity |∇R|² = -2C|R|² + R̂ + 4ρ̌ (no rank-5 data used).
    let oracle = -2.0 * non.c * non.norm_r2 + non.rhat + 4.0 * non.rcirc;
    assert!(close(non.norm_dr2, oracle, 1e-9), "{} vs {}", non.norm_dr2, oracle);
    for (a, b) in [(sym.c, non.c), (sym.h, non.h), (sym.l, non.l)] {
        assert!(close(a, b, 1e-9), "{a} vs {b}");
    }
    assert_eq!((sym.n, non.n), (12, 12));
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass(9, "dim-12 pair: shared (n,C,H,L), oracle-checked |∇R|² gap", t0);
}

#[test]
fn criterion_10_identity_suites() {
    let t0 = Instant::now();
    for spec in [
        "flat:n=4",
        "flat:n=6",
        "form:n=4,k=1",
        "form:n=4,k=-1",
        "form:n=6,k=1",
        "form:n=6,k=-1",
        "dr:q=1,p=1",
        "dr:q=1,p=2",
        "dr:q=3,p=2,m=0",
        "dr:q=3,p=1,m=1",
    ] {
        let cp = build(spec);
        for check in harmonic_identity_suite(&cp, 1e-9) {
            assert!(check.pass, "{spec}: {} residual {:e}", check.name, check.residual);
        }
        let inv = invariants(&cp);
        assert!(inv.ricci_deviation <= 1e-9, "{spec} not Einstein");
        // a_contractions triple against its invariant values
        let (aabb, abab, abba) = a_contractions(&cp);
        let nf = inv.n as f64;
        assert!(close(aabb, nf * inv.c.powi(3), 1e-9), "{spec}");
        assert!(close(abab, inv.rcirc, 1e-9), "{spec}");
        assert!(close(abba, inv.rcirc - inv.rhat / 4.0, 1e-9), "{spec}");
    }
    pass(10, "identity suites pass at 1e-9 on all model spaces", t0);
}

#[test]
fn criterion_11_sphere_averages() {
    let t0 = Instant::now();
    let cp = build("dr:q=3,p=1,m=1");
    let t2_formula = sphere_average_t2(&cp);
    let t2_sym = symmetrized_average_t2(&cp);
    assert!(t2_formula > 0.0);
    assert!(close(t2_sym, t2_formula, 1e-12), "{t2_sym} vs {t2_formula}");
    let q0_formula = sphere_average_q0(&cp);
    let q0_sym = symmetrized_average_q0(&cp);
    assert!(close(q0_sym, q0_formula, 1e-12), "{q0_sym} vs {q0_formula}");
    let mc = monte_carlo_average_t2(&cp, 100_000, 0);
    assert!(mc.std_error > 0.0);
    assert!(
        (mc.mean - t2_formula).abs() <= 3.0 * mc.std_error,
        "MC {} ± {} vs {t2_formula}",
        mc.mean,
        mc.std_error
    );
    pass(11, "sphere averages: symmetrization, formula, Monte Carlo agree", t0);
}

#[test]
fn criterion_12_distinguishers() {
    let t0 = Instant::now();
    let bs = bindings("dr:q=3,p=2,m=0");
    let bn = bindings("dr:q=3,p=1,m=1");
    let nf = 12.0;
    let nn = nf * (nf + 2.0) * (nf + 4.0);
    let delta_nabla = bn.nabla_r2 - bs.nabla_r2;

    let d_sph = distinguisher_sphere(&bn).unwrap() - distinguisher_sphere(&bs).unwrap();
    assert!(close(d_sph, (2.0 * nf + 5.0) / (16.0 * nn) * delta_nabla, 1e-9));

    let d_d = distinguisher_ball(&bn, Boundary::Dirichlet).unwrap()
        - distinguisher_ball(&bs, Boundary::Dirichlet).unwrap();
    assert!(close(d_d, delta_nabla / (42.0 * nn), 1e-9));

    let d_n = distinguisher_ball(&bn, Boundary::Neumann).unwrap()
        - distinguisher_ball(&bs, Boundary::Neumann).unwrap();
    assert!(close(d_n, delta_nabla / (6.0 * nn), 1e-9));

    let out = harmonics_cli::compare_spaces("dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1", 2, 1e-9).unwrap();
    assert_eq!(out.compare.verdict, Verdict::NablaRMismatch);
    pass(12, "distinguisher slopes and nablaR-mismatch verdict", t0);
}

#[test]
fn criterion_13_a1_redundancy() {
    let t0 = Instant::now();
    for spec in [
        "flat:n=6",
        "form:n=6,k=-1",
        "form:n=4,k=1",
        "dr:q=0,n=6",
        "dr:q=1,p=2",
        "dr:q=3,p=2,m=0",
        "dr:q=3,p=1,m=1",
    ] {
        let b = bindings(spec);
        let a1 = a1_sphere_series(&b, 4).unwrap();
        // Independent assembly from the a₀ series alone: read C back off the
        // volume expansion (v = r^{n-1}(1 - C r²/6 + ...)), rebuild
        // scal^S = (n-1)C + v''/v numerically, multiply.
        let a0 = a0_sphere_series(&b, 6).unwrap();
        let lead = a0.coefficient(b.n as i64 - 1);
        let c_from_a0 = -6.0 * a0.coefficient(b.n as i64 + 1) / lead;
        assert!(close(c_from_a0, b.c, 1e-12) || (b.c == 0.0 && c_from_a0.abs() < 1e-12));
        let scal = RadialScalarSeries::from_pairs(
            a0.truncation_order(),
            &[(0, (b.n - 1) as f64 * c_from_a0)],
        )
        .add(&a0.derivative().derivative().div(&a0).unwrap());
        let again = a0.mul(&scal).scale(1.0 / 6.0);
        let trunc = a1.truncation_order().min(again.truncation_order());
        for p in (b.n as i64 - 3)..=trunc {
            assert!(
                close(a1.truncate(trunc).coefficient(p), again.coefficient(p), 1e-12),
                "{spec} power {p}: {} vs {}",
                a1.coefficient(p),
                again.coefficient(p)
            );
        }
    }
    pass(13, "a₁ reassembled from the volume series alone matches", t0);
}

#[test]
fn criterion_14_full_compare_run() {
    let t0 = Instant::now();
    let out = harmonics_cli::compare_spaces("dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1", 2, 1e-9).unwrap();
    assert_eq!(out.compare.verdict, Verdict::NablaRMismatch);
    assert!(out.compare.delta_d_sphere > 0.0);
    assert!(out.compare.delta_d_dirichlet > 0.0);
    assert!(out.compare.delta_d_neumann > 0.0);
    // the two a₂ sphere series differ exactly at power n+1
    assert!(
        (out.a.a2_sphere.coefficient(13) - out.b.a2_sphere.coefficient(13)).abs() > 1e-3
    );
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    pass(14, "full dim-12 comparison within the time budget", t0);
}
