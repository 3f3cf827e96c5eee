//! Symbolic assembly of the geodesic-sphere curvature norms and the ball
//! boundary integrands.

use super::endo::{curvature_series, ledger_series, EndoSeries};
use super::scalar::{Gen, ScalarPolynomial, ScalarSeries};
use super::trace::{q_contract, series_trace};
use crate::rational::{int, rat};

fn gen(g: Gen) -> ScalarPolynomial {
    ScalarPolynomial::gen(g)
}

fn constant(p: ScalarPolynomial) -> ScalarSeries {
    ScalarSeries::constant(p)
}

/// The shape-operator series at the given truncation order.
pub fn sigma_series(order: i64) -> EndoSeries {
    ledger_series(order)
}

/// `|Ric^S|²` as a radial series:
/// `(n-1)C² + 2C(Trσ)² + (Trσ)²Tr(σ²) + 2C Tr(σ') + 2 Trσ Tr(σσ') + Tr(σ'σ')`.
///
/// The coefficients at `r^{-4}, r^{-2}, r^0` involve only `n, C, H`; the
/// `r²` coefficient carries `(1/16) T2` on top of an `(n,C,H,L)` part.
pub fn ric_s_norm_series(order: i64) -> ScalarSeries {
    let sigma = sigma_series(order + 2);
    let sp = sigma.derivative();
    let tr_sigma = series_trace(&sigma);
    let tr_sigma2 = series_trace(&sigma.mul(&sigma));
    let tr_sp = series_trace(&sp);
    let tr_ssp = series_trace(&sigma.mul(&sp));
    let tr_spsp = series_trace(&sp.mul(&sp));

    let c = gen(Gen::C);
    let n = gen(Gen::Dim);
    let n_minus_1_c2 = n.sub(&ScalarPolynomial::constant(int(1))).mul(&c).mul(&c);

    constant(n_minus_1_c2)
        .add(&tr_sigma.mul(&tr_sigma).mul(&constant(c.scale(&int(2)))))
        .add(&tr_sigma.mul(&tr_sigma).mul(&tr_sigma2))
        .add(&tr_sp.mul(&constant(c.scale(&int(2)))))
        .add(&tr_sigma.mul(&tr_ssp).scale(&int(2)))
        .add(&tr_spsp)
        .truncate(order)
}

/// `|R^S|²` as a radial series:
/// `(2/3)(n-4)((n+2)H - C²) + 4H + 2(Trσ²)² - 2Tr(σ⁴) + 4·Q(σ, σ)`.
///
/// In the `r²` coefficient the `±(1/12) T2` contributions of the last two
/// terms cancel, leaving exactly `(4/9) Q0` beyond the `(n,C,H,L)` part.
pub fn r_s_norm_series(order: i64) -> ScalarSeries {
    let sigma = sigma_series(order + 4);
    let tr_sigma2 = series_trace(&sigma.mul(&sigma));
    let sigma2 = sigma.mul(&sigma);
    let tr_sigma4 = series_trace(&sigma2.mul(&sigma2));
    let q4 = q_contract(&sigma, &sigma).scale(&int(4));

    let n = gen(Gen::Dim);
    let c = gen(Gen::C);
    let h = gen(Gen::H);
    let head = n
        .sub(&ScalarPolynomial::constant(int(4)))
        .mul(
            &n.add(&ScalarPolynomial::constant(int(2)))
                .mul(&h)
                .sub(&c.mul(&c)),
        )
        .scale(&rat(2, 3))
        .add(&h.scale(&int(4)));

    constant(head)
        .add(&tr_sigma2.mul(&tr_sigma2).scale(&int(2)))
        .add(&tr_sigma4.scale(&int(-2)))
        .add(&q4)
        .truncate(order)
}

/// The three boundary integrand series of the ball heat coefficient:
/// `Tr(R_ν ∘ σ)`, `Tr(σ³)`, and `Trσ · Tr(σ²)`.
pub fn ball_integrand_series(order: i64) -> (ScalarSeries, ScalarSeries, ScalarSeries) {
    let sigma = sigma_series(order + 4);
    let curv = curvature_series(order + 4);
    let tr_rnu_sigma = series_trace(&curv.mul(&sigma)).truncate(order);
    let tr_sigma3 = series_trace(&sigma.mul(&sigma).mul(&sigma)).truncate(order);
    let tr_s_tr_s2 = series_trace(&sigma)
        .mul(&series_trace(&sigma.mul(&sigma)))
        .truncate(order);
    (tr_rnu_sigma, tr_sigma3, tr_s_tr_s2)
}
