//! Exact symbolic engine for the radial jet expansion of geodesic spheres.
//!
//! Everything here is computed over the rationals; re-running a derivation
//! yields bit-identical polynomials. The series variable is the radius `r`;
//! coefficients are noncommutative polynomials in the curvature jets
//! `R_u^(k)` (module [`word`], [`endo`]) or commutative polynomials in the
//! scalar generators `n, C, H, L, T2, Q0` (module [`scalar`]).

pub mod endo;
pub mod norms;
pub mod scalar;
pub mod trace;
pub mod word;

pub use endo::{curvature_series, ledger_series, riccati_residual, EndoPolynomial, EndoSeries};
pub use norms::{ball_integrand_series, r_s_norm_series, ric_s_norm_series, sigma_series};
pub use scalar::{Gen, Monomial, ScalarPolynomial, ScalarSeries, TraceMonomial};
pub use trace::{q_bracket, q_contract, series_trace, trace_word};
pub use word::{EndoWord, JetSymbol};
