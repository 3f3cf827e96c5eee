//! Trace reduction under the harmonic-space identities, and the bilinear
//! curvature contraction `Q`.

use num_traits::Zero;

use super::endo::EndoSeries;
use super::scalar::{Gen, ScalarPolynomial, ScalarSeries, TraceMonomial};
use super::word::EndoWord;
use crate::rational::{factorial, int, rat, Rat};

/// Trace of a single jet word over `u^⊥`, reduced by the table
///
/// * `Tr(I_u) = n-1`
/// * `Tr(R_u) = C`, `Tr(R^(k)) = 0` for `k >= 1`
/// * `Tr(R_u R_u) = H`, `Tr(R_u R'_u) = 0`
/// * `Tr(R_u R''_u) = -T2`, `Tr(R'_u R'_u) = T2`
/// * `Tr(R_u R_u R_u) = (L + 9 T2)/32`
///
/// Anything else is kept as a residual [`TraceMonomial`] in cyclic normal
/// form.
pub fn trace_word(word: &EndoWord) -> ScalarPolynomial {
    if word.is_unit() {
        return ScalarPolynomial::gen(Gen::Dim).sub(&ScalarPolynomial::constant(int(1)));
    }
    let canonical = word.cyclic_normal_form();
    let orders = canonical
        .jet_orders()
        .expect("normal-form words contain no identity factor");
    match orders.as_slice() {
        [0] => ScalarPolynomial::gen(Gen::C),
        [_] => ScalarPolynomial::zero(),
        [0, 0] => ScalarPolynomial::gen(Gen::H),
        [0, 1] => ScalarPolynomial::zero(),
        [0, 2] => ScalarPolynomial::gen(Gen::T2).scale(&int(-1)),
        [1, 1] => ScalarPolynomial::gen(Gen::T2),
        [0, 0, 0] => ScalarPolynomial::gen(Gen::L)
            .add(&ScalarPolynomial::gen(Gen::T2).scale(&int(9)))
            .scale(&rat(1, 32)),
        _ => ScalarPolynomial::gen(Gen::Residual(TraceMonomial::cyclic(canonical))),
    }
}

/// Linear extension of [`trace_word`] over an [`EndoSeries`].
pub fn series_trace(series: &EndoSeries) -> ScalarSeries {
    let mut out = ScalarSeries::zero(series.truncation_order());
    for (power, poly) in series.coeffs() {
        let mut traced = ScalarPolynomial::zero();
        for (word, coeff) in poly.terms() {
            traced = traced.add(&trace_word(word).scale(coeff));
        }
        out.insert(*power, traced);
    }
    out
}

/// `Q_k(F, G) = Σ_i Tr(F ∘ R^(k)(e_i,·) G e_i)` for jet words `F`, `G`,
/// reduced as far as the harmonic identities allow.
///
/// With one slot equal to `I_u` the sum telescopes to
/// `Tr(F ∘ Ric^(k)) - Tr(F R_u^(k))`, and `Ric^(k)` is `C·Id` for `k = 0`
/// and zero for `k >= 1` (Einstein). `Q_0(R_u, R_u)` is the generator `Q0`;
/// other irreducible brackets stay residual. `Q_k` is symmetric in `(F, G)`.
pub fn q_bracket(order: u32, left: &EndoWord, right: &EndoWord) -> ScalarPolynomial {
    let (f, g) = if left <= right { (left, right) } else { (right, left) };
    if f.is_unit() || g.is_unit() {
        let w = if f.is_unit() { g } else { f };
        let mut out = ScalarPolynomial::zero();
        if order == 0 {
            out = out.add(&ScalarPolynomial::gen(Gen::C).mul(&trace_word(w)));
        }
        return out.sub(&trace_word(&w.concat(&EndoWord::jet(order))));
    }
    if order == 0 && f == &EndoWord::jet(0) && g == &EndoWord::jet(0) {
        return ScalarPolynomial::gen(Gen::Q0);
    }
    ScalarPolynomial::gen(Gen::Residual(TraceMonomial::q_bracket(
        order,
        f.clone(),
        g.clone(),
    )))
}

/// Bilinear extension of the `Q`-bracket over two endomorphism series, with
/// the middle slot carrying the curvature Taylor series `Σ r^k/k! R^(k)`.
pub fn q_contract(a: &EndoSeries, b: &EndoSeries) -> ScalarSeries {
    let trunc = a.truncation_order().min(b.truncation_order());
    let mut out = ScalarSeries::zero(trunc);
    // The middle slot never lowers the power, so k ranges up to the span.
    let low_a = a.coeffs().next().map(|(p, _)| *p).unwrap_or(0);
    let low_b = b.coeffs().next().map(|(p, _)| *p).unwrap_or(0);
    let max_k = (trunc - low_a - low_b).max(0) as u32;
    for (pa, ca) in a.coeffs() {
        for (pb, cb) in b.coeffs() {
            for k in 0..=max_k {
                let power = pa + pb + k as i64;
                if power > trunc {
                    continue;
                }
                let weight = int(1) / factorial(k);
                let mut contrib = ScalarPolynomial::zero();
                for (wa, qa) in ca.terms() {
                    for (wb, qb) in cb.terms() {
                        let c: Rat = qa * qb * &weight;
                        if c.is_zero() {
                            continue;
                        }
                        contrib = contrib.add(&q_bracket(k, wa, wb).scale(&c));
                    }
                }
                let merged = out.coefficient(power).add(&contrib);
                out.insert(power, merged);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::endo::ledger_series;
    use crate::jets::scalar::Monomial;

    fn word(orders: &[u32]) -> EndoWord {
        EndoWord::from_jets(orders)
    }

    #[test]
    fn trace_table() {
        assert_eq!(trace_word(&word(&[0])), ScalarPolynomial::gen(Gen::C));
        assert!(trace_word(&word(&[3])).is_zero());
        assert_eq!(trace_word(&word(&[0, 0])), ScalarPolynomial::gen(Gen::H));
        assert!(trace_word(&word(&[1, 0])).is_zero());
        assert_eq!(
            trace_word(&word(&[2, 0])),
            ScalarPolynomial::gen(Gen::T2).scale(&int(-1))
        );
        assert_eq!(trace_word(&word(&[1, 1])), ScalarPolynomial::gen(Gen::T2));
        let rrr = trace_word(&word(&[0, 0, 0]));
        assert_eq!(rrr.coeff_of_gen(&Gen::L), rat(1, 32));
        assert_eq!(rrr.coeff_of_gen(&Gen::T2), rat(9, 32));
    }

    #[test]
    fn trace_of_sigma_matches_volume_growth_series() {
        // Tr σ = (n-1)/r - C r/3 - H r³/45 - L r⁵/15120 + O(r⁷)
        let tr = series_trace(&ledger_series(6));
        let c_m1 = tr.coefficient(-1);
        assert_eq!(c_m1.coeff_of_gen(&Gen::Dim), int(1));
        assert_eq!(c_m1.coeff_of(&Monomial::one()), int(-1));
        assert!(tr.coefficient(0).is_zero());
        assert_eq!(tr.coefficient(1).coeff_of_gen(&Gen::C), rat(-1, 3));
        assert!(tr.coefficient(2).is_zero());
        assert_eq!(tr.coefficient(3).coeff_of_gen(&Gen::H), rat(-1, 45));
        assert!(tr.coefficient(4).is_zero());
        assert_eq!(tr.coefficient(5).coeff_of_gen(&Gen::L), rat(-1, 15120));
    }

    #[test]
    fn trace_of_sigma_squared() {
        // Tr σ² = (n-1)/r² - 2C/3 + H r²/15 + L r⁴/3024 + O(r⁵)
        let sigma = ledger_series(6);
        let tr = series_trace(&sigma.mul(&sigma));
        assert_eq!(tr.coefficient(-2).coeff_of_gen(&Gen::Dim), int(1));
        assert_eq!(tr.coefficient(0).coeff_of_gen(&Gen::C), rat(-2, 3));
        assert_eq!(tr.coefficient(2).coeff_of_gen(&Gen::H), rat(1, 15));
        assert_eq!(tr.coefficient(4).coeff_of_gen(&Gen::L), rat(1, 3024));
        assert!(tr.coefficient(1).is_zero());
        assert!(tr.coefficient(3).is_zero());
    }

    #[test]
    fn trace_of_sigma_prime_squared_r2() {
        // r² coefficient of Tr(σ'σ') is 31 L/15120 + T2/16.
        let sp = ledger_series(7).derivative();
        let tr = series_trace(&sp.mul(&sp));
        let c2 = tr.coefficient(2);
        assert_eq!(c2.coeff_of_gen(&Gen::L), rat(31, 15120));
        assert_eq!(c2.coeff_of_gen(&Gen::T2), rat(1, 16));
    }

    #[test]
    fn cyclic_invariance_of_trace() {
        let sigma = ledger_series(5);
        let sp = sigma.derivative();
        assert_eq!(series_trace(&sigma.mul(&sp)), series_trace(&sp.mul(&sigma)));
    }

    #[test]
    fn trace_commutes_with_derivative() {
        let sigma = ledger_series(7);
        assert_eq!(
            series_trace(&sigma.derivative()),
            series_trace(&sigma).derivative()
        );
        let sigma2 = sigma.mul(&sigma);
        let sigma2_prime = sigma.derivative().mul(&sigma).add(&sigma.mul(&sigma.derivative()));
        assert_eq!(
            series_trace(&sigma2_prime).truncate(5),
            series_trace(&sigma2).derivative().truncate(5)
        );
    }

    #[test]
    fn q_bracket_base_cases() {
        let i = EndoWord::unit();
        // Q_0(I, I) = (n-2) C
        let q = q_bracket(0, &i, &i);
        let nc = Monomial::gen(Gen::Dim).mul(&Monomial::gen(Gen::C));
        assert_eq!(q.coeff_of(&nc), int(1));
        assert_eq!(q.coeff_of_gen(&Gen::C), int(-2));
        // Q_k(I, I) = 0 for k >= 1
        assert!(q_bracket(3, &i, &i).is_zero());
        // Q_0(R, I) = C² - H
        let q = q_bracket(0, &word(&[0]), &i);
        let c2 = Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::C));
        assert_eq!(q.coeff_of(&c2), int(1));
        assert_eq!(q.coeff_of_gen(&Gen::H), int(-1));
        // Q_0(R', I) = 0
        assert!(q_bracket(0, &word(&[1]), &i).is_zero());
        // Q_0(R'', I) = T2
        assert_eq!(q_bracket(0, &word(&[2]), &i), ScalarPolynomial::gen(Gen::T2));
        // Q_0(RR, I) = CH - Tr(RRR) = CH - (L + 9 T2)/32
        let q = q_bracket(0, &word(&[0, 0]), &i);
        let ch = Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::H));
        assert_eq!(q.coeff_of(&ch), int(1));
        assert_eq!(q.coeff_of_gen(&Gen::L), rat(-1, 32));
        // Q_0(R, R) = Q0
        assert_eq!(
            q_bracket(0, &word(&[0]), &word(&[0])),
            ScalarPolynomial::gen(Gen::Q0)
        );
        // Q_1(R', I) = -Tr(R'R') = -T2
        assert_eq!(
            q_bracket(1, &word(&[1]), &i),
            ScalarPolynomial::gen(Gen::T2).scale(&int(-1))
        );
    }

    #[test]
    fn q_bracket_is_symmetric() {
        let f = word(&[0, 1]);
        let g = word(&[2]);
        assert_eq!(q_bracket(2, &f, &g), q_bracket(2, &g, &f));
        assert_eq!(q_bracket(0, &f, &EndoWord::unit()), q_bracket(0, &EndoWord::unit(), &f));
    }

    #[test]
    fn four_q_sigma_sigma_expansion() {
        let sigma = ledger_series(4);
        let q4 = q_contract(&sigma, &sigma).scale(&int(4));
        // r^{-2}: 4(n-2)C
        let c = q4.coefficient(-2);
        let nc = Monomial::gen(Gen::Dim).mul(&Monomial::gen(Gen::C));
        assert_eq!(c.coeff_of(&nc), int(4));
        assert_eq!(c.coeff_of_gen(&Gen::C), int(-8));
        // r^0: -(8/3)(C² - H)
        let c = q4.coefficient(0);
        let c2 = Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::C));
        assert_eq!(c.coeff_of(&c2), rat(-8, 3));
        assert_eq!(c.coeff_of_gen(&Gen::H), rat(8, 3));
        // r^2: -(8/45)CH + L/180 - T2/12 + (4/9)Q0
        let c = q4.coefficient(2);
        let ch = Monomial::gen(Gen::C).mul(&Monomial::gen(Gen::H));
        assert_eq!(c.coeff_of(&ch), rat(-8, 45));
        assert_eq!(c.coeff_of_gen(&Gen::L), rat(1, 180));
        assert_eq!(c.coeff_of_gen(&Gen::T2), rat(-1, 12));
        assert_eq!(c.coeff_of_gen(&Gen::Q0), rat(4, 9));
        // odd powers vanish
        assert!(q4.coefficient(-1).is_zero());
        assert!(q4.coefficient(1).is_zero());
    }

    #[test]
    fn q_contract_is_symmetric_in_its_arguments() {
        let sigma = ledger_series(4);
        let sp = sigma.derivative();
        assert_eq!(q_contract(&sigma, &sp), q_contract(&sp, &sigma));
    }
}
