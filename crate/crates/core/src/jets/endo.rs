//! Endomorphism-valued polynomials and Laurent series in the radius `r`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt::Write;

use num_traits::Zero;

use super::word::EndoWord;
use crate::rational::{binomial, display, factorial, int, rat, Rat};

/// Finite rational combination of noncommutative jet words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EndoPolynomial {
    terms: BTreeMap<EndoWord, Rat>,
}

impl EndoPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::from_word(EndoWord::unit(), int(1))
    }

    pub fn from_word(word: EndoWord, coeff: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EndoWord, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: EndoWord, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Noncommutative product: word concatenation, bilinear in coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// Substitute every curvature jet by zero (flat space); only the pure
    /// identity word survives.
    pub fn substitute_flat(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            if w.is_unit() {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    pub fn coeff(&self, word: &EndoWord) -> Rat {
        self.terms.get(word).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "{} {}", display(c), w.render());
        }
        s
    }
}

/// Laurent series in `r` with [`EndoPolynomial`] coefficients, truncated so
/// that every stored power is `<= truncation_order` (the remainder is
/// `O(r^{N+1})`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndoSeries {
    truncation_order: i64,
    coeffs: BTreeMap<i64, EndoPolynomial>,
}

impl EndoSeries {
    pub fn zero(truncation_order: i64) -> Self {
        Self {
            truncation_order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn truncation_order(&self) -> i64 {
        self.truncation_order
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &EndoPolynomial)> {
        self.coeffs.iter()
    }

    pub fn insert(&mut self, power: i64, poly: EndoPolynomial) {
        if power > self.truncation_order {
            return;
        }
        if poly.is_zero() {
            self.coeffs.remove(&power);
        } else {
            self.coeffs.insert(power, poly);
        }
    }

    pub fn coefficient(&self, power: i64) -> EndoPolynomial {
        self.coeffs
            .get(&power)
            .cloned()
            .unwrap_or_else(EndoPolynomial::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.truncation_order.min(other.truncation_order);
        let mut out = Self::zero(trunc);
        for (p, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if *p > trunc {
                continue;
            }
            let merged = out.coefficient(*p).add(c);
            out.coeffs.remove(p);
            out.insert(*p, merged);
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        let mut out = Self::zero(self.truncation_order);
        for (p, c) in &self.coeffs {
            out.insert(*p, c.scale(factor));
        }
        out
    }

    /// Cauchy product truncated at the minimum truncation order of the
    /// operands.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.truncation_order.min(other.truncation_order);
        let mut out = Self::zero(trunc);
        for (pa, ca) in &self.coeffs {
            for (pb, cb) in &other.coeffs {
                let p = pa + pb;
                if p > trunc {
                    continue;
                }
                let merged = out.coefficient(p).add(&ca.mul(cb));
                out.coeffs.remove(&p);
                out.insert(p, merged);
            }
        }
        out
    }

    /// Term-wise `r`-derivative (coefficients are parallel-transported
    /// constants, so no covariant correction appears).
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.truncation_order - 1);
        for (p, c) in &self.coeffs {
            out.insert(p - 1, c.scale(&int(*p)));
        }
        out
    }

    pub fn truncate(&self, order: i64) -> Self {
        let trunc = self.truncation_order.min(order);
        let mut out = Self::zero(trunc);
        for (p, c) in &self.coeffs {
            out.insert(*p, c.clone());
        }
        out
    }

    pub fn substitute_flat(&self) -> Self {
        let mut out = Self::zero(self.truncation_order);
        for (p, c) in &self.coeffs {
            out.insert(*p, c.substitute_flat());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::from("sum(");
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push_str("; ");
            }
            let _ = write!(s, "{p}: {}", c.render());
        }
        s.push(')');
        s
    }
}

/// Taylor coefficients `C_u^(k)(0)` of `C_u(r) = r·σ_u(r)` from Ledger's
/// recursion
/// `(k-1)C^(k) = -k(k-1)R^(k-2) - Σ_{ℓ=0}^{k} C(k,ℓ) C^(ℓ)C^(k-ℓ)`
/// with `C^(0) = I_u` and `C^(1) = 0`. On `u^⊥` the `ℓ ∈ {0,k}` terms act as
/// the unit, so the recursion resolves to
/// `(k+1)C^(k) = -k(k-1)R^(k-2) - Σ_{ℓ=1}^{k-1} C(k,ℓ) C^(ℓ)C^(k-ℓ)`.
fn ledger_taylor_coeffs(max_k: u32) -> alloc::vec::Vec<EndoPolynomial> {
    let mut c = alloc::vec::Vec::with_capacity(max_k as usize + 1);
    c.push(EndoPolynomial::unit());
    if max_k >= 1 {
        c.push(EndoPolynomial::zero());
    }
    for k in 2..=max_k {
        let mut rhs = EndoPolynomial::from_word(
            EndoWord::jet(k - 2),
            -int((k as i64) * (k as i64 - 1)),
        );
        for l in 1..k {
            rhs = rhs.add(&c[l as usize].mul(&c[(k - l) as usize]).scale(&-binomial(k, l)));
        }
        c.push(rhs.scale(&rat(1, k as i64 + 1)));
    }
    c
}

/// The series of `P^{r,0} ∘ σ_u(r) ∘ P^{0,r}` through order `N`: the Taylor
/// series of `C_u` divided by `r`.
pub fn ledger_series(truncation_order: i64) -> EndoSeries {
    assert!(truncation_order >= -1, "truncation order must be >= -1");
    let max_k = (truncation_order + 1) as u32;
    let c = ledger_taylor_coeffs(max_k);
    let mut out = EndoSeries::zero(truncation_order);
    for (k, poly) in c.iter().enumerate() {
        out.insert(
            k as i64 - 1,
            poly.scale(&(int(1) / factorial(k as u32))),
        );
    }
    out
}

/// Taylor series of the parallel-transported Jacobi operator along the
/// radial geodesic: `Σ_k r^k/k! R_u^(k)`.
pub fn curvature_series(truncation_order: i64) -> EndoSeries {
    let mut out = EndoSeries::zero(truncation_order);
    for k in 0..=truncation_order.max(0) as u32 {
        out.insert(
            k as i64,
            EndoPolynomial::from_word(EndoWord::jet(k), int(1) / factorial(k)),
        );
    }
    out
}

/// `σ' + σ² + R_ν` through order `N`; identically zero by the Riccati
/// equation, which the Ledger output must satisfy.
pub fn riccati_residual(truncation_order: i64) -> EndoSeries {
    assert!(truncation_order >= 0);
    let sigma = ledger_series(truncation_order + 2);
    let residual = sigma
        .derivative()
        .add(&sigma.mul(&sigma))
        .add(&curvature_series(truncation_order + 2));
    residual.truncate(truncation_order)
}
