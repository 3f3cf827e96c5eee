//! Scalar polynomials in the harmonic-space generators and their Laurent
//! series in `r`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Zero;

use super::word::EndoWord;
use crate::rational::{display, int, Rat};

/// A trace expression that survives the reduction table.
///
/// `CyclicTrace` words are stored in cyclic normal form. `QBracket(k, F, G)`
/// stands for `Σ_i Tr(F ∘ R^(k)(e_i,·) G e_i)` and is symmetric in `(F, G)`,
/// so the pair is stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TraceMonomial {
    CyclicTrace(EndoWord),
    QBracket(u32, EndoWord, EndoWord),
}

impl TraceMonomial {
    pub fn cyclic(word: EndoWord) -> Self {
        TraceMonomial::CyclicTrace(word.cyclic_normal_form())
    }

    pub fn q_bracket(order: u32, left: EndoWord, right: EndoWord) -> Self {
        if left <= right {
            TraceMonomial::QBracket(order, left, right)
        } else {
            TraceMonomial::QBracket(order, right, left)
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        match self {
            TraceMonomial::CyclicTrace(w) => {
                let _ = write!(s, "Tr({})", w.render());
            }
            TraceMonomial::QBracket(k, f, g) => {
                let _ = write!(s, "Q{k}({}; {})", f.render(), g.render());
            }
        }
        s
    }
}

/// Generators of the scalar polynomial ring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Gen {
    /// The ambient dimension `n`.
    Dim,
    /// `C = Tr(R_u)`, the Einstein constant.
    C,
    /// `H = Tr(R_u R_u)`.
    H,
    /// `L = Tr(32 R_u³ - 9 R'_u R'_u)`.
    L,
    /// `T2 = Tr(R'_u R'_u)`.
    T2,
    /// `Q0 = Σ_i Tr(R_u R(e_i,·) R_u e_i)`.
    Q0,
    /// A trace monomial the reduction table does not resolve.
    Residual(TraceMonomial),
}

impl Gen {
    pub fn render(&self) -> String {
        match self {
            Gen::Dim => String::from("n"),
            Gen::C => String::from("C"),
            Gen::H => String::from("H"),
            Gen::L => String::from("L"),
            Gen::T2 => String::from("T2"),
            Gen::Q0 => String::from("Q0"),
            Gen::Residual(t) => t.render(),
        }
    }
}

/// Power product of generators, sorted, with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    powers: Vec<(Gen, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn gen(g: Gen) -> Self {
        Monomial {
            powers: alloc::vec![(g, 1)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Gen, u32)] {
        &self.powers
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut merged: BTreeMap<Gen, u32> = BTreeMap::new();
        for (g, e) in self.powers.iter().chain(other.powers.iter()) {
            *merged.entry(g.clone()).or_insert(0) += e;
        }
        Monomial {
            powers: merged.into_iter().collect(),
        }
    }

    /// Whether the monomial contains any residual trace generator.
    pub fn has_residual(&self) -> bool {
        self.powers.iter().any(|(g, _)| matches!(g, Gen::Residual(_)))
    }

    pub fn degree_in(&self, g: &Gen) -> u32 {
        self.powers
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, (g, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&g.render());
            if *e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

/// Exact-rational polynomial in the generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ScalarPolynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl ScalarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn gen(g: Gen) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::gen(g), int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Coefficient of a single-generator monomial (degree-one part in `g`
    /// with nothing else); handy in coefficient assertions.
    pub fn coeff_of_gen(&self, g: &Gen) -> Rat {
        self.terms
            .get(&Monomial::gen(g.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn has_residual(&self) -> bool {
        self.terms.keys().any(Monomial::has_residual)
    }

    /// Total degree in a given generator across all terms (max exponent).
    pub fn max_degree_in(&self, g: &Gen) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(g))
            .max()
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            if m.is_one() {
                s.push_str(&display(c));
            } else if c == &int(1) {
                s.push_str(&m.render());
            } else if c == &int(-1) {
                let _ = write!(s, "-{}", m.render());
            } else {
                let _ = write!(s, "{}*{}", display(c), m.render());
            }
        }
        s
    }
}

/// Laurent series in `r` with [`ScalarPolynomial`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarSeries {
    truncation_order: i64,
    coeffs: BTreeMap<i64, ScalarPolynomial>,
}

impl ScalarSeries {
    pub fn zero(truncation_order: i64) -> Self {
        Self {
            truncation_order,
            coeffs: BTreeMap::new(),
        }
    }

    /// An exactly known constant (infinite truncation order).
    pub fn constant(p: ScalarPolynomial) -> Self {
        let mut s = Self::zero(i64::MAX);
        s.insert(0, p);
        s
    }

    pub fn truncation_order(&self) -> i64 {
        self.truncation_order
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &ScalarPolynomial)> {
        self.coeffs.iter()
    }

    pub fn insert(&mut self, power: i64, poly: ScalarPolynomial) {
        if power > self.truncation_order {
            return;
        }
        if poly.is_zero() {
            self.coeffs.remove(&power);
        } else {
            self.coeffs.insert(power, poly);
        }
    }

    /// Stored coefficient at `power` (zero if absent). Panics above the
    /// truncation order, where the coefficient is unknown.
    pub fn coefficient(&self, power: i64) -> ScalarPolynomial {
        assert!(
            power <= self.truncation_order,
            "coefficient at power {power} beyond truncation order {}",
            self.truncation_order
        );
        self.coeffs
            .get(&power)
            .cloned()
            .unwrap_or_else(ScalarPolynomial::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.truncation_order.min(other.truncation_order);
        let mut out = Self::zero(trunc);
        for (p, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if *p > trunc {
                continue;
            }
            let merged = out
                .coeffs
                .get(p)
                .cloned()
                .unwrap_or_else(ScalarPolynomial::zero)
                .add(c);
            out.coeffs.remove(p);
            out.insert(*p, merged);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        let mut out = Self::zero(self.truncation_order);
        for (p, c) in &self.coeffs {
            out.insert(*p, c.scale(factor));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.truncation_order.min(other.truncation_order);
        let mut out = Self::zero(trunc);
        for (pa, ca) in &self.coeffs {
            for (pb, cb) in &other.coeffs {
                let p = pa + pb;
                if p > trunc {
                    continue;
                }
                let merged = out
                    .coeffs
                    .get(&p)
                    .cloned()
                    .unwrap_or_else(ScalarPolynomial::zero)
                    .add(&ca.mul(cb));
                out.coeffs.remove(&p);
                out.insert(p, merged);
            }
        }
        out
    }

    /// Term-wise `r`-derivative.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.truncation_order.saturating_sub(1));
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Textual serialization `sum(power: polynomial; ...)` with exact
    /// fractions, shared by the CLI and golden fixtures.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("sum()");
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
