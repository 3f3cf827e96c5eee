//! Numeric radial series: binding the exact symbolic expansions to the
//! invariants of a concrete space, and assembling volume, scalar-curvature
//! and heat-coefficient series for geodesic spheres and balls, together with
//! the isospectrality distinguishers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use libm::fabs;
use serde::Serialize;

use crate::curvio::{unit_sphere_volume, InvariantReport};
use crate::jets::{
    ball_integrand_series, r_s_norm_series, ric_s_norm_series, series_trace, sigma_series, Gen,
    ScalarSeries,
};
use crate::rational::to_f64;

/// Errors of the binding/evaluation layer.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectraError {
    /// A symbolic coefficient contains a trace monomial with no binding and
    /// the policy is `Reject`.
    ResidualMonomial { power: i64, monomial: String },
    /// Term-wise integration would produce a logarithm (a `1/r` term).
    NonIntegrable,
    /// Division by a series that is zero through its truncation order.
    DivisionByZero,
    /// `exp` of a series with a constant or negative-power term.
    ExpOfNonPositiveOrder,
}

impl core::fmt::Display for SpectraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpectraError::ResidualMonomial { power, monomial } => {
                write!(f, "unbound trace monomial {monomial} at power r^{power}")
            }
            SpectraError::NonIntegrable => write!(f, "cannot integrate a 1/r term"),
            SpectraError::DivisionByZero => write!(f, "division by a zero series"),
            SpectraError::ExpOfNonPositiveOrder => {
                write!(f, "exp requires the series to start at power >= 1")
            }
        }
    }
}

/// A truncated Laurent series in `r` with real coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadialScalarSeries {
    truncation_order: i64,
    coeffs: BTreeMap<i64, f64>,
}

impl RadialScalarSeries {
    pub fn zero(truncation_order: i64) -> Self {
        RadialScalarSeries {
            truncation_order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_pairs(truncation_order: i64, pairs: &[(i64, f64)]) -> Self {
        let mut s = Self::zero(truncation_order);
        for &(p, c) in pairs {
            s.insert(p, c);
        }
        s
    }

    pub fn truncation_order(&self) -> i64 {
        self.truncation_order
    }

    pub fn insert(&mut self, power: i64, value: f64) {
        assert!(power <= self.truncation_order, "power beyond truncation");
        if value == 0.0 {
            self.coeffs.remove(&power);
        } else {
            self.coeffs.insert(power, value);
        }
    }

    /// Coefficient of `r^power`; panics when asked beyond the truncation.
    pub fn coefficient(&self, power: i64) -> f64 {
        assert!(
            power <= self.truncation_order,
            "coefficient of r^{power} beyond truncation order {}",
            self.truncation_order
        );
        self.coeffs.get(&power).copied().unwrap_or(0.0)
    }

    pub fn pairs(&self) -> Vec<(i64, f64)> {
        self.coeffs.iter().map(|(&p, &c)| (p, c)).collect()
    }

    fn min_power(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.truncation_order.min(other.truncation_order);
        let mut out = Self::zero(trunc);
        for (&p, &c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if p <= trunc {
                out.insert(p, out.coefficient(p) + c);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = Self::zero(self.truncation_order);
        for (&p, &c) in &self.coeffs {
            out.insert(p, factor * c);
        }
        out
    }

    /// Cauchy product; the truncation order is the attainable minimum over
    /// the two operands' reliable ranges given their leading powers.
    pub fn mul(&self, other: &Self) -> Self {
        let lo_a = self.min_power().unwrap_or(0);
        let lo_b = other.min_power().unwrap_or(0);
        let trunc = (self.truncation_order + lo_b).min(other.truncation_order + lo_a);
        let mut out = Self::zero(trunc);
        for (&pa, &ca) in &self.coeffs {
            for (&pb, &cb) in &other.coeffs {
                let p = pa + pb;
                if p <= trunc {
                    out.insert(p, out.coefficient(p) + ca * cb);
                }
            }
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.truncation_order - 1);
        for (&p, &c) in &self.coeffs {
            if p != 0 {
                out.insert(p - 1, p as f64 * c);
            }
        }
        out
    }

    /// Term-wise antiderivative with zero constant of integration.
    pub fn integrate(&self) -> Result<Self, SpectraError> {
        if self.coeffs.contains_key(&-1) {
            return Err(SpectraError::NonIntegrable);
        }
        let mut out = Self::zero(self.truncation_order + 1);
        for (&p, &c) in &self.coeffs {
            out.insert(p + 1, c / (p + 1) as f64);
        }
        Ok(out)
    }

    /// Multiplication by `r^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = Self::zero(self.truncation_order + k);
        for (&p, &c) in &self.coeffs {
            out.insert(p + k, c);
        }
        out
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.truncation_order);
        let mut out = Self::zero(order);
        for (&p, &c) in &self.coeffs {
            if p <= order {
                out.insert(p, c);
            }
        }
        out
    }

    /// `exp` of a series whose lowest power is at least 1.
    pub fn exp(&self) -> Result<Self, SpectraError> {
        if let Some(p) = self.min_power() {
            if p < 1 {
                return Err(SpectraError::ExpOfNonPositiveOrder);
            }
        }
        let trunc = self.truncation_order;
        let mut out = Self::zero(trunc);
        out.insert(0, 1.0);
        let mut term = Self::from_pairs(trunc, &[(0, 1.0)]);
        let max_k = trunc.max(0) as usize;
        for k in 1..=max_k {
            term = term.mul(self).truncate(trunc).scale(1.0 / k as f64);
            if term.coeffs.is_empty() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Series division; the divisor's lowest stored coefficient must be
    /// nonzero.
    pub fn div(&self, other: &Self) -> Result<Self, SpectraError> {
        let p0 = other.min_power().ok_or(SpectraError::DivisionByZero)?;
        let lead = other.coefficient(p0);
        if lead == 0.0 {
            return Err(SpectraError::DivisionByZero);
        }
        // self / other = (self * r^{-p0}/lead) * 1/(1 + w), w starting at power >= 1
        let w = other.shift(-p0).scale(1.0 / lead).sub(&Self::from_pairs(
            other.truncation_order - p0,
            &[(0, 1.0)],
        ));
        let trunc_inv = other.truncation_order - p0;
        let mut inv = Self::from_pairs(trunc_inv, &[(0, 1.0)]);
        let mut term = Self::from_pairs(trunc_inv, &[(0, 1.0)]);
        for _ in 0..trunc_inv.max(0) {
            term = term.mul(&w).truncate(trunc_inv).scale(-1.0);
            if term.coeffs.is_empty() {
                break;
            }
            inv = inv.add(&term);
        }
        Ok(self.mul(&inv).shift(-p0).scale(1.0 / lead))
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coeffs.values().fold(0.0, |m, &c| m.max(fabs(c)))
    }

    /// Textual form `sum(power: coefficient; ...)`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return String::from("sum()");
        }
        let mut parts = Vec::new();
        for (&p, &c) in &self.coeffs {
            parts.push(format!("{p}: {c}"));
        }
        format!("sum({})", parts.join("; "))
    }
}

/// Policy for symbolic trace monomials that have no numeric binding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResidualPolicy {
    Reject,
    Zero,
}

/// Numeric values for the scalar generators of a space, plus the sphere-mean
/// substitutions for the direction-dependent generators.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bindings {
    pub n: usize,
    pub c: f64,
    pub h: f64,
    pub l: f64,
    pub nabla_r2: f64,
    pub policy: ResidualPolicy,
}

impl Bindings {
    pub fn new(n: usize, c: f64, h: f64, l: f64, nabla_r2: f64, policy: ResidualPolicy) -> Self {
        Bindings { n, c, h, l, nabla_r2, policy }
    }

    pub fn from_invariants(inv: &InvariantReport, policy: ResidualPolicy) -> Self {
        Bindings::new(inv.n, inv.c, inv.h, inv.l, inv.norm_dr2, policy)
    }

    /// Same `(n, C, H, L)` with `|∇R|²` set to zero; used to isolate the
    /// `|∇R|²`-part of a coefficient.
    pub fn zero_nabla(&self) -> Self {
        Bindings { nabla_r2: 0.0, ..*self }
    }

    /// `|R|² = (2/3) n ((n+2)H - C²)`, determined by `(n, C, H)`.
    pub fn norm_r2(&self) -> f64 {
        let nf = self.n as f64;
        2.0 / 3.0 * nf * ((nf + 2.0) * self.h - self.c * self.c)
    }

    /// `R̂` from the two linear identities tying `(R̂, ρ̌)` to
    /// `(n, C, H, L, |∇R|²)`:
    /// `112R̂ - 32ρ̌ = 27|∇R|² + n(n+2)(n+4)L - 32nC³ - 144C|R|²` and
    /// `R̂ + 4ρ̌ = 2C|R|² + |∇R|²`.
    pub fn rhat(&self) -> f64 {
        let nf = self.n as f64;
        let r2 = self.norm_r2();
        let k1 = 27.0 * self.nabla_r2 + nf * (nf + 2.0) * (nf + 4.0) * self.l
            - 32.0 * nf * self.c.powi(3)
            - 144.0 * self.c * r2;
        let k2 = 2.0 * self.c * r2 + self.nabla_r2;
        (k1 + 8.0 * k2) / 120.0
    }

    /// `ρ̌` from the same linear system.
    pub fn rcirc(&self) -> f64 {
        (2.0 * self.c * self.norm_r2() + self.nabla_r2 - self.rhat()) / 4.0
    }

    /// Sphere mean of `Tr(R'_u R'_u)`: `3|∇R|²/(n(n+2)(n+4))`.
    pub fn mean_t2(&self) -> f64 {
        let nf = self.n as f64;
        3.0 * self.nabla_r2 / (nf * (nf + 2.0) * (nf + 4.0))
    }

    /// Sphere mean of `Q0`: `(nC³ + 2ρ̌ - R̂/4)/(n(n+2))`.
    pub fn mean_q0(&self) -> f64 {
        let nf = self.n as f64;
        (nf * self.c.powi(3) + 2.0 * self.rcirc() - 0.25 * self.rhat()) / (nf * (nf + 2.0))
    }

    fn gen_value(&self, g: &Gen) -> Option<f64> {
        match g {
            Gen::Dim => Some(self.n as f64),
            Gen::C => Some(self.c),
            Gen::H => Some(self.h),
            Gen::L => Some(self.l),
            Gen::T2 => Some(self.mean_t2()),
            Gen::Q0 => Some(self.mean_q0()),
            Gen::Residual(_) => None,
        }
    }
}

/// Substitutes the bindings into every coefficient polynomial. The
/// direction-dependent generators are replaced by their sphere means, so the
/// result is the radial series of the sphere average.
pub fn evaluate(series: &ScalarSeries, b: &Bindings) -> Result<RadialScalarSeries, SpectraError> {
    let mut out = RadialScalarSeries::zero(series.truncation_order());
    for (&power, poly) in series.coeffs() {
        let mut acc = 0.0;
        for (monomial, coeff) in poly.terms() {
            let mut value = to_f64(coeff);
            let mut residual = None;
            for (g, e) in monomial.powers() {
                match b.gen_value(g) {
                    Some(v) => value *= libm::pow(v, *e as f64),
                    None => {
                        residual = Some(g.render());
                        break;
                    }
                }
            }
            match residual {
                None => acc += value,
                Some(name) => match b.policy {
                    ResidualPolicy::Zero => {}
                    ResidualPolicy::Reject => {
                        return Err(SpectraError::ResidualMonomial { power, monomial: name })
                    }
                },
            }
        }
        out.insert(power, acc);
    }
    Ok(out)
}

/// Sphere mean of `Trσ` as a radial series, through relative order
/// `rel_order` past the leading `(n-1)/r` term.
pub fn trace_sigma_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    evaluate(&series_trace(&sigma_series(rel_order - 1)), b)
}

/// Volume density `v(r)` of geodesic spheres, solving `v'/v = Trσ` with
/// `v ~ r^{n-1}`: `v = r^{n-1}·exp(∫(Trσ - (n-1)/r))`. Truncated at
/// `r^{n-1+rel_order}`.
pub fn volume_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    let trs = trace_sigma_series(b, rel_order)?;
    let nf = (b.n - 1) as f64;
    let g = trs.sub(&RadialScalarSeries::from_pairs(trs.truncation_order(), &[(-1, nf)]));
    let integral = g.integrate()?;
    let w = integral.exp()?;
    Ok(w.shift(b.n as i64 - 1).truncate(b.n as i64 - 1 + rel_order))
}

/// Surface measure of the geodesic sphere: `a₀(S_r) = ω_{n-1}·v(r)`.
pub fn a0_sphere_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    Ok(volume_series(b, rel_order)?.scale(unit_sphere_volume(b.n)))
}

/// Ball volume `a₀(B_r) = ω_{n-1}·∫₀^r v`.
pub fn a0_ball_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    Ok(volume_series(b, rel_order)?
        .integrate()?
        .scale(unit_sphere_volume(b.n)))
}

/// Scalar curvature of the geodesic sphere: `scal^S = (n-1)C + v''/v`.
pub fn scal_s_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    let v = volume_series(b, rel_order + 2)?;
    let quotient = v.derivative().derivative().div(&v)?;
    let head = RadialScalarSeries::from_pairs(
        quotient.truncation_order(),
        &[(0, (b.n - 1) as f64 * b.c)],
    );
    Ok(head.add(&quotient).truncate(rel_order))
}

/// `a₁(S_r) = (1/6)·a₀·scal^S`, truncated at `r^{n-1+rel_order}` — the
/// relative order counts past the constant term of the quotient `a₁/a₀`.
pub fn a1_sphere_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    let a0 = a0_sphere_series(b, 6.min(rel_order + 4))?;
    let scal = scal_s_series(b, 4.min(rel_order + 2))?;
    Ok(a0
        .mul(&scal)
        .scale(1.0 / 6.0)
        .truncate(b.n as i64 - 1 + rel_order))
}

/// Sphere mean of `|Ric^S|²` as a radial series through relative order
/// `rel_order` past the constant term.
pub fn mean_ric_s_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    evaluate(&ric_s_norm_series(rel_order), b)
}

/// Sphere mean of `|R^S|²`.
pub fn mean_r_s_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    evaluate(&r_s_norm_series(rel_order), b)
}

/// `a₂(S_r) = (1/360)·a₀·(5(scal^S)² - 2·mean|Ric^S|² + 2·mean|R^S|²)`.
pub fn a2_sphere_series(b: &Bindings, rel_order: i64) -> Result<RadialScalarSeries, SpectraError> {
    let a0 = a0_sphere_series(b, 6.min(rel_order + 4))?;
    let scal = scal_s_series(b, 4.min(rel_order + 2))?;
    let integrand = scal
        .mul(&scal)
        .scale(5.0)
        .add(&mean_ric_s_series(b, rel_order)?.scale(-2.0))
        .add(&mean_r_s_series(b, rel_order)?.scale(2.0));
    Ok(a0
        .mul(&integrand)
        .scale(1.0 / 360.0)
        .truncate(b.n as i64 - 1 + rel_order))
}

/// The `|∇R|²`-part of the `r²`-coefficient of `mean(|R^S|² - |Ric^S|²)`,
/// equal to `(2n+5)|∇R|²/(16n(n+2)(n+4))`; it is what the sphere heat
/// invariants determine beyond `(n, C, H, L)`.
pub fn distinguisher_sphere(b: &Bindings) -> Result<f64, SpectraError> {
    let combo = r_s_norm_series(2).sub(&ric_s_norm_series(2));
    let full = evaluate(&combo, b)?.coefficient(2);
    let base = evaluate(&combo, &b.zero_nabla())?.coefficient(2);
    Ok(full - base)
}

/// Boundary condition for the ball heat coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Boundary {
    Dirichlet,
    Neumann,
}

impl Boundary {
    /// Weights `(w₃, w₁₂, w₃₃)` of `(Trσ)³`, `Trσ·Tr(σ²)`, `Tr(σ³)` in the
    /// boundary integrand of `a₂`.
    fn weights(self) -> (f64, f64, f64) {
        match self {
            Boundary::Dirichlet => (40.0 / 21.0, -88.0 / 7.0, 320.0 / 21.0),
            Boundary::Neumann => (40.0 / 3.0, 8.0, 32.0 / 3.0),
        }
    }
}

/// `a₂` of the geodesic ball:
/// `(1/360)[vol(B)·(5(nC)² - 2nC² + (4/3)n((n+2)H - C²))`
/// `+ ∫_∂B(20nC·Trσ - 8C·Trσ + 16Tr(R_ν∘σ) + w₃(Trσ)³ + w₁₂Trσ·Tr(σ²) + w₃₃Tr(σ³))]`.
pub fn a2_ball_series(
    b: &Bindings,
    rel_order: i64,
    boundary: Boundary,
) -> Result<RadialScalarSeries, SpectraError> {
    let n = b.n as f64;
    let (w3, w12, w33) = boundary.weights();

    let interior = 5.0 * (n * b.c).powi(2) - 2.0 * n * b.c * b.c
        + 4.0 / 3.0 * n * ((n + 2.0) * b.h - b.c * b.c);
    let vol_ball = volume_series(b, 6)?.integrate()?;

    let trs = trace_sigma_series(b, 6)?;
    let (rnu_sigma, sigma3, trs_trs2) = ball_integrand_series(rel_order.min(3));
    let boundary_mean = trs
        .scale(20.0 * n * b.c - 8.0 * b.c)
        .add(&evaluate(&rnu_sigma, b)?.scale(16.0))
        .add(&trs.mul(&trs).mul(&trs).scale(w3))
        .add(&evaluate(&trs_trs2, b)?.scale(w12))
        .add(&evaluate(&sigma3, b)?.scale(w33));
    let v = volume_series(b, 6)?;

    Ok(vol_ball
        .scale(interior)
        .add(&v.mul(&boundary_mean))
        .scale(unit_sphere_volume(b.n) / 360.0)
        .truncate(b.n as i64 - 1 + rel_order))
}

/// The `|∇R|²`-part of the `r³`-coefficient of the boundary-mean combination
/// `mean(16·Tr(R_ν∘σ) + w₃₃·Tr(σ³))` that the ball heat invariants `a₀, a₂`
/// determine: `|∇R|²/(42n(n+2)(n+4))` for Dirichlet,
/// `|∇R|²/(6n(n+2)(n+4))` for Neumann.
pub fn distinguisher_ball(b: &Bindings, boundary: Boundary) -> Result<f64, SpectraError> {
    let (_, _, w33) = boundary.weights();
    let (rnu_sigma, sigma3, _) = ball_integrand_series(3);
    let full = evaluate(&rnu_sigma, b)?.coefficient(3) * 16.0
        + evaluate(&sigma3, b)?.coefficient(3) * w33;
    let bz = b.zero_nabla();
    let base = evaluate(&rnu_sigma, &bz)?.coefficient(3) * 16.0
        + evaluate(&sigma3, &bz)?.coefficient(3) * w33;
    Ok(full - base)
}

/// Heat-invariant summary of one space.
#[derive(Clone, Debug, Serialize)]
pub struct HeatReport {
    pub label: String,
    pub n: usize,
    pub c: f64,
    pub h: f64,
    pub l: f64,
    pub nabla_r2: f64,
    pub a0_sphere: RadialScalarSeries,
    pub a1_sphere: RadialScalarSeries,
    pub a2_sphere: RadialScalarSeries,
    pub a2_ball_dirichlet: RadialScalarSeries,
    pub a2_ball_neumann: RadialScalarSeries,
    pub d_sphere: f64,
    pub d_dirichlet: f64,
    pub d_neumann: f64,
}

/// Builds the full report at the default relative orders (`r²` past the
/// sphere constants, `r³` for the ball quotient data).
pub fn heat_report(label: &str, b: &Bindings) -> Result<HeatReport, SpectraError> {
    heat_report_with_orders(label, b, 2, 3)
}

/// As [`heat_report`], with explicit relative orders for the sphere `a₂`
/// and the ball series.
pub fn heat_report_with_orders(
    label: &str,
    b: &Bindings,
    sphere_rel: i64,
    ball_rel: i64,
) -> Result<HeatReport, SpectraError> {
    Ok(HeatReport {
        label: String::from(label),
        n: b.n,
        c: b.c,
        h: b.h,
        l: b.l,
        nabla_r2: b.nabla_r2,
        a0_sphere: a0_sphere_series(b, 6)?,
        a1_sphere: a1_sphere_series(b, 4)?,
        a2_sphere: a2_sphere_series(b, sphere_rel)?,
        a2_ball_dirichlet: a2_ball_series(b, ball_rel, Boundary::Dirichlet)?,
        a2_ball_neumann: a2_ball_series(b, ball_rel, Boundary::Neumann)?,
        d_sphere: distinguisher_sphere(b)?,
        d_dirichlet: distinguisher_ball(b, Boundary::Dirichlet)?,
        d_neumann: distinguisher_ball(b, Boundary::Neumann)?,
    })
}

/// Comparison verdict for two spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "dimension-mismatch")]
    DimensionMismatch,
    #[serde(rename = "CHL-mismatch")]
    ChlMismatch,
    #[serde(rename = "nablaR-mismatch")]
    NablaRMismatch,
    #[serde(rename = "indistinguishable-at-this-order")]
    Indistinguishable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::DimensionMismatch => "dimension-mismatch",
            Verdict::ChlMismatch => "CHL-mismatch",
            Verdict::NablaRMismatch => "nablaR-mismatch",
            Verdict::Indistinguishable => "indistinguishable-at-this-order",
        }
    }
}

/// Verdict plus all the numeric deltas that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub verdict: Verdict,
    pub delta_c: f64,
    pub delta_h: f64,
    pub delta_l: f64,
    pub delta_nabla_r2: f64,
    pub delta_d_sphere: f64,
    pub delta_d_dirichlet: f64,
    pub delta_d_neumann: f64,
}

/// Compares two heat reports. Dimension first; then the volume-determined
/// constants `(C, H, L)`; then the `|∇R|²` distinguishers.
pub fn compare(a: &HeatReport, b: &HeatReport, tol: f64) -> CompareReport {
    let rel = |x: f64, y: f64| fabs(x - y) / 1.0_f64.max(fabs(x)).max(fabs(y));
    let report = |verdict| CompareReport {
        verdict,
        delta_c: b.c - a.c,
        delta_h: b.h - a.h,
        delta_l: b.l - a.l,
        delta_nabla_r2: b.nabla_r2 - a.nabla_r2,
        delta_d_sphere: b.d_sphere - a.d_sphere,
        delta_d_dirichlet: b.d_dirichlet - a.d_dirichlet,
        delta_d_neumann: b.d_neumann - a.d_neumann,
    };
    if a.n != b.n {
        return report(Verdict::DimensionMismatch);
    }
    if rel(a.c, b.c) > tol || rel(a.h, b.h) > tol || rel(a.l, b.l) > tol {
        return report(Verdict::ChlMismatch);
    }
    if rel(a.nabla_r2, b.nabla_r2) > tol {
        return report(Verdict::NablaRMismatch);
    }
    report(Verdict::Indistinguishable)
}
