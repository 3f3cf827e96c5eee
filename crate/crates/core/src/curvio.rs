//! Numeric evaluation of pointwise curvature data: symmetry validation,
//! curvature invariants, harmonic-space identity checks, and exact or
//! Monte-Carlo sphere averages.
//!
//! Conventions: components are stored in an orthonormal frame as
//! `R[i][j][k][l] = <R(e_i,e_j)e_k, e_l>` with the sign for which the round
//! sphere of curvature `κ > 0` has Jacobi operator `R_u = κ·I` on `u^⊥`.
//! Covariant derivative components are `DR[i][j][k][l][m] = R_{ijkl;m}`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use libm::{cos, fabs, log, sin, sqrt};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::rational::{int, rat, Rat};

/// Errors for curvature-point construction and queries.
#[derive(Clone, Debug, PartialEq)]
pub enum CurvioError {
    /// Component array length does not match the dimension.
    ComponentCount { expected: usize, got: usize },
    /// A direction vector was not of unit length.
    NonUnitVector { norm: f64 },
    /// Dimension too small to carry curvature.
    BadDimension(usize),
}

impl core::fmt::Display for CurvioError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CurvioError::ComponentCount { expected, got } => {
                write!(f, "component count {got} does not match expected {expected}")
            }
            CurvioError::NonUnitVector { norm } => {
                write!(f, "direction vector has norm {norm}, expected 1")
            }
            CurvioError::BadDimension(n) => write!(f, "dimension {n} is too small"),
        }
    }
}

/// Rank-4 curvature components and optional rank-5 covariant-derivative
/// components at a point, in an orthonormal frame.
#[derive(Clone, Debug)]
pub struct CurvaturePoint {
    n: usize,
    r: Vec<f64>,
    dr: Option<Vec<f64>>,
}

impl CurvaturePoint {
    pub fn new(n: usize, r: Vec<f64>, dr: Option<Vec<f64>>) -> Result<Self, CurvioError> {
        if n < 2 {
            return Err(CurvioError::BadDimension(n));
        }
        if r.len() != n.pow(4) {
            return Err(CurvioError::ComponentCount {
                expected: n.pow(4),
                got: r.len(),
            });
        }
        if let Some(dr) = &dr {
            if dr.len() != n.pow(5) {
                return Err(CurvioError::ComponentCount {
                    expected: n.pow(5),
                    got: dr.len(),
                });
            }
        }
        Ok(CurvaturePoint { n, r, dr })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn has_derivative(&self) -> bool {
        self.dr.is_some()
    }

    #[inline]
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let n = self.n;
        self.r[((i * n + j) * n + k) * n + l]
    }

    /// `R_{ijkl;m}`; zero when no derivative block is attached.
    #[inline]
    pub fn dr(&self, i: usize, j: usize, k: usize, l: usize, m: usize) -> f64 {
        match &self.dr {
            Some(dr) => {
                let n = self.n;
                dr[(((i * n + j) * n + k) * n + l) * n + m]
            }
            None => 0.0,
        }
    }

    pub fn r_components(&self) -> &[f64] {
        &self.r
    }

    pub fn dr_components(&self) -> Option<&[f64]> {
        self.dr.as_deref()
    }

    /// Checks the algebraic symmetries of `R` and `DR`; returns the names of
    /// the violated identities together with the worst residual.
    pub fn validate(&self, tol: f64) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        let mut check = |name: &str, worst: f64| {
            if worst > tol {
                out.push(format!("{name} (max residual {worst:e})"));
            }
        };
        let mut a_ij: f64 = 0.0;
        let mut a_kl: f64 = 0.0;
        let mut pair: f64 = 0.0;
        let mut bianchi1: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        a_ij = a_ij.max(fabs(self.r(i, j, k, l) + self.r(j, i, k, l)));
                        a_kl = a_kl.max(fabs(self.r(i, j, k, l) + self.r(i, j, l, k)));
                        pair = pair.max(fabs(self.r(i, j, k, l) - self.r(k, l, i, j)));
                        bianchi1 = bianchi1.max(fabs(
                            self.r(i, j, k, l) + self.r(j, k, i, l) + self.r(k, i, j, l),
                        ));
                    }
                }
            }
        }
        check("R antisymmetry in (i,j)", a_ij);
        check("R antisymmetry in (k,l)", a_kl);
        check("R pair symmetry (ij)<->(kl)", pair);
        check("first Bianchi identity", bianchi1);

        if self.dr.is_some() {
            let mut d_ij: f64 = 0.0;
            let mut d_kl: f64 = 0.0;
            let mut d_pair: f64 = 0.0;
            let mut bianchi2: f64 = 0.0;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            for m in 0..n {
                                d_ij = d_ij
                                    .max(fabs(self.dr(i, j, k, l, m) + self.dr(j, i, k, l, m)));
                                d_kl = d_kl
                                    .max(fabs(self.dr(i, j, k, l, m) + self.dr(i, j, l, k, m)));
                                d_pair = d_pair
                                    .max(fabs(self.dr(i, j, k, l, m) - self.dr(k, l, i, j, m)));
                                bianchi2 = bianchi2.max(fabs(
                                    self.dr(i, j, k, l, m)
                                        + self.dr(j, m, k, l, i)
                                        + self.dr(m, i, k, l, j),
                                ));
                            }
                        }
                    }
                }
            }
            check("DR antisymmetry in (i,j)", d_ij);
            check("DR antisymmetry in (k,l)", d_kl);
            check("DR pair symmetry (ij)<->(kl)", d_pair);
            check("second Bianchi identity", bianchi2);
        }
        out
    }

    /// Jacobi operator `R_u = R(u,·)u` as a dense symmetric matrix,
    /// `(R_u)_{kl} = Σ_{ij} u_i u_j R_{ikjl}`.
    pub fn jacobi(&self, u: &[f64]) -> Result<Vec<f64>, CurvioError> {
        self.check_unit(u)?;
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for k in 0..n {
            for l in 0..n {
                let mut acc = 0.0;
                for i in 0..n {
                    if u[i] == 0.0 {
                        continue;
                    }
                    for j in 0..n {
                        acc += u[i] * u[j] * self.r(i, k, j, l);
                    }
                }
                out[k * n + l] = acc;
            }
        }
        Ok(out)
    }

    /// `R'_u = (∇_u R)(u,·)u`, `(R'_u)_{kl} = Σ_{ijm} u_i u_j u_m R_{ikjl;m}`.
    pub fn djacobi(&self, u: &[f64]) -> Result<Vec<f64>, CurvioError> {
        self.check_unit(u)?;
        let n = self.n;
        let mut out = vec![0.0; n * n];
        let Some(dr) = &self.dr else {
            return Ok(out);
        };
        // Contract one index at a time to keep the cost at O(n^5).
        let mut t1 = vec![0.0; n * n * n * n]; // [k][j][l][m] = Σ_i u_i DR[i,k,j,l,m]
        for i in 0..n {
            let ui = u[i];
            if ui == 0.0 {
                continue;
            }
            let base = i * n * n * n * n;
            for rest in 0..n * n * n * n {
                t1[rest] += ui * dr[base + rest];
            }
        }
        let mut t2 = vec![0.0; n * n * n]; // [k][l][m] = Σ_j u_j t1[k][j][l][m]
        for k in 0..n {
            for j in 0..n {
                let uj = u[j];
                if uj == 0.0 {
                    continue;
                }
                for l in 0..n {
                    for m in 0..n {
                        t2[(k * n + l) * n + m] += uj * t1[((k * n + j) * n + l) * n + m];
                    }
                }
            }
        }
        for k in 0..n {
            for l in 0..n {
                let mut acc = 0.0;
                for m in 0..n {
                    acc += u[m] * t2[(k * n + l) * n + m];
                }
                out[k * n + l] = acc;
            }
        }
        Ok(out)
    }

    /// Ricci operator `Ric_{ik} = Σ_j R_{jijk}`.
    pub fn ricci(&self) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = 0.0;
                for j in 0..n {
                    acc += self.r(j, i, j, k);
                }
                out[i * n + k] = acc;
            }
        }
        out
    }

    pub fn norm_r2(&self) -> f64 {
        self.r.iter().map(|x| x * x).sum()
    }

    pub fn norm_dr2(&self) -> f64 {
        match &self.dr {
            Some(dr) => dr.iter().map(|x| x * x).sum(),
            None => 0.0,
        }
    }

    /// `R̂ = Σ R_{ijkl} R_{klab} R_{abij}`.
    pub fn rhat(&self) -> f64 {
        let n = self.n;
        // tr(M³) for the pair-index matrix M[(ij),(kl)] = R_{ijkl}.
        let m = n * n;
        let mat = &self.r;
        let mut sq = vec![0.0; m * m];
        for a in 0..m {
            for b in 0..m {
                let mut acc = 0.0;
                for c in 0..m {
                    acc += mat[a * m + c] * mat[c * m + b];
                }
                sq[a * m + b] = acc;
            }
        }
        let mut acc = 0.0;
        for a in 0..m {
            for b in 0..m {
                acc += sq[a * m + b] * mat[b * m + a];
            }
        }
        acc
    }

    /// `ρ̌ = Σ R_{ijkl} R_{jalb} R_{aibk}`.
    pub fn rcirc(&self) -> f64 {
        let n = self.n;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let rijkl = self.r(i, j, k, l);
                        if rijkl == 0.0 {
                            continue;
                        }
                        let mut inner = 0.0;
                        for a in 0..n {
                            for b in 0..n {
                                inner += self.r(j, a, l, b) * self.r(a, i, b, k);
                            }
                        }
                        acc += rijkl * inner;
                    }
                }
            }
        }
        acc
    }

    fn check_unit(&self, u: &[f64]) -> Result<(), CurvioError> {
        if u.len() != self.n {
            return Err(CurvioError::ComponentCount {
                expected: self.n,
                got: u.len(),
            });
        }
        let norm = sqrt(u.iter().map(|x| x * x).sum());
        if fabs(norm - 1.0) > 1e-8 {
            return Err(CurvioError::NonUnitVector { norm });
        }
        Ok(())
    }
}

/// Pointwise curvature invariants of a (candidate) harmonic space.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    /// Einstein constant `C = Tr(R_u)`.
    pub c: f64,
    /// `scal = nC`.
    pub scal: f64,
    /// `H = Tr(R_u R_u)`, averaged over sampled directions.
    pub h: f64,
    /// `L = Tr(32 R_u³ - 9 R'_u R'_u)`, averaged over sampled directions.
    pub l: f64,
    pub norm_r2: f64,
    pub norm_dr2: f64,
    pub rhat: f64,
    pub rcirc: f64,
    /// `max |Ric - C·Id|` entry; nonzero flags non-Einstein input.
    pub ricci_deviation: f64,
    /// Max deviation of `Tr(R_u R_u)` from `H` over the sampled directions.
    pub h_deviation: f64,
    /// Max deviation of the `L`-trace from `L` over the sampled directions.
    pub l_deviation: f64,
}

fn mat_mul(n: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn mat_trace(n: usize, a: &[f64]) -> f64 {
    (0..n).map(|i| a[i * n + i]).sum()
}

/// Number of deterministic directions used for the `H` / `L` sampling.
const INVARIANT_DIRECTIONS: usize = 64;

/// Computes the invariant report. `C` comes from the Ricci operator; `H` and
/// `L` from trace averages over a deterministic direction sample, with the
/// worst deviation recorded.
pub fn invariants(cp: &CurvaturePoint) -> InvariantReport {
    let n = cp.n;
    let ric = cp.ricci();
    let c = mat_trace(n, &ric) / n as f64;
    let mut ricci_deviation: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { c } else { 0.0 };
            ricci_deviation = ricci_deviation.max(fabs(ric[i * n + j] - expect));
        }
    }

    let dirs = low_discrepancy_directions(n, INVARIANT_DIRECTIONS);
    let mut h_values = Vec::with_capacity(dirs.len());
    let mut l_values = Vec::with_capacity(dirs.len());
    for u in &dirs {
        let ru = cp.jacobi(u).expect("sampled direction is unit");
        let dru = cp.djacobi(u).expect("sampled direction is unit");
        let ru2 = mat_mul(n, &ru, &ru);
        h_values.push(mat_trace(n, &ru2));
        let ru3 = mat_mul(n, &ru2, &ru);
        let dru2 = mat_mul(n, &dru, &dru);
        l_values.push(32.0 * mat_trace(n, &ru3) - 9.0 * mat_trace(n, &dru2));
    }
    let h = h_values.iter().sum::<f64>() / h_values.len() as f64;
    let l = l_values.iter().sum::<f64>() / l_values.len() as f64;
    let h_deviation = h_values.iter().map(|v| fabs(v - h)).fold(0.0, f64::max);
    let l_deviation = l_values.iter().map(|v| fabs(v - l)).fold(0.0, f64::max);

    InvariantReport {
        n,
        c,
        scal: n as f64 * c,
        h,
        l,
        norm_r2: cp.norm_r2(),
        norm_dr2: cp.norm_dr2(),
        rhat: cp.rhat(),
        rcirc: cp.rcirc(),
        ricci_deviation,
        h_deviation,
        l_deviation,
    }
}

/// One identity of the harmonic consistency suite.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub pass: bool,
}

fn scaled_check(name: &str, lhs: f64, rhs: f64, tol: f64) -> IdentityCheck {
    let scale = 1.0_f64.max(fabs(lhs)).max(fabs(rhs));
    let residual = fabs(lhs - rhs) / scale;
    IdentityCheck {
        name: String::from(name),
        lhs,
        rhs,
        residual,
        pass: residual <= tol,
    }
}

/// Checks the curvature identities every harmonic space satisfies:
/// the quadratic frame identity, `|R|²`, the sixth-order `L`-relation, and
/// the Lichnerowicz combination (with `Δ|R|² = 0` for homogeneous input).
pub fn harmonic_identity_suite(cp: &CurvaturePoint, tol: f64) -> Vec<IdentityCheck> {
    let n = cp.n;
    let nf = n as f64;
    let inv = invariants(cp);
    let (c, h, l) = (inv.c, inv.h, inv.l);
    let r2 = inv.norm_r2;
    let dr2 = inv.norm_dr2;
    let rhat = inv.rhat;
    let rcirc = inv.rcirc;

    let mut out = Vec::new();

    // (i) <R(x,·)·, R(y,·)·> = (2/3)((n+2)H - C²) <x,y> on the frame.
    let target = 2.0 / 3.0 * ((nf + 2.0) * h - c * c);
    let mut worst = 0.0_f64;
    for x in 0..n {
        for y in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        acc += cp.r(x, j, k, m) * cp.r(y, j, k, m);
                    }
                }
            }
            let expect = if x == y { target } else { 0.0 };
            worst = worst.max(fabs(acc - expect));
        }
    }
    let scale = 1.0_f64.max(fabs(target));
    out.push(IdentityCheck {
        name: String::from("frame identity (i)"),
        lhs: worst,
        rhs: 0.0,
        residual: worst / scale,
        pass: worst / scale <= tol,
    });

    // (ii) |R|² = (2/3) n ((n+2)H - C²)
    out.push(scaled_check(
        "|R|^2 identity (ii)",
        r2,
        2.0 / 3.0 * nf * ((nf + 2.0) * h - c * c),
        tol,
    ));

    // (iii) 32(nC³ + (9/2)C|R|² + (7/2)R̂ - ρ̌) - 27|∇R|² = n(n+2)(n+4)L
    out.push(scaled_check(
        "sixth-order L relation (iii)",
        32.0 * (nf * c * c * c + 4.5 * c * r2 + 3.5 * rhat - rcirc) - 27.0 * dr2,
        nf * (nf + 2.0) * (nf + 4.0) * l,
        tol,
    ));

    // Lichnerowicz: 2C|R|² - R̂ - 4ρ̌ + |∇R|² = 0
    out.push(scaled_check(
        "Lichnerowicz combination",
        2.0 * c * r2 - rhat - 4.0 * rcirc + dr2,
        0.0,
        tol,
    ));

    // A-contraction triple against (nC³, ρ̌, ρ̌ - R̂/4).
    let (aabb, abab, abba) = a_contractions(cp);
    out.push(scaled_check("A_aabb = nC^3", aabb, nf * c * c * c, tol));
    out.push(scaled_check("A_abab = rcirc", abab, rcirc, tol));
    out.push(scaled_check(
        "A_abba = rcirc - rhat/4",
        abba,
        rcirc - rhat / 4.0,
        tol,
    ));

    out
}

/// The three pair-contractions of `A_{abcd} = Σ R_{ijkl} R_{aibk} R_{cjdl}`:
/// `(Σ A_{aabb}, Σ A_{abab}, Σ A_{abba})`, each computed by direct
/// contraction (no identity shortcuts).
pub fn a_contractions(cp: &CurvaturePoint) -> (f64, f64, f64) {
    let n = cp.n;
    // Σ_ab A_aabb = Σ R_{ijkl} Ric_{ik} Ric_{jl}
    let ric = cp.ricci();
    let mut aabb = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    aabb += cp.r(i, j, k, l) * ric[i * n + k] * ric[j * n + l];
                }
            }
        }
    }
    // Σ_ab A_abab = Σ R_{ijkl} Σ_ab R_{aibk} R_{ajbl}
    // Σ_ab A_abba = Σ R_{ijkl} Σ_ab R_{aibk} R_{bjal}
    let mut abab = 0.0;
    let mut abba = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let rijkl = cp.r(i, j, k, l);
                    if rijkl == 0.0 {
                        continue;
                    }
                    let mut s = 0.0;
                    let mut t = 0.0;
                    for a in 0..n {
                        for b in 0..n {
                            let raibk = cp.r(a, i, b, k);
                            s += raibk * cp.r(a, j, b, l);
                            t += raibk * cp.r(b, j, a, l);
                        }
                    }
                    abab += rijkl * s;
                    abba += rijkl * t;
                }
            }
        }
    }
    (aabb, abab, abba)
}

/// Fourth moment of monomial `u_a u_b u_c u_d` over the unit sphere in
/// `R^n`, as an exact rational multiple of `ω_{n-1}`:
/// `3/(n(n+2))` for `u_1⁴`, `1/(n(n+2))` for `u_1²u_2²`, zero otherwise.
pub fn fourth_moment(n: usize, indices: [usize; 4]) -> Rat {
    let mut counts: Vec<(usize, u32)> = Vec::new();
    for idx in indices {
        match counts.iter_mut().find(|(i, _)| *i == idx) {
            Some((_, c)) => *c += 1,
            None => counts.push((idx, 1)),
        }
    }
    let denom = (n * (n + 2)) as i64;
    match counts.as_slice() {
        [(_, 4)] => rat(3, denom),
        [(_, 2), (_, 2)] => rat(1, denom),
        _ => int(0),
    }
}

/// Exact sphere average of `T2 = Tr(R'_u R'_u)`:
/// `3 |∇R|² / (n(n+2)(n+4))`.
pub fn sphere_average_t2(cp: &CurvaturePoint) -> f64 {
    let nf = cp.n as f64;
    3.0 * cp.norm_dr2() / (nf * (nf + 2.0) * (nf + 4.0))
}

/// Exact sphere average of `Q0 = Σ_i Tr(R_u R(e_i,·)R_u e_i)`:
/// `(nC³ + 2ρ̌ - R̂/4) / (n(n+2))`. Requires the Einstein condition.
pub fn sphere_average_q0(cp: &CurvaturePoint) -> f64 {
    let nf = cp.n as f64;
    let inv = invariants(cp);
    (nf * inv.c.powi(3) + 2.0 * cp.rcirc() - 0.25 * cp.rhat()) / (nf * (nf + 2.0))
}

/// Sphere average of `Q0` via the symmetrized fourth-moment route:
/// `(Σ A_aabb + Σ A_abab + Σ A_abba) / (n(n+2))`, independent of the
/// sixth-order invariants.
pub fn symmetrized_average_q0(cp: &CurvaturePoint) -> f64 {
    let nf = cp.n as f64;
    let (aabb, abab, abba) = a_contractions(cp);
    (aabb + abab + abba) / (nf * (nf + 2.0))
}

/// Sphere average of `T2` via the exact sixth-moment symmetrization: the
/// degree-6 coefficient tensor of `Tr(R'_u R'_u)` contracted with all 15
/// pairings, divided by `n(n+2)(n+4)`.
pub fn symmetrized_average_t2(cp: &CurvaturePoint) -> f64 {
    let n = cp.n;
    // Tr(R'_u R'_u) = Σ T(a,b,m, c,d,f) u_a u_b u_m u_c u_d u_f with
    // T = Σ_{x,y} DR[a,x,b,y,m] DR[c,y,d,x,f].
    let slots = [0usize, 1, 2, 3, 4, 5];
    let mut pairings: Vec<[(usize, usize); 3]> = Vec::new();
    collect_pairings(&slots, &mut vec![], &mut pairings);
    let mut total = 0.0;
    for pairing in &pairings {
        total += contract_t2_pairing(cp, pairing);
    }
    let nf = n as f64;
    total / (nf * (nf + 2.0) * (nf + 4.0))
}

fn collect_pairings(
    remaining: &[usize],
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<[(usize, usize); 3]>,
) {
    if remaining.is_empty() {
        out.push([acc[0], acc[1], acc[2]]);
        return;
    }
    let first = remaining[0];
    for (pos, &other) in remaining.iter().enumerate().skip(1) {
        let rest: Vec<usize> = remaining[1..]
            .iter()
            .copied()
            .filter(|_| true)
            .enumerate()
            .filter(|(i, _)| *i != pos - 1)
            .map(|(_, v)| v)
            .collect();
        acc.push((first, other));
        collect_pairings(&rest, acc, out);
        acc.pop();
    }
}

fn contract_t2_pairing(cp: &CurvaturePoint, pairing: &[(usize, usize); 3]) -> f64 {
    let n = cp.n;
    // Slot layout: first factor DR[s0, x, s1, y, s2], second DR[s3, y, s4, x, s5].
    let mut slot = [0usize; 6];
    let mut acc = 0.0;
    let mut idx = [0usize; 3];
    loop {
        for (p, &(a, b)) in pairing.iter().enumerate() {
            slot[a] = idx[p];
            slot[b] = idx[p];
        }
        for x in 0..n {
            for y in 0..n {
                acc += cp.dr(slot[0], x, slot[1], y, slot[2])
                    * cp.dr(slot[3], y, slot[4], x, slot[5]);
            }
        }
        // odometer over the three pair values
        let mut p = 0;
        loop {
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
            if p == 3 {
                return acc;
            }
        }
    }
}

/// Result of a Monte-Carlo sphere average.
#[derive(Clone, Debug, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Seeded Monte-Carlo estimate of the sphere average of `Tr(R'_u R'_u)`.
/// Per-sample seeds are derived from the master seed, so the result is
/// deterministic regardless of evaluation order.
pub fn monte_carlo_average_t2(cp: &CurvaturePoint, samples: usize, seed: u64) -> MonteCarloEstimate {
    monte_carlo_average(cp, samples, seed, |cp, u| {
        let dru = cp.djacobi(u).expect("sampled direction is unit");
        dru.iter().map(|x| x * x).sum()
    })
}

/// Seeded Monte-Carlo estimate of the sphere average of `Q0`.
pub fn monte_carlo_average_q0(cp: &CurvaturePoint, samples: usize, seed: u64) -> MonteCarloEstimate {
    let n = cp.n;
    monte_carlo_average(cp, samples, seed, move |cp, u| {
        // Σ_i Tr(R_u R(e_i,·) R_u e_i) = Σ_{ijkl} R_{ijkl} (R_u)_{ik} (R_u)_{jl}
        let ru = cp.jacobi(u).expect("sampled direction is unit");
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        acc += cp.r(i, j, k, l) * ru[i * n + k] * ru[j * n + l];
                    }
                }
            }
        }
        acc
    })
}

fn monte_carlo_average<F: Fn(&CurvaturePoint, &[f64]) -> f64>(
    cp: &CurvaturePoint,
    samples: usize,
    seed: u64,
    f: F,
) -> MonteCarloEstimate {
    let n = cp.n;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for s in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(s as u64 + 1)));
        let u = random_unit_vector(n, &mut rng);
        let v = f(cp, &u);
        sum += v;
        sum_sq += v * v;
    }
    let mean = sum / samples as f64;
    let var = (sum_sq / samples as f64 - mean * mean).max(0.0);
    MonteCarloEstimate {
        mean,
        std_error: sqrt(var / samples as f64),
        samples,
    }
}

fn uniform01(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn gaussian_pair(rng: &mut impl RngCore) -> (f64, f64) {
    // Box-Muller
    let mut u1 = uniform01(rng);
    if u1 <= f64::MIN_POSITIVE {
        u1 = f64::MIN_POSITIVE;
    }
    let u2 = uniform01(rng);
    let r = sqrt(-2.0 * log(u1));
    let t = 2.0 * core::f64::consts::PI * u2;
    (r * cos(t), r * sin(t))
}

/// Uniform random unit vector in `R^n` (normalized Gaussian).
pub fn random_unit_vector(n: usize, rng: &mut impl RngCore) -> Vec<f64> {
    loop {
        let mut v = Vec::with_capacity(n + 1);
        while v.len() < n {
            let (a, b) = gaussian_pair(rng);
            v.push(a);
            v.push(b);
        }
        v.truncate(n);
        let norm = sqrt(v.iter().map(|x| x * x).sum());
        if norm > 1e-8 {
            for x in &mut v {
                *x /= norm;
            }
            return v;
        }
    }
}

/// Deterministic low-discrepancy direction sample: a Kronecker sequence on
/// the cube mapped through Box-Muller pairs and normalized.
pub fn low_discrepancy_directions(n: usize, count: usize) -> Vec<Vec<f64>> {
    // frac(sqrt(p)) for the first primes as the irrational increments
    const PRIMES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    let m = n.div_ceil(2) * 2;
    let alphas: Vec<f64> = (0..m)
        .map(|i| {
            let p = PRIMES[i % PRIMES.len()] as f64 * (1 + i / PRIMES.len()) as f64;
            let s = sqrt(p);
            s - libm::floor(s)
        })
        .collect();
    let mut out = Vec::with_capacity(count);
    for t in 1..=count {
        let mut v = Vec::with_capacity(m);
        for pair in 0..m / 2 {
            let x1 = frac(0.5 + t as f64 * alphas[2 * pair]).max(f64::MIN_POSITIVE);
            let x2 = frac(0.5 + t as f64 * alphas[2 * pair + 1]);
            let r = sqrt(-2.0 * log(x1));
            let a = 2.0 * core::f64::consts::PI * x2;
            v.push(r * cos(a));
            v.push(r * sin(a));
        }
        v.truncate(n);
        let norm = sqrt(v.iter().map(|x| x * x).sum());
        for x in &mut v {
            *x /= norm;
        }
        out.push(v);
    }
    out
}

fn frac(x: f64) -> f64 {
    x - libm::floor(x)
}

/// Volume `ω_{n-1} = 2 π^{n/2} / Γ(n/2)` of the standard unit sphere in
/// `R^n`, with the half-integer gamma evaluated exactly.
pub fn unit_sphere_volume(n: usize) -> f64 {
    let pi = core::f64::consts::PI;
    let gamma_half_n = if n % 2 == 0 {
        // Γ(m) = (m-1)!
        let m = n / 2;
        let mut acc = 1.0;
        for i in 2..m {
            acc *= i as f64;
        }
        acc
    } else {
        // Γ(m + 1/2) = (2m-1)!!/2^m √π with m = (n-1)/2
        let m = (n - 1) / 2;
        let mut acc = sqrt(pi);
        for i in 0..m {
            acc *= (2 * i + 1) as f64 / 2.0;
        }
        acc
    };
    2.0 * libm::pow(pi, n as f64 / 2.0) / gamma_half_n
}
