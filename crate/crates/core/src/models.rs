//! Constructors for concrete curvature points: constant-curvature spaces and
//! the one-dimensional solvable extensions of Heisenberg-type nilpotent Lie
//! algebras, with `∇R` computed algebraically from the structure constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use libm::fabs;

use crate::curvio::{CurvaturePoint, CurvioError};
use crate::rational::{rat, to_f64, Rat};

/// Errors for model construction and space-spec parsing.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelError {
    UnsupportedCenterDim(usize),
    EmptyModule,
    JacobiViolation(f64),
    BadDimension(usize),
    Parse(String),
    Curvature(CurvioError),
}

impl core::fmt::Display for ModelError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ModelError::UnsupportedCenterDim(q) => write!(f, "unsupported center dimension {q}"),
            ModelError::EmptyModule => write!(f, "both module multiplicities are zero"),
            ModelError::JacobiViolation(r) => write!(f, "Jacobi identity fails, residual {r:e}"),
            ModelError::BadDimension(n) => write!(f, "invalid dimension {n}"),
            ModelError::Parse(msg) => write!(f, "space spec parse error: {msg}"),
            ModelError::Curvature(e) => write!(f, "curvature construction failed: {e}"),
        }
    }
}

impl From<CurvioError> for ModelError {
    fn from(e: CurvioError) -> Self {
        ModelError::Curvature(e)
    }
}

/// A Clifford module specification: center dimension `q` and multiplicities
/// of the two irreducible module types (for `q = 1, 2` the types coincide).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliffordModuleSpec {
    pub q: usize,
    pub a_plus: usize,
    pub a_minus: usize,
}

/// Dimension of one irreducible module for the supported center dimensions.
pub fn irreducible_module_dim(q: usize) -> Option<usize> {
    match q {
        1 => Some(2),
        2 => Some(4),
        3 => Some(4),
        7 => Some(8),
        _ => None,
    }
}

fn quaternion_left_mults() -> [Vec<f64>; 3] {
    // Left multiplication by i, j, k on R⁴ with basis (1, i, j, k),
    // column c = image of basis vector c.
    let mut li = vec![0.0; 16];
    let mut lj = vec![0.0; 16];
    let mut lk = vec![0.0; 16];
    let set = |m: &mut Vec<f64>, images: [(usize, f64); 4]| {
        for (c, (r, s)) in images.into_iter().enumerate() {
            m[r * 4 + c] = s;
        }
    };
    set(&mut li, [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)]);
    set(&mut lj, [(2, 1.0), (3, -1.0), (0, -1.0), (1, 1.0)]);
    set(&mut lk, [(3, 1.0), (2, 1.0), (1, -1.0), (0, -1.0)]);
    [li, lj, lk]
}

fn quat_mul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: [f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

/// Octonion product via the Cayley-Dickson doubling of the quaternions:
/// `(a,b)(c,d) = (ac - d̄b, da + bc̄)`.
fn oct_mul(x: [f64; 8], y: [f64; 8]) -> [f64; 8] {
    let (a, b) = ([x[0], x[1], x[2], x[3]], [x[4], x[5], x[6], x[7]]);
    let (c, d) = ([y[0], y[1], y[2], y[3]], [y[4], y[5], y[6], y[7]]);
    let p = quat_mul(a, c);
    let q = quat_mul(quat_conj(d), b);
    let r = quat_mul(d, a);
    let s = quat_mul(b, quat_conj(c));
    [
        p[0] - q[0],
        p[1] - q[1],
        p[2] - q[2],
        p[3] - q[3],
        r[0] + s[0],
        r[1] + s[1],
        r[2] + s[2],
        r[3] + s[3],
    ]
}

fn octonion_left_mults() -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(7);
    for m in 1..8 {
        let mut e = [0.0; 8];
        e[m] = 1.0;
        let mut mat = vec![0.0; 64];
        for c in 0..8 {
            let mut b = [0.0; 8];
            b[c] = 1.0;
            let prod = oct_mul(e, b);
            for (r, &v) in prod.iter().enumerate() {
                mat[r * 8 + c] = v;
            }
        }
        out.push(mat);
    }
    out
}

/// One irreducible module: `q` square matrices of size `irreducible_module_dim(q)`.
/// The `minus` variant negates the last map, which swaps the module type when
/// two inequivalent types exist (`q = 3, 7`).
fn irreducible_module(q: usize, minus: bool) -> Result<Vec<Vec<f64>>, ModelError> {
    let mut maps: Vec<Vec<f64>> = match q {
        1 => {
            // rotation by 90 degrees
            vec![vec![0.0, -1.0, 1.0, 0.0]]
        }
        2 => {
            let [li, lj, _] = quaternion_left_mults();
            vec![li, lj]
        }
        3 => quaternion_left_mults().to_vec(),
        7 => octonion_left_mults(),
        q => return Err(ModelError::UnsupportedCenterDim(q)),
    };
    if minus {
        let last = maps.last_mut().expect("q >= 1");
        for v in last.iter_mut() {
            *v = -*v;
        }
    }
    Ok(maps)
}

/// Block-diagonal Clifford module: `q` skew matrices on `v` with
/// `J_s J_t + J_t J_s = -2 δ_{st} Id`. Entries are in `{-1, 0, 1}`.
/// Returns `(dim_v, J_1..J_q)`.
pub fn clifford_module(spec: CliffordModuleSpec) -> Result<(usize, Vec<Vec<f64>>), ModelError> {
    let d = irreducible_module_dim(spec.q).ok_or(ModelError::UnsupportedCenterDim(spec.q))?;
    if spec.a_plus + spec.a_minus == 0 {
        return Err(ModelError::EmptyModule);
    }
    let copies = spec.a_plus + spec.a_minus;
    let dim_v = copies * d;
    let mut js = vec![vec![0.0; dim_v * dim_v]; spec.q];
    for copy in 0..copies {
        let minus = copy >= spec.a_plus;
        let block = irreducible_module(spec.q, minus)?;
        let off = copy * d;
        for (s, b) in block.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    js[s][(off + r) * dim_v + (off + c)] = b[r * d + c];
                }
            }
        }
    }
    Ok((dim_v, js))
}

/// Verifies `J_s` skew-symmetry and the Clifford relations; returns the max
/// residual.
pub fn clifford_residual(dim_v: usize, js: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for j in js {
        for r in 0..dim_v {
            for c in 0..dim_v {
                worst = worst.max(fabs(j[r * dim_v + c] + j[c * dim_v + r]));
            }
        }
    }
    for (s, js_s) in js.iter().enumerate() {
        for (t, js_t) in js.iter().enumerate() {
            for r in 0..dim_v {
                for c in 0..dim_v {
                    let mut anti = 0.0;
                    for m in 0..dim_v {
                        anti += js_s[r * dim_v + m] * js_t[m * dim_v + c]
                            + js_t[r * dim_v + m] * js_s[m * dim_v + c];
                    }
                    let expect = if s == t && r == c { -2.0 } else { 0.0 };
                    worst = worst.max(fabs(anti - expect));
                }
            }
        }
    }
    worst
}

/// A Lie algebra with a fixed orthonormal basis; `c[(i,j,k)] = <[e_i,e_j], e_k>`.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    pub dim: usize,
    pub c: Vec<f64>,
}

impl MetricLieAlgebra {
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Max-norm residual of the Jacobi identity over all basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut acc = 0.0;
                        for m in 0..d {
                            acc += self.c(i, j, m) * self.c(m, k, l)
                                + self.c(j, k, m) * self.c(m, i, l)
                                + self.c(k, i, m) * self.c(m, j, l);
                        }
                        worst = worst.max(fabs(acc));
                    }
                }
            }
        }
        worst
    }
}

/// Solvable extension `a ⊕ v ⊕ z` of the Heisenberg-type algebra built from
/// the Clifford module: `<[x,y], z_s> = <J_s x, y>` on `v`, `[A,x] = x/2`,
/// `[A,z] = z`, with unit `A` as basis vector 0. The Jacobi identity is
/// verified before returning.
pub fn damek_ricci(spec: CliffordModuleSpec) -> Result<MetricLieAlgebra, ModelError> {
    let (dim_v, js) = clifford_module(spec)?;
    solvable_extension(dim_v, &js)
}

/// Degenerate center-free case: abelian `v` of dimension `n - 1` extended by
/// `A`; the real hyperbolic space of curvature `-1/4` in this normalization.
pub fn damek_ricci_degenerate(n: usize) -> Result<MetricLieAlgebra, ModelError> {
    if n < 2 {
        return Err(ModelError::BadDimension(n));
    }
    solvable_extension(n - 1, &[])
}

fn solvable_extension(dim_v: usize, js: &[Vec<f64>]) -> Result<MetricLieAlgebra, ModelError> {
    let q = js.len();
    let d = 1 + dim_v + q;
    let mut c = vec![0.0; d * d * d];
    let mut set = |i: usize, j: usize, k: usize, v: f64| {
        c[(i * d + j) * d + k] = v;
        c[(j * d + i) * d + k] = -v;
    };
    // [A, x] = x/2 for x in v (v occupies indices 1..=dim_v)
    for a in 0..dim_v {
        set(0, 1 + a, 1 + a, 0.5);
    }
    // [A, z] = z for z in the center (indices 1+dim_v..)
    for s in 0..q {
        set(0, 1 + dim_v + s, 1 + dim_v + s, 1.0);
    }
    // <[x, y], z_s> = <J_s x, y>
    for a in 0..dim_v {
        for b in (a + 1)..dim_v {
            for (s, j) in js.iter().enumerate() {
                let v = j[b * dim_v + a]; // <J_s e_a, e_b>
                if v != 0.0 {
                    set(1 + a, 1 + b, 1 + dim_v + s, v);
                }
            }
        }
    }
    let mla = MetricLieAlgebra { dim: d, c };
    let res = mla.jacobi_residual();
    if res > 1e-12 {
        return Err(ModelError::JacobiViolation(res));
    }
    Ok(mla)
}

/// Curvature point of the left-invariant metric via the Koszul formula:
/// `<∇_X Y, Z> = ½(<[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>)`, then
/// `R(x,y)z = -∇_x∇_y z + ∇_y∇_x z + ∇_{[x,y]} z` and
/// `(∇_w R)(x,y)z = ∇_w(R(x,y)z) - R(∇_w x,y)z - R(x,∇_w y)z - R(x,y)∇_w z`.
pub fn curvature_point(mla: &MetricLieAlgebra) -> Result<CurvaturePoint, ModelError> {
    let d = mla.dim;
    // gamma[(i,j,k)] = <∇_{e_i} e_j, e_k>
    let mut gamma = vec![0.0; d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                gamma[(i * d + j) * d + k] =
                    0.5 * (mla.c(i, j, k) - mla.c(j, k, i) + mla.c(k, i, j));
            }
        }
    }
    let g = |i: usize, j: usize, k: usize| gamma[(i * d + j) * d + k];

    let mut r4 = vec![0.0; d * d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut acc = 0.0;
                    for p in 0..d {
                        acc += -g(j, k, p) * g(i, p, l) + g(i, k, p) * g(j, p, l)
                            + mla.c(i, j, p) * g(p, k, l);
                    }
                    r4[((i * d + j) * d + k) * d + l] = acc;
                }
            }
        }
    }
    let r = |i: usize, j: usize, k: usize, l: usize| r4[((i * d + j) * d + k) * d + l];

    let mut dr5 = vec![0.0; d * d * d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    for m in 0..d {
                        let mut acc = 0.0;
                        for p in 0..d {
                            acc += r(i, j, k, p) * g(m, p, l)
                                - g(m, i, p) * r(p, j, k, l)
                                - g(m, j, p) * r(i, p, k, l)
                                - g(m, k, p) * r(i, j, p, l);
                        }
                        dr5[(((i * d + j) * d + k) * d + l) * d + m] = acc;
                    }
                }
            }
        }
    }

    let cp = CurvaturePoint::new(d, r4, Some(dr5))?;
    let violations = cp.validate(1e-10);
    if !violations.is_empty() {
        return Err(ModelError::Parse(format!(
            "constructed tensor fails validation: {}",
            violations.join("; ")
        )));
    }
    Ok(cp)
}

/// Constant-curvature point: `R_{ijkl} = κ(δ_ik δ_jl - δ_il δ_jk)`, `∇R = 0`.
pub fn space_form(n: usize, kappa: f64) -> CurvaturePoint {
    let mut r = vec![0.0; n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            r[((i * n + j) * n + i) * n + j] = kappa;
            r[((i * n + j) * n + j) * n + i] = -kappa;
        }
    }
    CurvaturePoint::new(n, r, Some(vec![0.0; n * n * n * n * n]))
        .expect("component counts are consistent by construction")
}

/// A parsed space specification.
#[derive(Clone, Debug, PartialEq)]
pub enum SpaceSpec {
    Flat { n: usize },
    Form { n: usize, kappa: Rat },
    DamekRicci(CliffordModuleSpec),
    DamekRicciDegenerate { n: usize },
}

impl SpaceSpec {
    /// Parses the grammar `flat:n=<int>`, `form:n=<int>,k=<rational>`,
    /// `dr:q=<int>,p=<int>,m=<int>` (`m` optional; `dr:q=0,n=<int>` for the
    /// degenerate case).
    pub fn parse(text: &str) -> Result<SpaceSpec, ModelError> {
        let text = text.trim();
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| ModelError::Parse(format!("missing ':' in {text:?}")))?;
        let mut fields: Vec<(&str, &str)> = Vec::new();
        for item in rest.split(',') {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| ModelError::Parse(format!("expected key=value, got {item:?}")))?;
            fields.push((k.trim(), v.trim()));
        }
        let get = |key: &str| -> Option<&str> {
            fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
        };
        let expect_keys = |allowed: &[&str]| -> Result<(), ModelError> {
            for (k, _) in &fields {
                if !allowed.contains(k) {
                    return Err(ModelError::Parse(format!("unknown field {k:?}")));
                }
            }
            Ok(())
        };
        let parse_usize = |key: &str| -> Result<usize, ModelError> {
            let v = get(key).ok_or_else(|| ModelError::Parse(format!("missing field {key:?}")))?;
            v.parse::<usize>()
                .map_err(|_| ModelError::Parse(format!("bad integer for {key}: {v:?}")))
        };
        match head.trim() {
            "flat" => {
                expect_keys(&["n"])?;
                Ok(SpaceSpec::Flat { n: parse_usize("n")? })
            }
            "form" => {
                expect_keys(&["n", "k"])?;
                let n = parse_usize("n")?;
                let kv = get("k").ok_or_else(|| ModelError::Parse("missing field \"k\"".to_string()))?;
                Ok(SpaceSpec::Form {
                    n,
                    kappa: parse_rational(kv)?,
                })
            }
            "dr" => {
                let q = parse_usize("q")?;
                if q == 0 {
                    expect_keys(&["q", "n"])?;
                    Ok(SpaceSpec::DamekRicciDegenerate { n: parse_usize("n")? })
                } else {
                    expect_keys(&["q", "p", "m"])?;
                    let a_plus = parse_usize("p")?;
                    let a_minus = if get("m").is_some() { parse_usize("m")? } else { 0 };
                    Ok(SpaceSpec::DamekRicci(CliffordModuleSpec { q, a_plus, a_minus }))
                }
            }
            other => Err(ModelError::Parse(format!("unknown space kind {other:?}"))),
        }
    }

    /// Builds the curvature point the specification describes.
    pub fn build(&self) -> Result<CurvaturePoint, ModelError> {
        match self {
            SpaceSpec::Flat { n } => {
                if *n < 2 {
                    return Err(ModelError::BadDimension(*n));
                }
                Ok(space_form(*n, 0.0))
            }
            SpaceSpec::Form { n, kappa } => {
                if *n < 2 {
                    return Err(ModelError::BadDimension(*n));
                }
                Ok(space_form(*n, to_f64(kappa)))
            }
            SpaceSpec::DamekRicci(spec) => curvature_point(&damek_ricci(*spec)?),
            SpaceSpec::DamekRicciDegenerate { n } => {
                curvature_point(&damek_ricci_degenerate(*n)?)
            }
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            SpaceSpec::Flat { n } | SpaceSpec::Form { n, .. } => *n,
            SpaceSpec::DamekRicci(spec) => {
                let d = irreducible_module_dim(spec.q).unwrap_or(0);
                1 + (spec.a_plus + spec.a_minus) * d + spec.q
            }
            SpaceSpec::DamekRicciDegenerate { n } => *n,
        }
    }
}

fn parse_rational(text: &str) -> Result<Rat, ModelError> {
    let bad = || ModelError::Parse(format!("bad rational {text:?}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let p: i64 = num.trim().parse().map_err(|_| bad())?;
            let q: i64 = den.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(rat(p, q))
        }
        None => {
            let p: i64 = text.parse().map_err(|_| bad())?;
            Ok(rat(p, 1))
        }
    }
}
