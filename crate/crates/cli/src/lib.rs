//! Command-line front end: parse space specifications or tensor files, run
//! the symbolic expansions and verification suites, and emit reports.

pub mod tensor;

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use harmonics_core::curvio::{
    harmonic_identity_suite, invariants, monte_carlo_average_q0, monte_carlo_average_t2,
    sphere_average_q0, sphere_average_t2, symmetrized_average_q0, symmetrized_average_t2,
    CurvaturePoint, InvariantReport,
};
use harmonics_core::jets::{
    ball_integrand_series, ledger_series, r_s_norm_series, ric_s_norm_series, series_trace,
};
use harmonics_core::models::SpaceSpec;
use harmonics_core::spectra::{
    compare, heat_report_with_orders, Bindings, CompareReport, HeatReport, ResidualPolicy,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "harmonics",
    about = "Radial expansions and heat invariants of geodesic spheres in harmonic spaces",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print an exact symbolic radial series.
    Expand(ExpandArgs),
    /// Validate a space: tensor symmetries, curvature identities, average cross-checks.
    Verify(VerifyArgs),
    /// Print the invariant report of a space.
    Space(SpaceArgs),
    /// Compare the heat invariants of two spaces.
    Compare(CompareArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandTarget {
    /// Shape operator series σ(r).
    Sigma,
    /// σ².
    Sigma2,
    /// σ⁴.
    Sigma4,
    /// Tr σ.
    Trace,
    /// |Ric^S|² of the geodesic sphere.
    RicS,
    /// |R^S|² of the geodesic sphere.
    RS,
    /// Ball boundary integrands Tr(R_ν∘σ), Tr(σ³), Trσ·Tr(σ²).
    Ball,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub target: ExpandTarget,
    /// Truncation order of the series in r.
    #[arg(long, default_value_t = 5)]
    pub order: i64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Space spec (e.g. "dr:q=3,p=1,m=1") or tensor file path.
    pub space: String,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SpaceArgs {
    /// Space spec or tensor file path.
    pub space: String,
    /// Write the curvature tensor to this file.
    #[arg(long)]
    pub dump_tensor: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    pub space_a: String,
    pub space_b: String,
    /// Relative order of the sphere a₂ series (ball series use order + 1).
    #[arg(long, default_value_t = 2)]
    pub order: i64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

/// Resolves a space argument: a parsable spec wins, otherwise an existing
/// file path is read as a tensor dump.
pub fn load_space(arg: &str) -> Result<(String, CurvaturePoint), String> {
    match SpaceSpec::parse(arg) {
        Ok(spec) => {
            let cp = spec.build().map_err(|e| e.to_string())?;
            Ok((arg.to_string(), cp))
        }
        Err(parse_err) => {
            let path = Path::new(arg);
            if path.exists() {
                let cp = tensor::read_tensor(path).map_err(|e| e.to_string())?;
                Ok((arg.to_string(), cp))
            } else {
                Err(format!("{parse_err} (and no such file: {arg})"))
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Expand(args) => cmd_expand(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Space(args) => cmd_space(&args),
        Command::Compare(args) => cmd_compare(&args),
    }
}

#[derive(Serialize)]
struct ExpandOutput {
    target: String,
    order: i64,
    series: Vec<(String, String)>,
}

pub fn cmd_expand(args: &ExpandArgs) -> i32 {
    if args.order < 0 || args.order > 10 {
        eprintln!("error: supported expansion orders are 0..=10");
        return EXIT_USAGE;
    }
    let order = args.order;
    let series: Vec<(String, String)> = match args.target {
        ExpandTarget::Sigma => {
            vec![("sigma".into(), ledger_series(order).render())]
        }
        ExpandTarget::Sigma2 => {
            let s = ledger_series(order + 2);
            vec![("sigma^2".into(), s.mul(&s).truncate(order).render())]
        }
        ExpandTarget::Sigma4 => {
            let s = ledger_series(order + 4);
            let s2 = s.mul(&s);
            vec![("sigma^4".into(), s2.mul(&s2).truncate(order).render())]
        }
        ExpandTarget::Trace => {
            vec![("Tr(sigma)".into(), series_trace(&ledger_series(order)).render())]
        }
        ExpandTarget::RicS => {
            vec![("|Ric^S|^2".into(), ric_s_norm_series(order).render())]
        }
        ExpandTarget::RS => {
            vec![("|R^S|^2".into(), r_s_norm_series(order).render())]
        }
        ExpandTarget::Ball => {
            let (rnu, s3, ts2) = ball_integrand_series(order);
            vec![
                ("Tr(R_nu.sigma)".into(), rnu.render()),
                ("Tr(sigma^3)".into(), s3.render()),
                ("Tr(sigma)Tr(sigma^2)".into(), ts2.render()),
            ]
        }
    };
    if args.json {
        let out = ExpandOutput {
            target: format!("{:?}", args.target).to_lowercase(),
            order,
            series,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        for (name, rendered) in series {
            println!("{name} = {rendered}");
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyOutput {
    pub space: String,
    pub tol: f64,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

/// Runs the full verification suite on a curvature point.
pub fn verify_checks(cp: &CurvaturePoint, tol: f64, seed: u64) -> Vec<CheckLine> {
    let mut checks = Vec::new();

    let violations = cp.validate(tol.max(1e-10));
    checks.push(CheckLine {
        name: "tensor symmetries".into(),
        pass: violations.is_empty(),
        detail: if violations.is_empty() {
            "all algebraic identities hold".into()
        } else {
            violations.join("; ")
        },
    });

    for check in harmonic_identity_suite(cp, tol) {
        checks.push(CheckLine {
            name: check.name.clone(),
            pass: check.pass,
            detail: format!("lhs {} rhs {} residual {:e}", check.lhs, check.rhs, check.residual),
        });
    }

    let scale = |x: f64, y: f64| 1.0_f64.max(x.abs()).max(y.abs());
    let t2_formula = sphere_average_t2(cp);
    let t2_sym = symmetrized_average_t2(cp);
    checks.push(CheckLine {
        name: "mean T2: symmetrization vs formula".into(),
        pass: (t2_formula - t2_sym).abs() <= tol * scale(t2_formula, t2_sym),
        detail: format!("{t2_sym} vs {t2_formula}"),
    });
    let q0_formula = sphere_average_q0(cp);
    let q0_sym = symmetrized_average_q0(cp);
    checks.push(CheckLine {
        name: "mean Q0: symmetrization vs formula".into(),
        pass: (q0_formula - q0_sym).abs() <= tol * scale(q0_formula, q0_sym),
        detail: format!("{q0_sym} vs {q0_formula}"),
    });

    let samples = 2000;
    let mc = monte_carlo_average_t2(cp, samples, seed);
    checks.push(CheckLine {
        name: "mean T2: Monte Carlo within 3 standard errors".into(),
        pass: (mc.mean - t2_formula).abs() <= 3.0 * mc.std_error + tol,
        detail: format!("{} ± {} vs {t2_formula}", mc.mean, mc.std_error),
    });
    let mc = monte_carlo_average_q0(cp, samples, seed.wrapping_add(1));
    checks.push(CheckLine {
        name: "mean Q0: Monte Carlo within 3 standard errors".into(),
        pass: (mc.mean - q0_formula).abs() <= 3.0 * mc.std_error + tol,
        detail: format!("{} ± {} vs {q0_formula}", mc.mean, mc.std_error),
    });

    checks
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let (label, cp) = match load_space(&args.space) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let checks = verify_checks(&cp, args.tol, args.seed);
    let pass = checks.iter().all(|c| c.pass);
    if args.json {
        let out = VerifyOutput { space: label, tol: args.tol, checks, pass };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("space: {label}");
        for c in &checks {
            println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        println!("result: {}", if pass { "pass" } else { "fail" });
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Serialize)]
struct SpaceOutput {
    space: String,
    invariants: InvariantReport,
}

pub fn cmd_space(args: &SpaceArgs) -> i32 {
    let (label, cp) = match load_space(&args.space) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &args.dump_tensor {
        if let Err(e) = tensor::write_tensor(Path::new(path), &cp) {
            eprintln!("error: {e}");
            return EXIT_CHECK_FAILED;
        }
    }
    let inv = invariants(&cp);
    if args.json {
        let out = SpaceOutput { space: label, invariants: inv };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("space: {label}");
        println!("n: {}", inv.n);
        println!("C: {}", inv.c);
        println!("scal: {}", inv.scal);
        println!("H: {}", inv.h);
        println!("L: {}", inv.l);
        println!("|R|^2: {}", inv.norm_r2);
        println!("|DR|^2: {}", inv.norm_dr2);
        println!("Rhat: {}", inv.rhat);
        println!("rho_check: {}", inv.rcirc);
        println!("ricci_deviation: {:e}", inv.ricci_deviation);
        println!("H_deviation: {:e}", inv.h_deviation);
        println!("L_deviation: {:e}", inv.l_deviation);
    }
    EXIT_OK
}

#[derive(Serialize)]
pub struct CompareOutput {
    pub a: HeatReport,
    pub b: HeatReport,
    pub compare: CompareReport,
}

/// Builds both heat reports and the comparison record.
pub fn compare_spaces(
    spec_a: &str,
    spec_b: &str,
    order: i64,
    tol: f64,
) -> Result<CompareOutput, String> {
    let mut reports = Vec::new();
    for arg in [spec_a, spec_b] {
        let (label, cp) = load_space(arg)?;
        let inv = invariants(&cp);
        let b = Bindings::from_invariants(&inv, ResidualPolicy::Reject);
        let report = heat_report_with_orders(&label, &b, order, order + 1)
            .map_err(|e| e.to_string())?;
        reports.push(report);
    }
    let b = reports.pop().expect("two reports");
    let a = reports.pop().expect("two reports");
    let cmp = compare(&a, &b, tol);
    Ok(CompareOutput { a, b, compare: cmp })
}

pub fn cmd_compare(args: &CompareArgs) -> i32 {
    let out = match compare_spaces(&args.space_a, &args.space_b, args.order, args.tol) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        for r in [&out.a, &out.b] {
            println!("space: {}", r.label);
            println!(
                "  n={} C={} H={} L={} |DR|^2={}",
                r.n, r.c, r.h, r.l, r.nabla_r2
            );
            println!("  a0_sphere = {}", r.a0_sphere.render());
            println!("  a1_sphere = {}", r.a1_sphere.render());
            println!("  a2_sphere = {}", r.a2_sphere.render());
            println!("  a2_ball_dirichlet = {}", r.a2_ball_dirichlet.render());
            println!("  a2_ball_neumann = {}", r.a2_ball_neumann.render());
            println!(
                "  distinguishers: sphere={} dirichlet={} neumann={}",
                r.d_sphere, r.d_dirichlet, r.d_neumann
            );
        }
        let c = &out.compare;
        println!("verdict: {}", c.verdict.as_str());
        println!(
            "deltas: C={} H={} L={} |DR|^2={} D_sph={} D_D={} D_N={}",
            c.delta_c,
            c.delta_h,
            c.delta_l,
            c.delta_nabla_r2,
            c.delta_d_sphere,
            c.delta_d_dirichlet,
            c.delta_d_neumann
        );
    }
    EXIT_OK
}
