use std::io::Write;

use serde::Serialize;

use tricenter_core::approx::{lambda_equilateral, ratio_band_survey, SurveySummary};
use tricenter_core::electro_center::{
    electrostatic_center, kimberling_search_value, solve_lambda, theorem1_check, IdentitySpreads,
    MIN_TOL,
};
use tricenter_core::general_p::{
    illuminating_center_check, lambda_curve, potential_arc, rp_center, thomson_residual, PExponent,
};
use tricenter_core::potential::{
    field_closed, potential_closed, potential_quadrature, CLOSED_FORM_BAND,
};
use tricenter_core::{Error, Point2, PointClass, QuadratureConfig, Result, SideLengths, Triangle, Trilinears};

use crate::args::Format;
use crate::output::{csv_line, num};

/// What a command produced: text for stdout and the exit status.
pub struct Report {
    pub body: String,
    pub code: u8,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, code: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct TriangleInfo {
    pub vertices: [[f64; 2]; 3],
    pub sides: [f64; 3],
    pub area: f64,
    pub diameter: f64,
}

impl TriangleInfo {
    pub fn new(tri: &Triangle) -> Self {
        let s = tri.side_lengths();
        TriangleInfo {
            vertices: tri.vertices().map(|p| [p.x, p.y]),
            sides: [s.a, s.b, s.c],
            area: tri.area(),
            diameter: tri.diameter(),
        }
    }
}

#[derive(Debug, Serialize)]
struct CenterReport {
    triangle: TriangleInfo,
    lambda: f64,
    u: f64,
    v: f64,
    w: f64,
    r_a: f64,
    r_b: f64,
    r_c: f64,
    center: Point2,
    trilinears: Trilinears,
    identities: IdentitySpreads,
    field_norm: f64,
    residual: f64,
    iterations: usize,
}

pub fn center(tri: &Triangle, tol: f64, format: Format) -> Result<Report> {
    let (c, sol) = electrostatic_center(tri, tol)?;
    let r = CenterReport {
        triangle: TriangleInfo::new(tri),
        lambda: sol.lambda,
        u: sol.u,
        v: sol.v,
        w: sol.w,
        r_a: sol.r_a,
        r_b: sol.r_b,
        r_c: sol.r_c,
        center: c,
        trilinears: tri.cartesian_to_trilinear(c),
        identities: theorem1_check(tri, c)?,
        field_norm: field_closed(tri, c)?.norm(),
        residual: sol.residual,
        iterations: sol.iterations,
    };
    Ok(Report::ok(match format {
        Format::Json => json(&r),
        Format::Csv => {
            let mut s = String::from(
                "lambda,u,v,w,r_a,r_b,r_c,x,y,tau_a,tau_b,tau_c,side_relation_spread,angle_relation_spread,field_norm,residual\n",
            );
            s += &csv_line(&[
                r.lambda,
                r.u,
                r.v,
                r.w,
                r.r_a,
                r.r_b,
                r.r_c,
                c.x,
                c.y,
                r.trilinears.tau_a,
                r.trilinears.tau_b,
                r.trilinears.tau_c,
                r.identities.side_relation_spread,
                r.identities.angle_relation_spread,
                r.field_norm,
                r.residual,
            ]);
            s
        }
    }))
}

#[derive(Debug, Serialize)]
struct RpReport {
    triangle: TriangleInfo,
    p: f64,
    center: Point2,
    residual_norm: f64,
    iterations: usize,
    illuminating_spread: f64,
    thomson: f64,
}

pub fn rp(tri: &Triangle, p: f64, tol: f64, format: Format) -> Result<Report> {
    let r = rp_center(tri, PExponent::new(p)?, tol)?;
    let rep = RpReport {
        triangle: TriangleInfo::new(tri),
        p,
        center: r.point,
        residual_norm: r.residual_norm,
        iterations: r.iterations,
        illuminating_spread: illuminating_center_check(tri, r.point)?,
        thomson: thomson_residual(tri, r.point),
    };
    Ok(Report::ok(match format {
        Format::Json => json(&rep),
        Format::Csv => {
            format!(
                "p,x,y,residual,iterations,illuminating_spread,thomson\n{},{},{},{},{},{},{}\n",
                num(p),
                num(r.point.x),
                num(r.point.y),
                num(r.residual_norm),
                r.iterations,
                num(rep.illuminating_spread),
                num(rep.thomson)
            )
        }
    }))
}

#[derive(Debug, Serialize)]
struct ArcRow {
    p: f64,
    x: f64,
    y: f64,
    residual: f64,
    iterations: usize,
    thomson: f64,
    status: &'static str,
}

#[derive(Debug, Serialize)]
struct ArcReport {
    triangle: TriangleInfo,
    points: Vec<ArcRow>,
}

pub const ARC_HEADER: &str = "p,x,y,residual,iterations,thomson,status";

pub fn arc(tri: &Triangle, p_min: f64, p_max: f64, steps: usize, tol: f64, format: Format) -> Result<Report> {
    if !(p_min.is_finite() && p_max.is_finite() && p_min <= p_max) {
        return Err(Error::InvalidInput("need finite --p-min <= --p-max".into()));
    }
    if steps == 0 || (steps == 1 && p_min != p_max) {
        return Err(Error::InvalidInput("--steps must be at least 2 for a range".into()));
    }
    let ps: Vec<f64> = (0..steps)
        .map(|k| {
            if steps == 1 {
                p_min
            } else {
                p_min + (p_max - p_min) * k as f64 / (steps - 1) as f64
            }
        })
        .collect();
    let rows: Vec<ArcRow> = potential_arc(tri, &ps, tol)?
        .into_iter()
        .map(|a| ArcRow {
            p: a.p,
            x: a.point.x,
            y: a.point.y,
            residual: a.residual_norm,
            iterations: a.iterations,
            thomson: thomson_residual(tri, a.point),
            status: if a.converged { "ok" } else { "no_convergence" },
        })
        .collect();
    let code = if rows.iter().all(|r| r.status != "ok") { 2 } else { 0 };
    let body = match format {
        Format::Json => json(&ArcReport {
            triangle: TriangleInfo::new(tri),
            points: rows,
        }),
        Format::Csv => {
            let mut s = format!("{ARC_HEADER}\n");
            for r in &rows {
                s += &format!(
                    "{},{},{},{},{},{},{}\n",
                    num(r.p),
                    num(r.x),
                    num(r.y),
                    num(r.residual),
                    r.iterations,
                    num(r.thomson),
                    r.status
                );
            }
            s
        }
    };
    Ok(Report { body, code })
}

#[derive(Debug, Serialize)]
struct CurveRow {
    lambda: f64,
    x: f64,
    y: f64,
    /// True on the row at the root of the lambda equation.
    root: bool,
}

#[derive(Debug, Serialize)]
struct CurveReport {
    triangle: TriangleInfo,
    lambda_root: f64,
    points: Vec<CurveRow>,
}

pub fn curve(tri: &Triangle, lo: f64, hi: f64, steps: usize, tol: f64, format: Format) -> Result<Report> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
        return Err(Error::InvalidInput("need 0 < --lambda-min <= --lambda-max".into()));
    }
    if steps < 2 {
        return Err(Error::InvalidInput("--steps must be at least 2".into()));
    }
    let root = solve_lambda(&tri.side_lengths(), tol)?.lambda;
    let mut lambdas: Vec<f64> = (0..steps)
        .map(|k| lo * (hi / lo).powf(k as f64 / (steps - 1) as f64))
        .collect();
    if !lambdas.contains(&root) {
        lambdas.push(root);
        lambdas.sort_by(f64::total_cmp);
    }
    let rows: Vec<CurveRow> = lambda_curve(tri, &lambdas)?
        .into_iter()
        .map(|c| CurveRow {
            lambda: c.lambda,
            x: c.point.x,
            y: c.point.y,
            root: c.lambda == root,
        })
        .collect();
    Ok(Report::ok(match format {
        Format::Json => json(&CurveReport {
            triangle: TriangleInfo::new(tri),
            lambda_root: root,
            points: rows,
        }),
        Format::Csv => {
            let mut s = String::from("lambda,x,y,root\n");
            for r in &rows {
                s += &format!("{},{},{},{}\n", num(r.lambda), num(r.x), num(r.y), r.root);
            }
            s
        }
    }))
}

pub const GRID_HEADER: &str = "x,y,V,Ex,Ey,inside";
pub const GRID_PADDING: f64 = 0.2;

/// Stream the grid as CSV. Points within the closed-form band of the
/// boundary get V by quadrature and empty field columns; a value that
/// cannot be computed is written as `NaN`.
pub fn grid(tri: &Triangle, n: usize, out: &mut dyn Write) -> Result<()> {
    if !(8..=2048).contains(&n) {
        return Err(Error::InvalidInput(format!("grid size {n} outside 8..=2048")));
    }
    let vs = tri.vertices();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for v in vs {
        x0 = x0.min(v.x);
        x1 = x1.max(v.x);
        y0 = y0.min(v.y);
        y1 = y1.max(v.y);
    }
    let (px, py) = (GRID_PADDING * (x1 - x0), GRID_PADDING * (y1 - y0));
    let (x0, x1, y0, y1) = (x0 - px, x1 + px, y0 - py, y1 + py);
    let band = CLOSED_FORM_BAND * tri.diameter();
    let cfg = QuadratureConfig::default();
    let io = |e: std::io::Error| Error::InvalidInput(format!("write failed: {e}"));

    writeln!(out, "{GRID_HEADER}").map_err(io)?;
    let step = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (n - 1) as f64;
    for j in 0..n {
        let y = step(y0, y1, j);
        for i in 0..n {
            let x = step(x0, x1, i);
            let p = Point2::new(x, y);
            let inside = u8::from(tri.classify_point(p) == PointClass::Interior);
            if tri.distance_to_boundary(p) <= band {
                let v = potential_quadrature(tri, p, &cfg).unwrap_or(f64::NAN);
                writeln!(out, "{},{},{},,,{inside}", num(x), num(y), num(v)).map_err(io)?;
            } else {
                let v = potential_closed(tri, p).unwrap_or(f64::NAN);
                let e = field_closed(tri, p).map(|e| (e.ex, e.ey)).unwrap_or((f64::NAN, f64::NAN));
                writeln!(
                    out,
                    "{},{},{},{},{},{inside}",
                    num(x),
                    num(y),
                    num(v),
                    num(e.0),
                    num(e.1)
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct SearchReport {
    sides: [f64; 3],
    d_a: f64,
    digits: usize,
    text: String,
}

pub const MAX_DIGITS: usize = 15;

pub fn search_value(sides: &SideLengths, digits: usize, tol: f64, format: Option<Format>) -> Result<Report> {
    if digits > MAX_DIGITS {
        return Err(Error::InvalidInput(format!(
            "--digits {digits} exceeds {MAX_DIGITS}, the limit of double precision"
        )));
    }
    // the solve must be at least as tight as the digits printed
    let tol = tol.min(10f64.powi(-(digits as i32))).max(MIN_TOL);
    let d = kimberling_search_value(sides, tol)?;
    let text = format!("{d:.digits$}");
    Ok(Report::ok(match format {
        None => format!("{text}\n"),
        Some(Format::Json) => json(&SearchReport {
            sides: [sides.a, sides.b, sides.c],
            d_a: d,
            digits,
            text,
        }),
        Some(Format::Csv) => format!("d_a\n{text}\n"),
    }))
}

pub fn survey(n: usize, seed: u64, format: Format) -> Result<Report> {
    let s: SurveySummary = ratio_band_survey(n, seed)?;
    Ok(Report::ok(match format {
        Format::Json => json(&s),
        Format::Csv => format!(
            "min,max,mean,count,excluded,seed\n{},{},{},{},{},{}\n",
            num(s.min),
            num(s.max),
            num(s.mean),
            s.count,
            s.excluded,
            s.seed
        ),
    }))
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "lowercase")]
enum Measure {
    /// `|value − expected| / |expected|`
    Relative,
    /// `|value − expected|`
    Absolute,
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    value: f64,
    expected: f64,
    measure: Measure,
    diff: f64,
    tol: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    passed: usize,
    failed: usize,
    checks: Vec<Check>,
}

const REFERENCE_LAMBDA: f64 = 4.010_297_202_743_007;
const REFERENCE_CENTER: (f64, f64) = (0.272_557_906_914_867_7, 0.704_148_189_723_077);
const REFERENCE_SEARCH_VALUE: f64 = 2.110_731_796_690_289;

fn check(name: &'static str, value: f64, expected: f64, measure: Measure, tol: f64) -> Check {
    let diff = match measure {
        Measure::Relative => (value - expected).abs() / expected.abs(),
        Measure::Absolute => (value - expected).abs(),
    };
    Check {
        name,
        value,
        expected,
        measure,
        diff,
        tol,
        pass: diff <= tol,
    }
}

/// Run the reference checks. `tol_override` replaces every tolerance.
pub fn verify(tol_override: Option<f64>, format: Option<Format>) -> Result<Report> {
    if let Some(t) = tol_override {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidInput(format!("verify tolerance {t} must be positive")));
        }
    }
    let tol = |default: f64| tol_override.unwrap_or(default);
    let reference =
        Triangle::new(Point2::new(-1.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.0, 2.0))?;
    let (c, sol) = electrostatic_center(&reference, 1e-14)?;
    let d_a = kimberling_search_value(&SideLengths::new(6.0, 9.0, 13.0)?, 1e-14)?;
    let eq = solve_lambda(&SideLengths::new(1.0, 1.0, 1.0)?, 1e-14)?.lambda;
    let p2 = rp_center(&reference, PExponent::new(2.0)?, 1e-12)?.point;
    let spreads = theorem1_check(&reference, c)?;
    use Measure::*;
    let checks = vec![
        check("lambda_max", sol.lambda, REFERENCE_LAMBDA, Relative, tol(1e-12)),
        check("center_x", c.x, REFERENCE_CENTER.0, Absolute, tol(1e-10)),
        check("center_y", c.y, REFERENCE_CENTER.1, Absolute, tol(1e-10)),
        check("search_value", d_a, REFERENCE_SEARCH_VALUE, Relative, tol(1e-10)),
        check("lambda_equilateral", eq, lambda_equilateral(), Relative, tol(1e-12)),
        check(
            "p2_center_offset",
            p2.dist(reference.centroid()) / reference.diameter(),
            0.0,
            Absolute,
            tol(1e-9),
        ),
        check("side_relation_spread", spreads.side_relation_spread, 0.0, Absolute, tol(1e-9)),
        check("angle_relation_spread", spreads.angle_relation_spread, 0.0, Absolute, tol(1e-9)),
    ];
    let failed = checks.iter().filter(|c| !c.pass).count();
    let report = VerifyReport {
        passed: checks.len() - failed,
        failed,
        checks,
    };
    let body = match format {
        Some(Format::Json) => json(&report),
        Some(Format::Csv) => {
            let mut s = String::from("name,value,expected,measure,diff,tol,pass\n");
            for c in &report.checks {
                let measure = serde_json::to_value(c.measure).unwrap();
                s += &format!(
                    "{},{},{},{},{},{},{}\n",
                    c.name,
                    num(c.value),
                    num(c.expected),
                    measure.as_str().unwrap(),
                    num(c.diff),
                    num(c.tol),
                    c.pass
                );
            }
            s
        }
        None => {
            let mut s = format!(
                "{:<24} {:>22} {:>22} {:>9} {:>9}  {}\n",
                "check", "value", "expected", "diff", "tol", "status"
            );
            for c in &report.checks {
                s += &format!(
                    "{:<24} {:>22} {:>22} {:>9.1e} {:>9.1e}  {}\n",
                    c.name,
                    num(c.value),
                    num(c.expected),
                    c.diff,
                    c.tol,
                    if c.pass { "PASS" } else { "FAIL" }
                );
            }
            s += &format!("{} passed, {} failed\n", report.passed, report.failed);
            s
        }
    };
    Ok(Report {
        body,
        code: if failed == 0 { 0 } else { 1 },
    })
}
