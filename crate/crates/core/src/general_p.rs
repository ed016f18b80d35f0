//! Extreme points of the Riesz potentials `V_p(P) = ∬_T |PQ|^p dλ(Q)`.
//!
//! In polar coordinates about P, `∇V_p = −p ∫ K_p(R(φ)) e^{iφ} dφ` with
//! `K_p(R) = (R^{p+1} − 1)/(p + 1)`. The constant part integrates to zero
//! over a full turn, so the stationarity condition is `∫ R^{p+1} e^{iφ} = 0`,
//! and the `K_p` form stays meaningful at `p = −1` where it becomes `log R`.
//! The residual returned here is `∫ K_p(R) e^{iφ} dφ`; at `p = −1` it is
//! `∇V = −E`, the negative of [`field_closed`](crate::potential::field_closed).
//!
//! Along one side, `R = d / sin ψ` where `ψ` is the angle between the ray
//! and the side at the hit point, so each side is a smooth integral over
//! `ψ ∈ (α₁, π − α₂)` with `α₁`, `α₂` the base angles of the triangle
//! `P q₁ q₂`. All integrals are done in a frame with P at the origin and
//! unit diameter.

use std::f64::consts::PI;

use serde::Serialize;

use crate::electro_center::{point_from_uvw, uvw};
use crate::error::{Error, Result};
use crate::geometry::{angle_between, Point2, PointClass, Triangle};
use crate::potential::FieldVector;
use crate::quadrature::{composite_kronrod, integrate_vec, QuadOptions};

/// Points closer than this fraction of the diameter to the boundary are
/// rejected by the residual evaluators.
pub const INTERIOR_BAND: f64 = 1e-9;

/// Newton iterates keep at least this fraction of the diameter from the
/// boundary.
pub const NEWTON_MARGIN: f64 = 1e-6;

pub const MAX_NEWTON_ITERATIONS: usize = 200;

const FD_STEP: f64 = 1e-6;
const MAX_HALVINGS: usize = 60;
const SIDE_QUAD: QuadOptions = QuadOptions {
    abs_tol: 1e-13,
    rel_tol: 1e-13,
    max_depth: 30,
};

/// The Riesz exponent. Every finite value is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PExponent {
    p: f64,
}

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::InvalidInput(format!("exponent {p} is not finite")));
        }
        Ok(PExponent { p })
    }

    pub fn value(&self) -> f64 {
        self.p
    }

    /// `(R^{p+1} − 1)/(p + 1)`, which is `log R` at `p = −1`. Away from
    /// `p = −1` the constant is dropped: it integrates to zero against
    /// `e^{iφ}` but would swamp `R^{p+1}` and the quadrature error target.
    fn kernel(&self, r: f64) -> f64 {
        let e = self.p + 1.0;
        let lr = r.ln();
        if e == 0.0 {
            lr
        } else if e.abs() < 1.0 {
            (e * lr).exp_m1() / e
        } else {
            (e * lr).exp() / e
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RpSolveReport {
    pub point: Point2,
    /// Scale-free residual, see [`normalized_residual`].
    pub residual_norm: f64,
    pub iterations: usize,
    pub p: f64,
}

/// `∫ K_p e^{iφ}` and `∫ R^{p+1}` in the unit-diameter frame about P.
#[derive(Debug, Clone, Copy)]
struct Moments {
    k: Point2,
    mass: f64,
}

impl Moments {
    fn normalized(&self) -> f64 {
        self.k.norm() / self.mass
    }
}

fn check_interior(tri: &Triangle, pt: Point2, band: f64) -> Result<()> {
    if !pt.is_finite() || tri.classify_point(pt) != PointClass::Interior {
        return Err(Error::not_interior(pt));
    }
    if tri.distance_to_boundary(pt) <= band * tri.diameter() {
        return Err(Error::TooCloseToBoundary { band });
    }
    Ok(())
}

/// Moments about the origin of a triangle already in the unit frame.
fn moments_at_origin(vertices: [Point2; 3], p: PExponent) -> Result<Moments> {
    let mut k = Point2::new(0.0, 0.0);
    let mut mass = 0.0;
    for i in 0..3 {
        let (v1, v2) = (vertices[i], vertices[(i + 1) % 3]);
        let edge = v2 - v1;
        let d = v1.cross(v2) / edge.norm();
        let alpha1 = angle_between(-v1, edge);
        let alpha2 = angle_between(-v2, -edge);
        let offset = v1.y.atan2(v1.x) - alpha1;
        let r = integrate_vec(
            |psi| {
                let radius = d / psi.sin();
                let kern = p.kernel(radius);
                let (s, c) = (psi + offset).sin_cos();
                [kern * c, kern * s, ((p.p + 1.0) * radius.ln()).exp()]
            },
            alpha1,
            PI - alpha2,
            &SIDE_QUAD,
        )?;
        k = k + Point2::new(r.value[0], r.value[1]);
        mass += r.value[2];
    }
    Ok(Moments { k, mass })
}

fn moments(tri: &Triangle, pt: Point2, p: PExponent) -> Result<Moments> {
    let diam = tri.diameter();
    let verts = tri.vertices().map(|q| (q - pt) * (1.0 / diam));
    moments_at_origin(verts, p)
}

/// `∫₀^{2π} K_p(R(φ)) e^{iφ} dφ` about `pt`, in the triangle's own units.
///
/// Zero exactly at stationary points of `V_p`. At `p = −1` this equals
/// `−E(pt)`.
pub fn stationarity_residual(tri: &Triangle, pt: Point2, p: PExponent) -> Result<FieldVector> {
    check_interior(tri, pt, INTERIOR_BAND)?;
    let m = moments(tri, pt, p)?;
    let scale = tri.diameter().powf(p.p + 1.0);
    Ok(FieldVector::new(scale * m.k.x, scale * m.k.y))
}

/// `|∫ K_p e^{iφ}| / ∫ R^{p+1}` with lengths measured in diameters; the
/// same number for every similar copy of the configuration.
pub fn normalized_residual(tri: &Triangle, pt: Point2, p: PExponent) -> Result<f64> {
    check_interior(tri, pt, INTERIOR_BAND)?;
    Ok(moments(tri, pt, p)?.normalized())
}

/// The stationary point of `V_p` by damped Newton from the centroid.
pub fn rp_center(tri: &Triangle, p: PExponent, tol: f64) -> Result<RpSolveReport> {
    rp_center_from(tri, p, tol, tri.centroid())
}

/// As [`rp_center`], starting from `start` (moved to the centroid if it is
/// not safely interior).
pub fn rp_center_from(tri: &Triangle, p: PExponent, tol: f64, start: Point2) -> Result<RpSolveReport> {
    if !(tol >= 1e-12) {
        return Err(Error::InvalidInput(format!("tolerance {tol} below 1e-12")));
    }
    let diam = tri.diameter();
    let g = tri.centroid();
    let unit = tri.map(|q| (q - g) * (1.0 / diam))?;
    let verts = unit.vertices();
    let to_unit = |q: Point2| (q - g) * (1.0 / diam);
    let from_unit = |q: Point2| g + q * diam;

    let safe = |x: Point2| {
        unit.classify_point(x) == PointClass::Interior && unit.distance_to_boundary(x) > NEWTON_MARGIN
    };
    let eval = |x: Point2| moments_at_origin(verts.map(|q| q - x), p);

    let mut x = to_unit(start);
    if !safe(x) {
        x = Point2::new(0.0, 0.0);
    }
    let mut m = eval(x)?;
    let mut res = m.normalized();
    let mut iterations = 0;
    while res >= tol {
        if iterations == MAX_NEWTON_ITERATIONS {
            return Err(no_convergence(iterations, res, from_unit(x)));
        }
        iterations += 1;

        let h = FD_STEP.min(0.5 * unit.distance_to_boundary(x));
        let mut cols = [Point2::new(0.0, 0.0); 2];
        for (j, e) in [Point2::new(h, 0.0), Point2::new(0.0, h)].into_iter().enumerate() {
            let fp = eval(x + e)?.k;
            let fm = eval(x - e)?.k;
            cols[j] = (fp - fm) * (0.5 / h);
        }
        let det = cols[0].cross(cols[1]);
        if det == 0.0 || !det.is_finite() {
            return Err(no_convergence(iterations, res, from_unit(x)));
        }
        // solve J δ = −F by Cramer's rule
        let f = m.k;
        let step = Point2::new(-f.cross(cols[1]) / det, -cols[0].cross(f) / det);

        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let cand = x + step * t;
            if safe(cand) {
                if let Ok(mc) = eval(cand) {
                    let rc = mc.normalized();
                    if rc < res {
                        accepted = Some((cand, mc, rc));
                        break;
                    }
                }
            }
            t *= 0.5;
        }
        match accepted {
            Some((cand, mc, rc)) => {
                x = cand;
                m = mc;
                res = rc;
            }
            None => return Err(no_convergence(iterations, res, from_unit(x))),
        }
    }
    Ok(RpSolveReport {
        point: from_unit(x),
        residual_norm: res,
        iterations,
        p: p.p,
    })
}

fn no_convergence(iterations: usize, residual: f64, best: Point2) -> Error {
    Error::NoConvergence {
        iterations,
        residual,
        best,
    }
}

/// Spread (max − min) of `∠BPC/area(BPC)`, `∠CPA/area(CPA)`,
/// `∠APB/area(APB)`. Zero at the `p = −2` center.
pub fn illuminating_center_check(tri: &Triangle, pt: Point2) -> Result<f64> {
    check_interior(tri, pt, INTERIOR_BAND)?;
    let [a, b, c] = tri.vertices().map(|q| q - pt);
    let ratio = |u: Point2, v: Point2| angle_between(u, v) / (0.5 * u.cross(v).abs());
    let r = [ratio(b, c), ratio(c, a), ratio(a, b)];
    let max = r.iter().fold(f64::MIN, |m, v| m.max(*v));
    let min = r.iter().fold(f64::MAX, |m, v| m.min(*v));
    Ok(max - min)
}

/// Norm of the first moment `∬_S (Q − P) dλ(Q)` of the region S bounded by
/// the image of the boundary under inversion in the unit circle about P,
/// i.e. `(1/3) ∫ R(φ)^{−3} e^{iφ} dφ`.
///
/// Integrated over `φ` directly, with `R` found by casting rays against all
/// three sides and `quad_n` fixed Kronrod panels between consecutive vertex
/// directions. Lengths are in the triangle's own units.
pub fn inversion_centroid_check(tri: &Triangle, pt: Point2, quad_n: usize) -> Result<f64> {
    check_interior(tri, pt, INTERIOR_BAND)?;
    if quad_n == 0 {
        return Err(Error::InvalidInput("quad_n must be positive".into()));
    }
    let verts = tri.vertices().map(|q| q - pt);
    let mut dirs = verts.map(|v| v.y.atan2(v.x));
    dirs.sort_by(f64::total_cmp);
    let ray_length = |phi: f64| {
        let d = Point2::new(phi.cos(), phi.sin());
        let mut best = f64::INFINITY;
        for i in 0..3 {
            let (q1, q2) = (verts[i], verts[(i + 1) % 3]);
            let edge = q2 - q1;
            let denom = d.cross(edge);
            if denom.abs() > 0.0 {
                let t = q1.cross(edge) / denom;
                if t > 0.0 {
                    best = best.min(t);
                }
            }
        }
        best
    };
    let mut total = [0.0; 2];
    for i in 0..3 {
        let lo = dirs[i];
        let hi = if i == 2 { dirs[0] + 2.0 * PI } else { dirs[i + 1] };
        let piece = composite_kronrod(
            |phi| {
                let w = ray_length(phi).powi(-3) / 3.0;
                [w * phi.cos(), w * phi.sin()]
            },
            lo,
            hi,
            quad_n,
        );
        total[0] += piece[0];
        total[1] += piece[1];
    }
    Ok(total[0].hypot(total[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcPoint {
    pub p: f64,
    pub point: Point2,
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// The potential arc: `rp_center` at every `p` in `p_values`, plus `−1`
/// and `2` when they fall inside the range and are missing.
///
/// The chain starts at the `p` closest to 2, whose center is near the
/// centroid, and walks outward in both directions, each solve starting at
/// its neighbour's result. A failed solve is recorded with its best iterate
/// and does not stop the walk.
pub fn potential_arc(tri: &Triangle, p_values: &[f64], tol: f64) -> Result<Vec<ArcPoint>> {
    if p_values.is_empty() {
        return Ok(Vec::new());
    }
    if p_values.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidInput("exponents must be finite".into()));
    }
    if p_values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("exponents must be sorted".into()));
    }
    let mut ps = p_values.to_vec();
    let (lo, hi) = (ps[0], ps[ps.len() - 1]);
    for special in [-1.0, 2.0] {
        if lo <= special && special <= hi && !ps.contains(&special) {
            ps.push(special);
        }
    }
    ps.sort_by(f64::total_cmp);
    ps.dedup();

    let seed = ps
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - 2.0).abs().total_cmp(&(b.1 - 2.0).abs()))
        .map(|(i, _)| i)
        .unwrap();
    let mut out: Vec<Option<ArcPoint>> = vec![None; ps.len()];
    let order = (seed..ps.len()).chain((0..seed).rev());
    for i in order {
        let start = if i == seed {
            tri.centroid()
        } else if i > seed {
            out[i - 1].unwrap().point
        } else {
            out[i + 1].unwrap().point
        };
        out[i] = Some(arc_point(tri, ps[i], tol, start)?);
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

fn arc_point(tri: &Triangle, p: f64, tol: f64, start: Point2) -> Result<ArcPoint> {
    match rp_center_from(tri, PExponent::new(p)?, tol, start) {
        Ok(r) => Ok(ArcPoint {
            p,
            point: r.point,
            residual_norm: r.residual_norm,
            iterations: r.iterations,
            converged: true,
        }),
        Err(Error::NoConvergence {
            iterations,
            residual,
            best,
        }) => Ok(ArcPoint {
            p,
            point: best,
            residual_norm: residual,
            iterations,
            converged: false,
        }),
        Err(e) => Err(e),
    }
}

/// Numerical trend of the arc as `p → ±∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcEndpoint {
    /// `+1` or `−1`.
    pub direction: f64,
    /// Centers at `|p| = 10, 20, 30`.
    pub samples: [Point2; 3],
    /// Quadratic extrapolation in `1/p` to `1/p = 0`.
    pub extrapolated: Point2,
}

/// Both arc endpoints, probed by continuation in unit steps out to `|p| = 30`.
pub fn arc_endpoints(tri: &Triangle, tol: f64) -> Result<[ArcEndpoint; 2]> {
    let ps: Vec<f64> = (-30..=30).map(f64::from).collect();
    let arc = potential_arc(tri, &ps, tol)?;
    let at = |p: f64| arc.iter().find(|a| a.p == p).unwrap().point;
    let endpoint = |sign: f64| {
        let samples = [at(10.0 * sign), at(20.0 * sign), at(30.0 * sign)];
        // Lagrange weights at h = 0 for nodes h = 1/10, 1/20, 1/30
        let extrapolated = samples[0] * 0.5 - samples[1] * 4.0 + samples[2] * 4.5;
        ArcEndpoint {
            direction: sign,
            samples,
            extrapolated,
        }
    };
    Ok([endpoint(-1.0), endpoint(1.0)])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaCurvePoint {
    pub lambda: f64,
    pub point: Point2,
}

/// The point built from `u, v, w` at each given `λ`, with no root solve.
pub fn lambda_curve(tri: &Triangle, lambda_values: &[f64]) -> Result<Vec<LambdaCurvePoint>> {
    let sides = tri.side_lengths();
    lambda_values
        .iter()
        .map(|&lambda| {
            if !(lambda > 0.0 && lambda.is_finite()) {
                return Err(Error::InvalidInput(format!("lambda {lambda} must be positive")));
            }
            let q = uvw(&sides, lambda)?;
            Ok(LambdaCurvePoint {
                lambda,
                point: point_from_uvw(tri, &q),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalCenter {
    Incenter,
    Centroid,
    Circumcenter,
    Orthocenter,
}

impl ClassicalCenter {
    pub const ALL: [ClassicalCenter; 4] = [
        ClassicalCenter::Incenter,
        ClassicalCenter::Centroid,
        ClassicalCenter::Circumcenter,
        ClassicalCenter::Orthocenter,
    ];

    pub fn point(&self, tri: &Triangle) -> Point2 {
        match self {
            ClassicalCenter::Incenter => tri.incenter(),
            ClassicalCenter::Centroid => tri.centroid(),
            ClassicalCenter::Circumcenter => tri.circumcenter(),
            ClassicalCenter::Orthocenter => tri.orthocenter(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassicalCenter::Incenter => "incenter",
            ClassicalCenter::Centroid => "centroid",
            ClassicalCenter::Circumcenter => "circumcenter",
            ClassicalCenter::Orthocenter => "orthocenter",
        }
    }
}

/// A limit of the `λ` curve estimated from two far-out samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveLimit {
    pub lambdas: [f64; 2],
    pub points: [Point2; 2],
    /// Distance between the two samples, in diameters.
    pub cauchy_gap: f64,
    pub nearest: ClassicalCenter,
    /// Distance from the second sample to `nearest`, in diameters.
    pub nearest_distance: f64,
}

/// Evaluate the curve at two `λ` values and report which classical center
/// the second one is closest to.
pub fn lambda_curve_limit(tri: &Triangle, lambda_1: f64, lambda_2: f64) -> Result<CurveLimit> {
    let pts = lambda_curve(tri, &[lambda_1, lambda_2])?;
    let diam = tri.diameter();
    let last = pts[1].point;
    let (nearest, dist) = ClassicalCenter::ALL
        .iter()
        .map(|c| (*c, c.point(tri).dist(last)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    Ok(CurveLimit {
        lambdas: [lambda_1, lambda_2],
        points: [pts[0].point, last],
        cauchy_gap: pts[0].point.dist(last) / diam,
        nearest,
        nearest_distance: dist / diam,
    })
}

/// Left-hand side of the Thomson cubic
/// `bc τ_a(τ_b² − τ_c²) + ca τ_b(τ_c² − τ_a²) + ab τ_c(τ_a² − τ_b²)`
/// with exact trilinears, divided by `abc·ρ²` (ρ the inradius) so that it
/// does not change under scaling.
pub fn thomson_residual(tri: &Triangle, pt: Point2) -> f64 {
    let s = tri.side_lengths();
    let (ta, tb, tc) = tri.signed_distances(pt);
    let lhs = s.b * s.c * ta * (tb * tb - tc * tc)
        + s.c * s.a * tb * (tc * tc - ta * ta)
        + s.a * s.b * tc * (ta * ta - tb * tb);
    let rho = s.inradius();
    lhs / (s.a * s.b * s.c * rho * rho)
}
