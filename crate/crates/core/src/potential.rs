//! The Coulomb potential `V(P) = ∬_T dλ(Q)/|PQ|` of a uniformly charged
//! triangle and its field `E = −∇V`.
//!
//! Both closed forms come from splitting T into the three triangles with
//! apex P. In polar coordinates about P the radial integral of `r · (1/r)`
//! is just the ray length `R(φ)`, and along one side `R = d / sin ψ`, which
//! integrates to `d · log((r₁+r₂+L)/(r₁+r₂−L))` for a side of length `L`
//! whose endpoints lie at distances `r₁`, `r₂` from P. The field is the
//! boundary integral `Σ n_out ∫_side ds/|PQ|`, which uses the same log term.
//!
//! [`potential_quadrature`] evaluates the same polar integral numerically
//! and shares no formula with the closed forms.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point2, PointClass, Triangle};
use crate::quadrature::{integrate, QuadOptions};

/// Closed forms refuse points closer than this fraction of the diameter to
/// the boundary.
pub const CLOSED_FORM_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct FieldVector {
    pub ex: f64,
    pub ey: f64,
}

impl FieldVector {
    pub fn new(ex: f64, ey: f64) -> Self {
        FieldVector { ex, ey }
    }

    pub fn norm(&self) -> f64 {
        self.ex.hypot(self.ey)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub target_rel_tol: f64,
    pub max_subdivisions: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            target_rel_tol: 1e-10,
            max_subdivisions: 20,
        }
    }
}

impl QuadratureConfig {
    pub fn new(target_rel_tol: f64, max_subdivisions: u32) -> Result<Self> {
        if !(target_rel_tol > 0.0 && target_rel_tol <= 1e-2) {
            return Err(Error::InvalidInput(format!(
                "quadrature tolerance {target_rel_tol} outside (0, 1e-2]"
            )));
        }
        Ok(QuadratureConfig {
            target_rel_tol,
            max_subdivisions,
        })
    }

    fn options(&self) -> QuadOptions {
        QuadOptions {
            abs_tol: 0.0,
            rel_tol: self.target_rel_tol,
            max_depth: self.max_subdivisions,
        }
    }
}

/// `log((r₁+r₂+L)/(r₁+r₂−L))` for the segment `q1 q2` seen from `p`.
///
/// When P sees the segment under an obtuse angle, `r₁+r₂−L` is recovered
/// from `2·cross² / ((r₁r₂ − v₁·v₂)(r₁+r₂+L))` instead of by subtraction.
pub(crate) fn segment_log_term(p: Point2, q1: Point2, q2: Point2) -> f64 {
    let v1 = q1 - p;
    let v2 = q2 - p;
    let r1 = v1.norm();
    let r2 = v2.norm();
    let len = q1.dist(q2);
    let dot = v1.dot(v2);
    if dot >= 0.0 {
        2.0 * (len / (r1 + r2)).atanh()
    } else {
        let cross = v1.cross(v2);
        let sum = r1 + r2 + len;
        (sum * sum * (r1 * r2 - dot) / (2.0 * cross * cross)).ln()
    }
}

fn check_band(tri: &Triangle, p: Point2) -> Result<()> {
    let band = CLOSED_FORM_BAND * tri.diameter();
    if tri.distance_to_boundary(p) < band {
        return Err(Error::TooCloseToBoundary { band });
    }
    Ok(())
}

/// Closed-form potential at any point outside the boundary band.
pub fn potential_closed(tri: &Triangle, p: Point2) -> Result<f64> {
    check_band(tri, p)?;
    Ok(tri
        .edges()
        .iter()
        .map(|&(q1, q2)| {
            let signed_d = (q1 - p).cross(q2 - p) / q1.dist(q2);
            signed_d * segment_log_term(p, q1, q2)
        })
        .sum())
}

/// Closed-form field `E = −∇V` at any point outside the boundary band.
///
/// Inside the triangle this is the principal-value field; outside it is the
/// ordinary absolutely convergent one.
pub fn field_closed(tri: &Triangle, p: Point2) -> Result<FieldVector> {
    check_band(tri, p)?;
    let mut e = FieldVector::default();
    for &(q1, q2) in tri.edges().iter() {
        let dir = q2 - q1;
        let len = dir.norm();
        // outward normal of a counterclockwise edge
        let (nx, ny) = (dir.y / len, -dir.x / len);
        let w = segment_log_term(p, q1, q2);
        e.ex += nx * w;
        e.ey += ny * w;
    }
    Ok(e)
}

/// `∫ R(φ) dφ` over `[phi0, phi1]`: the potential of the region swept by the
/// rays `φ ↦ R(φ)` from the pole, since the `1/r` kernel cancels the polar
/// Jacobian.
pub fn polar_radial_integral<F>(
    radius: F,
    phi0: f64,
    phi1: f64,
    cfg: &QuadratureConfig,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (lo, hi, sign) = if phi0 <= phi1 {
        (phi0, phi1, 1.0)
    } else {
        (phi1, phi0, -1.0)
    };
    Ok(sign * integrate(radius, lo, hi, &cfg.options())?.value[0])
}

/// Potential by apex-split polar quadrature, valid on the whole plane.
///
/// Each edge `q1 q2` contributes the (signed) triangle `P q1 q2`; the ray
/// length to the edge line is found by intersecting the ray with it.
pub fn potential_quadrature(tri: &Triangle, p: Point2, cfg: &QuadratureConfig) -> Result<f64> {
    let diam = tri.diameter();
    let mut total = 0.0;
    for &(q1, q2) in tri.edges().iter() {
        let v1 = q1 - p;
        let v2 = q2 - p;
        let cross = v1.cross(v2);
        if cross.abs() <= 1e-15 * diam * diam {
            continue;
        }
        let edge = q2 - q1;
        let numer = v1.cross(edge);
        let phi0 = v1.y.atan2(v1.x);
        let sweep = cross.atan2(v1.dot(v2));
        let ray = |phi: f64| {
            let (s, c) = phi.sin_cos();
            numer / Point2::new(c, s).cross(edge)
        };
        total += polar_radial_integral(ray, phi0, phi0 + sweep, cfg)?;
    }
    Ok(total)
}

/// How [`brute_force_max`] evaluates the potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluator {
    Closed,
    Quadrature(QuadratureConfig),
}

impl Evaluator {
    pub fn eval(&self, tri: &Triangle, p: Point2) -> Result<f64> {
        match self {
            Evaluator::Closed => potential_closed(tri, p),
            Evaluator::Quadrature(cfg) => potential_quadrature(tri, p, cfg),
        }
    }
}

const REFINE_HALF_WIDTH: i32 = 4;
const REFINE_SHRINK: f64 = 4.0;

/// Grid-search maximizer of V with the closed-form evaluator.
pub fn brute_force_max(tri: &Triangle, grid_n: usize, refine_iters: usize) -> Result<Point2> {
    brute_force_max_with(tri, grid_n, refine_iters, Evaluator::Closed)
}

/// Grid-search maximizer of V.
///
/// Starts from the barycentric lattice `(i, j, k)/n` with `i, j, k ≥ 1`,
/// then repeatedly lays a `9 × 9` grid (in barycentric `(w_b, w_c)`) around
/// the incumbent, shrinking the spacing by 4 each round. Ties keep the
/// earliest grid point, so the result is deterministic.
pub fn brute_force_max_with(
    tri: &Triangle,
    grid_n: usize,
    refine_iters: usize,
    evaluator: Evaluator,
) -> Result<Point2> {
    if grid_n < 16 {
        return Err(Error::InvalidInput(format!(
            "grid_n must be at least 16, got {grid_n}"
        )));
    }
    let n = grid_n as f64;
    let mut best: Option<(f64, f64, f64)> = None;
    let consider = |wb: f64, wc: f64, best: &mut Option<(f64, f64, f64)>| {
        let wa = 1.0 - wb - wc;
        if wa <= 0.0 || wb <= 0.0 || wc <= 0.0 {
            return;
        }
        let p = tri.from_barycentric(wa, wb, wc);
        if tri.classify_point(p) != PointClass::Interior {
            return;
        }
        if let Ok(v) = evaluator.eval(tri, p) {
            if best.is_none_or(|(bv, _, _)| v > bv) {
                *best = Some((v, wb, wc));
            }
        }
    };

    for j in 1..grid_n {
        for k in 1..grid_n - j {
            consider(j as f64 / n, k as f64 / n, &mut best);
        }
    }

    let mut step = 1.0 / (n * REFINE_SHRINK);
    for _ in 0..refine_iters {
        let (_, cb, cc) = best.expect("lattice has interior points");
        for dj in -REFINE_HALF_WIDTH..=REFINE_HALF_WIDTH {
            for dk in -REFINE_HALF_WIDTH..=REFINE_HALF_WIDTH {
                consider(cb + dj as f64 * step, cc + dk as f64 * step, &mut best);
            }
        }
        step /= REFINE_SHRINK;
    }

    let (_, wb, wc) = best.expect("lattice has interior points");
    Ok(tri.from_barycentric(1.0 - wb - wc, wb, wc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn reference() -> Triangle {
        Triangle::new(
            Point2::new(-1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        )
        .unwrap()
    }

    fn tight() -> QuadratureConfig {
        QuadratureConfig::new(1e-13, 30).unwrap()
    }

    // Frozen with a 30-digit Duffy-transformed 2D quadrature of 1/|PQ|
    // over the three apex triangles (mpmath), independent of the log form.
    const V_EQUILATERAL_CENTROID: f64 = 2.281_037_988_902_839;
    const V_REFERENCE_AT_03_05: f64 = 5.878_250_402_600_95;

    #[test]
    fn equilateral_centroid_matches_oracle() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        let v = potential_closed(&t, t.centroid()).unwrap();
        assert_relative_eq!(v, V_EQUILATERAL_CENTROID, max_relative = 1e-14);
        let q = potential_quadrature(&t, t.centroid(), &tight()).unwrap();
        assert_relative_eq!(q, V_EQUILATERAL_CENTROID, max_relative = 1e-12);
    }

    #[test]
    fn scalene_point_matches_oracle() {
        let p = Point2::new(0.3, 0.5);
        let v = potential_closed(&reference(), p).unwrap();
        assert_relative_eq!(v, V_REFERENCE_AT_03_05, max_relative = 1e-14);
    }

    #[test]
    fn far_field_monopole() {
        let t = reference();
        let g = t.centroid();
        for d in [1e2, 1e3, 1e4] {
            let p = g + Point2::new(d, 0.3 * d);
            let v = potential_closed(&t, p).unwrap();
            let r = t.distance_to_boundary(p);
            let rel = (v * r / t.area() - 1.0).abs();
            assert!(rel < 5.0 / d, "d={d}: rel={rel}");
        }
    }

    #[test]
    fn mirror_symmetry_about_side_bisector() {
        // isosceles with apex on the y axis
        let t = Triangle::new(
            Point2::new(0.0, 2.0),
            Point2::new(-1.0, 0.0),
            Point2::new(1.0, 0.0),
        )
        .unwrap();
        for (x, y) in [(0.3, 0.5), (0.7, -2.0), (2.5, 1.0)] {
            let l = potential_closed(&t, Point2::new(x, y)).unwrap();
            let r = potential_closed(&t, Point2::new(-x, y)).unwrap();
            assert_relative_eq!(l, r, max_relative = 1e-14);
        }
    }

    #[test]
    fn closed_form_rejects_boundary_band() {
        let t = reference();
        let mid = (t.a() + t.b()) * 0.5;
        assert!(matches!(
            potential_closed(&t, mid + Point2::new(0.0, 1e-12)),
            Err(Error::TooCloseToBoundary { .. })
        ));
        assert!(matches!(
            field_closed(&t, t.a()),
            Err(Error::TooCloseToBoundary { .. })
        ));
    }

    #[test]
    fn polar_kernel_on_disk() {
        let cfg = tight();
        for radius in [0.5, 1.0, 7.0] {
            let v = polar_radial_integral(|_| radius, 0.0, 2.0 * PI, &cfg).unwrap();
            assert_relative_eq!(v, 2.0 * PI * radius, max_relative = 1e-14);
        }
    }

    #[test]
    fn quadrature_finite_at_vertices_and_sides() {
        let t = reference();
        let cfg = QuadratureConfig::default();
        for p in [t.a(), t.b(), t.c(), (t.b() + t.c()) * 0.5] {
            let v = potential_quadrature(&t, p, &cfg).unwrap();
            assert!(v.is_finite() && v > 0.0);
        }
        // continuity at a side midpoint
        let mid = (t.a() + t.b()) * 0.5;
        let on = potential_quadrature(&t, mid, &tight()).unwrap();
        let near = potential_closed(&t, mid + Point2::new(0.0, 1e-7)).unwrap();
        assert!((on - near).abs() < 1e-5);
    }

    #[test]
    fn quadrature_matches_closed_form_outside() {
        let t = reference();
        for p in [Point2::new(3.0, 3.0), Point2::new(-2.0, -0.5), Point2::new(5.0, 0.0)] {
            let c = potential_closed(&t, p).unwrap();
            let q = potential_quadrature(&t, p, &tight()).unwrap();
            assert_relative_eq!(c, q, max_relative = 1e-11);
        }
    }

    #[test]
    fn field_vanishes_at_equilateral_centroid() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        assert!(field_closed(&t, t.centroid()).unwrap().norm() < 1e-14);
    }

    #[test]
    fn field_is_minus_gradient() {
        let t = reference();
        let h = 1e-6 * t.diameter();
        for p in [Point2::new(0.3, 0.5), Point2::new(-0.5, 0.2), Point2::new(1.5, 0.2), Point2::new(3.0, -1.0)] {
            let e = field_closed(&t, p).unwrap();
            let dx = (potential_closed(&t, p + Point2::new(h, 0.0)).unwrap()
                - potential_closed(&t, p - Point2::new(h, 0.0)).unwrap())
                / (2.0 * h);
            let dy = (potential_closed(&t, p + Point2::new(0.0, h)).unwrap()
                - potential_closed(&t, p - Point2::new(0.0, h)).unwrap())
                / (2.0 * h);
            let scale = e.norm().max(1e-3);
            assert!((e.ex + dx).abs() < 1e-5 * scale, "{p:?}");
            assert!((e.ey + dy).abs() < 1e-5 * scale, "{p:?}");
        }
    }

    #[test]
    fn brute_force_equilateral() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        let m = brute_force_max(&t, 32, 0).unwrap();
        assert!(m.dist(t.centroid()) < 1.0 / 32.0);
    }

    #[test]
    fn brute_force_reference_triangle() {
        let t = reference();
        let m = brute_force_max(&t, 64, 6).unwrap();
        assert_eq!(t.classify_point(m), PointClass::Interior);
        assert!(m.dist(Point2::new(0.272_557_906_914_867_7, 0.704_148_189_723_077)) < 1e-4);
        assert!(brute_force_max(&t, 8, 0).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(0.0, 10).is_err());
        assert!(QuadratureConfig::new(0.1, 10).is_err());
        assert!(QuadratureConfig::new(1e-2, 10).is_ok());
    }
}
