//! Location of the electrostatic center through the scalar parameter `λ`.
//!
//! At the stationary point P the three quantities
//! `−(s/a)·log((r_B+r_C−a)/(r_B+r_C+a))` (and cyclic) share a common value
//! `λ`. Inverting gives `r_B + r_C = u = a·coth(aλ/2s)` and its cyclic
//! versions, and the area identity `Σ area(PBC) = area(ABC)` becomes a
//! single equation in `λ` whose left side is strictly decreasing. The
//! root is bracketed and refined, then P is recovered from its vertex
//! distances.

use serde::Serialize;

use crate::approx::initial_guess;
use crate::error::{Error, Result};
use crate::geometry::{Point2, PointClass, SideLengths, Triangle, Trilinears};
use crate::potential::segment_log_term;

/// Smallest solver tolerance accepted by [`solve_lambda`].
pub const MIN_TOL: f64 = 1e-14;

const MAX_DOUBLINGS: usize = 60;
const MAX_ITERATIONS: usize = 400;

/// `coth x` for `x > 0`, accurate at both ends of the range.
pub fn coth(x: f64) -> f64 {
    if x < 1e-4 {
        let x2 = x * x;
        1.0 / x + x / 3.0 - x * x2 / 45.0
    } else if x > 20.0 {
        let q = (-2.0 * x).exp();
        1.0 + 2.0 * q * (1.0 + q)
    } else {
        1.0 / x.tanh()
    }
}

/// `y·coth(y) − 1`, without cancellation for small `y`.
fn ycothy_m1(y: f64) -> f64 {
    if y < 0.1 {
        let y2 = y * y;
        // y²/3 − y⁴/45 + 2y⁶/945 − y⁸/4725 + 2y¹⁰/93555
        y2 * (1.0 / 3.0
            + y2 * (-1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * 2.0 / 93555.0))))
    } else {
        y * coth(y) - 1.0
    }
}

/// `csch² x`, i.e. `coth² x − 1`.
fn csch2(x: f64) -> f64 {
    if x > 350.0 {
        0.0
    } else {
        let sh = x.sinh();
        1.0 / (sh * sh)
    }
}

/// The coth-scaled sides together with their pairwise differences.
///
/// The differences are computed as `(2s/λ)·(h(y₁) − h(y₂))` with
/// `h(y) = y coth y − 1`, which keeps them accurate when `λ → 0` and all
/// three of `u, v, w` approach `2s/λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Uvw {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub v_minus_w: f64,
    pub w_minus_u: f64,
    pub u_minus_v: f64,
}

impl Uvw {
    /// Vertex distances `(r_A, r_B, r_C)` implied by `u, v, w`.
    pub fn vertex_distances(&self) -> (f64, f64, f64) {
        (
            0.5 * (self.v + self.w_minus_u),
            0.5 * (self.w + self.u_minus_v),
            0.5 * (self.u + self.v_minus_w),
        )
    }
}

/// `u = a·coth(aλ/2s)`, `v = b·coth(bλ/2s)`, `w = c·coth(cλ/2s)`.
pub fn uvw(sides: &SideLengths, lambda: f64) -> Result<Uvw> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidInput(format!(
            "lambda must be positive and finite, got {lambda}"
        )));
    }
    let k = lambda / (2.0 * sides.s);
    let (ya, yb, yc) = (sides.a * k, sides.b * k, sides.c * k);
    let (ha, hb, hc) = (ycothy_m1(ya), ycothy_m1(yb), ycothy_m1(yc));
    let unit = 1.0 / k;
    Ok(Uvw {
        u: sides.a * coth(ya),
        v: sides.b * coth(yb),
        w: sides.c * coth(yc),
        v_minus_w: unit * (hb - hc),
        w_minus_u: unit * (hc - ha),
        u_minus_v: unit * (ha - hb),
    })
}

/// `4·area` from the squared-sides form `√(2Σa²b² − Σa⁴)`.
pub fn rhs_expanded(sides: &SideLengths) -> f64 {
    let (a2, b2, c2) = (sides.a * sides.a, sides.b * sides.b, sides.c * sides.c);
    (2.0 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2))
        .max(0.0)
        .sqrt()
}

/// `4·area` from the factored Heron form.
pub fn rhs_factored(sides: &SideLengths) -> f64 {
    4.0 * sides.heron_area()
}

/// One term `√((u² − a²)(a² − (v − w)²))` with the documented clamping.
fn area_term(side: f64, y: f64, diff: f64) -> Result<f64> {
    let first = side * side * csch2(y);
    let second = (side - diff) * (side + diff);
    let second = if second < 0.0 {
        if second < -1e-12 * side * side {
            return Err(Error::NegativeRadicand { value: second });
        }
        0.0
    } else {
        second
    };
    Ok((first * second).sqrt())
}

/// Left side minus right side of the `λ` equation
/// `Σ √((u² − a²)(a² − (v − w)²)) = 4·area`.
///
/// Strictly decreasing in `λ`, positive near 0 and negative for large `λ`.
pub fn lambda_residual(sides: &SideLengths, lambda: f64) -> Result<f64> {
    let q = uvw(sides, lambda)?;
    let k = lambda / (2.0 * sides.s);
    let lhs = area_term(sides.a, sides.a * k, q.v_minus_w)?
        + area_term(sides.b, sides.b * k, q.w_minus_u)?
        + area_term(sides.c, sides.c * k, q.u_minus_v)?;
    Ok(lhs - rhs_factored(sides))
}

/// Root of the `λ` equation and the quantities derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaSolution {
    pub lambda: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub r_a: f64,
    pub r_b: f64,
    pub r_c: f64,
    /// `|LHS − RHS|` at the returned `λ`.
    pub residual: f64,
    /// Residual evaluations after the bracket was found.
    pub iterations: usize,
    /// Halvings/doublings needed to bracket the root from the initial guess.
    pub bracket_expansions: usize,
}

impl LambdaSolution {
    fn new(sides: &SideLengths, lambda: f64, residual: f64, iterations: usize, expansions: usize) -> Result<Self> {
        let q = uvw(sides, lambda)?;
        let (r_a, r_b, r_c) = q.vertex_distances();
        Ok(LambdaSolution {
            lambda,
            u: q.u,
            v: q.v,
            w: q.w,
            r_a,
            r_b,
            r_c,
            residual: residual.abs(),
            iterations,
            bracket_expansions: expansions,
        })
    }

    pub fn uvw(&self, sides: &SideLengths) -> Uvw {
        uvw(sides, self.lambda).expect("solution lambda is positive")
    }
}

/// Find the unique positive root of [`lambda_residual`].
///
/// The bracket `[g/8, 8g]` around the heuristic guess `g` is widened
/// geometrically until the residual changes sign, then narrowed by a
/// secant step that falls back to bisection whenever the secant point
/// leaves the bracket or the bracket fails to halve within two steps.
/// Converged once the bracket is narrower than `tol·λ` and the residual is
/// below `tol·(4·area)`, or once the bracket has collapsed to adjacent
/// floats.
pub fn solve_lambda(sides: &SideLengths, tol: f64) -> Result<LambdaSolution> {
    if !(tol >= MIN_TOL) {
        return Err(Error::InvalidInput(format!(
            "solver tolerance {tol:e} is below {MIN_TOL:e}"
        )));
    }
    let f = |l: f64| lambda_residual(sides, l);
    let rhs = rhs_factored(sides);
    let guess = initial_guess(sides);

    let mut expansions = 0;
    let (mut lo, mut hi) = (guess / 8.0, guess * 8.0);
    let mut flo = f(lo)?;
    while flo < 0.0 {
        expansions += 1;
        if expansions > MAX_DOUBLINGS {
            return Err(Error::BracketFailure { doublings: expansions });
        }
        hi = lo;
        lo *= 0.5;
        flo = f(lo)?;
    }
    let mut fhi = f(hi)?;
    while fhi > 0.0 {
        expansions += 1;
        if expansions > MAX_DOUBLINGS {
            return Err(Error::BracketFailure { doublings: expansions });
        }
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = f(hi)?;
    }
    if flo == 0.0 {
        return LambdaSolution::new(sides, lo, 0.0, 0, expansions);
    }
    if fhi == 0.0 {
        return LambdaSolution::new(sides, hi, 0.0, 0, expansions);
    }

    let (mut x0, mut f0) = (lo, flo);
    let (mut x1, mut f1) = (hi, fhi);
    let mut widths = [hi - lo; 2];
    let mut iterations = 0;
    loop {
        let width = hi - lo;
        let (best, fbest) = if flo.abs() <= fhi.abs() { (lo, flo) } else { (hi, fhi) };
        let collapsed = hi <= next_up(lo);
        if (width < tol * best && fbest.abs() < tol * rhs) || collapsed || iterations >= MAX_ITERATIONS {
            return LambdaSolution::new(sides, best, fbest, iterations, expansions);
        }

        let mid = lo + 0.5 * width;
        let force_bisect = width > 0.5 * widths[0];
        let mut x = if f1 != f0 { x1 - f1 * (x1 - x0) / (f1 - f0) } else { mid };
        if force_bisect || !(x > lo && x < hi) {
            x = mid;
        } else {
            let nudge = (0.5 * tol * best).min(0.25 * width);
            if x - lo < nudge {
                x = lo + nudge;
            } else if hi - x < nudge {
                x = hi - nudge;
            }
        }

        let fx = f(x)?;
        iterations += 1;
        if fx == 0.0 {
            return LambdaSolution::new(sides, x, 0.0, iterations, expansions);
        }
        if fx > 0.0 {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        x0 = x1;
        f0 = f1;
        x1 = x;
        f1 = fx;
        widths = [widths[1], hi - lo];
    }
}

fn next_up(x: f64) -> f64 {
    f64::from_bits(x.to_bits() + 1)
}

/// Solve the linear system obtained by subtracting the squared-distance
/// equation for C from those for A and B:
///
/// ```text
/// 2(C − A)·P = |C|² − |A|² + v(w − u)
/// 2(C − B)·P = |C|² − |B|² + u(w − v)
/// ```
///
/// Coordinates are taken relative to the centroid, so the result is the
/// same closed form as the explicit Cramer expressions but insensitive to
/// where the triangle sits in the plane.
pub fn point_from_uvw(tri: &Triangle, q: &Uvw) -> Point2 {
    let g = tri.centroid();
    let (a, b, c) = (tri.a() - g, tri.b() - g, tri.c() - g);
    let (ca, cb) = (c - a, c - b);
    let r1 = 0.5 * (c.dot(c) - a.dot(a) + q.v * q.w_minus_u);
    let r2 = 0.5 * (c.dot(c) - b.dot(b) - q.u * q.v_minus_w);
    let det = ca.x * cb.y - ca.y * cb.x;
    g + Point2::new((r1 * cb.y - r2 * ca.y) / det, (ca.x * r2 - cb.x * r1) / det)
}

/// The explicit Cramer expressions for `(x_P, y_P)` in terms of the raw
/// vertex coordinates and `u, v, w`, exactly as written in the derivation.
/// Kept as an independent route for tests; [`point_from_uvw`] is the one
/// used in production.
pub fn cartesian_from_uvw_explicit(tri: &Triangle, u: f64, v: f64, w: f64) -> Point2 {
    let (a, b, c) = (tri.a(), tri.b(), tri.c());
    let ka = a.x * a.x + a.y * a.y - v * w;
    let kb = b.x * b.x + b.y * b.y - w * u;
    let kc = c.x * c.x + c.y * c.y - u * v;
    let x = (ka * (b.y - c.y) + kb * (c.y - a.y) + kc * (a.y - b.y))
        / (2.0 * a.x * (b.y - c.y) + 2.0 * b.x * (c.y - a.y) + 2.0 * c.x * (a.y - b.y));
    let y = (ka * (b.x - c.x) + kb * (c.x - a.x) + kc * (a.x - b.x))
        / (2.0 * a.y * (b.x - c.x) + 2.0 * b.y * (c.x - a.x) + 2.0 * c.y * (a.x - b.x));
    Point2::new(x, y)
}

/// The unique maximum point of the potential and the `λ` state behind it.
pub fn electrostatic_center(tri: &Triangle, tol: f64) -> Result<(Point2, LambdaSolution)> {
    let sides = tri.side_lengths();
    let sol = solve_lambda(&sides, tol)?;
    let p = point_from_uvw(tri, &sol.uvw(&sides));
    Ok((p, sol))
}

/// Spreads (max − min) of the two triples that coincide at the stationary
/// point: the side relation `(1/a)·log((r_B+r_C−a)/(r_B+r_C+a))` and the
/// angle relation `(1/sin α)·log(tan(β₁/2)·tan(γ₂/2))`, each with its two
/// cyclic partners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentitySpreads {
    pub side_relation_spread: f64,
    pub angle_relation_spread: f64,
}

fn spread(v: [f64; 3]) -> f64 {
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Half-angle tangent products opposite each side:
/// `(tan(β₁/2)·tan(γ₂/2), tan(γ₁/2)·tan(α₂/2), tan(α₁/2)·tan(β₂/2))`.
pub fn half_angle_tan_products(tri: &Triangle, p: Point2) -> Result<[f64; 3]> {
    let ca = tri.cevian_angles(p)?;
    let t = |x: f64| (0.5 * x).tan();
    Ok([
        t(ca.beta1) * t(ca.gamma2),
        t(ca.gamma1) * t(ca.alpha2),
        t(ca.alpha1) * t(ca.beta2),
    ])
}

pub fn theorem1_check(tri: &Triangle, p: Point2) -> Result<IdentitySpreads> {
    if tri.classify_point(p) != PointClass::Interior {
        return Err(Error::not_interior(p));
    }
    let sides = tri.side_lengths();
    let side_terms = [
        -segment_log_term(p, tri.b(), tri.c()) / sides.a,
        -segment_log_term(p, tri.c(), tri.a()) / sides.b,
        -segment_log_term(p, tri.a(), tri.b()) / sides.c,
    ];
    let (alpha, beta, gamma) = tri.angles();
    let prods = half_angle_tan_products(tri, p)?;
    let angle_terms = [
        prods[0].ln() / alpha.sin(),
        prods[1].ln() / beta.sin(),
        prods[2].ln() / gamma.sin(),
    ];
    Ok(IdentitySpreads {
        side_relation_spread: spread(side_terms),
        angle_relation_spread: spread(angle_terms),
    })
}

/// Triangle center function of the electrostatic center for a given `λ`:
///
/// `f(a,b,c) = √((coth²(aλ/(a+b+c)) − 1)·(a² − (b·coth(bλ/(a+b+c)) − c·coth(cλ/(a+b+c)))²))`
///
/// It equals twice the distance from the center to side `a`.
pub fn center_function(a: f64, b: f64, c: f64, lambda: f64) -> f64 {
    let k = lambda / (a + b + c);
    let diff = (ycothy_m1(b * k) - ycothy_m1(c * k)) / k;
    let second = ((a - diff) * (a + diff)).max(0.0);
    (csch2(a * k) * second).sqrt()
}

/// Trilinears `f(a,b,c) : f(b,c,a) : f(c,a,b)` with one shared `λ`.
pub fn center_function_trilinears(sides: &SideLengths, tol: f64) -> Result<Trilinears> {
    let lambda = solve_lambda(sides, tol)?.lambda;
    let (a, b, c) = (sides.a, sides.b, sides.c);
    Trilinears::new(
        center_function(a, b, c, lambda),
        center_function(b, c, a, lambda),
        center_function(c, a, b, lambda),
    )
}

/// Distance from the electrostatic center to side BC,
/// `d_a = 2·τ_a·area / (a·τ_a + b·τ_b + c·τ_c)`.
pub fn kimberling_search_value(sides: &SideLengths, tol: f64) -> Result<f64> {
    let t = center_function_trilinears(sides, tol)?;
    Ok(t.exact_gauge(sides)?.tau_a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const LAMBDA_REFERENCE: f64 = 4.010_297_202_743_007_5;
    const LAMBDA_EQUILATERAL: f64 = 3.950_873_690_774_450_3;

    fn reference() -> Triangle {
        Triangle::new(
            Point2::new(-1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        )
        .unwrap()
    }

    #[test]
    fn coth_pieces_agree() {
        for x in [1e-8f64, 1e-5, 9.99e-5, 1e-4, 0.3, 1.0, 5.0, 19.99, 20.0, 20.01, 40.0] {
            let direct = x.cosh() / x.sinh();
            assert_relative_eq!(coth(x), direct, max_relative = 1e-13);
        }
    }

    #[test]
    fn ycothy_series_matches_direct() {
        for y in [0.05f64, 0.0999, 0.1, 0.2] {
            let direct = y * y.cosh() / y.sinh() - 1.0;
            assert_relative_eq!(ycothy_m1(y), direct, max_relative = 1e-12);
        }
    }

    #[test]
    fn uvw_equilateral_value() {
        let s = SideLengths::new(2.0, 2.0, 2.0).unwrap();
        let q = uvw(&s, LAMBDA_EQUILATERAL).unwrap();
        let expect = 2.0 * 2.0 / 3f64.sqrt();
        for x in [q.u, q.v, q.w] {
            assert_relative_eq!(x, expect, max_relative = 1e-14);
        }
    }

    #[test]
    fn uvw_limits() {
        let s = SideLengths::new(3.0, 4.0, 5.0).unwrap();
        let q = uvw(&s, 1e4).unwrap();
        assert_relative_eq!(q.u, 3.0, max_relative = 1e-15);
        assert_relative_eq!(q.w, 5.0, max_relative = 1e-15);
        let lam = 1e-7;
        let q = uvw(&s, lam).unwrap();
        let lead = 2.0 * s.s / lam;
        for x in [q.u, q.v, q.w] {
            assert_relative_eq!(x, lead, max_relative = 1e-12);
        }
        // the differences keep their leading order (a² − b²)·λ/(6s)
        assert_relative_eq!(q.u_minus_v, (9.0 - 16.0) * lam / (6.0 * s.s), max_relative = 1e-6);
        assert!(uvw(&s, 0.0).is_err());
    }

    #[test]
    fn residual_zero_at_known_roots() {
        let eq = SideLengths::new(1.0, 1.0, 1.0).unwrap();
        assert!(lambda_residual(&eq, LAMBDA_EQUILATERAL).unwrap().abs() < 1e-12);
        let s = reference().side_lengths();
        let r = lambda_residual(&s, LAMBDA_REFERENCE).unwrap();
        assert!(r.abs() < 1e-12 * rhs_factored(&s));
    }

    #[test]
    fn rhs_forms_agree() {
        for (a, b, c) in [(3.0, 4.0, 5.0), (6.0, 9.0, 13.0), (1.0, 1.0, 1.0)] {
            let s = SideLengths::new(a, b, c).unwrap();
            assert_relative_eq!(rhs_expanded(&s), rhs_factored(&s), max_relative = 1e-13);
        }
    }

    #[test]
    fn solves_reference_lambda() {
        let s = reference().side_lengths();
        let sol = solve_lambda(&s, 1e-13).unwrap();
        assert_relative_eq!(sol.lambda, LAMBDA_REFERENCE, max_relative = 1e-12);
        assert!(lambda_residual(&s, sol.lambda / 2.0).unwrap() > 0.0);
        assert!(lambda_residual(&s, sol.lambda * 2.0).unwrap() < 0.0);
        assert!(sol.u > s.a && sol.v > s.b && sol.w > s.c);
        assert_relative_eq!(sol.r_b + sol.r_c, sol.u, max_relative = 1e-14);
        assert_relative_eq!(sol.r_c + sol.r_a, sol.v, max_relative = 1e-14);
        assert_relative_eq!(sol.r_a + sol.r_b, sol.w, max_relative = 1e-14);
    }

    #[test]
    fn solves_equilateral_lambda() {
        let s = SideLengths::new(1.0, 1.0, 1.0).unwrap();
        let sol = solve_lambda(&s, 1e-13).unwrap();
        assert_relative_eq!(sol.lambda, LAMBDA_EQUILATERAL, max_relative = 1e-12);
    }

    #[test]
    fn lambda_is_scale_invariant() {
        let s = reference().side_lengths();
        let base = solve_lambda(&s, 1e-13).unwrap().lambda;
        for t in [0.01, 1.0, 100.0] {
            let l = solve_lambda(&s.scaled(t), 1e-13).unwrap().lambda;
            assert_relative_eq!(l, base, max_relative = 1e-12);
        }
    }

    #[test]
    fn rejects_tiny_tolerance() {
        let s = SideLengths::new(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(solve_lambda(&s, 1e-15), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn reference_center() {
        let (p, _) = electrostatic_center(&reference(), 1e-13).unwrap();
        assert!((p.x - 0.272_557_906_914_867_7).abs() < 1e-10);
        assert!((p.y - 0.704_148_189_723_077).abs() < 1e-10);
    }

    #[test]
    fn explicit_formula_agrees_with_shifted_solve() {
        let t = reference();
        let (p, sol) = electrostatic_center(&t, 1e-13).unwrap();
        let q = cartesian_from_uvw_explicit(&t, sol.u, sol.v, sol.w);
        assert!(p.dist(q) < 1e-13);
        let (ra, rb, rc) = t.vertex_distances(p);
        assert!((ra - sol.r_a).abs() < 1e-12);
        assert!((rb - sol.r_b).abs() < 1e-12);
        assert!((rc - sol.r_c).abs() < 1e-12);
    }

    #[test]
    fn equilateral_center_is_centroid() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        let (p, _) = electrostatic_center(&t, 1e-13).unwrap();
        assert!(p.dist(t.centroid()) < 1e-12);
    }

    #[test]
    fn identities_hold_only_at_center() {
        let t = reference();
        let (p, _) = electrostatic_center(&t, 1e-13).unwrap();
        let at = theorem1_check(&t, p).unwrap();
        assert!(at.side_relation_spread < 1e-12, "{at:?}");
        assert!(at.angle_relation_spread < 1e-12, "{at:?}");
        let off = theorem1_check(&t, t.centroid()).unwrap();
        assert!(off.side_relation_spread > 1e-6 && off.angle_relation_spread > 1e-6);
        assert!(theorem1_check(&t, t.b()).is_err());
    }

    #[test]
    fn tan_product_identity_anywhere_inside() {
        let t = reference();
        for p in [Point2::new(0.1, 0.3), Point2::new(1.2, 0.4), Point2::new(-0.4, 0.2)] {
            let prods = half_angle_tan_products(&t, p).unwrap();
            let (ra, rb, rc) = t.vertex_distances(p);
            let s = t.side_lengths();
            assert_relative_eq!(prods[2], (ra + rb - s.c) / (ra + rb + s.c), max_relative = 1e-12);
            assert_relative_eq!(prods[0], (rb + rc - s.a) / (rb + rc + s.a), max_relative = 1e-12);
            assert_relative_eq!(prods[1], (rc + ra - s.b) / (rc + ra + s.b), max_relative = 1e-12);
        }
    }

    #[test]
    fn center_function_properties() {
        let eq = SideLengths::new(1.0, 1.0, 1.0).unwrap();
        let (one, tb, tc) = center_function_trilinears(&eq, 1e-13).unwrap().ratios();
        assert_eq!(one, 1.0);
        assert_relative_eq!(tb, 1.0, max_relative = 1e-13);
        assert_relative_eq!(tc, 1.0, max_relative = 1e-13);

        let lam = 4.3;
        assert_relative_eq!(
            center_function(6.0, 9.0, 13.0, lam),
            center_function(6.0, 13.0, 9.0, lam),
            max_relative = 1e-14
        );

        let s = SideLengths::new(6.0, 9.0, 13.0).unwrap();
        let r1 = center_function_trilinears(&s, 1e-13).unwrap().ratios();
        let r10 = center_function_trilinears(&s.scaled(10.0), 1e-13).unwrap().ratios();
        assert_relative_eq!(r1.1, r10.1, max_relative = 1e-12);
        assert_relative_eq!(r1.2, r10.2, max_relative = 1e-12);
    }

    #[test]
    fn search_value() {
        let s = SideLengths::new(6.0, 9.0, 13.0).unwrap();
        let d = kimberling_search_value(&s, 1e-13).unwrap();
        assert_relative_eq!(d, 2.110_731_796_690_289_2, max_relative = 1e-10);
        let t = Triangle::from_sides(6.0, 9.0, 13.0).unwrap();
        let (p, _) = electrostatic_center(&t, 1e-13).unwrap();
        assert_relative_eq!(p.y, d, max_relative = 1e-11);

        let eq = SideLengths::new(2.0, 2.0, 2.0).unwrap();
        let d = kimberling_search_value(&eq, 1e-13).unwrap();
        assert_relative_eq!(d, 2.0 / (2.0 * 3f64.sqrt()), max_relative = 1e-13);
    }
}
