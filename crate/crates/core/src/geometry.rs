//! Planar triangle primitives.
//!
//! Every [`Triangle`] is stored counterclockwise, so the signed distances
//! from an interior point to the three side lines are all positive. Side
//! lengths follow the usual convention `a = |BC|`, `b = |CA|`, `c = |AB|`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold below which a triangle counts as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Relative half-width of the band treated as "on the boundary" by
/// [`Triangle::classify_point`].
pub const BOUNDARY_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rotate counterclockwise by `angle` radians about the origin.
    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn polar(r: f64, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(r * c, r * s)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Lengths of the three sides plus the semiperimeter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SideLengths {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub s: f64,
}

impl SideLengths {
    /// Validates the strict triangle inequality with a relative margin of
    /// [`DEGENERACY_TOL`].
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateTriangle("non-finite side length".into()));
        }
        if a <= 0.0 || b <= 0.0 || c <= 0.0 {
            return Err(Error::DegenerateTriangle(format!(
                "side lengths must be positive, got ({a}, {b}, {c})"
            )));
        }
        let longest = a.max(b).max(c);
        let slack = (b + c - a).min(c + a - b).min(a + b - c);
        if slack <= DEGENERACY_TOL * longest {
            return Err(Error::DegenerateTriangle(format!(
                "sides ({a}, {b}, {c}) violate the strict triangle inequality"
            )));
        }
        Ok(SideLengths {
            a,
            b,
            c,
            s: 0.5 * (a + b + c),
        })
    }

    /// Cyclic shift `(a, b, c) -> (b, c, a)`.
    pub fn rotated(&self) -> SideLengths {
        SideLengths {
            a: self.b,
            b: self.c,
            c: self.a,
            s: self.s,
        }
    }

    pub fn scaled(&self, t: f64) -> SideLengths {
        SideLengths {
            a: t * self.a,
            b: t * self.b,
            c: t * self.c,
            s: t * self.s,
        }
    }

    pub fn longest(&self) -> f64 {
        self.a.max(self.b).max(self.c)
    }

    /// Area by Heron's formula in the factored form
    /// `¼·√((a+b+c)(−a+b+c)(a−b+c)(a+b−c))`.
    pub fn heron_area(&self) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        0.25 * ((a + b + c) * (b + c - a) * (c + a - b) * (a + b - c)).sqrt()
    }

    pub fn inradius(&self) -> f64 {
        self.heron_area() / self.s
    }

    /// Interior angles `(α, β, γ)` at A, B, C by the law of cosines.
    pub fn angles(&self) -> (f64, f64, f64) {
        let (a, b, c) = (self.a, self.b, self.c);
        let alpha = ((b * b + c * c - a * a) / (2.0 * b * c)).clamp(-1.0, 1.0).acos();
        let beta = ((c * c + a * a - b * b) / (2.0 * c * a)).clamp(-1.0, 1.0).acos();
        (alpha, beta, PI - alpha - beta)
    }
}

/// Where a point sits relative to a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

/// Homogeneous trilinear coordinates `τ_a : τ_b : τ_c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Trilinears {
    pub tau_a: f64,
    pub tau_b: f64,
    pub tau_c: f64,
}

impl Trilinears {
    pub fn new(tau_a: f64, tau_b: f64, tau_c: f64) -> Result<Self> {
        if tau_a == 0.0 && tau_b == 0.0 && tau_c == 0.0 {
            return Err(Error::InvalidInput("all trilinears are zero".into()));
        }
        Ok(Trilinears { tau_a, tau_b, tau_c })
    }

    /// Rescale so that `a·τ_a + b·τ_b + c·τ_c = 2·area`, which turns the
    /// coordinates into actual signed distances to the sides.
    pub fn exact_gauge(&self, sides: &SideLengths) -> Result<Trilinears> {
        let norm = sides.a * self.tau_a + sides.b * self.tau_b + sides.c * self.tau_c;
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::DegenerateTrilinears);
        }
        let k = 2.0 * sides.heron_area() / norm;
        Ok(Trilinears {
            tau_a: k * self.tau_a,
            tau_b: k * self.tau_b,
            tau_c: k * self.tau_c,
        })
    }

    /// Ratios `(1, τ_b/τ_a, τ_c/τ_a)`.
    pub fn ratios(&self) -> (f64, f64, f64) {
        (1.0, self.tau_b / self.tau_a, self.tau_c / self.tau_a)
    }
}

/// The six angles an interior point P cuts out at the vertices:
/// `α₁ = ∠BAP`, `α₂ = ∠PAC`, `β₁ = ∠CBP`, `β₂ = ∠PBA`, `γ₁ = ∠ACP`,
/// `γ₂ = ∠PCB`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CevianAngles {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

/// Unsigned angle between two vectors, in `[0, π]`.
pub fn angle_between(u: Point2, v: Point2) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// A non-degenerate, counterclockwise triangle ABC.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle {
    a: Point2,
    b: Point2,
    c: Point2,
}

impl Triangle {
    /// Builds a triangle from three vertices. Clockwise input is reordered
    /// to counterclockwise by swapping B and C.
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateTriangle("non-finite vertex".into()));
        }
        let twice_area = (b - a).cross(c - a);
        let longest = a.dist(b).max(b.dist(c)).max(c.dist(a));
        if twice_area.abs() <= DEGENERACY_TOL * longest * longest {
            return Err(Error::DegenerateTriangle(format!(
                "vertices ({}, {}), ({}, {}), ({}, {}) are collinear",
                a.x, a.y, b.x, b.y, c.x, c.y
            )));
        }
        if twice_area > 0.0 {
            Ok(Triangle { a, b, c })
        } else {
            Ok(Triangle { a, b: c, c: b })
        }
    }

    /// Canonical pose: `B = (0, 0)`, `C = (a, 0)`, A in the upper half-plane.
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self> {
        let sides = SideLengths::new(a, b, c)?;
        Ok(Self::from_side_lengths(&sides))
    }

    pub(crate) fn from_side_lengths(sides: &SideLengths) -> Self {
        let (a, b, c) = (sides.a, sides.b, sides.c);
        let xa = (a * a + c * c - b * b) / (2.0 * a);
        // height from the area keeps precision for flat triangles
        let ya = 2.0 * sides.heron_area() / a;
        Triangle {
            a: Point2::new(xa, ya),
            b: Point2::new(0.0, 0.0),
            c: Point2::new(a, 0.0),
        }
    }

    pub fn a(&self) -> Point2 {
        self.a
    }

    pub fn b(&self) -> Point2 {
        self.b
    }

    pub fn c(&self) -> Point2 {
        self.c
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    /// Apply an arbitrary point map to all three vertices.
    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Result<Triangle> {
        Triangle::new(f(self.a), f(self.b), f(self.c))
    }

    pub fn side_lengths(&self) -> SideLengths {
        let a = self.b.dist(self.c);
        let b = self.c.dist(self.a);
        let c = self.a.dist(self.b);
        SideLengths {
            a,
            b,
            c,
            s: 0.5 * (a + b + c),
        }
    }

    /// Area as half the cross product of two edge vectors.
    pub fn area(&self) -> f64 {
        0.5 * (self.b - self.a).cross(self.c - self.a)
    }

    pub fn inradius(&self) -> f64 {
        self.area() / self.side_lengths().s
    }

    pub fn diameter(&self) -> f64 {
        self.side_lengths().longest()
    }

    pub fn angles(&self) -> (f64, f64, f64) {
        let alpha = angle_between(self.b - self.a, self.c - self.a);
        let beta = angle_between(self.c - self.b, self.a - self.b);
        let gamma = angle_between(self.a - self.c, self.b - self.c);
        (alpha, beta, gamma)
    }

    pub fn centroid(&self) -> Point2 {
        (self.a + self.b + self.c) * (1.0 / 3.0)
    }

    pub fn incenter(&self) -> Point2 {
        let s = self.side_lengths();
        (self.a * s.a + self.b * s.b + self.c * s.c) * (1.0 / (s.a + s.b + s.c))
    }

    pub fn circumcenter(&self) -> Point2 {
        let (b, c) = (self.b - self.a, self.c - self.a);
        let d = 2.0 * b.cross(c);
        let (bb, cc) = (b.dot(b), c.dot(c));
        self.a + Point2::new(c.y * bb - b.y * cc, b.x * cc - c.x * bb) * (1.0 / d)
    }

    pub fn orthocenter(&self) -> Point2 {
        // H = A + B + C − 2O
        self.a + self.b + self.c - self.circumcenter() * 2.0
    }

    /// Signed distances `(d_a, d_b, d_c)` from `p` to the lines BC, CA, AB;
    /// positive on the interior side.
    pub fn signed_distances(&self, p: Point2) -> (f64, f64, f64) {
        let s = self.side_lengths();
        (
            (self.c - self.b).cross(p - self.b) / s.a,
            (self.a - self.c).cross(p - self.c) / s.b,
            (self.b - self.a).cross(p - self.a) / s.c,
        )
    }

    /// Barycentric coordinates with respect to (A, B, C).
    pub fn barycentric(&self, p: Point2) -> (f64, f64, f64) {
        let twice = 2.0 * self.area();
        (
            (self.c - self.b).cross(p - self.b) / twice,
            (self.a - self.c).cross(p - self.c) / twice,
            (self.b - self.a).cross(p - self.a) / twice,
        )
    }

    pub fn from_barycentric(&self, wa: f64, wb: f64, wc: f64) -> Point2 {
        let sum = wa + wb + wc;
        (self.a * wa + self.b * wb + self.c * wc) * (1.0 / sum)
    }

    pub fn classify_point(&self, p: Point2) -> PointClass {
        let (la, lb, lc) = self.barycentric(p);
        let m = la.min(lb).min(lc);
        if m > BOUNDARY_BAND {
            PointClass::Interior
        } else if m < -BOUNDARY_BAND {
            PointClass::Exterior
        } else {
            PointClass::Boundary
        }
    }

    /// Euclidean distance from `p` to the closed boundary polyline.
    pub fn distance_to_boundary(&self, p: Point2) -> f64 {
        segment_distance(p, self.a, self.b)
            .min(segment_distance(p, self.b, self.c))
            .min(segment_distance(p, self.c, self.a))
    }

    /// Exact trilinears: the signed distances to the three side lines.
    pub fn cartesian_to_trilinear(&self, p: Point2) -> Trilinears {
        let (da, db, dc) = self.signed_distances(p);
        Trilinears {
            tau_a: da,
            tau_b: db,
            tau_c: dc,
        }
    }

    pub fn trilinear_to_cartesian(&self, t: &Trilinears) -> Result<Point2> {
        let s = self.side_lengths();
        let (wa, wb, wc) = (s.a * t.tau_a, s.b * t.tau_b, s.c * t.tau_c);
        let sum = wa + wb + wc;
        let scale = (wa.abs() + wb.abs() + wc.abs()).max(f64::MIN_POSITIVE);
        if sum.abs() <= 1e-14 * scale || !sum.is_finite() {
            return Err(Error::DegenerateTrilinears);
        }
        Ok(self.from_barycentric(wa, wb, wc))
    }

    pub fn cevian_angles(&self, p: Point2) -> Result<CevianAngles> {
        if self.classify_point(p) != PointClass::Interior {
            return Err(Error::not_interior(p));
        }
        let (a, b, c) = (self.a, self.b, self.c);
        Ok(CevianAngles {
            alpha1: angle_between(b - a, p - a),
            alpha2: angle_between(p - a, c - a),
            beta1: angle_between(c - b, p - b),
            beta2: angle_between(p - b, a - b),
            gamma1: angle_between(a - c, p - c),
            gamma2: angle_between(p - c, b - c),
        })
    }

    /// `(|PA|, |PB|, |PC|)`.
    pub fn vertex_distances(&self, p: Point2) -> (f64, f64, f64) {
        (p.dist(self.a), p.dist(self.b), p.dist(self.c))
    }

    /// The three directed sides `(start, end, length)` in the order AB, BC,
    /// CA, each traversed counterclockwise.
    pub(crate) fn edges(&self) -> [(Point2, Point2); 3] {
        [(self.a, self.b), (self.b, self.c), (self.c, self.a)]
    }
}

fn segment_distance(p: Point2, q1: Point2, q2: Point2) -> f64 {
    let e = q2 - q1;
    let len2 = e.dot(e);
    let t = ((p - q1).dot(e) / len2).clamp(0.0, 1.0);
    p.dist(q1 + e * t)
}
