//! Deterministic random triangles and points.
//!
//! Every generator takes an explicit RNG; [`stream_rng`] gives each index
//! its own ChaCha stream so batch results do not depend on iteration order.

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geometry::{Point2, SideLengths, Triangle};

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Triangle with angles `α` at A and `β` at B, sides `(sin α, sin β, sin γ)`,
/// in the canonical pose.
pub fn triangle_from_angles(alpha: f64, beta: f64) -> Result<Triangle> {
    let gamma = std::f64::consts::PI - alpha - beta;
    let sides = SideLengths::new(alpha.sin(), beta.sin(), gamma.sin())?;
    Ok(Triangle::from_side_lengths(&sides))
}

/// Angles `α, β` drawn uniformly from `(0, π/2)²`. Every triangle has at
/// least two acute angles, so this reaches all shapes.
pub fn random_acute_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    let alpha = rng.gen_range(f64::EPSILON..FRAC_PI_2);
    let beta = rng.gen_range(f64::EPSILON..FRAC_PI_2);
    (alpha, beta)
}

/// Vertices uniform in `[−1, 1]²`, redrawn until every angle is at least
/// `min_angle` radians.
pub fn random_triangle<R: Rng>(rng: &mut R, min_angle: f64) -> Triangle {
    loop {
        let mut p = || Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let (a, b, c) = (p(), p(), p());
        if let Ok(t) = Triangle::new(a, b, c) {
            let (x, y, z) = t.angles();
            if x.min(y).min(z) >= min_angle {
                return t;
            }
        }
    }
}

/// Uniform point in the triangle, at barycentric distance at least
/// `margin` from every side.
pub fn random_interior_point<R: Rng>(rng: &mut R, tri: &Triangle, margin: f64) -> Point2 {
    loop {
        let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        let w = 1.0 - u - v;
        if u.min(v).min(w) >= margin {
            return tri.from_barycentric(w, u, v);
        }
    }
}
