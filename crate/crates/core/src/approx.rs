//! Estimates for `λ`: the equilateral value `λ₀`, the shape parameter
//! `t = log(s²/27ρ²)` and the heuristic starting point `λ₀ + 0.75·t`.

use serde::Serialize;

use crate::electro_center::solve_lambda;
use crate::error::{Error, Result};
use crate::geometry::SideLengths;
use crate::sampling::{random_acute_pair, stream_rng, triangle_from_angles};

/// Slope of the initial guess in `t`. Empirically `(λ − λ₀)/t` stays
/// between roughly 1/2 and 1; this is the middle of that band. Tunable.
pub const GUESS_SLOPE: f64 = 0.75;

/// Samples with `t` below this are left out of ratio statistics.
pub const MIN_SHAPE_PARAMETER: f64 = 1e-6;

/// `λ` of any equilateral triangle, `3·log(2 + √3)`.
pub fn lambda_equilateral() -> f64 {
    3.0 * (2.0 + 3f64.sqrt()).ln()
}

/// `t = log(s³ / (27(s−a)(s−b)(s−c)))`; zero exactly for equilateral
/// triangles and positive otherwise.
pub fn shape_parameter(sides: &SideLengths) -> f64 {
    let s = sides.s;
    let prod = (s - sides.a) * (s - sides.b) * (s - sides.c);
    (s * s * s / (27.0 * prod)).ln().max(0.0)
}

/// The same parameter through the inradius, `log(s² / 27ρ²)`.
pub fn shape_parameter_inradius(sides: &SideLengths) -> f64 {
    let rho = sides.inradius();
    (sides.s * sides.s / (27.0 * rho * rho)).ln().max(0.0)
}

/// Starting point for the `λ` root search.
pub fn initial_guess(sides: &SideLengths) -> f64 {
    lambda_equilateral() + GUESS_SLOPE * shape_parameter(sides)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShapeStats {
    pub t: f64,
    pub lambda0: f64,
    /// `(λ − λ₀)/t`, present only when `λ` is known and `t > 0`.
    pub ratio: Option<f64>,
}

pub fn shape_stats(sides: &SideLengths, lambda: Option<f64>) -> ShapeStats {
    let t = shape_parameter(sides);
    let lambda0 = lambda_equilateral();
    let ratio = match lambda {
        Some(l) if t > 0.0 => Some((l - lambda0) / t),
        _ => None,
    };
    ShapeStats { t, lambda0, ratio }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurveySummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// Triangles that entered the statistics.
    pub count: usize,
    /// Triangles skipped because `t` was below [`MIN_SHAPE_PARAMETER`]
    /// or the sample was too thin to represent.
    pub excluded: usize,
    pub seed: u64,
}

/// Empirical range of `(λ − λ₀)/t` over `n_triangles` random shapes, with
/// the two base angles drawn uniformly from `(0, π/2)`. Triangle `i` uses
/// its own RNG stream, so the summary depends only on `(n, seed)`.
pub fn ratio_band_survey(n_triangles: usize, seed: u64) -> Result<SurveySummary> {
    if n_triangles < 100 {
        return Err(Error::InvalidInput(format!(
            "survey needs at least 100 triangles, got {n_triangles}"
        )));
    }
    let lambda0 = lambda_equilateral();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut count = 0;
    let mut excluded = 0;
    for i in 0..n_triangles {
        let mut rng = stream_rng(seed, i as u64);
        let (alpha, beta) = random_acute_pair(&mut rng);
        let Ok(tri) = triangle_from_angles(alpha, beta) else {
            excluded += 1;
            continue;
        };
        let sides = tri.side_lengths();
        let t = shape_parameter(&sides);
        if t < MIN_SHAPE_PARAMETER {
            excluded += 1;
            continue;
        }
        let lambda = solve_lambda(&sides, 1e-12)?.lambda;
        let ratio = (lambda - lambda0) / t;
        min = min.min(ratio);
        max = max.max(ratio);
        sum += ratio;
        count += 1;
    }
    Ok(SurveySummary {
        min,
        max,
        mean: sum / count as f64,
        count,
        excluded,
        seed,
    })
}
