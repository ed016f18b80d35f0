//! Shared fixtures for the benchmarks.

use tricenter_core::sampling::{random_triangle, stream_rng};
use tricenter_core::{Point2, Triangle};

pub const SEED: u64 = 42;

/// A(−1, 0), B(2, 0), C(0, 2).
pub fn reference_triangle() -> Triangle {
    Triangle::new(Point2::new(-1.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.0, 2.0))
        .expect("reference triangle is valid")
}

/// Reproducible random triangles with no angle below 0.15 rad.
pub fn sample_triangles(n: usize) -> Vec<Triangle> {
    let mut rng = stream_rng(SEED, 0);
    (0..n).map(|_| random_triangle(&mut rng, 0.15)).collect()
}
