use tricenter_core::electro_center::electrostatic_center;
use tricenter_core::general_p::*;
use tricenter_core::potential::field_closed;
use tricenter_core::sampling::{random_interior_point, random_triangle, stream_rng};
use tricenter_core::{Point2, Triangle};

const SEED: u64 = 7;

fn acute() -> Triangle {
    Triangle::new(Point2::new(-1.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.0, 2.0)).unwrap()
}

fn obtuse() -> Triangle {
    Triangle::new(Point2::new(0.0, 0.0), Point2::new(4.0, 0.0), Point2::new(0.5, 1.0)).unwrap()
}

fn pe(p: f64) -> PExponent {
    PExponent::new(p).unwrap()
}

#[test]
fn coulomb_residual_is_minus_field_on_random_points() {
    let mut rng = stream_rng(SEED, 1);
    for _ in 0..20 {
        let tri = random_triangle(&mut rng, 0.15);
        let p = random_interior_point(&mut rng, &tri, 1e-2);
        let r = stationarity_residual(&tri, p, pe(-1.0)).unwrap();
        let e = field_closed(&tri, p).unwrap();
        assert!((r.ex + e.ex).abs() < 1e-10 && (r.ey + e.ey).abs() < 1e-10);
    }
}

#[test]
fn inversion_moment_equals_minus_four_residual() {
    let mut rng = stream_rng(SEED, 2);
    for _ in 0..20 {
        let tri = random_triangle(&mut rng, 0.15);
        let p = random_interior_point(&mut rng, &tri, 2e-2);
        let inv = inversion_centroid_check(&tri, p, 64).unwrap();
        let res = stationarity_residual(&tri, p, pe(-4.0)).unwrap().norm();
        assert!((inv - res).abs() < 1e-10 * res.max(1.0), "{inv} vs {res}");
    }
}

#[test]
fn p_minus_one_matches_electrostatic_center() {
    let mut rng = stream_rng(SEED, 3);
    for _ in 0..20 {
        let tri = random_triangle(&mut rng, 0.15);
        let (c, _) = electrostatic_center(&tri, 1e-14).unwrap();
        let r = rp_center(&tri, pe(-1.0), 1e-12).unwrap();
        assert!(r.point.dist(c) < 1e-8 * tri.diameter());
    }
}

#[test]
fn p_minus_four_center_has_centered_inversion() {
    let mut rng = stream_rng(SEED, 4);
    for _ in 0..10 {
        let tri = random_triangle(&mut rng, 0.15);
        let r = rp_center(&tri, pe(-4.0), 1e-12).unwrap();
        assert!(inversion_centroid_check(&tri, r.point, 64).unwrap() < 1e-8);
    }
}

#[test]
fn isosceles_centers_stay_on_axis() {
    let tri = Triangle::new(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 2.7)).unwrap();
    for p in [-6.0, -3.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 4.0, 9.0] {
        let r = rp_center(&tri, pe(p), 1e-12).unwrap();
        assert!(r.point.x.abs() < 1e-10 * tri.diameter(), "p = {p}: {:?}", r.point);
    }
}

#[test]
fn rp_center_commutes_with_similarity() {
    let tri = obtuse();
    let map = |q: Point2| q.rotate(1.1) * 0.37 + Point2::new(3.0, -8.0);
    let moved = tri.map(map).unwrap();
    for p in [-5.0, -2.0, 0.0, 1.0, 6.0] {
        let a = rp_center(&tri, pe(p), 1e-12).unwrap().point;
        let b = rp_center(&moved, pe(p), 1e-12).unwrap().point;
        assert!(map(a).dist(b) < 1e-10 * moved.diameter(), "p = {p}");
    }
}

fn arc_steps(tri: &Triangle, lo: i32, hi: i32) -> Vec<f64> {
    let ps: Vec<f64> = (lo..=hi).map(|k| f64::from(k) * 0.5).collect();
    let arc = potential_arc(tri, &ps, 1e-12).unwrap();
    assert!(arc.iter().all(|a| a.converged));
    let at2 = arc.iter().find(|a| a.p == 2.0).unwrap();
    assert!(at2.point.dist(tri.centroid()) < 1e-9 * tri.diameter());
    arc.windows(2).map(|w| w[0].point.dist(w[1].point)).collect()
}

#[test]
fn arc_has_no_jumps_against_median_step() {
    for tri in [acute(), obtuse()] {
        let mut steps = arc_steps(&tri, -20, 20);
        let max = steps.iter().fold(0.0f64, |m, s| m.max(*s));
        steps.sort_by(f64::total_cmp);
        let median = steps[steps.len() / 2];
        assert!(max < 10.0 * median, "max step {max}, median {median}");
    }
}

#[test]
fn arc_has_no_local_jumps_out_to_thirty() {
    // the arc slows down like 1/p² in the tails, so compare each step with
    // its neighbours rather than with the global median
    for tri in [acute(), obtuse()] {
        let steps = arc_steps(&tri, -60, 60);
        for w in steps.windows(3) {
            assert!(w[1] < 3.0 * w[0].max(w[2]), "{w:?}");
        }
    }
}

#[test]
fn acute_arc_runs_from_incenter_to_circumcenter() {
    let tri = acute();
    let [minus, plus] = arc_endpoints(&tri, 1e-12).unwrap();
    let d = tri.diameter();
    let trend = |e: &ArcEndpoint, target: Point2| {
        let dist: Vec<f64> = e.samples.iter().map(|s| s.dist(target) / d).collect();
        assert!(dist[0] > dist[1] && dist[1] > dist[2], "{dist:?}");
        assert!(e.extrapolated.dist(target) / d < dist[2]);
        e.extrapolated.dist(target) / d
    };
    assert!(trend(&minus, tri.incenter()) < 1e-3);
    assert!(trend(&plus, tri.circumcenter()) < 1e-3);
}

#[test]
fn obtuse_arc_ends_at_longest_side_midpoint() {
    let tri = obtuse();
    let [minus, plus] = arc_endpoints(&tri, 1e-12).unwrap();
    let d = tri.diameter();
    let mid = (tri.a() + tri.b()) * 0.5;
    assert!(minus.extrapolated.dist(tri.incenter()) / d < 1e-3);
    let dist: Vec<f64> = plus.samples.iter().map(|s| s.dist(mid) / d).collect();
    assert!(dist[0] > dist[1] && dist[1] > dist[2]);
    assert!(plus.extrapolated.dist(mid) / d < 1e-2);
    assert!(plus.extrapolated.dist(tri.circumcenter()) > 5.0 * plus.extrapolated.dist(mid));
}

#[test]
fn lambda_curve_reaches_center_and_limits() {
    let tri = obtuse();
    let (c, sol) = electrostatic_center(&tri, 1e-14).unwrap();
    let pts = lambda_curve(&tri, &[sol.lambda]).unwrap();
    assert!(pts[0].point.dist(c) < 1e-10 * tri.diameter());
    let large = lambda_curve_limit(&tri, 1e6, 1e7).unwrap();
    assert_eq!(large.nearest, ClassicalCenter::Incenter);
    let small = lambda_curve_limit(&tri, 1e-6, 1e-7).unwrap();
    assert_eq!(small.nearest, ClassicalCenter::Centroid);
    assert!(large.cauchy_gap < 1e-6 && small.cauchy_gap < 1e-6);
}

#[test]
fn thomson_residual_is_scale_free() {
    let tri = obtuse();
    let big = tri.map(|q| q * 1000.0).unwrap();
    let p = Point2::new(1.0, 0.4);
    let a = thomson_residual(&tri, p);
    let b = thomson_residual(&big, p * 1000.0);
    assert!((a - b).abs() < 1e-12 * a.abs());
}

#[test]
fn thomson_residual_at_general_p() {
    // generic exponents leave the cubic; p = -3 does not, on these samples
    let mut rng = stream_rng(SEED, 5);
    for _ in 0..10 {
        let tri = random_triangle(&mut rng, 0.15);
        let r1 = rp_center(&tri, pe(1.0), 1e-12).unwrap();
        let r3 = rp_center(&tri, pe(-3.0), 1e-12).unwrap();
        let s = tri.side_lengths();
        let scalene = (s.a - s.b).abs().min((s.b - s.c).abs()).min((s.c - s.a).abs()) > 1e-2 * s.longest();
        if scalene {
            assert!(thomson_residual(&tri, r1.point).abs() > 1e-8);
        }
        assert!(thomson_residual(&tri, r3.point).abs() < 1e-9);
    }
}
