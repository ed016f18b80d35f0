//! Globally adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.
//!
//! The integrand may be vector-valued (`[f64; N]`); the interval with the
//! largest error estimate is bisected until the summed estimate drops below
//! `max(abs_tol, rel_tol · ∫|f|)`. Nodes and weights are the QUADPACK
//! values.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_SEGMENTS: usize = 4096;

/// Tolerances and depth limit for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum bisection depth of any single subinterval.
    pub max_depth: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 0.0,
            rel_tol: 1e-10,
            max_depth: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<const N: usize> {
    pub value: [f64; N],
    /// Summed error estimate (max over components).
    pub error: f64,
    /// Estimate of `∫|f|` per component.
    pub abs_value: [f64; N],
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<const N: usize> {
    lo: f64,
    hi: f64,
    depth: u32,
    value: [f64; N],
    abs_value: [f64; N],
    error: f64,
    /// Roundoff floor included in `error`; bisecting cannot reduce it.
    floor: f64,
}

fn kronrod<const N: usize, F>(f: &mut F, lo: f64, hi: f64, depth: u32) -> Segment<N>
where
    F: FnMut(f64) -> [f64; N],
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);

    let mut res_k = [0.0; N];
    let mut res_g = [0.0; N];
    let mut res_abs = [0.0; N];
    let mut samples = [[0.0; N]; 15];
    for i in 0..N {
        res_k[i] = WGK[7] * fc[i];
        res_g[i] = WG[3] * fc[i];
        res_abs[i] = WGK[7] * fc[i].abs();
    }
    samples[14] = fc;
    for (j, &x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        for i in 0..N {
            res_k[i] += WGK[j] * (f1[i] + f2[i]);
            res_abs[i] += WGK[j] * (f1[i].abs() + f2[i].abs());
            if j % 2 == 1 {
                res_g[i] += WG[j / 2] * (f1[i] + f2[i]);
            }
        }
        samples[2 * j] = f1;
        samples[2 * j + 1] = f2;
    }

    let mut error = 0.0f64;
    let mut floor = 0.0f64;
    let mut value = [0.0; N];
    let mut abs_value = [0.0; N];
    for i in 0..N {
        let mean = 0.5 * res_k[i];
        let mut asc = WGK[7] * (fc[i] - mean).abs();
        for j in 0..7 {
            asc += WGK[j] * ((samples[2 * j][i] - mean).abs() + (samples[2 * j + 1][i] - mean).abs());
        }
        let asc = asc * half.abs();
        let abs_i = res_abs[i] * half.abs();
        let mut err = ((res_k[i] - res_g[i]) * half).abs();
        if asc != 0.0 && err != 0.0 {
            err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
        }
        let min_err = 50.0 * f64::EPSILON * abs_i;
        if abs_i > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && min_err >= err {
            err = min_err;
            floor = floor.max(min_err);
        }
        error = error.max(err);
        value[i] = res_k[i] * half;
        abs_value[i] = abs_i;
    }

    Segment {
        lo,
        hi,
        depth,
        value,
        abs_value,
        error,
        floor,
    }
}

/// Integrate a vector-valued function over `[lo, hi]`.
pub fn integrate_vec<const N: usize, F>(
    mut f: F,
    lo: f64,
    hi: f64,
    opts: &QuadOptions,
) -> Result<QuadResult<N>>
where
    F: FnMut(f64) -> [f64; N],
{
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInput("non-finite integration limits".into()));
    }
    let mut segments = vec![kronrod(&mut f, lo, hi, 0)];
    let mut evaluations = 15;

    loop {
        let mut value = [0.0; N];
        let mut abs_value = [0.0; N];
        let mut error = 0.0;
        let mut floor = 0.0;
        for s in &segments {
            for i in 0..N {
                value[i] += s.value[i];
                abs_value[i] += s.abs_value[i];
            }
            error += s.error;
            floor += s.floor;
        }
        if !value.iter().chain(abs_value.iter()).all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("integrand is not finite".into()));
        }
        let scale = abs_value.iter().fold(0.0f64, |m, v| m.max(*v));
        let target = opts.abs_tol.max(opts.rel_tol * scale);
        // the roundoff floor bounds what bisection can achieve
        if error <= target || error - floor <= target {
            return Ok(QuadResult {
                value,
                error,
                abs_value,
                evaluations,
            });
        }

        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .unwrap();
        let seg = segments[worst];
        let mid = 0.5 * (seg.lo + seg.hi);
        if seg.depth >= opts.max_depth
            || segments.len() >= MAX_SEGMENTS
            || mid <= seg.lo
            || mid >= seg.hi
        {
            return Err(Error::ToleranceNotReached {
                target,
                achieved: error,
            });
        }
        segments[worst] = kronrod(&mut f, seg.lo, mid, seg.depth + 1);
        segments.push(kronrod(&mut f, mid, seg.hi, seg.depth + 1));
        evaluations += 30;
    }
}

/// Scalar convenience wrapper around [`integrate_vec`].
pub fn integrate<F>(mut f: F, lo: f64, hi: f64, opts: &QuadOptions) -> Result<QuadResult<1>>
where
    F: FnMut(f64) -> f64,
{
    integrate_vec(|x| [f(x)], lo, hi, opts)
}

/// Non-adaptive composite 15-point Kronrod rule on `panels` equal pieces.
pub fn composite_kronrod<const N: usize, F>(mut f: F, lo: f64, hi: f64, panels: usize) -> [f64; N]
where
    F: FnMut(f64) -> [f64; N],
{
    let mut total = [0.0; N];
    let width = (hi - lo) / panels as f64;
    for k in 0..panels {
        let a = lo + width * k as f64;
        let b = if k + 1 == panels { hi } else { a + width };
        let seg = kronrod(&mut f, a, b, 0);
        for (t, v) in total.iter_mut().zip(seg.value) {
            *t += v;
        }
    }
    total
}
