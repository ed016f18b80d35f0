use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tricenter_core::{Error, Point2, Result, SideLengths, Triangle};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Parser)]
#[command(name = "tricenter", version, about = "Electrostatic and Riesz-potential centers of a triangle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output encoding. Each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Solver tolerance, in [1e-14, 1e-4]. For `verify` it replaces every
    /// check tolerance instead and may be any positive number.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TriangleArgs {
    /// Three vertices `x,y x,y x,y`.
    #[arg(long, num_args = 3, value_name = "X,Y", allow_hyphen_values = true)]
    pub vertices: Option<Vec<String>>,

    /// Three side lengths `a,b,c`; the triangle is placed with B at the
    /// origin and C on the positive x axis.
    #[arg(long, value_name = "A,B,C")]
    pub sides: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Electrostatic center with the lambda state and identity checks.
    Center {
        #[command(flatten)]
        triangle: TriangleArgs,
    },
    /// Stationary point of the r^p potential.
    RpCenter {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Riesz exponent.
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
    },
    /// r^p centers over an evenly spaced range of exponents.
    Arc {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
        p_min: f64,
        #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
        p_max: f64,
        #[arg(long, default_value_t = 81)]
        steps: usize,
    },
    /// Points of the lambda-parameterized curve, geometrically spaced, plus
    /// the row at the root lambda.
    LambdaCurve {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long, default_value_t = 1e-3)]
        lambda_min: f64,
        #[arg(long, default_value_t = 1e3)]
        lambda_max: f64,
        #[arg(long, default_value_t = 61)]
        steps: usize,
    },
    /// Potential and field on a grid over the padded bounding box (CSV).
    ///
    /// Columns are `x,y,V,Ex,Ey,inside`. Points on or very near an edge get
    /// V by quadrature and empty Ex, Ey cells, since the field is unbounded
    /// there. A cell that could not be evaluated holds `NaN`. `inside` is 1
    /// for interior points and 0 otherwise.
    Grid {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Points per axis, 8 to 2048.
        #[arg(long, default_value_t = 128)]
        n: usize,
    },
    /// Reproduce the reference values and exit non-zero on any mismatch.
    Verify {
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
    /// Distance from the center to side BC, for encyclopedia lookup.
    SearchValue {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Decimal places, at most 15.
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },
    /// Range of (lambda - lambda0)/t over random triangles.
    Survey {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_list(s: &str, expected: usize, what: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(Error::InvalidInput(format!(
            "{what} `{s}` needs {expected} comma-separated numbers"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::InvalidInput(format!("`{p}` in {what} is not a finite number")))
        })
        .collect()
}

impl TriangleArgs {
    pub fn triangle(&self) -> Result<Triangle> {
        if let Some(v) = &self.vertices {
            let pts = v
                .iter()
                .map(|s| parse_list(s, 2, "vertex").map(|c| Point2::new(c[0], c[1])))
                .collect::<Result<Vec<_>>>()?;
            return Triangle::new(pts[0], pts[1], pts[2]);
        }
        let s = self.sides.as_deref().expect("clap enforces one triangle form");
        let c = parse_list(s, 3, "sides")?;
        Triangle::from_sides(c[0], c[1], c[2])
    }

    pub fn side_lengths(&self) -> Result<SideLengths> {
        if let Some(s) = &self.sides {
            let c = parse_list(s, 3, "sides")?;
            return SideLengths::new(c[0], c[1], c[2]);
        }
        Ok(self.triangle()?.side_lengths())
    }
}

impl Cli {
    /// Solver tolerance after range checking.
    pub fn solver_tol(&self) -> Result<f64> {
        let tol = self.tol.unwrap_or(DEFAULT_TOL);
        if !(1e-14..=1e-4).contains(&tol) {
            return Err(Error::InvalidInput(format!("tolerance {tol:e} outside [1e-14, 1e-4]")));
        }
        Ok(tol)
    }
}
