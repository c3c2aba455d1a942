//! Grid sampling and file export.
//!
//! A [`FieldGrid`] is a row-major lattice with `t` varying fastest:
//! sample `(ix, it)` lives at index `ix * nt + it`.

mod csv;
mod json;
mod svg;

use std::env;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Complex;
use crate::closedform;
use crate::darboux::{generalized_dt_point, SolutionSample};
use crate::error::{Error, Result};
use crate::seed::SeedConfig;

pub use self::csv::{read_csv, write_csv, write_csv_to};
pub use self::json::{read_json, write_json, write_json_to};
pub use self::svg::{heatmap, render_svg, write_svg_heatmap, Heatmap, HeatmapField, MAX_SVG_CELLS};

/// Environment variable capping the number of grid-evaluation workers.
pub const THREADS_ENV: &str = "ABROGUE_THREADS";

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub nx: usize,
    pub nt: usize,
}

impl GridSpec {
    pub fn new(
        x_min: f64,
        x_max: f64,
        t_min: f64,
        t_max: f64,
        nx: usize,
        nt: usize,
    ) -> Result<Self> {
        let g = GridSpec {
            x_min,
            x_max,
            t_min,
            t_max,
            nx,
            nt,
        };
        g.validate()?;
        Ok(g)
    }

    /// `[-5, 5]²` with 201 nodes per axis; the origin is a node.
    pub fn default_square() -> Self {
        GridSpec {
            x_min: -5.0,
            x_max: 5.0,
            t_min: -5.0,
            t_max: 5.0,
            nx: 201,
            nt: 201,
        }
    }

    /// Square domain `[-half, half]²` with spacing `h` in both directions.
    pub fn square(half: f64, h: f64) -> Result<Self> {
        let n = (2.0 * half / h).round() as usize + 1;
        Self::new(-half, half, -half, half, n, n)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.t_min, self.t_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Grid("bounds must be finite".into()));
        }
        if self.x_max <= self.x_min || self.t_max <= self.t_min {
            return Err(Error::Grid(format!(
                "empty range x=[{}, {}], t=[{}, {}]",
                self.x_min, self.x_max, self.t_min, self.t_max
            )));
        }
        if self.nx < 2 || self.nt < 2 {
            return Err(Error::Grid(format!(
                "need at least 2 nodes per axis, got {}x{}",
                self.nx, self.nt
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nx * self.nt
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn ht(&self) -> f64 {
        (self.t_max - self.t_min) / (self.nt - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    pub fn t(&self, j: usize) -> f64 {
        self.t_min + (self.t_max - self.t_min) * j as f64 / (self.nt - 1) as f64
    }

    /// Same domain with every spacing halved.
    pub fn refined(&self) -> Self {
        GridSpec {
            nx: 2 * (self.nx - 1) + 1,
            nt: 2 * (self.nt - 1) + 1,
            ..*self
        }
    }
}

/// How fields are computed at each node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Explicit first/second-order formulas.
    Closed,
    /// The generalized Darboux chain.
    Engine,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Engine => "engine",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "engine" => Ok(Method::Engine),
            other => Err(Error::Usage(format!("unknown method {other:?}"))),
        }
    }
}

/// Parameters echoed into every exported file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridMeta {
    pub a: f64,
    pub order: usize,
    /// `(m_k, n_k)` for `k = 1..order-1`.
    pub s: Vec<(f64, f64)>,
    pub method: String,
    pub version: String,
}

impl GridMeta {
    pub fn new(seed: &SeedConfig, method: &str) -> Self {
        GridMeta {
            a: seed.a,
            order: seed.order,
            s: seed.s.iter().map(|z| (z.re, z.im)).collect(),
            method: method.to_string(),
            version: TOOL_VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid {
    pub spec: GridSpec,
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
    pub samples: Vec<SolutionSample>,
    pub meta: GridMeta,
    /// False when `A_t` was not available (e.g. read from a file without it).
    pub has_derivative: bool,
}

impl FieldGrid {
    /// Evaluates `eval(x, t)` at every node; rows are distributed over the
    /// worker pool and reassembled in order.
    pub fn from_fn<F>(spec: GridSpec, meta: GridMeta, eval: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Result<SolutionSample> + Sync,
    {
        spec.validate()?;
        let xs: Vec<f64> = (0..spec.nx).map(|i| spec.x(i)).collect();
        let ts: Vec<f64> = (0..spec.nt).map(|j| spec.t(j)).collect();
        let row =
            |&x: &f64| -> Result<Vec<SolutionSample>> { ts.iter().map(|&t| eval(x, t)).collect() };
        let rows: Result<Vec<Vec<SolutionSample>>> = with_pool(|| xs.par_iter().map(row).collect());
        let samples = rows?.into_iter().flatten().collect();
        Ok(FieldGrid {
            spec,
            xs,
            ts,
            samples,
            meta,
            has_derivative: true,
        })
    }

    pub fn at(&self, ix: usize, it: usize) -> &SolutionSample {
        &self.samples[ix * self.spec.nt + it]
    }

    /// `|A|` in lattice order.
    pub fn abs_a(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.a.val.norm()).collect()
    }

    pub fn b(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.b).collect()
    }

    /// Checks that stored coordinates are evenly spaced (relative 1e-9).
    pub fn check_uniform(&self) -> Result<()> {
        for (name, v) in [("x", &self.xs), ("t", &self.ts)] {
            if v.len() < 2 {
                continue;
            }
            let h = (v[v.len() - 1] - v[0]) / (v.len() - 1) as f64;
            for w in v.windows(2) {
                if ((w[1] - w[0]) - h).abs() > 1e-9 * h.abs().max(1e-300) {
                    return Err(Error::Grid(format!("non-uniform {name} spacing")));
                }
            }
        }
        Ok(())
    }
}

/// What to evaluate and where.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: SeedConfig,
    pub grid: GridSpec,
    pub method: Method,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.seed.validate()?;
        self.grid.validate()?;
        if self.method == Method::Closed && self.seed.order > 2 {
            return Err(Error::Usage(format!(
                "method 'closed' supports orders 1 and 2, got {}",
                self.seed.order
            )));
        }
        Ok(())
    }

    pub fn with_grid(&self, grid: GridSpec) -> Self {
        RunConfig {
            grid,
            ..self.clone()
        }
    }
}

/// Evaluates the top-level fields (`A[N]`, `B[N]`) on the lattice.
pub fn grid_evaluate(cfg: &RunConfig) -> Result<FieldGrid> {
    cfg.validate()?;
    let seed = &cfg.seed;
    let meta = GridMeta::new(seed, cfg.method.as_str());
    let order = seed.order;
    match cfg.method {
        Method::Engine => FieldGrid::from_fn(cfg.grid, meta, |x, t| {
            let levels = generalized_dt_point(seed, x, t)?;
            Ok(levels[order])
        }),
        Method::Closed => {
            let s1 = seed.s.first().copied().unwrap_or(Complex::new(0.0, 0.0));
            FieldGrid::from_fn(cfg.grid, meta, move |x, t| {
                let (a, b) = if order == 1 {
                    closedform::first_order(seed.a, x, t)
                } else {
                    closedform::second_order(seed.a, s1.re, s1.im, x, t)?
                };
                Ok(SolutionSample { a, b, level: order })
            })
        }
    }
}

fn with_pool<T: Send>(job: impl FnOnce() -> T + Send) -> T {
    let cap = env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0);
    match cap {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        },
        None => job(),
    }
}
