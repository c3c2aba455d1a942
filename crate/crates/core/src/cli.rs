//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation failure or runtime error, 2 usage error.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Complex;
use crate::error::{Error, Result};
use crate::io::{
    grid_evaluate, render_svg, write_csv, write_csv_to, write_json, write_json_to,
    write_svg_heatmap, FieldGrid, GridSpec, HeatmapField, Method, RunConfig,
};
use crate::seed::{eigenfunction_jet, SeedConfig};
use crate::validate::{
    normalization_residual, pde_residual, peak_analysis, zero_curvature_residual, NOISE_FLOOR,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Accepted band for estimated convergence orders.
const ORDER_BAND: (f64, f64) = (1.8, 2.2);
const NORMALIZATION_TOL: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(
    name = "abrogue",
    version,
    about = "Rogue waves of the AB system via the generalized Darboux transformation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate A[N], B[N] on a grid and export it.
    Grid(GridArgs),
    /// Check PDE, normalization and zero-curvature residuals.
    Validate(ValidateArgs),
    /// Report local maxima of |A|.
    Peaks(PeaksArgs),
    /// Dump eigenfunction jet coefficients at one point.
    Coeffs(CoeffsArgs),
}

#[derive(Args, Debug)]
struct SolutionArgs {
    /// Background parameter a.
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    a: f64,
    /// Solution order N.
    #[arg(long, default_value_t = 1)]
    order: usize,
    /// Real part of s_1.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    m1: f64,
    /// Imaginary part of s_1.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    n1: f64,
    /// Set s_k = re + i im (repeatable; overrides --m1/--n1 for k = 1).
    #[arg(long = "s", num_args = 3, value_names = ["K", "RE", "IM"], allow_negative_numbers = true)]
    s: Vec<String>,
}

#[derive(Args, Debug)]
struct DomainArgs {
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], default_values_t = [-5.0, 5.0], allow_negative_numbers = true)]
    xrange: Vec<f64>,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], default_values_t = [-5.0, 5.0], allow_negative_numbers = true)]
    trange: Vec<f64>,
    #[arg(long, default_value_t = 201)]
    nx: usize,
    #[arg(long, default_value_t = 201)]
    nt: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Engine)]
    method: MethodArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Closed,
    Engine,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum GridFormat {
    Csv,
    Json,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FieldArg {
    #[value(name = "abs_A")]
    AbsA,
    #[value(name = "B")]
    B,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
    format: GridFormat,
    /// Field drawn by the SVG heatmap.
    #[arg(long, value_enum, default_value_t = FieldArg::AbsA)]
    field: FieldArg,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    #[command(flatten)]
    domain: DomainArgs,
    /// Spectral parameter for the zero-curvature check.
    #[arg(long, num_args = 2, value_names = ["RE", "IM"], default_values_t = [0.0, 0.5], allow_negative_numbers = true)]
    lambda: Vec<f64>,
    /// Optional absolute bound on residuals of the refined grid.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct PeaksArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t: f64,
}

impl SolutionArgs {
    fn seed(&self) -> Result<SeedConfig> {
        if self.order == 0 {
            return Err(Error::Usage("--order must be at least 1".into()));
        }
        let mut s = vec![Complex::new(0.0, 0.0); self.order - 1];
        if self.m1 != 0.0 || self.n1 != 0.0 {
            let first = s
                .first_mut()
                .ok_or_else(|| Error::Usage("--m1/--n1 need --order 2 or higher".into()))?;
            *first = Complex::new(self.m1, self.n1);
        }
        for triple in self.s.chunks(3) {
            let k: usize = triple[0].parse().map_err(|_| {
                Error::Usage(format!(
                    "--s index {:?} is not a positive integer",
                    triple[0]
                ))
            })?;
            let num = |v: &str| {
                v.parse::<f64>()
                    .map_err(|_| Error::Usage(format!("--s value {v:?} is not a number")))
            };
            let z = Complex::new(num(&triple[1])?, num(&triple[2])?);
            if k == 0 || k >= self.order {
                return Err(Error::Usage(format!(
                    "--s index {k} out of range 1..{} for order {}",
                    self.order.saturating_sub(1),
                    self.order
                )));
            }
            s[k - 1] = z;
        }
        SeedConfig::new(self.a, self.order, s).map_err(|e| Error::Usage(e.to_string()))
    }
}

impl DomainArgs {
    fn spec(&self) -> Result<GridSpec> {
        GridSpec::new(
            self.xrange[0],
            self.xrange[1],
            self.trange[0],
            self.trange[1],
            self.nx,
            self.nt,
        )
        .map_err(|e| Error::Usage(e.to_string()))
    }

    fn method(&self) -> Method {
        match self.method {
            MethodArg::Closed => Method::Closed,
            MethodArg::Engine => Method::Engine,
        }
    }
}

fn run_config(solution: &SolutionArgs, domain: &DomainArgs) -> Result<RunConfig> {
    let cfg = RunConfig {
        seed: solution.seed()?,
        grid: domain.spec()?,
        method: domain.method(),
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Grid(args) => run_grid(args),
        Command::Validate(args) => run_validate(args),
        Command::Peaks(args) => run_peaks(args),
        Command::Coeffs(args) => run_coeffs(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("abrogue: {e}");
            match e {
                Error::Usage(_) | Error::Config(_) | Error::Grid(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}

fn stdout_err(e: io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

fn run_grid(args: &GridArgs) -> Result<i32> {
    let cfg = run_config(&args.solution, &args.domain)?;
    let grid = grid_evaluate(&cfg)?;
    let field = match args.field {
        FieldArg::AbsA => HeatmapField::AbsA,
        FieldArg::B => HeatmapField::B,
    };
    match &args.out {
        Some(path) => match args.format {
            GridFormat::Csv => write_csv(&grid, path)?,
            GridFormat::Json => write_json(&grid, path)?,
            GridFormat::Svg => write_svg_heatmap(&grid, field, path)?,
        },
        None => {
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            match args.format {
                GridFormat::Csv => write_csv_to(&grid, &mut out),
                GridFormat::Json => write_json_to(&grid, &mut out),
                GridFormat::Svg => out.write_all(render_svg(&grid, field).as_bytes()),
            }
            .and_then(|_| out.flush())
            .map_err(stdout_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn in_band(p: f64) -> bool {
    (ORDER_BAND.0..=ORDER_BAND.1).contains(&p)
}

fn run_validate(args: &ValidateArgs) -> Result<i32> {
    let cfg = run_config(&args.solution, &args.domain)?;
    let lambda = Complex::new(args.lambda[0], args.lambda[1]);
    let coarse = grid_evaluate(&cfg)?;
    let fine = grid_evaluate(&cfg.with_grid(cfg.grid.refined()))?;
    let report = pde_residual(&coarse, Some(&fine))?;
    let norm_fine = normalization_residual(&fine)?;
    let zc_coarse = zero_curvature_residual(&coarse, lambda)?;
    let zc_fine = zero_curvature_residual(&fine, lambda)?;
    let zc_order = (zc_fine > NOISE_FLOOR).then(|| (zc_coarse / zc_fine).log2());

    let mut failures = Vec::new();
    for (name, p) in [
        ("convergence_order_eq1", report.convergence_order_eq1),
        ("convergence_order_eq2", report.convergence_order_eq2),
        ("zero_curvature_order", zc_order),
    ] {
        if let Some(p) = p {
            if !in_band(p) {
                failures.push(format!(
                    "{name} {p:.3} outside [{}, {}]",
                    ORDER_BAND.0, ORDER_BAND.1
                ));
            }
        }
    }
    let norm = report.normalization_dev.unwrap_or(0.0).max(norm_fine);
    if norm >= NORMALIZATION_TOL {
        failures.push(format!(
            "normalization_dev {norm:.3e} >= {NORMALIZATION_TOL:e}"
        ));
    }
    if let Some(tol) = args.tol {
        for (name, v) in [
            (
                "refined_residual_eq1",
                report.refined_residual_eq1.unwrap_or(0.0),
            ),
            (
                "refined_residual_eq2",
                report.refined_residual_eq2.unwrap_or(0.0),
            ),
            ("zero_curvature_refined", zc_fine),
        ] {
            if v > tol {
                failures.push(format!("{name} {v:.3e} > tol {tol:e}"));
            }
        }
    }

    let status = if failures.is_empty() { "pass" } else { "fail" };
    match args.format {
        ReportFormat::Text => {
            print!("{}", report.to_key_value());
            let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6e}"));
            println!("zero_curvature: {zc_coarse:.6e}");
            println!("zero_curvature_refined: {zc_fine:.6e}");
            println!("zero_curvature_order: {}", opt(zc_order));
            for f in &failures {
                println!("failure: {f}");
            }
            println!("status: {status}");
        }
        ReportFormat::Json => {
            let v = serde_json::json!({
                "report": report,
                "zero_curvature": zc_coarse,
                "zero_curvature_refined": zc_fine,
                "zero_curvature_order": zc_order,
                "failures": failures,
                "status": status,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("report serializes")
            );
        }
    }
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn run_peaks(args: &PeaksArgs) -> Result<i32> {
    let cfg = run_config(&args.solution, &args.domain)?;
    let grid: FieldGrid = grid_evaluate(&cfg)?;
    let report = peak_analysis(&grid);
    match args.format {
        ReportFormat::Text => print!("{}", report.to_key_value()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
    Ok(EXIT_OK)
}

fn run_coeffs(args: &CoeffsArgs) -> Result<i32> {
    let seed = args.solution.seed()?;
    let (psi, phi) = eigenfunction_jet(&seed, args.x, args.t)?;
    println!(
        "# x: {}  t: {}  a: {}  order: {}",
        args.x, args.t, seed.a, seed.order
    );
    println!("power,re_psi,im_psi,re_phi,im_phi");
    for p in (0..=psi.max_order()).step_by(2) {
        let (u, v) = match (psi.coeff(p), phi.coeff(p)) {
            (Some(u), Some(v)) => (u.val, v.val),
            _ => continue,
        };
        println!("{p},{},{},{},{}", u.re, u.im, v.re, v.im);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("abrogue").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults_reproduce_first_order_figure() {
        let Command::Grid(g) = parse(&["grid"]).command else {
            panic!("expected grid")
        };
        let cfg = run_config(&g.solution, &g.domain).unwrap();
        assert_eq!(cfg.seed.a, 0.1);
        assert_eq!(cfg.seed.order, 1);
        assert_eq!(cfg.grid, GridSpec::default_square());
    }

    #[test]
    fn s_flags_fill_coefficients() {
        let Command::Grid(g) =
            parse(&["grid", "--order", "3", "--m1", "2", "--s", "2", "-1.5", "4"]).command
        else {
            panic!("expected grid")
        };
        let seed = g.solution.seed().unwrap();
        assert_eq!(
            seed.s,
            vec![Complex::new(2.0, 0.0), Complex::new(-1.5, 4.0)]
        );
    }

    #[test]
    fn out_of_range_s_is_usage_error() {
        let Command::Grid(g) = parse(&["grid", "--order", "2", "--s", "2", "0", "0"]).command
        else {
            panic!("expected grid")
        };
        assert!(matches!(g.solution.seed(), Err(Error::Usage(_))));
        let Command::Grid(g) = parse(&["grid", "--m1", "3"]).command else {
            panic!("expected grid")
        };
        assert!(matches!(g.solution.seed(), Err(Error::Usage(_))));
    }

    #[test]
    fn negative_ranges_parse() {
        let Command::Peaks(p) = parse(&["peaks", "--xrange", "-15", "15", "--a", "-0.5"]).command
        else {
            panic!("expected peaks")
        };
        assert_eq!(p.domain.xrange, vec![-15.0, 15.0]);
        assert_eq!(p.solution.a, -0.5);
    }

    #[test]
    fn bad_flags_exit_with_usage_code() {
        assert_eq!(cli_main(["abrogue", "grid", "--nx", "many"]), EXIT_USAGE);
        assert_eq!(cli_main(["abrogue", "frobnicate"]), EXIT_USAGE);
        assert_eq!(cli_main(["abrogue", "grid", "--nx", "1"]), EXIT_USAGE);
        assert_eq!(
            cli_main(["abrogue", "grid", "--order", "3", "--method", "closed"]),
            EXIT_USAGE
        );
    }
}
