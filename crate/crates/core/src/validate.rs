//! Finite-difference checks that a sampled grid solves the AB system.
//!
//! Residuals are max-norms over interior nodes. Finite differences are used
//! only here; everywhere else `t`-derivatives come from the dual channel.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Complex, Mat2};
use crate::error::{Error, Result};
use crate::io::{FieldGrid, GridSpec};
use crate::seed::{eigenfunction_generic, lax_u, lax_v, plane_wave_seed};

/// Residuals below this are treated as round-off; no order is estimated.
pub const NOISE_FLOOR: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    /// `max |A_xt - AB|`.
    pub residual_eq1: f64,
    /// `max |B_x + ½(|A|²)_t|`.
    pub residual_eq2: f64,
    /// `max ||A_t|² + B² - 1|`, absent without a derivative channel.
    pub normalization_dev: Option<f64>,
    /// Residuals on the refined grid, when one was supplied.
    pub refined_residual_eq1: Option<f64>,
    pub refined_residual_eq2: Option<f64>,
    /// `log2(coarse / fine)`; `None` at the noise floor or without refinement.
    pub convergence_order_eq1: Option<f64>,
    pub convergence_order_eq2: Option<f64>,
    pub grid_meta: GridSpec,
}

impl ValidationReport {
    pub fn to_key_value(&self) -> String {
        let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6e}"));
        let mut s = String::new();
        let g = &self.grid_meta;
        let _ = writeln!(
            s,
            "grid: [{}, {}] x [{}, {}], {}x{}",
            g.x_min, g.x_max, g.t_min, g.t_max, g.nx, g.nt
        );
        let _ = writeln!(s, "residual_eq1: {:.6e}", self.residual_eq1);
        let _ = writeln!(s, "residual_eq2: {:.6e}", self.residual_eq2);
        let _ = writeln!(s, "normalization_dev: {}", opt(self.normalization_dev));
        let _ = writeln!(
            s,
            "refined_residual_eq1: {}",
            opt(self.refined_residual_eq1)
        );
        let _ = writeln!(
            s,
            "refined_residual_eq2: {}",
            opt(self.refined_residual_eq2)
        );
        let _ = writeln!(
            s,
            "convergence_order_eq1: {}",
            opt(self.convergence_order_eq1)
        );
        let _ = writeln!(
            s,
            "convergence_order_eq2: {}",
            opt(self.convergence_order_eq2)
        );
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Peak {
    pub x: f64,
    pub t: f64,
    pub amplitude: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeakReport {
    /// Sorted by amplitude, largest first.
    pub maxima: Vec<Peak>,
    pub count: usize,
    /// Largest `|A|` anywhere on the grid, boundary included.
    pub global_max: f64,
}

impl PeakReport {
    pub fn to_key_value(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "count: {}", self.count);
        let _ = writeln!(s, "global_max: {}", self.global_max);
        for (k, p) in self.maxima.iter().enumerate() {
            let _ = writeln!(
                s,
                "peak{}: x={} t={} amplitude={}",
                k + 1,
                p.x,
                p.t,
                p.amplitude
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check_stencil_grid(grid: &FieldGrid) -> Result<()> {
    if grid.spec.nx < 5 || grid.spec.nt < 5 {
        return Err(Error::Grid(format!(
            "residuals need at least 5x5 nodes, got {}x{}",
            grid.spec.nx, grid.spec.nt
        )));
    }
    if grid.samples.len() != grid.spec.len() {
        return Err(Error::Grid("sample count does not match grid size".into()));
    }
    grid.check_uniform()
}

fn spacing(grid: &FieldGrid) -> (f64, f64) {
    let (xs, ts) = (&grid.xs, &grid.ts);
    (
        (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64,
        (ts[ts.len() - 1] - ts[0]) / (ts.len() - 1) as f64,
    )
}

/// Max over interior nodes of `f(ix, it)`, rows in parallel.
fn interior_max(grid: &FieldGrid, f: impl Fn(usize, usize) -> f64 + Sync) -> f64 {
    let (nx, nt) = (grid.spec.nx, grid.spec.nt);
    (1..nx - 1)
        .into_par_iter()
        .map(|i| (1..nt - 1).map(|j| f(i, j)).fold(0.0, f64::max))
        .reduce(|| 0.0, f64::max)
}

fn eq_residuals(grid: &FieldGrid) -> (f64, f64) {
    let (hx, ht) = spacing(grid);
    let a = |i: usize, j: usize| grid.at(i, j).a.val;
    let b = |i: usize, j: usize| grid.at(i, j).b;
    let r1 = interior_max(grid, |i, j| {
        let axt = (a(i + 1, j + 1) - a(i + 1, j - 1) - a(i - 1, j + 1) + a(i - 1, j - 1))
            / (4.0 * hx * ht);
        (axt - a(i, j) * b(i, j)).norm()
    });
    let r2 = interior_max(grid, |i, j| {
        let bx = (b(i + 1, j) - b(i - 1, j)) / (2.0 * hx);
        let mod_t = (a(i, j + 1).norm_sqr() - a(i, j - 1).norm_sqr()) / (2.0 * ht);
        (bx + 0.5 * mod_t).abs()
    });
    (r1, r2)
}

fn order(coarse: f64, fine: f64) -> Option<f64> {
    (fine > NOISE_FLOOR && coarse > NOISE_FLOOR).then(|| (coarse / fine).log2())
}

/// Residuals of `A_xt = AB` and `B_x = -½(|A|²)_t`.
///
/// When `refined` is the same domain at half the spacing, convergence orders
/// are estimated from the pair.
pub fn pde_residual(grid: &FieldGrid, refined: Option<&FieldGrid>) -> Result<ValidationReport> {
    check_stencil_grid(grid)?;
    let (r1, r2) = eq_residuals(grid);
    let normalization_dev = if grid.has_derivative {
        Some(normalization_residual(grid)?)
    } else {
        None
    };
    let mut report = ValidationReport {
        residual_eq1: r1,
        residual_eq2: r2,
        normalization_dev,
        refined_residual_eq1: None,
        refined_residual_eq2: None,
        convergence_order_eq1: None,
        convergence_order_eq2: None,
        grid_meta: grid.spec,
    };
    if let Some(fine) = refined {
        check_stencil_grid(fine)?;
        let want = grid.spec.refined();
        let same = |p: f64, q: f64| (p - q).abs() <= 1e-12 * p.abs().max(q.abs()).max(1.0);
        let matches = fine.spec.nx == want.nx
            && fine.spec.nt == want.nt
            && same(fine.spec.x_min, want.x_min)
            && same(fine.spec.x_max, want.x_max)
            && same(fine.spec.t_min, want.t_min)
            && same(fine.spec.t_max, want.t_max);
        if !matches {
            return Err(Error::Grid(
                "refined grid is not a 2x refinement of the base grid".into(),
            ));
        }
        let (f1, f2) = eq_residuals(fine);
        report.refined_residual_eq1 = Some(f1);
        report.refined_residual_eq2 = Some(f2);
        report.convergence_order_eq1 = order(r1, f1);
        report.convergence_order_eq2 = order(r2, f2);
    }
    Ok(report)
}

/// `max ||A_t|² + B² - 1|` over every node, using the analytic `A_t`.
pub fn normalization_residual(grid: &FieldGrid) -> Result<f64> {
    if !grid.has_derivative {
        return Err(Error::Grid(
            "normalization check needs the A_t channel".into(),
        ));
    }
    Ok(grid
        .samples
        .par_iter()
        .map(|s| s.normalization_dev().abs())
        .reduce(|| 0.0, f64::max))
}

/// `max |U_t - V_x + UV - VU|` over interior nodes, entrywise.
pub fn zero_curvature_residual(grid: &FieldGrid, lambda: Complex) -> Result<f64> {
    if lambda == Complex::new(0.0, 0.0) {
        return Err(Error::SingularV);
    }
    if !grid.has_derivative {
        return Err(Error::Grid(
            "zero-curvature check needs the A_t channel".into(),
        ));
    }
    check_stencil_grid(grid)?;
    let (hx, ht) = spacing(grid);
    let u = |i: usize, j: usize| lax_u(grid.at(i, j).a.val, lambda);
    let v = |i: usize, j: usize| {
        let s = grid.at(i, j);
        lax_v(s.a.dt, s.b, lambda)
    };
    Ok(interior_max(grid, |i, j| {
        let ut = (u(i, j + 1) - u(i, j - 1)).scale(&Complex::new(0.5 / ht, 0.0));
        let vx = (v(i + 1, j) - v(i - 1, j)).scale(&Complex::new(0.5 / hx, 0.0));
        let (uu, vv) = (u(i, j), v(i, j));
        let z: Mat2<Complex> = ut - vx + &uu * &vv - &vv * &uu;
        z.m.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }))
}

/// Lax-pair defect `max |(Ψ_x - UΨ, Ψ_t - VΨ)|` of the seed eigenfunction at
/// a generic `λ`, by central differences of step `h`, relative to
/// `max(1, |Ψ|)` since `Ψ` grows exponentially off the real axis.
pub fn eigenfunction_lax_residual(
    a: f64,
    lambda: Complex,
    x: f64,
    t: f64,
    s: &[Complex],
    h: f64,
) -> Result<f64> {
    let ev = |x: f64, t: f64| -> Result<[Complex; 2]> {
        let e = eigenfunction_generic(a, lambda, x, t, s)?;
        Ok([e.psi.val, e.phi.val])
    };
    let diff =
        |p: [Complex; 2], m: [Complex; 2]| [(p[0] - m[0]) / (2.0 * h), (p[1] - m[1]) / (2.0 * h)];
    let p0 = ev(x, t)?;
    let dx = diff(ev(x + h, t)?, ev(x - h, t)?);
    let dt = diff(ev(x, t + h)?, ev(x, t - h)?);
    let (a0, b0) = plane_wave_seed(a, x, t);
    let u = lax_u(a0.val, lambda).apply(&p0);
    let v = lax_v(a0.dt, b0, lambda).apply(&p0);
    let scale = (p0[0].norm_sqr() + p0[1].norm_sqr()).sqrt().max(1.0);
    Ok([dx[0] - u[0], dx[1] - u[1], dt[0] - v[0], dt[1] - v[1]]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        / scale)
}

/// Strict local maxima of `values` (x-major, `nt` per row) over the
/// 8-neighbourhood, boundary ring excluded. A plateau of exactly equal
/// values counts once, at its smallest `(ix, it)`.
pub fn local_maxima(values: &[f64], nx: usize, nt: usize) -> Vec<(usize, usize)> {
    let idx = |i: usize, j: usize| i * nt + j;
    let neighbours = |i: usize, j: usize| {
        let mut out = Vec::with_capacity(8);
        for di in -1i64..=1 {
            for dj in -1i64..=1 {
                let (p, q) = (i as i64 + di, j as i64 + dj);
                if (di, dj) != (0, 0) && p >= 0 && q >= 0 && (p as usize) < nx && (q as usize) < nt
                {
                    out.push((p as usize, q as usize));
                }
            }
        }
        out
    };
    let interior = |i: usize, j: usize| i > 0 && j > 0 && i + 1 < nx && j + 1 < nt;
    let mut seen = vec![false; values.len()];
    let mut found = Vec::new();
    for i in 1..nx.saturating_sub(1) {
        for j in 1..nt.saturating_sub(1) {
            let v = values[idx(i, j)];
            if seen[idx(i, j)] || !v.is_finite() {
                continue;
            }
            if neighbours(i, j).iter().any(|&(p, q)| values[idx(p, q)] > v) {
                continue;
            }
            // flood the plateau of exact ties
            let mut stack = vec![(i, j)];
            let mut cells = Vec::new();
            seen[idx(i, j)] = true;
            let mut is_max = true;
            while let Some((p, q)) = stack.pop() {
                cells.push((p, q));
                is_max &= interior(p, q);
                for (r, s) in neighbours(p, q) {
                    let w = values[idx(r, s)];
                    if w > v {
                        is_max = false;
                    } else if w == v && !seen[idx(r, s)] {
                        seen[idx(r, s)] = true;
                        stack.push((r, s));
                    }
                }
            }
            if is_max {
                found.push(*cells.iter().min().expect("plateau is non-empty"));
            }
        }
    }
    found
}

/// Local maxima of `|A|`. The grid should resolve each peak over at least
/// three cells per axis.
pub fn peak_analysis(grid: &FieldGrid) -> PeakReport {
    let values = grid.abs_a();
    let (nx, nt) = (grid.spec.nx, grid.spec.nt);
    let mut maxima: Vec<Peak> = local_maxima(&values, nx, nt)
        .into_iter()
        .map(|(i, j)| Peak {
            x: grid.xs[i],
            t: grid.ts[j],
            amplitude: values[i * nt + j],
        })
        .collect();
    maxima.sort_by(|p, q| q.amplitude.total_cmp(&p.amplitude));
    let global_max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    PeakReport {
        count: maxima.len(),
        maxima,
        global_max,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::SolutionSample;
    use crate::io::{grid_evaluate, GridMeta, Method, RunConfig};
    use crate::seed::SeedConfig;

    fn seed_grid(a: f64, half: f64, h: f64) -> FieldGrid {
        let spec = GridSpec::square(half, h).unwrap();
        let meta = GridMeta::new(&SeedConfig::fundamental(a, 1).unwrap(), "seed");
        FieldGrid::from_fn(spec, meta, |x, t| {
            let (a0, b0) = plane_wave_seed(a, x, t);
            Ok(SolutionSample {
                a: a0,
                b: b0,
                level: 0,
            })
        })
        .unwrap()
    }

    fn first_order_grid(spec: GridSpec) -> FieldGrid {
        let cfg = RunConfig {
            seed: SeedConfig::fundamental(0.1, 1).unwrap(),
            grid: spec,
            method: Method::Closed,
        };
        grid_evaluate(&cfg).unwrap()
    }

    #[test]
    fn seed_grid_residuals_small() {
        // a = 0 has no x-dependence, so every stencil is exact
        let g = seed_grid(0.0, 1.0, 0.01);
        let r = pde_residual(&g, None).unwrap();
        assert!(r.residual_eq1 < 1e-10 && r.residual_eq2 < 1e-10);
        assert!(r.normalization_dev.unwrap() < 1e-12);

        // otherwise the cross stencil leaves |A_xt|(k²+ω²)h²/6
        let g = seed_grid(0.1, 1.0, 0.005);
        let r = pde_residual(&g, None).unwrap();
        assert!(r.residual_eq1 < 1e-6, "{}", r.residual_eq1);
        assert!(r.residual_eq2 < 1e-10, "{}", r.residual_eq2);
        assert!(r.normalization_dev.unwrap() < 1e-12);
        let g = seed_grid(0.1, 0.2, 0.002);
        let z = zero_curvature_residual(&g, Complex::new(0.2, 0.5)).unwrap();
        assert!(z < 1e-6, "{z}");
    }

    #[test]
    fn first_order_converges_quadratically() {
        let spec = GridSpec::square(5.0, 0.05).unwrap();
        let coarse = first_order_grid(spec);
        let fine = first_order_grid(spec.refined());
        let r = pde_residual(&coarse, Some(&fine)).unwrap();
        // truncation error is about 5.9 h² at the peak
        assert!(r.residual_eq1 < 1.6e-2, "{}", r.residual_eq1);
        let ratio = r.residual_eq1 / r.refined_residual_eq1.unwrap();
        assert!((ratio - 4.0).abs() < 0.2, "{ratio}");
        for p in [
            r.convergence_order_eq1.unwrap(),
            r.convergence_order_eq2.unwrap(),
        ] {
            assert!((1.8..=2.2).contains(&p), "order {p}");
        }
    }

    #[test]
    fn zero_curvature_decays_quadratically() {
        let coarse = first_order_grid(GridSpec::square(3.0, 0.04).unwrap());
        let fine = first_order_grid(GridSpec::square(3.0, 0.02).unwrap());
        let lam = Complex::new(0.0, 0.5);
        let (p, q) = (
            zero_curvature_residual(&coarse, lam).unwrap(),
            zero_curvature_residual(&fine, lam).unwrap(),
        );
        assert!(q < 1e-3, "{q}");
        assert!(((p / q).log2() - 2.0).abs() < 0.2, "{p} {q}");
    }

    #[test]
    fn injected_b_fault_detected() {
        let mut g = first_order_grid(GridSpec::square(2.0, 0.05).unwrap());
        let nt = g.spec.nt;
        let k = 40 * nt + 40;
        g.samples[k].b += 0.01;
        let r = pde_residual(&g, None).unwrap();
        assert!(r.residual_eq2 >= 0.009, "{}", r.residual_eq2);
    }

    #[test]
    fn injected_at_fault_detected() {
        let mut g = first_order_grid(GridSpec::square(2.0, 0.05).unwrap());
        assert!(normalization_residual(&g).unwrap() < 1e-8);
        for s in &mut g.samples {
            s.a.dt *= 1.01;
        }
        let n = normalization_residual(&g).unwrap();
        assert!((n - 0.0201).abs() < 2e-3, "{n}");
    }

    #[test]
    fn normalization_independent_of_spacing() {
        let coarse = first_order_grid(GridSpec::new(-2.0, 2.0, -2.0, 2.0, 5, 5).unwrap());
        let fine = first_order_grid(GridSpec::new(-2.0, 2.0, -2.0, 2.0, 41, 41).unwrap());
        let (p, q) = (
            normalization_residual(&coarse).unwrap(),
            normalization_residual(&fine).unwrap(),
        );
        assert!(p < 1e-10 && q < 1e-10);
        assert!((p - q).abs() < 1e-10);
    }

    #[test]
    fn missing_derivative_channel_is_an_error() {
        let mut g = seed_grid(0.0, 1.0, 0.25);
        g.has_derivative = false;
        assert!(normalization_residual(&g).is_err());
        assert!(zero_curvature_residual(&g, Complex::new(0.0, 0.5)).is_err());
        assert!(pde_residual(&g, None).unwrap().normalization_dev.is_none());
    }

    #[test]
    fn zero_lambda_rejected() {
        let g = seed_grid(0.0, 1.0, 0.25);
        assert!(matches!(
            zero_curvature_residual(&g, Complex::new(0.0, 0.0)),
            Err(Error::SingularV)
        ));
    }

    #[test]
    fn small_or_uneven_grids_rejected() {
        let g = first_order_grid(GridSpec::new(0.0, 1.0, 0.0, 1.0, 4, 9).unwrap());
        assert!(pde_residual(&g, None).is_err());
        let mut g = first_order_grid(GridSpec::new(0.0, 1.0, 0.0, 1.0, 9, 9).unwrap());
        g.ts[3] += 1e-3;
        assert!(pde_residual(&g, None).is_err());
    }

    #[test]
    fn mismatched_refinement_rejected() {
        let g = first_order_grid(GridSpec::square(1.0, 0.25).unwrap());
        let h = first_order_grid(GridSpec::square(1.0, 0.1).unwrap());
        assert!(pde_residual(&g, Some(&h)).is_err());
    }

    #[test]
    fn first_order_single_peak_at_origin() {
        let g = first_order_grid(GridSpec::default_square());
        let p = peak_analysis(&g);
        assert_eq!(p.count, 1);
        assert!((p.global_max - 3.0).abs() < 1e-3);
        assert_eq!((p.maxima[0].x, p.maxima[0].t), (0.0, 0.0));
    }

    #[test]
    fn far_field_window_has_no_peaks() {
        let g = first_order_grid(GridSpec::new(40.0, 50.0, 40.0, 50.0, 101, 101).unwrap());
        assert_eq!(peak_analysis(&g).count, 0);
    }

    #[test]
    fn plateau_collapses_to_smallest_node() {
        let mut v = vec![0.0; 36];
        for &(i, j) in &[(2, 2), (2, 3), (3, 2)] {
            v[i * 6 + j] = 1.0;
        }
        assert_eq!(local_maxima(&v, 6, 6), vec![(2, 2)]);
        v[6 + 1] = 2.0;
        assert_eq!(local_maxima(&v, 6, 6), vec![(1, 1)]);
    }

    #[test]
    fn boundary_maxima_excluded() {
        let mut v = vec![0.0; 25];
        v[2] = 1.0;
        v[2 * 5 + 2] = 0.5;
        assert_eq!(local_maxima(&v, 5, 5), vec![(2, 2)]);
        let flat = vec![1.0; 25];
        assert!(local_maxima(&flat, 5, 5).is_empty());
    }

    #[test]
    fn report_serializations() {
        let g = seed_grid(0.1, 1.0, 0.25);
        let r = pde_residual(&g, None).unwrap();
        let kv = r.to_key_value();
        assert!(kv.contains("convergence_order_eq1: n/a"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(v["convergence_order_eq1"].is_null());
        assert!(v["residual_eq1"].as_f64().unwrap() >= 0.0);
    }
}
