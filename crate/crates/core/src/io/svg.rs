use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

use super::FieldGrid;

/// Cell budget per axis; larger grids are block-averaged down.
pub const MAX_SVG_CELLS: usize = 500;

const MARGIN: f64 = 48.0;
const PLOT: f64 = 600.0;

// viridis, sampled at nine evenly spaced stops
const RAMP: [[u8; 3]; 9] = [
    [68, 1, 84],
    [71, 44, 122],
    [59, 81, 139],
    [44, 113, 142],
    [33, 144, 141],
    [39, 173, 129],
    [92, 200, 99],
    [170, 220, 50],
    [253, 231, 37],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeatmapField {
    AbsA,
    B,
}

impl HeatmapField {
    pub fn name(&self) -> &'static str {
        match self {
            HeatmapField::AbsA => "abs_A",
            HeatmapField::B => "B",
        }
    }
}

impl std::str::FromStr for HeatmapField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abs_A" | "absA" | "A" => Ok(HeatmapField::AbsA),
            "B" | "b" => Ok(HeatmapField::B),
            other => Err(Error::Usage(format!("unknown field {other:?}"))),
        }
    }
}

/// Downsampled cell values; `values[c * nrows + r]` with column `c` along x
/// and row `r` along t.
#[derive(Clone, Debug)]
pub struct Heatmap {
    pub ncols: usize,
    pub nrows: usize,
    pub values: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub block: (usize, usize),
}

impl Heatmap {
    pub fn value(&self, col: usize, row: usize) -> f64 {
        self.values[col * self.nrows + row]
    }

    /// Position of the ramp, 0 at the minimum and 1 at the maximum. A
    /// constant field maps to 0.
    pub fn level(&self, v: f64) -> f64 {
        let span = self.max - self.min;
        if span > 0.0 {
            ((v - self.min) / span).clamp(0.0, 1.0)
        } else {
            0.0
        }
    }
}

pub fn heatmap(grid: &FieldGrid, field: HeatmapField) -> Heatmap {
    let raw = match field {
        HeatmapField::AbsA => grid.abs_a(),
        HeatmapField::B => grid.b(),
    };
    let (nx, nt) = (grid.spec.nx, grid.spec.nt);
    let bx = nx.div_ceil(MAX_SVG_CELLS);
    let bt = nt.div_ceil(MAX_SVG_CELLS);
    if bx > 1 || bt > 1 {
        log::warn!(
            "heatmap {nx}x{nt} exceeds {MAX_SVG_CELLS} cells per axis, averaging {bx}x{bt} blocks"
        );
    }
    let ncols = nx.div_ceil(bx);
    let nrows = nt.div_ceil(bt);
    let mut values = Vec::with_capacity(ncols * nrows);
    for c in 0..ncols {
        for r in 0..nrows {
            let (mut sum, mut n) = (0.0, 0usize);
            for ix in c * bx..((c + 1) * bx).min(nx) {
                for it in r * bt..((r + 1) * bt).min(nt) {
                    sum += raw[ix * nt + it];
                    n += 1;
                }
            }
            values.push(sum / n as f64);
        }
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Heatmap {
        ncols,
        nrows,
        values,
        min,
        max,
        block: (bx, bt),
    }
}

pub fn ramp_color(level: f64) -> [u8; 3] {
    let pos = level.clamp(0.0, 1.0) * (RAMP.len() - 1) as f64;
    let i = (pos.floor() as usize).min(RAMP.len() - 2);
    let f = pos - i as f64;
    let mut out = [0u8; 3];
    for k in 0..3 {
        let v = RAMP[i][k] as f64 * (1.0 - f) + RAMP[i + 1][k] as f64 * f;
        out[k] = v.round() as u8;
    }
    out
}

fn hex(c: [u8; 3]) -> String {
    format!("#{:02x}{:02x}{:02x}", c[0], c[1], c[2])
}

/// Renders the heatmap with x to the right and t upward.
pub fn render_svg(grid: &FieldGrid, field: HeatmapField) -> String {
    let hm = heatmap(grid, field);
    let cw = PLOT / hm.ncols as f64;
    let ch = PLOT / hm.nrows as f64;
    let width = PLOT + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{width}" viewBox="0 0 {width} {width}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(
        s,
        "<metadata>field={} min={} max={} ramp=viridis a={} order={} method={}</metadata>",
        field.name(),
        hm.min,
        hm.max,
        grid.meta.a,
        grid.meta.order,
        grid.meta.method
    );
    for c in 0..hm.ncols {
        for r in 0..hm.nrows {
            let x = MARGIN + c as f64 * cw;
            let y = MARGIN + (hm.nrows - 1 - r) as f64 * ch;
            let fill = hex(ramp_color(hm.level(hm.value(c, r))));
            let _ = writeln!(
                s,
                r#"<rect x="{x:.3}" y="{y:.3}" width="{cw:.3}" height="{ch:.3}" fill="{fill}"/>"#
            );
        }
    }
    let g = &grid.spec;
    let base = MARGIN + PLOT;
    let mid = MARGIN + PLOT / 2.0;
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="12">"#);
    let _ = writeln!(
        s,
        r#"<text x="{mid}" y="{}" text-anchor="middle">x</text>"#,
        base + 32.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="{}" text-anchor="start">{}</text>"#,
        base + 16.0,
        g.x_min
    );
    let _ = writeln!(
        s,
        r#"<text x="{base}" y="{}" text-anchor="end">{}</text>"#,
        base + 16.0,
        g.x_max
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{mid}" text-anchor="middle">t</text>"#,
        MARGIN - 32.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{base}" text-anchor="end">{}</text>"#,
        MARGIN - 4.0,
        g.t_min
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
        MARGIN - 4.0,
        MARGIN + 12.0,
        g.t_max
    );
    let _ = writeln!(
        s,
        r#"<text x="{mid}" y="{}" text-anchor="middle">{} in [{:.4}, {:.4}]</text>"#,
        MARGIN - 16.0,
        field.name(),
        hm.min,
        hm.max
    );
    let _ = writeln!(s, "</g>\n</svg>");
    s
}

pub fn write_svg_heatmap(grid: &FieldGrid, field: HeatmapField, path: &Path) -> Result<()> {
    fs::write(path, render_svg(grid, field)).map_err(|e| Error::io(path, e))
}
