use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Complex, DualC};
use crate::darboux::SolutionSample;
use crate::error::{Error, Result};

use super::{FieldGrid, GridMeta, GridSpec};

/// Column-oriented sample block; `re_At`/`im_At` are absent when the grid
/// carries no derivative channel.
#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct Columns {
    x: Vec<f64>,
    t: Vec<f64>,
    re_A: Vec<f64>,
    im_A: Vec<f64>,
    abs_A: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    re_At: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    im_At: Option<Vec<f64>>,
    B: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct Document {
    meta: GridMeta,
    spec: GridSpec,
    samples: Columns,
}

pub fn write_json(grid: &FieldGrid, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_json_to(grid, &mut w).map_err(|e| Error::io(path, e))?;
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn write_json_to<W: Write>(grid: &FieldGrid, out: &mut W) -> std::io::Result<()> {
    let n = grid.samples.len();
    let mut c = Columns {
        x: Vec::with_capacity(n),
        t: Vec::with_capacity(n),
        re_A: Vec::with_capacity(n),
        im_A: Vec::with_capacity(n),
        abs_A: Vec::with_capacity(n),
        re_At: grid.has_derivative.then(|| Vec::with_capacity(n)),
        im_At: grid.has_derivative.then(|| Vec::with_capacity(n)),
        B: Vec::with_capacity(n),
    };
    for (ix, &x) in grid.xs.iter().enumerate() {
        for (it, &t) in grid.ts.iter().enumerate() {
            let s = grid.at(ix, it);
            c.x.push(x);
            c.t.push(t);
            c.re_A.push(s.a.val.re);
            c.im_A.push(s.a.val.im);
            c.abs_A.push(s.a.val.norm());
            if let Some(v) = c.re_At.as_mut() {
                v.push(s.a.dt.re);
            }
            if let Some(v) = c.im_At.as_mut() {
                v.push(s.a.dt.im);
            }
            c.B.push(s.b);
        }
    }
    let doc = Document {
        meta: grid.meta.clone(),
        spec: grid.spec,
        samples: c,
    };
    serde_json::to_writer(&mut *out, &doc)?;
    writeln!(out)
}

pub fn read_json(path: &Path) -> Result<FieldGrid> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_json_from(BufReader::new(file))
}

pub(crate) fn read_json_from<R: std::io::Read>(input: R) -> Result<FieldGrid> {
    let doc: Document = serde_json::from_reader(input).map_err(|e| Error::Parse(e.to_string()))?;
    let spec = doc.spec;
    spec.validate()?;
    let c = doc.samples;
    let n = spec.len();
    let lens = [c.x.len(), c.t.len(), c.re_A.len(), c.im_A.len(), c.B.len()];
    if lens.iter().any(|&l| l != n) {
        return Err(Error::Parse(format!("column lengths {lens:?} != {n}")));
    }
    let deriv = match (&c.re_At, &c.im_At) {
        (Some(r), Some(i)) if r.len() == n && i.len() == n => Some((r, i)),
        (None, None) => None,
        _ => return Err(Error::Parse("inconsistent derivative columns".into())),
    };
    let samples = (0..n)
        .map(|k| {
            let dt = deriv.map_or(Complex::new(0.0, 0.0), |(r, i)| Complex::new(r[k], i[k]));
            SolutionSample {
                a: DualC::new(Complex::new(c.re_A[k], c.im_A[k]), dt),
                b: c.B[k],
                level: doc.meta.order,
            }
        })
        .collect();
    let xs = (0..spec.nx).map(|i| c.x[i * spec.nt]).collect();
    let ts = c.t[..spec.nt].to_vec();
    Ok(FieldGrid {
        spec,
        xs,
        ts,
        samples,
        meta: doc.meta,
        has_derivative: deriv.is_some(),
    })
}
