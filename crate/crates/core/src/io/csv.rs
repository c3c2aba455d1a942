use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::algebra::{Complex, DualC};
use crate::darboux::SolutionSample;
use crate::error::{Error, Result};

use super::{FieldGrid, GridMeta, GridSpec};

const HEADER: [&str; 8] = ["x", "t", "re_A", "im_A", "abs_A", "re_At", "im_At", "B"];

pub fn write_csv(grid: &FieldGrid, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_csv_to(grid, &mut w).map_err(|e| Error::io(path, e))?;
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes a `# key: value` preamble followed by one row per node.
/// Floats use the shortest representation that round-trips.
pub fn write_csv_to<W: Write>(grid: &FieldGrid, out: &mut W) -> std::io::Result<()> {
    let m = &grid.meta;
    let g = &grid.spec;
    writeln!(out, "# version: {}", m.version)?;
    writeln!(out, "# method: {}", m.method)?;
    writeln!(out, "# a: {}", m.a)?;
    writeln!(out, "# order: {}", m.order)?;
    for (k, (re, im)) in m.s.iter().enumerate() {
        writeln!(out, "# s{}: {} {}", k + 1, re, im)?;
    }
    writeln!(out, "# x_range: {} {}", g.x_min, g.x_max)?;
    writeln!(out, "# t_range: {} {}", g.t_min, g.t_max)?;
    writeln!(out, "# nx: {}", g.nx)?;
    writeln!(out, "# nt: {}", g.nt)?;

    let mut w = csv::Writer::from_writer(out);
    let header: &[&str] = if grid.has_derivative {
        &HEADER
    } else {
        &["x", "t", "re_A", "im_A", "abs_A", "B"]
    };
    w.write_record(header)?;
    let mut row: Vec<String> = Vec::with_capacity(8);
    for (ix, &x) in grid.xs.iter().enumerate() {
        for (it, &t) in grid.ts.iter().enumerate() {
            let s = grid.at(ix, it);
            row.clear();
            row.push(x.to_string());
            row.push(t.to_string());
            row.push(s.a.val.re.to_string());
            row.push(s.a.val.im.to_string());
            row.push(s.a.val.norm().to_string());
            if grid.has_derivative {
                row.push(s.a.dt.re.to_string());
                row.push(s.a.dt.im.to_string());
            }
            row.push(s.b.to_string());
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(path: &Path) -> Result<FieldGrid> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_csv_from(BufReader::new(file))
}

pub(crate) fn read_csv_from<R: Read>(input: R) -> Result<FieldGrid> {
    let mut reader = BufReader::new(input);
    let mut meta = GridMeta {
        a: f64::NAN,
        order: 0,
        s: Vec::new(),
        method: String::new(),
        version: String::new(),
    };
    let mut body = String::new();
    let mut line = String::new();
    loop {
        line.clear();
        let n = reader
            .read_line(&mut line)
            .map_err(|e| Error::Parse(e.to_string()))?;
        if n == 0 {
            break;
        }
        match line.strip_prefix('#') {
            Some(rest) => parse_meta_line(rest.trim(), &mut meta)?,
            None => {
                body.push_str(&line);
                reader
                    .read_to_string(&mut body)
                    .map_err(|e| Error::Parse(e.to_string()))?;
                break;
            }
        }
    }

    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| Error::Parse(e.to_string()))?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let need = |name: &str| col(name).ok_or_else(|| Error::Parse(format!("missing column {name}")));
    let (cx, ct, cre, cim, cb) = (
        need("x")?,
        need("t")?,
        need("re_A")?,
        need("im_A")?,
        need("B")?,
    );
    let deriv = match (col("re_At"), col("im_At")) {
        (Some(r), Some(i)) => Some((r, i)),
        _ => None,
    };

    let mut xs: Vec<f64> = Vec::new();
    let mut ts: Vec<f64> = Vec::new();
    let mut samples = Vec::new();
    for (row_no, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let num = |c: usize| -> Result<f64> {
            rec.get(c)
                .ok_or_else(|| Error::Parse(format!("row {row_no}: short record")))?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("row {row_no}: {e}")))
        };
        let (x, t) = (num(cx)?, num(ct)?);
        if xs.last() != Some(&x) {
            xs.push(x);
        }
        if xs.len() == 1 {
            ts.push(t);
        }
        let dt = match deriv {
            Some((r, i)) => Complex::new(num(r)?, num(i)?),
            None => Complex::new(0.0, 0.0),
        };
        samples.push(SolutionSample {
            a: DualC::new(Complex::new(num(cre)?, num(cim)?), dt),
            b: num(cb)?,
            level: meta.order,
        });
    }
    let nt = ts.len();
    let nx = xs.len();
    if nx * nt != samples.len() || nx < 2 || nt < 2 {
        return Err(Error::Parse(format!(
            "{} rows do not form an x-major lattice ({} x values, {} t values)",
            samples.len(),
            nx,
            nt
        )));
    }
    let spec = GridSpec::new(xs[0], xs[nx - 1], ts[0], ts[nt - 1], nx, nt)?;
    Ok(FieldGrid {
        spec,
        xs,
        ts,
        samples,
        meta,
        has_derivative: deriv.is_some(),
    })
}

fn parse_meta_line(line: &str, meta: &mut GridMeta) -> Result<()> {
    let Some((key, value)) = line.split_once(':') else {
        return Ok(());
    };
    let value = value.trim();
    let float = |v: &str| {
        v.parse::<f64>()
            .map_err(|e| Error::Parse(format!("meta {key}: {e}")))
    };
    match key.trim() {
        "version" => meta.version = value.to_string(),
        "method" => meta.method = value.to_string(),
        "a" => meta.a = float(value)?,
        "order" => {
            meta.order = value
                .parse()
                .map_err(|e| Error::Parse(format!("meta order: {e}")))?
        }
        k if k.starts_with('s') && k[1..].parse::<usize>().is_ok() => {
            let mut parts = value.split_whitespace();
            let re = float(parts.next().unwrap_or(""))?;
            let im = float(parts.next().unwrap_or(""))?;
            meta.s.push((re, im));
        }
        _ => {}
    }
    Ok(())
}
