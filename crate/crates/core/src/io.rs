//! Plain-text artifact formats.
//!
//! Floats are written with Rust's shortest round-trip representation, so a
//! write/read cycle reproduces every value bit for bit and identical inputs
//! give byte-identical files.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::signal::SampledSignal;
use crate::tomography::{Tomogram, TomographyParams};

pub const SIGNAL_HEADER: &str = "# fractomo-signal v1";
pub const TOMOGRAM_HEADER: &str = "# fractomo-tomogram v1";

/// Allowed deviation of an abscissa from the inferred grid, relative to the step.
pub const GRID_JITTER: f64 = 1e-9;

pub fn write_signal<W: Write>(out: W, s: &SampledSignal) -> io::Result<()> {
    let mut w = BufWriter::new(out);
    writeln!(w, "{SIGNAL_HEADER}")?;
    for (i, (u, z)) in s.grid().points().zip(s.values()).enumerate() {
        writeln!(w, "{i},{u:?},{:?},{:?}", z.re, z.im)?;
    }
    w.flush()
}

pub fn read_signal<R: Read>(input: R) -> Result<SampledSignal> {
    let mut lines = data_lines(input, SIGNAL_HEADER)?;
    let mut us = Vec::new();
    let mut values = Vec::new();
    for (line_no, line) in lines.by_ref() {
        let fields = split_fields(&line, 4, line_no)?;
        let index: usize = fields[0]
            .parse()
            .map_err(|_| parse_err(line_no, "bad index"))?;
        if index != us.len() {
            return Err(parse_err(
                line_no,
                &format!("expected index {}, found {index}", us.len()),
            ));
        }
        let nums = parse_floats(&fields[1..], line_no)?;
        us.push((line_no, nums[0]));
        values.push(Complex64::new(nums[1], nums[2]));
    }
    let grid = infer_grid(&us)?;
    SampledSignal::new(grid, values)
}

pub fn write_tomogram<W: Write>(out: W, t: &Tomogram) -> io::Result<()> {
    let mut w = BufWriter::new(out);
    writeln!(w, "{TOMOGRAM_HEADER}")?;
    writeln!(w, "mu={:?}", t.params().mu())?;
    writeln!(w, "nu={:?}", t.params().nu())?;
    for (x, v) in t.x_grid().points().zip(t.values()) {
        writeln!(w, "{x:?},{v:?}")?;
    }
    w.flush()
}

pub fn read_tomogram<R: Read>(input: R) -> Result<Tomogram> {
    let mut lines = data_lines(input, TOMOGRAM_HEADER)?;
    let mut meta = |key: &str| -> Result<f64> {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, &format!("missing `{key}=` line")))?;
        let value = line
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| parse_err(line_no, &format!("expected `{key}=<float>`")))?;
        parse_floats(&[value], line_no).map(|v| v[0])
    };
    let mu = meta("mu")?;
    let nu = meta("nu")?;
    let params = TomographyParams::new(mu, nu)?;
    let mut xs = Vec::new();
    let mut ws = Vec::new();
    for (line_no, line) in lines {
        if line == "X,w" {
            continue;
        }
        let fields = split_fields(&line, 2, line_no)?;
        let nums = parse_floats(&fields, line_no)?;
        xs.push((line_no, nums[0]));
        ws.push(nums[1]);
    }
    Ok(Tomogram::new(params, infer_grid(&xs)?, ws))
}

/// `row,col,re,im` lines for a row-major complex matrix.
pub fn write_matrix_dump<W: Write>(
    out: W,
    rows: usize,
    cols: usize,
    entries: &[Complex64],
) -> io::Result<()> {
    let mut w = BufWriter::new(out);
    for i in 0..rows {
        for j in 0..cols {
            let z = entries[i * cols + j];
            writeln!(w, "{i},{j},{:?},{:?}", z.re, z.im)?;
        }
    }
    w.flush()
}

pub fn read_signal_file(path: impl AsRef<Path>) -> Result<SampledSignal> {
    read_signal(fs::File::open(path)?)
}

pub fn read_tomogram_file(path: impl AsRef<Path>) -> Result<Tomogram> {
    read_tomogram(fs::File::open(path)?)
}

/// Writes through `body` into a sibling temporary file and renames it into
/// place; on any failure the partial file is removed.
pub fn write_file_atomically<F>(path: impl AsRef<Path>, body: F) -> Result<()>
where
    F: FnOnce(&mut fs::File) -> Result<()>,
{
    let path = path.as_ref();
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".partial");
    let tmp = std::path::PathBuf::from(tmp_name);
    let result = fs::File::create(&tmp)
        .map_err(Error::from)
        .and_then(|mut f| {
            body(&mut f)?;
            f.sync_all()?;
            Ok(())
        })
        .and_then(|_| fs::rename(&tmp, path).map_err(Error::from));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

fn data_lines<R: Read>(input: R, header: &str) -> Result<impl Iterator<Item = (usize, String)>> {
    let mut lines = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        lines.push((i + 1, line?.trim().to_string()));
    }
    match lines.first() {
        Some((_, first)) if first == header => {}
        Some((n, other)) => {
            return Err(parse_err(
                *n,
                &format!("expected header `{header}`, found `{other}`"),
            ))
        }
        None => return Err(parse_err(1, "empty file")),
    }
    Ok(lines.into_iter().skip(1).filter(|(_, l)| !l.is_empty()))
}

fn split_fields(line: &str, expect: usize, line_no: usize) -> Result<Vec<&str>> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    if fields.len() != expect {
        return Err(parse_err(
            line_no,
            &format!(
                "expected {expect} comma-separated fields, found {}",
                fields.len()
            ),
        ));
    }
    Ok(fields)
}

fn parse_floats(fields: &[&str], line_no: usize) -> Result<Vec<f64>> {
    fields
        .iter()
        .map(|f| {
            let v: f64 = f
                .parse()
                .map_err(|_| parse_err(line_no, &format!("bad number `{f}`")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(parse_err(line_no, &format!("non-finite number `{f}`")))
            }
        })
        .collect()
}

/// Recovers the uniform grid from an abscissa column, rejecting jitter
/// larger than [`GRID_JITTER`] steps.
fn infer_grid(points: &[(usize, f64)]) -> Result<UniformGrid> {
    if points.len() < 2 {
        return Err(parse_err(
            points.first().map_or(0, |p| p.0),
            "need at least two samples",
        ));
    }
    let (_, first) = points[0];
    let (_, last) = points[points.len() - 1];
    let step = (last - first) / (points.len() - 1) as f64;
    let grid = UniformGrid::new(first, step, points.len())
        .map_err(|e| parse_err(points[1].0, &e.to_string()))?;
    for (i, &(line_no, x)) in points.iter().enumerate() {
        if (x - grid.point(i)).abs() > GRID_JITTER * step {
            return Err(parse_err(line_no, "abscissa is not on a uniform grid"));
        }
    }
    Ok(grid)
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}
