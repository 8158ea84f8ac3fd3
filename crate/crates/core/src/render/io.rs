use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{DensityGrid, EllipseOverlay};
use crate::{Error, Result};

/// Header of `key=value` lines (`extent_au`, `resolution`, `time_s`, `n`,
/// `Z`, `eta`), then one comma-separated line per row in ascending y.
pub fn write_grid(path: &Path, grid: &DensityGrid) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "extent_au={:e}", grid.extent)?;
        writeln!(w, "resolution={}", grid.resolution)?;
        writeln!(w, "time_s={:e}", grid.time)?;
        writeln!(w, "n={}", grid.n)?;
        writeln!(w, "Z={}", grid.z)?;
        match grid.eta {
            Some(eta) => writeln!(w, "eta={eta:e}")?,
            None => writeln!(w, "eta=none")?,
        }
        let mut line = String::new();
        for row in grid.values.chunks(grid.resolution) {
            line.clear();
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    line.push(',');
                }
                line.push_str(&format!("{v:e}"));
            }
            writeln!(w, "{line}")?;
        }
        w.flush()
    };
    body().map_err(|e| Error::io(path, e))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn read_grid(path: &Path) -> Result<DensityGrid> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut lines = BufReader::new(file).lines().enumerate();
    let mut header = |key: &str| -> Result<String> {
        let (i, line) = lines.next().ok_or_else(|| parse_err(0, format!("missing header '{key}'")))?;
        let line = line.map_err(|e| Error::io(path, e))?;
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| parse_err(i + 1, format!("expected '{key}=value'")))?;
        if k.trim() != key {
            return Err(parse_err(i + 1, format!("expected key '{key}', found '{k}'")));
        }
        Ok(v.trim().to_string())
    };
    fn num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
        s.parse().map_err(|_| parse_err(line, format!("cannot parse '{s}'")))
    }
    let extent: f64 = num(&header("extent_au")?, 1)?;
    let resolution: usize = num(&header("resolution")?, 2)?;
    let time: f64 = num(&header("time_s")?, 3)?;
    let n: u32 = num(&header("n")?, 4)?;
    let z: u32 = num(&header("Z")?, 5)?;
    let eta_s = header("eta")?;
    let eta = if eta_s == "none" { None } else { Some(num(&eta_s, 6)?) };
    drop(header);

    let mut values = Vec::with_capacity(resolution * resolution);
    let mut rows = 0;
    for (i, line) in lines {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let before = values.len();
        for field in line.split(',') {
            values.push(num::<f64>(field.trim(), i + 1)?);
        }
        if values.len() - before != resolution {
            return Err(parse_err(i + 1, format!("expected {resolution} values, found {}", values.len() - before)));
        }
        rows += 1;
    }
    if rows != resolution {
        return Err(parse_err(0, format!("expected {resolution} rows, found {rows}")));
    }
    Ok(DensityGrid { extent, resolution, time, n, z, eta, values })
}

/// CSV with columns `x_au,y_au`.
pub fn write_overlay_csv(path: &Path, overlay: &EllipseOverlay) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "x_au,y_au")?;
        for p in &overlay.points {
            writeln!(w, "{:e},{:e}", p[0], p[1])?;
        }
        w.flush()
    };
    body().map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hydrogenic::ShellSpec;
    use crate::render::classical_overlay;

    fn sample() -> DensityGrid {
        let res = 16;
        DensityGrid {
            extent: 123.5,
            resolution: res,
            time: 0.0668,
            n: 7,
            z: 2,
            eta: Some(0.2),
            values: (0..res * res).map(|k| (k as f64 * 0.37).sin().abs() * 1e-9).collect(),
        }
    }

    #[test]
    fn grid_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.txt");
        let mut g = sample();
        write_grid(&p, &g).unwrap();
        assert_eq!(read_grid(&p).unwrap(), g);
        g.eta = None;
        write_grid(&p, &g).unwrap();
        assert_eq!(read_grid(&p).unwrap(), g);
    }

    #[test]
    fn malformed_grid_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.txt");
        write_grid(&p, &sample()).unwrap();
        let text = std::fs::read_to_string(&p).unwrap().replacen("resolution=16", "resolution=x", 1);
        std::fs::write(&p, text).unwrap();
        assert!(matches!(read_grid(&p), Err(Error::Parse { line: 2, .. })));

        std::fs::write(&p, "extent_au=1\nresolution=2\ntime_s=0\nn=1\nZ=1\neta=none\n1,2\n3\n").unwrap();
        assert!(matches!(read_grid(&p), Err(Error::Parse { line: 8, .. })));
    }

    #[test]
    fn overlay_csv() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("o.csv");
        let o = classical_overlay(ShellSpec::hydrogen(5).unwrap(), 0.3, 0.0, 10).unwrap();
        write_overlay_csv(&p, &o).unwrap();
        let text = std::fs::read_to_string(&p).unwrap();
        assert_eq!(text.lines().count(), 11);
        assert_eq!(text.lines().next(), Some("x_au,y_au"));
    }
}
