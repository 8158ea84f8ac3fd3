use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use super::CoupledState;
use crate::Error;
use crate::Result;

/// Pretty-printed JSON of any serializable value.
pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| Error::io(path, std::io::Error::other(e)))?;
    w.write_all(b"\n").and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

/// Coupled amplitudes as CSV `l,m,re,im`; exact zeros are skipped.
pub fn write_coupled_csv(path: &Path, state: &CoupledState) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "l,m,re,im")?;
        for (l, m, a) in state.iter() {
            if a.re != 0.0 || a.im != 0.0 {
                writeln!(w, "{l},{m},{:e},{:e}", a.re, a.im)?;
            }
        }
        w.flush()
    };
    body().map_err(|e| Error::io(path, e))
}
