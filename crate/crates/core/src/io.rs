//! Self-describing binary container for snapshot and covariance matrices,
//! plus a plain-CSV import path.
//!
//! Layout: magic `TGT1`, then four little-endian u32 header words
//! (payload kind, rows, cols, dtype), then row-major interleaved
//! real/imaginary 64-bit floats. Kind 0 is an M x Q snapshot matrix,
//! kind 1 an M x M covariance; the only dtype is 0 (complex128).

use std::io::{BufRead, Read, Write};

use nalgebra::{Complex, DMatrix};

use crate::array::SnapshotMatrix;
use crate::covariance::{CovKind, CovMatrix};
use crate::error::{Error, Result};
use crate::scalar::{real, Scalar};

/// File magic.
pub const MAGIC: [u8; 4] = *b"TGT1";

const KIND_SNAPSHOTS: u32 = 0;
const KIND_COVARIANCE: u32 = 1;
const DTYPE_COMPLEX128: u32 = 0;

/// What a container file held.
#[derive(Debug, Clone)]
pub enum FileContents<T: Scalar> {
    Snapshots(SnapshotMatrix<T>),
    Covariance(CovMatrix<T>),
}

/// Serialize a snapshot matrix.
pub fn write_snapshots<T: Scalar, W: Write>(x: &SnapshotMatrix<T>, out: &mut W) -> Result<()> {
    write_container(x.data(), KIND_SNAPSHOTS, out)
}

/// Serialize a covariance matrix.
pub fn write_covariance<T: Scalar, W: Write>(r: &CovMatrix<T>, out: &mut W) -> Result<()> {
    write_container(r.data(), KIND_COVARIANCE, out)
}

fn write_container<T: Scalar, W: Write>(
    data: &DMatrix<Complex<T>>,
    kind: u32,
    out: &mut W,
) -> Result<()> {
    out.write_all(&MAGIC)?;
    out.write_all(&kind.to_le_bytes())?;
    out.write_all(&(data.nrows() as u32).to_le_bytes())?;
    out.write_all(&(data.ncols() as u32).to_le_bytes())?;
    out.write_all(&DTYPE_COMPLEX128.to_le_bytes())?;
    for i in 0..data.nrows() {
        for j in 0..data.ncols() {
            let z = data[(i, j)];
            out.write_all(&z.re.to_f64().unwrap_or(f64::NAN).to_le_bytes())?;
            out.write_all(&z.im.to_f64().unwrap_or(f64::NAN).to_le_bytes())?;
        }
    }
    Ok(())
}

struct Counting<R> {
    inner: R,
    offset: u64,
}

impl<R: Read> Counting<R> {
    fn read_exact(&mut self, buf: &mut [u8], what: &str) -> Result<()> {
        let at = self.offset;
        match self.inner.read_exact(buf) {
            Ok(()) => {
                self.offset += buf.len() as u64;
                Ok(())
            }
            Err(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => Err(Error::Parse {
                offset: at,
                detail: format!("unexpected end of file while reading {what}"),
            }),
            Err(e) => Err(e.into()),
        }
    }

    fn read_u32(&mut self, what: &str) -> Result<u32> {
        let mut buf = [0u8; 4];
        self.read_exact(&mut buf, what)?;
        Ok(u32::from_le_bytes(buf))
    }

    fn read_f64(&mut self, what: &str) -> Result<f64> {
        let at = self.offset;
        let mut buf = [0u8; 8];
        self.read_exact(&mut buf, what)?;
        let v = f64::from_le_bytes(buf);
        if !v.is_finite() {
            return Err(Error::Parse {
                offset: at,
                detail: format!("non-finite value in {what}"),
            });
        }
        Ok(v)
    }
}

/// Deserialize a container, reporting the byte offset of any malformation.
pub fn read_container<T: Scalar, R: Read>(input: R) -> Result<FileContents<T>> {
    let mut r = Counting {
        inner: input,
        offset: 0,
    };
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic, "magic")?;
    if magic != MAGIC {
        return Err(Error::Parse {
            offset: 0,
            detail: format!("bad magic {magic:?}, expected {MAGIC:?}"),
        });
    }
    let kind_at = r.offset;
    let kind = r.read_u32("payload kind")?;
    let rows = r.read_u32("row count")? as usize;
    let cols_at = r.offset;
    let cols = r.read_u32("column count")? as usize;
    let dtype_at = r.offset;
    let dtype = r.read_u32("dtype tag")?;
    if dtype != DTYPE_COMPLEX128 {
        return Err(Error::Parse {
            offset: dtype_at,
            detail: format!("unsupported dtype tag {dtype}"),
        });
    }
    if rows == 0 || cols == 0 {
        return Err(Error::Parse {
            offset: cols_at,
            detail: format!("empty payload dimensions {rows}x{cols}"),
        });
    }
    let mut data = DMatrix::<Complex<T>>::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let re = r.read_f64("payload")?;
            let im = r.read_f64("payload")?;
            data[(i, j)] = Complex::new(real(re), real(im));
        }
    }
    match kind {
        KIND_SNAPSHOTS => Ok(FileContents::Snapshots(SnapshotMatrix::from_matrix(data)?)),
        KIND_COVARIANCE => {
            if rows != cols {
                return Err(Error::Parse {
                    offset: cols_at,
                    detail: format!("covariance payload must be square, got {rows}x{cols}"),
                });
            }
            Ok(FileContents::Covariance(CovMatrix::from_matrix(
                data,
                CovKind::Sample,
            )?))
        }
        other => Err(Error::Parse {
            offset: kind_at,
            detail: format!("unknown payload kind {other}"),
        }),
    }
}

/// Import a complex matrix from CSV with alternating re, im columns.
/// One row per matrix row; all rows must have the same width.
pub fn read_csv_matrix<T: Scalar, R: BufRead>(mut input: R) -> Result<DMatrix<Complex<T>>> {
    let mut rows: Vec<Vec<Complex<T>>> = Vec::new();
    let mut offset = 0u64;
    let mut line = String::new();
    loop {
        let line_start = offset;
        line.clear();
        let n = input.read_line(&mut line)?;
        if n == 0 {
            break;
        }
        offset += n as u64;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() % 2 != 0 {
            return Err(Error::Parse {
                offset: line_start,
                detail: format!("row has {} fields, expected re,im pairs", fields.len()),
            });
        }
        let mut row = Vec::with_capacity(fields.len() / 2);
        for pair in fields.chunks(2) {
            let re: f64 = pair[0].parse().map_err(|_| Error::Parse {
                offset: line_start,
                detail: format!("cannot parse '{}' as a number", pair[0]),
            })?;
            let im: f64 = pair[1].parse().map_err(|_| Error::Parse {
                offset: line_start,
                detail: format!("cannot parse '{}' as a number", pair[1]),
            })?;
            row.push(Complex::new(real(re), real(im)));
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse {
                    offset: line_start,
                    detail: format!(
                        "row has {} complex entries, expected {}",
                        row.len(),
                        first.len()
                    ),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            detail: "no data rows in CSV input".to_string(),
        });
    }
    let nrows = rows.len();
    let ncols = rows[0].len();
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}
