//! Textual tensor dump for curvature points.
//!
//! Format: the first non-comment line is the dimension `n`; each following
//! line is either `i j k l value` (a curvature component) or
//! `i j k l m value` (a covariant-derivative component). Indices are
//! 0-based; omitted components are zero; `#` starts a comment.

use std::fs;
use std::path::Path;

use harmonics_core::curvio::CurvaturePoint;

#[derive(Debug)]
pub enum TensorIoError {
    Io(std::io::Error),
    Parse { line: usize, message: String },
}

impl std::fmt::Display for TensorIoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TensorIoError::Io(e) => write!(f, "tensor file I/O error: {e}"),
            TensorIoError::Parse { line, message } => {
                write!(f, "tensor file parse error at line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for TensorIoError {}

impl From<std::io::Error> for TensorIoError {
    fn from(e: std::io::Error) -> Self {
        TensorIoError::Io(e)
    }
}

pub fn read_tensor(path: &Path) -> Result<CurvaturePoint, TensorIoError> {
    let text = fs::read_to_string(path)?;
    parse_tensor(&text)
}

pub fn parse_tensor(text: &str) -> Result<CurvaturePoint, TensorIoError> {
    let mut n: Option<usize> = None;
    let mut r: Vec<f64> = Vec::new();
    let mut dr: Vec<f64> = Vec::new();
    let mut has_dr = false;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| TensorIoError::Parse { line: lineno, message };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(err(format!("expected dimension header, got {line:?}")));
                }
                let dim: usize = fields[0]
                    .parse()
                    .map_err(|_| err(format!("bad dimension {:?}", fields[0])))?;
                if dim < 2 {
                    return Err(err(format!("dimension {dim} too small")));
                }
                r = vec![0.0; dim.pow(4)];
                dr = vec![0.0; dim.pow(5)];
                n = Some(dim);
            }
            Some(dim) => {
                if fields.len() != 5 && fields.len() != 6 {
                    return Err(err(format!(
                        "expected 'i j k l value' or 'i j k l m value', got {line:?}"
                    )));
                }
                let nidx = fields.len() - 1;
                let mut idx = [0usize; 5];
                for (s, slot) in fields[..nidx].iter().zip(idx.iter_mut()) {
                    *slot = s.parse().map_err(|_| err(format!("bad index {s:?}")))?;
                    if *slot >= dim {
                        return Err(err(format!("index {slot} out of range for n={dim}")));
                    }
                }
                let value: f64 = fields[nidx]
                    .parse()
                    .map_err(|_| err(format!("bad value {:?}", fields[nidx])))?;
                if nidx == 4 {
                    r[((idx[0] * dim + idx[1]) * dim + idx[2]) * dim + idx[3]] = value;
                } else {
                    has_dr = true;
                    dr[(((idx[0] * dim + idx[1]) * dim + idx[2]) * dim + idx[3]) * dim + idx[4]] =
                        value;
                }
            }
        }
    }
    let dim = n.ok_or(TensorIoError::Parse {
        line: 0,
        message: "missing dimension header".into(),
    })?;
    CurvaturePoint::new(dim, r, if has_dr { Some(dr) } else { None }).map_err(|e| {
        TensorIoError::Parse { line: 0, message: e.to_string() }
    })
}

pub fn render_tensor(cp: &CurvaturePoint) -> String {
    let n = cp.dim();
    let mut out = String::new();
    out.push_str(&format!("{n}\n"));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = cp.r(i, j, k, l);
                    if v != 0.0 {
                        out.push_str(&format!("{i} {j} {k} {l} {v:.17e}\n"));
                    }
                }
            }
        }
    }
    if cp.has_derivative() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for m in 0..n {
                            let v = cp.dr(i, j, k, l, m);
                            if v != 0.0 {
                                out.push_str(&format!("{i} {j} {k} {l} {m} {v:.17e}\n"));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn write_tensor(path: &Path, cp: &CurvaturePoint) -> Result<(), TensorIoError> {
    fs::write(path, render_tensor(cp))?;
    Ok(())
}
