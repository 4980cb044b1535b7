//! Generator files, connection files, and fiber-vector flags.
//!
//! Matrices are row-major JSON arrays; complex entries are `[re, im]`
//! pairs. A generator file is `{"kind": "...", "matrices": [...]}` with
//! kind one of `so3`, `so4`, `su2`, `u2`.

use std::path::Path;

use serde::Deserialize;

use holonomy_core::groups::{CMat2, Mat3, Mat4, Rot3, Rot4, C64, SU2, U2Mat};
use holonomy_core::transport::{Connection, FiberVector};

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum GensFile {
    So3 { matrices: Vec<Mat3> },
    So4 { matrices: Vec<Mat4> },
    Su2 { matrices: Vec<CMat2> },
    U2 { matrices: Vec<CMat2> },
}

#[derive(Clone, Debug)]
pub enum LoadedGens {
    So3(Vec<Rot3>),
    So4(Vec<Rot4>),
    Su2(Vec<SU2>),
    U2(Vec<U2Mat>),
}

impl LoadedGens {
    pub fn kind(&self) -> &'static str {
        match self {
            LoadedGens::So3(_) => "so3",
            LoadedGens::So4(_) => "so4",
            LoadedGens::Su2(_) => "su2",
            LoadedGens::U2(_) => "u2",
        }
    }
}

pub fn load_gens(path: &Path, tol: f64) -> Result<LoadedGens, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: GensFile = serde_json::from_str(&text)
        .map_err(|e| format!("bad generator file {}: {e}", path.display()))?;
    let ctx = |i: usize, e: &dyn std::fmt::Display| {
        format!("matrix {i} in {}: {e}", path.display())
    };
    Ok(match file {
        GensFile::So3 { matrices } => LoadedGens::So3(
            matrices
                .into_iter()
                .enumerate()
                .map(|(i, m)| Rot3::new(m, tol).map_err(|e| ctx(i, &e)))
                .collect::<Result<_, _>>()?,
        ),
        GensFile::So4 { matrices } => LoadedGens::So4(
            matrices
                .into_iter()
                .enumerate()
                .map(|(i, m)| Rot4::new(m, tol).map_err(|e| ctx(i, &e)))
                .collect::<Result<_, _>>()?,
        ),
        GensFile::Su2 { matrices } => LoadedGens::Su2(
            matrices
                .into_iter()
                .enumerate()
                .map(|(i, m)| SU2::from_matrix(&m, tol).map_err(|e| ctx(i, &e)))
                .collect::<Result<_, _>>()?,
        ),
        GensFile::U2 { matrices } => LoadedGens::U2(
            matrices
                .into_iter()
                .enumerate()
                .map(|(i, m)| U2Mat::new(m, tol).map_err(|e| ctx(i, &e)))
                .collect::<Result<_, _>>()?,
        ),
    })
}

pub fn load_connection(path: &Path) -> Result<Connection, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let conn: Connection = serde_json::from_str(&text)
        .map_err(|e| format!("bad connection file {}: {e}", path.display()))?;
    conn.validate()
        .map_err(|e| format!("invalid connection in {}: {e}", path.display()))?;
    Ok(conn)
}

/// Parses `--vector` against the connection's fiber: four reals for the
/// rank-4 fiber, two `[re, im]` pairs for the complex fiber.
pub fn parse_vector(text: &str, conn: &Connection) -> Result<FiberVector, String> {
    match conn {
        Connection::Real4 { .. } => {
            let v: [f64; 4] = serde_json::from_str(text)
                .map_err(|e| format!("expected a vector like [1,0,0,0]: {e}"))?;
            Ok(FiberVector::Real4(v))
        }
        Connection::Complex2 { .. } => {
            let v: [[f64; 2]; 2] = serde_json::from_str(text)
                .map_err(|e| format!("expected a vector like [[1,0],[0,0]]: {e}"))?;
            Ok(FiberVector::Complex2([
                C64::new(v[0][0], v[0][1]),
                C64::new(v[1][0], v[1][1]),
            ]))
        }
    }
}

pub fn vector_json(v: &FiberVector) -> serde_json::Value {
    match v {
        FiberVector::Real4(x) => serde_json::json!(x),
        FiberVector::Complex2(z) => {
            serde_json::json!([[z[0].re, z[0].im], [z[1].re, z[1].im]])
        }
    }
}

pub fn parse_point3(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z, got {text:?}"));
    }
    let mut p = [0.0; 3];
    for (slot, part) in p.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("bad coordinate {part:?} in {text:?}"))?;
    }
    if p.iter().map(|x| x * x).sum::<f64>() <= 0.0 {
        return Err(format!("zero vector {text:?} has no direction"));
    }
    Ok(p)
}
