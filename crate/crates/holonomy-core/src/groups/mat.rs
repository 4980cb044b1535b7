//! Small fixed-size real and complex matrices.
//!
//! Row-major storage throughout. JSON encodes a real matrix as nested arrays
//! of numbers and a complex matrix as nested arrays of `[re, im]` pairs; the
//! CLI reuses these encodings verbatim.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type C64 = Complex64;

/// 3x3 real matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

/// 4x4 real matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

/// 2x2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat2(pub [[C64; 2]; 2]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn zero() -> Mat3 {
        Mat3([[0.0; 3]; 3])
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        Mat3(out)
    }

    pub fn matvec(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn scale(&self, s: f64) -> Mat3 {
        let mut out = self.0;
        for row in &mut out {
            for e in row {
                *e *= s;
            }
        }
        Mat3(out)
    }

    pub fn add(&self, rhs: &Mat3) -> Mat3 {
        let mut out = self.0;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] += rhs.0[i][j];
            }
        }
        Mat3(out)
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn inverse(&self) -> Mat3 {
        let m = &self.0;
        let d = self.det();
        let mut adj = [[0.0; 3]; 3];
        adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
        adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
        adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
        adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
        adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
        adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Mat3(adj).scale(1.0 / d)
    }

    pub fn max_abs_diff(&self, rhs: &Mat3) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.0[i][j] - rhs.0[i][j]).abs());
            }
        }
        worst
    }

    pub fn frobenius_dist(&self, rhs: &Mat3) -> f64 {
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let d = self.0[i][j] - rhs.0[i][j];
                acc += d * d;
            }
        }
        acc.sqrt()
    }

    /// Entrywise dot product; equals `tr(self^T rhs)`.
    pub fn dot(&self, rhs: &Mat3) -> f64 {
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                acc += self.0[i][j] * rhs.0[i][j];
            }
        }
        acc
    }

    /// Max-entry deviation of `m^T m` from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        self.transpose().mul(self).max_abs_diff(&Mat3::IDENTITY)
    }

    /// Nearest rotation by two Newton steps of the polar iteration.
    pub fn polar_project(&self) -> Mat3 {
        let mut x = *self;
        for _ in 0..2 {
            x = x.add(&x.inverse().transpose()).scale(0.5);
        }
        x
    }
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub fn zero() -> Mat4 {
        Mat4([[0.0; 4]; 4])
    }

    pub fn transpose(&self) -> Mat4 {
        let m = &self.0;
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = m[j][i];
            }
        }
        Mat4(out)
    }

    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] =
                    a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] + a[i][3] * b[3][j];
            }
        }
        Mat4(out)
    }

    pub fn matvec(&self, v: [f64; 4]) -> [f64; 4] {
        let m = &self.0;
        let mut out = [0.0; 4];
        for i in 0..4 {
            out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
        }
        out
    }

    pub fn scale(&self, s: f64) -> Mat4 {
        let mut out = self.0;
        for row in &mut out {
            for e in row {
                *e *= s;
            }
        }
        Mat4(out)
    }

    pub fn add(&self, rhs: &Mat4) -> Mat4 {
        let mut out = self.0;
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] += rhs.0[i][j];
            }
        }
        Mat4(out)
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        let det3 = |a: [f64; 3], b: [f64; 3], c: [f64; 3]| {
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
        };
        let minor = |skip: usize| {
            let rows: Vec<[f64; 3]> = (1..4)
                .map(|r| {
                    let mut out = [0.0; 3];
                    let mut k = 0;
                    for c in 0..4 {
                        if c != skip {
                            out[k] = m[r][c];
                            k += 1;
                        }
                    }
                    out
                })
                .collect();
            det3(rows[0], rows[1], rows[2])
        };
        m[0][0] * minor(0) - m[0][1] * minor(1) + m[0][2] * minor(2) - m[0][3] * minor(3)
    }

    pub fn inverse(&self) -> Mat4 {
        // Gauss-Jordan with partial pivoting; inputs here are near-orthogonal.
        let mut a = self.0;
        let mut inv = Mat4::IDENTITY.0;
        for col in 0..4 {
            let mut pivot = col;
            for r in col + 1..4 {
                if a[r][col].abs() > a[pivot][col].abs() {
                    pivot = r;
                }
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col];
            for j in 0..4 {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for r in 0..4 {
                if r != col {
                    let f = a[r][col];
                    for j in 0..4 {
                        a[r][j] -= f * a[col][j];
                        inv[r][j] -= f * inv[col][j];
                    }
                }
            }
        }
        Mat4(inv)
    }

    pub fn max_abs_diff(&self, rhs: &Mat4) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - rhs.0[i][j]).abs());
            }
        }
        worst
    }

    pub fn frobenius_dist(&self, rhs: &Mat4) -> f64 {
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let d = self.0[i][j] - rhs.0[i][j];
                acc += d * d;
            }
        }
        acc.sqrt()
    }

    pub fn orthonormality_error(&self) -> f64 {
        self.transpose().mul(self).max_abs_diff(&Mat4::IDENTITY)
    }

    pub fn polar_project(&self) -> Mat4 {
        let mut x = *self;
        for _ in 0..2 {
            x = x.add(&x.inverse().transpose()).scale(0.5);
        }
        x
    }
}

impl CMat2 {
    pub const IDENTITY: CMat2 = CMat2([
        [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
    ]);

    pub fn zero() -> CMat2 {
        CMat2([[C64::new(0.0, 0.0); 2]; 2])
    }

    pub fn mul(&self, rhs: &CMat2) -> CMat2 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[C64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        CMat2(out)
    }

    pub fn matvec(&self, v: [C64; 2]) -> [C64; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    pub fn adjoint(&self) -> CMat2 {
        let m = &self.0;
        CMat2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn scale(&self, s: C64) -> CMat2 {
        let mut out = self.0;
        for row in &mut out {
            for e in row {
                *e *= s;
            }
        }
        CMat2(out)
    }

    pub fn add(&self, rhs: &CMat2) -> CMat2 {
        let mut out = self.0;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += rhs.0[i][j];
            }
        }
        CMat2(out)
    }

    pub fn det(&self) -> C64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn inverse(&self) -> CMat2 {
        let d = self.det();
        let m = &self.0;
        CMat2([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]])
    }

    pub fn max_abs_diff(&self, rhs: &CMat2) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - rhs.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn frobenius_dist(&self, rhs: &CMat2) -> f64 {
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                acc += (self.0[i][j] - rhs.0[i][j]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Max-entry deviation of `m^dagger m` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        self.adjoint().mul(self).max_abs_diff(&CMat2::IDENTITY)
    }

    pub fn polar_project(&self) -> CMat2 {
        let mut x = *self;
        for _ in 0..2 {
            x = x.add(&x.inverse().adjoint()).scale(C64::new(0.5, 0.0));
        }
        x
    }
}

impl Serialize for Mat3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Mat3(<[[f64; 3]; 3]>::deserialize(d)?))
    }
}

impl Serialize for Mat4 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat4 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Mat4(<[[f64; 4]; 4]>::deserialize(d)?))
    }
}

impl Serialize for CMat2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = self
            .0
            .iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CMat2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = <Vec<Vec<[f64; 2]>>>::deserialize(d)?;
        if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
            return Err(D::Error::custom("expected a 2x2 matrix of [re, im] pairs"));
        }
        let mut out = CMat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = C64::new(rows[i][j][0], rows[i][j][1]);
            }
        }
        Ok(out)
    }
}
