//! Dense 3×3 tensor algebra.
//!
//! [`SymTensor3`] stores the six independent components of a symmetric tensor, so symmetry
//! holds by construction. [`Tensor3`] is a general second-order tensor. All isotropic tensor
//! functions (logarithm, exponential, square root) are evaluated spectrally on top of a cyclic
//! Jacobi eigensolver, which stays accurate for clustered and repeated eigenvalues.

use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};

const MAX_SWEEPS: usize = 60;

/// General 3×3 tensor, row-major: `t[(i, j)]` is row `i`, column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tensor3(pub [[f64; 3]; 3]);

/// Symmetric 3×3 tensor stored as `[xx, yy, zz, xy, yz, xz]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymTensor3([f64; 6]);

/// Spectral decomposition of a symmetric tensor.
///
/// Eigenvalues are sorted in descending order; column `i` of `vectors` is the unit
/// eigenvector belonging to `values[i]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub values: [f64; 3],
    pub vectors: Tensor3,
}

impl Tensor3 {
    pub const fn zero() -> Self {
        Tensor3([[0.0; 3]; 3])
    }

    pub const fn identity() -> Self {
        Tensor3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn from_rows(rows: [[f64; 3]; 3]) -> Self {
        Tensor3(rows)
    }

    /// Builds a tensor from nine row-major entries.
    pub fn from_row_slice(v: &[f64; 9]) -> Self {
        Tensor3([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]])
    }

    pub fn diag(d: [f64; 3]) -> Self {
        Tensor3([[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]])
    }

    /// Rotation by `angle` (radians) about `axis` (need not be normalized), via Rodrigues' formula.
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let [x, y, z] = [axis[0] / n, axis[1] / n, axis[2] / n];
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        Tensor3([
            [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
            [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
            [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
        ])
    }

    pub fn transpose(&self) -> Self {
        let a = &self.0;
        Tensor3([
            [a[0][0], a[1][0], a[2][0]],
            [a[0][1], a[1][1], a[2][1]],
            [a[0][2], a[1][2], a[2][2]],
        ])
    }

    pub fn det(&self) -> f64 {
        let a = &self.0;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Inverse by cofactors; `None` when the determinant is exactly zero.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        let a = &self.0;
        let mut inv = [[0.0; 3]; 3];
        for (i, row) in inv.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                *v = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
            }
        }
        Some(Tensor3(inv))
    }

    pub fn matmul(&self, other: &Tensor3) -> Tensor3 {
        let (a, b) = (&self.0, &other.0);
        let mut c = [[0.0; 3]; 3];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        Tensor3(c)
    }

    pub fn apply(&self, x: [f64; 3]) -> [f64; 3] {
        let a = &self.0;
        [
            a[0][0] * x[0] + a[0][1] * x[1] + a[0][2] * x[2],
            a[1][0] * x[0] + a[1][1] * x[1] + a[1][2] * x[2],
            a[2][0] * x[0] + a[2][1] * x[1] + a[2][2] * x[2],
        ]
    }

    /// Symmetric part `(A + Aᵀ)/2`.
    pub fn sym(&self) -> SymTensor3 {
        let a = &self.0;
        SymTensor3([
            a[0][0],
            a[1][1],
            a[2][2],
            0.5 * (a[0][1] + a[1][0]),
            0.5 * (a[1][2] + a[2][1]),
            0.5 * (a[0][2] + a[2][0]),
        ])
    }

    /// Antisymmetric part `(A - Aᵀ)/2`.
    pub fn skew(&self) -> Tensor3 {
        let t = self.transpose();
        (*self - t) * 0.5
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }

    pub fn to_row_vec(&self) -> [f64; 9] {
        let a = &self.0;
        [
            a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2],
        ]
    }

    /// `F Fᵀ`, the left Cauchy-Green tensor when `self` is a deformation gradient.
    pub fn left_gram(&self) -> SymTensor3 {
        self.matmul(&self.transpose()).sym()
    }
}

impl Index<(usize, usize)> for Tensor3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl Add for Tensor3 {
    type Output = Tensor3;
    fn add(mut self, rhs: Tensor3) -> Tensor3 {
        for i in 0..3 {
            for j in 0..3 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Sub for Tensor3 {
    type Output = Tensor3;
    fn sub(mut self, rhs: Tensor3) -> Tensor3 {
        for i in 0..3 {
            for j in 0..3 {
                self.0[i][j] -= rhs.0[i][j];
            }
        }
        self
    }
}

impl Mul<f64> for Tensor3 {
    type Output = Tensor3;
    fn mul(mut self, s: f64) -> Tensor3 {
        self.0.iter_mut().flatten().for_each(|v| *v *= s);
        self
    }
}

impl Neg for Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        self * -1.0
    }
}

// storage slot of (i, j)
const fn slot(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 0) => 0,
        (1, 1) => 1,
        (2, 2) => 2,
        (0, 1) | (1, 0) => 3,
        (1, 2) | (2, 1) => 4,
        _ => 5,
    }
}

impl SymTensor3 {
    pub const fn new(xx: f64, yy: f64, zz: f64, xy: f64, yz: f64, xz: f64) -> Self {
        SymTensor3([xx, yy, zz, xy, yz, xz])
    }

    pub const fn zero() -> Self {
        SymTensor3([0.0; 6])
    }

    pub const fn identity() -> Self {
        SymTensor3([1.0, 1.0, 1.0, 0.0, 0.0, 0.0])
    }

    pub const fn diag(d: [f64; 3]) -> Self {
        SymTensor3([d[0], d[1], d[2], 0.0, 0.0, 0.0])
    }

    /// Components in storage order `[xx, yy, zz, xy, yz, xz]`.
    pub fn components(&self) -> [f64; 6] {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[slot(i, j)]
    }

    pub fn to_tensor(&self) -> Tensor3 {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.get(i, j);
            }
        }
        Tensor3(t)
    }

    pub fn trace(&self) -> f64 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn det(&self) -> f64 {
        self.to_tensor().det()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        let c = &self.0;
        (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + 2.0 * (c[3] * c[3] + c[4] * c[4] + c[5] * c[5]))
            .sqrt()
    }

    /// Largest absolute eigenvalue.
    pub fn spectral_norm(&self) -> f64 {
        match self.eigen() {
            Ok(es) => es.values.iter().fold(0.0_f64, |m, v| m.max(v.abs())),
            Err(_) => f64::NAN,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Double contraction `A : B`.
    pub fn ddot(&self, other: &SymTensor3) -> f64 {
        let (a, b) = (&self.0, &other.0);
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + 2.0 * (a[3] * b[3] + a[4] * b[4] + a[5] * b[5])
    }

    /// Matrix product; the result is symmetric only when the factors commute.
    pub fn matmul(&self, other: &SymTensor3) -> Tensor3 {
        self.to_tensor().matmul(&other.to_tensor())
    }

    /// `Q A Qᵀ`.
    pub fn rotate(&self, q: &Tensor3) -> SymTensor3 {
        q.matmul(&self.to_tensor()).matmul(&q.transpose()).sym()
    }

    /// Splits into a traceless deviator and the mean of the diagonal.
    ///
    /// The third diagonal entry of the deviator is the negated sum of the first two, so the
    /// deviator's trace evaluates to exactly zero in floating point.
    pub fn dev_sph_split(&self) -> (SymTensor3, f64) {
        let c = &self.0;
        let mean = (c[0] + c[1] + c[2]) / 3.0;
        let d0 = c[0] - mean;
        let d1 = c[1] - mean;
        let d2 = -(d0 + d1);
        (SymTensor3([d0, d1, d2, c[3], c[4], c[5]]), mean)
    }

    pub fn deviator(&self) -> SymTensor3 {
        self.dev_sph_split().0
    }

    /// Symmetric eigendecomposition by cyclic Jacobi rotations.
    pub fn eigen(&self) -> Result<EigenSystem> {
        ensure_finite(&self.0, "symmetric tensor")?;
        let mut a = self.to_tensor().0;
        let mut v = Tensor3::identity().0;
        let scale = self.norm();
        if scale > 0.0 {
            for _ in 0..MAX_SWEEPS {
                let off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
                if off.sqrt() <= f64::EPSILON * f64::EPSILON * scale {
                    break;
                }
                for (p, q) in [(0, 1), (0, 2), (1, 2)] {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
        let mut values = [0.0; 3];
        let mut vectors = [[0.0; 3]; 3];
        for (col, &src) in order.iter().enumerate() {
            values[col] = a[src][src];
            for (row, vrow) in vectors.iter_mut().enumerate() {
                vrow[col] = v[row][src];
            }
        }
        Ok(EigenSystem {
            values,
            vectors: Tensor3(vectors),
        })
    }

    /// Applies a scalar function to the eigenvalues: `Q diag(f(λ)) Qᵀ`.
    pub fn map_spectral(&self, f: impl Fn(f64) -> f64) -> Result<SymTensor3> {
        Ok(self.eigen()?.compose(f))
    }

    /// Principal logarithm of a symmetric positive definite tensor.
    pub fn log_spd(&self) -> Result<SymTensor3> {
        let es = self.eigen()?;
        if let Some((index, &value)) = es.values.iter().enumerate().find(|(_, v)| **v <= 0.0) {
            return Err(Error::NonPositiveEigenvalue { index, value });
        }
        Ok(es.compose(f64::ln))
    }

    /// Exponential of a symmetric tensor.
    pub fn exp_sym(&self) -> Result<SymTensor3> {
        self.map_spectral(f64::exp)
    }

    /// Positive square root of a symmetric positive semi-definite tensor.
    pub fn sqrt_spd(&self) -> Result<SymTensor3> {
        let es = self.eigen()?;
        if let Some((index, &value)) = es.values.iter().enumerate().find(|(_, v)| **v < 0.0) {
            return Err(Error::NonPositiveEigenvalue { index, value });
        }
        Ok(es.compose(f64::sqrt))
    }
}

fn jacobi_rotate(a: &mut [[f64; 3]; 3], v: &mut [[f64; 3]; 3], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let r = 3 - p - q;
    let (arp, arq) = (a[r][p], a[r][q]);
    a[r][p] = c * arp - s * arq;
    a[p][r] = a[r][p];
    a[r][q] = s * arp + c * arq;
    a[q][r] = a[r][q];
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for row in v.iter_mut() {
        let (vp, vq) = (row[p], row[q]);
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

impl EigenSystem {
    /// Eigenvector `i` (column `i` of the eigenvector matrix).
    pub fn vector(&self, i: usize) -> [f64; 3] {
        let q = &self.vectors.0;
        [q[0][i], q[1][i], q[2][i]]
    }

    /// `Q diag(f(λ)) Qᵀ`, assembled directly in symmetric storage.
    pub fn compose(&self, f: impl Fn(f64) -> f64) -> SymTensor3 {
        let mapped = self.values.map(f);
        self.assemble(mapped)
    }

    /// `Q diag(d) Qᵀ` for arbitrary principal values `d` ordered like `values`.
    pub fn assemble(&self, d: [f64; 3]) -> SymTensor3 {
        let q = &self.vectors.0;
        let entry = |i: usize, j: usize| (0..3).map(|k| q[i][k] * d[k] * q[j][k]).sum::<f64>();
        SymTensor3([
            entry(0, 0),
            entry(1, 1),
            entry(2, 2),
            entry(0, 1),
            entry(1, 2),
            entry(0, 2),
        ])
    }

    pub fn reconstruct(&self) -> SymTensor3 {
        self.assemble(self.values)
    }
}

impl Index<(usize, usize)> for SymTensor3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[slot(i, j)]
    }
}

impl Add for SymTensor3 {
    type Output = SymTensor3;
    fn add(mut self, rhs: SymTensor3) -> SymTensor3 {
        self.0.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for SymTensor3 {
    type Output = SymTensor3;
    fn sub(mut self, rhs: SymTensor3) -> SymTensor3 {
        self.0.iter_mut().zip(rhs.0).for_each(|(a, b)| *a -= b);
        self
    }
}

impl Mul<f64> for SymTensor3 {
    type Output = SymTensor3;
    fn mul(mut self, s: f64) -> SymTensor3 {
        self.0.iter_mut().for_each(|v| *v *= s);
        self
    }
}

impl Neg for SymTensor3 {
    type Output = SymTensor3;
    fn neg(self) -> SymTensor3 {
        self * -1.0
    }
}

/// Left stretch `V = sqrt(F Fᵀ)` of a deformation gradient with positive determinant.
pub fn left_stretch(f: &Tensor3) -> Result<SymTensor3> {
    ensure_finite(&f.to_row_vec(), "deformation gradient")?;
    let det = f.det();
    if det <= 0.0 {
        return Err(Error::NotOrientationPreserving { det });
    }
    f.left_gram().sqrt_spd()
}
