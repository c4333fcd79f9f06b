//! Velocity gradient, the linearized superposition rate and the corotational stress rate.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::tensor::{SymTensor3, Tensor3};

/// Tolerance on `‖ω + ωᵀ‖ / max(1, ‖ω‖)` for accepting a spin tensor.
pub const ANTISYMMETRY_TOL: f64 = 1e-12;

/// Spatial velocity gradient stored as `grad[(m, n)] = ∂v_n/∂x_m`.
///
/// The stretching is `f_mn = (∂v_n/∂x_m + ∂v_m/∂x_n)/2` and the spin is
/// `ω_mn = (∂v_n/∂x_m - ∂v_m/∂x_n)/2`; `f + ω` gives back the stored gradient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityGradient {
    grad: Tensor3,
}

impl VelocityGradient {
    /// From `nabla_v[(m, n)] = ∂v_n/∂x_m`.
    pub fn from_nabla_v(nabla_v: Tensor3) -> Result<Self> {
        ensure_finite(&nabla_v.to_row_vec(), "velocity gradient")?;
        Ok(VelocityGradient { grad: nabla_v })
    }

    /// From the Jacobian `l[(i, j)] = ∂v_i/∂x_j`.
    pub fn from_velocity_jacobian(l: Tensor3) -> Result<Self> {
        Self::from_nabla_v(l.transpose())
    }

    /// `∂v_n/∂x_m` at `(m, n)`.
    pub fn nabla_v(&self) -> Tensor3 {
        self.grad
    }

    /// `∂v_i/∂x_j` at `(i, j)`.
    pub fn jacobian(&self) -> Tensor3 {
        self.grad.transpose()
    }

    /// Stretching `f_mn`.
    pub fn stretching(&self) -> SymTensor3 {
        self.grad.sym()
    }

    /// Spin `ω_mn`.
    pub fn spin(&self) -> Tensor3 {
        self.grad.skew()
    }

    /// `∂v_i/∂x_i`.
    pub fn divergence(&self) -> f64 {
        self.grad.trace()
    }
}

/// Sign of the isotropic term in the linearized deviatoric rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RateConvention {
    /// `- (2/3) g_mn ∂v_i/∂x_i`, giving a traceless deviatoric rate.
    #[default]
    Traceless,
    /// `+ (2/3) g_mn ∂v_i/∂x_i`; the deviatoric rate then carries trace `4 ∂v_i/∂x_i`.
    AsPrinted,
}

/// Rates of the reduced stresses for small reduced stresses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedStressRate {
    /// Rate of `σ'_mn`.
    pub deviator: SymTensor3,
    /// Rate of `σ'`.
    pub mean: f64,
}

/// `dσ'_mn/dt = ∂v_m/∂x_n + ∂v_n/∂x_m ∓ (2/3) g_mn ∂v_i/∂x_i` and
/// `dσ'/dt = (2/3) ∂v_i/∂x_i`.
pub fn linearized_superposition_rate(
    v: &VelocityGradient,
    convention: RateConvention,
) -> ReducedStressRate {
    let div = v.divergence();
    let deviator = match convention {
        RateConvention::Traceless => (v.stretching() * 2.0).deviator(),
        RateConvention::AsPrinted => {
            v.stretching() * 2.0 + SymTensor3::identity() * (2.0 * div / 3.0)
        }
    };
    ReducedStressRate {
        deviator,
        mean: 2.0 * div / 3.0,
    }
}

fn check_antisymmetric(omega: &Tensor3) -> Result<()> {
    ensure_finite(&omega.to_row_vec(), "spin")?;
    let asymmetry = (*omega + omega.transpose()).norm();
    if asymmetry > ANTISYMMETRY_TOL * omega.norm().max(1.0) {
        return Err(Error::NotAntisymmetric { asymmetry });
    }
    Ok(())
}

/// Stress rate following the rotation of the material:
///
/// `δσ'/δt = ∂σ'/∂t + v_i ∂σ'/∂x_i + ω σ' - σ' ω`
///
/// with `ω` the spin of [`VelocityGradient::spin`]. `field_rate` is the local time
/// derivative and `advective` the convective term `v_i ∂σ'_mn/∂x_i`. The spin terms vanish
/// for the rotation of a stress state that is constant in the corotating frame.
pub fn corotational_derivative(
    field_rate: &SymTensor3,
    advective: &SymTensor3,
    sigma: &SymTensor3,
    omega: &Tensor3,
) -> Result<SymTensor3> {
    check_antisymmetric(omega)?;
    let s = sigma.to_tensor();
    let spin_terms = omega.matmul(&s) - s.matmul(omega);
    Ok(*field_rate + *advective + spin_terms.sym())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shear(rate: f64) -> VelocityGradient {
        let mut l = Tensor3::zero();
        l.0[0][1] = rate;
        VelocityGradient::from_velocity_jacobian(l).unwrap()
    }

    #[test]
    fn decomposition_reconstructs() {
        let g = Tensor3::from_rows([[0.1, 0.4, -0.2], [0.3, -0.5, 0.7], [0.0, 0.2, 0.9]]);
        let v = VelocityGradient::from_nabla_v(g).unwrap();
        assert!((v.stretching().to_tensor() + v.spin() - g).norm() < 1e-16);
        let w = v.spin();
        assert_eq!(w + w.transpose(), Tensor3::zero());
    }

    #[test]
    fn zero_velocity() {
        let v = VelocityGradient::from_nabla_v(Tensor3::zero()).unwrap();
        let r = linearized_superposition_rate(&v, RateConvention::Traceless);
        assert_eq!(r.deviator, SymTensor3::zero());
        assert_eq!(r.mean, 0.0);
    }

    #[test]
    fn simple_shear_rate() {
        let r = linearized_superposition_rate(&shear(0.3), RateConvention::Traceless);
        assert_eq!(r.deviator[(0, 1)], 0.3);
        assert_eq!(r.deviator[(0, 0)], 0.0);
        assert_eq!(r.mean, 0.0);
    }

    #[test]
    fn uniform_expansion() {
        let a = 0.2;
        let v = VelocityGradient::from_nabla_v(Tensor3::diag([a; 3])).unwrap();
        let r = linearized_superposition_rate(&v, RateConvention::Traceless);
        assert!(r.deviator.norm() < 1e-15);
        assert!((r.mean - 2.0 * a).abs() < 1e-16);
        let p = linearized_superposition_rate(&v, RateConvention::AsPrinted);
        assert!((p.deviator.trace() - 12.0 * a).abs() < 1e-15);
    }

    #[test]
    fn static_stress_under_spin() {
        let (s, w) = (1.5, 0.4);
        let omega = Tensor3::from_rows([[0.0, -w, 0.0], [w, 0.0, 0.0], [0.0, 0.0, 0.0]]);
        let sigma = SymTensor3::diag([s, -s, 0.0]);
        let z = SymTensor3::zero();
        let out = corotational_derivative(&z, &z, &sigma, &omega).unwrap();
        let c = out.components();
        assert!((c[3].abs() - 2.0 * s * w).abs() < 1e-15);
        for i in [0, 1, 2, 4, 5] {
            assert_eq!(c[i], 0.0);
        }
    }

    #[test]
    fn identity_is_objective() {
        let omega = Tensor3::from_rows([[0.0, 0.3, -0.1], [-0.3, 0.0, 0.2], [0.1, -0.2, 0.0]]);
        let z = SymTensor3::zero();
        let out = corotational_derivative(&z, &z, &SymTensor3::identity(), &omega).unwrap();
        assert!(out.norm() < 1e-16);
    }

    #[test]
    fn symmetric_spin_rejected() {
        let z = SymTensor3::zero();
        let bad = Tensor3::diag([1.0, 0.0, 0.0]);
        assert!(matches!(
            corotational_derivative(&z, &z, &z, &bad),
            Err(Error::NotAntisymmetric { .. })
        ));
    }
}
