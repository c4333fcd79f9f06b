//! Eulerian (Almansi) strain and its series in the reduced stresses.
//!
//! With `A = σ'_mn + σ' g_mn` the Almansi strain of the Kirchhoff law is
//!
//! ```text
//! 2 e = A/1! - A²/2! + A³/3! - ... = I - exp(-A)
//! ```
//!
//! where the powers are ordinary matrix powers (`e_mi e_ik e_kn` for the cube). The series
//! converges for every argument.

use crate::error::{ensure_finite, Error, Result};
use crate::tensor::{SymTensor3, Tensor3};

/// Maximum number of terms used by the adaptive series.
pub const SERIES_MAX_TERMS: usize = 30;
/// The adaptive series stops once the next term is smaller than this (spectral norm).
pub const SERIES_TERM_TOL: f64 = 1e-14;

/// The nine partials `∂u_i/∂x_k` of the displacement from the reference state to the current
/// one, taken with respect to current coordinates; `g[(i, k)] = ∂u_i/∂x_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisplacementGradientField(pub Tensor3);

/// `2 e_kl = ∂u_l/∂x_k + ∂u_k/∂x_l - ∂u_i/∂x_k ∂u_i/∂x_l`.
///
/// The reference-from-current map is `I - g`; it must be invertible and orientation
/// preserving.
pub fn almansi_from_displacement(g: &DisplacementGradientField) -> Result<SymTensor3> {
    let g = g.0;
    ensure_finite(&g.to_row_vec(), "displacement gradient")?;
    let det = (Tensor3::identity() - g).det();
    if det <= 1e-14 {
        return Err(Error::DegenerateMotion { det });
    }
    let gtg = g.transpose().matmul(&g);
    let two_e = g + g.transpose() - gtg;
    Ok(two_e.sym() * 0.5)
}

/// Result of the adaptive series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesStrain {
    pub strain: SymTensor3,
    pub terms: usize,
}

fn argument(deviator: &SymTensor3, mean: f64) -> SymTensor3 {
    *deviator + SymTensor3::identity() * mean
}

// sum of (-1)^(n+1) A^n / n! for n = 1..; stops after `max_terms` or on a small next term
fn series(arg: SymTensor3, max_terms: usize, tol: Option<f64>) -> SeriesStrain {
    let a = arg.to_tensor();
    let mut term = a;
    let mut sum = Tensor3::zero();
    let mut used = 0;
    for n in 1..=max_terms {
        let signed = if n % 2 == 1 { term } else { -term };
        sum = sum + signed;
        used = n;
        let next = term.matmul(&a) * (1.0 / (n + 1) as f64);
        if let Some(tol) = tol {
            if next.sym().spectral_norm() < tol {
                break;
            }
        }
        term = next;
    }
    SeriesStrain {
        strain: sum.sym() * 0.5,
        terms: used,
    }
}

/// Almansi strain from the truncated series with exactly `terms` terms.
pub fn strain_from_reduced_stress_series(
    deviator: &SymTensor3,
    mean: f64,
    terms: usize,
) -> Result<SymTensor3> {
    if terms == 0 {
        return Err(Error::Domain {
            param: "terms",
            value: 0.0,
            constraint: "at least one series term is required",
        });
    }
    ensure_finite(&deviator.components(), "reduced stress")?;
    ensure_finite(&[mean], "reduced mean stress")?;
    Ok(series(argument(deviator, mean), terms, None).strain)
}

/// Almansi strain from the series, truncated once the next term drops below
/// [`SERIES_TERM_TOL`] or after [`SERIES_MAX_TERMS`] terms.
pub fn strain_from_reduced_stress_adaptive(
    deviator: &SymTensor3,
    mean: f64,
) -> Result<SeriesStrain> {
    ensure_finite(&deviator.components(), "reduced stress")?;
    ensure_finite(&[mean], "reduced mean stress")?;
    Ok(series(
        argument(deviator, mean),
        SERIES_MAX_TERMS,
        Some(SERIES_TERM_TOL),
    ))
}

/// Closed form `e = (I - exp(-(σ'_mn + σ' g_mn))) / 2`.
pub fn strain_from_reduced_stress_closed(deviator: &SymTensor3, mean: f64) -> Result<SymTensor3> {
    let e = argument(deviator, mean).map_spectral(|x| -0.5 * (-x).exp_m1())?;
    Ok(e)
}

/// Inverse map: reduced stresses `(σ'_mn, σ')` of an Almansi strain, from
/// `2 ε = -ln(I - 2e) = σ'_mn + σ' g_mn`.
pub fn reduced_stress_from_almansi(e: &SymTensor3) -> Result<(SymTensor3, f64)> {
    let es = e.eigen()?;
    if let Some(&value) = es.values.iter().find(|v| **v >= 0.5) {
        return Err(Error::Domain {
            param: "almansi strain eigenvalue",
            value,
            constraint: "must be < 1/2",
        });
    }
    let two_eps = es.compose(|v| -(-2.0 * v).ln_1p());
    let (dev, mean) = two_eps.dev_sph_split();
    Ok((dev, mean))
}
