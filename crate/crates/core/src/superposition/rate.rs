//! Rate form of the Almansi strain: `de_mn/dt = f_mn - e_ni f_im - e_mk f_kn`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::tensor::SymTensor3;

/// Time-stepping scheme for [`integrate_strain_rate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Integrator {
    /// Explicit first-order stepping.
    Euler,
    /// Classical fourth-order Runge-Kutta.
    #[default]
    RungeKutta4,
}

impl std::str::FromStr for Integrator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "euler" | "rk1" => Ok(Integrator::Euler),
            "rk4" | "runge-kutta4" => Ok(Integrator::RungeKutta4),
            other => Err(format!(
                "unknown integrator '{other}' (expected euler or rk4)"
            )),
        }
    }
}

/// `ė = f - f e - e f`.
pub fn strain_rate(e: &SymTensor3, f: &SymTensor3) -> SymTensor3 {
    let fe = f.matmul(e);
    let ef = e.matmul(f);
    *f - (fe + ef).sym()
}

/// One explicit step `e + dt·ė`.
pub fn strain_rate_update(e: &SymTensor3, f: &SymTensor3, dt: f64) -> SymTensor3 {
    *e + strain_rate(e, f) * dt
}

/// Strain history at the step boundaries, including the initial state.
#[derive(Debug, Clone, PartialEq)]
pub struct StrainTrajectory {
    pub times: Vec<f64>,
    pub strains: Vec<SymTensor3>,
}

impl StrainTrajectory {
    pub fn last(&self) -> SymTensor3 {
        *self
            .strains
            .last()
            .expect("trajectory holds the initial state")
    }
}

/// Integrates `ė = f(t) - f e - e f` from `t0` over `steps` equal steps to `t1`.
pub fn integrate_strain_rate(
    e0: SymTensor3,
    stretching: impl Fn(f64) -> SymTensor3,
    t0: f64,
    t1: f64,
    steps: usize,
    integrator: Integrator,
) -> Result<StrainTrajectory> {
    ensure_finite(&e0.components(), "initial strain")?;
    ensure_finite(&[t0, t1], "time interval")?;
    if steps == 0 {
        return Err(Error::Domain {
            param: "steps",
            value: 0.0,
            constraint: "at least one step is required",
        });
    }
    let dt = (t1 - t0) / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut strains = Vec::with_capacity(steps + 1);
    let mut e = e0;
    times.push(t0);
    strains.push(e);
    for n in 0..steps {
        let t = t0 + n as f64 * dt;
        e = match integrator {
            Integrator::Euler => strain_rate_update(&e, &stretching(t), dt),
            Integrator::RungeKutta4 => {
                let f0 = stretching(t);
                let fm = stretching(t + 0.5 * dt);
                let f1 = stretching(t + dt);
                let k1 = strain_rate(&e, &f0);
                let k2 = strain_rate(&(e + k1 * (0.5 * dt)), &fm);
                let k3 = strain_rate(&(e + k2 * (0.5 * dt)), &fm);
                let k4 = strain_rate(&(e + k3 * dt), &f1);
                e + (k1 + (k2 + k3) * 2.0 + k4) * (dt / 6.0)
            }
        };
        if !e.is_finite() {
            return Err(Error::NonFinite {
                what: "integrated strain",
            });
        }
        times.push(if n + 1 == steps { t1 } else { t + dt });
        strains.push(e);
    }
    Ok(StrainTrajectory { times, strains })
}
