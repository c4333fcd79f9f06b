//! Work done along coaxial loading paths.
//!
//! With `J = S₁² + S₂² + S₃² - (2/m)(S₁S₂ + S₃S₁ + S₂S₃)` the work per unit reference volume
//! done on a material following the Cauchy law is `A_a = (1/2E) ∫ e^(S/K) dJ`, with `S` the
//! mean stress. Per unit current volume it is `A_e = e^(-S/K) A_a`. Along a path in Kirchhoff
//! stress the work `∫ T_i dε_i` reduces to `(1/2E) ∫ dJ(T)` and depends only on the
//! endpoints.

use serde::{Deserialize, Serialize};

use crate::constitutive::laws::linear_response;
use crate::constitutive::ElasticModuli;
use crate::error::{ensure_finite, Error, Result};

/// Relative change between successive refinements at which the quadrature stops.
pub const WORK_REL_TOL: f64 = 1e-10;
/// Largest number of Simpson panels per path segment.
pub const MAX_PANELS_PER_SEGMENT: usize = 1 << 16;
/// Distance below which two path endpoints count as equal, relative to `max(1, |S|)`.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// `J = ΣS_i² - 2ν(S₁S₂ + S₃S₁ + S₂S₃)`.
pub fn j_invariant(s: [f64; 3], moduli: &ElasticModuli) -> f64 {
    let [a, b, c] = s;
    a * a + b * b + c * c - 2.0 * moduli.poisson() * (a * b + c * a + b * c)
}

fn j_gradient(s: [f64; 3], nu: f64) -> [f64; 3] {
    let [a, b, c] = s;
    [
        2.0 * (a - nu * (b + c)),
        2.0 * (b - nu * (c + a)),
        2.0 * (c - nu * (a + b)),
    ]
}

/// One sample of a stress path: loading parameter and principal stresses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathSample {
    pub t: f64,
    #[serde(rename = "S1")]
    pub s1: f64,
    #[serde(rename = "S2")]
    pub s2: f64,
    #[serde(rename = "S3")]
    pub s3: f64,
}

impl PathSample {
    pub fn stress(&self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }
}

/// Piecewise-linear path of principal stresses over a loading parameter `t ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StressPath {
    samples: Vec<PathSample>,
}

impl StressPath {
    /// A path from the unloaded state; the first sample must be zero stress.
    pub fn new(samples: Vec<PathSample>) -> Result<Self> {
        let path = Self::with_any_start(samples)?;
        if path.start() != [0.0; 3] {
            return Err(Error::InvalidPath(
                "path must start from zero stress".to_string(),
            ));
        }
        Ok(path)
    }

    /// A path that may start from a loaded state.
    pub fn with_any_start(samples: Vec<PathSample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidPath(format!(
                "need at least 2 samples, got {}",
                samples.len()
            )));
        }
        for (i, s) in samples.iter().enumerate() {
            if ![s.t, s.s1, s.s2, s.s3].iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidPath(format!("sample {i} is not finite")));
            }
            if !(0.0..=1.0).contains(&s.t) {
                return Err(Error::InvalidPath(format!(
                    "sample {i}: t = {} outside [0, 1]",
                    s.t
                )));
            }
        }
        if let Some(i) = samples.windows(2).position(|w| w[1].t <= w[0].t) {
            return Err(Error::InvalidPath(format!(
                "t must be strictly increasing (samples {i} and {})",
                i + 1
            )));
        }
        Ok(StressPath { samples })
    }

    /// Vertices joined by straight legs, with `t` spaced evenly over `[0, 1]`.
    pub fn polyline(vertices: &[[f64; 3]]) -> Result<Self> {
        Self::new(Self::spaced(vertices))
    }

    /// As [`StressPath::polyline`] but without requiring a zero start.
    pub fn polyline_with_any_start(vertices: &[[f64; 3]]) -> Result<Self> {
        Self::with_any_start(Self::spaced(vertices))
    }

    fn spaced(vertices: &[[f64; 3]]) -> Vec<PathSample> {
        let n = vertices.len().saturating_sub(1).max(1) as f64;
        vertices
            .iter()
            .enumerate()
            .map(|(i, v)| PathSample {
                t: i as f64 / n,
                s1: v[0],
                s2: v[1],
                s3: v[2],
            })
            .collect()
    }

    /// Path given by principal logarithmic strains, mapped to Cauchy stress through the
    /// finite Cauchy law.
    pub fn from_log_strain_path(
        samples: &[(f64, [f64; 3])],
        moduli: &ElasticModuli,
    ) -> Result<Self> {
        if moduli.is_incompressible() {
            return Err(Error::UnsupportedRegime {
                param: "m",
                value: 2.0,
                reason: "an incompressible strain path does not determine the mean stress",
            });
        }
        let mut out = Vec::with_capacity(samples.len());
        for &(t, eps) in samples {
            ensure_finite(&eps, "strain path")?;
            let [s1, s2, s3] = linear_response(eps, moduli)?;
            out.push(PathSample { t, s1, s2, s3 });
        }
        Self::with_any_start(out)
    }

    /// Parses a JSON array of `{t, S1, S2, S3}` records.
    pub fn from_json_str(json: &str) -> Result<Self> {
        let samples: Vec<PathSample> =
            serde_json::from_str(json).map_err(|e| Error::InvalidPath(e.to_string()))?;
        Self::new(samples)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.samples).expect("path samples serialize")
    }

    pub fn samples(&self) -> &[PathSample] {
        &self.samples
    }

    pub fn start(&self) -> [f64; 3] {
        self.samples[0].stress()
    }

    pub fn end(&self) -> [f64; 3] {
        self.samples[self.samples.len() - 1].stress()
    }
}

/// Work along a path.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorkResult {
    /// Work per unit reference volume, `A_a`.
    pub reference_energy: f64,
    /// Work per unit current volume, `A_e = e^(-S/K) A_a` at the endpoint.
    pub current_energy: f64,
    /// `J` at each path sample.
    pub j_values: Vec<f64>,
    /// Simpson panels used on each segment.
    pub panels_per_segment: usize,
}

#[derive(Clone, Copy)]
enum Weight {
    Volumetric,
    Unit,
}

// composite Simpson over every straight segment; returns (total, sum of |segment totals|)
fn simpson(path: &StressPath, moduli: &ElasticModuli, weight: Weight, panels: usize) -> (f64, f64) {
    let nu = moduli.poisson();
    let inv_k = moduli.inverse_bulk();
    let inv_2e = 0.5 / moduli.young();
    let mut total = 0.0;
    let mut scale = 0.0;
    for w in path.samples.windows(2) {
        let a = w[0].stress();
        let b = w[1].stress();
        let d = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let integrand = |u: f64| {
            let s = [a[0] + u * d[0], a[1] + u * d[1], a[2] + u * d[2]];
            let g = j_gradient(s, nu);
            let dj = g[0] * d[0] + g[1] * d[1] + g[2] * d[2];
            match weight {
                Weight::Volumetric => ((s[0] + s[1] + s[2]) / 3.0 * inv_k).exp() * dj,
                Weight::Unit => dj,
            }
        };
        let h = 1.0 / (2 * panels) as f64;
        let mut acc = integrand(0.0) + integrand(1.0);
        for i in 1..2 * panels {
            let c = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += c * integrand(i as f64 * h);
        }
        let seg = acc * h / 3.0 * inv_2e;
        total += seg;
        scale += seg.abs();
    }
    (total, scale)
}

fn adaptive(path: &StressPath, moduli: &ElasticModuli, weight: Weight) -> Result<(f64, usize)> {
    let mut panels = 1;
    let (mut prev, _) = simpson(path, moduli, weight, panels);
    loop {
        panels *= 2;
        let (next, scale) = simpson(path, moduli, weight, panels);
        let gap = (next - prev).abs();
        if gap <= WORK_REL_TOL * scale {
            return Ok((next, panels));
        }
        if panels >= MAX_PANELS_PER_SEGMENT {
            return Err(Error::AccuracyNotReached {
                best: next,
                gap,
                panels,
            });
        }
        prev = next;
    }
}

fn result(path: &StressPath, moduli: &ElasticModuli, a: f64, panels: usize) -> WorkResult {
    let end = path.end();
    let mean = (end[0] + end[1] + end[2]) / 3.0;
    WorkResult {
        reference_energy: a,
        current_energy: (-mean * moduli.inverse_bulk()).exp() * a,
        j_values: path
            .samples
            .iter()
            .map(|s| j_invariant(s.stress(), moduli))
            .collect(),
        panels_per_segment: panels,
    }
}

/// `A_a = (1/2E) ∫ e^(S/K) dJ`, refined until successive estimates agree to
/// [`WORK_REL_TOL`].
pub fn work_along_path(path: &StressPath, moduli: &ElasticModuli) -> Result<WorkResult> {
    let (a, panels) = adaptive(path, moduli, Weight::Volumetric)?;
    Ok(result(path, moduli, a, panels))
}

/// Same integral with a fixed number of Simpson panels on every segment.
pub fn work_along_path_fixed(
    path: &StressPath,
    moduli: &ElasticModuli,
    panels_per_segment: usize,
) -> Result<WorkResult> {
    if panels_per_segment == 0 {
        return Err(Error::Domain {
            param: "panels",
            value: 0.0,
            constraint: "at least one panel per segment is required",
        });
    }
    let (a, _) = simpson(path, moduli, Weight::Volumetric, panels_per_segment);
    Ok(result(path, moduli, a, panels_per_segment))
}

/// `∫ T_i dε_i` along a path read as Kirchhoff stresses.
pub fn kirchhoff_work_along_path(path: &StressPath, moduli: &ElasticModuli) -> Result<f64> {
    Ok(adaptive(path, moduli, Weight::Unit)?.0)
}

fn check_endpoints(a: &StressPath, b: &StressPath) -> Result<()> {
    let (ea, eb) = (a.end(), b.end());
    let distance = ea
        .iter()
        .zip(eb)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt();
    let size = ea.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
    if distance > ENDPOINT_TOL * size {
        return Err(Error::EndpointMismatch { distance });
    }
    Ok(())
}

/// `A_a(path_a) - A_a(path_b)` for two paths ending at the same stress.
pub fn path_dependence_gap(
    path_a: &StressPath,
    path_b: &StressPath,
    moduli: &ElasticModuli,
) -> Result<f64> {
    check_endpoints(path_a, path_b)?;
    Ok(work_along_path(path_a, moduli)?.reference_energy
        - work_along_path(path_b, moduli)?.reference_energy)
}

/// The Kirchhoff-work counterpart of [`path_dependence_gap`].
pub fn kirchhoff_path_gap(
    path_a: &StressPath,
    path_b: &StressPath,
    moduli: &ElasticModuli,
) -> Result<f64> {
    check_endpoints(path_a, path_b)?;
    Ok(kirchhoff_work_along_path(path_a, moduli)? - kirchhoff_work_along_path(path_b, moduli)?)
}

/// Hydrostatic-then-deviatoric and deviatoric-then-hydrostatic two-leg paths to
/// `(s + d, s - d, s)`.
pub fn two_leg_paths(s: f64, d: f64) -> Result<(StressPath, StressPath)> {
    let end = [s + d, s - d, s];
    Ok((
        StressPath::polyline(&[[0.0; 3], [s, s, s], end])?,
        StressPath::polyline(&[[0.0; 3], [d, -d, 0.0], end])?,
    ))
}
