use crate::constitutive::moduli::ElasticModuli;
use crate::tensor::{SymTensor3, Tensor3};

/// A stress state carried in all three representations at once.
///
/// * Cauchy (true) principal stresses `S_i`, per unit current area.
/// * Kirchhoff principal stresses `T_i = Δ·S_i`.
/// * Reduced variables `σ'_i = (T_i - T)/G` (traceless) and `σ' = 2T/(3K)`.
///
/// Construction computes every representation once, so downstream code never has to
/// convert between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressState {
    cauchy: [f64; 3],
    kirchhoff: [f64; 3],
    volume_ratio: f64,
    axes: Tensor3,
    reduced_deviator: [f64; 3],
    reduced_mean: f64,
}

fn mean3(v: &[f64; 3]) -> f64 {
    (v[0] + v[1] + v[2]) / 3.0
}

// deviator whose entries sum to exactly zero
fn exact_deviator(v: [f64; 3]) -> [f64; 3] {
    let m = mean3(&v);
    let d0 = v[0] - m;
    let d1 = v[1] - m;
    [d0, d1, -(d0 + d1)]
}

impl StressState {
    pub fn from_kirchhoff(
        kirchhoff: [f64; 3],
        axes: Tensor3,
        volume_ratio: f64,
        moduli: &ElasticModuli,
    ) -> Self {
        let cauchy = kirchhoff.map(|t| t / volume_ratio);
        Self::assemble(cauchy, kirchhoff, axes, volume_ratio, moduli)
    }

    pub fn from_cauchy(
        cauchy: [f64; 3],
        axes: Tensor3,
        volume_ratio: f64,
        moduli: &ElasticModuli,
    ) -> Self {
        let kirchhoff = cauchy.map(|s| s * volume_ratio);
        Self::assemble(cauchy, kirchhoff, axes, volume_ratio, moduli)
    }

    fn assemble(
        cauchy: [f64; 3],
        kirchhoff: [f64; 3],
        axes: Tensor3,
        volume_ratio: f64,
        moduli: &ElasticModuli,
    ) -> Self {
        let g = moduli.shear();
        StressState {
            cauchy,
            kirchhoff,
            volume_ratio,
            axes,
            reduced_deviator: exact_deviator(kirchhoff).map(|d| d / g),
            reduced_mean: 2.0 * mean3(&kirchhoff) * moduli.inverse_bulk() / 3.0,
        }
    }

    /// Replaces the mean Cauchy stress, keeping the deviator.
    ///
    /// This is how a reaction pressure enters for incompressible materials, where the
    /// constitutive laws only determine the deviatoric part.
    pub fn with_mean_cauchy(&self, mean: f64, moduli: &ElasticModuli) -> Self {
        let shift = mean - self.cauchy_mean();
        let cauchy = self.cauchy.map(|s| s + shift);
        Self::from_cauchy(cauchy, self.axes, self.volume_ratio, moduli)
    }

    /// Principal Cauchy stresses `S_i`.
    pub fn cauchy(&self) -> [f64; 3] {
        self.cauchy
    }

    /// Mean Cauchy stress `S`.
    pub fn cauchy_mean(&self) -> f64 {
        mean3(&self.cauchy)
    }

    /// Principal Kirchhoff stresses `T_i`.
    pub fn kirchhoff(&self) -> [f64; 3] {
        self.kirchhoff
    }

    pub fn kirchhoff_mean(&self) -> f64 {
        mean3(&self.kirchhoff)
    }

    /// `σ'_i`; sums to zero.
    pub fn reduced_deviator(&self) -> [f64; 3] {
        self.reduced_deviator
    }

    /// `σ'`.
    pub fn reduced_mean(&self) -> f64 {
        self.reduced_mean
    }

    pub fn volume_ratio(&self) -> f64 {
        self.volume_ratio
    }

    pub fn axes(&self) -> Tensor3 {
        self.axes
    }

    fn on_axes(&self, d: [f64; 3]) -> SymTensor3 {
        SymTensor3::diag(d).rotate(&self.axes)
    }

    pub fn cauchy_tensor(&self) -> SymTensor3 {
        self.on_axes(self.cauchy)
    }

    pub fn kirchhoff_tensor(&self) -> SymTensor3 {
        self.on_axes(self.kirchhoff)
    }

    /// `σ'_mn`, the tensor form of the reduced deviator.
    pub fn reduced_deviator_tensor(&self) -> SymTensor3 {
        self.on_axes(self.reduced_deviator)
    }
}
