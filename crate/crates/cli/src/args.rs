use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hencky::superposition::Integrator;
use hencky::{ElasticModuli, PoissonInput, StrainConvention, StressLaw};

#[derive(Debug, Parser)]
#[command(
    name = "hencky",
    version,
    about = "Logarithmic-strain elasticity: stresses, closed-form solutions, work integrals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the full set of elastic constants.
    Moduli(ModuliArgs),
    /// Evaluate a stress law for a homogeneous deformation.
    Stress(StressArgs),
    /// Rod in simple tension or compression, swept over the axial parameter.
    Rod(RodArgs),
    /// Membrane under equal biaxial tension, swept over the in-plane parameter.
    Membrane(MembraneArgs),
    /// Thin inflated balloon, swept over the inflation ratio.
    Balloon(BalloonArgs),
    /// Work along a stress path read from a JSON file.
    Work(WorkArgs),
    /// Compose a coaxial strain state with an increment.
    Superpose(SuperposeArgs),
    /// Integrate the Almansi strain rate under a constant velocity gradient.
    Rate(RateArgs),
    /// Run the seeded verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Significant digits of emitted numbers.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=17))]
    pub precision: u32,
}

#[derive(Debug, Args)]
pub struct Material {
    /// Shear modulus G.
    #[arg(long = "G", default_value_t = 1.0, allow_hyphen_values = true)]
    pub shear: f64,
    /// Lateral contraction number m = 1/nu.
    #[arg(long, group = "poisson", allow_hyphen_values = true)]
    pub m: Option<f64>,
    /// Poisson ratio nu.
    #[arg(long, group = "poisson", allow_hyphen_values = true)]
    pub nu: Option<f64>,
    /// Incompressible material (nu = 1/2).
    #[arg(long, group = "poisson")]
    pub incompressible: bool,
}

/// Lateral contraction number used when neither `--m`, `--nu` nor `--incompressible` is given.
pub const DEFAULT_M: f64 = 4.0;

impl Material {
    pub fn poisson_input(&self) -> PoissonInput {
        if self.incompressible {
            PoissonInput::Incompressible
        } else if let Some(nu) = self.nu {
            PoissonInput::PoissonRatio(nu)
        } else {
            PoissonInput::LateralContraction(self.m.unwrap_or(DEFAULT_M))
        }
    }

    pub fn moduli(&self) -> hencky::Result<ElasticModuli> {
        ElasticModuli::derive(self.shear, self.poisson_input())
    }
}

/// A single value or an inclusive `start:stop:count` sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + i as f64 * step
                }
            })
            .collect()
    }
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("'{p}' is not a finite number"))
        };
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                Ok(Sweep {
                    start: v,
                    stop: v,
                    count: 1,
                })
            }
            [a, b, n] => {
                let count: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("'{n}' is not a count"))?;
                if count < 2 {
                    return Err(format!("sweep count must be at least 2, got {count}"));
                }
                Ok(Sweep {
                    start: num(a)?,
                    stop: num(b)?,
                    count,
                })
            }
            _ => Err(format!("expected a value or start:stop:count, got '{s}'")),
        }
    }
}

/// Comma-separated list of exactly `N` finite numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Values<const N: usize>(pub [f64; N]);

impl<const N: usize> FromStr for Values<N> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parsed: Result<Vec<f64>, String> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| format!("'{p}' is not a finite number"))
            })
            .collect();
        let parsed = parsed?;
        let arr: [f64; N] = parsed.try_into().map_err(|v: Vec<f64>| {
            format!("expected {N} comma-separated values, got {}", v.len())
        })?;
        Ok(Values(arr))
    }
}

#[derive(Debug, Args)]
pub struct ModuliArgs {
    #[command(flatten)]
    pub material: Material,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Hooke,
    Cauchy1928,
    Kirchhoff1929,
}

impl From<Model> for StressLaw {
    fn from(m: Model) -> Self {
        match m {
            Model::Hooke => StressLaw::Hooke,
            Model::Cauchy1928 => StressLaw::Cauchy1928,
            Model::Kirchhoff1929 => StressLaw::Kirchhoff1929,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Swainger,
    Engineering,
    Almansi,
    Logarithmic,
}

impl From<Convention> for StrainConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Swainger => StrainConvention::Swainger,
            Convention::Engineering => StrainConvention::Engineering,
            Convention::Almansi => StrainConvention::Almansi,
            Convention::Logarithmic => StrainConvention::Logarithmic,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("deformation").required(true).args(["stretches", "gradient", "strain"])))]
pub struct StressArgs {
    #[command(flatten)]
    pub material: Material,
    /// Stress law.
    #[arg(long, value_enum, default_value_t = Model::Cauchy1928)]
    pub model: Model,
    /// Principal stretches l1,l2,l3 along fixed axes.
    #[arg(long, allow_hyphen_values = true)]
    pub stretches: Option<Values<3>>,
    /// Deformation gradient, nine row-major entries.
    #[arg(long, allow_hyphen_values = true)]
    pub gradient: Option<Values<9>>,
    /// Principal strains e1,e2,e3 in the convention given by --convention.
    #[arg(long, allow_hyphen_values = true)]
    pub strain: Option<Values<3>>,
    /// Strain convention of --strain.
    #[arg(long, value_enum, default_value_t = Convention::Logarithmic)]
    pub convention: Convention,
    /// Mean Cauchy stress; required to fix the pressure of an incompressible material.
    #[arg(long, allow_hyphen_values = true)]
    pub pressure: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RodArgs {
    #[command(flatten)]
    pub material: Material,
    /// Axial parameter lambda (dw/dz in the final state), value or start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Sweep,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct MembraneArgs {
    #[command(flatten)]
    pub material: Material,
    /// In-plane parameter x, value or start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Sweep,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BalloonArgs {
    #[command(flatten)]
    pub material: Material,
    /// Reference wall thickness h.
    #[arg(long, allow_hyphen_values = true)]
    pub h: f64,
    /// Reference radius R.
    #[arg(long = "R", allow_hyphen_values = true)]
    pub radius: f64,
    /// Inflation ratio R_x/R, value or start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub ratio: Sweep,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct WorkArgs {
    #[command(flatten)]
    pub material: Material,
    /// JSON array of {t, S1, S2, S3} records starting at zero stress.
    #[arg(long)]
    pub path: PathBuf,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SuperposeArgs {
    #[command(flatten)]
    pub material: Material,
    /// Prior Swainger strains e1,e2,e3.
    #[arg(long, allow_hyphen_values = true)]
    pub state: Values<3>,
    /// Swainger increment de1,de2,de3 along the same axes.
    #[arg(long, allow_hyphen_values = true)]
    pub increment: Values<3>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Euler,
    Rk4,
}

impl From<Scheme> for Integrator {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Euler => Integrator::Euler,
            Scheme::Rk4 => Integrator::RungeKutta4,
        }
    }
}

#[derive(Debug, Args)]
pub struct RateArgs {
    /// Velocity gradient dv_i/dx_j, nine row-major entries.
    #[arg(long, allow_hyphen_values = true)]
    pub velocity_gradient: Values<9>,
    /// Total time.
    #[arg(long)]
    pub duration: f64,
    /// Time step; the interval is split into ceil(duration/dt) equal steps.
    #[arg(long)]
    pub dt: f64,
    /// Integration scheme.
    #[arg(long, value_enum, default_value_t = Scheme::Rk4)]
    pub scheme: Scheme,
    /// Use "+2/3" instead of "-2/3" for the isotropic term of the linearized stress rate.
    #[arg(long)]
    pub as_printed: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed for the randomized sweeps.
    #[arg(long, env = "HENCKY_SEED")]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}
