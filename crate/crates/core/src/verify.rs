//! Seeded self-check suite covering the invariants of every module.
//!
//! Each check reports the measured worst case next to its bound, so a report doubles as a
//! record of how much margin the implementation has.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analytic::{balloon, balloon_peak_ratio, membrane, rod, rod_energy};
use crate::constitutive::{
    cauchy_stress_1928, hencky_energy_from_log_strains, hooke_stress, kirchhoff_stress_1929,
    DeformationState, ElasticModuli, PoissonInput, StrainConvention, StrainState,
};
use crate::error::Result;
use crate::superposition::{
    compose_coaxial, corotational_derivative, integrate_strain_rate,
    strain_from_reduced_stress_adaptive, strain_from_reduced_stress_closed,
    stress_increment_coaxial, Integrator, VelocityGradient,
};
use crate::tensor::{SymTensor3, Tensor3};
use crate::work::{
    kirchhoff_path_gap, path_dependence_gap, two_leg_paths, work_along_path, StressPath,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x4865_6e63_6b79;

/// Cauchy-work gap of the two-leg paths with `s = d = 1`, `G = 1`, `m = 4`.
pub const TWO_LEG_GAP_M4: f64 = 0.411_059_400_195_254_5;

/// One verified property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Worst value observed.
    pub measured: f64,
    /// Bound the measured value is compared against.
    pub bound: f64,
    /// `true` when `measured` must stay below `bound`; `false` when it must exceed it.
    pub upper: bool,
    pub passed: bool,
}

impl Check {
    pub fn below(name: &str, measured: f64, bound: f64) -> Self {
        Check {
            name: name.to_string(),
            measured,
            bound,
            upper: true,
            passed: measured <= bound,
        }
    }

    pub fn above(name: &str, measured: f64, bound: f64) -> Self {
        Check {
            name: name.to_string(),
            measured,
            bound,
            upper: false,
            passed: measured > bound,
        }
    }

    fn failed(name: &str, err: crate::Error) -> Self {
        log::error!("check {name} raised: {err}");
        Check {
            name: name.to_string(),
            measured: f64::NAN,
            bound: f64::NAN,
            upper: true,
            passed: false,
        }
    }
}

/// Outcome of [`run`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type CheckFn = fn(&mut ChaCha8Rng) -> Result<Check>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("rod_secant_ratio", rod_secant_ratio),
    ("rod_free_lateral_surface", rod_free_lateral_surface),
    ("membrane_free_thickness", membrane_free_thickness),
    (
        "kirchhoff_work_path_independent",
        kirchhoff_path_independence,
    ),
    ("cauchy_work_two_leg_gap", cauchy_two_leg_gap),
    ("energy_gradient_is_kirchhoff_stress", energy_gradient),
    ("rod_energy_quadrature", rod_energy_quadrature),
    ("rod_energy_incompressible_limit", rod_energy_incompressible),
    ("balloon_peak_golden_section", balloon_peak),
    ("almansi_series_closed_form", series_closed_form),
    ("strain_rate_rk4_exact", rate_exact),
    ("strain_rate_rk4_order", rate_order),
    ("corotational_objectivity", objectivity),
    ("hooke_recovery", hooke_recovery),
    ("strain_convention_roundtrip", convention_roundtrip),
    ("coaxial_elastic_determinacy", coaxial_determinacy),
    ("tensor_exp_log_roundtrip", exp_log_roundtrip),
];

/// Runs every check with a generator seeded by `seed`.
pub fn run(seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = CHECKS
        .iter()
        .map(|(name, f)| match f(&mut rng) {
            Ok(mut c) => {
                c.name = name.to_string();
                c
            }
            Err(e) => Check::failed(name, e),
        })
        .collect();
    VerifyReport { seed, checks }
}

fn random_moduli(rng: &mut ChaCha8Rng) -> Result<ElasticModuli> {
    let g = rng.gen_range(0.5..2.0);
    let m = rng.gen_range(2.5..10.0);
    ElasticModuli::derive(g, PoissonInput::LateralContraction(m))
}

fn m4() -> Result<ElasticModuli> {
    ElasticModuli::from_shear_and_m(1.0, 4.0)
}

fn random_sym(rng: &mut ChaCha8Rng, scale: f64) -> SymTensor3 {
    let mut c = [0.0; 6];
    for v in c.iter_mut() {
        *v = rng.gen_range(-scale..scale);
    }
    SymTensor3::new(c[0], c[1], c[2], c[3], c[4], c[5])
}

fn random_unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

fn cross_matrix(a: [f64; 3], w: f64) -> Tensor3 {
    Tensor3::from_rows([
        [0.0, -w * a[2], w * a[1]],
        [w * a[2], 0.0, -w * a[0]],
        [-w * a[1], w * a[0], 0.0],
    ])
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn rod_secant_ratio(_: &mut ChaCha8Rng) -> Result<Check> {
    let m = m4()?;
    let ratio = rod(0.5, &m)?.secant_ratio(&m);
    Ok(Check::below("", (ratio - 1.4).abs(), 0.02))
}

fn rod_free_lateral_surface(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let m = random_moduli(rng)?;
        let lambda = -3.0 + 3.95 * (i as f64 + 0.5) / 200.0;
        let sol = rod(lambda, &m)?;
        let d = DeformationState::from_stretches(sol.stretches())?;
        let s = cauchy_stress_1928(&d, &m)?.cauchy();
        let err = max_abs_diff(&s, &[0.0, 0.0, sol.axial_stress]) / m.shear();
        worst = worst.max(err);
    }
    Ok(Check::below("", worst, 1e-12))
}

fn membrane_free_thickness(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let m = random_moduli(rng)?;
        let sol = membrane(rng.gen_range(-2.0..0.9), &m)?;
        let d = DeformationState::from_stretches(sol.stretches())?;
        let s = cauchy_stress_1928(&d, &m)?.cauchy();
        let err = max_abs_diff(&s, &[sol.in_plane_stress, sol.in_plane_stress, 0.0]) / m.shear();
        worst = worst.max(err);
    }
    Ok(Check::below("", worst, 1e-12))
}

fn random_path_to(rng: &mut ChaCha8Rng, end: [f64; 3], scale: f64) -> Result<StressPath> {
    let legs = rng.gen_range(1..=4);
    let mut vertices = vec![[0.0; 3]];
    for _ in 1..legs {
        vertices.push([
            rng.gen_range(-scale..scale),
            rng.gen_range(-scale..scale),
            rng.gen_range(-scale..scale),
        ]);
    }
    vertices.push(end);
    StressPath::polyline(&vertices)
}

fn kirchhoff_path_independence(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let m = random_moduli(rng)?;
        let g = m.shear();
        let end = [
            rng.gen_range(-g..g),
            rng.gen_range(-g..g),
            rng.gen_range(-g..g),
        ];
        let a = random_path_to(rng, end, g)?;
        let b = random_path_to(rng, end, g)?;
        worst = worst.max(kirchhoff_path_gap(&a, &b, &m)?.abs() / g);
    }
    Ok(Check::below("", worst, 1e-9))
}

fn cauchy_two_leg_gap(_: &mut ChaCha8Rng) -> Result<Check> {
    let (a, b) = two_leg_paths(1.0, 1.0)?;
    let gap = path_dependence_gap(&a, &b, &m4()?)?;
    let rel = (gap - TWO_LEG_GAP_M4).abs() / TWO_LEG_GAP_M4;
    if gap <= 1e-3 {
        return Ok(Check::above("", gap, 1e-3));
    }
    Ok(Check::below("", rel, 1e-6))
}

fn energy_gradient(rng: &mut ChaCha8Rng) -> Result<Check> {
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let m = random_moduli(rng)?;
        let eps: [f64; 3] = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let t = kirchhoff_stress_1929(&DeformationState::from_log_strains(eps)?, &m)?.kirchhoff();
        for i in 0..3 {
            let (mut up, mut down) = (eps, eps);
            up[i] += h;
            down[i] -= h;
            let fd = (hencky_energy_from_log_strains(up, &m)?
                - hencky_energy_from_log_strains(down, &m)?)
                / (2.0 * h);
            worst = worst.max((fd - t[i]).abs() / m.shear());
        }
    }
    Ok(Check::below("", worst, 1e-8))
}

// recursive adaptive Simpson
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[derive(Clone, Copy)]
    struct Panel {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
    }
    fn step(f: &dyn Fn(f64) -> f64, p: Panel, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (p.a + p.b);
        let (flm, frm) = (f(0.5 * (p.a + m)), f(0.5 * (m + p.b)));
        let left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        let right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        let delta = left + right - p.whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        let lower = Panel {
            b: m,
            fm: flm,
            fb: p.fm,
            whole: left,
            ..p
        };
        let upper = Panel {
            a: m,
            fa: p.fm,
            fm: frm,
            whole: right,
            ..p
        };
        step(f, lower, tol / 2.0, depth - 1) + step(f, upper, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(
        f,
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        40,
    )
}

fn rod_energy_quadrature(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for i in 0..=40 {
        let m = random_moduli(rng)?;
        let k3 = 3.0 * m.bulk().expect("compressible");
        let e = m.young();
        let sz = k3 * (-1.0 + 2.0 * i as f64 / 40.0);
        if sz == 0.0 {
            worst = worst.max(rod_energy(0.0, &m)?.abs());
            continue;
        }
        let closed = rod_energy(sz, &m)?;
        let integrand = |s: f64| (s / k3).exp() * s / e;
        let oracle = adaptive_simpson(&integrand, 0.0, sz, 1e-14 * closed.abs());
        let path = StressPath::polyline(&[[0.0; 3], [0.0, 0.0, sz]])?;
        let integrated = work_along_path(&path, &m)?.reference_energy;
        worst = worst
            .max((closed - oracle).abs() / oracle.abs())
            .max((integrated - oracle).abs() / oracle.abs());
    }
    Ok(Check::below("", worst, 1e-8))
}

fn rod_energy_incompressible(rng: &mut ChaCha8Rng) -> Result<Check> {
    let m = ElasticModuli::derive(rng.gen_range(0.5..2.0), PoissonInput::Incompressible)?;
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let s: f64 = rng.gen_range(-3.0..3.0);
        let exact = s * s / (2.0 * m.young());
        worst = worst.max((rod_energy(s, &m)? - exact).abs());
    }
    Ok(Check::below("", worst, 1e-10))
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

fn balloon_peak(_: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for lc in [3.0, 4.0, 6.0, 10.0] {
        let m = ElasticModuli::from_shear_and_m(1.0, lc)?;
        let p = |rho: f64| {
            balloon(rho, 0.01, 1.0, &m)
                .map(|b| b.pressure)
                .unwrap_or(f64::NAN)
        };
        let found = golden_section_max(p, 1.0, 4.0, 1e-10);
        worst = worst.max((found - balloon_peak_ratio(&m)).abs());
    }
    Ok(Check::below("", worst, 1e-6))
}

fn series_closed_form(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let a = random_sym(rng, 1.0);
        let a = a * (rng.gen_range(0.0..1.0) / a.spectral_norm());
        let (dev, mean) = a.dev_sph_split();
        let series = strain_from_reduced_stress_adaptive(&dev, mean)?.strain;
        let closed = strain_from_reduced_stress_closed(&dev, mean)?;
        worst = worst.max((series - closed).spectral_norm());
    }
    Ok(Check::below("", worst, 1e-12))
}

fn uniaxial_rate_error(a: f64, steps: usize) -> Result<f64> {
    let f = SymTensor3::diag([a, 0.0, 0.0]);
    let traj = integrate_strain_rate(
        SymTensor3::zero(),
        |_| f,
        0.0,
        1.0 / a,
        steps,
        Integrator::RungeKutta4,
    )?;
    let exact = 0.5 * (1.0 - (-2.0f64).exp());
    Ok((traj.last()[(0, 0)] - exact).abs())
}

fn rate_exact(rng: &mut ChaCha8Rng) -> Result<Check> {
    let a = rng.gen_range(0.1..10.0);
    Ok(Check::below("", uniaxial_rate_error(a, 1000)?, 1e-10))
}

fn rate_order(rng: &mut ChaCha8Rng) -> Result<Check> {
    let a = rng.gen_range(0.1..10.0);
    let (e1, e2, e3) = (
        uniaxial_rate_error(a, 10)?,
        uniaxial_rate_error(a, 20)?,
        uniaxial_rate_error(a, 40)?,
    );
    let order = (e1 / e2).log2().min((e2 / e3).log2());
    Ok(Check::above("", order, 3.9))
}

fn objectivity(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let axis = random_unit(rng);
        let rate = rng.gen_range(-3.0..3.0);
        let t = rng.gen_range(0.0..2.0);
        let spin = cross_matrix(axis, rate);
        let q = Tensor3::rotation(axis, rate * t);
        // field sigma(x, t) = Q (S0 + X_1 S1) Q^T with X = Q^T x
        let s0 = random_sym(rng, 1.0);
        let s1 = random_sym(rng, 1.0);
        let x = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let reference = q.transpose().apply(x);
        let sigma = (s0 + s1 * reference[0]).rotate(&q);
        let v = spin.apply(x);
        let s1_spatial = s1.rotate(&q);
        let drift = q.transpose().apply(v)[0];
        let sig = sigma.to_tensor();
        let field_rate = (spin.matmul(&sig) - sig.matmul(&spin)).sym() - s1_spatial * drift;
        let advective = s1_spatial * drift;
        let omega = VelocityGradient::from_velocity_jacobian(spin)?.spin();
        let out = corotational_derivative(&field_rate, &advective, &sigma, &omega)?;
        worst = worst.max(out.norm());
    }
    Ok(Check::below("", worst, 1e-12))
}

fn hooke_recovery(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let m = random_moduli(rng)?;
        let stretches = [0; 3].map(|_| 1.0 + rng.gen_range(-1e-6..1e-6));
        let d = DeformationState::from_stretches(stretches)?;
        let e = StrainState::from_stretches(StrainConvention::Swainger, stretches)?;
        let hooke = hooke_stress(&e, &m)?.cauchy();
        let c = cauchy_stress_1928(&d, &m)?.cauchy();
        let k = kirchhoff_stress_1929(&d, &m)?.kirchhoff();
        let g = m.shear();
        worst = worst
            .max(max_abs_diff(&c, &hooke) / g)
            .max(max_abs_diff(&k, &hooke) / g);
    }
    Ok(Check::below("", worst, 1e-11))
}

fn convention_roundtrip(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let stretch = rng.gen_range(-2.0f64..2.0).exp();
        for from in StrainConvention::ALL {
            let v = from.from_stretch(stretch)?;
            for to in StrainConvention::ALL {
                let there = to.from_logarithmic(from.to_logarithmic(v)?);
                let back = from.from_logarithmic(to.to_logarithmic(there)?);
                worst = worst.max((back - v).abs() / v.abs().max(1.0));
            }
        }
    }
    Ok(Check::below("", worst, 1e-14))
}

fn coaxial_determinacy(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let m = random_moduli(rng)?;
        let e = [0; 3].map(|_| rng.gen_range(-1.0..0.6));
        let de = [0; 3].map(|_| rng.gen_range(-1.0..0.6));
        let stress = |s: [f64; 3]| -> Result<[f64; 3]> {
            let st = StrainState::new(StrainConvention::Swainger, s)?;
            Ok(cauchy_stress_1928(&DeformationState::from_strain(&st)?, &m)?.cauchy())
        };
        let before = stress(e)?;
        let after = stress(compose_coaxial(e, de)?)?;
        let inc = stress_increment_coaxial(de, &m)?.delta_stress;
        for i in 0..3 {
            worst = worst.max((after[i] - before[i] - inc[i]).abs() / m.shear());
        }
    }
    Ok(Check::below("", worst, 1e-12))
}

fn exp_log_roundtrip(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let q = Tensor3::rotation(random_unit(rng), rng.gen_range(0.0..std::f64::consts::PI));
        let log_cond: f64 = rng.gen_range(0.0..6.0) * std::f64::consts::LN_10;
        let lo = rng.gen_range(-3.0..3.0);
        let d = [lo, lo + rng.gen_range(0.0..1.0) * log_cond, lo + log_cond].map(f64::exp);
        let a = SymTensor3::diag(d).rotate(&q);
        let back = a.log_spd()?.exp_sym()?;
        worst = worst.max((back - a).norm() / a.norm());
    }
    Ok(Check::below("", worst, 1e-12))
}
