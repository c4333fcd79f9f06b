use hencky::analytic::{balloon, balloon_peak_ratio, membrane, rod};
use hencky::constitutive::{hencky_energy, log_strains_from_kirchhoff};
use hencky::superposition::{
    compose_coaxial, integrate_strain_rate, linearized_superposition_rate,
    reduced_stress_from_almansi, stress_increment_coaxial, RateConvention, VelocityGradient,
};
use hencky::work::{kirchhoff_work_along_path, work_along_path, StressPath};
use hencky::{
    verify, DeformationState, ElasticModuli, StrainConvention, StrainState, StressLaw, SymTensor3,
    Tensor3,
};

use crate::args::{
    BalloonArgs, Command, Format, Material, MembraneArgs, ModuliArgs, Output, RateArgs, RodArgs,
    StressArgs, SuperposeArgs, VerifyArgs, WorkArgs,
};
use crate::output::{Cell, CheckLine, Report};
use crate::CliError;

/// A finished report together with how to print it.
pub struct Outcome {
    pub report: Report,
    pub format: Format,
    pub precision: u32,
    /// Whether every check in the report passed.
    pub passed: bool,
}

impl Outcome {
    fn new(report: Report, output: &Output) -> Self {
        let passed = report.checks.iter().all(|c| c.passed);
        Outcome {
            report,
            format: output.format,
            precision: output.precision,
            passed,
        }
    }
}

pub fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Moduli(a) => moduli(a),
        Command::Stress(a) => stress(a),
        Command::Rod(a) => rod_sweep(a),
        Command::Membrane(a) => membrane_sweep(a),
        Command::Balloon(a) => balloon_sweep(a),
        Command::Work(a) => work(a),
        Command::Superpose(a) => superpose(a),
        Command::Rate(a) => rate(a),
        Command::Verify(a) => verify_suite(a),
    }
}

fn material_config(report: Report, material: &Material, moduli: &ElasticModuli) -> Report {
    report
        .config("G", material.shear)
        .config("m", moduli.lateral_contraction())
        .config("nu", moduli.poisson())
        .config("incompressible", moduli.is_incompressible())
}

fn opt(v: Option<f64>) -> Cell {
    Cell::Num(v.unwrap_or(f64::INFINITY))
}

fn moduli(a: ModuliArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let mut report = Report::new(&["G", "m", "nu", "k", "K", "E", "Lambda", "incompressible"])
        .config("command", "moduli");
    report.push(vec![
        m.shear().into(),
        m.lateral_contraction().into(),
        m.poisson().into(),
        opt(m.k()),
        opt(m.bulk()),
        m.young().into(),
        opt(m.lame()),
        m.is_incompressible().into(),
    ]);
    Ok(Outcome::new(report, &a.output))
}

fn stress(a: StressArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let d = if let Some(s) = a.stretches {
        DeformationState::from_stretches(s.0)?
    } else if let Some(g) = a.gradient {
        DeformationState::from_gradient(Tensor3::from_row_slice(&g.0))?
    } else if let Some(e) = a.strain {
        DeformationState::from_strain(&StrainState::new(a.convention.into(), e.0)?)?
    } else {
        return Err(CliError::Usage(
            "one of --stretches, --gradient or --strain is required".into(),
        ));
    };
    let law: StressLaw = a.model.into();
    let mut state = law.evaluate(&d, &m)?;
    match a.pressure {
        Some(p) => state = state.with_mean_cauchy(p, &m),
        None if m.is_incompressible() => {
            log::warn!("incompressible material without --pressure: mean stress set to zero");
        }
        None => {}
    }
    let mut report = material_config(
        Report::new(&[
            "stretch_1",
            "stretch_2",
            "stretch_3",
            "eps_hencky_1",
            "eps_hencky_2",
            "eps_hencky_3",
            "volume_ratio",
            "S_cauchy_1",
            "S_cauchy_2",
            "S_cauchy_3",
            "T_kirchhoff_1",
            "T_kirchhoff_2",
            "T_kirchhoff_3",
            "sigma_reduced_dev_1",
            "sigma_reduced_dev_2",
            "sigma_reduced_dev_3",
            "sigma_reduced_mean",
            "energy_hencky_ref",
        ]),
        &a.material,
        &m,
    )
    .config("command", "stress")
    .config("model", law.name());
    let mut row: Vec<Cell> = Vec::new();
    row.extend(d.principal_stretches().map(Cell::Num));
    row.extend(d.principal_log_strains().map(Cell::Num));
    row.push(d.volume_ratio().into());
    row.extend(state.cauchy().map(Cell::Num));
    row.extend(state.kirchhoff().map(Cell::Num));
    row.extend(state.reduced_deviator().map(Cell::Num));
    row.push(state.reduced_mean().into());
    row.push(hencky_energy(&d, &m)?.into());
    report.push(row);
    Ok(Outcome::new(report, &a.output))
}

fn rod_sweep(a: RodArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let sols = a
        .lambda
        .values()
        .into_iter()
        .map(|l| rod(l, &m))
        .collect::<hencky::Result<Vec<_>>>()?;
    let mut report = material_config(
        Report::new(&[
            "lambda_axial_final_ref",
            "x_lateral",
            "stretch_axial",
            "stretch_lateral",
            "eps_hencky_axial",
            "Sz",
            "Sz_over_E",
            "secant_ratio",
            "energy_ref",
        ]),
        &a.material,
        &m,
    )
    .config("command", "rod")
    .config("E", m.young());
    for s in sols {
        report.push(vec![
            s.lambda.into(),
            s.lateral.into(),
            s.axial_stretch.into(),
            s.lateral_stretch.into(),
            s.axial_stretch.ln().into(),
            s.axial_stress.into(),
            (s.axial_stress / m.young()).into(),
            s.secant_ratio(&m).into(),
            s.energy.into(),
        ]);
    }
    Ok(Outcome::new(report, &a.output))
}

fn membrane_sweep(a: MembraneArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let sols =
        a.x.values()
            .into_iter()
            .map(|x| membrane(x, &m))
            .collect::<hencky::Result<Vec<_>>>()?;
    let mut report = material_config(
        Report::new(&[
            "x_inplane",
            "lambda_thickness",
            "stretch_inplane",
            "stretch_thickness",
            "eps_hencky_inplane",
            "Sr",
            "Sr_over_E",
            "energy_ref",
        ]),
        &a.material,
        &m,
    )
    .config("command", "membrane")
    .config("E", m.young());
    for s in sols {
        report.push(vec![
            s.x.into(),
            s.lambda.into(),
            s.in_plane_stretch.into(),
            s.thickness_stretch.into(),
            s.in_plane_stretch.ln().into(),
            s.in_plane_stress.into(),
            (s.in_plane_stress / m.young()).into(),
            s.energy.into(),
        ]);
    }
    Ok(Outcome::new(report, &a.output))
}

fn balloon_sweep(a: BalloonArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let sols = a
        .ratio
        .values()
        .into_iter()
        .map(|r| balloon(r, a.h, a.radius, &m))
        .collect::<hencky::Result<Vec<_>>>()?;
    let peak = sols
        .iter()
        .enumerate()
        .fold(None::<(usize, f64)>, |best, (i, s)| match best {
            Some((_, p)) if p >= s.pressure => best,
            _ => Some((i, s.pressure)),
        })
        .map(|(i, _)| i);
    let mut report = material_config(
        Report::new(&["rho", "R_x", "h_x", "S_l", "p", "is_peak"]),
        &a.material,
        &m,
    )
    .config("command", "balloon")
    .config("h", a.h)
    .config("R", a.radius)
    .config("rho_peak_analytic", balloon_peak_ratio(&m));
    for (i, s) in sols.iter().enumerate() {
        report.push(vec![
            s.ratio.into(),
            s.current_radius.into(),
            s.current_thickness.into(),
            s.stress.into(),
            s.pressure.into(),
            (Some(i) == peak).into(),
        ]);
    }
    Ok(Outcome::new(report, &a.output))
}

fn work(a: WorkArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let text = std::fs::read_to_string(&a.path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", a.path.display())))?;
    let path = StressPath::from_json_str(&text)?;
    let samples = path.samples();
    let mut report = material_config(
        Report::new(&["t", "S1", "S2", "S3", "J", "A_ref", "A_cur", "A_kirchhoff"]),
        &a.material,
        &m,
    )
    .config("command", "work")
    .config("path", a.path.display().to_string().as_str());
    let total = work_along_path(&path, &m)?;
    for (i, s) in samples.iter().enumerate() {
        let (a_ref, a_cur, a_kirchhoff) = if i == 0 {
            (0.0, 0.0, 0.0)
        } else {
            let prefix = StressPath::with_any_start(samples[..=i].to_vec())?;
            let w = work_along_path(&prefix, &m)?;
            (
                w.reference_energy,
                w.current_energy,
                kirchhoff_work_along_path(&prefix, &m)?,
            )
        };
        report.push(vec![
            s.t.into(),
            s.s1.into(),
            s.s2.into(),
            s.s3.into(),
            total.j_values[i].into(),
            a_ref.into(),
            a_cur.into(),
            a_kirchhoff.into(),
        ]);
    }
    if !m.is_incompressible() {
        let eps = log_strains_from_kirchhoff(path.end(), &m);
        let oracle = hencky_energy(&DeformationState::from_log_strains(eps)?, &m)?;
        let integral = kirchhoff_work_along_path(&path, &m)?;
        let gap = (integral - oracle).abs() / oracle.abs().max(m.shear());
        report.checks.push(CheckLine {
            name: "kirchhoff_work_equals_hencky_energy".into(),
            measured: gap,
            bound: 1e-9,
            passed: gap <= 1e-9,
        });
    }
    Ok(Outcome::new(report, &a.output))
}

fn superpose(a: SuperposeArgs) -> Result<Outcome, CliError> {
    let m = a.material.moduli()?;
    let e = a.state.0;
    let de = a.increment.0;
    let composed = compose_coaxial(e, de)?;
    let increment = stress_increment_coaxial(de, &m)?;
    let stress_of = |s: [f64; 3]| -> hencky::Result<[f64; 3]> {
        let st = StrainState::new(StrainConvention::Swainger, s)?;
        let d = DeformationState::from_strain(&st)?;
        Ok(StressLaw::Cauchy1928.evaluate(&d, &m)?.cauchy())
    };
    let before = stress_of(e)?;
    let after = stress_of(composed)?;
    let mut report = material_config(
        Report::new(&[
            "axis",
            "e_swainger",
            "de_swainger",
            "e_swainger_composed",
            "eps_hencky_composed",
            "S_before",
            "S_after",
            "dS",
        ]),
        &a.material,
        &m,
    )
    .config("command", "superpose");
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        report.push(vec![
            Cell::Int(i as u64 + 1),
            e[i].into(),
            de[i].into(),
            composed[i].into(),
            StrainConvention::Swainger
                .to_logarithmic(composed[i])?
                .into(),
            before[i].into(),
            after[i].into(),
            increment.delta_stress[i].into(),
        ]);
        worst = worst.max((after[i] - before[i] - increment.delta_stress[i]).abs() / m.shear());
    }
    report.checks.push(CheckLine {
        name: "stress_increment_independent_of_state".into(),
        measured: worst,
        bound: 1e-12,
        passed: worst <= 1e-12,
    });
    Ok(Outcome::new(report, &a.output))
}

fn rate(a: RateArgs) -> Result<Outcome, CliError> {
    for (param, value) in [("duration", a.duration), ("dt", a.dt)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(hencky::Error::Domain {
                param,
                value,
                constraint: "must be finite and > 0",
            }
            .into());
        }
    }
    let v =
        VelocityGradient::from_velocity_jacobian(Tensor3::from_row_slice(&a.velocity_gradient.0))?;
    let f = v.stretching();
    let steps = (a.duration / a.dt).ceil().max(1.0) as usize;
    let convention = if a.as_printed {
        RateConvention::AsPrinted
    } else {
        RateConvention::Traceless
    };
    let lin = linearized_superposition_rate(&v, convention);
    let traj = integrate_strain_rate(
        SymTensor3::zero(),
        |_| f,
        0.0,
        a.duration,
        steps,
        a.scheme.into(),
    )?;
    const COMPONENTS: [&str; 6] = ["xx", "yy", "zz", "xy", "yz", "xz"];
    let mut columns = vec!["t".to_string()];
    for prefix in ["e_almansi", "sigma_reduced_dev", "lin_sigma_reduced_dev"] {
        columns.extend(COMPONENTS.iter().map(|c| format!("{prefix}_{c}")));
        if prefix != "e_almansi" {
            columns.push(prefix.replace("_dev", "_mean"));
        }
    }
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut report = Report::new(&column_refs)
        .config("command", "rate")
        .config("duration", a.duration)
        .config("steps", steps as u64)
        .config("scheme", format!("{:?}", a.scheme).to_lowercase().as_str())
        .config("as_printed", a.as_printed);
    for (t, e) in traj.times.iter().zip(&traj.strains) {
        let (dev, mean) = reduced_stress_from_almansi(e)?;
        let mut row = vec![Cell::Num(*t)];
        row.extend(e.components().map(Cell::Num));
        row.extend(dev.components().map(Cell::Num));
        row.push(mean.into());
        row.extend((lin.deviator * *t).components().map(Cell::Num));
        row.push((lin.mean * *t).into());
        report.push(row);
    }
    let trace = lin.deviator.trace().abs();
    report.checks.push(CheckLine {
        name: "linearized_deviator_rate_traceless".into(),
        measured: trace,
        bound: 1e-12,
        passed: a.as_printed || trace <= 1e-12,
    });
    Ok(Outcome::new(report, &a.output))
}

fn verify_suite(a: VerifyArgs) -> Result<Outcome, CliError> {
    let seed = a.seed.unwrap_or(verify::DEFAULT_SEED);
    eprintln!("verify seed: {seed}");
    let result = verify::run(seed);
    let mut report = Report::new(&["check", "measured", "bound", "passed", "seed"])
        .config("command", "verify")
        .config("seed", seed);
    for c in &result.checks {
        report.push(vec![
            c.name.as_str().into(),
            c.measured.into(),
            c.bound.into(),
            c.passed.into(),
            seed.into(),
        ]);
        report.checks.push(CheckLine {
            name: c.name.clone(),
            measured: c.measured,
            bound: c.bound,
            passed: c.passed,
        });
    }
    Ok(Outcome::new(report, &a.output))
}
