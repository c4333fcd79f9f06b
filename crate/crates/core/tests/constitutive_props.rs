use hencky::constitutive::{
    cauchy_stress_1928, hencky_energy, hencky_energy_from_log_strains, hencky_energy_tensorial,
    hooke_stress, kirchhoff_stress_1929, log_strains_from_kirchhoff,
};
use hencky::{
    DeformationState, ElasticModuli, Error, PoissonInput, StrainConvention, StrainState, StressLaw,
    Tensor3,
};
use proptest::prelude::*;

fn moduli_strategy() -> impl Strategy<Value = ElasticModuli> {
    (0.1f64..10.0, 2.05f64..50.0).prop_map(|(g, m)| ElasticModuli::from_shear_and_m(g, m).unwrap())
}

fn log_strain_strategy() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-0.8f64..0.8)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn moduli_identities(g in 0.1f64..10.0, m in 2.01f64..1e3) {
        let p = ElasticModuli::from_shear_and_m(g, m).unwrap();
        let (k, big_k, e, lame) = (p.k().unwrap(), p.bulk().unwrap(), p.young(), p.lame().unwrap());
        prop_assert!(rel(3.0 * big_k, e * m / (m - 2.0)) <= 1e-13);
        prop_assert!(rel(e, 2.0 * g * (1.0 + 1.0 / m)) <= 1e-15);
        prop_assert!(rel(big_k, 2.0 * g * k) <= 1e-15);
        prop_assert!((lame - (big_k - 2.0 * g / 3.0)).abs() <= 1e-13 * big_k);
        let via_nu = ElasticModuli::derive(g, PoissonInput::PoissonRatio(1.0 / m)).unwrap();
        prop_assert!(rel(via_nu.bulk().unwrap(), big_k) <= 1e-12);
    }

    #[test]
    fn conventions_round_trip(stretch in 0.2f64..5.0, from in 0usize..4, to in 0usize..4) {
        let (a, b) = (StrainConvention::ALL[from], StrainConvention::ALL[to]);
        let s = StrainState::from_stretches(a, [stretch, 1.0 / stretch, 1.3]).unwrap();
        let back = s.convert(b).unwrap().convert(a).unwrap();
        for (x, y) in s.principal().iter().zip(back.principal()) {
            prop_assert!((x - y).abs() <= 1e-13 * x.abs().max(1.0));
        }
        for (x, y) in s.stretches().iter().zip([stretch, 1.0 / stretch, 1.3]) {
            prop_assert!(rel(*x, y) <= 1e-14);
        }
    }

    #[test]
    fn kirchhoff_law_equals_cauchy_law_in_its_own_measure(
        p in moduli_strategy(), eps in log_strain_strategy()
    ) {
        let d = DeformationState::from_log_strains(eps).unwrap();
        let t = kirchhoff_stress_1929(&d, &p).unwrap();
        let s = cauchy_stress_1928(&d, &p).unwrap();
        for i in 0..3 {
            prop_assert_eq!(t.kirchhoff()[i], s.cauchy()[i]);
            prop_assert!(rel(t.cauchy()[i] * d.volume_ratio(), t.kirchhoff()[i]) <= 1e-14
                || t.kirchhoff()[i].abs() < 1e-14);
        }
        prop_assert!((s.cauchy_mean() - p.bulk().unwrap() * d.volume_ratio().ln()).abs()
            <= 1e-12 * p.bulk().unwrap());
    }

    #[test]
    fn kirchhoff_law_inverts(p in moduli_strategy(), eps in log_strain_strategy()) {
        let d = DeformationState::from_log_strains(eps).unwrap();
        let back = log_strains_from_kirchhoff(kirchhoff_stress_1929(&d, &p).unwrap().kirchhoff(), &p);
        for (x, y) in eps.iter().zip(back) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn energy_is_a_kirchhoff_potential(p in moduli_strategy(), eps in log_strain_strategy()) {
        let t = kirchhoff_stress_1929(&DeformationState::from_log_strains(eps).unwrap(), &p)
            .unwrap()
            .kirchhoff();
        let h = 1e-5;
        for i in 0..3 {
            let (mut up, mut dn) = (eps, eps);
            up[i] += h;
            dn[i] -= h;
            let fd = (hencky_energy_from_log_strains(up, &p).unwrap()
                - hencky_energy_from_log_strains(dn, &p).unwrap())
                / (2.0 * h);
            prop_assert!((fd - t[i]).abs() <= 1e-7 * p.bulk().unwrap().max(1.0));
        }
    }

    #[test]
    fn energy_forms_agree_and_are_frame_indifferent(
        p in moduli_strategy(),
        f in prop::array::uniform9(-0.3f64..0.3),
        axis in prop::array::uniform3(0.1f64..1.0),
        angle in 0.0f64..6.3,
    ) {
        let mut g = Tensor3::identity();
        for (i, v) in f.iter().enumerate() {
            g.0[i / 3][i % 3] += v;
        }
        prop_assume!(g.det() > 0.1);
        let d = DeformationState::from_gradient(g).unwrap();
        let a = hencky_energy(&d, &p).unwrap();
        prop_assert!((a - hencky_energy_tensorial(&d, &p).unwrap()).abs() <= 1e-12 * a.max(1.0));
        let rotated = DeformationState::from_gradient(Tensor3::rotation(axis, angle).matmul(&g)).unwrap();
        prop_assert!((hencky_energy(&rotated, &p).unwrap() - a).abs() <= 1e-11 * a.max(1.0));
        for (x, y) in d.principal_stretches().iter().zip(rotated.principal_stretches()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn laws_agree_to_first_order(p in moduli_strategy(), dir in prop::array::uniform3(-1.0f64..1.0)) {
        let scale = 1e-6;
        let eps = dir.map(|v| v * scale);
        let d = DeformationState::from_log_strains(eps).unwrap();
        let strain = StrainState::new(StrainConvention::Logarithmic, eps).unwrap();
        let hooke = hooke_stress(&strain, &p).unwrap().cauchy();
        for law in [StressLaw::Cauchy1928, StressLaw::Kirchhoff1929] {
            let s = law.evaluate(&d, &p).unwrap().cauchy();
            for i in 0..3 {
                prop_assert!((s[i] - hooke[i]).abs() <= 10.0 * p.bulk().unwrap() * scale * scale);
            }
        }
    }
}

#[test]
fn convention_domains_are_enforced() {
    assert!(matches!(
        StrainConvention::Swainger.to_logarithmic(1.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        StrainConvention::Engineering.to_logarithmic(-1.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        StrainConvention::Almansi.to_logarithmic(0.5),
        Err(Error::Domain { .. })
    ));
    assert!(StrainConvention::Logarithmic
        .to_logarithmic(f64::NAN)
        .is_err());
}

#[test]
fn reflections_are_rejected() {
    let err = DeformationState::from_gradient(Tensor3::diag([1.0, 1.0, -1.0])).unwrap_err();
    assert!(matches!(err, Error::NotOrientationPreserving { .. }));
}

#[test]
fn moduli_reject_unsupported_contraction() {
    for m in [2.0, 1.5, f64::NAN] {
        assert!(matches!(
            ElasticModuli::from_shear_and_m(1.0, m),
            Err(Error::UnsupportedRegime { .. })
        ));
    }
    assert!(ElasticModuli::from_shear_and_m(0.0, 4.0).is_err());
    let zero_nu = ElasticModuli::from_shear_and_m(1.0, f64::INFINITY).unwrap();
    assert_eq!(zero_nu.poisson(), 0.0);
    assert!((zero_nu.young() - 2.0).abs() < 1e-15);
}

#[test]
fn incompressible_material_enforces_the_volume_constraint() {
    let p = ElasticModuli::derive(1.0, PoissonInput::Incompressible).unwrap();
    assert_eq!(p.bulk(), None);
    assert_eq!(p.young(), 3.0);
    let iso = DeformationState::from_log_strains([0.1, -0.05, -0.05]).unwrap();
    let a = hencky_energy(&iso, &p).unwrap();
    assert!((a - 0.015).abs() < 1e-15);
    let s = kirchhoff_stress_1929(&iso, &p)
        .unwrap()
        .with_mean_cauchy(-2.0, &p);
    assert!((s.cauchy_mean() + 2.0).abs() < 1e-15);
    let dilated = DeformationState::from_log_strains([0.1, 0.0, 0.0]).unwrap();
    assert!(matches!(
        hencky_energy(&dilated, &p),
        Err(Error::VolumeConstraint { .. })
    ));
}
