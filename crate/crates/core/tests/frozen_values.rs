//! End-to-end values worked out by hand.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};

use poincare_core::{
    boost_massive, coset_rep, little_group, rotation_su2, spinor_map, tangent_field,
    transport_massive, transport_massless, wigner_d, wigner_phase, Chart, ChartedMomentum,
    Complex64, ComplexMatrix2, FourVector, IntrinsicParity, LightlikeMomentum, MassiveMomentum,
    PolarizationState, SL2CElement, Spin, SpinState, UnitVector3,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn quarter_turn_spinor_map() {
    // diag(e^{iπ/4}, e^{−iπ/4}) rotates x̂ into −ŷ and ŷ into x̂
    let a = rotation_su2(&UnitVector3::Z, FRAC_PI_2);
    let l = spinor_map(&a.into());
    let want = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    for (r, row) in want.iter().enumerate() {
        for (col, &w) in row.iter().enumerate() {
            assert!((l.get(r, col) - w).abs() < 1e-15, "({r},{col})");
        }
    }
}

#[test]
fn spin_one_quarter_turn_about_y() {
    let a = rotation_su2(&UnitVector3::Y, FRAC_PI_2);
    let h = FRAC_1_SQRT_2;
    let want = [[0.5, h, 0.5], [-h, 0.0, h], [0.5, -h, 0.5]];
    let d = wigner_d(&a, Spin::ONE);
    for (r, row) in d.rows().enumerate() {
        for (col, z) in row.iter().enumerate() {
            assert!((z - c(want[r][col], 0.0)).norm() < 1e-14, "({r},{col})");
        }
    }
    let half = wigner_d(&a, Spin::HALF);
    let rows: Vec<Vec<Complex64>> = half.rows().map(|r| r.to_vec()).collect();
    assert!((rows[0][1] - c(h, 0.0)).norm() < 1e-15);
    assert!((rows[1][0] - c(-h, 0.0)).norm() < 1e-15);
}

#[test]
fn standard_boost_along_z() {
    let p = MassiveMomentum::new(1.0, [0.0, 0.0, 0.75]).unwrap();
    let b = boost_massive(&p);
    let want = ComplexMatrix2::real(SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2);
    assert!(b.matrix().distance(&want) < 1e-15);
}

#[test]
fn massive_full_turn_flips_half_integer_spin() {
    let p = MassiveMomentum::new(2.0, [0.3, -0.1, 0.4]).unwrap();
    let st = SpinState::new(
        Spin::HALF,
        p,
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        IntrinsicParity::Even,
    )
    .unwrap();
    let full = SL2CElement::from(rotation_su2(&UnitVector3::X, 2.0 * PI));
    let out = transport_massive(&st, &full).unwrap();
    assert!((out.amplitudes()[0] + 1.0).norm() < 1e-14);
}

#[test]
fn azimuthal_rotation_phase() {
    // a quarter turn about z factors through h(π/2, 0) at any momentum on the equator
    let p = LightlikeMomentum::new(1.0, FRAC_PI_2, 0.0).unwrap();
    let cp = ChartedMomentum::new(p, Chart::N).unwrap();
    let a = SL2CElement::from(rotation_su2(&UnitVector3::Z, FRAC_PI_2));
    let image = p.transform(&a).unwrap();
    assert!(
        image
            .four_vector()
            .distance(&FourVector::new(1.0, 0.0, -1.0, 0.0))
            < 1e-15
    );
    let h = little_group(&cp, &a, Chart::N).unwrap();
    assert!((h.phi() - FRAC_PI_2).abs() < 1e-15);
    assert!(h.alpha().norm() < 1e-15);
    assert!((wigner_phase(&h, 1) - c(0.0, 1.0)).norm() < 1e-15);
}

#[test]
fn photon_rotated_about_its_momentum() {
    let cp = ChartedMomentum::new(LightlikeMomentum::fiducial(), Chart::N).unwrap();
    let st = PolarizationState::new(cp, 1, c(0.6, 0.0), c(0.8, 0.0)).unwrap();
    let a = SL2CElement::from(rotation_su2(&UnitVector3::Z, 0.5));
    let out = transport_massless(&st, &a, None).unwrap();
    assert!((out.c_plus() - Complex64::from_polar(0.6, 0.5)).norm() < 1e-15);
    assert!((out.c_minus() - Complex64::from_polar(0.8, -0.5)).norm() < 1e-15);
}

#[test]
fn coset_rep_on_the_equator() {
    // ℓ(p) for p = (2, 2, 0, 0): a(π/2, 0)·diag(√2, 1/√2)
    let cp = ChartedMomentum::new(
        LightlikeMomentum::new(2.0, FRAC_PI_2, 0.0).unwrap(),
        Chart::N,
    )
    .unwrap();
    let h = FRAC_1_SQRT_2;
    let want = ComplexMatrix2::real(h * SQRT_2, -h / SQRT_2, h * SQRT_2, h / SQRT_2);
    assert!(coset_rep(&cp).matrix().distance(&want) < 1e-15);
    let e = tangent_field(&cp).e.components();
    assert!((e[0]).abs() < 1e-15 && (e[2] + 1.0).abs() < 1e-15);
}
