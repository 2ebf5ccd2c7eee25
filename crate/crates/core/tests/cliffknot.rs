use std::f64::consts::{PI, SQRT_2};

use mereon::cliffknot::*;
use mereon::polytopes::VertexType;
use mereon::quatgroup::build_2i;
use proptest::prelude::*;

#[test]
fn knot_points_at_zero() {
    let h = 1.0 / SQRT_2;
    assert_eq!(torus_knot_point(TorusKnotSpec::mereon(), 0.0), [h, 0.0, h, 0.0]);
    assert_eq!(torus_knot_point(TorusKnotSpec::standard(), 0.0), [h, 0.0, h, 0.0]);
}

#[test]
fn spec_validation() {
    assert!(TorusKnotSpec::new(3, 2).is_ok());
    assert!(TorusKnotSpec::new(2, 4).is_err());
    assert!(TorusKnotSpec::new(0, 1).is_err());
}

#[test]
fn rotation_is_special_orthogonal() {
    let m = clifford_rotation();
    assert_eq!(det4(&m), 1);
    assert_eq!(mat_mul(&transpose(&m), &m), identity4());
    assert_eq!(mat_mul(&m, &m), identity4());
    assert!(is_special_orthogonal(&m));
    // a single transposition is orthogonal but not special
    let swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    assert_eq!(det4(&swap), -1);
    assert!(!is_special_orthogonal(&swap));
}

#[test]
fn congruence() {
    let r = congruence_check(DEFAULT_SAMPLES);
    assert_eq!(r.samples, 1024);
    assert!(r.pass(), "{}", r.max_residual);
    let m = clifford_rotation();
    for t in [0.0, PI] {
        assert_eq!(
            apply4(&m, &torus_knot_point(TorusKnotSpec::mereon(), t)),
            torus_knot_point(TorusKnotSpec::standard(), t)
        );
    }
}

#[test]
fn projection_extremes() {
    let h = 1.0 / SQRT_2;
    // sin b = −1
    let p = stereo_north(&[h, 0.0, 0.0, -h]).unwrap();
    assert!((p[0].hypot(p[1]) - (SQRT_2 - 1.0)).abs() < 1e-15);
    let p = stereo_north(&[h, 0.0, 0.0, h]).unwrap();
    assert!((p[0].hypot(p[1]) - (SQRT_2 + 1.0)).abs() < 1e-14);
    assert_eq!(stereo_north(&[0.0, 0.0, 0.0, 1.0]), None);
    assert!(ring_torus_residual(&[SQRT_2 + 1.0, 0.0, 0.0]).abs() < 1e-15);
}

#[test]
fn projected_knots_lie_on_the_ring_torus() {
    for spec in [TorusKnotSpec::mereon(), TorusKnotSpec::standard()] {
        let r = knot_report(spec, DEFAULT_SAMPLES).unwrap();
        assert!(r.max_clifford_residual <= TOLERANCE);
        assert!(r.max_ring_residual <= TOLERANCE, "{}", r.max_ring_residual);
        assert!(r.pass());
    }
}

#[test]
fn closed_form_projection() {
    // σ(q_{3,2}(t)) = (cos 3t, sin 3t, cos 2t)/(√2 − sin 2t)
    for t in sample_times(64) {
        let p = stereo_north(&torus_knot_point(TorusKnotSpec::mereon(), t)).unwrap();
        let d = SQRT_2 - (2.0 * t).sin();
        let e = [(3.0 * t).cos() / d, (3.0 * t).sin() / d, (2.0 * t).cos() / d];
        for k in 0..3 {
            assert!((p[k] - e[k]).abs() < 1e-12);
        }
    }
}

#[test]
fn windings() {
    assert_eq!(winding_numbers(TorusKnotSpec::mereon(), 1024).unwrap(), (3, 2));
    assert_eq!(winding_numbers(TorusKnotSpec::standard(), 1024).unwrap(), (2, 3));
    assert_eq!(winding_numbers(TorusKnotSpec::new(1, 1).unwrap(), 64).unwrap(), (1, 1));
    assert!(matches!(
        winding_numbers(TorusKnotSpec::mereon(), 16),
        Err(KnotError::InsufficientSampling { .. })
    ));
}

#[test]
fn b_elements_and_the_clifford_torus() {
    let g = build_2i().unwrap();
    let c = clifford_b_census(&g);
    assert_eq!(c.b_elements, 30);
    assert_eq!(c.unit_imaginary, 30);
    assert_eq!(c.on_torus.len(), 3);
    // no split of the quaternion slots into two planes puts every B element
    // on the Clifford torus
    assert!(!c.any_pairing_holds());
}

#[test]
fn exponents_match_fold_orders() {
    assert_eq!(
        exponent_table(),
        vec![(2, VertexType::B), (3, VertexType::A), (5, VertexType::C)]
    );
}

#[test]
fn exports() {
    let obj = knot_obj(TorusKnotSpec::mereon(), 100).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 100);
    assert!(obj.lines().last().unwrap().ends_with(" 100 1"));
    let csv = knot_csv(TorusKnotSpec::standard(), 50).unwrap();
    assert_eq!(csv.lines().count(), 51);
    assert_eq!(csv, knot_csv(TorusKnotSpec::standard(), 50).unwrap());
}

proptest! {
    #[test]
    fn samples_stay_on_the_clifford_torus(p in 1u32..8, q in 1u32..8, t in 0.0f64..6.3) {
        let spec = TorusKnotSpec { p, q };
        let v = torus_knot_point(spec, t);
        prop_assert!(clifford_residual(&v) <= TOLERANCE);
        if let Some(x) = stereo_north(&v) {
            prop_assert!(ring_torus_residual(&x).abs() <= 1e-10);
        }
    }

    #[test]
    fn winding_recovers_coprime_pairs(p in 1u32..7, q in 1u32..7) {
        prop_assume!(TorusKnotSpec::new(p, q).is_ok());
        let spec = TorusKnotSpec::new(p, q).unwrap();
        prop_assert_eq!(winding_numbers(spec, 512).unwrap(), (p as i64, q as i64));
    }
}
