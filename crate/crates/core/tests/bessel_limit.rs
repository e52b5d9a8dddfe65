use std::f64::consts::PI;

use laguerre_core::*;

const GRID: [usize; 4] = [25, 50, 100, 200];

#[test]
fn scaled_spacings_converge_to_quarter_target() {
    for &alpha in &[0.5, 0.0, -0.5, 1.0] {
        let probe = limit_probe(alpha, 1, &GRID).unwrap();
        let dev = probe.deviations(probe.hard_edge_limit());
        assert!(dev.windows(2).all(|w| w[1] < w[0]), "alpha={alpha}: {dev:?}");
        assert!(dev[3] < 1e-4, "alpha={alpha}: {dev:?}");
    }
}

#[test]
fn half_order_target() {
    let probe = limit_probe(0.5, 1, &GRID).unwrap();
    assert!((probe.target - 3.0 * PI * PI).abs() < 1e-12);
    assert!((probe.hard_edge_limit() - 0.75 * PI * PI).abs() < 1e-12);
    // first-run values, matching a 40-digit eigenvalue computation
    let expected = [7.413_361_167_239_774, 7.405_070_169_488_342, 7.402_930_358_324_603, 7.402_386_402_176_82];
    for (got, want) in probe.scaled_spacings.iter().zip(expected) {
        assert!((got - want).abs() < 1e-11, "{got} vs {want}");
    }
}

#[test]
fn order_zero_target() {
    let probe = limit_probe(0.0, 1, &GRID).unwrap();
    assert!((probe.target - 24.688_076_380_715_31).abs() < 1e-11);
}

#[test]
fn second_rank_pairs_with_second_smallest_zero() {
    let probe = limit_probe(1.0, 2, &[50, 100, 200]).unwrap();
    let dev = probe.deviations(probe.hard_edge_limit());
    assert!(dev.windows(2).all(|w| w[1] < w[0]));
    assert!(dev[2] < 1e-3);
}
