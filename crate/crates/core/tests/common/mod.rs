#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub const DEFAULT_N: [usize; 4] = [10, 20, 50, 100];
pub const DEFAULT_ALPHA: [f64; 4] = [1.0, 100.0, 1e3, 1e4];
pub const EDGE_CASES: [(usize, f64); 3] = [(2, -0.9), (2, 0.0), (50, -0.5)];

pub fn default_grid() -> Vec<(usize, f64)> {
    DEFAULT_N
        .iter()
        .flat_map(|&n| DEFAULT_ALPHA.iter().map(move |&a| (n, a)))
        .collect()
}

pub fn grid_with_edges() -> Vec<(usize, f64)> {
    let mut g = default_grid();
    g.extend(EDGE_CASES);
    g
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

pub fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// `L_n^(alpha)(x)` in exact rational arithmetic (alpha, x exactly as given).
pub fn laguerre_exact(n: usize, alpha: &BigRational, x: &BigRational) -> BigRational {
    let one = BigRational::one();
    if n == 0 {
        return one;
    }
    let mut prev = one.clone();
    let mut cur = alpha + &one - x;
    for k in 1..n {
        let kr = BigRational::from_integer(BigInt::from(k));
        let two_k1 = BigRational::from_integer(BigInt::from(2 * k + 1));
        let next = ((two_k1 + alpha - x) * &cur - (&kr + alpha) * &prev) / (&kr + &one);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn sign(v: &BigRational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap()
}

/// Bisection root of `f` on `[lo, hi]` with a sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Ascending power series for `J_nu(x)`; usable for small `x` only.
pub fn bessel_series(nu: f64, x: f64) -> f64 {
    let gamma1 = statrs_free_gamma(nu + 1.0);
    let half = 0.5 * x;
    let mut term = half.powf(nu) / gamma1;
    let mut sum = term;
    for m in 1..200 {
        let mf = m as f64;
        term *= -half * half / (mf * (mf + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Lanczos gamma (g = 7, n = 9), independent of the crate's gamma source.
pub fn statrs_free_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * statrs_free_gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + G + 0.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}
