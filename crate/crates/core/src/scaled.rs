//! Floating point values carried as `mantissa * 2^exponent2`.
//!
//! Laguerre polynomials with large degree and large exponent overflow `f64`
//! (for example `L_200^(10^4)(0)` is about `10^428`), so evaluation keeps an
//! explicit binary exponent beside a normalized mantissa.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A real number `mantissa * 2^exponent2` with `|mantissa|` in `[1, 2)`, or
/// exactly zero (in which case `exponent2` is 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    mantissa: f64,
    exponent2: i64,
}

/// Split a finite `x` into `(m, e)` with `x = m * 2^e` and `|m|` in `[1, 2)`.
pub(crate) fn frexp(x: f64) -> (f64, i64) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    if biased == 0 {
        // subnormal: lift into the normal range first
        let (m, e) = frexp(x * 2f64.powi(64));
        return (m, e - 64);
    }
    let mantissa = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1023u64 << 52));
    (mantissa, biased - 1023)
}

/// `x * 2^e` without intermediate overflow of the power of two.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    const STEP: i64 = 1000;
    while e > STEP {
        x *= pow2(STEP);
        e -= STEP;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -STEP {
        x *= pow2(-STEP);
        e += STEP;
        if x == 0.0 {
            return x;
        }
    }
    x * pow2(e)
}

fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        mantissa: 0.0,
        exponent2: 0,
    };

    pub fn new(value: f64) -> Self {
        Self::from_parts(value, 0)
    }

    /// Normalizes `value * 2^exponent2`.
    pub fn from_parts(value: f64, exponent2: i64) -> Self {
        assert!(value.is_finite(), "ScaledValue requires a finite mantissa");
        if value == 0.0 {
            return Self::ZERO;
        }
        let (m, e) = frexp(value);
        ScaledValue {
            mantissa: m,
            exponent2: exponent2 + e,
        }
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent2(&self) -> i64 {
        self.exponent2
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    /// Plain `f64`; saturates to `±inf` or flushes to zero out of range.
    pub fn to_f64(&self) -> f64 {
        ldexp(self.mantissa, self.exponent2)
    }

    pub fn abs(&self) -> Self {
        ScaledValue {
            mantissa: self.mantissa.abs(),
            exponent2: self.exponent2,
        }
    }

    pub fn signum(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// `log2 |value|`, `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().log2() + self.exponent2 as f64
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_parts(self.mantissa * factor, self.exponent2)
    }

    /// `self / other` as a plain `f64`.
    pub fn ratio(&self, other: &ScaledValue) -> f64 {
        if other.is_zero() {
            return if self.is_zero() {
                f64::NAN
            } else {
                self.mantissa.signum() * f64::INFINITY
            };
        }
        ldexp(self.mantissa / other.mantissa, self.exponent2 - other.exponent2)
    }

    /// Compares magnitudes.
    pub fn cmp_abs(&self, other: &ScaledValue) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.exponent2.cmp(&other.exponent2).then(
                self.mantissa
                    .abs()
                    .partial_cmp(&other.mantissa.abs())
                    .unwrap_or(Ordering::Equal),
            ),
        }
    }

    pub fn max_abs(self, other: ScaledValue) -> ScaledValue {
        if self.cmp_abs(&other) == Ordering::Less {
            other.abs()
        } else {
            self.abs()
        }
    }
}

impl From<f64> for ScaledValue {
    fn from(value: f64) -> Self {
        ScaledValue::new(value)
    }
}

impl fmt::Display for ScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * 2^{}", self.mantissa, self.exponent2)
    }
}

impl Neg for ScaledValue {
    type Output = ScaledValue;
    fn neg(self) -> ScaledValue {
        ScaledValue {
            mantissa: -self.mantissa,
            exponent2: self.exponent2,
        }
    }
}

impl Add for ScaledValue {
    type Output = ScaledValue;
    fn add(self, rhs: ScaledValue) -> ScaledValue {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let e = self.exponent2.max(rhs.exponent2);
        let a = ldexp(self.mantissa, self.exponent2 - e);
        let b = ldexp(rhs.mantissa, rhs.exponent2 - e);
        ScaledValue::from_parts(a + b, e)
    }
}

impl Sub for ScaledValue {
    type Output = ScaledValue;
    fn sub(self, rhs: ScaledValue) -> ScaledValue {
        self + (-rhs)
    }
}

impl Mul for ScaledValue {
    type Output = ScaledValue;
    fn mul(self, rhs: ScaledValue) -> ScaledValue {
        ScaledValue::from_parts(self.mantissa * rhs.mantissa, self.exponent2 + rhs.exponent2)
    }
}

impl Mul<f64> for ScaledValue {
    type Output = ScaledValue;
    fn mul(self, rhs: f64) -> ScaledValue {
        self.scale(rhs)
    }
}

impl Div for ScaledValue {
    type Output = ScaledValue;
    fn div(self, rhs: ScaledValue) -> ScaledValue {
        assert!(!rhs.is_zero(), "division of ScaledValue by zero");
        ScaledValue::from_parts(self.mantissa / rhs.mantissa, self.exponent2 - rhs.exponent2)
    }
}
