//! High-precision reals backed by `dashu-float`, at a fixed working precision.

use alloc::string::String;

use dashu_float::round::mode::HalfEven;
use dashu_float::{DBig, FBig};
use dashu_int::{IBig, UBig};
use num_bigint::Sign;

use crate::exactnum::{ExactInt, ExactRational};

pub type Real = FBig<HalfEven, 2>;

/// Working precision in bits (a little over 75 decimal digits).
pub const WORKING_BITS: usize = 256;

pub fn real(n: i64) -> Real {
    Real::from(n).with_precision(WORKING_BITS).value()
}

pub fn real_int(n: &ExactInt) -> Real {
    let (sign, bytes) = n.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    let v = if sign == Sign::Minus { -mag } else { mag };
    Real::from(v).with_precision(WORKING_BITS).value()
}

pub fn real_rat(r: &ExactRational) -> Real {
    real_int(r.numer()) / real_int(r.denom())
}

/// `p / q` as a real.
pub fn frac(p: i64, q: i64) -> Real {
    real(p) / real(q)
}

pub fn ln_frac(p: i64, q: i64) -> Real {
    frac(p, q).ln()
}

/// `t ln t`, with `0 ln 0 = 0`.
pub fn xlnx(t: i64) -> Real {
    if t == 0 {
        real(0)
    } else {
        real(t) * real(t).ln()
    }
}

/// `t^2 ln t`, with value 0 at 0.
pub fn x2lnx(t: i64) -> Real {
    real(t) * xlnx(t)
}

pub fn pi() -> Real {
    Real::pi(WORKING_BITS)
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// Decimal rendering with `digits` significant digits.
pub fn to_decimal_string(x: &Real, digits: usize) -> String {
    let d: DBig = x.to_decimal().value();
    alloc::format!("{}", d.with_precision(digits).value())
}

/// Scientific notation `m.mmme±E` with `digits` significant digits
/// (at most 15), usable at any magnitude.
pub fn to_scientific(x: &Real, digits: usize) -> String {
    let digits = digits.clamp(1, 15);
    if x.repr().is_zero() {
        return String::from("0");
    }
    let negative = x.repr().sign() == dashu_int::Sign::Negative;
    let sign = if negative { "-" } else { "" };
    let magnitude = if negative { -x.clone() } else { x.clone() };
    let ln10 = real(10).ln();
    let log10 = magnitude.ln() / &ln10;
    let floor = log10.floor();
    let mut exponent = to_f64(&floor) as i64;
    let mut mantissa = to_f64(&((log10 - floor) * &ln10).exp());
    let prec = digits - 1;
    if alloc::format!("{mantissa:.prec$}").starts_with("10") {
        mantissa /= 10.0;
        exponent += 1;
    }
    alloc::format!("{sign}{mantissa:.prec$}e{exponent}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn conversions() {
        assert_eq!(to_f64(&real_int(&int(-12345))), -12345.0);
        let big = num_bigint::BigInt::from(10u8).pow(40);
        assert!((to_f64(&real_int(&big)) - 1e40).abs() < 1e26);
        assert!((to_f64(&real_rat(&rat(-3, 8))) + 0.375).abs() < 1e-15);
        assert!((to_f64(&pi()) - core::f64::consts::PI).abs() < 1e-15);
        assert_eq!(to_f64(&xlnx(0)), 0.0);
        assert_eq!(to_decimal_string(&frac(1, 3), 5), "0.33333");
        let tiny = (real(-300) * real(10).ln()).exp() * frac(12346, 1000);
        assert_eq!(to_scientific(&tiny, 4), "1.235e-299");
        assert_eq!(to_scientific(&frac(-999_999, 1000), 3), "-1.00e3");
        assert_eq!(to_scientific(&real(1), 3), "1.00e0");
        assert_eq!(to_scientific(&real(0), 3), "0");
    }
}
