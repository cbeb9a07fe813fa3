//! Exact arithmetic kernels.
//!
//! Everything here is exact: integers are [`BigInt`], ratios are reduced
//! [`BigRational`]s, and the half-integer bases that appear throughout the
//! product formulas are stored as twice their value.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// A value in `Z ∪ (Z + 1/2)`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInteger { twice: 2 * n }
    }

    /// `n + 1/2`.
    pub const fn half_above(n: i64) -> Self {
        HalfInteger { twice: 2 * n + 1 }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_positive(self) -> bool {
        self.twice > 0
    }

    /// Shift by an integer.
    pub const fn add_int(self, n: i64) -> Self {
        HalfInteger { twice: self.twice + 2 * n }
    }

    pub fn to_rational(self) -> ExactRational {
        ExactRational::new(BigInt::from(self.twice), BigInt::from(2))
    }
}

impl From<i64> for HalfInteger {
    fn from(n: i64) -> Self {
        HalfInteger::from_int(n)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

pub fn int(n: i64) -> ExactInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: ExactInt) -> ExactRational {
    ExactRational::from_integer(n)
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> ExactRational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        ExactRational::from_integer(mag)
    } else {
        ExactRational::new(BigInt::one(), mag)
    }
}

/// Product of `(twice + 2i)` for `i` in `0..len`, i.e. `2^len · (a)_len`.
fn doubled_rising(twice: i64, len: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..len as i64 {
        acc *= twice + 2 * i;
    }
    acc
}

/// The shifted factorial `(a)_n`, extended to negative `n` by
/// `1 / ((a-1)(a-2)...(a+n))`.
///
/// Defined only for `a > 0` and `a + n > 0`.
pub fn shifted_factorial(a: HalfInteger, n: i64) -> Result<ExactRational> {
    if !a.is_positive() || !a.add_int(n).is_positive() {
        return Err(domain!("shifted factorial ({a})_{n} needs a > 0 and a + n > 0"));
    }
    if n == 0 {
        return Ok(ExactRational::one());
    }
    let len = n.unsigned_abs();
    if n > 0 {
        let num = doubled_rising(a.twice(), len);
        Ok(ExactRational::new(num, BigInt::one() << len))
    } else {
        // (a-1)(a-2)...(a+n) is the rising product starting at a+n.
        let den = doubled_rising(a.add_int(n).twice(), len);
        Ok(ExactRational::new(BigInt::one() << len, den))
    }
}

pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(domain!("factorial of negative integer {n}"));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// `n!! = n (n-2) (n-4) ...` down to 1 or 2.
pub fn double_factorial(n: i64) -> Result<ExactInt> {
    if n < 1 {
        return Err(domain!("double factorial needs n >= 1, got {n}"));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(domain!("binomial needs n >= 0, got {n}"));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

/// `H(n) = 0! 1! ... (n-1)!`.
pub fn hyperfactorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(domain!("hyperfactorial of negative integer {n}"));
    }
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for i in 1..n {
        fact *= i;
        acc *= &fact;
    }
    Ok(acc)
}

/// Barnes G at integers: zero for `n <= 0`, otherwise `0! 1! ... (n-2)!`.
pub fn barnes_g(n: i64) -> ExactInt {
    if n <= 0 {
        BigInt::zero()
    } else {
        hyperfactorial(n - 1).expect("n - 1 >= 0")
    }
}

/// The bracket product `<a, a+n> = a (a+1)^2 (a+2)^3 ... (a+n-1)^2 (a+n)`,
/// with exponent `min(i+1, n+1-i)` on `a+i`; equal to 1 for negative `n`.
pub fn bracket_product(a: HalfInteger, n: i64) -> Result<ExactRational> {
    if !a.is_positive() {
        return Err(domain!("bracket product <{a}, {a}+{n}> needs a > 0"));
    }
    if n < 0 {
        return Ok(ExactRational::one());
    }
    let mut num = BigInt::one();
    let mut halves: u64 = 0;
    for i in 0..=n {
        let exp = (i + 1).min(n + 1 - i) as u32;
        let base = BigInt::from(a.twice() + 2 * i);
        num *= num_traits::pow(base, exp as usize);
        halves += u64::from(exp);
    }
    Ok(ExactRational::new(num, BigInt::one() << halves))
}

/// Checks `(i)_j = (i+j-1)!/(i-1)!` and
/// `(i+1/2)_j = 2^{-2j} i! (2i+2j)! / ((i+j)! (2i)!)` exactly.
pub fn shifted_to_factorial_identity_check(i: i64, j: i64) -> bool {
    if i < 1 || i + j <= 0 {
        return false;
    }
    let fact = |n: i64| rat_int(factorial(n).expect("nonnegative"));
    let integer_side = match shifted_factorial(HalfInteger::from_int(i), j) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let integer_ok = integer_side == fact(i + j - 1) / fact(i - 1);
    let half_side = match shifted_factorial(HalfInteger::half_above(i), j) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let expected = pow2(-2 * j) * fact(i) * fact(2 * i + 2 * j) / (fact(i + j) * fact(2 * i));
    integer_ok && half_side == expected
}

/// Exact integer power of a rational with a possibly negative exponent.
pub fn rat_pow(base: &ExactRational, exp: i64) -> ExactRational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Integer part of a rational known to be integral.
pub fn as_integer(r: &ExactRational) -> Option<ExactInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Floor of `n / 2` for the nonnegative differences used by the formulas.
pub(crate) fn half_floor(n: i64) -> i64 {
    Integer::div_floor(&n, &2)
}

/// Lossy conversion for reporting only.
pub fn to_f64(r: &ExactRational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() && b != 0.0 => a / b,
        _ => {
            // Shift both sides down so they fit in an f64.
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let a = (n.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
            let b = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
            let v = a / b;
            if n.is_negative() {
                -v
            } else {
                v
            }
        }
    }
}
