//! Large-`N` behaviour of `M(H_{m,bN,cN;dN}) / M(H_{m,bN,cN})` for
//! `m = 2aN` and `m = 2aN + 1`, assembled in log space.

mod barnes;
mod glaisher;
pub mod real;

pub use barnes::{barnes_identity_sides, barnes_product_identity_check, BarnesIdentity};
pub use glaisher::{
    barnes_asymptotic_ratio, bernoulli_numbers, glaisher, ln_glaisher, ln_glaisher_sequence, MAX_GLAISHER_DIGITS,
};
pub use real::Real;

use num_traits::One;

use self::real::{frac, ln_frac, real, real_rat, x2lnx, xlnx};
use crate::error::{domain, Result};
use crate::exactnum::{pow2, rat_int, ExactInt, ExactRational};
use crate::formulas::intrusion_ratio;
use crate::region::Parity;

fn check_params(a: i64, b: i64, c: i64, d: i64) -> Result<()> {
    if a < 1 || d < 1 || d >= b || b > c {
        return Err(domain!("asymptotics need positive a, d and d < b <= c (got a={a}, b={b}, c={c}, d={d})"));
    }
    if (b - c) % 2 != 0 {
        return Err(domain!("asymptotics need b and c of the same parity (got b={b}, c={c})"));
    }
    Ok(())
}

/// Natural logs of the constants `K1, K2, K3`.
#[derive(Debug, Clone)]
pub struct LogConstants {
    pub first: Real,
    pub linear: Real,
    pub quadratic: Real,
}

impl LogConstants {
    pub fn values(&self) -> (Real, Real, Real) {
        (self.first.exp(), self.linear.exp(), self.quadratic.exp())
    }
}

fn ln_k3(a: i64, b: i64, c: i64, d: i64) -> Real {
    let s = (b + c) / 2;
    let h = x2lnx;
    real(2) * h(s) - h(b) - h(c) + real(2) * h(a + s - d) - h(a + b - d) - h(a + c - d) + h(b - d) + h(c - d)
        - real(2) * h(s - d)
        + h(a + b)
        + h(a + c)
        - real(2) * h(a + s)
}

/// `ln K1, ln K2, ln K3` for the even family.
pub fn constants_k(a: i64, b: i64, c: i64, d: i64) -> Result<LogConstants> {
    check_params(a, b, c, d)?;
    let s = (b + c) / 2;
    let g = xlnx;
    let first = frac(1, 8) * ln_frac(a + d, a * d)
        + frac(1, 12) * ln_frac(b * c * (a + b - d) * (a + c - d), (a + b) * (a + c) * (b - d) * (c - d))
        + frac(1, 24) * ln_frac((a + s) * (s - d), s * (a + s - d));
    let linear = g(a) + g(d) + g(s) + g(a + s - d) - g(a + d) - g(a + s) - g(s - d);
    Ok(LogConstants { first, linear, quadratic: ln_k3(a, b, c, d) })
}

/// `ln L1, ln L2, ln K3` for the odd family.
pub fn constants_l(a: i64, b: i64, c: i64, d: i64) -> Result<LogConstants> {
    check_params(a, b, c, d)?;
    let s = (b + c) / 2;
    let g = xlnx;
    let first = frac(11, 24) * ln_frac(a + s - d, a + s)
        + frac(5, 12) * ln_frac((a + b) * (a + c), (a + b - d) * (a + c - d))
        + frac(1, 8) * ln_frac(a + d, a * d)
        + frac(1, 12) * ln_frac(b * c, (b - d) * (c - d))
        + frac(1, 24) * ln_frac(s - d, s);
    let inner = g(a + d) - g(a) - g(d) + g(a + s) + g(s - d) - g(a + s - d) - g(s);
    let squared = real(-2 * d) * real(2).ln() + g(a + b) + g(a + c) - real(2) * g(a + s) + real(2) * g(a + s - d)
        - g(a + b - d)
        - g(a + c - d);
    Ok(LogConstants { first, linear: inner + real(2) * squared, quadratic: ln_k3(a, b, c, d) })
}

/// The four factors of the estimate, each as a natural log.
#[derive(Debug, Clone)]
pub struct AsymptoticTerms {
    pub prefactor: Real,
    pub first: Real,
    pub linear: Real,
    pub quadratic: Real,
}

#[derive(Debug, Clone)]
pub struct AsymptoticEstimate {
    pub parity: Parity,
    pub params: (i64, i64, i64, i64),
    pub n: i64,
    pub log_value: Real,
    pub value: Real,
    pub terms: AsymptoticTerms,
    pub exact: Option<ExactRational>,
}

impl AsymptoticEstimate {
    /// Fills in the exact ratio at this `N` from the product formula.
    pub fn with_exact(mut self) -> Result<Self> {
        let (a, b, c, d) = self.params;
        self.exact = Some(exact_ratio(self.parity, a, b, c, d, self.n)?);
        Ok(self)
    }

    /// `exact / estimate`, when the exact ratio is present.
    pub fn quotient(&self) -> Option<Real> {
        let exact = self.exact.as_ref()?;
        Some((real_rat(exact).ln() - &self.log_value).exp())
    }
}

fn ln_prefactor(parity: Parity, n: i64) -> Result<Real> {
    let ln_a = ln_glaisher();
    let ln2 = real(2).ln();
    let common = frac(1, 8) - frac(3, 2) * ln_a - frac(1, 8) * real(n).ln();
    Ok(match parity {
        Parity::Even => common + frac(7, 24) * ln2,
        Parity::Odd => common - frac(5, 24) * ln2,
    })
}

fn assemble(parity: Parity, params: (i64, i64, i64, i64), n: i64, prefactor: Real, first: Real, linear: Real, quadratic: Real) -> AsymptoticEstimate {
    let terms = AsymptoticTerms {
        prefactor,
        first,
        linear: frac(n, 2) * linear,
        quadratic: frac(n * n, 2) * quadratic,
    };
    let log_value = terms.prefactor.clone() + &terms.first + &terms.linear + &terms.quadratic;
    AsymptoticEstimate { parity, params, n, value: log_value.exp(), log_value, terms, exact: None }
}

/// Leading-order estimate of the intrusion ratio at scale `N`.
pub fn asym_ratio(parity: Parity, a: i64, b: i64, c: i64, d: i64, n: i64) -> Result<AsymptoticEstimate> {
    if n < 1 {
        return Err(domain!("N must be positive (got {n})"));
    }
    let k = match parity {
        Parity::Even => constants_k(a, b, c, d)?,
        Parity::Odd => constants_l(a, b, c, d)?,
    };
    Ok(assemble(parity, (a, b, c, d), n, ln_prefactor(parity, n)?, k.first, k.linear, k.quadratic))
}

/// The same estimate written directly for `b = c`, where the quadratic
/// term vanishes.
pub fn asym_ratio_equal_sides(parity: Parity, a: i64, c: i64, d: i64, n: i64) -> Result<AsymptoticEstimate> {
    check_params(a, c, c, d)?;
    if n < 1 {
        return Err(domain!("N must be positive (got {n})"));
    }
    let g = xlnx;
    let (first, linear) = match parity {
        Parity::Even => (
            frac(1, 8) * ln_frac((a + d) * c * (a + c - d), a * d * (a + c) * (c - d)),
            g(a) + g(d) + g(c) + g(a + c - d) - g(a + d) - g(a + c) - g(c - d),
        ),
        Parity::Odd => (
            frac(1, 8) * ln_frac((a + d) * c, a * d * (c - d)) + frac(3, 8) * ln_frac(a + c, a + c - d),
            g(a + d) + g(a + c) + g(c - d) - real(4 * d) * real(2).ln() - g(a) - g(d) - g(a + c - d) - g(c),
        ),
    };
    Ok(assemble(parity, (a, c, c, d), n, ln_prefactor(parity, n)?, first, linear, real(0)))
}

/// The exact ratio `M(H_{m,bN,cN;dN}) / M(H_{m,bN,cN})`.
pub fn exact_ratio(parity: Parity, a: i64, b: i64, c: i64, d: i64, n: i64) -> Result<ExactRational> {
    intrusion_ratio(parity, a * n, b * n, c * n, d * n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LimitOutcome {
    Zero,
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitClass {
    pub outcome: LimitOutcome,
    /// The base compared with 1, when the outcome depends on one.
    pub criterion: Option<ExactRational>,
}

fn self_power(t: i64) -> ExactInt {
    num_traits::pow(ExactInt::from(t), t as usize)
}

/// Limit of the intrusion ratio as `N` grows, decided in exact arithmetic.
pub fn classify_limit(parity: Parity, a: i64, b: i64, c: i64, d: i64) -> Result<LimitClass> {
    check_params(a, b, c, d)?;
    if parity == Parity::Even || b != c {
        return Ok(LimitClass { outcome: LimitOutcome::Zero, criterion: None });
    }
    let num = self_power(a + d) * self_power(a + c) * self_power(c - d);
    let den = self_power(a) * self_power(d) * self_power(a + c - d) * self_power(c);
    let criterion = rat_int(num) / rat_int(den) * pow2(-4 * d);
    let outcome = if criterion > ExactRational::one() { LimitOutcome::Infinity } else { LimitOutcome::Zero };
    Ok(LimitClass { outcome, criterion: Some(criterion) })
}
