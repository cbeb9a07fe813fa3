//! Products of factorials of consecutive integers rewritten as ratios of
//! Barnes G values, checked exactly.

use num_traits::One;

use crate::error::{domain, Result};
use crate::exactnum::{barnes_g, factorial, rat_int, ExactRational};

/// The five product rewrites used for the intrusion ratio at scale `N`.
/// The last two hold for the squares of both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BarnesIdentity {
    /// `prod k!/(aN+k)! = G(dN+1)G(aN+1)/G((a+d)N+1)`
    LowerFactorials,
    /// `prod (aN+bN-k-1)!/(bN-k-1)!`
    ShiftedB,
    /// `prod (aN+cN-k-1)!/(cN-k-1)!`
    ShiftedC,
    /// `prod (2aN+2k)!/(2k)!`
    EvenFactorials,
    /// `prod (bN+cN-2k-1)!/(2aN+bN+cN-2k-1)!`
    CentralFactorials,
}

impl BarnesIdentity {
    pub const ALL: [BarnesIdentity; 5] = [
        BarnesIdentity::LowerFactorials,
        BarnesIdentity::ShiftedB,
        BarnesIdentity::ShiftedC,
        BarnesIdentity::EvenFactorials,
        BarnesIdentity::CentralFactorials,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            BarnesIdentity::LowerFactorials => "lower-factorials",
            BarnesIdentity::ShiftedB => "shifted-b",
            BarnesIdentity::ShiftedC => "shifted-c",
            BarnesIdentity::EvenFactorials => "even-factorials",
            BarnesIdentity::CentralFactorials => "central-factorials",
        }
    }
}

fn g(n: i64) -> ExactRational {
    rat_int(barnes_g(n))
}

fn f(n: i64) -> Result<ExactRational> {
    Ok(rat_int(factorial(n)?))
}

fn product(len: i64, mut term: impl FnMut(i64) -> Result<ExactRational>) -> Result<ExactRational> {
    let mut acc = ExactRational::one();
    for k in 0..len {
        acc *= term(k)?;
    }
    Ok(acc)
}

/// Both sides of the identity (squared for the last two).
pub fn barnes_identity_sides(
    which: BarnesIdentity,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    n: i64,
) -> Result<(ExactRational, ExactRational)> {
    if a < 1 || d < 1 || n < 1 {
        return Err(domain!("Barnes identities need a, d, N >= 1 (got a={a}, d={d}, N={n})"));
    }
    let len = d * n;
    Ok(match which {
        BarnesIdentity::LowerFactorials => {
            let lhs = product(len, |k| Ok(f(k)? / f(a * n + k)?))?;
            (lhs, g(d * n + 1) * g(a * n + 1) / g((a + d) * n + 1))
        }
        BarnesIdentity::ShiftedB | BarnesIdentity::ShiftedC => {
            let side = if which == BarnesIdentity::ShiftedB { b } else { c };
            if side < d {
                return Err(domain!("needs {} >= d (got {side} < {d})", if side == b { "b" } else { "c" }));
            }
            let lhs = product(len, |k| Ok(f(a * n + side * n - k - 1)? / f(side * n - k - 1)?))?;
            let rhs = g((a + side) * n + 1) * g((side - d) * n + 1) / (g((a + side - d) * n + 1) * g(side * n + 1));
            (lhs, rhs)
        }
        BarnesIdentity::EvenFactorials => {
            let lhs = product(len, |k| Ok(f(2 * a * n + 2 * k)? / f(2 * k)?))?;
            let rhs = g((2 * a + 2 * d) * n + 1) / (g(2 * a * n + 1) * g(2 * d * n + 1)) * f(2 * d * n)?
                * f((a + d) * n)?
                * f(2 * a * n)?
                / (f(d * n)? * f(a * n)? * f((2 * a + 2 * d) * n)?);
            (&lhs * &lhs, rhs)
        }
        BarnesIdentity::CentralFactorials => {
            if (b + c) % 2 != 0 || b < 1 || c < 1 || b + c < 2 * d {
                return Err(domain!("needs b, c >= 1, b + c even and b + c >= 2d (got b={b}, c={c}, d={d})"));
            }
            let (s, t) = (b + c, (b + c) / 2);
            let lhs = product(len, |k| Ok(f(s * n - 2 * k - 1)? / f((2 * a + s) * n - 2 * k - 1)?))?;
            let rhs = g(s * n + 1) * g((2 * a + s - 2 * d) * n + 1) / (g((2 * a + s) * n + 1) * g((s - 2 * d) * n + 1))
                * f(s * n)?
                * f((2 * a + s - 2 * d) * n)?
                * f((a + t) * n)?
                * f((t - d) * n)?
                / (f((s - 2 * d) * n)? * f((2 * a + s) * n)? * f((a + t - d) * n)? * f(t * n)?);
            (&lhs * &lhs, rhs)
        }
    })
}

pub fn barnes_product_identity_check(which: BarnesIdentity, a: i64, b: i64, c: i64, d: i64, n: i64) -> Result<bool> {
    let (lhs, rhs) = barnes_identity_sides(which, a, b, c, d, n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(barnes_product_identity_check(BarnesIdentity::LowerFactorials, 1, 1, 1, 1, 2).unwrap());
        assert!(barnes_product_identity_check(BarnesIdentity::EvenFactorials, 1, 1, 1, 1, 1).unwrap());
        assert!(barnes_product_identity_check(BarnesIdentity::CentralFactorials, 1, 2, 2, 1, 1).unwrap());
        assert!(barnes_product_identity_check(BarnesIdentity::CentralFactorials, 1, 2, 3, 1, 1).is_err());
        assert!(barnes_product_identity_check(BarnesIdentity::ShiftedB, 1, 1, 3, 2, 1).is_err());
    }
}
