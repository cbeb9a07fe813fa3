//! Product formulas for plain and intruded semiregular hexagons.

use num_traits::One;

use super::{CountSource, TilingCount};
use crate::error::{domain, Result};
use crate::exactnum::{
    binomial, double_factorial, factorial, half_floor, hyperfactorial, pow2, rat, rat_int, shifted_factorial,
    ExactRational, HalfInteger,
};
use crate::region::{Parity, RegionSpec};

fn whole(n: i64) -> HalfInteger {
    HalfInteger::from_int(n)
}

fn half(n: i64) -> HalfInteger {
    HalfInteger::half_above(n)
}

/// The box formula `H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(b+c)H(c+a))`.
pub fn macmahon(a: i64, b: i64, c: i64) -> Result<TilingCount> {
    if a < 0 || b < 0 || c < 0 {
        return Err(domain!("box formula needs a, b, c >= 0 (got {a}, {b}, {c})"));
    }
    let h = hyperfactorial;
    let num = h(a)? * h(b)? * h(c)? * h(a + b + c)?;
    let den = h(a + b)? * h(b + c)? * h(c + a)?;
    Ok(TilingCount {
        value: ExactRational::new(num, den),
        source: CountSource::formula("box product"),
        spec: Some(RegionSpec::Hexagon { a, b, c }),
    })
}

/// The triple product `prod (i+j+k-1)/(i+j+k-2)` over the box `a × b × c`.
pub fn macmahon_triple_product(a: i64, b: i64, c: i64) -> ExactRational {
    let mut acc = ExactRational::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                acc *= rat(i + j + k - 1, i + j + k - 2);
            }
        }
    }
    acc
}

/// Ratio `M(H_{m,b,c;k+1}) / M(H_{m,b,c;k})` for `m = 2a` (even) or
/// `m = 2a + 1` (odd). Arguments are reordered so that `b <= c`.
pub fn step_ratio(parity: Parity, a: i64, b: i64, c: i64, k: i64) -> Result<ExactRational> {
    let (b, c) = (b.min(c), b.max(c));
    if a < 0 || k < 0 || k >= b {
        return Err(domain!("step ratio needs a >= 0 and 0 <= k < min(b, c) (got a={a}, k={k}, min={b})"));
    }
    let f = half_floor(c - b);
    let sf = shifted_factorial;
    Ok(match parity {
        Parity::Even => {
            let num = sf(half(k), b - 2 * k)?
                * sf(whole(a + k + 1), b - 2 * k - 1)?
                * sf(half(b - k), f)?
                * sf(whole(c - k), -f)?;
            let den = sf(half(a + k), b - 2 * k)?
                * sf(whole(k + 1), b - 2 * k - 1)?
                * sf(half(a + b - k), f)?
                * sf(whole(a + c - k), -f)?;
            num / den
        }
        Parity::Odd => {
            let num = sf(whole(a + k + 1), c - 2 * k)?
                * sf(half(k + 1), c - 2 * k - 2)?
                * sf(whole(b - k), f)?
                * sf(half(c - k - 1), -f)?;
            let den = sf(whole(k + 1), c - 2 * k - 1)?
                * sf(half(a + k + 1), c - 2 * k - 1)?
                * sf(whole(a + b - k + 1), f)?
                * sf(half(a + c - k), -f)?;
            rat(1, 4) * num / den
        }
    })
}

/// `M(H_{m,b,c;d}) / M(H_{m,b,c})` with `m = 2a` or `2a + 1` by parity.
pub fn intrusion_ratio(parity: Parity, a: i64, b: i64, c: i64, d: i64) -> Result<ExactRational> {
    if a < 0 || b < 0 || c < 0 || d < 0 {
        return Err(domain!("intrusion ratio needs nonnegative parameters (got a={a}, b={b}, c={c}, d={d})"));
    }
    if d > b.min(c) {
        return Err(domain!("intrusion ratio needs d <= min(b, c) (got d={d}, b={b}, c={c})"));
    }
    let mut acc = ExactRational::one();
    for k in 0..d {
        acc *= step_ratio(parity, a, b, c, k)?;
    }
    Ok(acc)
}

/// Number of lozenge tilings of `H_{m,b,c;d}`.
pub fn intrusion_count(m: i64, b: i64, c: i64, d: i64) -> Result<TilingCount> {
    if m < 0 {
        return Err(domain!("left side must be nonnegative (got {m})"));
    }
    let ratio = intrusion_ratio(Parity::of(m), m / 2, b, c, d)?;
    let plain = macmahon(m, b, c)?.value;
    Ok(TilingCount {
        value: ratio * plain,
        source: CountSource::formula("intrusion product"),
        spec: Some(RegionSpec::Intruded { m, b, c, d }),
    })
}

/// Like [`intrusion_count`], but `0` when `d > min(b, c)`, where the region
/// has no tilings (or the holes do not fit at all).
pub fn intrusion_count_or_zero(m: i64, b: i64, c: i64, d: i64) -> Result<ExactRational> {
    if m < 0 || b < 0 || c < 0 || d < 0 {
        return Err(domain!("negative parameter in H_{{{m},{b},{c};{d}}}"));
    }
    if d > b.min(c) {
        return Ok(ExactRational::default());
    }
    Ok(intrusion_count(m, b, c, d)?.value)
}

/// `|P(b,c,2a;d)| / |P(b,c,2a)|` for boxed plane partitions whose first `d`
/// anti-diagonal entries are pinned to `a`.
pub fn pp_restricted_ratio(b: i64, c: i64, a: i64, d: i64) -> Result<ExactRational> {
    if b > c {
        return Err(domain!("plane partition ratio needs b <= c (got b={b}, c={c})"));
    }
    intrusion_ratio(Parity::Even, a, b, c, d)
}

/// The conjectured left-aligned formula for the hexagon `2m, N, N` with `r`
/// fixed lozenges on the axis.
///
/// The product `prod_{i=N-r}^{N-2} 1/i!` is empty when `r = 1`.
pub fn fk_count(m: i64, n: i64, r: i64) -> Result<TilingCount> {
    if m < 0 || r < 1 || r > n {
        return Err(domain!("needs m >= 0 and 1 <= r <= N (got m={m}, N={n}, r={r})"));
    }
    // (r-1)(r-2N) is always even.
    let mut value = pow2((r - 1) * (r - 2 * n) / 2);
    let c1 = rat_int(binomial(m + n - 1, m)?);
    value *= &c1 * &c1 / rat_int(binomial(2 * m + 2 * n - 1, 2 * m)?);
    for i in (n - r)..=(n - 2) {
        value /= rat_int(factorial(i)?);
    }
    for i in 1..r {
        let num = rat_int(double_factorial(2 * i)? * double_factorial(2 * n - 2 * i - 1)?)
            * shifted_factorial(whole(m + i + 1), n - 2 * i - 1)?;
        let den = rat_int(double_factorial(2 * i - 1)?) * shifted_factorial(half(m + i), n - 2 * i)?;
        value *= num / den;
    }
    value *= macmahon(n, n, 2 * m)?.value;
    Ok(TilingCount {
        value,
        source: CountSource::formula("left-aligned axis lozenges"),
        spec: Some(RegionSpec::Intruded { m: 2 * m, b: n, c: n, d: r }),
    })
}
