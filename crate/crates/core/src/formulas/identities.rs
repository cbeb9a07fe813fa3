//! Exact identities between the closed forms: the two condensation
//! recurrences, the ratio identities used in the double induction, and the
//! factorization of symmetric hexagons.

use alloc::vec::Vec;

use num_traits::One;

use crate::error::{domain, Result};
use crate::exactnum::{factorial, pow2, rat, rat_int, ExactRational};
use crate::oracle::{weighted_matching_count, OracleConfig};
use crate::region::split_factorization;

use super::hexagon::intrusion_count_or_zero;

/// The two condensation regions, `H'` (balanced, `2k+1` holes) and `H''`
/// (one extra left-pointing triangle, `2k` holes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum KuoVariant {
    HPrime,
    HDoublePrime,
}

impl KuoVariant {
    pub const ALL: [KuoVariant; 2] = [KuoVariant::HPrime, KuoVariant::HDoublePrime];

    /// Largest `k` for which the recurrence is stated.
    pub fn max_k(self, b: i64, c: i64) -> i64 {
        match self {
            KuoVariant::HPrime => b.min(c) - 1,
            KuoVariant::HDoublePrime => b.min(c),
        }
    }

    /// Parameters `(m, b, c, d)` of the six intruded hexagons of the
    /// recurrence, in the order `lhs1, lhs2, rhs1a, rhs1b, rhs2a, rhs2b`,
    /// meaning `lhs1 lhs2 = rhs1a rhs1b + rhs2a rhs2b`.
    pub fn terms(self, a: i64, b: i64, c: i64, k: i64) -> [(i64, i64, i64, i64); 6] {
        let (e, o) = (2 * a, 2 * a + 1);
        let j = match self {
            KuoVariant::HPrime => k + 1,
            KuoVariant::HDoublePrime => k,
        };
        [
            (o, b, c, k),
            (e, b, c, j),
            (e, b + 1, c, j),
            (o, b - 1, c, k),
            (e, b, c + 1, j),
            (o, b, c - 1, k),
        ]
    }
}

/// Evaluates one condensation recurrence with every term given by the
/// product formula (terms with more holes than `min(b, c)` count as 0).
pub fn recurrence_holds(variant: KuoVariant, a: i64, b: i64, c: i64, k: i64) -> Result<bool> {
    if a < 0 || b < 1 || c < 1 || k < 0 || k > variant.max_k(b, c) {
        return Err(domain!("recurrence needs a >= 0, b, c >= 1, 0 <= k <= {} (got a={a}, b={b}, c={c}, k={k})", variant.max_k(b, c)));
    }
    let mut v = Vec::with_capacity(6);
    for (m, bb, cc, d) in variant.terms(a, b, c, k) {
        v.push(intrusion_count_or_zero(m, bb, cc, d)?);
    }
    Ok(&v[0] * &v[1] == &v[2] * &v[3] + &v[4] * &v[5])
}

/// `M(H_{m,c,c;d}) = 2^{c-d} M(H^+) M(H^-)`, with every count by the oracle.
pub fn factorization_identity_check(m: i64, c: i64, d: i64) -> Result<bool> {
    factorization_identity_check_with(m, c, d, &OracleConfig::default())
}

pub fn factorization_identity_check_with(m: i64, c: i64, d: i64, config: &OracleConfig) -> Result<bool> {
    let whole = crate::region::build_intruded(m, c, c, d)?;
    let (plus, minus) = split_factorization(m, c, d)?;
    let lhs = weighted_matching_count(&whole, config)?;
    let rhs = pow2(c - d) * weighted_matching_count(&plus, config)? * weighted_matching_count(&minus, config)?;
    Ok(lhs == rhs)
}

/// One identity of the induction step and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InductionReport {
    pub checks: Vec<IdentityCheck>,
}

impl InductionReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

fn fact(n: i64) -> Result<ExactRational> {
    Ok(rat_int(factorial(n)?))
}

/// `prod_{k=0}^{upper} f(k)`.
fn prod(upper: i64, mut f: impl FnMut(i64) -> ExactRational) -> ExactRational {
    let mut acc = ExactRational::one();
    for k in 0..=upper {
        acc *= f(k);
    }
    acc
}

/// Replays the ratio identities of the induction step on `c - b` and `t`,
/// each side evaluated from the closed forms, plus the two sums that must
/// equal 1.
pub fn induction_identity_checks(a: i64, b: i64, c: i64, t: i64) -> Result<InductionReport> {
    if a < 0 || t < 1 || t > b || b >= c {
        return Err(domain!("induction identities need a >= 0, 1 <= t <= b < c (got a={a}, b={b}, c={c}, t={t})"));
    }
    let m = |mm: i64, bb: i64, cc: i64, d: i64| intrusion_count_or_zero(mm, bb, cc, d);
    let (e, o) = (2 * a, 2 * a + 1);
    let s = 2 * a + b + c;
    let r = |p: i64, q: i64| rat(p, q);
    let mut checks = Vec::new();

    // Outer step for the even family.
    let even_b_up = m(e, b + 1, c - 1, t)? / m(e, b, c - 1, t)?;
    let even_b_up_rhs = fact(b)? * fact(s - 1)? / (fact(2 * a + b)? * fact(b + c - 1)?)
        * prod(t - 1, |k| r((a + b - k) * (b + c - 2 * k - 1), (b - k) * (s - 2 * k - 1)));
    checks.push(IdentityCheck { name: "M(H[2a,b+1,c-1;t]) / M(H[2a,b,c-1;t])", lhs: even_b_up.clone(), rhs: even_b_up_rhs });

    let odd_b_down = m(o, b - 1, c - 1, t - 1)? / m(o, b, c - 1, t - 1)?;
    let odd_b_down_rhs = fact(2 * a + b)? * fact(b + c - 2)? / (fact(s - 1)? * fact(b - 1)?)
        * prod(t - 2, |k| r((b - k - 1) * (s - 2 * k - 1), (a + b - k) * (b + c - 2 * k - 3)));
    checks.push(IdentityCheck { name: "M(H[2a+1,b-1,c-1;t-1]) / M(H[2a+1,b,c-1;t-1])", lhs: odd_b_down.clone(), rhs: odd_b_down_rhs });

    let even_c_up = m(e, b, c, t)? / m(e, b, c - 1, t)?;
    let even_c_up_rhs = fact(c - 1)? * fact(s - 1)? / (fact(2 * a + c - 1)? * fact(b + c - 1)?)
        * prod(t - 1, |k| r((a + c - k - 1) * (b + c - 2 * k - 1), (c - k - 1) * (s - 2 * k - 1)));
    checks.push(IdentityCheck { name: "M(H[2a,b,c;t]) / M(H[2a,b,c-1;t])", lhs: even_c_up.clone(), rhs: even_c_up_rhs });

    let odd_c_down = m(o, b, c - 2, t - 1)? / m(o, b, c - 1, t - 1)?;
    let odd_c_down_rhs = fact(2 * a + c - 1)? * fact(b + c - 2)? / (fact(s - 1)? * fact(c - 2)?)
        * prod(t - 2, |k| r((c - k - 2) * (s - 2 * k - 1), (a + c - k - 1) * (b + c - 2 * k - 3)));
    checks.push(IdentityCheck { name: "M(H[2a+1,b,c-2;t-1]) / M(H[2a+1,b,c-1;t-1])", lhs: odd_c_down.clone(), rhs: odd_c_down_rhs });

    checks.push(IdentityCheck {
        name: "even-family step: weighted sum of the two condensation terms",
        lhs: even_b_up * odd_b_down + even_c_up * odd_c_down,
        rhs: ExactRational::one(),
    });

    // Inner step for the odd family.
    let s = 2 * a + b + c;
    let even_b_up2 = m(e, b + 2, c, t)? / m(e, b + 1, c, t)?;
    let even_b_up2_rhs = fact(b + 1)? * fact(s + 1)? / (fact(b + c + 1)? * fact(2 * a + b + 1)?)
        * prod(t - 1, |k| r((a + b - k + 1) * (b + c - 2 * k + 1), (b - k + 1) * (s - 2 * k + 1)));
    checks.push(IdentityCheck { name: "M(H[2a,b+2,c;t]) / M(H[2a,b+1,c;t])", lhs: even_b_up2.clone(), rhs: even_b_up2_rhs });

    let odd_b_down2 = m(o, b, c, t)? / m(o, b + 1, c, t)?;
    let odd_b_down2_rhs = fact(b + c)? * fact(2 * a + b + 1)? / (fact(b)? * fact(s + 1)?)
        * prod(t - 1, |k| r((b - k) * (s - 2 * k + 1), (a + b - k + 1) * (b + c - 2 * k - 1)));
    checks.push(IdentityCheck { name: "M(H[2a+1,b,c;t]) / M(H[2a+1,b+1,c;t])", lhs: odd_b_down2.clone(), rhs: odd_b_down2_rhs });

    let even_c_up2 = m(e, b + 1, c + 1, t)? / m(e, b + 1, c, t)?;
    let even_c_up2_rhs = fact(c)? * fact(s + 1)? / (fact(b + c + 1)? * fact(2 * a + c)?)
        * prod(t - 1, |k| r((a + c - k) * (b + c - 2 * k + 1), (c - k) * (s - 2 * k + 1)));
    checks.push(IdentityCheck { name: "M(H[2a,b+1,c+1;t]) / M(H[2a,b+1,c;t])", lhs: even_c_up2.clone(), rhs: even_c_up2_rhs });

    let odd_c_down2 = m(o, b + 1, c - 1, t)? / m(o, b + 1, c, t)?;
    let odd_c_down2_rhs = fact(b + c)? * fact(2 * a + c)? / (fact(c - 1)? * fact(s + 1)?)
        * prod(t - 1, |k| r((c - k - 1) * (s - 2 * k + 1), (a + c - k) * (b + c - 2 * k - 1)));
    checks.push(IdentityCheck { name: "M(H[2a+1,b+1,c-1;t]) / M(H[2a+1,b+1,c;t])", lhs: odd_c_down2.clone(), rhs: odd_c_down2_rhs });

    checks.push(IdentityCheck {
        name: "odd-family step: weighted sum of the two condensation terms",
        lhs: even_b_up2 * odd_b_down2 + even_c_up2 * odd_c_down2,
        rhs: ExactRational::one(),
    });

    Ok(InductionReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrences_small() {
        for v in KuoVariant::ALL {
            for a in 0..3 {
                for c in 1..5 {
                    for b in 1..=c {
                        for k in 0..b.min(c) {
                            assert!(recurrence_holds(v, a, b, c, k).unwrap(), "{v:?} a={a} b={b} c={c} k={k}");
                        }
                    }
                }
            }
        }
        assert!(recurrence_holds(KuoVariant::HPrime, 1, 2, 2, 2).is_err());
    }

    #[test]
    fn induction_examples() {
        assert!(induction_identity_checks(1, 2, 4, 1).unwrap().all_hold());
        assert!(induction_identity_checks(2, 3, 5, 2).unwrap().all_hold());
        assert!(induction_identity_checks(1, 2, 2, 1).is_err());
    }

    #[test]
    fn factorization_small() {
        assert!(factorization_identity_check(2, 3, 1).unwrap());
        assert!(factorization_identity_check(2, 2, 2).unwrap());
        assert!(factorization_identity_check(3, 3, 0).unwrap());
    }
}
