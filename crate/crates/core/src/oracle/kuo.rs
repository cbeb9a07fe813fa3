//! Graphical condensation on `H'` and `H''`, with every count by the oracle.

use crate::error::{domain, Result};
use crate::exactnum::ExactRational;
use crate::formulas::KuoVariant;
use crate::region::{build_h_double_prime, build_h_prime, build_intruded, Mark};

use super::{weighted_matching_count, OracleConfig};

/// The six counts of one condensation identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuoReport {
    pub variant: KuoVariant,
    /// Marks removed for each term, ordered as in [`KuoVariant::terms`].
    pub removed: [&'static [Mark]; 6],
    /// Oracle counts of the marked region with those marks removed.
    pub counts: [ExactRational; 6],
    /// Oracle counts of the intruded hexagons the terms are identified
    /// with, or `None` when that hexagon is outside its family.
    pub named: [Option<ExactRational>; 6],
}

impl KuoReport {
    pub fn condensation_holds(&self) -> bool {
        let c = &self.counts;
        &c[0] * &c[1] == &c[2] * &c[3] + &c[4] * &c[5]
    }

    pub fn matches_named(&self) -> bool {
        self.counts.iter().zip(&self.named).all(|(c, n)| n.as_ref().is_none_or(|n| n == c))
    }

    pub fn holds(&self) -> bool {
        self.condensation_holds() && self.matches_named()
    }
}

fn removed_marks(variant: KuoVariant) -> [&'static [Mark]; 6] {
    use Mark::*;
    match variant {
        KuoVariant::HPrime => [&[], &[X, Y, Z, W], &[X, Y], &[Z, W], &[X, W], &[Y, Z]],
        KuoVariant::HDoublePrime => [&[Y], &[X, Z, W], &[X], &[Y, Z, W], &[Z], &[X, Y, W]],
    }
}

pub fn kuo_report(variant: KuoVariant, a: i64, b: i64, c: i64, k: i64) -> Result<KuoReport> {
    kuo_report_with(variant, a, b, c, k, &OracleConfig::default())
}

pub fn kuo_report_with(variant: KuoVariant, a: i64, b: i64, c: i64, k: i64, config: &OracleConfig) -> Result<KuoReport> {
    if a < 0 || b < 1 || c < 1 || k < 0 || k > variant.max_k(b, c) {
        return Err(domain!("condensation needs a >= 0, b, c >= 1, 0 <= k <= {} (got a={a}, b={b}, c={c}, k={k})", variant.max_k(b, c)));
    }
    let region = match variant {
        KuoVariant::HPrime => build_h_prime(a, b, c, k)?,
        KuoVariant::HDoublePrime => build_h_double_prime(a, b, c, k)?,
    };
    let removed = removed_marks(variant);
    let mut counts: [ExactRational; 6] = Default::default();
    let mut named: [Option<ExactRational>; 6] = Default::default();
    for (i, (m, bb, cc, d)) in variant.terms(a, b, c, k).into_iter().enumerate() {
        counts[i] = weighted_matching_count(&region.without_marks(removed[i]), config)?;
        if bb >= 0 && cc >= 0 && d <= bb.min(cc) {
            named[i] = Some(weighted_matching_count(&build_intruded(m, bb, cc, d)?, config)?);
        }
    }
    Ok(KuoReport { variant, removed, counts, named })
}

pub fn kuo_check(variant: KuoVariant, a: i64, b: i64, c: i64, k: i64) -> Result<bool> {
    Ok(kuo_report(variant, a, b, c, k)?.holds())
}
