//! Closed-form counts, all evaluated in exact rational arithmetic.

mod weighted;
mod hexagon;
mod identities;

use alloc::string::{String, ToString};

use crate::exactnum::ExactRational;
use crate::region::RegionSpec;

pub use weighted::{ciucu_r, ciucu_rbar};
pub use hexagon::{
    fk_count, intrusion_count, intrusion_count_or_zero, intrusion_ratio, macmahon, macmahon_triple_product,
    pp_restricted_ratio, step_ratio,
};
pub use identities::{
    factorization_identity_check, factorization_identity_check_with, induction_identity_checks, recurrence_holds,
    IdentityCheck, InductionReport, KuoVariant,
};

/// Where a count came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountSource {
    Formula(String),
    Oracle(String),
}

impl CountSource {
    pub(crate) fn formula(name: &str) -> Self {
        CountSource::Formula(name.to_string())
    }

    pub(crate) fn oracle(name: &str) -> Self {
        CountSource::Oracle(name.to_string())
    }
}

/// An exact weighted tiling count with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingCount {
    pub value: ExactRational,
    pub source: CountSource,
    pub spec: Option<RegionSpec>,
}
