//! Independent counters: a transfer-matrix count of weighted perfect
//! matchings of the dual graph, a lattice-path determinant for the plain
//! hexagon, and a plane-partition enumerator.

mod kuo;
mod lgv;
mod matching;
mod pp;

pub use kuo::{kuo_check, kuo_report, kuo_report_with, KuoReport};
pub use lgv::{bareiss_determinant, lgv_hexagon_count};
pub use matching::{weighted_matching_count, OracleConfig};
pub use pp::{count_pp_restricted, count_pp_restricted_with, enumerate_pp, enumerate_pp_with, PpLimits};

use crate::error::Result;
use crate::exactnum::rat_int;
use crate::formulas::{CountSource, TilingCount};
use crate::region::{Region, RegionSpec};

pub fn count_tilings(region: &Region) -> Result<TilingCount> {
    count_tilings_with(region, &OracleConfig::default())
}

pub fn count_tilings_with(region: &Region, config: &OracleConfig) -> Result<TilingCount> {
    Ok(TilingCount {
        value: weighted_matching_count(region, config)?,
        source: CountSource::oracle("transfer matrix"),
        spec: region.spec(),
    })
}

pub fn count_tilings_lgv(a: i64, b: i64, c: i64) -> Result<TilingCount> {
    Ok(TilingCount {
        value: rat_int(lgv_hexagon_count(a, b, c)?),
        source: CountSource::oracle("lattice paths"),
        spec: Some(RegionSpec::Hexagon { a, b, c }),
    })
}
