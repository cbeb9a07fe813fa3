//! JSON documents for regions and counts.

use std::collections::BTreeMap;

use hexatile_core::{ExactRational, Mark, Region, RegionSpec, TriCell};
use serde::{Deserialize, Serialize};

/// A region as `[strip, level]` cells, half-weight lozenge positions and marks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<RegionSpec>,
    pub cells: Vec<[i32; 2]>,
    #[serde(default)]
    pub half_weight: Vec<[[i32; 2]; 2]>,
    #[serde(default)]
    pub marks: BTreeMap<Mark, [i32; 2]>,
}

fn pair(c: TriCell) -> [i32; 2] {
    [c.strip, c.level]
}

fn cell(p: [i32; 2]) -> TriCell {
    TriCell::new(p[0], p[1])
}

impl RegionDocument {
    pub fn from_region(region: &Region) -> Self {
        RegionDocument {
            spec: region.spec(),
            cells: region.cells().iter().copied().map(pair).collect(),
            half_weight: region.half_weight_pairs().iter().map(|&(a, b)| [pair(a), pair(b)]).collect(),
            marks: region.marks().iter().map(|(&m, &c)| (m, pair(c))).collect(),
        }
    }

    /// Rebuilds the region. Any cell set is accepted; the family tag is
    /// kept only as information and is not re-derived.
    pub fn to_region(&self) -> hexatile_core::Result<Region> {
        Region::from_parts(
            self.cells.iter().copied().map(cell),
            self.half_weight.iter().map(|[a, b]| (cell(*a), cell(*b))),
            self.marks.iter().map(|(&m, &c)| (m, cell(c))),
        )
    }
}

/// `p/q`, also for integers.
pub fn ratio_string(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// The decimal value of a rational that is an integer, else `p/q`.
pub fn count_string(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        ratio_string(r)
    }
}
