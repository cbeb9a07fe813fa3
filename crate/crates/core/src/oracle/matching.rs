//! Weighted perfect-matching count of a region's dual graph, by a sweep over
//! the vertical strips with a bitmask profile on each strip interface.
//!
//! The only edges crossing the line `x = s + 1` join a left-pointing cell of
//! strip `s` to the right-pointing cell of strip `s + 1` at the same level, so
//! a profile records which left-pointing cells of the current strip were
//! matched across the interface. Inside a strip, consecutive levels are the
//! remaining edges.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::ExactRational;
use crate::region::{Orientation, Region, TriCell};

/// Capacity knobs for the brute-force engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of cells allowed on one strip interface.
    pub max_interface_width: usize,
}

impl OracleConfig {
    pub const DEFAULT_MAX_WIDTH: usize = 24;
    /// Profiles are packed into a `u64`.
    pub const HARD_MAX_WIDTH: usize = 63;
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_interface_width: Self::DEFAULT_MAX_WIDTH }
    }
}

struct StripPlan {
    strip: i32,
    levels: Vec<i32>,
    /// Incoming profile bit for each level, if the cell can be matched from
    /// the left.
    in_bit: Vec<Option<u32>>,
    /// Outgoing profile bit for each level, if the cell can be matched to the
    /// right.
    out_bit: Vec<Option<u32>>,
    /// Whether the edge to the cell one level up carries weight 1/2.
    up_half: Vec<bool>,
    /// Whether the edge across the interface to the right carries weight 1/2.
    right_half: Vec<bool>,
}

fn plan(region: &Region, config: &OracleConfig) -> Result<Vec<StripPlan>> {
    let limit = config.max_interface_width.min(OracleConfig::HARD_MAX_WIDTH);
    let mut plans: Vec<StripPlan> = Vec::new();
    let mut prev_out: BTreeMap<i32, u32> = BTreeMap::new();
    let mut prev_strip: Option<i32> = None;
    for (strip, levels) in region.strips() {
        if prev_strip != Some(strip - 1) {
            prev_out.clear();
        }
        let mut out: BTreeMap<i32, u32> = BTreeMap::new();
        let mut in_bit = Vec::with_capacity(levels.len());
        let mut out_bit = Vec::with_capacity(levels.len());
        let mut up_half = Vec::with_capacity(levels.len());
        let mut right_half = Vec::with_capacity(levels.len());
        for &level in &levels {
            let cell = TriCell::new(strip, level);
            let incoming = match cell.orientation() {
                Orientation::RightPointing => prev_out.get(&level).copied(),
                Orientation::LeftPointing => None,
            };
            in_bit.push(incoming);
            let right = cell.horizontal_neighbor();
            let outgoing = if cell.orientation() == Orientation::LeftPointing && region.contains(right) {
                let bit = out.len() as u32;
                out.insert(level, bit);
                right_half.push(region.is_half_weight(cell, right));
                Some(bit)
            } else {
                right_half.push(false);
                None
            };
            out_bit.push(outgoing);
            let up = TriCell::new(strip, level + 1);
            up_half.push(region.contains(up) && region.is_half_weight(cell, up));
        }
        if out.len() > limit {
            return Err(Error::Capacity { what: "strip interface width", actual: out.len(), limit });
        }
        plans.push(StripPlan { strip, levels, in_bit, out_bit, up_half, right_half });
        prev_out = out;
        prev_strip = Some(strip);
    }
    Ok(plans)
}

/// Per-profile accumulator: weight is `sum_k count_k / 2^k`, stored as
/// integer counts keyed by the number of half-weight lozenges used.
type Weights = BTreeMap<u32, BigInt>;

fn add_into(target: &mut Weights, source: &Weights, extra_halves: u32) {
    for (k, v) in source {
        *target.entry(k + extra_halves).or_insert_with(BigInt::zero) += v;
    }
}

struct Sweep<'a> {
    plan: &'a StripPlan,
    mask_in: u64,
    source: &'a Weights,
    next: &'a mut BTreeMap<u64, Weights>,
}

impl Sweep<'_> {
    fn covered_from_left(&self, idx: usize) -> bool {
        self.plan.in_bit[idx].is_some_and(|b| self.mask_in >> b & 1 == 1)
    }

    /// Walks the strip bottom to top. `claimed` is the index already covered
    /// by a vertical lozenge from the cell below.
    fn walk(&mut self, idx: usize, claimed: Option<usize>, mask_out: u64, halves: u32) {
        let plan = self.plan;
        if idx == plan.levels.len() {
            let slot = self.next.entry(mask_out).or_default();
            add_into(slot, self.source, halves);
            return;
        }
        if claimed == Some(idx) || self.covered_from_left(idx) {
            self.walk(idx + 1, None, mask_out, halves);
            return;
        }
        let level = plan.levels[idx];
        let up = idx + 1;
        if up < plan.levels.len() && plan.levels[up] == level + 1 && !self.covered_from_left(up) {
            let h = halves + u32::from(plan.up_half[idx]);
            self.walk(idx + 1, Some(up), mask_out, h);
        }
        if let Some(bit) = plan.out_bit[idx] {
            let h = halves + u32::from(plan.right_half[idx]);
            self.walk(idx + 1, None, mask_out | 1 << bit, h);
        }
    }
}

/// Sum over perfect matchings of the dual graph of the product of lozenge
/// weights.
pub fn weighted_matching_count(region: &Region, config: &OracleConfig) -> Result<ExactRational> {
    if region.is_empty() {
        return Ok(ExactRational::one());
    }
    let (left, right) = region.orientation_counts();
    if left != right {
        return Ok(ExactRational::zero());
    }
    let plans = plan(region, config)?;
    let mut states: BTreeMap<u64, Weights> = BTreeMap::new();
    states.insert(0, BTreeMap::from([(0, BigInt::one())]));
    let mut last_strip: Option<i32> = None;
    for p in &plans {
        if last_strip.is_some_and(|s| s + 1 != p.strip) {
            // Disconnected strips: nothing may be pending across the gap.
            states.retain(|mask, _| *mask == 0);
        }
        let mut next: BTreeMap<u64, Weights> = BTreeMap::new();
        for (mask_in, source) in &states {
            let mut sweep = Sweep { plan: p, mask_in: *mask_in, source, next: &mut next };
            sweep.walk(0, None, 0, 0);
        }
        states = next;
        last_strip = Some(p.strip);
        if states.is_empty() {
            return Ok(ExactRational::zero());
        }
    }
    let Some(done) = states.get(&0) else {
        return Ok(ExactRational::zero());
    };
    let mut total = ExactRational::zero();
    for (k, v) in done {
        total += ExactRational::new(v.clone(), BigInt::one() << *k);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::region::{build_hexagon, build_intruded};

    fn count(r: &Region) -> ExactRational {
        weighted_matching_count(r, &OracleConfig::default()).unwrap()
    }

    /// Plain recursive matching count: match the smallest cell with each
    /// available neighbor.
    fn brute(region: &Region) -> ExactRational {
        fn go(region: &Region, cells: &mut alloc::collections::BTreeSet<TriCell>) -> ExactRational {
            let Some(&first) = cells.iter().next() else {
                return ExactRational::one();
            };
            cells.remove(&first);
            let mut total = ExactRational::zero();
            for n in first.neighbors() {
                if cells.remove(&n) {
                    total += region.lozenge_weight(first, n) * go(region, cells);
                    cells.insert(n);
                }
            }
            cells.insert(first);
            total
        }
        let mut cells = region.cells().clone();
        go(region, &mut cells)
    }

    #[test]
    fn small_hexagons() {
        assert_eq!(count(&build_hexagon(1, 1, 1).unwrap()), rat(2, 1));
        assert_eq!(count(&build_hexagon(2, 2, 2).unwrap()), rat(20, 1));
        assert_eq!(count(&build_hexagon(0, 3, 4).unwrap()), rat(1, 1));
        assert_eq!(count(&Region::default()), rat(1, 1));
    }

    #[test]
    fn agrees_with_naive_recursion() {
        for (m, b, c, d) in [(2, 2, 3, 1), (3, 2, 2, 2), (1, 3, 2, 1), (4, 2, 2, 2), (3, 1, 3, 1)] {
            let r = build_intruded(m, b, c, d).unwrap();
            assert_eq!(count(&r), brute(&r), "H_{{{m},{b},{c};{d}}}");
        }
        let weighted = build_hexagon(2, 2, 2).unwrap().with_half_weight_line(2);
        assert_eq!(count(&weighted), brute(&weighted));
        assert!(count(&weighted) < rat(20, 1));
    }

    #[test]
    fn capacity_is_enforced() {
        let r = build_hexagon(6, 6, 6).unwrap();
        let tight = OracleConfig { max_interface_width: 3 };
        assert!(matches!(weighted_matching_count(&r, &tight), Err(Error::Capacity { .. })));
    }

    #[test]
    fn disconnected_components_multiply() {
        let a = build_hexagon(1, 1, 1).unwrap();
        let moved = a.translated(10, 0);
        let cells = a.cells().iter().chain(moved.cells()).copied();
        let both = Region::from_parts(cells, [], []).unwrap();
        assert_eq!(count(&both), rat(4, 1));
        assert_eq!(int(4), count(&both).to_integer());
    }
}
