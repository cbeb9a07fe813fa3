//! Regions on the triangular lattice and the constructors for every region
//! family used by the counting formulas.

mod families;
mod forced;
pub mod lattice;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::error::{domain, Result};
use crate::exactnum::{rat, ExactRational};

pub use families::{
    build_h_double_prime, build_h_prime, build_hexagon, build_intruded, build_r, build_rbar,
    build_semiregular_with_holes, split_factorization, Parity,
};
pub use forced::{remove_forced_lozenges, ForcedReduction};
pub use lattice::{LatticePath, Orientation, Step, TriCell};

/// Labels for the four boundary cells used by graphical condensation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Mark {
    X,
    Y,
    Z,
    W,
}

impl Mark {
    pub const ALL: [Mark; 4] = [Mark::X, Mark::Y, Mark::Z, Mark::W];

    pub const fn label(self) -> &'static str {
        match self {
            Mark::X => "x",
            Mark::Y => "y",
            Mark::Z => "z",
            Mark::W => "w",
        }
    }
}

/// Which named family a region belongs to, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "family", rename_all = "snake_case"))]
pub enum RegionSpec {
    Hexagon { a: i64, b: i64, c: i64 },
    Intruded { m: i64, b: i64, c: i64, d: i64 },
    HPrime { a: i64, b: i64, c: i64, k: i64 },
    HDoublePrime { a: i64, b: i64, c: i64, k: i64 },
    R { m: i64, n: i64, x: i64 },
    Rbar { m: i64, n: i64, x: i64 },
    PlusPart { m: i64, c: i64, d: i64 },
    MinusPart { m: i64, c: i64, d: i64 },
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RegionSpec::Hexagon { a, b, c } => write!(f, "H_{{{a},{b},{c}}}"),
            RegionSpec::Intruded { m, b, c, d } => write!(f, "H_{{{m},{b},{c};{d}}}"),
            RegionSpec::HPrime { a, b, c, k } => write!(f, "H'_{{{},{b},{c};{k}}}", 2 * a),
            RegionSpec::HDoublePrime { a, b, c, k } => write!(f, "H''_{{{},{b},{c};{k}}}", 2 * a),
            RegionSpec::R { m, n, x } => write!(f, "R_{{{m},{n},{x}}}"),
            RegionSpec::Rbar { m, n, x } => write!(f, "Rbar_{{{m},{n},{x}}}"),
            RegionSpec::PlusPart { m, c, d } => write!(f, "H^+_{{{m},{c},{c};{d}}}"),
            RegionSpec::MinusPart { m, c, d } => write!(f, "H^-_{{{m},{c},{c};{d}}}"),
        }
    }
}

impl RegionSpec {
    pub fn build(&self) -> Result<Region> {
        match *self {
            RegionSpec::Hexagon { a, b, c } => build_hexagon(a, b, c),
            RegionSpec::Intruded { m, b, c, d } => build_intruded(m, b, c, d),
            RegionSpec::HPrime { a, b, c, k } => build_h_prime(a, b, c, k),
            RegionSpec::HDoublePrime { a, b, c, k } => build_h_double_prime(a, b, c, k),
            RegionSpec::R { m, n, x } => build_r(m, n, x),
            RegionSpec::Rbar { m, n, x } => build_rbar(m, n, x),
            RegionSpec::PlusPart { m, c, d } => Ok(split_factorization(m, c, d)?.0),
            RegionSpec::MinusPart { m, c, d } => Ok(split_factorization(m, c, d)?.1),
        }
    }
}

fn ordered(a: TriCell, b: TriCell) -> (TriCell, TriCell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A finite set of unit triangles, with weight-1/2 lozenge positions and
/// optional marked cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<TriCell>,
    half_weight: BTreeSet<(TriCell, TriCell)>,
    marks: BTreeMap<Mark, TriCell>,
    spec: Option<RegionSpec>,
}

impl Region {
    /// Builds an arbitrary region, checking that every half-weight pair is
    /// an adjacent pair of its cells and every mark is one of its cells.
    pub fn from_parts(
        cells: impl IntoIterator<Item = TriCell>,
        half_weight: impl IntoIterator<Item = (TriCell, TriCell)>,
        marks: impl IntoIterator<Item = (Mark, TriCell)>,
    ) -> Result<Region> {
        let cells: BTreeSet<TriCell> = cells.into_iter().collect();
        let mut pairs = BTreeSet::new();
        for (a, b) in half_weight {
            if !a.is_adjacent(b) || !cells.contains(&a) || !cells.contains(&b) {
                return Err(domain!("half-weight pair {a:?}-{b:?} is not an adjacent pair of the region"));
            }
            pairs.insert(ordered(a, b));
        }
        let marks: BTreeMap<Mark, TriCell> = marks.into_iter().collect();
        if let Some((m, c)) = marks.iter().find(|(_, c)| !cells.contains(c)) {
            return Err(domain!("mark {} at {c:?} is not a cell of the region", m.label()));
        }
        Ok(Region { cells, half_weight: pairs, marks, spec: None })
    }

    pub(crate) fn from_cells(cells: BTreeSet<TriCell>) -> Region {
        Region { cells, ..Region::default() }
    }

    pub(crate) fn with_spec(mut self, spec: RegionSpec) -> Region {
        self.spec = Some(spec);
        self
    }

    /// Marks every horizontal lozenge position bisected by the horizontal
    /// line through `level` as weight 1/2.
    pub(crate) fn with_half_weight_line(mut self, level: i32) -> Region {
        let pairs: Vec<_> = self
            .cells
            .iter()
            .filter(|c| c.level == level && c.orientation() == Orientation::LeftPointing)
            .map(|c| (*c, c.horizontal_neighbor()))
            .filter(|(_, n)| self.cells.contains(n))
            .collect();
        self.half_weight.extend(pairs.into_iter().map(|(a, b)| ordered(a, b)));
        self
    }

    pub(crate) fn with_marks(mut self, marks: impl IntoIterator<Item = (Mark, TriCell)>) -> Region {
        for (m, c) in marks {
            debug_assert!(self.cells.contains(&c), "mark {m:?} outside region");
            self.marks.insert(m, c);
        }
        self
    }

    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    pub fn contains(&self, cell: TriCell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn half_weight_pairs(&self) -> &BTreeSet<(TriCell, TriCell)> {
        &self.half_weight
    }

    pub fn marks(&self) -> &BTreeMap<Mark, TriCell> {
        &self.marks
    }

    pub fn mark(&self, mark: Mark) -> Option<TriCell> {
        self.marks.get(&mark).copied()
    }

    pub fn spec(&self) -> Option<RegionSpec> {
        self.spec
    }

    /// `(left-pointing, right-pointing)` cell counts.
    pub fn orientation_counts(&self) -> (usize, usize) {
        let left = self
            .cells
            .iter()
            .filter(|c| c.orientation() == Orientation::LeftPointing)
            .count();
        (left, self.cells.len() - left)
    }

    /// Weight of the lozenge made of two adjacent cells.
    pub fn lozenge_weight(&self, a: TriCell, b: TriCell) -> ExactRational {
        if self.half_weight.contains(&ordered(a, b)) {
            rat(1, 2)
        } else {
            ExactRational::one()
        }
    }

    pub fn is_half_weight(&self, a: TriCell, b: TriCell) -> bool {
        self.half_weight.contains(&ordered(a, b))
    }

    /// Neighbors of `cell` that belong to the region.
    pub fn neighbors_in(&self, cell: TriCell) -> impl Iterator<Item = TriCell> + '_ {
        cell.neighbors().into_iter().filter(move |n| self.cells.contains(n))
    }

    /// The region with the given cells deleted (pairs and marks touching them
    /// are dropped). The family tag is cleared.
    pub fn without(&self, removed: &[TriCell]) -> Region {
        let mut out = self.clone();
        for c in removed {
            out.cells.remove(c);
        }
        out.half_weight.retain(|(a, b)| out.cells.contains(a) && out.cells.contains(b));
        out.marks.retain(|_, c| out.cells.contains(c));
        out.spec = None;
        out
    }

    /// The region with the listed marked cells deleted.
    pub fn without_marks(&self, marks: &[Mark]) -> Region {
        let cells: Vec<TriCell> = marks.iter().filter_map(|m| self.mark(*m)).collect();
        self.without(&cells)
    }

    /// Lattice translation by `(dx, dy)`; `dx + dy` must be even so that
    /// orientations are preserved.
    pub fn translated(&self, dx: i32, dy: i32) -> Region {
        debug_assert!((dx + dy).rem_euclid(2) == 0);
        Region {
            cells: self.cells.iter().map(|c| c.translated(dx, dy)).collect(),
            half_weight: self
                .half_weight
                .iter()
                .map(|(a, b)| ordered(a.translated(dx, dy), b.translated(dx, dy)))
                .collect(),
            marks: self.marks.iter().map(|(m, c)| (*m, c.translated(dx, dy))).collect(),
            spec: self.spec,
        }
    }

    /// Translate so the leftmost strip is 0 and the lowest level is 0 or 1.
    /// Two regions are translates of each other iff their normal forms agree.
    pub fn normalized(&self) -> Region {
        let Some(min_strip) = self.cells.iter().map(|c| c.strip).min() else {
            return self.clone();
        };
        let min_level = self.cells.iter().map(|c| c.level).min().unwrap();
        let dx = -min_strip;
        let mut dy = -min_level;
        if (dx + dy).rem_euclid(2) != 0 {
            dy += 1;
        }
        self.translated(dx, dy)
    }

    /// Same cells and weights up to translation (marks and tags ignored).
    pub fn congruent_by_translation(&self, other: &Region) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        a.cells == b.cells && a.half_weight == b.half_weight
    }

    /// Cells grouped by strip, each strip sorted by level.
    pub fn strips(&self) -> BTreeMap<i32, Vec<i32>> {
        let mut out: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for c in &self.cells {
            out.entry(c.strip).or_default().push(c.level);
        }
        out
    }

    /// Cells at a given level sorted from left to right.
    pub fn cells_on_level(&self, level: i32) -> Vec<TriCell> {
        // BTreeSet order is (strip, level), so this is already left to right.
        self.cells.iter().filter(|c| c.level == level).copied().collect()
    }
}
