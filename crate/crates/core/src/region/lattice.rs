//! Triangular lattice with one family of vertical lattice lines.
//!
//! Lattice points are addressed by `(x, y)` where the point sits on the
//! vertical line `x` at height `y / 2` (in unit lengths), with `x + y` even.
//! A unit step north is `(0, +2)`, north-east `(+1, +1)`, south-east
//! `(+1, -1)`, and so on.
//!
//! A unit triangle lives in a vertical strip between lines `strip` and
//! `strip + 1`. Its `level` is the height (in half units) of the vertex it
//! has on the far side of its vertical edge:
//!
//! ```text
//!   right-pointing (strip + level odd)   left-pointing (strip + level even)
//!
//!        |\                                      /|
//!        | \                                    / |
//!        |  >  apex at (strip+1, level)        <  |   apex at (strip, level)
//!        | /                                    \ |
//!        |/                                      \|
//!      x = strip                                x = strip + 1
//! ```
//!
//! Consecutive levels in a strip alternate orientation and share a slanted
//! edge; a right-pointing cell also shares its vertical edge with the
//! left-pointing cell at the same level in the strip to its left.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    LeftPointing,
    RightPointing,
}

/// A unit triangle of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriCell {
    pub strip: i32,
    pub level: i32,
}

impl TriCell {
    pub const fn new(strip: i32, level: i32) -> Self {
        TriCell { strip, level }
    }

    pub const fn orientation(self) -> Orientation {
        if (self.strip + self.level).rem_euclid(2) == 1 {
            Orientation::RightPointing
        } else {
            Orientation::LeftPointing
        }
    }

    /// The cell across the vertical edge.
    pub const fn horizontal_neighbor(self) -> TriCell {
        match self.orientation() {
            Orientation::RightPointing => TriCell::new(self.strip - 1, self.level),
            Orientation::LeftPointing => TriCell::new(self.strip + 1, self.level),
        }
    }

    /// The three edge-adjacent cells: below, above, across the vertical edge.
    pub const fn neighbors(self) -> [TriCell; 3] {
        [
            TriCell::new(self.strip, self.level - 1),
            TriCell::new(self.strip, self.level + 1),
            self.horizontal_neighbor(),
        ]
    }

    pub fn is_adjacent(self, other: TriCell) -> bool {
        self.neighbors().contains(&other)
    }

    pub const fn translated(self, dx: i32, dy: i32) -> TriCell {
        TriCell::new(self.strip + dx, self.level + dy)
    }

    /// Corners as lattice points `(x, y)`.
    pub const fn corners(self) -> [(i32, i32); 3] {
        let (s, l) = (self.strip, self.level);
        match self.orientation() {
            Orientation::RightPointing => [(s, l - 1), (s + 1, l), (s, l + 1)],
            Orientation::LeftPointing => [(s + 1, l - 1), (s + 1, l + 1), (s, l)],
        }
    }

    /// Centroid scaled by 3 in `x` and by 3 in `y` (lattice coordinates).
    const fn centroid3(self) -> (i64, i64) {
        let x = match self.orientation() {
            Orientation::RightPointing => 3 * self.strip as i64 + 1,
            Orientation::LeftPointing => 3 * self.strip as i64 + 2,
        };
        (x, 3 * self.level as i64)
    }
}

/// Unit steps along lattice lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    N,
    NE,
    SE,
    S,
    SW,
    NW,
}

impl Step {
    pub const fn delta(self) -> (i32, i32) {
        match self {
            Step::N => (0, 2),
            Step::NE => (1, 1),
            Step::SE => (1, -1),
            Step::S => (0, -2),
            Step::SW => (-1, -1),
            Step::NW => (-1, 1),
        }
    }
}

/// A closed boundary traced by unit steps.
#[derive(Debug, Clone)]
pub struct LatticePath {
    points: Vec<(i32, i32)>,
}

impl LatticePath {
    pub fn start(x: i32, y: i32) -> Self {
        debug_assert!((x + y).rem_euclid(2) == 0, "({x}, {y}) is not a lattice point");
        LatticePath { points: alloc::vec![(x, y)] }
    }

    pub fn current(&self) -> (i32, i32) {
        *self.points.last().expect("path is never empty")
    }

    pub fn go(mut self, step: Step, count: i64) -> Self {
        let (dx, dy) = step.delta();
        for _ in 0..count.max(0) {
            let (x, y) = self.current();
            self.points.push((x + dx, y + dy));
        }
        self
    }

    /// `pairs` repetitions of `first` then `second`.
    pub fn zigzag(mut self, first: Step, second: Step, pairs: i64) -> Self {
        for _ in 0..pairs.max(0) {
            self = self.go(first, 1).go(second, 1);
        }
        self
    }

    pub fn is_closed(&self) -> bool {
        self.points.first() == self.points.last()
    }

    pub fn points(&self) -> &[(i32, i32)] {
        &self.points
    }

    /// All unit triangles enclosed by the path (even-odd rule on centroids).
    pub fn interior_cells(&self) -> BTreeSet<TriCell> {
        debug_assert!(self.is_closed());
        let mut out = BTreeSet::new();
        if self.points.len() < 4 {
            return out;
        }
        let min_x = self.points.iter().map(|p| p.0).min().unwrap();
        let max_x = self.points.iter().map(|p| p.0).max().unwrap();
        let min_y = self.points.iter().map(|p| p.1).min().unwrap();
        let max_y = self.points.iter().map(|p| p.1).max().unwrap();
        for strip in min_x..max_x {
            for level in (min_y + 1)..max_y {
                let cell = TriCell::new(strip, level);
                if self.encloses(cell.centroid3()) {
                    out.insert(cell);
                }
            }
        }
        out
    }

    fn encloses(&self, (px, py): (i64, i64)) -> bool {
        let mut inside = false;
        for w in self.points.windows(2) {
            let (x1, y1) = (3 * w[0].0 as i64, 3 * w[0].1 as i64);
            let (x2, y2) = (3 * w[1].0 as i64, 3 * w[1].1 as i64);
            if (y1 > py) != (y2 > py) {
                // px < x1 + (py - y1) (x2 - x1) / (y2 - y1)
                let dy = y2 - y1;
                let lhs = (px - x1) * dy;
                let rhs = (py - y1) * (x2 - x1);
                let left_of_edge = if dy > 0 { lhs < rhs } else { lhs > rhs };
                if left_of_edge {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_alternates_within_strip() {
        assert_eq!(TriCell::new(0, 0).orientation(), Orientation::LeftPointing);
        assert_eq!(TriCell::new(0, 1).orientation(), Orientation::RightPointing);
        assert_eq!(TriCell::new(1, 0).orientation(), Orientation::RightPointing);
        assert_eq!(TriCell::new(-1, 0).orientation(), Orientation::RightPointing);
    }

    #[test]
    fn adjacency_is_symmetric() {
        for s in -3..3 {
            for l in -3..3 {
                let c = TriCell::new(s, l);
                for n in c.neighbors() {
                    assert!(n.neighbors().contains(&c), "{c:?} -> {n:?}");
                    assert_ne!(n.orientation(), c.orientation());
                }
            }
        }
    }

    #[test]
    fn shared_vertical_edge() {
        let r = TriCell::new(1, 0);
        let l = TriCell::new(0, 0);
        assert_eq!(r.horizontal_neighbor(), l);
        assert!(r.corners().contains(&(1, -1)) && l.corners().contains(&(1, -1)));
        assert!(r.corners().contains(&(1, 1)) && l.corners().contains(&(1, 1)));
    }

    #[test]
    fn unit_hexagon_has_six_cells() {
        let path = LatticePath::start(0, 0)
            .go(Step::N, 1)
            .go(Step::NE, 1)
            .go(Step::SE, 1)
            .go(Step::S, 1)
            .go(Step::SW, 1)
            .go(Step::NW, 1);
        assert!(path.is_closed());
        assert_eq!(path.interior_cells().len(), 6);
    }
}
