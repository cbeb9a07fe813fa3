//! Constructors for the region families.
//!
//! Every hexagon is drawn with its left side on the vertical line `x = 0`,
//! starting from the lattice point `(0, 0)`, so the horizontal bisector of a
//! left side of length `m` is the line through level `m`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::lattice::{LatticePath, Step, TriCell};
use super::{Mark, Region, RegionSpec};
use crate::error::{domain, Result};

/// Parity of the left side of an intruded hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(m: i64) -> Parity {
        if m.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn nonnegative(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        Err(domain!("parameter {name} must be nonnegative, got {v}"))
    } else {
        Ok(())
    }
}

/// Hexagon with sides `s[0..6]` clockwise from the (vertical) left side.
fn hexagon_path(s: [i64; 6]) -> LatticePath {
    LatticePath::start(0, 0)
        .go(Step::N, s[0])
        .go(Step::NE, s[1])
        .go(Step::SE, s[2])
        .go(Step::S, s[3])
        .go(Step::SW, s[4])
        .go(Step::NW, s[5])
}

/// The semiregular hexagon with sides `a, b, c, a, b, c` clockwise from the
/// left.
pub fn build_hexagon(a: i64, b: i64, c: i64) -> Result<Region> {
    nonnegative("a", a)?;
    nonnegative("b", b)?;
    nonnegative("c", c)?;
    let cells = hexagon_path([a, b, c, a, b, c]).interior_cells();
    debug_assert_eq!(cells.len() as i64, 2 * (a * b + b * c + c * a));
    Ok(Region::from_cells(cells).with_spec(RegionSpec::Hexagon { a, b, c }))
}

/// Removes the first `count` cells on `level`, counted from the left.
fn remove_leading_on_level(cells: &mut BTreeSet<TriCell>, level: i32, count: usize) -> Result<()> {
    let on_line: Vec<TriCell> = cells.iter().filter(|c| c.level == level).copied().collect();
    if on_line.len() < count {
        return Err(domain!(
            "only {} unit triangles lie on the bisector, cannot remove {count}",
            on_line.len()
        ));
    }
    for c in &on_line[..count] {
        cells.remove(c);
    }
    Ok(())
}

/// Semiregular hexagon `m, b, c` with the first `holes` triangles on the
/// bisector of its left side removed.
pub fn build_semiregular_with_holes(m: i64, b: i64, c: i64, holes: usize) -> Result<BTreeSet<TriCell>> {
    nonnegative("m", m)?;
    nonnegative("b", b)?;
    nonnegative("c", c)?;
    let mut cells = hexagon_path([m, b, c, m, b, c]).interior_cells();
    remove_leading_on_level(&mut cells, m as i32, holes)?;
    Ok(cells)
}

/// `H_{m,b,c;d}`: the hexagon `m, b, c` minus the `2d` leftmost unit
/// triangles on the bisector of its left side. They form `d` lozenges when
/// `m` is even and `d` bowties when `m` is odd.
///
/// Any `d` whose holes fit on the bisector is accepted; for `d > min(b, c)`
/// the region exists but has no tilings.
pub fn build_intruded(m: i64, b: i64, c: i64, d: i64) -> Result<Region> {
    nonnegative("d", d)?;
    let cells = build_semiregular_with_holes(m, b, c, 2 * d as usize)?;
    debug_assert_eq!(cells.len() as i64, 2 * (m * b + b * c + c * m) - 2 * d);
    Ok(Region::from_cells(cells).with_spec(RegionSpec::Intruded { m, b, c, d }))
}

/// Shared hexagon of `H'` and `H''`: sides `2a, b+1, c, 2a+1, b, c+1`.
fn condensation_hexagon(a: i64, b: i64, c: i64, k: i64) -> Result<BTreeSet<TriCell>> {
    nonnegative("a", a)?;
    nonnegative("k", k)?;
    if b < 1 || c < 1 {
        return Err(domain!("condensation regions need b, c >= 1 (got b={b}, c={c})"));
    }
    if k > b.min(c) {
        return Err(domain!("condensation regions need k <= min(b, c) (got k={k}, b={b}, c={c})"));
    }
    Ok(hexagon_path([2 * a, b + 1, c, 2 * a + 1, b, c + 1]).interior_cells())
}

/// Placement of the four condensation cells. With the hexagon's left side on
/// `x = 0` from `(0, 0)` up to `(0, 4a)`:
///
/// ```text
///                 T  top corner (b+1, 4a+b+1)
///               /   \
///             /       \
///   (0,4a)  |           \
///           |             |
///   holes > ====o         |   o: first triangle after the holes
///           |             |
///   (0,0)    \            B' bottom-right corner (b+c+1, b-c-1)
///              \        /
///                 B      bottom corner (c+1, -c-1)
/// ```
///
/// * hole tip `o`: the bisector triangle right after the removed ones,
///   at `(2k+1, 2a)` for `H'` and `(2k, 2a)` for `H''`;
/// * bottom: the left-pointing triangle `(c, -c)` touching `B`;
/// * bottom-right: the right-pointing triangle `(b+c, b-c-1)` touching `B'`;
/// * top: the left-pointing triangle `(b, 4a+b)` touching `T`.
///
/// For `H'` (balanced) the labels run `x = o, y = B, z = B', w = T`, so `x, z`
/// are right-pointing. For `H''` (one extra left-pointing triangle) they run
/// `x = B, y = o, z = T, w = B'`, so `x, y, z` are left-pointing. In both
/// cases the order `x, y, z, w` is cyclic around the boundary.
fn condensation_marks(a: i64, b: i64, c: i64, k: i64, prime: bool) -> [(Mark, TriCell); 4] {
    let (a, b, c, k) = (a as i32, b as i32, c as i32, k as i32);
    let bottom = TriCell::new(c, -c);
    let bottom_right = TriCell::new(b + c, b - c - 1);
    let top = TriCell::new(b, 4 * a + b);
    if prime {
        let tip = TriCell::new(2 * k + 1, 2 * a);
        [(Mark::X, tip), (Mark::Y, bottom), (Mark::Z, bottom_right), (Mark::W, top)]
    } else {
        let tip = TriCell::new(2 * k, 2 * a);
        [(Mark::X, bottom), (Mark::Y, tip), (Mark::Z, top), (Mark::W, bottom_right)]
    }
}

/// `H'_{2a,b,c;k}`: the condensation hexagon minus its first `2k+1`
/// bisector triangles, with the four condensation cells marked.
pub fn build_h_prime(a: i64, b: i64, c: i64, k: i64) -> Result<Region> {
    let mut cells = condensation_hexagon(a, b, c, k)?;
    remove_leading_on_level(&mut cells, 2 * a as i32, (2 * k + 1) as usize)?;
    let marks = condensation_marks(a, b, c, k, true);
    if let Some((m, cell)) = marks.iter().find(|(_, cell)| !cells.contains(cell)) {
        return Err(domain!("mark {} at {cell:?} falls outside the region (a={a}, b={b}, c={c}, k={k})", m.label()));
    }
    Ok(Region::from_cells(cells)
        .with_marks(marks)
        .with_spec(RegionSpec::HPrime { a, b, c, k }))
}

/// `H''_{2a,b,c;k}`: the condensation hexagon minus its first `2k`
/// bisector triangles, with the four condensation cells marked.
pub fn build_h_double_prime(a: i64, b: i64, c: i64, k: i64) -> Result<Region> {
    let mut cells = condensation_hexagon(a, b, c, k)?;
    remove_leading_on_level(&mut cells, 2 * a as i32, (2 * k) as usize)?;
    let marks = condensation_marks(a, b, c, k, false);
    if let Some((m, cell)) = marks.iter().find(|(_, cell)| !cells.contains(cell)) {
        return Err(domain!("mark {} at {cell:?} falls outside the region (a={a}, b={b}, c={c}, k={k})", m.label()));
    }
    Ok(Region::from_cells(cells)
        .with_marks(marks)
        .with_spec(RegionSpec::HDoublePrime { a, b, c, k }))
}

/// `R_{m,n,x}`, traced from `A` back to itself with `O = (0, 0)`,
/// `A = (2n, 0)`; lozenges bisected by the horizontal line through `O` carry
/// weight 1/2.
pub fn build_r(m: i64, n: i64, x: i64) -> Result<Region> {
    nonnegative("m", m)?;
    nonnegative("n", n)?;
    let min_x = if m == 0 { -1 } else { 0 };
    if x < min_x {
        return Err(domain!("R_{{{m},{n},{x}}} needs x >= {min_x}"));
    }
    let a_point = (2 * n as i32, 0);
    let start = LatticePath::start(a_point.0, a_point.1).zigzag(Step::SW, Step::NW, n);
    let path = if m == 0 {
        start
            .go(Step::N, x + 1)
            .go(Step::NE, n)
            .go(Step::SE, n)
            .go(Step::S, x + 1)
    } else {
        start
            .go(Step::N, 1)
            .go(Step::SW, 1)
            .zigzag(Step::SW, Step::NW, m)
            .go(Step::N, x)
            .go(Step::NE, m + n + 1)
            .go(Step::SE, m + n)
            .go(Step::S, x + 1)
    };
    debug_assert_eq!(path.current(), a_point);
    Ok(Region::from_cells(path.interior_cells())
        .with_half_weight_line(0)
        .with_spec(RegionSpec::R { m, n, x }))
}

/// `Rbar_{m,n,x}`: like `R`, but `O` and `Obar = (-1, 1)` are joined by a
/// single unit segment and the upper boundary has the lengths
/// `x, m+n, m+n+1, x` (or `x, m, m, x` back to `Obar` when `n = 0`).
pub fn build_rbar(m: i64, n: i64, x: i64) -> Result<Region> {
    nonnegative("m", m)?;
    nonnegative("n", n)?;
    nonnegative("x", x)?;
    let path = if n == 0 {
        LatticePath::start(-1, 1)
            .zigzag(Step::SW, Step::NW, m)
            .go(Step::N, x)
            .go(Step::NE, m)
            .go(Step::SE, m)
            .go(Step::S, x)
    } else {
        LatticePath::start(2 * n as i32, 0)
            .zigzag(Step::SW, Step::NW, n)
            .go(Step::NW, 1)
            .zigzag(Step::SW, Step::NW, m)
            .go(Step::N, x)
            .go(Step::NE, m + n)
            .go(Step::SE, m + n + 1)
            .go(Step::S, x)
    };
    debug_assert!(path.is_closed());
    Ok(Region::from_cells(path.interior_cells())
        .with_half_weight_line(0)
        .with_spec(RegionSpec::Rbar { m, n, x }))
}

/// Splits `H_{m,c,c;d}` along its horizontal symmetry axis into the bottom
/// part `H^+` (which keeps every non-removed triangle on the axis, with the
/// lozenges on the axis weighted 1/2) and the top part `H^-`.
///
/// For `d < c` this is the cut along the zigzag path from the middle of the
/// right side to the tip of the last hole; for `d = c` the region already
/// falls apart into two components.
pub fn split_factorization(m: i64, c: i64, d: i64) -> Result<(Region, Region)> {
    nonnegative("c", c)?;
    if d > c {
        return Err(domain!("split needs d <= c (got d={d}, c={c})"));
    }
    let whole = build_intruded(m, c, c, d)?;
    let axis = m as i32;
    let (plus, minus): (BTreeSet<TriCell>, BTreeSet<TriCell>) =
        whole.cells().iter().partition(|cell| cell.level <= axis);
    let plus = Region::from_cells(plus)
        .with_half_weight_line(axis)
        .with_spec(RegionSpec::PlusPart { m, c, d });
    let minus = Region::from_cells(minus).with_spec(RegionSpec::MinusPart { m, c, d });
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::Orientation;

    fn balanced(r: &Region) -> bool {
        let (l, rr) = r.orientation_counts();
        l == rr
    }

    #[test]
    fn hexagon_cell_counts() {
        assert_eq!(build_hexagon(1, 1, 1).unwrap().len(), 6);
        assert_eq!(build_hexagon(0, 3, 4).unwrap().len(), 24);
        assert_eq!(build_hexagon(2, 3, 4).unwrap().len(), 52);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let h = build_hexagon(a, b, c).unwrap();
                    assert_eq!(h.len() as i64, 2 * (a * b + b * c + c * a));
                    assert!(balanced(&h));
                }
            }
        }
        assert!(build_hexagon(-1, 1, 1).is_err());
    }

    #[test]
    fn intruded_examples() {
        let r = build_intruded(6, 5, 8, 3).unwrap();
        assert_eq!(r.len(), 230);
        assert!(balanced(&r));
        assert_eq!(build_intruded(1, 1, 1, 1).unwrap().len(), 4);
        for m in 0..5 {
            let plain = build_hexagon(m, 2, 3).unwrap();
            let zero = build_intruded(m, 2, 3, 0).unwrap();
            assert_eq!(plain.cells(), zero.cells());
        }
    }

    #[test]
    fn even_holes_are_lozenges_and_odd_holes_are_bowties() {
        let hex = build_hexagon(4, 3, 3).unwrap();
        let holes: Vec<TriCell> = hex.cells().difference(build_intruded(4, 3, 3, 2).unwrap().cells()).copied().collect();
        assert_eq!(holes.len(), 4);
        assert!(holes[0].is_adjacent(holes[1]) && holes[2].is_adjacent(holes[3]));
        assert_eq!(holes[0].orientation(), Orientation::LeftPointing);

        let hex = build_hexagon(5, 3, 3).unwrap();
        let holes: Vec<TriCell> = hex.cells().difference(build_intruded(5, 3, 3, 2).unwrap().cells()).copied().collect();
        assert_eq!(holes.len(), 4);
        // bowtie: the two triangles share only the apex
        assert!(!holes[0].is_adjacent(holes[1]));
        let shared: Vec<_> = holes[0].corners().into_iter().filter(|p| holes[1].corners().contains(p)).collect();
        assert_eq!(shared.len(), 1);
    }

    #[test]
    fn intruded_accepts_untileable_hole_counts_that_fit() {
        // d > b but the holes still fit on the bisector
        let r = build_intruded(4, 5, 8, 6).unwrap();
        assert_eq!(r.len() as i64, 2 * (20 + 40 + 32) - 12);
        assert!(build_intruded(1, 1, 1, 2).is_err());
    }

    #[test]
    fn condensation_regions_parity() {
        for a in 0..3 {
            for b in 1..4 {
                for c in 1..4 {
                    for k in 0..=b.min(c) {
                        if k == b && k == c {
                            assert!(build_h_prime(a, b, c, k).is_err());
                            continue;
                        }
                        let hp = build_h_prime(a, b, c, k).unwrap();
                        let (l, r) = hp.orientation_counts();
                        assert_eq!(l, r, "H' balanced a={a} b={b} c={c} k={k}");
                        let hpp = build_h_double_prime(a, b, c, k).unwrap();
                        let (l, r) = hpp.orientation_counts();
                        assert_eq!((l as i64 - r as i64).abs(), 1, "H'' off by one");
                        assert_eq!(hpp.len() % 2, 1);
                        assert_eq!(hp.marks().len(), 4);
                        assert_eq!(hpp.marks().len(), 4);
                    }
                }
            }
        }
        assert!(build_h_prime(1, 0, 2, 0).is_err());
        assert!(build_h_double_prime(1, 2, 2, 3).is_err());
        let k0 = build_h_double_prime(2, 3, 6, 0).unwrap();
        assert_eq!(k0.len() as i64, {
            let s = 2 * 2 + 3 + 6;
            (s + 2) * (s + 2) - 16 - 49 - 25
        });
    }

    #[test]
    fn r_regions_have_balanced_cells() {
        for m in 0..4 {
            for n in 0..4 {
                for x in -1..3 {
                    if m > 0 && x < 0 {
                        assert!(build_r(m, n, x).is_err());
                        continue;
                    }
                    let r = build_r(m, n, x).unwrap();
                    assert!(balanced(&r), "R_{{{m},{n},{x}}}");
                    assert_eq!(r.half_weight_pairs().len() as i64, n);
                    if x >= 0 {
                        let rb = build_rbar(m, n, x).unwrap();
                        assert!(balanced(&rb), "Rbar_{{{m},{n},{x}}}");
                        assert_eq!(rb.half_weight_pairs().len() as i64, n);
                    }
                }
            }
        }
        assert!(build_rbar(6, 0, 3).unwrap().half_weight_pairs().is_empty());
        assert!(!build_rbar(4, 2, 3).unwrap().half_weight_pairs().is_empty());
    }

    #[test]
    fn split_partitions_the_region() {
        for m in 0..5 {
            for c in 0..=6 {
                for d in 0..=c {
                    let whole = build_intruded(m, c, c, d).unwrap();
                    let (plus, minus) = split_factorization(m, c, d).unwrap();
                    assert!(plus.cells().is_disjoint(minus.cells()));
                    let union: BTreeSet<TriCell> = plus.cells().union(minus.cells()).copied().collect();
                    assert_eq!(&union, whole.cells());
                }
            }
        }
        assert!(split_factorization(2, 2, 3).is_err());
    }
}
