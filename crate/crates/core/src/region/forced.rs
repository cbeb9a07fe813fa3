use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Region, TriCell};
use crate::exactnum::ExactRational;

/// Result of peeling off forced lozenges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedReduction {
    pub reduced: Region,
    /// Product of the weights of the removed lozenges, so that
    /// `M(original) = weight_factor * M(reduced)`. Zero when some cell was
    /// left with no possible partner.
    pub weight_factor: ExactRational,
    pub removed: Vec<(TriCell, TriCell)>,
}

impl ForcedReduction {
    pub fn is_untileable(&self) -> bool {
        self.weight_factor.is_zero()
    }
}

/// Repeatedly removes lozenges covering a cell that has exactly one
/// neighbor left in the region.
pub fn remove_forced_lozenges(region: &Region) -> ForcedReduction {
    let mut cells: BTreeSet<TriCell> = region.cells().clone();
    let mut factor = ExactRational::one();
    let mut removed = Vec::new();
    let mut queue: Vec<TriCell> = cells.iter().copied().collect();

    while let Some(cell) = queue.pop() {
        if !cells.contains(&cell) {
            continue;
        }
        let partners: Vec<TriCell> = cell.neighbors().into_iter().filter(|n| cells.contains(n)).collect();
        match partners.as_slice() {
            [] => {
                factor = ExactRational::zero();
                break;
            }
            [partner] => {
                let partner = *partner;
                cells.remove(&cell);
                cells.remove(&partner);
                factor *= region.lozenge_weight(cell, partner);
                removed.push((cell, partner));
                queue.extend(partner.neighbors().into_iter().filter(|n| cells.contains(n)));
            }
            _ => {}
        }
    }

    let gone: Vec<TriCell> = region.cells().difference(&cells).copied().collect();
    ForcedReduction { reduced: region.without(&gone), weight_factor: factor, removed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::build_hexagon;

    #[test]
    fn plain_hexagon_has_no_forced_lozenges() {
        let h = build_hexagon(2, 3, 2).unwrap();
        let red = remove_forced_lozenges(&h);
        assert_eq!(red.reduced.cells(), h.cells());
        assert!(red.weight_factor.is_one());
    }

    #[test]
    fn rhombus_collapses_entirely() {
        let r = build_hexagon(0, 2, 3).unwrap();
        let red = remove_forced_lozenges(&r);
        assert!(red.reduced.is_empty());
        assert!(red.weight_factor.is_one());
    }

    #[test]
    fn isolated_cell_is_untileable() {
        let chain = [TriCell::new(0, 0), TriCell::new(0, 1), TriCell::new(0, 2)];
        let r = Region::from_parts(chain, [], []).unwrap();
        let red = remove_forced_lozenges(&r);
        assert!(red.is_untileable());
    }
}
