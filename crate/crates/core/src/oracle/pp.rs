//! Boxed plane partitions, counted row by row.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exactnum::ExactInt;

/// Capacity of the plane-partition enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PpLimits {
    pub max_cells: i64,
    pub max_height: i64,
}

impl Default for PpLimits {
    fn default() -> Self {
        PpLimits { max_cells: 20, max_height: 8 }
    }
}

struct Enumerator<'a> {
    rows: usize,
    cols: usize,
    pinned: &'a dyn Fn(usize, usize) -> Option<u8>,
    memo: BTreeMap<(usize, Vec<u8>), BigInt>,
}

impl Enumerator<'_> {
    /// Number of ways to fill rows `row..` below the row `above`.
    fn count(&mut self, row: usize, above: &[u8]) -> BigInt {
        if row == self.rows {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(&(row, above.to_vec())) {
            return v.clone();
        }
        let mut current = Vec::with_capacity(self.cols);
        let mut total = BigInt::zero();
        self.fill(row, 0, above, &mut current, &mut total);
        self.memo.insert((row, above.to_vec()), total.clone());
        total
    }

    fn fill(&mut self, row: usize, col: usize, above: &[u8], current: &mut Vec<u8>, total: &mut BigInt) {
        if col == self.cols {
            let below = current.clone();
            *total += self.count(row + 1, &below);
            return;
        }
        let cap = match current.last() {
            Some(&left) => left.min(above[col]),
            None => above[col],
        };
        let choices: Vec<u8> = match (self.pinned)(row, col) {
            Some(v) if v <= cap => alloc::vec![v],
            Some(_) => Vec::new(),
            None => (0..=cap).collect(),
        };
        for v in choices {
            current.push(v);
            self.fill(row, col + 1, above, current, total);
            current.pop();
        }
    }
}

fn check(rows: i64, cols: i64, h: i64, limits: &PpLimits) -> Result<()> {
    if rows < 0 || cols < 0 || h < 0 {
        return Err(domain!("plane partition box must be nonnegative (got {rows} x {cols}, height {h})"));
    }
    if rows * cols > limits.max_cells {
        return Err(Error::Capacity { what: "plane partition cells", actual: (rows * cols) as usize, limit: limits.max_cells as usize });
    }
    if h > limits.max_height {
        return Err(Error::Capacity { what: "plane partition height", actual: h as usize, limit: limits.max_height as usize });
    }
    Ok(())
}

fn run(rows: i64, cols: i64, h: i64, pinned: &dyn Fn(usize, usize) -> Option<u8>) -> ExactInt {
    let mut e = Enumerator { rows: rows as usize, cols: cols as usize, pinned, memo: BTreeMap::new() };
    let top = alloc::vec![h as u8; cols as usize];
    e.count(0, &top)
}

/// Plane partitions with `rows` rows, `cols` columns and entries in `0..=h`.
pub fn enumerate_pp(rows: i64, cols: i64, h: i64) -> Result<ExactInt> {
    enumerate_pp_with(rows, cols, h, &PpLimits::default())
}

pub fn enumerate_pp_with(rows: i64, cols: i64, h: i64, limits: &PpLimits) -> Result<ExactInt> {
    check(rows, cols, h, limits)?;
    Ok(run(rows, cols, h, &|_, _| None))
}

/// Plane partitions in a `b × c` box of height `h` with
/// `pi[b+1-i][i] = h/2` for `i = 1..=d` (1-based indices).
pub fn count_pp_restricted(b: i64, c: i64, h: i64, d: i64) -> Result<ExactInt> {
    count_pp_restricted_with(b, c, h, d, &PpLimits::default())
}

pub fn count_pp_restricted_with(b: i64, c: i64, h: i64, d: i64, limits: &PpLimits) -> Result<ExactInt> {
    check(b, c, h, limits)?;
    if h % 2 != 0 {
        return Err(domain!("restricted plane partitions need an even height (got {h})"));
    }
    if d < 0 || d > b.min(c) {
        return Err(domain!("restricted plane partitions need 0 <= d <= min(b, c) (got d={d})"));
    }
    let (b_u, d_u, half) = (b as usize, d as usize, (h / 2) as u8);
    let pinned = move |row: usize, col: usize| {
        // 0-based: row = b - i, col = i - 1 for i in 1..=d.
        (row + col + 1 == b_u && col < d_u).then_some(half)
    };
    Ok(run(b, c, h, &pinned))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn small_boxes() {
        assert_eq!(enumerate_pp(1, 1, 2).unwrap(), int(3));
        assert_eq!(enumerate_pp(2, 2, 2).unwrap(), int(20));
        assert_eq!(enumerate_pp(0, 3, 2).unwrap(), int(1));
        assert_eq!(count_pp_restricted(1, 1, 2, 1).unwrap(), int(1));
        assert_eq!(count_pp_restricted(2, 2, 2, 0).unwrap(), int(20));
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_pp(5, 5, 2), Err(Error::Capacity { .. })));
        assert!(matches!(enumerate_pp(2, 2, 9), Err(Error::Capacity { .. })));
        assert!(count_pp_restricted(2, 2, 3, 1).is_err());
    }
}
