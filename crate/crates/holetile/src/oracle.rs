//! Ground-truth weighted lozenge counting, independent of every formula.
//!
//! A tiling is a perfect matching of the cells along shared edges, with
//! free cells additionally allowed to stay unmatched (their lozenge sticks
//! out across the free boundary). A lozenge contributes its pair weight.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exactnum::Int;
use crate::regions::{Cell, TriangularRegion};
use crate::{Error, Result};

/// Order in which the profile DP sweeps the cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    /// Column by column left to right, bottom to top within a column.
    ColumnsUpward,
    /// Column by column left to right, top to bottom within a column.
    ColumnsDownward,
    /// Column by column right to left, bottom to top.
    ColumnsLeftward,
}

fn scan_key(order: ScanOrder, c: &Cell) -> (i32, i32) {
    match order {
        ScanOrder::ColumnsUpward => (c.x, c.y),
        ScanOrder::ColumnsDownward => (c.x, -c.y),
        ScanOrder::ColumnsLeftward => (-c.x, c.y),
    }
}

pub const BACKTRACK_LIMIT: usize = 44;

pub fn count_tilings_dp(region: &TriangularRegion) -> Result<Int> {
    count_tilings_dp_with(region, ScanOrder::ColumnsUpward)
}

/// Broken-profile DP. The state after processing cell i is a bitmask over
/// the next cells in scan order saying which of them are already covered.
pub fn count_tilings_dp_with(region: &TriangularRegion, order: ScanOrder) -> Result<Int> {
    let mut cells: Vec<Cell> = region.cells().iter().copied().collect();
    cells.sort_by_key(|c| scan_key(order, c));
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();

    // forward neighbours as (distance, weight)
    let mut forward: Vec<Vec<(usize, u32)>> = vec![Vec::new(); cells.len()];
    let mut window = 0;
    for (i, c) in cells.iter().enumerate() {
        for d in c.neighbours() {
            if let Some(&j) = index.get(&d) {
                if j > i {
                    forward[i].push((j - i, region.weight(*c, d)));
                    window = window.max(j - i);
                }
            }
        }
    }
    if window > 63 {
        return Err(Error::FrontierTooWide(window));
    }

    let mut states: HashMap<u64, Int> = HashMap::from([(0, Int::one())]);
    for (i, c) in cells.iter().enumerate() {
        let free = region.free_cells().contains(c);
        let mut next: HashMap<u64, Int> = HashMap::with_capacity(states.len() * 2);
        for (mask, count) in states {
            if mask & 1 == 1 {
                *next.entry(mask >> 1).or_default() += count;
                continue;
            }
            for &(dist, w) in &forward[i] {
                if mask >> dist & 1 == 0 {
                    let t = (mask | 1 << dist) >> 1;
                    let add = if w == 1 { count.clone() } else { &count * w };
                    *next.entry(t).or_default() += add;
                }
            }
            if free {
                *next.entry(mask >> 1).or_default() += count;
            }
        }
        states = next;
    }
    Ok(states.remove(&0).unwrap_or_else(Int::zero))
}

/// Exhaustive recursive placement; only meant for small test regions.
pub fn count_tilings_backtrack(region: &TriangularRegion) -> Result<Int> {
    let cells: Vec<Cell> = region.cells().iter().copied().collect();
    if cells.len() > BACKTRACK_LIMIT {
        return Err(Error::TooLarge(format!("{} cells, backtracking handles at most {BACKTRACK_LIMIT}", cells.len())));
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let adj: Vec<Vec<(usize, u128)>> = cells
        .iter()
        .map(|c| {
            c.neighbours()
                .iter()
                .filter_map(|d| index.get(d).map(|&j| (j, region.weight(*c, *d) as u128)))
                .collect()
        })
        .collect();
    let free: Vec<bool> = cells.iter().map(|c| region.free_cells().contains(c)).collect();

    fn place(covered: u64, n: usize, adj: &[Vec<(usize, u128)>], free: &[bool]) -> u128 {
        let first = (0..n).find(|&i| covered >> i & 1 == 0);
        let Some(i) = first else { return 1 };
        let mut total = 0;
        for &(j, w) in &adj[i] {
            if covered >> j & 1 == 0 {
                total += w * place(covered | 1 << i | 1 << j, n, adj, free);
            }
        }
        if free[i] {
            total += place(covered | 1 << i, n, adj, free);
        }
        total
    }

    Ok(Int::from(place(0, cells.len(), &adj, &free)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{realize_cells, validate_region, Family, RegionSpec};
    use std::collections::BTreeSet;

    fn plain(a: u32, b: u32, c: u32) -> TriangularRegion {
        realize_cells(&validate_region(RegionSpec::plain(a, b, c)).unwrap())
    }

    #[test]
    fn unit_hexagon() {
        assert_eq!(count_tilings_dp(&plain(1, 1, 1)).unwrap(), Int::from(2));
        assert_eq!(count_tilings_backtrack(&plain(1, 1, 1)).unwrap(), Int::from(2));
    }

    #[test]
    fn two_by_two_hexagon() {
        assert_eq!(count_tilings_backtrack(&plain(2, 2, 2)).unwrap(), Int::from(20));
        assert_eq!(count_tilings_dp(&plain(2, 2, 2)).unwrap(), Int::from(20));
    }

    #[test]
    fn single_lozenge() {
        let r = TriangularRegion::new(BTreeSet::from([Cell::right(0, 0), Cell::left(-1, 0)]));
        assert_eq!(count_tilings_dp(&r).unwrap(), Int::from(1));
        assert_eq!(count_tilings_backtrack(&r).unwrap(), Int::from(1));
    }

    #[test]
    fn odd_cell_count_without_free_cells_is_zero() {
        let r = TriangularRegion::new(BTreeSet::from([Cell::right(0, 0), Cell::left(-1, 0), Cell::left(0, 1)]));
        assert_eq!(count_tilings_dp(&r).unwrap(), Int::from(0));
    }

    #[test]
    fn vertical_half_worked_example() {
        let spec = validate_region(RegionSpec::holey(Family::VerticalHalf, 2, 2, 2)).unwrap();
        let r = realize_cells(&spec);
        assert_eq!(count_tilings_backtrack(&r).unwrap(), Int::from(1));
        assert_eq!(count_tilings_dp(&r).unwrap(), Int::from(1));
    }

    #[test]
    fn backtrack_refuses_big_regions() {
        assert!(matches!(count_tilings_backtrack(&plain(3, 3, 3)), Err(Error::TooLarge(_))));
    }
}
