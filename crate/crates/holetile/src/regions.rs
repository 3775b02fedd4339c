//! Region families and their realization as cell sets on the triangular lattice.
//!
//! Coordinates: a right-pointing cell `R(x,y)` has vertices (x,y), (x,y+2),
//! (x+1,y+1); a left-pointing cell `L(x,y)` has vertices (x+1,y), (x+1,y+2),
//! (x,y+1). The second coordinate counts half unit-edges along the vertical
//! lattice direction, so vertical edges have length 2. `R(x,y)` needs
//! y ≡ x (mod 2), `L(x,y)` needs y ≡ x+1.
//!
//! The hexagon H_{a,b,c} occupies 0 ≤ x ≤ a+c between the lines
//! y = max(-x, x-2a) and y = min(2b+x, 2b+2c-x). Its vertical sides have
//! length b, and the centre O of H_{n,b} = H_{n,b,n} sits at (n, b).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Hole-free hexagon with sides a=n, b, c, a, b, c.
    PlainHexagon { c: u32 },
    HoleyHexagon,
    /// Left half of the holey hexagon; lozenges may protrude across the
    /// vertical symmetry axis.
    VerticalHalf,
    /// Part strictly below the zig-zag cut along the horizontal axis.
    LowerHalf,
    /// Part above the cut, lozenges crossing the cut weighted 2.
    WeightedUpperHalf,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::PlainHexagon { .. } => "plain",
            Family::HoleyHexagon => "hexagon",
            Family::VerticalHalf => "vertical",
            Family::LowerHalf => "lower",
            Family::WeightedUpperHalf => "upper-weighted",
        }
    }
}

/// Symbolic region: hexagon H_{n,b} cut down to one of the families.
/// `k = None` is the hole-free background region of the same family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionSpec {
    pub family: Family,
    pub n: u32,
    pub b: u32,
    pub k: Option<u32>,
}

impl RegionSpec {
    pub fn holey(family: Family, n: u32, b: u32, k: u32) -> Self {
        RegionSpec { family, n, b, k: Some(k) }
    }

    pub fn background(family: Family, n: u32, b: u32) -> Self {
        RegionSpec { family, n, b, k: None }
    }

    pub fn plain(a: u32, b: u32, c: u32) -> Self {
        RegionSpec { family: Family::PlainHexagon { c }, n: a, b, k: None }
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.k) {
            (Family::PlainHexagon { c }, _) => write!(f, "plain({},{},{})", self.n, self.b, c),
            (fam, Some(k)) => write!(f, "{}(n={},b={},k={})", fam.name(), self.n, self.b, k),
            (fam, None) => write!(f, "{}(n={},b={},no holes)", fam.name(), self.n, self.b),
        }
    }
}

/// A spec that passed [`validate_region`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValidatedRegion(RegionSpec);

impl ValidatedRegion {
    pub fn spec(&self) -> &RegionSpec {
        &self.0
    }

    /// m with b = 2m (even) or b = 2m-1 (odd).
    pub fn m(&self) -> u32 {
        self.0.b.div_ceil(2)
    }

    pub fn b_even(&self) -> bool {
        self.0.b % 2 == 0
    }
}

pub fn validate_region(spec: RegionSpec) -> Result<ValidatedRegion> {
    if spec.n == 0 || spec.b == 0 {
        return Err(Error::InvalidParams(format!("sides must be positive in {spec}")));
    }
    if let Family::PlainHexagon { c } = spec.family {
        if c == 0 {
            return Err(Error::InvalidParams(format!("sides must be positive in {spec}")));
        }
        return Ok(ValidatedRegion(RegionSpec { k: None, ..spec }));
    }
    let Some(k) = spec.k else {
        return Ok(ValidatedRegion(spec));
    };
    if k > spec.n {
        return Err(Error::HoleOutOfRange(format!("k = {k} exceeds n = {}", spec.n)));
    }
    // at k = 0 the two holes sit on top of each other; only the vertical
    // family, which keeps a single hole, has a meaningful k = 0 region
    if k == 0 && spec.family != Family::VerticalHalf {
        return Err(Error::HoleOutOfRange(format!(
            "k = 0 is only defined for the vertical family, not {}",
            spec.family.name()
        )));
    }
    let same = (spec.n + spec.b) % 2 == 0;
    if same != (k % 2 == 0) {
        let rule = if same { "n and b share parity, so k must be even" } else { "n and b differ in parity, so k must be odd" };
        return Err(Error::ParityViolation(format!("{rule} (n={}, b={}, k={k})", spec.n, spec.b)));
    }
    Ok(ValidatedRegion(spec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
    pub o: Orientation,
}

impl Cell {
    pub fn right(x: i32, y: i32) -> Cell {
        Cell { x, y, o: Orientation::Right }
    }

    pub fn left(x: i32, y: i32) -> Cell {
        Cell { x, y, o: Orientation::Left }
    }

    /// Height of the centroid, in the same half-edge units as y.
    pub fn centroid_y(&self) -> i32 {
        self.y + 1
    }

    /// x-coordinate of the cell's vertical edge.
    pub fn vertical_edge_x(&self) -> i32 {
        match self.o {
            Orientation::Right => self.x,
            Orientation::Left => self.x + 1,
        }
    }

    pub fn vertices(&self) -> [(i32, i32); 3] {
        let (x, y) = (self.x, self.y);
        match self.o {
            Orientation::Right => [(x, y), (x, y + 2), (x + 1, y + 1)],
            Orientation::Left => [(x + 1, y), (x + 1, y + 2), (x, y + 1)],
        }
    }

    /// The three edge-sharing cells.
    pub fn neighbours(&self) -> [Cell; 3] {
        let (x, y) = (self.x, self.y);
        match self.o {
            Orientation::Right => [Cell::left(x - 1, y), Cell::left(x, y + 1), Cell::left(x, y - 1)],
            Orientation::Left => [Cell::right(x + 1, y), Cell::right(x, y + 1), Cell::right(x, y - 1)],
        }
    }

    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.neighbours().contains(other)
    }
}

fn pair_key(a: Cell, b: Cell) -> (Cell, Cell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Concrete cell set handed to the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularRegion {
    cells: BTreeSet<Cell>,
    free_cells: BTreeSet<Cell>,
    free_line: Option<i32>,
    weights: BTreeMap<(Cell, Cell), u32>,
}

impl TriangularRegion {
    pub fn new(cells: BTreeSet<Cell>) -> Self {
        TriangularRegion { cells, free_cells: BTreeSet::new(), free_line: None, weights: BTreeMap::new() }
    }

    /// Declares cells whose vertical edge lies on the line x = `line` as
    /// free: they may be covered by a lozenge sticking out across it.
    pub fn with_free_boundary(mut self, line: i32, free: BTreeSet<Cell>) -> Result<Self> {
        for c in &free {
            if !self.cells.contains(c) {
                return Err(Error::InvalidParams(format!("free cell {c:?} is not in the region")));
            }
            if c.vertical_edge_x() != line {
                return Err(Error::InvalidParams(format!("free cell {c:?} is off the line x = {line}")));
            }
        }
        self.free_line = Some(line);
        self.free_cells = free;
        Ok(self)
    }

    pub fn with_weight(mut self, a: Cell, b: Cell, w: u32) -> Result<Self> {
        if !a.is_adjacent(&b) {
            return Err(Error::InvalidParams(format!("weighted pair {a:?}, {b:?} is not adjacent")));
        }
        if w == 0 {
            return Err(Error::InvalidParams("weights must be positive".into()));
        }
        self.weights.insert(pair_key(a, b), w);
        Ok(self)
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn free_cells(&self) -> &BTreeSet<Cell> {
        &self.free_cells
    }

    pub fn free_line(&self) -> Option<i32> {
        self.free_line
    }

    pub fn weights(&self) -> &BTreeMap<(Cell, Cell), u32> {
        &self.weights
    }

    pub fn weight(&self, a: Cell, b: Cell) -> u32 {
        self.weights.get(&pair_key(a, b)).copied().unwrap_or(1)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn count_orientation(&self, o: Orientation) -> usize {
        self.cells.iter().filter(|c| c.o == o).count()
    }
}

fn inside_hexagon(a: i32, b: i32, c: i32, (x, y): (i32, i32)) -> bool {
    if x < 0 || x > a + c {
        return false;
    }
    let lo = (-x).max(x - 2 * a);
    let hi = (2 * b + x).min(2 * b + 2 * c - x);
    lo <= y && y <= hi
}

/// All unit triangles of H_{a,b,c}.
pub fn hexagon_cells(a: u32, b: u32, c: u32) -> BTreeSet<Cell> {
    let (a, b, c) = (a as i32, b as i32, c as i32);
    let mut cells = BTreeSet::new();
    for x in 0..a + c {
        for y in -(a + c) - 2..=2 * (b + c) + 2 {
            let cell = if (y - x).rem_euclid(2) == 0 { Cell::right(x, y) } else { Cell::left(x, y) };
            if cell.vertices().iter().all(|&p| inside_hexagon(a, b, c, p)) {
                cells.insert(cell);
            }
        }
    }
    cells
}

/// The right-pointing hole ▷_k and its mirror image ◁_k in H_{n,b}.
/// Their vertical sides lie on x = n-k and x = n+k.
pub fn hole_cells(n: u32, b: u32, k: u32) -> ([Cell; 4], [Cell; 4]) {
    let (a, b, k) = (n as i32, b as i32, k as i32);
    let (x0, x1) = (a - k, a + k);
    let right = [Cell::right(x0, b - 2), Cell::right(x0, b), Cell::left(x0, b - 1), Cell::right(x0 + 1, b - 1)];
    let left = [Cell::left(x1 - 1, b - 2), Cell::left(x1 - 1, b), Cell::right(x1 - 1, b - 1), Cell::left(x1 - 2, b - 1)];
    (right, left)
}

pub fn realize_cells(spec: &ValidatedRegion) -> TriangularRegion {
    let s = *spec.spec();
    let (n, b) = (s.n, s.b);
    let axis_x = n as i32;
    let axis_y = b as i32;
    if let Family::PlainHexagon { c } = s.family {
        return TriangularRegion::new(hexagon_cells(n, b, c));
    }
    let hexagon = hexagon_cells(n, b, n);
    let holes = s.k.map(|k| hole_cells(n, b, k));
    let mut holey = hexagon.clone();
    if let Some((r, l)) = &holes {
        for c in r.iter().chain(l) {
            holey.remove(c);
        }
    }
    match s.family {
        Family::PlainHexagon { .. } => unreachable!(),
        Family::HoleyHexagon => TriangularRegion::new(holey),
        Family::VerticalHalf => {
            // the left half only ever contains ▷_k, even when k = 0 puts ◁_k
            // just across the axis
            let right_hole: BTreeSet<Cell> = holes.map(|(r, _)| r.into_iter().collect()).unwrap_or_default();
            let cells: BTreeSet<Cell> =
                hexagon.iter().filter(|c| c.x < axis_x && !right_hole.contains(c)).copied().collect();
            let free = cells
                .iter()
                .filter(|c| c.o == Orientation::Left && c.x == axis_x - 1)
                .filter(|c| !right_hole.contains(&Cell::right(axis_x, c.y)))
                .copied()
                .collect();
            TriangularRegion::new(cells)
                .with_free_boundary(axis_x, free)
                .expect("free cells are built on the axis")
        }
        Family::LowerHalf => {
            TriangularRegion::new(holey.into_iter().filter(|c| c.centroid_y() < axis_y).collect())
        }
        Family::WeightedUpperHalf => {
            let cells: BTreeSet<Cell> = holey.into_iter().filter(|c| c.centroid_y() >= axis_y).collect();
            let cut: Vec<(Cell, Cell)> = cells
                .iter()
                .filter(|c| c.o == Orientation::Left && c.centroid_y() == axis_y)
                .map(|c| (*c, Cell::right(c.x, c.y + 1)))
                .filter(|(_, up)| cells.contains(up))
                .collect();
            let mut region = TriangularRegion::new(cells);
            for (c, up) in cut {
                region = region.with_weight(c, up, 2).expect("cut pairs are adjacent");
            }
            region
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(validate_region(RegionSpec::holey(Family::HoleyHexagon, 7, 5, 4)).is_ok());
        assert!(matches!(
            validate_region(RegionSpec::holey(Family::HoleyHexagon, 6, 6, 3)),
            Err(Error::ParityViolation(_))
        ));
        assert!(matches!(
            validate_region(RegionSpec::holey(Family::HoleyHexagon, 4, 4, 6)),
            Err(Error::HoleOutOfRange(_))
        ));
    }

    #[test]
    fn k_zero_only_for_vertical() {
        assert!(validate_region(RegionSpec::holey(Family::VerticalHalf, 4, 4, 0)).is_ok());
        for fam in [Family::HoleyHexagon, Family::LowerHalf, Family::WeightedUpperHalf] {
            assert!(matches!(validate_region(RegionSpec::holey(fam, 4, 4, 0)), Err(Error::HoleOutOfRange(_))));
        }
    }

    #[test]
    fn unit_hexagon_has_six_cells() {
        let r = realize_cells(&validate_region(RegionSpec::plain(1, 1, 1)).unwrap());
        assert_eq!(r.len(), 6);
        assert_eq!(r.count_orientation(Orientation::Left), 3);
    }

    #[test]
    fn holes_are_mirror_images() {
        let (r, l) = hole_cells(6, 6, 4);
        for c in r {
            // reflection x -> 2n - x swaps orientation and shifts by the cell width
            let mirrored = match c.o {
                Orientation::Right => Cell::left(12 - c.x - 1, c.y),
                Orientation::Left => Cell::right(12 - c.x - 1, c.y),
            };
            assert!(l.contains(&mirrored), "{c:?}");
        }
    }

    #[test]
    fn holey_hexagon_fig_two_size() {
        // H_{6,6} has 2(36+36+36) cells, minus 8 for the holes
        let r = realize_cells(&validate_region(RegionSpec::holey(Family::HoleyHexagon, 6, 6, 4)).unwrap());
        assert_eq!(r.len(), 216 - 8);
        assert_eq!(r.count_orientation(Orientation::Left), r.count_orientation(Orientation::Right));
    }

    #[test]
    fn upper_half_weights_sit_on_the_cut() {
        let spec = validate_region(RegionSpec::holey(Family::WeightedUpperHalf, 4, 4, 2)).unwrap();
        let r = realize_cells(&spec);
        assert!(!r.weights().is_empty());
        for ((a, b), w) in r.weights() {
            assert_eq!(*w, 2);
            assert!(a.centroid_y().min(b.centroid_y()) == 4);
        }
    }
}
