//! Hexagonal lattice geometry in sheared integer coordinates.
//!
//! A cell `(x, y)` lies in column `x`; the physical height of its centre is
//! `y + x/2` cell units. The six neighbours of `(x, y)` are `(x, y±1)`,
//! `(x+1, y)`, `(x+1, y-1)`, `(x-1, y)` and `(x-1, y+1)`. Consequently a
//! cell `(x+1, w)` touches `(x, w)` and `(x, w+1)`, and the cells of column
//! `x+1` adjacent to a run spanning rows `[y0, y1]` of column `x` occupy
//! exactly the rows `[y0-1, y1]` (the run's *shadow*).

use std::fmt;

/// One hexagonal cell, addressed by column `x` and sheared row `y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// The six lattice neighbours.
    pub fn neighbors(self) -> [Cell; 6] {
        let Cell { x, y } = self;
        [
            Cell::new(x, y + 1),
            Cell::new(x, y - 1),
            Cell::new(x + 1, y),
            Cell::new(x + 1, y - 1),
            Cell::new(x - 1, y),
            Cell::new(x - 1, y + 1),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// A maximal vertical run of cells within one column: rows
/// `start, start+1, ..., start+len-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Run {
    pub start: i32,
    pub len: i32,
}

impl Run {
    pub fn new(start: i32, len: i32) -> Self {
        debug_assert!(len >= 1);
        Run { start, len }
    }

    pub fn end(self) -> i32 {
        self.start + self.len - 1
    }

    /// Does a run in column `x+1` share an edge with `self` in column `x`?
    ///
    /// True iff `right` meets the shadow `[start-1, end]` of `self`.
    pub fn touches_right(self, right: Run) -> bool {
        right.end() >= self.start - 1 && right.start <= self.end()
    }

    /// Number of shared edges between `self` (column `x`) and `right`
    /// (column `x+1`).
    pub fn shared_edges(self, right: Run) -> i64 {
        let overlap = |a0: i32, a1: i32, b0: i32, b1: i32| -> i64 {
            (a1.min(b1) as i64 - a0.max(b0) as i64 + 1).max(0)
        };
        // (x, w) pairs with (x+1, w), and with (x+1, w-1)
        overlap(self.start, self.end(), right.start, right.end())
            + overlap(self.start - 1, self.end() - 1, right.start, right.end())
    }
}

/// All runs of one column, bottom-up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Column {
    pub x: i32,
    pub runs: Vec<Run>,
}

impl Column {
    /// Lowest occupied row.
    pub fn low(&self) -> i32 {
        self.runs[0].start
    }

    /// Highest occupied row.
    pub fn high(&self) -> i32 {
        self.runs.last().unwrap().end()
    }

    /// Number of cells.
    pub fn cells(&self) -> i32 {
        self.runs.iter().map(|r| r.len).sum()
    }

    /// Vertical span including gap rows.
    pub fn height(&self) -> i32 {
        self.high() - self.low() + 1
    }

    /// Gap sizes between consecutive runs.
    pub fn gaps(&self) -> impl Iterator<Item = i32> + '_ {
        self.runs
            .windows(2)
            .map(|w| w[1].start - w[0].end() - 1)
    }
}

/// The shape of a single column up to translation: a lower run, an optional
/// gap, and an upper run. `gap == 0` iff `upper == 0` (a gap-free column is
/// a single lower run).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColumnShape {
    pub lower: u32,
    pub gap: u32,
    pub upper: u32,
}

impl ColumnShape {
    pub fn new(lower: u32, gap: u32, upper: u32) -> Self {
        assert!(lower >= 1, "lower run must be nonempty");
        assert!(
            (gap == 0) == (upper == 0),
            "gap and upper run must be present together"
        );
        ColumnShape { lower, gap, upper }
    }

    pub fn gap_free(cells: u32) -> Self {
        ColumnShape::new(cells, 0, 0)
    }

    pub fn has_gap(self) -> bool {
        self.gap > 0
    }

    pub fn cells(self) -> u32 {
        self.lower + self.upper
    }

    /// Cells plus gap cells: the full vertical span.
    pub fn height(self) -> u32 {
        self.lower + self.gap + self.upper
    }

    /// Concrete runs with the lower run starting at `base`.
    pub fn runs(self, base: i32) -> Vec<Run> {
        let mut rs = vec![Run::new(base, self.lower as i32)];
        if self.gap > 0 {
            rs.push(Run::new(
                base + (self.lower + self.gap) as i32,
                self.upper as i32,
            ));
        }
        rs
    }
}

impl fmt::Display for ColumnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.lower, self.gap, self.upper)
    }
}

/// A finite set of cells stored normalized: the minimum `x` is 0 and the
/// lowest cell of column 0 has `y = 0`, so translates of the same figure
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CellSet {
    cells: Vec<Cell>,
}

impl CellSet {
    /// Builds a normalized set; duplicates are merged.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        if let Some(&first) = cells.first() {
            let dx = first.x;
            let dy = cells
                .iter()
                .filter(|c| c.x == dx)
                .map(|c| c.y)
                .min()
                .unwrap();
            if dx != 0 || dy != 0 {
                for c in &mut cells {
                    c.x -= dx;
                    c.y -= dy;
                }
            }
        }
        CellSet { cells }
    }

    pub fn from_coords(coords: impl IntoIterator<Item = (i32, i32)>) -> Self {
        CellSet::new(coords.into_iter().map(|(x, y)| Cell::new(x, y)))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Cells in lexicographic `(x, y)` order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Column decomposition, left to right, runs bottom-up.
    pub fn columns(&self) -> Vec<Column> {
        let mut out: Vec<Column> = Vec::new();
        for &c in &self.cells {
            match out.last_mut() {
                Some(col) if col.x == c.x => {
                    let last = col.runs.last_mut().unwrap();
                    if c.y == last.end() + 1 {
                        last.len += 1;
                    } else {
                        col.runs.push(Run::new(c.y, 1));
                    }
                }
                _ => out.push(Column {
                    x: c.x,
                    runs: vec![Run::new(c.y, 1)],
                }),
            }
        }
        out
    }

    /// Edge-connectivity of the whole set; the empty set counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.cells.is_empty() {
            return true;
        }
        // index-based flood fill over the sorted cell list
        let mut seen = vec![false; self.cells.len()];
        let mut stack = vec![0usize];
        let mut reached = 1;
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for nb in self.cells[i].neighbors() {
                if let Ok(j) = self.cells.binary_search(&nb) {
                    if !seen[j] {
                        seen[j] = true;
                        reached += 1;
                        stack.push(j);
                    }
                }
            }
        }
        reached == self.cells.len()
    }

    /// Reflection about the vertical axis: `(x, y) -> (-x, x + y)`, then
    /// normalization. Preserves the physical height `y + x/2` of every cell
    /// while negating `x`, so adjacency is preserved and column order is
    /// reversed; within a column it is a plain shift, so run order survives.
    pub fn reflect(&self) -> CellSet {
        CellSet::new(self.cells.iter().map(|c| Cell::new(-c.x, c.x + c.y)))
    }

    /// One-line serialization: sorted `x,y` pairs joined by `;`.
    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        parts.join(";")
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn neighbor_set_matches_convention() {
        let n: HashSet<Cell> = Cell::new(0, 0).neighbors().into_iter().collect();
        let want: HashSet<Cell> = [(0, 1), (0, -1), (1, 0), (1, -1), (-1, 0), (-1, 1)]
            .into_iter()
            .map(|(x, y)| Cell::new(x, y))
            .collect();
        assert_eq!(n, want);
        assert!(n.contains(&Cell::new(1, 0)) && n.contains(&Cell::new(1, -1)));
    }

    #[test]
    fn adjacency_symmetric_and_six_regular_in_window() {
        for x in -50..50 {
            for y in -50..50 {
                let c = Cell::new(x, y);
                let nbs = c.neighbors();
                assert_eq!(nbs.iter().collect::<HashSet<_>>().len(), 6);
                for nb in nbs {
                    assert!(nb.neighbors().contains(&c), "{c} <-> {nb}");
                }
            }
        }
    }

    #[test]
    fn columns_of_small_sets() {
        let single = CellSet::from_coords([(0, 0)]);
        let cols = single.columns();
        assert_eq!(cols.len(), 1);
        assert_eq!(cols[0].runs, vec![Run::new(0, 1)]);

        let split = CellSet::from_coords([(0, 0), (0, 2)]);
        let cols = split.columns();
        assert_eq!(cols.len(), 1);
        assert_eq!(cols[0].runs, vec![Run::new(0, 1), Run::new(2, 1)]);
        assert_eq!(cols[0].gaps().collect::<Vec<_>>(), vec![1]);

        let two = CellSet::from_coords([(0, 0), (1, 0), (1, 1)]);
        let cols = two.columns();
        assert_eq!(cols.len(), 2);
        assert_eq!(cols[0].cells(), 1);
        assert_eq!(cols[1].cells(), 2);
    }

    #[test]
    fn connectivity_cases() {
        assert!(CellSet::from_coords([(0, 0), (1, 0)]).is_connected());
        assert!(!CellSet::from_coords([(0, 0), (0, 2)]).is_connected());
        assert!(CellSet::from_coords([(0, 0), (1, -1)]).is_connected());
    }

    #[test]
    fn offset_count_law() {
        // contiguous runs of heights k and h: exactly k+h offsets touch
        for k in 1..=12 {
            for h in 1..=12 {
                let a = Run::new(0, k);
                let touching = (-40..40)
                    .filter(|&d| a.shared_edges(Run::new(d, h)) >= 1)
                    .count() as i32;
                assert_eq!(touching, k + h, "k={k} h={h}");
            }
        }
        // far apart: no contact
        assert_eq!(Run::new(0, 2).shared_edges(Run::new(10, 3)), 0);
    }

    #[test]
    fn column_shape_invariants() {
        let s = ColumnShape::new(2, 1, 3);
        assert_eq!(s.cells(), 5);
        assert_eq!(s.height(), 6);
        assert_eq!(s.runs(0), vec![Run::new(0, 2), Run::new(3, 3)]);
        assert_eq!(ColumnShape::gap_free(4).runs(1), vec![Run::new(1, 4)]);
    }

    fn arb_cells() -> impl Strategy<Value = Vec<(i32, i32)>> {
        proptest::collection::vec((-6..6i32, -6..6i32), 1..12)
    }

    proptest! {
        #[test]
        fn normalization_idempotent(coords in arb_cells()) {
            let s = CellSet::from_coords(coords);
            let again = CellSet::new(s.cells().iter().copied());
            prop_assert_eq!(&s, &again);
            prop_assert_eq!(s.cells().first().map(|c| c.x), Some(0));
        }

        #[test]
        fn translates_normalize_identically(coords in arb_cells(), dx in -5..5i32, dy in -5..5i32) {
            let s = CellSet::from_coords(coords.clone());
            let t = CellSet::from_coords(coords.into_iter().map(|(x, y)| (x + dx, y + dy)));
            prop_assert_eq!(s, t);
        }

        #[test]
        fn reflect_is_involution(coords in arb_cells()) {
            let s = CellSet::from_coords(coords);
            prop_assert_eq!(s.reflect().reflect(), s);
        }

        #[test]
        fn reflect_preserves_structure(coords in arb_cells()) {
            let s = CellSet::from_coords(coords);
            let r = s.reflect();
            prop_assert_eq!(s.len(), r.len());
            prop_assert_eq!(s.is_connected(), r.is_connected());
            // column order reverses, per-column run-length lists survive
            let mut cols: Vec<Vec<i32>> = s.columns().iter()
                .map(|c| c.runs.iter().map(|r| r.len).collect()).collect();
            cols.reverse();
            let rcols: Vec<Vec<i32>> = r.columns().iter()
                .map(|c| c.runs.iter().map(|r| r.len).collect()).collect();
            prop_assert_eq!(cols, rcols);
        }
    }
}
