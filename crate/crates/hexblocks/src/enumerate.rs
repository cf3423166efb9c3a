//! Exhaustive generation of candidate figures, used as the independent
//! oracle against the transfer counts. Generation recurses over column
//! shapes and offsets and knows nothing about the transfer rules;
//! membership is decided afterwards by the `classify` predicates.

use crate::classify::PolyominoClass;
use crate::hexgrid::{Cell, CellSet, Run};
use thiserror::Error;

/// Area past which generation refuses to run at all.
pub const HARD_AREA_LIMIT: u32 = 14;
/// Recommended ceiling; the transfer module covers larger areas.
pub const SOFT_AREA_LIMIT: u32 = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("area must be at least 1, got {0}")]
    InvalidArea(i64),
    #[error("area {0} exceeds the hard generation limit {HARD_AREA_LIMIT}")]
    AreaTooLarge(u32),
    #[error("class {0:?} has no finite gap bound, so its generation universe is infinite")]
    UnboundedClass(PolyominoClass),
}

/// One column of a partial figure: concrete runs, bottom-up.
type ColRuns = Vec<Run>;

fn shapes_by_cells(max_cells: u32, max_gap: u32) -> Vec<Vec<ColRuns>> {
    let mut by: Vec<Vec<ColRuns>> = vec![Vec::new(); max_cells as usize + 1];
    for c in 1..=max_cells {
        by[c as usize].push(vec![Run::new(0, c as i32)]);
        for i in 1..c {
            let j = c - i;
            for g in 1..=max_gap {
                by[c as usize].push(vec![
                    Run::new(0, i as i32),
                    Run::new((i + g) as i32, j as i32),
                ]);
            }
        }
    }
    by
}

struct Frame {
    candidates: Vec<ColRuns>,
    next: usize,
    cells: u32,
}

/// Deterministic stream of every candidate figure with the requested area:
/// at most two runs per column, gaps at most `max_gap`, consecutive columns
/// within the contact window (padded by one row of slack on each side).
///
/// Every member of the target classes, complete or incomplete, has an edge
/// shared between each pair of consecutive columns: complete figures are
/// connected, and in an incomplete figure each run of a pending column must
/// reach the column to its right while its first column reaches the body,
/// with any floating run sitting in the same column as a touching one. The
/// contact window is therefore exhaustive; the slack rows only add
/// non-members that the predicates reject (counts are checked to be
/// slack-independent in the tests).
pub struct FigureStream {
    shapes: Vec<Vec<ColRuns>>,
    columns: Vec<ColRuns>,
    stack: Vec<Frame>,
    area: u32,
    slack: i32,
    started: bool,
}

impl FigureStream {
    fn first_candidates(&self) -> Vec<ColRuns> {
        let mut out = Vec::new();
        for c in 1..=self.area {
            out.extend(self.shapes[c as usize].iter().cloned());
        }
        out
    }

    fn next_candidates(&self, remaining: u32) -> Vec<ColRuns> {
        let prev = self.columns.last().unwrap();
        let plo = prev[0].start;
        let phi = prev.last().unwrap().end();
        let mut out = Vec::new();
        for c in 1..=remaining {
            for sh in &self.shapes[c as usize] {
                let span = sh.last().unwrap().end() + 1;
                for d in (plo - span - self.slack)..=(phi + self.slack) {
                    out.push(sh.iter().map(|r| Run::new(r.start + d, r.len)).collect());
                }
            }
        }
        out
    }

    fn emit(&self) -> CellSet {
        CellSet::new(self.columns.iter().enumerate().flat_map(|(x, runs)| {
            runs.iter().flat_map(move |r| {
                (r.start..=r.end()).map(move |y| Cell::new(x as i32, y))
            })
        }))
    }
}

impl Iterator for FigureStream {
    type Item = CellSet;

    fn next(&mut self) -> Option<CellSet> {
        if !self.started {
            self.started = true;
            let candidates = self.first_candidates();
            self.stack.push(Frame { candidates, next: 0, cells: 0 });
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next >= frame.candidates.len() {
                self.stack.pop();
                self.columns.pop();
                if self.stack.is_empty() {
                    return None;
                }
                continue;
            }
            let cand = frame.candidates[frame.next].clone();
            frame.next += 1;
            let used = frame.cells + cand.iter().map(|r| r.len as u32).sum::<u32>();
            self.columns.push(cand);
            if used == self.area {
                let fig = self.emit();
                self.columns.pop();
                return Some(fig);
            }
            let candidates = self.next_candidates(self.area - used);
            self.stack.push(Frame { candidates, next: 0, cells: used });
        }
    }
}

/// All candidate figures with `area` cells at gap level `max_gap`, each
/// emitted exactly once in normalized form.
pub fn generate(area: u32, max_gap: u32) -> Result<FigureStream, EnumerateError> {
    generate_with_slack(area, max_gap, 1)
}

fn generate_with_slack(
    area: u32,
    max_gap: u32,
    slack: i32,
) -> Result<FigureStream, EnumerateError> {
    if area == 0 {
        return Err(EnumerateError::InvalidArea(area as i64));
    }
    if area > HARD_AREA_LIMIT {
        return Err(EnumerateError::AreaTooLarge(area));
    }
    Ok(FigureStream {
        shapes: shapes_by_cells(area, max_gap),
        columns: Vec::new(),
        stack: Vec::new(),
        area,
        slack,
        started: false,
    })
}

/// Exact count of the class members with `area` cells, by exhaustive
/// generation and filtering.
pub fn count_class(class: PolyominoClass, area: u32) -> Result<u64, EnumerateError> {
    let m = class.max_gap().ok_or(EnumerateError::UnboundedClass(class))?;
    Ok(generate(area, m)?.filter(|s| class.matches(s)).count() as u64)
}
