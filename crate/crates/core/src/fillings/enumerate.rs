//! Exhaustive enumeration: anchor fillings by column-major backtracking,
//! then every subset of the legal free-entry placements.

use super::triples::{for_each_triple, verdict, Cell, TripleVerdict};
use super::{Basement, EntrySet, Rank, SetFilling};
use crate::composition::WeakComposition;

/// An ordinary filling under construction or completed: one anchor per box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorGrid {
    shape: WeakComposition,
    basement: Basement,
    rows: Vec<Vec<usize>>,
}

/// A value that may be added as a free entry. Its box is forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeOption {
    pub row: usize,
    pub col: usize,
    pub value: usize,
}

impl AnchorGrid {
    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn basement(&self) -> &Basement {
        &self.basement
    }

    /// Anchors row by row.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Anchor of box `(row, col)`, 1-based, `col ≥ 1`.
    pub fn value(&self, row: usize, col: usize) -> Option<usize> {
        if col == 0 {
            return None;
        }
        self.rows.get(row.wrapping_sub(1))?.get(col - 1).copied()
    }

    fn rank(&self, row: usize, col: usize) -> Option<Rank> {
        if col == 0 {
            self.basement.rank(row)
        } else {
            self.value(row, col).map(Rank::Num)
        }
    }

    /// Exponent vector of the anchors, padded to at least `nvars`.
    pub fn exponents(&self, nvars: usize) -> Vec<usize> {
        let mut exps = vec![0; nvars];
        for &v in self.rows.iter().flatten() {
            if v > exps.len() {
                exps.resize(v, 0);
            }
            exps[v - 1] += 1;
        }
        exps
    }

    /// The filling with the chosen free entries added.
    pub fn to_filling(&self, free: &[FreeOption]) -> SetFilling {
        let mut rows: Vec<Vec<EntrySet>> =
            self.rows.iter().map(|r| r.iter().map(|&v| EntrySet::single(v)).collect()).collect();
        for o in free {
            rows[o.row - 1][o.col - 1].insert(o.value);
        }
        SetFilling::new(self.shape.clone(), None, self.basement.clone(), rows).expect("grid dimensions match the shape")
    }
}

/// Every legal free-entry placement for the anchors of `grid` with values at
/// most `max_entry`. Placements are independent: any subset of the result
/// gives a valid set-valued filling.
pub fn free_entry_options(grid: &AnchorGrid, max_entry: usize) -> Vec<FreeOption> {
    let mut out = Vec::new();
    let n = grid.rows.len();
    for col in 1..=grid.shape.max_part() {
        let column: Vec<usize> = (1..=n).filter_map(|r| grid.value(r, col)).collect();
        for value in 1..=max_entry {
            if column.contains(&value) {
                continue;
            }
            let row = (1..=n).find(|&r| match grid.value(r, col) {
                Some(anchor) if value < anchor => grid.value(r, col + 1).is_none_or(|right| value >= right),
                _ => false,
            });
            if let Some(row) = row {
                out.push(FreeOption { row, col, value });
            }
        }
    }
    out
}

struct Search<F> {
    max_entry: usize,
    first_column_increasing: bool,
    cells: Vec<Cell>,
    /// Triples to check once the cell with the same index is filled.
    checks: Vec<Vec<(Cell, Cell, Cell)>>,
    grid: AnchorGrid,
    visit: F,
}

impl<F: FnMut(&AnchorGrid)> Search<F> {
    fn run(&mut self, k: usize) {
        if k == self.cells.len() {
            (self.visit)(&self.grid);
            return;
        }
        let (r, c) = self.cells[k];
        let bound = match self.grid.rank(r, c - 1) {
            Some(Rank::Num(b)) => b.min(self.max_entry),
            _ => self.max_entry,
        };
        let lower = if self.first_column_increasing && c == 1 {
            (1..r).rev().find_map(|q| self.grid.value(q, 1)).unwrap_or(0) + 1
        } else {
            1
        };
        for v in lower..=bound {
            if (1..r).any(|q| self.grid.value(q, c) == Some(v)) {
                continue;
            }
            self.grid.rows[r - 1].push(v);
            let ok = self.checks[k].iter().all(|&(a, b, cc)| {
                match (self.grid.rank(a.0, a.1), self.grid.rank(b.0, b.1), self.grid.rank(cc.0, cc.1)) {
                    (Some(a), Some(b), Some(cc)) => verdict(a, b, cc) == TripleVerdict::Inversion,
                    _ => true,
                }
            });
            if ok {
                self.run(k + 1);
            }
            self.grid.rows[r - 1].pop();
        }
    }
}

fn search<F: FnMut(&AnchorGrid)>(
    shape: &WeakComposition,
    basement: &Basement,
    max_entry: usize,
    first_column_increasing: bool,
    visit: F,
) {
    let parts = shape.parts();
    let n = parts.len();
    let cells: Vec<Cell> =
        (1..=shape.max_part()).flat_map(|c| (1..=n).filter(move |&r| parts[r - 1] >= c).map(move |r| (r, c))).collect();
    let mut checks = vec![Vec::new(); cells.len()];
    let index = |cell: Cell| cells.iter().position(|&x| x == cell).expect("cell of the diagram");
    for_each_triple(parts, |_, a, b, c| {
        // the cell filled last: b for Type A (column m, lower row), a for Type B
        let last = [a, b, c].into_iter().max_by_key(|&(r, col)| (col, r)).unwrap();
        checks[index(last)].push((a, b, c));
    });
    let grid = AnchorGrid { shape: shape.clone(), basement: basement.clone(), rows: vec![Vec::new(); n] };
    Search { max_entry, first_column_increasing, cells, checks, grid, visit }.run(0);
}

/// Visit every ordinary semistandard filling of `shape` over `basement` with
/// entries at most `max_entry`.
pub fn for_each_anchor_filling(
    shape: &WeakComposition,
    basement: &Basement,
    max_entry: usize,
    visit: impl FnMut(&AnchorGrid),
) {
    let increasing = matches!(basement, Basement::Absent);
    search(shape, basement, max_entry, increasing, visit);
}

pub fn enumerate_anchor_fillings(shape: &WeakComposition, basement: &Basement, max_entry: usize) -> Vec<AnchorGrid> {
    let mut out = Vec::new();
    for_each_anchor_filling(shape, basement, max_entry, |g| out.push(g.clone()));
    out
}

/// All semistandard set-valued fillings of `shape` over `basement` with
/// entries at most `max_entry`.
pub fn enumerate_set_fillings(shape: &WeakComposition, basement: &Basement, max_entry: usize) -> Vec<SetFilling> {
    let mut out = Vec::new();
    for_each_anchor_filling(shape, basement, max_entry, |g| {
        let options = free_entry_options(g, max_entry);
        for_each_subset(&options, &mut Vec::new(), &mut |chosen| out.push(g.to_filling(chosen)));
    });
    out
}

pub(crate) fn for_each_subset<T: Copy>(items: &[T], chosen: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
    match items.split_first() {
        None => f(chosen),
        Some((&first, rest)) => {
            for_each_subset(rest, chosen, f);
            chosen.push(first);
            for_each_subset(rest, chosen, f);
            chosen.pop();
        }
    }
}

/// `SetSkyFill(γ)`: basement `b_i = i`.
pub fn enumerate_set_skyline(gamma: &WeakComposition) -> Vec<SetFilling> {
    enumerate_set_fillings(gamma, &Basement::identity(gamma.len()), gamma.len())
}
