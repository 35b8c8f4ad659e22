//! `ρ̂` between set-valued skyline fillings and set-valued reverse tableaux,
//! and uncrowding between set-valued tableaux and Lenart pairs.

use std::collections::BTreeMap;

use crate::composition::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::fillings::{is_semistandard_set_skyline, Basement, EntrySet, SetFilling};
use crate::tableaux::{Convention, LenartPair, SetTableau};

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validity(msg.into())
}

/// Sort each column's anchors decreasingly, then drop every free entry into
/// the unique box of its column whose anchor is larger and whose lower
/// neighbour's anchor is smaller.
pub fn rho(f: &SetFilling) -> Result<SetTableau> {
    let n = f.num_rows();
    if f.inner().is_some() || *f.basement() != Basement::identity(n) || !is_semistandard_set_skyline(f) {
        return Err(invalid("ρ̂ needs a semistandard set-valued filling with basement b_i = i"));
    }
    let lambda = f.shape().lambda().trimmed();
    let mut rows: Vec<Vec<EntrySet>> = vec![Vec::new(); lambda.num_rows()];
    for c in 1..=f.num_cols() {
        let mut anchors: Vec<usize> = (1..=n).filter_map(|r| f.box_at(r, c)).map(EntrySet::anchor).collect();
        anchors.sort_unstable_by(|a, b| b.cmp(a));
        let mut column: Vec<EntrySet> = anchors.iter().map(|&a| EntrySet::single(a)).collect();
        for e in (1..=n).filter_map(|r| f.box_at(r, c)).flat_map(|b| b.free().iter().copied()) {
            let k = (0..anchors.len())
                .find(|&k| anchors[k] > e && anchors.get(k + 1).is_none_or(|&below| below < e))
                .ok_or_else(|| invalid(format!("free entry {e} has no box in column {c}")))?;
            column[k].insert(e);
        }
        for (k, s) in column.into_iter().enumerate() {
            rows[k].push(s);
        }
    }
    SetTableau::new(lambda, Partition::empty(), Convention::Reverse, rows)
}

/// Inverse of [`rho`] into a diagram with `nrows` rows.
///
/// Columns are processed left to right and each column's anchors from the
/// top down; an anchor goes to the highest row that ends just left of the
/// column with a value at least as large (the basement in column 1). Free
/// entries then take the highest box allowed in their column.
pub fn rho_inv(t: &SetTableau, nrows: usize) -> Result<SetFilling> {
    if t.convention() != Convention::Reverse || t.inner().size() != 0 || !t.is_semistandard() {
        return Err(invalid("ρ̂⁻¹ needs a straight set-valued reverse tableau"));
    }
    if t.max_entry() > nrows {
        return Err(Error::Dimension(format!("entry {} in a diagram with {nrows} rows", t.max_entry())));
    }
    let mut grid: Vec<Vec<usize>> = vec![Vec::new(); nrows];
    let ncols = t.outer().num_cols();
    for c in 1..=ncols {
        let column: Vec<&EntrySet> = (1..=t.num_rows()).filter_map(|r| t.box_at(r, c)).collect();
        for s in &column {
            let v = s.anchor();
            let r = (0..nrows)
                .find(|&r| grid[r].len() == c - 1 && if c == 1 { r + 1 >= v } else { grid[r][c - 2] >= v })
                .ok_or_else(|| invalid(format!("no row accepts anchor {v} in column {c}")))?;
            grid[r].push(v);
        }
    }
    let shape = WeakComposition::new(grid.iter().map(Vec::len).collect());
    let mut rows: Vec<Vec<EntrySet>> = grid.iter().map(|r| r.iter().map(|&v| EntrySet::single(v)).collect()).collect();
    for c in 1..=ncols {
        for e in (1..=t.num_rows()).filter_map(|r| t.box_at(r, c)).flat_map(|b| b.free().iter().copied()) {
            let r = (0..nrows)
                .find(|&r| match grid[r].get(c - 1) {
                    Some(&anchor) => e < anchor && grid[r].get(c).is_none_or(|&right| e >= right),
                    None => false,
                })
                .ok_or_else(|| invalid(format!("free entry {e} has no box in column {c}")))?;
            rows[r][c - 1].insert(e);
        }
    }
    let f = SetFilling::new(shape, None, Basement::identity(nrows), rows)?;
    if !is_semistandard_set_skyline(&f) {
        return Err(invalid("tableau does not come from a semistandard filling"));
    }
    Ok(f)
}

/// Row insertion into single-valued rows `row..` (0-based): bump the
/// leftmost entry strictly greater than `x` and continue below. Returns the
/// cell `(row, col)` (0-based) that was created.
fn insert_rows(rows: &mut Vec<Vec<EntrySet>>, mut row: usize, mut x: usize) -> (usize, usize) {
    loop {
        if row == rows.len() {
            rows.push(Vec::new());
        }
        let r = &mut rows[row];
        match r.iter().position(|s| s.anchor() > x) {
            Some(k) => {
                let bumped = r[k].anchor();
                r[k] = EntrySet::single(x);
                x = bumped;
                row += 1;
            }
            None => {
                r.push(EntrySet::single(x));
                return (row, r.len() - 1);
            }
        }
    }
}

/// Classical row insertion of `x` starting at 1-based `row`; the rows from
/// `row` down must be single-valued. Returns the new tableau and the 1-based
/// cell that was added.
pub fn rsk_insert(u: &SetTableau, row: usize, x: usize) -> Result<(SetTableau, (usize, usize))> {
    if u.convention() != Convention::Increasing || u.inner().size() != 0 || row == 0 {
        return Err(invalid("row insertion needs a straight increasing tableau and a row ≥ 1"));
    }
    if u.rows().iter().skip(row - 1).flatten().any(|s| s.len() > 1) {
        return Err(invalid("rows receiving an insertion must be single-valued"));
    }
    let mut rows = u.rows().to_vec();
    if rows.len() < row - 1 {
        return Err(invalid(format!("row {row} is below the tableau")));
    }
    let (r, c) = insert_rows(&mut rows, row - 1, x);
    let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
    Ok((SetTableau::new(shape, Partition::empty(), Convention::Increasing, rows)?, (r + 1, c + 1)))
}

fn lenart_t(lambda: &Partition, mu: &Partition, cells: &BTreeMap<(usize, usize), usize>) -> Result<SetTableau> {
    let rows: Vec<Vec<EntrySet>> = (1..=mu.num_rows())
        .map(|r| (lambda[r - 1] + 1..=mu[r - 1]).map(|c| EntrySet::single(cells[&(r, c)])).collect())
        .collect();
    SetTableau::new(mu.clone(), lambda.clone(), Convention::Increasing, rows)
}

/// Uncrowd every box, bottom row first and right to left within a row: the
/// largest extra entry of a box in row `i` is row-inserted into row `i+1`,
/// and the new cell in row `k` records `k - i` in `T`.
pub fn uncrowd(f: &SetTableau) -> Result<LenartPair> {
    if f.convention() != Convention::Increasing || f.inner().size() != 0 || !f.is_semistandard() {
        return Err(invalid("uncrowd needs a straight set-valued increasing tableau"));
    }
    let lambda = f.outer().clone();
    let mut rows = f.rows().to_vec();
    let mut t_cells = BTreeMap::new();
    for i in (0..lambda.num_rows()).rev() {
        for c in (0..rows[i].len()).rev() {
            while rows[i][c].len() > 1 {
                let x = rows[i][c].remove_max();
                let (k, col) = insert_rows(&mut rows, i + 1, x);
                t_cells.insert((k + 1, col + 1), k - i);
            }
        }
    }
    let mu = Partition::new(rows.iter().map(Vec::len).collect())?;
    let u = SetTableau::new(mu.clone(), Partition::empty(), Convention::Increasing, rows)?;
    LenartPair::new(lenart_t(&lambda, &mu, &t_cells)?, u)
}

/// Inverse of [`uncrowd`]. With `T̃` holding `k - x` for an entry `x` of row
/// `k` of `T`, repeatedly take the smallest `T̃` value `i` sitting at a
/// corner of `U` (the lowest such corner on ties), reverse-bump from that
/// corner up to row `i + 1`, and add the value leaving row `i + 1` to the
/// box `b` of row `i` with `max b < x ≤ min(next box)`.
pub fn crowd(p: &LenartPair) -> Result<SetTableau> {
    if !p.is_valid() {
        return Err(invalid("crowd needs a valid Lenart pair"));
    }
    let lambda = p.lambda().clone();
    let mut rows = p.u.rows().to_vec();
    let mut origin: BTreeMap<(usize, usize), usize> = p.t.boxes().map(|((r, c), s)| ((r, c), r - s.anchor())).collect();
    while !origin.is_empty() {
        let corner = origin
            .iter()
            .filter(|(&(r, c), _)| rows[r - 1].len() == c && rows.get(r).is_none_or(|below| below.len() < c))
            .min_by_key(|(&(r, _), &i)| (i, std::cmp::Reverse(r)))
            .map(|(&cell, &i)| (cell, i))
            .ok_or_else(|| invalid("no removable cell of T"))?;
        let ((k, _), i) = corner;
        origin.remove(&corner.0);
        let mut x = rows[k - 1].pop().expect("corner box").anchor();
        if rows[k - 1].is_empty() {
            rows.pop();
        }
        for r in (i..k - 1).rev() {
            let row = &mut rows[r];
            let pos = row
                .iter()
                .rposition(|s| s.anchor() < x)
                .ok_or_else(|| invalid("reverse bump found no smaller entry"))?;
            let out = row[pos].anchor();
            row[pos] = EntrySet::single(x);
            x = out;
        }
        let row = &mut rows[i - 1];
        let b = (0..row.len())
            .find(|&b| row[b].anchor() < x && row.get(b + 1).is_none_or(|next| x <= next.min()))
            .ok_or_else(|| invalid(format!("no box of row {i} accepts {x}")))?;
        row[b].insert(x);
    }
    SetTableau::new(lambda, Partition::empty(), Convention::Increasing, rows)
}
