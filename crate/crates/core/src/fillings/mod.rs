//! Skyline diagrams with a basement column, ordinary and set-valued fillings,
//! the triple conditions, and exhaustive enumeration.
//!
//! Rows and columns are 1-based throughout the public API: column 0 is the
//! basement, row 1 is the top row.

mod composition_tableau;
mod enumerate;
mod render;
mod triples;

use std::cmp::Ordering;
use std::collections::HashSet;

use serde_json::{json, Value};

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::polynomial::BMonomial;

pub use composition_tableau::{enumerate_composition_tableaux, is_semistandard_composition_tableau};
pub use enumerate::{
    enumerate_anchor_fillings, enumerate_set_fillings, enumerate_set_skyline, for_each_anchor_filling,
    free_entry_options, AnchorGrid, FreeOption,
};
pub(crate) use triples::verdict;
pub use triples::{classify_triples, for_each_triple, TripleClass, TripleKind, TripleVerdict};

/// Comparison key of a cell value. Entries compare numerically; a large
/// basement cell exceeds every entry, and large basement cells decrease
/// from top to bottom.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Rank {
    Num(usize),
    Large { row: usize },
}

impl Ord for Rank {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rank::Num(a), Rank::Num(b)) => a.cmp(b),
            (Rank::Num(_), Rank::Large { .. }) => Ordering::Less,
            (Rank::Large { .. }, Rank::Num(_)) => Ordering::Greater,
            (Rank::Large { row: r }, Rank::Large { row: s }) => s.cmp(r),
        }
    }
}

impl PartialOrd for Rank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Basement {
    /// One concrete value per row.
    Values(Vec<usize>),
    /// Larger than every entry and strictly decreasing down the rows.
    Large,
    /// No basement column (composition tableaux).
    Absent,
}

impl Basement {
    /// `b_i = i`
    pub fn identity(rows: usize) -> Self {
        Basement::Values((1..=rows).collect())
    }

    /// `b_i = n - i + 1`
    pub fn reversed(rows: usize) -> Self {
        Basement::Values((1..=rows).rev().collect())
    }

    /// Rank of the basement value of 1-based row `row`.
    pub fn rank(&self, row: usize) -> Option<Rank> {
        match self {
            Basement::Values(v) => v.get(row - 1).map(|&b| Rank::Num(b)),
            Basement::Large => Some(Rank::Large { row }),
            Basement::Absent => None,
        }
    }
}

/// A nonempty set of positive integers, stored in decreasing order so the
/// anchor (maximum) comes first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EntrySet(Vec<usize>);

impl EntrySet {
    pub fn new(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        if values.is_empty() {
            return Err(Error::Validity("empty box".into()));
        }
        if values.contains(&0) {
            return Err(Error::Validity("entries must be positive".into()));
        }
        Ok(EntrySet(values))
    }

    pub fn single(v: usize) -> Self {
        assert!(v > 0);
        EntrySet(vec![v])
    }

    pub fn anchor(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// Every entry but the anchor, decreasing.
    pub fn free(&self) -> &[usize] {
        &self.0[1..]
    }

    /// All entries, decreasing.
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub(crate) fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search_by(|x| v.cmp(x)) {
            self.0.insert(pos, v);
        }
    }

    pub(crate) fn remove_max(&mut self) -> usize {
        self.0.remove(0)
    }
}

/// A (possibly skew) skyline diagram whose boxes hold nonempty sets.
///
/// Row `r` has boxes in columns `inner_r + 1 ..= shape_r`; columns
/// `0 ..= inner_r` belong to the basement.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetFilling {
    shape: WeakComposition,
    inner: Option<WeakComposition>,
    basement: Basement,
    rows: Vec<Vec<EntrySet>>,
}

impl SetFilling {
    pub fn new(
        shape: WeakComposition,
        inner: Option<WeakComposition>,
        basement: Basement,
        rows: Vec<Vec<EntrySet>>,
    ) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::Validity(format!("{} rows given for a shape with {} parts", rows.len(), shape.len())));
        }
        if let Basement::Values(v) = &basement {
            if v.len() != shape.len() {
                return Err(Error::Validity("basement length differs from the number of rows".into()));
            }
        }
        if let Some(inner) = &inner {
            if inner.len() != shape.len() || !inner.contained_in(&shape) {
                return Err(Error::Validity(format!("inner shape {inner} does not fit in {shape}")));
            }
        }
        let f = SetFilling { shape, inner, basement, rows };
        for r in 1..=f.num_rows() {
            let expected = f.shape[r - 1] - f.inner_len(r);
            if f.rows[r - 1].len() != expected {
                return Err(Error::Validity(format!(
                    "row {r} has {} boxes, shape requires {expected}",
                    f.rows[r - 1].len()
                )));
            }
        }
        Ok(f)
    }

    /// Single-valued filling with basement `b_i = i` from rows of values.
    pub fn ordinary(rows: &[&[usize]]) -> Self {
        Self::from_sets(rows.iter().map(|r| r.iter().map(|&v| vec![v]).collect()).collect())
    }

    /// Set-valued filling with basement `b_i = i`.
    pub fn from_sets(rows: Vec<Vec<Vec<usize>>>) -> Self {
        let shape = WeakComposition::new(rows.iter().map(|r| r.len()).collect());
        let n = rows.len();
        let rows = rows.into_iter().map(|r| r.into_iter().map(|s| EntrySet::new(s).unwrap()).collect()).collect();
        SetFilling::new(shape, None, Basement::identity(n), rows).unwrap()
    }

    pub fn with_basement(mut self, basement: Basement) -> Result<Self> {
        if let Basement::Values(v) = &basement {
            if v.len() != self.num_rows() {
                return Err(Error::Validity("basement length differs from the number of rows".into()));
            }
        }
        self.basement = basement;
        Ok(self)
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn inner(&self) -> Option<&WeakComposition> {
        self.inner.as_ref()
    }

    pub fn basement(&self) -> &Basement {
        &self.basement
    }

    pub fn rows(&self) -> &[Vec<EntrySet>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.shape.len()
    }

    pub fn num_cols(&self) -> usize {
        self.shape.max_part()
    }

    fn inner_len(&self, row: usize) -> usize {
        self.inner.as_ref().map_or(0, |i| i[row - 1])
    }

    /// The box at 1-based `(row, col)`, if that cell is a box.
    pub fn box_at(&self, row: usize, col: usize) -> Option<&EntrySet> {
        if row == 0 || row > self.num_rows() || col == 0 {
            return None;
        }
        let inner = self.inner_len(row);
        if col <= inner || col > self.shape[row - 1] {
            return None;
        }
        Some(&self.rows[row - 1][col - inner - 1])
    }

    /// Rank of the anchor (or basement value) at `(row, col)`.
    pub fn anchor_rank(&self, row: usize, col: usize) -> Option<Rank> {
        if row == 0 || row > self.num_rows() || col > self.shape[row - 1] {
            return None;
        }
        if col <= self.inner_len(row) {
            return self.basement.rank(row);
        }
        self.box_at(row, col).map(|b| Rank::Num(b.anchor()))
    }

    /// Rank of the smallest value at `(row, col)`; basement cells are
    /// single-valued.
    fn min_rank(&self, row: usize, col: usize) -> Option<Rank> {
        if col <= self.inner_len(row) {
            return self.basement.rank(row);
        }
        self.box_at(row, col).map(|b| Rank::Num(b.min()))
    }

    /// Cells `(row, col)` holding boxes, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), &EntrySet)> {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let inner = self.inner_len(r + 1);
            row.iter().enumerate().map(move |(k, s)| ((r + 1, inner + k + 1), s))
        })
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `|F|`: the total number of entries.
    pub fn num_entries(&self) -> usize {
        self.rows.iter().flatten().map(EntrySet::len).sum()
    }

    pub fn is_single_valued(&self) -> bool {
        self.rows.iter().flatten().all(|s| s.len() == 1)
    }

    /// The single-valued filling formed by the anchors.
    pub fn anchors(&self) -> SetFilling {
        SetFilling {
            shape: self.shape.clone(),
            inner: self.inner.clone(),
            basement: self.basement.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|s| EntrySet::single(s.anchor())).collect()).collect(),
        }
    }

    /// `β^{|F| - #boxes} x^F`, with one variable per row.
    pub fn content_monomial(&self) -> BMonomial {
        let mut exps = vec![0; self.num_rows()];
        for v in self.rows.iter().flatten().flat_map(|s| s.values()) {
            if *v > exps.len() {
                exps.resize(*v, 0);
            }
            exps[v - 1] += 1;
        }
        BMonomial::new(self.num_entries() - self.num_boxes(), exps)
    }

    fn columns_distinct(&self) -> bool {
        (1..=self.num_cols()).all(|c| {
            let mut seen = HashSet::new();
            (1..=self.num_rows()).filter_map(|r| self.box_at(r, c)).flat_map(|b| b.values()).all(|&v| seen.insert(v))
        })
    }

    /// Rows weakly decreasing as sets (`A ≥ B` iff `min A ≥ max B`),
    /// including the step from the basement when there is one.
    fn rows_decreasing(&self) -> bool {
        self.boxes().all(|((r, c), b)| {
            let first_col = if matches!(self.basement, Basement::Absent) { 1 } else { 0 };
            if c == first_col || c - 1 < first_col {
                return true;
            }
            match self.min_rank(r, c - 1) {
                Some(left) => left >= Rank::Num(b.anchor()),
                None => true,
            }
        })
    }

    fn anchor_triples_are_inversions(&self, with_basement: bool) -> bool {
        let mut ok = true;
        for_each_triple(self.shape.parts(), |_, a, b, c| {
            if !ok || (!with_basement && (a.1 == 0 || b.1 == 0 || c.1 == 0)) {
                return;
            }
            let (a, b, c) = (self.anchor_rank(a.0, a.1), self.anchor_rank(b.0, b.1), self.anchor_rank(c.0, c.1));
            if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                if a <= b && b <= c {
                    ok = false;
                }
            }
        });
        ok
    }

    /// The highest row where `v` could sit as a free entry of column `col`:
    /// below that box's anchor and at least the anchor to its right.
    pub(crate) fn highest_free_row(&self, col: usize, v: usize) -> Option<usize> {
        (1..=self.num_rows()).find(|&r| {
            let Some(b) = self.box_at(r, col) else { return false };
            if v >= b.anchor() {
                return false;
            }
            match self.box_at(r, col + 1) {
                Some(right) => v >= right.anchor(),
                None => true,
            }
        })
    }

    fn free_entries_highest(&self) -> bool {
        self.boxes().all(|((r, c), b)| b.free().iter().all(|&v| self.highest_free_row(c, v) == Some(r)))
    }

    pub fn to_json(&self) -> Value {
        let basement = match &self.basement {
            Basement::Values(v) => json!(v),
            Basement::Large => json!("large"),
            Basement::Absent => Value::Null,
        };
        json!({
            "shape": self.shape.parts(),
            "inner": self.inner.as_ref().map(|i| i.parts().to_vec()),
            "basement": basement,
            "rows": self.rows.iter().map(|r| r.iter().map(|s| s.values().to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("filling JSON: {what}"));
        let ints = |v: &Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad("expected an array"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected a nonnegative integer")))
                .collect()
        };
        let shape = WeakComposition::new(ints(v.get("shape").ok_or_else(|| bad("missing shape"))?)?);
        let inner = match v.get("inner") {
            None | Some(Value::Null) => None,
            Some(i) => Some(WeakComposition::new(ints(i)?)),
        };
        let basement = match v.get("basement") {
            None => Basement::identity(shape.len()),
            Some(Value::Null) => Basement::Absent,
            Some(Value::String(s)) if s == "large" => Basement::Large,
            Some(b) => Basement::Values(ints(b)?),
        };
        let rows = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing rows"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row must be an array"))?
                    .iter()
                    .map(|b| EntrySet::new(ints(b)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetFilling::new(shape, inner, basement, rows)
    }
}

/// (M1)–(M3): a single-valued filling with distinct column entries,
/// weakly decreasing rows (basement included) and only inversion triples.
pub fn is_semistandard_skyline(f: &SetFilling) -> bool {
    f.is_single_valued() && f.columns_distinct() && f.rows_decreasing() && f.anchor_triples_are_inversions(true)
}

/// (S1)–(S4) for set-valued fillings. The free-entry rule is: each free
/// entry `e` of column `c` sits in the highest row `r` with
/// `e < anchor(r, c)` and `e ≥ anchor(r, c + 1)` (when that box exists).
pub fn is_semistandard_set_skyline(f: &SetFilling) -> bool {
    f.columns_distinct() && f.rows_decreasing() && f.anchor_triples_are_inversions(true) && f.free_entries_highest()
}

#[cfg(test)]
mod tests;
