//! Set-valued tableaux of (skew) partition shape in two conventions, and
//! the pairs `(T, U)` of Lenart's Schur expansion.

mod lenart;

use serde_json::{json, Value};

use crate::composition::Partition;
use crate::error::{Error, Result};
use crate::fillings::EntrySet;
use crate::polynomial::BMonomial;

pub(crate) use lenart::lenart_shapes;
pub use lenart::{enumerate_lenart_pairs, enumerate_lenart_t, g_coefficient, LenartPair};

/// Reverse: rows weakly decrease, columns strictly decrease.
/// Increasing: rows weakly increase, columns strictly increase.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Convention {
    Reverse,
    Increasing,
}

impl Convention {
    fn tag(self) -> &'static str {
        match self {
            Convention::Reverse => "reverse",
            Convention::Increasing => "increasing",
        }
    }

    /// May `right` follow `left` in a row?
    fn row_ok(self, left: &EntrySet, right: &EntrySet) -> bool {
        match self {
            Convention::Reverse => left.min() >= right.anchor(),
            Convention::Increasing => left.anchor() <= right.min(),
        }
    }

    /// May `lower` sit directly below `upper`?
    fn column_ok(self, upper: &EntrySet, lower: &EntrySet) -> bool {
        match self {
            Convention::Reverse => upper.min() > lower.anchor(),
            Convention::Increasing => upper.anchor() < lower.min(),
        }
    }
}

/// Boxes of the skew shape `outer / inner` hold nonempty sets. Row `r`
/// (1-based) stores columns `inner_r + 1 ..= outer_r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetTableau {
    outer: Partition,
    inner: Partition,
    convention: Convention,
    rows: Vec<Vec<EntrySet>>,
}

impl SetTableau {
    /// Shape and semistandardness are both checked.
    pub fn new(outer: Partition, inner: Partition, convention: Convention, rows: Vec<Vec<EntrySet>>) -> Result<Self> {
        let t = Self::unchecked(outer, inner, convention, rows)?;
        if !t.is_semistandard() {
            return Err(Error::Validity(format!("not a semistandard {} tableau", convention.tag())));
        }
        Ok(t)
    }

    pub(crate) fn unchecked(
        outer: Partition,
        inner: Partition,
        convention: Convention,
        rows: Vec<Vec<EntrySet>>,
    ) -> Result<Self> {
        let (outer, inner) = (outer.trimmed(), inner.trimmed());
        if !outer.contains(&inner) {
            return Err(Error::Containment { inner: inner.to_string(), outer: outer.to_string() });
        }
        if rows.len() != outer.num_rows() {
            return Err(Error::Validity(format!("{} rows for shape {}", rows.len(), outer)));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != outer[r] - inner[r] {
                return Err(Error::Validity(format!("row {} has {} boxes", r + 1, row.len())));
            }
        }
        Ok(SetTableau { outer, inner, convention, rows })
    }

    /// Straight shape from rows of sets.
    pub fn from_sets(convention: Convention, rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(EntrySet::new).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(outer, Partition::empty(), convention, rows)
    }

    /// Straight single-valued tableau.
    pub fn from_rows(convention: Convention, rows: &[&[usize]]) -> Result<Self> {
        Self::from_sets(convention, rows.iter().map(|r| r.iter().map(|&v| vec![v]).collect()).collect())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn rows(&self) -> &[Vec<EntrySet>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// The box at 1-based `(row, col)` if it belongs to the skew shape.
    pub fn box_at(&self, row: usize, col: usize) -> Option<&EntrySet> {
        if row == 0 || row > self.rows.len() || col <= self.inner[row - 1] || col > self.outer[row - 1] {
            return None;
        }
        Some(&self.rows[row - 1][col - self.inner[row - 1] - 1])
    }

    /// Cells `(row, col)` with their sets, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), &EntrySet)> {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let i = self.inner[r];
            row.iter().enumerate().map(move |(k, s)| ((r + 1, i + k + 1), s))
        })
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().flatten().map(EntrySet::len).sum()
    }

    pub fn is_single_valued(&self) -> bool {
        self.rows.iter().flatten().all(|s| s.len() == 1)
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().map(EntrySet::anchor).max().unwrap_or(0)
    }

    /// The single-valued tableau of anchors.
    pub fn anchors(&self) -> SetTableau {
        SetTableau {
            rows: self.rows.iter().map(|r| r.iter().map(|s| EntrySet::single(s.anchor())).collect()).collect(),
            ..self.clone()
        }
    }

    /// `β^{|T| - #boxes} x^T` in `nvars` variables (grown if an entry exceeds
    /// `nvars`).
    pub fn weight(&self, nvars: usize) -> BMonomial {
        let mut exps = vec![0; nvars];
        for &v in self.rows.iter().flatten().flat_map(|s| s.values()) {
            if v > exps.len() {
                exps.resize(v, 0);
            }
            exps[v - 1] += 1;
        }
        BMonomial::new(self.num_entries() - self.num_boxes(), exps)
    }

    pub fn is_semistandard(&self) -> bool {
        self.boxes().all(|((r, c), b)| {
            let left = self.box_at(r, c.wrapping_sub(1)).is_none_or(|l| self.convention.row_ok(l, b));
            let up = self.box_at(r.wrapping_sub(1), c).is_none_or(|u| self.convention.column_ok(u, b));
            left && up
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "outer": self.outer.parts(),
            "inner": self.inner.parts(),
            "convention": self.convention.tag(),
            "rows": self.rows.iter().map(|r| r.iter().map(|s| s.values().to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("tableau JSON: {what}"));
        let ints = |v: &Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad("expected an array"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected a nonnegative integer")))
                .collect()
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
        let outer = match v.get("outer") {
            Some(o) => Partition::new(ints(o)?)?,
            None => Partition::new(rows.iter().map(Vec::len).collect())?,
        };
        let inner = match v.get("inner") {
            None | Some(Value::Null) => Partition::empty(),
            Some(i) => Partition::new(ints(i)?)?,
        };
        let convention = match v.get("convention").and_then(Value::as_str) {
            Some("reverse") => Convention::Reverse,
            Some("increasing") | None => Convention::Increasing,
            Some(other) => return Err(bad(&format!("unknown convention {other:?}"))),
        };
        Self::new(outer, inner, convention, rows)
    }
}

impl std::fmt::Display for SetTableau {
    /// One line per row; inner cells print as `.`, boxes as comma-joined sets.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = vec![".".into(); self.inner[r]];
            cells.extend(row.iter().map(|s| {
                let mut v: Vec<usize> = s.values().to_vec();
                if self.convention == Convention::Increasing {
                    v.reverse();
                }
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Nonempty subsets of `lo..=hi`, each as a decreasing vector.
fn subsets_of_interval(lo: usize, hi: usize) -> Vec<EntrySet> {
    if lo > hi {
        return Vec::new();
    }
    let width = hi - lo + 1;
    (1u64..(1 << width))
        .map(|mask| {
            let values = (0..width).filter(|k| mask >> k & 1 == 1).map(|k| lo + k).collect();
            EntrySet::new(values).expect("nonempty positive set")
        })
        .collect()
}

/// All semistandard set-valued tableaux of shape `outer / inner` with
/// entries in `1..=n`.
pub fn enumerate_set_tableaux(
    outer: &Partition,
    inner: &Partition,
    convention: Convention,
    n: usize,
    single_valued: bool,
) -> Result<Vec<SetTableau>> {
    let (outer, inner) = (outer.trimmed(), inner.trimmed());
    if !outer.contains(&inner) {
        return Err(Error::Containment { inner: inner.to_string(), outer: outer.to_string() });
    }
    let cells: Vec<(usize, usize)> =
        (1..=outer.num_rows()).flat_map(|r| (inner[r - 1] + 1..=outer[r - 1]).map(move |c| (r, c))).collect();
    let rows = (0..outer.num_rows()).map(|r| Vec::with_capacity(outer[r] - inner[r])).collect();
    let mut t = SetTableau { outer, inner, convention, rows };
    let mut out = Vec::new();
    fill(&mut t, &cells, 0, n, single_valued, &mut out);
    Ok(out)
}

fn fill(t: &mut SetTableau, cells: &[(usize, usize)], k: usize, n: usize, single: bool, out: &mut Vec<SetTableau>) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(t.clone());
        return;
    };
    let left = t.box_at(r, c.wrapping_sub(1));
    let up = t.box_at(r.wrapping_sub(1), c);
    let (lo, hi) = match t.convention {
        Convention::Reverse => {
            let hi = left.map_or(n, EntrySet::min).min(up.map_or(n + 1, |u| u.min()) - 1);
            (1, hi)
        }
        Convention::Increasing => {
            let lo = left.map_or(1, EntrySet::anchor).max(up.map_or(0, EntrySet::anchor) + 1);
            (lo, n)
        }
    };
    let choices = if single { (lo..=hi).map(EntrySet::single).collect() } else { subsets_of_interval(lo, hi) };
    for s in choices {
        t.rows[r - 1].push(s);
        fill(t, cells, k + 1, n, single, out);
        t.rows[r - 1].pop();
    }
}

/// `SetRT(λ)` with entries at most `n`.
pub fn enumerate_set_reverse_tableaux(lambda: &Partition, n: usize) -> Vec<SetTableau> {
    enumerate_set_tableaux(lambda, &Partition::empty(), Convention::Reverse, n, false).expect("straight shape")
}

/// `S(λ)`: increasing set-valued tableaux with entries at most `n`.
pub fn enumerate_set_ssyt(lambda: &Partition, n: usize) -> Vec<SetTableau> {
    enumerate_set_tableaux(lambda, &Partition::empty(), Convention::Increasing, n, false).expect("straight shape")
}

/// Ordinary semistandard Young tableaux of shape `λ`, entries at most `n`.
pub fn enumerate_ssyt(lambda: &Partition, n: usize) -> Vec<SetTableau> {
    enumerate_set_tableaux(lambda, &Partition::empty(), Convention::Increasing, n, true).expect("straight shape")
}

#[cfg(test)]
mod tests;
