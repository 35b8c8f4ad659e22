//! Type A and Type B triples of a skyline diagram.
//!
//! For rows `i < j` with `γ_i ≥ γ_j` and `1 ≤ m ≤ γ_j` the Type A triple is
//!
//! ```text
//!   row i:  c a        a = (i, m), c = (i, m-1)
//!   row j:    b        b = (j, m)
//! ```
//!
//! and for `γ_i < γ_j`, `0 ≤ m ≤ γ_i`, the Type B triple is
//!
//! ```text
//!   row i:  b          b = (i, m)
//!   row j:  c a        c = (j, m), a = (j, m+1)
//! ```
//!
//! A triple is an inversion unless `a ≤ b ≤ c`.

use serde::Serialize;

use super::{Rank, SetFilling};

pub type Cell = (usize, usize);

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum TripleKind {
    TypeA,
    TypeB,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleVerdict {
    Inversion,
    Coinversion,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash, Serialize)]
pub struct TripleClass {
    pub kind: TripleKind,
    pub a: Cell,
    pub b: Cell,
    pub c: Cell,
    pub verdict: TripleVerdict,
}

/// Visit every triple `(kind, a, b, c)` of the diagram of `shape`.
pub fn for_each_triple(shape: &[usize], mut f: impl FnMut(TripleKind, Cell, Cell, Cell)) {
    let n = shape.len();
    for i in 1..=n {
        for j in i + 1..=n {
            let (gi, gj) = (shape[i - 1], shape[j - 1]);
            if gi >= gj {
                for m in 1..=gj {
                    f(TripleKind::TypeA, (i, m), (j, m), (i, m - 1));
                }
            } else {
                for m in 0..=gi {
                    f(TripleKind::TypeB, (j, m + 1), (i, m), (j, m));
                }
            }
        }
    }
}

pub(crate) fn verdict(a: Rank, b: Rank, c: Rank) -> TripleVerdict {
    if a <= b && b <= c {
        TripleVerdict::Coinversion
    } else {
        TripleVerdict::Inversion
    }
}

/// Classify every triple of anchor entries, basement cells included. Triples
/// touching a missing basement (composition tableaux) are skipped.
pub fn classify_triples(f: &SetFilling) -> Vec<TripleClass> {
    let mut out = Vec::new();
    for_each_triple(f.shape().parts(), |kind, a, b, c| {
        if let (Some(ra), Some(rb), Some(rc)) =
            (f.anchor_rank(a.0, a.1), f.anchor_rank(b.0, b.1), f.anchor_rank(c.0, c.1))
        {
            out.push(TripleClass { kind, a, b, c, verdict: verdict(ra, rb, rc) });
        }
    });
    out
}
