//! Pairs `(T, U)`: `T` a row- and column-strict filling of `μ/λ` whose row
//! `i` uses only `1..=i-1`, `U` a semistandard tableau of shape `μ`.

use serde_json::{json, Value};

use super::{enumerate_ssyt, Convention, SetTableau};
use crate::composition::Partition;
use crate::error::{Error, Result};
use crate::fillings::EntrySet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LenartPair {
    pub t: SetTableau,
    pub u: SetTableau,
}

impl LenartPair {
    pub fn new(t: SetTableau, u: SetTableau) -> Result<Self> {
        let p = LenartPair { t, u };
        if !p.is_valid() {
            return Err(Error::Validity("not a Lenart pair".into()));
        }
        Ok(p)
    }

    /// `λ`, the inner shape of `T`.
    pub fn lambda(&self) -> &Partition {
        self.t.inner()
    }

    /// `μ`, the common outer shape.
    pub fn mu(&self) -> &Partition {
        self.u.outer()
    }

    pub fn is_valid(&self) -> bool {
        let t = &self.t;
        let u = &self.u;
        t.outer() == u.outer()
            && u.inner().size() == 0
            && u.convention() == Convention::Increasing
            && u.is_single_valued()
            && u.is_semistandard()
            && t.is_single_valued()
            && t.boxes().all(|((r, c), b)| {
                let v = b.anchor();
                v < r
                    && t.box_at(r, c.wrapping_sub(1)).is_none_or(|l| l.anchor() < v)
                    && t.box_at(r.wrapping_sub(1), c).is_none_or(|up| up.anchor() < v)
            })
    }

    pub fn to_json(&self) -> Value {
        json!({ "t": self.t.to_json(), "u": self.u.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("pair JSON: missing {k:?}")));
        Self::new(SetTableau::from_json(get("t")?)?, SetTableau::from_json(get("u")?)?)
    }
}

/// Every valid `T` of shape `μ/λ`.
pub fn enumerate_lenart_t(lambda: &Partition, mu: &Partition) -> Result<Vec<SetTableau>> {
    let (lambda, mu) = (lambda.trimmed(), mu.trimmed());
    if !mu.contains(&lambda) {
        return Err(Error::Containment { inner: lambda.to_string(), outer: mu.to_string() });
    }
    let rows = (0..mu.num_rows()).map(|r| Vec::with_capacity(mu[r] - lambda[r])).collect();
    let cells: Vec<(usize, usize)> =
        (1..=mu.num_rows()).flat_map(|r| (lambda[r - 1] + 1..=mu[r - 1]).map(move |c| (r, c))).collect();
    let mut t = SetTableau { outer: mu, inner: lambda, convention: Convention::Increasing, rows };
    let mut out = Vec::new();
    fill_strict(&mut t, &cells, 0, &mut out);
    Ok(out)
}

fn fill_strict(t: &mut SetTableau, cells: &[(usize, usize)], k: usize, out: &mut Vec<SetTableau>) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(t.clone());
        return;
    };
    let lo = t
        .box_at(r, c.wrapping_sub(1))
        .map_or(0, EntrySet::anchor)
        .max(t.box_at(r.wrapping_sub(1), c).map_or(0, EntrySet::anchor))
        + 1;
    for v in lo..r {
        t.rows[r - 1].push(EntrySet::single(v));
        fill_strict(t, cells, k + 1, out);
        t.rows[r - 1].pop();
    }
}

/// `g_{λ,μ}`: the number of valid `T` of shape `μ/λ`.
pub fn g_coefficient(lambda: &Partition, mu: &Partition) -> Result<usize> {
    Ok(enumerate_lenart_t(lambda, mu)?.len())
}

/// Shapes `μ ⊇ λ` that can carry a valid `T`: at most `max_rows` rows,
/// `μ_i ≤ λ_i + i - 1`, `|μ| ≤ degree_cap`.
pub(crate) fn lenart_shapes(lambda: &Partition, max_rows: usize, degree_cap: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, max_rows: usize, room: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = prefix.len();
        if i == max_rows {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction").trimmed());
            return;
        }
        let lo = lambda[i];
        let cap = prefix.last().copied().unwrap_or(usize::MAX);
        let hi = (lo + i).min(cap).min(lo + room);
        for p in lo..=hi {
            prefix.push(p);
            rec(lambda, max_rows, room - (p - lo), prefix, out);
            prefix.pop();
        }
    }
    let lambda = lambda.trimmed();
    if lambda.num_rows() > max_rows || lambda.size() > degree_cap {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(&lambda, max_rows, degree_cap - lambda.size(), &mut Vec::new(), &mut out);
    out
}

/// `L(λ)` truncated to `U` with entries at most `n` and `|μ| ≤ degree_cap`.
pub fn enumerate_lenart_pairs(lambda: &Partition, n: usize, degree_cap: usize) -> Vec<LenartPair> {
    let mut out = Vec::new();
    for mu in lenart_shapes(lambda, n, degree_cap) {
        let ts = enumerate_lenart_t(lambda, &mu).expect("μ contains λ");
        if ts.is_empty() {
            continue;
        }
        let us = enumerate_ssyt(&mu, n);
        for t in &ts {
            for u in &us {
                out.push(LenartPair { t: t.clone(), u: u.clone() });
            }
        }
    }
    out
}
