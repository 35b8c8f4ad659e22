//! Weak compositions, partitions and the lexicographic order on exponent
//! vectors.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers. Trailing zeros are significant:
/// the length is the number of rows of a skyline diagram (equivalently the
/// number of variables of its generating function).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn zeros(len: usize) -> Self {
        WeakComposition(vec![0; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|γ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition with the same multiset of parts, padded to the same
    /// length.
    pub fn lambda(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Drop the zero parts, keeping the order of the positive ones.
    pub fn plus(&self) -> WeakComposition {
        WeakComposition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn reversed(&self) -> WeakComposition {
        WeakComposition(self.0.iter().rev().copied().collect())
    }

    /// Pad with trailing zeros up to `len` parts. Never truncates.
    pub fn padded(&self, len: usize) -> WeakComposition {
        let mut parts = self.0.clone();
        if parts.len() < len {
            parts.resize(len, 0);
        }
        WeakComposition(parts)
    }

    /// `γ_i ≤ δ_i` for every row (missing rows count as zero).
    pub fn contained_in(&self, other: &WeakComposition) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| self[i] <= other[i])
    }

    /// Every weak composition with exactly `len` parts summing to `size`,
    /// in decreasing lexicographic order.
    pub fn all(len: usize, size: usize) -> Vec<WeakComposition> {
        fn rec(len: usize, size: usize, prefix: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if prefix.len() + 1 == len {
                prefix.push(size);
                out.push(WeakComposition(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=size).rev() {
                prefix.push(first);
                rec(len, size - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if size == 0 {
                out.push(WeakComposition(Vec::new()));
            }
            return out;
        }
        rec(len, size, &mut Vec::with_capacity(len), &mut out);
        out
    }

    /// All weak compositions with `len` parts and total size at most
    /// `max_size`.
    pub fn up_to(len: usize, max_size: usize) -> Vec<WeakComposition> {
        (0..=max_size).flat_map(|s| Self::all(len, s)).collect()
    }

    /// The distinct rearrangements of the parts, in decreasing lex order.
    pub fn rearrangements(&self) -> Vec<WeakComposition> {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![WeakComposition(parts.clone())];
        // prev_permutation on a descending start walks every arrangement once
        while prev_permutation(&mut parts) {
            out.push(WeakComposition(parts.clone()));
        }
        out
    }

    /// Every weak composition `δ` with `len` parts such that `δ⁺` equals
    /// `alpha` (`alpha` must have no zero parts).
    pub fn with_plus(alpha: &WeakComposition, len: usize) -> Vec<WeakComposition> {
        let k = alpha.len();
        if k > len {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut positions = Vec::with_capacity(k);
        fn rec(alpha: &[usize], len: usize, start: usize, positions: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if positions.len() == alpha.len() {
                let mut parts = vec![0; len];
                for (&p, &a) in positions.iter().zip(alpha) {
                    parts[p] = a;
                }
                out.push(WeakComposition(parts));
                return;
            }
            let remaining = alpha.len() - positions.len();
            for p in start..=(len - remaining) {
                positions.push(p);
                rec(alpha, len, p + 1, positions, out);
                positions.pop();
            }
        }
        rec(alpha.parts(), len, 0, &mut positions, &mut out);
        out
    }
}

fn prev_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Index<usize> for WeakComposition {
    type Output = usize;

    /// Out-of-range rows read as zero.
    fn index(&self, index: usize) -> &usize {
        self.0.get(index).unwrap_or(&0)
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }
}

impl From<&[usize]> for WeakComposition {
    fn from(parts: &[usize]) -> Self {
        WeakComposition(parts.to_vec())
    }
}

impl From<Partition> for WeakComposition {
    fn from(p: Partition) -> Self {
        WeakComposition(p.0)
    }
}

/// Compact digit strings when every part is at most 9 (`1021`), otherwise
/// comma separated (`10,2,1`).
fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.iter().all(|&p| p <= 9) {
        for p in parts {
            write!(f, "{p}")?;
        }
        Ok(())
    } else {
        let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| s.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|ch| {
                ch.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {ch:?} in {s:?}")))
            })
            .collect()
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "γ")?;
        write_parts(f, &self.0)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(WeakComposition)
    }
}

/// A weakly decreasing weak composition. Trailing zeros are kept when
/// present, but [`Partition::trimmed`] drops them for shape comparisons.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Partition(parts))
        } else {
            Err(Error::Validity(format!("{parts:?} is not weakly decreasing")))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.num_rows()].to_vec())
    }

    pub fn padded(&self, len: usize) -> Partition {
        let mut parts = self.0.clone();
        if parts.len() < len {
            parts.resize(len, 0);
        }
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|i| other[i] <= self[i])
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.num_cols();
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// All partitions of `n` (no trailing zeros), in decreasing lex order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=n.min(max)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn up_to(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Self::all_of_size).collect()
    }

    /// Partitions contained in `self` (trimmed).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(bound: &[usize], row: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if row >= bound.len() {
                return;
            }
            for p in 1..=bound[row].min(max) {
                prefix.push(p);
                rec(bound, row + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        let t = self.trimmed();
        rec(&t.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.0.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ")?;
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Lexicographic comparison of two exponent vectors, treating missing
/// trailing entries as zero.
pub fn lex_compare(a: &[usize], b: &[usize]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(wc("1021").lambda().parts(), &[2, 1, 1, 0]);
        assert_eq!(wc("000").lambda().parts(), &[0, 0, 0]);
        assert_eq!(wc("210").lambda().parts(), &[2, 1, 0]);
        assert_eq!(wc("1021").lambda().trimmed().to_string(), "211");
    }

    #[test]
    fn plus_examples() {
        assert_eq!(wc("1021").plus(), wc("121"));
        assert_eq!(wc("00").plus(), wc(""));
        assert_eq!(wc("21").plus(), wc("21"));
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&[2, 1, 0], &[2, 0, 1]), Ordering::Greater);
        assert_eq!(lex_compare(&[1, 2], &[1, 2, 0]), Ordering::Equal);
        assert_eq!(lex_compare(&[0, 2], &[1, 1]), Ordering::Less);
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(wc("1,0,12").parts(), &[1, 0, 12]);
        assert_eq!(wc("1,0,12").to_string(), "1,0,12");
        assert_eq!(wc("(1,0,2)").to_string(), "102");
        assert!("12a".parse::<WeakComposition>().is_err());
        assert!("12".parse::<Partition>().is_err());
    }

    #[test]
    fn counts_of_generators() {
        // stars and bars: C(size + len - 1, len - 1)
        assert_eq!(WeakComposition::all(3, 3).len(), 10);
        assert_eq!(WeakComposition::all(0, 0).len(), 1);
        assert_eq!(WeakComposition::all(0, 2).len(), 0);
        assert_eq!(wc("210").rearrangements().len(), 6);
        assert_eq!(wc("110").rearrangements().len(), 3);
        assert_eq!(Partition::all_of_size(5).len(), 7);
        assert_eq!(WeakComposition::with_plus(&wc("21"), 3).len(), 3);
        assert_eq!(
            "321".parse::<Partition>().unwrap().subpartitions().len(),
            // order ideals of the staircase (3,2,1): Catalan(4)
            14
        );
    }

    #[test]
    fn conjugate_of_staircase() {
        let p: Partition = "3211".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 2, 1]);
    }
}
