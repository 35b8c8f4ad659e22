//! Permutations in one-line notation, reduced words and Bruhat order.
//!
//! Products compose right to left as functions: `(u * v)(i) = u(v(i))`.
//! A reduced word `a_1 ... a_k` of `w` means `w = s_{a_1} ∘ ... ∘ s_{a_k}`.
//! Permutations act on weak compositions on the left by
//! `(w·λ)_{w(i)} = λ_i`, so `w·(v·λ) = (w∘v)·λ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::WeakComposition;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The adjacent transposition `s_i` in `S_n` (1-based, `1 ≤ i < n`).
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Validity(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    /// Product `s_{a_1} ∘ ... ∘ s_{a_k}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Self {
        word.iter().fold(Self::identity(n), |acc, &a| acc.compose(&Self::simple(a, n)))
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// A reduced word built by peeling right descents: if `w(i) > w(i+1)`
    /// then `w = (w ∘ s_i) ∘ s_i` with `w ∘ s_i` one shorter.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut rev = Vec::with_capacity(self.inversions());
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// A reduced word built by peeling left descents instead, taking the
    /// largest available descent each time. Usually differs from
    /// [`Permutation::reduced_word`], which makes it a useful second witness.
    pub fn reduced_word_left(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let n = w.len();
        let mut word = Vec::with_capacity(self.inversions());
        loop {
            let mut pos = vec![0; n + 1];
            for (p, &v) in w.iter().enumerate() {
                pos[v] = p;
            }
            // s_i ∘ w is shorter iff i+1 sits left of i in one-line notation
            let Some(i) = (1..n).rev().find(|&i| pos[i + 1] < pos[i]) else {
                break;
            };
            for v in w.iter_mut() {
                if *v == i {
                    *v = i + 1;
                } else if *v == i + 1 {
                    *v = i;
                }
            }
            word.push(i);
        }
        word
    }

    /// Strong Bruhat order through the rank-matrix criterion:
    /// `u ≤ w` iff `#{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.len(), other.len(), "Bruhat comparison across different S_n");
        let n = self.len();
        for j in 1..=n {
            let (mut cu, mut cw) = (0usize, 0usize);
            for i in 0..n {
                cu += usize::from(self.0[i] >= j);
                cw += usize::from(other.0[i] >= j);
                if cu > cw {
                    return false;
                }
            }
        }
        true
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut v: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(v.clone())];
        while let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
            out.push(Permutation(v.clone()));
        }
        out
    }

    /// `w·λ`, defined by `(w·λ)_{w(i)} = λ_i`.
    pub fn act(&self, parts: &[usize]) -> Vec<usize> {
        assert_eq!(parts.len(), self.len());
        let mut out = vec![0; parts.len()];
        for (i, &p) in parts.iter().enumerate() {
            out[self.0[i] - 1] = p;
        }
        out
    }
}

/// The shortest permutation `w` with `γ_{w(i)} = λ(γ)_i`.
///
/// Positions of `γ` are listed by decreasing part, ties broken by position;
/// the stable order is what makes the permutation shortest.
pub fn w_of(gamma: &WeakComposition) -> Permutation {
    let parts = gamma.parts();
    let mut positions: Vec<usize> = (1..=parts.len()).collect();
    positions.sort_by(|&p, &q| parts[q - 1].cmp(&parts[p - 1]));
    Permutation(positions)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{self}")
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: WeakComposition = s.parse()?;
        Permutation::from_one_line(c.into_parts())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn w_of_pins_action_convention() {
        let gamma = wc("1021");
        let w = w_of(&gamma);
        assert_eq!(w, perm("3142"));
        let lambda = gamma.lambda();
        for i in 1..=4 {
            assert_eq!(gamma.parts()[w.apply(i) - 1], lambda.parts()[i - 1]);
        }
        assert_eq!(w.act(lambda.parts()), gamma.parts());
    }

    #[test]
    fn w_of_partition_is_identity() {
        assert!(w_of(&wc("3310")).is_identity());
        assert!(w_of(&wc("")).is_identity());
    }

    /// Brute force over S_n: the minimal-length permutation sending λ to γ.
    fn w_of_oracle(gamma: &WeakComposition) -> Permutation {
        let lambda = gamma.lambda();
        Permutation::all(gamma.len())
            .into_iter()
            .filter(|w| (1..=gamma.len()).all(|i| gamma.parts()[w.apply(i) - 1] == lambda.parts()[i - 1]))
            .min_by_key(|w| w.inversions())
            .unwrap()
    }

    #[test]
    fn w_of_matches_brute_force() {
        assert_eq!(w_of(&wc("01")), perm("21"));
        for len in 1..=4 {
            for gamma in WeakComposition::up_to(len, 4) {
                let oracle = w_of_oracle(&gamma);
                assert_eq!(w_of(&gamma), oracle, "{gamma:?}");
                // the minimum is unique
                let l = oracle.inversions();
                let lambda = gamma.lambda();
                let count = Permutation::all(len)
                    .into_iter()
                    .filter(|w| w.inversions() == l && w.act(lambda.parts()) == gamma.parts())
                    .count();
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn reduced_words_compose_back() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(perm("21").reduced_word(), vec![1]);
        let w = perm("3142");
        let word = w.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(Permutation::from_word(&word, 4), w);
        for n in 1..=5 {
            for w in Permutation::all(n) {
                for word in [w.reduced_word(), w.reduced_word_left()] {
                    assert_eq!(word.len(), w.inversions());
                    assert_eq!(Permutation::from_word(&word, n), w);
                }
            }
        }
    }

    /// Subword property: the products of subwords of a reduced word of `w`
    /// are exactly the Bruhat interval below `w`.
    fn bruhat_ideal_oracle(w: &Permutation) -> HashSet<Permutation> {
        let word = w.reduced_word();
        let n = w.len();
        (0u32..(1 << word.len()))
            .map(|mask| {
                let sub: Vec<usize> =
                    word.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &a)| a).collect();
                Permutation::from_word(&sub, n)
            })
            .collect()
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for w in &all {
                let ideal = bruhat_ideal_oracle(w);
                for u in &all {
                    assert_eq!(u.bruhat_leq(w), ideal.contains(u), "{u:?} ≤ {w:?}");
                }
                assert!(Permutation::identity(n).bruhat_leq(w));
                assert!(w.bruhat_leq(w));
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_one_line(vec![1, 1]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![3, 1]).is_err());
    }
}
