//! Genomic semistandard skyline fillings of skew shapes `δ/γ` with a large
//! basement, and the structure constants `ã_{γ,λ}^δ` they count.
//!
//! A label `i_j` belongs to family `i` and gene `i_j`. Cells of `γ` and the
//! basement column hold large values that decrease down the rows.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::composition::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::expansion::{expand_in_atoms_with, BasisCache};
use crate::fillings::{for_each_triple, verdict, Rank, TripleVerdict};
use crate::genfun::grothendieck;
use crate::polynomial::Polynomial;
use crate::scalar::{from_count, Coefficient};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label {
    pub family: usize,
    pub gene: usize,
}

impl Label {
    pub fn new(family: usize, gene: usize) -> Self {
        Label { family, gene }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.gene)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.family)?;
        t.serialize_element(&self.gene)?;
        t.end()
    }
}

/// How `λ*` is formed from `λ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ContentConvention {
    /// `λ* = (λ_ℓ, …, λ_1)`
    #[default]
    Reversed,
    /// `λ* = λ`
    Direct,
}

/// Whether reverse lattice asks for weakly or strictly more `i+1`s.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Lattice {
    /// `#(i+1) ≥ #i` after every prefix.
    #[default]
    Weak,
    /// `#(i+1) > #i` after every prefix containing an `i`.
    Strict,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct GenomicOptions {
    pub content: ContentConvention,
    pub lattice: Lattice,
}

impl GenomicOptions {
    pub fn content_of(&self, lambda: &Partition) -> Vec<usize> {
        let parts = lambda.trimmed().parts().to_vec();
        match self.content {
            ContentConvention::Reversed => parts.into_iter().rev().collect(),
            ContentConvention::Direct => parts,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenomicFilling {
    shape: WeakComposition,
    inner: WeakComposition,
    /// `boxes[r][c]` is column `c + 1` of row `r + 1`; `None` exactly on `γ`.
    boxes: Vec<Vec<Option<Label>>>,
}

/// Cells of `δ/γ` in column reading order: columns right to left, each top
/// to bottom. Cells are `(row, col)` with both 1-based.
fn reading_cells(shape: &WeakComposition, inner: &WeakComposition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in (1..=shape.max_part()).rev() {
        for r in 1..=shape.len() {
            if c <= shape[r - 1] && c > inner[r - 1] {
                out.push((r, c));
            }
        }
    }
    out
}

fn check_containment(inner: &WeakComposition, shape: &WeakComposition) -> Result<()> {
    if inner.len() != shape.len() {
        return Err(Error::Dimension(format!("{inner} and {shape} have different lengths")));
    }
    if !inner.contained_in(shape) {
        return Err(Error::Containment { inner: inner.to_string(), outer: shape.to_string() });
    }
    Ok(())
}

/// `(k_1, k_2, …)` if every family uses exactly genes `1..=k_i`.
fn content_of_labels<'a>(labels: impl Iterator<Item = &'a Label>) -> Option<Vec<usize>> {
    let mut genes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for l in labels {
        genes.entry(l.family).or_default().push(l.gene);
    }
    let len = genes.keys().next_back().copied().unwrap_or(0);
    let mut content = vec![0; len];
    for (f, mut gs) in genes {
        gs.sort_unstable();
        gs.dedup();
        if gs[0] != 1 || gs[gs.len() - 1] != gs.len() {
            return None;
        }
        content[f - 1] = gs.len();
    }
    Some(content)
}

impl GenomicFilling {
    pub fn new(shape: WeakComposition, inner: WeakComposition, boxes: Vec<Vec<Option<Label>>>) -> Result<Self> {
        check_containment(&inner, &shape)?;
        if boxes.len() != shape.len() {
            return Err(Error::Dimension(format!("{} rows given for shape {shape}", boxes.len())));
        }
        for (r, row) in boxes.iter().enumerate() {
            if row.len() != shape[r] {
                return Err(Error::Dimension(format!("row {} has {} cells, expected {}", r + 1, row.len(), shape[r])));
            }
            for (c, cell) in row.iter().enumerate() {
                match cell {
                    None if c >= inner[r] => {
                        return Err(Error::Validity(format!("cell ({}, {}) of the skew shape is empty", r + 1, c + 1)))
                    }
                    Some(_) if c < inner[r] => {
                        return Err(Error::Validity(format!("cell ({}, {}) lies in the inner shape", r + 1, c + 1)))
                    }
                    Some(l) if l.family == 0 || l.gene == 0 => {
                        return Err(Error::Validity(format!("label {l} must have positive indices")))
                    }
                    _ => {}
                }
            }
        }
        if content_of_labels(boxes.iter().flatten().flatten()).is_none() {
            return Err(Error::Validity("some family skips a gene index".into()));
        }
        Ok(GenomicFilling { shape, inner, boxes })
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn inner(&self) -> &WeakComposition {
        &self.inner
    }

    pub fn boxes(&self) -> &[Vec<Option<Label>>] {
        &self.boxes
    }

    /// The label at 1-based `(row, col)`; `None` on the basement and `γ`.
    pub fn label(&self, row: usize, col: usize) -> Option<Label> {
        if col == 0 {
            return None;
        }
        self.boxes.get(row - 1).and_then(|r| r.get(col - 1)).copied().flatten()
    }

    fn rank(&self, row: usize, col: usize) -> Rank {
        match self.label(row, col) {
            Some(l) => Rank::Num(l.family),
            None => Rank::Large { row },
        }
    }

    pub fn content(&self) -> Vec<usize> {
        content_of_labels(self.boxes.iter().flatten().flatten()).expect("checked on construction")
    }

    pub fn reading_word(&self) -> Vec<Label> {
        reading_cells(&self.shape, &self.inner).into_iter().map(|(r, c)| self.label(r, c).expect("skew cell")).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "shape": self.shape.parts(),
            "inner": self.inner.parts(),
            "boxes": self.boxes,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("genomic filling JSON: {what}"));
        let comp = |key: &str| -> Result<WeakComposition> {
            let parts: Vec<usize> =
                serde_json::from_value(v.get(key).cloned().ok_or_else(|| bad(key))?).map_err(|_| bad(key))?;
            Ok(WeakComposition::new(parts))
        };
        let shape = comp("shape")?;
        let inner = comp("inner")?;
        let rows: Vec<Vec<Option<[usize; 2]>>> =
            serde_json::from_value(v.get("boxes").cloned().ok_or_else(|| bad("boxes"))?).map_err(|_| bad("boxes"))?;
        let boxes = rows
            .into_iter()
            .map(|row| row.into_iter().map(|cell| cell.map(|[f, g]| Label::new(f, g))).collect())
            .collect();
        GenomicFilling::new(shape, inner, boxes)
    }
}

impl fmt::Display for GenomicFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.boxes.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[*]")?;
            for cell in row {
                match cell {
                    Some(l) => write!(f, " {l}")?,
                    None => write!(f, " *")?,
                }
            }
        }
        Ok(())
    }
}

/// (G1)–(G4).
pub fn is_genomic_semistandard(f: &GenomicFilling) -> bool {
    let n = f.shape.len();
    // G1 and G2
    for r in 1..=n {
        for c in 1..=f.shape[r - 1] {
            if c > 1 && f.rank(r, c - 1) < f.rank(r, c) {
                return false;
            }
            let Some(l) = f.label(r, c) else { continue };
            if (c + 1..=f.shape[r - 1]).any(|d| f.label(r, d) == Some(l)) {
                return false;
            }
            if (r + 1..=n).any(|s| f.label(s, c).is_some_and(|m| m.family == l.family)) {
                return false;
            }
        }
    }
    // G3: large cells never share a gene with anything
    let mut ok = true;
    for_each_triple(f.shape.parts(), |_, a, b, c| {
        let genes: Vec<Label> = [a, b, c].iter().filter_map(|&(r, col)| f.label(r, col)).collect();
        let distinct = (0..genes.len()).all(|i| (i + 1..genes.len()).all(|j| genes[i] != genes[j]));
        if distinct && verdict(f.rank(a.0, a.1), f.rank(b.0, b.1), f.rank(c.0, c.1)) == TripleVerdict::Coinversion {
            ok = false;
        }
    });
    if !ok {
        return false;
    }
    // G4
    let mut last: BTreeMap<usize, usize> = BTreeMap::new();
    f.reading_word().iter().all(|l| {
        let prev = last.insert(l.family, l.gene).unwrap_or(usize::MAX);
        l.gene <= prev
    })
}

fn lattice_ok(lattice: Lattice, more: usize, fewer: usize) -> bool {
    match lattice {
        Lattice::Weak => more >= fewer,
        Lattice::Strict => fewer == 0 || more > fewer,
    }
}

/// Reverse lattice for every choice of one cell per gene.
///
/// For a fixed family `i` and prefix, the worst choice takes each gene of
/// family `i` at its first cell and each gene of family `i+1` at its last,
/// and these choices are independent, so only first and last positions
/// matter.
pub fn is_reverse_lattice_with(f: &GenomicFilling, lattice: Lattice) -> bool {
    let word = f.reading_word();
    let mut span: BTreeMap<Label, (usize, usize)> = BTreeMap::new();
    for (p, l) in word.iter().enumerate() {
        span.entry(*l).and_modify(|s| s.1 = p).or_insert((p, p));
    }
    let families = f.content().len();
    (1..families).all(|i| {
        let (mut firsts, mut lasts) = (vec![0usize; word.len()], vec![0usize; word.len()]);
        for (l, &(first, last)) in &span {
            if l.family == i {
                firsts[first] += 1;
            } else if l.family == i + 1 {
                lasts[last] += 1;
            }
        }
        let (mut more, mut fewer) = (0, 0);
        (0..word.len()).all(|p| {
            more += lasts[p];
            fewer += firsts[p];
            lattice_ok(lattice, more, fewer)
        })
    })
}

pub fn is_reverse_lattice(f: &GenomicFilling) -> bool {
    is_reverse_lattice_with(f, Lattice::Weak)
}

/// The same condition by trying every selection.
pub fn is_reverse_lattice_exhaustive(f: &GenomicFilling, lattice: Lattice) -> bool {
    let word = f.reading_word();
    let mut positions: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
    for (p, l) in word.iter().enumerate() {
        positions.entry(*l).or_default().push(p);
    }
    let genes: Vec<(Label, Vec<usize>)> = positions.into_iter().collect();
    let families = f.content().len();
    let mut choice = vec![0usize; genes.len()];
    loop {
        let mut chosen: Vec<(usize, usize)> =
            genes.iter().zip(&choice).map(|((l, ps), &k)| (ps[k], l.family)).collect();
        chosen.sort_unstable();
        for i in 1..families {
            let (mut more, mut fewer) = (0, 0);
            for &(_, fam) in &chosen {
                more += usize::from(fam == i + 1);
                fewer += usize::from(fam == i);
                if !lattice_ok(lattice, more, fewer) {
                    return false;
                }
            }
        }
        // next selection
        let mut k = 0;
        loop {
            if k == genes.len() {
                return true;
            }
            choice[k] += 1;
            if choice[k] < genes[k].1.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

struct Search<'a> {
    shape: &'a WeakComposition,
    inner: &'a WeakComposition,
    content: &'a [usize],
    opts: GenomicOptions,
    cells: Vec<(usize, usize)>,
    /// Triples whose last unassigned cell (in reading order) is this one.
    triples_at: Vec<Vec<[(usize, usize); 3]>>,
    grid: Vec<Vec<Option<Label>>>,
    /// Current gene per family, `k_i + 1` before the family appears.
    current: Vec<usize>,
    out: Vec<GenomicFilling>,
}

impl Search<'_> {
    fn rank(&self, (r, c): (usize, usize)) -> Rank {
        match c.checked_sub(1).and_then(|c| self.grid[r - 1].get(c).copied().flatten()) {
            Some(l) => Rank::Num(l.family),
            None => Rank::Large { row: r },
        }
    }

    fn label(&self, (r, c): (usize, usize)) -> Option<Label> {
        c.checked_sub(1).and_then(|c| self.grid[r - 1].get(c).copied().flatten())
    }

    fn genes_outstanding(&self) -> usize {
        self.content.iter().zip(&self.current).map(|(&k, &cur)| if cur > k { k } else { cur - 1 }).sum()
    }

    fn fits(&self, (r, c): (usize, usize), l: Label) -> bool {
        if c < self.shape[r - 1] && self.label((r, c + 1)).is_some_and(|right| right.family > l.family) {
            return false;
        }
        if (c + 1..=self.shape[r - 1]).any(|d| self.label((r, d)) == Some(l)) {
            return false;
        }
        if (1..r).any(|s| self.label((s, c)).is_some_and(|m| m.family == l.family)) {
            return false;
        }
        true
    }

    fn triples_hold(&self, p: usize) -> bool {
        self.triples_at[p].iter().all(|cells| {
            let genes: Vec<Label> = cells.iter().filter_map(|&x| self.label(x)).collect();
            let distinct = (0..genes.len()).all(|i| (i + 1..genes.len()).all(|j| genes[i] != genes[j]));
            !distinct
                || verdict(self.rank(cells[0]), self.rank(cells[1]), self.rank(cells[2])) == TripleVerdict::Inversion
        })
    }

    /// A gene of family `i` is started no later than any choice of it, and
    /// a gene of family `i+1` is finished no earlier than it is started.
    fn lattice_possible(&self) -> bool {
        let started = |f: usize| {
            let (k, cur) = (self.content[f - 1], self.current[f - 1]);
            if cur > k {
                0
            } else {
                k - cur + 1
            }
        };
        (1..self.content.len()).all(|i| lattice_ok(self.opts.lattice, started(i + 1), started(i)))
    }

    fn run(&mut self, p: usize) {
        if self.genes_outstanding() > self.cells.len() - p {
            return;
        }
        if p == self.cells.len() {
            let f = GenomicFilling { shape: self.shape.clone(), inner: self.inner.clone(), boxes: self.grid.clone() };
            if is_reverse_lattice_with(&f, self.opts.lattice) {
                debug_assert!(is_genomic_semistandard(&f));
                debug_assert_eq!(f.content(), self.content);
                self.out.push(f);
            }
            return;
        }
        let (r, c) = self.cells[p];
        for family in 1..=self.content.len() {
            let (k, cur) = (self.content[family - 1], self.current[family - 1]);
            if k == 0 {
                continue;
            }
            let genes: Vec<usize> =
                if cur > k { vec![k] } else { [cur, cur - 1].into_iter().filter(|&g| g >= 1).collect() };
            for gene in genes {
                let l = Label::new(family, gene);
                if !self.fits((r, c), l) {
                    continue;
                }
                self.grid[r - 1][c - 1] = Some(l);
                self.current[family - 1] = gene;
                if self.triples_hold(p) && self.lattice_possible() {
                    self.run(p + 1);
                }
                self.current[family - 1] = cur;
                self.grid[r - 1][c - 1] = None;
            }
        }
    }
}

/// Reverse lattice genomic semistandard fillings of `δ/γ` with content `λ*`.
pub fn enumerate_genomic_fillings_with(
    gamma: &WeakComposition,
    lambda: &Partition,
    delta: &WeakComposition,
    opts: GenomicOptions,
) -> Result<Vec<GenomicFilling>> {
    check_containment(gamma, delta)?;
    let content = opts.content_of(lambda);
    let cells = reading_cells(delta, gamma);
    let index = |cell: (usize, usize)| cells.iter().position(|&x| x == cell);
    let mut triples_at = vec![Vec::new(); cells.len()];
    for_each_triple(delta.parts(), |_, a, b, c| {
        if let Some(last) = [a, b, c].iter().filter_map(|&x| index(x)).max() {
            triples_at[last].push([a, b, c]);
        }
    });
    let mut search = Search {
        shape: delta,
        inner: gamma,
        content: &content,
        opts,
        grid: (0..delta.len()).map(|r| vec![None; delta[r]]).collect(),
        current: content.iter().map(|k| k + 1).collect(),
        cells,
        triples_at,
        out: Vec::new(),
    };
    search.run(0);
    Ok(search.out)
}

pub fn enumerate_genomic_fillings(
    gamma: &WeakComposition,
    lambda: &Partition,
    delta: &WeakComposition,
) -> Result<Vec<GenomicFilling>> {
    enumerate_genomic_fillings_with(gamma, lambda, delta, GenomicOptions::default())
}

/// `ã_{γ,λ}^δ`
pub fn genomic_structure_constant_with(
    gamma: &WeakComposition,
    lambda: &Partition,
    delta: &WeakComposition,
    opts: GenomicOptions,
) -> Result<usize> {
    Ok(enumerate_genomic_fillings_with(gamma, lambda, delta, opts)?.len())
}

pub fn genomic_structure_constant(
    gamma: &WeakComposition,
    lambda: &Partition,
    delta: &WeakComposition,
) -> Result<usize> {
    genomic_structure_constant_with(gamma, lambda, delta, GenomicOptions::default())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conj54Mismatch<C> {
    pub delta: WeakComposition,
    pub count: usize,
    pub coefficient: Polynomial<C>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conj54Report<C> {
    pub gamma: WeakComposition,
    pub lambda: Partition,
    pub max_size: usize,
    /// `δ` with `|δ| ≤ max_size` whose coefficient equals `ã·β^{|δ|-|γ|-|λ|}`.
    pub matches: Vec<(WeakComposition, usize)>,
    pub mismatches: Vec<Conj54Mismatch<C>>,
    /// Atoms of the product above the size bound, left unchecked.
    pub beyond_bound: Vec<WeakComposition>,
}

impl<C> Conj54Report<C> {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Expand `L_γ · G_λ(x_1..x_n)`, `n = parts(γ)`, in Lascoux atoms and compare
/// every `δ` with `|δ| ≤ max_size` against the genomic count.
pub fn verify_conjecture_54<C: Coefficient>(
    gamma: &WeakComposition,
    lambda: &Partition,
    max_size: usize,
    opts: GenomicOptions,
    cache: &BasisCache<C>,
) -> Conj54Report<C> {
    let n = gamma.len();
    let lambda = lambda.trimmed();
    let product = &*cache.atom(gamma) * &grothendieck::<C>(&lambda, n);
    let expansion = expand_in_atoms_with(&product, cache);
    let mut deltas: Vec<WeakComposition> =
        (gamma.size()..=max_size).flat_map(|s| WeakComposition::all(n, s)).filter(|d| gamma.contained_in(d)).collect();
    deltas.extend(expansion.coeffs.keys().filter(|d| d.size() <= max_size && !gamma.contained_in(d)).cloned());
    let base = gamma.size() + lambda.size();
    let results: Vec<(WeakComposition, usize, Polynomial<C>)> = deltas
        .into_par_iter()
        .map(|d| {
            let count = if gamma.contained_in(&d) {
                genomic_structure_constant_with(gamma, &lambda, &d, opts).expect("containment checked")
            } else {
                0
            };
            let coefficient = expansion.coefficient(&d);
            (d, count, coefficient)
        })
        .collect();
    let mut report = Conj54Report {
        gamma: gamma.clone(),
        lambda: lambda.clone(),
        max_size,
        matches: Vec::new(),
        mismatches: Vec::new(),
        beyond_bound: expansion.coeffs.keys().filter(|d| d.size() > max_size).cloned().collect(),
    };
    for (delta, count, coefficient) in results {
        let expected = match delta.size().checked_sub(base) {
            Some(k) if count > 0 => Polynomial::<C>::beta_power(k, 0).scale(&from_count(count)),
            _ => Polynomial::zero(0),
        };
        if coefficient == expected {
            report.matches.push((delta, count));
        } else {
            report.mismatches.push(Conj54Mismatch { delta, count, coefficient });
        }
    }
    report
}
