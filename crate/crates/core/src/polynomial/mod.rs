//! Sparse polynomials in `x_1..x_n` whose coefficients are integer multiples
//! of powers of a formal parameter `β`.
//!
//! `β` is bookkeeping attached to each monomial rather than an extra
//! variable: orderings and leading terms look at the `x`-exponents only.
//! A polynomial with `nvars == 0` is a polynomial in `β` alone, which is how
//! basis-expansion coefficients are represented.

mod text;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::composition::lex_compare;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

pub(crate) use text::coeff_to_number;
pub use text::{from_json, parse_polynomial, parse_with_nvars, to_json};

/// `β^beta · x^exps`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BMonomial {
    pub beta: usize,
    pub exps: Vec<usize>,
}

impl BMonomial {
    pub fn new(beta: usize, exps: Vec<usize>) -> Self {
        BMonomial { beta, exps }
    }

    pub fn x(exps: Vec<usize>) -> Self {
        BMonomial { beta: 0, exps }
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().sum()
    }

    fn times(&self, other: &BMonomial) -> BMonomial {
        BMonomial {
            beta: self.beta + other.beta,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Serialization order: increasing `β`-exponent, then decreasing lex on the
/// `x`-exponents.
pub fn canonical_order(a: &BMonomial, b: &BMonomial) -> Ordering {
    a.beta.cmp(&b.beta).then_with(|| lex_compare(&b.exps, &a.exps))
}

/// Result of [`Polynomial::lex_leading`] / [`Polynomial::lex_trailing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeTerm<C> {
    pub monomial: BMonomial,
    pub coeff: C,
    /// The extreme `x`-monomial carries more than one `β`-power; the lowest
    /// one was reported.
    pub ambiguous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: HashMap<BMonomial, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(C::one(), nvars)
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        Self::term(c, BMonomial::x(vec![0; nvars]))
    }

    pub fn term(c: C, m: BMonomial) -> Self {
        let mut p = Self::zero(m.exps.len());
        p.add_term(m, c);
        p
    }

    /// `x^exps` with coefficient one.
    pub fn x_power(exps: &[usize]) -> Self {
        Self::term(C::one(), BMonomial::x(exps.to_vec()))
    }

    /// `x_i` (1-based) in `nvars` variables.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::x_power(&exps)
    }

    /// `β^k` as a polynomial in `nvars` variables.
    pub fn beta_power(k: usize, nvars: usize) -> Self {
        Self::term(C::one(), BMonomial::new(k, vec![0; nvars]))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (BMonomial, C)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.exps.len() != nvars {
                return Err(Error::Dimension(format!(
                    "monomial with {} exponents in a {}-variable polynomial",
                    m.exps.len(),
                    nvars
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BMonomial, &C)> {
        self.terms.iter()
    }

    /// Terms in canonical serialization order.
    pub fn sorted_terms(&self) -> Vec<(&BMonomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_order(a.0, b.0));
        v
    }

    /// Accumulate `c · m`, keeping the map free of zero coefficients.
    pub fn add_term(&mut self, m: BMonomial, c: C) {
        debug_assert_eq!(m.exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_same(&self, other: &Self, op: &str) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{op} of polynomials in {} and {} variables", self.nvars, other.nvars)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "sum")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "difference")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "product")?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())).collect(),
        }
    }

    /// Multiply by a polynomial in `β` alone (`b.nvars() == 0`).
    pub fn scale_by(&self, b: &Self) -> Result<Self> {
        if b.nvars != 0 {
            return Err(Error::Dimension("scalar factor must be a polynomial in β only".into()));
        }
        let mut out = Self::zero(self.nvars);
        for (mb, cb) in &b.terms {
            for (m, c) in &self.terms {
                out.add_term(BMonomial::new(m.beta + mb.beta, m.exps.clone()), c.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Multiply by `β^beta · x^exps`.
    pub fn mul_monomial(&self, beta: usize, exps: &[usize]) -> Self {
        assert_eq!(exps.len(), self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (BMonomial::new(m.beta + beta, m.exps.iter().zip(exps).map(|(a, b)| a + b).collect()), c.clone())
                })
                .collect(),
        }
    }

    /// Specialize `β = 0`.
    pub fn beta_zero(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.beta == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn coefficient_of(&self, m: &BMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The coefficient of `x^exps` as a polynomial in `β`.
    pub fn x_coefficient(&self, exps: &[usize]) -> Self {
        let mut out = Self::zero(0);
        for (m, c) in &self.terms {
            if m.exps == exps {
                out.add_term(BMonomial::new(m.beta, Vec::new()), c.clone());
            }
        }
        out
    }

    fn extreme(&self, pick_larger: Ordering) -> Result<ExtremeTerm<C>> {
        let mut best: Option<&BMonomial> = None;
        let mut ambiguous = false;
        for m in self.terms.keys() {
            match best {
                None => best = Some(m),
                Some(b) => match lex_compare(&m.exps, &b.exps) {
                    Ordering::Equal => {
                        ambiguous = true;
                        if m.beta < b.beta {
                            best = Some(m);
                        }
                    }
                    ord if ord == pick_larger => {
                        ambiguous = false;
                        best = Some(m);
                    }
                    _ => {}
                },
            }
        }
        let m = best.ok_or(Error::EmptyInput("extreme term of the zero polynomial"))?;
        Ok(ExtremeTerm { monomial: m.clone(), coeff: self.terms[m].clone(), ambiguous })
    }

    /// The term whose `x`-exponent vector is lexicographically largest.
    pub fn lex_leading(&self) -> Result<ExtremeTerm<C>> {
        self.extreme(Ordering::Greater)
    }

    /// The term whose `x`-exponent vector is lexicographically smallest.
    /// For a Lascoux atom `L_γ` this is `x^γ`.
    pub fn lex_trailing(&self) -> Result<ExtremeTerm<C>> {
        self.extreme(Ordering::Less)
    }

    /// The exponent vector of the lexicographically smallest monomial,
    /// ignoring `β`.
    pub fn lex_trailing_exps(&self) -> Option<&[usize]> {
        self.terms.keys().min_by(|a, b| lex_compare(&a.exps, &b.exps)).map(|m| m.exps.as_slice())
    }

    /// `s_i`: exchange `x_i` and `x_{i+1}` (1-based).
    pub fn swap_vars(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exps.clone();
                    e.swap(i - 1, i);
                    (BMonomial::new(m.beta, e), c.clone())
                })
                .collect(),
        }
    }

    /// Re-home the polynomial in `nvars` variables. Growing is always
    /// allowed; shrinking only drops variables that do not occur.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars && self.terms.keys().any(|m| m.exps[nvars..].iter().any(|&e| e > 0)) {
            return Err(Error::Dimension(format!(
                "cannot drop variables beyond x{nvars}: they occur in the polynomial"
            )));
        }
        Ok(Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exps.clone();
                    e.resize(nvars, 0);
                    (BMonomial::new(m.beta, e), c.clone())
                })
                .collect(),
        })
    }

    pub fn max_exponent(&self) -> usize {
        self.terms.keys().flat_map(|m| m.exps.iter().copied()).max().unwrap_or(0)
    }

    pub fn max_beta(&self) -> usize {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }

    pub fn is_beta_free(&self) -> bool {
        self.terms.keys().all(|m| m.beta == 0)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    /// Panics on mismatched variable counts; see [`Polynomial::try_add`].
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).unwrap()
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).unwrap()
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).unwrap()
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}
