//! Divided differences and their isobaric and K-theoretic variants.
//!
//! For `1 ≤ i < n`:
//! `∂_i = (1 - s_i)/(x_i - x_{i+1})`, `π_i f = ∂_i(x_i f)`, `π̂_i = π_i - 1`,
//! `τ_i f = π_i((1 + β x_{i+1}) f)`, `τ̂_i = τ_i - 1`.
//!
//! A word `a_1 ... a_k` acts as the operator product `O_{a_1} ⋯ O_{a_k}`, so
//! `O_{a_k}` is applied first.

use std::fmt;
use std::str::FromStr;

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::permutation::{w_of, Permutation};
use crate::polynomial::{BMonomial, Polynomial};
use crate::scalar::Coefficient;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorKind {
    Swap,
    Partial,
    Pi,
    PiHat,
    Tau,
    TauHat,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 6] = [
        OperatorKind::Swap,
        OperatorKind::Partial,
        OperatorKind::Pi,
        OperatorKind::PiHat,
        OperatorKind::Tau,
        OperatorKind::TauHat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Swap => "swap",
            OperatorKind::Partial => "partial",
            OperatorKind::Pi => "pi",
            OperatorKind::PiHat => "pihat",
            OperatorKind::Tau => "tau",
            OperatorKind::TauHat => "tauhat",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown operator {s:?}")))
    }
}

/// `∂_i` monomial by monomial: with `a = e_i`, `b = e_{i+1}`,
/// `∂_i x_i^a x_{i+1}^b = Σ_{k<a-b} x_i^{a-1-k} x_{i+1}^{b+k}` when `a > b`,
/// zero when `a = b`, and the negated mirror image when `a < b`.
fn partial<C: Coefficient>(i: usize, f: &Polynomial<C>) -> Polynomial<C> {
    let mut out = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        let (a, b) = (m.exps[i - 1], m.exps[i]);
        if a == b {
            continue;
        }
        let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
        for k in 0..hi - lo {
            let mut exps = m.exps.clone();
            exps[i - 1] = hi - 1 - k;
            exps[i] = lo + k;
            out.add_term(BMonomial::new(m.beta, exps), coeff.clone());
        }
    }
    out
}

fn check_index<C: Coefficient>(i: usize, f: &Polynomial<C>) -> Result<()> {
    if i == 0 || i >= f.nvars() {
        return Err(Error::Dimension(format!(
            "operator index {i} outside 1..{} for {} variables",
            f.nvars(),
            f.nvars()
        )));
    }
    Ok(())
}

fn pi<C: Coefficient>(i: usize, f: &Polynomial<C>) -> Polynomial<C> {
    let mut e = vec![0; f.nvars()];
    e[i - 1] = 1;
    partial(i, &f.mul_monomial(0, &e))
}

/// Apply one operator with index `i` (1-based).
pub fn apply<C: Coefficient>(kind: OperatorKind, i: usize, f: &Polynomial<C>) -> Result<Polynomial<C>> {
    check_index(i, f)?;
    Ok(match kind {
        OperatorKind::Swap => f.swap_vars(i),
        OperatorKind::Partial => partial(i, f),
        OperatorKind::Pi => pi(i, f),
        OperatorKind::PiHat => &pi(i, f) - f,
        OperatorKind::Tau | OperatorKind::TauHat => {
            let mut e = vec![0; f.nvars()];
            e[i] = 1;
            let lifted = f + &f.mul_monomial(1, &e);
            let t = pi(i, &lifted);
            if kind == OperatorKind::Tau {
                t
            } else {
                &t - f
            }
        }
    })
}

/// `O_{a_1} ⋯ O_{a_k} f`, applying `a_k` first.
pub fn apply_reduced_word<C: Coefficient>(
    kind: OperatorKind,
    word: &[usize],
    f: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    word.iter().rev().try_fold(f.clone(), |g, &a| apply(kind, a, &g))
}

/// `O_w f` through a reduced word of `w`.
pub fn apply_word<C: Coefficient>(kind: OperatorKind, w: &Permutation, f: &Polynomial<C>) -> Result<Polynomial<C>> {
    if w.len() != f.nvars() && !w.is_identity() {
        return Err(Error::Dimension(format!("permutation of {} letters acting on {} variables", w.len(), f.nvars())));
    }
    apply_reduced_word(kind, &w.reduced_word(), f)
}

fn from_dominant<C: Coefficient>(kind: OperatorKind, gamma: &WeakComposition) -> Polynomial<C> {
    let lambda = gamma.lambda();
    apply_word(kind, &w_of(gamma), &Polynomial::x_power(lambda.parts())).expect("w(γ) lives in S_n")
}

/// `κ_γ = π_{w(γ)} x^{λ(γ)}`
pub fn key_polynomial<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    from_dominant(OperatorKind::Pi, gamma)
}

/// `π̂_{w(γ)} x^{λ(γ)}`
pub fn demazure_atom_op<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    from_dominant(OperatorKind::PiHat, gamma)
}

/// `Ω_γ = τ_{w(γ)} x^{λ(γ)}`
pub fn lascoux_polynomial<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    from_dominant(OperatorKind::Tau, gamma)
}

/// `L̂_γ = τ̂_{w(γ)} x^{λ(γ)}`
pub fn lascoux_atom_op<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    from_dominant(OperatorKind::TauHat, gamma)
}

/// The `γ` with `λ(γ) = λ(δ)` and `w(γ) ≤ w(δ)` in Bruhat order, in
/// decreasing lex order.
pub fn omega_decomposition(delta: &WeakComposition) -> Vec<WeakComposition> {
    let wd = w_of(delta);
    delta.rearrangements().into_iter().filter(|g| w_of(g).bruhat_leq(&wd)).collect()
}
