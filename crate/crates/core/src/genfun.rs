//! Generating functions of fillings and tableaux.
//!
//! Each function is generic over the coefficient ring; polynomials live in
//! exactly as many variables as the input asks for (the number of parts of
//! `γ`, or the explicit `n`).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::composition::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::fillings::{for_each_anchor_filling, free_entry_options, Basement};
use crate::polynomial::{BMonomial, Polynomial};
use crate::scalar::{from_count, Coefficient};
use crate::tableaux::{enumerate_set_reverse_tableaux, enumerate_ssyt, g_coefficient};

/// `A_γ`: the sum of `x^F` over ordinary semistandard skyline fillings with
/// basement `b_i = i`.
pub fn demazure_atom<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    let n = gamma.len();
    let mut p = Polynomial::zero(n);
    for_each_anchor_filling(gamma, &Basement::identity(n), n, |g| {
        p.add_term(BMonomial::x(g.exponents(n)), C::one());
    });
    p
}

/// `L_γ`: the sum of `β^{|F|-|γ|} x^F` over `SetSkyFill(γ)`.
///
/// Free entries are independent, so each anchor filling contributes
/// `x^anchors · Π (1 + β x_v)` over its legal free placements.
pub fn lascoux_atom<C: Coefficient>(gamma: &WeakComposition) -> Polynomial<C> {
    let n = gamma.len();
    let mut p = Polynomial::zero(n);
    for_each_anchor_filling(gamma, &Basement::identity(n), n, |g| {
        let mut monomials = vec![BMonomial::x(g.exponents(n))];
        for o in free_entry_options(g, n) {
            let more: Vec<BMonomial> = monomials
                .iter()
                .map(|m| {
                    let mut m = m.clone();
                    m.beta += 1;
                    m.exps[o.value - 1] += 1;
                    m
                })
                .collect();
            monomials.extend(more);
        }
        for m in monomials {
            p.add_term(m, C::one());
        }
    });
    p
}

fn sum_parallel<C: Coefficient>(
    items: Vec<WeakComposition>,
    nvars: usize,
    f: impl Fn(&WeakComposition) -> Polynomial<C> + Sync,
) -> Polynomial<C> {
    items.par_iter().map(&f).reduce(|| Polynomial::zero(nvars), |a, b| &a + &b)
}

fn check_composition(alpha: &WeakComposition, n: usize) -> Result<()> {
    if alpha.parts().contains(&0) {
        return Err(Error::Validity(format!("{alpha} has a zero part")));
    }
    if alpha.len() > n {
        return Err(Error::Dimension(format!("{alpha} has more than {n} parts")));
    }
    Ok(())
}

/// `𝒢_α(x_1..x_n) = Σ_{γ⁺ = α} L_γ` over `γ` with `n` parts.
pub fn qsym_grothendieck<C: Coefficient>(alpha: &WeakComposition, n: usize) -> Result<Polynomial<C>> {
    check_composition(alpha, n)?;
    Ok(sum_parallel(WeakComposition::with_plus(alpha, n), n, lascoux_atom))
}

/// `𝒮_α(x_1..x_n) = Σ_{γ⁺ = α} A_γ`.
pub fn qsym_schur<C: Coefficient>(alpha: &WeakComposition, n: usize) -> Result<Polynomial<C>> {
    check_composition(alpha, n)?;
    Ok(sum_parallel(WeakComposition::with_plus(alpha, n), n, demazure_atom))
}

/// `s_λ(x_1..x_n) = Σ_{λ(γ) = λ} A_γ`. Zero when `λ` has more than `n`
/// nonzero rows.
pub fn schur<C: Coefficient>(lambda: &Partition, n: usize) -> Polynomial<C> {
    let lambda = lambda.trimmed();
    if lambda.num_rows() > n {
        return Polynomial::zero(n);
    }
    let gamma = WeakComposition::from(lambda.padded(n));
    sum_parallel(gamma.rearrangements(), n, demazure_atom)
}

/// `G_λ(x_1..x_n)` as the sum over set-valued reverse tableaux.
pub fn grothendieck<C: Coefficient>(lambda: &Partition, n: usize) -> Polynomial<C> {
    let mut p = Polynomial::zero(n);
    for t in enumerate_set_reverse_tableaux(&lambda.trimmed(), n) {
        p.add_term(t.weight(n), C::one());
    }
    p
}

/// `Σ_{λ(γ) = λ} L_γ` over `γ` with `n` parts.
pub fn grothendieck_from_atoms<C: Coefficient>(lambda: &Partition, n: usize) -> Polynomial<C> {
    let lambda = lambda.trimmed();
    if lambda.num_rows() > n {
        return Polynomial::zero(n);
    }
    let gamma = WeakComposition::from(lambda.padded(n));
    sum_parallel(gamma.rearrangements(), n, lascoux_atom)
}

/// The nonzero `g_{λ,μ}` with `μ` of at most `n` rows.
pub fn lenart_expansion(lambda: &Partition, n: usize) -> BTreeMap<Partition, usize> {
    let lambda = lambda.trimmed();
    let cap = (0..n).map(|i| lambda[i] + i).sum::<usize>();
    crate::tableaux::lenart_shapes(&lambda, n, cap)
        .into_iter()
        .filter_map(|mu| {
            let g = g_coefficient(&lambda, &mu).expect("μ contains λ");
            (g > 0).then_some((mu, g))
        })
        .collect()
}

/// `Σ_μ β^{|μ|-|λ|} g_{λ,μ} s_μ(x_1..x_n)`, with Schur polynomials taken
/// from tableaux rather than atoms.
pub fn lenart_sum<C: Coefficient>(lambda: &Partition, n: usize) -> Polynomial<C> {
    let mut p = Polynomial::zero(n);
    for (mu, g) in lenart_expansion(lambda, n) {
        let beta = mu.size() - lambda.trimmed().size();
        for u in enumerate_ssyt(&mu, n) {
            let mut m = u.weight(n);
            m.beta = beta;
            p.add_term(m, from_count(g));
        }
    }
    p
}
