//! Expansions in the Lascoux atoms `L_γ` and the quasisymmetric
//! Grothendieck polynomials `𝒢_α`, and the classification they give.
//!
//! `L_γ` has `x^γ` as its lexicographically smallest monomial, with
//! coefficient one, and every other monomial is larger with exponents at most
//! `max γ`. Repeatedly cancelling the smallest remaining monomial therefore
//! terminates. The same holds for `𝒢_α`, whose smallest monomial is
//! `x^{(0,…,0,α)}`.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::genfun::{lascoux_atom, qsym_grothendieck};
use crate::polynomial::Polynomial;
use crate::scalar::Coefficient;

/// Read-mostly memo table shared between threads.
pub struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { table: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.table.read().expect("memo lock").get(key) {
            return Arc::clone(v);
        }
        let v = Arc::new(compute());
        Arc::clone(self.table.write().expect("memo lock").entry(key.clone()).or_insert(v))
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Memoized `L_γ` and `𝒢_α`.
pub struct BasisCache<C> {
    atoms: Memo<WeakComposition, Polynomial<C>>,
    qgroth: Memo<(WeakComposition, usize), Polynomial<C>>,
}

impl<C: Coefficient> Default for BasisCache<C> {
    fn default() -> Self {
        BasisCache { atoms: Memo::default(), qgroth: Memo::default() }
    }
}

impl<C: Coefficient> BasisCache<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atom(&self, gamma: &WeakComposition) -> Arc<Polynomial<C>> {
        self.atoms.get_or_insert_with(gamma, || lascoux_atom(gamma))
    }

    pub fn qgroth(&self, alpha: &WeakComposition, n: usize) -> Arc<Polynomial<C>> {
        self.qgroth
            .get_or_insert_with(&(alpha.clone(), n), || qsym_grothendieck(alpha, n).expect("α fits in n variables"))
    }
}

/// `f = Σ_γ c_γ L_γ` with each `c_γ` a polynomial in `β` (`nvars == 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomExpansion<C> {
    pub nvars: usize,
    pub coeffs: BTreeMap<WeakComposition, Polynomial<C>>,
}

fn beta_coeff_json<C: Coefficient>(b: &Polynomial<C>) -> Value {
    Value::Array(
        b.sorted_terms()
            .into_iter()
            .map(|(m, c)| json!({ "b": m.beta, "c": crate::polynomial::coeff_to_number(c) }))
            .collect(),
    )
}

/// `[{"gamma": [...], "coeff": [{"b": k, "c": c}, ...]}, ...]`
pub fn expansion_json<C: Coefficient>(coeffs: &BTreeMap<WeakComposition, Polynomial<C>>) -> Value {
    Value::Array(coeffs.iter().rev().map(|(g, b)| json!({ "gamma": g.parts(), "coeff": beta_coeff_json(b) })).collect())
}

fn is_nonnegative<C: Coefficient>(b: &Polynomial<C>) -> bool {
    b.terms().all(|(_, c)| !c.is_negative())
}

impl<C: Coefficient> AtomExpansion<C> {
    pub fn reconstruct(&self, cache: &BasisCache<C>) -> Polynomial<C> {
        self.coeffs.iter().fold(Polynomial::zero(self.nvars), |acc, (g, b)| {
            &acc + &cache.atom(g).scale_by(b).expect("β-only coefficient")
        })
    }

    pub fn coefficient(&self, gamma: &WeakComposition) -> Polynomial<C> {
        self.coeffs.get(gamma).cloned().unwrap_or_else(|| Polynomial::zero(0))
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(is_nonnegative)
    }

    pub fn to_json(&self) -> Value {
        expansion_json(&self.coeffs)
    }

    fn constant_on(&self, classes: impl Fn(&WeakComposition) -> Vec<WeakComposition>) -> bool {
        self.coeffs.iter().all(|(g, b)| classes(g).iter().all(|h| self.coefficient(h) == *b))
    }
}

pub fn expand_in_atoms_with<C: Coefficient>(f: &Polynomial<C>, cache: &BasisCache<C>) -> AtomExpansion<C> {
    let n = f.nvars();
    let mut rest = f.clone();
    let mut coeffs = BTreeMap::new();
    while let Some(exps) = rest.lex_trailing_exps() {
        let gamma = WeakComposition::new(exps.to_vec());
        let b = rest.x_coefficient(exps);
        let atom = cache.atom(&gamma);
        rest = &rest - &atom.scale_by(&b).expect("β-only coefficient");
        coeffs.insert(gamma, b);
    }
    AtomExpansion { nvars: n, coeffs }
}

/// Expand `f` in the Lascoux atoms with as many parts as `f` has variables.
pub fn expand_in_atoms<C: Coefficient>(f: &Polynomial<C>) -> AtomExpansion<C> {
    expand_in_atoms_with(f, &BasisCache::new())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    General,
    Quasisymmetric,
    Symmetric,
}

impl Symmetry {
    pub fn name(self) -> &'static str {
        match self {
            Symmetry::General => "general",
            Symmetry::Quasisymmetric => "quasisymmetric",
            Symmetry::Symmetric => "symmetric",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<C> {
    pub symmetry: Symmetry,
    /// Every `c_γ` has nonnegative coefficients; for (quasi)symmetric input
    /// this is also `G_λ`- (`𝒢_α`-) positivity.
    pub positive: bool,
    pub expansion: AtomExpansion<C>,
}

/// Symmetric iff `c_γ` is constant on rearrangement classes, quasisymmetric
/// iff it is constant on classes with the same `γ⁺`.
pub fn classify_with<C: Coefficient>(f: &Polynomial<C>, cache: &BasisCache<C>) -> Classification<C> {
    let expansion = expand_in_atoms_with(f, cache);
    let n = f.nvars();
    let symmetry = if expansion.constant_on(|g| g.rearrangements()) {
        Symmetry::Symmetric
    } else if expansion.constant_on(|g| WeakComposition::with_plus(&g.plus(), n)) {
        Symmetry::Quasisymmetric
    } else {
        Symmetry::General
    };
    Classification { symmetry, positive: expansion.is_positive(), expansion }
}

pub fn classify<C: Coefficient>(f: &Polynomial<C>) -> Classification<C> {
    classify_with(f, &BasisCache::new())
}

/// `f = Σ_α c_α 𝒢_α(x_1..x_n)` for quasisymmetric `f`.
pub fn expand_in_qgroth_with<C: Coefficient>(
    f: &Polynomial<C>,
    cache: &BasisCache<C>,
) -> Result<BTreeMap<WeakComposition, Polynomial<C>>> {
    let n = f.nvars();
    if classify_with(f, cache).symmetry == Symmetry::General {
        return Err(Error::NotQuasisymmetric);
    }
    let mut rest = f.clone();
    let mut coeffs = BTreeMap::new();
    while let Some(exps) = rest.lex_trailing_exps() {
        let alpha = WeakComposition::new(exps.to_vec()).plus();
        // the smallest monomial of 𝒢_α is x^{(0,…,0,α)}
        if exps[n - alpha.len()..] != *alpha.parts() {
            return Err(Error::NotQuasisymmetric);
        }
        let b = rest.x_coefficient(exps);
        rest = &rest - &cache.qgroth(&alpha, n).scale_by(&b).expect("β-only coefficient");
        coeffs.insert(alpha, b);
    }
    Ok(coeffs)
}

pub fn expand_in_qgroth<C: Coefficient>(f: &Polynomial<C>) -> Result<BTreeMap<WeakComposition, Polynomial<C>>> {
    expand_in_qgroth_with(f, &BasisCache::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Partition;
    use crate::genfun::{demazure_atom, grothendieck, schur};
    use crate::polynomial::{parse_polynomial, BMonomial};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn poly(s: &str, n: usize) -> P {
        parse_polynomial::<BigInt>(s).unwrap().with_nvars(n).unwrap()
    }

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    fn beta(s: &str) -> P {
        parse_polynomial::<BigInt>(s).unwrap().with_nvars(0).unwrap()
    }

    #[test]
    fn atom_examples() {
        let e = expand_in_atoms(&lascoux_atom::<BigInt>(&wc("120")));
        assert_eq!(e.coeffs, BTreeMap::from([(wc("120"), beta("1"))]));
        let e = expand_in_atoms(&poly("x1*x2^2", 3));
        assert_eq!(e.coeffs, BTreeMap::from([(wc("120"), beta("1")), (wc("220"), beta("-b"))]));
        assert!(expand_in_atoms(&P::zero(3)).coeffs.is_empty());
    }

    #[test]
    fn monomials_expand_with_lemma_shape() {
        let cache = BasisCache::new();
        for gamma in WeakComposition::up_to(3, 4) {
            let e = expand_in_atoms_with(&P::x_power(gamma.parts()), &cache);
            assert_eq!(e.coefficient(&gamma), beta("1"));
            for (delta, b) in &e.coeffs {
                if delta == &gamma {
                    continue;
                }
                assert!(crate::composition::lex_compare(delta.parts(), gamma.parts()).is_gt());
                assert!(delta.max_part() <= gamma.max_part());
                assert!(delta.size() >= gamma.size());
                for (m, _) in b.terms() {
                    assert_eq!(m.beta, delta.size() - gamma.size());
                }
            }
            assert_eq!(e.reconstruct(&cache), P::x_power(gamma.parts()));
        }
    }

    /// Direct coefficient tests, independent of any expansion.
    fn is_symmetric_oracle(f: &P) -> bool {
        (1..f.nvars()).all(|i| f.swap_vars(i) == *f)
    }

    fn is_quasisymmetric_oracle(f: &P) -> bool {
        let n = f.nvars();
        f.terms().all(|(m, c)| {
            let alpha = WeakComposition::new(m.exps.clone()).plus();
            WeakComposition::with_plus(&alpha, n)
                .iter()
                .all(|g| f.coefficient_of(&BMonomial::new(m.beta, g.parts().to_vec())) == *c)
        })
    }

    #[test]
    fn classification_examples() {
        let c = classify(&poly("x1", 2));
        assert_eq!(c.symmetry, Symmetry::General);
        let g = grothendieck::<BigInt>(&"21".parse().unwrap(), 3);
        let c = classify(&g);
        assert_eq!((c.symmetry, c.positive), (Symmetry::Symmetric, true));
        let q = qsym_grothendieck::<BigInt>(&wc("21"), 3).unwrap();
        let c = classify(&q);
        assert_eq!((c.symmetry, c.positive), (Symmetry::Quasisymmetric, true));
        assert!(!classify(&poly("x1*x2^2", 3)).positive);
    }

    #[test]
    fn classification_matches_oracle() {
        let cache = BasisCache::new();
        for lambda in Partition::up_to(4) {
            for n in 1..=4 {
                let s = schur::<BigInt>(&lambda, n);
                assert_eq!(classify_with(&s, &cache).symmetry, Symmetry::Symmetric);
            }
        }
        for len in 2..=3 {
            for gamma in WeakComposition::up_to(len, 3) {
                let a = demazure_atom::<BigInt>(&gamma);
                let c = classify_with(&a, &cache).symmetry;
                let expected = if is_symmetric_oracle(&a) {
                    Symmetry::Symmetric
                } else if is_quasisymmetric_oracle(&a) {
                    Symmetry::Quasisymmetric
                } else {
                    Symmetry::General
                };
                assert_eq!(c, expected, "{gamma}");
                if !gamma.is_partition() && gamma.size() > 0 {
                    assert_ne!(c, Symmetry::Symmetric, "{gamma}");
                }
            }
        }
    }

    #[test]
    fn qgroth_examples() {
        let q = qsym_grothendieck::<BigInt>(&wc("21"), 3).unwrap();
        assert_eq!(expand_in_qgroth(&q).unwrap(), BTreeMap::from([(wc("21"), beta("1"))]));
        let g1 = poly("x1 + x2 + b*x1*x2", 2);
        assert_eq!(expand_in_qgroth(&g1).unwrap(), BTreeMap::from([(wc("1"), beta("1"))]));
        let m1 = poly("x1 + x2", 2);
        let e = expand_in_qgroth(&m1).unwrap();
        let cache = BasisCache::new();
        let back = e.iter().fold(P::zero(2), |acc, (a, b)| &acc + &cache.qgroth(a, 2).scale_by(b).unwrap());
        assert_eq!(back, m1);
        assert!(matches!(expand_in_qgroth(&poly("x1", 2)), Err(Error::NotQuasisymmetric)));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        let monomial = (0usize..=1, proptest::collection::vec(0usize..=3, 3), -2i64..=2);
        proptest::collection::vec(monomial, 0..5).prop_map(|terms| {
            let mut p = P::zero(3);
            for (b, mut e, c) in terms {
                while e.iter().sum::<usize>() > 3 {
                    let k = e.iter().position(|&x| x > 0).unwrap();
                    e[k] -= 1;
                }
                p.add_term(BMonomial::new(b, e), BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn atom_expansion_round_trips(f in small_poly()) {
            let cache = BasisCache::new();
            let e = expand_in_atoms_with(&f, &cache);
            prop_assert_eq!(e.reconstruct(&cache), f);
        }

        #[test]
        fn qgroth_expansion_recovers_coefficients(cs in proptest::collection::vec(-2i64..=2, 7)) {
            let alphas: Vec<WeakComposition> = ["1", "2", "11", "3", "21", "12", "111"].iter().map(|s| wc(s)).collect();
            let cache = BasisCache::new();
            let mut f = P::zero(3);
            let mut expected = BTreeMap::new();
            for (a, &c) in alphas.iter().zip(&cs) {
                if c != 0 {
                    f = &f + &cache.qgroth(a, 3).scale(&BigInt::from(c));
                    expected.insert(a.clone(), P::constant(BigInt::from(c), 0));
                }
            }
            prop_assert_eq!(expand_in_qgroth_with(&f, &cache).unwrap(), expected);
        }
    }
}
