use std::collections::BTreeMap;

use lascoux_core::bijections::{crowd, rho, rho_inv, uncrowd};
use lascoux_core::expansion::{classify, expand_in_atoms, expand_in_qgroth, Symmetry};
use lascoux_core::fillings::enumerate_set_skyline;
use lascoux_core::genfun::{grothendieck, lascoux_atom, qsym_grothendieck};
use lascoux_core::genomic::{enumerate_genomic_fillings, genomic_structure_constant};
use lascoux_core::operators::lascoux_atom_op;
use lascoux_core::polynomial::{from_json, parse_with_nvars, to_json};
use lascoux_core::tableaux::enumerate_set_ssyt;
use lascoux_core::{
    BBasisCache, BMonomial, BPolynomial, Convention, GenomicFilling, Partition, SetFilling, SetTableau,
    SmallPolynomial, WeakComposition,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn wc(s: &str) -> WeakComposition {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn poly(s: &str, n: usize) -> BPolynomial {
    parse_with_nvars(s, n).unwrap()
}

#[test]
fn printed_atoms_in_three_variables() {
    assert_eq!(lascoux_atom::<BigInt>(&wc("210")), poly("x1^2*x2", 3));
    assert_eq!(lascoux_atom::<BigInt>(&wc("120")), poly("x1*x2^2 + b*x1^2*x2^2", 3));
    assert_eq!(
        lascoux_atom::<BigInt>(&wc("021")),
        poly("x1*x2*x3 + x2^2*x3 + 2*b*x1*x2^2*x3 + b*x1^2*x2*x3 + b^2*x1^2*x2^2*x3", 3)
    );
}

#[test]
fn filling_counts_for_rearrangements_of_210() {
    let counts: Vec<usize> =
        ["210", "201", "120", "102", "021", "012"].iter().map(|g| enumerate_set_skyline(&wc(g)).len()).collect();
    assert_eq!(counts, vec![1, 2, 2, 8, 6, 8]);
}

#[test]
fn machine_and_big_coefficients_agree() {
    for gamma in WeakComposition::up_to(3, 4) {
        let small: SmallPolynomial = lascoux_atom(&gamma);
        let big: BPolynomial = lascoux_atom(&gamma);
        assert_eq!(small.map_coefficients(|c| BigInt::from(*c)), big, "{gamma}");
    }
}

/// Set-valued tableaux by brute force: every box takes any nonempty subset
/// of `1..=n`, and the max/min comparisons are checked directly.
fn grothendieck_oracle(lambda: &Partition, n: usize) -> BPolynomial {
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let subsets: Vec<Vec<usize>> =
        (1u32..1 << n).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect();
    let mut out = BPolynomial::zero(n);
    let mut choice = vec![0usize; cells.len()];
    loop {
        let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|k| &subsets[choice[k]]);
        let ok = cells.iter().all(|&(r, c)| {
            let s = at(r, c).unwrap();
            let row_ok = c == 0 || at(r, c - 1).unwrap().iter().max() <= s.iter().min();
            let col_ok = r == 0 || at(r - 1, c).unwrap().iter().max() < s.iter().min();
            row_ok && col_ok
        });
        if ok {
            let mut exps = vec![0; n];
            let mut entries = 0;
            for &k in &choice {
                for &v in &subsets[k] {
                    exps[v - 1] += 1;
                    entries += 1;
                }
            }
            out.add_term(BMonomial::new(entries - cells.len(), exps), BigInt::from(1));
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < subsets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn grothendieck_matches_brute_force_and_atom_sum() {
    for lambda in Partition::up_to(3) {
        for n in 1..=3 {
            let g: BPolynomial = grothendieck(&lambda, n);
            if lambda.num_rows() <= n {
                assert_eq!(g, grothendieck_oracle(&lambda, n), "λ={lambda:?} n={n}");
            }
            let mut sum = BPolynomial::zero(n);
            for gamma in WeakComposition::all(n, lambda.size()) {
                if gamma.lambda().trimmed() == lambda.trimmed() {
                    sum = &sum + &lascoux_atom(&gamma);
                }
            }
            assert_eq!(g, sum, "λ={lambda:?} n={n}");
        }
    }
}

#[test]
fn fillings_and_operators_agree_on_small_atoms() {
    for gamma in WeakComposition::up_to(3, 4) {
        assert_eq!(lascoux_atom::<BigInt>(&gamma), lascoux_atom_op::<BigInt>(&gamma), "{gamma}");
    }
}

#[test]
fn grothendieck_expansions_and_classification() {
    let g: BPolynomial = grothendieck(&part("21"), 3);
    let e = expand_in_atoms(&g);
    let support: Vec<String> = e.coeffs.keys().map(|k| k.to_string()).collect();
    assert_eq!(support, vec!["012", "021", "102", "120", "201", "210"]);
    assert!(e.coeffs.values().all(|c| *c == BPolynomial::one(0)));
    let c = classify(&g);
    assert_eq!(c.symmetry, Symmetry::Symmetric);
    assert!(c.positive);

    let q: BPolynomial = qsym_grothendieck(&wc("12"), 3).unwrap();
    assert_eq!(classify(&q).symmetry, Symmetry::Quasisymmetric);
    let back = expand_in_qgroth(&q).unwrap();
    assert_eq!(back.len(), 1);
    assert_eq!(back.get(&wc("12")), Some(&BPolynomial::one(0)));

    assert_eq!(classify(&poly("x1", 3)).symmetry, Symmetry::General);
    assert!(expand_in_qgroth(&poly("x1", 3)).is_err());
}

#[test]
fn genomic_witnesses_round_trip_through_json() {
    let fillings = enumerate_genomic_fillings(&wc("102"), &part("21"), &wc("314")).unwrap();
    assert_eq!(fillings.len(), 2);
    for f in &fillings {
        let text = f.to_json().to_string();
        assert!(text.starts_with(r#"{"shape":[3,1,4],"inner":[1,0,2],"boxes":"#), "{text}");
        let back = GenomicFilling::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(&back, f);
    }
    // too few boxes for any filling
    assert_eq!(genomic_structure_constant(&wc("102"), &part("21"), &wc("202")).unwrap(), 0);
}

#[test]
fn uncrowding_the_set_valued_tableau() {
    let t =
        SetTableau::from_sets(Convention::Increasing, vec![vec![vec![1], vec![1, 2, 4], vec![4]], vec![vec![4, 5]]])
            .unwrap();
    let pair = uncrowd(&t).unwrap();
    assert_eq!(pair.mu(), &part("3211"));
    assert_eq!(crowd(&pair).unwrap(), t);
}

fn weak_composition(len: usize, max_size: usize) -> impl Strategy<Value = WeakComposition> {
    proptest::collection::vec(0usize..=max_size, len)
        .prop_filter("size bound", move |v| v.iter().sum::<usize>() <= max_size)
        .prop_map(WeakComposition::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_json_round_trips(gamma in weak_composition(3, 4)) {
        let p: BPolynomial = lascoux_atom(&gamma);
        prop_assert_eq!(from_json::<BigInt>(&to_json(&p)).unwrap(), p.clone());
        let text = p.to_string();
        prop_assert_eq!(parse_with_nvars::<BigInt>(&text, 3).unwrap(), p);
    }

    #[test]
    fn skyline_fillings_survive_rho(gamma in weak_composition(3, 3)) {
        for f in enumerate_set_skyline(&gamma) {
            let t = rho(&f).unwrap();
            let back: SetFilling = rho_inv(&t, 3).unwrap();
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn set_ssyt_survive_uncrowding(lam in 0usize..4) {
        let lambda = Partition::up_to(2)[lam.min(3)].clone();
        for t in enumerate_set_ssyt(&lambda, 3) {
            let pair = uncrowd(&t).unwrap();
            prop_assert!(pair.is_valid());
            prop_assert_eq!(crowd(&pair).unwrap(), t);
        }
    }

    #[test]
    fn atom_expansion_reconstructs(coeffs in proptest::collection::vec(-2i64..=2, 4)) {
        let cache = BBasisCache::new();
        let basis = [wc("100"), wc("010"), wc("110"), wc("021")];
        let mut f = BPolynomial::zero(3);
        let mut expected = BTreeMap::new();
        for (g, c) in basis.iter().zip(&coeffs) {
            f = &f + &lascoux_atom::<BigInt>(g).scale(&BigInt::from(*c));
            if *c != 0 {
                expected.insert(g.clone(), BPolynomial::constant(BigInt::from(*c), 0));
            }
        }
        let e = expand_in_atoms(&f);
        prop_assert_eq!(&e.coeffs, &expected);
        prop_assert_eq!(e.reconstruct(&cache), f);
    }
}
