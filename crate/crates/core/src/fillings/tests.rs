use std::collections::HashSet;

use num_bigint::BigInt;

use super::*;
use crate::polynomial::{parse_polynomial, Polynomial};

fn wc(s: &str) -> WeakComposition {
    s.parse().unwrap()
}

fn generating_function(fillings: &[SetFilling], nvars: usize) -> Polynomial<BigInt> {
    let mut p = Polynomial::zero(nvars);
    for f in fillings {
        let mut m = f.content_monomial();
        m.exps.resize(nvars, 0);
        p.add_term(m, BigInt::from(1));
    }
    p
}

fn poly(s: &str, n: usize) -> Polynomial<BigInt> {
    parse_polynomial::<BigInt>(s).unwrap().with_nvars(n).unwrap()
}

#[test]
fn figure_one_counts() {
    for (gamma, count) in [("210", 1), ("201", 2), ("120", 2), ("021", 6), ("102", 8), ("012", 8)] {
        assert_eq!(enumerate_set_skyline(&wc(gamma)).len(), count, "{gamma}");
    }
}

#[test]
fn figure_one_polynomials() {
    let cases = [
        ("210", "x1^2*x2"),
        ("120", "x1*x2^2 + b*x1^2*x2^2"),
        ("201", "x1^2*x3 + b*x1^2*x2*x3"),
        ("021", "x1*x2*x3 + x2^2*x3 + 2*b*x1*x2^2*x3 + b*x1^2*x2*x3 + b^2*x1^2*x2^2*x3"),
    ];
    for (gamma, expected) in cases {
        let fillings = enumerate_set_skyline(&wc(gamma));
        assert_eq!(generating_function(&fillings, 3), poly(expected, 3), "{gamma}");
    }
}

#[test]
fn figure_one_fillings_are_members() {
    let l201 = enumerate_set_skyline(&wc("201"));
    assert!(l201.contains(&SetFilling::from_sets(vec![vec![vec![1], vec![1]], vec![], vec![vec![3, 2]]])));
    let l012 = SetFilling::from_sets(vec![vec![], vec![vec![2, 1]], vec![vec![3], vec![3]]]);
    assert!(is_semistandard_set_skyline(&l012));
    assert_eq!(l012.content_monomial(), BMonomial::new(1, vec![1, 1, 2]));
}

#[test]
fn remark_two_five_triples() {
    let bad = SetFilling::ordinary(&[&[1, 1], &[], &[2]]);
    let classes = classify_triples(&bad);
    let culprit = classes
        .iter()
        .find(|t| t.kind == TripleKind::TypeB && t.b == (2, 0) && t.c == (3, 0) && t.a == (3, 1))
        .unwrap();
    assert_eq!(culprit.verdict, TripleVerdict::Coinversion);
    assert!(!is_semistandard_skyline(&bad));

    let good = SetFilling::from_sets(vec![vec![vec![1], vec![1]], vec![], vec![vec![3, 2]]]);
    assert!(classify_triples(&good).iter().all(|t| t.verdict == TripleVerdict::Inversion));
    assert!(is_semistandard_set_skyline(&good));

    assert!(classify_triples(&SetFilling::ordinary(&[&[1, 1]])).is_empty());
}

#[test]
fn free_entry_must_sit_highest() {
    let f = SetFilling::from_sets(vec![vec![], vec![vec![2], vec![2]], vec![vec![3, 1]]]);
    assert!(is_semistandard_set_skyline(&f));
    let g = SetFilling::from_sets(vec![vec![], vec![vec![2], vec![2, 1]], vec![vec![3, 1]]]);
    assert!(is_semistandard_set_skyline(&g));
    let moved = SetFilling::from_sets(vec![vec![vec![1]], vec![vec![2]], vec![vec![3, 1]]]);
    // 1 is already an anchor of column 1
    assert!(!is_semistandard_set_skyline(&moved));
    let lower = SetFilling::from_sets(vec![vec![], vec![vec![2], vec![2]], vec![vec![3], vec![3, 1]]]);
    assert!(!is_semistandard_set_skyline(&lower));
}

#[test]
fn introduction_displays() {
    let left = SetFilling::from_sets(vec![
        vec![vec![1]],
        vec![],
        vec![vec![3, 2], vec![2], vec![2, 1]],
        vec![vec![4], vec![4, 3, 1]],
    ]);
    assert!(is_semistandard_set_skyline(&left));
    assert_eq!(left.content_monomial(), BMonomial::new(4, vec![3, 3, 2, 2]));

    let right = SetFilling::from_sets(vec![
        vec![vec![4], vec![3]],
        vec![],
        vec![vec![3, 2], vec![2], vec![2, 1]],
        vec![vec![1]],
    ])
    .with_basement(Basement::Values(vec![5, 4, 3, 2]))
    .unwrap();
    assert!(is_semistandard_set_skyline(&right));
    assert_eq!(right.content_monomial(), BMonomial::new(2, vec![2, 3, 2, 1]));
}

#[test]
fn ordinary_checks() {
    assert!(is_semistandard_skyline(&SetFilling::ordinary(&[&[1, 1], &[2], &[]])));
    assert!(!is_semistandard_skyline(&SetFilling::ordinary(&[&[1], &[1]])));
}

/// Every assignment of nonempty subsets of `{1..b_r}` to the boxes of row
/// `r`, filtered by the predicate.
fn brute_force(gamma: &WeakComposition) -> HashSet<SetFilling> {
    let n = gamma.len();
    let cells: Vec<usize> = (1..=n).flat_map(|r| std::iter::repeat_n(r, gamma[r - 1])).collect();
    let mut out = HashSet::new();
    let mut choice = vec![1usize; cells.len()];
    loop {
        let mut rows: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        for (k, &r) in cells.iter().enumerate() {
            rows[r - 1].push((1..=r).filter(|v| choice[k] >> (v - 1) & 1 == 1).collect());
        }
        let f = SetFilling::from_sets(rows);
        if is_semistandard_set_skyline(&f) {
            out.insert(f);
        }
        let mut k = 0;
        loop {
            if k == cells.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < 1 << cells[k] {
                break;
            }
            choice[k] = 1;
            k += 1;
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for len in 1..=3 {
        for gamma in WeakComposition::up_to(len, 4) {
            let listed = enumerate_set_skyline(&gamma);
            let set: HashSet<SetFilling> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates for {gamma}");
            assert_eq!(set, brute_force(&gamma), "{gamma}");
        }
    }
}

#[test]
fn invariants_of_enumerated_fillings() {
    for len in 1..=4 {
        for gamma in WeakComposition::up_to(len, 4) {
            let listed = enumerate_set_skyline(&gamma);
            let ordinary: HashSet<SetFilling> = listed.iter().filter(|f| f.is_single_valued()).cloned().collect();
            let anchors: HashSet<SetFilling> = listed.iter().map(SetFilling::anchors).collect();
            assert_eq!(ordinary, anchors);
            for f in &listed {
                assert!(is_semistandard_skyline(&f.anchors()));
                for ((r, _), b) in f.boxes() {
                    assert!(b.values().iter().all(|&v| v <= r));
                }
                let m = f.content_monomial();
                assert!(m.exps.iter().all(|&e| e <= gamma.max_part()));
                // dropping any one free entry keeps the filling valid
                for ((r, c), b) in f.boxes() {
                    for &v in b.free() {
                        let mut rows: Vec<Vec<Vec<usize>>> =
                            f.rows().iter().map(|row| row.iter().map(|s| s.values().to_vec()).collect()).collect();
                        rows[r - 1][c - 1].retain(|&x| x != v);
                        assert!(is_semistandard_set_skyline(&SetFilling::from_sets(rows)));
                    }
                }
            }
        }
    }
}

#[test]
fn composition_tableaux_small() {
    assert_eq!(enumerate_composition_tableaux(&wc("1"), 1).len(), 1);
    let two = enumerate_composition_tableaux(&wc("1"), 2);
    assert_eq!(two.len(), 3);
    let column =
        SetFilling::new(wc("11"), None, Basement::Absent, vec![vec![EntrySet::single(2)], vec![EntrySet::single(1)]])
            .unwrap();
    assert!(!is_semistandard_composition_tableau(&column));
    for f in &two {
        assert!(is_semistandard_composition_tableau(f));
    }
}

#[test]
fn composition_tableaux_match_skyline_fillings() {
    for n in 1..=4 {
        for size in 1..=4 {
            for alpha in (1..=n).flat_map(|k| WeakComposition::all(k, size)) {
                if alpha.parts().contains(&0) {
                    continue;
                }
                let tableaux = enumerate_composition_tableaux(&alpha, n);
                let lhs = generating_function(&tableaux, n);
                let mut rhs = Polynomial::zero(n);
                for gamma in WeakComposition::with_plus(&alpha, n) {
                    rhs = &rhs + &generating_function(&enumerate_set_skyline(&gamma), n);
                }
                assert_eq!(lhs, rhs, "{alpha} in {n} variables");
            }
        }
    }
}

#[test]
fn json_round_trip() {
    for gamma in ["021", "102", "1302"] {
        for f in enumerate_set_skyline(&wc(gamma)) {
            assert_eq!(SetFilling::from_json(&f.to_json()).unwrap(), f);
        }
    }
    let tab = &enumerate_composition_tableaux(&wc("21"), 3)[0];
    assert_eq!(&SetFilling::from_json(&tab.to_json()).unwrap(), tab);
}

#[test]
fn render_layout() {
    let f = SetFilling::from_sets(vec![vec![vec![1], vec![1]], vec![], vec![vec![3, 2]]]);
    assert_eq!(f.to_string(), "[1] 1 1\n[2]\n[3] 3,2");
}
