use super::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn reverse_tableaux_small() {
    let one = enumerate_set_reverse_tableaux(&part("1"), 2);
    assert_eq!(one.len(), 3);
    assert!(one.contains(&SetTableau::from_sets(Convention::Reverse, vec![vec![vec![2, 1]]]).unwrap()));
    let column = enumerate_set_reverse_tableaux(&part("11"), 2);
    assert_eq!(column, vec![SetTableau::from_rows(Convention::Reverse, &[&[2], &[1]]).unwrap()]);
    assert!(enumerate_set_reverse_tableaux(&part("111"), 2).is_empty());
}

#[test]
fn worked_examples_are_members() {
    let rt = SetTableau::from_sets(
        Convention::Reverse,
        vec![vec![vec![5], vec![4, 3], vec![2, 1]], vec![vec![4], vec![2, 1]], vec![vec![3, 2]], vec![vec![1]]],
    )
    .unwrap();
    assert!(enumerate_set_reverse_tableaux(&part("3211"), 5).contains(&rt));

    let f =
        SetTableau::from_sets(Convention::Increasing, vec![vec![vec![1], vec![1, 2, 4], vec![4]], vec![vec![4, 5]]])
            .unwrap();
    assert!(enumerate_set_ssyt(&part("31"), 5).contains(&f));
}

#[test]
fn ssyt_small() {
    let one = enumerate_set_ssyt(&part("1"), 2);
    assert_eq!(one.len(), 3);
    assert_eq!(
        enumerate_set_ssyt(&part("11"), 2),
        vec![SetTableau::from_rows(Convention::Increasing, &[&[1], &[2]]).unwrap()]
    );
}

/// Brute force: every assignment of nonempty subsets of `1..=n`, filtered
/// by the semistandard predicate.
fn brute_force(lambda: &Partition, n: usize, convention: Convention) -> Vec<SetTableau> {
    let cells = lambda.size();
    let mut out = Vec::new();
    let mut choice = vec![1u64; cells];
    'outer: loop {
        let mut it = choice.iter();
        let rows: Vec<Vec<EntrySet>> = lambda
            .trimmed()
            .parts()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        let m = it.next().unwrap();
                        EntrySet::new((1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect()).unwrap()
                    })
                    .collect()
            })
            .collect();
        if let Ok(t) = SetTableau::new(lambda.clone(), Partition::empty(), convention, rows) {
            out.push(t);
        }
        for c in choice.iter_mut().take(cells) {
            *c += 1;
            if *c < 1 << n {
                continue 'outer;
            }
            *c = 1;
        }
        return out;
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for lambda in Partition::up_to(3) {
        for n in 1..=3 {
            for conv in [Convention::Reverse, Convention::Increasing] {
                let mut a = enumerate_set_tableaux(&lambda, &Partition::empty(), conv, n, false).unwrap();
                let mut b = brute_force(&lambda, n, conv);
                a.sort_by_key(|t| t.to_json().to_string());
                b.sort_by_key(|t| t.to_json().to_string());
                assert_eq!(a, b, "{lambda:?} n={n} {conv:?}");
            }
        }
    }
}

#[test]
fn conventions_are_equinumerous() {
    for lambda in Partition::up_to(4) {
        for n in 1..=4 {
            let rt = enumerate_set_reverse_tableaux(&lambda, n);
            assert_eq!(rt.len(), enumerate_set_ssyt(&lambda, n).len());
            for t in &rt {
                let a = t.anchors();
                assert!(a.is_semistandard() && a.is_single_valued());
            }
        }
    }
}

#[test]
fn lenart_coefficients() {
    assert_eq!(g_coefficient(&part("1"), &part("11")).unwrap(), 1);
    assert_eq!(g_coefficient(&part("1"), &part("2")).unwrap(), 0);
    assert_eq!(g_coefficient(&part("21"), &part("21")).unwrap(), 1);
    assert!(matches!(g_coefficient(&part("2"), &part("11")), Err(Error::Containment { .. })));
}

#[test]
fn lenart_pairs_are_valid() {
    for lambda in Partition::up_to(3) {
        let pairs = enumerate_lenart_pairs(&lambda, 3, lambda.size() + 3);
        for p in &pairs {
            assert!(p.is_valid());
            assert_eq!(LenartPair::from_json(&p.to_json()).unwrap(), *p);
        }
        let empty_t = pairs.iter().filter(|p| p.t.num_boxes() == 0).count();
        assert_eq!(empty_t, enumerate_ssyt(&lambda, 3).len());
    }
}

#[test]
fn lenart_shapes_cover_all_supported_mu() {
    // every μ ⊇ λ within the bounds that carries a T is produced
    let lambda = part("21");
    let shapes = lenart::lenart_shapes(&lambda, 4, 8);
    for mu in Partition::up_to(8) {
        if mu.num_rows() <= 4 && mu.contains(&lambda) && g_coefficient(&lambda, &mu).unwrap() > 0 {
            assert!(shapes.contains(&mu), "{mu:?}");
        }
    }
}

#[test]
fn json_round_trip() {
    for t in enumerate_set_reverse_tableaux(&part("21"), 3) {
        assert_eq!(SetTableau::from_json(&t.to_json()).unwrap(), t);
    }
}
