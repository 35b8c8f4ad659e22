//! Reproducible identity checks. Each check enumerates its instances in a
//! fixed order, evaluates them in parallel and reports every failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use lascoux_core::bijections::{crowd, rho, rho_inv, uncrowd};
use lascoux_core::expansion::{classify_with, expand_in_atoms_with, expand_in_qgroth_with, BasisCache, Symmetry};
use lascoux_core::fillings::{
    enumerate_composition_tableaux, enumerate_set_fillings, enumerate_set_skyline, is_semistandard_set_skyline,
};
use lascoux_core::genfun::{
    demazure_atom, grothendieck, grothendieck_from_atoms, lascoux_atom, lenart_sum, qsym_grothendieck,
};
use lascoux_core::genomic::{enumerate_genomic_fillings, verify_conjecture_54, GenomicOptions, Lattice};
use lascoux_core::operators::{
    apply, apply_reduced_word, key_polynomial, lascoux_atom_op, lascoux_polynomial, omega_decomposition, OperatorKind,
};
use lascoux_core::tableaux::{enumerate_lenart_pairs, enumerate_set_reverse_tableaux, enumerate_set_ssyt};
use lascoux_core::{BMonomial, BPolynomial, Basement, Convention, Partition, SetFilling, SetTableau, WeakComposition};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

type P = BPolynomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    Figure1,
    Thm13,
    Rho,
    Eq1,
    Uncrowd,
    Lenart,
    Ops,
    Thm51,
    Conj52,
    Conj53,
    Conj54,
    Bases,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Figure1,
        Check::Thm13,
        Check::Rho,
        Check::Eq1,
        Check::Uncrowd,
        Check::Lenart,
        Check::Ops,
        Check::Thm51,
        Check::Conj52,
        Check::Conj53,
        Check::Conj54,
        Check::Bases,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Figure1 => "figure1",
            Check::Thm13 => "thm13",
            Check::Rho => "rho",
            Check::Eq1 => "eq1",
            Check::Uncrowd => "uncrowd",
            Check::Lenart => "lenart",
            Check::Ops => "ops",
            Check::Thm51 => "thm51",
            Check::Conj52 => "conj52",
            Check::Conj53 => "conj53",
            Check::Conj54 => "conj54",
            Check::Bases => "bases",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Optional overrides of a check's default range.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_boxes: Option<usize>,
    pub max_parts: Option<usize>,
    pub vars: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(instance: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Failure { instance: instance.to_string(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub check_name: String,
    pub instances_run: usize,
    pub failures: Vec<Failure>,
    pub notices: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check_name": self.check_name,
            "instances_run": self.instances_run,
            "failures": self.failures.iter().map(|f| json!({
                "instance": f.instance,
                "expected": f.expected,
                "actual": f.actual,
            })).collect::<Vec<_>>(),
            "notices": self.notices,
            "elapsed_ms": self.elapsed_ms as u64,
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check      {}", self.check_name)?;
        writeln!(f, "instances  {}", self.instances_run)?;
        writeln!(f, "failures   {}", self.failures.len())?;
        writeln!(f, "elapsed_ms {}", self.elapsed_ms)?;
        for n in &self.notices {
            writeln!(f, "notice: {n}")?;
        }
        for x in &self.failures {
            writeln!(f, "FAIL {}\n  expected {}\n  actual   {}", x.instance, x.expected, x.actual)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: Vec<Failure>,
    notices: Vec<String>,
}

impl Tally {
    /// One instance per item; `f` returns the failures of that instance.
    fn run<I: Sync>(&mut self, items: &[I], f: impl Fn(&I) -> Vec<Failure> + Sync + Send) {
        self.instances += items.len();
        let found: Vec<Vec<Failure>> = items.par_iter().map(f).collect();
        self.failures.extend(found.into_iter().flatten());
    }

    fn single(&mut self, failures: Vec<Failure>) {
        self.instances += 1;
        self.failures.extend(failures);
    }
}

fn same<T: PartialEq + fmt::Display>(instance: impl fmt::Display, expected: &T, actual: &T) -> Vec<Failure> {
    if expected == actual {
        Vec::new()
    } else {
        vec![Failure::new(instance, expected, actual)]
    }
}

fn poly(s: &str, n: usize) -> P {
    lascoux_core::polynomial::parse_with_nvars(s, n).expect("literal polynomial")
}

fn wc(s: &str) -> WeakComposition {
    s.parse().expect("literal composition")
}

fn filling_sum(fillings: &[SetFilling], n: usize) -> P {
    let mut p = P::zero(n);
    for f in fillings {
        let mut m = f.content_monomial();
        m.exps.resize(n, 0);
        p.add_term(m, BigInt::from(1));
    }
    p
}

/// All weak compositions with `1..=max_parts` parts and at most `max_boxes`
/// boxes, shortest first.
fn compositions(max_parts: usize, max_boxes: usize) -> Vec<WeakComposition> {
    (1..=max_parts).flat_map(|len| WeakComposition::up_to(len, max_boxes)).collect()
}

/// Compositions (no zero parts) with at most `max_parts` parts and at most
/// `max_boxes` boxes.
fn strict_compositions(max_parts: usize, max_boxes: usize) -> Vec<WeakComposition> {
    Partition::up_to(max_boxes)
        .into_iter()
        .filter(|l| l.num_rows() <= max_parts)
        .flat_map(|l| WeakComposition::from(l.trimmed()).rearrangements())
        .collect()
}

pub fn run_check(check: Check, bounds: Bounds) -> VerifyReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    match check {
        Check::Figure1 => figure1(&mut tally),
        Check::Thm13 => thm13(&mut tally, bounds),
        Check::Rho => rho_check(&mut tally, bounds),
        Check::Eq1 => eq1(&mut tally, bounds),
        Check::Uncrowd => uncrowd_check(&mut tally, bounds),
        Check::Lenart => lenart(&mut tally, bounds),
        Check::Ops => ops(&mut tally, bounds),
        Check::Thm51 => thm51(&mut tally, bounds),
        Check::Conj52 => conj52(&mut tally, bounds),
        Check::Conj53 => conj53(&mut tally, bounds),
        Check::Conj54 => conj54(&mut tally, bounds),
        Check::Bases => bases(&mut tally, bounds),
    }
    VerifyReport {
        check_name: check.name().to_string(),
        instances_run: tally.instances,
        failures: tally.failures,
        notices: tally.notices,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Rows separated by `/`, boxes by spaces, each box's entries as digits.
fn parse_filling(s: &str) -> SetFilling {
    let rows = s
        .split('/')
        .map(|row| {
            row.split_whitespace()
                .map(|cell| cell.chars().map(|ch| ch.to_digit(10).expect("digit") as usize).collect())
                .collect()
        })
        .collect();
    SetFilling::from_sets(rows)
}

struct FigureRow {
    gamma: &'static str,
    printed: &'static str,
    printed_is_exact: bool,
    fillings: &'static [&'static str],
    /// Drawn fillings that break row weak decrease, with their intended form.
    misdrawn: &'static [(&'static str, &'static str)],
}

const FIGURE_ONE: [FigureRow; 6] = [
    FigureRow { gamma: "210", printed: "x1^2*x2", printed_is_exact: true, fillings: &["1 1/2/"], misdrawn: &[] },
    FigureRow {
        gamma: "201",
        printed: "x1^2*x2",
        printed_is_exact: false,
        fillings: &["1 1//3", "1 1//32"],
        misdrawn: &[],
    },
    FigureRow {
        gamma: "120",
        printed: "x1*x2^2 + b*x1^2*x2^2",
        printed_is_exact: true,
        fillings: &["1/2 2/", "1/21 2/"],
        misdrawn: &[("1/21 2/", "1/2 21/")],
    },
    FigureRow {
        gamma: "021",
        printed: "x1*x2*x3 + x2^2*x3 + 2*b*x1*x2^2*x3 + b*x1^2*x2*x3 + b^2*x1^2*x2^2*x3",
        printed_is_exact: true,
        fillings: &["/2 1/3", "/2 2/3", "/2 2/31", "/2 21/3", "/2 21/31", "/21 1/3"],
        misdrawn: &[],
    },
    FigureRow {
        gamma: "102",
        printed: "x1*x2*x3 + x1*x3^2 + b*x1^2*x2*x3 + b*x1^2*x3^2 + b*x1*x2*x3^2 + b*x1*x2^2*x3 \
                  + b^2*x1^2*x2*x3^3 + b^2*x1^2*x2^2*x3",
        printed_is_exact: false,
        fillings: &["1//3 2", "1//3 3", "1//3 21", "1//3 31", "1//3 32", "1//3 321", "1//32 2", "1//32 21"],
        misdrawn: &[],
    },
    FigureRow {
        gamma: "012",
        printed: "x2*x3^2 + 2*b*x1*x2*x3^2 + b*x2^2*x3^2 + b^2*x1*x2^2*x3^2 + b^2*x1^2*x2*x3^2 \
                  + b^2*x1*x2^2*x3^2 + b^3*x1^2*x2^2*x3^2",
        printed_is_exact: false,
        fillings: &["/2/3 3", "/2/3 31", "/2/3 32", "/2/3 321", "/21/3 3", "/21/3 31", "/21/3 32", "/21/3 321"],
        misdrawn: &[],
    },
];

fn figure1(tally: &mut Tally) {
    for row in &FIGURE_ONE {
        let gamma = wc(row.gamma);
        let enumerated = enumerate_set_skyline(&gamma);
        let mut failures = same(format!("L_{} filling count", row.gamma), &row.fillings.len(), &enumerated.len());
        let mut drawn: Vec<SetFilling> = row.fillings.iter().map(|s| parse_filling(s)).collect();
        for (bad, good) in row.misdrawn {
            let (bad, good) = (parse_filling(bad), parse_filling(good));
            if is_semistandard_set_skyline(&bad) || bad.content_monomial() != good.content_monomial() {
                failures.push(Failure::new(format!("L_{} drawn filling", row.gamma), "a transposed cell", &bad));
            }
            tally.notices.push(format!(
                "L_{}: the drawn filling {} breaks row weak decrease; read as {}",
                row.gamma,
                bad.to_string().replace('\n', " "),
                good.to_string().replace('\n', " ")
            ));
            for f in drawn.iter_mut().filter(|f| **f == bad) {
                *f = good.clone();
            }
        }
        let printed: BTreeSet<String> = drawn.iter().map(|f| f.to_string()).collect();
        let found: BTreeSet<String> = enumerated.iter().map(|f| f.to_string()).collect();
        if printed != found {
            failures.push(Failure::new(
                format!("L_{} fillings", row.gamma),
                printed.iter().cloned().collect::<Vec<_>>().join(" | "),
                found.iter().cloned().collect::<Vec<_>>().join(" | "),
            ));
        }
        let from_fillings = filling_sum(&enumerated, 3);
        let generating = lascoux_atom::<BigInt>(&gamma);
        failures.extend(same(format!("L_{} generating function", row.gamma), &from_fillings, &generating));
        let printed_poly = poly(row.printed, 3);
        if row.printed_is_exact {
            failures.extend(same(format!("L_{} printed polynomial", row.gamma), &printed_poly, &generating));
        } else if printed_poly != generating {
            tally.notices.push(format!(
                "L_{}: the printed polynomial {} is a typo; its fillings give {}",
                row.gamma, printed_poly, generating
            ));
        } else {
            tally.notices.push(format!(
                "L_{}: the printed polynomial repeats a term but agrees with its fillings: {}",
                row.gamma, generating
            ));
        }
        tally.single(failures);
    }
}

fn thm13(tally: &mut Tally, bounds: Bounds) {
    let (k, n) = (bounds.max_boxes.unwrap_or(4), bounds.vars.unwrap_or(4));
    let items: Vec<(Partition, usize)> =
        Partition::up_to(k).into_iter().flat_map(|l| (1..=n).map(move |m| (l.clone(), m))).collect();
    tally.run(&items, |(lambda, m)| {
        same(
            format!("G_{lambda} in {m} variables"),
            &grothendieck::<BigInt>(lambda, *m),
            &grothendieck_from_atoms(lambda, *m),
        )
    });
}

fn eq1(tally: &mut Tally, bounds: Bounds) {
    let (k, n) = (bounds.max_boxes.unwrap_or(4), bounds.vars.unwrap_or(4));
    let alphas: Vec<(WeakComposition, usize)> =
        (1..=n).flat_map(|m| strict_compositions(m, k).into_iter().map(move |a| (a, m))).collect();
    tally.run(&alphas, |(alpha, m)| {
        let from_atoms = qsym_grothendieck::<BigInt>(alpha, *m).expect("α fits");
        let from_tableaux = filling_sum(&enumerate_composition_tableaux(alpha, *m), *m);
        same(format!("𝒢_{alpha} in {m} variables"), &from_atoms, &from_tableaux)
    });
    let lambdas: Vec<(Partition, usize)> =
        Partition::up_to(k).into_iter().flat_map(|l| (1..=n).map(move |m| (l.clone(), m))).collect();
    tally.run(&lambdas, |(lambda, m)| {
        let sum = WeakComposition::from(lambda.trimmed())
            .rearrangements()
            .iter()
            .filter(|a| a.len() <= *m)
            .fold(P::zero(*m), |acc, a| &acc + &qsym_grothendieck(a, *m).expect("α fits"));
        same(format!("G_{lambda} as 𝒢 sum in {m} variables"), &grothendieck::<BigInt>(lambda, *m), &sum)
    });
}

fn example_filling() -> SetFilling {
    SetFilling::from_sets(vec![
        vec![vec![1]],
        vec![],
        vec![vec![3, 2], vec![2], vec![2, 1]],
        vec![vec![4], vec![4, 3, 1]],
        vec![vec![5]],
    ])
}

fn example_reverse_tableau() -> SetTableau {
    SetTableau::from_sets(
        Convention::Reverse,
        vec![vec![vec![5], vec![4, 3], vec![2, 1]], vec![vec![4], vec![2, 1]], vec![vec![3, 2]], vec![vec![1]]],
    )
    .expect("literal tableau")
}

fn as_poly(m: BMonomial) -> P {
    P::term(BigInt::from(1), m)
}

fn rho_round_trip(f: &SetFilling, nrows: usize) -> Vec<Failure> {
    let t = match rho(f) {
        Ok(t) => t,
        Err(e) => return vec![Failure::new(format!("ρ̂({})", f.to_json()), "a tableau", e)],
    };
    let mut failures =
        same(format!("ρ̂ weight of {}", f.to_json()), &as_poly(f.content_monomial()), &as_poly(t.weight(nrows)));
    match rho_inv(&t, nrows) {
        Ok(back) if back == *f => {}
        Ok(back) => failures.push(Failure::new(format!("ρ̂⁻¹ρ̂ of {}", f.to_json()), f.to_json(), back.to_json())),
        Err(e) => failures.push(Failure::new(format!("ρ̂⁻¹ of {}", t.to_json()), "a filling", e)),
    }
    failures
}

fn rho_check(tally: &mut Tally, bounds: Bounds) {
    let (r, k) = (bounds.max_parts.unwrap_or(4), bounds.max_boxes.unwrap_or(12));
    let gammas: Vec<WeakComposition> = compositions(r, k).into_iter().filter(|g| g.max_part() <= 3).collect();
    tally.run(&gammas, |gamma| {
        enumerate_set_skyline(gamma).iter().flat_map(|f| rho_round_trip(f, gamma.len())).collect()
    });
    let shapes: Vec<(Partition, usize)> = Partition::up_to(k)
        .into_iter()
        .filter(|l| l[0] <= 3)
        .flat_map(|l| (l.num_rows().max(1)..=r).map(move |n| (l.clone(), n)))
        .collect();
    tally.run(&shapes, |(lambda, n)| {
        let mut failures = Vec::new();
        for t in enumerate_set_reverse_tableaux(lambda, *n) {
            let back = rho_inv(&t, *n).and_then(|f| rho(&f));
            match back {
                Ok(u) if u == t => {}
                Ok(u) => failures.push(Failure::new(format!("ρ̂ρ̂⁻¹ of {}", t.to_json()), t.to_json(), u.to_json())),
                Err(e) => failures.push(Failure::new(format!("ρ̂ρ̂⁻¹ of {}", t.to_json()), t.to_json(), e)),
            }
        }
        failures
    });
    let f = example_filling();
    let golden = example_reverse_tableau();
    tally.single(match rho(&f) {
        Ok(t) => {
            let mut out = same("ρ̂ of the worked example", &golden.to_json(), &t.to_json());
            out.extend(rho_round_trip(&f, 5));
            out
        }
        Err(e) => vec![Failure::new("ρ̂ of the worked example", golden.to_json(), e)],
    });
}

const UNCROWD_GOLDEN: &str = r#"{"t":{"outer":[3,2,1,1],"inner":[3,1],"convention":"increasing","rows":[[],[[1]],[[1]],[[3]]]},"u":{"outer":[3,2,1,1],"inner":[],"convention":"increasing","rows":[[[1],[1],[4]],[[2],[4]],[[4]],[[5]]]}}"#;

fn uncrowd_check(tally: &mut Tally, bounds: Bounds) {
    let n = bounds.vars.unwrap_or(4);
    let outer: Partition = "321".parse().expect("literal");
    let shapes = outer.subpartitions();
    tally.run(&shapes, |lambda| {
        let mut failures = Vec::new();
        for f in enumerate_set_ssyt(lambda, n) {
            let instance = || format!("uncrowd {}", f.to_json());
            match uncrowd(&f) {
                Ok(p) if !p.is_valid() => failures.push(Failure::new(instance(), "a valid pair", p.to_json())),
                Ok(p) => match crowd(&p) {
                    Ok(g) if g == f => {}
                    Ok(g) => failures.push(Failure::new(instance(), f.to_json(), g.to_json())),
                    Err(e) => failures.push(Failure::new(instance(), f.to_json(), e)),
                },
                Err(e) => failures.push(Failure::new(instance(), "a pair", e)),
            }
        }
        let cap = lambda.size() + n;
        for p in enumerate_lenart_pairs(lambda, n, cap) {
            let instance = || format!("crowd {}", p.to_json());
            match crowd(&p).and_then(|f| uncrowd(&f)) {
                Ok(q) if q == p => {}
                Ok(q) => failures.push(Failure::new(instance(), p.to_json(), q.to_json())),
                Err(e) => failures.push(Failure::new(instance(), p.to_json(), e)),
            }
        }
        failures
    });
    let example =
        SetTableau::from_sets(Convention::Increasing, vec![vec![vec![1], vec![1, 2, 4], vec![4]], vec![vec![4, 5]]])
            .expect("literal tableau");
    tally.single(match uncrowd(&example) {
        Ok(p) => {
            let mut out = same("uncrowd of the worked example", &UNCROWD_GOLDEN.to_string(), &p.to_json().to_string());
            out.extend(match crowd(&p) {
                Ok(back) => same("crowd of the worked example", &example.to_json(), &back.to_json()),
                Err(e) => vec![Failure::new("crowd of the worked example", example.to_json(), e)],
            });
            out
        }
        Err(e) => vec![Failure::new("uncrowd of the worked example", UNCROWD_GOLDEN, e)],
    });
}

fn lenart(tally: &mut Tally, bounds: Bounds) {
    let (k, n) = (bounds.max_boxes.unwrap_or(3), bounds.vars.unwrap_or(3));
    let items = Partition::up_to(k);
    tally.run(&items, |lambda| {
        same(format!("G_{lambda} as Schur sum"), &grothendieck::<BigInt>(lambda, n), &lenart_sum(lambda, n))
    });
}

fn ops(tally: &mut Tally, bounds: Bounds) {
    use OperatorKind::*;
    let (k, n) = (bounds.max_boxes.unwrap_or(4), bounds.vars.unwrap_or(4));
    let monomials: Vec<P> = WeakComposition::up_to(n, k).iter().map(|g| P::x_power(g.parts())).collect();
    tally.run(&monomials, |f| {
        let mut failures = Vec::new();
        let op = |kind, i, g: &P| apply(kind, i, g).expect("index in range");
        for i in 1..n {
            let twice = |kind| op(kind, i, &op(kind, i, f));
            let once = |kind| op(kind, i, f);
            let at = |what: &str| format!("{what}, i={i}, f={f}");
            failures.extend(same(at("π_i² = π_i"), &once(Pi), &twice(Pi)));
            failures.extend(same(at("π̂_i² = -π̂_i"), &-&once(PiHat), &twice(PiHat)));
            failures.extend(same(at("τ_i² = τ_i"), &once(Tau), &twice(Tau)));
            failures.extend(same(at("τ̂_i² = -τ̂_i"), &-&once(TauHat), &twice(TauHat)));
            failures.extend(same(at("∂_i π_i = 0"), &P::zero(n), &op(Partial, i, &once(Pi))));
            let x = P::variable(i, n);
            let y = P::variable(i + 1, n);
            failures.extend(same(
                at("π_i x_{i+1} f = x_i x_{i+1} ∂_i f"),
                &(&(&x * &y) * &once(Partial)),
                &op(Pi, i, &(&y * f)),
            ));
        }
        for kind in OperatorKind::ALL {
            for i in 1..n.saturating_sub(1) {
                let a = apply_reduced_word(kind, &[i, i + 1, i], f).expect("index in range");
                let b = apply_reduced_word(kind, &[i + 1, i, i + 1], f).expect("index in range");
                failures.extend(same(format!("{kind} braid, i={i}, f={f}"), &a, &b));
            }
            for i in 1..n {
                for j in i + 2..n {
                    let a = apply_reduced_word(kind, &[i, j], f).expect("index in range");
                    let b = apply_reduced_word(kind, &[j, i], f).expect("index in range");
                    failures.extend(same(format!("{kind} commutation, i={i}, j={j}, f={f}"), &a, &b));
                }
            }
        }
        failures
    });
}

fn thm51(tally: &mut Tally, bounds: Bounds) {
    let (k, r) = (bounds.max_boxes.unwrap_or(6), bounds.max_parts.unwrap_or(4));
    let deltas = compositions(r, k);
    tally.run(&deltas, |delta| {
        let n = delta.len();
        let below = omega_decomposition(delta);
        let atoms: P = below.iter().fold(P::zero(n), |acc, g| &acc + &lascoux_atom_op(g));
        let mut failures = same(format!("Ω_{delta} as atom sum"), &lascoux_polynomial(delta), &atoms);
        let demazure: P = below.iter().fold(P::zero(n), |acc, g| &acc + &demazure_atom(g));
        failures.extend(same(format!("κ_{delta} as Demazure atom sum"), &key_polynomial(delta), &demazure));
        failures.extend(same(
            format!("L̂_{delta} at β = 0"),
            &demazure_atom::<BigInt>(delta),
            &lascoux_atom_op::<BigInt>(delta).beta_zero(),
        ));
        failures
    });
}

fn conj52(tally: &mut Tally, bounds: Bounds) {
    let (k, r) = (bounds.max_boxes.unwrap_or(6), bounds.max_parts.unwrap_or(5));
    let gammas = compositions(r, k);
    tally.run(&gammas, |gamma| {
        same(format!("L̂_{gamma} = L_{gamma}"), &lascoux_atom::<BigInt>(gamma), &lascoux_atom_op(gamma))
    });
}

/// `Σ β^{|F|-|γ|} x^F` over fillings of `reverse(γ)` with basement
/// `b_i = n - i + 1`.
pub fn reversed_basement_sum(gamma: &WeakComposition) -> P {
    let n = gamma.len();
    filling_sum(&enumerate_set_fillings(&gamma.reversed(), &Basement::reversed(n), n), n)
}

fn conj53(tally: &mut Tally, bounds: Bounds) {
    let (k, r) = (bounds.max_boxes.unwrap_or(6), bounds.max_parts.unwrap_or(5));
    let gammas = compositions(r, k);
    tally.run(&gammas, |gamma| {
        same(
            format!("Ω_{gamma} as fillings of {} with basement n..1", gamma.reversed()),
            &lascoux_polynomial::<BigInt>(gamma),
            &reversed_basement_sum(gamma),
        )
    });
    tally.notices.push("γ* is taken to be the reversal of γ".into());
}

const GENOMIC_GOLDEN: [&str; 2] = [
    r#"{"shape":[3,1,4],"inner":[1,0,2],"boxes":[[null,[2,1],[1,1]],[[1,1]],[null,null,[2,1],[2,2]]]}"#,
    r#"{"shape":[3,1,4],"inner":[1,0,2],"boxes":[[null,[2,1],[1,1]],[[2,1]],[null,null,[2,1],[2,2]]]}"#,
];

fn conj54(tally: &mut Tally, bounds: Bounds) {
    let (gamma, lambda, delta) = (wc("102"), "21".parse::<Partition>().expect("literal"), wc("314"));
    let mut found: Vec<String> = enumerate_genomic_fillings(&gamma, &lambda, &delta)
        .expect("γ ⊆ δ")
        .iter()
        .map(|f| f.to_json().to_string())
        .collect();
    found.sort();
    tally.single(same("witnesses of ã_{102,21}^{314}", &GENOMIC_GOLDEN.join(" "), &found.join(" ")));

    let cache = BasisCache::<BigInt>::new();
    let opts = GenomicOptions::default();
    let mismatch_failures = |report: &lascoux_core::genomic::Conj54Report<BigInt>| -> Vec<Failure> {
        report
            .mismatches
            .iter()
            .map(|m| {
                let k = m.delta.size().saturating_sub(report.gamma.size() + report.lambda.size());
                Failure::new(
                    format!("[L_{}] L_{} G_{}", m.delta, report.gamma, report.lambda),
                    format!("{}·b^{k}", m.count),
                    &m.coefficient,
                )
            })
            .collect()
    };
    // every δ with |δ| = 4 and 3 parts, then all larger δ up to the product's
    // top degree in the same parts
    let report = verify_conjecture_54(&gamma, &lambda, 4, opts, &cache);
    tally.instances += report.matches.len() + report.mismatches.len();
    tally.failures.extend(mismatch_failures(&report));
    let top = gamma.size() + lambda.size() + 2;
    let report = verify_conjecture_54(&gamma, &lambda, top, opts, &cache);
    tally.instances += report.matches.len() + report.mismatches.len();
    tally.failures.extend(mismatch_failures(&report));
    if !report.beyond_bound.is_empty() {
        tally.notices.push(format!(
            "L_{gamma} G_{lambda}: {} atoms with more than {top} boxes were not compared",
            report.beyond_bound.len()
        ));
    }

    let (k, r) = (bounds.max_boxes.unwrap_or(4), bounds.max_parts.unwrap_or(3));
    let pairs: Vec<(WeakComposition, Partition)> = WeakComposition::up_to(r, k)
        .into_iter()
        .flat_map(|g| {
            let room = k - g.size();
            Partition::up_to(room).into_iter().filter(|l| l.num_rows() <= r).map(move |l| (g.clone(), l))
        })
        .collect();
    let reports: Vec<_> =
        pairs.par_iter().map(|(g, l)| verify_conjecture_54(g, l, g.size() + l.size() + 2, opts, &cache)).collect();
    for report in &reports {
        tally.instances += report.matches.len() + report.mismatches.len();
        tally.failures.extend(mismatch_failures(report));
    }

    let strict = GenomicOptions { lattice: Lattice::Strict, ..opts };
    let strict_count =
        lascoux_core::genomic::genomic_structure_constant_with(&gamma, &lambda, &delta, strict).expect("γ ⊆ δ");
    tally.notices.push(format!(
        "λ* is the reversal of λ and reverse lattice is weak; strict lattice would give ã_{{102,21}}^{{314}} = {strict_count}"
    ));
}

fn random_polynomial(rng: &mut ChaCha8Rng) -> P {
    let mut p = P::zero(3);
    for _ in 0..rng.gen_range(0..=6) {
        let degree = rng.gen_range(0..=3);
        let mut exps = vec![0; 3];
        for _ in 0..degree {
            exps[rng.gen_range(0..3)] += 1;
        }
        let beta = rng.gen_range(0..=1);
        p.add_term(BMonomial::new(beta, exps), BigInt::from(rng.gen_range(-2..=2)));
    }
    p
}

fn is_symmetric(f: &P) -> bool {
    (1..f.nvars()).all(|i| f.swap_vars(i) == *f)
}

fn bases(tally: &mut Tally, bounds: Bounds) {
    let n = bounds.vars.unwrap_or(3);
    let k = bounds.max_boxes.unwrap_or(4);
    let cache = BasisCache::<BigInt>::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a5c0);
    let polys: Vec<P> = (0..200).map(|_| random_polynomial(&mut rng)).collect();
    tally.run(&polys, |f| {
        same(format!("atom expansion of {f}"), f, &expand_in_atoms_with(f, &cache).reconstruct(&cache))
    });

    let lambdas: Vec<Partition> = Partition::up_to(k).into_iter().filter(|l| l.num_rows() <= n).collect();
    tally.run(&lambdas, |lambda| {
        let c = classify_with(&grothendieck::<BigInt>(lambda, n), &cache);
        same(
            format!("classify G_{lambda}"),
            &"symmetric positive".to_string(),
            &format!("{} {}", c.symmetry.name(), if c.positive { "positive" } else { "signed" }),
        )
    });
    let alphas = strict_compositions(n, k);
    tally.run(&alphas, |alpha| {
        let g = qsym_grothendieck::<BigInt>(alpha, n).expect("α fits");
        let c = classify_with(&g, &cache);
        let expected = if is_symmetric(&g) { Symmetry::Symmetric } else { Symmetry::Quasisymmetric };
        same(
            format!("classify 𝒢_{alpha}"),
            &format!("{} positive", expected.name()),
            &format!("{} {}", c.symmetry.name(), if c.positive { "positive" } else { "signed" }),
        )
    });
    let x1 = P::variable(1, n);
    tally.single(same("classify x1", &"general", &classify_with(&x1, &cache).symmetry.name()));

    let combos: Vec<Vec<(WeakComposition, i64)>> = (0..50)
        .map(|_| {
            let mut combo = Vec::new();
            for a in &alphas {
                let c: i64 = rng.gen_range(-2..=2);
                if c != 0 && rng.gen_bool(0.3) {
                    combo.push((a.clone(), c));
                }
            }
            combo
        })
        .collect();
    tally.run(&combos, |combo| {
        let f = combo.iter().fold(P::zero(n), |acc, (a, c)| &acc + &cache.qgroth(a, n).scale(&BigInt::from(*c)));
        let expected: Vec<String> = combo.iter().map(|(a, c)| format!("{c}·𝒢_{a}")).collect();
        match expand_in_qgroth_with(&f, &cache) {
            Ok(e) => {
                let mut actual: Vec<String> = Vec::new();
                for (a, _) in combo {
                    let coeff = e.get(a).cloned().unwrap_or_else(|| P::zero(0));
                    actual.push(format!("{coeff}·𝒢_{a}"));
                }
                let wanted: Vec<String> =
                    combo.iter().map(|(a, c)| format!("{}·𝒢_{a}", P::constant(BigInt::from(*c), 0))).collect();
                let mut out = same(format!("𝒢 expansion of {f}"), &wanted.join(" + "), &actual.join(" + "));
                if e.len() != combo.len() {
                    out.push(Failure::new(
                        format!("𝒢 expansion of {f}"),
                        expected.join(" + "),
                        format!("{} terms", e.len()),
                    ));
                }
                out
            }
            Err(err) => vec![Failure::new(format!("𝒢 expansion of {f}"), expected.join(" + "), err)],
        }
    });
}
