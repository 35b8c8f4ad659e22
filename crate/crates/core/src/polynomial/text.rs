//! Canonical text and JSON forms.
//!
//! Text: terms in canonical order joined by ` + ` / ` - `; a term is an
//! optional integer, an optional `b` or `b^k`, then `xi` / `xi^k` factors,
//! all joined by `*`. The zero polynomial prints as `0`.
//!
//! JSON: `{"nvars": n, "terms": [{"c": int, "b": int, "e": [ints]}]}` with
//! terms in canonical order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use super::{BMonomial, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() {
                factors.push(abs.to_string());
            }
            match m.beta {
                0 => {}
                1 => factors.push("b".into()),
                k => factors.push(format!("b^{k}")),
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    e => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct ParsedTerm<C> {
    coeff: C,
    beta: usize,
    vars: Vec<(usize, usize)>,
}

fn parse_exponent(s: &str) -> Result<(&str, usize)> {
    match s.split_once('^') {
        Some((base, e)) => Ok((base, e.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?)),
        None => Ok((s, 1)),
    }
}

fn parse_term<C: Coefficient>(s: &str, negative: bool) -> Result<ParsedTerm<C>> {
    let mut coeff = C::one();
    let mut beta = 0;
    let mut vars = Vec::new();
    for factor in s.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {s:?}")));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let c = factor.parse::<C>().map_err(|_| Error::Parse(format!("bad integer {factor:?}")))?;
            coeff = coeff * c;
        } else if factor.starts_with('b') {
            let (base, e) = parse_exponent(factor)?;
            if base != "b" {
                return Err(Error::Parse(format!("bad factor {factor:?}")));
            }
            beta += e;
        } else if let Some(rest) = factor.strip_prefix('x') {
            let (idx, e) = parse_exponent(rest)?;
            let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
            if idx == 0 {
                return Err(Error::Parse("variables are numbered from x1".into()));
            }
            vars.push((idx, e));
        } else {
            return Err(Error::Parse(format!("bad factor {factor:?}")));
        }
    }
    if negative {
        coeff = -coeff;
    }
    Ok(ParsedTerm { coeff, beta, vars })
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let s = s.replace('−', "-");
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut expecting_term = true;
    for ch in s.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() => {
                out.push((negative, current.trim().to_string()));
                current.clear();
                negative = ch == '-';
                expecting_term = true;
            }
            '+' | '-' if expecting_term && current.trim().is_empty() => {
                if ch == '-' {
                    negative = !negative;
                }
            }
            c => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse(format!("dangling operator in {s:?}")));
    }
    out.push((negative, current.trim().to_string()));
    Ok(out)
}

/// Parse the text form, inferring the variable count from the largest index
/// that occurs.
pub fn parse_polynomial<C: Coefficient>(s: &str) -> Result<Polynomial<C>> {
    parse_inner(s, None)
}

/// Parse the text form into a polynomial in exactly `nvars` variables.
pub fn parse_with_nvars<C: Coefficient>(s: &str, nvars: usize) -> Result<Polynomial<C>> {
    parse_inner(s, Some(nvars))
}

fn parse_inner<C: Coefficient>(s: &str, nvars: Option<usize>) -> Result<Polynomial<C>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let terms: Vec<ParsedTerm<C>> =
        split_terms(s)?.into_iter().map(|(neg, t)| parse_term(&t, neg)).collect::<Result<_>>()?;
    let max_idx = terms.iter().flat_map(|t| t.vars.iter().map(|v| v.0)).max().unwrap_or(0);
    let n = match nvars {
        Some(n) if n < max_idx => return Err(Error::Dimension(format!("x{max_idx} in a {n}-variable polynomial"))),
        Some(n) => n,
        None => max_idx,
    };
    let mut p = Polynomial::zero(n);
    for t in terms {
        let mut exps = vec![0; n];
        for (i, e) in t.vars {
            exps[i - 1] += e;
        }
        p.add_term(BMonomial::new(t.beta, exps), t.coeff);
    }
    Ok(p)
}

impl<C: Coefficient> FromStr for Polynomial<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    c: Number,
    b: usize,
    e: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    nvars: usize,
    terms: Vec<TermWire>,
}

pub(crate) fn coeff_to_number<C: Coefficient>(c: &C) -> Number {
    c.to_string().parse().expect("integers are valid JSON numbers")
}

pub(crate) fn number_to_coeff<C: Coefficient>(n: &Number) -> Result<C> {
    n.to_string().parse::<C>().map_err(|_| Error::Parse(format!("coefficient {n} is not an integer in range")))
}

pub fn to_json<C: Coefficient>(p: &Polynomial<C>) -> Value {
    let wire = PolyWire {
        nvars: p.nvars(),
        terms: p
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermWire { c: coeff_to_number(c), b: m.beta, e: m.exps.clone() })
            .collect(),
    };
    serde_json::to_value(wire).expect("plain data serializes")
}

pub fn from_json<C: Coefficient>(v: &Value) -> Result<Polynomial<C>> {
    let wire: PolyWire =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
    let terms = wire
        .terms
        .iter()
        .map(|t| Ok((BMonomial::new(t.b, t.e.clone()), number_to_coeff::<C>(&t.c)?)))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms(wire.nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn golden_strings() {
        let f: Polynomial<BigInt> = "b*x1^2*x2^2 + x1^2*x2".parse().unwrap();
        assert_eq!(f.to_string(), "x1^2*x2 + b*x1^2*x2^2");
        let g: Polynomial<BigInt> = parse_with_nvars("-1 + 2*b^3", 2).unwrap();
        assert_eq!(g.to_string(), "-1 + 2*b^3");
        assert_eq!(Polynomial::<BigInt>::zero(3).to_string(), "0");
        let h: Polynomial<BigInt> = "x1 − x2".parse().unwrap();
        assert_eq!(h.to_string(), "x1 - x2");
    }

    #[test]
    fn big_coefficients_survive_json() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f = Polynomial::term(big.clone(), BMonomial::x(vec![1, 0]));
        let v = to_json(&f);
        assert!(v.to_string().contains("123456789012345678901234567890"));
        let back: Polynomial<BigInt> = from_json(&v).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_polynomial::<BigInt>("x0").is_err());
        assert!(parse_polynomial::<BigInt>("x1 +").is_err());
        assert!(parse_polynomial::<BigInt>("y1").is_err());
        assert!(parse_with_nvars::<BigInt>("x3", 2).is_err());
    }
}
