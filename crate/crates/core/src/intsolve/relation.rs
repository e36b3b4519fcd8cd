//! Linear relations among the unknowns and a test for whether a system
//! implies them.
//!
//! Text grammar, one relation per line:
//!
//! ```text
//! relation := side "=" side
//! side     := ["+" | "-"] term { ("+" | "-") term }
//! term     := coeff | coeff "*" label | label
//! coeff    := integer | integer "/" integer
//! label    := "n" | "m_" digits [ "_" digits ]
//! ```
//!
//! Whitespace is insignificant, blank lines and lines starting with `#` are
//! skipped. `m_<a>_<b>` names a fixed point type directly; `m_<j>` is the
//! alias for the type `{j+1, N-j}` available when `r = 1` and `N` is even.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{rational_solve, RationalSolution};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};
use crate::linear::LinearSystem;

/// The eight solved relations for `N = 60, r = 1`, labelled `m_j`.
pub const ORDER60_RELATIONS: &str = include_str!("../../data/relations_order60.txt");

/// `Σ coefficients[label]·label = constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelation {
    pub coefficients: BTreeMap<String, Rational>,
    pub constant: Rational,
}

impl LinearRelation {
    pub fn new(coefficients: BTreeMap<String, Rational>, constant: Rational) -> Self {
        let mut coefficients = coefficients;
        coefficients.retain(|_, c| !c.is_zero());
        LinearRelation {
            coefficients,
            constant,
        }
    }

    pub fn parse(line: &str) -> Result<Self> {
        parse_line(line, 1)
    }

    /// `0 = 0` and the like.
    pub fn is_trivial(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0 = {}", self.constant);
        }
        for (i, (label, c)) in self.coefficients.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        write!(f, " = {}", self.constant)
    }
}

/// Parses every relation in a text block.
pub fn parse_relations(text: &str) -> Result<Vec<LinearRelation>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

fn parse_line(line: &str, lineno: usize) -> Result<LinearRelation> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    let (lhs, rhs) = compact
        .split_once('=')
        .ok_or_else(|| err("missing `=`".into()))?;
    if rhs.contains('=') {
        return Err(err("more than one `=`".into()));
    }
    let mut coefficients: BTreeMap<String, Rational> = BTreeMap::new();
    let mut constant = Rational::zero();
    for (side, sign) in [(lhs, Rational::one()), (rhs, -Rational::one())] {
        for (coeff, label) in parse_side(side).map_err(err)? {
            match label {
                Some(l) => *coefficients.entry(l).or_insert_with(Rational::zero) += &sign * coeff,
                None => constant -= &sign * coeff,
            }
        }
    }
    Ok(LinearRelation::new(coefficients, constant))
}

fn parse_side(side: &str) -> std::result::Result<Vec<(Rational, Option<String>)>, String> {
    if side.is_empty() {
        return Err("empty side".into());
    }
    let mut terms = Vec::new();
    let mut rest = side;
    let mut first = true;
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' => false,
            b'-' => true,
            _ if first => false,
            _ => return Err(format!("expected `+` or `-` before `{rest}`")),
        };
        if rest.starts_with(['+', '-']) {
            rest = &rest[1..];
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coeff, label) = parse_term(term)?;
        terms.push((if negative { -coeff } else { coeff }, label));
    }
    Ok(terms)
}

fn parse_term(term: &str) -> std::result::Result<(Rational, Option<String>), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let (coeff, label) = match term.split_once('*') {
        Some((c, l)) => (
            parse_rational(c).ok_or_else(|| format!("bad coefficient `{c}`"))?,
            Some(l),
        ),
        None if term.starts_with(|c: char| c.is_ascii_digit()) => (
            parse_rational(term).ok_or_else(|| format!("bad constant `{term}`"))?,
            None,
        ),
        None => (Rational::one(), Some(term)),
    };
    match label {
        Some(l) if is_label(l) => Ok((coeff, Some(l.to_string()))),
        Some(l) => Err(format!("bad label `{l}`")),
        None => Ok((coeff, None)),
    }
}

fn is_label(s: &str) -> bool {
    if s == "n" {
        return true;
    }
    let Some(rest) = s.strip_prefix("m_") else {
        return false;
    };
    let digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    match rest.split_once('_') {
        Some((a, b)) => digits(a) && digits(b),
        None => digits(rest),
    }
}

/// True iff the relation holds at every rational solution of `sys`.
/// An inconsistent system implies every relation.
pub fn relation_implied(sys: &LinearSystem, rel: &LinearRelation) -> Result<bool> {
    let mut coeffs = vec![Rational::zero(); sys.cols()];
    for (label, c) in &rel.coefficients {
        let col = sys
            .column_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        coeffs[col] += c;
    }
    let solution = match rational_solve(sys) {
        RationalSolution::Inconsistent => return Ok(true),
        RationalSolution::Solved(s) => s,
    };
    let dot = |v: &[Rational]| -> Rational {
        coeffs
            .iter()
            .zip(v)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, x)| c * x)
            .sum()
    };
    Ok(dot(&solution.particular) == rel.constant
        && solution.homogeneous_basis.iter().all(|h| dot(h).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn parse_simple() {
        let r = LinearRelation::parse("4*m_1 = -1 + 2*m_2 - 2*m_3 + 8*n").unwrap();
        assert_eq!(r.coefficients["m_1"], q(4));
        assert_eq!(r.coefficients["m_2"], q(-2));
        assert_eq!(r.coefficients["m_3"], q(2));
        assert_eq!(r.coefficients["n"], q(-8));
        assert_eq!(r.constant, q(-1));
    }

    #[test]
    fn parse_canonical_labels_and_constants_on_both_sides() {
        let r = LinearRelation::parse("m_2_59 + 3 = 1/2*n - 5").unwrap();
        assert_eq!(r.coefficients["m_2_59"], q(1));
        assert_eq!(r.coefficients["n"], Rational::new((-1).into(), 2.into()));
        assert_eq!(r.constant, q(-8));
    }

    #[test]
    fn parse_errors() {
        assert!(LinearRelation::parse("4*m_1").is_err());
        assert!(LinearRelation::parse("4*x = 1").is_err());
        assert!(LinearRelation::parse("4*m_ = 1").is_err());
        assert!(LinearRelation::parse("= 1").is_err());
        assert!(LinearRelation::parse("1 = 2 = 3").is_err());
        assert!(LinearRelation::parse("a*m_1 = 0").is_err());
        match parse_relations("# c\n\nm_1 = 0\nbogus\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_relation() {
        let r = LinearRelation::parse("0 = 0").unwrap();
        assert!(r.is_trivial());
        let sys = LinearSystem::from_integers(&[vec![1, 2]], &[3]).unwrap();
        assert!(relation_implied(&sys, &r).unwrap());
        assert!(!relation_implied(&sys, &LinearRelation::parse("0 = 1").unwrap()).unwrap());
    }

    #[test]
    fn implication() {
        // u0 + u1 = 3, u1 - u2 = 1
        let sys = LinearSystem::from_integers(&[vec![1, 1, 0], vec![0, 1, -1]], &[3, 1]).unwrap();
        let mut c = BTreeMap::new();
        c.insert("u0".to_string(), q(1));
        c.insert("u1".to_string(), q(2));
        c.insert("u2".to_string(), q(-1));
        assert!(relation_implied(&sys, &LinearRelation::new(c.clone(), q(4))).unwrap());
        assert!(!relation_implied(&sys, &LinearRelation::new(c, q(5))).unwrap());
        let mut c = BTreeMap::new();
        c.insert("u0".to_string(), q(1));
        assert!(!relation_implied(&sys, &LinearRelation::new(c, q(0))).unwrap());
    }

    #[test]
    fn unknown_label() {
        let sys = LinearSystem::from_integers(&[vec![1]], &[1]).unwrap();
        let r = LinearRelation::parse("m_4 = 1").unwrap();
        assert_eq!(
            relation_implied(&sys, &r),
            Err(Error::UnknownLabel("m_4".into()))
        );
    }

    #[test]
    fn shipped_file_parses() {
        let rels = parse_relations(ORDER60_RELATIONS).unwrap();
        assert_eq!(rels.len(), 8);
        let lead: Vec<(&str, i64)> = vec![
            ("m_1", 4),
            ("m_10", 9),
            ("m_11", 36),
            ("m_12", 36),
            ("m_13", 72),
            ("m_14", 18),
            ("m_15", 18),
            ("m_16", 72),
        ];
        for (rel, (label, c)) in rels.iter().zip(lead) {
            assert_eq!(rel.coefficients[label], q(c));
        }
    }

    #[test]
    fn display_round_trips() {
        let r = LinearRelation::parse("4*m_1 = -1 + 2*m_2 - n").unwrap();
        let again = LinearRelation::parse(&r.to_string()).unwrap();
        assert_eq!(r, again);
    }
}
