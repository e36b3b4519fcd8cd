//! Dense rational linear systems `A·u = b` with labelled unknowns.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    labels: Vec<String>,
    aliases: BTreeMap<String, usize>,
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(
        labels: Vec<String>,
        matrix: Vec<Vec<Rational>>,
        rhs: Vec<Rational>,
    ) -> Result<Self> {
        if matrix.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                expected: matrix.len(),
                got: rhs.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != labels.len()) {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                got: row.len(),
            });
        }
        Ok(LinearSystem {
            labels,
            aliases: BTreeMap::new(),
            matrix,
            rhs,
        })
    }

    /// Integer system with labels `u0, u1, …`.
    pub fn from_integers(matrix: &[Vec<i64>], rhs: &[i64]) -> Result<Self> {
        let cols = matrix.first().map_or(0, Vec::len);
        let to_q = |x: &i64| Rational::from_integer(BigInt::from(*x));
        LinearSystem::new(
            (0..cols).map(|j| format!("u{j}")).collect(),
            matrix
                .iter()
                .map(|row| row.iter().map(to_q).collect())
                .collect(),
            rhs.iter().map(to_q).collect(),
        )
    }

    /// Registers an alternative name for column `col`.
    pub fn add_alias(&mut self, alias: impl Into<String>, col: usize) {
        assert!(col < self.cols());
        self.aliases.insert(alias.into(), col);
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn aliases(&self) -> &BTreeMap<String, usize> {
        &self.aliases
    }

    /// The alias attached to a column, if any.
    pub fn alias_of(&self, col: usize) -> Option<&str> {
        self.aliases
            .iter()
            .find(|(_, &c)| c == col)
            .map(|(a, _)| a.as_str())
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Column index for a canonical label or an alias.
    pub fn column_of(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .or_else(|| self.aliases.get(label).copied())
    }

    /// `A·u`.
    pub fn apply(&self, u: &[Rational]) -> Result<Vec<Rational>> {
        if u.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                got: u.len(),
            });
        }
        Ok(self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(u)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect())
    }

    /// `A·u - b`.
    pub fn residual(&self, u: &[Rational]) -> Result<Vec<Rational>> {
        let mut r = self.apply(u)?;
        for (x, b) in r.iter_mut().zip(&self.rhs) {
            *x -= b;
        }
        Ok(r)
    }

    pub fn is_solution(&self, u: &[Rational]) -> Result<bool> {
        Ok(self.residual(u)?.iter().all(Zero::is_zero))
    }

    pub fn is_integer_solution(&self, u: &[BigInt]) -> Result<bool> {
        let q: Vec<Rational> = u.iter().cloned().map(Rational::from_integer).collect();
        self.is_solution(&q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_checks() {
        let q = |x: i64| Rational::from_integer(x.into());
        assert!(LinearSystem::new(vec!["a".into()], vec![vec![q(1)]], vec![]).is_err());
        assert!(LinearSystem::new(vec!["a".into()], vec![vec![q(1), q(2)]], vec![q(0)]).is_err());
        let sys = LinearSystem::from_integers(&[vec![2, 1]], &[3]).unwrap();
        assert_eq!((sys.rows(), sys.cols()), (1, 2));
        assert!(sys.is_integer_solution(&[1.into(), 1.into()]).unwrap());
        assert!(!sys.is_integer_solution(&[0.into(), 1.into()]).unwrap());
        assert!(sys.apply(&[q(1)]).is_err());
    }

    #[test]
    fn aliases_resolve() {
        let mut sys = LinearSystem::from_integers(&[vec![1, 1]], &[0]).unwrap();
        sys.add_alias("m_7", 1);
        assert_eq!(sys.column_of("u1"), Some(1));
        assert_eq!(sys.column_of("m_7"), Some(1));
        assert_eq!(sys.column_of("m_8"), None);
        assert_eq!(sys.alias_of(1), Some("m_7"));
        assert_eq!(sys.alias_of(0), None);
    }
}
