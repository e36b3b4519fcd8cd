use num_traits::{One, Zero};

use crate::exactmath::Rational;
use crate::linear::LinearSystem;

/// Solution set `particular + span(homogeneous_basis)` of a consistent system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub pivot_columns: Vec<usize>,
    pub particular: Vec<Rational>,
    pub homogeneous_basis: Vec<Vec<Rational>>,
    pub rank: usize,
    /// Nonzero rows of the reduced row echelon form, as `(coefficients, rhs)`.
    pub reduced_rows: Vec<(Vec<Rational>, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalSolution {
    Inconsistent,
    Solved(AffineSolution),
}

impl RationalSolution {
    pub fn solved(&self) -> Option<&AffineSolution> {
        match self {
            RationalSolution::Solved(s) => Some(s),
            RationalSolution::Inconsistent => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, RationalSolution::Solved(_))
    }
}

/// Gauss-Jordan elimination over Q.
///
/// Pivots are chosen at the leftmost column that still has a nonzero entry,
/// taking the topmost such row, so the result is deterministic.
pub fn rational_solve(sys: &LinearSystem) -> RationalSolution {
    let cols = sys.cols();
    let mut rows: Vec<(Vec<Rational>, Rational)> = sys
        .matrix()
        .iter()
        .cloned()
        .zip(sys.rhs().iter().cloned())
        .collect();

    let mut pivot_columns = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].0[col].recip();
        if !inv.is_one() {
            for x in rows[r].0.iter_mut().skip(col) {
                *x *= &inv;
            }
            rows[r].1 *= &inv;
        }
        let (pivot_row, pivot_rhs) = rows[r].clone();
        for (i, (row, rhs)) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            *rhs -= &factor * &pivot_rhs;
        }
        pivot_columns.push(col);
        r += 1;
    }

    if rows[r..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return RationalSolution::Inconsistent;
    }
    rows.truncate(r);

    let mut particular = vec![Rational::zero(); cols];
    for ((_, rhs), &pc) in rows.iter().zip(&pivot_columns) {
        particular[pc] = rhs.clone();
    }
    let homogeneous_basis = (0..cols)
        .filter(|c| !pivot_columns.contains(c))
        .map(|free| {
            let mut h = vec![Rational::zero(); cols];
            h[free] = Rational::one();
            for ((row, _), &pc) in rows.iter().zip(&pivot_columns) {
                h[pc] = -row[free].clone();
            }
            h
        })
        .collect();

    RationalSolution::Solved(AffineSolution {
        rank: pivot_columns.len(),
        pivot_columns,
        particular,
        homogeneous_basis,
        reduced_rows: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn one_by_one() {
        let sys = LinearSystem::new(vec!["m".into()], vec![vec![q(1, 4)]], vec![q(2, 1)]).unwrap();
        let sol = rational_solve(&sys);
        let s = sol.solved().unwrap();
        assert_eq!(s.particular, vec![q(8, 1)]);
        assert!(s.homogeneous_basis.is_empty());
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn zero_equals_one() {
        let sys = LinearSystem::from_integers(&[vec![0, 0]], &[1]).unwrap();
        assert_eq!(rational_solve(&sys), RationalSolution::Inconsistent);
    }

    #[test]
    fn empty_row_set() {
        let sys = LinearSystem::from_integers(&[], &[]).unwrap();
        let s = rational_solve(&sys);
        assert_eq!(s.solved().unwrap().rank, 0);
    }

    #[test]
    fn underdetermined_with_free_columns() {
        // u0 + 2u1 - u2 = 3 ; 2u0 + 4u1 = 2
        let sys = LinearSystem::from_integers(&[vec![1, 2, -1], vec![2, 4, 0]], &[3, 2]).unwrap();
        let s = rational_solve(&sys);
        let s = s.solved().unwrap();
        assert_eq!(s.pivot_columns, vec![0, 2]);
        assert_eq!(s.rank + s.homogeneous_basis.len(), 3);
        assert!(sys.is_solution(&s.particular).unwrap());
        for h in &s.homogeneous_basis {
            assert!(sys.apply(h).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn topmost_row_chosen_for_pivot() {
        let sys =
            LinearSystem::from_integers(&[vec![0, 1], vec![3, 0], vec![5, 0]], &[1, 3, 5]).unwrap();
        let s = rational_solve(&sys);
        let s = s.solved().unwrap();
        assert_eq!(s.pivot_columns, vec![0, 1]);
        assert_eq!(s.particular, vec![q(1, 1), q(1, 1)]);
    }
}
