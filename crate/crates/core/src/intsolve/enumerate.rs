//! Bounded enumeration of nonnegative fixed-point configurations.

use std::ops::{AddAssign, RangeInclusive, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::feasibility::clear_denominators;
use crate::lefschetz::{FixedConfig, LefschetzSystem};

/// Every configuration with `Σ m_t <= max_points`, `m_t >= 0` and `n` in
/// `n_range` that solves the system exactly, in lexicographic order of
/// `(m_1, …, m_k, n)`. For `r = 0` there is no curve unknown and `n_range`
/// is ignored.
pub fn nonneg_enumerate(
    sys: &LefschetzSystem,
    max_points: u64,
    n_range: RangeInclusive<i64>,
) -> Vec<FixedConfig> {
    let int_sys = clear_denominators(sys.linear());
    let ntypes = sys.types().len();
    let columns: Vec<Vec<BigInt>> = (0..int_sys.cols)
        .map(|j| int_sys.matrix.iter().map(|row| row[j].clone()).collect())
        .collect();
    let (type_cols, curve_col) = if sys.has_curve_unknown() {
        (&columns[..ntypes], Some(&columns[ntypes]))
    } else {
        (&columns[..], None)
    };

    let raw = if fits_i64(&int_sys.rhs, &columns, max_points, &n_range) {
        let narrow =
            |v: &Vec<BigInt>| -> Vec<i64> { v.iter().map(|x| x.to_i64().unwrap()).collect() };
        run(
            type_cols.iter().map(narrow).collect(),
            curve_col.map(narrow),
            narrow(&int_sys.rhs),
            max_points,
            n_range,
        )
    } else {
        run(
            type_cols.to_vec(),
            curve_col.cloned(),
            int_sys.rhs.clone(),
            max_points,
            n_range,
        )
    };

    raw.into_iter()
        .map(|(counts, n)| {
            let mults = sys.types().iter().copied().zip(counts);
            FixedConfig::new(mults, n)
        })
        .collect()
}

/// Whether every intermediate residual stays well inside `i64`.
fn fits_i64(
    rhs: &[BigInt],
    columns: &[Vec<BigInt>],
    max_points: u64,
    n_range: &RangeInclusive<i64>,
) -> bool {
    let limit = BigInt::from(i64::MAX / 4);
    let n_bound = BigInt::from(
        n_range
            .start()
            .unsigned_abs()
            .max(n_range.end().unsigned_abs())
            + 1,
    );
    let steps = BigInt::from(max_points + 1);
    let col_max = columns
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_default();
    let rhs_max = rhs.iter().map(|x| x.abs()).max().unwrap_or_default();
    let bound = rhs_max + &col_max * (steps + n_bound) * BigInt::from(columns.len().max(1));
    bound < limit
}

trait Scalar:
    Clone
    + Zero
    + PartialEq
    + Integer
    + Signed
    + ToPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + Zero
        + PartialEq
        + Integer
        + Signed
        + ToPrimitive
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
{
}

type RawConfig = (Vec<u64>, Option<i64>);

struct Search<T> {
    type_cols: Vec<Vec<T>>,
    curve_col: Option<Vec<T>>,
    n_range: RangeInclusive<i64>,
    counts: Vec<u64>,
    out: Vec<RawConfig>,
}

fn run<T: Scalar>(
    type_cols: Vec<Vec<T>>,
    curve_col: Option<Vec<T>>,
    mut residual: Vec<T>,
    max_points: u64,
    n_range: RangeInclusive<i64>,
) -> Vec<RawConfig> {
    let mut search = Search {
        counts: vec![0; type_cols.len()],
        type_cols,
        curve_col,
        n_range,
        out: Vec::new(),
    };
    search.descend(0, max_points, &mut residual);
    search.out
}

impl<T: Scalar> Search<T> {
    fn descend(&mut self, depth: usize, remaining: u64, residual: &mut [T]) {
        if depth == self.type_cols.len() {
            self.leaf(residual);
            return;
        }
        let mut m = 0;
        loop {
            self.counts[depth] = m;
            self.descend(depth + 1, remaining - m, residual);
            if m == remaining {
                break;
            }
            for (r, a) in residual.iter_mut().zip(&self.type_cols[depth]) {
                *r -= a;
            }
            m += 1;
        }
        for _ in 0..m {
            for (r, a) in residual.iter_mut().zip(&self.type_cols[depth]) {
                *r += a;
            }
        }
        self.counts[depth] = 0;
    }

    /// `residual` is `b' - Σ m_t A'_t`; what remains must be `n·A'_n`.
    fn leaf(&mut self, residual: &[T]) {
        let Some(curve) = &self.curve_col else {
            if residual.iter().all(Zero::is_zero) {
                self.out.push((self.counts.clone(), None));
            }
            return;
        };
        let Some(k) = curve.iter().position(|c| !c.is_zero()) else {
            if residual.iter().all(Zero::is_zero) {
                for n in self.n_range.clone() {
                    self.out.push((self.counts.clone(), Some(n)));
                }
            }
            return;
        };
        let (n, rem) = residual[k].div_rem(&curve[k]);
        if !rem.is_zero() {
            return;
        }
        let Some(n_small) = n.to_i64() else {
            return;
        };
        if !self.n_range.contains(&n_small) {
            return;
        }
        if residual
            .iter()
            .zip(curve)
            .all(|(r, c)| c.clone() * n.clone() == *r)
        {
            self.out.push((self.counts.clone(), Some(n_small)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::{build_system, LefschetzData};

    #[test]
    fn order2_unique() {
        let sys = build_system(2, 0).unwrap();
        let found = nonneg_enumerate(&sys, 10, 0..=0);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].total_points(), 8);
    }

    #[test]
    fn order3_unique() {
        let sys = build_system(3, 0).unwrap();
        let found = nonneg_enumerate(&sys, 10, 0..=0);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].total_points(), 6);
    }

    #[test]
    fn everything_found_verifies() {
        for (order, rot) in [(5, 0), (4, 1), (6, 1), (8, 3), (7, 2)] {
            let data = LefschetzData::new(order, rot).unwrap();
            let sys = data.system();
            for cfg in nonneg_enumerate(&sys, 8, -3..=3) {
                assert!(data.verify(&cfg).unwrap().is_zero(), "{order} {rot}: {cfg}");
            }
        }
    }

    #[test]
    fn big_integer_path_agrees() {
        let sys = build_system(7, 1).unwrap();
        let fast = nonneg_enumerate(&sys, 6, -2..=2);
        let int_sys = clear_denominators(sys.linear());
        let ntypes = sys.types().len();
        let columns: Vec<Vec<BigInt>> = (0..int_sys.cols)
            .map(|j| int_sys.matrix.iter().map(|row| row[j].clone()).collect())
            .collect();
        let slow = run(
            columns[..ntypes].to_vec(),
            Some(columns[ntypes].clone()),
            int_sys.rhs.clone(),
            6,
            -2..=2,
        );
        assert_eq!(fast.len(), slow.len());
    }

    #[test]
    fn lexicographic_order() {
        let sys = build_system(5, 0).unwrap();
        let found = nonneg_enumerate(&sys, 10, 0..=0);
        let keys: Vec<Vec<u64>> = found
            .iter()
            .map(|c| sys.types().iter().map(|t| c.multiplicity(t)).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
