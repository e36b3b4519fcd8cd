//! Smith normal form with unimodular transforms over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `left · A · right = diag(diagonal)`, with `left`, `right` unimodular,
/// `diagonal[i] > 0` for `i < rank`, zero afterwards, and each nonzero
/// diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix, inner: usize) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero())
                        .fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// `row[dst] -= q * row[src]`
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    let (src_row, dst_row) = if src < dst {
        let (lo, hi) = m.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (d, s) in dst_row.iter_mut().zip(src_row) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// `col[dst] -= q * col[src]`
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix, cols: usize) -> SmithForm {
    let rows = a.len();
    let mut d = a.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let steps = rows.min(cols);
    let mut rank = 0;

    'outer: for t in 0..steps {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'outer;
            };
            d.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }

            // Enforce the divisibility chain by folding an offending row in.
            let pivot = d[t][t].clone();
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut left, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut().chain(left[t].iter_mut()) {
                *x = -&*x;
            }
        }
        rank = t + 1;
    }

    let diagonal = (0..steps).map(|i| d[i][i].clone()).collect();
    SmithForm {
        left,
        right,
        diagonal,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[&[i64]]) -> IntMatrix {
        v.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn check(a: &IntMatrix, cols: usize) -> SmithForm {
        let s = smith_normal_form(a, cols);
        let prod = mat_mul(&mat_mul(&s.left, a, a.len()), &s.right, cols);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j && i < s.diagonal.len() {
                    assert_eq!(x, &s.diagonal[i]);
                } else {
                    assert!(x.is_zero(), "off-diagonal ({i},{j}) = {x}");
                }
            }
        }
        for w in s.diagonal[..s.rank].windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn classic_example() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = check(&a, 3);
        assert_eq!(s.diagonal, vec![2.into(), 6.into(), 12.into()]);
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8]]);
        let s = check(&a, 4);
        assert_eq!(s.rank, 1);
        let a = m(&[&[0, 0], &[0, 0], &[0, 3]]);
        let s = check(&a, 2);
        assert_eq!(s.rank, 1);
        assert_eq!(s.diagonal[0], 3.into());
    }

    #[test]
    fn divisibility_fixup() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let s = check(&a, 2);
        assert_eq!(s.diagonal, vec![1.into(), 6.into()]);
    }
}
