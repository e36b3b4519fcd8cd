//! Integer feasibility of `A·u = b` with checkable certificates.
//!
//! Rows are first scaled by the lcm of their denominators, giving an integer
//! system `A'·u = b'`. With a Smith decomposition `P·A'·Q = D` the system
//! becomes `D·v = P·b'` for `v = Q⁻¹·u`, which has an integer solution iff
//! every `d_i` divides `(P·b')_i`. When `d_i` does not, the rational row
//! `y = P_i / d_i` satisfies `yᵀA' = (Q⁻¹)_i` (integral) while `yᵀb'` is not an
//! integer. That row is the certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_solve, AffineSolution, RationalSolution};
use super::smith::{smith_normal_form, IntMatrix, SmithForm};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linear::LinearSystem;

/// `A'·u = b'` after per-row denominator clearing; `row_scale[i]` is the
/// factor applied to row `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<BigInt>,
    pub row_scale: Vec<BigInt>,
    pub cols: usize,
}

pub fn clear_denominators(sys: &LinearSystem) -> IntegerSystem {
    let mut matrix = Vec::with_capacity(sys.rows());
    let mut rhs = Vec::with_capacity(sys.rows());
    let mut row_scale = Vec::with_capacity(sys.rows());
    for (row, b) in sys.matrix().iter().zip(sys.rhs()) {
        let scale = row
            .iter()
            .chain(std::iter::once(b))
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale_q = Rational::from_integer(scale.clone());
        matrix.push(row.iter().map(|x| (x * &scale_q).to_integer()).collect());
        rhs.push((b * &scale_q).to_integer());
        row_scale.push(scale);
    }
    IntegerSystem {
        matrix,
        rhs,
        row_scale,
        cols: sys.cols(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    RationalInconsistent,
    IntegerInfeasible,
    Feasible,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::RationalInconsistent => "RATIONAL_INCONSISTENT",
            Verdict::IntegerInfeasible => "INTEGER_INFEASIBLE",
            Verdict::Feasible => "FEASIBLE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    RationalInconsistent,
    /// `certificate` is indexed by the rows of the denominator-cleared system.
    IntegerInfeasible {
        certificate: Vec<Rational>,
    },
    /// Integral solution of `A·u = b`; signs are unconstrained.
    Feasible {
        witness: Vec<BigInt>,
    },
}

impl Feasibility {
    pub fn verdict(&self) -> Verdict {
        match self {
            Feasibility::RationalInconsistent => Verdict::RationalInconsistent,
            Feasibility::IntegerInfeasible { .. } => Verdict::IntegerInfeasible,
            Feasibility::Feasible { .. } => Verdict::Feasible,
        }
    }

    pub fn certificate(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::IntegerInfeasible { certificate } => Some(certificate),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[BigInt]> {
        match self {
            Feasibility::Feasible { witness } => Some(witness),
            _ => None,
        }
    }
}

pub fn integer_feasibility(sys: &LinearSystem) -> Feasibility {
    let RationalSolution::Solved(solution) = rational_solve(sys) else {
        return Feasibility::RationalInconsistent;
    };
    let int_sys = clear_denominators(sys);
    let snf = smith_normal_form(&int_sys.matrix, int_sys.cols);
    let SmithForm {
        left,
        right,
        diagonal,
        rank,
    } = &snf;

    let transformed: Vec<BigInt> = left
        .iter()
        .map(|row| row.iter().zip(&int_sys.rhs).map(|(p, b)| p * b).sum())
        .collect();
    // Rows past the rank are zero in D; rational consistency makes them vanish.
    debug_assert!(transformed[*rank..].iter().all(Zero::is_zero));

    // Among the obstructed pivots prefer the smallest modulus: a denominator of
    // 2 is a parity argument.
    let obstruction = (0..*rank)
        .filter_map(|i| {
            let (d, c) = (&diagonal[i], &transformed[i]);
            let modulus = d / d.gcd(c);
            (!modulus.is_one()).then_some((modulus, i))
        })
        .min();
    if let Some((modulus, i)) = obstruction {
        if let Some((rel_modulus, certificate)) = solved_row_certificate(&int_sys, &solution) {
            if rel_modulus <= modulus {
                return Feasibility::IntegerInfeasible { certificate };
            }
        }
        let d = Rational::from_integer(diagonal[i].clone());
        let certificate = left[i]
            .iter()
            .map(|p| Rational::from_integer(p.clone()) / &d)
            .collect();
        return Feasibility::IntegerInfeasible { certificate };
    }

    let v: Vec<BigInt> = (0..int_sys.cols)
        .map(|i| {
            if i < *rank {
                &transformed[i] / &diagonal[i]
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let witness: Vec<BigInt> = right
        .iter()
        .map(|row| row.iter().zip(&v).map(|(q, x)| q * x).sum())
        .collect();
    assert!(
        sys.is_integer_solution(&witness).unwrap_or(false),
        "integer witness failed to satisfy the system"
    );
    Feasibility::Feasible { witness }
}

/// Looks for a row of the reduced echelon form whose primitive integer
/// version `c·u = β` has `gcd(c) ∤ β`, and expresses it as a combination `y`
/// of the cleared rows. Such a certificate reads as one solved relation.
fn solved_row_certificate(
    int_sys: &IntegerSystem,
    solution: &AffineSolution,
) -> Option<(BigInt, Vec<Rational>)> {
    let (modulus, coeffs, _) = solution
        .reduced_rows
        .iter()
        .filter_map(|(row, rhs)| {
            let scale = row
                .iter()
                .chain(std::iter::once(rhs))
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let scale = Rational::from_integer(scale);
            let ints: Vec<BigInt> = row.iter().map(|x| (x * &scale).to_integer()).collect();
            let beta = (rhs * &scale).to_integer();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let modulus = &g / g.gcd(&beta);
            (!modulus.is_one()).then(|| {
                let g = Rational::from_integer(g);
                let coeffs: Vec<Rational> = ints
                    .into_iter()
                    .map(|x| Rational::from_integer(x) / &g)
                    .collect();
                (modulus, coeffs, Rational::from_integer(beta) / &g)
            })
        })
        .min_by(|a, b| a.0.cmp(&b.0))?;

    // Solve A'ᵀ·y = c; the rhs value follows because the row lies in the
    // row space of the augmented system.
    let rows = int_sys.matrix.len();
    let transposed: Vec<Vec<Rational>> = (0..int_sys.cols)
        .map(|j| {
            int_sys
                .matrix
                .iter()
                .map(|row| Rational::from_integer(row[j].clone()))
                .collect()
        })
        .collect();
    let labels = (0..rows).map(|i| format!("y{i}")).collect();
    let dual = LinearSystem::new(labels, transposed, coeffs).ok()?;
    let y = rational_solve(&dual).solved()?.particular.clone();
    Some((modulus, y))
}

/// `(yᵀA', yᵀb')` on the cleared system.
pub fn certificate_combination(
    sys: &LinearSystem,
    y: &[Rational],
) -> Result<(Vec<Rational>, Rational)> {
    let int_sys = clear_denominators(sys);
    if y.len() != int_sys.matrix.len() {
        return Err(Error::DimensionMismatch {
            expected: int_sys.matrix.len(),
            got: y.len(),
        });
    }
    let mut combo = vec![Rational::zero(); int_sys.cols];
    let mut value = Rational::zero();
    for ((row, b), yi) in int_sys.matrix.iter().zip(&int_sys.rhs).zip(y) {
        if yi.is_zero() {
            continue;
        }
        for (c, a) in combo.iter_mut().zip(row) {
            *c += yi * Rational::from_integer(a.clone());
        }
        value += yi * Rational::from_integer(b.clone());
    }
    Ok((combo, value))
}

/// True iff `yᵀA'` is integral and `yᵀb'` is not an integer.
pub fn check_certificate(sys: &LinearSystem, y: &[Rational]) -> Result<bool> {
    let (combo, value) = certificate_combination(sys, y)?;
    Ok(combo.iter().all(Rational::is_integer) && !value.is_integer())
}

/// Human-readable form of the contradiction a certificate encodes:
/// with `c = yᵀA'` and `yᵀb' = p/q`, every integer solution would satisfy
/// `q·(c·u) = p`, yet the left side is a multiple of `q` and `p` is not.
pub fn explain_certificate(sys: &LinearSystem, y: &[Rational]) -> Result<String> {
    let (combo, value) = certificate_combination(sys, y)?;
    let q = value.denom().clone();
    let p = value.numer().clone();
    let mut terms = Vec::new();
    for (c, label) in combo.iter().zip(sys.labels()) {
        if c.is_zero() {
            continue;
        }
        let c = c.to_integer();
        let sign = if c.is_negative() { "-" } else { "+" };
        let mag = c.abs();
        let coeff = if mag.is_one() {
            String::new()
        } else {
            format!("{mag}*")
        };
        terms.push(format!("{sign} {coeff}{label}"));
    }
    let mut lhs = terms.join(" ");
    if let Some(rest) = lhs.strip_prefix("+ ") {
        lhs = rest.to_string();
    } else if let Some(rest) = lhs.strip_prefix("- ") {
        lhs = format!("-{rest}");
    }
    if lhs.is_empty() {
        lhs = "0".into();
    }
    let kind = if q == BigInt::from(2) {
        "the left side is even and the right side is odd (mod-2 obstruction)".to_string()
    } else {
        format!("the left side is divisible by {q} and the right side is not (mod-{q} obstruction)")
    };
    Ok(format!("{q}*({lhs}) = {p}: {kind}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn two_m_equals_three() {
        let sys = LinearSystem::from_integers(&[vec![2]], &[3]).unwrap();
        let f = integer_feasibility(&sys);
        assert_eq!(f.verdict(), Verdict::IntegerInfeasible);
        assert_eq!(f.certificate().unwrap(), &[q(1, 2)]);
        assert!(check_certificate(&sys, &[q(1, 2)]).unwrap());
        assert!(!check_certificate(&sys, &[q(0, 1)]).unwrap());
        assert!(check_certificate(&sys, &[]).is_err());
        assert_eq!(
            explain_certificate(&sys, &[q(1, 2)]).unwrap(),
            "2*(u0) = 3: the left side is even and the right side is odd (mod-2 obstruction)"
        );
    }

    #[test]
    fn rational_rows_are_cleared() {
        let sys = LinearSystem::new(
            vec!["a".into(), "b".into()],
            vec![vec![q(1, 2), q(1, 3)], vec![q(2, 5), q(0, 1)]],
            vec![q(1, 6), q(4, 5)],
        )
        .unwrap();
        let c = clear_denominators(&sys);
        assert_eq!(c.row_scale, vec![BigInt::from(6), BigInt::from(5)]);
        assert_eq!(c.matrix[0], vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(c.rhs, vec![BigInt::from(1), BigInt::from(4)]);
        // a = 2, then 3*2 + 2b = 1 has no integer b
        assert_eq!(
            integer_feasibility(&sys).verdict(),
            Verdict::IntegerInfeasible
        );
    }

    #[test]
    fn feasible_witness() {
        let sys = LinearSystem::from_integers(&[vec![6, 10, 15]], &[1]).unwrap();
        let f = integer_feasibility(&sys);
        let w = f.witness().expect("gcd(6,10,15) = 1");
        assert!(sys.is_integer_solution(w).unwrap());
    }

    #[test]
    fn inconsistent() {
        let sys = LinearSystem::from_integers(&[vec![1, 1], vec![2, 2]], &[1, 3]).unwrap();
        assert_eq!(integer_feasibility(&sys), Feasibility::RationalInconsistent);
    }

    #[test]
    fn solved_row_certificate_preferred() {
        // Reduced form: u0 - 2u2 = 1/2, u1 + u2 = 0. The first row scaled by
        // 2 has even coefficients and an odd constant.
        let sys = LinearSystem::from_integers(&[vec![2, 4, 0], vec![0, 1, 1]], &[1, 0]).unwrap();
        let f = integer_feasibility(&sys);
        let y = f.certificate().unwrap();
        assert!(check_certificate(&sys, y).unwrap());
        let (combo, value) = certificate_combination(&sys, y).unwrap();
        assert_eq!(value, q(1, 2));
        assert_eq!(combo, vec![q(1, 1), q(0, 1), q(-2, 1)]);
    }

    #[test]
    fn mod3_obstruction_text() {
        let sys = LinearSystem::from_integers(&[vec![3, 6]], &[2]).unwrap();
        let f = integer_feasibility(&sys);
        let y = f.certificate().unwrap();
        assert!(check_certificate(&sys, y).unwrap());
        let text = explain_certificate(&sys, y).unwrap();
        assert!(text.contains("mod-3"), "{text}");
    }
}
