//! Euler's totient and cyclotomic polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};

/// Number of `1 <= k <= n` with `gcd(k, n) = 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("euler_phi needs n >= 1".into()));
    }
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    Ok(result)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial, by exact division
/// `Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_poly(n: u64) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic_poly needs n >= 1".into(),
        ));
    }
    let mut table = BTreeMap::new();
    for d in divisors(n) {
        let phi_d = cyclotomic_from_table(d, &table)?;
        table.insert(d, phi_d);
    }
    Ok(Poly::from_bigints(
        table.remove(&n).expect("n divides itself"),
    ))
}

/// `Φ_n` given every `Φ_d` for the proper divisors of `n`.
fn cyclotomic_from_table(n: u64, table: &BTreeMap<u64, Vec<BigInt>>) -> Result<Vec<BigInt>> {
    let len = usize::try_from(n).map_err(|_| Error::InvalidArgument("order too large".into()))?;
    let mut current = vec![BigInt::zero(); len + 1];
    current[0] = -BigInt::one();
    current[len] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        current = exact_div_monic(&current, &table[&d])?;
    }
    Ok(current)
}

/// Quotient of an integer polynomial by a monic integer polynomial; errors on
/// a nonzero remainder.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = std::mem::take(&mut rem[k]);
        for (i, c) in den[..dd].iter().enumerate() {
            if !c.is_zero() {
                rem[k - dd + i] -= &q * c;
            }
        }
        quot[k - dd] = q;
    }
    if rem[..dd].iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totients_from_the_order_table() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(2).unwrap(), 1);
        assert_eq!(euler_phi(60).unwrap(), 16);
        assert_eq!(euler_phi(66).unwrap(), 20);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn totient_matches_definition() {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for n in 1..300u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(60), vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1).unwrap(), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2).unwrap(), Poly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap(), Poly::from_i64(&[1, -1, 1]));
        assert!(cyclotomic_poly(0).is_err());
    }

    #[test]
    fn phi_60() {
        let expected = Poly::from_i64(&[1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1]);
        assert_eq!(cyclotomic_poly(60).unwrap(), expected);
    }

    #[test]
    fn inexact_monic_division_detected() {
        let num = [BigInt::from(1), BigInt::from(0), BigInt::from(1)];
        let den = [BigInt::from(-1), BigInt::from(1)];
        assert_eq!(exact_div_monic(&num, &den), Err(Error::InexactDivision));
    }
}
