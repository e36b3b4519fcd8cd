//! Orders `I` whose totient is small enough for a purely non-symplectic
//! automorphism of order `I` to act on a K3 surface.
//!
//! `φ(I)` divides the rank of the transcendental lattice, which is at most
//! 21, so the admissible orders are exactly those with `φ(I) <= 21`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactmath::euler_phi;

/// Default totient cap.
pub const K3_TOTIENT_CAP: u64 = 21;

/// Orders grouped by totient value; each row is strictly descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderTable {
    cap: u64,
    rows: BTreeMap<u64, Vec<u64>>,
}

impl OrderTable {
    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Nonempty rows keyed by totient value.
    pub fn rows(&self) -> &BTreeMap<u64, Vec<u64>> {
        &self.rows
    }

    /// Orders with `φ(I) = value`; empty for non-totients such as odd values
    /// above 1 or 14.
    pub fn row(&self, value: u64) -> &[u64] {
        self.rows.get(&value).map_or(&[], Vec::as_slice)
    }

    /// Every listed order, ascending.
    pub fn orders(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.rows.values().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Largest `I` that can have `φ(I) <= cap`.
///
/// For a prime power, `φ(p^k) = p^(k-1)(p-1) >= sqrt(p^k)` when `p` is odd
/// (`p - 1 >= sqrt(p)` for `p >= 3`), and `φ(2^k) = 2^(k-1) = sqrt(2^k / 2)`.
/// Multiplicativity gives `φ(I) >= sqrt(I/2)`, so `φ(I) <= cap` forces
/// `I <= 2·cap^2`.
pub fn scan_limit(cap: u64) -> u64 {
    2 * (cap + 1) * (cap + 1)
}

pub fn admissible_orders(cap: u64) -> Result<OrderTable> {
    if cap == 0 {
        return Err(Error::InvalidArgument(
            "totient cap must be at least 1".into(),
        ));
    }
    let mut rows: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for order in (2..=scan_limit(cap)).rev() {
        let phi = euler_phi(order)?;
        if phi <= cap {
            rows.entry(phi).or_default().push(order);
        }
    }
    Ok(OrderTable { cap, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_one() {
        let t = admissible_orders(1).unwrap();
        assert_eq!(t.rows().len(), 1);
        assert_eq!(t.row(1), &[2]);
    }

    #[test]
    fn cap_21_rows() {
        let t = admissible_orders(21).unwrap();
        assert_eq!(t.row(20), &[66, 50, 44, 33, 25]);
        assert_eq!(t.row(16), &[60, 48, 40, 34, 32, 17]);
        assert!(t.row(14).is_empty());
        for odd in (3..=21).step_by(2) {
            assert!(t.row(odd).is_empty(), "φ = {odd}");
        }
    }

    #[test]
    fn rows_descending_and_consistent() {
        let t = admissible_orders(21).unwrap();
        for (&phi, row) in t.rows() {
            assert!(row.windows(2).all(|w| w[0] > w[1]));
            assert!(row.iter().all(|&i| euler_phi(i).unwrap() == phi));
        }
    }

    #[test]
    fn bound_is_sound() {
        for i in 2..20_000u64 {
            let phi = euler_phi(i).unwrap() as f64;
            assert!(phi * phi >= i as f64 / 2.0, "I = {i}");
        }
    }

    #[test]
    fn zero_cap_rejected() {
        assert!(admissible_orders(0).is_err());
    }
}
