//! The cyclotomic field Q(ζ_N) realized as Q[x]/Φ_N(x).
//!
//! Elements are stored by their coordinates in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`. Since that basis is a Q-basis the coordinates are
//! unique, which is what later lets a field equation split into one linear
//! equation per coordinate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{cyclotomic_poly, euler_phi, Poly, Rational};
use crate::error::{Error, Result};

/// Handle to `Q(ζ_N)`. Cloning is cheap; clones compare equal.
#[derive(Clone)]
pub struct CyclotomicField {
    inner: Arc<FieldData>,
}

struct FieldData {
    order: u64,
    degree: usize,
    modulus: Poly,
    /// `powers[k]` holds the coordinates of `ζ^k` for `0 <= k < N`.
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Result<Self> {
        let modulus = cyclotomic_poly(order)?;
        let degree = euler_phi(order)? as usize;
        debug_assert_eq!(modulus.degree(), Some(degree));

        let n =
            usize::try_from(order).map_err(|_| Error::InvalidArgument("order too large".into()))?;
        let mut powers = Vec::with_capacity(n);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..n {
            let next = times_zeta(&current, &modulus);
            powers.push(std::mem::replace(&mut current, next));
        }
        debug_assert!(current[0].is_one() && current[1..].iter().all(Zero::is_zero));

        Ok(CyclotomicField {
            inner: Arc::new(FieldData {
                order,
                degree,
                modulus,
                powers,
            }),
        })
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// `φ(N)`, the dimension over Q.
    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// `Φ_N`.
    pub fn modulus(&self) -> &Poly {
        &self.inner.modulus
    }

    pub fn zero(&self) -> CycElt {
        CycElt {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycElt {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, c: Rational) -> CycElt {
        let mut e = self.zero();
        e.coords[0] = c;
        e
    }

    pub fn from_int(&self, c: i64) -> CycElt {
        self.from_rational(Rational::from_integer(c.into()))
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<CycElt> {
        if coords.len() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                got: coords.len(),
            });
        }
        Ok(CycElt {
            field: self.clone(),
            coords,
        })
    }

    /// Reduces an arbitrary polynomial in ζ.
    pub fn from_poly(&self, p: &Poly) -> CycElt {
        let mut e = self.zero();
        let n = self.inner.powers.len();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, z) in e.coords.iter_mut().zip(&self.inner.powers[k % n]) {
                if !z.is_zero() {
                    *acc += c * z;
                }
            }
        }
        e
    }

    /// `ζ^k`; negative exponents are taken modulo N first.
    pub fn zeta_pow(&self, k: i64) -> CycElt {
        let n = self.order() as i64;
        let idx = k.rem_euclid(n) as usize;
        CycElt {
            field: self.clone(),
            coords: self.inner.powers[idx].clone(),
        }
    }

    pub fn zeta(&self) -> CycElt {
        self.zeta_pow(1)
    }

    fn same(&self, other: &CyclotomicField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.order() == other.order()
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order())
    }
}

/// Multiply a reduced coordinate vector by ζ and reduce again.
fn times_zeta(coords: &[Rational], modulus: &Poly) -> Vec<Rational> {
    let d = coords.len();
    let top = coords[d - 1].clone();
    let mut out = Vec::with_capacity(d);
    out.push(Rational::zero());
    out.extend_from_slice(&coords[..d - 1]);
    if !top.is_zero() {
        // x^d = -(Φ - x^d) since Φ is monic
        for (o, m) in out.iter_mut().zip(modulus.coeffs()) {
            if !m.is_zero() {
                *o -= &top * m;
            }
        }
    }
    out
}

/// Arithmetic selector for [`CycElt::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycElt {
    field: CyclotomicField,
    coords: Vec<Rational>,
}

impl CycElt {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The representative polynomial of degree `< φ(N)`.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coords.clone())
    }

    fn check_field(&self, other: &CycElt) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            })
        }
    }

    pub fn arith(&self, other: &CycElt, op: ArithOp) -> Result<CycElt> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
        }
    }

    pub fn checked_add(&self, other: &CycElt) -> Result<CycElt> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycElt {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_sub(&self, other: &CycElt) -> Result<CycElt> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycElt {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_mul(&self, other: &CycElt) -> Result<CycElt> {
        self.check_field(other)?;
        let d = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // Fold x^k for k >= d back using the monic modulus, top down.
        let modulus = self.field.modulus().coeffs();
        for k in (d..prod.len()).rev() {
            if prod[k].is_zero() {
                continue;
            }
            let top = std::mem::take(&mut prod[k]);
            for (i, m) in modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    prod[k - d + i] -= &top * m;
                }
            }
        }
        prod.truncate(d);
        Ok(CycElt {
            field: self.field.clone(),
            coords: prod,
        })
    }

    pub fn scale(&self, c: &Rational) -> CycElt {
        CycElt {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<CycElt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s) = self.to_poly().ext_gcd_mod(self.field.modulus())?;
        // Φ_N is irreducible, so any nonzero element of lower degree is coprime to it.
        debug_assert_eq!(g, Poly::one());
        Ok(self.field.from_poly(&s))
    }

    pub fn checked_div(&self, other: &CycElt) -> Result<CycElt> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }
}

impl fmt::Debug for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.field, self)
    }
}

/// Prints the representative polynomial in `z`.
impl fmt::Display for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('x', "z");
        f.write_str(&s)
    }
}

// Operator forms panic on mismatched fields; use the `checked_*` methods
// when the operands are not known to share a field.

impl Add for &CycElt {
    type Output = CycElt;

    fn add(self, rhs: &CycElt) -> CycElt {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl Sub for &CycElt {
    type Output = CycElt;

    fn sub(self, rhs: &CycElt) -> CycElt {
        self.checked_sub(rhs)
            .expect("field mismatch in subtraction")
    }
}

impl Mul for &CycElt {
    type Output = CycElt;

    fn mul(self, rhs: &CycElt) -> CycElt {
        self.checked_mul(rhs)
            .expect("field mismatch in multiplication")
    }
}

impl Neg for &CycElt {
    type Output = CycElt;

    fn neg(self) -> CycElt {
        CycElt {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn coords(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| q(c, 1)).collect()
    }

    #[test]
    fn power_zero_is_one() {
        let f = CyclotomicField::new(60).unwrap();
        assert!(f.zeta_pow(0).is_one());
        assert_eq!(f.degree(), 16);
    }

    #[test]
    fn power_sixteen_reduces_by_phi60() {
        let f = CyclotomicField::new(60).unwrap();
        // -x^14 + x^10 + x^8 + x^6 - x^2 - 1
        let mut expected = vec![0i64; 16];
        expected[0] = -1;
        expected[2] = -1;
        expected[6] = 1;
        expected[8] = 1;
        expected[10] = 1;
        expected[14] = -1;
        assert_eq!(f.zeta_pow(16).coords(), coords(&expected).as_slice());
    }

    #[test]
    fn negative_power_normalized() {
        let f = CyclotomicField::new(60).unwrap();
        let inv_zeta = f.zeta_pow(-1);
        assert_eq!(inv_zeta, f.zeta_pow(59));
        // repeated multiplication by ζ, independent of the power table
        let mut acc = f.one();
        let z = f.zeta();
        for _ in 0..59 {
            acc = &acc * &z;
        }
        assert_eq!(acc, inv_zeta);
        assert!((&inv_zeta * &z).is_one());
    }

    #[test]
    fn power_table_matches_polynomial_remainder() {
        let f = CyclotomicField::new(60).unwrap();
        for k in 0..60 {
            let (_, r) = Poly::monomial(q(1, 1), k).div_rem(f.modulus()).unwrap();
            assert_eq!(f.zeta_pow(k as i64).to_poly(), r, "k = {k}");
        }
    }

    #[test]
    fn gaussian_integers() {
        let f = CyclotomicField::new(4).unwrap();
        let one = f.one();
        let z = f.zeta();
        let a = &one + &z;
        let b = &one - &z;
        assert_eq!(&a * &b, f.from_int(2));
        assert_eq!(&a + &f.zero(), a);
        assert_eq!(a.inv().unwrap().coords(), &[q(1, 2), q(-1, 2)]);
    }

    #[test]
    fn zeta30_is_minus_one() {
        let f = CyclotomicField::new(60).unwrap();
        let z30 = f.zeta_pow(30);
        assert_eq!(z30, f.from_int(-1));
        assert!((&z30 * &z30).is_one());
        // x^20 - x^10 + 1 = 0
        let e = &(&f.zeta_pow(20) - &f.zeta_pow(10)) + &f.one();
        assert!(e.is_zero());
    }

    #[test]
    fn order3_norm() {
        let f = CyclotomicField::new(3).unwrap();
        let a = (&f.one() - &f.zeta()).inv().unwrap();
        let b = (&f.one() - &f.zeta_pow(2)).inv().unwrap();
        assert_eq!(&a * &b, f.from_rational(q(1, 3)));
    }

    #[test]
    fn inverse_of_one_minus_zeta60() {
        let f = CyclotomicField::new(60).unwrap();
        let u = &f.one() - &f.zeta();
        let v = u.inv().unwrap();
        assert!((&u * &v).is_one());
        assert!(!v.coords()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = CyclotomicField::new(12).unwrap();
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = CyclotomicField::new(5).unwrap().one();
        let b = CyclotomicField::new(10).unwrap().one();
        assert_eq!(
            a.arith(&b, ArithOp::Mul).unwrap_err(),
            Error::FieldMismatch { left: 5, right: 10 }
        );
    }

    #[test]
    fn from_coords_checks_length() {
        let f = CyclotomicField::new(5).unwrap();
        assert!(f.from_coords(coords(&[1, 2, 3])).is_err());
        assert!(f.from_coords(coords(&[1, 2, 3, 4])).is_ok());
    }

    #[test]
    fn order_one_and_two_fields() {
        let f1 = CyclotomicField::new(1).unwrap();
        assert!(f1.zeta().is_one());
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(f2.zeta(), f2.from_int(-1));
    }
}
