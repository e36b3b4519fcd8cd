//! Holomorphic Lefschetz data for an automorphism `g` of order `N` acting on
//! the 2-form by `g*ω = ζ^r ω`.
//!
//! Fixed-point side: an isolated fixed point whose tangent eigenvalues are
//! `ζ^a, ζ^b` contributes `1/((1 - ζ^a)(1 - ζ^b))`; pointwise-fixed curves
//! contribute `n·(1 + ζ^r)/(1 - ζ^r)^2` where `n = Σ (1 - genus)`.
//! Global side: `1 + ζ^{-r}`. Equating both sides coordinate-wise in the power
//! basis yields a [`LefschetzSystem`].

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{CycElt, CyclotomicField, Rational};
use crate::linear::LinearSystem;

/// Label of the aggregated curve unknown.
pub const CURVE_LABEL: &str = "n";

/// Which rotations `r` are accepted for an order `N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RotationPolicy {
    /// `r = 0` (symplectic) or `gcd(r, N) = 1` (purely non-symplectic).
    #[default]
    Pure,
    /// Any `0 <= r < N`.
    AllowImpure,
}

pub fn validate_rotation(order: u64, rot: u64, policy: RotationPolicy) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "order must be at least 2, got {order}"
        )));
    }
    if rot >= order {
        return Err(Error::InvalidRotation {
            order,
            rot,
            reason: "rotation must lie in 0..order",
        });
    }
    if policy == RotationPolicy::Pure && rot != 0 && rot.gcd(&order) != 1 {
        return Err(Error::InvalidRotation {
            order,
            rot,
            reason: "gcd(r, N) != 1 describes an impure action",
        });
    }
    Ok(())
}

/// Isolated fixed point type: tangent eigenvalues `ζ^a, ζ^b` with `a <= b`
/// and `a + b ≡ r (mod N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPointType {
    a: u64,
    b: u64,
    order: u64,
    rot: u64,
}

impl FixedPointType {
    /// Normalizes the pair to `a <= b` and checks it against `(order, rot)`.
    pub fn new(order: u64, rot: u64, a: u64, b: u64) -> Result<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a == 0 || b >= order {
            return Err(Error::InconsistentType(format!(
                "exponents {{{a},{b}}} must lie in 1..{order}"
            )));
        }
        if (a + b) % order != rot % order {
            return Err(Error::InconsistentType(format!(
                "exponents {{{a},{b}}} do not sum to {rot} mod {order}"
            )));
        }
        Ok(FixedPointType { a, b, order, rot })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rot(&self) -> u64 {
        self.rot
    }

    /// Canonical unknown label `m_<a>_<b>`.
    pub fn label(&self) -> String {
        format!("m_{}_{}", self.a, self.b)
    }

    /// Index `j` of the eigenvalue pair `(ζ^{-j}, ζ^{j+1})`, defined for
    /// `r = 1` and even `N`. Then `a = j + 1` and `b = N - j`.
    pub fn alias_index(&self) -> Option<u64> {
        (self.rot == 1 && self.order.is_multiple_of(2)).then(|| self.a - 1)
    }

    /// Alias `m_<j>` when [`alias_index`](Self::alias_index) is defined.
    pub fn alias_label(&self) -> Option<String> {
        self.alias_index().map(|j| format!("m_{j}"))
    }
}

impl fmt::Display for FixedPointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// All isolated fixed point types for `(order, rot)`, ascending in `(a, b)`.
pub fn enumerate_point_types(order: u64, rot: u64) -> Result<Vec<FixedPointType>> {
    validate_rotation(order, rot, RotationPolicy::AllowImpure)?;
    let mut out = Vec::new();
    for a in 1..order {
        // b ≡ r - a (mod N), then keep b in a..N
        let b = (rot + order - a) % order;
        if b >= a && b != 0 {
            out.push(FixedPointType { a, b, order, rot });
        }
    }
    Ok(out)
}

/// `1 / ((1 - ζ^a)(1 - ζ^b))`
pub fn point_term(field: &CyclotomicField, t: &FixedPointType) -> Result<CycElt> {
    if t.order != field.order() {
        return Err(Error::InconsistentType(format!(
            "type {t} belongs to order {}, field has order {}",
            t.order,
            field.order()
        )));
    }
    let one = field.one();
    let da = &one - &field.zeta_pow(t.a as i64);
    let db = &one - &field.zeta_pow(t.b as i64);
    (&da * &db).inv()
}

/// `(1 + ζ^r) / (1 - ζ^r)^2`, the coefficient of `n`.
pub fn curve_term(field: &CyclotomicField, rot: u64) -> Result<CycElt> {
    if rot.is_multiple_of(field.order()) {
        return Err(Error::SymplecticCurveTerm);
    }
    let one = field.one();
    let zr = field.zeta_pow(rot as i64);
    let den = &one - &zr;
    (&one + &zr).checked_div(&(&den * &den))
}

/// `1 + ζ^{-r}`
pub fn global_term(field: &CyclotomicField, rot: u64) -> CycElt {
    &field.one() + &field.zeta_pow(-(rot as i64))
}

/// Explicit fixed-point data: multiplicities per type and the curve term
/// `n = Σ (1 - genus(C_i))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedConfig {
    multiplicities: BTreeMap<FixedPointType, u64>,
    curve_n: Option<i64>,
}

impl FixedConfig {
    /// Zero multiplicities are dropped.
    pub fn new(
        multiplicities: impl IntoIterator<Item = (FixedPointType, u64)>,
        curve_n: Option<i64>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (t, m) in multiplicities {
            *map.entry(t).or_insert(0) += m;
        }
        map.retain(|_, m| *m != 0);
        FixedConfig {
            multiplicities: map,
            curve_n,
        }
    }

    /// Builds a configuration from `(a, b, count)` triples.
    pub fn from_triples(
        order: u64,
        rot: u64,
        points: &[(u64, u64, u64)],
        curve_n: Option<i64>,
    ) -> Result<Self> {
        let types = points
            .iter()
            .map(|&(a, b, m)| Ok((FixedPointType::new(order, rot, a, b)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FixedConfig::new(types, curve_n))
    }

    pub fn multiplicities(&self) -> &BTreeMap<FixedPointType, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, t: &FixedPointType) -> u64 {
        self.multiplicities.get(t).copied().unwrap_or(0)
    }

    pub fn curve_n(&self) -> Option<i64> {
        self.curve_n
    }

    /// Number of isolated fixed points.
    pub fn total_points(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    fn check_against(&self, order: u64, rot: u64) -> Result<()> {
        if let Some(t) = self
            .multiplicities
            .keys()
            .find(|t| t.order != order || t.rot != rot)
        {
            return Err(Error::InconsistentType(format!(
                "type {t} belongs to (N={}, r={}), expected (N={order}, r={rot})",
                t.order, t.rot
            )));
        }
        if rot == 0 && self.curve_n.is_some_and(|n| n != 0) {
            return Err(Error::InconsistentType(
                "symplectic automorphisms fix no curves pointwise; n must be absent".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for FixedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(t, m)| format!("{}={m}", t.label()))
            .collect();
        if let Some(n) = self.curve_n {
            parts.push(format!("{CURVE_LABEL}={n}"));
        }
        if parts.is_empty() {
            f.write_str("(empty)")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Precomputed local and global terms for one `(N, r)`.
#[derive(Clone, Debug)]
pub struct LefschetzData {
    field: CyclotomicField,
    rot: u64,
    types: Vec<FixedPointType>,
    point_terms: Vec<CycElt>,
    curve_term: Option<CycElt>,
    global_term: CycElt,
}

impl LefschetzData {
    pub fn new(order: u64, rot: u64) -> Result<Self> {
        Self::with_policy(order, rot, RotationPolicy::Pure)
    }

    pub fn with_policy(order: u64, rot: u64, policy: RotationPolicy) -> Result<Self> {
        validate_rotation(order, rot, policy)?;
        let field = CyclotomicField::new(order)?;
        let types = enumerate_point_types(order, rot)?;
        let point_terms = types
            .iter()
            .map(|t| point_term(&field, t))
            .collect::<Result<Vec<_>>>()?;
        let curve_term = if rot == 0 {
            None
        } else {
            Some(curve_term(&field, rot)?)
        };
        let global_term = global_term(&field, rot);
        Ok(LefschetzData {
            field,
            rot,
            types,
            point_terms,
            curve_term,
            global_term,
        })
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn rot(&self) -> u64 {
        self.rot
    }

    pub fn types(&self) -> &[FixedPointType] {
        &self.types
    }

    pub fn point_terms(&self) -> &[CycElt] {
        &self.point_terms
    }

    pub fn curve_term(&self) -> Option<&CycElt> {
        self.curve_term.as_ref()
    }

    pub fn global_term(&self) -> &CycElt {
        &self.global_term
    }

    /// `Σ m_t·a(t) + n·b(r) - (1 + ζ^{-r})`; zero iff the configuration
    /// satisfies the holomorphic Lefschetz equation.
    pub fn verify(&self, cfg: &FixedConfig) -> Result<CycElt> {
        cfg.check_against(self.order(), self.rot)?;
        let mut acc = -&self.global_term;
        for (t, &m) in &cfg.multiplicities {
            let idx = self
                .types
                .binary_search(t)
                .map_err(|_| Error::InconsistentType(format!("unexpected type {t}")))?;
            let m = Rational::from_integer(m.into());
            acc = &acc + &self.point_terms[idx].scale(&m);
        }
        if let (Some(n), Some(term)) = (cfg.curve_n, &self.curve_term) {
            acc = &acc + &term.scale(&Rational::from_integer(n.into()));
        }
        Ok(acc)
    }

    /// The coordinate-wise linear system in `(m_t…, n)`.
    pub fn system(&self) -> LefschetzSystem {
        let rows = self.field.degree();
        let mut labels: Vec<String> = self.types.iter().map(FixedPointType::label).collect();
        let mut columns: Vec<&CycElt> = self.point_terms.iter().collect();
        if let Some(c) = &self.curve_term {
            labels.push(CURVE_LABEL.to_string());
            columns.push(c);
        }
        let matrix = (0..rows)
            .map(|i| columns.iter().map(|c| c.coords()[i].clone()).collect())
            .collect();
        let rhs = self.global_term.coords().to_vec();
        let mut linear =
            LinearSystem::new(labels, matrix, rhs).expect("shapes agree by construction");
        for (col, t) in self.types.iter().enumerate() {
            if let Some(alias) = t.alias_label() {
                linear.add_alias(alias, col);
            }
        }
        LefschetzSystem {
            order: self.order(),
            rot: self.rot,
            types: self.types.clone(),
            has_curve: self.curve_term.is_some(),
            linear,
        }
    }
}

/// Linear system equating both sides of the Lefschetz formula, one row per
/// power-basis coordinate of `Q(ζ_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzSystem {
    order: u64,
    rot: u64,
    types: Vec<FixedPointType>,
    has_curve: bool,
    linear: LinearSystem,
}

impl LefschetzSystem {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rot(&self) -> u64 {
        self.rot
    }

    pub fn types(&self) -> &[FixedPointType] {
        &self.types
    }

    /// Whether the last column is the curve unknown `n`; absent for `r = 0`.
    pub fn has_curve_unknown(&self) -> bool {
        self.has_curve
    }

    pub fn linear(&self) -> &LinearSystem {
        &self.linear
    }

    pub fn labels(&self) -> &[String] {
        self.linear.labels()
    }

    /// Unknown vector for a configuration, in column order.
    pub fn config_vector(&self, cfg: &FixedConfig) -> Result<Vec<Rational>> {
        cfg.check_against(self.order, self.rot)?;
        if let Some(t) = cfg
            .multiplicities
            .keys()
            .find(|t| self.types.binary_search(t).is_err())
        {
            return Err(Error::InconsistentType(format!("unexpected type {t}")));
        }
        let mut u: Vec<Rational> = self
            .types
            .iter()
            .map(|t| Rational::from_integer(cfg.multiplicity(t).into()))
            .collect();
        if self.has_curve {
            u.push(Rational::from_integer(cfg.curve_n.unwrap_or(0).into()));
        }
        Ok(u)
    }

    /// Whether the configuration solves `A·u = b`.
    pub fn accepts(&self, cfg: &FixedConfig) -> Result<bool> {
        self.linear.is_solution(&self.config_vector(cfg)?)
    }
}

impl AsRef<LinearSystem> for LefschetzSystem {
    fn as_ref(&self) -> &LinearSystem {
        &self.linear
    }
}

pub fn build_system(order: u64, rot: u64) -> Result<LefschetzSystem> {
    build_system_with(order, rot, RotationPolicy::Pure)
}

pub fn build_system_with(order: u64, rot: u64, policy: RotationPolicy) -> Result<LefschetzSystem> {
    Ok(LefschetzData::with_policy(order, rot, policy)?.system())
}

pub fn verify_fixed_config(order: u64, rot: u64, cfg: &FixedConfig) -> Result<CycElt> {
    LefschetzData::with_policy(order, rot, RotationPolicy::AllowImpure)?.verify(cfg)
}

/// Whether every coordinate of the residual vanishes.
pub fn residual_is_zero(residual: &CycElt) -> bool {
    residual.coords().iter().all(Zero::is_zero)
}
