//! Hodge-Deligne diagrams and the N-string model of a limiting mixed Hodge
//! structure with quasi-unipotent monodromy.
//!
//! Multiplicities count complex dimensions. A string with eigen order `d > 1`
//! stands for one line on which `T^ss` acts by `exp(2 pi i a / d)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratlin::reduce_order;

pub type Position = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("subtraction underflow at {pos:?}: have {have}, need {need}")]
    Underflow { pos: Position, have: u64, need: u64 },
    #[error("negative multiplicity {value} at {pos:?}")]
    NegativeMultiplicity { pos: Position, value: i64 },
    #[error("invalid string {string}: {reason}")]
    InvalidString { string: String, reason: String },
}

/// Finitely supported table `(p, q) -> h^{p,q}`. Zero entries are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64, i64)>", into = "Vec<(i64, i64, i64)>")]
pub struct HodgeDeligneDiagram {
    entries: BTreeMap<Position, u64>,
}

impl TryFrom<Vec<(i64, i64, i64)>> for HodgeDeligneDiagram {
    type Error = HodgeError;

    fn try_from(raw: Vec<(i64, i64, i64)>) -> Result<Self, HodgeError> {
        let mut d = HodgeDeligneDiagram::new();
        for (p, q, m) in raw {
            if m < 0 {
                return Err(HodgeError::NegativeMultiplicity {
                    pos: (p, q),
                    value: m,
                });
            }
            d.add_at((p, q), m as u64);
        }
        Ok(d)
    }
}

impl From<HodgeDeligneDiagram> for Vec<(i64, i64, i64)> {
    fn from(d: HodgeDeligneDiagram) -> Self {
        d.entries
            .into_iter()
            .map(|((p, q), m)| (p, q, m as i64))
            .collect()
    }
}

impl HodgeDeligneDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Position, u64)>) -> Self {
        let mut d = Self::new();
        for (pos, m) in entries {
            d.add_at(pos, m);
        }
        d
    }

    /// A single entry.
    pub fn unit(pos: Position, m: u64) -> Self {
        Self::from_entries([(pos, m)])
    }

    pub fn get(&self, pos: Position) -> u64 {
        self.entries.get(&pos).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, pos: Position, m: u64) {
        if m > 0 {
            *self.entries.entry(pos).or_insert(0) += m;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Position, u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total dimension.
    pub fn mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (pos, m) in other.iter() {
            out.add_at(pos, m);
        }
        out
    }

    pub fn subtract(&self, other: &Self) -> Result<Self, HodgeError> {
        let mut out = self.clone();
        for (pos, m) in other.iter() {
            let have = out.get(pos);
            if have < m {
                return Err(HodgeError::Underflow { pos, have, need: m });
            }
            if have == m {
                out.entries.remove(&pos);
            } else {
                out.entries.insert(pos, have - m);
            }
        }
        Ok(out)
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.iter().all(|(pos, m)| m <= other.get(pos))
    }

    /// Tate twist: `(p, q) -> (p + m, q + m)`, so `Q(-1)` is `m = 1`.
    pub fn twist(&self, m: i64) -> Self {
        Self::from_entries(self.iter().map(|((p, q), k)| ((p + m, q + m), k)))
    }

    pub fn dual(&self) -> Self {
        Self::from_entries(self.iter().map(|((p, q), k)| ((-p, -q), k)))
    }

    /// `dim Gr_F^{p0}`: the sum over `q` of `h^{p0, q}`.
    pub fn gr_f(&self, p0: i64) -> u64 {
        self.iter().filter(|((p, _), _)| *p == p0).map(|(_, m)| m).sum()
    }

    /// `dim Gr^W_w` for every weight present.
    pub fn weights(&self) -> BTreeMap<i64, u64> {
        let mut w = BTreeMap::new();
        for ((p, q), m) in self.iter() {
            *w.entry(p + q).or_insert(0) += m;
        }
        w
    }

    /// Part of weight at most `w`.
    pub fn weight_at_most(&self, w: i64) -> Self {
        Self::from_entries(self.iter().filter(|((p, q), _)| p + q <= w))
    }

    /// Bounding box `(p_min, p_max, q_min, q_max)`, `None` when empty.
    pub fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let ps = self.entries.keys().map(|k| k.0);
        let qs = self.entries.keys().map(|k| k.1);
        Some((ps.clone().min()?, ps.max()?, qs.clone().min()?, qs.max()?))
    }
}

impl fmt::Debug for HodgeDeligneDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((p, q), m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p},{q}):{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for HodgeDeligneDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Integer-valued table used for alternating sums, where entries may be
/// negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedDiagram {
    entries: BTreeMap<Position, i64>,
}

impl SignedDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `sign * d` entrywise.
    pub fn accumulate(&mut self, d: &HodgeDeligneDiagram, sign: i64) -> &mut Self {
        for (pos, m) in d.iter() {
            let e = self.entries.entry(pos).or_insert(0);
            *e += sign * m as i64;
            if *e == 0 {
                self.entries.remove(&pos);
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Position, i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// First nonzero entry, in `(p, q)` order.
    pub fn first_nonzero(&self) -> Option<(Position, i64)> {
        self.iter().next()
    }

    /// The table as a diagram, or the first negative entry.
    pub fn to_diagram(&self) -> Result<HodgeDeligneDiagram, (Position, i64)> {
        if let Some((pos, v)) = self.iter().find(|(_, v)| *v < 0) {
            return Err((pos, v));
        }
        Ok(HodgeDeligneDiagram::from_entries(
            self.iter().map(|(pos, v)| (pos, v as u64)),
        ))
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }
}

fn default_one() -> u64 {
    1
}

fn is_one(x: &u64) -> bool {
    *x == 1
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

/// A Jordan string of `N` with top at `top`, occupying
/// `(p - j, q - j)` for `j < length`, on which `T^ss` acts by
/// `exp(2 pi i exponent / order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NString {
    pub top: Position,
    pub length: u32,
    #[serde(default = "default_one", skip_serializing_if = "is_one")]
    pub order: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub exponent: u64,
    #[serde(default = "default_one", skip_serializing_if = "is_one")]
    pub mult: u64,
}

impl NString {
    /// Unipotent string.
    pub fn unipotent(top: Position, length: u32, mult: u64) -> Self {
        NString {
            top,
            length,
            order: 1,
            exponent: 0,
            mult,
        }
    }

    pub fn with_eigen(top: Position, length: u32, order: u64, exponent: u64, mult: u64) -> Self {
        NString {
            top,
            length,
            order,
            exponent,
            mult,
        }
    }

    pub fn bottom(&self) -> Position {
        let s = self.length as i64 - 1;
        (self.top.0 - s, self.top.1 - s)
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        (0..self.length as i64).map(|j| (self.top.0 - j, self.top.1 - j))
    }

    pub fn is_unipotent(&self) -> bool {
        self.order == 1
    }

    fn sort_key(&self) -> (u64, u32, i64, i64, u64) {
        (self.order, self.length, self.top.0, self.top.1, self.exponent)
    }

    fn check(&self, degree: i64) -> Result<(), HodgeError> {
        let fail = |reason: String| {
            Err(HodgeError::InvalidString {
                string: format!("{self:?}"),
                reason,
            })
        };
        if self.length == 0 {
            return fail("length must be at least 1".into());
        }
        if self.mult == 0 {
            return fail("multiplicity must be at least 1".into());
        }
        if self.order == 0 {
            return fail("eigen order must be at least 1".into());
        }
        if self.order == 1 && self.exponent != 0 {
            return fail("unipotent strings carry exponent 0".into());
        }
        if self.order > 1 && (self.exponent >= self.order || self.exponent.gcd(&self.order) != 1) {
            return fail(format!(
                "exponent must be a unit modulo {} below it",
                self.order
            ));
        }
        let (p, q) = self.top;
        if p + q != degree + self.length as i64 - 1 {
            return fail(format!(
                "not centered at degree {degree}: p+q = {} but k+l-1 = {}",
                p + q,
                degree + self.length as i64 - 1
            ));
        }
        Ok(())
    }
}

/// A limiting MHS in degree `k` as a multiset of N-strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct LmhsSpec {
    degree: i64,
    strings: Vec<NString>,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    degree: i64,
    #[serde(default)]
    strings: Vec<NString>,
}

impl TryFrom<RawSpec> for LmhsSpec {
    type Error = HodgeError;
    fn try_from(r: RawSpec) -> Result<Self, HodgeError> {
        LmhsSpec::new(r.degree, r.strings)
    }
}

impl From<LmhsSpec> for RawSpec {
    fn from(s: LmhsSpec) -> Self {
        RawSpec {
            degree: s.degree,
            strings: s.strings,
        }
    }
}

impl LmhsSpec {
    /// Validates and canonicalizes: strings sorted by `(d, l, p, q, a)`, equal
    /// strings merged.
    pub fn new(degree: i64, strings: Vec<NString>) -> Result<Self, HodgeError> {
        let mut merged: BTreeMap<(u64, u32, i64, i64, u64), NString> = BTreeMap::new();
        for s in strings {
            s.check(degree)?;
            merged
                .entry(s.sort_key())
                .and_modify(|t| t.mult += s.mult)
                .or_insert(s);
        }
        Ok(LmhsSpec {
            degree,
            strings: merged.into_values().collect(),
        })
    }

    pub fn empty(degree: i64) -> Self {
        LmhsSpec {
            degree,
            strings: Vec::new(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn strings(&self) -> &[NString] {
        &self.strings
    }

    pub fn dim(&self) -> u64 {
        self.strings.iter().map(|s| s.length as u64 * s.mult).sum()
    }

    pub fn diagram(&self) -> HodgeDeligneDiagram {
        let mut d = HodgeDeligneDiagram::new();
        for s in &self.strings {
            for pos in s.positions() {
                d.add_at(pos, s.mult);
            }
        }
        d
    }

    /// `ker(T - I)`: the bottom of every unipotent string.
    pub fn ker_t_minus_i(&self) -> HodgeDeligneDiagram {
        HodgeDeligneDiagram::from_entries(
            self.strings
                .iter()
                .filter(|s| s.is_unipotent())
                .map(|s| (s.bottom(), s.mult)),
        )
    }

    /// `coker(T - I)`, untwisted: the top of every unipotent string.
    pub fn coker_t_minus_i(&self) -> HodgeDeligneDiagram {
        HodgeDeligneDiagram::from_entries(
            self.strings
                .iter()
                .filter(|s| s.is_unipotent())
                .map(|s| (s.top, s.mult)),
        )
    }

    /// `ker(T^ss - I)`: every position of every unipotent string.
    pub fn ker_tss_minus_i(&self) -> HodgeDeligneDiagram {
        let mut d = HodgeDeligneDiagram::new();
        for s in self.strings.iter().filter(|s| s.is_unipotent()) {
            for pos in s.positions() {
                d.add_at(pos, s.mult);
            }
        }
        d
    }

    /// Replaces every eigen order `d` by `d / gcd(d, kappa)`, reducing the
    /// exponent modulo the new order.
    pub fn with_orders_reduced(&self, kappa: u64) -> Self {
        let strings = self
            .strings
            .iter()
            .map(|s| {
                let order = reduce_order(s.order, kappa);
                let factor = kappa / s.order.gcd(&kappa);
                NString {
                    order,
                    exponent: (s.exponent * factor) % order,
                    ..s.clone()
                }
            })
            .collect();
        LmhsSpec::new(self.degree, strings).expect("order reduction keeps strings valid")
    }

    /// Hard Lefschetz symmetry `dim Gr^W_{k+j} = dim Gr^W_{k-j}`.
    pub fn weight_symmetric(&self) -> bool {
        let w = self.diagram().weights();
        w.iter()
            .all(|(&wt, &m)| w.get(&(2 * self.degree - wt)).copied().unwrap_or(0) == m)
    }

    /// Rationality warnings: for every `(d, l)`, each primitive exponent must
    /// carry the same total multiplicity, and complex conjugation
    /// `(p, q, a) -> (q, p, d - a)` must preserve the data.
    ///
    /// The count is taken over all positions at once: Galois conjugation
    /// permutes eigenlines without respecting the Hodge type, so balance is
    /// only expected in total.
    pub fn galois_warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        let mut totals: BTreeMap<(u64, u32), BTreeMap<u64, u64>> = BTreeMap::new();
        let mut cells: BTreeMap<(u64, u32, Position, u64), u64> = BTreeMap::new();
        for s in self.strings.iter().filter(|s| !s.is_unipotent()) {
            *totals
                .entry((s.order, s.length))
                .or_default()
                .entry(s.exponent)
                .or_insert(0) += s.mult;
            *cells
                .entry((s.order, s.length, s.top, s.exponent))
                .or_insert(0) += s.mult;
        }
        for ((d, l), by_a) in &totals {
            let units: BTreeSet<u64> = (1..*d).filter(|a| a.gcd(d) == 1).collect();
            let counts: BTreeSet<u64> = units
                .iter()
                .map(|a| by_a.get(a).copied().unwrap_or(0))
                .collect();
            if counts.len() > 1 {
                warnings.push(format!(
                    "order {d}, length {l}: primitive exponents carry unequal multiplicities {by_a:?}"
                ));
            }
        }
        for (&(d, l, (p, q), a), &m) in &cells {
            let partner = cells.get(&(d, l, (q, p), (d - a) % d)).copied().unwrap_or(0);
            if partner != m {
                warnings.push(format!(
                    "order {d}, length {l}: ({p},{q}) exponent {a} has {m} but its conjugate has {partner}"
                ));
            }
        }
        warnings
    }

    /// Eigenvalue data per position for strings with `d > 1`:
    /// `(exponent, order, multiplicity)`.
    pub fn eigen_annotations(&self) -> BTreeMap<Position, Vec<(u64, u64, u64)>> {
        let mut out: BTreeMap<Position, Vec<(u64, u64, u64)>> = BTreeMap::new();
        for s in self.strings.iter().filter(|s| !s.is_unipotent()) {
            for pos in s.positions() {
                out.entry(pos).or_default().push((s.exponent, s.order, s.mult));
            }
        }
        out
    }
}
