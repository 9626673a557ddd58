//! One-parameter degenerations: Clemens-Schmid and vanishing-cycle
//! bookkeeping per degree, frontier Hodge-number checks, Euler-Poincare and
//! Shioda assembly, Milnor numbers of tails.
//!
//! Sequences are checked at the level of Hodge-Deligne numbers. With
//! `coinv(k) = coker(T - I | H^{k-2}_lim)(-1)` and
//! `hom(k) = H_{2n-k+2}(X_0)(-n-1)` the relations used are
//!
//! ```text
//! CS    coinv(k) - hom(k) + H^k(X_0) - inv(k) = 0
//! split H^k(X_0) = inv(k) + ph(k)
//! VC    van(k) = lim(k) - inv(k) + ph(k+1)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hodge::{HodgeDeligneDiagram, HodgeError, LmhsSpec, SignedDiagram};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegenerationError {
    #[error("{position} missing in degree {degree}")]
    Missing { position: Position, degree: i64 },
    #[error("{position} in degree {degree}: {source}")]
    Arithmetic {
        position: Position,
        degree: i64,
        source: HodgeError,
    },
    #[error("{position} in degree {degree} has no non-negative solution: entry {value} at {pq:?}")]
    Negative {
        position: Position,
        degree: i64,
        pq: (i64, i64),
        value: i64,
    },
    #[error("{position} in degree {degree} is underdetermined: {why}")]
    Underdetermined {
        position: Position,
        degree: i64,
        why: String,
    },
    #[error("{position} in degree {degree}: the sequences disagree ({a} vs {b})")]
    Inconsistent {
        position: Position,
        degree: i64,
        a: HodgeDeligneDiagram,
        b: HodgeDeligneDiagram,
    },
    #[error("lmhs stored under degree {key} has degree {found}")]
    DegreeLabel { key: i64, found: i64 },
    #[error("degree {0} outside 0..=2n")]
    DegreeRange(i64),
    #[error("invalid local system data: {0}")]
    LocalSystem(String),
}

/// Slots of the Clemens-Schmid and vanishing-cycle sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    Coinvariants,
    Homology,
    SpecialFiber,
    Invariants,
    Vanishing,
    Phantom,
}

impl Position {
    pub const ALL: [Position; 6] = [
        Position::Coinvariants,
        Position::Homology,
        Position::SpecialFiber,
        Position::Invariants,
        Position::Vanishing,
        Position::Phantom,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Position::Coinvariants => "coinvariants",
            Position::Homology => "homology",
            Position::SpecialFiber => "special_fiber",
            Position::Invariants => "invariants",
            Position::Vanishing => "vanishing",
            Position::Phantom => "phantom",
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Position {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Position::ALL
            .into_iter()
            .find(|p| p.name() == s || p.name().replace('_', "-") == s)
            .ok_or_else(|| {
                let names: Vec<_> = Position::ALL.iter().map(|p| p.name()).collect();
                format!("unknown position {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SingularityClass {
    #[default]
    None,
    DuBois,
    Slc,
    Rational,
    LogTerminal,
}

impl SingularityClass {
    /// Every class other than `None` implies du Bois.
    pub fn is_du_bois(&self) -> bool {
        *self != SingularityClass::None
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, SingularityClass::Rational | SingularityClass::LogTerminal)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub total_space_smooth: bool,
    #[serde(default)]
    pub special_fiber_reduced: bool,
    #[serde(default)]
    pub d_sing: u32,
    #[serde(default)]
    pub singularity_class: SingularityClass,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_fiber: Option<HodgeDeligneDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmhs: Option<LmhsSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phantom: Option<HodgeDeligneDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<HodgeDeligneDiagram>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationFixture {
    pub n: u32,
    #[serde(default)]
    pub flags: Flags,
    #[serde(with = "crate::report::int_keys")]
    pub degrees: BTreeMap<i64, DegreeData>,
}

/// Value of a term together with how it was obtained.
enum Known {
    Given(HodgeDeligneDiagram),
    /// Defaulted to empty; the string says why.
    Assumed(String),
}

impl DegenerationFixture {
    pub fn top_degree(&self) -> i64 {
        2 * self.n as i64
    }

    fn in_range(&self, k: i64) -> bool {
        (0..=self.top_degree()).contains(&k)
    }

    pub fn validate(&self) -> Result<(), DegenerationError> {
        for (&k, data) in &self.degrees {
            if !self.in_range(k) {
                return Err(DegenerationError::DegreeRange(k));
            }
            if let Some(l) = &data.lmhs {
                if l.degree() != k {
                    return Err(DegenerationError::DegreeLabel {
                        key: k,
                        found: l.degree(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self, k: i64) -> Option<&DegreeData> {
        self.degrees.get(&k)
    }

    fn degree_mut(&mut self, k: i64) -> &mut DegreeData {
        self.degrees.entry(k).or_default()
    }

    fn special_fiber(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        if !self.in_range(k) {
            return Some(HodgeDeligneDiagram::new());
        }
        self.degree(k)?.special_fiber.clone()
    }

    fn lmhs(&self, k: i64) -> Option<LmhsSpec> {
        if !self.in_range(k) {
            return Some(LmhsSpec::empty(k));
        }
        self.degree(k)?.lmhs.clone()
    }

    /// `twist(coker(T - I | H^{k-2}_lim), 1)`.
    pub fn coinvariants(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        self.lmhs(k - 2).map(|l| l.coker_t_minus_i().twist(1))
    }

    pub fn invariants(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        self.lmhs(k).map(|l| l.ker_t_minus_i())
    }

    fn explicit_phantom(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        if !self.in_range(k) {
            return Some(HodgeDeligneDiagram::new());
        }
        self.degree(k)?.phantom.clone()
    }

    fn explicit_vanishing(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        if !self.in_range(k) {
            return Some(HodgeDeligneDiagram::new());
        }
        self.degree(k)?.vanishing.clone()
    }

    /// Phantom classes in degree `k`: as supplied, else `H^k(X_0) - inv(k)`
    /// when both are known, else unknown.
    pub fn phantom(&self, k: i64) -> Option<HodgeDeligneDiagram> {
        self.explicit_phantom(k).or_else(|| {
            let sf = self.special_fiber(k)?;
            sf.subtract(&self.invariants(k)?).ok()
        })
    }

    fn phantom_or_assumed(&self, k: i64) -> Known {
        match self.phantom(k) {
            Some(d) => Known::Given(d),
            None => Known::Assumed(format!("phantom in degree {k} assumed zero")),
        }
    }

    /// Vanishing cohomology as supplied or as computed.
    fn vanishing_effective(&self, k: i64, report: &mut Report) -> Option<HodgeDeligneDiagram> {
        self.explicit_vanishing(k)
            .or_else(|| vanishing_cohomology_noted(self, k, report).ok())
    }

    /// Removes the stored data that determines `position` in degree `k`.
    pub fn delete(&mut self, k: i64, position: Position) {
        match position {
            Position::SpecialFiber => self.degree_mut(k).special_fiber = None,
            Position::Invariants => self.degree_mut(k).lmhs = None,
            Position::Coinvariants => self.degree_mut(k - 2).lmhs = None,
            Position::Homology => {
                let j = self.top_degree() - k + 2;
                self.degree_mut(j).special_fiber = None
            }
            Position::Vanishing => self.degree_mut(k).vanishing = None,
            Position::Phantom => self.degree_mut(k).phantom = None,
        }
        self.degrees.retain(|_, d| *d != DegreeData::default());
    }

    /// Whether the fixture stores `position` in degree `k` directly.
    pub fn stores(&self, k: i64, position: Position) -> bool {
        let Some(d) = self.degree(k) else {
            return false;
        };
        match position {
            Position::SpecialFiber => d.special_fiber.is_some(),
            Position::Vanishing => d.vanishing.is_some(),
            Position::Phantom => d.phantom.is_some(),
            _ => false,
        }
    }
}

/// `twist(dual(H^{2n-k+2}(X_0)), n + 1)`.
pub fn homology_term(fx: &DegenerationFixture, k: i64) -> Result<HodgeDeligneDiagram, DegenerationError> {
    let j = fx.top_degree() - k + 2;
    fx.special_fiber(j)
        .map(|d| d.dual().twist(fx.n as i64 + 1))
        .ok_or(DegenerationError::Missing {
            position: Position::SpecialFiber,
            degree: j,
        })
}

fn need<T>(v: Option<T>, position: Position, degree: i64) -> Result<T, DegenerationError> {
    v.ok_or(DegenerationError::Missing { position, degree })
}

/// Clemens-Schmid checks in degree `k`.
pub fn check_cs(fx: &DegenerationFixture, k: i64) -> Result<Report, DegenerationError> {
    let mut r = Report::new();
    let loc = format!("k={k}");
    if !fx.flags.total_space_smooth {
        r.skip("cs", loc, "total space not flagged smooth");
        return Ok(r);
    }
    let coinv = need(fx.coinvariants(k), Position::Coinvariants, k)?;
    let hom = homology_term(fx, k)?;
    let sf = need(fx.special_fiber(k), Position::SpecialFiber, k)?;
    let inv = need(fx.invariants(k), Position::Invariants, k)?;

    let mut alt = SignedDiagram::new();
    alt.accumulate(&coinv, 1)
        .accumulate(&hom, -1)
        .accumulate(&sf, 1)
        .accumulate(&inv, -1);
    r.check("cs.alternating_sum", loc.clone(), alt.is_zero(), || {
        let ((p, q), v) = alt.first_nonzero().unwrap();
        format!("({p},{q}): sum {v}")
    });
    r.check("cs.first_map_injective", loc.clone(), coinv.le(&hom), || {
        first_excess(&coinv, &hom)
    });
    r.check("cs.last_map_surjective", loc.clone(), inv.le(&sf), || first_excess(&inv, &sf));
    match hom.subtract(&coinv) {
        Ok(image) => {
            let bad = image
                .iter()
                .find(|((p, q), _)| p + q != k || *p < 1 || *q < 1 || *p > k - 1 || *q > k - 1);
            r.check("cs.gysin_image_pure", loc, bad.is_none(), || {
                let ((p, q), m) = bad.unwrap();
                format!("({p},{q}):{m} outside weight {k}, level <= {}", k - 2)
            });
        }
        Err(e) => r.fail("cs.gysin_image_pure", loc, e.to_string()),
    }
    Ok(r)
}

fn first_excess(small: &HodgeDeligneDiagram, big: &HodgeDeligneDiagram) -> String {
    small
        .iter()
        .find(|(pos, m)| *m > big.get(*pos))
        .map(|((p, q), m)| format!("({p},{q}): {m} > {}", big.get((p, q))))
        .unwrap_or_default()
}

fn vanishing_cohomology_noted(
    fx: &DegenerationFixture,
    k: i64,
    report: &mut Report,
) -> Result<HodgeDeligneDiagram, DegenerationError> {
    let lmhs = need(fx.lmhs(k), Position::Invariants, k)?;
    let quotient = lmhs
        .diagram()
        .subtract(&lmhs.ker_t_minus_i())
        .map_err(|source| DegenerationError::Arithmetic {
            position: Position::Vanishing,
            degree: k,
            source,
        })?;
    let ph = match fx.phantom_or_assumed(k + 1) {
        Known::Given(d) => d,
        Known::Assumed(why) => {
            report.note(why);
            HodgeDeligneDiagram::new()
        }
    };
    Ok(quotient.add(&ph))
}

/// `lim(k) / ker(T - I) + ph(k + 1)`.
pub fn vanishing_cohomology(fx: &DegenerationFixture, k: i64) -> Result<HodgeDeligneDiagram, DegenerationError> {
    vanishing_cohomology_noted(fx, k, &mut Report::new())
}

/// Vanishing cohomology confined to `[n - d_sing, n + d_sing]`, and for
/// isolated singularities `H^k(X_0) = H^k_lim` away from `{n, n+1}`.
pub fn check_support_range(fx: &DegenerationFixture) -> Report {
    let mut r = Report::new();
    if !fx.flags.total_space_smooth {
        r.skip("support", "all", "total space not flagged smooth");
        return r;
    }
    let (n, ds) = (fx.n as i64, fx.flags.d_sing as i64);
    for k in 0..=fx.top_degree() {
        let loc = format!("k={k}");
        if let (Some(stored), Ok(computed)) = (fx.explicit_vanishing(k), vanishing_cohomology(fx, k)) {
            r.check("support.vanishing_consistent", loc.clone(), stored == computed, || {
                format!("stored {stored} vs computed {computed}")
            });
        }
        if k < n - ds || k > n + ds {
            match fx.vanishing_effective(k, &mut r) {
                Some(v) => r.check("support.vanishing_range", loc.clone(), v.is_empty(), || {
                    format!("mass {} outside [{}, {}]", v.mass(), n - ds, n + ds)
                }),
                None => r.skip("support.vanishing_range", loc.clone(), "lmhs missing"),
            }
        }
        if ds == 0 && k != n && k != n + 1 {
            match (fx.special_fiber(k), fx.lmhs(k)) {
                (Some(sf), Some(l)) => {
                    let lim = l.diagram();
                    r.check("support.isolated_iso", loc, sf == lim, || {
                        format!("H^k(X0) {sf} vs H^k_lim {lim}")
                    })
                }
                _ => r.skip("support.isolated_iso", loc, "special fiber or lmhs missing"),
            }
        }
    }
    r
}

/// Solves one slot of the sequences from the others.
///
/// The stored data behind the slot is ignored, so re-solving a deleted
/// position of a consistent fixture gives it back. When more than one
/// relation applies they must agree.
pub fn solve_unknown(
    fixture: &DegenerationFixture,
    k: i64,
    position: Position,
) -> Result<HodgeDeligneDiagram, DegenerationError> {
    let mut fx = fixture.clone();
    fx.delete(k, position);
    let mut candidates: Vec<(&str, SignedDiagram)> = Vec::new();
    let signed = |terms: &[(Option<HodgeDeligneDiagram>, i64)]| -> Option<SignedDiagram> {
        let mut s = SignedDiagram::new();
        for (t, sign) in terms {
            s.accumulate(t.as_ref()?, *sign);
        }
        Some(s)
    };
    let hom = homology_term(&fx, k).ok();
    let coinv = fx.coinvariants(k);
    let sf = fx.special_fiber(k);
    let inv = fx.invariants(k);
    let lim = |j: i64| fx.lmhs(j).map(|l| l.diagram());
    match position {
        Position::SpecialFiber => {
            if let Some(s) = signed(&[(hom.clone(), 1), (coinv.clone(), -1), (inv.clone(), 1)]) {
                candidates.push(("clemens-schmid", s));
            }
            if let Some(s) = signed(&[(inv.clone(), 1), (fx.explicit_phantom(k), 1)]) {
                candidates.push(("phantom split", s));
            }
        }
        Position::Invariants => {
            if let Some(s) = signed(&[(coinv.clone(), 1), (hom.clone(), -1), (sf.clone(), 1)]) {
                candidates.push(("clemens-schmid", s));
            }
            if let Some(s) = signed(&[(sf.clone(), 1), (fx.explicit_phantom(k), -1)]) {
                candidates.push(("phantom split", s));
            }
        }
        Position::Coinvariants => {
            if let Some(s) = signed(&[(hom.clone(), 1), (sf.clone(), -1), (inv.clone(), 1)]) {
                candidates.push(("clemens-schmid", s));
            }
        }
        Position::Homology => {
            if let Some(s) = signed(&[(coinv.clone(), 1), (sf.clone(), 1), (inv.clone(), -1)]) {
                candidates.push(("clemens-schmid", s));
            }
        }
        Position::Vanishing => {
            let ph = match fx.phantom_or_assumed(k + 1) {
                Known::Given(d) => d,
                Known::Assumed(_) => HodgeDeligneDiagram::new(),
            };
            if let Some(s) = signed(&[(lim(k), 1), (inv.clone(), -1), (Some(ph), 1)]) {
                candidates.push(("vanishing cycles", s));
            }
        }
        Position::Phantom => {
            if let Some(s) = signed(&[(sf.clone(), 1), (inv.clone(), -1)]) {
                candidates.push(("phantom split", s));
            }
            let prev = [
                (fx.explicit_vanishing(k - 1), 1),
                (lim(k - 1), -1),
                (fx.invariants(k - 1), 1),
            ];
            if k >= 1 {
                if let Some(s) = signed(&prev) {
                    candidates.push(("vanishing cycles", s));
                }
            }
        }
    }
    let mut solved: Option<HodgeDeligneDiagram> = None;
    for (_, s) in candidates {
        let d = s.to_diagram().map_err(|(pq, value)| DegenerationError::Negative {
            position,
            degree: k,
            pq,
            value,
        })?;
        match &solved {
            None => solved = Some(d),
            Some(prev) if *prev != d => {
                return Err(DegenerationError::Inconsistent {
                    position,
                    degree: k,
                    a: prev.clone(),
                    b: d,
                })
            }
            Some(_) => {}
        }
    }
    solved.ok_or_else(|| DegenerationError::Underdetermined {
        position,
        degree: k,
        why: "no relation has all of its other terms known".into(),
    })
}

/// Hodge-number identities licensed by the fixture flags.
pub fn check_frontier(fx: &DegenerationFixture) -> Report {
    let mut r = Report::new();
    let f = &fx.flags;
    for k in 0..=fx.top_degree() {
        let loc = format!("k={k}");
        let (Some(sf), Some(l)) = (fx.special_fiber(k), fx.lmhs(k)) else {
            r.skip("frontier", loc, "special fiber or lmhs missing");
            continue;
        };
        let inv = l.ker_t_minus_i();
        let lim = l.diagram();
        let tss = l.ker_tss_minus_i();
        if f.total_space_smooth {
            r.check("frontier.grF0_invariants", loc.clone(), sf.gr_f(0) == inv.gr_f(0), || {
                format!("grF0: H^k(X0) {} vs invariants {}", sf.gr_f(0), inv.gr_f(0))
            });
            let (a, b) = (sf.weight_at_most(k - 1), inv.weight_at_most(k - 1));
            r.check("frontier.W_invariants", loc.clone(), a == b, || {
                format!("W_(k-1): H^k(X0) {a} vs invariants {b}")
            });
        }
        if f.singularity_class.is_du_bois() && f.special_fiber_reduced {
            let (a, b, c) = (sf.gr_f(0), lim.gr_f(0), tss.gr_f(0));
            r.check("frontier.slc_grF0", loc.clone(), a == b && b == c, || {
                format!("grF0: H^k(X0) {a}, lmhs {b}, T^ss-invariants {c}")
            });
        } else {
            r.skip("frontier.slc_grF0", loc.clone(), "needs a reduced du Bois special fiber");
        }
        if f.singularity_class == SingularityClass::LogTerminal {
            let bad = lim.iter().find(|((p, q), _)| p * q == 0 && p + q < k);
            r.check("frontier.lt_low_weight", loc.clone(), bad.is_none(), || {
                let ((p, q), m) = bad.unwrap();
                format!("lmhs has ({p},{q}):{m}")
            });
        }
        if f.total_space_smooth && f.singularity_class.is_rational() {
            r.check("frontier.rational_grF1", loc, sf.gr_f(1) == tss.gr_f(1), || {
                format!("grF1: H^k(X0) {} vs T^ss-invariants {}", sf.gr_f(1), tss.gr_f(1))
            });
        }
    }
    r
}

/// `ph(n - k + 1) = ph(n + k + 1)(k)` for `k >= 1`.
pub fn phantom_hard_lefschetz(fx: &DegenerationFixture) -> Report {
    let mut r = Report::new();
    let n = fx.n as i64;
    for k in 1..=n + 1 {
        let loc = format!("k={k}");
        match (fx.phantom(n - k + 1), fx.phantom(n + k + 1)) {
            (Some(low), Some(high)) => {
                let shifted = high.twist(-k);
                r.check("phantom.hard_lefschetz", loc, low == shifted, || {
                    format!("ph({}) {low} vs ph({})({k}) {shifted}", n - k + 1, n + k + 1)
                });
            }
            _ => r.skip("phantom.hard_lefschetz", loc, "phantom not determined"),
        }
    }
    r
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSystemData {
    pub base_euler_characteristic: i64,
    pub base_h1: u64,
    pub generic_rank: u64,
    pub fixed_rank: u64,
    /// `rk(V / V^{T_sigma})` per singular point.
    #[serde(default)]
    pub local_drops: Vec<u64>,
}

/// `sum_sigma rk(V/V^T_sigma) - chi(S) rk V_v + h^1(S) rk V_c`.
pub fn euler_poincare_rank(data: &LocalSystemData) -> Result<u64, DegenerationError> {
    if data.fixed_rank > data.generic_rank {
        return Err(DegenerationError::LocalSystem(format!(
            "fixed rank {} exceeds generic rank {}",
            data.fixed_rank, data.generic_rank
        )));
    }
    let variable = (data.generic_rank - data.fixed_rank) as i64;
    let drops: i64 = data.local_drops.iter().map(|&d| d as i64).sum();
    let total = drops - data.base_euler_characteristic * variable + data.base_h1 as i64 * data.fixed_rank as i64;
    u64::try_from(total).map_err(|_| DegenerationError::LocalSystem(format!("negative rank {total}")))
}

/// Blocks of the decomposition of `IH^k` of a total space over a complete
/// curve.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiodaInputs {
    /// `H^0(U, V^k)`.
    #[serde(default)]
    pub h0_top: HodgeDeligneDiagram,
    /// `IH^1(S, V^{k-1})`.
    #[serde(default)]
    pub ih1: HodgeDeligneDiagram,
    /// Phantom classes of each singular fiber.
    #[serde(default)]
    pub phantoms: Vec<HodgeDeligneDiagram>,
    /// `H^0(U, V^{k-2})`, entering twisted by `(-1)`.
    #[serde(default)]
    pub h0_bottom: HodgeDeligneDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiodaTable {
    pub blocks: Vec<(String, HodgeDeligneDiagram)>,
    pub total: HodgeDeligneDiagram,
}

impl ShiodaTable {
    pub fn dim(&self) -> u64 {
        self.total.mass()
    }

    pub fn block_dims(&self) -> Vec<u64> {
        self.blocks.iter().map(|(_, d)| d.mass()).collect()
    }
}

pub fn shioda_assemble(inputs: &ShiodaInputs) -> ShiodaTable {
    let phantoms = inputs
        .phantoms
        .iter()
        .fold(HodgeDeligneDiagram::new(), |acc, d| acc.add(d));
    let blocks = vec![
        ("H0(U,V^k)".to_string(), inputs.h0_top.clone()),
        ("IH1(S,V^(k-1))".to_string(), inputs.ih1.clone()),
        ("phantom".to_string(), phantoms),
        ("H2_c(U,V^(k-2))".to_string(), inputs.h0_bottom.twist(1)),
    ];
    let total = blocks
        .iter()
        .fold(HodgeDeligneDiagram::new(), |acc, (_, d)| acc.add(d));
    ShiodaTable { blocks, total }
}

/// One level `k` of the tail strata: `H^{n-k}` of the `k`-fold
/// intersections of tail components and of special-fiber components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailLevel {
    pub k: u32,
    #[serde(default)]
    pub tail: HodgeDeligneDiagram,
    #[serde(default)]
    pub special: HodgeDeligneDiagram,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailStrata {
    pub n: u32,
    /// Euler characteristics of the open tail components.
    pub chi_open: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub levels: Vec<TailLevel>,
}

/// `(-1)^n (-1 + sum chi)`.
pub fn milnor_number(strata: &TailStrata) -> i64 {
    let s = -1 + strata.chi_open.iter().sum::<i64>();
    if strata.n.is_multiple_of(2) {
        s
    } else {
        -s
    }
}

/// The subquotient bound: `van <= sum_k H^{n-k}(E^[k]) + H^{n-k}(Y^[k]) (x) H~*(P^k)`,
/// where `H~*(P^k)` contributes twists `1..=k`.
pub fn tail_bound(strata: &TailStrata) -> HodgeDeligneDiagram {
    let mut bound = HodgeDeligneDiagram::new();
    for level in &strata.levels {
        bound = bound.add(&level.tail);
        for j in 1..=level.k as i64 {
            bound = bound.add(&level.special.twist(j));
        }
    }
    bound
}

pub fn tail_bound_check(strata: &TailStrata, van: &HodgeDeligneDiagram) -> Report {
    let mut r = Report::new();
    let bound = tail_bound(strata);
    r.check("tail.subquotient_bound", format!("n={}", strata.n), van.le(&bound), || {
        first_excess(van, &bound)
    });
    r
}
