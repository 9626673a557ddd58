//! Cyclic base change `t = s^kappa` and quotients by the deck group.
//!
//! Only eigenvalue orders change under base change: a string with
//! eigenvalue `zeta_d^a` picks up `zeta_d^{a kappa}`. `N` is rescaled by
//! `kappa`, which no diagram-level quantity sees, so string lengths stay.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degeneration::DegenerationFixture;
use crate::hodge::{HodgeDeligneDiagram, HodgeError, LmhsSpec};
use crate::ratlin::euler_phi;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseChangeError {
    #[error("kappa must be at least 1")]
    ZeroKappa,
    #[error("degree {degree}: trivial part exceeds the special fiber: {source}")]
    IsotypicExceeds { degree: i64, source: HodgeError },
    #[error("degree {degree}: quotient lmhs has degree {found}")]
    DegreeLabel { degree: i64, found: i64 },
}

/// `d -> m_d`: the number of copies of `W_d = Q[x]/Phi_d` in a rational
/// representation of a cyclic group. Serialized as `[[d, m], ...]`.
pub type CyclotomicMultiset = BTreeMap<u64, u64>;

pub fn base_change_lmhs(spec: &LmhsSpec, kappa: u64) -> Result<LmhsSpec, BaseChangeError> {
    if kappa == 0 {
        return Err(BaseChangeError::ZeroKappa);
    }
    Ok(spec.with_orders_reduced(kappa))
}

/// Base-changes every stored lmhs. Special fibers, phantoms and vanishing
/// data belong to the old family and are dropped.
pub fn base_change_fixture(fx: &DegenerationFixture, kappa: u64) -> Result<DegenerationFixture, BaseChangeError> {
    let mut out = fx.clone();
    for data in out.degrees.values_mut() {
        if let Some(l) = &data.lmhs {
            data.lmhs = Some(base_change_lmhs(l, kappa)?);
        }
        data.special_fiber = None;
        data.phantom = None;
        data.vanishing = None;
    }
    Ok(out)
}

/// `H_lim^{T^kappa} / H_lim^T`.
pub fn invariant_gap(spec: &LmhsSpec, kappa: u64) -> Result<HodgeDeligneDiagram, BaseChangeError> {
    let after = base_change_lmhs(spec, kappa)?.ker_t_minus_i();
    Ok(after
        .subtract(&spec.ker_t_minus_i())
        .expect("invariants only grow under base change"))
}

/// `V_l` restricted to `<T^kappa>` is `W_{l/(l,kappa)}` repeated
/// `phi(l)/phi(l/(l,kappa))` times.
pub fn restrict_cyclotomic(l: u64, kappa: u64) -> (u64, u64) {
    let d = l / num_integer::gcd(l, kappa);
    (d, euler_phi(l) / euler_phi(d))
}

/// Expands an `l`-table into the `d`-table it restricts to.
pub fn expand_refinement(n: &CyclotomicMultiset, kappa: u64) -> CyclotomicMultiset {
    let mut m = CyclotomicMultiset::new();
    for (&l, &count) in n {
        if count == 0 {
            continue;
        }
        let (d, c) = restrict_cyclotomic(l, kappa);
        *m.entry(d).or_default() += c * count;
    }
    m
}

/// All `l`-tables whose restriction along `kappa` is exactly `m`, in
/// lexicographic order of their `(l, n_l)` lists.
///
/// Any `l` restricting to `d` has the form `d g` with `g = (l, kappa)`, so
/// `l <= kappa d` and the search below is exhaustive. When `kappa | d` the
/// only candidate is `l = kappa d` with `kappa` copies, which forces
/// `n_{kappa d} = m_d / kappa`.
pub fn cyclotomic_refinement(m: &CyclotomicMultiset, kappa: u64) -> Result<Vec<CyclotomicMultiset>, BaseChangeError> {
    if kappa == 0 {
        return Err(BaseChangeError::ZeroKappa);
    }
    let mut per_d: Vec<Vec<Vec<(u64, u64)>>> = Vec::new();
    for (&d, &md) in m {
        if md == 0 {
            continue;
        }
        let candidates: Vec<(u64, u64)> = (1..=kappa)
            .filter(|g| kappa.is_multiple_of(*g))
            .map(|g| d * g)
            .filter_map(|l| {
                let (dl, c) = restrict_cyclotomic(l, kappa);
                (dl == d).then_some((l, c))
            })
            .collect();
        let mut sols = Vec::new();
        compositions(&candidates, md, &mut Vec::new(), &mut sols);
        if sols.is_empty() {
            return Ok(Vec::new());
        }
        per_d.push(sols);
    }
    let mut out: Vec<Vec<(u64, u64)>> = vec![Vec::new()];
    for sols in per_d {
        out = out
            .iter()
            .flat_map(|prefix| {
                sols.iter().map(move |s| {
                    let mut v = prefix.clone();
                    v.extend(s.iter().copied());
                    v
                })
            })
            .collect();
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out.sort();
    Ok(out.into_iter().map(|v| v.into_iter().collect()).collect())
}

/// Non-negative `n` with `sum c_i n_i = target`; zero counts omitted.
fn compositions(cands: &[(u64, u64)], target: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Vec<(u64, u64)>>) {
    let Some((&(l, c), rest)) = cands.split_first() else {
        if target == 0 {
            out.push(acc.clone());
        }
        return;
    };
    for n in 0..=target / c {
        if n > 0 {
            acc.push((l, n));
        }
        compositions(rest, target - n * c, acc, out);
        if n > 0 {
            acc.pop();
        }
    }
}

/// Trivial-character parts of a finite group action on a cover.
///
/// Degrees missing from `trivial` are acted on trivially. `lmhs` holds the
/// invariant part of the cover's limit, which is the limit of the quotient
/// family; degrees missing there keep the cover's lmhs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GIsotypicData {
    pub group_order: u64,
    #[serde(default)]
    pub trivial: BTreeMap<i64, HodgeDeligneDiagram>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lmhs: BTreeMap<i64, LmhsSpec>,
}

/// The quotient family's fixture: special fibers cut down to their
/// invariant parts. Phantom and vanishing data of the cover are dropped
/// since they are recomputed from the new fibers.
pub fn quotient_invariants(cover: &DegenerationFixture, iso: &GIsotypicData) -> Result<DegenerationFixture, BaseChangeError> {
    let mut out = cover.clone();
    for (&k, triv) in &iso.trivial {
        let data = out.degrees.entry(k).or_default();
        if let Some(sf) = &data.special_fiber {
            sf.subtract(triv)
                .map_err(|source| BaseChangeError::IsotypicExceeds { degree: k, source })?;
        }
        data.special_fiber = Some(triv.clone());
    }
    for (&k, l) in &iso.lmhs {
        if l.degree() != k {
            return Err(BaseChangeError::DegreeLabel {
                degree: k,
                found: l.degree(),
            });
        }
        out.degrees.entry(k).or_default().lmhs = Some(l.clone());
    }
    if !iso.trivial.is_empty() || !iso.lmhs.is_empty() {
        for data in out.degrees.values_mut() {
            data.phantom = None;
            data.vanishing = None;
        }
    }
    Ok(out)
}
