//! Runs every check applicable to a fixture.

use std::fmt;
use std::str::FromStr;

use crate::degeneration::{
    check_cs, check_frontier, check_support_range, euler_poincare_rank, milnor_number, phantom_hard_lefschetz,
    shioda_assemble, tail_bound_check, DegenerationFixture,
};
use crate::fixture::{FixtureBody, FixtureFile, LocalSystemFixture, MultiParameterFixture, QuiverFixture, TailFixture};
use crate::polydisk;
use crate::quiver::{self, decompose_indecomposables, is_self_dual, validate};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckSet {
    Cs,
    Support,
    Frontier,
    Phantom,
    Lmhs,
    Quiver,
    Polydisk,
    LocalSystem,
    Tail,
}

impl CheckSet {
    pub const ALL: [CheckSet; 9] = [
        CheckSet::Cs,
        CheckSet::Support,
        CheckSet::Frontier,
        CheckSet::Phantom,
        CheckSet::Lmhs,
        CheckSet::Quiver,
        CheckSet::Polydisk,
        CheckSet::LocalSystem,
        CheckSet::Tail,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckSet::Cs => "cs",
            CheckSet::Support => "support",
            CheckSet::Frontier => "frontier",
            CheckSet::Phantom => "phantom",
            CheckSet::Lmhs => "lmhs",
            CheckSet::Quiver => "quiver",
            CheckSet::Polydisk => "polydisk",
            CheckSet::LocalSystem => "local-system",
            CheckSet::Tail => "tail",
        }
    }

    /// Fixture kind the set applies to.
    pub fn kind(&self) -> &'static str {
        match self {
            CheckSet::Cs | CheckSet::Support | CheckSet::Frontier | CheckSet::Phantom | CheckSet::Lmhs => "degeneration",
            CheckSet::Quiver => "quiver",
            CheckSet::Polydisk => "multi_parameter",
            CheckSet::LocalSystem => "local_system",
            CheckSet::Tail => "tail",
        }
    }
}

impl fmt::Display for CheckSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckSet {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CheckSet::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = CheckSet::ALL.iter().map(|c| c.name()).collect();
            format!("unknown check set {s:?}; expected one of {}", names.join(", "))
        })
    }
}

/// The requested sets do not fit the fixture kind.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{fixture} fixture has no {requested} checks")]
pub struct KindMismatch {
    pub fixture: &'static str,
    pub requested: String,
}

/// Runs the requested check sets, or all applicable ones when `which` is
/// empty. Requesting only sets of another fixture kind is an error.
pub fn run(file: &FixtureFile, which: &[CheckSet]) -> Result<Report, KindMismatch> {
    let kind = file.body.kind();
    let wanted: Vec<CheckSet> = if which.is_empty() {
        CheckSet::ALL.into_iter().filter(|c| c.kind() == kind).collect()
    } else {
        which.iter().copied().filter(|c| c.kind() == kind).collect()
    };
    if wanted.is_empty() {
        let requested: Vec<_> = which.iter().map(|c| c.name()).collect();
        return Err(KindMismatch {
            fixture: kind,
            requested: requested.join(", "),
        });
    }
    let mut r = Report::new();
    match &file.body {
        FixtureBody::Degeneration(fx) => degeneration(fx, &wanted, &mut r),
        FixtureBody::Quiver(q) => quiver_checks(q, &mut r),
        FixtureBody::MultiParameter(m) => multi_parameter(m, &mut r),
        FixtureBody::LocalSystem(l) => local_system(l, &mut r),
        FixtureBody::Tail(t) => tail(t, &mut r),
    }
    Ok(r)
}

fn degeneration(fx: &DegenerationFixture, wanted: &[CheckSet], r: &mut Report) {
    if wanted.contains(&CheckSet::Cs) {
        for k in 0..=fx.top_degree() {
            match check_cs(fx, k) {
                Ok(rep) => r.extend(rep),
                Err(e) => r.fail("cs", format!("k={k}"), e.to_string()),
            }
        }
    }
    if wanted.contains(&CheckSet::Support) {
        r.extend(check_support_range(fx));
    }
    if wanted.contains(&CheckSet::Frontier) {
        r.extend(check_frontier(fx));
    }
    if wanted.contains(&CheckSet::Phantom) {
        r.extend(phantom_hard_lefschetz(fx));
    }
    if wanted.contains(&CheckSet::Lmhs) {
        for (k, data) in &fx.degrees {
            let Some(l) = &data.lmhs else { continue };
            r.check("lmhs.weight_symmetry", format!("k={k}"), l.weight_symmetric(), || {
                "Gr^W is not symmetric about k".into()
            });
            let warnings = l.galois_warnings();
            r.check("lmhs.galois_balance", format!("k={k}"), warnings.is_empty(), || warnings.join("; "));
        }
    }
}

fn quiver_checks(fx: &QuiverFixture, r: &mut Report) {
    let rep = &fx.rep;
    let violations = validate(rep);
    let ok = violations.is_empty();
    r.check("quiver.valid", "rep", ok, || {
        violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
    });
    if !ok {
        return;
    }
    let split = quiver::decomposes(rep);
    let cs = quiver::cs_sequence(rep).exact();
    let lic = quiver::local_invariant_cycle(rep);
    r.note(format!("decomposes = {split}, cs exact = {cs}, local invariant cycle = {lic}"));
    let summands = match decompose_indecomposables(rep) {
        Ok(m) => m,
        Err(e) => {
            r.fail("quiver.decompose", "rep", e.to_string());
            return;
        }
    };
    let consistent = split == cs && cs == lic;
    match is_self_dual(&summands) {
        Ok(()) => r.check("quiver.verdicts_agree", "rep", consistent, || {
            format!("decomposes {split}, cs exact {cs}, lic {lic}")
        }),
        Err(e) if consistent => {
            r.pass("quiver.verdicts_agree", "rep");
            r.note(format!("verdicts agree although the summands are {e}"));
        }
        Err(e) => r.skip("quiver.verdicts_agree", "rep", format!("summands are {e}")),
    }
    let dual_ok = quiver::dualize(rep)
        .map_err(|e| e.to_string())
        .and_then(|d| decompose_indecomposables(&d).map_err(|e| e.to_string()))
        .map(|m| m == quiver::dual_multiset(&summands));
    r.check("quiver.duality", "rep", dual_ok == Ok(true), || match dual_ok {
        Err(e) => e,
        _ => "dual summands differ from the dual multiset".into(),
    });
    if let Some(expect) = fx.expect.decomposes {
        r.check("quiver.expected_decomposes", "rep", expect == split, || {
            format!("expected {expect}, got {split}")
        });
    }
    if let Some(expect) = &fx.expect.summands {
        let expect: quiver::SummandMultiset = expect.iter().copied().collect();
        r.check("quiver.expected_summands", "rep", expect == summands, || {
            format!("expected {}, got {}", quiver::format_multiset(&expect), quiver::format_multiset(&summands))
        });
    }
}

fn multi_parameter(fx: &MultiParameterFixture, r: &mut Report) {
    for &m in &fx.degrees {
        match polydisk::check_degree(m, &fx.strata) {
            Ok((_, rep)) => r.extend(rep),
            Err(e) => r.fail("polydisk", format!("m={m}"), e.to_string()),
        }
    }
}

fn local_system(fx: &LocalSystemFixture, r: &mut Report) {
    if let Some(sys) = &fx.system {
        match (euler_poincare_rank(sys), fx.expected_rank) {
            (Ok(rank), Some(want)) => r.check("local_system.euler_poincare", "H^1", rank == want, || {
                format!("rank {rank}, expected {want}")
            }),
            (Ok(rank), None) => {
                r.pass("local_system.euler_poincare", "H^1");
                r.note(format!("rank {rank}"));
            }
            (Err(e), _) => r.fail("local_system.euler_poincare", "H^1", e.to_string()),
        }
    }
    if let Some(inputs) = &fx.shioda {
        let table = shioda_assemble(inputs);
        match fx.expected_total {
            Some(want) => r.check("local_system.shioda_total", "IH", table.dim() == want, || {
                format!("total {}, expected {want}", table.dim())
            }),
            None => r.pass("local_system.shioda_total", "IH"),
        }
    }
}

fn tail(fx: &TailFixture, r: &mut Report) {
    let mu = milnor_number(&fx.strata);
    let loc = format!("n={}", fx.strata.n);
    r.check("tail.milnor_matches_vanishing", loc.clone(), mu == fx.vanishing.mass() as i64, || {
        format!("mu {mu} vs dim of vanishing cohomology {}", fx.vanishing.mass())
    });
    if let Some(want) = fx.expected_milnor {
        r.check("tail.expected_milnor", loc, mu == want, || format!("mu {mu}, expected {want}"));
    }
    r.extend(tail_bound_check(&fx.strata, &fx.vanishing));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in CheckSet::ALL {
            assert_eq!(c.name().parse::<CheckSet>(), Ok(c));
        }
        assert!("bogus".parse::<CheckSet>().is_err());
    }
}
