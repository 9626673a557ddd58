//! Exact bookkeeping for limiting mixed Hodge structures: Hodge-Deligne
//! diagrams, Clemens-Schmid and vanishing-cycle sequences, quiver
//! descriptions of perverse sheaves on a disk, cyclic base change and
//! Koszul complexes over polydisks.

pub mod basechange;
pub mod checks;
pub mod degeneration;
pub mod fixture;
pub mod hodge;
pub mod polydisk;
pub mod quiver;
pub mod ratlin;
pub mod report;

pub use fixture::{parse_fixture, FixtureBody, FixtureError, FixtureFile};
pub use hodge::{HodgeDeligneDiagram, LmhsSpec, NString, SignedDiagram};
pub use quiver::{DiskQuiverRep, IndecompSummand, SummandMultiset};
pub use ratlin::{RationalMatrix, Subspace, Q};
pub use report::{CheckResult, Report, Verdict};
