//! Inputs shared by the benchmarks.

use std::path::PathBuf;

use lmhs_core::{parse_fixture, FixtureFile};

pub fn fixture(name: &str) -> FixtureFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"));
    parse_fixture(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
