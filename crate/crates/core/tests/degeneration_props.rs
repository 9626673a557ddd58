mod common;

use std::collections::BTreeMap;

use common::{all_fixtures, random_spec, rng};
use lmhs_core::degeneration::{
    check_cs, milnor_number, solve_unknown, DegenerationError, DegenerationFixture, DegreeData, Flags, Position,
    TailStrata,
};
use lmhs_core::{FixtureBody, HodgeDeligneDiagram};
use proptest::prelude::*;

/// A threefold fixture holding one degree. With `k` in `2..=3` every other
/// Clemens-Schmid term is in range and unknown, so only the phantom split
/// applies.
fn one_degree(k: i64, data: DegreeData) -> DegenerationFixture {
    DegenerationFixture {
        n: 3,
        flags: Flags::default(),
        degrees: BTreeMap::from([(k, data)]),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn phantom_split_round_trip(seed in any::<u64>(), k in 2i64..=3, m in 0u64..=4) {
        let spec = random_spec(&mut rng(seed), k);
        let phantom = HodgeDeligneDiagram::from_entries([((1, 1), m)]);
        let fx = one_degree(k, DegreeData { lmhs: Some(spec.clone()), phantom: Some(phantom.clone()), ..Default::default() });
        let sf = solve_unknown(&fx, k, Position::SpecialFiber).unwrap();
        prop_assert_eq!(&sf, &spec.ker_t_minus_i().add(&phantom));

        let fx = one_degree(k, DegreeData { lmhs: Some(spec.clone()), special_fiber: Some(sf), ..Default::default() });
        prop_assert_eq!(solve_unknown(&fx, k, Position::Phantom).unwrap(), phantom);
        prop_assert_eq!(solve_unknown(&fx, k, Position::Vanishing).unwrap().mass(), spec.dim() - spec.ker_t_minus_i().mass());
    }

    #[test]
    fn milnor_sign_alternates(chi in prop::collection::vec(-5i64..=5, 0..5), n in 0u32..4) {
        let even = TailStrata { n: 2 * n, chi_open: chi.clone(), levels: Vec::new() };
        let odd = TailStrata { n: 2 * n + 1, chi_open: chi.clone(), levels: Vec::new() };
        prop_assert_eq!(milnor_number(&even), chi.iter().sum::<i64>() - 1);
        prop_assert_eq!(milnor_number(&odd), -milnor_number(&even));
    }
}

fn degenerations() -> Vec<(String, DegenerationFixture)> {
    all_fixtures()
        .into_iter()
        .filter_map(|f| match f.body {
            FixtureBody::Degeneration(d) => Some((f.name, d)),
            _ => None,
        })
        .collect()
}

/// Deleting a stored diagram and solving for it gives it back, whenever
/// the remaining data pins it down.
#[test]
fn solve_recovers_deleted_data() {
    let mut recovered = 0;
    for (name, fx) in degenerations() {
        for (&k, data) in &fx.degrees {
            let stored = [
                (Position::SpecialFiber, data.special_fiber.clone()),
                (Position::Phantom, data.phantom.clone()),
                (Position::Vanishing, data.vanishing.clone()),
                (Position::Invariants, data.lmhs.as_ref().map(|l| l.ker_t_minus_i())),
            ];
            for (position, value) in stored {
                let Some(value) = value else { continue };
                let mut gone = fx.clone();
                gone.delete(k, position);
                match solve_unknown(&gone, k, position) {
                    Ok(found) => {
                        assert_eq!(found, value, "{name}: {position} in degree {k}");
                        recovered += 1;
                    }
                    Err(DegenerationError::Underdetermined { .. }) => {}
                    Err(e) => panic!("{name}: {position} in degree {k}: {e}"),
                }
            }
        }
    }
    assert!(recovered >= 20, "only {recovered} recovered");
}

#[test]
fn clemens_schmid_holds_across_the_corpus() {
    for (name, fx) in degenerations() {
        for k in 0..=fx.top_degree() {
            let report = check_cs(&fx, k).unwrap();
            assert!(report.passed(), "{name} k={k}: {report}");
        }
    }
}
