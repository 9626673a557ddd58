mod common;

use common::{random_spec, rng};
use lmhs_core::basechange::{base_change_lmhs, cyclotomic_refinement, expand_refinement, invariant_gap, CyclotomicMultiset};
use lmhs_core::LmhsSpec;
use proptest::prelude::*;

fn spec() -> impl Strategy<Value = LmhsSpec> {
    (any::<u64>(), 0i64..=3).prop_map(|(seed, k)| random_spec(&mut rng(seed), k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn base_change_composes(spec in spec(), a in 1u64..=6, b in 1u64..=6) {
        let twice = base_change_lmhs(&base_change_lmhs(&spec, a).unwrap(), b).unwrap();
        prop_assert_eq!(&twice, &base_change_lmhs(&spec, a * b).unwrap());
        prop_assert_eq!(twice.diagram(), spec.diagram());
    }

    #[test]
    fn gap_counts_strings_that_become_unipotent(spec in spec(), kappa in 1u64..=12) {
        let gained: u64 = spec
            .strings()
            .iter()
            .filter(|s| !s.is_unipotent() && kappa % s.order == 0)
            .map(|s| s.mult)
            .sum();
        let gap = invariant_gap(&spec, kappa).unwrap();
        prop_assert_eq!(gap.mass(), gained);
        if kappa % base_order(&spec) == 0 {
            prop_assert!(base_change_lmhs(&spec, kappa).unwrap().strings().iter().all(|s| s.is_unipotent()));
        }
    }

    #[test]
    fn refinements_restrict_back(
        table in prop::collection::btree_map(1u64..=12, 1u64..=2, 0..3),
        kappa in 1u64..=6,
    ) {
        let m = expand_refinement(&table, kappa);
        let found = cyclotomic_refinement(&m, kappa).unwrap();
        prop_assert!(found.contains(&table), "{:?} missing from {:?}", table, found);
        for n in &found {
            prop_assert_eq!(&expand_refinement(n, kappa), &m);
        }
        let mut sorted: Vec<Vec<(u64, u64)>> = found.iter().map(|n| n.clone().into_iter().collect()).collect();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), found.len());
        let listed: Vec<Vec<(u64, u64)>> = found.iter().map(|n| n.clone().into_iter().collect()).collect();
        prop_assert_eq!(sorted, listed);
    }
}

fn base_order(spec: &LmhsSpec) -> u64 {
    spec.strings().iter().fold(1, |acc, s| num_integer::lcm(acc, s.order))
}

#[test]
fn trivial_refinement() {
    let m: CyclotomicMultiset = [(1, 3), (2, 1)].into_iter().collect();
    assert_eq!(cyclotomic_refinement(&m, 1).unwrap(), vec![m]);
}
