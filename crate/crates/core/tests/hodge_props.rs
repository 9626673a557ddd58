mod common;

use common::{random_spec, rng};
use lmhs_core::{HodgeDeligneDiagram, LmhsSpec, SignedDiagram};
use proptest::prelude::*;

fn diagram() -> impl Strategy<Value = HodgeDeligneDiagram> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), 1u64..=5), 0..6).prop_map(HodgeDeligneDiagram::from_entries)
}

fn spec() -> impl Strategy<Value = LmhsSpec> {
    (any::<u64>(), 0i64..=3).prop_map(|(seed, k)| random_spec(&mut rng(seed), k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn diagram_arithmetic(a in diagram(), b in diagram(), s in -3i64..=3, t in -3i64..=3) {
        let sum = a.add(&b);
        prop_assert_eq!(sum.mass(), a.mass() + b.mass());
        prop_assert!(a.le(&sum));
        prop_assert_eq!(sum.subtract(&b).unwrap(), a.clone());
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.twist(s).twist(t), a.twist(s + t));
        prop_assert_eq!(a.twist(s).mass(), a.mass());
        let w: u64 = a.weights().values().sum();
        prop_assert_eq!(w, a.mass());
    }

    #[test]
    fn signed_sums(a in diagram(), b in diagram()) {
        let mut s = SignedDiagram::new();
        s.accumulate(&a.add(&b), 1).accumulate(&b, -1);
        prop_assert_eq!(s.to_diagram().unwrap(), a.clone());
        prop_assert_eq!(s.total(), a.mass() as i64);
        if !b.is_empty() {
            let mut neg = SignedDiagram::new();
            neg.accumulate(&a, 1).accumulate(&a.add(&b), -1);
            prop_assert!(neg.to_diagram().is_err());
        }
    }

    #[test]
    fn diagram_serde_round_trip(a in diagram()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<HodgeDeligneDiagram>(&text).unwrap(), a);
    }

    #[test]
    fn spec_masses(spec in spec()) {
        let strings = spec.strings();
        let total: u64 = strings.iter().map(|s| s.length as u64 * s.mult).sum();
        let unipotent: u64 = strings.iter().filter(|s| s.is_unipotent()).map(|s| s.mult).sum();
        let semisimple_inv: u64 = strings
            .iter()
            .filter(|s| s.is_unipotent())
            .map(|s| s.length as u64 * s.mult)
            .sum();
        prop_assert_eq!(spec.dim(), total);
        prop_assert_eq!(spec.diagram().mass(), total);
        prop_assert_eq!(spec.ker_t_minus_i().mass(), unipotent);
        prop_assert_eq!(spec.coker_t_minus_i().mass(), unipotent);
        prop_assert_eq!(spec.ker_tss_minus_i().mass(), semisimple_inv);
        prop_assert!(spec.ker_t_minus_i().le(&spec.ker_tss_minus_i()));
    }

    #[test]
    fn centered_strings_are_weight_symmetric(spec in spec()) {
        prop_assert!(spec.weight_symmetric());
        prop_assert!(!spec.galois_warnings().iter().any(|w| w.contains("unequal")));
        let weights = spec.diagram().weights();
        let k = spec.degree();
        for (&w, &m) in &weights {
            prop_assert_eq!(weights.get(&(2 * k - w)).copied(), Some(m));
        }
    }

    #[test]
    fn spec_serde_round_trip(spec in spec()) {
        let text = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(serde_json::from_str::<LmhsSpec>(&text).unwrap(), spec.clone());
        prop_assert_eq!(spec.with_orders_reduced(1), spec);
    }
}
