mod common;

use common::{all_fixtures, fixture, random_spec, rng};
use lmhs_core::hodge::NString;
use lmhs_core::polydisk::{check_degree, ih_local, koszul_complex, BasisLabel, MultiLmhs};
use lmhs_core::{FixtureBody, LmhsSpec, RationalMatrix};
use proptest::prelude::*;

/// Unipotent spec with a few short strings.
fn unipotent_spec() -> impl Strategy<Value = LmhsSpec> {
    prop::collection::vec((1u32..=3, 0i64..=2), 1..=2).prop_map(|strings| {
        let strings = strings
            .into_iter()
            .map(|(len, p)| {
                let w = len as i64;
                NString::unipotent((p.min(w), w - p.min(w)), len, 1)
            })
            .collect();
        LmhsSpec::new(1, strings).unwrap()
    })
}

fn kron(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (n, m) = (a.rows(), b.rows());
    let mut out = RationalMatrix::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[(i * m + k, j * m + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// Two-variable data `H_a (x) H_b` with `N_1 = N_a (x) 1`, `N_2 = 1 (x) N_b`.
fn product(a: &LmhsSpec, b: &LmhsSpec) -> MultiLmhs {
    let (ha, hb) = (MultiLmhs::from_spec(a), MultiLmhs::from_spec(b));
    let mut basis = Vec::new();
    for x in ha.basis() {
        for y in hb.basis() {
            basis.push(BasisLabel::new((x.pq.0 + y.pq.0, x.pq.1 + y.pq.1)));
        }
    }
    let n1 = kron(ha.n(1), &RationalMatrix::identity(hb.dim()));
    let n2 = kron(&RationalMatrix::identity(ha.dim()), hb.n(1));
    MultiLmhs::new(2, basis, vec![n1, n2]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn koszul_is_a_complex(a in unipotent_spec(), b in unipotent_spec()) {
        let h = product(&a, &b);
        let c = koszul_complex(&h, &[]).unwrap();
        let (na, nb) = (image_dim(&a), image_dim(&b));
        let (da, db) = (a.dim() as usize, b.dim() as usize);
        prop_assert_eq!(c.term_dims(), vec![da * db, na * db + da * nb, na * nb]);
        for pair in c.differentials.windows(2) {
            prop_assert!((&pair[1] * &pair[0]).is_zero());
        }
        let euler: i64 = c.term_dims().iter().enumerate().map(|(l, &d)| sign(l) * d as i64).sum();
        let h_euler: i64 = (0..3).map(|l| sign(l) * c.cohomology(l).mass() as i64).sum();
        prop_assert_eq!(euler, h_euler);
        prop_assert!(c.cohomology(3).is_empty());
    }

    /// Each factor `H -> N H` is exact past slot 0, so the product only
    /// keeps `ker N_a (x) ker N_b`.
    #[test]
    fn product_cohomology_is_kunneth(a in unipotent_spec(), b in unipotent_spec()) {
        let h = product(&a, &b);
        let (ka, kb) = (a.ker_t_minus_i().mass(), b.ker_t_minus_i().mass());
        prop_assert_eq!(ih_local(&h, &[], 0).unwrap().mass(), ka * kb);
        prop_assert!(ih_local(&h, &[], 1).unwrap().is_empty());
        prop_assert!(ih_local(&h, &[], 2).unwrap().is_empty());
        // Along the first stratum only N_2 acts.
        prop_assert_eq!(ih_local(&h, &[1], 0).unwrap().mass(), a.dim() * kb);
        prop_assert!(ih_local(&h, &[1], 1).unwrap().is_empty());
    }

    #[test]
    fn one_variable_matches_the_spec(seed in any::<u64>(), k in 0i64..=3) {
        let spec = random_spec(&mut rng(seed), k);
        let h = MultiLmhs::from_spec(&spec);
        prop_assert_eq!(h.diagram(), spec.diagram());
        prop_assert_eq!(ih_local(&h, &[], 0).unwrap(), spec.ker_t_minus_i());
        prop_assert!(ih_local(&h, &[], 1).unwrap().is_empty());
    }
}

fn sign(l: usize) -> i64 {
    if l.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn image_dim(spec: &LmhsSpec) -> usize {
    (spec.dim() - spec.ker_t_minus_i().mass()) as usize
}

#[test]
fn filtrations_nest_on_the_corpus() {
    let mut seen = 0;
    for f in all_fixtures() {
        let FixtureBody::MultiParameter(m) = f.body else { continue };
        for &d in &m.degrees {
            let (table, report) = check_degree(d, &m.strata).unwrap();
            assert!(report.passed(), "{} m={d}: {report}", f.name);
            assert!(table.check_filtrations().passed());
            for a in 0..=table.max_alpha() {
                assert!(table.coniveau(a).le(&table.perverse_leray(a)));
            }
            seen += 1;
        }
    }
    assert!(seen >= 3);
    let FixtureBody::MultiParameter(m) = fixture("ex19c-1").body else { panic!() };
    assert_eq!(m.strata.r, 2);
}
