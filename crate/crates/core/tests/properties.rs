use chorn::chromatic::{generalized_chromatic, multicolor_count_bruteforce};
use chorn::closed_forms::{a_vector, peo_coefficient};
use chorn::exponent::ExponentVector;
use chorn::graph::{build_graph, find_peo, Graph, Label};
use chorn::guard::Guard;
use chorn::horn::{rational_fit, FitCaps, FitSample};
use chorn::rational::{int, Rational};
use chorn::series::{independence_series, series_int_power, series_invert, series_multiply};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Label, Label)> = (1..=n as Label).flat_map(|u| (u + 1..=n as Label).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            build_graph(n, &edges).unwrap()
        })
    })
}

fn exponent_strategy(n: usize, max_entry: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_entry, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_times_series_is_one(g in graph_strategy(5), d in 1u32..5) {
        let s = independence_series(&g, d);
        let product = series_multiply(&s, &series_invert(&s).unwrap()).unwrap();
        prop_assert_eq!(product.term_count(), 1);
        prop_assert_eq!(product.constant_term(), Rational::one());
    }

    #[test]
    fn powers_add(g in graph_strategy(4), a in -3i64..3, b in -3i64..3) {
        let s = independence_series(&g, 3);
        let lhs = series_multiply(&series_int_power(&s, a).unwrap(), &series_int_power(&s, b).unwrap()).unwrap();
        prop_assert_eq!(lhs, series_int_power(&s, a + b).unwrap());
    }

    #[test]
    fn chromatic_counts_colourings(g in graph_strategy(4), seed in exponent_strategy(4, 2), q in 0u32..6) {
        let dense: Vec<u32> = seed.into_iter().take(g.vertex_count()).collect();
        let m = ExponentVector::from_dense(&g.labels()[..dense.len()], &dense);
        let p = generalized_chromatic(&g, &m, Guard::DEFAULT).unwrap();
        let count = multicolor_count_bruteforce(&g, &m, q, Guard::DEFAULT).unwrap();
        prop_assert_eq!(p.eval_int(q as i64), int(count));
    }

    // a_r >= m_{i_r}, so the product is positive for q >= 1
    #[test]
    fn chordal_products_are_positive(g in graph_strategy(6), seed in exponent_strategy(6, 3), q in 1i64..4) {
        prop_assume!(find_peo(&g).is_some());
        let peo = find_peo(&g).unwrap();
        let dense: Vec<u32> = seed.into_iter().take(g.vertex_count()).collect();
        let m = ExponentVector::from_dense(&g.labels()[..dense.len()], &dense);
        let a = a_vector(&g, &peo, &m).unwrap();
        for (k, ar) in a.exponents.iter().zip(&a.values) {
            prop_assert!(ar >= k);
        }
        prop_assert!(peo_coefficient(&g, &peo, &m, &int(q)).unwrap().is_positive());
    }

    // any returned fit reproduces every sample
    #[test]
    fn fits_verify(values in prop::collection::vec(-20i64..20, 6..10), den in 1i64..4) {
        let samples: Vec<FitSample> = values
            .iter()
            .enumerate()
            .map(|(t, &v)| FitSample { point: vec![int(t as i64 + 1)], value: Rational::new(v.into(), den.into()) })
            .collect();
        if let Some(f) = rational_fit(&samples, FitCaps { numerator: 1, denominator: 1 }).unwrap() {
            for s in &samples {
                prop_assert_eq!(f.eval(&s.point), Some(s.value.clone()));
            }
        }
    }
}

#[test]
fn zero_power_is_one() {
    let g = build_graph(3, &[(1, 2)]).unwrap();
    let s = series_int_power(&independence_series(&g, 3), 0).unwrap();
    assert_eq!(s.term_count(), 1);
    assert!(!s.constant_term().is_zero());
}
