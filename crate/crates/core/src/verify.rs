//! Cross-module invariant suites. Each suite tallies individual checks and
//! keeps the first few failures verbatim.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::chromatic::{
    expected_value_at_one, generalized_chromatic, generalized_chromatic_by_interpolation, generalized_chromatic_via_join,
    multicolor_count_bruteforce,
};
use crate::closed_forms::{cycle_diagonal_q1, family_chromatic, peo_coefficient, read_cycle_chromatic};
use crate::exponent::{monomials_up_to, ExponentVector};
use crate::graph::{
    all_labeled_graphs, build_graph, family_graph, find_peo, is_chordal_bruteforce, verify_peo, FamilyKind, Graph, GraphFamily,
    Label, PEOrdering, PeoCheck,
};
use crate::guard::Guard;
use crate::horn::{chordal_axis_ratio, horn_verdict, Evidence, FitCaps, HornConfig, HornStatus, Ray};
use crate::rational::{int, sign_pow, Rational};
use crate::series::{independence_series, series_int_power, series_invert, TruncatedSeries};
use crate::Result;

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(detail());
            }
        }
    }

    /// Counts an `Err` as a failed check.
    pub fn record_result(&mut self, outcome: Result<bool>, detail: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// A graph together with a printable name.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn describe(g: &Graph) -> String {
    format!("n={} edges={:?}", g.vertex_count(), g.edges().collect::<Vec<_>>())
}

/// Every labelled graph on `1..=n` for `1 <= n <= max_n`.
pub fn labeled_graphs_up_to(max_n: usize) -> Vec<Named> {
    (1..=max_n)
        .flat_map(all_labeled_graphs)
        .map(|g| Named { name: describe(&g), graph: g })
        .collect()
}

/// `P_n`, `C_n` (`n >= 3`), `S_n`, `K_n` for `n <= max_n`.
pub fn family_graphs(max_n: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (kind, tag) in [(FamilyKind::Path, "P"), (FamilyKind::Cycle, "C"), (FamilyKind::Star, "S"), (FamilyKind::Complete, "K")] {
            if let Ok(g) = family_graph(kind, n) {
                out.push(Named { name: format!("{tag}:{n}"), graph: g });
            }
        }
    }
    out
}

/// Smallest edge bitmask over all relabellings; equal iff isomorphic.
pub fn canonical_edge_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let labels = g.labels();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (labels.binary_search(&u).unwrap(), labels.binary_search(&v).unwrap()))
        .collect();
    let pair_index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mask = edges.iter().fold(0u64, |acc, &(u, v)| acc | 1 << pair_index(perm[u], perm[v]));
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative per isomorphism class of chordal graphs on `1..=n`,
/// `1 <= n <= max_n`. Membership is decided by the brute-force oracle.
pub fn chordal_classes(max_n: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        for g in all_labeled_graphs(n) {
            if is_chordal_bruteforce(&g) && seen.insert(canonical_edge_mask(&g)) {
                out.push(Named { name: describe(&g), graph: g });
            }
        }
    }
    out
}

/// Every valid elimination ordering, by brute force over permutations.
pub fn all_peos(g: &Graph) -> Vec<PEOrdering> {
    let mut perm: Vec<Label> = g.labels().to_vec();
    let mut out = Vec::new();
    loop {
        if let Ok(PeoCheck::Valid(p)) = verify_peo(g, &perm) {
            out.push(p);
        }
        let mut idx: Vec<usize> = perm.iter().map(|v| g.labels().binary_search(v).unwrap()).collect();
        if !next_permutation(&mut idx) {
            break;
        }
        perm = idx.iter().map(|&i| g.labels()[i]).collect();
    }
    out
}

/// `J^q[x^m] = (-1)^{|m|} pi^m(q)` with `J = I(G, -x)`, and `I^q[x^m] = pi^m(q)`.
pub fn bridge_suite(graphs: &[Named], qs: &[i64], max_m: u32, guard: Guard) -> SuiteReport {
    let mut report = SuiteReport::new("bridge");
    for named in graphs {
        let g = &named.graph;
        let unsigned = independence_series(g, max_m);
        let signed = unsigned.negate_variables();
        let ms = monomials_up_to(g.labels(), max_m);
        let polys: Vec<_> = ms.iter().map(|m| generalized_chromatic(g, m, guard)).collect();
        for &q in qs {
            let (jq, iq) = match (series_int_power(&signed, q), series_int_power(&unsigned, q)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    report.record(false, || format!("{} q={q}: {e}", named.name));
                    continue;
                }
            };
            for (m, poly) in ms.iter().zip(&polys) {
                let outcome = poly.clone().and_then(|p| {
                    let pi = p.eval_int(q);
                    let signed_ok = jq.coefficient(m)? == sign_pow(m.total_degree()) * &pi;
                    Ok(signed_ok && iq.coefficient(m)? == pi)
                });
                report.record_result(outcome, || format!("{} q={q} m={m}", named.name));
            }
        }
    }
    report
}

/// Partition route, join route and interpolated brute force agree; degree,
/// leading coefficient and the value at `q = 1` are as predicted.
pub fn three_route_suite(graphs: &[Named], max_m: u32, guard: Guard) -> SuiteReport {
    let mut report = SuiteReport::new("three_routes");
    for named in graphs {
        let g = &named.graph;
        for m in monomials_up_to(g.labels(), max_m) {
            let outcome = (|| {
                let a = generalized_chromatic(g, &m, guard)?;
                let b = generalized_chromatic_via_join(g, &m, guard)?;
                let c = generalized_chromatic_by_interpolation(g, &m, guard)?;
                let lead = int(BigInt::from(m.factorial_product())).recip();
                let at_one = int(expected_value_at_one(g, &m));
                Ok(a == b && b == c && a.degree() == Some(m.total_degree() as usize) && a.leading_coefficient() == lead && a.eval_int(1) == at_one)
            })();
            report.record_result(outcome, || format!("{} m={m}", named.name));
        }
    }
    report
}

/// For chordal graphs: the elimination-order product equals the coefficient
/// of `I(G, -x)^{-q}`, and its signed version the coefficient of `I(G, x)^{-q}`.
pub fn peo_closed_form_suite(graphs: &[Named], qs: &[i64], max_m: u32) -> SuiteReport {
    let mut report = SuiteReport::new("peo_closed_form");
    for named in graphs {
        let g = &named.graph;
        let Some(peo) = find_peo(g) else {
            report.record(false, || format!("{}: no elimination ordering found", named.name));
            continue;
        };
        check_peo_against_series(&mut report, named, &[peo], qs, max_m);
    }
    report
}

fn check_peo_against_series(report: &mut SuiteReport, named: &Named, peos: &[PEOrdering], qs: &[i64], max_m: u32) {
    let g = &named.graph;
    let unsigned = independence_series(g, max_m);
    let signed = unsigned.negate_variables();
    let ms = monomials_up_to(g.labels(), max_m);
    for &q in qs {
        let (jq, iq): (TruncatedSeries, TruncatedSeries) = match (series_int_power(&signed, -q), series_int_power(&unsigned, -q)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                report.record(false, || format!("{} q={q}: {e}", named.name));
                continue;
            }
        };
        for peo in peos {
            for m in &ms {
                let outcome = (|| {
                    let c = peo_coefficient(g, peo, m, &int(q))?;
                    Ok(jq.coefficient(m)? == c && iq.coefficient(m)? == sign_pow(m.total_degree()) * c)
                })();
                report.record_result(outcome, || format!("{} peo={:?} q={q} m={m}", named.name, peo.order()));
            }
        }
    }
}

/// The product is the same for every valid elimination ordering.
pub fn peo_order_suite(graphs: &[Named], qs: &[i64], max_m: u32) -> SuiteReport {
    let mut report = SuiteReport::new("peo_order_independence");
    for named in graphs {
        let peos = all_peos(&named.graph);
        if peos.len() >= 2 {
            check_peo_against_series(&mut report, named, &peos, qs, max_m);
        }
    }
    report
}

/// Path, star and complete-graph products equal the partition route; the
/// infinite kinds are compared on the window `1..=max_n`.
pub fn family_suite(max_n: usize, max_m: u32, guard: Guard) -> SuiteReport {
    let mut report = SuiteReport::new("family_formulas");
    let window: Vec<Label> = (1..=max_n as Label).collect();
    let mut cases: Vec<(GraphFamily, Vec<Label>)> = Vec::new();
    for n in 1..=max_n {
        let w: Vec<Label> = (1..=n as Label).collect();
        cases.push((GraphFamily::Path(n), w.clone()));
        cases.push((GraphFamily::Star(n), w.clone()));
        cases.push((GraphFamily::Complete(n), w));
    }
    cases.push((GraphFamily::PathInfinite, window.clone()));
    cases.push((GraphFamily::StarInfinite, window));
    for (family, w) in cases {
        let outcome_graph = family.materialize(&w);
        let Ok(g) = outcome_graph else {
            report.record(false, || format!("{}: cannot materialise", family.spec_name()));
            continue;
        };
        for m in monomials_up_to(&w, max_m) {
            let outcome = (|| Ok(family_chromatic(&family, &m)? == generalized_chromatic(&g, &m, guard)?))();
            report.record_result(outcome, || format!("{} m={m}", family.spec_name()));
        }
    }
    report
}

/// Read's formula against multicolouring enumeration.
pub fn read_cycle_suite(ns: &[usize], max_entry: u32, qs: &[u32], guard: Guard) -> SuiteReport {
    let mut report = SuiteReport::new("read_cycle");
    for &n in ns {
        let Ok(g) = family_graph(FamilyKind::Cycle, n) else {
            report.record(false, || format!("C:{n} is not a valid cycle"));
            continue;
        };
        let mut exps = vec![0u32; n];
        loop {
            let m = ExponentVector::from_dense(g.labels(), &exps);
            for &q in qs {
                let outcome = (|| {
                    let count = multicolor_count_bruteforce(&g, &m, q, guard)?;
                    Ok(read_cycle_chromatic(n, &m, q as i64)? == int(count))
                })();
                report.record_result(outcome, || format!("C:{n} m={m} q={q}"));
            }
            // odometer over {0..=max_entry}^n
            let Some(k) = exps.iter().position(|&e| e < max_entry) else { break };
            exps[k] += 1;
            exps[..k].iter_mut().for_each(|e| *e = 0);
        }
    }
    report
}

/// The `q = 1` diagonal formula against series inversion.
pub fn cycle_diagonal_suite(ns: &[usize], max_a: u32) -> SuiteReport {
    let mut report = SuiteReport::new("cycle_diagonal");
    for &n in ns {
        let g = family_graph(FamilyKind::Cycle, n).expect("n >= 3");
        let inv = series_invert(&independence_series(&g, n as u32 * max_a));
        for a in 0..=max_a {
            let m = ExponentVector::from_pairs(g.labels().iter().map(|&v| (v, a)));
            let outcome = inv
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|s| Ok(s.coefficient(&m)? == int(cycle_diagonal_q1(n as u32, a))));
            report.record_result(outcome, || format!("C:{n} a={a}"));
        }
    }
    report
}

fn collapse(g: &Graph) -> Vec<Rational> {
    independence_series(g, g.vertex_count() as u32).one_variable_collapse()
}

fn poly_add_shift(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    // a(t) + t b(t)
    let len = a.len().max(b.len() + 1);
    let mut out = vec![int(0); len];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k + 1] += c;
    }
    while out.len() > 1 && out.last() == Some(&int(0)) {
        out.pop();
    }
    out
}

/// Known one-variable polynomials and the path and cycle recursions.
pub fn one_variable_suite(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("one_variable");
    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    for (name, kind, n, want) in [
        ("C:3", FamilyKind::Cycle, 3, vec![1, 3]),
        ("C:4", FamilyKind::Cycle, 4, vec![1, 4, 2]),
        ("P:2", FamilyKind::Path, 2, vec![1, 2]),
        ("P:1", FamilyKind::Path, 1, vec![1, 1]),
    ] {
        let got = collapse(&family_graph(kind, n).unwrap());
        report.record(got == ints(&want), || format!("{name}: {got:?}"));
    }
    let path = |n: usize| if n == 0 { vec![int(1)] } else { collapse(&family_graph(FamilyKind::Path, n).unwrap()) };
    let cycle = |n: usize| collapse(&family_graph(FamilyKind::Cycle, n).unwrap());
    for n in 2..=max_n {
        let ok = path(n) == poly_add_shift(&path(n - 1), &path(n - 2));
        report.record(ok, || format!("path recursion n={n}"));
    }
    for n in 5..=max_n {
        let ok = cycle(n) == poly_add_shift(&cycle(n - 1), &cycle(n - 2));
        report.record(ok, || format!("cycle recursion n={n}"));
    }
    report
}

/// Elimination-order search succeeds exactly on chordal graphs.
pub fn chordality_suite(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("chordality");
    for g in all_labeled_graphs(n) {
        let ok = find_peo(&g).is_some() == is_chordal_bruteforce(&g);
        report.record(ok, || describe(&g));
    }
    report
}

/// For chordal graphs: no vanishing coefficient, every ray with enough
/// samples fits, and each fitted axis ratio agrees with the telescoped
/// closed form at 20 random integer points.
pub fn horn_consistency_suite(graphs: &[Named], qs: &[i64], config: &HornConfig, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("horn_consistency");
    let mut rng = StdRng::seed_from_u64(seed);
    for named in graphs {
        let g = &named.graph;
        let family = GraphFamily::Explicit(g.clone());
        let peo = find_peo(g);
        for &q in qs {
            let verdict = match horn_verdict(&family, q, g.labels(), config) {
                Ok(v) => v,
                Err(e) => {
                    report.record(false, || format!("{} q={q}: {e}", named.name));
                    continue;
                }
            };
            let Evidence::Consistent { fits, .. } = &verdict.evidence else {
                report.record(false, || format!("{} q={q}: {:?}", named.name, verdict.status));
                continue;
            };
            report.record(verdict.status == HornStatus::HornConsistent, || format!("{} q={q}", named.name));
            let Some(peo) = &peo else { continue };
            for fit in fits {
                let Ray::Axis { direction, .. } = &fit.ray else { continue };
                let outcome = (0..20).try_fold(true, |ok, _| {
                    let t: u32 = rng.gen_range(1..=1_000_000);
                    let want = chordal_axis_ratio(g, peo, &int(q), &fit.ray.point(t), *direction)?;
                    Ok(ok && fit.function.eval(&[int(t)]) == Some(want))
                });
                report.record_result(outcome, || format!("{} q={q} {}: fitted {}", named.name, fit.ray, fit.function));
            }
        }
    }
    report
}

/// Cycles refute on their diagonal ray with at least the required samples.
pub fn horn_refutation_suite(ns: &[usize], q: i64, config: &HornConfig) -> SuiteReport {
    let mut report = SuiteReport::new("horn_refutation");
    let need = config.caps.required_samples(1);
    for &n in ns {
        let family = GraphFamily::Cycle(n);
        let window: Vec<Label> = (1..=n as Label).collect();
        let outcome = horn_verdict(&family, q, &window, config).map(|v| match &v.evidence {
            Evidence::Failed { ray: Ray::Diagonal { vertices }, samples, rank, unknowns, .. } => {
                vertices == &window && samples.len() >= need && rank == unknowns
            }
            _ => false,
        });
        report.record_result(outcome, || format!("C:{n}"));
    }
    report
}

/// `C_4` with the chord `{1, 3}`.
pub fn diamond() -> Named {
    Named { name: "C:4+chord".into(), graph: build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).expect("valid") }
}

/// Paths, stars and complete graphs up to `max_n`, plus the diamond.
pub fn horn_chordal_families(max_n: usize) -> Vec<Named> {
    let mut out: Vec<Named> = family_graphs(max_n).into_iter().filter(|f| !f.name.starts_with('C')).collect();
    out.push(diamond());
    out
}

/// Names accepted by [`run_suite`], in [`run_all`] order.
pub const SUITES: [&str; 11] = [
    "bridge",
    "three_routes",
    "peo_closed_form",
    "peo_order_independence",
    "family_formulas",
    "read_cycle",
    "cycle_diagonal",
    "one_variable",
    "chordality",
    "horn_consistency",
    "horn_refutation",
];

/// One suite sized by `max_n`; `None` for an unknown name.
pub fn run_suite(name: &str, max_n: usize, seed: u64, guard: Guard) -> Option<SuiteReport> {
    Some(match name {
        "bridge" | "three_routes" => {
            let mut graphs = labeled_graphs_up_to(max_n.min(4));
            graphs.extend(family_graphs(max_n));
            if name == "bridge" {
                bridge_suite(&graphs, &[-3, -2, -1, 0, 1, 2, 3], 4, guard)
            } else {
                three_route_suite(&graphs, 4, guard)
            }
        }
        "peo_closed_form" => peo_closed_form_suite(&chordal_classes(max_n.min(6)), &[1, 2, 3], 6),
        "peo_order_independence" => peo_order_suite(&chordal_classes(max_n.min(6)), &[1, 2, 3], 5),
        "family_formulas" => family_suite(max_n, 4, guard),
        "read_cycle" => read_cycle_suite(&(3..=max_n.clamp(3, 5)).collect::<Vec<_>>(), 2, &[1, 2, 3, 4, 5], guard),
        "cycle_diagonal" => cycle_diagonal_suite(&[4, 5], 2),
        "one_variable" => one_variable_suite(10),
        "chordality" => chordality_suite(max_n),
        "horn_consistency" => {
            horn_consistency_suite(&horn_chordal_families(max_n.min(6)), &[1, 2], &HornConfig::new(8, FitCaps::CONSISTENCY), seed)
        }
        "horn_refutation" => {
            let ns: Vec<usize> = (4..=max_n.clamp(4, 6)).collect();
            horn_refutation_suite(&ns, 1, &HornConfig::new(12, FitCaps::REFUTATION))
        }
        _ => return None,
    })
}

/// Every suite in [`SUITES`] order.
pub fn run_all(max_n: usize, seed: u64, guard: Guard) -> Vec<SuiteReport> {
    SUITES.iter().map(|name| run_suite(name, max_n, seed, guard).expect("known suite")).collect()
}
