//! Generalised chromatic polynomials by three independent routes: direct
//! multicolouring enumeration, ordered partitions into independent blocks,
//! and the ordinary chromatic polynomial of the join graph.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::exponent::ExponentVector;
use crate::graph::{join_graph, Graph, Label};
use crate::guard::Guard;
use crate::qpoly::QPolynomial;
use crate::rational::{int, Rational};
use crate::{Error, Result};

/// Largest palette the bitmask enumeration supports.
pub const MAX_BRUTEFORCE_COLOURS: u32 = 128;

/// Number of maps sending each vertex `i` to an `m_i`-subset of `{1..q}` such
/// that adjacent vertices receive disjoint subsets.
pub fn multicolor_count_bruteforce(g: &Graph, m: &ExponentVector, q: u32, guard: Guard) -> Result<u64> {
    let support = checked_support(g, m)?;
    if q > MAX_BRUTEFORCE_COLOURS {
        return Err(Error::GuardExceeded { what: "multicolouring palette", estimate: q as u128, limit: MAX_BRUTEFORCE_COLOURS as u64 });
    }
    let estimate = support
        .iter()
        .map(|&(_, e)| small_binomial(q, e))
        .fold(1u128, |acc, b| acc.saturating_mul(b));
    guard.check("multicolouring enumeration", estimate)?;
    if estimate == 0 {
        return Ok(0);
    }

    let choices: Vec<Vec<u128>> = support.iter().map(|&(_, e)| subsets_of_size(q, e)).collect();
    // earlier[k]: positions j < k in the support adjacent to support[k]
    let earlier: Vec<Vec<usize>> = (0..support.len())
        .map(|k| (0..k).filter(|&j| g.has_edge(support[j].0, support[k].0)).collect())
        .collect();
    let mut assigned = vec![0u128; support.len()];
    Ok(count_assignments(0, &choices, &earlier, &mut assigned))
}

fn count_assignments(k: usize, choices: &[Vec<u128>], earlier: &[Vec<usize>], assigned: &mut [u128]) -> u64 {
    if k == choices.len() {
        return 1;
    }
    let blocked = earlier[k].iter().fold(0u128, |acc, &j| acc | assigned[j]);
    let mut total = 0;
    for &s in &choices[k] {
        if s & blocked == 0 {
            assigned[k] = s;
            total += count_assignments(k + 1, choices, earlier, assigned);
        }
    }
    total
}

fn small_binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc.saturating_mul((n - j) as u128) / (j as u128 + 1))
}

/// All `k`-subsets of `{0..n}` as bitmasks, in lexicographic order.
fn subsets_of_size(n: u32, k: u32) -> Vec<u128> {
    fn go(start: u32, n: u32, left: u32, acc: u128, out: &mut Vec<u128>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for c in start..=n - left {
            go(c + 1, n, left - 1, acc | 1 << c, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

fn checked_support(g: &Graph, m: &ExponentVector) -> Result<Vec<(Label, u32)>> {
    let support: Vec<(Label, u32)> = m.iter().collect();
    if let Some(&(v, _)) = support.iter().find(|&&(v, _)| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    Ok(support)
}

/// `counts[k]` is the number of ordered `k`-tuples of nonempty independent sets
/// whose multiset union is `m`. Indices run from 0 to `|m|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCounts {
    counts: Vec<BigUint>,
}

impl PartitionCounts {
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn max_k(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.counts
    }
}

/// Peels off the first block in every possible way, memoised on the remaining
/// multiset.
pub fn ordered_partition_counts(g: &Graph, m: &ExponentVector, guard: Guard) -> Result<PartitionCounts> {
    let support = checked_support(g, m)?;
    let s = support.len();
    if s > 24 {
        return Err(Error::GuardExceeded { what: "ordered partitions", estimate: 1u128 << s.min(127), limit: guard.0 });
    }
    let states = support.iter().fold(1u128, |acc, &(_, e)| acc.saturating_mul(e as u128 + 1));
    guard.check("ordered partitions", states.saturating_mul(1u128 << s))?;

    let labels: Vec<Label> = support.iter().map(|&(v, _)| v).collect();
    let blocks: Vec<u32> = (1u32..1 << s)
        .filter(|&mask| {
            let set: Vec<Label> = (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| labels[i]).collect();
            g.is_independent(&set)
        })
        .collect();
    let start: Vec<u32> = support.iter().map(|&(_, e)| e).collect();
    let mut memo = HashMap::new();
    let mut counts = peel(&start, &blocks, &mut memo);
    counts.resize(m.total_degree() as usize + 1, BigUint::zero());
    Ok(PartitionCounts { counts })
}

fn peel(rem: &[u32], blocks: &[u32], memo: &mut HashMap<Vec<u32>, Vec<BigUint>>) -> Vec<BigUint> {
    if rem.iter().all(|&e| e == 0) {
        return vec![BigUint::one()];
    }
    if let Some(hit) = memo.get(rem) {
        return hit.clone();
    }
    let live = rem.iter().enumerate().fold(0u32, |acc, (i, &e)| if e > 0 { acc | 1 << i } else { acc });
    let mut out: Vec<BigUint> = Vec::new();
    let mut next = rem.to_vec();
    for &b in blocks.iter().filter(|&&b| b & !live == 0) {
        for (i, e) in next.iter_mut().enumerate() {
            if b >> i & 1 == 1 {
                *e -= 1;
            }
        }
        let tail = peel(&next, blocks, memo);
        if out.len() < tail.len() + 1 {
            out.resize(tail.len() + 1, BigUint::zero());
        }
        for (k, c) in tail.iter().enumerate() {
            out[k + 1] += c;
        }
        next.copy_from_slice(rem);
    }
    memo.insert(rem.to_vec(), out.clone());
    out
}

/// `sum_k counts[k] * binom(q, k)`.
pub fn generalized_chromatic(g: &Graph, m: &ExponentVector, guard: Guard) -> Result<QPolynomial> {
    let counts = ordered_partition_counts(g, m, guard)?;
    Ok(counts
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(QPolynomial::zero(), |acc, (k, c)| {
            let term = QPolynomial::binomial(k as i64).scale(&int(BigInt::from(c.clone())));
            &acc + &term
        }))
}

/// Ordinary chromatic polynomial of the join graph divided by `prod m_i!`.
pub fn generalized_chromatic_via_join(g: &Graph, m: &ExponentVector, guard: Guard) -> Result<QPolynomial> {
    checked_support(g, m)?;
    let join = join_graph(g, m)?;
    let p = ordinary_chromatic(&join.graph, guard)?;
    let norm = int(BigInt::from(m.factorial_product()));
    Ok(p.scale(&norm.recip()))
}

/// Deletion-contraction with simplicial-vertex elimination and memoisation.
/// Every call counts as one step against the guard.
pub fn ordinary_chromatic(g: &Graph, guard: Guard) -> Result<QPolynomial> {
    if g.vertex_count() > 64 {
        return Err(Error::GuardExceeded { what: "deletion-contraction vertex count", estimate: g.vertex_count() as u128, limit: 64 });
    }
    let mut dc = DeletionContraction { memo: HashMap::new(), steps: 0, guard };
    let coeffs = dc.run(g.bitmasks())?;
    Ok(QPolynomial::from_coeffs(coeffs.into_iter().map(int).collect()))
}

struct DeletionContraction {
    memo: HashMap<Vec<u64>, Vec<BigInt>>,
    steps: u128,
    guard: Guard,
}

impl DeletionContraction {
    fn run(&mut self, adj: Vec<u64>) -> Result<Vec<BigInt>> {
        self.steps += 1;
        self.guard.check("deletion-contraction", self.steps)?;
        let n = adj.len();
        if n == 0 {
            return Ok(vec![BigInt::one()]);
        }
        // P(G) = (q - d) P(G - v) when the d neighbours of v form a clique
        if let Some(v) = (0..n).find(|&v| is_simplicial(&adj, v)) {
            let d = adj[v].count_ones() as i64;
            let rest = self.run(remove_vertex(&adj, v))?;
            return Ok(mul_linear(&rest, -d));
        }
        if let Some(hit) = self.memo.get(&adj) {
            return Ok(hit.clone());
        }
        let v = (0..n).min_by_key(|&v| adj[v].count_ones()).expect("non-empty");
        let u = adj[v].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        let contracted = contract(&adj, u, v);
        let a = self.run(deleted)?;
        let b = self.run(contracted)?;
        let mut out = a;
        for (k, c) in b.into_iter().enumerate() {
            out[k] -= c;
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        self.memo.insert(adj, out.clone());
        Ok(out)
    }
}

fn is_simplicial(adj: &[u64], v: usize) -> bool {
    let nbrs = adj[v];
    let mut rest = nbrs;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if nbrs & !(1 << w) & !adj[w] != 0 {
            return false;
        }
    }
    true
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &a)| (a & low) | ((a >> 1) & !low))
        .collect()
}

/// Merges `v` into `u`.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut merged = adj.to_vec();
    let union = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    merged[u] = union;
    let mut w_bits = union;
    while w_bits != 0 {
        let w = w_bits.trailing_zeros() as usize;
        w_bits &= w_bits - 1;
        merged[w] = (merged[w] & !(1 << v)) | 1 << u;
    }
    remove_vertex(&merged, v)
}

/// Multiplies by `(q + c)`.
fn mul_linear(p: &[BigInt], c: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (k, a) in p.iter().enumerate() {
        out[k + 1] += a;
        out[k] += a * c;
    }
    out
}

/// Unique polynomial of degree at most `degree` through the samples. Extra
/// samples must lie on it.
pub fn interpolate_q(values: &[(i64, Rational)], degree: usize) -> Result<QPolynomial> {
    let mut nodes: Vec<(i64, Rational)> = Vec::new();
    for (q, v) in values {
        match nodes.iter().find(|(x, _)| x == q) {
            Some((_, w)) if w != v => return Err(Error::InconsistentSamples { degree }),
            Some(_) => {}
            None => nodes.push((*q, v.clone())),
        }
    }
    if nodes.len() < degree + 1 {
        return Err(Error::NotEnoughSamples { got: nodes.len(), need: degree + 1 });
    }
    let (basis, extra) = nodes.split_at(degree + 1);
    // Newton divided differences
    let xs: Vec<Rational> = basis.iter().map(|(x, _)| int(*x)).collect();
    let mut table: Vec<Rational> = basis.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..=degree {
        for i in (level..=degree).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = QPolynomial::zero();
    for i in (0..=degree).rev() {
        let factor = QPolynomial::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &factor) + &QPolynomial::constant(table[i].clone());
    }
    if extra.iter().any(|(x, y)| poly.eval_int(*x) != *y) {
        return Err(Error::InconsistentSamples { degree });
    }
    Ok(poly)
}

/// Interpolates brute-force counts at `q = 0..=|m|`.
pub fn generalized_chromatic_by_interpolation(g: &Graph, m: &ExponentVector, guard: Guard) -> Result<QPolynomial> {
    let d = m.total_degree();
    let samples = (0..=d)
        .map(|q| multicolor_count_bruteforce(g, m, q, guard).map(|c| (q as i64, int(c))))
        .collect::<Result<Vec<_>>>()?;
    interpolate_q(&samples, d as usize)
}

/// `pi^m_G(1)` predicted by the definition: one colour fits iff `m` is a 0/1
/// indicator of an independent set.
pub fn expected_value_at_one(g: &Graph, m: &ExponentVector) -> u64 {
    let support: Vec<Label> = m.support().collect();
    u64::from(m.iter().all(|(_, e)| e == 1) && g.is_independent(&support))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, family_graph, FamilyKind};

    fn ev(pairs: &[(Label, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().copied())
    }

    fn g0() -> Guard {
        Guard::DEFAULT
    }

    #[test]
    fn bruteforce_examples() {
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        assert_eq!(multicolor_count_bruteforce(&k2, &ev(&[(1, 1), (2, 1)]), 2, g0()).unwrap(), 2);
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        assert_eq!(multicolor_count_bruteforce(&p3, &ev(&[(1, 1), (3, 1)]), 1, g0()).unwrap(), 1);
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        let ones = ev(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(multicolor_count_bruteforce(&c4, &ones, 3, g0()).unwrap(), 18);
    }

    #[test]
    fn bruteforce_guard_and_unknown_vertex() {
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        let err = multicolor_count_bruteforce(&k2, &ev(&[(1, 3), (2, 3)]), 30, Guard(1000)).unwrap_err();
        assert!(err.is_resource_limit());
        assert_eq!(multicolor_count_bruteforce(&k2, &ev(&[(5, 1)]), 3, g0()), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn partition_examples() {
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        let c = ordered_partition_counts(&k2, &ev(&[(1, 1), (2, 1)]), g0()).unwrap();
        assert_eq!((c.get(1), c.get(2)), (0u32.into(), 2u32.into()));
        let k1 = build_graph(1, &[]).unwrap();
        // the only 2-tuple is ({1}, {1}); consistent with pi = binom(q, 2)
        let c = ordered_partition_counts(&k1, &ev(&[(1, 2)]), g0()).unwrap();
        assert_eq!((c.get(1), c.get(2), c.max_k()), (0u32.into(), 1u32.into(), 2));
        let e2 = build_graph(2, &[]).unwrap();
        let c = ordered_partition_counts(&e2, &ev(&[(1, 1), (2, 1)]), g0()).unwrap();
        assert_eq!((c.get(1), c.get(2)), (1u32.into(), 2u32.into()));
    }

    #[test]
    fn generalized_examples() {
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        assert_eq!(generalized_chromatic(&k2, &ev(&[(1, 1), (2, 1)]), g0()).unwrap(), QPolynomial::from_ints(&[0, -1, 1]));
        assert_eq!(generalized_chromatic(&k2, &ExponentVector::zero(), g0()).unwrap(), QPolynomial::one());
        let k1 = build_graph(1, &[]).unwrap();
        assert_eq!(generalized_chromatic(&k1, &ev(&[(1, 2)]), g0()).unwrap(), QPolynomial::binomial(2));
    }

    #[test]
    fn join_examples() {
        let k1 = build_graph(1, &[]).unwrap();
        assert_eq!(generalized_chromatic_via_join(&k1, &ev(&[(1, 2)]), g0()).unwrap(), QPolynomial::binomial(2));
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        let k3 = ordinary_chromatic(&family_graph(FamilyKind::Complete, 3).unwrap(), g0()).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(generalized_chromatic_via_join(&k2, &ev(&[(1, 2), (2, 1)]), g0()).unwrap(), k3.scale(&half));
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        // q (q - 1)^2
        assert_eq!(
            generalized_chromatic_via_join(&p3, &ev(&[(1, 1), (2, 1), (3, 1)]), g0()).unwrap(),
            QPolynomial::from_ints(&[0, 1, -2, 1])
        );
    }

    #[test]
    fn ordinary_examples() {
        let k3 = family_graph(FamilyKind::Complete, 3).unwrap();
        assert_eq!(ordinary_chromatic(&k3, g0()).unwrap(), QPolynomial::from_ints(&[0, 2, -3, 1]));
        let e3 = build_graph(3, &[]).unwrap();
        assert_eq!(ordinary_chromatic(&e3, g0()).unwrap(), QPolynomial::from_ints(&[0, 0, 0, 1]));
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        // (q-1)^4 + (q-1)
        assert_eq!(ordinary_chromatic(&c4, g0()).unwrap(), QPolynomial::from_ints(&[0, -3, 6, -4, 1]));
        // (q-1)^7 - (q-1) at q = 3
        let c7 = family_graph(FamilyKind::Cycle, 7).unwrap();
        assert_eq!(ordinary_chromatic(&c7, g0()).unwrap().eval_int(3), int(126));
    }

    #[test]
    fn interpolation_examples() {
        let k2 = [(0, int(0)), (1, int(0)), (2, int(2))];
        assert_eq!(interpolate_q(&k2, 2).unwrap(), QPolynomial::from_ints(&[0, -1, 1]));
        let ones = [(0, int(1)), (1, int(1)), (2, int(1))];
        for d in 0..=2 {
            assert_eq!(interpolate_q(&ones, d).unwrap(), QPolynomial::one());
        }
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        let ones4 = ev(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let samples: Vec<(i64, Rational)> = (0..=4)
            .map(|q| (q as i64, int(multicolor_count_bruteforce(&c4, &ones4, q, g0()).unwrap())))
            .collect();
        assert_eq!(interpolate_q(&samples, 4).unwrap(), QPolynomial::from_ints(&[0, -3, 6, -4, 1]));
    }

    #[test]
    fn interpolation_rejects_bad_samples() {
        let bad = [(0, int(0)), (1, int(1)), (2, int(5))];
        assert_eq!(interpolate_q(&bad, 1), Err(Error::InconsistentSamples { degree: 1 }));
        assert_eq!(interpolate_q(&[(0, int(0))], 1), Err(Error::NotEnoughSamples { got: 1, need: 2 }));
        assert_eq!(interpolate_q(&[(0, int(0)), (0, int(1))], 0), Err(Error::InconsistentSamples { degree: 0 }));
    }
}
