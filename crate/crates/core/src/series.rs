//! Truncated multivariate power series over the rationals, and the
//! independence series `I(G, x)` with its integer powers.
//!
//! Series are truncated by total degree. Everything is exact, so a
//! coefficient reported as zero is zero; asking for a coefficient above the
//! truncation bound is an error rather than a silent zero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exponent::{monomials_up_to, ExponentVector};
use crate::graph::{Graph, GraphFamily, Label};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Sparse truncated series: nonzero coefficients keyed by exponent vectors of
/// total degree at most `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    degree_bound: u32,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl TruncatedSeries {
    pub fn zero(degree_bound: u32) -> Self {
        TruncatedSeries { degree_bound, terms: BTreeMap::new() }
    }

    pub fn one(degree_bound: u32) -> Self {
        Self::constant(degree_bound, Rational::one())
    }

    pub fn constant(degree_bound: u32, c: Rational) -> Self {
        Self::from_terms(degree_bound, [(ExponentVector::zero(), c)])
    }

    /// Builds a series from arbitrary terms: repeated keys add up, terms above
    /// the bound are dropped, zeros are not stored.
    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, Rational)>>(degree_bound: u32, terms: I) -> Self {
        let mut map: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.total_degree() <= degree_bound {
                *map.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedSeries { degree_bound, terms: map }
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Nonzero terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&ExponentVector::zero()).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^m`. Fails if `m` lies above the truncation bound,
    /// where the value is unknown rather than zero.
    pub fn coefficient(&self, m: &ExponentVector) -> Result<Rational> {
        if m.total_degree() > self.degree_bound {
            return Err(Error::InsufficientTruncation { degree: m.total_degree(), bound: self.degree_bound });
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(Rational::zero))
    }

    /// Vertices appearing in some stored monomial, ascending.
    pub fn variables(&self) -> Vec<Label> {
        let mut vs: Vec<Label> = self.terms.keys().flat_map(|m| m.support().collect::<Vec<_>>()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Lowers the truncation bound, discarding higher terms.
    pub fn truncate(&self, degree_bound: u32) -> Self {
        assert!(degree_bound <= self.degree_bound, "cannot raise a truncation bound");
        Self::from_terms(degree_bound, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    /// The substitution `x_i -> -x_i` for every `i`.
    pub fn negate_variables(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), rational::sign_pow(m.total_degree()) * c))
            .collect();
        TruncatedSeries { degree_bound: self.degree_bound, terms }
    }

    /// Substitutes `x_i = t` for every `i`: entry `k` sums the coefficients of
    /// total degree `k`. Trailing zeros are trimmed.
    pub fn one_variable_collapse(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree_bound as usize + 1];
        for (m, c) in &self.terms {
            out[m.total_degree() as usize] += c;
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn to_dump(&self) -> SeriesDump {
        let mut terms: Vec<TermDump> = self
            .terms
            .iter()
            .map(|(m, c)| TermDump { m: m.clone(), value: c.clone() })
            .collect();
        terms.sort_by(|a, b| a.m.graded_cmp(&b.m));
        SeriesDump { degree_bound: self.degree_bound, terms }
    }

    pub fn from_dump(dump: &SeriesDump) -> Self {
        Self::from_terms(dump.degree_bound, dump.terms.iter().map(|t| (t.m.clone(), t.value.clone())))
    }
}

/// JSON coefficient dump: `{"degree_bound": D, "terms": [{"m": [[v, e], ...], "value": "p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDump {
    pub degree_bound: u32,
    pub terms: Vec<TermDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDump {
    pub m: ExponentVector,
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

/// `I(G, x)`: one squarefree monomial per independent set of size at most `D`.
pub fn independence_series(g: &Graph, degree_bound: u32) -> TruncatedSeries {
    let sets = g.independent_sets(degree_bound as usize);
    TruncatedSeries::from_terms(degree_bound, sets.iter().map(|s| (ExponentVector::indicator(s), Rational::one())))
}

/// `I(G, x)` restricted to a finite set of relevant vertices, for any family.
pub fn independence_series_on(family: &GraphFamily, vertices: &[Label], degree_bound: u32) -> Result<TruncatedSeries> {
    Ok(independence_series(&family.materialize(vertices)?, degree_bound))
}

fn same_bound(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<u32> {
    if a.degree_bound != b.degree_bound {
        return Err(Error::DegreeBoundMismatch { left: a.degree_bound, right: b.degree_bound });
    }
    Ok(a.degree_bound)
}

/// Cauchy product truncated at the common bound.
pub fn series_multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    let d = same_bound(a, b)?;
    let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            if ma.total_degree() + mb.total_degree() > d {
                continue;
            }
            *acc.entry(ma.add(mb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(TruncatedSeries { degree_bound: d, terms: acc })
}

/// Solves `divisor * t = dividend` degree by degree. Only the nonconstant
/// terms of `divisor` are visited for each target monomial, so dividing by a
/// sparse polynomial such as `I(G, x)` stays cheap.
pub fn series_divide(dividend: &TruncatedSeries, divisor: &TruncatedSeries) -> Result<TruncatedSeries> {
    let d = same_bound(dividend, divisor)?;
    let c0 = divisor.constant_term();
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv_c0 = c0.recip();
    let tail: Vec<(&ExponentVector, &Rational)> = divisor.terms.iter().filter(|(m, _)| !m.is_zero()).collect();
    let mut vars = dividend.variables();
    vars.extend(divisor.variables());
    vars.sort_unstable();
    vars.dedup();

    let mut out: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for m in monomials_up_to(&vars, d) {
        let mut acc = dividend.terms.get(&m).cloned().unwrap_or_else(Rational::zero);
        for &(n, cn) in &tail {
            if n.total_degree() > m.total_degree() {
                continue;
            }
            if let Some(rest) = m.checked_sub(n) {
                if let Some(t) = out.get(&rest) {
                    acc -= cn * t;
                }
            }
        }
        if !acc.is_zero() {
            out.insert(m, acc * &inv_c0);
        }
    }
    Ok(TruncatedSeries { degree_bound: d, terms: out })
}

/// Multiplicative inverse up to the truncation bound.
pub fn series_invert(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    series_divide(&TruncatedSeries::one(s.degree_bound), s)
}

/// `s^q` for any integer `q`. Requires constant term 1. Negative powers
/// divide by `s` repeatedly, which equals `invert(s)^|q|` exactly.
pub fn series_int_power(s: &TruncatedSeries, q: i64) -> Result<TruncatedSeries> {
    if s.constant_term() != Rational::one() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut acc = TruncatedSeries::one(s.degree_bound);
    for _ in 0..q.unsigned_abs() {
        acc = if q > 0 { series_multiply(&acc, s)? } else { series_divide(&acc, s)? };
    }
    Ok(acc)
}

/// Coefficients of `I(G, x)^q` for every `m` in the box `0 <= m_i <= bound`,
/// stored densely over the graph's labels. Used where a few coefficients far
/// beyond any practical total-degree bound are needed, e.g. along a diagonal.
#[derive(Clone, Debug)]
pub struct BoxSeries {
    labels: Vec<Label>,
    bound: u32,
    values: Vec<BigInt>,
}

impl BoxSeries {
    pub fn independence_power(g: &Graph, q: i64, bound: u32) -> BoxSeries {
        let labels = g.labels().to_vec();
        let n = labels.len();
        let radix = bound as usize + 1;
        let len = radix.checked_pow(n as u32).expect("box too large");
        let strides: Vec<usize> = (0..n).map(|k| radix.pow((n - 1 - k) as u32)).collect();
        // Nonempty independent sets as (index offset, member positions).
        let sets: Vec<(usize, Vec<usize>)> = g
            .independent_sets(n)
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| {
                let pos: Vec<usize> = s.iter().map(|v| labels.binary_search(v).unwrap()).collect();
                (pos.iter().map(|&p| strides[p]).sum(), pos)
            })
            .collect();

        let mut values = vec![BigInt::zero(); len];
        values[0] = BigInt::one();
        let fits = |idx: usize, pos: &[usize]| pos.iter().all(|&p| (idx / strides[p]) % radix > 0);

        for _ in 0..q.unsigned_abs() {
            if q < 0 {
                // t_m = u_m - sum_S t_{m - 1_S}, in place in increasing index order
                for idx in 1..len {
                    let (done, rest) = values.split_at_mut(idx);
                    for (offset, pos) in &sets {
                        if *offset <= idx && fits(idx, pos) {
                            rest[0] -= &done[idx - offset];
                        }
                    }
                }
            } else {
                // t_m = u_m + sum_S u_{m - 1_S}, in place in decreasing index order
                for idx in (1..len).rev() {
                    let (below, rest) = values.split_at_mut(idx);
                    for (offset, pos) in &sets {
                        if *offset <= idx && fits(idx, pos) {
                            rest[0] += &below[idx - offset];
                        }
                    }
                }
            }
        }
        BoxSeries { labels, bound, values }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, m: &ExponentVector) -> Option<&BigInt> {
        let radix = self.bound as usize + 1;
        let mut idx = 0usize;
        let mut used = 0;
        for &v in &self.labels {
            let e = m.get(v);
            if e > self.bound {
                return None;
            }
            used += (e > 0) as usize;
            idx = idx * radix + e as usize;
        }
        (used == m.support_len()).then(|| &self.values[idx])
    }

    /// Coefficients at `(a, ..., a)` for `a = 0..=bound`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let radix = self.bound as usize + 1;
        let step: usize = (0..self.labels.len()).map(|k| radix.pow(k as u32)).sum();
        (0..=self.bound as usize).map(|a| self.values[a * step].clone()).collect()
    }
}

/// Rational view of an integer, for mixing box values with series values.
pub fn to_rational(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family_graph, FamilyKind};
    use crate::rational::int;

    fn ev(d: &[u32]) -> ExponentVector {
        let window: Vec<Label> = (1..=d.len() as Label).collect();
        ExponentVector::from_dense(&window, d)
    }

    fn poly(d: u32, terms: &[(&[u32], i64)]) -> TruncatedSeries {
        TruncatedSeries::from_terms(d, terms.iter().map(|(m, c)| (ev(m), int(*c))))
    }

    #[test]
    fn independence_series_examples() {
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        let expected = poly(3, &[(&[], 1), (&[1], 1), (&[0, 1], 1), (&[0, 0, 1], 1), (&[1, 0, 1], 1)]);
        assert_eq!(independence_series(&p3, 3), expected);

        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        let expected = poly(
            4,
            &[(&[], 1), (&[1], 1), (&[0, 1], 1), (&[0, 0, 1], 1), (&[0, 0, 0, 1], 1), (&[1, 0, 1], 1), (&[0, 1, 0, 1], 1)],
        );
        assert_eq!(independence_series(&c4, 4), expected);

        let k5 = family_graph(FamilyKind::Complete, 5).unwrap();
        assert_eq!(independence_series(&k5, 7).term_count(), 6);
    }

    #[test]
    fn multiply_examples() {
        let a = poly(2, &[(&[], 1), (&[1], 1)]);
        let b = poly(2, &[(&[], 1), (&[1], -1)]);
        assert_eq!(series_multiply(&a, &b).unwrap(), poly(2, &[(&[], 1), (&[2], -1)]));
        assert_eq!(series_multiply(&a, &TruncatedSeries::one(2)).unwrap(), a);
        let s = poly(2, &[(&[], 1), (&[1], 1), (&[0, 1], 1)]);
        let sq = poly(2, &[(&[], 1), (&[1], 2), (&[0, 1], 2), (&[2], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(series_multiply(&s, &s).unwrap(), sq);
        assert_eq!(
            series_multiply(&s, &TruncatedSeries::one(3)),
            Err(Error::DegreeBoundMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn invert_examples() {
        let s = poly(2, &[(&[], 1), (&[1], 1), (&[0, 1], 1)]);
        assert_eq!(series_invert(&s).unwrap().coefficient(&ev(&[1, 1])).unwrap(), int(2));
        assert_eq!(series_invert(&TruncatedSeries::one(5)).unwrap(), TruncatedSeries::one(5));
        let c4 = independence_series(&family_graph(FamilyKind::Cycle, 4).unwrap(), 4);
        assert_eq!(series_invert(&c4).unwrap().coefficient(&ev(&[1, 1, 1, 1])).unwrap(), int(14));
        assert_eq!(series_invert(&poly(2, &[(&[1], 1)])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn invert_normalises_non_unit_constant() {
        let s = poly(3, &[(&[], 2), (&[1], 1)]);
        let inv = series_invert(&s).unwrap();
        assert_eq!(series_multiply(&s, &inv).unwrap(), TruncatedSeries::one(3));
        assert_eq!(inv.coefficient(&ev(&[2])).unwrap(), Rational::new(1.into(), 8.into()));
    }

    #[test]
    fn power_examples() {
        let s = poly(3, &[(&[], 1), (&[1], 1)]);
        assert_eq!(series_int_power(&s, 2).unwrap().coefficient(&ev(&[1])).unwrap(), int(2));
        assert_eq!(series_int_power(&s, 0).unwrap(), TruncatedSeries::one(3));
        let p2 = independence_series(&family_graph(FamilyKind::Path, 2).unwrap(), 6);
        let inv = series_int_power(&p2, -1).unwrap();
        assert_eq!(inv.coefficient(&ev(&[2, 1])).unwrap(), int(-3));
        // (-1)^(a+b) binom(a+b, a)
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                let expected = rational::sign_pow(a + b) * rational::binomial(&int(a + b), a);
                assert_eq!(inv.coefficient(&ev(&[a, b])).unwrap(), expected);
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let c4 = independence_series(&family_graph(FamilyKind::Cycle, 4).unwrap(), 4);
        assert_eq!(c4.coefficient(&ev(&[1, 0, 1, 0])).unwrap(), int(1));
        assert_eq!(c4.coefficient(&ev(&[1, 1, 0, 0])).unwrap(), int(0));
        let p3 = independence_series(&family_graph(FamilyKind::Path, 3).unwrap(), 3);
        assert_eq!(p3.coefficient(&ev(&[2, 0, 0])).unwrap(), int(0));
        assert_eq!(
            p3.coefficient(&ev(&[2, 2, 0])),
            Err(Error::InsufficientTruncation { degree: 4, bound: 3 })
        );
    }

    #[test]
    fn collapse_examples() {
        let collapse = |kind, n, d| {
            independence_series(&family_graph(kind, n).unwrap(), d)
                .one_variable_collapse()
                .into_iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(collapse(FamilyKind::Cycle, 4, 4), vec![int(1), int(4), int(2)]);
        assert_eq!(collapse(FamilyKind::Cycle, 3, 3), vec![int(1), int(3)]);
        assert_eq!(collapse(FamilyKind::Path, 2, 2), vec![int(1), int(2)]);
    }

    #[test]
    fn box_series_matches_sparse_series() {
        for (kind, n) in [(FamilyKind::Cycle, 4), (FamilyKind::Path, 3), (FamilyKind::Star, 4)] {
            let g = family_graph(kind, n).unwrap();
            let s = independence_series(&g, 6);
            for q in [-2i64, -1, 1, 2] {
                let sparse = series_int_power(&s, q).unwrap();
                let boxed = BoxSeries::independence_power(&g, q, 3);
                for m in monomials_up_to(g.labels(), 6) {
                    if let Some(v) = boxed.get(&m) {
                        assert_eq!(to_rational(v), sparse.coefficient(&m).unwrap(), "{kind:?} q={q} m={m}");
                    }
                }
            }
        }
        let c4 = BoxSeries::independence_power(&family_graph(FamilyKind::Cycle, 4).unwrap(), -1, 3);
        assert_eq!(c4.diagonal(), vec![1.into(), 14.into(), 786.into(), 61340.into()]);
    }

    #[test]
    fn dump_roundtrip_and_format() {
        let p2 = series_int_power(&independence_series(&family_graph(FamilyKind::Path, 2).unwrap(), 2), -1).unwrap();
        let text = serde_json::to_string(&p2.to_dump()).unwrap();
        assert!(text.starts_with(r#"{"degree_bound":2,"terms":[{"m":[],"value":"1"},{"m":[[1,1]],"value":"-1"}"#));
        let back: SeriesDump = serde_json::from_str(&text).unwrap();
        assert_eq!(TruncatedSeries::from_dump(&back), p2);
    }
}
