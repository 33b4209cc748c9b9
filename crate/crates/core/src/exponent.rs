use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::Label;

/// Finite-support multiplicity vector `m`, stored as ascending `(vertex, exponent)`
/// pairs with no zero entries.
///
/// The derived `Ord` compares these pair lists lexicographically; graded order
/// (total degree first) is [`ExponentVector::graded_cmp`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    entries: Vec<(Label, u32)>,
    total: u32,
}

impl ExponentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit vector `e_v`.
    pub fn unit(v: Label) -> Self {
        ExponentVector { entries: vec![(v, 1)], total: 1 }
    }

    /// Canonicalises arbitrary pairs: repeated vertices add up, zeros vanish.
    pub fn from_pairs<I: IntoIterator<Item = (Label, u32)>>(pairs: I) -> Self {
        let mut entries: Vec<(Label, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        entries.sort_unstable();
        let mut merged: Vec<(Label, u32)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        let total = merged.iter().map(|&(_, e)| e).sum();
        ExponentVector { entries: merged, total }
    }

    /// Pairs `window[k]` with `exps[k]`; missing trailing exponents are zero.
    pub fn from_dense(window: &[Label], exps: &[u32]) -> Self {
        Self::from_pairs(window.iter().copied().zip(exps.iter().copied()))
    }

    /// Indicator vector of a vertex set.
    pub fn indicator(set: &[Label]) -> Self {
        Self::from_pairs(set.iter().map(|&v| (v, 1)))
    }

    pub fn get(&self, v: Label) -> u32 {
        self.entries
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |k| self.entries[k].1)
    }

    pub fn total_degree(&self) -> u32 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Label> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn to_dense(&self, window: &[Label]) -> Vec<u32> {
        window.iter().map(|&v| self.get(v)).collect()
    }

    /// Product of `m_i!` over the support, as used by the join-graph normalisation.
    pub fn factorial_product(&self) -> num_bigint::BigUint {
        self.entries
            .iter()
            .flat_map(|&(_, e)| 1..=e)
            .fold(num_bigint::BigUint::from(1u32), |acc, k| acc * k)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        ExponentVector { entries: out, total: self.total + other.total }
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if other.total > self.total {
            return None;
        }
        let mut out = Vec::with_capacity(self.entries.len());
        let mut b = other.entries.iter().peekable();
        for &(v, e) in &self.entries {
            match b.peek() {
                Some(&&(w, _)) if w < v => return None,
                Some(&&(w, f)) if w == v => {
                    b.next();
                    match e.cmp(&f) {
                        Ordering::Less => return None,
                        Ordering::Equal => {}
                        Ordering::Greater => out.push((v, e - f)),
                    }
                }
                _ => out.push((v, e)),
            }
        }
        if b.next().is_some() {
            return None;
        }
        Some(ExponentVector { entries: out, total: self.total - other.total })
    }

    /// `self + scale * step`.
    pub fn add_scaled(&self, step: &ExponentVector, scale: u32) -> ExponentVector {
        if scale == 0 {
            return self.clone();
        }
        let scaled = ExponentVector::from_pairs(step.iter().map(|(v, e)| (v, e * scale)));
        self.add(&scaled)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.entries.iter().all(|&(v, e)| other.get(v) >= e)
    }

    /// Total degree first, then the canonical pair-list order.
    pub fn graded_cmp(&self, other: &ExponentVector) -> Ordering {
        self.total.cmp(&other.total).then_with(|| self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}:{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(Label, u32)>::deserialize(d)?;
        Ok(ExponentVector::from_pairs(pairs))
    }
}

/// Every exponent vector over `vars` with total degree at most `max_degree`,
/// sorted by [`ExponentVector::graded_cmp`].
pub fn monomials_up_to(vars: &[Label], max_degree: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut dense = vec![0u32; vars.len()];
    fill_monomials(vars, 0, max_degree, &mut dense, &mut out);
    out.sort_by(ExponentVector::graded_cmp);
    out
}

fn fill_monomials(vars: &[Label], k: usize, remaining: u32, dense: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    if k == vars.len() {
        out.push(ExponentVector::from_dense(vars, dense));
        return;
    }
    for e in 0..=remaining {
        dense[k] = e;
        fill_monomials(vars, k + 1, remaining - e, dense, out);
    }
    dense[k] = 0;
}
