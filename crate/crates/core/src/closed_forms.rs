//! Closed-form coefficient formulas: the elimination-order product, the path,
//! star and complete-graph products, Read's cycle formula and the `q = 1`
//! cycle diagonal.
//!
//! Sign convention: `I(G, x)` is the unsigned independence series. For every
//! rational `q` the coefficient of `x^m` in `I(G, x)^q` is `pi^m_G(q)`. The
//! elimination-order product equals `pi^m_G(-q)` up to the factor
//! `(-1)^{|m|}`, i.e. it is the coefficient of `x^m` in `I(G, -x)^{-q}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exponent::ExponentVector;
use crate::graph::{find_peo, verify_peo, Graph, GraphFamily, Label, PEOrdering, PeoCheck};
use crate::qpoly::QPolynomial;
use crate::rational::{self, int, is_nonpositive_integer, Rational};
use crate::{Error, Result};

/// `a_r(m)` for the support of `m` listed in elimination order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AVector {
    /// Support vertices `i_1, ..., i_N` in elimination order.
    pub support: Vec<Label>,
    /// `m_{i_r}`.
    pub exponents: Vec<u32>,
    /// `a_r(m) >= m_{i_r}`.
    pub values: Vec<u32>,
}

impl AVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `a_r = m_{i_r} + sum of m_{i_s}` over earlier support vertices adjacent to `i_r`.
pub fn a_vector(g: &Graph, peo: &PEOrdering, m: &ExponentVector) -> Result<AVector> {
    match verify_peo(g, peo.order())? {
        PeoCheck::Valid(_) => {}
        PeoCheck::Violation { vertex, left, right } => return Err(Error::InvalidPeo { vertex, left, right }),
    }
    let mut support: Vec<Label> = Vec::with_capacity(m.support_len());
    for v in m.support() {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        support.push(v);
    }
    support.sort_by_key(|&v| peo.rank(v));
    let exponents: Vec<u32> = support.iter().map(|&v| m.get(v)).collect();
    let values = support
        .iter()
        .enumerate()
        .map(|(r, &v)| exponents[r] + (0..r).filter(|&s| g.has_edge(support[s], v)).map(|s| exponents[s]).sum::<u32>())
        .collect();
    Ok(AVector { support, exponents, values })
}

/// `prod_r binom(q - 1 + a_r, m_{i_r})` at any rational `q`.
pub fn peo_coefficient(g: &Graph, peo: &PEOrdering, m: &ExponentVector, q: &Rational) -> Result<Rational> {
    let a = a_vector(g, peo, m)?;
    Ok(a.values
        .iter()
        .zip(&a.exponents)
        .map(|(&ar, &mi)| rational::binomial(&(q - Rational::one() + int(ar)), mi))
        .product())
}

/// The same product as a polynomial in `q`.
pub fn peo_polynomial(g: &Graph, peo: &PEOrdering, m: &ExponentVector) -> Result<QPolynomial> {
    let a = a_vector(g, peo, m)?;
    Ok(a.values.iter().zip(&a.exponents).fold(QPolynomial::one(), |acc, (&ar, &mi)| {
        &acc * &QPolynomial::binomial_shifted(&int(ar as i64 - 1), mi as i64)
    }))
}

/// Coefficient of `x^m` in the unsigned `I(G, x)^{-q}` for a chordal graph,
/// i.e. `(-1)^{|m|}` times the elimination-order product.
pub fn chordal_inverse_power_coefficient(g: &Graph, m: &ExponentVector, q: &Rational) -> Result<Rational> {
    let peo = find_peo(g).ok_or(Error::NotChordal)?;
    Ok(rational::sign_pow(m.total_degree()) * peo_coefficient(g, &peo, m, q)?)
}

/// Product-of-binomials polynomials for paths, stars and complete graphs.
/// Stars are centred at vertex 1.
pub fn family_chromatic(family: &GraphFamily, m: &ExponentVector) -> Result<QPolynomial> {
    let bound = match family {
        GraphFamily::Path(n) | GraphFamily::Star(n) | GraphFamily::Complete(n) => Some(*n as Label),
        GraphFamily::PathInfinite | GraphFamily::StarInfinite => None,
        other => return Err(Error::UnsupportedFamily(other.spec_name())),
    };
    for v in m.support() {
        if v == 0 || bound.is_some_and(|n| v > n) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let factor = |offset: u32, e: u32| QPolynomial::binomial_shifted(&int(-(offset as i64)), e as i64);
    let mut poly = QPolynomial::one();
    let mut prefix = 0u32;
    for (v, e) in m.iter() {
        let offset = match family {
            GraphFamily::Path(_) | GraphFamily::PathInfinite => m.get(v - 1),
            GraphFamily::Star(_) | GraphFamily::StarInfinite if v > 1 => m.get(1),
            GraphFamily::Star(_) | GraphFamily::StarInfinite => 0,
            _ => prefix,
        };
        poly = &poly * &factor(offset, e);
        prefix += e;
    }
    Ok(poly)
}

fn check_cycle(n: usize, m: &ExponentVector) -> Result<Vec<u32>> {
    if n < 3 {
        return Err(Error::InvalidFamilySize(format!("cycle needs n >= 3, got {n}")));
    }
    if let Some(v) = m.support().find(|&v| v == 0 || v as usize > n) {
        return Err(Error::UnknownVertex(v));
    }
    Ok((1..=n as Label).map(|v| m.get(v)).collect())
}

/// Read's formula for `pi^m_{C_n}(q)` as a polynomial.
///
/// Both `(m_i)^k` and `(q)^{m_i+k}` are falling factorials, the sum runs over
/// `0 <= k <= min_i m_i`, and the result carries the normalisation `1 / prod m_i!`.
/// Cancelling `(q)_{m_r + k}` against `(q)_{m_r + m_{r+1}}` leaves the
/// division-free form
/// `sum_k (-1)^{kn} v_k(q) prod_i (m_i)_k prod_r (q - m_r - k)_{m_{r+1} - k}`.
pub fn read_cycle_polynomial(n: usize, m: &ExponentVector) -> Result<QPolynomial> {
    let ms = check_cycle(n, m)?;
    let kmax = *ms.iter().min().expect("n >= 3");
    let mut sum = QPolynomial::zero();
    for k in 0..=kmax {
        let mut term = QPolynomial::v(k as i64);
        if k % 2 == 1 && n % 2 == 1 {
            term = -&term;
        }
        let coeff: BigInt = ms.iter().map(|&mi| falling_int(mi, k)).product();
        term = term.scale(&int(coeff));
        for r in 0..n {
            let (mr, next) = (ms[r], ms[(r + 1) % n]);
            term = &term * &QPolynomial::falling(&int(-((mr + k) as i64)), next - k);
        }
        sum = &sum + &term;
    }
    let norm: BigInt = ms.iter().map(|&mi| falling_int(mi, mi)).product();
    Ok(sum.scale(&int(norm).recip()))
}

fn falling_int(top: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(top as i64 - j as i64))
}

/// `pi^m_{C_n}(q)` at an integer `q`.
pub fn read_cycle_chromatic(n: usize, m: &ExponentVector, q: i64) -> Result<Rational> {
    Ok(read_cycle_polynomial(n, m)?.eval_int(q))
}

/// Coefficient of `x^m` in `I(C_n, x)^{-q}`, which is `pi^m_{C_n}(-q)`. Rejects `q` in `-Z+`.
pub fn read_cycle_inverse_coefficient(n: usize, m: &ExponentVector, q: &Rational) -> Result<Rational> {
    if is_nonpositive_integer(q) {
        return Err(Error::NonPositiveIntegerPower(q.to_string()));
    }
    Ok(read_cycle_polynomial(n, m)?.eval(&-q))
}

/// `(-1)^{na} sum_{|k| <= a} (-1)^k binom(2a, a + k)^n`, the coefficient of
/// `x^(a, ..., a)` in `I(C_n, x)^{-1}`.
pub fn cycle_diagonal_q1(n: u32, a: u32) -> BigInt {
    let row: Vec<BigInt> = {
        let mut row = vec![BigInt::one()];
        for j in 0..2 * a {
            let next = row[j as usize].clone() * (2 * a - j) / (j + 1);
            row.push(next);
        }
        row
    };
    let mut sum = BigInt::zero();
    for j in 0..=2 * a {
        let term = num_traits::pow(row[j as usize].clone(), n as usize);
        // k = j - a, so (-1)^k = (-1)^{j + a}
        if (j + a) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (n as u64 * a as u64) % 2 == 1 {
        -sum
    } else {
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, family_graph, FamilyKind};

    fn ev(pairs: &[(Label, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().copied())
    }

    fn natural(g: &Graph) -> PEOrdering {
        match verify_peo(g, g.labels()).unwrap() {
            PeoCheck::Valid(p) => p,
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn a_vector_examples() {
        let s3 = family_graph(FamilyKind::Star, 3).unwrap();
        let a = a_vector(&s3, &natural(&s3), &ev(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(a.values, vec![1, 2, 2]);
        let e4 = build_graph(4, &[]).unwrap();
        let m = ev(&[(1, 3), (3, 2), (4, 5)]);
        assert_eq!(a_vector(&e4, &natural(&e4), &m).unwrap().values, vec![3, 2, 5]);
        let p2 = family_graph(FamilyKind::Path, 2).unwrap();
        assert_eq!(a_vector(&p2, &natural(&p2), &ev(&[(1, 4), (2, 7)])).unwrap().values, vec![4, 11]);
    }

    #[test]
    fn a_vector_rejects_foreign_ordering() {
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        // valid for the edgeless graph, but 2's earlier neighbours 1, 3 are non-adjacent in P_3
        let e3 = build_graph(3, &[]).unwrap();
        let foreign = match verify_peo(&e3, &[1, 3, 2]).unwrap() {
            PeoCheck::Valid(p) => p,
            v => panic!("{v:?}"),
        };
        assert_eq!(
            a_vector(&p3, &foreign, &ExponentVector::zero()),
            Err(Error::InvalidPeo { vertex: 2, left: 1, right: 3 })
        );
    }

    #[test]
    fn peo_coefficient_examples() {
        let p2 = family_graph(FamilyKind::Path, 2).unwrap();
        let one = int(1);
        assert_eq!(peo_coefficient(&p2, &natural(&p2), &ev(&[(1, 1), (2, 1)]), &one).unwrap(), int(2));
        let k3 = family_graph(FamilyKind::Complete, 3).unwrap();
        assert_eq!(peo_coefficient(&k3, &natural(&k3), &ExponentVector::zero(), &int(5)).unwrap(), int(1));
        assert_eq!(peo_coefficient(&k3, &natural(&k3), &ev(&[(1, 1), (2, 1), (3, 1)]), &one).unwrap(), int(6));
        // the unsigned inverse carries (-1)^{|m|}
        assert_eq!(chordal_inverse_power_coefficient(&k3, &ev(&[(1, 1), (2, 1), (3, 1)]), &one).unwrap(), int(-6));
        let poly = peo_polynomial(&k3, &natural(&k3), &ev(&[(1, 2), (3, 1)])).unwrap();
        assert_eq!(poly.eval_int(3), peo_coefficient(&k3, &natural(&k3), &ev(&[(1, 2), (3, 1)]), &int(3)).unwrap());
    }

    #[test]
    fn family_examples() {
        let ones3 = ev(&[(1, 1), (2, 1), (3, 1)]);
        let q = QPolynomial::q();
        let q1 = QPolynomial::from_ints(&[-1, 1]);
        let q2 = QPolynomial::from_ints(&[-2, 1]);
        assert_eq!(family_chromatic(&GraphFamily::Complete(3), &ones3).unwrap(), &(&q * &q1) * &q2);
        assert_eq!(family_chromatic(&GraphFamily::Star(3), &ones3).unwrap(), &(&q * &q1) * &q1);
        let m = ev(&[(1, 2), (3, 3)]);
        assert_eq!(
            family_chromatic(&GraphFamily::PathInfinite, &m).unwrap(),
            &QPolynomial::binomial(2) * &QPolynomial::binomial(3)
        );
        assert!(matches!(family_chromatic(&GraphFamily::Cycle(4), &m), Err(Error::UnsupportedFamily(_))));
        assert_eq!(family_chromatic(&GraphFamily::Path(2), &m), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn read_examples() {
        assert_eq!(read_cycle_chromatic(4, &ev(&[(1, 1), (2, 1), (3, 1), (4, 1)]), 3).unwrap(), int(18));
        assert_eq!(read_cycle_polynomial(5, &ev(&[(1, 1)])).unwrap(), QPolynomial::q());
        assert_eq!(read_cycle_chromatic(4, &ev(&[(1, 1), (3, 1)]), 2).unwrap(), int(4));
        assert!(matches!(read_cycle_polynomial(2, &ExponentVector::zero()), Err(Error::InvalidFamilySize(_))));
        assert_eq!(read_cycle_polynomial(4, &ev(&[(5, 1)])), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn read_inverse_rejects_nonpositive_integers() {
        let m = ev(&[(1, 1)]);
        assert!(matches!(read_cycle_inverse_coefficient(4, &m, &int(0)), Err(Error::NonPositiveIntegerPower(_))));
        assert!(matches!(read_cycle_inverse_coefficient(4, &m, &int(-2)), Err(Error::NonPositiveIntegerPower(_))));
        // coefficient of x_1 in (1 + x_1 + ...)^{-1}
        assert_eq!(read_cycle_inverse_coefficient(4, &m, &int(1)).unwrap(), int(-1));
    }

    #[test]
    fn diagonal_values() {
        let got: Vec<BigInt> = (0..4).map(|a| cycle_diagonal_q1(4, a)).collect();
        assert_eq!(got, [1, 14, 786, 61340].map(BigInt::from));
        assert_eq!(cycle_diagonal_q1(5, 1), BigInt::from(-30));
    }
}
