//! Univariate polynomials in the colour count `q` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, int, Rational};

/// Coefficients in ascending powers of `q`, with no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QPolynomial {
    #[serde(with = "rational::vec_as_strings")]
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_int(&self, q: i64) -> Rational {
        self.eval(&int(q))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(q + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let linear = QPolynomial::from_coeffs(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(QPolynomial::zero(), |acc, k| &(&acc * &linear) + &QPolynomial::constant(k.clone()))
    }

    /// `p(-q)`.
    pub fn negate_variable(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Falling factorial `(q + c)(q + c - 1)...(q + c - k + 1)`.
    pub fn falling(c: &Rational, k: u32) -> Self {
        (0..k).fold(QPolynomial::one(), |acc, j| {
            let factor = QPolynomial::from_coeffs(vec![c - int(j), Rational::one()]);
            &acc * &factor
        })
    }

    /// `binom(q + c, k)` as a polynomial of degree `k`; zero for negative `k`.
    pub fn binomial_shifted(c: &Rational, k: i64) -> Self {
        if k < 0 {
            return QPolynomial::zero();
        }
        let k = k as u32;
        let fact: Rational = (1..=k).fold(Rational::one(), |acc, j| acc * int(j));
        Self::falling(c, k).scale(&fact.recip())
    }

    /// `binom(q, k)`.
    pub fn binomial(k: i64) -> Self {
        Self::binomial_shifted(&Rational::zero(), k)
    }

    /// `v_k(q) = binom(q, k) - binom(q, k - 1)`.
    pub fn v(k: i64) -> Self {
        &Self::binomial(k) - &Self::binomial(k - 1)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPolynomial) -> (QPolynomial, QPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().expect("non-empty") / &lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * c;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (QPolynomial::from_coeffs(quot), QPolynomial::from_coeffs(rem))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &QPolynomial) -> QPolynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&a.leading_coefficient().recip())
        }
    }

    /// Renders with `var` in place of `q`.
    pub fn format_with(&self, var: &str) -> String {
        let text = self.to_string();
        if var == "q" {
            text
        } else {
            text.replace('q', var)
        }
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        QPolynomial::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff && k > 0 && !a.is_integer() {
                write!(f, "({a})")?;
            } else if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
