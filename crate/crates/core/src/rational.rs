//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(int(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

/// Generalised binomial `top (top-1) ... (top-k+1) / k!` for rational `top`.
pub fn binomial(top: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = top.clone();
    for j in 1..=k {
        acc *= &t;
        acc /= int(j);
        t -= Rational::one();
    }
    acc
}

/// `true` when `q` is a non-positive integer, i.e. `q` lies in `-Z+`.
pub fn is_nonpositive_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_positive()
}

pub fn sign_pow(exponent: u32) -> Rational {
    if exponent % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Serialises rationals as reduced `"p/q"` strings (`"p"` for integers).
pub mod as_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub mod vec_as_strings {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| super::parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(2), 3), int(0));
        // (-1 choose k) = (-1)^k
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial(&Rational::new(1.into(), 2.into()), 2), Rational::new((-1).into(), 8.into()));
        assert_eq!(binomial(&int(7), 0), int(1));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(parse_rational("6/4").unwrap().to_string(), "3/2");
        assert_eq!(parse_rational("-14").unwrap().to_string(), "-14");
        assert_eq!(parse_rational("4/2").unwrap().to_string(), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn nonpositive_integers() {
        assert!(is_nonpositive_integer(&int(0)));
        assert!(is_nonpositive_integer(&int(-3)));
        assert!(!is_nonpositive_integer(&int(1)));
        assert!(!is_nonpositive_integer(&Rational::new((-1).into(), 2.into())));
    }
}
