//! JSON form of a polynomial:
//! `{ "n": 2, "terms": [ { "x": [1, 0], "t": 1, "c": "-3/1" } ] }`
//! with terms in canonical order and coefficients as `"num/den"` strings.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<u16>,
    pub t: u16,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            n: p.n(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    x: m.x_exponents().to_vec(),
                    t: m.t_exponent(),
                    c: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for term in &j.terms {
            if term.x.len() != j.n {
                return Err(Error::DimensionMismatch {
                    expected: j.n,
                    found: term.x.len(),
                });
            }
            terms.push((Monomial::new(&term.x, term.t), parse_rational(&term.c)?));
        }
        Polynomial::from_terms(j.n, terms)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(deserializer)?;
        Polynomial::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_shape() {
        let n = 2;
        let p = &Polynomial::x(n, 1) - &(&Polynomial::integer(n, 3) * &Polynomial::t(n));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"x":[1,0],"t":0,"c":"1/1"},{"x":[0,0],"t":1,"c":"-3/1"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_wrong_arity() {
        let s = r#"{"n":2,"terms":[{"x":[1],"t":0,"c":"1/1"}]}"#;
        assert!(serde_json::from_str::<Polynomial>(s).is_err());
    }
}
