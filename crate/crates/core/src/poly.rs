//! Sparse polynomials with rational coefficients in named variables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Int, IntMatrix, Rat};

/// Monomial as variable → exponent; exponents may be negative (Laurent).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub BTreeMap<String, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Monomial(m)
    }

    /// From an exponent vector over `labels`.
    pub fn from_exponents(labels: &[String], exps: &[Int]) -> Self {
        let mut m = BTreeMap::new();
        for (l, e) in labels.iter().zip(exps) {
            let e: i64 = e.try_into().expect("small exponent");
            if e != 0 {
                m.insert(l.clone(), e);
            }
        }
        Monomial(m)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let p = MonomialPoly::parse(s)?;
        let mut terms = p.0.into_iter();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() => Ok(m),
            _ => Err(Error::Parse(format!("not a monic monomial: {:?}", s))),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (v, e) in &other.0 {
            let x = m.entry(v.clone()).or_insert(0);
            *x += e;
            if *x == 0 {
                m.remove(v);
            }
        }
        Monomial(m)
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    pub fn exponent(&self, v: &str) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_laurent(&self) -> bool {
        self.0.values().any(|&e| e < 0)
    }

    /// Exponent vector over `labels`; None if a variable is not among them.
    pub fn exponents(&self, labels: &[String]) -> Option<Vec<Int>> {
        if self.0.keys().any(|v| !labels.contains(v)) {
            return None;
        }
        Some(labels.iter().map(|l| Int::from(self.exponent(l))).collect())
    }

    /// Class D·exponents, or None if a variable is unknown.
    pub fn degree(&self, d: &IntMatrix, labels: &[String]) -> Option<Vec<Int>> {
        self.exponents(labels).map(|e| d.mul_vec(&e))
    }

    pub fn substitute(&self, subst: &BTreeMap<String, Monomial>) -> Monomial {
        let mut out = Monomial::one();
        for (v, &e) in &self.0 {
            let image = subst.get(v).cloned().unwrap_or_else(|| Monomial::var(v));
            out = out.mul(&image.pow(e));
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{}^{}", v, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialPoly(BTreeMap<Monomial, Rat>);

impl MonomialPoly {
    pub fn zero() -> Self {
        MonomialPoly::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = MonomialPoly::zero();
        p.add_term(m, Rat::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        let entry = self.0.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.0.iter()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.0.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &MonomialPoly) -> MonomialPoly {
        let mut p = self.clone();
        for (m, c) in other.terms() {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> MonomialPoly {
        MonomialPoly(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &MonomialPoly) -> MonomialPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        let mut p = MonomialPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                p.add_term(a.mul(b), x * y);
            }
        }
        p
    }

    pub fn substitute(&self, subst: &BTreeMap<String, Monomial>) -> MonomialPoly {
        let mut p = MonomialPoly::zero();
        for (m, c) in self.terms() {
            p.add_term(m.substitute(subst), c.clone());
        }
        p
    }

    /// Sum of coefficients of the monomials involving only `vars`.
    pub fn restrict_to(&self, vars: &[String]) -> MonomialPoly {
        let mut p = MonomialPoly::zero();
        for (m, c) in self.terms() {
            if m.0.keys().all(|v| vars.contains(v)) {
                p.add_term(m.clone(), c.clone());
            }
        }
        p
    }

    /// Parses expressions like `-x3*x5 + 2*x4*y1^2 - 1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{}: {:?}", why, s));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut p = MonomialPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let mut sign = Rat::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = sign;
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let n: Int = factor.parse().map_err(|_| bad("bad coefficient"))?;
                    coeff *= Rat::from_integer(n);
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok {
                    return Err(bad("bad variable name"));
                }
                mono = mono.mul(&Monomial::var(name).pow(exp));
            }
            p.add_term(mono, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if a.is_one() {
                write!(f, "{}", m)?;
            } else if m.0.is_empty() {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = MonomialPoly::parse("-x3*x5 + x4*y1*y2*y3^2*y5^2 + 2*y1^2").unwrap();
        assert_eq!(p.len(), 3);
        let q = MonomialPoly::parse(&p.to_string()).unwrap();
        assert_eq!(p, q);
        assert!(MonomialPoly::parse("x +").is_err());
        assert!(MonomialPoly::parse("x^a").is_err());
        assert!(MonomialPoly::parse("x - x").unwrap().is_zero());
    }

    #[test]
    fn substitution() {
        let mut s = BTreeMap::new();
        s.insert("x0".to_string(), Monomial::parse("u^4").unwrap());
        s.insert("x1".to_string(), Monomial::parse("u*v").unwrap());
        s.insert("y".to_string(), Monomial::parse("v^4").unwrap());
        let rel = MonomialPoly::parse("y*x0 - x1^4").unwrap();
        assert!(rel.substitute(&s).is_zero());
    }
}
