//! Integer polynomials in the formal bubble parameter `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn add_term(&mut self, exp: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut p = Self::zero();
        for (e, a) in self.terms() {
            p.add_term(e, a * c);
        }
        p
    }

    pub fn shift(&self, by: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    /// Substitutes an integer for `t`.
    pub fn eval(&self, t: i64) -> i64 {
        self.terms().map(|(e, c)| c * t.pow(e)).sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Self::zero();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1.min(body.len())..].find(['+', '-']).map(|i| i + 1).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let bad = || Error::Parse(format!("bad polynomial term `{term}`"));
            let (c, e) = match term.find('t') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0),
                Some(i) => {
                    let c = match &term[..i] {
                        "" => 1,
                        cs => cs.trim_end_matches('*').parse::<i64>().map_err(|_| bad())?,
                    };
                    let e = match &term[i + 1..] {
                        "" => 1,
                        es => es.strip_prefix('^').ok_or_else(bad)?.parse::<u32>().map_err(|_| bad())?,
                    };
                    (c, e)
                }
            };
            p.add_term(e, sign * c);
        }
        Ok(p)
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let (e, c) = (*e, *c);
            if c < 0 {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl AddAssign<&TPolynomial> for TPolynomial {
    fn add_assign(&mut self, rhs: &TPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        self.scale(-1)
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        let mut p = TPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_and_parse() {
        let p = TPolynomial::parse("3t^2-1").unwrap();
        assert_eq!(p.coeff(2), 3);
        assert_eq!(p.coeff(0), -1);
        assert_eq!(p.to_string(), "3t^2-1");
        assert_eq!(TPolynomial::parse("-t+2").unwrap().to_string(), "-t+2");
        assert_eq!(TPolynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = TPolynomial> {
        prop::collection::vec((0u32..5, -20i64..20), 0..5).prop_map(|v| {
            let mut p = TPolynomial::zero();
            for (e, c) in v {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn round_trip(p in arb_poly()) {
            prop_assert_eq!(TPolynomial::parse(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn eval_is_ring_hom(p in arb_poly(), q in arb_poly(), t in -4i64..5) {
            prop_assert_eq!((&p * &q).eval(t), p.eval(t) * q.eval(t));
            prop_assert_eq!((&p + &q).eval(t), p.eval(t) + q.eval(t));
        }
    }
}
