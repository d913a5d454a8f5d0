use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::field::forward_ring_ops;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A Laurent polynomial in the formal parameter `t`.
///
/// Stored as a sparse map from exponent to coefficient with no zero entries,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TPoly<F> {
    terms: BTreeMap<i64, F>,
}

impl<F: Scalar> TPoly<F> {
    pub fn zero() -> Self {
        TPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·t^e`.
    pub fn monomial(c: F, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TPoly { terms }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(F::one(), e)
    }

    /// Sums the given `(coefficient, exponent)` pairs.
    pub fn from_terms(iter: impl IntoIterator<Item = (F, i64)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in iter {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, c: F, e: i64) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn ord(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i64) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn lowest_coeff(&self) -> Option<&F> {
        self.terms.values().next()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some((c, e))` when the polynomial is a single term `c·t^e`.
    pub fn as_monomial(&self) -> Option<(&F, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        TPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * s)).collect() }
    }

    /// Evaluates at `t = t0`; a zero `t0` with negative exponents present is a pole.
    pub fn eval(&self, t0: &F) -> Result<F> {
        let mut acc = F::zero();
        if t0.is_zero() {
            if let Some(ord) = self.ord() {
                if ord < 0 {
                    return Err(Error::Pole { valuation: ord });
                }
            }
            return Ok(self.coeff(0));
        }
        let inv = t0.inv().expect("nonzero");
        for (e, c) in &self.terms {
            let base = if *e < 0 { &inv } else { t0 };
            let mut p = F::one();
            for _ in 0..e.unsigned_abs() {
                p *= base;
            }
            acc += &(p * c);
        }
        Ok(acc)
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(c.clone(), *e);
        }
        out
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(-c.clone(), *e);
        }
        out
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ca.clone() * cb, ea + eb);
            }
        }
        out
    }

    pub(crate) fn neg_ref(&self) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    /// Euclidean division of ordinary polynomials (both `ord >= 0`).
    pub(crate) fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        debug_assert!(self.ord().is_none_or(|o| o >= 0));
        debug_assert!(divisor.ord().is_some_and(|o| o >= 0));
        let d_deg = divisor.degree().expect("nonzero divisor");
        let d_lead_inv = divisor.leading_coeff().and_then(|c| c.inv()).expect("nonzero");
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading_coeff().expect("nonzero").clone() * &d_lead_inv;
            let shift = r_deg - d_deg;
            quotient.add_term(factor.clone(), shift);
            for (e, c) in &divisor.terms {
                rem.add_term(-(c.clone() * &factor), e + shift);
            }
        }
        (quotient, rem)
    }

    /// Monic greatest common divisor of ordinary polynomials.
    pub(crate) fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        match x.leading_coeff().and_then(|c| c.inv()) {
            Some(inv) => x.scale(&inv),
            None => x,
        }
    }
}

forward_ring_ops!(impl [F: Scalar] for TPoly<F>);

fn needs_parens<F: Scalar>(c: &F) -> bool {
    // Gaussian coefficients with both parts carry an inner sign
    let s = c.to_string();
    let body = s.strip_prefix('-').unwrap_or(&s);
    body.contains(" + ") || body.contains(" - ")
}

impl<F: Scalar> fmt::Display for TPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            let (negative, magnitude) = if needs_parens(c) {
                (false, format!("({c})"))
            } else {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            };
            let body = if var.is_empty() {
                magnitude
            } else if magnitude == "1" {
                var
            } else {
                format!("{magnitude}*{var}")
            };
            match (idx, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for TPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> FromStr for TPoly<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("empty Laurent polynomial"));
        }
        let mut poly = Self::zero();
        for (negative, term) in split_terms(&compact)? {
            let (coeff, exp) = parse_term::<F>(term)?;
            poly.add_term(if negative { -coeff } else { coeff }, exp);
        }
        Ok(poly)
    }
}

/// Splits on top-level `+`/`-`, skipping signs inside parentheses and after `^`.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (idx, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let after_caret = idx > 0 && bytes[idx - 1] == b'^';
                if after_caret {
                    continue;
                }
                if idx > start {
                    out.push((negative, &s[start..idx]));
                } else if idx != 0 {
                    return Err(Error::parse(format!("dangling sign in `{s}`")));
                }
                negative = b == b'-';
                start = idx + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(format!("unbalanced parentheses in `{s}`")));
    }
    if start >= s.len() {
        return Err(Error::parse(format!("trailing sign in `{s}`")));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term<F: Scalar>(term: &str) -> Result<(F, i64)> {
    let parse_exp = |var: &str| -> Result<i64> {
        match var {
            "t" => Ok(1),
            _ => var
                .strip_prefix("t^")
                .and_then(|e| e.parse::<i64>().ok())
                .ok_or_else(|| Error::parse(format!("invalid power of t `{var}`"))),
        }
    };
    let parse_coeff = |c: &str| -> Result<F> {
        let inner = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
        inner.parse::<F>()
    };
    if let Some((coeff, var)) = term.rsplit_once('*') {
        Ok((parse_coeff(coeff)?, parse_exp(var)?))
    } else if term.starts_with('t') {
        Ok((F::one(), parse_exp(term)?))
    } else {
        Ok((parse_coeff(term)?, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Gaussian, Rational};

    type P = TPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn laurent_grammar() {
        let p: P = "1 - 2*t^-1".parse().unwrap();
        assert_eq!(p, P::from_terms([(q(1, 1), 0), (q(-2, 1), -1)]));
        assert_eq!(p.to_string(), "-2*t^-1 + 1");
        assert_eq!(p.ord(), Some(-1));
        let p: P = "t^-2".parse().unwrap();
        assert_eq!(p, P::t_pow(-2));
        let p: P = "-t + 1/2*t^3 - 3".parse().unwrap();
        assert_eq!(p.to_string(), "-3 - t + 1/2*t^3");
        assert_eq!("0".parse::<P>().unwrap(), P::zero());
        assert!("1 +".parse::<P>().is_err());
        assert!("2*s".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
    }

    #[test]
    fn gaussian_coefficients_round_trip() {
        let p: TPoly<Gaussian> = "(1 + 2 i)*t^2 - i*t".parse().unwrap();
        let again: TPoly<Gaussian> = p.to_string().parse().unwrap();
        assert_eq!(p, again);
        assert_eq!(p.coeff(1), -Gaussian::i());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a: P = "t + 1".parse().unwrap();
        let b: P = "t".parse().unwrap();
        assert_eq!((a - b), P::one());
        let z = P::t_pow(3) - P::t_pow(3);
        assert!(z.is_zero());
        assert_eq!(z.ord(), None);
    }

    #[test]
    fn euclid() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a: P = "t^2 - 1".parse().unwrap();
        let b: P = "t^2 + 2*t + 1".parse().unwrap();
        let g = P::gcd(&a, &b);
        assert_eq!(g, "t + 1".parse().unwrap());
        let (quo, rem) = a.div_rem(&g);
        assert!(rem.is_zero());
        assert_eq!(quo, "t - 1".parse().unwrap());
    }

    #[test]
    fn evaluation() {
        let p: P = "1 - 2*t^-1".parse().unwrap();
        assert_eq!(p.eval(&q(1, 2)).unwrap(), q(-3, 1));
        assert!(p.eval(&q(0, 1)).is_err());
    }
}
