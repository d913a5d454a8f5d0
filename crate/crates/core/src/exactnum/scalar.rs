use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{forward_ring_ops, Field};
use crate::error::{Error, Result};

/// Which exact field a scalar type instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// The rationals.
    Q,
    /// The Gaussian rationals `Q(i)`.
    Qi,
}

impl FieldKind {
    pub fn tag(self) -> &'static str {
        match self {
            FieldKind::Q => "Q",
            FieldKind::Qi => "Qi",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldKind::Q),
            "Qi" => Ok(FieldKind::Qi),
            other => Err(Error::parse(format!("unknown field `{other}`"))),
        }
    }
}

/// An exact field element with a canonical printed form.
pub trait Scalar: Field + Eq + Hash + fmt::Display + FromStr<Err = Error> {
    const KIND: FieldKind;

    fn from_rational(q: BigRational) -> Self;

    /// The value as a rational, or `None` when it has an imaginary part.
    fn to_rational(&self) -> Option<BigRational>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num / den`; panics on `den == 0`.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn to_i64(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// An element of `Q`, always stored in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(q: BigRational) -> Self {
        Rational(q)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg_ref(&self) -> Self {
        Rational(-&self.0)
    }
}

forward_ring_ops!(impl [] for Rational);

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Scalar for Rational {
    const KIND: FieldKind = FieldKind::Q;

    fn from_rational(q: BigRational) -> Self {
        Rational(q)
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.contains('i') {
            return Err(Error::parse(format!("`{s}` has an imaginary part; use the Qi field")));
        }
        parse_rational(&compact).map(Rational)
    }
}

/// An element `re + im·i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    re: BigRational,
    im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Gaussian::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Gaussian::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gaussian::new(&self.re * &rhs.re, BigRational::zero());
        }
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn neg_ref(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
}

forward_ring_ops!(impl [] for Gaussian);

impl Field for Gaussian {
    fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Gaussian::new(self.re.recip(), BigRational::zero()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Gaussian::new(&self.re / &norm, -&self.im / &norm))
    }
}

impl Scalar for Gaussian {
    const KIND: FieldKind = FieldKind::Qi;

    fn from_rational(q: BigRational) -> Self {
        Gaussian::new(q, BigRational::zero())
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{} i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{} - {} i", self.re, -&self.im)
        } else {
            write!(f, "{} + {} i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = compact.strip_suffix('i') else {
            return parse_rational(&compact).map(Gaussian::from_rational);
        };
        // split before the last sign that is not the leading one
        let split = body
            .char_indices()
            .filter(|&(idx, ch)| idx > 0 && (ch == '+' || ch == '-'))
            .map(|(idx, _)| idx)
            .next_back();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() { BigRational::zero() } else { parse_rational(re_part)? };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(Gaussian::new(re, im))
    }
}

/// Parses `a` or `a/b` with an optional sign; whitespace must already be removed.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let is_int = |part: &str, signed: bool| {
        let digits = if signed { part.strip_prefix(['+', '-']).unwrap_or(part) } else { part };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num, true) {
        return Err(bad());
    }
    let num: BigInt = num.strip_prefix('+').unwrap_or(num).parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) if is_int(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_grammar() {
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::from_i64(3));
        assert_eq!("-6/4".parse::<Rational>().unwrap(), Rational::ratio(-3, 2));
        assert_eq!(Rational::ratio(-3, 2).to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1 + 2 i".parse::<Rational>().is_err());
    }

    #[test]
    fn gaussian_grammar() {
        let z: Gaussian = "1/2 + 3/4 i".parse().unwrap();
        assert_eq!(z.re(), &BigRational::new(1.into(), 2.into()));
        assert_eq!(z.im(), &BigRational::new(3.into(), 4.into()));
        assert_eq!("i".parse::<Gaussian>().unwrap(), Gaussian::i());
        assert_eq!("-i".parse::<Gaussian>().unwrap(), -Gaussian::i());
        assert_eq!("2 - i".parse::<Gaussian>().unwrap().to_string(), "2 - 1 i");
        assert_eq!("-1/3 i".parse::<Gaussian>().unwrap().to_string(), "-1/3 i");
        assert_eq!("5".parse::<Gaussian>().unwrap(), Gaussian::from_i64(5));
    }

    #[test]
    fn gaussian_inverse() {
        let z: Gaussian = "1 + 1 i".parse().unwrap();
        let w = z.inv().unwrap();
        assert_eq!(w.to_string(), "1/2 - 1/2 i");
        assert!((z * w).is_one());
        assert!(Gaussian::zero().inv().is_none());
    }

    #[test]
    fn integral_values() {
        assert_eq!(Rational::from_i64(-4).to_i64(), Some(-4));
        assert_eq!(Rational::ratio(1, 2).to_i64(), None);
        assert_eq!(Gaussian::i().to_i64(), None);
    }
}
