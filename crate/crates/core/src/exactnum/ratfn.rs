use std::fmt;

use super::field::{forward_ring_ops, Field};
use super::scalar::Scalar;
use super::tpoly::TPoly;
use crate::error::{Error, Result};

/// A rational function in `t`, kept in canonical form.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient one, all powers of `t` live in the
/// numerator, and numerator and denominator share no common factor. Equal
/// functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn<F> {
    num: TPoly<F>,
    den: TPoly<F>,
}

impl<F: Scalar> RatFn<F> {
    pub fn new(num: TPoly<F>, den: TPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: TPoly<F>) -> Self {
        RatFn { num: p, den: TPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn numerator(&self) -> &TPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &TPoly<F> {
        &self.den
    }

    /// The Laurent polynomial this function equals, if its denominator is one.
    pub fn as_poly(&self) -> Option<&TPoly<F>> {
        self.den.is_one().then_some(&self.num)
    }

    /// `ord(num) - ord(den)`; `None` for the zero function.
    pub fn valuation(&self) -> Option<i64> {
        self.num.ord()
    }

    /// The value at `t -> 0`, or [`Error::Pole`] when the valuation is negative.
    pub fn limit0(&self) -> Result<F> {
        match self.valuation() {
            None => Ok(F::zero()),
            Some(v) if v > 0 => Ok(F::zero()),
            Some(0) => {
                let lead = self.num.lowest_coeff().expect("nonzero").clone();
                let den0 = self.den.lowest_coeff().expect("nonzero");
                Ok(lead * &den0.inv().expect("nonzero"))
            }
            Some(v) => Err(Error::Pole { valuation: v }),
        }
    }

    pub fn eval(&self, t0: &F) -> Result<F> {
        let d = self.den.eval(t0)?;
        let d_inv = d.inv().ok_or(Error::ZeroDenominator)?;
        Ok(self.num.eval(t0)? * &d_inv)
    }

    fn normalized(num: TPoly<F>, den: TPoly<F>) -> Self {
        if num.is_zero() {
            return Self::from_poly(TPoly::zero());
        }
        let den_ord = den.ord().expect("nonzero");
        let num = num.shift(-den_ord);
        let mut den = den.shift(-den_ord);
        let num_ord = num.ord().expect("nonzero");
        let mut core = num.shift(-num_ord);
        if den.degree() != Some(0) {
            let g = TPoly::gcd(&core, &den);
            if g.degree() != Some(0) {
                core = core.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lead_inv = den.leading_coeff().and_then(|c| c.inv()).expect("nonzero");
        if !lead_inv.is_one() {
            core = core.scale(&lead_inv);
            den = den.scale(&lead_inv);
        }
        RatFn { num: core.shift(num_ord), den }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFn { num, den: TPoly::one() };
            }
            return Self::normalized(num, self.den.clone());
        }
        Self::normalized(&self.num * &rhs.den + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn { num: &self.num * &rhs.num, den: TPoly::one() };
        }
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn neg_ref(&self) -> Self {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

forward_ring_ops!(impl [F: Scalar] for RatFn<F>);

impl<F: Scalar> Field for RatFn<F> {
    fn zero() -> Self {
        Self::from_poly(TPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(TPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl<F: Scalar> From<TPoly<F>> for RatFn<F> {
    fn from(p: TPoly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Scalar> fmt::Display for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Scalar> fmt::Debug for RatFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience for tests and witness tables: parses `num` and `den` with the
/// Laurent grammar.
pub fn ratfn<F: Scalar>(num: &str, den: &str) -> Result<RatFn<F>> {
    RatFn::new(num.parse()?, den.parse()?)
}
