use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arithmetic shared by scalars and rational functions in `t`.
///
/// Elimination and basis-change code is generic over this trait so the same
/// routines run over exact scalars and over the rational-function field.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Implements the std operator traits (owned and borrowed forms) on top of
/// inherent `add_ref`, `sub_ref`, `mul_ref` and `neg_ref` methods.
macro_rules! forward_ring_ops {
    (impl [$($gen:tt)*] for $ty:ty) => {
        impl<$($gen)*> ::std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty { self.add_ref(&rhs) }
        }
        impl<'r, $($gen)*> ::std::ops::Add<&'r $ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &'r $ty) -> $ty { self.add_ref(rhs) }
        }
        impl<'l, 'r, $($gen)*> ::std::ops::Add<&'r $ty> for &'l $ty {
            type Output = $ty;
            fn add(self, rhs: &'r $ty) -> $ty { self.add_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty { self.sub_ref(&rhs) }
        }
        impl<'r, $($gen)*> ::std::ops::Sub<&'r $ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &'r $ty) -> $ty { self.sub_ref(rhs) }
        }
        impl<'l, 'r, $($gen)*> ::std::ops::Sub<&'r $ty> for &'l $ty {
            type Output = $ty;
            fn sub(self, rhs: &'r $ty) -> $ty { self.sub_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty { self.mul_ref(&rhs) }
        }
        impl<'r, $($gen)*> ::std::ops::Mul<&'r $ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: &'r $ty) -> $ty { self.mul_ref(rhs) }
        }
        impl<'l, 'r, $($gen)*> ::std::ops::Mul<&'r $ty> for &'l $ty {
            type Output = $ty;
            fn mul(self, rhs: &'r $ty) -> $ty { self.mul_ref(rhs) }
        }
        impl<$($gen)*> ::std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { self.neg_ref() }
        }
        impl<'l, $($gen)*> ::std::ops::Neg for &'l $ty {
            type Output = $ty;
            fn neg(self) -> $ty { self.neg_ref() }
        }
        impl<'r, $($gen)*> ::std::ops::AddAssign<&'r $ty> for $ty {
            fn add_assign(&mut self, rhs: &'r $ty) { *self = self.add_ref(rhs); }
        }
        impl<'r, $($gen)*> ::std::ops::SubAssign<&'r $ty> for $ty {
            fn sub_assign(&mut self, rhs: &'r $ty) { *self = self.sub_ref(rhs); }
        }
        impl<'r, $($gen)*> ::std::ops::MulAssign<&'r $ty> for $ty {
            fn mul_assign(&mut self, rhs: &'r $ty) { *self = self.mul_ref(rhs); }
        }
    };
}
pub(crate) use forward_ring_ops;
