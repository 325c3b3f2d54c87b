use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for relations, structure constants and operator matrices.
///
/// Everything in this crate only assumes commutative-ring arithmetic with
/// exact equality (plus division, used when comparing relations up to a
/// scalar). The intended instantiation is [`crate::Rat`]; `f32`/`f64` satisfy
/// the bounds as well but give up exactness.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display
{
}

/// The integer `n` as a scalar.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("integer does not fit in scalar type")
}

/// The fraction `p/q` as a scalar.
pub fn frac<S: Scalar>(p: i64, q: i64) -> S {
    assert!(q != 0, "zero denominator");
    int::<S>(p) / int::<S>(q)
}
