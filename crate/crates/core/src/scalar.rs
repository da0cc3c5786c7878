use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};
use std::fmt::Debug;

/// Field elements the probability functionals can be evaluated in.
///
/// Only exact types belong here: the sums are compared against 1 and the
/// classification is sensitive to the last bit.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + FromPrimitive + Debug {}

/// Arbitrary-precision rational; the type every reported bound uses.
pub type ExactRational = Ratio<BigInt>;

/// Fixed-width rational for small groups (`|G|` below about 120, where
/// `2^τ` still fits).
pub type SmallRational = Ratio<i128>;
