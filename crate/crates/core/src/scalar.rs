//! Integer scalar abstraction behind the arithmetic kernels.
//!
//! Every kernel is written once, generically, and instantiated at two types:
//! `i128`, where the checked operations surface [`Error::Overflow`] and the
//! caller escalates, and [`BigInt`], where they never fail. Public functions
//! try the `i128` path first and redo the computation at arbitrary precision
//! on overflow.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub(crate) trait Scalar:
    Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Debug
    + Display
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Clone
        + Debug
        + Display
{
}

/// Small-constant constructor.
pub(crate) fn sc<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("i64 constant representable in every scalar")
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Conversion onto the `i128` fast path. Rejects `i128::MIN` so that negation
/// of any admitted value can never overflow downstream.
pub(crate) fn to_fast(x: &BigInt) -> Option<i128> {
    match x.to_i128() {
        Some(v) if v != i128::MIN => Some(v),
        _ => None,
    }
}
