//! Scalar traits shared by the geometry and the integer linear algebra.
//!
//! Geometry only ever needs an exactly ordered field; elimination only ever
//! needs a Euclidean integer type whose arithmetic can report overflow.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Neg => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Pos => Ordering::Greater,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }
}

/// An ordered field with exact sign decisions.
///
/// Floating point types are deliberately not implementors: face enumeration
/// depends on exact incidence and exact sign vectors.
pub trait OrderedField:
    Clone
    + Debug
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn sign(&self) -> Sign;

    fn from_integer(n: i64) -> Self;

    fn cmp_exact(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign().to_ordering()
    }
}

impl OrderedField for BigRational {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Integer types usable in Smith normal form elimination.
///
/// Checked operations return `None` on overflow; for [`BigInt`] they never do.
pub trait ExactInt:
    Clone + Debug + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64> + Into<BigInt>
{
}

impl<T> ExactInt for T where
    T: Clone
        + Debug
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i64>
        + Into<BigInt>
{
}
