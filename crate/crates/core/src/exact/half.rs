use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{PrimInt, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Signed machine integer backing a [`Half`].
pub trait Scalar:
    PrimInt + Signed + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// An element of `(1/2)Z`, stored as its double.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Half<S: Scalar> {
    twice: S,
}

impl<S: Scalar> Half<S> {
    pub fn zero() -> Self {
        Self { twice: S::zero() }
    }

    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: S) -> Self {
        Self { twice }
    }

    /// The integer `k`, seen as a half-integer. Panics if `2k` overflows.
    pub fn integer(k: S) -> Self {
        Self::try_integer(k).expect("half-integer overflow")
    }

    pub fn try_integer(k: S) -> Result<Self> {
        k.checked_add(&k)
            .map(Self::from_twice)
            .ok_or_else(|| Error::Overflow(k.to_string()))
    }

    /// Converts a machine integer of any width, rejecting values whose double overflows `S`.
    pub fn from_i128(k: i128) -> Result<Self> {
        let twice = k
            .checked_mul(2)
            .ok_or_else(|| Error::Overflow(k.to_string()))?;
        num_traits::cast::<i128, S>(twice)
            .map(Self::from_twice)
            .ok_or_else(|| Error::Overflow(k.to_string()))
    }

    pub fn twice(self) -> S {
        self.twice
    }

    pub fn is_integral(self) -> bool {
        self.twice % (S::one() + S::one()) == S::zero()
    }

    /// `Some(k)` when the value is the integer `k`.
    pub fn to_integer(self) -> Option<S> {
        self.is_integral()
            .then(|| self.twice / (S::one() + S::one()))
    }

    pub fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        self.twice.checked_add(&rhs.twice).map(Self::from_twice)
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.twice.checked_sub(&rhs.twice).map(Self::from_twice)
    }
}

impl<S: Scalar> PartialOrd for Half<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Scalar> Ord for Half<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl<S: Scalar> Add for Half<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            twice: self.twice + rhs.twice,
        }
    }
}

impl<S: Scalar> Sub for Half<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            twice: self.twice - rhs.twice,
        }
    }
}

impl<S: Scalar> Neg for Half<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { twice: -self.twice }
    }
}

impl<S: Scalar> Mul<S> for Half<S> {
    type Output = Self;
    fn mul(self, rhs: S) -> Self {
        Self {
            twice: self.twice * rhs,
        }
    }
}

impl<S: Scalar> AddAssign for Half<S> {
    fn add_assign(&mut self, rhs: Self) {
        self.twice = self.twice + rhs.twice;
    }
}

impl<S: Scalar> SubAssign for Half<S> {
    fn sub_assign(&mut self, rhs: Self) {
        self.twice = self.twice - rhs.twice;
    }
}

impl<S: Scalar> Sum for Half<S> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

impl<S: Scalar> fmt::Display for Half<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

impl<S: Scalar> fmt::Debug for Half<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: Scalar> FromStr for Half<S> {
    type Err = Error;

    /// Accepts `"p"` or `"p/2"` with `p` odd; anything else is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadHalfInt(s.to_string());
        let t = s.trim();
        let (num, twice) = match t.split_once('/') {
            None => (t, false),
            Some((num, "2")) => (num, true),
            Some(_) => return Err(bad()),
        };
        let num = num.trim();
        if num.is_empty() || num.starts_with('+') {
            return Err(bad());
        }
        let p: i128 = num.parse().map_err(|_| bad())?;
        if twice {
            if p % 2 == 0 {
                return Err(bad());
            }
            num_traits::cast::<i128, S>(p)
                .map(Self::from_twice)
                .ok_or_else(|| Error::Overflow(s.to_string()))
        } else {
            Self::from_i128(p)
        }
    }
}

impl<S: Scalar> Serialize for Half<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Half<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
