use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact ordered field of characteristic zero.
///
/// Every algorithm in this crate is generic over `Field`. Equality is exact,
/// so implementors must never round.
pub trait Field:
    Num + Signed + PartialOrd + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// The value as an `i64` if it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64>;

    /// Canonical `"num/den"` form, denominator omitted when it is 1.
    fn to_scalar_string(&self) -> String {
        self.to_string()
    }

    fn parse_scalar(s: &str) -> Option<Self>;

    /// Largest integer not above the value, if it fits in `i64`.
    fn floor_i64(&self) -> Option<i64>;

    fn sign_of(parity: u8) -> Self {
        if parity % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn floor_i64(&self) -> Option<i64> {
        self.floor().numer().to_i64()
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let n = T::from_str(n.trim()).ok()?;
                let d = T::from_str(d.trim()).ok()?;
                if d.is_zero() {
                    return None;
                }
                Ratio::new(n, d)
            }
            None => Ratio::from_integer(T::from_str(s).ok()?),
        };
        Some(r)
    }
}
