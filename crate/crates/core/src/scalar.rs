//! The integer carrier every exact type in this crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{NumRef, Signed, ToPrimitive};

/// Exact signed integers usable as the coordinates of a Gaussian integer.
///
/// `BigInt` is the carrier used by the root aliases and by everything that
/// evaluates long words. Fixed-width carriers (`i64`, `i128`) also satisfy the
/// bound and are handy for small hand-checked cases, but entries of products
/// grow exponentially with word length, so they overflow quickly.
pub trait Scalar:
    Integer + Signed + NumRef + ToPrimitive + Clone + Debug + Display + Hash + From<i32> + Send + Sync + 'static
{
    /// Parses a plain decimal integer (`-?[0-9]+`), rejecting signs like `+`,
    /// separators and whitespace.
    fn parse_decimal(s: &str) -> Option<Self>;

    /// `floor(log2(self))` for positive values.
    fn floor_log2(&self) -> Option<u64> {
        if !self.is_positive() {
            return None;
        }
        let two = Self::from(2);
        let mut v = self.clone();
        let mut bits = 0u64;
        while v > Self::one() {
            v = v / &two;
            bits += 1;
        }
        Some(bits)
    }
}

impl<T> Scalar for T
where
    T: Integer
        + Signed
        + NumRef
        + ToPrimitive
        + Clone
        + Debug
        + Display
        + Hash
        + From<i32>
        + Send
        + Sync
        + std::str::FromStr
        + 'static,
{
    fn parse_decimal(s: &str) -> Option<Self> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    }
}
