//! Base-b representations, Thue–Morse bits and evil/odious predicates.
//!
//! Words are stored most-significant digit first. Positions are counted from
//! the least significant digit, so position 0 is the last element.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_BASE: u32 = 255;

pub fn check_base(base: u32) -> Result<()> {
    if (2..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::InvalidBase(base))
    }
}

/// A word over `{0, .., base-1}`, MSD first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitWord {
    base: u32,
    digits: Vec<u8>,
}

impl DigitWord {
    pub fn new(base: u32, digits: Vec<u8>) -> Result<Self> {
        check_base(base)?;
        if let Some(&d) = digits.iter().find(|&&d| u32::from(d) >= base) {
            return Err(Error::InvalidDigit { digit: d.into(), base });
        }
        Ok(DigitWord { base, digits })
    }

    /// Canonical representation of `n` (no leading zeros; empty for 0).
    pub fn from_u64(n: u64, base: u32) -> Result<Self> {
        Ok(DigitWord { base, digits: to_digits(n, base)? })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `i`, counted from the least significant end.
    pub fn at_position(&self, i: usize) -> Option<u8> {
        self.digits.len().checked_sub(i + 1).map(|k| self.digits[k])
    }

    pub fn has_leading_zero(&self) -> bool {
        self.digits.first() == Some(&0)
    }

    pub fn value(&self) -> BigUint {
        from_digits_big(&self.digits, self.base)
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            if self.base <= 36 {
                write!(f, "{}", char::from_digit(d.into(), 36).unwrap())?;
            } else {
                write!(f, "[{d}]")?;
            }
        }
        Ok(())
    }
}

/// Canonical base-`base` digits of `n`, MSD first. Zero maps to the empty word.
pub fn to_digits(mut n: u64, base: u32) -> Result<Vec<u8>> {
    check_base(base)?;
    let b = u64::from(base);
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % b) as u8);
        n /= b;
    }
    out.reverse();
    Ok(out)
}

pub fn to_digits_big(n: &BigUint, base: u32) -> Result<Vec<u8>> {
    check_base(base)?;
    if n.is_zero() {
        return Ok(Vec::new());
    }
    Ok(n.to_radix_be(base))
}

/// Value of an MSD-first digit slice. Leading zeros are ignored.
pub fn from_digits(digits: &[u8], base: u32) -> Option<u64> {
    let b = u64::from(base);
    digits
        .iter()
        .try_fold(0u64, |acc, &d| acc.checked_mul(b)?.checked_add(d.into()))
}

pub fn from_digits_big(digits: &[u8], base: u32) -> BigUint {
    let mut acc = BigUint::zero();
    for &d in digits {
        acc = acc * base + BigUint::from(d);
    }
    acc
}

/// Thue–Morse bit t_n: parity of the binary digit sum.
pub fn thue_morse(n: u64) -> u8 {
    (n.count_ones() & 1) as u8
}

/// n is evil when its binary digit sum is even.
pub fn is_evil(n: u64) -> bool {
    thue_morse(n) == 0
}

pub fn is_odious(n: u64) -> bool {
    !is_evil(n)
}

/// Parses a block such as `"12"` or `"a9"` into digits (0-9, a-z).
pub fn parse_block(s: &str, base: u32) -> Result<Vec<u8>> {
    if s.is_empty() {
        return Err(Error::InvalidSpec("empty block".into()));
    }
    s.chars()
        .map(|c| {
            let d = c
                .to_digit(36)
                .ok_or_else(|| Error::InvalidSpec(format!("bad digit character {c:?} in block {s:?}")))?;
            if d >= base {
                return Err(Error::InvalidDigit { digit: d, base });
            }
            Ok(d as u8)
        })
        .collect()
}

pub fn format_block(block: &[u8]) -> String {
    block
        .iter()
        .map(|&d| char::from_digit(d.into(), 36).unwrap_or('?'))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digits_round_trip_small() {
        assert_eq!(to_digits(0, 10).unwrap(), Vec::<u8>::new());
        assert_eq!(to_digits(1289, 10).unwrap(), vec![1, 2, 8, 9]);
        assert_eq!(to_digits(6, 2).unwrap(), vec![1, 1, 0]);
        assert!(to_digits(5, 1).is_err());
    }

    #[test]
    fn positions_from_lsd() {
        let w = DigitWord::new(10, vec![1, 2, 8, 9]).unwrap();
        assert_eq!(w.at_position(0), Some(9));
        assert_eq!(w.at_position(3), Some(1));
        assert_eq!(w.at_position(4), None);
        assert_eq!(w.to_string(), "1289");
    }

    #[test]
    fn thue_morse_prefix() {
        let t: Vec<u8> = (0..16).map(thue_morse).collect();
        assert_eq!(t, vec![0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0]);
        assert!(is_evil(0) && is_evil(3) && is_odious(7));
    }

    #[test]
    fn invalid_digit_rejected() {
        assert!(DigitWord::new(2, vec![1, 2]).is_err());
        assert!(parse_block("19", 9).is_err());
        assert_eq!(parse_block("a0", 16).unwrap(), vec![10, 0]);
    }

    proptest! {
        #[test]
        fn round_trip(n in any::<u64>(), b in 2u32..=255) {
            let d = to_digits(n, b).unwrap();
            prop_assert_eq!(from_digits(&d, b), Some(n));
            prop_assert_eq!(d.first().copied().unwrap_or(1) != 0, true);
            prop_assert_eq!(to_digits_big(&BigUint::from(n), b).unwrap(), d);
        }

        #[test]
        fn thue_morse_recurrence(n in 0u64..(1 << 40)) {
            prop_assert_eq!(thue_morse(2 * n), thue_morse(n));
            prop_assert_eq!(thue_morse(2 * n + 1), 1 - thue_morse(n));
        }
    }
}
