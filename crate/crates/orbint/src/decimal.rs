// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Decimal-string to interval conversion.
//!
//! `str::parse::<f64>` gives the correctly rounded nearest double. To build
//! directed enclosures we additionally need to know on which side of the
//! exact decimal that double landed, which is decided here with exact
//! big-integer cross-multiplication (no rounding anywhere).

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::IntervalError;
use crate::interval::{EnclosureMode, Interval};
use crate::round;

pub(crate) fn enclose(text: &str, mode: EnclosureMode) -> Result<Interval, IntervalError> {
    let trimmed = text.trim();
    let nearest: f64 = trimmed.parse().map_err(|_| IntervalError::InvalidDecimal {
        text: text.to_owned(),
    })?;
    if !nearest.is_finite() {
        return Err(IntervalError::InvalidDecimal {
            text: text.to_owned(),
        });
    }
    let side = compare_to_exact(trimmed, nearest).ok_or_else(|| IntervalError::InvalidDecimal {
        text: text.to_owned(),
    })?;
    Ok(match mode {
        EnclosureMode::Thin => Interval::raw(nearest, nearest),
        EnclosureMode::Outward => match side {
            Ordering::Equal => Interval::raw(nearest, nearest),
            Ordering::Less => Interval::raw(nearest, nearest.next_up()),
            Ordering::Greater => Interval::raw(nearest.next_down(), nearest),
        },
        EnclosureMode::NeighborPair => match side {
            Ordering::Equal => Interval::raw(nearest, nearest),
            _ => Interval::raw(nearest.next_down(), nearest.next_up()),
        },
    })
}

/// Ordering of `nearest` relative to the exact decimal value of `text`.
/// Returns `None` when the literal cannot be decomposed (e.g. hex floats,
/// "inf", "nan" -- anything outside plain decimal notation).
fn compare_to_exact(text: &str, nearest: f64) -> Option<Ordering> {
    let (digits, pow10) = decompose_decimal(text)?;
    if nearest == 0.0 {
        // parse underflowed (or the literal is zero); compare against 0
        return Some(match digits.sign() {
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Less,
            num_bigint::Sign::Minus => Ordering::Greater,
        });
    }
    let (mant, exp2) = round::decompose(nearest);
    // nearest <=> digits * 10^pow10, cross-multiplied to integers:
    //   mant * 2^exp2 <=> digits * 10^pow10
    let mut lhs = BigInt::from(mant);
    let mut rhs = digits;
    if exp2 >= 0 {
        lhs <<= exp2 as usize;
    } else {
        rhs <<= (-exp2) as usize;
    }
    if pow10 >= 0 {
        rhs *= BigInt::from(10u32).pow(pow10 as u32);
    } else {
        lhs *= BigInt::from(10u32).pow((-pow10) as u32);
    }
    Some(lhs.cmp(&rhs))
}

/// Parse a plain decimal literal into `(digits, pow10)` with
/// `value = digits * 10^pow10` exactly.
fn decompose_decimal(text: &str) -> Option<(BigInt, i64)> {
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let mut value: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    if negative {
        value = -value;
    }
    Some((value, exp - frac_part.len() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_representable_is_thin_in_every_mode() {
        for mode in [
            EnclosureMode::Thin,
            EnclosureMode::Outward,
            EnclosureMode::NeighborPair,
        ] {
            let x = enclose("0.5", mode).unwrap();
            assert_eq!((x.lo(), x.hi()), (0.5, 0.5));
        }
        let x = enclose("-3", EnclosureMode::NeighborPair).unwrap();
        assert_eq!((x.lo(), x.hi()), (-3.0, -3.0));
    }

    #[test]
    fn outward_brackets_the_decimal() {
        // fl(0.6) < 0.6, so the outward interval is [fl(0.6), succ(fl(0.6))]
        let x = enclose("0.6", EnclosureMode::Outward).unwrap();
        assert_eq!(x.lo(), 0.6);
        assert_eq!(x.hi(), 0.6f64.next_up());
        assert_eq!(x.width(), 1.1102230246251565e-16);
        // fl(0.1) > 0.1, so the bracket hangs below
        let y = enclose("0.1", EnclosureMode::Outward).unwrap();
        assert_eq!(y.hi(), 0.1);
        assert_eq!(y.lo(), 0.1f64.next_down());
    }

    #[test]
    fn neighbor_pair_spans_two_ulps() {
        let x = enclose("0.6", EnclosureMode::NeighborPair).unwrap();
        assert_eq!(x.lo(), 0.6f64.next_down());
        assert_eq!(x.hi(), 0.6f64.next_up());
        assert_eq!(x.width(), 2.220446049250313e-16);
    }

    #[test]
    fn thin_is_the_nearest_double() {
        let x = enclose("3.3", EnclosureMode::Thin).unwrap();
        assert_eq!(x.lo(), 3.3);
        assert_eq!(x.width(), 0.0);
    }

    #[test]
    fn exponent_notation() {
        let x = enclose("6e-1", EnclosureMode::Outward).unwrap();
        assert_eq!(x.lo(), 0.6);
        assert_eq!(x.hi(), 0.6f64.next_up());
        let y = enclose("1.25e2", EnclosureMode::Outward).unwrap();
        assert_eq!((y.lo(), y.hi()), (125.0, 125.0));
    }

    #[test]
    fn underflowing_literal_still_encloses() {
        let x = enclose("1e-400", EnclosureMode::Outward).unwrap();
        assert_eq!(x.lo(), 0.0);
        assert_eq!(x.hi(), f64::from_bits(1));
    }

    #[test]
    fn bad_input_is_rejected() {
        for bad in ["", "abc", "1.2.3", "inf", "nan", "1e999", "0x1p3"] {
            assert!(enclose(bad, EnclosureMode::Thin).is_err(), "{bad:?}");
        }
    }
}
