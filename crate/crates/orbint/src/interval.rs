// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Closed intervals with binary64 endpoints and outward-rounded arithmetic.
//!
//! Every operation returns an interval that encloses the exact set
//! `{x op y : x in X, y in Y}`. Endpoints are the correctly rounded directed
//! values wherever the error-free residual is available (see the `round` module),
//! so the enclosures carry no avoidable slack; this matters because slack
//! compounds geometrically when intervals are iterated through a map.

use std::fmt;

use crate::decimal;
use crate::error::IntervalError;
use crate::round;

/// How a decimal string is turned into an initial interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnclosureMode {
    /// The single nearest double; width 0. The decimal itself may lie outside.
    Thin,
    /// The two doubles bracketing the exact decimal value; width one ulp
    /// (zero when the decimal is exactly representable).
    Outward,
    /// The two doubles adjacent to the rounded value, `[pred(fl(v)), succ(fl(v))]`;
    /// width two ulps (zero when exactly representable).
    NeighborPair,
}

impl std::str::FromStr for EnclosureMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "thin" => Ok(Self::Thin),
            "outward" => Ok(Self::Outward),
            "pair" => Ok(Self::NeighborPair),
            other => Err(format!(
                "unknown enclosure mode {other:?} (expected thin, outward or pair)"
            )),
        }
    }
}

/// A closed real interval `[lo, hi]` with double endpoints.
///
/// Invariants: `lo <= hi`, neither endpoint is NaN. Infinite endpoints only
/// appear through overflow saturation, never from construction of finite data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Exact construction from ordered endpoints; no rounding is applied.
    pub fn new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(IntervalError::InvalidEndpoints { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// The degenerate interval `[v, v]`.
    pub fn point(v: f64) -> Result<Self, IntervalError> {
        Self::new(v, v)
    }

    /// Enclose a decimal literal according to `mode`.
    pub fn from_decimal(text: &str, mode: EnclosureMode) -> Result<Self, IntervalError> {
        decimal::enclose(text, mode)
    }

    pub(crate) fn raw(lo: f64, hi: f64) -> Self {
        debug_assert!(!lo.is_nan() && !hi.is_nan() && lo <= hi);
        Self { lo, hi }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Diameter `hi - lo`, rounded upward so uncertainty is never understated.
    pub fn width(&self) -> f64 {
        if self.lo == self.hi {
            return 0.0;
        }
        round::sub_dir(self.hi, self.lo).1
    }

    /// A double inside the interval, as close as possible to the exact centre.
    pub fn midpoint(&self) -> Result<f64, IntervalError> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(IntervalError::NonFiniteMidpoint(*self));
        }
        let mut m = 0.5 * (self.lo + self.hi);
        if !m.is_finite() {
            m = 0.5 * self.lo + 0.5 * self.hi;
        }
        Ok(m.clamp(self.lo, self.hi))
    }

    /// True iff `lo <= v <= hi` (exact comparisons, closed endpoints).
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// True iff `other` is a subset of `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Set intersection; `None` when the intervals are disjoint.
    /// Endpoints are reused exactly, no rounding.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    /// Smallest interval containing both operands (hull of the set union).
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// `[-hi, -lo]`; negation is exact.
    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let (lo, _) = round::add_dir(self.lo, other.lo);
        let (_, hi) = round::add_dir(self.hi, other.hi);
        Interval::raw(lo, hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let (lo, _) = round::sub_dir(self.lo, other.hi);
        let (_, hi) = round::sub_dir(self.hi, other.lo);
        Interval::raw(lo, hi)
    }

    /// Product over the four endpoint pairs, each bracketed sharply.
    pub fn mul(&self, other: &Interval) -> Interval {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for a in [self.lo, self.hi] {
            for b in [other.lo, other.hi] {
                let (d, u) = round::mul_dir(a, b);
                lo = lo.min(d);
                hi = hi.max(u);
            }
        }
        Interval::raw(lo, hi)
    }

    /// Quotient; the divisor must not contain zero.
    pub fn div(&self, other: &Interval) -> Result<Interval, IntervalError> {
        if other.contains(0.0) {
            return Err(IntervalError::DivisionByZero(*other));
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for a in [self.lo, self.hi] {
            for b in [other.lo, other.hi] {
                let (d, u) = round::div_dir(a, b);
                lo = lo.min(d);
                hi = hi.max(u);
            }
        }
        Ok(Interval::raw(lo, hi))
    }

    /// `X^k` with the even/odd case split, so even powers never go negative.
    pub fn pow_int(&self, k: u32) -> Interval {
        if k == 0 {
            return Interval { lo: 1.0, hi: 1.0 };
        }
        if k == 1 {
            return *self;
        }
        if k % 2 == 1 {
            return Interval::raw(
                round::pow_dir(self.lo, k, true),
                round::pow_dir(self.hi, k, false),
            );
        }
        // even power
        if self.lo >= 0.0 {
            Interval::raw(
                round::pow_dir(self.lo, k, true),
                round::pow_dir(self.hi, k, false),
            )
        } else if self.hi <= 0.0 {
            Interval::raw(
                round::pow_dir(self.hi, k, true),
                round::pow_dir(self.lo, k, false),
            )
        } else {
            let big = self.lo.abs().max(self.hi.abs());
            Interval::raw(0.0, round::pow_dir(big, k, false))
        }
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval::add(&self, &rhs)
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval::sub(&self, &rhs)
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        Interval::mul(&self, &rhs)
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(&self)
    }
}

impl fmt::Display for Interval {
    /// `[lo, hi]` with 17 significant digits per endpoint (round-trip exact).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.16e}, {:.16e}]", self.lo, self.hi)
    }
}
