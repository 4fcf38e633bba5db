// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact dyadic rationals `m * 2^e` over big integers.
//!
//! Used as the reference arithmetic when checking interval enclosures: every
//! finite double is a dyadic rational, and sums/differences/products of
//! dyadics stay dyadic, so containment checks never round. Quotients are not
//! dyadic in general; [`Dyadic::div_between`] answers the containment
//! question by cross-multiplication instead of dividing.
//!
//! Deliberately independent of the crate under test: the double decomposition
//! is re-derived here from raw bits.

use std::cmp::Ordering;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::from(0),
            exp: 0,
        }
    }

    /// Exact value of a finite double.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "dyadic conversion needs a finite double");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let exp_field = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mag, exp) = if exp_field == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_field - 1075)
        };
        let mut mant = BigInt::from(mag);
        if x.is_sign_negative() {
            mant = -mant;
        }
        Dyadic { mant, exp }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, exp) = align(self, other);
        Dyadic { mant: a + b, exp }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, exp) = align(self, other);
        Dyadic { mant: a - b, exp }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn pow(&self, k: u32) -> Dyadic {
        Dyadic {
            mant: self.mant.pow(k),
            exp: self.exp * k as i64,
        }
    }

    pub fn cmp_dyadic(&self, other: &Dyadic) -> Ordering {
        let (a, b, _) = align(self, other);
        a.cmp(&b)
    }

    /// Compare against a double, including infinities.
    pub fn cmp_f64(&self, x: f64) -> Ordering {
        if x == f64::INFINITY {
            return Ordering::Less;
        }
        if x == f64::NEG_INFINITY {
            return Ordering::Greater;
        }
        self.cmp_dyadic(&Dyadic::from_f64(x))
    }

    /// True iff `lo <= self <= hi`.
    pub fn in_closed(&self, lo: f64, hi: f64) -> bool {
        self.cmp_f64(lo) != Ordering::Less && self.cmp_f64(hi) != Ordering::Greater
    }

    /// True iff `lo <= a/b <= hi`, decided without division (`b != 0`).
    pub fn div_between(a: &Dyadic, b: &Dyadic, lo: f64, hi: f64) -> bool {
        assert!(b.mant.sign() != num_bigint::Sign::NoSign);
        let lo_b = dyadic_or_inf_mul(lo, b);
        let hi_b = dyadic_or_inf_mul(hi, b);
        let positive = b.mant.sign() == num_bigint::Sign::Plus;
        // lo <= a/b  <=>  lo*b <= a (b > 0), lo*b >= a (b < 0)
        let lower_ok = match &lo_b {
            Bound::NegInf => positive,
            Bound::PosInf => !positive,
            Bound::Finite(p) => {
                if positive {
                    p.cmp_dyadic(a) != Ordering::Greater
                } else {
                    p.cmp_dyadic(a) != Ordering::Less
                }
            }
        };
        // a/b <= hi  <=>  a <= hi*b (b > 0), a >= hi*b (b < 0)
        let upper_ok = match &hi_b {
            Bound::PosInf => positive,
            Bound::NegInf => !positive,
            Bound::Finite(p) => {
                if positive {
                    p.cmp_dyadic(a) != Ordering::Less
                } else {
                    p.cmp_dyadic(a) != Ordering::Greater
                }
            }
        };
        lower_ok && upper_ok
    }
}

enum Bound {
    Finite(Dyadic),
    PosInf,
    NegInf,
}

fn dyadic_or_inf_mul(x: f64, b: &Dyadic) -> Bound {
    if x.is_finite() {
        return Bound::Finite(Dyadic::from_f64(x).mul(b));
    }
    let positive_b = b.mant.sign() == num_bigint::Sign::Plus;
    if (x == f64::INFINITY) == positive_b {
        Bound::PosInf
    } else {
        Bound::NegInf
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    let exp = a.exp.min(b.exp);
    let am = &a.mant << (a.exp - exp) as usize;
    let bm = &b.mant << (b.exp - exp) as usize;
    (am, bm, exp)
}
