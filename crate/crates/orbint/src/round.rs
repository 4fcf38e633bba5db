// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Directed rounding for binary64 without touching the FPU rounding mode.
//!
//! Every helper returns a `(down, up)` bracket of the exact real result of
//! one arithmetic operation. The bracket is *sharp*: each side is the
//! correctly rounded value in that direction, established by computing the
//! round-to-nearest result and then recovering the exact rounding residual
//! with an error-free transformation (Knuth's two-sum for `+`/`-`, an FMA
//! residual for `*`/`/`). The sign of the residual tells whether the nearest
//! result sits above, below, or exactly on the real value.
//!
//! The FMA residual of a product (or division) is only guaranteed to be
//! representable while the result is comfortably inside the normal range.
//! Below [`EFT_GUARD`] we give up on sharpness and step one ulp outward on
//! both sides, which keeps the bracket sound at the cost of slack.

/// Magnitude below which the FMA residual of `*` and `/` may underflow.
///
/// The true cutoff is near 2^-1021; 1e-270 leaves a wide safety margin and
/// costs nothing on realistic data.
const EFT_GUARD: f64 = 1e-270;

/// `(a + b)` rounded down and up.
pub fn add_dir(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    if s == f64::INFINITY {
        return (f64::MAX, f64::INFINITY);
    }
    if s == f64::NEG_INFINITY {
        return (f64::NEG_INFINITY, f64::MIN);
    }
    let e = two_sum_err(a, b, s);
    bracket(s, e)
}

/// `(a - b)` rounded down and up.
pub fn sub_dir(a: f64, b: f64) -> (f64, f64) {
    add_dir(a, -b)
}

/// `(a * b)` rounded down and up.
pub fn mul_dir(a: f64, b: f64) -> (f64, f64) {
    if a == 0.0 || b == 0.0 {
        let z = a * b; // exact signed zero
        return (z, z);
    }
    let z = a * b;
    if z == f64::INFINITY {
        return (f64::MAX, f64::INFINITY);
    }
    if z == f64::NEG_INFINITY {
        return (f64::NEG_INFINITY, f64::MIN);
    }
    if z.abs() < EFT_GUARD {
        return underflow_bracket(z, a.is_sign_positive() == b.is_sign_positive());
    }
    let e = a.mul_add(b, -z); // exact: a*b - z
    bracket(z, e)
}

/// Bracket for a result that is too small for residual recovery. The exact
/// value is non-zero with the given sign, so when the nearest rounding
/// collapsed to zero only one side needs to open up.
fn underflow_bracket(z: f64, positive: bool) -> (f64, f64) {
    if z == 0.0 {
        if positive {
            (0.0, f64::from_bits(1))
        } else {
            (-f64::from_bits(1), -0.0)
        }
    } else {
        (z.next_down(), z.next_up())
    }
}

/// `(a / b)` rounded down and up. The caller guarantees `b != 0`.
pub fn div_dir(a: f64, b: f64) -> (f64, f64) {
    debug_assert!(b != 0.0);
    if a == 0.0 {
        let z = a / b;
        return (z, z);
    }
    let z = a / b;
    if z == f64::INFINITY {
        return (f64::MAX, f64::INFINITY);
    }
    if z == f64::NEG_INFINITY {
        return (f64::NEG_INFINITY, f64::MIN);
    }
    if z.abs() < EFT_GUARD || a.abs() < EFT_GUARD {
        // the division residual scales with the numerator, so a tiny
        // numerator can underflow it even when the quotient is ordinary
        if z == 0.0 {
            return underflow_bracket(z, a.is_sign_positive() == b.is_sign_positive());
        }
        return (z.next_down(), z.next_up());
    }
    // e = z*b - a exactly; the sign of (a/b - z) is sign(-e/b).
    let e = z.mul_add(b, -a);
    if e == 0.0 {
        return (z, z);
    }
    let quotient_above = (e < 0.0) == (b > 0.0);
    if quotient_above {
        (z, z.next_up())
    } else {
        (z.next_down(), z)
    }
}

/// Exact residual of `s = fl(a + b)` (Knuth two-sum, valid for finite `s`).
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let a1 = s - b;
    let b1 = s - a1;
    (a - a1) + (b - b1)
}

/// Turn a nearest-rounded value and its exact residual into a sharp bracket.
fn bracket(z: f64, e: f64) -> (f64, f64) {
    if e > 0.0 {
        (z, z.next_up())
    } else if e < 0.0 {
        (z.next_down(), z)
    } else {
        (z, z)
    }
}

/// Split a finite non-zero double into `(mantissa, exponent)` with
/// `value = mantissa * 2^exponent` exactly.
pub fn decompose(x: f64) -> (i64, i32) {
    debug_assert!(x.is_finite() && x != 0.0);
    let bits = x.to_bits();
    let exp_field = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (mag, exp) = if exp_field == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_field - 1075)
    };
    let mant = if x.is_sign_negative() {
        -(mag as i64)
    } else {
        mag as i64
    };
    (mant, exp)
}

/// `base^k` rounded in the requested direction (`down = true` toward -inf).
///
/// Computed as a left-associated chain of directed multiplications on the
/// magnitude. The chain mirrors how a power is evaluated in plain floating
/// point, so a round-to-nearest power chain always lands inside the
/// `[pow_dir(.., true), pow_dir(.., false)]` bracket; an exactly rounded
/// power would be tighter for k >= 3 but could exclude such chains.
/// For k <= 2 the chain is a single product and therefore sharp.
pub fn pow_dir(base: f64, k: u32, down: bool) -> f64 {
    debug_assert!(base.is_finite());
    if k == 0 {
        return 1.0;
    }
    if k == 1 || base == 0.0 {
        return if k.is_multiple_of(2) {
            base.abs()
        } else {
            base
        };
    }
    let negative = base < 0.0 && k % 2 == 1;
    // rounding a negative value toward -inf rounds its magnitude up
    let mag_down = if negative { !down } else { down };
    let m = base.abs();
    let mut acc = m;
    for _ in 1..k {
        let (d, u) = mul_dir(acc, m);
        acc = if mag_down { d } else { u };
        if acc == f64::INFINITY || acc == 0.0 {
            break; // saturated; further factors cannot move it back
        }
    }
    if negative {
        -acc
    } else {
        acc
    }
}
