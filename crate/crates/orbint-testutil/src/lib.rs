// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact reference arithmetic used by the test suites: dyadic rationals for
//! checking single interval operations, and a high-precision fixed-point
//! orbit for checking whole enclosure sequences. Nothing here touches the
//! interval implementation being tested.

pub mod dyadic;
pub mod oracle;

pub use dyadic::Dyadic;
pub use oracle::{reference_orbit, OraclePoint, ReferenceOrbit, FRACTION_BITS};
