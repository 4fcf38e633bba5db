// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Rigorous enclosures for orbits of 1-D recursive maps.
//!
//! The crate has three layers:
//!
//! - [`interval`]: outward-rounded interval arithmetic on binary64
//!   endpoints. Results always enclose the exact real-arithmetic image of
//!   the operands, with correctly rounded (sharp) endpoints.
//! - [`expr`]: a small expression language over the variables `x` and `r`.
//!   Parsing preserves the written sequence of operations, so algebraically
//!   equivalent forms of the same map remain distinct interval extensions.
//! - [`orbit`]: iterates pseudo-orbits in plain floating point or in
//!   interval arithmetic, intersects several extensions per step to tighten
//!   the enclosure, and detects period-p fixed point candidates by interval
//!   intersection.
//!
//! Everything is a pure function over immutable values; records and
//! intervals can be shared freely across threads.
//!
//! ```
//! use orbint::{ExtensionExpr, RunConfig, orbit};
//!
//! let cfg = RunConfig::new("3.3", "0.6", vec![
//!     "r*x*(1-x)".to_string(),
//!     "r*(x*(1-x))".to_string(),
//! ]);
//! let report = orbit::run_case(&cfg).unwrap();
//! let detection = report.intersected.detection.unwrap();
//! assert_eq!(detection.period, 2);
//! assert_eq!(detection.detected_at, 20);
//! ```

mod decimal;
pub mod error;
pub mod expr;
pub mod interval;
pub mod orbit;
pub mod report;
mod round;

pub use error::{IntervalError, OrbitError, ParseError};
pub use expr::{Bindings, ExtensionExpr};
pub use interval::{EnclosureMode, Interval};
pub use orbit::{
    CarryMode, CaseReport, FixedPointReport, FloatCompareRecord, OrbitRecord, RunConfig, RunMode,
};
pub use report::Precision;
