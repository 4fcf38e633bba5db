// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Text and CSV rendering of orbit records and case reports.
//!
//! CSV uses a header row, comma separators, '.' decimal points and LF line
//! endings. Output is deterministic: the same data always renders to the
//! same bytes. Interval endpoints are printed with 17 significant digits so
//! they round-trip exactly; widths default to 6 significant digits.

use std::fmt::Write as _;

use crate::orbit::{CaseReport, FixedPointReport, FloatCompareRecord, OrbitRecord};

/// Width / summary display precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// 6 significant digits, the precision the reference tables quote.
    Short,
    /// 17 significant digits (round-trip exact).
    Full,
}

impl Precision {
    fn width(self, v: f64) -> String {
        match self {
            Precision::Short => format!("{v:.5e}"),
            Precision::Full => format!("{v:.16e}"),
        }
    }
}

/// 17-significant-digit endpoint rendering.
fn endpoint(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn orbit_csv(orbit: &OrbitRecord, precision: Precision) -> String {
    let mut out = String::new();
    out.push_str("n,lo,hi,width");
    for i in 1..=orbit.extension_sources.len() {
        let _ = write!(out, ",ext{i}_lo,ext{i}_hi");
    }
    out.push('\n');
    for (n, e) in orbit.entries.iter().enumerate() {
        let _ = write!(
            out,
            "{n},{},{},{}",
            endpoint(e.enclosure.lo()),
            endpoint(e.enclosure.hi()),
            precision.width(e.width)
        );
        if e.raw.is_empty() {
            for _ in &orbit.extension_sources {
                out.push_str(",,");
            }
        } else {
            for r in &e.raw {
                let _ = write!(out, ",{},{}", endpoint(r.lo()), endpoint(r.hi()));
            }
        }
        out.push('\n');
    }
    out
}

pub fn orbit_table(orbit: &OrbitRecord, precision: Precision) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>5}  {:>24}  {:>24}  {:>12}",
        "n", "lo", "hi", "width"
    );
    for (n, e) in orbit.entries.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>5}  {:>24}  {:>24}  {:>12}",
            n,
            endpoint(e.enclosure.lo()),
            endpoint(e.enclosure.hi()),
            precision.width(e.width)
        );
    }
    out
}

pub fn float_compare_csv(rec: &FloatCompareRecord, from: usize, to: usize) -> String {
    let mut out = String::new();
    out.push('n');
    for i in 1..=rec.extension_sources.len() {
        let _ = write!(out, ",x{i}");
    }
    let k = rec.extension_sources.len();
    for i in 1..=k {
        for j in i + 1..=k {
            let _ = write!(out, ",d{i}{j}");
        }
    }
    out.push('\n');
    for row in &rec.rows {
        if row.index < from || row.index > to {
            continue;
        }
        let _ = write!(out, "{}", row.index);
        for v in &row.values {
            let _ = write!(out, ",{}", endpoint(*v));
        }
        for d in &row.diffs {
            let _ = write!(out, ",{}", endpoint(*d));
        }
        out.push('\n');
    }
    out
}

/// One-line summary of a detection, worded as a candidate: a non-empty
/// intersection indicates, but does not certify, a periodic point.
pub fn fixed_point_summary(r: &FixedPointReport, precision: Precision) -> String {
    format!(
        "candidate fixed point of period {} at iteration {}, width {}, enclosure {}",
        r.period,
        r.detected_at,
        precision.width(r.width),
        r.interval
    )
}

/// Key-value block for machine consumption.
pub fn fixed_point_block(r: &FixedPointReport) -> String {
    format!(
        "{{\"period\": {}, \"detected_at\": {}, \"interval\": [{}, {}], \"width\": {}, \"converged\": {}}}",
        r.period,
        r.detected_at,
        endpoint(r.interval.lo()),
        endpoint(r.interval.hi()),
        endpoint(r.width),
        r.converged
    )
}

/// The side-by-side summary table of a case run.
pub fn case_summary(report: &CaseReport, precision: Precision) -> String {
    let mut out = String::new();
    let single_src = report
        .config
        .extensions
        .first()
        .cloned()
        .unwrap_or_default();
    let inter_src = report.config.extensions.join(" ^ ");
    let rows = [
        (format!("single[{single_src}]"), &report.single),
        (format!("intersect[{inter_src}]"), &report.intersected),
    ];
    let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(6).max(6);
    let _ = writeln!(
        out,
        "{:<label_w$}  {:>6}  {:>10}  {:>14}",
        "method", "period", "iterations", "width"
    );
    for (label, outcome) in &rows {
        match &outcome.detection {
            Some(d) => {
                let _ = writeln!(
                    out,
                    "{:<label_w$}  {:>6}  {:>10}  {:>14}",
                    label,
                    d.period,
                    d.detected_at,
                    precision.width(d.width)
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<label_w$}  {:>6}  {:>10}  {:>14}",
                    label,
                    "-",
                    "-",
                    precision.width(outcome.final_width)
                );
            }
        }
    }
    if let (Some(s), Some(i)) = (&report.single.detection, &report.intersected.detection) {
        if s.width > 0.0 {
            let reduction = (s.width - i.width) / s.width * 100.0;
            let _ = writeln!(out, "width reduction: {reduction:.2}%");
        }
    }
    out
}

/// Per-iteration width table of a case run.
pub fn case_csv(report: &CaseReport, precision: Precision) -> String {
    let mut out = String::from("n,single_width,intersected_width,difference\n");
    for row in &report.width_rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.n,
            precision.width(row.single),
            precision.width(row.intersected),
            precision.width(row.difference)
        );
    }
    out
}
