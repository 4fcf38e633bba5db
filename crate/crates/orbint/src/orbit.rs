// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Orbit iteration: float pseudo-orbits, interval pseudo-orbits under one or
//! several algebraic forms, per-step intersection, and period detection.
//!
//! An intersected run carries a single enclosure forward: at every step all
//! extensions are evaluated from the intersected interval of the previous
//! step, and their results are intersected again. Since each extension's
//! result encloses the true orbit point, the intersection can never be empty
//! for extensions of the same map; an empty intersection is reported as a
//! fatal soundness fault rather than a recoverable condition.

use crate::error::OrbitError;
use crate::expr::{Bindings, ExtensionExpr};
use crate::interval::{EnclosureMode, Interval};

/// What kind of run the configuration describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    Single,
    Intersect,
    FloatCompare,
}

/// How an intersected run propagates state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarryMode {
    /// All extensions start each step from the shared intersected interval.
    Shared,
    /// Each extension keeps its own orbit; intersection is for reporting only.
    Independent,
}

/// Everything needed to run one experiment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub r: String,
    pub x0: String,
    pub extensions: Vec<String>,
    pub max_iterations: usize,
    pub mode: RunMode,
    pub x0_mode: EnclosureMode,
    pub r_mode: EnclosureMode,
    pub period_candidates: Vec<u32>,
    pub persistence: usize,
    pub carry: CarryMode,
    pub divergence_threshold: f64,
}

impl RunConfig {
    pub fn new(r: &str, x0: &str, extensions: Vec<String>) -> Self {
        let mode = if extensions.len() >= 2 {
            RunMode::Intersect
        } else {
            RunMode::Single
        };
        RunConfig {
            r: r.to_owned(),
            x0: x0.to_owned(),
            extensions,
            max_iterations: 100,
            mode,
            x0_mode: EnclosureMode::Outward,
            r_mode: EnclosureMode::Thin,
            period_candidates: vec![1, 2, 4, 8, 16],
            persistence: 1,
            carry: CarryMode::Shared,
            divergence_threshold: 0.1,
        }
    }

    pub fn validate(&self) -> Result<(), OrbitError> {
        if self.extensions.is_empty() {
            return Err(OrbitError::Config(
                "at least one extension expression is required".into(),
            ));
        }
        if self.mode == RunMode::FloatCompare && self.extensions.len() < 2 {
            return Err(OrbitError::Config(
                "float comparison needs at least two extensions".into(),
            ));
        }
        if self.persistence == 0 {
            return Err(OrbitError::Config("persistence must be at least 1".into()));
        }
        if self.period_candidates.is_empty() {
            return Err(OrbitError::Config(
                "at least one period candidate is required".into(),
            ));
        }
        if self.period_candidates.contains(&0) {
            return Err(OrbitError::Config(
                "period candidates must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn parsed_extensions(&self) -> Result<Vec<ExtensionExpr>, OrbitError> {
        self.extensions
            .iter()
            .map(|s| ExtensionExpr::parse(s).map_err(OrbitError::from))
            .collect()
    }

    /// Initial enclosure of `x0` and the parameter interval for `r`.
    pub fn enclosures(&self) -> Result<(Interval, Interval), OrbitError> {
        let x0 = Interval::from_decimal(&self.x0, self.x0_mode)?;
        let r = Interval::from_decimal(&self.r, self.r_mode)?;
        Ok((x0, r))
    }

    /// `x0` and `r` as plain nearest doubles (float-compare mode).
    pub fn float_values(&self) -> Result<(f64, f64), OrbitError> {
        let x0 = Interval::from_decimal(&self.x0, EnclosureMode::Thin)?;
        let r = Interval::from_decimal(&self.r, EnclosureMode::Thin)?;
        Ok((x0.lo(), r.lo()))
    }
}

/// One iteration of an interval orbit.
#[derive(Debug, Clone)]
pub struct OrbitEntry {
    /// The carried enclosure at this step.
    pub enclosure: Interval,
    /// Upward-rounded width of the enclosure.
    pub width: f64,
    /// Raw per-extension results before intersection; empty at entry 0.
    pub raw: Vec<Interval>,
}

/// A full interval orbit, entry `n` holding the enclosure after `n`
/// applications of the map.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub entries: Vec<OrbitEntry>,
    /// Rendered source of each extension, in evaluation order.
    pub extension_sources: Vec<String>,
    pub carry: CarryMode,
}

impl OrbitRecord {
    pub fn widths(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.width).collect()
    }
}

/// Outcome of a period scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointReport {
    /// Candidate period `p` (smallest candidate that fired).
    pub period: u32,
    /// First iteration of the persistence streak.
    pub detected_at: usize,
    /// Carried enclosure at `detected_at`.
    pub interval: Interval,
    /// Width of that enclosure.
    pub width: f64,
    /// Whether the full persistence streak was observed inside the budget.
    pub converged: bool,
}

/// Iterate one extension on its own.
pub fn iterate_single(e: &ExtensionExpr, cfg: &RunConfig) -> Result<OrbitRecord, OrbitError> {
    cfg.validate()?;
    let (x0, r) = cfg.enclosures()?;
    let mut entries = Vec::with_capacity(cfg.max_iterations + 1);
    entries.push(OrbitEntry {
        enclosure: x0,
        width: x0.width(),
        raw: Vec::new(),
    });
    let mut x = x0;
    for _ in 1..=cfg.max_iterations {
        let next = e.eval_interval(&Bindings { x, r })?;
        entries.push(OrbitEntry {
            enclosure: next,
            width: next.width(),
            raw: vec![next],
        });
        x = next;
    }
    Ok(OrbitRecord {
        entries,
        extension_sources: vec![e.to_string()],
        carry: CarryMode::Shared,
    })
}

/// Iterate several extensions, intersecting at every step.
pub fn iterate_intersected(
    es: &[ExtensionExpr],
    cfg: &RunConfig,
) -> Result<OrbitRecord, OrbitError> {
    cfg.validate()?;
    if es.is_empty() {
        return Err(OrbitError::Config(
            "at least one extension expression is required".into(),
        ));
    }
    let (x0, r) = cfg.enclosures()?;
    let mut entries = Vec::with_capacity(cfg.max_iterations + 1);
    entries.push(OrbitEntry {
        enclosure: x0,
        width: x0.width(),
        raw: Vec::new(),
    });
    // Shared carry: one interval feeds every extension.
    // Independent carry: each extension evolves alone, the intersection is
    // only assembled for the record.
    let mut shared = x0;
    let mut per_ext = vec![x0; es.len()];
    for n in 1..=cfg.max_iterations {
        let raw: Vec<Interval> = match cfg.carry {
            CarryMode::Shared => es
                .iter()
                .map(|e| e.eval_interval(&Bindings { x: shared, r }))
                .collect::<Result<_, _>>()?,
            CarryMode::Independent => es
                .iter()
                .zip(&per_ext)
                .map(|(e, &x)| e.eval_interval(&Bindings { x, r }))
                .collect::<Result<_, _>>()?,
        };
        let mut folded = raw[0];
        for cand in &raw[1..] {
            folded = folded
                .intersect(cand)
                .ok_or(OrbitError::EmptyIntersection { iteration: n })?;
        }
        entries.push(OrbitEntry {
            enclosure: folded,
            width: folded.width(),
            raw: raw.clone(),
        });
        shared = folded;
        per_ext = raw;
    }
    Ok(OrbitRecord {
        entries,
        extension_sources: es.iter().map(|e| e.to_string()).collect(),
        carry: cfg.carry,
    })
}

/// One row of a float comparison run. Indices are 1-based: row 1 holds the
/// initial condition, row `n` the value after `n - 1` map applications.
#[derive(Debug, Clone)]
pub struct FloatRow {
    pub index: usize,
    pub values: Vec<f64>,
    /// Pairwise absolute differences, pairs in lexicographic order.
    pub diffs: Vec<f64>,
    pub max_diff: f64,
}

#[derive(Debug, Clone)]
pub struct FloatCompareRecord {
    pub rows: Vec<FloatRow>,
    pub extension_sources: Vec<String>,
    pub threshold: f64,
    /// First 1-based row whose largest pairwise difference exceeds the
    /// threshold.
    pub first_divergence: Option<usize>,
}

/// Iterate every extension independently in plain binary64 and report how
/// the pseudo-orbits separate.
pub fn iterate_float_compare(
    es: &[ExtensionExpr],
    cfg: &RunConfig,
) -> Result<FloatCompareRecord, OrbitError> {
    cfg.validate()?;
    if es.len() < 2 {
        return Err(OrbitError::Config(
            "float comparison needs at least two extensions".into(),
        ));
    }
    let (x0, r) = cfg.float_values()?;
    let mut values = vec![x0; es.len()];
    let mut rows = Vec::with_capacity(cfg.max_iterations);
    let mut first_divergence = None;
    for index in 1..=cfg.max_iterations.max(1) {
        if index > 1 {
            for (v, e) in values.iter_mut().zip(es) {
                *v = e.eval_float(&Bindings { x: *v, r });
            }
        }
        let mut diffs = Vec::new();
        let mut max_diff: f64 = 0.0;
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                let d = (values[i] - values[j]).abs();
                diffs.push(d);
                max_diff = max_diff.max(d);
            }
        }
        if first_divergence.is_none() && max_diff > cfg.divergence_threshold {
            first_divergence = Some(index);
        }
        rows.push(FloatRow {
            index,
            values: values.clone(),
            diffs,
            max_diff,
        });
    }
    Ok(FloatCompareRecord {
        rows,
        extension_sources: es.iter().map(|e| e.to_string()).collect(),
        threshold: cfg.divergence_threshold,
        first_divergence,
    })
}

/// Scan an orbit for a period-p fixed point candidate.
///
/// Iterations are scanned upward; at each iteration the candidate periods are
/// tried in ascending order so the minimal period wins (a period-q cycle also
/// intersects at every multiple of q). A candidate fires once the
/// intersection test holds for `persistence` consecutive iterations; the
/// report points at the first iteration of that streak.
pub fn detect_period(orbit: &OrbitRecord, cfg: &RunConfig) -> Option<FixedPointReport> {
    let mut candidates: Vec<u32> = cfg.period_candidates.clone();
    candidates.sort_unstable();
    candidates.dedup();
    let mut streaks = vec![0usize; candidates.len()];
    for n in 1..orbit.entries.len() {
        for (ci, &p) in candidates.iter().enumerate() {
            let p_us = p as usize;
            if p_us > n {
                continue;
            }
            let here = &orbit.entries[n].enclosure;
            let back = &orbit.entries[n - p_us].enclosure;
            if here.intersect(back).is_some() {
                streaks[ci] += 1;
                if streaks[ci] >= cfg.persistence {
                    let at = n + 1 - cfg.persistence;
                    let e = &orbit.entries[at];
                    return Some(FixedPointReport {
                        period: p,
                        detected_at: at,
                        interval: e.enclosure,
                        width: e.width,
                        converged: true,
                    });
                }
            } else {
                streaks[ci] = 0;
            }
        }
    }
    None
}

/// Result of one method (single extension or intersection) inside a case.
#[derive(Debug, Clone)]
pub struct MethodOutcome {
    pub detection: Option<FixedPointReport>,
    /// Width at the last computed iteration (status information when no
    /// detection happened).
    pub final_width: f64,
}

/// One row of the per-iteration width comparison.
#[derive(Debug, Clone, Copy)]
pub struct WidthRow {
    pub n: usize,
    pub single: f64,
    pub intersected: f64,
    /// `single - intersected`; non-negative for shared-carry runs.
    pub difference: f64,
}

/// Side-by-side comparison of the single-extension method and the
/// intersection method on one configuration.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub config: RunConfig,
    pub single: MethodOutcome,
    pub intersected: MethodOutcome,
    pub width_rows: Vec<WidthRow>,
}

/// Run both methods of a case and assemble the comparison.
pub fn run_case(cfg: &RunConfig) -> Result<CaseReport, OrbitError> {
    cfg.validate()?;
    let es = cfg.parsed_extensions()?;
    if es.len() < 2 {
        return Err(OrbitError::Config(
            "a case comparison needs at least two extensions".into(),
        ));
    }
    let single_orbit = iterate_single(&es[0], cfg)?;
    let inter_orbit = iterate_intersected(&es, cfg)?;
    let single_det = detect_period(&single_orbit, cfg);
    let inter_det = detect_period(&inter_orbit, cfg);
    let width_rows = single_orbit
        .entries
        .iter()
        .zip(&inter_orbit.entries)
        .enumerate()
        .map(|(n, (s, i))| WidthRow {
            n,
            single: s.width,
            intersected: i.width,
            difference: s.width - i.width,
        })
        .collect();
    Ok(CaseReport {
        config: cfg.clone(),
        single: MethodOutcome {
            detection: single_det,
            final_width: single_orbit.entries.last().map_or(0.0, |e| e.width),
        },
        intersected: MethodOutcome {
            detection: inter_det,
            final_width: inter_orbit.entries.last().map_or(0.0, |e| e.width),
        },
        width_rows,
    })
}

pub const F1_SOURCE: &str = "r*x*(1-x)";
pub const F2_SOURCE: &str = "r*(x*(1-x))";
