use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dto::CandidateListDto;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdSource {
    Explicit,
    Separation,
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdDto {
    pub value: String,
    pub source: ThresholdSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumReport {
    pub format: u32,
    pub command: String,
    /// Coefficients of the polynomial actually scanned (`A - B` for `intersect`).
    pub polynomial: Vec<String>,
    pub polynomial_text: String,
    pub precision: u32,
    pub threshold: ThresholdDto,
    pub warnings: Vec<String>,
    pub result: CandidateListDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalCount {
    pub lo: String,
    pub hi: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmReport {
    pub format: u32,
    pub command: String,
    pub chain: Vec<Vec<String>>,
    pub chain_text: Vec<String>,
    pub counts: Vec<IntervalCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub format: u32,
    pub command: String,
    pub x: String,
    pub precision: u32,
    pub lipschitz_constant: String,
    pub cauchy_bound: String,
    pub eval_tolerance: String,
    pub perturbation_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub format: u32,
    pub command: String,
    pub stages: Vec<u64>,
    pub s: String,
    pub length: usize,
    pub y_bits_per_stage: Vec<u64>,
    pub bits: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Enum(EnumReport),
    Sturm(SturmReport),
    Bounds(BoundsReport),
    Spectrum(SpectrumReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Enum(r) => {
                let res = &r.result;
                writeln!(out, "polynomial: {}", r.polynomial_text).unwrap();
                writeln!(out, "degree: {}", res.degree).unwrap();
                writeln!(out, "precision r: {}", r.precision).unwrap();
                let source = match r.threshold.source {
                    ThresholdSource::Explicit => "given",
                    ThresholdSource::Separation => "from root separation",
                    ThresholdSource::Default => "default 2^-dr",
                };
                writeln!(out, "threshold: {} ({source})", r.threshold.value).unwrap();
                if let Some(g) = &res.grid {
                    writeln!(out, "cauchy bound: {}", g.cauchy_bound).unwrap();
                    writeln!(out, "grid: [-{0}, {0}], spacing {1}, r' = {2}", g.grid_bound.value, res.interval_width.value, g.refined_precision)
                        .unwrap();
                }
                writeln!(out, "candidates: {} (bound {})", res.cells_fired, res.length_bound).unwrap();
                for c in &res.candidates {
                    writeln!(out, "  {}", c.value).unwrap();
                }
                for w in &r.warnings {
                    writeln!(out, "warning: {w}").unwrap();
                }
            }
            Report::Sturm(r) => {
                writeln!(out, "chain:").unwrap();
                for (i, p) in r.chain_text.iter().enumerate() {
                    writeln!(out, "  P{i} = {p}").unwrap();
                }
                for c in &r.counts {
                    writeln!(out, "roots in ({}, {}]: {}", c.lo, c.hi, c.count).unwrap();
                }
            }
            Report::Bounds(r) => {
                writeln!(out, "x: {}", r.x).unwrap();
                writeln!(out, "precision r: {}", r.precision).unwrap();
                writeln!(out, "lipschitz constant on [0, 1]: {}", r.lipschitz_constant).unwrap();
                writeln!(out, "cauchy bound: {}", r.cauchy_bound).unwrap();
                writeln!(out, "evaluation tolerance: {}", r.eval_tolerance).unwrap();
                writeln!(out, "perturbation bound: {}", r.perturbation_bound).unwrap();
            }
            Report::Spectrum(r) => {
                writeln!(out, "{}", r.bits).unwrap();
            }
        }
        out
    }
}
