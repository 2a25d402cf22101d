//! Machine-readable JSON-lines report records.
//!
//! Reports are deterministic for a fixed config and seed: records are
//! emitted in instance order, maps are sorted, rationals are exact
//! strings, and wall-clock timing goes to stderr instead of the report.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use cyclespec::certify::Certificate;
use cyclespec::spectrum::HsClassification;

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Instance(Box<InstanceRecord>),
    Error(ErrorRecord),
    Violation(ViolationRecord),
    Witness(WitnessRecord),
    Histogram(HistogramRecord),
    Footer(Footer),
}

/// Per-instance analysis results; `spectrum` is exact or a verified
/// lower-bound subset depending on `spectrum_mode`.
#[derive(Debug, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub claw_free: bool,
    /// `null` when the budgeted search above the exact range gave up.
    pub hamiltonian: Option<bool>,
    pub spectrum_mode: SpectrumMode,
    pub spectrum: Vec<usize>,
    pub s: usize,
    pub bound_t1: Option<usize>,
    /// Exact rational as "p/q".
    pub bound_mw: Option<String>,
    /// Claw-free hamiltonian with Δ ≥ 24 — the theorem's hypothesis.
    pub t1_applicable: bool,
    /// `null` when undecidable from a partial spectrum.
    pub t1_satisfied: Option<bool>,
    pub mw_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_summary: Option<CertificateSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    Exact,
    Partial,
}

#[derive(Debug, Serialize)]
pub struct CertificateSummary {
    pub target: usize,
    pub certified_count: usize,
    pub reached: bool,
}

#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

/// A failed bound or trichotomy check; embeds the graph6 line so the
/// violation can be re-checked independently.
#[derive(Debug, Serialize)]
pub struct ViolationRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub s: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct WitnessRecord {
    pub lemma: u8,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<WitnessCycle>>,
}

#[derive(Debug, Serialize)]
pub struct WitnessCycle {
    pub length: usize,
    pub cycle: Vec<usize>,
}

/// Distribution of the slack 2s − 2·bound (in half-units) between the
/// observed spectrum size and the general hamiltonian lower bound.
#[derive(Debug, Serialize)]
pub struct HistogramRecord {
    pub what: String,
    pub buckets: BTreeMap<i64, u64>,
}

#[derive(Debug, Serialize)]
pub struct Footer {
    pub mode: String,
    pub seed: u64,
    pub instances: usize,
    pub violations: usize,
    /// How many instances actually satisfied the Δ ≥ 24 hypothesis;
    /// recorded rather than inferred (vacuous below n = 25).
    pub t1_applicable_instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates_reached: Option<usize>,
}

pub fn hs_summary(hs: &HsClassification) -> String {
    match hs {
        HsClassification::Pancyclic => "pancyclic".into(),
        HsClassification::Bipartite => "bipartite".into(),
        HsClassification::MissingOnlyNMinus1 => "missing_only_n_minus_1".into(),
        HsClassification::NotApplicable { max_degree_sum } => {
            format!("not_applicable(max_sum={max_degree_sum})")
        }
        HsClassification::Violation { pair, missing } => {
            format!("violation(pair=({},{}),missing={})", pair.0, pair.1, missing)
        }
    }
}

/// Serializes records one JSON object per line.
pub fn write_records<W: Write>(mut w: W, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(())
}
