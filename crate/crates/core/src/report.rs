//! Verdicts for catalog entries and the serialized identity report.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        }
    }
}

/// Named coordinate vectors that reproduce a trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub residual: f64,
    pub values: Vec<NamedValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub coords: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub suite: String,
    /// The identity being checked, in formula form.
    pub anchor: String,
    pub status: Status,
    pub trials: usize,
    pub checked: usize,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub algebra: String,
    pub dim: usize,
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub suites: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub run: RunInfo,
    pub entries: Vec<EntryReport>,
    pub remarks: Vec<String>,
}

impl IdentityReport {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn entry(&self, id: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table followed by counts and remarks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let r = &self.run;
        let _ = writeln!(
            out,
            "algebra {} (dim {}), seed {}, trials {}, tolerance {:e}, suites {}",
            r.algebra,
            r.dim,
            r.seed,
            r.trials,
            r.tolerance,
            r.suites.join(",")
        );
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(2).max(2);
        let _ = writeln!(
            out,
            "{:<10} {:<width$} {:<8} {:>7} {:>12}  {}",
            "suite", "id", "status", "checked", "max_resid", "counterexample"
        );
        for e in &self.entries {
            let ce = match &e.counterexample {
                Some(c) => c
                    .values
                    .iter()
                    .map(|v| format!("{}={}", v.name, fmt_coords(&v.coords)))
                    .collect::<Vec<_>>()
                    .join(" "),
                None => e.note.clone().map(|n| format!("({n})")).unwrap_or_default(),
            };
            let _ = writeln!(
                out,
                "{:<10} {:<width$} {:<8} {:>7} {:>12.3e}  {}",
                e.suite,
                e.id,
                e.status.label(),
                e.checked,
                e.max_residual,
                ce
            );
        }
        let _ = writeln!(
            out,
            "{} entries: {} PASS, {} FAIL, {} VACUOUS",
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Vacuous)
        );
        for rem in &self.remarks {
            let _ = writeln!(out, "remark: {rem}");
        }
        out
    }
}

fn fmt_coords(c: &[f64]) -> String {
    let parts: Vec<String> = c.iter().map(|x| format!("{x:.4}")).collect();
    format!("[{}]", parts.join(","))
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq)]
pub enum Trial {
    /// The hypothesis could not be instantiated with nonzero data.
    Vacuous,
    Checked {
        /// Raw residual.
        residual: f64,
        /// Magnitude of the inputs; the compared value is `residual / (1 + scale)`.
        scale: f64,
        values: Vec<(String, Vector)>,
    },
}

impl Trial {
    pub fn checked<N: Into<String>>(
        residual: f64,
        scale: f64,
        values: impl IntoIterator<Item = (N, Vector)>,
    ) -> Self {
        Trial::Checked {
            residual: residual.abs(),
            scale: scale.abs(),
            values: values.into_iter().map(|(n, v)| (n.into(), v)).collect(),
        }
    }

    /// A boolean claim: residual 1 when it fails, 0 when it holds.
    pub fn claim<N: Into<String>>(holds: bool, values: impl IntoIterator<Item = (N, Vector)>) -> Self {
        Self::checked(if holds { 0.0 } else { 1.0 }, 0.0, values)
    }

    /// `lhs = rhs`, scaled by the size of both sides.
    pub fn eq<N: Into<String>>(lhs: f64, rhs: f64, values: impl IntoIterator<Item = (N, Vector)>) -> Self {
        Self::checked(lhs - rhs, lhs.abs() + rhs.abs(), values)
    }

    pub fn normalized(&self) -> Option<f64> {
        match self {
            Trial::Vacuous => None,
            Trial::Checked { residual, scale, .. } => Some(residual / (1.0 + scale)),
        }
    }
}

pub type TrialFn<'a> = Box<dyn Fn(&mut ChaCha8Rng, usize) -> Trial + Send + Sync + 'a>;

/// One catalog entry: an identity and the trial generator that tests it.
pub struct Entry<'a> {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Overrides the run's trial count (for exhaustive or one-shot checks).
    pub trials: Option<usize>,
    pub kind: EntryKind<'a>,
}

pub enum EntryKind<'a> {
    Trials(TrialFn<'a>),
    /// Not applicable to this input; reported as VACUOUS with the reason.
    Inapplicable(String),
}

impl<'a> Entry<'a> {
    pub fn new(
        id: &'static str,
        anchor: &'static str,
        f: impl Fn(&mut ChaCha8Rng, usize) -> Trial + Send + Sync + 'a,
    ) -> Self {
        Self {
            id,
            anchor,
            trials: None,
            kind: EntryKind::Trials(Box::new(f)),
        }
    }

    pub fn inapplicable(id: &'static str, anchor: &'static str, reason: impl Into<String>) -> Self {
        Self {
            id,
            anchor,
            trials: None,
            kind: EntryKind::Inapplicable(reason.into()),
        }
    }

    pub fn with_trials(mut self, n: usize) -> Self {
        self.trials = Some(n);
        self
    }
}

/// Seed for trial `t` of entry `id`: FNV-1a of the id mixed with the run seed
/// and the trial index through SplitMix64.
pub fn trial_seed(seed: u64, id: &str, t: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    splitmix(splitmix(seed ^ h) ^ t as u64)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Runs every trial of an entry (in parallel, collected in order) and folds the
/// outcomes into a verdict. The counterexample is the first failing trial.
pub fn run_entry(entry: &Entry<'_>, suite: &str, seed: u64, trials: usize, tol: f64) -> EntryReport {
    let trials = entry.trials.unwrap_or(trials);
    let f = match &entry.kind {
        EntryKind::Inapplicable(reason) => {
            return EntryReport {
                id: entry.id.to_string(),
                suite: suite.to_string(),
                anchor: entry.anchor.to_string(),
                status: Status::Vacuous,
                trials,
                checked: 0,
                max_residual: 0.0,
                counterexample: None,
                note: Some(reason.clone()),
            }
        }
        EntryKind::Trials(f) => f,
    };
    let outcomes: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, entry.id, t));
            f(&mut rng, t)
        })
        .collect();
    let mut checked = 0;
    let mut max_residual = 0.0_f64;
    let mut counterexample = None;
    for (t, o) in outcomes.into_iter().enumerate() {
        let Some(r) = o.normalized() else { continue };
        checked += 1;
        let r = if r.is_nan() { f64::INFINITY } else { r };
        max_residual = max_residual.max(r);
        if r > tol && counterexample.is_none() {
            if let Trial::Checked { values, .. } = o {
                counterexample = Some(Counterexample {
                    trial: t,
                    residual: r,
                    values: values
                        .into_iter()
                        .map(|(name, v)| NamedValue {
                            name,
                            coords: v.iter().copied().collect(),
                        })
                        .collect(),
                });
            }
        }
    }
    let status = if counterexample.is_some() {
        Status::Fail
    } else if checked > 0 {
        Status::Pass
    } else {
        Status::Vacuous
    };
    EntryReport {
        id: entry.id.to_string(),
        suite: suite.to_string(),
        anchor: entry.anchor.to_string(),
        status,
        trials,
        checked,
        max_residual,
        counterexample,
        note: if checked == 0 {
            Some("no trial could instantiate the hypothesis".into())
        } else {
            None
        },
    }
}
