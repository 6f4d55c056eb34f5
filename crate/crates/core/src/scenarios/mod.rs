//! Seeded, exact verification of the correspondence tables, curve theorems
//! and corollaries.
//!
//! A scenario is a list of claims plus one evaluation routine that, given a
//! triangle, records an outcome for every claim. The runner draws triangles
//! from consecutive seeds, skips degenerate configurations, and aggregates
//! outcomes into a [`Report`].

mod registry;
mod trial;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::centers::{random_triangle, CenterError, TriangleConstraints};
use crate::curves::Curve;
use crate::kernel::{HomPoint, RefTriangle};

use trial::Trial;
pub use trial::{Abort, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Generator(#[from] CenterError),
    #[error("gave up after {skipped} skipped triangles with {done} of {wanted} trials done")]
    TooManySkips { skipped: usize, done: usize, wanted: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    PointEquality,
    Membership,
    Collinearity,
    ConicCenter,
    Rectangularity,
    DirectrixIncidence,
    EccentricityValue,
    CurveEquality,
    Factorization,
    HessianMembership,
}

/// Must-pass claims follow from classical identities, so a failure is a bug.
/// Verdict-only claims are the novel assertions under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    MustPass,
    VerdictOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Error,
    NotApplicable,
}

#[derive(Clone, Debug)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub expectation: Expectation,
    pub note: Option<&'static str>,
}

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    pub claims: Vec<ClaimSpec>,
    pub constraints: TriangleConstraints,
    eval: fn(&mut Trial) -> Result<(), Abort>,
}

impl Scenario {
    /// Outcomes of every claim on one triangle, in claim order, or the
    /// reason the triangle was skipped.
    pub fn evaluate(&self, t: &RefTriangle) -> TrialResult {
        let mut trial = Trial::new(t);
        let abort = (self.eval)(&mut trial).err();
        if let Some(Abort::Skip(reason)) = abort {
            return TrialResult::Skipped(reason);
        }
        let fallback = match abort {
            Some(Abort::Error(msg)) => Outcome::Error(msg),
            _ => Outcome::Error("claim was not evaluated".into()),
        };
        let outcomes =
            self.claims.iter().map(|c| trial.take(c.id).unwrap_or_else(|| (fallback.clone(), Vec::new()))).collect();
        TrialResult::Done { outcomes, max_bits: trial.max_bits() }
    }

    /// Curves and labeled points of the scenario on `t`.
    pub fn figure(&self, t: &RefTriangle) -> Result<Figure, Abort> {
        let mut trial = Trial::new(t);
        (self.eval)(&mut trial)?;
        Ok(trial.into_figure())
    }
}

pub enum TrialResult {
    Skipped(String),
    Done {
        /// Per claim: outcome and tally labels.
        outcomes: Vec<(Outcome, Vec<String>)>,
        max_bits: u64,
    },
}

#[derive(Clone, Debug, Default)]
pub struct Figure {
    pub curves: Vec<(String, Curve)>,
    pub points: Vec<(String, HomPoint)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioInfo {
    pub id: String,
    pub description: String,
    pub claims: usize,
}

pub fn registry() -> &'static [Scenario] {
    &registry::REGISTRY
}

pub fn list_scenarios() -> Vec<ScenarioInfo> {
    registry()
        .iter()
        .map(|s| ScenarioInfo { id: s.id.into(), description: s.description.into(), claims: s.claims.len() })
        .collect()
}

pub fn find_scenario(id: &str) -> Result<&'static Scenario, ScenarioError> {
    registry().iter().find(|s| s.id == id).ok_or_else(|| ScenarioError::UnknownScenario(id.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub triangle: [String; 3],
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub kind: ClaimKind,
    pub expectation: Expectation,
    pub status: Status,
    pub evaluated: usize,
    pub failed_trials: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tally: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub description: String,
    pub trials: usize,
    pub seed: u64,
    pub skipped: usize,
    pub claims: Vec<ClaimReport>,
    pub elapsed_ms: u64,
    /// Largest coefficient size seen, in bits.
    #[serde(skip)]
    pub max_bits: u64,
}

impl Report {
    pub fn must_pass_failures(&self) -> usize {
        self.count(|c| c.expectation == Expectation::MustPass && c.status == Status::Fail)
    }

    pub fn verdict_failures(&self) -> usize {
        self.count(|c| c.expectation == Expectation::VerdictOnly && c.status == Status::Fail)
    }

    pub fn errors(&self) -> usize {
        self.count(|c| c.status == Status::Error)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }

    fn count(&self, f: impl Fn(&ClaimReport) -> bool) -> usize {
        self.claims.iter().filter(|c| f(c)).count()
    }
}

/// Certificates kept per claim; further failures are only counted.
const MAX_CERTIFICATES: usize = 10;

pub fn run_scenario(id: &str, trials: usize, seed: u64) -> Result<Report, ScenarioError> {
    run_scenario_with(id, trials, seed, None)
}

/// Like [`run_scenario`], with the triangle constraints optionally replaced.
pub fn run_scenario_with(
    id: &str,
    trials: usize,
    seed: u64,
    constraints: Option<TriangleConstraints>,
) -> Result<Report, ScenarioError> {
    let scenario = find_scenario(id)?;
    if trials == 0 {
        return Err(ScenarioError::NoTrials);
    }
    let constraints = constraints.unwrap_or(scenario.constraints);
    let start = Instant::now();
    let max_skips = 10 * trials + 100;

    let mut claims: Vec<ClaimReport> = scenario
        .claims
        .iter()
        .map(|c| ClaimReport {
            id: c.id.into(),
            kind: c.kind,
            expectation: c.expectation,
            status: Status::NotApplicable,
            evaluated: 0,
            failed_trials: 0,
            failures: Vec::new(),
            note: c.note.map(Into::into),
            tally: BTreeMap::new(),
        })
        .collect();
    let mut errored = vec![false; claims.len()];
    let (mut done, mut skipped, mut max_bits) = (0, 0, 0);
    let mut next_seed = seed;

    // Evaluate candidate seeds in parallel batches, then consume them in
    // seed order so the result does not depend on scheduling.
    while done < trials {
        let batch = (trials - done) as u64;
        let results: Vec<(RefTriangle, TrialResult)> = (next_seed..next_seed + batch)
            .into_par_iter()
            .map(|s| {
                let t = random_triangle(s, &constraints)?;
                let r = scenario.evaluate(&t);
                Ok((t, r))
            })
            .collect::<Result<_, CenterError>>()?;
        next_seed += batch;
        for (t, r) in results {
            match r {
                TrialResult::Skipped(_) => skipped += 1,
                TrialResult::Done { outcomes, max_bits: b } => {
                    done += 1;
                    max_bits = max_bits.max(b);
                    for (i, (outcome, tags)) in outcomes.into_iter().enumerate() {
                        let c = &mut claims[i];
                        for tag in tags {
                            *c.tally.entry(tag).or_default() += 1;
                        }
                        let cert = |lhs: String, rhs: String, detail: String| Failure {
                            triangle: triangle_strings(&t),
                            lhs,
                            rhs,
                            detail,
                        };
                        match outcome {
                            Outcome::NotApplicable => continue,
                            Outcome::Pass => {}
                            Outcome::Fail { lhs, rhs, detail } => {
                                c.failed_trials += 1;
                                if c.failures.len() < MAX_CERTIFICATES {
                                    c.failures.push(cert(lhs, rhs, detail));
                                }
                            }
                            Outcome::Error(msg) => {
                                errored[i] = true;
                                c.failed_trials += 1;
                                if c.failures.len() < MAX_CERTIFICATES {
                                    c.failures.push(cert(String::new(), String::new(), msg));
                                }
                            }
                        }
                        c.evaluated += 1;
                    }
                }
            }
            if done == trials {
                break;
            }
        }
        if skipped > max_skips {
            return Err(ScenarioError::TooManySkips { skipped, done, wanted: trials });
        }
    }

    for (c, err) in claims.iter_mut().zip(errored) {
        c.status = if err {
            Status::Error
        } else if c.failed_trials > 0 {
            Status::Fail
        } else if c.evaluated > 0 {
            Status::Pass
        } else {
            Status::NotApplicable
        };
    }

    Ok(Report {
        scenario: scenario.id.into(),
        description: scenario.description.into(),
        trials,
        seed,
        skipped,
        claims,
        elapsed_ms: start.elapsed().as_millis() as u64,
        max_bits,
    })
}

fn triangle_strings(t: &RefTriangle) -> [String; 3] {
    match t.sides() {
        Some(s) => s.clone().map(|x| x.to_string()),
        None => t.sq_sides().clone().map(|x| format!("sqrt({x})")),
    }
}
