use std::collections::HashMap;
use std::fmt::Display;

use crate::centers::{eval_center, CenterId};
use crate::curves::{self, Conic, Cubic, Curve, CurveError};
use crate::kernel::{HomPoint, RefTriangle};

use super::Figure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String, detail: String },
    Error(String),
    NotApplicable,
}

/// Why a trial stopped early: a degenerate configuration (retry with the
/// next seed) or a construction error shared by all remaining claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Abort {
    Skip(String),
    Error(String),
}

impl From<CurveError> for Abort {
    fn from(e: CurveError) -> Self {
        Abort::Error(e.to_string())
    }
}

impl From<crate::centers::CenterError> for Abort {
    fn from(e: crate::centers::CenterError) -> Self {
        Abort::Error(e.to_string())
    }
}

impl From<crate::kernel::KernelError> for Abort {
    fn from(e: crate::kernel::KernelError) -> Self {
        Abort::Error(e.to_string())
    }
}

pub type Eval<T> = Result<T, CurveError>;

pub struct Trial<'a> {
    pub t: &'a RefTriangle,
    outcomes: HashMap<&'static str, (Outcome, Vec<String>)>,
    figure: Figure,
    max_bits: u64,
}

impl<'a> Trial<'a> {
    pub fn new(t: &'a RefTriangle) -> Self {
        Self { t, outcomes: HashMap::new(), figure: Figure::default(), max_bits: 0 }
    }

    pub fn x(&self, id: CenterId) -> Result<HomPoint, Abort> {
        let p = eval_center(self.t, id)?;
        Ok(p)
    }

    pub fn check(&mut self, id: &'static str, r: Eval<Outcome>) {
        let o = r.unwrap_or_else(|e| Outcome::Error(e.to_string()));
        self.outcomes.entry(id).or_insert_with(|| (Outcome::NotApplicable, Vec::new())).0 = o;
    }

    pub fn tag(&mut self, id: &'static str, label: impl Into<String>) {
        self.outcomes.entry(id).or_insert_with(|| (Outcome::NotApplicable, Vec::new())).1.push(label.into());
    }

    pub fn take(&mut self, id: &str) -> Option<(Outcome, Vec<String>)> {
        self.outcomes.remove(id)
    }

    pub fn max_bits(&self) -> u64 {
        self.max_bits
    }

    pub fn bits(&mut self, b: u64) {
        self.max_bits = self.max_bits.max(b);
    }

    pub fn point(&mut self, label: &str, p: &HomPoint) {
        self.bits(p.bits());
        self.figure.points.push((label.into(), p.clone()));
    }

    pub fn points(&mut self, labeled: &[(&str, &HomPoint)]) {
        for (l, p) in labeled {
            self.point(l, p);
        }
    }

    pub fn curve(&mut self, label: &str, c: Curve) {
        self.figure.curves.push((label.into(), c));
    }

    pub fn into_figure(self) -> Figure {
        self.figure
    }

    /// Conic through `pts`; degenerate inputs skip the trial.
    pub fn fit_conic(&mut self, label: &str, pts: &[&HomPoint]) -> Result<Conic, Abort> {
        distinct(pts)?;
        let owned: Vec<HomPoint> = pts.iter().map(|p| (*p).clone()).collect();
        let c = curves::conic_through(&owned).map_err(degenerate)?;
        if !owned.iter().all(|p| c.contains(p)) {
            return Err(Abort::Error("fitted conic misses an input point".into()));
        }
        self.bits(c.bits());
        self.curve(label, Curve::Conic(c.clone()));
        Ok(c)
    }

    pub fn fit_cubic(&mut self, label: &str, pts: &[&HomPoint]) -> Result<Cubic, Abort> {
        distinct(pts)?;
        let owned: Vec<HomPoint> = pts.iter().map(|p| (*p).clone()).collect();
        let c = curves::cubic_through(&owned).map_err(degenerate)?;
        if !owned.iter().all(|p| c.contains(p)) {
            return Err(Abort::Error("fitted cubic misses an input point".into()));
        }
        self.bits(c.bits());
        self.curve(label, Curve::Cubic(c.clone()));
        Ok(c)
    }
}

fn degenerate(e: CurveError) -> Abort {
    match e {
        CurveError::DegeneratePointSet { .. } | CurveError::NoCurveThrough { .. } => Abort::Skip(e.to_string()),
        other => other.into(),
    }
}

fn distinct(pts: &[&HomPoint]) -> Result<(), Abort> {
    for (i, p) in pts.iter().enumerate() {
        if pts[..i].contains(p) {
            return Err(Abort::Skip(format!("coincident fit points: {p}")));
        }
    }
    Ok(())
}

pub fn same<T: PartialEq + Display>(lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string(), detail: "not equal".into() }
    }
}

pub fn holds(ok: bool, lhs: impl Display, rhs: impl Display, detail: &str) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string(), detail: detail.into() }
    }
}

pub fn on_conic(p: &HomPoint, c: &Conic) -> Outcome {
    holds(c.contains(p), p, c, &format!("form value {}", c.eval(p)))
}

pub fn on_cubic(p: &HomPoint, k: &Cubic) -> Outcome {
    holds(k.contains(p), p, k, &format!("form value {}", k.eval(p)))
}

/// Pass iff every labeled point passes `f`; the first failure is reported.
pub fn all_of(items: Vec<(String, Eval<Outcome>)>) -> Eval<Outcome> {
    for (label, o) in items {
        match o? {
            Outcome::Pass | Outcome::NotApplicable => {}
            Outcome::Fail { lhs, rhs, detail } => {
                return Ok(Outcome::Fail { lhs, rhs, detail: format!("{label}: {detail}") })
            }
            Outcome::Error(e) => return Ok(Outcome::Error(format!("{label}: {e}"))),
        }
    }
    Ok(Outcome::Pass)
}
