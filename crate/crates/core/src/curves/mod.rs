//! Conics and cubics in barycentric coordinates.
//!
//! Curves are coefficient vectors up to scale, stored as coprime integers
//! with the first nonzero coefficient positive, so two curves are equal iff
//! their canonical coefficients are equal.

mod conic;
mod cubic;
pub mod form;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::centers::CenterError;
use crate::kernel::{HomPoint, KernelError};
use crate::linalg::{self, Mat3};
use crate::Rational;
use form::{monomials, Form};

pub use conic::{
    axis_conic, conic_center, conic_from_focus_directrix, is_rectangular, pascal_check, pole, AxisConic, LinePair,
};
pub use cubic::{
    hessian, hessian_form, homothety_matrix, is_singular_point, line_component, pivotal_cubic, pivotal_cubic_in,
    pivotal_membership, transform_conic, transform_cubic, PencilFactorization,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error("degenerate point set: incidence rank {rank}, independent points {independent:?}")]
    DegeneratePointSet { rank: usize, independent: Vec<usize> },
    #[error("no curve of this degree passes through all points (incidence rank {rank})")]
    NoCurveThrough { rank: usize },
    #[error("degenerate conic: the adjugate annihilates the line")]
    DegenerateConic,
    #[error("conic contains the line at infinity")]
    DegenerateAtInfinity,
    #[error("focus lies on the directrix")]
    FocusOnDirectrix,
    #[error("squared eccentricity must be positive")]
    NonPositiveEccentricity,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("axis configuration is parabolic or degenerate")]
    ParabolicDegenerate,
    #[error("restrictions to the line are not proportional")]
    NoLinearComponent,
    #[error("both cubics already contain the line")]
    BothVanishOnLine,
    #[error("homothety ratio must be nonzero")]
    ZeroRatio,
    #[error("transformation matrix is singular")]
    SingularMatrix,
    #[error("identically zero form")]
    ZeroForm,
}

pub type Result<T, E = CurveError> = std::result::Result<T, E>;

fn canonical_vec(v: &[Rational]) -> Result<Vec<BigInt>> {
    linalg::canonical_ints(v).ok_or(CurveError::ZeroForm)
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(":")
}

/// `q11 x² + q22 y² + q33 z² + 2 q12 xy + 2 q13 xz + 2 q23 yz`, up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conic([BigInt; 6]);

impl Conic {
    /// From `(q11, q22, q33, q12, q13, q23)`.
    pub fn new(q: &[Rational; 6]) -> Result<Self> {
        Ok(Self(canonical_vec(q)?.try_into().expect("six")))
    }

    pub fn from_ints(q: [i64; 6]) -> Result<Self> {
        Self::new(&q.map(|x| Rational::from_integer(x.into())))
    }

    pub fn from_matrix(m: &Mat3) -> Result<Self> {
        Self::new(&[
            m[0][0].clone(),
            m[1][1].clone(),
            m[2][2].clone(),
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][2].clone(),
        ])
    }

    pub fn from_form(f: &Form) -> Result<Self> {
        let half = Rational::new(1.into(), 2.into());
        Self::new(&[
            f.coeff(&[2, 0, 0]),
            f.coeff(&[0, 2, 0]),
            f.coeff(&[0, 0, 2]),
            f.coeff(&[1, 1, 0]) * &half,
            f.coeff(&[1, 0, 1]) * &half,
            f.coeff(&[0, 1, 1]) * &half,
        ])
    }

    /// Canonical `(q11, q22, q33, q12, q13, q23)`.
    pub fn coefficients(&self) -> &[BigInt; 6] {
        &self.0
    }

    pub fn matrix(&self) -> Mat3 {
        let q = self.0.clone().map(Rational::from_integer);
        let [q11, q22, q33, q12, q13, q23] = q;
        [[q11, q12.clone(), q13.clone()], [q12, q22, q23.clone()], [q13, q23, q33]]
    }

    pub fn form(&self) -> Form {
        let [q11, q22, q33, q12, q13, q23] = self.0.clone().map(Rational::from_integer);
        let two = Rational::from_integer(2.into());
        let mut f = Form::zero(2);
        for (e, c) in [
            ([2, 0, 0], q11),
            ([0, 2, 0], q22),
            ([0, 0, 2], q33),
            ([1, 1, 0], q12 * &two),
            ([1, 0, 1], q13 * &two),
            ([0, 1, 1], q23 * &two),
        ] {
            f = f.add(&Form::from_coefficients(2, &monomial_slot(2, e, c)));
        }
        f
    }

    /// Value of the form at the canonical integer representative of `p`.
    pub fn eval(&self, p: &HomPoint) -> BigInt {
        let [x, y, z] = p.coords();
        let [q11, q22, q33, q12, q13, q23] = &self.0;
        q11 * x * x + q22 * y * y + q33 * z * z + BigInt::from(2) * (q12 * x * y + q13 * x * z + q23 * y * z)
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn bits(&self) -> u64 {
        self.0.iter().map(BigInt::bits).max().unwrap_or(0)
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.0))
    }
}

fn monomial_slot(d: u32, e: [u32; 3], c: Rational) -> Vec<Rational> {
    monomials(d).into_iter().map(|m| if m == e { c.clone() } else { Rational::zero() }).collect()
}

/// Ternary cubic with coefficients in the order
/// `x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³`, up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cubic([BigInt; 10]);

impl Cubic {
    pub fn new(c: &[Rational; 10]) -> Result<Self> {
        Ok(Self(canonical_vec(c)?.try_into().expect("ten")))
    }

    pub fn from_ints(c: [i64; 10]) -> Result<Self> {
        Self::new(&c.map(|x| Rational::from_integer(x.into())))
    }

    pub fn from_form(f: &Form) -> Result<Self> {
        if f.degree() != 3 {
            return Err(CurveError::ZeroForm);
        }
        Self::new(&f.coefficients().try_into().expect("ten"))
    }

    pub fn coefficients(&self) -> &[BigInt; 10] {
        &self.0
    }

    pub fn form(&self) -> Form {
        Form::from_coefficients(3, &linalg::to_rationals(&self.0))
    }

    pub fn eval(&self, p: &HomPoint) -> BigInt {
        let [x, y, z] = p.coords();
        monomials(3)
            .iter()
            .zip(&self.0)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]))
            .sum()
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn bits(&self) -> u64 {
        self.0.iter().map(BigInt::bits).max().unwrap_or(0)
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.0))
    }
}

/// Either kind of curve, for figures and serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Curve {
    Conic(Conic),
    Cubic(Cubic),
}

impl Curve {
    pub fn form(&self) -> Form {
        match self {
            Curve::Conic(c) => c.form(),
            Curve::Cubic(k) => k.form(),
        }
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        match self {
            Curve::Conic(c) => c.contains(p),
            Curve::Cubic(k) => k.contains(p),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Conic(c) => c.fmt(f),
            Curve::Cubic(k) => k.fmt(f),
        }
    }
}

/// Incidence matrix: one row per point, one column per monomial of degree `d`.
pub fn incidence_matrix(points: &[HomPoint], d: u32) -> Vec<Vec<BigInt>> {
    let mons = monomials(d);
    points
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            mons.iter().map(|e| x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2])).collect()
        })
        .collect()
}

/// Generator of the one-dimensional space of degree-`d` forms through `points`.
fn fit(points: &[HomPoint], d: u32) -> Result<Vec<BigInt>> {
    let m = incidence_matrix(points, d);
    let ncols = monomials(d).len();
    let e = linalg::echelon(&m);
    let rank = e.rank();
    if rank == ncols {
        return Err(CurveError::NoCurveThrough { rank });
    }
    if rank < ncols - 1 {
        let mut independent = e.pivot_rows.clone();
        independent.sort_unstable();
        return Err(CurveError::DegeneratePointSet { rank, independent });
    }
    let v = e.nullspace().pop().expect("one-dimensional nullspace");
    Ok(v)
}

/// The conic through five points (or more, if they are consistent).
pub fn conic_through(points: &[HomPoint]) -> Result<Conic> {
    let c = linalg::to_rationals(&fit(points, 2)?);
    Conic::from_form(&Form::from_coefficients(2, &c))
}

/// The cubic through nine points (or more, if they are consistent).
pub fn cubic_through(points: &[HomPoint]) -> Result<Cubic> {
    let c = linalg::to_rationals(&fit(points, 3)?);
    Cubic::new(&c.try_into().expect("ten"))
}

pub fn on_conic(p: &HomPoint, c: &Conic) -> bool {
    c.contains(p)
}

pub fn on_cubic(p: &HomPoint, k: &Cubic) -> bool {
    k.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn circumconic_through_five_points() {
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3)];
        let c = conic_through(&pts).unwrap();
        // yz − 4zx + 3xy: q12 = 3/2, q13 = −2, q23 = 1/2
        assert_eq!(c, Conic::from_ints([0, 0, 0, 3, -4, 1]).unwrap());
        assert!(pts.iter().all(|p| on_conic(p, &c)));
        assert!(on_conic(&pt(1, 2, 3), &c));
        assert!(!on_conic(&pt(2, 3, 7), &c));
    }

    #[test]
    fn repeated_point_is_degenerate() {
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 1, 1)];
        match conic_through(&pts) {
            Err(CurveError::DegeneratePointSet { rank, independent }) => {
                assert_eq!(rank, 4);
                assert_eq!(independent.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn overdetermined_inconsistent() {
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3), pt(2, 3, 7)];
        assert_eq!(conic_through(&pts), Err(CurveError::NoCurveThrough { rank: 6 }));
    }

    #[test]
    fn conic_form_round_trip() {
        let c = Conic::from_ints([1, -2, 3, 5, -7, 11]).unwrap();
        assert_eq!(Conic::from_form(&c.form()).unwrap(), c);
        let p = pt(2, -3, 5);
        assert_eq!(Rational::from_integer(c.eval(&p)), c.form().eval(&p.rational_coords()));
    }

    #[test]
    fn cubic_eval_matches_form() {
        let k = Cubic::from_ints([1, 0, -2, 3, 5, 0, -1, 4, 2, 7]).unwrap();
        let p = pt(3, -1, 2);
        assert_eq!(Rational::from_integer(k.eval(&p)), k.form().eval(&p.rational_coords()));
    }
}
