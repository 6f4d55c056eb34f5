//! Exact barycentric geometry relative to a reference triangle.
//!
//! Points and lines are homogeneous integer triples kept in canonical form
//! (coprime entries, first nonzero entry positive), so structural equality is
//! projective equality. Metric questions go through the Conway symbols of a
//! [`RefTriangle`]; nothing in this module rounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, Mat3};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("arguments coincide")]
    CoincidentArguments,
    #[error("point at infinity where a finite point is required")]
    PointAtInfinity,
    #[error("affine weights do not sum to one")]
    WeightSumNotOne,
    #[error("the line at infinity has no finite points")]
    LineAtInfinity,
    #[error("not a direction: coordinates must sum to zero")]
    NotADirection,
    #[error("frame vertices are affinely dependent")]
    DegenerateFrame,
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("cannot parse homogeneous triple: {0}")]
    Parse(String),
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;

/// Canonical representative of a nonzero homogeneous triple.
pub fn canonical(v: &[Rational; 3]) -> Result<[BigInt; 3]> {
    let ints = linalg::canonical_ints(v).ok_or(KernelError::ZeroVector)?;
    Ok(ints.try_into().expect("length 3"))
}

macro_rules! homogeneous_triple {
    ($name:ident) => {
        impl $name {
            pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self> {
                Ok(Self(canonical(&[x, y, z])?))
            }

            pub fn from_rationals(v: &[Rational; 3]) -> Result<Self> {
                Ok(Self(canonical(v)?))
            }

            pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
                Self::new(int(x), int(y), int(z))
            }

            pub fn from_bigints(v: [BigInt; 3]) -> Result<Self> {
                Self::from_rationals(&v.map(Rational::from_integer))
            }

            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn rational_coords(&self) -> [Rational; 3] {
                self.0.clone().map(Rational::from_integer)
            }

            /// Largest coordinate size in bits.
            pub fn bits(&self) -> u64 {
                self.0.iter().map(|x| x.bits()).max().unwrap_or(0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}:{}:{}", self.0[0], self.0[1], self.0[2])
            }
        }

        impl FromStr for $name {
            type Err = KernelError;

            fn from_str(s: &str) -> Result<Self> {
                let parts: Vec<&str> = s.split(':').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(KernelError::Parse(s.to_string()));
                }
                let mut v: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
                for (slot, p) in v.iter_mut().zip(&parts) {
                    *slot = parse_rational(p).ok_or_else(|| KernelError::Parse(s.to_string()))?;
                }
                Self::from_rationals(&v)
            }
        }
    };
}

/// A point in homogeneous barycentric coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomPoint([BigInt; 3]);

/// A line `l·x + m·y + n·z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomLine([BigInt; 3]);

homogeneous_triple!(HomPoint);
homogeneous_triple!(HomLine);

impl HomPoint {
    /// Reference vertex `i` (0 = A, 1 = B, 2 = C).
    pub fn vertex(i: usize) -> Self {
        let mut v = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        v[i] = BigInt::one();
        Self(v)
    }

    pub fn centroid() -> Self {
        Self([BigInt::one(), BigInt::one(), BigInt::one()])
    }

    pub fn coordinate_sum(&self) -> BigInt {
        &self.0[0] + &self.0[1] + &self.0[2]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coordinate_sum().is_zero()
    }

    /// True if some coordinate vanishes, i.e. the point is on a sideline.
    pub fn on_sideline(&self) -> bool {
        self.0.iter().any(Zero::is_zero)
    }
}

impl HomLine {
    pub fn at_infinity() -> Self {
        Self([BigInt::one(), BigInt::one(), BigInt::one()])
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Value of the linear form at the integer representative of `p`.
    pub fn eval(&self, p: &HomPoint) -> BigInt {
        self.0.iter().zip(p.coords()).map(|(a, b)| a * b).sum()
    }
}

pub(crate) fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Parses an integer or `p/q` fraction.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Rational::new(p.trim().parse().ok()?, q)
        }
        None => Rational::from_integer(s.parse().ok()?),
    };
    Some(r)
}

fn cross_ints(u: &[BigInt; 3], v: &[BigInt; 3]) -> [Rational; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
        .map(Rational::from_integer)
}

pub fn join(p: &HomPoint, q: &HomPoint) -> Result<HomLine> {
    if p == q {
        return Err(KernelError::CoincidentArguments);
    }
    HomLine::from_rationals(&cross_ints(p.coords(), q.coords()))
}

pub fn meet(l: &HomLine, m: &HomLine) -> Result<HomPoint> {
    if l == m {
        return Err(KernelError::CoincidentArguments);
    }
    HomPoint::from_rationals(&cross_ints(l.coords(), m.coords()))
}

fn det_ints(p: &[BigInt; 3], q: &[BigInt; 3], r: &[BigInt; 3]) -> BigInt {
    &p[0] * (&q[1] * &r[2] - &q[2] * &r[1]) - &p[1] * (&q[0] * &r[2] - &q[2] * &r[0])
        + &p[2] * (&q[0] * &r[1] - &q[1] * &r[0])
}

pub fn collinear(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> bool {
    det_ints(p.coords(), q.coords(), r.coords()).is_zero()
}

pub fn concurrent(l: &HomLine, m: &HomLine, n: &HomLine) -> bool {
    det_ints(l.coords(), m.coords(), n.coords()).is_zero()
}

/// Affine representative: coordinates scaled to sum to one.
pub fn normalize_affine(p: &HomPoint) -> Result<[Rational; 3]> {
    let s = p.coordinate_sum();
    if s.is_zero() {
        return Err(KernelError::PointAtInfinity);
    }
    let s = Rational::from_integer(s);
    Ok(p.rational_coords().map(|x| x / &s))
}

/// Exact affine combination `Σ wᵢ pᵢ` of finite points; weights must sum to one.
pub fn affine_combine(terms: &[(&HomPoint, Rational)]) -> Result<HomPoint> {
    let total: Rational = terms.iter().map(|(_, w)| w.clone()).sum();
    if !total.is_one() {
        return Err(KernelError::WeightSumNotOne);
    }
    let mut acc: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
    for (p, w) in terms {
        let n = normalize_affine(p)?;
        for (a, x) in acc.iter_mut().zip(n) {
            *a += x * w;
        }
    }
    HomPoint::from_rationals(&acc)
}

pub fn midpoint(p: &HomPoint, q: &HomPoint) -> Result<HomPoint> {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    affine_combine(&[(p, half.clone()), (q, half)])
}

/// Point reflection of `p` through `center`.
pub fn reflect(p: &HomPoint, center: &HomPoint) -> Result<HomPoint> {
    affine_combine(&[(center, int(2)), (p, int(-1))])
}

/// A triangle carried by its squared side lengths (and, when rational, the
/// side lengths themselves) together with its Conway symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefTriangle {
    sides: Option<[Rational; 3]>,
    sq: [Rational; 3],
    conway: [Rational; 3],
    s2: Rational,
}

impl RefTriangle {
    pub fn from_sides(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if [&a, &b, &c].iter().any(|x| !x.is_positive()) {
            return Err(KernelError::InvalidTriangle("side lengths must be positive".into()));
        }
        if &a + &b <= c || &b + &c <= a || &c + &a <= b {
            return Err(KernelError::InvalidTriangle("side lengths violate the strict triangle inequality".into()));
        }
        let mut t = Self::from_squared_sides(&a * &a, &b * &b, &c * &c)?;
        t.sides = Some([a, b, c]);
        Ok(t)
    }

    pub fn from_int_sides(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_sides(int(a), int(b), int(c))
    }

    pub fn from_squared_sides(a2: Rational, b2: Rational, c2: Rational) -> Result<Self> {
        if [&a2, &b2, &c2].iter().any(|x| !x.is_positive()) {
            return Err(KernelError::InvalidTriangle("squared sides must be positive".into()));
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let sa = (&b2 + &c2 - &a2) * &half;
        let sb = (&c2 + &a2 - &b2) * &half;
        let sc = (&a2 + &b2 - &c2) * &half;
        let s2 = &sa * &sb + &sb * &sc + &sc * &sa;
        if !s2.is_positive() {
            return Err(KernelError::InvalidTriangle("zero or negative area".into()));
        }
        Ok(Self { sides: None, sq: [a2, b2, c2], conway: [sa, sb, sc], s2 })
    }

    /// Exact side lengths `(a, b, c)` if known.
    pub fn sides(&self) -> Option<&[Rational; 3]> {
        self.sides.as_ref()
    }

    /// Squared side lengths `(a², b², c²)`.
    pub fn sq_sides(&self) -> &[Rational; 3] {
        &self.sq
    }

    /// Conway symbols `(SA, SB, SC)`.
    pub fn conway(&self) -> &[Rational; 3] {
        &self.conway
    }

    /// `S²`, where `S` is twice the area.
    pub fn s2(&self) -> &Rational {
        &self.s2
    }

    pub fn is_right(&self) -> bool {
        self.conway.iter().any(Zero::is_zero)
    }

    pub fn is_acute(&self) -> bool {
        self.conway.iter().all(Signed::is_positive)
    }

    /// Orthogonality form `SA·x·x' + SB·y·y' + SC·z·z'` on directions.
    fn orth(&self, u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
        (0..3).map(|i| &self.conway[i] * &u[i] * &v[i]).sum()
    }

    /// True iff the directions `d1`, `d2` are perpendicular.
    pub fn perpendicular_directions(&self, d1: &HomPoint, d2: &HomPoint) -> bool {
        self.orth(&d1.rational_coords(), &d2.rational_coords()).is_zero()
    }
}

/// `−(a²vw + b²wu + c²uv)` for the displacement `(u, v, w)` between two finite points.
pub fn squared_distance(p: &HomPoint, q: &HomPoint, t: &RefTriangle) -> Result<Rational> {
    let np = normalize_affine(p)?;
    let nq = normalize_affine(q)?;
    let d: [Rational; 3] = std::array::from_fn(|i| &np[i] - &nq[i]);
    Ok(displacement_norm(&d, t))
}

pub(crate) fn displacement_norm(d: &[Rational; 3], t: &RefTriangle) -> Rational {
    let [a2, b2, c2] = t.sq_sides();
    -(a2 * &d[1] * &d[2] + b2 * &d[2] * &d[0] + c2 * &d[0] * &d[1])
}

/// Two distinct finite points on a line that is not the line at infinity.
pub fn finite_points_on(l: &HomLine) -> Result<(HomPoint, HomPoint)> {
    if l.is_at_infinity() {
        return Err(KernelError::LineAtInfinity);
    }
    let base = (0..3)
        .filter_map(|i| meet(l, &HomLine(HomPoint::vertex(i).0)).ok())
        .find(|p| !p.is_at_infinity())
        .expect("a line other than the line at infinity meets some sideline in a finite point");
    let dir = infinite_point(l)?;
    let nb = normalize_affine(&base)?;
    let other: [Rational; 3] = std::array::from_fn(|i| &nb[i] + Rational::from_integer(dir.0[i].clone()));
    Ok((base, HomPoint::from_rationals(&other)?))
}

/// Squared distance from `p` to `l`, measured with the sample points `q1`, `q2` on `l`.
pub fn point_line_distance_sq_via(p: &HomPoint, q1: &HomPoint, q2: &HomPoint, t: &RefTriangle) -> Result<Rational> {
    if q1 == q2 {
        return Err(KernelError::CoincidentArguments);
    }
    let np = normalize_affine(p)?;
    let n1 = normalize_affine(q1)?;
    let n2 = normalize_affine(q2)?;
    let det = linalg::det_rows(&np, &n1, &n2);
    Ok(&det * &det * t.s2() / squared_distance(q1, q2, t)?)
}

pub fn point_line_distance_sq(p: &HomPoint, l: &HomLine, t: &RefTriangle) -> Result<Rational> {
    let (q1, q2) = finite_points_on(l)?;
    point_line_distance_sq_via(p, &q1, &q2, t)
}

/// Direction of `l`: its meet with the line at infinity.
pub fn infinite_point(l: &HomLine) -> Result<HomPoint> {
    if l.is_at_infinity() {
        return Err(KernelError::LineAtInfinity);
    }
    meet(l, &HomLine::at_infinity())
}

/// The direction perpendicular to the direction `d`.
pub fn perpendicular_infinite_point(d: &HomPoint, t: &RefTriangle) -> Result<HomPoint> {
    if !d.is_at_infinity() {
        return Err(KernelError::NotADirection);
    }
    let c = d.rational_coords();
    let w: [Rational; 3] = std::array::from_fn(|i| &t.conway()[i] * &c[i]);
    HomPoint::from_rationals(&linalg::cross(&[int(1), int(1), int(1)], &w))
}

pub fn perpendicular_line_through(l: &HomLine, p: &HomPoint, t: &RefTriangle) -> Result<HomLine> {
    let d = perpendicular_infinite_point(&infinite_point(l)?, t)?;
    join(p, &d)
}

/// Orthogonal projection of `p` onto `l`.
pub fn foot_of_perpendicular(p: &HomPoint, l: &HomLine, t: &RefTriangle) -> Result<HomPoint> {
    let d = perpendicular_infinite_point(&infinite_point(l)?, t)?;
    if l.contains(p) {
        return Ok(p.clone());
    }
    meet(l, &join(p, &d)?)
}

/// Affine frame spanned by three points; converts between reference
/// barycentrics and barycentrics relative to the frame.
#[derive(Clone, Debug)]
pub struct Frame {
    vertices: [HomPoint; 3],
    /// Columns are the normalized vertices.
    to_base: Mat3,
    to_local: Mat3,
}

impl Frame {
    pub fn new(v1: &HomPoint, v2: &HomPoint, v3: &HomPoint) -> Result<Self> {
        let cols = [normalize_affine(v1)?, normalize_affine(v2)?, normalize_affine(v3)?];
        let to_base: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
        if linalg::det3(&to_base).is_zero() {
            return Err(KernelError::DegenerateFrame);
        }
        Ok(Self { vertices: [v1.clone(), v2.clone(), v3.clone()], to_local: linalg::adjugate3(&to_base), to_base })
    }

    pub fn identity() -> Self {
        Self::new(&HomPoint::vertex(0), &HomPoint::vertex(1), &HomPoint::vertex(2)).expect("reference frame")
    }

    pub fn vertices(&self) -> &[HomPoint; 3] {
        &self.vertices
    }

    /// Matrix taking local homogeneous coordinates to reference coordinates.
    pub fn to_base_matrix(&self) -> &Mat3 {
        &self.to_base
    }

    /// Matrix (adjugate, so up to scale) taking reference coordinates to local ones.
    pub fn to_local_matrix(&self) -> &Mat3 {
        &self.to_local
    }

    pub fn local(&self, p: &HomPoint) -> HomPoint {
        HomPoint::from_rationals(&linalg::mat3_vec(&self.to_local, &p.rational_coords()))
            .expect("invertible frame maps nonzero to nonzero")
    }

    pub fn base(&self, q: &HomPoint) -> HomPoint {
        HomPoint::from_rationals(&linalg::mat3_vec(&self.to_base, &q.rational_coords()))
            .expect("invertible frame maps nonzero to nonzero")
    }

    /// Lines transform contragrediently: a local line `m` is `m · to_local` in the reference.
    pub fn base_line(&self, m: &HomLine) -> HomLine {
        let t = linalg::mat3_transpose(&self.to_local);
        HomLine::from_rationals(&linalg::mat3_vec(&t, &m.rational_coords()))
            .expect("invertible frame maps nonzero to nonzero")
    }

    pub fn local_line(&self, l: &HomLine) -> HomLine {
        let t = linalg::mat3_transpose(&self.to_base);
        HomLine::from_rationals(&linalg::mat3_vec(&t, &l.rational_coords()))
            .expect("invertible frame maps nonzero to nonzero")
    }
}

/// Coordinates of `p` relative to the triangle `v1 v2 v3`.
pub fn local_coords(p: &HomPoint, v1: &HomPoint, v2: &HomPoint, v3: &HomPoint) -> Result<HomPoint> {
    Ok(Frame::new(v1, v2, v3)?.local(p))
}

/// Inverse of [`local_coords`].
pub fn from_local(q: &HomPoint, v1: &HomPoint, v2: &HomPoint, v3: &HomPoint) -> Result<HomPoint> {
    Ok(Frame::new(v1, v2, v3)?.base(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn t6913() -> RefTriangle {
        RefTriangle::from_int_sides(6, 9, 13).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(pt(2, -4, 6).to_string(), "1:-2:3");
        assert_eq!(pt(-2, 4, -6).to_string(), "1:-2:3");
        assert_eq!(HomPoint::new(r(1, 2), r(1, 3), int(0)).unwrap().to_string(), "3:2:0");
        assert_eq!(pt(0, 0, 5).to_string(), "0:0:1");
        assert_eq!(HomPoint::from_ints(0, 0, 0), Err(KernelError::ZeroVector));
        assert_eq!("1/2 : 1/3 : 0".parse::<HomPoint>().unwrap(), pt(3, 2, 0));
    }

    #[test]
    fn join_meet_duality() {
        let ab = join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap();
        assert_eq!(ab, HomLine::from_ints(0, 0, 1).unwrap());
        let a = meet(&HomLine::from_ints(0, 0, 1).unwrap(), &HomLine::from_ints(0, 1, 0).unwrap()).unwrap();
        assert_eq!(a, pt(1, 0, 0));
        assert_eq!(join(&a, &a), Err(KernelError::CoincidentArguments));
        let l = HomLine::from_ints(1, 2, 3).unwrap();
        assert_eq!(meet(&l, &l), Err(KernelError::CoincidentArguments));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_affine(&pt(1, 1, 1)).unwrap(), [r(1, 3), r(1, 3), r(1, 3)]);
        assert_eq!(normalize_affine(&pt(2, 0, 0)).unwrap(), [int(1), int(0), int(0)]);
        assert_eq!(normalize_affine(&pt(1, -1, 0)), Err(KernelError::PointAtInfinity));
    }

    #[test]
    fn midpoints_and_weights() {
        assert_eq!(midpoint(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), pt(1, 1, 0));
        let p = pt(3, -1, 7);
        assert_eq!(midpoint(&p, &p).unwrap(), p);
        assert_eq!(affine_combine(&[(&p, int(1)), (&p, int(1))]), Err(KernelError::WeightSumNotOne));
        assert_eq!(midpoint(&pt(1, -1, 0), &p), Err(KernelError::PointAtInfinity));
    }

    #[test]
    fn distances_6_9_13() {
        let t = t6913();
        assert_eq!(t.conway(), &[int(107), int(62), int(-26)]);
        assert_eq!(t.s2(), &int(2240));
        let (a, b, c) = (pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1));
        assert_eq!(squared_distance(&a, &b, &t).unwrap(), int(169));
        assert_eq!(squared_distance(&b, &c, &t).unwrap(), int(36));
        assert_eq!(squared_distance(&c, &a, &t).unwrap(), int(81));
        assert_eq!(squared_distance(&a, &a, &t).unwrap(), int(0));
        // median length m_a² = (2b² + 2c² − a²)/4
        let m = midpoint(&b, &c).unwrap();
        assert_eq!(squared_distance(&a, &m, &t).unwrap(), int(116));
        let bc = join(&b, &c).unwrap();
        assert_eq!(point_line_distance_sq(&a, &bc, &t).unwrap(), r(560, 9));
        assert_eq!(point_line_distance_sq(&m, &bc, &t).unwrap(), int(0));
        let q = pt(0, 5, -2);
        assert_eq!(point_line_distance_sq_via(&a, &q, &b, &t).unwrap(), r(560, 9));
        assert_eq!(point_line_distance_sq(&a, &HomLine::at_infinity(), &t), Err(KernelError::LineAtInfinity));
    }

    #[test]
    fn perpendiculars_6_9_13() {
        let t = t6913();
        let bc = HomLine::from_ints(1, 0, 0).unwrap();
        let d = infinite_point(&bc).unwrap();
        assert_eq!(d, pt(0, 1, -1));
        let p = perpendicular_infinite_point(&d, &t).unwrap();
        assert_eq!(p, pt(18, 13, -31));
        assert!(t.perpendicular_directions(&d, &p));
        assert_eq!(perpendicular_infinite_point(&pt(1, 1, 1), &t), Err(KernelError::NotADirection));
        let alt = perpendicular_line_through(&bc, &pt(1, 0, 0), &t).unwrap();
        assert!(alt.contains(&pt(0, -26, 62)));
        assert_eq!(foot_of_perpendicular(&pt(1, 0, 0), &bc, &t).unwrap(), pt(0, 13, -31));
    }

    #[test]
    fn frames() {
        let (v1, v2, v3) = (pt(2, 1, 1), pt(-1, 3, 5), pt(0, 1, 7));
        assert_eq!(local_coords(&v1, &v1, &v2, &v3).unwrap(), pt(1, 0, 0));
        let g = affine_combine(&[(&v1, r(1, 3)), (&v2, r(1, 3)), (&v3, r(1, 3))]).unwrap();
        assert_eq!(local_coords(&g, &v1, &v2, &v3).unwrap(), pt(1, 1, 1));
        assert_eq!(local_coords(&g, &v1, &v1, &v3), Err(KernelError::DegenerateFrame));
        let f = Frame::new(&v1, &v2, &v3).unwrap();
        let l = join(&v2, &v3).unwrap();
        assert_eq!(f.local_line(&l), HomLine::from_ints(1, 0, 0).unwrap());
        assert_eq!(f.base_line(&f.local_line(&l)), l);
    }

    #[test]
    fn triangle_validation() {
        assert!(RefTriangle::from_int_sides(1, 2, 3).is_err());
        assert!(RefTriangle::from_int_sides(0, 2, 3).is_err());
        assert!(RefTriangle::from_int_sides(3, 4, 5).unwrap().is_right());
        assert!(!t6913().is_acute());
    }
}
