//! Triangle centers, conjugations and derived triangles.
//!
//! Every center is evaluated from a barycentric formula that is rational in
//! the side lengths. Formulas that only involve `a², b², c²` are *even* and
//! can be evaluated on any triangle whose squared sides are rational, which
//! includes every derived triangle of a rational triangle. Odd formulas need
//! the side lengths themselves.

mod expr;
mod oracles;
mod random;
mod triangles;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::kernel::{self, HomPoint, KernelError, RefTriangle};
use crate::Rational;

pub use expr::{alias_names, CenterExpr};
pub use oracles::validate_center_oracles;
pub use random::{random_triangle, TriangleConstraints};
pub use triangles::{derived_triangle, eval_center_in, SubTriangle, TriangleKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("point {0} lies on a sideline; conjugation undefined")]
    OnSideline(String),
    #[error("right triangle: {0} is undefined")]
    RightTriangle(&'static str),
    #[error("{0} needs exact side lengths, which this triangle does not carry")]
    OddCenterWithoutSides(String),
    #[error("unknown center: {0}")]
    UnknownCenter(String),
    #[error("cannot parse center expression: {0}")]
    Parse(String),
    #[error("vertex index {0} out of range 1..=3")]
    InvalidIndex(usize),
    #[error("no triangle satisfies the constraints after {0} attempts")]
    ExhaustedRetries(usize),
}

pub type Result<T, E = CenterError> = std::result::Result<T, E>;

/// Catalog of the named centers used by the verification scenarios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CenterId {
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    X7,
    X8,
    X9,
    X10,
    X20,
    X21,
    X25,
    X39,
    X40,
    X54,
    X57,
    X64,
    X69,
    X76,
    X84,
    X355,
    X389,
    BrocardOmega1,
    BrocardOmega2,
    VertexA,
    VertexB,
    VertexC,
}

impl CenterId {
    pub const ALL: [CenterId; 28] = [
        CenterId::X1,
        CenterId::X2,
        CenterId::X3,
        CenterId::X4,
        CenterId::X5,
        CenterId::X6,
        CenterId::X7,
        CenterId::X8,
        CenterId::X9,
        CenterId::X10,
        CenterId::X20,
        CenterId::X21,
        CenterId::X25,
        CenterId::X39,
        CenterId::X40,
        CenterId::X54,
        CenterId::X57,
        CenterId::X64,
        CenterId::X69,
        CenterId::X76,
        CenterId::X84,
        CenterId::X355,
        CenterId::X389,
        CenterId::BrocardOmega1,
        CenterId::BrocardOmega2,
        CenterId::VertexA,
        CenterId::VertexB,
        CenterId::VertexC,
    ];

    pub fn tag(self) -> &'static str {
        use CenterId::*;
        match self {
            X1 => "X1",
            X2 => "X2",
            X3 => "X3",
            X4 => "X4",
            X5 => "X5",
            X6 => "X6",
            X7 => "X7",
            X8 => "X8",
            X9 => "X9",
            X10 => "X10",
            X20 => "X20",
            X21 => "X21",
            X25 => "X25",
            X39 => "X39",
            X40 => "X40",
            X54 => "X54",
            X57 => "X57",
            X64 => "X64",
            X69 => "X69",
            X76 => "X76",
            X84 => "X84",
            X355 => "X355",
            X389 => "X389",
            BrocardOmega1 => "BrocardOmega1",
            BrocardOmega2 => "BrocardOmega2",
            VertexA => "VertexA",
            VertexB => "VertexB",
            VertexC => "VertexC",
        }
    }

    pub fn description(self) -> &'static str {
        use CenterId::*;
        match self {
            X1 => "incenter",
            X2 => "centroid",
            X3 => "circumcenter",
            X4 => "orthocenter",
            X5 => "nine-point center",
            X6 => "symmedian (Lemoine) point",
            X7 => "Gergonne point",
            X8 => "Nagel point",
            X9 => "mittenpunkt",
            X10 => "Spieker center",
            X20 => "de Longchamps point",
            X21 => "Schiffler point",
            X25 => "homothetic center of orthic and tangential triangles",
            X39 => "Brocard midpoint",
            X40 => "Bevan point",
            X54 => "Kosnita point",
            X57 => "isogonal conjugate of the mittenpunkt",
            X64 => "isogonal conjugate of the de Longchamps point",
            X69 => "isotomic conjugate of the orthocenter",
            X76 => "third Brocard point",
            X84 => "isogonal conjugate of the Bevan point",
            X355 => "Fuhrmann center",
            X389 => "Taylor center",
            BrocardOmega1 => "first Brocard point",
            BrocardOmega2 => "second Brocard point",
            VertexA => "vertex A",
            VertexB => "vertex B",
            VertexC => "vertex C",
        }
    }

    /// True if the evaluation rule uses only the squared side lengths.
    pub fn is_even(self) -> bool {
        use CenterId::*;
        !matches!(self, X1 | X7 | X8 | X9 | X10 | X21 | X40 | X57 | X84 | X355)
    }
}

impl fmt::Display for CenterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CenterId {
    type Err = CenterError;

    fn from_str(s: &str) -> Result<Self> {
        CenterId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| CenterError::UnknownCenter(s.to_string()))
    }
}

fn point(v: [Rational; 3]) -> Result<HomPoint> {
    Ok(HomPoint::from_rationals(&v)?)
}

fn cyclic(f: impl Fn(usize, usize, usize) -> Rational) -> [Rational; 3] {
    [f(0, 1, 2), f(1, 2, 0), f(2, 0, 1)]
}

/// Coordinates of a catalog center relative to the triangle `t` itself.
pub fn eval_center(t: &RefTriangle, id: CenterId) -> Result<HomPoint> {
    use CenterId::*;
    let sq = t.sq_sides();
    let [sa, sb, sc] = t.conway();
    let s_ = [sa, sb, sc];
    let s2 = t.s2();
    let one = Rational::one();
    let sides = || t.sides().ok_or_else(|| CenterError::OddCenterWithoutSides(id.tag().to_string()));
    let needs_non_right = |what: &'static str| {
        if t.is_right() {
            Err(CenterError::RightTriangle(what))
        } else {
            Ok(())
        }
    };
    match id {
        X1 => point(sides()?.clone()),
        X2 => Ok(HomPoint::centroid()),
        X3 => point(cyclic(|i, _, _| &sq[i] * s_[i])),
        X4 => point(cyclic(|_, j, k| s_[j] * s_[k])),
        X5 => point(cyclic(|_, j, k| s2 + s_[j] * s_[k])),
        X6 => point(sq.clone()),
        X7 => {
            let semi = semi_excess(sides()?);
            point(cyclic(|_, j, k| &semi[j] * &semi[k]))
        }
        X8 => point(semi_excess(sides()?)),
        X9 => {
            let s = sides()?;
            let semi = semi_excess(s);
            point(cyclic(|i, _, _| &s[i] * &semi[i]))
        }
        X10 => {
            let s = sides()?;
            point(cyclic(|_, j, k| &s[j] + &s[k]))
        }
        X20 => point(cyclic(|i, j, k| s_[i] * s_[j] + s_[i] * s_[k] - s_[j] * s_[k])),
        X21 => {
            let s = sides()?;
            let semi = semi_excess(s);
            point(cyclic(|i, j, k| &s[i] / ((&s[j] + &s[k]) * &semi[j] * &semi[k])))
        }
        X25 => {
            needs_non_right("X25")?;
            point(cyclic(|i, j, k| &sq[i] * s_[j] * s_[k]))
        }
        X39 => point(cyclic(|i, j, k| &sq[i] * (&sq[j] + &sq[k]))),
        X40 => {
            let [a, b, c] = sides()?;
            let rule = |a: &Rational, b: &Rational, c: &Rational| {
                let bc = b + c;
                let dbc = b - c;
                a * (a * a * a + a * a * &bc - a * &bc * &bc - &bc * &dbc * &dbc)
            };
            point([rule(a, b, c), rule(b, c, a), rule(c, a, b)])
        }
        X54 => point(cyclic(|i, j, k| &sq[i] / (s2 + s_[j] * s_[k]))),
        X57 => {
            let s = sides()?;
            let semi = semi_excess(s);
            point(cyclic(|i, _, _| &s[i] / &semi[i]))
        }
        X64 => point(cyclic(|i, j, k| &sq[i] / (s_[i] * s_[j] + s_[i] * s_[k] - s_[j] * s_[k]))),
        X69 => point([sa.clone(), sb.clone(), sc.clone()]),
        X76 => point(cyclic(|i, _, _| &one / &sq[i])),
        X84 => {
            let x40 = eval_center(t, X40)?.rational_coords();
            point(cyclic(|i, _, _| &sq[i] / &x40[i]))
        }
        X355 => {
            // 3·G − I − O on the Euler/Nagel configuration
            let i = eval_center(t, X1)?;
            let o = eval_center(t, X3)?;
            let g = HomPoint::centroid();
            Ok(kernel::affine_combine(&[
                (&g, Rational::from_integer(3.into())),
                (&i, -one.clone()),
                (&o, -one.clone()),
            ])?)
        }
        X389 => {
            needs_non_right("the Taylor circle")?;
            let pts = taylor_points(t)?;
            let mut distinct: Vec<&HomPoint> = Vec::new();
            for p in &pts {
                if !distinct.contains(&p) {
                    distinct.push(p);
                }
            }
            circumcenter_of(distinct[0], distinct[1], distinct[2], t)
        }
        BrocardOmega1 => point([&one / &sq[1], &one / &sq[2], &one / &sq[0]]),
        BrocardOmega2 => point([&one / &sq[2], &one / &sq[0], &one / &sq[1]]),
        VertexA => Ok(HomPoint::vertex(0)),
        VertexB => Ok(HomPoint::vertex(1)),
        VertexC => Ok(HomPoint::vertex(2)),
    }
}

/// `(s − a, s − b, s − c)` with `s` the semiperimeter.
fn semi_excess(s: &[Rational; 3]) -> [Rational; 3] {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let semi = (&s[0] + &s[1] + &s[2]) * half;
    s.clone().map(|x| &semi - x)
}

/// The six projections of the altitude feet onto the other two sidelines,
/// ordered (Ha→CA, Ha→AB, Hb→AB, Hb→BC, Hc→BC, Hc→CA).
pub fn taylor_points(t: &RefTriangle) -> Result<Vec<HomPoint>> {
    let sidelines: Vec<kernel::HomLine> = (0..3)
        .map(|i| {
            let mut v = [0, 0, 0];
            v[i] = 1;
            kernel::HomLine::from_ints(v[0], v[1], v[2]).expect("sideline")
        })
        .collect();
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        let foot = kernel::foot_of_perpendicular(&HomPoint::vertex(i), &sidelines[i], t)?;
        for j in [(i + 1) % 3, (i + 2) % 3] {
            out.push(kernel::foot_of_perpendicular(&foot, &sidelines[j], t)?);
        }
    }
    Ok(out)
}

/// Center of the circle through three non-collinear finite points.
pub fn circumcenter_of(p: &HomPoint, q: &HomPoint, r: &HomPoint, t: &RefTriangle) -> Result<HomPoint> {
    let bisector = |u: &HomPoint, v: &HomPoint| -> Result<kernel::HomLine> {
        let m = kernel::midpoint(u, v)?;
        Ok(kernel::perpendicular_line_through(&kernel::join(u, v)?, &m, t)?)
    };
    Ok(kernel::meet(&bisector(p, q)?, &bisector(p, r)?)?)
}

/// `(x:y:z) ↦ (y+z : z+x : x+y)`: image under the homothety at the centroid with ratio −1/2.
pub fn complement(p: &HomPoint) -> HomPoint {
    let [x, y, z] = p.coords();
    HomPoint::from_bigints([y + z, z + x, x + y]).expect("complement is invertible")
}

/// Inverse of [`complement`]: `(x:y:z) ↦ (y+z−x : z+x−y : x+y−z)`.
pub fn anticomplement(p: &HomPoint) -> HomPoint {
    let [x, y, z] = p.coords();
    HomPoint::from_bigints([y + z - x, z + x - y, x + y - z]).expect("anticomplement is invertible")
}

/// Isogonal conjugate `(a²/x : b²/y : c²/z)` with respect to `t`.
pub fn isogonal(t: &RefTriangle, p: &HomPoint) -> Result<HomPoint> {
    if p.on_sideline() {
        return Err(CenterError::OnSideline(p.to_string()));
    }
    let c = p.rational_coords();
    let sq = t.sq_sides();
    point(cyclic(|i, j, k| &sq[i] * &c[j] * &c[k]))
}

/// Isotomic conjugate `(1/x : 1/y : 1/z)`.
pub fn isotomic(p: &HomPoint) -> Result<HomPoint> {
    if p.on_sideline() {
        return Err(CenterError::OnSideline(p.to_string()));
    }
    let [x, y, z] = p.coords();
    Ok(HomPoint::from_bigints([y * z, z * x, x * y])?)
}

/// Which conjugation defines a pivotal cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    Isogonal,
    Isotomic,
}

impl Conjugation {
    pub fn apply(self, t: &RefTriangle, p: &HomPoint) -> Result<HomPoint> {
        match self {
            Conjugation::Isogonal => isogonal(t, p),
            Conjugation::Isotomic => isotomic(p),
        }
    }
}
