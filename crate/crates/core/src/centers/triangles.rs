use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{eval_center, CenterError, CenterId, Result};
use crate::kernel::{self, Frame, HomPoint, RefTriangle};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    Base,
    Excentral,
    Medial,
    Orthic,
    Anticomplementary,
    EulerTriangle,
    MidArc,
    Tangential,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 8] = [
        TriangleKind::Base,
        TriangleKind::Excentral,
        TriangleKind::Medial,
        TriangleKind::Orthic,
        TriangleKind::Anticomplementary,
        TriangleKind::EulerTriangle,
        TriangleKind::MidArc,
        TriangleKind::Tangential,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Base => "base",
            TriangleKind::Excentral => "excentral",
            TriangleKind::Medial => "medial",
            TriangleKind::Orthic => "orthic",
            TriangleKind::Anticomplementary => "anticomplementary",
            TriangleKind::EulerTriangle => "euler",
            TriangleKind::MidArc => "midarc",
            TriangleKind::Tangential => "tangential",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleKind {
    type Err = CenterError;

    fn from_str(s: &str) -> Result<Self> {
        TriangleKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CenterError::Parse(format!("unknown triangle kind {s}")))
    }
}

/// A triangle whose vertices are points of the reference plane, with its own
/// metric data so centers can be evaluated in its local barycentrics.
#[derive(Clone, Debug)]
pub struct SubTriangle {
    frame: Frame,
    metric: RefTriangle,
}

impl SubTriangle {
    /// The reference triangle itself.
    pub fn base(t: &RefTriangle) -> Self {
        Self { frame: Frame::identity(), metric: t.clone() }
    }

    /// Builds a sub-triangle from reference-plane vertices; squared sides come
    /// from the reference metric.
    pub fn from_vertices(t: &RefTriangle, vertices: [HomPoint; 3], sides: Option<[Rational; 3]>) -> Result<Self> {
        let frame = Frame::new(&vertices[0], &vertices[1], &vertices[2])?;
        let d = |i: usize, j: usize| kernel::squared_distance(&vertices[i], &vertices[j], t);
        let (a2, b2, c2) = (d(1, 2)?, d(2, 0)?, d(0, 1)?);
        let metric = match sides {
            Some([a, b, c]) => {
                debug_assert!(&a * &a == a2 && &b * &b == b2 && &c * &c == c2);
                RefTriangle::from_sides(a, b, c)?
            }
            None => RefTriangle::from_squared_sides(a2, b2, c2)?,
        };
        Ok(Self { frame, metric })
    }

    pub fn vertices(&self) -> &[HomPoint; 3] {
        self.frame.vertices()
    }

    pub fn vertex(&self, i: usize) -> &HomPoint {
        &self.frame.vertices()[i]
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Metric data of this triangle (its own squared sides and Conway symbols).
    pub fn metric(&self) -> &RefTriangle {
        &self.metric
    }

    pub fn sq_sides(&self) -> &[Rational; 3] {
        self.metric.sq_sides()
    }

    pub fn sides(&self) -> Option<&[Rational; 3]> {
        self.metric.sides()
    }

    pub fn to_local(&self, p: &HomPoint) -> HomPoint {
        self.frame.local(p)
    }

    pub fn to_base(&self, q: &HomPoint) -> HomPoint {
        self.frame.base(q)
    }

    /// A catalog center of this triangle, in reference coordinates.
    pub fn center(&self, id: CenterId) -> Result<HomPoint> {
        Ok(self.to_base(&eval_center(&self.metric, id)?))
    }

    /// Isogonal conjugate with respect to this triangle.
    pub fn isogonal(&self, p: &HomPoint) -> Result<HomPoint> {
        Ok(self.to_base(&super::isogonal(&self.metric, &self.to_local(p))?))
    }

    pub fn isotomic(&self, p: &HomPoint) -> Result<HomPoint> {
        Ok(self.to_base(&super::isotomic(&self.to_local(p))?))
    }

    /// Reflection of vertex `i` through this triangle's circumcenter.
    pub fn antipode(&self, i: usize) -> Result<HomPoint> {
        let o = self.center(CenterId::X3)?;
        Ok(kernel::reflect(self.vertex(i), &o)?)
    }

    /// Derived triangle of this triangle, expressed in reference coordinates.
    pub fn derived(&self, t: &RefTriangle, kind: TriangleKind) -> Result<SubTriangle> {
        let m = &self.metric;
        let sq = m.sq_sides();
        let missing = |what: &str| CenterError::OddCenterWithoutSides(format!("{what} triangle vertices"));
        let non_right = |what: &'static str| {
            if m.is_right() {
                Err(CenterError::RightTriangle(what))
            } else {
                Ok(())
            }
        };
        let pt = |v: [Rational; 3]| HomPoint::from_rationals(&v);
        let r = |x: i64| Rational::from_integer(BigInt::from(x));
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let (local, sides): ([HomPoint; 3], Option<[Rational; 3]>) = match kind {
            TriangleKind::Base => return Ok(self.clone()),
            TriangleKind::Excentral => {
                let [a, b, c] = m.sides().ok_or_else(|| missing("excentral"))?.clone();
                (
                    [pt([-a.clone(), b.clone(), c.clone()])?, pt([a.clone(), -b.clone(), c.clone()])?, pt([a, b, -c])?],
                    None,
                )
            }
            TriangleKind::Medial => (
                [HomPoint::from_ints(0, 1, 1)?, HomPoint::from_ints(1, 0, 1)?, HomPoint::from_ints(1, 1, 0)?],
                m.sides().map(|s| s.clone().map(|x| x * &half)),
            ),
            TriangleKind::Orthic => {
                non_right("the orthic triangle")?;
                let [sa, sb, sc] = m.conway().clone();
                ([pt([r(0), sc.clone(), sb.clone()])?, pt([sc, r(0), sa.clone()])?, pt([sb, sa, r(0)])?], None)
            }
            TriangleKind::Anticomplementary => (
                [HomPoint::from_ints(-1, 1, 1)?, HomPoint::from_ints(1, -1, 1)?, HomPoint::from_ints(1, 1, -1)?],
                m.sides().map(|s| s.clone().map(|x| x * r(2))),
            ),
            TriangleKind::EulerTriangle => {
                let h = eval_center(m, CenterId::X4)?;
                (
                    [
                        kernel::midpoint(&HomPoint::vertex(0), &h)?,
                        kernel::midpoint(&HomPoint::vertex(1), &h)?,
                        kernel::midpoint(&HomPoint::vertex(2), &h)?,
                    ],
                    m.sides().map(|s| s.clone().map(|x| x * &half)),
                )
            }
            TriangleKind::MidArc => {
                let [a, b, c] = m.sides().ok_or_else(|| missing("mid-arc"))?.clone();
                let (bc, ca, ab) = (&b + &c, &c + &a, &a + &b);
                (
                    [
                        pt([-sq[0].clone(), &b * &bc, &c * &bc])?,
                        pt([&a * &ca, -sq[1].clone(), &c * &ca])?,
                        pt([&a * &ab, &b * &ab, -sq[2].clone()])?,
                    ],
                    None,
                )
            }
            TriangleKind::Tangential => {
                non_right("the tangential triangle")?;
                let [a2, b2, c2] = sq.clone();
                (
                    [
                        pt([-a2.clone(), b2.clone(), c2.clone()])?,
                        pt([a2.clone(), -b2.clone(), c2.clone()])?,
                        pt([a2, b2, -c2])?,
                    ],
                    None,
                )
            }
        };
        let vertices = local.map(|p| self.to_base(&p));
        SubTriangle::from_vertices(t, vertices, sides)
    }
}

/// Derived triangle of the reference triangle.
pub fn derived_triangle(t: &RefTriangle, kind: TriangleKind) -> Result<SubTriangle> {
    SubTriangle::base(t).derived(t, kind)
}

/// A catalog center of a sub-triangle, in reference coordinates.
pub fn eval_center_in(sub: &SubTriangle, id: CenterId) -> Result<HomPoint> {
    sub.center(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::complement;

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    fn t6913() -> RefTriangle {
        RefTriangle::from_int_sides(6, 9, 13).unwrap()
    }

    #[test]
    fn medial_vertices_and_sides() {
        let t = t6913();
        let m = derived_triangle(&t, TriangleKind::Medial).unwrap();
        assert_eq!(m.vertices(), &[pt(0, 1, 1), pt(1, 0, 1), pt(1, 1, 0)]);
        let q = |x: i64| Rational::new(x.into(), 4.into());
        assert_eq!(m.sq_sides(), &[q(36), q(81), q(169)]);
        assert_eq!(m.sides().unwrap()[2], Rational::new(13.into(), 2.into()));
    }

    #[test]
    fn mid_arc_vertex_on_circumcircle_and_bisector() {
        let t = t6913();
        let ma = derived_triangle(&t, TriangleKind::MidArc).unwrap();
        let v = ma.vertex(0);
        assert_eq!(v, &pt(-18, 99, 143));
        let [x, y, z] = v.coords();
        let circ = BigInt::from(36) * y * z + BigInt::from(81) * z * x + BigInt::from(169) * x * y;
        assert_eq!(circ, BigInt::from(0));
        let i = eval_center(&t, CenterId::X1).unwrap();
        assert!(kernel::collinear(&HomPoint::vertex(0), &i, v));
    }

    #[test]
    fn excentral_identities_6_9_13() {
        let t = t6913();
        let ex = derived_triangle(&t, TriangleKind::Excentral).unwrap();
        assert_eq!(ex.vertex(0), &pt(-6, 9, 13));
        assert_eq!(eval_center_in(&ex, CenterId::X4).unwrap(), eval_center(&t, CenterId::X1).unwrap());
        assert_eq!(eval_center_in(&ex, CenterId::X5).unwrap(), eval_center(&t, CenterId::X3).unwrap());
        let orthic_of_ex = ex.derived(&t, TriangleKind::Orthic).unwrap();
        for i in 0..3 {
            assert_eq!(orthic_of_ex.vertex(i), &HomPoint::vertex(i));
        }
        assert!(matches!(eval_center_in(&ex, CenterId::X1), Err(CenterError::OddCenterWithoutSides(_))));
    }

    #[test]
    fn medial_fixes_centroid_and_commutes_with_complement() {
        let t = t6913();
        let m = derived_triangle(&t, TriangleKind::Medial).unwrap();
        assert_eq!(eval_center_in(&m, CenterId::X2).unwrap(), HomPoint::centroid());
        let h = eval_center(&t, CenterId::X4).unwrap();
        assert_eq!(eval_center_in(&m, CenterId::X4).unwrap(), complement(&h));
    }

    #[test]
    fn right_triangles_reject_orthic() {
        let t = RefTriangle::from_int_sides(3, 4, 5).unwrap();
        assert!(matches!(derived_triangle(&t, TriangleKind::Orthic), Err(CenterError::RightTriangle(_))));
        assert!(matches!(derived_triangle(&t, TriangleKind::Tangential), Err(CenterError::RightTriangle(_))));
    }
}
