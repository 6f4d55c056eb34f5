//! Defining-property checks for every catalog center.
//!
//! Each oracle tests the geometric characterization of a center (equal
//! distances, concurrencies, conjugacies) rather than re-evaluating its
//! formula, so a wrong catalog formula shows up as a `false` entry.

use super::{complement, eval_center, isogonal, isotomic, CenterId, Result, SubTriangle, TriangleKind};
use crate::kernel::{self, HomLine, HomPoint, RefTriangle};
use crate::Rational;

fn sideline(i: usize) -> HomLine {
    let mut v = [0, 0, 0];
    v[i] = 1;
    HomLine::from_ints(v[0], v[1], v[2]).expect("sideline")
}

fn all_equal(v: &[Rational]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

/// Runs every center's oracle on `t` (scalene, non-right, rational sides).
/// Evaluation failures count as falsified entries.
pub fn validate_center_oracles(t: &RefTriangle) -> Vec<(CenterId, bool)> {
    CenterId::ALL.into_iter().map(|id| (id, check(t, id).unwrap_or(false))).collect()
}

fn check(t: &RefTriangle, id: CenterId) -> Result<bool> {
    use CenterId::*;
    let x = |id| eval_center(t, id);
    let p = x(id)?;
    let vertices = [HomPoint::vertex(0), HomPoint::vertex(1), HomPoint::vertex(2)];
    let ok = match id {
        X1 => {
            let d: Vec<Rational> = (0..3)
                .map(|i| kernel::point_line_distance_sq(&p, &sideline(i), t))
                .collect::<std::result::Result<_, _>>()?;
            let inside = p.coords().iter().all(|c| c.sign() == num_bigint::Sign::Plus);
            all_equal(&d) && inside
        }
        X2 => (0..3).all(|i| {
            let m = kernel::midpoint(&vertices[(i + 1) % 3], &vertices[(i + 2) % 3]).unwrap();
            kernel::collinear(&vertices[i], &m, &p)
        }),
        X3 => {
            let d: Vec<Rational> =
                vertices.iter().map(|v| kernel::squared_distance(&p, v, t)).collect::<std::result::Result<_, _>>()?;
            all_equal(&d)
        }
        X4 => (0..3).try_fold(true, |acc, i| -> Result<bool> {
            let alt = kernel::perpendicular_line_through(&sideline(i), &vertices[i], t)?;
            Ok(acc && alt.contains(&p))
        })?,
        X5 => p == kernel::midpoint(&x(X3)?, &x(X4)?)?,
        X6 => p == isogonal(t, &x(X2)?)?,
        X7 => {
            // cevians through the incircle contact points
            let i = x(X1)?;
            (0..3).try_fold(true, |acc, k| -> Result<bool> {
                let touch = kernel::foot_of_perpendicular(&i, &sideline(k), t)?;
                Ok(acc && kernel::collinear(&vertices[k], &touch, &p))
            })?
        }
        X8 => {
            // cevians through the excircle contact points
            let ex = SubTriangle::base(t).derived(t, TriangleKind::Excentral)?;
            (0..3).try_fold(true, |acc, k| -> Result<bool> {
                let touch = kernel::foot_of_perpendicular(ex.vertex(k), &sideline(k), t)?;
                Ok(acc && kernel::collinear(&vertices[k], &touch, &p))
            })?
        }
        X9 => {
            let ex = SubTriangle::base(t).derived(t, TriangleKind::Excentral)?;
            let medial = SubTriangle::base(t).derived(t, TriangleKind::Medial)?;
            let concur = (0..3).all(|k| kernel::collinear(ex.vertex(k), medial.vertex(k), &p));
            concur && medial.center(X7)? == p
        }
        X10 => p == complement(&x(X1)?),
        X20 => p == kernel::reflect(&x(X4)?, &x(X3)?)?,
        X21 => {
            let i = x(X1)?;
            let euler_line = |vs: [HomPoint; 3]| -> Result<HomLine> {
                let s = SubTriangle::from_vertices(t, vs, None)?;
                Ok(kernel::join(&s.center(X3)?, &s.center(X4)?)?)
            };
            let [a, b, c] = vertices.clone();
            let lines = [
                euler_line([i.clone(), b.clone(), c.clone()])?,
                euler_line([a.clone(), i.clone(), c])?,
                euler_line([a, b, i])?,
                kernel::join(&x(X3)?, &x(X4)?)?,
            ];
            lines.iter().all(|l| l.contains(&p))
        }
        X25 => {
            let orthic = SubTriangle::base(t).derived(t, TriangleKind::Orthic)?;
            let tangential = SubTriangle::base(t).derived(t, TriangleKind::Tangential)?;
            (0..3).all(|k| kernel::collinear(orthic.vertex(k), tangential.vertex(k), &p))
        }
        X39 => p == kernel::midpoint(&x(BrocardOmega1)?, &x(BrocardOmega2)?)?,
        X40 => p == kernel::reflect(&x(X1)?, &x(X3)?)?,
        X54 => p == isogonal(t, &x(X5)?)?,
        X57 => p == isogonal(t, &x(X9)?)?,
        X64 => p == isogonal(t, &x(X20)?)?,
        X69 => p == isotomic(&x(X4)?)?,
        X76 => p == isotomic(&x(X6)?)?,
        X84 => p == isogonal(t, &x(X40)?)?,
        X355 => p == kernel::midpoint(&x(X4)?, &x(X8)?)?,
        X389 => {
            let d: Vec<Rational> = super::taylor_points(t)?
                .iter()
                .map(|q| kernel::squared_distance(&p, q, t))
                .collect::<std::result::Result<_, _>>()?;
            all_equal(&d)
        }
        BrocardOmega1 => isogonal(t, &p)? == x(BrocardOmega2)?,
        BrocardOmega2 => isogonal(t, &p)? == x(BrocardOmega1)?,
        VertexA => p == vertices[0],
        VertexB => p == vertices[1],
        VertexC => p == vertices[2],
    };
    Ok(ok)
}
