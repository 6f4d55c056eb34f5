use num_traits::{One, Zero};

use super::{Conic, CurveError, Result};
use crate::kernel::{self, collinear, join, meet, normalize_affine, squared_distance, HomLine, HomPoint, RefTriangle};
use crate::linalg::{self, Mat3};
use crate::Rational;

/// Pole of `l`: `adj(Q)·l`.
pub fn pole(c: &Conic, l: &HomLine) -> Result<HomPoint> {
    let adj = linalg::adjugate3(&c.matrix());
    HomPoint::from_rationals(&linalg::mat3_vec(&adj, &l.rational_coords())).map_err(|_| CurveError::DegenerateConic)
}

/// Pole of the line at infinity.
pub fn conic_center(c: &Conic) -> Result<HomPoint> {
    pole(c, &HomLine::at_infinity())
}

/// Restriction to the line at infinity, `z = −x − y`, as `(α, β, γ)` of
/// `αx² + 2βxy + γy²`.
fn at_infinity(c: &Conic) -> [Rational; 3] {
    let q = c.matrix();
    let alpha = &q[0][0] + &q[2][2] - &q[0][2] * Rational::from_integer(2.into());
    let gamma = &q[1][1] + &q[2][2] - &q[1][2] * Rational::from_integer(2.into());
    let beta = &q[2][2] + &q[0][1] - &q[0][2] - &q[1][2];
    [alpha, beta, gamma]
}

/// True iff the conic has two real perpendicular asymptotic directions.
///
/// If the points at infinity are `(x:y:−x−y)` with `αx² + 2βxy + γy² = 0`,
/// the product and sum of the roots give `x₁x₂ : y₁y₂ : x₁y₂ + x₂y₁ = γ : α : −2β`,
/// and the Conway form of orthogonality `b²x₁x₂ + a²y₁y₂ + SC(x₁y₂ + x₂y₁) = 0`
/// becomes `a²α + b²γ − 2·SC·β = 0`.
pub fn is_rectangular(c: &Conic, t: &RefTriangle) -> Result<bool> {
    let [alpha, beta, gamma] = at_infinity(c);
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return Err(CurveError::DegenerateAtInfinity);
    }
    let [a2, b2, _] = t.sq_sides();
    let sc = &t.conway()[2];
    let real = &beta * &beta - &alpha * &gamma > Rational::zero();
    let two = Rational::from_integer(2.into());
    let orthogonal = (a2 * &alpha + b2 * &gamma - two * sc * &beta).is_zero();
    Ok(real && orthogonal)
}

/// Matrix of `(x+y+z)²·|P − F|²` with `F` normalized.
fn focal_matrix(f: &HomPoint, t: &RefTriangle) -> Result<Mat3> {
    let nf = normalize_affine(f)?;
    let m: Mat3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let id = if i == j { Rational::one() } else { Rational::zero() };
            id - &nf[i]
        })
    });
    let [a2, b2, c2] = t.sq_sides();
    let half = Rational::new(1.into(), 2.into());
    let z = Rational::zero();
    let (ga, gb, gc) = (a2 * &half, b2 * &half, c2 * &half);
    // |d|² = −(a²vw + b²wu + c²uv) = −dᵀ G d
    let g: Mat3 = [[z.clone(), gc.clone(), gb.clone()], [gc, z.clone(), ga.clone()], [gb, ga, z]];
    let mt = linalg::mat3_transpose(&m);
    let mgm = linalg::mat3_mul(&mt, &linalg::mat3_mul(&g, &m));
    Ok(mgm.map(|row| row.map(|x| -x)))
}

/// Locus of `|PF|² = e2 · dist(P, l)²`.
pub fn conic_from_focus_directrix(t: &RefTriangle, f: &HomPoint, l: &HomLine, e2: &Rational) -> Result<Conic> {
    if l.contains(f) {
        return Err(CurveError::FocusOnDirectrix);
    }
    if *e2 <= Rational::zero() {
        return Err(CurveError::NonPositiveEccentricity);
    }
    let focal = focal_matrix(f, t)?;
    let (q1, q2) = kernel::finite_points_on(l)?;
    let n1 = normalize_affine(&q1)?;
    let n2 = normalize_affine(&q2)?;
    let lp = linalg::cross(&n1, &n2);
    let k = e2 * t.s2() / squared_distance(&q1, &q2, t)?;
    let m: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| &focal[i][j] - &k * &lp[i] * &lp[j]));
    Conic::from_matrix(&m)
}

/// A central conic given by its two vertices on the focal axis and one focus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisConic {
    pub conic: Conic,
    pub e2: Rational,
    pub directrix: HomLine,
}

pub fn axis_conic(t: &RefTriangle, v1: &HomPoint, v2: &HomPoint, f: &HomPoint) -> Result<AxisConic> {
    for p in [v1, v2, f] {
        normalize_affine(p)?;
    }
    if v1 == v2 || v1 == f || v2 == f {
        return Err(kernel::KernelError::CoincidentArguments.into());
    }
    if !collinear(v1, v2, f) {
        return Err(CurveError::NotCollinear);
    }
    let cm = kernel::midpoint(v1, v2)?;
    let a2 = squared_distance(v1, v2, t)? / Rational::from_integer(4.into());
    let c2 = squared_distance(f, &cm, t)?;
    if c2.is_zero() || c2 == a2 {
        return Err(CurveError::ParabolicDegenerate);
    }
    let r = &a2 / &c2;
    let d = kernel::affine_combine(&[(&cm, Rational::one() - &r), (f, r)])?;
    let axis = join(v1, v2)?;
    let directrix = kernel::perpendicular_line_through(&axis, &d, t)?;
    let e2 = &c2 / &a2;
    let conic = conic_from_focus_directrix(t, f, &directrix, &e2)?;
    debug_assert!(conic.contains(v1) && conic.contains(v2));
    Ok(AxisConic { conic, e2, directrix })
}

/// Two lines, each given by two points.
pub type LinePair = ((HomPoint, HomPoint), (HomPoint, HomPoint));

/// Meets each pair of lines and reports the join of the first two meets and
/// whether all three meets are collinear.
pub fn pascal_check(pairs: &[LinePair; 3]) -> Result<(HomLine, bool)> {
    let meets =
        pairs.iter().map(|((p, q), (r, s))| Ok(meet(&join(p, q)?, &join(r, s)?)?)).collect::<Result<Vec<_>>>()?;
    let line = join(&meets[0], &meets[1])?;
    Ok((line, collinear(&meets[0], &meets[1], &meets[2])))
}

#[cfg(test)]
mod tests {
    use super::super::conic_through;
    use super::*;
    use crate::centers::{eval_center, CenterId};

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    fn tri() -> RefTriangle {
        RefTriangle::from_int_sides(6, 9, 13).unwrap()
    }

    fn circumcircle(t: &RefTriangle) -> Conic {
        let [a2, b2, c2] = t.sq_sides().clone();
        let z = Rational::zero();
        Conic::new(&[z.clone(), z.clone(), z, c2, b2, a2]).unwrap()
    }

    #[test]
    fn circumcircle_center_is_circumcenter() {
        let t = tri();
        let c = circumcircle(&t);
        assert_eq!(conic_center(&c).unwrap(), eval_center(&t, CenterId::X3).unwrap());
        assert!(!is_rectangular(&c, &t).unwrap());
    }

    #[test]
    fn pole_of_sideline_is_tangential_vertex() {
        let t = tri();
        let c = circumcircle(&t);
        let bc = HomLine::from_ints(1, 0, 0).unwrap();
        let [a2, b2, c2] = t.sq_sides().clone();
        let expected = HomPoint::new(-a2, b2, c2).unwrap();
        assert_eq!(pole(&c, &bc).unwrap(), expected);
    }

    #[test]
    fn degenerate_pole() {
        // x² has adjugate zero
        let c = Conic::from_ints([1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(conic_center(&c), Err(CurveError::DegenerateConic));
    }

    #[test]
    fn circumconic_through_orthocenter_is_rectangular() {
        let t = tri();
        let h = eval_center(&t, CenterId::X4).unwrap();
        let pts = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), h, pt(2, 3, 5)];
        let c = conic_through(&pts).unwrap();
        assert!(is_rectangular(&c, &t).unwrap());
        let other = conic_through(&[pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(2, 3, 5)]).unwrap();
        assert!(!is_rectangular(&other, &t).unwrap());
    }

    #[test]
    fn line_at_infinity_component() {
        // (x+y+z)·x
        let c = Conic::new(&[2, 0, 0, 1, 1, 0].map(|v| Rational::new(v.into(), 2.into()))).unwrap();
        assert_eq!(is_rectangular(&c, &tri()), Err(CurveError::DegenerateAtInfinity));
    }

    #[test]
    fn axis_conics_on_euler_line() {
        let t = tri();
        let x = |id| eval_center(&t, id).unwrap();
        let yff = axis_conic(&t, &x(CenterId::X2), &x(CenterId::X4), &x(CenterId::X3)).unwrap();
        assert_eq!(yff.e2, Rational::from_integer(4.into()));
        assert!(yff.directrix.contains(&x(CenterId::X5)));
        let l = axis_conic(&t, &x(CenterId::X2), &x(CenterId::X20), &x(CenterId::X4)).unwrap();
        assert_eq!(l.e2, Rational::from_integer(4.into()));
        assert!(l.directrix.contains(&x(CenterId::X3)));
        assert!(l.conic.contains(&x(CenterId::X2)) && l.conic.contains(&x(CenterId::X20)));
        let mid = kernel::midpoint(&x(CenterId::X2), &x(CenterId::X4)).unwrap();
        assert_eq!(axis_conic(&t, &x(CenterId::X2), &x(CenterId::X4), &mid), Err(CurveError::ParabolicDegenerate));
        assert_eq!(axis_conic(&t, &x(CenterId::X2), &x(CenterId::X4), &x(CenterId::X1)), Err(CurveError::NotCollinear));
    }

    #[test]
    fn focus_directrix_defining_identity() {
        let t = tri();
        let f = pt(1, 2, 3);
        let l = HomLine::from_ints(1, -1, 2).unwrap();
        let c = conic_from_focus_directrix(&t, &f, &l, &Rational::one()).unwrap();
        let d =
            |p: &HomPoint| squared_distance(p, &f, &t).unwrap() - kernel::point_line_distance_sq(p, &l, &t).unwrap();
        for p in [pt(1, 1, 1), pt(3, -1, 4), pt(0, 2, 5)] {
            let expect_on = d(&p).is_zero();
            assert_eq!(c.contains(&p), expect_on);
        }
        // Points equidistant along the axis: the vertex is the midpoint of F and the foot.
        let foot = kernel::foot_of_perpendicular(&f, &l, &t).unwrap();
        let vertex = kernel::midpoint(&f, &foot).unwrap();
        assert!(c.contains(&vertex));
        assert_eq!(conic_from_focus_directrix(&t, &foot, &l, &Rational::one()), Err(CurveError::FocusOnDirectrix));
    }

    #[test]
    fn pascal_on_parabola() {
        let p = |t: i64| pt(t * t, 1, t);
        let h = [pt(1, 0, 0), pt(0, 1, 0), p(1), p(2), p(3), p(4)];
        // hexagon P0..P5, opposite sides P0P1/P3P4, P1P2/P4P5, P2P3/P5P0
        let side = |i: usize| (h[i].clone(), h[(i + 1) % 6].clone());
        let pairs = [(side(0), side(3)), (side(1), side(4)), (side(2), side(5))];
        assert!(pascal_check(&pairs).unwrap().1);
        let off = [pt(1, 2, 3), pt(2, 5, 1), pt(3, 1, 7), pt(4, 4, 1), pt(1, 9, 2), pt(5, 3, 3)];
        let side = |i: usize| (off[i].clone(), off[(i + 1) % 6].clone());
        let pairs = [(side(0), side(3)), (side(1), side(4)), (side(2), side(5))];
        assert!(!pascal_check(&pairs).unwrap().1);
    }
}
