use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::form::{det3_forms, monomials, Form};
use super::{Conic, Cubic, CurveError, Result};
use crate::centers::{Conjugation, SubTriangle};
use crate::kernel::{self, collinear, HomLine, HomPoint, RefTriangle};
use crate::linalg::{self, Mat3};
use crate::Rational;

/// Determinant of the matrix of second partials.
pub fn hessian_form(f: &Form) -> Form {
    let first: Vec<Form> = (0..3).map(|i| f.partial(i)).collect();
    let m: [[Form; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| first[i].partial(j)));
    det3_forms(&m)
}

/// `None` when the Hessian vanishes identically (for instance on a triple line).
pub fn hessian(k: &Cubic) -> Option<Cubic> {
    let h = hessian_form(&k.form());
    if h.is_zero() {
        return None;
    }
    Cubic::from_form(&h).ok()
}

/// All three first partials vanish at `p`.
pub fn is_singular_point(k: &Cubic, p: &HomPoint) -> bool {
    let f = k.form();
    let c = p.rational_coords();
    (0..3).all(|i| f.partial(i).eval(&c).is_zero())
}

/// `P − t·Q = line · residual`, up to scale of the residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilFactorization {
    pub t: Rational,
    pub line: HomLine,
    pub residual: Conic,
    /// Canonical form of `P − t·Q`.
    pub composition: Cubic,
}

/// Two independent points spanning `l`.
fn span(l: &HomLine) -> ([Rational; 3], [Rational; 3]) {
    let [l0, l1, l2] = l.rational_coords();
    let z = Rational::zero();
    let cands = [[l1.clone(), -l0.clone(), z.clone()], [l2.clone(), z.clone(), -l0], [z, l2, -l1]];
    let nonzero: Vec<_> = cands.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            if linalg::cross(&nonzero[i], &nonzero[j]).iter().any(|x| !x.is_zero()) {
                return (nonzero[i].clone(), nonzero[j].clone());
            }
        }
    }
    unreachable!("a nonzero line has a two-dimensional span")
}

/// Binary restriction `f(s·R0 + u·R1)` as coefficients of `s³, s²u, su², u³`.
fn restrict(f: &Form, r0: &[Rational; 3], r1: &[Rational; 3]) -> Vec<Rational> {
    let m: Mat3 = std::array::from_fn(|i| [r0[i].clone(), r1[i].clone(), Rational::zero()]);
    let g = f.substitute(&m);
    (0..=3).rev().map(|i| g.coeff(&[i, 3 - i, 0])).collect()
}

/// Finds `t` such that `P − t·Q` contains the line `l` and factors it.
pub fn line_component(p: &Cubic, q: &Cubic, l: &HomLine) -> Result<PencilFactorization> {
    let (fp, fq) = (p.form(), q.form());
    let (r0, r1) = span(l);
    let rp = restrict(&fp, &r0, &r1);
    let rq = restrict(&fq, &r0, &r1);
    let p_zero = rp.iter().all(Zero::is_zero);
    let Some(k) = rq.iter().position(|c| !c.is_zero()) else {
        return Err(if p_zero { CurveError::BothVanishOnLine } else { CurveError::NoLinearComponent });
    };
    let t = &rp[k] / &rq[k];
    if rp.iter().zip(&rq).any(|(a, b)| *a != &t * b) {
        return Err(CurveError::NoLinearComponent);
    }
    let g = fp.sub(&fq.scale(&t));
    let composition = Cubic::from_form(&g)?;
    let residual = divide_by_line(&composition, l)?;
    let product = Form::linear(&l.rational_coords()).mul(&residual.form());
    if Cubic::from_form(&product)? != composition {
        return Err(CurveError::NoLinearComponent);
    }
    Ok(PencilFactorization { t, line: l.clone(), residual, composition })
}

/// Exact quotient of a cubic by a linear form, via the nullspace of `[A | g]`
/// where column `j` of `A` is `l` times the `j`-th conic monomial.
fn divide_by_line(k: &Cubic, l: &HomLine) -> Result<Conic> {
    let cubic_mons = monomials(3);
    let conic_mons = monomials(2);
    let lc = l.coords();
    let mut rows = vec![vec![BigInt::zero(); conic_mons.len() + 1]; cubic_mons.len()];
    for (j, m) in conic_mons.iter().enumerate() {
        for (i, li) in lc.iter().enumerate() {
            let mut e = *m;
            e[i] += 1;
            let r = cubic_mons.iter().position(|c| *c == e).expect("cubic monomial");
            rows[r][j] += li;
        }
    }
    for (r, c) in k.coefficients().iter().enumerate() {
        rows[r][conic_mons.len()] = c.clone();
    }
    let null = linalg::echelon(&rows).nullspace();
    let v = null.into_iter().find(|v| !v[conic_mons.len()].is_zero()).ok_or(CurveError::NoLinearComponent)?;
    let coeffs = linalg::to_rationals(&v[..conic_mons.len()]);
    Conic::from_form(&Form::from_coefficients(2, &coeffs))
}

fn conjugate_forms(t: &RefTriangle, conj: Conjugation) -> [Form; 3] {
    let x = |i| Form::var(i);
    let base = [x(1).mul(&x(2)), x(2).mul(&x(0)), x(0).mul(&x(1))];
    match conj {
        Conjugation::Isotomic => base,
        Conjugation::Isogonal => {
            let sq = t.sq_sides();
            std::array::from_fn(|i| base[i].scale(&sq[i]))
        }
    }
}

/// `det[X; conj(X); pivot] = 0`, the locus of `X` collinear with its
/// conjugate and the pivot.
pub fn pivotal_cubic(t: &RefTriangle, pivot: &HomPoint, conj: Conjugation) -> Result<Cubic> {
    let row0 = std::array::from_fn(Form::var);
    let row1 = conjugate_forms(t, conj);
    let row2 = pivot.rational_coords().map(Form::constant);
    Cubic::from_form(&det3_forms(&[row0, row1, row2]))
}

/// The pivotal cubic of a sub-triangle, in reference coordinates.
/// `pivot` is given in reference coordinates.
pub fn pivotal_cubic_in(sub: &SubTriangle, pivot: &HomPoint, conj: Conjugation) -> Result<Cubic> {
    let local = pivotal_cubic(sub.metric(), &sub.to_local(pivot), conj)?;
    Cubic::from_form(&local.form().substitute(sub.frame().to_local_matrix()))
}

/// Whether `x`, its conjugate and `pivot` are collinear, with respect to
/// `sub` when given and the reference triangle otherwise.
pub fn pivotal_membership(
    t: &RefTriangle,
    pivot: &HomPoint,
    conj: Conjugation,
    sub: Option<&SubTriangle>,
    x: &HomPoint,
) -> Result<bool> {
    let image = match (sub, conj) {
        (Some(s), Conjugation::Isogonal) => s.isogonal(x)?,
        (Some(s), Conjugation::Isotomic) => s.isotomic(x)?,
        (None, c) => c.apply(t, x)?,
    };
    Ok(collinear(x, &image, pivot))
}

/// `P ↦ center + ratio·(P − center)` on normalized barycentrics:
/// `(1 − ratio)·c·1ᵀ + ratio·I`.
pub fn homothety_matrix(center: &HomPoint, ratio: &Rational) -> Result<Mat3> {
    if ratio.is_zero() {
        return Err(CurveError::ZeroRatio);
    }
    let c = kernel::normalize_affine(center)?;
    let k = Rational::one() - ratio;
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let diag = if i == j { ratio.clone() } else { Rational::zero() };
            &k * &c[i] + diag
        })
    }))
}

fn inverse_up_to_scale(m: &Mat3) -> Result<Mat3> {
    if linalg::det3(m).is_zero() {
        return Err(CurveError::SingularMatrix);
    }
    Ok(linalg::adjugate3(m))
}

/// Image of `c` under `m`: `p ∈ c ⇔ m·p ∈ transform_conic(m, c)`.
pub fn transform_conic(m: &Mat3, c: &Conic) -> Result<Conic> {
    Conic::from_form(&c.form().substitute(&inverse_up_to_scale(m)?))
}

pub fn transform_cubic(m: &Mat3, k: &Cubic) -> Result<Cubic> {
    Cubic::from_form(&k.form().substitute(&inverse_up_to_scale(m)?))
}

#[cfg(test)]
mod tests {
    use super::super::cubic_through;
    use super::*;
    use crate::centers::{eval_center, CenterId};

    fn pt(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    fn r(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn tri() -> RefTriangle {
        RefTriangle::from_int_sides(6, 9, 13).unwrap()
    }

    #[test]
    fn hessian_of_triangle() {
        let xyz = Cubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(hessian(&xyz), Some(xyz));
        let triple = Form::linear(&[r(1), r(2), r(-1)]).pow(3);
        assert!(hessian_form(&triple).is_zero());
        assert_eq!(hessian(&Cubic::from_form(&triple).unwrap()), None);
    }

    #[test]
    fn singular_point_of_nodal_cubic() {
        // y²z − x²(x + z) has a node at (0:0:1)
        let k = Cubic::from_ints([-1, 0, -1, 0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert!(is_singular_point(&k, &pt(0, 0, 1)));
        assert!(!is_singular_point(&k, &pt(0, 1, 0)));
    }

    #[test]
    fn synthetic_line_component() {
        let l = HomLine::from_ints(1, 2, -3).unwrap();
        let lf = Form::linear(&l.rational_coords());
        let k1 = Form::from_coefficients(2, &[r(1), r(0), r(2), r(-1), r(3), r(1)]);
        let p = Cubic::from_form(&lf.mul(&k1)).unwrap();
        // Q through three points of l: the three points on l are (1:1:1), (3:0:1), (1:-1:-1/3)
        let on_l = [pt(1, 1, 1), pt(3, 0, 1), pt(3, -3, -1)];
        assert!(on_l.iter().all(|q| l.contains(q)));
        let q = cubic_through(&[
            on_l[0].clone(),
            on_l[1].clone(),
            on_l[2].clone(),
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(0, 0, 1),
            pt(1, 2, 5),
            pt(2, 7, 1),
            pt(4, 1, 9),
        ])
        .unwrap();
        let fac = line_component(&p, &q, &l).unwrap();
        let g = p.form().sub(&q.form().scale(&fac.t));
        assert_eq!(Cubic::from_form(&g).unwrap(), fac.composition);
        assert_eq!(Cubic::from_form(&lf.mul(&fac.residual.form())).unwrap(), fac.composition);

        // two generic cubics through two common points of l
        let p2 = cubic_through(&[
            on_l[0].clone(),
            on_l[1].clone(),
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(0, 0, 1),
            pt(1, 1, 3),
            pt(2, 1, 1),
            pt(7, 1, 2),
            pt(1, 5, 8),
        ])
        .unwrap();
        let q2 = cubic_through(&[
            on_l[0].clone(),
            on_l[1].clone(),
            pt(1, 0, 0),
            pt(0, 1, 0),
            pt(0, 0, 1),
            pt(1, 2, 5),
            pt(2, 7, 1),
            pt(4, 1, 9),
            pt(5, 2, 2),
        ])
        .unwrap();
        assert_eq!(line_component(&p2, &q2, &l), Err(CurveError::NoLinearComponent));

        let k2 = Form::from_coefficients(2, &[r(2), r(1), r(0), r(1), r(-1), r(4)]);
        let q3 = Cubic::from_form(&lf.mul(&k2)).unwrap();
        assert_eq!(line_component(&p, &q3, &l), Err(CurveError::BothVanishOnLine));
    }

    #[test]
    fn homothety_images() {
        let t = tri();
        let m = homothety_matrix(&HomPoint::centroid(), &Rational::new((-1).into(), 2.into())).unwrap();
        let a = HomPoint::from_rationals(&linalg::mat3_vec(&m, &pt(1, 0, 0).rational_coords())).unwrap();
        assert_eq!(a, pt(0, 1, 1));
        let [a2, b2, c2] = t.sq_sides().clone();
        let z = Rational::zero();
        let circ = Conic::new(&[z.clone(), z.clone(), z, c2, b2, a2]).unwrap();
        let npc = transform_conic(&m, &circ).unwrap();
        for p in [pt(0, 1, 1), pt(1, 0, 1), pt(1, 1, 0)] {
            assert!(npc.contains(&p));
        }
        assert_eq!(homothety_matrix(&HomPoint::centroid(), &Rational::zero()), Err(CurveError::ZeroRatio));
    }

    #[test]
    fn pivotal_cubic_matches_membership() {
        let t = tri();
        let x = |id| eval_center(&t, id).unwrap();
        let thomson = pivotal_cubic(&t, &x(CenterId::X2), Conjugation::Isogonal).unwrap();
        for id in [CenterId::X1, CenterId::X2, CenterId::X3, CenterId::X4, CenterId::X6, CenterId::X9] {
            assert!(thomson.contains(&x(id)), "{id}");
            assert!(pivotal_membership(&t, &x(CenterId::X2), Conjugation::Isogonal, None, &x(id)).unwrap());
        }
        assert!(pivotal_membership(&t, &x(CenterId::X20), Conjugation::Isogonal, None, &x(CenterId::X3)).unwrap());
        let lucas = pivotal_cubic(&t, &x(CenterId::X69), Conjugation::Isotomic).unwrap();
        for id in [CenterId::X2, CenterId::X4, CenterId::X7, CenterId::X8, CenterId::X20, CenterId::X69] {
            assert!(lucas.contains(&x(id)), "{id}");
        }
    }

    #[test]
    fn darboux_is_centrally_symmetric() {
        let t = tri();
        let x = |id| eval_center(&t, id).unwrap();
        let darboux = pivotal_cubic(&t, &x(CenterId::X20), Conjugation::Isogonal).unwrap();
        let m = homothety_matrix(&x(CenterId::X3), &r(-1)).unwrap();
        assert_eq!(transform_cubic(&m, &darboux).unwrap(), darboux);
    }

    #[test]
    fn sub_triangle_pivotal_cubic() {
        let t = tri();
        let medial = crate::centers::derived_triangle(&t, crate::centers::TriangleKind::Medial).unwrap();
        let pivot = medial.center(CenterId::X2).unwrap();
        let k = pivotal_cubic_in(&medial, &pivot, Conjugation::Isogonal).unwrap();
        for v in medial.vertices() {
            assert!(k.contains(v));
        }
        for id in [CenterId::X1, CenterId::X3, CenterId::X4, CenterId::X6] {
            assert!(k.contains(&medial.center(id).unwrap()), "{id}");
        }
    }
}
