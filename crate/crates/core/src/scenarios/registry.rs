use std::sync::LazyLock;

use num_traits::Zero;

use super::trial::{all_of, holds, on_conic, on_cubic, same, Abort, Eval, Outcome, Trial};
use super::{ClaimKind, ClaimSpec, Expectation, Scenario};
use crate::centers::{
    anticomplement, derived_triangle, eval_center, CenterError, CenterId, Conjugation, SubTriangle,
    TriangleConstraints, TriangleKind,
};
use crate::curves::{
    axis_conic, conic_center, hessian, homothety_matrix, is_rectangular, is_singular_point, line_component,
    pascal_check, pivotal_cubic_in, pivotal_membership, transform_conic, transform_cubic, Conic, Cubic, CurveError,
    LinePair,
};
use crate::kernel::{self, join, HomLine, HomPoint, RefTriangle};
use crate::Rational;

use CenterId::*;
use ClaimKind::*;
use Expectation::*;

const fn claim(id: &'static str, kind: ClaimKind, expectation: Expectation) -> ClaimSpec {
    ClaimSpec { id, kind, expectation, note: None }
}

const fn noted(id: &'static str, kind: ClaimKind, expectation: Expectation, note: &'static str) -> ClaimSpec {
    ClaimSpec { id, kind, expectation, note: Some(note) }
}

fn scenario(
    id: &'static str,
    description: &'static str,
    claims: Vec<ClaimSpec>,
    eval: fn(&mut Trial) -> Result<(), Abort>,
) -> Scenario {
    Scenario { id, description, claims, constraints: TriangleConstraints::default(), eval }
}

pub(super) static REGISTRY: LazyLock<Vec<Scenario>> = LazyLock::new(|| {
    vec![
        scenario(
            "corr-excentral",
            "Base centers recognized as centers of the excentral triangle",
            vec![
                claim("I=H(exc)", PointEquality, MustPass),
                claim("O=E(exc)", PointEquality, MustPass),
                claim("Be=O(exc)", PointEquality, MustPass),
                claim("Mi=Sy(exc)", PointEquality, MustPass),
                noted(
                    "Mi'=M(exc)",
                    PointEquality,
                    VerdictOnly,
                    "table row: Mi' (isogonal of X9 in the base) = X2 of the excentral triangle",
                ),
                noted("Sp=Ta(exc)", PointEquality, VerdictOnly, "table row: X10 = X389 of the excentral triangle"),
                claim("Sy=Sy(orthic(exc))", PointEquality, MustPass),
                noted(
                    "Mi''=GOT(exc)",
                    PointEquality,
                    VerdictOnly,
                    "table row: isogonal of X9 in the excentral triangle = X25 of the excentral triangle",
                ),
            ],
            corr_excentral,
        ),
        scenario(
            "thm1-jerabek-excentral",
            "Conic through the excenters, X40 and X1: the excentral Jerabek hyperbola",
            vec![
                claim("contains-Mi", Membership, VerdictOnly),
                claim("contains-L", Membership, VerdictOnly),
                noted("center-is-O", ConicCenter, VerdictOnly, "the stated center is read as the circumcenter X3"),
                claim("rectangular", Rectangularity, MustPass),
                claim("isogonal-image-of-IO", Membership, VerdictOnly),
                claim("jerabek-oracle", CurveEquality, MustPass),
            ],
            thm1,
        ),
        scenario(
            "thm2-thomson-excentral",
            "Cubic through the vertices, feet of the altitudes, X4, X5 and the orthic centroid",
            vec![
                claim("contains-Mha", Membership, VerdictOnly),
                claim("contains-Mhb", Membership, VerdictOnly),
                claim("contains-Mhc", Membership, VerdictOnly),
                claim("contains-Sy", Membership, VerdictOnly),
                claim("contains-Sy(orthic)", Membership, VerdictOnly),
                claim("contains-GOT", Membership, VerdictOnly),
                noted("equals-thomson-orthic", CurveEquality, MustPass, "acute triangles only"),
            ],
            thm2,
        ),
        scenario(
            "thm3-darboux-excentral",
            "Cubic through the vertices, feet of the altitudes, X4, X5 and X3",
            vec![
                noted("pivotal-orthic", Collinearity, MustPass, "acute triangles only"),
                noted("equals-darboux-orthic", CurveEquality, MustPass, "acute triangles only"),
            ],
            thm3,
        ),
        scenario(
            "corr-medial",
            "Centers of the medial triangle as base centers (complement commutation)",
            vec![
                claim("I(med)=Sp", PointEquality, MustPass),
                claim("M(med)=M", PointEquality, MustPass),
                claim("O(med)=E", PointEquality, MustPass),
                claim("H(med)=O", PointEquality, MustPass),
                claim("L(med)=H", PointEquality, MustPass),
                claim("Na(med)=I", PointEquality, MustPass),
                claim("Ge(med)=Mi", PointEquality, MustPass),
                claim("SyA(med)=Sy", PointEquality, MustPass),
                noted("B3(med)=MB", PointEquality, MustPass, "the Bevan row maps a point to itself and is not checked"),
            ],
            corr_medial,
        ),
        scenario(
            "thm4-yff-medial",
            "Axis conic with vertices X2, X20 and focus X4, and the base Yff conic",
            vec![
                claim("e2=4", EccentricityValue, MustPass),
                claim("directrix-through-O", DirectrixIncidence, VerdictOnly),
                claim("yff-e2=4", EccentricityValue, VerdictOnly),
                claim("yff-directrix-through-E", DirectrixIncidence, VerdictOnly),
                noted("homothety-image", CurveEquality, MustPass, "image under h(X2, -1/2) is the base Yff conic"),
            ],
            thm4,
        ),
        scenario(
            "thm5-darboux-medial",
            "Cubic through the midpoints, medial antipodes, X10, X5 and X3",
            vec![
                claim("contains-H", Membership, VerdictOnly),
                claim("contains-H_A", Membership, VerdictOnly),
                claim("equals-medial-darboux", CurveEquality, MustPass),
            ],
            thm5,
        ),
        scenario(
            "thm6-lucas-medial",
            "Cubic through the vertices, midpoints, X2, X3 and X1",
            vec![
                claim("contains-Sy", Membership, VerdictOnly),
                claim("contains-Mi", Membership, VerdictOnly),
                claim("contains-H", Membership, VerdictOnly),
                claim("equals-medial-lucas", CurveEquality, MustPass),
                claim("pivotal-medial", Collinearity, MustPass),
            ],
            thm6,
        ),
        scenario(
            "corr-euler",
            "Centers of the Euler triangle as base centers (h(X4, 1/2) commutation)",
            vec![
                claim("I(eul)=M_IH", PointEquality, MustPass),
                claim("M(eul)=M_MH", PointEquality, MustPass),
                claim("O(eul)=E", PointEquality, MustPass),
                claim("H(eul)=H", PointEquality, MustPass),
                claim("Na(eul)=F", PointEquality, MustPass),
                claim("L(eul)=O", PointEquality, MustPass),
            ],
            corr_euler,
        ),
        scenario(
            "thm7-darboux-euler",
            "Cubic through the Euler-triangle vertices, midpoints, M_IH, X5 and X4",
            vec![
                claim("contains-O", Membership, VerdictOnly),
                claim("equals-euler-darboux", CurveEquality, MustPass),
                claim("antipodes-are-midpoints", PointEquality, MustPass),
            ],
            thm7,
        ),
        scenario(
            "corr-midarc",
            "Centers of the mid-arc triangle as base centers",
            vec![
                claim("O(ma)=O", PointEquality, MustPass),
                claim("H(ma)=I", PointEquality, MustPass),
                claim("Sy(ma)=M_MiI", PointEquality, VerdictOnly),
                claim("L(ma)=Be", PointEquality, VerdictOnly),
                claim("K(ma)=S", PointEquality, VerdictOnly),
            ],
            corr_midarc,
        ),
        scenario(
            "thm8-jerabek-midarc",
            "Conic through the mid-arc vertices, X3 and X1: the mid-arc Jerabek hyperbola",
            vec![
                claim("contains-M_MiI", Membership, VerdictOnly),
                noted("contains-S", Membership, VerdictOnly, "S is the Schiffler point X21"),
                claim("contains-Be'", Membership, VerdictOnly),
                claim("rectangular", Rectangularity, MustPass),
                claim("jerabek-oracle", CurveEquality, MustPass),
            ],
            thm8,
        ),
        scenario("cor1", "Pascal line of the hexagon I2 Be Mi I L I1", pascal_claims(None), cor1),
        scenario(
            "cor2",
            "Pascal line of the hexagon I2 Mi L Be I1 I",
            pascal_claims(Some("third pair read as (MiL, II1); the source lists (MiL, II2), which repeats a side")),
            cor2,
        ),
        scenario(
            "cor3",
            "Pascal line of the hexagon A2 Be' A3 I S O",
            pascal_claims(Some("Be is taken as X84 and S as X21, the points of the mid-arc conic")),
            cor3,
        ),
        scenario(
            "cor4",
            "Pascal line of the hexagon Be' S A3 A2 I O",
            pascal_claims(Some(
                "third pair read as (A3S, IO); the source lists (A3S, IA2), which repeats a side; Be is X84, S is X21",
            )),
            cor4,
        ),
        scenario(
            "cor5-euler-line-component",
            "Pencil of the two Euler-line cubics and its Euler-line component",
            vec![
                claim("line-component", Factorization, VerdictOnly),
                noted("hessian-X3", HessianMembership, MustPass, "tally: singular or inflection"),
                noted("hessian-X4", HessianMembership, MustPass, "tally: singular or inflection"),
                noted("hessian-X5", HessianMembership, MustPass, "tally: singular or inflection"),
            ],
            cor5,
        ),
        scenario(
            "defs-sanity",
            "Classical Jerabek, Thomson, Darboux and Lucas curves of the base triangle",
            vec![
                claim("jerabek-contains", Membership, MustPass),
                claim("jerabek-oracle", CurveEquality, MustPass),
                claim("thomson-contains", Membership, MustPass),
                claim("thomson-pivotal", Collinearity, MustPass),
                claim("darboux-contains", Membership, MustPass),
                claim("darboux-pivotal", Collinearity, MustPass),
                claim("darboux-symmetric", CurveEquality, MustPass),
                claim("lucas-contains", Membership, MustPass),
                claim("lucas-pivotal", Collinearity, MustPass),
            ],
            defs_sanity,
        ),
    ]
});

fn pascal_claims(note: Option<&'static str>) -> Vec<ClaimSpec> {
    let mut first = claim("pascal", Collinearity, VerdictOnly);
    first.note = note;
    vec![
        first,
        claim("hexagon-on-conic", Membership, VerdictOnly),
        noted("pascal-given-on-conic", Collinearity, MustPass, "applies when all six points lie on the conic"),
    ]
}

fn eq(lhs: Result<HomPoint, CenterError>, rhs: Result<HomPoint, CenterError>) -> Eval<Outcome> {
    Ok(same(&lhs?, &rhs?))
}

fn minus_half() -> Rational {
    Rational::new((-1).into(), 2.into())
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Isogonal image, with respect to `sub`, of a line: a circumconic of `sub`.
fn isogonal_image_of_line(sub: &SubTriangle, line: &HomLine) -> Eval<Conic> {
    let [l0, l1, l2] = sub.frame().local_line(line).rational_coords();
    let [a2, b2, c2] = sub.sq_sides();
    let h = ratio(1, 2);
    let z = Rational::zero();
    let local = Conic::new(&[z.clone(), z.clone(), z, l2 * c2 * &h, l1 * b2 * &h, l0 * a2 * &h])?;
    Conic::from_form(&local.form().substitute(sub.frame().to_local_matrix()))
}

/// Pivotal membership with respect to `sub`; vertices of `sub` lie on every
/// pivotal cubic and other sideline points are skipped.
fn pivotal(
    t: &RefTriangle,
    pivot: &HomPoint,
    conj: Conjugation,
    sub: Option<&SubTriangle>,
    p: &HomPoint,
) -> Eval<Outcome> {
    let vertex = match sub {
        Some(s) => s.vertices().contains(p),
        None => p.coords().iter().filter(|c| c.is_zero()).count() == 2,
    };
    if vertex {
        return Ok(Outcome::Pass);
    }
    match pivotal_membership(t, pivot, conj, sub, p) {
        Ok(ok) => Ok(holds(ok, p, pivot, "point, conjugate and pivot not collinear")),
        Err(CurveError::Center(CenterError::OnSideline(_))) => Ok(Outcome::NotApplicable),
        Err(e) => Err(e),
    }
}

fn labeled(labels: &[&str], pts: &[&HomPoint], f: impl Fn(&HomPoint) -> Eval<Outcome>) -> Eval<Outcome> {
    all_of(labels.iter().zip(pts).map(|(l, p)| (l.to_string(), f(p))).collect())
}

fn vertices() -> [HomPoint; 3] {
    [HomPoint::vertex(0), HomPoint::vertex(1), HomPoint::vertex(2)]
}

fn corr_excentral(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let exc = derived_triangle(t, TriangleKind::Excentral)?;
    let x = |id| eval_center(t, id);
    let e = |id| exc.center(id);
    tr.check("I=H(exc)", eq(x(X1), e(X4)));
    tr.check("O=E(exc)", eq(x(X3), e(X5)));
    tr.check("Be=O(exc)", eq(x(X40), e(X3)));
    tr.check("Mi=Sy(exc)", eq(x(X9), e(X6)));
    tr.check("Mi'=M(exc)", eq(x(X57), e(X2)));
    tr.check("Sp=Ta(exc)", eq(x(X10), e(X389)));
    let orth = exc.derived(t, TriangleKind::Orthic)?;
    tr.check("Sy=Sy(orthic(exc))", eq(x(X6), orth.center(X6)));
    tr.check("Mi''=GOT(exc)", eq(x(X9).and_then(|p| exc.isogonal(&p)), e(X25)));
    Ok(())
}

struct Thm1 {
    exc: SubTriangle,
    i1: HomPoint,
    i2: HomPoint,
    be: HomPoint,
    mi: HomPoint,
    l: HomPoint,
    i: HomPoint,
    o: HomPoint,
    conic: Conic,
}

fn thm1_setup(tr: &mut Trial) -> Result<Thm1, Abort> {
    let t = tr.t;
    let exc = derived_triangle(t, TriangleKind::Excentral)?;
    let [i1, i2, i3] = exc.vertices().clone();
    let (be, i, mi, l, o) = (tr.x(X40)?, tr.x(X1)?, tr.x(X9)?, tr.x(X20)?, tr.x(X3)?);
    let conic = tr.fit_conic("conic", &[&i1, &i2, &i3, &be, &i])?;
    tr.points(&[("I1", &i1), ("I2", &i2), ("I3", &i3), ("Be", &be), ("I", &i), ("Mi", &mi), ("L", &l)]);
    Ok(Thm1 { exc, i1, i2, be, mi, l, i, o, conic })
}

fn thm1(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let s = thm1_setup(tr)?;
    tr.check("contains-Mi", Ok(on_conic(&s.mi, &s.conic)));
    tr.check("contains-L", Ok(on_conic(&s.l, &s.conic)));
    tr.check("center-is-O", conic_center(&s.conic).map(|c| same(&c, &s.o)));
    tr.check(
        "rectangular",
        is_rectangular(&s.conic, t).map(|r| holds(r, &s.conic, "rectangular", "asymptotes not real and perpendicular")),
    );
    let images = (2..12)
        .map(|k| {
            let r = (|| -> Eval<Outcome> {
                let p = kernel::affine_combine(&[
                    (&s.i, Rational::from_integer((1 - k).into())),
                    (&s.o, Rational::from_integer(k.into())),
                ])?;
                match s.exc.isogonal(&p) {
                    Ok(q) => Ok(on_conic(&q, &s.conic)),
                    Err(CenterError::OnSideline(_)) => Ok(Outcome::NotApplicable),
                    Err(e) => Err(e.into()),
                }
            })();
            (format!("k={k}"), r)
        })
        .collect();
    tr.check("isogonal-image-of-IO", all_of(images));
    let oracle = (|| -> Eval<Outcome> {
        let euler = join(&s.exc.center(X3)?, &s.exc.center(X4)?)?;
        Ok(same(&s.conic, &isogonal_image_of_line(&s.exc, &euler)?))
    })();
    tr.check("jerabek-oracle", oracle);
    Ok(())
}

/// Base points used by the orthic cubics: vertices, feet, X4, X5.
fn orthic_fit_points(tr: &Trial, orth: &SubTriangle) -> Result<Vec<HomPoint>, Abort> {
    let mut pts: Vec<HomPoint> = vertices().into();
    pts.extend(orth.vertices().iter().cloned());
    pts.push(tr.x(X4)?);
    pts.push(tr.x(X5)?);
    Ok(pts)
}

fn thm2(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let orth = derived_triangle(t, TriangleKind::Orthic)?;
    let mut pts = orthic_fit_points(tr, &orth)?;
    pts.push(orth.center(X2)?);
    let k = tr.fit_cubic("cubic", &pts.iter().collect::<Vec<_>>())?;
    let f = orth.vertices();
    let mids = [kernel::midpoint(&f[1], &f[2])?, kernel::midpoint(&f[2], &f[0])?, kernel::midpoint(&f[0], &f[1])?];
    tr.check("contains-Mha", Ok(on_cubic(&mids[0], &k)));
    tr.check("contains-Mhb", Ok(on_cubic(&mids[1], &k)));
    tr.check("contains-Mhc", Ok(on_cubic(&mids[2], &k)));
    let (sy, got) = (tr.x(X6)?, tr.x(X25)?);
    tr.check("contains-Sy", Ok(on_cubic(&sy, &k)));
    tr.check("contains-Sy(orthic)", orth.center(X6).map(|p| on_cubic(&p, &k)).map_err(Into::into));
    tr.check("contains-GOT", Ok(on_cubic(&got, &k)));
    if t.is_acute() {
        let oracle = (|| -> Eval<Outcome> {
            let thomson = pivotal_cubic_in(&orth, &orth.center(X2)?, Conjugation::Isogonal)?;
            Ok(same(&k, &thomson))
        })();
        tr.check("equals-thomson-orthic", oracle);
    } else {
        tr.check("equals-thomson-orthic", Ok(Outcome::NotApplicable));
    }
    tr.points(&[("Sy", &sy), ("GOT", &got)]);
    Ok(())
}

fn thm3_cubic(tr: &mut Trial, orth: &SubTriangle) -> Result<(Vec<HomPoint>, Cubic), Abort> {
    let mut pts = orthic_fit_points(tr, orth)?;
    pts.push(tr.x(X3)?);
    let k = tr.fit_cubic("P", &pts.iter().collect::<Vec<_>>())?;
    Ok((pts, k))
}

fn thm3(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let orth = derived_triangle(t, TriangleKind::Orthic)?;
    let (pts, k) = thm3_cubic(tr, &orth)?;
    if !t.is_acute() {
        tr.check("pivotal-orthic", Ok(Outcome::NotApplicable));
        tr.check("equals-darboux-orthic", Ok(Outcome::NotApplicable));
        return Ok(());
    }
    let pivot = orth.center(X20)?;
    let labels = ["A", "B", "C", "H1", "H2", "H3", "X4", "X5", "X3"];
    let refs: Vec<&HomPoint> = pts.iter().collect();
    tr.check("pivotal-orthic", labeled(&labels, &refs, |p| pivotal(t, &pivot, Conjugation::Isogonal, Some(&orth), p)));
    let darboux = pivotal_cubic_in(&orth, &pivot, Conjugation::Isogonal);
    tr.check("equals-darboux-orthic", darboux.map(|d| same(&k, &d)));
    Ok(())
}

fn corr_medial(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let x = |id| eval_center(t, id);
    let m = |id| med.center(id);
    tr.check("I(med)=Sp", eq(m(X1), x(X10)));
    tr.check("M(med)=M", eq(m(X2), x(X2)));
    tr.check("O(med)=E", eq(m(X3), x(X5)));
    tr.check("H(med)=O", eq(m(X4), x(X3)));
    tr.check("L(med)=H", eq(m(X20), x(X4)));
    tr.check("Na(med)=I", eq(m(X8), x(X1)));
    tr.check("Ge(med)=Mi", eq(m(X7), x(X9)));
    let sya = m(X6).map(|p| med.to_base(&anticomplement(&med.to_local(&p))));
    tr.check("SyA(med)=Sy", eq(sya, x(X6)));
    tr.check("B3(med)=MB", eq(m(X76), x(X39)));
    Ok(())
}

fn thm4(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let (g, h, o, e, l) = (tr.x(X2)?, tr.x(X4)?, tr.x(X3)?, tr.x(X5)?, tr.x(X20)?);
    let four = Rational::from_integer(4.into());
    let new = axis_conic(t, &g, &l, &h)?;
    let yff = axis_conic(t, &g, &h, &o)?;
    tr.bits(new.conic.bits().max(yff.conic.bits()));
    tr.check("e2=4", Ok(holds(new.e2 == four, &new.e2, &four, "squared eccentricity")));
    tr.check("directrix-through-O", Ok(holds(new.directrix.contains(&o), &new.directrix, &o, "directrix misses X3")));
    tr.check("yff-e2=4", Ok(holds(yff.e2 == four, &yff.e2, &four, "squared eccentricity")));
    tr.check(
        "yff-directrix-through-E",
        Ok(holds(yff.directrix.contains(&e), &yff.directrix, &e, "directrix misses X5")),
    );
    let image = homothety_matrix(&g, &minus_half()).and_then(|m| transform_conic(&m, &new.conic));
    tr.check("homothety-image", image.map(|c| same(&c, &yff.conic)));
    tr.curve("conic", crate::curves::Curve::Conic(new.conic.clone()));
    tr.curve("yff", crate::curves::Curve::Conic(yff.conic.clone()));
    tr.points(&[("M", &g), ("L", &l), ("H", &h), ("O", &o), ("E", &e)]);
    Ok(())
}

/// Darboux cubic of the base through nine of its classical points.
fn darboux_base(tr: &mut Trial) -> Result<Cubic, Abort> {
    let exc = derived_triangle(tr.t, TriangleKind::Excentral)?;
    let [a, b, c] = vertices();
    let pts = [a, b, c, tr.x(X1)?, tr.x(X3)?, tr.x(X4)?, tr.x(X20)?, tr.x(X40)?, exc.vertex(0).clone()];
    tr.fit_cubic("darboux", &pts.iter().collect::<Vec<_>>())
}

fn thm5_cubic(tr: &mut Trial, med: &SubTriangle) -> Result<Cubic, Abort> {
    let mut pts: Vec<HomPoint> = med.vertices().to_vec();
    for i in 0..3 {
        pts.push(med.antipode(i)?);
    }
    pts.extend([tr.x(X10)?, tr.x(X5)?, tr.x(X3)?]);
    tr.fit_cubic("Q", &pts.iter().collect::<Vec<_>>())
}

fn thm5(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let k = thm5_cubic(tr, &med)?;
    let h = tr.x(X4)?;
    let ha = med.isogonal(&med.center(X20)?)?;
    tr.check("contains-H", Ok(on_cubic(&h, &k)));
    tr.check("contains-H_A", Ok(on_cubic(&ha, &k)));
    let darboux = darboux_base(tr)?;
    let g = tr.x(X2)?;
    let image = homothety_matrix(&g, &minus_half()).and_then(|m| transform_cubic(&m, &darboux));
    tr.check("equals-medial-darboux", image.map(|d| same(&k, &d)));
    tr.points(&[("H", &h), ("H_A", &ha)]);
    Ok(())
}

fn thm6(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let mut pts: Vec<HomPoint> = vertices().into();
    pts.extend(med.vertices().iter().cloned());
    pts.extend([tr.x(X2)?, tr.x(X3)?, tr.x(X1)?]);
    let k = tr.fit_cubic("cubic", &pts.iter().collect::<Vec<_>>())?;
    let (sy, mi, h) = (tr.x(X6)?, tr.x(X9)?, tr.x(X4)?);
    tr.check("contains-Sy", Ok(on_cubic(&sy, &k)));
    tr.check("contains-Mi", Ok(on_cubic(&mi, &k)));
    tr.check("contains-H", Ok(on_cubic(&h, &k)));

    let anti = derived_triangle(t, TriangleKind::Anticomplementary)?;
    let mut lucas_pts: Vec<HomPoint> = vertices().into();
    lucas_pts.extend(anti.vertices().iter().cloned());
    lucas_pts.extend([tr.x(X2)?, tr.x(X4)?, tr.x(X7)?]);
    let lucas = tr.fit_cubic("lucas", &lucas_pts.iter().collect::<Vec<_>>())?;
    let g = tr.x(X2)?;
    let image = homothety_matrix(&g, &minus_half()).and_then(|m| transform_cubic(&m, &lucas));
    tr.check("equals-medial-lucas", image.map(|l| same(&k, &l)));

    let pivot = med.center(X69)?;
    let labels = ["A", "B", "C", "Ma", "Mb", "Mc", "X2", "X3", "X1"];
    tr.check(
        "pivotal-medial",
        labeled(&labels, &pts.iter().collect::<Vec<_>>(), |p| pivotal(t, &pivot, Conjugation::Isotomic, Some(&med), p)),
    );
    tr.points(&[("Sy", &sy), ("Mi", &mi), ("H", &h)]);
    Ok(())
}

fn corr_euler(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let eul = derived_triangle(t, TriangleKind::EulerTriangle)?;
    let x = |id| eval_center(t, id);
    let u = |id| eul.center(id);
    let mid = |p: CenterId, q: CenterId| -> Result<HomPoint, CenterError> { Ok(kernel::midpoint(&x(p)?, &x(q)?)?) };
    tr.check("I(eul)=M_IH", eq(u(X1), mid(X1, X4)));
    tr.check("M(eul)=M_MH", eq(u(X2), mid(X2, X4)));
    tr.check("O(eul)=E", eq(u(X3), x(X5)));
    tr.check("H(eul)=H", eq(u(X4), x(X4)));
    tr.check("Na(eul)=F", eq(u(X8), x(X355)));
    tr.check("L(eul)=O", eq(u(X20), x(X3)));
    Ok(())
}

fn thm7(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let eul = derived_triangle(t, TriangleKind::EulerTriangle)?;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let (h, n, o) = (tr.x(X4)?, tr.x(X5)?, tr.x(X3)?);
    let mih = kernel::midpoint(&tr.x(X1)?, &h)?;
    let mut pts: Vec<HomPoint> = eul.vertices().to_vec();
    pts.extend(med.vertices().iter().cloned());
    pts.extend([mih.clone(), n.clone(), h.clone()]);
    let k = tr.fit_cubic("cubic", &pts.iter().collect::<Vec<_>>())?;
    tr.check("contains-O", Ok(on_cubic(&o, &k)));
    let darboux = darboux_base(tr)?;
    let image = homothety_matrix(&h, &ratio(1, 2)).and_then(|m| transform_cubic(&m, &darboux));
    tr.check("equals-euler-darboux", image.map(|d| same(&k, &d)));
    let antipodes = (0..3)
        .map(|i| {
            let r = kernel::reflect(eul.vertex(i), &n).map(|p| same(&p, med.vertex(i))).map_err(Into::into);
            (format!("vertex {i}"), r)
        })
        .collect();
    tr.check("antipodes-are-midpoints", all_of(antipodes));
    tr.points(&[("M_IH", &mih), ("E", &n), ("H", &h), ("O", &o)]);
    Ok(())
}

fn corr_midarc(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let ma = derived_triangle(t, TriangleKind::MidArc)?;
    let x = |id| eval_center(t, id);
    let m = |id| ma.center(id);
    tr.check("O(ma)=O", eq(m(X3), x(X3)));
    tr.check("H(ma)=I", eq(m(X4), x(X1)));
    let mmi = (|| -> Result<HomPoint, CenterError> { Ok(kernel::midpoint(&x(X9)?, &x(X1)?)?) })();
    tr.check("Sy(ma)=M_MiI", eq(m(X6), mmi));
    tr.check("L(ma)=Be", eq(m(X20), x(X40)));
    tr.check("K(ma)=S", eq(m(X54), x(X21)));
    Ok(())
}

struct Thm8 {
    ma: SubTriangle,
    a2: HomPoint,
    a3: HomPoint,
    be: HomPoint,
    i: HomPoint,
    s: HomPoint,
    o: HomPoint,
    mmi: HomPoint,
    conic: Conic,
}

fn thm8_setup(tr: &mut Trial) -> Result<Thm8, Abort> {
    let ma = derived_triangle(tr.t, TriangleKind::MidArc)?;
    let [a1, a2, a3] = ma.vertices().clone();
    let (o, i) = (tr.x(X3)?, tr.x(X1)?);
    let conic = tr.fit_conic("conic", &[&a1, &a2, &a3, &o, &i])?;
    let (be, s) = (tr.x(X84)?, tr.x(X21)?);
    let mmi = kernel::midpoint(&tr.x(X9)?, &i)?;
    tr.points(&[("A1", &a1), ("A2", &a2), ("A3", &a3), ("O", &o), ("I", &i), ("S", &s), ("Be'", &be), ("M_MiI", &mmi)]);
    Ok(Thm8 { ma, a2, a3, be, i, s, o, mmi, conic })
}

fn thm8(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let s = thm8_setup(tr)?;
    tr.check("contains-M_MiI", Ok(on_conic(&s.mmi, &s.conic)));
    tr.check("contains-S", Ok(on_conic(&s.s, &s.conic)));
    tr.check("contains-Be'", Ok(on_conic(&s.be, &s.conic)));
    tr.check(
        "rectangular",
        is_rectangular(&s.conic, t).map(|r| holds(r, &s.conic, "rectangular", "asymptotes not real and perpendicular")),
    );
    let oracle = (|| -> Eval<Outcome> {
        let euler = join(&s.ma.center(X3)?, &s.ma.center(X4)?)?;
        Ok(same(&s.conic, &isogonal_image_of_line(&s.ma, &euler)?))
    })();
    tr.check("jerabek-oracle", oracle);
    Ok(())
}

fn pair(p: &HomPoint, q: &HomPoint, r: &HomPoint, s: &HomPoint) -> LinePair {
    ((p.clone(), q.clone()), (r.clone(), s.clone()))
}

fn pascal(tr: &mut Trial, conic: &Conic, hexagon: [(&str, &HomPoint); 6], pairs: [LinePair; 3]) {
    let verdict = pascal_check(&pairs);
    let labels: Vec<&str> = hexagon.iter().map(|(l, _)| *l).collect();
    let pts: Vec<&HomPoint> = hexagon.iter().map(|(_, p)| *p).collect();
    let on = labeled(&labels, &pts, |p| Ok(on_conic(p, conic)));
    let outcome = |v: &Result<(HomLine, bool), CurveError>| -> Eval<Outcome> {
        match v {
            Ok((line, ok)) => Ok(holds(*ok, line, "third meet", "the three meets are not collinear")),
            Err(e) => Err(e.clone()),
        }
    };
    tr.check("pascal", outcome(&verdict));
    let on_conic_all = matches!(on, Ok(Outcome::Pass));
    tr.check("hexagon-on-conic", on);
    tr.check("pascal-given-on-conic", if on_conic_all { outcome(&verdict) } else { Ok(Outcome::NotApplicable) });
}

fn cor1(tr: &mut Trial) -> Result<(), Abort> {
    let s = thm1_setup(tr)?;
    let (i1, i2, be, mi, l, i) = (&s.i1, &s.i2, &s.be, &s.mi, &s.l, &s.i);
    let pairs = [pair(i2, be, l, i), pair(be, mi, i1, l), pair(mi, i, i2, i1)];
    pascal(tr, &s.conic, [("I2", i2), ("Be", be), ("Mi", mi), ("I", i), ("L", l), ("I1", i1)], pairs);
    Ok(())
}

fn cor2(tr: &mut Trial) -> Result<(), Abort> {
    let s = thm1_setup(tr)?;
    let (i1, i2, be, mi, l, i) = (&s.i1, &s.i2, &s.be, &s.mi, &s.l, &s.i);
    let pairs = [pair(i2, mi, be, i1), pair(be, l, i, i2), pair(mi, l, i, i1)];
    pascal(tr, &s.conic, [("I2", i2), ("Mi", mi), ("L", l), ("Be", be), ("I1", i1), ("I", i)], pairs);
    Ok(())
}

fn cor3(tr: &mut Trial) -> Result<(), Abort> {
    let s = thm8_setup(tr)?;
    let (a2, a3, be, i, sc, o) = (&s.a2, &s.a3, &s.be, &s.i, &s.s, &s.o);
    let pairs = [pair(a2, be, sc, i), pair(i, a3, o, a2), pair(be, a3, o, sc)];
    pascal(tr, &s.conic, [("A2", a2), ("Be'", be), ("A3", a3), ("I", i), ("S", sc), ("O", o)], pairs);
    Ok(())
}

fn cor4(tr: &mut Trial) -> Result<(), Abort> {
    let s = thm8_setup(tr)?;
    let (a2, a3, be, i, sc, o) = (&s.a2, &s.a3, &s.be, &s.i, &s.s, &s.o);
    let pairs = [pair(be, o, a3, a2), pair(be, sc, i, a2), pair(a3, sc, i, o)];
    pascal(tr, &s.conic, [("Be'", be), ("S", sc), ("A3", a3), ("A2", a2), ("I", i), ("O", o)], pairs);
    Ok(())
}

fn cor5(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let orth = derived_triangle(t, TriangleKind::Orthic)?;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let (_, p) = thm3_cubic(tr, &orth)?;
    let q = thm5_cubic(tr, &med)?;
    let (o, h, n) = (tr.x(X3)?, tr.x(X4)?, tr.x(X5)?);
    let euler = join(&o, &h)?;
    tr.points(&[("O", &o), ("H", &h), ("E", &n)]);
    let fac = match line_component(&p, &q, &euler) {
        Ok(f) => f,
        Err(CurveError::NoLinearComponent) => {
            tr.check("line-component", Ok(holds(false, &p, &q, "restrictions to the Euler line are not proportional")));
            for id in ["hessian-X3", "hessian-X4", "hessian-X5"] {
                tr.check(id, Ok(Outcome::NotApplicable));
            }
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    tr.bits(fac.composition.bits());
    tr.check("line-component", Ok(Outcome::Pass));
    tr.curve("composition", crate::curves::Curve::Cubic(fac.composition.clone()));
    let hes = hessian(&fac.composition);
    for (id, pt) in [("hessian-X3", &o), ("hessian-X4", &h), ("hessian-X5", &n)] {
        let on_hessian = hes.as_ref().is_none_or(|k| k.contains(pt));
        let ok = fac.composition.contains(pt) && on_hessian;
        let detail = match &hes {
            Some(k) => format!("composition {}, hessian {}", fac.composition.eval(pt), k.eval(pt)),
            None => "hessian vanishes identically".into(),
        };
        tr.check(id, Ok(holds(ok, pt, &fac.composition, &detail)));
        if ok {
            let label = if is_singular_point(&fac.composition, pt) { "singular" } else { "inflection" };
            tr.tag(id, label);
        }
    }
    Ok(())
}

fn defs_sanity(tr: &mut Trial) -> Result<(), Abort> {
    let t = tr.t;
    let [a, b, c] = vertices();
    let exc = derived_triangle(t, TriangleKind::Excentral)?;
    let med = derived_triangle(t, TriangleKind::Medial)?;
    let anti = derived_triangle(t, TriangleKind::Anticomplementary)?;
    let p = |id| tr.x(id);
    let (x1, x2, x3, x4, x6, x7, x8) = (p(X1)?, p(X2)?, p(X3)?, p(X4)?, p(X6)?, p(X7)?, p(X8)?);
    let (x9, x20, x40, x57, x64, x69) = (p(X9)?, p(X20)?, p(X40)?, p(X57)?, p(X64)?, p(X69)?);
    let [i1, i2, i3] = exc.vertices().clone();
    let [m1, m2, m3] = med.vertices().clone();
    let [a1, a2, a3] = anti.vertices().clone();
    let sya = anticomplement(&x6);

    let jerabek = tr.fit_conic("jerabek", &[&a, &b, &c, &x3, &x4])?;
    tr.check("jerabek-contains", labeled(&["X6", "X64"], &[&x6, &x64], |q| Ok(on_conic(q, &jerabek))));
    let oracle = (|| -> Eval<Outcome> {
        Ok(same(&jerabek, &isogonal_image_of_line(&SubTriangle::base(t), &join(&x3, &x4)?)?))
    })();
    tr.check("jerabek-oracle", oracle);

    // A, B, C, the midpoints, X2, X6 already force X3, so the fit uses the excenters.
    let thomson = tr.fit_cubic("thomson", &[&a, &b, &c, &i1, &i2, &i3, &x1, &x2, &x3])?;
    let listed = ["Ma", "Mb", "Mc", "X6", "X9", "X57"];
    let listed_pts = [&m1, &m2, &m3, &x6, &x9, &x57];
    tr.check("thomson-contains", labeled(&listed, &listed_pts, |q| Ok(on_cubic(q, &thomson))));
    let all = ["Ma", "Mb", "Mc", "I1", "I2", "I3", "X1", "X2", "X3", "X6", "X9", "X57"];
    let all_pts = [&m1, &m2, &m3, &i1, &i2, &i3, &x1, &x2, &x3, &x6, &x9, &x57];
    tr.check("thomson-pivotal", labeled(&all, &all_pts, |q| pivotal(t, &x2, Conjugation::Isogonal, None, q)));

    let darboux = tr.fit_cubic("darboux", &[&a, &b, &c, &x1, &x3, &x4, &x20, &x40, &i1])?;
    tr.check("darboux-contains", labeled(&["I2", "I3"], &[&i2, &i3], |q| Ok(on_cubic(q, &darboux))));
    let all = ["I1", "I2", "I3", "X1", "X3", "X40"];
    let all_pts = [&i1, &i2, &i3, &x1, &x3, &x40];
    tr.check("darboux-pivotal", labeled(&all, &all_pts, |q| pivotal(t, &x20, Conjugation::Isogonal, None, q)));
    let sym = homothety_matrix(&x3, &Rational::from_integer((-1).into())).and_then(|m| transform_cubic(&m, &darboux));
    tr.check("darboux-symmetric", sym.map(|d| same(&d, &darboux)));

    let lucas = tr.fit_cubic("lucas", &[&a, &b, &c, &a1, &a2, &a3, &x2, &x4, &x7])?;
    tr.check("lucas-contains", labeled(&["X8", "SyA"], &[&x8, &sya], |q| Ok(on_cubic(q, &lucas))));
    let all = ["A'", "B'", "C'", "X2", "X4", "X7", "X8", "SyA"];
    let all_pts = [&a1, &a2, &a3, &x2, &x4, &x7, &x8, &sya];
    tr.check("lucas-pivotal", labeled(&all, &all_pts, |q| pivotal(t, &x69, Conjugation::Isotomic, None, q)));
    Ok(())
}
