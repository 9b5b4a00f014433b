//! Quadrance, quadrea, quadrume and the four spread-type invariants.
//!
//! Spread-type quantities divide by quadrances, which can vanish for
//! nonzero vectors over a finite field (or for indefinite forms). In that
//! case the quantity is undefined and the operation returns an error
//! naming the null object; no sentinel value is ever produced.

use crate::affine::{displacement, plane_normal, Line, Plane, Point3};
use crate::blinalg::{
    b_cross, b_dot, det3, mat_mul, quadrance_vec, rows, scalar_triple, transpose, SymmetricForm,
    Vector3,
};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::tetra::Tetrahedron;

/// `A(a, b, c) = (a + b + c)² − 2(a² + b² + c²)`.
pub fn archimedes(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<FieldElement> {
    if !(a.same_field(b) && a.same_field(c)) {
        return Err(Error::MixedFields);
    }
    Ok((a + b + c).square() - (a.square() + b.square() + c.square()).times(2))
}

/// The three rearrangements `4ab − (a+b−c)²`, `4ac − (a+c−b)²`, `4bc − (b+c−a)²`.
pub fn archimedes_alternatives(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<[FieldElement; 3]> {
    if !(a.same_field(b) && a.same_field(c)) {
        return Err(Error::MixedFields);
    }
    let form = |x: &FieldElement, y: &FieldElement, z: &FieldElement| {
        (x * y).times(4) - (x + y - z).square()
    };
    Ok([form(a, b, c), form(a, c, b), form(b, c, a)])
}

/// B-quadrance between two points.
pub fn quadrance(x: &Point3, y: &Point3, b: &SymmetricForm) -> Result<FieldElement> {
    quadrance_vec(&displacement(x, y)?, b)
}

/// Three points, possibly collinear or coincident.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle([Point3; 3]);

impl Triangle {
    pub fn new(a1: Point3, a2: Point3, a3: Point3) -> Result<Self> {
        if a1.spec() != a2.spec() || a1.spec() != a3.spec() {
            return Err(Error::MixedFields);
        }
        Ok(Triangle([a1, a2, a3]))
    }

    pub fn points(&self) -> &[Point3; 3] {
        &self.0
    }

    /// `(Q1, Q2, Q3)` where `Q_i` is the quadrance opposite `A_i`.
    pub fn quadrances(&self, b: &SymmetricForm) -> Result<[FieldElement; 3]> {
        let [a1, a2, a3] = &self.0;
        Ok([quadrance(a2, a3, b)?, quadrance(a1, a3, b)?, quadrance(a1, a2, b)?])
    }
}

/// B-quadrea: Archimedes' function of the three quadrances.
pub fn quadrea(t: &Triangle, b: &SymmetricForm) -> Result<FieldElement> {
    let [q1, q2, q3] = t.quadrances(b)?;
    archimedes(&q1, &q2, &q3)
}

/// The six cross-product quadrances `Q_B(v12 ×_B v31)`, `Q_B(v12 ×_B v23)`,
/// `Q_B(v23 ×_B v31)`, `Q_B(v21 ×_B v13)`, `Q_B(v21 ×_B v32)`,
/// `Q_B(v32 ×_B v13)`; each equals `det(B)/4` times the quadrea.
pub fn quadrea_cross_forms(t: &Triangle, b: &SymmetricForm) -> Result<[FieldElement; 6]> {
    let [a1, a2, a3] = &t.0;
    let v = |x: &Point3, y: &Point3| displacement(x, y);
    let (v12, v23, v31) = (v(a1, a2)?, v(a2, a3)?, v(a3, a1)?);
    let (v21, v32, v13) = (-&v12, -&v23, -&v31);
    let qc = |x: &Vector3, y: &Vector3| quadrance_vec(&b_cross(x, y, b)?, b);
    Ok([
        qc(&v12, &v31)?,
        qc(&v12, &v23)?,
        qc(&v23, &v31)?,
        qc(&v21, &v13)?,
        qc(&v21, &v32)?,
        qc(&v32, &v13)?,
    ])
}

/// B-quadrume `(4 / det B) · [v01, v02, v03]_B²`.
pub fn quadrume(t: &Tetrahedron) -> Result<FieldElement> {
    quadrume_based_at(t, 0)
}

/// The quadrume with the edge vectors based at vertex `base` instead of `A0`.
pub fn quadrume_based_at(t: &Tetrahedron, base: usize) -> Result<FieldElement> {
    let b = t.form();
    let others: Vec<usize> = (0..4).filter(|&i| i != base).collect();
    let e = |j: usize| t.edge_vector(base, j);
    let tp = scalar_triple(&e(others[0]), &e(others[1]), &e(others[2]), b)?;
    Ok(tp.square().times(4).checked_div(b.det())?)
}

/// `4 · det(M B Mᵀ)` with `M` the rows `v01, v02, v03`.
pub fn quadrume_gram(t: &Tetrahedron) -> FieldElement {
    let m = rows(&t.edge_vector(0, 1), &t.edge_vector(0, 2), &t.edge_vector(0, 3));
    det3(&mat_mul(&mat_mul(&m, t.form().matrix()), &transpose(&m))).times(4)
}

/// `4 · det(B) · det(M)²`.
pub fn quadrume_det_m(t: &Tetrahedron) -> FieldElement {
    let m = rows(&t.edge_vector(0, 1), &t.edge_vector(0, 2), &t.edge_vector(0, 3));
    (t.form().det() * det3(&m).square()).times(4)
}

/// The quadrume from the six quadrances alone, as one half of the 3×3
/// determinant of polarized quadrances at `A0`. Quadrances are ordered
/// `Q01, Q02, Q03, Q12, Q13, Q23`.
pub fn quadrume_cayley_menger(q: &[FieldElement; 6]) -> Result<FieldElement> {
    let [q01, q02, q03, q12, q13, q23] = q;
    let m12 = q01 + q02 - q12;
    let m13 = q01 + q03 - q13;
    let m23 = q02 + q03 - q23;
    let m = [
        [q01.times(2), m12.clone(), m13.clone()],
        [m12, q02.times(2), m23.clone()],
        [m13, m23, q03.times(2)],
    ];
    Ok(det3(&m).checked_div(&q01.spec().int(2))?)
}

fn nonnull(v: &Vector3, b: &SymmetricForm, err: Error) -> Result<FieldElement> {
    let q = quadrance_vec(v, b)?;
    if q.is_zero() {
        Err(err)
    } else {
        Ok(q)
    }
}

fn spread_of(v: &Vector3, w: &Vector3, b: &SymmetricForm, err: Error) -> Result<FieldElement> {
    let qv = nonnull(v, b, err.clone())?;
    let qw = nonnull(w, b, err)?;
    let d = b_dot(v, w, b)?;
    Ok(b.det().spec().one() - d.square().checked_div(&(qv * qw))?)
}

fn spread_of_via_cross(
    v: &Vector3,
    w: &Vector3,
    b: &SymmetricForm,
    err: Error,
) -> Result<FieldElement> {
    let qv = nonnull(v, b, err.clone())?;
    let qw = nonnull(w, b, err)?;
    let qc = quadrance_vec(&b_cross(v, w, b)?, b)?;
    Ok(qc.checked_div(&(b.det() * qv * qw))?)
}

/// B-spread between two lines, `1 − (v1·v2)² / (Q(v1) Q(v2))`.
pub fn spread(l1: &Line, l2: &Line, b: &SymmetricForm) -> Result<FieldElement> {
    spread_of(l1.direction(), l2.direction(), b, Error::NullDirection)
}

/// The spread rewritten through Lagrange's identity,
/// `Q(v1 ×_B v2) / (det B · Q(v1) Q(v2))`.
pub fn spread_via_cross(l1: &Line, l2: &Line, b: &SymmetricForm) -> Result<FieldElement> {
    spread_of_via_cross(l1.direction(), l2.direction(), b, Error::NullDirection)
}

/// B-dihedral spread: the spread-type formula applied to the planes' B-normals.
pub fn dihedral_spread(p1: &Plane, p2: &Plane, b: &SymmetricForm) -> Result<FieldElement> {
    spread_of(&plane_normal(p1, b)?, &plane_normal(p2, b)?, b, Error::NullNormal)
}

pub fn dihedral_spread_via_cross(p1: &Plane, p2: &Plane, b: &SymmetricForm) -> Result<FieldElement> {
    spread_of_via_cross(&plane_normal(p1, b)?, &plane_normal(p2, b)?, b, Error::NullNormal)
}

/// Dihedral spread between the planes spanned by `(v, w1)` and `(v, w2)`,
/// which share the direction `v`:
/// `det B · [v, w1, w2]² · Q(v) / (Q(v ×_B w1) · Q(v ×_B w2))`.
pub fn dihedral_spread_shared_edge(
    v: &Vector3,
    w1: &Vector3,
    w2: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    let n1 = nonnull(&b_cross(v, w1, b)?, b, Error::NullNormal)?;
    let n2 = nonnull(&b_cross(v, w2, b)?, b, Error::NullNormal)?;
    let num = b.det() * scalar_triple(v, w1, w2, b)?.square() * quadrance_vec(v, b)?;
    Ok(num.checked_div(&(n1 * n2))?)
}

/// Three concurrent lines through `apex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriLines {
    apex: Point3,
    directions: [Vector3; 3],
}

impl TriLines {
    pub fn new(apex: Point3, directions: [Vector3; 3]) -> Result<Self> {
        if directions.iter().any(|d| d.spec() != apex.spec()) {
            return Err(Error::MixedFields);
        }
        if directions.iter().any(Vector3::is_zero) {
            return Err(Error::ZeroDirection);
        }
        Ok(TriLines { apex, directions })
    }

    pub fn apex(&self) -> &Point3 {
        &self.apex
    }

    pub fn directions(&self) -> &[Vector3; 3] {
        &self.directions
    }

    pub fn line(&self, i: usize) -> Line {
        Line::new(self.apex.clone(), self.directions[i].clone()).expect("validated direction")
    }

    /// The plane through the apex spanned by directions `i` and `j`.
    pub fn plane(&self, i: usize, j: usize) -> Result<Plane> {
        Plane::new(
            self.apex.clone(),
            self.directions[i].clone(),
            self.directions[j].clone(),
        )
    }

    /// The pairwise B-cross directions `d1×d2, d1×d3, d2×d3`.
    pub fn crosses(&self, b: &SymmetricForm) -> Result<[Vector3; 3]> {
        let [d1, d2, d3] = &self.directions;
        Ok([b_cross(d1, d2, b)?, b_cross(d1, d3, b)?, b_cross(d2, d3, b)?])
    }
}

/// `[d1, d2, d3]_B² / (det B · Q(d1) Q(d2) Q(d3))`.
pub fn solid_spread(l: &TriLines, b: &SymmetricForm) -> Result<FieldElement> {
    let [d1, d2, d3] = l.directions();
    let mut denom = b.det().clone();
    for d in l.directions() {
        denom = denom * nonnull(d, b, Error::NullDirection)?;
    }
    Ok(scalar_triple(d1, d2, d3, b)?.square().checked_div(&denom)?)
}

/// The three factorizations of the solid spread through one dihedral
/// spread and two spreads, grouped around `l1`, `l2` and `l3` in turn:
///
/// * `E(Π12, Π13) · s(l1, l2) · s(l1, l3)`
/// * `E(Π12, Π23) · s(l1, l2) · s(l2, l3)`
/// * `E(Π13, Π23) · s(l1, l3) · s(l2, l3)`
pub fn solid_spread_factorizations(l: &TriLines, b: &SymmetricForm) -> Result<[FieldElement; 3]> {
    let (p12, p13, p23) = (l.plane(0, 1)?, l.plane(0, 2)?, l.plane(1, 2)?);
    let s = |i, j| spread(&l.line(i), &l.line(j), b);
    let (s12, s13, s23) = (s(0, 1)?, s(0, 2)?, s(1, 2)?);
    Ok([
        dihedral_spread(&p12, &p13, b)? * &s12 * &s13,
        dihedral_spread(&p12, &p23, b)? * &s12 * &s23,
        dihedral_spread(&p13, &p23, b)? * &s13 * &s23,
    ])
}

/// The solid spread of the three pairwise B-cross lines.
pub fn dual_solid_spread(l: &TriLines, b: &SymmetricForm) -> Result<FieldElement> {
    let crosses = l.crosses(b)?;
    for n in &crosses {
        nonnull(n, b, Error::NullCross)?;
    }
    solid_spread(&TriLines::new(l.apex().clone(), crosses)?, b)
}

/// `det B · [d1, d2, d3]⁴ / (Q(d1×d2) Q(d1×d3) Q(d2×d3))`.
pub fn dual_solid_spread_closed_form(l: &TriLines, b: &SymmetricForm) -> Result<FieldElement> {
    let [d1, d2, d3] = l.directions();
    let mut denom = b.det().spec().one();
    for n in &l.crosses(b)? {
        denom = denom * nonnull(n, b, Error::NullCross)?;
    }
    let t2 = scalar_triple(d1, d2, d3, b)?.square();
    Ok((b.det() * t2.square()).checked_div(&denom)?)
}

/// The three factorizations of the dual solid spread through one spread and
/// two dihedral spreads:
///
/// * `s(l1, l2) · E(Π12, Π13) · E(Π12, Π23)`
/// * `s(l1, l3) · E(Π12, Π13) · E(Π13, Π23)`
/// * `s(l2, l3) · E(Π12, Π23) · E(Π13, Π23)`
pub fn dual_solid_spread_factorizations(
    l: &TriLines,
    b: &SymmetricForm,
) -> Result<[FieldElement; 3]> {
    let (p12, p13, p23) = (l.plane(0, 1)?, l.plane(0, 2)?, l.plane(1, 2)?);
    let s = |i, j| spread(&l.line(i), &l.line(j), b);
    let e1213 = dihedral_spread(&p12, &p13, b)?;
    let e1223 = dihedral_spread(&p12, &p23, b)?;
    let e1323 = dihedral_spread(&p13, &p23, b)?;
    Ok([
        s(0, 1)? * &e1213 * &e1223,
        s(0, 2)? * &e1213 * &e1323,
        s(1, 2)? * &e1223 * &e1323,
    ])
}
