//! Row vectors, symmetric bilinear forms, and the B-products built on them.
//!
//! Vectors are row vectors and the adjugate multiplies on the right, so
//! `v ×_B w = (v × w) adj B`. Each identity-bearing product has two entry
//! points: the product itself, computed by composing B-dots and B-crosses,
//! and an `*_expanded` form evaluating the closed-form right-hand side.
//! Tests compare the two.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub type Mat3 = [[FieldElement; 3]; 3];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector3([FieldElement; 3]);

impl Vector3 {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        if !(x.same_field(&y) && x.same_field(&z)) {
            return Err(Error::MixedFields);
        }
        Ok(Vector3([x, y, z]))
    }

    pub fn from_ints(spec: FieldSpec, c: [i64; 3]) -> Self {
        Vector3(c.map(|n| spec.int(n)))
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Vector3::from_ints(spec, [0, 0, 0])
    }

    /// Standard basis vector `e_{i+1}`.
    pub fn basis(spec: FieldSpec, i: usize) -> Self {
        let mut c = [0; 3];
        c[i] = 1;
        Vector3::from_ints(spec, c)
    }

    pub fn spec(&self) -> FieldSpec {
        self.0[0].spec()
    }

    pub fn components(&self) -> &[FieldElement; 3] {
        &self.0
    }

    pub fn x(&self) -> &FieldElement {
        &self.0[0]
    }

    pub fn y(&self) -> &FieldElement {
        &self.0[1]
    }

    pub fn z(&self) -> &FieldElement {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, k: &FieldElement) -> Vector3 {
        Vector3(self.0.clone().map(|c| &c * k))
    }

    /// The Euclidean vector product.
    pub fn cross(&self, other: &Vector3) -> Vector3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        let det2 = |p: &FieldElement, q: &FieldElement, r: &FieldElement, s: &FieldElement| {
            FieldElement::sum_of_products(self.spec(), [(p, q), (&-r, s)])
        };
        Vector3([det2(a2, b3, a3, b2), det2(a3, b1, a1, b3), det2(a1, b2, a2, b1)])
    }

    /// Row vector times matrix, `v M`.
    pub fn times_matrix(&self, m: &Mat3) -> Vector3 {
        Vector3(std::array::from_fn(|j| {
            FieldElement::sum_of_products(self.spec(), (0..3).map(|i| (&self.0[i], &m[i][j])))
        }))
    }

    /// The Euclidean dot product `v wᵀ`.
    pub fn dot(&self, other: &Vector3) -> FieldElement {
        FieldElement::sum_of_products(self.spec(), self.0.iter().zip(&other.0))
    }
}

impl Add for &Vector3 {
    type Output = Vector3;
    fn add(self, rhs: &Vector3) -> Vector3 {
        Vector3(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: &Vector3) -> Vector3 {
        Vector3(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3(std::array::from_fn(|i| -&self.0[i]))
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det3(m: &Mat3) -> FieldElement {
    &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(a[0][0].spec().zero(), |acc, k| acc + &a[i][k] * &b[k][j])
        })
    })
}

pub fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

/// Stacks three vectors as the rows of a matrix.
pub fn rows(v1: &Vector3, v2: &Vector3, v3: &Vector3) -> Mat3 {
    [v1.0.clone(), v2.0.clone(), v3.0.clone()]
}

/// A non-degenerate symmetric form
///
/// ```text
///     | a1 b3 b2 |
/// B = | b3 a2 b1 |
///     | b2 b1 a3 |
/// ```
///
/// with its determinant and adjugate cached at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm {
    entries: [FieldElement; 6],
    matrix: Mat3,
    det: FieldElement,
    adjugate: Mat3,
}

impl SymmetricForm {
    /// Entries in the order `a1, a2, a3, b1, b2, b3`.
    pub fn new(entries: [FieldElement; 6]) -> Result<Self> {
        let spec = entries[0].spec();
        if entries.iter().any(|e| e.spec() != spec) {
            return Err(Error::MixedFields);
        }
        let [a1, a2, a3, b1, b2, b3] = &entries;
        let matrix = [
            [a1.clone(), b3.clone(), b2.clone()],
            [b3.clone(), a2.clone(), b1.clone()],
            [b2.clone(), b1.clone(), a3.clone()],
        ];
        let d = a1 * a2 * a3 + (b1 * b2 * b3).times(2)
            - a1 * b1.square()
            - a2 * b2.square()
            - a3 * b3.square();
        if d.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let c11 = a2 * a3 - b1.square();
        let c12 = b1 * b2 - a3 * b3;
        let c13 = b1 * b3 - a2 * b2;
        let c22 = a1 * a3 - b2.square();
        let c23 = b2 * b3 - a1 * b1;
        let c33 = a1 * a2 - b3.square();
        let adjugate = [
            [c11, c12.clone(), c13.clone()],
            [c12, c22, c23.clone()],
            [c13, c23, c33],
        ];
        Ok(SymmetricForm {
            entries,
            matrix,
            det: d,
            adjugate,
        })
    }

    pub fn from_ints(spec: FieldSpec, entries: [i64; 6]) -> Result<Self> {
        SymmetricForm::new(entries.map(|n| spec.int(n)))
    }

    pub fn identity(spec: FieldSpec) -> Self {
        SymmetricForm::diagonal(spec, [1, 1, 1]).expect("identity is non-degenerate")
    }

    pub fn diagonal(spec: FieldSpec, diag: [i64; 3]) -> Result<Self> {
        SymmetricForm::from_ints(spec, [diag[0], diag[1], diag[2], 0, 0, 0])
    }

    pub fn spec(&self) -> FieldSpec {
        self.det.spec()
    }

    /// `a1, a2, a3, b1, b2, b3`.
    pub fn entries(&self) -> &[FieldElement; 6] {
        &self.entries
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    pub fn det(&self) -> &FieldElement {
        &self.det
    }

    pub fn adjugate(&self) -> &Mat3 {
        &self.adjugate
    }
}

fn check(form: &SymmetricForm, vs: &[&Vector3]) -> Result<()> {
    let spec = form.spec();
    if vs.iter().all(|v| v.spec() == spec) {
        Ok(())
    } else {
        Err(Error::MixedFields)
    }
}

fn dot(v: &Vector3, w: &Vector3, b: &SymmetricForm) -> FieldElement {
    v.times_matrix(b.matrix()).dot(w)
}

fn cross(v: &Vector3, w: &Vector3, b: &SymmetricForm) -> Vector3 {
    v.cross(w).times_matrix(b.adjugate())
}

fn triple(v1: &Vector3, v2: &Vector3, v3: &Vector3, b: &SymmetricForm) -> FieldElement {
    dot(v1, &cross(v2, v3, b), b)
}

/// `v ·_B w = v B wᵀ`.
pub fn b_dot(v: &Vector3, w: &Vector3, b: &SymmetricForm) -> Result<FieldElement> {
    check(b, &[v, w])?;
    Ok(dot(v, w, b))
}

/// `Q_B(v) = v ·_B v`.
pub fn quadrance_vec(v: &Vector3, b: &SymmetricForm) -> Result<FieldElement> {
    b_dot(v, v, b)
}

/// `v ×_B w = (v × w) adj B`.
pub fn b_cross(v: &Vector3, w: &Vector3, b: &SymmetricForm) -> Result<Vector3> {
    check(b, &[v, w])?;
    Ok(cross(v, w, b))
}

/// `[v1, v2, v3]_B = v1 ·_B (v2 ×_B v3)`.
pub fn scalar_triple(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3])?;
    Ok(triple(v1, v2, v3, b))
}

/// `det(B) · det(M)` with `M` the stacked rows.
pub fn scalar_triple_expanded(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3])?;
    Ok(b.det() * det3(&rows(v1, v2, v3)))
}

/// `det(M B)`.
pub fn scalar_triple_det_mb(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3])?;
    Ok(det3(&mat_mul(&rows(v1, v2, v3), b.matrix())))
}

/// `⟨v1, v2, v3⟩_B = v1 ×_B (v2 ×_B v3)`.
pub fn vector_triple(v1: &Vector3, v2: &Vector3, v3: &Vector3, b: &SymmetricForm) -> Result<Vector3> {
    check(b, &[v1, v2, v3])?;
    Ok(cross(v1, &cross(v2, v3, b), b))
}

/// `det(B) · [(v1·v3) v2 − (v1·v2) v3]`.
pub fn vector_triple_expanded(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<Vector3> {
    check(b, &[v1, v2, v3])?;
    let lhs = v2.scale(&dot(v1, v3, b));
    let rhs = v3.scale(&dot(v1, v2, b));
    Ok((&lhs - &rhs).scale(b.det()))
}

/// `[v1, v2; v3, v4]_B = (v1 ×_B v2) ·_B (v3 ×_B v4)`.
pub fn quad_scalar(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    v4: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3, v4])?;
    Ok(dot(&cross(v1, v2, b), &cross(v3, v4, b), b))
}

/// `det(B) · [(v1·v3)(v2·v4) − (v1·v4)(v2·v3)]`.
pub fn quad_scalar_expanded(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    v4: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3, v4])?;
    let gram = dot(v1, v3, b) * dot(v2, v4, b) - dot(v1, v4, b) * dot(v2, v3, b);
    Ok(b.det() * gram)
}

/// `⟨v1, v2; v3, v4⟩_B = (v1 ×_B v2) ×_B (v3 ×_B v4)`.
pub fn quad_vector(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    v4: &Vector3,
    b: &SymmetricForm,
) -> Result<Vector3> {
    check(b, &[v1, v2, v3, v4])?;
    Ok(cross(&cross(v1, v2, b), &cross(v3, v4, b), b))
}

/// The two triple-product expansions of the quadruple vector product:
///
/// * `det(B) · ([v1,v2,v4] v3 − [v1,v2,v3] v4)`
/// * `det(B) · ([v1,v3,v4] v2 − [v2,v3,v4] v1)`
pub fn quad_vector_expansions(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    v4: &Vector3,
    b: &SymmetricForm,
) -> Result<(Vector3, Vector3)> {
    check(b, &[v1, v2, v3, v4])?;
    let first = &v3.scale(&triple(v1, v2, v4, b)) - &v4.scale(&triple(v1, v2, v3, b));
    let second = &v2.scale(&triple(v1, v3, v4, b)) - &v1.scale(&triple(v2, v3, v4, b));
    Ok((first.scale(b.det()), second.scale(b.det())))
}

/// `⟨v1, v2; v1, v3⟩_B` in closed form: `det(B)² · det(M) · v1`.
pub fn quad_vector_shared_expanded(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<Vector3> {
    check(b, &[v1, v2, v3])?;
    Ok(v1.scale(&(b.det().square() * det3(&rows(v1, v2, v3)))))
}

/// `[v2 ×_B v3, v3 ×_B v1, v1 ×_B v2]_B`.
pub fn triple_of_crosses(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3])?;
    Ok(triple(&cross(v2, v3, b), &cross(v3, v1, b), &cross(v1, v2, b), b))
}

/// `det(B) · [v1, v2, v3]_B²`.
pub fn triple_of_crosses_expanded(
    v1: &Vector3,
    v2: &Vector3,
    v3: &Vector3,
    b: &SymmetricForm,
) -> Result<FieldElement> {
    check(b, &[v1, v2, v3])?;
    Ok(b.det() * triple(v1, v2, v3, b).square())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn v(c: [i64; 3]) -> Vector3 {
        Vector3::from_ints(q(), c)
    }

    fn diag123() -> SymmetricForm {
        SymmetricForm::diagonal(q(), [1, 2, 3]).unwrap()
    }

    #[test]
    fn det_and_adjugate_of_diagonal() {
        let b = diag123();
        assert_eq!(b.det(), &q().int(6));
        assert_eq!(b.adjugate()[0][0], q().int(6));
        assert_eq!(b.adjugate()[1][1], q().int(3));
        assert_eq!(b.adjugate()[2][2], q().int(2));
        assert!(b.adjugate()[0][1].is_zero());
    }

    #[test]
    fn det3_matches_leibniz() {
        // Leibniz expansion over all six permutations, as an independent check.
        let m = rows(&v([2, -1, 3]), &v([0, 4, 5]), &v([7, 1, -2]));
        let perms = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ];
        let leibniz = perms.iter().fold(q().zero(), |acc, (p, sign)| {
            acc + (&m[0][p[0]] * &m[1][p[1]] * &m[2][p[2]]).times(*sign)
        });
        assert_eq!(det3(&m), leibniz);
        assert_eq!(det3(&m), q().int(-145));
    }

    #[test]
    fn degenerate_form_rejected() {
        assert_eq!(
            SymmetricForm::from_ints(q(), [1, 1, 1, 0, 0, 1]).unwrap_err(),
            Error::DegenerateForm
        );
        assert_eq!(
            SymmetricForm::diagonal(q(), [1, 0, 3]).unwrap_err(),
            Error::DegenerateForm
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            Vector3::new(q().one(), f7.one(), q().one()).unwrap_err(),
            Error::MixedFields
        );
        let w = Vector3::from_ints(f7, [1, 0, 0]);
        assert_eq!(b_dot(&v([1, 0, 0]), &w, &diag123()).unwrap_err(), Error::MixedFields);
        let mut e = [q().one(), q().one(), q().one(), q().zero(), q().zero(), q().zero()];
        e[4] = f7.zero();
        assert_eq!(SymmetricForm::new(e).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn b_dot_examples() {
        let id = SymmetricForm::identity(q());
        assert!(b_dot(&v([1, 0, 0]), &v([0, 1, 0]), &id).unwrap().is_zero());
        assert_eq!(b_dot(&v([1, 0, 1]), &v([0, 1, 1]), &diag123()).unwrap(), q().int(3));
        let f7 = FieldSpec::prime(7).unwrap();
        let id7 = SymmetricForm::identity(f7);
        let a = Vector3::from_ints(f7, [1, 2, 3]);
        let b = Vector3::from_ints(f7, [4, 5, 6]);
        assert_eq!(b_dot(&a, &b, &id7).unwrap(), f7.int(4));
    }

    #[test]
    fn quadrance_examples() {
        assert!(quadrance_vec(&v([0, 0, 0]), &diag123()).unwrap().is_zero());
        assert_eq!(quadrance_vec(&v([1, 0, 1]), &diag123()).unwrap(), q().int(4));
        let f7 = FieldSpec::prime(7).unwrap();
        let null = Vector3::from_ints(f7, [1, 2, 3]);
        assert!(!null.is_zero());
        assert!(quadrance_vec(&null, &SymmetricForm::identity(f7)).unwrap().is_zero());
    }

    #[test]
    fn b_cross_examples() {
        let id = SymmetricForm::identity(q());
        assert_eq!(b_cross(&v([1, 0, 0]), &v([0, 1, 0]), &id).unwrap(), v([0, 0, 1]));
        assert_eq!(
            b_cross(&v([1, 0, 1]), &v([0, 1, 1]), &diag123()).unwrap(),
            v([-6, -3, 2])
        );
        assert!(b_cross(&v([3, 1, 4]), &v([3, 1, 4]), &diag123()).unwrap().is_zero());
    }

    #[test]
    fn scalar_triple_examples() {
        let e = |i| Vector3::basis(q(), i);
        assert_eq!(scalar_triple(&e(0), &e(1), &e(2), &diag123()).unwrap(), q().int(6));
        assert!(scalar_triple(&e(0), &e(0), &e(2), &diag123()).unwrap().is_zero());
        let f7 = FieldSpec::prime(7).unwrap();
        let e7 = |i| Vector3::basis(f7, i);
        let id7 = SymmetricForm::identity(f7);
        assert_eq!(scalar_triple(&e7(0), &e7(1), &e7(2), &id7).unwrap(), f7.one());
    }

    #[test]
    fn vector_triple_examples() {
        let id = SymmetricForm::identity(q());
        let e = |i| Vector3::basis(q(), i);
        assert_eq!(vector_triple(&e(0), &e(0), &e(1), &id).unwrap(), v([0, -1, 0]));
        let (a, b) = (v([2, -1, 5]), v([1, 3, -2]));
        assert!(vector_triple(&a, &b, &b, &diag123()).unwrap().is_zero());
        assert!(vector_triple_expanded(&a, &b, &b, &diag123()).unwrap().is_zero());
        let (x, y, z) = (v([1, 0, 1]), v([0, 1, 1]), v([1, 1, 0]));
        let direct = vector_triple(&x, &y, &z, &diag123()).unwrap();
        assert_eq!(direct, vector_triple_expanded(&x, &y, &z, &diag123()).unwrap());
        // (x·z) = 1, (x·y) = 3, det = 6: 6·(y − 3z) = (−18, −12, 6)
        assert_eq!(direct, v([-18, -12, 6]));
    }

    #[test]
    fn quad_scalar_examples() {
        let (a, b) = (v([1, 0, 1]), v([0, 1, 1]));
        let b123 = diag123();
        assert_eq!(quad_scalar(&a, &b, &a, &b, &b123).unwrap(), q().int(66));
        assert_eq!(
            quad_scalar(&a, &b, &a, &b, &b123).unwrap(),
            quadrance_vec(&b_cross(&a, &b, &b123).unwrap(), &b123).unwrap()
        );
        assert!(quad_scalar(&a, &b, &a, &a, &b123).unwrap().is_zero());
    }

    #[test]
    fn quad_vector_examples() {
        let id = SymmetricForm::identity(q());
        let e = |i| Vector3::basis(q(), i);
        assert_eq!(quad_vector(&e(0), &e(1), &e(0), &e(2), &id).unwrap(), v([1, 0, 0]));
        assert_eq!(
            quad_vector_shared_expanded(&e(0), &e(1), &e(2), &id).unwrap(),
            v([1, 0, 0])
        );
        let (a, b, c) = (v([1, 2, 0]), v([0, 1, -3]), v([4, 4, 1]));
        assert!(quad_vector(&a, &b, &c, &c, &diag123()).unwrap().is_zero());
    }

    #[test]
    fn triple_of_crosses_examples() {
        let e = |i| Vector3::basis(q(), i);
        let id = SymmetricForm::identity(q());
        assert_eq!(triple_of_crosses(&e(0), &e(1), &e(2), &id).unwrap(), q().one());
        assert_eq!(
            triple_of_crosses(&e(0), &e(1), &e(2), &diag123()).unwrap(),
            q().int(216)
        );
        let (a, b) = (v([1, 2, 3]), v([-1, 0, 4]));
        let c = &a + &b;
        assert!(triple_of_crosses(&a, &b, &c, &diag123()).unwrap().is_zero());
    }

    #[test]
    fn adjugate_times_form_is_scaled_identity() {
        let b = SymmetricForm::from_ints(q(), [2, -1, 5, 3, 1, -2]).unwrap();
        let prod = mat_mul(b.adjugate(), b.matrix());
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { b.det().clone() } else { q().zero() };
                assert_eq!(prod[i][j], expected);
            }
        }
    }
}
