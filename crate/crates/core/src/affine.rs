//! Points, lines and planes in affine 3-space, and B-projection.
//!
//! Membership and equality are decided by exact rank checks. No direction or
//! normal is ever normalized, since that would need square roots.

use crate::blinalg::{b_cross, det3, quadrance_vec, rows, SymmetricForm, Vector3};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point3([FieldElement; 3]);

impl Point3 {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        if !(x.same_field(&y) && x.same_field(&z)) {
            return Err(Error::MixedFields);
        }
        Ok(Point3([x, y, z]))
    }

    pub fn from_ints(spec: FieldSpec, c: [i64; 3]) -> Self {
        Point3(c.map(|n| spec.int(n)))
    }

    pub fn origin(spec: FieldSpec) -> Self {
        Point3::from_ints(spec, [0, 0, 0])
    }

    pub fn spec(&self) -> FieldSpec {
        self.0[0].spec()
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.0
    }

    /// `self + v`.
    pub fn translate(&self, v: &Vector3) -> Point3 {
        let c = v.components();
        Point3(std::array::from_fn(|i| &self.0[i] + &c[i]))
    }
}

/// The vector from `x` to `y`, i.e. the affine difference `y − x`.
pub fn displacement(x: &Point3, y: &Point3) -> Result<Vector3> {
    if x.spec() != y.spec() {
        return Err(Error::MixedFields);
    }
    let [a, b, c] = std::array::from_fn(|i| &y.0[i] - &x.0[i]);
    Vector3::new(a, b, c)
}

fn parallel(v: &Vector3, w: &Vector3) -> bool {
    v.cross(w).is_zero()
}

/// A line through `base` with nonzero `direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    base: Point3,
    direction: Vector3,
}

impl Line {
    pub fn new(base: Point3, direction: Vector3) -> Result<Self> {
        if base.spec() != direction.spec() {
            return Err(Error::MixedFields);
        }
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Line { base, direction })
    }

    pub fn through(a: &Point3, b: &Point3) -> Result<Self> {
        Line::new(a.clone(), displacement(a, b)?)
    }

    pub fn base(&self) -> &Point3 {
        &self.base
    }

    pub fn direction(&self) -> &Vector3 {
        &self.direction
    }

    /// `x` lies on the line iff `x − base` is a multiple of the direction.
    pub fn contains(&self, x: &Point3) -> Result<bool> {
        Ok(parallel(&displacement(&self.base, x)?, &self.direction))
    }

    /// Equal lines: both directions and the base-to-base vector are all
    /// multiples of one another.
    pub fn same_line(&self, other: &Line) -> Result<bool> {
        let between = displacement(&self.base, &other.base)?;
        Ok(parallel(&self.direction, &other.direction) && parallel(&self.direction, &between))
    }
}

/// A plane through `base` spanned by two independent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    base: Point3,
    span1: Vector3,
    span2: Vector3,
}

impl Plane {
    pub fn new(base: Point3, span1: Vector3, span2: Vector3) -> Result<Self> {
        if base.spec() != span1.spec() || base.spec() != span2.spec() {
            return Err(Error::MixedFields);
        }
        if parallel(&span1, &span2) {
            return Err(Error::DegeneratePlane);
        }
        Ok(Plane { base, span1, span2 })
    }

    pub fn through(a: &Point3, b: &Point3, c: &Point3) -> Result<Self> {
        Plane::new(a.clone(), displacement(a, b)?, displacement(a, c)?)
    }

    pub fn base(&self) -> &Point3 {
        &self.base
    }

    pub fn spans(&self) -> (&Vector3, &Vector3) {
        (&self.span1, &self.span2)
    }

    pub fn contains(&self, x: &Point3) -> Result<bool> {
        let d = displacement(&self.base, x)?;
        Ok(det3(&rows(&self.span1, &self.span2, &d)).is_zero())
    }

    /// Same point set: the other base and both other spans lie in this plane.
    pub fn same_plane(&self, other: &Plane) -> Result<bool> {
        let span_in = |v: &Vector3| det3(&rows(&self.span1, &self.span2, v)).is_zero();
        Ok(self.contains(&other.base)? && span_in(&other.span1) && span_in(&other.span2))
    }
}

/// A B-normal of the plane: `span1 ×_B span2`.
pub fn plane_normal(plane: &Plane, b: &SymmetricForm) -> Result<Vector3> {
    b_cross(&plane.span1, &plane.span2, b)
}

/// `(axis ·_B target / Q_B(axis)) · axis`.
pub fn b_project(target: &Vector3, axis: &Vector3, b: &SymmetricForm) -> Result<Vector3> {
    let q = quadrance_vec(axis, b)?;
    if q.is_zero() {
        return Err(Error::NullAxis);
    }
    let coeff = crate::blinalg::b_dot(axis, target, b)?.checked_div(&q)?;
    Ok(axis.scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blinalg::b_dot;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn v(c: [i64; 3]) -> Vector3 {
        Vector3::from_ints(q(), c)
    }

    fn p(c: [i64; 3]) -> Point3 {
        Point3::from_ints(q(), c)
    }

    #[test]
    fn displacement_examples() {
        assert!(displacement(&p([4, 5, 6]), &p([4, 5, 6])).unwrap().is_zero());
        assert_eq!(displacement(&p([0, 0, 0]), &p([1, 2, 3])).unwrap(), v([1, 2, 3]));
        let (x, y, z) = (p([1, -2, 7]), p([0, 3, 3]), p([-5, 1, 2]));
        let chain = &displacement(&x, &y).unwrap() + &displacement(&y, &z).unwrap();
        assert_eq!(chain, displacement(&x, &z).unwrap());
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            displacement(&p([0, 0, 0]), &Point3::origin(f7)).unwrap_err(),
            Error::MixedFields
        );
    }

    #[test]
    fn plane_normal_examples() {
        let id = SymmetricForm::identity(q());
        let b123 = SymmetricForm::diagonal(q(), [1, 2, 3]).unwrap();
        let xy = Plane::new(p([0, 0, 0]), v([1, 0, 0]), v([0, 1, 0])).unwrap();
        assert_eq!(plane_normal(&xy, &id).unwrap(), v([0, 0, 1]));
        let pl = Plane::new(p([1, 1, 1]), v([1, 0, 1]), v([0, 1, 1])).unwrap();
        assert_eq!(plane_normal(&pl, &b123).unwrap(), v([-6, -3, 2]));
        assert_eq!(
            Plane::new(p([0, 0, 0]), v([1, 2, 3]), v([2, 4, 6])).unwrap_err(),
            Error::DegeneratePlane
        );
    }

    #[test]
    fn projection_examples() {
        let b = SymmetricForm::diagonal(q(), [1, 2, 3]).unwrap();
        assert_eq!(b_project(&v([1, 1, 0]), &v([1, 0, 0]), &b).unwrap(), v([1, 0, 0]));
        assert!(b_project(&v([0, 1, 1]), &v([1, 0, 0]), &b).unwrap().is_zero());
        let axis = v([2, -1, 1]);
        assert_eq!(b_project(&axis, &axis, &b).unwrap(), axis);
        let f7 = FieldSpec::prime(7).unwrap();
        let null = Vector3::from_ints(f7, [1, 2, 3]);
        assert_eq!(
            b_project(&null, &null, &SymmetricForm::identity(f7)).unwrap_err(),
            Error::NullAxis
        );
    }

    #[test]
    fn projection_residual_is_perpendicular() {
        let b = SymmetricForm::from_ints(q(), [2, 3, 1, 1, 0, -1]).unwrap();
        let (t, a) = (v([3, -1, 4]), v([1, 5, -9]));
        let pr = b_project(&t, &a, &b).unwrap();
        let residual = &t - &pr;
        assert!(b_dot(&residual, &a, &b).unwrap().is_zero());
        assert_eq!(b_project(&pr, &a, &b).unwrap(), pr);
    }

    #[test]
    fn zero_direction_rejected() {
        assert_eq!(Line::new(p([1, 1, 1]), v([0, 0, 0])).unwrap_err(), Error::ZeroDirection);
    }

    #[test]
    fn line_equality() {
        let l1 = Line::new(p([0, 0, 0]), v([1, 2, 3])).unwrap();
        let l2 = Line::new(p([2, 4, 6]), v([-2, -4, -6])).unwrap();
        let l3 = Line::new(p([1, 0, 0]), v([1, 2, 3])).unwrap();
        assert!(l1.same_line(&l2).unwrap());
        assert!(!l1.same_line(&l3).unwrap());
        assert!(l1.contains(&p([3, 6, 9])).unwrap());
        assert!(!l1.contains(&p([3, 6, 8])).unwrap());
    }

    #[test]
    fn plane_equality() {
        let a = Plane::through(&p([0, 0, 0]), &p([1, 0, 0]), &p([0, 1, 0])).unwrap();
        let b = Plane::through(&p([5, 5, 0]), &p([-1, 2, 0]), &p([3, 0, 0])).unwrap();
        let c = Plane::through(&p([0, 0, 1]), &p([1, 0, 1]), &p([0, 1, 1])).unwrap();
        assert!(a.same_plane(&b).unwrap());
        assert!(!a.same_plane(&c).unwrap());
    }
}
