#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetratrig::affine::Point3;
use tetratrig::blinalg::{SymmetricForm, Vector3};
use tetratrig::{FieldElement, FieldSpec, Tetrahedron};

pub const LARGE_PRIME: u64 = 10_007;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Over Q: `n/d` with `|n| ≤ 100`, `1 ≤ d ≤ 100`. Over F_p: uniform.
pub fn element(rng: &mut ChaCha8Rng, spec: FieldSpec) -> FieldElement {
    match spec.modulus() {
        Some(p) => spec.int(rng.gen_range(0..p) as i64),
        None => spec.ratio(rng.gen_range(-100..=100), rng.gen_range(1..=100)).unwrap(),
    }
}

pub fn vector(rng: &mut ChaCha8Rng, spec: FieldSpec) -> Vector3 {
    let [x, y, z] = std::array::from_fn(|_| element(rng, spec));
    Vector3::new(x, y, z).unwrap()
}

pub fn point(rng: &mut ChaCha8Rng, spec: FieldSpec) -> Point3 {
    let [x, y, z] = std::array::from_fn(|_| element(rng, spec));
    Point3::new(x, y, z).unwrap()
}

pub fn random_form(rng: &mut ChaCha8Rng, spec: FieldSpec) -> SymmetricForm {
    loop {
        if let Ok(b) = SymmetricForm::new(std::array::from_fn(|_| element(rng, spec))) {
            return b;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Identity,
    Diag123,
    Random,
}

impl FormKind {
    pub const ALL: [FormKind; 3] = [FormKind::Identity, FormKind::Diag123, FormKind::Random];

    pub fn label(self) -> &'static str {
        match self {
            FormKind::Identity => "B=I",
            FormKind::Diag123 => "B=diag(1,2,3)",
            FormKind::Random => "B random",
        }
    }

    pub fn form(self, rng: &mut ChaCha8Rng, spec: FieldSpec) -> SymmetricForm {
        match self {
            FormKind::Identity => SymmetricForm::identity(spec),
            FormKind::Diag123 => SymmetricForm::diagonal(spec, [1, 2, 3]).unwrap(),
            FormKind::Random => random_form(rng, spec),
        }
    }
}

pub fn fields() -> [FieldSpec; 2] {
    [FieldSpec::rational(), FieldSpec::prime(LARGE_PRIME).unwrap()]
}

pub fn tetrahedron(rng: &mut ChaCha8Rng, b: &SymmetricForm) -> Tetrahedron {
    let spec = b.spec();
    Tetrahedron::new(std::array::from_fn(|_| point(rng, spec)), b.clone()).unwrap()
}

pub fn q() -> FieldSpec {
    FieldSpec::rational()
}

pub fn unit_tetrahedron() -> Tetrahedron {
    let pts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|c| Point3::from_ints(q(), c));
    Tetrahedron::new(pts, SymmetricForm::identity(q())).unwrap()
}

/// The printed variant of the `03;12` skew formula, which repeats the
/// `02;13` denominator.
pub fn printed_skew_03_12(q: &[FieldElement; 6], quadrume: &FieldElement) -> Option<FieldElement> {
    let [q01, q02, q03, q12, q13, q23] = q;
    let denom = (q02 * q13).times(4) - (q01 + q23 - q03 - q12).square();
    quadrume.checked_div(&denom).ok()
}
