//! Whole-tetrahedron analysis.
//!
//! [`analyze`] computes every invariant of a tetrahedron from its
//! definition. [`verify_identities`] then checks the closed-form and ratio
//! relations among those invariants, using only the report;
//! [`verify_geometry`] re-derives the factorization identities from the
//! vertices themselves. Tri-rectangular tetrahedra get their own closed
//! forms in [`tri_rectangular_checks`].
//!
//! Indexing follows the vertex order as given: `Q01` is the quadrance
//! between `A0` and `A1`, `s1;02` the spread at `A1` between the lines to
//! `A0` and `A2`, `E01` the dihedral spread along the edge `A0A1`, and so on.

use std::fmt;

use crate::affine::{b_project, displacement, Line, Plane, Point3};
use crate::blinalg::{b_dot, quadrance_vec, SymmetricForm, Vector3};
use crate::checks::{ratio, CheckResults, Outcome};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::trig::{self, TriLines};

/// The six edges in report order.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The four faces in report order; face `3 - m` is the one opposite `A_m`.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// Face spreads `s_{i;jk}` in report order.
pub const SPREADS: [(usize, usize, usize); 12] = [
    (0, 1, 2),
    (0, 1, 3),
    (0, 2, 3),
    (1, 0, 2),
    (1, 0, 3),
    (1, 2, 3),
    (2, 0, 1),
    (2, 0, 3),
    (2, 1, 3),
    (3, 0, 1),
    (3, 0, 2),
    (3, 1, 2),
];

pub fn edge_index(i: usize, j: usize) -> usize {
    let key = (i.min(j), i.max(j));
    EDGES.iter().position(|&e| e == key).expect("distinct vertex indices below 4")
}

pub fn face_index(i: usize, j: usize, k: usize) -> usize {
    let mut f = [i, j, k];
    f.sort_unstable();
    FACES.iter().position(|&g| g == f).expect("distinct vertex indices below 4")
}

pub fn spread_index(i: usize, j: usize, k: usize) -> usize {
    let key = (i, j.min(k), j.max(k));
    SPREADS.iter().position(|&s| s == key).expect("distinct vertex indices below 4")
}

/// The vertices other than those given, ascending.
fn others(exclude: &[usize]) -> Vec<usize> {
    (0..4).filter(|i| !exclude.contains(i)).collect()
}

/// Four points measured against a symmetric form. Coincident or coplanar
/// vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetrahedron {
    vertices: [Point3; 4],
    form: SymmetricForm,
}

impl Tetrahedron {
    pub fn new(vertices: [Point3; 4], form: SymmetricForm) -> Result<Self> {
        if vertices.iter().any(|p| p.spec() != form.spec()) {
            return Err(Error::MixedFields);
        }
        Ok(Tetrahedron { vertices, form })
    }

    pub fn spec(&self) -> FieldSpec {
        self.form.spec()
    }

    pub fn vertices(&self) -> &[Point3; 4] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point3 {
        &self.vertices[i]
    }

    pub fn form(&self) -> &SymmetricForm {
        &self.form
    }

    /// The vector `A_i A_j`.
    pub fn edge_vector(&self, i: usize, j: usize) -> Vector3 {
        displacement(&self.vertices[i], &self.vertices[j]).expect("validated field")
    }

    pub fn quadrance(&self, i: usize, j: usize) -> FieldElement {
        quadrance_vec(&self.edge_vector(i, j), &self.form).expect("validated field")
    }

    /// Vertex `k` of the result is vertex `perm[k]` of `self`.
    pub fn relabel(&self, perm: [usize; 4]) -> Tetrahedron {
        Tetrahedron {
            vertices: perm.map(|i| self.vertices[i].clone()),
            form: self.form.clone(),
        }
    }

    /// The three edge lines at `A_i`, towards the other vertices ascending.
    pub fn lines_at(&self, i: usize) -> Result<TriLines> {
        let o = others(&[i]);
        TriLines::new(self.vertices[i].clone(), [0, 1, 2].map(|n| self.edge_vector(i, o[n])))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UndefinedReason {
    /// An edge involved is B-null.
    NullEdge,
    /// A face normal involved is B-null.
    NullNormal,
    /// A pairwise B-vector product of edges at the vertex is B-null.
    NullCross,
    /// A face quadrea in the denominator vanishes.
    ZeroQuadrea,
    /// The opposite edges are parallel or the skew denominator vanishes.
    ZeroDenominator,
    /// The common B-perpendicular of two opposite edges is B-null.
    NullCommonPerpendicular,
}

impl UndefinedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UndefinedReason::NullEdge => "NullEdge",
            UndefinedReason::NullNormal => "NullNormal",
            UndefinedReason::NullCross => "NullCross",
            UndefinedReason::ZeroQuadrea => "ZeroQuadrea",
            UndefinedReason::ZeroDenominator => "ZeroDenominator",
            UndefinedReason::NullCommonPerpendicular => "NullCommonPerpendicular",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        use UndefinedReason::*;
        [NullEdge, NullNormal, NullCross, ZeroQuadrea, ZeroDenominator, NullCommonPerpendicular]
            .into_iter()
            .find(|r| r.as_str() == s)
    }
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Defined(FieldElement),
    Undefined(UndefinedReason),
}

impl Entry {
    pub fn value(&self) -> Option<&FieldElement> {
        match self {
            Entry::Defined(x) => Some(x),
            Entry::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Entry::Defined(_))
    }
}

fn entry(r: Result<FieldElement>, reason_for: impl Fn(&Error) -> UndefinedReason) -> Entry {
    match r {
        Ok(x) => Entry::Defined(x),
        Err(e) => Entry::Undefined(reason_for(&e)),
    }
}

/// The pairs of opposite edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkewPairing {
    P01_23,
    P02_13,
    P03_12,
}

impl SkewPairing {
    pub const ALL: [SkewPairing; 3] = [SkewPairing::P01_23, SkewPairing::P02_13, SkewPairing::P03_12];

    /// `(a, b, c, d)` for the edge pair `(A_a A_b, A_c A_d)`.
    pub fn vertices(self) -> (usize, usize, usize, usize) {
        match self {
            SkewPairing::P01_23 => (0, 1, 2, 3),
            SkewPairing::P02_13 => (0, 2, 1, 3),
            SkewPairing::P03_12 => (0, 3, 1, 2),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// `01;23` style label.
    pub fn label(self) -> String {
        let (a, b, c, d) = self.vertices();
        format!("{a}{b};{c}{d}")
    }

    pub fn parse(s: &str) -> Option<Self> {
        SkewPairing::ALL.into_iter().find(|p| p.label() == s)
    }
}

/// Every invariant of a tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    spec: FieldSpec,
    quadrances: [FieldElement; 6],
    quadreas: [FieldElement; 4],
    quadrume: FieldElement,
    spreads: [Entry; 12],
    dihedral: [Entry; 6],
    solid: [Entry; 4],
    dual_solid: [Entry; 4],
    richardson: Entry,
    skew: [Entry; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Quadrance(usize),
    Quadrea(usize),
    Quadrume,
    Spread(usize),
    Dihedral(usize),
    Solid(usize),
    DualSolid(usize),
    Richardson,
    Skew(usize),
}

impl Slot {
    fn all() -> Vec<Slot> {
        let mut v: Vec<Slot> = (0..6).map(Slot::Quadrance).collect();
        v.extend((0..4).map(Slot::Quadrea));
        v.push(Slot::Quadrume);
        v.extend((0..12).map(Slot::Spread));
        v.extend((0..6).map(Slot::Dihedral));
        v.extend((0..4).map(Slot::Solid));
        v.extend((0..4).map(Slot::DualSolid));
        v.push(Slot::Richardson);
        v.extend((0..3).map(Slot::Skew));
        v
    }

    fn key(self) -> String {
        match self {
            Slot::Quadrance(e) => format!("Q{}{}", EDGES[e].0, EDGES[e].1),
            Slot::Quadrea(f) => format!("A{}{}{}", FACES[f][0], FACES[f][1], FACES[f][2]),
            Slot::Quadrume => "V".to_string(),
            Slot::Spread(s) => {
                let (i, j, k) = SPREADS[s];
                format!("s{i};{j}{k}")
            }
            Slot::Dihedral(e) => format!("E{}{}", EDGES[e].0, EDGES[e].1),
            Slot::Solid(i) => format!("S{i}"),
            Slot::DualSolid(i) => format!("D{i}"),
            Slot::Richardson => "R".to_string(),
            Slot::Skew(p) => format!("R{}", SkewPairing::ALL[p].label()),
        }
    }
}

impl InvariantReport {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn q(&self, i: usize, j: usize) -> &FieldElement {
        &self.quadrances[edge_index(i, j)]
    }

    /// Quadrances in edge order `Q01, Q02, Q03, Q12, Q13, Q23`.
    pub fn quadrances(&self) -> &[FieldElement; 6] {
        &self.quadrances
    }

    pub fn quadrea(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.quadreas[face_index(i, j, k)]
    }

    pub fn quadrume(&self) -> &FieldElement {
        &self.quadrume
    }

    pub fn spread(&self, i: usize, j: usize, k: usize) -> &Entry {
        &self.spreads[spread_index(i, j, k)]
    }

    pub fn dihedral(&self, i: usize, j: usize) -> &Entry {
        &self.dihedral[edge_index(i, j)]
    }

    pub fn solid(&self, i: usize) -> &Entry {
        &self.solid[i]
    }

    pub fn dual_solid(&self, i: usize) -> &Entry {
        &self.dual_solid[i]
    }

    pub fn richardson(&self) -> &Entry {
        &self.richardson
    }

    pub fn skew(&self, p: SkewPairing) -> &Entry {
        &self.skew[p.index()]
    }

    /// All entry keys in report order.
    pub fn keys() -> Vec<String> {
        Slot::all().into_iter().map(Slot::key).collect()
    }

    fn slot(key: &str) -> Option<Slot> {
        Slot::all().into_iter().find(|s| s.key() == key)
    }

    pub fn get(&self, key: &str) -> Option<Entry> {
        let d = |x: &FieldElement| Entry::Defined(x.clone());
        Some(match InvariantReport::slot(key)? {
            Slot::Quadrance(i) => d(&self.quadrances[i]),
            Slot::Quadrea(i) => d(&self.quadreas[i]),
            Slot::Quadrume => d(&self.quadrume),
            Slot::Spread(i) => self.spreads[i].clone(),
            Slot::Dihedral(i) => self.dihedral[i].clone(),
            Slot::Solid(i) => self.solid[i].clone(),
            Slot::DualSolid(i) => self.dual_solid[i].clone(),
            Slot::Richardson => self.richardson.clone(),
            Slot::Skew(i) => self.skew[i].clone(),
        })
    }

    /// Overwrites one entry. Quadrances, quadreas and the quadrume are always
    /// defined; setting one of them to `Undefined`, or naming an unknown
    /// key, is refused.
    pub fn set(&mut self, key: &str, value: Entry) -> std::result::Result<(), String> {
        let slot = InvariantReport::slot(key).ok_or_else(|| format!("unknown entry {key:?}"))?;
        let always = |v: Entry| match v {
            Entry::Defined(x) => Ok(x),
            Entry::Undefined(_) => Err(format!("entry {key:?} cannot be undefined")),
        };
        match slot {
            Slot::Quadrance(i) => self.quadrances[i] = always(value)?,
            Slot::Quadrea(i) => self.quadreas[i] = always(value)?,
            Slot::Quadrume => self.quadrume = always(value)?,
            Slot::Spread(i) => self.spreads[i] = value,
            Slot::Dihedral(i) => self.dihedral[i] = value,
            Slot::Solid(i) => self.solid[i] = value,
            Slot::DualSolid(i) => self.dual_solid[i] = value,
            Slot::Richardson => self.richardson = value,
            Slot::Skew(i) => self.skew[i] = value,
        }
        Ok(())
    }

    /// `(key, entry)` pairs in report order.
    pub fn entries(&self) -> Vec<(String, Entry)> {
        InvariantReport::keys()
            .into_iter()
            .map(|k| {
                let e = self.get(&k).expect("known key");
                (k, e)
            })
            .collect()
    }
}

/// Computes every invariant from its definition.
pub fn analyze(t: &Tetrahedron) -> InvariantReport {
    let b = t.form();
    let spec = t.spec();
    let quadrances = EDGES.map(|(i, j)| t.quadrance(i, j));
    let q = |i: usize, j: usize| quadrances[edge_index(i, j)].clone();
    let quadreas = FACES.map(|[i, j, k]| {
        trig::archimedes(&q(j, k), &q(i, k), &q(i, j)).expect("validated field")
    });
    let quadrume = trig::quadrume(t).expect("validated field");

    let spreads = SPREADS.map(|(i, j, k)| {
        let line = |to: usize| Line::new(t.vertex(i).clone(), t.edge_vector(i, to));
        let s = line(j).and_then(|lj| trig::spread(&lj, &line(k)?, b));
        entry(s, |_| UndefinedReason::NullEdge)
    });

    let dihedral = EDGES.map(|(i, j)| {
        let o = others(&[i, j]);
        let plane = |k: usize| Plane::through(t.vertex(i), t.vertex(j), t.vertex(k));
        let e = plane(o[0]).and_then(|p1| trig::dihedral_spread(&p1, &plane(o[1])?, b));
        entry(e, |_| UndefinedReason::NullNormal)
    });

    let solid = [0, 1, 2, 3].map(|i| {
        let s = t.lines_at(i).and_then(|l| trig::solid_spread(&l, b));
        entry(s, |_| UndefinedReason::NullEdge)
    });

    let dual_solid = [0, 1, 2, 3].map(|i| {
        let d = t.lines_at(i).and_then(|l| trig::dual_solid_spread(&l, b));
        entry(d, |_| UndefinedReason::NullCross)
    });

    let area_product = quadreas.iter().fold(spec.one(), |acc, a| acc * a);
    let richardson = match (quadrume.square().times(16)).checked_div(&area_product) {
        Ok(r) => Entry::Defined(r),
        Err(_) => Entry::Undefined(UndefinedReason::ZeroQuadrea),
    };

    let skew = SkewPairing::ALL.map(|p| {
        entry(skew_quadrance(t, p), |e| match e {
            Error::NullCommonPerpendicular => UndefinedReason::NullCommonPerpendicular,
            _ => UndefinedReason::ZeroDenominator,
        })
    });

    InvariantReport {
        spec,
        quadrances,
        quadreas,
        quadrume,
        spreads,
        dihedral,
        solid,
        dual_solid,
        richardson,
        skew,
    }
}

/// Skew quadrance of a pair of opposite edges by projection, with the
/// points on both lines taken at the vertices `A_a` and `A_c`.
pub fn skew_quadrance(t: &Tetrahedron, pairing: SkewPairing) -> Result<FieldElement> {
    let zero = t.spec().zero();
    skew_quadrance_at(t, pairing, &zero, &zero)
}

/// Skew quadrance by projection, with `P_ab = A_a + λ·A_aA_b` and
/// `P_cd = A_c + μ·A_cA_d`: the B-quadrance of the B-projection of
/// `P_ab P_cd` onto `n = A_aA_b ×_B A_cA_d`.
pub fn skew_quadrance_at(
    t: &Tetrahedron,
    pairing: SkewPairing,
    lambda: &FieldElement,
    mu: &FieldElement,
) -> Result<FieldElement> {
    let b = t.form();
    let (a, bb, c, d) = pairing.vertices();
    let (u, w) = (t.edge_vector(a, bb), t.edge_vector(c, d));
    let n = crate::blinalg::b_cross(&u, &w, b)?;
    if n.is_zero() {
        return Err(Error::NotSkewOrDegenerate);
    }
    let p_ab = t.vertex(a).translate(&u.scale(lambda));
    let p_cd = t.vertex(c).translate(&w.scale(mu));
    let between = displacement(&p_ab, &p_cd)?;
    let proj = b_project(&between, &n, b).map_err(|e| match e {
        Error::NullAxis => Error::NullCommonPerpendicular,
        other => other,
    })?;
    quadrance_vec(&proj, b)
}

/// `4 Q_ab Q_cd − (Q_ac + Q_bd − Q_ad − Q_bc)²` from the quadrances in edge order.
pub fn skew_denominator(q: &[FieldElement; 6], pairing: SkewPairing) -> FieldElement {
    let (a, b, c, d) = pairing.vertices();
    let qq = |i, j| &q[edge_index(i, j)];
    (qq(a, b) * qq(c, d)).times(4) - (qq(a, c) + qq(b, d) - qq(a, d) - qq(b, c)).square()
}

/// Skew quadrance from the quadrances and quadrume alone.
pub fn skew_quadrance_closed_form(
    q: &[FieldElement; 6],
    quadrume: &FieldElement,
    pairing: SkewPairing,
) -> Result<FieldElement> {
    quadrume
        .checked_div(&skew_denominator(q, pairing))
        .map_err(|_| Error::NotSkewOrDegenerate)
}

/// Checks every relation among report entries that follows from the
/// closed-form formulas. Each verdict names the relation and the instance.
pub fn verify_identities(r: &InvariantReport) -> CheckResults {
    let mut out = CheckResults::new();
    let spec = r.spec();
    let q = |i, j| r.q(i, j).clone();
    let a = |i, j, k| r.quadrea(i, j, k).clone();
    let v = r.quadrume().clone();
    let s = |i, j, k| r.spread(i, j, k).value().cloned();
    let e = |i, j| r.dihedral(i, j).value().cloned();
    let sol = |i| r.solid(i).value().cloned();
    let dual = |i| r.dual_solid(i).value().cloned();
    let rich = r.richardson().value().cloned();

    for [i, j, k] in FACES {
        let arch = trig::archimedes(&q(j, k), &q(i, k), &q(i, j)).expect("one field");
        out.equal("quadrea-archimedes", format!("A{i}{j}{k}"), Some((a(i, j, k), arch)));
    }

    let cm = trig::quadrume_cayley_menger(r.quadrances()).expect("odd characteristic");
    out.equal("quadrume-cayley-menger", "V", Some((v.clone(), cm)));

    for (i, j, k) in SPREADS {
        let sides = s(i, j, k).map(|sv| (a(i, j, k), (q(i, j) * q(i, k) * sv).times(4)));
        out.equal(
            "quadrea-spread",
            format!("A{} = 4·Q{}·Q{}·s{i};{j}{k}", key3(i, j, k), key2(i, j), key2(i, k)),
            sides,
        );
    }

    for m in 0..4 {
        let o = others(&[m]);
        let (x, y, z) = (o[0], o[1], o[2]);
        let sides = (|| {
            let lhs = s(x, m, y)? * s(y, m, z)? * s(z, m, x)?;
            let rhs = s(x, m, z)? * s(y, m, x)? * s(z, m, y)?;
            Some((lhs, rhs))
        })();
        out.equal("alternating-spreads", format!("faces at A{m}"), sides);
    }

    for (i, j) in EDGES {
        let o = others(&[i, j]);
        let sides = (|| {
            let closed = ratio(&(q(i, j) * &v).times(4), &(a(i, j, o[0]) * a(i, j, o[1])))?;
            Some((e(i, j)?, closed))
        })();
        out.equal("dihedral-spread-formula", format!("E{i}{j}"), sides);
    }

    for p in SkewPairing::ALL {
        let (w, x, y, z) = p.vertices();
        let sides = (|| {
            let lhs = ratio(&(e(w, x)? * e(y, z)?), &(q(w, x) * q(y, z)))?;
            Some((lhs, rich.clone()?))
        })();
        out.equal("dihedral-spread-ratio", format!("E{w}{x}·E{y}{z}/(Q{w}{x}·Q{y}{z}) = R"), sides);
    }

    for i in 0..4 {
        let o = others(&[i]);
        let sides = (|| {
            let closed = ratio(&v, &(q(i, o[0]) * q(i, o[1]) * q(i, o[2])).times(4))?;
            Some((sol(i)?, closed))
        })();
        out.equal("solid-spread-formula", format!("S{i}"), sides);
    }

    for (i, j) in EDGES {
        let o = others(&[i, j]);
        let (k, l) = (o[0], o[1]);
        let sides = (|| {
            let lhs = ratio(&sol(i)?, &sol(j)?)?;
            let rhs = ratio(&(q(j, k) * q(j, l)), &(q(i, k) * q(i, l)))?;
            Some((lhs, rhs))
        })();
        out.equal("solid-spread-ratio-first", format!("S{i}/S{j}"), sides);
    }

    for p in SkewPairing::ALL {
        let (w, x, y, z) = p.vertices();
        let sides = (|| {
            let lhs = ratio(&(sol(w)? * sol(x)?), &(sol(y)? * sol(z)?))?;
            let rhs = ratio(&q(y, z).square(), &q(w, x).square())?;
            Some((lhs, rhs))
        })();
        out.equal("solid-spread-ratio-second", format!("S{w}S{x}/(S{y}S{z})"), sides);
    }

    let all_q_sq = r.quadrances().iter().fold(spec.one(), |acc, x| acc * x.square());
    for m in (0..4).rev() {
        let o = others(&[m]);
        let sides = (|| {
            let num = sol(o[0])? * sol(o[1])? * sol(o[2])?;
            let lhs = ratio(&num, &(q(m, o[0]) * q(m, o[1]) * q(m, o[2])))?;
            let rhs = ratio(&v.pow(3), &all_q_sq.times(64))?;
            Some((lhs, rhs))
        })();
        out.equal(
            "solid-spread-ratio-third",
            format!("S{}S{}S{}", o[0], o[1], o[2]),
            sides,
        );
    }

    for i in 0..4 {
        let o = others(&[i]);
        let sides = (|| {
            let faces = a(i, o[0], o[1]) * a(i, o[0], o[2]) * a(i, o[1], o[2]);
            let closed = ratio(&v.square().times(4), &faces)?;
            Some((dual(i)?, closed))
        })();
        out.equal("dual-solid-spread-formula", format!("D{i}"), sides);
    }

    for i in 0..4 {
        let o = others(&[i]);
        let sides = (|| {
            let lhs = ratio(&dual(i)?, &a(o[0], o[1], o[2]))?;
            Some((lhs, ratio(&rich.clone()?, &spec.int(4))?))
        })();
        out.equal(
            "dual-solid-quadrea-ratio",
            format!("D{i}/A{}{}{} = R/4", o[0], o[1], o[2]),
            sides,
        );
    }

    for p in SkewPairing::ALL {
        let sides = (|| {
            let closed = skew_quadrance_closed_form(r.quadrances(), &v, p).ok()?;
            Some((r.skew(p).value()?.clone(), closed))
        })();
        out.equal("skew-quadrance-formula", format!("R{}", p.label()), sides);
    }

    out
}

fn key2(i: usize, j: usize) -> String {
    let (x, y) = (i.min(j), i.max(j));
    format!("{x}{y}")
}

fn key3(i: usize, j: usize, k: usize) -> String {
    let mut f = [i, j, k];
    f.sort_unstable();
    format!("{}{}{}", f[0], f[1], f[2])
}

/// Re-derives the factorization identities from the vertices: quadrea
/// cross-product forms, the quadrume product and base-point identities,
/// Lagrange forms of spreads, the shared-edge dihedral formula, solid and
/// dual solid factorizations, and point independence of skew quadrances
/// for each `(λ, μ)` in `skew_params`.
pub fn verify_geometry(t: &Tetrahedron, skew_params: &[(FieldElement, FieldElement)]) -> CheckResults {
    let mut out = CheckResults::new();
    let b = t.form();
    let spec = t.spec();
    let four = spec.int(4);

    for [i, j, k] in FACES {
        let tri = trig::Triangle::new(t.vertex(i).clone(), t.vertex(j).clone(), t.vertex(k).clone())
            .expect("validated field");
        let area = trig::quadrea(&tri, b).expect("validated field");
        let target = (b.det() * &area).checked_div(&four).expect("odd characteristic");
        let forms = trig::quadrea_cross_forms(&tri, b).expect("validated field");
        for (n, form) in forms.into_iter().enumerate() {
            out.equal("quadrea-cross", format!("A{i}{j}{k} form {}", n + 1), Some((target.clone(), form)));
        }
    }

    let v = trig::quadrume(t).expect("validated field");
    out.equal("quadrume-product", "4·det(M B Mᵀ)", Some((v.clone(), trig::quadrume_gram(t))));
    out.equal("quadrume-product", "4·det B·det(M)²", Some((v.clone(), trig::quadrume_det_m(t))));
    for base in 1..4 {
        let other = trig::quadrume_based_at(t, base).expect("validated field");
        out.equal("quadrume-base-point", format!("based at A{base}"), Some((v.clone(), other)));
    }

    for (i, j, k) in SPREADS {
        let sides = (|| {
            let l1 = Line::new(t.vertex(i).clone(), t.edge_vector(i, j))?;
            let l2 = Line::new(t.vertex(i).clone(), t.edge_vector(i, k))?;
            Ok((trig::spread(&l1, &l2, b)?, trig::spread_via_cross(&l1, &l2, b)?))
        })();
        out.equal_or_undefined("spread-lagrange", format!("s{i};{j}{k}"), sides);
    }

    for (i, j) in EDGES {
        let o = others(&[i, j]);
        let sides = (|| {
            let p1 = Plane::through(t.vertex(i), t.vertex(j), t.vertex(o[0]))?;
            let p2 = Plane::through(t.vertex(i), t.vertex(j), t.vertex(o[1]))?;
            let def = trig::dihedral_spread(&p1, &p2, b)?;
            Ok((def, trig::dihedral_spread_via_cross(&p1, &p2, b)?))
        })();
        out.equal_or_undefined("dihedral-lagrange", format!("E{i}{j}"), sides.clone());
        let shared = (|| {
            let def = sides?.0;
            let (u, w1, w2) = (t.edge_vector(i, j), t.edge_vector(i, o[0]), t.edge_vector(i, o[1]));
            Ok((def, trig::dihedral_spread_shared_edge(&u, &w1, &w2, b)?))
        })();
        out.equal_or_undefined("dihedral-shared-edge", format!("E{i}{j}"), shared);
    }

    for i in 0..4 {
        let lines = t.lines_at(i);
        let solid = lines.clone().and_then(|l| trig::solid_spread(&l, b));
        let facts = lines.clone().and_then(|l| trig::solid_spread_factorizations(&l, b));
        for n in 0..3 {
            let sides = match (&solid, &facts) {
                (Ok(s), Ok(f)) => Ok((s.clone(), f[n].clone())),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            out.equal_or_undefined("solid-spread-factorization", format!("S{i} grouping {}", n + 1), sides);
        }

        let dual = lines.clone().and_then(|l| trig::dual_solid_spread(&l, b));
        let closed = lines.clone().and_then(|l| trig::dual_solid_spread_closed_form(&l, b));
        let sides = match (&dual, &closed) {
            (Ok(d), Ok(c)) => Ok((d.clone(), c.clone())),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        out.equal_or_undefined("dual-solid-closed-form", format!("D{i}"), sides);
        let facts = lines.and_then(|l| trig::dual_solid_spread_factorizations(&l, b));
        for n in 0..3 {
            let sides = match (&dual, &facts) {
                (Ok(d), Ok(f)) => Ok((d.clone(), f[n].clone())),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            out.equal_or_undefined("dual-solid-factorization", format!("D{i} grouping {}", n + 1), sides);
        }
    }

    for p in SkewPairing::ALL {
        let base = skew_quadrance(t, p);
        for (lambda, mu) in skew_params {
            let sides = base
                .clone()
                .and_then(|r0| Ok((r0, skew_quadrance_at(t, p, lambda, mu)?)));
            out.equal_or_undefined(
                "skew-point-independence",
                format!("R{} at λ={lambda}, μ={mu}", p.label()),
                sides,
            );
        }
    }

    out
}

/// Three mutually B-perpendicular vectors with nonzero quadrances, from
/// B-orthogonalizing `e1, e2, e3` in order with exact division.
pub fn tri_rectangular_frame(b: &SymmetricForm) -> Result<[Vector3; 3]> {
    let spec = b.spec();
    let mut frame: Vec<(Vector3, FieldElement)> = Vec::with_capacity(3);
    for i in 0..3 {
        let seed = Vector3::basis(spec, i);
        let mut u = seed.clone();
        for (prev, qprev) in &frame {
            let coeff = b_dot(&seed, prev, b)?.checked_div(qprev)?;
            u = &u - &prev.scale(&coeff);
        }
        let qu = quadrance_vec(&u, b)?;
        if qu.is_zero() {
            return Err(Error::NullPivot(i));
        }
        frame.push((u, qu));
    }
    let mut it = frame.into_iter().map(|(u, _)| u);
    Ok([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()])
}

/// The parameters `K1, K2, K3` of a tetrahedron B-tri-rectangular at `A0`.
pub fn tri_rectangular_params(t: &Tetrahedron) -> Result<[FieldElement; 3]> {
    let b = t.form();
    let v = [1, 2, 3].map(|j| t.edge_vector(0, j));
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if !b_dot(&v[i], &v[j], b)?.is_zero() {
            return Err(Error::NotTriRectangular);
        }
    }
    let k = v.map(|x| quadrance_vec(&x, b).expect("validated field"));
    if k.iter().any(FieldElement::is_zero) {
        return Err(Error::DegenerateParams("some K_i is zero"));
    }
    if [(0, 1), (0, 2), (1, 2)].iter().any(|&(i, j)| (&k[i] + &k[j]).is_zero()) {
        return Err(Error::DegenerateParams("some K_i + K_j is zero"));
    }
    if (&k[0] * &k[1] + &k[0] * &k[2] + &k[1] * &k[2]).is_zero() {
        return Err(Error::DegenerateParams("K1K2 + K1K3 + K2K3 is zero"));
    }
    Ok(k)
}

/// Checks the tri-rectangular relations at `A0` against the definitional
/// report: the Pythagorean quadrances, de Gua's theorem, the unit values at
/// the right corner, closed forms for every spread, dihedral, solid and
/// dual solid spread in terms of `K1, K2, K3`, and the three sum relations.
pub fn tri_rectangular_checks(t: &Tetrahedron) -> Result<CheckResults> {
    let [k1, k2, k3] = tri_rectangular_params(t)?;
    let r = analyze(t);
    let spec = t.spec();
    let one = spec.one();
    let mut out = CheckResults::new();
    let div = |a: FieldElement, b: FieldElement| a.checked_div(&b).expect("validated parameters");
    let sigma = &k1 * &k2 + &k1 * &k3 + &k2 * &k3;
    let (k12, k13, k23) = (&k1 + &k2, &k1 + &k3, &k2 + &k3);

    let defined = |x: &Entry| x.value().cloned();

    out.equal("tri-rect-pythagoras", "Q12 = K1 + K2", Some((r.q(1, 2).clone(), k12.clone())));
    out.equal("tri-rect-pythagoras", "Q13 = K1 + K3", Some((r.q(1, 3).clone(), k13.clone())));
    out.equal("tri-rect-pythagoras", "Q23 = K2 + K3", Some((r.q(2, 3).clone(), k23.clone())));
    out.equal(
        "tri-rect-quadrume",
        "V = 4K1K2K3",
        Some((r.quadrume().clone(), (&k1 * &k2 * &k3).times(4))),
    );
    out.equal("tri-rect-quadrea", "A012 = 4K1K2", Some((r.quadrea(0, 1, 2).clone(), (&k1 * &k2).times(4))));
    out.equal("tri-rect-quadrea", "A013 = 4K1K3", Some((r.quadrea(0, 1, 3).clone(), (&k1 * &k3).times(4))));
    out.equal("tri-rect-quadrea", "A023 = 4K2K3", Some((r.quadrea(0, 2, 3).clone(), (&k2 * &k3).times(4))));
    let gua = r.quadrea(0, 1, 2) + r.quadrea(0, 1, 3) + r.quadrea(0, 2, 3);
    out.equal("de-gua", "A123 = A012 + A013 + A023", Some((r.quadrea(1, 2, 3).clone(), gua)));

    let corner: [(&str, &Entry); 8] = [
        ("s0;12", r.spread(0, 1, 2)),
        ("s0;13", r.spread(0, 1, 3)),
        ("s0;23", r.spread(0, 2, 3)),
        ("E01", r.dihedral(0, 1)),
        ("E02", r.dihedral(0, 2)),
        ("E03", r.dihedral(0, 3)),
        ("S0", r.solid(0)),
        ("D0", r.dual_solid(0)),
    ];
    for (key, x) in corner {
        out.equal("tri-rect-right-corner", format!("{key} = 1"), defined(x).map(|x| (x, one.clone())));
    }

    let spreads = [
        ((1, 0, 2), div(k2.clone(), k12.clone())),
        ((1, 0, 3), div(k3.clone(), k13.clone())),
        ((1, 2, 3), div(sigma.clone(), &k12 * &k13)),
        ((2, 0, 1), div(k1.clone(), k12.clone())),
        ((2, 0, 3), div(k3.clone(), k23.clone())),
        ((2, 1, 3), div(sigma.clone(), &k12 * &k23)),
        ((3, 0, 1), div(k1.clone(), k13.clone())),
        ((3, 0, 2), div(k2.clone(), k23.clone())),
        ((3, 1, 2), div(sigma.clone(), &k13 * &k23)),
    ];
    for ((i, j, k), closed) in spreads {
        out.equal(
            "tri-rect-spreads",
            format!("s{i};{j}{k}"),
            defined(r.spread(i, j, k)).map(|x| (x, closed)),
        );
    }

    let dihedral = [
        ((1, 2), div(&k3 * &k12, sigma.clone())),
        ((1, 3), div(&k2 * &k13, sigma.clone())),
        ((2, 3), div(&k1 * &k23, sigma.clone())),
    ];
    for ((i, j), closed) in dihedral {
        out.equal("tri-rect-dihedral", format!("E{i}{j}"), defined(r.dihedral(i, j)).map(|x| (x, closed)));
    }
    let e_sum = (|| Some(defined(r.dihedral(1, 2))? + defined(r.dihedral(1, 3))? + defined(r.dihedral(2, 3))?))();
    out.equal("tri-rect-dihedral-sum", "E12 + E13 + E23 = 2", e_sum.map(|s| (s, spec.int(2))));

    let solids = [
        (1, div(&k2 * &k3, &k12 * &k13)),
        (2, div(&k1 * &k3, &k12 * &k23)),
        (3, div(&k1 * &k2, &k13 * &k23)),
    ];
    for (i, closed) in solids {
        out.equal("tri-rect-solid", format!("S{i}"), defined(r.solid(i)).map(|x| (x, closed)));
    }
    let solid_rel = (|| {
        let (s1, s2, s3) = (defined(r.solid(1))?, defined(r.solid(2))?, defined(r.solid(3))?);
        let lhs = (&one - &s1 - &s2 - &s3).square();
        Some((lhs, (s1 * s2 * s3).times(4)))
    })();
    out.equal("tri-rect-solid-spread", "(1 − S1 − S2 − S3)² = 4·S1·S2·S3", solid_rel);

    let duals = [
        (1, div(&k2 * &k3, sigma.clone())),
        (2, div(&k1 * &k3, sigma.clone())),
        (3, div(&k1 * &k2, sigma.clone())),
    ];
    for (i, closed) in duals {
        out.equal("tri-rect-dual", format!("D{i}"), defined(r.dual_solid(i)).map(|x| (x, closed)));
    }
    let d_sum = (|| Some(defined(r.dual_solid(1))? + defined(r.dual_solid(2))? + defined(r.dual_solid(3))?))();
    out.equal("tri-rect-dual-sum", "D1 + D2 + D3 = 1", d_sum.map(|s| (s, one.clone())));

    Ok(out)
}

/// Convenience: `Outcome` of a single named verdict, if present.
pub fn outcome_of(results: &CheckResults, theorem: &str, instance: &str) -> Option<Outcome> {
    results.find(theorem, instance).map(|v| v.outcome)
}
