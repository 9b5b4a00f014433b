//! Property-based invariants across the field, algebra and tetrahedron layers.

use num_rational::BigRational;
use proptest::prelude::*;
use tetratrig::affine::{Line, Plane, Point3};
use tetratrig::blinalg::*;
use tetratrig::tetra::{analyze, verify_geometry, verify_identities, SkewPairing, EDGES, FACES, SPREADS};
use tetratrig::{FieldElement, FieldSpec, Tetrahedron};

const PRIMES: [u64; 5] = [3, 7, 11, 101, 10_007];

fn rational() -> impl Strategy<Value = FieldElement> {
    (-100i64..=100, 1i64..=100).prop_map(|(n, d)| FieldSpec::rational().ratio(n, d).unwrap())
}

fn residue(p: u64) -> impl Strategy<Value = FieldElement> {
    let spec = FieldSpec::prime(p).unwrap();
    (0..p).prop_map(move |n| spec.int(n as i64))
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rational()),
        prop::sample::select(PRIMES.to_vec()).prop_map(|p| FieldSpec::prime(p).unwrap()),
    ]
}

fn element(spec: FieldSpec) -> BoxedStrategy<FieldElement> {
    match spec.modulus() {
        Some(p) => residue(p).boxed(),
        None => rational().boxed(),
    }
}

fn vector(spec: FieldSpec) -> impl Strategy<Value = Vector3> {
    [element(spec), element(spec), element(spec)].prop_map(|[x, y, z]| Vector3::new(x, y, z).unwrap())
}

fn point(spec: FieldSpec) -> impl Strategy<Value = Point3> {
    [element(spec), element(spec), element(spec)].prop_map(|[x, y, z]| Point3::new(x, y, z).unwrap())
}

fn form(spec: FieldSpec) -> impl Strategy<Value = SymmetricForm> {
    prop::array::uniform6(element(spec)).prop_filter_map("degenerate form", |e| SymmetricForm::new(e).ok())
}

fn vectors_and_form<const N: usize>() -> impl Strategy<Value = ([Vector3; N], SymmetricForm)> {
    field().prop_flat_map(|spec| (prop::array::uniform::<_, N>(vector(spec)), form(spec)))
}

fn tetrahedron() -> impl Strategy<Value = Tetrahedron> {
    field().prop_flat_map(|spec| {
        (prop::array::uniform4(point(spec)), form(spec)).prop_map(|(p, b)| Tetrahedron::new(p, b).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((a, b, c) in field().prop_flat_map(|s| (element(s), element(s), element(s)))) {
        let spec = a.spec();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &spec.zero(), a.clone());
        prop_assert_eq!(&a * &spec.one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.invert().unwrap()).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap() * &a, b.clone());
        } else {
            prop_assert!(a.invert().is_err());
        }
    }

    #[test]
    fn rational_ops_match_reference(a in rational(), b in rational(), c in rational(), d in rational()) {
        let reference = |e: &FieldElement| e.render().parse::<BigRational>().unwrap();
        let (x, y) = (reference(&a), reference(&b));
        prop_assert_eq!((&a + &b).render(), (&x + &y).to_string());
        prop_assert_eq!((&a - &b).render(), (&x - &y).to_string());
        prop_assert_eq!((&a * &b).render(), (&x * &y).to_string());
        let fused = FieldElement::sum_of_products(a.spec(), [(&a, &b), (&c, &d)]);
        prop_assert_eq!(fused, &(&a * &b) + &(&c * &d));
    }

    #[test]
    fn sum_of_products_over_residues(p in prop::sample::select(PRIMES.to_vec()), xs in prop::array::uniform8(0i64..1_000_000)) {
        let spec = FieldSpec::prime(p).unwrap();
        let e: Vec<FieldElement> = xs.iter().map(|&x| spec.int(x)).collect();
        let fused = FieldElement::sum_of_products(spec, e.chunks(2).map(|c| (&c[0], &c[1])));
        let folded = e.chunks(2).fold(spec.zero(), |acc, c| acc + &c[0] * &c[1]);
        prop_assert_eq!(fused, folded);
    }

    #[test]
    fn fermat(p in prop::sample::select(PRIMES.to_vec()), n in 1u64..1_000_000) {
        let spec = FieldSpec::prime(p).unwrap();
        let x = spec.int(n as i64);
        if !x.is_zero() {
            prop_assert!(x.pow(p - 1).is_one());
            prop_assert_eq!(x.pow(p - 2), x.invert().unwrap());
        }
    }

    #[test]
    fn render_parse_round_trip(x in field().prop_flat_map(element)) {
        prop_assert_eq!(FieldElement::parse(&x.render(), x.spec()).unwrap(), x.clone());
        prop_assert_eq!(x.spec().to_string().parse::<FieldSpec>().unwrap(), x.spec());
    }

    #[test]
    fn polarisation(([v, w], b) in vectors_and_form::<2>()) {
        let two_dot = b_dot(&v, &w, &b).unwrap().times(2);
        let q = |x: &Vector3| quadrance_vec(x, &b).unwrap();
        prop_assert_eq!(&two_dot, &(q(&(&v + &w)) - q(&v) - q(&w)));
        prop_assert_eq!(&two_dot, &(q(&v) + q(&w) - q(&(&v - &w))));
        prop_assert_eq!(b_dot(&v, &w, &b).unwrap(), b_dot(&w, &v, &b).unwrap());
    }

    #[test]
    fn adjugate_inverts(b in field().prop_flat_map(form)) {
        let prod = mat_mul(b.adjugate(), b.matrix());
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { b.det().clone() } else { b.spec().zero() };
                prop_assert_eq!(x, &want);
            }
        }
    }

    #[test]
    fn cross_is_perpendicular_and_antisymmetric(([v, w], b) in vectors_and_form::<2>()) {
        let n = b_cross(&v, &w, &b).unwrap();
        prop_assert!(b_dot(&v, &n, &b).unwrap().is_zero());
        prop_assert!(b_dot(&w, &n, &b).unwrap().is_zero());
        prop_assert_eq!(b_cross(&w, &v, &b).unwrap(), -&n);
    }

    #[test]
    fn scalar_triple_alternates(([v1, v2, v3], b) in vectors_and_form::<3>()) {
        let t = |a: &Vector3, c: &Vector3, d: &Vector3| scalar_triple(a, c, d, &b).unwrap();
        let base = t(&v1, &v2, &v3);
        prop_assert_eq!(&t(&v2, &v3, &v1), &base);
        prop_assert_eq!(&t(&v3, &v1, &v2), &base);
        prop_assert_eq!(&t(&v2, &v1, &v3), &-&base);
        prop_assert_eq!(&t(&v1, &v3, &v2), &-&base);
        prop_assert_eq!(&t(&v3, &v2, &v1), &-&base);
        prop_assert_eq!(&scalar_triple_expanded(&v1, &v2, &v3, &b).unwrap(), &base);
        prop_assert_eq!(&scalar_triple_det_mb(&v1, &v2, &v3, &b).unwrap(), &base);
    }

    #[test]
    fn product_expansions(([v1, v2, v3, v4], b) in vectors_and_form::<4>()) {
        prop_assert_eq!(vector_triple(&v1, &v2, &v3, &b).unwrap(), vector_triple_expanded(&v1, &v2, &v3, &b).unwrap());
        prop_assert_eq!(quad_scalar(&v1, &v2, &v3, &v4, &b).unwrap(), quad_scalar_expanded(&v1, &v2, &v3, &v4, &b).unwrap());
        let qv = quad_vector(&v1, &v2, &v3, &v4, &b).unwrap();
        let (e1, e2) = quad_vector_expansions(&v1, &v2, &v3, &v4, &b).unwrap();
        prop_assert_eq!(&qv, &e1);
        prop_assert_eq!(&qv, &e2);
        prop_assert_eq!(quad_vector(&v1, &v2, &v1, &v3, &b).unwrap(), quad_vector_shared_expanded(&v1, &v2, &v3, &b).unwrap());
        prop_assert_eq!(triple_of_crosses(&v1, &v2, &v3, &b).unwrap(), triple_of_crosses_expanded(&v1, &v2, &v3, &b).unwrap());
        let lagrange = b.det() * (quadrance_vec(&v1, &b).unwrap() * quadrance_vec(&v2, &b).unwrap() - b_dot(&v1, &v2, &b).unwrap().square());
        prop_assert_eq!(quadrance_vec(&b_cross(&v1, &v2, &b).unwrap(), &b).unwrap(), lagrange);
    }

    #[test]
    fn quadrance_scales(([v], b) in vectors_and_form::<1>(), k in -50i64..50) {
        let lambda = b.spec().int(k);
        let scaled = quadrance_vec(&v.scale(&lambda), &b).unwrap();
        prop_assert_eq!(scaled, lambda.square() * quadrance_vec(&v, &b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tetrahedron_identities_hold(t in tetrahedron()) {
        let r = analyze(&t);
        let ids = verify_identities(&r);
        prop_assert!(!ids.has_failure(), "{:?}", ids.failures().collect::<Vec<_>>());
        let spec = t.spec();
        let geo = verify_geometry(&t, &[(spec.int(3), spec.int(-2))]);
        prop_assert!(!geo.has_failure(), "{:?}", geo.failures().collect::<Vec<_>>());
    }

    #[test]
    fn analyze_is_permutation_covariant(t in tetrahedron(), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let perm: [usize; 4] = perm;
        let (r, rp) = (analyze(&t), analyze(&t.relabel(perm)));
        prop_assert_eq!(rp.quadrume(), r.quadrume());
        prop_assert_eq!(rp.richardson(), r.richardson());
        for (i, j) in EDGES {
            prop_assert_eq!(rp.q(i, j), r.q(perm[i], perm[j]));
            prop_assert_eq!(rp.dihedral(i, j), r.dihedral(perm[i], perm[j]));
        }
        for [i, j, k] in FACES {
            prop_assert_eq!(rp.quadrea(i, j, k), r.quadrea(perm[i], perm[j], perm[k]));
        }
        for (i, j, k) in SPREADS {
            prop_assert_eq!(rp.spread(i, j, k), r.spread(perm[i], perm[j], perm[k]));
        }
        for i in 0..4 {
            prop_assert_eq!(rp.solid(i), r.solid(perm[i]));
            prop_assert_eq!(rp.dual_solid(i), r.dual_solid(perm[i]));
        }
        for p in SkewPairing::ALL {
            let (a, b, _, _) = p.vertices();
            let edge = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            let image = SkewPairing::ALL
                .into_iter()
                .find(|q| {
                    let (w, x, y, z) = q.vertices();
                    edge == (w, x) || edge == (y, z)
                })
                .unwrap();
            prop_assert_eq!(rp.skew(p).is_defined(), r.skew(image).is_defined());
            if let (Some(x), Some(y)) = (rp.skew(p).value(), r.skew(image).value()) {
                prop_assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn incidence_matches_enumeration(
        p in prop::sample::select(vec![3u64, 5, 7]),
        seed in prop::array::uniform12(0u64..7),
    ) {
        let spec = FieldSpec::prime(p).unwrap();
        let e = |i: usize| spec.int(seed[i] as i64);
        let base = Point3::new(e(0), e(1), e(2)).unwrap();
        let u = Vector3::new(e(3), e(4), e(5)).unwrap();
        let w = Vector3::new(e(6), e(7), e(8)).unwrap();
        let x = Point3::new(e(9), e(10), e(11)).unwrap();
        let scalars: Vec<FieldElement> = (0..p).map(|k| spec.int(k as i64)).collect();
        if let Ok(line) = Line::new(base.clone(), u.clone()) {
            let on = scalars.iter().any(|t| base.translate(&u.scale(t)) == x);
            prop_assert_eq!(line.contains(&x).unwrap(), on);
        }
        if let Ok(plane) = Plane::new(base.clone(), u.clone(), w.clone()) {
            let on = scalars
                .iter()
                .any(|s| scalars.iter().any(|t| base.translate(&(&u.scale(s) + &w.scale(t))) == x));
            prop_assert_eq!(plane.contains(&x).unwrap(), on);
        }
    }
}
