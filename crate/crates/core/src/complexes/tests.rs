use super::*;
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;
type C = Complex<Q>;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

fn el(p: BasisPath) -> Element<Q> {
    Element::basis(p)
}

fn p(mode: &GradingMode, i: usize, k: i64, d: i64) -> C {
    C::projective(3, mode.clone(), i, k, d).unwrap()
}

fn all_modes() -> Vec<GradingMode> {
    vec![GradingMode::PathLength, GradingMode::OrientTilde, GradingMode::OrientVec]
}

fn random_complex(seed: u64, rank: usize, mode: &GradingMode) -> C {
    sample::random_complex(seed, rank, mode)
}

#[test]
fn projective_examples() {
    let m = GradingMode::OrientTilde;
    let a = p(&m, 1, 0, 0);
    assert_eq!(a.signature(), vec![(0, 1, 0)]);
    assert_eq!(p(&m, 2, 1, 0).signature(), vec![(0, 2, 1)]);
    assert_eq!(p(&m, 1, 0, -1).signature(), vec![(-1, 1, 0)]);
    assert_eq!(a.shift(2, 0).signature(), vec![(-2, 1, 0)]);
    assert!(C::projective(3, m, 4, 0, 0).is_err());
}

#[test]
fn validation_rejects_bad_entries() {
    let m = GradingMode::OrientTilde;
    let parts = vec![(1, 0, 0), (2, 1, 1)];
    // x(1,2) has tilde degree 1.
    assert!(C::from_parts(2, m.clone(), parts.clone(), vec![(0, 1, el(BasisPath::EdgeX(1, 2)))]).is_ok());
    assert_eq!(
        C::from_parts(2, m.clone(), parts.clone(), vec![(0, 1, el(BasisPath::EdgeY(1, 2)))]),
        Err(ComplexError::Inhomogeneous(0, 1))
    );
    assert_eq!(
        C::from_parts(2, m.clone(), parts, vec![(0, 1, el(BasisPath::EdgeXStar(1, 2)))]),
        Err(ComplexError::NotEndpointPure(0, 1))
    );
    let same = vec![(1, 0, 0), (2, 1, 0)];
    assert_eq!(
        C::from_parts(2, m.clone(), same, vec![(0, 1, el(BasisPath::EdgeX(1, 2)))]),
        Err(ComplexError::DegreeRule(0, 1))
    );
    // P1 -x-> P2<1> -x*-> P1<1> squares to z.
    let parts = vec![(1, 0, 0), (2, 1, 1), (1, 1, 2)];
    let entries = vec![(0, 1, el(BasisPath::EdgeX(1, 2))), (1, 2, el(BasisPath::EdgeXStar(1, 2)))];
    assert_eq!(C::from_parts(2, m, parts, entries), Err(ComplexError::NotAComplex(0, 2)));
}

#[test]
fn shift_signs_and_inverse() {
    let m = GradingMode::OrientTilde;
    let y = C::from_parts(2, m, vec![(1, 0, 0), (2, 1, 1)], vec![(0, 1, el(BasisPath::EdgeX(1, 2)))]).unwrap();
    let s = y.shift(1, 0);
    assert_eq!(s.entry(0, 1), Some(&el(BasisPath::EdgeX(1, 2)).neg()));
    assert_eq!(s.shift(-1, 0), y);
    assert_eq!(y.shift(0, 3).signature(), vec![(0, 1, 3), (1, 2, 4)]);
    assert_eq!(s.validate(), Ok(()));
}

#[test]
fn sums_and_cones() {
    let m = GradingMode::OrientTilde;
    let a = p(&m, 1, 0, 0);
    let b = p(&m, 2, 0, 0);
    let s = a.direct_sum(&b).unwrap();
    assert_eq!(s.signature(), vec![(0, 1, 0), (0, 2, 0)]);
    assert!(is_isomorphic(&a.direct_sum(&C::zero(3, m.clone())).unwrap(), &a));
    assert!(a.direct_sum(&C::zero(3, GradingMode::OrientVec)).is_err());

    let id = ChainMap::identity(&a);
    assert!(C::cone(&id).unwrap().minimize().is_zero());

    let zero = ChainMap::zero(a.clone(), b.clone());
    let c0 = C::cone(&zero).unwrap();
    assert!(is_isomorphic(&c0, &a.shift(1, 0).direct_sum(&b).unwrap()));

    let target = p(&m, 1, 1, 0);
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), el(BasisPath::Loop(1)));
    let z = ChainMap::new(a.clone(), target, 0, 0, entries).unwrap();
    let cz = C::cone(&z).unwrap();
    assert_eq!(cz.signature(), vec![(-1, 1, 0), (0, 1, 1)]);
    assert_eq!(cz.entry(0, 1), Some(&el(BasisPath::Loop(1))));
    assert!(cz.is_minimal());
}

#[test]
fn minimize_examples() {
    let m = GradingMode::OrientTilde;
    let c = C::from_parts(1, m.clone(), vec![(1, 0, 0), (1, 0, 1)], vec![(0, 1, el(BasisPath::Idem(1)))]).unwrap();
    assert!(c.minimize().is_zero());
    // P2 -(x*, e)-> P1 + P2 keeps only P1 in degree 1.
    let c = C::from_parts(
        2,
        m,
        vec![(2, 0, 0), (1, 0, 1), (2, 0, 1)],
        vec![(0, 1, el(BasisPath::EdgeXStar(1, 2))), (0, 2, Element::term(BasisPath::Idem(2), q(3)))],
    )
    .unwrap();
    let min = c.minimize();
    assert_eq!(min.signature(), vec![(1, 1, 0)]);
    assert_eq!(min.num_entries(), 0);
}

#[test]
fn hom_space_examples() {
    let t = GradingMode::OrientTilde;
    let p1 = p(&t, 1, 0, 0);
    let p2 = p(&t, 2, 0, 0);
    let h = hom_space(&p1, &p1, 0, 0).unwrap();
    assert_eq!(h.dim, 1);
    assert_eq!(h.basis[0].entry(0, 0), Some(&el(BasisPath::Idem(1))));
    let h = hom_space(&p1, &p1, 0, 1).unwrap();
    assert_eq!(h.dim, 1);
    assert_eq!(h.basis[0].entry(0, 0), Some(&el(BasisPath::Loop(1))));
    assert_eq!(hom_space(&p1, &p2, 1, 0).unwrap().dim, 0);
    assert!(hom_space(&p1, &C::zero(2, t.clone()), 0, 0).is_err());
}

#[test]
fn hom_table_examples() {
    for mode in all_modes() {
        let p1 = p(&mode, 1, 0, 0);
        let table = hom_table(&p1, &p1).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert((0, 0), 1);
        expect.insert((0, mode.degree(&BasisPath::Loop(1))), 1);
        assert_eq!(table.dims, expect);
        assert!(hom_table(&C::zero(3, mode.clone()), &p1).unwrap().is_zero());

        let s = p1.direct_sum(&p(&mode, 1, 1, 0)).unwrap();
        let z_deg = mode.degree(&BasisPath::Loop(1));
        assert_eq!(hom_table(&p1, &s).unwrap().get(0, 0), 1 + usize::from(z_deg == 1));
        assert_eq!(hom_table(&p(&mode, 1, 1, 0), &s).unwrap().get(0, 0), 1);
    }
}

#[test]
fn isomorphism_examples() {
    let t = GradingMode::OrientTilde;
    let p1 = p(&t, 1, 0, 0);
    assert!(is_isomorphic(&p1, &p1));
    assert!(!is_isomorphic(&p1, &p(&t, 1, 1, 0)));
    assert!(is_isomorphic_up_to_shift(&p1, &p(&t, 1, 0, 4)));
    // P2 -(x*, y*)-> P1 + P1 against the same complex with a base change.
    let parts = vec![(2, 0, 0), (1, 0, 1), (1, 0, 1)];
    let ma = GradingMode::OrientVec;
    let a = C::from_parts(
        2,
        ma.clone(),
        parts.clone(),
        vec![(0, 1, el(BasisPath::EdgeXStar(1, 2))), (0, 2, el(BasisPath::EdgeYStar(1, 2)))],
    )
    .unwrap();
    let mixed = el(BasisPath::EdgeXStar(1, 2)).add(&el(BasisPath::EdgeYStar(1, 2)));
    let b = C::from_parts(2, ma.clone(), parts.clone(), vec![(0, 1, mixed), (0, 2, el(BasisPath::EdgeYStar(1, 2)))])
        .unwrap();
    assert!(is_isomorphic(&a, &b));
    // Decomposable: both entries x*.
    let c = C::from_parts(
        2,
        ma,
        parts,
        vec![(0, 1, el(BasisPath::EdgeXStar(1, 2))), (0, 2, el(BasisPath::EdgeXStar(1, 2)))],
    )
    .unwrap();
    assert!(!is_isomorphic(&a, &c));
}

#[test]
fn multiplicity_of_summands() {
    let v = GradingMode::OrientVec;
    let p1 = C::projective(2, v.clone(), 1, 0, 0).unwrap();
    let z = p1
        .direct_sum(&p1.shift(2, 0))
        .unwrap()
        .direct_sum(&p1.shift(2, 0))
        .unwrap()
        .direct_sum(&C::projective(2, v, 2, 0, 0).unwrap())
        .unwrap();
    let m = multiplicities(&p1, &z).unwrap();
    assert_eq!(m, BTreeMap::from([(0, 1), (2, 2)]));
}

#[test]
fn json_round_trip() {
    for (k, mode) in all_modes().into_iter().enumerate() {
        let c = random_complex(100 + k as u64, 3, &mode);
        let text = to_json(&c);
        let back: C = from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_json(&back), text);
    }
    assert!(from_json::<Q>("{\"rank\": 2}").is_err());
}

#[test]
fn generic_over_floats() {
    let m = GradingMode::OrientTilde;
    let c = Complex::<f64>::from_parts(
        2,
        m,
        vec![(2, 0, 0), (1, 0, 1), (2, 0, 1)],
        vec![(0, 1, Element::basis(BasisPath::EdgeXStar(1, 2))), (0, 2, Element::term(BasisPath::Idem(2), 0.5))],
    )
    .unwrap();
    assert_eq!(c.minimize().signature(), vec![(1, 1, 0)]);
}

fn mode_strategy() -> impl Strategy<Value = GradingMode> {
    prop_oneof![
        Just(GradingMode::PathLength),
        Just(GradingMode::OrientTilde),
        Just(GradingMode::OrientVec),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operations_preserve_validity(seed in any::<u64>(), mode in mode_strategy(), h in -2i64..3, k in -2i64..3) {
        let c = random_complex(seed, 3, &mode);
        prop_assert_eq!(c.validate(), Ok(()));
        let s = c.shift(h, k);
        prop_assert_eq!(s.validate(), Ok(()));
        prop_assert_eq!(s.shift(-h, -k), c.clone());
        let m = c.minimize();
        prop_assert_eq!(m.validate(), Ok(()));
        prop_assert!(m.is_minimal());
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert_eq!(c.direct_sum(&m).unwrap().validate(), Ok(()));
    }

    #[test]
    fn minimize_is_a_homotopy_equivalence(seed in any::<u64>(), mode in mode_strategy()) {
        let c = random_complex(seed, 3, &mode);
        let (m, f, g) = c.minimize_with_equivalence();
        prop_assert_eq!(&m, &c.minimize());
        prop_assert_eq!(f.validate(), Ok(()));
        prop_assert_eq!(g.validate(), Ok(()));
        let gf = f.then(&g).unwrap().sub(&ChainMap::identity(&c));
        prop_assert!(is_null_homotopic(&gf).unwrap());
        let fg = g.then(&f).unwrap().sub(&ChainMap::identity(&m));
        prop_assert!(fg.is_zero());
    }

    #[test]
    fn homs_survive_one_elimination(seed in any::<u64>(), mode in mode_strategy()) {
        let c = random_complex(seed, 2, &mode);
        let other = random_complex(seed.wrapping_add(1), 2, &mode);
        if let Some(step) = c.gaussian_step() {
            prop_assert_eq!(step.validate(), Ok(()));
            prop_assert_eq!(hom_table(&c, &other).unwrap().dims, hom_table(&step, &other).unwrap().dims);
            prop_assert_eq!(hom_table(&other, &c).unwrap().dims, hom_table(&other, &step).unwrap().dims);
        }
    }

    #[test]
    fn baric_orthogonality(seed in any::<u64>(), mode in prop_oneof![Just(GradingMode::OrientTilde), Just(GradingMode::OrientVec)]) {
        let c = random_complex(seed, 3, &mode).minimize();
        let keep_hi: Vec<usize> = c.summands().iter().filter(|s| s.shift >= 0).map(|s| s.uid).collect();
        let keep_lo: Vec<usize> = c.summands().iter().filter(|s| s.shift < 0).map(|s| s.uid).collect();
        // Entries never lower the shift, so the high part is a subcomplex and the low part a quotient.
        let hi = c.restrict(&keep_hi);
        let lo = c.restrict(&keep_lo);
        prop_assert_eq!(hi.validate(), Ok(()));
        prop_assert_eq!(lo.validate(), Ok(()));
        prop_assert!(hom_dims(&hi, &lo, 0).unwrap().is_empty());
    }

    #[test]
    fn isomorphism_is_shift_sensitive(seed in any::<u64>(), mode in mode_strategy()) {
        let c = random_complex(seed, 2, &mode).minimize();
        prop_assume!(!c.is_zero());
        prop_assert!(is_isomorphic(&c, &c.shift(0, 0)));
        prop_assert!(!is_isomorphic(&c, &c.shift(0, 1)));
        prop_assert!(is_isomorphic_up_to_shift(&c, &c.shift(3, 0)));
    }
}
