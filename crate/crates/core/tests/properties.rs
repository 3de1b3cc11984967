use nilflux::connections::{connection, ConnectionKind};
use nilflux::frames::{PresetGeometry, PresetName};
use nilflux::hermitian::HermitianStructure;
use nilflux::notation::{parse_form, parse_scalar};
use nilflux::{KForm, MultiIndex, Scalar, Vector};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (-6i64..=6, 1i64..=4, -2i32..=2, -2i32..=2).prop_map(|(n, d, a, b)| {
        &(&Scalar::from_ratio(n, d) * &Scalar::var_pow("t", a)) * &Scalar::var_pow("b", b)
    });
    prop::collection::vec(term, 0..4).prop_map(|ts| {
        ts.iter().fold(Scalar::zero(), |acc, t| &acc + t)
    })
}

fn form(degree: usize) -> impl Strategy<Value = KForm> {
    let indices: Vec<MultiIndex> = MultiIndex::all_of_len(degree);
    let n = indices.len();
    prop::collection::vec((0..n, scalar()), 0..4).prop_map(move |terms| {
        let mut out = KForm::zero(degree);
        for (i, c) in terms {
            out += &KForm::monomial(indices[i], c);
        }
        out
    })
}

fn any_form() -> impl Strategy<Value = KForm> {
    (0usize..=6).prop_flat_map(form)
}

fn same_or_mixed_degrees() -> impl Strategy<Value = (KForm, KForm)> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(p, q)| (form(p), form(q)))
}

fn equal_degrees() -> impl Strategy<Value = (KForm, KForm)> {
    (0usize..=6).prop_flat_map(|k| (form(k), form(k)))
}

fn vector() -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, 6)
        .prop_map(|v| Vector(std::array::from_fn(|i| Scalar::from_int(v[i]))))
}

fn sign(p: usize, q: usize) -> Scalar {
    Scalar::from_int(if (p * q).is_multiple_of(2) { 1 } else { -1 })
}

fn inner(a: &KForm, b: &KForm) -> Scalar {
    let mut acc = Scalar::zero();
    for (idx, c) in a.terms() {
        acc += &(c * &b.coefficient(*idx));
    }
    acc
}

fn one_form(v: &Vector) -> KForm {
    let mut out = KForm::zero(1);
    for i in 0..6 {
        out += &KForm::e1(i).scale(v.component(i));
    }
    out
}

fn preset() -> impl Strategy<Value = PresetName> {
    prop::sample::select(PresetName::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn scalar_display_round_trips(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn wedge_is_graded_commutative((a, b) in same_or_mixed_degrees()) {
        let (p, q) = (a.degree(), b.degree());
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign(p, q)));
    }

    #[test]
    fn wedge_is_associative_and_bilinear(a in any_form(), b in any_form(), c in any_form(), s in scalar()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        prop_assert_eq!(a.scale(&s).wedge(&b), a.wedge(&b).scale(&s));
    }

    #[test]
    fn odd_forms_square_to_zero(a in form(1), c in form(3)) {
        prop_assert!(a.wedge(&a).is_zero());
        prop_assert!(c.wedge(&c).is_zero());
    }

    #[test]
    fn hodge_star_is_an_involution_up_to_sign(a in any_form()) {
        let k = a.degree();
        prop_assert_eq!(a.hodge_star().hodge_star(), a.scale(&sign(k, 6 - k)));
    }

    #[test]
    fn hodge_star_pairs_with_the_volume_form((a, b) in equal_degrees()) {
        prop_assert_eq!(a.wedge(&b.hodge_star()), KForm::volume().scale(&inner(&a, &b)));
    }

    #[test]
    fn interior_product_is_adjoint_to_wedge(v in vector(), a in form(2), b in form(3)) {
        prop_assert_eq!(inner(&b.interior(&v), &a), inner(&b, &one_form(&v).wedge(&a)));
    }

    #[test]
    fn interior_product_is_an_antiderivation(v in vector(), a in any_form(), b in any_form()) {
        // contraction of a 0-form has no degree of its own
        prop_assume!(a.degree() > 0);
        let p = a.degree();
        let lhs = a.wedge(&b).interior(&v);
        let rhs = &a.interior(&v).wedge(&b) + &a.wedge(&b.interior(&v)).scale(&sign(p, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_display_round_trips(a in any_form()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(parse_form(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn differential_squares_to_zero(name in preset(), a in any_form()) {
        let g = PresetGeometry::symbolic(name);
        prop_assert!(g.d(&g.d(&a)).is_zero());
    }

    #[test]
    fn differential_is_a_graded_derivation(name in preset(), a in any_form(), b in any_form()) {
        let g = PresetGeometry::symbolic(name);
        let p = a.degree();
        let lhs = g.d(&a.wedge(&b));
        let rhs = &g.d(&a).wedge(&b) + &a.wedge(&g.d(&b)).scale(&sign(p, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_by_j_is_multiplicative(name in preset(), a in any_form(), b in any_form()) {
        let j = PresetGeometry::symbolic(name).j;
        prop_assert_eq!(j.pullback(&a.wedge(&b)), j.pullback(&a).wedge(&j.pullback(&b)));
    }
}

#[test]
fn differential_squares_to_zero_on_every_monomial() {
    for name in PresetName::ALL {
        let g = PresetGeometry::symbolic(name);
        for bits in 0u8..64 {
            let idx: Vec<usize> = (0..6).filter(|i| bits & (1 << i) != 0).map(|i| i + 1).collect();
            let e = KForm::e(&idx);
            assert!(g.d(&g.d(&e)).is_zero(), "{name} e{idx:?}");
        }
    }
}

#[test]
fn connections_are_metric_on_every_preset() {
    for name in PresetName::ALL {
        let h = HermitianStructure::new(&PresetGeometry::symbolic(name));
        for kind in [
            ConnectionKind::LeviCivita,
            ConnectionKind::Plus,
            ConnectionKind::Minus,
            ConnectionKind::Chern,
        ] {
            let c = connection(&h, kind).unwrap();
            assert!(c.is_antisymmetric(), "{name} {kind}");
            assert!(c.curvature(&h.geometry.structure).is_antisymmetric(), "{name} {kind}");
        }
    }
}
