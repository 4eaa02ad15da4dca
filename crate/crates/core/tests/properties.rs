use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use dseries::characters::{
    decompose, freudenthal_character, weyl_character, FormalCharacter, TorusElement,
};
use dseries::dschar::{ds_character_value, lowest_k_type, make_hc_parameter};
use dseries::lie::{catalog, weyl_group, RootSubsystem, Weight, WhichGroup, CATALOG_NAMES};
use dseries::sl2::{matrix_coefficient, Su11};

fn character(rank: usize, max_terms: usize) -> impl Strategy<Value = FormalCharacter> {
    prop::collection::vec(
        (prop::collection::vec(-6i64..=6, rank), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        FormalCharacter::from_terms(
            rank,
            terms
                .into_iter()
                .map(|(c, k)| (Weight::from_doubled(c), BigInt::from(k))),
        )
    })
}

fn l1(a: &FormalCharacter) -> f64 {
    a.terms()
        .map(|(_, c)| c.to_string().parse::<f64>().unwrap().abs())
        .sum()
}

fn datum_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(CATALOG_NAMES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in character(2, 8), b in character(2, 8), c in character(2, 8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &FormalCharacter::one(2), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, k)| k != &BigInt::from(0)));
    }

    #[test]
    fn evaluation_is_multiplicative(
        a in character(2, 50),
        b in character(2, 50),
        theta in prop::collection::vec(-7.0f64..7.0, 2),
    ) {
        let t = TorusElement::new(theta);
        let lhs = (&a * &b).evaluate(&t).unwrap();
        let rhs = a.evaluate(&t).unwrap() * b.evaluate(&t).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (l1(&a) * l1(&b)).max(1.0));
    }

    #[test]
    fn division_inverts_multiplication(a in character(2, 10), b in character(2, 6)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn weyl_action_preserves_pairing(
        name in datum_name(),
        mu in prop::collection::vec(-5i64..=5, 2),
        nu in prop::collection::vec(-5i64..=5, 2),
    ) {
        let d = catalog(name).unwrap();
        let r = d.rank();
        let mu = Weight::from_doubled(mu[..r].to_vec());
        let nu = Weight::from_doubled(nu[..r].to_vec());
        for w in weyl_group(&d, WhichGroup::Full) {
            let (wm, wn) = (w.act(&mu).unwrap(), w.act(&nu).unwrap());
            prop_assert_eq!(d.pairing(&wm, &wn).unwrap(), d.pairing(&mu, &nu).unwrap());
            prop_assert_eq!(&wm + &wn, w.act(&(&mu + &nu)).unwrap());
            prop_assert_eq!(w.inverse().act(&wm).unwrap(), mu.clone());
        }
    }

    #[test]
    fn torus_action_is_contragredient(
        name in datum_name(),
        mu in prop::collection::vec(-6i64..=6, 2),
        theta in prop::collection::vec(0.0f64..6.3, 2),
    ) {
        let d = catalog(name).unwrap();
        let r = d.rank();
        let mu = Weight::from_doubled(mu[..r].to_vec());
        let t = TorusElement::new(theta[..r].to_vec());
        for w in weyl_group(&d, WhichGroup::Full) {
            let lhs = t.act(&w).exp_weight(&mu);
            let rhs = t.exp_weight(&w.inverse().act(&mu).unwrap());
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn irreducibles_decompose_to_themselves(name in datum_name(), hw in prop::collection::vec(0i64..=3, 2)) {
        let d = catalog(name).unwrap();
        let hw = Weight::from_fundamental(&hw[..d.rank()]);
        let chi = weyl_character(&d, &hw).unwrap();
        prop_assert_eq!(&chi, &freudenthal_character(&d, &hw).unwrap());
        prop_assert!(chi.terms().all(|(_, k)| k > &BigInt::from(0)));
        let dec = decompose(&d, &chi).unwrap();
        prop_assert_eq!(dec.constituents, vec![(hw, BigInt::from(1))]);
    }

    #[test]
    fn tensor_products_keep_dimension(
        name in datum_name(),
        x in prop::collection::vec(0i64..=2, 2),
        y in prop::collection::vec(0i64..=2, 2),
    ) {
        let d = catalog(name).unwrap();
        let r = d.rank();
        let a = weyl_character(&d, &Weight::from_fundamental(&x[..r])).unwrap();
        let b = weyl_character(&d, &Weight::from_fundamental(&y[..r])).unwrap();
        let dec = decompose(&d, &(&a * &b)).unwrap();
        prop_assert!(!dec.is_virtual);
        let total: BigInt = dec
            .constituents
            .iter()
            .map(|(w, m)| m * weyl_character(&d, w).unwrap().dimension())
            .sum();
        prop_assert_eq!(total, a.dimension() * b.dimension());
    }

    #[test]
    fn lowest_k_type_is_k_dominant(name in datum_name(), extra in prop::collection::vec(0i64..=5, 2)) {
        let d = catalog(name).unwrap();
        let lambda = &Weight::from_fundamental(&extra[..d.rank()]) + d.rho();
        let h = make_hc_parameter(&d, lambda).unwrap();
        let k = lowest_k_type(&h);
        prop_assert!(k.is_integral());
        prop_assert!(RootSubsystem::compact(&d).check_dominant_integral(&k).is_ok());
    }

    #[test]
    fn compact_characters_are_weyl_characters(
        name in prop::sample::select(vec!["su2", "su3", "so5"]),
        extra in prop::collection::vec(0i64..=4, 2),
        theta in prop::collection::vec(0.0f64..6.3, 2),
    ) {
        let d = catalog(name).unwrap();
        let r = d.rank();
        let hw = Weight::from_fundamental(&extra[..r]);
        let t = TorusElement::new(theta[..r].to_vec());
        prop_assume!(t.root_margin(&d) > 0.1);
        let h = make_hc_parameter(&d, &hw + d.rho()).unwrap();
        let a = ds_character_value(&h, &t).unwrap();
        let b = weyl_character(&d, &hw).unwrap().evaluate(&t).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * b.norm().max(1.0));
    }

    #[test]
    fn matrix_coefficients_are_contractions(
        n in 1i64..=6,
        t in 0.0f64..4.0,
        phi in -3.2f64..3.2,
        psi in -3.2f64..3.2,
    ) {
        let g = Su11::rotation(phi) * Su11::boost(t) * Su11::rotation(psi);
        let v = matrix_coefficient(n, &g).unwrap();
        prop_assert!(v.norm() <= 1.0 + 1e-12);
        let k = matrix_coefficient(n, &Su11::rotation(phi)).unwrap();
        prop_assert!((k.norm() - 1.0).abs() < 1e-12);
        if t > 1e-3 {
            prop_assert!(v.norm() < 1.0);
        }
    }

    #[test]
    fn orbital_integrand_is_well_defined(
        n in 1i64..=5,
        theta in 0.1f64..3.0,
        re in -0.6f64..0.6,
        im in -0.6f64..0.6,
        y in -3.2f64..3.2,
    ) {
        let g = Su11::rotation(theta);
        let x = Su11::disc_point(Complex64::new(re, im)).unwrap();
        let a = matrix_coefficient(n, &g.conjugate_by(&x)).unwrap();
        let b = matrix_coefficient(n, &g.conjugate_by(&(x * Su11::rotation(y)))).unwrap();
        prop_assert!((a - b).norm() < 1e-12);
    }
}
