use proptest::prelude::*;
use sheet_atlas::multiplicity::{inertia_order, orbit_method_multiplicity, polarisation_orbit_count, SlicePoint};
use sheet_atlas::realforms::{
    abelianized_fiber_dim_is_positive, sheet_of_real_form, su_sheet_partition, toledo, toledo_max, RealFormLabel,
};
use sheet_atlas::ring::{rat, Rational};
use sheet_atlas::sheets::{all_maximal_levi_labels, sheet_by_levi, sp4_row};

proptest! {
    #[test]
    fn sp4_dixmier_multiplicity(num in -30i64..=30, den in 1i64..=7) {
        let z = Rational::new(num.into(), den.into());
        let p = SlicePoint::new(sp4_row("S_Dix").unwrap(), vec![z]).unwrap();
        let expected = if num == 0 { 1 } else { 2 };
        prop_assert_eq!(orbit_method_multiplicity(&p).unwrap(), expected);
        prop_assert_eq!(inertia_order(&p).unwrap() * expected, 2);
    }

    #[test]
    fn su_levi_has_n_equal_p_plus_q(p in 1usize..12, q in 1usize..12) {
        prop_assume!(p >= q);
        let m = su_sheet_partition(p, q).unwrap();
        prop_assert_eq!(m.n(), p + q);
        let r = sheet_of_real_form(RealFormLabel::su(p, q).unwrap());
        prop_assert_eq!(r.quasi_split, p - q <= 1);
        prop_assert_eq!(abelianized_fiber_dim_is_positive(r.label), p - q > 1);
    }

    #[test]
    fn toledo_changes_sign_under_swap(p in 1usize..6, q in 1usize..6, dv in -20i64..20, dw in -20i64..20) {
        let tau = toledo(p, q, dv, dw).unwrap();
        prop_assert_eq!(-tau.clone(), toledo(q, p, dw, dv).unwrap());
        // Twisting V and W by a common line bundle of degree 1 fixes tau.
        prop_assert_eq!(tau, toledo(p, q, dv + p as i64, dw + q as i64).unwrap());
    }

    #[test]
    fn toledo_max_is_linear(q in 1usize..8, g in 2u64..10) {
        prop_assert_eq!(toledo_max(q, g).unwrap(), 2 * q as i64 * (g as i64 - 1));
    }
}

#[test]
fn every_katsylo_sheet_has_two_polarisations() {
    for (kind, levi) in all_maximal_levi_labels(10) {
        let s = sheet_by_levi(kind, &levi).unwrap();
        let pol = polarisation_orbit_count(&s).unwrap();
        assert_eq!(pol, s.katsylo_order);
        let zero = SlicePoint::nilpotent(s.clone());
        assert_eq!(orbit_method_multiplicity(&zero).unwrap(), 1, "{kind} {levi}");
        let generic = SlicePoint::new(s.clone(), vec![rat(3); s.dim_z]).unwrap();
        assert_eq!(orbit_method_multiplicity(&generic).unwrap(), s.katsylo_order, "{kind} {levi}");
    }
}

#[test]
fn so_star_forms() {
    for n in 3..=9 {
        let r = sheet_of_real_form(RealFormLabel::so_star(n).unwrap());
        assert!(!r.quasi_split);
        if n % 2 == 1 {
            assert_eq!(r.j_h_rank, Some(1));
            assert_eq!(r.evaluate_extra(3).unwrap()["fixed_degree"], 4 * ((n as i64 - 1) / 2) * 2);
        }
    }
    assert!(RealFormLabel::so_star(2).is_err());
    assert!(RealFormLabel::parse("SO*:6").is_ok());
}
