use cyclic_census_core::arith::{euler_phi_prime_power, gcd, Rational};
use cyclic_census_core::catalog::{build, closed_form_count, FamilySpec};
use cyclic_census_core::census::{census_by_enumeration, census_by_sum, cyclic_subgroup_count};
use cyclic_census_core::coset::{coset_enumerate, DEFAULT_MAX_COSETS};
use cyclic_census_core::{direct_product, parse_presentation, Group, Perm, Word};
use proptest::prelude::*;

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn small_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (prop::sample::select(vec![2u64, 3, 5]), 1u32..=4).prop_map(|(p, n)| format!("cyclic:p={p},n={n}")),
        (prop::sample::select(vec![2u64, 3]), 1u32..=4).prop_map(|(p, n)| format!("elem_abelian:p={p},n={n}")),
        (prop::sample::select(vec![2u64, 3, 5]), 2u32..=4).prop_map(|(p, n)| format!("cp_x_cpn1:p={p},n={n}")),
        (prop::sample::select(vec![3u64, 5]), 3u32..=4).prop_map(|(p, n)| format!("modular:p={p},n={n}")),
        (4u32..=5).prop_map(|n| format!("modular:p=2,n={n}")),
        (3u32..=5).prop_map(|n| format!("dihedral:n={n}")),
        (3u32..=5).prop_map(|n| format!("quaternion:n={n}")),
        (4u32..=5).prop_map(|n| format!("quasidihedral:n={n}")),
        Just("extraspecial_exp_p:p=3".to_owned()),
        Just("extraspecial_exp_p2:p=3".to_owned()),
        Just("wreath_cp_cp:p=2".to_owned()),
    ]
}

fn group_of(spec: &str) -> Group {
    build(&spec.parse::<FamilySpec>().unwrap(), DEFAULT_MAX_COSETS).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lagrange_for_cyclic_subgroups(a in perm_strategy(6), b in perm_strategy(6)) {
        let g = Group::closure(6, &[a, b]).unwrap();
        for x in g.ids() {
            let h = g.cyclic_subgroup(x);
            prop_assert_eq!(g.order() % h.order(), 0);
            prop_assert_eq!(h.order(), g.element_order(x));
        }
        prop_assert_eq!(g.order() % g.center().order(), 0);
        prop_assert_eq!(g.order() % g.derived_subgroup().order(), 0);
    }

    #[test]
    fn element_order_divides_group_order(a in perm_strategy(7), b in perm_strategy(7)) {
        let g = Group::closure(7, &[a.clone(), b]).unwrap();
        prop_assert_eq!(g.order() % a.order(), 0);
        prop_assert_eq!(g.order() % g.exponent(), 0);
    }

    #[test]
    fn census_routes_agree(spec in small_spec()) {
        let g = group_of(&spec);
        let by_sum = census_by_sum(&g).unwrap();
        let by_enum = census_by_enumeration(&g).unwrap();
        prop_assert_eq!(&by_sum, &by_enum);
        prop_assert_eq!(by_sum.total, cyclic_subgroup_count(&g));
        if let Ok(closed) = closed_form_count(&spec.parse().unwrap()) {
            prop_assert_eq!(closed, by_sum.total);
        }
    }

    #[test]
    fn partition_identity(left in small_spec(), right in prop::sample::select(vec!["cyclic:p=2,n=1", "cyclic:p=2,n=2", "elem_abelian:p=2,n=2"])) {
        let g = group_of(&left);
        let c = census_by_sum(&g).unwrap();
        let sum: u64 = c.counts.iter().enumerate().map(|(k, &ck)| ck * euler_phi_prime_power(c.p, k as u32)).sum();
        prop_assert_eq!(sum, g.order());
        prop_assert!(c.total > u64::from(c.n));
        prop_assert!(c.alpha <= Rational::ONE);

        if c.p == 2 {
            let prod = direct_product(&g, &group_of(right)).unwrap();
            let pc = census_by_sum(&prod).unwrap();
            let psum: u64 = pc.counts.iter().enumerate().map(|(k, &ck)| ck * euler_phi_prime_power(2, k as u32)).sum();
            prop_assert_eq!(psum, prod.order());
            prop_assert_eq!(&pc, &census_by_enumeration(&prod).unwrap());
        }
    }

    #[test]
    fn power_subgroup_index_in_cyclic_group(n in 1i64..=40, k in 0i64..=60) {
        let pres = parse_presentation(&format!("group C\ngens a\nrel a^{n}")).unwrap();
        let table = coset_enumerate(&pres, &[Word::power_of(0, k)], DEFAULT_MAX_COSETS).unwrap();
        prop_assert_eq!(table.num_cosets() as u64, gcd(n as u64, k as u64));
    }

    #[test]
    fn rational_field_laws(a in -50i128..50, b in 1i128..50, c in -50i128..50, d in 1i128..50, e in -50i128..50, f in 1i128..50) {
        let (x, y, z) = (Rational::new(a, b), Rational::new(c, d), Rational::new(e, f));
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x - x, Rational::ZERO);
        if y != Rational::ZERO {
            prop_assert_eq!(x / y * y, x);
        }
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        prop_assert!(x.denominator() > 0);
        prop_assert_eq!(gcd(x.numerator().unsigned_abs() as u64, x.denominator() as u64), if x.numerator() == 0 { x.denominator() as u64 } else { 1 });
        prop_assert_eq!(x < y, a * d < c * b);
    }
}
