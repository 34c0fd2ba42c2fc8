use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grouplab::catalog::builtin::{cyclic, Builtin};
use grouplab::group::{
    abelian_invariants, center, derived_subgroup, find_isomorphism, quotient, AbelianInvariants, FiniteGroup,
};
use grouplab::isoclinism::{are_isoclinic, verify_witness};
use grouplab::wedge::{bogomolov_kernel, WedgeConfig};

const SMALL: &[&str] = &[
    "cyclic:6",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "quaternion8",
    "dicyclic:3",
    "alternating:4",
    "elementary:2:3",
    "product:(cyclic:2)(cyclic:4)",
    "product:(dihedral:3)(cyclic:2)",
];

fn builtin(desc: &str) -> FiniteGroup {
    Builtin::parse(desc).unwrap().build().unwrap()
}

fn shuffled(g: &FiniteGroup, seed: u64) -> FiniteGroup {
    let mut perm: Vec<usize> = (1..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm.insert(0, 0);
    g.relabel(&perm)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn product_of_cyclics(orders: &[usize]) -> FiniteGroup {
    orders
        .iter()
        .fold(FiniteGroup::trivial(), |acc, &n| acc.direct_product(&cyclic(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeling_preserves_invariants(i in 0..SMALL.len(), seed in any::<u64>()) {
        let g = builtin(SMALL[i]);
        let h = shuffled(&g, seed);
        prop_assert!(h.validate().is_ok());
        prop_assert_eq!(g.order_census(), h.order_census());
        prop_assert_eq!(center(&g).order(), center(&h).order());
        prop_assert_eq!(derived_subgroup(&g).order(), derived_subgroup(&h).order());
        prop_assert_eq!(abelian_invariants(&g, Some(derived_subgroup(&g).members()), false).unwrap(),
                        abelian_invariants(&h, Some(derived_subgroup(&h).members()), false).unwrap());
        let iso = find_isomorphism(&g, &h);
        prop_assert!(iso.is_some());
        let iso = iso.unwrap();
        prop_assert!(iso.is_isomorphism(&g, &h));
        prop_assert!(iso.inverse().is_isomorphism(&h, &g));
    }

    #[test]
    fn abelian_invariants_match_element_counts(orders in prop::collection::vec(1usize..7, 0..4)) {
        let g = product_of_cyclics(&orders);
        let inv = abelian_invariants(&g, None, true).unwrap();
        prop_assert!(inv.is_valid());
        prop_assert_eq!(inv.order(), g.order() as u64);
        prop_assert_eq!(&inv, &AbelianInvariants::from_cyclic_orders(orders.iter().map(|&n| n as u64)));
        // #{x : x^d = 1} = ∏ gcd(d, n_i) in ⊕ Z/n_i.
        for d in 1..=g.order() as u64 {
            let count = g.elements().filter(|&x| g.pow(x, d) == 0).count() as u64;
            let expected: u64 = inv.factors().iter().map(|&n| gcd(d, n)).product();
            prop_assert_eq!(count, expected);
        }
    }

    #[test]
    fn quotients_by_characteristic_subgroups(i in 0..SMALL.len()) {
        let g = builtin(SMALL[i]);
        for n in [center(&g), derived_subgroup(&g)] {
            prop_assert!(n.is_normal(&g));
            let q = quotient(&g, &n).unwrap();
            prop_assert_eq!(q.group.order() * n.order(), g.order());
            prop_assert!(q.projection.is_homomorphism(&g, &q.group));
            prop_assert_eq!(q.projection.kernel(&g), n);
        }
        let ab = quotient(&g, &derived_subgroup(&g)).unwrap().group;
        prop_assert!(ab.is_abelian());
    }

    #[test]
    fn isoclinic_to_product_with_abelian(i in 0..SMALL.len(), n in 1usize..5, seed in any::<u64>()) {
        // G and G × A are always isoclinic, and so have the same B̃₀.
        let g = builtin(SMALL[i]);
        let h = shuffled(&g.direct_product(&cyclic(n)), seed);
        let w = are_isoclinic(&g, &h);
        prop_assert!(w.is_some());
        prop_assert!(verify_witness(&g, &h, w.as_ref().unwrap()));
        let cfg = WedgeConfig::default();
        prop_assert_eq!(bogomolov_kernel(&g, &cfg).unwrap(), bogomolov_kernel(&h, &cfg).unwrap());
    }
}

#[test]
fn non_isoclinic_groups_are_rejected() {
    let pairs = [
        ("dihedral:4", "dihedral:3"),
        ("quaternion8", "cyclic:8"),
        ("alternating:4", "dicyclic:3"),
    ];
    for (a, b) in pairs {
        assert!(are_isoclinic(&builtin(a), &builtin(b)).is_none(), "{a} vs {b}");
    }
}
