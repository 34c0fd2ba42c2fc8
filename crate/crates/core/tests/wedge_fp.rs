use grouplab::catalog::builtin::{cyclic, dihedral, Builtin};
use grouplab::fp::{enumerate_group, EnumerationConfig, Letter, Presentation, Strategy, Word};
use grouplab::group::{derived_subgroup, find_isomorphism, FiniteGroup};
use grouplab::wedge::{compute_wedge, WedgeConfig, WedgeVariant};

fn builtin(desc: &str) -> FiniteGroup {
    Builtin::parse(desc).unwrap().build().unwrap()
}

fn word(s: &str) -> Word {
    // 'a', 'b', ... are generators; upper case are inverses.
    s.chars()
        .map(|c| {
            let g = (c.to_ascii_lowercase() as u8 - b'a') as usize;
            if c.is_ascii_uppercase() {
                Letter::gen_inv(g)
            } else {
                Letter::gen(g)
            }
        })
        .collect()
}

fn pres(n: usize, rels: &[&str]) -> Presentation {
    Presentation::new("P", n, rels.iter().map(|r| word(r)).collect()).unwrap()
}

#[test]
fn classical_presentations_enumerate_to_the_right_groups() {
    let cases: Vec<(Presentation, FiniteGroup)> = vec![
        (pres(1, &["aaaaaaa"]), cyclic(7)),
        (pres(2, &["aaaa", "bb", "abab"]), dihedral(4)),
        (pres(2, &["aaaa", "aaBB", "abaB"]), builtin("quaternion8")),
        (pres(2, &["aaa", "bb", "abab"]), dihedral(3)),
        (pres(2, &["aa", "bbb", "ababab"]), builtin("alternating:4")),
        (pres(2, &["aa", "bbb", "abababab"]), builtin("symmetric:4")),
        (pres(2, &["aaa", "bbb", "abAB"]), builtin("elementary:3:2")),
    ];
    for (p, expected) in cases {
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            for simplify in [false, true] {
                let cfg = EnumerationConfig::default()
                    .with_strategy(strategy)
                    .with_simplify(simplify);
                let r = enumerate_group(&p, &cfg).unwrap();
                assert!(r.satisfies(&p.relators));
                assert!(r.group.validate().is_ok());
                assert!(
                    find_isomorphism(&r.group, &expected).is_some(),
                    "{strategy:?} {simplify}"
                );
            }
        }
    }
}

#[test]
fn presentation_json_round_trip() {
    let p = pres(2, &["aaaa", "aaBB", "abaB"]);
    assert_eq!(Presentation::from_json(&p.to_json()).unwrap(), p);
}

fn test_groups() -> Vec<FiniteGroup> {
    [
        "dihedral:3",
        "dihedral:4",
        "quaternion8",
        "alternating:4",
        "elementary:2:3",
        "dicyclic:3",
        "cyclic:6",
    ]
    .iter()
    .map(|d| builtin(d))
    .collect()
}

#[test]
fn baseline_and_simplified_paths_agree() {
    for g in test_groups() {
        for variant in [WedgeVariant::Curly, WedgeVariant::Exterior] {
            let orders: Vec<usize> = [
                (Strategy::Hlt, true),
                (Strategy::Hlt, false),
                (Strategy::Felsch, true),
                (Strategy::Felsch, false),
            ]
            .iter()
            .map(|&(s, simplify)| {
                let cfg = WedgeConfig {
                    enumeration: EnumerationConfig::default().with_strategy(s).with_simplify(simplify),
                    ..WedgeConfig::default()
                };
                let w = compute_wedge(&g, variant, &cfg).unwrap();
                assert!(w.realization.satisfies(&w.presentation.presentation.relators));
                w.order()
            })
            .collect();
            assert!(
                orders.windows(2).all(|w| w[0] == w[1]),
                "{} {variant:?}: {orders:?}",
                g.label()
            );
        }
    }
}

#[test]
fn curly_square_is_a_quotient_of_the_exterior_square() {
    // Every exterior relator is a curly relator, so m∧n ↦ m⋏n is onto.
    let cfg = WedgeConfig::default();
    for g in test_groups() {
        let ext = compute_wedge(&g, WedgeVariant::Exterior, &cfg).unwrap();
        let curly = compute_wedge(&g, WedgeVariant::Curly, &cfg).unwrap();
        assert_eq!(ext.order() % curly.order(), 0, "{}", g.label());
        let derived = derived_subgroup(&g).order();
        assert_eq!(curly.order(), curly.kernel.order() * derived);
        assert_eq!(ext.order(), ext.kernel.order() * derived);
        // κ factors through the surjection on generators.
        for m in g.elements() {
            for n in g.elements() {
                assert_eq!(
                    ext.kappa.apply(ext.pair_image(m, n)),
                    curly.kappa.apply(curly.pair_image(m, n))
                );
            }
        }
    }
}

#[test]
fn known_multiplier_orders() {
    // Multipliers of these groups are classical: C_n and S3 and Q8 trivial,
    // V4, D4 and A4 of order 2, (C2)^3 of order 8, C3 × C3 of order 3.
    let cfg = WedgeConfig::default();
    for (d, m) in [
        ("cyclic:5", 1),
        ("dihedral:3", 1),
        ("quaternion8", 1),
        ("elementary:2:2", 2),
        ("dihedral:4", 2),
        ("alternating:4", 2),
        ("elementary:2:3", 8),
        ("elementary:3:2", 3),
    ] {
        let w = compute_wedge(&builtin(d), WedgeVariant::Exterior, &cfg).unwrap();
        assert_eq!(w.kernel.order(), m, "{d}");
    }
}

#[test]
fn coset_cap_is_reported() {
    let cfg = WedgeConfig {
        enumeration: EnumerationConfig::default().with_max_cosets(10),
        ..WedgeConfig::default()
    };
    let err = compute_wedge(&builtin("symmetric:4"), WedgeVariant::Curly, &cfg).unwrap_err();
    assert!(err.to_string().contains("exceeded"), "{err}");
}
