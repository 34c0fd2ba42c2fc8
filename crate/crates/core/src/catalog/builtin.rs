//! Named group families.

use serde::{Deserialize, Serialize};

use crate::group::{build_from_permutations, FiniteGroup, Permutation};

use super::CatalogError;

/// Exponent type of an extraspecial group of order `p³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExponentType {
    /// Heisenberg group, exponent `p`.
    P,
    /// `Z/p² ⋊ Z/p`, exponent `p²`.
    P2,
}

/// A builtin group descriptor, as it appears in group spec files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Builtin {
    Cyclic {
        n: usize,
    },
    /// Dihedral group of order `2n`.
    Dihedral {
        n: usize,
    },
    Quaternion8,
    /// Dicyclic group of order `4n`; `n = 3` gives `Z/3 ⋊ Z/4`.
    Dicyclic {
        n: usize,
    },
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    /// `(Z/p)^k`.
    Elementary {
        p: usize,
        k: usize,
    },
    DirectProduct {
        factors: Vec<Builtin>,
    },
    Extraspecial {
        p: usize,
        exponent: ExponentType,
    },
}

impl Builtin {
    /// Parses the compact command-line form, e.g. `cyclic:6`, `dihedral:4`,
    /// `extraspecial:3:p2`, `elementary:2:3`, `product:(symmetric:3)(cyclic:2)`.
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("product:") {
            let mut factors = Vec::new();
            let mut depth = 0usize;
            let mut start = None;
            for (i, ch) in rest.char_indices() {
                match ch {
                    '(' => {
                        if depth == 0 {
                            start = Some(i + 1);
                        }
                        depth += 1;
                    }
                    ')' => {
                        depth = depth.checked_sub(1).ok_or_else(|| unknown(text))?;
                        if depth == 0 {
                            factors.push(Builtin::parse(&rest[start.unwrap()..i])?);
                        }
                    }
                    c if depth == 0 && !c.is_whitespace() => return Err(unknown(text)),
                    _ => {}
                }
            }
            if depth != 0 || factors.is_empty() {
                return Err(unknown(text));
            }
            return Ok(Builtin::DirectProduct { factors });
        }
        let parts: Vec<&str> = text.split(':').collect();
        let num = |i: usize| -> Result<usize, CatalogError> {
            parts
                .get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| CatalogError::ParamOutOfRange(text.to_string()))
        };
        let b = match parts[0] {
            "cyclic" => Builtin::Cyclic { n: num(1)? },
            "dihedral" => Builtin::Dihedral { n: num(1)? },
            "quaternion8" => Builtin::Quaternion8,
            "dicyclic" => Builtin::Dicyclic { n: num(1)? },
            "symmetric" => Builtin::Symmetric { n: num(1)? },
            "alternating" => Builtin::Alternating { n: num(1)? },
            "elementary" => Builtin::Elementary { p: num(1)?, k: num(2)? },
            "extraspecial" => {
                let exponent = match parts.get(2).copied() {
                    Some("p") => ExponentType::P,
                    Some("p2") => ExponentType::P2,
                    _ => return Err(CatalogError::ParamOutOfRange(text.to_string())),
                };
                Builtin::Extraspecial { p: num(1)?, exponent }
            }
            _ => return Err(unknown(text)),
        };
        Ok(b)
    }

    pub fn name(&self) -> String {
        match self {
            Builtin::Cyclic { n } => format!("C{n}"),
            Builtin::Dihedral { n } => format!("D{n}"),
            Builtin::Quaternion8 => "Q8".into(),
            Builtin::Dicyclic { n } => format!("Dic{n}"),
            Builtin::Symmetric { n } => format!("S{n}"),
            Builtin::Alternating { n } => format!("A{n}"),
            Builtin::Elementary { p, k } => format!("C{p}^{k}"),
            Builtin::DirectProduct { factors } => factors.iter().map(Builtin::name).collect::<Vec<_>>().join("x"),
            Builtin::Extraspecial {
                p,
                exponent: ExponentType::P,
            } => format!("ES{p}_p"),
            Builtin::Extraspecial {
                p,
                exponent: ExponentType::P2,
            } => format!("ES{p}_p2"),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, CatalogError> {
        let g = match *self {
            Builtin::Cyclic { n } => {
                range(self, n, 1, 4096)?;
                cyclic(n)
            }
            Builtin::Dihedral { n } => {
                range(self, n, 1, 2048)?;
                dihedral(n)
            }
            Builtin::Quaternion8 => dicyclic(2),
            Builtin::Dicyclic { n } => {
                range(self, n, 2, 1024)?;
                dicyclic(n)
            }
            Builtin::Symmetric { n } => {
                range(self, n, 1, 5)?;
                symmetric(n, false)
            }
            Builtin::Alternating { n } => {
                range(self, n, 1, 5)?;
                symmetric(n, true)
            }
            Builtin::Elementary { p, k } => {
                if !is_prime(p) || p.checked_pow(k as u32).is_none_or(|o| o > 4096) {
                    return Err(CatalogError::ParamOutOfRange(format!("{self:?}")));
                }
                (0..k).fold(FiniteGroup::trivial(), |acc, _| acc.direct_product(&cyclic(p)))
            }
            Builtin::DirectProduct { ref factors } => {
                let mut acc = FiniteGroup::trivial();
                for f in factors {
                    let g = f.build()?;
                    if acc.order() * g.order() > 4096 {
                        return Err(CatalogError::ParamOutOfRange(format!("{self:?}")));
                    }
                    acc = acc.direct_product(&g);
                }
                acc
            }
            Builtin::Extraspecial { p, exponent } => {
                if p != 3 && p != 5 {
                    return Err(CatalogError::ParamOutOfRange(format!("{self:?}")));
                }
                extraspecial(p, exponent)
            }
        };
        Ok(g.with_label(self.name()))
    }
}

fn unknown(text: &str) -> CatalogError {
    CatalogError::UnknownFamily(text.to_string())
}

fn range(b: &Builtin, n: usize, lo: usize, hi: usize) -> Result<(), CatalogError> {
    if n < lo || n > hi {
        return Err(CatalogError::ParamOutOfRange(format!("{b:?}")));
    }
    Ok(())
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn table(order: usize, f: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    FiniteGroup::from_fn("", order, f).expect("builtin construction is a group")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    table(n, |a, b| (a + b) % n)
}

/// Elements `r^i s^j` encoded as `j * n + i`, with `s r s⁻¹ = r⁻¹`.
pub fn dihedral(n: usize) -> FiniteGroup {
    table(2 * n, |x, y| {
        let (i1, j1) = (x % n, x / n);
        let (i2, j2) = (y % n, y / n);
        let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
        ((j1 + j2) % 2) * n + i
    })
}

/// Elements `a^i x^j` (`0 ≤ i < 2n`, `j ∈ {0,1}`) encoded as `j * 2n + i`,
/// with `x² = a^n` and `x a x⁻¹ = a⁻¹`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    table(2 * m, |x, y| {
        let (i1, j1) = (x % m, x / m);
        let (i2, j2) = (y % m, y / m);
        // a^i1 x^j1 a^i2 x^j2 = a^(i1 ± i2) x^(j1 + j2)
        let mut i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
        let mut j = j1 + j2;
        if j == 2 {
            j = 0;
            i = (i + n) % m;
        }
        j * m + i
    })
}

fn symmetric(n: usize, alternating: bool) -> FiniteGroup {
    if n <= 1 || (alternating && n <= 2) {
        return FiniteGroup::trivial();
    }
    let gens: Vec<Permutation> = if alternating {
        // 3-cycles (1 2 k) generate A_n.
        (3..=n)
            .map(|k| Permutation::from_cycles(n, &format!("(1 2 {k})")).unwrap())
            .collect()
    } else {
        let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        vec![
            Permutation::from_cycles(n, "(1 2)").unwrap(),
            Permutation::from_cycles(n, &format!("({})", cycle.join(" "))).unwrap(),
        ]
    };
    build_from_permutations(&gens, 120).expect("within cap").0
}

fn extraspecial(p: usize, exponent: ExponentType) -> FiniteGroup {
    match exponent {
        // Upper unitriangular (a, b, c): (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
        ExponentType::P => table(p * p * p, |x, y| {
            let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
            let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
            let (a, b, c) = ((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
            a * p * p + b * p + c
        }),
        // x^i y^j with y x y⁻¹ = x^(1+p): x^i y^j x^k y^l = x^(i + k(1+p)^j) y^(j+l).
        ExponentType::P2 => {
            let m = p * p;
            table(m * p, |u, v| {
                let (i1, j1) = (u % m, u / m);
                let (i2, j2) = (v % m, v / m);
                let twist = (0..j1).fold(1, |acc, _| acc * (1 + p) % m);
                let i = (i1 + i2 * twist) % m;
                ((j1 + j2) % p) * m + i
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, derived_subgroup};

    #[test]
    fn orders() {
        let cases = [
            ("cyclic:6", 6),
            ("dihedral:4", 8),
            ("quaternion8", 8),
            ("dicyclic:3", 12),
            ("symmetric:4", 24),
            ("alternating:4", 12),
            ("symmetric:5", 120),
            ("elementary:2:3", 8),
            ("extraspecial:3:p", 27),
            ("extraspecial:5:p2", 125),
            ("product:(symmetric:3)(cyclic:2)", 12),
        ];
        for (text, order) in cases {
            let g = Builtin::parse(text).unwrap().build().unwrap();
            assert_eq!(g.order(), order, "{text}");
        }
    }

    #[test]
    fn cyclic_is_abelian() {
        assert!(Builtin::Cyclic { n: 6 }.build().unwrap().is_abelian());
    }

    #[test]
    fn quaternion_structure() {
        let q = Builtin::Quaternion8.build().unwrap();
        assert_eq!(center(&q).order(), 2);
        assert_eq!(derived_subgroup(&q).order(), 2);
        // Q8 has a unique involution.
        assert_eq!(q.order_census()[&2], 1);
    }

    #[test]
    fn extraspecial_pair() {
        for e in [ExponentType::P, ExponentType::P2] {
            let g = Builtin::Extraspecial { p: 3, exponent: e }.build().unwrap();
            assert_eq!(g.order(), 27);
            assert_eq!(center(&g).order(), 3);
            assert_eq!(derived_subgroup(&g).order(), 3);
        }
        let heis = Builtin::Extraspecial {
            p: 3,
            exponent: ExponentType::P,
        }
        .build()
        .unwrap();
        assert!(heis.elements().all(|x| heis.pow(x, 3) == 0));
        let other = Builtin::Extraspecial {
            p: 3,
            exponent: ExponentType::P2,
        }
        .build()
        .unwrap();
        assert!(other.elements().any(|x| other.element_order(x) == 9));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            Builtin::parse("mathieu:11"),
            Err(CatalogError::UnknownFamily(_))
        ));
        assert!(matches!(
            Builtin::parse("symmetric:6").unwrap().build(),
            Err(CatalogError::ParamOutOfRange(_))
        ));
        assert!(matches!(
            Builtin::parse("extraspecial:7:p").unwrap().build(),
            Err(CatalogError::ParamOutOfRange(_))
        ));
        assert!(Builtin::parse("product:(cyclic:2").is_err());
    }

    #[test]
    fn json_descriptor() {
        let b: Builtin = serde_json::from_str(
            r#"{"family":"direct_product","factors":[{"family":"symmetric","n":3},{"family":"cyclic","n":2}]}"#,
        )
        .unwrap();
        assert_eq!(b.build().unwrap().order(), 12);
        let e: Builtin = serde_json::from_str(r#"{"family":"extraspecial","p":3,"exponent":"p2"}"#).unwrap();
        assert_eq!(
            e,
            Builtin::Extraspecial {
                p: 3,
                exponent: ExponentType::P2
            }
        );
    }
}
