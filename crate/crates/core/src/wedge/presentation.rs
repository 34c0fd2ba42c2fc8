use serde::{Deserialize, Serialize};

use crate::fp::{Letter, Presentation, Word};
use crate::group::{Elem, FiniteGroup};

use super::WedgeError;

/// Which square of `G` to present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WedgeVariant {
    /// `G ⋏ G`: crossed relations plus `x ⋏ y = 1` for every commuting pair.
    Curly,
    /// Miller's exterior square `G ∧ G`: crossed relations plus `x ∧ x = 1`.
    Exterior,
}

impl WedgeVariant {
    pub fn symbol(self) -> &'static str {
        match self {
            WedgeVariant::Curly => "⋏",
            WedgeVariant::Exterior => "∧",
        }
    }
}

/// Relator counts before deduplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCounts {
    pub crossed_left: usize,
    pub crossed_right: usize,
    pub vanishing: usize,
}

/// Presentation of `G ⋏ G` or `G ∧ G` on one generator per ordered pair.
#[derive(Clone, Debug)]
pub struct WedgePresentation {
    pub variant: WedgeVariant,
    pub base_order: usize,
    /// Deduplicated and cyclically reduced.
    pub presentation: Presentation,
    pub raw_counts: RelatorCounts,
}

impl WedgePresentation {
    /// Generator index of the symbol `m ⋏ n`.
    #[inline]
    pub fn pair_gen(&self, m: Elem, n: Elem) -> usize {
        pair_gen(self.base_order, m, n)
    }

    /// The pair `(m, n)` behind a generator.
    #[inline]
    pub fn pair_of(&self, gen: usize) -> (Elem, Elem) {
        (gen / self.base_order, gen % self.base_order)
    }
}

#[inline]
fn pair_gen(order: usize, m: Elem, n: Elem) -> usize {
    m * order + n
}

/// Builds the defining relations, for all `m, m', n, n'`:
///
/// - `(m m' ⋏ n)⁻¹ (^m m' ⋏ ^m n) (m ⋏ n)`
/// - `(m ⋏ n n')⁻¹ (m ⋏ n) (^n m ⋏ ^n n')`
/// - `x ⋏ y` for commuting `x, y` (curly) or `x ∧ x` (exterior).
pub fn build_wedge_presentation(
    g: &FiniteGroup,
    variant: WedgeVariant,
    cap: usize,
) -> Result<WedgePresentation, WedgeError> {
    let n = g.order();
    if n > cap {
        return Err(WedgeError::GroupTooLarge { order: n, cap });
    }
    let sym = |m: Elem, k: Elem| Letter::gen(pair_gen(n, m, k));
    let mut relators: Vec<Word> = Vec::with_capacity(2 * n * n * n + n * n);
    let mut counts = RelatorCounts::default();
    for m in g.elements() {
        for m2 in g.elements() {
            for k in g.elements() {
                relators.push(vec![
                    sym(g.mul(m, m2), k).inverse(),
                    sym(g.conj(m, m2), g.conj(m, k)),
                    sym(m, k),
                ]);
                counts.crossed_left += 1;
            }
        }
    }
    for m in g.elements() {
        for k in g.elements() {
            for k2 in g.elements() {
                relators.push(vec![
                    sym(m, g.mul(k, k2)).inverse(),
                    sym(m, k),
                    sym(g.conj(k, m), g.conj(k, k2)),
                ]);
                counts.crossed_right += 1;
            }
        }
    }
    match variant {
        WedgeVariant::Curly => {
            for x in g.elements() {
                for y in g.elements() {
                    if g.mul(x, y) == g.mul(y, x) {
                        relators.push(vec![sym(x, y)]);
                        counts.vanishing += 1;
                    }
                }
            }
        }
        WedgeVariant::Exterior => {
            for x in g.elements() {
                relators.push(vec![sym(x, x)]);
                counts.vanishing += 1;
            }
        }
    }
    let label = format!("{} {} {}", g.label(), variant.symbol(), g.label());
    let presentation = Presentation {
        label,
        num_generators: n * n,
        relators,
    }
    .preprocessed();
    Ok(WedgePresentation {
        variant,
        base_order: n,
        presentation,
        raw_counts: counts,
    })
}
