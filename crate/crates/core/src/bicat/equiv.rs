//! Search for weak inverses of 1-cells.

use super::Bicategory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneEquivalence<B: Bicategory> {
    /// `unit: g * f ⇒ I_A` and `counit: f * g ⇒ I_B`, both invertible.
    Equivalence { inverse: B::One, unit: B::Two, counit: B::Two },
    /// No candidate among the first `checked` worked. `definitive` is true when
    /// the candidate list was complete or the bicategory decided structurally.
    NotFound { checked: usize, definitive: bool },
}

impl<B: Bicategory> OneEquivalence<B> {
    pub fn is_equivalence(&self) -> bool {
        matches!(self, OneEquivalence::Equivalence { .. })
    }
}

/// Tries candidate inverses `g: B -> A` in enumeration order, at most `bound`
/// of them; the first `g` with `g * f ≅ I` and `f * g ≅ I` wins.
pub fn is_one_equivalence<B: Bicategory>(b: &B, f: &B::One, bound: usize) -> OneEquivalence<B> {
    let decided = b.decide_equivalence(f);
    if decided == Some(false) {
        return OneEquivalence::NotFound { checked: 0, definitive: true };
    }
    let (x, y) = (b.one_src(f), b.one_tgt(f));
    let mut candidates = b.one_cells(&y, &x);
    if let Some(g) = b.structural_inverse(f) {
        candidates.retain(|c| *c != g);
        candidates.insert(0, g);
    }
    let (ix, iy) = (b.id1(&x), b.id1(&y));
    let mut checked = 0;
    for g in candidates.iter().take(bound) {
        checked += 1;
        let (Ok(gf), Ok(fg)) = (b.comp1(g, f), b.comp1(f, g)) else { continue };
        if let (Some(unit), Some(counit)) = (b.find_iso(&gf, &ix), b.find_iso(&fg, &iy)) {
            return OneEquivalence::Equivalence { inverse: g.clone(), unit, counit };
        }
    }
    let definitive = b.enumeration_is_complete() && checked == candidates.len();
    OneEquivalence::NotFound { checked, definitive }
}
