//! Bicategory kernel.
//!
//! [`Bicategory`] is implemented by table presentations ([`PresentedBicategory`]),
//! by the symbolic matrix bicategory in [`crate::matmod`], by suspensions of
//! monoidal categories and by the Γ-construction. Everything else in this
//! module (coherence, pasting, law checking, pseudofunctors) is generic.
//!
//! Conventions: `comp1(g, f)` is `g * f` (first `f`, then `g`); `vcomp(b, a)`
//! is `b ∘ a`; `assoc(h, g, f)` is `α: h * (g * f) ⇒ (h * g) * f`;
//! `lunit(f)` is `l_f: I * f ⇒ f`; `runit(f)` is `r_f: f * I ⇒ f`.

mod equiv;
mod pasting;
mod power;
mod presented;
mod product;
mod pseudo;
mod smb;
mod suspension;
mod validate;

pub use equiv::{is_one_equivalence, OneEquivalence};
pub use pasting::{
    evaluate_pasting, evaluate_pasting_in_order, generate_diagram, rightmost_order, Edge, Face, PastingDiagram,
};
pub(crate) use power::product;
pub use power::Power;
pub use presented::{PresentedBicategory, PresentedBicategoryDoc};
pub use product::{Interval, ProductBicategory};
pub use pseudo::{
    validate_pseudofunctor, validate_transformation, ComposedPseudofunctor, IdentityPseudofunctor,
    IdentityTransformation, Pseudofunctor, Transformation,
};
pub use smb::{validate_strict_smb, Braiding, StrictSmb, Tensor, TwistedTensor};
pub use suspension::{DiscreteMonoid, MonoidalCategory, Suspension, TwoGroupZ2};
pub(crate) use validate::run_law;
pub use validate::validate_bicategory;

use crate::bracket::Bracket;
use crate::error::{not_composable, CatError, Result};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Bicategory {
    type Obj: Clone + Eq + Ord + Hash + Debug;
    type One: Clone + Eq + Ord + Hash + Debug;
    type Two: Clone + Eq + Ord + Hash + Debug;

    fn one_src(&self, f: &Self::One) -> Self::Obj;
    fn one_tgt(&self, f: &Self::One) -> Self::Obj;
    fn two_src(&self, a: &Self::Two) -> Self::One;
    fn two_tgt(&self, a: &Self::Two) -> Self::One;

    fn id1(&self, a: &Self::Obj) -> Self::One;
    fn id2(&self, f: &Self::One) -> Self::Two;
    /// `g * f`.
    fn comp1(&self, g: &Self::One, f: &Self::One) -> Result<Self::One>;
    /// `b ∘ a`.
    fn vcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two>;
    /// `b * a` for `a: f ⇒ f'`, `b: g ⇒ g'`.
    fn hcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two>;
    fn assoc(&self, h: &Self::One, g: &Self::One, f: &Self::One) -> Result<Self::Two>;
    fn lunit(&self, f: &Self::One) -> Result<Self::Two>;
    fn runit(&self, f: &Self::One) -> Result<Self::Two>;
    fn inverse2(&self, a: &Self::Two) -> Option<Self::Two>;

    /// Objects of the finite (or bounded) presentation.
    fn objects(&self) -> Vec<Self::Obj>;
    /// 1-cells `a -> b`, in a canonical order.
    fn one_cells(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One>;
    /// 2-cells `f ⇒ g`.
    fn two_cells(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two>;

    /// All 2-cells out of `f` into enumerated 1-cells.
    fn two_cells_from(&self, f: &Self::One) -> Vec<Self::Two> {
        let (a, b) = (self.one_src(f), self.one_tgt(f));
        self.one_cells(&a, &b).iter().flat_map(|g| self.two_cells(f, g)).collect()
    }

    /// Some invertible 2-cell `f ⇒ g`, if one exists.
    fn find_iso(&self, f: &Self::One, g: &Self::One) -> Option<Self::Two> {
        self.two_cells(f, g).into_iter().find(|c| self.inverse2(c).is_some())
    }

    /// Whether `one_cells` lists every 1-cell (so negative searches are definitive).
    fn enumeration_is_complete(&self) -> bool {
        true
    }

    /// A structural decision of whether `f` is a 1-equivalence, when the
    /// bicategory can answer without search.
    fn decide_equivalence(&self, _f: &Self::One) -> Option<bool> {
        None
    }

    /// A weak inverse known from the structure of `f`, tried before searching
    /// the enumerated hom (which may not reach it).
    fn structural_inverse(&self, _f: &Self::One) -> Option<Self::One> {
        None
    }
}

pub type Obj<B> = <B as Bicategory>::Obj;
pub type One<B> = <B as Bicategory>::One;
pub type Two<B> = <B as Bicategory>::Two;

/// Left whiskering `g * a`.
pub fn whisker_l<B: Bicategory>(b: &B, g: &B::One, a: &B::Two) -> Result<B::Two> {
    b.hcomp(&b.id2(g), a)
}

/// Right whiskering `a * f`.
pub fn whisker_r<B: Bicategory>(b: &B, a: &B::Two, f: &B::One) -> Result<B::Two> {
    b.hcomp(a, &b.id2(f))
}

/// Vertical composite of a list, first-applied first.
pub fn vcomp_seq<B: Bicategory>(b: &B, cells: &[B::Two]) -> Result<B::Two> {
    let (first, rest) =
        cells.split_first().ok_or_else(|| CatError::NotComposable("empty vertical composite".into()))?;
    rest.iter().try_fold(first.clone(), |acc, c| b.vcomp(c, &acc))
}

/// Inverse of an invertible 2-cell, or an error naming it.
pub fn invert<B: Bicategory>(b: &B, a: &B::Two) -> Result<B::Two> {
    b.inverse2(a).ok_or_else(|| CatError::Domain(format!("2-cell {a:?} is not invertible")))
}

/// The 1-cell a bracketing denotes over a word listed first-applied first.
pub fn composite<B: Bicategory>(b: &B, word: &[B::One], br: &Bracket) -> Result<B::One> {
    match br {
        Bracket::Leaf(i) => {
            word.get(*i).cloned().ok_or_else(|| CatError::NotComposable(format!("bracket leaf {i} outside word")))
        }
        Bracket::Comp(o, i) => b.comp1(&composite(b, word, o)?, &composite(b, word, i)?),
    }
}

/// A composable word of 1-cells with a bracketing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeWord<B: Bicategory> {
    pub cells: Vec<B::One>,
    pub bracket: Bracket,
}

impl<B: Bicategory> CompositeWord<B> {
    pub fn new(bicat: &B, cells: Vec<B::One>, bracket: Bracket) -> Result<Self> {
        check_word(bicat, &cells)?;
        if bracket.lo() != 0 || bracket.hi() != cells.len() || !bracket.is_well_formed() {
            return not_composable(format!("bracketing {bracket:?} does not match word of length {}", cells.len()));
        }
        Ok(CompositeWord { cells, bracket })
    }

    pub fn value(&self, bicat: &B) -> Result<B::One> {
        composite(bicat, &self.cells, &self.bracket)
    }
}

fn check_word<B: Bicategory>(b: &B, word: &[B::One]) -> Result<()> {
    if word.is_empty() {
        return not_composable("empty word");
    }
    for w in word.windows(2) {
        if b.one_tgt(&w[0]) != b.one_src(&w[1]) {
            return not_composable(format!("{:?} then {:?}", w[0], w[1]));
        }
    }
    Ok(())
}

/// The canonical 2-cell from the `from` bracketing to the left-normal one.
fn to_left_normal<B: Bicategory>(b: &B, word: &[B::One], br: &Bracket) -> Result<B::Two> {
    match br {
        Bracket::Leaf(i) => Ok(b.id2(&word[*i])),
        Bracket::Comp(o, i) => {
            let no = to_left_normal(b, word, o)?;
            let ni = to_left_normal(b, word, i)?;
            let step = b.hcomp(&no, &ni)?;
            let merge = merge_left_normal(b, word, o.lo(), o.hi(), i.lo())?;
            b.vcomp(&merge, &step)
        }
    }
}

/// `LN[mid, hi) * LN[lo, mid) ⇒ LN[lo, hi)` by repeated associators.
fn merge_left_normal<B: Bicategory>(b: &B, word: &[B::One], mid: usize, hi: usize, lo: usize) -> Result<B::Two> {
    let outer = composite(b, word, &Bracket::left_normal(mid, hi))?;
    if mid - lo == 1 {
        let inner = word[lo].clone();
        return Ok(b.id2(&b.comp1(&outer, &inner)?));
    }
    // LN[lo, mid) = X * x_lo with X = LN[lo+1, mid)
    let x = composite(b, word, &Bracket::left_normal(lo + 1, mid))?;
    let a = b.assoc(&outer, &x, &word[lo])?;
    let rest = merge_left_normal(b, word, mid, hi, lo + 1)?;
    let rest = whisker_r(b, &rest, &word[lo])?;
    b.vcomp(&rest, &a)
}

/// The unique coherence 2-isomorphism between two bracketings of one word
/// (first-applied first). Reassociates both sides to the left-normal form;
/// identity letters are ordinary letters and are never collapsed.
pub fn canonical_coherence<B: Bicategory>(b: &B, word: &[B::One], from: &Bracket, to: &Bracket) -> Result<B::Two> {
    check_word(b, word)?;
    for br in [from, to] {
        if br.lo() != 0 || br.hi() != word.len() || !br.is_well_formed() {
            return not_composable(format!("bracketing {br:?} does not match word of length {}", word.len()));
        }
    }
    if from == to {
        return Ok(b.id2(&composite(b, word, from)?));
    }
    let a = to_left_normal(b, word, from)?;
    let c = to_left_normal(b, word, to)?;
    b.vcomp(&invert(b, &c)?, &a)
}

/// 2-cell of a bracketed word in which the subtree covering `lo..hi` is
/// replaced by `cell` and every other leaf carries its identity.
pub(crate) fn cell_at<B: Bicategory>(
    b: &B,
    word: &[B::One],
    br: &Bracket,
    lo: usize,
    hi: usize,
    cell: &B::Two,
) -> Result<B::Two> {
    if br.lo() == lo && br.hi() == hi {
        return Ok(cell.clone());
    }
    match br {
        Bracket::Leaf(i) => Ok(b.id2(&word[*i])),
        Bracket::Comp(o, i) => {
            let oc = if o.lo() <= lo && hi <= o.hi() {
                cell_at(b, word, o, lo, hi, cell)?
            } else {
                b.id2(&composite(b, word, o)?)
            };
            let ic = if i.lo() <= lo && hi <= i.hi() {
                cell_at(b, word, i, lo, hi, cell)?
            } else {
                b.id2(&composite(b, word, i)?)
            };
            b.hcomp(&oc, &ic)
        }
    }
}

#[cfg(test)]
mod tests;
