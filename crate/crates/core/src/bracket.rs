//! Bracketings of composable sequences.
//!
//! Leaves are positions in a path listed in diagrammatic order (position 0 is
//! applied first). `Comp(outer, inner)` is `outer * inner`; `inner` covers the
//! earlier positions. The left-normal form `((h * g) * f)` nests in `outer`.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bracket {
    Leaf(usize),
    Comp(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn comp(outer: Bracket, inner: Bracket) -> Bracket {
        Bracket::Comp(Box::new(outer), Box::new(inner))
    }

    /// First position covered.
    pub fn lo(&self) -> usize {
        match self {
            Bracket::Leaf(i) => *i,
            Bracket::Comp(_, inner) => inner.lo(),
        }
    }

    /// One past the last position covered.
    pub fn hi(&self) -> usize {
        match self {
            Bracket::Leaf(i) => i + 1,
            Bracket::Comp(outer, _) => outer.hi(),
        }
    }

    pub fn len(&self) -> usize {
        self.hi() - self.lo()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True if the leaves are exactly `lo..hi` in order.
    pub fn is_well_formed(&self) -> bool {
        match self {
            Bracket::Leaf(_) => true,
            Bracket::Comp(o, i) => o.is_well_formed() && i.is_well_formed() && i.hi() == o.lo(),
        }
    }

    /// `((x_{hi-1} * x_{hi-2}) * ..) * x_lo`
    pub fn left_normal(lo: usize, hi: usize) -> Bracket {
        assert!(hi > lo, "empty bracketing");
        let mut b = Bracket::Leaf(hi - 1);
        for i in (lo..hi - 1).rev() {
            b = Bracket::comp(b, Bracket::Leaf(i));
        }
        b
    }

    /// `x_{hi-1} * (x_{hi-2} * (.. * x_lo))`
    pub fn right_normal(lo: usize, hi: usize) -> Bracket {
        assert!(hi > lo, "empty bracketing");
        let mut b = Bracket::Leaf(lo);
        for i in lo + 1..hi {
            b = Bracket::comp(Bracket::Leaf(i), b);
        }
        b
    }

    /// Every bracketing of `lo..hi` (Catalan many), in a fixed order.
    pub fn all(lo: usize, hi: usize) -> Vec<Bracket> {
        assert!(hi > lo, "empty bracketing");
        if hi - lo == 1 {
            return vec![Bracket::Leaf(lo)];
        }
        let mut out = Vec::new();
        for split in lo + 1..hi {
            for inner in Bracket::all(lo, split) {
                for outer in Bracket::all(split, hi) {
                    out.push(Bracket::comp(outer, inner.clone()));
                }
            }
        }
        out
    }

    /// Shifts every leaf by `delta`.
    pub fn shifted(&self, delta: isize) -> Bracket {
        match self {
            Bracket::Leaf(i) => Bracket::Leaf((*i as isize + delta) as usize),
            Bracket::Comp(o, i) => Bracket::comp(o.shifted(delta), i.shifted(delta)),
        }
    }

    /// The subtree covering exactly `lo..hi`, if there is one.
    pub fn find(&self, lo: usize, hi: usize) -> Option<&Bracket> {
        if self.lo() == lo && self.hi() == hi {
            return Some(self);
        }
        match self {
            Bracket::Leaf(_) => None,
            Bracket::Comp(o, i) => o.find(lo, hi).or_else(|| i.find(lo, hi)),
        }
    }
}

impl fmt::Debug for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(i) => write!(f, "{i}"),
            Bracket::Comp(o, i) => write!(f, "({o:?} {i:?})"),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| Bracket::all(0, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
        assert!(Bracket::all(0, 4).iter().all(|b| b.is_well_formed() && b.len() == 4));
    }

    #[test]
    fn normal_forms() {
        assert_eq!(format!("{:?}", Bracket::left_normal(0, 3)), "((2 1) 0)");
        assert_eq!(format!("{:?}", Bracket::right_normal(0, 3)), "(2 (1 0))");
    }
}
