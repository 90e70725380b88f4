//! Binary products of bicategories and the interval `𝟏 = {0 -> 1}`.

use super::Bicategory;
use crate::error::{not_composable, Result};

/// `C × D`, componentwise.
#[derive(Debug, Clone)]
pub struct ProductBicategory<'a, C, D> {
    pub left: &'a C,
    pub right: &'a D,
}

impl<'a, C, D> ProductBicategory<'a, C, D> {
    pub fn new(left: &'a C, right: &'a D) -> Self {
        ProductBicategory { left, right }
    }
}

impl<C: Bicategory, D: Bicategory> Bicategory for ProductBicategory<'_, C, D> {
    type Obj = (C::Obj, D::Obj);
    type One = (C::One, D::One);
    type Two = (C::Two, D::Two);

    fn one_src(&self, f: &Self::One) -> Self::Obj {
        (self.left.one_src(&f.0), self.right.one_src(&f.1))
    }
    fn one_tgt(&self, f: &Self::One) -> Self::Obj {
        (self.left.one_tgt(&f.0), self.right.one_tgt(&f.1))
    }
    fn two_src(&self, a: &Self::Two) -> Self::One {
        (self.left.two_src(&a.0), self.right.two_src(&a.1))
    }
    fn two_tgt(&self, a: &Self::Two) -> Self::One {
        (self.left.two_tgt(&a.0), self.right.two_tgt(&a.1))
    }
    fn id1(&self, a: &Self::Obj) -> Self::One {
        (self.left.id1(&a.0), self.right.id1(&a.1))
    }
    fn id2(&self, f: &Self::One) -> Self::Two {
        (self.left.id2(&f.0), self.right.id2(&f.1))
    }
    fn comp1(&self, g: &Self::One, f: &Self::One) -> Result<Self::One> {
        Ok((self.left.comp1(&g.0, &f.0)?, self.right.comp1(&g.1, &f.1)?))
    }
    fn vcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        Ok((self.left.vcomp(&b.0, &a.0)?, self.right.vcomp(&b.1, &a.1)?))
    }
    fn hcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        Ok((self.left.hcomp(&b.0, &a.0)?, self.right.hcomp(&b.1, &a.1)?))
    }
    fn assoc(&self, h: &Self::One, g: &Self::One, f: &Self::One) -> Result<Self::Two> {
        Ok((self.left.assoc(&h.0, &g.0, &f.0)?, self.right.assoc(&h.1, &g.1, &f.1)?))
    }
    fn lunit(&self, f: &Self::One) -> Result<Self::Two> {
        Ok((self.left.lunit(&f.0)?, self.right.lunit(&f.1)?))
    }
    fn runit(&self, f: &Self::One) -> Result<Self::Two> {
        Ok((self.left.runit(&f.0)?, self.right.runit(&f.1)?))
    }
    fn inverse2(&self, a: &Self::Two) -> Option<Self::Two> {
        Some((self.left.inverse2(&a.0)?, self.right.inverse2(&a.1)?))
    }
    fn objects(&self) -> Vec<Self::Obj> {
        let rs = self.right.objects();
        self.left.objects().into_iter().flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn one_cells(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One> {
        let rs = self.right.one_cells(&a.1, &b.1);
        self.left
            .one_cells(&a.0, &b.0)
            .into_iter()
            .flat_map(|f| rs.iter().map(move |g| (f.clone(), g.clone())))
            .collect()
    }
    fn two_cells(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two> {
        let rs = self.right.two_cells(&f.1, &g.1);
        self.left
            .two_cells(&f.0, &g.0)
            .into_iter()
            .flat_map(|x| rs.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    }
    fn enumeration_is_complete(&self) -> bool {
        self.left.enumeration_is_complete() && self.right.enumeration_is_complete()
    }
    fn decide_equivalence(&self, f: &Self::One) -> Option<bool> {
        match (self.left.decide_equivalence(&f.0), self.right.decide_equivalence(&f.1)) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        }
    }
}

/// The walking arrow `0 -> 1` as a locally discrete bicategory. A 1-cell is
/// its `(source, target)` pair; the only 2-cells are identities, named by
/// their 1-cell.
#[derive(Debug, Clone, Copy, Default)]
pub struct Interval;

impl Bicategory for Interval {
    type Obj = u8;
    type One = (u8, u8);
    type Two = (u8, u8);

    fn one_src(&self, f: &(u8, u8)) -> u8 {
        f.0
    }
    fn one_tgt(&self, f: &(u8, u8)) -> u8 {
        f.1
    }
    fn two_src(&self, a: &(u8, u8)) -> (u8, u8) {
        *a
    }
    fn two_tgt(&self, a: &(u8, u8)) -> (u8, u8) {
        *a
    }
    fn id1(&self, a: &u8) -> (u8, u8) {
        (*a, *a)
    }
    fn id2(&self, f: &(u8, u8)) -> (u8, u8) {
        *f
    }
    fn comp1(&self, g: &(u8, u8), f: &(u8, u8)) -> Result<(u8, u8)> {
        if f.1 != g.0 {
            return not_composable(format!("{g:?} * {f:?}"));
        }
        Ok((f.0, g.1))
    }
    fn vcomp(&self, b: &(u8, u8), a: &(u8, u8)) -> Result<(u8, u8)> {
        if a != b {
            return not_composable(format!("{b:?} ∘ {a:?}"));
        }
        Ok(*a)
    }
    fn hcomp(&self, b: &(u8, u8), a: &(u8, u8)) -> Result<(u8, u8)> {
        self.comp1(b, a)
    }
    fn assoc(&self, h: &(u8, u8), g: &(u8, u8), f: &(u8, u8)) -> Result<(u8, u8)> {
        self.comp1(h, &self.comp1(g, f)?)
    }
    fn lunit(&self, f: &(u8, u8)) -> Result<(u8, u8)> {
        Ok(*f)
    }
    fn runit(&self, f: &(u8, u8)) -> Result<(u8, u8)> {
        Ok(*f)
    }
    fn inverse2(&self, a: &(u8, u8)) -> Option<(u8, u8)> {
        Some(*a)
    }
    fn objects(&self) -> Vec<u8> {
        vec![0, 1]
    }
    fn one_cells(&self, a: &u8, b: &u8) -> Vec<(u8, u8)> {
        if a <= b {
            vec![(*a, *b)]
        } else {
            Vec::new()
        }
    }
    fn two_cells(&self, f: &(u8, u8), g: &(u8, u8)) -> Vec<(u8, u8)> {
        if f == g {
            vec![*f]
        } else {
            Vec::new()
        }
    }
    fn decide_equivalence(&self, f: &(u8, u8)) -> Option<bool> {
        Some(f.0 == f.1)
    }
}
