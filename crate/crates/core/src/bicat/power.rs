//! Cartesian powers `C^n` with componentwise structure.

use super::Bicategory;
use crate::error::{CatError, Result};

#[derive(Debug, Clone, Copy)]
pub struct Power<'a, C> {
    pub base: &'a C,
    pub n: usize,
}

impl<'a, C> Power<'a, C> {
    pub fn new(base: &'a C, n: usize) -> Self {
        Power { base, n }
    }
}

fn zip<T, U, V>(xs: &[T], ys: &[U], f: impl Fn(&T, &U) -> Result<V>) -> Result<Vec<V>> {
    if xs.len() != ys.len() {
        return Err(CatError::NotComposable(format!("tuples of length {} and {}", xs.len(), ys.len())));
    }
    xs.iter().zip(ys).map(|(x, y)| f(x, y)).collect()
}

/// All tuples picking one element from each list.
pub(crate) fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl<C: Bicategory> Bicategory for Power<'_, C> {
    type Obj = Vec<C::Obj>;
    type One = Vec<C::One>;
    type Two = Vec<C::Two>;

    fn one_src(&self, f: &Self::One) -> Self::Obj {
        f.iter().map(|x| self.base.one_src(x)).collect()
    }
    fn one_tgt(&self, f: &Self::One) -> Self::Obj {
        f.iter().map(|x| self.base.one_tgt(x)).collect()
    }
    fn two_src(&self, a: &Self::Two) -> Self::One {
        a.iter().map(|x| self.base.two_src(x)).collect()
    }
    fn two_tgt(&self, a: &Self::Two) -> Self::One {
        a.iter().map(|x| self.base.two_tgt(x)).collect()
    }
    fn id1(&self, a: &Self::Obj) -> Self::One {
        a.iter().map(|x| self.base.id1(x)).collect()
    }
    fn id2(&self, f: &Self::One) -> Self::Two {
        f.iter().map(|x| self.base.id2(x)).collect()
    }
    fn comp1(&self, g: &Self::One, f: &Self::One) -> Result<Self::One> {
        zip(g, f, |g, f| self.base.comp1(g, f))
    }
    fn vcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        zip(b, a, |b, a| self.base.vcomp(b, a))
    }
    fn hcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        zip(b, a, |b, a| self.base.hcomp(b, a))
    }
    fn assoc(&self, h: &Self::One, g: &Self::One, f: &Self::One) -> Result<Self::Two> {
        let hg: Vec<(C::One, C::One)> = zip(h, g, |h, g| Ok((h.clone(), g.clone())))?;
        zip(&hg, f, |(h, g), f| self.base.assoc(h, g, f))
    }
    fn lunit(&self, f: &Self::One) -> Result<Self::Two> {
        f.iter().map(|x| self.base.lunit(x)).collect()
    }
    fn runit(&self, f: &Self::One) -> Result<Self::Two> {
        f.iter().map(|x| self.base.runit(x)).collect()
    }
    fn inverse2(&self, a: &Self::Two) -> Option<Self::Two> {
        a.iter().map(|x| self.base.inverse2(x)).collect()
    }
    fn objects(&self) -> Vec<Self::Obj> {
        product(&vec![self.base.objects(); self.n])
    }
    fn one_cells(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One> {
        let lists: Vec<Vec<C::One>> = a.iter().zip(b).map(|(x, y)| self.base.one_cells(x, y)).collect();
        product(&lists)
    }
    fn two_cells(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two> {
        let lists: Vec<Vec<C::Two>> = f.iter().zip(g).map(|(x, y)| self.base.two_cells(x, y)).collect();
        product(&lists)
    }
    fn two_cells_from(&self, f: &Self::One) -> Vec<Self::Two> {
        let lists: Vec<Vec<C::Two>> = f.iter().map(|x| self.base.two_cells_from(x)).collect();
        product(&lists)
    }
    fn find_iso(&self, f: &Self::One, g: &Self::One) -> Option<Self::Two> {
        f.iter().zip(g).map(|(x, y)| self.base.find_iso(x, y)).collect()
    }
    fn enumeration_is_complete(&self) -> bool {
        self.base.enumeration_is_complete()
    }
    fn decide_equivalence(&self, f: &Self::One) -> Option<bool> {
        let mut all = true;
        for x in f {
            match self.base.decide_equivalence(x) {
                Some(false) => return Some(false),
                Some(true) => {}
                None => all = false,
            }
        }
        all.then_some(true)
    }
}
