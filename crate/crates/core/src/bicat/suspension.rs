//! One-object bicategories from monoidal categories.

use super::Bicategory;
use crate::error::{malformed, CatError, Result};
use std::fmt::Debug;
use std::hash::Hash;

pub trait MonoidalCategory {
    type Obj: Clone + Eq + Ord + Hash + Debug;
    type Mor: Clone + Eq + Ord + Hash + Debug;

    fn src(&self, m: &Self::Mor) -> Self::Obj;
    fn tgt(&self, m: &Self::Mor) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn inverse(&self, m: &Self::Mor) -> Option<Self::Mor>;

    fn unit(&self) -> Self::Obj;
    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    /// `(a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)`.
    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    /// `1 ⊗ a -> a`.
    fn left_unitor(&self, a: &Self::Obj) -> Result<Self::Mor>;
    /// `a ⊗ 1 -> a`.
    fn right_unitor(&self, a: &Self::Obj) -> Result<Self::Mor>;

    /// Enumerated objects (a bounded window for infinite instances).
    fn objects(&self) -> Vec<Self::Obj>;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;
}

/// The suspension `ΣM`: one object `()`, 1-cells the objects of `M`,
/// 2-cells its morphisms. Horizontal composition follows the order in which
/// cells are applied: `g * f = f ⊗ g`, so a composable chain `a_1, .., a_p`
/// composes to `a_1 ⊗ .. ⊗ a_p`.
#[derive(Debug, Clone)]
pub struct Suspension<M>(pub M);

impl<M: MonoidalCategory> Bicategory for Suspension<M> {
    type Obj = ();
    type One = M::Obj;
    type Two = M::Mor;

    fn one_src(&self, _: &M::Obj) {}
    fn one_tgt(&self, _: &M::Obj) {}
    fn two_src(&self, a: &M::Mor) -> M::Obj {
        self.0.src(a)
    }
    fn two_tgt(&self, a: &M::Mor) -> M::Obj {
        self.0.tgt(a)
    }
    fn id1(&self, _: &()) -> M::Obj {
        self.0.unit()
    }
    fn id2(&self, f: &M::Obj) -> M::Mor {
        self.0.id(f)
    }
    fn comp1(&self, g: &M::Obj, f: &M::Obj) -> Result<M::Obj> {
        self.0.tensor(f, g)
    }
    fn vcomp(&self, b: &M::Mor, a: &M::Mor) -> Result<M::Mor> {
        self.0.compose(b, a)
    }
    fn hcomp(&self, b: &M::Mor, a: &M::Mor) -> Result<M::Mor> {
        self.0.tensor_mor(a, b)
    }
    fn assoc(&self, h: &M::Obj, g: &M::Obj, f: &M::Obj) -> Result<M::Mor> {
        // h * (g * f) = (f ⊗ g) ⊗ h  ⇒  (h * g) * f = f ⊗ (g ⊗ h)
        self.0.associator(f, g, h)
    }
    fn lunit(&self, f: &M::Obj) -> Result<M::Mor> {
        self.0.right_unitor(f)
    }
    fn runit(&self, f: &M::Obj) -> Result<M::Mor> {
        self.0.left_unitor(f)
    }
    fn inverse2(&self, a: &M::Mor) -> Option<M::Mor> {
        self.0.inverse(a)
    }
    fn objects(&self) -> Vec<()> {
        vec![()]
    }
    fn one_cells(&self, _: &(), _: &()) -> Vec<M::Obj> {
        self.0.objects()
    }
    fn two_cells(&self, f: &M::Obj, g: &M::Obj) -> Vec<M::Mor> {
        self.0.hom(f, g)
    }
}

/// A finite monoid as a discrete strict monoidal category. Elements are
/// indices into `names`; the only morphisms are identities (named by their object).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteMonoid {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    unit: usize,
}

impl DiscreteMonoid {
    /// Checks closure, associativity and the unit.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = names.len();
        if n == 0 || unit >= n || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return malformed("monoid table is not a square table over its elements");
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return malformed(format!("{} is not a unit for {}", names[unit], names[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return malformed(format!("multiplication is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(DiscreteMonoid { names, table, unit })
    }

    pub fn trivial() -> Self {
        DiscreteMonoid { names: vec!["e".into()], table: vec![vec![0]], unit: 0 }
    }

    /// `ℤ/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        DiscreteMonoid { names: (0..n).map(|a| a.to_string()).collect(), table, unit: 0 }
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

impl MonoidalCategory for DiscreteMonoid {
    type Obj = usize;
    type Mor = usize;

    fn src(&self, m: &usize) -> usize {
        *m
    }
    fn tgt(&self, m: &usize) -> usize {
        *m
    }
    fn id(&self, a: &usize) -> usize {
        *a
    }
    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        if g != f {
            return Err(CatError::NotComposable(format!("{} ∘ {}", self.names[*g], self.names[*f])));
        }
        Ok(*g)
    }
    fn inverse(&self, m: &usize) -> Option<usize> {
        Some(*m)
    }
    fn unit(&self) -> usize {
        self.unit
    }
    fn tensor(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(self.mul(*a, *b))
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> Result<usize> {
        Ok(self.mul(*f, *g))
    }
    fn associator(&self, a: &usize, b: &usize, c: &usize) -> Result<usize> {
        Ok(self.mul(self.mul(*a, *b), *c))
    }
    fn left_unitor(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }
    fn right_unitor(&self, a: &usize) -> Result<usize> {
        Ok(*a)
    }
    fn objects(&self) -> Vec<usize> {
        (0..self.names.len()).collect()
    }
    fn hom(&self, a: &usize, b: &usize) -> Vec<usize> {
        if a == b {
            vec![*a]
        } else {
            Vec::new()
        }
    }
}

/// The monoidal groupoid with objects `ℤ/2`, each object having automorphism
/// group `ℤ/2`, tensor given by addition, and associator
/// `(a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)` equal to the automorphism `abc` when
/// `twisted` (the non-trivial 3-cocycle) and the identity otherwise.
/// Morphisms are pairs `(object, automorphism)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoGroupZ2 {
    pub twisted: bool,
}

impl MonoidalCategory for TwoGroupZ2 {
    type Obj = u8;
    type Mor = (u8, u8);

    fn src(&self, m: &(u8, u8)) -> u8 {
        m.0
    }
    fn tgt(&self, m: &(u8, u8)) -> u8 {
        m.0
    }
    fn id(&self, a: &u8) -> (u8, u8) {
        (*a, 0)
    }
    fn compose(&self, g: &(u8, u8), f: &(u8, u8)) -> Result<(u8, u8)> {
        if g.0 != f.0 {
            return Err(CatError::NotComposable(format!("{g:?} ∘ {f:?}")));
        }
        Ok((f.0, (f.1 + g.1) % 2))
    }
    fn inverse(&self, m: &(u8, u8)) -> Option<(u8, u8)> {
        Some(*m)
    }
    fn unit(&self) -> u8 {
        0
    }
    fn tensor(&self, a: &u8, b: &u8) -> Result<u8> {
        Ok((a + b) % 2)
    }
    fn tensor_mor(&self, f: &(u8, u8), g: &(u8, u8)) -> Result<(u8, u8)> {
        Ok(((f.0 + g.0) % 2, (f.1 + g.1) % 2))
    }
    fn associator(&self, a: &u8, b: &u8, c: &u8) -> Result<(u8, u8)> {
        Ok(((a + b + c) % 2, if self.twisted { a * b * c } else { 0 }))
    }
    fn left_unitor(&self, a: &u8) -> Result<(u8, u8)> {
        Ok((*a, 0))
    }
    fn right_unitor(&self, a: &u8) -> Result<(u8, u8)> {
        Ok((*a, 0))
    }
    fn objects(&self) -> Vec<u8> {
        vec![0, 1]
    }
    fn hom(&self, a: &u8, b: &u8) -> Vec<(u8, u8)> {
        if a == b {
            vec![(*a, 0), (*a, 1)]
        } else {
            Vec::new()
        }
    }
}
