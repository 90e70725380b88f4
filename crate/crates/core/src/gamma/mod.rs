//! The Γ-construction: for a strict symmetric monoidal bicategory `C` and
//! `n ≥ 0`, the bicategory `Ĉ(n)` of families indexed by the subsets of
//! `{1, …, n}`, its functoriality in pointed maps, and the comparison with
//! `Cⁿ` given by `p_n`, `i_n` and `ξ: Id ⇒ i_n ∘ p_n`.
//!
//! Subsets are bitmasks, bit `i - 1` standing for element `i`. Families over
//! subsets are dense vectors indexed by mask; families over disjoint pairs
//! are maps keyed by `(S, T)`.
//!
//! Square convention used throughout: a square with top `h`, right `v'`,
//! left `v` and bottom `h'` is filled by a 2-cell `v' * h ⇒ h' * v`. An object
//! map `a_{S,T}: A_{S∪T} -> A_S ⊞ A_T` sits on top, the components of a
//! 1-cell run down the sides.

mod cells;
mod special;
#[cfg(test)]
mod tests;

pub use cells::{
    compose_one_cells, identity_one_cell, validate_gamma_object, validate_gamma_one_cell, validate_gamma_two_cell,
    vcomp_two_cells,
};
pub use special::{
    build_i_object, build_i_one, build_i_two, build_xi, level_one_round_trip, project_p_object, project_p_one,
    project_p_two, verify_special, xi_naturality, GammaBicategory, GammaUniverse, IComposeP, Xi, XiComponent,
};

use crate::bicat::{invert, vcomp_seq, Obj, One, StrictSmb, Two};
use crate::error::{CatError, Result};
use std::collections::BTreeMap;

pub type Mask = u32;

/// Largest supported `n`; pair families grow like `3ⁿ`.
pub const MAX_N: usize = 4;

pub fn full_mask(n: usize) -> Mask {
    (1 << n) - 1
}

/// Elements of a subset, ascending and 1-based.
pub fn members(s: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn singleton(i: usize) -> Mask {
    1 << (i - 1)
}

/// All `(S, T)` with `S ∩ T = ∅`.
pub fn disjoint_pairs(n: usize) -> Vec<(Mask, Mask)> {
    let all = full_mask(n);
    (0..=all).flat_map(|s| (0..=all).filter(move |t| s & t == 0).map(move |t| (s, t))).collect()
}

/// All pairwise disjoint `(S, T, U)`.
pub fn disjoint_triples(n: usize) -> Vec<(Mask, Mask, Mask)> {
    disjoint_pairs(n)
        .into_iter()
        .flat_map(|(s, t)| (0..=full_mask(n)).filter(move |u| u & (s | t) == 0).map(move |u| (s, t, u)))
        .collect()
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(CatError::Domain(format!("n = {n} exceeds the supported maximum {MAX_N}")));
    }
    Ok(())
}

/// `{A_S, a_{S,T}}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaObject<O, L> {
    pub n: usize,
    pub objs: Vec<O>,
    pub maps: BTreeMap<(Mask, Mask), L>,
}

/// `{f_S, φ_{S,T}}` with `φ_{S,T}: (f_S ⊞ f_T) * a_{S,T} ⇒ a'_{S,T} * f_{S∪T}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaOneCell<O, L, T> {
    pub src: GammaObject<O, L>,
    pub tgt: GammaObject<O, L>,
    pub comps: Vec<L>,
    pub phi: BTreeMap<(Mask, Mask), T>,
}

/// `{ψ_S}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaTwoCell<O, L, T> {
    pub src: GammaOneCell<O, L, T>,
    pub tgt: GammaOneCell<O, L, T>,
    pub comps: Vec<T>,
}

pub type GObj<C> = GammaObject<Obj<C>, One<C>>;
pub type GOne<C> = GammaOneCell<Obj<C>, One<C>, Two<C>>;
pub type GTwo<C> = GammaTwoCell<Obj<C>, One<C>, Two<C>>;

fn missing(what: &str, s: Mask, t: Mask) -> CatError {
    CatError::Malformed(format!("family has no {what} at ({s:#b}, {t:#b})"))
}

impl<O, L> GammaObject<O, L> {
    pub fn obj(&self, s: Mask) -> &O {
        &self.objs[s as usize]
    }

    pub fn map(&self, s: Mask, t: Mask) -> Result<&L> {
        self.maps.get(&(s, t)).ok_or_else(|| missing("map", s, t))
    }
}

impl<O, L, T> GammaOneCell<O, L, T> {
    pub fn comp(&self, s: Mask) -> &L {
        &self.comps[s as usize]
    }

    pub fn phi_at(&self, s: Mask, t: Mask) -> Result<&T> {
        self.phi.get(&(s, t)).ok_or_else(|| missing("filler", s, t))
    }
}

/// A basepoint-preserving map `θ: {0..n} -> {0..m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedMap {
    m: usize,
    images: Vec<usize>,
}

impl PointedMap {
    /// `images[i] = θ(i)` for `i` in `0..=n`.
    pub fn new(m: usize, images: Vec<usize>) -> Result<Self> {
        if images.first() != Some(&0) {
            return Err(CatError::Domain(format!("map {images:?} does not fix the basepoint")));
        }
        if let Some(x) = images.iter().find(|&&x| x > m) {
            return Err(CatError::Domain(format!("image {x} outside 0..={m}")));
        }
        check_n(images.len() - 1)?;
        check_n(m)?;
        Ok(PointedMap { m, images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        PointedMap::new(n, (0..=n).collect())
    }

    /// The map `n -> 1` sending `k` to `1` and everything else to the basepoint.
    pub fn select(n: usize, k: usize) -> Result<Self> {
        PointedMap::new(1, (0..=n).map(|i| usize::from(i == k && k > 0)).collect())
    }

    /// Every pointed map `n -> m`, in lexicographic order of images.
    pub fn all(n: usize, m: usize) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let mut img = vec![0; n + 1];
        loop {
            out.push(PointedMap::new(m, img.clone())?);
            let Some(i) = (1..=n).rev().find(|&i| img[i] < m) else { break };
            img[i] += 1;
            img[i + 1..].iter_mut().for_each(|x| *x = 0);
        }
        Ok(out)
    }

    pub fn source(&self) -> usize {
        self.images.len() - 1
    }

    pub fn target(&self) -> usize {
        self.m
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &PointedMap) -> Result<PointedMap> {
        if next.source() != self.m {
            return Err(CatError::NotComposable(format!("{next:?} after {self:?}")));
        }
        PointedMap::new(next.m, self.images.iter().map(|&i| next.images[i]).collect())
    }

    /// `θ⁻¹(U)` as a subset of `{1..n}`.
    pub fn preimage(&self, u: Mask) -> Mask {
        (1..self.images.len())
            .filter(|&i| self.images[i] > 0 && u >> (self.images[i] - 1) & 1 == 1)
            .fold(0, |acc, i| acc | singleton(i))
    }
}

/// Reindexing along a pointed map: `A^θ_U = A_{θ⁻¹(U)}` at every level.
pub trait Pushforward: Sized {
    fn pushforward(&self, theta: &PointedMap) -> Result<Self>;
}

fn check_source(theta: &PointedMap, n: usize) -> Result<()> {
    if theta.source() != n {
        return Err(CatError::NotComposable(format!("{theta:?} applied to a family over n = {n}")));
    }
    Ok(())
}

fn reindex_dense<X: Clone>(theta: &PointedMap, v: &[X]) -> Vec<X> {
    (0..=full_mask(theta.target())).map(|u| v[theta.preimage(u) as usize].clone()).collect()
}

fn reindex_pairs<X: Clone>(theta: &PointedMap, v: &BTreeMap<(Mask, Mask), X>) -> Result<BTreeMap<(Mask, Mask), X>> {
    disjoint_pairs(theta.target())
        .into_iter()
        .map(|(u, w)| {
            let key = (theta.preimage(u), theta.preimage(w));
            let x = v.get(&key).ok_or_else(|| missing("entry", key.0, key.1))?;
            Ok(((u, w), x.clone()))
        })
        .collect()
}

impl<O: Clone, L: Clone> Pushforward for GammaObject<O, L> {
    fn pushforward(&self, theta: &PointedMap) -> Result<Self> {
        check_source(theta, self.n)?;
        Ok(GammaObject {
            n: theta.target(),
            objs: reindex_dense(theta, &self.objs),
            maps: reindex_pairs(theta, &self.maps)?,
        })
    }
}

impl<O: Clone, L: Clone, T: Clone> Pushforward for GammaOneCell<O, L, T> {
    fn pushforward(&self, theta: &PointedMap) -> Result<Self> {
        Ok(GammaOneCell {
            src: self.src.pushforward(theta)?,
            tgt: self.tgt.pushforward(theta)?,
            comps: reindex_dense(theta, &self.comps),
            phi: reindex_pairs(theta, &self.phi)?,
        })
    }
}

impl<O: Clone, L: Clone, T: Clone> Pushforward for GammaTwoCell<O, L, T> {
    fn pushforward(&self, theta: &PointedMap) -> Result<Self> {
        Ok(GammaTwoCell {
            src: self.src.pushforward(theta)?,
            tgt: self.tgt.pushforward(theta)?,
            comps: reindex_dense(theta, &self.comps),
        })
    }
}

pub fn theta_pushforward<X: Pushforward>(theta: &PointedMap, x: &X) -> Result<X> {
    x.pushforward(theta)
}

/// A filled square, see the module docs for orientation.
#[derive(Debug, Clone)]
pub(crate) struct Square<C: StrictSmb> {
    pub top: C::One,
    pub right: C::One,
    pub left: C::One,
    pub bottom: C::One,
    pub cell: C::Two,
}

/// `l⁻¹_f ∘ r_f: f * I ⇒ I * f`, the filler of a square with identity top and bottom.
pub(crate) fn unit_swap<C: StrictSmb>(c: &C, f: &C::One) -> Result<C::Two> {
    vcomp_seq(c, &[c.runit(f)?, invert(c, &c.lunit(f)?)?])
}

pub(crate) fn unit_square<C: StrictSmb>(c: &C, f: &C::One) -> Result<Square<C>> {
    Ok(Square {
        top: c.id1(&c.one_src(f)),
        right: f.clone(),
        left: f.clone(),
        bottom: c.id1(&c.one_tgt(f)),
        cell: unit_swap(c, f)?,
    })
}

/// Side-by-side sum of two squares, conjugated by `⊞²`.
pub(crate) fn sum_squares<C: StrictSmb>(c: &C, a: &Square<C>, b: &Square<C>) -> Result<Square<C>> {
    let split = c.sum_comp_cell(&a.top, &b.top, &a.right, &b.right)?;
    let join = invert(c, &c.sum_comp_cell(&a.left, &b.left, &a.bottom, &b.bottom)?)?;
    Ok(Square {
        top: c.sum_one(&a.top, &b.top)?,
        right: c.sum_one(&a.right, &b.right)?,
        left: c.sum_one(&a.left, &b.left)?,
        bottom: c.sum_one(&a.bottom, &b.bottom)?,
        cell: vcomp_seq(c, &[split, c.sum_two(&a.cell, &b.cell)?, join])?,
    })
}
