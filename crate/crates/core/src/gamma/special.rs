//! `p_n`, `i_n`, `ξ`, and the bicategory `Ĉ(n)` over a finite universe of
//! generated cells, which lets the generic pseudofunctor and transformation
//! checks certify `ξ: Id ⇒ i_n ∘ p_n`.

use super::cells::{paste_beside, phi_square};
use super::{
    check_n, compose_one_cells, disjoint_pairs, full_mask, identity_one_cell, members, singleton, sum_squares,
    unit_square, unit_swap, validate_gamma_object, validate_gamma_one_cell, validate_gamma_two_cell, vcomp_two_cells,
    GObj, GOne, GTwo, GammaObject, Mask, PointedMap, Pushforward, Square,
};
use crate::bicat::{
    is_one_equivalence, product, validate_bicategory, validate_pseudofunctor, validate_transformation, Bicategory,
    IdentityPseudofunctor, OneEquivalence, Pseudofunctor, StrictSmb, Transformation,
};
use crate::error::{CatError, Result};
use crate::report::{CheckReport, LawRecord, Status};
use crate::sampling::{salt, Budget};
use rand::seq::SliceRandom;
use std::collections::BTreeMap;

fn sum_objs<C: StrictSmb>(c: &C, xs: &[C::Obj]) -> Result<C::Obj> {
    match xs.split_first() {
        None => Ok(c.unit_obj()),
        Some((x, [])) => Ok(x.clone()),
        Some((x, rest)) => c.sum_obj(x, &sum_objs(c, rest)?),
    }
}

fn sum_ones<C: StrictSmb>(c: &C, fs: &[C::One]) -> Result<C::One> {
    match fs.split_first() {
        None => Ok(c.id1(&c.unit_obj())),
        Some((f, [])) => Ok(f.clone()),
        Some((f, rest)) => c.sum_one(f, &sum_ones(c, rest)?),
    }
}

fn sum_twos<C: StrictSmb>(c: &C, ps: &[C::Two]) -> Result<C::Two> {
    match ps.split_first() {
        None => Ok(c.id2(&c.id1(&c.unit_obj()))),
        Some((p, [])) => Ok(p.clone()),
        Some((p, rest)) => c.sum_two(p, &sum_twos(c, rest)?),
    }
}

fn pick<T: Clone>(xs: &[T], s: Mask) -> Vec<T> {
    members(s).into_iter().map(|i| xs[i - 1].clone()).collect()
}

/// `{x_{{1}}, …, x_{{n}}}`.
pub fn project_p_object<C: StrictSmb>(x: &GObj<C>) -> Vec<C::Obj> {
    (1..=x.n).map(|i| x.obj(singleton(i)).clone()).collect()
}

pub fn project_p_one<C: StrictSmb>(f: &GOne<C>) -> Vec<C::One> {
    (1..=f.src.n).map(|i| f.comp(singleton(i)).clone()).collect()
}

pub fn project_p_two<C: StrictSmb>(p: &GTwo<C>) -> Vec<C::Two> {
    (1..=p.src.src.n).map(|i| p.comps[singleton(i) as usize].clone()).collect()
}

/// Adjacent transpositions taking the ascending list of `S ∪ T` to `S` followed
/// by `T`: each entry is the list before the swap and the swap position.
fn merge_schedule(s: Mask, t: Mask) -> Vec<(Vec<usize>, usize)> {
    let target: Vec<usize> = members(s).into_iter().chain(members(t)).collect();
    let rank = |x: &usize| target.iter().position(|y| y == x).unwrap_or(0);
    let mut cur = members(s | t);
    let mut out = Vec::new();
    loop {
        let Some(p) = (0..cur.len().saturating_sub(1)).find(|&p| rank(&cur[p]) > rank(&cur[p + 1])) else {
            return out;
        };
        out.push((cur.clone(), p));
        cur.swap(p, p + 1);
    }
}

/// `prefix ⊞ mid ⊞ suffix` with empty sides left out.
fn flank<C: StrictSmb>(c: &C, pre: &[C::Obj], mid: C::One, suf: &[C::Obj]) -> Result<C::One> {
    let mid = if suf.is_empty() { mid } else { c.sum_one(&mid, &c.id1(&sum_objs(c, suf)?))? };
    if pre.is_empty() {
        Ok(mid)
    } else {
        c.sum_one(&c.id1(&sum_objs(c, pre)?), &mid)
    }
}

fn swap_cell<C: StrictSmb>(c: &C, objs: &[C::Obj], order: &[usize], p: usize) -> Result<C::One> {
    let at = |k: usize| objs[order[k] - 1].clone();
    let pre: Vec<_> = (0..p).map(at).collect();
    let suf: Vec<_> = (p + 2..order.len()).map(at).collect();
    flank(c, &pre, c.braid(&at(p), &at(p + 1))?, &suf)
}

/// `e_{S,T}: ⊞_{S∪T} A_i -> (⊞_S A_i) ⊞ (⊞_T A_i)`.
fn merge_map<C: StrictSmb>(c: &C, objs: &[C::Obj], s: Mask, t: Mask) -> Result<C::One> {
    let mut acc: Option<C::One> = None;
    for (order, p) in merge_schedule(s, t) {
        let step = swap_cell(c, objs, &order, p)?;
        acc = Some(match acc {
            None => step,
            Some(a) => c.comp1(&step, &a)?,
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => Ok(c.id1(&sum_objs(c, &pick(objs, s | t))?)),
    }
}

/// `i_n(A_1, …, A_n) = {⊞_{i∈S} A_i, e_{S,T}}`.
pub fn build_i_object<C: StrictSmb>(c: &C, objs: &[C::Obj]) -> Result<GObj<C>> {
    let n = objs.len();
    check_n(n)?;
    let all = (0..=full_mask(n)).map(|s| sum_objs(c, &pick(objs, s))).collect::<Result<Vec<_>>>()?;
    let maps = disjoint_pairs(n)
        .into_iter()
        .map(|(s, t)| Ok(((s, t), merge_map(c, objs, s, t)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(GammaObject { n, objs: all, maps })
}

/// `ε_{S,T}`: one `β²` square per transposition of the merge, pasted left to right.
fn merge_filler<C: StrictSmb>(c: &C, fs: &[C::One], s: Mask, t: Mask) -> Result<C::Two> {
    let src: Vec<_> = fs.iter().map(|f| c.one_src(f)).collect();
    let tgt: Vec<_> = fs.iter().map(|f| c.one_tgt(f)).collect();
    let mut acc: Option<Square<C>> = None;
    for (order, p) in merge_schedule(s, t) {
        let f = |k: usize| fs[order[k] - 1].clone();
        let (x, y) = (f(p), f(p + 1));
        let mut sq = Square {
            top: c.braid(&c.one_src(&x), &c.one_src(&y))?,
            right: c.sum_one(&y, &x)?,
            left: c.sum_one(&x, &y)?,
            bottom: c.braid(&c.one_tgt(&x), &c.one_tgt(&y))?,
            cell: c.braid_cell(&x, &y)?,
        };
        if p + 2 < order.len() {
            let rest: Vec<_> = (p + 2..order.len()).map(f).collect();
            sq = sum_squares(c, &sq, &unit_square(c, &sum_ones(c, &rest)?)?)?;
        }
        if p > 0 {
            let front: Vec<_> = (0..p).map(f).collect();
            sq = sum_squares(c, &unit_square(c, &sum_ones(c, &front)?)?, &sq)?;
        }
        debug_assert_eq!(sq.top, swap_cell(c, &src, &order, p)?);
        debug_assert_eq!(sq.bottom, swap_cell(c, &tgt, &order, p)?);
        acc = Some(match acc {
            None => sq,
            Some(a) => {
                let cell = paste_beside(c, &a, &sq)?;
                Square {
                    top: c.comp1(&sq.top, &a.top)?,
                    right: sq.right,
                    left: a.left,
                    bottom: c.comp1(&sq.bottom, &a.bottom)?,
                    cell,
                }
            }
        });
    }
    match acc {
        Some(a) => Ok(a.cell),
        None => unit_swap(c, &sum_ones(c, &pick(fs, s | t))?),
    }
}

/// `i_n(f_1, …, f_n) = {⊞_{i∈S} f_i, ε_{S,T}}`.
pub fn build_i_one<C: StrictSmb>(c: &C, fs: &[C::One]) -> Result<GOne<C>> {
    let n = fs.len();
    let src = build_i_object(c, &fs.iter().map(|f| c.one_src(f)).collect::<Vec<_>>())?;
    let tgt = build_i_object(c, &fs.iter().map(|f| c.one_tgt(f)).collect::<Vec<_>>())?;
    let comps = (0..=full_mask(n)).map(|s| sum_ones(c, &pick(fs, s))).collect::<Result<Vec<_>>>()?;
    let phi = disjoint_pairs(n)
        .into_iter()
        .map(|(s, t)| Ok(((s, t), merge_filler(c, fs, s, t)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(GOne::<C> { src, tgt, comps, phi })
}

pub fn build_i_two<C: StrictSmb>(c: &C, ps: &[C::Two]) -> Result<GTwo<C>> {
    let n = ps.len();
    let src = build_i_one(c, &ps.iter().map(|p| c.two_src(p)).collect::<Vec<_>>())?;
    let tgt = build_i_one(c, &ps.iter().map(|p| c.two_tgt(p)).collect::<Vec<_>>())?;
    let comps = (0..=full_mask(n)).map(|s| sum_twos(c, &pick(ps, s))).collect::<Result<Vec<_>>>()?;
    Ok(GTwo::<C> { src, tgt, comps })
}

/// The component `ξ_X: X -> i_n p_n X`.
#[derive(Debug, Clone)]
pub struct XiComponent<C: StrictSmb> {
    /// `a^S`, indexed by mask.
    pub a_sup: Vec<C::One>,
    pub cell: GOne<C>,
}

fn least(s: Mask) -> Mask {
    s & s.wrapping_neg()
}

/// `a^S = (I_{A_j} ⊞ a^{S-j}) * a_{j,S-j}` for the least `j ∈ S`, with
/// `a^S = I` when `|S| ≤ 1`. The fillers are identities: the two legs
/// `(a^S ⊞ a^T) * a_{S,T}` and `e_{S,T} * a^{S∪T}` must agree as 1-cells,
/// which holds when every associator among these maps is trivial.
pub fn build_xi<C: StrictSmb>(c: &C, x: &GObj<C>) -> Result<XiComponent<C>> {
    check_n(x.n)?;
    let target = build_i_object(c, &project_p_object::<C>(x))?;
    let mut a_sup: Vec<C::One> = Vec::with_capacity(x.objs.len());
    for s in 0..=full_mask(x.n) {
        let a = if s.count_ones() <= 1 {
            c.id1(x.obj(s))
        } else {
            let (j, rest) = (least(s), s & !least(s));
            c.comp1(&c.sum_one(&c.id1(x.obj(j)), &a_sup[rest as usize])?, x.map(j, rest)?)?
        };
        a_sup.push(a);
    }
    let mut phi = BTreeMap::new();
    for (s, t) in disjoint_pairs(x.n) {
        let cell = if s == 0 || t == 0 {
            unit_swap(c, &a_sup[(s | t) as usize])?
        } else {
            let lhs = c.comp1(&c.sum_one(&a_sup[s as usize], &a_sup[t as usize])?, x.map(s, t)?)?;
            let rhs = c.comp1(target.map(s, t)?, &a_sup[(s | t) as usize])?;
            if lhs != rhs {
                return Err(CatError::Unsupported(format!(
                    "legs of the ξ filler at ({s:#b},{t:#b}) differ as 1-cells: {lhs:?} vs {rhs:?}"
                )));
            }
            c.id2(&lhs)
        };
        phi.insert((s, t), cell);
    }
    let cell = GOne::<C> { src: x.clone(), tgt: target, comps: a_sup.clone(), phi };
    Ok(XiComponent { a_sup, cell })
}

/// `ξ²_F = {φ^S}: i_n p_n F * ξ_X ⇒ ξ_{X'} * F`, with `φ^S` the pasting of
/// `φ_{j,S-j}` beside `(l⁻¹ r)_{f_j} ⊞ φ^{S-j}`.
pub fn xi_naturality<C: StrictSmb>(c: &C, f: &GOne<C>) -> Result<GTwo<C>> {
    let (xi_s, xi_t) = (build_xi(c, &f.src)?, build_xi(c, &f.tgt)?);
    let image = build_i_one(c, &project_p_one::<C>(f))?;
    let n = f.src.n;
    let mut comps: Vec<C::Two> = Vec::with_capacity(1 << n);
    for s in 0..=full_mask(n) {
        let cell = if s.count_ones() <= 1 {
            unit_swap(c, f.comp(s))?
        } else {
            let (j, rest) = (least(s), s & !least(s));
            let inner = Square {
                top: xi_s.a_sup[rest as usize].clone(),
                right: image.comp(rest).clone(),
                left: f.comp(rest).clone(),
                bottom: xi_t.a_sup[rest as usize].clone(),
                cell: comps[rest as usize].clone(),
            };
            let q = sum_squares(c, &unit_square(c, f.comp(j))?, &inner)?;
            paste_beside(c, &phi_square(c, f, j, rest)?, &q)?
        };
        comps.push(cell);
    }
    Ok(GTwo::<C> { src: compose_one_cells(c, &image, &xi_s.cell)?, tgt: compose_one_cells(c, &xi_t.cell, f)?, comps })
}

/// A finite supply of Γ-cells over which `Ĉ(n)` is enumerated.
#[derive(Debug, Clone)]
pub struct GammaUniverse<C: StrictSmb> {
    pub n: usize,
    pub objects: Vec<GObj<C>>,
    pub ones: Vec<GOne<C>>,
    pub twos: Vec<GTwo<C>>,
}

/// Strict automorphisms of `a` other than the identity.
fn strict_automorphisms<C: StrictSmb>(c: &C, a: &C::Obj, bound: usize) -> Vec<C::One> {
    let id = c.id1(a);
    c.one_cells(a, a)
        .into_iter()
        .filter(|q| *q != id)
        .filter(|q| match is_one_equivalence(c, q, bound) {
            OneEquivalence::Equivalence { inverse, .. } => {
                c.comp1(&inverse, q).ok() == Some(id.clone()) && c.comp1(q, &inverse).ok() == Some(id.clone())
            }
            OneEquivalence::NotFound { .. } => false,
        })
        .collect()
}

/// `i_n(t)` with the maps onto the whole index set precomposed by `q`.
fn twisted<C: StrictSmb>(c: &C, base: &GObj<C>, q: &C::One) -> Result<GObj<C>> {
    let all = full_mask(base.n);
    let mut x = base.clone();
    for (&(s, t), a) in x.maps.iter_mut() {
        if s != 0 && t != 0 && s | t == all {
            *a = c.comp1(a, q)?;
        }
    }
    Ok(x)
}

impl<C: StrictSmb> GammaUniverse<C> {
    /// Images of `i_n` on tuples of base cells, objects twisted by strict
    /// automorphisms of their top summand, identities, `ξ` components and
    /// composites of `ξ` with images of `i_n`. `per_hom` caps the number of
    /// tuples drawn per pair of object tuples.
    pub fn generate(c: &C, n: usize, per_hom: usize, seed: u64) -> Result<Self> {
        check_n(n)?;
        let budget = Budget::new(per_hom as u64, seed);
        let base_objs = c.objects();
        let tuples = product(&vec![base_objs.clone(); n]);
        let mut objects = Vec::new();
        let mut untwisted = Vec::new();
        let mut twists = Vec::new();
        for t in &tuples {
            let x = build_i_object(c, t)?;
            if n >= 2 {
                for q in strict_automorphisms(c, x.obj(full_mask(n)), 64).into_iter().take(2) {
                    twists.push(twisted(c, &x, &q)?);
                }
            }
            untwisted.push((t.clone(), x.clone()));
            objects.push(x);
        }
        objects.extend(twists.iter().cloned());

        let mut ones = Vec::new();
        let mut images = Vec::new();
        let mut rng = budget.rng(salt("gamma-universe"));
        for (t, _) in &untwisted {
            for (u, _) in &untwisted {
                let homs: Vec<Vec<C::One>> = t.iter().zip(u).map(|(a, b)| c.one_cells(a, b)).collect();
                let mut all = product(&homs);
                if all.len() > per_hom {
                    all.shuffle(&mut rng);
                    all.truncate(per_hom);
                }
                for fs in all {
                    images.push(build_i_one(c, &fs)?);
                }
            }
        }
        for x in &objects {
            ones.push(identity_one_cell(c, x)?);
            ones.push(build_xi(c, x)?.cell);
        }
        for x in &twists {
            let xi = build_xi(c, x)?.cell;
            let mut outs: Vec<_> = images.iter().filter(|f| f.src == xi.tgt).cloned().collect();
            outs.shuffle(&mut rng);
            for f in outs.into_iter().take(2) {
                ones.push(compose_one_cells(c, &f, &xi)?);
            }
        }
        ones.extend(images.iter().cloned());
        ones.sort();
        ones.dedup();

        let mut twos: Vec<GTwo<C>> = Vec::new();
        for f in &ones {
            twos.push(GTwo::<C> { src: f.clone(), tgt: f.clone(), comps: f.comps.iter().map(|g| c.id2(g)).collect() });
        }
        for f in &images {
            for g in &images {
                if f.src != g.src || f.tgt != g.tgt || f == g {
                    continue;
                }
                let (pf, pg) = (project_p_one::<C>(f), project_p_one::<C>(g));
                let cells: Vec<Vec<C::Two>> = pf.iter().zip(&pg).map(|(x, y)| c.two_cells(x, y)).collect();
                for ps in product(&cells).into_iter().take(per_hom) {
                    twos.push(build_i_two(c, &ps)?);
                }
            }
        }
        twos.sort();
        twos.dedup();
        Ok(GammaUniverse { n, objects, ones, twos })
    }
}

/// `Ĉ(n)` with cells drawn from a [`GammaUniverse`]; composition, identities
/// and the coherence cells are computed, not looked up.
pub struct GammaBicategory<'a, C: StrictSmb> {
    pub base: &'a C,
    pub universe: GammaUniverse<C>,
    ones: Index<GObj<C>, GOne<C>>,
    twos: Index<GOne<C>, GTwo<C>>,
}

type Index<K, V> = BTreeMap<(K, K), Vec<V>>;

impl<'a, C: StrictSmb> GammaBicategory<'a, C> {
    pub fn new(base: &'a C, universe: GammaUniverse<C>) -> Self {
        let mut ones: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for f in &universe.ones {
            ones.entry((f.src.clone(), f.tgt.clone())).or_default().push(f.clone());
        }
        let mut twos: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for a in &universe.twos {
            twos.entry((a.src.clone(), a.tgt.clone())).or_default().push(a.clone());
        }
        GammaBicategory { base, universe, ones, twos }
    }

    fn componentwise(
        &self,
        src: GOne<C>,
        tgt: GOne<C>,
        mut cell: impl FnMut(usize) -> Result<C::Two>,
    ) -> Result<GTwo<C>> {
        let comps = (0..src.comps.len()).map(&mut cell).collect::<Result<Vec<_>>>()?;
        Ok(GTwo::<C> { src, tgt, comps })
    }
}

impl<C: StrictSmb> Bicategory for GammaBicategory<'_, C> {
    type Obj = GObj<C>;
    type One = GOne<C>;
    type Two = GTwo<C>;

    fn one_src(&self, f: &GOne<C>) -> GObj<C> {
        f.src.clone()
    }
    fn one_tgt(&self, f: &GOne<C>) -> GObj<C> {
        f.tgt.clone()
    }
    fn two_src(&self, a: &GTwo<C>) -> GOne<C> {
        a.src.clone()
    }
    fn two_tgt(&self, a: &GTwo<C>) -> GOne<C> {
        a.tgt.clone()
    }
    fn id1(&self, a: &GObj<C>) -> GOne<C> {
        identity_one_cell(self.base, a).expect("identity Γ-1-cell of a well-typed object")
    }
    fn id2(&self, f: &GOne<C>) -> GTwo<C> {
        GTwo::<C> { src: f.clone(), tgt: f.clone(), comps: f.comps.iter().map(|g| self.base.id2(g)).collect() }
    }
    fn comp1(&self, g: &GOne<C>, f: &GOne<C>) -> Result<GOne<C>> {
        compose_one_cells(self.base, g, f)
    }
    fn vcomp(&self, b: &GTwo<C>, a: &GTwo<C>) -> Result<GTwo<C>> {
        vcomp_two_cells(self.base, b, a)
    }
    fn hcomp(&self, b: &GTwo<C>, a: &GTwo<C>) -> Result<GTwo<C>> {
        let src = self.comp1(&b.src, &a.src)?;
        let tgt = self.comp1(&b.tgt, &a.tgt)?;
        self.componentwise(src, tgt, |s| self.base.hcomp(&b.comps[s], &a.comps[s]))
    }
    fn assoc(&self, h: &GOne<C>, g: &GOne<C>, f: &GOne<C>) -> Result<GTwo<C>> {
        let src = self.comp1(h, &self.comp1(g, f)?)?;
        let tgt = self.comp1(&self.comp1(h, g)?, f)?;
        self.componentwise(src, tgt, |s| self.base.assoc(&h.comps[s], &g.comps[s], &f.comps[s]))
    }
    fn lunit(&self, f: &GOne<C>) -> Result<GTwo<C>> {
        let src = self.comp1(&self.id1(&f.tgt), f)?;
        self.componentwise(src, f.clone(), |s| self.base.lunit(&f.comps[s]))
    }
    fn runit(&self, f: &GOne<C>) -> Result<GTwo<C>> {
        let src = self.comp1(f, &self.id1(&f.src))?;
        self.componentwise(src, f.clone(), |s| self.base.runit(&f.comps[s]))
    }
    fn inverse2(&self, a: &GTwo<C>) -> Option<GTwo<C>> {
        let comps = a.comps.iter().map(|x| self.base.inverse2(x)).collect::<Option<Vec<_>>>()?;
        Some(GTwo::<C> { src: a.tgt.clone(), tgt: a.src.clone(), comps })
    }
    fn objects(&self) -> Vec<GObj<C>> {
        self.universe.objects.clone()
    }
    fn one_cells(&self, a: &GObj<C>, b: &GObj<C>) -> Vec<GOne<C>> {
        self.ones.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }
    fn two_cells(&self, f: &GOne<C>, g: &GOne<C>) -> Vec<GTwo<C>> {
        self.twos.get(&(f.clone(), g.clone())).cloned().unwrap_or_default()
    }
    fn enumeration_is_complete(&self) -> bool {
        false
    }
}

/// `i_n ∘ p_n` as a pseudofunctor `Ĉ(n) -> Ĉ(n)`; its structure cells are
/// iterated `⊞²` and `⊞⁰`.
pub struct IComposeP<'a, 'b, C: StrictSmb>(pub &'b GammaBicategory<'a, C>);

/// `(⊞ gs) * (⊞ fs) ⇒ ⊞ (g * f)`.
fn sum_comp_iter<C: StrictSmb>(c: &C, fs: &[C::One], gs: &[C::One]) -> Result<C::Two> {
    match (fs, gs) {
        ([], _) => c.lunit(&c.id1(&c.unit_obj())),
        ([f], [g]) => Ok(c.id2(&c.comp1(g, f)?)),
        ([f, fr @ ..], [g, gr @ ..]) => {
            let split = c.sum_comp_cell(f, &sum_ones(c, fr)?, g, &sum_ones(c, gr)?)?;
            c.vcomp(&c.sum_two(&c.id2(&c.comp1(g, f)?), &sum_comp_iter(c, fr, gr)?)?, &split)
        }
        _ => Err(CatError::NotComposable("tuples of different lengths".into())),
    }
}

/// `I_{⊞ A} ⇒ ⊞ I_A`.
fn sum_unit_iter<C: StrictSmb>(c: &C, objs: &[C::Obj]) -> Result<C::Two> {
    match objs {
        [] => Ok(c.id2(&c.id1(&c.unit_obj()))),
        [a] => Ok(c.id2(&c.id1(a))),
        [a, rest @ ..] => {
            let split = c.sum_unit_cell(a, &sum_objs(c, rest)?)?;
            c.vcomp(&c.sum_two(&c.id2(&c.id1(a)), &sum_unit_iter(c, rest)?)?, &split)
        }
    }
}

impl<'a, C: StrictSmb> Pseudofunctor<GammaBicategory<'a, C>, GammaBicategory<'a, C>> for IComposeP<'a, '_, C> {
    fn on_obj(&self, a: &GObj<C>) -> Result<GObj<C>> {
        build_i_object(self.0.base, &project_p_object::<C>(a))
    }
    fn on_one(&self, f: &GOne<C>) -> Result<GOne<C>> {
        build_i_one(self.0.base, &project_p_one::<C>(f))
    }
    fn on_two(&self, a: &GTwo<C>) -> Result<GTwo<C>> {
        build_i_two(self.0.base, &project_p_two::<C>(a))
    }
    fn comp_cell(&self, f: &GOne<C>, g: &GOne<C>) -> Result<GTwo<C>> {
        let c = self.0.base;
        let (pf, pg) = (project_p_one::<C>(f), project_p_one::<C>(g));
        let src = compose_one_cells(c, &self.on_one(g)?, &self.on_one(f)?)?;
        let tgt = self.on_one(&compose_one_cells(c, g, f)?)?;
        self.0.componentwise(src, tgt, |s| sum_comp_iter(c, &pick(&pf, s as Mask), &pick(&pg, s as Mask)))
    }
    fn unit_cell(&self, a: &GObj<C>) -> Result<GTwo<C>> {
        let c = self.0.base;
        let pa = project_p_object::<C>(a);
        let src = identity_one_cell(c, &self.on_obj(a)?)?;
        let tgt = self.on_one(&identity_one_cell(c, a)?)?;
        self.0.componentwise(src, tgt, |s| sum_unit_iter(c, &pick(&pa, s as Mask)))
    }
}

/// `ξ: Id ⇒ i_n ∘ p_n`.
pub struct Xi<'a, 'b, C: StrictSmb>(pub &'b GammaBicategory<'a, C>);

impl<'a, C: StrictSmb> Transformation<GammaBicategory<'a, C>, GammaBicategory<'a, C>> for Xi<'a, '_, C> {
    fn component(&self, a: &GObj<C>) -> Result<GOne<C>> {
        Ok(build_xi(self.0.base, a)?.cell)
    }
    fn naturality(&self, f: &GOne<C>) -> Result<GTwo<C>> {
        xi_naturality(self.0.base, f)
    }
}

/// Folds a validator's verdict into one record.
fn fold_into(rec: &mut LawRecord, what: impl Fn() -> String, report: &CheckReport) {
    rec.tick();
    if let Some(bad) = report.first_failure() {
        let w = format!("{}: {} {}", what(), bad.law, bad.witness.clone().unwrap_or_default());
        match bad.status {
            Status::Inconclusive => rec.inconclusive(w),
            _ => rec.fail(w),
        }
    }
}

fn sample<T: Clone>(xs: &[T], budget: &Budget, law: &str) -> (Vec<T>, Option<u64>) {
    let (picks, seed) = budget.select(xs.len() as u128, salt(law));
    (picks.into_iter().map(|i| xs[i as usize].clone()).collect(), seed)
}

/// `Ĉ(1) ≅ C`: `i_1` and `p_1` are mutually inverse on every enumerated cell
/// of `C`, and `i_1` preserves identities and composition on the nose.
pub fn level_one_round_trip<C: StrictSmb>(c: &C, budget: &Budget) -> LawRecord {
    let mut rec = LawRecord::new("level-one-iso", "one-index-families-are-base-cells");
    let objs = c.objects();
    let ones: Vec<C::One> = objs.iter().flat_map(|a| objs.iter().flat_map(move |b| c.one_cells(a, b))).collect();
    let twos: Vec<C::Two> = ones.iter().flat_map(|f| c.two_cells_from(f)).collect();
    let mut check = |ok: Result<bool>, w: &dyn Fn() -> String| {
        if ok != Ok(true) {
            rec.tick();
            rec.fail(format!("{}: {ok:?}", w()));
        } else {
            rec.tick();
        }
    };
    for a in &objs {
        let r = build_i_object(c, std::slice::from_ref(a))
            .map(|x| project_p_object::<C>(&x) == vec![a.clone()] && validate_gamma_object(c, &x, 64).passed());
        check(r, &|| format!("object {a:?}"));
    }
    for f in &ones {
        let r = build_i_one(c, std::slice::from_ref(f)).and_then(|x| {
            let back = build_i_one(c, &project_p_one::<C>(&x))?;
            Ok(project_p_one::<C>(&x) == vec![f.clone()] && back == x && validate_gamma_one_cell(c, &x).passed())
        });
        check(r, &|| format!("1-cell {f:?}"));
        let r = build_i_object(c, &[c.one_src(f)])
            .and_then(|x| Ok(identity_one_cell(c, &x)? == build_i_one(c, &[c.id1(&c.one_src(f))])?));
        check(r, &|| format!("identity at {:?}", c.one_src(f)));
    }
    for p in &twos {
        let r = build_i_two(c, std::slice::from_ref(p))
            .map(|x| project_p_two::<C>(&x) == vec![p.clone()] && validate_gamma_two_cell(c, &x).passed());
        check(r, &|| format!("2-cell {p:?}"));
    }
    let pairs: Vec<(C::One, C::One)> = ones
        .iter()
        .flat_map(|f| ones.iter().filter(|g| c.one_src(g) == c.one_tgt(f)).map(move |g| (f.clone(), g.clone())))
        .collect();
    let (picked, seed) = sample(&pairs, budget, "level-one-iso");
    for (f, g) in picked {
        let r = (|| {
            Ok(compose_one_cells(
                c,
                &build_i_one(c, std::slice::from_ref(&g))?,
                &build_i_one(c, std::slice::from_ref(&f))?,
            )? == build_i_one(c, &[c.comp1(&g, &f)?])?)
        })();
        check(r, &|| format!("composite of {f:?} then {g:?}"));
    }
    rec.sampled_with(seed)
}

/// The full specialness check for `Ĉ(n)` over `c`: every generated Γ-cell
/// validates, composites and pushforwards stay valid, pushforward is
/// functorial, `p_n ∘ i_n = Id`, `ξ` has valid components made of
/// 1-equivalences and is a transformation `Id ⇒ i_n ∘ p_n`, and `Ĉ(1) ≅ C`.
pub fn verify_special<C: StrictSmb>(c: &C, n: usize, per_hom: usize, budget: &Budget) -> Result<CheckReport> {
    let started = std::time::Instant::now();
    check_n(n)?;
    let universe = GammaUniverse::generate(c, n, per_hom, budget.seed)?;
    let gb = GammaBicategory::new(c, universe);
    let u = &gb.universe;
    let mut report = CheckReport::new("special");
    let eq_bound = 256;

    let mut rec = LawRecord::new("objects-valid", "gamma-object-conditions");
    for x in &u.objects {
        fold_into(&mut rec, || format!("object {x:?}"), &validate_gamma_object(c, x, eq_bound));
    }
    report.push(rec);

    let mut rec = LawRecord::new("one-cells-valid", "gamma-one-cell-conditions");
    for f in &u.ones {
        fold_into(&mut rec, || "1-cell".into(), &validate_gamma_one_cell(c, f));
    }
    report.push(rec);

    let mut rec = LawRecord::new("two-cells-valid", "gamma-two-cell-conditions");
    for p in &u.twos {
        fold_into(&mut rec, || "2-cell".into(), &validate_gamma_two_cell(c, p));
    }
    report.push(rec);

    let pairs: Vec<(GOne<C>, GOne<C>)> = u
        .ones
        .iter()
        .flat_map(|f| u.ones.iter().filter(|g| g.src == f.tgt).map(move |g| (f.clone(), g.clone())))
        .collect();
    let (picked, seed) = sample(&pairs, budget, "composites-valid");
    let mut rec = LawRecord::new("composites-valid", "composition-closure").sampled_with(seed);
    for (f, g) in &picked {
        match compose_one_cells(c, g, f) {
            Ok(gf) => fold_into(&mut rec, || "composite".into(), &validate_gamma_one_cell(c, &gf)),
            Err(e) => {
                rec.tick();
                rec.fail(e)
            }
        }
    }
    report.push(rec);

    let mut rec = LawRecord::new("vertical-composites-valid", "vertical-composition-closure");
    for a in &u.twos {
        for b in u.twos.iter().filter(|b| b.src == a.tgt) {
            match vcomp_two_cells(c, b, a) {
                Ok(ba) => fold_into(&mut rec, || "vertical composite".into(), &validate_gamma_two_cell(c, &ba)),
                Err(e) => {
                    rec.tick();
                    rec.fail(e)
                }
            }
        }
    }
    report.push(rec);

    report.push(pushforward_laws(c, &gb, budget)?);

    let mut rec = LawRecord::new("p-after-i-identity", "projection-after-inclusion");
    let objs = c.objects();
    let tuples = product(&vec![objs.clone(); n]);
    let (picked, seed) = sample(&tuples, budget, "p-after-i-identity");
    for t in &picked {
        let x = build_i_object(c, t)?;
        rec.expect(project_p_object::<C>(&x) == *t, || format!("objects {t:?}"));
    }
    for f in &u.ones {
        let fs = project_p_one::<C>(f);
        let x = build_i_one(c, &fs)?;
        rec.expect(project_p_one::<C>(&x) == fs, || format!("1-cells {fs:?}"));
    }
    for p in &u.twos {
        let ps = project_p_two::<C>(p);
        let x = build_i_two(c, &ps)?;
        rec.expect(project_p_two::<C>(&x) == ps, || format!("2-cells {ps:?}"));
    }
    report.push(rec.sampled_with(seed));

    let mut comp = LawRecord::new("xi-components", "xi-component-valid");
    let mut equiv = LawRecord::new("xi-equivalences", "xi-parts-are-equivalences");
    for x in &u.objects {
        let xi = build_xi(c, x)?;
        fold_into(&mut comp, || format!("ξ at {x:?}"), &validate_gamma_one_cell(c, &xi.cell));
        for (s, a) in xi.a_sup.iter().enumerate() {
            equiv.tick();
            match is_one_equivalence(c, a, eq_bound) {
                OneEquivalence::Equivalence { .. } => {}
                OneEquivalence::NotFound { definitive: true, .. } => equiv.fail(format!("a^{s:#b} = {a:?}")),
                OneEquivalence::NotFound { checked, .. } => {
                    equiv.inconclusive(format!("a^{s:#b} = {a:?}: {checked} candidates tried"))
                }
            }
        }
    }
    report.push(comp);
    report.push(equiv);

    let mut rec = LawRecord::new("xi-naturality-cells", "xi-naturality-is-a-two-cell");
    for f in &u.ones {
        match xi_naturality(c, f) {
            Ok(cell) => fold_into(&mut rec, || "ξ²".into(), &validate_gamma_two_cell(c, &cell)),
            Err(e) => {
                rec.tick();
                rec.fail(e)
            }
        }
    }
    report.push(rec);

    let id = IdentityPseudofunctor(&gb);
    let ip = IComposeP(&gb);
    report.absorb(validate_pseudofunctor(&gb, &gb, &ip, budget));
    report.absorb(validate_transformation(&gb, &gb, &id, &ip, &Xi(&gb), budget));
    report.absorb(validate_bicategory(&gb, budget));
    report.push(level_one_round_trip(c, budget));
    report.wall_time = started.elapsed();
    Ok(report)
}

/// Closure and strict functoriality of reindexing along every pointed map
/// `n -> n` (pairs of them for functoriality) and `n -> 1`.
fn pushforward_laws<C: StrictSmb>(c: &C, gb: &GammaBicategory<'_, C>, budget: &Budget) -> Result<LawRecord> {
    let u = &gb.universe;
    let n = u.n;
    let maps = PointedMap::all(n, n)?;
    let (objs, s1) = sample(&u.objects, budget, "pushforward-objects");
    let (ones, s2) = sample(&u.ones, budget, "pushforward-ones");
    let (twos, _) = sample(&u.twos, budget, "pushforward-twos");
    let mut rec = LawRecord::new("pushforward", "reindexing-functorial").sampled_with(s1.or(s2));
    let ident = PointedMap::identity(n)?;
    fn law<X: Pushforward + PartialEq>(rec: &mut LawRecord, x: &X, t: &PointedMap, t2: &PointedMap) -> Result<()> {
        let both = x.pushforward(&t.then(t2)?)?;
        let stepwise = x.pushforward(t)?.pushforward(t2)?;
        rec.expect(both == stepwise, || format!("(θ'∘θ)_* ≠ θ'_* θ_* for θ = {t:?}, θ' = {t2:?}"));
        Ok(())
    }
    for x in &objs {
        rec.expect(x.pushforward(&ident)? == *x, || "identity pushforward changed an object");
        for t in &maps {
            let y = x.pushforward(t)?;
            fold_into(&mut rec, || format!("pushforward along {t:?}"), &validate_gamma_object(c, &y, 256));
            for t2 in &maps {
                law(&mut rec, x, t, t2)?;
            }
        }
        for k in 1..=n {
            let y = x.pushforward(&PointedMap::select(n, k)?)?;
            let want = vec![c.unit_obj(), x.obj(singleton(k)).clone()];
            rec.expect(y.objs == want && y.maps.values().all(|a| *a == c.id1(&c.one_src(a))), || {
                format!("selecting {k} does not give A_{{{k}}} with unit maps")
            });
        }
    }
    for f in &ones {
        for t in &maps {
            fold_into(
                &mut rec,
                || format!("1-cell pushforward along {t:?}"),
                &validate_gamma_one_cell(c, &f.pushforward(t)?),
            );
            for t2 in &maps {
                law(&mut rec, f, t, t2)?;
            }
        }
    }
    for p in &twos {
        for t in &maps {
            fold_into(
                &mut rec,
                || format!("2-cell pushforward along {t:?}"),
                &validate_gamma_two_cell(c, &p.pushforward(t)?),
            );
            for t2 in &maps {
                law(&mut rec, p, t, t2)?;
            }
        }
    }
    Ok(rec)
}
