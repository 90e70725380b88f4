//! The Segal nerve of a finite bicategory.
//!
//! A `p`-simplex is a normal pseudofunctor `[p] -> C`, stored as a triangular
//! family: objects `C_i`, 1-cells `f_ij: C_i -> C_j` for `i < j` and
//! invertible fillers `φ_ijk: f_jk * f_ij ⇒ f_ik` for `i < j < k`, subject to
//!
//! ```text
//! φ_ikl ∘ (f_kl * φ_ijk) = φ_ijl ∘ (φ_jkl * f_ij) ∘ α_{f_kl, f_jk, f_ij}
//! ```
//!
//! for every `i < j < k < l`. Degenerate data (`f_ii`, fillers with repeated
//! indices) is never stored: it is the identity 1-cell and the matching
//! unitor. Morphisms between simplices with the same objects are icons.

mod bar;
mod cylinder;
#[cfg(test)]
mod tests;

pub use bar::{bar_equals_nerve, enumerate_bar, BarCell};
pub use cylinder::{check_cylinder, cylinder_pseudofunctor, BlockShift, Cylinder, EndRestriction, Normalized};

use crate::bicat::{vcomp_seq, whisker_l, whisker_r, Bicategory, Obj, One, ProductBicategory, Two};
use crate::error::{CatError, Result};
use crate::report::{CheckReport, LawRecord};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NerveSimplex<O, L, T> {
    pub objs: Vec<O>,
    /// `f_ij` for `i < j`.
    pub edges: BTreeMap<(usize, usize), L>,
    /// `φ_ijk` for `i < j < k`.
    pub fillers: BTreeMap<(usize, usize, usize), T>,
}

pub type Simplex<B> = NerveSimplex<Obj<B>, One<B>, Two<B>>;

impl<O, L, T> NerveSimplex<O, L, T> {
    pub fn dim(&self) -> usize {
        self.objs.len() - 1
    }
}

/// `{η_ij: f_ij ⇒ f'_ij}` between simplices with equal objects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Icon<O, L, T> {
    pub src: NerveSimplex<O, L, T>,
    pub tgt: NerveSimplex<O, L, T>,
    pub comps: BTreeMap<(usize, usize), T>,
}

pub type NerveIcon<B> = Icon<Obj<B>, One<B>, Two<B>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NerveLimits {
    pub max_dim: usize,
    /// Per level; exceeding it is an error rather than a truncated list.
    pub max_simplices: usize,
}

impl Default for NerveLimits {
    fn default() -> Self {
        NerveLimits { max_dim: 3, max_simplices: 200_000 }
    }
}

fn missing(what: &str, key: impl std::fmt::Debug) -> CatError {
    CatError::Malformed(format!("simplex has no {what} at {key:?}"))
}

/// `f_ij` for `i ≤ j`, the identity when `i = j`.
pub fn edge<B: Bicategory>(b: &B, x: &Simplex<B>, i: usize, j: usize) -> Result<One<B>> {
    if i == j {
        return Ok(b.id1(&x.objs[i]));
    }
    x.edges.get(&(i, j)).cloned().ok_or_else(|| missing("edge", (i, j)))
}

/// `φ_ijk` for `i ≤ j ≤ k`; repeated indices give `r`, `l` or `l_I`.
pub fn filler<B: Bicategory>(b: &B, x: &Simplex<B>, i: usize, j: usize, k: usize) -> Result<Two<B>> {
    if i == j {
        return b.runit(&edge(b, x, j, k)?);
    }
    if j == k {
        return b.lunit(&edge(b, x, i, j)?);
    }
    x.fillers.get(&(i, j, k)).cloned().ok_or_else(|| missing("filler", (i, j, k)))
}

/// Both sides of the cocycle condition at `i ≤ j ≤ k ≤ l`.
fn cocycle_sides<B: Bicategory>(
    b: &B,
    x: &Simplex<B>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<(Two<B>, Two<B>)> {
    let (fij, fjk, fkl) = (edge(b, x, i, j)?, edge(b, x, j, k)?, edge(b, x, k, l)?);
    let lhs = b.vcomp(&filler(b, x, i, k, l)?, &whisker_l(b, &fkl, &filler(b, x, i, j, k)?)?)?;
    let rhs = vcomp_seq(
        b,
        &[b.assoc(&fkl, &fjk, &fij)?, whisker_r(b, &filler(b, x, j, k, l)?, &fij)?, filler(b, x, i, j, l)?],
    )?;
    Ok((lhs, rhs))
}

pub fn cocycle_holds<B: Bicategory>(b: &B, x: &Simplex<B>, i: usize, j: usize, k: usize, l: usize) -> Result<bool> {
    let (lhs, rhs) = cocycle_sides(b, x, i, j, k, l)?;
    Ok(lhs == rhs)
}

fn triples(p: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=p).flat_map(move |i| (i + 1..=p).flat_map(move |j| (j + 1..=p).map(move |k| (i, j, k))))
}

fn quadruples(p: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    triples(p).flat_map(move |(i, j, k)| (k + 1..=p).map(move |l| (i, j, k, l)))
}

/// Re-checks a simplex from scratch: shape, typing, invertibility, cocycles.
pub fn validate_simplex<B: Bicategory>(b: &B, x: &Simplex<B>) -> CheckReport {
    let mut report = CheckReport::new("nerve-simplex");
    let mut shape = LawRecord::new("shape", "one edge per i<j and one filler per i<j<k");
    let mut typing = LawRecord::new("typing", "f_ij: C_i -> C_j and φ_ijk: f_jk * f_ij ⇒ f_ik");
    let mut inv = LawRecord::new("invertible", "fillers are invertible");
    let mut cocycle = LawRecord::new("cocycle", "φ_ikl ∘ (f_kl * φ_ijk) = φ_ijl ∘ (φ_jkl * f_ij) ∘ α");
    let p = x.objs.len().saturating_sub(1);
    let n_edges = p * (p + 1) / 2;
    let ok_shape = !x.objs.is_empty()
        && x.edges.len() == n_edges
        && x.edges.keys().all(|&(i, j)| i < j && j <= p)
        && x.fillers.len() == triples(p).count()
        && x.fillers.keys().all(|&(i, j, k)| i < j && j < k && k <= p);
    if !shape.expect(ok_shape, || format!("dimension {p}: {} edges, {} fillers", x.edges.len(), x.fillers.len())) {
        for r in [shape, typing, inv, cocycle] {
            report.push(r);
        }
        return report;
    }
    for (&(i, j), f) in &x.edges {
        typing.expect(b.one_src(f) == x.objs[i] && b.one_tgt(f) == x.objs[j], || format!("f_{i}{j} = {f:?}"));
    }
    for (&(i, j, k), phi) in &x.fillers {
        let typed = (|| -> Result<bool> {
            let src = b.comp1(&edge(b, x, j, k)?, &edge(b, x, i, j)?)?;
            Ok(b.two_src(phi) == src && b.two_tgt(phi) == edge(b, x, i, k)?)
        })();
        typing.expect(typed == Ok(true), || format!("φ_{i}{j}{k} = {phi:?}"));
        inv.expect(b.inverse2(phi).is_some(), || format!("φ_{i}{j}{k} = {phi:?}"));
    }
    if typing.passed() {
        for (i, j, k, l) in quadruples(p) {
            cocycle.expect(cocycle_holds(b, x, i, j, k, l) == Ok(true), || format!("({i},{j},{k},{l}) in {x:?}"));
        }
    }
    for r in [shape, typing, inv, cocycle] {
        report.push(r);
    }
    report
}

/// All `p`-simplices in canonical (derived `Ord`) order.
///
/// Level `q + 1` is built from level `q` by adding a last vertex `m`. The new
/// edge `f_{q,m}` and, for each `i < q`, the pair `(f_im, φ_{i,q,m})` are
/// chosen freely; every other new filler is then forced by the cocycle at
/// `(i, j, q, m)`:
///
/// ```text
/// φ_ijm = φ_iqm ∘ (f_qm * φ_ijq) ∘ α⁻¹ ∘ (φ_jqm * f_ij)⁻¹
/// ```
///
/// and the remaining cocycles with last index `m` prune the search.
pub fn enumerate_nerve<B: Bicategory>(b: &B, p: usize, limits: &NerveLimits) -> Result<Vec<Simplex<B>>> {
    if p > limits.max_dim {
        return Err(CatError::Domain(format!("dimension {p} exceeds the limit {}", limits.max_dim)));
    }
    let mut level: Vec<Simplex<B>> = b
        .objects()
        .into_iter()
        .map(|o| NerveSimplex { objs: vec![o], edges: BTreeMap::new(), fillers: BTreeMap::new() })
        .collect();
    check_limit(level.len(), 0, limits)?;
    for q in 0..p {
        let mut next = Vec::new();
        for x in &level {
            for cm in b.objects() {
                for fqm in b.one_cells(&x.objs[q], &cm) {
                    let mut y = x.clone();
                    y.objs.push(cm.clone());
                    y.edges.insert((q, q + 1), fqm);
                    extend_down(b, &mut y, q, q, &mut next, limits)?;
                }
            }
        }
        level = next;
    }
    level.sort();
    Ok(level)
}

fn check_limit(n: usize, p: usize, limits: &NerveLimits) -> Result<()> {
    if n > limits.max_simplices {
        return Err(CatError::LimitExceeded(format!("more than {} simplices at level {p}", limits.max_simplices)));
    }
    Ok(())
}

/// Chooses `(f_im, φ_iqm)` for `i = left - 1, …, 0`, deriving the other fillers.
fn extend_down<B: Bicategory>(
    b: &B,
    y: &mut Simplex<B>,
    q: usize,
    left: usize,
    out: &mut Vec<Simplex<B>>,
    limits: &NerveLimits,
) -> Result<()> {
    let m = q + 1;
    if left == 0 {
        out.push(y.clone());
        return check_limit(out.len(), m, limits);
    }
    let i = left - 1;
    let fqm = y.edges[&(q, m)].clone();
    let fiq = y.edges[&(i, q)].clone();
    let through = b.comp1(&fqm, &fiq)?;
    for fim in b.one_cells(&y.objs[i], &y.objs[m]) {
        for phi in b.two_cells(&through, &fim) {
            if b.inverse2(&phi).is_none() {
                continue;
            }
            y.edges.insert((i, m), fim.clone());
            y.fillers.insert((i, q, m), phi);
            for j in i + 1..q {
                let derived = derive_filler(b, y, i, j, q)?;
                y.fillers.insert((i, j, m), derived);
            }
            let mut ok = true;
            'check: for j in i + 1..m {
                for k in j + 1..m {
                    if !cocycle_holds(b, y, i, j, k, m)? {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                extend_down(b, y, q, i, out, limits)?;
            }
        }
    }
    y.edges.remove(&(i, m));
    y.fillers.retain(|&(a, _, c), _| !(a == i && c == m));
    Ok(())
}

fn derive_filler<B: Bicategory>(b: &B, y: &Simplex<B>, i: usize, j: usize, q: usize) -> Result<Two<B>> {
    let m = q + 1;
    let (fij, fjq, fqm) = (edge(b, y, i, j)?, edge(b, y, j, q)?, edge(b, y, q, m)?);
    let back = crate::bicat::invert(b, &whisker_r(b, &y.fillers[&(j, q, m)], &fij)?)?;
    let reassoc = crate::bicat::invert(b, &b.assoc(&fqm, &fjq, &fij)?)?;
    vcomp_seq(b, &[back, reassoc, whisker_l(b, &fqm, &y.fillers[&(i, j, q)])?, y.fillers[&(i, q, m)].clone()])
}

/// `d_k`: deletes vertex `k`.
pub fn face<O: Clone, L: Clone, T: Clone>(k: usize, x: &NerveSimplex<O, L, T>) -> Result<NerveSimplex<O, L, T>> {
    let p = x.objs.len() - 1;
    if p == 0 || k > p {
        return Err(CatError::Domain(format!("face d_{k} of a {p}-simplex")));
    }
    let r = |i: usize| if i > k { i - 1 } else { i };
    let mut objs = x.objs.clone();
    objs.remove(k);
    Ok(NerveSimplex {
        objs,
        edges: x
            .edges
            .iter()
            .filter(|((i, j), _)| *i != k && *j != k)
            .map(|(&(i, j), f)| ((r(i), r(j)), f.clone()))
            .collect(),
        fillers: x
            .fillers
            .iter()
            .filter(|((i, j, l), _)| *i != k && *j != k && *l != k)
            .map(|(&(i, j, l), t)| ((r(i), r(j), r(l)), t.clone()))
            .collect(),
    })
}

/// `s_k`: repeats vertex `k`, with identity edge and unitor fillers.
pub fn degeneracy<B: Bicategory>(b: &B, k: usize, x: &Simplex<B>) -> Result<Simplex<B>> {
    let p = x.dim();
    if k > p {
        return Err(CatError::Domain(format!("degeneracy s_{k} of a {p}-simplex")));
    }
    let s = |i: usize| if i <= k { i } else { i - 1 };
    let mut objs = x.objs.clone();
    objs.insert(k, x.objs[k].clone());
    let mut edges = BTreeMap::new();
    for i in 0..=p + 1 {
        for j in i + 1..=p + 1 {
            edges.insert((i, j), edge(b, x, s(i), s(j))?);
        }
    }
    let mut fillers = BTreeMap::new();
    for (i, j, l) in triples(p + 1) {
        fillers.insert((i, j, l), filler(b, x, s(i), s(j), s(l))?);
    }
    Ok(NerveSimplex { objs, edges, fillers })
}

/// Level sizes `|N_0|, …, |N_p|`.
pub fn level_sizes<B: Bicategory>(b: &B, p: usize, limits: &NerveLimits) -> Result<Vec<usize>> {
    (0..=p).map(|q| enumerate_nerve(b, q, limits).map(|l| l.len())).collect()
}

fn same<X: PartialEq>(a: Result<X>, b: Result<X>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x == y)
}

/// Enumerates levels `0..=p_max` and checks every simplex, closure of the
/// enumeration under faces and degeneracies, and all simplicial identities.
pub fn check_simplicial<B: Bicategory>(b: &B, p_max: usize, limits: &NerveLimits) -> Result<CheckReport> {
    let started = std::time::Instant::now();
    let levels: Vec<Vec<Simplex<B>>> = (0..=p_max).map(|p| enumerate_nerve(b, p, limits)).collect::<Result<_>>()?;
    let sets: Vec<BTreeSet<&Simplex<B>>> = levels.iter().map(|l| l.iter().collect()).collect();
    let mut report = CheckReport::new("nerve");
    let mut valid = LawRecord::new("simplices-valid", "enumerated simplices re-validate");
    let mut faces = LawRecord::new("faces-closed", "d_k maps level p into level p-1");
    let mut degs = LawRecord::new("degeneracies-closed", "s_k maps level p into level p+1");
    let mut dd = LawRecord::new("face-face", "d_i d_j = d_{j-1} d_i for i < j");
    let mut ds =
        LawRecord::new("face-degeneracy", "d_i s_j = s_{j-1} d_i, d_j s_j = d_{j+1} s_j = id, d_i s_j = s_j d_{i-1}");
    let mut ss = LawRecord::new("degeneracy-degeneracy", "s_i s_j = s_{j+1} s_i for i <= j");
    for (p, level) in levels.iter().enumerate() {
        for x in level {
            let rep = validate_simplex(b, x);
            valid.expect(rep.passed(), || format!("{x:?}: {}", rep.summary()));
            if p > 0 {
                for k in 0..=p {
                    let y = face(k, x);
                    faces.expect(matches!(&y, Ok(y) if sets[p - 1].contains(y)), || format!("d_{k} {x:?}"));
                }
            }
            if p < p_max {
                for k in 0..=p {
                    let y = degeneracy(b, k, x);
                    degs.expect(matches!(&y, Ok(y) if sets[p + 1].contains(y)), || format!("s_{k} {x:?}"));
                }
            }
            for j in 0..=p {
                for i in 0..j {
                    if p >= 2 {
                        let lhs = face(j, x).and_then(|y| face(i, &y));
                        let rhs = face(i, x).and_then(|y| face(j - 1, &y));
                        dd.expect(same(lhs, rhs), || format!("i={i} j={j} {x:?}"));
                    }
                }
            }
            for j in 0..=p {
                let sj = degeneracy(b, j, x);
                for i in 0..=p + 1 {
                    let lhs = sj.as_ref().map_err(Clone::clone).and_then(|y| face(i, y));
                    let rhs = if i < j {
                        face(i, x).and_then(|y| degeneracy(b, j - 1, &y))
                    } else if i == j || i == j + 1 {
                        Ok(x.clone())
                    } else {
                        face(i - 1, x).and_then(|y| degeneracy(b, j, &y))
                    };
                    ds.expect(same(lhs, rhs), || format!("i={i} j={j} {x:?}"));
                }
                for i in 0..=j {
                    let lhs = sj.as_ref().map_err(Clone::clone).and_then(|y| degeneracy(b, i, y));
                    let rhs = degeneracy(b, i, x).and_then(|y| degeneracy(b, j + 1, &y));
                    ss.expect(same(lhs, rhs), || format!("i={i} j={j} {x:?}"));
                }
            }
        }
    }
    for r in [valid, faces, degs, dd, ds, ss] {
        report.push(r);
    }
    report.wall_time = started.elapsed();
    Ok(report)
}

/// `None` when the family is an icon, else the first violation.
pub fn icon_violation<B: Bicategory>(b: &B, ic: &NerveIcon<B>) -> Result<Option<String>> {
    let (x, y) = (&ic.src, &ic.tgt);
    if x.objs != y.objs {
        return Ok(Some("object families differ".into()));
    }
    let p = x.dim();
    if ic.comps.len() != p * (p + 1) / 2 {
        return Ok(Some(format!("{} components for dimension {p}", ic.comps.len())));
    }
    for (&(i, j), a) in &ic.comps {
        if b.two_src(a) != edge(b, x, i, j)? || b.two_tgt(a) != edge(b, y, i, j)? {
            return Ok(Some(format!("η_{i}{j} = {a:?} is mistyped")));
        }
    }
    for (i, j, k) in triples(p) {
        let lhs = b.vcomp(&filler(b, y, i, j, k)?, &b.hcomp(&ic.comps[&(j, k)], &ic.comps[&(i, j)])?)?;
        let rhs = b.vcomp(&ic.comps[&(i, k)], &filler(b, x, i, j, k)?)?;
        if lhs != rhs {
            return Ok(Some(format!("φ' ∘ (η_{j}{k} * η_{i}{j}) != η_{i}{k} ∘ φ at ({i},{j},{k})")));
        }
    }
    Ok(None)
}

/// All icons `x ⇒ y`; the objects of `x` and `y` must agree.
pub fn enumerate_icons<B: Bicategory>(b: &B, x: &Simplex<B>, y: &Simplex<B>) -> Result<Vec<NerveIcon<B>>> {
    if x.objs != y.objs {
        return Err(CatError::Domain("icons need equal object families".into()));
    }
    let keys: Vec<(usize, usize)> = x.edges.keys().copied().collect();
    let options: Vec<Vec<Two<B>>> =
        keys.iter().map(|&(i, j)| b.two_cells(&x.edges[&(i, j)], &y.edges[&(i, j)])).collect();
    let mut out = Vec::new();
    for pick in product_indices(&options.iter().map(Vec::len).collect::<Vec<_>>()) {
        let comps = keys.iter().zip(&pick).zip(&options).map(|((k, &n), o)| (*k, o[n].clone())).collect();
        let ic = Icon { src: x.clone(), tgt: y.clone(), comps };
        if icon_violation(b, &ic)?.is_none() {
            out.push(ic);
        }
    }
    Ok(out)
}

/// Every index tuple below `sizes`, in lexicographic order.
pub(crate) fn product_indices(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out.into_iter().flat_map(|v| (0..n).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    out
}

pub fn identity_icon<B: Bicategory>(b: &B, x: &Simplex<B>) -> NerveIcon<B> {
    Icon { src: x.clone(), tgt: x.clone(), comps: x.edges.iter().map(|(k, f)| (*k, b.id2(f))).collect() }
}

/// `second ∘ first`, componentwise.
pub fn compose_icons<B: Bicategory>(b: &B, second: &NerveIcon<B>, first: &NerveIcon<B>) -> Result<NerveIcon<B>> {
    if first.tgt != second.src {
        return Err(CatError::NotComposable("icons do not meet".into()));
    }
    let comps = first.comps.iter().map(|(k, a)| Ok((*k, b.vcomp(&second.comps[k], a)?))).collect::<Result<_>>()?;
    Ok(Icon { src: first.src.clone(), tgt: second.tgt.clone(), comps })
}

/// Checks that the icons between simplices of one level form a category:
/// identities are icons and units, composites are icons, composition is
/// associative on every composable triple.
pub fn check_icon_category<B: Bicategory>(b: &B, level: &[Simplex<B>]) -> Result<CheckReport> {
    let mut report = CheckReport::new("icons");
    let mut ids = LawRecord::new("identity-icons", "identity icons are icons and units");
    let mut comp = LawRecord::new("composite-icons", "composites of icons are icons");
    let mut assoc = LawRecord::new("icon-associativity", "composition of icons is associative");
    let mut homs: BTreeMap<(usize, usize), Vec<NerveIcon<B>>> = BTreeMap::new();
    for (a, x) in level.iter().enumerate() {
        for (c, y) in level.iter().enumerate() {
            if x.objs == y.objs {
                homs.insert((a, c), enumerate_icons(b, x, y)?);
            }
        }
    }
    for (a, x) in level.iter().enumerate() {
        let id = identity_icon(b, x);
        ids.expect(icon_violation(b, &id)?.is_none(), || format!("{x:?}"));
        for ((s, _), hs) in homs.range((a, 0)..=(a, usize::MAX)) {
            debug_assert_eq!(*s, a);
            for h in hs {
                ids.expect(compose_icons(b, h, &id)? == *h, || format!("{h:?}"));
            }
        }
    }
    for (&(a, c), fs) in &homs {
        for (&(_, e), gs) in homs.range((c, 0)..=(c, usize::MAX)) {
            for f in fs {
                for g in gs {
                    let gf = compose_icons(b, g, f)?;
                    comp.expect(icon_violation(b, &gf)?.is_none(), || format!("{g:?} ∘ {f:?}"));
                    for h in homs.range((e, 0)..=(e, usize::MAX)).flat_map(|(_, hs)| hs) {
                        let l = compose_icons(b, &compose_icons(b, h, g)?, f)?;
                        let r = compose_icons(b, h, &gf)?;
                        assoc.expect(l == r, || format!("{a} -> {c} -> {e}"));
                    }
                }
            }
        }
    }
    for r in [ids, comp, assoc] {
        report.push(r);
    }
    Ok(report)
}

/// The two projections of a simplex of `C × D`.
pub fn split_product_simplex<C: Bicategory, D: Bicategory>(
    x: &Simplex<ProductBicategory<'_, C, D>>,
) -> (Simplex<C>, Simplex<D>) {
    let left = NerveSimplex {
        objs: x.objs.iter().map(|o| o.0.clone()).collect(),
        edges: x.edges.iter().map(|(k, f)| (*k, f.0.clone())).collect(),
        fillers: x.fillers.iter().map(|(k, t)| (*k, t.0.clone())).collect(),
    };
    let right = NerveSimplex {
        objs: x.objs.iter().map(|o| o.1.clone()).collect(),
        edges: x.edges.iter().map(|(k, f)| (*k, f.1.clone())).collect(),
        fillers: x.fillers.iter().map(|(k, t)| (*k, t.1.clone())).collect(),
    };
    (left, right)
}

/// Checks that splitting is a bijection `N_p(C × D) -> N_p(C) × N_p(D)` for
/// every `p ≤ p_max`.
pub fn check_products<C: Bicategory, D: Bicategory>(
    c: &C,
    d: &D,
    p_max: usize,
    limits: &NerveLimits,
) -> Result<CheckReport> {
    let prod = ProductBicategory::new(c, d);
    let mut report = CheckReport::new("nerve-products");
    for p in 0..=p_max {
        let mut rec = LawRecord::new(format!("level-{p}-product"), "N_p(C × D) = N_p(C) × N_p(D)");
        let whole = enumerate_nerve(&prod, p, limits)?;
        let (ls, rs) = (enumerate_nerve(c, p, limits)?, enumerate_nerve(d, p, limits)?);
        let image: BTreeSet<_> = whole.iter().map(split_product_simplex::<C, D>).collect();
        rec.expect(image.len() == whole.len(), || "splitting is not injective");
        rec.expect(image.len() == ls.len() * rs.len(), || {
            format!("{} simplices against {} × {}", image.len(), ls.len(), rs.len())
        });
        for l in &ls {
            for r in &rs {
                rec.expect(image.contains(&(l.clone(), r.clone())), || format!("({l:?}, {r:?}) has no preimage"));
            }
        }
        report.push(rec);
    }
    Ok(report)
}

/// The `p ≤ p_max` truncation as a document: simplices per level, face and
/// degeneracy maps as indices into the neighbouring levels, and every icon.
pub fn export_truncated<B>(b: &B, p_max: usize, limits: &NerveLimits) -> Result<serde_json::Value>
where
    B: Bicategory,
    Obj<B>: serde::Serialize,
    One<B>: serde::Serialize,
    Two<B>: serde::Serialize,
{
    use serde_json::json;
    let levels: Vec<Vec<Simplex<B>>> = (0..=p_max).map(|p| enumerate_nerve(b, p, limits)).collect::<Result<_>>()?;
    let index: Vec<BTreeMap<&Simplex<B>, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(n, x)| (x, n)).collect()).collect();
    let find = |p: usize, x: &Simplex<B>| {
        index[p].get(x).copied().ok_or_else(|| CatError::Domain(format!("{x:?} is not enumerated at level {p}")))
    };
    let mut out = Vec::new();
    for (p, level) in levels.iter().enumerate() {
        let mut simplices = Vec::new();
        let mut faces = Vec::new();
        let mut degs = Vec::new();
        let mut icons = Vec::new();
        for (a, x) in level.iter().enumerate() {
            simplices.push(json!({
                "objects": x.objs,
                "edges": x.edges.iter().map(|(&(i, j), f)| json!([i, j, f])).collect::<Vec<_>>(),
                "fillers": x.fillers.iter().map(|(&(i, j, k), t)| json!([i, j, k, t])).collect::<Vec<_>>(),
            }));
            if p > 0 {
                faces.push((0..=p).map(|k| find(p - 1, &face(k, x)?)).collect::<Result<Vec<_>>>()?);
            }
            if p < p_max {
                degs.push((0..=p).map(|k| find(p + 1, &degeneracy(b, k, x)?)).collect::<Result<Vec<_>>>()?);
            }
            for (c, y) in level.iter().enumerate().filter(|(_, y)| y.objs == x.objs) {
                for ic in enumerate_icons(b, x, y)? {
                    let comps: Vec<_> = ic.comps.iter().map(|(&(i, j), t)| json!([i, j, t])).collect();
                    icons.push(json!({ "src": a, "tgt": c, "components": comps }));
                }
            }
        }
        out.push(json!({ "p": p, "simplices": simplices, "faces": faces, "degeneracies": degs, "icons": icons }));
    }
    Ok(json!({ "dim": p_max, "levels": out }))
}
