//! The bar construction of a monoidal category, built directly from `M`.
//!
//! A level-`p` cell is a family of objects `m_ij` (`i < j`) with invertible
//! `μ_ijk: m_ij ⊗ m_jk -> m_ik` such that
//!
//! ```text
//! μ_ikl ∘ (μ_ijk ⊗ id) = μ_ijl ∘ (id ⊗ μ_jkl) ∘ a_{m_ij, m_jk, m_kl}.
//! ```
//!
//! Comparison with the nerve of `ΣM` uses one fixed reindexing: `m_ij` is
//! `f_ij` and `μ_ijk` is `φ_ijk`. The tensor lists factors in path order while
//! composition in `ΣM` lists them in reverse (`f_jk * f_ij = f_ij ⊗ f_jk`),
//! so the formulas match once the order of the factors is reversed.

use super::{enumerate_icons, enumerate_nerve, face, product_indices, NerveLimits, NerveSimplex, Simplex};
use crate::bicat::{MonoidalCategory, Suspension};
use crate::error::{CatError, Result};
use crate::report::{CheckReport, LawRecord};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarCell<MO, MM> {
    pub p: usize,
    pub m: BTreeMap<(usize, usize), MO>,
    pub mu: BTreeMap<(usize, usize, usize), MM>,
}

type Cell<M> = BarCell<<M as MonoidalCategory>::Obj, <M as MonoidalCategory>::Mor>;

fn pairs(p: usize) -> Vec<(usize, usize)> {
    (0..=p).flat_map(|i| (i + 1..=p).map(move |j| (i, j))).collect()
}

fn triples(p: usize) -> Vec<(usize, usize, usize)> {
    super::triples(p).collect()
}

fn associative<M: MonoidalCategory>(m: &M, c: &Cell<M>) -> Result<bool> {
    for (i, j, k) in triples(c.p) {
        for l in k + 1..=c.p {
            let (mij, mjk, mkl) = (&c.m[&(i, j)], &c.m[&(j, k)], &c.m[&(k, l)]);
            let lhs = m.compose(&c.mu[&(i, k, l)], &m.tensor_mor(&c.mu[&(i, j, k)], &m.id(mkl))?)?;
            let rhs = m.compose(
                &c.mu[&(i, j, l)],
                &m.compose(&m.tensor_mor(&m.id(mij), &c.mu[&(j, k, l)])?, &m.associator(mij, mjk, mkl)?)?,
            )?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All level-`p` cells by brute force over object families and multiplications.
pub fn enumerate_bar<M: MonoidalCategory>(m: &M, p: usize, limits: &NerveLimits) -> Result<Vec<Cell<M>>> {
    let objs = m.objects();
    let ps = pairs(p);
    let families = (objs.len() as f64).powi(ps.len() as i32);
    if families > limits.max_simplices as f64 * 64.0 {
        return Err(CatError::LimitExceeded(format!("{families} object families at level {p}")));
    }
    let ts = triples(p);
    let mut out = Vec::new();
    for pick in product_indices(&vec![objs.len(); ps.len()]) {
        let fam: BTreeMap<_, _> = ps.iter().zip(&pick).map(|(k, &n)| (*k, objs[n].clone())).collect();
        let mut options = Vec::new();
        for &(i, j, k) in &ts {
            let src = m.tensor(&fam[&(i, j)], &fam[&(j, k)])?;
            let isos: Vec<_> = m.hom(&src, &fam[&(i, k)]).into_iter().filter(|f| m.inverse(f).is_some()).collect();
            options.push(isos);
        }
        for mus in product_indices(&options.iter().map(Vec::len).collect::<Vec<_>>()) {
            let mu = ts.iter().zip(&mus).zip(&options).map(|((t, &n), o)| (*t, o[n].clone())).collect();
            let cell = BarCell { p, m: fam.clone(), mu };
            if associative(m, &cell)? {
                out.push(cell);
                if out.len() > limits.max_simplices {
                    return Err(CatError::LimitExceeded(format!(
                        "more than {} bar cells at level {p}",
                        limits.max_simplices
                    )));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Deletes index `k`.
pub fn bar_face<MO: Clone, MM: Clone>(k: usize, c: &BarCell<MO, MM>) -> Result<BarCell<MO, MM>> {
    let x = face(k, &to_simplex_shape(c))?;
    Ok(BarCell { p: c.p - 1, m: x.edges, mu: x.fillers })
}

fn to_simplex_shape<MO: Clone, MM: Clone>(c: &BarCell<MO, MM>) -> NerveSimplex<(), MO, MM> {
    NerveSimplex { objs: vec![(); c.p + 1], edges: c.m.clone(), fillers: c.mu.clone() }
}

/// The fixed reindexing into the nerve of `ΣM`.
pub fn bar_to_nerve<M: MonoidalCategory>(c: &Cell<M>) -> Simplex<Suspension<M>> {
    to_simplex_shape(c)
}

type Components<M> = BTreeMap<(usize, usize), <M as MonoidalCategory>::Mor>;

/// Bar morphisms `θ: c -> d`: `θ_ij: m_ij -> m'_ij` with `μ' ∘ (θ_ij ⊗ θ_jk) = θ_ik ∘ μ`.
fn bar_morphisms<M: MonoidalCategory>(m: &M, c: &Cell<M>, d: &Cell<M>) -> Result<Vec<Components<M>>> {
    let ps = pairs(c.p);
    let options: Vec<Vec<M::Mor>> = ps.iter().map(|k| m.hom(&c.m[k], &d.m[k])).collect();
    let mut out = Vec::new();
    'pick: for pick in product_indices(&options.iter().map(Vec::len).collect::<Vec<_>>()) {
        let th: BTreeMap<_, _> = ps.iter().zip(&pick).zip(&options).map(|((k, &n), o)| (*k, o[n].clone())).collect();
        for (i, j, k) in triples(c.p) {
            let lhs = m.compose(&d.mu[&(i, j, k)], &m.tensor_mor(&th[&(i, j)], &th[&(j, k)])?)?;
            let rhs = m.compose(&th[&(i, k)], &c.mu[&(i, j, k)])?;
            if lhs != rhs {
                continue 'pick;
            }
        }
        out.push(th);
    }
    Ok(out)
}

/// Compares the bar construction of `M` with the nerve of `ΣM` on levels
/// `0..=p_max`: cell sets, face maps, and (up to level 2) morphism sets.
pub fn bar_equals_nerve<M: MonoidalCategory + Clone>(m: &M, p_max: usize, limits: &NerveLimits) -> Result<CheckReport> {
    let started = std::time::Instant::now();
    let s = Suspension(m.clone());
    let mut report = CheckReport::new("bar-nerve");
    for p in 0..=p_max {
        let bar = enumerate_bar(m, p, limits)?;
        let nerve = enumerate_nerve(&s, p, limits)?;
        let image: BTreeSet<_> = bar.iter().map(bar_to_nerve::<M>).collect();
        let target: BTreeSet<_> = nerve.iter().cloned().collect();
        let mut cells = LawRecord::new(format!("level-{p}-cells"), "bar cells and nerve simplices agree");
        cells.expect(image.len() == bar.len(), || "reindexing is not injective");
        cells.expect(image == target, || {
            let extra = image.symmetric_difference(&target).next();
            format!("{} bar cells, {} simplices, first difference {extra:?}", bar.len(), nerve.len())
        });
        report.push(cells);
        if p > 0 {
            let mut faces = LawRecord::new(format!("level-{p}-faces"), "face maps agree under the reindexing");
            for c in &bar {
                for k in 0..=p {
                    let lhs = bar_face(k, c).map(|d| bar_to_nerve::<M>(&d));
                    let rhs = face(k, &bar_to_nerve::<M>(c));
                    faces.expect(matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b), || format!("d_{k} {c:?}"));
                }
            }
            report.push(faces);
        }
        if p <= 2 {
            let mut mors = LawRecord::new(format!("level-{p}-morphisms"), "bar morphisms and icons agree");
            for c in &bar {
                for d in &bar {
                    let th = bar_morphisms(m, c, d)?;
                    let icons = enumerate_icons(&s, &bar_to_nerve::<M>(c), &bar_to_nerve::<M>(d))?;
                    let ours: BTreeSet<_> = th.into_iter().collect();
                    let theirs: BTreeSet<_> = icons.into_iter().map(|ic| ic.comps).collect();
                    mors.expect(ours == theirs, || format!("{c:?} -> {d:?}: {} against {}", ours.len(), theirs.len()));
                }
            }
            report.push(mors);
        }
    }
    report.wall_time = started.elapsed();
    Ok(report)
}
