//! Validation and composition of Γ-cells.

use super::{
    disjoint_pairs, disjoint_triples, full_mask, sum_squares, unit_square, unit_swap, GObj, GOne, GTwo, Mask, Square,
};
use crate::bicat::{
    evaluate_pasting, invert, is_one_equivalence, vcomp_seq, whisker_l, whisker_r, Face, OneEquivalence,
    PastingDiagram, StrictSmb,
};
use crate::bracket::Bracket;
use crate::error::{CatError, Result};
use crate::report::{CheckReport, LawRecord};
use std::collections::BTreeSet;

/// Two squares side by side, `p` first along the top, sharing `p.right = q.left`:
/// `q.right * (q.top * p.top) ⇒ (q.bottom * p.bottom) * p.left`.
pub(crate) fn paste_beside<C: StrictSmb>(c: &C, p: &Square<C>, q: &Square<C>) -> Result<C::Two> {
    let d = PastingDiagram::<C>::new(
        vec![
            ("pt", p.top.clone()),
            ("qt", q.top.clone()),
            ("qr", q.right.clone()),
            ("mid", p.right.clone()),
            ("pl", p.left.clone()),
            ("pb", p.bottom.clone()),
            ("qb", q.bottom.clone()),
        ],
        &["pt", "qt", "qr"],
        &["pl", "pb", "qb"],
    )
    .face(Face::new("q", q.cell.clone(), &["qt", "qr"], &["mid", "qb"]))
    .face(Face::new("p", p.cell.clone(), &["pt", "mid"], &["pl", "pb"]));
    evaluate_pasting(c, &d, &Bracket::right_normal(0, 3), &Bracket::left_normal(0, 3))
}

/// `q` stacked under `p` (`p.bottom = q.top`):
/// `(q.right * p.right) * p.top ⇒ q.bottom * (q.left * p.left)`.
pub(crate) fn paste_below<C: StrictSmb>(c: &C, p: &Square<C>, q: &Square<C>) -> Result<C::Two> {
    let d = PastingDiagram::<C>::new(
        vec![
            ("pt", p.top.clone()),
            ("pr", p.right.clone()),
            ("qr", q.right.clone()),
            ("mid", p.bottom.clone()),
            ("pl", p.left.clone()),
            ("ql", q.left.clone()),
            ("qb", q.bottom.clone()),
        ],
        &["pt", "pr", "qr"],
        &["pl", "ql", "qb"],
    )
    .face(Face::new("p", p.cell.clone(), &["pt", "pr"], &["pl", "mid"]))
    .face(Face::new("q", q.cell.clone(), &["mid", "qr"], &["ql", "qb"]));
    evaluate_pasting(c, &d, &Bracket::left_normal(0, 3), &Bracket::right_normal(0, 3))
}

/// The `φ_{S,T}` square of a Γ-1-cell.
pub(crate) fn phi_square<C: StrictSmb>(c: &C, f: &GOne<C>, s: Mask, t: Mask) -> Result<Square<C>> {
    Ok(Square {
        top: f.src.map(s, t)?.clone(),
        right: c.sum_one(f.comp(s), f.comp(t))?,
        left: f.comp(s | t).clone(),
        bottom: f.tgt.map(s, t)?.clone(),
        cell: f.phi_at(s, t)?.clone(),
    })
}

fn object_shape<C: StrictSmb>(c: &C, x: &GObj<C>) -> std::result::Result<(), String> {
    let size = 1usize << x.n;
    if x.objs.len() != size {
        return Err(format!("{} objects for n = {}", x.objs.len(), x.n));
    }
    let keys: BTreeSet<_> = x.maps.keys().copied().collect();
    let want: BTreeSet<_> = disjoint_pairs(x.n).into_iter().collect();
    if keys != want {
        return Err("map family is not indexed by the disjoint pairs".into());
    }
    if x.objs[0] != c.unit_obj() {
        return Err(format!("A_∅ = {:?} is not the unit", x.objs[0]));
    }
    Ok(())
}

/// Typing, unit maps, the cocycle square, the symmetry triangle and the
/// equivalence condition on every `a_{S,T}` (inverse search capped at `bound`).
pub fn validate_gamma_object<C: StrictSmb>(c: &C, x: &GObj<C>, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("gamma-object");
    let mut shape = LawRecord::new("shape", "family-shape");
    let ok = object_shape(c, x);
    shape.expect(ok.is_ok(), || ok.clone().unwrap_err());
    report.push(shape);
    if ok.is_err() {
        return report;
    }

    let mut typing = LawRecord::new("typing", "map-typing");
    let mut units = LawRecord::new("unit-maps", "empty-index-maps");
    let mut equiv = LawRecord::new("equivalence", "maps-are-equivalences");
    for (&(s, t), a) in &x.maps {
        let tgt = c.sum_obj(x.obj(s), x.obj(t));
        typing.expect(c.one_src(a) == *x.obj(s | t) && tgt.as_ref() == Ok(&c.one_tgt(a)), || {
            format!("a_({s:#b},{t:#b}) = {a:?} has the wrong endpoints")
        });
        if s == 0 || t == 0 {
            units.expect(*a == c.id1(x.obj(s | t)), || format!("a_({s:#b},{t:#b}) = {a:?} is not an identity"));
        }
        equiv.tick();
        match is_one_equivalence(c, a, bound) {
            OneEquivalence::Equivalence { .. } => {}
            OneEquivalence::NotFound { definitive: true, .. } => {
                equiv.fail(format!("a_({s:#b},{t:#b}) = {a:?} is not a 1-equivalence"))
            }
            OneEquivalence::NotFound { checked, .. } => equiv.inconclusive(format!(
                "a_({s:#b},{t:#b}) = {a:?}: no weak inverse among the first {checked} candidates"
            )),
        }
    }
    report.push(typing);
    report.push(units);

    let mut cocycle = LawRecord::new("cocycle", "map-cocycle");
    for (s, t, u) in disjoint_triples(x.n) {
        let eval = || -> Result<bool> {
            let lhs = c.comp1(&c.sum_one(&c.id1(x.obj(s)), x.map(t, u)?)?, x.map(s, t | u)?)?;
            let rhs = c.comp1(&c.sum_one(x.map(s, t)?, &c.id1(x.obj(u)))?, x.map(s | t, u)?)?;
            Ok(lhs == rhs)
        };
        let r = eval();
        cocycle.expect(r == Ok(true), || format!("(S,T,U) = ({s:#b},{t:#b},{u:#b}): {r:?}"));
    }
    report.push(cocycle);

    let mut sym = LawRecord::new("symmetry", "map-symmetry");
    for (s, t) in disjoint_pairs(x.n) {
        let eval = || -> Result<bool> { Ok(c.comp1(&c.braid(x.obj(s), x.obj(t))?, x.map(s, t)?)? == *x.map(t, s)?) };
        let r = eval();
        sym.expect(r == Ok(true), || format!("(S,T) = ({s:#b},{t:#b}): {r:?}"));
    }
    report.push(sym);
    report.push(equiv);
    report
}

fn one_cell_shape<C: StrictSmb>(f: &GOne<C>) -> std::result::Result<(), String> {
    let n = f.src.n;
    if f.tgt.n != n || f.comps.len() != 1 << n || f.src.objs.len() != 1 << n || f.tgt.objs.len() != 1 << n {
        return Err(format!("component count {} does not match n = {n}", f.comps.len()));
    }
    let keys: BTreeSet<_> = f.phi.keys().copied().collect();
    if keys != disjoint_pairs(n).into_iter().collect() {
        return Err("filler family is not indexed by the disjoint pairs".into());
    }
    Ok(())
}

/// Typing and invertibility of the fillers, unit fillers, the three-index
/// pasting equation and the symmetry pasting equation.
pub fn validate_gamma_one_cell<C: StrictSmb>(c: &C, f: &GOne<C>) -> CheckReport {
    let mut report = CheckReport::new("gamma-one-cell");
    let mut shape = LawRecord::new("shape", "family-shape");
    let ok = one_cell_shape::<C>(f);
    shape.expect(ok.is_ok(), || ok.clone().unwrap_err());
    report.push(shape);
    if ok.is_err() {
        return report;
    }
    let n = f.src.n;

    let mut typing = LawRecord::new("typing", "component-typing");
    for s in 0..=full_mask(n) {
        let g = f.comp(s);
        typing.expect(c.one_src(g) == *f.src.obj(s) && c.one_tgt(g) == *f.tgt.obj(s), || {
            format!("f_{s:#b} = {g:?} has the wrong endpoints")
        });
    }
    let mut inv = LawRecord::new("invertible", "filler-invertible");
    let mut units = LawRecord::new("unit-fillers", "empty-index-fillers");
    for (s, t) in disjoint_pairs(n) {
        let eval = || -> Result<bool> {
            let sq = phi_square(c, f, s, t)?;
            Ok(c.two_src(&sq.cell) == c.comp1(&sq.right, &sq.top)?
                && c.two_tgt(&sq.cell) == c.comp1(&sq.bottom, &sq.left)?)
        };
        let r = eval();
        typing.expect(r == Ok(true), || format!("φ_({s:#b},{t:#b}) has the wrong boundary: {r:?}"));
        let Ok(phi) = f.phi_at(s, t) else { continue };
        inv.expect(c.inverse2(phi).is_some(), || format!("φ_({s:#b},{t:#b}) is not invertible"));
        if s == 0 || t == 0 {
            let want = unit_swap(c, f.comp(s | t));
            units.expect(want.as_ref() == Ok(phi), || format!("φ_({s:#b},{t:#b}) = {phi:?}, expected {want:?}"));
        }
    }
    report.push(typing);
    report.push(inv);
    report.push(units);

    let mut three = LawRecord::new("pasting-three", "filler-associativity");
    for (s, t, u) in disjoint_triples(n) {
        let eval = || -> Result<(C::Two, C::Two)> {
            let lhs = paste_beside(
                c,
                &phi_square(c, f, s, t | u)?,
                &sum_squares(c, &unit_square(c, f.comp(s))?, &phi_square(c, f, t, u)?)?,
            )?;
            let rhs = paste_beside(
                c,
                &phi_square(c, f, s | t, u)?,
                &sum_squares(c, &phi_square(c, f, s, t)?, &unit_square(c, f.comp(u))?)?,
            )?;
            Ok((lhs, rhs))
        };
        let r = eval();
        three.expect(matches!(&r, Ok((l, r)) if l == r), || format!("(S,T,U) = ({s:#b},{t:#b},{u:#b}): {r:?}"));
    }
    report.push(three);

    let mut sym = LawRecord::new("pasting-symmetry", "filler-symmetry");
    for (s, t) in disjoint_pairs(n) {
        let eval = || -> Result<(C::Two, C::Two)> {
            let (fs, ft) = (f.comp(s), f.comp(t));
            let braid = Square {
                top: c.braid(f.src.obj(s), f.src.obj(t))?,
                right: c.sum_one(ft, fs)?,
                left: c.sum_one(fs, ft)?,
                bottom: c.braid(f.tgt.obj(s), f.tgt.obj(t))?,
                cell: c.braid_cell(fs, ft)?,
            };
            let lhs = paste_beside(c, &phi_square(c, f, s, t)?, &braid)?;
            Ok((lhs, f.phi_at(t, s)?.clone()))
        };
        let r = eval();
        sym.expect(matches!(&r, Ok((l, r)) if l == r), || format!("(S,T) = ({s:#b},{t:#b}): {r:?}"));
    }
    report.push(sym);
    report
}

/// Typing and the modification equation
/// `(a' * ψ_{S∪T}) ∘ φ_{S,T} = γ_{S,T} ∘ ((ψ_S ⊞ ψ_T) * a)`.
pub fn validate_gamma_two_cell<C: StrictSmb>(c: &C, p: &GTwo<C>) -> CheckReport {
    let mut report = CheckReport::new("gamma-two-cell");
    let mut shape = LawRecord::new("shape", "family-shape");
    let (f, g) = (&p.src, &p.tgt);
    let ok = f.src == g.src
        && f.tgt == g.tgt
        && p.comps.len() == f.comps.len()
        && one_cell_shape::<C>(f).is_ok()
        && one_cell_shape::<C>(g).is_ok();
    shape.expect(ok, || "2-cell family does not fit its boundary".to_string());
    report.push(shape);
    if !ok {
        return report;
    }
    let n = f.src.n;
    let mut typing = LawRecord::new("typing", "component-typing");
    for s in 0..=full_mask(n) {
        let psi = &p.comps[s as usize];
        typing.expect(c.two_src(psi) == *f.comp(s) && c.two_tgt(psi) == *g.comp(s), || {
            format!("ψ_{s:#b} = {psi:?} does not go from f_S to g_S")
        });
    }
    report.push(typing);

    let mut modif = LawRecord::new("modification", "two-cell-compatibility");
    for (s, t) in disjoint_pairs(n) {
        let eval = || -> Result<(C::Two, C::Two)> {
            let lhs = c.vcomp(&whisker_l(c, g.tgt.map(s, t)?, &p.comps[(s | t) as usize])?, f.phi_at(s, t)?)?;
            let sum = c.sum_two(&p.comps[s as usize], &p.comps[t as usize])?;
            let rhs = c.vcomp(g.phi_at(s, t)?, &whisker_r(c, &sum, f.src.map(s, t)?)?)?;
            Ok((lhs, rhs))
        };
        let r = eval();
        modif.expect(matches!(&r, Ok((l, r)) if l == r), || format!("(S,T) = ({s:#b},{t:#b}): {r:?}"));
    }
    report.push(modif);
    report
}

/// `{I_{A_S}, ι_{S,T}}` with `ι = r⁻¹_a ∘ l_a ∘ ((⊞⁰)⁻¹ * a)`.
pub fn identity_one_cell<C: StrictSmb>(c: &C, x: &GObj<C>) -> Result<GOne<C>> {
    let comps = x.objs.iter().map(|a| c.id1(a)).collect();
    let mut phi = std::collections::BTreeMap::new();
    for (&(s, t), a) in &x.maps {
        let unit = invert(c, &c.sum_unit_cell(x.obj(s), x.obj(t))?)?;
        let cell = vcomp_seq(c, &[whisker_r(c, &unit, a)?, c.lunit(a)?, invert(c, &c.runit(a)?)?])?;
        phi.insert((s, t), cell);
    }
    Ok(GOne::<C> { src: x.clone(), tgt: x.clone(), comps, phi })
}

/// `g ∘ f`: components `g_S * f_S`, fillers `φ` pasted above `γ` after
/// splitting `(g_S * f_S) ⊞ (g_T * f_T)` with `⊞²`.
pub fn compose_one_cells<C: StrictSmb>(c: &C, g: &GOne<C>, f: &GOne<C>) -> Result<GOne<C>> {
    if f.tgt != g.src {
        return Err(CatError::NotComposable("Γ-1-cells with mismatched endpoints".into()));
    }
    let comps = g.comps.iter().zip(&f.comps).map(|(y, x)| c.comp1(y, x)).collect::<Result<Vec<_>>>()?;
    let mut phi = std::collections::BTreeMap::new();
    for &(s, t) in f.phi.keys() {
        let split = invert(c, &c.sum_comp_cell(f.comp(s), f.comp(t), g.comp(s), g.comp(t))?)?;
        let stacked = paste_below(c, &phi_square(c, f, s, t)?, &phi_square(c, g, s, t)?)?;
        phi.insert((s, t), c.vcomp(&stacked, &whisker_r(c, &split, f.src.map(s, t)?)?)?);
    }
    Ok(GOne::<C> { src: f.src.clone(), tgt: g.tgt.clone(), comps, phi })
}

/// `b ∘ a`, componentwise.
pub fn vcomp_two_cells<C: StrictSmb>(c: &C, b: &GTwo<C>, a: &GTwo<C>) -> Result<GTwo<C>> {
    if a.tgt != b.src {
        return Err(CatError::NotComposable("Γ-2-cells with mismatched boundaries".into()));
    }
    let comps = b.comps.iter().zip(&a.comps).map(|(y, x)| c.vcomp(y, x)).collect::<Result<Vec<_>>>()?;
    Ok(GTwo::<C> { src: a.src.clone(), tgt: b.tgt.clone(), comps })
}
