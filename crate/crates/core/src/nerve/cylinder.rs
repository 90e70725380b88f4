//! The cylinder `H: C × 𝟏 -> D` of a transformation `η: F ⇒ G`, and the
//! normalization of pseudofunctors.

use crate::bicat::{
    invert, validate_pseudofunctor, validate_transformation, vcomp_seq, whisker_l, whisker_r, Bicategory, Interval,
    ProductBicategory, Pseudofunctor, Suspension, Transformation,
};
use crate::bimonoid::{Additive, RMor, StrictBimonoidal};
use crate::error::{CatError, Result};
use crate::report::{CheckReport, LawRecord};
use crate::sampling::Budget;
use std::marker::PhantomData;

/// `H(A, 0) = FA`, `H(A, 1) = GA`, `H(f, 0 -> 1) = Gf * η_A`.
pub struct Cylinder<'a, C, D, F, G, T> {
    pub c: &'a C,
    pub d: &'a D,
    pub f: &'a F,
    pub g: &'a G,
    pub eta: &'a T,
}

impl<'a, C, D, F, G, T> Cylinder<'a, C, D, F, G, T> {
    /// No check on `η`; see [`cylinder_pseudofunctor`].
    pub fn new(c: &'a C, d: &'a D, f: &'a F, g: &'a G, eta: &'a T) -> Self {
        Cylinder { c, d, f, g, eta }
    }
}

/// The cylinder of a transformation that passes `validate_transformation`.
pub fn cylinder_pseudofunctor<'a, C, D, F, G, T>(
    c: &'a C,
    d: &'a D,
    f: &'a F,
    g: &'a G,
    eta: &'a T,
    budget: &Budget,
) -> Result<Cylinder<'a, C, D, F, G, T>>
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
    G: Pseudofunctor<C, D>,
    T: Transformation<C, D>,
{
    let rep = validate_transformation(c, d, f, g, eta, budget);
    if let Some(bad) = rep.first_failure() {
        return Err(CatError::Domain(format!("invalid transformation: {} {:?}", bad.law, bad.witness)));
    }
    Ok(Cylinder::new(c, d, f, g, eta))
}

fn bad_arrow<X>(e: (u8, u8)) -> Result<X> {
    Err(CatError::Domain(format!("{e:?} is not an arrow of the interval")))
}

impl<'p, C, D, F, G, T> Pseudofunctor<ProductBicategory<'p, C, Interval>, D> for Cylinder<'_, C, D, F, G, T>
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
    G: Pseudofunctor<C, D>,
    T: Transformation<C, D>,
{
    fn on_obj(&self, a: &(C::Obj, u8)) -> Result<D::Obj> {
        match a.1 {
            0 => self.f.on_obj(&a.0),
            _ => self.g.on_obj(&a.0),
        }
    }

    fn on_one(&self, x: &(C::One, (u8, u8))) -> Result<D::One> {
        let (f, e) = x;
        match *e {
            (0, 0) => self.f.on_one(f),
            (1, 1) => self.g.on_one(f),
            (0, 1) => self.d.comp1(&self.g.on_one(f)?, &self.eta.component(&self.c.one_src(f))?),
            e => bad_arrow(e),
        }
    }

    fn on_two(&self, x: &(C::Two, (u8, u8))) -> Result<D::Two> {
        let (a, e) = x;
        match *e {
            (0, 0) => self.f.on_two(a),
            (1, 1) => self.g.on_two(a),
            (0, 1) => {
                let ea = self.eta.component(&self.c.one_src(&self.c.two_src(a)))?;
                whisker_r(self.d, &self.g.on_two(a)?, &ea)
            }
            e => bad_arrow(e),
        }
    }

    fn comp_cell(&self, x: &(C::One, (u8, u8)), y: &(C::One, (u8, u8))) -> Result<D::Two> {
        let (d, (f, e1), (g, e2)) = (self.d, x, y);
        let ea = || self.eta.component(&self.c.one_src(f));
        match (*e1, *e2) {
            ((0, 0), (0, 0)) => self.f.comp_cell(f, g),
            ((1, 1), (1, 1)) => self.g.comp_cell(f, g),
            ((0, 0), (0, 1)) => {
                // (Gg*η_B)*Ff ⇒ Gg*(η_B*Ff) ⇒ Gg*(Gf*η_A) ⇒ (Gg*Gf)*η_A ⇒ G(g*f)*η_A
                let (ff, gf, gg) = (self.f.on_one(f)?, self.g.on_one(f)?, self.g.on_one(g)?);
                let (ea, eb) = (ea()?, self.eta.component(&self.c.one_src(g))?);
                vcomp_seq(
                    d,
                    &[
                        invert(d, &d.assoc(&gg, &eb, &ff)?)?,
                        whisker_l(d, &gg, &invert(d, &self.eta.naturality(f)?)?)?,
                        d.assoc(&gg, &gf, &ea)?,
                        whisker_r(d, &self.g.comp_cell(f, g)?, &ea)?,
                    ],
                )
            }
            ((0, 1), (1, 1)) => {
                let (gf, gg, ea) = (self.g.on_one(f)?, self.g.on_one(g)?, ea()?);
                vcomp_seq(d, &[d.assoc(&gg, &gf, &ea)?, whisker_r(d, &self.g.comp_cell(f, g)?, &ea)?])
            }
            (a, b) => Err(CatError::NotComposable(format!("{b:?} after {a:?}"))),
        }
    }

    fn unit_cell(&self, a: &(C::Obj, u8)) -> Result<D::Two> {
        match a.1 {
            0 => self.f.unit_cell(&a.0),
            _ => self.g.unit_cell(&a.0),
        }
    }
}

/// `Ĥ`: identities go to identities, `H⁰` is absorbed into the neighbouring
/// cells. With `c_f = H⁰` for identity `f` and `id` otherwise,
/// `Ĥ(a) = c⁻¹ ∘ H(a) ∘ c` and `Ĥ²_{f,g} = c⁻¹_{g*f} ∘ H²_{f,g} ∘ (c_g * c_f)`.
pub struct Normalized<'a, C, D, H> {
    pub c: &'a C,
    pub d: &'a D,
    pub h: &'a H,
}

impl<'a, C, D, H> Normalized<'a, C, D, H> {
    pub fn new(c: &'a C, d: &'a D, h: &'a H) -> Self {
        Normalized { c, d, h }
    }
}

impl<C: Bicategory, D: Bicategory, H: Pseudofunctor<C, D>> Normalized<'_, C, D, H> {
    fn is_identity(&self, f: &C::One) -> bool {
        *f == self.c.id1(&self.c.one_src(f))
    }

    /// `c_f: Ĥf ⇒ Hf`.
    fn correction(&self, f: &C::One) -> Result<D::Two> {
        if self.is_identity(f) {
            self.h.unit_cell(&self.c.one_src(f))
        } else {
            Ok(self.d.id2(&self.h.on_one(f)?))
        }
    }
}

impl<C: Bicategory, D: Bicategory, H: Pseudofunctor<C, D>> Pseudofunctor<C, D> for Normalized<'_, C, D, H> {
    fn on_obj(&self, a: &C::Obj) -> Result<D::Obj> {
        self.h.on_obj(a)
    }

    fn on_one(&self, f: &C::One) -> Result<D::One> {
        if self.is_identity(f) {
            Ok(self.d.id1(&self.h.on_obj(&self.c.one_src(f))?))
        } else {
            self.h.on_one(f)
        }
    }

    fn on_two(&self, a: &C::Two) -> Result<D::Two> {
        let (f, g) = (self.c.two_src(a), self.c.two_tgt(a));
        vcomp_seq(self.d, &[self.correction(&f)?, self.h.on_two(a)?, invert(self.d, &self.correction(&g)?)?])
    }

    fn comp_cell(&self, f: &C::One, g: &C::One) -> Result<D::Two> {
        let gf = self.c.comp1(g, f)?;
        vcomp_seq(
            self.d,
            &[
                self.d.hcomp(&self.correction(g)?, &self.correction(f)?)?,
                self.h.comp_cell(f, g)?,
                invert(self.d, &self.correction(&gf)?)?,
            ],
        )
    }

    fn unit_cell(&self, a: &C::Obj) -> Result<D::Two> {
        Ok(self.d.id2(&self.d.id1(&self.h.on_obj(a)?)))
    }
}

/// `H` restricted to `C × {end}`.
pub struct EndRestriction<'a, C, H> {
    pub h: &'a H,
    pub end: u8,
    _c: PhantomData<C>,
}

impl<'a, C, H> EndRestriction<'a, C, H> {
    pub fn new(h: &'a H, end: u8) -> Self {
        EndRestriction { h, end, _c: PhantomData }
    }
}

impl<'p, C, D, H> Pseudofunctor<C, D> for EndRestriction<'_, C, H>
where
    C: Bicategory + 'p,
    D: Bicategory,
    H: Pseudofunctor<ProductBicategory<'p, C, Interval>, D>,
{
    fn on_obj(&self, a: &C::Obj) -> Result<D::Obj> {
        self.h.on_obj(&(a.clone(), self.end))
    }
    fn on_one(&self, f: &C::One) -> Result<D::One> {
        self.h.on_one(&(f.clone(), (self.end, self.end)))
    }
    fn on_two(&self, a: &C::Two) -> Result<D::Two> {
        self.h.on_two(&(a.clone(), (self.end, self.end)))
    }
    fn comp_cell(&self, f: &C::One, g: &C::One) -> Result<D::Two> {
        let e = (self.end, self.end);
        self.h.comp_cell(&(f.clone(), e), &(g.clone(), e))
    }
    fn unit_cell(&self, a: &C::Obj) -> Result<D::Two> {
        self.h.unit_cell(&(a.clone(), self.end))
    }
}

/// Compares two pseudofunctors `C -> D` on every enumerated cell.
fn agree<C, D, P, Q>(c: &C, law: &str, anchor: &str, p: &P, q: &Q) -> LawRecord
where
    C: Bicategory,
    D: Bicategory,
    P: Pseudofunctor<C, D>,
    Q: Pseudofunctor<C, D>,
{
    let mut rec = LawRecord::new(law, anchor);
    let objs = c.objects();
    for a in &objs {
        rec.expect(same(p.on_obj(a), q.on_obj(a)), || format!("object {a:?}"));
        rec.expect(same(p.unit_cell(a), q.unit_cell(a)), || format!("unit cell at {a:?}"));
        for b in &objs {
            for f in c.one_cells(a, b) {
                rec.expect(same(p.on_one(&f), q.on_one(&f)), || format!("1-cell {f:?}"));
                for g in c.one_cells(a, b) {
                    for x in c.two_cells(&f, &g) {
                        rec.expect(same(p.on_two(&x), q.on_two(&x)), || format!("2-cell {x:?}"));
                    }
                }
                for e in &objs {
                    for g in c.one_cells(b, e) {
                        rec.expect(same(p.comp_cell(&f, &g), q.comp_cell(&f, &g)), || {
                            format!("comp cell {f:?}, {g:?}")
                        });
                    }
                }
            }
        }
    }
    rec
}

fn same<X: PartialEq>(a: Result<X>, b: Result<X>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x == y)
}

/// Validates the normalized cylinder `Ĥ: C × 𝟏 -> D` and checks that its
/// restrictions to the two ends are the normalizations of `F` and `G`.
pub fn check_cylinder<C, D, F, G, T>(c: &C, d: &D, f: &F, g: &G, eta: &T, budget: &Budget) -> CheckReport
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
    G: Pseudofunctor<C, D>,
    T: Transformation<C, D>,
{
    let started = std::time::Instant::now();
    let prod = ProductBicategory::new(c, &Interval);
    let cyl = Cylinder::new(c, d, f, g, eta);
    let h = Normalized::new(&prod, d, &cyl);
    let mut report = CheckReport::new("cylinder");
    report.absorb(validate_pseudofunctor(&prod, d, &h, budget));
    let (nf, ng) = (Normalized::new(c, d, f), Normalized::new(c, d, g));
    report.push(agree(c, "restricts-to-F", "Ĥ on C × {0} is F normalized", &EndRestriction::new(&h, 0), &nf));
    report.push(agree(c, "restricts-to-G", "Ĥ on C × {1} is G normalized", &EndRestriction::new(&h, 1), &ng));
    report.wall_time = started.elapsed();
    report
}

/// `η: Id ⇒ Id` on `ΣP` with component `k` and `η²_f: k + f -> f + k` the
/// block swap.
#[derive(Debug, Clone)]
pub struct BlockShift {
    pub r: StrictBimonoidal,
    pub k: usize,
}

impl Transformation<Suspension<Additive>, Suspension<Additive>> for BlockShift {
    fn component(&self, _: &()) -> Result<usize> {
        Ok(self.k)
    }
    fn naturality(&self, f: &usize) -> Result<RMor> {
        Ok(self.r.gamma(self.k, *f))
    }
}
