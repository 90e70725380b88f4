//! Pseudofunctors, pseudonatural transformations and their coherence checks.

use super::validate::{run_law, Cells};
use super::{invert, vcomp_seq, whisker_l, whisker_r, Bicategory};
use crate::error::Result;
use crate::report::CheckReport;
use crate::sampling::Budget;
use std::marker::PhantomData;

pub trait Pseudofunctor<C: Bicategory, D: Bicategory> {
    fn on_obj(&self, a: &C::Obj) -> Result<D::Obj>;
    fn on_one(&self, f: &C::One) -> Result<D::One>;
    fn on_two(&self, a: &C::Two) -> Result<D::Two>;
    /// `F²_{f,g}: Fg * Ff ⇒ F(g * f)`.
    fn comp_cell(&self, f: &C::One, g: &C::One) -> Result<D::Two>;
    /// `F⁰_A: I_{FA} ⇒ F(I_A)`.
    fn unit_cell(&self, a: &C::Obj) -> Result<D::Two>;
}

/// A transformation `η: F ⇒ G` between pseudofunctors `C -> D`.
pub trait Transformation<C: Bicategory, D: Bicategory> {
    /// `η_A: FA -> GA`.
    fn component(&self, a: &C::Obj) -> Result<D::One>;
    /// `η²_f: Gf * η_A ⇒ η_B * Ff`.
    fn naturality(&self, f: &C::One) -> Result<D::Two>;
}

pub struct IdentityPseudofunctor<'a, B>(pub &'a B);

impl<B: Bicategory> Pseudofunctor<B, B> for IdentityPseudofunctor<'_, B> {
    fn on_obj(&self, a: &B::Obj) -> Result<B::Obj> {
        Ok(a.clone())
    }
    fn on_one(&self, f: &B::One) -> Result<B::One> {
        Ok(f.clone())
    }
    fn on_two(&self, a: &B::Two) -> Result<B::Two> {
        Ok(a.clone())
    }
    fn comp_cell(&self, f: &B::One, g: &B::One) -> Result<B::Two> {
        Ok(self.0.id2(&self.0.comp1(g, f)?))
    }
    fn unit_cell(&self, a: &B::Obj) -> Result<B::Two> {
        Ok(self.0.id2(&self.0.id1(a)))
    }
}

/// `G ∘ F` with `(GF)²_{f,g} = G(F²_{f,g}) ∘ G²_{Ff,Fg}` and
/// `(GF)⁰_A = G(F⁰_A) ∘ G⁰_{FA}`.
pub struct ComposedPseudofunctor<'a, D, E, F, G> {
    pub first: &'a F,
    pub second: &'a G,
    pub target: &'a E,
    _mid: PhantomData<D>,
}

impl<'a, D, E, F, G> ComposedPseudofunctor<'a, D, E, F, G> {
    pub fn new(first: &'a F, second: &'a G, target: &'a E) -> Self {
        ComposedPseudofunctor { first, second, target, _mid: PhantomData }
    }
}

impl<C, D, E, F, G> Pseudofunctor<C, E> for ComposedPseudofunctor<'_, D, E, F, G>
where
    C: Bicategory,
    D: Bicategory,
    E: Bicategory,
    F: Pseudofunctor<C, D>,
    G: Pseudofunctor<D, E>,
{
    fn on_obj(&self, a: &C::Obj) -> Result<E::Obj> {
        self.second.on_obj(&self.first.on_obj(a)?)
    }
    fn on_one(&self, f: &C::One) -> Result<E::One> {
        self.second.on_one(&self.first.on_one(f)?)
    }
    fn on_two(&self, a: &C::Two) -> Result<E::Two> {
        self.second.on_two(&self.first.on_two(a)?)
    }
    fn comp_cell(&self, f: &C::One, g: &C::One) -> Result<E::Two> {
        let inner = self.second.comp_cell(&self.first.on_one(f)?, &self.first.on_one(g)?)?;
        let outer = self.second.on_two(&self.first.comp_cell(f, g)?)?;
        self.target.vcomp(&outer, &inner)
    }
    fn unit_cell(&self, a: &C::Obj) -> Result<E::Two> {
        let inner = self.second.unit_cell(&self.first.on_obj(a)?)?;
        let outer = self.second.on_two(&self.first.unit_cell(a)?)?;
        self.target.vcomp(&outer, &inner)
    }
}

/// `id_F` with components `I_{FA}` and `η²_f = l⁻¹ ∘ r: Ff * I ⇒ I * Ff`.
pub struct IdentityTransformation<'a, D, F> {
    pub target: &'a D,
    pub functor: &'a F,
}

impl<C, D, F> Transformation<C, D> for IdentityTransformation<'_, D, F>
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
{
    fn component(&self, a: &C::Obj) -> Result<D::One> {
        Ok(self.target.id1(&self.functor.on_obj(a)?))
    }
    fn naturality(&self, f: &C::One) -> Result<D::Two> {
        let ff = self.functor.on_one(f)?;
        let d = self.target;
        d.vcomp(&invert(d, &d.lunit(&ff)?)?, &d.runit(&ff)?)
    }
}

/// Checks typing, local functoriality, naturality and invertibility of F²,
/// invertibility of F⁰, the associativity hexagon and both unit axioms.
pub fn validate_pseudofunctor<C, D, F>(c: &C, d: &D, f: &F, budget: &Budget) -> CheckReport
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
{
    let started = std::time::Instant::now();
    let mut report = CheckReport::new("pseudofunctor");
    let cells = Cells::new(c);
    let s1 = cells.one_space(1);
    let s2 = cells.one_space(2);
    let s3 = cells.one_space(3);
    let t1 = cells.two_space(1);
    let t2 = cells.two_space(2);

    run_law(&mut report, "typing", "F maps cells to cells with the mapped boundary", t1.total(), budget, |i| {
        let a = &cells.two_chain(&t1, i)[0];
        let (fa, src, tgt) = (f.on_two(a)?, f.on_one(&c.two_src(a))?, f.on_one(&c.two_tgt(a))?);
        let x = c.one_src(&c.two_src(a));
        let y = c.one_tgt(&c.two_src(a));
        let ok = d.two_src(&fa) == src
            && d.two_tgt(&fa) == tgt
            && d.one_src(&src) == f.on_obj(&x)?
            && d.one_tgt(&src) == f.on_obj(&y)?;
        Ok((!ok).then(|| format!("a={a:?} Fa={fa:?}")))
    });
    run_law(&mut report, "local-identities", "F(id_f) = id_Ff", s1.total(), budget, |i| {
        let g = &cells.one_chain(&s1, i)[0];
        Ok((f.on_two(&c.id2(g))? != d.id2(&f.on_one(g)?)).then(|| format!("f={g:?}")))
    });
    run_law(&mut report, "local-composition", "F(b ∘ a) = Fb ∘ Fa", t1.total(), budget, |i| {
        let a = cells.two_chain(&t1, i).remove(0);
        let Some(b) = super::validate::pick(&c.two_cells_from(&c.two_tgt(&a)), i, 5) else { return Ok(None) };
        let lhs = f.on_two(&c.vcomp(&b, &a)?)?;
        let rhs = d.vcomp(&f.on_two(&b)?, &f.on_two(&a)?)?;
        Ok((lhs != rhs).then(|| format!("a={a:?} b={b:?}")))
    });
    run_law(&mut report, "comp-cell-invertible", "F²_(f,g): Fg*Ff ⇒ F(g*f) invertible", s2.total(), budget, |i| {
        let w = cells.one_chain(&s2, i);
        let cell = f.comp_cell(&w[0], &w[1])?;
        let src = d.comp1(&f.on_one(&w[1])?, &f.on_one(&w[0])?)?;
        let tgt = f.on_one(&c.comp1(&w[1], &w[0])?)?;
        let ok = d.two_src(&cell) == src && d.two_tgt(&cell) == tgt && d.inverse2(&cell).is_some();
        Ok((!ok).then(|| format!("f={:?} g={:?} F²={cell:?}", w[0], w[1])))
    });
    run_law(
        &mut report,
        "unit-cell-invertible",
        "F⁰_A: I_FA ⇒ F(I_A) invertible",
        cells.object_count(),
        budget,
        |i| {
            let a = &cells.objs[i as usize];
            let cell = f.unit_cell(a)?;
            let ok = d.two_src(&cell) == d.id1(&f.on_obj(a)?)
                && d.two_tgt(&cell) == f.on_one(&c.id1(a))?
                && d.inverse2(&cell).is_some();
            Ok((!ok).then(|| format!("A={a:?} F⁰={cell:?}")))
        },
    );
    run_law(&mut report, "comp-cell-naturality", "F(b*a) ∘ F² = F² ∘ (Fb*Fa)", t2.total(), budget, |i| {
        let w = cells.two_chain(&t2, i);
        let (a, b) = (&w[0], &w[1]);
        let lhs = d.vcomp(&f.on_two(&c.hcomp(b, a)?)?, &f.comp_cell(&c.two_src(a), &c.two_src(b))?)?;
        let rhs = d.vcomp(&f.comp_cell(&c.two_tgt(a), &c.two_tgt(b))?, &d.hcomp(&f.on_two(b)?, &f.on_two(a)?)?)?;
        Ok((lhs != rhs).then(|| format!("a={a:?} b={b:?}")))
    });
    run_law(
        &mut report,
        "associativity",
        "F(α) ∘ F² ∘ (Fh*F²) = F² ∘ (F²*Ff) ∘ α",
        s3.total(),
        budget,
        |i| {
            let w = cells.one_chain(&s3, i);
            let (x, g, h) = (&w[0], &w[1], &w[2]);
            let (fx, fg, fh) = (f.on_one(x)?, f.on_one(g)?, f.on_one(h)?);
            let gx = c.comp1(g, x)?;
            let hg = c.comp1(h, g)?;
            let lhs = vcomp_seq(
                d,
                &[whisker_l(d, &fh, &f.comp_cell(x, g)?)?, f.comp_cell(&gx, h)?, f.on_two(&c.assoc(h, g, x)?)?],
            )?;
            let rhs = vcomp_seq(
                d,
                &[d.assoc(&fh, &fg, &fx)?, whisker_r(d, &f.comp_cell(g, h)?, &fx)?, f.comp_cell(x, &hg)?],
            )?;
            Ok((lhs != rhs).then(|| format!("h={h:?} g={g:?} f={x:?}")))
        },
    );
    run_law(&mut report, "left-unit", "F(l_f) ∘ F²_(f,I) ∘ (F⁰*Ff) = l_Ff", s1.total(), budget, |i| {
        let x = &cells.one_chain(&s1, i)[0];
        let fx = f.on_one(x)?;
        let b = c.one_tgt(x);
        let lhs = vcomp_seq(
            d,
            &[whisker_r(d, &f.unit_cell(&b)?, &fx)?, f.comp_cell(x, &c.id1(&b))?, f.on_two(&c.lunit(x)?)?],
        )?;
        Ok((lhs != d.lunit(&fx)?).then(|| format!("f={x:?}")))
    });
    run_law(&mut report, "right-unit", "F(r_f) ∘ F²_(I,f) ∘ (Ff*F⁰) = r_Ff", s1.total(), budget, |i| {
        let x = &cells.one_chain(&s1, i)[0];
        let fx = f.on_one(x)?;
        let a = c.one_src(x);
        let lhs = vcomp_seq(
            d,
            &[whisker_l(d, &fx, &f.unit_cell(&a)?)?, f.comp_cell(&c.id1(&a), x)?, f.on_two(&c.runit(x)?)?],
        )?;
        Ok((lhs != d.runit(&fx)?).then(|| format!("f={x:?}")))
    });
    report.wall_time = started.elapsed();
    report
}

/// Checks typing and invertibility of η², its naturality, and the
/// composition and unit axioms of a transformation `η: F ⇒ G`.
pub fn validate_transformation<C, D, F, G, T>(c: &C, d: &D, f: &F, g: &G, eta: &T, budget: &Budget) -> CheckReport
where
    C: Bicategory,
    D: Bicategory,
    F: Pseudofunctor<C, D>,
    G: Pseudofunctor<C, D>,
    T: Transformation<C, D>,
{
    let started = std::time::Instant::now();
    let mut report = CheckReport::new("transformation");
    let cells = Cells::new(c);
    let s1 = cells.one_space(1);
    let s2 = cells.one_space(2);
    let t1 = cells.two_space(1);

    run_law(&mut report, "component-typing", "η_A: FA -> GA", cells.object_count(), budget, |i| {
        let a = &cells.objs[i as usize];
        let e = eta.component(a)?;
        let ok = d.one_src(&e) == f.on_obj(a)? && d.one_tgt(&e) == g.on_obj(a)?;
        Ok((!ok).then(|| format!("A={a:?} η_A={e:?}")))
    });
    run_law(&mut report, "naturality-invertible", "η²_f: Gf*η_A ⇒ η_B*Ff invertible", s1.total(), budget, |i| {
        let x = &cells.one_chain(&s1, i)[0];
        let (a, b) = (c.one_src(x), c.one_tgt(x));
        let cell = eta.naturality(x)?;
        let src = d.comp1(&g.on_one(x)?, &eta.component(&a)?)?;
        let tgt = d.comp1(&eta.component(&b)?, &f.on_one(x)?)?;
        let ok = d.two_src(&cell) == src && d.two_tgt(&cell) == tgt && d.inverse2(&cell).is_some();
        Ok((!ok).then(|| format!("f={x:?} η²={cell:?}")))
    });
    run_law(&mut report, "naturality-in-f", "(η_B*Fa) ∘ η²_f = η²_f' ∘ (Ga*η_A)", t1.total(), budget, |i| {
        let a = &cells.two_chain(&t1, i)[0];
        let (x, x2) = (c.two_src(a), c.two_tgt(a));
        let (ea, eb) = (eta.component(&c.one_src(&x))?, eta.component(&c.one_tgt(&x))?);
        let lhs = d.vcomp(&whisker_l(d, &eb, &f.on_two(a)?)?, &eta.naturality(&x)?)?;
        let rhs = d.vcomp(&eta.naturality(&x2)?, &whisker_r(d, &g.on_two(a)?, &ea)?)?;
        Ok((lhs != rhs).then(|| format!("a={a:?}")))
    });
    run_law(
        &mut report,
        "composition-axiom",
        "η²_(g*f) ∘ (G²*η) = (η*F²) ∘ α⁻¹ ∘ (η²_g*Ff) ∘ α ∘ (Gg*η²_f) ∘ α⁻¹",
        s2.total(),
        budget,
        |i| {
            let w = cells.one_chain(&s2, i);
            let (x, y) = (&w[0], &w[1]);
            let (a, b, cc) = (c.one_src(x), c.one_tgt(x), c.one_tgt(y));
            let (ea, eb, ec) = (eta.component(&a)?, eta.component(&b)?, eta.component(&cc)?);
            let (fx, fy, gx, gy) = (f.on_one(x)?, f.on_one(y)?, g.on_one(x)?, g.on_one(y)?);
            let lhs = d.vcomp(&eta.naturality(&c.comp1(y, x)?)?, &whisker_r(d, &g.comp_cell(x, y)?, &ea)?)?;
            let rhs = vcomp_seq(
                d,
                &[
                    invert(d, &d.assoc(&gy, &gx, &ea)?)?,
                    whisker_l(d, &gy, &eta.naturality(x)?)?,
                    d.assoc(&gy, &eb, &fx)?,
                    whisker_r(d, &eta.naturality(y)?, &fx)?,
                    invert(d, &d.assoc(&ec, &fy, &fx)?)?,
                    whisker_l(d, &ec, &f.comp_cell(x, y)?)?,
                ],
            )?;
            Ok((lhs != rhs).then(|| format!("f={x:?} g={y:?}")))
        },
    );
    run_law(
        &mut report,
        "unit-axiom",
        "η²_I ∘ (G⁰*η_A) = (η_A*F⁰) ∘ r⁻¹ ∘ l",
        cells.object_count(),
        budget,
        |i| {
            let a = &cells.objs[i as usize];
            let ea = eta.component(a)?;
            let lhs = d.vcomp(&eta.naturality(&c.id1(a))?, &whisker_r(d, &g.unit_cell(a)?, &ea)?)?;
            let rhs = vcomp_seq(d, &[d.lunit(&ea)?, invert(d, &d.runit(&ea)?)?, whisker_l(d, &ea, &f.unit_cell(a)?)?])?;
            Ok((lhs != rhs).then(|| format!("A={a:?}")))
        },
    );
    report.wall_time = started.elapsed();
    report
}
