//! Entrywise law checking for any [`Bicategory`] over its enumerated cells.

use super::{whisker_l, whisker_r, Bicategory};
use crate::error::Result;
use crate::report::{CheckReport, LawRecord};
use crate::sampling::{salt, Budget, ChainSpace};

/// Cached enumeration of a bicategory's objects, 1-cells and 2-cells by hom.
pub(crate) struct Cells<B: Bicategory> {
    pub objs: Vec<B::Obj>,
    pub one: Vec<Vec<Vec<B::One>>>,
    pub two: Vec<Vec<Vec<B::Two>>>,
}

impl<B: Bicategory> Cells<B> {
    pub fn new(b: &B) -> Self {
        let objs = b.objects();
        let one: Vec<Vec<Vec<B::One>>> =
            objs.iter().map(|x| objs.iter().map(|y| b.one_cells(x, y)).collect()).collect();
        let two = one
            .iter()
            .map(|row| row.iter().map(|fs| fs.iter().flat_map(|f| b.two_cells_from(f)).collect()).collect())
            .collect();
        Cells { objs, one, two }
    }

    pub fn one_space(&self, len: usize) -> ChainSpace {
        ChainSpace::new(self.objs.len(), len, |i, j| self.one[i][j].len())
    }

    pub fn two_space(&self, len: usize) -> ChainSpace {
        ChainSpace::new(self.objs.len(), len, |i, j| self.two[i][j].len())
    }

    /// A composable chain of 1-cells, first-applied first.
    pub fn one_chain(&self, space: &ChainSpace, idx: u128) -> Vec<B::One> {
        let (seq, items) = space.decode(idx);
        items.iter().enumerate().map(|(t, &k)| self.one[seq[t]][seq[t + 1]][k].clone()).collect()
    }

    pub fn two_chain(&self, space: &ChainSpace, idx: u128) -> Vec<B::Two> {
        let (seq, items) = space.decode(idx);
        items.iter().enumerate().map(|(t, &k)| self.two[seq[t]][seq[t + 1]][k].clone()).collect()
    }

    pub fn object_count(&self) -> u128 {
        self.objs.len() as u128
    }
}

/// Runs one law over `total` instances chosen by the budget. The closure
/// returns `Ok(None)` on success and `Ok(Some(witness))` on failure; an error
/// also counts as a failure.
pub(crate) fn run_law(
    report: &mut CheckReport,
    law: &str,
    anchor: &str,
    total: u128,
    budget: &Budget,
    mut check: impl FnMut(u128) -> Result<Option<String>>,
) {
    let (picks, seed) = budget.select(total, salt(law));
    let mut rec = LawRecord::new(law, anchor).sampled_with(seed);
    for idx in picks {
        rec.tick();
        match check(idx) {
            Ok(None) => {}
            Ok(Some(w)) => rec.fail(w),
            Err(e) => rec.fail(format!("instance {idx}: {e}")),
        }
    }
    report.push(rec);
}

/// Picks an element of a list deterministically from an instance index.
pub(crate) fn pick<T: Clone>(items: &[T], idx: u128, salt: u128) -> Option<T> {
    if items.is_empty() {
        return None;
    }
    let k = (idx.wrapping_mul(2_654_435_761).wrapping_add(salt)) % items.len() as u128;
    Some(items[k as usize].clone())
}

/// Checks interchange, vertical units and associativity, invertibility and
/// naturality of α, l, r, the pentagon and the triangle.
pub fn validate_bicategory<B: Bicategory>(b: &B, budget: &Budget) -> CheckReport {
    let started = std::time::Instant::now();
    let mut report = CheckReport::new("bicategory");
    let cells = Cells::new(b);
    let s1 = cells.one_space(1);
    let s2 = cells.one_space(2);
    let s3 = cells.one_space(3);
    let s4 = cells.one_space(4);
    let t1 = cells.two_space(1);
    let t2 = cells.two_space(2);
    let t3 = cells.two_space(3);

    run_law(&mut report, "vertical-units", "id ∘ a = a = a ∘ id", t1.total(), budget, |i| {
        let a = &cells.two_chain(&t1, i)[0];
        let l = b.vcomp(&b.id2(&b.two_tgt(a)), a)?;
        let r = b.vcomp(a, &b.id2(&b.two_src(a)))?;
        Ok((l != *a || r != *a).then(|| format!("{a:?}")))
    });
    run_law(&mut report, "vertical-associativity", "(c ∘ b) ∘ a = c ∘ (b ∘ a)", t1.total(), budget, |i| {
        let a = cells.two_chain(&t1, i).remove(0);
        let Some(bb) = pick(&b.two_cells_from(&b.two_tgt(&a)), i, 1) else { return Ok(None) };
        let Some(c) = pick(&b.two_cells_from(&b.two_tgt(&bb)), i, 2) else { return Ok(None) };
        let l = b.vcomp(&b.vcomp(&c, &bb)?, &a)?;
        let r = b.vcomp(&c, &b.vcomp(&bb, &a)?)?;
        Ok((l != r).then(|| format!("a={a:?} b={bb:?} c={c:?}")))
    });
    run_law(&mut report, "hcomp-identities", "id_g * id_f = id_(g*f)", s2.total(), budget, |i| {
        let w = cells.one_chain(&s2, i);
        let lhs = b.hcomp(&b.id2(&w[1]), &b.id2(&w[0]))?;
        let rhs = b.id2(&b.comp1(&w[1], &w[0])?);
        Ok((lhs != rhs).then(|| format!("g={:?} f={:?}", w[1], w[0])))
    });
    run_law(&mut report, "interchange", "(b' ∘ b) * (a' ∘ a) = (b' * a') ∘ (b * a)", t2.total(), budget, |i| {
        let w = cells.two_chain(&t2, i);
        let (a, bb) = (&w[0], &w[1]);
        let Some(a2) = pick(&b.two_cells_from(&b.two_tgt(a)), i, 3) else { return Ok(None) };
        let Some(b2) = pick(&b.two_cells_from(&b.two_tgt(bb)), i, 4) else { return Ok(None) };
        let lhs = b.hcomp(&b.vcomp(&b2, bb)?, &b.vcomp(&a2, a)?)?;
        let rhs = b.vcomp(&b.hcomp(&b2, &a2)?, &b.hcomp(bb, a)?)?;
        Ok((lhs != rhs).then(|| format!("a={a:?} a'={a2:?} b={bb:?} b'={b2:?}")))
    });
    run_law(&mut report, "assoc-invertible", "α_(h,g,f): h*(g*f) ⇒ (h*g)*f invertible", s3.total(), budget, |i| {
        let w = cells.one_chain(&s3, i);
        let (f, g, h) = (&w[0], &w[1], &w[2]);
        let a = b.assoc(h, g, f)?;
        let src = b.comp1(h, &b.comp1(g, f)?)?;
        let tgt = b.comp1(&b.comp1(h, g)?, f)?;
        if b.two_src(&a) != src || b.two_tgt(&a) != tgt {
            return Ok(Some(format!("α({h:?},{g:?},{f:?}) = {a:?} has the wrong boundary")));
        }
        Ok(b.inverse2(&a).is_none().then(|| format!("α({h:?},{g:?},{f:?}) = {a:?} has no inverse")))
    });
    for (law, left) in [("lunit-invertible", true), ("runit-invertible", false)] {
        let anchor = if left { "l_f: I*f ⇒ f invertible" } else { "r_f: f*I ⇒ f invertible" };
        run_law(&mut report, law, anchor, s1.total(), budget, |i| {
            let f = &cells.one_chain(&s1, i)[0];
            let (c, src) = if left {
                (b.lunit(f)?, b.comp1(&b.id1(&b.one_tgt(f)), f)?)
            } else {
                (b.runit(f)?, b.comp1(f, &b.id1(&b.one_src(f)))?)
            };
            if b.two_src(&c) != src || b.two_tgt(&c) != *f {
                return Ok(Some(format!("unitor {c:?} of {f:?} has the wrong boundary")));
            }
            Ok(b.inverse2(&c).is_none().then(|| format!("unitor {c:?} of {f:?} has no inverse")))
        });
    }
    run_law(&mut report, "assoc-naturality", "((c*b)*a) ∘ α = α' ∘ (c*(b*a))", t3.total(), budget, |i| {
        let w = cells.two_chain(&t3, i);
        let (a, bb, c) = (&w[0], &w[1], &w[2]);
        let (f, g, h) = (b.two_src(a), b.two_src(bb), b.two_src(c));
        let (f2, g2, h2) = (b.two_tgt(a), b.two_tgt(bb), b.two_tgt(c));
        let lhs = b.vcomp(&b.hcomp(&b.hcomp(c, bb)?, a)?, &b.assoc(&h, &g, &f)?)?;
        let rhs = b.vcomp(&b.assoc(&h2, &g2, &f2)?, &b.hcomp(c, &b.hcomp(bb, a)?)?)?;
        Ok((lhs != rhs).then(|| format!("a={a:?} b={bb:?} c={c:?}")))
    });
    for (law, left) in [("lunit-naturality", true), ("runit-naturality", false)] {
        let anchor = if left { "a ∘ l_f = l_f' ∘ (I*a)" } else { "a ∘ r_f = r_f' ∘ (a*I)" };
        run_law(&mut report, law, anchor, t1.total(), budget, |i| {
            let a = &cells.two_chain(&t1, i)[0];
            let (f, f2) = (b.two_src(a), b.two_tgt(a));
            let (lhs, rhs) = if left {
                let i_b = b.id1(&b.one_tgt(&f));
                (b.vcomp(a, &b.lunit(&f)?)?, b.vcomp(&b.lunit(&f2)?, &whisker_l(b, &i_b, a)?)?)
            } else {
                let i_a = b.id1(&b.one_src(&f));
                (b.vcomp(a, &b.runit(&f)?)?, b.vcomp(&b.runit(&f2)?, &whisker_r(b, a, &i_a)?)?)
            };
            Ok((lhs != rhs).then(|| format!("a={a:?}")))
        });
    }
    run_law(
        &mut report,
        "pentagon",
        "α_(kh,g,f) ∘ α_(k,h,gf) = (α_(k,h,g)*f) ∘ α_(k,hg,f) ∘ (k*α_(h,g,f))",
        s4.total(),
        budget,
        |i| {
            let w = cells.one_chain(&s4, i);
            Ok((!pentagon_holds(b, &w[3], &w[2], &w[1], &w[0])?)
                .then(|| format!("k={:?} h={:?} g={:?} f={:?}", w[3], w[2], w[1], w[0])))
        },
    );
    run_law(&mut report, "triangle", "(r_g*f) ∘ α_(g,I,f) = g*l_f", s2.total(), budget, |i| {
        let w = cells.one_chain(&s2, i);
        Ok((!triangle_holds(b, &w[1], &w[0])?).then(|| format!("g={:?} f={:?}", w[1], w[0])))
    });
    report.wall_time = started.elapsed();
    report
}

pub(crate) fn pentagon_holds<B: Bicategory>(b: &B, k: &B::One, h: &B::One, g: &B::One, f: &B::One) -> Result<bool> {
    let kh = b.comp1(k, h)?;
    let gf = b.comp1(g, f)?;
    let hg = b.comp1(h, g)?;
    let lhs = b.vcomp(&b.assoc(&kh, g, f)?, &b.assoc(k, h, &gf)?)?;
    let rhs = b.vcomp(
        &whisker_r(b, &b.assoc(k, h, g)?, f)?,
        &b.vcomp(&b.assoc(k, &hg, f)?, &whisker_l(b, k, &b.assoc(h, g, f)?)?)?,
    )?;
    Ok(lhs == rhs)
}

pub(crate) fn triangle_holds<B: Bicategory>(b: &B, g: &B::One, f: &B::One) -> Result<bool> {
    let i = b.id1(&b.one_tgt(f));
    let lhs = b.vcomp(&whisker_r(b, &b.runit(g)?, f)?, &b.assoc(g, &i, f)?)?;
    let rhs = whisker_l(b, g, &b.lunit(f)?)?;
    Ok(lhs == rhs)
}
