//! Strict symmetric monoidal bicategories.

use super::pseudo::{validate_pseudofunctor, validate_transformation, Pseudofunctor, Transformation};
use super::validate::{run_law, Cells};
use super::{Bicategory, Power};
use crate::error::{CatError, Result};
use crate::report::CheckReport;
use crate::sampling::{Budget, ChainSpace};

pub trait StrictSmb: Bicategory {
    fn unit_obj(&self) -> Self::Obj;
    fn sum_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn sum_one(&self, f: &Self::One, g: &Self::One) -> Result<Self::One>;
    fn sum_two(&self, a: &Self::Two, b: &Self::Two) -> Result<Self::Two>;
    /// `⊞²: (g ⊞ g') * (f ⊞ f') ⇒ (g * f) ⊞ (g' * f')`.
    fn sum_comp_cell(&self, f: &Self::One, f2: &Self::One, g: &Self::One, g2: &Self::One) -> Result<Self::Two>;
    /// `⊞⁰: I_{A ⊞ B} ⇒ I_A ⊞ I_B`.
    fn sum_unit_cell(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Two>;
    /// `β_{A,B}: A ⊞ B -> B ⊞ A`.
    fn braid(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::One>;
    /// `β²_{f,g}: (g ⊞ f) * β_{A,B} ⇒ β_{A',B'} * (f ⊞ g)` for `f: A -> A'`, `g: B -> B'`.
    fn braid_cell(&self, f: &Self::One, g: &Self::One) -> Result<Self::Two>;
}

fn pair<T: Clone>(v: &[T]) -> Result<(T, T)> {
    match v {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(CatError::Domain(format!("expected a pair, got {} components", v.len()))),
    }
}

/// `⊞` as a pseudofunctor `C × C -> C`.
pub struct Tensor<'a, C>(pub &'a C);

/// `⊞ ∘ τ`: `(A, B) ↦ B ⊞ A`.
pub struct TwistedTensor<'a, C>(pub &'a C);

/// `β` as a transformation `⊞ ⇒ ⊞ ∘ τ`.
pub struct Braiding<'a, C>(pub &'a C);

impl<'a, C: StrictSmb> Pseudofunctor<Power<'a, C>, C> for Tensor<'a, C> {
    fn on_obj(&self, a: &Vec<C::Obj>) -> Result<C::Obj> {
        let (x, y) = pair(a)?;
        self.0.sum_obj(&x, &y)
    }
    fn on_one(&self, f: &Vec<C::One>) -> Result<C::One> {
        let (x, y) = pair(f)?;
        self.0.sum_one(&x, &y)
    }
    fn on_two(&self, a: &Vec<C::Two>) -> Result<C::Two> {
        let (x, y) = pair(a)?;
        self.0.sum_two(&x, &y)
    }
    fn comp_cell(&self, f: &Vec<C::One>, g: &Vec<C::One>) -> Result<C::Two> {
        let ((f1, f2), (g1, g2)) = (pair(f)?, pair(g)?);
        self.0.sum_comp_cell(&f1, &f2, &g1, &g2)
    }
    fn unit_cell(&self, a: &Vec<C::Obj>) -> Result<C::Two> {
        let (x, y) = pair(a)?;
        self.0.sum_unit_cell(&x, &y)
    }
}

impl<'a, C: StrictSmb> Pseudofunctor<Power<'a, C>, C> for TwistedTensor<'a, C> {
    fn on_obj(&self, a: &Vec<C::Obj>) -> Result<C::Obj> {
        let (x, y) = pair(a)?;
        self.0.sum_obj(&y, &x)
    }
    fn on_one(&self, f: &Vec<C::One>) -> Result<C::One> {
        let (x, y) = pair(f)?;
        self.0.sum_one(&y, &x)
    }
    fn on_two(&self, a: &Vec<C::Two>) -> Result<C::Two> {
        let (x, y) = pair(a)?;
        self.0.sum_two(&y, &x)
    }
    fn comp_cell(&self, f: &Vec<C::One>, g: &Vec<C::One>) -> Result<C::Two> {
        let ((f1, f2), (g1, g2)) = (pair(f)?, pair(g)?);
        self.0.sum_comp_cell(&f2, &f1, &g2, &g1)
    }
    fn unit_cell(&self, a: &Vec<C::Obj>) -> Result<C::Two> {
        let (x, y) = pair(a)?;
        self.0.sum_unit_cell(&y, &x)
    }
}

impl<'a, C: StrictSmb> Transformation<Power<'a, C>, C> for Braiding<'a, C> {
    fn component(&self, a: &Vec<C::Obj>) -> Result<C::One> {
        let (x, y) = pair(a)?;
        self.0.braid(&x, &y)
    }
    fn naturality(&self, f: &Vec<C::One>) -> Result<C::Two> {
        let (x, y) = pair(f)?;
        self.0.braid_cell(&x, &y)
    }
}

/// Strict associativity and unit of `⊞` on all three levels, `⊞` as a
/// pseudofunctor, `β` as a transformation, and the three braiding diagrams:
/// `(I ⊞ β_{A,C}) * (β_{A,B} ⊞ I) = β_{A,B⊞C}`,
/// `(β_{A,C} ⊞ I) * (I ⊞ β_{B,C}) = β_{A⊞B,C}` and `β_{B,A} * β_{A,B} = I`.
pub fn validate_strict_smb<C: StrictSmb>(c: &C, budget: &Budget) -> CheckReport {
    let started = std::time::Instant::now();
    let mut report = CheckReport::new("strict-smb");
    let cells = Cells::new(c);
    let n = cells.objs.len();
    let objs3 = ChainSpace::new(n, 2, |_, _| 1);
    let obj = |idx: u128| -> Vec<C::Obj> { objs3.decode(idx).0.iter().map(|&i| cells.objs[i].clone()).collect() };
    let ones: Vec<C::One> = cells.one.iter().flatten().flatten().cloned().collect();
    let twos: Vec<C::Two> = cells.two.iter().flatten().flatten().cloned().collect();
    let triple =
        |len: u128, idx: u128| [(idx / (len * len)) as usize, ((idx / len) % len) as usize, (idx % len) as usize];

    run_law(
        &mut report,
        "sum-strict-objects",
        "(A ⊞ B) ⊞ C = A ⊞ (B ⊞ C), 1 ⊞ A = A = A ⊞ 1",
        objs3.total(),
        budget,
        |i| {
            let o = obj(i);
            let u = c.unit_obj();
            let lhs = c.sum_obj(&c.sum_obj(&o[0], &o[1])?, &o[2])?;
            let rhs = c.sum_obj(&o[0], &c.sum_obj(&o[1], &o[2])?)?;
            let unit = c.sum_obj(&u, &o[0])? == o[0] && c.sum_obj(&o[0], &u)? == o[0];
            Ok((lhs != rhs || !unit).then(|| format!("{o:?}")))
        },
    );
    let l1 = ones.len() as u128;
    run_law(
        &mut report,
        "sum-strict-one-cells",
        "(f ⊞ g) ⊞ h = f ⊞ (g ⊞ h), I_1 ⊞ f = f = f ⊞ I_1",
        l1 * l1 * l1,
        budget,
        |i| {
            let [x, y, z] = triple(l1, i);
            let (f, g, h) = (&ones[x], &ones[y], &ones[z]);
            let i1 = c.id1(&c.unit_obj());
            let lhs = c.sum_one(&c.sum_one(f, g)?, h)?;
            let rhs = c.sum_one(f, &c.sum_one(g, h)?)?;
            let unit = c.sum_one(&i1, f)? == *f && c.sum_one(f, &i1)? == *f;
            Ok((lhs != rhs || !unit).then(|| format!("f={f:?} g={g:?} h={h:?}")))
        },
    );
    let l2 = twos.len() as u128;
    run_law(
        &mut report,
        "sum-strict-two-cells",
        "(a ⊞ b) ⊞ c = a ⊞ (b ⊞ c), id ⊞ a = a = a ⊞ id",
        l2 * l2 * l2,
        budget,
        |i| {
            let [x, y, z] = triple(l2, i);
            let (a, b, d) = (&twos[x], &twos[y], &twos[z]);
            let u = c.id2(&c.id1(&c.unit_obj()));
            let lhs = c.sum_two(&c.sum_two(a, b)?, d)?;
            let rhs = c.sum_two(a, &c.sum_two(b, d)?)?;
            let unit = c.sum_two(&u, a)? == *a && c.sum_two(a, &u)? == *a;
            Ok((lhs != rhs || !unit).then(|| format!("a={a:?} b={b:?} c={d:?}")))
        },
    );
    run_law(
        &mut report,
        "braid-triangle-left",
        "(I ⊞ β_(A,C)) * (β_(A,B) ⊞ I) = β_(A,B⊞C)",
        objs3.total(),
        budget,
        |i| {
            let o = obj(i);
            let lhs = c.comp1(
                &c.sum_one(&c.id1(&o[1]), &c.braid(&o[0], &o[2])?)?,
                &c.sum_one(&c.braid(&o[0], &o[1])?, &c.id1(&o[2]))?,
            )?;
            let rhs = c.braid(&o[0], &c.sum_obj(&o[1], &o[2])?)?;
            Ok((lhs != rhs).then(|| format!("{o:?}: {lhs:?} vs {rhs:?}")))
        },
    );
    run_law(
        &mut report,
        "braid-triangle-right",
        "(β_(A,C) ⊞ I) * (I ⊞ β_(B,C)) = β_(A⊞B,C)",
        objs3.total(),
        budget,
        |i| {
            let o = obj(i);
            let lhs = c.comp1(
                &c.sum_one(&c.braid(&o[0], &o[2])?, &c.id1(&o[1]))?,
                &c.sum_one(&c.id1(&o[0]), &c.braid(&o[1], &o[2])?)?,
            )?;
            let rhs = c.braid(&c.sum_obj(&o[0], &o[1])?, &o[2])?;
            Ok((lhs != rhs).then(|| format!("{o:?}: {lhs:?} vs {rhs:?}")))
        },
    );
    let pairs = (n * n) as u128;
    run_law(&mut report, "braid-self-inverse", "β_(B,A) * β_(A,B) = I_(A⊞B)", pairs, budget, |i| {
        let (a, b) = (&cells.objs[(i / n as u128) as usize], &cells.objs[(i % n as u128) as usize]);
        let lhs = c.comp1(&c.braid(b, a)?, &c.braid(a, b)?)?;
        let rhs = c.id1(&c.sum_obj(a, b)?);
        Ok((lhs != rhs).then(|| format!("A={a:?} B={b:?}")))
    });
    let sq = Power::new(c, 2);
    report.absorb(validate_pseudofunctor(&sq, c, &Tensor(c), budget));
    let mut braid = validate_transformation(&sq, c, &Tensor(c), &TwistedTensor(c), &Braiding(c), budget);
    braid.suite = "braiding".into();
    report.absorb(braid);
    report.wall_time = started.elapsed();
    report
}
