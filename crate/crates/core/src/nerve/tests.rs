use super::*;
use crate::bicat::{
    validate_pseudofunctor, DiscreteMonoid, IdentityPseudofunctor, IdentityTransformation, Interval, Pseudofunctor,
    Suspension, Transformation, TwoGroupZ2,
};
use crate::bimonoid::{make_discrete_semiring, make_sym_sets, Additive, SemiringTables};
use crate::matmod::{build_mod, GlMonoidal};
use crate::sampling::Budget;

fn sigma_p() -> Suspension<Additive> {
    Suspension(Additive(make_sym_sets(2).unwrap()))
}

fn lim() -> NerveLimits {
    NerveLimits::default()
}

#[test]
fn level_zero_is_the_object_list() {
    let s = sigma_p();
    assert_eq!(enumerate_nerve(&s, 0, &lim()).unwrap().len(), 1);
    let i = enumerate_nerve(&Interval, 0, &lim()).unwrap();
    assert_eq!(i.iter().map(|x| x.objs[0]).collect::<Vec<_>>(), vec![0, 1]);
}

#[test]
fn sigma_p_has_nine_two_simplices() {
    // oracle: pairs (a, b) with a + b <= 2, one filler per permutation of a + b
    let oracle: usize =
        (0..=2usize).flat_map(|a| (0..=2 - a).map(move |b| a + b)).map(|n| (1..=n).product::<usize>()).sum();
    assert_eq!(oracle, 9);
    let level = enumerate_nerve(&sigma_p(), 2, &lim()).unwrap();
    assert_eq!(level.len(), oracle);
    let mut counts = std::collections::BTreeMap::new();
    for x in &level {
        *counts.entry((x.edges[&(0, 1)], x.edges[&(1, 2)])).or_insert(0) += 1;
        assert_eq!(x.edges[&(0, 2)], x.edges[&(0, 1)] + x.edges[&(1, 2)]);
    }
    let mut fills: Vec<usize> = counts.values().copied().collect();
    fills.sort();
    assert_eq!(fills, vec![1, 1, 1, 2, 2, 2]);
}

#[test]
fn discrete_monoid_levels_are_powers() {
    let s = Suspension(DiscreteMonoid::cyclic(3));
    assert_eq!(level_sizes(&s, 3, &lim()).unwrap(), vec![1, 3, 9, 27]);
    for x in enumerate_nerve(&s, 2, &lim()).unwrap() {
        assert_eq!(x.edges[&(0, 2)], (x.edges[&(0, 1)] + x.edges[&(1, 2)]) % 3);
    }
}

#[test]
fn face_and_degeneracy_on_edges() {
    let level = enumerate_nerve(&Interval, 1, &lim()).unwrap();
    let up = level.iter().find(|x| x.objs == vec![0, 1]).unwrap();
    assert_eq!(face(0, up).unwrap().objs, vec![1]);
    assert_eq!(face(1, up).unwrap().objs, vec![0]);
    for x in &level {
        assert_eq!(&face(0, &degeneracy(&Interval, 0, x).unwrap()).unwrap(), x);
    }
    assert!(face(2, up).is_err());
    assert!(face(0, &face(0, up).unwrap()).is_err());
}

#[test]
fn simplicial_identities_on_sigma_p() {
    let rep = check_simplicial(&sigma_p(), 3, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    assert!(rep.record("face-face").unwrap().checked > 0);
}

#[test]
fn simplicial_identities_with_a_twisted_associator() {
    let s = Suspension(TwoGroupZ2 { twisted: true });
    let rep = check_simplicial(&s, 3, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    let sizes = level_sizes(&s, 3, &lim()).unwrap();
    // spine in Z/2^p, long edges forced, all fillers free except φ_023, which the cocycle fixes
    assert_eq!(sizes, vec![1, 2, 8, 64]);
}

#[test]
fn corrupted_filler_fails_the_cocycle() {
    let s = Suspension(TwoGroupZ2 { twisted: false });
    let mut x = enumerate_nerve(&s, 3, &lim()).unwrap().remove(0);
    let phi = x.fillers[&(0, 1, 3)];
    x.fillers.insert((0, 1, 3), (phi.0, phi.1 ^ 1));
    let rep = validate_simplex(&s, &x);
    assert!(!rep.record("cocycle").unwrap().passed());
}

#[test]
fn limits_are_enforced() {
    let s = sigma_p();
    let tight = NerveLimits { max_dim: 3, max_simplices: 4 };
    assert!(matches!(enumerate_nerve(&s, 2, &tight), Err(CatError::LimitExceeded(_))));
    assert!(matches!(enumerate_nerve(&s, 4, &lim()), Err(CatError::Domain(_))));
}

#[test]
fn icons_form_a_category() {
    let s = sigma_p();
    for p in 0..=2 {
        let level = enumerate_nerve(&s, p, &lim()).unwrap();
        let rep = check_icon_category(&s, &level).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }
    let level = enumerate_nerve(&Suspension(TwoGroupZ2 { twisted: true }), 2, &lim()).unwrap();
    let rep = check_icon_category(&Suspension(TwoGroupZ2 { twisted: true }), &level).unwrap();
    assert!(rep.passed() && rep.record("icon-associativity").unwrap().checked > 0);
}

#[test]
fn icons_need_equal_objects() {
    let level = enumerate_nerve(&Interval, 0, &lim()).unwrap();
    assert!(enumerate_icons(&Interval, &level[0], &level[1]).is_err());
}

#[test]
fn nerve_preserves_products() {
    let rep = check_products(&sigma_p(), &Interval, 2, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    let z = Suspension(TwoGroupZ2 { twisted: true });
    assert!(check_products(&z, &sigma_p(), 2, &lim()).unwrap().passed());
}

#[test]
fn bar_of_the_trivial_monoid_is_a_point() {
    let m = DiscreteMonoid::trivial();
    for p in 0..=3 {
        assert_eq!(enumerate_bar(&m, p, &lim()).unwrap().len(), 1);
    }
    assert!(bar_equals_nerve(&m, 3, &lim()).unwrap().passed());
}

#[test]
fn bar_equals_nerve_for_gl_one() {
    let r = make_discrete_semiring(SemiringTables::truncated_naturals(3)).unwrap();
    let modr = build_mod(r, 1).unwrap();
    let gl = GlMonoidal { m: &modr, n: 1 };
    let k = gl.m.gl(1).len();
    let rep = bar_equals_nerve(&gl, 3, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    assert_eq!(enumerate_bar(&gl, 3, &lim()).unwrap().len(), k.pow(3));
}

#[test]
fn bar_equals_nerve_for_permutations() {
    let rep = bar_equals_nerve(&Additive(make_sym_sets(2).unwrap()), 2, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn bar_equals_nerve_with_a_twisted_associator() {
    let rep = bar_equals_nerve(&TwoGroupZ2 { twisted: true }, 3, &lim()).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn cylinder_of_an_identity_transformation() {
    let s = sigma_p();
    let id = IdentityPseudofunctor(&s);
    let eta = IdentityTransformation { target: &s, functor: &id };
    let rep = check_cylinder(&s, &s, &id, &id, &eta, &Budget::exhaustive());
    assert!(rep.passed(), "{}", rep.summary());
}

/// `η_* = τ` on `ΣΣ_2` with `η²_f: f * τ ⇒ τ * f` the identity.
struct Conjugation;

impl Transformation<Suspension<DiscreteMonoid>, Suspension<DiscreteMonoid>> for Conjugation {
    fn component(&self, _: &()) -> Result<usize> {
        Ok(1)
    }
    fn naturality(&self, f: &usize) -> Result<usize> {
        Ok((f + 1) % 2)
    }
}

#[test]
fn cylinder_of_conjugation_by_the_transposition() {
    let s = Suspension(DiscreteMonoid::cyclic(2));
    let id = IdentityPseudofunctor(&s);
    let cyl = cylinder_pseudofunctor(&s, &s, &id, &id, &Conjugation, &Budget::exhaustive()).unwrap();
    let prod = ProductBicategory::new(&s, &Interval);
    // oracle: H(f, 0 -> 1) = f * τ = τ + f in Z/2
    for f in 0..2usize {
        assert_eq!(cyl.on_one(&(f, (0, 1))).unwrap(), (f + 1) % 2);
    }
    let h = Normalized::new(&prod, &s, &cyl);
    assert!(validate_pseudofunctor(&prod, &s, &h, &Budget::exhaustive()).passed());
    let rep = check_cylinder(&s, &s, &id, &id, &Conjugation, &Budget::exhaustive());
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn cylinder_of_the_block_swap() {
    let s = sigma_p();
    let id = IdentityPseudofunctor(&s);
    let rep = check_cylinder(&s, &s, &id, &id, &BlockShift { r: s.0 .0.clone(), k: 1 }, &Budget::exhaustive());
    assert!(rep.passed(), "{}", rep.summary());
}

/// `BlockShift` by 1 with `η²_1` replaced by an identity.
struct BrokenShift;

impl Transformation<Suspension<Additive>, Suspension<Additive>> for BrokenShift {
    fn component(&self, _: &()) -> Result<usize> {
        Ok(1)
    }
    fn naturality(&self, f: &usize) -> Result<crate::bimonoid::RMor> {
        let r = sigma_p().0 .0;
        Ok(if *f == 1 { r.id(2) } else { r.gamma(1, *f) })
    }
}

#[test]
fn corrupted_naturality_breaks_the_cylinder() {
    let s = sigma_p();
    let id = IdentityPseudofunctor(&s);
    let rep = check_cylinder(&s, &s, &id, &id, &BrokenShift, &Budget::exhaustive());
    assert!(!rep.passed());
    assert!(rep.records.iter().any(|r| r.law.starts_with("pseudofunctor/") && !r.passed()));
    assert!(cylinder_pseudofunctor(&s, &s, &id, &id, &BrokenShift, &Budget::exhaustive()).is_err());
}
