use super::*;
use crate::fincat::{FinCategory, FinCategoryDoc, MorphismDecl};
use crate::sampling::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn twisted() -> Suspension<TwoGroupZ2> {
    Suspension(TwoGroupZ2 { twisted: true })
}

/// One 1-cell `x` with 2-cells `1x` and an idempotent `e`; everything strict.
fn idempotent_doc() -> PresentedBicategoryDoc {
    let m = |id: &str| MorphismDecl { id: id.into(), src: "x".into(), tgt: "x".into() };
    let t = |a: &str, b: &str, c: &str| [a.to_string(), b.to_string(), c.to_string()];
    let table = vec![t("1x", "1x", "1x"), t("1x", "e", "e"), t("e", "1x", "e"), t("e", "e", "e")];
    PresentedBicategoryDoc {
        objects: vec!["*".into()],
        homs: vec![presented::HomDoc {
            src: "*".into(),
            tgt: "*".into(),
            category: FinCategoryDoc {
                objects: vec!["x".into()],
                morphisms: vec![m("1x"), m("e")],
                identities: [("x".to_string(), "1x".to_string())].into_iter().collect(),
                composition: table.clone(),
            },
        }],
        hcomp: presented::HcompDoc { one_cells: vec![t("x", "x", "x")], two_cells: table },
        identity: [("*".to_string(), "x".to_string())].into_iter().collect(),
        assoc: vec![["x".into(), "x".into(), "x".into(), "1x".into()]],
        lunit: [("x".to_string(), "1x".to_string())].into_iter().collect(),
        runit: [("x".to_string(), "1x".to_string())].into_iter().collect(),
    }
}

#[test]
fn locally_discrete_category_is_a_bicategory() {
    let b = PresentedBicategory::locally_discrete(&FinCategory::symmetric_group(3)).unwrap();
    let r = validate_bicategory(&b, &Budget::exhaustive());
    assert!(r.passed(), "{}", r.summary());
    assert_eq!(r.record("pentagon").unwrap().checked, 6u64.pow(4));
}

#[test]
fn twisted_two_group_is_a_bicategory() {
    let b = twisted();
    let r = validate_bicategory(&b, &Budget::exhaustive());
    assert!(r.passed(), "{}", r.summary());
    let p = PresentedBicategory::from_bicategory(&b).unwrap();
    let r = validate_bicategory(&p, &Budget::exhaustive());
    assert!(r.passed(), "{}", r.summary());
    let doc = p.to_doc();
    assert_eq!(PresentedBicategory::from_doc(&doc).unwrap().to_doc(), doc);
}

#[test]
fn unnormalized_associator_breaks_triangle() {
    struct Bad;
    impl MonoidalCategory for Bad {
        type Obj = u8;
        type Mor = (u8, u8);
        fn src(&self, m: &(u8, u8)) -> u8 {
            m.0
        }
        fn tgt(&self, m: &(u8, u8)) -> u8 {
            m.0
        }
        fn id(&self, a: &u8) -> (u8, u8) {
            (*a, 0)
        }
        fn compose(&self, g: &(u8, u8), f: &(u8, u8)) -> crate::Result<(u8, u8)> {
            TwoGroupZ2 { twisted: false }.compose(g, f)
        }
        fn inverse(&self, m: &(u8, u8)) -> Option<(u8, u8)> {
            Some(*m)
        }
        fn unit(&self) -> u8 {
            0
        }
        fn tensor(&self, a: &u8, b: &u8) -> crate::Result<u8> {
            Ok((a + b) % 2)
        }
        fn tensor_mor(&self, f: &(u8, u8), g: &(u8, u8)) -> crate::Result<(u8, u8)> {
            TwoGroupZ2 { twisted: false }.tensor_mor(f, g)
        }
        // not normalized: nonzero on a triple containing the unit
        fn associator(&self, a: &u8, b: &u8, c: &u8) -> crate::Result<(u8, u8)> {
            Ok(((a + b + c) % 2, u8::from((*a, *b, *c) == (1, 0, 1))))
        }
        fn left_unitor(&self, a: &u8) -> crate::Result<(u8, u8)> {
            Ok((*a, 0))
        }
        fn right_unitor(&self, a: &u8) -> crate::Result<(u8, u8)> {
            Ok((*a, 0))
        }
        fn objects(&self) -> Vec<u8> {
            vec![0, 1]
        }
        fn hom(&self, a: &u8, b: &u8) -> Vec<(u8, u8)> {
            TwoGroupZ2 { twisted: false }.hom(a, b)
        }
    }
    let r = validate_bicategory(&Suspension(Bad), &Budget::exhaustive());
    assert!(!r.passed());
    assert!(!r.record("triangle").unwrap().passed(), "{}", r.summary());
    assert!(r.record("assoc-invertible").unwrap().passed());
}

#[test]
fn non_invertible_associator_is_caught() {
    let b = PresentedBicategory::from_doc(&idempotent_doc()).unwrap();
    assert!(validate_bicategory(&b, &Budget::exhaustive()).passed());
    let bad = b.with_assoc("x", "x", "x", "e").unwrap();
    let r = validate_bicategory(&bad, &Budget::exhaustive());
    let rec = r.record("assoc-invertible").unwrap();
    assert!(!rec.passed());
    assert!(rec.witness.as_deref().unwrap().contains("no inverse"));
}

#[test]
fn mistyped_tables_are_malformed() {
    let mut doc = idempotent_doc();
    doc.hcomp.one_cells.clear();
    assert!(matches!(PresentedBicategory::from_doc(&doc), Err(crate::CatError::Malformed(_))));
    let mut doc = idempotent_doc();
    doc.lunit.insert("x".into(), "nope".into());
    assert!(matches!(PresentedBicategory::from_doc(&doc), Err(crate::CatError::Malformed(_))));
}

#[test]
fn coherence_of_equal_brackets_is_identity() {
    let b = twisted();
    let w = vec![1u8, 1, 0, 1];
    for br in crate::bracket::Bracket::all(0, 4) {
        let c = canonical_coherence(&b, &w, &br, &br).unwrap();
        assert_eq!(c, b.id2(&composite(&b, &w, &br).unwrap()));
    }
}

#[test]
fn coherence_of_three_letters_is_the_associator() {
    let b = twisted();
    for (f, g, h) in [(1u8, 1u8, 1u8), (0, 1, 1), (1, 0, 1)] {
        let w = vec![f, g, h];
        let c = canonical_coherence(&b, &w, &Bracket::right_normal(0, 3), &Bracket::left_normal(0, 3)).unwrap();
        assert_eq!(c, b.assoc(&h, &g, &f).unwrap());
    }
    // the twisted cocycle makes this cell non-trivial
    assert_eq!(b.assoc(&1, &1, &1).unwrap(), (1, 1));
}

#[test]
fn coherence_composes_exhaustively() {
    let b = twisted();
    for len in 1..=4usize {
        let brs = Bracket::all(0, len);
        for bits in 0..(1u32 << len) {
            let w: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
            for b1 in &brs {
                for b2 in &brs {
                    let c12 = canonical_coherence(&b, &w, b1, b2).unwrap();
                    for b3 in &brs {
                        let c13 = canonical_coherence(&b, &w, b1, b3).unwrap();
                        let c23 = canonical_coherence(&b, &w, b2, b3).unwrap();
                        assert_eq!(c13, b.vcomp(&c23, &c12).unwrap(), "{w:?} {b1:?} {b2:?} {b3:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn coherence_around_the_pentagon() {
    let b = twisted();
    for bits in 0..16u32 {
        let w: Vec<u8> = (0..4).map(|i| ((bits >> i) & 1) as u8).collect();
        let (f, g, h, k) = (w[0], w[1], w[2], w[3]);
        // both legs written out from associators
        let a = |x: u8, y: u8, z: u8| b.assoc(&x, &y, &z).unwrap();
        let top = b.vcomp(&a(b.comp1(&k, &h).unwrap(), g, f), &a(k, h, b.comp1(&g, &f).unwrap())).unwrap();
        let bottom = vcomp_seq(
            &b,
            &[
                whisker_l(&b, &k, &a(h, g, f)).unwrap(),
                a(k, b.comp1(&h, &g).unwrap(), f),
                whisker_r(&b, &a(k, h, g), &f).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(top, bottom);
        let c = canonical_coherence(&b, &w, &Bracket::right_normal(0, 4), &Bracket::left_normal(0, 4)).unwrap();
        assert_eq!(c, top);
    }
}

#[test]
fn mismatched_brackets_are_rejected() {
    let b = twisted();
    let w = vec![1u8, 0, 1];
    assert!(canonical_coherence(&b, &w, &Bracket::left_normal(0, 3), &Bracket::left_normal(0, 4)).is_err());
    assert!(canonical_coherence(&b, &[], &Bracket::Leaf(0), &Bracket::Leaf(0)).is_err());
}

#[test]
fn single_face_evaluates_to_itself() {
    let b = twisted();
    // σ: g * f ⇒ h with f = g = 1, h = 0
    let sigma = (0u8, 1u8);
    let d = PastingDiagram::new(vec![("f", 1u8), ("g", 1), ("h", 0)], &["f", "g"], &["h"]).face(Face::new(
        "σ",
        sigma,
        &["f", "g"],
        &["h"],
    ));
    let v = evaluate_pasting(&b, &d, &Bracket::left_normal(0, 2), &Bracket::Leaf(0)).unwrap();
    assert_eq!(v, sigma);
}

#[test]
fn stacked_faces_insert_the_associator() {
    let b = twisted();
    // φ: f ⇒ h * g and ψ: k * h ⇒ l, all cells nontrivial where possible
    let (f, g, h, k, l) = (0u8, 1u8, 1u8, 1u8, 0u8);
    let phi = (0u8, 1u8);
    let psi = (0u8, 1u8);
    let d = PastingDiagram::new(vec![("f", f), ("g", g), ("h", h), ("k", k), ("l", l)], &["f", "k"], &["g", "l"])
        .face(Face::new("φ", phi, &["f"], &["g", "h"]))
        .face(Face::new("ψ", psi, &["h", "k"], &["l"]));
    let got = evaluate_pasting(&b, &d, &Bracket::left_normal(0, 2), &Bracket::left_normal(0, 2)).unwrap();
    let want = vcomp_seq(
        &b,
        &[whisker_l(&b, &k, &phi).unwrap(), b.assoc(&k, &h, &g).unwrap(), whisker_r(&b, &psi, &g).unwrap()],
    )
    .unwrap();
    assert_eq!(got, want);
    assert_eq!(b.assoc(&k, &h, &g).unwrap(), (1, 1));
}

#[test]
fn untileable_diagrams_are_reported() {
    let b = twisted();
    let d = PastingDiagram::new(vec![("f", 1u8), ("g", 1), ("h", 0)], &["f", "g"], &["h"]).face(Face::new(
        "σ",
        (0u8, 0u8),
        &["g", "f"],
        &["h"],
    ));
    let e = evaluate_pasting(&b, &d, &Bracket::left_normal(0, 2), &Bracket::Leaf(0)).unwrap_err();
    assert!(matches!(e, crate::CatError::Untileable(_)), "{e:?}");
    let d: PastingDiagram<Suspension<TwoGroupZ2>> =
        PastingDiagram::new(vec![("f", 1u8), ("g", 1), ("h", 0)], &["f", "g"], &["h"]);
    assert!(matches!(d.check_tiling(), Err(crate::CatError::Untileable(_))));
}

#[test]
fn pasting_is_order_independent_on_random_diagrams() {
    let b = twisted();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut differing = 0;
    for t in 0..250 {
        let start: Vec<u8> = (0..3).map(|i| ((t >> i) & 1) as u8).collect();
        let (d, order) = generate_diagram(&b, start, 3 + t % 4, &mut rng).unwrap();
        let other = rightmost_order(&d).unwrap();
        differing += (order != other) as usize;
        let sb = Bracket::left_normal(0, d.source.len());
        let tb = Bracket::right_normal(0, d.target.len());
        let x = evaluate_pasting_in_order(&b, &d, &order, &sb, &tb).unwrap();
        let y = evaluate_pasting_in_order(&b, &d, &other, &sb, &tb).unwrap();
        assert_eq!(x, y, "diagram {t}");
        assert_eq!(x, evaluate_pasting(&b, &d, &sb, &tb).unwrap());
    }
    assert!(differing > 50, "only {differing} diagrams had two distinct orders");
}

#[test]
fn strict_pasting_is_the_spine_composite() {
    let c = FinCategory::symmetric_group(3);
    let b = PresentedBicategory::locally_discrete(&c).unwrap();
    let ids: Vec<String> = c.morphisms().iter().map(|m| m.id.clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 0..40 {
        let start: Vec<String> = (0..4).map(|i| ids[(t * 7 + i * 5) % ids.len()].clone()).collect();
        let (d, _) = generate_diagram(&b, start.clone(), 4, &mut rng).unwrap();
        let v =
            evaluate_pasting(&b, &d, &Bracket::left_normal(0, 4), &Bracket::left_normal(0, d.target.len())).unwrap();
        let spine = crate::fincat::spine_composite(&c, &crate::fincat::NervePath(start.clone())).unwrap();
        assert_eq!(v, format!("id_{spine}"));
    }
}

#[test]
fn identity_is_its_own_weak_inverse() {
    let b = twisted();
    match is_one_equivalence(&b, &0u8, 10) {
        OneEquivalence::Equivalence { inverse, unit, counit } => {
            assert_eq!(inverse, 0);
            assert_eq!((unit, counit), ((0, 0), (0, 0)));
        }
        other => panic!("{other:?}"),
    }
    assert!(is_one_equivalence(&b, &1u8, 10).is_equivalence());
}

#[test]
fn idempotent_has_no_weak_inverse() {
    let m = DiscreteMonoid::new(vec!["1".into(), "e".into()], vec![vec![0, 1], vec![1, 1]], 0).unwrap();
    let b = Suspension(m);
    assert!(matches!(is_one_equivalence(&b, &1usize, 10), OneEquivalence::NotFound { checked: 2, definitive: true }));
    assert!(matches!(is_one_equivalence(&b, &1usize, 1), OneEquivalence::NotFound { checked: 1, definitive: false }));
}

#[test]
fn identity_pseudofunctor_and_transformation_pass() {
    let b = twisted();
    let id = IdentityPseudofunctor(&b);
    let r = validate_pseudofunctor(&b, &b, &id, &Budget::exhaustive());
    assert!(r.passed(), "{}", r.summary());
    let eta = IdentityTransformation { target: &b, functor: &id };
    let r = validate_transformation(&b, &b, &id, &id, &eta, &Budget::exhaustive());
    assert!(r.passed(), "{}", r.summary());
    let comp = ComposedPseudofunctor::new(&id, &id, &b);
    assert!(validate_pseudofunctor(&b, &b, &comp, &Budget::exhaustive()).passed());
}

/// Pseudofunctor on Σ of the 2-group: identity on cells, with F² and F⁰
/// given by tables of automorphism labels.
struct Twisting<'a> {
    b: &'a Suspension<TwoGroupZ2>,
    f2: [[u8; 2]; 2],
    f0: u8,
    break_locally: bool,
}

impl Pseudofunctor<Suspension<TwoGroupZ2>, Suspension<TwoGroupZ2>> for Twisting<'_> {
    fn on_obj(&self, _: &()) -> crate::Result<()> {
        Ok(())
    }
    fn on_one(&self, f: &u8) -> crate::Result<u8> {
        Ok(*f)
    }
    fn on_two(&self, a: &(u8, u8)) -> crate::Result<(u8, u8)> {
        Ok(if self.break_locally { (a.0, 1) } else { *a })
    }
    fn comp_cell(&self, f: &u8, g: &u8) -> crate::Result<(u8, u8)> {
        Ok((self.b.comp1(g, f)?, self.f2[*f as usize][*g as usize]))
    }
    fn unit_cell(&self, _: &()) -> crate::Result<(u8, u8)> {
        Ok((0, self.f0))
    }
}

#[test]
fn strict_functor_with_broken_hom_maps_fails() {
    let b = twisted();
    let f = Twisting { b: &b, f2: [[0, 0], [0, 0]], f0: 0, break_locally: true };
    let r = validate_pseudofunctor(&b, &b, &f, &Budget::exhaustive());
    assert!(!r.record("local-composition").unwrap().passed());
    assert!(!r.record("local-identities").unwrap().passed());
}

#[test]
fn pseudofunctor_check_agrees_with_brute_force() {
    let b = twisted();
    let mut accepted = 0;
    for bits in 0..32u32 {
        let f2 = [[(bits & 1) as u8, (bits >> 1 & 1) as u8], [(bits >> 2 & 1) as u8, (bits >> 3 & 1) as u8]];
        let f0 = (bits >> 4 & 1) as u8;
        // cocycle and unit conditions written directly in ℤ/2
        let brute = (0..2usize).all(|x| {
            (0..2usize).all(|y| {
                (0..2usize).all(|z| (f2[(x + y) % 2][z] + f2[x][y]) % 2 == (f2[x][(y + z) % 2] + f2[y][z]) % 2)
            }) && f2[x][0] == f0
                && f2[0][x] == f0
        });
        let f = Twisting { b: &b, f2, f0, break_locally: false };
        let r = validate_pseudofunctor(&b, &b, &f, &Budget::exhaustive());
        assert_eq!(r.passed(), brute, "F²={f2:?} F⁰={f0}\n{}", r.summary());
        accepted += brute as usize;
    }
    assert!(accepted >= 2);
}
