use proptest::prelude::*;
use smbicat::bicat::{canonical_coherence, Bicategory, Suspension, TwoGroupZ2};
use smbicat::bimonoid::make_sym_sets;
use smbicat::bracket::Bracket;
use smbicat::cli::{run_suite, Suite, SuiteConfig};
use smbicat::fincat::{bracketed_composite, iso_classes, spine_composite, FinCategory, MorphismDecl, NervePath};
use smbicat::gamma::PointedMap;
use smbicat::matmod::{block_sum, build_mod, is_weakly_invertible, matmul, MatrixObj};
use smbicat::nerve::{enumerate_nerve, face, validate_simplex, NerveLimits};
use smbicat::perm::Perm;
use smbicat::sampling::Budget;
use std::collections::{BTreeMap, BTreeSet};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn three_perms() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (0..7usize).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// `n` objects, arrows `i -> j` for `i < j` labelled by `Z/k`, composing by addition.
fn labelled_chain(n: usize, k: usize) -> FinCategory {
    let name = |i: usize, j: usize, l: usize| if i == j { format!("id{i}") } else { format!("m{i}{j}_{l}") };
    let arrows: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (0..if i == j { 1 } else { k }).map(move |l| (i, j, l))))
        .collect();
    let morphisms = arrows
        .iter()
        .map(|&(i, j, l)| MorphismDecl { id: name(i, j, l), src: i.to_string(), tgt: j.to_string() })
        .collect();
    let identities = (0..n).map(|i| (i.to_string(), name(i, i, 0))).collect();
    let mut composition = Vec::new();
    for &(i, j, a) in &arrows {
        for &(_, l, b) in arrows.iter().filter(|x| x.0 == j) {
            composition.push([name(j, l, b), name(i, j, a), name(i, l, (a + b) % k)]);
        }
    }
    FinCategory::build((0..n).map(|i| i.to_string()).collect(), morphisms, identities, composition).unwrap()
}

/// One morphism between any two objects in the same block.
fn codiscrete_blocks(blocks: &[usize]) -> FinCategory {
    let n = blocks.len();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| blocks[a] == blocks[b]).collect();
    let name = |a: usize, b: usize| format!("{a}>{b}");
    let morphisms =
        pairs.iter().map(|&(a, b)| MorphismDecl { id: name(a, b), src: a.to_string(), tgt: b.to_string() }).collect();
    let identities = (0..n).map(|a| (a.to_string(), name(a, a))).collect();
    let mut composition = Vec::new();
    for &(a, b) in &pairs {
        for &(_, c) in pairs.iter().filter(|x| x.0 == b) {
            composition.push([name(b, c), name(a, b), name(a, c)]);
        }
    }
    FinCategory::build((0..n).map(|i| i.to_string()).collect(), morphisms, identities, composition).unwrap()
}

fn zero_one(n: usize) -> impl Strategy<Value = MatrixObj> {
    prop::collection::vec(0..2usize, n * n).prop_map(move |e| MatrixObj::new(n, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn permutations_form_a_group((p, q, r) in three_perms()) {
        prop_assert_eq!(p.after(&q).after(&r), p.after(&q.after(&r)));
        prop_assert!(p.after(&p.inverse()).is_identity());
        prop_assert_eq!(p.after(&Perm::identity(p.len())), p.clone());
        prop_assert_eq!(p.block_sum(&q).after(&r.block_sum(&p)), p.after(&r).block_sum(&q.after(&p)));
    }

    #[test]
    fn sym_sets_structure_maps_have_the_right_arity(a in 0..4usize, b in 0..4usize, c in 0..4usize) {
        let r = make_sym_sets(4).unwrap();
        let d = r.delta(a, b, c);
        prop_assert_eq!(d.perm.len(), a * (b + c));
        let g = r.gamma(a, b);
        prop_assert_eq!(g.perm.len(), a + b);
        prop_assert!(r.compose(&r.gamma(b, a), &g).unwrap().perm.is_identity());
    }

    #[test]
    fn coherence_cells_compose(word in prop::collection::vec(0..2u8, 1..5), picks in (0..64usize, 0..64usize, 0..64usize)) {
        let b = Suspension(TwoGroupZ2 { twisted: true });
        let all = Bracket::all(0, word.len());
        let (b1, b2, b3) = (&all[picks.0 % all.len()], &all[picks.1 % all.len()], &all[picks.2 % all.len()]);
        let direct = canonical_coherence(&b, &word, b1, b3).unwrap();
        let stepwise = b.vcomp(&canonical_coherence(&b, &word, b2, b3).unwrap(), &canonical_coherence(&b, &word, b1, b2).unwrap()).unwrap();
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn spine_composites_ignore_brackets(n in 1..6usize, k in 1..4usize, steps in prop::collection::vec((0..6usize, 0..4usize), 1..5), start in 0..6usize) {
        let c = labelled_chain(n, k);
        let mut at = start % n;
        let mut ids = Vec::new();
        let mut sum = 0;
        for (jump, label) in steps {
            let to = (at + jump % (n - at)).min(n - 1);
            let l = if to == at { 0 } else { label % k };
            ids.push(if to == at { format!("id{at}") } else { format!("m{at}{to}_{l}") });
            sum += l;
            at = to;
        }
        let path = NervePath::new(ids.clone());
        let spine = spine_composite(&c, &path).unwrap();
        let s = start % n;
        let expected = if s == at { format!("id{s}") } else { format!("m{s}{at}_{}", sum % k) };
        prop_assert_eq!(&spine, &expected);
        for br in Bracket::all(0, ids.len()) {
            prop_assert_eq!(&bracketed_composite(&c, &path, &br).unwrap(), &spine);
        }
    }

    #[test]
    fn iso_classes_recover_the_blocks(blocks in prop::collection::vec(0..3usize, 1..6)) {
        let c = codiscrete_blocks(&blocks);
        let mut expected: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
        for (a, blk) in blocks.iter().enumerate() {
            expected.entry(*blk).or_default().insert(a.to_string());
        }
        let ours: BTreeSet<BTreeSet<String>> = iso_classes(&c).into_iter().map(|cls| cls.into_iter().collect()).collect();
        let theirs: BTreeSet<BTreeSet<String>> = expected.into_values().collect();
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn weak_invertibility_is_closed(u in zero_one(2), v in zero_one(2), w in zero_one(1)) {
        let r = make_sym_sets(1).unwrap();
        let inv = |m: &MatrixObj| is_weakly_invertible(&r, m).unwrap();
        if inv(&u) && inv(&v) {
            prop_assert!(inv(&matmul(&r, &u, &v).unwrap()));
            prop_assert!(inv(&block_sum(&r, &u, &v)));
        }
        if inv(&u) && inv(&w) {
            prop_assert!(inv(&block_sum(&r, &w, &u)));
        }
    }

    #[test]
    fn block_sum_is_strictly_associative(u in zero_one(1), v in zero_one(2), w in (0..3usize).prop_flat_map(zero_one)) {
        let r = make_sym_sets(1).unwrap();
        let left = block_sum(&r, &block_sum(&r, &u, &v), &w);
        let right = block_sum(&r, &u, &block_sum(&r, &v, &w));
        prop_assert_eq!(&left, &right);
        let empty = MatrixObj::new(0, vec![]).unwrap();
        prop_assert_eq!(block_sum(&r, &empty, &v), v.clone());
        prop_assert_eq!(block_sum(&r, &v, &empty), v);
    }

    #[test]
    fn pointed_maps_compose_associatively(a in prop::collection::vec(0..3usize, 3), b in prop::collection::vec(0..3usize, 3), c in prop::collection::vec(0..3usize, 3)) {
        let mk = |v: &Vec<usize>| PointedMap::new(2, [0].into_iter().chain(v[1..].iter().copied()).collect());
        let (s, t, u) = (mk(&a).unwrap(), mk(&b).unwrap(), mk(&c).unwrap());
        prop_assert_eq!(s.then(&t).unwrap().then(&u).unwrap(), s.then(&t.then(&u).unwrap()).unwrap());
        prop_assert_eq!(s.then(&PointedMap::identity(2).unwrap()).unwrap(), s);
    }

    #[test]
    fn seeded_selection_is_reproducible(limit in 1..50u64, seed in any::<u64>(), total in 1..200u128, salt in any::<u64>()) {
        let b = Budget::new(limit, seed);
        let (picks, used) = b.select(total, salt);
        prop_assert_eq!(b.select(total, salt), (picks.clone(), used));
        prop_assert_eq!(picks.len() as u128, total.min(limit as u128));
        prop_assert!(picks.iter().all(|&i| i < total));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn enumerated_simplices_revalidate(pick in any::<prop::sample::Index>(), k in 0..4usize) {
        let b = Suspension(TwoGroupZ2 { twisted: true });
        let level = enumerate_nerve(&b, 3, &NerveLimits::default()).unwrap();
        let x = &level[pick.index(level.len())];
        prop_assert!(validate_simplex(&b, x).passed());
        prop_assert!(validate_simplex(&b, &face(k, x).unwrap()).passed());
    }

    #[test]
    fn reports_are_deterministic(seed in 0..1000u64) {
        let cfg = SuiteConfig { suite: Suite::Bimonoidal, base: make_sym_sets(1).unwrap(), maxdim: 2, n: 2, budget: Budget::new(30, seed), presented: None };
        prop_assert_eq!(run_suite(&cfg).unwrap().to_document(), run_suite(&cfg).unwrap().to_document());
    }

    #[test]
    fn mod_r_hom_sets_between_distinct_dimensions_are_empty(n in 0..3usize, m in 0..3usize) {
        let modr = build_mod(make_sym_sets(1).unwrap(), 2).unwrap();
        prop_assert_eq!(modr.one_cells(&n, &m).is_empty(), n != m);
    }
}
