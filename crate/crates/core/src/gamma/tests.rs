use super::*;
use crate::bicat::{whisker_l, whisker_r, Bicategory};
use crate::bimonoid::make_sym_sets;
use crate::matmod::{beta, build_mod, identity_matrix, MatrixObj, ModR};
use crate::sampling::Budget;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn modr() -> ModR {
    build_mod(make_sym_sets(1).unwrap(), 2).unwrap()
}

fn mat(rows: &[&[usize]]) -> MatrixObj {
    MatrixObj::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn subset_counts() {
    for n in 0..=4 {
        assert_eq!(disjoint_pairs(n).len(), 3usize.pow(n as u32));
        assert_eq!(disjoint_triples(n).len(), 4usize.pow(n as u32));
    }
    assert_eq!(members(0b101), vec![1, 3]);
}

#[test]
fn pointed_maps() {
    assert_eq!(PointedMap::all(2, 2).unwrap().len(), 9);
    assert_eq!(PointedMap::all(3, 1).unwrap().len(), 8);
    assert!(PointedMap::new(2, vec![1, 0, 2]).is_err());
    assert!(PointedMap::new(1, vec![0, 2]).is_err());
    let swap = PointedMap::new(2, vec![0, 2, 1]).unwrap();
    assert_eq!(swap.then(&swap).unwrap(), PointedMap::identity(2).unwrap());
    assert_eq!(swap.preimage(0b01), 0b10);
    let fold = PointedMap::new(1, vec![0, 1, 1]).unwrap();
    assert_eq!(fold.preimage(0b1), 0b11);
    assert_eq!(PointedMap::select(3, 2).unwrap().preimage(1), 0b010);
}

#[test]
fn one_index_object_is_valid() {
    let m = modr();
    let x = build_i_object(&m, &[2]).unwrap();
    assert_eq!(x.objs, vec![0, 2]);
    assert!(x.maps.values().all(|a| *a == identity_matrix(m.base(), m.one_src(a))));
    assert!(validate_gamma_object(&m, &x, 64).passed());
}

#[test]
fn two_index_merge_maps() {
    let m = modr();
    let x = build_i_object(&m, &[1, 2]).unwrap();
    assert_eq!(x.objs, vec![0, 1, 2, 3]);
    assert_eq!(*x.map(0b01, 0b10).unwrap(), identity_matrix(m.base(), 3));
    assert_eq!(*x.map(0b10, 0b01).unwrap(), beta(m.base(), 1, 2));
    let rep = validate_gamma_object(&m, &x, 64);
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn three_index_merge_is_the_block_permutation() {
    // e_{{3},{1,2}} moves the third block to the front
    let m = build_mod(make_sym_sets(1).unwrap(), 1).unwrap();
    let x = build_i_object(&m, &[1, 1, 1]).unwrap();
    let e = x.map(0b100, 0b011).unwrap();
    assert_eq!(*e, mat(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
    let rep = validate_gamma_object(&m, &x, 64);
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn shear_map_is_not_an_equivalence() {
    let m = modr();
    let shear = mat(&[&[1, 1], &[0, 1]]);
    let mut x = build_i_object(&m, &[1, 1]).unwrap();
    x.maps.insert((0b01, 0b10), shear.clone());
    x.maps.insert((0b10, 0b01), crate::matmod::matmul(m.base(), &beta(m.base(), 1, 1), &shear).unwrap());
    let rep = validate_gamma_object(&m, &x, 64);
    assert!(!rep.passed());
    assert_eq!(rep.record("equivalence").unwrap().status, crate::report::Status::Fail);
    assert!(rep.record("symmetry").unwrap().passed());
    assert!(rep.record("cocycle").unwrap().passed());
}

#[test]
fn select_pushforward_keeps_one_summand() {
    let m = modr();
    let x = build_i_object(&m, &[1, 2]).unwrap();
    for k in 1..=2 {
        let y = theta_pushforward(&PointedMap::select(2, k).unwrap(), &x).unwrap();
        assert_eq!(y.objs, vec![0, k]);
        assert!(validate_gamma_object(&m, &y, 64).passed());
    }
    assert_eq!(theta_pushforward(&PointedMap::identity(2).unwrap(), &x).unwrap(), x);
}

#[test]
fn projection_inverts_inclusion_on_seeded_tuples() {
    let m = modr();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let dims: Vec<usize> = (0..2).map(|_| rng.gen_range(0..=2)).collect();
        let fs: Vec<MatrixObj> = dims
            .iter()
            .map(|&d| {
                let gl = m.gl(d);
                gl[rng.gen_range(0..gl.len())].clone()
            })
            .collect();
        let x = build_i_object(&m, &dims).unwrap();
        assert_eq!(project_p_object::<ModR>(&x), dims);
        let f = build_i_one(&m, &fs).unwrap();
        assert_eq!(project_p_one::<ModR>(&f), fs);
        let ps: Vec<_> = fs.iter().map(|g| m.id2(g)).collect();
        assert_eq!(project_p_two::<ModR>(&build_i_two(&m, &ps).unwrap()), ps);
        assert!(validate_gamma_one_cell(&m, &f).passed());
    }
}

/// `(γ◇φ)` recomputed by whiskering and associators, with `⊞²` trivial.
fn stacked_oracle(m: &ModR, g: &GOne<ModR>, f: &GOne<ModR>, s: Mask, t: Mask) -> crate::matmod::MatrixMor {
    let a = f.src.map(s, t).unwrap();
    let (fst, gst) = (m.sum_one(f.comp(s), f.comp(t)).unwrap(), m.sum_one(g.comp(s), g.comp(t)).unwrap());
    let (a1, a2) = (f.tgt.map(s, t).unwrap(), g.tgt.map(s, t).unwrap());
    let (fu, gu) = (f.comp(s | t), g.comp(s | t));
    let steps = [
        m.inverse2(&m.assoc(&gst, &fst, a).unwrap()).unwrap(),
        whisker_l(m, &gst, f.phi_at(s, t).unwrap()).unwrap(),
        m.assoc(&gst, a1, fu).unwrap(),
        whisker_r(m, g.phi_at(s, t).unwrap(), fu).unwrap(),
        m.inverse2(&m.assoc(a2, gu, fu).unwrap()).unwrap(),
    ];
    crate::bicat::vcomp_seq(m, &steps).unwrap()
}

#[test]
fn composites_are_stacked_squares() {
    let m = modr();
    let u = GammaUniverse::generate(&m, 2, 6, 3).unwrap();
    let mut checked = 0;
    for f in u.ones.iter().take(40) {
        for g in u.ones.iter().filter(|g| g.src == f.tgt).take(6) {
            let gf = compose_one_cells(&m, g, f).unwrap();
            for &(s, t) in gf.phi.keys() {
                assert_eq!(gf.phi[&(s, t)], stacked_oracle(&m, g, f, s, t));
            }
            assert!(validate_gamma_one_cell(&m, &gf).passed());
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn identity_is_a_weak_unit() {
    let m = modr();
    let u = GammaUniverse::generate(&m, 2, 4, 1).unwrap();
    let gb = GammaBicategory::new(&m, u.clone());
    for f in u.ones.iter().take(30) {
        let r = gb.runit(f).unwrap();
        let l = gb.lunit(f).unwrap();
        assert!(validate_gamma_two_cell(&m, &r).passed());
        assert!(validate_gamma_two_cell(&m, &l).passed());
        assert_eq!(r.comps, f.comps.iter().map(|x| m.runit(x).unwrap()).collect::<Vec<_>>());
    }
}

#[test]
fn associator_is_a_two_cell() {
    let m = modr();
    let u = GammaUniverse::generate(&m, 2, 3, 2).unwrap();
    let gb = GammaBicategory::new(&m, u.clone());
    let mut checked = 0;
    for f in &u.ones {
        for g in u.ones.iter().filter(|g| g.src == f.tgt).take(2) {
            for h in u.ones.iter().filter(|h| h.src == g.tgt).take(2) {
                let a = gb.assoc(h, g, f).unwrap();
                let rep = validate_gamma_two_cell(&m, &a);
                assert!(rep.passed(), "{}", rep.summary());
                checked += 1;
            }
        }
        if checked > 60 {
            break;
        }
    }
    assert!(checked > 20);
}

#[test]
fn xi_at_two_indices() {
    let m = modr();
    let x = build_i_object(&m, &[1, 1]).unwrap();
    let swap = beta(m.base(), 1, 1);
    let mut tw = x.clone();
    for s in [0b01, 0b10] {
        let a = tw.maps[&(s, 0b11 & !s)].clone();
        tw.maps.insert((s, 0b11 & !s), crate::matmod::matmul(m.base(), &a, &swap).unwrap());
    }
    assert!(validate_gamma_object(&m, &tw, 64).passed());
    let xi = build_xi(&m, &tw).unwrap();
    assert_eq!(xi.a_sup[0b01], identity_matrix(m.base(), 1));
    assert_eq!(xi.a_sup[0b11], *tw.map(0b01, 0b10).unwrap());
    assert_eq!(xi.cell.tgt, x);
    assert!(xi.cell.phi.values().all(|p| p.entries.iter().all(|e| e.perm.is_identity())));
    assert!(validate_gamma_one_cell(&m, &xi.cell).passed());
}

#[test]
fn level_one_is_the_base() {
    let rec = level_one_round_trip(&modr(), &Budget::exhaustive());
    assert!(rec.passed(), "{rec:?}");
    assert!(rec.checked > 20);
}

#[test]
fn theta_functoriality_on_two_indices() {
    let m = modr();
    let u = GammaUniverse::generate(&m, 2, 2, 4).unwrap();
    let maps = PointedMap::all(2, 2).unwrap();
    for f in u.ones.iter().step_by(7) {
        for t in &maps {
            for t2 in &maps {
                let both = theta_pushforward(&t.then(t2).unwrap(), f).unwrap();
                let step = theta_pushforward(t2, &theta_pushforward(t, f).unwrap()).unwrap();
                assert_eq!(both, step);
            }
            assert!(validate_gamma_one_cell(&m, &theta_pushforward(t, f).unwrap()).passed());
        }
    }
}

#[test]
fn special_over_small_matrices() {
    let m = modr();
    let rep = verify_special(&m, 2, 16, &Budget::new(80, 7)).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    for law in ["transformation/naturality-in-f", "transformation/composition-axiom", "transformation/unit-axiom"] {
        assert!(rep.record(law).unwrap().checked >= 50 || law.ends_with("unit-axiom"), "{law}");
    }
}

#[test]
fn oversized_n_is_rejected() {
    let m = modr();
    assert!(matches!(build_i_object(&m, &[0; 5]), Err(crate::error::CatError::Domain(_))));
}
