use super::*;
use crate::bicat::{is_one_equivalence, validate_bicategory};
use crate::bimonoid::{make_discrete_semiring, make_sym_sets};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sym(bound: usize) -> StrictBimonoidal {
    make_sym_sets(bound).unwrap()
}

fn mat(rows: &[&[usize]]) -> MatrixObj {
    MatrixObj::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn int_det(u: &MatrixObj) -> i64 {
    let a = |i, j| u.at(i, j) as i64;
    match u.n {
        0 => 1,
        1 => a(0, 0),
        2 => a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0),
        3 => {
            a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(1, 0) * a(2, 1)
                - a(0, 2) * a(1, 1) * a(2, 0)
                - a(0, 0) * a(1, 2) * a(2, 1)
                - a(0, 1) * a(1, 0) * a(2, 2)
        }
        _ => unreachable!(),
    }
}

/// Element-level associator: label every element of `U(VW)_il` by
/// `(j, a, k, v, w)` and find it in the `k`-major order of `((UV)W)_il`.
fn associator_oracle(u: &MatrixObj, v: &MatrixObj, w: &MatrixObj, i: usize, l: usize) -> Vec<u32> {
    let n = u.n;
    let mut src = Vec::new();
    for j in 0..n {
        for a in 0..u.at(i, j) {
            for k in 0..n {
                for x in 0..v.at(j, k) {
                    for y in 0..w.at(k, l) {
                        src.push((j, a, k, x, y));
                    }
                }
            }
        }
    }
    let mut tgt = Vec::new();
    for k in 0..n {
        for j in 0..n {
            for a in 0..u.at(i, j) {
                for x in 0..v.at(j, k) {
                    for y in 0..w.at(k, l) {
                        tgt.push((j, a, k, x, y));
                    }
                }
            }
        }
    }
    src.iter().map(|e| tgt.iter().position(|t| t == e).unwrap() as u32).collect()
}

#[test]
fn identity_is_a_strict_unit() {
    let r = sym(2);
    let u = mat(&[&[2, 1], &[0, 1]]);
    let id = identity_matrix(&r, 2);
    assert_eq!(matmul(&r, &u, &id).unwrap(), u);
    assert_eq!(matmul(&r, &id, &u).unwrap(), u);
}

#[test]
fn product_over_truncated_naturals() {
    let r = make_discrete_semiring(SemiringTables::truncated_naturals(3)).unwrap();
    let w = matmul(&r, &mat(&[&[1, 0], &[1, 1]]), &mat(&[&[1, 1], &[0, 1]])).unwrap();
    assert_eq!(w, mat(&[&[1, 1], &[1, 2]]));
}

#[test]
fn one_by_one_product_is_the_tensor() {
    let r = sym(3);
    assert_eq!(matmul(&r, &mat(&[&[2]]), &mat(&[&[3]])).unwrap(), mat(&[&[6]]));
}

#[test]
fn bounded_product_reports_overflow() {
    let r = sym(1);
    let u = mat(&[&[1, 1], &[0, 1]]);
    assert!(matches!(matmul_within_bound(&r, &u, &u), Err(CatError::BoundOverflow(_))));
    assert_eq!(matmul(&r, &u, &u).unwrap(), mat(&[&[1, 2], &[0, 1]]));
}

#[test]
fn associator_over_discrete_base_is_identity() {
    let r = make_discrete_semiring(SemiringTables::truncated_naturals(3)).unwrap();
    let (u, v, w) = (mat(&[&[1, 2], &[3, 1]]), mat(&[&[2, 2], &[0, 1]]), mat(&[&[1, 3], &[1, 1]]));
    let a = matrix_associator(&r, &u, &v, &w).unwrap();
    assert!(a.entries.iter().all(|e| e.perm.is_empty()));
    assert_eq!(a.source(), matmul(&r, &u, &matmul(&r, &v, &w).unwrap()).unwrap());
}

#[test]
fn associator_in_dimension_one_is_identity() {
    let r = sym(3);
    let a = matrix_associator(&r, &mat(&[&[2]]), &mat(&[&[3]]), &mat(&[&[2]])).unwrap();
    assert!(a.entries[0].perm.is_identity());
    assert_eq!(a.entries[0].obj, 12);
}

#[test]
fn associator_on_all_ones_exchanges_summation_order() {
    let r = sym(1);
    let ones = mat(&[&[1, 1], &[1, 1]]);
    let a = matrix_associator(&r, &ones, &ones, &ones).unwrap();
    for e in &a.entries {
        assert_eq!(e.perm.images(), &[0, 2, 1, 3]);
    }
    assert_eq!(associator_oracle(&ones, &ones, &ones, 0, 0), vec![0, 2, 1, 3]);
}

#[test]
fn associator_matches_element_oracle() {
    let r = sym(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let mut rand_mat = || MatrixObj::new(n, (0..n * n).map(|_| rng.gen_range(0..=2)).collect()).unwrap();
        let (u, v, w) = (rand_mat(), rand_mat(), rand_mat());
        let a = matrix_associator(&r, &u, &v, &w).unwrap();
        for i in 0..n {
            for l in 0..n {
                assert_eq!(a.at(i, l).perm.images(), associator_oracle(&u, &v, &w, i, l).as_slice());
            }
        }
    }
}

#[test]
fn two_by_two_zero_one_matrices() {
    let r = sym(1);
    let sk = grothendieck(&r).unwrap();
    let mut count = 0;
    for bits in 0..16usize {
        let u = MatrixObj::new(2, (0..4).map(|b| (bits >> b) & 1).collect()).unwrap();
        let oracle = int_det(&u).abs() == 1;
        assert_eq!(is_weakly_invertible(&r, &u).unwrap(), oracle, "{u:?}");
        assert_eq!(determinant(&sk, &u).value(), int_det(&u));
        count += usize::from(oracle);
    }
    assert_eq!(count, 6);
    assert!(!is_weakly_invertible(&r, &mat(&[&[2]])).unwrap());
    for n in 0..4 {
        assert!(is_weakly_invertible(&r, &identity_matrix(&r, n)).unwrap());
    }
}

#[test]
fn gl_sizes_at_bound_one() {
    let m = build_mod(sym(1), 3).unwrap();
    let sizes: Vec<usize> = (0..=3).map(|n| m.gl(n).len()).collect();
    // oracle: 0/1 matrices with integer determinant ±1
    let oracle: Vec<usize> = (0..=3usize)
        .map(|n| {
            (0..1usize << (n * n))
                .filter(|bits| {
                    int_det(&MatrixObj::new(n, (0..n * n).map(|b| (bits >> b) & 1).collect()).unwrap()).abs() == 1
                })
                .count()
        })
        .collect();
    assert_eq!(sizes, oracle);
    assert_eq!(sizes, vec![1, 1, 6, 168]);
    assert_eq!(m.gl(0)[0].n, 0);
}

#[test]
fn block_sums_and_braiding() {
    let r = sym(1);
    for n in 0..4 {
        for k in 0..4 {
            assert_eq!(block_sum(&r, &identity_matrix(&r, n), &identity_matrix(&r, k)), identity_matrix(&r, n + k));
            assert_eq!(matmul(&r, &beta(&r, k, n), &beta(&r, n, k)).unwrap(), identity_matrix(&r, n + k));
        }
    }
    assert_eq!(beta(&r, 1, 1), mat(&[&[0, 1], &[1, 0]]));
    assert_eq!(beta(&r, 1, 2), mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
}

#[test]
fn braid_triangle_at_ones() {
    // permutation-matrix oracle: β_{1,2} sends basis vector e_0 to e_2, e_1 to e_0, e_2 to e_1
    let r = sym(1);
    let lhs = matmul(
        &r,
        &block_sum(&r, &identity_matrix(&r, 1), &beta(&r, 1, 1)),
        &block_sum(&r, &beta(&r, 1, 1), &identity_matrix(&r, 1)),
    )
    .unwrap();
    let apply = |u: &MatrixObj, j: usize| (0..u.n).find(|&i| u.at(i, j) == 1).unwrap();
    assert_eq!((0..3).map(|j| apply(&lhs, j)).collect::<Vec<_>>(), vec![2, 0, 1]);
    assert_eq!(lhs, beta(&r, 1, 2));
}

#[test]
fn weak_invertibility_is_closed() {
    let r = sym(1);
    let m = build_mod(r.clone(), 2).unwrap();
    for n in 0..=2 {
        for k in 0..=2 {
            for u in m.gl(n) {
                for v in m.gl(k) {
                    assert!(is_weakly_invertible(&r, &block_sum(&r, u, v)).unwrap());
                    if n == k {
                        assert!(is_weakly_invertible(&r, &matmul(&r, u, v).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn mod_r_is_a_bicategory() {
    let m = build_mod(sym(1), 2).unwrap();
    let rep = validate_bicategory(&m, &Budget::exhaustive());
    assert!(rep.passed(), "{}", rep.summary());
    assert!(rep.record("pentagon").unwrap().checked >= 1296);
}

#[test]
fn pentagon_on_seeded_quadruples_at_bound_two() {
    let m = build_mod(sym(2), 2).unwrap();
    let rep = validate_bicategory(&m, &Budget::new(300, 5));
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn mod_smb_small_is_exhaustively_valid() {
    let m = build_mod(sym(1), 2).unwrap();
    let rep = validate_mod_smb(&m, &Budget::exhaustive());
    assert!(rep.passed(), "{}", rep.summary());
    assert!(rep.records.iter().all(|x| x.seed.is_none()));
}

#[test]
fn corrupted_delta_breaks_associator_naturality() {
    use crate::perm::Perm;
    let r = sym(2).with_delta(2, 1, 1, Perm::identity(4));
    let m = build_mod(r, 1).unwrap();
    // 2-cells here are 1×1 matrices, where the associator is δ-free; use 2×2
    let m2 = build_mod(sym(2).with_delta(2, 1, 1, Perm::identity(4)), 2).unwrap();
    let rep = validate_bicategory(&m2, &Budget::new(4000, 1));
    assert!(!rep.passed());
    assert!(validate_bicategory(&m, &Budget::exhaustive()).passed());
}

#[test]
fn equivalences_are_permutation_matrices() {
    let m = build_mod(sym(1), 2).unwrap();
    let swap = mat(&[&[0, 1], &[1, 0]]);
    let shear = mat(&[&[1, 1], &[0, 1]]);
    assert!(is_one_equivalence(&m, &swap, 100).is_equivalence());
    assert!(matches!(
        is_one_equivalence(&m, &shear, 100),
        crate::bicat::OneEquivalence::NotFound { definitive: true, .. }
    ));
}

#[test]
fn document_round_trip() {
    let m = build_mod(sym(1), 2).unwrap();
    let doc = m.to_doc();
    let text = serde_json::to_string(&doc).unwrap();
    let back: ModDoc = serde_json::from_str(&text).unwrap();
    let m2 = ModR::from_doc(&back).unwrap();
    assert_eq!(m2.to_doc(), doc);
    let mut bad = doc.clone();
    bad.gl.get_mut("2").unwrap().pop();
    assert!(matches!(ModR::from_doc(&bad), Err(CatError::Malformed(_))));
    assert_eq!(
        m.parse_matrix(&[vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]]).unwrap(),
        identity_matrix(m.base(), 2)
    );
}

#[test]
fn all_matrices_form_a_monoidal_category() {
    use crate::bicat::Suspension;
    let mm = MatrixMonoidal { r: sym(1), n: 2 };
    assert_eq!(mm.objects().len(), 16);
    let rep = validate_bicategory(&Suspension(mm), &Budget::new(150, 7));
    assert!(rep.passed(), "{}", rep.summary());
    assert!(rep.records.iter().all(|r| r.checked > 0 || !r.law.contains("pentagon")));
}

#[test]
fn discrete_associator_is_an_identity() {
    let r = make_discrete_semiring(crate::bimonoid::SemiringTables::truncated_naturals(2)).unwrap();
    let mm = MatrixMonoidal { r, n: 2 };
    let objs = mm.objects();
    for u in &objs {
        for v in &objs {
            for w in objs.iter().step_by(7) {
                let a = mm.associator(u, v, w).unwrap();
                let t = mm.tensor(&mm.tensor(u, v).unwrap(), w).unwrap();
                assert_eq!(a, mm.id(&t));
            }
        }
    }
}
