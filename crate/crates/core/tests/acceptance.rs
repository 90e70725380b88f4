//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

use smbicat::bicat::{validate_bicategory, IdentityPseudofunctor, MonoidalCategory, Suspension};
use smbicat::bimonoid::{make_discrete_semiring, make_sym_sets, validate_bimonoidal, Additive, SemiringTables};
use smbicat::bracket::Bracket;
use smbicat::cli::{run_suite, Suite, SuiteConfig};
use smbicat::fincat::{bracketed_composite, spine_composite, FinCategory, MorphismDecl, NervePath};
use smbicat::gamma::{verify_special, PointedMap};
use smbicat::matmod::{build_mod, identity_matrix, is_weakly_invertible, validate_mod_smb, MatrixMonoidal, MatrixObj};
use smbicat::nerve::{bar_equals_nerve, check_cylinder, check_simplicial, enumerate_nerve, BlockShift, NerveLimits};
use smbicat::perm::Perm;
use smbicat::report::CheckReport;
use smbicat::sampling::Budget;
use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(rep: &CheckReport) -> Outcome {
    ensure(rep.passed(), || rep.summary())
}

fn checked(rep: &CheckReport, law: &str) -> u64 {
    rep.record(law).map_or(0, |r| r.checked)
}

fn c1() -> Outcome {
    let r = make_sym_sets(2).map_err(|e| e.to_string())?;
    let rep = validate_bimonoidal(&r, &Budget::exhaustive());
    passed(&rep)?;
    ensure(rep.records.iter().all(|r| r.seed.is_none()), || "a law was sampled".into())?;
    let bad = r.with_delta(2, 1, 1, Perm::identity(4));
    let rep = validate_bimonoidal(&bad, &Budget::exhaustive());
    let witness = rep.first_failure().and_then(|f| f.witness.clone());
    ensure(!rep.passed() && witness.is_some(), || "corrupted δ was not caught with a witness".into())
}

fn c2() -> Outcome {
    let mm = MatrixMonoidal { r: make_sym_sets(1).map_err(|e| e.to_string())?, n: 2 };
    let rep = validate_bicategory(&Suspension(mm), &Budget::new(150, 7));
    passed(&rep)?;
    for law in ["pentagon", "triangle"] {
        ensure(checked(&rep, law) >= 100, || format!("{law}: only {} instances", checked(&rep, law)))?;
    }
    let r = make_discrete_semiring(SemiringTables::truncated_naturals(1)).map_err(|e| e.to_string())?;
    let mm = MatrixMonoidal { r, n: 2 };
    let objs = mm.objects();
    for u in &objs {
        for v in &objs {
            for w in &objs {
                let a = mm.associator(u, v, w).map_err(|e| e.to_string())?;
                let t = mm.tensor(&mm.tensor(u, v).map_err(|e| e.to_string())?, w).map_err(|e| e.to_string())?;
                ensure(a == mm.id(&t), || format!("non-identity associator at {u:?} {v:?} {w:?}"))?;
            }
        }
    }
    Ok(())
}

fn c3() -> Outcome {
    let r = make_sym_sets(1).map_err(|e| e.to_string())?;
    let mut ours = 0;
    let mut oracle = 0;
    for bits in 0..16usize {
        let e: Vec<usize> = (0..4).map(|b| (bits >> b) & 1).collect();
        let det = e[0] as i64 * e[3] as i64 - e[1] as i64 * e[2] as i64;
        let u = MatrixObj::new(2, e).map_err(|e| e.to_string())?;
        let w = is_weakly_invertible(&r, &u).map_err(|e| e.to_string())?;
        ensure(w == (det.abs() == 1), || format!("{u:?} disagrees with the determinant"))?;
        ours += usize::from(w);
        oracle += usize::from(det.abs() == 1);
    }
    ensure(ours == 6 && oracle == 6, || format!("{ours} weakly invertible, oracle {oracle}"))?;
    let m = build_mod(r.clone(), 2).map_err(|e| e.to_string())?;
    ensure(m.gl(2).len() == 6, || format!("GL_2 has {} objects", m.gl(2).len()))?;
    let gl0 = m.gl(0);
    ensure(gl0.len() == 1 && gl0[0] == identity_matrix(&r, 0), || format!("GL_0 = {gl0:?}"))?;
    use smbicat::bicat::Bicategory;
    ensure(m.two_cells(&gl0[0], &gl0[0]).len() == 1, || "GL_0 has extra 2-cells".into())
}

fn c4() -> Outcome {
    let m = build_mod(make_sym_sets(1).map_err(|e| e.to_string())?, 3).map_err(|e| e.to_string())?;
    passed(&validate_mod_smb(&m, &Budget::new(20_000, 7)))
}

fn c5() -> Outcome {
    let m = build_mod(make_sym_sets(1).map_err(|e| e.to_string())?, 2).map_err(|e| e.to_string())?;
    let rep = verify_special(&m, 2, 16, &Budget::new(80, 7)).map_err(|e| e.to_string())?;
    passed(&rep)?;
    for law in [
        "level-one-iso",
        "objects-valid",
        "one-cells-valid",
        "two-cells-valid",
        "xi-components",
        "xi-equivalences",
        "pushforward",
    ] {
        ensure(checked(&rep, law) > 0, || format!("{law} checked nothing"))?;
    }
    ensure(checked(&rep, "p-after-i-identity") >= 20, || "fewer than 20 p∘i tuples".into())?;
    let xi = checked(&rep, "xi-naturality-cells");
    ensure(xi >= 50, || format!("ξ naturality on {xi} cells"))?;
    let maps = PointedMap::all(2, 2).map_err(|e| e.to_string())?;
    ensure(maps.len() == 9, || format!("{} pointed maps 2 -> 2", maps.len()))
}

fn c6() -> Outcome {
    let lim = NerveLimits::default();
    let sp = Suspension(Additive(make_sym_sets(2).map_err(|e| e.to_string())?));
    let oracle: usize =
        (0..=2usize).flat_map(|a| (0..=2 - a).map(move |b| a + b)).map(|n| (1..=n).product::<usize>()).sum();
    let count = enumerate_nerve(&sp, 2, &lim).map_err(|e| e.to_string())?.len();
    ensure(count == 9 && oracle == 9, || format!("{count} 2-simplices, oracle {oracle}"))?;
    passed(&check_simplicial(&sp, 3, &lim).map_err(|e| e.to_string())?)?;
    passed(&bar_equals_nerve(&smbicat::bicat::DiscreteMonoid::trivial(), 3, &lim).map_err(|e| e.to_string())?)?;
    let r = make_discrete_semiring(SemiringTables::truncated_naturals(3)).map_err(|e| e.to_string())?;
    let modr = build_mod(r, 1).map_err(|e| e.to_string())?;
    let gl = smbicat::matmod::GlMonoidal { m: &modr, n: 1 };
    passed(&bar_equals_nerve(&gl, 3, &lim).map_err(|e| e.to_string())?)?;
    let id = IdentityPseudofunctor(&sp);
    let shift = BlockShift { r: sp.0 .0.clone(), k: 1 };
    let rep = check_cylinder(&sp, &sp, &id, &id, &shift, &Budget::exhaustive());
    passed(&rep)?;
    for law in ["restricts-to-F", "restricts-to-G"] {
        ensure(checked(&rep, law) > 0, || format!("{law} checked nothing"))?;
    }
    Ok(())
}

/// Objects `0..5`; for `i < j` two arrows `i -> j` labelled by `Z/2`, composing by addition.
fn labelled_chain() -> FinCategory {
    let n = 5;
    let name = |i: usize, j: usize, k: usize| if i == j { format!("id{i}") } else { format!("m{i}{j}_{k}") };
    let arrows: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (0..if i == j { 1 } else { 2 }).map(move |k| (i, j, k))))
        .collect();
    let morphisms = arrows
        .iter()
        .map(|&(i, j, k)| MorphismDecl { id: name(i, j, k), src: i.to_string(), tgt: j.to_string() })
        .collect();
    let identities: BTreeMap<String, String> = (0..n).map(|i| (i.to_string(), name(i, i, 0))).collect();
    let mut composition = Vec::new();
    for &(i, j, k1) in &arrows {
        for &(j2, l, k2) in &arrows {
            if j == j2 {
                composition.push([name(j, l, k2), name(i, j, k1), name(i, l, (k1 + k2) % 2)]);
            }
        }
    }
    FinCategory::build((0..n).map(|i| i.to_string()).collect(), morphisms, identities, composition)
        .expect("chain category")
}

fn c7() -> Outcome {
    let c = labelled_chain();
    let decls = c.morphisms().to_vec();
    let label = |id: &str| -> usize { id.rsplit('_').next().and_then(|k| k.parse().ok()).unwrap_or(0) };
    let mut paths: Vec<Vec<MorphismDecl>> = decls.iter().map(|d| vec![d.clone()]).collect();
    let mut frontier = paths.clone();
    let mut total = 0usize;
    for _ in 1..4 {
        let mut next = Vec::new();
        for p in &frontier {
            for d in decls.iter().filter(|d| d.src == p.last().unwrap().tgt) {
                let mut q = p.clone();
                q.push(d.clone());
                next.push(q);
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    for p in &paths {
        let path = NervePath::new(p.iter().map(|d| d.id.clone()));
        let spine = spine_composite(&c, &path).map_err(|e| e.to_string())?;
        let (s, t) = (&p[0].src, &p.last().unwrap().tgt);
        let k = p.iter().map(|d| label(&d.id)).sum::<usize>() % 2;
        let expected = if s == t { format!("id{s}") } else { format!("m{s}{t}_{k}") };
        ensure(spine == expected, || format!("{:?}: spine {spine}, oracle {expected}", path.0))?;
        for b in Bracket::all(0, p.len()) {
            total += 1;
            let v = bracketed_composite(&c, &path, &b).map_err(|e| e.to_string())?;
            ensure(v == spine, || format!("{:?} bracketed {b:?} gives {v}", path.0))?;
        }
    }
    ensure(total > 0, || "no paths".into())
}

fn c8() -> Outcome {
    let cfg = SuiteConfig {
        suite: Suite::All,
        base: make_sym_sets(1).map_err(|e| e.to_string())?,
        maxdim: 2,
        n: 2,
        budget: Budget::new(80, 7),
        presented: None,
    };
    let a = run_suite(&cfg).map_err(|e| e.to_string())?.to_document();
    let b = run_suite(&cfg).map_err(|e| e.to_string())?.to_document();
    ensure(a == b, || "library reports differ".into())?;
    let dir = std::env::temp_dir().join(format!("smbicat-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut docs = Vec::new();
    for run in 0..2 {
        let out = dir.join(format!("run{run}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_smbicat"))
            .args(["check", "all", "--seed", "7", "--report"])
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.code() == Some(0), || format!("check all exited with {:?}", status.status.code()))?;
        docs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(docs[0] == docs[1], || "CLI reports differ".into())
}

type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 8] = [
        ("bimonoidal laws on sym-sets(2), corrupted δ caught", c1, 10),
        ("pentagon and unit laws in M_2, discrete associator is identity", c2, 30),
        ("six weakly invertible 0/1 2x2 matrices, GL_0 is the unit", c3, 1),
        ("Mod_R is a strict symmetric monoidal bicategory at maxdim 3", c4, 60),
        ("Gamma construction at n = 2", c5, 300),
        ("nerve counts, simplicial identities, bar, cylinder", c6, 60),
        ("bracket invariance of spine composites", c7, 5),
        ("check all is deterministic", c8, u64::MAX),
    ];
    let mut failed = 0;
    for (i, (what, run, limit)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let took = started.elapsed();
        let outcome = outcome
            .and_then(|()| ensure(took <= Duration::from_secs(*limit), || format!("took {took:.2?}, limit {limit} s")));
        match outcome {
            Ok(()) => println!("PASS {} {what} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {what} ({took:.2?}): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
