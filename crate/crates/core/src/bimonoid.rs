//! Strict bimonoidal categories: the symmetric-sets instance (finite sets up
//! to size, permutations) and discrete commutative semirings given by tables.
//! Also the π₀ semiring, its ring completion, and unit tests in it.
//!
//! Every morphism of both instances is an automorphism, so a morphism is an
//! object together with a permutation of that many points (the empty
//! permutation for discrete instances).
//!
//! Sym-sets arithmetic is exact: `bound` limits which objects are enumerated,
//! not the size of sums and products.

use crate::bicat::{run_law, MonoidalCategory};
use crate::error::{malformed, CatError, Result};
use crate::fincat::{FinCategory, MorphismDecl};
use crate::perm::Perm;
use crate::report::CheckReport;
use crate::sampling::Budget;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An automorphism of `obj`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RMor {
    pub obj: usize,
    pub perm: Perm,
}

impl fmt::Debug for RMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.perm.is_empty() {
            write!(f, "id{}", self.obj)
        } else {
            write!(f, "{}{:?}", self.obj, self.perm)
        }
    }
}

/// Addition and multiplication tables of a finite commutative semiring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringTables {
    pub elements: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl SemiringTables {
    /// `{0, .., top}` with saturating addition and multiplication.
    pub fn truncated_naturals(top: usize) -> Self {
        let n = top + 1;
        SemiringTables {
            elements: (0..n).map(|a| a.to_string()).collect(),
            zero: 0,
            one: 1.min(top),
            add: (0..n).map(|a| (0..n).map(|b| (a + b).min(top)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| (a * b).min(top)).collect()).collect(),
        }
    }

    pub fn zero_ring() -> Self {
        SemiringTables { elements: vec!["0".into()], zero: 0, one: 0, add: vec![vec![0]], mul: vec![vec![0]] }
    }

    /// Checks every commutative semiring law on the tables.
    pub fn check(&self) -> Result<()> {
        let n = self.elements.len();
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if n == 0 || self.zero >= n || self.one >= n || !square(&self.add) || !square(&self.mul) {
            return malformed("semiring tables are not square tables over the elements");
        }
        let (ad, mu) = (&self.add, &self.mul);
        let name = |a: usize| &self.elements[a];
        for a in 0..n {
            if ad[self.zero][a] != a {
                return malformed(format!("0 + {} != {}", name(a), name(a)));
            }
            if mu[self.one][a] != a {
                return malformed(format!("1 · {} != {}", name(a), name(a)));
            }
            if mu[self.zero][a] != self.zero {
                return malformed(format!("0 · {} != 0", name(a)));
            }
            for b in 0..n {
                if ad[a][b] != ad[b][a] || mu[a][b] != mu[b][a] {
                    return malformed(format!("not commutative at ({}, {})", name(a), name(b)));
                }
                for c in 0..n {
                    if ad[ad[a][b]][c] != ad[a][ad[b][c]] || mu[mu[a][b]][c] != mu[a][mu[b][c]] {
                        return malformed(format!("not associative at ({}, {}, {})", name(a), name(b), name(c)));
                    }
                    if mu[a][ad[b][c]] != ad[mu[a][b]][mu[a][c]] {
                        return malformed(format!("not distributive at ({}, {}, {})", name(a), name(b), name(c)));
                    }
                }
            }
        }
        Ok(())
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    SymSets { bound: usize },
    Discrete(SemiringTables),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictBimonoidal {
    kind: BaseKind,
    gamma_overrides: BTreeMap<(usize, usize), Perm>,
    delta_overrides: BTreeMap<(usize, usize, usize), Perm>,
}

/// Finite sets up to cardinality `bound` with permutations, `⊕ = +`,
/// `⊗ = ×`, `γ_⊕` the block transposition and `δ` the lexicographic reindexing.
pub fn make_sym_sets(bound: usize) -> Result<StrictBimonoidal> {
    if bound == 0 {
        return Err(CatError::Domain("sym-sets bound must be at least 1".into()));
    }
    Ok(StrictBimonoidal {
        kind: BaseKind::SymSets { bound },
        gamma_overrides: BTreeMap::new(),
        delta_overrides: BTreeMap::new(),
    })
}

/// The discrete bimonoidal category of a commutative semiring.
pub fn make_discrete_semiring(tables: SemiringTables) -> Result<StrictBimonoidal> {
    tables.check()?;
    Ok(StrictBimonoidal {
        kind: BaseKind::Discrete(tables),
        gamma_overrides: BTreeMap::new(),
        delta_overrides: BTreeMap::new(),
    })
}

impl StrictBimonoidal {
    pub fn kind(&self) -> &BaseKind {
        &self.kind
    }

    pub fn is_sym_sets(&self) -> bool {
        matches!(self.kind, BaseKind::SymSets { .. })
    }

    /// Replaces one `δ` component (for corrupted fixtures).
    pub fn with_delta(mut self, a: usize, b: usize, c: usize, p: Perm) -> Self {
        self.delta_overrides.insert((a, b, c), p);
        self
    }

    /// Replaces one `γ_⊕` component (for corrupted fixtures).
    pub fn with_gamma(mut self, a: usize, b: usize, p: Perm) -> Self {
        self.gamma_overrides.insert((a, b), p);
        self
    }

    /// Enumerated objects: `0..=bound`, or all semiring elements.
    pub fn objects(&self) -> Vec<usize> {
        match &self.kind {
            BaseKind::SymSets { bound } => (0..=*bound).collect(),
            BaseKind::Discrete(t) => (0..t.elements.len()).collect(),
        }
    }

    pub fn zero(&self) -> usize {
        match &self.kind {
            BaseKind::SymSets { .. } => 0,
            BaseKind::Discrete(t) => t.zero,
        }
    }

    pub fn one(&self) -> usize {
        match &self.kind {
            BaseKind::SymSets { .. } => 1,
            BaseKind::Discrete(t) => t.one,
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            BaseKind::SymSets { .. } => a + b,
            BaseKind::Discrete(t) => t.add[a][b],
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            BaseKind::SymSets { .. } => a * b,
            BaseKind::Discrete(t) => t.mul[a][b],
        }
    }

    pub fn name(&self, a: usize) -> String {
        match &self.kind {
            BaseKind::SymSets { .. } => a.to_string(),
            BaseKind::Discrete(t) => t.elements.get(a).cloned().unwrap_or_else(|| format!("?{a}")),
        }
    }

    /// Resolves an entry id back to an object.
    pub fn parse(&self, id: &str) -> Result<usize> {
        match &self.kind {
            BaseKind::SymSets { .. } => {
                id.parse().map_err(|_| CatError::Malformed(format!("bad sym-sets entry {id:?}")))
            }
            BaseKind::Discrete(t) => {
                t.index_of(id).ok_or_else(|| CatError::Malformed(format!("unknown semiring element {id:?}")))
            }
        }
    }

    fn points(&self, a: usize) -> usize {
        if self.is_sym_sets() {
            a
        } else {
            0
        }
    }

    pub fn id(&self, a: usize) -> RMor {
        RMor { obj: a, perm: Perm::identity(self.points(a)) }
    }

    /// All automorphisms of `a`.
    pub fn automorphisms(&self, a: usize) -> Vec<RMor> {
        Perm::all(self.points(a)).into_iter().map(|perm| RMor { obj: a, perm }).collect()
    }

    /// Every enumerated morphism.
    pub fn morphisms(&self) -> Vec<RMor> {
        self.objects().into_iter().flat_map(|a| self.automorphisms(a)).collect()
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &RMor, f: &RMor) -> Result<RMor> {
        if g.obj != f.obj || g.perm.len() != f.perm.len() {
            return Err(CatError::NotComposable(format!("{g:?} ∘ {f:?}")));
        }
        Ok(RMor { obj: f.obj, perm: g.perm.after(&f.perm) })
    }

    pub fn inverse(&self, f: &RMor) -> RMor {
        RMor { obj: f.obj, perm: f.perm.inverse() }
    }

    pub fn sum(&self, f: &RMor, g: &RMor) -> RMor {
        RMor { obj: self.add(f.obj, g.obj), perm: f.perm.block_sum(&g.perm) }
    }

    pub fn tensor(&self, f: &RMor, g: &RMor) -> RMor {
        RMor { obj: self.mul(f.obj, g.obj), perm: f.perm.tensor(&g.perm) }
    }

    /// `γ_⊕: a ⊕ b -> b ⊕ a`.
    pub fn gamma(&self, a: usize, b: usize) -> RMor {
        let perm = match self.gamma_overrides.get(&(a, b)) {
            Some(p) => p.clone(),
            None if self.is_sym_sets() => Perm::block_swap(a, b),
            None => Perm::identity(0),
        };
        RMor { obj: self.add(a, b), perm }
    }

    /// `δ: a ⊗ (b ⊕ c) -> (a ⊗ b) ⊕ (a ⊗ c)`.
    pub fn delta(&self, a: usize, b: usize, c: usize) -> RMor {
        let perm = match self.delta_overrides.get(&(a, b, c)) {
            Some(p) => p.clone(),
            None if self.is_sym_sets() => Perm::left_distributor(a, b, c),
            None => Perm::identity(0),
        };
        RMor { obj: self.mul(a, self.add(b, c)), perm }
    }

    /// The underlying groupoid within the bound, as a finite category.
    pub fn base_category(&self) -> FinCategory {
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        let mut identities = BTreeMap::new();
        let mut composition = Vec::new();
        let id = |f: &RMor| format!("{f:?}");
        for a in self.objects() {
            objects.push(self.name(a));
            let auts = self.automorphisms(a);
            identities.insert(self.name(a), id(&self.id(a)));
            for g in &auts {
                morphisms.push(MorphismDecl { id: id(g), src: self.name(a), tgt: self.name(a) });
                for f in &auts {
                    composition.push([id(g), id(f), id(&self.compose(g, f).expect("same object"))]);
                }
            }
        }
        FinCategory::build(objects, morphisms, identities, composition).expect("groupoid tables are well formed")
    }
}

/// Checks strict associativity and units of `⊕` and `⊗` on objects and
/// morphisms, functoriality of both, permutativity of `(⊕, 0, γ_⊕)`, strict
/// right distributivity and nullity, and that `δ` is a natural isomorphism.
pub fn validate_bimonoidal(r: &StrictBimonoidal, budget: &Budget) -> CheckReport {
    let started = std::time::Instant::now();
    let mut report = CheckReport::new("bimonoidal");
    let objs = r.objects();
    let mors = r.morphisms();
    let no = objs.len() as u128;
    let nm = mors.len() as u128;
    let tuple = |n: u128, k: usize, mut idx: u128| -> Vec<usize> {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = (idx % n) as usize;
            idx /= n;
        }
        v
    };
    let (zero, one) = (r.zero(), r.one());

    let base = crate::fincat::validate_category(&r.base_category());
    let mut rec = crate::report::LawRecord::new("base-category", "composition of morphisms is a category");
    rec.checked = base.records.iter().map(|x| x.checked).sum();
    if let Some(f) = base.first_failure() {
        rec.fail(format!("{}: {}", f.law, f.witness.clone().unwrap_or_default()));
    }
    report.push(rec);

    run_law(&mut report, "sum-strict", "⊕ strictly associative with strict unit 0", nm * nm * nm, budget, |i| {
        let t = tuple(nm, 3, i);
        let (f, g, h) = (&mors[t[0]], &mors[t[1]], &mors[t[2]]);
        let assoc = r.sum(&r.sum(f, g), h) == r.sum(f, &r.sum(g, h));
        let unit = r.sum(&r.id(zero), f) == *f && r.sum(f, &r.id(zero)) == *f;
        Ok((!assoc || !unit).then(|| format!("{f:?}, {g:?}, {h:?}")))
    });
    run_law(&mut report, "tensor-strict", "⊗ strictly associative with strict unit 1", nm * nm * nm, budget, |i| {
        let t = tuple(nm, 3, i);
        let (f, g, h) = (&mors[t[0]], &mors[t[1]], &mors[t[2]]);
        let assoc = r.tensor(&r.tensor(f, g), h) == r.tensor(f, &r.tensor(g, h));
        let unit = r.tensor(&r.id(one), f) == *f && r.tensor(f, &r.id(one)) == *f;
        Ok((!assoc || !unit).then(|| format!("{f:?}, {g:?}, {h:?}")))
    });
    run_law(
        &mut report,
        "bifunctoriality",
        "(g ⊕ g')(f ⊕ f') = gf ⊕ g'f' and likewise for ⊗",
        nm * nm * nm * nm,
        budget,
        |i| {
            let t = tuple(nm, 4, i);
            let (f, g, f2, g2) = (&mors[t[0]], &mors[t[1]], &mors[t[2]], &mors[t[3]]);
            if f.obj != g.obj || f2.obj != g2.obj {
                return Ok(None);
            }
            let s = r.compose(&r.sum(g, g2), &r.sum(f, f2))? == r.sum(&r.compose(g, f)?, &r.compose(g2, f2)?);
            let m = r.compose(&r.tensor(g, g2), &r.tensor(f, f2))? == r.tensor(&r.compose(g, f)?, &r.compose(g2, f2)?);
            let ids = r.sum(&r.id(f.obj), &r.id(f2.obj)) == r.id(r.add(f.obj, f2.obj))
                && r.tensor(&r.id(f.obj), &r.id(f2.obj)) == r.id(r.mul(f.obj, f2.obj));
            Ok((!s || !m || !ids).then(|| format!("f={f:?} g={g:?} f'={f2:?} g'={g2:?}")))
        },
    );
    run_law(&mut report, "gamma-arity", "γ_⊕: a ⊕ b -> b ⊕ a is a bijection", no * no, budget, |i| {
        let t = tuple(no, 2, i);
        let (a, b) = (objs[t[0]], objs[t[1]]);
        let g = r.gamma(a, b);
        let ok = g.obj == r.add(b, a)
            && g.perm.len() == r.points(g.obj)
            && Perm::from_images(g.perm.images().to_vec()).is_some();
        Ok((!ok).then(|| format!("γ({a},{b}) = {g:?}")))
    });
    run_law(&mut report, "gamma-self-inverse", "γ_(b,a) ∘ γ_(a,b) = id", no * no, budget, |i| {
        let t = tuple(no, 2, i);
        let (a, b) = (objs[t[0]], objs[t[1]]);
        let ok = r.compose(&r.gamma(b, a), &r.gamma(a, b))? == r.id(r.add(a, b));
        Ok((!ok).then(|| format!("a={a} b={b}")))
    });
    run_law(&mut report, "gamma-unit", "γ_(a,0) = id", no, budget, |i| {
        let a = objs[i as usize];
        Ok((r.gamma(a, zero) != r.id(a)).then(|| format!("a={a}")))
    });
    run_law(
        &mut report,
        "gamma-hexagon",
        "γ_(a,b⊕c) = (b ⊕ γ_(a,c)) ∘ (γ_(a,b) ⊕ c)",
        no * no * no,
        budget,
        |i| {
            let t = tuple(no, 3, i);
            let (a, b, c) = (objs[t[0]], objs[t[1]], objs[t[2]]);
            let rhs = r.compose(&r.sum(&r.id(b), &r.gamma(a, c)), &r.sum(&r.gamma(a, b), &r.id(c)))?;
            Ok((r.gamma(a, r.add(b, c)) != rhs).then(|| format!("a={a} b={b} c={c}")))
        },
    );
    run_law(&mut report, "gamma-naturality", "γ ∘ (f ⊕ g) = (g ⊕ f) ∘ γ", nm * nm, budget, |i| {
        let t = tuple(nm, 2, i);
        let (f, g) = (&mors[t[0]], &mors[t[1]]);
        let gm = r.gamma(f.obj, g.obj);
        let ok = r.compose(&gm, &r.sum(f, g))? == r.compose(&r.sum(g, f), &gm)?;
        Ok((!ok).then(|| format!("f={f:?} g={g:?}")))
    });
    run_law(
        &mut report,
        "right-distributivity",
        "(f ⊕ g) ⊗ h = (f ⊗ h) ⊕ (g ⊗ h)",
        nm * nm * nm,
        budget,
        |i| {
            let t = tuple(nm, 3, i);
            let (f, g, h) = (&mors[t[0]], &mors[t[1]], &mors[t[2]]);
            let ok = r.tensor(&r.sum(f, g), h) == r.sum(&r.tensor(f, h), &r.tensor(g, h));
            Ok((!ok).then(|| format!("f={f:?} g={g:?} h={h:?}")))
        },
    );
    run_law(&mut report, "nullity", "f ⊗ 0 = 0 = 0 ⊗ f", nm, budget, |i| {
        let f = &mors[i as usize];
        let z = r.id(zero);
        Ok((r.tensor(f, &z) != z || r.tensor(&z, f) != z).then(|| format!("f={f:?}")))
    });
    run_law(
        &mut report,
        "delta-arity",
        "δ: a ⊗ (b ⊕ c) -> (a ⊗ b) ⊕ (a ⊗ c) is a bijection",
        no * no * no,
        budget,
        |i| {
            let t = tuple(no, 3, i);
            let (a, b, c) = (objs[t[0]], objs[t[1]], objs[t[2]]);
            let d = r.delta(a, b, c);
            let target = r.add(r.mul(a, b), r.mul(a, c));
            let ok = d.obj == target
                && d.perm.len() == r.points(d.obj)
                && Perm::from_images(d.perm.images().to_vec()).is_some();
            Ok((!ok).then(|| format!("δ({a},{b},{c}) = {d:?}")))
        },
    );
    run_law(
        &mut report,
        "delta-naturality",
        "δ ∘ (f ⊗ (g ⊕ h)) = ((f ⊗ g) ⊕ (f ⊗ h)) ∘ δ",
        nm * nm * nm,
        budget,
        |i| {
            let t = tuple(nm, 3, i);
            let (f, g, h) = (&mors[t[0]], &mors[t[1]], &mors[t[2]]);
            let d = r.delta(f.obj, g.obj, h.obj);
            let lhs = r.compose(&d, &r.tensor(f, &r.sum(g, h)))?;
            let rhs = r.compose(&r.sum(&r.tensor(f, g), &r.tensor(f, h)), &d)?;
            Ok((lhs != rhs).then(|| format!("f={f:?} g={g:?} h={h:?}: {lhs:?} vs {rhs:?}")))
        },
    );
    report.wall_time = started.elapsed();
    report
}

/// An element of the ring completion `Gr_+(π₀ R)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElem(i64);

impl GrElem {
    /// The integer value, for the integer completion.
    pub fn value(self) -> i64 {
        self.0
    }
}

#[derive(Debug, Clone)]
enum Completion {
    /// `π₀ = ℕ`, completion `ℤ`.
    Integers { window: i64 },
    /// Finite quotient of pairs; elements are class indices.
    Finite {
        classes: Vec<(usize, usize)>,
        class_of: HashMap<(usize, usize), usize>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        neg: Vec<usize>,
    },
}

/// `π₀ R` with its ring completion.
#[derive(Debug, Clone)]
pub struct SemiringSkeleton {
    pub elements: Vec<String>,
    completion: Completion,
    zero: usize,
    one: usize,
}

fn is_commutative(r: &StrictBimonoidal) -> bool {
    let o = r.objects();
    o.iter().all(|&a| o.iter().all(|&b| r.mul(a, b) == r.mul(b, a) && r.add(a, b) == r.add(b, a)))
}

/// `π₀ R` (iso classes are objects in both instances) and `Gr_+`, built as
/// pairs modulo `(a, b) ~ (c, d)` iff `a + d + k = c + b + k` for some `k`.
pub fn grothendieck(r: &StrictBimonoidal) -> Result<SemiringSkeleton> {
    if !is_commutative(r) {
        return Err(CatError::Unsupported("π₀ multiplication is not commutative".into()));
    }
    let elements: Vec<String> = r.objects().iter().map(|&a| r.name(a)).collect();
    let completion = match &r.kind {
        BaseKind::SymSets { bound } => Completion::Integers { window: *bound as i64 },
        BaseKind::Discrete(t) => finite_completion(t),
    };
    Ok(SemiringSkeleton { elements, completion, zero: r.zero(), one: r.one() })
}

fn finite_completion(t: &SemiringTables) -> Completion {
    let n = t.elements.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let related =
        |(a, b): (usize, usize), (c, d): (usize, usize)| (0..n).any(|k| t.add[t.add[a][d]][k] == t.add[t.add[c][b]][k]);
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut class_of = HashMap::new();
    for &p in &pairs {
        let found = classes.iter().position(|&q| related(p, q));
        let idx = found.unwrap_or_else(|| {
            classes.push(p);
            classes.len() - 1
        });
        class_of.insert(p, idx);
    }
    let m = classes.len();
    let op = |f: &dyn Fn((usize, usize), (usize, usize)) -> (usize, usize)| -> Vec<Vec<usize>> {
        (0..m).map(|x| (0..m).map(|y| class_of[&f(classes[x], classes[y])]).collect()).collect()
    };
    let add = op(&|(a, b), (c, d)| (t.add[a][c], t.add[b][d]));
    let mul = op(&|(a, b), (c, d)| (t.add[t.mul[a][c]][t.mul[b][d]], t.add[t.mul[a][d]][t.mul[b][c]]));
    let neg = (0..m).map(|x| class_of[&(classes[x].1, classes[x].0)]).collect();
    Completion::Finite { classes, class_of, add, mul, neg }
}

impl SemiringSkeleton {
    /// The class of `a - b`.
    pub fn difference(&self, a: usize, b: usize) -> GrElem {
        match &self.completion {
            Completion::Integers { .. } => GrElem(a as i64 - b as i64),
            Completion::Finite { class_of, .. } => GrElem(class_of[&(a, b)] as i64),
        }
    }

    pub fn embed(&self, a: usize) -> GrElem {
        self.difference(a, self.zero)
    }

    pub fn zero(&self) -> GrElem {
        self.embed(self.zero)
    }

    pub fn one(&self) -> GrElem {
        self.embed(self.one)
    }

    pub fn add(&self, x: GrElem, y: GrElem) -> GrElem {
        match &self.completion {
            Completion::Integers { .. } => GrElem(x.0 + y.0),
            Completion::Finite { add, .. } => GrElem(add[x.0 as usize][y.0 as usize] as i64),
        }
    }

    pub fn mul(&self, x: GrElem, y: GrElem) -> GrElem {
        match &self.completion {
            Completion::Integers { .. } => GrElem(x.0 * y.0),
            Completion::Finite { mul, .. } => GrElem(mul[x.0 as usize][y.0 as usize] as i64),
        }
    }

    pub fn neg(&self, x: GrElem) -> GrElem {
        match &self.completion {
            Completion::Integers { .. } => GrElem(-x.0),
            Completion::Finite { neg, .. } => GrElem(neg[x.0 as usize] as i64),
        }
    }

    /// Enumerated elements: all classes, or `-bound..=bound` for the integers.
    pub fn elements_of_completion(&self) -> Vec<GrElem> {
        match &self.completion {
            Completion::Integers { window } => (-window..=*window).map(GrElem).collect(),
            Completion::Finite { classes, .. } => (0..classes.len() as i64).map(GrElem).collect(),
        }
    }

    /// A representative pair `(a, b)` with `x = a - b`.
    pub fn representative(&self, x: GrElem) -> (usize, usize) {
        match &self.completion {
            Completion::Integers { .. } if x.0 >= 0 => (x.0 as usize, 0),
            Completion::Integers { .. } => (0, (-x.0) as usize),
            Completion::Finite { classes, .. } => classes[x.0 as usize],
        }
    }

    /// Searches the enumerated completion for a multiplicative inverse.
    pub fn is_unit(&self, x: GrElem) -> bool {
        let one = self.one();
        self.elements_of_completion().into_iter().any(|y| self.mul(x, y) == one)
    }

    /// The set of units found by search.
    pub fn units(&self) -> Vec<GrElem> {
        self.elements_of_completion().into_iter().filter(|&x| self.is_unit(x)).collect()
    }
}

/// Whether the class of `a` is a unit of `Gr_+(π₀ R)`.
pub fn unit_in_completion(r: &StrictBimonoidal, a: usize) -> Result<bool> {
    let g = grothendieck(r)?;
    Ok(g.is_unit(g.embed(a)))
}

/// `(R, ⊕, 0)` as a strict monoidal groupoid; for sym-sets this is the
/// permutation groupoid under disjoint union.
#[derive(Debug, Clone)]
pub struct Additive(pub StrictBimonoidal);

impl MonoidalCategory for Additive {
    type Obj = usize;
    type Mor = RMor;

    fn src(&self, m: &RMor) -> usize {
        m.obj
    }
    fn tgt(&self, m: &RMor) -> usize {
        m.obj
    }
    fn id(&self, a: &usize) -> RMor {
        self.0.id(*a)
    }
    fn compose(&self, g: &RMor, f: &RMor) -> Result<RMor> {
        self.0.compose(g, f)
    }
    fn inverse(&self, m: &RMor) -> Option<RMor> {
        Some(self.0.inverse(m))
    }
    fn unit(&self) -> usize {
        self.0.zero()
    }
    fn tensor(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(self.0.add(*a, *b))
    }
    fn tensor_mor(&self, f: &RMor, g: &RMor) -> Result<RMor> {
        Ok(self.0.sum(f, g))
    }
    fn associator(&self, a: &usize, b: &usize, c: &usize) -> Result<RMor> {
        Ok(self.0.id(self.0.add(self.0.add(*a, *b), *c)))
    }
    fn left_unitor(&self, a: &usize) -> Result<RMor> {
        Ok(self.0.id(*a))
    }
    fn right_unitor(&self, a: &usize) -> Result<RMor> {
        Ok(self.0.id(*a))
    }
    fn objects(&self) -> Vec<usize> {
        self.0.objects()
    }
    fn hom(&self, a: &usize, b: &usize) -> Vec<RMor> {
        if a == b {
            self.0.automorphisms(*a)
        } else {
            Vec::new()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Position of each source element of `a × (b + c)` in `(a × b) ⊔ (a × c)`,
    /// found by matching labels.
    fn delta_oracle(a: usize, b: usize, c: usize) -> Vec<u32> {
        let src: Vec<(usize, usize)> = (0..a).flat_map(|x| (0..b + c).map(move |z| (x, z))).collect();
        let mut tgt: Vec<(usize, char, usize)> = (0..a).flat_map(|x| (0..b).map(move |y| (x, 'L', y))).collect();
        tgt.extend((0..a).flat_map(|x| (0..c).map(move |w| (x, 'R', w))));
        src.iter()
            .map(|&(x, z)| {
                let label = if z < b { (x, 'L', z) } else { (x, 'R', z - b) };
                tgt.iter().position(|&t| t == label).unwrap() as u32
            })
            .collect()
    }

    #[test]
    fn sym_sets_bound_one_is_discrete() {
        let r = make_sym_sets(1).unwrap();
        assert_eq!(r.objects(), vec![0, 1]);
        assert!(r.morphisms().iter().all(|f| f.perm.is_identity()));
        assert_eq!(r.morphisms().len(), 2);
    }

    #[test]
    fn gamma_one_one_is_the_transposition() {
        let r = make_sym_sets(2).unwrap();
        assert_eq!(r.gamma(1, 1).perm.images(), &[1, 0]);
    }

    #[test]
    fn delta_matches_label_oracle() {
        let r = make_sym_sets(3).unwrap();
        assert_eq!(r.delta(2, 1, 1).perm.images(), &[0, 2, 1, 3]);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(r.delta(a, b, c).perm.images(), delta_oracle(a, b, c).as_slice());
                }
            }
        }
    }

    #[test]
    fn sym_sets_two_is_valid() {
        let r = validate_bimonoidal(&make_sym_sets(2).unwrap(), &Budget::exhaustive());
        assert!(r.passed(), "{}", r.summary());
        assert!(r.records.iter().all(|x| x.seed.is_none()));
    }

    #[test]
    fn identity_delta_fails_naturality() {
        let r = make_sym_sets(2).unwrap().with_delta(2, 1, 1, Perm::identity(4));
        let rep = validate_bimonoidal(&r, &Budget::exhaustive());
        let rec = rep.record("delta-naturality").unwrap();
        assert!(!rec.passed());
        // the oracle square: f = swap on 2, g = h = id_1
        let f = RMor { obj: 2, perm: Perm::from_images(vec![1, 0]).unwrap() };
        let (g, h) = (r.id(1), r.id(1));
        let d = r.delta(2, 1, 1);
        let lhs = r.compose(&d, &r.tensor(&f, &r.sum(&g, &h))).unwrap();
        let rhs = r.compose(&r.sum(&r.tensor(&f, &g), &r.tensor(&f, &h)), &d).unwrap();
        assert_eq!(lhs.perm.images(), &[2, 3, 0, 1]);
        assert_eq!(rhs.perm.images(), &[1, 0, 3, 2]);
    }

    #[test]
    fn truncated_naturals_form_a_semiring() {
        let t = SemiringTables::truncated_naturals(3);
        // independent check of the laws on the four elements
        let sat = |x: usize| x.min(3);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(sat(a * sat(b + c)), sat(sat(a * b) + sat(a * c)));
                }
            }
        }
        let r = make_discrete_semiring(t).unwrap();
        assert!(validate_bimonoidal(&r, &Budget::exhaustive()).passed());
        let z = make_discrete_semiring(SemiringTables::zero_ring()).unwrap();
        assert!(validate_bimonoidal(&z, &Budget::exhaustive()).passed());
    }

    #[test]
    fn non_distributive_tables_are_rejected() {
        let mut t = SemiringTables::truncated_naturals(2);
        t.mul[2][2] = 1;
        assert!(matches!(make_discrete_semiring(t), Err(CatError::Malformed(_))));
    }

    #[test]
    fn units_of_completions() {
        let r = make_sym_sets(2).unwrap();
        assert!(unit_in_completion(&r, 1).unwrap());
        assert!(!unit_in_completion(&r, 2).unwrap());
        assert!(!unit_in_completion(&r, 0).unwrap());
        let z = make_discrete_semiring(SemiringTables::zero_ring()).unwrap();
        let g = grothendieck(&z).unwrap();
        assert_eq!(g.zero(), g.one());
        assert!(g.elements_of_completion().iter().all(|&x| g.is_unit(x)));
    }

    #[test]
    fn truncated_naturals_complete_to_the_zero_ring() {
        // 3 + 1 = 3 forces every difference to vanish
        let r = make_discrete_semiring(SemiringTables::truncated_naturals(3)).unwrap();
        let g = grothendieck(&r).unwrap();
        assert_eq!(g.elements_of_completion().len(), 1);
        assert!(unit_in_completion(&r, 2).unwrap());
    }

    #[test]
    fn integers_embed_injectively() {
        let r = make_sym_sets(4).unwrap();
        let g = grothendieck(&r).unwrap();
        let e: Vec<GrElem> = (0..=4).map(|a| g.embed(a)).collect();
        for a in 0..=4 {
            for b in 0..=4 {
                assert_eq!(g.add(e[a], e[b]), g.embed(a + b));
                assert_eq!(a == b, e[a] == e[b]);
            }
        }
    }
}
