//! Finite categories given by explicit composition tables.
//!
//! Object and morphism ids are opaque strings. The composition table must be
//! total on composable pairs; the checks here are exact table comparisons.

use crate::bracket::Bracket;
use crate::error::{malformed, not_composable, CatError, Result};
use crate::perm::Perm;
use crate::report::{CheckReport, LawRecord};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Serialized form of a [`FinCategory`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    pub identities: BTreeMap<String, String>,
    /// Entries `[g, f, g∘f]`.
    pub composition: Vec<[String; 3]>,
}

#[derive(Debug, Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    obj_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<Option<usize>>,
    comp: HashMap<(usize, usize), usize>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.to_doc() == other.to_doc()
    }
}

impl FinCategory {
    /// Resolves ids; dangling references are a [`CatError::Malformed`], never a law failure.
    pub fn from_doc(doc: &FinCategoryDoc) -> Result<Self> {
        let mut obj_index = HashMap::new();
        for (i, o) in doc.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return malformed(format!("duplicate object id {o:?}"));
            }
        }
        let mut mor_index = HashMap::new();
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for (i, m) in doc.morphisms.iter().enumerate() {
            if mor_index.insert(m.id.clone(), i).is_some() {
                return malformed(format!("duplicate morphism id {:?}", m.id));
            }
            let s = *obj_index
                .get(&m.src)
                .ok_or_else(|| CatError::Malformed(format!("morphism {:?}: unknown source {:?}", m.id, m.src)))?;
            let t = *obj_index
                .get(&m.tgt)
                .ok_or_else(|| CatError::Malformed(format!("morphism {:?}: unknown target {:?}", m.id, m.tgt)))?;
            src.push(s);
            tgt.push(t);
        }
        let mut identity = vec![None; doc.objects.len()];
        for (o, m) in &doc.identities {
            let oi =
                *obj_index.get(o).ok_or_else(|| CatError::Malformed(format!("identity for unknown object {o:?}")))?;
            let mi = *mor_index
                .get(m)
                .ok_or_else(|| CatError::Malformed(format!("identity of {o:?} is unknown morphism {m:?}")))?;
            identity[oi] = Some(mi);
        }
        let mut comp = HashMap::new();
        for [g, f, gf] in &doc.composition {
            let look = |id: &String| {
                mor_index
                    .get(id)
                    .copied()
                    .ok_or_else(|| CatError::Malformed(format!("composition entry names unknown morphism {id:?}")))
            };
            let (gi, fi, gfi) = (look(g)?, look(f)?, look(gf)?);
            if comp.insert((gi, fi), gfi).is_some() {
                return malformed(format!("duplicate composition entry for ({g:?}, {f:?})"));
            }
        }
        Ok(FinCategory {
            objects: doc.objects.clone(),
            morphisms: doc.morphisms.clone(),
            obj_index,
            mor_index,
            src,
            tgt,
            identity,
            comp,
        })
    }

    pub fn to_doc(&self) -> FinCategoryDoc {
        let identities = self
            .identity
            .iter()
            .enumerate()
            .filter_map(|(o, m)| m.map(|m| (self.objects[o].clone(), self.morphisms[m].id.clone())))
            .collect();
        let mut composition: Vec<[String; 3]> = self
            .comp
            .iter()
            .map(|(&(g, f), &gf)| {
                [self.morphisms[g].id.clone(), self.morphisms[f].id.clone(), self.morphisms[gf].id.clone()]
            })
            .collect();
        composition.sort();
        FinCategoryDoc { objects: self.objects.clone(), morphisms: self.morphisms.clone(), identities, composition }
    }

    /// Builds a category from closures over index sets. Used by generated instances.
    pub fn build(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        identities: BTreeMap<String, String>,
        composition: Vec<[String; 3]>,
    ) -> Result<Self> {
        Self::from_doc(&FinCategoryDoc { objects, morphisms, identities, composition })
    }

    /// The category with a single object and a single morphism.
    pub fn terminal() -> Self {
        Self::build(
            vec!["*".into()],
            vec![MorphismDecl { id: "id".into(), src: "*".into(), tgt: "*".into() }],
            [("*".to_string(), "id".to_string())].into_iter().collect(),
            vec![["id".into(), "id".into(), "id".into()]],
        )
        .expect("terminal category is well formed")
    }

    /// Σ_n as a one-object groupoid; morphism ids are the image lists.
    pub fn symmetric_group(n: usize) -> Self {
        let perms = Perm::all(n);
        let morphisms =
            perms.iter().map(|p| MorphismDecl { id: p.to_string(), src: "*".into(), tgt: "*".into() }).collect();
        let mut composition = Vec::new();
        for g in &perms {
            for f in &perms {
                composition.push([g.to_string(), f.to_string(), g.after(f).to_string()]);
            }
        }
        let identities = [("*".to_string(), Perm::identity(n).to_string())].into_iter().collect();
        Self::build(vec!["*".into()], morphisms, identities, composition).expect("symmetric group is well formed")
    }

    /// The discrete category on the given objects.
    pub fn discrete(objects: &[&str]) -> Self {
        let morphisms = objects
            .iter()
            .map(|o| MorphismDecl { id: format!("id_{o}"), src: o.to_string(), tgt: o.to_string() })
            .collect();
        let identities = objects.iter().map(|o| (o.to_string(), format!("id_{o}"))).collect();
        let composition = objects.iter().map(|o| [format!("id_{o}"), format!("id_{o}"), format!("id_{o}")]).collect();
        Self::build(objects.iter().map(|o| o.to_string()).collect(), morphisms, identities, composition)
            .expect("discrete category is well formed")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismDecl] {
        &self.morphisms
    }

    pub fn has_object(&self, id: &str) -> bool {
        self.obj_index.contains_key(id)
    }

    pub fn morphism(&self, id: &str) -> Result<&MorphismDecl> {
        self.mor_index
            .get(id)
            .map(|&i| &self.morphisms[i])
            .ok_or_else(|| CatError::Malformed(format!("unknown morphism {id:?}")))
    }

    pub fn identity(&self, obj: &str) -> Result<&str> {
        let o = *self.obj_index.get(obj).ok_or_else(|| CatError::Malformed(format!("unknown object {obj:?}")))?;
        self.identity[o]
            .map(|m| self.morphisms[m].id.as_str())
            .ok_or_else(|| CatError::Malformed(format!("object {obj:?} has no identity")))
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &str, f: &str) -> Result<&str> {
        let gi = self.mor_idx(g)?;
        let fi = self.mor_idx(f)?;
        if self.tgt[fi] != self.src[gi] {
            return not_composable(format!("{g} ∘ {f}"));
        }
        self.comp
            .get(&(gi, fi))
            .map(|&m| self.morphisms[m].id.as_str())
            .ok_or_else(|| CatError::Malformed(format!("composition table has no entry for ({g}, {f})")))
    }

    pub fn hom(&self, a: &str, b: &str) -> Vec<&str> {
        self.morphisms.iter().filter(|m| m.src == a && m.tgt == b).map(|m| m.id.as_str()).collect()
    }

    /// An inverse of `f`, if one exists.
    pub fn inverse(&self, f: &str) -> Option<&str> {
        let m = self.morphism(f).ok()?;
        let id_a = self.identity(&m.src).ok()?;
        let id_b = self.identity(&m.tgt).ok()?;
        self.hom(&m.tgt, &m.src)
            .into_iter()
            .find(|g| self.compose(g, f).ok() == Some(id_a) && self.compose(f, g).ok() == Some(id_b))
    }

    pub fn is_iso(&self, f: &str) -> bool {
        self.inverse(f).is_some()
    }

    fn mor_idx(&self, id: &str) -> Result<usize> {
        self.mor_index.get(id).copied().ok_or_else(|| CatError::Malformed(format!("unknown morphism {id:?}")))
    }
}

/// Checks the category axioms entrywise.
pub fn validate_category(c: &FinCategory) -> CheckReport {
    let mut report = CheckReport::new("category");
    let n = c.morphisms.len();

    let mut ids = LawRecord::new("identity-typing", "identities");
    for (o, m) in c.identity.iter().enumerate() {
        ids.tick();
        match m {
            None => ids.fail(format!("object {} has no identity", c.objects[o])),
            Some(m) if c.src[*m] != o || c.tgt[*m] != o => {
                ids.fail(format!("identity {} of {} is not an endomorphism", c.morphisms[*m].id, c.objects[o]))
            }
            _ => {}
        }
    }
    let ids_ok = ids.passed();
    report.push(ids);

    let mut domain = LawRecord::new("composition-domain", "composition on composable pairs");
    for g in 0..n {
        for f in 0..n {
            let composable = c.tgt[f] == c.src[g];
            let entry = c.comp.get(&(g, f));
            domain.tick();
            match (composable, entry) {
                (true, None) => {
                    domain.fail(format!("missing composite of ({}, {})", c.morphisms[g].id, c.morphisms[f].id))
                }
                (false, Some(_)) => {
                    domain.fail(format!("entry for non-composable pair ({}, {})", c.morphisms[g].id, c.morphisms[f].id))
                }
                (true, Some(&gf)) if c.src[gf] != c.src[f] || c.tgt[gf] != c.tgt[g] => domain.fail(format!(
                    "composite {} of ({}, {}) has wrong endpoints",
                    c.morphisms[gf].id, c.morphisms[g].id, c.morphisms[f].id
                )),
                _ => {}
            }
        }
    }
    let domain_ok = domain.passed();
    report.push(domain);

    let mut unit = LawRecord::new("identity-laws", "identity laws");
    let mut assoc = LawRecord::new("associativity", "associativity");
    if ids_ok && domain_ok {
        for f in 0..n {
            let ida = c.identity[c.src[f]].unwrap();
            let idb = c.identity[c.tgt[f]].unwrap();
            let left = c.comp[&(idb, f)];
            let right = c.comp[&(f, ida)];
            unit.expect(left == f && right == f, || format!("identity law fails at {}", c.morphisms[f].id));
        }
        for f in 0..n {
            for g in (0..n).filter(|&g| c.src[g] == c.tgt[f]) {
                let gf = c.comp[&(g, f)];
                for h in (0..n).filter(|&h| c.src[h] == c.tgt[g]) {
                    let hg = c.comp[&(h, g)];
                    let l = c.comp[&(h, gf)];
                    let r = c.comp[&(hg, f)];
                    assoc.expect(l == r, || {
                        format!(
                            "({} ∘ {}) ∘ {} != {} ∘ ({} ∘ {})",
                            c.morphisms[h].id,
                            c.morphisms[g].id,
                            c.morphisms[f].id,
                            c.morphisms[h].id,
                            c.morphisms[g].id,
                            c.morphisms[f].id
                        )
                    });
                }
            }
        }
    } else {
        unit.inconclusive("skipped: identity or composition table malformed");
        assoc.inconclusive("skipped: identity or composition table malformed");
    }
    report.push(unit);
    report.push(assoc);
    report
}

/// Partition of the objects into isomorphism classes, each sorted, classes
/// ordered by their least id (the representative).
pub fn iso_classes(c: &FinCategory) -> Vec<Vec<String>> {
    let n = c.objects.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for m in &c.morphisms {
        if m.src != m.tgt && c.is_iso(&m.id) {
            let a = root(&mut parent, c.obj_index[&m.src]);
            let b = root(&mut parent, c.obj_index[&m.tgt]);
            parent[a] = b;
        }
    }
    let mut classes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..n {
        let r = root(&mut parent, i);
        classes.entry(r).or_default().push(c.objects[i].clone());
    }
    let mut out: Vec<Vec<String>> = classes
        .into_values()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// A composable sequence of morphisms, first-applied first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NervePath(pub Vec<String>);

impl NervePath {
    pub fn new<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Self {
        NervePath(ids.into_iter().map(Into::into).collect())
    }

    pub fn is_composable(&self, c: &FinCategory) -> bool {
        self.0.windows(2).all(|w| match (c.morphism(&w[0]), c.morphism(&w[1])) {
            (Ok(f), Ok(g)) => f.tgt == g.src,
            _ => false,
        }) && self.0.iter().all(|m| c.morphism(m).is_ok())
    }
}

/// The composite of a nonempty composable path.
pub fn spine_composite(c: &FinCategory, p: &NervePath) -> Result<String> {
    if p.0.is_empty() {
        return not_composable("empty path");
    }
    if !p.is_composable(c) {
        return not_composable(format!("path {:?} is not composable", p.0));
    }
    let mut acc = p.0[0].clone();
    for g in &p.0[1..] {
        acc = c.compose(g, &acc)?.to_string();
    }
    Ok(acc)
}

/// The composite of a path evaluated along a specific bracketing.
pub fn bracketed_composite(c: &FinCategory, p: &NervePath, b: &Bracket) -> Result<String> {
    if b.lo() != 0 || b.hi() != p.0.len() || !b.is_well_formed() {
        return not_composable(format!("bracketing {b:?} does not cover the path"));
    }
    fn go(c: &FinCategory, p: &NervePath, b: &Bracket) -> Result<String> {
        match b {
            Bracket::Leaf(i) => Ok(p.0[*i].clone()),
            Bracket::Comp(o, i) => {
                let outer = go(c, p, o)?;
                let inner = go(c, p, i)?;
                Ok(c.compose(&outer, &inner)?.to_string())
            }
        }
    }
    go(c, p, b)
}

/// A functor between finite categories given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinFunctor {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

/// Checks that `f` is a functor `src -> tgt`.
pub fn validate_functor(f: &FinFunctor, src: &FinCategory, tgt: &FinCategory) -> CheckReport {
    let mut report = CheckReport::new("functor");
    let mut typing = LawRecord::new("typing", "functor endpoints");
    for m in src.morphisms() {
        let ok = (|| {
            let fm = f.morphisms.get(&m.id)?;
            let d = tgt.morphism(fm).ok()?;
            Some(f.objects.get(&m.src)? == &d.src && f.objects.get(&m.tgt)? == &d.tgt)
        })()
        .unwrap_or(false);
        typing.expect(ok, || format!("morphism {} is mapped inconsistently", m.id));
    }
    let typed = typing.passed();
    report.push(typing);
    let mut ids = LawRecord::new("identities", "functor preserves identities");
    let mut comp = LawRecord::new("composition", "functor preserves composition");
    if typed {
        for o in src.objects() {
            let ok = (|| Some(f.morphisms.get(src.identity(o).ok()?)? == tgt.identity(f.objects.get(o)?).ok()?))()
                .unwrap_or(false);
            ids.expect(ok, || format!("identity of {o}"));
        }
        for g in src.morphisms() {
            for fm in src.morphisms().iter().filter(|fm| fm.tgt == g.src) {
                let ok = (|| {
                    let gf = src.compose(&g.id, &fm.id).ok()?;
                    let lhs = f.morphisms.get(gf)?;
                    let rhs = tgt.compose(f.morphisms.get(&g.id)?, f.morphisms.get(&fm.id)?).ok()?;
                    Some(lhs == rhs)
                })()
                .unwrap_or(false);
                comp.expect(ok, || format!("F({} ∘ {}) != F{} ∘ F{}", g.id, fm.id, g.id, fm.id));
            }
        }
    } else {
        ids.inconclusive("skipped: typing failed");
        comp.inconclusive("skipped: typing failed");
    }
    report.push(ids);
    report.push(comp);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric_group(n: usize) -> (FinCategory, Vec<Perm>) {
        (FinCategory::symmetric_group(n), Perm::all(n))
    }

    #[test]
    fn terminal_category_is_valid() {
        assert!(validate_category(&FinCategory::terminal()).passed());
    }

    #[test]
    fn corrupted_identity_law_is_caught() {
        // objects a, b; f: a -> b, g: a -> b; comp(id_b, f) = g
        let doc = FinCategoryDoc {
            objects: vec!["a".into(), "b".into()],
            morphisms: vec![
                MorphismDecl { id: "ida".into(), src: "a".into(), tgt: "a".into() },
                MorphismDecl { id: "idb".into(), src: "b".into(), tgt: "b".into() },
                MorphismDecl { id: "f".into(), src: "a".into(), tgt: "b".into() },
                MorphismDecl { id: "g".into(), src: "a".into(), tgt: "b".into() },
            ],
            identities: [("a".into(), "ida".into()), ("b".into(), "idb".into())].into_iter().collect(),
            composition: vec![
                ["ida".into(), "ida".into(), "ida".into()],
                ["idb".into(), "idb".into(), "idb".into()],
                ["idb".into(), "f".into(), "g".into()],
                ["idb".into(), "g".into(), "g".into()],
                ["f".into(), "ida".into(), "f".into()],
                ["g".into(), "ida".into(), "g".into()],
            ],
        };
        let c = FinCategory::from_doc(&doc).unwrap();
        let r = validate_category(&c);
        assert!(!r.passed());
        let rec = r.record("identity-laws").unwrap();
        assert!(rec.witness.as_deref().unwrap().contains(" f"), "{rec:?}");
    }

    #[test]
    fn dangling_ids_are_malformed_not_failures() {
        let doc = FinCategoryDoc {
            objects: vec!["a".into()],
            morphisms: vec![MorphismDecl { id: "f".into(), src: "a".into(), tgt: "zzz".into() }],
            identities: BTreeMap::new(),
            composition: vec![],
        };
        assert!(matches!(FinCategory::from_doc(&doc), Err(CatError::Malformed(_))));
    }

    #[test]
    fn symmetric_group_three_is_valid() {
        let (c, perms) = symmetric_group(3);
        assert!(validate_category(&c).passed());
        // oracle: every entry agrees with permutation composition
        for g in &perms {
            for f in &perms {
                assert_eq!(c.compose(&g.to_string(), &f.to_string()).unwrap(), g.after(f).to_string());
            }
        }
    }

    #[test]
    fn iso_classes_examples() {
        assert_eq!(iso_classes(&FinCategory::discrete(&["a", "b"])), vec![vec!["a"], vec!["b"]]);
        let (c, _) = symmetric_group(3);
        assert_eq!(iso_classes(&c).len(), 1);
    }

    #[test]
    fn spine_composite_examples() {
        let (c, perms) = symmetric_group(3);
        let f = perms[3].to_string();
        assert_eq!(spine_composite(&c, &NervePath::new([f.clone()])).unwrap(), f);
        let path: Vec<Perm> =
            vec![perms[1].clone(), perms[4].clone(), perms[2].clone(), perms[5].clone(), perms[3].clone()];
        let expected = path.iter().skip(1).fold(path[0].clone(), |acc, p| p.after(&acc));
        let np = NervePath::new(path.iter().map(|p| p.to_string()));
        assert_eq!(spine_composite(&c, &np).unwrap(), expected.to_string());
        assert!(spine_composite(&c, &NervePath(vec![])).is_err());
    }
}
