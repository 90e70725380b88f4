//! Bicategories given by tables: one [`FinCategory`] per hom, with horizontal
//! composition, units, associators and unitors listed explicitly.
//!
//! 1-cell ids and 2-cell ids must be unique across the whole presentation.

use super::Bicategory;
use crate::error::{malformed, CatError, Result};
use crate::fincat::{FinCategory, FinCategoryDoc};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    pub src: String,
    pub tgt: String,
    /// Objects are the 1-cells `src -> tgt`, morphisms the 2-cells.
    pub category: FinCategoryDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcompDoc {
    /// Entries `[g, f, g * f]`.
    pub one_cells: Vec<[String; 3]>,
    /// Entries `[b, a, b * a]`.
    pub two_cells: Vec<[String; 3]>,
}

/// Serialized form of a [`PresentedBicategory`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedBicategoryDoc {
    pub objects: Vec<String>,
    pub homs: Vec<HomDoc>,
    pub hcomp: HcompDoc,
    /// Unit 1-cell of each object.
    pub identity: BTreeMap<String, String>,
    /// Entries `[h, g, f, α_{h,g,f}]`.
    pub assoc: Vec<[String; 4]>,
    pub lunit: BTreeMap<String, String>,
    pub runit: BTreeMap<String, String>,
}

type Pair = (String, String);

#[derive(Debug, Clone)]
pub struct PresentedBicategory {
    objects: Vec<String>,
    homs: BTreeMap<Pair, FinCategory>,
    one_home: HashMap<String, Pair>,
    two_home: HashMap<String, Pair>,
    hc1: HashMap<Pair, String>,
    hc2: HashMap<Pair, String>,
    unit: BTreeMap<String, String>,
    assoc: HashMap<(String, String, String), String>,
    lunit: BTreeMap<String, String>,
    runit: BTreeMap<String, String>,
}

impl PresentedBicategory {
    /// Resolves and type-checks every table. Missing or mistyped entries are
    /// [`CatError::Malformed`]; law violations are left to the validator.
    pub fn from_doc(doc: &PresentedBicategoryDoc) -> Result<Self> {
        let mut homs = BTreeMap::new();
        let mut one_home = HashMap::new();
        let mut two_home = HashMap::new();
        for h in &doc.homs {
            for o in [&h.src, &h.tgt] {
                if !doc.objects.contains(o) {
                    return malformed(format!("hom names unknown object {o:?}"));
                }
            }
            let key = (h.src.clone(), h.tgt.clone());
            let cat = FinCategory::from_doc(&h.category)?;
            for f in cat.objects() {
                if one_home.insert(f.clone(), key.clone()).is_some() {
                    return malformed(format!("1-cell id {f:?} used twice"));
                }
            }
            for m in cat.morphisms() {
                if two_home.insert(m.id.clone(), key.clone()).is_some() {
                    return malformed(format!("2-cell id {:?} used twice", m.id));
                }
            }
            if homs.insert(key, cat).is_some() {
                return malformed(format!("hom ({}, {}) listed twice", h.src, h.tgt));
            }
        }
        for a in &doc.objects {
            for b in &doc.objects {
                homs.entry((a.clone(), b.clone())).or_insert_with(|| FinCategory::discrete(&[]));
            }
        }
        let mut b = PresentedBicategory {
            objects: doc.objects.clone(),
            homs,
            one_home,
            two_home,
            hc1: HashMap::new(),
            hc2: HashMap::new(),
            unit: doc.identity.clone(),
            assoc: HashMap::new(),
            lunit: doc.lunit.clone(),
            runit: doc.runit.clone(),
        };
        for [g, f, gf] in &doc.hcomp.one_cells {
            if b.hc1.insert((g.clone(), f.clone()), gf.clone()).is_some() {
                return malformed(format!("duplicate hcomp entry for 1-cells ({g}, {f})"));
            }
        }
        for [y, x, yx] in &doc.hcomp.two_cells {
            if b.hc2.insert((y.clone(), x.clone()), yx.clone()).is_some() {
                return malformed(format!("duplicate hcomp entry for 2-cells ({y}, {x})"));
            }
        }
        for [h, g, f, a] in &doc.assoc {
            if b.assoc.insert((h.clone(), g.clone(), f.clone()), a.clone()).is_some() {
                return malformed(format!("duplicate associator for ({h}, {g}, {f})"));
            }
        }
        b.check_tables()?;
        Ok(b)
    }

    fn check_tables(&self) -> Result<()> {
        let home1 =
            |f: &str| self.one_home.get(f).cloned().ok_or_else(|| CatError::Malformed(format!("unknown 1-cell {f:?}")));
        let home2 =
            |a: &str| self.two_home.get(a).cloned().ok_or_else(|| CatError::Malformed(format!("unknown 2-cell {a:?}")));
        for o in &self.objects {
            let i = self.unit.get(o).ok_or_else(|| CatError::Malformed(format!("object {o:?} has no unit")))?;
            if home1(i)? != (o.clone(), o.clone()) {
                return malformed(format!("unit {i:?} of {o:?} is not an endo-1-cell"));
            }
        }
        // horizontal composition of 1-cells
        for ((g, f), gf) in &self.hc1 {
            let ((b, c), (a, b2)) = (home1(g)?, home1(f)?);
            if b != b2 || home1(gf)? != (a, c) {
                return malformed(format!("hcomp entry ({g}, {f}) -> {gf} is mistyped"));
            }
        }
        let cells: Vec<&String> = self.one_home.keys().collect();
        for g in &cells {
            for f in &cells {
                if self.one_home[*f].1 == self.one_home[*g].0 && !self.hc1.contains_key(&((*g).clone(), (*f).clone())) {
                    return malformed(format!("hcomp table has no entry for 1-cells ({g}, {f})"));
                }
            }
        }
        for ((y, x), yx) in &self.hc2 {
            let (hy, hx) = (home2(y)?, home2(x)?);
            if hy.0 != hx.1 || home2(yx)? != (hx.0.clone(), hy.1.clone()) {
                return malformed(format!("hcomp entry ({y}, {x}) -> {yx} is mistyped"));
            }
            let want_src = &self.hc1[&(self.two_src(y), self.two_src(x))];
            let want_tgt = &self.hc1[&(self.two_tgt(y), self.two_tgt(x))];
            if &self.two_src(yx) != want_src || &self.two_tgt(yx) != want_tgt {
                return malformed(format!("hcomp entry ({y}, {x}) -> {yx} has the wrong boundary"));
            }
        }
        let cells2: Vec<&String> = self.two_home.keys().collect();
        for y in &cells2 {
            for x in &cells2 {
                if self.two_home[*x].1 == self.two_home[*y].0 && !self.hc2.contains_key(&((*y).clone(), (*x).clone())) {
                    return malformed(format!("hcomp table has no entry for 2-cells ({y}, {x})"));
                }
            }
        }
        // structure cells
        for ((h, g, f), a) in &self.assoc {
            home2(a)?;
            let gf = self.hc1.get(&(g.clone(), f.clone()));
            let hg = self.hc1.get(&(h.clone(), g.clone()));
            let (Some(gf), Some(hg)) = (gf, hg) else {
                return malformed(format!("associator for non-composable ({h}, {g}, {f})"));
            };
            if self.two_src(a) != self.hc1[&(h.clone(), gf.clone())]
                || self.two_tgt(a) != self.hc1[&(hg.clone(), f.clone())]
            {
                return malformed(format!("associator {a} for ({h}, {g}, {f}) has the wrong boundary"));
            }
        }
        for h in &cells {
            for g in &cells {
                if self.one_home[*h].0 != self.one_home[*g].1 {
                    continue;
                }
                for f in &cells {
                    if self.one_home[*g].0 == self.one_home[*f].1
                        && !self.assoc.contains_key(&((*h).clone(), (*g).clone(), (*f).clone()))
                    {
                        return malformed(format!("no associator for ({h}, {g}, {f})"));
                    }
                }
            }
        }
        for f in &cells {
            let (a, b) = &self.one_home[*f];
            for (table, name, unit_side) in [(&self.lunit, "left", b), (&self.runit, "right", a)] {
                let c = table.get(*f).ok_or_else(|| CatError::Malformed(format!("no {name} unitor for {f}")))?;
                home2(c)?;
                let i = &self.unit[unit_side];
                let src = if name == "left" { (i.clone(), (*f).clone()) } else { ((*f).clone(), i.clone()) };
                if self.two_src(c) != self.hc1[&src] || &self.two_tgt(c) != *f {
                    return malformed(format!("{name} unitor {c} of {f} has the wrong boundary"));
                }
            }
        }
        Ok(())
    }

    pub fn to_doc(&self) -> PresentedBicategoryDoc {
        let homs = self
            .homs
            .iter()
            .filter(|(_, c)| !c.objects().is_empty())
            .map(|((s, t), c)| HomDoc { src: s.clone(), tgt: t.clone(), category: c.to_doc() })
            .collect();
        let sorted3 = |m: &HashMap<Pair, String>| {
            let mut v: Vec<[String; 3]> = m.iter().map(|((a, b), c)| [a.clone(), b.clone(), c.clone()]).collect();
            v.sort();
            v
        };
        let mut assoc: Vec<[String; 4]> =
            self.assoc.iter().map(|((h, g, f), a)| [h.clone(), g.clone(), f.clone(), a.clone()]).collect();
        assoc.sort();
        PresentedBicategoryDoc {
            objects: self.objects.clone(),
            homs,
            hcomp: HcompDoc { one_cells: sorted3(&self.hc1), two_cells: sorted3(&self.hc2) },
            identity: self.unit.clone(),
            assoc,
            lunit: self.lunit.clone(),
            runit: self.runit.clone(),
        }
    }

    /// A category as a bicategory with only identity 2-cells. The 2-cell on a
    /// 1-cell `f` is named `id_f`.
    pub fn locally_discrete(c: &FinCategory) -> Result<Self> {
        let mut homs = Vec::new();
        for a in c.objects() {
            for b in c.objects() {
                let ms = c.hom(a, b);
                if !ms.is_empty() {
                    homs.push(HomDoc { src: a.clone(), tgt: b.clone(), category: FinCategory::discrete(&ms).to_doc() });
                }
            }
        }
        let id = |f: &str| format!("id_{f}");
        let mut one_cells = Vec::new();
        let mut two_cells = Vec::new();
        let mut assoc = Vec::new();
        for g in c.morphisms() {
            for f in c.morphisms().iter().filter(|f| f.tgt == g.src) {
                let gf = c.compose(&g.id, &f.id)?.to_string();
                one_cells.push([g.id.clone(), f.id.clone(), gf.clone()]);
                two_cells.push([id(&g.id), id(&f.id), id(&gf)]);
                for h in c.morphisms().iter().filter(|h| h.src == g.tgt) {
                    let hgf = c.compose(&h.id, &gf)?;
                    assoc.push([h.id.clone(), g.id.clone(), f.id.clone(), id(hgf)]);
                }
            }
        }
        let identity: BTreeMap<String, String> =
            c.objects().iter().map(|o| Ok((o.clone(), c.identity(o)?.to_string()))).collect::<Result<_>>()?;
        let unitors: BTreeMap<String, String> = c.morphisms().iter().map(|f| (f.id.clone(), id(&f.id))).collect();
        Self::from_doc(&PresentedBicategoryDoc {
            objects: c.objects().to_vec(),
            homs,
            hcomp: HcompDoc { one_cells, two_cells },
            identity,
            assoc,
            lunit: unitors.clone(),
            runit: unitors,
        })
    }

    /// Tabulates a bicategory whose enumerated cells are closed under all
    /// operations. Cells are named by their `Debug` form.
    pub fn from_bicategory<B: Bicategory>(b: &B) -> Result<Self> {
        let name = |x: &dyn std::fmt::Debug| format!("{x:?}");
        let objs = b.objects();
        let mut homs = Vec::new();
        let mut all1: Vec<B::One> = Vec::new();
        let mut all2: Vec<B::Two> = Vec::new();
        let mut known2 = std::collections::HashSet::new();
        for x in &objs {
            for y in &objs {
                let ones = b.one_cells(x, y);
                if ones.is_empty() {
                    continue;
                }
                let mut morphisms = Vec::new();
                let mut cells = Vec::new();
                for f in &ones {
                    for g in &ones {
                        for a in b.two_cells(f, g) {
                            morphisms.push(crate::fincat::MorphismDecl { id: name(&a), src: name(f), tgt: name(g) });
                            known2.insert(name(&a));
                            cells.push(a);
                        }
                    }
                }
                let mut composition = Vec::new();
                for c2 in &cells {
                    for c1 in cells.iter().filter(|c1| b.two_tgt(c1) == b.two_src(c2)) {
                        composition.push([name(c2), name(c1), name(&b.vcomp(c2, c1)?)]);
                    }
                }
                let identities = ones.iter().map(|f| (name(f), name(&b.id2(f)))).collect();
                let category = FinCategoryDoc {
                    objects: ones.iter().map(|f| name(f)).collect(),
                    morphisms,
                    identities,
                    composition,
                };
                homs.push(HomDoc { src: name(x), tgt: name(y), category });
                all1.extend(ones);
                all2.extend(cells);
            }
        }
        let mut one_cells = Vec::new();
        let mut assoc = Vec::new();
        for g in &all1 {
            for f in all1.iter().filter(|f| b.one_tgt(f) == b.one_src(g)) {
                one_cells.push([name(g), name(f), name(&b.comp1(g, f)?)]);
                for h in all1.iter().filter(|h| b.one_src(h) == b.one_tgt(g)) {
                    assoc.push([name(h), name(g), name(f), name(&b.assoc(h, g, f)?)]);
                }
            }
        }
        let mut two_cells = Vec::new();
        for y in &all2 {
            for x in all2.iter().filter(|x| b.one_tgt(&b.two_src(x)) == b.one_src(&b.two_src(y))) {
                two_cells.push([name(y), name(x), name(&b.hcomp(y, x)?)]);
            }
        }
        for [_, _, r] in &two_cells {
            if !known2.contains(r) {
                return malformed(format!("enumerated cells are not closed: {r} is missing"));
            }
        }
        let identity = objs.iter().map(|o| (name(o), name(&b.id1(o)))).collect();
        let lunit = all1.iter().map(|f| Ok((name(f), name(&b.lunit(f)?)))).collect::<Result<_>>()?;
        let runit = all1.iter().map(|f| Ok((name(f), name(&b.runit(f)?)))).collect::<Result<_>>()?;
        Self::from_doc(&PresentedBicategoryDoc {
            objects: objs.iter().map(|o| name(o)).collect(),
            homs,
            hcomp: HcompDoc { one_cells, two_cells },
            identity,
            assoc,
            lunit,
            runit,
        })
    }

    pub fn hom(&self, a: &str, b: &str) -> Option<&FinCategory> {
        self.homs.get(&(a.to_string(), b.to_string()))
    }

    fn home_of_two(&self, a: &str) -> &FinCategory {
        let key = self.two_home.get(a).unwrap_or_else(|| panic!("unknown 2-cell {a:?}"));
        &self.homs[key]
    }

    /// Replaces one associator component; used to build corrupted fixtures.
    pub fn with_assoc(mut self, h: &str, g: &str, f: &str, cell: &str) -> Result<Self> {
        self.assoc.insert((h.into(), g.into(), f.into()), cell.into());
        self.check_tables()?;
        Ok(self)
    }
}

impl Bicategory for PresentedBicategory {
    type Obj = String;
    type One = String;
    type Two = String;

    fn one_src(&self, f: &String) -> String {
        self.one_home.get(f).unwrap_or_else(|| panic!("unknown 1-cell {f:?}")).0.clone()
    }

    fn one_tgt(&self, f: &String) -> String {
        self.one_home.get(f).unwrap_or_else(|| panic!("unknown 1-cell {f:?}")).1.clone()
    }

    fn two_src(&self, a: &String) -> String {
        self.home_of_two(a).morphism(a).expect("2-cell is registered").src.clone()
    }

    fn two_tgt(&self, a: &String) -> String {
        self.home_of_two(a).morphism(a).expect("2-cell is registered").tgt.clone()
    }

    fn id1(&self, a: &String) -> String {
        self.unit[a].clone()
    }

    fn id2(&self, f: &String) -> String {
        let key = &self.one_home[f];
        self.homs[key].identity(f).expect("hom category has identities").to_string()
    }

    fn comp1(&self, g: &String, f: &String) -> Result<String> {
        self.hc1.get(&(g.clone(), f.clone())).cloned().ok_or_else(|| CatError::NotComposable(format!("{g} * {f}")))
    }

    fn vcomp(&self, b: &String, a: &String) -> Result<String> {
        if self.two_home.get(a) != self.two_home.get(b) {
            return Err(CatError::NotComposable(format!("{b} ∘ {a}: different homs")));
        }
        self.home_of_two(a).compose(b, a).map(str::to_string)
    }

    fn hcomp(&self, b: &String, a: &String) -> Result<String> {
        self.hc2.get(&(b.clone(), a.clone())).cloned().ok_or_else(|| CatError::NotComposable(format!("{b} * {a}")))
    }

    fn assoc(&self, h: &String, g: &String, f: &String) -> Result<String> {
        self.assoc
            .get(&(h.clone(), g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| CatError::NotComposable(format!("α for ({h}, {g}, {f})")))
    }

    fn lunit(&self, f: &String) -> Result<String> {
        self.lunit.get(f).cloned().ok_or_else(|| CatError::Malformed(format!("no left unitor for {f}")))
    }

    fn runit(&self, f: &String) -> Result<String> {
        self.runit.get(f).cloned().ok_or_else(|| CatError::Malformed(format!("no right unitor for {f}")))
    }

    fn inverse2(&self, a: &String) -> Option<String> {
        self.home_of_two(a).inverse(a).map(str::to_string)
    }

    fn objects(&self) -> Vec<String> {
        self.objects.clone()
    }

    fn one_cells(&self, a: &String, b: &String) -> Vec<String> {
        self.homs.get(&(a.clone(), b.clone())).map(|c| c.objects().to_vec()).unwrap_or_default()
    }

    fn two_cells(&self, f: &String, g: &String) -> Vec<String> {
        let key = &self.one_home[f];
        self.homs[key].hom(f, g).into_iter().map(str::to_string).collect()
    }
}
