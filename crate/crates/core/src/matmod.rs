//! Matrices over a strict bimonoidal category, weakly invertible matrices,
//! and the bicategory `Mod_R` with block sum and the permutation braiding.
//!
//! Composition in `Mod_R` is matrix multiplication in written order:
//! `g * f = g · f`. Entry arithmetic is exact; the base bound only limits
//! which matrices are enumerated as 1-cells.

use crate::bicat::{run_law, validate_strict_smb, Bicategory, MonoidalCategory, StrictSmb};
use crate::bimonoid::{grothendieck, BaseKind, GrElem, RMor, SemiringSkeleton, SemiringTables, StrictBimonoidal};
use crate::error::{malformed, CatError, Result};
use crate::report::{CheckReport, LawRecord};
use crate::sampling::Budget;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An `n × n` matrix of objects, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixObj {
    pub n: usize,
    pub entries: Vec<usize>,
}

/// An `n × n` matrix of automorphisms, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixMor {
    pub n: usize,
    pub entries: Vec<RMor>,
}

fn fmt_rows<T>(f: &mut fmt::Formatter<'_>, n: usize, xs: &[T], each: impl Fn(&T) -> String) -> fmt::Result {
    write!(f, "[")?;
    for i in 0..n {
        if i > 0 {
            write!(f, ",")?;
        }
        let row: Vec<String> = xs[i * n..(i + 1) * n].iter().map(&each).collect();
        write!(f, "[{}]", row.join(","))?;
    }
    write!(f, "]")
}

impl fmt::Debug for MatrixObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, self.n, &self.entries, |x| x.to_string())
    }
}

impl fmt::Debug for MatrixMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, self.n, &self.entries, |x| format!("{x:?}"))
    }
}

impl MatrixObj {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != n * n {
            return malformed(format!("{} entries for a {n}×{n} matrix", entries.len()));
        }
        Ok(MatrixObj { n, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return malformed("matrix rows are not square");
        }
        Self::new(n, rows.concat())
    }

    pub fn at(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n.max(1)).map(<[usize]>::to_vec).take(self.n).collect()
    }
}

impl MatrixMor {
    pub fn at(&self, i: usize, j: usize) -> &RMor {
        &self.entries[i * self.n + j]
    }

    pub fn source(&self) -> MatrixObj {
        MatrixObj { n: self.n, entries: self.entries.iter().map(|e| e.obj).collect() }
    }
}

fn same_dim(u: usize, v: usize) -> Result<()> {
    if u != v {
        return Err(CatError::NotComposable(format!("{u}×{u} and {v}×{v} matrices")));
    }
    Ok(())
}

fn sum_objs(r: &StrictBimonoidal, xs: impl IntoIterator<Item = usize>) -> usize {
    xs.into_iter().fold(r.zero(), |acc, x| r.add(acc, x))
}

fn sum_mors<'a>(r: &StrictBimonoidal, xs: impl IntoIterator<Item = &'a RMor>) -> RMor {
    xs.into_iter().fold(r.id(r.zero()), |acc, x| r.sum(&acc, x))
}

/// `W_ik = U_i0 ⊗ V_0k ⊕ .. ⊕ U_i(n-1) ⊗ V_(n-1)k`.
pub fn matmul(r: &StrictBimonoidal, u: &MatrixObj, v: &MatrixObj) -> Result<MatrixObj> {
    same_dim(u.n, v.n)?;
    let n = u.n;
    let entries = (0..n * n)
        .map(|ik| {
            let (i, k) = (ik / n, ik % n);
            sum_objs(r, (0..n).map(|j| r.mul(u.at(i, j), v.at(j, k))))
        })
        .collect();
    Ok(MatrixObj { n, entries })
}

/// As [`matmul`], but refuses results with entries outside the enumerated objects.
pub fn matmul_within_bound(r: &StrictBimonoidal, u: &MatrixObj, v: &MatrixObj) -> Result<MatrixObj> {
    let w = matmul(r, u, v)?;
    if let BaseKind::SymSets { bound } = r.kind() {
        if let Some(x) = w.entries.iter().find(|&&x| x > *bound) {
            return Err(CatError::BoundOverflow(format!("entry {x} of {u:?}·{v:?} exceeds bound {bound}")));
        }
    }
    Ok(w)
}

/// The same formula on matrices of morphisms.
pub fn matmul_mor(r: &StrictBimonoidal, u: &MatrixMor, v: &MatrixMor) -> Result<MatrixMor> {
    same_dim(u.n, v.n)?;
    let n = u.n;
    let entries = (0..n * n)
        .map(|ik| {
            let (i, k) = (ik / n, ik % n);
            let terms: Vec<RMor> = (0..n).map(|j| r.tensor(u.at(i, j), v.at(j, k))).collect();
            sum_mors(r, &terms)
        })
        .collect();
    Ok(MatrixMor { n, entries })
}

/// `a ⊗ (x_0 ⊕ .. ⊕ x_m) -> (a ⊗ x_0) ⊕ .. ⊕ (a ⊗ x_m)` by iterating `δ`.
fn distribute(r: &StrictBimonoidal, a: usize, xs: &[usize]) -> Result<RMor> {
    if a == r.zero() {
        return Ok(r.id(a));
    }
    match xs {
        [] => Ok(r.id(r.zero())),
        [x] => Ok(r.id(r.mul(a, *x))),
        [x, rest @ ..] => {
            let d = r.delta(a, *x, sum_objs(r, rest.iter().copied()));
            let tail = r.sum(&r.id(r.mul(a, *x)), &distribute(r, a, rest)?);
            r.compose(&tail, &d)
        }
    }
}

/// The block permutation of `⊕_p s_p` taking the labelled blocks into sorted
/// label order, built from adjacent `γ_⊕` swaps. Empty blocks are dropped
/// first, since `γ` with a zero argument is the identity.
fn reorder<L: Ord + Clone>(r: &StrictBimonoidal, mut blocks: Vec<(L, usize)>) -> Result<RMor> {
    blocks.retain(|b| b.1 != r.zero());
    let total = sum_objs(r, blocks.iter().map(|b| b.1));
    let mut acc = r.id(total);
    let len = blocks.len();
    for pass in 0..len {
        for p in 0..len.saturating_sub(pass + 1) {
            if blocks[p].0 > blocks[p + 1].0 {
                let before = sum_objs(r, blocks[..p].iter().map(|b| b.1));
                let after = sum_objs(r, blocks[p + 2..].iter().map(|b| b.1));
                let swap = r.sum(&r.sum(&r.id(before), &r.gamma(blocks[p].1, blocks[p + 1].1)), &r.id(after));
                acc = r.compose(&swap, &acc)?;
                blocks.swap(p, p + 1);
            }
        }
    }
    Ok(acc)
}

/// `α: U·(V·W) -> (U·V)·W`. Entry `(i, l)` distributes each `U_ij` over
/// `⊕_k V_jk ⊗ W_kl` with `δ`, then reorders the summands from `j`-major to
/// `k`-major with `γ_⊕`.
pub fn matrix_associator(r: &StrictBimonoidal, u: &MatrixObj, v: &MatrixObj, w: &MatrixObj) -> Result<MatrixMor> {
    same_dim(u.n, v.n)?;
    same_dim(v.n, w.n)?;
    let n = u.n;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for l in 0..n {
            let mut dist = r.id(r.zero());
            let mut blocks = Vec::with_capacity(n * n);
            for j in 0..n {
                let inner: Vec<usize> = (0..n).map(|k| r.mul(v.at(j, k), w.at(k, l))).collect();
                dist = r.sum(&dist, &distribute(r, u.at(i, j), &inner)?);
                for (k, x) in inner.iter().enumerate() {
                    blocks.push(((k, j), r.mul(u.at(i, j), *x)));
                }
            }
            entries.push(r.compose(&reorder(r, blocks)?, &dist)?);
        }
    }
    Ok(MatrixMor { n, entries })
}

/// Determinant of the class matrix in the ring completion, by cofactor
/// expansion along rows with memoization on the remaining columns.
pub fn determinant(sk: &SemiringSkeleton, u: &MatrixObj) -> GrElem {
    fn go(
        sk: &SemiringSkeleton,
        m: &[GrElem],
        n: usize,
        row: usize,
        cols: u32,
        memo: &mut HashMap<u32, GrElem>,
    ) -> GrElem {
        if row == n {
            return sk.one();
        }
        if let Some(&d) = memo.get(&cols) {
            return d;
        }
        let mut acc = sk.zero();
        let mut sign_pos = true;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            let term = sk.mul(m[row * n + c], go(sk, m, n, row + 1, cols & !(1 << c), memo));
            acc = sk.add(acc, if sign_pos { term } else { sk.neg(term) });
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc);
        acc
    }
    let m: Vec<GrElem> = u.entries.iter().map(|&x| sk.embed(x)).collect();
    go(sk, &m, u.n, 0, (1u32 << u.n) - 1, &mut HashMap::new())
}

/// Whether the class matrix of `u` is invertible over `Gr_+(π₀ R)`.
pub fn is_weakly_invertible(r: &StrictBimonoidal, u: &MatrixObj) -> Result<bool> {
    let sk = grothendieck(r)?;
    Ok(sk.is_unit(determinant(&sk, u)))
}

/// Block-diagonal `U ⊞ V` with strict zeros off the blocks.
pub fn block_sum(r: &StrictBimonoidal, u: &MatrixObj, v: &MatrixObj) -> MatrixObj {
    let n = u.n + v.n;
    let entries = (0..n * n)
        .map(|ik| match (ik / n, ik % n) {
            (i, k) if i < u.n && k < u.n => u.at(i, k),
            (i, k) if i >= u.n && k >= u.n => v.at(i - u.n, k - u.n),
            _ => r.zero(),
        })
        .collect();
    MatrixObj { n, entries }
}

pub fn block_sum_mor(r: &StrictBimonoidal, u: &MatrixMor, v: &MatrixMor) -> MatrixMor {
    let n = u.n + v.n;
    let entries = (0..n * n)
        .map(|ik| match (ik / n, ik % n) {
            (i, k) if i < u.n && k < u.n => u.at(i, k).clone(),
            (i, k) if i >= u.n && k >= u.n => v.at(i - u.n, k - u.n).clone(),
            _ => r.id(r.zero()),
        })
        .collect();
    MatrixMor { n, entries }
}

pub fn identity_matrix(r: &StrictBimonoidal, n: usize) -> MatrixObj {
    let entries = (0..n * n).map(|ik| if ik / n == ik % n { r.one() } else { r.zero() }).collect();
    MatrixObj { n, entries }
}

pub fn identity_mor(r: &StrictBimonoidal, u: &MatrixObj) -> MatrixMor {
    MatrixMor { n: u.n, entries: u.entries.iter().map(|&x| r.id(x)).collect() }
}

/// `β_{n,m}: n ⊞ m -> m ⊞ n`, with `I_m` in the upper-right and `I_n` in the
/// lower-left block: column `j` carries a one in row `j + m` for `j < n`,
/// and in row `j - n` otherwise.
pub fn beta(r: &StrictBimonoidal, n: usize, m: usize) -> MatrixObj {
    let size = n + m;
    let image = |j: usize| if j < n { j + m } else { j - n };
    let entries = (0..size * size).map(|ik| if image(ik % size) == ik / size { r.one() } else { r.zero() }).collect();
    MatrixObj { n: size, entries }
}

/// `Mod_R` restricted to dimensions `0..=maxdim`, with `GL_n` materialized
/// up to the base bound.
#[derive(Debug, Clone)]
pub struct ModR {
    r: StrictBimonoidal,
    skeleton: SemiringSkeleton,
    maxdim: usize,
    gl: Vec<Vec<MatrixObj>>,
}

/// Refuses enumerations with more candidate matrices than this per dimension.
pub const MAX_CANDIDATES: usize = 2_000_000;

pub fn build_mod(r: StrictBimonoidal, maxdim: usize) -> Result<ModR> {
    let skeleton = grothendieck(&r)?;
    let objs = r.objects();
    let mut gl = Vec::with_capacity(maxdim + 1);
    for n in 0..=maxdim {
        let cells = n * n;
        let count = (objs.len() as f64).powi(cells as i32);
        if count > MAX_CANDIDATES as f64 {
            return Err(CatError::LimitExceeded(format!("{count} candidate {n}×{n} matrices")));
        }
        let mut found = Vec::new();
        let mut digits = vec![0usize; cells];
        loop {
            let u = MatrixObj { n, entries: digits.iter().map(|&d| objs[d]).collect() };
            if skeleton.is_unit(determinant(&skeleton, &u)) {
                found.push(u);
            }
            // odometer over entries, last entry fastest
            let mut pos = cells;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < objs.len() {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
        found.sort();
        gl.push(found);
    }
    Ok(ModR { r, skeleton, maxdim, gl })
}

impl ModR {
    pub fn base(&self) -> &StrictBimonoidal {
        &self.r
    }

    pub fn skeleton(&self) -> &SemiringSkeleton {
        &self.skeleton
    }

    pub fn maxdim(&self) -> usize {
        self.maxdim
    }

    /// The enumerated `GL_n`; empty above `maxdim`.
    pub fn gl(&self, n: usize) -> &[MatrixObj] {
        self.gl.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn to_doc(&self) -> ModDoc {
        let ids = |u: &MatrixObj| -> Vec<Vec<String>> {
            u.rows().iter().map(|row| row.iter().map(|&x| self.r.name(x)).collect()).collect()
        };
        let base = match self.r.kind() {
            BaseKind::SymSets { bound } => BaseDoc::SymSets { bound: *bound },
            BaseKind::Discrete(t) => BaseDoc::Semiring { tables: t.clone() },
        };
        let dims = 0..=self.maxdim;
        ModDoc {
            base,
            maxdim: self.maxdim,
            objects: dims.clone().collect(),
            gl: dims.clone().map(|n| (n.to_string(), self.gl[n].iter().map(ids).collect())).collect(),
            units: dims.clone().map(|n| (n.to_string(), ids(&identity_matrix(&self.r, n)))).collect(),
            braiding: dims
                .clone()
                .flat_map(|n| (0..=self.maxdim).map(move |m| (n, m)))
                .filter(|(n, m)| n + m <= self.maxdim)
                .map(|(n, m)| BraidDoc { n, m, matrix: ids(&beta(&self.r, n, m)) })
                .collect(),
        }
    }

    /// Rebuilds from the base description and checks the listed cells agree.
    pub fn from_doc(doc: &ModDoc) -> Result<Self> {
        let r = match &doc.base {
            BaseDoc::SymSets { bound } => crate::bimonoid::make_sym_sets(*bound)?,
            BaseDoc::Semiring { tables } => crate::bimonoid::make_discrete_semiring(tables.clone())?,
        };
        let m = build_mod(r, doc.maxdim)?;
        let rebuilt = m.to_doc();
        if rebuilt.gl != doc.gl {
            return malformed("listed GL_n cells differ from the weakly invertible matrices of the base");
        }
        if rebuilt.units != doc.units || rebuilt.braiding != doc.braiding || rebuilt.objects != doc.objects {
            return malformed("listed units or braidings differ from the block structure");
        }
        Ok(m)
    }

    /// Parses a matrix of entry ids.
    pub fn parse_matrix(&self, rows: &[Vec<String>]) -> Result<MatrixObj> {
        let parsed: Vec<Vec<usize>> =
            rows.iter().map(|row| row.iter().map(|x| self.r.parse(x)).collect::<Result<_>>()).collect::<Result<_>>()?;
        MatrixObj::from_rows(&parsed)
    }

    fn is_permutation_matrix(&self, u: &MatrixObj) -> bool {
        let (zero, one) = (self.r.zero(), self.r.one());
        let ok_entries = u.entries.iter().all(|&x| x == zero || x == one);
        let rows_ok = (0..u.n).all(|i| (0..u.n).filter(|&j| u.at(i, j) == one).count() == 1);
        let cols_ok = (0..u.n).all(|j| (0..u.n).filter(|&i| u.at(i, j) == one).count() == 1);
        ok_entries && rows_ok && cols_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BaseDoc {
    SymSets { bound: usize },
    Semiring { tables: SemiringTables },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidDoc {
    pub n: usize,
    pub m: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Serialized `Mod_R`: matrices are nested arrays of entry ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModDoc {
    pub base: BaseDoc,
    pub maxdim: usize,
    pub objects: Vec<usize>,
    pub gl: BTreeMap<String, Vec<Vec<Vec<String>>>>,
    pub units: BTreeMap<String, Vec<Vec<String>>>,
    pub braiding: Vec<BraidDoc>,
}

impl Bicategory for ModR {
    type Obj = usize;
    type One = MatrixObj;
    type Two = MatrixMor;

    fn one_src(&self, f: &MatrixObj) -> usize {
        f.n
    }
    fn one_tgt(&self, f: &MatrixObj) -> usize {
        f.n
    }
    fn two_src(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn two_tgt(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn id1(&self, a: &usize) -> MatrixObj {
        identity_matrix(&self.r, *a)
    }
    fn id2(&self, f: &MatrixObj) -> MatrixMor {
        identity_mor(&self.r, f)
    }
    fn comp1(&self, g: &MatrixObj, f: &MatrixObj) -> Result<MatrixObj> {
        matmul(&self.r, g, f)
    }
    fn vcomp(&self, b: &MatrixMor, a: &MatrixMor) -> Result<MatrixMor> {
        same_dim(b.n, a.n)?;
        let entries = b.entries.iter().zip(&a.entries).map(|(y, x)| self.r.compose(y, x)).collect::<Result<_>>()?;
        Ok(MatrixMor { n: a.n, entries })
    }
    fn hcomp(&self, b: &MatrixMor, a: &MatrixMor) -> Result<MatrixMor> {
        matmul_mor(&self.r, b, a)
    }
    fn assoc(&self, h: &MatrixObj, g: &MatrixObj, f: &MatrixObj) -> Result<MatrixMor> {
        matrix_associator(&self.r, h, g, f)
    }
    fn lunit(&self, f: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.r, f))
    }
    fn runit(&self, f: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.r, f))
    }
    fn inverse2(&self, a: &MatrixMor) -> Option<MatrixMor> {
        Some(MatrixMor { n: a.n, entries: a.entries.iter().map(|x| self.r.inverse(x)).collect() })
    }
    fn objects(&self) -> Vec<usize> {
        (0..=self.maxdim).collect()
    }
    fn one_cells(&self, a: &usize, b: &usize) -> Vec<MatrixObj> {
        if a == b {
            self.gl(*a).to_vec()
        } else {
            Vec::new()
        }
    }
    fn two_cells(&self, f: &MatrixObj, g: &MatrixObj) -> Vec<MatrixMor> {
        if f != g {
            return Vec::new();
        }
        let choices: Vec<Vec<RMor>> = f.entries.iter().map(|&x| self.r.automorphisms(x)).collect();
        crate::bicat::product(&choices).into_iter().map(|entries| MatrixMor { n: f.n, entries }).collect()
    }
    fn find_iso(&self, f: &MatrixObj, g: &MatrixObj) -> Option<MatrixMor> {
        (f == g).then(|| identity_mor(&self.r, f))
    }
    fn enumeration_is_complete(&self) -> bool {
        !self.r.is_sym_sets() || self.maxdim <= 1
    }
    /// Isomorphic objects of the base are equal, so a weak inverse is a
    /// strict matrix inverse; with entries in a semiring without negatives
    /// that happens exactly for permutation matrices.
    fn decide_equivalence(&self, f: &MatrixObj) -> Option<bool> {
        self.r.is_sym_sets().then(|| self.is_permutation_matrix(f))
    }
    /// The transpose of a permutation matrix.
    fn structural_inverse(&self, f: &MatrixObj) -> Option<MatrixObj> {
        self.is_permutation_matrix(f).then(|| {
            let n = f.n;
            MatrixObj { n, entries: (0..n * n).map(|k| f.at(k % n, k / n)).collect() }
        })
    }
}

impl StrictSmb for ModR {
    fn unit_obj(&self) -> usize {
        0
    }
    fn sum_obj(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(a + b)
    }
    fn sum_one(&self, f: &MatrixObj, g: &MatrixObj) -> Result<MatrixObj> {
        Ok(block_sum(&self.r, f, g))
    }
    fn sum_two(&self, a: &MatrixMor, b: &MatrixMor) -> Result<MatrixMor> {
        Ok(block_sum_mor(&self.r, a, b))
    }
    fn sum_comp_cell(&self, f: &MatrixObj, f2: &MatrixObj, g: &MatrixObj, g2: &MatrixObj) -> Result<MatrixMor> {
        let gf = matmul(&self.r, g, f)?;
        let gf2 = matmul(&self.r, g2, f2)?;
        Ok(identity_mor(&self.r, &block_sum(&self.r, &gf, &gf2)))
    }
    fn sum_unit_cell(&self, a: &usize, b: &usize) -> Result<MatrixMor> {
        Ok(identity_mor(&self.r, &identity_matrix(&self.r, a + b)))
    }
    fn braid(&self, a: &usize, b: &usize) -> Result<MatrixObj> {
        Ok(beta(&self.r, *a, *b))
    }
    fn braid_cell(&self, f: &MatrixObj, g: &MatrixObj) -> Result<MatrixMor> {
        let b = beta(&self.r, f.n, g.n);
        Ok(identity_mor(&self.r, &matmul(&self.r, &b, &block_sum(&self.r, f, g))?))
    }
}

/// The literal strictness equations of block sum and braiding in `Mod_R`,
/// then the generic strict symmetric monoidal suite.
///
/// The interchange law `(U' ⊞ V') * (U ⊞ V) = (U' * U) ⊞ (V' * V)` has four
/// arguments; besides sampling whole quadruples it is checked exhaustively
/// quadrant by quadrant, since each quadrant of the product reads only one
/// factor of each side.
pub fn validate_mod_smb(m: &ModR, budget: &Budget) -> CheckReport {
    let started = std::time::Instant::now();
    let r = &m.r;
    let mut report = CheckReport::new("mod-smb");
    let dims: Vec<usize> = m.objects();
    let cells: Vec<&MatrixObj> = dims.iter().flat_map(|&n| m.gl(n)).collect();
    let nc = cells.len() as u128;

    let mut rec = LawRecord::new("hom-off-diagonal-empty", "hom(n, m) is empty for n != m");
    for &a in &dims {
        for &b in &dims {
            rec.tick();
            if a != b && !m.one_cells(&a, &b).is_empty() {
                rec.fail(format!("hom({a}, {b}) is not empty"));
            }
        }
    }
    report.push(rec);
    let mut rec = LawRecord::new("gl-zero-unit", "GL_0 has exactly one matrix");
    rec.tick();
    if m.gl(0).len() != 1 {
        rec.fail(format!("GL_0 has {} matrices", m.gl(0).len()));
    }
    report.push(rec);

    run_law(&mut report, "unit-strict", "I_n * U = U = U * I_n", nc, budget, |i| {
        let u = cells[i as usize];
        let id = identity_matrix(r, u.n);
        let ok = matmul(r, &id, u)? == *u && matmul(r, u, &id)? == *u;
        Ok((!ok).then(|| format!("U={u:?}")))
    });
    let nd = dims.len() as u128;
    run_law(&mut report, "sum-of-units", "I_n ⊞ I_m = I_(n+m)", nd * nd, budget, |i| {
        let (a, b) = (dims[(i / nd) as usize], dims[(i % nd) as usize]);
        let ok = block_sum(r, &identity_matrix(r, a), &identity_matrix(r, b)) == identity_matrix(r, a + b);
        Ok((!ok).then(|| format!("n={a} m={b}")))
    });
    run_law(&mut report, "sum-unit", "U ⊞ I_0 = U = I_0 ⊞ U", nc, budget, |i| {
        let u = cells[i as usize];
        let z = identity_matrix(r, 0);
        Ok((block_sum(r, u, &z) != *u || block_sum(r, &z, u) != *u).then(|| format!("U={u:?}")))
    });
    run_law(&mut report, "sum-associative", "(U ⊞ V) ⊞ W = U ⊞ (V ⊞ W)", nc * nc * nc, budget, |i| {
        let (u, v, w) = (cells[(i / (nc * nc)) as usize], cells[((i / nc) % nc) as usize], cells[(i % nc) as usize]);
        let ok = block_sum(r, &block_sum(r, u, v), w) == block_sum(r, u, &block_sum(r, v, w));
        Ok((!ok).then(|| format!("U={u:?} V={v:?} W={w:?}")))
    });
    run_law(&mut report, "gl-closed", "GL is closed under * and ⊞", nc * nc, budget, |i| {
        let (u, v) = (cells[(i / nc) as usize], cells[(i % nc) as usize]);
        let wi = |x: &MatrixObj| m.skeleton.is_unit(determinant(&m.skeleton, x));
        let sum_ok = wi(&block_sum(r, u, v));
        let prod_ok = u.n != v.n || wi(&matmul(r, u, v)?);
        Ok((!sum_ok || !prod_ok).then(|| format!("U={u:?} V={v:?}")))
    });

    // pairs (U', U) within one dimension, for the interchange quadrants
    let same: Vec<(&MatrixObj, &MatrixObj)> =
        dims.iter().flat_map(|&n| m.gl(n).iter().flat_map(move |a| m.gl(n).iter().map(move |b| (a, b)))).collect();
    let ns = same.len() as u128;
    run_law(&mut report, "sum-interchange", "(U' ⊞ V') * (U ⊞ V) = (U' * U) ⊞ (V' * V)", ns * ns, budget, |i| {
        let ((u2, u), (v2, v)) = (same[(i / ns) as usize], same[(i % ns) as usize]);
        let lhs = matmul(r, &block_sum(r, u2, v2), &block_sum(r, u, v))?;
        let rhs = block_sum(r, &matmul(r, u2, u)?, &matmul(r, v2, v)?);
        Ok((lhs != rhs).then(|| format!("U'={u2:?} U={u:?} V'={v2:?} V={v:?}")))
    });
    report.push(interchange_by_quadrants(m, &dims));

    run_law(
        &mut report,
        "braid-strict-naturality",
        "β_(n,m) * (U ⊞ V) = (V ⊞ U) * β_(n,m)",
        nc * nc,
        budget,
        |i| {
            let (u, v) = (cells[(i / nc) as usize], cells[(i % nc) as usize]);
            let b = beta(r, u.n, v.n);
            let ok = matmul(r, &b, &block_sum(r, u, v))? == matmul(r, &block_sum(r, v, u), &b)?;
            Ok((!ok).then(|| format!("U={u:?} V={v:?}")))
        },
    );
    run_law(&mut report, "braid-involution", "β_(m,n) * β_(n,m) = I_(n+m)", nd * nd, budget, |i| {
        let (a, b) = (dims[(i / nd) as usize], dims[(i % nd) as usize]);
        let ok = matmul(r, &beta(r, b, a), &beta(r, a, b))? == identity_matrix(r, a + b);
        Ok((!ok).then(|| format!("n={a} m={b}")))
    });

    report.absorb(validate_strict_smb(m, budget));
    report.wall_time = started.elapsed();
    report
}

/// Checks every entry of `(U' ⊞ V') * (U ⊞ V)` against `(U' * U) ⊞ (V' * V)`
/// for all quadruples at once: the upper-left block is computed from each pair
/// `(U', U)`, the lower-right from each `(V', V)`, and the off-diagonal blocks
/// from each `(U', V)` and `(V', U)`, always by the literal sum over the full
/// inner index with the strict zeros of the block sums in place.
fn interchange_by_quadrants(m: &ModR, dims: &[usize]) -> LawRecord {
    let r = &m.r;
    let mut rec =
        LawRecord::new("sum-interchange-quadrants", "every entry of the interchange law, quadrant by quadrant");
    let zero = r.zero();
    // entry (i, k) of the product of two block-diagonal matrices with blocks
    // of sizes (n, p), given the rows of the left and columns of the right
    let entry = |row: &[usize], col: &[usize]| sum_objs(r, row.iter().zip(col).map(|(&x, &y)| r.mul(x, y)));
    for &n in dims {
        for &p in dims {
            let size = n + p;
            // left factor rows: upper rows come from U', lower rows from V'
            let upper_row = |u2: &MatrixObj, i: usize| -> Vec<usize> {
                (0..size).map(|j| if j < n { u2.at(i, j) } else { zero }).collect()
            };
            let lower_row = |v2: &MatrixObj, i: usize| -> Vec<usize> {
                (0..size).map(|j| if j >= n { v2.at(i, j - n) } else { zero }).collect()
            };
            let left_col = |u: &MatrixObj, k: usize| -> Vec<usize> {
                (0..size).map(|j| if j < n { u.at(j, k) } else { zero }).collect()
            };
            let right_col = |v: &MatrixObj, k: usize| -> Vec<usize> {
                (0..size).map(|j| if j >= n { v.at(j - n, k) } else { zero }).collect()
            };
            for u2 in m.gl(n) {
                for u in m.gl(n) {
                    rec.tick();
                    let uu = matmul(r, u2, u).expect("same dimension");
                    let bad = (0..n)
                        .flat_map(|i| (0..n).map(move |k| (i, k)))
                        .find(|&(i, k)| entry(&upper_row(u2, i), &left_col(u, k)) != uu.at(i, k));
                    if let Some((i, k)) = bad {
                        rec.fail(format!("upper-left ({i},{k}) for U'={u2:?} U={u:?}, m={p}"));
                    }
                }
                for v in m.gl(p) {
                    rec.tick();
                    let bad = (0..n)
                        .flat_map(|i| (0..p).map(move |k| (i, k)))
                        .find(|&(i, k)| entry(&upper_row(u2, i), &right_col(v, k)) != zero);
                    if let Some((i, k)) = bad {
                        rec.fail(format!("upper-right ({i},{k}) for U'={u2:?} V={v:?}"));
                    }
                }
            }
            for v2 in m.gl(p) {
                for v in m.gl(p) {
                    rec.tick();
                    let vv = matmul(r, v2, v).expect("same dimension");
                    let bad = (0..p)
                        .flat_map(|i| (0..p).map(move |k| (i, k)))
                        .find(|&(i, k)| entry(&lower_row(v2, i), &right_col(v, k)) != vv.at(i, k));
                    if let Some((i, k)) = bad {
                        rec.fail(format!("lower-right ({i},{k}) for V'={v2:?} V={v:?}, n={n}"));
                    }
                }
                for u in m.gl(n) {
                    rec.tick();
                    let bad = (0..p)
                        .flat_map(|i| (0..n).map(move |k| (i, k)))
                        .find(|&(i, k)| entry(&lower_row(v2, i), &left_col(u, k)) != zero);
                    if let Some((i, k)) = bad {
                        rec.fail(format!("lower-left ({i},{k}) for V'={v2:?} U={u:?}"));
                    }
                }
            }
        }
    }
    rec
}

/// `GL_n` as a monoidal category under matrix multiplication, `U ⊗ V = U · V`.
#[derive(Debug, Clone, Copy)]
pub struct GlMonoidal<'a> {
    pub m: &'a ModR,
    pub n: usize,
}

impl MonoidalCategory for GlMonoidal<'_> {
    type Obj = MatrixObj;
    type Mor = MatrixMor;

    fn src(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn tgt(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn id(&self, u: &MatrixObj) -> MatrixMor {
        identity_mor(&self.m.r, u)
    }
    fn compose(&self, g: &MatrixMor, f: &MatrixMor) -> Result<MatrixMor> {
        self.m.vcomp(g, f)
    }
    fn inverse(&self, a: &MatrixMor) -> Option<MatrixMor> {
        self.m.inverse2(a)
    }
    fn unit(&self) -> MatrixObj {
        identity_matrix(&self.m.r, self.n)
    }
    fn tensor(&self, a: &MatrixObj, b: &MatrixObj) -> Result<MatrixObj> {
        matmul(&self.m.r, a, b)
    }
    fn tensor_mor(&self, f: &MatrixMor, g: &MatrixMor) -> Result<MatrixMor> {
        matmul_mor(&self.m.r, f, g)
    }
    fn associator(&self, a: &MatrixObj, b: &MatrixObj, c: &MatrixObj) -> Result<MatrixMor> {
        let fwd = matrix_associator(&self.m.r, a, b, c)?;
        Ok(self.m.inverse2(&fwd).expect("matrices of automorphisms are invertible"))
    }
    fn left_unitor(&self, a: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.m.r, a))
    }
    fn right_unitor(&self, a: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.m.r, a))
    }
    fn objects(&self) -> Vec<MatrixObj> {
        self.m.gl(self.n).to_vec()
    }
    fn hom(&self, a: &MatrixObj, b: &MatrixObj) -> Vec<MatrixMor> {
        self.m.two_cells(a, b)
    }
}

/// `M_n(R)`: every `n × n` matrix over the objects of `R`, with matrix
/// product as tensor. Products leave the bound; arithmetic stays exact.
#[derive(Clone)]
pub struct MatrixMonoidal {
    pub r: StrictBimonoidal,
    pub n: usize,
}

impl MatrixMonoidal {
    fn entrywise(&self, a: &MatrixMor, f: impl Fn(&RMor) -> RMor) -> MatrixMor {
        MatrixMor { n: a.n, entries: a.entries.iter().map(f).collect() }
    }
}

impl MonoidalCategory for MatrixMonoidal {
    type Obj = MatrixObj;
    type Mor = MatrixMor;

    fn src(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn tgt(&self, a: &MatrixMor) -> MatrixObj {
        a.source()
    }
    fn id(&self, u: &MatrixObj) -> MatrixMor {
        identity_mor(&self.r, u)
    }
    fn compose(&self, g: &MatrixMor, f: &MatrixMor) -> Result<MatrixMor> {
        same_dim(g.n, f.n)?;
        let entries = g.entries.iter().zip(&f.entries).map(|(y, x)| self.r.compose(y, x)).collect::<Result<_>>()?;
        Ok(MatrixMor { n: f.n, entries })
    }
    fn inverse(&self, a: &MatrixMor) -> Option<MatrixMor> {
        Some(self.entrywise(a, |x| self.r.inverse(x)))
    }
    fn unit(&self) -> MatrixObj {
        identity_matrix(&self.r, self.n)
    }
    fn tensor(&self, a: &MatrixObj, b: &MatrixObj) -> Result<MatrixObj> {
        matmul(&self.r, a, b)
    }
    fn tensor_mor(&self, f: &MatrixMor, g: &MatrixMor) -> Result<MatrixMor> {
        matmul_mor(&self.r, f, g)
    }
    fn associator(&self, a: &MatrixObj, b: &MatrixObj, c: &MatrixObj) -> Result<MatrixMor> {
        let fwd = matrix_associator(&self.r, a, b, c)?;
        Ok(self.entrywise(&fwd, |x| self.r.inverse(x)))
    }
    fn left_unitor(&self, a: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.r, a))
    }
    fn right_unitor(&self, a: &MatrixObj) -> Result<MatrixMor> {
        Ok(identity_mor(&self.r, a))
    }
    fn objects(&self) -> Vec<MatrixObj> {
        let choices = vec![self.r.objects(); self.n * self.n];
        crate::bicat::product(&choices).into_iter().map(|entries| MatrixObj { n: self.n, entries }).collect()
    }
    fn hom(&self, a: &MatrixObj, b: &MatrixObj) -> Vec<MatrixMor> {
        if a != b {
            return Vec::new();
        }
        let choices: Vec<Vec<RMor>> = a.entries.iter().map(|&x| self.r.automorphisms(x)).collect();
        crate::bicat::product(&choices).into_iter().map(|entries| MatrixMor { n: a.n, entries }).collect()
    }
}

#[cfg(test)]
mod tests;
