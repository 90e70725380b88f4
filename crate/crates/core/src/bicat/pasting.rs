//! Pasting diagrams as face lists, evaluated by rewriting the current
//! boundary path one face at a time and bridging bracketings with
//! [`canonical_coherence`].

use super::{canonical_coherence, cell_at, composite, Bicategory};
use crate::bracket::Bracket;
use crate::error::{malformed, CatError, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge<B: Bicategory> {
    pub id: String,
    pub cell: B::One,
}

/// A 2-cell filling one face. Paths list edge ids first-applied first; the
/// brackets say which composites the cell goes between (left-normal if unset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face<B: Bicategory> {
    pub name: String,
    pub cell: B::Two,
    pub src: Vec<String>,
    pub tgt: Vec<String>,
    pub src_bracket: Option<Bracket>,
    pub tgt_bracket: Option<Bracket>,
}

impl<B: Bicategory> Face<B> {
    pub fn new(name: impl Into<String>, cell: B::Two, src: &[&str], tgt: &[&str]) -> Self {
        Face {
            name: name.into(),
            cell,
            src: src.iter().map(|s| s.to_string()).collect(),
            tgt: tgt.iter().map(|s| s.to_string()).collect(),
            src_bracket: None,
            tgt_bracket: None,
        }
    }

    fn src_br(&self) -> Bracket {
        self.src_bracket.clone().unwrap_or_else(|| Bracket::left_normal(0, self.src.len()))
    }

    fn tgt_br(&self) -> Bracket {
        self.tgt_bracket.clone().unwrap_or_else(|| Bracket::left_normal(0, self.tgt.len()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PastingDiagram<B: Bicategory> {
    pub edges: Vec<Edge<B>>,
    pub faces: Vec<Face<B>>,
    pub source: Vec<String>,
    pub target: Vec<String>,
}

impl<B: Bicategory> PastingDiagram<B> {
    pub fn new(edges: Vec<(&str, B::One)>, source: &[&str], target: &[&str]) -> Self {
        PastingDiagram {
            edges: edges.into_iter().map(|(id, cell)| Edge { id: id.to_string(), cell }).collect(),
            faces: Vec::new(),
            source: source.iter().map(|s| s.to_string()).collect(),
            target: target.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn face(mut self, f: Face<B>) -> Self {
        self.faces.push(f);
        self
    }

    fn edge_map(&self) -> Result<HashMap<&str, &B::One>> {
        let mut m = HashMap::new();
        for e in &self.edges {
            if m.insert(e.id.as_str(), &e.cell).is_some() {
                return malformed(format!("edge id {:?} used twice", e.id));
            }
        }
        Ok(m)
    }

    /// Every interior edge is consumed once and produced once; boundary edges
    /// are produced (target) or consumed (source) once, or untouched if on both.
    pub fn check_tiling(&self) -> Result<()> {
        let edges = self.edge_map()?;
        let mut consumed: HashMap<&str, usize> = HashMap::new();
        let mut produced: HashMap<&str, usize> = HashMap::new();
        for f in &self.faces {
            if f.src.is_empty() || f.tgt.is_empty() {
                return untileable(format!("face {} has an empty side", f.name));
            }
            for e in &f.src {
                *consumed.entry(e.as_str()).or_default() += 1;
            }
            for e in &f.tgt {
                *produced.entry(e.as_str()).or_default() += 1;
            }
        }
        for e in self.source.iter().chain(&self.target) {
            if !edges.contains_key(e.as_str()) {
                return malformed(format!("boundary names unknown edge {e:?}"));
            }
        }
        for id in edges.keys() {
            let c = consumed.get(id).copied().unwrap_or(0);
            let p = produced.get(id).copied().unwrap_or(0);
            let in_src = self.source.iter().any(|e| e == id);
            let in_tgt = self.target.iter().any(|e| e == id);
            let want = match (in_src, in_tgt) {
                (true, true) => (0, 0),
                (true, false) => (1, 0),
                (false, true) => (0, 1),
                (false, false) => (1, 1),
            };
            if (c, p) != want {
                return untileable(format!("edge {id} is consumed {c} and produced {p} times"));
            }
        }
        for id in consumed.keys().chain(produced.keys()) {
            if !edges.contains_key(id) {
                return malformed(format!("face names unknown edge {id:?}"));
            }
        }
        Ok(())
    }
}

fn untileable<T>(msg: String) -> Result<T> {
    Err(CatError::Untileable(msg))
}

/// Left-normal bracketing of the current path with positions `p..p+len`
/// grouped into `block`.
fn with_block(n: usize, p: usize, len: usize, block: Bracket) -> Bracket {
    let mut letters: Vec<Bracket> = (0..p).map(Bracket::Leaf).collect();
    letters.push(block);
    letters.extend((p + len..n).map(Bracket::Leaf));
    let mut it = letters.into_iter();
    let mut acc = it.next().expect("non-empty path");
    for x in it {
        acc = Bracket::comp(x, acc);
    }
    acc
}

fn find_sub(path: &[String], sub: &[String]) -> Option<usize> {
    path.windows(sub.len()).position(|w| w == sub)
}

/// Evaluates with faces taken greedily in list order (the first applicable
/// face is applied next).
pub fn evaluate_pasting<B: Bicategory>(
    b: &B,
    d: &PastingDiagram<B>,
    src_bracket: &Bracket,
    tgt_bracket: &Bracket,
) -> Result<B::Two> {
    evaluate_with(b, d, src_bracket, tgt_bracket, |path, done| {
        (0..d.faces.len()).find(|&k| !done[k] && find_sub(path, &d.faces[k].src).is_some())
    })
}

/// Evaluates applying faces in the given order (indices into `d.faces`).
pub fn evaluate_pasting_in_order<B: Bicategory>(
    b: &B,
    d: &PastingDiagram<B>,
    order: &[usize],
    src_bracket: &Bracket,
    tgt_bracket: &Bracket,
) -> Result<B::Two> {
    if order.len() != d.faces.len() {
        return malformed(format!("order lists {} of {} faces", order.len(), d.faces.len()));
    }
    let mut next = order.iter();
    evaluate_with(b, d, src_bracket, tgt_bracket, |_, _| next.next().copied())
}

fn evaluate_with<B: Bicategory>(
    b: &B,
    d: &PastingDiagram<B>,
    src_bracket: &Bracket,
    tgt_bracket: &Bracket,
    mut choose: impl FnMut(&[String], &[bool]) -> Option<usize>,
) -> Result<B::Two> {
    d.check_tiling()?;
    let edges = d.edge_map()?;
    let word_of = |path: &[String]| path.iter().map(|e| edges[e.as_str()].clone()).collect::<Vec<_>>();
    let mut path = d.source.clone();
    let mut br = src_bracket.clone();
    let mut acc = b.id2(&composite(b, &word_of(&path), &br)?);
    let mut done = vec![false; d.faces.len()];
    for _ in 0..d.faces.len() {
        let k =
            choose(&path, &done).ok_or_else(|| CatError::Untileable(format!("no face applies to path {path:?}")))?;
        if k >= d.faces.len() || done[k] {
            return malformed(format!("face index {k} is invalid or repeated"));
        }
        done[k] = true;
        let face = &d.faces[k];
        let p = find_sub(&path, &face.src)
            .ok_or_else(|| CatError::Untileable(format!("face {} does not meet path {path:?}", face.name)))?;
        let word = word_of(&path);
        let (fs, ft) = (face.src_br(), face.tgt_br());
        let want_src = composite(b, &word_of(&face.src), &fs)?;
        let want_tgt = composite(b, &word_of(&face.tgt), &ft)?;
        if b.two_src(&face.cell) != want_src || b.two_tgt(&face.cell) != want_tgt {
            return malformed(format!("face {} does not have the boundary its edges say", face.name));
        }
        let grouped = with_block(path.len(), p, face.src.len(), fs.shifted(p as isize));
        let bridge = canonical_coherence(b, &word, &br, &grouped)?;
        let step = cell_at(b, &word, &grouped, p, p + face.src.len(), &face.cell)?;
        acc = b.vcomp(&step, &b.vcomp(&bridge, &acc)?)?;
        let mut next: Vec<String> = path[..p].to_vec();
        next.extend(face.tgt.iter().cloned());
        next.extend(path[p + face.src.len()..].iter().cloned());
        br = with_block(next.len(), p, face.tgt.len(), ft.shifted(p as isize));
        path = next;
    }
    if path != d.target {
        return untileable(format!("faces end on {path:?}, not the target {:?}", d.target));
    }
    let last = canonical_coherence(b, &word_of(&path), &br, tgt_bracket)?;
    b.vcomp(&last, &acc)
}

/// A random diagram built by rewriting a start word: merging two adjacent
/// edges `x, y` into `y * x` through a randomly chosen 2-cell, inserting a unit
/// edge through `r⁻¹`, or filling a bigon with a random 2-cell. Returns the
/// diagram and its generation order.
pub fn generate_diagram<B: Bicategory, R: Rng>(
    b: &B,
    start: Vec<B::One>,
    n_faces: usize,
    rng: &mut R,
) -> Result<(PastingDiagram<B>, Vec<usize>)> {
    let mut edges: Vec<Edge<B>> = Vec::new();
    let mut path: Vec<String> = Vec::new();
    for cell in start {
        let id = format!("e{}", edges.len());
        edges.push(Edge { id: id.clone(), cell });
        path.push(id);
    }
    let source = path.clone();
    let mut faces = Vec::new();
    let cell_of = |edges: &Vec<Edge<B>>, id: &str| edges.iter().find(|e| e.id == id).expect("edge").cell.clone();
    while faces.len() < n_faces {
        let kind = rng.gen_range(0..3);
        let name = format!("F{}", faces.len());
        let new_edge = |edges: &mut Vec<Edge<B>>, cell: B::One| {
            let id = format!("e{}", edges.len());
            edges.push(Edge { id: id.clone(), cell });
            id
        };
        if kind == 0 && path.len() >= 2 {
            let p = rng.gen_range(0..path.len() - 1);
            let (x, y) = (cell_of(&edges, &path[p]), cell_of(&edges, &path[p + 1]));
            let yx = b.comp1(&y, &x)?;
            let options = b.two_cells_from(&yx);
            let cell = options.choose(rng).cloned().unwrap_or_else(|| b.id2(&yx));
            let z = new_edge(&mut edges, b.two_tgt(&cell));
            faces.push(Face {
                name,
                cell,
                src: vec![path[p].clone(), path[p + 1].clone()],
                tgt: vec![z.clone()],
                src_bracket: None,
                tgt_bracket: None,
            });
            path.splice(p..p + 2, [z]);
        } else if kind == 1 {
            let p = rng.gen_range(0..path.len());
            let x = cell_of(&edges, &path[p]);
            let cell = super::invert(b, &b.runit(&x)?)?;
            let i = new_edge(&mut edges, b.id1(&b.one_src(&x)));
            let x2 = new_edge(&mut edges, x);
            faces.push(Face {
                name,
                cell,
                src: vec![path[p].clone()],
                tgt: vec![i.clone(), x2.clone()],
                src_bracket: None,
                tgt_bracket: None,
            });
            path.splice(p..p + 1, [i, x2]);
        } else {
            let p = rng.gen_range(0..path.len());
            let x = cell_of(&edges, &path[p]);
            let options = b.two_cells_from(&x);
            let cell = options.choose(rng).cloned().unwrap_or_else(|| b.id2(&x));
            let x2 = new_edge(&mut edges, b.two_tgt(&cell));
            faces.push(Face {
                name,
                cell,
                src: vec![path[p].clone()],
                tgt: vec![x2.clone()],
                src_bracket: None,
                tgt_bracket: None,
            });
            path.splice(p..p + 1, [x2]);
        }
    }
    let order = (0..faces.len()).collect();
    Ok((PastingDiagram { edges, faces, source, target: path }, order))
}

/// Another valid processing order: at each step apply the applicable face
/// that sits furthest right on the current path.
pub fn rightmost_order<B: Bicategory>(d: &PastingDiagram<B>) -> Result<Vec<usize>> {
    let mut path = d.source.clone();
    let mut done = vec![false; d.faces.len()];
    let mut order = Vec::new();
    while order.len() < d.faces.len() {
        let best = d
            .faces
            .iter()
            .enumerate()
            .filter(|(k, _)| !done[*k])
            .filter_map(|(k, f)| find_sub(&path, &f.src).map(|p| (p, k)))
            .max()
            .ok_or_else(|| CatError::Untileable(format!("no face applies to path {path:?}")))?;
        let (p, k) = best;
        let f = &d.faces[k];
        path.splice(p..p + f.src.len(), f.tgt.iter().cloned());
        done[k] = true;
        order.push(k);
    }
    Ok(order)
}
