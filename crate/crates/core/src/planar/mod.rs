//! Decorated planar maps (rotation systems) with crossings, boundary
//! endpoints and free circles, plus local surgery on them.

mod basis;
mod braid;
mod code;
mod faces;
mod moves;
mod surgery;
mod text;

pub use basis::{basis, basis_index, rotate_boundary, BasisSet};
pub use braid::{borromean, braid_closure, parse_word, BraidLetter};
pub use code::Code;
pub use faces::Face;
pub use moves::{curl_pair, r2_pair, r3_pair, slide_pair, MoveKind, MoveSpec};
pub use text::{parse, parse_with_header, serialize, serialize_inline};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Edge decoration; `None` is the plain edge.
pub type Deco = Option<Arc<str>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// Trivalent vertex.
    Junction,
    /// Four darts, ccw, positions 0 and 2 form the over strand.
    Crossing,
    /// Boundary endpoint with a single dart.
    Endpoint,
    /// Plain four-valent vertex (chord-diagram crossings).
    Tetravalent,
}

impl VertexKind {
    pub fn degree(self) -> usize {
        match self {
            VertexKind::Junction => 3,
            VertexKind::Crossing | VertexKind::Tetravalent => 4,
            VertexKind::Endpoint => 1,
        }
    }
}

/// A planar map given by its rotation system.
///
/// Darts are numbered `0..n`; `alpha` pairs the two ends of each edge and
/// `rot[v]` lists the darts at vertex `v` counterclockwise.
#[derive(Clone, Debug)]
pub struct Diagram {
    alpha: Vec<u32>,
    vert: Vec<u32>,
    pos: Vec<u8>,
    kinds: Vec<VertexKind>,
    rot: Vec<Vec<u32>>,
    deco: Vec<Deco>,
    free_circles: u32,
    boundary: Vec<u32>,
    /// boundary index per vertex (u32::MAX if not an endpoint)
    bidx: Vec<u32>,
}

/// Incremental construction from edge labels.
#[derive(Clone, Debug, Default)]
pub struct Builder {
    kinds: Vec<VertexKind>,
    labels: Vec<Vec<u32>>,
    deco: HashMap<u32, Deco>,
    free_circles: u32,
    boundary: Vec<u32>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a vertex whose darts carry the given edge labels (ccw).
    pub fn vertex(&mut self, kind: VertexKind, labels: &[u32]) -> u32 {
        self.kinds.push(kind);
        self.labels.push(labels.to_vec());
        (self.kinds.len() - 1) as u32
    }

    pub fn junction(&mut self, a: u32, b: u32, c: u32) -> u32 {
        self.vertex(VertexKind::Junction, &[a, b, c])
    }

    pub fn crossing(&mut self, a: u32, b: u32, c: u32, d: u32) -> u32 {
        self.vertex(VertexKind::Crossing, &[a, b, c, d])
    }

    /// Add a boundary endpoint; endpoints are ordered ccw in insertion order.
    pub fn endpoint(&mut self, label: u32) -> u32 {
        let v = self.vertex(VertexKind::Endpoint, &[label]);
        self.boundary.push(v);
        v
    }

    pub fn decorate(&mut self, label: u32, d: Deco) {
        self.deco.insert(label, d);
    }

    pub fn circles(&mut self, k: u32) {
        self.free_circles += k;
    }

    pub fn set_boundary_order(&mut self, order: Vec<u32>) {
        self.boundary = order;
    }

    pub fn build(self) -> Result<Diagram> {
        let d = self.build_unchecked()?;
        d.check_planar()?;
        Ok(d)
    }

    pub(crate) fn build_unchecked(self) -> Result<Diagram> {
        let mut first: HashMap<u32, u32> = HashMap::new();
        let mut done: std::collections::HashSet<u32> = std::collections::HashSet::new();
        let ndarts: usize = self.labels.iter().map(Vec::len).sum();
        let mut alpha = vec![u32::MAX; ndarts];
        let mut vert = Vec::with_capacity(ndarts);
        let mut pos = Vec::with_capacity(ndarts);
        let mut rot = Vec::with_capacity(self.kinds.len());
        let mut deco = vec![None; ndarts];
        let mut next = 0u32;
        for (v, (kind, labels)) in self.kinds.iter().zip(&self.labels).enumerate() {
            if labels.len() != kind.degree() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!(
                        "{kind:?} vertex needs {} darts, got {}",
                        kind.degree(),
                        labels.len()
                    ),
                });
            }
            let mut r = Vec::with_capacity(labels.len());
            for (p, &l) in labels.iter().enumerate() {
                let d = next;
                next += 1;
                vert.push(v as u32);
                pos.push(p as u8);
                r.push(d);
                deco[d as usize] = self.deco.get(&l).cloned().flatten();
                match first.remove(&l) {
                    Some(o) => {
                        alpha[o as usize] = d;
                        alpha[d as usize] = o;
                        done.insert(l);
                    }
                    None => {
                        if done.contains(&l) {
                            return Err(Error::Parse {
                                line: 0,
                                msg: format!("edge label {l} used more than twice"),
                            });
                        }
                        first.insert(l, d);
                    }
                }
            }
            rot.push(r);
        }
        if let Some((l, _)) = first.iter().next() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("edge label {l} used only once"),
            });
        }
        let mut bidx = vec![u32::MAX; self.kinds.len()];
        for (i, &b) in self.boundary.iter().enumerate() {
            let b = b as usize;
            if b >= self.kinds.len() || self.kinds[b] != VertexKind::Endpoint || bidx[b] != u32::MAX
            {
                return Err(Error::Parse {
                    line: 0,
                    msg: "bad boundary order".into(),
                });
            }
            bidx[b] = i as u32;
        }
        if self
            .kinds
            .iter()
            .zip(&bidx)
            .any(|(k, &b)| *k == VertexKind::Endpoint && b == u32::MAX)
        {
            return Err(Error::Parse {
                line: 0,
                msg: "endpoint missing from boundary order".into(),
            });
        }
        Ok(Diagram {
            alpha,
            vert,
            pos,
            kinds: self.kinds,
            rot,
            deco,
            free_circles: self.free_circles,
            boundary: self.boundary,
            bidx,
        })
    }
}

impl Diagram {
    /// The empty closed diagram.
    pub fn empty() -> Self {
        Builder::new().build_unchecked().unwrap()
    }

    /// `k` free circles.
    pub fn circles(k: u32) -> Self {
        let mut b = Builder::new();
        b.circles(k);
        b.build_unchecked().unwrap()
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn alpha(&self, d: u32) -> u32 {
        self.alpha[d as usize]
    }

    pub fn vertex_of(&self, d: u32) -> u32 {
        self.vert[d as usize]
    }

    pub fn position(&self, d: u32) -> usize {
        self.pos[d as usize] as usize
    }

    pub fn kind(&self, v: u32) -> VertexKind {
        self.kinds[v as usize]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn rotation(&self, v: u32) -> &[u32] {
        &self.rot[v as usize]
    }

    pub fn deco(&self, d: u32) -> &Deco {
        &self.deco[d as usize]
    }

    pub fn free_circles(&self) -> u32 {
        self.free_circles
    }

    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    pub fn arity(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn boundary_index(&self, v: u32) -> Option<usize> {
        let b = self.bidx[v as usize];
        (b != u32::MAX).then_some(b as usize)
    }

    /// The dart of the i-th boundary endpoint.
    pub fn endpoint_dart(&self, i: usize) -> u32 {
        self.rot[self.boundary[i] as usize][0]
    }

    pub fn is_endpoint_dart(&self, d: u32) -> bool {
        self.kinds[self.vert[d as usize] as usize] == VertexKind::Endpoint
    }

    pub fn count_kind(&self, k: VertexKind) -> usize {
        self.kinds.iter().filter(|&&x| x == k).count()
    }

    pub fn crossings(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.kinds.len() as u32).filter(|&v| self.kinds[v as usize] == VertexKind::Crossing)
    }

    pub fn has_crossings(&self) -> bool {
        self.kinds.contains(&VertexKind::Crossing)
    }

    /// Next dart counterclockwise around its vertex. All endpoints act as a
    /// single outer vertex whose rotation reverses the boundary order.
    pub fn sigma(&self, d: u32) -> u32 {
        let v = self.vert[d as usize] as usize;
        if self.kinds[v] == VertexKind::Endpoint {
            let n = self.boundary.len();
            let i = self.bidx[v] as usize;
            return self.rot[self.boundary[(i + n - 1) % n] as usize][0];
        }
        let r = &self.rot[v];
        r[(self.pos[d as usize] as usize + 1) % r.len()]
    }

    /// Face permutation `sigma ∘ alpha`.
    pub fn phi(&self, d: u32) -> u32 {
        self.sigma(self.alpha[d as usize])
    }

    pub fn with_free_circles(mut self, k: u32) -> Self {
        self.free_circles = k;
        self
    }

    /// Connected components as vertex sets; all endpoints belong to the
    /// first component when the diagram has a boundary.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.kinds.len();
        let mut comp = vec![u32::MAX; n];
        let mut out: Vec<Vec<u32>> = Vec::new();
        let mut seeds: Vec<u32> = Vec::new();
        if let Some(&b) = self.boundary.first() {
            seeds.push(b);
        }
        seeds.extend(0..n as u32);
        for s in seeds {
            if comp[s as usize] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut stack = vec![s];
            comp[s as usize] = id;
            if self.kinds[s as usize] == VertexKind::Endpoint {
                for &b in &self.boundary {
                    if comp[b as usize] == u32::MAX {
                        comp[b as usize] = id;
                        stack.push(b);
                    }
                }
            }
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &d in &self.rot[v as usize] {
                    let w = self.vert[self.alpha[d as usize] as usize];
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Sub-diagram on a vertex set closed under adjacency.
    pub fn induced(&self, verts: &[u32], free_circles: u32) -> Diagram {
        let mut b = Builder::new();
        let keep: HashMap<u32, ()> = verts.iter().map(|&v| (v, ())).collect();
        for &v in verts {
            if self.kinds[v as usize] == VertexKind::Endpoint {
                continue;
            }
            self.push_vertex(&mut b, v);
        }
        for &v in &self.boundary {
            if keep.contains_key(&v) {
                self.push_vertex(&mut b, v);
            }
        }
        b.circles(free_circles);
        b.build_unchecked()
            .expect("induced subdiagram is well formed")
    }

    fn push_vertex(&self, b: &mut Builder, v: u32) {
        let labels: Vec<u32> = self.rot[v as usize]
            .iter()
            .map(|&d| self.edge_label(d))
            .collect();
        for &d in &self.rot[v as usize] {
            if self.deco[d as usize].is_some() {
                b.decorate(self.edge_label(d), self.deco[d as usize].clone());
            }
        }
        if self.kinds[v as usize] == VertexKind::Endpoint {
            b.endpoint(labels[0]);
        } else {
            b.vertex(self.kinds[v as usize], &labels);
        }
    }

    /// Canonical edge label: the smaller dart id of the edge.
    pub fn edge_label(&self, d: u32) -> u32 {
        d.min(self.alpha[d as usize])
    }

    /// Split into the boundary-attached part (possibly empty) and the closed
    /// components that do not touch the boundary. Free circles stay with the first.
    pub fn split(&self) -> (Diagram, Vec<Diagram>) {
        let comps = self.components();
        let mut closed = Vec::new();
        let mut attached = Vec::new();
        for c in comps {
            if !self.boundary.is_empty() && c.contains(&self.boundary[0]) {
                attached = c;
            } else {
                closed.push(self.induced(&c, 0));
            }
        }
        (self.induced(&attached, self.free_circles), closed)
    }

    /// Swap over and under at every crossing.
    pub fn mirror(&self) -> Diagram {
        let mut d = self.clone();
        for v in 0..d.kinds.len() {
            if d.kinds[v] == VertexKind::Crossing {
                d.rot[v].rotate_left(1);
                for (p, &x) in d.rot[v].iter().enumerate() {
                    d.pos[x as usize] = p as u8;
                }
            }
        }
        d
    }

    /// Disjoint union (boundaries concatenated).
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let mut b = Builder::new();
        let off = self.num_darts() as u32;
        for (src, shift) in [(self, 0u32), (other, off)] {
            for v in 0..src.kinds.len() as u32 {
                if src.kinds[v as usize] == VertexKind::Endpoint {
                    continue;
                }
                let labels: Vec<u32> = src.rot[v as usize]
                    .iter()
                    .map(|&d| src.edge_label(d) + shift)
                    .collect();
                for &d in &src.rot[v as usize] {
                    if src.deco[d as usize].is_some() {
                        b.decorate(src.edge_label(d) + shift, src.deco[d as usize].clone());
                    }
                }
                b.vertex(src.kinds[v as usize], &labels);
            }
        }
        for (src, shift) in [(self, 0u32), (other, off)] {
            for &v in &src.boundary {
                let d = src.rot[v as usize][0];
                b.endpoint(src.edge_label(d) + shift);
            }
        }
        b.circles(self.free_circles + other.free_circles);
        b.build_unchecked().expect("union is well formed")
    }

    /// Euler check per connected component (endpoints merged into one outer vertex).
    pub fn check_planar(&self) -> Result<()> {
        let faces = self.face_orbits();
        let comps = self.components();
        let mut comp_of = vec![0usize; self.kinds.len()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v as usize] = i;
            }
        }
        let mut chi = vec![0i64; comps.len()];
        for (i, c) in comps.iter().enumerate() {
            let mut v = 0i64;
            let mut has_outer = false;
            let mut darts = 0i64;
            for &x in c {
                if self.kinds[x as usize] == VertexKind::Endpoint {
                    has_outer = true;
                } else {
                    v += 1;
                }
                darts += self.rot[x as usize].len() as i64;
            }
            chi[i] = v + has_outer as i64 - darts / 2;
        }
        for f in &faces {
            chi[comp_of[self.vert[f[0] as usize] as usize]] += 1;
        }
        for (i, &x) in chi.iter().enumerate() {
            if x != 2 {
                return Err(Error::Nonplanar(format!(
                    "component {i} has Euler characteristic {x} (expected 2)"
                )));
            }
        }
        Ok(())
    }

    /// Structural equality up to relabeling (same canonical code).
    pub fn isomorphic(&self, other: &Diagram) -> bool {
        self.canonical_code() == other.canonical_code()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_planar() {
        let mut b = Builder::new();
        b.junction(0, 1, 2);
        b.junction(0, 1, 2);
        assert!(
            b.build().is_err(),
            "same ccw order at both ends is nonplanar"
        );
        let mut b = Builder::new();
        b.junction(0, 1, 2);
        b.junction(2, 1, 0);
        let d = b.build().unwrap();
        assert_eq!(d.face_orbits().len(), 3);
    }

    #[test]
    fn mirror_is_involution() {
        let d = parse("X a a b b").unwrap();
        assert!(d.mirror().mirror().isomorphic(&d));
        assert!(!d.mirror().isomorphic(&d));
    }

    #[test]
    fn split_separates_closed_parts() {
        let d = parse("E 1 a\nE 2 a\nV x y z\nV z y x\nO 2\nB 1 2").unwrap();
        let (att, closed) = d.split();
        assert_eq!(att.arity(), 2);
        assert_eq!(att.free_circles(), 2);
        assert_eq!(closed.len(), 1);
        assert_eq!(closed[0].num_vertices(), 2);
    }
}
