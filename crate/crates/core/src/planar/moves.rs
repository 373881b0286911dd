//! Regular-isotopy moves. Insertions rewire darts directly; every other move
//! extracts a small region, matches it against a table of local templates
//! (all boundary rotations and crossing heights) and glues in the partner.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::basis::rotate_boundary;
use super::{basis, Builder, Code, Deco, Diagram, VertexKind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R2Insert,
    R2Remove,
    R3,
    CurlPairInsert,
    CurlPairCancel,
    VertexSlide,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::R2Insert,
        MoveKind::R2Remove,
        MoveKind::R3,
        MoveKind::CurlPairInsert,
        MoveKind::CurlPairCancel,
        MoveKind::VertexSlide,
    ];
}

/// A move and where to apply it.
///
/// `location` holds, per kind:
/// * `R2Insert`: two darts on the same face (the first edge is pushed
///   across the second; `over` says whether it passes over);
/// * `CurlPairInsert`: one dart of the edge receiving the kinks;
/// * all others: one anchor dart, on the face or edge the local pattern
///   is built around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub location: Vec<u32>,
    pub over: bool,
}

/// Mutable copy of a rotation system used by the insertions.
struct Ed {
    kinds: Vec<VertexKind>,
    rot: Vec<Vec<u32>>,
    alpha: Vec<u32>,
    deco: Vec<Deco>,
    boundary: Vec<u32>,
    free: u32,
}

impl Ed {
    fn from(d: &Diagram) -> Self {
        Ed {
            kinds: d.kinds().to_vec(),
            rot: (0..d.num_vertices() as u32)
                .map(|v| d.rotation(v).to_vec())
                .collect(),
            alpha: (0..d.num_darts() as u32).map(|x| d.alpha(x)).collect(),
            deco: (0..d.num_darts() as u32)
                .map(|x| d.deco(x).clone())
                .collect(),
            boundary: d.boundary().to_vec(),
            free: d.free_circles(),
        }
    }

    fn vertex(&mut self, kind: VertexKind, deco: &Deco) -> Vec<u32> {
        let n = kind.degree();
        let base = self.alpha.len() as u32;
        let ds: Vec<u32> = (base..base + n as u32).collect();
        self.alpha.extend(ds.iter().map(|_| u32::MAX));
        self.deco.extend(ds.iter().map(|_| deco.clone()));
        self.kinds.push(kind);
        self.rot.push(ds.clone());
        ds
    }

    fn link(&mut self, a: u32, b: u32) {
        self.alpha[a as usize] = b;
        self.alpha[b as usize] = a;
    }

    fn finish(self) -> Result<Diagram> {
        let mut b = Builder::new();
        let label = |x: u32| x.min(self.alpha[x as usize]);
        for (v, k) in self.kinds.iter().enumerate() {
            if *k == VertexKind::Endpoint {
                continue;
            }
            let ls: Vec<u32> = self.rot[v].iter().map(|&x| label(x)).collect();
            b.vertex(*k, &ls);
        }
        for &v in &self.boundary {
            b.endpoint(label(self.rot[v as usize][0]));
        }
        for (x, d) in self.deco.iter().enumerate() {
            if d.is_some() {
                b.decorate(label(x as u32), d.clone());
            }
        }
        b.circles(self.free);
        b.build()
    }
}

// ---------------------------------------------------------------- templates

fn mk(verts: &[(VertexKind, Vec<u32>)], ports: usize) -> Diagram {
    let mut b = Builder::new();
    for (k, ls) in verts {
        b.vertex(*k, ls);
    }
    for p in 1..=ports as u32 {
        b.endpoint(p);
    }
    b.build().expect("template is planar")
}

/// Mirror only the crossings listed.
fn flip(d: &Diagram, which: &[u32]) -> Diagram {
    let mut b = Builder::new();
    for v in 0..d.num_vertices() as u32 {
        if d.kind(v) == VertexKind::Endpoint {
            continue;
        }
        let mut ls: Vec<u32> = d.rotation(v).iter().map(|&x| d.edge_label(x)).collect();
        if which.contains(&v) {
            ls.rotate_left(1);
        }
        b.vertex(d.kind(v), &ls);
    }
    for &v in d.boundary() {
        b.endpoint(d.edge_label(d.rotation(v)[0]));
    }
    b.build().unwrap()
}

use VertexKind::{Crossing as X, Junction as J};

/// R2 bigon (strand 2→3 over strand 0→1) and its smoothing.
pub fn r2_pair() -> (Diagram, Diagram) {
    let bigon = mk(&[(X, vec![10, 2, 3, 11]), (X, vec![10, 11, 4, 1])], 4);
    (bigon, basis(4).diagrams[0].clone())
}

/// R3 "up" and "down" sides; strands a: 0→3, b: 1→4, c: 2→5 with a > b > c.
/// Crossing vertex order: XAB, XAC, XBC (in both templates).
pub fn r3_pair() -> (Diagram, Diagram) {
    // labels: ports 1..6, aAC 10, bBC 11, cBC 12, aX 13
    let up = mk(
        &[
            (X, vec![1, 2, 10, 11]),
            (X, vec![10, 3, 4, 12]),
            (X, vec![11, 12, 5, 6]),
        ],
        6,
    );
    let down = mk(
        &[
            (X, vec![13, 11, 4, 5]),
            (X, vec![1, 12, 13, 6]),
            (X, vec![2, 3, 11, 12]),
        ],
        6,
    );
    (up, down)
}

/// Vertex slide: strand 0→3 over two legs vs over the third leg.
pub fn slide_pair() -> (Diagram, Diagram) {
    let two = mk(
        &[
            (J, vec![10, 11, 5]),
            (X, vec![1, 2, 12, 10]),
            (X, vec![12, 3, 4, 11]),
        ],
        5,
    );
    let one = mk(&[(J, vec![2, 3, 10]), (X, vec![1, 10, 4, 5])], 5);
    (two, one)
}

/// Right kink followed by a left kink, and the plain arc.
pub fn curl_pair() -> (Diagram, Diagram) {
    let pair = mk(&[(X, vec![10, 10, 1, 12]), (X, vec![12, 11, 11, 2])], 2);
    (pair, basis(2).diagrams[0].clone())
}

type Table = HashMap<Code, Diagram>;

fn add_both(t: &mut Table, a: &Diagram, b: &Diagram) {
    let n = a.arity();
    for k in 0..n {
        let ra = rotate_boundary(a, k);
        let rb = rotate_boundary(b, k);
        t.entry(ra.canonical_code()).or_insert_with(|| rb.clone());
        t.entry(rb.canonical_code()).or_insert(ra);
    }
}

fn table(kind: MoveKind) -> &'static Table {
    static T: OnceLock<HashMap<MoveKind, Table>> = OnceLock::new();
    &T.get_or_init(|| {
        let mut all = HashMap::new();
        // R2: only the bigon side is matched (removal).
        let mut t = Table::new();
        let (bigon, smooth) = r2_pair();
        for d in [bigon.clone(), bigon.mirror()] {
            for k in 0..4 {
                t.insert(
                    rotate_boundary(&d, k).canonical_code(),
                    rotate_boundary(&smooth, k),
                );
            }
        }
        all.insert(MoveKind::R2Remove, t);

        let mut t = Table::new();
        let (up, down) = r3_pair();
        // heights: strands a,b,c; crossings (a,b),(a,c),(b,c) with a>b>c in the base
        let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
        for perm in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            // perm[s] = height rank of strand s (smaller = higher)
            let which: Vec<u32> = pairs
                .iter()
                .enumerate()
                .filter(|(_, (x, y))| perm[*x] > perm[*y])
                .map(|(i, _)| i as u32)
                .collect();
            add_both(&mut t, &flip(&up, &which), &flip(&down, &which));
        }
        all.insert(MoveKind::R3, t);

        let mut t = Table::new();
        let (two, one) = slide_pair();
        add_both(&mut t, &two, &one);
        add_both(&mut t, &two.mirror(), &one.mirror());
        all.insert(MoveKind::VertexSlide, t);

        let mut t = Table::new();
        let (pair, arc) = curl_pair();
        for d in [pair.clone(), pair.mirror()] {
            for k in 0..2 {
                t.insert(
                    rotate_boundary(&d, k).canonical_code(),
                    rotate_boundary(&arc, k),
                );
            }
        }
        all.insert(MoveKind::CurlPairCancel, t);
        all
    })[&kind]
}

// ------------------------------------------------------------------ regions

impl Diagram {
    /// Local regions anchored at dart `d`: the face of `d` (its edges
    /// internal), and the edge of `d` with any loops at its two ends.
    fn anchored_regions(&self, d: u32) -> Vec<(Vec<u32>, Vec<bool>)> {
        let mut out = Vec::new();
        let n = self.num_darts();
        let is_end = |x: u32| self.kind(self.vertex_of(x)) == VertexKind::Endpoint;
        let mut orbit = vec![d];
        let mut x = self.phi(d);
        while x != d {
            orbit.push(x);
            x = self.phi(x);
        }
        if orbit.len() >= 2 && !orbit.iter().any(|&x| is_end(x) || is_end(self.alpha(x))) {
            let mut internal = vec![false; n];
            let mut region = Vec::new();
            for &x in &orbit {
                internal[x as usize] = true;
                internal[self.alpha(x) as usize] = true;
                let v = self.vertex_of(x);
                if !region.contains(&v) {
                    region.push(v);
                }
            }
            out.push((region, internal));
        }
        let (u, w) = (self.vertex_of(d), self.vertex_of(self.alpha(d)));
        if u != w && !is_end(d) && !is_end(self.alpha(d)) {
            let mut internal = vec![false; n];
            internal[d as usize] = true;
            internal[self.alpha(d) as usize] = true;
            for v in [u, w] {
                for &x in self.rotation(v) {
                    if self.vertex_of(self.alpha(x)) == v {
                        internal[x as usize] = true;
                    }
                }
            }
            out.push((vec![u, w], internal));
        }
        out
    }

    /// Ports of a disk-like region, or `None` if the boundary walk misses
    /// some external dart of the region.
    pub fn disk_ports(&self, region: &[u32], internal: &[bool]) -> Option<Vec<u32>> {
        let all: Vec<u32> = region
            .iter()
            .flat_map(|&v| self.rotation(v).iter().copied())
            .filter(|&x| !internal[x as usize])
            .collect();
        let start = *all.first()?;
        let ports = self.region_ports(internal, start);
        (ports.len() == all.len()).then_some(ports)
    }

    /// The region as a disk diagram with boundary point `i` at `ports[i]`.
    pub fn extract_region(&self, region: &[u32], ports: &[u32]) -> Diagram {
        let mut b = Builder::new();
        let pidx: HashMap<u32, usize> = ports.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let base = self.num_darts() as u32;
        let label = |x: u32| -> u32 {
            match pidx.get(&x) {
                Some(&i) => base + i as u32,
                None => x.min(self.alpha(x)),
            }
        };
        for &v in region {
            let ls: Vec<u32> = self.rotation(v).iter().map(|&x| label(x)).collect();
            b.vertex(self.kind(v), &ls);
            for &x in self.rotation(v) {
                if self.deco(x).is_some() {
                    b.decorate(label(x), self.deco(x).clone());
                }
            }
        }
        for i in 0..ports.len() {
            b.endpoint(base + i as u32);
        }
        b.build_unchecked()
            .expect("region extraction is well formed")
    }

    fn template_move(&self, kind: MoveKind, location: &[u32]) -> Result<Diagram> {
        let [d] = location[..] else {
            return Err(Error::Pattern(format!("{kind:?} takes one anchor dart")));
        };
        if d as usize >= self.num_darts() {
            return Err(Error::Pattern(format!("{kind:?}: dart {d} out of range")));
        }
        for (region, internal) in self.anchored_regions(d) {
            let Some(ports) = self.disk_ports(&region, &internal) else {
                continue;
            };
            let local = self.extract_region(&region, &ports);
            if let Some(rep) = table(kind).get(&local.canonical_code()) {
                return self.replace_region(&region, &ports, rep);
            }
        }
        Err(Error::Pattern(format!(
            "{kind:?}: no template matches at dart {d}"
        )))
    }

    fn r2_insert(&self, d1: u32, d2: u32, over: bool) -> Result<Diagram> {
        let n = self.num_darts() as u32;
        if d1 >= n || d2 >= n {
            return Err(Error::Pattern("R2: dart out of range".into()));
        }
        if self.edge_label(d1) == self.edge_label(d2) {
            return Err(Error::Pattern("R2: needs two distinct edges".into()));
        }
        let same_face = {
            let mut x = self.phi(d1);
            let mut found = x == d2;
            while x != d1 && !found {
                x = self.phi(x);
                found = x == d2;
            }
            found || d1 == d2
        };
        if !same_face {
            return Err(Error::Pattern("R2: darts are not on a common face".into()));
        }
        let (a1, a2) = (self.alpha(d1), self.alpha(d2));
        let mut ed = Ed::from(self);
        let (deco1, deco2) = (self.deco(d1).clone(), self.deco(d2).clone());
        // [N, W, S, E]; strand 1 runs N–S, strand 2 runs W–E
        let xl = ed.vertex(VertexKind::Crossing, &None);
        let xr = ed.vertex(VertexKind::Crossing, &None);
        let (nl, wl, sl, el) = (xl[0], xl[1], xl[2], xl[3]);
        let (nr, wr, sr, er) = (xr[0], xr[1], xr[2], xr[3]);
        for &x in &[nl, sl, nr, sr] {
            ed.deco[x as usize] = deco1.clone();
        }
        for &x in &[wl, el, wr, er] {
            ed.deco[x as usize] = deco2.clone();
        }
        ed.link(d1, nl);
        ed.link(a1, nr);
        ed.link(d2, er);
        ed.link(a2, wl);
        ed.link(el, wr);
        ed.link(sl, sr);
        if !over {
            for v in [ed.kinds.len() - 2, ed.kinds.len() - 1] {
                ed.rot[v].rotate_left(1);
            }
        }
        ed.finish()
    }

    fn curl_pair_insert(&self, d: u32) -> Result<Diagram> {
        if d as usize >= self.num_darts() {
            return Err(Error::Pattern("curl pair: dart out of range".into()));
        }
        let a = self.alpha(d);
        let deco = self.deco(d).clone();
        let mut ed = Ed::from(self);
        let x1 = ed.vertex(VertexKind::Crossing, &deco);
        let x2 = ed.vertex(VertexKind::Crossing, &deco);
        ed.link(x1[0], x1[1]);
        ed.link(x1[2], d);
        ed.link(x1[3], x2[0]);
        ed.link(x2[1], x2[2]);
        ed.link(x2[3], a);
        ed.finish()
    }

    /// Apply a move; the result differs from `self` by exactly that move.
    pub fn apply_move(&self, m: &MoveSpec) -> Result<Diagram> {
        match m.kind {
            MoveKind::R2Insert => {
                let [d1, d2] = m.location[..] else {
                    return Err(Error::Pattern("R2 insert takes two darts".into()));
                };
                self.r2_insert(d1, d2, m.over)
            }
            MoveKind::CurlPairInsert => {
                let [d] = m.location[..] else {
                    return Err(Error::Pattern("curl pair insert takes one dart".into()));
                };
                self.curl_pair_insert(d)
            }
            k => self.template_move(k, &m.location),
        }
    }

    /// Every applicable site of a kind (insertions: a representative sample
    /// of dart pairs per face).
    pub fn move_sites(&self, kind: MoveKind) -> Vec<MoveSpec> {
        let spec = |location: Vec<u32>, over: bool| MoveSpec {
            kind,
            location,
            over,
        };
        match kind {
            MoveKind::R2Insert => {
                let mut out = Vec::new();
                for f in self.face_orbits() {
                    for (i, &x) in f.iter().enumerate() {
                        for &y in &f[i + 1..] {
                            if self.edge_label(x) != self.edge_label(y) {
                                out.push(spec(vec![x, y], true));
                                out.push(spec(vec![x, y], false));
                            }
                        }
                    }
                }
                out
            }
            MoveKind::CurlPairInsert => (0..self.num_darts() as u32)
                .map(|d| spec(vec![d], true))
                .collect(),
            _ => {
                // one site per local region: keep the first anchor of each
                let mut seen = std::collections::HashSet::new();
                let mut out = Vec::new();
                for d in 0..self.num_darts() as u32 {
                    let s = spec(vec![d], true);
                    if let Ok(r) = self.apply_move(&s) {
                        if seen.insert(r.canonical_code()) {
                            out.push(s);
                        }
                    }
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::braid::{braid_closure, parse_word};
    use crate::planar::parse;

    #[test]
    fn templates_are_planar_and_distinct() {
        let (a, b) = r3_pair();
        assert_ne!(a.canonical_code(), b.canonical_code());
        let (a, b) = slide_pair();
        assert_ne!(a.canonical_code(), b.canonical_code());
        let _ = r2_pair();
        let _ = curl_pair();
        assert!(!table(MoveKind::R3).is_empty());
    }

    #[test]
    fn r2_insert_then_remove() {
        let d = parse("V a b c\nV c b a").unwrap();
        let f = d.face_orbits()[0].clone();
        let m = MoveSpec {
            kind: MoveKind::R2Insert,
            location: vec![f[0], f[1]],
            over: true,
        };
        let e = d.apply_move(&m).unwrap();
        assert_eq!(e.count_kind(VertexKind::Crossing), 2);
        let sites = e.move_sites(MoveKind::R2Remove);
        assert!(!sites.is_empty());
        let back = e.apply_move(&sites[0]).unwrap();
        assert!(back.isomorphic(&d));
    }

    #[test]
    fn curl_pair_round_trip() {
        let d = parse("E 1 a; E 2 a; B 1 2").unwrap();
        let e = d
            .apply_move(&MoveSpec {
                kind: MoveKind::CurlPairInsert,
                location: vec![0],
                over: true,
            })
            .unwrap();
        let sites = e.move_sites(MoveKind::CurlPairCancel);
        assert_eq!(sites.len(), 1);
        assert!(e.apply_move(&sites[0]).unwrap().isomorphic(&d));
    }

    #[test]
    fn r3_sites_in_braids() {
        let d = braid_closure(3, &parse_word("1 2 1").unwrap()).unwrap();
        let sites = d.move_sites(MoveKind::R3);
        assert!(!sites.is_empty());
        let e = d.apply_move(&sites[0]).unwrap();
        let d2 = braid_closure(3, &parse_word("2 1 2").unwrap()).unwrap();
        assert!(e.isomorphic(&d2));
    }

    #[test]
    fn vertex_slide_in_words() {
        // strand 3 passes over both legs of the fork at position 1
        let d = braid_closure(3, &parse_word("s1 2 1 m2 m1 s1").unwrap());
        let d = d.unwrap();
        let sites = d.move_sites(MoveKind::VertexSlide);
        assert!(!sites.is_empty(), "no slide site found");
        let results: Vec<Diagram> = sites.iter().map(|m| d.apply_move(m).unwrap()).collect();
        let fewer = results
            .iter()
            .find(|e| e.count_kind(VertexKind::Crossing) == 1)
            .expect("a slide removing one crossing");
        let back = fewer.move_sites(MoveKind::VertexSlide);
        assert!(back
            .iter()
            .any(|m| fewer.apply_move(m).unwrap().isomorphic(&d)));
    }

    #[test]
    fn mismatched_pattern_errors() {
        let d = parse("V a b c\nV c b a").unwrap();
        let m = MoveSpec {
            kind: MoveKind::R3,
            location: vec![0],
            over: true,
        };
        assert!(matches!(d.apply_move(&m), Err(Error::Pattern(_))));
    }
}
