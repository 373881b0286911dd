//! Canonical codes: a breadth-first encoding minimized over roots.

use std::collections::BTreeSet;

use super::{Diagram, VertexKind};

/// Isomorphism-invariant key of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(pub Vec<u32>);

impl Code {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_le_bytes()).collect()
    }
}

const OUTER: u32 = u32::MAX;

struct Enc<'a> {
    d: &'a Diagram,
    decos: Vec<&'a str>,
}

impl Enc<'_> {
    fn deco_id(&self, x: u32) -> u32 {
        match self.d.deco(x) {
            None => 0,
            Some(s) => 1 + self.decos.iter().position(|t| *t == &**s).unwrap() as u32,
        }
    }

    fn kind_tag(&self, v: u32, entry_pos: usize, reflect: bool) -> u32 {
        match self.d.kind(v) {
            VertexKind::Junction => 1,
            VertexKind::Crossing => 2 + ((entry_pos % 2 == 1) ^ reflect) as u32,
            VertexKind::Tetravalent => 4,
            VertexKind::Endpoint => 5,
        }
    }

    /// Dart k steps from `entry` around its vertex (ccw, or cw if reflected).
    fn step(&self, entry: u32, k: usize, reflect: bool) -> u32 {
        let v = self.d.vertex_of(entry);
        let r = self.d.rotation(v);
        let n = r.len();
        let p = self.d.position(entry);
        let i = if reflect {
            (p + n - k % n) % n
        } else {
            (p + k) % n
        };
        r[i]
    }

    fn offset(&self, entry: u32, x: u32, reflect: bool) -> u32 {
        let n = self.d.rotation(self.d.vertex_of(entry)).len();
        let (p, q) = (self.d.position(entry), self.d.position(x));
        (if reflect {
            (p + n - q) % n
        } else {
            (q + n - p) % n
        }) as u32
    }

    /// Encode the component reached from `root`, optionally bounded by
    /// `best` for early exit. With `outer`, the root is the boundary pseudo-vertex.
    fn encode(&self, root: Option<u32>, reflect: bool, best: Option<&[u32]>) -> Option<Vec<u32>> {
        let d = self.d;
        let mut index = vec![u32::MAX; d.num_vertices()];
        let mut entry = vec![0u32; d.num_vertices()];
        let mut queue: Vec<u32> = Vec::new();
        let mut out: Vec<u32> = Vec::new();
        let mut cmp_at = 0usize;
        let mut ahead = false;

        let mut emit = |out: &mut Vec<u32>, x: u32| -> bool {
            out.push(x);
            if ahead {
                return true;
            }
            if let Some(b) = best {
                if cmp_at < b.len() {
                    match x.cmp(&b[cmp_at]) {
                        std::cmp::Ordering::Less => ahead = true,
                        std::cmp::Ordering::Greater => return false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                cmp_at += 1;
            }
            true
        };

        // Returns (vertex index, offset) for the far end of dart x.
        let visit = |y: u32,
                     index: &mut Vec<u32>,
                     entry: &mut Vec<u32>,
                     queue: &mut Vec<u32>|
         -> (u32, u32) {
            let w = d.vertex_of(y);
            if d.kind(w) == VertexKind::Endpoint {
                return (OUTER, d.boundary_index(w).unwrap() as u32);
            }
            if index[w as usize] == u32::MAX {
                index[w as usize] = queue.len() as u32;
                entry[w as usize] = y;
                queue.push(w);
            }
            (
                index[w as usize],
                self.offset(entry[w as usize], y, reflect),
            )
        };

        match root {
            None => {
                for i in 0..d.arity() {
                    let e = d.endpoint_dart(i);
                    let y = d.alpha(e);
                    let (w, o) = visit(y, &mut index, &mut entry, &mut queue);
                    for t in [w, o, self.deco_id(e)] {
                        if !emit(&mut out, t) {
                            return None;
                        }
                    }
                }
            }
            Some(r) => {
                let v = d.vertex_of(r);
                index[v as usize] = 0;
                entry[v as usize] = r;
                queue.push(v);
            }
        }
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            let e = entry[v as usize];
            let deg = d.rotation(v).len();
            if !emit(&mut out, self.kind_tag(v, d.position(e), reflect)) {
                return None;
            }
            for k in 0..deg {
                let x = self.step(e, k, reflect);
                let (w, o) = visit(d.alpha(x), &mut index, &mut entry, &mut queue);
                for t in [w, o, self.deco_id(x)] {
                    if !emit(&mut out, t) {
                        return None;
                    }
                }
            }
        }
        Some(out)
    }
}

impl Diagram {
    /// Canonical code; equal iff isomorphic (closed components up to
    /// orientation-preserving homeomorphism of the sphere combined with the
    /// reflection that swaps over and under; boundary-attached part with
    /// labeled boundary).
    pub fn canonical_code(&self) -> Code {
        let decos: BTreeSet<&str> = (0..self.num_darts() as u32)
            .filter_map(|x| self.deco(x).as_deref())
            .collect();
        let enc = Enc {
            d: self,
            decos: decos.into_iter().collect(),
        };
        let mut out = vec![
            self.free_circles(),
            self.arity() as u32,
            enc.decos.len() as u32,
        ];
        for s in &enc.decos {
            out.push(s.len() as u32);
            out.extend(s.bytes().map(u32::from));
        }
        let comps = self.components();
        let mut closed: Vec<Vec<u32>> = Vec::new();
        for c in &comps {
            if self.arity() > 0 && c.contains(&self.boundary()[0]) {
                let code = enc.encode(None, false, None).unwrap();
                out.push(code.len() as u32);
                out.extend(code);
                continue;
            }
            let mut best: Option<Vec<u32>> = None;
            for &v in c {
                for &r in self.rotation(v) {
                    for reflect in [false, true] {
                        if let Some(code) = enc.encode(Some(r), reflect, best.as_deref()) {
                            if best.as_ref().is_none_or(|b| code < *b) {
                                best = Some(code);
                            }
                        }
                    }
                }
            }
            closed.push(best.unwrap_or_default());
        }
        closed.sort();
        for c in closed {
            out.push(c.len() as u32);
            out.extend(c);
        }
        Code(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::planar::{basis, parse};

    #[test]
    fn rotations_and_relabelings_agree() {
        let a = parse("V a b c\nV a e d\nV b d f\nV c f e").unwrap();
        let b = parse("V u t r\nV s u q\nV r p q\nV t s p").unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn theta_vs_circle() {
        let t = parse("V a b c\nV c b a").unwrap();
        let o = parse("O 1").unwrap();
        assert_ne!(t.canonical_code(), o.canonical_code());
    }

    #[test]
    fn four_point_basis_is_distinct() {
        let b = basis(4);
        let codes: std::collections::HashSet<_> =
            b.diagrams.iter().map(|d| d.canonical_code()).collect();
        assert_eq!(codes.len(), 4);
    }

    #[test]
    fn curls_of_both_handedness_differ() {
        let r = parse("X a a b b").unwrap();
        let l = parse("X a b b a").unwrap();
        assert_ne!(r.canonical_code(), l.canonical_code());
        assert_eq!(r.mirror().canonical_code(), l.canonical_code());
    }
}
