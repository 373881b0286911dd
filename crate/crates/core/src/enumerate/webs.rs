//! Crossingless trivalent diagrams with boundary: acyclic ones and those of
//! non-positive curvature (every interior face has at least six sides).
//!
//! Completeness. For a connected such diagram with `n ≥ 1` endpoints, Euler's
//! formula and `3V + n = 2E` give
//! `Σ_interior (6 − |f|) + Σ_boundary (4 − k_b) = 6`, where `k_b ≥ 1` is the
//! number of edges on the boundary face between consecutive endpoints. The
//! interior terms are `≤ 0`, so at least two boundary faces have `k_b ≤ 3`;
//! applied to a component with at most one occupied gap, some pair of
//! consecutive endpoints carries a cup (`k = 1`), a Y (`k = 2`) or an H
//! (`k = 3`). Removing it leaves a diagram of the same class with
//! `(n − 2, V)`, `(n − 1, V − 1)` or `(n, V − 2)`, since interior faces only
//! disappear. Generating by the inverse insertions, closed under boundary
//! rotation, is therefore exhaustive; `V ≡ n (mod 2)`, and the search for
//! a given `n` stops at the first empty level past every source level.

use std::collections::HashMap;

use crate::planar::{Builder, Code, Diagram};

/// Which diagrams to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WebClass {
    /// No interior faces at all (planar forests).
    Acyclic,
    /// Every interior face has at least six sides.
    NonPositive,
}

/// A generated diagram with its interior face sizes (ascending).
#[derive(Clone, Debug)]
pub struct FreewaySkeleton {
    pub diagram: Diagram,
    pub interior_faces: Vec<usize>,
}

impl FreewaySkeleton {
    pub fn is_acyclic(&self) -> bool {
        self.interior_faces.is_empty()
    }

    pub fn junctions(&self) -> usize {
        self.diagram.num_vertices() - self.diagram.arity()
    }
}

/// Edge-label form used while growing.
#[derive(Clone, Debug)]
struct Web {
    legs: Vec<u32>,
    verts: Vec<[u32; 3]>,
    next: u32,
}

impl Web {
    fn empty() -> Self {
        Web {
            legs: vec![],
            verts: vec![],
            next: 0,
        }
    }

    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next - 1
    }

    fn diagram(&self) -> Option<Diagram> {
        let mut b = Builder::new();
        for v in &self.verts {
            b.junction(v[0], v[1], v[2]);
        }
        for &l in &self.legs {
            b.endpoint(l);
        }
        b.build().ok()
    }

    fn rotated(&self) -> Web {
        let mut w = self.clone();
        w.legs.rotate_left(1);
        w
    }

    fn cups(&self) -> Vec<Web> {
        (0..=self.legs.len())
            .map(|i| {
                let mut w = self.clone();
                let l = w.fresh();
                w.legs.splice(i..i, [l, l]);
                w
            })
            .collect()
    }

    fn ys(&self) -> Vec<Web> {
        let mut out = Vec::new();
        for j in 0..self.legs.len() {
            for flip in [false, true] {
                let mut w = self.clone();
                let e = w.legs[j];
                let (a, b) = (w.fresh(), w.fresh());
                w.verts.push(if flip { [e, b, a] } else { [e, a, b] });
                w.legs.splice(j..j + 1, [a, b]);
                out.push(w);
            }
        }
        out
    }

    fn hs(&self) -> Vec<Web> {
        let mut out = Vec::new();
        for j in 0..self.legs.len().saturating_sub(1) {
            for fu in [false, true] {
                for fv in [false, true] {
                    let mut w = self.clone();
                    let (e1, e2) = (w.legs[j], w.legs[j + 1]);
                    let (h, l1, l2) = (w.fresh(), w.fresh(), w.fresh());
                    w.verts.push(if fu { [e1, l1, h] } else { [e1, h, l1] });
                    w.verts.push(if fv { [e2, h, l2] } else { [e2, l2, h] });
                    w.legs[j] = l1;
                    w.legs[j + 1] = l2;
                    out.push(w);
                }
            }
        }
        out
    }
}

fn interior_faces(d: &Diagram) -> Vec<usize> {
    let mut v: Vec<usize> = d
        .faces()
        .into_iter()
        .filter(|f| f.interior)
        .map(|f| f.side_count)
        .collect();
    v.sort_unstable();
    v
}

fn admissible(class: WebClass, faces: &[usize]) -> bool {
    match class {
        WebClass::Acyclic => faces.is_empty(),
        WebClass::NonPositive => faces.iter().all(|&s| s >= 6),
    }
}

type Level = Vec<(Web, FreewaySkeleton)>;

/// Generator keeping every level `(n, V)` built so far.
pub struct WebGenerator {
    class: WebClass,
    /// `levels[n][V]`
    levels: Vec<Vec<Level>>,
}

impl WebGenerator {
    pub fn new(class: WebClass) -> Self {
        let d0 = Diagram::empty();
        let zero = (
            Web::empty(),
            FreewaySkeleton {
                diagram: d0,
                interior_faces: vec![],
            },
        );
        WebGenerator {
            class,
            levels: vec![vec![vec![zero]]],
        }
    }

    fn level(&self, n: usize, v: usize) -> &[(Web, FreewaySkeleton)] {
        self.levels
            .get(n)
            .and_then(|l| l.get(v))
            .map(|l| l.as_slice())
            .unwrap_or(&[])
    }

    fn max_level(&self, n: usize) -> usize {
        self.levels.get(n).map(|l| l.len()).unwrap_or(0)
    }

    fn extend_to(&mut self, n_max: usize) {
        while self.levels.len() <= n_max {
            let n = self.levels.len();
            let mut lv: Vec<Level> = Vec::new();
            let mut v = 0;
            loop {
                let mut seen: HashMap<Code, ()> = HashMap::new();
                let mut level: Level = Vec::new();
                let mut cands = Vec::new();
                if n >= 2 {
                    cands.extend(self.level(n - 2, v).iter().flat_map(|(w, _)| w.cups()));
                }
                if n >= 1 && v >= 1 {
                    cands.extend(self.level(n - 1, v - 1).iter().flat_map(|(w, _)| w.ys()));
                }
                if v >= 2 {
                    cands.extend(lv[v - 2].iter().flat_map(|(w, _)| w.hs()));
                }
                for c in cands {
                    let mut w = c;
                    for _ in 0..n.max(1) {
                        if let Some(d) = w.diagram() {
                            let faces = interior_faces(&d);
                            if admissible(self.class, &faces)
                                && seen.insert(d.canonical_code(), ()).is_none()
                            {
                                level.push((
                                    w.clone(),
                                    FreewaySkeleton {
                                        diagram: d,
                                        interior_faces: faces,
                                    },
                                ));
                            }
                        }
                        w = w.rotated();
                    }
                }
                let empty = level.is_empty();
                lv.push(level);
                let sources_done = v + 1
                    >= self
                        .max_level(n.saturating_sub(2))
                        .max(self.max_level(n.saturating_sub(1)) + 1);
                if empty && v >= 1 && lv[v - 1].is_empty() && sources_done {
                    break;
                }
                v += 1;
            }
            while lv.last().is_some_and(|l| l.is_empty()) {
                lv.pop();
            }
            self.levels.push(lv);
        }
    }

    /// All diagrams of the class with `n` endpoints.
    pub fn generate(&mut self, n: usize) -> Vec<FreewaySkeleton> {
        self.extend_to(n);
        self.levels[n]
            .iter()
            .flatten()
            .map(|(_, s)| s.clone())
            .collect()
    }

    /// Number of diagrams with `n` endpoints, by junction count.
    pub fn counts_by_junctions(&mut self, n: usize) -> Vec<usize> {
        self.extend_to(n);
        self.levels[n].iter().map(|l| l.len()).collect()
    }
}

/// Planar trivalent forests on `n` boundary points.
pub fn enumerate_acyclic(n: usize) -> Vec<FreewaySkeleton> {
    WebGenerator::new(WebClass::Acyclic).generate(n)
}

/// Crossingless diagrams whose interior faces all have at least six sides.
pub fn enumerate_nonpositive_curvature(n: usize) -> Vec<FreewaySkeleton> {
    WebGenerator::new(WebClass::NonPositive).generate(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::basis;

    #[test]
    fn small_counts_match_bases() {
        let mut g = WebGenerator::new(WebClass::Acyclic);
        let counts: Vec<usize> = (0..=5).map(|n| g.generate(n).len()).collect();
        assert_eq!(counts, [1, 0, 1, 1, 4, 10]);
        for n in 2..=5 {
            for s in g.generate(n) {
                assert!(basis(n).index_of(&s.diagram).is_some());
            }
        }
    }

    #[test]
    fn hexagon_ring_appears_at_six() {
        let np = enumerate_nonpositive_curvature(6);
        let rings: Vec<_> = np.iter().filter(|s| s.interior_faces == [6]).collect();
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].junctions(), 6);
        assert_eq!(np.len(), enumerate_acyclic(6).len() + 1);
    }
}
