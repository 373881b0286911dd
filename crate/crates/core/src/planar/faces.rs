use super::{Diagram, VertexKind};

/// A face as an orbit of `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts leaving each corner of the face, in orbit order.
    pub darts: Vec<u32>,
    /// Number of edge traversals.
    pub side_count: usize,
    /// Some edge is traversed twice by this face.
    pub self_adjacent: bool,
    /// The face does not touch the boundary.
    pub interior: bool,
}

impl Face {
    pub fn vertices<'a>(&'a self, d: &'a Diagram) -> impl Iterator<Item = u32> + 'a {
        self.darts.iter().map(move |&x| d.vertex_of(x))
    }
}

impl Diagram {
    /// Orbits of the face permutation.
    pub fn face_orbits(&self) -> Vec<Vec<u32>> {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n as u32 {
            if seen[s as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = s;
            while !seen[x as usize] {
                seen[x as usize] = true;
                orbit.push(x);
                x = self.phi(x);
            }
            out.push(orbit);
        }
        out
    }

    /// All faces (both vertex-bearing and boundary faces). Free circles are
    /// not represented here.
    pub fn faces(&self) -> Vec<Face> {
        let mut in_face = vec![u32::MAX; self.num_darts()];
        let orbits = self.face_orbits();
        for (i, o) in orbits.iter().enumerate() {
            for &x in o {
                in_face[x as usize] = i as u32;
            }
        }
        orbits
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                let self_adjacent = o
                    .iter()
                    .any(|&x| in_face[self.alpha(x) as usize] == i as u32);
                let interior = !o.iter().any(|&x| self.is_endpoint_dart(x));
                Face {
                    side_count: o.len(),
                    darts: o,
                    self_adjacent,
                    interior,
                }
            })
            .collect()
    }

    /// Interior faces eligible for reduction: at most five sides, not
    /// self-adjacent, all corners at junctions.
    pub fn reducible_faces(&self) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|f| {
                f.interior
                    && !f.self_adjacent
                    && f.side_count <= 5
                    && f.darts
                        .iter()
                        .all(|&x| self.kind(self.vertex_of(x)) == VertexKind::Junction)
            })
            .collect()
    }

    /// Smallest reducible face (first in orbit order among ties).
    pub fn find_reducible_face(&self) -> Option<Face> {
        self.reducible_faces()
            .into_iter()
            .min_by_key(|f| f.side_count)
    }

    /// `Σ (1 − sides/6)` over faces, scaled by 6.
    pub fn curvature6(&self) -> i64 {
        self.faces().iter().map(|f| 6 - f.side_count as i64).sum()
    }
}

#[cfg(test)]
mod tests {
    use crate::planar::parse;

    #[test]
    fn circle_has_no_vertex_faces() {
        // A free circle is stored as a count, not as darts; a single
        // vertex-free loop has two faces in the plane, accounted for
        // multiplicatively by the reducer.
        assert!(parse("O 1").unwrap().faces().is_empty());
    }

    #[test]
    fn theta_bigons() {
        let d = parse("V a b c\nV c b a").unwrap();
        let f = d.faces();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|f| f.side_count == 2 && !f.self_adjacent));
        assert_eq!(d.find_reducible_face().unwrap().side_count, 2);
    }

    #[test]
    fn k4_triangles() {
        let d = parse("V a b c\nV a e d\nV b d f\nV c f e").unwrap();
        let f = d.faces();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|f| f.side_count == 3));
        assert_eq!(d.curvature6(), 12);
    }

    #[test]
    fn tadpole_face_is_self_adjacent() {
        let d = parse("E 1 s; V s l l; B 1").unwrap();
        let fs = d.faces();
        let mono = fs.iter().find(|f| f.interior).unwrap();
        assert_eq!(mono.side_count, 1);
        assert!(fs.iter().any(|f| f.self_adjacent));
    }

    #[test]
    fn hexagon_ring_closed_by_adjacent_caps() {
        // six junctions around a hexagon, legs l0..l5 paired (0,1)(2,3)(4,5)
        let d = parse("V h0 h5 l0\nV h1 h0 l0\nV h2 h1 l2\nV h3 h2 l2\nV h4 h3 l4\nV h5 h4 l4")
            .unwrap();
        let f = d.find_reducible_face().unwrap();
        assert!(f.side_count <= 5);
        assert!(d.faces().iter().any(|f| f.side_count == 6));
    }
}
