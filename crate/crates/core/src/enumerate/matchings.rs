//! Perfect matchings, the 6-point condition and chord diagrams.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::planar::{Builder, Diagram, VertexKind};

/// Fixed-point-free involution on `0..2n` (printed 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        for (i, &j) in partner.iter().enumerate() {
            if j >= n || j == i || partner[j] != i {
                return Err(Error::Domain(format!(
                    "not a fixed-point-free involution: {partner:?}"
                )));
            }
        }
        Ok(Matching { partner })
    }

    /// From 1-based pairs.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut p = vec![usize::MAX; size];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size {
                return Err(Error::Domain(format!(
                    "pair ({a}, {b}) out of range 1..={size}"
                )));
            }
            p[a - 1] = b - 1;
            p[b - 1] = a - 1;
        }
        Matching::new(p)
    }

    pub fn size(&self) -> usize {
        self.partner.len()
    }

    /// Partner of the 0-based point `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    /// Pairs `(a, b)` with `a < b`, 0-based, ordered by `a`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i < j)
            .map(|(i, &j)| (i, j))
    }

    /// No `n₃ < n₂ < n₁ < M(n₃) < M(n₂) < M(n₁)`.
    pub fn satisfies_sixpoint(&self) -> bool {
        let m = &self.partner;
        let n = m.len();
        for n3 in 0..n {
            for n2 in n3 + 1..n {
                for n1 in n2 + 1..n {
                    if m[n1] > m[n2] && m[n2] > m[n3] && m[n3] > n1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_noncrossing(&self) -> bool {
        self.pairs()
            .all(|(a, b)| self.pairs().all(|(c, d)| !(a < c && c < b && b < d)))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({} {})", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// Visit every perfect matching of `0..size` (lexicographic by partner of
/// the smallest unmatched point).
pub fn for_each_matching(size: usize, mut f: impl FnMut(&Matching)) {
    fn rec(p: &mut Vec<usize>, f: &mut dyn FnMut(&Matching)) {
        let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
            f(&Matching { partner: p.clone() });
            return;
        };
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                rec(p, f);
                p[i] = usize::MAX;
                p[j] = usize::MAX;
            }
        }
    }
    if size % 2 == 1 {
        return;
    }
    rec(&mut vec![usize::MAX; size], &mut f);
}

/// All `(size − 1)!!` perfect matchings of `size` points.
pub fn enumerate_matchings(size: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_matching(size, |m| out.push(m.clone()));
    out
}

/// Matchings satisfying the 6-point condition.
pub fn sixpoint_filter(ms: &[Matching]) -> Vec<Matching> {
    ms.iter()
        .filter(|m| m.satisfies_sixpoint())
        .cloned()
        .collect()
}

/// Non-crossing perfect matchings of `2n` points, generated directly:
/// point 0 pairs with an odd point `j`, splitting the rest into two
/// independent intervals.
pub fn noncrossing_matchings(n: usize) -> Vec<Matching> {
    // by_len[k] = partner arrays of the non-crossing matchings of 0..2k
    let mut by_len: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    for k in 1..=n {
        let mut cur = Vec::new();
        for inner in 0..k {
            let outer = k - 1 - inner;
            let j = 2 * inner + 1;
            for l in &by_len[inner] {
                for r in &by_len[outer] {
                    let mut p = Vec::with_capacity(2 * k);
                    p.push(j);
                    p.extend(l.iter().map(|x| x + 1));
                    p.push(0);
                    p.extend(r.iter().map(|x| x + j + 1));
                    cur.push(p);
                }
            }
        }
        by_len.push(cur);
    }
    by_len
        .swap_remove(n)
        .into_iter()
        .map(|partner| Matching { partner })
        .collect()
}

/// Straight chords in convex position with a tetravalent vertex at every
/// crossing. Along a chord, the chords crossing it are met in the order of
/// their endpoint between the chord's ends; that order is forced exactly
/// when no three chords cross pairwise, which the 6-point condition
/// guarantees.
pub fn matching_to_freeway(m: &Matching) -> Result<Diagram> {
    if !m.satisfies_sixpoint() {
        return Err(Error::Domain(format!(
            "{m} has three pairwise crossing chords"
        )));
    }
    let size = m.size();
    let pairs: Vec<(usize, usize)> = m.pairs().collect();
    let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };
    // chord k's segments: label base[k] + i for i in 0..=crossings
    let mut order: Vec<Vec<usize>> = Vec::new();
    let mut base = Vec::new();
    let mut next = 0u32;
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let mut xs: Vec<usize> = (0..pairs.len())
            .filter(|&j| j != k && crosses((a, b), pairs[j]))
            .collect();
        let inner = |j: usize| {
            let (c, d) = pairs[j];
            if a < c && c < b {
                c
            } else {
                d
            }
        };
        xs.sort_by_key(|&j| inner(j));
        base.push(next);
        next += xs.len() as u32 + 1;
        order.push(xs);
    }
    // label of chord k's segment adjacent to its crossing with chord j, on
    // the side of endpoint `toward`
    let seg = |k: usize, j: usize, toward: usize| -> u32 {
        let i = order[k]
            .iter()
            .position(|&x| x == j)
            .expect("crossing recorded on both chords") as u32;
        if toward == pairs[k].0 {
            base[k] + i
        } else {
            base[k] + i + 1
        }
    };
    let mut b = Builder::new();
    for (k, &(a, bb)) in pairs.iter().enumerate() {
        for &j in &order[k] {
            if j < k {
                continue;
            }
            let (c, d) = pairs[j];
            let mut ends = [(a, k), (bb, k), (c, j), (d, j)];
            ends.sort_unstable();
            let labels: Vec<u32> = ends
                .iter()
                .map(|&(e, ch)| if ch == k { seg(k, j, e) } else { seg(j, k, e) })
                .collect();
            b.vertex(VertexKind::Tetravalent, &labels);
        }
    }
    for p in 0..size {
        let k = pairs
            .iter()
            .position(|&(a, bb)| a == p || bb == p)
            .expect("every point is matched");
        let label = if p == pairs[k].0 {
            base[k]
        } else {
            base[k] + order[k].len() as u32
        };
        b.endpoint(label);
    }
    b.build()
}

/// Follow each strand straight through the tetravalent vertices.
pub fn freeway_to_matching(d: &Diagram) -> Result<Matching> {
    if d.free_circles() > 0 {
        return Err(Error::Domain("free circles carry no endpoints".into()));
    }
    for v in 0..d.num_vertices() as u32 {
        if !matches!(d.kind(v), VertexKind::Tetravalent | VertexKind::Endpoint) {
            return Err(Error::Domain(
                "only tetravalent crossingless vertices are allowed".into(),
            ));
        }
    }
    if let Some(f) = d.faces().iter().find(|f| f.interior && f.side_count <= 3) {
        return Err(Error::Domain(format!(
            "interior face with {} sides",
            f.side_count
        )));
    }
    let n = d.arity();
    let mut p = vec![usize::MAX; n];
    for (i, slot) in p.iter_mut().enumerate() {
        let mut x = d.alpha(d.endpoint_dart(i));
        let mut steps = 0;
        while d.kind(d.vertex_of(x)) == VertexKind::Tetravalent {
            let v = d.vertex_of(x);
            let rot = d.rotation(v);
            let opp = rot[(d.position(x) + 2) % 4];
            x = d.alpha(opp);
            steps += 1;
            if steps > d.num_darts() {
                return Err(Error::Domain("strand does not reach the boundary".into()));
            }
        }
        *slot = d
            .boundary_index(d.vertex_of(x))
            .expect("strands end at endpoints");
    }
    Matching::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_violator() {
        assert_eq!(enumerate_matchings(2).len(), 1);
        assert_eq!(sixpoint_filter(&enumerate_matchings(4)).len(), 3);
        let six = enumerate_matchings(6);
        assert_eq!(six.len(), 15);
        let bad: Vec<_> = six.iter().filter(|m| !m.satisfies_sixpoint()).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].to_string(), "(1 4)(2 5)(3 6)");
        assert_eq!(enumerate_matchings(10).len(), 945);
    }

    #[test]
    fn chord_diagrams() {
        let m = Matching::from_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        let d = matching_to_freeway(&m).unwrap();
        assert_eq!(d.num_vertices(), 4);
        let m = Matching::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        let d = matching_to_freeway(&m).unwrap();
        assert_eq!(d.count_kind(VertexKind::Tetravalent), 1);
        assert_eq!(freeway_to_matching(&d).unwrap(), m);
        let bad = Matching::from_pairs(6, &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(matching_to_freeway(&bad).is_err());
    }

    #[test]
    fn noncrossing_generation() {
        let counts: Vec<usize> = (0..=6).map(|n| noncrossing_matchings(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
        assert!(noncrossing_matchings(4).iter().all(|m| m.is_noncrossing()));
    }
}
