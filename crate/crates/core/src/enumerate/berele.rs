//! Schensted insertion with Berele deletion: matchings to up-down tableaux.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::matchings::{noncrossing_matchings, Matching};

/// Shapes `T₀, …, T₂ₙ` as row lengths (empty rows dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UpDownTableau {
    pub shapes: Vec<Vec<usize>>,
}

impl UpDownTableau {
    /// Shape `i` as `(a, b)` when it has at most two rows.
    pub fn pair(&self, i: usize) -> Option<(usize, usize)> {
        let s = &self.shapes[i];
        (s.len() <= 2).then(|| {
            (
                s.first().copied().unwrap_or(0),
                s.get(1).copied().unwrap_or(0),
            )
        })
    }

    /// Two-row shapes as `(a, b)` pairs, if every shape has at most two rows.
    pub fn pairs(&self) -> Option<Vec<(usize, usize)>> {
        (0..self.shapes.len()).map(|i| self.pair(i)).collect()
    }
}

fn insert(t: &mut Vec<Vec<usize>>, mut x: usize) {
    for row in t.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    t.push(vec![x]);
}

/// Replace `x` by ∞ and slide it out, each time swapping with the smaller
/// of the entries below and to the right.
fn delete(t: &mut Vec<Vec<usize>>, x: usize) {
    let (mut r, mut c) = t
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&y| y == x).map(|c| (r, c)))
        .expect("deleted entry is present");
    loop {
        let below = t.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = t[r].get(c + 1).copied();
        match (below, right) {
            (None, None) => break,
            (Some(b), Some(rt)) if rt < b => {
                t[r][c] = rt;
                c += 1;
            }
            (Some(b), _) => {
                t[r][c] = b;
                r += 1;
            }
            (None, Some(rt)) => {
                t[r][c] = rt;
                c += 1;
            }
        }
    }
    t[r].pop();
    if t[r].is_empty() {
        t.remove(r);
    }
}

/// For `i = 1, …, 2n`: insert `M(i)` if `M(i) > i`, otherwise delete `i`.
/// Entries are ordered by decreasing point index, so that rows record
/// crossings: three pairwise crossing chords give three rows.
pub fn berele(m: &Matching) -> UpDownTableau {
    let key = |x: usize| m.size() - x;
    let mut t: Vec<Vec<usize>> = Vec::new();
    let mut shapes = vec![vec![]];
    for i in 0..m.size() {
        let j = m.partner(i);
        if j > i {
            insert(&mut t, key(j));
        } else {
            delete(&mut t, key(i));
        }
        shapes.push(t.iter().map(|r| r.len()).collect());
    }
    UpDownTableau { shapes }
}

pub fn max_rows(t: &UpDownTableau) -> usize {
    t.shapes.iter().map(|s| s.len()).max().unwrap_or(0)
}

/// Closed walks of length `len` at the origin with unit coordinate steps,
/// staying in `a ≥ b ≥ 0`.
pub fn count_c2_lattice_paths(len: usize) -> BigUint {
    let mut cur: HashMap<(i64, i64), BigUint> = HashMap::from([((0, 0), BigUint::from(1u32))]);
    for _ in 0..len {
        let mut next: HashMap<(i64, i64), BigUint> = HashMap::new();
        for ((a, b), c) in &cur {
            for (da, db) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (x, y) = (a + da, b + db);
                if x >= y && y >= 0 {
                    *next.entry((x, y)).or_default() += c;
                }
            }
        }
        cur = next;
    }
    cur.remove(&(0, 0)).unwrap_or_default()
}

/// `(non-crossing matchings of 2n points, C(2n, n)/(n + 1))`.
pub fn catalan_check(n: usize) -> (BigUint, BigUint) {
    let count = BigUint::from(noncrossing_matchings(n).len());
    let mut binom = BigUint::from(1u32);
    for k in 0..n {
        binom = binom * BigUint::from(2 * n - k) / BigUint::from(k + 1);
    }
    (count, binom / BigUint::from(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_traces() {
        let m = Matching::from_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            berele(&m).pairs().unwrap(),
            [(0, 0), (1, 0), (0, 0), (1, 0), (0, 0)]
        );
        // crossing: 4 bumps 3 into a second row
        let m = Matching::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(
            berele(&m).pairs().unwrap(),
            [(0, 0), (1, 0), (1, 1), (1, 0), (0, 0)]
        );
        // nesting: 3 joins 4 in the first row
        let m = Matching::from_pairs(4, &[(1, 4), (2, 3)]).unwrap();
        assert_eq!(
            berele(&m).pairs().unwrap(),
            [(0, 0), (1, 0), (2, 0), (1, 0), (0, 0)]
        );
        let m = Matching::from_pairs(6, &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(max_rows(&berele(&m)), 3);
    }

    #[test]
    fn paths() {
        let p: Vec<BigUint> = [2, 4, 6]
            .iter()
            .map(|&l| count_c2_lattice_paths(l))
            .collect();
        assert_eq!(p, [1u32, 3, 14].map(BigUint::from));
        assert_eq!(count_c2_lattice_paths(3), BigUint::from(0u32));
    }

    #[test]
    fn catalan() {
        for (n, c) in [(1, 1u32), (3, 5), (5, 42)] {
            assert_eq!(catalan_check(n), (BigUint::from(c), BigUint::from(c)));
        }
    }
}
