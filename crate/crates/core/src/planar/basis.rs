//! The acyclic crossingless disk diagrams with at most five endpoints.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{Builder, Code, Diagram};

/// Basis of one arity with names and a code index.
#[derive(Debug)]
pub struct BasisSet {
    pub arity: usize,
    pub diagrams: Vec<Diagram>,
    pub names: Vec<String>,
    index: HashMap<Code, usize>,
}

impl BasisSet {
    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(&d.canonical_code()).copied()
    }

    pub fn index_of_code(&self, c: &Code) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Index of the diagram obtained by rotating boundary labels `i → i+1`.
    pub fn rotate(&self, i: usize) -> usize {
        let d = rotate_boundary(&self.diagrams[i], 1);
        self.index_of(&d).expect("basis closed under rotation")
    }
}

/// Relabel boundary so that old point `j` becomes point `j + k`.
pub fn rotate_boundary(d: &Diagram, k: usize) -> Diagram {
    let n = d.arity();
    if n == 0 {
        return d.clone();
    }
    let mut order = d.boundary().to_vec();
    order.rotate_right(k % n);
    let mut b = Builder::new();
    for v in 0..d.num_vertices() as u32 {
        if d.boundary_index(v).is_some() {
            continue;
        }
        let ls: Vec<u32> = d.rotation(v).iter().map(|&x| d.edge_label(x)).collect();
        b.vertex(d.kind(v), &ls);
    }
    for &v in &order {
        b.endpoint(d.edge_label(d.rotation(v)[0]));
    }
    for x in 0..d.num_darts() as u32 {
        if d.deco(x).is_some() {
            b.decorate(d.edge_label(x), d.deco(x).clone());
        }
    }
    b.circles(d.free_circles());
    b.build_unchecked().unwrap()
}

// Edge labels: 1..=n are the boundary legs, 100+ are internal.
fn leg(i: usize, n: usize) -> u32 {
    ((i - 1) % n + 1) as u32
}

fn with_endpoints(mut b: Builder, n: usize, arcs: &[(usize, usize)]) -> Diagram {
    // arcs join legs directly: relabel the second endpoint onto the first label
    let mut lab: Vec<u32> = (0..=n as u32).collect();
    for &(i, j) in arcs {
        lab[j] = lab[i];
    }
    for &l in &lab[1..] {
        b.endpoint(l);
    }
    b.build().expect("basis diagram is planar")
}

fn arc(n: usize) -> Diagram {
    with_endpoints(Builder::new(), n, &[(1, 2)])
}

fn junction3() -> Diagram {
    let mut b = Builder::new();
    b.junction(1, 2, 3);
    with_endpoints(b, 3, &[])
}

/// H-graph with junctions on (i, i+1) and (i+2, i+3).
fn h_graph(i: usize) -> Diagram {
    let n = 4;
    let mut b = Builder::new();
    b.junction(leg(i, n), leg(i + 1, n), 100);
    b.junction(leg(i + 2, n), leg(i + 3, n), 100);
    with_endpoints(b, n, &[])
}

fn cup_y(i: usize) -> Diagram {
    let n = 5;
    let mut b = Builder::new();
    b.junction(leg(i + 2, n), leg(i + 3, n), leg(i + 4, n));
    let (x, y) = (leg(i, n) as usize, leg(i + 1, n) as usize);
    with_endpoints(b, n, &[(x.min(y), x.max(y))])
}

fn tree5(i: usize) -> Diagram {
    let n = 5;
    let mut b = Builder::new();
    b.junction(leg(i, n), leg(i + 1, n), 100);
    b.junction(leg(i + 3, n), leg(i + 4, n), 101);
    b.junction(100, leg(i + 2, n), 101);
    with_endpoints(b, n, &[])
}

fn build(arity: usize) -> BasisSet {
    let (diagrams, names): (Vec<Diagram>, Vec<String>) = match arity {
        0 => (vec![Diagram::empty()], vec!["empty".into()]),
        1 => (vec![], vec![]),
        2 => (vec![arc(2)], vec!["arc".into()]),
        3 => (vec![junction3()], vec!["Y".into()]),
        4 => {
            let a = with_endpoints(Builder::new(), 4, &[(1, 2), (3, 4)]);
            let b = with_endpoints(Builder::new(), 4, &[(1, 4), (2, 3)]);
            (
                vec![a, b, h_graph(1), h_graph(2)],
                vec!["A".into(), "B".into(), "C".into(), "D".into()],
            )
        }
        5 => {
            let mut ds = Vec::new();
            let mut ns = Vec::new();
            for i in 1..=5 {
                ds.push(cup_y(i));
                ns.push(format!("U{i}"));
            }
            for i in 1..=5 {
                ds.push(tree5(i));
                ns.push(format!("T{i}"));
            }
            (ds, ns)
        }
        _ => panic!("no built-in basis for arity {arity}"),
    };
    let index = diagrams
        .iter()
        .enumerate()
        .map(|(i, d)| (d.canonical_code(), i))
        .collect();
    BasisSet {
        arity,
        diagrams,
        names,
        index,
    }
}

/// Basis of acyclic crossingless diagrams with `arity ≤ 5` endpoints.
pub fn basis(arity: usize) -> &'static BasisSet {
    static CELLS: OnceLock<Vec<BasisSet>> = OnceLock::new();
    &CELLS.get_or_init(|| (0..=5).map(build).collect())[arity]
}

/// Position of `d` in the basis of its arity, if it is a basis diagram.
pub fn basis_index(d: &Diagram) -> Option<usize> {
    if d.arity() > 5 {
        return None;
    }
    basis(d.arity()).index_of(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<usize> = (0..=5).map(|n| basis(n).diagrams.len()).collect();
        assert_eq!(sizes, vec![1, 0, 1, 1, 4, 10]);
        for n in 0..=5 {
            let b = basis(n);
            let codes: std::collections::HashSet<_> =
                b.diagrams.iter().map(|d| d.canonical_code()).collect();
            assert_eq!(codes.len(), b.diagrams.len());
        }
    }

    #[test]
    fn rotation_orbits() {
        let b4 = basis(4);
        assert_eq!(b4.rotate(0), 1);
        assert_eq!(b4.rotate(1), 0);
        assert_eq!(b4.rotate(2), 3);
        assert_eq!(b4.rotate(3), 2);
        let b5 = basis(5);
        for i in 0..5 {
            assert!(b5.rotate(i) < 5);
            assert!(b5.rotate(5 + i) >= 5);
        }
    }
}
