//! Invariant dimensions against independent tensor-power walk counts.

use std::collections::HashMap;

use g2skein::repdim::{dim_inv_a2, dim_inv_c2, dim_inv_g2, quantum_dim, weyl_dim, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Brauer–Klimyk: multiplicities of dominant highest weights in `V^{⊗n}`,
/// tracked by reflecting `μ + w + ρ` into the dominant chamber.
/// `simple` holds the simple roots in fundamental-weight coordinates (rows
/// of the Cartan matrix) and `weights` the weights of `V` in the same
/// coordinates.
fn trivial_multiplicities(simple: [[i64; 2]; 2], weights: &[[i64; 2]], n: usize) -> Vec<u64> {
    let mut cur: HashMap<[i64; 2], i64> = HashMap::from([([0, 0], 1)]);
    let mut out = vec![1u64];
    for _ in 0..n {
        let mut next: HashMap<[i64; 2], i64> = HashMap::new();
        for (mu, m) in &cur {
            for w in weights {
                let mut v = [mu[0] + w[0] + 1, mu[1] + w[1] + 1];
                let mut sign = 1;
                let ok = loop {
                    if v[0] == 0 || v[1] == 0 {
                        break false;
                    }
                    let Some(i) = (0..2).find(|&i| v[i] < 0) else {
                        break true;
                    };
                    let c = v[i];
                    v = [v[0] - c * simple[i][0], v[1] - c * simple[i][1]];
                    sign = -sign;
                };
                if ok {
                    *next.entry([v[0] - 1, v[1] - 1]).or_default() += sign * m;
                }
            }
        }
        next.retain(|_, m| *m != 0);
        assert!(next.values().all(|&m| m > 0));
        out.push(next.get(&[0, 0]).copied().unwrap_or(0) as u64);
        cur = next;
    }
    out
}

#[test]
fn g2_walk_counts_match_character_extraction() {
    // α₁ short: α₁ = 2ω₁ − ω₂, α₂ = −3ω₁ + 2ω₂; V₁,₀ = short roots and 0
    let simple = [[2, -1], [-3, 2]];
    let weights = [[1, 0], [-1, 0], [2, -1], [-2, 1], [-1, 1], [1, -1], [0, 0]];
    let walk = trivial_multiplicities(simple, &weights, 11);
    let ext: Vec<u64> = (0..12).map(dim_inv_g2).collect();
    assert_eq!(walk, ext);
    assert_eq!(walk[9], 1792);
}

#[test]
fn a2_walk_counts_match_character_extraction() {
    let simple = [[2, -1], [-1, 2]];
    let v = [[1, 0], [-1, 1], [0, -1]];
    let walk = trivial_multiplicities(simple, &v, 9);
    for (n, w) in walk.iter().enumerate() {
        assert_eq!(dim_inv_a2(0, n as u32), *w, "n = {n}");
        assert_eq!(dim_inv_a2(n as u32, 0), *w, "k = {n}");
    }
}

#[test]
fn c2_walk_counts_match_character_extraction() {
    // α₁ short: α₁ = 2ω₁ − ω₂, α₂ = −2ω₁ + 2ω₂
    let simple = [[2, -1], [-2, 2]];
    let v4 = [[1, 0], [-1, 1], [1, -1], [-1, 0]];
    let v5 = [[0, 1], [2, -1], [0, 0], [-2, 1], [0, -1]];
    let w4 = trivial_multiplicities(simple, &v4, 10);
    let w5 = trivial_multiplicities(simple, &v5, 8);
    for (n, w) in w4.iter().enumerate() {
        assert_eq!(dim_inv_c2(n as u32, 0), *w, "k = {n}");
    }
    for (n, w) in w5.iter().enumerate() {
        assert_eq!(dim_inv_c2(0, n as u32), *w, "n = {n}");
    }
}

#[test]
fn classical_dimensions_at_q_equal_one() {
    for rs in RootSystem::ALL {
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                let l: Vec<u32> = if rs.rank() == 1 { vec![a] } else { vec![a, b] };
                if rs.rank() == 1 && b > 0 {
                    continue;
                }
                let qd = quantum_dim(rs, &l).unwrap();
                assert!(qd.is_unit_denominator(), "{rs} {l:?}");
                assert_eq!(qd.bar(), qd);
                let want = BigRational::from_integer(weyl_dim(rs, &l).unwrap());
                assert_eq!(qd.eval_at_one().unwrap(), want, "{rs} {l:?}");
            }
        }
    }
    // hand-computed Weyl dimensions
    let at = |rs, l: &[u32]| weyl_dim(rs, l).unwrap();
    assert_eq!(at(RootSystem::G2, &[2, 0]), BigInt::from(27));
    assert_eq!(at(RootSystem::C2, &[1, 1]), BigInt::from(16));
    assert_eq!(at(RootSystem::A2, &[2, 0]), BigInt::from(6));
    assert_eq!(at(RootSystem::A1, &[3]), BigInt::from(4));
}
