//! Laurent polynomials in two variables with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `Σ c·x^i·y^j`; no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XYPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl XYPoly {
    pub fn one() -> Self {
        Self::from_terms([(1, 0, 0)])
    }

    /// Build from `(coefficient, x exponent, y exponent)` triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, i64)>>(it: I) -> Self {
        let mut p = XYPoly::default();
        for (c, i, j) in it {
            p.add_term((i, j), BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, k: (i64, i64), c: BigInt) {
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coefficient(&self, i: i64, j: i64) -> BigInt {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = XYPoly::default();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &o.terms {
                p.add_term((i + k, j + l), c * d);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &BigInt::zero();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = if neg { -c } else { c.clone() };
            let mono: Vec<String> = [("x", i), ("y", j)]
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() || !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{}", mono.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = XYPoly::from_terms([(1, 1, 0), (1, 0, -1)]);
        let sq = p.pow(2);
        assert_eq!(sq.coefficient(1, -1), BigInt::from(2));
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.to_string(), "x^2 + 2x y^-1 + y^-2");
        let z = p
            .mul(&XYPoly::from_terms([(1, 0, 0)]))
            .mul(&XYPoly::default());
        assert!(z.is_empty());
    }
}
