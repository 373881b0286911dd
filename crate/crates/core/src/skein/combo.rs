//! Coefficient rings and formal linear combinations of diagrams.

use std::collections::BTreeMap;
use std::fmt;

use crate::planar::{Code, Diagram};
use crate::qscalar::Scalar;

/// Commutative ring of coefficients used by the reducer.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
}

/// Finite formal sum of diagrams keyed by canonical code.
#[derive(Clone)]
pub struct Combo<R> {
    terms: BTreeMap<Code, (Diagram, R)>,
}

pub type LinearCombo = Combo<Scalar>;

impl<R: Coeff> PartialEq for Combo<R> {
    fn eq(&self, o: &Self) -> bool {
        self.terms.len() == o.terms.len()
            && self
                .terms
                .iter()
                .zip(&o.terms)
                .all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

impl<R: Coeff> Default for Combo<R> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
        }
    }
}

impl<R: Coeff> Combo<R> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(d: Diagram, c: R) -> Self {
        let mut out = Self::new();
        out.add_term(d, c);
        out
    }

    pub fn add_term(&mut self, d: Diagram, c: R) {
        let code = d.canonical_code();
        self.add_coded(code, d, c);
    }

    pub fn add_coded(&mut self, code: Code, d: Diagram, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&code) {
            Some((_, x)) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&code);
                }
            }
            None => {
                self.terms.insert(code, (d, c));
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Combo<R>, k: &R) {
        if k.is_zero() {
            return;
        }
        for (code, (d, c)) in &other.terms {
            self.add_coded(code.clone(), d.clone(), c.mul(k));
        }
    }

    pub fn scaled(&self, k: &R) -> Combo<R> {
        let mut out = Self::new();
        out.add_scaled(self, k);
        out
    }

    pub fn sub(&self, other: &Combo<R>) -> Combo<R> {
        let mut out = self.clone();
        out.add_scaled(other, &R::one().neg());
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Code, &Diagram, &R)> {
        self.terms.iter().map(|(k, (d, c))| (k, d, c))
    }

    /// Coefficient of `d` (zero if absent).
    pub fn coefficient(&self, d: &Diagram) -> R {
        self.terms
            .get(&d.canonical_code())
            .map_or_else(R::zero, |(_, c)| c.clone())
    }

    /// Coefficients over a list of diagrams (e.g. a basis), in order.
    pub fn coefficients_over(&self, ds: &[Diagram]) -> Vec<R> {
        ds.iter().map(|d| self.coefficient(d)).collect()
    }

    /// Map coefficients into another ring.
    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Combo<S> {
        let mut out = Combo::new();
        for (code, (d, c)) in &self.terms {
            out.add_coded(code.clone(), d.clone(), f(c));
        }
        out
    }
}

impl<R: Coeff> fmt::Debug for Combo<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for (_, d, c) in self.iter() {
            l.entry(&format_args!(
                "({c})·[{}]",
                crate::planar::serialize_inline(d)
            ));
        }
        l.finish()
    }
}
