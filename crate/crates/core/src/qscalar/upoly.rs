//! Dense univariate polynomials over the integers, used as the gcd backend
//! for [`super::Scalar`] normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from low to high degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<BigInt>);

impl UPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar(&self, s: &BigInt) -> Self {
        UPoly(self.0.iter().map(|c| c / s).collect())
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder of `self` by `d` (`lc(d)^k * self = q*d + r`).
    fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let shift = top - dd;
            for (i, dc) in d.0.iter().enumerate() {
                r[shift + i] -= &t * dc;
            }
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UPoly(r)
    }

    /// Exact division; returns `None` if `d` does not divide `self` over the integers.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly(vec![]));
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.lead();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let (qt, rem) = r[top].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let shift = top - dd;
            for (i, dc) in d.0.iter().enumerate() {
                r[shift + i] -= &qt * dc;
            }
            q[shift] = qt;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::new(q))
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            if b.degree() == 0 {
                return UPoly(vec![BigInt::one()]);
            }
            if a.exact_div(&b).is_some() {
                return b;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Exact square root if `self` is the square of an integer polynomial.
    pub fn sqrt(&self) -> Option<UPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() % 2 == 1 {
            return None;
        }
        let lead = self.lead();
        if lead.is_negative() {
            return None;
        }
        let lr = lead.sqrt();
        if &(&lr * &lr) != lead {
            return None;
        }
        // Solve top-down for coefficients of the root.
        let n = self.degree() / 2;
        let mut root = vec![BigInt::zero(); n + 1];
        root[n] = lr.clone();
        let two_lr = &lr * 2;
        for k in (0..n).rev() {
            // coefficient of degree n + k in root^2 must match self
            let target = &self.0[n + k];
            let mut acc = BigInt::zero();
            for i in (k + 1)..=n {
                let j = n + k - i;
                if j > k && j <= n {
                    acc += &root[i] * &root[j];
                }
            }
            let rem = target - acc;
            let (q, r) = rem.div_rem(&two_lr);
            if !r.is_zero() {
                return None;
            }
            root[k] = q;
        }
        let r = UPoly::new(root);
        if &r.mul(&r) == self {
            Some(r)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+x)(1-x) and (1+x)^2
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), p(&[1]));
    }

    #[test]
    fn exact_div_detects_remainder() {
        assert_eq!(p(&[1, 2, 1]).exact_div(&p(&[1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 2, 2]).exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn sqrt_of_square() {
        let r = p(&[-1, 0, 3, 1]);
        assert_eq!(r.mul(&r).sqrt().map(|s| s.primitive()), Some(r.primitive()));
        assert_eq!(p(&[1, 0, 1]).sqrt(), None);
    }
}
