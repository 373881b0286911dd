use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Exponent of q. Kept as a small rational; denominators divide the root order.
pub type Exponent = Ratio<i64>;

/// Integer-coefficient Laurent polynomial in fractional powers of q.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exponent, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, Exponent::zero())
    }

    pub fn monomial(c: BigInt, e: Exponent) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(e, c)],
            }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: Exponent) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(it: I) -> Self {
        let mut m: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in it {
            *m.entry(e).or_insert_with(BigInt::zero) += c;
        }
        LaurentPoly {
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Ascending `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<Exponent> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<Exponent> {
        self.terms.last().map(|t| t.0)
    }

    pub fn lead_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.1)
    }

    /// lcm of exponent denominators.
    pub fn exp_denominator(&self) -> i64 {
        self.terms
            .iter()
            .fold(1i64, |acc, (e, _)| acc.lcm(e.denom()))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return LaurentPoly {
                terms: o.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        if o.is_monomial() {
            return o.mul(self);
        }
        let mut m: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (f, d) in &o.terms {
                *m.entry(e + f).or_insert_with(BigInt::zero) += c * d;
            }
        }
        LaurentPoly {
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn shift(&self, s: Exponent) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute q → q⁻¹.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    pub fn div_exact_int(&self, k: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Exact evaluation at a rational q. Fractional exponents need exact roots.
    pub fn eval_at(&self, q: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * rational_power(q, *e)?;
        }
        Ok(acc)
    }

    /// Dense integer polynomial in `t = q^(1/scale)` after factoring out `q^min`.
    pub(crate) fn to_upoly(&self, scale: i64) -> (Exponent, UPoly) {
        let Some(m) = self.min_exp() else {
            return (Exponent::zero(), UPoly(vec![]));
        };
        let idx = |e: &Exponent| -> usize {
            let r = (e - m) * Exponent::from_integer(scale);
            debug_assert!(r.is_integer());
            r.to_integer() as usize
        };
        let top = idx(&self.max_exp().unwrap());
        let mut c = vec![BigInt::zero(); top + 1];
        for (e, v) in &self.terms {
            c[idx(e)] = v.clone();
        }
        (m, UPoly::new(c))
    }

    pub(crate) fn from_upoly(p: &UPoly, scale: i64, shift: Exponent) -> Self {
        LaurentPoly {
            terms: p
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Exponent::new(i as i64, scale) + shift, c.clone()))
                .collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self == &self.bar()
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, e: &Exponent, c: &BigInt, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if e.is_zero() {
            return write!(f, "{abs}");
        }
        if !abs.is_one() {
            write!(f, "{abs}")?;
        }
        write!(f, "q")?;
        if e.is_integer() {
            if !e.is_one() {
                write!(f, "^{}", e.to_integer())?;
            }
        } else {
            write!(f, "^({}/{})", e.numer(), e.denom())?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            Self::fmt_term(f, e, c, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn int_root(x: &BigInt, k: u32) -> Option<BigInt> {
    if x.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return int_root(&-x, k).map(|r| -r);
    }
    let r = x.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *x).then_some(r)
}

fn rational_power(q: &BigRational, e: Exponent) -> Result<BigRational> {
    let k = e.denom().to_u32().unwrap_or(u32::MAX);
    let base = if k == 1 {
        q.clone()
    } else {
        let n = int_root(q.numer(), k);
        let d = int_root(q.denom(), k);
        match (n, d) {
            (Some(n), Some(d)) => BigRational::new(n, d),
            _ => {
                return Err(Error::Domain(format!(
                    "q = {q} has no rational root of order {k}"
                )))
            }
        }
    };
    let n = *e.numer();
    if base.is_zero() && n < 0 {
        return Err(Error::Pole(format!("negative power of q at q = {q}")));
    }
    let p = num_traits::pow(base.clone(), n.unsigned_abs() as usize);
    Ok(if n < 0 { p.recip() } else { p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            v.iter()
                .map(|&(e, c)| (Exponent::from_integer(e), BigInt::from(c))),
        )
    }

    #[test]
    fn prints_descending() {
        let a = lp(&[(5, 1), (4, 1), (1, 1), (0, 1), (-1, 1), (-4, 1), (-5, 1)]);
        assert_eq!(a.to_string(), "q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5");
        let b = lp(&[(2, 3), (0, -1), (-1, -2)]);
        assert_eq!(b.to_string(), "3q^2 - 1 - 2q^-1");
        let f = LaurentPoly::monomial(BigInt::from(-1), Exponent::new(-1, 4));
        assert_eq!(f.to_string(), "-q^(-1/4)");
    }

    #[test]
    fn bar_reverses() {
        let x = lp(&[(1, 1), (0, 2)]);
        assert_eq!(x.bar(), lp(&[(-1, 1), (0, 2)]));
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn eval_at_rational() {
        let x = lp(&[(1, 1), (-1, 1)]);
        let v = x.eval_at(&BigRational::new(2.into(), 1.into())).unwrap();
        assert_eq!(v, BigRational::new(5.into(), 2.into()));
        let r = LaurentPoly::q_pow(Exponent::new(1, 2));
        assert_eq!(
            r.eval_at(&BigRational::new(9.into(), 4.into())).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert!(r.eval_at(&BigRational::new(2.into(), 1.into())).is_err());
    }
}
