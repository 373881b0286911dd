//! Integer polynomials in the eleven coefficient symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qscalar::Scalar;
use crate::skein::Coeff;

/// Coefficient symbols, in increasing monomial-order significance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    A,
    B,
    C,
    D1,
    D2,
    E1,
    E2,
    F1,
    F2,
    G1,
    G2,
}

impl Sym {
    pub const ALL: [Sym; 11] = [
        Sym::A,
        Sym::B,
        Sym::C,
        Sym::D1,
        Sym::D2,
        Sym::E1,
        Sym::E2,
        Sym::F1,
        Sym::F2,
        Sym::G1,
        Sym::G2,
    ];

    pub fn name(self) -> &'static str {
        [
            "a", "b", "c", "d1", "d2", "e1", "e2", "f1", "f2", "g1", "g2",
        ][self as usize]
    }

    pub fn from_name(s: &str) -> Option<Sym> {
        let t = s.replace('_', "");
        Sym::ALL.iter().copied().find(|x| x.name() == t)
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by `Sym as usize`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u8; 11]);

impl Mono {
    pub fn var(s: Sym) -> Mono {
        let mut m = Mono::default();
        m.0[s as usize] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0) {
            *a += b;
        }
        m
    }
}

/// Lexicographic with `g2` most significant (`a < b < … < g2`).
impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        for i in (0..11).rev() {
            match self.0[i].cmp(&o.0[i]) {
                Ordering::Equal => continue,
                x => return x,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in Sym::ALL {
            let e = self.0[s as usize];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with integer coefficients; no zero terms stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SymPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::default(), BigInt::from(c));
        p
    }

    pub fn var(s: Sym) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::var(s), BigInt::one());
        p
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn canonical(&self) -> SymPoly {
        let Some((_, lead)) = self.leading() else {
            return self.clone();
        };
        let mut g = self.content();
        if lead.is_negative() {
            g = -g;
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect(),
        }
    }

    /// Substitute scalar values for every symbol.
    pub fn eval(&self, val: &dyn Fn(Sym) -> Scalar) -> Scalar {
        let vals: Vec<Scalar> = Sym::ALL.iter().map(|&s| val(s)).collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = Scalar::from(crate::qscalar::LaurentPoly::constant(c.clone()));
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &vals[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients of powers of `x` after substituting the `known` symbols;
    /// fails if another symbol remains.
    pub fn in_terms_of(
        &self,
        x: Sym,
        known: &dyn Fn(Sym) -> Option<Scalar>,
    ) -> Result<Vec<Scalar>> {
        let mut out: Vec<Scalar> = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Scalar::from(crate::qscalar::LaurentPoly::constant(c.clone()));
            for s in Sym::ALL {
                let e = m.0[s as usize];
                if s == x || e == 0 {
                    continue;
                }
                let v = known(s)
                    .ok_or_else(|| Error::Derivation(format!("{s} is still unknown in {self}")))?;
                for _ in 0..e {
                    t = &t * &v;
                }
            }
            let k = m.0[x as usize] as usize;
            if out.len() <= k {
                out.resize(k + 1, Scalar::zero());
            }
            out[k] = &out[k] + &t;
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        Ok(out)
    }

    pub fn symbols(&self) -> Vec<Sym> {
        Sym::ALL
            .iter()
            .copied()
            .filter(|&s| self.terms.keys().any(|m| m.0[s as usize] > 0))
            .collect()
    }

    /// Parse `lhs = rhs` (or a bare polynomial) into `lhs − rhs`.
    pub fn parse_equation(s: &str) -> Result<SymPoly> {
        match s.split_once('=') {
            Some((l, r)) => Ok(l.parse::<SymPoly>()?.sub(&r.parse::<SymPoly>()?)),
            None => s.parse(),
        }
    }
}

impl Coeff for SymPoly {
    fn zero() -> Self {
        SymPoly::zero()
    }
    fn one() -> Self {
        SymPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = SymPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = m.degree() == 0;
            if unit || !a.is_one() {
                write!(f, "{a}")?;
            }
            if !unit {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SymPoly {
    type Err = Error;

    /// Sums of products like `2e_1 b + f_1^2 d_2 - 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: format!("{msg} in {s:?}"),
        };
        let chars: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        let mut i = 0;
        let mut out = SymPoly::zero();
        if chars.is_empty() {
            return Err(bad("empty polynomial"));
        }
        while i < chars.len() {
            let mut sign = BigInt::one();
            while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let mut coef = BigInt::one();
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i > start {
                coef = chars[start..i].iter().collect::<String>().parse().unwrap();
            }
            let mut mono = Mono::default();
            let mut any = i > start;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                let letter = chars[i];
                i += 1;
                let mut name = letter.to_string();
                if i < chars.len() && chars[i] == '_' {
                    i += 1;
                }
                if i < chars.len()
                    && chars[i].is_ascii_digit()
                    && matches!(letter, 'd' | 'e' | 'f' | 'g')
                {
                    name.push(chars[i]);
                    i += 1;
                }
                let sym =
                    Sym::from_name(&name).ok_or_else(|| bad(&format!("unknown symbol {name}")))?;
                let mut e = 1u8;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let st = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    e = chars[st..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad("bad exponent"))?;
                }
                mono.0[sym as usize] += e;
                any = true;
            }
            if !any {
                return Err(bad("expected a term"));
            }
            out.add_term(mono, sign * coef);
            if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                return Err(bad(&format!("unexpected {:?}", chars[i])));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: SymPoly = "2e_1 b + 2e2 + a e_2 + e_1 c".parse().unwrap();
        assert_eq!(p.to_string(), "a e2 + 2e2 + c e1 + 2b e1");
        let q = SymPoly::parse_equation("e_2 = e_1^2").unwrap();
        assert_eq!(q.canonical().to_string(), "e2 - e1^2");
        assert!("x + 1".parse::<SymPoly>().is_err());
    }

    #[test]
    fn ring_ops() {
        let a = SymPoly::var(Sym::A);
        let b = SymPoly::var(Sym::B);
        let s = a.add(&b);
        let sq = s.mul(&s);
        assert_eq!(sq, "a^2 + 2a b + b^2".parse().unwrap());
        assert!(sq.sub(&sq).is_zero());
    }

    #[test]
    fn canonical_sign_and_content() {
        let p: SymPoly = "-4b + 6".parse().unwrap();
        assert_eq!(p.canonical().to_string(), "2b - 3");
    }

    #[test]
    fn linear_solve_shape() {
        let p: SymPoly = "d1 e1 + d2 - e1^2".parse().unwrap();
        let cs = p
            .in_terms_of(Sym::D2, &|s| match s {
                Sym::D1 => Some(Scalar::int(-2)),
                Sym::E1 => Some(Scalar::one()),
                _ => None,
            })
            .unwrap();
        assert_eq!(cs, vec![Scalar::int(-3), Scalar::one()]);
    }
}
