use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{Exponent, LaurentPoly};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Element of ℚ(q^(1/D)) as a normalized quotient of Laurent polynomials.
///
/// Normal form: `num/den` coprime, `den` has positive leading coefficient and
/// minimal exponent 0, and integer contents of `num` and `den` are coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(BigInt::from(n)).into()
    }

    /// `q^e`.
    pub fn q_pow(e: Exponent) -> Self {
        LaurentPoly::q_pow(e).into()
    }

    pub fn q() -> Self {
        Self::q_pow(Exponent::from_integer(1))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Build `num/den` and bring it to normal form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            let (e, c) = den.terms()[0].clone();
            let num = num.shift(-e);
            return Self::with_int_den(num, c);
        }
        let scale = num.exp_denominator().lcm(&den.exp_denominator());
        let (sn, n) = num.to_upoly(scale);
        let (sd, d) = den.to_upoly(scale);
        let g = n.gcd(&d);
        let (n, d) = if g.degree() > 0 {
            (
                n.exact_div(&g).expect("gcd divides"),
                d.exact_div(&g).expect("gcd divides"),
            )
        } else {
            (n, d)
        };
        let mut num = LaurentPoly::from_upoly(&n, scale, sn - sd);
        let mut den = LaurentPoly::from_upoly(&d, scale, Exponent::zero());
        let cg = num.content().gcd(&den.content());
        let mut k = cg;
        if den.lead_coeff().is_some_and(|c| c.is_negative()) {
            k = -k;
        }
        if !k.is_one() {
            num = num.div_exact_int(&k);
            den = den.div_exact_int(&k);
        }
        if den.is_monomial() {
            // gcd removed everything but a constant
            let c = den.terms()[0].1.clone();
            return Self::with_int_den(num, c);
        }
        Scalar { num, den }
    }

    fn with_int_den(num: LaurentPoly, c: BigInt) -> Self {
        let g = num.content().gcd(&c);
        let k = if c.is_negative() { -g } else { g };
        let (num, c) = if k.is_one() {
            (num, c)
        } else {
            (num.div_exact_int(&k), &c / &k)
        };
        Scalar {
            num,
            den: LaurentPoly::constant(c),
        }
    }

    fn den_is_one(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den_is_one() && o.den_is_one() {
            return self.num.add(&o.num).into();
        }
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den_is_one() && o.den_is_one() {
            return self.num.mul(&o.num).into();
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        Ok(Self::normalize(base.num.pow(k), base.den.pow(k)))
    }

    /// q → q⁻¹.
    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }

    /// True iff the denominator is a single term.
    pub fn is_unit_denominator(&self) -> bool {
        self.den.is_monomial()
    }

    /// The Laurent polynomial value, if the denominator is exactly 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den_is_one().then_some(&self.num)
    }

    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::Pole("denominator vanishes at q = 1".into()));
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    pub fn eval_at(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_at(q)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at q = {q}")));
        }
        Ok(self.num.eval_at(q)? / d)
    }

    /// Exact square root with positive leading coefficients, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let root = |p: &LaurentPoly| -> Option<LaurentPoly> {
            let scale = p.exp_denominator();
            let (s, u) = p.to_upoly(scale);
            let r = u.sqrt()?;
            let r = if r.lead().is_negative() {
                UPoly(r.0.iter().map(|c| -c).collect())
            } else {
                r
            };
            Some(LaurentPoly::from_upoly(
                &r,
                scale,
                s / Exponent::from_integer(2),
            ))
        };
        Some(Self::normalize(root(&self.num)?, root(&self.den)?))
    }

    /// Parse the canonical rendering (and general rational expressions in q).
    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_scalar(s)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        Scalar::parse(x).unwrap()
    }

    #[test]
    fn f1_times_g1() {
        let f1 = s("1/(1+q^-1)");
        let g1 = s("1/(1+q)");
        assert_eq!(&f1 * &g1, s("1/(q+2+q^-1)"));
        assert_eq!(f1.bar(), g1);
    }

    #[test]
    fn normal_form_details() {
        let f1 = s("1/(1+q^-1)");
        assert_eq!(f1.to_string(), "(q)/(q + 1)");
        let h = s("(2q+2)/(4q^2-4)");
        assert_eq!(h.to_string(), "(1)/(2q - 2)");
        assert_eq!(s("-1/(1+q)").to_string(), "(-1)/(q + 1)");
        assert_eq!(s("(q^2-1)/(q-1)"), s("q+1"));
    }

    #[test]
    fn inverse() {
        let x = s("q - q^-1");
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn poles() {
        assert!(s("1/(q-1)").eval_at_one().is_err());
        assert_eq!(
            s("(q^2-1)/(q-1)").eval_at_one().unwrap(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn sqrt_discriminant() {
        let d = s("(q-1)^2/(q+1)^2");
        assert_eq!(d.sqrt().unwrap(), s("(q-1)/(q+1)"));
        assert!(s("q+1").sqrt().is_none());
        assert_eq!(s("q^(1/2)").sqrt().unwrap(), s("q^(1/4)"));
    }
}
