//! Exact arithmetic in ℚ(q^(1/D)).

mod laurent;
mod parse;
mod scalar;
mod upoly;

pub use laurent::{Exponent, LaurentPoly};
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_traits::One;

/// Quantum integer `[n] = q^((n-1)/2) + q^((n-3)/2) + … + q^(-(n-1)/2)`.
pub fn quantum_int(n: i64) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let m = n.abs();
    let p =
        LaurentPoly::from_terms((0..m).map(|k| (Exponent::new(m - 1 - 2 * k, 2), BigInt::one())));
    let s = Scalar::from(p);
    if n < 0 {
        s.neg()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn quantum_int_examples() {
        assert_eq!(quantum_int(1), Scalar::one());
        assert_eq!(quantum_int(3).to_string(), "q + 1 + q^-1");
        assert_eq!(quantum_int(2).to_string(), "q^(1/2) + q^(-1/2)");
        assert_eq!(quantum_int(-2), quantum_int(2).neg());
    }

    #[test]
    fn quantum_int_matches_defining_quotient() {
        let h = Exponent::new(1, 2);
        let den = Scalar::q_pow(h).sub(&Scalar::q_pow(-h));
        for n in -9..=9i64 {
            let e = Exponent::new(n, 2);
            let num = Scalar::q_pow(e).sub(&Scalar::q_pow(-e));
            assert_eq!(num.div(&den).unwrap(), quantum_int(n), "n = {n}");
        }
    }

    #[test]
    fn quantum_int_at_one() {
        for n in -20..=20i64 {
            assert_eq!(
                quantum_int(n).eval_at_one().unwrap(),
                BigRational::from_integer(n.into())
            );
        }
    }
}
