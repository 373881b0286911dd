//! The reduction engine: expand crossings, reduce small faces, evaluate.

mod combo;
mod reduce;
mod rules;

pub use combo::{Coeff, Combo, LinearCombo};
pub use reduce::{Calculus, Reducer, ReductionStats, Strategy};
pub use rules::{
    builtin_ruleset, g2, g2_symbol, load_ruleset, resolve_ruleset, RuleSet, CROSSING_SYMBOLS,
    PENTAGON_SYMBOLS, SQUARE_SYMBOLS,
};

use crate::error::{Error, Result};
use crate::planar::{parse, Diagram};
use crate::qscalar::Scalar;

/// Handedness of a curl.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

/// A strand with one right-handed kink (closing it gives `X a a b b`).
pub fn right_curl_strand() -> Diagram {
    parse("E 1 p; E 2 r; X l l r p; B 1 2").expect("curl strand parses")
}

/// Replace every crossing by the crossing rule.
pub fn expand_crossings(d: &Diagram, rs: &RuleSet) -> Result<LinearCombo> {
    let calc = rs.calculus();
    Reducer::new(&calc, Strategy::Smallest).expand_crossings(d)
}

/// Value of a closed diagram (smallest-face strategy).
pub fn reduce_closed(d: &Diagram, rs: &RuleSet) -> Result<Scalar> {
    reduce_closed_with(d, rs, Strategy::Smallest)
}

pub fn reduce_closed_with(d: &Diagram, rs: &RuleSet, strategy: Strategy) -> Result<Scalar> {
    let calc = rs.calculus();
    Reducer::new(&calc, strategy).closed(d)
}

/// Reduce a diagram with at most five endpoints onto the acyclic basis.
pub fn reduce_boundary(d: &Diagram, rs: &RuleSet) -> Result<LinearCombo> {
    if d.arity() > 5 {
        return Err(Error::Unsupported(format!(
            "no basis for {} endpoints",
            d.arity()
        )));
    }
    let calc = rs.calculus();
    let out = Reducer::new(&calc, Strategy::Smallest).disk(d)?;
    if let Some((_, t, _)) = out
        .iter()
        .find(|(_, t, _)| crate::planar::basis_index(t).is_none())
    {
        return Err(Error::Invariant(format!(
            "irreducible {}-point diagram outside the basis: {}",
            t.arity(),
            crate::planar::serialize_inline(t)
        )));
    }
    Ok(out)
}

/// Factor gained by a kink of the given handedness.
pub fn curl_factor(rs: &RuleSet, hand: Handedness) -> Result<Scalar> {
    let strand = match hand {
        Handedness::Right => right_curl_strand(),
        Handedness::Left => right_curl_strand().mirror(),
    };
    let combo = reduce_boundary(&strand, rs)?;
    if combo.len() > 1 {
        return Err(Error::Invariant(
            "curl reduces to more than the strand".into(),
        ));
    }
    Ok(combo.coefficient(&crate::planar::basis(2).diagrams[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{basis, borromean, braid_closure, parse_word};

    fn g2v(name: &str) -> Scalar {
        g2_symbol(name).unwrap()
    }

    #[test]
    fn circle_theta_k4() {
        let rs = RuleSet::g2();
        let a = g2v("a");
        assert_eq!(reduce_closed(&parse("O 1").unwrap(), &rs).unwrap(), a);
        assert_eq!(
            reduce_closed(&Diagram::empty(), &rs).unwrap(),
            Scalar::one()
        );
        let theta = parse("V a b c\nV c b a").unwrap();
        assert_eq!(reduce_closed(&theta, &rs).unwrap(), &a * &g2v("b"));
        let k4 = parse("V a b c\nV a e d\nV b d f\nV c f e").unwrap();
        assert_eq!(
            reduce_closed(&k4, &rs).unwrap(),
            &(&a * &g2v("b")) * &g2v("c")
        );
    }

    #[test]
    fn g2_curls() {
        let rs = RuleSet::g2();
        let a = g2v("a");
        let right = reduce_closed(&parse("X a a b b").unwrap(), &rs).unwrap();
        assert_eq!(right, &Scalar::q_pow(6.into()) * &a);
        let left = reduce_closed(&parse("X a b b a").unwrap(), &rs).unwrap();
        assert_eq!(left, &Scalar::q_pow((-6).into()) * &a);
        assert_eq!(
            curl_factor(&rs, Handedness::Right).unwrap(),
            Scalar::q_pow(6.into())
        );
        assert_eq!(
            curl_factor(&rs, Handedness::Left).unwrap(),
            Scalar::q_pow((-6).into())
        );
    }

    #[test]
    fn a1_values() {
        let rs = RuleSet::a1();
        assert_eq!(
            reduce_closed(&parse("O 1").unwrap(), &rs)
                .unwrap()
                .to_string(),
            "-q^(1/2) - q^(-1/2)"
        );
        assert_eq!(
            curl_factor(&rs, Handedness::Right).unwrap().to_string(),
            "q^(3/4)"
        );
    }

    #[test]
    fn boundary_reductions() {
        let rs = RuleSet::g2();
        let y = &basis(3).diagrams[0];
        let r = reduce_boundary(y, &rs).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coefficient(y), Scalar::one());
        let tadpole = parse("E 1 t; V t l l; B 1").unwrap();
        assert!(reduce_boundary(&tadpole, &rs).unwrap().is_empty());
        let x = parse("E 1 a; E 2 b; E 3 c; E 4 d; X a b c d; B 1 2 3 4").unwrap();
        let r = reduce_boundary(&x, &rs).unwrap();
        let got = r.coefficients_over(&basis(4).diagrams);
        assert_eq!(got, rs.crossing_rule.clone().unwrap());
    }

    #[test]
    fn expansion_counts() {
        let rs = RuleSet::g2();
        let d = parse("V a b c\nV c b a").unwrap();
        assert_eq!(expand_crossings(&d, &rs).unwrap().len(), 1);
        let curl = parse("X a a b b").unwrap();
        assert!(expand_crossings(&curl, &rs).unwrap().len() <= 4);
    }

    #[test]
    fn strategies_agree_on_pentagons() {
        // dodecahedron-like cage: closure with many pentagons via a braid word
        let rs = RuleSet::g2();
        let d = braid_closure(
            3,
            &parse_word("s1 s3 m2 s2 m3 m1 s1 s3 m2 s2 m3 m1").unwrap(),
        )
        .unwrap();
        let v0 = reduce_closed_with(&d, &rs, Strategy::Smallest).unwrap();
        for seed in 0..8 {
            assert_eq!(
                reduce_closed_with(&d, &rs, Strategy::Random(seed)).unwrap(),
                v0
            );
        }
    }

    #[test]
    fn borromean_is_laurent() {
        let rs = RuleSet::g2();
        let v = reduce_closed(&borromean(), &rs).unwrap();
        assert!(v.is_unit_denominator(), "{v}");
    }
}
