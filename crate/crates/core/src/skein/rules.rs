//! Skein rule sets: built-in G₂ and A₁ calculi and JSON rule files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::reduce::Calculus;
use crate::error::{Error, Result};
use crate::planar::{basis, parse, serialize_inline};
use crate::qscalar::{Exponent, Scalar};

/// A loadable skein calculus.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleSet {
    pub name: String,
    /// Exponents of every coefficient lie in `(1/root_order)·ℤ`.
    pub root_order: u32,
    pub decorations: Vec<String>,
    pub loop_value: Scalar,
    /// Face size → coefficients over `basis(size)`, in basis order.
    pub face_rules: BTreeMap<usize, Vec<Scalar>>,
    /// Coefficients over `basis(4)` replacing a crossing (port `i` =
    /// rotation position `i`, strand 0–2 over).
    pub crossing_rule: Option<Vec<Scalar>>,
    pub curl_exponent: Exponent,
}

fn s(text: &str) -> Scalar {
    Scalar::parse(text).expect("built-in coefficient parses")
}

/// Named G₂ coefficients.
pub mod g2 {
    use super::s;
    use crate::qscalar::Scalar;

    pub fn a() -> Scalar {
        s("q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5")
    }
    pub fn b() -> Scalar {
        s("-q^3 - q^2 - q - q^-1 - q^-2 - q^-3")
    }
    pub fn c() -> Scalar {
        s("q^2 + 1 + q^-2")
    }
    pub fn d1() -> Scalar {
        s("-q - q^-1")
    }
    pub fn d2() -> Scalar {
        s("q + 1 + q^-1")
    }
    pub fn e1() -> Scalar {
        Scalar::one()
    }
    pub fn e2() -> Scalar {
        Scalar::int(-1)
    }
    pub fn f1() -> Scalar {
        s("1/(1 + q^-1)")
    }
    pub fn g1() -> Scalar {
        s("1/(1 + q)")
    }
    pub fn f2() -> Scalar {
        s("q/(1 + q^-1)")
    }
    pub fn g2() -> Scalar {
        s("q^-1/(1 + q)")
    }
}

/// Which basis diagrams carry which symbol. Squares: `d2` on the two
/// smoothings `A`, `B`, `d1` on the H-graphs. Pentagons: `e2` on the
/// cup-plus-junction diagrams `U`, `e1` on the trees `T`. Crossing:
/// `A ↦ f2, B ↦ g2, C ↦ f1, D ↦ g1`.
pub const SQUARE_SYMBOLS: [&str; 4] = ["d2", "d2", "d1", "d1"];
pub const PENTAGON_SYMBOLS: [&str; 10] =
    ["e2", "e2", "e2", "e2", "e2", "e1", "e1", "e1", "e1", "e1"];
pub const CROSSING_SYMBOLS: [&str; 4] = ["f2", "g2", "f1", "g1"];

/// Value of a G₂ coefficient symbol.
pub fn g2_symbol(name: &str) -> Option<Scalar> {
    Some(match name {
        "a" => g2::a(),
        "b" => g2::b(),
        "c" => g2::c(),
        "d1" => g2::d1(),
        "d2" => g2::d2(),
        "e1" => g2::e1(),
        "e2" => g2::e2(),
        "f1" => g2::f1(),
        "f2" => g2::f2(),
        "g1" => g2::g1(),
        "g2" => g2::g2(),
        _ => return None,
    })
}

fn by_symbols(names: &[&str]) -> Vec<Scalar> {
    names.iter().map(|n| g2_symbol(n).unwrap()).collect()
}

impl RuleSet {
    pub fn g2() -> RuleSet {
        let mut face_rules = BTreeMap::new();
        face_rules.insert(1, vec![]);
        face_rules.insert(2, vec![g2::b()]);
        face_rules.insert(3, vec![g2::c()]);
        face_rules.insert(4, by_symbols(&SQUARE_SYMBOLS));
        face_rules.insert(5, by_symbols(&PENTAGON_SYMBOLS));
        RuleSet {
            name: "g2".into(),
            root_order: 1,
            decorations: vec!["plain".into()],
            loop_value: g2::a(),
            face_rules,
            crossing_rule: Some(by_symbols(&CROSSING_SYMBOLS)),
            curl_exponent: Exponent::from_integer(6),
        }
    }

    pub fn a1() -> RuleSet {
        RuleSet {
            name: "a1".into(),
            root_order: 4,
            decorations: vec!["plain".into()],
            loop_value: s("-q^(1/2) - q^(-1/2)"),
            face_rules: BTreeMap::new(),
            crossing_rule: Some(vec![
                s("-q^(1/4)"),
                s("-q^(-1/4)"),
                Scalar::zero(),
                Scalar::zero(),
            ]),
            curl_exponent: Exponent::new(3, 4),
        }
    }

    /// The reducer's view of this rule set.
    pub fn calculus(&self) -> Calculus<Scalar> {
        let mut faces: [Option<Vec<Scalar>>; 6] = Default::default();
        for (&n, cs) in &self.face_rules {
            faces[n] = Some(cs.clone());
        }
        Calculus {
            loop_value: self.loop_value.clone(),
            faces,
            crossing: self.crossing_rule.clone(),
        }
    }

    /// Check arities, rotational symmetry and exponent denominators.
    pub fn validate(&self) -> Result<()> {
        if self.root_order == 0 {
            return Err(Error::RuleSet("root order must be positive".into()));
        }
        let root = self.root_order as i64;
        let check_exp = |x: &Scalar| -> Result<()> {
            for p in [x.num(), x.den()] {
                if root % p.exp_denominator() != 0 {
                    return Err(Error::RuleSet(format!(
                        "coefficient {x} needs a root of q beyond order {root}"
                    )));
                }
            }
            Ok(())
        };
        check_exp(&self.loop_value)?;
        for (&n, cs) in &self.face_rules {
            if !(1..=5).contains(&n) {
                return Err(Error::RuleSet(format!(
                    "no face rule possible for {n} sides"
                )));
            }
            let b = basis(n);
            if cs.len() != b.diagrams.len() {
                return Err(Error::Arity {
                    expected: b.diagrams.len(),
                    got: cs.len(),
                });
            }
            for (i, c) in cs.iter().enumerate() {
                check_exp(c)?;
                let j = b.rotate(i);
                if cs[j] != *c {
                    return Err(Error::RuleSet(format!(
                        "{n}-sided face rule is not rotation invariant: {} has {c} but {} has {}",
                        b.names[i], b.names[j], cs[j]
                    )));
                }
            }
        }
        if let Some(cs) = &self.crossing_rule {
            if cs.len() != 4 {
                return Err(Error::Arity {
                    expected: 4,
                    got: cs.len(),
                });
            }
            for c in cs {
                check_exp(c)?;
            }
        }
        if root % self.curl_exponent.denom() != 0 {
            return Err(Error::RuleSet(
                "curl exponent denominator does not divide the root order".into(),
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RuleFile::from(self)).expect("rule set serializes")
    }

    pub fn from_json(text: &str) -> Result<RuleSet> {
        let f: RuleFile = serde_json::from_str(text)?;
        let rs = f.into_ruleset()?;
        rs.validate()?;
        Ok(rs)
    }
}

/// On-disk rule file layout.
#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RuleFile {
    name: String,
    root_order: u32,
    #[serde(default)]
    decorations: Vec<String>,
    loop_value: Scalar,
    #[serde(default)]
    face_rules: BTreeMap<String, Vec<(String, Scalar)>>,
    #[serde(default)]
    crossing_rule: Option<Vec<(String, Scalar)>>,
    curl_exponent: String,
}

impl From<&RuleSet> for RuleFile {
    fn from(rs: &RuleSet) -> Self {
        let list = |n: usize, cs: &[Scalar]| -> Vec<(String, Scalar)> {
            basis(n)
                .diagrams
                .iter()
                .zip(cs)
                .map(|(d, c)| (serialize_inline(d), c.clone()))
                .collect()
        };
        RuleFile {
            name: rs.name.clone(),
            root_order: rs.root_order,
            decorations: rs.decorations.clone(),
            loop_value: rs.loop_value.clone(),
            face_rules: rs
                .face_rules
                .iter()
                .map(|(&n, cs)| (n.to_string(), list(n, cs)))
                .collect(),
            crossing_rule: rs.crossing_rule.as_ref().map(|cs| list(4, cs)),
            curl_exponent: rs.curl_exponent.to_string(),
        }
    }
}

/// Coefficients over `basis(n)` from a (diagram, coefficient) list naming
/// every basis diagram exactly once.
fn over_basis(n: usize, entries: &[(String, Scalar)]) -> Result<Vec<Scalar>> {
    let b = basis(n);
    if entries.len() != b.diagrams.len() {
        return Err(Error::Arity {
            expected: b.diagrams.len(),
            got: entries.len(),
        });
    }
    let mut out: Vec<Option<Scalar>> = vec![None; b.diagrams.len()];
    for (code, c) in entries {
        let d = parse(&code.replace(';', "\n"))?;
        if d.arity() != n {
            return Err(Error::Arity {
                expected: n,
                got: d.arity(),
            });
        }
        let i = b
            .index_of(&d)
            .ok_or_else(|| Error::RuleSet(format!("{code:?} is not an acyclic basis diagram")))?;
        if out[i].replace(c.clone()).is_some() {
            return Err(Error::RuleSet(format!(
                "basis diagram {} listed twice",
                b.names[i]
            )));
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

impl RuleFile {
    fn into_ruleset(self) -> Result<RuleSet> {
        let mut face_rules = BTreeMap::new();
        for (k, entries) in &self.face_rules {
            let n: usize = k
                .parse()
                .map_err(|_| Error::RuleSet(format!("bad face size {k:?}")))?;
            if !(1..=5).contains(&n) {
                return Err(Error::RuleSet(format!(
                    "no face rule possible for {n} sides"
                )));
            }
            face_rules.insert(n, over_basis(n, entries)?);
        }
        let crossing_rule = self
            .crossing_rule
            .as_ref()
            .map(|e| over_basis(4, e))
            .transpose()?;
        let curl_exponent: Exponent =
            self.curl_exponent.trim().parse().map_err(|_| {
                Error::RuleSet(format!("bad curl exponent {:?}", self.curl_exponent))
            })?;
        Ok(RuleSet {
            name: self.name,
            root_order: self.root_order,
            decorations: self.decorations,
            loop_value: self.loop_value,
            face_rules,
            crossing_rule,
            curl_exponent,
        })
    }
}

/// A built-in rule set by name.
pub fn builtin_ruleset(name: &str) -> Result<RuleSet> {
    match name {
        "g2" => Ok(RuleSet::g2()),
        "a1" => Ok(RuleSet::a1()),
        _ => Err(Error::RuleSet(format!(
            "unknown built-in rule set {name:?}"
        ))),
    }
}

/// Load and validate a rule file.
pub fn load_ruleset(path: &Path) -> Result<RuleSet> {
    RuleSet::from_json(&std::fs::read_to_string(path)?)
}

/// Resolve a rule-set argument: a built-in name, an existing path, or a
/// file (`name` or `name.rules`) in one of the `search` directories.
pub fn resolve_ruleset(arg: &str, search: &[PathBuf]) -> Result<RuleSet> {
    if let Ok(rs) = builtin_ruleset(arg) {
        return Ok(rs);
    }
    let direct = Path::new(arg);
    if direct.is_file() {
        return load_ruleset(direct);
    }
    for dir in search {
        for cand in [dir.join(arg), dir.join(format!("{arg}.rules"))] {
            if cand.is_file() {
                return load_ruleset(&cand);
            }
        }
    }
    Err(Error::RuleSet(format!("rule set {arg:?} not found")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        RuleSet::g2().validate().unwrap();
        RuleSet::a1().validate().unwrap();
        assert!(builtin_ruleset("c2").is_err());
    }

    #[test]
    fn json_round_trip() {
        for rs in [RuleSet::g2(), RuleSet::a1()] {
            let back = RuleSet::from_json(&rs.to_json()).unwrap();
            assert_eq!(back, rs);
        }
    }

    #[test]
    fn asymmetric_square_is_rejected() {
        let mut rs = RuleSet::g2();
        rs.face_rules.get_mut(&4).unwrap()[0] = Scalar::int(5);
        assert!(matches!(rs.validate(), Err(Error::RuleSet(_))));
        assert!(RuleSet::from_json(&rs.to_json()).is_err());
    }

    #[test]
    fn short_pentagon_is_rejected() {
        let text = RuleSet::g2().to_json();
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        v["faceRules"]["5"].as_array_mut().unwrap().pop();
        assert!(matches!(
            RuleSet::from_json(&v.to_string()),
            Err(Error::Arity {
                expected: 10,
                got: 9
            })
        ));
    }

    #[test]
    fn root_order_is_enforced() {
        let mut rs = RuleSet::a1();
        rs.root_order = 2;
        assert!(rs.validate().is_err());
    }
}
