//! Line-oriented diagram format.
//!
//! ```text
//! ruleset g2
//! V a b c        # junction, ccw
//! X a b c d      # crossing, ccw, (a,c) over (b,d)
//! T a b c d      # plain four-valent vertex
//! E p a          # boundary endpoint p on edge a
//! O k            # k free circles (or one circle per non-numeric token)
//! B p1 p2 ...    # ccw boundary order
//! ```
//! `;` also separates records. Labels may carry a decoration: `a:double`.

use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use super::{Builder, Diagram, VertexKind};
use crate::error::{Error, Result};

/// Parse a diagram, ignoring any `ruleset` header.
pub fn parse(text: &str) -> Result<Diagram> {
    parse_with_header(text).map(|(_, d)| d)
}

/// Parse a diagram and return the `ruleset` header if present.
pub fn parse_with_header(text: &str) -> Result<(Option<String>, Diagram)> {
    let mut ruleset = None;
    let mut labels: HashMap<String, u32> = HashMap::new();
    let mut uses: HashMap<u32, (usize, usize)> = HashMap::new();
    let mut decos: HashMap<u32, Arc<str>> = HashMap::new();
    let mut b = Builder::new();
    let mut endpoints: HashMap<String, (u32, usize)> = HashMap::new();
    let mut endpoint_order: Vec<String> = Vec::new();
    let mut border: Option<(Vec<String>, usize)> = None;

    let records = text
        .lines()
        .enumerate()
        .flat_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("");
            l.split(';').map(move |r| (i + 1, r.trim().to_string()))
        })
        .filter(|(_, r)| !r.is_empty());

    for (line, rec) in records {
        let perr = |msg: String| Error::Parse { line, msg };
        let mut toks = rec.split_whitespace();
        let head = toks.next().unwrap();
        let args: Vec<&str> = toks.collect();
        let mut label = |tok: &str| -> Result<u32> {
            let (name, deco) = match tok.split_once(':') {
                Some((n, d)) if !n.is_empty() && !d.is_empty() => (n, Some(d)),
                Some(_) => return Err(perr(format!("malformed label {tok:?}"))),
                None => (tok, None),
            };
            let n = labels.len() as u32;
            let id = *labels.entry(name.to_string()).or_insert(n);
            let u = uses.entry(id).or_insert((0, line));
            u.0 += 1;
            if let Some(d) = deco {
                if let Some(old) = decos.get(&id) {
                    if &**old != d {
                        return Err(perr(format!("conflicting decorations on {name:?}")));
                    }
                }
                decos.insert(id, Arc::from(d));
            }
            Ok(id)
        };
        match head {
            "ruleset" => {
                if args.len() != 1 {
                    return Err(perr("ruleset header takes one name".into()));
                }
                ruleset = Some(args[0].to_string());
            }
            "V" | "X" | "T" => {
                let kind = match head {
                    "V" => VertexKind::Junction,
                    "X" => VertexKind::Crossing,
                    _ => VertexKind::Tetravalent,
                };
                if args.len() != kind.degree() {
                    return Err(perr(format!(
                        "{head} record needs {} labels",
                        kind.degree()
                    )));
                }
                let ls = args.iter().map(|t| label(t)).collect::<Result<Vec<_>>>()?;
                b.vertex(kind, &ls);
            }
            "E" => {
                if args.len() != 2 {
                    return Err(perr("E record is `E <endpoint> <label>`".into()));
                }
                let l = label(args[1])?;
                let v = b.vertex(VertexKind::Endpoint, &[l]);
                if endpoints.insert(args[0].to_string(), (v, line)).is_some() {
                    return Err(perr(format!("endpoint {:?} declared twice", args[0])));
                }
                endpoint_order.push(args[0].to_string());
            }
            "O" => {
                if args.is_empty() {
                    b.circles(1);
                } else if args.len() == 1 && args[0].chars().all(|c| c.is_ascii_digit()) {
                    let k: u32 = args[0]
                        .parse()
                        .map_err(|_| perr("bad circle count".into()))?;
                    b.circles(k);
                } else {
                    b.circles(args.len() as u32);
                }
            }
            "B" => {
                if border.is_some() {
                    return Err(perr("duplicate B record".into()));
                }
                border = Some((args.iter().map(|s| s.to_string()).collect(), line));
            }
            other => return Err(perr(format!("unknown record {other:?}"))),
        }
    }

    let mut bad: Vec<(usize, String)> = labels
        .iter()
        .filter_map(|(name, id)| {
            let (n, line) = uses[id];
            (n != 2).then(|| {
                (
                    line,
                    format!("label {name:?} appears {n} times (expected 2)"),
                )
            })
        })
        .collect();
    bad.sort();
    if let Some((line, msg)) = bad.into_iter().next() {
        return Err(Error::Parse { line, msg });
    }
    for (id, d) in decos {
        b.decorate(id, Some(d));
    }
    let order = match border {
        Some((names, line)) => {
            if names.len() != endpoints.len() {
                return Err(Error::Parse {
                    line,
                    msg: "B must list every endpoint exactly once".into(),
                });
            }
            let mut seen = std::collections::HashSet::new();
            let mut order = Vec::new();
            for n in names {
                let Some(&(v, _)) = endpoints.get(&n) else {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unknown endpoint {n:?}"),
                    });
                };
                if !seen.insert(v) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("endpoint {n:?} repeated in B"),
                    });
                }
                order.push(v);
            }
            order
        }
        None => endpoint_order.iter().map(|n| endpoints[n].0).collect(),
    };
    b.set_boundary_order(order);
    let d = b.build_unchecked().map_err(|e| match e {
        Error::Parse { msg, .. } => Error::Parse { line: 0, msg },
        e => e,
    })?;
    d.check_planar()?;
    Ok((ruleset, d))
}

/// Render a diagram; endpoints are named `1..n` in boundary order.
pub fn serialize(d: &Diagram) -> String {
    let mut names: HashMap<u32, usize> = HashMap::new();
    let mut label = |x: u32| -> String {
        let e = d.edge_label(x);
        let n = names.len();
        let i = *names.entry(e).or_insert(n);
        match d.deco(x) {
            Some(s) => format!("e{i}:{s}"),
            None => format!("e{i}"),
        }
    };
    let mut out = String::new();
    for v in 0..d.num_vertices() as u32 {
        let head = match d.kind(v) {
            VertexKind::Junction => "V",
            VertexKind::Crossing => "X",
            VertexKind::Tetravalent => "T",
            VertexKind::Endpoint => continue,
        };
        out.push_str(head);
        for &x in d.rotation(v) {
            out.push(' ');
            out.push_str(&label(x));
        }
        out.push('\n');
    }
    for (i, &v) in d.boundary().iter().enumerate() {
        let _ = writeln!(out, "E {} {}", i + 1, label(d.rotation(v)[0]));
    }
    if d.free_circles() > 0 {
        let _ = writeln!(out, "O {}", d.free_circles());
    }
    if !d.boundary().is_empty() {
        out.push('B');
        for i in 0..d.arity() {
            let _ = write!(out, " {}", i + 1);
        }
        out.push('\n');
    }
    out
}

/// Single-line form with `;` separators (used inside rule files).
pub fn serialize_inline(d: &Diagram) -> String {
    serialize(d).trim_end().replace('\n', "; ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_circle() {
        let d = parse("O a").unwrap();
        assert!(d.is_closed());
        assert_eq!(d.free_circles(), 1);
        assert_eq!(parse("O 3").unwrap().free_circles(), 3);
    }

    #[test]
    fn theta_graph() {
        let d = parse("V a b c\nV c b a").unwrap();
        assert_eq!(d.num_vertices(), 2);
        assert_eq!(d.num_edges(), 3);
        assert_eq!(d.face_orbits().len(), 3);
    }

    #[test]
    fn identical_rotations_are_toroidal() {
        assert!(matches!(
            parse("V a b c\nV a b c"),
            Err(Error::Nonplanar(_))
        ));
        assert!(matches!(parse("X a b a b"), Err(Error::Nonplanar(_))));
    }

    #[test]
    fn kinked_unknot() {
        let d = parse("ruleset g2\nX a a b b").unwrap();
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.num_edges(), 2);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("V a b c"), Err(Error::Parse { .. })));
        assert!(matches!(parse("V a a a a"), Err(Error::Parse { .. })));
        assert!(matches!(parse("Q x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse("E 1 a\nE 2 a\nB 1 1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse("V a:x b c\nV c b a:y"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn round_trip() {
        for t in [
            "V a b c\nV c b a",
            "E 1 a; E 2 b; E 3 c; V a b c; B 1 2 3",
            "X a b c d\nX d c b a\nO 2",
            "E 1 a; E 2 a; V x y:double z; V z y:double x; B 1 2",
        ] {
            let d = parse(t).unwrap();
            let s = serialize(&d);
            let e = parse(&s).unwrap();
            assert!(d.isomorphic(&e), "{t}");
            assert_eq!(serialize(&e), s);
        }
    }
}
