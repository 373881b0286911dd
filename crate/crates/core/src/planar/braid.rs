//! Closures of braid-like words: crossings plus junction splits and merges.

use std::fmt;
use std::str::FromStr;

use super::{Builder, Diagram};
use crate::error::{Error, Result};

/// One layer of a vertical word; strand positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidLetter {
    /// σ_i (`positive`) or σ_i⁻¹ between positions i and i+1.
    Cross { i: usize, positive: bool },
    /// Strand i forks into positions i and i+1.
    Split(usize),
    /// Strands i and i+1 merge into position i.
    Merge(usize),
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidLetter::Cross { i, positive: true } => write!(f, "{i}"),
            BraidLetter::Cross { i, positive: false } => write!(f, "-{i}"),
            BraidLetter::Split(i) => write!(f, "s{i}"),
            BraidLetter::Merge(i) => write!(f, "m{i}"),
        }
    }
}

impl FromStr for BraidLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad braid letter {s:?}"),
        };
        let num = |t: &str| t.parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(bad);
        if let Some(t) = s.strip_prefix('s') {
            Ok(BraidLetter::Split(num(t)?))
        } else if let Some(t) = s.strip_prefix('m') {
            Ok(BraidLetter::Merge(num(t)?))
        } else if let Some(t) = s.strip_prefix('-') {
            Ok(BraidLetter::Cross {
                i: num(t)?,
                positive: false,
            })
        } else {
            Ok(BraidLetter::Cross {
                i: num(s)?,
                positive: true,
            })
        }
    }
}

/// Parse a whitespace-separated word such as `"1 -2 1 -2 1 -2"`.
pub fn parse_word(s: &str) -> Result<Vec<BraidLetter>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Closure of a word starting and ending on `width` strands (strands close
/// up on the right). Untouched strands become free circles.
pub fn braid_closure(width: usize, word: &[BraidLetter]) -> Result<Diagram> {
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let init: Vec<u32> = (0..width).map(|_| fresh()).collect();
    let mut cur = init.clone();
    let mut verts: Vec<(bool, Vec<u32>)> = Vec::new(); // (is_crossing, labels)
    for &l in word {
        let w = cur.len();
        let check = |i: usize, need: usize| -> Result<()> {
            if i == 0 || i + need - 1 > w {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("letter {l} out of range for width {w}"),
                });
            }
            Ok(())
        };
        match l {
            BraidLetter::Cross { i, positive } => {
                check(i, 2)?;
                let (ll, lr) = (cur[i - 1], cur[i]);
                let (ul, ur) = (fresh(), fresh());
                let r = if positive {
                    vec![ur, ul, ll, lr]
                } else {
                    vec![ul, ll, lr, ur]
                };
                verts.push((true, r));
                cur[i - 1] = ul;
                cur[i] = ur;
            }
            BraidLetter::Split(i) => {
                check(i, 1)?;
                let s = cur[i - 1];
                let (nw, ne) = (fresh(), fresh());
                verts.push((false, vec![ne, nw, s]));
                cur[i - 1] = nw;
                cur.insert(i, ne);
            }
            BraidLetter::Merge(i) => {
                check(i, 2)?;
                let (sw, se) = (cur[i - 1], cur[i]);
                let n = fresh();
                verts.push((false, vec![n, sw, se]));
                cur[i - 1] = n;
                cur.remove(i);
            }
        }
    }
    if cur.len() != width {
        return Err(Error::Parse {
            line: 0,
            msg: format!("word ends on {} strands, expected {width}", cur.len()),
        });
    }
    // identify top label with bottom label at each position
    let mut rename: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
    let mut circles = 0;
    for (t, b) in cur.iter().zip(&init) {
        if t == b {
            circles += 1;
        } else {
            rename.insert(*t, *b);
        }
    }
    let mut bld = Builder::new();
    for (is_x, ls) in verts {
        let ls: Vec<u32> = ls.iter().map(|x| *rename.get(x).unwrap_or(x)).collect();
        if is_x {
            bld.crossing(ls[0], ls[1], ls[2], ls[3]);
        } else {
            bld.junction(ls[0], ls[1], ls[2]);
        }
    }
    bld.circles(circles);
    bld.build()
}

/// Standard 6-crossing Borromean rings: closure of (σ1 σ2⁻¹)³.
pub fn borromean() -> Diagram {
    braid_closure(3, &parse_word("1 -2 1 -2 1 -2").unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::VertexKind;

    #[test]
    fn closures_are_planar() {
        let b = borromean();
        assert_eq!(b.count_kind(VertexKind::Crossing), 6);
        assert_eq!(b.components().len(), 1);
        let theta = braid_closure(1, &parse_word("s1 m1").unwrap()).unwrap();
        assert!(theta.isomorphic(&crate::planar::parse("V a b c\nV c b a").unwrap()));
        let d = braid_closure(3, &parse_word("s2 1 -3 m3 m1 s1").unwrap()).unwrap();
        d.check_planar().unwrap();
    }

    #[test]
    fn untouched_strands_are_circles() {
        let d = braid_closure(3, &parse_word("1").unwrap()).unwrap();
        assert_eq!(d.free_circles(), 1);
        assert_eq!(d.count_kind(VertexKind::Crossing), 1);
    }

    #[test]
    fn bad_words() {
        assert!(braid_closure(2, &parse_word("3").unwrap()).is_err());
        assert!(braid_closure(1, &parse_word("s1").unwrap()).is_err());
        assert!(parse_word("x").is_err());
    }
}
