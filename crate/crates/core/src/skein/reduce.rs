//! Crossing expansion and face-by-face reduction.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::combo::{Coeff, Combo};
use crate::error::{Error, Result};
use crate::planar::{basis, Code, Diagram, Face, VertexKind};

/// Loop value, face rules (indexed by side count) and crossing rule over
/// an arbitrary coefficient ring.
#[derive(Clone, Debug)]
pub struct Calculus<R> {
    pub loop_value: R,
    pub faces: [Option<Vec<R>>; 6],
    pub crossing: Option<Vec<R>>,
}

/// Which reducible face to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// A face with the fewest sides (first in orbit order).
    Smallest,
    /// A uniformly random reducible face, from a seeded generator.
    Random(u64),
}

/// Counts of the rewriting work done by a [`Reducer`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    /// Crossings replaced by the crossing rule.
    pub crossings_expanded: u64,
    /// Crossingless states produced by crossing expansion.
    pub crossing_states: u64,
    /// Face rewrites, indexed by face size (index 0 unused).
    pub face_rewrites: [u64; 6],
    /// Components answered from the memo table.
    pub memo_hits: u64,
}

/// Memoizing reducer for one calculus.
pub struct Reducer<'a, R> {
    calc: &'a Calculus<R>,
    strategy: Strategy,
    rng: ChaCha8Rng,
    closed_memo: HashMap<Code, R>,
    disk_memo: HashMap<Code, Combo<R>>,
    stats: ReductionStats,
}

impl<'a, R: Coeff> Reducer<'a, R> {
    pub fn new(calc: &'a Calculus<R>, strategy: Strategy) -> Self {
        let seed = match strategy {
            Strategy::Random(s) => s,
            Strategy::Smallest => 0,
        };
        Reducer {
            calc,
            strategy,
            rng: ChaCha8Rng::seed_from_u64(seed),
            closed_memo: HashMap::new(),
            disk_memo: HashMap::new(),
            stats: ReductionStats::default(),
        }
    }

    pub fn stats(&self) -> &ReductionStats {
        &self.stats
    }

    fn count_rewrite(&mut self, f: &Face) {
        self.stats.face_rewrites[f.side_count.min(5)] += 1;
    }

    /// Replace every crossing by the crossing rule, collecting terms.
    pub fn expand_crossings(&self, d: &Diagram) -> Result<Combo<R>> {
        let mut cur = Combo::single(d.clone(), R::one());
        loop {
            let mut next = Combo::new();
            let mut changed = false;
            for (_, t, c) in cur.iter() {
                let Some(x) = t.crossings().next() else {
                    next.add_term(t.clone(), c.clone());
                    continue;
                };
                let rule = self
                    .calc
                    .crossing
                    .as_ref()
                    .ok_or_else(|| Error::RuleIncomplete("no crossing rule".into()))?;
                changed = true;
                for (k, rep) in rule.iter().zip(&basis(4).diagrams) {
                    if k.is_zero() {
                        continue;
                    }
                    next.add_term(t.replace_vertex(x, rep)?, c.mul(k));
                }
            }
            cur = next;
            if !changed {
                return Ok(cur);
            }
        }
    }

    fn pick_face(&mut self, d: &Diagram) -> Option<Face> {
        let mut fs = d.reducible_faces();
        match self.strategy {
            Strategy::Smallest => {
                let m = fs.iter().map(|f| f.side_count).min()?;
                fs.into_iter().find(|f| f.side_count == m)
            }
            Strategy::Random(_) => {
                fs.shuffle(&mut self.rng);
                fs.into_iter().next()
            }
        }
    }

    fn face_rule(&self, d: &Diagram, f: &Face) -> Result<&'a [R]> {
        if f.darts
            .iter()
            .any(|&x| d.deco(x).is_some() || d.deco(d.alpha(x)).is_some())
        {
            return Err(Error::RuleIncomplete(format!(
                "no rule for a decorated {}-sided face",
                f.side_count
            )));
        }
        self.calc.faces[f.side_count].as_deref().ok_or_else(|| {
            Error::RuleIncomplete(format!("no rule for {}-sided faces", f.side_count))
        })
    }

    /// Rewrite one face by its rule (without further reduction).
    pub fn rewrite_face(&self, d: &Diagram, f: &Face) -> Result<Combo<R>> {
        let rule = self.face_rule(d, f)?;
        let mut out = Combo::new();
        for (k, rep) in rule.iter().zip(&basis(f.side_count).diagrams) {
            if !k.is_zero() {
                out.add_term(d.excise_and_glue(f, rep)?, k.clone());
            }
        }
        Ok(out)
    }

    fn check_vertices(d: &Diagram) -> Result<()> {
        if d.count_kind(VertexKind::Tetravalent) > 0 {
            return Err(Error::RuleIncomplete(
                "no rule for tetravalent vertices".into(),
            ));
        }
        Ok(())
    }

    /// Value of a closed diagram.
    pub fn closed(&mut self, d: &Diagram) -> Result<R> {
        if !d.is_closed() {
            return Err(Error::Arity {
                expected: 0,
                got: d.arity(),
            });
        }
        Self::check_vertices(d)?;
        if d.has_crossings() {
            let combo = self.expand_crossings(d)?;
            self.stats.crossings_expanded += d.count_kind(VertexKind::Crossing) as u64;
            self.stats.crossing_states += combo.len() as u64;
            let mut acc = R::zero();
            for (_, t, c) in combo.iter() {
                acc = acc.add(&c.mul(&self.closed_crossingless(t)?));
            }
            return Ok(acc);
        }
        self.closed_crossingless(d)
    }

    fn closed_crossingless(&mut self, d: &Diagram) -> Result<R> {
        let mut acc = self.calc.loop_value.pow(d.free_circles());
        let (_, comps) = d.split();
        for c in comps {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(&self.component(&c)?);
        }
        Ok(acc)
    }

    /// Connected closed crossingless component without free circles.
    fn component(&mut self, d: &Diagram) -> Result<R> {
        let code = d.canonical_code();
        if let Some(v) = self.closed_memo.get(&code) {
            self.stats.memo_hits += 1;
            return Ok(v.clone());
        }
        let f = self
            .pick_face(d)
            .ok_or_else(|| Error::Invariant("closed component without a reducible face".into()))?;
        self.count_rewrite(&f);
        let step = self.rewrite_face(d, &f)?;
        let mut acc = R::zero();
        for (_, t, c) in step.iter() {
            acc = acc.add(&c.mul(&self.closed_crossingless(t)?));
        }
        self.closed_memo.insert(code, acc.clone());
        Ok(acc)
    }

    /// Reduce a diagram with boundary as far as the rules allow: crossings
    /// expanded, closed pieces evaluated, interior faces reduced.
    pub fn disk(&mut self, d: &Diagram) -> Result<Combo<R>> {
        Self::check_vertices(d)?;
        if d.is_closed() {
            return Ok(Combo::single(Diagram::empty(), self.closed(d)?));
        }
        let terms = if d.has_crossings() {
            self.expand_crossings(d)?
        } else {
            Combo::single(d.clone(), R::one())
        };
        let mut out = Combo::new();
        for (_, t, c) in terms.iter() {
            let r = self.disk_crossingless(t)?;
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    fn disk_crossingless(&mut self, d: &Diagram) -> Result<Combo<R>> {
        let (att, closed) = d.split();
        let mut k = self.calc.loop_value.pow(att.free_circles());
        for c in closed {
            if k.is_zero() {
                return Ok(Combo::new());
            }
            k = k.mul(&self.component(&c)?);
        }
        if k.is_zero() {
            return Ok(Combo::new());
        }
        let att = att.with_free_circles(0);
        Ok(self.attached(&att)?.scaled(&k))
    }

    fn attached(&mut self, d: &Diagram) -> Result<Combo<R>> {
        let code = d.canonical_code();
        if let Some(v) = self.disk_memo.get(&code) {
            self.stats.memo_hits += 1;
            return Ok(v.clone());
        }
        let out = match self.pick_face(d) {
            None => Combo::single(d.clone(), R::one()),
            Some(f) => {
                self.count_rewrite(&f);
                let step = self.rewrite_face(d, &f)?;
                let mut out = Combo::new();
                for (_, t, c) in step.iter() {
                    let r = self.disk_crossingless(t)?;
                    out.add_scaled(&r, c);
                }
                out
            }
        };
        self.disk_memo.insert(code, out.clone());
        Ok(out)
    }
}
