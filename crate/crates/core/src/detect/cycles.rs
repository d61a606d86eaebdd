//! Hole enumeration.
//!
//! A [`CycleWalker`] lists the chordless cycles of length >= 4 through an
//! anchor vertex whose other vertices lie in an `allowed` set. It grows
//! induced paths `anchor = p0, p1, .., pd` depth-first: an extension `w` of
//! `pd` must avoid the closed neighbourhoods of `p1..p(d-1)` (and of `p0`
//! while `d = 1`); a `w` adjacent to the anchor closes a cycle and is never
//! extended. Each cycle is reported once, oriented so that `p1` is smaller
//! than the closing vertex.

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::witness::Witness;

use super::{Meter, SearchConfig};

pub(crate) struct CycleWalker<'g> {
    g: &'g Graph,
    anchor: usize,
    allowed: VertexSet,
    min_len: usize,
    /// `N(anchor) ∩ allowed`: the vertices that can close a cycle.
    closers: VertexSet,
    path: Vec<usize>,
    /// `blocked[d]`: vertices an extension of `path[d]` must avoid.
    blocked: Vec<VertexSet>,
    /// `cands[d]`: untried extensions of `path[d]`.
    cands: Vec<VertexSet>,
    /// Closers still usable given `p1`; `None` until `p1` is chosen.
    live_closers: VertexSet,
    meter: Meter,
    done: bool,
}

impl<'g> CycleWalker<'g> {
    pub(crate) fn new(
        g: &'g Graph,
        anchor: usize,
        mut allowed: VertexSet,
        min_len: usize,
        meter: Meter,
    ) -> Self {
        allowed.remove(anchor);
        let n = g.n();
        let closers = g.neighbors(anchor).intersection(&allowed);
        let mut closed = g.neighbors(anchor).clone();
        closed.insert(anchor);
        CycleWalker {
            g,
            anchor,
            cands: vec![closers.clone()],
            blocked: vec![closed],
            allowed,
            min_len: min_len.max(4),
            closers,
            path: vec![anchor],
            live_closers: VertexSet::new(n),
            meter,
            done: false,
        }
    }

    fn ensure_depth(&mut self, d: usize) {
        let n = self.g.n();
        while self.blocked.len() <= d {
            self.blocked.push(VertexSet::new(n));
            self.cands.push(VertexSet::new(n));
        }
    }

    /// Next cycle in search order, as a vertex list starting at the anchor.
    pub(crate) fn next_cycle(&mut self) -> Option<Result<Vec<usize>>> {
        if self.done {
            return None;
        }
        let g = self.g;
        loop {
            let d = self.path.len() - 1;
            let Some(w) = self.cands[d].first() else {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.path.pop();
                continue;
            };
            self.cands[d].remove(w);
            if let Err(e) = self.meter.tick() {
                self.done = true;
                return Some(Err(e));
            }
            if d == 0 {
                // choosing p1: later closers must be larger than p1
                self.live_closers.copy_from(&self.closers);
                for v in 0..=w {
                    self.live_closers.remove(v);
                }
                if self.live_closers.is_empty() {
                    continue;
                }
                self.ensure_depth(1);
                let (head, tail) = self.blocked.split_at_mut(1);
                tail[0].copy_from(&head[0]);
                self.path.push(w);
                self.fill_candidates(1);
                continue;
            }
            if d >= 2 && self.closers.contains(w) {
                if w > self.path[1] && self.path.len() + 1 >= self.min_len {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Some(Ok(cycle));
                }
                continue;
            }
            self.ensure_depth(d + 1);
            {
                let (head, tail) = self.blocked.split_at_mut(d + 1);
                let next = &mut tail[0];
                if d == 1 {
                    next.copy_from(g.neighbors(self.path[1]));
                } else {
                    next.copy_from(&head[d]);
                    next.union_with(g.neighbors(self.path[d]));
                }
                next.insert(self.path[d]);
            }
            // some closer must remain reachable without a chord
            if !self
                .live_closers
                .intersects_minus(&self.allowed, &self.blocked[d + 1])
            {
                continue;
            }
            self.path.push(w);
            self.fill_candidates(d + 1);
        }
    }

    fn fill_candidates(&mut self, d: usize) {
        let tip = self.path[d];
        let c = &mut self.cands[d];
        c.copy_from(self.g.neighbors(tip));
        c.intersect_with(&self.allowed);
        c.difference_with(&self.blocked[d]);
    }

    pub(crate) fn anchor(&self) -> usize {
        self.anchor
    }
}

/// Iterator over every hole of a graph, each reported once.
///
/// Cycles are in canonical form: the smallest vertex first, then its
/// smaller cycle neighbour. Under a node budget the iterator yields one
/// `Err(Inconclusive)` when the budget runs out and then stops.
pub struct HoleIter<'g> {
    g: &'g Graph,
    min_len: usize,
    next_anchor: usize,
    walker: Option<CycleWalker<'g>>,
    meter: Meter,
    failed: bool,
}

impl HoleIter<'_> {
    pub fn explored(&self) -> u64 {
        self.meter.explored()
    }
}

impl Iterator for HoleIter<'_> {
    type Item = Result<Witness>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            if self.walker.is_none() {
                if self.next_anchor >= self.g.n() {
                    return None;
                }
                let s = self.next_anchor;
                self.next_anchor += 1;
                let allowed = VertexSet::above(self.g.n(), s);
                self.walker = Some(CycleWalker::new(
                    self.g,
                    s,
                    allowed,
                    self.min_len,
                    self.meter.clone(),
                ));
            }
            let walker = self.walker.as_mut().expect("walker was just set");
            match walker.next_cycle() {
                Some(Ok(cycle)) => {
                    debug_assert_eq!(cycle[0], walker.anchor());
                    return Some(Ok(Witness::Hole { cycle }));
                }
                Some(Err(e)) => {
                    self.failed = true;
                    return Some(Err(e));
                }
                None => self.walker = None,
            }
        }
    }
}

/// All holes of length at least `min_len` (clamped to 4), unlimited search.
pub fn find_hole(g: &Graph, min_len: usize) -> HoleIter<'_> {
    HoleIter {
        g,
        min_len,
        next_anchor: 0,
        walker: None,
        meter: Meter::unlimited(),
        failed: false,
    }
}

pub fn find_hole_with<'g>(
    g: &'g Graph,
    min_len: usize,
    cfg: &SearchConfig,
) -> Result<HoleIter<'g>> {
    Ok(HoleIter {
        g,
        min_len,
        next_anchor: 0,
        walker: None,
        meter: cfg.meter(g.n())?,
        failed: false,
    })
}
