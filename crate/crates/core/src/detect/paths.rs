//! Depth-first enumeration of induced paths from a fixed start vertex.

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

use super::Meter;

pub(crate) enum Step<T> {
    Extend,
    /// Keep this path but do not grow it further.
    Skip,
    Stop(T),
}

/// Visits every induced path `start = p0, .., pd` whose other vertices lie
/// in `allowed`, calling `visit` on each path of two or more vertices.
pub(crate) struct PathWalker<'g> {
    g: &'g Graph,
    allowed: VertexSet,
    meter: Meter,
    path: Vec<usize>,
    on_path: VertexSet,
    blocked: Vec<VertexSet>,
}

impl<'g> PathWalker<'g> {
    pub(crate) fn new(g: &'g Graph, allowed: VertexSet, meter: Meter) -> Self {
        let n = g.n();
        PathWalker {
            g,
            allowed,
            meter,
            path: Vec::new(),
            on_path: VertexSet::new(n),
            blocked: Vec::new(),
        }
    }

    pub(crate) fn walk<T, F>(&mut self, start: usize, visit: &mut F) -> Result<Option<T>>
    where
        F: FnMut(&[usize], &VertexSet) -> Step<T>,
    {
        self.path.clear();
        self.on_path.clear();
        self.path.push(start);
        self.on_path.insert(start);
        if self.blocked.is_empty() {
            self.blocked.push(VertexSet::new(self.g.n()));
        }
        self.blocked[0].clear();
        self.descend(0, visit)
    }

    fn descend<T, F>(&mut self, d: usize, visit: &mut F) -> Result<Option<T>>
    where
        F: FnMut(&[usize], &VertexSet) -> Step<T>,
    {
        let tip = self.path[d];
        let mut cands = self.g.neighbors(tip).intersection(&self.allowed);
        cands.difference_with(&self.blocked[d]);
        cands.remove(self.path[0]);
        if self.blocked.len() <= d + 1 {
            self.blocked.push(VertexSet::new(self.g.n()));
        }
        {
            let (head, tail) = self.blocked.split_at_mut(d + 1);
            tail[0].copy_from(&head[d]);
            tail[0].union_with(self.g.neighbors(tip));
            tail[0].insert(tip);
        }
        for w in cands.iter() {
            self.meter.tick()?;
            self.path.push(w);
            self.on_path.insert(w);
            let step = visit(&self.path, &self.on_path);
            let result = match step {
                Step::Stop(t) => Some(t),
                Step::Skip => None,
                Step::Extend => self.descend(d + 1, visit)?,
            };
            self.path.pop();
            self.on_path.remove(w);
            if result.is_some() {
                return Ok(result);
            }
        }
        Ok(None)
    }
}
