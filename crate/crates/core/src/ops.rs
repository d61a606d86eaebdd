//! The three graft operations: pendent, clone and join.
//!
//! [`GraftBuf`] applies them in place on sparse adjacency; the free
//! functions [`pendent`], [`clone`] and [`join`] are the persistent form and
//! return a new [`Graft`]. Existing vertex ids never change; new vertices
//! are appended. Every call also returns an [`OpRecord`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::check_distinct;
use crate::sparse::AdjacencyLists;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Pendent,
    Clone,
    Join,
}

/// What one operation did to a graft.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpRecord {
    pub op: OpKind,
    /// `[t]` for pendent and clone, the sorted join set for join.
    pub args: Vec<usize>,
    pub created: Vec<usize>,
    /// Join only: `(tip of the joined graft, vertex of the join set)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identified: Vec<(usize, usize)>,
}

/// A mutable graft on sparse adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraftBuf {
    adj: AdjacencyLists,
    tips: BTreeSet<usize>,
}

impl GraftBuf {
    pub fn from_graft(g: &Graft) -> Self {
        GraftBuf {
            adj: AdjacencyLists::from_graph(g.graph()),
            tips: g.tips().iter().collect(),
        }
    }

    pub fn k2() -> Self {
        Self::from_graft(&Graft::k2())
    }

    pub fn to_graft(&self) -> Graft {
        let graph = self.adj.to_graph();
        let tips = VertexSet::from_iter_with_capacity(graph.n(), self.tips.iter().copied());
        Graft::from_parts(graph, tips)
    }

    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn adjacency(&self) -> &AdjacencyLists {
        &self.adj
    }

    pub fn tips(&self) -> &BTreeSet<usize> {
        &self.tips
    }

    fn require_tip(&self, t: usize) -> Result<()> {
        self.adj.check_vertex(t)?;
        if self.tips.contains(&t) {
            Ok(())
        } else {
            Err(Error::TipViolation(t))
        }
    }

    pub fn pendent(&mut self, t: usize) -> Result<OpRecord> {
        self.require_tip(t)?;
        let leaf = self.adj.add_vertex();
        self.adj.add_edge(t, leaf)?;
        self.tips.remove(&t);
        self.tips.insert(leaf);
        Ok(OpRecord {
            op: OpKind::Pendent,
            args: vec![t],
            created: vec![leaf],
            identified: Vec::new(),
        })
    }

    pub fn clone_tip(&mut self, t: usize) -> Result<OpRecord> {
        self.require_tip(t)?;
        let twin = self.adj.add_vertex();
        let nbrs = self.adj.neighbors(t).to_vec();
        for u in nbrs {
            self.adj.add_edge(twin, u)?;
        }
        self.tips.insert(twin);
        Ok(OpRecord {
            op: OpKind::Clone,
            args: vec![t],
            created: vec![twin],
            identified: Vec::new(),
        })
    }

    /// Join `other` onto `x` with the sorted-order pairing.
    pub fn join(&mut self, x: &[usize], other: &GraftBuf) -> Result<OpRecord> {
        let xs = self.check_join(x, other)?;
        self.join_paired(&xs, other)
    }

    /// Validate join preconditions; returns `x` sorted.
    fn check_join(&self, x: &[usize], other: &GraftBuf) -> Result<Vec<usize>> {
        x.iter().try_for_each(|&v| self.adj.check_vertex(v))?;
        check_distinct(x)?;
        if let Some(&v) = x.iter().find(|v| !self.tips.contains(v)) {
            return Err(Error::TipViolation(v));
        }
        if x.len() != other.tips.len() {
            return Err(Error::Arity {
                x: x.len(),
                tips: other.tips.len(),
            });
        }
        let mut xs = x.to_vec();
        xs.sort_unstable();
        if let Some(&b) = xs
            .iter()
            .skip(1)
            .find(|&&b| self.adj.neighbors(b) != self.adj.neighbors(xs[0]))
        {
            return Err(Error::Homogeneity { a: xs[0], b });
        }
        Ok(xs)
    }

    /// `pairing[i]` receives the `i`-th smallest tip of `other`.
    fn join_paired(&mut self, pairing: &[usize], other: &GraftBuf) -> Result<OpRecord> {
        let mut image = vec![usize::MAX; other.n()];
        for (&t, &x) in other.tips.iter().zip(pairing) {
            image[t] = x;
        }
        let mut created = Vec::with_capacity(other.n() - other.tips.len());
        for (v, slot) in image.iter_mut().enumerate() {
            if !other.tips.contains(&v) {
                *slot = self.adj.add_vertex();
                created.push(*slot);
            }
        }
        for (u, v) in other.adj.edges() {
            self.adj.add_edge(image[u], image[v])?;
        }
        Ok(OpRecord {
            op: OpKind::Join,
            args: pairing.to_vec(),
            created,
            identified: other
                .tips
                .iter()
                .copied()
                .zip(pairing.iter().copied())
                .collect(),
        })
    }

    /// Re-apply a recorded pendent or clone.
    pub fn apply(&mut self, rec: &OpRecord) -> Result<OpRecord> {
        match (rec.op, rec.args.as_slice()) {
            (OpKind::Pendent, &[t]) => self.pendent(t),
            (OpKind::Clone, &[t]) => self.clone_tip(t),
            _ => Err(Error::InvalidArgument(format!(
                "{:?} with args {:?} cannot be replayed without a joined graft",
                rec.op, rec.args
            ))),
        }
    }
}

/// Attach a new leaf `t'` to tip `t`; `t'` replaces `t` as a tip.
pub fn pendent(g: &Graft, t: usize) -> Result<(Graft, OpRecord)> {
    let mut b = GraftBuf::from_graft(g);
    let rec = b.pendent(t)?;
    Ok((b.to_graft(), rec))
}

/// Add a new tip `t'` with `N(t') = N(t)`.
pub fn clone(g: &Graft, t: usize) -> Result<(Graft, OpRecord)> {
    let mut b = GraftBuf::from_graft(g);
    let rec = b.clone_tip(t)?;
    Ok((b.to_graft(), rec))
}

/// Glue `g2` onto `x ⊆ T(g1)` by identifying the tips of `g2` with `x`.
///
/// The `i`-th smallest tip of `g2` is identified with the `i`-th smallest
/// vertex of `x`. Non-tip vertices of `g2` are appended after `g1` in
/// increasing order. The result keeps the tips of `g1`.
pub fn join(g1: &Graft, x: &[usize], g2: &Graft) -> Result<(Graft, OpRecord)> {
    let mut b = GraftBuf::from_graft(g1);
    let rec = b.join(x, &GraftBuf::from_graft(g2))?;
    Ok((b.to_graft(), rec))
}

/// Join with an explicit pairing: `pairing[i]` is the vertex of the join set
/// that the `i`-th smallest tip of `g2` is glued to.
pub fn join_with_pairing(g1: &Graft, pairing: &[usize], g2: &Graft) -> Result<(Graft, OpRecord)> {
    let mut b = GraftBuf::from_graft(g1);
    let other = GraftBuf::from_graft(g2);
    b.check_join(pairing, &other)?;
    let rec = b.join_paired(pairing, &other)?;
    Ok((b.to_graft(), rec))
}

/// Tips of `g` grouped by neighbourhood, each group sorted; the legal join
/// sets are exactly the subsets of these groups.
pub fn homogeneous_tip_classes(g: &Graft) -> Vec<Vec<usize>> {
    let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
    for t in g.tips().iter() {
        let nbrs = g.graph().neighbors(t);
        match classes.iter_mut().find(|(n, _)| n == nbrs) {
            Some((_, members)) => members.push(t),
            None => classes.push((nbrs.clone(), vec![t])),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}
