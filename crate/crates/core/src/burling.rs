//! The two Burling constructions and the correspondence between them.
//!
//! *Pair construction.* A [`StablePair`] is a graph with an ordered list of
//! stable sets. [`next_pair`] adds one copy of the pair per stable set `S`,
//! then for every `S` and every stable set `T` of the copy indexed by `S` a
//! vertex `v(S,T)` adjacent to exactly `T`; the new stable sets are all
//! `S ∪ T` followed by all `S ∪ {v(S,T)}`. Starting from `(K1, [{0}])`,
//! [`burling_pair`] iterates this `k - 1` times.
//!
//! *Graft construction.* Starting from `(K2, {1})`, level `k + 1` is built
//! from `(G, T)` with graft operations only:
//!
//! 1. `H` is a copy of `(G, T)`; every tip `v` of `H` is cloned, then each
//!    clone receives a pendent leaf. `H'` has tips `T ∪ {leaves}`.
//! 2. In `G` every tip `u` is cloned `2|T| - 1` times; `X(u)` is `u` plus
//!    its clones in creation order.
//! 3. For each `u` in increasing order, a fresh `H'` is joined onto `X(u)`.
//!
//! Vertex numbering is deterministic: everything is appended in the order
//! above.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::Graph;
use crate::iso::graft_isomorphic;
use crate::ops::{GraftBuf, OpKind, OpRecord};
use crate::sparse::AdjacencyLists;

pub const DEFAULT_LEVEL_CAP: usize = 5;
pub const DEFAULT_EQUIVALENCE_CAP: usize = 3;

/// A graph with an ordered list of stable sets (sorted vertex lists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StablePair {
    graph: Graph,
    stables: Vec<Vec<usize>>,
}

impl StablePair {
    pub fn new(graph: Graph, stables: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(stables.len());
        for mut s in stables {
            s.sort_unstable();
            s.dedup();
            if !graph.is_stable_set(&s)? {
                return Err(Error::InvalidArgument(format!("{s:?} is not a stable set")));
            }
            sorted.push(s);
        }
        Ok(StablePair {
            graph,
            stables: sorted,
        })
    }

    /// `(K1, [{0}])`.
    pub fn seed() -> Self {
        StablePair {
            graph: Graph::empty(1),
            stables: vec![vec![0]],
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn stables(&self) -> &[Vec<usize>] {
        &self.stables
    }
}

/// Sparse form of a pair, used while iterating.
struct PairBuf {
    adj: AdjacencyLists,
    stables: Vec<Vec<usize>>,
}

impl PairBuf {
    fn seed() -> Self {
        PairBuf {
            adj: AdjacencyLists::new(1),
            stables: vec![vec![0]],
        }
    }

    fn from_pair(p: &StablePair) -> Self {
        PairBuf {
            adj: AdjacencyLists::from_graph(&p.graph),
            stables: p.stables.clone(),
        }
    }

    fn next(&self) -> Result<PairBuf> {
        let n = self.adj.n();
        let s = self.stables.len();
        if s == 0 {
            return Err(Error::InvalidArgument(
                "next_pair needs at least one stable set".into(),
            ));
        }
        let copy_base = |i: usize| n + i * n;
        let vertex_base = n + s * n;
        let mut adj = AdjacencyLists::new(vertex_base + s * s);
        for (u, v) in self.adj.edges() {
            adj.add_edge(u, v)?;
            for i in 0..s {
                adj.add_edge(copy_base(i) + u, copy_base(i) + v)?;
            }
        }
        for i in 0..s {
            for (j, t) in self.stables.iter().enumerate() {
                let v = vertex_base + i * s + j;
                for &w in t {
                    adj.add_edge(v, copy_base(i) + w)?;
                }
            }
        }
        let mut stables = Vec::with_capacity(2 * s * s);
        for (i, big) in self.stables.iter().enumerate() {
            for t in &self.stables {
                let mut set = big.clone();
                set.extend(t.iter().map(|&w| copy_base(i) + w));
                stables.push(set);
            }
        }
        for (i, big) in self.stables.iter().enumerate() {
            for j in 0..s {
                let mut set = big.clone();
                set.push(vertex_base + i * s + j);
                stables.push(set);
            }
        }
        Ok(PairBuf { adj, stables })
    }

    fn into_pair(self) -> StablePair {
        StablePair {
            graph: self.adj.to_graph(),
            stables: self.stables,
        }
    }
}

/// One step of the pair construction.
pub fn next_pair(p: &StablePair) -> Result<StablePair> {
    let out = PairBuf::from_pair(p).next()?.into_pair();
    debug_assert!(out
        .stables
        .iter()
        .all(|s| out.graph.is_stable_set(s).unwrap_or(false)));
    Ok(out)
}

fn check_level(k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("levels start at 1".into()));
    }
    if k > cap {
        return Err(Error::CapExceeded {
            what: "level k",
            value: k,
            cap,
        });
    }
    Ok(())
}

/// The `k`-th Burling graph with its stable sets.
pub fn burling_pair(k: usize) -> Result<StablePair> {
    burling_pair_capped(k, DEFAULT_LEVEL_CAP)
}

pub fn burling_pair_capped(k: usize, cap: usize) -> Result<StablePair> {
    Ok(burling_pair_sparse(k, cap)?.into_pair())
}

/// Sparse level-`k` pair: adjacency plus stable sets, without the dense
/// conversion.
pub fn burling_pair_lists(k: usize, cap: usize) -> Result<(AdjacencyLists, Vec<Vec<usize>>)> {
    let p = burling_pair_sparse(k, cap)?;
    Ok((p.adj, p.stables))
}

fn burling_pair_sparse(k: usize, cap: usize) -> Result<PairBuf> {
    check_level(k, cap)?;
    let mut p = PairBuf::seed();
    for _ in 1..k {
        p = p.next()?;
    }
    Ok(p)
}

/// The graft with one new tip per stable set, adjacent to exactly that set.
pub fn graft_from_pair(p: &StablePair) -> Graft {
    let n = p.graph.n();
    let mut adj = AdjacencyLists::from_graph(&p.graph);
    for s in &p.stables {
        let v = adj.add_vertex();
        for &w in s {
            adj.add_edge(v, w).expect("stable sets hold valid vertices");
        }
    }
    let graph = adj.to_graph();
    let tips = VertexSet::from_iter_with_capacity(graph.n(), n..graph.n());
    Graft::from_parts(graph, tips)
}

/// Which tip of `H'` a vertex of a join set was glued to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Partner {
    /// The copy of tip `original` of the previous level.
    CopiedTip { original: usize },
    /// The leaf hung below the clone of tip `original`.
    Pendant { original: usize },
}

/// Origin of a vertex of level `k + 1`, relative to level `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// A non-tip vertex of the previous level, same id.
    Base,
    /// The copy, inside `H'` joined at `anchor`, of non-tip `original`.
    Copy { anchor: usize, original: usize },
    /// The clone, inside `H'` joined at `anchor`, of tip `original`.
    CloneInCopy { anchor: usize, original: usize },
    /// Member `slot` of `X(anchor)`, glued to `partner`.
    Identified {
        anchor: usize,
        slot: usize,
        partner: Partner,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTrace {
    pub level: usize,
    /// Clones then pendents applied to the copy of the previous level.
    pub copy_ops: Vec<OpRecord>,
    /// Clones applied to the previous level to form the join sets.
    pub star_ops: Vec<OpRecord>,
    pub join_ops: Vec<OpRecord>,
    pub provenance: Vec<Provenance>,
}

/// Every operation performed by [`build_graft`], level by level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub k: usize,
    pub levels: Vec<LevelTrace>,
}

impl ConstructionTrace {
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("traces serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn next_level(g: &GraftBuf, level: usize) -> Result<(GraftBuf, LevelTrace)> {
    let tips: Vec<usize> = g.tips().iter().copied().collect();
    let t = tips.len();
    let n = g.n();

    let mut h = g.clone();
    let mut copy_ops = Vec::with_capacity(2 * t);
    let mut clones = Vec::with_capacity(t);
    for &v in &tips {
        let rec = h.clone_tip(v)?;
        clones.push(rec.created[0]);
        copy_ops.push(rec);
    }
    for &c in &clones {
        copy_ops.push(h.pendent(c)?);
    }

    let mut star = g.clone();
    let mut star_ops = Vec::with_capacity(t * (2 * t - 1));
    let mut join_sets = Vec::with_capacity(t);
    for &u in &tips {
        let mut x = vec![u];
        for _ in 0..2 * t - 1 {
            let rec = star.clone_tip(u)?;
            x.push(rec.created[0]);
            star_ops.push(rec);
        }
        join_sets.push(x);
    }

    let mut join_ops = Vec::with_capacity(t);
    for x in &join_sets {
        join_ops.push(star.join(x, &h)?);
    }

    let provenance = level_provenance(g, &tips, n, &h, &join_sets, &join_ops, star.n());
    let trace = LevelTrace {
        level,
        copy_ops,
        star_ops,
        join_ops,
        provenance,
    };
    Ok((star, trace))
}

fn level_provenance(
    g: &GraftBuf,
    tips: &[usize],
    n: usize,
    h: &GraftBuf,
    join_sets: &[Vec<usize>],
    join_ops: &[OpRecord],
    total: usize,
) -> Vec<Provenance> {
    let t = tips.len();
    let mut prov = vec![Provenance::Base; total];
    // tips of H' in sorted order: copies of the old tips, then the leaves
    let partner = |slot: usize| {
        if slot < t {
            Partner::CopiedTip {
                original: tips[slot],
            }
        } else {
            Partner::Pendant {
                original: tips[slot - t],
            }
        }
    };
    for (x, &u) in join_sets.iter().zip(tips) {
        for (slot, &v) in x.iter().enumerate() {
            prov[v] = Provenance::Identified {
                anchor: u,
                slot,
                partner: partner(slot),
            };
        }
    }
    let h_non_tips: Vec<usize> = (0..h.n()).filter(|v| !h.tips().contains(v)).collect();
    for (rec, &u) in join_ops.iter().zip(tips) {
        for (&new, &old) in rec.created.iter().zip(&h_non_tips) {
            prov[new] = if old < n {
                Provenance::Copy {
                    anchor: u,
                    original: old,
                }
            } else {
                Provenance::CloneInCopy {
                    anchor: u,
                    original: tips[old - n],
                }
            };
        }
    }
    debug_assert!(g
        .tips()
        .iter()
        .all(|v| matches!(prov[*v], Provenance::Identified { .. })));
    prov
}

/// `(G_k, T_k)` built through graft operations, with its trace.
pub fn build_graft(k: usize) -> Result<(Graft, ConstructionTrace)> {
    let (buf, trace) = build_graft_buf(k, DEFAULT_LEVEL_CAP)?;
    Ok((buf.to_graft(), trace))
}

/// Sparse form of [`build_graft`] with an explicit level cap.
pub fn build_graft_buf(k: usize, cap: usize) -> Result<(GraftBuf, ConstructionTrace)> {
    check_level(k, cap)?;
    let mut g = GraftBuf::k2();
    let mut levels = Vec::with_capacity(k - 1);
    for level in 2..=k {
        let (next, trace) = next_level(&g, level)?;
        g = next;
        levels.push(trace);
    }
    Ok((g, ConstructionTrace { k, levels }))
}

/// Rebuild a graft from its trace by re-running every recorded operation,
/// checking that each one creates the vertices it recorded.
pub fn replay(trace: &ConstructionTrace) -> Result<Graft> {
    let mut g = GraftBuf::k2();
    for level in &trace.levels {
        let mut h = g.clone();
        for rec in &level.copy_ops {
            expect_same(rec, &h.apply(rec)?)?;
        }
        let mut star = g.clone();
        for rec in &level.star_ops {
            expect_same(rec, &star.apply(rec)?)?;
        }
        for rec in &level.join_ops {
            if rec.op != OpKind::Join {
                return Err(Error::Parse(format!("expected a join, found {:?}", rec.op)));
            }
            expect_same(rec, &star.join(&rec.args, &h)?)?;
        }
        g = star;
    }
    Ok(g.to_graft())
}

fn expect_same(recorded: &OpRecord, replayed: &OpRecord) -> Result<()> {
    if recorded == replayed {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "trace mismatch: recorded {recorded:?}, replay produced {replayed:?}"
        )))
    }
}

/// An isomorphism from the pair-derived graft at level `k` onto the
/// operation-built graft.
pub fn check_equivalence(k: usize) -> Result<Option<Vec<usize>>> {
    check_equivalence_capped(k, DEFAULT_EQUIVALENCE_CAP)
}

pub fn check_equivalence_capped(k: usize, cap: usize) -> Result<Option<Vec<usize>>> {
    check_level(k, cap)?;
    let from_pair = graft_from_pair(&burling_pair_capped(k, usize::MAX)?);
    let (built, _) = build_graft_buf(k, usize::MAX)?;
    Ok(graft_isomorphic(&from_pair, &built.to_graft()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_step_from_k1() {
        let p = next_pair(&StablePair::seed()).unwrap();
        assert_eq!(p.graph().n(), 3);
        assert_eq!(p.graph().edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(p.stables(), &[vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn empty_stable_list_is_rejected() {
        let p = StablePair::new(Graph::empty(1), vec![]).unwrap();
        assert!(matches!(next_pair(&p), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn non_stable_sets_are_rejected() {
        assert!(StablePair::new(Graph::complete(2), vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn level_bounds() {
        assert!(burling_pair(0).is_err());
        assert_eq!(
            burling_pair(6).unwrap_err(),
            Error::CapExceeded {
                what: "level k",
                value: 6,
                cap: 5
            }
        );
        assert!(check_equivalence(4).is_err());
    }

    #[test]
    fn k1_graft_is_k2() {
        let (g, trace) = build_graft(1).unwrap();
        assert_eq!(g, Graft::k2());
        assert!(trace.levels.is_empty());
    }

    #[test]
    fn graft_from_seed_pair() {
        let g = graft_from_pair(&StablePair::seed());
        assert_eq!(g, Graft::k2());
    }

    #[test]
    fn level_two_provenance() {
        let (g, trace) = build_graft(2).unwrap();
        assert_eq!(g.n(), 5);
        let prov = &trace.levels[0].provenance;
        assert_eq!(prov[0], Provenance::Base);
        assert_eq!(
            prov[1],
            Provenance::Identified {
                anchor: 1,
                slot: 0,
                partner: Partner::CopiedTip { original: 1 }
            }
        );
        assert_eq!(
            prov[2],
            Provenance::Identified {
                anchor: 1,
                slot: 1,
                partner: Partner::Pendant { original: 1 }
            }
        );
        assert_eq!(
            prov[3],
            Provenance::Copy {
                anchor: 1,
                original: 0
            }
        );
        assert_eq!(
            prov[4],
            Provenance::CloneInCopy {
                anchor: 1,
                original: 1
            }
        );
    }
}
