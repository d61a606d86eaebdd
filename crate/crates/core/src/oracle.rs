//! Brute-force pattern oracle.
//!
//! Enumerates every vertex subset of a small graph and tests whether the
//! induced subgraph *is* the named pattern, straight from the definitions.
//! It shares no search code with [`crate::detect`] and exists to
//! cross-check the detectors.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witness::Witness;

pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Triangle,
    Hole,
    Wheel,
    Theta,
    Fan,
    GuardedFan,
    MountablePath,
}

/// Adjacency as `u32` masks; only valid for `n <= 32`.
struct Masks {
    adj: Vec<u32>,
    tips: u32,
}

impl Masks {
    fn degree_in(&self, v: usize, set: u32) -> u32 {
        (self.adj[v] & set).count_ones()
    }

    fn connected(&self, set: u32) -> bool {
        if set == 0 {
            return true;
        }
        let mut seen = 1u32 << set.trailing_zeros();
        loop {
            let mut grown = seen;
            for v in members(seen) {
                grown |= self.adj[v] & set;
            }
            if grown == seen {
                return seen == set;
            }
            seen = grown;
        }
    }

    /// Vertex order of `set` if it induces a path.
    fn as_path(&self, set: u32) -> Option<Vec<usize>> {
        let size = set.count_ones();
        if size == 0 || !self.connected(set) {
            return None;
        }
        if members(set).any(|v| self.degree_in(v, set) > 2) {
            return None;
        }
        let edges: u32 = members(set).map(|v| self.degree_in(v, set)).sum::<u32>() / 2;
        if edges != size - 1 {
            return None;
        }
        let start = members(set)
            .find(|&v| self.degree_in(v, set) <= 1)
            .expect("a path has an end");
        Some(self.walk(start, set))
    }

    /// Vertex order of `set` if it induces a cycle (length >= 3).
    fn as_cycle(&self, set: u32) -> Option<Vec<usize>> {
        if set.count_ones() < 3 || !self.connected(set) {
            return None;
        }
        if members(set).any(|v| self.degree_in(v, set) != 2) {
            return None;
        }
        Some(self.walk(set.trailing_zeros() as usize, set))
    }

    fn walk(&self, start: usize, set: u32) -> Vec<usize> {
        let mut order = vec![start];
        let mut used = 1u32 << start;
        let mut cur = start;
        while let Some(next) = members(self.adj[cur] & set & !used).next() {
            order.push(next);
            used |= 1 << next;
            cur = next;
        }
        order
    }
}

fn members(set: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| set & (1 << v) != 0)
}

/// Search every subset of `V(g)` for an induced copy of `kind`.
///
/// `k` is the minimum hub (wheel) or pivot (fan) attachment; it is ignored
/// for the other patterns. Tip-aware patterns need `tips`.
pub fn oracle_contains(
    g: &Graph,
    tips: Option<&VertexSet>,
    kind: PatternKind,
    k: usize,
) -> Result<Option<Witness>> {
    oracle_contains_capped(g, tips, kind, k, DEFAULT_ORACLE_CAP)
}

pub fn oracle_contains_capped(
    g: &Graph,
    tips: Option<&VertexSet>,
    kind: PatternKind,
    k: usize,
    cap: usize,
) -> Result<Option<Witness>> {
    let n = g.n();
    let cap = cap.min(24);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            value: n,
            cap,
        });
    }
    let m = Masks {
        adj: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
            .collect(),
        tips: tips.map_or(0, |t| t.iter().fold(0u32, |acc, u| acc | 1 << u)),
    };
    if matches!(kind, PatternKind::GuardedFan | PatternKind::MountablePath) && tips.is_none() {
        return Ok(None);
    }
    for set in 1u32..(1u32 << n) {
        if let Some(w) = classify(&m, set, kind, k) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Number of induced cycles of length at least `min_len`.
pub fn oracle_count_holes(g: &Graph, min_len: usize) -> Result<usize> {
    let n = g.n();
    if n > DEFAULT_ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            value: n,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    let m = Masks {
        adj: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
            .collect(),
        tips: 0,
    };
    Ok((1u32..(1u32 << n))
        .filter(|&s| s.count_ones() as usize >= min_len.max(4) && m.as_cycle(s).is_some())
        .count())
}

fn classify(m: &Masks, set: u32, kind: PatternKind, k: usize) -> Option<Witness> {
    let size = set.count_ones();
    match kind {
        PatternKind::Triangle => {
            if size != 3 {
                return None;
            }
            let v: Vec<usize> = members(set).collect();
            members(set)
                .all(|x| m.degree_in(x, set) == 2)
                .then(|| Witness::Triangle {
                    vertices: [v[0], v[1], v[2]],
                })
        }
        PatternKind::Hole => {
            if size < 4 {
                return None;
            }
            m.as_cycle(set).map(|cycle| Witness::Hole { cycle })
        }
        PatternKind::Wheel => {
            if size < 5 {
                return None;
            }
            members(set).find_map(|hub| {
                let rim_set = set & !(1 << hub);
                if m.degree_in(hub, rim_set) < k as u32 {
                    return None;
                }
                m.as_cycle(rim_set)
                    .map(|rim| Witness::Wheel { k, hub, rim })
            })
        }
        PatternKind::Fan | PatternKind::GuardedFan => {
            let guarded = kind == PatternKind::GuardedFan;
            let need = if guarded { 3 } else { k } as u32;
            members(set).find_map(|pivot| {
                let rest = set & !(1 << pivot);
                if m.degree_in(pivot, rest) < need {
                    return None;
                }
                let path = m.as_path(rest)?;
                let tip = |v: usize| m.tips & (1 << v) != 0;
                if guarded {
                    (tip(path[0]) && tip(path[path.len() - 1]))
                        .then_some(Witness::GuardedFan { pivot, path })
                } else {
                    Some(Witness::Fan { k, pivot, path })
                }
            })
        }
        PatternKind::MountablePath => {
            if (set & m.tips).count_ones() < 3 {
                return None;
            }
            m.as_path(set).map(|path| Witness::MountablePath {
                tip_hits: path
                    .iter()
                    .copied()
                    .filter(|&v| m.tips & (1 << v) != 0)
                    .collect(),
                path,
            })
        }
        PatternKind::Theta => theta(m, set),
    }
}

/// Two non-adjacent degree-3 vertices, every other vertex of degree 2, and
/// three components after removing the branch vertices, each touching both.
fn theta(m: &Masks, set: u32) -> Option<Witness> {
    if set.count_ones() < 5 || !m.connected(set) {
        return None;
    }
    let mut branch = Vec::new();
    for v in members(set) {
        match m.degree_in(v, set) {
            2 => {}
            3 => branch.push(v),
            _ => return None,
        }
    }
    let [a, b] = branch[..] else { return None };
    if m.adj[a] & (1 << b) != 0 {
        return None;
    }
    let inner = set & !(1 << a) & !(1 << b);
    let mut paths = Vec::new();
    let mut left = inner;
    while left != 0 {
        // component of `inner` containing the lowest remaining vertex
        let mut comp = 1u32 << left.trailing_zeros();
        loop {
            let grown = members(comp).fold(comp, |acc, v| acc | (m.adj[v] & inner));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        let start = members(comp).find(|&v| m.adj[v] & (1 << a) != 0)?;
        if members(comp).all(|v| m.adj[v] & (1 << b) == 0) {
            return None;
        }
        let mut path = vec![a];
        path.extend(m.walk(start, comp));
        path.push(b);
        paths.push(path);
    }
    let [p, q, r]: [Vec<usize>; 3] = paths.try_into().ok()?;
    Some(Witness::Theta {
        ends: [a, b],
        paths: [p, q, r],
    })
}
