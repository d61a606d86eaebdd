//! Certificates for induced pattern occurrences, and an independent replay
//! check for them.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{check_distinct, Graph};

/// An injective vertex map certifying an induced occurrence of a pattern.
///
/// Vertex lists carry their role through the variant fields: `rim` and
/// `cycle` are in cyclic order, `path` is in path order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Triangle {
        vertices: [usize; 3],
    },
    /// Two adjacent tips.
    TipEdge {
        u: usize,
        v: usize,
    },
    Hole {
        cycle: Vec<usize>,
    },
    Wheel {
        k: usize,
        hub: usize,
        rim: Vec<usize>,
    },
    /// Three paths from `ends[0]` to `ends[1]`, endpoints included.
    Theta {
        ends: [usize; 2],
        paths: [Vec<usize>; 3],
    },
    Fan {
        k: usize,
        pivot: usize,
        path: Vec<usize>,
    },
    GuardedFan {
        pivot: usize,
        path: Vec<usize>,
    },
    MountablePath {
        path: Vec<usize>,
        tip_hits: Vec<usize>,
    },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Triangle { .. } => "triangle",
            Witness::TipEdge { .. } => "tip-edge",
            Witness::Hole { .. } => "hole",
            Witness::Wheel { .. } => "wheel",
            Witness::Theta { .. } => "theta",
            Witness::Fan { .. } => "fan",
            Witness::GuardedFan { .. } => "guarded-fan",
            Witness::MountablePath { .. } => "mountable-path",
        }
    }

    /// Every vertex the witness mentions, in role order, without repeats.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = match self {
            Witness::Triangle { vertices } => vertices.to_vec(),
            Witness::TipEdge { u, v } => vec![*u, *v],
            Witness::Hole { cycle } => cycle.clone(),
            Witness::Wheel { hub, rim, .. } => {
                std::iter::once(*hub).chain(rim.iter().copied()).collect()
            }
            Witness::Theta { ends, paths } => ends
                .iter()
                .copied()
                .chain(paths.iter().flat_map(|p| interior(p).iter().copied()))
                .collect(),
            Witness::Fan { pivot, path, .. } | Witness::GuardedFan { pivot, path } => {
                std::iter::once(*pivot)
                    .chain(path.iter().copied())
                    .collect()
            }
            Witness::MountablePath { path, .. } => path.clone(),
        };
        let mut seen = std::collections::HashSet::new();
        out.retain(|v| seen.insert(*v));
        out
    }

    fn all_mentioned(&self) -> Vec<usize> {
        match self {
            Witness::Theta { ends, paths } => {
                ends.iter().chain(paths.iter().flatten()).copied().collect()
            }
            Witness::MountablePath { path, tip_hits } => {
                path.iter().chain(tip_hits).copied().collect()
            }
            _ => self.vertices(),
        }
    }
}

fn interior(p: &[usize]) -> &[usize] {
    if p.len() >= 2 {
        &p[1..p.len() - 1]
    } else {
        &[]
    }
}

/// Replays `w` against `g` (and `tips`, for tip-aware patterns) and reports
/// whether the witness vertices induce exactly the claimed pattern.
///
/// Tip-aware witnesses (`tip-edge`, `guarded-fan`, `mountable-path`) never
/// validate when `tips` is `None`.
pub fn validate_witness(g: &Graph, tips: Option<&VertexSet>, w: &Witness) -> Result<bool> {
    g.check_vertices(&w.all_mentioned())?;
    let is_tip = |v: usize| tips.is_some_and(|t| t.contains(v));
    let ok = match w {
        Witness::Triangle {
            vertices: [a, b, c],
        } => {
            a != b
                && b != c
                && a != c
                && g.has_edge(*a, *b)
                && g.has_edge(*b, *c)
                && g.has_edge(*a, *c)
        }
        Witness::TipEdge { u, v } => {
            tips.is_some() && u != v && is_tip(*u) && is_tip(*v) && g.has_edge(*u, *v)
        }
        Witness::Hole { cycle } => {
            check_distinct(cycle).is_ok() && cycle.len() >= 4 && g.cycle_is_induced(cycle)
        }
        Witness::Wheel { k, hub, rim } => {
            *k >= 3
                && check_distinct(rim).is_ok()
                && rim.len() >= 4
                && !rim.contains(hub)
                && g.cycle_is_induced(rim)
                && rim.iter().filter(|&&v| g.has_edge(*hub, v)).count() >= *k
        }
        Witness::Theta { ends, paths } => theta_is_valid(g, *ends, paths),
        Witness::Fan { k, pivot, path } => *k >= 3 && fan_is_valid(g, *pivot, path, *k),
        Witness::GuardedFan { pivot, path } => {
            tips.is_some()
                && fan_is_valid(g, *pivot, path, 3)
                && is_tip(path[0])
                && is_tip(path[path.len() - 1])
        }
        Witness::MountablePath { path, tip_hits } => {
            let mut hits: Vec<usize> = path.iter().copied().filter(|&v| is_tip(v)).collect();
            hits.sort_unstable();
            let mut claimed = tip_hits.clone();
            claimed.sort_unstable();
            tips.is_some()
                && check_distinct(path).is_ok()
                && g.path_is_induced(path)
                && hits.len() >= 3
                && hits == claimed
        }
    };
    Ok(ok)
}

fn fan_is_valid(g: &Graph, pivot: usize, path: &[usize], k: usize) -> bool {
    !path.is_empty()
        && check_distinct(path).is_ok()
        && !path.contains(&pivot)
        && g.path_is_induced(path)
        && path.iter().filter(|&&v| g.has_edge(pivot, v)).count() >= k
}

fn theta_is_valid(g: &Graph, [a, b]: [usize; 2], paths: &[Vec<usize>; 3]) -> bool {
    if a == b {
        return false;
    }
    let shaped = paths.iter().all(|p| {
        p.len() >= 3
            && p[0] == a
            && p[p.len() - 1] == b
            && check_distinct(p).is_ok()
            && g.path_is_induced(p)
    });
    if !shaped {
        return false;
    }
    let all_interior: Vec<usize> = paths
        .iter()
        .flat_map(|p| interior(p).iter().copied())
        .collect();
    if check_distinct(&all_interior).is_err() {
        return false;
    }
    // no edges between interiors of different paths
    (0..3).all(|i| {
        (i + 1..3).all(|j| {
            interior(&paths[i])
                .iter()
                .all(|&u| interior(&paths[j]).iter().all(|&v| !g.has_edge(u, v)))
        })
    })
}
