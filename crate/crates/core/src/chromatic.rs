//! Exact colouring for small graphs and the rainbow-tip search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::Graph;

pub const EXACT_CAP: usize = 64;
pub const RAINBOW_CAP_N: usize = 40;
pub const RAINBOW_CAP_COLOURS: usize = 6;

const UNCOLOURED: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// Renumber colours by first appearance so they are exactly `0..count`.
    pub fn normalized(colors: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            count: map.len(),
            colors,
        }
    }

    /// Proper, one colour per vertex, colours exactly `0..count`, none unused.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        let mut used = vec![false; self.count];
        for &c in &self.colors {
            match used.get_mut(c) {
                Some(u) => *u = true,
                None => return false,
            }
        }
        used.iter().all(|&u| u) && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundProof {
    /// Branch and bound ruled out every colouring with fewer colours.
    ExhaustiveSearch,
    /// Every proper `chi - 1` colouring leaves some tip with a rainbow
    /// neighbourhood, so no such colouring extends to the tips.
    RainbowInductionCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCertificate {
    pub chi: usize,
    pub witness_coloring: Coloring,
    pub lower_bound_proof: LowerBoundProof,
}

/// Bounds for graphs outside exact reach. Never exact by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// DSATUR greedy colouring.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = g.n();
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut colors = vec![UNCOLOURED; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    // stale entries are skipped on pop
    let mut heap: BinaryHeap<(usize, usize, Reverse<usize>)> =
        (0..n).map(|v| (0, degree[v], Reverse(v))).collect();
    while let Some((s, _, Reverse(v))) = heap.pop() {
        if colors[v] != UNCOLOURED || s != sat[v] {
            continue;
        }
        let c = (0..)
            .find(|&c| !seen[v].get(c).copied().unwrap_or(false))
            .expect("colours are unbounded");
        colors[v] = c;
        for u in g.neighbors(v).iter() {
            if seen[u].len() <= c {
                seen[u].resize(c + 1, false);
            }
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
                if colors[u] == UNCOLOURED {
                    heap.push((sat[u], degree[u], Reverse(u)));
                }
            }
        }
    }
    Coloring::normalized(&colors)
}

pub fn bounds_only(g: &Graph) -> Bounds {
    let upper = dsatur_greedy(g).count;
    let lower = if g.n() == 0 {
        0
    } else if g.edge_count() == 0 {
        1
    } else if g.is_bipartite() {
        2
    } else {
        3
    };
    Bounds { lower, upper }
}

/// Size of a largest clique, by branch and bound over candidate sets.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::CapExceeded {
            what: "clique search vertex count",
            value: n,
            cap: EXACT_CAP,
        });
    }
    fn grow(g: &Graph, size: usize, mut cand: crate::bitset::VertexSet, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        while let Some(v) = cand.first() {
            if size + cand.len() <= *best {
                return;
            }
            cand.remove(v);
            grow(g, size + 1, cand.intersection(g.neighbors(v)), best);
        }
    }
    let mut best = 0;
    grow(g, 0, g.vertex_set(), &mut best);
    Ok(best)
}

/// Exact chromatic number by DSATUR branch and bound.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticCertificate> {
    chromatic_number_capped(g, EXACT_CAP)
}

pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<ChromaticCertificate> {
    let n = g.n();
    let cap = cap.min(EXACT_CAP);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "exact colouring vertex count",
            value: n,
            cap,
        });
    }
    let greedy = dsatur_greedy(g);
    let lower = bounds_only(g).lower;
    let mut search = Exact {
        adj: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
            .collect(),
        colors: vec![UNCOLOURED; n],
        best: greedy.count,
        best_colors: greedy.colors.clone(),
        lower,
    };
    if search.best > lower {
        search.descend(0, 0);
    }
    let witness_coloring = Coloring::normalized(&search.best_colors);
    debug_assert!(witness_coloring.is_valid_for(g));
    Ok(ChromaticCertificate {
        chi: witness_coloring.count,
        witness_coloring,
        lower_bound_proof: LowerBoundProof::ExhaustiveSearch,
    })
}

struct Exact {
    adj: Vec<u64>,
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Exact {
    fn neighbour_colours(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut rest = self.adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.colors[u] != UNCOLOURED {
                mask |= 1 << self.colors[u];
            }
        }
        mask
    }

    /// Returns `true` once the lower bound is met.
    fn descend(&mut self, coloured: usize, used: usize) -> bool {
        let n = self.colors.len();
        if coloured == n {
            self.best = used;
            self.best_colors.clone_from(&self.colors);
            return self.best <= self.lower;
        }
        let (v, mask) = (0..n)
            .filter(|&v| self.colors[v] == UNCOLOURED)
            .map(|v| (v, self.neighbour_colours(v)))
            .max_by_key(|&(v, m)| {
                (
                    m.count_ones(),
                    self.adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncoloured vertex remains");
        // only colours that keep the total below the incumbent
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if used.max(c + 1) >= self.best {
                break;
            }
            if mask & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            let done = self.descend(coloured + 1, used.max(c + 1));
            self.colors[v] = UNCOLOURED;
            if done {
                return true;
            }
        }
        false
    }
}

/// A proper colouring with at most `c` colours in which every tip's
/// neighbourhood sees at most `k - 1` colours, or `None` if every proper
/// `c`-colouring has a tip whose neighbourhood sees `k` or more.
pub fn find_non_rainbow_coloring(gf: &Graft, k: usize, c: usize) -> Result<Option<Coloring>> {
    let n = gf.n();
    if n > RAINBOW_CAP_N {
        return Err(Error::CapExceeded {
            what: "rainbow search vertex count",
            value: n,
            cap: RAINBOW_CAP_N,
        });
    }
    if c > RAINBOW_CAP_COLOURS {
        return Err(Error::CapExceeded {
            what: "rainbow search colours",
            value: c,
            cap: RAINBOW_CAP_COLOURS,
        });
    }
    let g = gf.graph();
    let order = search_order(g);
    let mut state = Rainbow {
        g,
        tips: gf.tip_list(),
        is_tip: (0..n).map(|v| gf.is_tip(v)).collect(),
        colors: vec![UNCOLOURED; n],
        tip_seen: vec![0u64; n],
        k,
        c,
    };
    // a tip with a non-empty neighbourhood always sees a colour
    if k == 0 || (k == 1 && state.tips.iter().any(|&t| g.degree(t) > 0)) {
        return Ok(None);
    }
    Ok(state
        .descend(&order, 0, 0)
        .then(|| Coloring::normalized(&state.colors)))
}

/// Breadth-first from the highest-degree vertex of each component, so each
/// new vertex tends to have coloured neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in by_degree {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for u in g.neighbors(v).iter() {
                if !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

struct Rainbow<'g> {
    g: &'g Graph,
    tips: Vec<usize>,
    is_tip: Vec<bool>,
    colors: Vec<usize>,
    /// Colours seen so far in each tip's neighbourhood (indexed by vertex).
    tip_seen: Vec<u64>,
    k: usize,
    c: usize,
}

impl Rainbow<'_> {
    fn descend(&mut self, order: &[usize], depth: usize, used: usize) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        let limit = (used + 1).min(self.c);
        'colour: for col in 0..limit {
            if self.g.neighbors(v).iter().any(|u| self.colors[u] == col) {
                continue;
            }
            let bit = 1u64 << col;
            let touched: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&t| self.is_tip[t] && self.tip_seen[t] & bit == 0)
                .collect();
            for &t in &touched {
                if (self.tip_seen[t] | bit).count_ones() as usize >= self.k {
                    continue 'colour;
                }
            }
            for &t in &touched {
                self.tip_seen[t] |= bit;
            }
            self.colors[v] = col;
            if self.descend(order, depth + 1, used.max(col + 1)) {
                return true;
            }
            self.colors[v] = UNCOLOURED;
            for &t in &touched {
                self.tip_seen[t] &= !bit;
            }
        }
        false
    }
}
