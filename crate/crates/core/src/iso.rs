//! Graft isomorphism by colour refinement and individualization.
//!
//! Both grafts are refined jointly so colour ids are comparable across them.
//! Vertices start coloured by (tip membership, degree); each round recolours
//! by (own colour, sorted multiset of neighbour colours) until the partition
//! is stable. A non-discrete stable partition is split by individualizing
//! one vertex of the smallest non-trivial class of `a` against every
//! same-coloured vertex of `b`. Leaves are verified edge by edge.

use std::collections::BTreeMap;

use crate::graft::Graft;
use crate::graph::Graph;

type Colours = Vec<u32>;

/// A bijection `f` with `f[v]` the image of vertex `v` of `a`, mapping edges
/// to edges, non-edges to non-edges and tips of `a` onto tips of `b`.
pub fn graft_isomorphic(a: &Graft, b: &Graft) -> Option<Vec<usize>> {
    if a.n() != b.n()
        || a.graph().edge_count() != b.graph().edge_count()
        || a.tips().len() != b.tips().len()
    {
        return None;
    }
    let initial = |gf: &Graft| -> Vec<(bool, usize)> {
        (0..gf.n())
            .map(|v| (gf.is_tip(v), gf.graph().degree(v)))
            .collect()
    };
    let (ca, cb) = canonical_ids(&initial(a), &initial(b))?;
    let (ca, cb) = refine(a.graph(), b.graph(), ca, cb)?;
    search(a, b, ca, cb)
}

/// Plain graph isomorphism (grafts with no tips).
pub fn graph_isomorphic(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let ga = Graft::new(a.clone(), &[]).expect("empty tip set");
    let gb = Graft::new(b.clone(), &[]).expect("empty tip set");
    graft_isomorphic(&ga, &gb)
}

/// `true` when `f` is a graft isomorphism from `a` to `b`.
pub fn is_graft_isomorphism(a: &Graft, b: &Graft, f: &[usize]) -> bool {
    if a.n() != b.n() || f.len() != a.n() || a.graph().edge_count() != b.graph().edge_count() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &x in f {
        if x >= b.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..a.n()).all(|v| a.is_tip(v) == b.is_tip(f[v]))
        && a.graph()
            .edges()
            .all(|(u, v)| b.graph().has_edge(f[u], f[v]))
}

/// Renumber keys jointly in sorted order; `None` when class sizes differ.
fn canonical_ids<K: Ord + Clone>(ka: &[K], kb: &[K]) -> Option<(Colours, Colours)> {
    let mut ids: BTreeMap<K, (u32, usize, usize)> = BTreeMap::new();
    for k in ka {
        ids.entry(k.clone()).or_insert((0, 0, 0)).1 += 1;
    }
    for k in kb {
        ids.entry(k.clone()).or_insert((0, 0, 0)).2 += 1;
    }
    for (i, entry) in ids.values_mut().enumerate() {
        if entry.1 != entry.2 {
            return None;
        }
        entry.0 = i as u32;
    }
    let ca = ka.iter().map(|k| ids[k].0).collect();
    let cb = kb.iter().map(|k| ids[k].0).collect();
    Some((ca, cb))
}

fn class_count(c: &Colours) -> usize {
    c.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn refine(a: &Graph, b: &Graph, mut ca: Colours, mut cb: Colours) -> Option<(Colours, Colours)> {
    let signature = |g: &Graph, c: &Colours| -> Vec<(u32, Vec<u32>)> {
        (0..g.n())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| c[u]).collect();
                nb.sort_unstable();
                (c[v], nb)
            })
            .collect()
    };
    loop {
        let before = class_count(&ca);
        let (na, nb) = canonical_ids(&signature(a, &ca), &signature(b, &cb))?;
        ca = na;
        cb = nb;
        if class_count(&ca) == before {
            return Some((ca, cb));
        }
    }
}

fn search(a: &Graft, b: &Graft, ca: Colours, cb: Colours) -> Option<Vec<usize>> {
    let n = a.n();
    let classes = class_count(&ca);
    if classes == n {
        let mut by_colour = vec![0; n];
        for (w, &c) in cb.iter().enumerate() {
            by_colour[c as usize] = w;
        }
        let f: Vec<usize> = ca.iter().map(|&c| by_colour[c as usize]).collect();
        return is_graft_isomorphism(a, b, &f).then_some(f);
    }
    let mut sizes = vec![0usize; classes];
    for &c in &ca {
        sizes[c as usize] += 1;
    }
    let target = (0..classes)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("non-discrete partition has a non-trivial class") as u32;
    let v = ca
        .iter()
        .position(|&c| c == target)
        .expect("class is non-empty");
    let fresh = classes as u32;
    for w in (0..n).filter(|&w| cb[w] == target) {
        let mut ia = ca.clone();
        let mut ib = cb.clone();
        ia[v] = fresh;
        ib[w] = fresh;
        if let Some((ra, rb)) = refine(a.graph(), b.graph(), ia, ib) {
            if let Some(f) = search(a, b, ra, rb) {
                return Some(f);
            }
        }
    }
    None
}
