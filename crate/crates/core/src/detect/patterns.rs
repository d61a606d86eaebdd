use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::Graph;
use crate::witness::Witness;

use super::cycles::CycleWalker;
use super::paths::{PathWalker, Step};
use super::{first_witness, Meter, Outcome, SearchConfig};

fn unlimited<T>(r: Result<T>) -> T {
    r.expect("unlimited searches always conclude")
}

fn check_k(k: usize) -> Result<()> {
    if k >= 3 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "k must be at least 3, got {k}"
        )))
    }
}

fn finish(meter: &Meter, witness: Option<Witness>) -> Outcome {
    Outcome {
        witness,
        explored: meter.explored(),
    }
}

/// The lexicographically least triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<Witness> {
    unlimited(find_triangle_with(g, &SearchConfig::unlimited())).witness
}

pub fn find_triangle_with(g: &Graph, cfg: &SearchConfig) -> Result<Outcome> {
    let meter = cfg.meter(g.n())?;
    for (u, v) in g.edges() {
        meter.tick()?;
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.iter().find(|&w| w > v) {
            return Ok(finish(
                &meter,
                Some(Witness::Triangle {
                    vertices: [u, v, w],
                }),
            ));
        }
    }
    Ok(finish(&meter, None))
}

/// Two adjacent tips, if any.
pub fn tip_edge(gf: &Graft) -> Option<Witness> {
    unlimited(tip_edge_with(gf, &SearchConfig::unlimited())).witness
}

pub fn tip_edge_with(gf: &Graft, cfg: &SearchConfig) -> Result<Outcome> {
    let meter = cfg.meter(gf.n())?;
    for u in gf.tips().iter() {
        meter.tick()?;
        if let Some(v) = gf
            .graph()
            .neighbors(u)
            .intersection(gf.tips())
            .iter()
            .find(|&v| v > u)
        {
            return Ok(finish(&meter, Some(Witness::TipEdge { u, v })));
        }
    }
    Ok(finish(&meter, None))
}

/// An induced wheel whose hub has at least `k` neighbours on the rim.
pub fn find_wheel(g: &Graph, k: usize) -> Result<Option<Witness>> {
    Ok(find_wheel_with(g, k, &SearchConfig::unlimited())?.witness)
}

/// Hub-first wheel search.
///
/// For each hub `h` of degree >= `k` and each `a ∈ N(h)` taken as the
/// smallest hub neighbour on the rim, enumerate holes through `a` that avoid
/// `h` and the hub neighbours below `a`, and test the hub attachment of each.
pub fn find_wheel_with(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome> {
    check_k(k)?;
    let meter = cfg.meter(g.n())?;
    let n = g.n();
    let hubs: Vec<usize> = (0..n).filter(|&h| g.degree(h) >= k).collect();
    let witness = first_witness(&hubs, cfg.threads, &meter, |h| {
        let hub_nbrs = g.neighbors(h);
        let mut excluded = VertexSet::new(n);
        excluded.insert(h);
        let anchors = hub_nbrs.to_vec();
        for (i, &a) in anchors.iter().enumerate() {
            if anchors.len() - i < k {
                break;
            }
            let mut allowed = VertexSet::full(n);
            allowed.difference_with(&excluded);
            let mut walker = CycleWalker::new(g, a, allowed, 4, meter.clone());
            while let Some(cycle) = walker.next_cycle() {
                let cycle = cycle?;
                let hits = cycle.iter().filter(|&&v| hub_nbrs.contains(v)).count();
                if hits >= k {
                    return Ok(Some(Witness::Wheel {
                        k,
                        hub: h,
                        rim: cycle,
                    }));
                }
            }
            excluded.insert(a);
        }
        Ok(None)
    })?;
    Ok(finish(&meter, witness))
}

/// An induced theta, if any.
pub fn find_theta(g: &Graph) -> Option<Witness> {
    unlimited(find_theta_with(g, &SearchConfig::unlimited())).witness
}

struct BranchPath {
    path: Vec<usize>,
    interior: VertexSet,
    /// Closed neighbourhood of the interior.
    reach: VertexSet,
}

/// For each non-adjacent pair `a < b` of degree >= 3, collect the induced
/// `a`–`b` paths and look for three whose interiors are pairwise disjoint
/// and anticomplete.
pub fn find_theta_with(g: &Graph, cfg: &SearchConfig) -> Result<Outcome> {
    let meter = cfg.meter(g.n())?;
    let n = g.n();
    let ends: Vec<usize> = (0..n).filter(|&a| g.degree(a) >= 3).collect();
    let witness = first_witness(&ends, cfg.threads, &meter, |a| {
        let mut walker = PathWalker::new(g, g.vertex_set(), meter.clone());
        for b in (a + 1..n).filter(|&b| g.degree(b) >= 3 && !g.has_edge(a, b)) {
            let mut paths = Vec::new();
            let _: Option<()> = walker.walk(a, &mut |p: &[usize], _: &VertexSet| {
                let last = p[p.len() - 1];
                if last == b {
                    let inner = &p[1..p.len() - 1];
                    let interior = VertexSet::from_iter_with_capacity(n, inner.iter().copied());
                    let mut reach = interior.clone();
                    for &v in inner {
                        reach.union_with(g.neighbors(v));
                    }
                    paths.push(BranchPath {
                        path: p.to_vec(),
                        interior,
                        reach,
                    });
                    Step::Skip
                } else {
                    Step::Extend
                }
            })?;
            if let Some(w) = three_compatible(&paths, a, b, &meter)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    })?;
    Ok(finish(&meter, witness))
}

fn three_compatible(
    paths: &[BranchPath],
    a: usize,
    b: usize,
    meter: &Meter,
) -> Result<Option<Witness>> {
    let fits = |x: &BranchPath, y: &BranchPath| !x.interior.intersects(&y.reach);
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate().skip(i + 1) {
            meter.tick()?;
            if !fits(p, q) {
                continue;
            }
            for r in paths.iter().skip(j + 1) {
                if fits(p, r) && fits(q, r) {
                    return Ok(Some(Witness::Theta {
                        ends: [a, b],
                        paths: [p.path.clone(), q.path.clone(), r.path.clone()],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// An induced path plus a pivot with at least `k` neighbours on it.
pub fn find_fan(g: &Graph, k: usize) -> Result<Option<Witness>> {
    Ok(find_fan_with(g, k, &SearchConfig::unlimited())?.witness)
}

/// Pivot-first fan search. A fan can be trimmed to the subpath between its
/// outermost pivot neighbours, so only paths whose two ends are pivot
/// neighbours are examined.
pub fn find_fan_with(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome> {
    check_k(k)?;
    let meter = cfg.meter(g.n())?;
    let pivots: Vec<usize> = (0..g.n()).filter(|&f| g.degree(f) >= k).collect();
    let witness = first_witness(&pivots, cfg.threads, &meter, |f| {
        let ends = g.neighbors(f);
        fan_from_pivot(g, f, ends, ends, k, &meter, |path| Witness::Fan {
            k,
            pivot: f,
            path,
        })
    })?;
    Ok(finish(&meter, witness))
}

/// Induced paths in `G - f` with both ends in `ends`, the second end larger
/// than the first, and at least `k` neighbours of `f`.
fn fan_from_pivot(
    g: &Graph,
    f: usize,
    ends: &VertexSet,
    pivot_nbrs: &VertexSet,
    k: usize,
    meter: &Meter,
    make: impl Fn(Vec<usize>) -> Witness,
) -> Result<Option<Witness>> {
    let mut allowed = g.vertex_set();
    allowed.remove(f);
    let mut walker = PathWalker::new(g, allowed, meter.clone());
    for a in ends.iter().filter(|&a| a != f) {
        let found = walker.walk(a, &mut |p: &[usize], on_path: &VertexSet| {
            let last = p[p.len() - 1];
            if last > a && ends.contains(last) && on_path.intersection_len(pivot_nbrs) >= k {
                Step::Stop(p.to_vec())
            } else {
                Step::Extend
            }
        })?;
        if let Some(path) = found {
            return Ok(Some(make(path)));
        }
    }
    Ok(None)
}

/// A fan whose path ends are both tips.
pub fn find_guarded_fan(gf: &Graft) -> Option<Witness> {
    unlimited(find_guarded_fan_with(gf, &SearchConfig::unlimited())).witness
}

pub fn find_guarded_fan_with(gf: &Graft, cfg: &SearchConfig) -> Result<Outcome> {
    let g = gf.graph();
    let meter = cfg.meter(g.n())?;
    let pivots: Vec<usize> = if gf.tips().len() >= 2 {
        (0..g.n()).filter(|&f| g.degree(f) >= 3).collect()
    } else {
        Vec::new()
    };
    let witness = first_witness(&pivots, cfg.threads, &meter, |f| {
        fan_from_pivot(g, f, gf.tips(), g.neighbors(f), 3, &meter, |path| {
            Witness::GuardedFan { pivot: f, path }
        })
    })?;
    Ok(finish(&meter, witness))
}

/// An induced path through at least three tips.
pub fn find_mountable_path(gf: &Graft) -> Option<Witness> {
    unlimited(find_mountable_path_with(gf, &SearchConfig::unlimited())).witness
}

/// A shortest witness runs between two tips and contains exactly three, so
/// paths are grown from each tip and cut at the third tip they reach.
pub fn find_mountable_path_with(gf: &Graft, cfg: &SearchConfig) -> Result<Outcome> {
    let g = gf.graph();
    let meter = cfg.meter(g.n())?;
    let tips = gf.tips();
    let starts: Vec<usize> = if tips.len() >= 3 {
        tips.to_vec()
    } else {
        Vec::new()
    };
    let witness = first_witness(&starts, cfg.threads, &meter, |a| {
        let mut walker = PathWalker::new(g, g.vertex_set(), meter.clone());
        let found = walker.walk(a, &mut |p: &[usize], on_path: &VertexSet| {
            let last = p[p.len() - 1];
            if !tips.contains(last) {
                return Step::Extend;
            }
            match on_path.intersection_len(tips) {
                2 => Step::Extend,
                _ if last > a => Step::Stop(p.to_vec()),
                _ => Step::Skip,
            }
        })?;
        Ok(found.map(|path| {
            let tip_hits = path.iter().copied().filter(|&v| tips.contains(v)).collect();
            Witness::MountablePath { path, tip_hits }
        }))
    })?;
    Ok(finish(&meter, witness))
}
