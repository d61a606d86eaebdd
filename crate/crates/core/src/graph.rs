//! Immutable simple undirected graphs on dense vertex ids.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] row per vertex. Rows are
/// symmetric and irreflexive; both properties are checked once when the
/// graph is built and never change afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

/// Order-preserving correspondence between a host graph's vertices and the
/// vertices of a graph derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl Relabel {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Host ids of the kept vertices, in increasing order.
    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// Accumulates edges and produces a validated [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.rows.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Build from raw adjacency rows, rejecting asymmetric rows and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        for (v, row) in rows.iter().enumerate() {
            if row.capacity() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {v} has capacity {} for a graph on {n} vertices",
                    row.capacity()
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !rows[u].contains(v)) {
                return Err(Error::InvalidArgument(format!(
                    "asymmetric adjacency between {v} and {u}"
                )));
            }
        }
        Ok(Graph { rows })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete edges are valid")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("bipartite edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency row of `v`. Panics on an out-of-range vertex; use
    /// [`Graph::neighborhood`] for checked access.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Collect `vs` into a set sized for this graph.
    pub fn set_of(&self, vs: &[usize]) -> Result<VertexSet> {
        self.check_vertices(vs)?;
        Ok(VertexSet::from_iter_with_capacity(
            self.n(),
            vs.iter().copied(),
        ))
    }

    pub fn is_stable_set(&self, vs: &[usize]) -> Result<bool> {
        let set = self.set_of(vs)?;
        Ok(self.is_stable(&set))
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.rows[v].intersects(set))
    }

    /// Consecutive vertices adjacent, all other pairs non-adjacent.
    pub fn is_induced_path(&self, seq: &[usize]) -> Result<bool> {
        self.check_vertices(seq)?;
        check_distinct(seq)?;
        Ok(self.path_is_induced(seq))
    }

    pub(crate) fn path_is_induced(&self, seq: &[usize]) -> bool {
        seq.iter().enumerate().all(|(i, &u)| {
            seq[i + 1..]
                .iter()
                .enumerate()
                .all(|(j, &v)| self.has_edge(u, v) == (j == 0))
        })
    }

    /// `seq` (length >= 3) is a chordless cycle in the given cyclic order.
    pub(crate) fn cycle_is_induced(&self, seq: &[usize]) -> bool {
        let len = seq.len();
        len >= 3
            && seq.iter().enumerate().all(|(i, &u)| {
                seq.iter().enumerate().skip(i + 1).all(|(j, &v)| {
                    let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                    self.has_edge(u, v) == consecutive
                })
            })
    }

    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Relabel)> {
        let keep = self.set_of(vs)?;
        Ok(self.induced_on(&keep))
    }

    pub fn delete_vertices(&self, vs: &[usize]) -> Result<(Graph, Relabel)> {
        let mut keep = self.vertex_set();
        keep.difference_with(&self.set_of(vs)?);
        Ok(self.induced_on(&keep))
    }

    pub fn induced_on(&self, keep: &VertexSet) -> (Graph, Relabel) {
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let m = new_to_old.len();
        let rows = new_to_old
            .iter()
            .map(|&v| {
                VertexSet::from_iter_with_capacity(
                    m,
                    self.rows[v].iter().filter_map(|u| old_to_new[u]),
                )
            })
            .collect();
        (
            Graph { rows },
            Relabel {
                new_to_old,
                old_to_new,
            },
        )
    }

    /// A copy of this graph with one extra vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &VertexSet) -> Graph {
        let n = self.n();
        let mut rows: Vec<VertexSet> = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = VertexSet::from_iter_with_capacity(n + 1, row.iter());
                if nbrs.contains(v) {
                    r.insert(n);
                }
                r
            })
            .collect();
        rows.push(VertexSet::from_iter_with_capacity(
            n + 1,
            nbrs.iter().filter(|&u| u < n),
        ));
        Graph { rows }
    }

    /// Bipartiteness check by BFS two-colouring.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                for w in self.rows[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn check_distinct(seq: &[usize]) -> Result<()> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::InvalidArgument(format!("vertex {} repeated", w[0]))),
        None => Ok(()),
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
