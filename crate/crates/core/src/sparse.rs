//! Growable adjacency lists used while constructing large graphs.
//!
//! Dense bitset rows cost `n²/8` bytes; the level-5 constructions have tens
//! of thousands of vertices, so builders grow this sparse form and convert
//! to [`Graph`] only when asked.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjacencyLists {
    adj: Vec<Vec<usize>>,
}

impl AdjacencyLists {
    pub fn new(n: usize) -> Self {
        AdjacencyLists {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        AdjacencyLists {
            adj: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
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

    /// Idempotent; rejects loops and out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        for (a, b) in [(u, v), (v, u)] {
            let row = &mut self.adj[a];
            if let Err(pos) = row.binary_search(&b) {
                row.insert(pos, b);
            }
        }
        Ok(())
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let rows = self
            .adj
            .iter()
            .map(|row| VertexSet::from_iter_with_capacity(n, row.iter().copied()))
            .collect();
        Graph::from_rows(rows).expect("adjacency lists are symmetric and loop-free")
    }
}
