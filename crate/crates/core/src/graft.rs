use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// A graph together with a distinguished set of vertices, its *tips*.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graft {
    graph: Graph,
    tips: VertexSet,
}

impl Graft {
    pub fn new(graph: Graph, tips: &[usize]) -> Result<Self> {
        let tips = graph.set_of(tips)?;
        Ok(Graft { graph, tips })
    }

    /// Caller guarantees `tips.capacity() == graph.n()`.
    pub(crate) fn from_parts(graph: Graph, tips: VertexSet) -> Self {
        debug_assert_eq!(graph.n(), tips.capacity());
        Graft { graph, tips }
    }

    /// `(K2, {1})`, the seed of the graft construction.
    pub fn k2() -> Self {
        Graft::new(Graph::complete(2), &[1]).expect("vertex 1 exists in K2")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tips(&self) -> &VertexSet {
        &self.tips
    }

    pub fn tip_list(&self) -> Vec<usize> {
        self.tips.to_vec()
    }

    pub fn is_tip(&self, v: usize) -> bool {
        self.tips.contains(v)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn into_parts(self) -> (Graph, VertexSet) {
        (self.graph, self.tips)
    }

    /// The induced subgraft on `keep`: `(G[keep], keep ∩ T)`.
    pub fn induced_on(&self, keep: &VertexSet) -> Graft {
        let (graph, map) = self.graph.induced_on(keep);
        let tips = VertexSet::from_iter_with_capacity(
            graph.n(),
            self.tips.iter().filter_map(|t| map.to_new(t)),
        );
        Graft { graph, tips }
    }
}
