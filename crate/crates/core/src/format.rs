//! The graph/graft text format and DOT export.
//!
//! A graph file is a single JSON object:
//!
//! ```text
//! {"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]],"tips":[2,4],"name":"G_2"}
//! ```
//!
//! `edges` holds `[u, v]` pairs with `u < v` in lexicographic order and
//! `tips` is sorted. A graph from the pair construction may also carry its
//! ordered `stables`. `tips`, `name` and `stables` are omitted when absent. Output is
//! followed by a single newline, so equal graphs serialize to equal bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::burling::StablePair;
use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::Graph;
use crate::sparse::AdjacencyLists;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tips: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stables: Option<Vec<Vec<usize>>>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph, tips: Option<Vec<usize>>, name: Option<String>) -> Self {
        let tips = tips.map(|mut t| {
            t.sort_unstable();
            t.dedup();
            t
        });
        GraphFile {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            tips,
            name,
            stables: None,
        }
    }

    /// Straight from sparse adjacency, without a dense intermediate.
    pub fn from_lists(
        adj: &AdjacencyLists,
        tips: Option<Vec<usize>>,
        name: Option<String>,
    ) -> Self {
        GraphFile {
            n: adj.n(),
            edges: adj.edges().map(|(u, v)| [u, v]).collect(),
            tips: tips.map(|mut t| {
                t.sort_unstable();
                t.dedup();
                t
            }),
            name,
            stables: None,
        }
    }

    pub fn from_pair(p: &StablePair, name: Option<String>) -> Self {
        GraphFile {
            stables: Some(p.stables().to_vec()),
            ..Self::from_graph(p.graph(), None, name)
        }
    }

    /// The stable-set pair described by the file, if it lists `stables`.
    pub fn pair(&self) -> Result<StablePair> {
        let stables = self
            .stables
            .clone()
            .ok_or_else(|| Error::Parse("file has no stables".into()))?;
        StablePair::new(self.graph()?, stables)
    }

    pub fn from_graft(gf: &Graft, name: Option<String>) -> Self {
        Self::from_graph(gf.graph(), Some(gf.tip_list()), name)
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    /// The graft described by the file; a file without `tips` has `T = ∅`.
    pub fn graft(&self) -> Result<Graft> {
        Graft::new(self.graph()?, self.tips.as_deref().unwrap_or(&[]))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph files always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn graph_to_text(g: &Graph, name: Option<&str>) -> String {
    GraphFile::from_graph(g, None, name.map(str::to_owned)).to_text()
}

pub fn graft_to_text(gf: &Graft, name: Option<&str>) -> String {
    GraphFile::from_graft(gf, name.map(str::to_owned)).to_text()
}

/// Undirected DOT with tips drawn as boxes.
pub fn to_dot(g: &Graph, tips: Option<&[usize]>, name: Option<&str>) -> String {
    let mut out = String::new();
    let title = name.unwrap_or("G");
    let _ = writeln!(out, "graph \"{}\" {{", title.replace('"', "\\\""));
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 0..g.n() {
        if tips.is_some_and(|t| t.contains(&v)) {
            let _ = writeln!(out, "  {v} [shape=box];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_layout() {
        let gf = Graft::new(Graph::cycle(5), &[4, 2]).unwrap();
        assert_eq!(
            graft_to_text(&gf, Some("c5")),
            "{\"n\":5,\"edges\":[[0,1],[0,4],[1,2],[2,3],[3,4]],\"tips\":[2,4],\"name\":\"c5\"}\n"
        );
        assert_eq!(
            graph_to_text(&Graph::empty(0), None),
            "{\"n\":0,\"edges\":[]}\n"
        );
    }

    #[test]
    fn parse_rejects_bad_edges() {
        assert!(GraphFile::parse(r#"{"n":2,"edges":[[0,2]]}"#)
            .unwrap()
            .graph()
            .is_err());
        assert!(GraphFile::parse(r#"{"n":2,"edges":[[1,1]]}"#)
            .unwrap()
            .graph()
            .is_err());
        assert!(GraphFile::parse("not json").is_err());
    }

    #[test]
    fn dot_marks_tips() {
        let dot = to_dot(&Graph::complete(2), Some(&[1]), Some("k2"));
        assert!(dot.contains("1 [shape=box];"));
        assert!(dot.contains("0 -- 1;"));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
                        .unwrap()
                },
            )
        })
    }

    #[test]
    fn pair_round_trip_and_sparse_writer() {
        let p = crate::burling::burling_pair(3).unwrap();
        let f = GraphFile::parse(&GraphFile::from_pair(&p, None).to_text()).unwrap();
        assert_eq!(f.pair().unwrap(), p);
        assert!(GraphFile::from_graph(p.graph(), None, None).pair().is_err());
        let sparse = GraphFile::from_lists(&AdjacencyLists::from_graph(p.graph()), None, None);
        assert_eq!(sparse, GraphFile::from_graph(p.graph(), None, None));
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let text = graph_to_text(&g, Some("x"));
            let back = GraphFile::parse(&text).unwrap();
            prop_assert_eq!(back.graph().unwrap(), g.clone());
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
