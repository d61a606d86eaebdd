#![allow(dead_code)]

use burling_core::{Graft, Graph};
use proptest::prelude::*;

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.8).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn arb_graft(max_n: usize, max_tips: usize) -> impl Strategy<Value = Graft> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=max_tips.min(n))
            .prop_map(move |tips| Graft::new(g.clone(), &tips).unwrap())
    })
}

/// All permutations of `0..n`, for brute-force comparisons.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Calls `f` on every assignment of `c >= 1` colours to `n` vertices.
pub fn each_assignment(n: usize, c: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut col = vec![0usize; n];
    loop {
        if f(&col) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            col[i] += 1;
            if col[i] < c {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}
