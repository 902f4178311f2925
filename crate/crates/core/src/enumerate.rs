//! Exhaustive small-graph corpora with isomorphism rejection.
//!
//! Canonical forms are computed by minimizing the lower-triangle adjacency
//! bitstring over all vertex orderings with prefix pruning; corpora are
//! generated by vertex augmentation from the canonical forms one order
//! below, so each isomorphism class appears exactly once.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exec::sweep;
use crate::graph::Graph;

/// Canonical keys pack `n(n-1)/2` bits into a word, which caps corpus
/// generation at 11 vertices. Plenty for desk scale.
pub const CANON_GUARD: usize = 11;

/// Canonical key of a graph: `(n, minimal adjacency bitstring)`. Two graphs
/// have the same key iff they are isomorphic.
pub fn canonical_key(g: &Graph) -> Result<(usize, u64)> {
    let n = g.n();
    if n > CANON_GUARD {
        return Err(Error::ResourceGuard {
            what: "canonical form",
            limit: CANON_GUARD,
            actual: n,
        });
    }
    if n < 2 {
        return Ok((n, 0));
    }
    let adj = g.adjacency_masks()?;
    let total_bits = n * (n - 1) / 2;

    struct Search<'a> {
        adj: &'a [u64],
        n: usize,
        total_bits: usize,
        best: Option<u64>,
        order: Vec<usize>,
        used: u64,
    }

    impl Search<'_> {
        fn dfs(&mut self, prefix: u64, bits: usize) {
            let k = self.order.len();
            if k == self.n {
                if self.best.map_or(true, |b| prefix < b) {
                    self.best = Some(prefix);
                }
                return;
            }
            for v in 0..self.n {
                let bit = 1u64 << v;
                if self.used & bit != 0 {
                    continue;
                }
                // Row of v against the already-placed vertices.
                let mut row = 0u64;
                for &u in &self.order {
                    row = (row << 1) | u64::from(self.adj[v] & (1u64 << u) != 0);
                }
                let next = (prefix << k) | row;
                let next_bits = bits + k;
                if let Some(best) = self.best {
                    if next > best >> (self.total_bits - next_bits) {
                        continue;
                    }
                }
                self.used |= bit;
                self.order.push(v);
                self.dfs(next, next_bits);
                self.order.pop();
                self.used &= !bit;
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        n,
        total_bits,
        best: None,
        order: Vec::with_capacity(n),
        used: 0,
    };
    search.dfs(0, 0);
    Ok((n, search.best.unwrap()))
}

/// Rebuild the canonical representative graph from its key.
fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = n * (n - 1) / 2;
    for v in 1..n {
        for u in 0..v {
            bit -= 1;
            if key & (1u64 << bit) != 0 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// All graphs on exactly `n` vertices up to isomorphism, in canonical-key
/// order, filtered by `keep` at every intermediate order (the filter must be
/// closed under removal of a non-cut vertex for the result to be complete).
fn grow_level<F>(parents: &[Graph], keep: &F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let n = parents.first().map_or(1, |g| g.n() + 1);
    let results = sweep(parents.to_vec(), |parent| {
        let mut keys = Vec::new();
        for mask in 0u64..(1u64 << parent.n()) {
            let mut child = Graph::new(n);
            for (u, v) in parent.edges() {
                child.add_edge(u, v).unwrap();
            }
            for u in 0..parent.n() {
                if mask & (1 << u) != 0 {
                    child.add_edge(u, n - 1).unwrap();
                }
            }
            if keep(&child) {
                keys.push(canonical_key(&child).unwrap().1);
            }
        }
        keys
    });
    let mut seen: HashSet<u64> = HashSet::new();
    for keys in results {
        seen.extend(keys);
    }
    let mut keys: Vec<u64> = seen.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| graph_from_key(n, k)).collect()
}

/// All graphs with at most `max_n` vertices up to isomorphism, smallest
/// first. Includes the empty graph on 0 vertices.
pub fn all_graphs(max_n: usize) -> Result<Vec<Graph>> {
    levels(max_n, &|_| true, false)
}

/// All graphs on exactly `n` vertices up to isomorphism.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    let mut all = levels(n, &|_| true, false)?;
    all.retain(|g| g.n() == n);
    Ok(all)
}

/// All connected bipartite graphs with `2 <= n <= max_n` up to isomorphism.
/// Connected graphs with at least two vertices have no isolated vertex.
pub fn connected_bipartite_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = levels(max_n, &|g| g.bipartition().is_some(), true)?;
    all.retain(|g| g.n() >= 2);
    Ok(all)
}

fn levels<F>(max_n: usize, keep: &F, connected: bool) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if max_n > CANON_GUARD {
        return Err(Error::ResourceGuard {
            what: "graph corpus generation",
            limit: CANON_GUARD,
            actual: max_n,
        });
    }
    let mut out = Vec::new();
    if !connected {
        out.push(Graph::new(0));
    }
    if max_n == 0 {
        return Ok(out);
    }
    let mut level = vec![Graph::new(1)];
    out.extend(level.iter().cloned());
    for _ in 2..=max_n {
        let parents = level;
        level = grow_level(&parents, &|g| {
            // In connected mode the new vertex must attach somewhere; every
            // connected graph has a non-cut vertex, so augmentation from
            // connected parents reaches every connected graph.
            (!connected || g.degree(g.n() - 1).unwrap() > 0) && keep(g)
        });
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u).unwrap() {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
