//! Bipartite maximum matching (Hopcroft-Karp) and exhaustive perfect
//! matching enumeration at desk scale.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Guard for exhaustive perfect-matching enumeration.
pub const MATCHING_ENUM_GUARD: usize = 16;

/// Maximum matching of the bipartite subgraph between `xs` and `ys`.
/// Only edges with one endpoint in each part are considered. Returns matched
/// pairs `(x, y)` sorted by `x`; deterministic given the input sets.
pub fn max_bipartite_matching(
    g: &Graph,
    xs: &VertexSet,
    ys: &VertexSet,
) -> Result<Vec<(usize, usize)>> {
    if let Some(v) = xs.intersection(ys).next() {
        return Err(Error::InvalidInput(format!(
            "parts overlap at vertex {v}"
        )));
    }
    let left: Vec<usize> = xs.iter().copied().collect();
    let right: Vec<usize> = ys.iter().copied().collect();
    let rindex: std::collections::BTreeMap<usize, usize> =
        right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .unwrap()
                .iter()
                .filter_map(|v| rindex.get(v).copied())
                .collect()
        })
        .collect();

    let mut hk = HopcroftKarp::new(left.len(), right.len(), adj);
    hk.run();
    let mut out = Vec::new();
    for (i, &m) in hk.match_left.iter().enumerate() {
        if m != NIL {
            out.push((left[i], right[m]));
        }
    }
    Ok(out)
}

const NIL: usize = usize::MAX;

struct HopcroftKarp {
    adj: Vec<Vec<usize>>,
    match_left: Vec<usize>,
    match_right: Vec<usize>,
    dist: Vec<usize>,
}

impl HopcroftKarp {
    fn new(nl: usize, nr: usize, adj: Vec<Vec<usize>>) -> Self {
        HopcroftKarp {
            adj,
            match_left: vec![NIL; nl],
            match_right: vec![NIL; nr],
            dist: vec![NIL; nl],
        }
    }

    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.match_left.len() {
            if self.match_left[u] == NIL {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = NIL;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                match self.match_right[v] {
                    NIL => found = true,
                    w if self.dist[w] == NIL => {
                        self.dist[w] = self.dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let v = self.adj[u][i];
            let w = self.match_right[v];
            if w == NIL || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.match_left[u] = v;
                self.match_right[v] = u;
                return true;
            }
        }
        self.dist[u] = NIL;
        false
    }

    fn run(&mut self) {
        while self.bfs() {
            for u in 0..self.match_left.len() {
                if self.match_left[u] == NIL {
                    self.dfs(u);
                }
            }
        }
    }
}

/// Every perfect matching of `g`, as sorted edge lists, in deterministic
/// order. Guarded because the count can be exponential.
pub fn perfect_matchings(g: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    if g.n() > MATCHING_ENUM_GUARD {
        return Err(Error::ResourceGuard {
            what: "perfect matching enumeration",
            limit: MATCHING_ENUM_GUARD,
            actual: g.n(),
        });
    }
    if g.n() % 2 != 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut matched = vec![false; g.n()];
    let mut current = Vec::new();
    enumerate(g, &mut matched, &mut current, &mut out);
    Ok(out)
}

fn enumerate(
    g: &Graph,
    matched: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let u = match matched.iter().position(|&m| !m) {
        None => {
            out.push(current.clone());
            return;
        }
        Some(u) => u,
    };
    matched[u] = true;
    for v in g.neighbors(u).unwrap() {
        if !matched[v] {
            matched[v] = true;
            current.push((u, v));
            enumerate(g, matched, current, out);
            current.pop();
            matched[v] = false;
        }
    }
    matched[u] = false;
}
