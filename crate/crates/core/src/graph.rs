//! Undirected simple graphs on dense 0-based vertices, the combinatorial
//! primitives (independence, cliques, domination, covers) and the exhaustive
//! well-coveredness oracle that every fast path is validated against.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Subsets of vertices are kept sorted so that every enumeration in the
/// library is deterministic.
pub type VertexSet = BTreeSet<usize>;

/// Default vertex-count guard for the exhaustive oracle. The recognition
/// problem is Co-NP-complete in general, so exhaustion is deliberately
/// bounded; callers may raise the guard up to [`ENUM_HARD_CAP`].
pub const ORACLE_GUARD: usize = 32;

/// Hard cap on exhaustive enumeration: the internal bitset routines use one
/// machine word per vertex row.
pub const ENUM_HARD_CAP: usize = 64;

/// An undirected graph with no loops and no multiple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

/// Result of the brute-force well-coveredness check.
#[derive(Debug, Clone, Serialize)]
pub struct OracleVerdict {
    pub well_covered: bool,
    /// Shared cardinality of all maximal independent sets, when well-covered.
    pub common_size: Option<usize>,
    /// Two maximal independent sets of different cardinalities, when not.
    pub witnesses: Option<(VertexSet, VertexSet)>,
    /// Number of maximal independent sets examined.
    pub count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge { v });
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(())
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    /// Closed neighborhood N[S] = S together with all neighbors of S.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut out = s.clone();
        for &v in s {
            out.extend(self.adj[v].iter().copied());
        }
        Ok(out)
    }

    /// Open neighborhood N(S) of a set: all vertices with a neighbor in S,
    /// excluding S itself.
    pub fn open_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut out = self.closed_neighborhood(s)?;
        out.retain(|v| !s.contains(v));
        Ok(out)
    }

    /// True iff no two members of `s` are adjacent. The empty set and
    /// singletons are independent.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        for &u in s {
            if self.adj[u].iter().any(|v| v > &u && s.contains(v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff all members of `s` are pairwise adjacent. The empty set and
    /// singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        for &u in s {
            for &v in s {
                if u < v && !self.adj[u].contains(&v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every vertex of `b` is in `a` or has a neighbor in `a`.
    pub fn dominates(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(b.iter().all(|&v| {
            a.contains(&v) || self.adj[v].iter().any(|u| a.contains(u))
        }))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(&v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// Induced subgraph on `s`, together with the sorted list mapping new
    /// vertex indices back to the old ones.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let verts: Vec<usize> = s.iter().copied().collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i < j && self.adj[u].contains(&v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, verts))
    }

    /// Adjacency rows as bitmasks; only available for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > ENUM_HARD_CAP {
            return Err(Error::ResourceGuard {
                what: "bitset enumeration",
                limit: ENUM_HARD_CAP,
                actual: self.n,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }

    fn complement_masks(&self) -> Result<Vec<u64>> {
        let full = full_mask(self.n);
        let adj = self.adjacency_masks()?;
        Ok(adj
            .iter()
            .enumerate()
            .map(|(v, row)| (full & !row) & !(1u64 << v))
            .collect())
    }

    /// All inclusion-maximal independent sets, each exactly once, in
    /// lexicographic order of their sorted member lists. For `n = 0` this is
    /// exactly the empty set.
    pub fn maximal_independent_sets(&self) -> Result<Vec<VertexSet>> {
        // Maximal independent sets are the maximal cliques of the complement.
        let comp = self.complement_masks()?;
        Ok(enumerate_maximal(self.n, &comp))
    }

    /// All inclusion-maximal cliques, in lexicographic order.
    pub fn maximal_cliques(&self) -> Result<Vec<VertexSet>> {
        let adj = self.adjacency_masks()?;
        Ok(enumerate_maximal(self.n, &adj))
    }

    /// Independence number, computed by exact branch and bound.
    pub fn alpha(&self) -> Result<usize> {
        Ok(self.maximum_independent_set()?.len())
    }

    /// A maximum independent set (exact, deterministic).
    pub fn maximum_independent_set(&self) -> Result<VertexSet> {
        let comp = self.complement_masks()?;
        let best = max_clique(self.n, &comp);
        Ok(mask_to_set(best))
    }

    /// Exhaustive well-coveredness check with the default vertex guard.
    pub fn is_well_covered_oracle(&self) -> Result<OracleVerdict> {
        self.is_well_covered_oracle_guarded(ORACLE_GUARD)
    }

    /// Exhaustive well-coveredness check with a caller-set guard (capped at
    /// [`ENUM_HARD_CAP`]).
    pub fn is_well_covered_oracle_guarded(&self, max_n: usize) -> Result<OracleVerdict> {
        let limit = max_n.min(ENUM_HARD_CAP);
        if self.n > limit {
            return Err(Error::ResourceGuard {
                what: "well-coveredness oracle",
                limit,
                actual: self.n,
            });
        }
        let sets = self.maximal_independent_sets()?;
        let count = sets.len();
        let smallest = sets.iter().min_by_key(|s| s.len()).cloned().unwrap_or_default();
        let largest = sets.iter().max_by_key(|s| s.len()).cloned().unwrap_or_default();
        if smallest.len() == largest.len() {
            Ok(OracleVerdict {
                well_covered: true,
                common_size: Some(largest.len()),
                witnesses: None,
                count,
            })
        } else {
            Ok(OracleVerdict {
                well_covered: false,
                common_size: None,
                witnesses: Some((largest, smallest)),
                count,
            })
        }
    }

    /// Minimal vertex covers: exactly the complements of the maximal
    /// independent sets.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        self.minimal_vertex_covers_guarded(ORACLE_GUARD)
    }

    pub fn minimal_vertex_covers_guarded(&self, max_n: usize) -> Result<Vec<VertexSet>> {
        let limit = max_n.min(ENUM_HARD_CAP);
        if self.n > limit {
            return Err(Error::ResourceGuard {
                what: "minimal vertex cover enumeration",
                limit,
                actual: self.n,
            });
        }
        let all: VertexSet = (0..self.n).collect();
        let covers: Vec<VertexSet> = self
            .maximal_independent_sets()?
            .iter()
            .map(|s| all.difference(s).copied().collect())
            .collect();
        Ok(covers)
    }

    /// Greedily extend an independent set to an inclusion-maximal one,
    /// considering vertices in ascending order.
    pub fn extend_to_maximal_independent(&self, s: &VertexSet) -> Result<VertexSet> {
        if !self.is_independent(s)? {
            return Err(Error::Precondition(format!(
                "cannot extend dependent set {s:?}"
            )));
        }
        let mut out = s.clone();
        for v in 0..self.n {
            if !out.contains(&v) && self.adj[v].iter().all(|u| !out.contains(u)) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// A proper 2-coloring `(part0, part1)` if the graph is bipartite.
    /// Deterministic: components are rooted at their smallest vertex, which
    /// goes into part 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if color[root] != usize::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == usize::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let part0 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let part1 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((part0, part1))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

/// All maximal cliques of the graph given by adjacency bitmasks, as sorted
/// vertex sets in lexicographic order.
fn enumerate_maximal(n: usize, adj: &[u64]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, full_mask(n), 0, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(mask_to_set).collect();
    sets.sort_by(|a, b| {
        a.iter()
            .collect::<Vec<_>>()
            .cmp(&b.iter().collect::<Vec<_>>())
    });
    sets
}

/// Bron-Kerbosch with pivoting.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of P | X with the most neighbors in P.
    let mut pivot = usize::MAX;
    let mut best = -1i64;
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let score = (p & adj[u]).count_ones() as i64;
        if score > best {
            best = score;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        cand &= cand - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Exact maximum clique by branch and bound; deterministic.
fn max_clique(n: usize, adj: &[u64]) -> u64 {
    fn expand(adj: &[u64], r: u64, p: u64, best: &mut u64) {
        if r.count_ones() + p.count_ones() <= best.count_ones() {
            return;
        }
        if p == 0 {
            if r.count_ones() > best.count_ones() {
                *best = r;
            }
            return;
        }
        let mut cand = p;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u64 << v;
            cand &= cand - 1;
            if r.count_ones() + (p & !(bit - 1)).count_ones() <= best.count_ones() {
                break;
            }
            expand(adj, r | bit, p & adj[v] & !(bit | (bit - 1)), best);
        }
    }
    let mut best = 0u64;
    expand(adj, 0, full_mask(n), &mut best);
    best
}

/// Small named graphs used throughout the tests.
pub mod fixtures {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            if n > 2 || v + 1 < n {
                g.add_edge(v, (v + 1) % n).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &sz) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(sz));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// The 6-vertex 3-partite graph used as a running example: well-covered
    /// with independence number 2, yet no two cliques cover all vertices.
    /// Parts are {0,3}, {1,4}, {2,5}.
    pub fn six_vertex_tripartite() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 5),
                (2, 4),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap()
    }
}
