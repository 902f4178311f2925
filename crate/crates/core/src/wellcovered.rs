//! Well-coveredness checkers for graphs with a basic clique cover.
//!
//! The central criterion: a graph with a basic clique cover Q_1..Q_k is
//! well-covered iff no clique Q_i admits an independent dominating set
//! drawn from outside Q_i. Also here: the bipartite perfect-matching
//! characterization, the s-partite consequence checks, the experimental
//! minimal-vertex-cover shortcut, and the conjecture hunt over exhaustive
//! small-graph corpora.

use serde::Serialize;

use crate::cover::{find_basic_clique_cover, is_in_class_g, proper_partition, validate_basic_cover, BasicCliqueCover};
use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::exec::{sweep, sweep_sequential};
use crate::graph::{Graph, VertexSet};
use crate::matching::{max_bipartite_matching, perfect_matchings, MATCHING_ENUM_GUARD};

/// Default bound on internal corpus enumeration for the conjecture hunt.
pub const HUNT_GUARD: usize = 8;

/// Per-clique certificate inside a [`Verdict`].
#[derive(Debug, Clone, Serialize)]
pub enum CliqueOutcome {
    /// No external independent dominating set exists; `nodes_explored`
    /// summarizes the exhausted search.
    Certified { nodes_explored: u64 },
    /// `witness` is independent, disjoint from the clique, and dominates it.
    Refuted { witness: VertexSet },
}

#[derive(Debug, Clone, Serialize)]
pub struct CliqueCertificate {
    pub clique: VertexSet,
    pub outcome: CliqueOutcome,
}

/// Decision of [`check_well_covered`] with machine-checkable certificates.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub well_covered: bool,
    pub alpha: usize,
    pub per_clique: Vec<CliqueCertificate>,
    /// When not well-covered: a maximum independent set of size alpha and a
    /// maximal independent set of strictly smaller size.
    pub witness_pair: Option<(VertexSet, VertexSet)>,
}

/// An independent set A disjoint from `target` such that every vertex of
/// `target` has a neighbor in A, if one exists. The search is iterative
/// deepening over the witness cardinality with candidates tried in
/// ascending order, so the returned witness has minimum cardinality.
/// Also returns the number of search nodes visited.
pub(crate) fn external_independent_dominating_set(
    g: &Graph,
    target: &VertexSet,
) -> Result<(Option<VertexSet>, u64)> {
    // Candidate dominators per target vertex, outside the target.
    let mut targets: Vec<(usize, Vec<usize>)> = Vec::new();
    for &t in target {
        let cand: Vec<usize> = g
            .neighbors(t)?
            .iter()
            .copied()
            .filter(|v| !target.contains(v))
            .collect();
        if cand.is_empty() {
            // This vertex cannot be dominated from outside at all.
            return Ok((None, 1));
        }
        targets.push((t, cand));
    }
    // Fail fast: handle the vertices with the fewest external neighbors
    // first.
    targets.sort_by_key(|(t, cand)| (cand.len(), *t));

    struct Search<'a> {
        g: &'a Graph,
        targets: &'a [(usize, Vec<usize>)],
        nodes: u64,
    }

    impl Search<'_> {
        fn dfs(&mut self, chosen: &mut Vec<usize>, budget: usize) -> Option<VertexSet> {
            self.nodes += 1;
            let next = self
                .targets
                .iter()
                .find(|(t, _)| !chosen.iter().any(|&a| self.g.has_edge(a, *t)));
            let (_, cand) = match next {
                None => return Some(chosen.iter().copied().collect()),
                Some(pair) => pair,
            };
            if budget == 0 {
                return None;
            }
            for &a in cand {
                if chosen.contains(&a) || chosen.iter().any(|&b| self.g.has_edge(a, b)) {
                    continue;
                }
                chosen.push(a);
                if let Some(found) = self.dfs(chosen, budget - 1) {
                    return Some(found);
                }
                chosen.pop();
            }
            None
        }
    }

    let mut search = Search {
        g,
        targets: &targets,
        nodes: 0,
    };
    // A minimal witness has at most one private vertex per target vertex.
    for depth in 1..=target.len() {
        let mut chosen = Vec::new();
        if let Some(found) = search.dfs(&mut chosen, depth) {
            return Ok((Some(found), search.nodes));
        }
    }
    Ok((None, search.nodes))
}

/// An independent set A inside V \ Q dominating the clique Q, if one exists.
pub fn dominating_independent_set(g: &Graph, q: &VertexSet) -> Result<Option<VertexSet>> {
    if !g.is_clique(q)? {
        return Err(Error::Precondition(format!("{q:?} is not a clique")));
    }
    Ok(external_independent_dominating_set(g, q)?.0)
}

/// The clique-cover criterion: well-covered iff no cover clique has an
/// external independent dominating set. The cover must pass
/// [`validate_basic_cover`].
pub fn check_well_covered(g: &Graph, cover: &BasicCliqueCover) -> Result<Verdict> {
    let report = validate_basic_cover(g, cover)?;
    if !report.valid {
        return Err(Error::Precondition(format!(
            "invalid basic clique cover: {}",
            report.violations.join("; ")
        )));
    }
    let alpha = cover.cliques.len();
    let mut per_clique = Vec::with_capacity(alpha);
    let mut refuted: Option<VertexSet> = None;
    for q in &cover.cliques {
        let (witness, nodes) = external_independent_dominating_set(g, q)?;
        let outcome = match witness {
            None => CliqueOutcome::Certified {
                nodes_explored: nodes,
            },
            Some(w) => {
                if refuted.is_none() {
                    refuted = Some(w.clone());
                }
                CliqueOutcome::Refuted { witness: w }
            }
        };
        per_clique.push(CliqueCertificate {
            clique: q.clone(),
            outcome,
        });
    }
    let witness_pair = match refuted {
        None => None,
        Some(a) => {
            let small = g.extend_to_maximal_independent(&a)?;
            let big = g.maximum_independent_set()?;
            Some((big, small))
        }
    };
    Ok(Verdict {
        well_covered: witness_pair.is_none(),
        alpha,
        per_clique,
        witness_pair,
    })
}

/// Outcome of the bipartite perfect-matching characterization.
#[derive(Debug, Clone, Serialize)]
pub enum RavindraOutcome {
    WellCovered {
        matching: Vec<(usize, usize)>,
    },
    NotWellCovered {
        failure: RavindraFailure,
    },
    /// The first matching failed and the graph is too large for exhaustive
    /// matching enumeration.
    Inconclusive {
        matchings_tried: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub enum RavindraFailure {
    NoPerfectMatching,
    /// Every perfect matching has an edge {x, y} whose closed neighborhood
    /// fails the complete-bipartite test; one failure is recorded.
    AllMatchingsFail {
        matchings_tried: usize,
        example_edge: (usize, usize),
        nonadjacent_pair: (usize, usize),
    },
}

impl RavindraOutcome {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            RavindraOutcome::WellCovered { .. } => Some(true),
            RavindraOutcome::NotWellCovered { .. } => Some(false),
            RavindraOutcome::Inconclusive { .. } => None,
        }
    }
}

/// Bipartite well-coveredness: there is a perfect matching whose every edge
/// {x, y} induces a complete bipartite graph on N[{x, y}]. The matching
/// quantifier is existential, so when the first maximum matching fails the
/// remaining perfect matchings are enumerated (guarded).
pub fn check_ravindra(g: &Graph) -> Result<RavindraOutcome> {
    if g.n() == 0 {
        return Ok(RavindraOutcome::WellCovered { matching: vec![] });
    }
    let (xs, ys) = g
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    for v in 0..g.n() {
        if g.degree(v)? == 0 {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree zero"
            )));
        }
    }
    let matching = max_bipartite_matching(g, &xs, &ys)?;
    if matching.len() * 2 != g.n() {
        return Ok(RavindraOutcome::NotWellCovered {
            failure: RavindraFailure::NoPerfectMatching,
        });
    }
    let first_failure = matching_failure(g, &matching)?;
    let (example_edge, nonadjacent_pair) = match first_failure {
        None => return Ok(RavindraOutcome::WellCovered { matching }),
        Some(f) => f,
    };
    if g.n() > MATCHING_ENUM_GUARD {
        return Ok(RavindraOutcome::Inconclusive { matchings_tried: 1 });
    }
    let all = perfect_matchings(g)?;
    for m in &all {
        if matching_failure(g, m)?.is_none() {
            return Ok(RavindraOutcome::WellCovered { matching: m.clone() });
        }
    }
    Ok(RavindraOutcome::NotWellCovered {
        failure: RavindraFailure::AllMatchingsFail {
            matchings_tried: all.len(),
            example_edge,
            nonadjacent_pair,
        },
    })
}

/// First matched edge failing the complete-bipartite test on its closed
/// neighborhood, with a non-adjacent cross pair as evidence.
fn matching_failure(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<Option<((usize, usize), (usize, usize))>> {
    for &(x, y) in matching {
        for u in g.neighbors(y)? {
            if u == x {
                continue;
            }
            for v in g.neighbors(x)? {
                if v != y && !g.has_edge(u, v) {
                    return Ok(Some(((x, y), (u, v))));
                }
            }
        }
    }
    Ok(None)
}

/// Matching report for one pair of parts.
#[derive(Debug, Clone, Serialize)]
pub struct PairMatching {
    pub parts: (usize, usize),
    pub matching: Vec<(usize, usize)>,
    pub perfect: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpartiteReport {
    pub part_sizes: Vec<usize>,
    pub equal_sizes: bool,
    pub matchings: Vec<PairMatching>,
    /// True when a consequence that the theory guarantees failed to hold;
    /// surfaced loudly, never swallowed.
    pub contradiction: bool,
}

#[derive(Debug, Clone, Serialize)]
pub enum SpartiteOutcome {
    PremiseNotMet { reason: String },
    Report(SpartiteReport),
}

/// For an s-partite well-covered graph whose maximal cliques all have size
/// s, the parts must have equal cardinality and each pair of parts must
/// carry a perfect matching. Premise failures are results, not errors.
pub fn verify_spartite_consequences(
    g: &Graph,
    parts: &[VertexSet],
) -> Result<SpartiteOutcome> {
    let mut seen = VertexSet::new();
    for p in parts {
        if p.is_empty() {
            return Err(Error::InvalidInput("empty part".into()));
        }
        if !g.is_independent(p)? {
            return Err(Error::InvalidInput(format!(
                "part {p:?} is not independent"
            )));
        }
        if let Some(&v) = p.intersection(&seen).next() {
            return Err(Error::InvalidInput(format!(
                "parts overlap at vertex {v}"
            )));
        }
        seen.extend(p.iter().copied());
    }
    if seen.len() != g.n() {
        return Err(Error::InvalidInput(
            "parts do not partition the vertex set".into(),
        ));
    }

    let s = parts.len();
    let cliques = g.maximal_cliques()?;
    if let Some(q) = cliques.iter().find(|q| q.len() != s) {
        return Ok(SpartiteOutcome::PremiseNotMet {
            reason: format!(
                "maximal clique {q:?} has size {}, expected {s}",
                q.len()
            ),
        });
    }
    let oracle = g.is_well_covered_oracle()?;
    if !oracle.well_covered {
        return Ok(SpartiteOutcome::PremiseNotMet {
            reason: "graph is not well-covered".into(),
        });
    }

    let part_sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    let equal_sizes = part_sizes.windows(2).all(|w| w[0] == w[1]);
    let mut matchings = Vec::new();
    let mut all_perfect = true;
    for i in 0..s {
        for j in (i + 1)..s {
            let m = max_bipartite_matching(g, &parts[i], &parts[j])?;
            let perfect = m.len() == parts[i].len() && m.len() == parts[j].len();
            all_perfect &= perfect;
            matchings.push(PairMatching {
                parts: (i, j),
                matching: m,
                perfect,
            });
        }
    }
    Ok(SpartiteOutcome::Report(SpartiteReport {
        part_sizes,
        equal_sizes,
        matchings,
        contradiction: !(equal_sizes && all_perfect),
    }))
}

/// EXPERIMENTAL: the literal polynomial-shortcut reading. With H the
/// induced subgraph on the closed neighborhood N[Q] (the open reading would
/// exclude Q from its own subgraph, making the condition unsatisfiable),
/// returns true iff Q is a vertex cover of H and removing any vertex of Q
/// uncovers some edge of H. Its verdicts are compared against
/// [`dominating_independent_set`] over corpora; disagreements are logged,
/// never silently reconciled.
pub fn shortcut_minimal_cover_claim(g: &Graph, q: &VertexSet) -> Result<bool> {
    if !g.is_clique(q)? {
        return Err(Error::Precondition(format!("{q:?} is not a clique")));
    }
    let h_vertices = g.closed_neighborhood(q)?;
    let h_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|(u, v)| h_vertices.contains(u) && h_vertices.contains(v))
        .collect();
    let is_cover = h_edges
        .iter()
        .all(|(u, v)| q.contains(u) || q.contains(v));
    if !is_cover {
        return Ok(false);
    }
    let minimal = q.iter().all(|&dropped| {
        h_edges
            .iter()
            .any(|&(u, v)| (u == dropped && !q.contains(&v)) || (v == dropped && !q.contains(&u)))
    });
    Ok(minimal)
}

/// A graph on which the conjecture premises hold, which is well-covered,
/// and which nevertheless admits no basic clique cover.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub s: usize,
    pub parts: Vec<VertexSet>,
    pub common_size: usize,
}

/// One instance where the experimental shortcut and the exact dominating
/// search disagree, with everything needed to re-check both sides.
#[derive(Debug, Clone, Serialize)]
pub struct ShortcutDisagreement {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub clique: VertexSet,
    pub shortcut: bool,
    pub dominating_witness: Option<VertexSet>,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct ShortcutAudit {
    pub cliques_compared: usize,
    pub agreements: usize,
    pub disagreements: Vec<ShortcutDisagreement>,
    /// Count of cases where the shortcut said true but no dominating
    /// witness exists. The one-directional implication says this must stay
    /// at zero; a nonzero value is a defect signal.
    pub one_directional_violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub scanned: usize,
    pub premise_satisfying: usize,
    pub counterexamples: Vec<Counterexample>,
    pub shortcut_audit: ShortcutAudit,
}

struct GraphScan {
    premise: bool,
    counterexample: Option<Counterexample>,
    shortcut: Vec<(VertexSet, bool, Option<VertexSet>)>,
    graph: Graph,
}

fn scan_graph(g: Graph) -> GraphScan {
    let mut scan = GraphScan {
        premise: false,
        counterexample: None,
        shortcut: Vec::new(),
        graph: g,
    };
    let g = &scan.graph;

    // Shortcut audit over the cliques of a basic cover, when one exists.
    if let Ok(Some(cover)) = find_basic_clique_cover(g) {
        for q in &cover.cliques {
            let shortcut = shortcut_minimal_cover_claim(g, q).unwrap();
            let witness = dominating_independent_set(g, q).unwrap();
            scan.shortcut.push((q.clone(), shortcut, witness));
        }
    }

    // Conjecture premises: uniform maximal clique size s, s-partite,
    // well-covered.
    let cliques = g.maximal_cliques().unwrap();
    let s = match cliques.first() {
        None => return scan,
        Some(first) => first.len(),
    };
    if cliques.iter().any(|q| q.len() != s) {
        return scan;
    }
    let parts = match proper_partition(g, s).unwrap() {
        None => return scan,
        Some(parts) => parts,
    };
    let oracle = g.is_well_covered_oracle().unwrap();
    if !oracle.well_covered {
        return scan;
    }
    scan.premise = true;
    if is_in_class_g(g).unwrap().is_none() {
        scan.counterexample = Some(Counterexample {
            n: g.n(),
            edges: g.edges(),
            s,
            parts,
            common_size: oracle.common_size.unwrap(),
        });
    }
    scan
}

/// Scan an explicit stream of graphs (each at most [`crate::graph::ORACLE_GUARD`]
/// vertices). Work is spread across rayon workers when the `parallel`
/// feature is on; the report is identical regardless of worker count.
pub fn conjecture_hunt_stream(graphs: Vec<Graph>) -> HuntReport {
    merge_scans(sweep(graphs, scan_graph))
}

/// Single-threaded variant of [`conjecture_hunt_stream`].
pub fn conjecture_hunt_stream_sequential(graphs: Vec<Graph>) -> HuntReport {
    merge_scans(sweep_sequential(graphs, scan_graph))
}

/// Hunt over all graphs with at most `max_n` vertices up to isomorphism.
pub fn conjecture_hunt(max_n: usize) -> Result<HuntReport> {
    if max_n > HUNT_GUARD {
        return Err(Error::ResourceGuard {
            what: "conjecture hunt enumeration",
            limit: HUNT_GUARD,
            actual: max_n,
        });
    }
    Ok(conjecture_hunt_stream(all_graphs(max_n)?))
}

fn merge_scans(scans: Vec<GraphScan>) -> HuntReport {
    let mut report = HuntReport {
        scanned: scans.len(),
        premise_satisfying: 0,
        counterexamples: Vec::new(),
        shortcut_audit: ShortcutAudit::default(),
    };
    for scan in scans {
        if scan.premise {
            report.premise_satisfying += 1;
        }
        report.counterexamples.extend(scan.counterexample);
        for (clique, shortcut, witness) in scan.shortcut {
            let audit = &mut report.shortcut_audit;
            audit.cliques_compared += 1;
            if shortcut == witness.is_some() {
                audit.agreements += 1;
            } else {
                if shortcut && witness.is_none() {
                    audit.one_directional_violations += 1;
                }
                audit.disagreements.push(ShortcutDisagreement {
                    n: scan.graph.n(),
                    edges: scan.graph.edges(),
                    clique,
                    shortcut,
                    dominating_witness: witness,
                });
            }
        }
    }
    report
}
