//! Clique covers: the basification of an overlapping cover, exact minimum
//! clique-partition search (as exact coloring of the complement), and
//! class-G membership. A graph is in class G when alpha(G) cliques cover
//! all of its vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, VertexSet};

/// Default vertex guard for the exact clique-partition search.
pub const COVER_GUARD: usize = 24;

/// Cliques covering all vertices of a graph; may overlap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

/// A partition of the vertices into exactly alpha(G) pairwise-disjoint
/// non-empty cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicCliqueCover {
    pub cliques: Vec<VertexSet>,
}

/// Violation report from [`validate_basic_cover`].
#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Turn a clique cover of size alpha(G) into a basic one by subtracting
/// earlier cliques: `Q'_1 = Q_1` and `Q'_i = Q_i` minus all earlier cliques.
/// The input clique order is preserved and is part of the contract.
pub fn basify(g: &Graph, cover: &CliqueCover) -> Result<BasicCliqueCover> {
    let alpha = g.alpha()?;
    if cover.cliques.len() != alpha {
        return Err(Error::Precondition(format!(
            "cover has {} cliques but alpha(G) = {alpha}",
            cover.cliques.len()
        )));
    }
    for q in &cover.cliques {
        if !g.is_clique(q)? {
            return Err(Error::InvalidInput(format!("{q:?} is not a clique")));
        }
    }
    let covered: VertexSet = cover.cliques.iter().flatten().copied().collect();
    if covered.len() != g.n() {
        return Err(Error::InvalidInput(
            "cover does not cover all vertices".into(),
        ));
    }
    let mut covered = VertexSet::new();
    let mut out = Vec::with_capacity(cover.cliques.len());
    for q in &cover.cliques {
        let reduced: VertexSet = q.difference(&covered).copied().collect();
        covered.extend(q.iter().copied());
        // A smaller cover would contradict alpha <= cover size, so no
        // reduced clique can come out empty here.
        out.push(reduced);
    }
    Ok(BasicCliqueCover { cliques: out })
}

/// A partition of V into alpha(G) cliques, if one exists. Equivalent to the
/// complement being alpha(G)-colorable; the search is exact coloring of the
/// complement with DSATUR ordering and branch and bound. Deterministic.
pub fn find_basic_clique_cover(g: &Graph) -> Result<Option<BasicCliqueCover>> {
    find_basic_clique_cover_guarded(g, COVER_GUARD)
}

pub fn find_basic_clique_cover_guarded(
    g: &Graph,
    max_n: usize,
) -> Result<Option<BasicCliqueCover>> {
    if g.n() > max_n {
        return Err(Error::ResourceGuard {
            what: "basic clique cover search",
            limit: max_n,
            actual: g.n(),
        });
    }
    let alpha = g.alpha()?;
    if g.n() == 0 {
        return Ok(Some(BasicCliqueCover { cliques: vec![] }));
    }
    let comp = g.complement().adjacency_masks()?;
    match dsatur_color(&comp, alpha) {
        None => Ok(None),
        Some(colors) => Ok(Some(classes_to_cover(&colors, alpha))),
    }
}

/// Class-G membership with the witness cover attached when true.
pub fn is_in_class_g(g: &Graph) -> Result<Option<BasicCliqueCover>> {
    find_basic_clique_cover(g)
}

/// Check all basic-cover invariants against `g`. Violations are reported,
/// not thrown.
pub fn validate_basic_cover(g: &Graph, cover: &BasicCliqueCover) -> Result<CoverReport> {
    let mut violations = Vec::new();
    let mut seen = VertexSet::new();
    for (i, q) in cover.cliques.iter().enumerate() {
        if q.is_empty() {
            violations.push(format!("clique {i} is empty"));
        }
        if !g.is_clique(q)? {
            violations.push(format!("set {i} {q:?} is not a clique"));
        }
        if let Some(&v) = q.intersection(&seen).next() {
            violations.push(format!("cliques overlap at vertex {v}"));
        }
        seen.extend(q.iter().copied());
    }
    if seen.len() != g.n() {
        let missing: Vec<usize> = (0..g.n()).filter(|v| !seen.contains(v)).collect();
        violations.push(format!("vertices {missing:?} are uncovered"));
    }
    let alpha = g.alpha()?;
    if cover.cliques.len() != alpha {
        violations.push(format!(
            "cover has {} cliques but alpha(G) = {alpha}",
            cover.cliques.len()
        ));
    }
    Ok(CoverReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Every partition of V into alpha(G) cliques, each exactly once, in
/// deterministic order. Intended for small corpora; guarded at 16 vertices.
pub fn enumerate_basic_covers(g: &Graph) -> Result<Vec<BasicCliqueCover>> {
    const GUARD: usize = 16;
    if g.n() > GUARD {
        return Err(Error::ResourceGuard {
            what: "basic clique cover enumeration",
            limit: GUARD,
            actual: g.n(),
        });
    }
    let alpha = g.alpha()?;
    if g.n() == 0 {
        return Ok(vec![BasicCliqueCover { cliques: vec![] }]);
    }
    let comp = g.complement().adjacency_masks()?;
    // Enumerate proper alpha-colorings of the complement with canonical
    // color order (color c is available only after colors < c are in use),
    // so each partition appears exactly once.
    let mut out = Vec::new();
    let mut colors = vec![usize::MAX; g.n()];
    enumerate_colorings(&comp, alpha, 0, 0, &mut colors, &mut out);
    Ok(out)
}

fn enumerate_colorings(
    comp: &[u64],
    k: usize,
    v: usize,
    used: usize,
    colors: &mut Vec<usize>,
    out: &mut Vec<BasicCliqueCover>,
) {
    if v == comp.len() {
        if used == k {
            out.push(classes_to_cover(colors, k));
        }
        return;
    }
    // Prune: remaining vertices cannot open enough new classes.
    if used + (comp.len() - v) < k {
        return;
    }
    for c in 0..=used.min(k - 1) {
        let conflict = (0..v).any(|u| colors[u] == c && comp[v] & (1 << u) != 0);
        if !conflict {
            colors[v] = c;
            enumerate_colorings(comp, k, v + 1, used.max(c + 1), colors, out);
            colors[v] = usize::MAX;
        }
    }
}

fn classes_to_cover(colors: &[usize], k: usize) -> BasicCliqueCover {
    let mut cliques = vec![VertexSet::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        cliques[c].insert(v);
    }
    // Order classes by smallest member for a stable presentation.
    cliques.sort_by_key(|q| *q.iter().next().unwrap());
    BasicCliqueCover { cliques }
}

/// Exact k-colorability by DSATUR branch and bound on bitmask adjacency.
/// Returns one proper coloring or `None`.
pub(crate) fn dsatur_color(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Some(vec![]);
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n]; // bitset of colors seen
    if dsatur_rec(adj, k, 0, &mut colors, &mut neighbor_colors) {
        Some(colors)
    } else {
        None
    }
}

fn dsatur_rec(
    adj: &[u64],
    k: usize,
    max_used: usize,
    colors: &mut Vec<usize>,
    neighbor_colors: &mut Vec<u64>,
) -> bool {
    let n = adj.len();
    // Pick the uncolored vertex with maximum saturation, ties by degree
    // then index.
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let sat = neighbor_colors[v].count_ones() as usize;
        let deg = (adj[v] & full_mask(n)).count_ones() as usize;
        if pick.is_none() || (sat, deg) > best {
            pick = Some(v);
            best = (sat, deg);
        }
    }
    let v = match pick {
        None => return true,
        Some(v) => v,
    };
    // Symmetry break: at most one brand-new color is worth trying.
    for c in 0..k.min(max_used + 1) {
        if neighbor_colors[v] & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        let mut touched = Vec::new();
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if neighbor_colors[u] & (1 << c) == 0 {
                neighbor_colors[u] |= 1 << c;
                touched.push(u);
            }
        }
        if dsatur_rec(adj, k, max_used.max(c + 1), colors, neighbor_colors) {
            return true;
        }
        for u in touched {
            neighbor_colors[u] &= !(1 << c);
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Exact chromatic number by repeated k-colorability tests; used as the
/// cross-check route for cover existence and for s-partitions.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let adj = g.adjacency_masks()?;
    for k in 0..=g.n() {
        if dsatur_color(&adj, k).is_some() {
            return Ok(k);
        }
    }
    unreachable!("a graph is always n-colorable")
}

/// A proper coloring of `g` with exactly `k` nonempty classes, as vertex
/// sets, if one exists.
pub fn proper_partition(g: &Graph, k: usize) -> Result<Option<Vec<VertexSet>>> {
    let adj = g.adjacency_masks()?;
    if g.n() == 0 {
        return Ok(if k == 0 { Some(vec![]) } else { None });
    }
    match dsatur_color(&adj, k) {
        None => Ok(None),
        Some(colors) => {
            // DSATUR may use fewer than k colors; spread singletons out of
            // the largest classes to reach exactly k nonempty parts.
            let used = colors.iter().max().map_or(0, |&c| c + 1);
            let mut parts: Vec<VertexSet> = (0..used)
                .map(|c| {
                    colors
                        .iter()
                        .enumerate()
                        .filter(|(_, &cc)| cc == c)
                        .map(|(v, _)| v)
                        .collect()
                })
                .collect();
            while parts.len() < k {
                let (idx, _) = parts
                    .iter()
                    .enumerate()
                    .max_by_key(|(_, p)| p.len())
                    .unwrap();
                if parts[idx].len() < 2 {
                    return Ok(None);
                }
                let v = *parts[idx].iter().next().unwrap();
                parts[idx].remove(&v);
                parts.push(VertexSet::from([v]));
            }
            Ok(Some(parts))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    fn cover(cliques: &[&[usize]]) -> CliqueCover {
        CliqueCover {
            cliques: cliques.iter().map(|c| vs(c)).collect(),
        }
    }

    #[test]
    fn basify_disjoint_cover_is_unchanged() {
        let g = cycle(4);
        let b = basify(&g, &cover(&[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(b.cliques, vec![vs(&[0, 1]), vs(&[2, 3])]);
    }

    #[test]
    fn basify_size_guard() {
        let g = cycle(4);
        let err = basify(&g, &cover(&[&[0, 1], &[1, 2], &[3]])).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("3") && msg.contains("alpha(G) = 2"), "{msg}");
    }

    #[test]
    fn basify_subtracts_earlier_cliques() {
        // Triangle with a pendant vertex: alpha = 2.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let b = basify(&g, &cover(&[&[0, 1, 2], &[2, 3]])).unwrap();
        assert_eq!(b.cliques, vec![vs(&[0, 1, 2]), vs(&[3])]);
        assert!(validate_basic_cover(&g, &b).unwrap().valid);
    }

    #[test]
    fn basify_rejects_non_cliques() {
        let g = cycle(4);
        assert!(basify(&g, &cover(&[&[0, 2], &[1, 3]])).is_err());
    }

    #[test]
    fn c4_has_a_basic_cover_c5_does_not() {
        let c4 = find_basic_clique_cover(&cycle(4)).unwrap().unwrap();
        assert!(validate_basic_cover(&cycle(4), &c4).unwrap().valid);
        assert!(find_basic_clique_cover(&cycle(5)).unwrap().is_none());
    }

    #[test]
    fn figure_graph_is_not_in_class_g() {
        let g = six_vertex_tripartite();
        assert_eq!(g.alpha().unwrap(), 2);
        assert!(is_in_class_g(&g).unwrap().is_none());
    }

    #[test]
    fn octahedron_is_covered_by_two_triangles() {
        let g = complete_multipartite(&[2, 2, 2]);
        let b = is_in_class_g(&g).unwrap().unwrap();
        assert_eq!(b.cliques.len(), 2);
        assert!(b.cliques.iter().all(|q| q.len() == 3));
        assert!(validate_basic_cover(&g, &b).unwrap().valid);
    }

    #[test]
    fn validation_reports() {
        let g = cycle(4);
        let ok = BasicCliqueCover {
            cliques: vec![vs(&[0, 1]), vs(&[2, 3])],
        };
        assert!(validate_basic_cover(&g, &ok).unwrap().valid);

        let overlapping = BasicCliqueCover {
            cliques: vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[3])],
        };
        let report = validate_basic_cover(&g, &overlapping).unwrap();
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.contains("overlap")));

        let wrong_count = BasicCliqueCover {
            cliques: vec![vs(&[0, 1]), vs(&[2]), vs(&[3])],
        };
        let report = validate_basic_cover(&g, &wrong_count).unwrap();
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.contains("alpha")));
    }

    #[test]
    fn empty_graph_is_in_class_g_vacuously() {
        let g = Graph::new(0);
        let b = find_basic_clique_cover(&g).unwrap().unwrap();
        assert!(b.cliques.is_empty());
        assert!(validate_basic_cover(&g, &b).unwrap().valid);
    }

    #[test]
    fn cover_enumeration_on_c4() {
        let covers = enumerate_basic_covers(&cycle(4)).unwrap();
        // The two perfect matchings of C4.
        assert_eq!(covers.len(), 2);
        assert!(covers
            .iter()
            .any(|c| c.cliques == vec![vs(&[0, 1]), vs(&[2, 3])]));
        assert!(covers
            .iter()
            .any(|c| c.cliques == vec![vs(&[0, 3]), vs(&[1, 2])]));
        for c in &covers {
            assert!(validate_basic_cover(&cycle(4), c).unwrap().valid);
        }
    }

    #[test]
    fn cover_existence_matches_complement_chromatic_number() {
        for g in [
            cycle(4),
            cycle(5),
            cycle(6),
            path(5),
            complete(4),
            six_vertex_tripartite(),
            complete_multipartite(&[2, 2, 2]),
        ] {
            let present = find_basic_clique_cover(&g).unwrap().is_some();
            let chi = chromatic_number(&g.complement()).unwrap();
            assert_eq!(present, chi == g.alpha().unwrap());
        }
    }

    #[test]
    fn proper_partition_of_figure_graph() {
        let g = six_vertex_tripartite();
        let parts = proper_partition(&g, 3).unwrap().unwrap();
        assert_eq!(parts.len(), 3);
        for p in &parts {
            assert!(g.is_independent(p).unwrap());
        }
        assert!(proper_partition(&g, 2).unwrap().is_none());
    }
}
