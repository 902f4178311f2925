//! Purity of simplicial complexes against the graph oracle, and the
//! algebraic zero-divisor reading of the domination criterion.

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wellcover::cover::validate_basic_cover;
use wellcover::edge_ring::{edge_ring, theta, LinearForm, SquareFreeMonomial};
use wellcover::graph::{Graph, VertexSet};
use wellcover::wellcovered::check_well_covered;
use wellcover::SimplicialComplex;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1 << bit) != 0 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn set_from_bits(bits: u64, n: usize) -> VertexSet {
    (0..n).filter(|&v| bits & (1 << v) != 0).collect()
}

/// Every family of non-empty subsets of a 4-element ground set, normalized
/// to its antichain of maximal members.
fn all_complexes_on_4() -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    // 15 non-empty subsets of {0,1,2,3}.
    let subsets: Vec<VertexSet> = (1u64..16).map(|b| set_from_bits(b, 4)).collect();
    for family in 1u64..(1 << 15) {
        let facets: Vec<VertexSet> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| family & (1 << i) != 0)
            .map(|(_, s)| s.clone())
            .collect();
        // Keep only families whose facets cover the ground set, so n is
        // honest; from_facets drops subsumed members itself.
        let covered: VertexSet = facets.iter().flatten().copied().collect();
        if covered.len() == 4 {
            out.push(SimplicialComplex::from_facets(4, facets).unwrap());
        }
    }
    out
}

#[test]
fn purity_matches_oracle_on_all_complexes_over_4_elements() {
    let mut seen = std::collections::BTreeSet::new();
    for delta in all_complexes_on_4() {
        // Deduplicate: many families normalize to the same antichain.
        if !seen.insert(delta.facets().to_vec()) {
            continue;
        }
        let (g, _, cover) = delta.noncomparability_graph().unwrap();
        let report = validate_basic_cover(&g, &cover).unwrap();
        assert!(report.valid, "{:?}", report.violations);
        let oracle = g.is_well_covered_oracle().unwrap().well_covered;
        assert_eq!(delta.is_pure(), oracle, "facets {:?}", delta.facets());
        assert_eq!(
            check_well_covered(&g, &cover).unwrap().well_covered,
            oracle
        );
    }
    assert!(seen.len() > 100);
}

#[test]
fn purity_matches_oracle_on_random_complexes_over_5_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let k = rng.gen_range(1..=5);
        let facets: Vec<VertexSet> = (0..k)
            .map(|_| set_from_bits(rng.gen_range(1..32u64), 5))
            .collect();
        let n = facets.iter().flatten().max().map_or(1, |&m| m + 1);
        let delta = SimplicialComplex::from_facets(n, facets).unwrap();
        let (g, _, cover) = delta.noncomparability_graph().unwrap();
        let oracle = g.is_well_covered_oracle().unwrap().well_covered;
        assert_eq!(delta.is_pure(), oracle);
        assert_eq!(
            check_well_covered(&g, &cover).unwrap().well_covered,
            oracle
        );
    }
}

#[test]
fn independent_sets_of_the_derived_graph_are_chains() {
    let delta = SimplicialComplex::from_facets(
        5,
        vec![
            VertexSet::from([0, 1, 2]),
            VertexSet::from([1, 3]),
            VertexSet::from([4]),
        ],
    )
    .unwrap();
    let (g, map, _) = delta.noncomparability_graph().unwrap();
    let faces = delta.faces();
    for mis in g.maximal_independent_sets().unwrap() {
        let chain: Vec<&VertexSet> = mis.iter().map(|&v| map.face(v).unwrap()).collect();
        for a in &chain {
            for b in &chain {
                assert!(a.is_subset(b) || b.is_subset(a));
            }
        }
        // Maximal as a chain: every other face is incomparable to some link.
        for f in &faces {
            if chain.contains(&f) {
                continue;
            }
            assert!(chain
                .iter()
                .any(|c| !f.is_subset(c) && !c.is_subset(f)));
        }
        // A maximal chain runs from a singleton up to a facet.
        assert_eq!(chain.first().unwrap().len(), 1);
        assert!(delta.facets().contains(chain.last().unwrap()));
    }
}

#[test]
fn independence_complex_is_pure_iff_graph_is_well_covered() {
    for n in 1..=6usize {
        for mask in 0u64..(1 << pair_count(n)) {
            if n == 6 && mask % 13 != 0 {
                continue;
            }
            let g = graph_from_mask(n, mask);
            let delta = SimplicialComplex::independence_complex(&g).unwrap();
            assert_eq!(
                delta.is_pure(),
                g.is_well_covered_oracle().unwrap().well_covered
            );
        }
    }
}

#[test]
fn monomial_vanishes_iff_support_is_dependent() {
    for mask in 0u64..(1 << pair_count(5)) {
        let g = graph_from_mask(5, mask);
        let r = edge_ring(&g);
        for bits in 0u64..32 {
            let s = set_from_bits(bits, 5);
            let m = SquareFreeMonomial::from_support(s.clone());
            assert_eq!(
                r.monomial_is_zero(&m).unwrap(),
                !g.is_independent(&s).unwrap()
            );
        }
    }
}

#[test]
fn minimal_primes_are_the_minimal_vertex_covers() {
    for seed in 0u64..120 {
        let mask = seed.wrapping_mul(0x9e3779b97f4a7c15) & ((1 << pair_count(7)) - 1);
        let g = graph_from_mask(7, mask);
        let mut primes = edge_ring(&g).minimal_primes().unwrap();
        let mut covers = g.minimal_vertex_covers().unwrap();
        primes.sort();
        covers.sort();
        assert_eq!(primes, covers);
        // Each prime contains every generator's support, minimally.
        for p in &primes {
            for (u, v) in g.edges() {
                assert!(p.contains(&u) || p.contains(&v));
            }
        }
    }
}

#[test]
fn zero_divisor_witnesses_annihilate_theta() {
    for seed in 0u64..200 {
        let mask = seed.wrapping_mul(0x2545f4914f6cdd1d) & ((1 << pair_count(6)) - 1);
        let g = graph_from_mask(6, mask);
        let r = edge_ring(&g);
        for q in g.maximal_cliques().unwrap() {
            let f = theta(&q).unwrap();
            if let Some(m) = r.linear_zero_divisor(&f).unwrap() {
                assert!(!r.monomial_is_zero(&m).unwrap());
                for j in f.support() {
                    assert!(r.monomial_is_zero(&m.times_variable(j)).unwrap());
                }
            }
        }
    }
}

#[test]
fn zero_divisor_status_ignores_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ef);
    for seed in 0u64..80 {
        let mask = seed.wrapping_mul(0x9e3779b97f4a7c15) & ((1 << pair_count(6)) - 1);
        let g = graph_from_mask(6, mask);
        let r = edge_ring(&g);
        for q in g.maximal_cliques().unwrap() {
            let plain = r.linear_zero_divisor(&theta(&q).unwrap()).unwrap();
            let scrambled = LinearForm::new(q.iter().map(|&v| {
                let num = rng.gen_range(1..=9i64) * if rng.gen() { 1 } else { -1 };
                let den = rng.gen_range(1..=9i64);
                (v, Rational64::new(num, den))
            }));
            let twisted = r.linear_zero_divisor(&scrambled).unwrap();
            assert_eq!(plain.is_some(), twisted.is_some());
        }
    }
}
