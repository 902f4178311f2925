//! Simplicial complexes given by their facet lists: purity, independence
//! complexes, and the non-comparability graph on the non-empty faces with
//! its dimension-level basic clique cover.

use std::collections::BTreeSet;

use crate::cover::BasicCliqueCover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default guard on the number of faces of the derived graph; the face count
/// is exponential in the facet sizes.
pub const FACE_GUARD: usize = 1 << 15;

/// A finite simplicial complex on ground set `0..n`, stored by its facets.
/// Facets form an antichain and every ground element lies in some facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
    /// Ground elements that appeared in no input facet and were repaired
    /// into singleton facets.
    repaired: Vec<usize>,
}

/// Bijection between the non-empty faces of a complex and the vertices of
/// its non-comparability graph. Faces are listed in (dimension, lex) order.
#[derive(Debug, Clone)]
pub struct FaceVertexMap {
    faces: Vec<VertexSet>,
}

impl FaceVertexMap {
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn face(&self, vertex: usize) -> Option<&VertexSet> {
        self.faces.get(vertex)
    }

    pub fn vertex(&self, face: &VertexSet) -> Option<usize> {
        self.faces.iter().position(|f| f == face)
    }
}

impl SimplicialComplex {
    /// Build a complex from a facet list. Subsumed and duplicate facets are
    /// removed; ground elements missing from every facet are added as
    /// singleton facets (recorded in [`SimplicialComplex::repaired`]).
    pub fn from_facets(n: usize, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        Self::build(n, facets, false)
    }

    /// Like [`SimplicialComplex::from_facets`] but missing ground elements
    /// are an error instead of a repair.
    pub fn from_facets_strict(n: usize, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        Self::build(n, facets, true)
    }

    fn build(n: usize, facets: Vec<VertexSet>, strict: bool) -> Result<SimplicialComplex> {
        for f in &facets {
            if f.is_empty() {
                return Err(Error::InvalidInput("empty facet".into()));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        // Antichain normalization: drop any facet contained in another.
        let mut kept: Vec<VertexSet> = Vec::new();
        for f in &facets {
            if facets.iter().any(|g| g != f && f.is_subset(g))
                || kept.contains(f)
            {
                continue;
            }
            kept.push(f.clone());
        }
        let covered: VertexSet = kept.iter().flatten().copied().collect();
        let mut repaired = Vec::new();
        for v in 0..n {
            if !covered.contains(&v) {
                if strict {
                    return Err(Error::InvalidInput(format!(
                        "ground element {v} lies in no facet"
                    )));
                }
                kept.push(BTreeSet::from([v]));
                repaired.push(v);
            }
        }
        kept.sort_by(face_order);
        Ok(SimplicialComplex {
            n,
            facets: kept,
            repaired,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn repaired(&self) -> &[usize] {
        &self.repaired
    }

    /// Max facet cardinality minus one; `None` for the complex on an empty
    /// ground set.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// All facets have the same cardinality. The empty complex is pure.
    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].len() == w[1].len())
    }

    /// All non-empty faces, deduplicated, in (dimension, lex) order.
    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_guarded(usize::MAX).expect("unguarded")
    }

    fn faces_guarded(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let mut all: BTreeSet<VertexSet> = BTreeSet::new();
        for facet in &self.facets {
            let members: Vec<usize> = facet.iter().copied().collect();
            for mask in 1u64..(1u64 << members.len()) {
                let face: VertexSet = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(face);
                if all.len() > limit {
                    return Err(Error::ResourceGuard {
                        what: "face enumeration",
                        limit,
                        actual: all.len(),
                    });
                }
            }
        }
        let mut faces: Vec<VertexSet> = all.into_iter().collect();
        faces.sort_by(face_order);
        Ok(faces)
    }

    /// The non-comparability graph on the non-empty faces: two faces are
    /// adjacent iff neither contains the other. Also returns the face-vertex
    /// bijection and the dimension-level clique cover (faces of equal
    /// dimension are pairwise incomparable), which is a basic clique cover
    /// of the derived graph.
    pub fn noncomparability_graph(
        &self,
    ) -> Result<(Graph, FaceVertexMap, BasicCliqueCover)> {
        self.noncomparability_graph_guarded(FACE_GUARD)
    }

    pub fn noncomparability_graph_guarded(
        &self,
        max_faces: usize,
    ) -> Result<(Graph, FaceVertexMap, BasicCliqueCover)> {
        let faces = self.faces_guarded(max_faces)?;
        let mut g = Graph::new(faces.len());
        for i in 0..faces.len() {
            for j in (i + 1)..faces.len() {
                if !faces[i].is_subset(&faces[j]) && !faces[j].is_subset(&faces[i]) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        let mut levels: Vec<VertexSet> = Vec::new();
        match self.dimension() {
            None => {}
            Some(dim) => {
                levels.resize(dim + 1, VertexSet::new());
                for (i, face) in faces.iter().enumerate() {
                    levels[face.len() - 1].insert(i);
                }
            }
        }
        let cover = BasicCliqueCover {
            cliques: levels,
        };
        Ok((g, FaceVertexMap { faces }, cover))
    }

    /// The independence complex of a graph: facets are exactly the maximal
    /// independent sets.
    pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
        let facets = g.maximal_independent_sets()?;
        // Maximal independent sets already cover every vertex and form an
        // antichain; n = 0 gives the single empty facet, dropped here.
        let facets = facets.into_iter().filter(|f| !f.is_empty()).collect();
        SimplicialComplex::from_facets(g.n(), facets)
    }
}

/// (dimension, lexicographic) order on faces.
fn face_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
}
