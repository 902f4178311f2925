//! Square-free monomial algebra over the edge ideal of a graph.
//!
//! The edge ring is the polynomial ring modulo the ideal generated by
//! x_i x_j for every edge {i, j}. A square-free monomial is zero in the
//! ring iff its support contains an edge; a linear form is a zero-divisor
//! iff some nonzero square-free monomial annihilates it, and that witness
//! is exactly an independent set dominating the form's support from
//! outside. The field of coefficients never needs to be materialized:
//! distinct square-free monomials cannot cancel, so the criterion depends
//! only on supports. Coefficients are kept as exact rationals for display.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::cover::{validate_basic_cover, BasicCliqueCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::wellcovered::external_independent_dominating_set;

/// A square-free monomial, identified with its support; exponents are all
/// one and the monomial 1 has empty support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareFreeMonomial {
    pub support: VertexSet,
}

impl SquareFreeMonomial {
    pub fn one() -> Self {
        SquareFreeMonomial {
            support: VertexSet::new(),
        }
    }

    pub fn from_support(support: VertexSet) -> Self {
        SquareFreeMonomial { support }
    }

    /// Square-free part of the product with a single variable.
    pub fn times_variable(&self, j: usize) -> SquareFreeMonomial {
        let mut support = self.support.clone();
        support.insert(j);
        SquareFreeMonomial { support }
    }
}

impl fmt::Display for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.support.iter().map(|v| format!("x{v}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The edge ideal: one degree-2 square-free generator per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIdeal {
    pub generators: Vec<(usize, usize)>,
}

/// The edge ring R(G) = K[x_0..x_{n-1}] / I(G).
#[derive(Debug, Clone)]
pub struct EdgeRing {
    graph: Graph,
    ideal: EdgeIdeal,
}

/// A linear form with nonzero rational coefficients; zero-coefficient
/// members are removed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    terms: BTreeMap<usize, Rational64>,
}

impl LinearForm {
    pub fn new(terms: impl IntoIterator<Item = (usize, Rational64)>) -> LinearForm {
        let mut map: BTreeMap<usize, Rational64> = BTreeMap::new();
        for (v, c) in terms {
            let entry = map.entry(v).or_insert_with(|| Rational64::from_integer(0));
            *entry += c;
        }
        map.retain(|_, c| *c != Rational64::from_integer(0));
        LinearForm { terms: map }
    }

    pub fn support(&self) -> VertexSet {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, v: usize) -> Option<Rational64> {
        self.terms.get(&v).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&v, &c) in &self.terms {
            let mag = if c < Rational64::from_integer(0) { -c } else { c };
            if first {
                if c < Rational64::from_integer(0) {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < Rational64::from_integer(0) {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if mag != Rational64::from_integer(1) {
                write!(f, "{mag}*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn edge_ideal(g: &Graph) -> EdgeIdeal {
    EdgeIdeal {
        generators: g.edges(),
    }
}

pub fn edge_ring(g: &Graph) -> EdgeRing {
    EdgeRing {
        ideal: edge_ideal(g),
        graph: g.clone(),
    }
}

impl EdgeRing {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ideal(&self) -> &EdgeIdeal {
        &self.ideal
    }

    /// A square-free monomial is zero in R(G) iff its support contains an
    /// edge, i.e. iff the support is not independent.
    pub fn monomial_is_zero(&self, m: &SquareFreeMonomial) -> Result<bool> {
        Ok(!self.graph.is_independent(&m.support)?)
    }

    /// Minimal primes of the edge ideal, generated by variable sets: exactly
    /// the minimal vertex covers of the graph.
    pub fn minimal_primes(&self) -> Result<Vec<VertexSet>> {
        self.graph.minimal_vertex_covers()
    }

    pub fn minimal_primes_guarded(&self, max_n: usize) -> Result<Vec<VertexSet>> {
        self.graph.minimal_vertex_covers_guarded(max_n)
    }

    /// A nonzero square-free monomial m with m*f = 0 in R(G), if one exists.
    ///
    /// m*f = sum_j a_j * x_j * m vanishes iff every x_j * m lies in the
    /// ideal, which holds iff supp(m) is an independent set, disjoint from
    /// supp(f), whose neighborhood covers supp(f). The returned witness has
    /// minimum support cardinality; its validity is re-verified by direct
    /// multiplication semantics before returning.
    pub fn linear_zero_divisor(&self, f: &LinearForm) -> Result<Option<SquareFreeMonomial>> {
        if f.is_zero() {
            return Err(Error::Precondition("zero linear form".into()));
        }
        let support = f.support();
        let (witness, _) = external_independent_dominating_set(&self.graph, &support)?;
        let m = match witness {
            None => return Ok(None),
            Some(a) => SquareFreeMonomial::from_support(a),
        };
        // Independent re-validation of the certificate.
        if self.monomial_is_zero(&m)? {
            return Err(Error::Precondition(format!(
                "internal error: witness {m} is zero in the ring"
            )));
        }
        for &j in &support {
            if !self.monomial_is_zero(&m.times_variable(j))? {
                return Err(Error::Precondition(format!(
                    "internal error: witness {m} does not annihilate x{j}"
                )));
            }
        }
        Ok(Some(m))
    }
}

/// The linear form summing the variables of a cover clique, all
/// coefficients one.
pub fn theta(q: &VertexSet) -> Result<LinearForm> {
    if q.is_empty() {
        return Err(Error::InvalidInput("empty clique for theta".into()));
    }
    Ok(LinearForm::new(
        q.iter().map(|&v| (v, Rational64::from_integer(1))),
    ))
}

/// Per-theta certificate of [`wellcovered_via_zero_divisors`].
#[derive(Debug, Clone, Serialize)]
pub struct ThetaCertificate {
    pub clique: VertexSet,
    pub theta: LinearForm,
    /// A monomial annihilating theta, when theta is a zero-divisor.
    pub witness: Option<SquareFreeMonomial>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroDivisorVerdict {
    pub well_covered: bool,
    pub alpha: usize,
    pub per_theta: Vec<ThetaCertificate>,
}

/// The algebraic route: G is well-covered iff no theta form of the basic
/// cover is a zero-divisor in R(G). Must agree with
/// [`crate::wellcovered::check_well_covered`] on every input.
pub fn wellcovered_via_zero_divisors(
    g: &Graph,
    cover: &BasicCliqueCover,
) -> Result<ZeroDivisorVerdict> {
    let report = validate_basic_cover(g, cover)?;
    if !report.valid {
        return Err(Error::Precondition(format!(
            "invalid basic clique cover: {}",
            report.violations.join("; ")
        )));
    }
    let ring = edge_ring(g);
    let mut per_theta = Vec::with_capacity(cover.cliques.len());
    let mut well_covered = true;
    for q in &cover.cliques {
        let form = theta(q)?;
        let witness = ring.linear_zero_divisor(&form)?;
        well_covered &= witness.is_none();
        per_theta.push(ThetaCertificate {
            clique: q.clone(),
            theta: form,
            witness,
        });
    }
    Ok(ZeroDivisorVerdict {
        well_covered,
        alpha: cover.cliques.len(),
        per_theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::find_basic_clique_cover;
    use crate::graph::fixtures::*;

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn edge_ideal_generators() {
        assert_eq!(edge_ideal(&path(3)).generators, vec![(0, 1), (1, 2)]);
        assert_eq!(edge_ideal(&Graph::new(3)).generators, vec![]);
        assert_eq!(edge_ideal(&complete(3)).generators.len(), 3);
    }

    #[test]
    fn monomial_zero_tests() {
        let r = edge_ring(&path(3));
        assert!(!r
            .monomial_is_zero(&SquareFreeMonomial::from_support(vs(&[0, 2])))
            .unwrap());
        assert!(r
            .monomial_is_zero(&SquareFreeMonomial::from_support(vs(&[0, 1])))
            .unwrap());
        assert!(!r.monomial_is_zero(&SquareFreeMonomial::one()).unwrap());
    }

    #[test]
    fn theta_construction_and_display() {
        assert_eq!(theta(&vs(&[0, 1])).unwrap().to_string(), "x0+x1");
        assert_eq!(theta(&vs(&[2])).unwrap().to_string(), "x2");
        assert_eq!(theta(&vs(&[0, 1, 2])).unwrap().to_string(), "x0+x1+x2");
        assert!(theta(&vs(&[])).is_err());
    }

    #[test]
    fn linear_form_display_and_zero_coefficients() {
        let f = LinearForm::new([
            (1, Rational64::from_integer(2)),
            (4, Rational64::new(-1, 3)),
        ]);
        assert_eq!(f.to_string(), "2*x1-1/3*x4");
        let z = LinearForm::new([
            (0, Rational64::from_integer(1)),
            (0, Rational64::from_integer(-1)),
        ]);
        assert!(z.is_zero());
    }

    #[test]
    fn zero_divisor_examples() {
        let r = edge_ring(&path(3));
        let f = theta(&vs(&[2])).unwrap();
        assert_eq!(
            r.linear_zero_divisor(&f).unwrap(),
            Some(SquareFreeMonomial::from_support(vs(&[1])))
        );

        let r = edge_ring(&cycle(4));
        let f = theta(&vs(&[0, 1])).unwrap();
        assert_eq!(r.linear_zero_divisor(&f).unwrap(), None);

        // Isolated vertex in the support: no neighbor can ever exist.
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        let r = edge_ring(&g);
        let f = theta(&vs(&[2])).unwrap();
        assert_eq!(r.linear_zero_divisor(&f).unwrap(), None);

        assert!(r.linear_zero_divisor(&LinearForm::new([])).is_err());
    }

    #[test]
    fn minimal_primes_are_minimal_vertex_covers() {
        let r = edge_ring(&path(3));
        assert_eq!(r.minimal_primes().unwrap(), vec![vs(&[1]), vs(&[0, 2])]);
        let r = edge_ring(&cycle(4));
        assert_eq!(r.minimal_primes().unwrap(), vec![vs(&[1, 3]), vs(&[0, 2])]);
        let r = edge_ring(&path(2));
        assert_eq!(r.minimal_primes().unwrap(), vec![vs(&[1]), vs(&[0])]);
    }

    #[test]
    fn zero_divisor_route_examples() {
        let p3 = path(3);
        let cover = find_basic_clique_cover(&p3).unwrap().unwrap();
        let v = wellcovered_via_zero_divisors(&p3, &cover).unwrap();
        assert!(!v.well_covered);

        let c4 = cycle(4);
        let cover = find_basic_clique_cover(&c4).unwrap().unwrap();
        let v = wellcovered_via_zero_divisors(&c4, &cover).unwrap();
        assert!(v.well_covered);

        let octa = complete_multipartite(&[2, 2, 2]);
        let cover = find_basic_clique_cover(&octa).unwrap().unwrap();
        let v = wellcovered_via_zero_divisors(&octa, &cover).unwrap();
        assert!(v.well_covered);
    }

    #[test]
    fn coefficient_choice_does_not_matter() {
        let r = edge_ring(&path(3));
        let a = LinearForm::new([(2, Rational64::from_integer(1))]);
        let b = LinearForm::new([(2, Rational64::new(-7, 3))]);
        assert_eq!(
            r.linear_zero_divisor(&a).unwrap().is_some(),
            r.linear_zero_divisor(&b).unwrap().is_some()
        );
    }
}
