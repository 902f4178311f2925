//! Text formats for graphs, complexes, covers, parts, and linear forms.

use num_rational::Rational64;
use wellcover::edge_ring::LinearForm;
use wellcover::{CliqueCover, Error, Graph, Result, SimplicialComplex, VertexSet};

/// Non-comment, non-blank lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("line {line}: {msg}"))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| bad(line, format_args!("expected a non-negative integer, got {tok:?}")))
}

fn parse_vertex_line(line: usize, text: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for tok in text.split_whitespace() {
        let v = parse_usize(line, tok)?;
        if !set.insert(v) {
            return Err(bad(line, format_args!("repeated vertex {v}")));
        }
    }
    Ok(set)
}

/// Edgelist: first line `n m`, then m lines `u v`.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty edgelist input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(bad(ln, "expected header `n m`"));
    };
    let (n, m) = (parse_usize(ln, n)?, parse_usize(ln, m)?);
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(bad(ln, "expected an edge line `u v`"));
        };
        seen += 1;
        if seen > m {
            return Err(bad(ln, format_args!("more than the declared {m} edges")));
        }
        g.add_edge(parse_usize(ln, u)?, parse_usize(ln, v)?)
            .map_err(|e| bad(ln, e))?;
    }
    if seen < m {
        return Err(Error::InvalidInput(format!(
            "declared {m} edges but found {seen}"
        )));
    }
    Ok(g)
}

pub fn render_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Facets: first line `n`, then one facet per line.
pub fn parse_facets(text: &str, strict: bool) -> Result<SimplicialComplex> {
    let mut lines = data_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty facet input".into()))?;
    if header.split_whitespace().count() != 1 {
        return Err(bad(ln, "expected header line `n`"));
    }
    let n = parse_usize(ln, header)?;
    let mut facets = Vec::new();
    for (ln, line) in lines {
        let f = parse_vertex_line(ln, line)?;
        if f.is_empty() {
            return Err(bad(ln, "empty facet"));
        }
        facets.push(f);
    }
    if strict {
        SimplicialComplex::from_facets_strict(n, facets)
    } else {
        SimplicialComplex::from_facets(n, facets)
    }
}

/// Cover / parts file: one set of vertices per line.
pub fn parse_vertex_sets(text: &str) -> Result<Vec<VertexSet>> {
    let mut sets = Vec::new();
    for (ln, line) in data_lines(text) {
        let s = parse_vertex_line(ln, line)?;
        if s.is_empty() {
            return Err(bad(ln, "empty set"));
        }
        sets.push(s);
    }
    Ok(sets)
}

pub fn parse_cover(text: &str) -> Result<CliqueCover> {
    Ok(CliqueCover {
        cliques: parse_vertex_sets(text)?,
    })
}

/// Linear forms such as `x3+x7` or `2*x1-1/3*x4`: signed terms, each an
/// optional rational coefficient times one variable. No spaces.
pub fn parse_linear_form(expr: &str) -> Result<LinearForm> {
    let expr = expr.trim();
    if expr.is_empty() {
        return Err(Error::InvalidInput("empty linear form".into()));
    }
    if expr.chars().any(char::is_whitespace) {
        return Err(Error::InvalidInput(
            "linear forms must not contain spaces".into(),
        ));
    }
    let mut terms = Vec::new();
    let mut rest = expr;
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'-' => {
                rest = &rest[1..];
                -1
            }
            b'+' => {
                rest = &rest[1..];
                1
            }
            _ if first => 1,
            _ => return Err(Error::InvalidInput(format!("expected + or - at {rest:?}"))),
        };
        first = false;
        let end = rest
            .find(['+', '-'])
            .unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coef, var) = match term.split_once('*') {
            Some((c, v)) => (parse_rational(c)?, v),
            None => (Rational64::from_integer(1), term),
        };
        let v = var
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::InvalidInput(format!("expected a variable like x3, got {term:?}"))
            })?;
        terms.push((v, coef * sign));
    }
    Ok(LinearForm::new(terms))
}

fn parse_rational(text: &str) -> Result<Rational64> {
    let make = |num: &str, den: i64| -> Result<Rational64> {
        let num: i64 = num
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad coefficient {text:?}")))?;
        if den == 0 {
            return Err(Error::InvalidInput(format!("zero denominator in {text:?}")));
        }
        Ok(Rational64::new(num, den))
    };
    match text.split_once('/') {
        None => make(text, 1),
        Some((num, den)) => {
            let den: i64 = den
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {text:?}")))?;
            make(num, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wellcover::graph::fixtures;

    #[test]
    fn edgelist_happy_path() {
        let g = parse_edgelist("# C4\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, fixtures::cycle(4));
    }

    #[test]
    fn edgelist_rejections() {
        for (text, needle) in [
            ("2 1\n0 0", "loop"),
            ("3 2\n0 1\n0 1", "duplicate"),
            ("3 1\n0 5", "out of range"),
            ("3 1\n0", "edge line"),
            ("3 2\n0 1", "declared 2 edges but found 1"),
            ("3 1\n0 1\n1 2", "more than the declared"),
            ("nope", "header"),
            ("", "empty"),
        ] {
            let err = parse_edgelist(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} -> {err}");
        }
    }

    #[test]
    fn facets_and_covers() {
        let delta = parse_facets("3\n0 1\n2\n", false).unwrap();
        assert_eq!(
            delta.facets(),
            &[VertexSet::from([2]), VertexSet::from([0, 1])]
        );
        let cover = parse_cover("0 1\n2 3\n").unwrap();
        assert_eq!(cover.cliques.len(), 2);
        assert!(parse_cover("0 0\n").is_err());
        assert!(parse_facets("2\n0 x\n", false).is_err());
    }

    #[test]
    fn linear_forms() {
        let f = parse_linear_form("x3+x7").unwrap();
        assert_eq!(f.support(), VertexSet::from([3, 7]));
        let f = parse_linear_form("2*x1-1/3*x4").unwrap();
        assert_eq!(f.coefficient(1), Some(Rational64::from_integer(2)));
        assert_eq!(f.coefficient(4), Some(Rational64::new(-1, 3)));
        assert_eq!(parse_linear_form("-x2").unwrap().support(), VertexSet::from([2]));
        assert!(parse_linear_form("x1 + x2").is_err());
        assert!(parse_linear_form("3*y1").is_err());
        assert!(parse_linear_form("1/0*x1").is_err());
        assert!(parse_linear_form("").is_err());
        // x1 - x1 collapses to the zero form.
        assert!(parse_linear_form("x1-x1").unwrap().is_zero());
    }
}
