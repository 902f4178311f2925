//! Encoder/decoder for the graph6 interchange format, single-byte size
//! form only (n <= 62).

use wellcover::{Error, Graph, Result};

const OFFSET: u8 = 63;
const MAX_N: usize = 62;

/// Column-major upper-triangle pair order: (0,1), (0,2), (1,2), (0,3), ...
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::InvalidInput(format!(
            "graph6 single-byte form supports at most {MAX_N} vertices, got {n}"
        )));
    }
    let mut out = vec![OFFSET + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in pairs(n) {
        acc = (acc << 1) | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(OFFSET + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).unwrap())
}

pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    let (&first, payload) = bytes
        .split_first()
        .ok_or_else(|| Error::InvalidInput("empty graph6 string".into()))?;
    if first == 126 {
        return Err(Error::InvalidInput(
            "multi-byte graph6 size forms are not supported".into(),
        ));
    }
    if !(OFFSET..=OFFSET + MAX_N as u8).contains(&first) {
        return Err(Error::InvalidInput(format!(
            "invalid graph6 size byte {first}"
        )));
    }
    let n = (first - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if payload.len() != needed {
        return Err(Error::InvalidInput(format!(
            "graph6 payload for n={n} needs {needed} bytes, got {}",
            payload.len()
        )));
    }
    for &b in payload {
        if !(OFFSET..OFFSET + 64).contains(&b) {
            return Err(Error::InvalidInput(format!(
                "graph6 payload byte {b} out of range"
            )));
        }
    }
    let bit = |i: usize| (payload[i / 6] - OFFSET) >> (5 - i % 6) & 1 == 1;
    let mut g = Graph::new(n);
    for (i, (u, v)) in pairs(n).enumerate() {
        if bit(i) {
            g.add_edge(u, v)?;
        }
    }
    // Padding bits past the triangle must be zero.
    for i in bits..needed * 6 {
        if bit(i) {
            return Err(Error::InvalidInput(
                "nonzero padding bits in graph6 payload".into(),
            ));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wellcover::graph::fixtures;

    #[test]
    fn fixed_strings() {
        let k1 = decode("@").unwrap();
        assert_eq!((k1.n(), k1.edges().len()), (1, 0));

        let k4 = decode("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edges().len(), 6);

        let c4 = decode("Cl").unwrap();
        assert_eq!(c4, fixtures::cycle(4));

        assert_eq!(encode(&fixtures::complete(4)).unwrap(), "C~");
        assert_eq!(encode(&fixtures::cycle(4)).unwrap(), "Cl");
        assert_eq!(encode(&Graph::new(1)).unwrap(), "@");
    }

    #[test]
    fn round_trip_assorted() {
        for g in [
            Graph::new(0),
            fixtures::cycle(7),
            fixtures::path(10),
            fixtures::complete(9),
            fixtures::complete_multipartite(&[2, 2, 2]),
            fixtures::six_vertex_tripartite(),
        ] {
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("~~").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C ").is_err());
        // C5 payload uses 10 bits; flip a padding bit.
        assert!(decode("Dd?").is_ok());
        assert!(decode("Dd@").is_err());
    }
}
