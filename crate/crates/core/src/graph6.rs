//! graph6 encoding of undirected graphs.
//!
//! Layout: a size prefix followed by the upper triangle of the adjacency
//! matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte with 63 added. Sizes up to 62 use one prefix byte, up to
//! 258047 use `~` plus three bytes, and anything larger `~~` plus six.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!(
            "byte 0x{b:02x} outside the printable range 63..=126"
        )))
    }
}

fn decode_size(data: &[u8]) -> Result<(usize, usize)> {
    let first = *data
        .first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first != 126 {
        return Ok((sextet(first)? as usize, 1));
    }
    let (width, start) = if data.get(1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    let digits = data
        .get(start..start + width)
        .ok_or_else(|| Error::Graph6("truncated length prefix".into()))?;
    let mut n = 0usize;
    for &b in digits {
        n = (n << 6) | sextet(b)? as usize;
    }
    Ok((n, start + width))
}

/// Decodes one graph6 string. An optional `>>graph6<<` header is accepted;
/// anything after the last data byte (including whitespace) is rejected.
/// Padding bits are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let data = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, offset) = decode_size(data)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &data[offset..];
    if body.len() < body_len {
        return Err(Error::Graph6(format!(
            "expected {body_len} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if body.len() > body_len {
        return Err(Error::Graph6(format!(
            "{} trailing byte(s) after the data",
            body.len() - body_len
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    // Bytes that only hold padding still have to be printable.
    for &b in body {
        sextet(b)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_named, random_graph};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hand_encoded_examples() {
        let k2 = build_named("complete", &[2]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(parse_graph6(b"A_").unwrap(), k2);

        let e3 = Graph::empty(3);
        assert_eq!(to_graph6(&e3), "B?");
        assert_eq!(parse_graph6(b"B?").unwrap(), e3);

        // Edges 0-2, 0-4, 1-3, 3-4: bits 0100101001 -> 010010 100100.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");

        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6(b"?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6(b"").is_err());
        assert!(parse_graph6(b"A").is_err());
        assert!(parse_graph6(b"A_?").is_err());
        assert!(parse_graph6(b"A_\n").is_err());
        assert!(parse_graph6(b"A\x7f").is_err());
        assert!(parse_graph6(b"\x10").is_err());
        assert!(parse_graph6(b"~??").is_err());
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(parse_graph6(b">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn long_form_sizes() {
        let g = build_grid(9, 7).unwrap(); // 63 vertices
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);

        let big = build_named("cycle", &[300]).unwrap();
        assert_eq!(parse_graph6(to_graph6(&big).as_bytes()).unwrap(), big);

        let mut huge = Vec::new();
        encode_size(300_000, &mut huge);
        assert_eq!(huge.len(), 8);
        assert_eq!(decode_size(&huge).unwrap(), (300_000, 8));
    }

    #[test]
    fn roundtrip_1000_random_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let n = rand::Rng::gen_range(&mut rng, 0..=12);
            let p = rand::Rng::gen_range(&mut rng, 0.0..=1.0);
            let g = random_graph(n, p, &mut rng);
            assert_eq!(parse_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn roundtrip_property(n in 0usize..80, p in 0.0f64..1.0, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng);
            let s = to_graph6(&g);
            prop_assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
    }
}
