//! graph6 encoding and decoding.
//!
//! Bit-exact per the format standard: a vertex-count header (one byte
//! `63+n` for `n <= 62`, `~` plus three bytes for `n <= 258047`, `~~`
//! plus six bytes above that), then the upper adjacency triangle in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
//! printable character (offset 63, most significant bit first, zero
//! padding in the trailing low bits).

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated header at byte {offset}")]
    TruncatedHeader { offset: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: u64, max: u64 },
    #[error("body too short: expected {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("byte {offset}: trailing padding bits are not zero")]
    NonzeroPadding { offset: usize },
    #[error("byte {offset}: trailing data after the encoded graph")]
    TrailingData { offset: usize },
    #[error("writing requires n <= {max}, graph has {n} vertices")]
    TooLargeToWrite { n: usize, max: usize },
}

/// Practical ceiling for decoded graphs: the dense adjacency matrix must
/// stay at desk scale.
const MAX_DECODE_N: u64 = 100_000;

fn char_value(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::TruncatedHeader { offset }),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Graph6Error::InvalidChar { offset, byte: b }),
    }
}

/// Parses one graph6 token into a graph.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    // Header.
    let (n, body_start) = if bytes[0] != b'~' {
        (char_value(bytes, 0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | char_value(bytes, i)?;
        }
        (n, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | char_value(bytes, i)?;
        }
        (n, 8)
    };
    if n > MAX_DECODE_N {
        return Err(Graph6Error::TooManyVertices { n, max: MAX_DECODE_N });
    }
    let n = n as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[body_start.min(bytes.len())..];
    if body.len() < nchars {
        return Err(Graph6Error::Truncated {
            expected: nchars,
            found: body.len(),
        });
    }
    if body.len() > nchars {
        return Err(Graph6Error::TrailingData {
            offset: body_start + nchars,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let ci = bit / 6;
            let val = char_value(bytes, body_start + ci)?;
            if (val >> (5 - (bit % 6))) & 1 == 1 {
                g = g.add_edge(u, v).expect("distinct in-range endpoints");
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // Remaining bits of the last character must be zero padding.
    if nbits % 6 != 0 {
        let val = char_value(bytes, body_start + nchars - 1)?;
        let pad_bits = 6 - (nbits % 6);
        if val & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: body_start + nchars - 1,
            });
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 token (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        // 36-bit form; unreachable for decodable graphs but kept total.
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, Graph};

    #[test]
    fn known_encodings() {
        // K_2.
        assert_eq!(write_graph6(&complete(2)), "A_");
        assert_eq!(parse_graph6("A_").unwrap().edges(), vec![(0, 1)]);
        // K_1.
        assert_eq!(write_graph6(&complete(1)), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        // Empty graph on 5 vertices.
        let e5 = parse_graph6("D??").unwrap();
        assert_eq!((e5.n(), e5.m()), (5, 0));
        assert_eq!(write_graph6(&Graph::empty(5)), "D??");
        // Path 0-2-1: x(0,1)=0, x(0,2)=1, x(1,2)=1 packs to 'BW'.
        let bw = parse_graph6("BW").unwrap();
        assert_eq!(bw.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(write_graph6(&bw), "BW");
    }

    #[test]
    fn round_trip_structures() {
        for g in [
            path(1),
            path(7),
            complete(5),
            crate::graph::cycle(6),
            crate::graph::star(5),
            Graph::empty(0),
            Graph::from_edges(9, &[(0, 8), (3, 5), (2, 7), (1, 4)]),
        ] {
            let s = write_graph6(&g);
            let h = parse_graph6(&s).unwrap();
            assert_eq!(h.n(), g.n());
            assert_eq!(h.edges(), g.edges());
        }
    }

    #[test]
    fn long_header_round_trip() {
        let g = path(100);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        let h = parse_graph6(&s).unwrap();
        assert_eq!(h.n(), 100);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        // Space (0x20) is outside the printable graph6 range.
        assert_eq!(
            parse_graph6(" A"),
            Err(Graph6Error::InvalidChar { offset: 0, byte: 0x20 })
        );
        assert_eq!(
            parse_graph6("B "),
            Err(Graph6Error::InvalidChar { offset: 1, byte: 0x20 })
        );
        // n=3 needs one body char.
        assert_eq!(parse_graph6("B"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        // n=3 with two body chars.
        assert_eq!(parse_graph6("BWW"), Err(Graph6Error::TrailingData { offset: 2 }));
        // Truncated long header.
        assert_eq!(parse_graph6("~A"), Err(Graph6Error::TruncatedHeader { offset: 2 }));
        // K_2 body with a nonzero bit inside the 5 padding bits:
        // '_' is 100000; '`' is 100001 (low padding bit set).
        assert_eq!(parse_graph6("A_").unwrap().m(), 1);
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        // n=4 uses 6 bits, no padding: all 63 values valid there.
        assert!(parse_graph6("C~").is_ok());
    }

    #[test]
    fn newline_tolerated() {
        assert_eq!(parse_graph6("A_\n").unwrap().m(), 1);
        assert_eq!(parse_graph6("A_\r\n").unwrap().m(), 1);
    }
}
