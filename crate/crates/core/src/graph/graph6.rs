//! graph6 encoding for graphs on at most 16 vertices.
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
//! byte, most significant bit first, each byte offset by 63.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: invalid graph6 character 0x{byte:02x}")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: vertex count {n} outside 1..={MAX_VERTICES}")]
    VertexCount { offset: usize, n: usize },
    #[error("byte {offset}: bit field truncated, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after {expected} data bytes")]
    Trailing { offset: usize, expected: usize },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
}

const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 line. A leading `>>graph6<<` marker and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = body.trim_end().as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                offset: skip + i,
                byte: b,
            });
        }
    }
    // 126 introduces the multi-byte size forms, which only encode n >= 63
    let n = (first - 63) as usize;
    if first == 126 || n == 0 || n > MAX_VERTICES {
        let n = if first == 126 { 63 } else { n };
        return Err(Graph6Error::VertexCount { offset: skip, n });
    }
    let expected = data_len(n);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: skip + bytes.len(),
            expected,
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::Trailing {
            offset: skip + 1 + expected,
            expected,
        });
    }

    let mut g = Graph::empty(n).expect("n checked above");
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = data[bit / 6] - 63;
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if last & mask != 0 {
            return Err(Graph6Error::Padding {
                offset: skip + 1 + bit / 6,
            });
        }
    }
    Ok(g)
}

/// Encode `g` under its current labeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.p();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_nontrivial() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(write_graph6(&g), "A_");
    }

    #[test]
    fn triangle_by_hand() {
        // n=3 -> 'B'; bits x01 x02 x12 = 111, padded 111000 = 56 -> 'w'
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.p(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(write_graph6(&c3), "Bw");
    }

    #[test]
    fn single_vertex_and_header() {
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().g(), 3);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("?"),
            Err(Graph6Error::VertexCount { offset: 0, n: 0 })
        );
        assert_eq!(
            parse_graph6("Q"),
            Err(Graph6Error::VertexCount { offset: 0, n: 18 })
        );
        assert_eq!(
            parse_graph6("~?@A"),
            Err(Graph6Error::VertexCount { offset: 0, n: 63 })
        );
        // n=5 needs ceil(10/6)=2 data bytes
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::Truncated {
                offset: 2,
                expected: 2
            })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(Graph6Error::Trailing {
                offset: 2,
                expected: 1
            })
        );
        assert_eq!(
            parse_graph6("B!"),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: 0x21
            })
        );
        // 'x' = 57 = 111001: last padding bit set
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::Padding { offset: 1 }));
    }
}
