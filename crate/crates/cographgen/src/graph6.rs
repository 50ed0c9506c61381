//! Encoder and strict decoder for the graph6 interchange format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, read column by
//! column, into printable ASCII: six bits per byte, each byte offset by 63.
//! A size word comes first: a single byte for up to 62 vertices, or `~`
//! followed by three bytes carrying an 18-bit count for up to 258047.
//!
//! The decoder accepts exactly the encoder's output: a canonical size word,
//! no trailing bytes, and zeroed padding bits. Every accepted string
//! re-encodes to itself.

use thiserror::Error;

use crate::graph::SimpleGraph;

/// Largest vertex count the three-byte size word can carry. Larger graphs
/// need the eight-byte size word, which this codec does not emit.
pub const MAX_VERTICES: usize = 258_047;

/// Decode or encode failure, with byte offsets where they exist.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    /// The graph exceeds [`MAX_VERTICES`].
    #[error("graphs over {MAX_VERTICES} vertices are not supported")]
    TooLarge,
    /// Input ended before the encoded bits did.
    #[error("input ended before the encoded bits")]
    Truncated,
    /// A byte outside the printable graph6 range `63..=126`.
    #[error("invalid byte {byte:#04x} at offset {at}")]
    InvalidByte {
        /// Offset of the offending byte.
        at: usize,
        /// The byte found there.
        byte: u8,
    },
    /// Bytes remained after the encoded bits.
    #[error("trailing data at offset {at}")]
    TrailingData {
        /// Offset where the extra bytes start.
        at: usize,
    },
    /// Unused bits in the last byte were not zero.
    #[error("nonzero padding bits")]
    DirtyPadding,
    /// A long size word encoded a count that fits the short form.
    #[error("size word uses the long form for a small graph")]
    NonCanonicalSize,
}

/// Encodes a graph as a graph6 string.
pub fn encode(graph: &SimpleGraph) -> Result<String, Graph6Error> {
    let n = graph.vertex_count();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge);
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut chunk = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(graph.has_edge(i as u32, j as u32));
            used += 1;
            if used == 6 {
                out.push(63 + chunk);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (chunk << (6 - used)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Decodes a graph6 string; the inverse of [`encode`] on its image.
pub fn decode(bytes: &[u8]) -> Result<SimpleGraph, Graph6Error> {
    let (n, data_start) = match bytes.first() {
        None => return Err(Graph6Error::Truncated),
        Some(&b @ 63..=125) => ((b - 63) as usize, 1),
        Some(126) => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // The eight-byte size word marks counts past MAX_VERTICES.
                return Err(Graph6Error::TooLarge);
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::Truncated);
            }
            let mut n = 0usize;
            for (k, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error::InvalidByte { at: 1 + k, byte: b });
                }
                n = (n << 6) | (b - 63) as usize;
            }
            if n <= 62 {
                return Err(Graph6Error::NonCanonicalSize);
            }
            (n, 4)
        }
        Some(&b) => return Err(Graph6Error::InvalidByte { at: 0, byte: b }),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < data_start + nbytes {
        return Err(Graph6Error::Truncated);
    }
    if bytes.len() > data_start + nbytes {
        return Err(Graph6Error::TrailingData {
            at: data_start + nbytes,
        });
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for (k, &b) in bytes[data_start..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                at: data_start + k,
                byte: b,
            });
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            bits.push((chunk >> shift) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&bit| bit) {
        return Err(Graph6Error::DirtyPadding);
    }
    let mut graph = SimpleGraph::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                graph.add_edge(i as u32, j as u32);
            }
            idx += 1;
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::Cotree;
    use crate::graph::RootType;

    fn graph(edges: &[(u32, u32)], n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[test]
    fn known_small_encodings() {
        // Reference strings produced by an established graph6 writer.
        assert_eq!(encode(&graph(&[], 1)).unwrap(), "@");
        assert_eq!(encode(&graph(&[(0, 1)], 2)).unwrap(), "A_");
        assert_eq!(encode(&graph(&[], 2)).unwrap(), "A?");
        assert_eq!(encode(&graph(&[(0, 1)], 3)).unwrap(), "B_");
        assert_eq!(encode(&graph(&[(0, 1), (0, 2), (1, 2)], 3)).unwrap(), "Bw");
        assert_eq!(
            encode(&graph(&[(0, 1), (1, 2), (2, 3)], 4)).unwrap(),
            "Ch"
        );
        assert_eq!(
            encode(&graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4)).unwrap(),
            "C~"
        );
        assert_eq!(
            encode(&graph(&[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], 5)).unwrap(),
            "Dhc"
        );
        assert_eq!(encode(&graph(&[], 0)).unwrap(), "?");
    }

    #[test]
    fn tree_outputs_encode_bit_exactly() {
        let t = Cotree::parse("(1 1 (1 1))").unwrap();
        let join = SimpleGraph::from_cotree(&t, RootType::Join);
        // The complete graph on four vertices minus the edge {2, 3}.
        assert_eq!(encode(&join).unwrap(), "C}");
        let union = SimpleGraph::from_cotree(&t, RootType::Union);
        assert_eq!(encode(&union).unwrap(), "C@");
    }

    #[test]
    fn long_size_word_kicks_in_past_62() {
        let empty63 = encode(&graph(&[], 63)).unwrap();
        assert!(empty63.starts_with("~??~"));
        assert_eq!(empty63.len(), 4 + 63 * 62 / 2 / 6 + 1);
        let back = decode(empty63.as_bytes()).unwrap();
        assert_eq!(back.vertex_count(), 63);
        assert_eq!(back.edge_count(), 0);
    }

    #[test]
    fn decode_inverts_encode() {
        let samples = [
            graph(&[], 1),
            graph(&[(0, 1)], 2),
            graph(&[(0, 1), (1, 2), (2, 3)], 4),
            graph(&[(0, 3), (1, 4), (2, 5), (0, 1)], 7),
            graph(&[(0, 99), (50, 98)], 100),
        ];
        for g in &samples {
            let text = encode(g).unwrap();
            assert_eq!(&decode(text.as_bytes()).unwrap(), g);
        }
    }

    #[test]
    fn decode_rejects_damaged_input() {
        assert_eq!(decode(b""), Err(Graph6Error::Truncated));
        assert_eq!(decode(b"C"), Err(Graph6Error::Truncated));
        assert_eq!(decode(b"ChX"), Err(Graph6Error::TrailingData { at: 2 }));
        assert_eq!(
            decode(b"A\x1f"),
            Err(Graph6Error::InvalidByte { at: 1, byte: 0x1f })
        );
        assert_eq!(
            decode(b"\x00_"),
            Err(Graph6Error::InvalidByte { at: 0, byte: 0 })
        );
        // n = 2 leaves four padding bits; set one of them.
        assert_eq!(decode(b"A`"), Err(Graph6Error::DirtyPadding));
        // Long form declaring n = 5.
        assert_eq!(decode(b"~??D"), Err(Graph6Error::NonCanonicalSize));
        assert_eq!(decode(b"~~"), Err(Graph6Error::TooLarge));
        assert_eq!(decode(b"~?"), Err(Graph6Error::Truncated));
    }

    #[test]
    fn encode_rejects_oversized_graphs() {
        assert_eq!(encode(&SimpleGraph::new(MAX_VERTICES + 1)), Err(Graph6Error::TooLarge));
    }
}
