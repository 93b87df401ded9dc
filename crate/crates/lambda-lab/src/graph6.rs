//! graph6 reading and writing: 6-bit packing, 63-offset ASCII, upper-triangle
//! column order, one graph per line. Lines starting with the `>>graph6<<`
//! header are tolerated and stripped.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn strip_header(line: &str) -> &str {
    line.strip_prefix(HEADER).unwrap_or(line).trim_end_matches(['\r', '\n'])
}

/// Decodes one graph6 line.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = strip_header(line).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Header);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6InvalidChar { byte: b, pos });
        }
    }
    let (n, data) = if bytes[0] == 126 {
        // long form: '~' then three 6-bit digits (eight-byte form is too big anyway)
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::TooManyVertices { n: usize::MAX, max: MAX_VERTICES });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6Header);
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if data.len() != nchars {
        return Err(Error::Graph6Truncated { expected: nchars, got: data.len() });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = (data[k / 6] - 63) as u64;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    while k < nchars * 6 {
        let group = (data[k / 6] - 63) as u64;
        if group >> (5 - k % 6) & 1 == 1 {
            return Err(Error::Graph6Trailing);
        }
        k += 1;
    }
    Ok(Graph::from_bitsets(n, adj))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.adj_bits(i) >> j & 1 == 1 {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses a whole text of graph6 lines, skipping blank lines and stripping
/// headers. The line number (1-based) accompanies any failure.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let stripped = strip_header(line);
        if stripped.trim().is_empty() {
            continue;
        }
        match parse_graph6(stripped) {
            Ok(g) => out.push(g),
            Err(e) => return Err((idx + 1, e)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn known_encodings() {
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&Graph::complete(5).unwrap()), "D~{");
        assert_eq!(write_graph6(&Graph::new(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn known_decodings() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("D~{").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0).unwrap());
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn long_form_round_trips_at_the_cap() {
        for n in [63, 64] {
            let g = Graph::complete(n).unwrap();
            let enc = write_graph6(&g);
            assert!(enc.starts_with('~'));
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6Header)));
        assert!(matches!(
            parse_graph6("D~"),
            Err(Error::Graph6Truncated { expected: 2, got: 1 })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Error::Graph6Truncated { expected: 1, got: 2 })
        ));
        assert!(matches!(
            parse_graph6("C!"),
            Err(Error::Graph6InvalidChar { byte: b'!', pos: 1 })
        ));
        // K_3 needs 3 bits; a set padding bit is garbage
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6Truncated { .. })));
        assert!(matches!(parse_graph6("B~"), Err(Error::Graph6Trailing)));
        // 65 vertices in long form
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Error::TooManyVertices { n: 65, max: 64 })
        ));
    }

    #[test]
    fn line_parser_skips_blanks_and_reports_position() {
        let graphs = parse_graph6_lines(">>graph6<<C~\n\nA_\n").unwrap();
        assert_eq!(graphs.len(), 2);
        let err = parse_graph6_lines("C~\nC!\n").unwrap_err();
        assert_eq!(err.0, 2);
    }

    #[test]
    fn round_trip_identity_on_assorted_graphs() {
        let samples = [
            Graph::empty(1).unwrap(),
            Graph::new(5, &[(0, 2), (2, 4), (1, 3)]).unwrap(),
            Graph::new(
                6,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            )
            .unwrap(),
        ];
        for g in samples {
            let back = parse_graph6(&write_graph6(&g)).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.vertices().collect::<Vec<VertexId>>().len(), g.vertex_count());
        }
    }
}
