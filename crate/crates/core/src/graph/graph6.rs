use super::{Graph, MAX_ORDER};

/// Largest order expressible with the one- and four-byte graph6 headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 payload has {got} bytes, expected {expected}")]
    PayloadLength { expected: usize, got: usize },
    #[error("order {0} exceeds the graph6 limit of {GRAPH6_MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("order {0} exceeds the in-memory limit of {MAX_ORDER}")]
    Unsupported(usize),
}

/// Encodes `g` as a graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + pairs.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix and trailing
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset,
            byte: bytes[offset],
        });
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == b'~' {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::Unsupported(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::PayloadLength {
            expected,
            got: body.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn known_decodings() {
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(from_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(from_graph6("Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(&s[1..4], "?@c");
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("~?"), Err(Graph6Error::MalformedHeader));
        assert_eq!(from_graph6("~~??????"), Err(Graph6Error::MalformedHeader));
        assert_eq!(
            from_graph6("Dh"),
            Err(Graph6Error::PayloadLength { expected: 2, got: 1 })
        );
        assert_eq!(
            from_graph6("Dhcc"),
            Err(Graph6Error::PayloadLength { expected: 2, got: 3 })
        );
        assert_eq!(
            from_graph6("D h"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            from_graph6("D\u{7f}c"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x7f })
        );
    }
}
