//! graph6 encoding and decoding.
//!
//! The header is `n + 63` for `n <= 62` and `126` followed by three 6-bit
//! groups for larger orders. The body lists the upper triangle column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte with the
//! most significant bit first, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;
const LONG: u8 = 126;

/// Encodes `g` as graph6 text (without a trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 record. Surrounding whitespace is not accepted; strip
/// the line terminator before calling.
pub fn decode(text: &[u8]) -> Result<Graph> {
    let bad = |msg: String| Error::Graph6(msg);
    let (&first, rest) = text.split_first().ok_or_else(|| bad("empty input".into()))?;
    let (n, body) = match first {
        LONG => {
            if rest.len() < 3 {
                return Err(bad("truncated long-form header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                if !(BIAS..=LONG).contains(&b) {
                    return Err(bad(format!("invalid header byte {b}")));
                }
                n = (n << 6) | (b - BIAS) as usize;
            }
            if n <= 62 {
                return Err(bad(format!("long-form header used for order {n}")));
            }
            (n, &rest[3..])
        }
        b if (BIAS..LONG).contains(&b) => ((b - BIAS) as usize, rest),
        b => return Err(bad(format!("invalid header byte {b}"))),
    };
    if n > MAX_ORDER {
        return Err(Error::Order(n));
    }
    if n == 0 {
        return Err(Error::Order(0));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "body has {} bytes, expected {expected} for order {n}",
            body.len()
        )));
    }
    if let Some(pos) = body.iter().position(|b| !(BIAS..=LONG).contains(b)) {
        return Err(bad(format!("byte {} at offset {pos} is outside 63..=126", body[pos])));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (k..body.len() * 6).any(bit) {
        return Err(bad("non-zero padding bits".into()));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Decodes a `&str` record.
pub fn decode_str(text: &str) -> Result<Graph> {
    decode(text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode(&k1).as_bytes(), &[64]);
        assert_eq!(decode(&[64]).unwrap(), k1);
    }

    #[test]
    fn known_small_encodings() {
        // K2 = "A_", K3 = "Bw", C5 = "Dhc" (nauty/networkx conventions)
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(encode(&Graph::cycle(5).unwrap()), "Dhc");
        let c5 = decode_str("Dhc").unwrap();
        assert_eq!(c5.regularity(), Some(2));
        assert!(c5.is_connected());
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode(b"").is_err());
        assert!(decode(b"D\x20c").is_err(), "byte below 63 in body");
        assert!(decode(b"Dhcc").is_err(), "trailing garbage");
        assert!(decode(b"Dh").is_err(), "short body");
        assert!(decode(b"Dhd").is_err(), "non-zero padding");
        assert!(decode(b"\x3e").is_err(), "header below 63");
        // order 65 in long form
        assert_eq!(decode(b"~?@@"), Err(Error::Order(65)));
        assert!(decode(b"~??D").is_err(), "long form for a small order");
    }

    #[test]
    fn long_form_orders() {
        for n in [63, 64] {
            let g = Graph::cycle(n).unwrap();
            let text = encode(&g);
            assert_eq!(text.as_bytes()[0], 126);
            assert_eq!(decode_str(&text).unwrap(), g);
        }
        let g = Graph::cycle(62).unwrap();
        assert_eq!(encode(&g).as_bytes()[0], 62 + 63);
    }
}
