//! The graph6 ASCII format.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `~` followed by three 6-bit
//! groups for `n <= 258047`, and `~~` followed by six groups otherwise. The
//! upper triangle is then packed column by column (`(0,1), (0,2), (1,2),
//! (0,3), …`), six bits per byte, big-endian, zero padded, each byte offset
//! by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub(super) fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
}

pub(super) fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(format!("graph6: invalid character in {s:?}")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse("graph6: empty string")),
        [126, 126, rest @ ..] => (read_groups(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_groups(rest, 3)?, &rest[3..]),
        [b, rest @ ..] => ((*b - 63) as u64, rest),
    };
    let n = usize::try_from(n).map_err(|_| Error::parse("graph6: order too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(format!(
            "graph6: expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[body.len() - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::parse("graph6: nonzero padding bits"));
        }
    }
    Ok(g)
}

fn read_groups(bytes: &[u8], count: usize) -> Result<u64> {
    if bytes.len() < count {
        return Err(Error::parse("graph6: truncated size field"));
    }
    Ok(bytes[..count].iter().fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_encodings() {
        // reference strings as produced by nauty's geng/showg
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&complete(2)), "A_");
        assert_eq!(encode(&complete(3)), "Bw");
        assert_eq!(encode(&complete(4)), "C~");
        assert_eq!(encode(&cycle(5)), "Dhc");
        assert_eq!(encode(&complete(5)), "D~{");
    }

    #[test]
    fn decode_accepts_header_and_newline() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), complete(3));
    }

    #[test]
    fn long_size_form() {
        let mut g = Graph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(42, 43);
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("Bw?").is_err());
        assert!(decode("B").is_err());
        assert!(decode("Bx").is_err()); // padding bit set
        assert!(decode("B w").is_err());
    }
}
