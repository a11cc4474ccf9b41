//! Text formats: graph6 (orders up to 62), a plain edge list, `+`/`-`
//! color strings and comma separated words.

use thiserror::Error;

use crate::bicolored::Coloring;
use crate::graph::Graph;
use crate::word::Word;

/// Largest order representable with the single-byte graph6 size prefix.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("color string: {0}")]
    Colors(String),

    #[error("word: {0}")]
    Word(String),
}

fn g6_err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. Trailing whitespace (e.g. the newline) is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end().as_bytes();
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(
            offset,
            format!("byte {} outside 63..=126", bytes[offset]),
        ));
    }
    let Some(&first) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    let n = usize::from(first - 63);
    if n > GRAPH6_MAX_N {
        return Err(g6_err(0, "multi-byte orders (n > 62) are not supported"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(g6_err(
            bytes.len().min(expected),
            format!(
                "expected {expected} bytes for n = {n}, found {}",
                bytes.len()
            ),
        ));
    }

    let data = &bytes[1..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("ids in range");
            }
            k += 1;
        }
    }
    for pad in bits..data.len() * 6 {
        if bit(pad) {
            return Err(g6_err(1 + pad / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph of order at most 62 as graph6 (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(g6_err(0, format!("order {n} exceeds {GRAPH6_MAX_N}")));
    }
    let mut out = vec![n as u8 + 63];
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

/// Reads every non-empty line of a graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

/// Parses `n <count>` followed by one `u v` pair per line. Blank lines and
/// `#` comments are skipped; duplicate or reversed pairs collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let mut tokens = header.split_whitespace();
    let n = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(count), None) => count
            .parse::<usize>()
            .map_err(|_| err(header_line, format!("bad vertex count `{count}`")))?,
        _ => {
            return Err(err(
                header_line,
                format!("expected `n <count>`, got `{header}`"),
            ))
        }
    };

    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let ids: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = ids[..] else {
            return Err(err(line, format!("expected `u v`, got `{content}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("bad vertex id `{s}`")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// `+` is `+1`; `-` (or the unicode minus `−`) is `-1`.
pub fn parse_colors(text: &str, n: usize) -> Result<Coloring, ParseError> {
    let signs = text
        .trim()
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' | '−' => Ok(-1),
            other => Err(ParseError::Colors(format!(
                "unexpected character `{other}`"
            ))),
        })
        .collect::<Result<Vec<i8>, _>>()?;
    if signs.len() != n {
        return Err(ParseError::Colors(format!(
            "expected {n} colors, found {}",
            signs.len()
        )));
    }
    Ok(Coloring::from_signs(&signs).expect("signs are +-1"))
}

pub fn emit_colors(c: &Coloring) -> String {
    c.signs()
        .into_iter()
        .map(|s| if s < 0 { '-' } else { '+' })
        .collect()
}

/// Parses `0,3,1`. With `labels`, a token equal to a label resolves to its
/// position in the table. An empty string is the empty word.
pub fn parse_word(text: &str, labels: &[String]) -> Result<Word, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Word::empty());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if let Some(i) = labels.iter().position(|l| l == tok) {
                return Ok(i);
            }
            tok.parse::<usize>()
                .map_err(|_| ParseError::Word(format!("bad letter `{tok}`")))
        })
        .collect()
}

/// Splits a comma separated label table.
pub fn parse_labels(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).collect()
}
