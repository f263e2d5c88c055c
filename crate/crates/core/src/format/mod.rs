//! Line-oriented text formats for algebras, networks and behaviour tables.
//!
//! All three share the same lexical rules: `#` starts a comment that runs to
//! the end of the line, tokens are separated by whitespace and blank lines
//! are ignored.

mod algebra;
mod behaviour;
mod network;

pub use algebra::{parse_algebra, write_algebra};
pub use behaviour::{parse_behaviour, write_behaviour};
pub use network::{parse_network, write_network};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            None
        } else {
            Some((i + 1, toks))
        }
    })
}
