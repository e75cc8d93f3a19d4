//! Instance files.
//!
//! Text format, one item per line, `#` starts a comment:
//!
//! ```text
//! # anything
//! n 6
//! mu 1 2
//! mu 2 3
//! ```
//!
//! Labels are 1-based. Ties are never listed; they are whatever remains of a
//! pair once neither direction is a `mu` line, so a file round-trips through
//! the partition invariant by construction.
//!
//! The structured format is JSON `{"n": 6, "mu_edges": [[1,2], ...]}` or
//! `{"n": 3, "profile": [[1,2,3], [2,3,1]]}` (orders most-preferred first,
//! aggregated by simple pairwise majority).

use crate::majority::{MajorityError, MajorityStructure, PreferenceProfile};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {0}: expected `n <count>` before any other directive")]
    MissingHeader(usize),
    #[error("line {0}: malformed header, want `n <count>`")]
    BadHeader(usize),
    #[error("line {0}: duplicate header")]
    DuplicateHeader(usize),
    #[error("line {0}: malformed edge, want `mu <i> <j>` with 1-based labels")]
    BadEdge(usize),
    #[error("line {0}: unknown directive {1:?}")]
    UnknownDirective(usize, String),
    #[error("no header line found")]
    Empty,
    #[error("line {0}: {1}")]
    Structure(usize, MajorityError),
    #[error("structured input is not valid JSON: {0}")]
    Json(String),
    #[error("structured input needs exactly one of mu_edges or profile")]
    AmbiguousJson,
    #[error(transparent)]
    Invalid(#[from] MajorityError),
}

/// Parses the text format. Edge errors carry the offending line number.
pub fn parse_text(input: &str) -> Result<MajorityStructure, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("n") => {
                if n.is_some() {
                    return Err(ParseError::DuplicateHeader(lineno));
                }
                let value = parts
                    .next()
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or(ParseError::BadHeader(lineno))?;
                if parts.next().is_some() {
                    return Err(ParseError::BadHeader(lineno));
                }
                n = Some(value);
            }
            Some("mu") => {
                if n.is_none() {
                    return Err(ParseError::MissingHeader(lineno));
                }
                let i = parts.next().and_then(|v| v.parse::<usize>().ok());
                let j = parts.next().and_then(|v| v.parse::<usize>().ok());
                match (i, j, parts.next()) {
                    (Some(i), Some(j), None) if i >= 1 && j >= 1 => {
                        edges.push((i - 1, j - 1));
                        edge_lines.push(lineno);
                    }
                    _ => return Err(ParseError::BadEdge(lineno)),
                }
            }
            Some(other) => {
                return Err(ParseError::UnknownDirective(lineno, other.to_string()))
            }
            None => unreachable!("blank lines were skipped"),
        }
    }
    let n = n.ok_or(ParseError::Empty)?;
    build_with_lines(n, &edges, &edge_lines)
}

/// Attributes a structure-level rejection to the first edge line involved.
fn build_with_lines(
    n: usize,
    edges: &[(usize, usize)],
    lines: &[usize],
) -> Result<MajorityStructure, ParseError> {
    MajorityStructure::from_edges(n, edges).map_err(|err| {
        let culprit = match err {
            MajorityError::EdgeOutOfRange(i, j, _) => edges
                .iter()
                .position(|&(a, b)| (a + 1, b + 1) == (i, j)),
            // The reversal is rejected when the later edge arrives.
            MajorityError::BothDirections(i, j) => edges
                .iter()
                .rposition(|&(a, b)| (a + 1, b + 1) == (i, j)),
            MajorityError::SelfLoop(i) => {
                edges.iter().position(|&(a, b)| a == b && a + 1 == i)
            }
            _ => None,
        };
        match culprit {
            Some(pos) => ParseError::Structure(lines[pos], err),
            None => ParseError::Invalid(err),
        }
    })
}

/// Canonical text serialization: header, then `mu` lines sorted by pair.
/// Byte-identical for equal structures.
pub fn to_text(s: &MajorityStructure) -> String {
    let mut out = format!("n {}\n", s.n());
    for (i, j) in s.edges() {
        out.push_str(&format!("mu {} {}\n", i + 1, j + 1));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonInstance {
    n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    mu_edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    profile: Vec<Vec<usize>>,
}

/// Parses the structured JSON format (1-based labels throughout).
pub fn parse_json(input: &str) -> Result<MajorityStructure, ParseError> {
    let raw: JsonInstance =
        serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    if !raw.mu_edges.is_empty() && !raw.profile.is_empty() {
        return Err(ParseError::AmbiguousJson);
    }
    if !raw.profile.is_empty() {
        let orders: Vec<Vec<usize>> = raw
            .profile
            .iter()
            .map(|order| order.iter().map(|&x| x.wrapping_sub(1)).collect())
            .collect();
        let profile = PreferenceProfile::new(raw.n, orders)?;
        return Ok(MajorityStructure::from_profile(&profile));
    }
    let mut edges = Vec::with_capacity(raw.mu_edges.len());
    for &(i, j) in &raw.mu_edges {
        if i < 1 || j < 1 || i > raw.n || j > raw.n {
            return Err(MajorityError::EdgeOutOfRange(i, j, raw.n).into());
        }
        edges.push((i - 1, j - 1));
    }
    Ok(MajorityStructure::from_edges(raw.n, &edges)?)
}

/// Canonical JSON serialization of the instance itself.
pub fn to_json(s: &MajorityStructure) -> String {
    let value = JsonInstance {
        n: s.n(),
        mu_edges: s.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
        profile: Vec::new(),
    };
    serde_json::to_string(&value).expect("instance serialization cannot fail")
}

/// Short content digest of the canonical serialization; identifies the
/// instance in reports.
pub fn digest(s: &MajorityStructure) -> String {
    let mut hasher = Sha256::new();
    hasher.update(to_text(s).as_bytes());
    let full = hasher.finalize();
    full.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{self, GenSpec, Kind, SplitMix64};
    use proptest::prelude::*;

    /// The parser must not care about edge order.
    fn to_text_shuffled(s: &MajorityStructure, seed: u64) -> String {
        let mut edges = s.edges();
        let mut rng = SplitMix64::new(seed);
        for i in (1..edges.len()).rev() {
            edges.swap(i, rng.next_below(i + 1));
        }
        let mut out = format!("n {}\n", s.n());
        for (i, j) in edges {
            out.push_str(&format!("mu {} {}\n", i + 1, j + 1));
        }
        out
    }

    #[test]
    fn parses_the_fixture_file() {
        let text = "# worked example\nn 6\nmu 1 2\nmu 2 3\nmu 3 1\nmu 4 1\nmu 4 2\nmu 4 5\nmu 5 6\nmu 6 2\nmu 6 4\n";
        let s = parse_text(text).unwrap();
        assert_eq!(s, gen::fixture());
    }

    #[test]
    fn line_numbered_errors() {
        assert_eq!(
            parse_text("n 3\nmu 1\n"),
            Err(ParseError::BadEdge(2))
        );
        assert_eq!(
            parse_text("mu 1 2\n"),
            Err(ParseError::MissingHeader(1))
        );
        assert_eq!(
            parse_text("n 3\nxy 1 2\n"),
            Err(ParseError::UnknownDirective(2, "xy".into()))
        );
        assert_eq!(parse_text("# nothing\n"), Err(ParseError::Empty));
        let err = parse_text("n 3\nmu 1 2\nmu 2 1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Structure(3, MajorityError::BothDirections(2, 1))
        );
        let err = parse_text("n 3\nmu 1 4\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Structure(2, MajorityError::EdgeOutOfRange(1, 4, 3))
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let s = parse_text("\n# c\nn 2 # trailing\n\nmu 1 2\n").unwrap();
        assert_eq!(s.edges(), vec![(0, 1)]);
    }

    #[test]
    fn json_edges_and_profile() {
        let s = parse_json(r#"{"n": 3, "mu_edges": [[1,2],[2,3],[3,1]]}"#).unwrap();
        assert!(s.is_tournament());
        let p = parse_json(r#"{"n": 3, "profile": [[1,2,3],[2,3,1],[3,1,2]]}"#).unwrap();
        assert_eq!(p, s, "classic cycle profile aggregates to the 3-cycle");
        assert_eq!(
            parse_json(r#"{"n": 3, "mu_edges": [[1,2]], "profile": [[1,2,3],[3,2,1]]}"#),
            Err(ParseError::AmbiguousJson)
        );
        assert!(parse_json("{").is_err());
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = gen::fixture();
        assert_eq!(digest(&a), digest(&gen::fixture()));
        let b = gen::generate(&GenSpec::new(6, Kind::Cycle, 0)).unwrap();
        assert_ne!(digest(&a), digest(&b));
        assert_eq!(digest(&a).len(), 16);
    }

    proptest! {
        #[test]
        fn text_round_trip(seed in any::<u64>(), n in 1usize..=10, tie in 0.0f64..=1.0) {
            let s = gen::generate(&GenSpec::weak(n, tie, seed)).unwrap();
            prop_assert_eq!(parse_text(&to_text(&s)).unwrap(), s);
        }

        #[test]
        fn json_round_trip(seed in any::<u64>(), n in 1usize..=10) {
            let s = gen::generate(&GenSpec::weak(n, 0.3, seed)).unwrap();
            prop_assert_eq!(parse_json(&to_json(&s)).unwrap(), s);
        }

        #[test]
        fn shuffled_serialization_parses_to_the_same_structure(seed in any::<u64>()) {
            let s = gen::generate(&GenSpec::weak(8, 0.3, seed)).unwrap();
            prop_assert_eq!(parse_text(&to_text_shuffled(&s, seed ^ 0xabc)).unwrap(), s);
        }
    }
}
