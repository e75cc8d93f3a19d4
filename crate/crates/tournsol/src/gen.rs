//! Deterministic, seeded instance generators.
//!
//! The pseudo-random stream is splitmix64 (Steele, Lea & Flood's mixer): the
//! state advances by the golden-gamma constant and each output is finalized
//! with two xor-shift-multiply rounds. It is spelled out here, rather than
//! pulled from a crate, so that any other implementation can reproduce the
//! exact instances from a seed.

use crate::majority::{MajorityStructure, PreferenceProfile};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("alternative count must be at least 1")]
    ZeroAlternatives,
    #[error("tie probability {0} is not in [0, 1]")]
    BadTieProbability(f64),
}

/// splitmix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// Uniform in [0, bound).
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        // Modulo bias is irrelevant at these bounds (n <= a few thousand).
        (self.next_u64() % bound as u64) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Every unordered pair oriented uniformly at random; no ties.
    Tournament,
    /// Every unordered pair tied with `tie_prob`, otherwise oriented uniformly.
    Weak,
    /// i beats j iff i precedes j (labels ascending); alternative 1 on top.
    Transitive,
    /// i beats i+1 cyclically. Degenerate sizes: one alternative gives no
    /// edges, two give the single edge 1 -> 2.
    Cycle,
    /// The built-in six-alternative worked example; ignores n, seed, tie_prob.
    Fixture,
}

impl Kind {
    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "tournament" => Some(Kind::Tournament),
            "weak" => Some(Kind::Weak),
            "transitive" => Some(Kind::Transitive),
            "cycle" => Some(Kind::Cycle),
            "fixture" => Some(Kind::Fixture),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kind::Tournament => "tournament",
            Kind::Weak => "weak",
            Kind::Transitive => "transitive",
            Kind::Cycle => "cycle",
            Kind::Fixture => "fixture",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub kind: Kind,
    /// Only meaningful for [`Kind::Weak`].
    pub tie_prob: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, kind: Kind, seed: u64) -> Self {
        GenSpec {
            n,
            kind,
            tie_prob: 0.0,
            seed,
        }
    }

    pub fn weak(n: usize, tie_prob: f64, seed: u64) -> Self {
        GenSpec {
            n,
            kind: Kind::Weak,
            tie_prob,
            seed,
        }
    }

    pub fn fixture() -> Self {
        GenSpec::new(6, Kind::Fixture, 0)
    }
}

/// Strict-majority edges of the six-alternative worked example, 1-based.
pub const FIXTURE_EDGES: [(usize, usize); 9] = [
    (1, 2),
    (2, 3),
    (3, 1),
    (4, 1),
    (4, 2),
    (4, 5),
    (5, 6),
    (6, 2),
    (6, 4),
];

/// Name accepted by `--fixture`.
pub const FIXTURE_NAME: &str = "paper";

/// The built-in six-alternative example with ties.
pub fn fixture() -> MajorityStructure {
    let edges: Vec<(usize, usize)> = FIXTURE_EDGES.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    MajorityStructure::from_edges(6, &edges).expect("fixture edges are valid")
}

/// Generates the structure described by `spec`; same spec, same output.
///
/// Pairs are visited in row-major order (i < j ascending); the weak kind
/// draws the tie decision first and the orientation second, so tie_prob = 0
/// consumes the same stream as a tournament with the orientation draw shifted.
pub fn generate(spec: &GenSpec) -> Result<MajorityStructure, GenError> {
    if spec.kind == Kind::Fixture {
        return Ok(fixture());
    }
    let n = spec.n;
    if n == 0 {
        return Err(GenError::ZeroAlternatives);
    }
    if !(0.0..=1.0).contains(&spec.tie_prob) || spec.tie_prob.is_nan() {
        return Err(GenError::BadTieProbability(spec.tie_prob));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match spec.kind {
        Kind::Tournament => {
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_bool() {
                        edges.push((i, j));
                    } else {
                        edges.push((j, i));
                    }
                }
            }
        }
        Kind::Weak => {
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_f64() < spec.tie_prob {
                        continue;
                    }
                    if rng.next_bool() {
                        edges.push((i, j));
                    } else {
                        edges.push((j, i));
                    }
                }
            }
        }
        Kind::Transitive => {
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j));
                }
            }
        }
        Kind::Cycle => {
            if n == 2 {
                edges.push((0, 1));
            } else if n >= 3 {
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                }
            }
        }
        Kind::Fixture => unreachable!(),
    }
    Ok(MajorityStructure::from_edges(n, &edges).expect("generated edges satisfy the invariants"))
}

/// Profile of `voters` uniform random permutations (Fisher–Yates over the
/// splitmix64 stream).
pub fn random_profile(n: usize, voters: usize, seed: u64) -> PreferenceProfile {
    assert!(n >= 1 && voters >= 2);
    let mut rng = SplitMix64::new(seed);
    let orders = (0..voters)
        .map(|_| {
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, rng.next_below(i + 1));
            }
            order
        })
        .collect();
    PreferenceProfile::new(n, orders).expect("shuffled orders are permutations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolmat::BoolMatrix;
    use crate::testutil::mat;

    #[test]
    fn fixture_matches_the_printed_matrices() {
        let s = generate(&GenSpec::fixture()).unwrap();
        assert_eq!(*s.m(), mat("010000 001000 100000 110010 000001 010100"));
        assert_eq!(*s.t(), mat("000011 000010 000111 001000 111000 101000"));
    }

    #[test]
    fn transitive_top_dominates_everything() {
        let s = generate(&GenSpec::new(4, Kind::Transitive, 0)).unwrap();
        assert_eq!(s.lower_contour(0).labels(), vec![2, 3, 4]);
        assert!(s.is_tournament());
    }

    #[test]
    fn all_ties_when_tie_probability_is_one() {
        for seed in [0, 1, 99] {
            let s = generate(&GenSpec::weak(6, 1.0, seed)).unwrap();
            assert_eq!(*s.m(), BoolMatrix::zeros(6));
        }
    }

    #[test]
    fn cycle_sizes() {
        assert_eq!(generate(&GenSpec::new(3, Kind::Cycle, 0)).unwrap().edges().len(), 3);
        assert_eq!(generate(&GenSpec::new(1, Kind::Cycle, 0)).unwrap().edges().len(), 0);
        assert_eq!(
            generate(&GenSpec::new(2, Kind::Cycle, 0)).unwrap().edges(),
            vec![(0, 1)]
        );
    }

    #[test]
    fn same_seed_same_instance() {
        for kind in [Kind::Tournament, Kind::Weak] {
            let mut spec = GenSpec::new(8, kind, 2024);
            spec.tie_prob = 0.3;
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
        let a = generate(&GenSpec::new(8, Kind::Tournament, 1)).unwrap();
        let b = generate(&GenSpec::new(8, Kind::Tournament, 2)).unwrap();
        assert_ne!(a, b, "distinct seeds should almost surely differ at n = 8");
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert_eq!(
            generate(&GenSpec::new(0, Kind::Tournament, 0)),
            Err(GenError::ZeroAlternatives)
        );
        assert_eq!(
            generate(&GenSpec::weak(3, 1.5, 0)),
            Err(GenError::BadTieProbability(1.5))
        );
    }

    // First outputs of the reference stream for seed 0; any implementation
    // of splitmix64 reproduces these.
    #[test]
    fn splitmix_reference_values() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }
}
