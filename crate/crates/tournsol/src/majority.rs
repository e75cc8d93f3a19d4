//! Validated majority structures: the strict-majority relation mu, the tie
//! relation tau, and their reflexive completion upsilon, held as the matrix
//! triple (M, T, U).
//!
//! Construction enforces the defining invariants once; everything downstream
//! may then rely on them:
//!
//! * M is asymmetric and irreflexive,
//! * T is symmetric and irreflexive,
//! * M + M^tr + T + E = I (every distinct pair is an edge one way, the other
//!   way, or a tie),
//! * U = M + T + E = complement(M^tr).

use crate::boolmat::{BoolMatrix, BoolVec};
use thiserror::Error;

/// Requested a tournament-only computation on an instance with ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("operation is defined for tournaments only, but the instance has ties")]
pub struct NotTournament;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MajorityError {
    #[error("alternative count must be at least 1")]
    ZeroAlternatives,
    #[error("edge ({0}, {1}) mentions an alternative outside 1..={2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("self-loop ({0}, {0}) is not a valid majority edge")]
    SelfLoop(usize),
    #[error("edges ({0}, {1}) and ({1}, {0}) are both present")]
    BothDirections(usize, usize),
    #[error("majority matrix is not asymmetric: both ({0}, {1}) and ({1}, {0}) are set")]
    NotAsymmetric(usize, usize),
    #[error("majority matrix has a reflexive entry at alternative {0}")]
    ReflexiveMajority(usize),
    #[error("tie matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("tie matrix has a reflexive entry at alternative {0}")]
    ReflexiveTie(usize),
    #[error("partition failure at ({0}, {1}): pair is neither dominated, dominating, nor tied exactly once")]
    PartitionFailure(usize, usize),
    #[error("matrix dimensions differ: majority is {0}x{0}, ties {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("a preference profile needs at least 2 voters")]
    TooFewVoters,
    #[error("voter {0} does not rank every alternative exactly once")]
    NotAPermutation(usize),
}

/// A list of strict total orders over the alternatives, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceProfile {
    n: usize,
    orders: Vec<Vec<usize>>,
}

impl PreferenceProfile {
    /// Each order must be a permutation of `0..n`; at least two are required.
    pub fn new(n: usize, orders: Vec<Vec<usize>>) -> Result<Self, MajorityError> {
        if n == 0 {
            return Err(MajorityError::ZeroAlternatives);
        }
        if orders.len() < 2 {
            return Err(MajorityError::TooFewVoters);
        }
        for (v, order) in orders.iter().enumerate() {
            let mut seen = vec![false; n];
            if order.len() != n {
                return Err(MajorityError::NotAPermutation(v + 1));
            }
            for &alt in order {
                if alt >= n || seen[alt] {
                    return Err(MajorityError::NotAPermutation(v + 1));
                }
                seen[alt] = true;
            }
        }
        Ok(PreferenceProfile { n, orders })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn voters(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }
}

/// Validated triple (M, T, U) for the relations mu, tau, upsilon.
#[derive(Clone, PartialEq, Eq)]
pub struct MajorityStructure {
    n: usize,
    m: BoolMatrix,
    t: BoolMatrix,
    u: BoolMatrix,
}

impl MajorityStructure {
    /// Builds from the strict-majority edge list (0-based pairs); ties are
    /// inferred as every unordered pair with neither direction present.
    pub fn from_edges(n: usize, mu_edges: &[(usize, usize)]) -> Result<Self, MajorityError> {
        if n == 0 {
            return Err(MajorityError::ZeroAlternatives);
        }
        let mut m = BoolMatrix::zeros(n);
        for &(i, j) in mu_edges {
            if i >= n || j >= n {
                return Err(MajorityError::EdgeOutOfRange(i + 1, j + 1, n));
            }
            if i == j {
                return Err(MajorityError::SelfLoop(i + 1));
            }
            if m.get(j, i) {
                return Err(MajorityError::BothDirections(i + 1, j + 1));
            }
            m.set(i, j, true);
        }
        // T is the complement of mu, mu reversed, and the diagonal.
        let t = m
            .or(&m.transpose())
            .or(&BoolMatrix::identity(n))
            .complement();
        Ok(Self::assemble(m, t))
    }

    /// Validates an explicit (M, T) pair against all structure invariants.
    pub fn from_matrices(m: BoolMatrix, t: BoolMatrix) -> Result<Self, MajorityError> {
        let n = m.n();
        if t.n() != n {
            return Err(MajorityError::DimensionMismatch(n, t.n()));
        }
        for i in 0..n {
            if m.get(i, i) {
                return Err(MajorityError::ReflexiveMajority(i + 1));
            }
            if t.get(i, i) {
                return Err(MajorityError::ReflexiveTie(i + 1));
            }
            for j in (i + 1)..n {
                if m.get(i, j) && m.get(j, i) {
                    return Err(MajorityError::NotAsymmetric(i + 1, j + 1));
                }
                if t.get(i, j) != t.get(j, i) {
                    return Err(MajorityError::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        // Asymmetry and symmetry already hold, so each unordered pair must be
        // a majority edge or a tie, never both and never neither.
        for i in 0..n {
            for j in (i + 1)..n {
                let in_m = m.get(i, j) || m.get(j, i);
                if in_m == t.get(i, j) {
                    return Err(MajorityError::PartitionFailure(i + 1, j + 1));
                }
            }
        }
        Ok(Self::assemble(m, t))
    }

    /// Simple pairwise majority over a profile: i beats j iff strictly more
    /// voters rank i above j; exact balance is a tie.
    pub fn from_profile(profile: &PreferenceProfile) -> Self {
        let n = profile.n();
        let mut above = vec![vec![0usize; n]; n];
        for order in profile.orders() {
            let mut rank = vec![0usize; n];
            for (pos, &alt) in order.iter().enumerate() {
                rank[alt] = pos;
            }
            for (i, &ri) in rank.iter().enumerate() {
                for (j, &rj) in rank.iter().enumerate() {
                    if i != j && ri < rj {
                        above[i][j] += 1;
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for (i, row) in above.iter().enumerate() {
            for (j, &wins) in row.iter().enumerate() {
                if wins > above[j][i] {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(n, &edges).expect("pairwise majority is asymmetric by construction")
    }

    fn assemble(m: BoolMatrix, t: BoolMatrix) -> Self {
        let n = m.n();
        let u = m.or(&t).or(&BoolMatrix::identity(n));
        debug_assert_eq!(u, m.transpose().complement());
        MajorityStructure { n, m, t, u }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix of the strict-majority relation mu.
    pub fn m(&self) -> &BoolMatrix {
        &self.m
    }

    /// Matrix of the tie relation tau.
    pub fn t(&self) -> &BoolMatrix {
        &self.t
    }

    /// Matrix of upsilon = mu + tau + identity.
    pub fn u(&self) -> &BoolMatrix {
        &self.u
    }

    /// True iff there are no ties.
    pub fn is_tournament(&self) -> bool {
        self.t == BoolMatrix::zeros(self.n)
    }

    pub fn require_tournament(&self) -> Result<(), NotTournament> {
        if self.is_tournament() {
            Ok(())
        } else {
            Err(NotTournament)
        }
    }

    /// L(i): the alternatives i dominates. Row i of M, equal to M^tr · e(i).
    pub fn lower_contour(&self, i: usize) -> BoolVec {
        self.m.row(i)
    }

    /// D(i): the alternatives dominating i, M · e(i).
    pub fn upper_contour(&self, i: usize) -> BoolVec {
        self.m.mul_vec(&BoolVec::unit(self.n, i))
    }

    /// H(i): the alternatives tied with i, T · e(i).
    pub fn horizon(&self, i: usize) -> BoolVec {
        self.t.mul_vec(&BoolVec::unit(self.n, i))
    }

    /// Strict-majority edges as sorted 0-based pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.m.row(i).members() {
                out.push((i, j));
            }
        }
        out
    }

    /// Tied unordered pairs (i < j), 0-based.
    pub fn tie_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.t.row(i).members() {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for MajorityStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MajorityStructure(n={}, mu={:?}, ties={:?})",
            self.n,
            self.edges(),
            self.tie_pairs()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{self, GenSpec, Kind};
    use crate::testutil::mat;
    use proptest::prelude::*;

    fn fixture_edges() -> Vec<(usize, usize)> {
        // 1-based in the source example; stored 0-based.
        [(1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 5), (5, 6), (6, 2), (6, 4)]
            .iter()
            .map(|&(i, j)| (i - 1, j - 1))
            .collect()
    }

    #[test]
    fn fixture_matrices_match_printed_displays() {
        let s = MajorityStructure::from_edges(6, &fixture_edges()).unwrap();
        assert_eq!(
            *s.m(),
            mat("010000 001000 100000 110010 000001 010100")
        );
        assert_eq!(
            *s.t(),
            mat("000011 000010 000111 001000 111000 101000")
        );
        assert_eq!(
            *s.u(),
            mat("110011 011010 101111 111110 111011 111101")
        );
        assert!(!s.is_tournament());
    }

    #[test]
    fn fixture_contours_for_alternative_two() {
        let s = MajorityStructure::from_edges(6, &fixture_edges()).unwrap();
        // 1-based: L(2) = {3}, D(2) = {1, 4, 6}, H(2) = {5}.
        assert_eq!(s.lower_contour(1).labels(), vec![3]);
        assert_eq!(s.upper_contour(1).labels(), vec![1, 4, 6]);
        assert_eq!(s.horizon(1).labels(), vec![5]);
    }

    #[test]
    fn contours_match_matrix_vector_formulas() {
        let s = MajorityStructure::from_edges(6, &fixture_edges()).unwrap();
        for i in 0..6 {
            let e = BoolVec::unit(6, i);
            assert_eq!(s.lower_contour(i), s.m().transpose().mul_vec(&e));
            assert_eq!(s.upper_contour(i), s.m().mul_vec(&e));
            assert_eq!(s.horizon(i), s.t().mul_vec(&e));
        }
    }

    #[test]
    fn complete_mu_means_no_ties() {
        let s = MajorityStructure::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(s.is_tournament());
        assert_eq!(*s.t(), BoolMatrix::zeros(3));
    }

    #[test]
    fn empty_mu_means_all_ties() {
        let s = MajorityStructure::from_edges(3, &[]).unwrap();
        assert_eq!(*s.m(), BoolMatrix::zeros(3));
        assert_eq!(
            *s.t(),
            BoolMatrix::ones(3).without_diagonal()
        );
    }

    #[test]
    fn edge_list_rejections_name_the_pair() {
        assert_eq!(
            MajorityStructure::from_edges(3, &[(1, 1)]),
            Err(MajorityError::SelfLoop(2))
        );
        assert_eq!(
            MajorityStructure::from_edges(3, &[(0, 1), (1, 0)]),
            Err(MajorityError::BothDirections(2, 1))
        );
        assert_eq!(
            MajorityStructure::from_edges(3, &[(0, 5)]),
            Err(MajorityError::EdgeOutOfRange(1, 6, 3))
        );
    }

    #[test]
    fn explicit_matrices_accept_the_fixture() {
        let m = mat("010000 001000 100000 110010 000001 010100");
        let t = mat("000011 000010 000111 001000 111000 101000");
        let s = MajorityStructure::from_matrices(m.clone(), t.clone()).unwrap();
        assert_eq!(*s.m(), m);
        assert_eq!(*s.t(), t);
    }

    #[test]
    fn explicit_matrices_reject_reflexive_entry() {
        let mut m = BoolMatrix::zeros(3);
        m.set(0, 0, true);
        assert_eq!(
            MajorityStructure::from_matrices(m, BoolMatrix::zeros(3)),
            Err(MajorityError::ReflexiveMajority(1))
        );
    }

    #[test]
    fn explicit_matrices_report_partition_gap() {
        let m = mat("010000 001000 100000 110010 000001 010100");
        let mut t = mat("000011 000010 000111 001000 111000 101000");
        t.set(0, 4, false);
        t.set(4, 0, false);
        assert_eq!(
            MajorityStructure::from_matrices(m, t),
            Err(MajorityError::PartitionFailure(1, 5))
        );
    }

    #[test]
    fn condorcet_cycle_profile() {
        let p = PreferenceProfile::new(
            3,
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap();
        let s = MajorityStructure::from_profile(&p);
        assert_eq!(s.edges(), vec![(0, 1), (1, 2), (2, 0)]);
        assert!(s.is_tournament());
    }

    #[test]
    fn opposed_voters_tie_everything() {
        let p = PreferenceProfile::new(3, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let s = MajorityStructure::from_profile(&p);
        assert_eq!(*s.m(), BoolMatrix::zeros(3));
    }

    #[test]
    fn profile_validation() {
        assert_eq!(
            PreferenceProfile::new(3, vec![vec![0, 1, 2]]),
            Err(MajorityError::TooFewVoters)
        );
        assert_eq!(
            PreferenceProfile::new(3, vec![vec![0, 1, 2], vec![0, 0, 2]]),
            Err(MajorityError::NotAPermutation(2))
        );
    }

    #[test]
    fn profile_matches_direct_pairwise_count() {
        for seed in 0..20 {
            let p = gen::random_profile(4, 5, seed);
            let s = MajorityStructure::from_profile(&p);
            for i in 0..4 {
                for j in 0..4 {
                    if i == j {
                        continue;
                    }
                    let wins = p
                        .orders()
                        .iter()
                        .filter(|o| {
                            o.iter().position(|&a| a == i).unwrap()
                                < o.iter().position(|&a| a == j).unwrap()
                        })
                        .count();
                    let losses = p.voters() - wins;
                    assert_eq!(s.m().get(i, j), wins > losses);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn structure_identities_hold(seed in any::<u64>(), n in 1usize..=9, tie in 0.0f64..=1.0) {
            let s = gen::generate(&GenSpec::weak(n, tie, seed)).unwrap();
            let e = BoolMatrix::identity(n);
            let mtr = s.m().transpose();
            prop_assert_eq!(s.u(), &s.m().or(s.t()).or(&e));
            prop_assert_eq!(s.u(), &mtr.complement());
            prop_assert_eq!(s.m().or(&mtr).or(&e), s.t().complement());
            prop_assert_eq!(s.m().or(&mtr).or(s.t()).or(&e), BoolMatrix::ones(n));
        }

        #[test]
        fn contour_partition(seed in any::<u64>(), n in 1usize..=9) {
            let s = gen::generate(&GenSpec::weak(n, 0.4, seed)).unwrap();
            for i in 0..n {
                let together = s
                    .lower_contour(i)
                    .or(&s.upper_contour(i))
                    .or(&s.horizon(i))
                    .or(&BoolVec::unit(n, i));
                prop_assert_eq!(together, BoolVec::ones(n));
            }
        }

        #[test]
        fn edge_round_trip(seed in any::<u64>(), n in 1usize..=9) {
            let s = gen::generate(&GenSpec::weak(n, 0.3, seed)).unwrap();
            let rebuilt = MajorityStructure::from_edges(n, &s.edges()).unwrap();
            prop_assert_eq!(rebuilt, s);
        }

        #[test]
        fn profile_invariant_under_voter_permutation(seed in any::<u64>()) {
            let p = gen::random_profile(5, 7, seed);
            let mut orders = p.orders().to_vec();
            orders.reverse();
            orders.swap(1, 3);
            let q = PreferenceProfile::new(5, orders).unwrap();
            prop_assert_eq!(
                MajorityStructure::from_profile(&p),
                MajorityStructure::from_profile(&q)
            );
        }

        #[test]
        fn generated_tournaments_have_no_ties(seed in any::<u64>(), n in 1usize..=9) {
            let s = gen::generate(&GenSpec::new(n, Kind::Tournament, seed)).unwrap();
            prop_assert!(s.is_tournament());
            prop_assert!(s.require_tournament().is_ok());
        }
    }
}
