//! k-step transitive closures and their fixpoints.
//!
//! For a base relation R, level k of the ladder is (R + E)^k: reachability in
//! at most k steps, reflexive. Levels grow monotonically and stabilize at the
//! diameter d, the largest minimal-path length in the digraph; the ladder
//! keeps every level because the k-stable recursion consumes all of them.

use crate::boolmat::BoolMatrix;
use crate::majority::{MajorityStructure, NotTournament};

/// The accumulated closure sequence of one base relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureLadder {
    base: BoolMatrix,
    /// steps[k - 1] is level k; the last entry is the fixpoint.
    steps: Vec<BoolMatrix>,
    fixpoint_index: usize,
}

impl ClosureLadder {
    /// Builds levels (base + E)^k until two consecutive levels coincide.
    /// The fixpoint index d satisfies level(d) = level(d+1), and
    /// level(d) != level(d-1) unless d = 1.
    pub fn build(base: &BoolMatrix) -> Self {
        let reflexive = base.or(&BoolMatrix::identity(base.n()));
        let mut steps = vec![reflexive.clone()];
        loop {
            let next = steps.last().unwrap().mul(&reflexive);
            if next == *steps.last().unwrap() {
                break;
            }
            steps.push(next);
        }
        let fixpoint_index = steps.len();
        ClosureLadder {
            base: base.clone(),
            steps,
            fixpoint_index,
        }
    }

    pub fn base(&self) -> &BoolMatrix {
        &self.base
    }

    /// The diameter d at which the sequence stabilizes (>= 1).
    pub fn fixpoint_index(&self) -> usize {
        self.fixpoint_index
    }

    /// Level k (k >= 1); levels beyond the fixpoint equal the fixpoint.
    pub fn level(&self, k: usize) -> &BoolMatrix {
        assert!(k >= 1, "ladder levels start at 1");
        &self.steps[k.min(self.fixpoint_index) - 1]
    }

    /// The full transitive closure (reflexive by construction).
    pub fn fixpoint(&self) -> &BoolMatrix {
        self.steps.last().unwrap()
    }

    pub fn levels(&self) -> &[BoolMatrix] {
        &self.steps
    }
}

/// Ladder of M_(k) = (M + E)^k; fixpoint index is the mu-diameter d(mu).
pub fn m_ladder(s: &MajorityStructure) -> ClosureLadder {
    ClosureLadder::build(s.m())
}

/// Ladder of U_(k) = U^k (U is reflexive, so U + E = U); fixpoint index is
/// the nu-diameter d(nu).
pub fn u_ladder(s: &MajorityStructure) -> ClosureLadder {
    ClosureLadder::build(s.u())
}

/// kappa(mu): reflexive transitive closure of the majority relation.
pub fn transitive_closure_mu(s: &MajorityStructure) -> BoolMatrix {
    m_ladder(s).fixpoint().clone()
}

/// kappa(nu): reflexive transitive closure of upsilon.
pub fn transitive_closure_nu(s: &MajorityStructure) -> BoolMatrix {
    u_ladder(s).fixpoint().clone()
}

/// The relation triple induced by k-step reachability on a tournament:
/// U~ = M_(k), M~ its asymmetric part, T~ its symmetric part without the
/// diagonal. The triple plays exactly the role (M, T, U) plays for the base
/// relation, which is what the k-stable recursion substitutes into the
/// weakly-stable formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedRelations {
    pub u_tilde: BoolMatrix,
    pub m_tilde: BoolMatrix,
    pub t_tilde: BoolMatrix,
}

pub fn induced_relations(
    s: &MajorityStructure,
    k: usize,
) -> Result<InducedRelations, NotTournament> {
    s.require_tournament()?;
    assert!(k >= 1, "induced relations need k >= 1");
    let ladder = m_ladder(s);
    induced_from_ladder(&ladder, k)
}

/// Same as [`induced_relations`] but reuses an already-built M ladder.
pub fn induced_from_ladder(
    ladder: &ClosureLadder,
    k: usize,
) -> Result<InducedRelations, NotTournament> {
    let mk = ladder.level(k);
    Ok(InducedRelations {
        u_tilde: mk.clone(),
        m_tilde: mk.asym_part(),
        t_tilde: mk.sym_part().without_diagonal(),
    })
}
