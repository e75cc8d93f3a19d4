//! Solution concepts as Boolean matrix-vector formulas.
//!
//! Every operator here follows the same scheme: build a relation matrix Q
//! whose row i is saturated (all ones) exactly when alternative i belongs to
//! the concept, then extract the answer as complement(complement(Q) · a).
//! The k-stable families are defined for tournaments only and reject tied
//! instances instead of silently generalizing.

use crate::boolmat::{BoolMatrix, BoolVec};
use crate::closure::{self, ClosureLadder};
use crate::instance;
use crate::majority::{MajorityStructure, NotTournament};
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    NotTournament(#[from] NotTournament),
    #[error("k must be at least 1")]
    InvalidK,
}

/// The five covering-relation variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoveringVersion {
    V1,
    V2,
    V3,
    V4,
    V5,
}

impl CoveringVersion {
    pub const ALL: [CoveringVersion; 5] = [
        CoveringVersion::V1,
        CoveringVersion::V2,
        CoveringVersion::V3,
        CoveringVersion::V4,
        CoveringVersion::V5,
    ];

    pub fn number(self) -> u8 {
        match self {
            CoveringVersion::V1 => 1,
            CoveringVersion::V2 => 2,
            CoveringVersion::V3 => 3,
            CoveringVersion::V4 => 4,
            CoveringVersion::V5 => 5,
        }
    }

    pub fn from_number(v: u8) -> Option<Self> {
        Self::ALL.get(v.checked_sub(1)? as usize).copied()
    }
}

/// {i : row i of q is all ones} as complement(complement(q) · a).
fn saturated_rows(q: &BoolMatrix) -> BoolVec {
    q.complement()
        .mul_vec(&BoolVec::ones(q.n()))
        .complement()
}

/// Condorcet winners: complement(complement(M + E) · a). At most one bit.
pub fn condorcet_winner(s: &MajorityStructure) -> BoolVec {
    saturated_rows(&s.m().or(&BoolMatrix::identity(s.n())))
}

/// The core, all undominated alternatives: complement(complement(U) · a),
/// equivalently complement(M^tr · a).
pub fn core(s: &MajorityStructure) -> BoolVec {
    saturated_rows(s.u())
}

/// Uncovered set for one of the five covering versions; `modified` drops the
/// standalone tie term from the sum, which is exactly what distinguishes the
/// modified covering relations.
pub fn uncovered(s: &MajorityStructure, version: CoveringVersion, modified: bool) -> BoolVec {
    let (m, t) = (s.m(), s.t());
    let mut q = m.mul(m).or(m).or(&BoolMatrix::identity(s.n()));
    if !modified {
        q = q.or(t);
    }
    q = match version {
        CoveringVersion::V1 => q,
        CoveringVersion::V2 => q.or(&m.mul(t)),
        CoveringVersion::V3 => q.or(&t.mul(m)),
        CoveringVersion::V4 => q.or(&t.mul(m)).or(&m.mul(t)),
        CoveringVersion::V5 => q.or(&t.mul(t)).or(&t.mul(m)).or(&m.mul(t)),
    };
    saturated_rows(&q)
}

/// The uncaptured set:
/// complement(complement(M·T·M + M³ + T·M + M·T + M² + M + T + E) · a).
pub fn uncaptured(s: &MajorityStructure) -> BoolVec {
    let (m, t) = (s.m(), s.t());
    let m2 = m.mul(m);
    let q = m
        .mul(t)
        .mul(m)
        .or(&m2.mul(m))
        .or(&t.mul(m))
        .or(&m.mul(t))
        .or(&m2)
        .or(m)
        .or(t)
        .or(&BoolMatrix::identity(s.n()));
    saturated_rows(&q)
}

/// Union of minimal weakly stable sets, second version:
/// (M + E) · uc^III — the third-version uncovered set plus its dominators.
pub fn mws2(s: &MajorityStructure) -> BoolVec {
    let uc3 = uncovered(s, CoveringVersion::V3, false);
    s.m().or(&BoolMatrix::identity(s.n())).mul_vec(&uc3)
}

/// Union of minimal weakly stable sets, third version:
/// uc^II + diag((M + T) · complement(complement(M·U + E) · M)).
///
/// The first term is second-version uncoveredness; the second flags an i with
/// some j in L(i) or H(i) that no dominator of i covers under the modified
/// second covering relation.
pub fn mws3(s: &MajorityStructure) -> BoolVec {
    mws3_from_parts(s.m(), s.t(), s.u())
}

fn mws3_from_parts(m: &BoolMatrix, t: &BoolMatrix, u: &BoolMatrix) -> BoolVec {
    let e = BoolMatrix::identity(m.n());
    let uc2 = saturated_rows(&m.mul(u).or(u));
    let covered_by_dominators = m.mul(u).or(&e).complement().mul(m);
    let f = m.or(t).mul(&covered_by_dominators.complement()).diag();
    uc2.or(&f)
}

/// Union of minimal undominated sets (strong top cycles): the maximal
/// elements of the transitive closure of mu,
/// complement(complement(M_(d) + complement(M_(d)^tr)) · a) with d = d(mu).
pub fn minimal_undominated_union(s: &MajorityStructure) -> BoolVec {
    closure::m_ladder(s).fixpoint().max_general()
}

/// The untrapped set: complement(complement(M_(d) + T) · a) with d = d(mu).
pub fn untrapped(s: &MajorityStructure) -> BoolVec {
    saturated_rows(&closure::m_ladder(s).fixpoint().or(s.t()))
}

/// The minimal dominant set (weak top cycle):
/// complement(complement(U_(d)) · a) with d = d(nu).
pub fn minimal_dominant(s: &MajorityStructure) -> BoolVec {
    saturated_rows(closure::u_ladder(s).fixpoint())
}

/// Cumulative k-stable alternatives of a tournament:
/// complement(complement(M_(k)) · a).
pub fn p_k(s: &MajorityStructure, k: usize) -> Result<BoolVec, SolverError> {
    s.require_tournament()?;
    if k == 0 {
        return Err(SolverError::InvalidK);
    }
    Ok(saturated_rows(closure::m_ladder(s).level(k)))
}

/// The class of exactly-k-stable alternatives: P_(k) minus P_(k-1),
/// with P_(0) empty.
pub fn sp_k(s: &MajorityStructure, k: usize) -> Result<BoolVec, SolverError> {
    s.require_tournament()?;
    if k == 0 {
        return Err(SolverError::InvalidK);
    }
    let ladder = closure::m_ladder(s);
    let at_k = saturated_rows(ladder.level(k));
    if k == 1 {
        return Ok(at_k);
    }
    Ok(at_k.and_not(&saturated_rows(ladder.level(k - 1))))
}

/// Maximum degree of stability m: the least k with P_(k) = P_(k+1); at that
/// point P_(m) is the minimal dominant set.
pub fn stability_horizon(s: &MajorityStructure) -> Result<usize, SolverError> {
    s.require_tournament()?;
    let ladder = closure::m_ladder(s);
    let mut k = 1;
    let mut current = saturated_rows(ladder.level(1));
    loop {
        let next = saturated_rows(ladder.level(k + 1));
        if next == current {
            return Ok(k);
        }
        current = next;
        k += 1;
    }
}

/// Cumulative union of minimal x-stable sets for x <= k, by the recursion
/// s_(1) = (M + E) · p_(2), s_(k) = s_(k-1) + mws^III over the relations
/// induced by k-step reachability.
pub fn s_k(s: &MajorityStructure, k: usize) -> Result<BoolVec, SolverError> {
    s.require_tournament()?;
    if k == 0 {
        return Err(SolverError::InvalidK);
    }
    let ladder = closure::m_ladder(s);
    Ok(s_levels(s, &ladder, k).pop().unwrap())
}

/// The class of alternatives entering at exactly level k: S_(k) minus
/// S_(k-1), with S_(0) empty.
pub fn ss_k(s: &MajorityStructure, k: usize) -> Result<BoolVec, SolverError> {
    s.require_tournament()?;
    if k == 0 {
        return Err(SolverError::InvalidK);
    }
    let ladder = closure::m_ladder(s);
    let levels = s_levels(s, &ladder, k);
    if k == 1 {
        return Ok(levels[0].clone());
    }
    Ok(levels[k - 1].and_not(&levels[k - 2]))
}

/// s-levels 1..=k. Levels beyond the first reuse the weakly-stable formula
/// with (M~, T~, U~) substituted for (M, T, U).
fn s_levels(s: &MajorityStructure, ladder: &ClosureLadder, k: usize) -> Vec<BoolVec> {
    let p2 = saturated_rows(ladder.level(2));
    let mut levels = vec![s.m().or(&BoolMatrix::identity(s.n())).mul_vec(&p2)];
    for j in 2..=k {
        let ind = closure::induced_from_ladder(ladder, j).expect("tournament checked by callers");
        let step = mws3_from_parts(&ind.m_tilde, &ind.t_tilde, &ind.u_tilde);
        let prev = levels.last().unwrap();
        levels.push(prev.or(&step));
    }
    levels
}

// ---------------------------------------------------------------------------
// Whole-instance reports
// ---------------------------------------------------------------------------

/// Identifier of one solution concept, with the degree k where applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConceptId {
    Cw,
    Cr,
    Uc(CoveringVersion),
    UcM(CoveringVersion),
    Ucp,
    Mws2,
    Mws3,
    Mu,
    Ut,
    Md,
    P(usize),
    Sp(usize),
    S(usize),
    Ss(usize),
}

impl fmt::Display for ConceptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptId::Cw => write!(f, "CW"),
            ConceptId::Cr => write!(f, "CR"),
            ConceptId::Uc(v) => write!(f, "UC{}", v.number()),
            ConceptId::UcM(v) => write!(f, "UC{}M", v.number()),
            ConceptId::Ucp => write!(f, "UCP"),
            ConceptId::Mws2 => write!(f, "MWS2"),
            ConceptId::Mws3 => write!(f, "MWS3"),
            ConceptId::Mu => write!(f, "MU"),
            ConceptId::Ut => write!(f, "UT"),
            ConceptId::Md => write!(f, "MD"),
            ConceptId::P(k) => write!(f, "P{k}"),
            ConceptId::Sp(k) => write!(f, "SP{k}"),
            ConceptId::S(k) => write!(f, "S{k}"),
            ConceptId::Ss(k) => write!(f, "SS{k}"),
        }
    }
}

impl FromStr for ConceptId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.to_ascii_uppercase();
        let bad = || format!("unknown concept id: {s:?}");
        match s.as_str() {
            "CW" => return Ok(ConceptId::Cw),
            "CR" => return Ok(ConceptId::Cr),
            "UCP" => return Ok(ConceptId::Ucp),
            "MWS2" => return Ok(ConceptId::Mws2),
            "MWS3" => return Ok(ConceptId::Mws3),
            "MU" => return Ok(ConceptId::Mu),
            "UT" => return Ok(ConceptId::Ut),
            "MD" => return Ok(ConceptId::Md),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("UC") {
            let (digits, modified) = match rest.strip_suffix('M') {
                Some(d) => (d, true),
                None => (rest, false),
            };
            let v = digits
                .parse::<u8>()
                .ok()
                .and_then(CoveringVersion::from_number)
                .ok_or_else(bad)?;
            return Ok(if modified { ConceptId::UcM(v) } else { ConceptId::Uc(v) });
        }
        for (prefix, build) in [
            ("SP", ConceptId::Sp as fn(usize) -> ConceptId),
            ("SS", ConceptId::Ss as fn(usize) -> ConceptId),
            ("P", ConceptId::P as fn(usize) -> ConceptId),
            ("S", ConceptId::S as fn(usize) -> ConceptId),
        ] {
            if let Some(digits) = s.strip_prefix(prefix) {
                if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                    let k: usize = digits.parse().map_err(|_| bad())?;
                    if k == 0 {
                        return Err(bad());
                    }
                    return Ok(build(k));
                }
            }
        }
        Err(bad())
    }
}

impl Serialize for ConceptId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConceptEntry {
    pub concept: ConceptId,
    /// Sorted 1-based labels.
    pub members: Vec<usize>,
}

/// Every applicable concept of one instance, with the computed diameters and
/// (for tournaments) the maximum degree of stability.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionReport {
    pub digest: String,
    pub n: usize,
    pub tournament: bool,
    pub d_mu: usize,
    pub d_nu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub concepts: Vec<ConceptEntry>,
}

impl SolutionReport {
    pub fn get(&self, id: ConceptId) -> Option<&[usize]> {
        self.concepts
            .iter()
            .find(|entry| entry.concept == id)
            .map(|entry| entry.members.as_slice())
    }
}

/// Computes every concept: the general family always, the k-stable families
/// when the instance is a tournament. Where a ladder is needed the two
/// closure ladders are shared; concepts are otherwise evaluated independently.
pub fn solve_all(s: &MajorityStructure) -> SolutionReport {
    let m_lad = closure::m_ladder(s);
    let u_lad = closure::u_ladder(s);
    let tournament = s.is_tournament();

    let mut concepts = vec![
        entry(ConceptId::Cw, condorcet_winner(s)),
        entry(ConceptId::Cr, core(s)),
    ];
    for v in CoveringVersion::ALL {
        concepts.push(entry(ConceptId::Uc(v), uncovered(s, v, false)));
    }
    for v in CoveringVersion::ALL {
        concepts.push(entry(ConceptId::UcM(v), uncovered(s, v, true)));
    }
    concepts.push(entry(ConceptId::Ucp, uncaptured(s)));
    concepts.push(entry(ConceptId::Mws2, mws2(s)));
    concepts.push(entry(ConceptId::Mws3, mws3(s)));
    concepts.push(entry(
        ConceptId::Mu,
        m_lad.fixpoint().max_general(),
    ));
    concepts.push(entry(
        ConceptId::Ut,
        saturated_rows(&m_lad.fixpoint().or(s.t())),
    ));
    let md = saturated_rows(u_lad.fixpoint());
    concepts.push(entry(ConceptId::Md, md.clone()));

    let mut m_value = None;
    if tournament {
        let mut horizon = 1;
        let mut p_levels = vec![saturated_rows(m_lad.level(1))];
        loop {
            let next = saturated_rows(m_lad.level(horizon + 1));
            if next == *p_levels.last().unwrap() {
                break;
            }
            p_levels.push(next);
            horizon += 1;
        }
        m_value = Some(horizon);
        for (i, p) in p_levels.iter().enumerate() {
            concepts.push(entry(ConceptId::P(i + 1), p.clone()));
        }
        let mut prev = BoolVec::zeros(s.n());
        for (i, p) in p_levels.iter().enumerate() {
            concepts.push(entry(ConceptId::Sp(i + 1), p.and_not(&prev)));
            prev = p.clone();
        }
        // The cumulative stable-set union must land on MD within m levels.
        let s_levels = s_levels(s, &m_lad, horizon);
        assert_eq!(
            *s_levels.last().unwrap(),
            md,
            "stable-set recursion did not stabilize on the minimal dominant set"
        );
        for (i, sk) in s_levels.iter().enumerate() {
            concepts.push(entry(ConceptId::S(i + 1), sk.clone()));
        }
        let mut prev = BoolVec::zeros(s.n());
        for (i, sk) in s_levels.iter().enumerate() {
            concepts.push(entry(ConceptId::Ss(i + 1), sk.and_not(&prev)));
            prev = sk.clone();
        }
    }

    SolutionReport {
        digest: instance::digest(s),
        n: s.n(),
        tournament,
        d_mu: m_lad.fixpoint_index(),
        d_nu: u_lad.fixpoint_index(),
        m: m_value,
        concepts,
    }
}

fn entry(concept: ConceptId, members: BoolVec) -> ConceptEntry {
    ConceptEntry {
        concept,
        members: members.labels(),
    }
}
