//! Definition-level reference implementations of every solution concept:
//! contour-set scans, subset enumeration and graph search, never matrix
//! formulas. Deliberately naive — these exist to cross-validate the formula
//! path, not to scale.

use crate::boolmat::{BoolMatrix, BoolVec};
use crate::majority::{MajorityStructure, NotTournament};
use crate::solvers::CoveringVersion;
use std::collections::VecDeque;
use thiserror::Error;

/// Default ceiling for subset-enumeration oracles (4096 subsets).
pub const DEFAULT_SUBSET_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("subset enumeration over {n} alternatives exceeds the configured bound {bound}")]
    SubsetBoundExceeded { n: usize, bound: usize },
    #[error(transparent)]
    NotTournament(#[from] NotTournament),
    #[error("weak stability is undefined for the empty set")]
    EmptySet,
}

/// The three weak-stability definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityVersion {
    /// Outside dominators of members must be dominated back from inside.
    V1,
    /// Every outsider is dominated from inside.
    V2,
    /// Every outsider is dominated from inside or tied with a member.
    V3,
}

// ---------------------------------------------------------------------------
// Graph search
// ---------------------------------------------------------------------------

/// Minimal mu-path lengths for every ordered pair; `None` when unreachable,
/// 0 on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Vec<Option<usize>>>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.dist[i][j]
    }

    /// max_j l(i, j); `None` when some alternative is unreachable from i.
    pub fn eccentricity(&self, i: usize) -> Option<usize> {
        let mut worst = 0;
        for j in 0..self.n {
            worst = worst.max(self.dist[i][j]?);
        }
        Some(worst)
    }
}

fn adjacency(m: &BoolMatrix) -> Vec<Vec<usize>> {
    (0..m.n()).map(|i| m.row(i).members()).collect()
}

fn bfs_table(adj: &[Vec<usize>]) -> DistanceTable {
    let n = adj.len();
    let mut dist = vec![vec![None; n]; n];
    for (start, row) in dist.iter_mut().enumerate() {
        row[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let next = row[v].unwrap() + 1;
            for &w in &adj[v] {
                if row[w].is_none() {
                    row[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, dist }
}

/// Breadth-first distances over mu-edges.
pub fn distances(s: &MajorityStructure) -> DistanceTable {
    bfs_table(&adjacency(s.m()))
}

/// Breadth-first distances over upsilon-edges (mu and ties; loops dropped).
pub fn distances_nu(s: &MajorityStructure) -> DistanceTable {
    bfs_table(&adjacency(&s.u().without_diagonal()))
}

/// Matrix with (i, j) set iff i = j or l(i, j) <= k; the reference for the
/// k-step closure ladder.
pub fn reachability_within(table: &DistanceTable, k: usize) -> BoolMatrix {
    let n = table.n();
    let mut out = BoolMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if table.get(i, j).is_some_and(|d| d <= k) {
                out.set(i, j, true);
            }
        }
    }
    out
}

/// Largest minimal-path length over reachable ordered pairs, floored at 1 to
/// match the ladder convention for edgeless relations.
pub fn diameter(table: &DistanceTable) -> usize {
    let mut worst = 1;
    for i in 0..table.n() {
        for j in 0..table.n() {
            if i != j {
                if let Some(d) = table.get(i, j) {
                    worst = worst.max(d);
                }
            }
        }
    }
    worst
}

/// Floyd–Warshall style reachability closure (irreflexive unless cyclic);
/// an algorithm independent of the power ladder.
#[allow(clippy::needless_range_loop)]
pub fn warshall_closure(m: &BoolMatrix) -> BoolMatrix {
    let n = m.n();
    let mut reach = m.to_dense();
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] != 0 {
                for j in 0..n {
                    if reach[k][j] != 0 {
                        reach[i][j] = 1;
                    }
                }
            }
        }
    }
    BoolMatrix::from_dense(&reach)
}

/// Triple-loop Boolean product over dense rows; the reference for the
/// bit-packed kernel and the baseline the benchmark compares against.
pub fn naive_mul(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len();
    let mut c = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if a[i][k] != 0 && b[k][j] != 0 {
                    c[i][j] = 1;
                    break;
                }
            }
        }
    }
    c
}

// ---------------------------------------------------------------------------
// Contour scans
// ---------------------------------------------------------------------------

/// Definitional maximality scan: i is maximal unless some j relates to i
/// without i relating back.
pub fn max_scan(r: &BoolMatrix) -> BoolVec {
    let n = r.n();
    let mut out = BoolVec::ones(n);
    for i in 0..n {
        for j in 0..n {
            if j != i && r.get(j, i) && !r.get(i, j) {
                out.set(i, false);
            }
        }
    }
    out
}

/// {i : i dominates every other alternative}.
pub fn condorcet_winner(s: &MajorityStructure) -> BoolVec {
    let n = s.n();
    let mut out = BoolVec::zeros(n);
    for i in 0..n {
        if s.lower_contour(i).count() == n - 1 {
            out.set(i, true);
        }
    }
    out
}

/// {i : nothing dominates i}.
pub fn core(s: &MajorityStructure) -> BoolVec {
    let n = s.n();
    let mut out = BoolVec::zeros(n);
    for i in 0..n {
        if s.upper_contour(i).is_zero() {
            out.set(i, true);
        }
    }
    out
}

/// Covering relation, entry (i, j) set iff i covers j. The unmodified
/// versions additionally require i mu j; the modified ones drop it and may
/// acquire a symmetric component.
///
/// Modified fifth version: once the domination requirement is dropped, a tie
/// partner can be the coverer, and the partner itself is exempt from the
/// horizon containment — j's own slot in H(j) can never sit in L(i). The
/// uncovered criterion ("for every j there is a two-step path of any kind")
/// encodes exactly this, so the relation here carves {i} out of H(j) and
/// only requires that j does not dominate i.
pub fn covering_relation(
    s: &MajorityStructure,
    version: CoveringVersion,
    modified: bool,
) -> BoolMatrix {
    let n = s.n();
    let contours: Vec<(BoolVec, BoolVec, BoolVec)> = (0..n)
        .map(|i| (s.lower_contour(i), s.upper_contour(i), s.horizon(i)))
        .collect();
    let mut rel = BoolMatrix::zeros(n);
    for i in 0..n {
        let (li, di, hi) = &contours[i];
        for (j, (lj, dj, hj)) in contours.iter().enumerate() {
            if i == j || (!modified && !s.m().get(i, j)) {
                continue;
            }
            let holds = match (version, modified) {
                (CoveringVersion::V1, _) => lj.is_subset_of(&li.or(hi)),
                (CoveringVersion::V2, _) => lj.is_subset_of(li),
                (CoveringVersion::V3, _) => di.is_subset_of(dj),
                (CoveringVersion::V4, _) => lj.is_subset_of(li) && di.is_subset_of(dj),
                (CoveringVersion::V5, false) => hj.or(lj).is_subset_of(li),
                (CoveringVersion::V5, true) => {
                    let mut need = hj.or(lj);
                    need.set(i, false);
                    !s.m().get(j, i) && need.is_subset_of(li)
                }
            };
            if holds {
                rel.set(i, j, true);
            }
        }
    }
    rel
}

/// {i : nothing covers i} under the given covering version. Coincides with
/// the maximal elements for the unmodified (asymmetric) versions.
pub fn uncovered_set(s: &MajorityStructure, version: CoveringVersion, modified: bool) -> BoolVec {
    let rel = covering_relation(s, version, modified);
    let n = s.n();
    let mut out = BoolVec::ones(n);
    for i in 0..n {
        for j in 0..n {
            if rel.get(j, i) {
                out.set(i, false);
            }
        }
    }
    out
}

/// Capturing relation, entry (j, i) set iff j captures i: j dominates i and
/// i can reach j neither by a qualified two-step path (at least one mu-step)
/// nor by a three-step path whose first and last steps are mu-steps.
pub fn captured_relation(s: &MajorityStructure) -> BoolMatrix {
    let n = s.n();
    let mut rel = BoolMatrix::zeros(n);
    for i in 0..n {
        let li = s.lower_contour(i);
        let hi = s.horizon(i);
        for j in 0..n {
            if i == j || !s.m().get(j, i) {
                continue;
            }
            let dj = s.upper_contour(j);
            let hj = s.horizon(j);
            let two_step = li.intersects(&dj) || li.intersects(&hj) || hi.intersects(&dj);
            let three_step = li
                .members()
                .into_iter()
                .any(|k| s.lower_contour(k).or(&s.horizon(k)).intersects(&dj));
            if !two_step && !three_step {
                rel.set(j, i, true);
            }
        }
    }
    rel
}

/// {i : nothing captures i}.
pub fn uncaptured_set(s: &MajorityStructure) -> BoolVec {
    let rel = captured_relation(s);
    let n = s.n();
    let mut out = BoolVec::ones(n);
    for i in 0..n {
        for j in 0..n {
            if rel.get(j, i) {
                out.set(i, false);
            }
        }
    }
    out
}

/// Trapping relation, entry (i, j) set iff i traps j: i dominates j and j
/// cannot reach i through mu.
pub fn trapped_relation(s: &MajorityStructure) -> BoolMatrix {
    let n = s.n();
    let table = distances(s);
    let mut rel = BoolMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && s.m().get(i, j) && table.get(j, i).is_none() {
                rel.set(i, j, true);
            }
        }
    }
    rel
}

/// {i : nothing traps i}.
pub fn untrapped_set(s: &MajorityStructure) -> BoolVec {
    let rel = trapped_relation(s);
    let n = s.n();
    let mut out = BoolVec::ones(n);
    for i in 0..n {
        for j in 0..n {
            if rel.get(j, i) {
                out.set(i, false);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Strongly connected components
// ---------------------------------------------------------------------------

/// Union of source components of the mu-digraph condensation: exactly the
/// union of minimal undominated sets (an undominated set is one closed under
/// incoming edges, and the minimal such sets are the source components).
pub fn minimal_undominated_union(s: &MajorityStructure) -> BoolVec {
    let n = s.n();
    let adj = adjacency(s.m());
    let comp = kosaraju(&adj);
    let comp_count = comp.iter().max().map_or(0, |&c| c + 1);
    let mut has_incoming = vec![false; comp_count];
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            if comp[i] != comp[j] {
                has_incoming[comp[j]] = true;
            }
        }
    }
    let mut out = BoolVec::zeros(n);
    for i in 0..n {
        if !has_incoming[comp[i]] {
            out.set(i, true);
        }
    }
    out
}

/// Kosaraju's two-pass SCC, iterative; returns the component id per vertex.
fn kosaraju(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // Post-order DFS with an explicit stack of (vertex, next child index).
        let mut stack = vec![(start, 0usize)];
        seen[start] = true;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, idx) = stack[top];
            if idx < adj[v].len() {
                stack[top].1 += 1;
                let w = adj[v][idx];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut radj = vec![Vec::new(); n];
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            radj[j].push(i);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut current = 0;
    for &start in order.iter().rev() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = current;
        while let Some(v) = stack.pop() {
            for &w in &radj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = current;
                    stack.push(w);
                }
            }
        }
        current += 1;
    }
    comp
}

// ---------------------------------------------------------------------------
// Subset enumeration
// ---------------------------------------------------------------------------

/// Per-alternative contour bitmasks for subset work.
struct Masks {
    full: u32,
    l: Vec<u32>,
    d: Vec<u32>,
    h: Vec<u32>,
}

impl Masks {
    fn new(s: &MajorityStructure) -> Self {
        let n = s.n();
        assert!(n <= 32, "subset oracles are limited to 32 alternatives");
        let to_mask = |v: BoolVec| v.members().iter().fold(0u32, |acc, &i| acc | 1 << i);
        Masks {
            full: if n == 32 { !0 } else { (1u32 << n) - 1 },
            l: (0..n).map(|i| to_mask(s.lower_contour(i))).collect(),
            d: (0..n).map(|i| to_mask(s.upper_contour(i))).collect(),
            h: (0..n).map(|i| to_mask(s.horizon(i))).collect(),
        }
    }

    fn stable(&self, b: u32, version: StabilityVersion) -> bool {
        let outside = self.full & !b;
        let mut rest = outside;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let defended = match version {
                StabilityVersion::V1 => b & self.l[j] == 0 || b & self.d[j] != 0,
                StabilityVersion::V2 => b & self.d[j] != 0,
                StabilityVersion::V3 => b & (self.d[j] | self.h[j]) != 0,
            };
            if !defended {
                return false;
            }
        }
        true
    }
}

fn vec_from_mask(n: usize, mask: u32) -> BoolVec {
    let mut v = BoolVec::zeros(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

fn mask_from_vec(v: &BoolVec) -> u32 {
    v.members().iter().fold(0u32, |acc, &i| acc | 1 << i)
}

fn check_bound(n: usize, bound: usize) -> Result<(), OracleError> {
    if n > bound || n > 32 {
        Err(OracleError::SubsetBoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// Literal weak-stability predicate for a nonempty subset.
pub fn is_weakly_stable(
    s: &MajorityStructure,
    b: &BoolVec,
    version: StabilityVersion,
) -> Result<bool, OracleError> {
    if b.is_zero() {
        return Err(OracleError::EmptySet);
    }
    Ok(Masks::new(s).stable(mask_from_vec(b), version))
}

/// Union of all minimal weakly stable sets under the given version.
///
/// Versions 2 and 3 are monotone (supersets of stable sets stay stable), so
/// minimality is equivalent to every one-element-removed subset failing; the
/// first version is not known to be monotone and gets the full proper-subset
/// check.
pub fn minimal_weakly_stable_union(
    s: &MajorityStructure,
    version: StabilityVersion,
    bound: usize,
) -> Result<BoolVec, OracleError> {
    let n = s.n();
    check_bound(n, bound)?;
    let masks = Masks::new(s);
    let full = masks.full;
    let stable: Vec<bool> = (0..=full as usize)
        .map(|b| b != 0 && masks.stable(b as u32, version))
        .collect();
    let mut union = 0u32;
    for b in 1..=full {
        if !stable[b as usize] {
            continue;
        }
        let minimal = match version {
            StabilityVersion::V1 => {
                // Full proper-subset scan.
                let mut sub = (b - 1) & b;
                loop {
                    if sub != 0 && stable[sub as usize] {
                        break false;
                    }
                    if sub == 0 {
                        break true;
                    }
                    sub = (sub - 1) & b;
                }
            }
            _ => {
                let mut members = b;
                let mut min = true;
                while members != 0 {
                    let x = members.trailing_zeros();
                    members &= members - 1;
                    let reduced = b & !(1 << x);
                    if reduced != 0 && stable[reduced as usize] {
                        min = false;
                        break;
                    }
                }
                min
            }
        };
        if minimal {
            union |= b;
        }
    }
    Ok(vec_from_mask(n, union))
}

/// The unique minimal dominant set, found by ascending-size enumeration
/// (dominant sets are nested, so the smallest one is the answer).
pub fn minimal_dominant_set(s: &MajorityStructure, bound: usize) -> Result<BoolVec, OracleError> {
    let n = s.n();
    check_bound(n, bound)?;
    let masks = Masks::new(s);
    let dominant = |b: u32| -> bool {
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Each member must dominate every outsider.
            if masks.full & !b & !masks.l[i] != 0 {
                return false;
            }
        }
        true
    };
    for size in 1..=n {
        for b in 1..=masks.full {
            if b.count_ones() as usize == size && dominant(b) {
                return Ok(vec_from_mask(n, b));
            }
        }
    }
    Ok(BoolVec::ones(n))
}

/// Minimal undominated union by brute enumeration (test aid for the
/// condensation route); undominated is not monotone, so minimality uses the
/// full proper-subset scan.
pub fn minimal_undominated_by_enumeration(
    s: &MajorityStructure,
    bound: usize,
) -> Result<BoolVec, OracleError> {
    let n = s.n();
    check_bound(n, bound)?;
    let masks = Masks::new(s);
    let undominated = |b: u32| -> bool {
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks.d[i] & !b != 0 {
                return false;
            }
        }
        true
    };
    let ok: Vec<bool> = (0..=masks.full as usize)
        .map(|b| b != 0 && undominated(b as u32))
        .collect();
    let mut union = 0u32;
    for b in 1..=masks.full {
        if !ok[b as usize] {
            continue;
        }
        let mut sub = (b - 1) & b;
        let mut minimal = true;
        while sub != 0 {
            if ok[sub as usize] {
                minimal = false;
                break;
            }
            sub = (sub - 1) & b;
        }
        if minimal {
            union |= b;
        }
    }
    Ok(vec_from_mask(n, union))
}

// ---------------------------------------------------------------------------
// k-stability (tournaments)
// ---------------------------------------------------------------------------

/// Degree of stability of every nonempty subset: the least t such that every
/// alternative lies within t mu-steps of the set, `None` if some alternative
/// is unreachable.
fn set_degrees(masks: &Masks) -> Vec<Option<usize>> {
    let full = masks.full;
    let mut deg = vec![None; full as usize + 1];
    for b in 1..=full {
        let mut reached = b;
        let mut t = 0;
        loop {
            if reached == full {
                deg[b as usize] = Some(t);
                break;
            }
            let mut grown = reached;
            let mut rest = reached;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= masks.l[i];
            }
            if grown == reached {
                break; // stuck: some alternative unreachable
            }
            reached = grown;
            t += 1;
        }
    }
    deg
}

/// Union of all minimal k-stable sets of a tournament. The degree is not
/// monotone in the subset order, so minimality scans all proper subsets.
pub fn k_stable_set_union(
    s: &MajorityStructure,
    k: usize,
    bound: usize,
) -> Result<BoolVec, OracleError> {
    s.require_tournament()?;
    let n = s.n();
    check_bound(n, bound)?;
    let masks = Masks::new(s);
    let deg = set_degrees(&masks);
    let mut union = 0u32;
    for b in 1..=masks.full {
        if deg[b as usize] != Some(k) {
            continue;
        }
        let mut sub = (b - 1) & b;
        let mut minimal = true;
        while sub != 0 {
            if deg[sub as usize] == Some(k) {
                minimal = false;
                break;
            }
            sub = (sub - 1) & b;
        }
        if minimal {
            union |= b;
        }
    }
    Ok(vec_from_mask(n, union))
}

/// Union of minimal x-stable sets over all x <= k (the cumulative family).
pub fn cumulative_stable_set_union(
    s: &MajorityStructure,
    k: usize,
    bound: usize,
) -> Result<BoolVec, OracleError> {
    let mut acc = BoolVec::zeros(s.n());
    for x in 1..=k {
        acc = acc.or(&k_stable_set_union(s, x, bound)?);
    }
    Ok(acc)
}

/// {i : every alternative reachable from i within k steps} via eccentricity.
pub fn cumulative_stable_alternatives(
    s: &MajorityStructure,
    k: usize,
) -> Result<BoolVec, OracleError> {
    s.require_tournament()?;
    let table = distances(s);
    let n = s.n();
    let mut out = BoolVec::zeros(n);
    for i in 0..n {
        if table.eccentricity(i).is_some_and(|e| e <= k) {
            out.set(i, true);
        }
    }
    Ok(out)
}

/// The class of exactly-k-stable alternatives: in the cumulative set at k
/// but not at k - 1.
pub fn k_stable_alternatives(s: &MajorityStructure, k: usize) -> Result<BoolVec, OracleError> {
    let at_k = cumulative_stable_alternatives(s, k)?;
    if k == 1 {
        return Ok(at_k);
    }
    Ok(at_k.and_not(&cumulative_stable_alternatives(s, k - 1)?))
}

/// Maximum degree of stability: the least k >= 1 at which the cumulative
/// alternative sets stop growing.
pub fn stability_horizon(s: &MajorityStructure) -> Result<usize, OracleError> {
    s.require_tournament()?;
    let table = distances(s);
    let mut worst = 1;
    for i in 0..s.n() {
        if let Some(e) = table.eccentricity(i) {
            worst = worst.max(e);
        }
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// The weakly-stable membership criterion
// ---------------------------------------------------------------------------

/// Direct evaluation of the third-version membership criterion: i belongs to
/// a minimal weakly stable set (v3) iff i is uncovered under the second
/// covering version, or some j in L(i) or H(i) has its lower contour
/// contained in no dominator's lower contour (modified second covering).
pub fn mws3_criterion(s: &MajorityStructure) -> BoolVec {
    let n = s.n();
    let contours: Vec<(BoolVec, BoolVec, BoolVec)> = (0..n)
        .map(|i| (s.lower_contour(i), s.upper_contour(i), s.horizon(i)))
        .collect();
    let mut out = BoolVec::zeros(n);
    for i in 0..n {
        let (li, di, hi) = &contours[i];
        let uncovered_v2 = !di
            .members()
            .into_iter()
            .any(|j| li.is_subset_of(&contours[j].0));
        let witness = li.or(hi).members().into_iter().any(|j| {
            let lj = &contours[j].0;
            !di.members().into_iter().any(|k| lj.is_subset_of(&contours[k].0))
        });
        if uncovered_v2 || witness {
            out.set(i, true);
        }
    }
    out
}
