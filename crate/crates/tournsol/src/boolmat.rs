//! Boolean matrix and vector algebra.
//!
//! Everything downstream (majority structures, closures, solution concepts)
//! is expressed over these two types. Addition is logical OR, multiplication
//! is the AND-OR product. Rows are bit-packed into `u64` words, so a product
//! costs O(n³/64): for every set bit `k` of a row of the left factor, the
//! whole row `k` of the right factor is OR-ed in word by word.
//!
//! Indices are 0-based here; 1-based labels exist only at I/O boundaries.

use std::fmt;
use std::ops::{BitAnd, BitOr, Mul};
use std::str::FromStr;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Mask selecting the valid bits of the last word of an n-bit row.
fn tail_mask(n: usize) -> u64 {
    match n % WORD_BITS {
        0 => !0,
        r => (1u64 << r) - 1,
    }
}

/// Square 0/1 matrix over `n` alternatives; entry (i, j) = 1 iff the pair
/// (i, j) is in the represented relation.
///
/// Invariant: bits beyond column `n - 1` in the last word of each row are
/// always zero, so `==` is plain word equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    wpr: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    fn empty(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let wpr = words_for(n);
        BoolMatrix {
            n,
            wpr,
            bits: vec![0; n * wpr],
        }
    }

    /// All-zero matrix (the relation O).
    pub fn zeros(n: usize) -> Self {
        Self::empty(n)
    }

    /// All-one matrix (the relation I).
    pub fn ones(n: usize) -> Self {
        let mut m = Self::empty(n);
        let tail = tail_mask(n);
        for (w, word) in m.bits.iter_mut().enumerate() {
            *word = if (w + 1) % m.wpr == 0 { tail } else { !0 };
        }
        m
    }

    /// Identity matrix (the relation of equality, E).
    pub fn identity(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from dense 0/1 rows. Every row must have length `rows.len()`.
    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let n = rows.len();
        let mut m = Self::empty(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has length {}, want {n}", row.len());
            for (j, &v) in row.iter().enumerate() {
                debug_assert!(v <= 1, "entries must be 0 or 1");
                m.set(i, j, v != 0);
            }
        }
        m
    }

    /// Exports as dense 0/1 rows; inverse of [`BoolMatrix::from_dense`].
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        self.bits[i * self.wpr + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        let w = i * self.wpr + j / WORD_BITS;
        let bit = 1u64 << (j % WORD_BITS);
        if value {
            self.bits[w] |= bit;
        } else {
            self.bits[w] &= !bit;
        }
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.wpr..(i + 1) * self.wpr]
    }

    /// Row i as the characteristic vector of { j : (i, j) in the relation }.
    pub fn row(&self, i: usize) -> BoolVec {
        BoolVec {
            n: self.n,
            words: self.row_words(i).to_vec(),
        }
    }

    fn check_dim(&self, other: &Self, op: &str) {
        assert_eq!(
            self.n, other.n,
            "dimension mismatch in {op}: {} vs {}",
            self.n, other.n
        );
    }

    /// Elementwise OR (matrix addition of the Boolean algebra).
    pub fn or(&self, other: &Self) -> Self {
        self.check_dim(other, "or");
        let mut out = self.clone();
        for (o, &w) in out.bits.iter_mut().zip(&other.bits) {
            *o |= w;
        }
        out
    }

    /// Elementwise AND.
    pub fn and(&self, other: &Self) -> Self {
        self.check_dim(other, "and");
        let mut out = self.clone();
        for (o, &w) in out.bits.iter_mut().zip(&other.bits) {
            *o &= w;
        }
        out
    }

    /// Elementwise logical inversion.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        let tail = tail_mask(self.n);
        for (w, word) in out.bits.iter_mut().enumerate() {
            *word = !*word;
            if (w + 1) % out.wpr == 0 {
                *word &= tail;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::empty(self.n);
        for i in 0..self.n {
            for (w, &word) in self.row_words(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Copy with the diagonal cleared.
    pub fn without_diagonal(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.set(i, i, false);
        }
        out
    }

    /// Boolean AND-OR product: (A·B)_ij = OR_k (a_ik AND b_kj).
    ///
    /// Row i of the result is the OR of the rows of B selected by the set
    /// bits of row i of A, accumulated word-wide. Fixed-width kernels keep
    /// the accumulator in registers for the row widths that matter; a row
    /// that reaches all ones cannot grow, so accumulation stops there.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_dim(other, "mul");
        let mut out = Self::empty(self.n);
        let tail = tail_mask(self.n);
        match self.wpr {
            1 => mul_kernel::<1>(self.n, tail, &self.bits, &other.bits, &mut out.bits),
            2 => mul_kernel::<2>(self.n, tail, &self.bits, &other.bits, &mut out.bits),
            3 => mul_kernel::<3>(self.n, tail, &self.bits, &other.bits, &mut out.bits),
            4 => mul_kernel::<4>(self.n, tail, &self.bits, &other.bits, &mut out.bits),
            8 => mul_kernel::<8>(self.n, tail, &self.bits, &other.bits, &mut out.bits),
            wpr => mul_general(self.n, wpr, tail, &self.bits, &other.bits, &mut out.bits),
        }
        out
    }

    /// Matrix-vector product: bit i of the result is OR_k (a_ik AND v_k).
    pub fn mul_vec(&self, v: &BoolVec) -> BoolVec {
        assert_eq!(
            self.n, v.n,
            "dimension mismatch in mul_vec: {} vs {}",
            self.n, v.n
        );
        let mut out = BoolVec::zeros(self.n);
        for i in 0..self.n {
            let hit = self
                .row_words(i)
                .iter()
                .zip(&v.words)
                .any(|(&a, &b)| a & b != 0);
            if hit {
                out.set(i, true);
            }
        }
        out
    }

    /// k-fold Boolean product; k = 0 yields the identity.
    pub fn power(&self, k: usize) -> Self {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Vector of diagonal entries.
    pub fn diag(&self) -> BoolVec {
        let mut out = BoolVec::zeros(self.n);
        for i in 0..self.n {
            if self.get(i, i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Asymmetric part: pairs present in one direction only.
    /// P(R) = complement(R^tr + complement(R)).
    pub fn asym_part(&self) -> Self {
        self.transpose().or(&self.complement()).complement()
    }

    /// Symmetric part: pairs present in both directions.
    /// S(R) = complement(complement(R^tr) + complement(R)).
    pub fn sym_part(&self) -> Self {
        self.transpose()
            .complement()
            .or(&self.complement())
            .complement()
    }

    /// Maximal elements of an arbitrary relation:
    /// complement((R + complement(R^tr)) · a) — i is maximal unless some j
    /// beats it without a reply.
    pub fn max_general(&self) -> BoolVec {
        let q = self.or(&self.transpose().complement()).complement();
        q.mul_vec(&BoolVec::ones(self.n)).complement()
    }

    /// Maximal elements when the relation is complete:
    /// complement(complement(R + E) · a).
    pub fn max_complete(&self) -> BoolVec {
        let q = self.or(&Self::identity(self.n)).complement();
        q.mul_vec(&BoolVec::ones(self.n)).complement()
    }

    /// Maximal elements when the relation is asymmetric:
    /// complement(R^tr · a).
    pub fn max_asymmetric(&self) -> BoolVec {
        self.transpose()
            .mul_vec(&BoolVec::ones(self.n))
            .complement()
    }

    /// True iff every entry set here is also set in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_dim(other, "is_subset_of");
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Irreflexive and at most one direction per pair.
    pub fn is_asymmetric(&self) -> bool {
        self.diag().is_zero() && self.and(&self.transpose()) == Self::zeros(self.n)
    }

    /// Every distinct pair related in at least one direction.
    pub fn is_complete(&self) -> bool {
        self.or(&self.transpose()).or(&Self::identity(self.n)) == Self::ones(self.n)
    }
}

fn mul_kernel<const W: usize>(n: usize, tail: u64, a: &[u64], b: &[u64], out: &mut [u64]) {
    let saturated = |acc: &[u64; W]| -> bool {
        acc[W - 1] == tail && acc[..W - 1].iter().all(|&x| x == !0)
    };
    for i in 0..n {
        let mut acc = [0u64; W];
        let row = &a[i * W..(i + 1) * W];
        'select: for (w, &word) in row.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let k = w * WORD_BITS + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let src: &[u64; W] = b[k * W..(k + 1) * W].try_into().unwrap();
                for t in 0..W {
                    acc[t] |= src[t];
                }
            }
            // Checked once per source word: cheap, and still cuts the
            // saturated rows that dominate closure ladders.
            if saturated(&acc) {
                break 'select;
            }
        }
        out[i * W..(i + 1) * W].copy_from_slice(&acc);
    }
}

fn mul_general(n: usize, wpr: usize, tail: u64, a: &[u64], b: &[u64], out: &mut [u64]) {
    let mut acc = vec![0u64; wpr];
    for i in 0..n {
        acc.fill(0);
        'select: for (w, &word) in a[i * wpr..(i + 1) * wpr].iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let k = w * WORD_BITS + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (t, &src) in b[k * wpr..(k + 1) * wpr].iter().enumerate() {
                    acc[t] |= src;
                }
            }
            if acc[wpr - 1] == tail && acc[..wpr - 1].iter().all(|&x| x == !0) {
                break 'select;
            }
        }
        out[i * wpr..(i + 1) * wpr].copy_from_slice(&acc);
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({}x{})", self.n, self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BoolMatrix {
    type Err = String;

    /// Parses whitespace-separated rows of '0'/'1' characters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<&str> = s.split_whitespace().collect();
        let n = rows.len();
        if n == 0 {
            return Err("empty matrix literal".into());
        }
        let mut m = BoolMatrix::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(format!("row {i} has {} columns, want {n}", row.len()));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => return Err(format!("bad character {other:?} at ({i}, {j})")),
                }
            }
        }
        Ok(m)
    }
}

impl BitOr for &BoolMatrix {
    type Output = BoolMatrix;
    fn bitor(self, rhs: Self) -> BoolMatrix {
        self.or(rhs)
    }
}

impl BitAnd for &BoolMatrix {
    type Output = BoolMatrix;
    fn bitand(self, rhs: Self) -> BoolMatrix {
        self.and(rhs)
    }
}

impl Mul for &BoolMatrix {
    type Output = BoolMatrix;
    fn mul(self, rhs: Self) -> BoolMatrix {
        BoolMatrix::mul(self, rhs)
    }
}

impl Mul<&BoolVec> for &BoolMatrix {
    type Output = BoolVec;
    fn mul(self, rhs: &BoolVec) -> BoolVec {
        self.mul_vec(rhs)
    }
}

/// Characteristic vector of a subset of the `n` alternatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolVec {
    n: usize,
    words: Vec<u64>,
}

impl BoolVec {
    /// Empty set.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "vector dimension must be at least 1");
        BoolVec {
            n,
            words: vec![0; words_for(n)],
        }
    }

    /// Universal set (the vector a).
    pub fn ones(n: usize) -> Self {
        let mut v = Self::zeros(n);
        let last = v.words.len() - 1;
        for word in &mut v.words {
            *word = !0;
        }
        v.words[last] = tail_mask(n);
        v
    }

    /// Singleton {j} (the vector e(j)).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = Self::zeros(n);
        v.set(j, true);
        v
    }

    /// Set with exactly the given 0-based members.
    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut v = Self::zeros(n);
        for &i in members {
            v.set(i, true);
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.n, "index {i} out of range");
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.n, "index {i} out of range");
        let bit = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= bit;
        } else {
            self.words[i / WORD_BITS] &= !bit;
        }
    }

    pub fn or(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in or");
        let mut out = self.clone();
        for (o, &w) in out.words.iter_mut().zip(&other.words) {
            *o |= w;
        }
        out
    }

    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in and");
        let mut out = self.clone();
        for (o, &w) in out.words.iter_mut().zip(&other.words) {
            *o &= w;
        }
        out
    }

    /// Members of self that are not members of `other`.
    pub fn and_not(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in and_not");
        let mut out = self.clone();
        for (o, &w) in out.words.iter_mut().zip(&other.words) {
            *o &= !w;
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        let last = out.words.len() - 1;
        for word in &mut out.words {
            *word = !*word;
        }
        out.words[last] &= tail_mask(self.n);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "dimension mismatch in is_subset_of");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    /// True iff the two sets share a member (the Boolean scalar product).
    pub fn intersects(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "dimension mismatch in intersects");
        self.words
            .iter()
            .zip(&other.words)
            .any(|(&a, &b)| a & b != 0)
    }

    /// Sorted 0-based member indices.
    pub fn members(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Sorted 1-based labels, the external naming convention.
    pub fn labels(&self) -> Vec<usize> {
        self.members().iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for BoolVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoolVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolVec({})", self)
    }
}

impl FromStr for BoolVec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty vector literal".into());
        }
        let mut v = BoolVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(format!("bad character {other:?} at {i}")),
            }
        }
        Ok(v)
    }
}

impl BitOr for &BoolVec {
    type Output = BoolVec;
    fn bitor(self, rhs: Self) -> BoolVec {
        self.or(rhs)
    }
}

impl BitAnd for &BoolVec {
    type Output = BoolVec;
    fn bitand(self, rhs: Self) -> BoolVec {
        self.and(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_mul;
    use crate::testutil::{arb_complete_matrix, arb_matrix, arb_matrix_pair, mat, vec_of};
    use proptest::prelude::*;

    #[test]
    fn identity_two() {
        assert_eq!(BoolMatrix::identity(2), mat("10 01"));
    }

    #[test]
    fn all_ones_vector() {
        let a = BoolVec::ones(3);
        assert_eq!(a.members(), vec![0, 1, 2]);
        assert_eq!(a.to_string(), "111");
    }

    #[test]
    fn unit_vector_has_one_bit() {
        let e = BoolVec::unit(6, 1);
        assert_eq!(e.count(), 1);
        assert!(e.get(1));
    }

    #[test]
    #[should_panic(expected = "at least 1")]
    fn zero_dimension_rejected() {
        let _ = BoolMatrix::zeros(0);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mismatched_or_rejected() {
        let _ = BoolMatrix::zeros(2).or(&BoolMatrix::zeros(3));
    }

    #[test]
    fn or_with_zero_and_idempotence() {
        let e = BoolMatrix::identity(4);
        assert_eq!(e.or(&BoolMatrix::zeros(4)), e);
        let m = mat("0110 0011 1000 0100");
        assert_eq!(m.or(&m), m);
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let m = mat("010 001 100");
        assert_eq!(BoolMatrix::identity(3).mul(&m), m);
        assert_eq!(m.mul(&BoolMatrix::identity(3)), m);
    }

    #[test]
    fn power_zero_is_identity() {
        let m = mat("01 10");
        assert_eq!(m.power(0), BoolMatrix::identity(2));
        assert_eq!(m.power(2), BoolMatrix::identity(2));
    }

    #[test]
    fn asym_and_sym_of_identity() {
        let e = BoolMatrix::identity(3);
        assert_eq!(e.asym_part(), BoolMatrix::zeros(3));
        assert_eq!(e.sym_part(), e);
    }

    #[test]
    fn max_of_empty_relation_is_everything() {
        let o = BoolMatrix::zeros(4);
        assert_eq!(o.max_asymmetric(), BoolVec::ones(4));
        assert_eq!(BoolMatrix::identity(4).max_general(), BoolVec::ones(4));
    }

    #[test]
    fn dense_round_trip() {
        let rows = vec![vec![0u8, 1, 0], vec![1, 0, 1], vec![0, 0, 1]];
        assert_eq!(BoolMatrix::from_dense(&rows).to_dense(), rows);
    }

    #[test]
    fn display_parses_back() {
        let m = mat("0101 1010 0011 1100");
        let back: BoolMatrix = m.to_string().parse().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn vec_set_algebra() {
        let u = vec_of("10110");
        let v = vec_of("01100");
        assert_eq!(u.or(&v), vec_of("11110"));
        assert_eq!(u.and(&v), vec_of("00100"));
        assert_eq!(u.and_not(&v), vec_of("10010"));
        assert!(u.intersects(&v));
        assert!(!vec_of("10010").intersects(&v.and_not(&u)));
        assert_eq!(u.labels(), vec![1, 3, 4]);
    }

    // Masked tail words are what make equality and is_zero honest; exercise a
    // dimension straddling the word boundary.
    #[test]
    fn tail_bits_stay_masked_past_word_boundary() {
        let n = 65;
        let i = BoolMatrix::ones(n);
        assert_eq!(i.complement(), BoolMatrix::zeros(n));
        assert!(BoolVec::ones(n).complement().is_zero());
        assert_eq!(i.transpose(), i);
        assert_eq!(BoolVec::ones(n).count(), n);
    }

    proptest! {
        #[test]
        fn product_matches_naive_triple_loop((m, q) in arb_matrix_pair(16)) {
            let expect = naive_mul(&m.to_dense(), &q.to_dense());
            prop_assert_eq!(m.mul(&q).to_dense(), expect);
        }

        #[test]
        fn complement_is_involutive(m in arb_matrix(16)) {
            prop_assert_eq!(m.complement().complement(), m);
        }

        #[test]
        fn transpose_commutes_with_complement(m in arb_matrix(16)) {
            prop_assert_eq!(m.complement().transpose(), m.transpose().complement());
        }

        #[test]
        fn parts_reassemble_the_relation(m in arb_matrix(16)) {
            let p = m.asym_part();
            let s = m.sym_part();
            prop_assert_eq!(p.or(&s), m.clone());
            prop_assert!(s.is_symmetric());
            prop_assert_eq!(p.and(&p.transpose()), BoolMatrix::zeros(m.n()));
        }

        // On the diagonal, pi is always empty and sigma mirrors the relation,
        // so the middle identity is stated against the irreflexive part of
        // sigma; it reduces to the literal complement(S) when the sampled
        // relation happens to be irreflexive.
        #[test]
        fn complete_relation_identities(m in arb_complete_matrix(12)) {
            let n = m.n();
            let p = m.asym_part();
            let s = m.sym_part();
            let e = BoolMatrix::identity(n);
            prop_assert_eq!(p.or(&s).or(&e), p.transpose().complement());
            prop_assert_eq!(p.or(&p.transpose()).or(&e), s.without_diagonal().complement());
            if m.diag().is_zero() {
                prop_assert_eq!(p.or(&p.transpose()).or(&e), s.complement());
            }
            prop_assert_eq!(
                p.or(&p.transpose()).or(&s).or(&e),
                BoolMatrix::ones(n)
            );
            prop_assert_eq!(m.max_complete(), m.max_general());
        }

        #[test]
        fn maxima_of_relation_and_asymmetric_part_agree(m in arb_matrix(12)) {
            prop_assert_eq!(m.max_general(), m.asym_part().max_asymmetric());
        }

        #[test]
        fn max_general_matches_definitional_scan(m in arb_matrix(12)) {
            let n = m.n();
            let mut scan = BoolVec::ones(n);
            for i in 0..n {
                for j in 0..n {
                    if j != i && m.get(j, i) && !m.get(i, j) {
                        scan.set(i, false);
                    }
                }
            }
            prop_assert_eq!(m.max_general(), scan);
        }

        #[test]
        fn accumulated_powers_equal_reflexive_power(m in arb_matrix(10), k in 1usize..=10) {
            let n = m.n();
            let e = BoolMatrix::identity(n);
            let mut acc = e.clone();
            let mut p = e.clone();
            for _ in 0..k {
                p = p.mul(&m);
                acc = acc.or(&p);
            }
            prop_assert_eq!(m.or(&e).power(k), acc);
        }

        #[test]
        fn vector_product_matches_matrix_column(m in arb_matrix(12)) {
            let n = m.n();
            for j in 0..n {
                let by_vec = m.mul_vec(&BoolVec::unit(n, j));
                for i in 0..n {
                    prop_assert_eq!(by_vec.get(i), m.get(i, j));
                }
            }
        }
    }
}
