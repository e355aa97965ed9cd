//! Words over an ordered alphabet, good Lyndon words, the dominant-word
//! monoid and the brute-force shuffle oracle.
//!
//! The alphabet is `1..=n` with an arbitrary total order. Lexicographic
//! comparison makes a proper prefix strictly smaller than its
//! extensions; that convention is forced by the sorted good-Lyndon
//! tables this module reproduces. Dominant words are stored by their
//! exponent vector over the sorted good-Lyndon list, which turns the
//! monoid product and the valuation into plain vector addition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::rootsys::{CartanData, Root};
use crate::{Error, Result};

/// Default cap on `|u| + |v|` for the exponential shuffle oracle.
pub const DEFAULT_SHUFFLE_BOUND: usize = 14;

/// A total order on the alphabet `1..=n`, given by a permutation
/// (position in the permutation = rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetOrder {
    /// `rank_of[letter - 1]` is the rank of `letter` in the order.
    rank_of: Vec<usize>,
}

impl AlphabetOrder {
    /// `perm` lists the letters in increasing order, e.g. `[2, 1, 3]`
    /// declares `2 < 1 < 3`.
    pub fn new(perm: &[u8]) -> Result<AlphabetOrder> {
        let n = perm.len();
        let mut rank_of = vec![usize::MAX; n];
        for (rank, &letter) in perm.iter().enumerate() {
            let idx = letter as usize;
            if idx == 0 || idx > n || rank_of[idx - 1] != usize::MAX {
                return Err(Error::InvalidOrder);
            }
            rank_of[idx - 1] = rank;
        }
        Ok(AlphabetOrder { rank_of })
    }

    /// The natural order `1 < 2 < ... < n`.
    pub fn natural(n: usize) -> AlphabetOrder {
        AlphabetOrder {
            rank_of: (0..n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_of.len()
    }

    pub fn is_natural(&self) -> bool {
        self.rank_of.iter().enumerate().all(|(i, &r)| i == r)
    }

    /// Letters listed in increasing order.
    pub fn permutation(&self) -> Vec<u8> {
        let mut perm = vec![0u8; self.rank_of.len()];
        for (i, &r) in self.rank_of.iter().enumerate() {
            perm[r] = (i + 1) as u8;
        }
        perm
    }

    pub fn cmp_letters(&self, a: u8, b: u8) -> Ordering {
        self.rank_of[(a - 1) as usize].cmp(&self.rank_of[(b - 1) as usize])
    }
}

/// Lexicographic comparison; a proper prefix is strictly smaller.
pub fn lex_compare(order: &AlphabetOrder, u: &[u8], v: &[u8]) -> Ordering {
    for (a, b) in u.iter().zip(v.iter()) {
        match order.cmp_letters(*a, *b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    u.len().cmp(&v.len())
}

/// A word is Lyndon when it is strictly smaller than each of its proper
/// right factors.
pub fn is_lyndon(order: &AlphabetOrder, u: &[u8]) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..u.len()).all(|k| lex_compare(order, u, &u[k..]) == Ordering::Less))
}

/// Canonical (Chen-Fox-Lyndon) factorization: the unique factorization
/// into a nonincreasing sequence of Lyndon words. Duval's algorithm.
pub fn cfl_factorize(order: &AlphabetOrder, u: &[u8]) -> Vec<Vec<u8>> {
    let n = u.len();
    let mut factors = Vec::new();
    let mut k = 0;
    while k < n {
        let mut i = k;
        let mut j = k + 1;
        while j < n && order.cmp_letters(u[i], u[j]) != Ordering::Greater {
            if order.cmp_letters(u[i], u[j]) == Ordering::Less {
                i = k;
            } else {
                i += 1;
            }
            j += 1;
        }
        let period = j - i;
        while k <= i {
            factors.push(u[k..k + period].to_vec());
            k += period;
        }
    }
    factors
}

/// Letter multiplicities of a word, as an element of `Q_+`.
pub fn weight_of_word(rank: usize, u: &[u8]) -> Root {
    let mut wt = vec![0i64; rank];
    for &letter in u {
        wt[(letter - 1) as usize] += 1;
    }
    wt
}

/// The bijection between good Lyndon words and positive roots, stored
/// sorted by the lexicographic order on words.
#[derive(Debug, Clone)]
pub struct GoodLyndonTable {
    order: AlphabetOrder,
    /// Good Lyndon words in increasing lexicographic order.
    words: Vec<Vec<u8>>,
    /// `roots[p]` is the weight of `words[p]`.
    roots: Vec<Root>,
    /// Lengths of the sorted words (= heights of their roots).
    lengths: Vec<i64>,
    index_of_word: BTreeMap<Vec<u8>, usize>,
    index_of_root: BTreeMap<Root, usize>,
}

/// Computes the good Lyndon word of every positive root by the
/// inductive rule: a simple root maps to its letter, and a non-simple
/// root `beta` maps to the lexicographic maximum of the concatenations
/// `i_gamma i_delta` over decompositions `beta = gamma + delta` into
/// positive roots with `i_gamma < i_delta`.
///
/// Exceptional types are only supported with the natural order; the
/// sorted-merge product underlying the dominant-word monoid is not
/// established beyond that, so other configurations are refused.
pub fn compute_good_lyndon(cartan: &CartanData, order: &AlphabetOrder) -> Result<GoodLyndonTable> {
    if order.rank() != cartan.rank {
        return Err(Error::InvalidOrder);
    }
    if !cartan.family.is_classical() && !order.is_natural() {
        return Err(Error::UnsupportedConfiguration {
            family: cartan.family.letter(),
            rank: cartan.rank,
        });
    }
    // roots are sorted by height, so summands precede their sums
    let mut word_of: Vec<Option<Vec<u8>>> = vec![None; cartan.positive_roots.len()];
    for (idx, beta) in cartan.positive_roots.iter().enumerate() {
        if cartan.heights[idx] == 1 {
            let letter = beta.iter().position(|&c| c == 1).unwrap() as u8 + 1;
            word_of[idx] = Some(vec![letter]);
            continue;
        }
        let mut best: Option<Vec<u8>> = None;
        for (gidx, gamma) in cartan.positive_roots.iter().enumerate() {
            if cartan.heights[gidx] >= cartan.heights[idx] {
                continue;
            }
            let delta: Root = beta.iter().zip(gamma).map(|(b, g)| b - g).collect();
            if delta.iter().any(|&c| c < 0) {
                continue;
            }
            let Some(didx) = cartan.root_index(&delta) else {
                continue;
            };
            let (Some(gw), Some(dw)) = (&word_of[gidx], &word_of[didx]) else {
                return Err(Error::Internal(format!(
                    "good Lyndon induction saw an unprocessed summand of root {:?}",
                    beta
                )));
            };
            if lex_compare(order, gw, dw) != Ordering::Less {
                continue;
            }
            let mut cand = gw.clone();
            cand.extend_from_slice(dw);
            match &best {
                Some(b) if lex_compare(order, &cand, b) != Ordering::Greater => {}
                _ => best = Some(cand),
            }
        }
        let Some(word) = best else {
            return Err(Error::Internal(format!(
                "no decomposition found for root {:?}",
                beta
            )));
        };
        word_of[idx] = Some(word);
    }

    let mut entries: Vec<(Vec<u8>, Root)> = word_of
        .into_iter()
        .zip(cartan.positive_roots.iter())
        .map(|(w, r)| (w.unwrap(), r.clone()))
        .collect();
    entries.sort_by(|(u, _), (v, _)| lex_compare(order, u, v));

    let mut table = GoodLyndonTable {
        order: order.clone(),
        words: Vec::new(),
        roots: Vec::new(),
        lengths: Vec::new(),
        index_of_word: BTreeMap::new(),
        index_of_root: BTreeMap::new(),
    };
    for (p, (word, root)) in entries.into_iter().enumerate() {
        if !is_lyndon(order, &word)? {
            return Err(Error::Internal(format!(
                "constructed word {:?} is not Lyndon",
                word
            )));
        }
        if weight_of_word(cartan.rank, &word) != root {
            return Err(Error::Internal(format!(
                "word {:?} has the wrong weight",
                word
            )));
        }
        if table.index_of_word.insert(word.clone(), p).is_some() {
            return Err(Error::Internal(format!(
                "duplicate good Lyndon word {:?}",
                word
            )));
        }
        table.index_of_root.insert(root.clone(), p);
        table.lengths.push(word.len() as i64);
        table.words.push(word);
        table.roots.push(root);
    }
    Ok(table)
}

impl GoodLyndonTable {
    pub fn order(&self) -> &AlphabetOrder {
        &self.order
    }

    /// Number of entries, i.e. `|Phi_+|`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The `p`-th smallest good Lyndon word.
    pub fn word(&self, p: usize) -> &[u8] {
        &self.words[p]
    }

    /// The root attached to the `p`-th word.
    pub fn root(&self, p: usize) -> &Root {
        &self.roots[p]
    }

    pub fn word_length(&self, p: usize) -> i64 {
        self.lengths[p]
    }

    pub fn index_of_word(&self, w: &[u8]) -> Option<usize> {
        self.index_of_word.get(w).copied()
    }

    pub fn index_of_root(&self, r: &[i64]) -> Option<usize> {
        self.index_of_root.get(r).copied()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }
}

/// A dominant word: a nonincreasing concatenation of good Lyndon words,
/// stored as its exponent vector over the sorted good-Lyndon list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DominantWord {
    exponents: Vec<u64>,
}

impl DominantWord {
    /// The empty word, unit of the monoid.
    pub fn unit(table: &GoodLyndonTable) -> DominantWord {
        DominantWord {
            exponents: vec![0; table.len()],
        }
    }

    pub fn from_exponents(exponents: Vec<u64>) -> DominantWord {
        DominantWord { exponents }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The underlying letter sequence: factors concatenated in
    /// nonincreasing order.
    pub fn letters(&self, table: &GoodLyndonTable) -> Vec<u8> {
        let mut out = Vec::new();
        for p in (0..self.exponents.len()).rev() {
            for _ in 0..self.exponents[p] {
                out.extend_from_slice(table.word(p));
            }
        }
        out
    }

    /// Canonical factorization as a nonincreasing list of good Lyndon
    /// words.
    pub fn factors<'t>(&self, table: &'t GoodLyndonTable) -> Vec<&'t [u8]> {
        let mut out = Vec::new();
        for p in (0..self.exponents.len()).rev() {
            for _ in 0..self.exponents[p] {
                out.push(table.word(p));
            }
        }
        out
    }

    /// Number of letters.
    pub fn len(&self, table: &GoodLyndonTable) -> i64 {
        self.exponents
            .iter()
            .enumerate()
            .map(|(p, &c)| c as i64 * table.word_length(p))
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    /// Weight in `Q_+`.
    pub fn weight(&self, table: &GoodLyndonTable) -> Root {
        let rank = table.order.rank();
        let mut wt = vec![0i64; rank];
        for (p, &c) in self.exponents.iter().enumerate() {
            for (i, v) in table.root(p).iter().enumerate() {
                wt[i] += c as i64 * v;
            }
        }
        wt
    }
}

/// Tests whether `u` is dominant: every canonical factor must be a good
/// Lyndon word. Returns its exponent vector when it is.
pub fn is_dominant(table: &GoodLyndonTable, u: &[u8]) -> Option<DominantWord> {
    let mut exponents = vec![0u64; table.len()];
    for factor in cfl_factorize(&table.order, u) {
        let p = table.index_of_word(&factor)?;
        exponents[p] += 1;
    }
    Some(DominantWord { exponents })
}

/// The monoid product: factors merge and re-sort, so exponent vectors
/// add.
pub fn odot(a: &DominantWord, b: &DominantWord) -> DominantWord {
    debug_assert_eq!(a.exponents.len(), b.exponents.len());
    DominantWord {
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| x + y)
            .collect(),
    }
}

/// Enumerates every shuffle of `u` and `v` and returns the
/// lexicographic maximum. Exponential; guarded by `bound` on the total
/// length.
pub fn shuffle_max_oracle_with_bound(
    order: &AlphabetOrder,
    u: &[u8],
    v: &[u8],
    bound: usize,
) -> Result<Vec<u8>> {
    let total = u.len() + v.len();
    if total > bound {
        return Err(Error::ShuffleBoundExceeded { len: total, bound });
    }
    fn go(
        order: &AlphabetOrder,
        u: &[u8],
        v: &[u8],
        current: &mut Vec<u8>,
        best: &mut Option<Vec<u8>>,
    ) {
        if u.is_empty() && v.is_empty() {
            match best {
                Some(b) if lex_compare(order, current, b) != Ordering::Greater => {}
                _ => *best = Some(current.clone()),
            }
            return;
        }
        if let Some((&head, rest)) = u.split_first() {
            current.push(head);
            go(order, rest, v, current, best);
            current.pop();
        }
        if let Some((&head, rest)) = v.split_first() {
            current.push(head);
            go(order, u, rest, current, best);
            current.pop();
        }
    }
    let mut best = None;
    let mut current = Vec::with_capacity(total);
    go(order, u, v, &mut current, &mut best);
    Ok(best.unwrap_or_default())
}

/// [`shuffle_max_oracle_with_bound`] at the default bound.
pub fn shuffle_max_oracle(order: &AlphabetOrder, u: &[u8], v: &[u8]) -> Result<Vec<u8>> {
    shuffle_max_oracle_with_bound(order, u, v, DEFAULT_SHUFFLE_BOUND)
}
