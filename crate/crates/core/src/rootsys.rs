//! Finite-type Cartan data, Weyl group elements, reduced words,
//! inversion sets and reduced-expression counting.
//!
//! Roots are stored as integer coefficient vectors over the simple
//! roots. Weyl group elements are canonicalized by their action matrix
//! on the simple-root basis, which keeps everything type-uniform at the
//! small ranks handled here.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::linalg;
use crate::{Error, Result};

/// Simple-root coefficient vector of a root.
pub type Root = Vec<i64>;

/// Finite Cartan families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Exceptional families need the natural alphabet order for the
    /// sorted-merge product.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A finite-type root system: Cartan matrix, positive roots, heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub family: Family,
    pub rank: usize,
    /// Cartan matrix with `a[i][j] = <alpha_j, alpha_i^vee>`, so the
    /// simple reflection acts by `s_i(alpha_j) = alpha_j - a[i][j] alpha_i`.
    pub cartan: Vec<Vec<i64>>,
    /// All positive roots, sorted by (height, coefficients).
    pub positive_roots: Vec<Root>,
    /// Heights of `positive_roots`, in the same order.
    pub heights: Vec<i64>,
}

fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidType {
            family: family.letter(),
            rank,
        });
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => {
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            // alpha_n is the short root
            bond(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 3 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 2, -1, -1);
            bond(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
            bond(0, 2, -1, -1);
            bond(1, 3, -1, -1);
            for i in 2..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
        }
        Family::G => {
            bond(0, 1, -1, -3);
        }
    }
    Ok(a)
}

fn is_nonnegative(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0)
}

fn is_nonpositive(v: &[i64]) -> bool {
    v.iter().all(|&c| c <= 0)
}

impl CartanData {
    /// Builds the root system for `(family, rank)`. Positive roots are
    /// generated by breadth-first closure of the simple roots under the
    /// simple-reflection action, then sorted by (height, coefficients).
    pub fn new(family: Family, rank: usize) -> Result<CartanData> {
        let cartan = cartan_matrix(family, rank)?;
        let n = rank;
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let mut alpha = vec![0i64; n];
            alpha[i] = 1;
            seen.insert(alpha.clone());
            queue.push_back(alpha);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let mut gamma = beta.clone();
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                gamma[i] -= pairing;
                if is_nonnegative(&gamma) && seen.insert(gamma.clone()) {
                    queue.push_back(gamma);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let heights = positive_roots.iter().map(|r| r.iter().sum()).collect();
        Ok(CartanData {
            family,
            rank,
            cartan,
            positive_roots,
            heights,
        })
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == v)
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == v)
    }

    pub fn height(&self, v: &[i64]) -> i64 {
        v.iter().sum()
    }

    fn check_letter(&self, letter: u8) -> Result<usize> {
        let l = letter as usize;
        if l == 0 || l > self.rank {
            return Err(Error::InvalidLetter {
                letter,
                rank: self.rank,
            });
        }
        Ok(l - 1)
    }

    /// Applies `s_i` (0-based `i`) to a coefficient vector.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Root {
        let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * v[j]).sum();
        let mut out = v.to_vec();
        out[i] -= pairing;
        out
    }

    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            m[j][j] = 1;
        }
        for j in 0..n {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }
}

/// A Weyl group element, canonicalized by its action matrix on the
/// simple-root basis (column `j` holds the coordinates of `w(alpha_j)`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    length: usize,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| linalg::dot_ii(row, v)).collect()
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut matrix = vec![vec![0i64; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { matrix, length: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Coordinates of `w(beta)`.
    pub fn apply(&self, beta: &[i64]) -> Root {
        mat_apply(&self.matrix, beta)
    }

    pub fn inverse(&self) -> WeylElement {
        let inv = linalg::invert_unimodular(&self.matrix).expect("Weyl matrices are unimodular");
        WeylElement {
            matrix: inv,
            length: self.length,
        }
    }

    fn from_matrix(cartan: &CartanData, matrix: Vec<Vec<i64>>) -> WeylElement {
        let length = cartan
            .positive_roots
            .iter()
            .filter(|beta| is_nonpositive(&mat_apply(&matrix, beta)))
            .count();
        WeylElement { matrix, length }
    }

    /// `w * s_i` with 0-based `i`.
    pub fn times_simple(&self, cartan: &CartanData, i: usize) -> WeylElement {
        let m = mat_mul(&self.matrix, &cartan.reflection_matrix(i));
        WeylElement::from_matrix(cartan, m)
    }

    /// Right descent: `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn has_descent(&self, i: usize) -> bool {
        is_nonpositive(&self.matrix.iter().map(|row| row[i]).collect::<Vec<_>>())
    }
}

/// Composes the simple reflections of `letters` (1-based letters) and
/// reports whether the word is reduced.
pub fn weyl_from_word(cartan: &CartanData, letters: &[u8]) -> Result<(WeylElement, bool)> {
    let mut w = WeylElement::identity(cartan.rank);
    for &letter in letters {
        let i = cartan.check_letter(letter)?;
        w = w.times_simple(cartan, i);
    }
    let reduced = w.length == letters.len();
    Ok((w, reduced))
}

/// A reduced word; construction verifies reducedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    letters: Vec<u8>,
}

impl ReducedWord {
    pub fn new(cartan: &CartanData, letters: &[u8]) -> Result<ReducedWord> {
        let (_, reduced) = weyl_from_word(cartan, letters)?;
        if !reduced {
            return Err(Error::NonReducedWord);
        }
        Ok(ReducedWord {
            letters: letters.to_vec(),
        })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn element(&self, cartan: &CartanData) -> WeylElement {
        weyl_from_word(cartan, &self.letters)
            .expect("validated word")
            .0
    }
}

/// The inversion set `Phi_+ \cap w Phi_-`, sorted by (height,
/// coefficients). Its cardinality equals `l(w)`.
pub fn inversion_set(cartan: &CartanData, w: &WeylElement) -> Vec<Root> {
    let w_inv = w.inverse();
    cartan
        .positive_roots
        .iter()
        .filter(|beta| is_nonpositive(&w_inv.apply(beta)))
        .cloned()
        .collect()
}

/// The convex-order listing `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`
/// attached to a reduced word. As a set this equals the inversion set.
pub fn beta_sequence(cartan: &CartanData, word: &ReducedWord) -> Vec<Root> {
    let mut prefix = WeylElement::identity(cartan.rank);
    let mut betas = Vec::with_capacity(word.len());
    for &letter in word.letters() {
        let i = (letter - 1) as usize;
        let mut alpha = vec![0i64; cartan.rank];
        alpha[i] = 1;
        betas.push(prefix.apply(&alpha));
        prefix = prefix.times_simple(cartan, i);
    }
    betas
}

/// Exact number of reduced expressions of `w`, via the memoized descent
/// recursion `R(w) = sum_i R(w s_i)` over the weak-order ideal below `w`.
pub fn count_reduced_expressions(cartan: &CartanData, w: &WeylElement) -> BigUint {
    fn go(
        cartan: &CartanData,
        w: &WeylElement,
        memo: &mut BTreeMap<WeylElement, BigUint>,
    ) -> BigUint {
        if w.is_identity() {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..cartan.rank {
            if w.has_descent(i) {
                let shorter = w.times_simple(cartan, i);
                total += go(cartan, &shorter, memo);
            }
        }
        memo.insert(w.clone(), total.clone());
        total
    }
    let mut memo = BTreeMap::new();
    go(cartan, w, &mut memo)
}

/// The longest element `w_0`, built greedily by length-increasing
/// right multiplications.
pub fn longest_element(cartan: &CartanData) -> WeylElement {
    let mut w = WeylElement::identity(cartan.rank);
    loop {
        let Some(i) = (0..cartan.rank).find(|&i| !w.has_descent(i)) else {
            return w;
        };
        w = w.times_simple(cartan, i);
    }
}
