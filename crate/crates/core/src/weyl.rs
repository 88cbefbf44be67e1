//! The symmetric group `S_n` viewed as the Weyl group of type `A_{n-1}`.
//!
//! Elements are stored in one-line notation. A product `s_{i_k} ... s_{i_1}`
//! is written as a [`ReducedWord`] holding `(i_1, ..., i_k)` in the order the
//! reflections are *applied*, so the first letter acts first.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct WeylElement {
    perm: Vec<u8>,
}

impl TryFrom<Vec<u8>> for WeylElement {
    type Error = Error;

    fn try_from(perm: Vec<u8>) -> Result<Self> {
        WeylElement::from_one_line(perm)
    }
}

impl From<WeylElement> for Vec<u8> {
    fn from(w: WeylElement) -> Self {
        w.perm
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (1..=n as u8).collect(),
        }
    }

    pub fn from_one_line(perm: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(WeylElement { perm })
    }

    /// The adjacent transposition `s_i`, `1 <= i < n`.
    pub fn simple_reflection(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut w = Self::identity(n);
        w.perm.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{i_k} ... s_{i_1}` for `letters = (i_1, ..., i_k)`.
    /// The word need not be reduced.
    pub fn from_word(letters: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in letters {
            check_index(i, n)?;
            w = w.left_mul_simple(i);
        }
        Ok(w)
    }

    /// The longest element `w_0`.
    pub fn longest(n: usize) -> Self {
        WeylElement {
            perm: (1..=n as u8).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.perm
    }

    /// `w(j)` for `1 <= j <= n`.
    pub fn apply(&self, j: usize) -> usize {
        self.perm[j - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        let mut inv = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        WeylElement { perm: inv }
    }

    /// Functional composition `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> Result<Self> {
        same_rank(self.rank(), other.rank())?;
        Ok(WeylElement {
            perm: other
                .perm
                .iter()
                .map(|&v| self.perm[v as usize - 1])
                .collect(),
        })
    }

    /// `s_i ∘ self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let perm = self
            .perm
            .iter()
            .map(|&v| match v as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => v,
            })
            .collect();
        WeylElement { perm }
    }

    /// `self ∘ s_i`: swaps the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut perm = self.perm.clone();
        perm.swap(i - 1, i);
        WeylElement { perm }
    }

    /// `s_i w < w`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.perm.iter().position(|&x| x as usize == v).unwrap();
        pos(i + 1) < pos(i)
    }

    /// `w s_i < w`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.perm[i - 1] > self.perm[i]
    }

    /// Lexicographically least reduced word, in application order.
    pub fn canonical_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.rank()).find(|&i| w.has_right_descent(i)) {
            letters.push(i);
            w = w.right_mul_simple(i);
        }
        ReducedWord { letters }
    }

    /// Every reduced word, sorted lexicographically.
    pub fn reduced_words(&self) -> BTreeSet<ReducedWord> {
        let mut memo = HashMap::new();
        reduced_words_memo(self, &mut memo)
            .into_iter()
            .map(|letters| ReducedWord { letters })
            .collect()
    }

    /// Coordinate permutation `(w·β)_{w(j)} = β_j`.
    pub fn act_on_weight(&self, beta: &[i64]) -> Result<Vec<i64>> {
        same_rank(self.rank(), beta.len())?;
        let mut out = vec![0; beta.len()];
        for (j, &b) in beta.iter().enumerate() {
            out[self.perm[j] as usize - 1] = b;
        }
        Ok(out)
    }

    /// Same as [`act_on_weight`](Self::act_on_weight) for nonnegative vectors.
    pub fn act_on_composition(&self, beta: &[u32]) -> Vec<u32> {
        let mut out = vec![0; beta.len()];
        for (j, &b) in beta.iter().enumerate() {
            out[self.perm[j] as usize - 1] = b;
        }
        out
    }

    /// Product notation, e.g. `s1s2` for the element that applies `s2` first.
    pub fn to_word_string(&self) -> String {
        if self.is_identity() {
            return "id".to_string();
        }
        self.canonical_word()
            .letters
            .iter()
            .rev()
            .map(|i| format!("s{i}"))
            .collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn reduced_words_memo(
    w: &WeylElement,
    memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let words = if w.is_identity() {
        vec![Vec::new()]
    } else {
        let mut out = Vec::new();
        for i in (1..w.rank()).filter(|&i| w.has_right_descent(i)) {
            for tail in reduced_words_memo(&w.right_mul_simple(i), memo) {
                let mut word = Vec::with_capacity(tail.len() + 1);
                word.push(i);
                word.extend(tail);
                out.push(word);
            }
        }
        out
    };
    memo.insert(w.clone(), words.clone());
    words
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    Ok(())
}

fn same_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(())
}

/// A reduced word `(i_1, ..., i_k)` for `s_{i_k} ... s_{i_1}`, application order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates that the word is reduced in `S_n`.
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        let w = WeylElement::from_word(&letters, n)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced { word: letters });
        }
        Ok(ReducedWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self, n: usize) -> WeylElement {
        WeylElement::from_word(&self.letters, n).expect("letters validated at construction")
    }
}

/// Bruhat order via the tableau criterion: `v <= w` iff for every `k` the
/// sorted prefix `v(1..k)` is entrywise below the sorted prefix `w(1..k)`.
pub fn bruhat_leq(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    same_rank(v.rank(), w.rank())?;
    let n = v.rank();
    let mut pv: Vec<u8> = Vec::with_capacity(n);
    let mut pw: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n {
        insert_sorted(&mut pv, v.perm[k]);
        insert_sorted(&mut pw, w.perm[k]);
        if pv.iter().zip(&pw).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn bruhat_lt(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    Ok(v != w && bruhat_leq(v, w)?)
}

fn insert_sorted(xs: &mut Vec<u8>, x: u8) {
    let at = xs.partition_point(|&y| y < x);
    xs.insert(at, x);
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_elements(n: usize) -> Vec<WeylElement> {
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![WeylElement { perm: perm.clone() }];
    while next_permutation(&mut perm) {
        out.push(WeylElement { perm: perm.clone() });
    }
    out
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `w` is the shortest element of `w W_λ`: no right descent lies in the
/// stabilizer of `λ`.
pub fn is_min_rep(w: &WeylElement, lambda: &Partition) -> bool {
    let parts = lambda.parts();
    w.rank() == parts.len()
        && (1..w.rank()).all(|j| parts[j - 1] != parts[j] || !w.has_right_descent(j))
}

/// The minimal-length representative of `w W_λ`.
pub fn min_rep(w: &WeylElement, lambda: &Partition) -> Result<WeylElement> {
    same_rank(w.rank(), lambda.len())?;
    let parts = lambda.parts();
    let mut perm = w.perm.clone();
    let mut start = 0;
    while start < parts.len() {
        let mut end = start + 1;
        while end < parts.len() && parts[end] == parts[start] {
            end += 1;
        }
        perm[start..end].sort_unstable();
        start = end;
    }
    Ok(WeylElement { perm })
}

/// `W^λ`, sorted by length and then one-line notation.
pub fn min_coset_reps(lambda: &Partition) -> Vec<WeylElement> {
    let mut reps: Vec<WeylElement> = all_elements(lambda.len())
        .into_iter()
        .filter(|w| is_min_rep(w, lambda))
        .collect();
    reps.sort_by_key(|w| (w.length(), w.perm.clone()));
    reps
}

/// The dominant rearrangement `λ` of `β` and the unique `w ∈ W^λ` with `w·λ = β`.
pub fn min_rep_for_composition(beta: &[u32]) -> (Partition, WeylElement) {
    let lambda = Partition::sorted_from(beta);
    let n = beta.len();
    let mut used = vec![false; n];
    let mut perm = vec![0u8; n];
    for (j, &part) in lambda.parts().iter().enumerate() {
        let pos = (0..n)
            .find(|&p| !used[p] && beta[p] == part)
            .expect("λ is a rearrangement of β");
        used[pos] = true;
        perm[j] = (pos + 1) as u8;
    }
    (lambda, WeylElement { perm })
}

/// A Bruhat lower order ideal, stored by its maximal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerOrderIdeal {
    rank: usize,
    generators: Vec<WeylElement>,
}

impl LowerOrderIdeal {
    /// Non-maximal and repeated generators are dropped.
    pub fn new(generators: Vec<WeylElement>, rank: usize) -> Result<Self> {
        for g in &generators {
            same_rank(g.rank(), rank)?;
        }
        let mut maximal: Vec<WeylElement> = Vec::new();
        for g in &generators {
            let dominated = generators
                .iter()
                .any(|h| h != g && bruhat_leq(g, h).expect("ranks checked"));
            if !dominated && !maximal.contains(g) {
                maximal.push(g.clone());
            }
        }
        maximal.sort();
        Ok(LowerOrderIdeal {
            rank,
            generators: maximal,
        })
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &WeylElement) -> bool {
        self.generators
            .iter()
            .any(|g| bruhat_leq(v, g).unwrap_or(false))
    }

    pub fn members(&self) -> BTreeSet<WeylElement> {
        all_elements(self.rank)
            .into_iter()
            .filter(|v| self.contains(v))
            .collect()
    }
}
