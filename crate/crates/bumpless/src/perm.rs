//! Permutations, Lehmer codes, Rothe diagrams, patterns and Demazure products.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Cell, Error, Result};

/// A permutation of `[n]` in one-line notation; position `i` holds `w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.oneline
    }
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(oneline));
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { oneline: (1..=n).collect() }
    }

    /// The longest element `w₀ = n (n-1) … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { oneline: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `t_{ij}` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.oneline.swap(i - 1, j - 1);
        p
    }

    /// The cycle `c^{(a)}_I = (a i_k … i_1)` for `I = {i_1 < … < i_k}`, all below `a`.
    ///
    /// It sends `a ↦ i_k ↦ i_{k-1} ↦ … ↦ i_1 ↦ a`.
    pub fn cycle(n: usize, a: usize, set: &[usize]) -> Self {
        let mut idx: Vec<usize> = set.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let mut p = Self::identity(n);
        if idx.is_empty() {
            return p;
        }
        let k = idx.len();
        p.oneline[a - 1] = idx[k - 1];
        for t in (1..k).rev() {
            p.oneline[idx[t] - 1] = idx[t - 1];
        }
        p.oneline[idx[0] - 1] = a;
        p
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)`, 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { oneline: inv }
    }

    /// `(self · other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation { oneline: other.oneline.iter().map(|&k| self.at(k)).collect() })
    }

    /// `w·s_i`: swap the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.oneline.swap(i - 1, i);
        p
    }

    /// `s_i·w`: swap the values `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Self {
        let oneline = self
            .oneline
            .iter()
            .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
            .collect();
        Permutation { oneline }
    }

    /// Embed into `S_{n+1}` by appending a fixed point.
    pub fn embed(&self) -> Self {
        let mut oneline = self.oneline.clone();
        oneline.push(self.n() + 1);
        Permutation { oneline }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `D(w) = {(i,j) : w(i) > j and w⁻¹(j) > i}`.
    pub fn rothe_diagram(&self) -> BTreeSet<Cell> {
        let inv = self.inverse();
        let n = self.n();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i) > j && inv.at(j) > i {
                    cells.insert((i, j));
                }
            }
        }
        cells
    }

    /// Lehmer code: `c_w(i) = #{j > i : w(j) < w(i)}`, the row sizes of `D(w)`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.oneline;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count()).collect()
    }

    /// Inverse of [`Permutation::lehmer_code`]; requires `0 ≤ c_i ≤ n - i`.
    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut oneline = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            let max = n - i - 1;
            if c > max {
                return Err(Error::CodeOutOfRange { position: i + 1, value: c, max });
            }
            oneline.push(avail.remove(c));
        }
        Ok(Permutation { oneline })
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// `des(w)`, the largest descent, or 0 for the identity.
    pub fn max_descent(&self) -> usize {
        self.descents().into_iter().next_back().unwrap_or(0)
    }

    /// Whether no subsequence of `self` is order-isomorphic to `pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        let n = self.n();
        if k > n {
            return true;
        }
        let mut pos: Vec<usize> = (0..k).collect();
        loop {
            let vals: Vec<usize> = pos.iter().map(|&p| self.oneline[p]).collect();
            let iso = (0..k).all(|a| {
                (0..k).all(|b| (vals[a] < vals[b]) == (pattern.oneline[a] < pattern.oneline[b]))
            });
            if iso {
                return false;
            }
            // next k-subset of positions
            let mut t = k;
            loop {
                if t == 0 {
                    return true;
                }
                t -= 1;
                if pos[t] < n - k + t {
                    pos[t] += 1;
                    for u in t + 1..k {
                        pos[u] = pos[u - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        self.avoids(&Permutation { oneline: vec![2, 1, 4, 3] })
    }

    /// 132-avoiding.
    pub fn is_dominant(&self) -> bool {
        self.avoids(&Permutation { oneline: vec![1, 3, 2] })
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { oneline: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Some reduced word, read off by sorting adjacent descents from the right.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::new();
        let mut w = self.clone();
        while let Some(i) = w.descents().into_iter().next_back() {
            letters.push(i);
            w = w.times_simple(i);
        }
        letters.reverse();
        Word(letters)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`2143`) or comma-separated lists (`10,2,…`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParsePermutation(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if values.is_empty() {
            return Err(bad());
        }
        Permutation::new(values)
    }
}

/// A word in the simple transpositions `s_1, …, s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, n: usize) -> Result<()> {
        for &a in &self.0 {
            if a == 0 || a >= n {
                return Err(Error::LetterOutOfRange { letter: a, max: n.saturating_sub(1) });
            }
        }
        Ok(())
    }

    /// The ordinary product `s_{a_1} ⋯ s_{a_k}`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        self.check(n)?;
        let mut w = Permutation::identity(n);
        for &a in &self.0 {
            w = w.times_simple(a);
        }
        Ok(w)
    }

    /// `ℓ(product) = |word|`.
    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.product(n)?.length() == self.len())
    }
}

/// The Demazure product: `e_w e_i = e_{ws_i}` if `ℓ(ws_i) > ℓ(w)`, else `e_w`.
pub fn demazure_product(word: &Word, n: usize) -> Result<Permutation> {
    word.check(n)?;
    let mut w = Permutation::identity(n);
    for &a in &word.0 {
        if w.at(a) < w.at(a + 1) {
            w = w.times_simple(a);
        }
    }
    Ok(w)
}
