//! Permutations in one-line notation: length, descents, reduced words,
//! 321-avoidance, and enumeration of the symmetric group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of [1, n] in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v < 1 || v > n || seen[v] {
                return Err(Error::NotAPermutation { one_line, n });
            }
            seen[v] = true;
        }
        Ok(Self { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            one_line: (1..=n).collect(),
        }
    }

    /// The longest element w∘: i ↦ n+1-i.
    pub fn longest(n: usize) -> Self {
        Self {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// The adjacent transposition s_i swapping i and i+1 (1 <= i <= n-1).
    pub fn adjacent(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i + 1 > n {
            return Err(Error::IndexOutOfRange { i, n: n - 1 });
        }
        let mut one_line: Vec<usize> = (1..=n).collect();
        one_line.swap(i - 1, i);
        Ok(Self { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Image of i (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// Function composition: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            one_line: other.one_line.iter().map(|&v| self.one_line[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.one_line[i] > self.one_line[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// i is a left descent iff l(s_i w) < l(w), i.e. i appears after i+1.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n())
            .filter(|&i| inv.apply(i) > inv.apply(i + 1))
            .collect()
    }

    /// Left multiplication by s_i (swaps the values i and i+1).
    pub fn left_multiply_adjacent(&self, i: usize) -> Permutation {
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// The lexicographically first reduced word, built by repeatedly
    /// peeling the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        loop {
            match w.left_descents().first().copied() {
                Some(i) => {
                    word.push(i);
                    w = w.left_multiply_adjacent(i);
                }
                None => break,
            }
        }
        word
    }

    /// All reduced words; exponential, intended for small n only.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut words = Vec::new();
        for i in self.left_descents() {
            for mut tail in self.left_multiply_adjacent(i).all_reduced_words() {
                tail.insert(0, i);
                words.push(tail);
            }
        }
        words
    }

    /// Direct pattern scan for a decreasing subsequence of length 3.
    pub fn is_321_avoiding(&self) -> bool {
        let w = &self.one_line;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[i] <= w[j] {
                    continue;
                }
                for k in j + 1..n {
                    if w[j] > w[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(
            n: usize,
            current: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if current.len() == n {
                out.push(Permutation {
                    one_line: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-line notation `2,4,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut one_line = Vec::new();
        for (pos, tok) in s.split(',').enumerate() {
            let v: usize = tok.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a positive integer, got {tok:?}"),
            })?;
            one_line.push(v);
        }
        Permutation::from_one_line(one_line)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_line
    }
}

/// Evaluates a word of adjacent transpositions, first letter applied last:
/// [i1, i2, …, il] ↦ s_{i1} ∘ s_{i2} ∘ ⋯ ∘ s_{il}.
pub fn word_to_permutation(word: &[usize], n: usize) -> Result<Permutation> {
    let mut w = Permutation::identity(n);
    for &i in word.iter().rev() {
        let s = Permutation::adjacent(i, n)?;
        w = s.compose(&w);
    }
    Ok(w)
}
