//! Permutations in word notation, vincular patterns and the pattern classes
//! that index diagonal rectangulations.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// A permutation of `1..=n` stored as its one-line word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self, Error> {
        let n = word.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format_word(&word)));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format_word(&word)));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize);
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Value at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> u8 {
        self.word[pos - 1]
    }

    /// 1-based position holding `value`.
    pub fn position_of(&self, value: u8) -> usize {
        self.word.iter().position(|&v| v == value).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = alloc::vec![0u8; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word }
    }

    /// Value pairs `(a, b)` with `a < b` where `b` comes first in the word.
    pub fn inversion_set(&self) -> BTreeSet<(u8, u8)> {
        let mut out = BTreeSet::new();
        for (i, &x) in self.word.iter().enumerate() {
            for &y in &self.word[i + 1..] {
                if x > y {
                    out.insert((y, x));
                }
            }
        }
        out
    }

    pub fn inversion_count(&self) -> usize {
        let mut count = 0;
        for (i, &x) in self.word.iter().enumerate() {
            count += self.word[i + 1..].iter().filter(|&&y| y < x).count();
        }
        count
    }

    /// Inversion set packed into a bit mask, one bit per value pair.
    ///
    /// Only defined for `n <= 16` (120 pairs).
    pub fn inversion_mask(&self) -> u128 {
        let n = self.len();
        assert!(n <= 16, "inversion mask needs n <= 16");
        let mut mask = 0u128;
        for (i, &x) in self.word.iter().enumerate() {
            for &y in &self.word[i + 1..] {
                if x > y {
                    mask |= 1 << pair_bit(n, y as usize, x as usize);
                }
            }
        }
        mask
    }

    /// Exchanges the values `k` and `k + 1`, leaving positions alone.
    pub fn consecutive_value_swap(&self, k: usize) -> Result<Permutation, Error> {
        let n = self.len();
        if k == 0 || k >= n {
            return Err(Error::OutOfRange { index: k, n });
        }
        let (a, b) = (k as u8, k as u8 + 1);
        let word = self
            .word
            .iter()
            .map(|&v| match v {
                v if v == a => b,
                v if v == b => a,
                v => v,
            })
            .collect();
        Ok(Permutation { word })
    }

    /// Exchanges the entries at positions `j` and `j + 1`.
    pub fn adjacent_position_swap(&self, j: usize) -> Result<Permutation, Error> {
        let n = self.len();
        if j == 0 || j >= n {
            return Err(Error::OutOfRange { index: j, n });
        }
        let mut word = self.word.clone();
        word.swap(j - 1, j);
        Ok(Permutation { word })
    }

    pub fn contains(&self, pattern: &VincularPattern) -> bool {
        contains_vincular(self, pattern)
    }

    pub fn avoids(&self, class: &PatternClass) -> bool {
        avoids_class(self, class)
    }

    pub fn is_baxter(&self) -> bool {
        self.avoids(&PatternClass::new(ClassName::Baxter))
    }
}

fn pair_bit(n: usize, a: usize, b: usize) -> usize {
    // a < b, both 1-based
    (a - 1) * n + (b - 1)
}

fn format_word(word: &[u8]) -> String {
    let mut s = String::new();
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&v.to_string());
    }
    s
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&format_word(&self.word))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4165372` (digits, n <= 9) or `10,2,3,...` (comma separated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            if s.is_empty() || s.len() > 9 {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(word).map_err(|_| bad())
    }
}

/// A classical pattern where some neighbouring letters must also be
/// neighbours in the host word.
///
/// `glued` holds 1-based pattern positions `i` meaning positions `i` and
/// `i + 1` are underlined together. `3-14-2` is the word 3142 glued at 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VincularPattern {
    word: Permutation,
    glued: BTreeSet<usize>,
}

impl VincularPattern {
    pub fn new(word: Permutation, glued: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let glued: BTreeSet<usize> = glued.into_iter().collect();
        for &i in &glued {
            if i == 0 || i >= word.len() {
                return Err(Error::OutOfRange {
                    index: i,
                    n: word.len(),
                });
            }
        }
        Ok(VincularPattern { word, glued })
    }

    /// A pattern with no adjacency constraints.
    pub fn classical(word: Permutation) -> Self {
        VincularPattern {
            word,
            glued: BTreeSet::new(),
        }
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn glued(&self) -> &BTreeSet<usize> {
        &self.glued
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn from_literal(word: &str, glued: &[usize]) -> Self {
        let word: Permutation = word.parse().expect("literal pattern");
        VincularPattern::new(word, glued.iter().copied()).expect("literal pattern")
    }
}

impl fmt::Display for VincularPattern {
    /// Dashes delimit the glued blocks: `3-14-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |i: usize| self.glued.contains(&i);
        for (i, v) in self.word.word().iter().enumerate() {
            let pos = i + 1;
            if pos > 1 && !g(pos - 1) && (g(pos) || (pos >= 3 && g(pos - 2))) {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// True iff some subsequence of `host` is order-isomorphic to the pattern
/// word with every glued pair sitting at adjacent host positions.
pub fn contains_vincular(host: &Permutation, pattern: &VincularPattern) -> bool {
    let k = pattern.len();
    if k > host.len() {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    extend_match(host.word(), pattern, &mut chosen)
}

fn extend_match(host: &[u8], pattern: &VincularPattern, chosen: &mut Vec<usize>) -> bool {
    let k = pattern.len();
    let depth = chosen.len();
    if depth == k {
        return true;
    }
    let pat = pattern.word.word();
    let remaining = k - depth;
    let (lo, hi) = match chosen.last() {
        None => (0, host.len() - remaining),
        Some(&prev) if pattern.glued.contains(&depth) => (prev + 1, prev + 1),
        Some(&prev) => (prev + 1, host.len() - remaining),
    };
    if lo > hi || hi >= host.len() {
        return false;
    }
    for pos in lo..=hi {
        let v = host[pos];
        let consistent = chosen.iter().zip(pat).all(|(&p, &q)| (host[p] < v) == (q < pat[depth]));
        if consistent {
            chosen.push(pos);
            if extend_match(host, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// The pattern-avoidance classes attached to rectangulation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassName {
    /// `{3142, 2413}`: guillotine partitions.
    Separable,
    /// `{3-14-2, 2-41-3}`.
    Baxter,
    /// `{3-41-2, 2-41-3}`: the leftmost representatives.
    TwistedBaxter,
    /// `{3-14-2, 2-14-3}`: the rightmost representatives.
    RightmostClass,
    /// `{3-41-2, 2-14-3}`: classes of rectangulations under simple flips.
    SClass,
}

impl ClassName {
    pub const ALL: [ClassName; 5] = [
        ClassName::Separable,
        ClassName::Baxter,
        ClassName::TwistedBaxter,
        ClassName::RightmostClass,
        ClassName::SClass,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::Separable => "separable",
            ClassName::Baxter => "baxter",
            ClassName::TwistedBaxter => "twisted_baxter",
            ClassName::RightmostClass => "rightmost_class",
            ClassName::SClass => "s_class",
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidPermutation(alloc::format!("unknown class {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternClass {
    pub name: ClassName,
    pub patterns: Vec<VincularPattern>,
}

impl PatternClass {
    pub fn new(name: ClassName) -> Self {
        let p = VincularPattern::from_literal;
        let patterns = match name {
            ClassName::Separable => alloc::vec![p("3142", &[]), p("2413", &[])],
            ClassName::Baxter => alloc::vec![p("3142", &[2]), p("2413", &[2])],
            ClassName::TwistedBaxter => alloc::vec![p("3412", &[2]), p("2413", &[2])],
            ClassName::RightmostClass => alloc::vec![p("3142", &[2]), p("2143", &[2])],
            ClassName::SClass => alloc::vec![p("3412", &[2]), p("2143", &[2])],
        };
        PatternClass { name, patterns }
    }
}

pub fn avoids_class(host: &Permutation, class: &PatternClass) -> bool {
    class.patterns.iter().all(|p| !contains_vincular(host, p))
}

/// All permutations of size `n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: (n >= 1).then(|| (1..=n as u8).collect()),
    }
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        // standard next-permutation step
        if let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: current })
    }
}

pub fn enumerate_avoiders(n: usize, class: &PatternClass) -> Vec<Permutation> {
    permutations(n).filter(|p| p.avoids(class)).collect()
}
