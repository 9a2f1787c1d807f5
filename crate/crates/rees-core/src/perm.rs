//! Permutations, barred permutations, multiset derangements, their
//! statistics (exc, maj, comaj, des, fix, Exd, bnd), and the generating
//! polynomials built from them.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{binomial, factorial, MultiPoly};

/// A permutation of [n] in one-line notation; entries are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidWord(format!("{word:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// Value at a 1-based position.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// All permutations of [n] in lexicographic order of the word.
    /// Enumeration is desk-scale: n is capped a little above 8!.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n <= 10, "permutation enumeration capped at n = 10");
        if n == 0 {
            return vec![Permutation(Vec::new())];
        }
        let mut out = Vec::with_capacity(factorial(n as u64) as usize);
        let mut word: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.at(cur);
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// Canonical representative of a cycle type: consecutive blocks, each
    /// cycled by one step.
    pub fn from_cycle_type(lambda: &Partition, n: usize) -> Permutation {
        assert_eq!(lambda.n() as usize, n);
        let mut word = vec![0u8; n];
        let mut start = 1usize;
        for &part in lambda.parts() {
            let part = part as usize;
            for off in 0..part {
                let pos = start + off;
                let image = start + (off + 1) % part;
                word[pos - 1] = image as u8;
            }
            start += part;
        }
        Permutation(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The record of classical statistics of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    pub exc: u32,
    pub maj: u32,
    pub comaj: u32,
    pub des: u32,
    pub fix: u32,
}

/// exc = #{i : sigma(i) > i}; des/maj over descent positions;
/// comaj = binom(n,2) - maj; fix = #{i : sigma(i) = i}.
pub fn stats(sigma: &Permutation) -> Stats {
    let n = sigma.n();
    let mut exc = 0;
    let mut fix = 0;
    for i in 1..=n {
        let v = sigma.at(i);
        if v > i {
            exc += 1;
        } else if v == i {
            fix += 1;
        }
    }
    let mut des = 0;
    let mut maj = 0;
    for i in 1..n {
        if sigma.at(i) > sigma.at(i + 1) {
            des += 1;
            maj += i as u32;
        }
    }
    let comaj = binomial(n as u64, 2) as u32 - maj;
    Stats {
        exc,
        maj,
        comaj,
        des,
        fix,
    }
}

/// Exd(sigma): descend positions of the barred word obtained by barring
/// the letters in excedance positions, under the order
/// 1-bar < ... < n-bar < 1 < ... < n.
pub fn exd_set(sigma: &Permutation) -> Vec<usize> {
    let n = sigma.n();
    // encode barred letter v as v, unbarred as n + v
    let encoded: Vec<usize> = (1..=n)
        .map(|i| {
            let v = sigma.at(i);
            if v > i {
                v
            } else {
                n + v
            }
        })
        .collect();
    (1..n).filter(|&i| encoded[i - 1] > encoded[i]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerianFlavor {
    MajExc,
    ComajExc,
    ComajExcFix,
    MajExcFix,
}

/// The generating polynomial over S_n for the chosen pair or triple of
/// statistics, in variables (q, t) or (q, t, r).
pub fn q_eulerian(n: usize, flavor: EulerianFlavor) -> MultiPoly {
    let with_fix = matches!(
        flavor,
        EulerianFlavor::ComajExcFix | EulerianFlavor::MajExcFix
    );
    let vars: &[&str] = if with_fix {
        &["q", "t", "r"]
    } else {
        &["q", "t"]
    };
    let mut p = MultiPoly::zero(vars);
    for sigma in Permutation::all(n) {
        let s = stats(&sigma);
        let qexp = match flavor {
            EulerianFlavor::MajExc | EulerianFlavor::MajExcFix => s.maj,
            EulerianFlavor::ComajExc | EulerianFlavor::ComajExcFix => s.comaj,
        } as u16;
        let mut exps = vec![qexp, s.exc as u16];
        if with_fix {
            exps.push(s.fix as u16);
        }
        p.add_monomial(exps, 1);
    }
    p
}

/// Classical Eulerian polynomial A_n(t) = sum over S_n of t^exc.
pub fn eulerian_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&["t"]);
    for sigma in Permutation::all(n) {
        p.add_monomial(vec![stats(&sigma).exc as u16], 1);
    }
    p
}

/// Eulerian number a_{n,j} counted by descents (independent oracle for
/// the excedance-based routes).
pub fn eulerian_number_by_descents(n: usize, j: usize) -> u64 {
    Permutation::all(n)
        .iter()
        .filter(|s| stats(s).des as usize == j)
        .count() as u64
}

pub fn eulerian_number_by_excedances(n: usize, j: usize) -> u64 {
    Permutation::all(n)
        .iter()
        .filter(|s| stats(s).exc as usize == j)
        .count() as u64
}

/// Fixed-point-free permutations of [n], in lexicographic order.
pub fn derangements(n: usize) -> Vec<Permutation> {
    Permutation::all(n)
        .into_iter()
        .filter(|s| stats(s).fix == 0)
        .collect()
}

pub fn derangement_count(n: usize) -> u64 {
    derangements(n).len() as u64
}

/// d_n by inclusion-exclusion: sum (-1)^m binom(n,m) (n-m)!.
pub fn derangement_count_formula(n: usize) -> i64 {
    (0..=n as u64)
        .map(|m| {
            let term = (binomial(n as u64, m) * factorial(n as u64 - m)) as i64;
            if m % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// d_n(q, t) = sum over derangements of q^comaj t^exc.
pub fn derangement_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&["q", "t"]);
    for sigma in derangements(n) {
        let s = stats(&sigma);
        p.add_monomial(vec![s.comaj as u16, s.exc as u16], 1);
    }
    p
}

/// d_n(q) = sum over derangements of q^{comaj + exc}.
pub fn derangement_q_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&["q"]);
    for sigma in derangements(n) {
        let s = stats(&sigma);
        p.add_monomial(vec![(s.comaj + s.exc) as u16], 1);
    }
    p
}

/// a_n(q) = sum over all of S_n of q^{comaj + exc}.
pub fn comaj_exc_q_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&["q"]);
    for sigma in Permutation::all(n) {
        let s = stats(&sigma);
        p.add_monomial(vec![(s.comaj + s.exc) as u16], 1);
    }
    p
}

// ----- barred permutations (type BC) -----

/// A permutation word with a subset of positions barred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarredPermutation {
    pub word: Permutation,
    /// bit i-1 set iff position i carries a bar
    pub bars: u32,
}

impl BarredPermutation {
    pub fn barred_at(&self, i: usize) -> bool {
        self.bars & (1 << (i - 1)) != 0
    }
}

impl fmt::Display for BarredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.word.n() {
            write!(f, "{}", self.word.at(i))?;
            if self.barred_at(i) {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// Type BC derangements: barred permutations with no unbarred fixed
/// position (a barred letter i at position i is allowed). Enumerated in
/// lexicographic word order, then ascending bar set.
pub fn bc_derangements(n: usize) -> Vec<BarredPermutation> {
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        let fixed_mask: u32 = (1..=n)
            .filter(|&i| sigma.at(i) == i)
            .map(|i| 1u32 << (i - 1))
            .sum();
        for bars in 0..(1u32 << n) {
            // every fixed position must be barred
            if fixed_mask & !bars == 0 {
                out.push(BarredPermutation {
                    word: sigma.clone(),
                    bars,
                });
            }
        }
    }
    out
}

/// |D_n^BC| by inclusion-exclusion: sum (-1)^j binom(n,j) 2^{n-j} (n-j)!.
pub fn bc_derangement_count_formula(n: usize) -> i64 {
    (0..=n as u64)
        .map(|j| {
            let term =
                (binomial(n as u64, j) * (1u64 << (n as u64 - j)) * factorial(n as u64 - j)) as i64;
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The bar index: rearrange so the (barred) fixed points of the
/// underlying word come first in increasing order, followed by the
/// non-fixed subword in place; bnd is the sum of barred positions of the
/// rearranged word.
pub fn bnd(sigma: &BarredPermutation) -> u32 {
    let n = sigma.word.n();
    let mut rearranged: Vec<bool> = Vec::with_capacity(n);
    let mut fixed: Vec<(usize, bool)> = Vec::new();
    let mut rest: Vec<bool> = Vec::new();
    for i in 1..=n {
        let v = sigma.word.at(i);
        if v == i {
            fixed.push((v, sigma.barred_at(i)));
        } else {
            rest.push(sigma.barred_at(i));
        }
    }
    fixed.sort_unstable();
    rearranged.extend(fixed.iter().map(|&(_, b)| b));
    rearranged.extend(rest);
    rearranged
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b)
        .map(|(i, _)| i as u32 + 1)
        .sum()
}

/// Type BC derangement polynomial: sum over D_n^BC of
/// q^{comaj(|sigma|) + exc(|sigma|) + bnd(sigma)}.
pub fn bc_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(&["q"]);
    for sigma in bc_derangements(n) {
        let s = stats(&sigma.word);
        p.add_monomial(vec![(s.comaj + s.exc + bnd(&sigma)) as u16], 1);
    }
    p
}

// ----- multiset derangements and words -----

/// A 2 x n matrix with weakly increasing top row, equal row multisets,
/// and no equal column entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetDerangement {
    pub top: Vec<u8>,
    pub bottom: Vec<u8>,
}

/// All multiset derangements with the given content (top row is the
/// sorted content; bottoms are the distinct rearrangements avoiding every
/// column match), in lexicographic bottom order.
pub fn multiset_derangements(content: &[u8]) -> Vec<MultisetDerangement> {
    let mut top = content.to_vec();
    top.sort_unstable();
    let mut out = Vec::new();
    let mut bottom = Vec::with_capacity(top.len());
    let mut remaining = top.clone();
    fn go(
        top: &[u8],
        bottom: &mut Vec<u8>,
        remaining: &mut Vec<u8>,
        out: &mut Vec<MultisetDerangement>,
    ) {
        if bottom.len() == top.len() {
            out.push(MultisetDerangement {
                top: top.to_vec(),
                bottom: bottom.clone(),
            });
            return;
        }
        let j = bottom.len();
        let mut last: Option<u8> = None;
        for idx in 0..remaining.len() {
            let v = remaining[idx];
            if Some(v) == last || v == top[j] {
                continue;
            }
            last = Some(v);
            remaining.remove(idx);
            bottom.push(v);
            go(top, bottom, remaining, out);
            bottom.pop();
            remaining.insert(idx, v);
        }
    }
    go(&top, &mut bottom, &mut remaining, &mut out);
    out
}

/// Words of length n over the alphabet [m] with no two adjacent letters
/// equal and exactly j descents, in lexicographic order.
pub fn words_with_descents(n: usize, j: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(n: usize, j: usize, m: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for v in 1..=m as u8 {
            if let Some(&prev) = word.last() {
                if prev == v {
                    continue;
                }
                let descents_so_far = word
                    .windows(2)
                    .filter(|w| w[0] > w[1])
                    .count()
                    + usize::from(prev > v);
                if descents_so_far > j {
                    continue;
                }
                // remaining positions can add at most (n - len - 1) descents
                if descents_so_far + (n - word.len() - 1) < j {
                    continue;
                }
            }
            word.push(v);
            go(n, j, m, word, out);
            word.pop();
        }
    }
    go(n, j, m, &mut word, &mut out);
    out
}
