//! Permutations and the Schubert and Grothendieck polynomials.
//!
//! Both families are computed from the staircase monomial
//! `x1^{n-1} x2^{n-2} ... x_{n-1}` attached to the longest element of `S_n` by
//! descending along a reduced word of `w^{-1} w0` with divided differences
//! (Schubert) or isobaric divided differences (Grothendieck).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::operators::{compose_perm, OpKind};
use crate::ring::{BetaCoeff, BetaPolynomial, Monomial};

/// A finitely supported permutation of `{1, 2, ...}` in one-line notation,
/// stored without trailing fixed points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1);
        let mut one_line: Vec<usize> = (1..=i + 1).collect();
        one_line.swap(i - 1, i);
        Self { one_line }
    }

    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a permutation of 1..{m}"
                )));
            }
            seen[v] = true;
        }
        let mut p = Self { one_line: values };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.one_line.last() == Some(&self.one_line.len()) {
            self.one_line.pop();
        }
    }

    /// `(n, n-1, ..., 1)`.
    pub fn longest_element(n: usize) -> Self {
        assert!(n >= 1);
        let mut p = Self {
            one_line: (1..=n).rev().collect(),
        };
        p.trim();
        p
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// One-line notation padded to length `n`.
    pub fn one_line_padded(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.one_line.len())).map(|i| self.apply(i)).collect()
    }

    /// `w(i)`
    pub fn apply(&self, i: usize) -> usize {
        self.one_line.get(i - 1).copied().unwrap_or(i)
    }

    /// Smallest `n` with `w` in `S_n` (at least 1).
    pub fn natural_rank(&self) -> usize {
        self.one_line.len().max(1)
    }

    /// `l(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&b| b < v[i]).count())
            .sum()
    }

    /// `{ i : w(i) > w(i+1) }`
    pub fn descents(&self) -> Vec<usize> {
        (1..self.one_line.len())
            .filter(|&i| self.is_descent(i))
            .collect()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut v = self.one_line_padded(i + 1);
        v.swap(i - 1, i);
        let mut p = Self { one_line: v };
        p.trim();
        p
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.one_line.len()];
        for (i, &w) in self.one_line.iter().enumerate() {
            v[w - 1] = i + 1;
        }
        Self { one_line: v }
    }

    /// `self o other`: `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.one_line.len().max(other.one_line.len());
        let mut p = Self {
            one_line: (1..=n).map(|i| self.apply(other.apply(i))).collect(),
        };
        p.trim();
        p
    }

    /// Canonical reduced word: repeatedly split off the smallest descent on
    /// the right, `w = (w s_i) s_i`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.descents().first() {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// Product of simple transpositions `s_{i1} ... s_{ik}`.
    pub fn from_word(word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(), |w, &i| w.times_simple(i))
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                let mut p = Permutation {
                    one_line: prefix.clone(),
                };
                p.trim();
                out.push(p);
                return;
            }
            for v in 1..=used.len() {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.is_empty() {
            return f.write_str("1");
        }
        let s: Vec<String> = self.one_line.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(values)
    }
}

/// `x1^{n-1} x2^{n-2} ... x_{n-1}`
pub fn staircase(n: usize) -> BetaPolynomial {
    let exps: Vec<u32> = (1..=n).map(|i| (n - i) as u32).collect();
    BetaPolynomial::term(Monomial::from_exponents(exps), 1)
}

fn descend(kind: OpKind, w: &Permutation, n: usize) -> Result<BetaPolynomial> {
    if w.one_line().len() > n {
        return Err(Error::InvalidPermutation(format!("{w} is not in S_{n}")));
    }
    let w0 = Permutation::longest_element(n);
    let v = w.inverse().compose(&w0);
    Ok(compose_perm(kind, &v).apply(&staircase(n)))
}

/// The Schubert polynomial of `w`, computed inside `S_n`.
pub fn schubert_in(w: &Permutation, n: usize) -> Result<BetaPolynomial> {
    descend(OpKind::Partial, w, n)
}

/// The Grothendieck polynomial of `w` (symbolic `b`), computed inside `S_n`.
pub fn grothendieck_in(w: &Permutation, n: usize) -> Result<BetaPolynomial> {
    descend(OpKind::Pi, w, n)
}

type Cache = OnceLock<Mutex<HashMap<Permutation, BetaPolynomial>>>;

fn cached(cache: &'static Cache, w: &Permutation, kind: OpKind) -> BetaPolynomial {
    let map = cache.get_or_init(Default::default);
    if let Some(p) = map.lock().unwrap().get(w) {
        return p.clone();
    }
    let p = descend(kind, w, w.natural_rank()).expect("w lies in S_n for its natural rank");
    map.lock().unwrap().entry(w.clone()).or_insert(p).clone()
}

pub fn schubert(w: &Permutation) -> BetaPolynomial {
    static CACHE: Cache = OnceLock::new();
    cached(&CACHE, w, OpKind::Partial)
}

pub fn grothendieck(w: &Permutation) -> BetaPolynomial {
    static CACHE: Cache = OnceLock::new();
    cached(&CACHE, w, OpKind::Pi)
}

/// Failures of `ct D_v S_w = delta(v, w)` and `ct PH_v G_w = delta(v, w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtractorDualityReport {
    pub n: usize,
    pub checked: usize,
    /// `(v, w, ct D_v S_w)` entries that differ from the Kronecker delta.
    pub schubert_failures: Vec<(Permutation, Permutation, BetaCoeff)>,
    /// `(v, w, ct PH_v G_w)` entries that differ from the Kronecker delta.
    pub grothendieck_failures: Vec<(Permutation, Permutation, BetaCoeff)>,
}

impl ExtractorDualityReport {
    pub fn passed(&self) -> bool {
        self.schubert_failures.is_empty() && self.grothendieck_failures.is_empty()
    }
}

pub fn check_extractor_duality(n: usize) -> ExtractorDualityReport {
    let perms = Permutation::all(n);
    let mut report = ExtractorDualityReport {
        n,
        ..Default::default()
    };
    for w in &perms {
        let s = schubert(w);
        let g = grothendieck(w);
        for v in &perms {
            let delta = BetaCoeff::from_int(i64::from(v == w));
            let cs = compose_perm(OpKind::Partial, v).apply(&s).constant_term();
            if cs != delta {
                report.schubert_failures.push((v.clone(), w.clone(), cs));
            }
            let cg = compose_perm(OpKind::PiHat, v).apply(&g).constant_term();
            if cg != delta {
                report.grothendieck_failures.push((v.clone(), w.clone(), cg));
            }
            report.checked += 1;
        }
    }
    report
}
