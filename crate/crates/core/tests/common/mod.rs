//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's generators or expansion engines; only the data types and
//! ring arithmetic are reused.

#![allow(dead_code)]

use std::collections::BTreeMap;

use grove_kit::forest::Tree;
use grove_kit::{BetaCoeff, BetaPolynomial, IndexedForest, Monomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn p(s: &str) -> BetaPolynomial {
    s.parse().unwrap()
}

pub fn forest(s: &str) -> IndexedForest {
    s.parse().unwrap()
}

/// Internal node of a forest in a flat arena: children are node ids or leaf
/// numbers, and `rho` is the leftmost leaf below.
#[derive(Clone, Debug)]
pub struct OracleNode {
    pub left: Result<usize, usize>,
    pub right: Result<usize, usize>,
    pub rho: usize,
}

/// Flattens the stored trees; `Ok(id)` is an internal node, `Err(l)` leaf `l`.
pub fn flatten(f: &IndexedForest) -> Vec<OracleNode> {
    fn walk(t: &Tree, next_leaf: &mut usize, out: &mut Vec<OracleNode>) -> Result<usize, usize> {
        match t {
            Tree::Leaf => {
                let l = *next_leaf;
                *next_leaf += 1;
                Err(l)
            }
            Tree::Node(a, b) => {
                let id = out.len();
                out.push(OracleNode {
                    left: Err(0),
                    right: Err(0),
                    rho: *next_leaf,
                });
                let left = walk(a, next_leaf, out);
                let right = walk(b, next_leaf, out);
                out[id].left = left;
                out[id].right = right;
                Ok(id)
            }
        }
    }
    let mut out = Vec::new();
    for (start, t) in f.nontrivial_trees() {
        let mut leaf = start;
        let _root = walk(t, &mut leaf, &mut out);
    }
    out
}

fn nonempty_subsets(max: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << max))
        .map(|mask| (1..=max).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// Grove (set-valued) or forest polynomial by exhaustive search over all
/// assignments of subsets of `[rho(v)]` (singletons for forest polynomials).
pub fn brute_labeling_polynomial(f: &IndexedForest, set_valued: bool) -> BetaPolynomial {
    let nodes = flatten(f);
    let choices: Vec<Vec<Vec<usize>>> = nodes
        .iter()
        .map(|v| {
            if set_valued {
                nonempty_subsets(v.rho)
            } else {
                (1..=v.rho).map(|a| vec![a]).collect()
            }
        })
        .collect();
    let mut out = BetaPolynomial::zero();
    let mut pick = vec![0usize; nodes.len()];
    loop {
        let label = |c: &Result<usize, usize>, want_min: bool| -> usize {
            match c {
                Err(l) => *l,
                Ok(id) => {
                    let s = &choices[*id][pick[*id]];
                    if want_min {
                        *s.iter().min().unwrap()
                    } else {
                        *s.iter().max().unwrap()
                    }
                }
            }
        };
        let ok = nodes.iter().enumerate().all(|(id, v)| {
            let top = *choices[id][pick[id]].iter().max().unwrap();
            top <= label(&v.left, true) && top < label(&v.right, true)
        });
        if ok {
            let mut exps = vec![0u32; 16];
            let mut size = 0u32;
            for (id, _) in nodes.iter().enumerate() {
                for &a in &choices[id][pick[id]] {
                    exps[a - 1] += 1;
                    size += 1;
                }
            }
            let k = size - nodes.len() as u32;
            out.add_term(Monomial::from_exponents(exps), &BetaCoeff::beta_pow(k));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == nodes.len() {
                return out;
            }
            pick[pos] += 1;
            if pick[pos] < choices[pos].len() {
                break;
            }
            pick[pos] = 0;
            pos += 1;
        }
    }
}

/// Chains `S_1, ..., S_k` of nonempty subsets of `[n]` with
/// `max S_i <= min S_{i+1}`, strict after positions in `strict`.
pub fn brute_multifundamental(parts: &[usize], n: usize) -> BetaPolynomial {
    let k: usize = parts.iter().sum();
    let mut strict = vec![false; k];
    let mut acc = 0;
    for &a in &parts[..parts.len().saturating_sub(1)] {
        acc += a;
        strict[acc - 1] = true;
    }
    let subsets = nonempty_subsets(n);
    let mut out = BetaPolynomial::zero();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        lo: usize,
        k: usize,
        strict: &[bool],
        subsets: &[Vec<usize>],
        exps: &mut Vec<u32>,
        size: u32,
        out: &mut BetaPolynomial,
    ) {
        if j == k {
            out.add_term(Monomial::from_exponents(exps.clone()), &BetaCoeff::beta_pow(size - k as u32));
            return;
        }
        for s in subsets {
            if s[0] < lo {
                continue;
            }
            for &a in s {
                exps[a - 1] += 1;
            }
            let top = *s.last().unwrap();
            let next = if strict[j] { top + 1 } else { top };
            rec(j + 1, next, k, strict, subsets, exps, size + s.len() as u32, out);
            for &a in s {
                exps[a - 1] -= 1;
            }
        }
    }
    if k == 0 {
        return BetaPolynomial::one();
    }
    rec(0, 1, k, &strict, &subsets, &mut vec![0; n], 0, &mut out);
    out
}

/// Every forest with `size` nodes and `rho <= n`, built from tree shapes
/// placed at leaf positions rather than from words.
pub fn brute_forests(size: usize, n: usize) -> Vec<IndexedForest> {
    fn shapes(k: usize) -> Vec<Tree> {
        if k == 0 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for a in 0..k {
            for l in shapes(a) {
                for r in shapes(k - 1 - a) {
                    out.push(Tree::node(l.clone(), r));
                }
            }
        }
        out
    }
    // Compositions of `size` into tree sizes, one tree per root 1..=n; a
    // tree at root r with k nodes has rho values >= r, and the largest rho
    // is reached at its rightmost terminal node.
    fn rec(root: usize, left: usize, n: usize, trees: &mut Vec<Tree>, out: &mut Vec<IndexedForest>) {
        if left == 0 {
            let f = IndexedForest::from_trees(trees.clone());
            if flatten(&f).iter().all(|v| v.rho <= n) {
                out.push(f);
            }
            return;
        }
        if root > n {
            return;
        }
        for k in 0..=left {
            for t in shapes(k) {
                trees.push(t);
                rec(root + 1, left - k, n, trees, out);
                trees.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, size, n, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Monomials of degree at most `d` in `x1..xn`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, n, left - e, exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut vec![0; n], &mut out);
    out.sort();
    out
}

/// Exact solution of `sum_j c_j basis_j = f` at `b = beta` by Gaussian
/// elimination over the rationals in the monomial basis. Returns `None` if
/// the system is singular or inconsistent.
pub fn linear_solve(basis: &[BetaPolynomial], f: &BetaPolynomial, beta: i64) -> Option<Vec<BigRational>> {
    linear_solve_many(basis, std::slice::from_ref(f), beta).map(|mut v| v.remove(0))
}

/// [`linear_solve`] for several right-hand sides with one elimination.
pub fn linear_solve_many(
    basis: &[BetaPolynomial],
    targets: &[BetaPolynomial],
    beta: i64,
) -> Option<Vec<Vec<BigRational>>> {
    let specialized: Vec<BetaPolynomial> = basis.iter().map(|g| g.specialize_beta(beta)).collect();
    let rhs: Vec<BetaPolynomial> = targets.iter().map(|f| f.specialize_beta(beta)).collect();
    let mut index = BTreeMap::new();
    for g in specialized.iter().chain(&rhs) {
        for (m, _) in g.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let rows = index.len();
    let cols = basis.len();
    let width = cols + rhs.len();
    let value = |c: &BetaCoeff| BigRational::from_integer(c.as_integer().expect("specialized"));
    let mut a = vec![vec![BigRational::zero(); width]; rows];
    for (j, g) in specialized.iter().chain(&rhs).enumerate() {
        for (m, c) in g.terms() {
            a[index[m]][j] = value(c);
        }
    }
    let mut pivot_row = 0;
    for col in 0..cols {
        let r = (pivot_row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, r);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot = a[pivot_row].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
        }
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| row[cols..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    Some(
        (0..rhs.len())
            .map(|t| (0..cols).map(|j| a[j][cols + t].clone()).collect())
            .collect(),
    )
}

/// Rank of the integer matrix of the given polynomials at `b = beta`.
pub fn rank_at(polys: &[BetaPolynomial], beta: i64) -> usize {
    let mut index = BTreeMap::new();
    let specialized: Vec<BetaPolynomial> = polys.iter().map(|g| g.specialize_beta(beta)).collect();
    for g in &specialized {
        for (m, _) in g.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut a: Vec<Vec<BigRational>> = specialized
        .iter()
        .map(|g| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (m, c) in g.terms() {
                row[index[m]] = BigRational::from_integer(c.as_integer().unwrap());
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..index.len() {
        let Some(r) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, r);
        for r in rank + 1..a.len() {
            if !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[rank][col];
                let pivot = a[rank].clone();
                for (x, y) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_nonnegative(r: &BigRational) -> bool {
    !r.is_negative()
}

pub fn rational(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

pub fn one() -> BigRational {
    BigRational::one()
}
