//! Indexed forests, i.e. elements of the Thompson monoid.
//!
//! A forest is an infinite sequence of planar binary trees, all but finitely
//! many trivial. Leaves are numbered `1, 2, 3, ...` from left to right across
//! the whole forest, and the `k`-th tree is said to have root `k`. We store
//! the trees up to the last nontrivial one, so derived equality is equality of
//! forests.
//!
//! The product `F * G` grafts the `k`-th tree of `G` onto the `k`-th leaf of
//! `F`, and `generator(i)` is the forest whose only internal node is a wedge
//! over leaves `i, i + 1`. Every forest has a unique weakly increasing word
//! `i1 <= i2 <= ... <= ik` with `F = generator(i1) * ... * generator(ik)`;
//! that is the canonical [`TrimmingWord`], obtained by trimming the largest
//! element of `qdes` first.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A planar binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn wedge() -> Tree {
        Tree::node(Tree::Leaf, Tree::Leaf)
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.size() + 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }
}

/// Which side of its parent a node hangs from; roots count as left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "L",
            Side::R => "R",
        })
    }
}

/// A child of an internal node: either another internal node (by arena
/// index) or a leaf carrying its global label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Child {
    Node(usize),
    Leaf(usize),
}

/// Flattened view of one internal node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeInfo {
    pub left: Child,
    pub right: Child,
    /// Leftmost leaf below the node.
    pub rho: usize,
    pub parent: Option<usize>,
    pub side: Side,
    /// Root index of the tree containing the node.
    pub root: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IndexedForest {
    trees: Vec<Tree>,
}

impl IndexedForest {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The wedge over leaves `i, i + 1`.
    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "forest generators are numbered from 1");
        let mut trees = vec![Tree::Leaf; i - 1];
        trees.push(Tree::wedge());
        Self { trees }
    }

    /// Builds a forest from trees listed by root position; trailing trivial
    /// trees are dropped.
    pub fn from_trees(trees: Vec<Tree>) -> Self {
        let mut f = Self { trees };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        while self.trees.last().is_some_and(Tree::is_leaf) {
            self.trees.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// `|F|`, the number of internal nodes.
    pub fn size(&self) -> usize {
        self.trees.iter().map(Tree::size).sum()
    }

    /// Nontrivial trees with the label of their first leaf.
    pub fn nontrivial_trees(&self) -> Vec<(usize, &Tree)> {
        let mut start = 1;
        let mut out = Vec::new();
        for t in &self.trees {
            if !t.is_leaf() {
                out.push((start, t));
            }
            start += t.leaf_count();
        }
        out
    }

    /// Label of the last leaf that belongs to a nontrivial tree (0 if empty).
    pub fn last_leaf(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum::<usize>()
    }

    /// Monoid product: the `k`-th tree of `other` is grafted on leaf `k` of `self`.
    pub fn product(&self, other: &IndexedForest) -> IndexedForest {
        fn graft(t: &Tree, supply: &mut std::slice::Iter<'_, Tree>) -> Tree {
            match t {
                Tree::Leaf => supply.next().cloned().unwrap_or(Tree::Leaf),
                Tree::Node(l, r) => {
                    let l = graft(l, supply);
                    let r = graft(r, supply);
                    Tree::node(l, r)
                }
            }
        }
        let mut supply = other.trees.iter();
        let mut trees: Vec<Tree> = self.trees.iter().map(|t| graft(t, &mut supply)).collect();
        trees.extend(supply.cloned());
        Self::from_trees(trees)
    }

    /// Product of generators in word order.
    pub fn from_word(word: &TrimmingWord) -> IndexedForest {
        word.0
            .iter()
            .fold(Self::empty(), |f, &i| f.product(&Self::generator(i)))
    }

    /// Canonical (weakly increasing) trimming word.
    pub fn to_word(&self) -> TrimmingWord {
        let mut letters = Vec::with_capacity(self.size());
        let mut f = self.clone();
        while let Some(&i) = f.qdes().iter().next_back() {
            let (g, _) = f.trim(i).expect("qdes element is trimmable");
            letters.push(i);
            f = g;
        }
        letters.reverse();
        TrimmingWord(letters)
    }

    /// Positions `i` whose leaf is the left child of a terminal node.
    pub fn qdes(&self) -> BTreeSet<usize> {
        fn walk(t: &Tree, next_leaf: &mut usize, out: &mut BTreeSet<usize>) {
            match t {
                Tree::Leaf => *next_leaf += 1,
                Tree::Node(l, r) => {
                    if l.is_leaf() && r.is_leaf() {
                        out.insert(*next_leaf);
                    }
                    walk(l, next_leaf, out);
                    walk(r, next_leaf, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        let mut next_leaf = 1;
        for t in &self.trees {
            walk(t, &mut next_leaf, &mut out);
        }
        out
    }

    /// Removes the terminal node over leaves `i, i + 1`, returning `F/i` and
    /// whether that node was a right child (`R`) or a left child or root (`L`).
    pub fn trim(&self, i: usize) -> Result<(IndexedForest, Side)> {
        fn walk(t: &mut Tree, side: Side, next_leaf: &mut usize, target: usize) -> Option<Side> {
            match t {
                Tree::Leaf => {
                    *next_leaf += 1;
                    None
                }
                Tree::Node(l, r) => {
                    if l.is_leaf() && r.is_leaf() && *next_leaf == target {
                        *t = Tree::Leaf;
                        return Some(side);
                    }
                    walk(l, Side::L, next_leaf, target)
                        .or_else(|| walk(r, Side::R, next_leaf, target))
                }
            }
        }
        let mut trees = self.trees.clone();
        let mut next_leaf = 1;
        for t in trees.iter_mut() {
            if *t == Tree::Leaf {
                next_leaf += 1;
                continue;
            }
            if let Some(side) = walk(t, Side::L, &mut next_leaf, i) {
                return Ok((Self::from_trees(trees), side));
            }
        }
        Err(Error::NotTrimmable(i))
    }

    /// The extractor word: letters `(i, L|R)` with the rightmost letter
    /// corresponding to the first trim. Trimming follows the canonical order.
    pub fn extractor_word(&self) -> ExtractorWord {
        let mut letters = Vec::with_capacity(self.size());
        let mut f = self.clone();
        while let Some(&i) = f.qdes().iter().next_back() {
            let (g, side) = f.trim(i).expect("qdes element is trimmable");
            letters.push(ExtractorLetter { position: i, side });
            f = g;
        }
        letters.reverse();
        ExtractorWord(letters)
    }

    /// Internal nodes in preorder, trees left to right.
    pub fn nodes(&self) -> Vec<NodeInfo> {
        fn walk(
            t: &Tree,
            parent: Option<usize>,
            side: Side,
            root: usize,
            next_leaf: &mut usize,
            out: &mut Vec<NodeInfo>,
        ) -> Child {
            match t {
                Tree::Leaf => {
                    let c = Child::Leaf(*next_leaf);
                    *next_leaf += 1;
                    c
                }
                Tree::Node(l, r) => {
                    let id = out.len();
                    out.push(NodeInfo {
                        left: Child::Leaf(0),
                        right: Child::Leaf(0),
                        rho: *next_leaf,
                        parent,
                        side,
                        root,
                    });
                    let left = walk(l, Some(id), Side::L, root, next_leaf, out);
                    let right = walk(r, Some(id), Side::R, root, next_leaf, out);
                    out[id].left = left;
                    out[id].right = right;
                    Child::Node(id)
                }
            }
        }
        let mut out = Vec::with_capacity(self.size());
        let mut next_leaf = 1;
        for (k, t) in self.trees.iter().enumerate() {
            walk(t, None, Side::L, k + 1, &mut next_leaf, &mut out);
        }
        out
    }

    /// Largest `rho(v)` over internal nodes.
    pub fn max_rho(&self) -> Option<usize> {
        self.nodes().iter().map(|v| v.rho).max()
    }

    /// Whether `qdes(F)` is contained in `{n}`.
    pub fn is_zigzag(&self, n: usize) -> bool {
        self.qdes().iter().all(|&i| i == n)
    }

    /// The composition of successive left-branch lengths, if the forest is a
    /// zigzag forest (at most one nontrivial tree, and that tree a path).
    pub fn zigzag_composition(&self) -> Option<Composition> {
        let trees = self.nontrivial_trees();
        let tree = match trees.as_slice() {
            [] => return Some(Composition(Vec::new())),
            [(_, t)] => *t,
            _ => return None,
        };
        let mut parts = Vec::new();
        let mut seg = tree;
        loop {
            let mut len = 0;
            let mut cur = seg;
            // walk down the left branch; all right children except at the
            // bottom must be leaves
            let bottom_right = loop {
                match cur {
                    Tree::Node(l, r) => {
                        len += 1;
                        if l.is_leaf() {
                            break r.as_ref();
                        }
                        if !r.is_leaf() {
                            return None;
                        }
                        cur = l;
                    }
                    Tree::Leaf => unreachable!(),
                }
            };
            parts.push(len);
            if bottom_right.is_leaf() {
                return Some(Composition(parts));
            }
            seg = bottom_right;
        }
    }
}

/// The zigzag forest in `ZZ_n` whose successive left branches have lengths
/// `alpha_1, alpha_2, ...`.
pub fn zigzag_forest(alpha: &Composition, n: usize) -> Result<IndexedForest> {
    let t = alpha.len();
    if t > n {
        return Err(Error::TooManyParts { parts: t, n });
    }
    if t == 0 {
        return Ok(IndexedForest::empty());
    }
    let mut below = Tree::Leaf;
    for &len in alpha.parts().iter().rev() {
        let mut seg = Tree::node(Tree::Leaf, below);
        for _ in 1..len {
            seg = Tree::node(seg, Tree::Leaf);
        }
        below = seg;
    }
    let mut trees = vec![Tree::Leaf; n - t];
    trees.push(below);
    Ok(IndexedForest::from_trees(trees))
}

/// All forests with exactly `size` internal nodes and `rho(v) <= n` for every
/// internal node, in canonical order.
pub fn enumerate_forests(size: usize, n: usize) -> Vec<IndexedForest> {
    fn rec(
        word: &mut Vec<usize>,
        size: usize,
        n: usize,
        out: &mut Vec<IndexedForest>,
    ) {
        if word.len() == size {
            let f = IndexedForest::from_word(&TrimmingWord(word.clone()));
            if f.max_rho().is_none_or(|r| r <= n) {
                out.push(f);
            }
            return;
        }
        let lo = word.last().copied().unwrap_or(1);
        for i in lo..=n {
            word.push(i);
            rec(word, size, n, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if size == 0 {
            out.push(IndexedForest::empty());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(size), size, n, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All forests with at most `max_size` nodes and `rho <= n`.
pub fn enumerate_forests_up_to(max_size: usize, n: usize) -> Vec<IndexedForest> {
    (0..=max_size).flat_map(|d| enumerate_forests(d, n)).collect()
}

impl Ord for IndexedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.size()
            .cmp(&other.size())
            .then_with(|| self.to_word().cmp(&other.to_word()))
    }
}

impl PartialOrd for IndexedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

impl FromStr for IndexedForest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_word(&s.parse()?))
    }
}

/// A sequence of Thompson-monoid generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrimmingWord(pub Vec<usize>);

impl TrimmingWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    if items.is_empty() {
        return f.write_str("e");
    }
    let s: Vec<String> = items.iter().map(usize::to_string).collect();
    f.write_str(&s.join(","))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| match tok.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(Error::Parse(format!(
                "bad {what} entry `{}` in `{s}` (expected positive integers)",
                tok.trim()
            ))),
            Ok(v) => Ok(v),
        })
        .collect()
}

impl fmt::Display for TrimmingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for TrimmingWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, "forest word").map(TrimmingWord)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtractorLetter {
    pub position: usize,
    pub side: Side,
}

/// Letters of a grove extractor; the rightmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtractorWord(pub Vec<ExtractorLetter>);

impl ExtractorWord {
    pub fn letters(&self) -> &[ExtractorLetter] {
        &self.0
    }
}

impl fmt::Display for ExtractorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let s: Vec<String> = self
            .0
            .iter()
            .map(|l| format!("T{}{}", l.side, l.position))
            .collect();
        f.write_str(&s.join(" "))
    }
}

/// A composition `(a1, ..., at)` with positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions with at most `max_parts` parts, each at most `max_part`.
    pub fn all_bounded(max_parts: usize, max_part: usize) -> Vec<Composition> {
        let mut out = vec![Composition(Vec::new())];
        let mut frontier = out.clone();
        for _ in 0..max_parts {
            let mut next = Vec::new();
            for c in &frontier {
                for p in 1..=max_part {
                    let mut parts = c.0.clone();
                    parts.push(p);
                    next.push(Composition(parts));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, "composition").map(Composition)
    }
}
