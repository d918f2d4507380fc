//! Forest, grove and multi-fundamental polynomials and the expansion engines.
//!
//! Grove polynomials are generated from compatible set-valued labelings. A
//! labeling assigns each internal node `v` a nonempty set `S(v)` with
//! `max S(v) <= min S(v_L)` and `max S(v) < min S(v_R)`, where a leaf child
//! `l` counts as the singleton `{l}`. Its weight is `b^{|S| - |F|} x_S`.
//! The generator sums over labelings node by node: only `min S` and `max S`
//! interact with the neighbours, and the elements strictly in between
//! contribute a factor `(1 + b x_j)` each.
//!
//! Expansion in the grove basis peels off the lowest homogeneous component:
//! its forest-basis coefficients `ct T_F(low)` are exactly the grove
//! coefficients for forests of that size. Subtracting the matching grove
//! polynomials strictly raises the lowest degree of the remainder.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::forest::{enumerate_forests, zigzag_forest, Child, Composition, IndexedForest, NodeInfo};
use crate::operators::{compose_forest_t, grove_extractor, OpKind, Operator};
use crate::ring::{BetaCoeff, BetaPolynomial, Monomial};
use crate::schubert::{grothendieck, schubert, Permutation};

/// Peeling rounds allowed before [`Error::IterationCapExceeded`].
pub const DEFAULT_ITERATION_CAP: usize = 64;

/// An integer labeling of the internal nodes, in [`IndexedForest::nodes`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling(pub Vec<usize>);

impl Labeling {
    pub fn is_compatible(&self, nodes: &[NodeInfo]) -> bool {
        nodes.iter().zip(&self.0).all(|(v, &k)| {
            let left = match v.left {
                Child::Leaf(l) => l,
                Child::Node(c) => self.0[c],
            };
            let right = match v.right {
                Child::Leaf(l) => l,
                Child::Node(c) => self.0[c],
            };
            k >= 1 && k <= left && k < right
        })
    }

    pub fn weight(&self) -> Monomial {
        self.0
            .iter()
            .fold(Monomial::one(), |m, &k| m.mul(&Monomial::var(k)))
    }
}

/// A set-valued labeling; each set is sorted and nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetValuedLabeling(pub Vec<Vec<usize>>);

impl SetValuedLabeling {
    pub fn is_compatible(&self, nodes: &[NodeInfo]) -> bool {
        let min_of = |c: Child| match c {
            Child::Leaf(l) => Some(l),
            Child::Node(i) => self.0[i].first().copied(),
        };
        nodes.iter().zip(&self.0).all(|(v, set)| {
            let (Some(&lo), Some(&hi)) = (set.first(), set.last()) else {
                return false;
            };
            let (Some(left), Some(right)) = (min_of(v.left), min_of(v.right)) else {
                return false;
            };
            lo >= 1 && hi <= left && hi < right
        })
    }

    /// `|S| = sum of the set sizes`.
    pub fn total_size(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn weight(&self) -> Monomial {
        self.0
            .iter()
            .flatten()
            .fold(Monomial::one(), |m, &k| m.mul(&Monomial::var(k)))
    }
}

/// Every compatible labeling, by exhaustive search over `[rho(v)]` per node.
pub fn compatible_labelings(forest: &IndexedForest) -> Vec<Labeling> {
    let nodes = forest.nodes();
    let mut out = Vec::new();
    let mut current = vec![1; nodes.len()];
    fn rec(k: usize, nodes: &[NodeInfo], cur: &mut Vec<usize>, out: &mut Vec<Labeling>) {
        if k == nodes.len() {
            let l = Labeling(cur.clone());
            if l.is_compatible(nodes) {
                out.push(l);
            }
            return;
        }
        for v in 1..=nodes[k].rho {
            cur[k] = v;
            rec(k + 1, nodes, cur, out);
        }
    }
    rec(0, &nodes, &mut current, &mut out);
    out
}

/// Every compatible set-valued labeling, by exhaustive search over nonempty
/// subsets of `[rho(v)]` per node.
pub fn compatible_set_labelings(forest: &IndexedForest) -> Vec<SetValuedLabeling> {
    let nodes = forest.nodes();
    let subsets: Vec<Vec<Vec<usize>>> = nodes
        .iter()
        .map(|v| {
            (1u32..(1 << v.rho))
                .map(|mask| (1..=v.rho).filter(|j| mask >> (j - 1) & 1 == 1).collect())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![Vec::new(); nodes.len()];
    fn rec(
        k: usize,
        nodes: &[NodeInfo],
        subsets: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<SetValuedLabeling>,
    ) {
        if k == nodes.len() {
            let l = SetValuedLabeling(cur.clone());
            if l.is_compatible(nodes) {
                out.push(l);
            }
            return;
        }
        for s in &subsets[k] {
            cur[k] = s.clone();
            rec(k + 1, nodes, subsets, cur, out);
        }
    }
    rec(0, &nodes, &subsets, &mut cur, &mut out);
    out
}

/// Generating polynomial of the labels allowed at one node when `min = a`
/// and `max = b`.
fn label_weight(a: usize, b: usize, set_valued: bool) -> BetaPolynomial {
    if a == b {
        return BetaPolynomial::var(a);
    }
    debug_assert!(set_valued);
    let mut w = BetaPolynomial::term(Monomial::var(a).mul(&Monomial::var(b)), BetaCoeff::beta_pow(1));
    for j in a + 1..b {
        w = &w * &BetaPolynomial::one_plus_beta_x(j);
    }
    w
}

struct LabelingSum<'a> {
    nodes: &'a [NodeInfo],
    set_valued: bool,
    memo: HashMap<(usize, usize), BetaPolynomial>,
}

impl LabelingSum<'_> {
    /// Sum over labelings of the subtree at `v` whose labels at `v` are `>= lo`.
    fn node(&mut self, v: usize, lo: usize) -> BetaPolynomial {
        if let Some(p) = self.memo.get(&(v, lo)) {
            return p.clone();
        }
        let info = self.nodes[v].clone();
        let mut total = BetaPolynomial::zero();
        for b in lo..=info.rho {
            let left = self.child(info.left, b, false);
            if left.is_zero() {
                continue;
            }
            let right = self.child(info.right, b + 1, true);
            if right.is_zero() {
                continue;
            }
            let below = &left * &right;
            let a_range = if self.set_valued { lo..=b } else { b..=b };
            for a in a_range {
                total += &(&label_weight(a, b, self.set_valued) * &below);
            }
        }
        self.memo.insert((v, lo), total.clone());
        total
    }

    fn child(&mut self, c: Child, lo: usize, _strict: bool) -> BetaPolynomial {
        match c {
            Child::Leaf(l) if lo <= l => BetaPolynomial::one(),
            Child::Leaf(_) => BetaPolynomial::zero(),
            Child::Node(i) => self.node(i, lo),
        }
    }
}

fn labeling_polynomial(forest: &IndexedForest, set_valued: bool) -> BetaPolynomial {
    let nodes = forest.nodes();
    let mut sum = LabelingSum {
        nodes: &nodes,
        set_valued,
        memo: HashMap::new(),
    };
    let roots: Vec<usize> = (0..nodes.len()).filter(|&v| nodes[v].parent.is_none()).collect();
    roots
        .into_iter()
        .fold(BetaPolynomial::one(), |acc, r| &acc * &sum.node(r, 1))
}

type ForestCache = OnceLock<Mutex<HashMap<IndexedForest, BetaPolynomial>>>;

fn cached(cache: &'static ForestCache, f: &IndexedForest, set_valued: bool) -> BetaPolynomial {
    let map = cache.get_or_init(Default::default);
    if let Some(p) = map.lock().unwrap().get(f) {
        return p.clone();
    }
    let p = labeling_polynomial(f, set_valued);
    map.lock().unwrap().entry(f.clone()).or_insert(p).clone()
}

/// `P_F`: sum of `x_k` over compatible labelings.
pub fn forest_polynomial(forest: &IndexedForest) -> BetaPolynomial {
    static CACHE: ForestCache = OnceLock::new();
    cached(&CACHE, forest, false)
}

/// `G_F`: sum of `b^{|S|-|F|} x_S` over compatible set-valued labelings.
pub fn grove_polynomial(forest: &IndexedForest) -> BetaPolynomial {
    static CACHE: ForestCache = OnceLock::new();
    cached(&CACHE, forest, true)
}

/// The multi-fundamental polynomial of `alpha` in `x1..xn`, summed directly
/// over chains of nonempty sets `S_1, ..., S_k` (`k = |alpha|`) with
/// `max S_j <= min S_{j+1}`, strict at the partial sums of `alpha`.
pub fn multifundamental(alpha: &Composition, n: usize) -> Result<BetaPolynomial> {
    if alpha.len() > n {
        return Err(Error::TooManyParts {
            parts: alpha.len(),
            n,
        });
    }
    let k = alpha.weight();
    let mut strict = vec![false; k + 1];
    let mut acc = 0;
    for &p in &alpha.parts()[..alpha.len().saturating_sub(1)] {
        acc += p;
        strict[acc] = true;
    }
    // subset weights `b^{|S|-1} x_S` bucketed by (min, max)
    let mut subsets: Vec<(usize, usize, BetaPolynomial)> = Vec::new();
    for mask in 1u64..(1 << n) {
        let elems: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let m = elems.iter().fold(Monomial::one(), |m, &j| m.mul(&Monomial::var(j)));
        let w = BetaPolynomial::term(m, BetaCoeff::beta_pow(elems.len() as u32 - 1));
        subsets.push((elems[0], *elems.last().unwrap(), w));
    }
    // tail[lo] = sum over chains S_j..S_k with min S_j >= lo
    let mut tail: Vec<BetaPolynomial> = vec![BetaPolynomial::one(); n + 2];
    for j in (1..=k).rev() {
        let mut next = vec![BetaPolynomial::zero(); n + 2];
        for (lo, slot) in next.iter_mut().enumerate().skip(1) {
            for (min, max, w) in &subsets {
                if *min < lo {
                    continue;
                }
                let after = if j < k && strict[j] { max + 1 } else { *max };
                let rest = if j == k { BetaPolynomial::one() } else { tail[after.min(n + 1)].clone() };
                if !rest.is_zero() {
                    *slot += &(w * &rest);
                }
            }
        }
        next[n + 1] = BetaPolynomial::zero();
        tail = next;
    }
    Ok(tail[1].clone())
}

/// The polynomial family an [`Expansion`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Forest,
    Grove,
    Schubert,
    Grothendieck,
    MultiFundamental,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Forest => "forest",
            Basis::Grove => "grove",
            Basis::Schubert => "schubert",
            Basis::Grothendieck => "grothendieck",
            Basis::MultiFundamental => "multifund",
        }
    }

    pub fn from_name(s: &str) -> Option<Basis> {
        [
            Basis::Forest,
            Basis::Grove,
            Basis::Schubert,
            Basis::Grothendieck,
            Basis::MultiFundamental,
        ]
        .into_iter()
        .find(|b| b.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    Forest(IndexedForest),
    Permutation(Permutation),
    Composition(Composition),
}

impl std::fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisIndex::Forest(x) => x.fmt(f),
            BasisIndex::Permutation(x) => x.fmt(f),
            BasisIndex::Composition(x) => write!(f, "({x})"),
        }
    }
}

/// A finite linear combination of basis polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    /// Variable window; multi-fundamental elements are truncated to `x1..xn`.
    pub n: usize,
    terms: BTreeMap<BasisIndex, BetaCoeff>,
}

impl Expansion {
    pub fn new(basis: Basis, n: usize) -> Self {
        Self {
            basis,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, index: BasisIndex, c: &BetaCoeff) {
        let entry = self.terms.entry(index.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn get(&self, index: &BasisIndex) -> BetaCoeff {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    /// Coefficient of a forest-indexed basis element.
    pub fn forest_coeff(&self, f: &IndexedForest) -> BetaCoeff {
        self.get(&BasisIndex::Forest(f.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &BetaCoeff)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn specialize_beta(&self, c: i64) -> Expansion {
        let value = BigInt::from(c);
        let mut out = Expansion::new(self.basis, self.n);
        for (k, v) in &self.terms {
            out.add(k.clone(), &BetaCoeff::from_int(v.specialize(&value)));
        }
        out
    }

    /// The basis polynomial attached to `index`.
    pub fn basis_element(&self, index: &BasisIndex) -> Result<BetaPolynomial> {
        Ok(match (self.basis, index) {
            (Basis::Forest, BasisIndex::Forest(f)) => forest_polynomial(f),
            (Basis::Grove, BasisIndex::Forest(f)) => grove_polynomial(f),
            (Basis::Schubert, BasisIndex::Permutation(w)) => schubert(w),
            (Basis::Grothendieck, BasisIndex::Permutation(w)) => grothendieck(w),
            (Basis::MultiFundamental, BasisIndex::Composition(a)) => multifundamental(a, self.n)?,
            (basis, index) => {
                return Err(Error::Internal(format!(
                    "index {index} does not belong to the {} basis",
                    basis.name()
                )))
            }
        })
    }

    /// `sum coeff * basis element`, with `b` left symbolic.
    pub fn reconstruct(&self) -> Result<BetaPolynomial> {
        let mut out = BetaPolynomial::zero();
        for (k, c) in &self.terms {
            out += &self.basis_element(k)?.scale(c);
        }
        Ok(out)
    }
}

fn check_window(f: &BetaPolynomial, n: usize) -> Result<()> {
    match f.max_variable() {
        Some(var) if var > n => Err(Error::SupportExceedsWindow { var, n }),
        _ => Ok(()),
    }
}

/// Forest-basis coefficients `ct T_F h` of a homogeneous `h` of degree `d`.
fn forest_coefficients(h: &BetaPolynomial, d: usize, n: usize) -> Vec<(IndexedForest, BetaCoeff)> {
    enumerate_forests(d, n)
        .into_iter()
        .filter_map(|f| {
            let c = compose_forest_t(&f).apply(h).constant_term();
            (!c.is_zero()).then_some((f, c))
        })
        .collect()
}

/// Expansion in the grove basis, by graded peeling.
pub fn expand_grove(f: &BetaPolynomial, n: usize) -> Result<Expansion> {
    expand_grove_with_cap(f, n, DEFAULT_ITERATION_CAP)
}

pub fn expand_grove_with_cap(f: &BetaPolynomial, n: usize, cap: usize) -> Result<Expansion> {
    check_window(f, n)?;
    let mut out = Expansion::new(Basis::Grove, n);
    let mut rem = f.clone();
    let mut rounds = 0;
    while !rem.is_zero() {
        rounds += 1;
        if rounds > cap {
            return Err(Error::IterationCapExceeded(cap));
        }
        let low = rem.lowest_component()?;
        let d = low.min_degree().unwrap_or(0) as usize;
        let mut recovered = BetaPolynomial::zero();
        for (forest, c) in forest_coefficients(&low, d, n) {
            recovered += &forest_polynomial(&forest).scale(&c);
            rem -= &grove_polynomial(&forest).scale(&c);
            out.add(BasisIndex::Forest(forest), &c);
        }
        if recovered != low {
            return Err(Error::Internal(format!(
                "degree-{d} component is not spanned by forests in x1..x{n}"
            )));
        }
    }
    Ok(out)
}

/// Expansion of a `b`-free polynomial in the forest basis.
pub fn expand_forest(f: &BetaPolynomial, n: usize) -> Result<Expansion> {
    if !f.is_beta_free() {
        return Err(Error::NotBetaFree);
    }
    check_window(f, n)?;
    let mut out = Expansion::new(Basis::Forest, n);
    let Some(top) = f.degree() else {
        return Ok(out);
    };
    for d in 0..=top {
        let h = f.homogeneous_component(d);
        if h.is_zero() {
            continue;
        }
        let mut recovered = BetaPolynomial::zero();
        for (forest, c) in forest_coefficients(&h, d as usize, n) {
            recovered += &forest_polynomial(&forest).scale(&c);
            out.add(BasisIndex::Forest(forest), &c);
        }
        if recovered != h {
            return Err(Error::Internal(format!(
                "degree-{d} component is not spanned by forests in x1..x{n}"
            )));
        }
    }
    Ok(out)
}

/// `ct H_F f`, the coefficient of `G_F` in `f`.
pub fn grove_coefficient(f: &BetaPolynomial, forest: &IndexedForest) -> BetaCoeff {
    grove_extractor(forest).apply(f).constant_term()
}

/// Failed checks of the grove characterization for one forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub forest: IndexedForest,
    pub positions_checked: usize,
    pub failures: Vec<String>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for `i = 1 ..= last leaf + 1`, with `b` symbolic:
/// `TK_i G_F = G_{F/i}` or `-b R_i G_F = -b R_{i+1} G_F`;
/// `T_i G_F = TL_i G_F = G_{F/i} + b R_i G_F` or `0`;
/// `TR_i G_F = G_{F/i} + b R_{i+1} G_F` or `0`;
/// and `ct G_F = [F empty]`.
pub fn check_grove_characterization(forest: &IndexedForest) -> CharacterizationReport {
    let g = grove_polynomial(forest);
    let beta = BetaCoeff::beta_pow(1);
    let qdes = forest.qdes();
    let mut failures = Vec::new();
    let ct = g.constant_term();
    if ct != BetaCoeff::from_int(i64::from(forest.is_empty())) {
        failures.push(format!("ct G_F = {ct}"));
    }
    let top = forest.last_leaf() + 1;
    for i in 1..=top {
        let apply = |kind| Operator::letter(kind, i).apply(&g);
        let r_i = g.substitute_zero_and_shift(i).scale(&beta);
        let r_next = g.substitute_zero_and_shift(i + 1).scale(&beta);
        let tk = apply(OpKind::TK);
        let t = apply(OpKind::T);
        let tl = apply(OpKind::TL);
        let tr = apply(OpKind::TR);
        let mut check = |name: &str, got: &BetaPolynomial, want: &BetaPolynomial| {
            if got != want {
                failures.push(format!("{name}{i} G_F = {got}, expected {want}"));
            }
        };
        if qdes.contains(&i) {
            let (quotient, _) = forest.trim(i).expect("i is in qdes");
            let gq = grove_polynomial(&quotient);
            check("TK", &tk, &gq);
            check("T", &t, &(&gq + &r_i));
            check("TL", &tl, &(&gq + &r_i));
            check("TR", &tr, &(&gq + &r_next));
        } else {
            check("TK", &tk, &-&r_i);
            check("TK(R_{i+1} form)", &tk, &-&r_next);
            check("T", &t, &BetaPolynomial::zero());
            check("TL", &tl, &BetaPolynomial::zero());
            check("TR", &tr, &BetaPolynomial::zero());
        }
    }
    CharacterizationReport {
        forest: forest.clone(),
        positions_checked: top,
        failures,
    }
}

/// Entries of the matrix `ct H_F G_G` that differ from the Kronecker delta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub forests: Vec<IndexedForest>,
    pub failures: Vec<(IndexedForest, IndexedForest, BetaCoeff)>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn entries_checked(&self) -> usize {
        self.forests.len() * self.forests.len()
    }
}

pub fn check_grove_duality(max_size: usize, n: usize) -> DualityReport {
    let forests: Vec<IndexedForest> = (0..=max_size).flat_map(|d| enumerate_forests(d, n)).collect();
    let groves: Vec<BetaPolynomial> = forests.iter().map(grove_polynomial).collect();
    let mut failures = Vec::new();
    for f in &forests {
        let h = grove_extractor(f);
        for (g, poly) in forests.iter().zip(&groves) {
            let c = h.apply(poly).constant_term();
            if c != BetaCoeff::from_int(i64::from(f == g)) {
                failures.push((f.clone(), g.clone(), c));
            }
        }
    }
    DualityReport { forests, failures }
}

/// Indices whose coefficient breaks a positivity claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositivityReport {
    pub violations: Vec<BasisIndex>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Flags every coefficient that is not a nonnegative integer.
    pub fn nonnegative_integers(expansion: &Expansion) -> Self {
        let violations = expansion
            .terms()
            .filter(|(_, c)| c.as_integer().is_none_or(|v| v.is_negative()))
            .map(|(k, _)| k.clone())
            .collect();
        Self { violations }
    }
}

/// The grove expansion of a Grothendieck polynomial with the integers
/// `a_w^F` read off `coeff = b^{|F| - l(w)} a_w^F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckToGrove {
    pub permutation: Permutation,
    pub expansion: Expansion,
    pub a: BTreeMap<IndexedForest, BigInt>,
    pub report: PositivityReport,
}

pub fn grothendieck_to_grove(w: &Permutation, n: usize) -> Result<GrothendieckToGrove> {
    if w.one_line().len() > n {
        return Err(Error::InvalidPermutation(format!("{w} is not in S_{n}")));
    }
    let expansion = expand_grove(&grothendieck(w), n)?;
    let len = w.length();
    let mut a = BTreeMap::new();
    let mut report = PositivityReport::default();
    for (index, c) in expansion.terms() {
        let BasisIndex::Forest(f) = index else {
            unreachable!("grove expansions are forest indexed")
        };
        let ok = match c.as_monomial() {
            Some((k, v)) if f.size() >= len && k as usize == f.size() - len && v.is_positive() => {
                a.insert(f.clone(), v.clone());
                true
            }
            _ => false,
        };
        if !ok {
            report.violations.push(index.clone());
        }
    }
    Ok(GrothendieckToGrove {
        permutation: w.clone(),
        expansion,
        a,
        report,
    })
}

/// Grove expansion of `G_F G_G`, judged at `b = 1`.
pub fn grove_product_expand(
    f: &IndexedForest,
    g: &IndexedForest,
    n: usize,
) -> Result<(Expansion, PositivityReport)> {
    let product = &grove_polynomial(f) * &grove_polynomial(g);
    let expansion = expand_grove(&product, n)?;
    let report = PositivityReport::nonnegative_integers(&expansion.specialize_beta(1));
    Ok((expansion, report))
}

/// Forest expansion of the `b = 1` grove polynomial.
pub fn grove_to_forest(f: &IndexedForest, n: usize) -> Result<(Expansion, PositivityReport)> {
    let expansion = expand_forest(&grove_polynomial(f).specialize_beta(1), n)?;
    let report = PositivityReport::nonnegative_integers(&expansion);
    Ok((expansion, report))
}

/// One row of the forest-to-grove sign experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRow {
    pub grove: IndexedForest,
    pub coeff: BigInt,
    /// `(-1)^{|G| - |F|}`
    pub expected_sign: i8,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReport {
    pub forest: IndexedForest,
    pub rows: Vec<SignRow>,
}

impl SignReport {
    pub fn alternating(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Expands `P_F` in `b = 1` grove polynomials and records whether each
/// coefficient has sign `(-1)^{|G| - |F|}`. Reported, never asserted.
pub fn forest_to_grove_sign_experiment(f: &IndexedForest, n: usize) -> Result<SignReport> {
    let expansion = expand_grove(&forest_polynomial(f), n)?.specialize_beta(1);
    let rows = expansion
        .terms()
        .map(|(index, c)| {
            let BasisIndex::Forest(g) = index else {
                unreachable!("grove expansions are forest indexed")
            };
            let coeff = c.as_integer().expect("specialized coefficient");
            let expected_sign = if (g.size() + f.size()).is_multiple_of(2) { 1 } else { -1 };
            let matches = coeff.is_zero() || (coeff.is_positive() == (expected_sign == 1));
            SignRow {
                grove: g.clone(),
                coeff,
                expected_sign,
                matches,
            }
        })
        .collect();
    Ok(SignReport {
        forest: f.clone(),
        rows,
    })
}

/// Whether `f` is quasisymmetric as a polynomial in `x1..xn`: monomials with
/// the same exponent composition carry equal coefficients, including every
/// strictly increasing placement of that composition inside `x1..xn`.
pub fn is_quasisymmetric(f: &BetaPolynomial, n: usize) -> bool {
    if f.max_variable().is_some_and(|v| v > n) {
        return false;
    }
    let mut groups: BTreeMap<Vec<u32>, (usize, &BetaCoeff)> = BTreeMap::new();
    for (m, c) in f.terms() {
        let comp: Vec<u32> = m.factors().map(|(_, e)| e).collect();
        match groups.get_mut(&comp) {
            Some((count, first)) => {
                if *first != c {
                    return false;
                }
                *count += 1;
            }
            None => {
                groups.insert(comp, (1, c));
            }
        }
    }
    groups
        .iter()
        .all(|(comp, (count, _))| binomial(n, comp.len()) == Some(*count))
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let mut acc: usize = 1;
    for j in 0..k {
        acc = acc.checked_mul(n - j)? / (j + 1);
    }
    Some(acc)
}

/// Expansion of a quasisymmetric `f` in multi-fundamental polynomials of
/// `x1..xn`, indexed by compositions.
pub fn expand_multifundamental(f: &BetaPolynomial, n: usize) -> Result<Expansion> {
    if !is_quasisymmetric(f, n) {
        return Err(Error::NotQuasisymmetric(n));
    }
    let grove = expand_grove(f, n)?;
    let mut out = Expansion::new(Basis::MultiFundamental, n);
    for (index, c) in grove.terms() {
        let BasisIndex::Forest(z) = index else {
            unreachable!("grove expansions are forest indexed")
        };
        let alpha = z
            .is_zigzag(n)
            .then(|| z.zigzag_composition())
            .flatten()
            .ok_or_else(|| Error::Internal(format!("non-zigzag forest {z} in the expansion")))?;
        debug_assert_eq!(zigzag_forest(&alpha, n).as_ref(), Ok(z));
        out.add(BasisIndex::Composition(alpha), c);
    }
    Ok(out)
}
