//! Relation suites: each checks a family of identities and collects the
//! failures instead of panicking, so the CLI can report them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bases::{
    check_grove_characterization, check_grove_duality, expand_forest, expand_multifundamental,
    forest_polynomial, grothendieck_to_grove, grove_polynomial, grove_product_expand,
    grove_to_forest, multifundamental, BasisIndex,
};
use crate::forest::{enumerate_forests_up_to, zigzag_forest, Composition};
use crate::operators::{compose_forest_t, OpKind, OperatorLetter};
use crate::ring::{BetaCoeff, BetaPolynomial, Monomial};
use crate::schubert::{check_extractor_duality, grothendieck, schubert, Permutation};

/// Outcome of one suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn same(&mut self, name: &str, f: &BetaPolynomial, lhs: &BetaPolynomial, rhs: &BetaPolynomial) {
        self.check(lhs == rhs, || format!("{name} on f = {f}: {lhs} != {rhs}"));
    }
}

/// A random polynomial in `x1..x_vars` of degree at most `max_degree` with
/// small coefficients in `Z[b]` (`b`-degree at most 2).
pub fn random_polynomial(rng: &mut impl Rng, vars: usize, max_degree: u32, max_terms: usize) -> BetaPolynomial {
    let mut f = BetaPolynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let degree = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; vars];
        for _ in 0..degree {
            exps[rng.gen_range(0..vars)] += 1;
        }
        let mut c = BetaCoeff::zero();
        for k in 0..=2 {
            if k == 0 || rng.gen_bool(0.3) {
                c += &BetaCoeff::monomial(k, rng.gen_range(-3i64..=3));
            }
        }
        f.add_term(Monomial::from_exponents(exps), &c);
    }
    f
}

/// A random `b`-free polynomial with integer coefficients in `[-9, 9]`.
pub fn random_integer_polynomial(rng: &mut impl Rng, vars: usize, max_degree: u32, max_terms: usize) -> BetaPolynomial {
    let mut f = BetaPolynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let degree = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; vars];
        for _ in 0..degree {
            exps[rng.gen_range(0..vars)] += 1;
        }
        f.add_term(Monomial::from_exponents(exps), &BetaCoeff::from_int(rng.gen_range(-9i64..=9)));
    }
    f
}

fn op(kind: OpKind, i: usize, f: &BetaPolynomial) -> BetaPolynomial {
    OperatorLetter::new(kind, i).apply(f)
}

/// Applies letters right to left, as in `ops(&[(D, 1), (D, 2)], f) = D1 D2 f`.
fn ops(word: &[(OpKind, usize)], f: &BetaPolynomial) -> BetaPolynomial {
    word.iter().rev().fold(f.clone(), |g, &(k, i)| op(k, i, &g))
}

/// Largest operator position used; the random polynomials live in `x1..x6`.
const MAX_POSITION: usize = 3;

/// Nil-Hecke and 0-Hecke relations, `b = 0` degenerations, the relations of
/// `R` and `T`, the equivalent forms of `TK`, `TL` and `TR`, the kernel
/// relation, the Leibniz rule, and the straightening relations of the
/// extractor letters, on `samples` seeded random polynomials in `x1..x6` of
/// degree at most 4.
pub fn operator_suite(seed: u64, samples: usize) -> SuiteReport {
    use OpKind::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("operators");
    let beta = BetaPolynomial::beta();
    let kernel_pool = kernel_pool();
    for _ in 0..samples {
        let f = random_polynomial(&mut rng, 6, 4, 6);
        let g = random_polynomial(&mut rng, 6, 2, 3);
        let f0 = f.specialize_beta(0);
        for i in 1..=MAX_POSITION {
            let j = i + 2;
            // nil-Hecke
            report.check(op(Partial, i, &op(Partial, i, &f)).is_zero(), || {
                format!("D{i}^2 f != 0 for f = {f}")
            });
            report.same("D_i D_j = D_j D_i", &f, &ops(&[(Partial, i), (Partial, j)], &f), &ops(&[(Partial, j), (Partial, i)], &f));
            report.same(
                "D braid",
                &f,
                &ops(&[(Partial, i), (Partial, i + 1), (Partial, i)], &f),
                &ops(&[(Partial, i + 1), (Partial, i), (Partial, i + 1)], &f),
            );
            // 0-Hecke
            let pi = op(Pi, i, &f);
            report.same("P_i^2 = -b P_i", &f, &op(Pi, i, &pi), &-(&beta * &pi));
            report.same("P_i P_j = P_j P_i", &f, &ops(&[(Pi, i), (Pi, j)], &f), &ops(&[(Pi, j), (Pi, i)], &f));
            report.same(
                "P braid",
                &f,
                &ops(&[(Pi, i), (Pi, i + 1), (Pi, i)], &f),
                &ops(&[(Pi, i + 1), (Pi, i), (Pi, i + 1)], &f),
            );
            let ph = op(PiHat, i, &f);
            report.same("PH_i^2 = b PH_i", &f, &op(PiHat, i, &ph), &(&beta * &ph));
            // b = 0
            report.same("P_i at b=0 is D_i", &f, &pi.specialize_beta(0), &op(Partial, i, &f0));
            let t = op(T, i, &f);
            report.same("TK_i at b=0 is T_i", &f, &op(TK, i, &f).specialize_beta(0), &op(T, i, &f0));
            // R and T
            for jj in 1..=i {
                report.same(
                    "R_i R_j = R_j R_{i+1}",
                    &f,
                    &ops(&[(R, i), (R, jj)], &f),
                    &ops(&[(R, jj), (R, i + 1)], &f),
                );
                if jj < i {
                    report.same(
                        "T_i T_j = T_j T_{i+1}",
                        &f,
                        &ops(&[(T, i), (T, jj)], &f),
                        &ops(&[(T, jj), (T, i + 1)], &f),
                    );
                }
            }
            // forms of TK
            let tk = op(TK, i, &f);
            let shifted = &f * &BetaPolynomial::one_plus_beta_x(i + 1);
            report.same("TK_i = R_i P_i", &f, &tk, &ops(&[(R, i), (Pi, i)], &f));
            report.same("TK_i = R_{i+1} P_i", &f, &tk, &ops(&[(R, i + 1), (Pi, i)], &f));
            report.same("TK_i = R_i D_i (1 + b x_{i+1})", &f, &tk, &ops(&[(R, i), (Partial, i)], &shifted));
            report.same("TK_i = T_i - b R_i", &f, &tk, &(&t - &(&beta * &op(R, i, &f))));
            // extractor letters
            report.same("TL_i = TK_i + b R_i = T_i", &f, &op(TL, i, &f), &(&tk + &(&beta * &op(R, i, &f))));
            report.same("TR_i = TK_i + b R_{i+1}", &f, &op(TR, i, &f), &(&tk + &(&beta * &op(R, i + 1, &f))));
            report.same("TR_i = (1 + b x_i) T_i", &f, &op(TR, i, &f), &(&BetaPolynomial::one_plus_beta_x(i) * &t));
            // kernel: (TK_i + b R_i) f = 0 iff (TK_i + b R_{i+1}) f = 0
            let left_zero = op(TL, i, &f).is_zero();
            report.check(left_zero == op(TR, i, &f).is_zero(), || {
                format!("kernels of TL{i} and TR{i} differ on f = {f}")
            });
            let k = kernel_element(&mut rng, &kernel_pool, i);
            report.check(op(TL, i, &k).is_zero() && op(TR, i, &k).is_zero(), || {
                format!("TL{i} or TR{i} does not kill {k}")
            });
            // Leibniz
            let fg = &f * &g;
            for h in [TL, TR] {
                let rhs = &(&op(h, i, &f) * &op(R, i, &g)) + &(&op(R, i + 1, &f) * &op(h, i, &g));
                report.same(&format!("Leibniz for {h:?}{i} (g = {g})"), &f, &op(h, i, &fg), &rhs);
            }
            straightening(&mut report, &f, i);
        }
    }
    report
}

/// `b = 0` forest polynomials of forests without `i` in qdes, per `i`.
fn kernel_pool() -> Vec<Vec<BetaPolynomial>> {
    (0..=MAX_POSITION)
        .map(|i| {
            enumerate_forests_up_to(3, 4)
                .into_iter()
                .filter(|f| !f.qdes().contains(&i))
                .map(|f| forest_polynomial(&f))
                .collect()
        })
        .collect()
}

/// A random integer combination of forest polynomials killed by `T_i`.
fn kernel_element(rng: &mut impl Rng, pool: &[Vec<BetaPolynomial>], i: usize) -> BetaPolynomial {
    let mut k = BetaPolynomial::zero();
    for p in &pool[i] {
        let c = rng.gen_range(-2i64..=2);
        if c != 0 {
            k += &p.scale(&BetaCoeff::from_int(c));
        }
    }
    k
}

fn extractor(side: char, i: usize) -> (OpKind, usize) {
    (if side == 'L' { OpKind::TL } else { OpKind::TR }, i)
}

/// Straightening relations for `A, B` in `{L, R}`:
/// `H^A_i R_{i+1} H^B_{i+1} = R_{i+1} H^A_i TR_{i+1} + R_i H^A_{i+1} TL_{i+1} + b R_i R_{i+2} H^A_{i+1}`
/// and `H^A_i R_{i+1} = R_i H^A_{i+1} + R_{i+1} H^A_i`. The weight `b` on the
/// last term is what makes the first relation hold for symbolic `b`; the
/// unweighted form is checked at `b = 1`.
fn straightening(report: &mut SuiteReport, f: &BetaPolynomial, i: usize) {
    use OpKind::R;
    let beta = BetaCoeff::beta_pow(1);
    for a in ['L', 'R'] {
        let ha_i = extractor(a, i);
        let ha_next = extractor(a, i + 1);
        let first = ops(&[(R, i + 1), ha_i, extractor('R', i + 1)], f);
        let second = ops(&[(R, i), ha_next, extractor('L', i + 1)], f);
        let third = ops(&[(R, i), (R, i + 2), ha_next], f);
        let head = &first + &second;
        for b in ['L', 'R'] {
            let name = format!("straightening H{a}{i} R{} H{b}{}", i + 1, i + 1);
            let lhs = ops(&[ha_i, (R, i + 1), extractor(b, i + 1)], f);
            report.same(&name, f, &lhs, &(&head + &third.scale(&beta)));
            report.same(
                &format!("{name} at b=1"),
                f,
                &lhs.specialize_beta(1),
                &(&head + &third).specialize_beta(1),
            );
        }
        let lhs = ops(&[ha_i, (R, i + 1)], f);
        let rhs = &ops(&[(R, i), ha_next], f) + &ops(&[(R, i + 1), ha_i], f);
        report.same(&format!("straightening H{a}{i} R{}", i + 1), f, &lhs, &rhs);
    }
}

/// `ct H_F G_G = delta` and `ct T_F P_G = delta` for `|F|, |G| <= max_size`,
/// `rho <= n`.
pub fn duality_suite(max_size: usize, n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("duality");
    let grove = check_grove_duality(max_size, n);
    report.checks += grove.entries_checked();
    for (f, g, c) in &grove.failures {
        report.failures.push(format!("ct H_{f} G_{g} = {c}"));
    }
    let forests = enumerate_forests_up_to(max_size, n);
    for f in &forests {
        let t = compose_forest_t(f);
        for g in &forests {
            let c = t.apply(&forest_polynomial(g)).constant_term();
            report.check(c == BetaCoeff::from_int(i64::from(f == g)), || {
                format!("ct T_{f} P_{g} = {c}")
            });
        }
    }
    report
}

/// The grove characterization for every `|F| <= max_size`, `rho <= n`, plus
/// `G_F` at `b = 0` and its lowest component both equal to `P_F`.
pub fn characterization_suite(max_size: usize, n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("characterization");
    for f in enumerate_forests_up_to(max_size, n) {
        let r = check_grove_characterization(&f);
        report.checks += r.positions_checked;
        report.failures.extend(r.failures.iter().map(|e| format!("F = {f}: {e}")));
        let g = grove_polynomial(&f);
        let p = forest_polynomial(&f);
        report.same("G_F at b=0 is P_F", &g, &g.specialize_beta(0), &p);
        report.same("lowest component of G_F is P_F", &g, &g.lowest_component().unwrap_or_default(), &p);
    }
    report
}

/// Grothendieck-to-grove positivity over `S_m` (`m = min(n, 4)`), grove
/// product positivity for `|F|, |G| <= min(max_size, 2)`, `rho <= min(n, 3)`,
/// and grove-to-forest positivity for `|F| <= max_size`, `rho <= min(n, 3)`.
pub fn positivity_suite(max_size: usize, n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("positivity");
    for w in Permutation::all(n.min(4)) {
        match grothendieck_to_grove(&w, n) {
            Ok(r) => report.check(r.report.passed(), || {
                format!("G_{w}: bad grove coefficients at {:?}", indices(&r.report.violations))
            }),
            Err(e) => report.check(false, || format!("G_{w}: {e}")),
        }
    }
    let small = enumerate_forests_up_to(max_size.min(2), n.min(3));
    for f in &small {
        for g in &small {
            match grove_product_expand(f, g, n) {
                Ok((_, r)) => report.check(r.passed(), || {
                    format!("G_{f} G_{g}: negative at {:?}", indices(&r.violations))
                }),
                Err(e) => report.check(false, || format!("G_{f} G_{g}: {e}")),
            }
        }
    }
    for f in enumerate_forests_up_to(max_size, n.min(3)) {
        match grove_to_forest(&f, n) {
            Ok((_, r)) => report.check(r.passed(), || {
                format!("G_{f} in forests: negative at {:?}", indices(&r.violations))
            }),
            Err(e) => report.check(false, || format!("G_{f}: {e}")),
        }
    }
    report
}

fn indices(v: &[BasisIndex]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Multi-fundamental polynomials against zigzag grove polynomials for
/// compositions with at most 3 parts of size at most 3, their duality, and
/// `T_i G_Z = 0` for `i < n` outside qdes.
pub fn multifund_suite(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("multifund");
    for alpha in Composition::all_bounded(3, 3) {
        if alpha.len() > n {
            continue;
        }
        let (Ok(l), Ok(z)) = (multifundamental(&alpha, n), zigzag_forest(&alpha, n)) else {
            report.check(false, || format!("{alpha} with n = {n} was rejected"));
            continue;
        };
        let g = grove_polynomial(&z);
        report.same(&format!("L_({alpha}) = G_Z"), &l, &l, &g);
        report.check(z.is_zigzag(n), || format!("zigzag forest of ({alpha}) has qdes {:?}", z.qdes()));
        for i in (1..n).filter(|i| !z.qdes().contains(i)) {
            report.check(op(OpKind::T, i, &g).is_zero(), || format!("T{i} G_Z != 0 for ({alpha})"));
        }
        match expand_multifundamental(&l, n) {
            Ok(e) => report.check(e.len() == 1 && e.get(&BasisIndex::Composition(alpha.clone())).is_one(), || {
                format!("multi-fundamental expansion of L_({alpha}) is not itself")
            }),
            Err(e) => report.check(false, || format!("L_({alpha}): {e}")),
        }
    }
    report
}

/// Schubert and Grothendieck duality over `S_n`, `G_w` at `b = 0` and its
/// lowest component both equal to `S_w`, and the forest expansion of `S_w`
/// reconstructing it.
pub fn schubert_suite(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("schubert");
    let d = check_extractor_duality(n);
    report.checks += d.checked;
    for (v, w, c) in &d.schubert_failures {
        report.failures.push(format!("ct D_{v} S_{w} = {c}"));
    }
    for (v, w, c) in &d.grothendieck_failures {
        report.failures.push(format!("ct PH_{v} G_{w} = {c}"));
    }
    for w in Permutation::all(n) {
        let s = schubert(&w);
        let g = grothendieck(&w);
        report.same(&format!("G_{w} at b=0"), &g, &g.specialize_beta(0), &s);
        report.same(&format!("lowest component of G_{w}"), &g, &g.lowest_component().unwrap_or_default(), &s);
        let ok = expand_forest(&s, n)
            .and_then(|e| e.reconstruct())
            .is_ok_and(|r| r == s);
        report.check(ok, || format!("forest expansion of S_{w} does not reconstruct"));
    }
    report
}

/// Bounds for [`all_suites`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_size: usize,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_size: 3,
            n: 4,
            seed: 42,
            samples: 200,
        }
    }
}

pub fn all_suites(b: Bounds) -> Vec<SuiteReport> {
    vec![
        operator_suite(b.seed, b.samples),
        duality_suite(b.max_size, b.n),
        characterization_suite(b.max_size, b.n),
        positivity_suite(b.max_size, b.n),
        multifund_suite(b.n),
        schubert_suite(b.n.min(4)),
    ]
}
