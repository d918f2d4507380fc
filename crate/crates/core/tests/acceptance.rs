//! End-to-end acceptance checks. Runs with a custom harness so that one
//! PASS/FAIL line per criterion is always printed.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::{forest, linear_solve, linear_solve_many, p, rational};
use grove_kit::bases::{
    check_grove_characterization, check_grove_duality, expand_grove,
    forest_to_grove_sign_experiment, grothendieck_to_grove, grove_polynomial, grove_product_expand,
    grove_to_forest, multifundamental, BasisIndex,
};
use grove_kit::forest::{enumerate_forests_up_to, zigzag_forest};
use grove_kit::operators::{grove_extractor, Operator};
use grove_kit::schubert::{check_extractor_duality, grothendieck, schubert};
use grove_kit::verify::{operator_suite, random_integer_polynomial};
use grove_kit::{BetaCoeff, BetaPolynomial, Composition, Permutation};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `{forest: coeff}` of an expansion after setting `b = 1`, zero terms dropped.
fn at_one(e: &grove_kit::bases::Expansion) -> BTreeMap<String, i64> {
    e.specialize_beta(1)
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let v: i64 = c.as_integer().unwrap().try_into().unwrap();
            (k.to_string(), v)
        })
        .collect()
}

fn expected(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

// Reference listing of the grove polynomial of 2,2,4 grouped by powers of b.
// It files x1^2*x2^2*x3 under b; its degree puts it under b^2.
const PRINTED_GROVE: &str = "b^3*x1^2*x2^2*x3*x4 \
    + b^2*(2*x1*x2^2*x3*x4 + 2*x1^2*x2*x3*x4 + x1^2*x2^2*x4) \
    + b*(x2^2*x3*x4 + x1*x2*x3*x4 + x1^2*x3*x4 + 2*x1*x2^2*x4 + 2*x1^2*x2*x4 \
         + x1^2*x2^2*x3 + 2*x1*x2^2*x3 + 2*x1^2*x2*x3 + x1^2*x2^2) \
    + x2^2*x4 + x1*x2*x4 + x1^2*x4 + x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1*x2^2 + x1^2*x2";

// The same polynomial with that term under b^2.
const GOLDEN_GROVE: &str = "b^3*x1^2*x2^2*x3*x4 \
    + 2*b^2*x1*x2^2*x3*x4 + 2*b^2*x1^2*x2*x3*x4 + b^2*x1^2*x2^2*x4 + b^2*x1^2*x2^2*x3 \
    + b*x2^2*x3*x4 + b*x1*x2*x3*x4 + b*x1^2*x3*x4 + 2*b*x1*x2^2*x4 + 2*b*x1^2*x2*x4 \
    + 2*b*x1*x2^2*x3 + 2*b*x1^2*x2*x3 + b*x1^2*x2^2 \
    + x2^2*x4 + x1*x2*x4 + x1^2*x4 + x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1*x2^2 + x1^2*x2";

fn expand_products(s: &str) -> BetaPolynomial {
    // b^k*( ... ) groups are expanded by hand: split on the group markers.
    let mut total = BetaPolynomial::zero();
    let mut rest = s;
    while let Some(start) = rest.find('(') {
        let head = &rest[..start];
        let end = start + rest[start..].find(')').unwrap();
        let inner = p(&rest[start + 1..end]);
        let (before, factor) = head.rsplit_once('+').unwrap_or(("", head));
        if !before.trim().is_empty() {
            total = &total + &p(before);
        }
        let factor = p(factor.trim().trim_end_matches('*'));
        total = &total + &(&factor * &inner);
        rest = &rest[end + 1..];
    }
    let tail = rest.trim().trim_start_matches('+');
    if !tail.trim().is_empty() {
        total = &total + &p(tail);
    }
    total
}

fn criterion_1() -> Outcome {
    let g = grove_polynomial(&forest("2,2,4"));
    let golden = p(GOLDEN_GROVE);
    ensure(g == golden, || format!("G = {g}"))?;
    ensure(g.to_string() == golden.to_string(), || "canonical text differs".into())?;
    let monomials: usize = g.terms().map(|(_, c)| c.terms().count()).sum();
    ensure(monomials == 21, || format!("{monomials} monomials"))?;
    let printed = expand_products(PRINTED_GROVE);
    ensure(printed.specialize_beta(1) == g.specialize_beta(1), || "differs from the reference at b = 1".into())?;
    let drift = &g - &printed;
    Ok(format!("21 monomials, exact; reference listing differs only by {drift}"))
}

fn criterion_2() -> Outcome {
    let g = grove_polynomial(&forest("2,2,4"));
    let op: Operator = "TL2 TR3 TL2".parse().unwrap();
    let steps = op.apply_steps(&g);
    let want = [
        expected(&[("2,3", 1), ("1,1,3", 1)]),
        expected(&[("2", 1), ("2,3", 1), ("1,1", 1), ("1,1,3", 1)]),
        expected(&[("e", 1), ("1", 1)]),
    ];
    let mut symbolic = Vec::new();
    for (k, w) in want.iter().enumerate() {
        let e = expand_grove(&steps[k + 1].1, 4).map_err(|e| e.to_string())?;
        let got = at_one(&e);
        ensure(&got == w, || format!("step {}: {got:?}", k + 1))?;
        symbolic.push(e.terms().map(|(i, c)| format!("{c}*G[{i}]")).collect::<Vec<_>>().join(" + "));
    }
    let ct = steps[3].1.constant_term().specialize(&BigInt::from(1));
    ensure(ct == BigInt::from(1), || format!("ct = {ct}"))?;
    Ok(format!("b = 1 chain exact; symbolic steps: {}", symbolic.join(" | ")))
}

fn criterion_3() -> Outcome {
    let f = p("x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2");
    let e = expand_grove(&f, 4).map_err(|e| e.to_string())?;
    let got = at_one(&e);
    let want = expected(&[("2,2,3", 1), ("1,2,2,3", -1), ("1,1,2,3", -2)]);
    ensure(got == want, || format!("expansion {got:?}"))?;
    let h = grove_extractor(&forest("1,1,2,3"));
    ensure(h.to_string() == "TL1 TL1 TR2 TR3", || format!("extractor {h}"))?;
    let images: Vec<BetaPolynomial> = h.apply_steps(&f).into_iter().map(|(_, g)| g.specialize_beta(1)).collect();
    let shown = [
        "x2^2*x3 + x1*x2*x3 + x1^2*x3 + x2^2 + x1*x2 + x1^2",
        "x2^2 - x1^2*x2 + x1*x2 + x2 - x1^2 + x1",
        "-2*x1",
        "-2",
    ];
    for (k, s) in shown.iter().enumerate() {
        ensure(images[k + 1] == p(s), || format!("step {}: {}", k + 1, images[k + 1]))?;
    }
    Ok("coefficients (1, -1, -2) and four intermediate images exact".into())
}

fn criterion_4() -> Outcome {
    let r = check_grove_duality(3, 4);
    ensure(r.passed(), || format!("{:?}", &r.failures[..r.failures.len().min(3)]))?;
    ensure(r.forests.len() == 35, || format!("{} forests", r.forests.len()))?;
    Ok(format!("{} entries of the Kronecker matrix", r.entries_checked()))
}

fn criterion_5() -> Outcome {
    let forests = enumerate_forests_up_to(4, 4);
    let mut positions = 0;
    for f in &forests {
        let r = check_grove_characterization(f);
        ensure(r.passed(), || format!("{f}: {:?}", r.failures))?;
        positions += r.positions_checked;
    }
    Ok(format!("{} forests, {positions} (forest, i) pairs, symbolic b", forests.len()))
}

fn criterion_6() -> Outcome {
    let r = operator_suite(42, 200);
    ensure(r.passed(), || format!("{:?}", &r.failures[..r.failures.len().min(3)]))?;
    Ok(format!("{} checks on 200 samples", r.checks))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in [3, 4] {
        let r = check_extractor_duality(n);
        ensure(r.passed(), || format!("S_{n}: {:?} {:?}", r.schubert_failures, r.grothendieck_failures))?;
        checked += r.checked;
    }
    for w in Permutation::all(4) {
        let (s, g) = (schubert(&w), grothendieck(&w));
        ensure(g.specialize_beta(0) == s, || format!("b = 0 at {w}"))?;
        ensure(g.lowest_component().ok() == Some(s), || format!("lowest component at {w}"))?;
    }
    Ok(format!("{checked} matrix entries per family, 24 specializations"))
}

fn criterion_8() -> Outcome {
    let perms = Permutation::all(4);
    let mut reports = Vec::new();
    let mut top = 0;
    for w in &perms {
        let r = grothendieck_to_grove(w, 4).map_err(|e| e.to_string())?;
        ensure(r.report.passed(), || format!("{w}: {:?}", r.report.violations))?;
        for (index, c) in r.expansion.terms() {
            let BasisIndex::Forest(f) = index else { unreachable!() };
            let a = &r.a[f];
            ensure(!a.is_negative(), || format!("a_{w}^{f} = {a}"))?;
            let k = (f.size() - w.length()) as u32;
            ensure(*c == BetaCoeff::monomial(k, a.clone()), || format!("coefficient {c} at {w}, {f}"))?;
            top = top.max(f.size());
        }
        reports.push(r);
    }
    // Independent check at b = 1 by exact linear algebra.
    let forests = enumerate_forests_up_to(top, 4);
    let basis: Vec<_> = forests.iter().map(grove_polynomial).collect();
    let targets: Vec<_> = perms.iter().map(grothendieck).collect();
    let solved = linear_solve_many(&basis, &targets, 1).ok_or("oracle system singular")?;
    let mut nonzero = 0;
    for (r, column) in reports.iter().zip(&solved) {
        for (f, s) in forests.iter().zip(column) {
            let a = r.a.get(f).cloned().unwrap_or_default();
            ensure(*s == rational(&a), || format!("oracle {s} vs {a} at {}, {f}", r.permutation))?;
            nonzero += usize::from(!a.is_zero());
        }
    }
    Ok(format!("24 permutations, {nonzero} nonzero a_w^F, oracle over {} forests agrees", forests.len()))
}

fn criterion_9() -> Outcome {
    let forests = enumerate_forests_up_to(2, 3);
    let mut pairs = 0;
    for f in &forests {
        for g in &forests {
            let (e, report) = grove_product_expand(f, g, 3).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("{f} x {g}: {:?}", report.violations))?;
            let product = &grove_polynomial(f) * &grove_polynomial(g);
            ensure(e.reconstruct().ok() == Some(product), || format!("{f} x {g} does not reconstruct"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn criterion_10() -> Outcome {
    let mut cases = 0;
    for n in [3, 4] {
        for alpha in Composition::all_bounded(3, 3) {
            if alpha.len() > n {
                continue;
            }
            let z = zigzag_forest(&alpha, n).map_err(|e| e.to_string())?;
            let l = multifundamental(&alpha, n).map_err(|e| e.to_string())?;
            ensure(l == grove_polynomial(&z), || format!("({alpha}), n = {n}"))?;
            cases += 1;
        }
    }
    let fig = zigzag_forest(&Composition::new(vec![2, 3, 1]).unwrap(), 4).map_err(|e| e.to_string())?;
    ensure(fig.size() == 6, || format!("size {}", fig.size()))?;
    ensure(fig.qdes().into_iter().collect::<Vec<_>>() == vec![4], || format!("qdes {:?}", fig.qdes()))?;
    Ok(format!("{cases} cases; (2,3,1) in n = 4 gives {fig}"))
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut coefficients = 0;
    for _ in 0..50 {
        let f = random_integer_polynomial(&mut rng, 3, 3, 8);
        let e = expand_grove(&f, 3).map_err(|e| e.to_string())?;
        ensure(e.reconstruct().ok().as_ref() == Some(&f), || format!("round trip of {f}"))?;
        let top = e.terms().map(|(i, _)| if let BasisIndex::Forest(x) = i { x.size() } else { 0 }).max().unwrap_or(0);
        let forests = enumerate_forests_up_to(top.max(3), 3);
        for x in &forests {
            let direct = grove_extractor(x).apply(&f).constant_term();
            ensure(direct == e.forest_coeff(x), || format!("ct H_{x} f = {direct} for f = {f}"))?;
        }
        let basis: Vec<_> = forests.iter().map(grove_polynomial).collect();
        for beta in [-1, 1, 2] {
            let solved = linear_solve(&basis, &f, beta).ok_or("oracle system singular")?;
            let peeled = e.specialize_beta(beta);
            for (x, s) in forests.iter().zip(&solved) {
                let c = peeled.forest_coeff(x).as_integer().unwrap();
                ensure(rational(&c) == *s, || format!("b = {beta}, {x}: {c} vs {s} for f = {f}"))?;
            }
        }
        coefficients += e.len();
    }
    Ok(format!("50 polynomials, {coefficients} nonzero coefficients"))
}

fn criterion_12() -> Outcome {
    let forests = enumerate_forests_up_to(3, 3);
    for f in &forests {
        let (e, report) = grove_to_forest(f, 3).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{f}: {:?}", report.violations))?;
        ensure(e.reconstruct().ok() == Some(grove_polynomial(f).specialize_beta(1)), || format!("{f}"))?;
    }
    // The converse is only observed.
    let (mut rows, mut alternating, mut forests_ok) = (0, 0, 0);
    for f in &forests {
        let r = forest_to_grove_sign_experiment(f, 3).map_err(|e| e.to_string())?;
        rows += r.rows.len();
        alternating += r.rows.iter().filter(|row| row.matches).count();
        forests_ok += usize::from(r.alternating());
    }
    Ok(format!(
        "{} forests positive; experiment: {alternating}/{rows} signs alternate, {forests_ok}/{} forests fully alternating",
        forests.len(),
        forests.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("grove polynomial golden", criterion_1),
        ("extractor chain golden", criterion_2),
        ("quasisymmetric expansion golden", criterion_3),
        ("grove duality matrix", criterion_4),
        ("characterization suite", criterion_5),
        ("operator relation suites", criterion_6),
        ("Schubert and Grothendieck dualities", criterion_7),
        ("Grothendieck positivity", criterion_8),
        ("product positivity", criterion_9),
        ("multi-fundamental equality", criterion_10),
        ("basis round trip", criterion_11),
        ("grove to forest positivity", criterion_12),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({secs:.1}s) {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({secs:.1}s) {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
