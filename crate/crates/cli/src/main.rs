use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grove_kit::bases::{
    expand_forest, expand_grove, expand_multifundamental, forest_polynomial, forest_to_grove_sign_experiment,
    grove_polynomial, multifundamental, BasisIndex, Expansion,
};
use grove_kit::forest::enumerate_forests_up_to;
use grove_kit::json::{self, BetaMode, ExpansionJson, IndexJson, PolynomialJson, SCHEMA};
use grove_kit::schubert::{grothendieck, schubert};
use grove_kit::verify::{self, Bounds, SuiteReport};
use grove_kit::{BetaPolynomial, Composition, Error, IndexedForest, Permutation};
use serde_json::json;

/// Forest, grove, Schubert and Grothendieck polynomials with exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "grove", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one basis polynomial.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        /// Forest as a trimming word, e.g. `2,2,4`; `e` is the empty forest.
        #[arg(long)]
        forest: Option<IndexedForest>,
        /// Permutation in one-line notation, e.g. `1,4,3,2`.
        #[arg(long)]
        perm: Option<Permutation>,
        /// Composition, e.g. `2,3,1`.
        #[arg(long)]
        composition: Option<Composition>,
        /// Number of variables (multi-fundamentals only).
        #[arg(long)]
        n: Option<usize>,
        /// `sym` keeps b symbolic, an integer substitutes it.
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        beta: BetaMode,
    },
    /// Expand a polynomial in a basis.
    Expand {
        #[arg(value_enum)]
        basis: ExpandBasis,
        /// Polynomial text such as `b*x1*x2 + x3`; `-` reads standard input.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Expansion window x1..xn; defaults to the largest variable present.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        beta: BetaMode,
    },
    /// Run relation and duality suites; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = Bounds::default().max_size)]
        max_size: usize,
        #[arg(long, default_value_t = Bounds::default().n)]
        n: usize,
        #[arg(long, default_value_t = Bounds::default().seed)]
        seed: u64,
        /// Random polynomials for the operator suite.
        #[arg(long, default_value_t = Bounds::default().samples)]
        samples: usize,
    },
    /// Exploratory computations with no pass/fail verdict.
    Experiment {
        #[arg(value_enum)]
        name: ExperimentName,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Forest,
    Grove,
    Schubert,
    Grothendieck,
    Multifund,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandBasis {
    Grove,
    Forest,
    Multifund,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Operators,
    Duality,
    Characterization,
    Positivity,
    Multifund,
    Schubert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExperimentName {
    ForestToGroveSigns,
}

enum Failure {
    /// Bad input or an operation the library refused.
    Usage(String),
    /// A check ran and did not hold.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Poly {
            kind,
            forest,
            perm,
            composition,
            n,
            beta,
        } => cmd_poly(kind, forest, perm, composition, n, beta, cli.format),
        Command::Expand { basis, input, n, beta } => cmd_expand(basis, &input, n, beta, cli.format),
        Command::Verify {
            suite,
            max_size,
            n,
            seed,
            samples,
        } => cmd_verify(
            suite,
            Bounds {
                max_size,
                n,
                seed,
                samples,
            },
            cli.format,
        ),
        Command::Experiment { name, max_size, n } => match name {
            ExperimentName::ForestToGroveSigns => cmd_signs(max_size, n, cli.format),
        },
    }
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("`poly {kind}` needs --{flag}")))
}

fn cmd_poly(
    kind: PolyKind,
    forest: Option<IndexedForest>,
    perm: Option<Permutation>,
    composition: Option<Composition>,
    n: Option<usize>,
    beta: BetaMode,
    format: Format,
) -> Result<(), Failure> {
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let (index, poly) = match kind {
        PolyKind::Forest | PolyKind::Grove => {
            let f = required(forest, "forest", &name)?;
            let poly = if kind == PolyKind::Forest {
                forest_polynomial(&f)
            } else {
                grove_polynomial(&f)
            };
            (BasisIndex::Forest(f), poly)
        }
        PolyKind::Schubert | PolyKind::Grothendieck => {
            let w = required(perm, "perm", &name)?;
            let poly = if kind == PolyKind::Schubert {
                schubert(&w)
            } else {
                grothendieck(&w)
            };
            (BasisIndex::Permutation(w), poly)
        }
        PolyKind::Multifund => {
            let alpha = required(composition, "composition", &name)?;
            let n = required(n, "n", &name)?;
            let poly = multifundamental(&alpha, n)?;
            (BasisIndex::Composition(alpha), poly)
        }
    };
    let poly = beta.apply(&poly);
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => {
            let doc = PolynomialJson {
                schema: SCHEMA.to_string(),
                kind: name,
                index: IndexJson::from(&index),
                beta: beta.to_string(),
                polynomial: poly.to_string(),
            };
            println!("{}", json::to_string(&doc));
        }
    }
    Ok(())
}

fn read_input(input: &str) -> Result<BetaPolynomial, Failure> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        Ok(buf.parse()?)
    } else {
        Ok(input.parse()?)
    }
}

fn cmd_expand(basis: ExpandBasis, input: &str, n: Option<usize>, beta: BetaMode, format: Format) -> Result<(), Failure> {
    let f = read_input(input)?;
    let n = n.unwrap_or_else(|| f.max_variable().unwrap_or(1).max(1));
    let symbolic = match basis {
        ExpandBasis::Grove => expand_grove(&f, n)?,
        ExpandBasis::Forest => expand_forest(&f, n)?,
        ExpandBasis::Multifund => expand_multifundamental(&f, n)?,
    };
    let e = beta.apply_expansion(&symbolic);
    let reconstructs = reconstructs(&e, &f, beta)?;
    match format {
        Format::Text => {
            if e.is_empty() {
                println!("0");
            }
            for (index, c) in e.terms() {
                println!("{index} ↦ {c}");
            }
        }
        Format::Json => {
            let mut doc = ExpansionJson::new(&e, beta);
            doc.reconstructs = Some(reconstructs);
            println!("{}", json::to_string(&doc));
        }
    }
    if reconstructs {
        Ok(())
    } else {
        eprintln!("expansion does not reconstruct the input");
        Err(Failure::Check)
    }
}

/// Sum of coefficients times basis elements, compared at the chosen `b`.
fn reconstructs(e: &Expansion, f: &BetaPolynomial, beta: BetaMode) -> Result<bool, Failure> {
    Ok(beta.apply(&e.reconstruct()?) == beta.apply(f))
}

fn cmd_verify(suite: Suite, bounds: Bounds, format: Format) -> Result<(), Failure> {
    let reports: Vec<SuiteReport> = match suite {
        Suite::All => verify::all_suites(bounds),
        Suite::Operators => vec![verify::operator_suite(bounds.seed, bounds.samples)],
        Suite::Duality => vec![verify::duality_suite(bounds.max_size, bounds.n)],
        Suite::Characterization => vec![verify::characterization_suite(bounds.max_size, bounds.n)],
        Suite::Positivity => vec![verify::positivity_suite(bounds.max_size, bounds.n)],
        Suite::Multifund => vec![verify::multifund_suite(bounds.n)],
        Suite::Schubert => vec![verify::schubert_suite(bounds.n.min(4))],
    };
    let passed = reports.iter().all(SuiteReport::passed);
    match format {
        Format::Text => {
            for r in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                println!("{:<17} {verdict}  {} checks", r.suite, r.checks);
                for failure in &r.failures {
                    println!("  {failure}");
                }
            }
        }
        Format::Json => {
            let suites: Vec<_> = reports
                .iter()
                .map(|r| json!({"suite": r.suite, "checks": r.checks, "passed": r.passed(), "failures": r.failures}))
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "passed": passed,
                "bounds": {"max_size": bounds.max_size, "n": bounds.n, "seed": bounds.seed, "samples": bounds.samples},
                "suites": suites,
            });
            println!("{}", json::to_string(&doc));
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_signs(max_size: usize, n: usize, format: Format) -> Result<(), Failure> {
    let forests = enumerate_forests_up_to(max_size, n);
    let mut reports = Vec::new();
    for f in &forests {
        reports.push(forest_to_grove_sign_experiment(f, n)?);
    }
    let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
    let matching: usize = reports.iter().map(|r| r.rows.iter().filter(|row| row.matches).count()).sum();
    match format {
        Format::Text => {
            println!("{:<12} {:<14} {:>6} {:>9}  matches", "forest", "grove", "coeff", "expected");
            for r in &reports {
                for row in &r.rows {
                    let sign = if row.expected_sign > 0 { "+" } else { "-" };
                    let ok = if row.matches { "yes" } else { "no" };
                    println!("{:<12} {:<14} {:>6} {:>9}  {ok}", r.forest.to_string(), row.grove.to_string(), row.coeff.to_string(), sign);
                }
            }
            println!("# {matching} of {rows} coefficients have sign (-1)^(|G|-|F|)");
        }
        Format::Json => {
            let table: Vec<_> = reports
                .iter()
                .flat_map(|r| {
                    r.rows.iter().map(|row| {
                        json!({
                            "forest": json::ForestJson::from(&r.forest),
                            "grove": json::ForestJson::from(&row.grove),
                            "coeff": row.coeff.to_string(),
                            "expected_sign": row.expected_sign,
                            "matches": row.matches,
                        })
                    })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "experiment": "forest-to-grove-signs",
                "beta": "1",
                "max_size": max_size,
                "n": n,
                "rows": table,
                "matching": matching,
                "total": rows,
            });
            println!("{}", json::to_string(&doc));
        }
    }
    Ok(())
}
