//! `thv`: brackets, cobrackets, CYBE scans, dual brackets and the
//! verification suite from the command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on
//! success, 1 when a check fails or an asserted zero is not zero, and 2 on
//! usage or parse errors.

mod args;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use args::QList;

use twisted_hv::dual::coalgebra::{dual_cobracket_coeff, dual_cobracket_oracle};
use twisted_hv::dual::{translate_rank_mu, PairingOracle};
use twisted_hv::{
    bracket, classify_cybe, cybe_defect, parse_element, q, run_all, run_check, Cobracket,
    DualIndex, DualSector, Mode, QElement, QFamily, QRSpec, QRecurrence, Q,
};

#[derive(Parser, Debug)]
#[command(
    name = "thv",
    version,
    about = "Exact computations on the twisted Heisenberg-Virasoro algebra"
)]
struct Cli {
    /// Output format; plain text is the only one.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    T42,
    T43,
    T44a,
    T44b,
    T45,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two elements.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Use the centrally extended bracket.
        #[arg(long)]
        central: bool,
    },
    /// δ(x) for the coboundary of r = a⊗b − b⊗a, or for the (α, β, γ) cocycle.
    Cobracket {
        #[arg(
            long = "r-a",
            allow_hyphen_values = true,
            requires = "r_b",
            conflicts_with = "delta"
        )]
        r_a: Option<String>,
        #[arg(long = "r-b", allow_hyphen_values = true, requires = "r_a")]
        r_b: Option<String>,
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"], allow_hyphen_values = true, value_parser = args::rational)]
        delta: Option<Vec<Q>>,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// CYBE defect of r = a⊗b − b⊗a.
    Cybe {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Exit with status 1 unless the defect vanishes.
        #[arg(long)]
        expect_zero: bool,
    },
    /// Classify r = L(0)⊗(L(m) + q I(n)) − (L(m) + q I(n))⊗L(0) over a grid.
    CybeScan {
        #[arg(long, value_parser = args::range, allow_hyphen_values = true)]
        m: (i64, i64),
        #[arg(long, value_parser = args::range, allow_hyphen_values = true)]
        n: (i64, i64),
        #[arg(long, value_parser = args::q_list, allow_hyphen_values = true)]
        q: QList,
    },
    /// Closed-form dual bracket of two basis functionals.
    DualBracket {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        /// Family parameters, e.g. `m=2,q=1` or `alpha=1,beta=2,gamma=0`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long, value_parser = args::dual_index, allow_hyphen_values = true)]
        i: DualIndex,
        #[arg(long, value_parser = args::dual_index, allow_hyphen_values = true)]
        j: DualIndex,
        /// Also reconstruct the bracket from the primal cobracket.
        #[arg(long)]
        check_oracle: bool,
        #[arg(long, default_value_t = 14)]
        window: i64,
    },
    /// Nonzero coefficients of the dual cobracket of ε_m on a window.
    DualCobracket {
        #[arg(long, value_parser = args::sector)]
        sector: DualSector,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
    /// Run one verification check, or the whole suite.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 4)]
        window: i64,
        /// Check parameter, `key=value`; repeatable.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Evaluate a two-sided linear recurrence.
    Recur {
        #[arg(long, value_parser = args::q_list, allow_hyphen_values = true)]
        coeffs: QList,
        /// `<n0>:<f(n0)>,<f(n0+1)>,...`
        #[arg(long, value_parser = args::seed, allow_hyphen_values = true)]
        seed: (i64, Vec<Q>),
        #[arg(long, value_parser = args::range, allow_hyphen_values = true)]
        eval: (i64, i64),
        /// Also print the shift-space rank on this window.
        #[arg(long)]
        rank: Option<i64>,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<twisted_hv::Error> for Failure {
    fn from(e: twisted_hv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn element(text: &str) -> Result<QElement, Failure> {
    parse_element(text).map_err(|e| Failure::Usage(format!("in `{text}`: {e}")))
}

fn family_of(kind: Family, params: &str) -> Result<QFamily, Failure> {
    let mut map: BTreeMap<String, Q> = BTreeMap::new();
    for (k, v) in args::key_values(params).map_err(Failure::Usage)? {
        let key = match k.as_str() {
            "α" => "alpha".to_owned(),
            "β" => "beta".to_owned(),
            "γ" => "gamma".to_owned(),
            _ => k,
        };
        map.insert(key, args::rational(&v).map_err(Failure::Usage)?);
    }
    let allowed: &[&str] = match kind {
        Family::T42 => &["m"],
        Family::T43 | Family::T44a | Family::T44b => &["m", "q"],
        Family::T45 => &["alpha", "beta", "gamma"],
    };
    if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Failure::Usage(format!(
            "unknown parameter `{k}` for {kind:?}"
        )));
    }
    let get = |k: &str| map.get(k).cloned().unwrap_or_else(|| q(0, 1));
    let int = |k: &str| -> Result<i64, Failure> {
        let v = map
            .get(k)
            .ok_or_else(|| Failure::Usage(format!("missing parameter `{k}`")))?;
        if !v.is_integer() {
            return Err(Failure::Usage(format!(
                "parameter `{k}` must be an integer"
            )));
        }
        v.to_integer()
            .try_into()
            .map_err(|_| Failure::Usage(format!("parameter `{k}` out of range")))
    };
    let fam = match kind {
        Family::T42 => QFamily::T42 { m: int("m")? },
        Family::T43 => QFamily::T43 {
            m: int("m")?,
            q: get("q"),
        },
        Family::T44a => QFamily::T44a {
            m: int("m")?,
            q: get("q"),
        },
        Family::T44b => QFamily::T44b {
            m: int("m")?,
            q: get("q"),
        },
        Family::T45 => QFamily::T45 {
            alpha: get("alpha"),
            beta: get("beta"),
            gamma: get("gamma"),
        },
    };
    fam.validate()?;
    Ok(fam)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Bracket { x, y, central } => {
            let mode = if central {
                Mode::Central
            } else {
                Mode::Centerless
            };
            println!("{}", bracket(&element(&x)?, &element(&y)?, mode)?);
        }
        Command::Cobracket { r_a, r_b, delta, x } => {
            let spec = match (r_a, r_b, delta) {
                (Some(a), Some(b), None) => {
                    Cobracket::coboundary(QRSpec::new(element(&a)?, element(&b)?)?.tensor())?
                }
                (None, None, Some(d)) => {
                    let [alpha, beta, gamma]: [Q; 3] =
                        d.try_into().expect("clap takes three values");
                    Cobracket::hv_delta(alpha, beta, gamma)
                }
                _ => {
                    return Err(Failure::Usage(
                        "give either --r-a and --r-b, or --delta".into(),
                    ))
                }
            };
            println!("{}", spec.apply(&element(&x)?)?);
        }
        Command::Cybe { a, b, expect_zero } => {
            let r = QRSpec::new(element(&a)?, element(&b)?)?.tensor();
            let d = cybe_defect(&r)?;
            println!("r={r}");
            println!(
                "cybe={} defect={d}",
                if d.is_zero() { "ZERO" } else { "NONZERO" }
            );
            if expect_zero && !d.is_zero() {
                return Err(Failure::Check);
            }
        }
        Command::CybeScan { m, n, q: QList(qs) } => {
            let rows = classify_cybe(m.0..=m.1, n.0..=n.1, &qs)?;
            for row in &rows {
                println!("{row}");
            }
            if rows.iter().any(|r| !r.agrees()) {
                return Err(Failure::Check);
            }
        }
        Command::DualBracket {
            family,
            params,
            i,
            j,
            check_oracle,
            window,
        } => {
            let fam = family_of(family, &params)?;
            let closed = fam.bracket_basis(i, j)?;
            println!("family={fam} i={i} j={j}");
            println!("closed={closed}");
            if check_oracle {
                let oracle = PairingOracle::new(&fam.cobracket()?, window)?.bracket_basis(i, j)?;
                let agree = oracle == closed;
                println!(
                    "oracle={oracle} window={window} agree={}",
                    if agree { "YES" } else { "NO" }
                );
                if !agree {
                    return Err(Failure::Check);
                }
            }
        }
        Command::DualCobracket { sector, m, window } => {
            let idx = DualIndex::window(window);
            let src = DualIndex { sector, degree: m };
            let (mut terms, mut mismatches) = (0, 0);
            for &a in &idx {
                for &b in &idx {
                    let c: Q = dual_cobracket_coeff(sector, m, a, b);
                    let o: Q = dual_cobracket_oracle(sector, m, a.primal(), b.primal())?;
                    if c != o {
                        mismatches += 1;
                    }
                    if !(c == q(0, 1) && c == o) {
                        terms += 1;
                        println!("{a}⊗{b} coeff={c} oracle={o}");
                    }
                }
            }
            println!("source={src} window={window} terms={terms} mismatches={mismatches}");
            if mismatches > 0 {
                return Err(Failure::Check);
            }
        }
        Command::Verify {
            suite,
            window,
            params,
        } => {
            let reports = match suite {
                Some(id) => {
                    let mut map = BTreeMap::new();
                    for p in &params {
                        let (k, v) = p
                            .split_once('=')
                            .ok_or_else(|| Failure::Usage(format!("`{p}` is not key=value")))?;
                        map.insert(k.trim().to_owned(), v.trim().to_owned());
                    }
                    vec![run_check(&id, window, &map)?]
                }
                None if !params.is_empty() => {
                    return Err(Failure::Usage("--param needs --suite".into()))
                }
                None => run_all(window)?,
            };
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            eprintln!(
                "{} of {} checks passed",
                reports.len() - failed,
                reports.len()
            );
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
        Command::Recur {
            coeffs: QList(coeffs),
            seed,
            eval,
            rank,
        } => {
            let (anchor, values) = seed;
            let rf = QRecurrence::new(coeffs, anchor, values, DualSector::EpsV)?;
            for (k, v) in rf.values(eval.0, eval.1).iter().enumerate() {
                println!("f({})={v}", eval.0 + k as i64);
            }
            if let Some(n) = rank {
                println!("shift_rank(N={n})={}", translate_rank_mu(&rf, n)?);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Format::Plain = cli.format;
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
