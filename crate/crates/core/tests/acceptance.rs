//! Exit criteria, one line each. Exact arithmetic throughout, so every
//! tolerance is zero; the wall-clock bounds are asserted too.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use twisted_hv::algebra::{bracket, central, i, l, BasisIndex, Mode};
use twisted_hv::dual::coalgebra::{dual_cobracket_coeff, dual_cobracket_oracle};
use twisted_hv::dual::{translate_rank_mu, PairingOracle};
use twisted_hv::expr::{format_element, parse_element};
use twisted_hv::ybe::classify_cybe;
use twisted_hv::{
    cybe_defect, hv_r_family, q, run_check, DualBracketFamily, DualIndex, DualSector, Error,
    QElement, QRecurrence, Q,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(id: &str, window: i64) -> twisted_hv::CheckReport {
    run_check(id, window, &BTreeMap::new()).expect("registered check")
}

fn ac1() -> Outcome {
    // Lie-label structure constants written out directly.
    let expect = |x: char, m: i64, y: char, n: i64, mode: Mode| -> QElement {
        let c = mode == Mode::Central && m + n == 0;
        let mut e = QElement::zero();
        match (x, y) {
            ('L', 'L') => {
                e += &l(m + n).scale(&q(n - m, 1));
                if c {
                    e += &central(BasisIndex::CL).scale(&q(m * m * m - m, 12));
                }
            }
            ('L', 'I') => {
                e += &i(m + n).scale(&q(n, 1));
                if c {
                    e += &central(BasisIndex::CLI);
                }
            }
            ('I', 'L') => {
                e -= &i(m + n).scale(&q(m, 1));
                if c {
                    e -= &central(BasisIndex::CLI);
                }
            }
            _ => {
                if c {
                    e += &central(BasisIndex::CI).scale(&q(n, 1));
                }
            }
        }
        e
    };
    let gen = |x: char, k: i64| if x == 'L' { l::<Q>(k) } else { i::<Q>(k) };
    let mut bad = 0;
    let mut total = 0;
    for mode in [Mode::Centerless, Mode::Central] {
        for x in ['L', 'I'] {
            for y in ['L', 'I'] {
                for m in -6..=6 {
                    for n in -6..=6 {
                        total += 1;
                        if bracket(&gen(x, m), &gen(y, n), mode).unwrap()
                            != expect(x, m, y, n, mode)
                        {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{bad} of {total} structure constants differ"),
    }
}

fn ac2() -> Outcome {
    let ids = [
        "jacobi_centerless",
        "jacobi_central",
        "antisymmetry",
        "centrality",
    ];
    let reports: Vec<_> = ids.iter().map(|id| check(id, 4)).collect();
    let mut detail: Vec<String> = reports
        .iter()
        .map(|r| format!("{}={}", r.check_id, r.defect_count))
        .collect();
    detail.extend(
        reports
            .iter()
            .flat_map(|r| r.notes.iter().map(|n| format!("[{n}]"))),
    );
    Outcome {
        pass: reports.iter().all(|r| r.passed()),
        detail: detail.join(" "),
    }
}

fn ac3() -> Outcome {
    let qs = [q(0, 1), q(1, 1), q(-3, 1), q(7, 2)];
    let rows = classify_cybe(-5..=5, -5..=5, &qs).unwrap();
    let mismatches = rows.iter().filter(|r| !r.agrees()).count();
    let d = cybe_defect(&hv_r_family(2, 1, &q(1, 1))).unwrap();
    let coeff = d.coeff(&(
        BasisIndex::lie_l(2),
        BasisIndex::lie_i(1),
        BasisIndex::lie_l(0),
    ));
    Outcome {
        pass: mismatches == 0 && coeff == q(-1, 1),
        detail: format!(
            "{} points, {mismatches} disagree with m=n|m=0|q=0; coefficient of L(2)⊗I(1)⊗L(0) at (2,1,1) = {coeff}",
            rows.len()
        ),
    }
}

fn ac4() -> Outcome {
    let idx = DualIndex::window(8);
    let mut bad = 0;
    let mut total = 0;
    for sector in [DualSector::EpsV, DualSector::EpsW] {
        for m in -6..=6 {
            for &a in &idx {
                for &b in &idx {
                    total += 1;
                    let c: Q = dual_cobracket_coeff(sector, m, a, b);
                    if c != dual_cobracket_oracle(sector, m, a.primal(), b.primal()).unwrap() {
                        bad += 1;
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{bad} of {total} coefficients differ"),
    }
}

fn family_samples() -> Vec<DualBracketFamily<Q>> {
    let ms = [-3, -1, 1, 2, 4];
    let qs = [q(0, 1), q(1, 1), q(-2, 1), q(1, 2)];
    let mut out: Vec<_> = ms.iter().map(|&m| DualBracketFamily::T42 { m }).collect();
    for &m in &ms {
        for qv in &qs {
            out.push(DualBracketFamily::T43 { m, q: qv.clone() });
            out.push(DualBracketFamily::T44a { m, q: qv.clone() });
            out.push(DualBracketFamily::T44b { m, q: qv.clone() });
        }
    }
    for (a, b, c) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 3)] {
        out.push(DualBracketFamily::T45 {
            alpha: q(a, 1),
            beta: q(b, 1),
            gamma: q(c, 1),
        });
    }
    out
}

fn ac5() -> Outcome {
    let idx = DualIndex::window(6);
    let fams = family_samples();
    let mut bad = 0;
    let mut total = 0;
    for fam in &fams {
        let oracle = PairingOracle::new(&fam.cobracket().unwrap(), 14).unwrap();
        for &a in &idx {
            for &b in &idx {
                total += 1;
                match oracle.bracket_basis(a, b) {
                    Ok(o) if o == fam.bracket_basis(a, b).unwrap() => {}
                    _ => bad += 1,
                }
            }
        }
    }
    let r = check("thm45_oracle", 6);
    let note = r
        .notes
        .iter()
        .find(|n| n.contains("index variant"))
        .cloned();
    Outcome {
        pass: bad == 0 && note.is_some(),
        detail: format!(
            "{} samples, {bad} of {total} brackets differ; {}",
            fams.len(),
            note.unwrap_or_else(|| "no variant note".into())
        ),
    }
}

fn ac6() -> Outcome {
    let reports: Vec<_> = [
        "dual_jacobi_T42",
        "dual_jacobi_T43",
        "dual_jacobi_T44",
        "dual_jacobi_T45",
    ]
    .iter()
    .map(|id| check(id, 5))
    .collect();
    let detail = reports
        .iter()
        .map(|r| format!("{}={}", r.check_id, r.defect_count))
        .collect::<Vec<_>>();
    Outcome {
        pass: reports.iter().all(|r| r.passed()),
        detail: detail.join(" "),
    }
}

fn ac7() -> Outcome {
    let a = check("cocycle_coboundary", 4);
    let b = check("cocycle_hv_delta", 4);
    Outcome {
        pass: a.passed() && b.passed(),
        detail: format!("coboundary={} hv_delta={}", a.defect_count, b.defect_count),
    }
}

fn ac8() -> Outcome {
    let t = check("cojacobi_triangular", 4);
    let n = check("cojacobi_negative_control", 4);
    let witness = if n.passed() {
        n.notes.join("; ")
    } else {
        "negative control: no nonzero defect found".into()
    };
    Outcome {
        pass: t.passed(),
        detail: format!("triangular defects={}; {witness}", t.defect_count),
    }
}

fn ac9() -> Outcome {
    let fib = QRecurrence::new(
        vec![q(1, 1), q(1, 1)],
        0,
        vec![q(0, 1), q(1, 1)],
        DualSector::EpsV,
    )
    .unwrap();
    let ranks: Vec<usize> = [6, 8, 10]
        .iter()
        .map(|&n| translate_rank_mu(&fib, n).unwrap())
        .collect();
    let pass = fib.eval(5) == q(5, 1)
        && fib.eval(-2) == q(-1, 1)
        && ranks.iter().all(|&r| r <= 2)
        && ranks.windows(2).all(|w| w[0] == w[1]);
    Outcome {
        pass,
        detail: format!(
            "f5={} f-2={} ranks N=6,8,10: {ranks:?}",
            fib.eval(5),
            fib.eval(-2)
        ),
    }
}

fn ac10() -> Outcome {
    let r = check("duality_consistency", 6);
    Outcome {
        pass: r.passed(),
        detail: format!("defects={} {}", r.defect_count, r.notes.join("; ")),
    }
}

fn ac11() -> Outcome {
    let mut corpus = Vec::new();
    for k in -4i64..=4 {
        corpus.push(format!("L({k})"));
        corpus.push(format!("-3/2*I({k})"));
        corpus.push(format!("L({k}) + 2/3*I({})", -k));
        corpus.push(format!("5*L({k}) - I({k}) + 1/12*CL"));
        corpus.push(format!(
            "-L({}) + {}/7*I({k}) - CI + CLI",
            k * 3,
            k.abs() + 1
        ));
        corpus.push(format!("-7/3*L({k}) - 1/2*I({}) + 4*CLI", 2 * k - 1));
    }
    corpus.extend(["0", "CL", "1/2*CL", "L(0) - L(0)", "3/2*L(2) - I(-1)"].map(String::from));
    let round_trip_fail = corpus
        .iter()
        .filter(|s| {
            let e = parse_element(s).unwrap();
            parse_element(&format_element(&e)).unwrap() != e
        })
        .count();
    let malformed = [
        "",
        "L",
        "L(",
        "L(1",
        "L()",
        "L(x)",
        "X(1)",
        "1/0*L(1)",
        "L(1) +",
        "L(1) L(2)",
        "3",
        "3*",
        "*L(1)",
        "L(1) ++ I(2)",
        "I(--1)",
        "1/2/3*L(1)",
        "C",
        "CLX",
        "L(1))",
        "2*(L(1))",
    ];
    let bad_errors = malformed
        .iter()
        .filter(|s| match parse_element(s) {
            Err(Error::Parse { column, .. }) => column == 0 || column > s.chars().count().max(1),
            _ => true,
        })
        .count();
    Outcome {
        pass: corpus.len() >= 50 && round_trip_fail == 0 && bad_errors == 0,
        detail: format!(
            "{} round-trip cases, {round_trip_fail} failed; {} malformed inputs, {bad_errors} without a valid column",
            corpus.len(),
            malformed.len()
        ),
    }
}

/// id, name, runner, time limit in seconds
type Criterion = (&'static str, &'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", "structure constants", ac1, 1),
        ("AC2", "Jacobi, antisymmetry, centrality", ac2, 30),
        ("AC3", "CYBE classification", ac3, 30),
        ("AC4", "dual cobracket coefficients", ac4, 30),
        (
            "AC5",
            "closed-form dual brackets vs pairing oracle",
            ac5,
            60,
        ),
        ("AC6", "dual brackets are Lie algebras", ac6, 60),
        ("AC7", "cocycle identity", ac7, 30),
        ("AC8", "co-Jacobi", ac8, 30),
        ("AC9", "recurrence functionals", ac9, 5),
        ("AC10", "duality consistency", ac10, 10),
        ("AC11", "parser", ac11, 1),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let t = Instant::now();
        let out = run();
        let elapsed = t.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{id} {} {name} ({:.3}s, limit {limit}s{}): {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over time" },
            out.detail
        );
    }
    let total = start.elapsed();
    let in_budget = total < Duration::from_secs(180);
    println!(
        "acceptance: {} of 11 passed in {:.3}s (limit 180s)",
        11 - failed,
        total.as_secs_f64()
    );
    if failed == 0 && in_budget {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
