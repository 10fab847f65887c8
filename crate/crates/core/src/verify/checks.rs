use num_traits::One;
use rayon::prelude::*;

use super::params::{q_samples, M_SAMPLES, N_SAMPLES};
use super::{Defect, Outcome, Params};
use crate::algebra::{bracket, bracket_basis, i as gen_i, l as gen_l, BasisIndex, Element, Mode};
use crate::cobracket::{cocycle_defect, cojacobi_defect, Cobracket};
use crate::dual::family::t45_table;
use crate::dual::{
    cobracket_coeff_via_coproduct, dual_basis, dual_cobracket_coeff, dual_cobracket_oracle, pair,
    pair2, translate_rank_lie, translate_rank_mu, DualBracketFamily, DualElement, DualIndex,
    DualSector, PairingOracle, RecurrenceFunctional,
};
use crate::error::{Error, Result};
use crate::scalar::{q, Q};
use crate::tensor::{skew_defect, Tensor2};
use crate::ybe::{alternating_r, classify_cybe, cybe_defect, hv_r_family};

type QElement = Element<Q>;
type QFamily = DualBracketFamily<Q>;

/// `L(-n..n)`, `I(-n..n)`, optionally followed by the central elements.
fn lie_window(n: i64, central: bool) -> Vec<BasisIndex> {
    let mut out: Vec<BasisIndex> = (-n..=n).map(BasisIndex::lie_l).collect();
    out.extend((-n..=n).map(BasisIndex::lie_i));
    if central {
        out.extend([BasisIndex::CL, BasisIndex::CI, BasisIndex::CLI]);
    }
    out
}

fn basis(b: BasisIndex) -> QElement {
    Element::term(b, Q::one())
}

fn mode_word(mode: Mode) -> &'static str {
    match mode {
        Mode::Centerless => "centerless",
        Mode::Central => "central",
    }
}

/// Ordered parallel map; defects keep the input order.
fn scan<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Vec<Defect>> + Sync + Send,
) -> Result<Vec<Defect>> {
    let parts: Vec<Vec<Defect>> = items.par_iter().map(f).collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn triples_upto<T: Copy>(xs: &[T], strict: bool) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for a in 0..xs.len() {
        for b in a..xs.len() {
            for c in b..xs.len() {
                if strict && (a == b || b == c) {
                    continue;
                }
                out.push((xs[a], xs[b], xs[c]));
            }
        }
    }
    out
}

fn pairs_upto<T: Copy>(xs: &[T]) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for a in 0..xs.len() {
        for b in a..xs.len() {
            out.push((xs[a], xs[b]));
        }
    }
    out
}

fn jacobi(window: i64, mode: Mode) -> Result<Outcome> {
    let gens = lie_window(window, mode == Mode::Central);
    let hits: Vec<(String, QElement)> = triples_upto(&gens, false)
        .par_iter()
        .map(|&(a, b, c)| {
            let (x, y, z) = (basis(a), basis(b), basis(c));
            let mut jac = bracket(&x, &bracket(&y, &z, mode)?, mode)?;
            jac += &bracket(&y, &bracket(&z, &x, mode)?, mode)?;
            jac += &bracket(&z, &bracket(&x, &y, mode)?, mode)?;
            Ok((format!("({a}, {b}, {c})"), jac))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, jac)| !jac.is_zero())
        .collect();
    let mut notes = Vec::new();
    if !hits.is_empty()
        && hits
            .iter()
            .all(|(_, j)| j.keys().all(|k| *k == BasisIndex::CLI))
    {
        notes.push(
            "every defect is a multiple of CLI: Jacobi(L_a, L_b, I_c) with a+b+c=0 is (a-b)*CLI, \
             so a constant CLI term in [L_m, I_{-m}] is not a 2-cocycle"
                .to_owned(),
        );
    }
    let defects = hits
        .into_iter()
        .map(|(input, jac)| Defect::new(input, 0, &jac))
        .collect();
    Ok(Outcome { defects, notes })
}

pub(super) fn jacobi_centerless(window: i64, _: &mut Params) -> Result<Outcome> {
    jacobi(window, Mode::Centerless)
}

pub(super) fn jacobi_central(window: i64, _: &mut Params) -> Result<Outcome> {
    jacobi(window, Mode::Central)
}

pub(super) fn antisymmetry(window: i64, _: &mut Params) -> Result<Outcome> {
    let mut defects = Vec::new();
    for mode in [Mode::Centerless, Mode::Central] {
        let gens = lie_window(window, mode == Mode::Central);
        defects.extend(scan(&pairs_upto(&gens), |&(a, b)| {
            let s = bracket_basis::<Q>(a, b, mode)? + bracket_basis(b, a, mode)?;
            Ok(if s.is_zero() {
                vec![]
            } else {
                vec![Defect::new(
                    format!("{} [{a}, {b}] + [{b}, {a}]", mode_word(mode)),
                    0,
                    &s,
                )]
            })
        })?);
    }
    Ok(Outcome {
        defects,
        notes: vec![],
    })
}

pub(super) fn centrality(window: i64, _: &mut Params) -> Result<Outcome> {
    let gens = lie_window(window, true);
    let mut defects = Vec::new();
    for c in [BasisIndex::CL, BasisIndex::CI, BasisIndex::CLI] {
        for &x in &gens {
            for (u, v) in [(c, x), (x, c)] {
                let out = bracket_basis::<Q>(u, v, Mode::Central)?;
                if !out.is_zero() {
                    defects.push(Defect::new(format!("central [{u}, {v}]"), 0, &out));
                }
                match bracket_basis::<Q>(u, v, Mode::Centerless) {
                    Err(Error::CentralInCenterless(_)) => {}
                    other => defects.push(Defect::new(
                        format!("centerless [{u}, {v}]"),
                        "central generator rejected",
                        format!("{other:?}"),
                    )),
                }
            }
        }
    }
    Ok(Outcome {
        defects,
        notes: vec![],
    })
}

/// `L_m` and `I_m` sit in degree `m`, central elements in degree 0.
fn lie_degree(b: BasisIndex) -> i64 {
    match b {
        BasisIndex::V(p) => p - 1,
        BasisIndex::W(q) => q,
        _ => 0,
    }
}

pub(super) fn grading(window: i64, _: &mut Params) -> Result<Outcome> {
    let mut defects = Vec::new();
    for mode in [Mode::Centerless, Mode::Central] {
        let gens = lie_window(window, mode == Mode::Central);
        let all: Vec<(BasisIndex, BasisIndex)> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .collect();
        defects.extend(scan(&all, |&(a, b)| {
            let out = bracket_basis::<Q>(a, b, mode)?;
            let want = lie_degree(a) + lie_degree(b);
            Ok(out
                .keys()
                .filter(|k| lie_degree(**k) != want)
                .map(|k| {
                    Defect::new(
                        format!("{} [{a}, {b}] term {k}", mode_word(mode)),
                        want,
                        lie_degree(*k),
                    )
                })
                .collect())
        })?);
    }
    Ok(Outcome {
        defects,
        notes: vec![],
    })
}

pub(super) fn cybe_classification(window: i64, p: &mut Params) -> Result<Outcome> {
    let (m_lo, m_hi) = p.range("m", (-window, window))?;
    let (n_lo, n_hi) = p.range("n", (-window, window))?;
    let qs = p.q_list("q", &q_samples())?;
    let rows = classify_cybe(m_lo..=m_hi, n_lo..=n_hi, &qs)?;
    let solutions = rows.iter().filter(|r| r.is_solution).count();
    let defects = rows
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| {
            Defect::new(
                format!("m={} n={} q={}", r.m, r.n, r.q),
                if r.predicted { "ZERO" } else { "NONZERO" },
                if r.is_solution { "ZERO" } else { "NONZERO" },
            )
        })
        .collect();
    let mut notes = vec![format!(
        "{solutions} of {} parameter points solve the CYBE",
        rows.len()
    )];
    let one = q(1, 1);
    if (m_lo..=m_hi).contains(&2) && (n_lo..=n_hi).contains(&1) && qs.contains(&one) {
        let d = cybe_defect(&hv_r_family(2, 1, &one))?;
        let key = (
            BasisIndex::lie_l(2),
            BasisIndex::lie_i(1),
            BasisIndex::lie_l(0),
        );
        notes.push(format!(
            "m=2 n=1 q=1: coefficient of L(2)⊗I(1)⊗L(0) is {}",
            d.coeff(&key)
        ));
    }
    Ok(Outcome { defects, notes })
}

/// Five coboundary r-matrices, the fourth of which is not a CYBE solution.
fn coboundary_specs() -> Vec<(String, Tensor2<Q>)> {
    let general = alternating_r(
        &(gen_l(1) + gen_i(0)),
        &(gen_i::<Q>(2).scale(&q(1, 2)) - gen_l(-1)),
    )
    .expect("central-free");
    vec![
        ("hv_r_family(1,1,1)".into(), hv_r_family(1, 1, &q(1, 1))),
        ("hv_r_family(0,2,1/2)".into(), hv_r_family(0, 2, &q(1, 2))),
        ("hv_r_family(3,-1,0)".into(), hv_r_family(3, -1, &q(0, 1))),
        ("hv_r_family(2,1,1)".into(), hv_r_family(2, 1, &q(1, 1))),
        ("alt(L(1) + I(0), 1/2*I(2) - L(-1))".into(), general),
    ]
}

fn hv_delta_specs(p: &mut Params) -> Result<Vec<(String, Cobracket<Q>)>> {
    Ok(p.triples()?
        .into_iter()
        .map(|(a, b, c)| {
            (
                format!("hv_delta({a},{b},{c})"),
                Cobracket::hv_delta(a, b, c),
            )
        })
        .collect())
}

fn cocycle_over(specs: &[(String, Cobracket<Q>)], window: i64) -> Result<Vec<Defect>> {
    let gens = lie_window(window, false);
    let pairs = pairs_upto(&gens);
    let mut defects = Vec::new();
    for (name, spec) in specs {
        defects.extend(scan(&pairs, |&(a, b)| {
            let d = cocycle_defect(spec, &basis(a), &basis(b))?;
            Ok(if d.is_zero() {
                vec![]
            } else {
                vec![Defect::new(format!("{name} x={a} y={b}"), 0, &d)]
            })
        })?);
    }
    Ok(defects)
}

fn coboundaries() -> Result<Vec<(String, Cobracket<Q>)>> {
    coboundary_specs()
        .into_iter()
        .map(|(n, r)| Ok((n, Cobracket::coboundary(r)?)))
        .collect()
}

pub(super) fn cocycle_coboundary(window: i64, _: &mut Params) -> Result<Outcome> {
    let specs = coboundaries()?;
    Ok(Outcome {
        defects: cocycle_over(&specs, window)?,
        notes: vec![format!(
            "{} specs; hv_r_family(2,1,1) is not a CYBE solution",
            specs.len()
        )],
    })
}

pub(super) fn cocycle_hv_delta(window: i64, p: &mut Params) -> Result<Outcome> {
    let specs = hv_delta_specs(p)?;
    Ok(Outcome {
        defects: cocycle_over(&specs, window)?,
        notes: vec![],
    })
}

fn cojacobi_over(name: &str, spec: &Cobracket<Q>, gens: &[BasisIndex]) -> Result<Vec<Defect>> {
    scan(gens, |&g| {
        let d = cojacobi_defect(spec, &basis(g))?;
        Ok(if d.is_zero() {
            vec![]
        } else {
            vec![Defect::new(format!("{name} x={g}"), 0, &d)]
        })
    })
}

pub(super) fn cojacobi_triangular(window: i64, p: &mut Params) -> Result<Outcome> {
    let ms = p.int_list("m", M_SAMPLES)?;
    let qs = p.q_list("q", &q_samples())?;
    let gens = lie_window(window, false);
    let mut defects = Vec::new();
    let mut count = 0;
    let zero = q(0, 1);
    for &m in &ms {
        for &n in N_SAMPLES {
            let name = format!("hv_r_family({m},{n},0)");
            defects.extend(cojacobi_over(
                &name,
                &Cobracket::coboundary(hv_r_family(m, n, &zero))?,
                &gens,
            )?);
            count += 1;
        }
        for qv in &qs {
            let name = format!("hv_r_family({m},{m},{qv})");
            defects.extend(cojacobi_over(
                &name,
                &Cobracket::coboundary(hv_r_family(m, m, qv))?,
                &gens,
            )?);
            count += 1;
        }
    }
    Ok(Outcome {
        defects,
        notes: vec![format!("{count} triangular r-matrices (q=0 and m=n)")],
    })
}

pub(super) fn cojacobi_negative_control(window: i64, _: &mut Params) -> Result<Outcome> {
    let spec = Cobracket::coboundary(hv_r_family(2, 1, &q(1, 1)))?;
    let gens = lie_window(window, false);
    let hits = cojacobi_over("hv_r_family(2,1,1)", &spec, &gens)?;
    if let Some(first) = hits.first() {
        Ok(Outcome {
            defects: vec![],
            notes: vec![format!(
                "nonzero co-Jacobi defect at {} of {} generators; first witness {}",
                hits.len(),
                gens.len(),
                first.input
            )],
        })
    } else {
        Ok(Outcome {
            defects: vec![Defect::new(
                "hv_r_family(2,1,1)",
                format!("nonzero co-Jacobi defect at some generator with |index| <= {window}"),
                "none found",
            )],
            notes: vec![],
        })
    }
}

pub(super) fn skew_image(window: i64, _: &mut Params) -> Result<Outcome> {
    let mut specs = coboundaries()?;
    specs.extend(
        super::params::triple_samples()
            .into_iter()
            .map(|(a, b, c)| {
                (
                    format!("hv_delta({a},{b},{c})"),
                    Cobracket::hv_delta(a, b, c),
                )
            }),
    );
    let gens = lie_window(window, false);
    let mut defects = Vec::new();
    for (name, spec) in &specs {
        defects.extend(scan(&gens, |&g| {
            let s = skew_defect(&spec.apply_basis(g)?);
            Ok(if s.is_zero() {
                vec![]
            } else {
                vec![Defect::new(format!("{name} x={g}"), 0, &s)]
            })
        })?);
    }
    Ok(Outcome {
        defects,
        notes: vec![],
    })
}

pub(super) fn thm41_coeff(window: i64, p: &mut Params) -> Result<Outcome> {
    let (lo, hi) = p.range("m_range", (-window, window))?;
    let span = window + 2;
    let idx = DualIndex::window(span);
    let jobs: Vec<(DualSector, i64)> = [DualSector::EpsV, DualSector::EpsW]
        .into_iter()
        .flat_map(|s| (lo..=hi).map(move |m| (s, m)))
        .collect();
    let defects = scan(&jobs, |&(sector, m)| {
        let mut out = Vec::new();
        for &i in &idx {
            for &j in &idx {
                let closed: Q = dual_cobracket_coeff(sector, m, i, j);
                let oracle: Q = dual_cobracket_oracle(sector, m, i.primal(), j.primal())?;
                let via: Q = cobracket_coeff_via_coproduct(sector, m, i, j);
                let src = DualIndex { sector, degree: m };
                if closed != oracle {
                    out.push(Defect::new(
                        format!("Delta({src}) at {i}⊗{j}"),
                        &oracle,
                        &closed,
                    ));
                }
                if via != closed {
                    out.push(Defect::new(
                        format!("coproduct route Delta({src}) at {i}⊗{j}"),
                        &closed,
                        &via,
                    ));
                }
            }
        }
        Ok(out)
    })?;
    Ok(Outcome {
        defects,
        notes: vec![format!(
            "m in [{lo}..{hi}], basis degrees in [{}..{}]",
            -span, span
        )],
    })
}

fn max_shift(f: &QFamily) -> i64 {
    match f {
        DualBracketFamily::T42 { m }
        | DualBracketFamily::T43 { m, .. }
        | DualBracketFamily::T44a { m, .. }
        | DualBracketFamily::T44b { m, .. } => m.abs() + 1,
        DualBracketFamily::T45 { .. } => 1,
    }
}

pub(crate) fn oracle_window(window: i64, f: &QFamily) -> i64 {
    (2 * window + 2).max(window + max_shift(f) + 3)
}

fn mq_families(p: &mut Params, make: fn(i64, Q) -> QFamily) -> Result<Vec<QFamily>> {
    let ms = p.int_list("m", M_SAMPLES)?;
    let qs = p.q_list("q", &q_samples())?;
    Ok(ms
        .iter()
        .flat_map(|&m| qs.iter().map(move |q| make(m, q.clone())))
        .collect())
}

fn t42_families(p: &mut Params) -> Result<Vec<QFamily>> {
    let fams: Vec<QFamily> = p
        .int_list("m", M_SAMPLES)?
        .into_iter()
        .map(|m| QFamily::T42 { m })
        .collect();
    for f in &fams {
        f.validate()?;
    }
    Ok(fams)
}

fn t45_families(p: &mut Params) -> Result<Vec<QFamily>> {
    Ok(p.triples()?
        .into_iter()
        .map(|(alpha, beta, gamma)| QFamily::T45 { alpha, beta, gamma })
        .collect())
}

fn oracle_compare(fams: &[QFamily], window: i64) -> Result<Vec<Defect>> {
    let idx = DualIndex::window(window);
    let mut defects = Vec::new();
    for fam in fams {
        let oracle = PairingOracle::new(&fam.cobracket()?, oracle_window(window, fam))?;
        let pairs: Vec<(DualIndex, DualIndex)> = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .collect();
        defects.extend(scan(&pairs, |&(i, j)| {
            let closed = fam.bracket_basis(i, j)?;
            let input = format!("{fam} [{i}, {j}]");
            Ok(match oracle.bracket_basis(i, j) {
                Ok(o) if o == closed => vec![],
                Ok(o) => vec![Defect::new(input, &o, &closed)],
                Err(e) => vec![Defect::new(input, "oracle value", e)],
            })
        })?);
    }
    Ok(defects)
}

fn oracle_outcome(fams: Vec<QFamily>, window: i64) -> Result<Outcome> {
    let biggest = fams
        .iter()
        .map(|f| oracle_window(window, f))
        .max()
        .unwrap_or(0);
    Ok(Outcome {
        defects: oracle_compare(&fams, window)?,
        notes: vec![format!(
            "{} parameter samples, oracle window up to {biggest}",
            fams.len()
        )],
    })
}

pub(super) fn thm42_oracle(window: i64, p: &mut Params) -> Result<Outcome> {
    oracle_outcome(t42_families(p)?, window)
}

pub(super) fn thm43_oracle(window: i64, p: &mut Params) -> Result<Outcome> {
    oracle_outcome(mq_families(p, |m, q| QFamily::T43 { m, q })?, window)
}

pub(super) fn thm44a_oracle(window: i64, p: &mut Params) -> Result<Outcome> {
    oracle_outcome(mq_families(p, |m, q| QFamily::T44a { m, q })?, window)
}

pub(super) fn thm44b_oracle(window: i64, p: &mut Params) -> Result<Outcome> {
    oracle_outcome(mq_families(p, |m, q| QFamily::T44b { m, q })?, window)
}

pub(super) fn thm45_oracle(window: i64, p: &mut Params) -> Result<Outcome> {
    let fams = t45_families(p)?;
    let mut out = oracle_outcome(fams.clone(), window)?;
    // Score both candidate pivots against the oracle.
    let ws: Vec<DualIndex> = (-window..=window).map(DualIndex::w).collect();
    let mut misses = [0usize; 2];
    let mut total = 0usize;
    for fam in &fams {
        let DualBracketFamily::T45 { alpha, beta, gamma } = fam else {
            unreachable!()
        };
        let oracle = PairingOracle::new(&fam.cobracket()?, oracle_window(window, fam))?;
        for &i in &ws {
            for &j in &ws {
                let truth = oracle.bracket_basis(i, j)?;
                total += 1;
                for (slot, pivot) in [0i64, 1].into_iter().enumerate() {
                    if t45_table(alpha, beta, gamma, pivot, i, j) != truth {
                        misses[slot] += 1;
                    }
                }
            }
        }
    }
    let verdict = match (misses[0], misses[1]) {
        (0, 0) => "oracle confirms both pivots i=0 and i=1".to_owned(),
        (0, k) => format!(
            "oracle confirms delta_{{i,0}} (pivot i=0, j!=0); pivot i=1 disagrees on {k} of {total} eW pairs"
        ),
        (k, 0) => format!(
            "oracle confirms pivot i=1 (j!=1); delta_{{i,0}} disagrees on {k} of {total} eW pairs"
        ),
        (a, b) => format!("oracle confirms neither pivot ({a} and {b} of {total} eW pairs disagree)"),
    };
    out.notes.push(format!("T45 index variant: {verdict}"));
    Ok(out)
}

fn dual_jacobi(fams: &[QFamily], window: i64) -> Result<Outcome> {
    let idx = DualIndex::window(window);
    let pairs = pairs_upto(&idx);
    let triples = triples_upto(&idx, true);
    let mut defects = Vec::new();
    for fam in fams {
        defects.extend(scan(&pairs, |&(i, j)| {
            let s = fam.bracket_basis(i, j)? + fam.bracket_basis(j, i)?;
            Ok(if s.is_zero() {
                vec![]
            } else {
                vec![Defect::new(format!("{fam} [{i}, {j}] + [{j}, {i}]"), 0, &s)]
            })
        })?);
        defects.extend(scan(&triples, |&(a, b, c)| {
            let (x, y, z) = (dual_basis::<Q>(a), dual_basis::<Q>(b), dual_basis::<Q>(c));
            let mut jac = fam.bracket(&x, &fam.bracket(&y, &z)?)?;
            jac += &fam.bracket(&y, &fam.bracket(&z, &x)?)?;
            jac += &fam.bracket(&z, &fam.bracket(&x, &y)?)?;
            Ok(if jac.is_zero() {
                vec![]
            } else {
                vec![Defect::new(format!("{fam} Jacobi({a}, {b}, {c})"), 0, &jac)]
            })
        })?);
    }
    Ok(Outcome {
        defects,
        notes: vec![format!(
            "{} parameter samples, {} triples each",
            fams.len(),
            triples.len()
        )],
    })
}

pub(super) fn dual_jacobi_t42(window: i64, p: &mut Params) -> Result<Outcome> {
    dual_jacobi(&t42_families(p)?, window)
}

pub(super) fn dual_jacobi_t43(window: i64, p: &mut Params) -> Result<Outcome> {
    dual_jacobi(&mq_families(p, |m, q| QFamily::T43 { m, q })?, window)
}

pub(super) fn dual_jacobi_t44(window: i64, p: &mut Params) -> Result<Outcome> {
    let ms = p.int_list("m", M_SAMPLES)?;
    let qs = p.q_list("q", &q_samples())?;
    let mut fams = Vec::new();
    for &m in &ms {
        for qv in &qs {
            fams.push(QFamily::T44a { m, q: qv.clone() });
            fams.push(QFamily::T44b { m, q: qv.clone() });
        }
    }
    dual_jacobi(&fams, window)
}

pub(super) fn dual_jacobi_t45(window: i64, p: &mut Params) -> Result<Outcome> {
    dual_jacobi(&t45_families(p)?, window)
}

fn fib_iter(n: i64) -> Q {
    // F(-k) = (-1)^(k+1) F(k)
    let k = n.unsigned_abs();
    let (mut a, mut b) = (q(0, 1), q(1, 1));
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    if n < 0 && k.is_multiple_of(2) {
        -a
    } else {
        a
    }
}

pub(super) fn recurrence_rank(window: i64, _: &mut Params) -> Result<Outcome> {
    use DualSector::*;
    let fib = RecurrenceFunctional::new(vec![q(1, 1), q(1, 1)], 0, vec![q(0, 1), q(1, 1)], EpsV)?;
    let samples = vec![
        ("fibonacci", fib.clone()),
        (
            "constant 7",
            RecurrenceFunctional::new(vec![q(1, 1)], 0, vec![q(7, 1)], EpsV)?,
        ),
        ("zero", RecurrenceFunctional::zero(EpsV)),
        (
            "c=(1/2,0,-3)",
            RecurrenceFunctional::new(
                vec![q(1, 2), q(0, 1), q(-3, 1)],
                4,
                vec![q(1, 1), q(-2, 1), q(5, 3)],
                EpsV,
            )?,
        ),
        (
            "c=(2,1)",
            RecurrenceFunctional::new(vec![q(2, 1), q(1, 1)], -3, vec![q(1, 1), q(1, 2)], EpsV)?,
        ),
    ];
    let mut defects = Vec::new();
    let mut notes = Vec::new();
    for n in -window.max(5)..=window.max(5) {
        let (got, want) = (fib.eval(n), fib_iter(n));
        if got != want {
            defects.push(Defect::new(format!("fibonacci f({n})"), want, got));
        }
    }
    for (name, rf) in &samples {
        let base = window.max(rf.order() as i64 + 2);
        let mut ranks = Vec::new();
        for w in [base, base + 2, base + 4] {
            let r = translate_rank_mu(rf, w)?;
            if r > rf.order() {
                defects.push(Defect::new(
                    format!("{name} shift rank N={w}"),
                    format!("<= {}", rf.order()),
                    r,
                ));
            }
            ranks.push(r);
        }
        if ranks.windows(2).any(|p| p[0] != p[1]) {
            defects.push(Defect::new(
                format!("{name} shift rank stability"),
                "constant",
                format!("{ranks:?}"),
            ));
        }
        notes.push(format!(
            "{name}: order {} shift ranks {ranks:?}",
            rf.order()
        ));
    }
    let gens: Vec<BasisIndex> = (0..=2)
        .map(BasisIndex::V)
        .chain((0..=2).map(BasisIndex::W))
        .collect();
    let second = fib.clone().with_sector(EpsW);
    let base = window.max(4);
    let lie: Vec<usize> = [base, base + 2, base + 4]
        .into_iter()
        .map(|w| translate_rank_lie((&fib, &second), &gens, w))
        .collect::<Result<_>>()?;
    if lie.windows(2).any(|p| p[0] != p[1]) {
        defects.push(Defect::new(
            "fibonacci pair Lie translate rank stability",
            "constant",
            format!("{lie:?}"),
        ));
    }
    notes.push(format!("fibonacci pair Lie translate ranks {lie:?}"));
    Ok(Outcome { defects, notes })
}

const GRID_COEFFS: [(i64, i64); 5] = [(1, 1), (-2, 1), (1, 2), (3, 1), (-1, 3)];

fn grid_index(k: usize, mult: usize, offset: usize, window: i64) -> DualIndex {
    let span = (2 * window + 1) as usize;
    let degree = ((k * mult + offset) % span) as i64 - window;
    if (k * mult / span + offset).is_multiple_of(2) {
        DualIndex::v(degree)
    } else {
        DualIndex::w(degree)
    }
}

fn grid_functional(k: usize, salt: usize, window: i64) -> DualElement<Q> {
    let (a, b) = GRID_COEFFS[(k + salt) % 5];
    let (c, d) = GRID_COEFFS[(3 * k + salt + 1) % 5];
    let mut f = DualElement::term(grid_index(k, 7 + salt, salt, window), q(a, b));
    f.add_term(grid_index(k, 11 + salt, 3 * salt + 1, window), q(c, d));
    f
}

pub(crate) fn all_family_samples() -> Vec<QFamily> {
    let qs = q_samples();
    let mut fams: Vec<QFamily> = M_SAMPLES.iter().map(|&m| QFamily::T42 { m }).collect();
    for make in [
        (|m, q| QFamily::T43 { m, q }) as fn(i64, Q) -> QFamily,
        |m, q| QFamily::T44a { m, q },
        |m, q| QFamily::T44b { m, q },
    ] {
        for &m in M_SAMPLES {
            for qv in &qs {
                fams.push(make(m, qv.clone()));
            }
        }
    }
    fams.extend(
        super::params::triple_samples()
            .into_iter()
            .map(|(alpha, beta, gamma)| QFamily::T45 { alpha, beta, gamma }),
    );
    fams
}

pub(super) fn duality_consistency(window: i64, _: &mut Params) -> Result<Outcome> {
    const SAMPLES: usize = 100;
    let fams = all_family_samples();
    let defects = scan(&fams, |fam| {
        let cb = fam.cobracket()?;
        let reach = window + max_shift(fam);
        let mut out = Vec::new();
        for k in 0..SAMPLES {
            let f = grid_functional(k, 0, window);
            let g = grid_functional(k, 2, window);
            let closed = fam.bracket(&f, &g)?;
            // Half the ξ land on the support of the closed form, half sweep the window.
            let xi = match closed.keys().nth(k / 2 % closed.len().max(1)) {
                Some(ix) if k % 2 == 0 => ix.primal(),
                _ => grid_index(k, 5, 1, reach).primal(),
            };
            let lhs: Q = pair2(&f, &g, &cb.apply_basis(xi)?)?;
            let rhs: Q = pair(&closed, &basis(xi))?;
            if lhs != rhs {
                out.push(Defect::new(
                    format!("{fam} f={f} g={g} xi={xi}"),
                    &lhs,
                    &rhs,
                ));
            }
        }
        Ok(out)
    })?;
    Ok(Outcome {
        defects,
        notes: vec![format!(
            "{} family samples x {SAMPLES} (f, g, xi) grid points",
            fams.len()
        )],
    })
}
