//! Alternating r-matrices and the classical Yang-Baxter defect.
//!
//! For `r = Σ a_k ⊗ b_k` the three commutators of `C(r)` land in `L⊗L⊗L`
//! and are taken slotwise:
//!
//! ```text
//! [r12, r13] = Σ [a_k, a_l] ⊗ b_k ⊗ b_l
//! [r12, r23] = Σ a_k ⊗ [b_k, a_l] ⊗ b_l
//! [r13, r23] = Σ a_k ⊗ a_l ⊗ [b_k, b_l]
//! ```
//!
//! All brackets here are centerless.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::algebra::{bracket_basis_into, ensure_central_free, BasisIndex, Element, Mode};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{tensor_of, Tensor2, Tensor3};

/// `r = a⊗b − b⊗a` described by its two factors.
#[derive(Clone, Debug, PartialEq)]
pub struct RSpec<S: Scalar> {
    a: Element<S>,
    b: Element<S>,
}

impl<S: Scalar> RSpec<S> {
    pub fn new(a: Element<S>, b: Element<S>) -> Result<Self> {
        ensure_central_free(&a)?;
        ensure_central_free(&b)?;
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Element<S> {
        &self.a
    }

    pub fn b(&self) -> &Element<S> {
        &self.b
    }

    pub fn tensor(&self) -> Tensor2<S> {
        &tensor_of(&self.a, &self.b) - &tensor_of(&self.b, &self.a)
    }
}

pub fn alternating_r<S: Scalar>(a: &Element<S>, b: &Element<S>) -> Result<Tensor2<S>> {
    Ok(RSpec::new(a.clone(), b.clone())?.tensor())
}

/// `r = (x,0)⊗(x^{m+1}, q x^n) − (x^{m+1}, q x^n)⊗(x,0)`, i.e. the
/// alternating tensor of `L_0` and `L_m + q I_n`.
pub fn hv_r_family<S: Scalar>(m: i64, n: i64, q: &S) -> Tensor2<S> {
    let (a, b) = hv_r_factors(m, n, q);
    RSpec::new(a, b)
        .expect("family factors are central-free")
        .tensor()
}

pub(crate) fn hv_r_factors<S: Scalar>(m: i64, n: i64, q: &S) -> (Element<S>, Element<S>) {
    let a = Element::term(BasisIndex::V(1), S::one());
    let mut b = Element::term(BasisIndex::V(m + 1), S::one());
    b.add_term(BasisIndex::W(n), q.clone());
    (a, b)
}

fn ensure_tensor_central_free<S: Scalar>(r: &Tensor2<S>) -> Result<()> {
    for &(x, y) in r.keys() {
        for g in [x, y] {
            if g.is_central() {
                return Err(Error::CentralInCenterless(g));
            }
        }
    }
    Ok(())
}

/// `C(r) = [r12, r13] + [r12, r23] + [r13, r23]`.
pub fn cybe_defect<S: Scalar>(r: &Tensor2<S>) -> Result<Tensor3<S>> {
    ensure_tensor_central_free(r)?;
    let mut out = Tensor3::zero();
    let mut scratch = Element::zero();
    for (&(a1, a2), ca) in r {
        for (&(b1, b2), cb) in r {
            let c = ca.clone() * cb.clone();
            bracket_basis_into(a1, b1, &c, Mode::Centerless, &mut scratch)?;
            for (k, v) in std::mem::take(&mut scratch).iter() {
                out.add_term((*k, a2, b2), v.clone());
            }
            bracket_basis_into(a2, b1, &c, Mode::Centerless, &mut scratch)?;
            for (k, v) in std::mem::take(&mut scratch).iter() {
                out.add_term((a1, *k, b2), v.clone());
            }
            bracket_basis_into(a2, b2, &c, Mode::Centerless, &mut scratch)?;
            for (k, v) in std::mem::take(&mut scratch).iter() {
                out.add_term((a1, b1, *k), v.clone());
            }
        }
    }
    Ok(out)
}

/// One line of a CYBE scan over the `hv_r_family` parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow<S: Scalar> {
    pub m: i64,
    pub n: i64,
    pub q: S,
    pub is_solution: bool,
    pub predicted: bool,
}

impl<S: Scalar> ScanRow<S> {
    pub fn agrees(&self) -> bool {
        self.is_solution == self.predicted
    }
}

/// Predicted solution set of the family: `m = n`, `m = 0` or `q = 0`.
pub fn predicted_solution<S: Scalar>(m: i64, n: i64, q: &S) -> bool {
    m == n || m == 0 || q.is_zero()
}

fn zero_word(z: bool) -> &'static str {
    if z {
        "ZERO"
    } else {
        "NONZERO"
    }
}

impl<S: Scalar> fmt::Display for ScanRow<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} q={} cybe={} predicted={} agree={}",
            self.m,
            self.n,
            self.q,
            zero_word(self.is_solution),
            zero_word(self.predicted),
            if self.agrees() { "YES" } else { "NO" }
        )
    }
}

/// Brute-force scan, ordered by `(m, n, position in q_list)`.
pub fn classify_cybe<S: Scalar>(
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
    q_list: &[S],
) -> Result<Vec<ScanRow<S>>> {
    if m_range.is_empty() || n_range.is_empty() || q_list.is_empty() {
        return Err(Error::Usage(
            "cybe scan needs nonempty m, n and q ranges".into(),
        ));
    }
    let triples: Vec<(i64, i64, &S)> = m_range
        .flat_map(|m| {
            n_range
                .clone()
                .flat_map(move |n| q_list.iter().map(move |q| (m, n, q)))
        })
        .collect();
    triples
        .into_par_iter()
        .map(|(m, n, q)| {
            let defect = cybe_defect(&hv_r_family(m, n, q))?;
            Ok(ScanRow {
                m,
                n,
                q: q.clone(),
                is_solution: defect.is_zero(),
                predicted: predicted_solution(m, n, q),
            })
        })
        .collect()
}
