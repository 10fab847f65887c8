//! Closed-form brackets on the dual of each coboundary/cocycle family.
//!
//! The formulas below are total, valid for every pair of indices; the usual
//! case-by-case tables follow from them.
//!
//! ```text
//! VV  (T42, T43):  [εV_i, εV_j] = δ_{j,m+1}(1-i) εV_i + δ_{i,1}(2m+1-j) εV_{j-m}
//!                               − δ_{i,m+1}(1-j) εV_j − δ_{j,1}(2m+1-i) εV_{i-m}
//! VW  (T42):       [εV_i, εW_j] = δ_{i,1}(m-j) εW_{j-m} + δ_{i,m+1} j εW_j
//! VW  (T43):       [εV_i, εW_j] = δ_{j,m}(1-i)q εV_i + δ_{i,1}(mq εV_{j-m+1} − (j-m) εW_{j-m})
//!                               + δ_{i,m+1} j εW_j
//! VW  (T44a/b):    [εV_i, εW_j] = δ_{j,m}(1-i)q εV_i + δ_{i,1} mq εV_{j-m+1}
//! WW  (T43, T44):  [εW_i, εW_j] = δ_{i,m} jq εW_j − δ_{j,m} iq εW_i
//! WW  (T45):       [εW_i, εW_j] = (jα+γ)δ_{i,0} εV_{j+1} − (iα+γ)δ_{j,0} εV_{i+1}
//!                               + β(δ_{i,0} εW_j − δ_{j,0} εW_i)
//! ```
//!
//! Every block not listed is zero, and `[εW_i, εV_j] = −[εV_j, εW_i]`.

use std::fmt;

use super::{DualElement, DualIndex, DualSector};
use crate::algebra::{i as gen_i, l as gen_l};
use crate::cobracket::Cobracket;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::ybe::{alternating_r, hv_r_family};

#[derive(Clone, Debug, PartialEq)]
pub enum DualBracketFamily<S: Scalar> {
    /// `r = L_0⊗L_m − L_m⊗L_0`, `m ≠ 0`
    T42 { m: i64 },
    /// `r = L_0⊗(L_m + q I_m) − (L_m + q I_m)⊗L_0`
    T43 { m: i64, q: S },
    /// `r = L_0⊗(L_0 + q I_m) − (L_0 + q I_m)⊗L_0`
    T44a { m: i64, q: S },
    /// `r = L_0⊗q I_m − q I_m⊗L_0`
    T44b { m: i64, q: S },
    /// The cocycle δ with parameters `(α, β, γ)`.
    T45 { alpha: S, beta: S, gamma: S },
}

fn kd(a: i64, b: i64) -> bool {
    a == b
}

impl<S: Scalar> DualBracketFamily<S> {
    pub fn validate(&self) -> Result<()> {
        match self {
            DualBracketFamily::T42 { m: 0 } => Err(Error::DegenerateR(
                "T42 with m = 0 gives r = L_0⊗L_0 − L_0⊗L_0 = 0".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            DualBracketFamily::T42 { .. } => "T42",
            DualBracketFamily::T43 { .. } => "T43",
            DualBracketFamily::T44a { .. } => "T44a",
            DualBracketFamily::T44b { .. } => "T44b",
            DualBracketFamily::T45 { .. } => "T45",
        }
    }

    /// The primal cobracket whose transpose this bracket is.
    pub fn cobracket(&self) -> Result<Cobracket<S>> {
        self.validate()?;
        let zero = S::zero();
        match self {
            DualBracketFamily::T42 { m } => Cobracket::coboundary(hv_r_family(*m, 0, &zero)),
            DualBracketFamily::T43 { m, q } => Cobracket::coboundary(hv_r_family(*m, *m, q)),
            DualBracketFamily::T44a { m, q } => {
                let b = &gen_l::<S>(0) + &gen_i::<S>(*m).scale(q);
                Cobracket::coboundary(alternating_r(&gen_l(0), &b)?)
            }
            DualBracketFamily::T44b { m, q } => {
                Cobracket::coboundary(alternating_r(&gen_l(0), &gen_i::<S>(*m).scale(q))?)
            }
            DualBracketFamily::T45 { alpha, beta, gamma } => Ok(Cobracket::hv_delta(
                alpha.clone(),
                beta.clone(),
                gamma.clone(),
            )),
        }
    }

    /// `[i, j]` on dual basis vectors.
    pub fn bracket_basis(&self, i: DualIndex, j: DualIndex) -> Result<DualElement<S>> {
        self.validate()?;
        let mut out = DualElement::zero();
        self.accumulate(i, j, &S::one(), &mut out);
        Ok(out)
    }

    /// Bilinear extension of [`Self::bracket_basis`].
    pub fn bracket(&self, f: &DualElement<S>, g: &DualElement<S>) -> Result<DualElement<S>> {
        self.validate()?;
        let mut out = DualElement::zero();
        for (i, ci) in f {
            for (j, cj) in g {
                self.accumulate(*i, *j, &(ci.clone() * cj.clone()), &mut out);
            }
        }
        Ok(out)
    }

    fn accumulate(&self, i: DualIndex, j: DualIndex, c: &S, out: &mut DualElement<S>) {
        use DualSector::*;
        match (i.sector, j.sector) {
            (EpsV, EpsV) => self.vv(i.degree, j.degree, c, out),
            (EpsV, EpsW) => self.vw(i.degree, j.degree, c, out),
            (EpsW, EpsV) => self.vw(j.degree, i.degree, &-c.clone(), out),
            (EpsW, EpsW) => self.ww(i.degree, j.degree, c, out),
        }
    }

    fn vv(&self, i: i64, j: i64, c: &S, out: &mut DualElement<S>) {
        let m = match self {
            DualBracketFamily::T42 { m } | DualBracketFamily::T43 { m, .. } => *m,
            _ => return,
        };
        let mut put =
            |deg: i64, k: i64| out.add_term(DualIndex::v(deg), c.clone() * S::from_int(k));
        if kd(j, m + 1) {
            put(i, 1 - i);
        }
        if kd(i, 1) {
            put(j - m, 2 * m + 1 - j);
        }
        if kd(i, m + 1) {
            put(j, -(1 - j));
        }
        if kd(j, 1) {
            put(i - m, -(2 * m + 1 - i));
        }
    }

    fn vw(&self, i: i64, j: i64, c: &S, out: &mut DualElement<S>) {
        let int = S::from_int;
        match self {
            DualBracketFamily::T42 { m } => {
                let m = *m;
                if kd(i, 1) {
                    out.add_term(DualIndex::w(j - m), c.clone() * int(m - j));
                }
                if kd(i, m + 1) {
                    out.add_term(DualIndex::w(j), c.clone() * int(j));
                }
            }
            DualBracketFamily::T43 { m, q } => {
                let m = *m;
                if kd(j, m) {
                    out.add_term(DualIndex::v(i), c.clone() * int(1 - i) * q.clone());
                }
                if kd(i, 1) {
                    out.add_term(DualIndex::v(j - m + 1), c.clone() * int(m) * q.clone());
                    out.add_term(DualIndex::w(j - m), c.clone() * int(-(j - m)));
                }
                if kd(i, m + 1) {
                    out.add_term(DualIndex::w(j), c.clone() * int(j));
                }
            }
            DualBracketFamily::T44a { m, q } | DualBracketFamily::T44b { m, q } => {
                let m = *m;
                if kd(j, m) {
                    out.add_term(DualIndex::v(i), c.clone() * int(1 - i) * q.clone());
                }
                if kd(i, 1) {
                    out.add_term(DualIndex::v(j - m + 1), c.clone() * int(m) * q.clone());
                }
            }
            DualBracketFamily::T45 { .. } => {}
        }
    }

    fn ww(&self, i: i64, j: i64, c: &S, out: &mut DualElement<S>) {
        let int = S::from_int;
        match self {
            DualBracketFamily::T42 { .. } => {}
            DualBracketFamily::T43 { m, q }
            | DualBracketFamily::T44a { m, q }
            | DualBracketFamily::T44b { m, q } => {
                if kd(i, *m) {
                    out.add_term(DualIndex::w(j), c.clone() * int(j) * q.clone());
                }
                if kd(j, *m) {
                    out.add_term(DualIndex::w(i), -(c.clone() * int(i) * q.clone()));
                }
            }
            DualBracketFamily::T45 { alpha, beta, gamma } => {
                if kd(i, 0) {
                    let w = int(j) * alpha.clone() + gamma.clone();
                    out.add_term(DualIndex::v(j + 1), c.clone() * w);
                    out.add_term(DualIndex::w(j), c.clone() * beta.clone());
                }
                if kd(j, 0) {
                    let w = int(i) * alpha.clone() + gamma.clone();
                    out.add_term(DualIndex::v(i + 1), -(c.clone() * w));
                    out.add_term(DualIndex::w(i), -(c.clone() * beta.clone()));
                }
            }
        }
    }
}

/// Closed-form dual bracket of two basis functionals.
pub fn dual_bracket_closed<S: Scalar>(
    family: &DualBracketFamily<S>,
    i: DualIndex,
    j: DualIndex,
) -> Result<DualElement<S>> {
    family.bracket_basis(i, j)
}

/// Case table for `[εW_i, εW_j]` of the δ-dual, keyed on a distinguished
/// index `pivot`: `(jα+γ) εV_{j+1} + β εW_j` when `i = pivot ≠ j`, the
/// antisymmetric counterpart when `j = pivot ≠ i`, zero otherwise.
/// `pivot = 0` agrees with the total formula; `thm45_oracle` also scores
/// `pivot = 1` against the pairing oracle.
pub fn t45_table<S: Scalar>(
    alpha: &S,
    beta: &S,
    gamma: &S,
    pivot: i64,
    i: DualIndex,
    j: DualIndex,
) -> DualElement<S> {
    let mut out = DualElement::zero();
    if i.sector != DualSector::EpsW || j.sector != DualSector::EpsW || i.degree == j.degree {
        return out;
    }
    let row = |k: i64, sign: S, out: &mut DualElement<S>| {
        let w = S::from_int(k) * alpha.clone() + gamma.clone();
        out.add_term(DualIndex::v(k + 1), sign.clone() * w);
        out.add_term(DualIndex::w(k), sign * beta.clone());
    };
    if i.degree == pivot {
        row(j.degree, S::one(), &mut out);
    } else if j.degree == pivot {
        row(i.degree, -S::one(), &mut out);
    }
    out
}

impl<S: Scalar> fmt::Display for DualBracketFamily<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualBracketFamily::T42 { m } => write!(f, "T42(m={m})"),
            DualBracketFamily::T43 { m, q } => write!(f, "T43(m={m},q={q})"),
            DualBracketFamily::T44a { m, q } => write!(f, "T44a(m={m},q={q})"),
            DualBracketFamily::T44b { m, q } => write!(f, "T44b(m={m},q={q})"),
            DualBracketFamily::T45 { alpha, beta, gamma } => {
                write!(f, "T45(alpha={alpha},beta={beta},gamma={gamma})")
            }
        }
    }
}
