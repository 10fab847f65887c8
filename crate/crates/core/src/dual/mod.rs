//! Finite dual elements over the ε-basis and the pairing with the algebra.
//!
//! `(ε^i, 0)` pairs to 1 with `(x^i, 0)` and `(0, ε^j)` with `(0, x^j)`;
//! every other basis pairing is zero. Infinite functionals in the maximal
//! good subspace are modelled by [`RecurrenceFunctional`]; the formal sums
//! produced by the dual cobracket are only ever queried coefficientwise.

use std::fmt;

use crate::algebra::{BasisIndex, Element};
use crate::error::{Error, Result};
use crate::lc::{KeyFormat, Lc};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

pub mod coalgebra;
pub mod family;
pub mod oracle;
pub mod recurrence;

pub use coalgebra::{
    cobracket_coeff_via_coproduct, dual_cobracket_coeff, dual_cobracket_oracle, mu_coproduct_coeff,
    partial_star, partial_star_in,
};
pub use family::{dual_bracket_closed, DualBracketFamily};
pub use oracle::{dual_bracket_oracle, PairingOracle};
pub use recurrence::{
    recurrence_eval, translate_rank_lie, translate_rank_mu, RecurrenceFunctional,
};

/// `EpsV` is the first copy `(ε^i, 0)`, `EpsW` the second `(0, ε^j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualSector {
    EpsV,
    EpsW,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualIndex {
    pub sector: DualSector,
    pub degree: i64,
}

impl DualIndex {
    pub fn v(degree: i64) -> Self {
        Self {
            sector: DualSector::EpsV,
            degree,
        }
    }

    pub fn w(degree: i64) -> Self {
        Self {
            sector: DualSector::EpsW,
            degree,
        }
    }

    /// The basis vector this functional is dual to.
    pub fn primal(self) -> BasisIndex {
        match self.sector {
            DualSector::EpsV => BasisIndex::V(self.degree),
            DualSector::EpsW => BasisIndex::W(self.degree),
        }
    }

    /// Inverse of [`DualIndex::primal`]; `None` for central generators.
    pub fn dual_of(b: BasisIndex) -> Option<Self> {
        match b {
            BasisIndex::V(p) => Some(Self::v(p)),
            BasisIndex::W(q) => Some(Self::w(q)),
            _ => None,
        }
    }

    /// The ε-basis with `|degree| ≤ n`, in canonical order.
    pub fn window(n: i64) -> Vec<Self> {
        let mut out: Vec<Self> = (-n..=n).map(Self::v).collect();
        out.extend((-n..=n).map(Self::w));
        out
    }
}

impl fmt::Display for DualIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sector {
            DualSector::EpsV => write!(f, "eV({})", self.degree),
            DualSector::EpsW => write!(f, "eW({})", self.degree),
        }
    }
}

impl KeyFormat for DualIndex {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type DualElement<S> = Lc<DualIndex, S>;

pub fn dual_basis<S: Scalar>(i: DualIndex) -> DualElement<S> {
    DualElement::term(i, S::one())
}

fn dual_key(b: BasisIndex) -> Result<DualIndex> {
    DualIndex::dual_of(b).ok_or(Error::CentralInCenterless(b))
}

/// `⟨f, v⟩`
pub fn pair<S: Scalar>(f: &DualElement<S>, v: &Element<S>) -> Result<S> {
    let mut acc = S::zero();
    for (b, c) in v {
        let k = dual_key(*b)?;
        let fc = f.coeff(&k);
        if !fc.is_zero() {
            acc = acc + fc * c.clone();
        }
    }
    Ok(acc)
}

/// `⟨f ⊗ g, t⟩ = Σ c · ⟨f, t¹⟩ · ⟨g, t²⟩`
pub fn pair2<S: Scalar>(f: &DualElement<S>, g: &DualElement<S>, t: &Tensor2<S>) -> Result<S> {
    let mut acc = S::zero();
    for (&(a, b), c) in t {
        let fa = f.coeff(&dual_key(a)?);
        if fa.is_zero() {
            continue;
        }
        let gb = g.coeff(&dual_key(b)?);
        if gb.is_zero() {
            continue;
        }
        acc = acc + c.clone() * fa * gb;
    }
    Ok(acc)
}
