//! Ground truth for dual brackets by evaluation against the primal basis.
//!
//! `⟨[f, g], ξ⟩ = ⟨f ⊗ g, Δ ξ⟩`, so `[f, g]` is recovered by pairing
//! `f ⊗ g` with `Δ(ξ)` for every basis vector `ξ` in a window. Nothing here
//! consults the closed forms in [`super::family`].

use rayon::prelude::*;

use super::{pair2, DualElement, DualIndex};
use crate::algebra::BasisIndex;
use crate::cobracket::Cobracket;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// `Δ(ξ)` cached for every `ξ ∈ {V_k, W_k : |k| ≤ window}`.
pub struct PairingOracle<S: Scalar> {
    window: i64,
    images: Vec<(DualIndex, Tensor2<S>)>,
}

impl<S: Scalar> PairingOracle<S> {
    pub fn new(cobracket: &Cobracket<S>, window: i64) -> Result<Self> {
        if window < 2 {
            return Err(Error::WindowTooSmall {
                window,
                reason: "the oracle needs a guard band at |k| ∈ {N-1, N}".into(),
            });
        }
        let images = DualIndex::window(window)
            .into_par_iter()
            .map(|xi| Ok((xi, cobracket.apply_basis(xi.primal())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { window, images })
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// `Δ(ξ)` for a basis vector inside the window.
    pub fn image(&self, xi: BasisIndex) -> Option<&Tensor2<S>> {
        let k = DualIndex::dual_of(xi)?;
        self.images.iter().find(|(d, _)| *d == k).map(|(_, t)| t)
    }

    /// `[f, g]`, or `WindowTooSmall` when a value in the boundary band is
    /// nonzero and the reconstruction may be truncated.
    pub fn bracket(&self, f: &DualElement<S>, g: &DualElement<S>) -> Result<DualElement<S>> {
        let mut out = DualElement::zero();
        for (xi, delta) in &self.images {
            let v = pair2(f, g, delta)?;
            if v.is_zero() {
                continue;
            }
            if xi.degree.abs() >= self.window - 1 {
                return Err(Error::WindowTooSmall {
                    window: self.window,
                    reason: format!("nonzero value at boundary vector {}", xi.primal()),
                });
            }
            out.add_term(*xi, v);
        }
        Ok(out)
    }

    pub fn bracket_basis(&self, i: DualIndex, j: DualIndex) -> Result<DualElement<S>> {
        self.bracket(
            &DualElement::term(i, S::one()),
            &DualElement::term(j, S::one()),
        )
    }
}

pub fn dual_bracket_oracle<S: Scalar>(
    cobracket: &Cobracket<S>,
    f: &DualElement<S>,
    g: &DualElement<S>,
    window: i64,
) -> Result<DualElement<S>> {
    PairingOracle::new(cobracket, window)?.bracket(f, g)
}
