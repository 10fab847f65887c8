//! Cobrackets on the centerless algebra and the identities a Lie bialgebra
//! structure has to satisfy.

use crate::algebra::{bracket, ensure_central_free, BasisIndex, Element, Mode};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{adjoint_action, cyclic_rotate, Tensor2, Tensor3};

pub use crate::tensor::skew_defect;

/// An antisymmetric, central-free `r ∈ L⊗L`. Construction is the only way
/// to get one, so every coboundary cobracket is built on a valid `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coboundary<S: Scalar> {
    r: Tensor2<S>,
}

impl<S: Scalar> Coboundary<S> {
    pub fn new(r: Tensor2<S>) -> Result<Self> {
        if let Some(&(a, b)) = r.keys().find(|(a, b)| a.is_central() || b.is_central()) {
            let c = if a.is_central() { a } else { b };
            return Err(Error::InvalidR(format!("central generator {c} in r")));
        }
        if !skew_defect(&r).is_zero() {
            return Err(Error::InvalidR("r is not antisymmetric (τ r ≠ −r)".into()));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> &Tensor2<S> {
        &self.r
    }
}

/// Parameters of the non-coboundary cocycle
/// `δ(L_n) = (nα + γ)(I_0⊗I_n − I_n⊗I_0)`, `δ(I_n) = β(I_0⊗I_n − I_n⊗I_0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HvDelta<S: Scalar> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
}

impl<S: Scalar> HvDelta<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Self {
        Self { alpha, beta, gamma }
    }

    fn apply_basis(&self, g: BasisIndex, c: &S, out: &mut Tensor2<S>) -> Result<()> {
        let (weight, n) = match g {
            // L_n = V(n+1)
            BasisIndex::V(p) => {
                let n = p - 1;
                (S::from_int(n) * self.alpha.clone() + self.gamma.clone(), n)
            }
            BasisIndex::W(n) => (self.beta.clone(), n),
            other => return Err(Error::CentralInCenterless(other)),
        };
        let w = weight * c.clone();
        out.add_term((BasisIndex::W(0), BasisIndex::W(n)), w.clone());
        out.add_term((BasisIndex::W(n), BasisIndex::W(0)), -w);
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cobracket<S: Scalar> {
    /// `Δ_r(x) = x · r`
    Coboundary(Coboundary<S>),
    HvDelta(HvDelta<S>),
    /// Pointwise sum, e.g. `Δ = Δ_r + δ`.
    Sum(Vec<Cobracket<S>>),
}

impl<S: Scalar> Cobracket<S> {
    pub fn coboundary(r: Tensor2<S>) -> Result<Self> {
        Ok(Cobracket::Coboundary(Coboundary::new(r)?))
    }

    pub fn hv_delta(alpha: S, beta: S, gamma: S) -> Self {
        Cobracket::HvDelta(HvDelta::new(alpha, beta, gamma))
    }

    pub fn sum(parts: Vec<Cobracket<S>>) -> Self {
        Cobracket::Sum(parts)
    }

    pub fn apply(&self, x: &Element<S>) -> Result<Tensor2<S>> {
        ensure_central_free(x)?;
        match self {
            Cobracket::Coboundary(cb) => adjoint_action(x, &cb.r, Mode::Centerless),
            Cobracket::HvDelta(d) => {
                let mut out = Tensor2::zero();
                for (g, c) in x {
                    d.apply_basis(*g, c, &mut out)?;
                }
                Ok(out)
            }
            Cobracket::Sum(parts) => {
                let mut out = Tensor2::zero();
                for p in parts {
                    out += &p.apply(x)?;
                }
                Ok(out)
            }
        }
    }

    pub fn apply_basis(&self, g: BasisIndex) -> Result<Tensor2<S>> {
        self.apply(&Element::term(g, S::one()))
    }
}

pub fn apply_cobracket<S: Scalar>(spec: &Cobracket<S>, x: &Element<S>) -> Result<Tensor2<S>> {
    spec.apply(x)
}

/// `δ[x, y] − x·δ(y) + y·δ(x)`
pub fn cocycle_defect<S: Scalar>(
    spec: &Cobracket<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> Result<Tensor2<S>> {
    let xy = bracket(x, y, Mode::Centerless)?;
    let mut out = spec.apply(&xy)?;
    out -= &adjoint_action(x, &spec.apply(y)?, Mode::Centerless)?;
    out += &adjoint_action(y, &spec.apply(x)?, Mode::Centerless)?;
    Ok(out)
}

/// `(δ⊗id)∘δ`, with δ applied to the left slot of each term.
fn left_iterate<S: Scalar>(spec: &Cobracket<S>, x: &Element<S>) -> Result<Tensor3<S>> {
    let mut out = Tensor3::zero();
    for (&(a, b), c) in &spec.apply(x)? {
        for (&(p, q), e) in &spec.apply_basis(a)? {
            out.add_term((p, q, b), c.clone() * e.clone());
        }
    }
    Ok(out)
}

/// `(id + ρ + ρ²)((δ⊗id)∘δ)(x)` with `ρ` the cyclic rotation.
pub fn cojacobi_defect<S: Scalar>(spec: &Cobracket<S>, x: &Element<S>) -> Result<Tensor3<S>> {
    let t = left_iterate(spec, x)?;
    let t1 = cyclic_rotate(&t);
    let t2 = cyclic_rotate(&t1);
    Ok(&(&t + &t1) + &t2)
}
