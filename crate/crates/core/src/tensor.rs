//! Finite tensors in `L⊗L` and `L⊗L⊗L`, kept fully expanded over basis
//! pairs and triples so that "is this tensor zero" is map emptiness.

use std::fmt;

use crate::algebra::{bracket_basis_into, BasisIndex, Element, Mode};
use crate::error::Result;
use crate::lc::{KeyFormat, Lc};
use crate::scalar::Scalar;

pub type Pair = (BasisIndex, BasisIndex);
pub type Triple = (BasisIndex, BasisIndex, BasisIndex);

pub type Tensor2<S> = Lc<Pair, S>;
pub type Tensor3<S> = Lc<Triple, S>;

impl KeyFormat for Pair {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

impl KeyFormat for Triple {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}⊗{}", self.0, self.1, self.2)
    }
}

/// Outer product `a ⊗ b`.
pub fn tensor_of<S: Scalar>(a: &Element<S>, b: &Element<S>) -> Tensor2<S> {
    let mut out = Tensor2::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_term((*x, *y), cx.clone() * cy.clone());
        }
    }
    out
}

/// `τ(a⊗b) = b⊗a`
pub fn flip_tau<S: Scalar>(t: &Tensor2<S>) -> Tensor2<S> {
    t.map_keys(|&(a, b)| (b, a))
}

/// `(a, b, c) ↦ (b, c, a)`
pub fn cyclic_rotate<S: Scalar>(t: &Tensor3<S>) -> Tensor3<S> {
    t.map_keys(|&(a, b, c)| (b, c, a))
}

/// The diagonal action `x · (y⊗z) = [x, y]⊗z + y⊗[x, z]`.
pub fn adjoint_action<S: Scalar>(x: &Element<S>, t: &Tensor2<S>, mode: Mode) -> Result<Tensor2<S>> {
    let mut out = Tensor2::zero();
    for (g, cg) in x {
        for (&(a, b), ct) in t {
            let c = cg.clone() * ct.clone();
            let mut left = Element::zero();
            bracket_basis_into(*g, a, &c, mode, &mut left)?;
            for (k, v) in &left {
                out.add_term((*k, b), v.clone());
            }
            let mut right = Element::zero();
            bracket_basis_into(*g, b, &c, mode, &mut right)?;
            for (k, v) in &right {
                out.add_term((a, *k), v.clone());
            }
        }
    }
    Ok(out)
}

/// `t + τ(t)`; zero exactly when `t` is antisymmetric.
pub fn skew_defect<S: Scalar>(t: &Tensor2<S>) -> Tensor2<S> {
    t + &flip_tau(t)
}
