//! The twisted Heisenberg-Virasoro algebra.
//!
//! Generators are stored by monomial degree in the realization
//! `K[x^±1] ⊕ K[x^±1]`: `V(p)` is `(x^p, 0)` and `W(q)` is `(0, x^q)`, so the
//! usual labels are `L_m = V(m+1)` and `I_n = W(n)`. The three central
//! elements only appear in [`Mode::Central`].
//!
//! Centerless bracket in degree form:
//!
//! ```text
//! [V_p, V_s] = (s - p) V_{p+s-1}
//! [V_p, W_q] = q W_{p+q-1}
//! [W_p, W_q] = 0
//! ```
//!
//! The central extension adds, in Lie labels,
//! `δ_{m+n,0} (m³-m)/12 C_L` to `[L_m, L_n]`, `n δ_{m+n,0} C_I` to
//! `[I_m, I_n]` and `δ_{m+n,0} C_LI` to `[L_m, I_n]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lc::Lc;
use crate::scalar::Scalar;

/// One basis vector of the algebra. The derived order is the canonical
/// order: `V < W < CL < CI < CLI`, then ascending degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    V(i64),
    W(i64),
    CL,
    CI,
    CLI,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    V,
    W,
    CL,
    CI,
    CLI,
}

impl BasisIndex {
    pub fn sector(self) -> Sector {
        match self {
            BasisIndex::V(_) => Sector::V,
            BasisIndex::W(_) => Sector::W,
            BasisIndex::CL => Sector::CL,
            BasisIndex::CI => Sector::CI,
            BasisIndex::CLI => Sector::CLI,
        }
    }

    /// Monomial degree; `None` for central generators.
    pub fn degree(self) -> Option<i64> {
        match self {
            BasisIndex::V(p) | BasisIndex::W(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_central(self) -> bool {
        self.degree().is_none()
    }

    /// `L_m`
    pub fn lie_l(m: i64) -> Self {
        BasisIndex::V(m + 1)
    }

    /// `I_n`
    pub fn lie_i(n: i64) -> Self {
        BasisIndex::W(n)
    }
}

/// Prints Lie labels: `V(p)` as `L(p-1)`, `W(q)` as `I(q)`.
impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::V(p) => write!(f, "L({})", p - 1),
            BasisIndex::W(q) => write!(f, "I({q})"),
            BasisIndex::CL => f.write_str("CL"),
            BasisIndex::CI => f.write_str("CI"),
            BasisIndex::CLI => f.write_str("CLI"),
        }
    }
}

impl crate::lc::KeyFormat for BasisIndex {
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Element<S> = Lc<BasisIndex, S>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    L,
    I,
    CL,
    CI,
    CLI,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Centerless,
    Central,
}

/// Single generator with unit coefficient. `index` is the Lie label and must
/// be present exactly for `L` and `I`.
pub fn make_generator<S: Scalar>(kind: GeneratorKind, index: Option<i64>) -> Result<Element<S>> {
    let basis = match (kind, index) {
        (GeneratorKind::L, Some(m)) => BasisIndex::lie_l(m),
        (GeneratorKind::I, Some(n)) => BasisIndex::lie_i(n),
        (GeneratorKind::CL, None) => BasisIndex::CL,
        (GeneratorKind::CI, None) => BasisIndex::CI,
        (GeneratorKind::CLI, None) => BasisIndex::CLI,
        (GeneratorKind::L | GeneratorKind::I, None) => {
            return Err(Error::Usage(format!("{kind:?} needs an index")))
        }
        (_, Some(_)) => return Err(Error::Usage(format!("{kind:?} takes no index"))),
    };
    Ok(Element::term(basis, S::one()))
}

/// `L_m` with unit coefficient.
pub fn l<S: Scalar>(m: i64) -> Element<S> {
    Element::term(BasisIndex::lie_l(m), S::one())
}

/// `I_n` with unit coefficient.
pub fn i<S: Scalar>(n: i64) -> Element<S> {
    Element::term(BasisIndex::lie_i(n), S::one())
}

/// A central generator with unit coefficient.
pub fn central<S: Scalar>(c: BasisIndex) -> Element<S> {
    debug_assert!(c.is_central());
    Element::term(c, S::one())
}

/// Fails on the first central generator in `x`.
pub fn ensure_central_free<S: Scalar>(x: &Element<S>) -> Result<()> {
    match x.keys().find(|b| b.is_central()) {
        Some(b) => Err(Error::CentralInCenterless(*b)),
        None => Ok(()),
    }
}

/// Bracket of two basis vectors, accumulated as `c · [a, b]` into `out`.
pub(crate) fn bracket_basis_into<S: Scalar>(
    a: BasisIndex,
    b: BasisIndex,
    c: &S,
    mode: Mode,
    out: &mut Element<S>,
) -> Result<()> {
    use BasisIndex::*;
    if mode == Mode::Centerless {
        if a.is_central() {
            return Err(Error::CentralInCenterless(a));
        }
        if b.is_central() {
            return Err(Error::CentralInCenterless(b));
        }
    }
    let int = S::from_int;
    match (a, b) {
        (V(p), V(s)) => {
            out.add_term(V(p + s - 1), c.clone() * int(s - p));
            if mode == Mode::Central && p + s == 2 {
                // L_m with m = p - 1, and n = -m
                let m = p - 1;
                let cl = int(m * m * m - m) / int(12);
                out.add_term(CL, c.clone() * cl);
            }
        }
        (V(p), W(q)) => {
            out.add_term(W(p + q - 1), c.clone() * int(q));
            if mode == Mode::Central && p + q == 1 {
                out.add_term(CLI, c.clone());
            }
        }
        (W(_), V(_)) => {
            bracket_basis_into(b, a, &-c.clone(), mode, out)?;
        }
        (W(p), W(q)) if mode == Mode::Central && p + q == 0 => {
            out.add_term(CI, c.clone() * int(q));
        }
        // central generators bracket to zero with everything
        _ => {}
    }
    Ok(())
}

pub fn bracket_basis<S: Scalar>(a: BasisIndex, b: BasisIndex, mode: Mode) -> Result<Element<S>> {
    let mut out = Element::zero();
    bracket_basis_into(a, b, &S::one(), mode, &mut out)?;
    Ok(out)
}

/// Bilinear extension of the generator table.
pub fn bracket<S: Scalar>(x: &Element<S>, y: &Element<S>, mode: Mode) -> Result<Element<S>> {
    let mut out = Element::zero();
    if mode == Mode::Centerless {
        ensure_central_free(x)?;
        ensure_central_free(y)?;
    }
    for (a, ca) in x {
        for (b, cb) in y {
            bracket_basis_into(*a, *b, &(ca.clone() * cb.clone()), mode, &mut out)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    fn lq(m: i64) -> Element<Q> {
        l(m)
    }
    fn iq(n: i64) -> Element<Q> {
        i(n)
    }

    #[test]
    fn generators_use_monomial_degree() {
        let e: Element<Q> = make_generator(GeneratorKind::L, Some(2)).unwrap();
        assert_eq!(e, Element::term(BasisIndex::V(3), q(1, 1)));
        let e: Element<Q> = make_generator(GeneratorKind::I, Some(-1)).unwrap();
        assert_eq!(e, Element::term(BasisIndex::W(-1), q(1, 1)));
        let e: Element<Q> = make_generator(GeneratorKind::CL, None).unwrap();
        assert_eq!(e, Element::term(BasisIndex::CL, q(1, 1)));
    }

    #[test]
    fn generator_index_misuse() {
        assert!(matches!(
            make_generator::<Q>(GeneratorKind::CL, Some(1)),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            make_generator::<Q>(GeneratorKind::L, None),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn combine_examples() {
        let z = Element::combine(&q(1, 1), &lq(1), &q(-1, 1), &lq(1));
        assert!(z.is_zero());
        let two_halves = Element::combine(&q(1, 2), &lq(0), &q(1, 2), &lq(0));
        assert_eq!(two_halves, Element::term(BasisIndex::V(1), q(1, 1)));
        let cl: Element<Q> = central(BasisIndex::CL);
        let e = Element::combine(&q(2, 1), &iq(3), &q(3, 1), &cl);
        let expected: Element<Q> = [(BasisIndex::W(3), q(2, 1)), (BasisIndex::CL, q(3, 1))]
            .into_iter()
            .collect();
        assert_eq!(e, expected);
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&lq(1), &lq(2), Mode::Centerless).unwrap(), lq(3));
        let expected = Element::combine(&q(-4, 1), &lq(0), &q(1, 2), &central(BasisIndex::CL));
        assert_eq!(bracket(&lq(2), &lq(-2), Mode::Central).unwrap(), expected);
        assert_eq!(
            bracket(&iq(3), &iq(-3), Mode::Central).unwrap(),
            central::<Q>(BasisIndex::CI).scale(&q(-3, 1))
        );
        assert_eq!(
            bracket(&lq(0), &iq(5), Mode::Centerless).unwrap(),
            iq(5).scale(&q(5, 1))
        );
    }

    #[test]
    fn central_rejected_in_centerless_mode() {
        let cl: Element<Q> = central(BasisIndex::CL);
        assert_eq!(
            bracket(&lq(0), &cl, Mode::Centerless),
            Err(Error::CentralInCenterless(BasisIndex::CL))
        );
        assert!(bracket(&lq(0), &cl, Mode::Central).unwrap().is_zero());
    }

    #[test]
    fn li_central_term() {
        // [L_2, I_-2] = -2 I_0 + C_LI ; [I_-2, L_2] is its negative
        let expected = Element::combine(&q(-2, 1), &iq(0), &q(1, 1), &central(BasisIndex::CLI));
        assert_eq!(bracket(&lq(2), &iq(-2), Mode::Central).unwrap(), expected);
        assert_eq!(bracket(&iq(-2), &lq(2), Mode::Central).unwrap(), -expected);
    }

    #[test]
    fn display_uses_lie_labels() {
        assert_eq!(BasisIndex::V(3).to_string(), "L(2)");
        assert_eq!(BasisIndex::W(-1).to_string(), "I(-1)");
    }
}
