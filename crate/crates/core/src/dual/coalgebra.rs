//! The dual Lie coalgebra: coefficients of `Δ(ε^m)` and the associative
//! pieces (`μ*`, `∂*`) they are assembled from.
//!
//! `Δ((ε^m, 0)) = Σ_{i+j=m+1} (j-i) (ε^i,0)⊗(ε^j,0)` and
//! `Δ((0, ε^m)) = Σ_{i+j=m+1} ( j (ε^i,0)⊗(0,ε^j) − i (0,ε^i)⊗(ε^j,0) )`.
//! These are infinite sums, so only single coefficients are exposed.

use super::{pair, DualElement, DualIndex, DualSector};
use crate::algebra::{bracket_basis, BasisIndex, Mode};
use crate::error::Result;
use crate::scalar::Scalar;

/// Coefficient of `i ⊗ j` in `Δ(ε_m)` for the given source sector.
pub fn dual_cobracket_coeff<S: Scalar>(
    sector: DualSector,
    m: i64,
    i: DualIndex,
    j: DualIndex,
) -> S {
    use DualSector::*;
    if i.degree + j.degree != m + 1 {
        return S::zero();
    }
    let k = match (sector, i.sector, j.sector) {
        (EpsV, EpsV, EpsV) => j.degree - i.degree,
        (EpsW, EpsV, EpsW) => j.degree,
        (EpsW, EpsW, EpsV) => -i.degree,
        _ => 0,
    };
    S::from_int(k)
}

/// `⟨ε_m, [b_i, b_j]⟩`, the same coefficient read off the primal bracket.
pub fn dual_cobracket_oracle<S: Scalar>(
    sector: DualSector,
    m: i64,
    bi: BasisIndex,
    bj: BasisIndex,
) -> Result<S> {
    let eps = DualElement::term(DualIndex { sector, degree: m }, S::one());
    pair(&eps, &bracket_basis(bi, bj, Mode::Centerless)?)
}

/// `∂*(ε^m) = (m+1) ε^{m+1}` in the first copy.
pub fn partial_star<S: Scalar>(m: i64) -> DualElement<S> {
    partial_star_in(DualSector::EpsV, m)
}

pub fn partial_star_in<S: Scalar>(sector: DualSector, m: i64) -> DualElement<S> {
    DualElement::term(
        DualIndex {
            sector,
            degree: m + 1,
        },
        S::from_int(m + 1),
    )
}

/// Coefficient of `ε^i ⊗ ε^j` in `μ*(ε^m) = Σ_{i+j=m} ε^i ⊗ ε^j`.
pub fn mu_coproduct_coeff<S: Scalar>(m: i64, i: i64, j: i64) -> S {
    if i + j == m {
        S::one()
    } else {
        S::zero()
    }
}

/// Recomputes [`dual_cobracket_coeff`] from the coproduct and `∂*`:
///
/// ```text
/// Δ(ε^m,0) = Σ_{a+b=m} (ε^a,0)⊗(∂*ε^b,0) − (∂*ε^a,0)⊗(ε^b,0)
/// Δ(0,ε^m) = Σ_{a+b=m} (ε^a,0)⊗(0,∂*ε^b) − (0,∂*ε^a)⊗(ε^b,0)
/// ```
///
/// Only `a ∈ {deg i, deg i − 1}` can hit the `i` slot, so the sum is finite.
pub fn cobracket_coeff_via_coproduct<S: Scalar>(
    sector: DualSector,
    m: i64,
    i: DualIndex,
    j: DualIndex,
) -> S {
    use DualSector::*;
    let (left_plain, right_star, left_star, right_plain) = match sector {
        EpsV => (EpsV, EpsV, EpsV, EpsV),
        EpsW => (EpsV, EpsW, EpsW, EpsV),
    };
    let mut acc = S::zero();
    for a in [i.degree - 1, i.degree] {
        let b = m - a;
        let mu = mu_coproduct_coeff::<S>(m, a, b);
        if mu.is_zero() {
            continue;
        }
        // ε^a ⊗ ∂*ε^b
        let first = DualIndex {
            sector: left_plain,
            degree: a,
        };
        let second: DualElement<S> = partial_star_in(right_star, b);
        if first == i {
            acc = acc + mu.clone() * second.coeff(&j);
        }
        // − ∂*ε^a ⊗ ε^b
        let first: DualElement<S> = partial_star_in(left_star, a);
        let second = DualIndex {
            sector: right_plain,
            degree: b,
        };
        if second == j {
            acc = acc - mu * first.coeff(&i);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    #[test]
    fn coefficient_examples() {
        let c: Q = dual_cobracket_coeff(DualSector::EpsV, 2, DualIndex::v(0), DualIndex::v(3));
        assert_eq!(c, q(3, 1));
        let c: Q = dual_cobracket_coeff(DualSector::EpsW, 2, DualIndex::v(1), DualIndex::w(2));
        assert_eq!(c, q(2, 1));
        let c: Q = dual_cobracket_coeff(DualSector::EpsV, 2, DualIndex::v(1), DualIndex::w(2));
        assert_eq!(c, q(0, 1));
    }

    #[test]
    fn oracle_examples() {
        // ⟨(0,ε^2), [L_1, I_1]⟩ = 1
        let c: Q =
            dual_cobracket_oracle(DualSector::EpsW, 2, BasisIndex::V(2), BasisIndex::W(1)).unwrap();
        assert_eq!(c, q(1, 1));
        for (p, s) in [(0, 3), (-2, 4)] {
            let c: Q =
                dual_cobracket_oracle(DualSector::EpsV, 1, BasisIndex::W(p), BasisIndex::W(s))
                    .unwrap();
            assert_eq!(c, q(0, 1));
        }
        let c: Q =
            dual_cobracket_oracle(DualSector::EpsV, 3, BasisIndex::V(2), BasisIndex::V(2)).unwrap();
        assert_eq!(c, q(0, 1));
    }

    #[test]
    fn partial_star_examples() {
        assert_eq!(
            partial_star::<Q>(3),
            DualElement::term(DualIndex::v(4), q(4, 1))
        );
        assert!(partial_star::<Q>(-1).is_zero());
        assert_eq!(
            partial_star::<Q>(0),
            DualElement::term(DualIndex::v(1), q(1, 1))
        );
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_coproduct_coeff::<Q>(5, 2, 3), q(1, 1));
        assert_eq!(mu_coproduct_coeff::<Q>(5, 2, 2), q(0, 1));
        assert_eq!(mu_coproduct_coeff::<Q>(0, 0, 0), q(1, 1));
    }

    #[test]
    fn coproduct_route_matches() {
        for sector in [DualSector::EpsV, DualSector::EpsW] {
            for m in -4..=4 {
                for i in DualIndex::window(5) {
                    for j in DualIndex::window(5) {
                        let a: Q = dual_cobracket_coeff(sector, m, i, j);
                        let b: Q = cobracket_coeff_via_coproduct(sector, m, i, j);
                        assert_eq!(a, b, "{sector:?} m={m} {i} {j}");
                    }
                }
            }
        }
    }
}
