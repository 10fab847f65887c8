//! Two-sided linearly recursive functionals.
//!
//! A functional `f = Σ f_n ε^n` lies in the maximal good subspace of
//! `K[x^±1]*` exactly when `f_n = c_1 f_{n-1} + … + c_r f_{n-r}` for every
//! integer `n`. With `c_r ≠ 0` the recurrence runs backwards too, so `f` is
//! determined by `r` consecutive seed values.

use super::DualSector;
use crate::algebra::{bracket_basis, BasisIndex, Mode};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceFunctional<S: Scalar> {
    coeffs: Vec<S>,
    anchor: i64,
    seed: Vec<S>,
    sector: DualSector,
}

impl<S: Scalar> RecurrenceFunctional<S> {
    /// `seed[k]` is `f_{anchor + k}`; `coeffs[j-1]` is `c_j`.
    pub fn new(coeffs: Vec<S>, anchor: i64, seed: Vec<S>, sector: DualSector) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRecurrence("order must be positive".into()));
        }
        if coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(Error::InvalidRecurrence(
                "last coefficient c_r must be nonzero".into(),
            ));
        }
        if seed.len() != coeffs.len() {
            return Err(Error::InvalidRecurrence(format!(
                "order {} needs {} seed values, got {}",
                coeffs.len(),
                coeffs.len(),
                seed.len()
            )));
        }
        Ok(Self {
            coeffs,
            anchor,
            seed,
            sector,
        })
    }

    /// The zero functional, represented with order 1 and `c_1 = 1`.
    pub fn zero(sector: DualSector) -> Self {
        Self {
            coeffs: vec![S::one()],
            anchor: 0,
            seed: vec![S::zero()],
            sector,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    pub fn sector(&self) -> DualSector {
        self.sector
    }

    pub fn with_sector(mut self, sector: DualSector) -> Self {
        self.sector = sector;
        self
    }

    pub fn eval(&self, n: i64) -> S {
        self.values(n, n).pop().expect("one value requested")
    }

    /// `f_lo, …, f_hi`; empty when `lo > hi`.
    pub fn values(&self, lo: i64, hi: i64) -> Vec<S> {
        if lo > hi {
            return Vec::new();
        }
        let r = self.order() as i64;
        let start = lo.min(self.anchor);
        let end = hi.max(self.anchor + r - 1);
        let len = (end - start + 1) as usize;
        let mut buf = vec![S::zero(); len];
        let at = |n: i64| (n - start) as usize;
        for (k, v) in self.seed.iter().enumerate() {
            buf[at(self.anchor + k as i64)] = v.clone();
        }
        for n in self.anchor + r..=end {
            let mut acc = S::zero();
            for (j, c) in self.coeffs.iter().enumerate() {
                acc = acc + c.clone() * buf[at(n - 1 - j as i64)].clone();
            }
            buf[at(n)] = acc;
        }
        // f_{n-r} = (f_n − Σ_{j<r} c_j f_{n-j}) / c_r
        let last = self.coeffs.last().expect("order ≥ 1").clone();
        for low in (start..self.anchor).rev() {
            let n = low + r;
            let mut acc = buf[at(n)].clone();
            for (j, c) in self.coeffs.iter().take(self.order() - 1).enumerate() {
                acc = acc - c.clone() * buf[at(n - 1 - j as i64)].clone();
            }
            buf[at(low)] = acc / last.clone();
        }
        buf.drain(at(lo)..=at(hi)).collect()
    }
}

pub fn recurrence_eval<S: Scalar>(rf: &RecurrenceFunctional<S>, n: i64) -> S {
    rf.eval(n)
}

fn check_window(window: i64, order: usize) -> Result<()> {
    if window < order as i64 + 2 {
        return Err(Error::WindowTooSmall {
            window,
            reason: format!("need at least order + 2 = {}", order + 2),
        });
    }
    Ok(())
}

/// Rank of the shifted sequences `(f_{n+k})_{|n| ≤ N}` for `|k| ≤ N`. For an
/// order-`r` recurrence this never exceeds `r`.
pub fn translate_rank_mu<S: Scalar>(rf: &RecurrenceFunctional<S>, window: i64) -> Result<usize> {
    check_window(window, rf.order())?;
    let vals = rf.values(-2 * window, 2 * window);
    let row = |k: i64| -> Vec<S> {
        (-window..=window)
            .map(|n| vals[(n + k + 2 * window) as usize].clone())
            .collect()
    };
    Ok(rank((-window..=window).map(row).collect()))
}

/// Rank of the sampled Lie translates `v ↦ f([w, v])` over the listed
/// generators `w`, with `v` ranging over `V_n, W_n` for `|n| ≤ N`. The pair
/// holds the first-copy and second-copy components of `f`.
pub fn translate_rank_lie<S: Scalar>(
    pair: (&RecurrenceFunctional<S>, &RecurrenceFunctional<S>),
    generators: &[BasisIndex],
    window: i64,
) -> Result<usize> {
    let (first, second) = pair;
    if first.sector() != DualSector::EpsV || second.sector() != DualSector::EpsW {
        return Err(Error::Usage(
            "functional pair must be (first copy, second copy)".into(),
        ));
    }
    check_window(window, first.order().max(second.order()))?;
    if let Some(c) = generators.iter().find(|g| g.is_central()) {
        return Err(Error::CentralInCenterless(*c));
    }
    let eval = |b: BasisIndex| -> S {
        match b {
            BasisIndex::V(p) => first.eval(p),
            BasisIndex::W(q) => second.eval(q),
            _ => S::zero(),
        }
    };
    let mut rows = Vec::with_capacity(generators.len());
    for &w in generators {
        let mut row = Vec::new();
        for v in (-window..=window)
            .map(BasisIndex::V)
            .chain((-window..=window).map(BasisIndex::W))
        {
            let mut acc = S::zero();
            for (b, c) in &bracket_basis::<S>(w, v, Mode::Centerless)? {
                acc = acc + c.clone() * eval(*b);
            }
            row.push(acc);
        }
        rows.push(row);
    }
    Ok(rank(rows))
}
