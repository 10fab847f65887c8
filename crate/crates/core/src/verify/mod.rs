//! Named, repeatable verification checks with defect counts.
//!
//! Every check is exhaustive over a window `N` of generator or functional
//! indices and returns a [`CheckReport`]. Reports render as
//!
//! ```text
//! check=<id> window=<N> params=<text> status=PASS|FAIL defects=<k>
//! defect: input=<text> expected=<text> actual=<text>
//! note: <text>
//! ```
//!
//! with at most [`DEFECT_CAP`] defect lines; `defects=<k>` is the true count.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

mod checks;
mod params;

pub use params::Params;

pub const DEFECT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Defect {
    pub fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Self {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub window: i64,
    pub params: String,
    pub status: Status,
    pub defect_count: usize,
    pub defects: Vec<Defect>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(check_id: &str, window: i64, params: String, outcome: Outcome) -> Self {
        let defect_count = outcome.defects.len();
        let mut defects = outcome.defects;
        defects.truncate(DEFECT_CAP);
        Self {
            check_id: check_id.to_owned(),
            window,
            params,
            status: if defect_count == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            defect_count,
            defects,
            notes: outcome.notes,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} window={} params={} status={} defects={}",
            self.check_id, self.window, self.params, self.status, self.defect_count
        )?;
        for d in &self.defects {
            write!(
                f,
                "\ndefect: input={} expected={} actual={}",
                d.input, d.expected, d.actual
            )?;
        }
        for n in &self.notes {
            write!(f, "\nnote: {n}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub defects: Vec<Defect>,
    pub notes: Vec<String>,
}

type CheckFn = fn(i64, &mut Params) -> Result<Outcome>;

struct Registered {
    id: &'static str,
    keys: &'static [&'static str],
    run: CheckFn,
}

const REGISTRY: &[Registered] = &[
    Registered {
        id: "jacobi_centerless",
        keys: &[],
        run: checks::jacobi_centerless,
    },
    Registered {
        id: "jacobi_central",
        keys: &[],
        run: checks::jacobi_central,
    },
    Registered {
        id: "antisymmetry",
        keys: &[],
        run: checks::antisymmetry,
    },
    Registered {
        id: "centrality",
        keys: &[],
        run: checks::centrality,
    },
    Registered {
        id: "grading",
        keys: &[],
        run: checks::grading,
    },
    Registered {
        id: "cybe_classification",
        keys: &["m", "n", "q"],
        run: checks::cybe_classification,
    },
    Registered {
        id: "cocycle_coboundary",
        keys: &[],
        run: checks::cocycle_coboundary,
    },
    Registered {
        id: "cocycle_hv_delta",
        keys: params::TRIPLE_KEYS,
        run: checks::cocycle_hv_delta,
    },
    Registered {
        id: "cojacobi_triangular",
        keys: &["m", "q"],
        run: checks::cojacobi_triangular,
    },
    Registered {
        id: "cojacobi_negative_control",
        keys: &[],
        run: checks::cojacobi_negative_control,
    },
    Registered {
        id: "skew_image",
        keys: &[],
        run: checks::skew_image,
    },
    Registered {
        id: "thm41_coeff",
        keys: &["m_range"],
        run: checks::thm41_coeff,
    },
    Registered {
        id: "thm42_oracle",
        keys: &["m"],
        run: checks::thm42_oracle,
    },
    Registered {
        id: "thm43_oracle",
        keys: &["m", "q"],
        run: checks::thm43_oracle,
    },
    Registered {
        id: "thm44a_oracle",
        keys: &["m", "q"],
        run: checks::thm44a_oracle,
    },
    Registered {
        id: "thm44b_oracle",
        keys: &["m", "q"],
        run: checks::thm44b_oracle,
    },
    Registered {
        id: "thm45_oracle",
        keys: params::TRIPLE_KEYS,
        run: checks::thm45_oracle,
    },
    Registered {
        id: "dual_jacobi_T42",
        keys: &["m"],
        run: checks::dual_jacobi_t42,
    },
    Registered {
        id: "dual_jacobi_T43",
        keys: &["m", "q"],
        run: checks::dual_jacobi_t43,
    },
    Registered {
        id: "dual_jacobi_T44",
        keys: &["m", "q"],
        run: checks::dual_jacobi_t44,
    },
    Registered {
        id: "dual_jacobi_T45",
        keys: params::TRIPLE_KEYS,
        run: checks::dual_jacobi_t45,
    },
    Registered {
        id: "recurrence_rank",
        keys: &[],
        run: checks::recurrence_rank,
    },
    Registered {
        id: "duality_consistency",
        keys: &[],
        run: checks::duality_consistency,
    },
];

/// Registered check ids in registry (and report) order.
pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|r| r.id).collect()
}

pub fn run_check(
    check_id: &str,
    window: i64,
    params: &BTreeMap<String, String>,
) -> Result<CheckReport> {
    let entry = REGISTRY
        .iter()
        .find(|r| r.id == check_id)
        .ok_or_else(|| Error::UnknownCheck(check_id.to_owned()))?;
    if window < 1 {
        return Err(Error::WindowTooSmall {
            window,
            reason: "window must be positive".into(),
        });
    }
    let mut p = Params::new(check_id, entry.keys, params)?;
    let outcome = (entry.run)(window, &mut p)?;
    Ok(CheckReport::new(entry.id, window, p.canonical(), outcome))
}

/// Every registered check with default parameters, in registry order.
pub fn run_all(window: i64) -> Result<Vec<CheckReport>> {
    if window < 4 {
        return Err(Error::WindowTooSmall {
            window,
            reason: "the full suite needs window ≥ 4".into(),
        });
    }
    let none = BTreeMap::new();
    REGISTRY
        .par_iter()
        .map(|r| run_check(r.id, window, &none))
        .collect()
}
