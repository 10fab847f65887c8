//! Check parameters: parsing, defaults and canonical text.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{q, Q};

pub(crate) const TRIPLE_KEYS: &[&str] = &["alpha", "beta", "gamma"];

pub(crate) const M_SAMPLES: &[i64] = &[-3, -1, 1, 2, 4];
pub(crate) const N_SAMPLES: &[i64] = &[-2, 0, 1, 3];

pub(crate) fn q_samples() -> Vec<Q> {
    vec![q(0, 1), q(1, 1), q(-2, 1), q(1, 2)]
}

pub(crate) fn triple_samples() -> Vec<(Q, Q, Q)> {
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 3)]
        .into_iter()
        .map(|(a, b, c)| (q(a, 1), q(b, 1), q(c, 1)))
        .collect()
}

fn normalize_key(key: &str) -> &str {
    match key.trim() {
        "α" => "alpha",
        "β" => "beta",
        "γ" => "gamma",
        other => other,
    }
}

/// Parameters handed to one check. Lookups record the effective value, so
/// the canonical text lists defaults too.
#[derive(Debug)]
pub struct Params {
    raw: BTreeMap<String, String>,
    canon: Vec<String>,
}

impl Params {
    pub(crate) fn new(
        check_id: &str,
        allowed: &[&str],
        raw: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, v) in raw {
            let key = normalize_key(k);
            if !allowed.contains(&key) {
                return Err(Error::BadParam {
                    key: k.clone(),
                    reason: format!("not a parameter of {check_id}"),
                });
            }
            map.insert(key.to_owned(), v.trim().to_owned());
        }
        Ok(Self {
            raw: map,
            canon: Vec::new(),
        })
    }

    /// `-` when the check takes no parameters.
    pub fn canonical(&self) -> String {
        if self.canon.is_empty() {
            "-".into()
        } else {
            self.canon.join(";")
        }
    }

    fn bad(key: &str, reason: impl Into<String>) -> Error {
        Error::BadParam {
            key: key.to_owned(),
            reason: reason.into(),
        }
    }

    fn items(key: &str, text: &str) -> Result<Vec<String>> {
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(text);
        let items: Vec<String> = inner.split(',').map(|s| s.trim().to_owned()).collect();
        if items.iter().any(String::is_empty) {
            return Err(Self::bad(key, "empty list entry"));
        }
        Ok(items)
    }

    fn rational(key: &str, text: &str) -> Result<Q> {
        text.parse::<Q>()
            .map_err(|e| Self::bad(key, format!("`{text}` is not a rational: {e}")))
    }

    pub(crate) fn int_list(&mut self, key: &str, default: &[i64]) -> Result<Vec<i64>> {
        let vals = match self.raw.get(key) {
            None => default.to_vec(),
            Some(t) => Self::items(key, t)?
                .iter()
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| Self::bad(key, format!("`{s}` is not an integer")))
                })
                .collect::<Result<_>>()?,
        };
        let body: Vec<String> = vals.iter().map(i64::to_string).collect();
        self.canon.push(format!("{key}:[{}]", body.join(",")));
        Ok(vals)
    }

    pub(crate) fn q_list(&mut self, key: &str, default: &[Q]) -> Result<Vec<Q>> {
        let vals = match self.raw.get(key) {
            None => default.to_vec(),
            Some(t) => Self::items(key, t)?
                .iter()
                .map(|s| Self::rational(key, s))
                .collect::<Result<_>>()?,
        };
        let body: Vec<String> = vals.iter().map(Q::to_string).collect();
        self.canon.push(format!("{key}:[{}]", body.join(",")));
        Ok(vals)
    }

    /// `lo:hi`, `lo..hi` or `[lo..hi]`, inclusive.
    pub(crate) fn range(&mut self, key: &str, default: (i64, i64)) -> Result<(i64, i64)> {
        let (lo, hi) = match self.raw.get(key) {
            None => default,
            Some(t) => parse_range(t)
                .ok_or_else(|| Self::bad(key, format!("`{t}` is not a range lo:hi")))?,
        };
        if lo > hi {
            return Err(Self::bad(key, "empty range"));
        }
        self.canon.push(format!("{key}:[{lo}..{hi}]"));
        Ok((lo, hi))
    }

    /// The `(α, β, γ)` samples; any of the three keys given selects a single
    /// triple, with omitted entries zero.
    pub(crate) fn triples(&mut self) -> Result<Vec<(Q, Q, Q)>> {
        if TRIPLE_KEYS.iter().all(|k| !self.raw.contains_key(*k)) {
            let body: Vec<String> = triple_samples()
                .iter()
                .map(|(a, b, c)| format!("({a},{b},{c})"))
                .collect();
            self.canon
                .push(format!("alpha_beta_gamma:[{}]", body.join(",")));
            return Ok(triple_samples());
        }
        let mut vals = Vec::new();
        for k in TRIPLE_KEYS {
            let v = match self.raw.get(*k) {
                Some(t) => Self::rational(k, t)?,
                None => q(0, 1),
            };
            self.canon.push(format!("{k}:{v}"));
            vals.push(v);
        }
        let [a, b, c]: [Q; 3] = vals.try_into().expect("three keys");
        Ok(vec![(a, b, c)])
    }
}

pub fn parse_range(text: &str) -> Option<(i64, i64)> {
    let t = text.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(t);
    let (lo, hi) = t.split_once("..").or_else(|| t.split_once(':'))?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}
