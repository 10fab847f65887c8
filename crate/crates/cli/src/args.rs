//! Value parsers for command-line flags.

use twisted_hv::{DualIndex, DualSector, Q};

pub fn rational(s: &str) -> Result<Q, String> {
    s.trim()
        .parse::<Q>()
        .map_err(|e| format!("`{s}` is not a rational: {e}"))
}

/// A comma-separated list taken as one flag value.
#[derive(Clone, Debug, PartialEq)]
pub struct QList(pub Vec<Q>);

pub fn q_list(s: &str) -> Result<QList, String> {
    rational_list(s).map(QList)
}

pub fn rational_list(s: &str) -> Result<Vec<Q>, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(t);
    if inner.trim().is_empty() {
        return Err("empty list".into());
    }
    inner.split(',').map(rational).collect()
}

/// `lo:hi`, inclusive.
pub fn range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("`{s}` is not lo:hi"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound in `{s}`"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound in `{s}`"))?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

pub fn sector(s: &str) -> Result<DualSector, String> {
    match s.trim() {
        "V" | "eV" | "εV" => Ok(DualSector::EpsV),
        "W" | "eW" | "εW" => Ok(DualSector::EpsW),
        other => Err(format!("unknown sector `{other}` (expected V or W)")),
    }
}

/// `<sector>,<degree>`, e.g. `V,1` or `eW,-3`.
pub fn dual_index(s: &str) -> Result<DualIndex, String> {
    let (sec, deg) = s
        .split_once(',')
        .ok_or_else(|| format!("`{s}` is not <sector>,<degree>"))?;
    let degree: i64 = deg
        .trim()
        .parse()
        .map_err(|_| format!("bad degree in `{s}`"))?;
    Ok(DualIndex {
        sector: sector(sec)?,
        degree,
    })
}

/// `<n0>:<v0>,<v1>,...`
pub fn seed(s: &str) -> Result<(i64, Vec<Q>), String> {
    let (n0, vals) = s
        .split_once(':')
        .ok_or_else(|| format!("`{s}` is not <n0>:<list>"))?;
    let n0: i64 = n0
        .trim()
        .parse()
        .map_err(|_| format!("bad anchor in `{s}`"))?;
    Ok((n0, rational_list(vals)?))
}

/// `k=v,k=v`
pub fn key_values(s: &str) -> Result<Vec<(String, String)>, String> {
    s.split(',')
        .filter(|kv| !kv.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| format!("`{kv}` is not key=value"))?;
            Ok((k.trim().to_owned(), v.trim().to_owned()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use twisted_hv::q;

    #[test]
    fn parses_flag_values() {
        assert_eq!(
            rational_list("[0, 1, -3, 7/2]").unwrap(),
            vec![q(0, 1), q(1, 1), q(-3, 1), q(7, 2)]
        );
        assert_eq!(range("-5:5").unwrap(), (-5, 5));
        assert!(range("5:-5").is_err());
        assert_eq!(dual_index("W,-3").unwrap(), DualIndex::w(-3));
        assert_eq!(seed("0:0,1").unwrap(), (0, vec![q(0, 1), q(1, 1)]));
        assert_eq!(key_values("m=2,q=1/2").unwrap().len(), 2);
        assert!(rational("1/0").is_err());
    }
}
