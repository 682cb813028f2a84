use std::fs;

use hlzeta::exact::{rat_int, Rational};
use hlzeta::models::{ez_data, mt2_cmatrix, parse_complex, root_system_rank2_data, CMatrix, HLData, Scalar, Twist};
use hlzeta::numeric::EvalConfig;
use hlzeta::par::Execution;
use hlzeta::{Error, Result};
use num_complex::Complex64;

pub const PRECISION_ENV: &str = "HLZETA_PRECISION";

/// A parameter bundle with the name it was loaded under.
pub struct Loaded {
    pub name: String,
    pub data: HLData,
    /// Whether the Mordell–Tornheim `(a, b)` c-matrix family applies.
    pub mt_family: bool,
}

fn a2_pairings() -> Vec<Vec<Rational>> {
    [[1, 0], [0, 1], [1, 1]].iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect()
}

/// Builtin name or path to an HLData JSON document.
pub fn load_data(spec: &str) -> Result<Loaded> {
    let (data, mt_family) = match spec {
        "ez2" => (ez_data(2), false),
        "ez3" => (ez_data(3), false),
        "mt2" => (hlzeta::models::mt2_data(), true),
        "a2" => (root_system_rank2_data(&a2_pairings(), vec![Twist::one(); 2])?.0, true),
        path => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::Parameter(format!("cannot read data {path:?}: {e} (builtins: ez2, ez3, mt2, a2)"))
            })?;
            let data: HLData = serde_json::from_str(&text)
                .map_err(|e| Error::Parameter(format!("bad HLData JSON in {path:?}: {e}")))?;
            (data, false)
        }
    };
    Ok(Loaded { name: spec.to_string(), data, mt_family })
}

/// The user c-matrix if the data carries one, the `(a, b)` member for the
/// Mordell–Tornheim family, and the solved one otherwise.
pub fn c_matrix(loaded: &Loaded, a: Option<&str>, b: Option<&str>) -> Result<CMatrix> {
    if a.is_some() || b.is_some() {
        if !loaded.mt_family {
            return Err(Error::Parameter("--a/--b only apply to mt2 and a2".into()));
        }
        let a = Scalar::parse(a.unwrap_or("0"))?;
        let b = Scalar::parse(b.unwrap_or("0"))?;
        return Ok(mt2_cmatrix(a, b));
    }
    loaded.data.cmatrix()
}

pub fn parse_point(s: &str, d: usize) -> Result<Vec<Complex64>> {
    let pts = s.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
    if pts.len() != d {
        return Err(Error::Parameter(format!("point {s:?} has {} coordinates, data has d = {d}", pts.len())));
    }
    Ok(pts)
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parameter(format!("not a non-negative integer: {x:?}"))))
        .collect()
}

/// `"-3..3,-3..3"`: inclusive integer ranges per coordinate; a bare integer
/// is a one-point range.
pub fn parse_grid(s: &str) -> Result<Vec<Vec<i64>>> {
    let int = |x: &str| x.trim().parse::<i64>().map_err(|_| Error::Parameter(format!("bad grid bound {x:?}")));
    s.split(',')
        .map(|axis| {
            let (lo, hi) = match axis.split_once("..") {
                Some((lo, hi)) => (int(lo)?, int(hi)?),
                None => (int(axis)?, int(axis)?),
            };
            if lo > hi {
                return Err(Error::Parameter(format!("empty grid range {axis:?}")));
            }
            Ok((lo..=hi).collect())
        })
        .collect()
}

/// Evaluation config from `--tol`, falling back to `HLZETA_PRECISION`.
pub fn eval_config(tol: Option<f64>, sequential: bool) -> Result<EvalConfig> {
    let mut cfg = EvalConfig::default();
    let env = std::env::var(PRECISION_ENV).ok();
    if let Some(t) = tol {
        cfg.tolerance = t;
    } else if let Some(v) = env {
        cfg.tolerance =
            v.trim().parse().map_err(|_| Error::Parameter(format!("{PRECISION_ENV}={v:?} is not a number")))?;
    }
    if sequential {
        cfg.exec = Execution::Sequential;
    }
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_ranges() {
        assert_eq!(parse_grid("-1..1,2").unwrap(), vec![vec![-1, 0, 1], vec![2]]);
        assert!(parse_grid("3..1").is_err());
    }

    #[test]
    fn points() {
        let p = parse_point("3,1.5-2i", 2).unwrap();
        assert_eq!(p[1], Complex64::new(1.5, -2.0));
        assert!(parse_point("3", 2).is_err());
    }

    #[test]
    fn a2_is_mt2() {
        assert_eq!(load_data("a2").unwrap().data, load_data("mt2").unwrap().data);
    }
}
