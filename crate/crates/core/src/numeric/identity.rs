use num_complex::Complex64;

use super::config::{EvalConfig, EvalResult, Method};
use super::direct::hl_zeta_direct;
use super::mellin::{as_ezl2, hl_zeta_mb};
use crate::desing::{trivial_relation_terms, DesingIdentity};
use crate::error::{Error, Result};
use crate::models::{mt2_data, singular_hyperplanes};
use crate::par;

fn annotate(e: Error, term: &str) -> Error {
    match e {
        Error::Parameter(m) => Error::Parameter(format!("{term}: {m}")),
        Error::Pole(m) => Error::Pole(format!("{term}: {m}")),
        Error::Region(m) => Error::Region(format!("{term}: {m}")),
        Error::Consistency(m) => Error::Consistency(format!("{term}: {m}")),
        Error::Unsupported(m) => Error::Unsupported(format!("{term}: {m}")),
        other => other,
    }
}

/// Evaluates the right-hand side of a desingularization identity at `s`.
///
/// Depth-two Euler–Zagier–Lerch bases use the contour continuation; any
/// other base is summed directly, so every shifted point must lie in the
/// region of absolute convergence. Terms with vanishing coefficient are
/// skipped, and terms sharing a shift are evaluated once.
pub fn evaluate_identity(id: &DesingIdentity, s: &[Complex64], cfg: &EvalConfig) -> Result<EvalResult> {
    let d = id.base.d();
    if s.len() != d {
        return Err(Error::Parameter(format!("expected {d} arguments, got {}", s.len())));
    }
    let ezl2 = as_ezl2(&id.base);
    let mb = ezl2.is_some();
    let mut groups: Vec<(Vec<i32>, Complex64)> = Vec::new();
    for (m, p) in id.grouped() {
        let coeff = p.eval(s);
        if coeff != Complex64::new(0.0, 0.0) {
            groups.push((m, coeff));
            continue;
        }
        // 0 times a pole is a limit, not 0.
        if let Some((xi, _)) = ezl2 {
            let pt: Vec<Complex64> = s.iter().zip(&m).map(|(x, &k)| x + k as f64).collect();
            let l_max = pt.iter().map(|z| z.norm()).sum::<f64>() as usize + 4;
            if singular_hyperplanes(&xi, l_max)?.hit(&pt).is_some() {
                return Err(Error::Pole(format!(
                    "term zeta(s + {m:?}) has a vanishing coefficient at a pole; the value needs a limit"
                )));
            }
        }
    }
    let vals = par::map(cfg.exec, &groups, |(m, c)| {
        let pt: Vec<Complex64> = s.iter().zip(m).map(|(x, &k)| x + k as f64).collect();
        let r = if mb { hl_zeta_mb(&id.base, &pt, cfg) } else { hl_zeta_direct(&id.base, &pt, cfg) };
        r.map(|r| (c * r.value, c.norm() * r.error_bound)).map_err(|e| annotate(e, &format!("term zeta(s + {m:?})")))
    });
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for v in vals {
        let (x, e) = v?;
        value += x;
        err += e;
    }
    Ok(EvalResult::new(value, err, if mb { Method::Mb } else { Method::Direct }))
}

/// Residuals of the linear relations among Mordell–Tornheim values read off
/// from the `a`, `b` and `ab` coefficients of the desingularization identity.
pub fn verify_trivial_relations(point: &[Complex64], cfg: &EvalConfig) -> Result<Vec<(&'static str, EvalResult)>> {
    trivial_relation_terms(&mt2_data())?
        .into_iter()
        .map(|r| Ok((r.label, evaluate_identity(&r.relation, point, cfg)?)))
        .collect()
}
