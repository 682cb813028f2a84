use std::fmt::Write as _;

use hlzeta::desing::{desing_identity, special_value_nonpos, SpecialValueRequest};
use hlzeta::models::{singular_hyperplanes, HLData, Twist};
use hlzeta::numeric::{
    as_ezl2, evaluate_identity, ez2_des, ez2_des_exact, hl_zeta_direct, hl_zeta_mb, in_direct_region, zeta2_first_neg,
    zeta2_second_neg, EvalConfig, EvalResult, MixedValue,
};
use hlzeta::padic::{kubota_leopoldt_check, padic_l_nonpos, PadicLRequest};
use hlzeta::{par, Error, Result};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::input::{c_matrix, Loaded};
use crate::output::{cyclotomic_json, rational_json, Report};

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn is_ez2(data: &HLData) -> bool {
    as_ezl2(data).is_some_and(|(xi, g)| xi.iter().all(Twist::is_one) && g == [one(); 2])
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn fmt_point(s: &[Complex64]) -> String {
    s.iter().map(|&z| fmt_c(z)).collect::<Vec<_>>().join(", ")
}

fn as_int(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 1e15).then_some(z.re as i64)
}

/// The multiple zeta itself: direct summation inside the region of
/// absolute convergence, contour continuation for depth-two EZL data.
pub fn eval_plain(data: &HLData, s: &[Complex64], cfg: &EvalConfig) -> Result<EvalResult> {
    if in_direct_region(data, s) {
        return hl_zeta_direct(data, s, cfg);
    }
    if as_ezl2(data).is_some() {
        return hl_zeta_mb(data, s, cfg);
    }
    hl_zeta_direct(data, s, cfg)
}

pub fn eval_des(
    loaded: &Loaded,
    s: &[Complex64],
    cfg: &EvalConfig,
    a: Option<&str>,
    b: Option<&str>,
) -> Result<EvalResult> {
    if is_ez2(&loaded.data) && a.is_none() && b.is_none() {
        return ez2_des([s[0], s[1]], cfg);
    }
    let id = desing_identity(&loaded.data, &c_matrix(loaded, a, b)?);
    evaluate_identity(&id, s, cfg)
}

fn result_json(s: &[Complex64], r: &EvalResult, des: bool) -> Value {
    let mut v = r.to_json();
    v["s"] = json!(s.iter().map(|&z| fmt_c(z)).collect::<Vec<_>>());
    v["desingularized"] = json!(des);
    v
}

fn exact_ez2(s: &[Complex64]) -> Option<MixedValue> {
    let (a, b) = (as_int(s[0])?, as_int(s[1])?);
    ez2_des_exact(a, b).ok().flatten()
}

pub fn eval(
    loaded: &Loaded,
    s: &[Complex64],
    des: bool,
    cfg: &EvalConfig,
    a: Option<&str>,
    b: Option<&str>,
) -> Result<Report> {
    let r = if des { eval_des(loaded, s, cfg, a, b)? } else { eval_plain(&loaded.data, s, cfg)? };
    let requested = cfg.tolerance * r.value.norm().max(1.0);
    if r.error_bound > requested {
        return Err(Error::Accuracy { achieved: r.error_bound, requested });
    }
    let mut json = result_json(s, &r, des);
    let mut text = format!(
        "{}({}) = {} (error bound {:.1e}, {})",
        if des { "zeta_des" } else { "zeta" },
        fmt_point(s),
        fmt_c(r.value),
        r.error_bound,
        r.method.tag()
    );
    if des && is_ez2(&loaded.data) {
        if let Some(m) = exact_ez2(s) {
            json["exact"] = m.to_json();
            let _ = write!(text, "\nexact: {m}");
        }
    }
    Ok(Report { json, text, rows: None })
}

pub fn identity(loaded: &Loaded, a: Option<&str>, b: Option<&str>) -> Result<Report> {
    let id = desing_identity(&loaded.data, &c_matrix(loaded, a, b)?);
    let json = json!({"identity": id.to_json(), "text": id.render_text(), "latex": id.render_latex()});
    let text = format!("zeta_des(s) = {}\n\nLaTeX:\n{}", id.render_text(), id.render_latex());
    let rows = id
        .terms
        .iter()
        .map(|t| json!({"alpha": hlzeta::desing::alpha_to_json(&t.alpha), "l": t.l, "m": t.m}))
        .collect();
    Ok(Report { json, text, rows: Some(rows) })
}

pub fn special(loaded: &Loaded, lambda: Vec<u32>) -> Result<Report> {
    let v = special_value_nonpos(&loaded.data, &SpecialValueRequest { lambda: lambda.clone() })?;
    let at: Vec<String> = lambda.iter().map(|&l| (-(l as i64)).to_string()).collect();
    let mut json = cyclotomic_json(&v);
    if let Value::Object(m) = &mut json {
        m.insert("lambda".into(), json!(lambda));
    }
    Ok(Report { json, text: format!("zeta_des({}) = {v}", at.join(", ")), rows: None })
}

pub fn padic(r: Option<usize>, n: Vec<u32>, c: u64, p: u64, kl: bool, cfg: &EvalConfig) -> Result<(Report, bool)> {
    let n = match (r, n.len()) {
        (Some(r), 1) if r > 1 => vec![n[0]; r],
        (Some(r), len) if r != len => return Err(Error::Parameter(format!("--n has {len} entries but --r is {r}"))),
        _ => n,
    };
    let req = PadicLRequest { n: n.clone(), c, p };
    let v = padic_l_nonpos(&req, cfg.exec)?;
    let mut json = json!({
        "r": n.len(), "n": n, "c": c, "p": p,
        "value": rational_json(&v.value),
        "terms_enumerated": v.terms_enumerated,
    });
    let args: Vec<String> = n.iter().map(|&k| (-(k as i64)).to_string()).collect();
    let mut text = format!("L_p({}; c={c}, p={p}) = {} ({} terms)", args.join(", "), v.value, v.terms_enumerated);
    let mut ok = true;
    if kl {
        if n.len() != 1 {
            return Err(Error::Parameter("--kl-check needs depth r = 1".into()));
        }
        let k = kubota_leopoldt_check(n[0], c, p, cfg.exec)?;
        ok = k.holds;
        json["kl_check"] = json!({"lhs": rational_json(&k.lhs), "rhs": rational_json(&k.rhs), "holds": k.holds});
        let _ = write!(text, "\nKubota-Leopoldt: {} {} {}", k.lhs, if k.holds { "==" } else { "!=" }, k.rhs);
    }
    Ok((Report { json, text, rows: None }, ok))
}

pub fn singularities(xi: &str, l_max: usize) -> Result<Report> {
    let xi = xi.split(',').map(Twist::parse).collect::<Result<Vec<_>>>()?;
    let cat = singular_hyperplanes(&xi, l_max)?;
    let json = serde_json::to_value(&cat).expect("catalog serializes");
    let mut text = String::new();
    if cat.is_empty() {
        text.push_str("entire: no singular hyperplanes");
    }
    for h in &cat.hyperplanes {
        let lhs: Vec<String> = (h.first..=h.last).map(|j| format!("s{j}")).collect();
        let vals: Vec<String> = h.values.iter().map(i64::to_string).collect();
        let _ = writeln!(text, "{} in {{{}}}  (case {:?})", lhs.join("+"), vals.join(", "), h.case);
    }
    let rows = cat
        .hyperplanes
        .iter()
        .map(|h| json!({"first": h.first, "last": h.last, "case": format!("{:?}", h.case), "values": h.values}))
        .collect();
    Ok(Report { json, text: text.trim_end().to_string(), rows: Some(rows) })
}

fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::Pole(_) => "pole",
        Error::Region(_) => "region",
        Error::Accuracy { .. } => "accuracy",
        _ => "error",
    }
}

struct Cell {
    value: Option<Complex64>,
    exact: Option<String>,
    method: String,
}

fn exact_cell(m: MixedValue, cfg: &EvalConfig) -> Cell {
    let value = m.to_f64(cfg).ok().map(|x| Complex64::new(x, 0.0));
    Cell { value, exact: Some(m.to_string()), method: "closed-form".into() }
}

fn numeric_cell(r: Result<EvalResult>) -> Cell {
    match r {
        Ok(r) => Cell { value: Some(r.value), exact: None, method: r.method.tag().into() },
        Err(e) => Cell { value: None, exact: None, method: error_tag(&e).into() },
    }
}

/// Ordinary double zeta at an integer point: singular hyperplanes first,
/// then the closed forms on non-positive arguments.
fn ez2_plain_cell(p: &[i64], cfg: &EvalConfig) -> Cell {
    let s: Vec<Complex64> = p.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
    let cat = singular_hyperplanes(&[Twist::one(), Twist::one()], (p[0].abs() + p[1].abs()) as usize + 2)
        .expect("twists on the unit circle");
    if cat.hit(&s).is_some() {
        return Cell { value: None, exact: None, method: "pole".into() };
    }
    let line = if p[1] <= 0 {
        Some((zeta2_second_neg((-p[1]) as u32), p[0]))
    } else if p[0] <= 0 {
        Some((zeta2_first_neg((-p[0]) as u32), p[1]))
    } else {
        None
    };
    match line {
        Some((l, at)) => match l.eval_integer(at) {
            Ok(m) => exact_cell(m, cfg),
            Err(e) => Cell { value: None, exact: None, method: error_tag(&e).into() },
        },
        None => numeric_cell(eval_plain(&ez2_data(), &s, cfg)),
    }
}

fn ez2_data() -> HLData {
    hlzeta::models::ez_data(2)
}

fn table_cell(loaded: &Loaded, p: &[i64], des: bool, cfg: &EvalConfig) -> Cell {
    let s: Vec<Complex64> = p.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
    let ez2 = is_ez2(&loaded.data);
    match (des, ez2) {
        (true, true) => match ez2_des_exact(p[0], p[1]) {
            Ok(Some(m)) => exact_cell(m, cfg),
            _ => numeric_cell(ez2_des([s[0], s[1]], cfg)),
        },
        (false, true) => ez2_plain_cell(p, cfg),
        (true, false) => {
            if p.iter().all(|&x| x <= 0) && loaded.data.is_exact() {
                let req = SpecialValueRequest { lambda: p.iter().map(|&x| (-x) as u32).collect() };
                if let Ok(v) = special_value_nonpos(&loaded.data, &req) {
                    return Cell {
                        value: Some(v.to_complex()),
                        exact: Some(v.to_string()),
                        method: "closed-form".into(),
                    };
                }
            }
            numeric_cell(eval_des(loaded, &s, cfg, None, None))
        }
        (false, false) => numeric_cell(eval_plain(&loaded.data, &s, cfg)),
    }
}

pub fn table(loaded: &Loaded, grid: Vec<Vec<i64>>, des: bool, cfg: &EvalConfig) -> Result<Report> {
    let d = loaded.data.d();
    if grid.len() != d {
        return Err(Error::Parameter(format!("grid has {} axes, data has d = {d}", grid.len())));
    }
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for axis in &grid {
        points = points.into_iter().flat_map(|p| axis.iter().map(move |&x| [p.clone(), vec![x]].concat())).collect();
    }
    let cells = par::map(cfg.exec, &points, |p| table_cell(loaded, p, des, cfg));
    let mut rows = Vec::with_capacity(points.len());
    let mut text = String::new();
    for (p, c) in points.iter().zip(&cells) {
        let mut row = serde_json::Map::new();
        for (j, x) in p.iter().enumerate() {
            row.insert(format!("s{}", j + 1), json!(x));
        }
        row.insert("re".into(), c.value.map_or(Value::Null, |z| json!(z.re)));
        row.insert("im".into(), c.value.map_or(Value::Null, |z| json!(z.im)));
        row.insert("exact".into(), c.exact.clone().map_or(Value::Null, Value::String));
        row.insert("method".into(), json!(c.method));
        let shown = match (&c.exact, c.value) {
            (Some(e), _) => e.clone(),
            (None, Some(z)) => fmt_c(z),
            (None, None) => "-".into(),
        };
        let _ =
            writeln!(text, "({}) {shown} [{}]", p.iter().map(i64::to_string).collect::<Vec<_>>().join(", "), c.method);
        rows.push(Value::Object(row));
    }
    let json = json!({"data": loaded.name, "desingularized": des, "cells": rows});
    Ok(Report { json, text: text.trim_end().to_string(), rows: Some(rows) })
}
