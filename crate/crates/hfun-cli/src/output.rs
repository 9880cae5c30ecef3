//! Deterministic JSON/CSV writers: fixed field order, floats at 17
//! significant digits, so identical invocations produce byte-identical
//! artifacts.

use hfun::model::HFunctionSpec;
use hfun::verify::IdentityReport;

/// 17 significant digits in exponent form; non-finite values become null.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

pub fn json_spec(spec: &HFunctionSpec) -> String {
    let row = |pairs: &[hfun::model::ParamPair]| {
        let items: Vec<String> = pairs
            .iter()
            .map(|p| {
                format!(
                    "[{},{},{}]",
                    fmt_f64(p.coeff.re),
                    fmt_f64(p.coeff.im),
                    fmt_f64(p.scale)
                )
            })
            .collect();
        format!("[{}]", items.join(","))
    };
    format!(
        "{{\"m\":{},\"n\":{},\"upper\":{},\"lower\":{}}}",
        spec.m,
        spec.n,
        row(&spec.upper),
        row(&spec.lower)
    )
}

pub fn json_reports(reports: &[IdentityReport]) -> String {
    let items: Vec<String> = reports.iter().map(json_report).collect();
    format!("[{}]\n", items.join(","))
}

fn json_report(r: &IdentityReport) -> String {
    let grid: Vec<String> = r
        .grid
        .iter()
        .map(|g| {
            format!(
                "{{\"argument\":[{},{}],\"lhs\":[{},{}],\"rhs\":[{},{}],\"rel_discrepancy\":{}}}",
                fmt_f64(g.argument.0),
                fmt_f64(g.argument.1),
                fmt_f64(g.lhs.0),
                fmt_f64(g.lhs.1),
                fmt_f64(g.rhs.0),
                fmt_f64(g.rhs.1),
                fmt_f64(g.rel_discrepancy)
            )
        })
        .collect();
    format!(
        "{{\"identity_name\":\"{}\",\"grid\":[{}],\"max_rel_discrepancy\":{},\"pass\":{},\"threshold\":{}}}",
        r.identity_name,
        grid.join(","),
        fmt_f64(r.max_rel_discrepancy),
        r.pass,
        fmt_f64(r.threshold)
    )
}

pub fn csv_summary(reports: &[IdentityReport]) -> String {
    let mut out = String::from("identity_name,max_rel_discrepancy,pass\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{}\n",
            r.identity_name,
            fmt_f64(r.max_rel_discrepancy),
            r.pass
        ));
    }
    out
}
