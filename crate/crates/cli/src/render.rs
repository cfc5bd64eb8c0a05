//! Output renderers: path text lines, polynomial CSV/JSON envelopes, and
//! report lines. All output is deterministic for fixed inputs.

use serde::Serialize;

use fulltwist::{CheckReport, DyckPath, LaurentPolynomial, TorusShape};

pub fn path_text(path: &DyckPath, stats: bool) -> String {
    if !stats {
        return path.step_string();
    }
    let (p0, vs) = path.outer_vertices();
    let outer: Vec<String> = vs
        .iter()
        .map(|v| format!("({},{}):{}", v.point.0, v.point.1, v.k))
        .collect();
    format!(
        "{} area={} h={} p0=({},{}) V=[{}] rugged={}",
        path.step_string(),
        path.area(),
        path.h_statistic(),
        p0.point.0,
        p0.point.1,
        outer.join(","),
        path.is_rugged()
    )
}

/// CSV with a header; one row per term in canonical order.
pub fn poly_csv(poly: &LaurentPolynomial) -> String {
    let mut out = String::from("dQ,dAlpha,dT,c\n");
    for (m, c) in poly.terms() {
        out.push_str(&format!("{},{},{},{}\n", m.dq, m.dalpha, m.dt, c));
    }
    out
}

#[derive(Serialize)]
struct PolyEnvelope<'a> {
    m: u32,
    n: u32,
    selection: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialize: Option<&'a str>,
    #[serde(rename = "pathCount", skip_serializing_if = "Option::is_none")]
    path_count: Option<u64>,
    #[serde(rename = "ruggedCount", skip_serializing_if = "Option::is_none")]
    rugged_count: Option<u64>,
    terms: &'a LaurentPolynomial,
}

pub fn poly_json(
    shape: TorusShape,
    selection: &str,
    specialize: Option<&str>,
    counts: Option<(u64, u64)>,
    poly: &LaurentPolynomial,
) -> serde_json::Result<String> {
    serde_json::to_string(&PolyEnvelope {
        m: shape.m(),
        n: shape.n(),
        selection,
        specialize,
        path_count: counts.map(|c| c.0),
        rugged_count: counts.map(|c| c.1),
        terms: poly,
    })
}

pub fn report_text(report: &CheckReport) -> String {
    let mut line = format!(
        "{} ({},{}): {}",
        report.check,
        report.m,
        report.n,
        if report.pass { "pass" } else { "FAIL" }
    );
    if !report.pass {
        if let Some(w) = &report.witness {
            line.push_str(&format!(" [{w}]"));
        }
        if let (Some(lhs), Some(rhs)) = (&report.lhs, &report.rhs) {
            line.push_str(&format!(
                " [lhs = {} ; rhs = {}]",
                lhs.to_text(),
                rhs.to_text()
            ));
        }
    }
    line
}
