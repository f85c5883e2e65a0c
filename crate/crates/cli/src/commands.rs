use bgmu_core::json::{self, document, fractions};
use bgmu_core::num::{fmt_q, q};
use bgmu_core::superbasic::{sharp_peel, Segment};
use bgmu_core::{
    adm_enumerate, adm_member, enumerate_acceptable, newton_point, polygon, solve,
    ExtAffineElement, GroupDatum, Guard, Strategy, Q,
};
use serde_json::{json, Value};

use crate::spec::{parse_twist, ProblemSpec};
use crate::CliError;

pub fn newton(group: &str, w: &str, sigma: &str, normalize: bool) -> Result<String, CliError> {
    let datum: GroupDatum = group.parse()?;
    let w: ExtAffineElement = w.parse()?;
    let frob = parse_twist(&datum, sigma, normalize)?;
    let r = newton_point(&w, &frob)?;
    let mut body = json::newton_report(&r);
    body["group"] = json!(datum.to_string());
    body["sigma"] = json!(frob.to_string());
    body["w"] = json!(w.to_string());
    body["length"] = json!(datum.length(&w));
    Ok(json::render(&document("newton", body)))
}

pub fn max(spec: &ProblemSpec, strategy: Strategy, guard: &Guard) -> Result<String, CliError> {
    let problem = spec.problem()?;
    let s = solve(&problem, strategy, guard)?;
    let raw = newton_point(&s.w, &problem.frob)?;
    let mut body = json::solution(&problem, &s);
    body["nu_bar"] = fractions(&raw.nu_bar_raw);
    body["spec"] = spec.to_json();
    Ok(json::render(&document("max", body)))
}

pub fn enumerate(spec: &ProblemSpec, guard: &Guard) -> Result<String, CliError> {
    let problem = spec.problem()?;
    let set = enumerate_acceptable(&problem, guard)?;
    let mut body = json::acceptable_set(&set);
    body["problem"] = json::problem(&problem);
    body["spec"] = spec.to_json();
    body["kappa"] = json::kappa(&problem.kappa());
    Ok(json::render(&document("enumerate", body)))
}

pub fn adm(group: &str, mu: &[i64], w: Option<&str>, guard: &Guard) -> Result<String, CliError> {
    let datum: GroupDatum = group.parse()?;
    datum.check_rank(mu.len())?;
    if !datum.is_dominant(mu) {
        return Err(bgmu_core::Error::NotDominant(format!("{mu:?}")).into());
    }
    let body = match w {
        Some(lit) => {
            let w: ExtAffineElement = lit.parse()?;
            let x = adm_member(&datum, &w, mu);
            json!({
                "group": datum.to_string(),
                "mu": mu,
                "w": w.to_string(),
                "length": datum.length(&w),
                "member": x.is_some(),
                "x": x.map(|p| p.to_string()),
            })
        }
        None => {
            let mut elements: Vec<(usize, String)> = adm_enumerate(&datum, mu, guard)?
                .iter()
                .map(|w| (datum.length(w), w.to_string()))
                .collect();
            elements.sort();
            json!({
                "group": datum.to_string(),
                "mu": mu,
                "size": elements.len(),
                "elements": elements
                    .iter()
                    .map(|(l, w)| json!({ "w": w, "length": l }))
                    .collect::<Vec<_>>(),
            })
        }
    };
    Ok(json::render(&document("adm", body)))
}

/// TSV rows `k, partial_sum, hull` for the polygon of `μ_{m,n}`.
pub fn polygon_tsv(mu: &[i64], m: u64, n: u64) -> Result<String, CliError> {
    let cert = sharp_peel(mu, m, n)?;
    let theta = Segment::whole(&cert.theta);
    let hull = polygon(&theta).hull_values();
    let mut out = String::from("k\tpartial_sum\thull\n");
    let mut partial: Q = q(0);
    for (k, h) in hull.iter().enumerate() {
        if k > 0 {
            partial += q(cert.theta[k - 1]);
        }
        out.push_str(&format!("{k}\t{}\t{}\n", fmt_q(&partial), fmt_q(h)));
    }
    Ok(out)
}

pub fn verify_summary(counts: &[(&str, usize)], instances: usize) -> String {
    let mut checks = serde_json::Map::new();
    for (k, v) in counts {
        checks.insert((*k).to_string(), json!(v));
    }
    json::render(&document(
        "verify",
        json!({ "instances": instances, "checks": Value::Object(checks), "status": "ok" }),
    ))
}

pub fn counterexample(spec: &ProblemSpec, check: &str, detail: &str) -> String {
    json::render(&document(
        "counterexample",
        json!({
            "check": check,
            "detail": detail,
            "spec": spec.to_json(),
            "replay": spec.command_line("max"),
        }),
    ))
}
