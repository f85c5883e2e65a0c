//! `bgmu/1` documents.
//!
//! Every rational is written as a string (`"3/2"`, `"-1"`), elements and
//! permutations as their canonical literals. Objects are emitted with sorted
//! keys so output is byte-for-byte reproducible.

use serde_json::{json, Map, Value};

use crate::acceptable::{AcceptableSet, Problem};
use crate::newton::{KappaValue, NewtonPoint, NewtonReport};
use crate::num::{fmt_q, Q};
use crate::reduction::{BaseCase, Leaf, ReductionTrace, Solution, SolveNode, StepData, Witness};
use crate::superbasic::{PeelCase, PeelCertificate, PolygonData, Segment, SuperbasicWitness};
use crate::weyl::ExtAffineElement;

pub const SCHEMA: &str = "bgmu/1";

pub fn fraction(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn fractions(v: &[Q]) -> Value {
    Value::Array(v.iter().map(fraction).collect())
}

fn element(w: &ExtAffineElement) -> Value {
    Value::String(w.to_string())
}

fn interval(iv: Option<(usize, usize)>) -> Value {
    iv.map_or(Value::Null, |(a, b)| json!([a, b]))
}

fn segment(s: &Segment) -> Value {
    json!({ "head": s.head, "values": s.values })
}

pub fn kappa(k: &KappaValue) -> Value {
    json!({ "values": k.values, "moduli": k.moduli })
}

pub fn newton_point(p: &NewtonPoint) -> Value {
    json!({ "nu": fractions(&p.nu), "kappa": kappa(&p.kappa) })
}

pub fn problem(p: &Problem) -> Value {
    json!({
        "group": p.datum().to_string(),
        "mu": p.mu,
        "tau": element(p.frob.tau()),
        "sigma0": p.frob.sigma0().to_string(),
        "normalization_shift": fractions(p.frob.normalization_shift()),
    })
}

/// Wraps `body` with the schema tag and the document kind.
pub fn document(kind: &str, body: Value) -> Value {
    let mut map = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("data".into(), other);
            m
        }
    };
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("kind".into(), json!(kind));
    Value::Object(map)
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}

pub fn newton_report(r: &NewtonReport) -> Value {
    json!({
        "iterations": r.n,
        "lambda": r.lambda,
        "nu": fractions(&r.nu),
        "nu_bar": fractions(&r.nu_bar_raw),
        "normalized": fractions(&r.nu_bar.nu),
        "kappa": kappa(&r.nu_bar.kappa),
    })
}

pub fn acceptable_set(s: &AcceptableSet) -> Value {
    json!({
        "points": s.points.iter().map(|p| fractions(&p.nu)).collect::<Vec<_>>(),
        "hasse": s.hasse.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "max": s.max,
    })
}

pub fn polygon(p: &PolygonData) -> Value {
    json!({
        "vertices": p.vertices.iter().map(|(k, y)| json!([k, fmt_q(y)])).collect::<Vec<_>>(),
        "slopes": fractions(&p.slopes),
        "pieces": p.pieces.iter().map(segment).collect::<Vec<_>>(),
    })
}

pub fn peel_certificate(c: &PeelCertificate) -> Value {
    let blocks: Vec<Value> = c
        .blocks
        .iter()
        .map(|b| {
            let steps: Vec<Value> = b
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "level": s.level,
                        "iota": [s.iota.0, s.iota.1],
                        "case": match s.case {
                            PeelCase::Split => "split",
                            PeelCase::Elementary => "elementary",
                        },
                        "zeta": interval(s.zeta),
                        "gamma": interval(s.gamma),
                        "xi": interval(s.xi),
                    })
                })
                .collect();
            json!({
                "range": [b.range.0, b.range.1],
                "steps": steps,
                "pieces": b.pieces.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let chain: Vec<Value> = c
        .chain
        .iter()
        .map(|l| {
            json!({
                "label": l.label,
                "element": element(&l.element),
                "length": l.length,
                "multiplier": l.multiplier.as_ref().map(|p| p.to_string()),
                "step": l.conjugated.as_ref().map(|p| p.to_string()),
            })
        })
        .collect();
    json!({
        "m": c.m,
        "n": c.n,
        "mu": c.mu,
        "chi": c.chi,
        "theta": c.theta,
        "epsilon": c.epsilon.to_string(),
        "breakpoints": c.breakpoints,
        "blocks": blocks,
        "decomposition": c.decomposition.iter().map(segment).collect::<Vec<_>>(),
        "slopes": fractions(&c.slopes),
        "chain": chain,
        "w_c": element(&c.w_c),
    })
}

pub fn superbasic_witness(s: &SuperbasicWitness) -> Value {
    json!({
        "w_tilde": element(&s.w_tilde),
        "x": s.x.to_string(),
        "nu_bar": fractions(&s.nu_raw),
        "normalized": newton_point(&s.nu),
        "certificate": peel_certificate(&s.cert),
    })
}

fn witness(w: &Witness) -> Value {
    json!({ "w": element(&w.w), "x": w.x.to_string() })
}

fn step(data: &StepData) -> Value {
    let mut v = match data {
        StepData::Adjoint => json!({}),
        StepData::OmegaConjugate { tau0 } => json!({ "tau0": element(tau0) }),
        StepData::ProductSplit {
            cycle,
            parts,
            gamma,
        } => json!({
            "cycle": cycle,
            "parts": parts,
            "gamma": gamma,
        }),
        StepData::Parabolic(d) => json!({
            "fixed_point": fractions(&d.fixed_point),
            "direction": d.direction,
            "v0": d.v0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "v0_bar": d.v0_bar.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "j": d.j.iter().copied().collect::<Vec<_>>(),
            "z": d.z.to_string(),
            "tau_j": element(&d.tau_j),
        }),
    };
    v["kind"] = json!(data.kind());
    v
}

pub fn trace(t: &ReductionTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            let mut v = step(&s.data);
            v["problem"] = problem(&s.problem);
            v
        })
        .collect();
    json!({ "problem": problem(&t.problem), "steps": steps })
}

pub fn solve_node(node: &SolveNode) -> Value {
    let leaf = match &node.leaf {
        Leaf::Base(BaseCase::Torus) => json!({ "kind": "torus" }),
        Leaf::Base(BaseCase::Superbasic { m, n, witness }) => json!({
            "kind": "superbasic",
            "m": m,
            "n": n,
            "witness": superbasic_witness(witness),
        }),
        Leaf::Orbits(children) => json!({
            "kind": "orbits",
            "children": children
                .iter()
                .map(|(blocks, c)| json!({ "blocks": blocks, "node": solve_node(c) }))
                .collect::<Vec<_>>(),
        }),
        Leaf::Levi(child) => json!({ "kind": "levi", "node": solve_node(child) }),
    };
    json!({
        "trace": trace(&node.trace),
        "leaf": leaf,
        "witness": witness(&node.witness),
        "nu": fractions(&node.nu),
    })
}

pub fn solution(p: &Problem, s: &Solution) -> Value {
    let c = &s.certificate;
    json!({
        "problem": problem(p),
        "nu": newton_point(&s.nu),
        "witness": { "w": element(&s.w), "x": s.x.to_string() },
        "certificate": {
            "strategy": c.strategy.to_string(),
            "reduction": c.reduction.as_ref().map(solve_node),
            "bruteforce": c.brute.as_ref().map(|b| json!({
                "adm_size": b.adm_size,
                "distinct_points": b.distinct_points,
                "nu": fractions(&b.nu),
            })),
            "acceptable_checked": c.acceptable_checked,
        },
    })
}
