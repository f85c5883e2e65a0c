//! The oracle sweep behind `bgmu verify`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use bgmu_core::acceptable::adm_newton_points;
use bgmu_core::newton::dominance_leq_vec;
use bgmu_core::weyl::length_zero_element;
use bgmu_core::{
    enumerate_acceptable, maximal_newton, mu_diamond_acceptable, solve, Error, ExtAffineElement,
    FrobeniusDescriptor, GroupDatum, Guard, Permutation, Problem, Strategy, Q,
};
use rayon::prelude::*;

use crate::spec::ProblemSpec;

#[derive(Clone, Copy, Debug)]
pub struct Sweep {
    pub max_n: usize,
    pub max_entry: i64,
    pub max_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub spec: ProblemSpec,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct Report {
    pub instances: usize,
    pub counts: BTreeMap<&'static str, usize>,
    pub failures: Vec<Failure>,
}

impl Report {
    /// The failure with the smallest rank, then the smallest `|μ|`.
    pub fn minimal_failure(&self) -> Option<&Failure> {
        self.failures.iter().min_by(|a, b| {
            let key = |f: &Failure| {
                (
                    f.spec.rank(),
                    f.spec.mu.iter().map(|x| x.abs()).sum::<i64>(),
                    f.spec.clone(),
                )
            };
            key(a).cmp(&key(b))
        })
    }
}

fn dominant_blocks(sizes: &[usize], top: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &size in sizes {
        let mut block = vec![vec![]];
        for _ in 0..size {
            block = block
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    let hi = v.last().copied().unwrap_or(top);
                    (0..=hi).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out = out
            .into_iter()
            .flat_map(|v| {
                block.iter().map(move |b| {
                    let mut w = v.clone();
                    w.extend(b);
                    w
                })
            })
            .collect();
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Twists swept for rank `n`: superbasic ones, every inner twist of `GL_n` and
/// `PGL_n`, their flips, and the swap of two equal blocks.
pub fn twists(n: usize) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for m in 1..n {
        if gcd(m, n) == 1 {
            out.push((format!("gl:{n}"), format!("superbasic:{m}/{n}")));
        }
    }
    for kind in ["gl", "pgl"] {
        let group = format!("{kind}:{n}");
        let datum: GroupDatum = group.parse().expect("valid group");
        for k in 0..n as i64 {
            let tau = length_zero_element(k, n);
            for sigma0 in ["id", "flip"] {
                let sigma = format!("tau={tau};sigma0={sigma0}");
                if FrobeniusDescriptor::parse(&datum, &sigma).is_ok() {
                    out.push((group.clone(), sigma));
                }
            }
        }
    }
    if n.is_multiple_of(2) {
        let h = n / 2;
        for sigma0 in ["2,1", "2~,1"] {
            out.push((format!("gl:{h}*{h}"), format!("sigma0={sigma0}")));
        }
    }
    out
}

pub fn instances(sweep: &Sweep) -> Vec<ProblemSpec> {
    let mut out = Vec::new();
    for n in 2..=sweep.max_n {
        for (group, sigma) in twists(n) {
            let datum: GroupDatum = group.parse().expect("valid group");
            let sizes: Vec<usize> = datum.blocks().iter().map(|b| b.size).collect();
            for mu in dominant_blocks(&sizes, sweep.max_entry) {
                out.push(ProblemSpec {
                    group: group.clone(),
                    mu,
                    sigma: sigma.clone(),
                    normalize: false,
                });
            }
        }
    }
    out
}

/// The length-zero element of `datum` with the block sums of `mu`.
fn length_zero_like(datum: &GroupDatum, mu: &[i64]) -> ExtAffineElement {
    let mut trans = Vec::new();
    let mut images = Vec::new();
    for b in 0..datum.num_blocks() {
        let r = datum.range(b);
        let omega = length_zero_element(mu[r.clone()].iter().sum(), r.len());
        trans.extend_from_slice(omega.trans());
        images.extend(omega.perm().images_one_based().iter().map(|i| i + r.start));
    }
    ExtAffineElement::new(
        trans,
        Permutation::from_images(&images).expect("block permutation"),
    )
    .expect("matching ranks")
}

/// Elements of `t^μ W_a` of length at most `max`.
fn short_elements(datum: &GroupDatum, mu: &[i64], max: usize) -> Vec<ExtAffineElement> {
    let gens: Vec<ExtAffineElement> = datum
        .letters()
        .into_iter()
        .map(|s| datum.reflection(s))
        .collect();
    let start = length_zero_like(datum, mu);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0)]);
    let mut out = Vec::new();
    while let Some((w, l)) = queue.pop_front() {
        out.push(w.clone());
        if l == max {
            continue;
        }
        for s in &gens {
            let next = &w * s;
            if datum.length(&next) == l + 1 && seen.insert(next.clone()) {
                queue.push_back((next, l + 1));
            }
        }
    }
    out
}

fn run_checks(
    problem: &Problem,
    sweep: &Sweep,
    guard: &Guard,
) -> Result<Vec<&'static str>, (&'static str, String)> {
    let mut done = Vec::new();
    let datum = problem.datum();
    match solve(problem, Strategy::Auto, guard) {
        Ok(_) => done.push("solve"),
        Err(Error::Unsupported(_)) => done.push("unsupported"),
        Err(e) => return Err(("solve", e.to_string())),
    }
    let max = maximal_newton(problem).map_err(|e| ("maximum", e.to_string()))?;

    match adm_newton_points(problem, guard) {
        Ok(points) => {
            let projected: BTreeSet<Vec<Q>> = points.iter().map(|v| problem.point(v).nu).collect();
            let maxima: Vec<&Vec<Q>> = points
                .iter()
                .filter(|a| points.iter().all(|b| dominance_leq_vec(datum, b, a)))
                .collect();
            if maxima.len() != 1 || problem.point(maxima[0]).nu != max.nu {
                return Err((
                    "adm-maximum",
                    format!(
                        "{} maxima among {} admissible points, expected {max}",
                        maxima.len(),
                        projected.len()
                    ),
                ));
            }
            done.push("adm-maximum");
        }
        Err(Error::GuardExceeded(_)) => {}
        Err(e) => return Err(("adm-maximum", e.to_string())),
    }

    let diamond = problem.point(&problem.mu_diamond());
    let acceptable = mu_diamond_acceptable(problem);
    if acceptable != (max.nu == diamond.nu) {
        return Err((
            "mu-diamond",
            format!("μ^◇ acceptable = {acceptable}, maximum {max}, μ^◇ = {diamond}"),
        ));
    }
    done.push("mu-diamond");

    if sweep.max_length > 0 && problem.datum().rank() <= 4 {
        let set = match enumerate_acceptable(problem, guard) {
            Ok(s) => s,
            Err(Error::GuardExceeded(_)) => return Ok(done),
            Err(e) => return Err(("criterion", e.to_string())),
        };
        let mu_d = problem.mu_diamond();
        let mut brute = BTreeSet::new();
        for w in short_elements(datum, &problem.mu, sweep.max_length) {
            let v = problem
                .normalized_newton(&w)
                .map_err(|e| ("criterion", e.to_string()))?;
            if dominance_leq_vec(datum, &v, &mu_d) {
                brute.insert(problem.point(&v).nu);
            }
        }
        let accepted: BTreeSet<Vec<Q>> = set.points.iter().map(|p| p.nu.clone()).collect();
        if accepted != brute {
            let only_a: Vec<String> = accepted
                .difference(&brute)
                .map(|v| format!("{v:?}"))
                .collect();
            let only_b: Vec<String> = brute
                .difference(&accepted)
                .map(|v| format!("{v:?}"))
                .collect();
            return Err((
                "criterion",
                format!(
                    "accepted only: [{}]; realised only (ℓ ≤ {}): [{}]",
                    only_a.join(" "),
                    sweep.max_length,
                    only_b.join(" ")
                ),
            ));
        }
        done.push("criterion");
    }
    Ok(done)
}

pub fn check(
    spec: &ProblemSpec,
    sweep: &Sweep,
    guard: &Guard,
) -> Result<Vec<&'static str>, Failure> {
    let fail = |check: &'static str, detail: String| Failure {
        spec: spec.clone(),
        check,
        detail,
    };
    let problem = spec.problem().map_err(|e| fail("parse", e.to_string()))?;
    run_checks(&problem, sweep, guard).map_err(|(c, d)| fail(c, d))
}

pub fn run(sweep: &Sweep, guard: &Guard) -> Report {
    let specs = instances(sweep);
    let results: Vec<Result<Vec<&'static str>, Failure>> =
        specs.par_iter().map(|s| check(s, sweep, guard)).collect();
    let mut report = Report {
        instances: specs.len(),
        ..Report::default()
    };
    for r in results {
        match r {
            Ok(done) => {
                for c in done {
                    *report.counts.entry(c).or_default() += 1;
                }
            }
            Err(f) => report.failures.push(f),
        }
    }
    report
}
