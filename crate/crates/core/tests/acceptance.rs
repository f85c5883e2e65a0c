mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bgmu_core::acceptable::adm_member;
use bgmu_core::num::{frac, q, to_q};
use bgmu_core::reduction::{lift_witness, solve_node, ReductionTrace};
use bgmu_core::superbasic::{euclid_chain, euclid_step, templates};
use bgmu_core::weyl::length_zero_element;
use bgmu_core::{
    adm_enumerate, chi, enumerate_acceptable, epsilon, maximal_newton, mu_diamond_acceptable,
    newton_criterion, parabolic_reduce, solve, superbasic_element, superbasic_witness,
    DiagramAutomorphism, ExtAffineElement, FrobeniusDescriptor, GroupDatum, Guard, Permutation,
    Problem, Strategy, Q,
};
use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn chi_oracle(m: u64, n: u64) -> Vec<i64> {
    (1..=n)
        .map(|i| ((i * m / n) - ((i - 1) * m / n)) as i64)
        .collect()
}

fn superbasic_problem(mu: &[i64], m: u64, n: u64) -> Problem {
    Problem::new(
        mu.to_vec(),
        FrobeniusDescriptor::superbasic(m, n).unwrap().normalized(),
    )
    .unwrap()
}

fn gl8_example() -> Outcome {
    let (m, n) = (5, 8);
    let mu = [1, 1, 1, 0, 0, 0, 0, 0];
    ensure!(
        chi(m, n).unwrap() == vec![0, 1, 0, 1, 1, 0, 1, 1],
        "χ_{{5,8}}"
    );
    ensure!(chi_oracle(m, n) == vec![0, 1, 0, 1, 1, 0, 1, 1], "χ oracle");
    let eps = epsilon(&chi(m, n).unwrap()).unwrap();
    ensure!(
        eps == Permutation::cycle(8, &[1, 6, 7, 4, 5, 2, 3, 8]).unwrap(),
        "ε_{{5,8}} = {eps}"
    );
    let sigma = superbasic_element(m, n).unwrap();
    ensure!(
        *sigma.perm() == Permutation::cycle(8, &[6, 3, 8, 5, 2, 7, 4, 1]).unwrap(),
        "u_{{5,8}} = {}",
        sigma.perm()
    );

    let sw = superbasic_witness(&mu, m, n).map_err(|e| e.to_string())?;
    ensure!(
        sw.cert.theta == vec![1, 2, 1, 1, 1, 0, 1, 1],
        "μ_{{5,8}} = {:?}",
        sw.cert.theta
    );

    let steps = [[8, 3], [1, 3], [1, 2]]
        .map(|c| ExtAffineElement::from_perm(Permutation::cycle(8, &c).unwrap()));
    let got: Vec<ExtAffineElement> = sw
        .cert
        .steps()
        .into_iter()
        .map(ExtAffineElement::from_perm)
        .collect();
    ensure!(got == steps, "chain steps {got:?}");
    let top = &ExtAffineElement::translation(&eps.act(&mu)) * &sigma;
    let datum = GroupDatum::gl(8);
    let mut cur = top.clone();
    for s in &steps {
        let next = &cur * s;
        ensure!(
            length(&next) < length(&cur),
            "{s} does not lower the length of {cur}"
        );
        ensure!(datum.bruhat_lt(&next, &cur), "{next} is not below {cur}");
        cur = next;
    }
    let w = &cur * &sigma.inverse();
    ensure!(
        w == sw.w_tilde,
        "w̃ = {} but the chain gives {w}",
        sw.w_tilde
    );
    ensure!(adm_member(&datum, &w, &mu).is_some(), "w̃ is not admissible");
    let bound = ExtAffineElement::translation(&eps.act(&mu));
    ensure!(
        sw.x == eps && datum.bruhat_lt(&w, &bound),
        "w̃ is not below t^{{ε(μ)}}"
    );
    let (omega, word) = reduced_word(&bound);
    ensure!(
        subword_products(&omega, &word).contains(&w),
        "w̃ is not a subword of t^{{ε(μ)}}"
    );

    let nu = newton(&w, &sigma);
    let expect = vec![
        frac(3, 2),
        frac(3, 2),
        q(1),
        q(1),
        q(1),
        frac(2, 3),
        frac(2, 3),
        frac(2, 3),
    ];
    ensure!(nu == expect, "ν̄ = {nu:?}");
    ensure!(nu.iter().sum::<Q>() == q(8), "Σν̄ ≠ 8");
    ensure!(nu.windows(2).all(|p| p[0] >= p[1]), "ν̄ not dominant");
    let mut theta_dom = to_q(&sw.cert.theta);
    theta_dom.sort_by(|a, b| b.cmp(a));
    ensure!(dominated(&nu, &theta_dom), "ν̄ is not below μ_{{5,8}}");
    let max = maximal_newton(&superbasic_problem(&mu, m, n)).map_err(|e| e.to_string())?;
    ensure!(max.nu == shifted(&nu, frac(5, 8)), "maximal point {max}");
    Ok("χ, ε, u, μ_{5,8}, chain, Adm, ν̄ = (3/2,3/2,1,1,1,2/3,2/3,2/3)".into())
}

fn oracle_sweep() -> Outcome {
    let mut count = 0;
    let mut adm_total = 0;
    for (m, n) in coprime_pairs(2..=5) {
        let tau = superbasic_element(m, n).unwrap();
        for mu in dominant(n as usize, 2) {
            let p = superbasic_problem(&mu, m, n);
            let s = solve(&p, Strategy::Constructive, &Guard::unlimited())
                .map_err(|e| format!("μ = {mu:?}, {m}/{n}: {e}"))?;
            let adm =
                adm_enumerate(p.datum(), &mu, &Guard::unlimited()).map_err(|e| e.to_string())?;
            adm_total += adm.len();
            let pts: BTreeSet<Vec<Q>> = adm
                .iter()
                .map(|w| shifted(&newton(w, &tau), frac(m as i64, n as i64)))
                .collect();
            let maxima: Vec<&Vec<Q>> = pts
                .iter()
                .filter(|a| pts.iter().all(|b| dominated(b, a)))
                .collect();
            ensure!(
                maxima.len() == 1,
                "μ = {mu:?}, {m}/{n}: {} maxima",
                maxima.len()
            );
            ensure!(
                *maxima[0] == s.nu.nu,
                "μ = {mu:?}, {m}/{n}: constructive {} vs exhaustive {:?}",
                s.nu,
                maxima[0]
            );
            ensure!(
                adm_member(p.datum(), &s.w, &mu).is_some(),
                "μ = {mu:?}, {m}/{n}: witness not admissible"
            );
            count += 1;
        }
    }
    Ok(format!("{count} problems, {adm_total} admissible elements"))
}

/// Dominant raw Newton-point candidates: decreasing runs, a run of length `l`
/// taking values in `(1/l)ℤ`, entries in `[lo, hi]`, total `sum`.
fn candidates(n: usize, lo: Q, hi: Q, sum: Q) -> Vec<Vec<Q>> {
    fn go(n: usize, lo: Q, hi: Q, sum: Q, prefix: &mut Vec<Q>, out: &mut Vec<Vec<Q>>) {
        let left = n - prefix.len();
        if left == 0 {
            if prefix.iter().sum::<Q>() == sum {
                out.push(prefix.clone());
            }
            return;
        }
        let cap = prefix.last().copied().map_or(hi, |x| x.min(hi));
        for l in 1..=left {
            let d = l as i64;
            let mut p = (lo * q(d)).ceil().to_integer();
            while frac(p, d) <= cap {
                let v = frac(p, d);
                let keep = prefix.len();
                prefix.extend(std::iter::repeat_n(v, l));
                go(n, lo, hi, sum, prefix, out);
                prefix.truncate(keep);
                p += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, sum, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

fn criterion_equivalence() -> Outcome {
    let mut count = 0;
    for n in 2..=4usize {
        for k in 0..n as i64 {
            let tau = length_zero_element(k, n);
            let frob = FrobeniusDescriptor::inner(GroupDatum::gl(n), tau.clone())
                .unwrap()
                .normalized();
            let shift = frac(k, n as i64);
            for mu in dominant(n, 2) {
                let p = Problem::new(mu.clone(), frob.clone()).unwrap();
                let mu_q = to_q(&mu);
                let total: i64 = mu.iter().sum();
                let mut brute = BTreeSet::new();
                for w in ball(&length_zero_element(total, n), 12).into_keys() {
                    let v = shifted(&newton(&w, &tau), shift);
                    if dominated(&v, &mu_q) {
                        brute.insert(v);
                    }
                }
                let lo = q(mu[n - 1]) + shift;
                let hi = q(mu[0]) + shift;
                let grid: Vec<Vec<Q>> = candidates(n, lo, hi, q(total + k))
                    .into_iter()
                    .map(|v| shifted(&v, shift))
                    .filter(|v| dominated(v, &mu_q))
                    .collect();
                let grid_set: BTreeSet<Vec<Q>> = grid.iter().cloned().collect();
                ensure!(
                    brute.is_subset(&grid_set),
                    "μ = {mu:?}, κ = {k}: a brute point is off the grid"
                );
                let mut accepted = BTreeSet::new();
                for v in grid {
                    if newton_criterion(&v, &p).map_err(|e| e.to_string())? {
                        accepted.insert(v);
                    }
                }
                ensure!(
                    accepted == brute,
                    "μ = {mu:?}, κ = {k}: criterion {accepted:?} vs brute force {brute:?}"
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} problems"))
}

fn twists(n: usize) -> Vec<FrobeniusDescriptor> {
    let mut out = Vec::new();
    for datum in [GroupDatum::gl(n), GroupDatum::pgl(n)] {
        for k in 0..n as i64 {
            let tau = length_zero_element(k, n);
            out.push(
                FrobeniusDescriptor::inner(datum.clone(), tau.clone())
                    .unwrap()
                    .normalized(),
            );
            let flip = DiagramAutomorphism::flip(&datum);
            if let Ok(f) = FrobeniusDescriptor::new(datum.clone(), tau, flip, vec![q(0); n]) {
                out.push(f.normalized());
            }
        }
    }
    out
}

fn mu_diamond() -> Outcome {
    let (mut count, mut yes) = (0, 0);
    for n in 2..=5usize {
        for frob in twists(n) {
            for mu in dominant(n, 2) {
                let p = Problem::new(mu.clone(), frob.clone()).unwrap();
                let max = maximal_newton(&p).map_err(|e| e.to_string())?;
                let diamond = p.point(&p.mu_diamond());
                let a = mu_diamond_acceptable(&p);
                ensure!(
                    a == (max.nu == diamond.nu),
                    "μ = {mu:?}, σ = {frob}: acceptable = {a}, max = {max}"
                );
                count += 1;
                yes += usize::from(a);
            }
        }
    }
    Ok(format!("{count} problems, μ^◇ acceptable in {yes}"))
}

fn combinatorics() -> Outcome {
    let mut pairs = 0;
    for (m, n) in coprime_pairs(2..=60) {
        let c = chi(m, n).map_err(|e| e.to_string())?;
        ensure!(c == chi_oracle(m, n), "χ_{{{m},{n}}}");
        let e = epsilon(&c).map_err(|e| e.to_string())?;
        let varpi: Vec<i64> = (0..n).map(|i| i64::from(i < m)).collect();
        ensure!(e.act(&c) == varpi, "ε_{{{m},{n}}}(χ) ≠ ϖ");
        ensure!(e.apply(n as usize) == 1, "ε_{{{m},{n}}}(n) ≠ 1");
        pairs += 1;
    }
    let mut levels = 0;
    for (m, n) in coprime_pairs(2..=40) {
        let chain = euclid_chain(m, n).map_err(|e| e.to_string())?;
        ensure!(chain.pairs[0] == (m, n), "chain start");
        let whole = chi_oracle(m, n);
        for h in 0..=chain.top() {
            let (a, b) = chain.pairs[h];
            if h > 0 {
                let (pa, pb) = chain.pairs[h - 1];
                let f = if pb >= 2 * pa {
                    (pa * (pb / pa + 1) - pb, pa)
                } else {
                    (pb - (pb - pa) * (pb / (pb - pa)), pb - pa)
                };
                ensure!((a, b) == f && euclid_step(pa, pb) == f, "f({pa},{pb})");
            }
            let level_chi = if a == 0 {
                vec![0; b as usize]
            } else {
                chi_oracle(a, b)
            };
            ensure!(chain.chis[h] == level_chi, "χ at level {h} of ({m},{n})");
            ensure!(
                chain.reconstruct(h).values == whole,
                "φ reconstruction at level {h} of ({m},{n})"
            );
            let mut cover = Vec::new();
            for (k, &(from, to)) in chain.blocks[h].iter().enumerate() {
                ensure!(
                    from == cover.len() + 1,
                    "blocks of level {h} of ({m},{n}) not contiguous"
                );
                cover.extend_from_slice(&whole[from - 1..to]);
                if h > 0 {
                    let below = chain.blocks[h - 1]
                        .iter()
                        .filter(|&&(x, y)| from <= x && y <= to)
                        .count();
                    let (pa, pb) = chain.pairs[h - 1];
                    let (one, zero) = templates(pa, pb);
                    let t = if chain.chis[h][k] == 1 { one } else { zero };
                    ensure!(below == t.len(), "block {k} at level {h} of ({m},{n})");
                }
            }
            ensure!(
                cover == whole,
                "blocks of level {h} of ({m},{n}) do not cover χ"
            );
            levels += 1;
        }
        let end = chain.pairs[chain.top()];
        ensure!(
            end == (1, 1) || end == (0, 1),
            "chain of ({m},{n}) ends at {end:?}"
        );
    }
    Ok(format!(
        "{pairs} pairs up to n = 60, {levels} levels up to n = 40"
    ))
}

fn bruhat_oracle() -> Outcome {
    let mut pairs = 0;
    for n in [2usize, 3] {
        let datum = GroupDatum::gl(n);
        let mut elements = Vec::new();
        for k in 0..2 {
            elements.extend(ball(&length_zero_element(k, n), 8));
        }
        for (w, word) in &elements {
            ensure!(datum.length(w) == word.len(), "ℓ({w})");
            let start = word_start(w, word);
            let below = subword_products(&start, word);
            for (u, _) in &elements {
                let leq = datum.bruhat_leq(u, w);
                ensure!(leq == below.contains(u), "{u} ≤ {w}: recursion says {leq}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// The length-zero part `ω` of `w = ω · s_{word}`.
fn word_start(w: &ExtAffineElement, word: &[usize]) -> ExtAffineElement {
    let gens = simple_reflections(w.rank());
    word.iter().rev().fold(w.clone(), |acc, &k| &acc * &gens[k])
}

fn reduction_correctness() -> Outcome {
    let n = 4;
    let datum = GroupDatum::pgl(n);
    let mut twists = Vec::new();
    for k in [0, 2] {
        let tau = length_zero_element(k, n);
        twists.push(FrobeniusDescriptor::inner(datum.clone(), tau.clone()).unwrap());
        let flip = DiagramAutomorphism::flip(&datum);
        if let Ok(f) = FrobeniusDescriptor::new(datum.clone(), tau, flip, vec![q(0); n]) {
            twists.push(f);
        }
    }
    let mut count = 0;
    let mut reduced = 0;
    for frob in &twists {
        for mu in dominant(n, 2) {
            let p = Problem::new(mu.clone(), frob.clone().normalized()).unwrap();
            let ctx = |e: bgmu_core::Error| format!("μ = {mu:?}, σ = {frob}: {e}");
            let (levi, step) = parabolic_reduce(&p).map_err(ctx)?;
            let sub = solve_node(&levi).map_err(ctx)?;
            let mut trace = ReductionTrace::new(p.clone());
            trace.push(step);
            let lifted = lift_witness(&trace, &sub.witness).map_err(ctx)?;
            ensure!(
                adm_member(p.datum(), &lifted.w, &mu).is_some(),
                "μ = {mu:?}, σ = {frob}: not admissible"
            );
            let got = p.point(&p.normalized_newton(&lifted.w).map_err(ctx)?);
            let set = enumerate_acceptable(&p, &Guard::default()).map_err(ctx)?;
            ensure!(
                got.nu == set.maximum().nu,
                "μ = {mu:?}, σ = {frob}: lifted {got} vs enumerated {}",
                set.maximum()
            );
            count += 1;
            reduced += usize::from(levi.datum().num_blocks() > 1);
        }
    }
    Ok(format!(
        "{count} problems over {} twists, {reduced} with a proper Levi",
        twists.len()
    ))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked GL_8 example", Duration::from_secs(1), gl8_example),
        (
            "oracle equivalence sweep",
            Duration::from_secs(600),
            oracle_sweep,
        ),
        (
            "Newton criterion equivalence",
            Duration::from_secs(300),
            criterion_equivalence,
        ),
        ("μ^◇ acceptability", Duration::from_secs(300), mu_diamond),
        (
            "combinatorial identities",
            Duration::from_secs(60),
            combinatorics,
        ),
        ("Bruhat oracle", Duration::from_secs(120), bruhat_oracle),
        (
            "reduction correctness",
            Duration::from_secs(300),
            reduction_correctness,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:.2?}, budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {} {name}: pass ({elapsed:.2?}; {detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({elapsed:.2?}; {why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
